//! Exact multivariate polynomials over the rationals.
//!
//! A polynomial lives in a [`Ring`], an ordered list of variable names. Terms
//! are kept in a `BTreeMap` keyed by dense exponent vectors, with no zero
//! coefficients stored, so equal polynomials have identical term maps.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Exponents = Vec<u32>;

#[derive(Debug, Clone, Eq)]
pub struct Ring {
    names: Arc<Vec<String>>,
}

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.names, &other.names) || self.names == other.names
    }
}

impl Ring {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Self {
        Ring {
            names: Arc::new(names.into_iter().map(Into::into).collect()),
        }
    }

    pub fn arity(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// This ring with extra variables appended after the existing ones.
    pub fn extended<S: Into<String>>(&self, extra: impl IntoIterator<Item = S>) -> Ring {
        Ring::new(self.names.iter().cloned().chain(extra.into_iter().map(Into::into)))
    }

    fn check(&self, other: &Ring) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::RingMismatch {
                left: self.names.join(","),
                right: other.names.join(","),
            })
        }
    }
}

/// Human rendering of a machine variable name: `xm3` becomes `x_{-3}`,
/// `x12` becomes `x_{12}`, `x1` becomes `x_1`.
pub fn display_name(name: &str) -> String {
    let Some(rest) = name.strip_prefix('x') else {
        return name.to_string();
    };
    let (neg, digits) = match rest.strip_prefix('m') {
        Some(d) => (true, d),
        None => (false, rest),
    };
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return name.to_string();
    }
    match (neg, digits.len()) {
        (false, 1) => format!("x_{digits}"),
        (false, _) => format!("x_{{{digits}}}"),
        (true, _) => format!("x_{{-{digits}}}"),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    ring: Ring,
    terms: BTreeMap<Exponents, BigRational>,
}

/// Graded lexicographic order, first variable largest.
pub fn grlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| a.cmp(b))
}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ring: &Ring, c: BigRational) -> Self {
        let mut p = Polynomial::zero(ring);
        p.add_term(vec![0; ring.arity()], c);
        p
    }

    pub fn one(ring: &Ring) -> Self {
        Polynomial::constant(ring, BigRational::one())
    }

    pub fn var(ring: &Ring, i: usize) -> Self {
        let mut e = vec![0; ring.arity()];
        e[i] = 1;
        Polynomial::monomial(ring, e, BigRational::one())
    }

    pub fn var_named(ring: &Ring, name: &str) -> Result<Self> {
        ring.index_of(name)
            .map(|i| Polynomial::var(ring, i))
            .ok_or_else(|| Error::Presentation(format!("unknown variable `{name}`")))
    }

    pub fn monomial(ring: &Ring, exps: Exponents, c: BigRational) -> Self {
        let mut p = Polynomial::zero(ring);
        p.add_term(exps, c);
        p
    }

    pub fn from_terms(ring: &Ring, terms: impl IntoIterator<Item = (Exponents, BigRational)>) -> Result<Self> {
        let mut p = Polynomial::zero(ring);
        for (e, c) in terms {
            if e.len() != ring.arity() {
                return Err(Error::Presentation(format!(
                    "exponent vector of length {} in a ring of {} variables",
                    e.len(),
                    ring.arity()
                )));
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    fn add_term(&mut self, e: Exponents, c: BigRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &BigRational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn coefficient(&self, e: &[u32]) -> BigRational {
        self.terms.get(e).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.ring.check(&other.ring)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.ring.check(&other.ring)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.ring.check(&other.ring)?;
        let mut out = Polynomial::zero(&self.ring);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigRational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut out = Polynomial::one(&self.ring);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Partial derivative with respect to variable `i`.
    pub fn partial(&self, i: usize) -> Polynomial {
        let mut out = Polynomial::zero(&self.ring);
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut f = e.clone();
            f[i] -= 1;
            out.add_term(f, c * BigRational::from_integer(BigInt::from(e[i])));
        }
        out
    }

    /// Evaluate at a rational point.
    pub fn eval(&self, point: &[BigRational]) -> Result<BigRational> {
        if point.len() != self.ring.arity() {
            return Err(Error::Presentation(format!(
                "point of length {} for a ring of {} variables",
                point.len(),
                self.ring.arity()
            )));
        }
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e) {
                for _ in 0..k {
                    t *= x;
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Substitute `images[i]` for variable `i`; the result lives in the ring
    /// of the images.
    pub fn substitute(&self, images: &[Polynomial]) -> Result<Polynomial> {
        if images.len() != self.ring.arity() {
            return Err(Error::Presentation(format!(
                "{} substitution images for a ring of {} variables",
                images.len(),
                self.ring.arity()
            )));
        }
        let target = match images.first() {
            Some(p) => p.ring.clone(),
            None => return Ok(self.clone()),
        };
        for p in images {
            target.check(&p.ring)?;
        }
        let mut out = Polynomial::zero(&target);
        for (e, c) in &self.terms {
            let mut t = Polynomial::constant(&target, c.clone());
            for (img, &k) in images.iter().zip(e) {
                if k > 0 {
                    t = &t * &img.pow(k);
                }
            }
            out = &out + &t;
        }
        Ok(out)
    }

    /// Embed into `target`, whose leading variables must be this ring's.
    pub fn embed(&self, target: &Ring) -> Result<Polynomial> {
        let n = self.ring.arity();
        if target.arity() < n || target.names()[..n] != self.ring.names()[..] {
            return Err(Error::RingMismatch {
                left: self.ring.names.join(","),
                right: target.names.join(","),
            });
        }
        let pad = target.arity() - n;
        Ok(Polynomial {
            ring: target.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut f = e.clone();
                    f.extend(std::iter::repeat_n(0, pad));
                    (f, c.clone())
                })
                .collect(),
        })
    }

    /// Leading exponent and coefficient under graded lex.
    pub fn leading_term(&self) -> Option<(&Exponents, &BigRational)> {
        self.terms.iter().max_by(|a, b| grlex(a.0, b.0))
    }

    /// Division with remainder by a single divisor under graded lex.
    /// Since `{g}` is a Groebner basis of the principal ideal `(g)`, the
    /// remainder vanishes iff `self` lies in `(g)`.
    pub fn div_rem(&self, g: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        self.ring.check(&g.ring)?;
        let (lg, lc) = match g.leading_term() {
            Some((e, c)) => (e.clone(), c.clone()),
            None => return Err(Error::Presentation("division by the zero polynomial".into())),
        };
        let mut p = self.clone();
        let mut q = Polynomial::zero(&self.ring);
        let mut r = Polynomial::zero(&self.ring);
        while let Some((e, c)) = p.leading_term().map(|(e, c)| (e.clone(), c.clone())) {
            if e.iter().zip(&lg).all(|(a, b)| a >= b) {
                let shift: Exponents = e.iter().zip(&lg).map(|(a, b)| a - b).collect();
                let t = Polynomial::monomial(&self.ring, shift, c / &lc);
                p = &p - &(&t * g);
                q = &q + &t;
            } else {
                let t = Polynomial::monomial(&self.ring, e, c);
                p = &p - &t;
                r = &r + &t;
            }
        }
        Ok((q, r))
    }

    pub fn is_in_principal_ideal(&self, g: &Polynomial) -> Result<bool> {
        Ok(self.div_rem(g)?.1.is_zero())
    }

    /// Symmetric Gram matrix of a homogeneous quadratic form; `None` if the
    /// polynomial is not a quadratic form.
    pub fn gram_matrix(&self) -> Option<Vec<Vec<BigRational>>> {
        let n = self.ring.arity();
        let mut g = vec![vec![BigRational::zero(); n]; n];
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        for (e, c) in &self.terms {
            if e.iter().sum::<u32>() != 2 {
                return None;
            }
            let idx: Vec<usize> = e
                .iter()
                .enumerate()
                .flat_map(|(i, &k)| std::iter::repeat_n(i, k as usize))
                .collect();
            let (i, j) = (idx[0], idx[1]);
            if i == j {
                g[i][i] = c.clone();
            } else {
                g[i][j] = c * &half;
                g[j][i] = c * &half;
            }
        }
        Some(g)
    }

    /// Machine-readable term list: `(exponents, numerator, denominator)` in
    /// canonical order.
    pub fn to_term_list(&self) -> Vec<(Exponents, BigInt, BigInt)> {
        self.terms
            .iter()
            .map(|(e, c)| (e.clone(), c.numer().clone(), c.denom().clone()))
            .collect()
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&Polynomial> for &Polynomial {
            type Output = Polynomial;

            /// Panics if the rings differ; use the `checked_*` form otherwise.
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.$checked(rhs).expect("polynomial ring mismatch")
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        self.scale(&-BigRational::one())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|a, b| grlex(b.0, a.0));
        for (k, (e, c)) in terms.into_iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let is_const = e.iter().all(|&x| x == 0);
            if !mag.is_one() || is_const {
                write!(f, "{mag}")?;
            }
            for (i, &x) in e.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                f.write_str(&display_name(&self.ring.names[i]))?;
                if x > 1 {
                    write!(f, "^{x}")?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn ring(n: usize) -> Ring {
        Ring::new((1..=n).map(|i| format!("x{i}")))
    }

    #[test]
    fn cancellation_is_canonical() {
        let r = ring(2);
        let (x1, x2) = (Polynomial::var(&r, 0), Polynomial::var(&r, 1));
        let s = &(&x1 + &x2) + &(-&x1);
        assert_eq!(s, x2);
        assert_eq!(s.len(), 1);
        assert!((&x1 * &Polynomial::zero(&r)).is_zero());
        assert!(x1.scale(&q(0)).is_zero());
    }

    #[test]
    fn ring_mismatch_is_rejected() {
        let a = Polynomial::var(&ring(2), 0);
        let b = Polynomial::var(&ring(3), 0);
        assert!(matches!(a.checked_add(&b), Err(Error::RingMismatch { .. })));
        assert!(a.checked_mul(&b).is_err());
    }

    #[test]
    fn quadric_built_termwise() {
        let r = Ring::new(["x1", "x2", "xm2", "xm1"]);
        let v = |s| Polynomial::var_named(&r, s).unwrap();
        let f = &(&v("xm1") * &v("x1")) + &(&v("xm2") * &v("x2"));
        assert_eq!(f.to_string(), "x_1x_{-1} + x_2x_{-2}");
        let expect = Polynomial::from_terms(&r, [(vec![1, 0, 0, 1], q(1)), (vec![0, 1, 1, 0], q(1))]).unwrap();
        assert_eq!(f, expect);
    }

    #[test]
    fn division_by_quadric() {
        let r = ring(3);
        let x: Vec<_> = (0..3).map(|i| Polynomial::var(&r, i)).collect();
        let g = &(&x[0] * &x[1]) + &(&x[2] * &x[2]);
        let h = &(&x[0] + &x[2]) * &g;
        let (quo, rem) = h.div_rem(&g).unwrap();
        assert!(rem.is_zero());
        assert_eq!(quo, &x[0] + &x[2]);
        let not = &h + &x[1];
        assert!(!not.is_in_principal_ideal(&g).unwrap());
        let (quo, rem) = not.div_rem(&g).unwrap();
        assert_eq!(&(&quo * &g) + &rem, not);
    }

    #[test]
    fn substitution_and_eval() {
        let r = ring(2);
        let (x, y) = (Polynomial::var(&r, 0), Polynomial::var(&r, 1));
        let p = &(&x * &x) - &y;
        let t = r.extended(["t"]);
        let tv = Polynomial::var(&t, 2);
        let xe = x.embed(&t).unwrap();
        let ye = y.embed(&t).unwrap();
        // x -> x + t, y -> y + 2tx + t^2 preserves x^2 - y
        let img = [&xe + &tv, &(&ye + &(&tv * &xe).scale(&q(2))) + &tv.pow(2)];
        assert_eq!(p.substitute(&img).unwrap(), p.embed(&t).unwrap());
        assert_eq!(p.eval(&[q(3), q(4)]).unwrap(), q(5));
    }

    #[test]
    fn gram_of_quadric() {
        let r = ring(3);
        let x: Vec<_> = (0..3).map(|i| Polynomial::var(&r, i)).collect();
        let f = &(&x[0] * &x[1]) + &x[2].pow(2);
        let g = f.gram_matrix().unwrap();
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(g[0][1], half);
        assert_eq!(g[2][2], q(1));
        assert!((&f + &x[0]).gram_matrix().is_none());
    }

    #[test]
    fn human_names() {
        assert_eq!(display_name("x1"), "x_1");
        assert_eq!(display_name("xm12"), "x_{-12}");
        assert_eq!(display_name("x10"), "x_{10}");
        assert_eq!(display_name("t"), "t");
    }
}
