//! Finite root systems in the simple-root basis.
//!
//! Simple roots follow Bourbaki numbering throughout. Roots are integer
//! coordinate vectors in the basis of simple roots; coroots are never stored,
//! pairings `<lambda, alpha^vee>` are computed from the symmetrized Cartan form.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::E,
        Family::F,
        Family::G,
    ];

    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Family> {
        Some(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }

    /// Ranks admitted for this family, as a human-readable constraint.
    pub fn rank_constraint(self) -> &'static str {
        match self {
            Family::A => "rank >= 1",
            Family::B => "rank >= 2",
            Family::C => "rank >= 2",
            Family::D => "rank >= 3",
            Family::E => "rank in {6, 7, 8}",
            Family::F => "rank = 4",
            Family::G => "rank = 2",
        }
    }

    pub fn admits_rank(self, rank: usize) -> bool {
        match self {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// A simple (irreducible) Cartan type such as `D3` or `E8`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SimpleType {
    family: Family,
    rank: usize,
}

impl SimpleType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        if !family.admits_rank(rank) {
            return Err(Error::InvalidRank {
                family: family.letter(),
                rank,
                constraint: family.rank_constraint(),
            });
        }
        Ok(SimpleType { family, rank })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of positive roots, from the closed-form count for the family.
    pub fn positive_root_count(&self) -> usize {
        let l = self.rank;
        match self.family {
            Family::A => l * (l + 1) / 2,
            Family::B | Family::C => l * l,
            Family::D => l * (l - 1),
            Family::E => match l {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            Family::F => 24,
            Family::G => 6,
        }
    }

    /// Gram matrix `(alpha_i, alpha_j)` of the simple roots, scaled so that
    /// short roots have squared length 2.
    fn gram(&self) -> Vec<Vec<i64>> {
        let l = self.rank;
        let mut g = vec![vec![0i64; l]; l];
        let link = |g: &mut Vec<Vec<i64>>, i: usize, j: usize, v: i64| {
            g[i - 1][j - 1] = v;
            g[j - 1][i - 1] = v;
        };
        match self.family {
            Family::A => {
                for i in 1..=l {
                    g[i - 1][i - 1] = 2;
                }
                for i in 1..l {
                    link(&mut g, i, i + 1, -1);
                }
            }
            Family::B => {
                for i in 1..l {
                    g[i - 1][i - 1] = 4;
                }
                g[l - 1][l - 1] = 2;
                for i in 1..l {
                    link(&mut g, i, i + 1, -2);
                }
            }
            Family::C => {
                for i in 1..l {
                    g[i - 1][i - 1] = 2;
                }
                g[l - 1][l - 1] = 4;
                for i in 1..l - 1 {
                    link(&mut g, i, i + 1, -1);
                }
                link(&mut g, l - 1, l, -2);
            }
            Family::D => {
                for i in 1..=l {
                    g[i - 1][i - 1] = 2;
                }
                for i in 1..l - 1 {
                    link(&mut g, i, i + 1, -1);
                }
                link(&mut g, l - 2, l, -1);
            }
            Family::E => {
                for i in 1..=l {
                    g[i - 1][i - 1] = 2;
                }
                link(&mut g, 1, 3, -1);
                link(&mut g, 2, 4, -1);
                for i in 3..l {
                    link(&mut g, i, i + 1, -1);
                }
            }
            Family::F => {
                g[0][0] = 4;
                g[1][1] = 4;
                g[2][2] = 2;
                g[3][3] = 2;
                link(&mut g, 1, 2, -2);
                link(&mut g, 2, 3, -2);
                link(&mut g, 3, 4, -1);
            }
            Family::G => {
                g[0][0] = 2;
                g[1][1] = 6;
                link(&mut g, 1, 2, -3);
            }
        }
        g
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl FromStr for SimpleType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = chars
            .next()
            .and_then(Family::from_letter)
            .ok_or_else(|| Error::Parse(format!("unknown Cartan type `{s}`")))?;
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::Parse(format!("missing or malformed rank in `{s}`")))?;
        SimpleType::new(family, rank)
    }
}

/// An ordered product of simple types, e.g. `A2xA1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CartanType {
    components: Vec<SimpleType>,
}

impl CartanType {
    pub fn new(components: Vec<SimpleType>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::Parse("empty Cartan type".into()));
        }
        Ok(CartanType { components })
    }

    pub fn components(&self) -> &[SimpleType] {
        &self.components
    }

    pub fn rank(&self) -> usize {
        self.components.iter().map(SimpleType::rank).sum()
    }

    pub fn is_simple(&self) -> bool {
        self.components.len() == 1
    }

    /// Index ranges of the components inside the global node numbering.
    pub fn component_ranges(&self) -> Vec<std::ops::Range<usize>> {
        let mut start = 0;
        self.components
            .iter()
            .map(|c| {
                let r = start..start + c.rank();
                start = r.end;
                r
            })
            .collect()
    }
}

impl From<SimpleType> for CartanType {
    fn from(t: SimpleType) -> Self {
        CartanType { components: vec![t] }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                f.write_str("x")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let components = s
            .split(['x', 'X', '*'])
            .map(str::parse)
            .collect::<Result<Vec<SimpleType>>>()?;
        CartanType::new(components)
    }
}

/// A root in simple-root coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Root(Vec<i64>);

impl Root {
    pub fn new(coords: Vec<i64>) -> Self {
        Root(coords)
    }

    pub fn simple(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i] = 1;
        Root(v)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && self.0.iter().any(|&c| c > 0)
    }

    /// Indices of nonzero coordinates.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().filter(|(_, &c)| c != 0).map(|(i, _)| i)
    }

    pub fn neg(&self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &Root) -> Root {
        Root(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            let mag = c.abs();
            if mag == 1 {
                write!(f, "{sign}a{}", i + 1)?;
            } else {
                write!(f, "{sign}{mag}a{}", i + 1)?;
            }
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// A dominant integral weight given by its numerical labels
/// `m_i = <lambda, alpha_i^vee>`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Weight(Vec<u32>);

impl Weight {
    pub fn new(labels: Vec<u32>) -> Self {
        Weight(labels)
    }

    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    /// The fundamental weight dual to the simple coroot at 0-based `node`.
    pub fn fundamental(rank: usize, node: usize) -> Self {
        let mut v = vec![0; rank];
        v[node] = 1;
        Weight(v)
    }

    /// The half-sum of positive roots, all labels equal to 1.
    pub fn rho(rank: usize) -> Self {
        Weight(vec![1; rank])
    }

    pub fn labels(&self) -> &[u32] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&m| m == 0)
    }

    pub fn is_fundamental(&self) -> bool {
        self.0.iter().filter(|&&m| m == 1).count() == 1 && self.0.iter().all(|&m| m <= 1)
    }

    pub fn scaled(&self, k: u32) -> Weight {
        Weight(self.0.iter().map(|m| m * k).collect())
    }

    pub fn plus(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Cartan data together with the generated positive roots.
#[derive(Debug, Clone)]
pub struct RootSystem {
    cartan_type: CartanType,
    cartan: Vec<Vec<i64>>,
    gram: Vec<Vec<i64>>,
    symmetrizer: Vec<i64>,
    positive_roots: Vec<Root>,
    positive_set: HashSet<Root>,
}

impl RootSystem {
    pub fn new(cartan_type: &CartanType) -> Self {
        let rank = cartan_type.rank();
        let mut gram = vec![vec![0i64; rank]; rank];
        let mut symmetrizer = vec![0i64; rank];
        for (c, range) in cartan_type.components().iter().zip(cartan_type.component_ranges()) {
            let g = c.gram();
            let scale = g.iter().enumerate().fold(0i64, |acc, (i, row)| acc.gcd(&(row[i] / 2)));
            for (a, i) in range.clone().enumerate() {
                symmetrizer[i] = g[a][a] / 2 / scale;
                for (b, j) in range.clone().enumerate() {
                    gram[i][j] = g[a][b];
                }
            }
        }
        let cartan: Vec<Vec<i64>> = (0..rank)
            .map(|i| (0..rank).map(|j| 2 * gram[i][j] / gram[i][i]).collect())
            .collect();
        let positive_roots = generate_positive_roots(&cartan);
        let positive_set = positive_roots.iter().cloned().collect();
        RootSystem {
            cartan_type: cartan_type.clone(),
            cartan,
            gram,
            symmetrizer,
            positive_roots,
            positive_set,
        }
    }

    pub fn simple(t: SimpleType) -> Self {
        RootSystem::new(&t.into())
    }

    pub fn cartan_type(&self) -> &CartanType {
        &self.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    /// `cartan[i][j] = <alpha_j, alpha_i^vee>`.
    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Minimal positive integers `d` with `diag(d) * cartan` symmetric.
    pub fn symmetrizer(&self) -> &[i64] {
        &self.symmetrizer
    }

    /// Positive roots sorted by height, then lexicographically.
    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    /// All roots, positive then negative.
    pub fn roots(&self) -> impl Iterator<Item = Root> + '_ {
        self.positive_roots
            .iter()
            .cloned()
            .chain(self.positive_roots.iter().map(Root::neg))
    }

    pub fn is_root(&self, r: &Root) -> bool {
        r.coords().len() == self.rank() && (self.positive_set.contains(r) || self.positive_set.contains(&r.neg()))
    }

    /// Symmetric bilinear form on the root lattice.
    pub fn form(&self, a: &Root, b: &Root) -> i64 {
        let (a, b) = (a.coords(), b.coords());
        let mut s = 0;
        for (&ai, row) in a.iter().zip(&self.gram) {
            if ai == 0 {
                continue;
            }
            s += ai * b.iter().zip(row).map(|(&bj, &g)| bj * g).sum::<i64>();
        }
        s
    }

    /// `(lambda, alpha)` for a weight given by labels and a root-lattice vector.
    fn weight_form(&self, lambda: &Weight, alpha: &Root) -> i64 {
        // (varpi_j, alpha_k) = delta_jk (alpha_k, alpha_k) / 2
        lambda
            .labels()
            .iter()
            .zip(alpha.coords())
            .enumerate()
            .map(|(j, (&m, &c))| m as i64 * c * self.gram[j][j] / 2)
            .sum()
    }

    fn check_weight(&self, lambda: &Weight) -> Result<()> {
        if lambda.rank() != self.rank() {
            return Err(Error::LabelArity {
                cartan_type: self.cartan_type.to_string(),
                expected: self.rank(),
                got: lambda.rank(),
            });
        }
        Ok(())
    }

    /// `<lambda, alpha^vee> = 2 (lambda, alpha) / (alpha, alpha)`.
    pub fn pairing(&self, lambda: &Weight, alpha: &Root) -> Result<i64> {
        self.check_weight(lambda)?;
        if !self.is_root(alpha) {
            return Err(Error::NotARoot(alpha.to_string()));
        }
        let num = 2 * self.weight_form(lambda, alpha);
        let den = self.form(alpha, alpha);
        debug_assert_eq!(num % den, 0, "non-integral coroot pairing");
        Ok(num / den)
    }

    /// Whether `a + b` is a root. Both arguments must be roots.
    pub fn is_sum_root(&self, a: &Root, b: &Root) -> Result<bool> {
        for r in [a, b] {
            if !self.is_root(r) {
                return Err(Error::NotARoot(r.to_string()));
            }
        }
        Ok(self.is_root(&a.add(b)))
    }

    /// Dimension of the simple module with highest weight `lambda`, by the
    /// Weyl dimension formula.
    pub fn irrep_dimension(&self, lambda: &Weight) -> Result<BigUint> {
        self.check_weight(lambda)?;
        let rho = Weight::rho(self.rank());
        let shifted = lambda.plus(&rho);
        let mut num = BigUint::one();
        let mut den = BigUint::one();
        for alpha in &self.positive_roots {
            let a = self.pairing(&shifted, alpha)?;
            let b = self.pairing(&rho, alpha)?;
            debug_assert!(b >= 1);
            num *= a as u64;
            den *= b as u64;
        }
        let (q, r) = num.div_rem(&den);
        debug_assert!(r.is_zero(), "Weyl dimension formula not integral");
        Ok(q)
    }
}

/// Closure from the simple roots using root strings: `alpha + alpha_i` is a
/// root iff `p - <alpha, alpha_i^vee> > 0`, where `p` is the largest `k`
/// with `alpha - k alpha_i` a root.
fn generate_positive_roots(cartan: &[Vec<i64>]) -> Vec<Root> {
    let rank = cartan.len();
    let mut known: HashSet<Vec<i64>> = HashSet::new();
    let mut layer: Vec<Vec<i64>> = (0..rank).map(|i| Root::simple(rank, i).0).collect();
    let mut all = Vec::new();
    while !layer.is_empty() {
        layer.sort();
        layer.dedup();
        known.extend(layer.iter().cloned());
        let mut next = Vec::new();
        for alpha in &layer {
            for i in 0..rank {
                let mut p = 0;
                let mut probe = alpha.clone();
                loop {
                    probe[i] -= 1;
                    if known.contains(&probe) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let pair: i64 = (0..rank).map(|j| alpha[j] * cartan[i][j]).sum();
                if p - pair > 0 {
                    let mut up = alpha.clone();
                    up[i] += 1;
                    next.push(up);
                }
            }
        }
        all.append(&mut layer);
        layer = next;
    }
    // layers are produced in height order and sorted within each layer
    all.into_iter().map(Root).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::new(&s.parse().unwrap())
    }

    #[test]
    fn rank_constraints() {
        assert!(SimpleType::new(Family::D, 3).is_ok());
        assert!(SimpleType::new(Family::D, 2).is_err());
        assert!(SimpleType::new(Family::B, 1).is_err());
        assert!(SimpleType::new(Family::E, 5).is_err());
        assert!(SimpleType::new(Family::F, 5).is_err());
        assert!(SimpleType::new(Family::A, 0).is_err());
        let err = "G3".parse::<SimpleType>().unwrap_err().to_string();
        assert!(err.contains("rank = 2"), "{err}");
    }

    #[test]
    fn cartan_conventions() {
        let b2 = rs("B2");
        assert_eq!(b2.cartan(), &[vec![2, -1], vec![-2, 2]]);
        assert_eq!(b2.symmetrizer(), &[2, 1]);
        let c3 = rs("C3");
        assert_eq!(c3.cartan()[1][2], -2);
        assert_eq!(c3.cartan()[2][1], -1);
        assert_eq!(c3.symmetrizer(), &[1, 1, 2]);
        let g2 = rs("G2");
        assert_eq!(g2.cartan(), &[vec![2, -3], vec![-1, 2]]);
        assert_eq!(g2.symmetrizer(), &[1, 3]);
        let d3 = rs("D3");
        assert_eq!(d3.cartan()[0], vec![2, -1, -1]);
        assert_eq!(d3.cartan()[1][2], 0);
    }

    #[test]
    fn symmetrizer_symmetrizes() {
        for s in ["A4", "B5", "C4", "D6", "E8", "F4", "G2", "B2xG2"] {
            let r = rs(s);
            let (c, d) = (r.cartan(), r.symmetrizer());
            for i in 0..r.rank() {
                assert_eq!(c[i][i], 2);
                for j in 0..r.rank() {
                    assert_eq!(d[i] * c[i][j], d[j] * c[j][i], "{s}");
                    if i != j {
                        assert!(c[i][j] <= 0);
                    }
                }
            }
        }
    }

    #[test]
    fn small_root_counts() {
        assert_eq!(rs("A1").positive_roots(), &[Root::new(vec![1])]);
        assert_eq!(rs("A2").positive_roots().len(), 3);
        assert_eq!(rs("G2").positive_roots().len(), 6);
        assert_eq!(rs("D3").positive_roots().len(), 6);
        let g2 = rs("G2");
        assert_eq!(g2.positive_roots().last().unwrap().coords(), &[3, 2]);
    }

    #[test]
    fn sorted_by_height() {
        let r = rs("E7");
        let roots = r.positive_roots();
        for w in roots.windows(2) {
            assert!((w[0].height(), &w[0]) < (w[1].height(), &w[1]));
        }
    }

    #[test]
    fn pairing_examples() {
        let a2 = rs("A2");
        let top = Root::new(vec![1, 1]);
        assert_eq!(a2.pairing(&Weight::rho(2), &top).unwrap(), 2);
        assert_eq!(a2.pairing(&Weight::zero(2), &top).unwrap(), 0);
        assert!(a2.pairing(&Weight::rho(2), &Root::new(vec![2, 1])).is_err());
        assert!(a2.pairing(&Weight::rho(3), &top).is_err());
        for s in ["B3", "C3", "G2", "F4"] {
            let r = rs(s);
            for i in 0..r.rank() {
                for j in 0..r.rank() {
                    let p = r
                        .pairing(&Weight::fundamental(r.rank(), i), &Root::simple(r.rank(), j))
                        .unwrap();
                    assert_eq!(p, (i == j) as i64);
                }
            }
        }
        // negative roots pair with the opposite sign
        assert_eq!(a2.pairing(&Weight::rho(2), &top.neg()).unwrap(), -2);
    }

    #[test]
    fn sum_roots() {
        let a2 = rs("A2");
        let (a1, a2r) = (Root::simple(2, 0), Root::simple(2, 1));
        assert!(a2.is_sum_root(&a1, &a2r).unwrap());
        assert!(!a2.is_sum_root(&a1, &a1).unwrap());
        assert!(a2.is_sum_root(&a1, &a1.neg()).is_ok());
        let b2 = rs("B2");
        assert!(b2.is_sum_root(&Root::simple(2, 1), &Root::new(vec![1, 1])).unwrap());
        assert!(b2.is_sum_root(&Root::new(vec![3, 0]), &a1).is_err());
    }

    #[test]
    fn dimensions() {
        for l in 3..=8 {
            let r = RootSystem::simple(SimpleType::new(Family::D, l).unwrap());
            assert_eq!(
                r.irrep_dimension(&Weight::fundamental(l, 0)).unwrap(),
                BigUint::from(2 * l)
            );
        }
        for l in 2..=8 {
            let r = RootSystem::simple(SimpleType::new(Family::B, l).unwrap());
            assert_eq!(
                r.irrep_dimension(&Weight::fundamental(l, 0)).unwrap(),
                BigUint::from(2 * l + 1)
            );
        }
        let a1 = rs("A1");
        for m in 0..10 {
            assert_eq!(a1.irrep_dimension(&Weight::new(vec![m])).unwrap(), BigUint::from(m + 1));
        }
        assert_eq!(rs("E8").irrep_dimension(&Weight::zero(8)).unwrap(), BigUint::one());
        assert_eq!(
            rs("E8").irrep_dimension(&Weight::fundamental(8, 7)).unwrap(),
            BigUint::from(248u32)
        );
        assert_eq!(
            rs("E6").irrep_dimension(&Weight::fundamental(6, 0)).unwrap(),
            BigUint::from(27u32)
        );
        assert_eq!(
            rs("G2").irrep_dimension(&Weight::fundamental(2, 0)).unwrap(),
            BigUint::from(7u32)
        );
    }

    #[test]
    fn parse_product() {
        let t: CartanType = "A2xA1".parse().unwrap();
        assert_eq!(t.rank(), 3);
        assert_eq!(t.to_string(), "A2xA1");
        assert_eq!(t.component_ranges(), vec![0..2, 2..3]);
        assert!("A2xQ1".parse::<CartanType>().is_err());
        assert!("".parse::<CartanType>().is_err());
    }
}
