//! `k`-derivations of a polynomial ring, determined by their values on the
//! variables.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::poly::{Polynomial, Ring};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Derivation {
    ring: Ring,
    images: Vec<Polynomial>,
}

/// Outcome of a bounded local-nilpotency check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Nilpotency {
    /// Every variable is sent to zero by `D^index`, and `index` is minimal.
    Nilpotent { index: u32 },
    /// Some variable survived `bound` applications. Not a proof of anything.
    Unverified { bound: u32 },
}

impl Nilpotency {
    pub fn is_nilpotent(self) -> bool {
        matches!(self, Nilpotency::Nilpotent { .. })
    }
}

impl Derivation {
    pub fn new(ring: &Ring, images: Vec<Polynomial>) -> Result<Self> {
        if images.len() != ring.arity() {
            return Err(Error::Presentation(format!(
                "{} images for a ring of {} variables",
                images.len(),
                ring.arity()
            )));
        }
        for p in &images {
            if p.ring() != ring {
                return Err(Error::RingMismatch {
                    left: ring.names().join(","),
                    right: p.ring().names().join(","),
                });
            }
        }
        Ok(Derivation {
            ring: ring.clone(),
            images,
        })
    }

    pub fn zero(ring: &Ring) -> Self {
        Derivation {
            ring: ring.clone(),
            images: vec![Polynomial::zero(ring); ring.arity()],
        }
    }

    /// The partial derivative `d/dx_i`.
    pub fn partial(ring: &Ring, i: usize) -> Self {
        let mut d = Derivation::zero(ring);
        d.images[i] = Polynomial::one(ring);
        d
    }

    /// `sum_i x_i d/dx_i`.
    pub fn euler(ring: &Ring) -> Self {
        Derivation {
            ring: ring.clone(),
            images: (0..ring.arity()).map(|i| Polynomial::var(ring, i)).collect(),
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn images(&self) -> &[Polynomial] {
        &self.images
    }

    pub fn image(&self, i: usize) -> &Polynomial {
        &self.images[i]
    }

    pub fn set_image(&mut self, i: usize, p: Polynomial) -> Result<()> {
        if p.ring() != &self.ring {
            return Err(Error::RingMismatch {
                left: self.ring.names().join(","),
                right: p.ring().names().join(","),
            });
        }
        self.images[i] = p;
        Ok(())
    }

    pub fn is_zero(&self) -> bool {
        self.images.iter().all(Polynomial::is_zero)
    }

    /// Leibniz extension: `D(p) = sum_i (dp/dx_i) D(x_i)`.
    pub fn apply(&self, p: &Polynomial) -> Result<Polynomial> {
        if p.ring() != &self.ring {
            return Err(Error::RingMismatch {
                left: self.ring.names().join(","),
                right: p.ring().names().join(","),
            });
        }
        let mut out = Polynomial::zero(&self.ring);
        for (i, img) in self.images.iter().enumerate() {
            if img.is_zero() {
                continue;
            }
            let dp = p.partial(i);
            if !dp.is_zero() {
                out = &out + &(&dp * img);
            }
        }
        Ok(out)
    }

    /// `D^k(p)`.
    pub fn apply_n(&self, p: &Polynomial, k: u32) -> Result<Polynomial> {
        let mut q = p.clone();
        for _ in 0..k {
            if q.is_zero() {
                break;
            }
            q = self.apply(&q)?;
        }
        Ok(q)
    }

    /// `[self, other] = self o other - other o self`, evaluated on variables.
    pub fn commutator(&self, other: &Derivation) -> Result<Derivation> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch {
                left: self.ring.names().join(","),
                right: other.ring.names().join(","),
            });
        }
        let images = (0..self.ring.arity())
            .map(|i| {
                let a = self.apply(&other.images[i])?;
                let b = other.apply(&self.images[i])?;
                Ok(&a - &b)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Derivation {
            ring: self.ring.clone(),
            images,
        })
    }

    pub fn checked_add(&self, other: &Derivation) -> Result<Derivation> {
        let images = self
            .images
            .iter()
            .zip(&other.images)
            .map(|(a, b)| a.checked_add(b))
            .collect::<Result<Vec<_>>>()?;
        Derivation::new(&self.ring, images)
    }

    pub fn scale(&self, c: &BigRational) -> Derivation {
        Derivation {
            ring: self.ring.clone(),
            images: self.images.iter().map(|p| p.scale(c)).collect(),
        }
    }

    /// Iterate on each variable at most `bound` times. A derivation that
    /// kills every generator after finitely many steps is locally nilpotent.
    pub fn nilpotency(&self, bound: u32) -> Nilpotency {
        let mut index = 0;
        for i in 0..self.ring.arity() {
            let mut p = Polynomial::var(&self.ring, i);
            let mut k = 0;
            while !p.is_zero() {
                if k == bound {
                    return Nilpotency::Unverified { bound };
                }
                p = self.apply(&p).expect("same ring");
                k += 1;
            }
            index = index.max(k);
        }
        Nilpotency::Nilpotent { index }
    }

    pub fn is_locally_nilpotent(&self, bound: u32) -> bool {
        self.nilpotency(bound).is_nilpotent()
    }

    /// Images of the variables under `exp(t D)` truncated after `t^order`,
    /// as polynomials in `ring` extended by the parameter variable `t`.
    pub fn exp_flow(&self, extended: &Ring, t: usize, order: u32) -> Result<Vec<Polynomial>> {
        let tv = Polynomial::var(extended, t);
        (0..self.ring.arity())
            .map(|i| {
                let mut term = Polynomial::var(&self.ring, i);
                let mut acc = Polynomial::zero(extended);
                let mut fact = BigInt::one();
                for k in 0..=order {
                    if k > 0 {
                        term = self.apply(&term)?;
                        fact *= k;
                    }
                    if term.is_zero() {
                        break;
                    }
                    let coeff = BigRational::new(BigInt::one(), fact.clone());
                    let lifted = term.embed(extended)?.scale(&coeff);
                    acc = &acc + &(&lifted * &tv.pow(k));
                }
                Ok(acc)
            })
            .collect()
    }
}
