use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt;

use super::Scalar;

/// A rational specialization kept together with the specialization of
/// its conjugate, so that q -> 1/q, t -> 1/t stays exact.
#[derive(Clone, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub struct SpecPair {
    pub v: BigRational,
    pub w: BigRational,
}

impl SpecPair {
    /// A generator with value `v`; its conjugate is `1/v`.
    pub fn generator(v: BigRational) -> Self {
        let w = v.recip();
        SpecPair { v, w }
    }
}

impl fmt::Display for SpecPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.v == self.w {
            write!(f, "{}", self.v)
        } else {
            write!(f, "{} | {}", self.v, self.w)
        }
    }
}

impl Scalar for SpecPair {
    fn zero() -> Self {
        SpecPair { v: BigRational::zero(), w: BigRational::zero() }
    }
    fn one() -> Self {
        SpecPair { v: BigRational::one(), w: BigRational::one() }
    }
    fn from_rational(r: &BigRational) -> Self {
        SpecPair { v: r.clone(), w: r.clone() }
    }
    fn is_zero(&self) -> bool {
        self.v.is_zero() && self.w.is_zero()
    }
    fn add(&self, o: &Self) -> Self {
        SpecPair { v: &self.v + &o.v, w: &self.w + &o.w }
    }
    fn sub(&self, o: &Self) -> Self {
        SpecPair { v: &self.v - &o.v, w: &self.w - &o.w }
    }
    fn mul(&self, o: &Self) -> Self {
        SpecPair { v: &self.v * &o.v, w: &self.w * &o.w }
    }
    fn neg(&self) -> Self {
        SpecPair { v: -&self.v, w: -&self.w }
    }
    fn inv(&self) -> Option<Self> {
        if self.v.is_zero() || self.w.is_zero() {
            return None;
        }
        Some(SpecPair { v: self.v.recip(), w: self.w.recip() })
    }
    fn conj(&self) -> Self {
        SpecPair { v: self.w.clone(), w: self.v.clone() }
    }
    fn add_assign(&mut self, o: &Self) {
        self.v += &o.v;
        self.w += &o.w;
    }
}
