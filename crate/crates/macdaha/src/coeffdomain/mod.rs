//! Exact scalar domains carrying q and t.
//!
//! Every domain is a field with an involutive automorphism `conj`
//! (q -> 1/q, t -> 1/t, rationals fixed).  `q0` is the root
//! q^{1/(2 mhat)} and `s_nu` is t_nu^{1/2}.

mod cyclo;
mod mpoly;
mod ratfunc;
mod spec;

pub use cyclo::Cyclo;
pub use mpoly::MPoly;
pub use ratfunc::RatFunc;
pub use spec::SpecPair;

use num_bigint::BigInt;
use num_rational::BigRational;
use std::fmt;

use crate::error::{Error, Result};

pub trait Scalar:
    Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static
{
    fn zero() -> Self;
    fn one() -> Self;
    fn from_rational(r: &BigRational) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    /// `None` for zero, and for a pair specialization that is zero on one side only.
    fn inv(&self) -> Option<Self>;
    fn conj(&self) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_rational(&BigRational::from_integer(BigInt::from(n)))
    }
    fn is_one(&self) -> bool {
        *self == Self::one()
    }
    fn add_assign(&mut self, o: &Self) {
        *self = self.add(o);
    }
    fn div(&self, o: &Self) -> Option<Self> {
        o.inv().map(|i| self.mul(&i))
    }
    fn pow(&self, e: i64) -> Option<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut n = e.unsigned_abs();
        let mut acc = Self::one();
        let mut sq = base;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&sq);
            }
            n >>= 1;
            if n > 0 {
                sq = sq.mul(&sq);
            }
        }
        Some(acc)
    }
    /// JSON-safe canonical rendering.
    fn canonical(&self) -> String {
        self.to_string()
    }
}

/// Which concrete domain a run uses.
#[derive(Clone, Debug, PartialEq)]
pub enum DomainSpec {
    /// q0 and s_nu specialized to rationals.
    Rational { q0: BigRational, s: Vec<BigRational> },
    /// q0 and s_nu formal.
    Symbolic,
    /// q0 a primitive M-th root of unity; t_nu = q_nu^{k_nu}.
    Cyclotomic { conductor: u32 },
}

/// The generators of a domain: q0 and one s per length class.
#[derive(Clone, Debug)]
pub struct Params<S> {
    pub q0: S,
    pub s: Vec<S>,
    /// q = q0^(2 mhat)
    pub mhat: i64,
}

impl<S: Scalar> Params<S> {
    pub fn new(q0: S, s: Vec<S>, mhat: i64) -> Self {
        Params { q0, s, mhat }
    }

    /// q0^e.
    pub fn q0_pow(&self, e: i64) -> S {
        self.q0.pow(e).expect("q0 is a unit")
    }

    /// q^r with r = num/den; den must divide 2 mhat.
    pub fn q_power(&self, num: i64, den: i64) -> Result<S> {
        let units = 2 * self.mhat;
        if den == 0 || (units * num) % den != 0 {
            return Err(Error::Exponent(format!("q^({num}/{den}) with 2mhat = {units}")));
        }
        Ok(self.q0_pow(units * num / den))
    }

    /// s_nu^e, i.e. t_nu^(e/2).
    pub fn s_pow(&self, class: usize, e: i64) -> S {
        self.s[class].pow(e).expect("s is a unit")
    }

    /// t_nu^r with r a half-integer num/2 or integer.
    pub fn t_power(&self, class: usize, num: i64, den: i64) -> Result<S> {
        if den == 0 || (2 * num) % den != 0 {
            return Err(Error::Exponent(format!("t^({num}/{den})")));
        }
        Ok(self.s_pow(class, 2 * num / den))
    }

    /// Parameters with t_nu replaced by t_nu * q^(2 d_nu / nu3*3) for the
    /// listed classes; `nu3[c]` is 3*(alpha,alpha) of class c.
    pub fn shifted(&self, nu3: &[i64], shift: &[i64]) -> Self {
        let s = self
            .s
            .iter()
            .enumerate()
            .map(|(c, sc)| {
                // s' = s * q^(d/nu) = s * q0^(2 mhat * 3 d / nu3)
                let e = 2 * self.mhat * 3 * shift[c];
                assert!(e % nu3[c] == 0);
                sc.mul(&self.q0_pow(e / nu3[c]))
            })
            .collect();
        Params { q0: self.q0.clone(), s, mhat: self.mhat }
    }
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Positive square root of a rational, if it is a perfect square.
pub fn rational_sqrt(x: &BigRational) -> Option<BigRational> {
    use num_traits::Signed;
    if x.is_negative() {
        return None;
    }
    let (rn, rd) = (x.numer().sqrt(), x.denom().sqrt());
    (&rn * &rn == *x.numer() && &rd * &rd == *x.denom()).then(|| BigRational::new(rn, rd))
}

/// Parse "a" or "a/b".
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Config(format!("not a rational number: {s}"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim().parse::<BigInt>().map_err(|_| bad())?, d.trim().parse::<BigInt>().map_err(|_| bad())?),
        None => (s.parse::<BigInt>().map_err(|_| bad())?, BigInt::from(1)),
    };
    if d == BigInt::from(0) {
        return Err(bad());
    }
    Ok(BigRational::new(n, d))
}

impl Params<SpecPair> {
    /// q0 and s_nu specialized to rationals.
    pub fn rational(rs: &crate::rootdata::RootSystem, q0: BigRational, s: &[BigRational]) -> Result<Self> {
        if s.len() != rs.num_classes() {
            return Err(Error::Config(format!("{} needs {} t-parameters, got {}", rs.label(), rs.num_classes(), s.len())));
        }
        use num_traits::{One, Zero};
        if q0.is_zero() || s.iter().any(|x| x.is_zero()) {
            return Err(Error::Config("q0 and s must be non-zero".into()));
        }
        let q = q0.pow(2 * rs.mhat as i32);
        if q.is_one() || q == -BigRational::one() {
            return Err(Error::Config("q must not be a root of unity".into()));
        }
        Ok(Params::new(SpecPair::generator(q0), s.iter().cloned().map(SpecPair::generator).collect(), rs.mhat))
    }
}

impl Params<SpecPair> {
    /// Rational q0 with t_nu = q_nu^{k_nu}.
    pub fn rational_at_k(rs: &crate::rootdata::RootSystem, q0: BigRational, k: &[i64]) -> Result<Self> {
        if k.len() != rs.num_classes() {
            return Err(Error::Config(format!("{} needs {} k-values", rs.label(), rs.num_classes())));
        }
        let s: Vec<BigRational> = k.iter().enumerate().map(|(c, &kc)| q0.pow((2 * rs.mhat * kc * 3 / rs.class_nu3[c]) as i32)).collect();
        Self::rational(rs, q0, &s)
    }
}

impl Params<RatFunc> {
    /// Formal q0, s1, s2 over the rationals.
    pub fn symbolic(rs: &crate::rootdata::RootSystem) -> Self {
        let s = (0..rs.num_classes()).map(|c| RatFunc::var(c + 1)).collect();
        Params::new(RatFunc::var(0), s, rs.mhat)
    }
}

impl Params<Cyclo> {
    /// q0 = zeta_M with t_nu = q_nu^{k_nu}, i.e. s_nu = q0^{2 mhat k_nu 3 / nu3}.
    pub fn cyclotomic(rs: &crate::rootdata::RootSystem, conductor: u32, k: &[i64]) -> Result<Self> {
        if k.len() != rs.num_classes() {
            return Err(Error::Config(format!("{} needs {} k-values", rs.label(), rs.num_classes())));
        }
        let s = k
            .iter()
            .enumerate()
            .map(|(c, &kc)| {
                let e = 2 * rs.mhat * kc * 3;
                if e % rs.class_nu3[c] != 0 {
                    return Err(Error::Exponent(format!("t^(1/2) for class {c}")));
                }
                Ok(Cyclo::zeta_pow(conductor, e / rs.class_nu3[c]))
            })
            .collect::<Result<_>>()?;
        Ok(Params::new(Cyclo::zeta_pow(conductor, 1), s, rs.mhat))
    }

    /// Same specialization t = q^k but in Q(q0) formally: used as a symbolic oracle.
    pub fn conductor_default(rs: &crate::rootdata::RootSystem, n: i64) -> u32 {
        (2 * rs.mhat * n) as u32
    }
}

impl Params<RatFunc> {
    /// Formal q0 with t_nu = q_nu^{k_nu}.
    pub fn symbolic_at_k(rs: &crate::rootdata::RootSystem, k: &[i64]) -> Self {
        let q0 = RatFunc::var(0);
        let s = k
            .iter()
            .enumerate()
            .map(|(c, &kc)| q0.pow(2 * rs.mhat * kc * 3 / rs.class_nu3[c]).unwrap())
            .collect();
        Params::new(q0, s, rs.mhat)
    }
}
