use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

use super::mpoly::{Exp, MPoly, NV};
use super::Scalar;

/// Element of Q(q0, s1, s2) in the form `c * x^sh * num / den` where
/// `num`, `den` are primitive integer polynomials with positive leading
/// coefficient, no monomial factor, and gcd 1.
#[derive(Clone, Debug, serde::Serialize, serde::Deserialize)]
pub struct RatFunc {
    c: BigRational,
    sh: [i32; NV],
    num: MPoly,
    den: MPoly,
}

impl RatFunc {
    pub fn var(i: usize) -> Self {
        let mut sh = [0; NV];
        sh[i] = 1;
        RatFunc { c: BigRational::one(), sh, num: MPoly::one(), den: MPoly::one() }
    }

    pub fn numerator(&self) -> &MPoly {
        &self.num
    }
    pub fn denominator(&self) -> &MPoly {
        &self.den
    }
    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    fn zero_value() -> Self {
        RatFunc { c: BigRational::zero(), sh: [0; NV], num: MPoly::one(), den: MPoly::one() }
    }

    /// Normalize `c * x^sh * n / d` where n, d are coprime nonzero integer polynomials.
    fn assemble(c: BigRational, mut sh: [i32; NV], n: MPoly, d: MPoly) -> Self {
        if c.is_zero() || n.is_zero() {
            return Self::zero_value();
        }
        let (mn, md) = (n.min_exp(), d.min_exp());
        for i in 0..NV {
            sh[i] += mn[i] as i32 - md[i] as i32;
        }
        let (cn, n) = n.shift_down(&mn).primitive();
        let (cd, d) = d.shift_down(&md).primitive();
        let c = c * BigRational::new(cn, cd);
        RatFunc { c, sh, num: n, den: d }
    }

    /// Evaluate at integer values of the variables (used in tests).
    pub fn eval(&self, x: &[BigRational; NV]) -> Option<BigRational> {
        let mut v = self.c.clone();
        for i in 0..NV {
            if self.sh[i] != 0 {
                if x[i].is_zero() {
                    return None;
                }
                v *= x[i].pow(self.sh[i]);
            }
        }
        let n = eval_q(&self.num, x);
        let d = eval_q(&self.den, x);
        if d.is_zero() {
            return None;
        }
        Some(v * n / d)
    }
}

impl RatFunc {
    /// Image under the ring map sending q0, s1, s2 to the given scalars; None at a pole.
    pub fn eval_in<T: Scalar>(&self, x: &[T]) -> Option<T> {
        let poly = |p: &MPoly| -> T {
            let mut s = T::zero();
            for (e, c) in p.terms() {
                let mut v = T::from_rational(&BigRational::from_integer(c.clone()));
                for i in 0..NV {
                    if e[i] != 0 {
                        v = v.mul(&x[i].pow(e[i] as i64).expect("power"));
                    }
                }
                s.add_assign(&v);
            }
            s
        };
        let mut v = T::from_rational(&self.c);
        for i in 0..NV {
            if self.sh[i] != 0 {
                v = v.mul(&x[i].pow(self.sh[i] as i64)?);
            }
        }
        v.mul(&poly(&self.num)).div(&poly(&self.den))
    }
}

fn eval_q(p: &MPoly, x: &[BigRational; NV]) -> BigRational {
    let mut s = BigRational::zero();
    for (e, c) in p.terms() {
        let mut v = BigRational::from_integer(c.clone());
        for i in 0..NV {
            v *= num_traits::pow::pow(x[i].clone(), e[i] as usize);
        }
        s += v;
    }
    s
}

fn split_shift(a: &[i32; NV], b: &[i32; NV]) -> ([i32; NV], Exp, Exp) {
    let mut m = [0; NV];
    let mut ea = [0; NV];
    let mut eb = [0; NV];
    for i in 0..NV {
        m[i] = a[i].min(b[i]);
        ea[i] = (a[i] - m[i]) as u32;
        eb[i] = (b[i] - m[i]) as u32;
    }
    (m, ea, eb)
}

impl PartialEq for RatFunc {
    fn eq(&self, o: &Self) -> bool {
        if self.c == o.c && self.sh == o.sh && self.num == o.num && self.den == o.den {
            return true;
        }
        // representations are canonical unless a gcd fell back; decide by subtraction
        self.sub(o).is_zero()
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.c.is_zero() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        if !self.c.is_one() || (self.num.is_one() && self.sh == [0; NV]) {
            parts.push(format!("({})", self.c));
        }
        const V: [&str; NV] = ["q0", "s1", "s2"];
        for i in 0..NV {
            match self.sh[i] {
                0 => {}
                1 => parts.push(V[i].to_string()),
                k => parts.push(format!("{}^{}", V[i], k)),
            }
        }
        if !self.num.is_one() {
            parts.push(format!("({})", self.num));
        }
        write!(f, "{}", parts.join("*"))?;
        if !self.den.is_one() {
            write!(f, "/({})", self.den)?;
        }
        Ok(())
    }
}

impl Scalar for RatFunc {
    fn zero() -> Self {
        Self::zero_value()
    }
    fn one() -> Self {
        RatFunc { c: BigRational::one(), sh: [0; NV], num: MPoly::one(), den: MPoly::one() }
    }
    fn from_rational(r: &BigRational) -> Self {
        if r.is_zero() {
            return Self::zero_value();
        }
        RatFunc { c: r.clone(), sh: [0; NV], num: MPoly::one(), den: MPoly::one() }
    }
    fn is_zero(&self) -> bool {
        self.c.is_zero()
    }
    fn add(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let (sh, ea, eb) = split_shift(&self.sh, &o.sh);
        let l = self.c.denom().lcm(o.c.denom());
        let ua = (&self.c * BigRational::from_integer(l.clone())).to_integer();
        let ub = (&o.c * BigRational::from_integer(l.clone())).to_integer();
        let scale = BigRational::new(BigInt::one(), l);
        if self.den == o.den {
            let n = self.num.mul_monomial(&ea, &ua).add(&o.num.mul_monomial(&eb, &ub));
            if n.is_zero() {
                return Self::zero_value();
            }
            if self.den.is_one() {
                return Self::assemble(scale, sh, n, MPoly::one());
            }
            let g = n.gcd(&self.den);
            let (n, d) = if g.is_one() {
                (n, self.den.clone())
            } else {
                (n.div_exact(&g).unwrap(), self.den.div_exact(&g).unwrap())
            };
            return Self::assemble(scale, sh, n, d);
        }
        let g = self.den.gcd(&o.den);
        let (da, db) = if g.is_one() {
            (self.den.clone(), o.den.clone())
        } else {
            (self.den.div_exact(&g).unwrap(), o.den.div_exact(&g).unwrap())
        };
        let n = self.num.mul(&db).mul_monomial(&ea, &ua).add(&o.num.mul(&da).mul_monomial(&eb, &ub));
        if n.is_zero() {
            return Self::zero_value();
        }
        let h = if g.is_one() { g.clone() } else { n.gcd(&g) };
        let (n, g) = if h.is_one() { (n, g) } else { (n.div_exact(&h).unwrap(), g.div_exact(&h).unwrap()) };
        Self::assemble(scale, sh, n, da.mul(&db).mul(&g))
    }
    fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }
    fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero_value();
        }
        let mut sh = self.sh;
        for i in 0..NV {
            sh[i] += o.sh[i];
        }
        let c = &self.c * &o.c;
        if self.den.is_one() && o.den.is_one() {
            return Self::assemble(c, sh, self.num.mul(&o.num), MPoly::one());
        }
        let cancel = |n: &MPoly, d: &MPoly| -> (MPoly, MPoly) {
            if n.is_one() || d.is_one() {
                return (n.clone(), d.clone());
            }
            let g = n.gcd(d);
            if g.is_one() {
                (n.clone(), d.clone())
            } else {
                (n.div_exact(&g).unwrap(), d.div_exact(&g).unwrap())
            }
        };
        let (n1, d2) = cancel(&self.num, &o.den);
        let (n2, d1) = cancel(&o.num, &self.den);
        Self::assemble(c, sh, n1.mul(&n2), d1.mul(&d2))
    }
    fn neg(&self) -> Self {
        let mut r = self.clone();
        r.c = -r.c;
        r
    }
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let mut sh = self.sh;
        for s in sh.iter_mut() {
            *s = -*s;
        }
        let mut c = self.c.recip();
        let (mut n, mut d) = (self.den.clone(), self.num.clone());
        if n.lc().is_negative() {
            n = n.neg();
            c = -c;
        }
        if d.lc().is_negative() {
            d = d.neg();
            c = -c;
        }
        Some(RatFunc { c, sh, num: n, den: d })
    }
    fn conj(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let (dn, dd) = (self.num.max_exp(), self.den.max_exp());
        let mut sh = [0; NV];
        for i in 0..NV {
            sh[i] = -self.sh[i] - dn[i] as i32 + dd[i] as i32;
        }
        let mut c = self.c.clone();
        let (mut n, mut d) = (self.num.reversed(), self.den.reversed());
        if n.lc().is_negative() {
            n = n.neg();
            c = -c;
        }
        if d.lc().is_negative() {
            d = d.neg();
            c = -c;
        }
        RatFunc { c, sh, num: n, den: d }
    }
}
