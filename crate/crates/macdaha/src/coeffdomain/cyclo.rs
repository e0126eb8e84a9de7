use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use super::Scalar;

/// Element of Q(zeta_M) as a polynomial in zeta of degree < phi(M).
/// Rational constants are stored with `m = 0` so that they mix with any conductor.
#[derive(Clone, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub struct Cyclo {
    m: u32,
    c: Vec<BigRational>,
}

fn cyclotomic_poly(m: u32) -> Arc<Vec<BigInt>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<BigInt>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&m) {
        return p.clone();
    }
    // x^m - 1 divided by Phi_d for all proper divisors d
    let mut p: Vec<BigInt> = vec![BigInt::zero(); m as usize + 1];
    p[0] = -BigInt::one();
    p[m as usize] = BigInt::one();
    for d in 1..m {
        if m % d == 0 {
            let q = cyclotomic_poly(d);
            p = div_monic(&p, &q);
        }
    }
    let p = Arc::new(p);
    cache.lock().unwrap().insert(m, p.clone());
    p
}

/// Quotient of integer polynomials (ascending coefficients) by a monic divisor.
fn div_monic(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let mut q = vec![BigInt::zero(); r.len() - db];
    for i in (0..q.len()).rev() {
        let c = r[i + db].clone();
        if !c.is_zero() {
            for (j, bj) in b.iter().enumerate() {
                r[i + j] -= &c * bj;
            }
        }
        q[i] = c;
    }
    debug_assert!(r.iter().all(|x| x.is_zero()));
    q
}

fn trim(v: &mut Vec<BigRational>) {
    while v.last().is_some_and(|x| x.is_zero()) {
        v.pop();
    }
}

impl Cyclo {
    /// zeta_M^e.
    pub fn zeta_pow(m: u32, e: i64) -> Self {
        let e = e.rem_euclid(m as i64) as usize;
        let mut c = vec![BigRational::zero(); e + 1];
        c[e] = BigRational::one();
        Self::reduce(m, c)
    }

    pub fn conductor(&self) -> u32 {
        self.m
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.c
    }

    fn reduce(m: u32, mut c: Vec<BigRational>) -> Self {
        trim(&mut c);
        if m == 0 {
            return Cyclo { m, c };
        }
        let phi = cyclotomic_poly(m);
        let d = phi.len() - 1;
        if c.len() > d {
            for i in (d..c.len()).rev() {
                let k = std::mem::take(&mut c[i]);
                if !k.is_zero() {
                    for (j, pj) in phi.iter().enumerate().take(d) {
                        c[i - d + j] -= &k * BigRational::from_integer(pj.clone());
                    }
                }
            }
            c.truncate(d);
            trim(&mut c);
        }
        let m = if c.len() <= 1 { 0 } else { m };
        Cyclo { m, c }
    }

    fn common(&self, o: &Self) -> u32 {
        match (self.m, o.m) {
            (0, m) | (m, 0) => m,
            (a, b) => {
                assert_eq!(a, b, "mixing cyclotomic conductors");
                a
            }
        }
    }

    /// Rational value if the element lies in Q.
    pub fn as_rational(&self) -> Option<BigRational> {
        match self.c.len() {
            0 => Some(BigRational::zero()),
            1 => Some(self.c[0].clone()),
            _ => None,
        }
    }
}

/// Extended Euclid over Q[x]: returns s with s*a = 1 mod b (a, b coprime).
fn inverse_mod(a: &[BigRational], b: &[BigRational]) -> Option<Vec<BigRational>> {
    let (mut r0, mut r1) = (b.to_vec(), a.to_vec());
    let (mut s0, mut s1): (Vec<BigRational>, Vec<BigRational>) = (vec![], vec![BigRational::one()]);
    trim(&mut r1);
    while r1.len() > 1 {
        let (q, r) = poly_divrem(&r0, &r1);
        let s2 = poly_sub(&s0, &poly_mul(&q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
    }
    if r1.is_empty() {
        return None;
    }
    let k = r1[0].recip();
    Some(s1.iter().map(|x| x * &k).collect())
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut r = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            r[i + j] += x * y;
        }
    }
    trim(&mut r);
    r
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let mut r = vec![BigRational::zero(); n];
    for (i, x) in a.iter().enumerate() {
        r[i] += x;
    }
    for (i, x) in b.iter().enumerate() {
        r[i] -= x;
    }
    trim(&mut r);
    r
}

fn poly_divrem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut r = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    if r.len() < b.len() {
        return (vec![], r);
    }
    let lb = b[db].recip();
    let mut q = vec![BigRational::zero(); r.len() - db];
    for i in (0..q.len()).rev() {
        let c = &r[i + db] * &lb;
        if !c.is_zero() {
            for (j, bj) in b.iter().enumerate() {
                r[i + j] -= &c * bj;
            }
        }
        q[i] = c;
    }
    r.truncate(db);
    trim(&mut r);
    trim(&mut q);
    (q, r)
}

impl fmt::Display for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.c.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, x) in self.c.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{x}")?,
                1 => write!(f, "({x})*z")?,
                _ => write!(f, "({x})*z^{i}")?,
            }
        }
        if self.m != 0 {
            write!(f, " [z^{}=1]", self.m)?;
        }
        Ok(())
    }
}

impl Scalar for Cyclo {
    fn zero() -> Self {
        Cyclo { m: 0, c: vec![] }
    }
    fn one() -> Self {
        Cyclo { m: 0, c: vec![BigRational::one()] }
    }
    fn from_rational(r: &BigRational) -> Self {
        let mut c = vec![r.clone()];
        trim(&mut c);
        Cyclo { m: 0, c }
    }
    fn is_zero(&self) -> bool {
        self.c.is_empty()
    }
    fn add(&self, o: &Self) -> Self {
        let m = self.common(o);
        let n = self.c.len().max(o.c.len());
        let mut c = vec![BigRational::zero(); n];
        for (i, x) in self.c.iter().enumerate() {
            c[i] += x;
        }
        for (i, x) in o.c.iter().enumerate() {
            c[i] += x;
        }
        Self::reduce(m, c)
    }
    fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }
    fn mul(&self, o: &Self) -> Self {
        let m = self.common(o);
        Self::reduce(m, poly_mul(&self.c, &o.c))
    }
    fn neg(&self) -> Self {
        Cyclo { m: self.m, c: self.c.iter().map(|x| -x).collect() }
    }
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if self.m == 0 {
            return Some(Cyclo { m: 0, c: vec![self.c[0].recip()] });
        }
        let phi: Vec<BigRational> =
            cyclotomic_poly(self.m).iter().map(|x| BigRational::from_integer(x.clone())).collect();
        inverse_mod(&self.c, &phi).map(|s| Self::reduce(self.m, s))
    }
    fn conj(&self) -> Self {
        if self.m == 0 {
            return self.clone();
        }
        let m = self.m as usize;
        let mut c = vec![BigRational::zero(); m];
        for (i, x) in self.c.iter().enumerate() {
            c[(m - i) % m] += x;
        }
        Self::reduce(self.m, c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_polynomials() {
        let p = cyclotomic_poly(12);
        let v: Vec<i64> = p.iter().map(|x| x.try_into().unwrap()).collect();
        assert_eq!(v, vec![1, 0, -1, 0, 1]);
        assert_eq!(cyclotomic_poly(5).len(), 5);
    }

    #[test]
    fn zeta_relations() {
        let z = Cyclo::zeta_pow(5, 1);
        assert_eq!(z.pow(5).unwrap(), Cyclo::one());
        assert_eq!(z.conj(), Cyclo::zeta_pow(5, 4));
        let w = z.add(&Cyclo::from_int(2));
        assert_eq!(w.mul(&w.inv().unwrap()), Cyclo::one());
    }
}
