//! Sparse polynomials over Z in at most `NV` variables.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::collections::{BTreeMap, HashMap};
use std::fmt;

pub const NV: usize = 3;
pub type Exp = [u32; NV];

/// Terms sorted by exponent in strictly decreasing lex order, no zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, serde::Serialize, serde::Deserialize)]
pub struct MPoly {
    t: Vec<(Exp, BigInt)>,
}

fn exp_add(a: &Exp, b: &Exp) -> Exp {
    let mut r = *a;
    for i in 0..NV {
        r[i] += b[i];
    }
    r
}

fn exp_divides(d: &Exp, e: &Exp) -> bool {
    (0..NV).all(|i| d[i] <= e[i])
}

fn exp_sub(a: &Exp, b: &Exp) -> Exp {
    let mut r = *a;
    for i in 0..NV {
        r[i] -= b[i];
    }
    r
}

impl MPoly {
    pub fn zero() -> Self {
        MPoly { t: Vec::new() }
    }
    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }
    pub fn constant(c: BigInt) -> Self {
        Self::monomial([0; NV], c)
    }
    pub fn monomial(e: Exp, c: BigInt) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            MPoly { t: vec![(e, c)] }
        }
    }
    pub fn var(i: usize) -> Self {
        let mut e = [0; NV];
        e[i] = 1;
        Self::monomial(e, BigInt::one())
    }
    pub fn from_map(m: BTreeMap<Exp, BigInt>) -> Self {
        let mut t: Vec<_> = m.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        t.reverse();
        MPoly { t }
    }
    fn from_hash(m: HashMap<Exp, BigInt>) -> Self {
        let mut t: Vec<_> = m.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        t.sort_by(|a, b| b.0.cmp(&a.0));
        MPoly { t }
    }
    pub fn terms(&self) -> &[(Exp, BigInt)] {
        &self.t
    }
    pub fn is_zero(&self) -> bool {
        self.t.is_empty()
    }
    pub fn is_one(&self) -> bool {
        self.t.len() == 1 && self.t[0].0 == [0; NV] && self.t[0].1.is_one()
    }
    pub fn is_constant(&self) -> bool {
        self.t.is_empty() || (self.t.len() == 1 && self.t[0].0 == [0; NV])
    }
    pub fn len(&self) -> usize {
        self.t.len()
    }
    pub fn is_empty(&self) -> bool {
        self.t.is_empty()
    }
    pub fn lc(&self) -> &BigInt {
        &self.t[0].1
    }
    pub fn lm(&self) -> &Exp {
        &self.t[0].0
    }

    pub fn add(&self, o: &Self) -> Self {
        self.merge(o, false)
    }
    pub fn sub(&self, o: &Self) -> Self {
        self.merge(o, true)
    }
    fn merge(&self, o: &Self, negate: bool) -> Self {
        let mut t = Vec::with_capacity(self.t.len() + o.t.len());
        let (mut i, mut j) = (0, 0);
        while i < self.t.len() || j < o.t.len() {
            let ord = if i == self.t.len() {
                std::cmp::Ordering::Less
            } else if j == o.t.len() {
                std::cmp::Ordering::Greater
            } else {
                self.t[i].0.cmp(&o.t[j].0)
            };
            match ord {
                std::cmp::Ordering::Greater => {
                    t.push(self.t[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    let c = if negate { -&o.t[j].1 } else { o.t[j].1.clone() };
                    t.push((o.t[j].0, c));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate { &self.t[i].1 - &o.t[j].1 } else { &self.t[i].1 + &o.t[j].1 };
                    if !c.is_zero() {
                        t.push((self.t[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        MPoly { t }
    }
    pub fn neg(&self) -> Self {
        MPoly { t: self.t.iter().map(|(e, c)| (*e, -c)).collect() }
    }
    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        MPoly { t: self.t.iter().map(|(e, c)| (*e, c * k)).collect() }
    }
    pub fn mul_monomial(&self, e: &Exp, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        MPoly { t: self.t.iter().map(|(f, c)| (exp_add(f, e), c * k)).collect() }
    }
    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        if o.t.len() == 1 {
            return self.mul_monomial(&o.t[0].0, &o.t[0].1);
        }
        if self.t.len() == 1 {
            return o.mul_monomial(&self.t[0].0, &self.t[0].1);
        }
        let mut m: HashMap<Exp, BigInt> = HashMap::with_capacity(self.t.len() * o.t.len());
        for (e1, c1) in &self.t {
            for (e2, c2) in &o.t {
                let p = c1 * c2;
                m.entry(exp_add(e1, e2)).and_modify(|c| *c += &p).or_insert(p);
            }
        }
        Self::from_hash(m)
    }

    /// Positive gcd of the coefficients.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.t {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }
    /// Divide every coefficient by `k` (assumed exact).
    pub fn div_int(&self, k: &BigInt) -> Self {
        if k.is_one() {
            return self.clone();
        }
        MPoly { t: self.t.iter().map(|(e, c)| (*e, c / k)).collect() }
    }
    /// Primitive part with positive leading coefficient, and the signed content removed.
    pub fn primitive(&self) -> (BigInt, Self) {
        if self.is_zero() {
            return (BigInt::zero(), Self::zero());
        }
        let mut c = self.content();
        if self.lc().is_negative() {
            c = -c;
        }
        (c.clone(), self.div_int(&c))
    }

    pub fn min_exp(&self) -> Exp {
        let mut m = [u32::MAX; NV];
        for (e, _) in &self.t {
            for i in 0..NV {
                m[i] = m[i].min(e[i]);
            }
        }
        if self.t.is_empty() {
            [0; NV]
        } else {
            m
        }
    }
    pub fn max_exp(&self) -> Exp {
        let mut m = [0; NV];
        for (e, _) in &self.t {
            for i in 0..NV {
                m[i] = m[i].max(e[i]);
            }
        }
        m
    }
    pub fn shift_down(&self, s: &Exp) -> Self {
        if *s == [0; NV] {
            return self.clone();
        }
        MPoly { t: self.t.iter().map(|(e, c)| (exp_sub(e, s), c.clone())).collect() }
    }
    /// x -> 1/x in every variable, multiplied by x^max_exp.
    pub fn reversed(&self) -> Self {
        let d = self.max_exp();
        let mut t: Vec<_> = self.t.iter().map(|(e, c)| (exp_sub(&d, e), c.clone())).collect();
        t.sort_by(|a, b| b.0.cmp(&a.0));
        MPoly { t }
    }
    pub fn max_norm(&self) -> BigInt {
        self.t.iter().map(|(_, c)| c.abs()).max().unwrap_or_else(BigInt::zero)
    }

    /// Exact quotient, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if d.t.len() == 1 {
            let (de, dc) = &d.t[0];
            let mut t = Vec::with_capacity(self.t.len());
            for (e, c) in &self.t {
                if !exp_divides(de, e) {
                    return None;
                }
                let (q, r) = c.div_rem(dc);
                if !r.is_zero() {
                    return None;
                }
                t.push((exp_sub(e, de), q));
            }
            return Some(MPoly { t });
        }
        let (sd, dd) = (self.max_exp(), d.max_exp());
        if (0..NV).any(|i| dd[i] > sd[i]) {
            return None;
        }
        let (de, dc) = (d.t[0].0, d.t[0].1.clone());
        let mut r: BTreeMap<Exp, BigInt> = self.t.iter().cloned().collect();
        let mut q = Vec::new();
        while let Some((e, c)) = r.iter().next_back().map(|(e, c)| (*e, c.clone())) {
            if !exp_divides(&de, &e) {
                return None;
            }
            let (qc, rem) = c.div_rem(&dc);
            if !rem.is_zero() {
                return None;
            }
            let qe = exp_sub(&e, &de);
            for (f, fc) in &d.t {
                let k = exp_add(f, &qe);
                let v = fc * &qc;
                let zero = {
                    let slot = r.entry(k).or_insert_with(BigInt::zero);
                    *slot -= v;
                    slot.is_zero()
                };
                if zero {
                    r.remove(&k);
                }
            }
            q.push((qe, qc));
        }
        Some(MPoly { t: q })
    }

    fn eval_var(&self, v: usize, x: &BigInt) -> Self {
        let mut m: HashMap<Exp, BigInt> = HashMap::new();
        for (e, c) in &self.t {
            let mut f = *e;
            f[v] = 0;
            let val = c * num_traits::pow::pow(x.clone(), e[v] as usize);
            m.entry(f).and_modify(|s| *s += &val).or_insert(val);
        }
        Self::from_hash(m)
    }

    fn map_exps(&self, f: impl Fn(&Exp) -> Exp) -> Self {
        let mut t: Vec<_> = self.t.iter().map(|(e, c)| (f(e), c.clone())).collect();
        t.sort_by(|a, b| b.0.cmp(&a.0));
        MPoly { t }
    }

    /// Greatest common divisor, normalized with positive leading coefficient.
    pub fn gcd(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.primitive_sign();
        }
        if o.is_zero() {
            return self.primitive_sign();
        }
        let (ma, mb) = (self.min_exp(), o.min_exp());
        let mut mono = [0; NV];
        for i in 0..NV {
            mono[i] = ma[i].min(mb[i]);
        }
        let a = self.shift_down(&ma);
        let b = o.shift_down(&mb);
        let c = a.content().gcd(&b.content());
        let (_, a) = a.primitive();
        let (_, b) = b.primitive();
        let g = gcd_primitive(&a, &b);
        g.mul_monomial(&mono, &c)
    }

    fn primitive_sign(&self) -> Self {
        if self.is_zero() || !self.lc().is_negative() {
            self.clone()
        } else {
            self.neg()
        }
    }

    pub fn eval_i64(&self, x: &[i64; NV]) -> BigInt {
        let mut s = BigInt::zero();
        for (e, c) in &self.t {
            let mut v = c.clone();
            for i in 0..NV {
                v *= num_traits::pow::pow(BigInt::from(x[i]), e[i] as usize);
            }
            s += v;
        }
        s
    }
}

/// gcd of primitive polynomials without monomial content.
fn gcd_primitive(a: &MPoly, b: &MPoly) -> MPoly {
    if a.is_constant() || b.is_constant() {
        return MPoly::one();
    }
    if a == b {
        return a.clone();
    }
    // compress exponents that share a common factor
    let mut g = [0u32; NV];
    for p in [a, b] {
        for (e, _) in &p.t {
            for i in 0..NV {
                g[i] = g[i].gcd(&e[i]);
            }
        }
    }
    if g.iter().any(|&x| x > 1) {
        let f = |e: &Exp| {
            let mut r = *e;
            for i in 0..NV {
                if g[i] > 1 {
                    r[i] /= g[i];
                }
            }
            r
        };
        let h = gcd_primitive(&a.map_exps(f), &b.map_exps(f));
        return h.map_exps(|e| {
            let mut r = *e;
            for i in 0..NV {
                if g[i] > 1 {
                    r[i] *= g[i];
                }
            }
            r
        });
    }
    if a.len() <= b.len() {
        if let Some(_) = b.div_exact(a) {
            return a.clone();
        }
    } else if let Some(_) = a.div_exact(b) {
        return b.clone();
    }
    match heuristic_gcd(a, b) {
        Some(h) => h.primitive().1,
        None => MPoly::one(),
    }
}

fn top_var(a: &MPoly, b: &MPoly) -> Option<usize> {
    let (da, db) = (a.max_exp(), b.max_exp());
    (0..NV).rev().find(|&i| da[i] > 0 || db[i] > 0)
}

/// Heuristic gcd by evaluation at a large integer and xi-adic reconstruction.
fn heuristic_gcd(a: &MPoly, b: &MPoly) -> Option<MPoly> {
    let ca = a.content();
    let cb = b.content();
    let c = ca.gcd(&cb);
    let (a, b) = (a.div_int(&ca), b.div_int(&cb));
    let Some(v) = top_var(&a, &b) else {
        return Some(MPoly::constant(c));
    };
    let mut xi: BigInt = 2 * a.max_norm().min(b.max_norm()) + 29;
    for _ in 0..20 {
        let av = a.eval_var(v, &xi);
        let bv = b.eval_var(v, &xi);
        if !av.is_zero() && !bv.is_zero() {
            if let Some(gv) = heuristic_gcd(&av, &bv) {
                let cand = reconstruct(&gv, &xi, v).primitive().1;
                if !cand.is_zero() && a.div_exact(&cand).is_some() && b.div_exact(&cand).is_some() {
                    return Some(cand.scale(&c));
                }
            }
        }
        xi = &xi * 73794 / 27011 + 1;
    }
    None
}

fn reconstruct(g: &MPoly, xi: &BigInt, v: usize) -> MPoly {
    let half = xi / 2;
    let mut m: BTreeMap<Exp, BigInt> = BTreeMap::new();
    for (e, c) in &g.t {
        let mut c = c.clone();
        let mut i = 0u32;
        while !c.is_zero() {
            let mut d = c.mod_floor(xi);
            if d > half {
                d -= xi;
            }
            if !d.is_zero() {
                let mut f = *e;
                f[v] = i;
                *m.entry(f).or_insert_with(BigInt::zero) += &d;
            }
            c = (c - d) / xi;
            i += 1;
        }
    }
    MPoly::from_map(m)
}

const VARS: [&str; NV] = ["q0", "s1", "s2"];

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.t.is_empty() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.t.iter().enumerate() {
            let mono: Vec<String> = (0..NV)
                .filter(|&i| e[i] > 0)
                .map(|i| if e[i] == 1 { VARS[i].to_string() } else { format!("{}^{}", VARS[i], e[i]) })
                .collect();
            let neg = c.is_negative();
            let a = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            if mono.is_empty() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{a}*{}", mono.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[([u32; NV], i64)]) -> MPoly {
        let mut m = BTreeMap::new();
        for (e, c) in terms {
            *m.entry(*e).or_insert_with(BigInt::zero) += BigInt::from(*c);
        }
        MPoly::from_map(m)
    }

    #[test]
    fn gcd_recovers_common_factor() {
        let x = MPoly::var(0);
        let y = MPoly::var(1);
        let one = MPoly::one();
        let f = x.mul(&y).sub(&one); // xy - 1
        let g = x.add(&y.mul(&y)).add(&one);
        let h = x.sub(&y).add(&MPoly::constant(BigInt::from(3)));
        let a = f.mul(&g);
        let b = f.mul(&h);
        assert_eq!(a.gcd(&b), f);
    }

    #[test]
    fn gcd_with_content_and_monomials() {
        let a = p(&[([2, 1, 0], 6), ([1, 1, 0], -6)]); // 6 x^2 y - 6 x y
        let b = p(&[([3, 0, 0], 4), ([2, 0, 0], -4)]); // 4 x^3 - 4 x^2
        assert_eq!(a.gcd(&b), p(&[([2, 0, 0], 2), ([1, 0, 0], -2)]));
    }

    #[test]
    fn exact_division() {
        let a = p(&[([2, 0, 0], 1), ([0, 0, 0], -1)]);
        let b = p(&[([1, 0, 0], 1), ([0, 0, 0], -1)]);
        assert_eq!(a.div_exact(&b), Some(p(&[([1, 0, 0], 1), ([0, 0, 0], 1)])));
        assert_eq!(b.div_exact(&a), None);
    }

    #[test]
    fn compressed_exponents() {
        // q^12 - 1 and q^8 - 1 share q^4 - 1
        let a = p(&[([12, 0, 0], 1), ([0, 0, 0], -1)]);
        let b = p(&[([8, 0, 0], 1), ([0, 0, 0], -1)]);
        assert_eq!(a.gcd(&b), p(&[([4, 0, 0], 1), ([0, 0, 0], -1)]));
    }
}
