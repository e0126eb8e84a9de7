//! Sparse Laurent polynomials in x_1..x_n keyed by weights.

use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Value};

use crate::coeffdomain::{Params, Scalar};
use crate::error::{Error, Result};
use crate::rootdata::{AffineElement, RootSystem, Weight};

#[derive(Clone, Debug, PartialEq)]
pub struct LaurentPoly<S> {
    terms: BTreeMap<Weight, S>,
}

impl<S: Scalar> Default for LaurentPoly<S> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<S: Scalar> LaurentPoly<S> {
    pub fn zero() -> Self {
        LaurentPoly { terms: BTreeMap::new() }
    }
    pub fn constant(n: usize, c: S) -> Self {
        Self::monomial(vec![0; n], c)
    }
    pub fn one(n: usize) -> Self {
        Self::constant(n, S::one())
    }
    pub fn monomial(b: Weight, c: S) -> Self {
        let mut p = Self::zero();
        p.add_term(b, &c);
        p
    }
    pub fn x(b: Weight) -> Self {
        Self::monomial(b, S::one())
    }
    pub fn from_terms(it: impl IntoIterator<Item = (Weight, S)>) -> Self {
        let mut p = Self::zero();
        for (b, c) in it {
            p.add_term(b, &c);
        }
        p
    }
    pub fn terms(&self) -> impl Iterator<Item = (&Weight, &S)> {
        self.terms.iter()
    }
    pub fn len(&self) -> usize {
        self.terms.len()
    }
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    pub fn coeff(&self, b: &[i64]) -> S {
        self.terms.get(b).cloned().unwrap_or_else(S::zero)
    }
    pub fn support(&self) -> impl Iterator<Item = &Weight> {
        self.terms.keys()
    }

    pub fn add_term(&mut self, b: Weight, c: &S) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(b) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                o.get_mut().add_assign(c);
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        r.add_assign(o);
        r
    }
    pub fn add_assign(&mut self, o: &Self) {
        for (b, c) in &o.terms {
            self.add_term(b.clone(), c);
        }
    }
    pub fn sub(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (b, c) in &o.terms {
            r.add_term(b.clone(), &c.neg());
        }
        r
    }
    pub fn neg(&self) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(b, c)| (b.clone(), c.neg())).collect() }
    }
    pub fn scale(&self, k: &S) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        LaurentPoly { terms: self.terms.iter().map(|(b, c)| (b.clone(), c.mul(k))).collect() }
    }
    /// Multiply by c x_b.
    pub fn mul_monomial(&self, b: &[i64], c: &S) -> Self {
        let mut r = Self::zero();
        for (e, d) in &self.terms {
            r.add_term(e.iter().zip(b).map(|(x, y)| x + y).collect(), &d.mul(c));
        }
        r
    }
    pub fn mul(&self, o: &Self) -> Self {
        let mut r = Self::zero();
        for (b, c) in &o.terms {
            for (e, d) in &self.terms {
                r.add_term(e.iter().zip(b).map(|(x, y)| x + y).collect(), &d.mul(c));
            }
        }
        r
    }

    /// Constant term of self * o, without forming the product.
    pub fn constant_term_of_product(&self, o: &Self) -> S {
        let (small, large) = if self.len() <= o.len() { (self, o) } else { (o, self) };
        let mut acc = S::zero();
        for (b, c) in &small.terms {
            let nb: Weight = b.iter().map(|x| -x).collect();
            if let Some(d) = large.terms.get(&nb) {
                acc.add_assign(&c.mul(d));
            }
        }
        acc
    }

    pub fn constant_term(&self) -> S {
        self.terms.iter().find(|(b, _)| b.iter().all(|&x| x == 0)).map(|(_, c)| c.clone()).unwrap_or_else(S::zero)
    }

    /// x_b -> x_{-b}, coefficients conjugated.
    pub fn star(&self) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(b, c)| (b.iter().map(|x| -x).collect(), c.conj())).collect() }
    }

    /// x_b -> x_{-b}, coefficients unchanged.
    pub fn bar(&self) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(b, c)| (b.iter().map(|x| -x).collect(), c.clone())).collect() }
    }

    pub fn map_coeffs(&self, f: impl Fn(&S) -> S) -> Self {
        Self::from_terms(self.terms.iter().map(|(b, c)| (b.clone(), f(c))))
    }

    /// Action of the extended affine Weyl group: x_z -> q^{-(z,b)} x_{wz}.
    pub fn act(&self, rs: &RootSystem, p: &Params<S>, g: &AffineElement) -> Self {
        let mut r = Self::zero();
        for (z, c) in &self.terms {
            let e = -rs.pair_q(z, &g.b);
            let v = if e == 0 { c.clone() } else { c.mul(&p.q0_pow(e)) };
            r.add_term(g.w.apply(z), &v);
        }
        r
    }

    /// Value at t^{sign rho} q^c: x_b -> q^{(b,c)} prod_nu t_nu^{sign (b, rho_nu)}.
    pub fn eval_at(&self, rs: &RootSystem, p: &Params<S>, sign: i64, c: &[i64]) -> S {
        let mut s = S::zero();
        for (b, coef) in &self.terms {
            s.add_assign(&coef.mul(&monomial_value(rs, p, b, sign, c)));
        }
        s
    }

    pub fn is_symmetric(&self, rs: &RootSystem) -> bool {
        self.terms.iter().all(|(b, c)| (0..rs.rank).all(|i| self.coeff(&rs.reflect(b, i)) == *c))
    }

    /// Coefficients at anti-dominant weights: the expansion in monomial symmetric functions
    /// of a W-invariant polynomial.
    pub fn antidominant_part(&self, rs: &RootSystem) -> BTreeMap<Weight, S> {
        self.terms.iter().filter(|(b, _)| rs.is_antidominant(b)).map(|(b, c)| (b.clone(), c.clone())).collect()
    }

    pub fn to_json(&self) -> Value {
        Value::Array(self.terms.iter().map(|(b, c)| json!([b, c.canonical()])).collect())
    }
}

/// x_b(t^{sign rho} q^c).
pub fn monomial_value<S: Scalar>(rs: &RootSystem, p: &Params<S>, b: &[i64], sign: i64, c: &[i64]) -> S {
    let mut v = p.q0_pow(rs.pair_q(b, c));
    for cl in 0..rs.num_classes() {
        let e = rs.rho_exp(b, cl);
        if e != 0 {
            v = v.mul(&p.s_pow(cl, sign * e));
        }
    }
    v
}

impl<S: Scalar> fmt::Display for LaurentPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(b, c)| {
                let mono: Vec<String> = b
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e != 0)
                    .map(|(i, &e)| format!("x{}^{}", i + 1, e))
                    .collect();
                if mono.is_empty() {
                    format!("({c})")
                } else {
                    format!("({c}) * {}", mono.join(" "))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// m_b = sum of x_c over the W-orbit of an anti-dominant b.
pub fn monomial_symmetric<S: Scalar>(rs: &RootSystem, b: &[i64]) -> Result<LaurentPoly<S>> {
    if !rs.is_antidominant(b) {
        return Err(Error::Precondition(format!("{b:?} is not anti-dominant")));
    }
    Ok(LaurentPoly::from_terms(rs.orbit(b).into_iter().map(|c| (c, S::one()))))
}

/// The finite form of mu at t_nu = q_nu^{k_nu}:
/// prod_a prod_{i<k_a} (1 - x_a q_a^i)(1 - x_a^{-1} q_a^{i+1}).
pub fn mu_product<S: Scalar>(rs: &RootSystem, p: &Params<S>, k: &[i64]) -> LaurentPoly<S> {
    mu_generic(rs, p, k, 1)
}

/// prod_a prod_{i<k_a} (1 - x_a q_a^i)(1 - x_a^{-1} q_a^i).
pub fn mu_prime<S: Scalar>(rs: &RootSystem, p: &Params<S>, k: &[i64]) -> LaurentPoly<S> {
    mu_generic(rs, p, k, 0)
}

/// q0-exponent of q_a for a coroot of class c.
pub fn q_a_units(rs: &RootSystem, class: usize) -> i64 {
    2 * rs.mhat * 6 / rs.class_nu3[class]
}

fn mu_generic<S: Scalar>(rs: &RootSystem, p: &Params<S>, k: &[i64], shift: i64) -> LaurentPoly<S> {
    let n = rs.rank;
    let mut m = LaurentPoly::one(n);
    for r in rs.positive_roots() {
        let qa = q_a_units(rs, r.class);
        let a = r.coroot.clone();
        let na: Weight = a.iter().map(|x| -x).collect();
        for i in 0..k[r.class] {
            let f1 = LaurentPoly::from_terms([(vec![0; n], S::one()), (a.clone(), p.q0_pow(qa * i).neg())]);
            let f2 = LaurentPoly::from_terms([(vec![0; n], S::one()), (na.clone(), p.q0_pow(qa * (i + shift)).neg())]);
            m = m.mul(&f1).mul(&f2);
        }
    }
    m
}

/// <mu> at t_nu = q_nu^{k_nu} from the telescoped product formula.
pub fn mu_constant_term_formula<S: Scalar>(rs: &RootSystem, p: &Params<S>, k: &[i64]) -> Result<S> {
    let mut v = S::one();
    let zero = vec![0; rs.rank];
    for r in rs.positive_roots() {
        let qa = q_a_units(rs, r.class);
        let x = monomial_value(rs, p, &r.coroot, 1, &zero);
        for i in 1..=k[r.class] {
            v = v.mul(&S::one().sub(&x.mul(&p.q0_pow(qa * i))));
        }
        for j in 0..k[r.class] {
            let d = S::one().sub(&x.mul(&p.q0_pow(-qa * j)));
            v = v.div(&d).ok_or_else(|| Error::Pole("constant term formula".into()))?;
        }
    }
    Ok(v)
}
