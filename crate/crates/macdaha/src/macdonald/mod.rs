//! Macdonald operators L_f on symmetric polynomials, the polynomials p_b and
//! pi_b, and the closed formulas they are checked against.

mod checks;
mod shift;
mod gauss;

pub use checks::*;
pub use gauss::*;

use std::collections::BTreeMap;

use crate::coeffdomain::Scalar;
use crate::daha::Daha;
use crate::error::{Error, Result};
use crate::laurent::{monomial_symmetric, monomial_value, q_a_units, LaurentPoly};
use crate::rootdata::{RootSystem, Weight};

/// p_b for anti-dominant b, built on demand and cached.
#[derive(Clone, Debug)]
pub struct MacdonaldTable<S> {
    pub d: Daha<S>,
    gens: Vec<LaurentPoly<S>>,
    polys: BTreeMap<Weight, LaurentPoly<S>>,
    columns: BTreeMap<(usize, Weight), BTreeMap<Weight, S>>,
    mu: Option<(Vec<i64>, LaurentPoly<S>, S)>,
}

impl<S: Scalar> MacdonaldTable<S> {
    pub fn new(d: Daha<S>) -> Self {
        let rs = d.rs.clone();
        let gens = (0..rs.rank)
            .map(|i| monomial_symmetric(&rs, &rs.unit(i).iter().map(|x| -x).collect::<Vec<_>>()).expect("-b_i is anti-dominant"))
            .collect();
        MacdonaldTable { d, gens, polys: BTreeMap::new(), columns: BTreeMap::new(), mu: None }
    }

    /// The polynomials computed so far.
    pub fn computed(&self) -> impl Iterator<Item = (&Weight, &LaurentPoly<S>)> {
        self.polys.iter()
    }

    /// Seed the table with a previously computed p_b.
    pub fn insert(&mut self, b: Weight, p: LaurentPoly<S>) {
        self.polys.insert(b, p);
    }

    pub fn rs(&self) -> &RootSystem {
        &self.d.rs
    }

    /// f(t^rho q^{-b}) for a polynomial f in y.
    pub fn eigenvalue(&self, f: &LaurentPoly<S>, b: &[i64]) -> S {
        let nb: Weight = b.iter().map(|x| -x).collect();
        let mut v = S::zero();
        for (z, c) in f.terms() {
            v.add_assign(&c.mul(&monomial_value(self.rs(), &self.d.p, z, 1, &nb)));
        }
        v
    }

    fn apply_l(&self, f: &LaurentPoly<S>, c: &[i64]) -> Result<BTreeMap<Weight, S>> {
        let m = monomial_symmetric(self.rs(), c)?;
        Ok(self.d.y_poly(f, &m).antidominant_part(self.rs()))
    }

    fn column(&mut self, i: usize, c: &Weight) -> Result<BTreeMap<Weight, S>> {
        if let Some(col) = self.columns.get(&(i, c.clone())) {
            return Ok(col.clone());
        }
        let col = self.apply_l(&self.gens[i].clone(), c)?;
        self.columns.insert((i, c.clone()), col.clone());
        Ok(col)
    }

    /// Matrix of L_f on span{m_c : c >= b}: rows and columns indexed by the span,
    /// entry [d][c] = coefficient of m_d in L_f(m_c).
    pub fn build_l(&self, f: &LaurentPoly<S>, b: &[i64]) -> Result<(Vec<Weight>, Vec<Vec<S>>)> {
        let rs = self.rs();
        if !f.is_symmetric(rs) {
            return Err(Error::Precondition("L_f needs a W-invariant f".into()));
        }
        if !rs.is_antidominant(b) {
            return Err(Error::Precondition(format!("{b:?} is not anti-dominant")));
        }
        let span = rs.dominance_span(b);
        let mut mat = vec![vec![S::zero(); span.len()]; span.len()];
        for (j, c) in span.iter().enumerate() {
            let col = self.apply_l(f, c)?;
            for (i, dd) in span.iter().enumerate() {
                if let Some(v) = col.get(dd) {
                    mat[i][j] = v.clone();
                }
            }
        }
        Ok((span, mat))
    }

    /// The Macdonald polynomial p_b, normalized by the coefficient 1 at m_b.
    pub fn poly(&mut self, b: &[i64]) -> Result<LaurentPoly<S>> {
        if let Some(p) = self.polys.get(b) {
            return Ok(p.clone());
        }
        let rs = self.d.rs.clone();
        if !rs.is_antidominant(b) {
            return Err(Error::Precondition(format!("{b:?} is not anti-dominant")));
        }
        let span = rs.dominance_span(b);
        let n = rs.rank;
        let lam_b: Vec<S> = (0..n).map(|i| self.eigenvalue(&self.gens[i], b)).collect();
        let mut cols: Vec<Vec<BTreeMap<Weight, S>>> = Vec::new();
        for i in 0..n {
            cols.push(span.iter().map(|c| self.column(i, c)).collect::<Result<_>>()?);
        }
        let mut u: Vec<S> = vec![S::zero(); span.len()];
        u[0] = S::one();
        for k in 0..span.len() {
            let dd = &span[k];
            for i in 0..n {
                let diag = cols[i][k].get(dd).cloned().unwrap_or_else(S::zero);
                if diag != self.eigenvalue(&self.gens[i], dd) {
                    return Err(Error::Invariant(format!("L_{} is not triangular at {dd:?}", i + 1)));
                }
            }
            if k == 0 {
                continue;
            }
            let Some(i) = (0..n).find(|&i| self.eigenvalue(&self.gens[i], dd) != lam_b[i]) else {
                return Err(Error::Specialization(format!(
                    "eigenvalues of {b:?} and {dd:?} coincide; choose other parameter values"
                )));
            };
            let mut acc = S::zero();
            for j in 0..k {
                if let Some(m) = cols[i][j].get(dd) {
                    acc.add_assign(&m.mul(&u[j]));
                }
            }
            let den = lam_b[i].sub(&self.eigenvalue(&self.gens[i], dd));
            u[k] = acc.div(&den).expect("separated eigenvalues");
        }
        let mut p = LaurentPoly::zero();
        for (c, uc) in span.iter().zip(&u) {
            if !uc.is_zero() {
                p.add_assign(&monomial_symmetric(&rs, c)?.scale(uc));
            }
        }
        self.polys.insert(b.to_vec(), p.clone());
        Ok(p)
    }

    /// p_b(t^{-rho}) from the polynomial itself.
    pub fn principal_value(&mut self, b: &[i64]) -> Result<S> {
        let n = self.rs().rank;
        Ok(self.poly(b)?.eval_at(&self.d.rs, &self.d.p, -1, &vec![0; n]))
    }

    /// pi_b = p_b / p_b(t^{-rho}).
    pub fn pi(&mut self, b: &[i64]) -> Result<LaurentPoly<S>> {
        let v = self.principal_value(b)?;
        let vi = v.inv().ok_or_else(|| Error::Pole(format!("p_{b:?}(t^-rho) = 0")))?;
        Ok(self.poly(b)?.scale(&vi))
    }

    /// Expansion of a symmetric polynomial in {pi_c}, peeling the lowest terms.
    pub fn expand_in_pi(&mut self, f: &LaurentPoly<S>) -> Result<BTreeMap<Weight, S>> {
        let rs = self.d.rs.clone();
        if !f.is_symmetric(&rs) {
            return Err(Error::Precondition("expansion needs a W-invariant polynomial".into()));
        }
        let mut rest = f.clone();
        let mut out = BTreeMap::new();
        while !rest.is_zero() {
            let ad = rest.antidominant_part(&rs);
            let (c, coef) = ad
                .iter()
                .min_by_key(|(c, _)| (rs.height_functional(c), (*c).clone()))
                .map(|(c, v)| (c.clone(), v.clone()))
                .expect("symmetric nonzero polynomial has an anti-dominant term");
            let pv = self.principal_value(&c)?;
            let u = coef.mul(&pv);
            rest = rest.sub(&self.pi(&c)?.scale(&u));
            out.insert(c, u);
        }
        Ok(out)
    }
}

/// q_a and t_a for a positive coroot of class c.
fn qa_ta<S: Scalar>(rs: &RootSystem, p: &crate::coeffdomain::Params<S>, class: usize) -> (i64, S) {
    (q_a_units(rs, class), p.s_pow(class, 2))
}

/// x_b(t^rho) prod_a prod_{1<=j<=-(alpha,b)} (1 - q_a^{j-1} t_a X)/(1 - q_a^{j-1} X), X = x_a(t^rho).
pub fn evaluation_formula<S: Scalar>(rs: &RootSystem, p: &crate::coeffdomain::Params<S>, b: &[i64]) -> Result<S> {
    let zero = vec![0; rs.rank];
    let mut v = monomial_value(rs, p, b, 1, &zero);
    for (idx, r) in rs.positive_roots().iter().enumerate() {
        let (qa, ta) = qa_ta(rs, p, r.class);
        let x = monomial_value(rs, p, &r.coroot, 1, &zero);
        for j in 1..=-rs.root_pair(b, idx) {
            let qx = x.mul(&p.q0_pow(qa * (j - 1)));
            let num = S::one().sub(&qx.mul(&ta));
            let den = S::one().sub(&qx);
            v = v.mul(&num).div(&den).ok_or_else(|| Error::Pole("evaluation formula".into()))?;
        }
    }
    Ok(v)
}

/// The evaluation at t_nu = q^{2 k_nu / nu}: |W(b - k.r)|/|W(k.r)| times
/// prod_{alpha>0, 0<=j<k_alpha} [((k.r - b, alpha) + j)/nu_alpha]_q-ratio.
pub fn evaluation_at_k<S: Scalar>(rs: &RootSystem, p: &crate::coeffdomain::Params<S>, b: &[i64], k: &[i64]) -> Result<S> {
    let n = rs.rank;
    let mut kr = vec![0i64; n];
    for (c, &kc) in k.iter().enumerate() {
        for (x, y) in kr.iter_mut().zip(rs.r_nu(c)) {
            *x += kc * y;
        }
    }
    let krb: Weight = kr.iter().zip(b).map(|(x, y)| x - y).collect();
    let shifted: Weight = b.iter().zip(&kr).map(|(x, y)| x - y).collect();
    let ratio = S::from_int(rs.orbit(&shifted).len() as i64).div(&S::from_int(rs.orbit(&kr).len() as i64)).unwrap();
    let mut v = ratio;
    let qpow = |x: i64, nu3: i64| -> Result<S> {
        let e = 2 * rs.mhat * 3 * x;
        if e % nu3 != 0 {
            return Err(Error::Exponent(format!("q^({x}/nu)")));
        }
        Ok(p.q0_pow(e / nu3))
    };
    for (idx, r) in rs.positive_roots().iter().enumerate() {
        let nu3 = rs.class_nu3[r.class];
        for j in 0..k[r.class] {
            let e1 = rs.root_pair(&krb, idx) + j;
            let e2 = rs.root_pair(&kr, idx) + j;
            let num = qpow(e1, nu3)?.sub(&qpow(-e1, nu3)?);
            let den = qpow(e2, nu3)?.sub(&qpow(-e2, nu3)?);
            v = v.mul(&num).div(&den).ok_or_else(|| Error::Pole("evaluation at t = q^k".into()))?;
        }
    }
    Ok(v)
}

/// Weyl character of the irreducible representation with extremal weight b,
/// evaluated at t^{-rho} by the Weyl formula.
pub fn weyl_character_value<S: Scalar>(rs: &RootSystem, p: &crate::coeffdomain::Params<S>, b: &[i64]) -> Result<S> {
    let n = rs.rank;
    let rho: Weight = vec![1; n];
    let lam: Weight = rs.w0.apply(b).iter().zip(&rho).map(|(x, y)| x + y).collect();
    let mut num = S::zero();
    let mut den = S::zero();
    for w in rs.weyl_group()? {
        let sign = if rs.weyl_length(&w) % 2 == 0 { S::one() } else { S::one().neg() };
        num.add_assign(&sign.mul(&monomial_value(rs, p, &w.apply(&lam), -1, &vec![0; n])));
        den.add_assign(&sign.mul(&monomial_value(rs, p, &w.apply(&rho), -1, &vec![0; n])));
    }
    num.div(&den).ok_or_else(|| Error::Pole("Weyl denominator".into()))
}

/// <p_b, p_b> = prod_a prod_{0<=j<-(alpha,b)} (1-q_a^{j+1}t_a^{-1}X)(1-q_a^j t_a X)/((1-q_a^j X)(1-q_a^{j+1}X)).
pub fn norm_formula<S: Scalar>(rs: &RootSystem, p: &crate::coeffdomain::Params<S>, b: &[i64]) -> Result<S> {
    let zero = vec![0; rs.rank];
    let mut v = S::one();
    for (idx, r) in rs.positive_roots().iter().enumerate() {
        let (qa, ta) = qa_ta(rs, p, r.class);
        let ti = ta.inv().unwrap();
        let x = monomial_value(rs, p, &r.coroot, 1, &zero);
        for j in 0..-rs.root_pair(b, idx) {
            let q0 = x.mul(&p.q0_pow(qa * j));
            let q1 = x.mul(&p.q0_pow(qa * (j + 1)));
            let num = S::one().sub(&q1.mul(&ti)).mul(&S::one().sub(&q0.mul(&ta)));
            let den = S::one().sub(&q0).mul(&S::one().sub(&q1));
            v = v.mul(&num).div(&den).ok_or_else(|| Error::Pole("norm formula".into()))?;
        }
    }
    Ok(v)
}

/// <pi_b, p_b> = x_b(t^{-rho}) prod_a prod_{1<=j<=-(alpha,b)} (1-q_a^j t_a^{-1} X)/(1-q_a^j X).
pub fn pi_norm_formula<S: Scalar>(rs: &RootSystem, p: &crate::coeffdomain::Params<S>, b: &[i64]) -> Result<S> {
    let zero = vec![0; rs.rank];
    let mut v = monomial_value(rs, p, b, -1, &zero);
    for (idx, r) in rs.positive_roots().iter().enumerate() {
        let (qa, ta) = qa_ta(rs, p, r.class);
        let ti = ta.inv().unwrap();
        let x = monomial_value(rs, p, &r.coroot, 1, &zero);
        for j in 1..=-rs.root_pair(b, idx) {
            let qx = x.mul(&p.q0_pow(qa * j));
            v = v.mul(&S::one().sub(&qx.mul(&ti))).div(&S::one().sub(&qx)).ok_or_else(|| Error::Pole("norm formula".into()))?;
        }
    }
    Ok(v)
}
