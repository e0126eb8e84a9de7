//! Shift operators G_v relating p_b at t to p_{b+r_v} at t q_v, and the
//! evaluation identity they induce.

use serde_json::json;

use super::*;
use crate::certificate::Certificate;
use crate::coeffdomain::Params;

/// y_a(t^{sr rho/2} q^{sb b/2}) = q^{sb (a,b)/2} prod_nu t_nu^{sr (a,rho_nu)/2}.
fn y_half<S: Scalar>(rs: &RootSystem, p: &Params<S>, a: &[i64], sr: i64, sb: i64, b: &[i64]) -> Result<S> {
    let ab = rs.pair(a, b);
    let mut v = p.q_power(sb * *ab.numer(), 2 * *ab.denom())?;
    for c in 0..rs.num_classes() {
        let e = rs.rho_exp(a, c);
        if e % 2 != 0 {
            return Err(Error::Exponent(format!("t^(1/4) in y_a for {a:?}")));
        }
        v = v.mul(&p.s_pow(c, sr * e / 2));
    }
    Ok(v)
}

/// Positive coroots whose class lies in v.
fn coroots_in<'a>(rs: &'a RootSystem, v: &'a [usize]) -> impl Iterator<Item = &'a crate::rootdata::Root> + 'a {
    rs.positive_roots().iter().filter(move |r| v.contains(&r.class))
}

/// f / (c x_a - 1), exact.
fn divide_binomial<S: Scalar>(rs: &RootSystem, f: &LaurentPoly<S>, a: &[i64], c: &S) -> Result<LaurentPoly<S>> {
    let deg = |z: &[i64]| rs.height_functional(z);
    let da = deg(a);
    let ci = c.inv().ok_or_else(|| Error::Pole("zero binomial".into()))?;
    let floor = f.support().map(|z| deg(z)).min().unwrap_or(0) + da;
    let mut rest = f.clone();
    let mut q = LaurentPoly::zero();
    while !rest.is_zero() {
        let (z, v) = rest.terms().max_by_key(|(z, _)| (deg(z), (*z).clone())).map(|(z, v)| (z.clone(), v.clone())).unwrap();
        if deg(&z) < floor {
            return Err(Error::Invariant("shift operator result is not divisible".into()));
        }
        let zq: Weight = z.iter().zip(a).map(|(x, y)| x - y).collect();
        let t = LaurentPoly::monomial(zq.clone(), v.mul(&ci));
        q.add_assign(&t);
        let prod = t.mul(&LaurentPoly::from_terms([(a.to_vec(), c.clone()), (vec![0; rs.rank], S::one().neg())]));
        rest = rest.sub(&prod);
    }
    Ok(q)
}

impl<S: Scalar> MacdonaldTable<S> {
    /// t_nu = 1 for every class outside v.
    pub fn shift_regime_ok(&self, v: &[usize]) -> bool {
        (0..self.rs().num_classes()).all(|c| v.contains(&c) || self.d.p.s[c] == S::one() || self.d.p.s[c] == S::one().neg())
    }

    /// r_v = sum_{nu in v} r_nu.
    pub fn r_v(&self, v: &[usize]) -> Weight {
        let mut r = vec![0; self.rs().rank];
        for &c in v {
            for (x, y) in r.iter_mut().zip(self.rs().r_nu(c)) {
                *x += y;
            }
        }
        r
    }

    fn half_sum(&self, v: &[usize]) -> Result<Weight> {
        let rs = self.rs();
        let mut sigma = vec![0; rs.rank];
        for r in coroots_in(rs, v) {
            for (x, y) in sigma.iter_mut().zip(&r.coroot) {
                *x += y;
            }
        }
        if sigma.iter().any(|x| x % 2 != 0) {
            return Err(Error::Exponent("half-sum of coroots outside the lattice".into()));
        }
        Ok(sigma.iter().map(|x| x / 2).collect())
    }

    /// G_v f = X_v^{-1} Y_v f on symmetric f, with
    /// Y_v = prod t_a^{-1/2} Y_{sum a/2} prod (t_a Y_a^{-1} - 1) and
    /// X_v = prod t_a^{-1/2} x_{-sum a/2} prod (t_a X_a - 1).
    pub fn shift_apply(&self, v: &[usize], f: &LaurentPoly<S>) -> Result<LaurentPoly<S>> {
        let rs = self.d.rs.clone();
        let n = rs.rank;
        let half = self.half_sum(v)?;
        let mut ypoly = LaurentPoly::x(half.clone());
        for r in coroots_in(&rs, v) {
            let na: Weight = r.coroot.iter().map(|x| -x).collect();
            let ta = self.d.p.s_pow(r.class, 2);
            ypoly = ypoly.mul(&LaurentPoly::from_terms([(na, ta), (vec![0; n], S::one().neg())]));
        }
        let mut g = self.d.y_poly(&ypoly, f);
        // the t_a^{-1/2} prefactors cancel; divide by x_{-half}, then by the binomials
        g = g.mul_monomial(&half, &S::one());
        for r in coroots_in(&rs, v) {
            g = divide_binomial(&rs, &g, &r.coroot, &self.d.p.s_pow(r.class, 2))?;
        }
        Ok(g)
    }

    /// g_v(b) = prod_a (y_a(t^{rho/2} q^{-b/2}) - t_a y_a(t^{-rho/2} q^{b/2})).
    pub fn shift_eigen(&self, v: &[usize], b: &[i64]) -> Result<S> {
        let rs = self.rs();
        let mut g = S::one();
        for r in coroots_in(rs, v) {
            let ta = self.d.p.s_pow(r.class, 2);
            let x = y_half(rs, &self.d.p, &r.coroot, 1, -1, b)?.sub(&ta.mul(&y_half(rs, &self.d.p, &r.coroot, -1, 1, b)?));
            g = g.mul(&x);
        }
        Ok(g)
    }

    /// The table at t q_v.
    pub fn shifted_table(&self, v: &[usize]) -> MacdonaldTable<S> {
        let rs = self.d.rs.clone();
        let shift: Vec<i64> = (0..rs.num_classes()).map(|c| v.contains(&c) as i64).collect();
        let p = self.d.p.shifted(&rs.class_nu3, &shift);
        MacdonaldTable::new(Daha::new(rs, p))
    }

    /// G_v p_b = g_v(b) p^{t q_v}_{b + r_v}.
    pub fn shift_check(&mut self, v: &[usize], b: &[i64], shifted: &mut MacdonaldTable<S>) -> Result<Certificate> {
        if !self.shift_regime_ok(v) {
            return Err(Error::Precondition("shift operators need t_nu = 1 outside v".into()));
        }
        let pb = self.poly(b)?;
        let lhs = self.shift_apply(v, &pb)?;
        let g = self.shift_eigen(v, b)?;
        let target: Weight = b.iter().zip(self.r_v(v)).map(|(x, y)| x + y).collect();
        let rhs = if self.rs().is_antidominant(&target) { shifted.poly(&target)?.scale(&g) } else { LaurentPoly::zero() };
        Ok(Certificate::new("shift", &self.rs().label(), json!({"v": v, "b": b}))
            .side("g_v(b)", &g)
            .require(lhs == rhs))
    }

    /// d_v p'((t q_v)^{-rho}) = prod_a (t_a^{-1} y_a(t^{-rho/2} q^{b/2}) - y_a(t^{rho/2} q^{-b/2})) p_b(t^{-rho}),
    /// d_v = prod_a (t_a^{-1} y_a((t q_v)^{-rho/2}) - y_a((t q_v)^{rho/2})) p_{-r_v}(t^{-rho}),
    /// the normalization forced by b = -r_v where p' = 1.  The certificate also reports the
    /// variant with m_{-r_v}(t^{-rho}) in place of p_{-r_v}(t^{-rho}), which agrees with it
    /// exactly when p_{-r_v} = m_{-r_v}.
    pub fn key_lemma_check(&mut self, v: &[usize], b: &[i64], shifted: &mut MacdonaldTable<S>) -> Result<Certificate> {
        let rs = self.d.rs.clone();
        let zero = vec![0; rs.rank];
        let target: Weight = b.iter().zip(self.r_v(v)).map(|(x, y)| x + y).collect();
        if !rs.is_antidominant(&target) {
            return Err(Error::Precondition(format!("b + r_v = {target:?} is not anti-dominant")));
        }
        let pprime = shifted.principal_value(&target)?;
        let mut dv = S::one();
        let mut rhs = self.principal_value(b)?;
        for r in coroots_in(&rs, v) {
            let ti = self.d.p.s_pow(r.class, -2);
            let a = &r.coroot;
            dv = dv.mul(&ti.mul(&y_half(&rs, &shifted.d.p, a, -1, 1, &zero)?).sub(&y_half(&rs, &shifted.d.p, a, 1, 1, &zero)?));
            rhs = rhs.mul(&ti.mul(&y_half(&rs, &self.d.p, a, -1, 1, b)?).sub(&y_half(&rs, &self.d.p, a, 1, -1, b)?));
        }
        let nr: Weight = self.r_v(v).iter().map(|x| -x).collect();
        let m_value = monomial_symmetric(&rs, &nr)?.eval_at(&rs, &self.d.p, -1, &zero);
        let literal = dv.mul(&m_value).mul(&pprime);
        let lhs = dv.mul(&self.principal_value(&nr)?).mul(&pprime);
        Ok(Certificate::new("key-lemma", &rs.label(), json!({"v": v, "b": b}))
            .all_equal(&[("lhs", &lhs), ("rhs", &rhs)])
            .side("lhs with m_{-r_v}", &literal))
    }
}
