//! Certificates for duality, evaluation, norms and the Pieri recurrence.

use std::collections::BTreeMap;

use serde_json::json;

use super::*;
use crate::certificate::Certificate;
use crate::laurent::{mu_constant_term_formula, mu_product};
use crate::normal::{dagger_y_poly_at, Point};

/// <f, g> = <mu f g*> / <mu> at t_nu = q^{2 k_nu / nu}.
pub fn inner_product<S: Scalar>(rs: &RootSystem, p: &crate::coeffdomain::Params<S>, k: &[i64], f: &LaurentPoly<S>, g: &LaurentPoly<S>) -> Result<S> {
    let mu = mu_product(rs, p, k);
    normalized_ct(&mu, &mu.constant_term(), f, g)
}

fn normalized_ct<S: Scalar>(mu: &LaurentPoly<S>, ct: &S, f: &LaurentPoly<S>, g: &LaurentPoly<S>) -> Result<S> {
    let top = mu.constant_term_of_product(&f.mul(&g.star()));
    top.div(ct).ok_or_else(|| Error::Pole("<mu> vanishes".into()))
}

impl<S: Scalar> MacdonaldTable<S> {
    fn label(&self) -> String {
        self.rs().label()
    }

    /// The inner product at t = q^k, with mu kept between calls.
    fn inner(&mut self, k: &[i64], f: &LaurentPoly<S>, g: &LaurentPoly<S>) -> Result<S> {
        if self.mu.as_ref().is_none_or(|(kk, _, _)| kk != k) {
            let mu = mu_product(self.rs(), &self.d.p, k);
            let ct = mu.constant_term();
            self.mu = Some((k.to_vec(), mu, ct));
        }
        let (_, mu, ct) = self.mu.as_ref().expect("mu was just set");
        normalized_ct(mu, ct, f, g)
    }

    /// p_b(t^{-rho} q^c) p_c(t^{-rho}) = [[p_b, p_c]] = p_c(t^{-rho} q^b) p_b(t^{-rho}).
    pub fn duality_pair(&mut self, b: &[i64], c: &[i64]) -> Result<Certificate> {
        let (rs, p) = (self.d.rs.clone(), self.d.p.clone());
        let pb = self.poly(b)?;
        let pc = self.poly(c)?;
        let zero = vec![0; rs.rank];
        let lhs = pb.eval_at(&rs, &p, -1, c).mul(&pc.eval_at(&rs, &p, -1, &zero));
        let rhs = pc.eval_at(&rs, &p, -1, b).mul(&pb.eval_at(&rs, &p, -1, &zero));
        let mid = self.d.fourier_pairing(&pb, &pc);
        Ok(Certificate::new("duality", &self.label(), json!({"b": b, "c": c})).all_equal(&[("lhs", &lhs), ("pairing", &mid), ("rhs", &rhs)]))
    }

    /// Direct p_b(t^{-rho}) against the product formula.
    pub fn evaluation_check(&mut self, b: &[i64]) -> Result<Certificate> {
        let direct = self.principal_value(b)?;
        let formula = evaluation_formula(self.rs(), &self.d.p, b)?;
        Ok(Certificate::new("evaluation", &self.label(), json!({"b": b})).all_equal(&[("direct", &direct), ("formula", &formula)]))
    }

    /// At t = q^k additionally the k-form with its orbit-ratio prefactor.
    pub fn evaluation_check_at_k(&mut self, b: &[i64], k: &[i64]) -> Result<Certificate> {
        let direct = self.principal_value(b)?;
        let formula = evaluation_formula(self.rs(), &self.d.p, b)?;
        let kform = evaluation_at_k(self.rs(), &self.d.p, b, k)?;
        Ok(Certificate::new("evaluation", &self.label(), json!({"b": b, "k": k})).all_equal(&[
            ("direct", &direct),
            ("formula", &formula),
            ("k-form", &kform),
        ]))
    }

    /// <p_b, p_b> by constant terms against the product formula; the table must be at t = q^k.
    pub fn norm_check(&mut self, b: &[i64], k: &[i64]) -> Result<Certificate> {
        let (rs, p) = (self.d.rs.clone(), self.d.p.clone());
        let pb = self.poly(b)?;
        let direct = self.inner(k, &pb, &pb)?;
        let formula = norm_formula(&rs, &p, b)?;
        let pib = self.pi(b)?;
        let pi_p = self.inner(k, &pib, &pb)?;
        let pi_m = self.inner(k, &pib, &monomial_symmetric(&rs, b)?)?;
        let pi_pi = self.inner(k, &pib, &pib)?.mul(&self.principal_value(b)?);
        let pi_formula = pi_norm_formula(&rs, &p, b)?;
        Ok(Certificate::new("norm", &self.label(), json!({"b": b, "k": k}))
            .all_equal(&[("direct", &direct), ("formula", &formula)])
            .all_equal(&[
                ("<pi_b,p_b>", &pi_p),
                ("<pi_b,m_b>", &pi_m),
                ("p_b(t^-rho)<pi_b,pi_b>", &pi_pi),
                ("product", &pi_formula),
            ]))
    }

    /// Coefficients of [L_{m_a}]_dagger = sum_e f_a^e(X) e at t^{sign rho} q^c.
    pub fn lead_coefficients_at(&self, a: &[i64], sign: i64, c: &[i64]) -> Result<BTreeMap<Weight, S>> {
        let m = monomial_symmetric(self.rs(), a)?;
        dagger_y_poly_at(&self.d, &m, &Point::t_rho_q(self.rs(), &self.d.p, sign, c))
    }

    /// Expansion of mbar_a pi_b in {pi_c} by the discretized operator:
    /// Lambda_a pi_b = sum_e f_a^e(q^b t^{-rho}) pi_{b-e}.
    pub fn pieri_recurrence(&self, a: &[i64], b: &[i64]) -> Result<BTreeMap<Weight, S>> {
        let mut out = BTreeMap::new();
        for (e, v) in self.lead_coefficients_at(a, -1, b)? {
            let c: Weight = b.iter().zip(&e).map(|(x, y)| x - y).collect();
            out.insert(c, v);
        }
        Ok(out)
    }

    /// Expansion of mbar_a pi_b in {pi_c} by peeling.
    pub fn pieri_direct(&mut self, a: &[i64], b: &[i64]) -> Result<BTreeMap<Weight, S>> {
        let ma = monomial_symmetric(self.rs(), a)?.bar();
        let f = ma.mul(&self.pi(b)?);
        self.expand_in_pi(&f)
    }

    pub fn pieri(&mut self, a: &[i64], b: &[i64]) -> Result<Certificate> {
        let rec = self.pieri_recurrence(a, b)?;
        let dir = self.pieri_direct(a, b)?;
        let closed = rec.keys().all(|c| self.rs().is_antidominant(c));
        let mut cert = Certificate::new("pieri", &self.label(), json!({"a": a, "b": b})).require(closed && rec == dir);
        for (c, v) in &rec {
            cert = cert.side(&format!("pi_{c:?}"), v);
        }
        Ok(cert)
    }

    /// <pi_b, m_a> = g_a^b(t^{-rho}) = f_a^b(t^rho) <pi_b, pi_b>, with
    /// g_a^b(t^{-rho}) = f_a^b(q^b t^{-rho}) and f_b^b(t^rho) = p_b(t^{-rho}).
    pub fn fmg_check(&mut self, a: &[i64], b: &[i64], k: &[i64]) -> Result<Certificate> {
        let zero = vec![0; self.rs().rank];
        let g = self.lead_coefficients_at(a, -1, b)?.get(b).cloned().unwrap_or_else(S::zero);
        let f = self.lead_coefficients_at(a, 1, &zero)?.get(b).cloned().unwrap_or_else(S::zero);
        self.fmg_check_with(a, b, k, g, f)
    }

    fn fmg_check_with(&mut self, a: &[i64], b: &[i64], k: &[i64], g: S, f: S) -> Result<Certificate> {
        let rs = self.d.rs.clone();
        let pib = self.pi(b)?;
        let pim = self.inner(k, &pib, &monomial_symmetric(&rs, a)?)?;
        let fpi = f.mul(&self.inner(k, &pib, &pib)?);
        let mut cert = Certificate::new("fmg", &self.label(), json!({"a": a, "b": b, "k": k}))
            .all_equal(&[("<pi_b,m_a>", &pim), ("g_a^b(t^-rho)", &g), ("f_a^b(t^rho)<pi_b,pi_b>", &fpi)]);
        if a == b {
            let pv = self.principal_value(b)?;
            cert = cert.all_equal(&[("f_b^b(t^rho)", &f), ("p_b(t^-rho)", &pv)]);
        }
        Ok(cert)
    }

    /// <p_b, m_c> = 0 for c > b, at t = q^k.
    pub fn orthogonality_check(&mut self, b: &[i64], k: &[i64]) -> Result<Certificate> {
        let rs = self.d.rs.clone();
        let pb = self.poly(b)?;
        let mut ok = true;
        let span = rs.dominance_span(b);
        for c in span.iter().skip(1) {
            ok &= self.inner(k, &pb, &monomial_symmetric(&rs, c)?)?.is_zero();
        }
        Ok(Certificate::new("orthogonality", &self.label(), json!({"b": b, "k": k, "against": span.len() - 1})).require(ok))
    }

    /// p_b is fixed by the conjugation q -> 1/q, t -> 1/t.
    pub fn real_check(&mut self, b: &[i64]) -> Result<Certificate> {
        let pb = self.poly(b)?;
        let ok = pb.terms().all(|(_, c)| c.conj() == *c);
        Ok(Certificate::new("real", &self.label(), json!({"b": b})).require(ok))
    }

    /// f(Y) p_b = f(t^rho q^{-b}) p_b for f = m_{-b_i}, applied through the Y-operators,
    /// and Y_{b_i} Y_{b_j} p_b = Y_{b_j} Y_{b_i} p_b.
    pub fn eigenvalue_check(&mut self, b: &[i64]) -> Result<Certificate> {
        let pb = self.poly(b)?;
        let rs = self.d.rs.clone();
        let mut ok = true;
        for f in self.gens.clone() {
            ok &= self.d.y_poly(&f, &pb) == pb.scale(&self.eigenvalue(&f, b));
        }
        for i in 0..rs.rank {
            for j in i + 1..rs.rank {
                let (ui, uj) = (rs.unit(i), rs.unit(j));
                ok &= self.d.y(&ui, &self.d.y(&uj, &pb)) == self.d.y(&uj, &self.d.y(&ui, &pb));
            }
        }
        Ok(Certificate::new("eigenvalue", &self.label(), json!({"b": b})).require(ok))
    }

    /// <mu> by direct expansion against the telescoped product; the table must be at t = q^k.
    pub fn constant_term_check(&self, k: &[i64]) -> Result<Certificate> {
        let (rs, p) = (self.rs(), &self.d.p);
        let direct = mu_product(rs, p, k).constant_term();
        let formula = mu_constant_term_formula(rs, p, k)?;
        Ok(Certificate::new("constant-term", &self.label(), json!({"k": k})).all_equal(&[("direct", &direct), ("formula", &formula)]))
    }

    /// A1 only: m_{-1} p_n = p_{n+1} + A_n p_{n-1} with
    /// A_n = (1-q^n)(1-t^2 q^{n-1}) / ((1-t q^{n-1})(1-t q^n)), for b = -n.
    pub fn three_term_check(&mut self, n: i64) -> Result<Certificate> {
        let rs = self.d.rs.clone();
        if rs.label() != "A1" || n < 1 {
            return Err(Error::Precondition("three-term recurrence is for A1, n >= 1".into()));
        }
        let p = self.d.p.clone();
        let q = p.q0_pow(2 * rs.mhat);
        let t = p.s_pow(0, 2);
        let one = S::one();
        let qn = q.pow(n).expect("q is a unit");
        let qn1 = q.pow(n - 1).expect("q is a unit");
        let num = one.sub(&qn).mul(&one.sub(&t.mul(&t).mul(&qn1)));
        let den = one.sub(&t.mul(&qn1)).mul(&one.sub(&t.mul(&qn)));
        let an = num.div(&den).ok_or_else(|| Error::Pole("three-term coefficient".into()))?;
        let lhs = monomial_symmetric(&rs, &[-1])?.mul(&self.poly(&[-n])?);
        let rhs = self.poly(&[-n - 1])?.add(&self.poly(&[1 - n])?.scale(&an));
        Ok(Certificate::new("three-term", &self.label(), json!({"n": n})).side("A_n", &an).require(lhs == rhs))
    }

    /// At t = q: p_b(t^{-rho}) equals the Weyl character at t^{-rho}.
    pub fn character_check(&mut self, b: &[i64]) -> Result<Certificate> {
        let direct = self.principal_value(b)?;
        let weyl = weyl_character_value(self.rs(), &self.d.p, b)?;
        Ok(Certificate::new("character", &self.label(), json!({"b": b})).all_equal(&[("direct", &direct), ("weyl", &weyl)]))
    }

    /// Matrices of the L_{m_{-b_i}} commute on the span of b.
    pub fn commutativity_check(&self, b: &[i64]) -> Result<Certificate> {
        let rs = self.d.rs.clone();
        let mut mats = Vec::new();
        for i in 0..rs.rank {
            mats.push(self.build_l(&self.gens[i].clone(), b)?.1);
        }
        let mul = |x: &Vec<Vec<S>>, y: &Vec<Vec<S>>| -> Vec<Vec<S>> {
            let n = x.len();
            (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| {
                            let mut s = S::zero();
                            for k in 0..n {
                                s.add_assign(&x[i][k].mul(&y[k][j]));
                            }
                            s
                        })
                        .collect()
                })
                .collect()
        };
        let mut ok = true;
        for i in 0..mats.len() {
            for j in i + 1..mats.len() {
                ok &= mul(&mats[i], &mats[j]) == mul(&mats[j], &mats[i]);
            }
        }
        Ok(Certificate::new("commutativity", &self.label(), json!({"b": b})).require(ok))
    }
}

impl MacdonaldTable<crate::coeffdomain::RatFunc> {
    /// Like `lead_coefficients_at`, but when an intermediate normal-form term has a
    /// pole at the specialized t the values are computed for formal t and then specialized.
    pub fn lead_coefficients_specialized(&self, a: &[i64], sign: i64, c: &[i64]) -> Result<BTreeMap<Weight, crate::coeffdomain::RatFunc>> {
        use crate::coeffdomain::{Params, RatFunc};
        match self.lead_coefficients_at(a, sign, c) {
            Err(Error::Pole(_)) => {
                let rs = self.d.rs.clone();
                let generic = MacdonaldTable::new(Daha::new(rs.clone(), Params::symbolic(&rs)));
                let vals = generic.lead_coefficients_at(a, sign, c)?;
                let mut images = vec![self.d.p.q0.clone()];
                images.extend(self.d.p.s.iter().cloned());
                images.resize(3, RatFunc::one());
                let mut out = BTreeMap::new();
                for (e, v) in vals {
                    let w = v.eval_in(&images).ok_or_else(|| Error::Pole(format!("coefficient at {e:?} after specialization")))?;
                    if !w.is_zero() {
                        out.insert(e, w);
                    }
                }
                Ok(out)
            }
            other => other,
        }
    }

    pub fn fmg_check_at_k(&mut self, a: &[i64], b: &[i64], k: &[i64]) -> Result<Certificate> {
        let zero = vec![0; self.rs().rank];
        let g = self.lead_coefficients_specialized(a, -1, b)?.get(b).cloned().unwrap_or_else(Scalar::zero);
        let f = self.lead_coefficients_specialized(a, 1, &zero)?.get(b).cloned().unwrap_or_else(Scalar::zero);
        self.fmg_check_with(a, b, k, g, f)
    }
}
