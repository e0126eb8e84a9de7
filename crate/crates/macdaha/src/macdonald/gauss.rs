//! Conjugation by the Gaussian gamma = q^{sum z_i z_{alpha_i}/2}, used only
//! through its difference relations e(gamma) = x_e^{-1} q^{(e,e)/2} gamma.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use super::*;
use crate::certificate::Certificate;
use crate::coeffdomain::Params;
use crate::daha::Gen;
use crate::normal::{coefficients_at, NormalOperator, Point, RatX};

/// q^{sign (e,e)/2}.
fn half_square<S: Scalar>(rs: &RootSystem, p: &Params<S>, e: &[i64], sign: i64) -> Result<S> {
    let ee = rs.pair(e, e);
    p.q_power(sign * *ee.numer(), 2 * *ee.denom())
}

/// gamma^{-1} H gamma (or gamma H gamma^{-1} when `inverse`): the term h g with
/// translation part e becomes h x_{-e} q^{(e,e)/2} g (resp. h x_e q^{-(e,e)/2} g).
pub fn gaussian_conjugate<S: Scalar>(rs: &RootSystem, p: &Params<S>, op: &NormalOperator<S>, inverse: bool) -> Result<NormalOperator<S>> {
    let sign = if inverse { -1 } else { 1 };
    let mut out = NormalOperator::zero();
    for (g, h) in op.terms.values() {
        let e = g.translation_part();
        let mono: Weight = e.iter().map(|x| -sign * x).collect();
        let f = LaurentPoly::monomial(mono, half_square(rs, p, &e, sign)?);
        out = out.add(&NormalOperator::single(g.clone(), h.mul(&RatX::poly(f))), rs, p);
    }
    Ok(out)
}

fn even_half(e: i64) -> Result<i64> {
    if e % 2 != 0 {
        return Err(Error::Exponent("q^((b_r,b_r)/2) is not a power of q0".into()));
    }
    Ok(e / 2)
}

impl<S: Scalar> Daha<S> {
    /// tau_+(H) = gamma H gamma^{-1} on a word of generators:
    /// T_i -> T_i (i >= 1), T_0 -> X_0^{-1} T_0^{-1}, pi_r -> X_{b_r} q^{-(b_r,b_r)/2} pi_r, X_b -> X_b.
    pub fn tau_plus_word(&self, w: &[Gen]) -> Result<Vec<Gen>> {
        self.tau_word(w, false)
    }

    /// tau_+^{-1}(H) = gamma^{-1} H gamma: T_0 -> T_0^{-1} X_0, pi_r -> X_{-b_r} q^{(b_r,b_r)/2} pi_r.
    pub fn tau_plus_inv_word(&self, w: &[Gen]) -> Result<Vec<Gen>> {
        self.tau_word(w, true)
    }

    fn tau_word(&self, w: &[Gen], inv: bool) -> Result<Vec<Gen>> {
        let rs = &*self.rs;
        let theta = rs.theta_coroot().clone();
        let ntheta: Weight = theta.iter().map(|x| -x).collect();
        let q = 2 * rs.mhat;
        let mut out = Vec::new();
        for g in w {
            match g {
                Gen::T(0) if inv => out.extend([Gen::TInv(0), Gen::X(theta.clone()), Gen::Q(-q)]),
                Gen::TInv(0) if inv => out.extend([Gen::Q(q), Gen::X(ntheta.clone()), Gen::T(0)]),
                Gen::T(0) => out.extend([Gen::X(theta.clone()), Gen::Q(-q), Gen::TInv(0)]),
                Gen::TInv(0) => out.extend([Gen::T(0), Gen::X(ntheta.clone()), Gen::Q(q)]),
                Gen::Pi(k) if *k > 0 => {
                    let br = rs.unit(rs.o_star[k - 1]);
                    let e = even_half(rs.pair_q(&br, &br))?;
                    let (b, e) = if inv { (br.iter().map(|x| -x).collect(), e) } else { (br, -e) };
                    out.extend([Gen::X(b), Gen::Q(e), Gen::Pi(*k)]);
                }
                Gen::PiInv(k) if *k > 0 => {
                    let br = rs.unit(rs.o_star[k - 1]);
                    let e = even_half(rs.pair_q(&br, &br))?;
                    let (b, e) = if inv { (br, -e) } else { (br.iter().map(|x| -x).collect(), e) };
                    out.extend([Gen::PiInv(*k), Gen::X(b), Gen::Q(e)]);
                }
                Gen::Y(b) => {
                    let mut word = Vec::new();
                    for (i, &k) in b.iter().enumerate() {
                        let (r, tw) = rs.translation_word(i);
                        for _ in 0..k.unsigned_abs() {
                            if k > 0 {
                                word.push(Gen::Pi(*r));
                                word.extend(tw.iter().map(|&j| Gen::T(j)));
                            } else {
                                word.extend(tw.iter().rev().map(|&j| Gen::TInv(j)));
                                word.push(Gen::PiInv(*r));
                            }
                        }
                    }
                    out.extend(self.tau_word(&word, inv)?);
                }
                Gen::Pi(_) | Gen::PiInv(_) => {}
                other => out.push(other.clone()),
            }
        }
        Ok(out)
    }

    /// L_f^gamma = gamma^{-1} f(Y) gamma applied to a polynomial.
    pub fn gaussian_twisted_apply(&self, f: &LaurentPoly<S>, g: &LaurentPoly<S>) -> Result<LaurentPoly<S>> {
        let mut out = LaurentPoly::zero();
        for (z, c) in f.terms() {
            let w = self.tau_plus_inv_word(&[Gen::Y(z.clone())])?;
            out.add_assign(&self.apply_word(&w, g).scale(c));
        }
        Ok(out)
    }

    /// phi(L_f^gamma) = L_f^gamma, through [[L f1, f2]] = [[f1, L f2]] for every pair of test functions.
    pub fn gaussian_self_adjoint_check(&self, f: &LaurentPoly<S>, tests: &[LaurentPoly<S>]) -> Result<Certificate> {
        let rs = &self.rs;
        let mut cert = Certificate::new("gaussian-self-adjoint", &rs.label(), json!({"f": f.to_json(), "tests": tests.len()}));
        let images: Vec<LaurentPoly<S>> = tests.iter().map(|g| self.gaussian_twisted_apply(f, g)).collect::<Result<_>>()?;
        for i in 0..tests.len() {
            for j in 0..tests.len() {
                let l = self.fourier_pairing(&images[i], &tests[j]);
                let r = self.fourier_pairing(&tests[i], &images[j]);
                if i == 0 && j == tests.len() - 1 {
                    cert = cert.side("[[L f_0, f_last]]", &l).side("[[f_0, L f_last]]", &r);
                }
                cert = cert.require(l == r);
            }
        }
        Ok(cert)
    }
}

impl<S: Scalar> MacdonaldTable<S> {
    /// L_{p_b}(gamma^{-1}) = q^{-(b,b)/2} x_b(t^rho) p_b gamma^{-1}, i.e.
    /// sum_d c_d tau_+(Y_d)(1) = q^{-(b,b)/2} x_b(t^rho) p_b for p_b = sum_d c_d x_d.
    /// Also checked through the twisted normal form at `points` random points.
    pub fn gaussian_eigen_check(&mut self, b: &[i64], points: usize, seed: u64) -> Result<Certificate> {
        let (rs, p) = (self.d.rs.clone(), self.d.p.clone());
        let n = rs.rank;
        let pb = self.poly(b)?;
        let one = LaurentPoly::one(n);
        let mut lhs = LaurentPoly::zero();
        for (dd, c) in pb.terms() {
            let w = self.d.tau_plus_word(&[Gen::Y(dd.clone())])?;
            lhs.add_assign(&self.d.apply_word(&w, &one).scale(c));
        }
        let k = half_square(&rs, &p, b, -1)?.mul(&monomial_value(&rs, &p, b, 1, &vec![0; n]));
        let rhs = pb.scale(&k);
        let mut cert = Certificate::new("gaussian", &rs.label(), json!({"b": b, "points": points})).side("q^{-(b,b)/2} x_b(t^rho)", &k).require(lhs == rhs);

        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (mut done, mut tries) = (0, 0);
        while done < points {
            tries += 1;
            if tries > 20 * points + 20 {
                return Err(Error::Pole("no generic evaluation point found".into()));
            }
            let pt = Point {
                v: (0..n).map(|_| S::from_rational(&crate::coeffdomain::rat(rng.gen_range(2..200), rng.gen_range(2..50)))).collect(),
            };
            let mut acc = S::zero();
            let mut pole = false;
            for (dd, c) in pb.terms() {
                match coefficients_at(&self.d, &[Gen::Y(dd.clone())], &pt) {
                    Ok(cs) => {
                        for (g, h) in cs.values() {
                            let e = g.translation_part();
                            acc.add_assign(&c.mul(h).mul(&pt.x(&e)).mul(&half_square(&rs, &p, &e, -1)?));
                        }
                    }
                    Err(Error::Pole(_)) => pole = true,
                    Err(e) => return Err(e),
                }
            }
            if pole {
                continue;
            }
            let mut r = S::zero();
            for (z, c) in rhs.terms() {
                r.add_assign(&c.mul(&pt.x(z)));
            }
            cert = cert.require(acc == r);
            done += 1;
        }
        Ok(cert)
    }
}
