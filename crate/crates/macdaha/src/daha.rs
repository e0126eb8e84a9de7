//! The polynomial representation: Demazure-Lusztig operators, pi_r,
//! multiplication by x, and the Y-operators along reduced words.

use std::collections::HashMap;
use std::sync::Arc;

use serde::Serialize;

use crate::coeffdomain::{Params, Scalar};
use crate::laurent::LaurentPoly;
use crate::rootdata::{RootSystem, Weight};

/// Generators of the double affine Hecke algebra as operators.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Gen {
    T(usize),
    TInv(usize),
    X(Weight),
    Y(Weight),
    Pi(usize),
    PiInv(usize),
    /// multiplication by q0^e
    Q(i64),
}

/// Finite linear combination of generator words; a word g1 g2 ... gk acts as g1(g2(...gk(f))).
#[derive(Clone, Debug, PartialEq)]
pub struct OpExpr<S> {
    pub terms: Vec<(S, Vec<Gen>)>,
}

impl<S: Scalar> OpExpr<S> {
    pub fn word(w: Vec<Gen>) -> Self {
        OpExpr { terms: vec![(S::one(), w)] }
    }
    pub fn gen(g: Gen) -> Self {
        Self::word(vec![g])
    }
    pub fn identity() -> Self {
        Self::word(vec![])
    }
    pub fn scalar(c: S) -> Self {
        OpExpr { terms: vec![(c, vec![])] }
    }
    pub fn add(&self, o: &Self) -> Self {
        let mut t = self.terms.clone();
        t.extend(o.terms.iter().cloned());
        OpExpr { terms: t }
    }
    pub fn scale(&self, c: &S) -> Self {
        OpExpr { terms: self.terms.iter().map(|(a, w)| (a.mul(c), w.clone())).collect() }
    }
    /// self * o (o acts first).
    pub fn compose(&self, o: &Self) -> Self {
        let mut t = Vec::new();
        for (a, w) in &self.terms {
            for (b, v) in &o.terms {
                let mut u = w.clone();
                u.extend(v.iter().cloned());
                t.push((a.mul(b), u));
            }
        }
        OpExpr { terms: t }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Involution {
    Phi,
    Epsilon,
    Star,
}

/// The polynomial representation for one root system and parameter set.
#[derive(Clone, Debug)]
pub struct Daha<S> {
    pub rs: Arc<RootSystem>,
    pub p: Params<S>,
    half: Vec<S>,
    diff: Vec<S>,
}

impl<S: Scalar> Daha<S> {
    pub fn new(rs: Arc<RootSystem>, p: Params<S>) -> Self {
        let half: Vec<S> = p.s.clone();
        let diff = half.iter().map(|s| s.sub(&s.inv().expect("s is a unit"))).collect();
        Daha { rs, p, half, diff }
    }

    pub fn n(&self) -> usize {
        self.rs.rank
    }

    /// Length class of the affine node j (node 0 is long).
    pub fn node_class(&self, j: usize) -> usize {
        if j == 0 {
            0
        } else {
            self.rs.node_class[j - 1]
        }
    }

    /// t_j^{1/2}
    pub fn t_half(&self, j: usize) -> &S {
        &self.half[self.node_class(j)]
    }

    /// Demazure-Lusztig operator T_j (or its inverse) on f.
    pub fn t_hat(&self, j: usize, f: &LaurentPoly<S>, inverse: bool) -> LaurentPoly<S> {
        let rs = &*self.rs;
        let cl = self.node_class(j);
        let (s, d) = (&self.half[cl], &self.diff[cl]);
        // Z = X_{a_j} = x_{zv} q0^{zq}; k = (z, alpha_j)
        let (zv, zq): (Weight, i64) = if j == 0 {
            (rs.theta_coroot().iter().map(|x| -x).collect(), 2 * rs.mhat)
        } else {
            (rs.cartan[j - 1].clone(), 0)
        };
        let mut out = LaurentPoly::zero();
        let shifted = |z: &Weight, i: i64| -> Weight { z.iter().zip(&zv).map(|(a, b)| a + i * b).collect() };
        for (z, c) in f.terms() {
            let k = if j == 0 { -rs.root_pair(z, rs.theta) } else { z[j - 1] };
            let qf = |i: i64| -> S {
                if zq == 0 || i == 0 {
                    S::one()
                } else {
                    self.p.q0_pow(i * zq)
                }
            };
            out.add_term(shifted(z, -k), &c.mul(s).mul(&qf(-k)));
            let dc = c.mul(d);
            if k > 0 {
                let ndc = dc.neg();
                for i in 1..=k {
                    out.add_term(shifted(z, -i), &ndc.mul(&qf(-i)));
                }
            } else if k < 0 {
                for i in 0..-k {
                    out.add_term(shifted(z, i), &dc.mul(&qf(i)));
                }
            }
            if inverse {
                out.add_term(z.clone(), &dc.neg());
            }
        }
        out
    }

    pub fn pi(&self, k: usize, f: &LaurentPoly<S>, inverse: bool) -> LaurentPoly<S> {
        if k == 0 {
            return f.clone();
        }
        let g = if inverse { self.rs.pis[k].inverse() } else { self.rs.pis[k].clone() };
        f.act(&self.rs, &self.p, &g)
    }

    pub fn x_mul(&self, b: &[i64], f: &LaurentPoly<S>) -> LaurentPoly<S> {
        f.mul_monomial(b, &S::one())
    }

    /// Y_{b_i} = T_{b_i} = pi_r T_{j_1} ... T_{j_l}, or its inverse.
    pub fn y_fundamental(&self, i: usize, f: &LaurentPoly<S>, inverse: bool) -> LaurentPoly<S> {
        let (r, word) = self.rs.translation_word(i);
        let mut g = f.clone();
        if inverse {
            g = self.pi(*r, &g, true);
            for &j in word {
                g = self.t_hat(j, &g, true);
            }
        } else {
            for &j in word.iter().rev() {
                g = self.t_hat(j, &g, false);
            }
            g = self.pi(*r, &g, false);
        }
        g
    }

    pub fn y(&self, b: &[i64], f: &LaurentPoly<S>) -> LaurentPoly<S> {
        let mut g = f.clone();
        for (i, &k) in b.iter().enumerate() {
            for _ in 0..k.unsigned_abs() {
                g = self.y_fundamental(i, &g, k < 0);
            }
        }
        g
    }

    /// Apply a polynomial in y: sum_c coef_c Y_c (f).
    pub fn y_poly(&self, h: &LaurentPoly<S>, f: &LaurentPoly<S>) -> LaurentPoly<S> {
        // Y_c f along the path 0 -> (c_1, 0, ..) -> (c_1, c_2, 0, ..) -> c, sharing prefixes
        let n = self.n();
        let mut memo: HashMap<Weight, LaurentPoly<S>> = HashMap::new();
        memo.insert(vec![0; n], f.clone());
        let mut out = LaurentPoly::zero();
        for (c, coef) in h.terms() {
            let mut node = vec![0; n];
            for i in 0..n {
                for _ in 0..c[i].unsigned_abs() {
                    let prev = node.clone();
                    node[i] += c[i].signum();
                    if !memo.contains_key(&node) {
                        let g = self.y_fundamental(i, &memo[&prev], c[i] < 0);
                        memo.insert(node.clone(), g);
                    }
                }
            }
            out.add_assign(&memo[c].scale(coef));
        }
        out
    }

    pub fn apply_gen(&self, g: &Gen, f: &LaurentPoly<S>) -> LaurentPoly<S> {
        match g {
            Gen::T(j) => self.t_hat(*j, f, false),
            Gen::TInv(j) => self.t_hat(*j, f, true),
            Gen::X(b) => self.x_mul(b, f),
            Gen::Y(b) => self.y(b, f),
            Gen::Pi(k) => self.pi(*k, f, false),
            Gen::PiInv(k) => self.pi(*k, f, true),
            Gen::Q(e) => f.scale(&self.p.q0_pow(*e)),
        }
    }

    pub fn apply_word(&self, w: &[Gen], f: &LaurentPoly<S>) -> LaurentPoly<S> {
        let mut g = f.clone();
        for x in w.iter().rev() {
            g = self.apply_gen(x, &g);
        }
        g
    }

    pub fn apply(&self, e: &OpExpr<S>, f: &LaurentPoly<S>) -> LaurentPoly<S> {
        let mut out = LaurentPoly::zero();
        for (c, w) in &e.terms {
            out.add_assign(&self.apply_word(w, f).scale(c));
        }
        out
    }

    /// [[H]] = (H(1))(t^{-rho}).
    pub fn bracket_expr(&self, e: &OpExpr<S>) -> S {
        let one = LaurentPoly::one(self.n());
        self.apply(e, &one).eval_at(&self.rs, &self.p, -1, &vec![0; self.n()])
    }

    /// Fourier pairing [[f, g]] = (fbar(Y) g)(t^{-rho}) with fbar(x) = f(x^{-1}).
    pub fn fourier_pairing(&self, f: &LaurentPoly<S>, g: &LaurentPoly<S>) -> S {
        self.y_poly(&f.bar(), g).eval_at(&self.rs, &self.p, -1, &vec![0; self.n()])
    }

    /// Word for T_w^{-1} given a reduced word of w in finite nodes (affine indices).
    fn t_inverse_word(word: &[usize]) -> Vec<Gen> {
        word.iter().rev().map(|&j| Gen::TInv(j)).collect()
    }

    /// Reduced word of s_theta in affine indices.
    pub fn s_theta_word(&self) -> Vec<usize> {
        let w = self.rs.root_reflection(self.rs.theta);
        self.rs.weyl_word(&w).into_iter().map(|i| i + 1).collect()
    }

    /// Rewrite T_0^{+-1} and pi_r^{+-1} through X, Y and T_i (i >= 1):
    /// T_0 = Y_theta T_{s_theta}^{-1}, pi_r = Y_{b_r} T_{w}^{-1} where Y_{b_r} = pi_r T_w.
    pub fn expand_word(&self, w: &[Gen]) -> Vec<Gen> {
        let mut out = Vec::new();
        let st = self.s_theta_word();
        let theta = self.rs.theta_coroot().clone();
        for g in w {
            match g {
                Gen::T(0) => {
                    out.push(Gen::Y(theta.clone()));
                    out.extend(Self::t_inverse_word(&st));
                }
                Gen::TInv(0) => {
                    out.extend(st.iter().map(|&j| Gen::T(j)));
                    out.push(Gen::Y(theta.iter().map(|x| -x).collect()));
                }
                Gen::Pi(k) if *k > 0 => {
                    let r = self.rs.o_star[k - 1];
                    let (_, word) = self.rs.translation_word(r);
                    out.push(Gen::Y(self.rs.unit(r)));
                    out.extend(Self::t_inverse_word(word));
                }
                Gen::PiInv(k) if *k > 0 => {
                    let r = self.rs.o_star[k - 1];
                    let (_, word) = self.rs.translation_word(r);
                    out.extend(word.iter().map(|&j| Gen::T(j)));
                    out.push(Gen::Y(self.rs.unit(r).iter().map(|x| -x).collect()));
                }
                Gen::Pi(_) | Gen::PiInv(_) => {}
                other => out.push(other.clone()),
            }
        }
        out
    }

    /// Apply phi, epsilon or star to an expression.
    pub fn involution(&self, which: Involution, e: &OpExpr<S>) -> OpExpr<S> {
        let neg = |b: &Weight| -> Weight { b.iter().map(|x| -x).collect() };
        let mut terms = Vec::new();
        for (c, w) in &e.terms {
            let (coef, word): (S, Vec<Gen>) = match which {
                Involution::Phi => {
                    let w = self.expand_word(w);
                    let img = w
                        .iter()
                        .rev()
                        .map(|g| match g {
                            Gen::X(b) => Gen::Y(neg(b)),
                            Gen::Y(b) => Gen::X(neg(b)),
                            other => other.clone(),
                        })
                        .collect();
                    (c.clone(), img)
                }
                Involution::Epsilon => {
                    let w = self.expand_word(w);
                    let img = w
                        .iter()
                        .map(|g| match g {
                            Gen::X(b) => Gen::Y(b.clone()),
                            Gen::Y(b) => Gen::X(b.clone()),
                            Gen::T(j) => Gen::TInv(*j),
                            Gen::TInv(j) => Gen::T(*j),
                            Gen::Q(e) => Gen::Q(-e),
                            other => other.clone(),
                        })
                        .collect();
                    (c.conj(), img)
                }
                Involution::Star => {
                    let img = w
                        .iter()
                        .rev()
                        .map(|g| match g {
                            Gen::X(b) => Gen::X(neg(b)),
                            Gen::Y(b) => Gen::Y(neg(b)),
                            Gen::T(j) => Gen::TInv(*j),
                            Gen::TInv(j) => Gen::T(*j),
                            Gen::Pi(k) => Gen::PiInv(*k),
                            Gen::PiInv(k) => Gen::Pi(*k),
                            Gen::Q(e) => Gen::Q(-e),
                        })
                        .collect();
                    (c.conj(), img)
                }
            };
            terms.push((coef, word));
        }
        OpExpr { terms }
    }
}

/// Outcome of one family of relations.
#[derive(Clone, Debug, Serialize)]
pub struct RelationCheck {
    pub id: String,
    pub detail: String,
    pub instances: usize,
    pub pass: bool,
}

/// Every weight with all coordinates in [-cap, cap].
pub fn weight_box(n: usize, cap: i64) -> Vec<Weight> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|w: Weight| {
                (-cap..=cap).map(move |k| {
                    let mut v = w.clone();
                    v.push(k);
                    v
                })
            })
            .collect();
    }
    out
}

impl<S: Scalar> Daha<S> {
    /// <alpha_i^vee, alpha_j> for affine nodes.
    pub fn affine_cartan(&self, i: usize, j: usize) -> i64 {
        let rs = &*self.rs;
        match (i, j) {
            (0, 0) => 2,
            (0, j) => -rs.theta_coroot()[j - 1],
            (i, 0) => -rs.root_pair(&rs.cartan[i - 1], rs.theta),
            (i, j) => rs.cartan[i - 1][j - 1],
        }
    }

    /// Braid order m_ij of affine nodes; None when infinite.
    pub fn braid_order(&self, i: usize, j: usize) -> Option<usize> {
        match self.affine_cartan(i, j) * self.affine_cartan(j, i) {
            0 => Some(2),
            1 => Some(3),
            2 => Some(4),
            3 => Some(6),
            _ => None,
        }
    }

    fn same_on(&self, lhs: &[Gen], rhs: &[Gen], tests: &[LaurentPoly<S>]) -> bool {
        tests.iter().all(|f| self.apply_word(lhs, f) == self.apply_word(rhs, f))
    }

    /// Check the defining relations on all monomials with coordinates in [-cap, cap];
    /// X_b in cross relations ranges over the box of radius min(cap, 1).
    pub fn verify_defining_relations(&self, cap: i64) -> Vec<RelationCheck> {
        let n = self.n();
        let rs = self.rs.clone();
        let tests: Vec<LaurentPoly<S>> = weight_box(n, cap).into_iter().map(LaurentPoly::x).collect();
        let xs = weight_box(n, cap.min(1));
        let mut out = Vec::new();
        let mut push = |id: &str, detail: String, inst: usize, pass: bool| {
            out.push(RelationCheck { id: id.into(), detail, instances: inst, pass });
        };

        // (o) quadratic
        for j in 0..=n {
            let s = self.t_half(j).clone();
            let si = s.inv().unwrap();
            let ok = tests.iter().all(|f| {
                let a = self.t_hat(j, f, false);
                let lhs = self.t_hat(j, &a.add(&f.scale(&si)), false).sub(&a.add(&f.scale(&si)).scale(&s));
                lhs.is_zero()
            });
            push("quadratic", format!("T{j}"), tests.len(), ok);
        }

        // (i) braid
        for i in 0..=n {
            for j in i + 1..=n {
                let Some(m) = self.braid_order(i, j) else { continue };
                let l: Vec<Gen> = (0..m).map(|k| Gen::T(if k % 2 == 0 { i } else { j })).collect();
                let r: Vec<Gen> = (0..m).map(|k| Gen::T(if k % 2 == 0 { j } else { i })).collect();
                push("braid", format!("T{i},T{j} m={m}"), tests.len(), self.same_on(&l, &r, &tests));
            }
        }

        // (ii) pi_r T_i pi_r^{-1} = T_{pi_r(i)}
        for k in 1..rs.pis.len() {
            for i in 0..=n {
                let j = rs.pi_perm[k][i];
                let l = [Gen::Pi(k), Gen::T(i), Gen::PiInv(k)];
                push("pi-T", format!("pi{k} T{i} pi{k}^-1 = T{j}"), tests.len(), self.same_on(&l, &[Gen::T(j)], &tests));
            }
        }

        // (iii)-(v) T-X cross relations
        for i in 0..=n {
            let mut inst = (0, 0);
            let mut ok = (true, true);
            for b in &xs {
                let pairing = if i == 0 { -rs.root_pair(b, rs.theta) } else { b[i - 1] };
                if pairing == 1 {
                    let l = [Gen::T(i), Gen::X(b.clone()), Gen::T(i)];
                    let r = if i == 0 {
                        let c: Weight = b.iter().zip(rs.theta_coroot()).map(|(x, t)| x + t).collect();
                        vec![Gen::X(c), Gen::Q(-2 * rs.mhat)]
                    } else {
                        let c: Weight = b.iter().zip(&rs.cartan[i - 1]).map(|(x, a)| x - a).collect();
                        vec![Gen::X(c)]
                    };
                    inst.0 += tests.len();
                    ok.0 &= self.same_on(&l, &r, &tests);
                } else if pairing == 0 {
                    let l = [Gen::T(i), Gen::X(b.clone())];
                    let r = [Gen::X(b.clone()), Gen::T(i)];
                    inst.1 += tests.len();
                    ok.1 &= self.same_on(&l, &r, &tests);
                }
            }
            push("TXT", format!("T{i} X_b T{i} with (b,alpha_{i})=1"), inst.0, ok.0);
            push("TX-commute", format!("T{i} X_b with (b,alpha_{i})=0"), inst.1, ok.1);
        }

        // (vi) pi_r X_b pi_r^{-1} = X_{pi_r(b)}
        for k in 1..rs.pis.len() {
            let g = &rs.pis[k];
            let ok = xs.iter().all(|b| {
                let img = LaurentPoly::x(b.clone()).act(&rs, &self.p, g);
                let (c, coef) = img.terms().next().map(|(c, v)| (c.clone(), v.clone())).unwrap();
                tests.iter().all(|f| {
                    let l = self.apply_word(&[Gen::Pi(k), Gen::X(b.clone()), Gen::PiInv(k)], f);
                    l == self.x_mul(&c, f).scale(&coef)
                })
            });
            push("pi-X", format!("pi{k} X_b pi{k}^-1"), xs.len() * tests.len(), ok);
        }

        // Y-operators commute and satisfy the finite cross relations
        let ys = weight_box(n, 1);
        let small: Vec<LaurentPoly<S>> = weight_box(n, cap.min(1)).into_iter().map(LaurentPoly::x).collect();
        let mut ok = true;
        for i in 0..n {
            for j in i + 1..n {
                ok &= self.same_on(&[Gen::Y(rs.unit(i)), Gen::Y(rs.unit(j))], &[Gen::Y(rs.unit(j)), Gen::Y(rs.unit(i))], &small);
            }
        }
        push("Y-commute", "Y_i Y_j = Y_j Y_i".into(), small.len() * n * n.saturating_sub(1) / 2, ok);
        let mut ok = true;
        let mut inst = 0;
        for i in 1..=n {
            for b in &ys {
                if b[i - 1] == 1 {
                    let c: Weight = b.iter().zip(&rs.cartan[i - 1]).map(|(x, a)| x - a).collect();
                    ok &= self.same_on(&[Gen::TInv(i), Gen::Y(b.clone()), Gen::TInv(i)], &[Gen::Y(c)], &small);
                    inst += small.len();
                }
            }
        }
        push("TYT", "T_i^-1 Y_b T_i^-1 = Y_b Y_{a_i}^-1".into(), inst, ok);
        out
    }
}
