//! Operators in the normal form sum_g h_g(X) g, g in the extended affine
//! Weyl group, with h_g rational in X with binomial denominators.

use std::collections::BTreeMap;

use crate::coeffdomain::{Params, Scalar};
use crate::daha::{Daha, Gen, OpExpr};
use crate::error::{Error, Result};
use crate::laurent::{monomial_value, LaurentPoly};
use crate::rootdata::{AffineElement, RootSystem, Weight};

/// num / prod (X_a q0^e - 1)^m over positive coroots a.
#[derive(Clone, Debug, PartialEq)]
pub struct RatX<S> {
    pub num: LaurentPoly<S>,
    /// (positive root index, q0-exponent) -> multiplicity
    pub den: BTreeMap<(usize, i64), u32>,
}

fn binomial<S: Scalar>(rs: &RootSystem, p: &Params<S>, root: usize, e: i64) -> LaurentPoly<S> {
    let n = rs.rank;
    LaurentPoly::from_terms([(rs.roots[root].coroot.clone(), p.q0_pow(e)), (vec![0; n], S::one().neg())])
}

impl<S: Scalar> RatX<S> {
    pub fn poly(num: LaurentPoly<S>) -> Self {
        RatX { num, den: BTreeMap::new() }
    }

    pub fn zero() -> Self {
        Self::poly(LaurentPoly::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// 1 / (x_a q0^e - 1) for any coroot a.
    pub fn inv_binomial(rs: &RootSystem, p: &Params<S>, a: &[i64], e: i64) -> Result<Self> {
        let n = rs.rank;
        let idx = rs.root_of_coroot(a).ok_or_else(|| Error::Invariant(format!("{a:?} is not a coroot")))?;
        if rs.is_positive(idx) {
            let mut den = BTreeMap::new();
            den.insert((idx, e), 1);
            Ok(RatX { num: LaurentPoly::one(n), den })
        } else {
            // 1/(x_{-c} q^e - 1) = -x_c q^{-e} / (x_c q^{-e} - 1)
            let c: Weight = a.iter().map(|x| -x).collect();
            let pi = rs.root_of_coroot(&c).unwrap();
            let mut den = BTreeMap::new();
            den.insert((pi, -e), 1);
            Ok(RatX { num: LaurentPoly::monomial(c, p.q0_pow(-e).neg()), den })
        }
    }

    pub fn scale(&self, c: &S) -> Self {
        RatX { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn mul_poly(&self, f: &LaurentPoly<S>) -> Self {
        RatX { num: self.num.mul(f), den: self.den.clone() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut den = self.den.clone();
        for (k, m) in &o.den {
            *den.entry(*k).or_insert(0) += m;
        }
        RatX { num: self.num.mul(&o.num), den }
    }

    fn lift(&self, rs: &RootSystem, p: &Params<S>, den: &BTreeMap<(usize, i64), u32>) -> LaurentPoly<S> {
        let mut num = self.num.clone();
        for (k, m) in den {
            let have = self.den.get(k).copied().unwrap_or(0);
            for _ in have..*m {
                num = num.mul(&binomial(rs, p, k.0, k.1));
            }
        }
        num
    }

    pub fn add(&self, o: &Self, rs: &RootSystem, p: &Params<S>) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let mut den = self.den.clone();
        for (k, m) in &o.den {
            let e = den.entry(*k).or_insert(0);
            *e = (*e).max(*m);
        }
        let num = self.lift(rs, p, &den).add(&o.lift(rs, p, &den));
        if num.is_zero() {
            return Self::zero();
        }
        RatX { num, den }
    }

    pub fn sub(&self, o: &Self, rs: &RootSystem, p: &Params<S>) -> Self {
        self.add(&o.scale(&S::one().neg()), rs, p)
    }

    pub fn equals(&self, o: &Self, rs: &RootSystem, p: &Params<S>) -> bool {
        self.sub(o, rs, p).is_zero()
    }

    /// g(h) for an affine Weyl group element g.
    pub fn act(&self, rs: &RootSystem, p: &Params<S>, g: &AffineElement) -> Self {
        let mut out = RatX::poly(self.num.act(rs, p, g));
        for ((idx, e), m) in &self.den {
            let a = &rs.roots[*idx].coroot;
            let e2 = e - rs.pair_q(a, &g.b);
            let inv = RatX::inv_binomial(rs, p, &g.w.apply(a), e2).expect("coroot image");
            for _ in 0..*m {
                out = out.mul(&inv);
            }
        }
        out
    }

    /// Value at t^{sign rho} q^c.
    pub fn eval_at(&self, rs: &RootSystem, p: &Params<S>, sign: i64, c: &[i64]) -> Result<S> {
        let mut d = S::one();
        for ((idx, e), m) in &self.den {
            let v = monomial_value(rs, p, &rs.roots[*idx].coroot, sign, c).mul(&p.q0_pow(*e)).sub(&S::one());
            for _ in 0..*m {
                d = d.mul(&v);
            }
        }
        let nv = self.num.eval_at(rs, p, sign, c);
        nv.div(&d).ok_or_else(|| Error::Pole(format!("denominator vanishes at t^({sign}rho)q^{c:?}")))
    }

    /// Limit as x_z -> 0 for every z of positive degree (z, 2rho).
    pub fn limit(&self, rs: &RootSystem) -> Result<S> {
        let mut v = S::zero();
        for (z, c) in self.num.terms() {
            let deg: i64 = (0..rs.npos).map(|i| rs.root_pair(z, i)).sum();
            if deg < 0 {
                return Err(Error::Pole(format!("limit diverges through x^{z:?}")));
            }
            if deg == 0 {
                v.add_assign(c);
            }
        }
        let m: u32 = self.den.values().sum();
        Ok(if m % 2 == 1 { v.neg() } else { v })
    }
}

fn key(g: &AffineElement) -> (Weight, Vec<i64>) {
    (g.translation_part(), g.w.matrix().to_vec())
}

/// sum_g h_g(X) g.
#[derive(Clone, Debug)]
pub struct NormalOperator<S> {
    pub terms: BTreeMap<(Weight, Vec<i64>), (AffineElement, RatX<S>)>,
}

impl<S: Scalar> NormalOperator<S> {
    pub fn zero() -> Self {
        NormalOperator { terms: BTreeMap::new() }
    }

    pub fn single(g: AffineElement, h: RatX<S>) -> Self {
        let mut t = BTreeMap::new();
        if !h.is_zero() {
            t.insert(key(&g), (g, h));
        }
        NormalOperator { terms: t }
    }

    pub fn identity(n: usize) -> Self {
        Self::single(AffineElement::identity(n), RatX::poly(LaurentPoly::one(n)))
    }

    pub fn add(&self, o: &Self, rs: &RootSystem, p: &Params<S>) -> Self {
        let mut t = self.terms.clone();
        for (k, (g, h)) in &o.terms {
            match t.get_mut(k) {
                Some((_, e)) => *e = e.add(h, rs, p),
                None => {
                    t.insert(k.clone(), (g.clone(), h.clone()));
                }
            }
        }
        t.retain(|_, (_, h)| !h.is_zero());
        NormalOperator { terms: t }
    }

    pub fn scale(&self, c: &S) -> Self {
        let mut t = self.terms.clone();
        for (_, h) in t.values_mut() {
            *h = h.scale(c);
        }
        t.retain(|_, (_, h)| !h.is_zero());
        NormalOperator { terms: t }
    }

    /// self * o.
    pub fn compose(&self, o: &Self, rs: &RootSystem, p: &Params<S>) -> Self {
        let mut out = Self::zero();
        for (g1, h1) in self.terms.values() {
            for (g2, h2) in o.terms.values() {
                let h = h1.mul(&h2.act(rs, p, g1));
                out = out.add(&Self::single(g1.compose(g2), h), rs, p);
            }
        }
        out
    }

    pub fn from_gen(d: &Daha<S>, g: &Gen) -> Result<Self> {
        let rs = &*d.rs;
        let p = &d.p;
        let n = rs.rank;
        Ok(match g {
            Gen::T(j) | Gen::TInv(j) => {
                let j = *j;
                let s = d.t_half(j).clone();
                let si = s.inv().unwrap();
                let diff = s.sub(&si);
                let (zv, zq): (Weight, i64) = if j == 0 {
                    (rs.theta_coroot().iter().map(|x| -x).collect(), 2 * rs.mhat)
                } else {
                    (rs.cartan[j - 1].clone(), 0)
                };
                let inv = RatX::inv_binomial(rs, p, &zv, zq)?;
                let sj = if j == 0 { rs.affine_simple(0) } else { AffineElement::finite(rs.simple_reflection(j - 1)) };
                // T = s + diff/(Z-1) on s_j, -diff/(Z-1) on id
                let on_s = RatX::poly(LaurentPoly::constant(n, s.clone())).add(&inv.scale(&diff), rs, p);
                let mut on_id = inv.scale(&diff.neg());
                if matches!(g, Gen::TInv(_)) {
                    on_id = on_id.sub(&RatX::poly(LaurentPoly::constant(n, diff)), rs, p);
                }
                Self::single(sj, on_s).add(&Self::single(AffineElement::identity(n), on_id), rs, p)
            }
            Gen::X(b) => Self::single(AffineElement::identity(n), RatX::poly(LaurentPoly::x(b.clone()))),
            Gen::Pi(k) => Self::single(rs.pis[*k].clone(), RatX::poly(LaurentPoly::one(n))),
            Gen::PiInv(k) => Self::single(rs.pis[*k].inverse(), RatX::poly(LaurentPoly::one(n))),
            Gen::Q(e) => Self::identity(n).scale(&p.q0_pow(*e)),
            Gen::Y(b) => {
                let mut out = Self::identity(n);
                for (i, &k) in b.iter().enumerate() {
                    let y = Self::y_fundamental(d, i, k < 0)?;
                    for _ in 0..k.unsigned_abs() {
                        out = out.compose(&y, rs, p);
                    }
                }
                out
            }
        })
    }

    fn y_fundamental(d: &Daha<S>, i: usize, inverse: bool) -> Result<Self> {
        let rs = &*d.rs;
        let (r, word) = rs.translation_word(i);
        let mut gens = vec![Gen::Pi(*r)];
        gens.extend(word.iter().map(|&j| Gen::T(j)));
        if inverse {
            gens = gens
                .into_iter()
                .rev()
                .map(|g| match g {
                    Gen::Pi(k) => Gen::PiInv(k),
                    Gen::T(j) => Gen::TInv(j),
                    other => other,
                })
                .collect();
        }
        Self::from_word(d, &gens)
    }

    pub fn from_word(d: &Daha<S>, w: &[Gen]) -> Result<Self> {
        let mut out = Self::identity(d.n());
        for g in w {
            out = out.compose(&Self::from_gen(d, g)?, &d.rs, &d.p);
        }
        Ok(out)
    }

    pub fn from_expr(d: &Daha<S>, e: &OpExpr<S>) -> Result<Self> {
        let mut out = Self::zero();
        for (c, w) in &e.terms {
            out = out.add(&Self::from_word(d, w)?.scale(c), &d.rs, &d.p);
        }
        Ok(out)
    }

    /// sum_c coef_c Y_c for a polynomial in y.
    pub fn from_y_poly(d: &Daha<S>, f: &LaurentPoly<S>) -> Result<Self> {
        let mut out = Self::zero();
        for (b, c) in f.terms() {
            out = out.add(&Self::from_gen(d, &Gen::Y(b.clone()))?.scale(c), &d.rs, &d.p);
        }
        Ok(out)
    }

    /// Apply to f; the result is a rational function.
    pub fn apply(&self, rs: &RootSystem, p: &Params<S>, f: &LaurentPoly<S>) -> RatX<S> {
        let mut out = RatX::zero();
        for (g, h) in self.terms.values() {
            out = out.add(&h.mul_poly(&f.act(rs, p, g)), rs, p);
        }
        out
    }

    /// [H]_dagger: the restriction to symmetric functions, sum_b (sum_w h_{b,w}) b.
    pub fn dagger(&self, rs: &RootSystem, p: &Params<S>) -> BTreeMap<Weight, RatX<S>> {
        let mut out: BTreeMap<Weight, RatX<S>> = BTreeMap::new();
        for ((b, _), (_, h)) in &self.terms {
            let e = out.entry(b.clone()).or_insert_with(RatX::zero);
            *e = e.add(h, rs, p);
        }
        out.retain(|_, h| !h.is_zero());
        out
    }

    /// The operator [H]_dagger as a normal operator with translations only.
    pub fn dagger_operator(&self, rs: &RootSystem, p: &Params<S>) -> Self {
        let mut out = Self::zero();
        for (b, h) in self.dagger(rs, p) {
            out = out.add(&Self::single(AffineElement::translation(b), h), rs, p);
        }
        out
    }

    /// [[H]] = sum h_{b,w}(t^{-rho}).
    pub fn bracket(&self, rs: &RootSystem, p: &Params<S>) -> Result<S> {
        let mut v = S::zero();
        for (_, h) in self.terms.values() {
            v.add_assign(&h.eval_at(rs, p, -1, &vec![0; rs.rank])?);
        }
        Ok(v)
    }

    /// Harish-Chandra image: sum_b h_{b,w}(limit) y_b.
    pub fn harish_chandra(&self, rs: &RootSystem) -> Result<LaurentPoly<S>> {
        let mut out = LaurentPoly::zero();
        for ((b, _), (_, h)) in &self.terms {
            out.add_term(b.clone(), &h.limit(rs)?);
        }
        Ok(out)
    }
}

/// A point of the torus given by the values x_{b_i}(P).
#[derive(Clone, Debug, PartialEq)]
pub struct Point<S> {
    pub v: Vec<S>,
}

impl<S: Scalar> Point<S> {
    /// t^{sign rho} q^c.
    pub fn t_rho_q(rs: &RootSystem, p: &Params<S>, sign: i64, c: &[i64]) -> Self {
        Point { v: (0..rs.rank).map(|i| monomial_value(rs, p, &rs.unit(i), sign, c)).collect() }
    }

    pub fn x(&self, z: &[i64]) -> S {
        let mut r = S::one();
        for (vi, &k) in self.v.iter().zip(z) {
            if k != 0 {
                r = r.mul(&vi.pow(k).expect("point on the torus"));
            }
        }
        r
    }

    /// The point P' with x_z(P') = (g x_z)(P).
    pub fn image(&self, rs: &RootSystem, p: &Params<S>, g: &AffineElement) -> Self {
        let v = (0..rs.rank)
            .map(|i| {
                let bi = rs.unit(i);
                self.x(&g.w.apply(&bi)).mul(&p.q0_pow(-rs.pair_q(&bi, &g.b)))
            })
            .collect();
        Point { v }
    }
}

impl<S: Scalar> RatX<S> {
    pub fn eval_point(&self, rs: &RootSystem, p: &Params<S>, pt: &Point<S>) -> Result<S> {
        let mut d = S::one();
        for ((idx, e), m) in &self.den {
            let v = pt.x(&rs.roots[*idx].coroot).mul(&p.q0_pow(*e)).sub(&S::one());
            for _ in 0..*m {
                d = d.mul(&v);
            }
        }
        let mut nv = S::zero();
        for (z, c) in self.num.terms() {
            nv.add_assign(&c.mul(&pt.x(z)));
        }
        nv.div(&d).ok_or_else(|| Error::Pole("denominator vanishes at the evaluation point".into()))
    }
}

/// The normal-form coefficients h_g(P) of a word of generators at one point,
/// computed without forming the rational functions.
pub fn coefficients_at<S: Scalar>(d: &Daha<S>, w: &[Gen], pt: &Point<S>) -> Result<BTreeMap<(Weight, Vec<i64>), (AffineElement, S)>> {
    let rs = &*d.rs;
    let p = &d.p;
    let mut flat = Vec::new();
    for g in w {
        match g {
            Gen::Y(b) => {
                for (i, &k) in b.iter().enumerate() {
                    let (r, word) = rs.translation_word(i);
                    for _ in 0..k.unsigned_abs() {
                        if k > 0 {
                            flat.push(Gen::Pi(*r));
                            flat.extend(word.iter().map(|&j| Gen::T(j)));
                        } else {
                            flat.extend(word.iter().rev().map(|&j| Gen::TInv(j)));
                            flat.push(Gen::PiInv(*r));
                        }
                    }
                }
            }
            other => flat.push(other.clone()),
        }
    }
    let mut cache: Vec<(Gen, NormalOperator<S>)> = Vec::new();
    let mut state: BTreeMap<(Weight, Vec<i64>), (AffineElement, S)> = BTreeMap::new();
    let id = AffineElement::identity(rs.rank);
    state.insert(key(&id), (id, S::one()));
    for g in &flat {
        if !cache.iter().any(|(h, _)| h == g) {
            cache.push((g.clone(), NormalOperator::from_gen(d, g)?));
        }
        let op = &cache.iter().find(|(h, _)| h == g).unwrap().1;
        let mut next: BTreeMap<(Weight, Vec<i64>), (AffineElement, S)> = BTreeMap::new();
        for (g1, v1) in state.values() {
            let img = pt.image(rs, p, g1);
            for (g2, h2) in op.terms.values() {
                let v = v1.mul(&h2.eval_point(rs, p, &img)?);
                let g = g1.compose(g2);
                match next.get_mut(&key(&g)) {
                    Some((_, acc)) => acc.add_assign(&v),
                    None => {
                        next.insert(key(&g), (g, v));
                    }
                }
            }
        }
        next.retain(|_, (_, v)| !v.is_zero());
        state = next;
    }
    Ok(state)
}

/// Values at P of the coefficients of [H]_dagger for H = sum_c coef_c Y_c.
pub fn dagger_y_poly_at<S: Scalar>(d: &Daha<S>, f: &LaurentPoly<S>, pt: &Point<S>) -> Result<BTreeMap<Weight, S>> {
    let mut out: BTreeMap<Weight, S> = BTreeMap::new();
    for (b, c) in f.terms() {
        for ((e, _), (_, v)) in coefficients_at(d, &[Gen::Y(b.clone())], pt)? {
            out.entry(e).or_insert_with(S::zero).add_assign(&v.mul(c));
        }
    }
    out.retain(|_, v| !v.is_zero());
    Ok(out)
}
