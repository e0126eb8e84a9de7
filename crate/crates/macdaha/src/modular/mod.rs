//! Roots of unity: the finite module on B_N, restricted pi-functions and the
//! projective SL2(Z) / GL2(Z) action.

mod matrix;

pub use matrix::{cyclo_json, rank, Matrix};

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::sync::Arc;

use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::coeffdomain::{rat, Cyclo, Params, RatFunc, Scalar};
use crate::daha::Daha;
use crate::error::{Error, Result};
use crate::laurent::{monomial_symmetric, monomial_value, q_a_units, LaurentPoly};
use crate::macdonald::MacdonaldTable;
use crate::rootdata::{RootSystem, Weight};

type Key = Vec<Ratio<i64>>;

#[derive(Clone, Debug)]
pub struct ModularData {
    pub rs: Arc<RootSystem>,
    pub n: i64,
    pub k: Vec<i64>,
    pub conductor: u32,
    pub p: Params<Cyclo>,
    /// k.r = sum_nu k_nu r_nu; the point t^{-rho} q^c is q^{c - k.r}.
    pub kr: Weight,
    /// |B_N|.
    pub classes: usize,
    pub btilde: Vec<Weight>,
    /// i -> i°, with btilde[i°] = -w0 btilde[i].
    pub dual: Vec<usize>,
    /// Classes of B_N where mu' does not vanish: (representative, index into btilde, mu').
    pub support: Vec<(Weight, usize, Cyclo)>,
    /// Generators of K_N found while enumerating B_N.
    pub radical: Vec<Weight>,
    /// p_b at t = q^k for b in btilde.
    pub polys: Vec<LaurentPoly<Cyclo>>,
    pub pi: Matrix<Cyclo>,
    pub d: Vec<Cyclo>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ModularCheck {
    pub id: String,
    /// Informational checks do not affect the verdict.
    pub gating: bool,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct ModularMatrices {
    pub t_plus: Matrix<Cyclo>,
    pub t_minus: Matrix<Cyclo>,
    pub omega: Matrix<Cyclo>,
    pub e: Matrix<Cyclo>,
    pub d: Matrix<Cyclo>,
    pub w0: Matrix<Cyclo>,
}

struct Lattice<'a> {
    rs: &'a RootSystem,
    n: i64,
}

impl Lattice<'_> {
    /// Coordinates (z, b_i) in the simple roots, reduced mod N: the class in B / (NQ ∩ B).
    fn key(&self, z: &[i64]) -> Key {
        let nn = Ratio::from_integer(self.n);
        (0..self.rs.rank)
            .map(|i| {
                let c: Ratio<i64> = (0..self.rs.rank).map(|j| self.rs.gram_rational(i, j) * z[j]).sum();
                c - nn * (c / nn).floor()
            })
            .collect()
    }
}

fn sub(a: &[i64], b: &[i64]) -> Weight {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn add(a: &[i64], b: &[i64]) -> Weight {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// q^{(e,e)/2}.
fn half_square(rs: &RootSystem, p: &Params<Cyclo>, e: &[i64]) -> Result<Cyclo> {
    let ee = rs.pair(e, e);
    p.q_power(*ee.numer(), 2 * *ee.denom())
}

/// gamma(c) = q^{(c,c)/2} x_c(t^{-rho}).
fn gaussian(rs: &RootSystem, p: &Params<Cyclo>, c: &[i64]) -> Result<Cyclo> {
    Ok(half_square(rs, p, c)?.mul(&monomial_value(rs, p, c, -1, &vec![0; rs.rank])))
}

/// Every factor (1 - x_a q_a^i)(1 - x_a^{-1} q_a^i), 0 <= i < k_a, of mu' at t^{-rho} q^c.
fn mu_prime_factors(rs: &RootSystem, p: &Params<Cyclo>, k: &[i64], c: &[i64]) -> Vec<(Weight, i64, Cyclo)> {
    let mut out = vec![];
    for r in rs.positive_roots() {
        let qa = q_a_units(rs, r.class);
        let x = monomial_value(rs, p, &r.coroot, -1, c);
        let xi = x.inv().expect("root of unity");
        for i in 0..k[r.class] {
            let qi = p.q0_pow(qa * i);
            out.push((r.coroot.clone(), i, Cyclo::one().sub(&x.mul(&qi)).mul(&Cyclo::one().sub(&xi.mul(&qi)))));
        }
    }
    out
}

fn mu_prime_at(rs: &RootSystem, p: &Params<Cyclo>, k: &[i64], c: &[i64]) -> Cyclo {
    mu_prime_factors(rs, p, k, c).iter().fold(Cyclo::one(), |acc, (_, _, f)| acc.mul(f))
}

fn antidominant_level(rs: &RootSystem, level: i64) -> Vec<Weight> {
    // b = -sum k_i b_i, sum k_i = level, in lexicographic order of k
    fn rec(n: usize, left: i64, cur: &mut Vec<i64>, out: &mut Vec<Weight>) {
        if cur.len() + 1 == n {
            cur.push(left);
            out.push(cur.iter().map(|x| -x).collect());
            cur.pop();
            return;
        }
        for k in 0..=left {
            cur.push(k);
            rec(n, left - k, cur, out);
            cur.pop();
        }
    }
    let mut out = vec![];
    rec(rs.rank, level, &mut vec![], &mut out);
    out
}

impl ModularData {
    /// The finite module for q a primitive N-th root of unity and t_nu = q_nu^{k_nu}.
    pub fn build(rs: Arc<RootSystem>, n: i64, k: &[i64]) -> Result<Self> {
        if n < 2 {
            return Err(Error::Config("N must be at least 2".into()));
        }
        if k.len() != rs.num_classes() || k.iter().any(|&x| x < 0) {
            return Err(Error::Config(format!("{} needs {} non-negative k-values", rs.label(), rs.num_classes())));
        }
        let conductor = Params::conductor_default(&rs, n);
        let p = Params::cyclotomic(&rs, conductor, k)?;
        let rank = rs.rank;
        let zero = vec![0; rank];

        for (a, i, f) in mu_prime_factors(&rs, &p, k, &zero) {
            if f.is_zero() {
                return Err(Error::Precondition(format!(
                    "nondegeneracy fails for N = {n}, k = {k:?}: q_a^((rho_k,a)+-{i}) = 1 at the coroot {a:?}"
                )));
            }
        }

        let mut kr = vec![0i64; rank];
        for (c, &kc) in k.iter().enumerate() {
            kr = add(&kr, &rs.r_nu(c).iter().map(|x| kc * x).collect::<Vec<_>>());
        }

        // B_N by breadth-first search; revisits give generators of K_N
        let lat = Lattice { rs: &rs, n };
        let mut reps: BTreeMap<Key, Weight> = BTreeMap::from([(lat.key(&zero), zero.clone())]);
        let mut queue = VecDeque::from([zero.clone()]);
        let mut radical: Vec<Weight> = vec![];
        while let Some(z) = queue.pop_front() {
            for i in 0..rank {
                for s in [1, -1] {
                    let mut y = z.clone();
                    y[i] += s;
                    let key = lat.key(&y);
                    match reps.get(&key) {
                        Some(r) => {
                            let d = sub(&y, r);
                            if d.iter().any(|&x| x != 0) && !radical.contains(&d) {
                                radical.push(d);
                            }
                        }
                        None => {
                            reps.insert(key, y.clone());
                            queue.push_back(y);
                        }
                    }
                }
            }
        }
        radical.sort();
        for a in &radical {
            if !gaussian(&rs, &p, a)?.is_one() {
                return Err(Error::Precondition(format!(
                    "q^((a,a)/2) x_a(t^-rho) != 1 for {a:?} in K_N; the Gaussian is not defined on B_N"
                )));
            }
        }

        // dot orbits: c ~ w(c - k.r) + k.r
        let weyl = rs.weyl_group()?;
        let orbit_id = |c: &[i64]| -> Key {
            let u = sub(c, &kr);
            weyl.iter().map(|w| lat.key(&add(&w.apply(&u), &kr))).min().expect("W is nonempty")
        };
        let mut class_orbit: Vec<(Weight, Key, Cyclo)> = vec![];
        let mut live: BTreeMap<Key, ()> = BTreeMap::new();
        for rep in reps.values() {
            let mu = mu_prime_at(&rs, &p, k, rep);
            let o = orbit_id(rep);
            if !mu.is_zero() {
                live.insert(o.clone(), ());
            }
            class_orbit.push((rep.clone(), o, mu));
        }

        // anti-dominant representatives, least level then lexicographic, paired under -w0
        let mut chosen: BTreeMap<Key, Weight> = BTreeMap::new();
        let cap = 4 * n * rank as i64 + 4;
        let mut level = 0;
        while chosen.len() < live.len() {
            if level > cap {
                return Err(Error::Invariant("no anti-dominant representatives for some orbits".into()));
            }
            for b in antidominant_level(&rs, level) {
                let o = orbit_id(&b);
                if !live.contains_key(&o) || chosen.contains_key(&o) {
                    continue;
                }
                let bd = rs.dual(&b);
                let od = orbit_id(&bd);
                if od == o && bd != b {
                    return Err(Error::Invariant(format!("the orbit of {b:?} is -w0-stable but {b:?} is not")));
                }
                if let Some(prev) = chosen.get(&od) {
                    if *prev != bd {
                        return Err(Error::Invariant(format!("representatives of {b:?} and its -w0 image disagree")));
                    }
                }
                chosen.insert(o, b);
                chosen.insert(od, bd);
            }
            level += 1;
        }
        let mut btilde: Vec<Weight> = chosen.values().cloned().collect();
        btilde.sort_by_key(|b| (-b.iter().sum::<i64>(), b.iter().map(|x| -x).collect::<Vec<_>>()));
        if btilde.first() != Some(&zero) {
            return Err(Error::Invariant("0 is not in the spectrum".into()));
        }
        let index: HashMap<Key, usize> = btilde.iter().enumerate().map(|(i, b)| (orbit_id(b), i)).collect();
        let dual: Vec<usize> = btilde.iter().map(|b| index[&orbit_id(&rs.dual(b))]).collect();
        let support: Vec<(Weight, usize, Cyclo)> =
            class_orbit.into_iter().filter(|(_, _, mu)| !mu.is_zero()).map(|(r, o, mu)| (r, index[&o], mu)).collect();

        // p_b at t = q^k, computed over Q(q0) and specialized
        let mut table = MacdonaldTable::new(Daha::new(rs.clone(), Params::<RatFunc>::symbolic_at_k(&rs, k)));
        let zeta = [p.q0.clone(), Cyclo::one(), Cyclo::one()];
        let mut polys = vec![];
        for b in &btilde {
            let pb = table.poly(b)?;
            let mut out = LaurentPoly::zero();
            for (z, c) in pb.terms() {
                let v = c.eval_in(&zeta).ok_or_else(|| Error::Pole(format!("coefficient of p_{b:?} at the root of unity")))?;
                out.add_term(z.clone(), &v);
            }
            polys.push(out);
        }
        let m = btilde.len();
        let mut vals: Vec<Vec<Cyclo>> = vec![];
        for (i, pb) in polys.iter().enumerate() {
            let at0 = pb.eval_at(&rs, &p, -1, &zero);
            let inv = at0.inv().ok_or_else(|| Error::Pole(format!("p_{:?}(t^-rho) = 0", btilde[i])))?;
            vals.push(btilde.iter().map(|c| pb.eval_at(&rs, &p, -1, c).mul(&inv)).collect());
        }
        let pi = Matrix::from_fn(m, |i, j| vals[i][j].clone());
        if pi.inverse().is_none() {
            return Err(Error::Invariant("the matrix of restricted pi-functions is singular".into()));
        }
        let mut md = ModularData {
            rs,
            n,
            k: k.to_vec(),
            conductor,
            p,
            kr,
            classes: reps.len(),
            btilde,
            dual,
            support,
            radical,
            polys,
            pi,
            d: vec![],
        };
        md.d = (0..m).map(|i| md.restricted_pairing(&md.pi.row(i), &md.pi.row(i))).collect();
        if md.d.iter().any(|x| x.is_zero()) {
            return Err(Error::Invariant("a restricted norm vanishes".into()));
        }
        Ok(md)
    }

    pub fn size(&self) -> usize {
        self.btilde.len()
    }

    /// <f,g>' = sum_{c in B_N} mu'(c) f(c) conj(g(c)) for functions on btilde.
    pub fn restricted_pairing(&self, f: &[Cyclo], g: &[Cyclo]) -> Cyclo {
        let mut s = Cyclo::zero();
        for (_, i, mu) in &self.support {
            s.add_assign(&mu.mul(&f[*i]).mul(&g[*i].conj()));
        }
        s
    }

    pub fn matrices(&self) -> Result<ModularMatrices> {
        let m = self.size();
        let tp: Vec<Cyclo> = self.btilde.iter().map(|b| gaussian(&self.rs, &self.p, b)).collect::<Result<_>>()?;
        let t_plus = Matrix::diag(&tp);
        let t_plus_inv = Matrix::diag(&tp.iter().map(|x| x.inv().unwrap()).collect::<Vec<_>>());
        let pi_inv = self.pi.inverse().ok_or_else(|| Error::Invariant("singular pi-matrix".into()))?;
        let t_minus = Matrix::chain(&[&self.pi, &t_plus_inv, &pi_inv]);
        let omega = Matrix::chain(&[&t_plus_inv, &t_minus, &t_plus_inv]);
        let d = Matrix::diag(&self.d);
        let d_inv = Matrix::diag(&self.d.iter().map(|x| x.inv().unwrap()).collect::<Vec<_>>());
        let e = self.pi.mul(&d_inv);
        let w0 = Matrix::permutation(&self.dual);
        debug_assert_eq!(w0.n, m);
        Ok(ModularMatrices { t_plus, t_minus, omega, e, d, w0 })
    }

    /// F(pi_j) = sum_i pi_i(beta^j)^+ pi_i / <pi_i,pi_i>', extended semilinearly;
    /// functions are value vectors on btilde.
    pub fn restricted_fourier(&self, f: &[Cyclo]) -> Result<Vec<Cyclo>> {
        let m = self.size();
        let c = self.pi.transpose().inverse().ok_or_else(|| Error::Invariant("singular pi-matrix".into()))?.apply(f);
        let mut out = vec![Cyclo::zero(); m];
        for (j, cj) in c.iter().enumerate() {
            let cj = cj.conj();
            for i in 0..m {
                let w = self.pi.get(i, j).conj().mul(&cj).div(&self.d[i]).unwrap();
                for (l, o) in out.iter_mut().enumerate() {
                    o.add_assign(&w.mul(self.pi.get(i, l)));
                }
            }
        }
        Ok(out)
    }

    /// Values of m_{-b_i} at t^{sign rho} q^{-sign beta} for each beta in btilde.
    fn fundamental_values(&self, sign: i64) -> Result<Vec<Vec<Cyclo>>> {
        let rank = self.rs.rank;
        let ms: Vec<LaurentPoly<Cyclo>> = (0..rank)
            .map(|i| monomial_symmetric(&self.rs, &(0..rank).map(|j| -((i == j) as i64)).collect::<Vec<_>>()))
            .collect::<Result<_>>()?;
        Ok(self
            .btilde
            .iter()
            .map(|b| {
                let c: Weight = b.iter().map(|x| -sign * x).collect();
                ms.iter().map(|f| f.eval_at(&self.rs, &self.p, sign, &c)).collect()
            })
            .collect())
    }

    pub fn verify(&self, seed: u64) -> Result<Vec<ModularCheck>> {
        let mx = self.matrices()?;
        let m = self.size();
        let rs = &self.rs;
        let p = &self.p;
        let id = Matrix::<Cyclo>::identity(m);
        let mut out = vec![];
        let mut push = |id: &str, gating: bool, pass: bool, detail: String| {
            out.push(ModularCheck { id: id.into(), gating, pass, detail });
        };
        let prop = |a: &Matrix<Cyclo>, b: &Matrix<Cyclo>| -> (bool, String) {
            match a.proportional_to(b) {
                Some(l) => (true, format!("scalar {l}")),
                None => {
                    let cells = (0..m).flat_map(|i| (0..m).map(move |j| (i, j)));
                    let lambda = cells.clone().find(|&(i, j)| !b.get(i, j).is_zero()).and_then(|(i, j)| a.get(i, j).div(b.get(i, j)));
                    let Some(l) = lambda else { return (false, "reference matrix vanishes".into()) };
                    let bad: Vec<(usize, usize)> = cells.filter(|&(i, j)| *a.get(i, j) != b.get(i, j).mul(&l)).collect();
                    (false, format!("residual A - ({l}) B nonzero at {} entries, first {:?}", bad.len(), bad[0]))
                }
            }
        };

        let ones = (0..m).all(|i| self.pi.get(0, i).is_one() && self.pi.get(i, 0).is_one());
        push("pi-normalized", true, ones, "first row and column of the pi-matrix are ones".into());
        push("pi-symmetric", true, self.pi == self.pi.transpose(), "pi-matrix equals its transpose".into());

        // restrictions to B_N are well defined: p_b(c) only depends on the orbit of c
        let mut consistent = true;
        for (c, j, _) in &self.support {
            for (i, pb) in self.polys.iter().enumerate() {
                let at0 = pb.eval_at(rs, p, -1, &vec![0; rs.rank]);
                let v = pb.eval_at(rs, p, -1, c).div(&at0).unwrap();
                consistent &= v == *self.pi.get(i, *j);
            }
        }
        push(
            "restriction",
            true,
            consistent,
            format!("pi-functions agree on all {} supported classes of B_N (|B_N| = {})", self.support.len(), self.classes),
        );

        let spec = self.fundamental_values(1)?;
        let distinct = (0..m).all(|i| (i + 1..m).all(|j| spec[i] != spec[j]));
        push("spectrum", true, distinct, "joint eigenvalues m_{-b_i}(t^rho q^-beta) pairwise distinct".into());

        // irreducibility witness: 1 generates V under multiplication by the m_{-b_i}
        let mult = self.fundamental_values(-1)?;
        let mut span: Vec<Vec<Cyclo>> = vec![vec![Cyclo::one(); m]];
        let mut frontier = span.clone();
        while !frontier.is_empty() && span.len() < m {
            let mut next = vec![];
            for v in &frontier {
                for i in 0..rs.rank {
                    let w: Vec<Cyclo> = (0..m).map(|j| v[j].mul(&mult[j][i])).collect();
                    let mut trial = span.clone();
                    trial.push(w.clone());
                    if rank(&trial) > span.len() {
                        span.push(w.clone());
                        next.push(w);
                    }
                }
            }
            frontier = next;
        }
        push("irreducible", true, span.len() == m, format!("span of 1 under multiplication has dimension {} of {m}", span.len()));

        let mut ortho = true;
        for i in 0..m {
            for j in 0..m {
                if i != j {
                    ortho &= self.restricted_pairing(&self.pi.row(i), &self.pi.row(j)).is_zero();
                }
            }
        }
        push("orthogonality", true, ortho, "<pi_i, pi_j>' = 0 for i != j".into());

        // adjointness of L_a (diagonal on pi-functions) for the restricted pairing
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let pi_t = self.pi.transpose();
        let pi_t_inv = pi_t.inverse().unwrap();
        let mut adjoint = true;
        for a in 0..rs.rank {
            let l = Matrix::chain(&[&pi_t, &Matrix::diag(&spec.iter().map(|s| s[a].clone()).collect::<Vec<_>>()), &pi_t_inv]);
            let l_star = Matrix::chain(&[&pi_t, &Matrix::diag(&spec.iter().map(|s| s[a].conj()).collect::<Vec<_>>()), &pi_t_inv]);
            for _ in 0..2 {
                let mut rv = || -> Vec<Cyclo> { (0..m).map(|_| Cyclo::from_rational(&rat(rng.gen_range(-9..10), rng.gen_range(1..6)))).collect() };
                let (f, g) = (rv(), rv());
                adjoint &= self.restricted_pairing(&l.apply(&f), &g) == self.restricted_pairing(&f, &l_star.apply(&g));
            }
        }
        push("pairing-adjoint", true, adjoint, "<L_a f, g>' = <f, L_a^* g>' on random rational f, g".into());

        let mut radical_ok = true;
        for a in &self.radical {
            radical_ok &= gaussian(rs, p, a)?.is_one();
        }
        push("gaussian-defined", true, radical_ok, format!("gamma invariant under {} generators of K_N", self.radical.len()));

        let tpi = mx.t_plus.inverse().unwrap();
        let tmi = mx.t_minus.inverse().unwrap();
        let (ok, d) = prop(&Matrix::chain(&[&mx.t_plus, &tmi, &mx.t_plus]), &Matrix::chain(&[&tmi, &mx.t_plus, &tmi]));
        push("braid", true, ok, format!("T+ T-^-1 T+ ~ T-^-1 T+ T-^-1: {d}"));
        let (ok, d) = prop(&Matrix::chain(&[&mx.t_plus, &mx.t_minus, &mx.t_plus]), &Matrix::chain(&[&mx.t_minus, &mx.t_plus, &mx.t_minus]));
        push("braid-literal", false, ok, format!("T+ T- T+ ~ T- T+ T-: {d}"));
        let om2 = mx.omega.mul(&mx.omega);
        let (ok, d) = prop(&om2.mul(&om2), &id);
        push("omega^4", true, ok, format!("Omega^4 ~ Id: {d}"));
        match om2.scalar_permutation() {
            Some((l, perm)) => {
                let pm = Matrix::<Cyclo>::permutation(&perm);
                let central = pm.mul(&mx.t_plus) == mx.t_plus.mul(&pm) && pm.mul(&mx.t_minus) == mx.t_minus.mul(&pm);
                let w0 = perm == self.dual;
                push("omega^2", true, central, format!("Omega^2 = {l} * P{perm:?}; commutes with T+-: {central}; P = W0: {w0}"));
            }
            None => push("omega^2", true, false, "Omega^2 is not a scalar times a permutation".into()),
        }

        push("unitary-T+", true, mx.t_plus.dagger() == tpi, "T+^dagger = T+^-1".into());
        let d_inv = mx.d.inverse().unwrap();
        for (name, g) in [("T-", &mx.t_minus), ("Omega", &mx.omega)] {
            let (ok, d) = prop(&Matrix::chain(&[&g.dagger(), &d_inv, g]), &d_inv);
            push(&format!("unitary-{name}"), true, ok, format!("{name}^dagger D^-1 {name} ~ D^-1: {d}"));
            let (ok, d) = prop(&g.dagger(), &g.inverse().unwrap());
            push(&format!("unitary-{name}-literal"), false, ok, format!("{name}^dagger ~ {name}^-1: {d}"));
        }

        let plus = self.pi.plus();
        let conj_ok = plus == mx.w0.mul(&self.pi) && plus == self.pi.mul(&mx.w0);
        push("conjugation", true, conj_ok, "pi^+ = W0 pi = pi W0".into());

        let pi_inv = self.pi.inverse().unwrap();
        let (ok, d) = prop(&mx.omega, &mx.d.mul(&pi_inv));
        push("omega-vs-pi", true, ok, format!("Omega ~ D pi^-1: {d}"));

        // (pi D^-1 sigma)^2 = pi D^-1 pi^+ (D^-1)^+
        let (ok, d) = prop(&Matrix::chain(&[&self.pi, &d_inv, &plus, &d_inv.plus()]), &id);
        push("fourier-square", true, ok, format!("(pi D^-1 sigma)^2 ~ Id: {d}"));

        // the Fourier transform is diagonal on gamma^-1 pi_i with ratios x_b(t^rho) q^{-(b,b)/2}
        let conj_tp = Matrix::chain(&[&pi_inv, &mx.t_plus, &self.pi]);
        let conj_tpi = Matrix::chain(&[&pi_inv, &tpi, &self.pi]);
        let f = Matrix::chain(&[&conj_tp, &d_inv, &plus, &conj_tpi.plus()]);
        let mut fd = f.is_diagonal();
        let mut ratios = vec![];
        if fd {
            let f0 = f.get(0, 0).clone();
            for (i, b) in self.btilde.iter().enumerate() {
                let expect = monomial_value(rs, p, b, 1, &vec![0; rs.rank]).mul(&half_square(rs, p, b)?.inv().unwrap());
                let got = f.get(i, i).div(&f0).unwrap();
                fd &= got == expect;
                ratios.push(got.to_string());
            }
        }
        push("fourier-diagonal", true, fd, format!("phi_b/phi_0 = x_b(t^rho) q^-(b,b)/2: {ratios:?}"));

        // F is semilinear, so F∘F is linear; it is a scalar on every f
        let mut rng2 = ChaCha8Rng::seed_from_u64(seed ^ 1);
        let f: Vec<Cyclo> = (0..m).map(|_| Cyclo::from_rational(&rat(rng2.gen_range(1..10), rng2.gen_range(1..6)))).collect();
        let ff = self.restricted_fourier(&self.restricted_fourier(&f)?)?;
        let j0 = (0..m).find(|&j| !f[j].is_zero()).unwrap_or(0);
        let lam = ff[j0].div(&f[j0]);
        let ok = lam.as_ref().is_some_and(|l| (0..m).all(|j| ff[j] == f[j].mul(l)));
        push("fourier-involution", true, ok, format!("F(F(f)) ~ f on a random f: {}", lam.map_or("-".into(), |l| l.to_string())));

        if self.k.iter().all(|&x| x == 1) {
            out.extend(self.character_checks()?);
        }
        Ok(out)
    }

    /// At t = q: the pi-matrix from the Weyl character formula, and Verlinde fusion.
    fn character_checks(&self) -> Result<Vec<ModularCheck>> {
        let rs = &self.rs;
        let p = &self.p;
        let m = self.size();
        let rho: Weight = vec![1; rs.rank];
        let weyl = rs.weyl_group()?;
        let alt = |lam: &[i64], c: &[i64]| -> Cyclo {
            let mut s = Cyclo::zero();
            for w in &weyl {
                let v = monomial_value(rs, p, &w.apply(lam), -1, c);
                s.add_assign(&if rs.weyl_length(w) % 2 == 0 { v } else { v.neg() });
            }
            s
        };
        let mut chi = vec![vec![Cyclo::zero(); m]; m];
        for (i, b) in self.btilde.iter().enumerate() {
            let lam = add(&rs.w0.apply(b), &rho);
            for (j, c) in self.btilde.iter().enumerate() {
                chi[i][j] = alt(&lam, c).div(&alt(&rho, c)).ok_or_else(|| Error::Pole("Weyl denominator".into()))?;
            }
        }
        let oracle = (0..m).all(|i| (0..m).all(|j| chi[i][j].div(&chi[i][0]).unwrap() == *self.pi.get(i, j)));
        let mut out = vec![ModularCheck {
            id: "character-oracle".into(),
            gating: true,
            pass: oracle,
            detail: "pi-matrix equals normalized Weyl characters at the points of the spectrum".into(),
        }];

        // chi_i chi_j = sum_k N_ij^k chi_k on the spectrum
        let chim = Matrix::from_fn(m, |i, j| chi[i][j].clone());
        let inv = chim.inverse().ok_or_else(|| Error::Invariant("singular character matrix".into()))?;
        let mut integral = true;
        let mut table = vec![vec![vec![0i64; m]; m]; m];
        for i in 0..m {
            for j in 0..m {
                let prod: Vec<Cyclo> = (0..m).map(|l| chi[i][l].mul(&chi[j][l])).collect();
                for kk in 0..m {
                    let mut s = Cyclo::zero();
                    for (l, x) in prod.iter().enumerate() {
                        s.add_assign(&x.mul(inv.get(l, kk)));
                    }
                    match s.as_rational() {
                        Some(r) if r.is_integer() && r >= rat(0, 1) => {
                            table[i][j][kk] = r.to_integer().try_into().unwrap_or(i64::MAX);
                        }
                        _ => integral = false,
                    }
                }
            }
        }
        let unit = (0..m).all(|j| (0..m).all(|kk| table[0][j][kk] == (j == kk) as i64));
        out.push(ModularCheck {
            id: "verlinde".into(),
            gating: true,
            pass: integral && unit,
            detail: "fusion coefficients from the spectrum are non-negative integers with unit 0".into(),
        });
        if rs.label() == "A1" {
            let level = m as i64 - 1;
            let mut su2 = integral;
            for i in 0..m as i64 {
                for j in 0..m as i64 {
                    for kk in 0..m as i64 {
                        let allowed = (i - j).abs() <= kk && kk <= (i + j).min(2 * level - i - j) && (i + j + kk) % 2 == 0;
                        su2 &= table[i as usize][j as usize][kk as usize] == allowed as i64;
                    }
                }
            }
            out.push(ModularCheck {
                id: "su2-fusion".into(),
                gating: true,
                pass: su2,
                detail: format!("truncated Clebsch-Gordan rule at level {level}"),
            });
        }
        Ok(out)
    }

    pub fn to_json(&self) -> Result<Value> {
        let mx = self.matrices()?;
        let b: Vec<Value> = self.btilde.iter().map(|x| json!(x)).collect();
        Ok(json!({
            "system": self.rs.label(),
            "N": self.n,
            "k": self.k,
            "conductor": self.conductor,
            "classes": self.classes,
            "Btilde": b,
            "dual": self.dual,
            "matrices": {
                "Pi": self.pi.to_json(),
                "T+": mx.t_plus.to_json(),
                "T-": mx.t_minus.to_json(),
                "Omega": mx.omega.to_json(),
                "E": mx.e.to_json(),
                "D": mx.d.to_json(),
                "W0": mx.w0.to_json(),
            },
        }))
    }
}
