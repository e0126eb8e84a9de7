//! Root systems, Weyl groups, coweight lattices and the extended affine
//! Weyl group acting on affine roots.
//!
//! Weights are integer vectors in the basis of fundamental coweights
//! b_1..b_n, so coordinate j of z is (z, alpha_j).  Roots are stored by
//! their simple-root coefficients together with their coroots in b-coordinates.

use num_integer::Integer;
use num_rational::Ratio;
use serde_json::{json, Value};
use std::collections::{HashMap, HashSet, VecDeque};

use crate::error::{Error, Result};

pub type Weight = Vec<i64>;
type Q = Ratio<i64>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeylElement {
    n: usize,
    mat: Vec<i64>,
    inv: Vec<i64>,
}

fn mat_mul(n: usize, a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut r = vec![0; n * n];
    for i in 0..n {
        for k in 0..n {
            let x = a[i * n + k];
            if x != 0 {
                for j in 0..n {
                    r[i * n + j] += x * b[k * n + j];
                }
            }
        }
    }
    r
}

fn mat_vec(n: usize, a: &[i64], z: &[i64]) -> Weight {
    (0..n).map(|i| (0..n).map(|k| a[i * n + k] * z[k]).sum()).collect()
}

impl WeylElement {
    pub fn identity(n: usize) -> Self {
        let mut m = vec![0; n * n];
        for i in 0..n {
            m[i * n + i] = 1;
        }
        WeylElement { n, mat: m.clone(), inv: m }
    }
    pub fn apply(&self, z: &[i64]) -> Weight {
        mat_vec(self.n, &self.mat, z)
    }
    pub fn apply_inv(&self, z: &[i64]) -> Weight {
        mat_vec(self.n, &self.inv, z)
    }
    /// self * o (apply o first).
    pub fn compose(&self, o: &Self) -> Self {
        WeylElement { n: self.n, mat: mat_mul(self.n, &self.mat, &o.mat), inv: mat_mul(self.n, &o.inv, &self.inv) }
    }
    pub fn inverse(&self) -> Self {
        WeylElement { n: self.n, mat: self.inv.clone(), inv: self.mat.clone() }
    }
    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.n)
    }
    pub fn matrix(&self) -> &[i64] {
        &self.mat
    }
}

/// Element of the extended affine Weyl group, stored as (w, b) with
/// [z, zeta] -> [w z, zeta - (z, b)].  As a product it is the translation by
/// `w b` composed after `w`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffineElement {
    pub w: WeylElement,
    pub b: Weight,
}

impl AffineElement {
    pub fn identity(n: usize) -> Self {
        AffineElement { w: WeylElement::identity(n), b: vec![0; n] }
    }
    pub fn translation(b: Weight) -> Self {
        AffineElement { w: WeylElement::identity(b.len()), b }
    }
    pub fn finite(w: WeylElement) -> Self {
        let n = w.n;
        AffineElement { w, b: vec![0; n] }
    }
    pub fn compose(&self, o: &Self) -> Self {
        let wb = o.w.apply_inv(&self.b);
        AffineElement { w: self.w.compose(&o.w), b: o.b.iter().zip(&wb).map(|(x, y)| x + y).collect() }
    }
    pub fn inverse(&self) -> Self {
        let wb = self.w.apply(&self.b);
        AffineElement { w: self.w.inverse(), b: wb.iter().map(|x| -x).collect() }
    }
    /// The translation e in the factorization (translation e) * w.
    pub fn translation_part(&self) -> Weight {
        self.w.apply(&self.b)
    }
}

#[derive(Clone, Debug)]
pub struct Root {
    /// simple-root coefficients (negative for negative roots)
    pub coeffs: Vec<i64>,
    /// the coroot in b-coordinates
    pub coroot: Weight,
    /// length class index (0 = long)
    pub class: usize,
    pub height: i64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Dominance {
    Less,
    Equal,
    Greater,
    Incomparable,
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    pub kind: char,
    pub rank: usize,
    /// C[i][j] = <alpha_i^vee, alpha_j>
    pub cartan: Vec<Vec<i64>>,
    /// 6 (alpha_i, alpha_j)
    pub sym6: Vec<Vec<i64>>,
    /// 3 (alpha, alpha) for each length class; class 0 is long
    pub class_nu3: Vec<i64>,
    pub node_class: Vec<usize>,
    /// positive roots first, then their negatives in the same order
    pub roots: Vec<Root>,
    pub npos: usize,
    root_index: HashMap<Weight, usize>,
    gram: Vec<Vec<Q>>,
    /// 2 mhat (b_i, b_j)
    gram_q: Vec<Vec<i64>>,
    pub m: i64,
    pub mhat: i64,
    pub theta: usize,
    pub o_star: Vec<usize>,
    /// pi_r for r in [0] ++ o_star
    pub pis: Vec<AffineElement>,
    /// node permutation of pi_r on 0..=n: pi_r(alpha_i) = alpha_{perm[i]}
    pub pi_perm: Vec<Vec<usize>>,
    pub w0: WeylElement,
    /// reduced words (r-index into `pis`, word) of the translations b_i
    translation_words: Vec<(usize, Vec<usize>)>,
    pub weyl_cap: usize,
}

fn dynkin(kind: char, n: usize) -> Result<(Vec<(usize, usize)>, Vec<i64>)> {
    let bad = || Error::Config(format!("unsupported root system {kind}{n}"));
    let chain = |n: usize| (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect::<Vec<_>>();
    let (edges, nu3) = match kind {
        'A' if (1..=8).contains(&n) => (chain(n), vec![6; n]),
        'B' if (2..=8).contains(&n) => {
            let mut nu = vec![6; n];
            nu[n - 1] = 3;
            (chain(n), nu)
        }
        'C' if (2..=8).contains(&n) => {
            let mut nu = vec![3; n];
            nu[n - 1] = 6;
            (chain(n), nu)
        }
        'D' if (4..=8).contains(&n) => {
            let mut e = chain(n - 1);
            e.push((n - 3, n - 1));
            (e, vec![6; n])
        }
        'E' if (6..=8).contains(&n) => {
            let mut e = vec![(0, 2), (1, 3), (2, 3)];
            for i in 3..n - 1 {
                e.push((i, i + 1));
            }
            (e, vec![6; n])
        }
        'F' if n == 4 => (chain(4), vec![6, 6, 3, 3]),
        'G' if n == 2 => (chain(2), vec![2, 6]),
        _ => return Err(bad()),
    };
    Ok((edges, nu3))
}

fn invert(s: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let n = s.len();
    let mut a: Vec<Vec<Q>> = s.to_vec();
    let mut inv: Vec<Vec<Q>> = (0..n).map(|i| (0..n).map(|j| Q::from_integer((i == j) as i64)).collect()).collect();
    for c in 0..n {
        let p = (c..n).find(|&r| a[r][c] != Q::from_integer(0)).expect("nonsingular");
        a.swap(c, p);
        inv.swap(c, p);
        let k = a[c][c].recip();
        for j in 0..n {
            a[c][j] *= k;
            inv[c][j] *= k;
        }
        for r in 0..n {
            if r != c && a[r][c] != Q::from_integer(0) {
                let f = a[r][c];
                for j in 0..n {
                    let (x, y) = (a[c][j], inv[c][j]);
                    a[r][j] -= f * x;
                    inv[r][j] -= f * y;
                }
            }
        }
    }
    inv
}

impl RootSystem {
    /// Parse labels like "A2", "B3", "G2".
    pub fn from_label(label: &str) -> Result<Self> {
        let label = label.trim();
        let mut chars = label.chars();
        let kind = chars.next().ok_or_else(|| Error::Config("empty system label".into()))?.to_ascii_uppercase();
        let rank: usize = chars.as_str().parse().map_err(|_| Error::Config(format!("bad system label {label}")))?;
        Self::new(kind, rank)
    }

    pub fn label(&self) -> String {
        format!("{}{}", self.kind, self.rank)
    }

    pub fn new(kind: char, n: usize) -> Result<Self> {
        let (edges, nu3) = dynkin(kind, n)?;
        let mut sym6 = vec![vec![0i64; n]; n];
        for i in 0..n {
            sym6[i][i] = 2 * nu3[i];
        }
        for &(i, j) in &edges {
            let v = -nu3[i].max(nu3[j]);
            sym6[i][j] = v;
            sym6[j][i] = v;
        }
        let cartan: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| 2 * sym6[i][j] / sym6[i][i]).collect()).collect();
        let mut class_nu3: Vec<i64> = nu3.clone();
        class_nu3.sort_unstable_by(|a, b| b.cmp(a));
        class_nu3.dedup();
        let node_class: Vec<usize> = nu3.iter().map(|v| class_nu3.iter().position(|c| c == v).unwrap()).collect();

        // positive roots by closing the simple roots under simple reflections
        let pair6 = |x: &[i64], k: usize| -> i64 { (0..n).map(|j| x[j] * sym6[j][k]).sum() };
        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
        for i in 0..n {
            let mut e = vec![0; n];
            e[i] = 1;
            seen.insert(e.clone());
            queue.push_back(e);
        }
        while let Some(beta) = queue.pop_front() {
            for i in 0..n {
                let c = 2 * pair6(&beta, i) / sym6[i][i];
                let mut g = beta.clone();
                g[i] -= c;
                if g.iter().all(|&x| x >= 0) && g.iter().any(|&x| x > 0) && seen.insert(g.clone()) {
                    queue.push_back(g);
                }
            }
        }
        let mut pos: Vec<Vec<i64>> = seen.into_iter().collect();
        pos.sort_by_key(|r| (r.iter().sum::<i64>(), std::cmp::Reverse(r.clone())));
        let mut roots = Vec::new();
        for sign in [1i64, -1] {
            for r in &pos {
                let coeffs: Vec<i64> = r.iter().map(|x| sign * x).collect();
                let len6: i64 = (0..n).map(|k| coeffs[k] * pair6(&coeffs, k)).sum();
                let nu3v = len6 / 2;
                let coroot: Weight = (0..n).map(|k| pair6(&coeffs, k) / nu3v).collect();
                debug_assert!((0..n).all(|k| pair6(&coeffs, k) % nu3v == 0));
                let class = class_nu3.iter().position(|&c| c == nu3v).unwrap();
                roots.push(Root { height: coeffs.iter().sum(), coeffs, coroot, class });
            }
        }
        let npos = pos.len();
        let root_index = roots.iter().enumerate().map(|(i, r)| (r.coroot.clone(), i)).collect();
        let theta = (0..npos).max_by_key(|&i| roots[i].height).unwrap();
        let o_star: Vec<usize> = (0..n).filter(|&i| roots[theta].coeffs[i] == 1).collect();

        let s: Vec<Vec<Q>> = sym6.iter().map(|row| row.iter().map(|&x| Q::new(x, 6)).collect()).collect();
        let gram = invert(&s);
        let pi_count = 1 + o_star.len() as i64;
        let m = match kind {
            'D' if n % 2 == 0 => 2,
            'C' if n % 2 == 1 => 2,
            'C' | 'B' => 1,
            _ => pi_count,
        };
        let mut mhat = 2i64.lcm(&m);
        for row in &gram {
            for x in row {
                mhat = mhat.lcm(x.denom());
            }
        }
        let gram_q = gram.iter().map(|row| row.iter().map(|x| (x * Q::from_integer(2 * mhat)).to_integer()).collect()).collect();

        let mut rs = RootSystem {
            kind,
            rank: n,
            cartan,
            sym6,
            class_nu3,
            node_class,
            roots,
            npos,
            root_index,
            gram,
            gram_q,
            m,
            mhat,
            theta,
            o_star,
            pis: vec![],
            pi_perm: vec![],
            w0: WeylElement::identity(n),
            translation_words: vec![],
            weyl_cap: 1152,
        };
        rs.w0 = rs.longest_parabolic(&(0..n).collect::<Vec<_>>());
        let mut pis = vec![AffineElement::identity(n)];
        for &r in &rs.o_star {
            let others: Vec<usize> = (0..n).filter(|&i| i != r).collect();
            let omega = rs.w0.compose(&rs.longest_parabolic(&others));
            let br = rs.unit(r);
            pis.push(AffineElement { b: omega.apply(&br), w: omega.inverse() });
        }
        rs.pis = pis;
        rs.pi_perm = (0..rs.pis.len()).map(|k| rs.node_permutation(&rs.pis[k].clone())).collect::<Result<_>>()?;
        rs.translation_words = (0..n).map(|i| rs.reduced_word(&AffineElement::translation(rs.unit(i)))).collect::<Result<_>>()?;
        Ok(rs)
    }

    pub fn unit(&self, i: usize) -> Weight {
        let mut e = vec![0; self.rank];
        e[i] = 1;
        e
    }

    pub fn num_classes(&self) -> usize {
        self.class_nu3.len()
    }

    /// (b, c) as an exact rational.
    pub fn pair(&self, b: &[i64], c: &[i64]) -> Q {
        let mut s = Q::from_integer(0);
        for i in 0..self.rank {
            if b[i] != 0 {
                for j in 0..self.rank {
                    s += self.gram[i][j] * Q::from_integer(b[i] * c[j]);
                }
            }
        }
        s
    }

    /// 2 mhat (b, c): the exponent of q0 in q^{(b,c)}.
    pub fn pair_q(&self, b: &[i64], c: &[i64]) -> i64 {
        let mut s = 0;
        for i in 0..self.rank {
            if b[i] != 0 {
                for j in 0..self.rank {
                    s += self.gram_q[i][j] * b[i] * c[j];
                }
            }
        }
        s
    }

    /// (z, alpha) for a root index.
    pub fn root_pair(&self, z: &[i64], root: usize) -> i64 {
        self.roots[root].coeffs.iter().zip(z).map(|(a, b)| a * b).sum()
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.roots[..self.npos]
    }

    pub fn theta_coroot(&self) -> &Weight {
        &self.roots[self.theta].coroot
    }

    pub fn is_positive(&self, root: usize) -> bool {
        root < self.npos
    }

    pub fn root_of_coroot(&self, a: &[i64]) -> Option<usize> {
        self.root_index.get(a).copied()
    }

    pub fn reflect(&self, z: &[i64], i: usize) -> Weight {
        let k = z[i];
        z.iter().zip(&self.cartan[i]).map(|(x, a)| x - k * a).collect()
    }

    pub fn simple_reflection(&self, i: usize) -> WeylElement {
        let n = self.rank;
        let mut m = vec![0; n * n];
        for r in 0..n {
            m[r * n + r] = 1;
            m[r * n + i] -= self.cartan[i][r];
        }
        WeylElement { n, mat: m.clone(), inv: m }
    }

    /// Reflection in a root (any sign).
    pub fn root_reflection(&self, root: usize) -> WeylElement {
        let n = self.rank;
        let a = &self.roots[root].coroot;
        let c = &self.roots[root].coeffs;
        let mut m = vec![0; n * n];
        for r in 0..n {
            m[r * n + r] = 1;
            for k in 0..n {
                m[r * n + k] -= a[r] * c[k];
            }
        }
        WeylElement { n, mat: m.clone(), inv: m }
    }

    /// Word in simple reflections for a finite element (rightmost applied first).
    pub fn weyl_word(&self, w: &WeylElement) -> Vec<usize> {
        // descend w^{-1} rho-like regular point
        let rho: Weight = vec![1; self.rank];
        let mut v = w.apply(&rho);
        let mut word = Vec::new();
        while let Some(i) = (0..self.rank).find(|&i| v[i] < 0) {
            v = self.reflect(&v, i);
            word.push(i);
        }
        // s_{i_k} ... s_{i_1} w = 1
        word
    }

    pub fn weyl_length(&self, w: &WeylElement) -> usize {
        self.weyl_word(w).len()
    }

    pub fn word_to_weyl(&self, word: &[usize]) -> WeylElement {
        let mut w = WeylElement::identity(self.rank);
        for &i in word {
            w = w.compose(&self.simple_reflection(i));
        }
        w
    }

    fn longest_parabolic(&self, nodes: &[usize]) -> WeylElement {
        let mut z = vec![0; self.rank];
        for &i in nodes {
            z[i] = 1;
        }
        let mut w = WeylElement::identity(self.rank);
        while let Some(&i) = nodes.iter().find(|&&i| z[i] > 0) {
            z = self.reflect(&z, i);
            w = self.simple_reflection(i).compose(&w);
        }
        w
    }

    /// All elements of W, if |W| is within the cap.
    pub fn weyl_group(&self) -> Result<Vec<WeylElement>> {
        let id = WeylElement::identity(self.rank);
        let mut seen: HashSet<WeylElement> = HashSet::from([id.clone()]);
        let mut out = vec![id.clone()];
        let mut queue = VecDeque::from([id]);
        let gens: Vec<_> = (0..self.rank).map(|i| self.simple_reflection(i)).collect();
        while let Some(w) = queue.pop_front() {
            for g in &gens {
                let x = w.compose(g);
                if seen.insert(x.clone()) {
                    if seen.len() > self.weyl_cap {
                        return Err(Error::Config(format!("|W| exceeds the cap {}", self.weyl_cap)));
                    }
                    out.push(x.clone());
                    queue.push_back(x);
                }
            }
        }
        Ok(out)
    }

    pub fn is_antidominant(&self, z: &[i64]) -> bool {
        z.iter().all(|&x| x <= 0)
    }

    pub fn is_dominant(&self, z: &[i64]) -> bool {
        z.iter().all(|&x| x >= 0)
    }

    /// Anti-dominant representative of the W-orbit and w with w z = rep.
    pub fn to_antidominant(&self, z: &[i64]) -> (Weight, WeylElement) {
        let mut v = z.to_vec();
        let mut w = WeylElement::identity(self.rank);
        while let Some(i) = (0..self.rank).find(|&i| v[i] > 0) {
            v = self.reflect(&v, i);
            w = self.simple_reflection(i).compose(&w);
        }
        (v, w)
    }

    /// The W-orbit of z, sorted.
    pub fn orbit(&self, z: &[i64]) -> Vec<Weight> {
        let mut seen: HashSet<Weight> = HashSet::from([z.to_vec()]);
        let mut queue = VecDeque::from([z.to_vec()]);
        while let Some(v) = queue.pop_front() {
            for i in 0..self.rank {
                if v[i] != 0 {
                    let u = self.reflect(&v, i);
                    if seen.insert(u.clone()) {
                        queue.push_back(u);
                    }
                }
            }
        }
        let mut out: Vec<Weight> = seen.into_iter().collect();
        out.sort();
        out
    }

    /// Rational coefficients of z in the simple coroots a_i.
    pub fn coroot_coords_rational(&self, z: &[i64]) -> Vec<Q> {
        (0..self.rank)
            .map(|j| {
                let mut s = Q::from_integer(0);
                for k in 0..self.rank {
                    s += self.gram[k][j] * Q::from_integer(z[k]);
                }
                s * Q::new(self.class_nu3[self.node_class[j]], 6)
            })
            .collect()
    }

    /// Coefficients of z in the simple coroots a_i, when z lies in A.
    pub fn coroot_coords(&self, z: &[i64]) -> Option<Vec<i64>> {
        let c = self.coroot_coords_rational(z);
        if c.iter().all(|x| x.is_integer()) {
            Some(c.iter().map(|x| x.to_integer()).collect())
        } else {
            None
        }
    }

    /// All anti-dominant c with c = b or c > b, b first, by increasing height.
    pub fn dominance_span(&self, b: &[i64]) -> Vec<Weight> {
        let neg: Weight = b.iter().map(|x| -x).collect();
        let bound: Vec<i64> = self.coroot_coords_rational(&neg).iter().map(|x| x.floor().to_integer().max(0)).collect();
        let mut out = Vec::new();
        let mut k = vec![0i64; self.rank];
        loop {
            let mut c = b.to_vec();
            for (i, &ki) in k.iter().enumerate() {
                for j in 0..self.rank {
                    c[j] += ki * self.cartan[i][j];
                }
            }
            if self.is_antidominant(&c) {
                out.push(c);
            }
            let mut i = 0;
            loop {
                if i == self.rank {
                    out.sort_by_key(|c| (self.height_functional(c), c.clone()));
                    return out;
                }
                k[i] += 1;
                if k[i] <= bound[i] {
                    break;
                }
                k[i] = 0;
                i += 1;
            }
        }
    }

    /// sum over positive roots of (z, alpha); strictly increasing along the dominance order.
    pub fn height_functional(&self, z: &[i64]) -> i64 {
        (0..self.npos).map(|i| self.root_pair(z, i)).sum()
    }

    /// Compare b with c in the order c > b iff c - b is a nonzero element of A_+.
    pub fn dominance_compare(&self, b: &[i64], c: &[i64]) -> Dominance {
        if b == c {
            return Dominance::Equal;
        }
        let d: Weight = c.iter().zip(b).map(|(x, y)| x - y).collect();
        match self.coroot_coords(&d) {
            Some(k) if k.iter().all(|&x| x >= 0) => Dominance::Less,
            Some(k) if k.iter().all(|&x| x <= 0) => Dominance::Greater,
            _ => Dominance::Incomparable,
        }
    }

    /// Sum of (z, alpha) over positive roots of class `c`; equals 2 (z, rho_nu).
    pub fn rho_exp(&self, z: &[i64], c: usize) -> i64 {
        (0..self.npos).filter(|&i| self.roots[i].class == c).map(|i| self.root_pair(z, i)).sum()
    }

    /// r_nu = sum of b_i over nodes of class c.
    pub fn r_nu(&self, c: usize) -> Weight {
        (0..self.rank).map(|i| (self.node_class[i] == c) as i64).collect()
    }

    /// The affine simple reflection s_j, 0 <= j <= n.
    pub fn affine_simple(&self, j: usize) -> AffineElement {
        if j == 0 {
            let th = self.theta_coroot();
            AffineElement { w: self.root_reflection(self.theta), b: th.iter().map(|x| -x).collect() }
        } else {
            AffineElement::finite(self.simple_reflection(j - 1))
        }
    }

    /// Image of the affine root [alpha, k] under an affine element.
    pub fn act_affine_root(&self, g: &AffineElement, root: usize, k: i64) -> (usize, i64) {
        let a = g.w.apply(&self.roots[root].coroot);
        let img = self.root_of_coroot(&a).expect("W permutes roots");
        (img, k - self.root_pair(&g.b, root))
    }

    pub fn affine_root_positive(&self, root: usize, k: i64) -> bool {
        k > 0 || (k == 0 && self.is_positive(root))
    }

    fn affine_simple_root(&self, j: usize) -> (usize, i64) {
        if j == 0 {
            (self.theta + self.npos, 1)
        } else {
            (j - 1, 0)
        }
    }

    fn node_permutation(&self, g: &AffineElement) -> Result<Vec<usize>> {
        (0..=self.rank)
            .map(|j| {
                let (r, k) = self.affine_simple_root(j);
                let img = self.act_affine_root(g, r, k);
                (0..=self.rank)
                    .find(|&i| self.affine_simple_root(i) == img)
                    .ok_or_else(|| Error::Invariant("length-zero element does not permute simple roots".into()))
            })
            .collect()
    }

    /// Inversion set: positive affine roots sent to negative ones.
    pub fn inversions(&self, g: &AffineElement) -> Vec<(usize, i64)> {
        let rho: Weight = vec![1; self.rank];
        let u = g.w.apply_inv(&rho);
        let mut out = Vec::new();
        for (i, _) in self.roots.iter().enumerate() {
            let c = self.root_pair(&g.b, i);
            // wα < 0 iff (wα, ρ) < 0 iff (α, w^{-1} ρ) < 0
            let neg = self.root_pair(&u, i) < 0;
            let kmin = if self.is_positive(i) { 0 } else { 1 };
            for k in kmin..c {
                out.push((i, k));
            }
            if c >= kmin && neg {
                out.push((i, c));
            }
        }
        out
    }

    pub fn length(&self, g: &AffineElement) -> usize {
        let rho: Weight = vec![1; self.rank];
        let u = g.w.apply_inv(&rho);
        let mut l = 0i64;
        for i in 0..self.roots.len() {
            let c = self.root_pair(&g.b, i);
            let neg = self.root_pair(&u, i) < 0;
            let kmin = if self.is_positive(i) { 0 } else { 1 };
            l += (c - kmin).max(0) + (c >= kmin && neg) as i64;
        }
        l as usize
    }

    /// Lengths l_nu per class.
    pub fn lengths_by_class(&self, g: &AffineElement) -> Vec<usize> {
        let mut l = vec![0; self.num_classes()];
        for (r, _) in self.inversions(g) {
            l[self.roots[r].class] += 1;
        }
        l
    }

    /// Reduced word: g = pi_r s_{j_1} ... s_{j_l}, greedy smallest left descent.
    /// Returns the index of pi_r in `pis` and the word.
    pub fn reduced_word(&self, g: &AffineElement) -> Result<(usize, Vec<usize>)> {
        let mut cur = g.clone();
        let mut l = self.length(&cur);
        let mut word = Vec::with_capacity(l);
        while l > 0 {
            let mut found = false;
            for j in 0..=self.rank {
                let h = self.affine_simple(j).compose(&cur);
                let lh = self.length(&h);
                if lh < l {
                    word.push(j);
                    cur = h;
                    l = lh;
                    found = true;
                    break;
                }
            }
            if !found {
                return Err(Error::Invariant("no descent for a nonidentity element".into()));
            }
        }
        let r = self
            .pis
            .iter()
            .position(|p| *p == cur)
            .ok_or_else(|| Error::Invariant("length-zero remainder is not in Pi".into()))?;
        // g = s_{j1} ... s_{jl} pi_r = pi_r s_{pi^{-1}(j1)} ...
        let perm = &self.pi_perm[r];
        let word = word
            .iter()
            .map(|&j| (0..=self.rank).find(|&i| perm[i] == j).unwrap())
            .collect();
        Ok((r, word))
    }

    pub fn compose_word(&self, r: usize, word: &[usize]) -> AffineElement {
        let mut g = self.pis[r].clone();
        for &j in word {
            g = g.compose(&self.affine_simple(j));
        }
        g
    }

    /// Cached reduced word of the translation b_i.
    pub fn translation_word(&self, i: usize) -> &(usize, Vec<usize>) {
        &self.translation_words[i]
    }

    /// Index r in O (0 or a node + 1 convention-free) of pi_k.
    pub fn o_index(&self, k: usize) -> usize {
        if k == 0 {
            0
        } else {
            self.o_star[k - 1] + 1
        }
    }

    /// -w0 z.
    pub fn dual(&self, z: &[i64]) -> Weight {
        self.w0.apply(z).iter().map(|x| -x).collect()
    }

    pub fn gram_rational(&self, i: usize, j: usize) -> Q {
        self.gram[i][j]
    }

    pub fn to_json(&self) -> Value {
        let q = |x: &Q| x.to_string();
        json!({
            "system": self.label(),
            "cartan": self.cartan,
            "gram": self.gram.iter().map(|r| r.iter().map(q).collect::<Vec<_>>()).collect::<Vec<_>>(),
            "simple_root_lengths": (0..self.rank).map(|i| Q::new(self.class_nu3[self.node_class[i]], 3).to_string()).collect::<Vec<_>>(),
            "positive_roots": self.positive_roots().iter().map(|r| r.coeffs.clone()).collect::<Vec<_>>(),
            "positive_coroots": self.positive_roots().iter().map(|r| r.coroot.clone()).collect::<Vec<_>>(),
            "highest_root": self.roots[self.theta].coeffs,
            "O": std::iter::once(0).chain(self.o_star.iter().map(|r| r + 1)).collect::<Vec<_>>(),
            "O_star": self.o_star.iter().map(|r| r + 1).collect::<Vec<_>>(),
            "m": self.m,
            "mhat": self.mhat,
        })
    }
}
