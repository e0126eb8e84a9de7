//! Dense square matrices over an exact field.

use serde_json::{json, Value};

use crate::coeffdomain::{Cyclo, Scalar};

#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<S> {
    pub n: usize,
    a: Vec<S>,
}

impl<S: Scalar> Matrix<S> {
    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> S) -> Self {
        let mut a = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                a.push(f(i, j));
            }
        }
        Matrix { n, a }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| if i == j { S::one() } else { S::zero() })
    }

    pub fn diag(d: &[S]) -> Self {
        Self::from_fn(d.len(), |i, j| if i == j { d[i].clone() } else { S::zero() })
    }

    pub fn permutation(p: &[usize]) -> Self {
        Self::from_fn(p.len(), |i, j| if p[i] == j { S::one() } else { S::zero() })
    }

    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.a[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> Vec<S> {
        self.a[i * self.n..(i + 1) * self.n].to_vec()
    }

    pub fn mul(&self, o: &Self) -> Self {
        let n = self.n;
        let mut a = vec![S::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let x = self.get(i, k);
                if x.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let y = o.get(k, j);
                    if !y.is_zero() {
                        a[i * n + j].add_assign(&x.mul(y));
                    }
                }
            }
        }
        Matrix { n, a }
    }

    pub fn chain(ms: &[&Self]) -> Self {
        let mut acc = ms[0].clone();
        for m in &ms[1..] {
            acc = acc.mul(m);
        }
        acc
    }

    pub fn apply(&self, v: &[S]) -> Vec<S> {
        (0..self.n)
            .map(|i| {
                let mut s = S::zero();
                for (j, x) in v.iter().enumerate() {
                    s.add_assign(&self.get(i, j).mul(x));
                }
                s
            })
            .collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, |i, j| self.get(j, i).clone())
    }

    /// Entrywise conjugation.
    pub fn plus(&self) -> Self {
        Matrix { n: self.n, a: self.a.iter().map(|x| x.conj()).collect() }
    }

    pub fn dagger(&self) -> Self {
        self.transpose().plus()
    }

    pub fn scale(&self, k: &S) -> Self {
        Matrix { n: self.n, a: self.a.iter().map(|x| x.mul(k)).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        Matrix { n: self.n, a: self.a.iter().zip(&o.a).map(|(x, y)| x.sub(y)).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.a.iter().all(|x| x.is_zero())
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| i == j || self.get(i, j).is_zero()))
    }

    pub fn inverse(&self) -> Option<Self> {
        let n = self.n;
        let mut m = self.clone();
        let mut inv = Self::identity(n);
        for c in 0..n {
            let r = (c..n).find(|&r| !m.get(r, c).is_zero())?;
            if r != c {
                for j in 0..n {
                    m.a.swap(r * n + j, c * n + j);
                    inv.a.swap(r * n + j, c * n + j);
                }
            }
            let p = m.get(c, c).inv()?;
            for j in 0..n {
                m.a[c * n + j] = m.a[c * n + j].mul(&p);
                inv.a[c * n + j] = inv.a[c * n + j].mul(&p);
            }
            for r in 0..n {
                if r == c || m.get(r, c).is_zero() {
                    continue;
                }
                let f = m.get(r, c).clone();
                for j in 0..n {
                    let (x, y) = (m.get(c, j).mul(&f), inv.get(c, j).mul(&f));
                    m.a[r * n + j] = m.a[r * n + j].sub(&x);
                    inv.a[r * n + j] = inv.a[r * n + j].sub(&y);
                }
            }
        }
        Some(inv)
    }

    /// lambda with self = lambda * o, if one exists.
    pub fn proportional_to(&self, o: &Self) -> Option<S> {
        let idx = (0..self.a.len()).find(|&i| !o.a[i].is_zero())?;
        let lambda = self.a[idx].div(&o.a[idx])?;
        if lambda.is_zero() {
            return None;
        }
        (*self == o.scale(&lambda)).then_some(lambda)
    }

    /// (lambda, p) with self = lambda * Permutation(p).
    pub fn scalar_permutation(&self) -> Option<(S, Vec<usize>)> {
        let mut perm = Vec::with_capacity(self.n);
        let mut lambda: Option<S> = None;
        for i in 0..self.n {
            let nz: Vec<usize> = (0..self.n).filter(|&j| !self.get(i, j).is_zero()).collect();
            if nz.len() != 1 {
                return None;
            }
            let v = self.get(i, nz[0]);
            match &lambda {
                None => lambda = Some(v.clone()),
                Some(l) if l != v => return None,
                _ => {}
            }
            perm.push(nz[0]);
        }
        Some((lambda?, perm))
    }
}

/// Rank of a list of vectors.
pub fn rank<S: Scalar>(vs: &[Vec<S>]) -> usize {
    let mut rows: Vec<Vec<S>> = vs.to_vec();
    let m = rows.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..m {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let inv = rows[r][c].inv().expect("nonzero pivot");
        for i in r + 1..rows.len() {
            if rows[i][c].is_zero() {
                continue;
            }
            let f = rows[i][c].mul(&inv);
            for j in c..m {
                let x = rows[r][j].mul(&f);
                rows[i][j] = rows[i][j].sub(&x);
            }
        }
        r += 1;
    }
    r
}

impl Matrix<Cyclo> {
    /// Entries as vectors of rational coefficients in zeta (ascending powers).
    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = (0..self.n)
            .map(|i| Value::Array((0..self.n).map(|j| cyclo_json(self.get(i, j))).collect()))
            .collect();
        Value::Array(rows)
    }
}

pub fn cyclo_json(x: &Cyclo) -> Value {
    json!(x.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>())
}
