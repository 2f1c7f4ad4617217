//! The simple module `L(λ)` built weight space by weight space.
//!
//! Each weight space `L_μ` is spanned by the vectors `f_i^{(a)} y` with `y` in
//! `L_{μ+aα_i}`. Their Gram matrix under the contravariant form is computed from
//! data at higher weights, using `<f_i^{(a)} y, v> = <y, e_i^{(a)} v>` and the
//! commutation rule
//! `e^{(a)} f^{(c)} z = Σ_t C(<ζ,α^∨> + a - c, t) f^{(c-t)} e^{(a-t)} z`.
//! A maximal nondegenerate subset of candidates is a basis of `L_μ`.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::rootsys::RootSystem;

use super::field::{binom, independent_rows, solve, Field};
use super::OracleLimits;

struct Space<E> {
    weight: Vec<i64>,
    dim: usize,
    gram: Vec<Vec<E>>,
    /// `(j, c)` → columns: coordinates of `f_j^{(c)} z` for basis `z` of `L_{μ+cα_j}`.
    f_in: HashMap<(usize, u32), Vec<Vec<E>>>,
    /// `(i, a)` → columns: coordinates of `e_i^{(a)} b` in `L_{μ+aα_i}`.
    e_out: HashMap<(usize, u32), Vec<Vec<E>>>,
}

/// Dimensions of all nonzero weight spaces of a simple module.
pub struct QuotientModule {
    pub dims: BTreeMap<Vec<i64>, usize>,
    pub explored: usize,
}

struct Builder<'a, F: Field> {
    f: &'a F,
    rs: &'a RootSystem,
    lambda: Vec<i64>,
    spaces: Vec<Space<F::Elem>>,
    index: HashMap<Vec<i64>, usize>,
    in_weights: HashMap<Vec<i64>, bool>,
}

impl<'a, F: Field> Builder<'a, F> {
    fn is_weight(&mut self, mu: &[i64]) -> bool {
        if let Some(&b) = self.in_weights.get(mu) {
            return b;
        }
        let d = self.rs.dominant_rep(mu);
        let b = self.rs.dominates(&self.lambda, &d);
        self.in_weights.insert(mu.to_vec(), b);
        b
    }

    fn shift(&self, mu: &[i64], i: usize, a: i64) -> Vec<i64> {
        mu.iter().zip(&self.rs.cartan[i]).map(|(x, r)| x + a * r).collect()
    }

    fn apply(&self, cols: &[Vec<F::Elem>], v: &[F::Elem], out_dim: usize) -> Vec<F::Elem> {
        let f = self.f;
        let mut out = vec![f.zero(); out_dim];
        for (x, col) in v.iter().zip(cols) {
            if f.is_zero(x) {
                continue;
            }
            for (o, c) in out.iter_mut().zip(col) {
                *o = f.add(o, &f.mul(x, c));
            }
        }
        out
    }

    /// `e_i^{(a)} f_j^{(c)} z` as a vector in `L_{μ+aα_i}` (space `t`).
    fn e_of_f(&self, i: usize, a: u32, t: usize, j: usize, c: u32, s: usize, z: usize) -> Vec<F::Elem> {
        let f = self.f;
        let tgt = &self.spaces[t];
        let src = &self.spaces[s];
        let zero = || vec![f.zero(); tgt.dim];
        if i != j {
            let Some(e) = src.e_out.get(&(i, a)) else { return zero() };
            let Some(fm) = tgt.f_in.get(&(j, c)) else { return zero() };
            return self.apply(fm, &e[z], tgt.dim);
        }
        let h = src.weight[i];
        let mut w = zero();
        for step in 0..=a.min(c) {
            let coef = f.from_i128(binom(h + a as i64 - c as i64, step));
            if f.is_zero(&coef) {
                continue;
            }
            let v: Vec<F::Elem> = if a > step {
                match src.e_out.get(&(i, a - step)) {
                    Some(e) => e[z].clone(),
                    None => continue,
                }
            } else {
                let mut u = vec![f.zero(); src.dim];
                u[z] = f.one();
                u
            };
            let v = if c > step {
                match tgt.f_in.get(&(i, c - step)) {
                    Some(fm) => self.apply(fm, &v, tgt.dim),
                    None => continue,
                }
            } else {
                v
            };
            for (o, x) in w.iter_mut().zip(&v) {
                *o = f.add(o, &f.mul(&coef, x));
            }
        }
        w
    }
}

pub fn build<F: Field>(f: &F, rs: &RootSystem, lambda: &[i64], limits: &OracleLimits) -> Result<QuotientModule> {
    let n = rs.rank;
    let mut b = Builder {
        f,
        rs,
        lambda: lambda.to_vec(),
        spaces: vec![],
        index: HashMap::new(),
        in_weights: HashMap::new(),
    };
    b.spaces.push(Space {
        weight: lambda.to_vec(),
        dim: 1,
        gram: vec![vec![f.one()]],
        f_in: HashMap::new(),
        e_out: HashMap::new(),
    });
    b.index.insert(lambda.to_vec(), 0);

    let mut pending: BTreeMap<u32, BTreeSet<Vec<i64>>> = BTreeMap::new();
    let mut visited: BTreeSet<Vec<i64>> = BTreeSet::new();
    visited.insert(lambda.to_vec());
    let push = |b: &mut Builder<F>,
                pending: &mut BTreeMap<u32, BTreeSet<Vec<i64>>>,
                visited: &mut BTreeSet<Vec<i64>>,
                mu: &[i64],
                depth: u32| {
        for i in 0..n {
            let mut a = 1;
            loop {
                let nu = b.shift(mu, i, -a);
                if !b.is_weight(&nu) {
                    break;
                }
                if visited.insert(nu.clone()) {
                    pending.entry(depth + a as u32).or_default().insert(nu);
                }
                a += 1;
            }
        }
    };
    push(&mut b, &mut pending, &mut visited, lambda, 0);

    while let Some((&depth, _)) = pending.iter().next() {
        let level = pending.remove(&depth).unwrap();
        for mu in level {
            if visited.len() > limits.max_weights {
                return Err(Error::Refused(format!(
                    "more than {} weight spaces explored",
                    limits.max_weights
                )));
            }
            // sources: (i, a, space index)
            let mut sources = vec![];
            for i in 0..n {
                for a in 1..=depth {
                    let nu = b.shift(&mu, i, a as i64);
                    if !b.is_weight(&nu) {
                        break;
                    }
                    if let Some(&s) = b.index.get(&nu) {
                        sources.push((i, a, s));
                    }
                }
            }
            let mut cands = vec![];
            for (k, &(_, _, s)) in sources.iter().enumerate() {
                for z in 0..b.spaces[s].dim {
                    cands.push((k, z));
                }
            }
            let kk = cands.len();
            if kk == 0 {
                continue;
            }
            if kk > limits.max_candidates {
                return Err(Error::Refused(format!(
                    "{kk} spanning vectors at one weight exceeds {}",
                    limits.max_candidates
                )));
            }
            // w[t][c] = e_{i_t}^{(a_t)} (candidate c), in space of source t
            let mut w: Vec<Vec<Vec<F::Elem>>> = Vec::with_capacity(sources.len());
            for &(i, a, t) in &sources {
                let row: Vec<Vec<F::Elem>> = cands
                    .iter()
                    .map(|&(k, z)| {
                        let (j, c, s) = sources[k];
                        b.e_of_f(i, a, t, j, c, s, z)
                    })
                    .collect();
                w.push(row);
            }
            let mut gram: Vec<Vec<F::Elem>> = Vec::with_capacity(kk);
            for &(k, y) in &cands {
                let t = sources[k].2;
                let g = &b.spaces[t].gram[y];
                let row: Vec<F::Elem> = (0..kk)
                    .map(|c| {
                        let mut s = f.zero();
                        for (gx, wx) in g.iter().zip(&w[k][c]) {
                            if !f.is_zero(wx) {
                                s = f.add(&s, &f.mul(gx, wx));
                            }
                        }
                        s
                    })
                    .collect();
                gram.push(row);
            }
            for r in 0..kk {
                for c in r + 1..kk {
                    if gram[r][c] != gram[c][r] {
                        return Err(Error::Internal(format!("asymmetric Gram matrix at {mu:?}")));
                    }
                }
            }
            let basis = independent_rows(f, &gram);
            let m = basis.len();
            if m == 0 {
                continue;
            }
            let gb: Vec<Vec<F::Elem>> = basis.iter().map(|&r| basis.iter().map(|&c| gram[r][c].clone()).collect()).collect();
            let rhs: Vec<Vec<F::Elem>> = basis.iter().map(|&r| gram[r].clone()).collect();
            let x = solve(f, &gb, &rhs);
            let mut f_in: HashMap<(usize, u32), Vec<Vec<F::Elem>>> = HashMap::new();
            for (c, &(k, _)) in cands.iter().enumerate() {
                let (j, a, _) = sources[k];
                f_in.entry((j, a)).or_default().push((0..m).map(|r| x[r][c].clone()).collect());
            }
            let mut e_out = HashMap::new();
            for (t, &(i, a, _)) in sources.iter().enumerate() {
                let cols: Vec<Vec<F::Elem>> = basis.iter().map(|&c| w[t][c].clone()).collect();
                e_out.insert((i, a), cols);
            }
            let idx = b.spaces.len();
            b.spaces.push(Space { weight: mu.clone(), dim: m, gram: gb, f_in, e_out });
            b.index.insert(mu.clone(), idx);
            push(&mut b, &mut pending, &mut visited, &mu, depth);
        }
    }
    let dims = b.spaces.iter().map(|s| (s.weight.clone(), s.dim)).collect();
    Ok(QuotientModule { dims, explored: visited.len() })
}
