//! Classical root systems in Bourbaki labelling.
//!
//! Weights are carried in fundamental-weight coordinates. The orthonormal
//! ε-basis is used with doubled coordinates so that spin weights stay integral;
//! for type A the ε-vector has length n+1 and is read modulo (1,...,1).

mod chevalley;

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock, RwLock};

use num::rational::Ratio;
use num::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use chevalley::ChevalleyData;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
        };
        f.write_str(s)
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(Family::A),
            "B" | "b" => Ok(Family::B),
            "C" | "c" => Ok(Family::C),
            "D" | "d" => Ok(Family::D),
            other => Err(Error::InvalidGroup(format!("unknown family `{other}`"))),
        }
    }
}

impl Family {
    pub fn min_rank(self) -> usize {
        match self {
            Family::A | Family::C => 1,
            Family::B => 2,
            Family::D => 3,
        }
    }
}

pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// A simple algebraic group of classical type together with the field characteristic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupId {
    pub family: Family,
    pub rank: usize,
    pub p: u64,
}

impl GroupId {
    pub fn new(family: Family, rank: usize, p: u64) -> Result<Self> {
        if rank < family.min_rank() {
            return Err(Error::InvalidGroup(format!(
                "{family}{rank}: rank must be at least {}",
                family.min_rank()
            )));
        }
        if rank > 64 {
            return Err(Error::InvalidGroup(format!("{family}{rank}: rank too large")));
        }
        if !is_prime(p) {
            return Err(Error::InvalidGroup(format!("characteristic {p} is not prime")));
        }
        if family == Family::B && p == 2 {
            return Err(Error::InvalidGroup("type B requires odd characteristic".into()));
        }
        Ok(GroupId { family, rank, p })
    }

    /// Parse a label like `A4` or `c3`.
    pub fn parse(label: &str, p: u64) -> Result<Self> {
        let label = label.trim();
        let mut chars = label.chars();
        let fam: Family = chars
            .next()
            .ok_or_else(|| Error::InvalidGroup("empty group label".into()))?
            .to_string()
            .parse()?;
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::InvalidGroup(format!("bad group label `{label}`")))?;
        GroupId::new(fam, rank, p)
    }

    pub fn with_rank(&self, rank: usize) -> Result<Self> {
        GroupId::new(self.family, rank, self.p)
    }

    pub fn label(&self) -> String {
        format!("{}{}", self.family, self.rank)
    }

    pub fn root_system(&self) -> Arc<RootSystem> {
        root_system(self.family, self.rank)
    }
}

impl fmt::Display for GroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{} (p={})", self.family, self.rank, self.p)
    }
}

/// A positive root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Root {
    /// Coefficients in the simple roots.
    pub coeffs: Vec<i64>,
    /// Pairings with the simple coroots.
    pub fw: Vec<i64>,
    /// Doubled ε-coordinates.
    pub eps: Vec<i64>,
    /// Coefficients of the coroot in the simple coroots.
    pub coroot: Vec<i64>,
}

impl Root {
    pub fn height(&self) -> i64 {
        self.coeffs.iter().sum()
    }
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    pub family: Family,
    pub rank: usize,
    /// `cartan[i][j] = <α_i, α_j^∨>`; row i is α_i in fundamental coordinates.
    pub cartan: Vec<Vec<i64>>,
    /// Positive roots in height-then-lex order.
    pub positive_roots: Vec<Root>,
    /// Doubled ε-coordinates of the fundamental weights.
    pub fundamental_eps: Vec<Vec<i64>>,
    pub max_root: usize,
    fw_gram: Vec<Vec<i64>>,
    inv_cartan_t: Vec<Vec<i64>>,
    inv_den: i64,
}

static CACHE: OnceLock<RwLock<HashMap<(Family, usize), Arc<RootSystem>>>> = OnceLock::new();

/// Shared, lazily built root system.
pub fn root_system(family: Family, rank: usize) -> Arc<RootSystem> {
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(rs) = cache.read().unwrap().get(&(family, rank)) {
        return rs.clone();
    }
    let rs = Arc::new(RootSystem::build(family, rank));
    cache.write().unwrap().entry((family, rank)).or_insert(rs).clone()
}

fn unit(len: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; len];
    v[i] = 1;
    v
}

impl RootSystem {
    fn build(family: Family, n: usize) -> RootSystem {
        let len = if family == Family::A { n + 1 } else { n };
        // simple roots, doubled
        let mut simple: Vec<Vec<i64>> = (0..n.saturating_sub(1))
            .map(|i| {
                let mut v = vec![0; len];
                v[i] = 2;
                v[i + 1] = -2;
                v
            })
            .collect();
        let last = match family {
            Family::A => {
                let mut v = vec![0; len];
                v[n - 1] = 2;
                v[n] = -2;
                v
            }
            Family::B => {
                let mut v = vec![0; len];
                v[n - 1] = 2;
                v
            }
            Family::C => {
                let mut v = vec![0; len];
                v[n - 1] = 4;
                v
            }
            Family::D => {
                let mut v = vec![0; len];
                v[n - 2] = 2;
                v[n - 1] = 2;
                v
            }
        };
        simple.push(last);

        let ip = |x: &[i64], y: &[i64]| -> i64 { eps_ip(family, x, y) };
        let cartan: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| 2 * ip(&simple[i], &simple[j]) / ip(&simple[j], &simple[j]))
                    .collect()
            })
            .collect();

        // positive roots by root strings
        let mut coeffs_list: Vec<Vec<i64>> = (0..n).map(|i| unit(n, i)).collect();
        let mut known: BTreeSet<Vec<i64>> = coeffs_list.iter().cloned().collect();
        let fw_of = |c: &[i64]| -> Vec<i64> {
            (0..n).map(|j| (0..n).map(|i| c[i] * cartan[i][j]).sum()).collect()
        };
        let mut idx = 0;
        while idx < coeffs_list.len() {
            let beta = coeffs_list[idx].clone();
            let fw = fw_of(&beta);
            for i in 0..n {
                let mut r = 0;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if known.contains(&down) {
                        r += 1;
                    } else {
                        break;
                    }
                }
                let q = r - fw[i];
                if q > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if known.insert(up.clone()) {
                        coeffs_list.push(up);
                    }
                }
            }
            idx += 1;
        }
        coeffs_list.sort_by(|a, b| {
            let ha: i64 = a.iter().sum();
            let hb: i64 = b.iter().sum();
            ha.cmp(&hb).then_with(|| b.cmp(a))
        });
        let sq: Vec<i64> = simple.iter().map(|s| ip(s, s)).collect();
        let positive_roots: Vec<Root> = coeffs_list
            .into_iter()
            .map(|c| {
                let eps: Vec<i64> = (0..len)
                    .map(|k| (0..n).map(|i| c[i] * simple[i][k]).sum())
                    .collect();
                let norm = ip(&eps, &eps);
                let coroot = (0..n).map(|i| c[i] * sq[i] / norm).collect();
                Root { fw: fw_of(&c), coeffs: c, eps, coroot }
            })
            .collect();
        let max_root = positive_roots.len() - 1;

        let fundamental_eps: Vec<Vec<i64>> = (0..n).map(|i| fundamental_eps(family, n, i)).collect();
        let fw_gram = (0..n)
            .map(|i| (0..n).map(|j| ip(&fundamental_eps[i], &fundamental_eps[j])).collect())
            .collect();

        // inverse of the transposed Cartan matrix, scaled to integers
        let mut m: Vec<Vec<Ratio<i64>>> = (0..n)
            .map(|i| {
                let mut row: Vec<Ratio<i64>> = (0..n).map(|j| Ratio::from(cartan[j][i])).collect();
                row.extend((0..n).map(|j| if i == j { Ratio::one() } else { Ratio::zero() }));
                row
            })
            .collect();
        for col in 0..n {
            let piv = (col..n).find(|&r| !m[r][col].is_zero()).expect("Cartan matrix is invertible");
            m.swap(col, piv);
            let inv = Ratio::one() / m[col][col];
            for x in m[col].iter_mut() {
                *x *= inv;
            }
            for r in 0..n {
                if r != col && !m[r][col].is_zero() {
                    let f = m[r][col];
                    for k in 0..2 * n {
                        let v = m[col][k] * f;
                        m[r][k] -= v;
                    }
                }
            }
        }
        let mut den = 1i64;
        for row in &m {
            for x in &row[n..] {
                den = num::integer::lcm(den, *x.denom());
            }
        }
        let inv_cartan_t = m
            .iter()
            .map(|row| row[n..].iter().map(|x| (x * den).to_integer()).collect())
            .collect();

        RootSystem {
            family,
            rank: n,
            cartan,
            positive_roots,
            fundamental_eps,
            max_root,
            fw_gram,
            inv_cartan_t,
            inv_den: den,
        }
    }

    pub fn eps_len(&self) -> usize {
        if self.family == Family::A {
            self.rank + 1
        } else {
            self.rank
        }
    }

    /// Simple root `i` (0-based) in fundamental coordinates.
    pub fn simple_root_fw(&self, i: usize) -> &[i64] {
        &self.cartan[i]
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    pub fn max_root(&self) -> &Root {
        &self.positive_roots[self.max_root]
    }

    /// Doubled ε-coordinates of a weight; type A normalised to minimum 0.
    pub fn to_eps(&self, fw: &[i64]) -> Vec<i64> {
        let len = self.eps_len();
        let mut out = vec![0i64; len];
        for (i, &a) in fw.iter().enumerate() {
            if a != 0 {
                for (o, e) in out.iter_mut().zip(&self.fundamental_eps[i]) {
                    *o += a * e;
                }
            }
        }
        if self.family == Family::A {
            let m = *out.iter().min().unwrap();
            for o in out.iter_mut() {
                *o -= m;
            }
        }
        out
    }

    /// Inverse of [`to_eps`](Self::to_eps). `None` if the vector is not a weight.
    pub fn from_eps(&self, eps: &[i64]) -> Option<Vec<i64>> {
        let n = self.rank;
        if eps.len() != self.eps_len() {
            return None;
        }
        let half = |x: i64| if x % 2 == 0 { Some(x / 2) } else { None };
        let mut out = Vec::with_capacity(n);
        match self.family {
            Family::A => {
                for i in 0..n {
                    out.push(half(eps[i] - eps[i + 1])?);
                }
            }
            Family::B => {
                for i in 0..n - 1 {
                    out.push(half(eps[i] - eps[i + 1])?);
                }
                out.push(eps[n - 1]);
                if eps.iter().any(|x| (x - eps[0]) % 2 != 0) {
                    return None;
                }
            }
            Family::C => {
                for i in 0..n - 1 {
                    out.push(half(eps[i] - eps[i + 1])?);
                }
                out.push(half(eps[n - 1])?);
            }
            Family::D => {
                for i in 0..n - 2 {
                    out.push(half(eps[i] - eps[i + 1])?);
                }
                out.push(half(eps[n - 2] - eps[n - 1])?);
                out.push(half(eps[n - 2] + eps[n - 1])?);
            }
        }
        Some(out)
    }

    /// Scaled inner product of two weights in fundamental coordinates.
    pub fn ip(&self, x: &[i64], y: &[i64]) -> i64 {
        let mut s = 0;
        for (i, &a) in x.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in y.iter().enumerate() {
                s += a * b * self.fw_gram[i][j];
            }
        }
        s
    }

    /// `<λ, β^∨>` for the positive root with index `root`.
    pub fn pairing(&self, fw: &[i64], root: usize) -> i64 {
        fw.iter().zip(&self.positive_roots[root].coroot).map(|(a, c)| a * c).sum()
    }

    /// `<λ, α_max^∨>`.
    pub fn delta(&self, fw: &[i64]) -> i64 {
        self.pairing(fw, self.max_root)
    }

    pub fn reflect(&self, fw: &mut [i64], i: usize) {
        let a = fw[i];
        if a != 0 {
            for (x, r) in fw.iter_mut().zip(&self.cartan[i]) {
                *x -= a * r;
            }
        }
    }

    pub fn is_dominant(fw: &[i64]) -> bool {
        fw.iter().all(|&a| a >= 0)
    }

    pub fn dominant_rep(&self, fw: &[i64]) -> Vec<i64> {
        let mut v = fw.to_vec();
        while let Some(i) = v.iter().position(|&a| a < 0) {
            self.reflect(&mut v, i);
        }
        v
    }

    /// The Weyl orbit of a weight.
    pub fn orbit(&self, fw: &[i64]) -> BTreeSet<Vec<i64>> {
        let start = self.dominant_rep(fw);
        let mut seen = BTreeSet::new();
        seen.insert(start.clone());
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for i in 0..self.rank {
                if v[i] > 0 {
                    let mut w = v.clone();
                    self.reflect(&mut w, i);
                    if !seen.contains(&w) {
                        seen.insert(w.clone());
                        queue.push_back(w);
                    }
                }
            }
        }
        seen
    }

    pub fn weyl_order(&self) -> u128 {
        weyl_order(self.family, self.rank)
    }

    /// Size of the orbit of a dominant weight, via its parabolic stabiliser.
    pub fn orbit_size(&self, dominant: &[i64]) -> u128 {
        let n = self.rank;
        let zero: Vec<bool> = dominant.iter().map(|&a| a == 0).collect();
        let mut seen = vec![false; n];
        let mut stab: u128 = 1;
        for s in 0..n {
            if !zero[s] || seen[s] {
                continue;
            }
            let mut comp = vec![];
            let mut stack = vec![s];
            seen[s] = true;
            while let Some(v) = stack.pop() {
                comp.push(v);
                for w in 0..n {
                    if w != v && zero[w] && !seen[w] && self.cartan[v][w] != 0 {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            let k = comp.len();
            let ty = match self.family {
                Family::A => Family::A,
                Family::B | Family::C => {
                    if comp.contains(&(n - 1)) {
                        Family::B
                    } else {
                        Family::A
                    }
                }
                Family::D => {
                    if comp.contains(&(n - 1)) && comp.contains(&(n - 2)) && comp.contains(&(n - 3)) {
                        Family::D
                    } else {
                        Family::A
                    }
                }
            };
            stab *= weyl_order(ty, k);
        }
        self.weyl_order() / stab
    }

    /// Coefficients of `fw` in the simple roots, if it lies in the root lattice.
    pub fn root_coords(&self, fw: &[i64]) -> Option<Vec<i64>> {
        let mut out = Vec::with_capacity(self.rank);
        for row in &self.inv_cartan_t {
            let s: i64 = row.iter().zip(fw).map(|(a, b)| a * b).sum();
            if s % self.inv_den != 0 {
                return None;
            }
            out.push(s / self.inv_den);
        }
        Some(out)
    }

    /// Dominance order: `λ ≥ μ` iff `λ - μ` is a non-negative sum of simple roots.
    pub fn dominates(&self, lambda: &[i64], mu: &[i64]) -> bool {
        let diff: Vec<i64> = lambda.iter().zip(mu).map(|(a, b)| a - b).collect();
        matches!(self.root_coords(&diff), Some(c) if c.iter().all(|&x| x >= 0))
    }

    /// `ρ` in fundamental coordinates.
    pub fn rho(&self) -> Vec<i64> {
        vec![1; self.rank]
    }

    pub fn chevalley(&self) -> ChevalleyData {
        ChevalleyData::new(self)
    }
}

fn fundamental_eps(family: Family, n: usize, i: usize) -> Vec<i64> {
    let len = if family == Family::A { n + 1 } else { n };
    let mut v = vec![0; len];
    let spin = |v: &mut Vec<i64>, neg_last: bool| {
        for x in v.iter_mut() {
            *x = 1;
        }
        if neg_last {
            v[n - 1] = -1;
        }
    };
    match family {
        Family::B if i == n - 1 => spin(&mut v, false),
        Family::D if i == n - 2 => spin(&mut v, true),
        Family::D if i == n - 1 => spin(&mut v, false),
        _ => {
            for x in v.iter_mut().take(i + 1) {
                *x = 2;
            }
        }
    }
    v
}

/// Inner product on doubled ε-vectors, scaled by `n+1` in type A so that it
/// is well defined modulo the all-ones vector.
pub(crate) fn eps_ip(family: Family, x: &[i64], y: &[i64]) -> i64 {
    let dot: i64 = x.iter().zip(y).map(|(a, b)| a * b).sum();
    if family == Family::A {
        let sx: i64 = x.iter().sum();
        let sy: i64 = y.iter().sum();
        x.len() as i64 * dot - sx * sy
    } else {
        dot
    }
}

pub fn weyl_order(family: Family, k: usize) -> u128 {
    let fact = |m: usize| (1..=m as u128).product::<u128>();
    match family {
        Family::A => fact(k + 1),
        Family::B | Family::C => (1u128 << k) * fact(k),
        Family::D => (1u128 << (k - 1)) * fact(k),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn positive_root_counts() {
        assert_eq!(root_system(Family::A, 2).num_positive_roots(), 3);
        assert_eq!(root_system(Family::B, 3).num_positive_roots(), 9);
        assert_eq!(root_system(Family::C, 4).num_positive_roots(), 16);
        assert_eq!(root_system(Family::D, 4).num_positive_roots(), 12);
        assert_eq!(root_system(Family::D, 3).num_positive_roots(), 6);
    }

    #[test]
    fn highest_roots() {
        assert_eq!(root_system(Family::C, 3).max_root().eps, vec![4, 0, 0]);
        assert_eq!(root_system(Family::B, 3).max_root().eps, vec![2, 2, 0]);
        assert_eq!(root_system(Family::D, 5).max_root().eps, vec![2, 2, 0, 0, 0]);
        assert_eq!(root_system(Family::A, 3).max_root().coeffs, vec![1, 1, 1]);
    }

    #[test]
    fn pairings() {
        let a3 = root_system(Family::A, 3);
        assert_eq!(a3.delta(&[1, 0, 1]), 2);
        let c3 = root_system(Family::C, 3);
        assert_eq!(c3.delta(&[0, 0, 1]), 1);
        let a5 = root_system(Family::A, 5);
        assert_eq!(a5.delta(&[1, 0, 2, 0, 0]), 3);
        let b4 = root_system(Family::B, 4);
        assert_eq!(b4.delta(&[1, 1, 1, 1]), 1 + 2 + 2 + 1);
        let d5 = root_system(Family::D, 5);
        assert_eq!(d5.delta(&[1, 1, 1, 1, 1]), 1 + 2 + 2 + 1 + 1);
    }

    #[test]
    fn spin_orbit() {
        assert_eq!(root_system(Family::B, 3).orbit(&[0, 0, 1]).len(), 8);
        assert_eq!(root_system(Family::D, 4).orbit(&[0, 0, 0, 1]).len(), 8);
    }

    #[test]
    fn eps_round_trip() {
        for (fam, n) in [(Family::A, 3), (Family::B, 3), (Family::C, 3), (Family::D, 4)] {
            let rs = root_system(fam, n);
            for v in [vec![1, 0, 2, 0], vec![0, 1, 1, 3], vec![2, 0, 0, 1]] {
                let v = &v[..n];
                assert_eq!(rs.from_eps(&rs.to_eps(v)).unwrap(), v.to_vec());
            }
        }
    }

    #[test]
    fn orbit_size_matches_enumeration() {
        for (fam, n) in [(Family::A, 3), (Family::B, 3), (Family::C, 3), (Family::D, 4), (Family::D, 3)] {
            let rs = root_system(fam, n);
            for mask in 0..(1u32 << n) {
                let v: Vec<i64> = (0..n).map(|i| ((mask >> i) & 1) as i64).collect();
                assert_eq!(rs.orbit_size(&v), rs.orbit(&v).len() as u128, "{fam}{n} {v:?}");
            }
        }
    }

    #[test]
    fn dominance() {
        let a2 = root_system(Family::A, 2);
        assert!(a2.dominates(&[1, 1], &[0, 0]));
        assert!(!a2.dominates(&[1, 1], &[1, 0]));
        assert!(a2.dominates(&[3, 0], &[1, 1]));
    }

    #[test]
    fn group_guards() {
        assert!(GroupId::new(Family::B, 3, 2).is_err());
        assert!(GroupId::new(Family::D, 2, 3).is_err());
        assert!(GroupId::new(Family::A, 2, 4).is_err());
        assert_eq!(GroupId::parse("C3", 2).unwrap().rank, 3);
    }
}
