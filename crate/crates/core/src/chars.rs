//! Weyl-invariant formal characters and closed-form builders.
//!
//! Characters are stored on dominant weights only; full supports are expanded
//! on demand by orbit enumeration.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsys::{Family, GroupId, RootSystem};
use crate::weights::{format_coords, Weight};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormalCharacter {
    pub group: GroupId,
    entries: BTreeMap<Vec<i64>, u64>,
}

impl FormalCharacter {
    pub fn zero(group: GroupId) -> Self {
        FormalCharacter { group, entries: BTreeMap::new() }
    }

    pub fn trivial(group: GroupId) -> Self {
        let mut c = Self::zero(group);
        c.entries.insert(vec![0; group.rank], 1);
        c
    }

    /// From multiplicities of dominant weights; nondominant keys are rejected.
    pub fn from_dominant(group: GroupId, entries: BTreeMap<Vec<i64>, u64>) -> Result<Self> {
        for k in entries.keys() {
            if k.len() != group.rank || !RootSystem::is_dominant(k) {
                return Err(Error::InvalidWeight(format!("{} is not a dominant weight", format_coords(k))));
            }
        }
        let entries = entries.into_iter().filter(|(_, m)| *m > 0).collect();
        Ok(FormalCharacter { group, entries })
    }

    /// From a full weight multiset, checking Weyl invariance.
    pub fn from_full(group: GroupId, full: &BTreeMap<Vec<i64>, u64>) -> Result<Self> {
        let rs = group.root_system();
        let mut dom: BTreeMap<Vec<i64>, u64> = BTreeMap::new();
        for (k, &m) in full {
            if m > 0 && RootSystem::is_dominant(k) {
                dom.insert(k.clone(), m);
            }
        }
        let mut total: u128 = 0;
        for (k, &m) in full {
            if m == 0 {
                continue;
            }
            total += m as u128;
            let d = rs.dominant_rep(k);
            if dom.get(&d).copied() != Some(m) {
                return Err(Error::NotModuleCharacter(format!("not Weyl invariant at {}", format_coords(k))));
            }
        }
        let c = FormalCharacter { group, entries: dom };
        if c.dim() != total {
            return Err(Error::NotModuleCharacter("incomplete Weyl orbits".into()));
        }
        Ok(c)
    }

    pub fn from_weights<I: IntoIterator<Item = Vec<i64>>>(group: GroupId, weights: I) -> Result<Self> {
        let mut full = BTreeMap::new();
        for w in weights {
            *full.entry(w).or_insert(0) += 1;
        }
        Self::from_full(group, &full)
    }

    pub fn dominant(&self) -> &BTreeMap<Vec<i64>, u64> {
        &self.entries
    }

    pub fn mult(&self, coords: &[i64]) -> u64 {
        let d = self.group.root_system().dominant_rep(coords);
        self.entries.get(&d).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn dim(&self) -> u128 {
        let rs = self.group.root_system();
        self.entries.iter().map(|(k, &m)| m as u128 * rs.orbit_size(k)).sum()
    }

    /// Maximal weight multiplicity.
    pub fn wdeg(&self) -> u64 {
        self.entries.values().copied().max().unwrap_or(0)
    }

    pub fn full_support(&self) -> BTreeMap<Vec<i64>, u64> {
        let rs = self.group.root_system();
        let mut out = BTreeMap::new();
        for (k, &m) in &self.entries {
            for w in rs.orbit(k) {
                out.insert(w, m);
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_group(other)?;
        let mut e = self.entries.clone();
        for (k, &m) in &other.entries {
            *e.entry(k.clone()).or_insert(0) += m;
        }
        Ok(FormalCharacter { group: self.group, entries: e })
    }

    /// `self - m·other`; fails if a multiplicity would become negative.
    pub fn sub_scaled(&self, other: &Self, m: u64) -> Result<Self> {
        self.check_group(other)?;
        let mut e = self.entries.clone();
        for (k, &v) in &other.entries {
            let have = e.get(k).copied().unwrap_or(0);
            let take = v * m;
            if take > have {
                return Err(Error::NotModuleCharacter(format!(
                    "negative multiplicity at {}",
                    format_coords(k)
                )));
            }
            if have == take {
                e.remove(k);
            } else {
                e.insert(k.clone(), have - take);
            }
        }
        Ok(FormalCharacter { group: self.group, entries: e })
    }

    pub fn tensor(&self, other: &Self) -> Result<Self> {
        self.check_group(other)?;
        let (small, big) = if self.dim() <= other.dim() { (self, other) } else { (other, self) };
        let fa = small.full_support();
        let fb: Vec<(Vec<i64>, u64)> = big.full_support().into_iter().collect();
        let mut out: BTreeMap<Vec<i64>, u64> = BTreeMap::new();
        let n = self.group.rank;
        let mut buf = vec![0i64; n];
        for (mu, &ma) in &fa {
            for (nu, mb) in &fb {
                let mut dominant = true;
                for i in 0..n {
                    buf[i] = mu[i] + nu[i];
                    if buf[i] < 0 {
                        dominant = false;
                        break;
                    }
                }
                if dominant {
                    *out.entry(buf.clone()).or_insert(0) += ma * mb;
                }
            }
        }
        Ok(FormalCharacter { group: self.group, entries: out })
    }

    /// Frobenius twist `[k]`.
    pub fn twist(&self, k: u32) -> Self {
        let f = (self.group.p as i64).pow(k);
        let entries = self.entries.iter().map(|(w, &m)| (w.iter().map(|a| a * f).collect(), m)).collect();
        FormalCharacter { group: self.group, entries }
    }

    pub fn dual(&self) -> Self {
        let rs = self.group.root_system();
        let entries = self
            .entries
            .iter()
            .map(|(w, &m)| {
                let neg: Vec<i64> = w.iter().map(|a| -a).collect();
                (rs.dominant_rep(&neg), m)
            })
            .collect();
        FormalCharacter { group: self.group, entries }
    }

    /// Restriction to the subsystem group on the trailing `k` simple roots.
    pub fn restrict(&self, k: usize) -> Result<Self> {
        let target = self.group.with_rank(k)?;
        let n = self.group.rank;
        let mut out: BTreeMap<Vec<i64>, u64> = BTreeMap::new();
        for (w, m) in self.full_support() {
            let r = &w[n - k..];
            if RootSystem::is_dominant(r) {
                *out.entry(r.to_vec()).or_insert(0) += m;
            }
        }
        Ok(FormalCharacter { group: target, entries: out })
    }

    fn check_group(&self, other: &Self) -> Result<()> {
        if self.group != other.group {
            return Err(Error::GroupMismatch(format!("{} vs {}", self.group, other.group)));
        }
        Ok(())
    }

    pub fn to_json(&self, full: bool) -> CharacterJson {
        let map = if full { self.full_support() } else { self.entries.clone() };
        CharacterJson {
            group: self.group.label(),
            p: self.group.p,
            mode: if full { "full".into() } else { "dominant".into() },
            dim: self.dim() as u64,
            wdeg: self.wdeg(),
            entries: map.into_iter().map(|(weight, mult)| CharEntry { weight, mult }).collect(),
        }
    }

    pub fn from_json(j: &CharacterJson) -> Result<Self> {
        let g = GroupId::parse(&j.group, j.p)?;
        let map: BTreeMap<Vec<i64>, u64> = j.entries.iter().map(|e| (e.weight.clone(), e.mult)).collect();
        match j.mode.as_str() {
            "full" => Self::from_full(g, &map),
            _ => Self::from_dominant(g, map),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharEntry {
    pub weight: Vec<i64>,
    pub mult: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterJson {
    pub group: String,
    pub p: u64,
    #[serde(default = "dominant_mode")]
    pub mode: String,
    #[serde(default)]
    pub dim: u64,
    #[serde(default)]
    pub wdeg: u64,
    pub entries: Vec<CharEntry>,
}

fn dominant_mode() -> String {
    "dominant".into()
}

fn from_eps_list(g: GroupId, eps: Vec<Vec<i64>>) -> Result<FormalCharacter> {
    let rs = g.root_system();
    let ws = eps
        .into_iter()
        .map(|e| rs.from_eps(&e).ok_or_else(|| Error::Internal(format!("{e:?} not a weight"))))
        .collect::<Result<Vec<_>>>()?;
    FormalCharacter::from_weights(g, ws)
}

fn require(g: GroupId, f: Family) -> Result<()> {
    if g.family != f {
        return Err(Error::Unsupported(format!("builder needs type {f}, got {}", g.label())));
    }
    Ok(())
}

/// Natural module `L(ω_1)`.
pub fn natural_char(g: GroupId) -> Result<FormalCharacter> {
    let len = g.root_system().eps_len();
    let mut list = vec![];
    for i in 0..len {
        let mut e = vec![0; len];
        e[i] = 2;
        list.push(e.clone());
        if g.family != Family::A {
            e[i] = -2;
            list.push(e);
        }
    }
    if g.family == Family::B {
        list.push(vec![0; len]);
    }
    from_eps_list(g, list)
}

fn subsets(len: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, len: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..len {
            cur.push(i);
            go(i + 1, len, k, cur, out);
            cur.pop();
        }
    }
    let mut out = vec![];
    go(0, len, k, &mut vec![], &mut out);
    out
}

/// `Λ^i` of the natural module of `A_n`, which is `L(ω_i)`.
pub fn wedge_char(g: GroupId, i: usize) -> Result<FormalCharacter> {
    require(g, Family::A)?;
    if i > g.rank + 1 {
        return Err(Error::InvalidWeight(format!("wedge power {i} exceeds {}", g.rank + 1)));
    }
    let len = g.rank + 1;
    let list = subsets(len, i)
        .into_iter()
        .map(|s| {
            let mut e = vec![0; len];
            for j in s {
                e[j] = 2;
            }
            e
        })
        .collect();
    from_eps_list(g, list)
}

/// Truncated symmetric power: monomials of degree `d` with exponents below p.
pub fn truncated_sym_char(g: GroupId, d: u64) -> Result<FormalCharacter> {
    require(g, Family::A)?;
    let len = g.rank + 1;
    let p = g.p as i64;
    if d as i64 > (p - 1) * len as i64 {
        return Err(Error::InvalidWeight(format!("degree {d} exceeds (p-1)(n+1)")));
    }
    let mut list = vec![];
    fn go(i: usize, left: i64, p: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        let len = cur.len();
        if i == len {
            if left == 0 {
                out.push(cur.iter().map(|b| 2 * b).collect());
            }
            return;
        }
        let cap = (p - 1) * (len - i - 1) as i64;
        for b in 0..p.min(left + 1) {
            if left - b <= cap {
                cur[i] = b;
                go(i + 1, left - b, p, cur, out);
            }
        }
        cur[i] = 0;
    }
    go(0, d as i64, p, &mut vec![0; len], &mut list);
    from_eps_list(g, list)
}

fn sign_vectors(n: usize) -> Vec<Vec<i64>> {
    (0..1u64 << n)
        .map(|mask| (0..n).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect())
        .collect()
}

/// Which half-spin module of type D.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum HalfSpin {
    /// `L(ω_{n-1})`
    Minus,
    /// `L(ω_n)`
    Plus,
}

/// Spin module `L(ω_n)` of `B_n`, or a half-spin module of `D_n`.
pub fn spin_char(g: GroupId, half: Option<HalfSpin>) -> Result<FormalCharacter> {
    let n = g.rank;
    let list: Vec<Vec<i64>> = match (g.family, half) {
        (Family::B, None) => sign_vectors(n),
        (Family::D, Some(h)) => sign_vectors(n)
            .into_iter()
            .filter(|v| {
                let negs = v.iter().filter(|&&x| x < 0).count();
                (negs % 2 == 0) == (h == HalfSpin::Plus)
            })
            .collect(),
        _ => {
            return Err(Error::Unsupported(format!(
                "spin modules exist for B (no half) and D (with half), got {}",
                g.label()
            )))
        }
    };
    from_eps_list(g, list)
}

/// The two halves `(L(ω_{n-1} + (p-3)/2 ω_n), L((p-1)/2 ω_n))` of the
/// truncated polynomial module of `C_n` in odd characteristic.
pub fn oscillator_chars(g: GroupId) -> Result<(FormalCharacter, FormalCharacter)> {
    require(g, Family::C)?;
    if g.p == 2 {
        return Err(Error::Unsupported("oscillator modules need odd p".into()));
    }
    let n = g.rank;
    let p = g.p as i64;
    let mut odd = vec![];
    let mut even = vec![];
    let total = (p as u64).pow(n as u32);
    for idx in 0..total {
        let mut x = idx;
        let mut e = Vec::with_capacity(n);
        let mut s = 0;
        for _ in 0..n {
            let b = (x % p as u64) as i64;
            x /= p as u64;
            s += b;
            e.push(2 * b - (p - 1));
        }
        if s % 2 == 0 {
            even.push(e);
        } else {
            odd.push(e);
        }
    }
    Ok((from_eps_list(g, odd)?, from_eps_list(g, even)?))
}

/// `L(ω_n)` of `C_n` in characteristic 2.
pub fn c2_spin_char(g: GroupId) -> Result<FormalCharacter> {
    require(g, Family::C)?;
    if g.p != 2 {
        return Err(Error::Unsupported("needs p = 2".into()));
    }
    let list = sign_vectors(g.rank).into_iter().map(|v| v.iter().map(|x| 2 * x).collect()).collect();
    from_eps_list(g, list)
}

/// `L(ω_1 + ω_n) = L(ω_1) ⊗ L(ω_n)` of `C_n` in characteristic 2.
pub fn c2_q_char(g: GroupId) -> Result<FormalCharacter> {
    natural_char(g)?.tensor(&c2_spin_char(g)?)
}

/// Highest weights of a character that are maximal in dominance order.
pub fn maximal_weights(c: &FormalCharacter) -> Vec<Weight> {
    let rs = c.group.root_system();
    let keys: Vec<&Vec<i64>> = c.entries.keys().collect();
    keys.iter()
        .filter(|k| !keys.iter().any(|o| o != *k && rs.dominates(o, k)))
        .map(|k| Weight { group: c.group, coords: (*k).clone() })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(f: Family, n: usize, p: u64) -> GroupId {
        GroupId::new(f, n, p).unwrap()
    }

    #[test]
    fn builder_dimensions() {
        assert_eq!(truncated_sym_char(g(Family::A, 2, 3), 2).unwrap().dim(), 6);
        assert_eq!(spin_char(g(Family::D, 4, 3), Some(HalfSpin::Plus)).unwrap().dim(), 8);
        assert_eq!(spin_char(g(Family::B, 3, 3), None).unwrap().dim(), 8);
        let (m1, m2) = oscillator_chars(g(Family::C, 2, 3)).unwrap();
        assert_eq!((m2.dim(), m1.dim()), (5, 4));
        let q = c2_q_char(g(Family::C, 3, 2)).unwrap();
        assert_eq!((q.dim(), q.wdeg()), (48, 2));
        assert_eq!(natural_char(g(Family::B, 3, 3)).unwrap().dim(), 7);
        assert_eq!(wedge_char(g(Family::A, 4, 2), 2).unwrap().dim(), 10);
    }

    #[test]
    fn oscillator_highest_weights() {
        let c3 = g(Family::C, 3, 5);
        let (m1, m2) = oscillator_chars(c3).unwrap();
        let hw = |c: &FormalCharacter| maximal_weights(c).into_iter().map(|w| w.coords).collect::<Vec<_>>();
        assert_eq!(hw(&m2), vec![vec![0, 0, 2]]);
        assert_eq!(hw(&m1), vec![vec![0, 1, 1]]);
    }

    #[test]
    fn tensor_twist_dual() {
        let a2 = g(Family::A, 2, 3);
        let v = natural_char(a2).unwrap();
        let vv = v.tensor(&v).unwrap();
        assert_eq!(vv.dim(), 9);
        assert_eq!(vv.mult(&[0, 1]), 2);
        assert_eq!(v.dual().dominant().keys().next().unwrap(), &vec![0, 1]);
        assert_eq!(v.twist(1).dominant().keys().next().unwrap(), &vec![3, 0]);
    }

    #[test]
    fn restriction_of_natural() {
        let b3 = g(Family::B, 3, 3);
        let r = natural_char(b3).unwrap().restrict(2).unwrap();
        assert_eq!(r.dominant().get(&vec![0, 0]), Some(&3));
        assert_eq!(r.dominant().get(&vec![1, 0]), Some(&1));
    }

    #[test]
    fn non_invariant_rejected() {
        let a1 = g(Family::A, 1, 3);
        assert!(FormalCharacter::from_weights(a1, vec![vec![1]]).is_err());
    }

    #[test]
    fn json_round_trip() {
        let c = natural_char(g(Family::C, 3, 3)).unwrap();
        for full in [false, true] {
            let j = c.to_json(full);
            assert_eq!(FormalCharacter::from_json(&j).unwrap(), c);
        }
    }
}
