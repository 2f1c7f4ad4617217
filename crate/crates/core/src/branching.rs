//! Restriction to subsystem subgroups and machine checks of branching rules.
//!
//! `G_{n,k}` is the subsystem subgroup on the trailing `k` simple roots, so the
//! chain `G_n ⊃ G_{n-1} ⊃ ...` peels roots off the left end of the diagram.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use serde_json::{json, Value};

use crate::chars::FormalCharacter;
use crate::error::{Error, Result};
use crate::oracle::Oracle;
use crate::rootsys::{Family, GroupId};
use crate::weights::{format_coords, Weight};

/// Composition factors of `L(λ)` restricted to `G_{n,k}`.
pub fn irr_k(oracle: &Oracle, w: &Weight, k: usize) -> Result<BTreeSet<Vec<i64>>> {
    let chi = oracle.simple_char(w)?;
    let r = chi.restrict(k)?;
    Ok(oracle.decompose(&r)?.into_iter().map(|(w, _)| w.coords).collect())
}

pub fn restrict_char(chi: &FormalCharacter, k: usize) -> Result<FormalCharacter> {
    chi.restrict(k)
}

/// Highest weight of the submodule generated by the highest weight vector
/// under the subsystem subgroup with the given base (roots as simple-root
/// coefficient vectors): the pairings `<λ, β^∨>`.
pub fn smith_highest_weight(w: &Weight, base: &[Vec<i64>]) -> Result<Vec<i64>> {
    let rs = w.root_system();
    let mut idx = vec![];
    for b in base {
        let r = rs
            .positive_roots
            .iter()
            .position(|r| &r.coeffs == b)
            .ok_or_else(|| Error::InvalidWeight(format!("{b:?} is not a positive root")))?;
        idx.push(r);
    }
    for (x, &i) in idx.iter().enumerate() {
        for &j in idx.iter().skip(x + 1) {
            let a = &rs.positive_roots[i];
            let b = &rs.positive_roots[j];
            let pair = |u: &crate::rootsys::Root, v: &crate::rootsys::Root| -> i64 {
                u.fw.iter().zip(&v.coroot).map(|(s, t)| s * t).sum()
            };
            if pair(a, b) > 0 || pair(b, a) > 0 || i == j {
                return Err(Error::InvalidWeight("roots do not form a base".into()));
            }
        }
    }
    let rows: Vec<Vec<i128>> = base.iter().map(|b| b.iter().map(|&x| x as i128).collect()).collect();
    if crate::oracle::field::rational_rank(&rows) != base.len() {
        return Err(Error::InvalidWeight("roots are linearly dependent".into()));
    }
    Ok(idx.iter().map(|&r| rs.pairing(&w.coords, r)).collect())
}

#[derive(Clone, Debug, Serialize)]
pub struct LemmaReport {
    pub lemma: String,
    pub params: BTreeMap<String, String>,
    pub expected: Value,
    pub computed: Value,
    pub pass: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LemmaId {
    /// `L(ω_i)` one step down: `{ω_{i-1}, ω_i}`.
    FundamentalStep,
    /// `L(ω_i)` far down the chain: all fundamental weights of `G_k`.
    FundamentalDeep,
    /// Truncated symmetric powers restricted to a Levi subgroup `A_m × A_{n-m-1}`.
    TruncatedLevi,
    /// Truncated symmetric powers far down the chain.
    TruncatedDeep,
    /// `L(aω_1)`: `{bω_1 : b ≤ a}`.
    SymmetricPower,
    /// Natural module one step down: `{0, ω_1}`.
    NaturalStep,
    /// Halves of the truncated polynomial module of `C_n`, p odd.
    OscillatorStep,
    /// (Half-)spin modules one step down.
    SpinStep,
    /// `L(ω_1 + ω_n)` of `C_n`, p = 2.
    SpinNaturalStep,
    /// Factors have maximal multiplicity at most that of the module.
    WdegMonotone,
    /// Factors have δ at most that of the module.
    DeltaMonotone,
}

pub const ALL_LEMMAS: [LemmaId; 11] = [
    LemmaId::FundamentalStep,
    LemmaId::FundamentalDeep,
    LemmaId::TruncatedLevi,
    LemmaId::TruncatedDeep,
    LemmaId::SymmetricPower,
    LemmaId::NaturalStep,
    LemmaId::OscillatorStep,
    LemmaId::SpinStep,
    LemmaId::SpinNaturalStep,
    LemmaId::WdegMonotone,
    LemmaId::DeltaMonotone,
];

impl LemmaId {
    pub fn name(self) -> &'static str {
        match self {
            LemmaId::FundamentalStep => "fundamental-step",
            LemmaId::FundamentalDeep => "fundamental-deep",
            LemmaId::TruncatedLevi => "truncated-levi",
            LemmaId::TruncatedDeep => "truncated-deep",
            LemmaId::SymmetricPower => "symmetric-power",
            LemmaId::NaturalStep => "natural-step",
            LemmaId::OscillatorStep => "oscillator-step",
            LemmaId::SpinStep => "spin-step",
            LemmaId::SpinNaturalStep => "spin-natural-step",
            LemmaId::WdegMonotone => "wdeg-monotone",
            LemmaId::DeltaMonotone => "delta-monotone",
        }
    }
}

impl fmt::Display for LemmaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for LemmaId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        ALL_LEMMAS
            .iter()
            .copied()
            .find(|l| l.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown lemma `{s}`")))
    }
}

/// Named integer parameters plus the group, e.g. `group=A5,p=3,i=3,k=2`.
#[derive(Clone, Debug, Default)]
pub struct LemmaParams {
    pub group: Option<GroupId>,
    pub weight: Option<Vec<i64>>,
    pub ints: BTreeMap<String, i64>,
}

impl LemmaParams {
    pub fn new(group: GroupId) -> Self {
        LemmaParams { group: Some(group), ..Default::default() }
    }

    pub fn set(mut self, key: &str, v: i64) -> Self {
        self.ints.insert(key.to_string(), v);
        self
    }

    pub fn with_weight(mut self, w: Vec<i64>) -> Self {
        self.weight = Some(w);
        self
    }

    /// Parse `key=value` pairs separated by commas or whitespace; the weight
    /// is given as `w=[...]`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut p = LemmaParams::default();
        let mut group: Option<String> = None;
        let mut prime: Option<u64> = None;
        let mut rest = text.trim();
        while !rest.is_empty() {
            let (key, after) = rest
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected key=value in `{rest}`")))?;
            let key = key.trim().trim_start_matches(',').trim();
            let after = after.trim_start();
            let (val, next) = if after.starts_with('[') {
                let end = after.find(']').ok_or_else(|| Error::Parse("unclosed `[`".into()))?;
                (&after[..=end], &after[end + 1..])
            } else {
                let end = after.find([',', ' ']).unwrap_or(after.len());
                (&after[..end], &after[end..])
            };
            match key {
                "group" => group = Some(val.to_string()),
                "p" => prime = Some(val.parse().map_err(|_| Error::Parse(format!("bad p `{val}`")))?),
                "w" | "weight" => p.weight = Some(crate::weights::parse_coords(val)?),
                _ => {
                    let v: i64 = val.parse().map_err(|_| Error::Parse(format!("bad value for {key}: `{val}`")))?;
                    p.ints.insert(key.to_string(), v);
                }
            }
            rest = next.trim_start_matches([',', ' ']);
        }
        if let Some(gs) = group {
            p.group = Some(GroupId::parse(&gs, prime.ok_or_else(|| Error::Parse("missing p".into()))?)?);
        }
        Ok(p)
    }

    fn group(&self) -> Result<GroupId> {
        self.group.ok_or_else(|| Error::Parse("missing group".into()))
    }

    fn int(&self, k: &str) -> Result<i64> {
        self.ints.get(k).copied().ok_or_else(|| Error::Parse(format!("missing parameter `{k}`")))
    }

    fn echo(&self) -> BTreeMap<String, String> {
        let mut m: BTreeMap<String, String> = self.ints.iter().map(|(k, v)| (k.clone(), v.to_string())).collect();
        if let Some(g) = self.group {
            m.insert("group".into(), g.label());
            m.insert("p".into(), g.p.to_string());
        }
        if let Some(w) = &self.weight {
            m.insert("w".into(), format_coords(w));
        }
        m
    }
}

fn fund(g: GroupId, i: i64) -> Vec<i64> {
    Weight::fundamental(g, i.max(0) as usize).coords
}

fn lin(g: GroupId, terms: &[(i64, i64)]) -> Vec<i64> {
    let mut v = vec![0; g.rank];
    for &(c, i) in terms {
        if i >= 1 && i as usize <= g.rank {
            v[i as usize - 1] += c;
        }
    }
    v
}

fn weights_json(s: &BTreeSet<Vec<i64>>) -> Value {
    Value::Array(s.iter().map(|w| Value::String(format_coords(w))).collect())
}

fn need(cond: bool, msg: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidWeight(format!("parameters out of range: {msg}")))
    }
}

fn need_family(g: GroupId, fams: &[Family]) -> Result<()> {
    need(fams.contains(&g.family), "wrong family")
}

/// The truncated-polynomial factor set `{(p-1-a)ω_i + aω_{i+1}}` of `A_k`.
pub fn truncated_set(g: GroupId) -> BTreeSet<Vec<i64>> {
    let p = g.p as i64;
    let mut s = BTreeSet::new();
    for i in 0..=g.rank as i64 {
        for a in 0..p {
            s.insert(lin(g, &[(p - 1 - a, i), (a, i + 1)]));
        }
    }
    s
}

pub fn fundamental_set(g: GroupId) -> BTreeSet<Vec<i64>> {
    (0..=g.rank as i64).map(|i| fund(g, i)).collect()
}

pub fn verify_lemma(oracle: &Oracle, id: LemmaId, params: &LemmaParams) -> Result<LemmaReport> {
    let g = params.group()?;
    let n = g.rank as i64;
    let p = g.p as i64;
    let report = |expected: Value, computed: Value, pass: bool| LemmaReport {
        lemma: id.name().to_string(),
        params: params.echo(),
        expected,
        computed,
        pass,
    };
    let set_check = |modules: Vec<Vec<i64>>, k: usize, expected: BTreeSet<Vec<i64>>| -> Result<LemmaReport> {
        let mut computed = BTreeSet::new();
        for m in modules {
            computed.extend(irr_k(oracle, &Weight::new(g, m)?, k)?);
        }
        let pass = computed == expected;
        Ok(report(weights_json(&expected), weights_json(&computed), pass))
    };
    match id {
        LemmaId::FundamentalStep => {
            need_family(g, &[Family::A])?;
            let i = params.int("i")?;
            need(n >= 2 && (1..=n).contains(&i), "1 <= i <= n, n >= 2")?;
            let h = g.with_rank(g.rank - 1)?;
            set_check(vec![fund(g, i)], g.rank - 1, [fund(h, i - 1), fund(h, i)].into())
        }
        LemmaId::FundamentalDeep => {
            need_family(g, &[Family::A])?;
            let (i, k) = (params.int("i")?, params.int("k")?);
            need(k >= 1 && k < i && i <= n - k + 1, "k < i <= n-k+1")?;
            let h = g.with_rank(k as usize)?;
            set_check(vec![fund(g, i)], k as usize, fundamental_set(h))
        }
        LemmaId::TruncatedDeep => {
            need_family(g, &[Family::A])?;
            let (i, c, k) = (params.int("i")?, params.int("c")?, params.int("k")?);
            need(k >= 1 && k < i && i < n - k && (0..p).contains(&c), "k+1 <= i < n-k, 0 <= c < p")?;
            let h = g.with_rank(k as usize)?;
            set_check(vec![lin(g, &[(c, i), (p - 1 - c, i + 1)])], k as usize, truncated_set(h))
        }
        LemmaId::SymmetricPower => {
            need_family(g, &[Family::A])?;
            let (a, k) = (params.int("a")?, params.int("k")?);
            need(a > 0 && a < p && k >= 1 && k < n, "0 < a < p, 1 <= k < n")?;
            let h = g.with_rank(k as usize)?;
            set_check(vec![lin(g, &[(a, 1)])], k as usize, (0..=a).map(|b| lin(h, &[(b, 1)])).collect())
        }
        LemmaId::NaturalStep => {
            need_family(g, &[Family::B, Family::C, Family::D])?;
            need(match g.family {
                Family::B => n > 2,
                Family::D => n > 4,
                _ => n > 1,
            }, "n > 2 for B, n > 4 for D")?;
            let h = g.with_rank(g.rank - 1)?;
            set_check(vec![fund(g, 1)], g.rank - 1, [fund(h, 0), fund(h, 1)].into())
        }
        LemmaId::OscillatorStep => {
            need_family(g, &[Family::C])?;
            need(p > 2 && n > 1, "p odd, n > 1")?;
            let h = g.with_rank(g.rank - 1)?;
            let m1 = |x: GroupId| lin(x, &[(1, x.rank as i64 - 1), ((p - 3) / 2, x.rank as i64)]);
            let m2 = |x: GroupId| lin(x, &[((p - 1) / 2, x.rank as i64)]);
            let which = params.ints.get("j").copied();
            let modules = match which {
                Some(1) => vec![m1(g)],
                Some(2) => vec![m2(g)],
                _ => vec![m1(g), m2(g)],
            };
            set_check(modules, g.rank - 1, [m1(h), m2(h)].into())
        }
        LemmaId::SpinStep => {
            let h = g.with_rank(g.rank - 1)?;
            match g.family {
                Family::B => {
                    need(n > 2, "n > 2")?;
                    set_check(vec![fund(g, n)], g.rank - 1, [fund(h, n - 1)].into())
                }
                Family::C => {
                    need(p == 2 && n > 1, "p = 2")?;
                    set_check(vec![fund(g, n)], g.rank - 1, [fund(h, n - 1)].into())
                }
                Family::D => {
                    need(n > 3, "n > 3")?;
                    let expected: BTreeSet<Vec<i64>> = [fund(h, n - 1), fund(h, n - 2)].into();
                    let mut reports = vec![];
                    for m in [fund(g, n), fund(g, n - 1)] {
                        reports.push(set_check(vec![m], g.rank - 1, expected.clone())?);
                    }
                    let pass = reports.iter().all(|r| r.pass);
                    Ok(report(
                        json!({ "omega_n": reports[0].expected, "omega_n-1": reports[1].expected }),
                        json!({ "omega_n": reports[0].computed, "omega_n-1": reports[1].computed }),
                        pass,
                    ))
                }
                Family::A => Err(Error::InvalidWeight("spin modules need type B, C or D".into())),
            }
        }
        LemmaId::SpinNaturalStep => {
            need_family(g, &[Family::C])?;
            need(p == 2 && n > 2, "p = 2, n > 2")?;
            let h = g.with_rank(g.rank - 1)?;
            set_check(
                vec![lin(g, &[(1, 1), (1, n)])],
                g.rank - 1,
                [lin(h, &[(1, 1), (1, n - 1)]), fund(h, n - 1)].into(),
            )
        }
        LemmaId::WdegMonotone | LemmaId::DeltaMonotone => {
            let w = Weight::new(g, params.weight.clone().ok_or_else(|| Error::Parse("missing w".into()))?)?;
            w.require_dominant()?;
            let k = params.int("k")?;
            need(k >= 1 && k < n, "1 <= k < n")?;
            if id == LemmaId::DeltaMonotone && g.family == Family::B {
                need(k > 1, "k > 1 for B")?;
            }
            let factors = irr_k(oracle, &w, k as usize)?;
            let h = g.with_rank(k as usize)?;
            let (own, vals): (u64, Vec<(Vec<i64>, u64)>) = if id == LemmaId::WdegMonotone {
                let own = oracle.wdeg(&w)?;
                let vals = factors
                    .iter()
                    .map(|f| Ok((f.clone(), oracle.wdeg(&Weight::new(h, f.clone())?)?)))
                    .collect::<Result<_>>()?;
                (own, vals)
            } else {
                let own = w.delta()?;
                let vals = factors
                    .iter()
                    .map(|f| Ok((f.clone(), Weight::new(h, f.clone())?.delta()?)))
                    .collect::<Result<_>>()?;
                (own, vals)
            };
            let pass = vals.iter().all(|(_, v)| *v <= own);
            let computed: Vec<Value> = vals.iter().map(|(f, v)| json!({ "factor": format_coords(f), "value": v })).collect();
            Ok(report(json!({ "at_most": own }), Value::Array(computed), pass))
        }
        LemmaId::TruncatedLevi => {
            let (i, c, m) = (params.int("i")?, params.int("c")?, params.int("m")?);
            let r = levi_restrict_check(oracle, g, m as usize, i, c)?;
            Ok(report(r.expected_json(), r.computed_json(), r.pass))
        }
    }
}

/// A simple module of `A_m × A_{n-m-1}`, given by its two highest weights.
type PairWeight = (Vec<i64>, Vec<i64>);

#[derive(Clone, Debug, Serialize)]
pub struct LeviReport {
    pub m: usize,
    pub i: i64,
    pub c: i64,
    pub expected: Vec<PairWeight>,
    pub computed: Vec<PairWeight>,
    pub pass: bool,
}

impl LeviReport {
    fn pairs_json(v: &[PairWeight]) -> Value {
        Value::Array(v.iter().map(|(a, b)| json!([format_coords(a), format_coords(b)])).collect())
    }
    pub fn expected_json(&self) -> Value {
        Self::pairs_json(&self.expected)
    }
    pub fn computed_json(&self) -> Value {
        Self::pairs_json(&self.computed)
    }
}

/// Highest weight `cω_i + (p-1-c)ω_{i+1}` of `A_r` (zero weights outside `1..=r`);
/// `None` for the rank-0 block.
fn levi_weight(r: usize, p: i64, i: i64, c: i64) -> Vec<i64> {
    let mut v = vec![0; r];
    for (coef, j) in [(c, i), (p - 1 - c, i + 1)] {
        if j >= 1 && j as usize <= r {
            v[j as usize - 1] += coef;
        }
    }
    v
}

fn block_fw(b: &[i64]) -> Vec<i64> {
    b.windows(2).map(|w| w[0] - w[1]).collect()
}

/// Restrict `L(cω_i + (p-1-c)ω_{i+1})` of `A_n` to the Levi subgroup
/// `A_m × A_{n-m-1}` and compare its factors with the predicted pairs.
pub fn levi_restrict_check(oracle: &Oracle, g: GroupId, m: usize, i: i64, c: i64) -> Result<LeviReport> {
    need_family(g, &[Family::A])?;
    let n = g.rank;
    let p = g.p as i64;
    need(m < n && (0..=n as i64).contains(&i) && (0..p).contains(&c), "0 <= m < n, 0 <= i <= n, 0 <= c < p")?;
    let lambda = Weight::new(g, levi_weight(n, p, i, c))?;
    let d = (p - 1) * (i + 1) - c;
    let chi = oracle.simple_char(&lambda)?;
    let rs = g.root_system();

    // split the weights of L(λ) by the degree of the first ε-block
    let mut pieces: BTreeMap<i64, BTreeMap<PairWeight, u64>> = BTreeMap::new();
    for (wt, mult) in chi.full_support() {
        let eps = rs.to_eps(&wt);
        let total: i64 = eps.iter().sum();
        let shift = (2 * d - total) / (n as i64 + 1);
        let b: Vec<i64> = eps.iter().map(|e| (e + shift) / 2).collect();
        let (b1, b2) = b.split_at(m + 1);
        let d1: i64 = b1.iter().sum();
        *pieces.entry(d1).or_default().entry((block_fw(b1), block_fw(b2))).or_insert(0) += mult;
    }
    let h1 = if m >= 1 { Some(g.with_rank(m)?) } else { None };
    let h2 = if n - m > 1 { Some(g.with_rank(n - m - 1)?) } else { None };
    let mut computed = vec![];
    for (_, piece) in pieces {
        computed.extend(decompose_pair(oracle, h1, h2, piece)?);
    }
    computed.sort();

    let mut expected = vec![];
    let r2 = n - m - 1;
    for d1 in 0..=(p - 1) * (m as i64 + 1) {
        let d2 = d - d1;
        if d2 < 0 || d2 > (p - 1) * r2 as i64 + (p - 1) {
            continue;
        }
        let mut pairs = BTreeSet::new();
        for i1 in -1..=m as i64 + 1 {
            for c1 in 0..p {
                if (p - 1) * (i1 + 1) - c1 != d1 {
                    continue;
                }
                for i2 in -1..=r2 as i64 + 1 {
                    for c2 in 0..p {
                        if (p - 1) * (i2 + 1) - c2 != d2 {
                            continue;
                        }
                        pairs.insert((levi_weight(m, p, i1, c1), levi_weight(r2, p, i2, c2)));
                    }
                }
            }
        }
        if pairs.len() > 1 {
            return Err(Error::Internal(format!("degree split {d1}+{d2} names several modules")));
        }
        expected.extend(pairs);
    }
    expected.sort();
    let pass = expected == computed;
    Ok(LeviReport { m, i, c, expected, computed, pass })
}

fn decompose_pair(
    oracle: &Oracle,
    h1: Option<GroupId>,
    h2: Option<GroupId>,
    mut piece: BTreeMap<PairWeight, u64>,
) -> Result<Vec<PairWeight>> {
    let full = |h: Option<GroupId>, w: &[i64]| -> Result<BTreeMap<Vec<i64>, u64>> {
        match h {
            None => Ok(BTreeMap::from([(vec![], 1)])),
            Some(h) => Ok(oracle.simple_char(&Weight::new(h, w.to_vec())?)?.full_support()),
        }
    };
    let height = |h: Option<GroupId>, w: &[i64]| -> i64 {
        match h {
            None => 0,
            Some(h) => h.root_system().ip(w, &vec![1; w.len()]),
        }
    };
    let mut out = vec![];
    while let Some(top) = piece
        .keys()
        .filter(|(a, b)| a.iter().chain(b.iter()).all(|&x| x >= 0))
        .max_by_key(|(a, b)| (height(h1, a) + height(h2, b), a.clone(), b.clone()))
        .cloned()
    {
        let mult = piece[&top];
        let f1 = full(h1, &top.0)?;
        let f2 = full(h2, &top.1)?;
        for (x, m1) in &f1 {
            for (y, m2) in &f2 {
                let key = (x.clone(), y.clone());
                let have = piece.get(&key).copied().unwrap_or(0);
                let take = m1 * m2 * mult;
                if take > have {
                    return Err(Error::NotModuleCharacter("Levi piece is not a sum of simple modules".into()));
                }
                if take == have {
                    piece.remove(&key);
                } else {
                    piece.insert(key, have - take);
                }
            }
        }
        for _ in 0..mult {
            out.push(top.clone());
        }
    }
    if !piece.is_empty() {
        return Err(Error::NotModuleCharacter("leftover weights in Levi piece".into()));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(f: Family, n: usize, p: u64) -> GroupId {
        GroupId::new(f, n, p).unwrap()
    }

    #[test]
    fn oscillator_branching_example() {
        let o = Oracle::default();
        let c3 = g(Family::C, 3, 3);
        let got = irr_k(&o, &Weight::fundamental(c3, 3), 2).unwrap();
        assert_eq!(got, BTreeSet::from([vec![1, 0], vec![0, 1]]));
    }

    #[test]
    fn fundamental_deep_example() {
        let o = Oracle::default();
        let p = LemmaParams::new(g(Family::A, 5, 3)).set("i", 3).set("k", 2);
        let r = verify_lemma(&o, LemmaId::FundamentalDeep, &p).unwrap();
        assert!(r.pass, "{r:?}");
        let got = irr_k(&o, &Weight::fundamental(g(Family::A, 5, 3), 3), 2).unwrap();
        assert_eq!(got, BTreeSet::from([vec![0, 0], vec![1, 0], vec![0, 1]]));
    }

    #[test]
    fn symmetric_power_example() {
        let o = Oracle::default();
        let a4 = g(Family::A, 4, 5);
        let got = irr_k(&o, &Weight::new(a4, vec![3, 0, 0, 0]).unwrap(), 2).unwrap();
        assert_eq!(got, BTreeSet::from([vec![0, 0], vec![1, 0], vec![2, 0], vec![3, 0]]));
    }

    #[test]
    fn levi_small() {
        let o = Oracle::default();
        let r = levi_restrict_check(&o, g(Family::A, 3, 3), 1, 1, 1).unwrap();
        assert!(r.pass, "{r:?}");
    }

    #[test]
    fn smith_weight() {
        let a3 = g(Family::A, 3, 3);
        let w = Weight::new(a3, vec![1, 2, 3]).unwrap();
        assert_eq!(smith_highest_weight(&w, &[vec![0, 1, 0], vec![0, 0, 1]]).unwrap(), vec![2, 3]);
        assert_eq!(smith_highest_weight(&w, &[vec![1, 1, 0], vec![0, 0, 1]]).unwrap(), vec![3, 3]);
        assert!(smith_highest_weight(&w, &[vec![1, 0, 0], vec![1, 1, 0]]).is_err());
    }

    #[test]
    fn params_parse() {
        let p = LemmaParams::parse("group=A5,p=3,i=3,k=2").unwrap();
        assert_eq!(p.group.unwrap().rank, 5);
        assert_eq!(p.ints["k"], 2);
        let p = LemmaParams::parse("group=B3 p=3 k=2 w=[1,0,1]").unwrap();
        assert_eq!(p.weight.unwrap(), vec![1, 0, 1]);
    }
}
