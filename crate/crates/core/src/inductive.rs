//! Inductive systems of simple modules along the natural chain
//! `G_1 ⊂ G_2 ⊂ ...`, truncated to finite windows of ranks.
//!
//! A window stores one level set per rank. Levels produced by generation are
//! only trusted on the prefix that does not move when the top rank is lowered
//! by the stabilization width; those ranks are the window's verified levels.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num::{BigUint, One};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::branching::{fundamental_set, irr_k, truncated_set};
use crate::classify::{enumerate_small_pdeg_weights, wdeg_verdict};
use crate::error::{Error, Result};
use crate::oracle::Oracle;
use crate::rootsys::{Family, GroupId};
use crate::weights::{dual_weight, format_coords, parse_coords, steinberg_decompose, Weight};

/// Highest weights (fundamental coordinates) of the modules at one rank.
pub type Level = BTreeSet<Vec<i64>>;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Atom {
    /// Trivial module only.
    O,
    /// `{L(0), L(ω_1)}` for types B, C, D.
    L,
    /// All fundamental modules of type A.
    F,
    /// Truncated symmetric powers of type A.
    T,
    /// Spin, half-spin or oscillator modules.
    S,
    /// `{L(ω_n)}` for type C in characteristic 2.
    SPrime,
    /// `{L(ω_1 + ω_n), L(ω_n)}` for type C in characteristic 2.
    Q,
    /// Generated by `L(a_1ω_1 + ... + a_dω_d)`.
    CL(Vec<i64>),
    /// Generated by `L(a_dω_{n-d+1} + ... + a_1ω_n)`.
    CR(Vec<i64>),
    /// Polynomial degree at most d.
    Ld(u64),
    /// Dual polynomial degree at most d.
    Rd(u64),
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::O => f.write_str("O"),
            Atom::L => f.write_str("L"),
            Atom::F => f.write_str("F"),
            Atom::T => f.write_str("T"),
            Atom::S => f.write_str("S"),
            Atom::SPrime => f.write_str("S'"),
            Atom::Q => f.write_str("Q"),
            Atom::CL(a) => write!(f, "CL{}", format_coords(a)),
            Atom::CR(a) => write!(f, "CR{}", format_coords(a)),
            Atom::Ld(d) => write!(f, "Ld[{d}]"),
            Atom::Rd(d) => write!(f, "Rd[{d}]"),
        }
    }
}

impl Atom {
    pub fn parse(text: &str) -> Result<Atom> {
        let t = text.trim();
        let bracket = |prefix: &str| t.strip_prefix(prefix).filter(|r| r.starts_with('['));
        if let Some(r) = bracket("CL") {
            return Ok(Atom::CL(parse_coords(r)?));
        }
        if let Some(r) = bracket("CR") {
            return Ok(Atom::CR(parse_coords(r)?));
        }
        for (prefix, left) in [("Ld", true), ("Rd", false)] {
            if let Some(r) = bracket(prefix) {
                let v = parse_coords(r)?;
                if v.len() != 1 || v[0] < 0 {
                    return Err(Error::Parse(format!("`{t}`: expected a single degree")));
                }
                let d = v[0] as u64;
                return Ok(if left { Atom::Ld(d) } else { Atom::Rd(d) });
            }
        }
        match t {
            "O" => Ok(Atom::O),
            "L" => Ok(Atom::L),
            "F" => Ok(Atom::F),
            "T" => Ok(Atom::T),
            "S" => Ok(Atom::S),
            "S'" => Ok(Atom::SPrime),
            "Q" => Ok(Atom::Q),
            _ => Err(Error::Parse(format!("unknown system atom `{t}`"))),
        }
    }

    /// Reject atoms that do not exist for the family and characteristic.
    pub fn check(&self, family: Family, p: u64) -> Result<()> {
        let ok = match self {
            Atom::O => true,
            Atom::L => family != Family::A,
            Atom::F | Atom::T | Atom::Ld(_) | Atom::Rd(_) => family == Family::A,
            Atom::CL(a) | Atom::CR(a) => {
                if a.iter().any(|&x| x < 0 || x >= p as i64) {
                    return Err(Error::InvalidWeight(format!("{self}: coefficients must lie in [0, {p})")));
                }
                family == Family::A && !a.is_empty()
            }
            Atom::S => matches!(family, Family::B | Family::D) || (family == Family::C && p > 2),
            Atom::SPrime | Atom::Q => family == Family::C && p == 2,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::Unsupported(format!("atom {self} is not defined for type {family}, p = {p}")))
        }
    }

    /// δ of the system, read off the atom data (type A atoms only).
    pub fn delta_a(&self, p: u64) -> Option<u64> {
        match self {
            Atom::O => Some(0),
            Atom::F => Some(1),
            Atom::T => Some(p - 1),
            Atom::CL(a) | Atom::CR(a) => Some(a.iter().sum::<i64>() as u64),
            Atom::Ld(d) | Atom::Rd(d) => Some(*d),
            _ => None,
        }
    }

    fn side(&self) -> Side {
        match self {
            Atom::O => Side::Neutral,
            Atom::CL(_) => Side::Left,
            Atom::CR(_) => Side::Right,
            _ => Side::Single,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Side {
    Left,
    Right,
    Single,
    Neutral,
}

/// `Φ^0 ⊗ Fr(Φ^1) ⊗ Fr^2(Φ^2) ⊗ ...`
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SystemDescriptor {
    pub family: Family,
    pub p: u64,
    pub layers: Vec<Atom>,
}

impl fmt::Display for SystemDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, a) in self.layers.iter().enumerate() {
            if k > 0 {
                f.write_str(" * ")?;
            }
            match k {
                0 => write!(f, "{a}")?,
                1 => write!(f, "Fr({a})")?,
                _ => write!(f, "Fr^{k}({a})")?,
            }
        }
        Ok(())
    }
}

impl Serialize for SystemDescriptor {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl SystemDescriptor {
    pub fn new(family: Family, p: u64, layers: Vec<Atom>) -> Result<Self> {
        if layers.is_empty() {
            return Err(Error::Parse("empty descriptor".into()));
        }
        for a in &layers {
            a.check(family, p)?;
        }
        Ok(SystemDescriptor { family, p, layers })
    }

    /// Parse `d0 * Fr(d1) * Fr^2(d2)`; missing layers are `O`.
    pub fn parse(text: &str, family: Family, p: u64) -> Result<Self> {
        let mut layers: BTreeMap<u32, Atom> = BTreeMap::new();
        for term in text.split('*') {
            let term = term.trim();
            let (k, body) = if let Some(rest) = term.strip_prefix("Fr") {
                let (k, rest) = match rest.strip_prefix('^') {
                    Some(r) => {
                        let end = r.find('(').ok_or_else(|| Error::Parse(format!("bad twist `{term}`")))?;
                        let k: u32 = r[..end].trim().parse().map_err(|_| Error::Parse(format!("bad twist `{term}`")))?;
                        (k, &r[end..])
                    }
                    None => (1, rest),
                };
                let inner = rest
                    .trim()
                    .strip_prefix('(')
                    .and_then(|r| r.strip_suffix(')'))
                    .ok_or_else(|| Error::Parse(format!("bad twist `{term}`")))?;
                (k, inner)
            } else {
                (0, term)
            };
            if layers.insert(k, Atom::parse(body)?).is_some() {
                return Err(Error::Parse(format!("layer {k} given twice")));
            }
        }
        let top = *layers.keys().last().ok_or_else(|| Error::Parse("empty descriptor".into()))?;
        let v = (0..=top).map(|k| layers.remove(&k).unwrap_or(Atom::O)).collect();
        SystemDescriptor::new(family, p, v)
    }

    pub fn twist_depth(&self) -> usize {
        self.layers.len() - 1
    }
}

/// A run of consecutive layers forming one factor `Ψ^f`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Block {
    pub start: usize,
    pub end: usize,
    pub side: Side,
    pub delta: u128,
}

/// Minimal splitting of a type-A special descriptor into same-side runs of
/// `CL`/`CR` atoms and singleton `F`/`T` layers. Trivial layers join the
/// current run. `None` if some atom is not special.
pub fn special_blocks(d: &SystemDescriptor) -> Option<Vec<Block>> {
    if d.family != Family::A {
        return None;
    }
    let p = d.p as u128;
    let mut blocks: Vec<Block> = vec![];
    let mut cur: Option<Block> = None;
    for (k, a) in d.layers.iter().enumerate() {
        if matches!(a, Atom::Ld(_) | Atom::Rd(_)) {
            return None;
        }
        let dk = p.pow(k as u32) * a.delta_a(d.p)? as u128;
        let side = a.side();
        match (side, cur.as_mut()) {
            (Side::Neutral, Some(b)) => {
                b.end = k;
            }
            (Side::Neutral, None) => cur = Some(Block { start: k, end: k, side, delta: 0 }),
            (Side::Left | Side::Right, Some(b)) if b.side == side || b.side == Side::Neutral => {
                b.end = k;
                b.side = side;
                b.delta += dk;
            }
            _ => {
                blocks.extend(cur.take());
                let single = side == Side::Single;
                let b = Block { start: k, end: k, side, delta: dk };
                if single {
                    blocks.push(b);
                } else {
                    cur = Some(b);
                }
            }
        }
    }
    blocks.extend(cur);
    Some(blocks)
}

/// First block (other than the last) violating `δ(Ψ^f) < p^{i_f + 1}`.
pub fn failing_block(d: &SystemDescriptor) -> Option<Option<(usize, Block)>> {
    let blocks = special_blocks(d)?;
    let p = d.p as u128;
    let l = blocks.len();
    Some(
        blocks
            .into_iter()
            .enumerate()
            .take(l.saturating_sub(1))
            .find(|(_, b)| b.delta >= p.pow(b.end as u32 + 1)),
    )
}

/// Forbidden adjacent layers `(Φ^j, Φ^{j+1})` for type C in characteristic 2.
pub const C2_FORBIDDEN: [(Atom, Atom); 4] =
    [(Atom::SPrime, Atom::L), (Atom::Q, Atom::L), (Atom::SPrime, Atom::Q), (Atom::Q, Atom::Q)];

fn c2_forbidden_at(d: &SystemDescriptor) -> Option<usize> {
    if !(d.family == Family::C && d.p == 2) {
        return None;
    }
    d.layers.windows(2).position(|w| C2_FORBIDDEN.iter().any(|(a, b)| &w[0] == a && &w[1] == b))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct WindowBounds {
    pub n_min: usize,
    pub n_max: usize,
    /// Generated levels are trusted where lowering the top rank by this much
    /// changes nothing.
    pub stabilization: usize,
}

impl WindowBounds {
    pub fn for_family(family: Family) -> Self {
        let n_min = match family {
            Family::A => 1,
            Family::B => 3,
            Family::C => 2,
            Family::D => 4,
        };
        WindowBounds { n_min, n_max: 8, stabilization: 2 }
    }

    pub fn with_max(mut self, n_max: usize) -> Self {
        self.n_max = n_max;
        self
    }

    pub fn with_min(mut self, n_min: usize) -> Self {
        self.n_min = n_min;
        self
    }

    fn validate(&self, family: Family) -> Result<()> {
        if self.n_min < family.min_rank() || self.n_max <= self.n_min {
            return Err(Error::InvalidGroup(format!(
                "window [{}, {}] invalid for type {family} (smallest rank {})",
                self.n_min,
                self.n_max,
                family.min_rank()
            )));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InductiveWindow {
    pub family: Family,
    pub p: u64,
    pub levels: BTreeMap<usize, Level>,
    /// Ranks whose level set is known to be exact.
    pub verified: BTreeSet<usize>,
    pub provenance: String,
}

fn level_json(l: &Level) -> Value {
    Value::Array(l.iter().map(|w| Value::String(format_coords(w))).collect())
}

impl InductiveWindow {
    pub fn group(&self, n: usize) -> Result<GroupId> {
        GroupId::new(self.family, n, self.p)
    }

    pub fn n_min(&self) -> usize {
        *self.levels.keys().next().unwrap_or(&0)
    }

    pub fn n_max(&self) -> usize {
        *self.levels.keys().last().unwrap_or(&0)
    }

    pub fn level(&self, n: usize) -> Option<&Level> {
        self.levels.get(&n)
    }

    pub fn to_json(&self, checks: Option<&WindowChecks>) -> Value {
        let levels: serde_json::Map<String, Value> =
            self.levels.iter().map(|(n, l)| (n.to_string(), level_json(l))).collect();
        let mut v = json!({
            "family": self.family.to_string(),
            "p": self.p,
            "provenance": self.provenance,
            "levels": levels,
            "verified": self.verified,
        });
        if let Some(c) = checks {
            v["checks"] = serde_json::to_value(c).expect("checks serialize");
        }
        v
    }

    fn compatible(&self, other: &Self) -> Result<()> {
        if self.family != other.family || self.p != other.p {
            return Err(Error::GroupMismatch(format!(
                "type {} p={} vs type {} p={}",
                self.family, self.p, other.family, other.p
            )));
        }
        Ok(())
    }

    fn common_levels(&self, other: &Self) -> Vec<usize> {
        self.levels.keys().filter(|n| other.levels.contains_key(n)).copied().collect()
    }
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

/// `M_{n,L}(a)` or `M_{n,R}(a)`; `None` below rank d.
pub fn one_sided_weight(g: GroupId, a: &[i64], left: bool) -> Option<Vec<i64>> {
    let n = g.rank;
    if a.len() > n {
        return None;
    }
    let mut v = vec![0; n];
    for (j, &c) in a.iter().enumerate() {
        if left {
            v[j] = c;
        } else {
            v[n - 1 - j] = c;
        }
    }
    Some(v)
}

/// Level set of an explicitly displayed atom at rank n.
fn explicit_level(atom: &Atom, g: GroupId) -> Result<Level> {
    let n = g.rank as i64;
    let p = g.p as i64;
    let zero = vec![0; g.rank];
    Ok(match atom {
        Atom::O => [zero].into(),
        Atom::L => [zero, lin(g, &[(1, 1)])].into(),
        Atom::F => fundamental_set(g),
        Atom::T => truncated_set(g),
        Atom::S => match g.family {
            Family::B => [lin(g, &[(1, n)])].into(),
            Family::D => [lin(g, &[(1, n - 1)]), lin(g, &[(1, n)])].into(),
            _ => [lin(g, &[((p - 1) / 2, n)]), lin(g, &[(1, n - 1), ((p - 3) / 2, n)])].into(),
        },
        Atom::SPrime => [lin(g, &[(1, n)])].into(),
        Atom::Q => [lin(g, &[(1, 1), (1, n)]), lin(g, &[(1, n)])].into(),
        Atom::Ld(d) => enumerate_small_pdeg_weights(g, *d)?.into_iter().map(|w| w.coords).collect(),
        Atom::Rd(d) => enumerate_small_pdeg_weights(g, *d)?
            .into_iter()
            .map(|w| Ok(dual_weight(&w)?.coords))
            .collect::<Result<_>>()?,
        Atom::CL(_) | Atom::CR(_) => return Err(Error::Internal(format!("{atom} has no displayed level set"))),
    })
}

/// One-step factor sets of every module at rank n+1, restricted to rank n.
fn restrict_level(oracle: &Oracle, family: Family, p: u64, n: usize, upper: &Level) -> Result<Level> {
    let g = GroupId::new(family, n + 1, p)?;
    let parts: Vec<Result<Level>> =
        upper.par_iter().map(|w| irr_k(oracle, &Weight::new(g, w.clone())?, n)).collect();
    let mut out = Level::new();
    for part in parts {
        out.extend(part?);
    }
    Ok(out)
}

/// `Π_n` for `n_min ≤ n < cap`, using generators at ranks `≤ cap`.
fn chain_levels(
    oracle: &Oracle,
    family: Family,
    p: u64,
    gens: &BTreeMap<usize, Level>,
    n_min: usize,
    cap: usize,
) -> Result<BTreeMap<usize, Level>> {
    let mut out = BTreeMap::new();
    let mut above = Level::new();
    for n in (n_min..cap).rev() {
        let mut upper = above.clone();
        if let Some(r) = gens.get(&(n + 1)) {
            upper.extend(r.iter().cloned());
        }
        let level = restrict_level(oracle, family, p, n, &upper)?;
        out.insert(n, level.clone());
        above = level;
    }
    Ok(out)
}

/// The system generated by per-rank sets `R_t`: at rank n, all composition
/// factors of restrictions of generators from ranks `t > n`.
pub fn generate(
    oracle: &Oracle,
    family: Family,
    p: u64,
    generators: &BTreeMap<usize, Level>,
    bounds: WindowBounds,
) -> Result<InductiveWindow> {
    bounds.validate(family)?;
    for (t, r) in generators {
        let g = GroupId::new(family, *t, p)?;
        for w in r {
            let w = Weight::new(g, w.clone())?;
            w.require_dominant()?;
        }
    }
    let cap = bounds.n_max;
    let levels = chain_levels(oracle, family, p, generators, bounds.n_min, cap)?;
    let mut verified = BTreeSet::new();
    let low = cap.saturating_sub(bounds.stabilization);
    if bounds.stabilization > 0 && low > bounds.n_min {
        let lower = chain_levels(oracle, family, p, generators, bounds.n_min, low)?;
        for (n, l) in &lower {
            if levels.get(n) != Some(l) {
                break;
            }
            verified.insert(*n);
        }
    }
    let provenance = format!(
        "generated from {} generator sets at ranks {:?}",
        generators.len(),
        generators.keys().collect::<Vec<_>>()
    );
    Ok(InductiveWindow { family, p, levels, verified, provenance })
}

/// Realize one atom on the window.
pub fn realize_atom(oracle: &Oracle, family: Family, p: u64, atom: &Atom, bounds: WindowBounds) -> Result<InductiveWindow> {
    atom.check(family, p)?;
    bounds.validate(family)?;
    match atom {
        Atom::CL(a) | Atom::CR(a) => {
            let left = matches!(atom, Atom::CL(_));
            let mut gens = BTreeMap::new();
            for t in bounds.n_min + 1..=bounds.n_max {
                let g = GroupId::new(family, t, p)?;
                if let Some(w) = one_sided_weight(g, a, left) {
                    gens.insert(t, Level::from([w]));
                }
            }
            let mut w = generate(oracle, family, p, &gens, bounds)?;
            w.provenance = format!("{atom}: generated by its one-sided weights");
            Ok(w)
        }
        _ => {
            let mut levels = BTreeMap::new();
            for n in bounds.n_min..=bounds.n_max {
                let g = GroupId::new(family, n, p)?;
                if *atom == Atom::Q && n == 1 {
                    continue;
                }
                levels.insert(n, explicit_level(atom, g)?);
            }
            if *atom == Atom::Q && bounds.n_min == 1 {
                // rank 1 is only defined as the restriction of rank 2
                let two = explicit_level(atom, GroupId::new(family, 2, p)?)?;
                levels.insert(1, restrict_level(oracle, family, p, 1, &two)?);
            }
            let verified = levels.keys().copied().collect();
            Ok(InductiveWindow { family, p, levels, verified, provenance: format!("{atom}: displayed level sets") })
        }
    }
}

/// Realize a twisted tensor descriptor.
pub fn realize(oracle: &Oracle, d: &SystemDescriptor, bounds: WindowBounds) -> Result<InductiveWindow> {
    let mut acc: Option<InductiveWindow> = None;
    for (k, atom) in d.layers.iter().enumerate() {
        let w = fr_twist(&realize_atom(oracle, d.family, d.p, atom, bounds)?, k as u32);
        acc = Some(match acc {
            None => w,
            Some(a) => tensor(oracle, &a, &w)?,
        });
    }
    let mut w = acc.expect("descriptor has a layer");
    w.provenance = d.to_string();
    Ok(w)
}

/// Levelwise Frobenius twist.
pub fn fr_twist(w: &InductiveWindow, k: u32) -> InductiveWindow {
    let f = (w.p as i64).pow(k);
    let levels = w
        .levels
        .iter()
        .map(|(n, l)| (*n, l.iter().map(|x| x.iter().map(|a| a * f).collect()).collect()))
        .collect();
    let provenance = match k {
        0 => w.provenance.clone(),
        1 => format!("Fr({})", w.provenance),
        _ => format!("Fr^{k}({})", w.provenance),
    };
    InductiveWindow { levels, provenance, ..w.clone() }
}

/// Composition factors of `L(x) ⊗ L(y)`.
pub fn tensor_factors(oracle: &Oracle, g: GroupId, x: &[i64], y: &[i64]) -> Result<Level> {
    let wx = Weight::new(g, x.to_vec())?;
    let wy = Weight::new(g, y.to_vec())?;
    let lx = steinberg_decompose(&wx)?.layers;
    let ly = steinberg_decompose(&wy)?.layers;
    let disjoint = lx.iter().zip(&ly).all(|(a, b)| a.is_zero() || b.is_zero());
    if disjoint {
        return Ok([wx.add(&wy)?.coords].into());
    }
    let chi = oracle.simple_char(&wx)?.tensor(&*oracle.simple_char(&wy)?)?;
    Ok(oracle.decompose(&chi)?.into_iter().map(|(w, _)| w.coords).collect())
}

/// Levelwise tensor product: all composition factors of `φ ⊗ ψ`.
pub fn tensor(oracle: &Oracle, a: &InductiveWindow, b: &InductiveWindow) -> Result<InductiveWindow> {
    a.compatible(b)?;
    let mut levels = BTreeMap::new();
    for n in a.common_levels(b) {
        let g = a.group(n)?;
        let pairs: Vec<(&Vec<i64>, &Vec<i64>)> =
            a.levels[&n].iter().flat_map(|x| b.levels[&n].iter().map(move |y| (x, y))).collect();
        let parts: Vec<Result<Level>> = pairs.par_iter().map(|(x, y)| tensor_factors(oracle, g, x, y)).collect();
        let mut l = Level::new();
        for part in parts {
            l.extend(part?);
        }
        levels.insert(n, l);
    }
    let verified = a.verified.intersection(&b.verified).copied().filter(|n| levels.contains_key(n)).collect();
    Ok(InductiveWindow {
        family: a.family,
        p: a.p,
        levels,
        verified,
        provenance: format!("{} * {}", a.provenance, b.provenance),
    })
}

pub fn union(a: &InductiveWindow, b: &InductiveWindow) -> Result<InductiveWindow> {
    a.compatible(b)?;
    let levels: BTreeMap<usize, Level> = a
        .common_levels(b)
        .into_iter()
        .map(|n| (n, a.levels[&n].union(&b.levels[&n]).cloned().collect()))
        .collect();
    let verified = a.verified.intersection(&b.verified).copied().filter(|n| levels.contains_key(n)).collect();
    Ok(InductiveWindow {
        family: a.family,
        p: a.p,
        levels,
        verified,
        provenance: format!("{} + {}", a.provenance, b.provenance),
    })
}

/// The system generated by the levelwise set differences `Φ_n \ Ψ_n`.
pub fn difference(
    oracle: &Oracle,
    phi: &InductiveWindow,
    psi: &InductiveWindow,
    stabilization: usize,
) -> Result<InductiveWindow> {
    phi.compatible(psi)?;
    let common = phi.common_levels(psi);
    let mut xi = BTreeMap::new();
    for &n in &common {
        if !psi.levels[&n].is_subset(&phi.levels[&n]) {
            return Err(Error::InvalidWeight(format!("subtrahend is not contained in the system at rank {n}")));
        }
        let d: Level = phi.levels[&n].difference(&psi.levels[&n]).cloned().collect();
        if !d.is_empty() {
            xi.insert(n, d);
        }
    }
    if xi.is_empty() {
        return Err(Error::InvalidWeight("the embedding is not proper on this window".into()));
    }
    let bounds = WindowBounds {
        n_min: *common.first().unwrap(),
        n_max: *common.last().unwrap(),
        stabilization,
    };
    let mut w = generate(oracle, phi.family, phi.p, &xi, bounds)?;
    w.provenance = format!("D({}, {})", phi.provenance, psi.provenance);
    Ok(w)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClosureStatus {
    Holds,
    Fails,
    Unverified,
}

#[derive(Clone, Debug, Serialize)]
pub struct WindowChecks {
    /// Closure `⋃ Irr_n(Φ_{n+1}) = Φ_n` per rank n.
    pub closure: BTreeMap<usize, ClosureStatus>,
    pub closure_ok: bool,
    pub delta: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub delta_error: Option<String>,
    pub stability: Stability,
}

#[derive(Clone, Debug, Serialize)]
pub struct Stability {
    pub verified: Vec<usize>,
    /// Present levels that are not trusted: raise the top rank.
    pub unstable: Vec<usize>,
}

pub fn closure_at(oracle: &Oracle, w: &InductiveWindow, n: usize) -> Result<bool> {
    let (lo, hi) = match (w.levels.get(&n), w.levels.get(&(n + 1))) {
        (Some(a), Some(b)) => (a, b),
        _ => return Err(Error::InvalidWeight(format!("ranks {n} and {} are not both in the window", n + 1))),
    };
    Ok(&restrict_level(oracle, w.family, w.p, n, hi)? == lo)
}

pub fn check(oracle: &Oracle, w: &InductiveWindow) -> WindowChecks {
    let mut closure = BTreeMap::new();
    for &n in w.levels.keys() {
        if !w.levels.contains_key(&(n + 1)) {
            continue;
        }
        let status = if w.verified.contains(&n) && w.verified.contains(&(n + 1)) {
            match closure_at(oracle, w, n) {
                Ok(true) => ClosureStatus::Holds,
                Ok(false) => ClosureStatus::Fails,
                Err(_) => ClosureStatus::Unverified,
            }
        } else {
            ClosureStatus::Unverified
        };
        closure.insert(n, status);
    }
    let closure_ok = !closure.values().any(|s| *s == ClosureStatus::Fails);
    let (delta, delta_error) = match delta_system(w) {
        Ok(d) => (Some(d), None),
        Err(e) => (None, Some(e.to_string())),
    };
    let stability = Stability {
        verified: w.verified.iter().copied().collect(),
        unstable: w.levels.keys().filter(|n| !w.verified.contains(n)).copied().collect(),
    };
    WindowChecks { closure, closure_ok, delta, delta_error, stability }
}

/// The common value of `max δ` over the verified levels of rank above 2.
pub fn delta_system(w: &InductiveWindow) -> Result<u64> {
    let mut values = BTreeMap::new();
    for &n in w.verified.iter().filter(|&&n| n > 2) {
        let g = w.group(n)?;
        let rs = g.root_system();
        let d = w.levels[&n].iter().map(|x| rs.delta(x)).max().unwrap_or(0);
        values.insert(n, d as u64);
    }
    if values.len() < 2 {
        return Err(Error::InvalidWeight("δ needs at least two verified levels of rank above 2".into()));
    }
    let first = *values.values().next().unwrap();
    if let Some((n, d)) = values.iter().find(|(_, &d)| d != first) {
        return Err(Error::Internal(format!("δ is not constant: {first} at the lowest rank, {d} at rank {n}")));
    }
    Ok(first)
}

/// Finite slice of the infinite type-A catalog.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct BwmBudget {
    /// Longest coefficient vector of a `CL`/`CR` atom.
    pub max_len: usize,
    /// Largest coefficient sum of a `CL`/`CR` atom.
    pub max_coeff_sum: i64,
    pub max_descriptors: usize,
}

impl Default for BwmBudget {
    fn default() -> Self {
        BwmBudget { max_len: 2, max_coeff_sum: 4, max_descriptors: 100_000 }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct BwmEnumeration {
    pub family: String,
    pub p: u64,
    pub twist_depth: usize,
    pub count: usize,
    /// Set when the budget cut the list short.
    pub partial: bool,
    pub descriptors: Vec<SystemDescriptor>,
}

fn type_a_atoms(p: u64, budget: &BwmBudget) -> Vec<Atom> {
    let mut atoms = vec![Atom::O, Atom::F];
    if p > 2 {
        atoms.push(Atom::T);
    }
    let mut vecs = vec![];
    fn go(len: usize, p: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == len {
            if cur.last().is_some_and(|&x| x > 0) {
                out.push(cur.clone());
            }
            return;
        }
        for a in 0..p {
            cur.push(a);
            go(len, p, cur, out);
            cur.pop();
        }
    }
    for len in 1..=budget.max_len {
        go(len, p as i64, &mut vec![], &mut vecs);
    }
    vecs.retain(|v| v.iter().sum::<i64>() <= budget.max_coeff_sum);
    atoms.extend(vecs.iter().map(|v| Atom::CL(v.clone())));
    atoms.extend(vecs.into_iter().map(Atom::CR));
    atoms
}

/// Descriptors of bounded-multiplicity systems with `s` twisted layers.
pub fn enumerate_bwm(family: Family, p: u64, s: usize, budget: BwmBudget) -> Result<BwmEnumeration> {
    GroupId::new(family, family.min_rank().max(2), p)?;
    if s > 3 {
        return Err(Error::Refused(format!("twist depth {s} exceeds 3")));
    }
    let atoms: Vec<Atom> = match family {
        Family::A => type_a_atoms(p, &budget),
        Family::C if p == 2 => vec![Atom::O, Atom::L, Atom::Q, Atom::SPrime],
        _ => vec![Atom::O, Atom::L, Atom::S],
    };
    let mut out = vec![];
    let mut partial = false;
    let mut idx = vec![0usize; s + 1];
    'outer: loop {
        let d = SystemDescriptor { family, p, layers: idx.iter().map(|&i| atoms[i].clone()).collect() };
        let accepted = match family {
            Family::A => matches!(failing_block(&d), Some(None)),
            Family::C if p == 2 => c2_forbidden_at(&d).is_none(),
            _ => true,
        };
        if accepted {
            if out.len() == budget.max_descriptors {
                partial = true;
                break;
            }
            out.push(d);
        }
        for slot in idx.iter_mut() {
            *slot += 1;
            if *slot < atoms.len() {
                continue 'outer;
            }
            *slot = 0;
        }
        break;
    }
    Ok(BwmEnumeration { family: family.to_string(), p, twist_depth: s, count: out.len(), partial, descriptors: out })
}

#[derive(Clone, Debug, Serialize)]
pub struct GrowthPoint {
    pub rank: usize,
    pub weight: String,
    #[serde(serialize_with = "crate::classify::ser_big")]
    pub lower_bound: BigUint,
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum BwmVerdict {
    Bounded {
        max_wdeg: u64,
        levels: Vec<usize>,
        #[serde(serialize_with = "ser_opt_big")]
        cap: Option<BigUint>,
        reason: String,
    },
    Unbounded {
        certificate: Vec<GrowthPoint>,
        /// Oracle values for the same family at small rank.
        observed: Vec<(usize, String, u64)>,
        reason: String,
    },
    Inconclusive {
        reason: String,
        observed_max_wdeg: Option<u64>,
    },
}

fn ser_opt_big<S: serde::Serializer>(v: &Option<BigUint>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(x) => crate::classify::ser_big(x, s),
        None => s.serialize_none(),
    }
}

fn factorial(d: u64) -> BigUint {
    (1..=d).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

/// Ranks used for growth certificates.
pub const CERTIFICATE_RANKS: [usize; 4] = [8, 12, 16, 20];

fn representative(atom: &Atom, g: GroupId) -> Result<Vec<i64>> {
    match atom {
        Atom::CL(a) => Ok(one_sided_weight(g, a, true).unwrap_or(vec![0; g.rank])),
        Atom::CR(a) => Ok(one_sided_weight(g, a, false).unwrap_or(vec![0; g.rank])),
        _ => Ok(explicit_level(atom, g)?.into_iter().next_back().unwrap_or(vec![0; g.rank])),
    }
}

/// Module family exhibiting unbounded weight multiplicities, by rank.
fn growth_weight(d: &SystemDescriptor, g: GroupId) -> Result<Option<Vec<i64>>> {
    let p = g.p as i64;
    let n = g.rank as i64;
    let mut total = vec![0i64; g.rank];
    let mut add = |v: &[i64], k: usize| {
        for (t, x) in total.iter_mut().zip(v) {
            *t += x * p.pow(k as u32);
        }
    };
    if let Some(j) = c2_forbidden_at(d) {
        let pick = |a: &Atom| match a {
            Atom::L => lin(g, &[(1, 1)]),
            Atom::Q => lin(g, &[(1, 1), (1, n)]),
            _ => lin(g, &[(1, n)]),
        };
        add(&pick(&d.layers[j]), j);
        add(&pick(&d.layers[j + 1]), j + 1);
        return Ok(Some(total));
    }
    if let Some(Some((_, b))) = failing_block(d) {
        // the run, then the next nontrivial layer on the opposite end
        for k in b.start..=b.end {
            add(&representative(&d.layers[k], g)?, k - b.start);
        }
        let next = d.layers[b.end + 1..].iter().position(|a| *a != Atom::O).map(|i| i + b.end + 1);
        let Some(t) = next else { return Ok(None) };
        let top = match (&d.layers[t], b.side) {
            (Atom::CL(a), _) => one_sided_weight(g, a, true).unwrap_or(vec![0; g.rank]),
            (Atom::CR(a), _) => one_sided_weight(g, a, false).unwrap_or(vec![0; g.rank]),
            (_, Side::Left) => lin(g, &[(1, n)]),
            _ => lin(g, &[(1, 1)]),
        };
        add(&top, t - b.start);
        return Ok(Some(total));
    }
    Ok(None)
}

/// Upper bound on the multiplicities of a bounded type-A special system:
/// product of factorials of the polynomial degrees of its runs.
fn special_cap(d: &SystemDescriptor) -> Option<BigUint> {
    let blocks = special_blocks(d)?;
    let p = d.p;
    let mut cap = BigUint::one();
    for b in blocks {
        if !matches!(b.side, Side::Left | Side::Right) {
            continue;
        }
        let mut deg = 0u64;
        for k in b.start..=b.end {
            if let Atom::CL(a) | Atom::CR(a) = &d.layers[k] {
                let pd: u64 = a.iter().enumerate().map(|(j, &c)| (j as u64 + 1) * c as u64).sum();
                deg += p.pow((k - b.start) as u32) * pd;
            }
        }
        cap *= factorial(deg);
    }
    Some(cap)
}

/// Observed maximum multiplicity over the realized window, using the oracle
/// and falling back on proven upper bounds.
fn observed_max(oracle: &Oracle, w: &InductiveWindow) -> Result<(u64, Vec<String>)> {
    let mut best = 0;
    let mut notes = vec![];
    for (&n, l) in &w.levels {
        let g = w.group(n)?;
        for x in l {
            let wt = Weight::new(g, x.clone())?;
            match oracle.wdeg(&wt) {
                Ok(v) => best = best.max(v),
                Err(Error::Refused(_)) => match wdeg_verdict(&wt)?.best_upper() {
                    Some(u) => {
                        let u: u64 = u.try_into().unwrap_or(u64::MAX);
                        best = best.max(u);
                        notes.push(format!("{} {wt}: proven upper bound {u}", g.label()));
                    }
                    None => notes.push(format!("{} {wt}: no value", g.label())),
                },
                Err(e) => return Err(e),
            }
        }
    }
    Ok((best, notes))
}

/// Bounded, unbounded (with a growth certificate) or inconclusive.
pub fn bwm_check(oracle: &Oracle, d: &SystemDescriptor, bounds: WindowBounds) -> Result<BwmVerdict> {
    let certificate = |reason: String| -> Result<BwmVerdict> {
        let mut points = vec![];
        for r in CERTIFICATE_RANKS {
            let g = GroupId::new(d.family, r, d.p)?;
            let Some(x) = growth_weight(d, g)? else { continue };
            let wt = Weight::new(g, x)?;
            points.push(GrowthPoint { rank: r, weight: wt.to_string(), lower_bound: wdeg_verdict(&wt)?.best_lower() });
        }
        let mut observed = vec![];
        for r in bounds.n_min..=bounds.n_max.min(bounds.n_min + 1) {
            let g = GroupId::new(d.family, r, d.p)?;
            if let Some(x) = growth_weight(d, g)? {
                let wt = Weight::new(g, x)?;
                if let Ok(v) = oracle.wdeg(&wt) {
                    observed.push((r, wt.to_string(), v));
                }
            }
        }
        let grows = points.windows(2).all(|w| w[0].lower_bound < w[1].lower_bound);
        if grows && !points.is_empty() {
            Ok(BwmVerdict::Unbounded { certificate: points, observed, reason })
        } else {
            Ok(BwmVerdict::Inconclusive { reason: format!("{reason}; lower bounds do not grow"), observed_max_wdeg: None })
        }
    };
    if let Some(j) = c2_forbidden_at(d) {
        return certificate(format!("forbidden adjacent layers {} then {} at twist {j}", d.layers[j], d.layers[j + 1]));
    }
    if let Some(Some((f, b))) = failing_block(d) {
        let bound = (d.p as u128).pow(b.end as u32 + 1);
        return certificate(format!("run {f} (layers {}..={}) has δ = {} ≥ {bound}", b.start, b.end, b.delta));
    }
    let w = realize(oracle, d, bounds)?;
    let (max_wdeg, notes) = observed_max(oracle, &w)?;
    let levels: Vec<usize> = w.levels.keys().copied().collect();
    match d.family {
        Family::A => {
            if let Some(cap) = special_cap(d) {
                return Ok(BwmVerdict::Bounded {
                    max_wdeg,
                    levels,
                    cap: Some(cap),
                    reason: "special system whose runs satisfy the δ condition".into(),
                });
            }
            let nontrivial: Vec<&Atom> = d.layers.iter().filter(|a| **a != Atom::O).collect();
            if let [Atom::Ld(k) | Atom::Rd(k)] = nontrivial.as_slice() {
                return Ok(BwmVerdict::Bounded {
                    max_wdeg,
                    levels,
                    cap: Some(factorial(*k)),
                    reason: format!("polynomial degree at most {k}; cap holds from rank {k} on"),
                });
            }
            Ok(BwmVerdict::Inconclusive {
                reason: format!("not a special system; {}", notes.join("; ")),
                observed_max_wdeg: Some(max_wdeg),
            })
        }
        _ => {
            let l = d.layers.iter().filter(|a| **a == Atom::Q).count() as u32;
            Ok(BwmVerdict::Bounded {
                max_wdeg,
                levels,
                cap: Some(BigUint::from(1u64 << l)),
                reason: if notes.is_empty() {
                    "catalog member".into()
                } else {
                    format!("catalog member; {}", notes.join("; "))
                },
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn o() -> Oracle {
        Oracle::default()
    }

    #[test]
    fn descriptor_round_trip() {
        let d = SystemDescriptor::parse("CL[1,0,2] * Fr^2(CR[1])", Family::A, 3).unwrap();
        assert_eq!(d.layers, vec![Atom::CL(vec![1, 0, 2]), Atom::O, Atom::CR(vec![1])]);
        assert_eq!(d.to_string(), "CL[1,0,2] * Fr(O) * Fr^2(CR[1])");
        assert_eq!(SystemDescriptor::parse(&d.to_string(), Family::A, 3).unwrap(), d);
        assert!(SystemDescriptor::parse("S'", Family::C, 3).is_err());
        assert!(SystemDescriptor::parse("CL[3]", Family::A, 3).is_err());
        assert!(SystemDescriptor::parse("L * Fr(S)", Family::B, 3).is_ok());
    }

    #[test]
    fn fundamental_window() {
        let w = realize_atom(&o(), Family::A, 3, &Atom::F, WindowBounds::for_family(Family::A).with_max(3)).unwrap();
        assert_eq!(w.levels[&3], Level::from([vec![0, 0, 0], vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]));
        let c = check(&o(), &w);
        assert!(c.closure_ok);
        assert_eq!(delta_system(&w).unwrap_err().kind(), "invalid-weight");
    }

    #[test]
    fn spin_levels() {
        let w = realize_atom(&o(), Family::C, 3, &Atom::S, WindowBounds::for_family(Family::C).with_max(3)).unwrap();
        assert_eq!(w.levels[&3], Level::from([vec![0, 0, 1], vec![0, 1, 0]]));
    }

    #[test]
    fn one_sided_system() {
        let b = WindowBounds::for_family(Family::A).with_max(8);
        let w = realize_atom(&o(), Family::A, 3, &Atom::CL(vec![0, 1]), b).unwrap();
        assert_eq!(w.levels[&3], Level::from([vec![0, 0, 0], vec![1, 0, 0], vec![0, 1, 0]]));
        assert!(w.verified.contains(&3));
        let c = check(&o(), &w);
        assert!(c.closure_ok);
        assert_eq!(c.delta, Some(1));
    }

    #[test]
    fn counts() {
        assert_eq!(enumerate_bwm(Family::B, 3, 1, BwmBudget::default()).unwrap().count, 9);
        assert_eq!(enumerate_bwm(Family::C, 2, 1, BwmBudget::default()).unwrap().count, 12);
    }

    #[test]
    fn blocks_use_absolute_twists() {
        // δ(CL[1]) = 1 < 2: fine; δ(CL[1,1]) = 2 is not < 2
        let ok = SystemDescriptor::parse("CL[1] * Fr(CR[1])", Family::A, 2).unwrap();
        assert_eq!(failing_block(&ok), Some(None));
        let bad = SystemDescriptor::parse("CL[1,1] * Fr(CR[1])", Family::A, 2).unwrap();
        assert!(matches!(failing_block(&bad), Some(Some(_))));
        // a run spanning two layers: 1 + 2·1 = 3 < 4
        let run = SystemDescriptor::parse("CL[1] * Fr(CL[1]) * Fr^2(CR[1])", Family::A, 2).unwrap();
        assert_eq!(special_blocks(&run).unwrap().len(), 2);
        assert_eq!(failing_block(&run), Some(None));
    }
}
