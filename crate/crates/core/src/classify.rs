//! Multiplicity-freeness and bounds on the maximal weight multiplicity.

use num::{BigUint, One, ToPrimitive};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rootsys::{Family, GroupId};
use crate::weights::{dual_weight, is_p_restricted, min_pdeg, pdeg, steinberg_decompose, Weight};

fn fw(g: GroupId, i: usize) -> Vec<i64> {
    Weight::fundamental(g, i).coords
}

fn combo(g: GroupId, terms: &[(i64, usize)]) -> Vec<i64> {
    let mut v = vec![0; g.rank];
    for &(c, i) in terms {
        if i >= 1 && i <= g.rank {
            v[i - 1] += c;
        }
    }
    v
}

/// The p-restricted weights whose simple modules are multiplicity free.
pub fn omega_p(g: GroupId) -> Vec<Vec<i64>> {
    let n = g.rank;
    let p = g.p as i64;
    let mut out = vec![vec![0; n]];
    match g.family {
        Family::A => {
            for k in 1..=n {
                out.push(fw(g, k));
            }
            for k in 0..=n {
                for a in 0..p {
                    out.push(combo(g, &[(p - 1 - a, k), (a, k + 1)]));
                }
            }
        }
        Family::B | Family::D => {
            out.push(fw(g, 1));
            out.push(fw(g, n));
            if g.family == Family::D {
                out.push(fw(g, n - 1));
            }
        }
        Family::C if g.p == 2 => {
            out.push(fw(g, 1));
            out.push(fw(g, n));
        }
        Family::C => {
            out.push(fw(g, 1));
            out.push(combo(g, &[((p - 1) / 2, n)]));
            out.push(combo(g, &[(1, n - 1), ((p - 3) / 2, n)]));
        }
    }
    out.sort();
    out.dedup();
    out
}

pub fn in_omega_p(w: &Weight) -> Result<bool> {
    w.require_dominant()?;
    if !is_p_restricted(w) {
        return Err(Error::InvalidWeight(format!("{w} is not {}-restricted", w.group.p)));
    }
    Ok(omega_p(w.group).contains(&w.coords))
}

fn is_c2(g: GroupId) -> bool {
    g.family == Family::C && g.p == 2
}

/// Membership in the set of highest weights of multiplicity-free simple modules.
pub fn in_omega(w: &Weight) -> Result<bool> {
    let dec = steinberg_decompose(w)?;
    let om = omega_p(w.group);
    if !dec.layers.iter().all(|l| om.contains(&l.coords)) {
        return Ok(false);
    }
    if is_c2(w.group) {
        let (w1, wn) = (fw(w.group, 1), fw(w.group, w.group.rank));
        if dec.layers.windows(2).any(|p| p[0].coords == wn && p[1].coords == w1) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Outcome of the characteristic-2 symplectic classification.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum C2Class {
    /// `wdeg = 2^l` where l counts layers equal to `ω_1 + ω_n`.
    Exact { l: u32, value: u64 },
    /// `wdeg ≥ n - 4 - (n mod 4)`.
    Lower { value: i64 },
}

pub fn c2_wdeg_class(w: &Weight) -> Result<C2Class> {
    if !is_c2(w.group) {
        return Err(Error::Unsupported("needs type C in characteristic 2".into()));
    }
    let g = w.group;
    let n = g.rank;
    let dec = steinberg_decompose(w)?;
    let w1 = fw(g, 1);
    let wn = fw(g, n);
    let q = combo(g, &[(1, 1), (1, n)]);
    let allowed = [vec![0; n], w1.clone(), wn.clone(), q.clone()];
    let forbidden = [(&wn, &w1), (&q, &w1), (&wn, &q), (&q, &q)];
    let ok = dec.layers.iter().all(|l| allowed.contains(&l.coords))
        && !dec
            .layers
            .windows(2)
            .any(|p| forbidden.iter().any(|(a, b)| &p[0].coords == *a && &p[1].coords == *b));
    if ok {
        let l = dec.layers.iter().filter(|x| x.coords == q).count() as u32;
        Ok(C2Class::Exact { l, value: 1 << l })
    } else {
        Ok(C2Class::Lower { value: rank_linear(n) })
    }
}

fn rank_linear(n: usize) -> i64 {
    n as i64 - 4 - (n as i64 % 4)
}

/// `f(u_1) = 1`, `f(u_1,u_2) = u_2 - u_1`,
/// `f(u_1,...,u_l) = (u_2 - u_1) f(u_2,...,u_l) + f(u_3,...,u_l)`.
pub fn kleshchev_f(u: &[u64]) -> u128 {
    match u.len() {
        0 => 1,
        1 => 1,
        2 => (u[1] - u[0]) as u128,
        _ => (u[1] - u[0]) as u128 * kleshchev_f(&u[1..]) + kleshchev_f(&u[2..]),
    }
}

/// All dominant weights of `A_n` with polynomial degree at most d.
pub fn enumerate_small_pdeg_weights(g: GroupId, d: u64) -> Result<Vec<Weight>> {
    if g.family != Family::A {
        return Err(Error::Unsupported("polynomial degree is defined for type A only".into()));
    }
    let n = g.rank;
    let mut out = vec![];
    fn go(i: usize, left: u64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if i == cur.len() {
            out.push(cur.clone());
            return;
        }
        let step = i as u64 + 1;
        for a in 0..=left / step {
            cur[i] = a as i64;
            go(i + 1, left - a * step, cur, out);
        }
        cur[i] = 0;
    }
    go(0, d, &mut vec![0; n], &mut out);
    out.sort();
    Ok(out.into_iter().map(|coords| Weight { group: g, coords }).collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundSource {
    /// Multiplicity-free classification: membership.
    OmegaMembership,
    /// Multiplicity-free classification: non-membership forces wdeg ≥ 2.
    OmegaConverse,
    SymplecticChar2Exact,
    SymplecticChar2Lower,
    /// `n - 4 - (n mod 4)` for types B, C, D.
    RankLinearLower,
    /// `d - 2` for small polynomial degree d.
    PolynomialDegreeLower,
    /// `d!` for polynomial degree d ≤ n.
    PolynomialDegreeUpper,
    /// `> sqrt(n)/p - 1` for large polynomial degree.
    LargeDegreeLower,
    /// Recursion on the support of a restricted weight.
    SupportSpreadLower,
    /// Product of lower bounds of the Steinberg layers.
    TwistedTensorLower,
    /// Exact multiplicativity across Steinberg layers under a δ condition.
    TwistedTensorMultiplicative,
    /// Product of factorials over blocks of layers.
    BlockFactorialUpper,
    /// Lower layers on the left, top layer on the right (or the mirror).
    OppositeSidesLower,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundKind {
    Lower,
    Upper,
    Exact,
}

pub(crate) fn ser_big<S: Serializer>(v: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v.to_u64() {
        Some(x) => s.serialize_u64(x),
        None => s.serialize_str(&v.to_string()),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Bound {
    #[serde(serialize_with = "ser_big")]
    pub value: BigUint,
    pub kind: BoundKind,
    pub source: BoundSource,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub note: String,
}

impl Bound {
    fn new(value: impl Into<BigUint>, kind: BoundKind, source: BoundSource, note: impl Into<String>) -> Bound {
        Bound { value: value.into(), kind, source, note: note.into() }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct WdegVerdict {
    #[serde(skip_serializing_if = "Option::is_none", serialize_with = "ser_opt_big")]
    pub exact: Option<BigUint>,
    pub lower: Vec<Bound>,
    pub upper: Vec<Bound>,
    /// Bounds whose rank hypothesis fails at this rank; not applied.
    pub conditional: Vec<Bound>,
}

fn ser_opt_big<S: Serializer>(v: &Option<BigUint>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(x) => ser_big(x, s),
        None => s.serialize_none(),
    }
}

impl WdegVerdict {
    pub fn best_lower(&self) -> BigUint {
        self.lower.iter().map(|b| b.value.clone()).max().unwrap_or_else(BigUint::one).max(BigUint::one())
    }

    pub fn best_upper(&self) -> Option<BigUint> {
        self.upper.iter().map(|b| b.value.clone()).min()
    }

    fn push(&mut self, b: Bound, holds: bool) {
        if !holds {
            self.conditional.push(b);
            return;
        }
        match b.kind {
            BoundKind::Lower => self.lower.push(b),
            BoundKind::Upper => self.upper.push(b),
            BoundKind::Exact => {
                self.exact = Some(b.value.clone());
                self.lower.push(Bound { kind: BoundKind::Lower, ..b.clone() });
                self.upper.push(Bound { kind: BoundKind::Upper, ..b });
            }
        }
    }
}

fn factorial(d: u64) -> BigUint {
    (1..=d).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

fn delta_of(g: GroupId, coords: &[i64]) -> i64 {
    g.root_system().delta(coords)
}

/// Bounds on the maximal weight multiplicity of `L(λ)`.
pub fn wdeg_verdict(w: &Weight) -> Result<WdegVerdict> {
    w.require_dominant()?;
    let g = w.group;
    let n = g.rank;
    let mut v = WdegVerdict::default();
    if in_omega(w)? {
        v.push(Bound::new(1u32, BoundKind::Exact, BoundSource::OmegaMembership, ""), true);
        return Ok(v);
    }
    v.push(Bound::new(2u32, BoundKind::Lower, BoundSource::OmegaConverse, "rank at least 4"), n >= 4);

    match g.family {
        Family::C if g.p == 2 => match c2_wdeg_class(w)? {
            C2Class::Exact { l, value } => v.push(
                Bound::new(value, BoundKind::Exact, BoundSource::SymplecticChar2Exact, format!("l = {l}, rank at least 8")),
                n >= 8,
            ),
            C2Class::Lower { value } => {
                if value >= 1 || n < 8 {
                    v.push(
                        Bound::new(value.max(0) as u64, BoundKind::Lower, BoundSource::SymplecticChar2Lower, "rank at least 8"),
                        n >= 8,
                    )
                }
            }
        },
        Family::B | Family::C | Family::D => {
            let value = rank_linear(n);
            v.push(
                Bound::new(value.max(0) as u64, BoundKind::Lower, BoundSource::RankLinearLower, "rank at least 8"),
                n >= 8,
            );
        }
        Family::A => {
            if is_p_restricted(w) {
                restricted_a_bounds(w, &mut v)?;
            } else {
                nonrestricted_a_bounds(w, &mut v)?;
            }
        }
    }

    if !is_p_restricted(w) {
        twisted_tensor_bounds(w, &mut v)?;
    }
    if v.exact.is_none() {
        let lo = v.best_lower();
        if v.best_upper() == Some(lo.clone()) {
            v.exact = Some(lo);
        }
    }
    Ok(v)
}

fn restricted_a_bounds(w: &Weight, v: &mut WdegVerdict) -> Result<()> {
    let g = w.group;
    let n = g.rank as u64;
    let d = min_pdeg(w)?;
    if d <= n {
        if d >= 4 {
            v.push(Bound::new(d - 2, BoundKind::Lower, BoundSource::PolynomialDegreeLower, format!("d = {d}")), true);
        }
        v.push(Bound::new(factorial(d), BoundKind::Upper, BoundSource::PolynomialDegreeUpper, format!("d = {d}")), true);
    } else {
        // smallest integer exceeding sqrt(n)/p - 1 is floor(sqrt(n)/p)
        let mut m = 0u64;
        while ((m + 1) * g.p).pow(2) <= n {
            m += 1;
        }
        if m >= 2 {
            v.push(Bound::new(m, BoundKind::Lower, BoundSource::LargeDegreeLower, "rank at least 16"), n >= 16);
        }
    }
    let supp: Vec<u64> = w.support().into_iter().map(|i| i as u64).collect();
    if supp.len() >= 2 {
        let f = kleshchev_f(&supp);
        v.push(
            Bound::new(f, BoundKind::Lower, BoundSource::SupportSpreadLower, format!("support {supp:?}")),
            true,
        );
    }
    Ok(())
}

fn nonrestricted_a_bounds(w: &Weight, v: &mut WdegVerdict) -> Result<()> {
    let g = w.group;
    let n = g.rank as u64;
    let d = min_pdeg(w)?;
    if d <= n {
        v.push(Bound::new(factorial(d), BoundKind::Upper, BoundSource::PolynomialDegreeUpper, format!("d = {d}")), true);
    }
    if let Some(b) = block_factorial_bound(w)? {
        v.push(b, true);
    }
    if let Some(b) = opposite_sides_bound(w)? {
        v.push(b, true);
    }
    Ok(())
}

/// Search over splittings of the Steinberg layers into consecutive blocks, each
/// of bounded polynomial degree on one side or multiplicity free.
fn block_factorial_bound(w: &Weight) -> Result<Option<Bound>> {
    let g = w.group;
    let p = g.p;
    let n = g.rank as u64;
    let layers = steinberg_decompose(w)?.layers;
    let k = layers.len();
    let om = omega_p(g);
    let lp: Vec<u64> = layers.iter().map(pdeg).collect::<Result<_>>()?;
    let rp: Vec<u64> = layers.iter().map(|l| pdeg(&dual_weight(l)?)).collect::<Result<_>>()?;
    let deltas: Vec<u128> = layers.iter().map(|l| delta_of(g, &l.coords) as u128).collect();
    let mut best: Option<(BigUint, String)> = None;
    // bit s set: a block ends after layer s
    for cuts in 0u32..(1 << (k - 1)) {
        let mut blocks = vec![];
        let mut start = 0;
        for s in 0..k {
            if s == k - 1 || cuts >> s & 1 == 1 {
                blocks.push((start, s));
                start = s + 1;
            }
        }
        let nb = blocks.len();
        'label: for labels in 0..3u32.pow(nb as u32) {
            let lab: Vec<u32> = (0..nb).map(|b| labels / 3u32.pow(b as u32) % 3).collect();
            let mut d = 0u64;
            for (b, &(s0, s1)) in blocks.iter().enumerate() {
                for s in s0..=s1 {
                    match lab[b] {
                        0 => d = d.max(lp[s]),
                        1 => d = d.max(rp[s]),
                        _ => {
                            if !om.contains(&layers[s].coords) {
                                continue 'label;
                            }
                        }
                    }
                }
            }
            for (b, &(s0, s1)) in blocks.iter().enumerate() {
                if b + 1 == nb {
                    break;
                }
                let delta: u128 = (s0..=s1).map(|s| (p as u128).pow(s as u32) * deltas[s]).sum();
                if delta >= (p as u128).pow(s1 as u32 + 1) {
                    continue 'label;
                }
            }
            let mut prod = BigUint::one();
            let mut desc = vec![];
            let mut ok = true;
            for (b, &(s0, s1)) in blocks.iter().enumerate() {
                if lab[b] == 2 {
                    continue;
                }
                let geo: u64 = (0..=(s1 - s0) as u32).map(|e| p.pow(e)).sum();
                let dj = d * geo;
                if dj > n {
                    ok = false;
                    break;
                }
                prod *= factorial(dj);
                desc.push(format!("{}{}..{}:{}", ["L", "R"][lab[b] as usize], s0, s1, dj));
            }
            if !ok {
                continue;
            }
            if best.as_ref().map_or(true, |(v, _)| prod < *v) {
                best = Some((prod, desc.join(" ")));
            }
        }
    }
    Ok(best.map(|(v, note)| Bound::new(v, BoundKind::Upper, BoundSource::BlockFactorialUpper, note)))
}

/// Lower layers supported on the left, the top layer on the right, and the
/// lower part large enough relative to the twist.
fn opposite_sides_bound(w: &Weight) -> Result<Option<Bound>> {
    let g = w.group;
    let p = g.p as u128;
    let layers = steinberg_decompose(w)?.layers;
    let s = layers.len() - 1;
    let top = &layers[s];
    let mut lower = Weight::zero(g);
    for (t, l) in layers.iter().enumerate().take(s) {
        lower = lower.add(&l.scale(p.pow(t as u32) as i64))?;
    }
    if lower.is_zero() || top.is_zero() {
        return Ok(None);
    }
    if (delta_of(g, &lower.coords) as u128) < p.pow(s as u32) {
        return Ok(None);
    }
    let ms = lower.support();
    let ns = top.support();
    let mut best = 0i64;
    // lower on the left, top on the right
    let (i, l) = (*ms.last().unwrap() as i64, *ns.first().unwrap() as i64);
    if i < l - 1 {
        best = best.max(l - i - 1);
    }
    // mirror
    let (i, l) = (*ms.first().unwrap() as i64, *ns.last().unwrap() as i64);
    if l < i - 1 {
        best = best.max(i - l - 1);
    }
    if best >= 2 {
        return Ok(Some(Bound::new(best as u64, BoundKind::Lower, BoundSource::OppositeSidesLower, "")));
    }
    Ok(None)
}

/// Whether every weight of `N_1 ⊗ N_2^{[s]}` splits uniquely as a weight of
/// `N_1` plus one of `N_2^{[s]}`, given `δ(N_1)`. In types B and C some
/// fundamental weight pairing to 1 with the maximal coroot lies in the root
/// lattice, so `δ < p^s` is not enough there and `2δ < p^s` is used.
pub fn twist_separates(family: Family, p: u64, delta: u128, s: u32) -> bool {
    let q = (p as u128).pow(s);
    match family {
        Family::A | Family::D => delta < q,
        Family::B | Family::C => 2 * delta < q,
    }
}

fn twisted_tensor_bounds(w: &Weight, v: &mut WdegVerdict) -> Result<()> {
    let g = w.group;
    let p = g.p as u128;
    let layers = steinberg_decompose(w)?.layers;
    let mut lo = BigUint::one();
    let mut hi = Some(BigUint::one());
    let mut exact = Some(BigUint::one());
    for l in &layers {
        if l.is_zero() {
            continue;
        }
        let lv = wdeg_verdict(l)?;
        lo *= lv.best_lower();
        hi = match (hi, lv.best_upper()) {
            (Some(a), Some(b)) => Some(a * b),
            _ => None,
        };
        exact = match (exact, lv.exact) {
            (Some(a), Some(b)) => Some(a * b),
            _ => None,
        };
    }
    if lo > BigUint::one() {
        v.push(Bound::new(lo, BoundKind::Lower, BoundSource::TwistedTensorLower, ""), true);
    }
    // peel the top layer while the part below it is small
    let mut multiplicative = true;
    let mut below: u128 = 0;
    for (s, l) in layers.iter().enumerate() {
        if s > 0 && !l.is_zero() && !twist_separates(g.family, g.p, below, s as u32) {
            multiplicative = false;
        }
        below += p.pow(s as u32) * delta_of(g, &l.coords) as u128;
    }
    if multiplicative {
        if let Some(e) = exact {
            v.push(Bound::new(e, BoundKind::Exact, BoundSource::TwistedTensorMultiplicative, ""), true);
        } else if let Some(h) = hi {
            v.push(Bound::new(h, BoundKind::Upper, BoundSource::TwistedTensorMultiplicative, ""), true);
        }
    }
    Ok(())
}

/// Summary used by the command line.
#[derive(Clone, Debug, Serialize)]
pub struct Classification {
    pub group: String,
    pub p: u64,
    pub weight: Vec<i64>,
    pub omega: bool,
    #[serde(flatten)]
    pub verdict: WdegVerdict,
}

pub fn classify(w: &Weight) -> Result<Classification> {
    Ok(Classification {
        group: w.group.label(),
        p: w.group.p,
        weight: w.coords.clone(),
        omega: in_omega(w)?,
        verdict: wdeg_verdict(w)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wt(f: Family, n: usize, p: u64, c: &[i64]) -> Weight {
        Weight::new(GroupId::new(f, n, p).unwrap(), c.to_vec()).unwrap()
    }

    #[test]
    fn c2_examples() {
        let mut c = vec![0; 8];
        c[0] = 1;
        c[7] = 1;
        let v = wdeg_verdict(&wt(Family::C, 8, 2, &c)).unwrap();
        assert_eq!(v.exact, Some(BigUint::from(2u32)));
        let v = wdeg_verdict(&wt(Family::C, 8, 2, &[0, 0, 0, 0, 0, 0, 0, 1])).unwrap();
        assert_eq!(v.exact, Some(BigUint::one()));
        c[0] = 2;
        let v = wdeg_verdict(&wt(Family::C, 8, 2, &c)).unwrap();
        assert_eq!(v.best_lower(), BigUint::from(4u32));
        assert_eq!(c2_wdeg_class(&wt(Family::C, 8, 2, &c)).unwrap(), C2Class::Lower { value: 4 });
    }

    #[test]
    fn kleshchev_values() {
        assert_eq!(kleshchev_f(&[1, 2, 4]), 3);
        assert_eq!(kleshchev_f(&[2, 8]), 6);
        assert_eq!(kleshchev_f(&[5]), 1);
    }

    #[test]
    fn support_spread_example() {
        let mut c = vec![0; 10];
        c[1] = 1;
        c[7] = 1;
        let v = wdeg_verdict(&wt(Family::A, 10, 3, &c)).unwrap();
        assert!(v.best_lower() >= BigUint::from(6u32));
    }

    #[test]
    fn small_pdeg_enumeration() {
        let g = GroupId::new(Family::A, 4, 3).unwrap();
        let ws: Vec<Vec<i64>> = enumerate_small_pdeg_weights(g, 2).unwrap().into_iter().map(|w| w.coords).collect();
        assert_eq!(ws, vec![vec![0, 0, 0, 0], vec![0, 1, 0, 0], vec![1, 0, 0, 0], vec![2, 0, 0, 0]]);
    }

    #[test]
    fn omega_members() {
        assert!(in_omega(&wt(Family::A, 4, 3, &[0, 1, 0, 0])).unwrap());
        assert!(in_omega(&wt(Family::A, 4, 3, &[0, 1, 1, 0])).unwrap());
        assert!(!in_omega(&wt(Family::A, 4, 3, &[1, 0, 1, 0])).unwrap());
        assert!(in_omega(&wt(Family::C, 3, 3, &[0, 1, 0])).unwrap());
        assert!(in_omega(&wt(Family::C, 3, 5, &[0, 0, 2])).unwrap());
        assert!(!in_omega(&wt(Family::C, 3, 2, &[2, 0, 1])).unwrap());
        assert!(in_omega(&wt(Family::C, 3, 2, &[1, 0, 2])).unwrap());
        assert!(in_omega(&wt(Family::A, 2, 2, &[2, 1])).unwrap());
        assert!(!in_omega(&wt(Family::A, 2, 2, &[3, 1])).unwrap());
    }

    #[test]
    fn symplectic_twist_needs_double_delta() {
        // L(ω3) ⊗ L(ω1)^[1] for C3 at p = 2 has a weight space of dimension 3
        let v = wdeg_verdict(&wt(Family::C, 3, 2, &[2, 0, 1])).unwrap();
        assert!(v.best_upper().is_none_or(|u| u >= BigUint::from(3u32)));
        assert!(twist_separates(Family::A, 2, 1, 1));
        assert!(!twist_separates(Family::C, 2, 1, 1));
        assert!(twist_separates(Family::C, 3, 1, 1));
    }

    #[test]
    fn verdict_is_consistent() {
        let v = wdeg_verdict(&wt(Family::A, 6, 5, &[2, 1, 0, 0, 0, 0])).unwrap();
        assert!(v.best_upper().unwrap() >= v.best_lower());
    }
}
