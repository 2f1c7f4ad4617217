//! Weights, Steinberg decomposition, duals, polynomial degree and restriction.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsys::{Family, GroupId, RootSystem};

/// A weight of `group` in fundamental coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Weight {
    pub group: GroupId,
    pub coords: Vec<i64>,
}

impl Weight {
    pub fn new(group: GroupId, coords: Vec<i64>) -> Result<Weight> {
        if coords.len() != group.rank {
            return Err(Error::InvalidWeight(format!(
                "{} coordinates given for rank {}",
                coords.len(),
                group.rank
            )));
        }
        Ok(Weight { group, coords })
    }

    pub fn zero(group: GroupId) -> Weight {
        Weight { group, coords: vec![0; group.rank] }
    }

    /// `ω_i` for `1 <= i <= n`; `ω_0` and `ω_{n+1}` are zero.
    pub fn fundamental(group: GroupId, i: usize) -> Weight {
        let mut w = Weight::zero(group);
        if i >= 1 && i <= group.rank {
            w.coords[i - 1] = 1;
        }
        w
    }

    /// Parse `[a1,a2,...,an]`.
    pub fn parse(group: GroupId, text: &str) -> Result<Weight> {
        Weight::new(group, parse_coords(text)?)
    }

    pub fn is_dominant(&self) -> bool {
        RootSystem::is_dominant(&self.coords)
    }

    pub fn require_dominant(&self) -> Result<()> {
        if self.is_dominant() {
            Ok(())
        } else {
            Err(Error::NotDominant(self.to_string()))
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&a| a == 0)
    }

    pub fn root_system(&self) -> std::sync::Arc<RootSystem> {
        self.group.root_system()
    }

    /// Doubled ε-coordinates.
    pub fn eps(&self) -> Vec<i64> {
        self.root_system().to_eps(&self.coords)
    }

    pub fn from_eps(group: GroupId, eps: &[i64]) -> Result<Weight> {
        let coords = group
            .root_system()
            .from_eps(eps)
            .ok_or_else(|| Error::InvalidWeight(format!("{eps:?} is not a weight of {}", group.label())))?;
        Ok(Weight { group, coords })
    }

    pub fn add(&self, other: &Weight) -> Result<Weight> {
        same_group(self, other)?;
        Ok(Weight {
            group: self.group,
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn scale(&self, k: i64) -> Weight {
        Weight { group: self.group, coords: self.coords.iter().map(|a| a * k).collect() }
    }

    /// Sum of the coefficients.
    pub fn coefficient_sum(&self) -> i64 {
        self.coords.iter().sum()
    }

    /// Indices `i` (1-based) with nonzero coefficient.
    pub fn support(&self) -> Vec<usize> {
        self.coords.iter().enumerate().filter(|(_, &a)| a != 0).map(|(i, _)| i + 1).collect()
    }

    pub fn delta(&self) -> Result<u64> {
        self.require_dominant()?;
        Ok(self.root_system().delta(&self.coords) as u64)
    }

    /// Dominance order `self ≥ other`.
    pub fn dominates(&self, other: &Weight) -> bool {
        self.group.family == other.group.family
            && self.group.rank == other.group.rank
            && self.root_system().dominates(&self.coords, &other.coords)
    }

    pub fn orbit(&self) -> Vec<Weight> {
        self.root_system()
            .orbit(&self.coords)
            .into_iter()
            .map(|coords| Weight { group: self.group, coords })
            .collect()
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_coords(&self.coords))
    }
}

pub fn format_coords(c: &[i64]) -> String {
    let parts: Vec<String> = c.iter().map(|a| a.to_string()).collect();
    format!("[{}]", parts.join(","))
}

pub fn parse_coords(text: &str) -> Result<Vec<i64>> {
    let t = text.trim();
    let inner = t
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| Error::Parse(format!("expected `[a1,...,an]`, got `{t}`")))?;
    if inner.trim().is_empty() {
        return Ok(vec![]);
    }
    inner
        .split(',')
        .map(|s| s.trim().parse::<i64>().map_err(|_| Error::Parse(format!("bad coefficient `{}`", s.trim()))))
        .collect()
}

fn same_group(a: &Weight, b: &Weight) -> Result<()> {
    if a.group != b.group {
        return Err(Error::GroupMismatch(format!("{} vs {}", a.group, b.group)));
    }
    Ok(())
}

pub fn is_p_restricted(w: &Weight) -> bool {
    let p = w.group.p as i64;
    w.coords.iter().all(|&a| (0..p).contains(&a))
}

/// `λ = Σ_j p^j λ_j` with every layer p-restricted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SteinbergDecomposition {
    pub p: u64,
    pub layers: Vec<Weight>,
}

impl SteinbergDecomposition {
    pub fn reassemble(&self) -> Weight {
        let g = self.layers[0].group;
        let mut out = Weight::zero(g);
        let mut pk = 1i64;
        for layer in &self.layers {
            for (o, a) in out.coords.iter_mut().zip(&layer.coords) {
                *o += pk * a;
            }
            pk *= self.p as i64;
        }
        out
    }

    /// Number of nonzero layers.
    pub fn nonzero_layers(&self) -> usize {
        self.layers.iter().filter(|l| !l.is_zero()).count()
    }
}

pub fn steinberg_decompose(w: &Weight) -> Result<SteinbergDecomposition> {
    w.require_dominant()?;
    let p = w.group.p as i64;
    let mut rest = w.coords.clone();
    let mut layers = vec![];
    loop {
        layers.push(Weight { group: w.group, coords: rest.iter().map(|a| a % p).collect() });
        for a in rest.iter_mut() {
            *a /= p;
        }
        if rest.iter().all(|&a| a == 0) {
            break;
        }
    }
    Ok(SteinbergDecomposition { p: w.group.p, layers })
}

/// Highest weight of the dual module, `-w_0 λ`.
pub fn dual_weight(w: &Weight) -> Result<Weight> {
    w.require_dominant()?;
    let n = w.group.rank;
    let mut c = w.coords.clone();
    match w.group.family {
        Family::A => c.reverse(),
        Family::D if n % 2 == 1 => c.swap(n - 2, n - 1),
        _ => {}
    }
    Ok(Weight { group: w.group, coords: c })
}

/// Polynomial degree `Σ i·a_i` of a type A weight.
pub fn pdeg(w: &Weight) -> Result<u64> {
    if w.group.family != Family::A {
        return Err(Error::Unsupported("polynomial degree is defined for type A only".into()));
    }
    w.require_dominant()?;
    Ok(w.coords.iter().enumerate().map(|(i, &a)| (i as u64 + 1) * a as u64).sum())
}

/// `min(pdeg λ, pdeg λ*)`.
pub fn min_pdeg(w: &Weight) -> Result<u64> {
    Ok(pdeg(w)?.min(pdeg(&dual_weight(w)?)?))
}

/// Restriction of a weight to the torus of the subsystem group `G_k` spanned by
/// the trailing `k` simple roots (trailing ε-block).
pub fn restrict_weight(w: &Weight, k: usize) -> Result<Weight> {
    let g = w.group;
    if k > g.rank {
        return Err(Error::InvalidGroup(format!("cannot restrict rank {} to {k}", g.rank)));
    }
    let target = g.with_rank(k)?;
    let eps = w.eps();
    let len = eps.len();
    let keep = if g.family == Family::A { k + 1 } else { k };
    let block = &eps[len - keep..];
    let mut block = block.to_vec();
    if g.family == Family::A {
        let m = *block.iter().min().unwrap();
        for b in block.iter_mut() {
            *b -= m;
        }
    }
    Weight::from_eps(target, &block)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(f: Family, n: usize, p: u64) -> GroupId {
        GroupId::new(f, n, p).unwrap()
    }

    #[test]
    fn steinberg_examples() {
        let a1 = g(Family::A, 1, 2);
        let d = steinberg_decompose(&Weight::new(a1, vec![3]).unwrap()).unwrap();
        assert_eq!(d.layers.iter().map(|l| l.coords.clone()).collect::<Vec<_>>(), vec![vec![1], vec![1]]);
        let c3 = g(Family::C, 3, 2);
        let d = steinberg_decompose(&Weight::new(c3, vec![2, 0, 1]).unwrap()).unwrap();
        assert_eq!(d.layers[0].coords, vec![0, 0, 1]);
        assert_eq!(d.layers[1].coords, vec![1, 0, 0]);
        assert_eq!(d.reassemble().coords, vec![2, 0, 1]);
    }

    #[test]
    fn duals_and_degrees() {
        let a4 = g(Family::A, 4, 3);
        let w = Weight::new(a4, vec![1, 3, 0, 0]).unwrap();
        assert_eq!(dual_weight(&w).unwrap().coords, vec![0, 0, 3, 1]);
        let a3 = g(Family::A, 3, 3);
        assert_eq!(pdeg(&Weight::new(a3, vec![2, 1, 0]).unwrap()).unwrap(), 4);
        let d5 = g(Family::D, 5, 3);
        assert_eq!(dual_weight(&Weight::new(d5, vec![0, 0, 0, 1, 0]).unwrap()).unwrap().coords, vec![0, 0, 0, 0, 1]);
        let d4 = g(Family::D, 4, 3);
        assert_eq!(dual_weight(&Weight::new(d4, vec![0, 0, 1, 0]).unwrap()).unwrap().coords, vec![0, 0, 1, 0]);
    }

    #[test]
    fn restriction_is_trailing_block() {
        let a3 = g(Family::A, 3, 3);
        assert_eq!(restrict_weight(&Weight::fundamental(a3, 2), 2).unwrap().coords, vec![1, 0]);
        let b3 = g(Family::B, 3, 3);
        assert_eq!(restrict_weight(&Weight::fundamental(b3, 3), 2).unwrap().coords, vec![0, 1]);
        for (f, n) in [(Family::A, 4), (Family::B, 4), (Family::C, 4), (Family::D, 5)] {
            let gg = g(f, n, 3);
            let w = Weight::new(gg, (1..=n as i64).collect()).unwrap();
            for k in f.min_rank()..=n {
                assert_eq!(restrict_weight(&w, k).unwrap().coords, w.coords[n - k..].to_vec());
            }
        }
    }

    #[test]
    fn parse_round_trip() {
        let a4 = g(Family::A, 4, 3);
        let w = Weight::parse(a4, "[0, 1,0,2]").unwrap();
        assert_eq!(w.to_string(), "[0,1,0,2]");
        assert!(Weight::parse(a4, "[0,1]").is_err());
        assert!(Weight::parse(a4, "0,1,0,0").is_err());
    }
}
