//! Modular simple characters computed from first principles.
//!
//! `simple_char` builds the p-restricted layers of `L(λ)` over `F_p` (see
//! [`quotient`]) and reassembles non-restricted weights by Steinberg's tensor
//! product theorem. Results are memoised per `(group, λ)`, optionally on disk.

pub mod field;
pub mod freudenthal;
pub mod quotient;
pub mod words;

use std::collections::{BTreeMap, HashMap};
use std::path::PathBuf;
use std::sync::{Arc, OnceLock, RwLock};

use serde::{Deserialize, Serialize};

use crate::chars::{maximal_weights, CharacterJson, FormalCharacter};
use crate::error::{Error, Result};
use crate::rootsys::GroupId;
use crate::weights::{is_p_restricted, steinberg_decompose, Weight};

pub use words::GramReport;

/// Resource limits; exceeding one is a refusal, never a wrong answer.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct OracleLimits {
    pub max_rank: usize,
    /// Weight spaces visited while building one module.
    pub max_weights: usize,
    /// Spanning vectors at a single weight.
    pub max_candidates: usize,
    /// Words in a Gram report.
    pub max_words: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits { max_rank: 12, max_weights: 400_000, max_candidates: 3_000, max_words: 2_000 }
    }
}

const DISK_VERSION: &str = "v1";

pub struct Oracle {
    limits: OracleLimits,
    cache: RwLock<HashMap<(GroupId, Vec<i64>), Arc<FormalCharacter>>>,
    disk: Option<PathBuf>,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle::new(OracleLimits::default())
    }
}

static GLOBAL: OnceLock<Oracle> = OnceLock::new();

impl Oracle {
    pub fn new(limits: OracleLimits) -> Self {
        Oracle { limits, cache: RwLock::new(HashMap::new()), disk: None }
    }

    /// Persist simple characters as JSON files under `dir`.
    pub fn with_disk_cache(mut self, dir: impl Into<PathBuf>) -> Self {
        self.disk = Some(dir.into());
        self
    }

    /// Process-wide oracle with default limits. Honours `WDEG_CACHE_DIR`.
    pub fn global() -> &'static Oracle {
        GLOBAL.get_or_init(|| {
            let o = Oracle::default();
            match std::env::var_os("WDEG_CACHE_DIR") {
                Some(d) => o.with_disk_cache(d),
                None => o,
            }
        })
    }

    pub fn limits(&self) -> &OracleLimits {
        &self.limits
    }

    fn check(&self, w: &Weight) -> Result<()> {
        w.require_dominant()?;
        if w.group.rank > self.limits.max_rank {
            return Err(Error::Refused(format!("rank {} exceeds {}", w.group.rank, self.limits.max_rank)));
        }
        Ok(())
    }

    fn disk_path(&self, w: &Weight) -> Option<PathBuf> {
        let dir = self.disk.as_ref()?;
        let coords: Vec<String> = w.coords.iter().map(|a| a.to_string()).collect();
        Some(dir.join(format!("{DISK_VERSION}-{}-p{}-{}.json", w.group.label(), w.group.p, coords.join("_"))))
    }

    fn lookup(&self, w: &Weight) -> Option<Arc<FormalCharacter>> {
        if let Some(c) = self.cache.read().unwrap().get(&(w.group, w.coords.clone())) {
            return Some(c.clone());
        }
        let path = self.disk_path(w)?;
        let text = std::fs::read_to_string(path).ok()?;
        let j: CharacterJson = serde_json::from_str(&text).ok()?;
        let c = Arc::new(FormalCharacter::from_json(&j).ok()?);
        self.cache.write().unwrap().insert((w.group, w.coords.clone()), c.clone());
        Some(c)
    }

    fn store(&self, w: &Weight, c: FormalCharacter) -> Arc<FormalCharacter> {
        if let Some(path) = self.disk_path(w) {
            if let Ok(text) = serde_json::to_string(&c.to_json(false)) {
                let _ = std::fs::create_dir_all(path.parent().unwrap());
                let _ = std::fs::write(path, text);
            }
        }
        let c = Arc::new(c);
        self.cache.write().unwrap().entry((w.group, w.coords.clone())).or_insert(c).clone()
    }

    /// Character of the simple module `L(λ)` in characteristic p.
    pub fn simple_char(&self, w: &Weight) -> Result<Arc<FormalCharacter>> {
        self.check(w)?;
        if let Some(c) = self.lookup(w) {
            return Ok(c);
        }
        let c = if is_p_restricted(w) {
            self.simple_char_direct(w)?
        } else {
            let dec = steinberg_decompose(w)?;
            let mut acc = FormalCharacter::trivial(w.group);
            for (j, layer) in dec.layers.iter().enumerate() {
                if !layer.is_zero() {
                    acc = acc.tensor(&self.simple_char(layer)?.twist(j as u32))?;
                }
            }
            acc
        };
        Ok(self.store(w, c))
    }

    /// `L(λ)` computed without Steinberg's theorem, for any dominant λ.
    pub fn simple_char_direct(&self, w: &Weight) -> Result<FormalCharacter> {
        self.check(w)?;
        let rs = w.root_system();
        let f = field::PrimeField { p: w.group.p };
        let m = quotient::build(&f, &rs, &w.coords, &self.limits)?;
        dims_to_char(w.group, m.dims)
    }

    /// The characteristic-zero simple module (the Weyl module) by the same
    /// construction over Q.
    pub fn rational_char(&self, w: &Weight) -> Result<FormalCharacter> {
        self.check(w)?;
        let rs = w.root_system();
        let m = quotient::build(&field::Rationals, &rs, &w.coords, &self.limits)?;
        dims_to_char(w.group, m.dims)
    }

    pub fn freudenthal_char(&self, w: &Weight) -> Result<FormalCharacter> {
        self.check(w)?;
        let rs = w.root_system();
        let dom = freudenthal::freudenthal(&rs, &w.coords, self.limits.max_weights)?;
        FormalCharacter::from_dominant(w.group, dom)
    }

    pub fn wdeg(&self, w: &Weight) -> Result<u64> {
        Ok(self.simple_char(w)?.wdeg())
    }

    /// Composition factors of a module character, highest weights with multiplicity.
    pub fn decompose(&self, chi: &FormalCharacter) -> Result<Vec<(Weight, u64)>> {
        let rs = chi.group.root_system();
        let mut rest = chi.clone();
        let mut out: BTreeMap<Vec<i64>, u64> = BTreeMap::new();
        while !rest.is_zero() {
            let top = maximal_weights(&rest)
                .into_iter()
                .max_by(|a, b| rs.to_eps(&a.coords).cmp(&rs.to_eps(&b.coords)))
                .expect("nonzero character");
            let m = rest.mult(&top.coords);
            let s = self.simple_char(&top)?;
            rest = rest.sub_scaled(&s, m)?;
            *out.entry(top.coords).or_insert(0) += m;
        }
        Ok(out.into_iter().map(|(coords, m)| (Weight { group: chi.group, coords }, m)).collect())
    }

    pub fn gram_report(&self, lambda: &Weight, mu: &Weight) -> Result<GramReport> {
        self.check(lambda)?;
        let rs = lambda.root_system();
        words::gram_report(&rs, lambda.group.label(), lambda.group.p, &lambda.coords, &mu.coords, self.limits.max_words)
    }
}

fn dims_to_char(g: GroupId, dims: BTreeMap<Vec<i64>, usize>) -> Result<FormalCharacter> {
    let dom = dims
        .into_iter()
        .filter(|(k, _)| k.iter().all(|&a| a >= 0))
        .map(|(k, d)| (k, d as u64))
        .collect();
    FormalCharacter::from_dominant(g, dom)
}

pub fn simple_char(w: &Weight) -> Result<Arc<FormalCharacter>> {
    Oracle::global().simple_char(w)
}

pub fn wdeg_oracle(w: &Weight) -> Result<u64> {
    Oracle::global().wdeg(w)
}

pub fn decompose(chi: &FormalCharacter) -> Result<Vec<(Weight, u64)>> {
    Oracle::global().decompose(chi)
}

pub fn freudenthal_char(w: &Weight) -> Result<FormalCharacter> {
    Oracle::global().freudenthal_char(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chars::truncated_sym_char;
    use crate::rootsys::Family;

    fn w(f: Family, n: usize, p: u64, c: &[i64]) -> Weight {
        Weight::new(GroupId::new(f, n, p).unwrap(), c.to_vec()).unwrap()
    }

    #[test]
    fn adjoint_a2() {
        let o = Oracle::default();
        let v = o.freudenthal_char(&w(Family::A, 2, 3, &[1, 1])).unwrap();
        assert_eq!((v.dim(), v.mult(&[0, 0])), (8, 2));
        let l = o.simple_char(&w(Family::A, 2, 3, &[1, 1])).unwrap();
        assert_eq!(l.dim(), 7);
        assert_eq!(o.wdeg(&w(Family::A, 2, 3, &[1, 1])).unwrap(), 1);
        let l5 = o.simple_char(&w(Family::A, 2, 5, &[1, 1])).unwrap();
        assert_eq!(l5.dim(), 8);
    }

    #[test]
    fn truncated_symmetric_power() {
        let o = Oracle::default();
        let a4 = GroupId::new(Family::A, 4, 3).unwrap();
        let l = o.simple_char(&Weight::new(a4, vec![2, 0, 0, 0]).unwrap()).unwrap();
        assert_eq!(*l, truncated_sym_char(a4, 2).unwrap());
    }

    #[test]
    fn rational_matches_freudenthal() {
        let o = Oracle::default();
        for (f, n, c) in [
            (Family::A, 2, vec![2, 1]),
            (Family::B, 2, vec![1, 1]),
            (Family::C, 3, vec![0, 1, 0]),
            (Family::D, 4, vec![0, 1, 0, 0]),
            (Family::C, 2, vec![2, 0]),
        ] {
            let lam = w(f, n, 3, &c);
            assert_eq!(o.rational_char(&lam).unwrap(), o.freudenthal_char(&lam).unwrap(), "{f}{n} {c:?}");
        }
    }

    #[test]
    fn weyl_dimension_formula() {
        let o = Oracle::default();
        let lam = w(Family::B, 3, 3, &[1, 0, 1]);
        let rs = lam.root_system();
        assert_eq!(freudenthal::weyl_dimension_u128(&rs, &lam.coords).unwrap(), 48);
        assert_eq!(o.freudenthal_char(&lam).unwrap().dim(), 48);
    }

    #[test]
    fn steinberg_agrees_with_direct() {
        let o = Oracle::default();
        for (f, n, p, c) in [
            (Family::A, 2, 2, vec![2, 1]),
            (Family::A, 1, 3, vec![4]),
            (Family::C, 2, 2, vec![1, 2]),
            (Family::B, 2, 3, vec![3, 1]),
        ] {
            let lam = w(f, n, p, &c);
            assert_eq!(*o.simple_char(&lam).unwrap(), o.simple_char_direct(&lam).unwrap(), "{f}{n} {c:?}");
        }
    }

    #[test]
    fn gram_report_ranks() {
        let o = Oracle::default();
        let lam = w(Family::A, 2, 3, &[1, 1]);
        let r = o.gram_report(&lam, &w(Family::A, 2, 3, &[0, 0])).unwrap();
        assert_eq!(r.words.len(), 2);
        assert_eq!((r.rank_rational, r.rank_modular), (2, 1));
    }

    #[test]
    fn decomposition_of_tensor_square() {
        let o = Oracle::default();
        let a2 = GroupId::new(Family::A, 2, 5).unwrap();
        let v = o.simple_char(&Weight::fundamental(a2, 1)).unwrap();
        let parts = o.decompose(&v.tensor(&v).unwrap()).unwrap();
        let got: Vec<(Vec<i64>, u64)> = parts.into_iter().map(|(w, m)| (w.coords, m)).collect();
        assert_eq!(got, vec![(vec![0, 1], 1), (vec![2, 0], 1)]);
    }
}
