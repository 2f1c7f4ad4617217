//! Integer Gram matrices on divided-power words in the simple lowering operators.
//!
//! A word `f_{i_1}^{(a_1)} ... f_{i_k}^{(a_k)} v^+` with adjacent indices distinct
//! is a vector of the Verma module over Z. The contravariant form on such words
//! is computed exactly; its rank over Q is the multiplicity in the Weyl module
//! and its rank over F_p the multiplicity in the simple module.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsys::RootSystem;

use super::field::{binom, modular_rank, rational_rank};

type Word = Vec<(usize, u32)>;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GramReport {
    pub group: String,
    pub p: u64,
    pub lambda: Vec<i64>,
    pub mu: Vec<i64>,
    pub words: Vec<String>,
    pub gram: Vec<Vec<i128>>,
    pub rank_rational: usize,
    pub rank_modular: usize,
}

pub(crate) struct WordForm<'a> {
    rs: &'a RootSystem,
    lambda: Vec<i64>,
    memo: HashMap<(usize, u32, Word), Vec<(Word, i128)>>,
}

fn checked(a: i128, b: i128) -> Result<i128> {
    a.checked_mul(b).ok_or_else(|| Error::Refused("integer overflow in word Gram matrix".into()))
}

impl<'a> WordForm<'a> {
    pub fn new(rs: &'a RootSystem, lambda: &[i64]) -> Self {
        WordForm { rs, lambda: lambda.to_vec(), memo: HashMap::new() }
    }

    fn weight(&self, w: &[(usize, u32)]) -> Vec<i64> {
        let mut v = self.lambda.clone();
        for &(i, a) in w {
            for (x, r) in v.iter_mut().zip(&self.rs.cartan[i]) {
                *x -= a as i64 * r;
            }
        }
        v
    }

    /// `f_i^{(a)} · w`, merging with a leading `f_i`.
    fn prepend(i: usize, a: u32, w: &[(usize, u32)]) -> (Word, i128) {
        if a == 0 {
            return (w.to_vec(), 1);
        }
        match w.first() {
            Some(&(j, b)) if j == i => {
                let mut out = vec![(i, a + b)];
                out.extend_from_slice(&w[1..]);
                (out, binom((a + b) as i64, a))
            }
            _ => {
                let mut out = vec![(i, a)];
                out.extend_from_slice(w);
                (out, 1)
            }
        }
    }

    fn apply_e(&mut self, i: usize, a: u32, w: &[(usize, u32)]) -> Result<Vec<(Word, i128)>> {
        if a == 0 {
            return Ok(vec![(w.to_vec(), 1)]);
        }
        if w.is_empty() {
            return Ok(vec![]);
        }
        let key = (i, a, w.to_vec());
        if let Some(v) = self.memo.get(&key) {
            return Ok(v.clone());
        }
        let (j, b) = w[0];
        let rest = &w[1..];
        let mut acc: HashMap<Word, i128> = HashMap::new();
        if j != i {
            for (u, c) in self.apply_e(i, a, rest)? {
                let (v, k) = Self::prepend(j, b, &u);
                *acc.entry(v).or_insert(0) += checked(c, k)?;
            }
        } else {
            let h = self.weight(rest)[i];
            for t in 0..=a.min(b) {
                let coef = binom(h + a as i64 - b as i64, t);
                if coef == 0 {
                    continue;
                }
                for (u, c) in self.apply_e(i, a - t, rest)? {
                    let (v, k) = Self::prepend(i, b - t, &u);
                    *acc.entry(v).or_insert(0) += checked(checked(coef, c)?, k)?;
                }
            }
        }
        let out: Vec<(Word, i128)> = acc.into_iter().filter(|(_, c)| *c != 0).collect();
        self.memo.insert(key, out.clone());
        Ok(out)
    }

    pub fn pair(&mut self, x: &[(usize, u32)], y: &[(usize, u32)]) -> Result<i128> {
        let mut vec: HashMap<Word, i128> = HashMap::from([(y.to_vec(), 1)]);
        for &(i, a) in x {
            let mut next: HashMap<Word, i128> = HashMap::new();
            for (w, c) in vec {
                for (u, k) in self.apply_e(i, a, &w)? {
                    *next.entry(u).or_insert(0) += checked(c, k)?;
                }
            }
            next.retain(|_, c| *c != 0);
            vec = next;
        }
        Ok(vec.get(&Vec::new()).copied().unwrap_or(0))
    }
}

/// All normalised words of root-lattice weight `k` (coefficients in simple roots).
pub fn words_of_weight(k: &[i64], limit: usize) -> Result<Vec<Word>> {
    fn go(left: &mut Vec<i64>, last: Option<usize>, cur: &mut Word, out: &mut Vec<Word>, limit: usize) -> bool {
        if left.iter().all(|&x| x == 0) {
            out.push(cur.clone());
            return out.len() <= limit;
        }
        for i in 0..left.len() {
            if Some(i) == last || left[i] == 0 {
                continue;
            }
            for a in 1..=left[i] {
                left[i] -= a;
                cur.push((i, a as u32));
                let ok = go(left, Some(i), cur, out, limit);
                cur.pop();
                left[i] += a;
                if !ok {
                    return false;
                }
            }
        }
        true
    }
    let mut out = vec![];
    if !go(&mut k.to_vec(), None, &mut vec![], &mut out, limit) {
        return Err(Error::Refused(format!("more than {limit} words")));
    }
    Ok(out)
}

pub fn format_word(w: &[(usize, u32)]) -> String {
    if w.is_empty() {
        return "v+".into();
    }
    let parts: Vec<String> = w.iter().map(|(i, a)| format!("f{}^({})", i + 1, a)).collect();
    format!("{} v+", parts.join(" "))
}

pub fn gram_report(rs: &RootSystem, label: String, p: u64, lambda: &[i64], mu: &[i64], limit: usize) -> Result<GramReport> {
    let diff: Vec<i64> = lambda.iter().zip(mu).map(|(a, b)| a - b).collect();
    let k = rs
        .root_coords(&diff)
        .filter(|c| c.iter().all(|&x| x >= 0))
        .ok_or_else(|| Error::InvalidWeight("μ is not below λ".into()))?;
    let words = words_of_weight(&k, limit)?;
    let mut form = WordForm::new(rs, lambda);
    let mut gram = vec![vec![0i128; words.len()]; words.len()];
    for r in 0..words.len() {
        for c in 0..words.len() {
            gram[r][c] = form.pair(&words[r], &words[c])?;
        }
    }
    for r in 0..words.len() {
        for c in 0..r {
            if gram[r][c] != gram[c][r] {
                return Err(Error::Internal("asymmetric word Gram matrix".into()));
            }
        }
    }
    Ok(GramReport {
        group: label,
        p,
        lambda: lambda.to_vec(),
        mu: mu.to_vec(),
        words: words.iter().map(|w| format_word(w)).collect(),
        rank_rational: rational_rank(&gram),
        rank_modular: modular_rank(&gram, p),
        gram,
    })
}
