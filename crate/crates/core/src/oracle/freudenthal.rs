//! Characteristic-zero characters: Freudenthal's recursion and Weyl's dimension formula.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use num::{BigUint, One, ToPrimitive};

use crate::error::{Error, Result};
use crate::rootsys::RootSystem;

/// Dominant weights `μ ≤ λ`.
pub fn dominant_weights_below(rs: &RootSystem, lambda: &[i64]) -> BTreeSet<Vec<i64>> {
    let mut seen = BTreeSet::new();
    seen.insert(lambda.to_vec());
    let mut queue = VecDeque::from([lambda.to_vec()]);
    while let Some(mu) = queue.pop_front() {
        for root in &rs.positive_roots {
            let nu: Vec<i64> = mu.iter().zip(&root.fw).map(|(a, b)| a - b).collect();
            if RootSystem::is_dominant(&nu) && !seen.contains(&nu) {
                seen.insert(nu.clone());
                queue.push_back(nu);
            }
        }
    }
    seen
}

/// Dominant weight multiplicities of the Weyl module `V(λ)`.
pub fn freudenthal(rs: &RootSystem, lambda: &[i64], max_weights: usize) -> Result<BTreeMap<Vec<i64>, u64>> {
    let doms = dominant_weights_below(rs, lambda);
    if doms.len() > max_weights {
        return Err(Error::Refused(format!("{} dominant weights exceeds {max_weights}", doms.len())));
    }
    let height = |mu: &Vec<i64>| -> i64 {
        let diff: Vec<i64> = lambda.iter().zip(mu).map(|(a, b)| a - b).collect();
        rs.root_coords(&diff).expect("same coset").iter().sum()
    };
    let mut order: Vec<Vec<i64>> = doms.iter().cloned().collect();
    order.sort_by_key(height);
    let rho = rs.rho();
    let lr: Vec<i64> = lambda.iter().zip(&rho).map(|(a, b)| a + b).collect();
    let norm_lr = rs.ip(&lr, &lr);
    let mut mult: BTreeMap<Vec<i64>, u64> = BTreeMap::new();
    mult.insert(lambda.to_vec(), 1);
    for mu in order.iter().skip(1) {
        let mut num: i128 = 0;
        for root in &rs.positive_roots {
            let mut nu = mu.clone();
            loop {
                for (x, r) in nu.iter_mut().zip(&root.fw) {
                    *x += r;
                }
                let d = rs.dominant_rep(&nu);
                let Some(&m) = mult.get(&d) else { break };
                num += m as i128 * rs.ip(&nu, &root.fw) as i128;
            }
        }
        let mr: Vec<i64> = mu.iter().zip(&rho).map(|(a, b)| a + b).collect();
        let den = (norm_lr - rs.ip(&mr, &mr)) as i128;
        if den <= 0 || (2 * num) % den != 0 {
            return Err(Error::Internal(format!("non-integral Freudenthal multiplicity at {mu:?}")));
        }
        mult.insert(mu.clone(), (2 * num / den) as u64);
    }
    Ok(mult)
}

/// `dim V(λ)` by Weyl's formula.
pub fn weyl_dimension(rs: &RootSystem, lambda: &[i64]) -> BigUint {
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    let lr: Vec<i64> = lambda.iter().map(|a| a + 1).collect();
    let rho = rs.rho();
    for r in 0..rs.positive_roots.len() {
        num *= BigUint::from(rs.pairing(&lr, r) as u64);
        den *= BigUint::from(rs.pairing(&rho, r) as u64);
    }
    num / den
}

pub fn weyl_dimension_u128(rs: &RootSystem, lambda: &[i64]) -> Option<u128> {
    weyl_dimension(rs, lambda).to_u128()
}
