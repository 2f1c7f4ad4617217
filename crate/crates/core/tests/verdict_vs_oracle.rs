//! Proven bounds against exact oracle values on small groups.

use num::BigUint;
use wdeg::classify::{twist_separates, wdeg_verdict};
use wdeg::oracle::Oracle;
use wdeg::rootsys::{Family, GroupId};
use wdeg::weights::Weight;

fn weights(g: GroupId, bound: i64, max_sum: i64) -> Vec<Weight> {
    let mut out = vec![vec![]];
    for _ in 0..g.rank {
        out = out
            .into_iter()
            .flat_map(|v: Vec<i64>| {
                (0..bound).map(move |a| {
                    let mut v = v.clone();
                    v.push(a);
                    v
                })
            })
            .collect();
    }
    out.into_iter()
        .filter(|c| c.iter().sum::<i64>() <= max_sum)
        .map(|c| Weight::new(g, c).unwrap())
        .collect()
}

const GROUPS: [(Family, usize, u64); 14] = [
    (Family::A, 2, 2),
    (Family::A, 3, 2),
    (Family::A, 3, 3),
    (Family::A, 4, 2),
    (Family::B, 2, 3),
    (Family::B, 3, 3),
    (Family::C, 2, 2),
    (Family::C, 3, 2),
    (Family::C, 3, 3),
    (Family::D, 4, 3),
    (Family::A, 5, 2),
    (Family::A, 5, 3),
    (Family::C, 4, 2),
    (Family::B, 4, 3),
];

#[test]
fn verdict_interval_contains_oracle_value() {
    let o = Oracle::default();
    for (f, n, p) in GROUPS {
        let g = GroupId::new(f, n, p).unwrap();
        for w in weights(g, 2 * p as i64, 3) {
            let exact = BigUint::from(o.wdeg(&w).unwrap());
            let v = wdeg_verdict(&w).unwrap();
            for b in &v.lower {
                assert!(b.value <= exact, "{f}{n} p={p} {w}: lower {} > {exact} ({:?})", b.value, b.source);
            }
            for b in &v.upper {
                assert!(b.value >= exact, "{f}{n} p={p} {w}: upper {} < {exact} ({:?})", b.value, b.source);
            }
            if let Some(e) = &v.exact {
                assert_eq!(*e, exact, "{f}{n} p={p} {w}");
            }
        }
    }
}

#[test]
fn twisted_tensor_multiplies_under_the_separation_rule() {
    let o = Oracle::default();
    for (f, n, p) in GROUPS {
        let g = GroupId::new(f, n, p).unwrap();
        let restricted = weights(g, p as i64, 2);
        for a in &restricted {
            let da = a.delta().unwrap() as u128;
            if a.is_zero() || !twist_separates(f, p, da, 1) {
                continue;
            }
            for b in restricted.iter().filter(|b| !b.is_zero()) {
                let c: Vec<i64> = a.coords.iter().zip(&b.coords).map(|(x, y)| x + p as i64 * y).collect();
                let m = o.wdeg(&Weight::new(g, c).unwrap()).unwrap();
                assert_eq!(m, o.wdeg(a).unwrap() * o.wdeg(b).unwrap(), "{f}{n} p={p} {a} and {b}");
            }
        }
    }
}

#[test]
fn plain_delta_condition_fails_for_symplectic_groups() {
    // δ(ω3) = 1 < 2, yet the weight multiplicities do not multiply
    let o = Oracle::default();
    let g = GroupId::new(Family::C, 3, 2).unwrap();
    let n1 = Weight::new(g, vec![0, 0, 1]).unwrap();
    assert_eq!(n1.delta().unwrap(), 1);
    let product = o.wdeg(&Weight::new(g, vec![2, 0, 1]).unwrap()).unwrap();
    let factors = o.wdeg(&n1).unwrap() * o.wdeg(&Weight::new(g, vec![1, 0, 0]).unwrap()).unwrap();
    assert_eq!((product, factors), (3, 1));
}
