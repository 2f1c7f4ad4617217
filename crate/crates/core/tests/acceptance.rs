//! End-to-end acceptance checks. Runs without the libtest harness so that the
//! one-line verdicts always reach the output.

use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use num::BigUint;
use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use wdeg::branching::{levi_restrict_check, verify_lemma, LemmaId, LemmaParams};
use wdeg::chars::FormalCharacter;
use wdeg::classify::{in_omega, in_omega_p, kleshchev_f, wdeg_verdict};
use wdeg::inductive::{
    bwm_check, check, enumerate_bwm, generate, realize_atom, Atom, BwmBudget, BwmVerdict, ClosureStatus,
    InductiveWindow, Level, SystemDescriptor, WindowBounds,
};
use wdeg::oracle::freudenthal::weyl_dimension;
use wdeg::oracle::Oracle;
use wdeg::rootsys::{Family, GroupId};
use wdeg::weights::{dual_weight, is_p_restricted, min_pdeg, pdeg, steinberg_decompose, Weight};

type Outcome = Result<String, String>;

fn group(f: Family, n: usize, p: u64) -> GroupId {
    GroupId::new(f, n, p).unwrap()
}

/// Dominant weights with every coefficient below `bound` and coefficient sum at most `sum`.
fn small_weights(g: GroupId, bound: i64, sum: i64) -> Vec<Weight> {
    let mut out = vec![];
    let mut cur = vec![0i64; g.rank];
    fn go(i: usize, left: i64, bound: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if i == cur.len() {
            out.push(cur.clone());
            return;
        }
        for a in 0..bound.min(left + 1) {
            cur[i] = a;
            go(i + 1, left - a, bound, cur, out);
        }
        cur[i] = 0;
    }
    let mut raw = vec![];
    go(0, sum, bound, &mut cur, &mut raw);
    for c in raw {
        out.push(Weight::new(g, c).unwrap());
    }
    out
}

fn multiplicity_free_equivalence(o: &Oracle) -> Outcome {
    let groups = [
        group(Family::A, 4, 2),
        group(Family::A, 4, 3),
        group(Family::B, 3, 3),
        group(Family::C, 3, 3),
        group(Family::D, 4, 3),
        group(Family::C, 3, 2),
    ];
    let mut checked = 0;
    let mut bad = vec![];
    for g in groups {
        for w in small_weights(g, g.p as i64, 2) {
            let free = o.wdeg(&w).map_err(|e| e.to_string())? == 1;
            if free != in_omega(&w).unwrap() {
                bad.push(format!("{} p={} {w}: wdeg==1 is {free}", g.label(), g.p));
            }
            checked += 1;
        }
    }
    if bad.is_empty() {
        Ok(format!("{checked} weights"))
    } else {
        Err(format!("{} of {checked} disagree: {}", bad.len(), bad.join("; ")))
    }
}

fn run_lemma(o: &Oracle, id: LemmaId, p: LemmaParams, bad: &mut Vec<String>, count: &mut usize) {
    *count += 1;
    match verify_lemma(o, id, &p) {
        Ok(r) if r.pass => {}
        Ok(r) => bad.push(format!("{id} {:?}: expected {} computed {}", r.params, r.expected, r.computed)),
        Err(e) => bad.push(format!("{id}: {e}")),
    }
}

fn branching_suite(o: &Oracle) -> Outcome {
    let mut bad = vec![];
    let mut count = 0;
    for p in [2u64, 3] {
        for n in 2..=5usize {
            let g = group(Family::A, n, p);
            for i in 1..=n as i64 {
                run_lemma(o, LemmaId::FundamentalStep, LemmaParams::new(g).set("i", i), &mut bad, &mut count);
            }
            for k in 1..n as i64 {
                for i in k + 1..=n as i64 - k + 1 {
                    let params = LemmaParams::new(g).set("i", i).set("k", k);
                    run_lemma(o, LemmaId::FundamentalDeep, params, &mut bad, &mut count);
                }
            }
        }
        for n in 3..=6usize {
            let g = group(Family::A, n, p);
            for k in 1..n as i64 {
                for i in k + 1..n as i64 - k {
                    for c in 0..p as i64 {
                        let params = LemmaParams::new(g).set("i", i).set("c", c).set("k", k);
                        run_lemma(o, LemmaId::TruncatedDeep, params, &mut bad, &mut count);
                    }
                }
            }
        }
    }
    for (n, p) in [(4usize, 5u64), (4, 3), (5, 5)] {
        let g = group(Family::A, n, p);
        for a in 1..p as i64 {
            for k in 1..n as i64 {
                let params = LemmaParams::new(g).set("a", a).set("k", k);
                run_lemma(o, LemmaId::SymmetricPower, params, &mut bad, &mut count);
            }
        }
    }
    for g in [group(Family::B, 3, 3), group(Family::C, 3, 3), group(Family::C, 3, 2), group(Family::D, 5, 3)] {
        run_lemma(o, LemmaId::NaturalStep, LemmaParams::new(g), &mut bad, &mut count);
    }
    for p in [3u64, 5] {
        for j in [1, 2] {
            let params = LemmaParams::new(group(Family::C, 3, p)).set("j", j);
            run_lemma(o, LemmaId::OscillatorStep, params, &mut bad, &mut count);
        }
    }
    for g in [group(Family::B, 3, 3), group(Family::D, 4, 3), group(Family::C, 3, 2)] {
        run_lemma(o, LemmaId::SpinStep, LemmaParams::new(g), &mut bad, &mut count);
    }
    run_lemma(o, LemmaId::SpinNaturalStep, LemmaParams::new(group(Family::C, 3, 2)), &mut bad, &mut count);
    for n in [3usize, 4] {
        for p in [2u64, 3] {
            let g = group(Family::A, n, p);
            for m in 0..n {
                for i in 0..=n as i64 {
                    for c in 0..p as i64 {
                        count += 1;
                        match levi_restrict_check(o, g, m, i, c) {
                            Ok(r) if r.pass => {}
                            Ok(r) => bad.push(format!("levi A{n} p={p} m={m} i={i} c={c}: {:?} vs {:?}", r.expected, r.computed)),
                            Err(e) => bad.push(format!("levi A{n} p={p} m={m} i={i} c={c}: {e}")),
                        }
                    }
                }
            }
        }
    }
    if bad.is_empty() {
        Ok(format!("{count} instances"))
    } else {
        Err(format!("{} of {count} failed: {}", bad.len(), bad.join("; ")))
    }
}

fn twisted_layers_char(o: &Oracle, w: &Weight) -> Result<FormalCharacter, String> {
    let dec = steinberg_decompose(w).map_err(|e| e.to_string())?;
    let mut acc = FormalCharacter::trivial(w.group);
    for (k, l) in dec.layers.iter().enumerate() {
        let c = o.simple_char_direct(l).map_err(|e| e.to_string())?.twist(k as u32);
        acc = acc.tensor(&c).map_err(|e| e.to_string())?;
    }
    Ok(acc)
}

fn steinberg_consistency(o: &Oracle, rng: &mut ChaCha8Rng) -> Outcome {
    let groups = [group(Family::A, 2, 2), group(Family::A, 3, 2), group(Family::B, 3, 3), group(Family::C, 3, 2)];
    let mut count = 0;
    let mut bad = vec![];
    for g in groups {
        let mut seen = BTreeSet::new();
        let mut tries = 0;
        while seen.len() < 10 {
            tries += 1;
            assert!(tries < 10_000, "could not sample weights for {}", g.label());
            let coords: Vec<i64> = (0..g.rank).map(|_| rng.random_range(0..=g.p as i64 + 1)).collect();
            let w = Weight::new(g, coords.clone()).unwrap();
            if is_p_restricted(&w) || w.coefficient_sum() > 5 || !seen.insert(coords) {
                continue;
            }
            let direct = o.simple_char_direct(&w).map_err(|e| format!("{} {w}: {e}", g.label()))?;
            let layered = twisted_layers_char(o, &w)?;
            if direct != layered {
                bad.push(format!("{} p={} {w}", g.label(), g.p));
            }
            count += 1;
        }
    }
    if bad.is_empty() {
        Ok(format!("{count} weights"))
    } else {
        Err(format!("mismatch at {}", bad.join("; ")))
    }
}

fn factorial(d: u64) -> u64 {
    (1..=d).product()
}

fn polynomial_degree_bounds(o: &Oracle) -> Outcome {
    let mut bounds_checked = 0;
    let mut seq_checked = 0;
    let mut bad = vec![];
    for p in [2u64, 3, 5] {
        // bounds at each rank, over restricted weights outside the multiplicity-free set
        for n in [4usize, 5, 6] {
            let g = group(Family::A, n, p);
            for w in small_weights(g, p as i64, 4) {
                let d = min_pdeg(&w).unwrap();
                if d > 4 || in_omega_p(&w).unwrap() {
                    continue;
                }
                let v = o.wdeg(&w).map_err(|e| e.to_string())?;
                if (v as i64) < d as i64 - 2 || v > factorial(d) {
                    bad.push(format!("A{n} p={p} {w}: wdeg {v}, d {d}"));
                }
                bounds_checked += 1;
            }
        }
        // the value depends only on the coefficient sequence
        let g4 = group(Family::A, 4, p);
        for w in small_weights(g4, p as i64, 4) {
            if pdeg(&w).unwrap() > 4 {
                continue;
            }
            let mut values = BTreeMap::new();
            for n in [4usize, 5, 6] {
                let g = group(Family::A, n, p);
                let mut c = w.coords.clone();
                c.resize(n, 0);
                let left = Weight::new(g, c).unwrap();
                let right = dual_weight(&left).unwrap();
                values.insert((n, 'L'), o.wdeg(&left).map_err(|e| e.to_string())?);
                values.insert((n, 'R'), o.wdeg(&right).map_err(|e| e.to_string())?);
            }
            let distinct: BTreeSet<u64> = values.values().copied().collect();
            if distinct.len() != 1 {
                bad.push(format!("p={p} sequence {w}: {values:?}"));
            }
            seq_checked += 1;
        }
    }
    if bad.is_empty() {
        Ok(format!("{bounds_checked} bound checks, {seq_checked} sequences rank-independent"))
    } else {
        Err(bad.join("; "))
    }
}

fn kleshchev_bound(o: &Oracle, rng: &mut ChaCha8Rng) -> Outcome {
    let mut seen = BTreeSet::new();
    let mut bad = vec![];
    let mut tries = 0;
    while seen.len() < 20 {
        tries += 1;
        assert!(tries < 100_000, "could not sample weights");
        let n = *[4usize, 5].choose(rng).unwrap();
        let p = *[2u64, 3, 5].choose(rng).unwrap();
        let g = group(Family::A, n, p);
        let coords: Vec<i64> = (0..n).map(|_| rng.random_range(0..p.min(4) as i64)).collect();
        let w = Weight::new(g, coords.clone()).unwrap();
        let supp = w.support();
        if w.coefficient_sum() > 3 || supp.len() < 2 || !is_p_restricted(&w) || !seen.insert((n, p, coords)) {
            continue;
        }
        let (j, k) = (supp[0] as u64, *supp.last().unwrap() as u64);
        let v = o.wdeg(&w).map_err(|e| e.to_string())?;
        if v < k - j {
            bad.push(format!("A{n} p={p} {w}: wdeg {v} < {}", k - j));
        }
    }
    let mut sequences = 0;
    for mask in 0u32..(1 << 12) {
        let u: Vec<u64> = (0..12).filter(|b| mask >> b & 1 == 1).map(|b| b as u64 + 1).collect();
        if u.len() < 2 {
            continue;
        }
        sequences += 1;
        if kleshchev_f(&u) < (u[u.len() - 1] - u[0]) as u128 {
            bad.push(format!("f{u:?} below the spread"));
        }
    }
    if bad.is_empty() {
        Ok(format!("20 weights, {sequences} sequences"))
    } else {
        Err(bad.join("; "))
    }
}

fn monotonicity(o: &Oracle, rng: &mut ChaCha8Rng) -> Outcome {
    let groups = [
        group(Family::A, 3, 2),
        group(Family::A, 4, 3),
        group(Family::B, 3, 3),
        group(Family::B, 4, 5),
        group(Family::C, 3, 2),
        group(Family::C, 3, 3),
        group(Family::D, 4, 3),
        group(Family::D, 5, 2),
    ];
    let mut seen = BTreeSet::new();
    let mut bad = vec![];
    let mut tries = 0;
    while seen.len() < 50 {
        tries += 1;
        assert!(tries < 100_000, "could not sample pairs");
        let g = *groups.choose(rng).unwrap();
        let coords: Vec<i64> = (0..g.rank).map(|_| rng.random_range(0..3)).collect();
        let k_min = match g.family {
            Family::B => 2,
            Family::D => 3,
            _ => 1,
        };
        let k = rng.random_range(k_min..g.rank);
        let w = Weight::new(g, coords.clone()).unwrap();
        if w.coefficient_sum() > 3 || !seen.insert((g, coords.clone(), k)) {
            continue;
        }
        for id in [LemmaId::WdegMonotone, LemmaId::DeltaMonotone] {
            let params = LemmaParams::new(g).with_weight(coords.clone()).set("k", k as i64);
            match verify_lemma(o, id, &params) {
                Ok(r) if r.pass => {}
                Ok(r) => bad.push(format!("{id} {} {w} k={k}: {}", g.label(), r.computed)),
                Err(e) => bad.push(format!("{id} {} {w} k={k}: {e}", g.label())),
            }
        }
    }
    if bad.is_empty() {
        Ok("50 pairs, both properties".into())
    } else {
        Err(bad.join("; "))
    }
}

fn closure_holds(o: &Oracle, w: &InductiveWindow) -> Result<usize, String> {
    let c = check(o, w);
    let mut holds = 0;
    for (n, s) in &c.closure {
        let both = w.verified.contains(n) && w.verified.contains(&(n + 1));
        match s {
            ClosureStatus::Holds => holds += 1,
            ClosureStatus::Fails => return Err(format!("{}: closure fails at rank {n}", w.provenance)),
            ClosureStatus::Unverified if both => return Err(format!("{}: rank {n} not checkable", w.provenance)),
            ClosureStatus::Unverified => {}
        }
    }
    if holds == 0 {
        return Err(format!("{}: no verified closure step", w.provenance));
    }
    Ok(holds)
}

fn seed_generators(p: u64, top: usize, coefficient: i64) -> BTreeMap<usize, Level> {
    (2..=top)
        .map(|t| {
            let mut v = vec![0; t];
            v[(t + 1) / 2 - 1] = coefficient.min(p as i64 - 1);
            (t, Level::from([v]))
        })
        .collect()
}

fn inductive_closure(o: &Oracle) -> Outcome {
    let mut cases: Vec<(Family, u64, Atom)> = vec![];
    for (f, p) in [(Family::A, 3u64), (Family::B, 3), (Family::C, 3), (Family::D, 3), (Family::C, 2)] {
        cases.push((f, p, Atom::O));
        if f != Family::A {
            cases.push((f, p, Atom::L));
        }
    }
    for p in [2u64, 3] {
        cases.push((Family::A, p, Atom::F));
        cases.push((Family::A, p, Atom::T));
    }
    for f in [Family::B, Family::C, Family::D] {
        cases.push((f, 3, Atom::S));
    }
    cases.push((Family::C, 2, Atom::SPrime));
    cases.push((Family::C, 2, Atom::Q));
    cases.push((Family::A, 3, Atom::CL(vec![0, 1])));
    cases.push((Family::A, 3, Atom::CL(vec![2])));
    let mut steps = 0;
    for (f, p, a) in &cases {
        let w = realize_atom(o, *f, *p, a, WindowBounds::for_family(*f).with_max(8)).map_err(|e| e.to_string())?;
        steps += closure_holds(o, &w)?;
    }
    let mut generated = vec![];
    for p in [2u64, 3] {
        let b = WindowBounds::for_family(Family::A).with_max(8);
        for (atom, coefficient) in [(Atom::F, 1), (Atom::T, p as i64 - 1)] {
            let gens = seed_generators(p, 8, coefficient);
            let w = generate(o, Family::A, p, &gens, b).map_err(|e| e.to_string())?;
            let target = realize_atom(o, Family::A, p, &atom, b).map_err(|e| e.to_string())?;
            if w.verified.is_empty() {
                return Err(format!("{atom} p={p}: no stable level"));
            }
            for n in &w.verified {
                if w.levels[n] != target.levels[n] {
                    return Err(format!("{atom} p={p}: rank {n} differs"));
                }
            }
            generated.push(format!("{atom}(p={p}) ranks {:?}", w.verified));
        }
    }
    Ok(format!("{} windows, {steps} closure steps; generated {}", cases.len(), generated.join(", ")))
}

fn bwm_catalogs(o: &Oracle) -> Outcome {
    let mut notes = vec![];
    for (f, p, want) in [(Family::B, 3u64, 9usize), (Family::D, 3, 9), (Family::C, 3, 9), (Family::C, 2, 12)] {
        let e = enumerate_bwm(f, p, 1, BwmBudget::default()).map_err(|e| e.to_string())?;
        if e.count != want {
            return Err(format!("type {f} p={p}: {} descriptors, expected {want}", e.count));
        }
        let cap = 1u64 << (e.twist_depth + 1);
        for d in &e.descriptors {
            let v = bwm_check(o, d, WindowBounds::for_family(f).with_max(8)).map_err(|e| e.to_string())?;
            match v {
                BwmVerdict::Bounded { max_wdeg, .. } if max_wdeg <= cap => {}
                other => return Err(format!("{d} (type {f} p={p}): {other:?}")),
            }
        }
        notes.push(format!("{f}(p={p}) {}", e.count));
    }
    // the forbidden pair S' then L: weights 2ω_1 + ω_n
    let c3 = Weight::new(group(Family::C, 3, 2), vec![2, 0, 1]).unwrap();
    let small = o.wdeg(&c3).map_err(|e| e.to_string())?;
    if small <= 1 {
        return Err(format!("C3 {c3}: wdeg {small}"));
    }
    let lower = |n: usize| -> BigUint {
        let mut c = vec![0; n];
        c[0] = 2;
        c[n - 1] = 1;
        wdeg_verdict(&Weight::new(group(Family::C, n, 2), c).unwrap()).unwrap().best_lower()
    };
    let sampled: Vec<BigUint> = [8usize, 12, 16, 20].iter().map(|&n| lower(n)).collect();
    if !sampled.windows(2).all(|w| w[0] < w[1]) {
        return Err(format!("lower bounds at n = 8, 12, 16, 20 not increasing: {sampled:?}"));
    }
    let all: Vec<BigUint> = (8..=20).map(lower).collect();
    if !all.windows(2).all(|w| w[0] <= w[1]) {
        return Err(format!("lower bounds decrease somewhere in 8..=20: {all:?}"));
    }
    let d = SystemDescriptor::parse("S' * Fr(L)", Family::C, 2).unwrap();
    match bwm_check(o, &d, WindowBounds::for_family(Family::C).with_max(4)).map_err(|e| e.to_string())? {
        BwmVerdict::Unbounded { .. } => {}
        other => return Err(format!("{d}: {other:?}")),
    }
    Ok(format!(
        "counts {}; C3 wdeg {small}; lower bounds {}",
        notes.join(", "),
        sampled.iter().map(|b| b.to_string()).collect::<Vec<_>>().join(" < ")
    ))
}

fn oracle_self_consistency(o: &Oracle, rng: &mut ChaCha8Rng) -> Outcome {
    let groups = [
        group(Family::A, 2, 3),
        group(Family::A, 3, 3),
        group(Family::A, 4, 3),
        group(Family::B, 2, 3),
        group(Family::B, 3, 3),
        group(Family::C, 3, 3),
        group(Family::C, 4, 3),
        group(Family::D, 4, 3),
    ];
    let mut seen = BTreeSet::new();
    let mut tries = 0;
    let mut spaces = 0;
    while seen.len() < 30 {
        tries += 1;
        assert!(tries < 100_000, "could not sample weights");
        let g = *groups.choose(rng).unwrap();
        let coords: Vec<i64> = (0..g.rank).map(|_| rng.random_range(0..3)).collect();
        let w = Weight::new(g, coords.clone()).unwrap();
        if w.coefficient_sum() > 3 || !seen.insert((g, coords)) {
            continue;
        }
        let fr = o.freudenthal_char(&w).map_err(|e| e.to_string())?;
        let weyl = weyl_dimension(&w.root_system(), &w.coords);
        if BigUint::from(fr.dim()) != weyl {
            return Err(format!("{} {w}: Freudenthal dim {} vs Weyl {weyl}", g.label(), fr.dim()));
        }
        let rational = o.rational_char(&w).map_err(|e| e.to_string())?;
        if rational != fr {
            return Err(format!("{} {w}: rational Gram ranks differ from Freudenthal", g.label()));
        }
        spaces += fr.dominant().len();
        // the word form gives the same rank on the shallowest dominant weight spaces
        let rs = w.root_system();
        let depth = |mu: &Vec<i64>| -> i64 {
            let diff: Vec<i64> = w.coords.iter().zip(mu).map(|(a, b)| a - b).collect();
            rs.root_coords(&diff).expect("root lattice").iter().sum()
        };
        let mut shallow: Vec<&Vec<i64>> = fr.dominant().keys().collect();
        shallow.sort_by_key(|mu| depth(mu));
        if w.coefficient_sum() <= 2 {
            for mu in shallow.into_iter().take(3) {
                let m = Weight::new(g, mu.clone()).unwrap();
                let r = o.gram_report(&w, &m).map_err(|e| e.to_string())?;
                if r.rank_rational as u64 != fr.mult(mu) {
                    return Err(format!("{} {w} at {m}: word rank {} vs {}", g.label(), r.rank_rational, fr.mult(mu)));
                }
            }
        }
    }
    let g = group(Family::A, 3, 23);
    let mut large = 0;
    for w in small_weights(g, 23, 2) {
        let s = o.simple_char(&w).map_err(|e| e.to_string())?;
        if *s != o.freudenthal_char(&w).map_err(|e| e.to_string())? {
            return Err(format!("A3 p=23 {w}: modular and Freudenthal differ"));
        }
        large += 1;
    }
    Ok(format!("30 weights, {spaces} dominant weight spaces; {large} weights at p = 23"))
}

fn twisted_multiplicativity(o: &Oracle, rng: &mut ChaCha8Rng) -> Outcome {
    let groups = [group(Family::A, 2, 2), group(Family::A, 3, 3), group(Family::B, 3, 3), group(Family::C, 3, 2)];
    let mut seen = BTreeSet::new();
    let mut tries = 0;
    let mut lines = vec![];
    while seen.len() < 10 {
        tries += 1;
        assert!(tries < 100_000, "could not sample pairs");
        let g = *groups.choose(rng).unwrap();
        let s: u32 = rng.random_range(1..=2);
        let a: Vec<i64> = (0..g.rank).map(|_| rng.random_range(0..g.p as i64)).collect();
        let b: Vec<i64> = (0..g.rank).map(|_| rng.random_range(0..g.p as i64)).collect();
        let n1 = Weight::new(g, a.clone()).unwrap();
        let n2 = Weight::new(g, b.clone()).unwrap();
        if n1.is_zero() || n2.is_zero() || n1.delta().unwrap() as u128 >= (g.p as u128).pow(s) {
            continue;
        }
        if !seen.insert((g, a, b, s)) {
            continue;
        }
        let c1 = o.simple_char(&n1).map_err(|e| e.to_string())?;
        let c2 = o.simple_char(&n2).map_err(|e| e.to_string())?;
        let product = c1.tensor(&c2.twist(s)).map_err(|e| e.to_string())?;
        if product.wdeg() != c1.wdeg() * c2.wdeg() {
            return Err(format!(
                "{} N1={n1} N2={n2} s={s}: {} vs {}·{}",
                g.label(),
                product.wdeg(),
                c1.wdeg(),
                c2.wdeg()
            ));
        }
        lines.push(format!("{}:{}", g.label(), product.wdeg()));
    }
    Ok(format!("10 pairs ({})", lines.join(" ")))
}

fn main() {
    let oracle = Oracle::default();
    let rng = |seed: u64| ChaCha8Rng::seed_from_u64(seed);
    let criteria: Vec<(&str, Box<dyn FnMut() -> Outcome + '_>)> = vec![
        ("multiplicity-free equivalence", Box::new(|| multiplicity_free_equivalence(&oracle))),
        ("branching rules", Box::new(|| branching_suite(&oracle))),
        ("Steinberg consistency", Box::new(|| steinberg_consistency(&oracle, &mut rng(3)))),
        ("polynomial degree bounds", Box::new(|| polynomial_degree_bounds(&oracle))),
        ("support spread bound", Box::new(|| kleshchev_bound(&oracle, &mut rng(4)))),
        ("restriction monotonicity", Box::new(|| monotonicity(&oracle, &mut rng(5)))),
        ("inductive closure and generation", Box::new(|| inductive_closure(&oracle))),
        ("bounded multiplicity catalogs", Box::new(|| bwm_catalogs(&oracle))),
        ("oracle self-consistency", Box::new(|| oracle_self_consistency(&oracle, &mut rng(6)))),
        ("twisted tensor multiplicativity", Box::new(|| twisted_multiplicativity(&oracle, &mut rng(7)))),
    ];
    let mut failed = 0;
    for (i, (name, mut f)) in criteria.into_iter().enumerate() {
        let t = Instant::now();
        let outcome = f();
        let secs = t.elapsed().as_secs_f64();
        match outcome {
            Ok(s) => println!("criterion {:>2} {name}: PASS ({s}) [{secs:.1}s]", i + 1),
            Err(s) => {
                failed += 1;
                println!("criterion {:>2} {name}: FAIL ({s}) [{secs:.1}s]", i + 1);
            }
        }
    }
    println!("acceptance: {} of 10 passed", 10 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
