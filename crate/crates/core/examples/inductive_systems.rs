//! Inductive systems: realising descriptors level by level, checking closure
//! under restriction, and generating a system from per-rank seeds.

use std::collections::BTreeMap;

use wdeg::inductive::{check, generate, realize, Level, SystemDescriptor, WindowBounds};
use wdeg::oracle::Oracle;
use wdeg::rootsys::Family;

fn main() -> wdeg::Result<()> {
    let o = Oracle::default();
    let bounds = WindowBounds::for_family(Family::C).with_max(6);
    let d = SystemDescriptor::parse("L * Fr(S)", Family::C, 3)?;
    let w = realize(&o, &d, bounds)?;
    for (n, level) in &w.levels {
        println!("{d} rank {n}: {level:?}");
    }
    let c = check(&o, &w);
    println!("closure holds: {}, δ = {:?}", c.closure_ok, c.delta);

    // the system generated by ω_{⌈t/2⌉} at each rank t is the fundamental one
    let gens: BTreeMap<usize, Level> = (2..=7)
        .map(|t| {
            let mut v = vec![0; t];
            v[(t + 1) / 2 - 1] = 1;
            (t, Level::from([v]))
        })
        .collect();
    let g = generate(&o, Family::A, 3, &gens, WindowBounds::for_family(Family::A).with_max(7))?;
    for n in &g.verified {
        println!("generated rank {n}: {:?}", g.levels[n]);
    }
    Ok(())
}
