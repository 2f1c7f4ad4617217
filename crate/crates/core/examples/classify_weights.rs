//! Multiplicity-freeness and proven weight-degree bounds, compared with the
//! exact value where the oracle can compute it.

use wdeg::classify::{classify, wdeg_verdict};
use wdeg::oracle::Oracle;
use wdeg::rootsys::{Family, GroupId};
use wdeg::weights::Weight;

fn main() -> wdeg::Result<()> {
    let o = Oracle::default();
    let cases = [
        (Family::A, 4, 3, vec![0, 1, 0, 0]),
        (Family::A, 4, 3, vec![1, 0, 0, 1]),
        (Family::A, 5, 2, vec![1, 1, 0, 0, 0]),
        (Family::C, 3, 3, vec![0, 0, 1]),
        (Family::C, 3, 2, vec![2, 0, 1]),
        (Family::B, 3, 3, vec![0, 0, 1]),
    ];
    for (f, n, p, c) in cases {
        let w = Weight::new(GroupId::new(f, n, p)?, c)?;
        let cl = classify(&w)?;
        let v = wdeg_verdict(&w)?;
        let upper = v.best_upper().map_or("none".to_string(), |u| u.to_string());
        println!(
            "{}{n} p={p} {w}: multiplicity free {}, bounds [{}, {upper}], oracle {}",
            f,
            cl.omega,
            v.best_lower(),
            o.wdeg(&w)?
        );
    }

    // the JSON form the CLI prints
    let w = Weight::new(GroupId::new(Family::A, 20, 3)?, {
        let mut c = vec![0; 20];
        c[1] = 1;
        c[17] = 1;
        c
    })?;
    println!("{}", serde_json::to_string_pretty(&wdeg_verdict(&w)?).unwrap());
    Ok(())
}
