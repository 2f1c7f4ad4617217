//! Descriptors of inductive systems with bounded weight multiplicities, and
//! the verdict on one that is not bounded.

use wdeg::inductive::{bwm_check, enumerate_bwm, BwmBudget, BwmVerdict, SystemDescriptor, WindowBounds};
use wdeg::oracle::Oracle;
use wdeg::rootsys::Family;

fn main() -> wdeg::Result<()> {
    let o = Oracle::default();
    for (f, p) in [(Family::B, 3), (Family::C, 3), (Family::D, 3), (Family::C, 2)] {
        let e = enumerate_bwm(f, p, 1, BwmBudget::default())?;
        print!("type {f} p={p}: {} descriptors:", e.count);
        for d in &e.descriptors {
            print!(" [{d}]");
        }
        println!();
    }

    let a = enumerate_bwm(Family::A, 3, 1, BwmBudget::default())?;
    println!("type A p=3 within the default budget: {} descriptors", a.count);

    let bad = SystemDescriptor::parse("S' * Fr(L)", Family::C, 2)?;
    match bwm_check(&o, &bad, WindowBounds::for_family(Family::C).with_max(4))? {
        BwmVerdict::Unbounded { certificate, .. } => {
            for pt in certificate {
                println!("{bad}: rank {} weight {} has wdeg at least {}", pt.rank, pt.weight, pt.lower_bound);
            }
        }
        other => println!("{bad}: {other:?}"),
    }
    Ok(())
}
