//! Composition factors of restrictions to smaller classical subgroups, and
//! the packaged branching rules.

use wdeg::branching::{irr_k, levi_restrict_check, verify_lemma, LemmaParams, ALL_LEMMAS};
use wdeg::oracle::Oracle;
use wdeg::rootsys::{Family, GroupId};
use wdeg::weights::Weight;

fn main() -> wdeg::Result<()> {
    let o = Oracle::default();
    let c3 = GroupId::new(Family::C, 3, 3)?;
    let w = Weight::fundamental(c3, 3);
    println!("C3 p=3 {w} restricted to C2: {:?}", irr_k(&o, &w, 2)?);

    for id in ALL_LEMMAS {
        let params = match id.name() {
            "fundamental-step" => "group=A4,p=3,i=2",
            "fundamental-deep" => "group=A5,p=3,i=3,k=2",
            "truncated-deep" => "group=A5,p=3,i=2,c=1,k=1",
            "truncated-levi" => "group=A4,p=3,i=1,c=1,m=2",
            "symmetric-power" => "group=A4,p=5,a=3,k=2",
            "natural-step" => "group=C3,p=3",
            "oscillator-step" => "group=C3,p=5",
            "spin-step" => "group=D4,p=3",
            "spin-natural-step" => "group=C3,p=2",
            _ => "group=B3,p=3,w=[1,0,1],k=2",
        };
        let r = verify_lemma(&o, id, &LemmaParams::parse(params)?)?;
        println!("{:<18} {params:<28} {}", id.name(), if r.pass { "holds" } else { "FAILS" });
    }

    let a4 = GroupId::new(Family::A, 4, 2)?;
    let r = levi_restrict_check(&o, a4, 1, 2, 1)?;
    println!("Levi A1 × A2 inside A4, p=2: {} factors, match {}", r.computed.len(), r.pass);
    Ok(())
}
