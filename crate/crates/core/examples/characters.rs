//! Formal characters of the named modules and the ring operations on them.

use wdeg::chars::{natural_char, oscillator_chars, spin_char, truncated_sym_char, wedge_char};
use wdeg::oracle::Oracle;
use wdeg::rootsys::{Family, GroupId};

fn main() -> wdeg::Result<()> {
    let a3 = GroupId::new(Family::A, 3, 3)?;
    let v = natural_char(a3)?;
    let w2 = wedge_char(a3, 2)?;
    let s2 = truncated_sym_char(a3, 2)?;
    println!("A3: dim V {}, dim Λ²V {}, dim truncated S²V {}", v.dim(), w2.dim(), s2.dim());

    let vv = v.tensor(&v)?;
    println!("V ⊗ V has dim {} and weight degree {}", vv.dim(), vv.wdeg());
    let o = Oracle::default();
    for (w, m) in o.decompose(&vv)? {
        println!("    L({w}) × {m}");
    }

    println!("V twisted once: dominant weights {:?}", v.twist(1).dominant().keys().collect::<Vec<_>>());
    println!("restricted to A1: {:?}", v.restrict(1)?.dominant());

    let b3 = GroupId::new(Family::B, 3, 3)?;
    println!("B3 spin module: dim {}", spin_char(b3, None)?.dim());
    let c3 = GroupId::new(Family::C, 3, 5)?;
    let (odd, even) = oscillator_chars(c3)?;
    println!("C3 p=5 oscillator halves: dims {} and {}", odd.dim(), even.dim());
    Ok(())
}
