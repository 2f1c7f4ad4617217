//! The modular oracle: simple characters in characteristic p set against
//! characteristic zero.

use wdeg::oracle::freudenthal::weyl_dimension;
use wdeg::oracle::Oracle;
use wdeg::rootsys::{Family, GroupId};
use wdeg::weights::Weight;

fn main() -> wdeg::Result<()> {
    let o = Oracle::default();
    for p in [2u64, 3, 5, 7] {
        let w = Weight::new(GroupId::new(Family::A, 2, p)?, vec![1, 1])?;
        let l = o.simple_char(&w)?;
        println!("A2 adjoint, p={p}: dim {}, zero weight mult {}", l.dim(), l.mult(&[0, 0]));
    }

    let w = Weight::new(GroupId::new(Family::C, 3, 3)?, vec![1, 1, 0])?;
    let modular = o.simple_char(&w)?;
    let zero = o.freudenthal_char(&w)?;
    println!(
        "C3 {w}: dim {} in characteristic 3, {} in characteristic 0 (Weyl formula {})",
        modular.dim(),
        zero.dim(),
        weyl_dimension(&w.root_system(), &w.coords)
    );
    for (mu, m) in zero.dominant() {
        println!("    {mu:?}: {} vs {m}", modular.mult(mu));
    }

    // rank of the contravariant form on one weight space
    let lam = Weight::new(GroupId::new(Family::A, 2, 3)?, vec![1, 1])?;
    let mu = Weight::new(lam.group, vec![0, 0])?;
    let r = o.gram_report(&lam, &mu)?;
    println!("Gram ranks at the zero weight of A2 adjoint: rational {}, mod 3 {}", r.rank_rational, r.rank_modular);
    Ok(())
}
