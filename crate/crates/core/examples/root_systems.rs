//! Cartan data, positive roots and Weyl group sizes for the four classical families.

use wdeg::rootsys::{Family, GroupId};

fn main() {
    for (f, n) in [(Family::A, 3), (Family::B, 3), (Family::C, 3), (Family::D, 4)] {
        let g = GroupId::new(f, n, 3).unwrap();
        let rs = g.root_system();
        println!(
            "{}: {} positive roots, |W| = {}, highest root {:?}, rho {:?}",
            g.label(),
            rs.num_positive_roots(),
            rs.weyl_order(),
            rs.max_root().coeffs,
            rs.rho()
        );
        for row in &rs.cartan {
            println!("    {row:?}");
        }
    }

    let c3 = GroupId::new(Family::C, 3, 3).unwrap().root_system();
    let orbit = c3.orbit(&[0, 1, 0]);
    println!("W-orbit of ω2 in C3 has {} elements", orbit.len());
}
