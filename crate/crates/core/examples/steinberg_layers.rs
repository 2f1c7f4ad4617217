//! Steinberg decomposition of a weight into p-restricted layers, and the
//! matching factorisation of its simple character.

use wdeg::oracle::Oracle;
use wdeg::rootsys::{Family, GroupId};
use wdeg::weights::{steinberg_decompose, Weight};

fn main() -> wdeg::Result<()> {
    let g = GroupId::new(Family::A, 2, 3)?;
    let w = Weight::new(g, vec![4, 7])?;
    let dec = steinberg_decompose(&w)?;
    for (k, layer) in dec.layers.iter().enumerate() {
        println!("layer {k}: {layer}");
    }

    let o = Oracle::default();
    let via_layers = o.simple_char(&w)?;
    let direct = o.simple_char_direct(&w)?;
    println!("dim L({w}) = {}, wdeg {}", via_layers.dim(), via_layers.wdeg());
    println!("tensor of twisted layers equals direct construction: {}", *via_layers == direct);
    println!("δ({w}) = {}", w.delta()?);
    Ok(())
}
