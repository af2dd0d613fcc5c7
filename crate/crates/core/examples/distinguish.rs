//! Certifies that arc complexes tell small surfaces apart.

use arcflip::symmetry::{distinguish, SearchLimits};
use arcflip::CiliatedSurface;

fn main() -> arcflip::Result<()> {
    let pairs = [("0,1,0;6", "0,1,1;3"), ("0,1,0;4", "0,1,1;1"), ("0,1,0;5", "0,1,1;2"), ("0,1,0;5", "0,1,0;5")];
    for (a, b) in pairs {
        let (a, b): (CiliatedSurface, CiliatedSurface) = (a.parse()?, b.parse()?);
        let r = distinguish(&a, &b, SearchLimits::default())?;
        println!("{a} vs {b}: isomorphic {} via {:?}", r.isomorphic, r.certificate);
        println!("  {:?}", r.invariants_a);
        println!("  {:?}", r.invariants_b);
    }
    Ok(())
}
