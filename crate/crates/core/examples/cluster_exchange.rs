//! B-matrices of polygon triangulations and the flip/mutation check.

use arcflip::arcs::Arc;
use arcflip::cluster::{b_matrix, exchange_check, mutate};
use arcflip::{CiliatedSurface, ExplicitTriangulation};

fn main() -> arcflip::Result<()> {
    let hexagon = CiliatedSurface::polygon(6)?;
    let fan = ExplicitTriangulation::fan(&hexagon, None)?;
    let seed = b_matrix(&fan)?;
    print!("fan\n{seed}");
    let mutated = mutate(&seed, 1)?;
    print!("mutated at 1\n{mutated}");
    let flipped = fan.flip(&Arc::Chord(0, 3))?;
    print!("flipped C(0,3)\n{}", b_matrix(&flipped)?);

    for n in 4..=9 {
        let r = exchange_check(&CiliatedSurface::polygon(n)?)?;
        println!("{n}-gon: {}/{} flip edges agree with mutation", r.verified, r.edges);
    }
    Ok(())
}
