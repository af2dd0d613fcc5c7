//! Compares automorphism groups of arc complexes with the dihedral action.

use arcflip::symmetry::{flipgraph_aut_check, rigidity_report, SearchLimits};
use arcflip::CiliatedSurface;

fn main() -> arcflip::Result<()> {
    let mut surfaces: Vec<CiliatedSurface> = (4..=8).map(CiliatedSurface::polygon).collect::<Result<_, _>>()?;
    surfaces.extend((1..=4).map(CiliatedSurface::punctured_polygon).collect::<Result<Vec<_>, _>>()?);
    println!("{:<10} {:>4} {:>5} {:>6} {:>6} {:>8}", "surface", "dim", "|Aut|", "|Mod|", "kernel", "|Aut F|");
    for s in surfaces {
        let r = rigidity_report(&s, SearchLimits::default())?;
        let aut_f = flipgraph_aut_check(&s, SearchLimits::default()).map(|f| f.aut_f.to_string()).unwrap_or("-".into());
        println!("{:<10} {:>4} {:>5} {:>6} {:>6} {:>8}", s.to_string(), r.dim, r.aut_a, r.mod_image, r.kernel_size, aut_f);
    }
    Ok(())
}
