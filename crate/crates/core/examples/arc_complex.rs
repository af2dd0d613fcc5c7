//! Builds arc complexes of polygons and prints their f-vectors and Euler
//! characteristics.

use arcflip::complexes::{build_arc_complex, stats};
use arcflip::CiliatedSurface;

fn main() -> arcflip::Result<()> {
    for n in 4..=9 {
        let c = build_arc_complex(&CiliatedSurface::polygon(n)?, None)?;
        let s = stats(&c)?;
        println!("{n}-gon  dim {}  f {:?}  chi {}", s.dim, s.f_vector, s.chi);
    }
    for n in 1..=4 {
        let c = build_arc_complex(&CiliatedSurface::punctured_polygon(n)?, None)?;
        println!("punctured {n}-gon  vertices {}  facets {}  chi {}", c.vertices().len(), c.facets().len(), c.euler_characteristic());
    }
    Ok(())
}
