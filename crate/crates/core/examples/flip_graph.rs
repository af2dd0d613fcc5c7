//! Writes the flip graph of a surface as DOT.
//!
//! cargo run --example flip_graph -- "0,1,0;6" | dot -Tsvg > hexagon.svg

use arcflip::complexes::build_flip_graph;
use arcflip::CiliatedSurface;

fn main() -> arcflip::Result<()> {
    let text = std::env::args().nth(1).unwrap_or_else(|| "0,1,0;6".into());
    let surface: CiliatedSurface = text.parse()?;
    let bound = surface.is_annulus_one_one().then_some(3);
    let g = build_flip_graph(&surface, bound)?;
    eprintln!("{} vertices, {} edges, diameter {:?}", g.vertices.len(), g.edges.len(), g.diameter());
    print!("{}", g.to_dot());
    Ok(())
}
