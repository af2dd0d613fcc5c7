//! Explores flip-graph balls around glued triangulations of surfaces that
//! have infinitely many arcs.

use arcflip::complexes::ball;
use arcflip::GluedTriangulation;

const TORUS: &str = "surface 1,1,0;1
T 0: 0 1 2
T 1: 3 4 5
T 2: 6 7 8
G: 1~3
G: 2~6
G: 4~7
G: 5~8
";

const ANNULUS: &str = "surface 0,2,0;2,1
T 0: 0 1 2
T 1: 3 4 5
T 2: 6 7 8
G: 2~6
G: 4~7
G: 5~8
";

fn main() -> arcflip::Result<()> {
    for (name, text) in [("torus", TORUS), ("annulus", ANNULUS)] {
        let t: GluedTriangulation = text.parse()?;
        for radius in 0..=3 {
            let b = ball(&t, radius)?;
            let mut degrees = b.graph.degrees();
            degrees.sort_unstable();
            println!(
                "{name} r{radius}: {} triangulations, {} flips, degrees {:?}",
                b.graph.vertices.len(),
                b.graph.edges.len(),
                degrees
            );
        }
    }
    Ok(())
}
