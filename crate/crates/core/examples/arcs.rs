//! Lists the arcs of a once-punctured polygon and their intersection numbers.

use arcflip::arcs::ArcModel;
use arcflip::CiliatedSurface;

fn main() -> arcflip::Result<()> {
    let n = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(3);
    let surface = CiliatedSurface::punctured_polygon(n)?;
    let model = ArcModel::new(&surface, None)?;
    let arcs = model.arcs()?;
    println!("{surface}: {} arcs", arcs.len());
    print!("{:>10}", "");
    for b in &arcs {
        print!("{:>10}", b.to_string());
    }
    println!();
    for a in &arcs {
        print!("{:>10}", a.to_string());
        for b in &arcs {
            print!("{:>10}", model.iota(a, b)?);
        }
        println!();
    }
    Ok(())
}
