//! Validates glued triangulation files and reports what is wrong with them.
//!
//! cargo run --example glued_validate -- tests/fixtures/*.tri

use arcflip::GluedTriangulation;

fn main() {
    let paths: Vec<String> = std::env::args().skip(1).collect();
    if paths.is_empty() {
        eprintln!("usage: glued_validate FILE...");
        std::process::exit(2);
    }
    for path in paths {
        let parsed = std::fs::read_to_string(&path)
            .map_err(|e| e.to_string())
            .and_then(|text| text.parse::<GluedTriangulation>().map_err(|e| e.to_string()));
        match parsed {
            Err(e) => println!("{path}: {e}"),
            Ok(t) => {
                let report = t.validate();
                if report.ok {
                    println!("{path}: ok, {} flippable arcs", t.flippable_sides().len());
                } else {
                    println!("{path}: {} violations", report.violations.len());
                    for v in &report.violations {
                        println!("  {v:?}");
                    }
                }
            }
        }
    }
}
