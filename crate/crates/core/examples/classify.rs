//! Prints the class and counting data of a few surfaces.
//!
//! cargo run --example classify -- "0,1,1;2" "1,1,0;1"

use arcflip::CiliatedSurface;

fn main() {
    let mut args: Vec<String> = std::env::args().skip(1).collect();
    if args.is_empty() {
        args = ["0,1,0;3", "0,1,0;6", "0,1,1;1", "0,1,1;2", "0,2,0;1,1", "1,1,0;1"].map(String::from).to_vec();
    }
    for text in args {
        let s: CiliatedSurface = match text.parse() {
            Ok(s) => s,
            Err(e) => {
                eprintln!("{text}: {e}");
                continue;
            }
        };
        let arcs = s.arc_count().map_or_else(|e| e.kind().to_string(), |n| n.to_string());
        println!(
            "{s:<12} {:<16} arcs {arcs:<14} dim {:<3} finite {}",
            format!("{:?}", s.classify().tag),
            s.complex_dim(),
            s.is_finite_type()
        );
    }
}
