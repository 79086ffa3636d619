//! Walk the full catalog of gap sequences for one genus and tabulate
//! what the library knows about each entry.
//!
//! Run with: cargo run --example catalog_by_genus

use weiergap::analysis::classify;
use weiergap::enumerate::tree_walk;

fn main() {
    let genus = 4;
    println!("gap sequences of genus {genus}, lexicographic order:");
    println!(
        "{:<14} {:<14} {:>6}  classification",
        "gaps", "non-gaps", "weight"
    );

    for seq in tree_walk(genus) {
        let report = classify(&seq);
        let gaps = join(seq.gaps());
        let non_gaps = join(seq.non_gaps().members());
        println!(
            "{:<14} {:<14} {:>6}  {}",
            gaps, non_gaps, report.weight, report.classification
        );
    }

    // the first non-gap is the smallest pole order the point supports
    println!();
    for seq in tree_walk(genus) {
        if let Some(h) = seq.first_non_gap() {
            println!(
                "{{{}}} admits a function with a pole of order {h}",
                join(seq.gaps())
            );
        }
    }
}

fn join(values: &[u32]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}
