//! Validate a mixed bag of candidate gap lists and show what each
//! rejection reports, including the additive witness when closure fails.
//!
//! Run with: cargo run --example check_candidates

use weiergap::sequence::{validate, ValidationError};

fn main() {
    let candidates: &[(u32, &[u32])] = &[
        (3, &[1, 2, 3]),
        (3, &[1, 3, 5]),
        (3, &[1, 3, 4]),
        (3, &[1, 2]),
        (3, &[2, 3, 4]),
        (3, &[1, 3, 7]),
        (3, &[1, 4, 3]),
        (0, &[]),
    ];

    for &(genus, gaps) in candidates {
        let shown = format!("genus {genus}, {{{}}}", join(gaps));
        match validate(genus, gaps) {
            Ok(seq) => {
                println!(
                    "{shown}: valid, non-gaps {{{}}}",
                    join(seq.non_gaps().members())
                );
            }
            Err(e) => {
                println!("{shown}: invalid ({}): {e}", e.kind());
                if let ValidationError::ClosureViolation { gap, a, b } = e {
                    println!("    witness: {a} + {b} = {gap}, so {gap} cannot be a gap");
                }
            }
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
