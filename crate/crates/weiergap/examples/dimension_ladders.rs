//! Turn gap sequences into dimension ladders, verify the ladder laws,
//! and recover the gaps back from a ladder.
//!
//! Run with: cargo run --example dimension_ladders

use weiergap::enumerate::tree_walk;
use weiergap::ladder::DimensionLadder;

fn main() {
    let genus = 3;
    for seq in tree_walk(genus) {
        let ladder = DimensionLadder::from_gaps(&seq);
        println!("gaps {{{}}}", join(seq.gaps()));
        println!("  h0 = {:?}", ladder.h0());
        println!("  i  = {:?}", ladder.i());
        let report = ladder.verify();
        match report.first_failure() {
            None => println!("  all {} laws hold", report.checks.len()),
            Some(check) => println!("  FAILS {}", check.law),
        }

        // the ladder remembers the gaps: climbs happen exactly at non-gaps
        let recovered = ladder.gap_sequence().expect("round trip");
        assert_eq!(recovered.gaps(), seq.gaps());
    }

    // a hand-built ladder that breaks a law: the speciality never reaches
    // zero, so the vanishing law (and with it the identity) fails
    println!();
    let h0 = vec![1, 1, 1, 2, 2, 3, 4];
    let i = vec![3, 2, 1, 1, 1, 1, 1];
    let broken = DimensionLadder::from_parts(3, h0, i).expect("shapes are right");
    for check in &broken.verify().checks {
        let verdict = if check.pass { "pass" } else { "FAIL" };
        match check.first_offending_index {
            Some(n) => println!(
                "{:<24} {verdict} (first offense at n = {n})",
                check.law.label()
            ),
            None => println!("{:<24} {verdict}", check.law.label()),
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
