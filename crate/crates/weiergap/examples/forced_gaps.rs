//! The forced-gap criterion for coprime pole orders, cross-checked
//! against the actual catalog.
//!
//! Run with: cargo run --example forced_gaps

use weiergap::analysis::jenkins_forced_gap;
use weiergap::enumerate::tree_walk;

fn main() {
    // for first non-gap h and coprime candidate k, the inequality
    // 2g > (h - 1)(k - 1) forces k to stay a gap; it starts holding once
    // the genus is large enough
    println!("smallest genus at which k is forced, per coprime pair (h, k):");
    for h in 2..=5u32 {
        for k in (h + 1)..=9u32 {
            if gcd(h, k) != 1 {
                continue;
            }
            let threshold = (1..)
                .find(|&g| jenkins_forced_gap(h, k, g).expect("preconditions hold"))
                .unwrap();
            println!("  h = {h}, k = {k}: forced for genus >= {threshold}");
        }
    }

    // cross-check one verdict exhaustively: at genus 5 with first
    // non-gap 3, the order 4 must be a gap (2*5 > 2*3), and indeed every
    // matching catalog entry has it
    let (h, k, genus) = (3u32, 4u32, 5u32);
    assert!(jenkins_forced_gap(h, k, genus).unwrap());
    let mut matching = 0;
    for seq in tree_walk(genus) {
        if seq.first_non_gap() != Some(h) {
            continue;
        }
        matching += 1;
        assert!(seq.contains_gap(k), "criterion contradicted by {:?}", seq);
    }
    println!();
    println!(
        "verified: all {matching} genus-{genus} sequences with first non-gap {h} keep {k} as a gap"
    );
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
