//! Weight extremes per genus: the flat ordinary sequence, the maximal
//! hyperelliptic one, and the near-flat exceptional shape, plus the
//! point-count bounds they feed.
//!
//! Run with: cargo run --example weights_and_extremes

use weiergap::analysis::{
    classify, exceptional_sequence, hyperelliptic_sequence, implied_hyperelliptic_point_count,
    point_count_bounds, weight,
};
use weiergap::enumerate::tree_walk;

fn main() {
    for genus in 2..=8u32 {
        let cap = u64::from(genus) * u64::from(genus - 1) / 2;
        let hyper = hyperelliptic_sequence(genus).expect("genus >= 2");
        let excep = exceptional_sequence(genus).expect("genus >= 2");
        println!(
            "genus {genus}: weight cap {cap}, hyperelliptic {{{}}} has weight {}, exceptional {{{}}} has weight {}",
            join(hyper.gaps()),
            weight(&hyper),
            join(excep.gaps()),
            weight(&excep)
        );

        // the cap is attained only by the hyperelliptic sequence
        let top: Vec<_> = tree_walk(genus).filter(|seq| weight(seq) == cap).collect();
        assert_eq!(top.len(), 1);
        assert_eq!(top[0].gaps(), hyper.gaps());
    }

    println!();
    for genus in [2u32, 6, 50, 1000] {
        let bounds = point_count_bounds(genus).expect("genus >= 2");
        let implied = implied_hyperelliptic_point_count(genus).expect("genus >= 2");
        println!(
            "genus {genus}: between {} and {} Weierstrass points, total weight budget {}; a hyperelliptic curve has exactly {implied}",
            bounds.lower, bounds.upper, bounds.total_weight
        );
    }

    // classification of one sequence end to end
    println!();
    let seq = hyperelliptic_sequence(2).expect("genus 2");
    let report = classify(&seq);
    println!(
        "genus 2 {{{}}}: classification {}, also matches the exceptional shape: {}",
        join(seq.gaps()),
        report.classification,
        report.also_exceptional
    );
}

fn join(values: &[u32]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}
