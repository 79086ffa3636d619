//! Built-in verification suite.
//!
//! Re-runs the load-bearing cross-checks in the field: oracle agreement
//! between the two enumeration engines, the structural and closure
//! invariants of every enumerated sequence, the ladder law suite, the
//! weight and formula identities, the forced-gap criterion against real
//! enumerations, and worker-count determinism. One line per check; the
//! suite keeps going after a failure so the full picture is visible.

use std::io::Write;

use crate::analysis::{
    classify, exceptional_sequence, hyperelliptic_sequence, implied_hyperelliptic_point_count,
    jenkins_forced_gap, point_count_bounds, weight, AnalysisError, Classification,
};
use crate::enumerate::{
    brute_force_enumerate, count_by_genus, tree_count, tree_walk, DEFAULT_BRUTE_FORCE_LIMIT,
};
use crate::ladder::DimensionLadder;
use crate::record::SequenceRecord;

#[derive(Clone, Copy, Debug)]
pub struct SelftestConfig {
    /// Exhaustive checks run over every genus up to this.
    pub max_genus: u32,
    /// Oracle comparisons stop at this genus even if max_genus is higher.
    pub brute_force_limit: u32,
    /// Worker counts 1, 2, and 8 are always compared; this one is used for
    /// the reference run.
    pub workers: usize,
}

impl Default for SelftestConfig {
    fn default() -> Self {
        SelftestConfig {
            max_genus: 8,
            brute_force_limit: DEFAULT_BRUTE_FORCE_LIMIT,
            workers: 1,
        }
    }
}

/// Run every check, writing one `ok`/`FAIL` line per check plus a summary
/// line. Returns true iff everything passed.
pub fn run_selftest(config: &SelftestConfig, out: &mut dyn Write) -> bool {
    type Check = (&'static str, fn(&SelftestConfig) -> Result<(), String>);
    const CHECKS: [Check; 9] = [
        ("oracle-equivalence", check_oracle_equivalence),
        ("structural-invariants", check_structural_invariants),
        ("ladder-laws", check_ladder_laws),
        ("weight-distribution", check_weight_distribution),
        ("forced-gap-cross-validation", check_forced_gaps),
        ("formula-identities", |_| check_formula_identities()),
        ("worker-determinism", check_worker_determinism),
        ("count-monotonicity", check_count_monotonicity),
        ("record-stability", check_record_stability),
    ];

    let mut failures = 0usize;
    for (name, check) in CHECKS {
        match check(config) {
            Ok(()) => {
                let _ = writeln!(out, "ok {name}");
            }
            Err(detail) => {
                failures += 1;
                let _ = writeln!(out, "FAIL {name}: {detail}");
            }
        }
    }

    if failures == 0 {
        let _ = writeln!(out, "selftest: all {} checks passed", CHECKS.len());
        true
    } else {
        let _ = writeln!(
            out,
            "selftest: {failures} of {} checks FAILED",
            CHECKS.len()
        );
        false
    }
}

fn check_oracle_equivalence(config: &SelftestConfig) -> Result<(), String> {
    for g in 0..=config.max_genus.min(config.brute_force_limit) {
        let tree: Vec<Vec<u32>> = tree_walk(g).map(|s| s.gaps().to_vec()).collect();
        let oracle =
            brute_force_enumerate(g, config.brute_force_limit).map_err(|e| e.to_string())?;
        let oracle: Vec<Vec<u32>> = oracle
            .sequences
            .expect("oracle materializes sequences")
            .iter()
            .map(|s| s.gaps().to_vec())
            .collect();
        if tree != oracle {
            return Err(format!(
                "genus {g}: tree search found {} sequences, oracle {}",
                tree.len(),
                oracle.len()
            ));
        }
    }
    Ok(())
}

fn check_structural_invariants(config: &SelftestConfig) -> Result<(), String> {
    for g in 0..=config.max_genus {
        for seq in tree_walk(g) {
            let gaps = seq.gaps();
            if gaps.len() != g as usize {
                return Err(format!("genus {g}: {:?} has wrong length", gaps));
            }
            if g >= 1 {
                if gaps[0] != 1 {
                    return Err(format!("genus {g}: {:?} does not start at 1", gaps));
                }
                if *gaps.last().unwrap() > 2 * g - 1 {
                    return Err(format!("genus {g}: {:?} exceeds 2g-1", gaps));
                }
                if gaps.windows(2).any(|w| w[0] >= w[1]) {
                    return Err(format!("genus {g}: {:?} not strictly increasing", gaps));
                }
            }
            let non_gaps = seq.non_gaps();
            if non_gaps.members().len() != g as usize {
                return Err(format!("genus {g}: {:?} complement size wrong", gaps));
            }
            if g >= 1 && !non_gaps.contains(2 * g) {
                return Err(format!("genus {g}: {:?} misses the member 2g", gaps));
            }
            if !non_gaps.is_closed_under_addition() {
                return Err(format!("genus {g}: {:?} complement not closed", gaps));
            }
            match (g, seq.first_non_gap()) {
                (0, None) => {}
                (_, Some(h)) if g >= 1 && 2 <= h && h <= g + 1 => {
                    let positive_weight = weight(&seq) > 0;
                    if (h <= g) != positive_weight {
                        return Err(format!(
                            "genus {g}: {:?} has first non-gap {h} but weight {}",
                            gaps,
                            weight(&seq)
                        ));
                    }
                }
                (_, h) => {
                    return Err(format!(
                        "genus {g}: {:?} first non-gap {h:?} out of range",
                        gaps
                    ))
                }
            }
        }
    }
    Ok(())
}

fn check_ladder_laws(config: &SelftestConfig) -> Result<(), String> {
    for g in 0..=config.max_genus {
        for seq in tree_walk(g) {
            let ladder = DimensionLadder::from_gaps(&seq);
            let report = ladder.verify();
            if let Some(fail) = report.first_failure() {
                return Err(format!(
                    "genus {g}: {:?} breaks {} at {:?}",
                    seq.gaps(),
                    fail.law,
                    fail.first_offending_index
                ));
            }
            match ladder.gap_sequence() {
                Ok(back) if back == seq => {}
                other => {
                    return Err(format!(
                        "genus {g}: ladder of {:?} inverts to {other:?}",
                        seq.gaps()
                    ))
                }
            }
            if g >= 1 {
                let h0 = ladder.h0();
                if h0[(2 * g - 1) as usize] != g as i64 || h0[(2 * g) as usize] != g as i64 + 1 {
                    return Err(format!(
                        "genus {g}: {:?} ladder endpoints wrong",
                        seq.gaps()
                    ));
                }
            }
        }
    }
    Ok(())
}

fn check_weight_distribution(config: &SelftestConfig) -> Result<(), String> {
    for g in 1..=config.max_genus {
        let max_weight = g as u64 * (g as u64 - 1) / 2;
        let mut top_weight = Vec::new();
        let mut weight_one = Vec::new();
        let mut label_counts = [0u64; 5];
        for seq in tree_walk(g) {
            let w = weight(&seq);
            if w > max_weight {
                return Err(format!(
                    "genus {g}: {:?} weight {w} over the cap",
                    seq.gaps()
                ));
            }
            if w == max_weight {
                top_weight.push(seq.gaps().to_vec());
            }
            if w == 1 {
                weight_one.push(seq.gaps().to_vec());
            }
            let label = classify(&seq).classification;
            label_counts[Classification::ALL
                .iter()
                .position(|&c| c == label)
                .unwrap()] += 1;
        }
        if g >= 2 {
            let hyper = hyperelliptic_sequence(g).map_err(|e| e.to_string())?;
            if top_weight != vec![hyper.gaps().to_vec()] {
                return Err(format!("genus {g}: weight cap attained by {top_weight:?}"));
            }
            let exceptional = exceptional_sequence(g).map_err(|e| e.to_string())?;
            if weight_one != vec![exceptional.gaps().to_vec()] {
                return Err(format!("genus {g}: weight 1 attained by {weight_one:?}"));
            }
            let expected_exceptional_label = if g == 2 { 0 } else { 1 };
            if label_counts[3] != expected_exceptional_label || label_counts[2] != 1 {
                return Err(format!("genus {g}: label counts {label_counts:?}"));
            }
        }
        if label_counts[1] != 1 || label_counts[0] != 0 {
            return Err(format!("genus {g}: label counts {label_counts:?}"));
        }
    }
    Ok(())
}

fn check_forced_gaps(config: &SelftestConfig) -> Result<(), String> {
    for g in 1..=config.max_genus {
        for seq in tree_walk(g) {
            let h = seq.first_non_gap().expect("positive genus");
            for k in 2..=2 * g - 1 {
                match jenkins_forced_gap(h, k, g) {
                    Ok(true) => {
                        if !seq.contains_gap(k) {
                            return Err(format!(
                                "genus {g}: {:?} has first non-gap {h} but {k} is not a gap",
                                seq.gaps()
                            ));
                        }
                    }
                    Ok(false) => {}
                    Err(AnalysisError::NotCoprime { .. }) => {}
                    Err(other) => return Err(other.to_string()),
                }
            }
        }
    }
    Ok(())
}

fn check_formula_identities() -> Result<(), String> {
    for g in 2..=1000u32 {
        let bounds = point_count_bounds(g).map_err(|e| e.to_string())?;
        let gg = g as u64;
        if bounds.lower != 2 * gg + 2
            || bounds.upper != (gg - 1) * gg * (gg + 1)
            || bounds.total_weight != bounds.upper
        {
            return Err(format!("genus {g}: bounds {bounds:?}"));
        }
        let implied = implied_hyperelliptic_point_count(g).map_err(|e| e.to_string())?;
        if implied != bounds.lower {
            return Err(format!("genus {g}: implied count {implied} != lower bound"));
        }
    }
    for g in 2..=50u32 {
        let gg = g as u64;
        let hyper = hyperelliptic_sequence(g).map_err(|e| e.to_string())?;
        if weight(&hyper) != gg * (gg - 1) / 2 {
            return Err(format!(
                "genus {g}: hyperelliptic weight {}",
                weight(&hyper)
            ));
        }
        let exceptional = exceptional_sequence(g).map_err(|e| e.to_string())?;
        if weight(&exceptional) != 1 {
            return Err(format!(
                "genus {g}: exceptional weight {}",
                weight(&exceptional)
            ));
        }
    }
    Ok(())
}

fn check_worker_determinism(config: &SelftestConfig) -> Result<(), String> {
    let reference = count_by_genus(config.max_genus, config.workers);
    for workers in [1usize, 2, 8] {
        let rows = count_by_genus(config.max_genus, workers);
        if rows != reference {
            return Err(format!("{workers} workers disagree with the reference run"));
        }
    }
    let single = tree_count(config.max_genus, 1);
    if single != reference.last().expect("non-empty table").count {
        return Err("single-genus count disagrees with the table".to_string());
    }
    Ok(())
}

fn check_count_monotonicity(config: &SelftestConfig) -> Result<(), String> {
    let rows = count_by_genus(config.max_genus, config.workers);
    for pair in rows.windows(2) {
        if pair[1].count < pair[0].count {
            return Err(format!(
                "count drops from {} at genus {} to {} at genus {}",
                pair[0].count, pair[0].genus, pair[1].count, pair[1].genus
            ));
        }
    }
    Ok(())
}

fn check_record_stability(config: &SelftestConfig) -> Result<(), String> {
    for g in 0..=config.max_genus.min(6) {
        for seq in tree_walk(g) {
            let record = SequenceRecord::from_sequence(&seq);
            let line = record.json_line();
            if line != record.json_line() {
                return Err(format!(
                    "genus {g}: serialization not stable for {:?}",
                    seq.gaps()
                ));
            }
            let back: SequenceRecord = serde_json::from_str(&line)
                .map_err(|e| format!("genus {g}: reparse failed: {e}"))?;
            if back != record {
                return Err(format!("genus {g}: round trip changed {:?}", seq.gaps()));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_suite_passes_and_reports() {
        let mut buf = Vec::new();
        let config = SelftestConfig {
            max_genus: 5,
            ..SelftestConfig::default()
        };
        assert!(run_selftest(&config, &mut buf));
        let text = String::from_utf8(buf).unwrap();
        assert!(text.contains("ok oracle-equivalence"));
        assert!(text.contains("ok worker-determinism"));
        assert!(text.contains("all 9 checks passed"));
        assert!(!text.contains("FAIL"));
    }
}
