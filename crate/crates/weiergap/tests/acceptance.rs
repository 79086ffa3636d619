//! End-to-end acceptance gate. Runs without the libtest harness so each
//! criterion prints exactly one pass/fail line; the process exits
//! nonzero if any criterion fails.

use std::process::Command;
use std::time::{Duration, Instant};

use weiergap::analysis::{
    classify, exceptional_sequence, hyperelliptic_sequence, implied_hyperelliptic_point_count,
    jenkins_forced_gap, point_count_bounds, weight, Classification,
};
use weiergap::enumerate::{brute_force_enumerate, tree_enumerate, tree_walk};
use weiergap::ladder::DimensionLadder;
use weiergap::sequence::validate;

type Criterion = fn() -> Result<(), String>;

fn main() {
    let criteria: &[(&str, Criterion)] = &[
        ("1 genus-3-reproduction", genus_3_reproduction),
        ("2 oracle-equivalence", oracle_equivalence),
        ("3 ladder-law-suite", ladder_law_suite),
        ("4 structural-invariants", structural_invariants),
        ("5 weight-formulas", weight_formulas),
        ("6 forced-gap-cross-validation", forced_gap_cross_validation),
        ("7 genus-6-example", genus_6_example),
        ("8 determinism", determinism),
    ];

    let mut failures = 0usize;
    for (name, criterion) in criteria {
        match criterion() {
            Ok(()) => println!("acceptance {name}: PASS"),
            Err(msg) => {
                failures += 1;
                println!("acceptance {name}: FAIL ({msg})");
            }
        }
    }

    if failures > 0 {
        println!(
            "acceptance: {failures} of {} criteria failed",
            criteria.len()
        );
        std::process::exit(1);
    }
    println!("acceptance: all {} criteria passed", criteria.len());
}

fn cli() -> Command {
    Command::new(env!("CARGO_BIN_EXE_weiergap"))
}

fn run_cli(args: &[&str]) -> Result<(i32, String), String> {
    let output = cli()
        .args(args)
        .output()
        .map_err(|e| format!("failed to spawn the binary: {e}"))?;
    let code = output.status.code().unwrap_or(-1);
    let stdout = String::from_utf8(output.stdout).map_err(|e| format!("non-UTF-8 output: {e}"))?;
    Ok((code, stdout))
}

fn budget(name: &str, elapsed: Duration, limit: Duration) -> Result<(), String> {
    if elapsed <= limit {
        Ok(())
    } else {
        Err(format!("{name} took {elapsed:.2?}, budget {limit:.2?}"))
    }
}

/// `enumerate --genus 3` emits exactly the four known gap sequences with
/// their non-gap sets, under one second.
fn genus_3_reproduction() -> Result<(), String> {
    let started = Instant::now();
    let (code, stdout) = run_cli(&["enumerate", "--genus", "3"])?;
    let elapsed = started.elapsed();
    if code != 0 {
        return Err(format!("enumerate exited with {code}"));
    }

    let expected: [(&[u32], &[u32]); 4] = [
        (&[1, 2, 3], &[4, 5, 6]),
        (&[1, 2, 4], &[3, 5, 6]),
        (&[1, 2, 5], &[3, 4, 6]),
        (&[1, 3, 5], &[2, 4, 6]),
    ];
    let lines: Vec<&str> = stdout.lines().collect();
    if lines.len() != expected.len() {
        return Err(format!("expected 4 records, got {}", lines.len()));
    }
    for (line, (gaps, non_gaps)) in lines.iter().zip(expected) {
        let value: serde_json::Value =
            serde_json::from_str(line).map_err(|e| format!("bad record {line:?}: {e}"))?;
        let got_gaps = u32_array(&value["gaps"])?;
        let got_non_gaps = u32_array(&value["nonGaps"])?;
        if got_gaps != gaps || got_non_gaps != non_gaps {
            return Err(format!(
                "record mismatch: got gaps {got_gaps:?} non-gaps {got_non_gaps:?}, want {gaps:?} / {non_gaps:?}"
            ));
        }
    }
    budget("genus-3 enumeration", elapsed, Duration::from_secs(1))
}

fn u32_array(value: &serde_json::Value) -> Result<Vec<u32>, String> {
    value
        .as_array()
        .ok_or_else(|| format!("not an array: {value}"))?
        .iter()
        .map(|v| {
            v.as_u64()
                .and_then(|n| u32::try_from(n).ok())
                .ok_or_else(|| format!("not a u32: {v}"))
        })
        .collect()
}

/// Tree search and exhaustive oracle agree exactly for every genus
/// through 12, within five minutes.
fn oracle_equivalence() -> Result<(), String> {
    let started = Instant::now();
    for genus in 0..=12u32 {
        let tree = tree_enumerate(genus);
        let oracle = brute_force_enumerate(genus, 14).map_err(|e| e.to_string())?;
        if tree.count != oracle.count {
            return Err(format!(
                "genus {genus}: tree count {} vs oracle count {}",
                tree.count, oracle.count
            ));
        }
        let tree_seqs = tree.sequences.ok_or("tree result dropped sequences")?;
        let oracle_seqs = oracle.sequences.ok_or("oracle result dropped sequences")?;
        if tree_seqs != oracle_seqs {
            return Err(format!("genus {genus}: sequence sets differ"));
        }
    }
    budget("oracle sweep", started.elapsed(), Duration::from_secs(300))
}

/// Every ladder through genus 10 satisfies the dimension identity at
/// every index, starts with speciality g, vanishes from 2g-1 on, and
/// loses speciality exactly g times in unit steps.
fn ladder_law_suite() -> Result<(), String> {
    for genus in 0..=10u32 {
        let g = i64::from(genus);
        for seq in tree_walk(genus) {
            let ladder = DimensionLadder::from_gaps(&seq);
            let (h0, i) = (ladder.h0(), ladder.i());
            let mut drops = 0i64;
            for n in 0..h0.len() {
                if h0[n] - i[n] != 1 - g + n as i64 {
                    return Err(format!("identity fails at n = {n} for {:?}", seq.gaps()));
                }
                if genus >= 1 && n >= 2 * genus as usize - 1 && i[n] != 0 {
                    return Err(format!(
                        "speciality persists at n = {n} for {:?}",
                        seq.gaps()
                    ));
                }
                if n > 0 {
                    match i[n] - i[n - 1] {
                        0 => {}
                        -1 => drops += 1,
                        step => {
                            return Err(format!(
                                "speciality steps by {step} at n = {n} for {:?}",
                                seq.gaps()
                            ))
                        }
                    }
                }
            }
            if i[0] != g {
                return Err(format!("i[0] = {} for {:?}", i[0], seq.gaps()));
            }
            if drops != g {
                return Err(format!("{drops} unit drops for {:?}, want {g}", seq.gaps()));
            }
            if !ladder.verify().all_pass() {
                return Err(format!("law report rejects {:?}", seq.gaps()));
            }
        }
    }
    Ok(())
}

/// Every sequence through genus 10 starts its gaps at 1, keeps all gaps
/// below 2g, has 2g as a non-gap, and a first non-gap of at most g+1.
fn structural_invariants() -> Result<(), String> {
    for genus in 1..=10u32 {
        for seq in tree_walk(genus) {
            let gaps = seq.gaps();
            if gaps[0] != 1 {
                return Err(format!("{:?} does not start at 1", gaps));
            }
            if gaps.iter().any(|&n| n >= 2 * genus) {
                return Err(format!("{:?} has a gap >= {}", gaps, 2 * genus));
            }
            let non_gaps = seq.non_gaps();
            if !non_gaps.contains(2 * genus) {
                return Err(format!("{:?} misses non-gap {}", gaps, 2 * genus));
            }
            match seq.first_non_gap() {
                Some(h) if h <= genus + 1 => {}
                other => return Err(format!("{:?} has first non-gap {other:?}", gaps)),
            }
        }
    }
    Ok(())
}

/// Closed-form weights and point-count formulas hold exactly across
/// their whole stated ranges, under one second.
fn weight_formulas() -> Result<(), String> {
    let started = Instant::now();
    for genus in 2..=50u32 {
        let g = u64::from(genus);
        let hyper = hyperelliptic_sequence(genus).map_err(|e| e.to_string())?;
        if weight(&hyper) != g * (g - 1) / 2 {
            return Err(format!("hyperelliptic weight wrong at genus {genus}"));
        }
        let excep = exceptional_sequence(genus).map_err(|e| e.to_string())?;
        if weight(&excep) != 1 {
            return Err(format!("exceptional weight wrong at genus {genus}"));
        }
    }
    for genus in 2..=1000u32 {
        let g = u64::from(genus);
        let implied = implied_hyperelliptic_point_count(genus).map_err(|e| e.to_string())?;
        if implied != 2 * g + 2 {
            return Err(format!("implied point count wrong at genus {genus}"));
        }
        let bounds = point_count_bounds(genus).map_err(|e| e.to_string())?;
        if bounds.lower != 2 * g + 2
            || bounds.upper != g * g * g - g
            || bounds.total_weight != bounds.upper
        {
            return Err(format!("bounds wrong at genus {genus}: {bounds:?}"));
        }
    }
    budget("formula sweep", started.elapsed(), Duration::from_secs(1))
}

/// For every sequence through genus 10, any order coprime to the first
/// non-gap and inside the forcing inequality really is a gap.
fn forced_gap_cross_validation() -> Result<(), String> {
    for genus in 1..=10u32 {
        for seq in tree_walk(genus) {
            let h = seq.first_non_gap().ok_or("missing first non-gap")?;
            for k in 2..=(2 * genus).saturating_sub(1) {
                if gcd(h, k) != 1 {
                    continue;
                }
                let forced = jenkins_forced_gap(h, k, genus).map_err(|e| e.to_string())?;
                if forced && !seq.contains_gap(k) {
                    return Err(format!(
                        "genus {genus}, {:?}: k = {k} should be forced but is a non-gap",
                        seq.gaps()
                    ));
                }
            }
        }
    }
    Ok(())
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// The genus-6 hyperelliptic non-gaps begin 2, 4, 6 and the ordinary
/// genus-6 sequence first admits a pole of order 7.
fn genus_6_example() -> Result<(), String> {
    let hyper = hyperelliptic_sequence(6).map_err(|e| e.to_string())?;
    let members = hyper.non_gaps();
    if members.members()[..3] != [2, 4, 6] {
        return Err(format!("non-gaps begin {:?}", &members.members()[..3]));
    }
    if classify(&hyper).classification != Classification::Hyperelliptic {
        return Err("genus-6 hyperelliptic misclassified".to_string());
    }

    let ordinary = validate(6, &[1, 2, 3, 4, 5, 6]).map_err(|e| e.to_string())?;
    if ordinary.first_non_gap() != Some(7) {
        return Err(format!(
            "ordinary first non-gap {:?}",
            ordinary.first_non_gap()
        ));
    }
    if classify(&ordinary).classification != Classification::Ordinary {
        return Err("genus-6 ordinary misclassified".to_string());
    }
    Ok(())
}

/// Counting genus 18 gives one answer regardless of worker count, and
/// serial enumeration is byte-identical across runs.
fn determinism() -> Result<(), String> {
    let mut counts = Vec::new();
    for workers in ["1", "2", "8"] {
        let (code, stdout) = run_cli(&[
            "count",
            "--genus",
            "18",
            "--workers",
            workers,
            "--format",
            "plain",
        ])?;
        if code != 0 {
            return Err(format!("count with {workers} workers exited {code}"));
        }
        counts.push(stdout.trim().to_string());
    }
    if counts[0] != counts[1] || counts[1] != counts[2] {
        return Err(format!("counts diverge across workers: {counts:?}"));
    }
    if counts[0] != "13467" {
        return Err(format!(
            "genus-18 count {} does not match the catalog",
            counts[0]
        ));
    }

    let (code_a, first) = run_cli(&["enumerate", "--genus", "10", "--workers", "1"])?;
    let (code_b, second) = run_cli(&["enumerate", "--genus", "10", "--workers", "1"])?;
    if code_a != 0 || code_b != 0 {
        return Err("serial enumerate exited nonzero".to_string());
    }
    if first != second {
        return Err("serial enumerate output changed between runs".to_string());
    }
    Ok(())
}
