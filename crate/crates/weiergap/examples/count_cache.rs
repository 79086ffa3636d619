//! Persist genus counts to a CSV cache and read them back, the same
//! format the command-line tool maintains behind --cache.
//!
//! Run with: cargo run --release --example count_cache

use std::time::Instant;

use weiergap::cache::{load_counts, save_counts};
use weiergap::enumerate::{tree_count, GenusCount};

fn main() {
    let dir = std::env::temp_dir().join("weiergap-count-cache-example");
    std::fs::create_dir_all(&dir).expect("create cache dir");
    let path = dir.join("counts.csv");
    let _ = std::fs::remove_file(&path);

    let workers = std::thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1);
    let genus = 16;

    // cold: compute and persist
    let started = Instant::now();
    let count = tree_count(genus, workers);
    let computed_in = started.elapsed();
    let rows: Vec<GenusCount> = vec![GenusCount { genus, count }];
    save_counts(&path, &rows).expect("write cache");
    println!(
        "computed count({genus}) = {count} in {computed_in:.2?}, saved to {}",
        path.display()
    );

    // warm: the file answers without recounting
    let started = Instant::now();
    let rows = load_counts(&path).expect("read cache");
    let hit = rows
        .iter()
        .find(|row| row.genus == genus)
        .expect("row for the genus");
    println!(
        "loaded count({genus}) = {} in {:.2?}",
        hit.count,
        started.elapsed()
    );
    assert_eq!(hit.count, count);

    println!();
    println!("cache file contents:");
    print!("{}", std::fs::read_to_string(&path).expect("read back"));
}
