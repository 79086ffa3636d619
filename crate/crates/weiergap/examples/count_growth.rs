//! Count gap sequences per genus with the parallel tree search and show
//! how the totals grow.
//!
//! Run with: cargo run --release --example count_growth

use weiergap::enumerate::count_by_genus;

fn main() {
    let max_genus = 20;
    let workers = std::thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1);

    let started = std::time::Instant::now();
    let counts = count_by_genus(max_genus, workers);
    let elapsed = started.elapsed();

    println!("{:>5}  {:>12}  {:>6}", "genus", "count", "ratio");
    let mut previous: Option<u64> = None;
    for row in &counts {
        match previous {
            Some(p) if p > 0 => println!(
                "{:>5}  {:>12}  {:>6.3}",
                row.genus,
                row.count,
                row.count as f64 / p as f64
            ),
            _ => println!("{:>5}  {:>12}", row.genus, row.count),
        }
        previous = Some(row.count);
    }
    println!();
    println!(
        "counted through genus {max_genus} with {workers} worker(s) in {:.2?}",
        elapsed
    );
}
