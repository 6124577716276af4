//! Prints the census size and search statistics for a given `n`.

use std::time::Instant;

use frobrel::classify::{classify, ClassifyOptions};

fn main() {
    let n: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(3);
    let t = Instant::now();
    let census = classify(n, &ClassifyOptions::default()).expect("classification");
    println!(
        "n = {n}: {} classes, {} labeled, {:?} in {:.2?}",
        census.len(),
        census.labeled_count(),
        census.stats,
        t.elapsed()
    );
}
