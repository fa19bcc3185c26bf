//! Streams the bicolored set partitions indexing an r-Bell polynomial and
//! tallies them by shape.

use bellhopf::partition::{f_table, g_table, r_stirling, stream_s};

fn main() {
    let (r, n, k) = (2, 2, 1);
    println!("partitions with r={r}, n={n}, k={k}:");
    for p in stream_s(r, n, k) {
        println!("  {p}  shape {}", p.shape_c());
    }

    println!("by composition shape:");
    for (shape, count) in f_table(r, n, k) {
        println!("  {shape} x{count}");
    }
    println!("by partition shape:");
    for (shape, count) in g_table(r, n, k) {
        println!("  {shape} x{count}");
    }

    println!("sizes against r-Stirling numbers (r=1):");
    for n in 0..=6 {
        let row: Vec<String> = (0..=n)
            .map(|k| format!("{}={}", stream_s(1, n, k).count(), r_stirling(n + 1, k + 1, 1)))
            .collect();
        println!("  n={n}: {}", row.join(" "));
    }
}
