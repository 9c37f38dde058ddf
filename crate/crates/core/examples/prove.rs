//! Constructive certificate of at least four Tverberg partitions, checked
//! against brute force.
//!
//! cargo run --release --example prove -- [seed]

use tvk::constructive::prove_sierksma;
use tvk::instances::{gen_random, Seed};
use tvk::oracle::enumerate_all;

fn main() -> tvk::Result<()> {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(1);
    let ps = gen_random(Seed(seed), 7, 1000)?;
    let trace = prove_sierksma(&ps)?;
    println!("case {}; C_3 is a {}", trace.case_label, trace.c3.region.kind().name());
    let all: Vec<_> = enumerate_all(&ps)?.into_iter().map(|(p, _)| p).collect();
    for e in &trace.entries {
        let known = if all.contains(&e.partition) { "confirmed" } else { "MISSING" };
        println!("{:<12} {:<24} at {}  [{known}]", e.provenance.name(), e.partition.to_string(), e.witness.point);
    }
    println!("{} constructed, {} exist", trace.entries.len(), all.len());
    Ok(())
}
