//! Local search for 7 points with as few Tverberg partitions as possible.
//!
//! cargo run --release --example minimize -- [seed] [iterations]

use tvk::instances::{minimize_count, Seed};

fn main() -> tvk::Result<()> {
    let mut args = std::env::args().skip(1);
    let seed = args.next().and_then(|s| s.parse().ok()).unwrap_or(1);
    let iterations = args.next().and_then(|s| s.parse().ok()).unwrap_or(2000);
    let (ps, count) = minimize_count(Seed(seed), iterations)?;
    println!("minimum found: {count}");
    for (i, p) in ps.iter().enumerate() {
        println!("  {i}: {p}");
    }
    Ok(())
}
