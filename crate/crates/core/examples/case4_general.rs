//! The ((r-1)!)^2 sector partitions around a deepest input point, r = 2..5.
//!
//! cargo run --release --example case4_general -- [seed]

use std::time::Instant;

use tvk::generalized::{case4_general, general_decomposition};
use tvk::instances::{gen_case4, Seed};

fn main() -> tvk::Result<()> {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(1);
    for r in 2..=5 {
        let ps = gen_case4(Seed(seed), r)?;
        let start = Instant::now();
        let sd = general_decomposition(&ps, r)?;
        let parts = case4_general(&ps, r)?;
        println!(
            "r = {r}: {} points, center {}, sectors {:?}, {} partitions in {:.2?}",
            ps.len(),
            sd.center_idx,
            sd.sector_sizes(),
            parts.len(),
            start.elapsed()
        );
        if r == 3 {
            for p in &parts {
                println!("    {p}");
            }
        }
    }
    Ok(())
}
