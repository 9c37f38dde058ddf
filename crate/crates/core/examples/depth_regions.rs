//! Nested Tukey depth regions C_1 ⊇ C_2 ⊇ C_3 of a seeded 7-point set.
//!
//! cargo run --release --example depth_regions -- [seed]

use tvk::depth::{check_c3_dichotomy, depth_region, tukey_depth};
use tvk::instances::{gen_random, Seed};

fn main() -> tvk::Result<()> {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(1);
    let ps = gen_random(Seed(seed), 7, 1000)?;
    for (i, p) in ps.iter().enumerate() {
        println!("point {i}: {p}  depth {}", tukey_depth(p, &ps));
    }
    for k in 1..=4 {
        let dr = depth_region(&ps, k)?;
        println!("C_{k}: {} with {} constraints", dr.region.kind().name(), dr.constraints.len());
        for v in dr.region.vertices() {
            println!("    {v}");
        }
    }
    println!("C_3 shape: {:?}", check_c3_dichotomy(&ps)?);
    Ok(())
}
