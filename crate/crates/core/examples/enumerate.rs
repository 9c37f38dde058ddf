//! Every Tverberg 3-partition of a seeded 7-point set, with witnesses.
//!
//! cargo run --release --example enumerate -- [seed]

use tvk::instances::{gen_random, Seed};
use tvk::oracle::{count_by_shape, enumerate_all};

fn main() -> tvk::Result<()> {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(1);
    let ps = gen_random(Seed(seed), 7, 1000)?;
    let found = enumerate_all(&ps)?;
    for (part, w) in &found {
        println!("{part:<24} {:<5} at {}", w.shape.name(), w.point);
    }
    let (s331, s322) = count_by_shape(&found);
    println!("{} partitions ({s331} of shape 3-3-1, {s322} of shape 3-2-2)", found.len());
    Ok(())
}
