//! Writes one instance of each generator kind as JSON.
//!
//! cargo run --release --example generate_fixtures -- [dir]
//! The directory defaults to $TVK_FIXTURES, then `fixtures`.

use std::path::PathBuf;

use tvk::cli::gen_metadata;
use tvk::cli::json::{to_json, InstanceDocument};
use tvk::geom::rat;
use tvk::instances::{GenSpec, Seed};

fn main() -> tvk::Result<()> {
    let dir: PathBuf = std::env::args()
        .nth(1)
        .or_else(|| std::env::var("TVK_FIXTURES").ok())
        .unwrap_or_else(|| "fixtures".into())
        .into();
    std::fs::create_dir_all(&dir)?;
    let specs = [
        (GenSpec::Random { n: 7, bound: 1000 }, Seed(1)),
        (GenSpec::ExtremalClusters { radius: rat(1, 100) }, Seed(2)),
        (GenSpec::Case4 { r: 3 }, Seed(3)),
    ];
    for (spec, seed) in specs {
        let ps = spec.generate(seed)?;
        let meta = gen_metadata(&spec, seed.0);
        let path = dir.join(format!("{}.json", spec.file_stem(seed)));
        std::fs::write(&path, to_json(&InstanceDocument::new(&ps, meta)))?;
        println!("wrote {}", path.display());
    }
    Ok(())
}
