//! Diagram of the extremal configuration: its four partitions share the
//! center point as singleton.
//!
//! cargo run --release --example render_svg -- [out.svg]

use std::path::PathBuf;

use tvk::cli::json::ResultDocument;
use tvk::cli::render_svg;
use tvk::geom::rat;
use tvk::instances::{gen_extremal_clusters, Seed};
use tvk::oracle::enumerate_all;

fn main() -> tvk::Result<()> {
    let out: PathBuf = std::env::args().nth(1).unwrap_or_else(|| "extremal.svg".into()).into();
    let ps = gen_extremal_clusters(Seed(2), &rat(1, 100))?;
    let doc = ResultDocument::from_enumeration(&ps, &enumerate_all(&ps)?);
    render_svg(&ps, &doc, &out)?;
    println!("{} partitions drawn to {}", doc.counts.total, out.display());
    Ok(())
}
