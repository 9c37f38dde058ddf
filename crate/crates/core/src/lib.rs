//! Exact Tukey-depth regions and Tverberg partitions of small planar point
//! sets.
//!
//! The crate computes depth regions `C_k(X)` exactly, enumerates every
//! Tverberg 3-partition of seven points by brute force, and constructs at
//! least four of them directly from the structure of `C_3(X)`, producing a
//! checkable [`constructive::ProofTrace`].

pub mod cli;
pub mod constructive;
pub mod depth;
pub mod error;
pub mod generalized;
pub mod geom;
pub mod instances;
pub mod oracle;

pub use error::{Error, Result};
pub use geom::{ConvexRegion, HalfPlane, Point, PointSet, Rational};
