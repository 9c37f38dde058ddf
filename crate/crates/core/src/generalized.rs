//! The single-point case for `r` parts in the plane.
//!
//! For `3r - 2` points whose `C_r` is one input point `x`, three covering
//! half-planes through `x` leave `r - 1` points in each doubly-covered
//! sector, and every way of grouping the rest into triples with one point
//! per sector gives a Tverberg partition with `x` as the singleton. There
//! are `((r - 1)!)^2` such groupings.

use itertools::Itertools;

use crate::constructive::{covering_decomposition, SectorDecomposition};
use crate::depth::depth_region;
use crate::error::{Error, Result};
use crate::geom::{in_triangle, PointSet, RegionKind};
use crate::oracle::Partition;

/// Largest supported number of parts (19 points).
pub const MAX_R: usize = 7;

/// The same structure as the three-part case, with `r - 1` points per
/// sector.
pub type GeneralSectorDecomposition = SectorDecomposition;

/// Label of the single input point forming `C_r(ps)`.
pub fn case4_center(ps: &PointSet, r: usize) -> Result<usize> {
    if !(2..=MAX_R).contains(&r) {
        return Err(Error::Precondition(format!("r = {r} outside 2..={MAX_R}")));
    }
    ps.require_len(3 * r - 2)?;
    let dr = depth_region(ps, r)?;
    if dr.region.kind() != RegionKind::SinglePoint {
        return Err(Error::NotCase4(format!("C_{r} is a {}", dr.region.kind().name())));
    }
    let v = &dr.region.vertices()[0];
    ps.position(v).ok_or_else(|| Error::NotCase4(format!("C_{r} is {v}, not an input point")))
}

pub fn general_decomposition(ps: &PointSet, r: usize) -> Result<GeneralSectorDecomposition> {
    let x = case4_center(ps, r)?;
    let sd = covering_decomposition(x, ps, r)?;
    let total = sd.membership_total(ps);
    if total != 2 * (ps.len() - 1) {
        return Err(Error::LemmaViolation(format!("half-plane memberships sum to {total}, not 2|Y|")));
    }
    Ok(sd)
}

/// All `((r - 1)!)^2` sector-transversal partitions, canonical and sorted.
pub fn case4_general(ps: &PointSet, r: usize) -> Result<Vec<Partition>> {
    let sd = general_decomposition(ps, r)?;
    let [a, b, c] = &sd.sectors;
    let m = r - 1;
    let mut out = Vec::new();
    // Pinning the order of the first sector and permuting the other two
    // enumerates each grouping exactly once.
    for pb in (0..m).permutations(m) {
        for pc in (0..m).permutations(m) {
            let mut parts: Vec<Vec<usize>> = (0..m).map(|t| vec![a[t], b[pb[t]], c[pc[t]]]).collect();
            parts.push(vec![sd.center_idx]);
            let part = Partition::new(parts)?;
            if !validate_general_partition(ps, &part, sd.center_idx)? {
                return Err(Error::Validation(part.to_string()));
            }
            out.push(part);
        }
    }
    out.sort();
    Ok(out)
}

/// True iff `ps[x_idx]` lies in the triangle of every triple, which makes
/// it a common point of all parts.
pub fn validate_general_partition(ps: &PointSet, part: &Partition, x_idx: usize) -> Result<bool> {
    let parts = part.parts();
    let triples = parts.iter().filter(|p| p.len() == 3).count();
    let singleton_ok = parts.last().is_some_and(|p| p == &[x_idx]);
    if !singleton_ok || triples != parts.len() - 1 || 3 * triples + 1 != ps.len() {
        return Err(Error::Shape(format!("{part} is not {{x}} plus triples of {} points", ps.len())));
    }
    let x = &ps[x_idx];
    Ok(parts[..triples].iter().all(|t| in_triangle(&ps[t[0]], &ps[t[1]], &ps[t[2]], x)))
}
