//! Brute-force ground truth for Tverberg partitions.
//!
//! Every partition produced elsewhere in the crate is re-checked here. The
//! primary test ([`is_tverberg`]) intersects the convex hulls of the parts by
//! half-plane clipping; [`check_by_shape`] is an independent second route
//! built only from orientation signs and segment crossings.

use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::geom::{
    convex_hull, in_triangle, intersect_regions, segment_common_point, ConvexRegion, Point, PointSet,
};

/// A set partition of point labels.
///
/// Canonical form: each part sorted ascending, parts ordered by size
/// descending with ties broken lexicographically. Two partitions are equal
/// as set partitions iff they are equal as values.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<Vec<usize>>,
}

impl Partition {
    /// Canonicalizes `parts`; rejects empty parts and overlapping parts.
    pub fn new(mut parts: Vec<Vec<usize>>) -> Result<Self> {
        for p in &mut parts {
            if p.is_empty() {
                return Err(Error::Shape("empty part".into()));
            }
            p.sort_unstable();
        }
        let mut all: Vec<usize> = parts.iter().flatten().copied().collect();
        all.sort_unstable();
        if all.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Shape("parts are not disjoint".into()));
        }
        parts.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        Ok(Partition { parts })
    }

    /// Like [`Partition::new`], additionally requiring the parts to cover
    /// exactly `0..n`.
    pub fn covering(parts: Vec<Vec<usize>>, n: usize) -> Result<Self> {
        let part = Partition::new(parts)?;
        let total: usize = part.parts.iter().map(Vec::len).sum();
        if total != n || part.parts.iter().flatten().any(|&i| i >= n) {
            return Err(Error::Shape(format!("parts do not cover 0..{n}")));
        }
        Ok(part)
    }

    pub fn parts(&self) -> &[Vec<usize>] {
        &self.parts
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.parts.iter().map(Vec::len).collect()
    }

    pub fn shape(&self) -> Shape {
        match self.sizes().as_slice() {
            [3, 3, 1] => Shape::S331,
            [3, 2, 2] => Shape::S322,
            _ => Shape::Other,
        }
    }

    /// The label of the unique singleton part, if there is exactly one.
    pub fn singleton(&self) -> Option<usize> {
        let mut singles = self.parts.iter().filter(|p| p.len() == 1);
        match (singles.next(), singles.next()) {
            (Some(p), None) => Some(p[0]),
            _ => None,
        }
    }

    /// Applies a relabeling `i -> map[i]` and re-canonicalizes.
    pub fn relabel(&self, map: &[usize]) -> Partition {
        let parts = self.parts.iter().map(|p| p.iter().map(|&i| map[i]).collect()).collect();
        Partition::new(parts).expect("relabeling by a permutation keeps parts disjoint")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str("|")?;
            }
            write!(f, "{{")?;
            for (j, v) in p.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{v}")?;
            }
            write!(f, "}}")?;
        }
        Ok(())
    }
}

/// Part sizes of a 3-part partition of seven points.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Shape {
    S331,
    S322,
    Other,
}

impl Shape {
    pub fn name(self) -> &'static str {
        match self {
            Shape::S331 => "S331",
            Shape::S322 => "S322",
            Shape::Other => "Other",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        match s {
            "S331" => Some(Shape::S331),
            "S322" => Some(Shape::S322),
            "Other" => Some(Shape::Other),
            _ => None,
        }
    }
}

/// A common point of all part hulls.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Witness {
    pub point: Point,
    pub shape: Shape,
}

/// Intersection of the convex hulls of all parts.
pub fn common_region(ps: &PointSet, part: &Partition) -> ConvexRegion {
    let mut hulls: Vec<ConvexRegion> = part.parts().iter().map(|p| convex_hull(&ps.select(p))).collect();
    // Clip starting from the smallest hull; a point hull short-circuits.
    hulls.sort_by_key(|h| h.kind());
    let mut acc = hulls[0].clone();
    for h in &hulls[1..] {
        if acc.is_empty() {
            break;
        }
        acc = intersect_regions(&acc, h);
    }
    acc
}

/// Returns a witness iff the convex hulls of the parts share a point.
///
/// The witness is the lexicographically smallest vertex of the common
/// region. For (3,2,2) partitions the witness is cross-checked against the
/// exact crossing point of the two segments.
pub fn is_tverberg(ps: &PointSet, part: &Partition) -> Option<Witness> {
    let region = common_region(ps, part);
    let point = region.vertices().first()?.clone();
    let shape = part.shape();
    if shape == Shape::S322 {
        let a = &part.parts()[1];
        let b = &part.parts()[2];
        if let Ok(Some(q)) = segment_common_point(&ps[a[0]], &ps[a[1]], &ps[b[0]], &ps[b[1]]) {
            assert_eq!(q, point, "clipping and segment crossing disagree on {part}");
        }
    }
    Some(Witness { point, shape })
}

/// Independent validity check for the two shapes possible under general
/// position. `None` for any other shape.
///
/// (3,3,1): the singleton lies in both triangles. (3,2,2): the two
/// segments cross and the crossing lies in the triangle.
pub fn check_by_shape(ps: &PointSet, part: &Partition) -> Option<bool> {
    let p = part.parts();
    match part.shape() {
        Shape::S331 => {
            let x = &ps[p[2][0]];
            let tri = |t: &[usize]| in_triangle(&ps[t[0]], &ps[t[1]], &ps[t[2]], x);
            Some(tri(&p[0]) && tri(&p[1]))
        }
        Shape::S322 => {
            let (a, b, t) = (&p[1], &p[2], &p[0]);
            let crossing = segment_common_point(&ps[a[0]], &ps[a[1]], &ps[b[0]], &ps[b[1]]).ok().flatten();
            Some(crossing.is_some_and(|q| in_triangle(&ps[t[0]], &ps[t[1]], &ps[t[2]], &q)))
        }
        Shape::Other => None,
    }
}

/// The 70 (3,3,1) and 105 (3,2,2) partitions of seven labels, in canonical
/// order.
pub fn candidate_partitions() -> Vec<Partition> {
    let mut out = Vec::with_capacity(175);
    let all: Vec<usize> = (0..7).collect();
    for s in 0..7 {
        let rest: Vec<usize> = all.iter().copied().filter(|&i| i != s).collect();
        let first = rest[0];
        for pair in combinations(&rest[1..], 2) {
            let t1: Vec<usize> = std::iter::once(first).chain(pair.iter().copied()).collect();
            let t2: Vec<usize> = rest.iter().copied().filter(|i| !t1.contains(i)).collect();
            out.push(Partition::new(vec![t1, t2, vec![s]]).unwrap());
        }
    }
    for t in combinations(&all, 3) {
        let rest: Vec<usize> = all.iter().copied().filter(|i| !t.contains(i)).collect();
        for partner in &rest[1..] {
            let p1 = vec![rest[0], *partner];
            let p2: Vec<usize> = rest.iter().copied().filter(|i| !p1.contains(i)).collect();
            out.push(Partition::new(vec![t.clone(), p1, p2]).unwrap());
        }
    }
    out.sort();
    out
}

fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    use itertools::Itertools;
    items.iter().copied().combinations(k).collect()
}

/// All partitions of `0..n` into exactly `r` nonempty parts, in canonical
/// order. Enumerated by restricted growth strings.
pub fn all_set_partitions(n: usize, r: usize) -> Vec<Partition> {
    fn rec(i: usize, n: usize, r: usize, labels: &mut Vec<usize>, used: usize, out: &mut Vec<Partition>) {
        if i == n {
            if used == r {
                let mut parts = vec![Vec::new(); r];
                for (idx, &b) in labels.iter().enumerate() {
                    parts[b].push(idx);
                }
                out.push(Partition::new(parts).unwrap());
            }
            return;
        }
        // Not enough labels left to open the remaining blocks.
        if r - used > n - i {
            return;
        }
        for b in 0..=used.min(r - 1) {
            labels.push(b);
            rec(i + 1, n, r, labels, used.max(b + 1), out);
            labels.pop();
        }
    }
    let mut out = Vec::new();
    if r >= 1 && r <= n {
        rec(0, n, r, &mut Vec::with_capacity(n), 0, &mut out);
    }
    out.sort();
    out
}

/// Every Tverberg 3-partition of seven points in general position, with
/// witnesses, in canonical partition order.
///
/// Only (3,3,1) and (3,2,2) candidates are tested: any other shape needs a
/// singleton in a segment or two coincident singletons.
pub fn enumerate_all(ps: &PointSet) -> Result<Vec<(Partition, Witness)>> {
    ps.require_len(7)?;
    ps.require_general_position()?;
    Ok(candidate_partitions()
        .into_par_iter()
        .filter_map(|part| is_tverberg(ps, &part).map(|w| (part, w)))
        .collect())
}

/// Tallies `(count331, count322)`.
pub fn count_by_shape(results: &[(Partition, Witness)]) -> (usize, usize) {
    results.iter().fold((0, 0), |(a, b), (_, w)| match w.shape {
        Shape::S331 => (a + 1, b),
        Shape::S322 => (a, b + 1),
        Shape::Other => (a, b),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{region_contains, Containment};

    fn nested() -> PointSet {
        PointSet::from_ints(&[(0, 0), (4, 0), (2, 4), (1, 1), (3, 1), (2, 3), (2, 1)])
    }

    #[test]
    fn canonical_form() {
        let p = Partition::new(vec![vec![6], vec![5, 3, 4], vec![2, 1, 0]]).unwrap();
        assert_eq!(p.parts(), &[vec![0, 1, 2], vec![3, 4, 5], vec![6]]);
        assert_eq!(p.shape(), Shape::S331);
        assert_eq!(p.singleton(), Some(6));
        assert_eq!(p.to_string(), "{0,1,2}|{3,4,5}|{6}");
        assert!(Partition::new(vec![vec![0, 1], vec![1, 2]]).is_err());
        assert!(Partition::new(vec![vec![0], vec![]]).is_err());
        assert!(Partition::covering(vec![vec![0, 1], vec![3]], 3).is_err());
    }

    #[test]
    fn nested_triangles_witness() {
        let ps = nested();
        let part = Partition::new(vec![vec![0, 1, 2], vec![3, 4, 5], vec![6]]).unwrap();
        let w = is_tverberg(&ps, &part).unwrap();
        assert_eq!(w.point, Point::from_ints(2, 1));
        assert_eq!(w.shape, Shape::S331);
        for p in part.parts() {
            assert_ne!(region_contains(&convex_hull(&ps.select(p)), &w.point), Containment::Outside);
        }
    }

    #[test]
    fn far_apart_parts_fail() {
        let ps = PointSet::from_ints(&[(0, 0), (1, 0), (0, 1), (100, 100), (101, 100), (100, 101), (-50, 70)]);
        let part = Partition::new(vec![vec![0, 1, 2], vec![3, 4, 5], vec![6]]).unwrap();
        assert!(is_tverberg(&ps, &part).is_none());
        assert_eq!(check_by_shape(&ps, &part), Some(false));
    }

    #[test]
    fn two_singletons_fail() {
        let ps = nested();
        let part = Partition::new(vec![vec![0, 1, 2, 3, 4], vec![5], vec![6]]).unwrap();
        assert!(is_tverberg(&ps, &part).is_none());
        assert_eq!(check_by_shape(&ps, &part), None);
    }

    #[test]
    fn candidate_space() {
        let c = candidate_partitions();
        assert_eq!(c.len(), 175);
        assert_eq!(c.iter().filter(|p| p.shape() == Shape::S331).count(), 70);
        assert_eq!(c.iter().filter(|p| p.shape() == Shape::S322).count(), 105);
        let mut d = c.clone();
        d.dedup();
        assert_eq!(d.len(), 175);
    }

    #[test]
    fn stirling_counts() {
        assert_eq!(all_set_partitions(7, 3).len(), 301);
        assert_eq!(all_set_partitions(4, 2).len(), 7);
        assert_eq!(all_set_partitions(3, 3).len(), 1);
        assert!(all_set_partitions(2, 3).is_empty());
        let shapes = all_set_partitions(7, 3);
        assert_eq!(shapes.iter().filter(|p| p.shape() != Shape::Other).count(), 175);
    }

    #[test]
    fn count_examples() {
        assert_eq!(count_by_shape(&[]), (0, 0));
        let ps = PointSet::from_ints(&[(0, 0), (2, 0), (1, 2), (-1, 3), (-2, 1), (-2, -3), (2, -3)]);
        let res = enumerate_all(&ps).unwrap();
        let (a, b) = count_by_shape(&res);
        assert_eq!(a + b, res.len());
        assert!(res.len() >= 4);
    }

    #[test]
    fn enumerate_requires_seven() {
        let ps = PointSet::from_ints(&[(0, 0), (1, 0), (0, 1)]);
        assert!(matches!(enumerate_all(&ps), Err(Error::WrongSize { .. })));
    }

    #[test]
    fn s322_witness_is_crossing() {
        // Diagonals of a square cross at (1,1); a big triangle around it.
        let ps = PointSet::from_ints(&[(0, 0), (2, 2), (0, 2), (2, 0), (-5, -4), (7, -3), (1, 9)]);
        let part = Partition::new(vec![vec![0, 1], vec![2, 3], vec![4, 5, 6]]).unwrap();
        let w = is_tverberg(&ps, &part).unwrap();
        assert_eq!(w.shape, Shape::S322);
        assert_eq!(w.point, Point::from_ints(1, 1));
        assert_eq!(check_by_shape(&ps, &part), Some(true));
    }
}
