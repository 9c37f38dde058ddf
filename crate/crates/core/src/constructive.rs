//! Constructive lower bound: at least four Tverberg 3-partitions of any
//! seven points in general position, built from the shape of `C_3(X)`.
//!
//! The four cases, by `C = C_3(X)`:
//!
//! 1. `C` avoids `X`: `C` is a polygon with at least four vertices and each
//!    vertex yields a (3,2,2) partition ([`vertex_partition`]).
//! 2. `C` holds two or more points of `X`: each gives two Birch partitions
//!    ([`birch_first`], [`birch_second`]).
//! 3. `C` is two-dimensional and holds one point of `X`: two Birch
//!    partitions plus two vertex partitions.
//! 4. `C` is a single point `x` of `X`: three covering half-planes through
//!    `x` split the rest into three doubly-covered sectors of two points
//!    each, and the four sector transversals give four (3,3,1) partitions
//!    ([`find_covering_halfplanes`], [`case4_partitions`]).
//!
//! Every partition is re-validated by the brute-force oracle before it is
//! reported; a rejection is an error, never silently dropped.

use std::cmp::Ordering;
use std::fmt;

use crate::depth::{classify_c3, depth_region, tukey_depth, C3Shape, DepthRegion};
use crate::error::{Error, Result};
use crate::geom::{
    convex_hull, orient, region_contains, ConvexRegion, Containment, HalfPlane, Orientation, Point, PointSet,
    RegionKind,
};
use crate::oracle::{is_tverberg, Partition, Witness};

use num_traits::Signed;

/// Which construction produced a partition in a [`ProofTrace`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Provenance {
    BirchFirst,
    BirchSecond,
    VertexOfC,
    Case4Sector,
}

impl Provenance {
    pub fn name(self) -> &'static str {
        match self {
            Provenance::BirchFirst => "BirchFirst",
            Provenance::BirchSecond => "BirchSecond",
            Provenance::VertexOfC => "VertexOfC",
            Provenance::Case4Sector => "Case4Sector",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        [Provenance::BirchFirst, Provenance::BirchSecond, Provenance::VertexOfC, Provenance::Case4Sector]
            .into_iter()
            .find(|p| p.name() == s)
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceEntry {
    pub partition: Partition,
    pub witness: Witness,
    pub provenance: Provenance,
}

/// The certificate produced by [`prove_sierksma`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProofTrace {
    pub case_label: u8,
    pub c3: DepthRegion,
    pub entries: Vec<TraceEntry>,
}

impl ProofTrace {
    pub fn partitions(&self) -> impl Iterator<Item = &Partition> {
        self.entries.iter().map(|e| &e.partition)
    }
}

/// Three closed half-planes through a center point whose union is the
/// plane, with the remaining points sorted into the three sectors covered
/// twice.
///
/// `sectors[m]` holds the points lying in every half-plane except
/// `halfplanes[m]`. For `3r - 2` points each sector holds `r - 1` points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SectorDecomposition {
    pub r: usize,
    pub center_idx: usize,
    pub center: Point,
    pub halfplanes: [HalfPlane; 3],
    pub sectors: [Vec<usize>; 3],
}

impl SectorDecomposition {
    /// `|H_1 ∩ Y| + |H_2 ∩ Y| + |H_3 ∩ Y|` where `Y` excludes the center.
    pub fn membership_total(&self, ps: &PointSet) -> usize {
        self.halfplanes
            .iter()
            .map(|h| (0..ps.len()).filter(|&i| i != self.center_idx && h.contains(&ps[i])).count())
            .sum()
    }

    pub fn sector_sizes(&self) -> [usize; 3] {
        [self.sectors[0].len(), self.sectors[1].len(), self.sectors[2].len()]
    }
}

/// Case label of `C_3(X)` together with the data it was decided from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub label: u8,
    pub c3: DepthRegion,
    /// Labels of input points in `C_3`, ascending.
    pub contained: Vec<usize>,
}

/// Indices of `ys` in clockwise angular order around `x`, starting from
/// the lexicographically smallest point. Uses orientation tests only.
pub fn order_around(x: &Point, ys: &[Point]) -> Result<Vec<usize>> {
    let same_ray = |y: &Point, z: &Point| {
        let (yx, yy) = y.sub(x);
        let (zx, zy) = z.sub(x);
        orient(x, y, z) == Orientation::Collinear && (yx * zx + yy * zy).is_positive()
    };
    for (i, y) in ys.iter().enumerate() {
        if y == x {
            return Err(Error::Collinear(format!("point {i} coincides with the center")));
        }
        for (j, z) in ys.iter().enumerate().skip(i + 1) {
            if same_ray(y, z) {
                return Err(Error::Collinear(format!("points {i} and {j} lie on one ray from {x}")));
            }
        }
    }
    let Some(start) = (0..ys.len()).min_by(|&a, &b| ys[a].cmp(&ys[b])) else {
        return Ok(Vec::new());
    };
    // Clockwise half-turn from the start ray, then the opposite ray, then
    // the rest. Within an open half-turn no two directions are collinear.
    let mut right = Vec::new();
    let mut opposite = Vec::new();
    let mut left = Vec::new();
    for i in (0..ys.len()).filter(|&i| i != start) {
        match orient(x, &ys[start], &ys[i]) {
            Orientation::Clockwise => right.push(i),
            Orientation::Collinear => opposite.push(i),
            Orientation::CounterClockwise => left.push(i),
        }
    }
    let cw = |a: &usize, b: &usize| match orient(x, &ys[*a], &ys[*b]) {
        Orientation::Clockwise => Ordering::Less,
        Orientation::CounterClockwise => Ordering::Greater,
        Orientation::Collinear => Ordering::Equal,
    };
    right.sort_by(cw);
    left.sort_by(cw);
    let mut out = Vec::with_capacity(ys.len());
    out.push(start);
    out.extend(right);
    out.extend(opposite);
    out.extend(left);
    Ok(out)
}

/// `p_1..p_6`: the labels of `X \ {x}` clockwise around `x`, after
/// checking that `x` has depth at least 3.
fn birch_cycle(x_idx: usize, ps: &PointSet) -> Result<Vec<usize>> {
    ps.require_len(7)?;
    ps.require_general_position()?;
    if x_idx >= ps.len() {
        return Err(Error::Precondition(format!("index {x_idx} out of range")));
    }
    let x = &ps[x_idx];
    let depth = tukey_depth(x, ps);
    if depth < 3 {
        return Err(Error::Precondition(format!("point {x_idx} has depth {depth}, not in C_3")));
    }
    let others: Vec<usize> = (0..ps.len()).filter(|&i| i != x_idx).collect();
    let order = order_around(x, &ps.select(&others))?;
    Ok(order.into_iter().map(|i| others[i]).collect())
}

fn certify(ps: &PointSet, part: &Partition) -> Result<Witness> {
    is_tverberg(ps, part).ok_or_else(|| Error::Validation(part.to_string()))
}

/// The alternating Birch partition `{p1,p3,p5}, {p2,p4,p6}, {x}`.
pub fn birch_first(x_idx: usize, ps: &PointSet) -> Result<Partition> {
    let p = birch_cycle(x_idx, ps)?;
    let part = Partition::new(vec![vec![p[0], p[2], p[4]], vec![p[1], p[3], p[5]], vec![x_idx]])?;
    certify(ps, &part)?;
    Ok(part)
}

/// The second Birch partition, found by rotating the diagonal `p_i p_{i+3}`
/// until `x` switches from its left to its right side.
///
/// With `i` the first index where `x` is left of `p_i p_{i+3}` and right of
/// `p_{i+1} p_{i+4}`, the partition is
/// `{x}, {p_i, p_{i+2}, p_{i+3}}, {p_{i+1}, p_{i+4}, p_{i+5}}`.
pub fn birch_second(x_idx: usize, ps: &PointSet) -> Result<Partition> {
    let p = birch_cycle(x_idx, ps)?;
    let x = &ps[x_idx];
    let side = |i: usize| orient(&ps[p[i % 6]], &ps[p[(i + 3) % 6]], x);
    let sides: Vec<Orientation> = (0..6).map(side).collect();
    if sides.contains(&Orientation::Collinear) {
        return Err(Error::Collinear(format!("point {x_idx} lies on a main diagonal")));
    }
    let i = (0..6)
        .find(|&i| sides[i] == Orientation::CounterClockwise && sides[(i + 1) % 6] == Orientation::Clockwise)
        .ok_or_else(|| Error::Structure("no side change among the main diagonals".into()))?;
    let at = |k: usize| p[(i + k) % 6];
    let part = Partition::new(vec![vec![at(0), at(2), at(3)], vec![at(1), at(4), at(5)], vec![x_idx]])?;
    certify(ps, &part)?;
    Ok(part)
}

fn points_on_line(ps: &PointSet, a: &Point, b: &Point) -> Vec<usize> {
    (0..ps.len()).filter(|&i| orient(a, b, &ps[i]) == Orientation::Collinear).collect()
}

/// The (3,2,2) partition attached to a vertex `v` of `C_3` outside `X`:
/// the two input points on each edge line through `v`, and the remaining
/// triple, whose triangle contains `v`.
pub fn vertex_partition(v: &Point, dr: &DepthRegion, ps: &PointSet) -> Result<Partition> {
    if dr.region.kind() != RegionKind::Polygon {
        return Err(Error::Structure(format!("C_{} is not a polygon", dr.k)));
    }
    if ps.position(v).is_some() {
        return Err(Error::Precondition(format!("vertex {v} is an input point")));
    }
    let verts = dr.region.vertices();
    let n = verts.len();
    let at = verts
        .iter()
        .position(|w| w == v)
        .ok_or_else(|| Error::Structure(format!("{v} is not a vertex of C_{}", dr.k)))?;
    let prev = &verts[(at + n - 1) % n];
    let next = &verts[(at + 1) % n];
    let mut pairs = Vec::with_capacity(2);
    for end in [prev, next] {
        let on = points_on_line(ps, end, v);
        if on.len() != 2 {
            return Err(Error::Structure(format!("edge line at {v} holds {} input points", on.len())));
        }
        let (a, b) = (&ps[on[0]], &ps[on[1]]);
        if !(a.min(b) < v && v < a.max(b)) {
            return Err(Error::Structure(format!("{v} is not between its edge points {a} and {b}")));
        }
        pairs.push(on);
    }
    let rest: Vec<usize> = (0..ps.len()).filter(|i| !pairs[0].contains(i) && !pairs[1].contains(i)).collect();
    if rest.len() != 3 {
        return Err(Error::Structure(format!("edge lines at {v} share an input point")));
    }
    if !region_contains(&convex_hull(&ps.select(&rest)), v).is_inside() {
        return Err(Error::Structure(format!("{v} is outside the triangle of the remaining points")));
    }
    let part = Partition::new(vec![pairs[0].clone(), pairs[1].clone(), rest])?;
    let w = certify(ps, &part)?;
    if &w.point != v {
        return Err(Error::Structure(format!("witness {} differs from vertex {v}", w.point)));
    }
    Ok(part)
}

/// Three covering half-planes through `ps[x_idx]` for a set of `3r - 2`
/// points whose `C_r` is that point.
///
/// Candidates are both closed sides of each line through the center and
/// another point, kept when they hold at least `2r - 1` points. Triples are
/// scanned in canonical half-plane order; the first one whose outward
/// normals have the origin strictly inside their triangle (so the open
/// complements have no common direction and no two are redundant) and that
/// puts every other point in exactly two half-planes, `r - 1` per sector,
/// is returned.
pub fn covering_decomposition(x_idx: usize, ps: &PointSet, r: usize) -> Result<SectorDecomposition> {
    if r < 2 {
        return Err(Error::Precondition("r must be at least 2".into()));
    }
    ps.require_len(3 * r - 2)?;
    if x_idx >= ps.len() {
        return Err(Error::Precondition(format!("index {x_idx} out of range")));
    }
    let x = &ps[x_idx];
    let threshold = 2 * r - 1;
    let ys: Vec<usize> = (0..ps.len()).filter(|&i| i != x_idx).collect();
    let mut candidates: Vec<HalfPlane> = ys
        .iter()
        .flat_map(|&y| [HalfPlane::left_of(x, &ps[y]), HalfPlane::left_of(&ps[y], x)])
        .filter(|h| ps.iter().filter(|q| h.contains(q)).count() >= threshold)
        .collect();
    candidates.sort();
    candidates.dedup();
    let origin = Point::from_ints(0, 0);
    let m = candidates.len();
    for i in 0..m {
        for j in i + 1..m {
            for k in j + 1..m {
                let hs = [&candidates[i], &candidates[j], &candidates[k]];
                let normals = convex_hull(&hs.map(|h| h.normal()));
                if region_contains(&normals, &origin) != Containment::Interior {
                    continue;
                }
                let mut sectors: [Vec<usize>; 3] = Default::default();
                let mut ok = true;
                for &y in &ys {
                    let inside: Vec<bool> = hs.iter().map(|h| h.contains(&ps[y])).collect();
                    if inside.iter().filter(|&&b| b).count() != 2 {
                        ok = false;
                        break;
                    }
                    let missing = inside.iter().position(|&b| !b).unwrap();
                    sectors[missing].push(y);
                }
                if ok && sectors.iter().all(|s| s.len() == r - 1) {
                    return Ok(SectorDecomposition {
                        r,
                        center_idx: x_idx,
                        center: x.clone(),
                        halfplanes: hs.map(Clone::clone),
                        sectors,
                    });
                }
            }
        }
    }
    Err(Error::NoCover(x_idx))
}

/// The covering half-planes of the single-point `C_3` at `ps[x_idx]`.
pub fn find_covering_halfplanes(x_idx: usize, ps: &PointSet) -> Result<SectorDecomposition> {
    ps.require_len(7)?;
    covering_decomposition(x_idx, ps, 3)
}

/// The four (3,3,1) partitions whose triples each take one point from
/// every doubly-covered sector.
pub fn case4_partitions(sd: &SectorDecomposition, ps: &PointSet) -> Result<Vec<Partition>> {
    if sd.r != 3 || sd.sector_sizes() != [2, 2, 2] {
        return Err(Error::Precondition(format!("sector sizes {:?}, expected (2,2,2)", sd.sector_sizes())));
    }
    let [a, b, c] = &sd.sectors;
    let mut out = Vec::with_capacity(4);
    for bi in 0..2 {
        for ci in 0..2 {
            let t1 = vec![a[0], b[bi], c[ci]];
            let t2 = vec![a[1], b[1 - bi], c[1 - ci]];
            let part = Partition::new(vec![t1, t2, vec![sd.center_idx]])?;
            certify(ps, &part)?;
            out.push(part);
        }
    }
    out.sort();
    Ok(out)
}

/// Decides which of the four cases `C_3(ps)` falls into.
pub fn classify_case(ps: &PointSet) -> Result<Classification> {
    ps.require_len(7)?;
    let c3 = depth_region(ps, 3)?;
    let shape = classify_c3(ps, &c3)?;
    let contained: Vec<usize> = (0..ps.len()).filter(|&i| region_contains(&c3.region, &ps[i]).is_inside()).collect();
    let label = match shape {
        C3Shape::PointOfX(_) => 4,
        C3Shape::TwoDimensional => match contained.len() {
            0 => 1,
            1 => 3,
            _ => 2,
        },
    };
    Ok(Classification { label, c3, contained })
}

fn lexicographic_smallest<'a>(points: impl Iterator<Item = &'a Point>, count: usize) -> Vec<Point> {
    let mut v: Vec<Point> = points.cloned().collect();
    v.sort();
    v.truncate(count);
    v
}

/// Builds at least four distinct, oracle-validated Tverberg partitions of
/// seven points in general position.
pub fn prove_sierksma(ps: &PointSet) -> Result<ProofTrace> {
    ps.require_general_position()?;
    let cls = classify_case(ps)?;
    let mut found: Vec<(Partition, Provenance)> = Vec::new();
    let non_x_vertices = |region: &ConvexRegion| {
        region.vertices().iter().filter(|v| ps.position(v).is_none()).cloned().collect::<Vec<_>>()
    };
    let birch_pair = |x: usize, found: &mut Vec<(Partition, Provenance)>| -> Result<()> {
        found.push((birch_first(x, ps)?, Provenance::BirchFirst));
        found.push((birch_second(x, ps)?, Provenance::BirchSecond));
        Ok(())
    };
    match cls.label {
        1 => {
            let verts = cls.c3.region.vertices();
            if verts.len() < 4 {
                return Err(Error::LemmaViolation(format!("case 1 with a {}-gon", verts.len())));
            }
            for v in lexicographic_smallest(verts.iter(), 4) {
                found.push((vertex_partition(&v, &cls.c3, ps)?, Provenance::VertexOfC));
            }
        }
        2 => {
            let mut xs = cls.contained.clone();
            xs.sort_by(|&a, &b| ps[a].cmp(&ps[b]));
            for &x in &xs[..2] {
                birch_pair(x, &mut found)?;
            }
        }
        3 => {
            birch_pair(cls.contained[0], &mut found)?;
            let candidates = non_x_vertices(&cls.c3.region);
            if candidates.len() < 2 {
                return Err(Error::LemmaViolation("case 3 with fewer than two vertices outside X".into()));
            }
            for v in lexicographic_smallest(candidates.iter(), 2) {
                found.push((vertex_partition(&v, &cls.c3, ps)?, Provenance::VertexOfC));
            }
        }
        _ => {
            let x = cls.contained[0];
            let sd = find_covering_halfplanes(x, ps)?;
            for part in case4_partitions(&sd, ps)? {
                found.push((part, Provenance::Case4Sector));
            }
        }
    }
    let mut entries = Vec::with_capacity(found.len());
    for (partition, provenance) in found {
        let witness = certify(ps, &partition)?;
        entries.push(TraceEntry { partition, witness, provenance });
    }
    let mut seen: Vec<&Partition> = entries.iter().map(|e| &e.partition).collect();
    seen.sort();
    seen.dedup();
    if seen.len() != entries.len() || entries.len() < 4 {
        return Err(Error::Structure(format!(
            "case {} produced {} distinct partitions out of {}",
            cls.label,
            seen.len(),
            entries.len()
        )));
    }
    Ok(ProofTrace { case_label: cls.label, c3: cls.c3, entries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::enumerate_all;

    fn p(x: i64, y: i64) -> Point {
        Point::from_ints(x, y)
    }

    #[test]
    fn order_hexagon() {
        let ys = [p(2, 0), p(1, 2), p(-1, 2), p(-2, 0), p(-1, -2), p(1, -2)];
        let order = order_around(&p(0, 0), &ys).unwrap();
        let got: Vec<Point> = order.iter().map(|&i| ys[i].clone()).collect();
        assert_eq!(got, vec![p(-2, 0), p(-1, 2), p(1, 2), p(2, 0), p(1, -2), p(-1, -2)]);
        // Consecutive pairs turn clockwise around the center.
        for w in got.windows(2) {
            assert_eq!(orient(&p(0, 0), &w[0], &w[1]), Orientation::Clockwise);
        }
    }

    #[test]
    fn order_axis_points() {
        let ys = [p(1, 0), p(0, 1), p(-1, 0), p(0, -1)];
        let order = order_around(&p(0, 0), &ys).unwrap();
        assert_eq!(order, vec![2, 1, 0, 3]);
    }

    #[test]
    fn order_collinear_fails() {
        let ys = [p(1, 1), p(0, 3), p(2, 2)];
        assert!(matches!(order_around(&p(0, 0), &ys), Err(Error::Collinear(_))));
    }

    // A hexagon around the origin with no two points on a line through it.
    const GP_HEXAGON: &[(i64, i64)] = &[(2, 0), (1, 2), (-1, 3), (-2, 1), (-2, -3), (2, -3)];

    fn hexagon_with_center(ys: &[(i64, i64)]) -> PointSet {
        let mut pts = vec![(0, 0)];
        pts.extend_from_slice(ys);
        PointSet::from_ints(&pts)
    }

    #[test]
    fn birch_on_hexagon() {
        let ps = hexagon_with_center(GP_HEXAGON);
        assert!(crate::geom::is_general_position(&ps));
        assert!(tukey_depth(&ps[0], &ps) >= 3);
        let first = birch_first(0, &ps).unwrap();
        let second = birch_second(0, &ps).unwrap();
        assert_ne!(first, second);
        assert_eq!(first.singleton(), Some(0));
        assert_eq!(second.singleton(), Some(0));
        let all: Vec<Partition> = enumerate_all(&ps).unwrap().into_iter().map(|(p, _)| p).collect();
        assert!(all.contains(&first));
        assert!(all.contains(&second));
    }

    #[test]
    fn birch_rejects_shallow_point() {
        let ps = hexagon_with_center(GP_HEXAGON);
        assert!(matches!(birch_first(1, &ps), Err(Error::Precondition(_))));
        assert!(matches!(birch_second(1, &ps), Err(Error::Precondition(_))));
    }

    #[test]
    fn vertex_partition_rejects_non_vertex() {
        let ps = hexagon_with_center(GP_HEXAGON);
        let dr = depth_region(&ps, 3).unwrap();
        assert_eq!(dr.region.kind(), RegionKind::Polygon);
        let far = Point::new(crate::geom::rat(1, 7), crate::geom::rat(1, 9));
        assert!(matches!(vertex_partition(&far, &dr, &ps), Err(Error::Structure(_))));
    }

    #[test]
    fn case4_split_count() {
        // Unordered pairs of complementary transversals: 2^3 / 2.
        assert_eq!(2 * 2 * 2 / 2, 4);
    }
}
