//! Tukey depth of a point and the depth-`k` region `C_k(X)`.
//!
//! `C_k(X)` is the set of points `p` such that every closed half-plane
//! containing `p` contains at least `k` points of `X`. For input in general
//! position it is the intersection of all closed half-planes bounded by a
//! line through two input points that contain at least `n - k + 1` points.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::geom::{
    clip_region, convex_hull, max_abs_coordinate, orient, ConvexRegion, HalfPlane, Orientation, Point, PointSet,
    Rational, RegionKind,
};

/// `C_k(X)` together with the half-planes that cut it out.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DepthRegion {
    pub k: usize,
    pub region: ConvexRegion,
    pub constraints: Vec<HalfPlane>,
}

/// Tukey depth of `p` with respect to `ps`: the fewest points of `ps` in a
/// closed half-plane containing `p`.
///
/// Only half-planes with `p` on the boundary need to be considered. The
/// count is piecewise constant in the boundary direction and changes only
/// at directions parallel to some `q - p`, so it suffices to test, for each
/// such line through `p`, both sides of the line rotated infinitesimally in
/// both senses. Points equal to `p` always count.
pub fn tukey_depth(p: &Point, ps: &PointSet) -> usize {
    let coincident = ps.iter().filter(|q| *q == p).count();
    let others: Vec<&Point> = ps.iter().filter(|q| *q != p).collect();
    if others.is_empty() {
        return coincident;
    }
    let mut best = usize::MAX;
    for q in &others {
        let (dx, dy) = q.sub(p);
        let sides: Vec<(Orientation, Option<bool>)> = others
            .iter()
            .map(|z| {
                let o = orient(p, q, z);
                let ahead = if o == Orientation::Collinear {
                    let (zx, zy) = z.sub(p);
                    Some((&dx * zx + &dy * zy) > Rational::zero())
                } else {
                    None
                };
                (o, ahead)
            })
            .collect();
        for side in [Orientation::CounterClockwise, Orientation::Clockwise] {
            for forward in [true, false] {
                let count = sides
                    .iter()
                    .filter(|(o, ahead)| match ahead {
                        None => *o == side,
                        Some(a) => *a == forward,
                    })
                    .count();
                best = best.min(count);
            }
        }
    }
    best + coincident
}

/// Computes `C_k(ps)` exactly. Requires general position.
pub fn depth_region(ps: &PointSet, k: usize) -> Result<DepthRegion> {
    if k == 0 {
        return Err(Error::Precondition("depth level k must be positive".into()));
    }
    ps.require_general_position()?;
    let n = ps.len();
    if n <= 2 {
        // No line through two points has a strict side to speak of; for
        // one or two points only C_1 is nonempty.
        let region = if k == 1 { convex_hull(ps.points()) } else { ConvexRegion::empty() };
        let constraints = if n == 2 {
            vec![HalfPlane::left_of(&ps[0], &ps[1]), HalfPlane::left_of(&ps[1], &ps[0])]
        } else {
            Vec::new()
        };
        return Ok(DepthRegion { k, region, constraints });
    }
    let need = (n + 1).saturating_sub(k);
    let mut constraints = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let h = HalfPlane::left_of(&ps[i], &ps[j]);
            if ps.iter().filter(|q| h.contains(q)).count() >= need {
                constraints.push(h);
            }
        }
    }
    constraints.sort();
    constraints.dedup();
    let half = Rational::one() + max_abs_coordinate(ps.points()) * Rational::from_integer(4.into());
    let mut region = ConvexRegion::square(&half);
    for h in &constraints {
        if region.is_empty() {
            break;
        }
        region = clip_region(&region, h);
    }
    Ok(DepthRegion { k, region, constraints })
}

/// Outcome of classifying `C_3` of seven points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum C3Shape {
    /// `C_3` is the single input point with this index.
    PointOfX(usize),
    TwoDimensional,
}

/// Checks that `C_3` of seven points in general position is either a
/// single input point or two-dimensional.
pub fn check_c3_dichotomy(ps: &PointSet) -> Result<C3Shape> {
    ps.require_len(7)?;
    let dr = depth_region(ps, 3)?;
    classify_c3(ps, &dr)
}

pub(crate) fn classify_c3(ps: &PointSet, dr: &DepthRegion) -> Result<C3Shape> {
    match dr.region.kind() {
        RegionKind::Polygon => Ok(C3Shape::TwoDimensional),
        RegionKind::SinglePoint => {
            let v = &dr.region.vertices()[0];
            ps.position(v)
                .map(C3Shape::PointOfX)
                .ok_or_else(|| Error::LemmaViolation(format!("C_3 is the point {v}, which is not an input point")))
        }
        RegionKind::Segment => Err(Error::LemmaViolation("C_3 is a segment".into())),
        RegionKind::Empty => Err(Error::LemmaViolation("C_3 is empty".into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{region_contains, Containment};

    fn unit_triangle() -> PointSet {
        PointSet::from_ints(&[(0, 0), (1, 0), (0, 1)])
    }

    fn square() -> PointSet {
        PointSet::from_ints(&[(0, 0), (2, 0), (2, 2), (0, 2)])
    }

    /// Brute force: half-planes `u . (z - p) >= 0` over a dense fan of
    /// integer directions. Gives an upper bound on the depth that is exact
    /// whenever the fan hits every open arc of directions.
    fn sampled_depth(p: &Point, ps: &PointSet) -> usize {
        let mut best = usize::MAX;
        for ux in -12i64..=12 {
            for uy in -12i64..=12 {
                if ux == 0 && uy == 0 {
                    continue;
                }
                let u = Point::from_ints(ux, uy);
                let c = ps
                    .iter()
                    .filter(|z| {
                        let (zx, zy) = z.sub(p);
                        &u.x * zx + &u.y * zy >= Rational::zero()
                    })
                    .count();
                best = best.min(c);
            }
        }
        best
    }

    #[test]
    fn depth_examples() {
        assert_eq!(tukey_depth(&Point::from_ints(5, 5), &unit_triangle()), 0);
        assert_eq!(tukey_depth(&Point::from_ints(0, 0), &unit_triangle()), 1);
        assert_eq!(sampled_depth(&Point::from_ints(1, 1), &square()), 2);
        assert_eq!(tukey_depth(&Point::from_ints(1, 1), &square()), 2);
    }

    #[test]
    fn depth_matches_sampling_on_small_sets() {
        let ps = PointSet::from_ints(&[(0, 0), (7, 1), (3, 6), (-2, 4), (5, -3), (2, 2), (-4, -1)]);
        for x in -5..=8 {
            for y in -4..=7 {
                let q = Point::from_ints(x, y);
                assert_eq!(tukey_depth(&q, &ps), sampled_depth(&q, &ps), "at {q}");
            }
        }
    }

    #[test]
    fn coincident_point_counts() {
        let ps = unit_triangle();
        assert_eq!(tukey_depth(&ps[0], &ps), 1);
        let single = PointSet::from_ints(&[(3, 3)]);
        assert_eq!(tukey_depth(&Point::from_ints(3, 3), &single), 1);
        assert_eq!(tukey_depth(&Point::from_ints(3, 4), &single), 0);
    }

    #[test]
    fn region_examples() {
        let t = unit_triangle();
        assert_eq!(depth_region(&t, 1).unwrap().region, convex_hull(t.points()));
        assert!(depth_region(&t, 2).unwrap().region.is_empty());
        let dr = depth_region(&square(), 2).unwrap();
        assert_eq!(dr.region, ConvexRegion::point(Point::from_ints(1, 1)));
        assert_eq!(tukey_depth(&Point::from_ints(1, 1), &square()), 2);
    }

    #[test]
    fn triangle_interior_has_depth_one() {
        // Sampling oracle for the empty C_2 of a triangle.
        let t = unit_triangle();
        for (x, y) in [(1, 3), (1, 4), (1, 5), (2, 5)] {
            let q = Point::new(crate::geom::rat(x, 10), crate::geom::rat(y, 10));
            assert_eq!(region_contains(&convex_hull(t.points()), &q), Containment::Interior);
            assert_eq!(tukey_depth(&q, &t), 1);
        }
    }

    #[test]
    fn rejects_degenerate_input() {
        let ps = PointSet::from_ints(&[(0, 0), (1, 1), (2, 2), (0, 5)]);
        assert!(matches!(depth_region(&ps, 1), Err(Error::NotGeneralPosition)));
        assert!(depth_region(&square(), 0).is_err());
    }

    #[test]
    fn small_sets() {
        let one = PointSet::from_ints(&[(1, 2)]);
        assert_eq!(depth_region(&one, 1).unwrap().region.kind(), RegionKind::SinglePoint);
        let two = PointSet::from_ints(&[(1, 2), (3, 3)]);
        assert_eq!(depth_region(&two, 1).unwrap().region.kind(), RegionKind::Segment);
        assert!(depth_region(&two, 2).unwrap().region.is_empty());
    }

    #[test]
    fn dichotomy_rejects_wrong_size() {
        assert!(matches!(check_c3_dichotomy(&square()), Err(Error::WrongSize { .. })));
    }
}
