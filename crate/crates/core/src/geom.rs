//! Exact planar geometry over arbitrary-precision rationals.
//!
//! Every predicate here is decided exactly. There is no floating point
//! anywhere in this module; the only place floats appear in the crate is
//! the SVG renderer.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Index;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar. Always kept in lowest terms with a positive
/// denominator by `num_rational`.
pub type Rational = BigRational;

/// Shorthand for the rational `num / den`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Formats as `num/den`, omitting the denominator when it is one.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

/// Parses `num/den` or a bare integer. Rejects zero denominators and
/// surrounding whitespace.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let ok = |t: &str| {
        let digits = t.strip_prefix('-').unwrap_or(t);
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    if !ok(num) || !ok(den) {
        return None;
    }
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = den.parse().ok()?;
    if den.is_zero() {
        return None;
    }
    Some(Rational::new(num, den))
}

/// A point with exact rational coordinates. Orders lexicographically by
/// `(x, y)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
}

impl Point {
    pub fn new(x: Rational, y: Rational) -> Self {
        Point { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Point::new(int(x), int(y))
    }

    pub fn sub(&self, other: &Point) -> (Rational, Rational) {
        (&self.x - &other.x, &self.y - &other.y)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// An ordered list of points; labels are list indices.
///
/// Coincident points are representable so that degenerate inputs can be
/// inspected and perturbed; use [`is_general_position`] to check.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct PointSet {
    points: Vec<Point>,
}

impl PointSet {
    pub fn new(points: Vec<Point>) -> Self {
        PointSet { points }
    }

    pub fn from_ints(coords: &[(i64, i64)]) -> Self {
        PointSet::new(coords.iter().map(|&(x, y)| Point::from_ints(x, y)).collect())
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Point> {
        self.points.iter()
    }

    pub fn into_points(self) -> Vec<Point> {
        self.points
    }

    /// Index of the first point equal to `p`.
    pub fn position(&self, p: &Point) -> Option<usize> {
        self.points.iter().position(|q| q == p)
    }

    pub fn has_duplicates(&self) -> bool {
        let mut sorted: Vec<&Point> = self.points.iter().collect();
        sorted.sort();
        sorted.windows(2).any(|w| w[0] == w[1])
    }

    pub fn require_general_position(&self) -> Result<()> {
        if is_general_position(self) {
            Ok(())
        } else {
            Err(Error::NotGeneralPosition)
        }
    }

    pub fn require_len(&self, expected: usize) -> Result<()> {
        if self.len() == expected {
            Ok(())
        } else {
            Err(Error::WrongSize { expected, got: self.len() })
        }
    }

    /// Returns the points selected by `indices`.
    pub fn select(&self, indices: &[usize]) -> Vec<Point> {
        indices.iter().map(|&i| self.points[i].clone()).collect()
    }
}

impl Index<usize> for PointSet {
    type Output = Point;
    fn index(&self, i: usize) -> &Point {
        &self.points[i]
    }
}

impl From<Vec<Point>> for PointSet {
    fn from(points: Vec<Point>) -> Self {
        PointSet::new(points)
    }
}

impl<'a> IntoIterator for &'a PointSet {
    type Item = &'a Point;
    type IntoIter = std::slice::Iter<'a, Point>;
    fn into_iter(self) -> Self::IntoIter {
        self.points.iter()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    /// Strictly right of the directed line (clockwise turn).
    Clockwise,
    Collinear,
    /// Strictly left of the directed line (counterclockwise turn).
    CounterClockwise,
}

impl Orientation {
    pub fn signum(self) -> i8 {
        match self {
            Orientation::Clockwise => -1,
            Orientation::Collinear => 0,
            Orientation::CounterClockwise => 1,
        }
    }

    pub fn reverse(self) -> Self {
        match self {
            Orientation::Clockwise => Orientation::CounterClockwise,
            Orientation::Collinear => Orientation::Collinear,
            Orientation::CounterClockwise => Orientation::Clockwise,
        }
    }

    fn of(v: &Rational) -> Self {
        match v.cmp(&Rational::zero()) {
            Ordering::Less => Orientation::Clockwise,
            Ordering::Equal => Orientation::Collinear,
            Ordering::Greater => Orientation::CounterClockwise,
        }
    }
}

fn cross(p: &Point, q: &Point, r: &Point) -> Rational {
    (&q.x - &p.x) * (&r.y - &p.y) - (&q.y - &p.y) * (&r.x - &p.x)
}

/// Magnitude limit for the machine-integer path: differences of two such
/// values fit in 63 bits, so products and their differences fit in `i128`.
const SMALL: i64 = 1 << 61;

/// The value as a machine integer, if it is an integer of magnitude below
/// [`SMALL`].
fn small(r: &Rational) -> Option<i128> {
    if !r.denom().is_one() {
        return None;
    }
    let v = r.numer().to_i64()?;
    (v.abs() < SMALL).then_some(v as i128)
}

fn small_point(p: &Point) -> Option<(i128, i128)> {
    Some((small(&p.x)?, small(&p.y)?))
}

/// Side of `r` relative to the directed line `p -> q`.
pub fn orient(p: &Point, q: &Point, r: &Point) -> Orientation {
    if let (Some(a), Some(b), Some(c)) = (small_point(p), small_point(q), small_point(r)) {
        let v = (b.0 - a.0) * (c.1 - a.1) - (b.1 - a.1) * (c.0 - a.0);
        return match v.cmp(&0) {
            Ordering::Less => Orientation::Clockwise,
            Ordering::Equal => Orientation::Collinear,
            Ordering::Greater => Orientation::CounterClockwise,
        };
    }
    Orientation::of(&cross(p, q, r))
}

/// The kind of a [`ConvexRegion`], by dimension.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RegionKind {
    Empty,
    SinglePoint,
    Segment,
    Polygon,
}

impl RegionKind {
    pub fn name(self) -> &'static str {
        match self {
            RegionKind::Empty => "Empty",
            RegionKind::SinglePoint => "SinglePoint",
            RegionKind::Segment => "Segment",
            RegionKind::Polygon => "Polygon",
        }
    }
}

/// A closed convex region in canonical form.
///
/// Vertices run counterclockwise starting at the lexicographically smallest
/// one, with no duplicates and no three consecutive vertices collinear, so
/// two regions are equal iff their vertex lists are equal. A segment stores
/// its endpoints in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ConvexRegion {
    kind: RegionKind,
    vertices: Vec<Point>,
}

impl ConvexRegion {
    pub fn empty() -> Self {
        ConvexRegion { kind: RegionKind::Empty, vertices: Vec::new() }
    }

    pub fn point(p: Point) -> Self {
        ConvexRegion { kind: RegionKind::SinglePoint, vertices: vec![p] }
    }

    /// Axis-aligned square `[-half, half]^2`.
    pub fn square(half: &Rational) -> Self {
        let lo = -half.clone();
        let hi = half.clone();
        convex_hull(&[
            Point::new(lo.clone(), lo.clone()),
            Point::new(hi.clone(), lo.clone()),
            Point::new(hi.clone(), hi.clone()),
            Point::new(lo, hi),
        ])
    }

    pub fn kind(&self) -> RegionKind {
        self.kind
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn is_empty(&self) -> bool {
        self.kind == RegionKind::Empty
    }

    /// Signed doubled area; zero for anything but a polygon.
    pub fn double_area(&self) -> Rational {
        let n = self.vertices.len();
        if self.kind != RegionKind::Polygon {
            return Rational::zero();
        }
        let mut acc = Rational::zero();
        for i in 0..n {
            let p = &self.vertices[i];
            let q = &self.vertices[(i + 1) % n];
            acc += &p.x * &q.y - &q.x * &p.y;
        }
        acc
    }

    /// Closed half-planes whose intersection is exactly this region.
    /// `None` for the empty region.
    pub fn halfplanes(&self) -> Option<Vec<HalfPlane>> {
        let v = &self.vertices;
        match self.kind {
            RegionKind::Empty => None,
            RegionKind::SinglePoint => {
                let p = &v[0];
                Some(vec![
                    HalfPlane::new(int(1), int(0), p.x.clone()),
                    HalfPlane::new(int(-1), int(0), -p.x.clone()),
                    HalfPlane::new(int(0), int(1), p.y.clone()),
                    HalfPlane::new(int(0), int(-1), -p.y.clone()),
                ])
            }
            RegionKind::Segment => {
                let (a, b) = (&v[0], &v[1]);
                Some(vec![
                    HalfPlane::left_of(a, b),
                    HalfPlane::left_of(b, a),
                    HalfPlane::not_behind(a, b),
                    HalfPlane::not_behind(b, a),
                ])
            }
            RegionKind::Polygon => Some(
                (0..v.len())
                    .map(|i| HalfPlane::left_of(&v[i], &v[(i + 1) % v.len()]))
                    .collect(),
            ),
        }
    }
}

/// The closed half-plane `{(x, y) : a*x + b*y <= c}`.
///
/// Stored as coprime integers (scaled by a positive factor only, since a
/// negative factor would flip the inequality), so equal sets compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfPlane {
    a: Rational,
    b: Rational,
    c: Rational,
}

impl HalfPlane {
    /// Panics if `a` and `b` are both zero.
    pub fn new(a: Rational, b: Rational, c: Rational) -> Self {
        assert!(!(a.is_zero() && b.is_zero()), "degenerate half-plane normal");
        if let (Some(ia), Some(ib), Some(ic)) = (small(&a), small(&b), small(&c)) {
            let g = ia.gcd(&ib).gcd(&ic);
            let norm = |v: i128| Rational::from_integer(BigInt::from(v / g));
            return HalfPlane { a: norm(ia), b: norm(ib), c: norm(ic) };
        }
        let lcm = a.denom().lcm(b.denom()).lcm(c.denom());
        let scale = |r: &Rational| r.numer() * (&lcm / r.denom());
        let (ia, ib, ic) = (scale(&a), scale(&b), scale(&c));
        let g = ia.gcd(&ib).gcd(&ic);
        let norm = |v: BigInt| Rational::from_integer(v / &g);
        HalfPlane { a: norm(ia), b: norm(ib), c: norm(ic) }
    }

    /// Closed half-plane on the left of (or on) the directed line `p -> q`.
    pub fn left_of(p: &Point, q: &Point) -> Self {
        assert!(p != q, "half-plane through coincident points");
        let a = &q.y - &p.y;
        let b = &p.x - &q.x;
        let c = &a * &p.x + &b * &p.y;
        HalfPlane::new(a, b, c)
    }

    /// `{z : (z - p) . (q - p) >= 0}`, the side of the perpendicular at `p`
    /// facing `q`.
    fn not_behind(p: &Point, q: &Point) -> Self {
        let (dx, dy) = q.sub(p);
        let c = -(&dx * &p.x + &dy * &p.y);
        HalfPlane::new(-dx, -dy, c)
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }
    pub fn b(&self) -> &Rational {
        &self.b
    }
    pub fn c(&self) -> &Rational {
        &self.c
    }

    /// Outward normal `(a, b)`.
    pub fn normal(&self) -> Point {
        Point::new(self.a.clone(), self.b.clone())
    }

    /// `a*x + b*y - c`: negative inside, zero on the boundary line.
    pub fn eval(&self, p: &Point) -> Rational {
        if let Some(v) = self.small_eval(p) {
            return Rational::from_integer(BigInt::from(v));
        }
        &self.a * &p.x + &self.b * &p.y - &self.c
    }

    fn small_eval(&self, p: &Point) -> Option<i128> {
        // Coefficients are integers; with small inputs the value fits i128
        // as long as each factor stays below 2^60.
        const LIM: i128 = 1 << 60;
        let vals = [small(&self.a)?, small(&self.b)?, small(&self.c)?, small(&p.x)?, small(&p.y)?];
        vals.iter().all(|v| v.abs() < LIM).then(|| vals[0] * vals[3] + vals[1] * vals[4] - vals[2])
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.side(p) != Ordering::Greater
    }

    /// Sign of [`HalfPlane::eval`].
    pub fn side(&self, p: &Point) -> Ordering {
        match self.small_eval(p) {
            Some(v) => v.cmp(&0),
            None => self.eval(p).cmp(&Rational::zero()),
        }
    }

    pub fn on_boundary(&self, p: &Point) -> bool {
        self.side(p) == Ordering::Equal
    }

    /// The complementary closed half-plane (sharing the boundary line).
    pub fn flipped(&self) -> Self {
        HalfPlane { a: -self.a.clone(), b: -self.b.clone(), c: -self.c.clone() }
    }
}

impl fmt::Display for HalfPlane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*x + {}*y <= {}", self.a, self.b, self.c)
    }
}

/// Unique common point of the closed segments `a1a2` and `b1b2`.
///
/// Returns `Ok(None)` when they are disjoint and [`Error::Overlap`] when
/// they are collinear and share more than one point.
pub fn segment_common_point(a1: &Point, a2: &Point, b1: &Point, b2: &Point) -> Result<Option<Point>> {
    let d1 = orient(a1, a2, b1);
    let d2 = orient(a1, a2, b2);
    if d1 == Orientation::Collinear && d2 == Orientation::Collinear {
        let (alo, ahi) = if a1 <= a2 { (a1, a2) } else { (a2, a1) };
        let (blo, bhi) = if b1 <= b2 { (b1, b2) } else { (b2, b1) };
        let lo = alo.max(blo);
        let hi = ahi.min(bhi);
        return match lo.cmp(hi) {
            Ordering::Greater => Ok(None),
            Ordering::Equal => Ok(Some(lo.clone())),
            Ordering::Less => Err(Error::Overlap),
        };
    }
    let d3 = orient(b1, b2, a1);
    let d4 = orient(b1, b2, a2);
    if d1.signum() * d2.signum() > 0 || d3.signum() * d4.signum() > 0 {
        return Ok(None);
    }
    let (ax, ay) = a2.sub(a1);
    let (bx, by) = b2.sub(b1);
    let (wx, wy) = b1.sub(a1);
    let denom = &ax * &by - &ay * &bx;
    let t = (&wx * &by - &wy * &bx) / denom;
    Ok(Some(Point::new(&a1.x + &t * ax, &a1.y + &t * ay)))
}

/// Convex hull in canonical form (Andrew's monotone chain).
pub fn convex_hull(points: &[Point]) -> ConvexRegion {
    let mut pts: Vec<Point> = points.to_vec();
    pts.sort();
    pts.dedup();
    match pts.len() {
        0 => return ConvexRegion::empty(),
        1 => return ConvexRegion::point(pts.pop().unwrap()),
        _ => {}
    }
    let mut lower: Vec<Point> = Vec::with_capacity(pts.len());
    for p in &pts {
        while lower.len() >= 2
            && orient(&lower[lower.len() - 2], &lower[lower.len() - 1], p) != Orientation::CounterClockwise
        {
            lower.pop();
        }
        lower.push(p.clone());
    }
    let mut upper: Vec<Point> = Vec::with_capacity(pts.len());
    for p in pts.iter().rev() {
        while upper.len() >= 2
            && orient(&upper[upper.len() - 2], &upper[upper.len() - 1], p) != Orientation::CounterClockwise
        {
            upper.pop();
        }
        upper.push(p.clone());
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    if lower.len() == 2 {
        ConvexRegion { kind: RegionKind::Segment, vertices: lower }
    } else {
        ConvexRegion { kind: RegionKind::Polygon, vertices: lower }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Containment {
    Interior,
    Boundary,
    Outside,
}

impl Containment {
    pub fn is_inside(self) -> bool {
        self != Containment::Outside
    }
}

/// Classifies `p` against the closed region `r`. Lower-dimensional regions
/// have no interior in the plane, so their points are `Boundary`.
pub fn region_contains(r: &ConvexRegion, p: &Point) -> Containment {
    let v = r.vertices();
    match r.kind() {
        RegionKind::Empty => Containment::Outside,
        RegionKind::SinglePoint => {
            if &v[0] == p {
                Containment::Boundary
            } else {
                Containment::Outside
            }
        }
        RegionKind::Segment => {
            if orient(&v[0], &v[1], p) == Orientation::Collinear && &v[0] <= p && p <= &v[1] {
                Containment::Boundary
            } else {
                Containment::Outside
            }
        }
        RegionKind::Polygon => {
            let mut on_edge = false;
            for i in 0..v.len() {
                match orient(&v[i], &v[(i + 1) % v.len()], p) {
                    Orientation::Clockwise => return Containment::Outside,
                    Orientation::Collinear => on_edge = true,
                    Orientation::CounterClockwise => {}
                }
            }
            if on_edge {
                Containment::Boundary
            } else {
                Containment::Interior
            }
        }
    }
}

/// `r ∩ h` in canonical form.
pub fn clip_region(r: &ConvexRegion, h: &HalfPlane) -> ConvexRegion {
    let v = r.vertices();
    let sides: Vec<Ordering> = v.iter().map(|p| h.side(p)).collect();
    if sides.iter().all(|s| *s != Ordering::Greater) {
        return r.clone();
    }
    if sides.iter().all(|s| *s == Ordering::Greater) {
        return ConvexRegion::empty();
    }
    let vals: Vec<Rational> = v.iter().map(|p| h.eval(p)).collect();
    let mut kept: Vec<Point> = v
        .iter()
        .zip(&vals)
        .filter(|(_, e)| !e.is_positive())
        .map(|(p, _)| p.clone())
        .collect();
    let edges = match r.kind() {
        RegionKind::Polygon => v.len(),
        RegionKind::Segment => 1,
        _ => 0,
    };
    for i in 0..edges {
        let j = (i + 1) % v.len();
        let (eu, ew) = (&vals[i], &vals[j]);
        if (eu.is_negative() && ew.is_positive()) || (eu.is_positive() && ew.is_negative()) {
            let t = eu / (eu - ew);
            let (dx, dy) = v[j].sub(&v[i]);
            kept.push(Point::new(&v[i].x + &t * dx, &v[i].y + &t * dy));
        }
    }
    convex_hull(&kept)
}

/// Intersection of two convex regions by clipping the first with the
/// bounding half-planes of the second.
pub fn intersect_regions(r: &ConvexRegion, s: &ConvexRegion) -> ConvexRegion {
    if s.kind() == RegionKind::SinglePoint {
        let p = &s.vertices()[0];
        return if region_contains(r, p).is_inside() { s.clone() } else { ConvexRegion::empty() };
    }
    let Some(hps) = s.halfplanes() else {
        return ConvexRegion::empty();
    };
    let mut acc = r.clone();
    for h in &hps {
        if acc.is_empty() {
            break;
        }
        acc = clip_region(&acc, h);
    }
    acc
}

/// True iff all points are distinct and no three are collinear.
pub fn is_general_position(ps: &PointSet) -> bool {
    let p = ps.points();
    let n = p.len();
    for i in 0..n {
        for j in i + 1..n {
            if p[i] == p[j] {
                return false;
            }
            for k in j + 1..n {
                if orient(&p[i], &p[j], &p[k]) == Orientation::Collinear {
                    return false;
                }
            }
        }
    }
    true
}

/// Largest absolute coordinate, or zero for an empty set.
pub fn max_abs_coordinate(points: &[Point]) -> Rational {
    points
        .iter()
        .flat_map(|p| [p.x.abs(), p.y.abs()])
        .max()
        .unwrap_or_else(Rational::zero)
}

/// Strict point-in-triangle test by orientation signs (closed triangle).
pub fn in_triangle(a: &Point, b: &Point, c: &Point, p: &Point) -> bool {
    let s1 = orient(a, b, p).signum();
    let s2 = orient(b, c, p).signum();
    let s3 = orient(c, a, p).signum();
    let has_neg = s1 < 0 || s2 < 0 || s3 < 0;
    let has_pos = s1 > 0 || s2 > 0 || s3 > 0;
    !(has_neg && has_pos)
}
