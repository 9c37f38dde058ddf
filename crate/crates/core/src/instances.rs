//! Seeded instance generators, perturbation of degenerate input, and a
//! small descent search for point sets with few Tverberg partitions.
//!
//! All randomness comes from [`SplitMix64`], so a seed reproduces the same
//! instance bit for bit on every platform and in any language that
//! implements the same recurrence:
//!
//! ```text
//! state = state + 0x9E3779B97F4A7C15            (wrapping)
//! z = state
//! z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9      (wrapping)
//! z = (z ^ (z >> 27)) * 0x94D049BB133111EB      (wrapping)
//! output z ^ (z >> 31)
//! ```
//!
//! Bounded integers are drawn as `output % span` (the modulo bias is
//! negligible at the spans used here and keeps the mapping trivial to port).

use num_bigint::BigInt;

use crate::depth::depth_region;
use crate::error::{Error, Result};
use crate::generalized::MAX_R;
use crate::geom::{int, is_general_position, orient, rat, Orientation, Point, PointSet, Rational, RegionKind};
use crate::oracle::{enumerate_all, Shape};

/// Total resamples allowed when rejecting points that break general
/// position.
pub const RESAMPLE_BUDGET: usize = 10_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Seed(pub u64);

impl From<u64> for Seed {
    fn from(v: u64) -> Self {
        Seed(v)
    }
}

#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: Seed) -> Self {
        SplitMix64 { state: seed.0 }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform-ish integer in `lo..=hi`.
    pub fn range(&mut self, lo: i64, hi: i64) -> i64 {
        debug_assert!(lo <= hi);
        let span = (hi - lo) as u64 + 1;
        lo + (self.next_u64() % span) as i64
    }

    pub fn below(&mut self, n: usize) -> usize {
        (self.next_u64() % n as u64) as usize
    }

    /// Fisher-Yates, from the back.
    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            let j = self.below(i + 1);
            items.swap(i, j);
        }
    }
}

/// Parameters of a generator run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GenSpec {
    Random { n: usize, bound: i64 },
    ExtremalClusters { radius: Rational },
    Case4 { r: usize },
}

impl GenSpec {
    pub fn generate(&self, seed: Seed) -> Result<PointSet> {
        match self {
            GenSpec::Random { n, bound } => gen_random(seed, *n, *bound),
            GenSpec::ExtremalClusters { radius } => gen_extremal_clusters(seed, radius),
            GenSpec::Case4 { r } => gen_case4(seed, *r),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            GenSpec::Random { .. } => "random",
            GenSpec::ExtremalClusters { .. } => "extremal",
            GenSpec::Case4 { .. } => "case4",
        }
    }

    /// File stem encoding kind, seed and parameters, e.g.
    /// `random-s1-n7-b1000` or `extremal-s3-rad1_100`.
    pub fn file_stem(&self, seed: Seed) -> String {
        let params = match self {
            GenSpec::Random { n, bound } => format!("n{n}-b{bound}"),
            GenSpec::ExtremalClusters { radius } => format!("rad{}", radius.to_string().replace('/', "_")),
            GenSpec::Case4 { r } => format!("r{r}"),
        };
        format!("{}-s{}-{}", self.kind(), seed.0, params)
    }
}

/// Whether `p` can join `pts` without a coincidence or collinear triple.
fn fits(pts: &[Point], p: &Point) -> bool {
    for (i, a) in pts.iter().enumerate() {
        if a == p {
            return false;
        }
        for b in &pts[i + 1..] {
            if orient(a, b, p) == Orientation::Collinear {
                return false;
            }
        }
    }
    true
}

/// Draws points one at a time, resampling any point that would break
/// general position.
fn sample_general(
    rng: &mut SplitMix64,
    mut pts: Vec<Point>,
    count: usize,
    mut draw: impl FnMut(&mut SplitMix64, usize) -> Point,
) -> Result<Vec<Point>> {
    let mut resamples = 0;
    for i in 0..count {
        loop {
            let p = draw(rng, i);
            if fits(&pts, &p) {
                pts.push(p);
                break;
            }
            resamples += 1;
            if resamples > RESAMPLE_BUDGET {
                return Err(Error::Exhaustion(format!("no general-position point after {RESAMPLE_BUDGET} resamples")));
            }
        }
    }
    Ok(pts)
}

/// `n` lattice points uniform in `[-bound, bound]^2`, in general position.
pub fn gen_random(seed: Seed, n: usize, bound: i64) -> Result<PointSet> {
    if n == 0 || bound < (n * n) as i64 {
        return Err(Error::Precondition(format!("need n >= 1 and bound >= n^2, got n={n}, bound={bound}")));
    }
    let mut rng = SplitMix64::new(seed);
    let pts = sample_general(&mut rng, Vec::with_capacity(n), n, |rng, _| {
        Point::from_ints(rng.range(-bound, bound), rng.range(-bound, bound))
    })?;
    Ok(PointSet::new(pts))
}

const CLUSTER_ATTEMPTS: usize = 30;

/// Three tight pairs at the corners of a fixed triangle plus one point
/// near its centroid (label 6). Such a set has exactly four Tverberg
/// partitions, all with the central point as the singleton; the generator
/// checks this with the oracle and shrinks the radius until it holds.
pub fn gen_extremal_clusters(seed: Seed, radius: &Rational) -> Result<PointSet> {
    if *radius <= int(0) || *radius > rat(1, 100) {
        return Err(Error::Precondition(format!("cluster radius {radius} outside (0, 1/100]")));
    }
    let corners = [Point::from_ints(0, 0), Point::from_ints(100, 0), Point::from_ints(50, 90)];
    let centroid = Point::from_ints(50, 30);
    let mut rng = SplitMix64::new(seed);
    let mut radius = radius.clone();
    for _ in 0..CLUSTER_ATTEMPTS {
        // Offsets up to radius/2 per coordinate keep every point within
        // `radius` of its anchor.
        let half = &radius / int(2);
        let jitter = |rng: &mut SplitMix64, anchor: &Point| {
            let dx = rat(rng.range(-1000, 1000), 1000) * &half;
            let dy = rat(rng.range(-1000, 1000), 1000) * &half;
            Point::new(&anchor.x + dx, &anchor.y + dy)
        };
        let mut pts = Vec::with_capacity(7);
        for c in &corners {
            pts.push(jitter(&mut rng, c));
            pts.push(jitter(&mut rng, c));
        }
        pts.push(jitter(&mut rng, &centroid));
        let ps = perturb(&PointSet::new(pts), Seed(rng.next_u64()))?;
        let found = enumerate_all(&ps)?;
        if found.len() == 4 && found.iter().all(|(p, w)| w.shape == Shape::S331 && p.singleton() == Some(6)) {
            return Ok(ps);
        }
        radius /= int(2);
    }
    Err(Error::Exhaustion("no cluster instance with exactly four partitions".into()))
}

const CASE4_ATTEMPTS: usize = 100;

/// `3r - 2` points whose depth-`r` region is exactly the origin.
///
/// The lines through the origin with directions (1,0), (1,2) and (-1,2)
/// cut the plane into six sectors; `r - 1` points go strictly inside each
/// of three alternating sectors. Labels are shuffled.
pub fn gen_case4(seed: Seed, r: usize) -> Result<PointSet> {
    if !(2..=MAX_R).contains(&r) {
        return Err(Error::Precondition(format!("r = {r} outside 2..={MAX_R}")));
    }
    // Bounding rays (start, end) of the alternating sectors.
    let sectors = [((1, 0), (1, 2)), ((-1, 2), (-1, 0)), ((-1, -2), (1, -2))];
    let origin = Point::from_ints(0, 0);
    let mut rng = SplitMix64::new(seed);
    for _ in 0..CASE4_ATTEMPTS {
        let draw = |rng: &mut SplitMix64, i: usize| {
            let ((ux, uy), (wx, wy)) = sectors[i % 3];
            let a = rng.range(1, 60);
            let b = rng.range(1, 60);
            Point::from_ints(a * ux + b * wx, a * uy + b * wy)
        };
        let mut pts = sample_general(&mut rng, vec![origin.clone()], 3 * (r - 1), draw)?;
        rng.shuffle(&mut pts);
        let ps = PointSet::new(pts);
        let dr = depth_region(&ps, r)?;
        if dr.region.kind() == RegionKind::SinglePoint && dr.region.vertices()[0] == origin {
            return Ok(ps);
        }
    }
    Err(Error::Exhaustion(format!("no case-4 instance for r = {r}")))
}

const PERTURB_ATTEMPTS: u32 = 6;

/// Moves a degenerate point set into general position by rational offsets
/// of magnitude at most `2^-t` per coordinate (`t = 20`, then 40, 80, ...
/// on retry). Sets already in general position are returned unchanged.
pub fn perturb(ps: &PointSet, seed: Seed) -> Result<PointSet> {
    if is_general_position(ps) {
        return Ok(ps.clone());
    }
    let mut rng = SplitMix64::new(seed);
    for attempt in 0..PERTURB_ATTEMPTS {
        let t = 20u32 << attempt;
        let den = Rational::from_integer(BigInt::from(1024) << t as usize);
        let offset = |rng: &mut SplitMix64| Rational::from_integer(BigInt::from(rng.range(-1024, 1024))) / &den;
        let moved: Vec<Point> = ps
            .iter()
            .map(|p| {
                let dx = offset(&mut rng);
                let dy = offset(&mut rng);
                Point::new(&p.x + dx, &p.y + dy)
            })
            .collect();
        let moved = PointSet::new(moved);
        if is_general_position(&moved) {
            return Ok(moved);
        }
    }
    Err(Error::Exhaustion("perturbation never reached general position".into()))
}

/// Hill descent on the number of Tverberg partitions of seven points.
///
/// Starts from `gen_random(seed, 7, 1000)` and makes `iterations - 1`
/// single-point lattice moves, keeping a move only if it preserves general
/// position and strictly lowers the count. Stops early at four, which is
/// never beaten.
pub fn minimize_count(seed: Seed, iterations: usize) -> Result<(PointSet, usize)> {
    if iterations == 0 {
        return Err(Error::Precondition("iterations must be at least 1".into()));
    }
    let mut rng = SplitMix64::new(seed);
    let mut best = gen_random(Seed(rng.next_u64()), 7, 1000)?;
    let mut count = enumerate_all(&best)?.len();
    for _ in 1..iterations {
        if count <= 4 {
            break;
        }
        let idx = rng.below(7);
        let step = [4, 40, 400][rng.below(3)];
        let dx = rng.range(-step, step);
        let dy = rng.range(-step, step);
        let mut pts = best.points().to_vec();
        pts[idx] = Point::new(&pts[idx].x + int(dx), &pts[idx].y + int(dy));
        let cand = PointSet::new(pts);
        if !is_general_position(&cand) {
            continue;
        }
        let c = enumerate_all(&cand)?.len();
        if c < count {
            best = cand;
            count = c;
        }
    }
    Ok((best, count))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;

    #[test]
    fn splitmix_reference_values() {
        // Reference outputs of SplitMix64 seeded with 0.
        let mut rng = SplitMix64::new(Seed(0));
        assert_eq!(rng.next_u64(), 0xE220_A839_7B1D_CDAF);
        assert_eq!(rng.next_u64(), 0x6E78_9E6A_A1B9_65F4);
        assert_eq!(rng.next_u64(), 0x06C4_5D18_8009_454F);
    }

    #[test]
    fn random_is_deterministic_and_general() {
        let a = gen_random(Seed(1), 7, 1000).unwrap();
        let b = gen_random(Seed(1), 7, 1000).unwrap();
        assert_eq!(a, b);
        assert!(is_general_position(&a));
        assert_ne!(a, gen_random(Seed(2), 7, 1000).unwrap());
    }

    #[test]
    fn random_rejects_small_bound() {
        assert!(matches!(gen_random(Seed(1), 7, 48), Err(Error::Precondition(_))));
        assert!(matches!(gen_random(Seed(1), 0, 48), Err(Error::Precondition(_))));
    }

    #[test]
    fn perturb_identity_on_general_input() {
        let ps = gen_random(Seed(5), 7, 100).unwrap();
        assert_eq!(perturb(&ps, Seed(9)).unwrap(), ps);
    }

    #[test]
    fn perturb_fixes_collinear_and_stays_close() {
        let ps = PointSet::from_ints(&[(0, 0), (1, 1), (2, 2), (5, 0), (0, 7), (-3, 4), (6, 9)]);
        assert!(!is_general_position(&ps));
        let q = perturb(&ps, Seed(3)).unwrap();
        assert!(is_general_position(&q));
        let eps = Rational::from_integer(BigInt::from(1)) / Rational::from_integer(BigInt::from(1) << 20usize);
        for (a, b) in ps.iter().zip(q.iter()) {
            assert!((&a.x - &b.x).abs() <= eps);
            assert!((&a.y - &b.y).abs() <= eps);
        }
    }

    #[test]
    fn perturb_all_coincident() {
        let ps = PointSet::from_ints(&[(3, 3); 7]);
        let q = perturb(&ps, Seed(11)).unwrap();
        assert!(is_general_position(&q));
    }

    #[test]
    fn case4_small_r() {
        let ps = gen_case4(Seed(1), 2).unwrap();
        assert_eq!(ps.len(), 4);
        let dr = depth_region(&ps, 2).unwrap();
        assert_eq!(dr.region.vertices(), &[Point::from_ints(0, 0)]);
        assert!(gen_case4(Seed(1), 1).is_err());
        assert!(gen_case4(Seed(1), MAX_R + 1).is_err());
    }

    #[test]
    fn file_stems() {
        assert_eq!(GenSpec::Random { n: 7, bound: 1000 }.file_stem(Seed(1)), "random-s1-n7-b1000");
        assert_eq!(GenSpec::ExtremalClusters { radius: rat(1, 100) }.file_stem(Seed(2)), "extremal-s2-rad1_100");
        assert_eq!(GenSpec::Case4 { r: 3 }.file_stem(Seed(4)), "case4-s4-r3");
    }

    #[test]
    fn minimize_single_iteration_is_start() {
        let (ps, count) = minimize_count(Seed(7), 1).unwrap();
        let mut rng = SplitMix64::new(Seed(7));
        let start = gen_random(Seed(rng.next_u64()), 7, 1000).unwrap();
        assert_eq!(ps, start);
        assert_eq!(count, enumerate_all(&start).unwrap().len());
        assert!(count >= 4);
    }
}
