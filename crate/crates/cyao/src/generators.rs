//! Point-set generators: the adversarial constructions behind the
//! disconnection and non-spanner results, the quadratic-edge-count family,
//! and seeded random instances. Every generator is a deterministic function
//! of its parameters and seed.

use std::collections::BTreeMap;
use std::f64::consts::{PI, TAU};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::geometry::{dist, Point};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GenError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

/// A CLI-addressable generator request.
#[derive(Debug, Clone, PartialEq)]
pub struct GenSpec {
    pub kind: GenKind,
    pub params: BTreeMap<String, f64>,
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenKind {
    EllipseChain,
    DoublePolygon,
    TwoSegments,
    UniformRandom,
    Perturbed,
}

impl GenSpec {
    fn param(&self, name: &str) -> Result<f64, GenError> {
        self.params
            .get(name)
            .copied()
            .ok_or_else(|| GenError::InvalidParameter(format!("missing parameter `{name}`")))
    }

    pub fn generate(&self) -> Result<Vec<Point>, GenError> {
        match self.kind {
            GenKind::EllipseChain => gen_ellipse_chain(self.param("r")?),
            GenKind::DoublePolygon => gen_double_polygon(self.param("epsilon")?),
            GenKind::TwoSegments => {
                let m = self.param("m")?;
                if m.fract() != 0.0 || m < 0.0 {
                    return Err(GenError::InvalidParameter("m must be a nonnegative integer".into()));
                }
                gen_two_segments(self.param("alpha")?, m as usize, self.seed)
            }
            GenKind::UniformRandom => {
                let n = self.param("n")?;
                if n.fract() != 0.0 || n < 1.0 {
                    return Err(GenError::InvalidParameter("n must be a positive integer".into()));
                }
                Ok(gen_uniform(n as usize, self.seed))
            }
            GenKind::Perturbed => {
                let n = self.param("n")?;
                if n.fract() != 0.0 || n < 1.0 {
                    return Err(GenError::InvalidParameter("n must be a positive integer".into()));
                }
                let delta = self.param("delta")?;
                if delta < 0.0 {
                    return Err(GenError::InvalidParameter("delta must be nonnegative".into()));
                }
                let base = gen_uniform(n as usize, self.seed);
                Ok(perturb(&base, delta, self.seed.wrapping_add(1)))
            }
        }
    }
}

fn ellipse_point(r: f64, s: f64) -> Point {
    Point::new(0.5 + 0.5 * s.cos(), r * s.sin())
}

/// Smallest parameter step `ds > 0` (moving from `s` toward `s - ds`) whose
/// chord from `from` has length exactly `target`, by doubling then bisection.
fn next_chord_param(r: f64, s: f64, from: Point, target: f64) -> f64 {
    let chord = |ds: f64| dist(from, ellipse_point(r, s - ds));
    let mut hi = 1e-4;
    while chord(hi) < target {
        hi *= 2.0;
        assert!(hi < PI, "chord search escaped the quarter ellipse");
    }
    let mut lo = hi / 2.0;
    if hi == 1e-4 {
        lo = 0.0;
    }
    for _ in 0..100 {
        let mid = 0.5 * (lo + hi);
        if chord(mid) < target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// The non-spanner construction: p = (0,0) and q = (1,0) on an ellipse with
/// center (1/2, 0), horizontal semi-axis 1/2, and vertical semi-axis r.
/// Chains of points at chord distance exactly 1/2 march up and down from
/// both p and q along the ellipse; marching stops once the two same-side
/// frontiers come closer than 1/2, leaving the closing edge to the graph.
pub fn gen_ellipse_chain(r: f64) -> Result<Vec<Point>, GenError> {
    if !(r >= 1.0) || !r.is_finite() {
        return Err(GenError::InvalidParameter(format!("r = {r}, need r >= 1")));
    }
    let p = Point::new(0.0, 0.0);
    let q = Point::new(1.0, 0.0);
    let mut chain = Vec::new();
    let mut s = PI;
    let mut cur = p;
    // Frontier of the mirrored q-chain is the reflection across x = 1/2, so
    // the same-side frontier distance is |1 - 2x|.
    while (1.0 - 2.0 * cur.x).abs() >= 0.5 {
        let ds = next_chord_param(r, s, cur, 0.5);
        s -= ds;
        cur = ellipse_point(r, s);
        chain.push(cur);
        assert!(chain.len() < 1_000_000, "ellipse chain failed to meet");
    }
    let mut points = vec![p, q];
    for pt in chain {
        points.push(pt);
        points.push(Point::new(1.0 - pt.x, pt.y));
        points.push(Point::new(pt.x, -pt.y));
        points.push(Point::new(1.0 - pt.x, -pt.y));
    }
    Ok(points)
}

/// The disconnection construction: two congruent regular polygons with unit
/// sides and interior angles at least π - ε/2, placed so the minimum
/// distance between them is exactly 2 (twice the side length).
pub fn gen_double_polygon(epsilon: f64) -> Result<Vec<Point>, GenError> {
    if !(epsilon > 0.0 && epsilon <= PI) {
        return Err(GenError::InvalidParameter(format!(
            "epsilon = {epsilon}, need 0 < epsilon <= pi"
        )));
    }
    let mut n = (4.0 * PI / epsilon).ceil() as usize;
    while TAU / n as f64 > epsilon / 2.0 {
        n += 1;
    }
    let radius = 0.5 / (PI / n as f64).sin();
    let first: Vec<Point> = (0..n)
        .map(|i| {
            let ang = TAU * i as f64 / n as f64;
            Point::new(radius * ang.cos(), radius * ang.sin())
        })
        .collect();
    // The copy is point-reflected before translating, which guarantees a
    // leftmost vertex at height 0 facing the first polygon's rightmost
    // vertex, for odd n as well.
    let dx = 2.0 * radius + 2.0;
    let second = first.iter().map(|v| Point::new(dx - v.x, -v.y));
    Ok(first.iter().copied().chain(second).collect())
}

/// The quadratic-edge-count family: the shared corner of two unit segments
/// meeting at angle `alpha`, plus `m` evenly spaced points on each segment.
/// Spacing is jittered by 1e-6 (seeded) to restore general position.
pub fn gen_two_segments(alpha: f64, m: usize, seed: u64) -> Result<Vec<Point>, GenError> {
    if !(alpha > 0.0 && alpha < PI) {
        return Err(GenError::InvalidParameter(format!(
            "alpha = {alpha}, need 0 < alpha < pi"
        )));
    }
    if m < 2 {
        return Err(GenError::InvalidParameter(format!("m = {m}, need m >= 2")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points = vec![Point::new(0.0, 0.0)];
    let (sa, ca) = alpha.sin_cos();
    for dir in [(1.0, 0.0), (ca, sa)] {
        for j in 1..=m {
            let t = j as f64 / m as f64 + 1e-6 * rng.gen_range(-1.0..1.0);
            points.push(Point::new(dir.0 * t, dir.1 * t));
        }
    }
    Ok(points)
}

/// `n` i.i.d. uniform points in the unit square from a seeded generator.
pub fn gen_uniform(n: usize, seed: u64) -> Vec<Point> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| Point::new(rng.gen::<f64>(), rng.gen::<f64>()))
        .collect()
}

/// Adds independent uniform offsets in `[-delta, delta]^2`, deterministically.
pub fn perturb(points: &[Point], delta: f64, seed: u64) -> Vec<Point> {
    if delta == 0.0 {
        return points.to_vec();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    points
        .iter()
        .map(|p| {
            Point::new(
                p.x + rng.gen_range(-delta..=delta),
                p.y + rng.gen_range(-delta..=delta),
            )
        })
        .collect()
}
