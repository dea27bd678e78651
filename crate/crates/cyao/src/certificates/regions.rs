//! Boundary sampling of the convex neighbor regions used by the case
//! analysis, and the brute-force maximum-distance oracle over region pairs.
//!
//! All regions live in the normalized frame a = (0,0), b = (1,0). Corner
//! vertices are always included exactly, so a maximum attained at a corner
//! is reported without discretization error.

use rayon::prelude::*;

use crate::geometry::{dist, Point};

use super::points::named_points;
use super::CertError;

fn sample_segment(from: Point, to: Point, count: usize, out: &mut Vec<Point>) {
    for k in 0..=count {
        let t = k as f64 / count as f64;
        out.push(Point::new(
            from.x + t * (to.x - from.x),
            from.y + t * (to.y - from.y),
        ));
    }
}

fn sample_arc(center: Point, radius: f64, a0: f64, a1: f64, count: usize, out: &mut Vec<Point>) {
    for k in 0..=count {
        let t = k as f64 / count as f64;
        let ang = a0 + t * (a1 - a0);
        out.push(Point::new(
            center.x + radius * ang.cos(),
            center.y + radius * ang.sin(),
        ));
    }
}

fn angle_about(p: Point, center: Point) -> f64 {
    (p.y - center.y).atan2(p.x - center.x)
}

fn mirror_x_half(p: Point) -> Point {
    Point::new(1.0 - p.x, p.y)
}

/// Distributes at least `total` samples over boundary pieces proportionally
/// to their length, with every piece getting its endpoints.
fn piece_counts(lengths: &[f64], total: usize) -> Vec<usize> {
    let sum: f64 = lengths.iter().sum();
    lengths
        .iter()
        .map(|&l| ((l / sum) * total as f64).ceil().max(8.0) as usize)
        .collect()
}

/// Boundary samples of N_a = hull(C(a,b,c) \ I_ab): the segments uc and uv
/// plus the unit arc from v to c around a. Corners come first.
pub fn region_na(t: f64, samples: usize) -> Result<Vec<Point>, CertError> {
    let np = named_points(t)?;
    let a = Point::new(0.0, 0.0);
    let mut out = vec![np.u, np.v, np.c];
    let arc_len = (angle_about(np.c, a) - angle_about(np.v, a)).abs();
    let lens = [dist(np.u, np.c), dist(np.u, np.v), arc_len];
    let counts = piece_counts(&lens, samples);
    sample_segment(np.u, np.c, counts[0], &mut out);
    sample_segment(np.u, np.v, counts[1], &mut out);
    sample_arc(
        a,
        1.0,
        angle_about(np.v, a),
        angle_about(np.c, a),
        counts[2],
        &mut out,
    );
    Ok(out)
}

/// Boundary samples of N_b = hull(C(b,c,a) \ I_ba), the mirror image of N_a
/// across the vertical line x = 1/2.
pub fn region_nb(t: f64, samples: usize) -> Result<Vec<Point>, CertError> {
    Ok(region_na(t, samples)?.into_iter().map(mirror_x_half).collect())
}

/// Boundary samples of N'_a = hull(C(a,c',b) \ I_ab), bounded by the chord
/// v u', the segment u'c', and the unit arc from c' to v around a.
pub fn region_na_prime(t: f64, samples: usize) -> Result<Vec<Point>, CertError> {
    let np = named_points(t)?;
    let a = Point::new(0.0, 0.0);
    let mut out = vec![np.u_prime, np.v, np.c_prime];
    let arc_len = (angle_about(np.c_prime, a) - angle_about(np.v, a)).abs();
    let lens = [dist(np.v, np.u_prime), dist(np.u_prime, np.c_prime), arc_len];
    let counts = piece_counts(&lens, samples);
    sample_segment(np.v, np.u_prime, counts[0], &mut out);
    sample_segment(np.u_prime, np.c_prime, counts[1], &mut out);
    sample_arc(
        a,
        1.0,
        angle_about(np.c_prime, a),
        angle_about(np.v, a),
        counts[2],
        &mut out,
    );
    Ok(out)
}

/// Polar grid over the circular sector C(a, v*, b): apex a, radius 1, from
/// the ray through v* counter-clockwise to the ray through b.
pub fn sector_a_vstar_b(t: f64, samples: usize) -> Result<Vec<Point>, CertError> {
    let np = named_points(t)?;
    let a0 = angle_about(np.v_star, Point::new(0.0, 0.0));
    let side = (samples as f64).sqrt().ceil() as usize;
    let mut out = Vec::with_capacity((side + 1) * (side + 1));
    for i in 0..=side {
        let ang = a0 + (0.0 - a0) * i as f64 / side as f64;
        for j in 0..=side {
            let r = j as f64 / side as f64;
            out.push(Point::new(r * ang.cos(), r * ang.sin()));
        }
    }
    Ok(out)
}

/// The pair of samples (one from each set) at maximum distance, resolved
/// deterministically: the first pair in scan order attaining the maximum.
pub fn max_distance_pair(xs: &[Point], ys: &[Point]) -> (f64, Point, Point) {
    let per_x: Vec<(f64, usize, usize)> = xs
        .par_iter()
        .enumerate()
        .map(|(i, &x)| {
            let mut best = (f64::NEG_INFINITY, i, 0);
            for (j, &y) in ys.iter().enumerate() {
                let d = dist(x, y);
                if d > best.0 {
                    best = (d, i, j);
                }
            }
            best
        })
        .collect();
    let mut best = (f64::NEG_INFINITY, 0, 0);
    for cand in per_x {
        if cand.0 > best.0 {
            best = cand;
        }
    }
    (best.0, xs[best.1], ys[best.2])
}
