//! Planar primitives shared by every other module: distances, directions,
//! angular gap arithmetic, cone membership, and general-position diagnostics.
//!
//! All angles are canonical radians in `[0, 2π)`. Cones are closed sets:
//! both boundary rays belong to the cone. Under general position this is
//! indistinguishable from the open convention, and it keeps constructions
//! with exact distance ties (squares, regular polygons) well-defined.

use std::f64::consts::TAU;

use thiserror::Error;

/// Absolute tolerance for angle comparisons.
pub const ANGLE_EPS: f64 = 1e-12;

/// Absolute tolerance on squared distances used by the general-position check.
pub const GP_EPS: f64 = 1e-9;

#[derive(Debug, Error, Clone, Copy, PartialEq, Eq)]
pub enum GeometryError {
    #[error("coincident points have no direction")]
    CoincidentPoints,
    #[error("aperture must lie in (0, 2*pi]")]
    InvalidAperture,
    #[error("coordinates must be finite")]
    NonFiniteCoordinate,
}

/// A point in the plane. Coordinates are finite.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub fn new(x: f64, y: f64) -> Point {
        debug_assert!(x.is_finite() && y.is_finite());
        Point { x, y }
    }

    /// Rotates `self` by `angle` radians counter-clockwise about `center`.
    pub fn rotated_about(self, center: Point, angle: f64) -> Point {
        let (s, c) = angle.sin_cos();
        let dx = self.x - center.x;
        let dy = self.y - center.y;
        Point::new(center.x + c * dx - s * dy, center.y + s * dx + c * dy)
    }
}

/// Euclidean distance between `p` and `q`.
pub fn dist(p: Point, q: Point) -> f64 {
    dist2(p, q).sqrt()
}

/// Squared Euclidean distance. Comparisons between distances are done on
/// squared values so that exact input ties stay exact.
pub fn dist2(p: Point, q: Point) -> f64 {
    let dx = p.x - q.x;
    let dy = p.y - q.y;
    dx * dx + dy * dy
}

/// An angle normalized into `[0, 2π)`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Angle(f64);

impl Angle {
    /// Wraps an arbitrary finite radian value into `[0, 2π)`.
    pub fn from_radians(radians: f64) -> Angle {
        debug_assert!(radians.is_finite());
        let mut r = radians.rem_euclid(TAU);
        // rem_euclid of a tiny negative value can round up to TAU itself.
        if r >= TAU {
            r = 0.0;
        }
        Angle(r)
    }

    pub fn radians(self) -> f64 {
        self.0
    }

    /// Circular equality within [`ANGLE_EPS`].
    pub fn approx_eq(self, other: Angle) -> bool {
        let d = (self.0 - other.0).abs();
        d <= ANGLE_EPS || (TAU - d) <= ANGLE_EPS
    }
}

/// The angular width of a cone, in `(0, 2π]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Aperture(f64);

impl Aperture {
    pub fn new(theta: f64) -> Result<Aperture, GeometryError> {
        if !(theta.is_finite() && theta > 0.0 && theta <= TAU) {
            return Err(GeometryError::InvalidAperture);
        }
        Ok(Aperture(theta))
    }

    pub fn radians(self) -> f64 {
        self.0
    }
}

/// Direction of the vector `q - p`, counter-clockwise from the positive x-axis.
pub fn direction(p: Point, q: Point) -> Result<Angle, GeometryError> {
    if p == q {
        return Err(GeometryError::CoincidentPoints);
    }
    Ok(Angle::from_radians((q.y - p.y).atan2(q.x - p.x)))
}

/// Angular distance traversed clockwise from `from` to `to`, in `[0, 2π)`.
pub fn cw_gap(from: Angle, to: Angle) -> f64 {
    let ccw = ccw_gap(from, to);
    if ccw == 0.0 {
        0.0
    } else {
        TAU - ccw
    }
}

/// Angular distance traversed counter-clockwise from `from` to `to`, in `[0, 2π)`.
pub fn ccw_gap(from: Angle, to: Angle) -> f64 {
    let mut d = (to.radians() - from.radians()).rem_euclid(TAU);
    if d >= TAU {
        d = 0.0;
    }
    d
}

/// Whether `p` lies in the closed cone with the given apex, whose boundary
/// rays point at `orientation` and `orientation + aperture`.
pub fn in_cone(
    apex: Point,
    orientation: Angle,
    aperture: Aperture,
    p: Point,
) -> Result<bool, GeometryError> {
    let dir = direction(apex, p)?;
    Ok(ccw_gap(orientation, dir) <= aperture.radians())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ViolationKind {
    EqualDistance,
    DuplicatePoint,
}

/// One general-position violation: two points in `pair` that the apex cannot
/// order by distance, or an outright duplicate pair (apex == first of pair).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Violation {
    pub apex: usize,
    pub pair: (usize, usize),
    pub kind: ViolationKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneralPositionReport {
    pub violations: Vec<Violation>,
}

impl GeneralPositionReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Flags every apex that sees two other points at equal distance (within
/// [`GP_EPS`] on squared distances) and every duplicate point pair.
pub fn check_general_position(points: &[Point]) -> GeneralPositionReport {
    let n = points.len();
    let mut violations = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            if dist2(points[i], points[j]) <= GP_EPS * GP_EPS {
                violations.push(Violation {
                    apex: i,
                    pair: (i, j),
                    kind: ViolationKind::DuplicatePoint,
                });
            }
        }
    }
    let mut by_dist: Vec<(f64, usize)> = Vec::with_capacity(n.saturating_sub(1));
    for apex in 0..n {
        by_dist.clear();
        for (i, &p) in points.iter().enumerate() {
            if i != apex {
                by_dist.push((dist2(points[apex], p), i));
            }
        }
        by_dist.sort_by(|a, b| a.partial_cmp(b).unwrap());
        for pair in by_dist.windows(2) {
            if (pair[1].0 - pair[0].0).abs() <= GP_EPS {
                violations.push(Violation {
                    apex,
                    pair: (pair[0].1.min(pair[1].1), pair[0].1.max(pair[1].1)),
                    kind: ViolationKind::EqualDistance,
                });
            }
        }
    }
    GeneralPositionReport { violations }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, FRAC_PI_4, PI};

    fn pt(x: f64, y: f64) -> Point {
        Point::new(x, y)
    }

    #[test]
    fn dist_examples() {
        assert_eq!(dist(pt(0.0, 0.0), pt(1.0, 0.0)), 1.0);
        assert_eq!(dist(pt(0.0, 0.0), pt(0.0, 0.0)), 0.0);
        // |ac| = 1 for the equilateral triangle over the unit segment ab.
        let c = pt(0.5, 3f64.sqrt() / 2.0);
        assert!((dist(pt(0.0, 0.0), c) - 1.0).abs() < 1e-15);
        assert!((dist(c, pt(1.0, 0.0)) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn direction_examples() {
        let d = direction(pt(0.0, 0.0), pt(1.0, 0.0)).unwrap();
        assert_eq!(d.radians(), 0.0);
        let d = direction(pt(0.0, 0.0), pt(0.0, 1.0)).unwrap();
        assert_eq!(d.radians(), FRAC_PI_2);
        let d = direction(pt(0.0, 0.0), pt(0.5, 3f64.sqrt() / 2.0)).unwrap();
        assert!((d.radians() - FRAC_PI_3).abs() < 1e-15);
        assert_eq!(
            direction(pt(1.0, 2.0), pt(1.0, 2.0)),
            Err(GeometryError::CoincidentPoints)
        );
    }

    #[test]
    fn gap_examples() {
        let a = Angle::from_radians(FRAC_PI_4);
        assert!((cw_gap(a, Angle::from_radians(0.0)) - FRAC_PI_4).abs() < 1e-15);
        assert!((ccw_gap(a, Angle::from_radians(FRAC_PI_2)) - FRAC_PI_4).abs() < 1e-15);
        // cw gap the long way round: 2*pi minus the ccw gap.
        let g = cw_gap(Angle::from_radians(0.0), Angle::from_radians(FRAC_PI_2));
        assert!((g - 3.0 * FRAC_PI_2).abs() < 1e-15);
        let same = Angle::from_radians(1.25);
        assert_eq!(cw_gap(same, same), 0.0);
        assert_eq!(ccw_gap(same, same), 0.0);
    }

    #[test]
    fn angle_normalization_is_idempotent_and_canonical() {
        for raw in [-7.0, -1e-18, 0.0, 1.0, TAU, TAU + 1.0, 123.456] {
            let a = Angle::from_radians(raw);
            assert!(a.radians() >= 0.0 && a.radians() < TAU, "raw {raw}");
            let again = Angle::from_radians(a.radians());
            assert_eq!(a.radians(), again.radians());
        }
    }

    #[test]
    fn in_cone_examples() {
        let apex = pt(0.0, 0.0);
        let o = Angle::from_radians(0.0);
        let quarter = Aperture::new(FRAC_PI_2).unwrap();
        assert!(in_cone(apex, o, quarter, pt(1.0, 1.0)).unwrap());
        assert!(!in_cone(apex, o, quarter, pt(-1.0, 0.0)).unwrap());
        // Boundary ray belongs to the closed cone.
        assert!(in_cone(apex, o, quarter, pt(0.0, 1.0)).unwrap());
        assert_eq!(
            in_cone(apex, o, quarter, apex),
            Err(GeometryError::CoincidentPoints)
        );
    }

    #[test]
    fn in_cone_is_rotation_covariant() {
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 11) as f64 / (1u64 << 53) as f64
        };
        for _ in 0..500 {
            let apex = pt(next() * 4.0 - 2.0, next() * 4.0 - 2.0);
            let p = pt(next() * 4.0 - 2.0, next() * 4.0 - 2.0);
            if apex == p {
                continue;
            }
            let o = Angle::from_radians(next() * TAU);
            let ap = Aperture::new(next() * TAU * 0.999 + 1e-6).unwrap();
            let base = in_cone(apex, o, ap, p).unwrap();
            let rot = next() * TAU;
            let origin = pt(0.0, 0.0);
            // Skip near-boundary configurations; rotation perturbs at 1e-16.
            let gap = ccw_gap(o, direction(apex, p).unwrap());
            if (gap - ap.radians()).abs() < 1e-9 {
                continue;
            }
            let turned = in_cone(
                apex.rotated_about(origin, rot),
                Angle::from_radians(o.radians() + rot),
                ap,
                p.rotated_about(origin, rot),
            )
            .unwrap();
            assert_eq!(base, turned);
        }
    }

    #[test]
    fn general_position_examples() {
        let ok = check_general_position(&[pt(0.0, 0.0), pt(1.0, 0.0), pt(3.0, 0.0)]);
        assert!(ok.ok());

        let bad = check_general_position(&[pt(0.0, 0.0), pt(1.0, 0.0), pt(0.0, 1.0)]);
        assert_eq!(bad.violations.len(), 1);
        assert_eq!(bad.violations[0].apex, 0);
        assert_eq!(bad.violations[0].kind, ViolationKind::EqualDistance);

        // Each corner of the unit square sees its two neighbors at distance 1.
        let square = [pt(0.0, 0.0), pt(1.0, 0.0), pt(1.0, 1.0), pt(0.0, 1.0)];
        let rep = check_general_position(&square);
        let apexes: Vec<usize> = rep
            .violations
            .iter()
            .filter(|v| v.kind == ViolationKind::EqualDistance)
            .map(|v| v.apex)
            .collect();
        assert_eq!(apexes, vec![0, 1, 2, 3]);

        let dup = check_general_position(&[pt(0.0, 0.0), pt(0.0, 0.0)]);
        assert_eq!(dup.violations[0].kind, ViolationKind::DuplicatePoint);
    }

    #[test]
    fn pi_over_2_direction_boundary() {
        // 90 degrees exactly: atan2(1, 0) is exact, the gap to the boundary is 0.
        let apex = pt(0.0, 0.0);
        let d = direction(apex, pt(0.0, 1.0)).unwrap();
        assert_eq!(ccw_gap(Angle::from_radians(0.0), d), FRAC_PI_2);
        assert_eq!(ccw_gap(d, Angle::from_radians(PI)), FRAC_PI_2);
    }
}
