//! Closed forms for every named quantity of the 2π/3 case analysis, in the
//! normalized frame a = (0,0), b = (1,0), |ab| = 1: the inductive set
//! I_ab = {p : |ap| + t|pb| ≤ t}, its quartic boundary equation, and the
//! points c, c*, u, w, v, v*, u', c' together with the rotation angle ψ.

use crate::geometry::{dist, Point};

use super::CertError;

/// Tolerance for the defining inequality of an inductive set.
pub const CERT_EPS: f64 = 1e-12;

/// The inductive set of `a` with respect to `b` at stretch `t`:
/// `{p : |ap| + t|pb| ≤ t|ab|}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InductiveSetParams {
    pub a: Point,
    pub b: Point,
    pub t: f64,
}

impl InductiveSetParams {
    pub fn new(a: Point, b: Point, t: f64) -> Result<InductiveSetParams, CertError> {
        if a == b || !(t > 1.0) {
            return Err(CertError::InvalidInductiveSet);
        }
        Ok(InductiveSetParams { a, b, t })
    }

    /// Membership by the defining inequality, within [`CERT_EPS`].
    pub fn contains(&self, p: Point) -> bool {
        let ab = dist(self.a, self.b);
        dist(self.a, p) + self.t * dist(p, self.b) <= self.t * ab + CERT_EPS
    }

    /// Signed slack `t|ab| - |ap| - t|pb|`; nonnegative inside.
    pub fn slack(&self, p: Point) -> f64 {
        let ab = dist(self.a, self.b);
        self.t * ab - dist(self.a, p) - self.t * dist(p, self.b)
    }
}

/// Left-hand side of the quartic boundary equation of I_ab in the normalized
/// frame. Zero exactly on the squared-away boundary curve; calibrated so the
/// value is positive at the interior point b.
pub fn quartic_residual(x: f64, y: f64, t: f64) -> f64 {
    let t2 = t * t;
    let a = x * x + y * y;
    let m = (x - 2.0) * x + y * y;
    m * m * t2 * t2 + a * a - 2.0 * (2.0 + m) * a * t2
}

/// Distance from `a` to the boundary of I_ab along the direction `phi`
/// (measured from the positive x-axis). `None` when the ray never meets the
/// boundary, i.e. when `cos(phi) ≤ 1/t`.
pub fn inductive_boundary_radius(t: f64, phi: f64) -> Option<f64> {
    let c = phi.cos();
    if t * c <= 1.0 {
        return None;
    }
    Some(2.0 * t * (t * c - 1.0) / (t * t - 1.0))
}

/// Every named point of the case analysis, evaluated at stretch `t`.
#[derive(Debug, Clone, Copy)]
pub struct NamedPoints {
    /// Upper intersection of the cone boundaries, apex of the equilateral
    /// triangle over ab.
    pub c: Point,
    /// Lower intersection, mirror of `c`.
    pub c_star: Point,
    /// Boundary of I_ab on the segment ac.
    pub u: Point,
    /// Boundary of I_ba on the segment bc.
    pub w: Point,
    /// Boundary of I_ab on the upper unit arc.
    pub v: Point,
    /// Boundary of I_ab on the lower unit arc.
    pub v_star: Point,
    /// Boundary of I_ab on the segment ac'.
    pub u_prime: Point,
    /// `c` rotated counter-clockwise about `a` by ψ.
    pub c_prime: Point,
    /// Rotation angle ψ = ∠ v* a c*, radians.
    pub psi: f64,
    /// tan ψ by the closed-form expression.
    pub tan_psi: f64,
}

/// tan ψ as a closed form in t.
pub fn tan_psi(t: f64) -> f64 {
    let p = t * t + 2.0 * t - 1.0;
    let q = (t - 1.0) * ((t + 1.0) * (3.0 * t - 1.0)).sqrt();
    let s3 = 3f64.sqrt();
    (s3 * p - q) / (p + s3 * q)
}

/// Evaluates all closed forms at the given `t`. The coordinates degenerate
/// for t ≤ 2 (u falls back onto a), so that range is rejected.
pub fn named_points(t: f64) -> Result<NamedPoints, CertError> {
    if !(t > 2.0) {
        return Err(CertError::DomainError(t));
    }
    let s3 = 3f64.sqrt();
    let mu = t * (t - 2.0) / (t * t - 1.0);
    let c = Point::new(0.5, s3 / 2.0);
    let c_star = Point::new(0.5, -s3 / 2.0);
    let u = Point::new(mu / 2.0, s3 * mu / 2.0);
    let w = Point::new(1.0 - mu / 2.0, s3 * mu / 2.0);

    let p = t * t + 2.0 * t - 1.0;
    let q = (t - 1.0) * ((t + 1.0) * (3.0 * t - 1.0)).sqrt();
    let v_star = Point::new(p / (2.0 * t * t), -q / (2.0 * t * t));
    let v = Point::new(v_star.x, -v_star.y);

    let tpsi = tan_psi(t);
    let psi = tpsi.atan();

    let t2 = t * t;
    let c_prime = Point::new((-p + s3 * q) / (4.0 * t2), (s3 * p + q) / (4.0 * t2));
    let x_up = (5.0 * t2 * t2 - 2.0 * t2 * t + 2.0 * t2 + 2.0 * t - 1.0
        - s3 * (t - 1.0) * (t2 + 4.0 * t - 1.0) * ((t + 1.0) * (3.0 * t - 1.0)).sqrt())
        / (4.0 * t2 * (t2 - 1.0));
    let u_prime = Point::new(x_up, (std::f64::consts::FRAC_PI_3 + psi).tan() * x_up);

    Ok(NamedPoints {
        c,
        c_star,
        u,
        w,
        v,
        v_star,
        u_prime,
        c_prime,
        psi,
        tan_psi: tpsi,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certificates::certified_t_star;
    use crate::geometry::dist;
    use std::f64::consts::FRAC_PI_3;

    const A: Point = Point { x: 0.0, y: 0.0 };
    const B: Point = Point { x: 1.0, y: 0.0 };

    #[test]
    fn inductive_contains_examples() {
        let params = InductiveSetParams::new(A, B, 3.0).unwrap();
        assert!(params.contains(B));
        // a itself sits exactly on the boundary.
        assert!(params.contains(A));
        // Any point != a on the circle around b with radius |ab| is outside.
        for k in 1..12 {
            let ang = 0.5 * k as f64;
            let p = Point::new(1.0 + ang.cos(), ang.sin());
            if dist(p, A) > 1e-6 {
                assert!(!params.contains(p), "angle {ang}");
            }
        }
        assert!(InductiveSetParams::new(A, A, 3.0).is_err());
        assert!(InductiveSetParams::new(A, B, 1.0).is_err());
    }

    #[test]
    fn quartic_sign_calibration_at_b() {
        let t = 4.0;
        // Residual at b equals (t^2 - 1)^2 > 0.
        let r = quartic_residual(1.0, 0.0, t);
        assert!((r - (t * t - 1.0) * (t * t - 1.0)).abs() < 1e-9);
    }

    #[test]
    fn quartic_sign_matches_inductive_inequality_inside_disk() {
        // Within the disk around b of radius |ab| the residual is positive
        // exactly on the strict inside of I_ab.
        let t = certified_t_star();
        let params = InductiveSetParams::new(A, B, t).unwrap();
        let mut state = 42u64;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 11) as f64 / (1u64 << 53) as f64
        };
        let mut checked = 0;
        while checked < 1000 {
            let ang = next() * std::f64::consts::TAU;
            let rad = next();
            let p = Point::new(1.0 + rad * ang.cos(), rad * ang.sin());
            let slack = params.slack(p);
            if slack.abs() < 1e-6 {
                continue; // too close to the boundary to have a reliable sign
            }
            let res = quartic_residual(p.x, p.y, t);
            assert_eq!(res > 0.0, slack > 0.0, "p = {p:?}");
            checked += 1;
        }
    }

    #[test]
    fn boundary_radius_satisfies_both_routes() {
        let t = certified_t_star();
        let params = InductiveSetParams::new(A, B, t).unwrap();
        for k in 0..200 {
            let phi = -1.4 + 2.8 * k as f64 / 199.0;
            if let Some(r) = inductive_boundary_radius(t, phi) {
                let p = Point::new(r * phi.cos(), r * phi.sin());
                assert!(params.slack(p).abs() < 1e-9, "phi {phi}");
                assert!(quartic_residual(p.x, p.y, t).abs() < 1e-7);
            }
        }
        assert!(inductive_boundary_radius(t, 1.6).is_none());
    }

    #[test]
    fn named_points_match_printed_values() {
        let t = certified_t_star();
        let np = named_points(t).unwrap();
        let close = |p: Point, x: f64, y: f64| (p.x - x).abs() < 1e-4 && (p.y - y).abs() < 1e-4;
        assert!(close(np.u, 0.3438, 0.5956));
        assert!(close(np.w, 0.6561, 0.5956));
        assert!(close(np.v_star, 0.6518, -0.7583));
        assert!(close(np.u_prime, 0.1124, 0.3207));
        assert!(close(np.c_prime, 0.3308, 0.9436));
        assert!((np.tan_psi - 0.1885).abs() < 1e-4);
        assert!((np.psi.to_degrees() - 10.6800).abs() < 0.01);
    }

    #[test]
    fn named_points_internal_consistency() {
        let t = certified_t_star();
        let np = named_points(t).unwrap();
        let mu = t * (t - 2.0) / (t * t - 1.0);
        // u lies on segment ac at distance mu from a.
        let cross = np.c.x * np.u.y - np.c.y * np.u.x;
        assert!(cross.abs() < 1e-12);
        assert!((dist(A, np.u) - mu).abs() < 1e-12);
        // v* lies on the unit circle around a.
        assert!((dist(A, np.v_star) - 1.0).abs() < 1e-12);
        // psi = pi/3 - angle(b, a, v*).
        let bav = (-np.v_star.y).atan2(np.v_star.x);
        assert!((np.psi - (FRAC_PI_3 - bav)).abs() < 1e-12);
        // c' is c rotated by psi about a.
        let rotated = np.c.rotated_about(A, np.psi);
        assert!(dist(rotated, np.c_prime) < 1e-12);
        // u' agrees with the independent radial route along the ray at
        // pi/3 + psi.
        let phi = FRAC_PI_3 + np.psi;
        let r = inductive_boundary_radius(t, phi).unwrap();
        let radial = Point::new(r * phi.cos(), r * phi.sin());
        assert!(dist(radial, np.u_prime) < 1e-12);
        // v is the mirror of v*.
        assert_eq!(np.v.x, np.v_star.x);
        assert_eq!(np.v.y, -np.v_star.y);
    }

    #[test]
    fn named_points_domain() {
        assert!(matches!(named_points(2.0), Err(CertError::DomainError(_))));
        assert!(matches!(named_points(1.5), Err(CertError::DomainError(_))));
        assert!(named_points(2.0 + 1e-9).is_ok());
    }
}
