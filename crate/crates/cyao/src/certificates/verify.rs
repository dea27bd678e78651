//! The certificate suite: machine checks for every printed value and
//! inequality of the 2π/3 case analysis. Root signs are certified in exact
//! rational arithmetic; geometric quantities are checked in f64 against the
//! stated tolerances.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::geometry::{dist, Point};

use super::points::{named_points, quartic_residual, InductiveSetParams};
use super::poly::{case1_cubic, rational_to_f64, spanner_polynomial};
use super::regions::{max_distance_pair, region_na, region_na_prime, region_nb, sector_a_vstar_b};
use super::{certified_t_star, CertError};

/// One machine-checked quantity: `pass` iff `|residual| <= tolerance`.
/// `claimed` carries the printed reference value where one exists.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct Certificate {
    pub name: String,
    pub claimed: Option<f64>,
    pub computed: f64,
    pub residual: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl Certificate {
    /// Two-sided check against a reference value.
    fn against(name: &str, claimed: f64, computed: f64, tolerance: f64) -> Certificate {
        let residual = computed - claimed;
        Certificate {
            name: name.to_string(),
            claimed: Some(claimed),
            computed,
            residual,
            tolerance,
            pass: residual.abs() <= tolerance,
        }
    }

    /// One-sided check: `violation` is the clamped amount by which the
    /// asserted inequality is broken (zero when it holds).
    fn bound(name: &str, computed: f64, violation: f64, tolerance: f64) -> Certificate {
        let residual = violation.max(0.0);
        Certificate {
            name: name.to_string(),
            claimed: None,
            computed,
            residual,
            tolerance,
            pass: residual <= tolerance,
        }
    }
}

/// Checks one admissible triple (|ac| <= |ab|, angle bac <= alpha < pi)
/// against the shrinking bound `|bc| <= |ab| - (1 - 2 sin(alpha/2)) |ac|`.
pub fn verify_lemma1(a: Point, b: Point, c: Point, alpha: f64) -> Result<Certificate, CertError> {
    let ab = dist(a, b);
    let ac = dist(a, c);
    if ac > ab {
        return Err(CertError::PreconditionViolated("|ac| <= |ab|"));
    }
    if !(alpha < std::f64::consts::PI) {
        return Err(CertError::PreconditionViolated("alpha < pi"));
    }
    if ac > 0.0 && ab > 0.0 {
        let cosang = ((b.x - a.x) * (c.x - a.x) + (b.y - a.y) * (c.y - a.y)) / (ab * ac);
        let ang = cosang.clamp(-1.0, 1.0).acos();
        if ang > alpha {
            return Err(CertError::PreconditionViolated("angle bac <= alpha"));
        }
    }
    let bound = ab - (1.0 - 2.0 * (alpha / 2.0).sin()) * ac;
    let bc = dist(b, c);
    Ok(Certificate::bound("lemma1", bc, bc - bound, 1e-12))
}

/// Sweeps `count` seeded admissible triples through [`verify_lemma1`] and
/// reports the worst violation.
pub fn lemma1_sweep(count: usize, seed: u64) -> Certificate {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = 0.0f64;
    let mut done = 0;
    while done < count {
        let a = Point::new(rng.gen::<f64>(), rng.gen::<f64>());
        let b = Point::new(rng.gen::<f64>(), rng.gen::<f64>());
        if a == b {
            continue;
        }
        let alpha = rng.gen_range(1e-6..std::f64::consts::PI - 1e-6);
        let dir_ab = (b.y - a.y).atan2(b.x - a.x);
        let delta = rng.gen_range(-alpha..=alpha);
        let radius = rng.gen::<f64>() * dist(a, b);
        let c = Point::new(
            a.x + radius * (dir_ab + delta).cos(),
            a.y + radius * (dir_ab + delta).sin(),
        );
        match verify_lemma1(a, b, c, alpha) {
            Ok(cert) => {
                worst = worst.max(cert.residual);
                done += 1;
            }
            // Floating-point roundoff can push a sampled triple just outside
            // the preconditions; resample.
            Err(_) => continue,
        }
    }
    Certificate::bound("lemma1_sweep", worst, worst, 1e-12)
}

/// Boundary point of I_ab on the ray from b at angle `phi_from_b`, found by
/// bisecting the quartic residual on the radius. `None` if the ray shows no
/// sign change inside the closed unit disk around b (only happens toward a).
pub fn boundary_point_from_b(t: f64, phi_from_b: f64) -> Option<Point> {
    let (s, c) = phi_from_b.sin_cos();
    let at = |rho: f64| Point::new(1.0 + rho * c, rho * s);
    // Positive at b by calibration; negative on the circle |pb| = 1 except
    // at the single point a.
    if quartic_residual(at(1.0).x, at(1.0).y, t) >= 0.0 {
        return None;
    }
    let (mut lo, mut hi) = (0.0f64, 1.0f64);
    while hi - lo > 1e-14 {
        let mid = 0.5 * (lo + hi);
        let p = at(mid);
        if quartic_residual(p.x, p.y, t) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Some(at(0.5 * (lo + hi)))
}

/// The inductive set stays strictly inside the disk with center b and
/// radius |ab|. Samples the boundary by a polar sweep around b.
pub fn verify_lemma2(t: f64, samples: usize) -> Result<Vec<Certificate>, CertError> {
    if !(t > 1.0) {
        return Err(CertError::DomainError(t));
    }
    let a = Point::new(0.0, 0.0);
    let b = Point::new(1.0, 0.0);
    let mut max_bp = 0.0f64;
    let mut max_eq = 0.0f64;
    let mut found = 0usize;
    for k in 0..samples {
        // Offset grid: never aims exactly at a, the one admissible boundary
        // point on the circle.
        let phi = std::f64::consts::TAU * (k as f64 + 0.5) / samples as f64;
        if let Some(p) = boundary_point_from_b(t, phi) {
            found += 1;
            max_bp = max_bp.max(dist(b, p));
            max_eq = max_eq.max((dist(a, p) + t * dist(p, b) - t).abs());
        }
    }
    assert!(found > samples / 2, "boundary sweep found too few roots");
    let label = |base: &str| format!("{base}_t{t:.4}");
    Ok(vec![
        Certificate::bound(&label("lemma2_inside_disk"), max_bp, max_bp - 1.0, 0.0),
        Certificate::bound(&label("lemma2_inductive_equality"), max_eq, max_eq, 1e-9),
    ])
}

/// Same-side-neighbors certificates: the three extremal lengths
/// |uc| = |wc| = |uw| coincide, the sampled maximum N_a-N_b pair stays
/// below them, and the path inequality reduces to the cubic.
pub fn verify_case1(t: f64, samples: usize) -> Result<Vec<Certificate>, CertError> {
    let np = named_points(t)?;
    let uc = dist(np.u, np.c);
    let wc = dist(np.w, np.c);
    let uw = dist(np.u, np.w);
    let spread = (uc - wc).abs().max((uc - uw).abs());

    let na = region_na(t, samples)?;
    let nb = region_nb(t, samples)?;
    let (max_d, _, _) = max_distance_pair(&na, &nb);

    let mu = t * (t - 2.0) / (t * t - 1.0);
    let slack = t - (2.0 + t * (1.0 - mu));
    let cubic = case1_cubic().eval_f64(t);
    let identity = (slack * (t * t - 1.0) - cubic).abs();

    Ok(vec![
        Certificate::bound("lemma3_lengths", uc, spread, 1e-12),
        Certificate::bound("case1_max_pair", max_d, max_d - uc, 1e-6),
        Certificate::bound("case1_inequality", slack, -slack, 1e-9),
        Certificate::bound("case1_cubic_equivalence", cubic, identity, 1e-9),
    ])
}

/// Opposite-side-neighbors certificates: the sampled maximum N'_a-N_b pair,
/// its location at (u', c), and the containment of the sector C(a, v*, b)
/// in I_ab.
pub fn verify_case2(t: f64, samples: usize) -> Result<Vec<Certificate>, CertError> {
    let np = named_points(t)?;
    let upc = dist(np.u_prime, np.c);

    let nap = region_na_prime(t, samples)?;
    let nb = region_nb(t, samples)?;
    let (max_d, arg_a, arg_b) = max_distance_pair(&nap, &nb);
    let arg_err = dist(arg_a, np.u_prime).max(dist(arg_b, np.c));

    let params = InductiveSetParams::new(Point::new(0.0, 0.0), Point::new(1.0, 0.0), t)?;
    let mut sector_violation = 0.0f64;
    for p in sector_a_vstar_b(t, samples)? {
        sector_violation = sector_violation.max(-params.slack(p));
    }

    let slack = t - (2.0 + t * upc);
    Ok(vec![
        Certificate::bound("case2_max_pair", max_d, max_d - upc, 1e-6),
        Certificate::bound("case2_argmax_at_u_prime_c", max_d, arg_err, 1e-6),
        Certificate::bound("case2_sector_in_inductive_set", sector_violation, sector_violation, 1e-9),
        Certificate::bound("case2_inequality", slack, -slack, 1e-9),
    ])
}

/// At the certified root the opposite-side path inequality is tight:
/// `2 + t |u'c| = t` within 1e-9.
pub fn verify_case2_tightness(t: f64) -> Result<Certificate, CertError> {
    let np = named_points(t)?;
    let upc = dist(np.u_prime, np.c);
    Ok(Certificate::against(
        "case2_tightness",
        0.0,
        2.0 + t * upc - t,
        1e-9,
    ))
}

/// The inductive chain of the small-cone theorem: for aperture θ < 2π/3 and
/// any admissible neighbor n_a (|a n_a| ≤ |ab|, ∠ n_a a b ≤ θ/2),
/// `|a n_a| + s |b n_a| <= s |ab|` with `s = 1/(1 - 2 sin(θ/4))`.
pub fn theorem1_chain_sweep(count: usize, seed: u64) -> Certificate {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let a = Point::new(0.0, 0.0);
    let mut worst = 0.0f64;
    for _ in 0..count {
        let theta = rng.gen_range(1e-6..2.0 * std::f64::consts::FRAC_PI_3 - 1e-9);
        let s = 1.0 / (1.0 - 2.0 * (theta / 4.0).sin());
        let dir_b = rng.gen_range(0.0..std::f64::consts::TAU);
        let ab = rng.gen_range(1e-6..2.0f64);
        let b = Point::new(ab * dir_b.cos(), ab * dir_b.sin());
        let delta = rng.gen_range(-theta / 2.0..=theta / 2.0);
        let r = rng.gen::<f64>() * ab;
        let na = Point::new(r * (dir_b + delta).cos(), r * (dir_b + delta).sin());
        let lhs = dist(a, na) + s * dist(b, na);
        worst = worst.max((lhs - s * ab) / s.max(1.0));
    }
    Certificate::bound("theorem1_chain", worst, worst, 1e-9)
}

/// Runs the complete certificate suite at the certified root. `samples`
/// controls region-boundary density (points per region boundary) and the
/// sector grid size.
pub fn run_certificate_suite(samples: usize) -> Vec<Certificate> {
    let mut certs = Vec::new();
    let p = spanner_polynomial();
    let t = certified_t_star();
    certs.push(Certificate::against("largest_root_p", 6.0411, t, 5e-5));

    // Exact sign change across the refined root, in rational arithmetic.
    let tol = BigRational::new(BigInt::from(1), BigInt::from(1_000_000_000_000i64));
    let (lo, hi) = p
        .largest_real_root_bracket(&tol)
        .expect("spanner polynomial has real roots");
    let eps = BigRational::new(BigInt::from(1), BigInt::from(10_000));
    let below = p.eval(&(&lo - &eps));
    let above = p.eval(&(&hi + &eps));
    let sign_product = below.signum() * above.signum();
    certs.push(Certificate::against(
        "p_sign_change_at_root",
        -1.0,
        rational_to_f64(&sign_product),
        0.0,
    ));

    let cubic = case1_cubic();
    let cubic_root = cubic
        .largest_real_root(1e-10)
        .expect("cubic has real roots");
    certs.push(Certificate::against(
        "cubic_largest_root",
        3.8661982625090225,
        cubic_root,
        1e-6,
    ));
    let cubic_at_t = cubic.eval_f64(t);
    certs.push(Certificate::bound(
        "case1_cubic_positive_at_root",
        cubic_at_t,
        -cubic_at_t,
        0.0,
    ));
    certs.push(Certificate::bound(
        "root_exceeds_cubic_root",
        t,
        cubic_root - t,
        0.0,
    ));

    let np = named_points(t).expect("t* > 2");
    for (name, claimed, computed) in [
        ("point_u_x", 0.3438, np.u.x),
        ("point_u_y", 0.5956, np.u.y),
        ("point_w_x", 0.6561, np.w.x),
        ("point_w_y", 0.5956, np.w.y),
        ("point_v_star_x", 0.6518, np.v_star.x),
        ("point_v_star_y", -0.7583, np.v_star.y),
        ("point_u_prime_x", 0.1124, np.u_prime.x),
        ("point_u_prime_y", 0.3207, np.u_prime.y),
        ("point_c_prime_x", 0.3308, np.c_prime.x),
        ("point_c_prime_y", 0.9436, np.c_prime.y),
    ] {
        certs.push(Certificate::against(name, claimed, computed, 1e-4));
    }
    certs.push(Certificate::against("tan_psi", 0.1885, np.tan_psi, 1e-4));
    certs.push(Certificate::against(
        "psi_degrees",
        10.6800,
        np.psi.to_degrees(),
        0.01,
    ));

    let qu = quartic_residual(np.u.x, np.u.y, t).abs();
    let qv = quartic_residual(np.v_star.x, np.v_star.y, t).abs();
    certs.push(Certificate::bound("quartic_at_u", qu, qu, 1e-9));
    certs.push(Certificate::bound("quartic_at_v_star", qv, qv, 1e-9));

    let cross = (np.c.x * np.u.y - np.c.y * np.u.x).abs();
    certs.push(Certificate::bound("u_on_segment_ac", cross, cross, 1e-12));
    let mu = t * (t - 2.0) / (t * t - 1.0);
    let au = (dist(Point::new(0.0, 0.0), np.u) - mu).abs();
    certs.push(Certificate::bound("au_equals_mu", au, au, 1e-12));
    let av = (dist(Point::new(0.0, 0.0), np.v_star) - 1.0).abs();
    certs.push(Certificate::bound("v_star_on_unit_circle", av, av, 1e-12));
    let bav = (-np.v_star.y).atan2(np.v_star.x);
    let psi_geo = std::f64::consts::FRAC_PI_3 - bav;
    let psi_dev = (np.psi - psi_geo).abs();
    certs.push(Certificate::bound("psi_identity", psi_dev, psi_dev, 1e-12));

    certs.extend(verify_case1(t, samples).expect("t* > 2"));
    certs.extend(verify_case2(t, samples).expect("t* > 2"));
    certs.push(verify_case2_tightness(t).expect("t* > 2"));
    certs.extend(verify_lemma2(t, samples).expect("t* > 1"));
    certs.extend(verify_lemma2(2.0, samples).expect("2 > 1"));

    certs.push(lemma1_sweep(100_000, 0xC0FFEE));
    certs.push(theorem1_chain_sweep(100_000, 0xBEEF));
    certs
}
