//! Exact and high-precision verification of the algebraic spanner argument
//! for aperture 2π/3: the degree-12 polynomial and its largest root t*, the
//! inductive-set quartic, the named construction points, and the inequality
//! chain of both induction cases.

use std::sync::OnceLock;

use thiserror::Error;

mod points;
mod poly;
mod regions;
mod verify;

pub use points::{
    inductive_boundary_radius, named_points, quartic_residual, tan_psi, InductiveSetParams,
    NamedPoints, CERT_EPS,
};
pub use poly::{case1_cubic, rational_to_f64, spanner_polynomial, Polynomial};
pub use regions::{
    max_distance_pair, region_na, region_na_prime, region_nb, sector_a_vstar_b,
};
pub use verify::{
    boundary_point_from_b, lemma1_sweep, run_certificate_suite, theorem1_chain_sweep,
    verify_case1, verify_case2, verify_case2_tightness, verify_lemma1, verify_lemma2,
    Certificate,
};

#[derive(Debug, Error, Clone, Copy, PartialEq)]
pub enum CertError {
    #[error("polynomial has no real root")]
    NoRealRoot,
    #[error("closed forms are undefined for t = {0} (need t > 2)")]
    DomainError(f64),
    #[error("inductive set needs distinct endpoints and t > 1")]
    InvalidInductiveSet,
    #[error("precondition violated: {0}")]
    PreconditionViolated(&'static str),
}

/// The certified spanning constant: the largest real root of the degree-12
/// case polynomial, isolated by Sturm sequences and refined by exact
/// bisection to a bracket of width 1e-12. Computed once per process.
pub fn certified_t_star() -> f64 {
    static T_STAR: OnceLock<f64> = OnceLock::new();
    *T_STAR.get_or_init(|| {
        spanner_polynomial()
            .largest_real_root(1e-12)
            .expect("the case polynomial has real roots")
    })
}
