//! Continuous Yao graphs.
//!
//! Given planar points and an aperture θ, the continuous Yao graph cY(θ)
//! connects p to q whenever some cone of aperture θ apexed at p contains q
//! as its closest point — the cone may take any orientation. This crate
//! builds cY(θ) (and classic Yao graphs for comparison), measures spanning
//! ratios and connectivity, generates the adversarial point families that
//! separate the regimes θ ≤ 2π/3 / θ ≤ π / θ > π, and machine-checks the
//! algebraic certificates behind the 2π/3 spanning bound, including the
//! degree-12 polynomial whose largest root ≈ 6.0411 is the proven constant.
//!
//! Start with the runnable examples (`cargo run --example ...`) or the
//! `cyao` binary (`generate`, `build`, `analyze`, `verify`, `sweep`,
//! `plot`).

pub mod analysis;
pub mod certificates;
pub mod cli;
pub mod generators;
pub mod geometry;
pub mod graph;
pub mod io;
pub mod svg;

pub use analysis::{
    connectivity, dilation_upper_bound, shortest_path_lengths, spanning_ratio, SpannerReport,
};
pub use certificates::{certified_t_star, run_certificate_suite, Certificate};
pub use generators::{
    gen_double_polygon, gen_ellipse_chain, gen_two_segments, gen_uniform, perturb, GenKind,
    GenSpec,
};
pub use geometry::{
    ccw_gap, check_general_position, cw_gap, direction, dist, in_cone, Angle, Aperture, Point,
};
pub use graph::{build_cyao, build_cyao_oracle, build_yao, edge_gaps, has_edge, Graph};
