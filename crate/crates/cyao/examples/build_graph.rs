//! Build the continuous Yao graph of a small point set at several apertures
//! and show how the edge set thins as the cone widens.
//!
//! ```bash
//! cargo run --example build_graph
//! ```

use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, PI, TAU};

use cyao::{build_cyao, edge_gaps, Aperture, Point};

fn main() {
    let points = vec![
        Point::new(0.0, 0.0),
        Point::new(1.0, 0.1),
        Point::new(0.4, 0.9),
        Point::new(1.6, 0.8),
        Point::new(0.9, 1.7),
        Point::new(2.2, 0.2),
    ];

    for theta in [FRAC_PI_3, FRAC_PI_2, 2.0 * FRAC_PI_3, PI, TAU] {
        let g = build_cyao(&points, Aperture::new(theta).unwrap()).unwrap();
        println!("theta = {theta:.4} rad -> {} edges: {:?}", g.edge_count(), g.edges());
    }

    // The decision behind one edge: the angular clearance around the
    // candidate direction before a strictly closer point blocks the cone.
    let gaps = edge_gaps(&points, 0, 3);
    println!(
        "\npair (0, 3): cw clearance {:.4} rad, ccw clearance {:.4} rad",
        gaps.cw, gaps.ccw
    );
    println!("an edge exists at aperture theta iff cw + ccw > theta");
}
