//! cY(pi) is connected but not a constant spanner: on ellipse-chain point
//! sets the graph follows the contour of a taller and taller ellipse, so the
//! path between the two unit-distance anchors grows without bound.
//!
//! ```bash
//! cargo run --example ellipse_chain
//! ```

use std::f64::consts::PI;

use cyao::{build_cyao, connectivity, gen_ellipse_chain, spanning_ratio, Aperture};

fn main() {
    println!("{:>6} {:>8} {:>8} {:>12}", "r", "points", "edges", "ratio");
    let mut r = 1.0;
    while r <= 256.0 {
        let pts = gen_ellipse_chain(r).unwrap();
        let g = build_cyao(&pts, Aperture::new(PI).unwrap()).unwrap();
        assert!(connectivity(&g).0);
        let rep = spanning_ratio(&g, &pts).unwrap();
        println!(
            "{r:>6} {:>8} {:>8} {:>12.3}",
            pts.len(),
            rep.edge_count,
            rep.spanning_ratio
        );
        r *= 2.0;
    }
    println!("\nthe ratio grows linearly with r while |pq| stays 1: no constant t works");
}
