//! Worst-case edge count is quadratic: points spread on two segments that
//! meet at an angle alpha connect all-to-all across the segments whenever
//! theta < alpha.
//!
//! ```bash
//! cargo run --example two_segments
//! ```

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};

use cyao::{build_cyao, gen_two_segments, Aperture};

fn main() {
    println!("alpha = pi/2, theta = pi/4");
    println!("{:>6} {:>8} {:>12} {:>12}", "m", "points", "cross edges", "total edges");
    for m in [10usize, 20, 40, 80] {
        let pts = gen_two_segments(FRAC_PI_2, m, 42).unwrap();
        let g = build_cyao(&pts, Aperture::new(FRAC_PI_4).unwrap()).unwrap();
        let cross = g
            .edges()
            .iter()
            .filter(|&&(i, j)| (1..=m).contains(&i) && (m + 1..=2 * m).contains(&j))
            .count();
        println!("{m:>6} {:>8} {cross:>12} {:>12}", pts.len(), g.edge_count());
    }
    println!("\ncross edges = m^2 exactly; the total is m^2 + O(m)");
}
