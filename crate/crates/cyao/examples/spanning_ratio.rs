//! Measure spanning ratios of cY(theta) on random point sets and compare
//! them with the proven bound min{t*, 1/(1 - 2 sin(theta/4))}.
//!
//! ```bash
//! cargo run --example spanning_ratio
//! ```

use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, FRAC_PI_6};

use cyao::{build_cyao, dilation_upper_bound, gen_uniform, spanning_ratio, Aperture};

fn main() {
    let thetas = [FRAC_PI_6, FRAC_PI_3, FRAC_PI_2, 2.0 * FRAC_PI_3];
    println!("{:>10} {:>12} {:>12} {:>12}", "theta", "max ratio", "mean ratio", "bound");
    for theta in thetas {
        let ap = Aperture::new(theta).unwrap();
        let mut max_ratio: f64 = 1.0;
        let mut sum = 0.0;
        let runs = 40;
        for seed in 0..runs {
            let pts = gen_uniform(40, seed);
            let g = build_cyao(&pts, ap).unwrap();
            let r = spanning_ratio(&g, &pts).unwrap().spanning_ratio;
            max_ratio = max_ratio.max(r);
            sum += r;
        }
        let bound = dilation_upper_bound(ap).unwrap();
        println!(
            "{theta:>10.4} {max_ratio:>12.4} {:>12.4} {bound:>12.4}",
            sum / runs as f64
        );
    }
    println!("\nbeyond 2*pi/3 no bound is proven; the graph stays connected up to pi");

    // Witness pair of the worst stretch on one instance.
    let pts = gen_uniform(40, 1);
    let g = build_cyao(&pts, Aperture::new(2.0 * FRAC_PI_3).unwrap()).unwrap();
    let rep = spanning_ratio(&g, &pts).unwrap();
    println!(
        "seed 1, theta = 2*pi/3: ratio {:.4} attained by pair {:?}, {} edges, max degree {}",
        rep.spanning_ratio, rep.witness, rep.edge_count, rep.max_degree
    );
}
