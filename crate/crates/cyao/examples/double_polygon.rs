//! For theta > pi the graph can disconnect: two far-apart regular polygons
//! with flat interior angles never link up, because every cone at a vertex
//! already contains one of its polygon neighbors.
//!
//! ```bash
//! cargo run --example double_polygon
//! ```

use std::f64::consts::PI;

use cyao::{build_cyao, connectivity, gen_double_polygon, Aperture};

fn main() {
    for eps in [0.1, 0.5, 1.0] {
        let pts = gen_double_polygon(eps).unwrap();
        let beyond = build_cyao(&pts, Aperture::new(PI + eps).unwrap()).unwrap();
        let (_, labels) = connectivity(&beyond);
        let comps = labels.iter().max().unwrap() + 1;
        let at_pi = build_cyao(&pts, Aperture::new(PI).unwrap()).unwrap();
        println!(
            "eps = {eps}: {} vertices/polygon | cY(pi+eps): {comps} components | cY(pi): connected = {}",
            pts.len() / 2,
            connectivity(&at_pi).0
        );
    }
    println!("\npi is the exact breaking point: cY(theta) is connected for every theta <= pi");
}
