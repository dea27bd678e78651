//! The classic Yao graph Y_k is a subgraph of cY(2*pi/k) for every cone
//! offset: each fixed cone is one position of the rotating cone.
//!
//! ```bash
//! cargo run --example yao_vs_cyao
//! ```

use std::f64::consts::TAU;

use cyao::{build_cyao, build_yao, gen_uniform, Angle, Aperture};

fn main() {
    let pts = gen_uniform(60, 5);
    println!("{:>4} {:>10} {:>12} {:>10}", "k", "Y_k edges", "cY(2pi/k)", "subset");
    for k in [3usize, 4, 6, 8, 12] {
        let yao = build_yao(&pts, k, Angle::from_radians(0.4)).unwrap();
        let cy = build_cyao(&pts, Aperture::new(TAU / k as f64).unwrap()).unwrap();
        println!(
            "{k:>4} {:>10} {:>12} {:>10}",
            yao.edge_count(),
            cy.edge_count(),
            yao.is_subgraph_of(&cy)
        );
    }
    println!("\nthe rotating cone sees every orientation, so it keeps every Yao edge and more");
}
