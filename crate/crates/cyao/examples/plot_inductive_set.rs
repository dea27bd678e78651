//! Render the inductive set I_ab = {p : |ap| + t|pb| <= t|ab|} for several
//! stretch values, with the cone pair and the named construction points at
//! the certified constant, as a standalone SVG.
//!
//! ```bash
//! cargo run --example plot_inductive_set   # writes inductive_set.svg
//! ```

use cyao::svg::{render_svg, PlotOptions};
use cyao::{certified_t_star, Point};

fn main() {
    let a = Point::new(0.0, 0.0);
    let b = Point::new(1.0, 0.0);
    let t = certified_t_star();
    let opts = PlotOptions {
        inductive_t: vec![2.5, 3.5, t],
        show_cones: true,
        show_named_points: true,
        ..PlotOptions::default()
    };
    let svg = render_svg(&[a, b], None, &opts);
    std::fs::write("inductive_set.svg", &svg).expect("write inductive_set.svg");
    println!(
        "wrote inductive_set.svg: I_ab boundaries at t = 2.5, 3.5, {t:.4}, cones, named points"
    );
}
