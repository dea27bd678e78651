//! Standalone SVG figures: point sets as circles, graph edges as lines, and
//! optional overlays — inductive-set boundaries (sampled quartic roots),
//! the cone pair C_ab / C_ba, and the named construction points.
//!
//! Overlays never use `<circle>` or `<line>`, so counting those elements
//! always counts points and edges.

use std::fmt::Write as _;

use crate::certificates::{boundary_point_from_b, named_points};
use crate::geometry::{dist, Point};
use crate::graph::Graph;

/// Plot options; `a`/`b` index the points used as the normalized frame for
/// inductive-set and cone overlays.
#[derive(Debug, Clone)]
pub struct PlotOptions {
    pub width_px: f64,
    pub margin_px: f64,
    pub point_radius_px: f64,
    /// Stretch values whose inductive-set boundary I_ab gets overlaid.
    pub inductive_t: Vec<f64>,
    /// Frame pair (a, b) for overlays; defaults to (0, 1).
    pub frame: (usize, usize),
    pub show_cones: bool,
    pub show_named_points: bool,
    pub boundary_samples: usize,
}

impl Default for PlotOptions {
    fn default() -> Self {
        PlotOptions {
            width_px: 800.0,
            margin_px: 40.0,
            point_radius_px: 3.0,
            inductive_t: Vec::new(),
            frame: (0, 1),
            show_cones: false,
            show_named_points: false,
            boundary_samples: 4096,
        }
    }
}

/// Sampled boundary polyline of the inductive set of `a` with respect to
/// `b`, mapped out of the normalized frame by the similarity taking
/// (0,0) to `a` and (1,0) to `b`. The polyline is closed.
pub fn inductive_boundary_polyline(a: Point, b: Point, t: f64, samples: usize) -> Vec<Point> {
    let scale = dist(a, b);
    let rot = (b.y - a.y).atan2(b.x - a.x);
    let (s, c) = rot.sin_cos();
    let to_world = |p: Point| {
        Point::new(
            a.x + scale * (c * p.x - s * p.y),
            a.y + scale * (s * p.x + c * p.y),
        )
    };
    let mut pts = Vec::with_capacity(samples + 1);
    for k in 0..samples {
        let phi = std::f64::consts::TAU * (k as f64 + 0.5) / samples as f64;
        if let Some(p) = boundary_point_from_b(t, phi) {
            pts.push(to_world(p));
        }
    }
    if let Some(&first) = pts.first() {
        pts.push(first);
    }
    pts
}

struct Mapper {
    min_x: f64,
    max_y: f64,
    scale: f64,
    margin: f64,
}

impl Mapper {
    fn map(&self, p: Point) -> (f64, f64) {
        (
            self.margin + (p.x - self.min_x) * self.scale,
            self.margin + (self.max_y - p.y) * self.scale,
        )
    }
}

fn path_from(points: &[Point], m: &Mapper) -> String {
    let mut d = String::new();
    for (i, p) in points.iter().enumerate() {
        let (x, y) = m.map(*p);
        let _ = write!(d, "{}{x:.4} {y:.4}", if i == 0 { "M" } else { " L" });
    }
    d
}

/// Renders the figure. Pass `graph: None` for a bare point plot.
pub fn render_svg(points: &[Point], graph: Option<&Graph>, opts: &PlotOptions) -> String {
    let mut overlays: Vec<(String, Vec<Point>)> = Vec::new();
    let frame_ok = opts.frame.0 < points.len()
        && opts.frame.1 < points.len()
        && points[opts.frame.0] != points[opts.frame.1];
    if frame_ok {
        let (a, b) = (points[opts.frame.0], points[opts.frame.1]);
        for &t in &opts.inductive_t {
            overlays.push((
                format!("inductive-boundary t={t}"),
                inductive_boundary_polyline(a, b, t, opts.boundary_samples),
            ));
        }
    }

    let mut min_x = f64::INFINITY;
    let mut max_x = f64::NEG_INFINITY;
    let mut min_y = f64::INFINITY;
    let mut max_y = f64::NEG_INFINITY;
    let mut extend = |p: &Point| {
        min_x = min_x.min(p.x);
        max_x = max_x.max(p.x);
        min_y = min_y.min(p.y);
        max_y = max_y.max(p.y);
    };
    points.iter().for_each(&mut extend);
    overlays.iter().flat_map(|(_, pts)| pts).for_each(&mut extend);
    if !min_x.is_finite() {
        min_x = 0.0;
        max_x = 1.0;
        min_y = 0.0;
        max_y = 1.0;
    }
    let span = (max_x - min_x).max(max_y - min_y).max(1e-12);
    let inner = opts.width_px - 2.0 * opts.margin_px;
    let mapper = Mapper {
        min_x,
        max_y,
        scale: inner / span,
        margin: opts.margin_px,
    };
    let width = opts.width_px;
    let height = 2.0 * opts.margin_px + (max_y - min_y) * mapper.scale;

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<?xml version="1.0" encoding="UTF-8"?>
<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width:.0}" height="{height:.0}" viewBox="0 0 {width:.0} {height:.0}">"#
    );
    let _ = writeln!(svg, r#"  <rect width="100%" height="100%" fill="white"/>"#);

    if let Some(g) = graph {
        for &(i, j) in g.edges() {
            let (x1, y1) = mapper.map(points[i]);
            let (x2, y2) = mapper.map(points[j]);
            let _ = writeln!(
                svg,
                r##"  <line x1="{x1:.4}" y1="{y1:.4}" x2="{x2:.4}" y2="{y2:.4}" stroke="#555" stroke-width="1"/>"##
            );
        }
    }

    for (label, pts) in &overlays {
        if pts.is_empty() {
            continue;
        }
        let _ = writeln!(
            svg,
            r##"  <path d="{}" fill="none" stroke="#1f77b4" stroke-width="1.5"><title>{label}</title></path>"##,
            path_from(pts, &mapper)
        );
    }

    if opts.show_cones && frame_ok {
        let (a, b) = (points[opts.frame.0], points[opts.frame.1]);
        let r = dist(a, b);
        let third = std::f64::consts::FRAC_PI_3;
        for (apex, other) in [(a, b), (b, a)] {
            let base = (other.y - apex.y).atan2(other.x - apex.x);
            for side in [-1.0, 1.0] {
                let ang = base + side * third;
                let tip = Point::new(apex.x + r * ang.cos(), apex.y + r * ang.sin());
                let _ = writeln!(
                    svg,
                    r##"  <path d="{}" fill="none" stroke="#d62728" stroke-width="1" stroke-dasharray="4 3"/>"##,
                    path_from(&[apex, tip], &mapper)
                );
            }
        }
    }

    if opts.show_named_points && frame_ok {
        let (a, b) = (points[opts.frame.0], points[opts.frame.1]);
        let scale = dist(a, b);
        let rot = (b.y - a.y).atan2(b.x - a.x);
        let (s, c) = rot.sin_cos();
        let to_world = |p: Point| {
            Point::new(
                a.x + scale * (c * p.x - s * p.y),
                a.y + scale * (s * p.x + c * p.y),
            )
        };
        if let Some(&t) = opts.inductive_t.first() {
            if let Ok(np) = named_points(t) {
                let marks = [
                    ("u", np.u),
                    ("w", np.w),
                    ("v*", np.v_star),
                    ("u'", np.u_prime),
                    ("c", np.c),
                    ("c'", np.c_prime),
                ];
                for (name, p) in marks {
                    let (x, y) = mapper.map(to_world(p));
                    let d = 4.0;
                    let _ = writeln!(
                        svg,
                        r##"  <path d="M{:.4} {:.4} L{:.4} {:.4} M{:.4} {:.4} L{:.4} {:.4}" stroke="#2ca02c" stroke-width="1.5"/>"##,
                        x - d, y - d, x + d, y + d, x - d, y + d, x + d, y - d
                    );
                    let _ = writeln!(
                        svg,
                        r##"  <text x="{:.4}" y="{:.4}" font-size="12" fill="#2ca02c">{name}</text>"##,
                        x + 5.0, y - 5.0
                    );
                }
            }
        }
    }

    for p in points {
        let (x, y) = mapper.map(*p);
        let _ = writeln!(
            svg,
            r##"  <circle cx="{x:.4}" cy="{y:.4}" r="{:.1}" fill="#111"/>"##,
            opts.point_radius_px
        );
    }

    svg.push_str("</svg>\n");
    svg
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certificates::certified_t_star;
    use crate::graph::Graph;

    #[test]
    fn element_counts_match_points_and_edges() {
        let pts = [
            Point::new(0.0, 0.0),
            Point::new(1.0, 0.0),
            Point::new(0.5, 1.0),
        ];
        let g = Graph::new(3, [(0, 1), (1, 2)]);
        let svg = render_svg(&pts, Some(&g), &PlotOptions::default());
        assert_eq!(svg.matches("<circle").count(), 3);
        assert_eq!(svg.matches("<line").count(), 2);
    }

    #[test]
    fn inductive_overlay_passes_near_u() {
        let a = Point::new(0.0, 0.0);
        let b = Point::new(1.0, 0.0);
        let t = certified_t_star();
        let poly = inductive_boundary_polyline(a, b, t, 4096);
        let u = Point::new(0.3438, 0.5956);
        let min_d = poly
            .iter()
            .map(|p| dist(*p, u))
            .fold(f64::INFINITY, f64::min);
        assert!(min_d < 1e-3, "closest approach {min_d}");
    }

    #[test]
    fn two_t_values_give_nested_distinct_boundaries() {
        // I_ab grows with t, so along every ray from b the t = 3 boundary
        // sits strictly inside the t = 8 boundary.
        use crate::certificates::boundary_point_from_b;
        let b = Point::new(1.0, 0.0);
        let mut compared = 0;
        for k in 0..256 {
            let phi = std::f64::consts::TAU * (k as f64 + 0.5) / 256.0;
            if let (Some(p3), Some(p8)) = (
                boundary_point_from_b(3.0, phi),
                boundary_point_from_b(8.0, phi),
            ) {
                assert!(dist(p3, b) < dist(p8, b), "phi {phi}");
                compared += 1;
            }
        }
        assert!(compared > 200);
        let svg = render_svg(
            &[Point::new(0.0, 0.0), b],
            None,
            &PlotOptions {
                inductive_t: vec![3.0, 8.0],
                ..PlotOptions::default()
            },
        );
        assert_eq!(svg.matches("inductive-boundary").count(), 2);
    }
}
