//! Construction of the continuous Yao graph cY(θ) and of the classic Yao
//! graph Y_k, plus an independent brute-force realization of cY(θ) used as a
//! test oracle.
//!
//! The edge rule: `q` is a cY-neighbor of apex `p` iff some closed cone of
//! aperture θ apexed at `p` contains `q` and no point *strictly* closer to
//! `p`. Equal distances never block, so point sets with exact ties (regular
//! polygons, mirrored constructions) behave as their limits would.

use std::collections::BTreeSet;
use std::f64::consts::TAU;
use std::ops::Bound;

use ordered_float::NotNan;
use rayon::prelude::*;
use thiserror::Error;

use crate::geometry::{ccw_gap, cw_gap, direction, dist, dist2, Angle, Aperture, Point};

#[derive(Debug, Error, Clone, Copy, PartialEq, Eq)]
pub enum BuildError {
    #[error("point set is empty")]
    EmptyInput,
    #[error("cone count must be at least 1")]
    InvalidConeCount,
}

/// Undirected graph over point indices. Edges are stored as `(i, j)` with
/// `i < j`, sorted lexicographically, without duplicates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Graph {
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            assert!(a < n && b < n, "edge index out of range");
            assert!(a != b, "self-loop");
            set.insert((a.min(b), a.max(b)));
        }
        Graph {
            n,
            edges: set.into_iter().collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has(&self, i: usize, j: usize) -> bool {
        let key = (i.min(j), i.max(j));
        self.edges.binary_search(&key).is_ok()
    }

    pub fn is_subgraph_of(&self, other: &Graph) -> bool {
        self.n == other.n && self.edges.iter().all(|&(i, j)| other.has(i, j))
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.n];
        for &(i, j) in &self.edges {
            deg[i] += 1;
            deg[j] += 1;
        }
        deg
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    /// Euclidean-weighted adjacency lists.
    pub fn adjacency(&self, points: &[Point]) -> Vec<Vec<(usize, f64)>> {
        assert_eq!(points.len(), self.n);
        let mut adj = vec![Vec::new(); self.n];
        for &(i, j) in &self.edges {
            let w = dist(points[i], points[j]);
            adj[i].push((j, w));
            adj[j].push((i, w));
        }
        adj
    }
}

/// Clockwise / counter-clockwise angular clearance from the candidate's
/// direction to the nearest strictly-closer blocker. Both are the sentinel
/// `2π` when no blocker exists.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AngularGapPair {
    pub cw: f64,
    pub ccw: f64,
}

impl AngularGapPair {
    pub const NO_BLOCKERS: AngularGapPair = AngularGapPair { cw: TAU, ccw: TAU };

    pub fn blocker_free(&self) -> bool {
        self.cw == TAU && self.ccw == TAU
    }
}

/// Maximal blocker-free angular clearances around `direction(p, q)`.
///
/// A blocker is any point strictly closer to `p` than `q` is; a blocker
/// coincident with `p` blocks every window.
pub fn edge_gaps(points: &[Point], p: usize, q: usize) -> AngularGapPair {
    assert!(p != q);
    let dq = dist2(points[p], points[q]);
    let mut cw = f64::INFINITY;
    let mut ccw = f64::INFINITY;
    let mut any = false;
    let mut dir_q = None;
    for (r, &pt) in points.iter().enumerate() {
        if r == p || r == q {
            continue;
        }
        let dr = dist2(points[p], pt);
        if dr >= dq {
            continue;
        }
        if dr == 0.0 {
            return AngularGapPair { cw: 0.0, ccw: 0.0 };
        }
        let dir_q = *dir_q
            .get_or_insert_with(|| direction(points[p], points[q]).expect("q at distance > 0"));
        let dir_r = direction(points[p], pt).expect("blocker at distance > 0");
        any = true;
        cw = cw.min(cw_gap(dir_q, dir_r));
        ccw = ccw.min(ccw_gap(dir_q, dir_r));
    }
    if !any {
        AngularGapPair::NO_BLOCKERS
    } else {
        AngularGapPair { cw, ccw }
    }
}

/// The directed edge rule: `q` is a cY(θ)-neighbor of `p` iff there is a
/// closed blocker-free window of width θ containing `direction(p, q)`, i.e.
/// the gap sum strictly exceeds θ (or no blocker exists at all).
pub fn has_edge(points: &[Point], p: usize, q: usize, theta: Aperture) -> bool {
    let gaps = edge_gaps(points, p, q);
    gaps.blocker_free() || gaps.cw + gaps.ccw > theta.radians()
}

fn gaps_from_sorted_dirs(dirs: &BTreeSet<NotNan<f64>>, dir_q: Angle) -> AngularGapPair {
    if dirs.is_empty() {
        return AngularGapPair::NO_BLOCKERS;
    }
    let key = NotNan::new(dir_q.radians()).expect("direction is finite");
    if dirs.contains(&key) {
        return AngularGapPair { cw: 0.0, ccw: 0.0 };
    }
    let succ = dirs
        .range((Bound::Excluded(key), Bound::Unbounded))
        .next()
        .or_else(|| dirs.iter().next())
        .unwrap();
    let pred = dirs
        .range((Bound::Unbounded, Bound::Excluded(key)))
        .next_back()
        .or_else(|| dirs.iter().next_back())
        .unwrap();
    AngularGapPair {
        cw: cw_gap(dir_q, Angle::from_radians(pred.into_inner())),
        ccw: ccw_gap(dir_q, Angle::from_radians(succ.into_inner())),
    }
}

/// Directed cY neighbors of one apex, by a sweep over points in increasing
/// distance order. Points at exactly equal distance are processed as one
/// batch so that ties never block each other.
fn apex_neighbors(points: &[Point], apex: usize, theta: f64) -> Vec<(usize, usize)> {
    let mut order: Vec<(f64, usize)> = points
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != apex)
        .map(|(i, &p)| (dist2(points[apex], p), i))
        .collect();
    order.sort_by(|a, b| a.partial_cmp(b).unwrap());

    let mut out = Vec::new();
    // Points coincident with the apex block everything else: the apex
    // connects to its duplicates only.
    if let Some(&(d0, _)) = order.first() {
        if d0 == 0.0 {
            for &(d, i) in &order {
                if d == 0.0 {
                    out.push((apex.min(i), apex.max(i)));
                }
            }
            return out;
        }
    }

    let mut dirs: BTreeSet<NotNan<f64>> = BTreeSet::new();
    let mut k = 0;
    while k < order.len() {
        let mut end = k + 1;
        while end < order.len() && order[end].0 == order[k].0 {
            end += 1;
        }
        for &(_, q) in &order[k..end] {
            let dir_q = direction(points[apex], points[q]).expect("distinct by batch rule");
            let gaps = gaps_from_sorted_dirs(&dirs, dir_q);
            if gaps.blocker_free() || gaps.cw + gaps.ccw > theta {
                out.push((apex.min(q), apex.max(q)));
            }
        }
        for &(_, q) in &order[k..end] {
            let dir_q = direction(points[apex], points[q]).expect("distinct by batch rule");
            dirs.insert(NotNan::new(dir_q.radians()).expect("finite"));
        }
        k = end;
    }
    out
}

/// Builds cY(θ) by the rotating-cone rule in O(n² log n): per apex, points
/// are processed by increasing distance while blocker directions live in an
/// ordered set answering nearest-cw/ccw queries.
pub fn build_cyao(points: &[Point], theta: Aperture) -> Result<Graph, BuildError> {
    if points.is_empty() {
        return Err(BuildError::EmptyInput);
    }
    let per_apex: Vec<Vec<(usize, usize)>> = (0..points.len())
        .into_par_iter()
        .map(|apex| apex_neighbors(points, apex, theta.radians()))
        .collect();
    Ok(Graph::new(points.len(), per_apex.into_iter().flatten()))
}

fn midpoint_orientation(from: Angle, to: Angle) -> Angle {
    let gap = ccw_gap(from, to);
    if gap == 0.0 {
        // A single distinct critical direction: probe the opposite side.
        Angle::from_radians(from.radians() + std::f64::consts::PI)
    } else {
        Angle::from_radians(from.radians() + gap / 2.0)
    }
}

/// Brute-force realization of the cY(θ) definition, for testing: enumerates
/// per apex every critical cone orientation (each point's direction, that
/// direction minus θ, and midpoints of consecutive criticals) and takes the
/// closest point inside each closed cone by linear scan. O(n³) overall.
pub fn build_cyao_oracle(points: &[Point], theta: Aperture) -> Result<Graph, BuildError> {
    if points.is_empty() {
        return Err(BuildError::EmptyInput);
    }
    let n = points.len();
    let per_apex: Vec<Vec<(usize, usize)>> = (0..n)
        .into_par_iter()
        .map(|apex| {
            let mut out = Vec::new();
            let dups: Vec<usize> = (0..n)
                .filter(|&i| i != apex && dist2(points[apex], points[i]) == 0.0)
                .collect();
            if !dups.is_empty() {
                for d in dups {
                    out.push((apex.min(d), apex.max(d)));
                }
                return out;
            }
            let mut criticals: Vec<NotNan<f64>> = Vec::with_capacity(2 * (n - 1));
            for (i, &p) in points.iter().enumerate() {
                if i == apex {
                    continue;
                }
                let d = direction(points[apex], p).expect("no duplicates of apex");
                criticals.push(NotNan::new(d.radians()).unwrap());
                criticals
                    .push(NotNan::new(Angle::from_radians(d.radians() - theta.radians()).radians()).unwrap());
            }
            criticals.sort();
            criticals.dedup();
            let mut orientations: Vec<Angle> = criticals
                .iter()
                .map(|c| Angle::from_radians(c.into_inner()))
                .collect();
            for w in 0..criticals.len() {
                let from = Angle::from_radians(criticals[w].into_inner());
                let to = Angle::from_radians(criticals[(w + 1) % criticals.len()].into_inner());
                orientations.push(midpoint_orientation(from, to));
            }
            for o in orientations {
                let mut best = f64::INFINITY;
                for (i, &p) in points.iter().enumerate() {
                    if i == apex {
                        continue;
                    }
                    let d = direction(points[apex], p).expect("no duplicates of apex");
                    if ccw_gap(o, d) <= theta.radians() {
                        best = best.min(dist2(points[apex], p));
                    }
                }
                if best.is_finite() {
                    for (i, &p) in points.iter().enumerate() {
                        if i == apex {
                            continue;
                        }
                        let d = direction(points[apex], p).expect("no duplicates of apex");
                        if ccw_gap(o, d) <= theta.radians() && dist2(points[apex], p) == best {
                            out.push((apex.min(i), apex.max(i)));
                        }
                    }
                }
            }
            out
        })
        .collect();
    Ok(Graph::new(n, per_apex.into_iter().flatten()))
}

/// Classic Yao graph: `k` fixed half-open cones of aperture 2π/k per apex,
/// starting at `offset`, each contributing an edge to its closest point.
pub fn build_yao(points: &[Point], k: usize, offset: Angle) -> Result<Graph, BuildError> {
    if points.is_empty() {
        return Err(BuildError::EmptyInput);
    }
    if k == 0 {
        return Err(BuildError::InvalidConeCount);
    }
    let n = points.len();
    let width = TAU / k as f64;
    let mut edges = Vec::new();
    for apex in 0..n {
        let mut best: Vec<Option<(f64, usize)>> = vec![None; k];
        for (i, &p) in points.iter().enumerate() {
            if i == apex || points[apex] == p {
                continue;
            }
            let d = direction(points[apex], p).expect("distinct");
            let cone = ((ccw_gap(offset, d) / width) as usize).min(k - 1);
            let cand = (dist2(points[apex], p), i);
            if best[cone].map_or(true, |cur| cand < cur) {
                best[cone] = Some(cand);
            }
        }
        for slot in best.into_iter().flatten() {
            edges.push((apex.min(slot.1), apex.max(slot.1)));
        }
    }
    Ok(Graph::new(n, edges))
}
