//! Spanning-ratio computation, connectivity analysis, and the closed-form
//! dilation upper bound 1/(1 - 2 sin(θ/4)) capped at the certified constant.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use rayon::prelude::*;
use thiserror::Error;

use crate::certificates::certified_t_star;
use crate::geometry::{dist, dist2, Aperture, Point};
use crate::graph::Graph;

#[derive(Debug, Error, Clone, Copy, PartialEq)]
pub enum AnalysisError {
    #[error("points {0} and {1} coincide")]
    DuplicatePoints(usize, usize),
    #[error("spanning ratio needs at least two points")]
    TooFewPoints,
    #[error("no proven dilation bound for theta = {0} > 2*pi/3")]
    OutOfProvenRange(f64),
}

/// Summary of one graph's spanner quality.
#[derive(Debug, Clone, PartialEq)]
pub struct SpannerReport {
    /// Max over point pairs of graph distance over Euclidean distance;
    /// infinite when the graph is disconnected.
    pub spanning_ratio: f64,
    /// A pair attaining the ratio (or lying in distinct components).
    pub witness: (usize, usize),
    pub connected: bool,
    pub component_count: usize,
    pub edge_count: usize,
    pub max_degree: usize,
}

struct HeapEntry {
    cost: f64,
    node: usize,
}

impl PartialEq for HeapEntry {
    fn eq(&self, other: &Self) -> bool {
        self.cost == other.cost && self.node == other.node
    }
}
impl Eq for HeapEntry {}
impl Ord for HeapEntry {
    fn cmp(&self, other: &Self) -> Ordering {
        // Reversed: BinaryHeap is a max-heap, we need the cheapest entry first.
        other
            .cost
            .partial_cmp(&self.cost)
            .unwrap_or(Ordering::Equal)
            .then_with(|| other.node.cmp(&self.node))
    }
}
impl PartialOrd for HeapEntry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn dijkstra(adj: &[Vec<(usize, f64)>], source: usize) -> Vec<f64> {
    let mut dist = vec![f64::INFINITY; adj.len()];
    let mut heap = BinaryHeap::new();
    dist[source] = 0.0;
    heap.push(HeapEntry {
        cost: 0.0,
        node: source,
    });
    while let Some(HeapEntry { cost, node }) = heap.pop() {
        if cost > dist[node] {
            continue;
        }
        for &(next, w) in &adj[node] {
            let cand = cost + w;
            if cand < dist[next] {
                dist[next] = cand;
                heap.push(HeapEntry {
                    cost: cand,
                    node: next,
                });
            }
        }
    }
    dist
}

/// Euclidean-weighted single-source shortest path lengths; infinity for
/// unreachable vertices.
pub fn shortest_path_lengths(graph: &Graph, points: &[Point], source: usize) -> Vec<f64> {
    assert!(source < graph.n());
    dijkstra(&graph.adjacency(points), source)
}

struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> UnionFind {
        UnionFind {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
    }
}

/// Connected-components decomposition. Labels are dense, assigned in order
/// of first appearance, so the output is deterministic.
pub fn connectivity(graph: &Graph) -> (bool, Vec<usize>) {
    let n = graph.n();
    let mut uf = UnionFind::new(n);
    for &(i, j) in graph.edges() {
        uf.union(i, j);
    }
    let mut label_of_root = vec![usize::MAX; n];
    let mut labels = vec![0usize; n];
    let mut next = 0usize;
    for v in 0..n {
        let root = uf.find(v);
        if label_of_root[root] == usize::MAX {
            label_of_root[root] = next;
            next += 1;
        }
        labels[v] = label_of_root[root];
    }
    (next <= 1, labels)
}

/// Exact spanning ratio over all point pairs, as n single-source runs.
/// A disconnected graph reports an infinite ratio with a witness pair in
/// distinct components rather than an error.
pub fn spanning_ratio(graph: &Graph, points: &[Point]) -> Result<SpannerReport, AnalysisError> {
    let n = graph.n();
    assert_eq!(points.len(), n);
    if n < 2 {
        return Err(AnalysisError::TooFewPoints);
    }
    for i in 0..n {
        for j in (i + 1)..n {
            if dist2(points[i], points[j]) == 0.0 {
                return Err(AnalysisError::DuplicatePoints(i, j));
            }
        }
    }
    let (connected, labels) = connectivity(graph);
    let component_count = labels.iter().copied().max().unwrap_or(0) + 1;
    let edge_count = graph.edge_count();
    let max_degree = graph.max_degree();

    if !connected {
        let other = labels.iter().position(|&l| l != labels[0]).expect("disconnected");
        return Ok(SpannerReport {
            spanning_ratio: f64::INFINITY,
            witness: (0, other),
            connected,
            component_count,
            edge_count,
            max_degree,
        });
    }

    let adj = graph.adjacency(points);
    let per_source: Vec<(f64, (usize, usize))> = (0..n)
        .into_par_iter()
        .map(|i| {
            let d = dijkstra(&adj, i);
            let mut best = (1.0, (i, i));
            for j in (i + 1)..n {
                let ratio = d[j] / dist(points[i], points[j]);
                if ratio > best.0 {
                    best = (ratio, (i, j));
                }
            }
            best
        })
        .collect();
    // Sequential reduction keeps the witness deterministic under ties.
    let mut best = (1.0, (0, 1));
    for cand in per_source {
        if cand.0 > best.0 {
            best = cand;
        }
    }
    Ok(SpannerReport {
        spanning_ratio: best.0,
        witness: best.1,
        connected,
        component_count,
        edge_count,
        max_degree,
    })
}

/// Proven dilation bound min{t*, 1/(1 - 2 sin(θ/4))} for θ ≤ 2π/3, where t*
/// is the certified largest root of the degree-12 case polynomial. The range
/// 2π/3 < θ is not covered by a proof and yields an error.
pub fn dilation_upper_bound(theta: Aperture) -> Result<f64, AnalysisError> {
    let th = theta.radians();
    let limit = 2.0 * std::f64::consts::FRAC_PI_3;
    if th > limit {
        return Err(AnalysisError::OutOfProvenRange(th));
    }
    let t_star = certified_t_star();
    let s = 1.0 - 2.0 * (th / 4.0).sin();
    if s <= 0.0 {
        Ok(t_star)
    } else {
        Ok((1.0 / s).min(t_star))
    }
}
