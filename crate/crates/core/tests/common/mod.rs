//! Strategies and brute-force references shared by the integration tests.
#![allow(dead_code)]

use dicut::{VertexId, VertexWeightedDigraph, WeightedDigraph};
use proptest::prelude::*;

pub fn edge_graph(max_n: usize, max_w: u64) -> impl Strategy<Value = WeightedDigraph> {
    (2..=max_n).prop_flat_map(move |n| {
        prop::collection::vec((0..n, 0..n, 1..=max_w), 0..=3 * n)
            .prop_map(move |edges| WeightedDigraph::new(n, edges).unwrap())
    })
}

pub fn vertex_graph(max_n: usize, max_w: u64) -> impl Strategy<Value = VertexWeightedDigraph> {
    (2..=max_n).prop_flat_map(move |n| {
        (prop::collection::vec(1..=max_w, n), prop::collection::vec((0..n, 0..n), 0..=3 * n))
            .prop_map(|(w, e)| VertexWeightedDigraph::new(w, e).unwrap())
    })
}

fn members(n: usize, mask: u32) -> Vec<VertexId> {
    (0..n).filter(|v| mask >> v & 1 == 1).collect()
}

/// Weight of edges entering `mask`, by a direct scan.
pub fn edge_in_cut(g: &WeightedDigraph, mask: u32) -> u64 {
    g.edges().iter().filter(|e| mask >> e.head & 1 == 1 && mask >> e.tail & 1 == 0).map(|e| e.weight).sum()
}

/// In-neighbours of `mask` outside it, by a direct scan.
pub fn separator(g: &VertexWeightedDigraph, mask: u32) -> u32 {
    g.edges().iter().filter(|&&(u, v)| mask >> v & 1 == 1 && mask >> u & 1 == 0).fold(0, |acc, &(u, _)| acc | 1 << u)
}

pub fn mask_weight(g: &VertexWeightedDigraph, mask: u32) -> u64 {
    members(g.vertex_count(), mask).iter().map(|&v| g.weight(v)).sum()
}

/// Minimum in-cut over sets containing `t` (when given), avoiding `root`,
/// with at most `k` vertices.
pub fn brute_edge(g: &WeightedDigraph, root: VertexId, t: Option<VertexId>, k: usize) -> u64 {
    let n = g.vertex_count();
    (1u32..1 << n)
        .filter(|m| m >> root & 1 == 0 && t.map_or(true, |t| m >> t & 1 == 1) && m.count_ones() as usize <= k)
        .map(|m| edge_in_cut(g, m))
        .min()
        .unwrap()
}

/// Vertex analogue of [`brute_edge`]; `None` when no set avoids the root
/// and its out-neighbours.
pub fn brute_vertex(g: &VertexWeightedDigraph, root: VertexId, t: Option<VertexId>, k: usize) -> Option<u64> {
    let n = g.vertex_count();
    (1u32..1 << n)
        .filter(|m| m >> root & 1 == 0 && t.map_or(true, |t| m >> t & 1 == 1) && m.count_ones() as usize <= k)
        .filter(|&m| separator(g, m) >> root & 1 == 0)
        .map(|m| mask_weight(g, separator(g, m)))
        .min()
}

/// Minimum over all nonempty proper sets of the edge in-cut.
pub fn brute_global_edge(g: &WeightedDigraph) -> u64 {
    let n = g.vertex_count();
    (1u32..(1 << n) - 1).map(|m| edge_in_cut(g, m)).min().unwrap()
}

/// Minimum separator leaving some vertex outside both the set and the
/// separator; `None` when there is none.
pub fn brute_global_vertex(g: &VertexWeightedDigraph) -> Option<u64> {
    let n = g.vertex_count();
    let full = (1u32 << n) - 1;
    (1u32..full)
        .filter(|&m| (m | separator(g, m)) != full)
        .map(|m| mask_weight(g, separator(g, m)))
        .min()
}
