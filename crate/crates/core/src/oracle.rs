//! Exact reference algorithms for small and medium inputs.

use crate::error::{Error, Result};
use crate::graph::{CutOutcome, CutResult, VertexId, VertexWeightedDigraph, WeightedDigraph};
use crate::maxflow::{max_flow, vertex_max_flow};

/// Largest graph accepted by the exhaustive enumerations.
pub const ENUMERATION_LIMIT: usize = 20;

fn keep_better(best: &mut Option<CutResult>, c: CutResult) {
    if best.as_ref().map_or(true, |b| c.better_than(b)) {
        *best = Some(c);
    }
}

/// Minimum edge `r`-cut, by one max-flow per sink.
pub fn exact_rooted_ec(g: &WeightedDigraph, root: VertexId) -> Result<CutResult> {
    let n = g.vertex_count();
    if n < 2 {
        return Err(Error::TooSmall);
    }
    g.check_vertex(root)?;
    let mut best = None;
    for t in (0..n).filter(|&t| t != root) {
        let f = max_flow(g, root, t)?;
        let mut source = vec![false; n];
        for &v in &f.source_side {
            source[v] = true;
        }
        let sink = (0..n).filter(|&v| !source[v]).collect();
        let c = CutResult::edge_cut(g, root, sink);
        debug_assert_eq!(c.weight_units, f.value);
        keep_better(&mut best, c);
    }
    Ok(best.expect("n >= 2"))
}

/// Minimum vertex `r`-cut over the eligible sinks, `NoCut` if there are none.
pub fn exact_rooted_vc(g: &VertexWeightedDigraph, root: VertexId) -> Result<CutOutcome> {
    if g.vertex_count() < 2 {
        return Err(Error::TooSmall);
    }
    g.check_vertex(root)?;
    let mut best = None;
    for t in g.eligible_sinks(root) {
        let f = vertex_max_flow(g, root, t)?;
        let c = CutResult::vertex_cut(g, root, f.sink_component).expect("flow sink is a valid cut");
        debug_assert_eq!(c.weight_units, f.value);
        keep_better(&mut best, c);
    }
    Ok(best.map_or(CutOutcome::NoCut, CutOutcome::Cut))
}

/// Maps a sink component `t` found in the reversed graph to the cut of `g`
/// with sink `V \ (t ∪ separator)`, rooted at the smallest vertex of `t`.
pub(crate) fn reversed_sink(n: usize, t: &[VertexId], separator: &[VertexId]) -> (VertexId, Vec<VertexId>) {
    let mut out = vec![true; n];
    for &v in t.iter().chain(separator) {
        out[v] = false;
    }
    let root = *t.iter().min().expect("nonempty sink");
    (root, (0..n).filter(|&v| out[v]).collect())
}

/// Minimum edge cut separating some ordered pair, from vertex 0 in both
/// orientations.
pub fn exact_global_ec(g: &WeightedDigraph) -> Result<CutResult> {
    let n = g.vertex_count();
    let forward = exact_rooted_ec(g, 0)?;
    let back = exact_rooted_ec(&g.reverse(), 0)?;
    let (root, sink) = reversed_sink(n, &back.sink_component, &[]);
    let mapped = CutResult::edge_cut(g, root, sink);
    debug_assert_eq!(mapped.weight_units, back.weight_units);
    Ok(if mapped.better_than(&forward) { mapped } else { forward })
}

/// Minimum vertex separator over all roots.
pub fn exact_global_vc(g: &VertexWeightedDigraph) -> Result<CutOutcome> {
    let mut best = None;
    for r in 0..g.vertex_count() {
        if let CutOutcome::Cut(c) = exact_rooted_vc(g, r)? {
            keep_better(&mut best, c);
        }
    }
    Ok(best.map_or(CutOutcome::NoCut, CutOutcome::Cut))
}

/// Vertices other than `root` and `t`, the free elements of the enumeration.
fn free_vertices(n: usize, root: VertexId, t: VertexId) -> Result<Vec<VertexId>> {
    if n > ENUMERATION_LIMIT {
        return Err(Error::TooLarge { n, limit: ENUMERATION_LIMIT });
    }
    if root == t {
        return Err(Error::SameTerminals(t));
    }
    Ok((0..n).filter(|&v| v != root && v != t).collect())
}

/// `λ_{t,k}`: the lightest edge in-cut over sets `S ∋ t` with `|S| ≤ k` and
/// `root ∉ S`, in weight units.
pub fn sink_constrained_ec(g: &WeightedDigraph, root: VertexId, t: VertexId, k: usize) -> Result<u64> {
    let n = g.vertex_count();
    g.check_vertex(root)?;
    g.check_vertex(t)?;
    let free = free_vertices(n, root, t)?;
    if k == 0 {
        return Err(Error::InvalidParameter("sink size bound must be positive".into()));
    }
    let mut w = vec![vec![0u64; n]; n];
    for e in g.edges() {
        w[e.tail][e.head] += e.weight;
    }
    let mut inside = vec![false; n];
    inside[t] = true;
    let mut cut: u64 = (0..n).map(|u| w[u][t]).sum();
    let mut size = 1usize;
    let mut best = cut;
    for i in 1u64..(1u64 << free.len()) {
        let v = free[i.trailing_zeros() as usize];
        // Edges into v from outside versus edges from v into the set.
        let into_v: u64 = (0..n).filter(|&u| !inside[u] && u != v).map(|u| w[u][v]).sum();
        let from_v: u64 = (0..n).filter(|&x| inside[x]).map(|x| w[v][x]).sum();
        if inside[v] {
            cut = cut + from_v - into_v;
            inside[v] = false;
            size -= 1;
        } else {
            cut = cut + into_v - from_v;
            inside[v] = true;
            size += 1;
        }
        if size <= k {
            best = best.min(cut);
        }
    }
    Ok(best)
}

/// `κ_{t,k}`: the lightest vertex in-cut over sets `S ∋ t` with `|S| ≤ k`
/// that the root has no edge into; `None` if `t` is not an eligible sink.
pub fn sink_constrained_vc(
    g: &VertexWeightedDigraph,
    root: VertexId,
    t: VertexId,
    k: usize,
) -> Result<Option<u64>> {
    let n = g.vertex_count();
    g.check_vertex(root)?;
    g.check_vertex(t)?;
    let free = free_vertices(n, root, t)?;
    if k == 0 {
        return Err(Error::InvalidParameter("sink size bound must be positive".into()));
    }
    // hits[u]: members of the set that u has an edge into.
    let mut hits = vec![0usize; n];
    let mut inside = vec![false; n];
    let mut sep: u64 = 0;
    let mut size = 0usize;
    let toggle = |v: VertexId, inside: &mut Vec<bool>, hits: &mut Vec<usize>, sep: &mut u64, size: &mut usize| {
        if inside[v] {
            inside[v] = false;
            *size -= 1;
            if hits[v] > 0 {
                *sep += g.weight(v);
            }
            for &u in g.in_neighbors(v) {
                hits[u] -= 1;
                if hits[u] == 0 && !inside[u] {
                    *sep -= g.weight(u);
                }
            }
        } else {
            for &u in g.in_neighbors(v) {
                if hits[u] == 0 && !inside[u] {
                    *sep += g.weight(u);
                }
                hits[u] += 1;
            }
            if hits[v] > 0 {
                *sep -= g.weight(v);
            }
            inside[v] = true;
            *size += 1;
        }
    };
    toggle(t, &mut inside, &mut hits, &mut sep, &mut size);
    let mut best = (hits[root] == 0).then_some(sep);
    for i in 1u64..(1u64 << free.len()) {
        let v = free[i.trailing_zeros() as usize];
        toggle(v, &mut inside, &mut hits, &mut sep, &mut size);
        if size <= k && hits[root] == 0 {
            best = Some(best.map_or(sep, |b| b.min(sep)));
        }
    }
    Ok(best)
}
