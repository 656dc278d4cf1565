//! Seeded instance families for tests and benchmarks.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::{build_graph, VertexId, VertexWeightedDigraph, WeightedDigraph};
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// A random Hamiltonian cycle plus random extra edges.
    Random,
    /// A random graph with a light in-cut around a planted sink set.
    Planted,
    /// Layers joined forwards, with sparse back edges.
    Layered,
}

impl std::str::FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "random" => Ok(Family::Random),
            "planted" => Ok(Family::Planted),
            "layered" => Ok(Family::Layered),
            _ => Err(format!("unknown family `{s}` (random, planted, layered)")),
        }
    }
}

/// Pairs of a random Hamiltonian cycle on `vertices`.
fn cycle<R: Rng>(vertices: &[VertexId], rng: &mut R) -> Vec<(VertexId, VertexId)> {
    if vertices.len() < 2 {
        return Vec::new();
    }
    let mut order = vertices.to_vec();
    order.shuffle(rng);
    (0..order.len()).map(|i| (order[i], order[(i + 1) % order.len()])).collect()
}

/// Random ordered pairs, each vertex getting about `degree` out-edges.
fn random_pairs<R: Rng>(n: usize, degree: f64, rng: &mut R) -> Vec<(VertexId, VertexId)> {
    let p = (degree / (n.max(2) - 1) as f64).min(1.0);
    let mut out = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u != v && rng.gen_bool(p) {
                out.push((u, v));
            }
        }
    }
    out
}

/// Strongly connected graph with integer weights in `1..=max_weight`.
pub fn random_edge_graph<R: Rng>(n: usize, degree: f64, max_weight: u64, rng: &mut R) -> WeightedDigraph {
    let all: Vec<VertexId> = (0..n).collect();
    let mut pairs = cycle(&all, rng);
    pairs.extend(random_pairs(n, degree, rng));
    let edges: Vec<_> = pairs.into_iter().map(|(u, v)| (u, v, rng.gen_range(1..=max_weight))).collect();
    WeightedDigraph::new(n, edges).expect("valid generated graph")
}

/// Like [`random_edge_graph`] with weights `a/b`, `b ∈ {1, 2, 4}`.
pub fn random_rational_graph<R: Rng>(n: usize, degree: f64, max_weight: u64, rng: &mut R) -> WeightedDigraph {
    let all: Vec<VertexId> = (0..n).collect();
    let mut pairs = cycle(&all, rng);
    pairs.extend(random_pairs(n, degree, rng));
    let edges: Vec<_> = pairs
        .into_iter()
        .map(|(u, v)| {
            let den = [1u64, 2, 4][rng.gen_range(0..3)];
            (u, v, Rational::new(rng.gen_range(1..=max_weight * den), den))
        })
        .collect();
    build_graph(n, &edges).expect("valid generated graph")
}

/// A planted sink set of `sink_size` vertices (never vertex 0) whose only
/// entering edges are `light` edges of weight 1; other edges weigh
/// `10..=20`. Returns the graph and the planted set.
pub fn planted_sink_graph<R: Rng>(
    n: usize,
    sink_size: usize,
    degree: f64,
    light: usize,
    rng: &mut R,
) -> (WeightedDigraph, Vec<VertexId>) {
    assert!(sink_size >= 1 && sink_size < n, "sink size must be in 1..n");
    let mut others: Vec<VertexId> = (1..n).collect();
    others.shuffle(rng);
    let mut sink = others[..sink_size].to_vec();
    sink.sort_unstable();
    let mut in_sink = vec![false; n];
    for &v in &sink {
        in_sink[v] = true;
    }
    let outside: Vec<VertexId> = (0..n).filter(|&v| !in_sink[v]).collect();
    let mut pairs = cycle(&outside, rng);
    pairs.extend(cycle(&sink, rng));
    pairs.extend(random_pairs(n, degree, rng).into_iter().filter(|&(u, v)| in_sink[u] || !in_sink[v]));
    let mut edges: Vec<_> = pairs.into_iter().map(|(u, v)| (u, v, rng.gen_range(10..=20))).collect();
    for _ in 0..light.max(1) {
        edges.push((*outside.choose(rng).unwrap(), *sink.choose(rng).unwrap(), 1));
    }
    edges.push((*sink.choose(rng).unwrap(), *outside.choose(rng).unwrap(), 20));
    (WeightedDigraph::new(n, edges).expect("valid generated graph"), sink)
}

/// `layers` layers of `width` vertices, each vertex with two edges into the
/// next layer and, with probability 1/4, one edge back to an earlier layer.
/// The last layer returns to vertex 0.
pub fn layered_graph<R: Rng>(layers: usize, width: usize, max_weight: u64, rng: &mut R) -> WeightedDigraph {
    let n = layers * width;
    let mut edges = Vec::new();
    for l in 0..layers {
        for i in 0..width {
            let u = l * width + i;
            if l + 1 < layers {
                for _ in 0..2 {
                    edges.push((u, (l + 1) * width + rng.gen_range(0..width), rng.gen_range(1..=max_weight)));
                }
            } else {
                edges.push((u, 0, rng.gen_range(1..=max_weight)));
            }
            if l > 0 && rng.gen_bool(0.25) {
                edges.push((u, rng.gen_range(0..l * width), rng.gen_range(1..=max_weight)));
            }
        }
    }
    for l in 0..layers {
        for i in 1..width {
            edges.push((l * width, l * width + i, rng.gen_range(1..=max_weight)));
        }
    }
    WeightedDigraph::new(n, edges).expect("valid generated graph")
}

/// Edge-weighted instance of `family` with about `n` vertices.
pub fn edge_family<R: Rng>(family: Family, n: usize, rng: &mut R) -> WeightedDigraph {
    match family {
        Family::Random => random_edge_graph(n, 4.0, 20, rng),
        Family::Planted => planted_sink_graph(n, (n / 8).max(1), 6.0, 3, rng).0,
        Family::Layered => {
            let width = (n as f64).sqrt().ceil() as usize;
            layered_graph(n.div_ceil(width), width, 20, rng)
        }
    }
}

/// Strongly connected vertex-weighted graph with weights in `1..=max_weight`.
pub fn random_vertex_graph<R: Rng>(n: usize, degree: f64, max_weight: u64, rng: &mut R) -> VertexWeightedDigraph {
    let all: Vec<VertexId> = (0..n).collect();
    let mut pairs = cycle(&all, rng);
    pairs.extend(random_pairs(n, degree, rng));
    let weights = (0..n).map(|_| rng.gen_range(1..=max_weight)).collect();
    VertexWeightedDigraph::new(weights, pairs).expect("valid generated graph")
}

/// A planted sink set (never vertex 0) reached only through `separator`
/// vertices of weight 1; other vertices weigh `10..=20`. Returns the graph,
/// the sink and the separator.
pub fn planted_separator_graph<R: Rng>(
    n: usize,
    sink_size: usize,
    separator: usize,
    degree: f64,
    rng: &mut R,
) -> (VertexWeightedDigraph, Vec<VertexId>, Vec<VertexId>) {
    assert!(sink_size >= 1 && separator >= 1 && sink_size + separator < n, "sets must leave room for the root");
    let mut others: Vec<VertexId> = (1..n).collect();
    others.shuffle(rng);
    let mut sink = others[..sink_size].to_vec();
    let mut sep = others[sink_size..sink_size + separator].to_vec();
    sink.sort_unstable();
    sep.sort_unstable();
    // 0 outside, 1 separator, 2 sink.
    let mut class = vec![0u8; n];
    sep.iter().for_each(|&v| class[v] = 1);
    sink.iter().for_each(|&v| class[v] = 2);
    let all: Vec<VertexId> = (0..n).collect();
    let mut pairs: Vec<_> = cycle(&all, rng)
        .into_iter()
        .chain(random_pairs(n, degree, rng))
        .filter(|&(u, v)| !(class[u] == 0 && class[v] == 2))
        .collect();
    pairs.extend(cycle(&sink, rng));
    for &s in &sep {
        pairs.push((s, *sink.choose(rng).unwrap()));
    }
    let outside: Vec<VertexId> = (0..n).filter(|&v| class[v] == 0).collect();
    for &s in &sep {
        pairs.push((*outside.choose(rng).unwrap(), s));
    }
    let weights = (0..n).map(|v| if class[v] == 1 { 1 } else { rng.gen_range(10..=20) }).collect();
    (VertexWeightedDigraph::new(weights, pairs).expect("valid generated graph"), sink, sep)
}

/// Vertex-weighted instance of `family` with about `n` vertices.
pub fn vertex_family<R: Rng>(family: Family, n: usize, rng: &mut R) -> VertexWeightedDigraph {
    match family {
        Family::Random => random_vertex_graph(n, 4.0, 20, rng),
        Family::Planted => planted_separator_graph(n, (n / 8).max(1), 2, 6.0, rng).0,
        Family::Layered => {
            let g = edge_family(Family::Layered, n, rng);
            let weights = (0..g.vertex_count()).map(|_| rng.gen_range(1..=20)).collect();
            VertexWeightedDigraph::new(weights, g.edges().iter().map(|e| (e.tail, e.head))).expect("valid generated graph")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{in_cut_weight, vertex_in_cut};
    use crate::rng::SeedStream;

    #[test]
    fn random_graphs_are_strongly_connected() {
        let mut rng = SeedStream::new(1).rng();
        for n in [2, 5, 30] {
            let g = random_edge_graph(n, 2.0, 20, &mut rng);
            assert!(g.reachable_from(0).iter().all(|&r| r));
            assert!(g.reverse().reachable_from(0).iter().all(|&r| r));
        }
    }

    #[test]
    fn planted_sets_have_the_promised_cut() {
        let mut rng = SeedStream::new(2).rng();
        let (g, sink) = planted_sink_graph(40, 5, 4.0, 3, &mut rng);
        assert_eq!(in_cut_weight(&g, &sink), 3);
        let (h, sink, sep) = planted_separator_graph(40, 5, 2, 4.0, &mut rng);
        assert_eq!(vertex_in_cut(&h, 0, &sink), Some((sep, 2)));
    }

    #[test]
    fn families_parse() {
        assert_eq!("planted".parse::<Family>(), Ok(Family::Planted));
        assert!("grid".parse::<Family>().is_err());
        let mut rng = SeedStream::new(3).rng();
        assert_eq!(edge_family(Family::Layered, 16, &mut rng).vertex_count(), 16);
    }
}
