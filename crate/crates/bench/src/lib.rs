//! Seeded inputs for the benchmarks.

use dicut::generate::{edge_family, vertex_family, Family};
use dicut::{SeedStream, VertexWeightedDigraph, WeightedDigraph};

pub const SIZES: [usize; 3] = [64, 128, 256];

pub fn edge_instance(family: Family, n: usize) -> WeightedDigraph {
    edge_family(family, n, &mut SeedStream::new(n as u64).rng())
}

pub fn vertex_instance(family: Family, n: usize) -> VertexWeightedDigraph {
    vertex_family(family, n, &mut SeedStream::new(n as u64).child(1).rng())
}
