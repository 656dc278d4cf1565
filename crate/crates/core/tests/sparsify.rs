mod common;

use common::*;
use dicut::oracle::exact_rooted_ec;
use dicut::rational::Rational;
use dicut::{
    importance_round, in_cut_weight, sparsify_edge, sparsify_vertex, sparsify_vertex_deferred, SeedStream,
    SparsifyParams,
};
use proptest::prelude::*;

#[test]
fn derived_values_for_a_small_case() {
    // n = 2 floors ln n to 1: base = 1 · 1 / 0.25 = 4.
    let d = SparsifyParams::new(0.5, 10, 1, SeedStream::new(0)).derive(2);
    assert_eq!((d.steps, d.aux, d.cap, d.delta), (256, 64, 512, 768));
    let t = SparsifyParams::new(0.5, 10, 1, SeedStream::new(0)).tau(2, 4);
    assert_eq!(t.value(), Rational::new(10, 1024));
    assert_eq!(t.scale_units(256), Rational::from_integer(10));
}

#[test]
fn derived_values_follow_their_formulas() {
    for (eps, k, n) in [(0.1, 1, 10), (0.25, 3, 100), (0.5, 8, 1000), (0.3, 2, 50)] {
        let p = SparsifyParams::new(eps, 100, k, SeedStream::new(0));
        let c = p.constants;
        let base = k as f64 * (n as f64).ln().max(1.0) / (eps * eps);
        let steps = (base / c.c_tau).ceil();
        let aux = (eps * steps / (2.0 * k as f64)).floor().max(1.0);
        let cap = (c.c_w * base).ceil().max((c.c_clamp * steps).ceil()).max(aux);
        let d = p.derive(n);
        assert_eq!(
            (d.steps as f64, d.aux as f64, d.cap as f64, d.delta as f64),
            (steps, aux, cap, (c.c_delta * base).ceil())
        );
    }
}

#[test]
fn importance_rounding_is_unbiased() {
    let w = Rational::new(7, 3);
    let tau = Rational::new(1, 2);
    let mut rng = SeedStream::new(17).rng();
    let draws = 40_000;
    let mut sum = 0.0;
    for _ in 0..draws {
        let x = importance_round(w, tau, &mut rng);
        assert!(x == Rational::new(4, 2) || x == Rational::new(5, 2));
        sum += *x.numer() as f64 / *x.denom() as f64;
    }
    assert!((sum / draws as f64 - 7.0 / 3.0).abs() < 0.01);
}

/// Sets with at most `k` vertices and in-cut at most `λ` keep every vertex
/// out of the root.
#[test]
fn small_light_sets_survive_contraction() {
    let runs = 200;
    let mut survived = 0;
    for i in 0..runs {
        let s = SeedStream::new(900 + i);
        let g = dicut::generate::random_edge_graph(8, 2.0, 20, &mut s.rng());
        let lambda = 2 * exact_rooted_ec(&g, 0).unwrap().weight_units;
        let k = 2;
        let sp = sparsify_edge(&g, 0, &SparsifyParams::new(0.25, lambda, k, s.child(1))).unwrap();
        let ok = (1u32..1 << 8).filter(|m| m & 1 == 0 && m.count_ones() as usize <= k).all(|m| {
            let set: Vec<usize> = (0..8).filter(|v| m >> v & 1 == 1).collect();
            in_cut_weight(&g, &set) > lambda || set.iter().all(|&v| sp.from_original[v].is_some())
        });
        survived += ok as u32;
    }
    assert!(survived as f64 >= 0.99 * runs as f64);
}

fn params(eps: f64, lambda: u64, k: usize, tight: bool, seed: u64) -> SparsifyParams {
    let mut p = SparsifyParams::new(eps, lambda, k, SeedStream::new(seed));
    if tight {
        p.constants.c_delta = 0.01;
        p.constants.c_w = 0.5;
    }
    p
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn edge_structure(g in edge_graph(14, 30), eps in 0.05f64..0.9, lambda in 1u64..200, k in 1usize..6,
                      tight: bool, seed: u64) {
        let r = seed as usize % g.vertex_count();
        let p = params(eps, lambda, k, tight, seed);
        let sp = sparsify_edge(&g, r, &p).unwrap();
        prop_assert!(sp.structural_violations().is_empty(), "{:?}", sp.structural_violations());
        prop_assert_eq!(sparsify_edge(&g, r, &p).unwrap(), sp);
    }

    #[test]
    fn vertex_structure(g in vertex_graph(14, 30), eps in 0.05f64..0.9, lambda in 1u64..200, k in 1usize..6,
                        tight: bool, seed: u64) {
        let r = seed as usize % g.vertex_count();
        let p = params(eps, lambda, k, tight, seed);
        let sp = sparsify_vertex(&g, r, &p).unwrap();
        prop_assert!(sp.structural_violations(&g).is_empty(), "{:?}", sp.structural_violations(&g));
        let core = sparsify_vertex_deferred(&g, &p).unwrap();
        let (attached, _) = core.attach_root(r).unwrap();
        prop_assert!(attached.structural_violations(&g).is_empty());
    }
}
