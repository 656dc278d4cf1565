mod common;

use common::*;
use dicut::oracle::{exact_global_ec, exact_global_vc, exact_rooted_ec, exact_rooted_vc};
use dicut::{
    approx_global_ec, approx_global_vc, approx_rooted_ec, approx_rooted_vc, build_local_ec, build_local_vc,
    CutOutcome, DriverConfig, LocalConfig, LocalQuery, LocalQueryAnswer, SeedStream, SparsifyParams,
};
use proptest::prelude::*;

fn cfg(seed: u64) -> DriverConfig {
    DriverConfig { eps: 0.3, seed, ..Default::default() }
}

fn at_least(found: &CutOutcome, exact: &CutOutcome) -> bool {
    match (found, exact) {
        (CutOutcome::NoCut, CutOutcome::NoCut) => true,
        (CutOutcome::Cut(f), CutOutcome::Cut(e)) => f.weight_units >= e.weight_units,
        _ => false,
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rooted_ec_is_valid(g in edge_graph(12, 20), seed: u64) {
        let r = approx_rooted_ec(&g, 0, &cfg(seed)).unwrap();
        let c = r.best.cut().unwrap();
        prop_assert!(c.is_valid_edge_cut(&g));
        prop_assert!(c.weight_units >= exact_rooted_ec(&g, 0).unwrap().weight_units);
        prop_assert_eq!(r.local.violations(), 0);
    }

    #[test]
    fn global_ec_is_valid(g in edge_graph(10, 20), seed: u64) {
        let c = approx_global_ec(&g, &cfg(seed)).unwrap().best.cut().unwrap().clone();
        prop_assert!(c.is_valid_edge_cut(&g));
        prop_assert!(c.weight_units >= exact_global_ec(&g).unwrap().weight_units);
    }

    #[test]
    fn rooted_vc_is_valid(g in vertex_graph(12, 20), seed: u64) {
        let r = approx_rooted_vc(&g, 0, &cfg(seed)).unwrap();
        if let CutOutcome::Cut(c) = &r.best {
            prop_assert!(c.is_valid_vertex_cut(&g));
        }
        prop_assert!(at_least(&r.best, &exact_rooted_vc(&g, 0).unwrap()));
    }

    #[test]
    fn global_vc_is_valid(g in vertex_graph(9, 20), seed: u64) {
        let r = approx_global_vc(&g, &cfg(seed)).unwrap();
        if let CutOutcome::Cut(c) = &r.best {
            prop_assert!(c.is_valid_vertex_cut(&g));
        }
        prop_assert!(at_least(&r.best, &exact_global_vc(&g).unwrap()));
    }

    #[test]
    fn local_answers_are_cuts(g in edge_graph(10, 20), lambda in 1u64..80, k in 1usize..5, seed: u64) {
        let p = SparsifyParams::new(0.25, lambda, k, SeedStream::new(seed));
        let st = build_local_ec(&g, 0, &p, &LocalConfig { audit: true, ..Default::default() }).unwrap();
        for t in 1..g.vertex_count() {
            let (answer, stats) = st.query(t).unwrap();
            prop_assert_eq!(stats.violations(), 0);
            if let LocalQueryAnswer::Found { sink_component, sparse_weight } = answer {
                prop_assert!(sink_component.contains(&t) && !sink_component.contains(&0));
                prop_assert!(sparse_weight <= st.flow_limit());
            }
        }
    }

    #[test]
    fn local_vertex_answers_are_cuts(g in vertex_graph(10, 20), kappa in 1u64..80, k in 1usize..5, seed: u64) {
        let p = SparsifyParams::new(0.25, kappa, k, SeedStream::new(seed));
        let st = build_local_vc(&g, 0, &p, &LocalConfig { audit: true, ..Default::default() }).unwrap();
        for t in st.sparse.eligible_sinks.clone() {
            let (answer, stats) = st.query(t).unwrap();
            prop_assert_eq!(stats.violations(), 0);
            if let LocalQueryAnswer::Found { sink_component, .. } = answer {
                prop_assert!(sink_component.contains(&t));
                prop_assert!(dicut::vertex_in_cut(&g, 0, &sink_component).is_some());
            }
        }
    }
}

#[test]
fn unit_augmentation_agrees_on_validity() {
    let mut rng = SeedStream::new(12).rng();
    let g = dicut::generate::random_edge_graph(14, 3.0, 9, &mut rng);
    let exact = exact_rooted_ec(&g, 0).unwrap().weight_units;
    let unit = DriverConfig { local: LocalConfig { unit_augmentation: true, audit: true, ..Default::default() }, ..cfg(4) };
    let r = approx_rooted_ec(&g, 0, &unit).unwrap();
    assert!(r.best.cut().unwrap().weight_units >= exact);
    assert_eq!(r.local.violations(), 0);
}

#[test]
fn reports_depend_only_on_the_seed() {
    let mut rng = SeedStream::new(13).rng();
    let g = dicut::generate::random_vertex_graph(16, 3.0, 20, &mut rng);
    assert_eq!(approx_global_vc(&g, &cfg(8)).unwrap(), approx_global_vc(&g, &cfg(8)).unwrap());
}

#[test]
fn invalid_configs_are_rejected() {
    let g = dicut::WeightedDigraph::new(2, [(0, 1, 1)]).unwrap();
    for bad in [DriverConfig { eps: 0.0, ..cfg(0) }, DriverConfig { eps: 1.0, ..cfg(0) }, DriverConfig { fail_prob: 0.0, ..cfg(0) }] {
        assert!(approx_rooted_ec(&g, 0, &bad).is_err());
    }
    assert!(approx_rooted_ec(&g, 5, &cfg(0)).is_err());
}
