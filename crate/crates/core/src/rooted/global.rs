use std::collections::{BTreeSet, HashMap};

use rand::distributions::WeightedIndex;
use rand::prelude::Distribution;

use crate::error::{Error, Result};
use crate::graph::{CutElements, CutResult, VertexId, VertexWeightedDigraph, WeightedDigraph};
use crate::oracle::reversed_sink;
use crate::rng::SeedStream;
use crate::sparsify::{ln_floor1, sparsify_vertex_deferred, SparsifyParams, VertexSparsifierCore};

use super::edge::rooted_ec;
use super::vertex::rooted_vc;
use super::{ApproxCutReport, DriverConfig, Tracker};

const EDGE_STREAM: u64 = 0x9ec;
const VERTEX_STREAM: u64 = 0x97c;

/// `(1+ε)`-approximate minimum global edge cut: rooted runs from vertex 0
/// in the graph and in its reverse.
pub fn approx_global_ec(g: &WeightedDigraph, cfg: &DriverConfig) -> Result<ApproxCutReport> {
    let n = g.vertex_count();
    if n < 2 {
        return Err(Error::TooSmall);
    }
    let stream = SeedStream::new(cfg.seed).child(EDGE_STREAM);
    let mut tr = Tracker::default();
    rooted_ec(g, 0, cfg, stream.child(0), false, &mut tr)?;
    let gr = g.reverse();
    let mut back = Tracker::default();
    rooted_ec(&gr, 0, cfg, stream.child(1), true, &mut back)?;
    if let Some(c) = back.best.take() {
        let (root, sink) = reversed_sink(n, &c.sink_component, &[]);
        let mapped = CutResult::edge_cut(g, root, sink);
        debug_assert_eq!(mapped.weight_units, c.weight_units);
        back.best = Some(mapped);
    }
    tr.merge(back);
    Ok(tr.finish(cfg.seed))
}

/// Vertices whose out-neighbourhood misses some other vertex.
fn has_non_neighbour(g: &VertexWeightedDigraph, v: VertexId) -> bool {
    let distinct: BTreeSet<VertexId> = g.out_neighbors(v).iter().copied().collect();
    distinct.len() + 1 < g.vertex_count()
}

/// `(1+ε)`-approximate minimum global vertex cut. Roots are sampled in
/// proportion to their weight; each runs the rooted pipeline in both
/// orientations on sparsifier cores shared across roots. `NoCut` for a
/// complete digraph.
pub fn approx_global_vc(g: &VertexWeightedDigraph, cfg: &DriverConfig) -> Result<ApproxCutReport> {
    cfg.validate()?;
    let n = g.vertex_count();
    if n < 2 {
        return Err(Error::TooSmall);
    }
    let mut tr = Tracker::default();
    if !(0..n).any(|v| has_non_neighbour(g, v)) {
        return Ok(tr.finish(cfg.seed));
    }
    let gr = g.reverse();
    // A vertex that cannot reach, or be reached from, vertex 0 gives a cut
    // of weight zero.
    let forward = g.reachable_from(0);
    if forward.iter().any(|&r| !r) {
        let sink = (0..n).filter(|&v| !forward[v]).collect();
        tr.offer(CutResult::vertex_cut(g, 0, sink).expect("nothing reachable enters the set"));
        return Ok(tr.finish(cfg.seed));
    }
    let backward = gr.reachable_from(0);
    if backward.iter().any(|&r| !r) {
        let cut_off: Vec<VertexId> = (0..n).filter(|&v| !backward[v]).collect();
        let (root, sink) = reversed_sink(n, &cut_off, &[]);
        tr.offer(CutResult::vertex_cut(g, root, sink).expect("the set has no out-edges"));
        return Ok(tr.finish(cfg.seed));
    }
    tr.counts.edge_scans += 2 * g.edge_count() as u64;
    // Every non-dominated root yields a singleton candidate.
    for t in 0..n {
        if let Some(r) = (0..n).find(|&r| r != t && !g.out_neighbors(r).contains(&t)) {
            tr.offer(CutResult::vertex_cut(g, r, vec![t]).expect("r has no edge into t"));
        }
    }

    let stream = SeedStream::new(cfg.seed).child(VERTEX_STREAM);
    let total = g.total_weight();
    let w_min = g.weights().iter().copied().min().expect("n >= 2");
    let per = (cfg.constants.samples * ln_floor1(n)).ceil() as u64;
    let cap = n as u64 * per;
    let roots_needed = |kappa: u64| {
        let slack = total.saturating_sub(kappa).max(w_min);
        let l = (cfg.constants.samples * total as f64 * ln_floor1(n) / slack as f64).ceil() as u64;
        l.min(cap)
    };
    let pick = WeightedIndex::new(g.weights()).expect("positive weights");
    let mut cores: [HashMap<(u64, usize), VertexSparsifierCore>; 2] = [HashMap::new(), HashMap::new()];
    let mut done = vec![false; n];
    let mut i = 0u64;
    while i < roots_needed(tr.best_units().expect("a singleton candidate exists")) {
        let r = pick.sample(&mut stream.path(&[0, i]).rng());
        i += 1;
        if std::mem::replace(&mut done[r], true) {
            continue;
        }
        for (orient, h) in [(0usize, g), (1, &gr)] {
            let cache = &mut cores[orient];
            let core_seed = stream.path(&[1, orient as u64]);
            let mut attach = |p: &SparsifyParams| {
                let key = (p.lambda_units, p.k);
                let mut built = 0;
                if !cache.contains_key(&key) {
                    let p = SparsifyParams { seed: core_seed.path(&[p.lambda_units, p.k as u64]), ..*p };
                    let core = sparsify_vertex_deferred(h, &p)?;
                    built = core.work;
                    cache.insert(key, core);
                }
                let (s, work) = cache[&key].attach_root(r)?;
                Ok((s, built, work))
            };
            let mut local = Tracker::default();
            rooted_vc(h, r, cfg, stream.path(&[2, orient as u64, r as u64]), orient == 1, &mut attach, &mut local)?;
            if orient == 1 {
                if let Some(c) = local.best.take() {
                    let CutElements::Vertices(sep) = &c.elements else { unreachable!("vertex cut") };
                    let (root, sink) = reversed_sink(n, &c.sink_component, sep);
                    let mapped = CutResult::vertex_cut(g, root, sink).expect("reversed cut maps to a cut");
                    debug_assert!(mapped.weight_units <= c.weight_units);
                    local.best = Some(mapped);
                }
            }
            tr.merge(local);
        }
    }
    Ok(tr.finish(cfg.seed))
}
