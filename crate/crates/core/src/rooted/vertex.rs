use crate::error::{Error, Result};
use crate::graph::{CutResult, VertexId, VertexWeightedDigraph};
use crate::local::{from_sparse, LocalQuery, LocalQueryAnswer};
use crate::maxflow::vertex_max_flow;
use crate::rng::SeedStream;
use crate::sparsify::{sparsify_vertex, SparsifiedVertexGraph, SparsifyParams};

use super::{guess_grid, k_grid, sample, small_top, ApproxCutReport, Branch, DriverConfig, GuessRecord, Tracker};

const STREAM: u64 = 0x7c;

/// Produces the sparsified graph for given parameters, with the shared and
/// the root-specific work spent.
pub(crate) type Sparsifier<'a> = dyn FnMut(&SparsifyParams) -> Result<(SparsifiedVertexGraph, u64, u64)> + 'a;

/// `(1+ε)`-approximate minimum vertex `r`-cut; `NoCut` when the root has an
/// edge to every other vertex.
pub fn approx_rooted_vc(g: &VertexWeightedDigraph, root: VertexId, cfg: &DriverConfig) -> Result<ApproxCutReport> {
    let mut tr = Tracker::default();
    let mut direct = |p: &SparsifyParams| {
        let s = sparsify_vertex(g, root, p)?;
        let work = (g.vertex_count() + g.edge_count() + s.graph.edge_count()) as u64;
        Ok((s, work, 0))
    };
    rooted_vc(g, root, cfg, SeedStream::new(cfg.seed).child(STREAM), false, &mut direct, &mut tr)?;
    Ok(tr.finish(cfg.seed))
}

pub(crate) fn rooted_vc(
    g: &VertexWeightedDigraph,
    root: VertexId,
    cfg: &DriverConfig,
    stream: SeedStream,
    reversed: bool,
    sparsifier: &mut Sparsifier<'_>,
    tr: &mut Tracker,
) -> Result<()> {
    cfg.validate()?;
    let n = g.vertex_count();
    if n < 2 {
        return Err(Error::TooSmall);
    }
    g.check_vertex(root)?;
    let eligible = g.eligible_sinks(root);
    if eligible.is_empty() {
        return Ok(());
    }
    let reach = g.reachable_from(root);
    tr.counts.edge_scans += g.edge_count() as u64;
    let unreachable: Vec<VertexId> = (0..n).filter(|&v| !reach[v]).collect();
    if !unreachable.is_empty() {
        tr.offer(CutResult::vertex_cut(g, root, unreachable).expect("nothing reachable enters the set"));
        return Ok(());
    }
    for &t in &eligible {
        tr.offer(CutResult::vertex_cut(g, root, vec![t]).expect("eligible sink"));
    }
    tr.counts.edge_scans += g.edge_count() as u64;
    let upper = tr.best_units().expect("eligible sinks exist");
    let lower = g.weights().iter().copied().min().expect("n >= 2");
    let eps_l = cfg.eps / 2.0;
    let ks = k_grid(eligible.len());
    let k_star = cfg.k_star.unwrap_or(cfg.eps * (n as f64).sqrt());
    let top = small_top(&ks, k_star);
    for (gi, kappa) in guess_grid(lower, upper).into_iter().enumerate() {
        let s = stream.child(gi as u64);
        let params = |k: usize, seed: SeedStream| SparsifyParams {
            eps: eps_l * cfg.constants.c_eps,
            lambda_units: kappa,
            k,
            constants: cfg.constants,
            seed,
        };
        if let Some(top) = top {
            for ell in k_grid(2 * top).into_iter().filter(|&l| l <= ks[ks.len() - 1]) {
                let seed = s.path(&[0, ell as u64]);
                let (sp, work, attach) = sparsifier(&params(ell, seed.child(0)))?;
                tr.counts.sparsify_calls += 1;
                tr.counts.sparsify_work += work;
                tr.counts.attach_work += attach;
                let best = small_sink(g, root, sp, eps_l, ell, cfg, seed, tr)?;
                tr.guesses.push(GuessRecord { root, reversed, guess_units: kappa, k: ell, branch: Branch::SmallSink, best_units: best });
            }
        }
        for k in ks.iter().copied().filter(|&k| top.map_or(true, |t| k > t)) {
            let seed = s.path(&[1, k as u64]);
            let (sp, work, attach) = sparsifier(&params(k, seed.child(0)))?;
            tr.counts.sparsify_calls += 1;
            tr.counts.sparsify_work += work;
            tr.counts.attach_work += attach;
            let best = big_sink(g, root, &sp, k, cfg, seed, tr)?;
            tr.guesses.push(GuessRecord { root, reversed, guess_units: kappa, k, branch: Branch::BigSink, best_units: best });
        }
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn small_sink(
    g: &VertexWeightedDigraph,
    root: VertexId,
    sp: SparsifiedVertexGraph,
    eps: f64,
    ell: usize,
    cfg: &DriverConfig,
    seed: SeedStream,
    tr: &mut Tracker,
) -> Result<Option<u64>> {
    let s = from_sparse(sp, g.edge_count(), eps, &cfg.local);
    tr.counts.local_builds += 1;
    let pool = s.sparse.eligible_sinks.clone();
    let count = cfg.sample_count(pool.len(), ell, g.vertex_count());
    let mut best = None;
    for t in sample(&pool, count, &mut seed.child(1).rng()) {
        let (answer, stats) = s.query(t)?;
        tr.absorb_local(stats);
        if let LocalQueryAnswer::Found { sink_component, .. } = answer {
            if let Some(c) = CutResult::vertex_cut(g, root, sink_component) {
                let w = tr.offer(c);
                best = Some(best.map_or(w, |b: u64| b.min(w)));
            }
        }
    }
    Ok(best)
}

fn big_sink(
    g: &VertexWeightedDigraph,
    root: VertexId,
    sp: &SparsifiedVertexGraph,
    k: usize,
    cfg: &DriverConfig,
    seed: SeedStream,
    tr: &mut Tracker,
) -> Result<Option<u64>> {
    let pool = &sp.eligible_sinks;
    let count = cfg.sample_count(pool.len(), k, g.vertex_count());
    let mut best = None;
    for t in sample(pool, count, &mut seed.child(1).rng()) {
        let f = vertex_max_flow(&sp.graph, sp.root, t)?;
        tr.counts.flow_calls += 1;
        tr.counts.edge_scans += f.edge_scans;
        let sink: Vec<VertexId> = f.sink_component.into_iter().filter(|&v| !sp.is_aux(v)).collect();
        if let Some(c) = CutResult::vertex_cut(g, root, sink) {
            let w = tr.offer(c);
            best = Some(best.map_or(w, |b: u64| b.min(w)));
        }
    }
    Ok(best)
}
