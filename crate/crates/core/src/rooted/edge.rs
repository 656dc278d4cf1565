use crate::error::{Error, Result};
use crate::graph::{CutResult, VertexId, WeightedDigraph};
use crate::local::{build_local_ec, LocalQuery, LocalQueryAnswer};
use crate::maxflow::max_flow;
use crate::rng::SeedStream;
use crate::sparsify::{sparsify_edge, SparsifyParams};

use super::{k_grid, sample, small_top, ApproxCutReport, Branch, DriverConfig, GuessRecord, Tracker};

const STREAM: u64 = 0xec;

/// `(1+ε)`-approximate minimum edge `r`-cut.
pub fn approx_rooted_ec(g: &WeightedDigraph, root: VertexId, cfg: &DriverConfig) -> Result<ApproxCutReport> {
    let mut tr = Tracker::default();
    rooted_ec(g, root, cfg, SeedStream::new(cfg.seed).child(STREAM), false, &mut tr)?;
    Ok(tr.finish(cfg.seed))
}

pub(crate) fn rooted_ec(
    g: &WeightedDigraph,
    root: VertexId,
    cfg: &DriverConfig,
    stream: SeedStream,
    reversed: bool,
    tr: &mut Tracker,
) -> Result<()> {
    cfg.validate()?;
    let n = g.vertex_count();
    if n < 2 {
        return Err(Error::TooSmall);
    }
    g.check_vertex(root)?;
    let reach = g.reachable_from(root);
    tr.counts.edge_scans += g.edge_count() as u64;
    let unreachable: Vec<VertexId> = (0..n).filter(|&v| !reach[v]).collect();
    if !unreachable.is_empty() {
        tr.offer(CutResult::edge_cut(g, root, unreachable));
        return Ok(());
    }
    for t in (0..n).filter(|&t| t != root) {
        tr.offer(CutResult::edge_cut(g, root, vec![t]));
    }
    tr.counts.edge_scans += g.edge_count() as u64;
    let upper = tr.best_units().expect("n >= 2");
    let lower = g.min_weight().expect("a reachable vertex has an entering edge");
    let eps_l = cfg.eps / 2.0;
    let ks = k_grid(n - 1);
    let k_star = cfg.k_star.unwrap_or((n as f64).sqrt() * cfg.eps.powf(4.0 / 3.0));
    let top = small_top(&ks, k_star);
    for (gi, lambda) in super::guess_grid(lower, upper).into_iter().enumerate() {
        let s = stream.child(gi as u64);
        if let Some(top) = top {
            for ell in k_grid(2 * top).into_iter().filter(|&l| l <= ks[ks.len() - 1]) {
                let best = small_sink(g, root, lambda, ell, eps_l, cfg, s.path(&[0, ell as u64]), tr)?;
                tr.guesses.push(GuessRecord { root, reversed, guess_units: lambda, k: ell, branch: Branch::SmallSink, best_units: best });
            }
        }
        for k in ks.iter().copied().filter(|&k| top.map_or(true, |t| k > t)) {
            let best = big_sink(g, root, lambda, k, eps_l, cfg, s.path(&[1, k as u64]), tr)?;
            tr.guesses.push(GuessRecord { root, reversed, guess_units: lambda, k, branch: Branch::BigSink, best_units: best });
        }
    }
    Ok(())
}

/// Local queries with sink bound `ell` from sampled sinks.
#[allow(clippy::too_many_arguments)]
fn small_sink(
    g: &WeightedDigraph,
    root: VertexId,
    lambda: u64,
    ell: usize,
    eps: f64,
    cfg: &DriverConfig,
    seed: SeedStream,
    tr: &mut Tracker,
) -> Result<Option<u64>> {
    let n = g.vertex_count();
    let p = SparsifyParams { eps, lambda_units: lambda, k: ell, constants: cfg.constants, seed: seed.child(0) };
    let s = build_local_ec(g, root, &p, &cfg.local)?;
    tr.counts.local_builds += 1;
    tr.counts.sparsify_calls += 1;
    tr.counts.sparsify_work += s.build_work;
    let pool: Vec<VertexId> = (0..n).filter(|&v| v != root).collect();
    let count = cfg.sample_count(pool.len(), ell, n);
    let mut best = None;
    for t in sample(&pool, count, &mut seed.child(1).rng()) {
        let (answer, stats) = s.query(t)?;
        tr.absorb_local(stats);
        if let LocalQueryAnswer::Found { sink_component, .. } = answer {
            let w = tr.offer(CutResult::edge_cut(g, root, sink_component));
            best = Some(best.map_or(w, |b: u64| b.min(w)));
        }
    }
    Ok(best)
}

/// Exact flows on a sparsified graph from sampled sinks.
#[allow(clippy::too_many_arguments)]
fn big_sink(
    g: &WeightedDigraph,
    root: VertexId,
    lambda: u64,
    k: usize,
    eps: f64,
    cfg: &DriverConfig,
    seed: SeedStream,
    tr: &mut Tracker,
) -> Result<Option<u64>> {
    let n = g.vertex_count();
    let p = SparsifyParams { eps: eps * cfg.constants.c_eps, lambda_units: lambda, k, constants: cfg.constants, seed: seed.child(0) };
    let sp = sparsify_edge(g, root, &p)?;
    let h = &sp.graph;
    tr.counts.sparsify_calls += 1;
    tr.counts.sparsify_work += (n + g.edge_count() + h.edge_count()) as u64;
    let pool: Vec<VertexId> = (0..h.vertex_count()).filter(|&v| v != sp.root).collect();
    let count = cfg.sample_count(pool.len(), k, n);
    let mut best = None;
    for t in sample(&pool, count, &mut seed.child(1).rng()) {
        let f = max_flow(h, sp.root, t)?;
        tr.counts.flow_calls += 1;
        tr.counts.edge_scans += f.edge_scans;
        let mut source = vec![false; h.vertex_count()];
        for &v in &f.source_side {
            source[v] = true;
        }
        let sink: Vec<VertexId> = (0..h.vertex_count()).filter(|&v| !source[v]).collect();
        let w = tr.offer(CutResult::edge_cut(g, root, sp.original_set(&sink)));
        best = Some(best.map_or(w, |b: u64| b.min(w)));
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::CutOutcome;
    use crate::oracle::exact_rooted_ec;

    #[test]
    fn two_vertex_graph() {
        let g = WeightedDigraph::new(2, [(0, 1, 5)]).unwrap();
        let r = approx_rooted_ec(&g, 0, &DriverConfig { eps: 0.2, seed: 7, ..Default::default() }).unwrap();
        assert_eq!(r.best.cut().unwrap().weight_units, 5);
    }

    #[test]
    fn unreachable_vertices_give_a_zero_cut() {
        let g = WeightedDigraph::new(3, [(0, 1, 5), (2, 1, 1)]).unwrap();
        let r = approx_rooted_ec(&g, 0, &DriverConfig::default()).unwrap();
        let CutOutcome::Cut(c) = r.best else { panic!() };
        assert_eq!((c.weight_units, c.sink_component), (0, vec![2]));
    }

    #[test]
    fn finds_a_planted_cut() {
        let mut rng = SeedStream::new(4).rng();
        let (g, _) = crate::generate::planted_sink_graph(24, 6, 4.0, 2, &mut rng);
        let exact = exact_rooted_ec(&g, 0).unwrap().weight_units;
        let r = approx_rooted_ec(&g, 0, &DriverConfig { eps: 0.2, seed: 1, ..Default::default() }).unwrap();
        let c = r.best.cut().unwrap();
        assert!(c.is_valid_edge_cut(&g));
        assert!(c.weight_units >= exact && c.weight_units as f64 <= 1.2 * exact as f64);
        assert!(r.guesses.iter().any(|x| x.branch == Branch::BigSink));
        assert!(r.local.violations() == 0);
    }

    #[test]
    fn reports_are_reproducible() {
        let mut rng = SeedStream::new(5).rng();
        let g = crate::generate::random_edge_graph(15, 3.0, 20, &mut rng);
        let cfg = DriverConfig { seed: 9, ..Default::default() };
        assert_eq!(approx_rooted_ec(&g, 0, &cfg).unwrap(), approx_rooted_ec(&g, 0, &cfg).unwrap());
    }
}
