use crate::error::{Error, Result};
use crate::graph::{in_cut_weight, VertexId, WeightedDigraph};
use crate::sparsify::{sparsify_edge, SparsifiedGraph, SparsifyParams};

use super::engine::{drive, FlowEnd, Residual, Template};
use super::{LocalConfig, LocalQuery, LocalQueryAnswer, LocalStats};

/// Local `(r, t)` edge-cut structure over a sparsified graph.
#[derive(Debug, Clone)]
pub struct LocalEcStructure {
    pub sparse: SparsifiedGraph,
    template: Template,
    /// Input vertex count.
    n: usize,
    input_root: VertexId,
    flow_limit: u64,
    budget: u64,
    config: LocalConfig,
    /// Work spent building, sparsification included.
    pub build_work: u64,
}

/// Sparsifies `g` with accuracy `c_eps · p.eps` and prepares the reversed
/// residual template. `p.eps` is the accuracy of the answers.
pub fn build_local_ec(
    g: &WeightedDigraph,
    root: VertexId,
    p: &SparsifyParams,
    config: &LocalConfig,
) -> Result<LocalEcStructure> {
    p.validate()?;
    let inner = SparsifyParams { eps: p.eps * p.constants.c_eps, ..*p };
    let sparse = sparsify_edge(g, root, &inner)?;
    let h = &sparse.graph;
    let r = sparse.root;
    let mut escape = vec![0u64; h.vertex_count()];
    let mut arcs = Vec::with_capacity(h.edge_count());
    for e in h.edges() {
        if e.tail == r {
            escape[e.head] += e.weight;
        } else if e.head != r {
            arcs.push((e.head, e.tail, e.weight));
        }
    }
    let template = Template::new(h.vertex_count(), arcs, escape);
    let d = sparse.derived;
    let flow_limit = ((1.0 + p.eps / 2.0) * d.steps as f64).floor() as u64;
    let eps_s = inner.eps;
    let formula = (config.budget_factor * (p.k * p.k) as f64 * crate::sparsify::ln_floor1(g.vertex_count())
        / (eps_s * eps_s))
        .ceil() as u64;
    // Residual arcs among saturated vertices, plus the one that ends the search.
    let saturated = flow_limit / d.aux;
    let budget = formula.max(2 * saturated * saturated + 2);
    let build_work = (g.vertex_count() + g.edge_count() + h.edge_count()) as u64;
    Ok(LocalEcStructure {
        sparse,
        template,
        n: g.vertex_count(),
        input_root: root,
        flow_limit,
        budget,
        config: *config,
        build_work,
    })
}

impl LocalEcStructure {
    fn audit(&self, res: &Residual<'_>, stats: &mut LocalStats) {
        stats.audit_checks += 1;
        let saturated = res.escape_used().filter(|&(x, used)| used == self.template.escape[x]).count() as u64;
        stats.max_saturated = stats.max_saturated.max(saturated);
        if saturated * self.sparse.derived.aux > res.value {
            stats.saturation_violations += 1;
        }
    }
}

impl LocalQuery for LocalEcStructure {
    fn query(&self, t: VertexId) -> Result<(LocalQueryAnswer, LocalStats)> {
        if t >= self.n {
            return Err(Error::VertexOutOfRange { id: t, n: self.n });
        }
        if t == self.input_root {
            return Err(Error::SameTerminals(t));
        }
        let mut stats = LocalStats { queries: 1, ..Default::default() };
        let Some(source) = self.sparse.from_original[t] else {
            return Ok((LocalQueryAnswer::AboveThreshold, stats));
        };
        let mut res = Residual::new(&self.template, source, false);
        let audit = self.config.audit;
        let end = drive(&mut res, self.flow_limit, self.config.unit_augmentation, self.budget, &mut stats, |r, s| {
            if audit {
                self.audit(r, s)
            }
        });
        let FlowEnd::Cut(reach) = end else {
            return Ok((LocalQueryAnswer::AboveThreshold, stats));
        };
        let mut sink: Vec<VertexId> = reach.into_iter().collect();
        sink.sort_unstable();
        let weight = in_cut_weight(&self.sparse.graph, &sink);
        debug_assert_eq!(weight, res.value, "local flow differs from its cut");
        if weight > self.flow_limit {
            return Ok((LocalQueryAnswer::AboveThreshold, stats));
        }
        let answer = LocalQueryAnswer::Found { sink_component: self.sparse.original_set(&sink), sparse_weight: weight };
        Ok((answer, stats))
    }

    fn budget(&self) -> u64 {
        self.budget
    }

    fn flow_limit(&self) -> u64 {
        self.flow_limit
    }
}
