//! Residual state for the local Ford–Fulkerson searches.
//!
//! The template is immutable; a [`Residual`] holds only the arcs a query
//! has touched, so its cost is bounded by the search, not the graph.

use std::collections::{HashMap, HashSet};

use super::LocalStats;

/// Capacity given to arcs leaving an uncapacitated source.
pub(crate) const INFINITE: u64 = u64::MAX / 4;

/// Arcs in CSR order, sorted by head within each tail.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Template {
    pub start: Vec<usize>,
    pub head: Vec<usize>,
    pub tail: Vec<usize>,
    pub cap: Vec<u64>,
    /// Capacity of the implicit arc from each node to the sink.
    pub escape: Vec<u64>,
    /// An arc whose head may complete the path for this node (the
    /// `(v⁻, v⁺)` arc in split graphs).
    pub via: Vec<Option<usize>>,
}

impl Template {
    /// Builds a template, merging parallel arcs by summing capacities.
    pub fn new(nodes: usize, mut arcs: Vec<(usize, usize, u64)>, escape: Vec<u64>) -> Self {
        arcs.sort_unstable_by_key(|&(u, v, _)| (u, v));
        let mut merged: Vec<(usize, usize, u64)> = Vec::with_capacity(arcs.len());
        for (u, v, c) in arcs {
            match merged.last_mut() {
                Some(last) if last.0 == u && last.1 == v => last.2 = last.2.saturating_add(c),
                _ => merged.push((u, v, c)),
            }
        }
        let mut start = vec![0usize; nodes + 1];
        for &(u, _, _) in &merged {
            start[u + 1] += 1;
        }
        for i in 0..nodes {
            start[i + 1] += start[i];
        }
        Template {
            start,
            head: merged.iter().map(|a| a.1).collect(),
            tail: merged.iter().map(|a| a.0).collect(),
            cap: merged.iter().map(|a| a.2).collect(),
            escape,
            via: vec![None; nodes],
        }
    }

    pub fn find_arc(&self, u: usize, v: usize) -> Option<usize> {
        let range = self.start[u]..self.start[u + 1];
        self.head[range.clone()].binary_search(&v).ok().map(|i| range.start + i)
    }

    pub fn out_arcs(&self, u: usize) -> std::ops::Range<usize> {
        self.start[u]..self.start[u + 1]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Step {
    Forward(usize),
    Backward(usize),
    Escape(usize),
}

pub(crate) enum Search {
    Path(Vec<Step>),
    Blocked(HashSet<usize>),
    OverBudget,
}

#[derive(Debug, Default, Clone, Copy)]
pub(crate) struct SearchCost {
    /// Arcs examined, residual or not.
    pub scans: u64,
    /// Arcs examined that had positive residual capacity.
    pub residual_scans: u64,
}

pub(crate) struct Residual<'a> {
    pub t: &'a Template,
    pub source: usize,
    infinite_source: bool,
    flow: HashMap<usize, u64>,
    /// For each node, the arcs into it carrying flow, sorted by id.
    back: HashMap<usize, Vec<usize>>,
    escape_used: HashMap<usize, u64>,
    pub value: u64,
}

impl<'a> Residual<'a> {
    pub fn new(t: &'a Template, source: usize, infinite_source: bool) -> Self {
        Residual {
            t,
            source,
            infinite_source,
            flow: HashMap::new(),
            back: HashMap::new(),
            escape_used: HashMap::new(),
            value: 0,
        }
    }

    pub fn capacity(&self, a: usize) -> u64 {
        if self.infinite_source && self.t.tail[a] == self.source {
            INFINITE
        } else {
            self.t.cap[a]
        }
    }

    pub fn flow(&self, a: usize) -> u64 {
        self.flow.get(&a).copied().unwrap_or(0)
    }

    pub fn forward_residual(&self, a: usize) -> u64 {
        self.capacity(a) - self.flow(a)
    }

    pub fn escape_residual(&self, x: usize) -> u64 {
        self.t.escape[x] - self.escape_used.get(&x).copied().unwrap_or(0)
    }

    pub fn escape_used(&self) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.escape_used.iter().map(|(&x, &u)| (x, u))
    }

    pub fn back_arcs(&self, x: usize) -> &[usize] {
        self.back.get(&x).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Nodes with any flow state attached.
    pub fn touched(&self) -> HashSet<usize> {
        let mut out: HashSet<usize> = self.escape_used.keys().copied().collect();
        for &a in self.flow.keys() {
            out.insert(self.t.tail[a]);
            out.insert(self.t.head[a]);
        }
        out.insert(self.source);
        out
    }

    /// Residual out-degree of `x`, the escape arc included.
    pub fn out_degree(&self, x: usize) -> usize {
        let fwd = self.t.out_arcs(x).filter(|&a| self.forward_residual(a) > 0).count();
        fwd + self.back_arcs(x).len() + usize::from(self.escape_residual(x) > 0)
    }

    fn shortcut(&self, x: usize) -> Option<Vec<Step>> {
        if self.escape_residual(x) > 0 {
            return Some(vec![Step::Escape(x)]);
        }
        let a = self.t.via[x]?;
        let y = self.t.head[a];
        (self.forward_residual(a) > 0 && self.escape_residual(y) > 0).then(|| vec![Step::Forward(a), Step::Escape(y)])
    }

    /// Depth-first search for an augmenting path with the saturation
    /// shortcut. Forward arcs are tried in order of head, then residual
    /// backward arcs in order of id.
    pub fn search(&self, budget: u64, cost: &mut SearchCost) -> Search {
        let mut visited = HashSet::from([self.source]);
        if let Some(tail) = self.shortcut(self.source) {
            return Search::Path(tail);
        }
        // Frames: node, cursor over forward then backward arcs.
        let mut stack: Vec<(usize, usize)> = vec![(self.source, 0)];
        let mut path: Vec<Step> = Vec::new();
        while let Some(&mut (x, ref mut cursor)) = stack.last_mut() {
            let fwd = self.t.out_arcs(x);
            let fwd_len = fwd.len();
            let back = self.back_arcs(x);
            if *cursor >= fwd_len + back.len() {
                stack.pop();
                path.pop();
                continue;
            }
            let i = *cursor;
            *cursor += 1;
            cost.scans += 1;
            let (step, y, residual) = if i < fwd_len {
                let a = fwd.start + i;
                (Step::Forward(a), self.t.head[a], self.forward_residual(a))
            } else {
                let a = back[i - fwd_len];
                (Step::Backward(a), self.t.tail[a], self.flow(a))
            };
            if residual == 0 {
                continue;
            }
            cost.residual_scans += 1;
            if cost.residual_scans > budget {
                return Search::OverBudget;
            }
            if !visited.insert(y) {
                continue;
            }
            path.push(step);
            if let Some(tail) = self.shortcut(y) {
                path.extend(tail);
                return Search::Path(path);
            }
            stack.push((y, 0));
        }
        Search::Blocked(visited)
    }

    pub fn bottleneck(&self, path: &[Step]) -> u64 {
        path.iter()
            .map(|&s| match s {
                Step::Forward(a) => self.forward_residual(a),
                Step::Backward(a) => self.flow(a),
                Step::Escape(x) => self.escape_residual(x),
            })
            .min()
            .unwrap_or(0)
    }

    pub fn augment(&mut self, path: &[Step], amount: u64) {
        for &s in path {
            match s {
                Step::Forward(a) => {
                    let f = self.flow.entry(a).or_insert(0);
                    if *f == 0 {
                        let list = self.back.entry(self.t.head[a]).or_default();
                        let pos = list.binary_search(&a).unwrap_err();
                        list.insert(pos, a);
                    }
                    *f += amount;
                }
                Step::Backward(a) => {
                    let f = self.flow.get_mut(&a).expect("backward step on an arc without flow");
                    *f -= amount;
                    if *f == 0 {
                        self.flow.remove(&a);
                        let list = self.back.get_mut(&self.t.head[a]).expect("back list present");
                        let pos = list.binary_search(&a).expect("arc listed");
                        list.remove(pos);
                    }
                }
                Step::Escape(x) => *self.escape_used.entry(x).or_insert(0) += amount,
            }
        }
        self.value += amount;
    }
}

pub(crate) enum FlowEnd {
    /// No augmenting path remains; the nodes reachable from the source.
    Cut(HashSet<usize>),
    AboveLimit,
    OverBudget,
}

/// Augments until the flow exceeds `limit` or no path remains.
pub(crate) fn drive(
    res: &mut Residual<'_>,
    limit: u64,
    unit: bool,
    budget: u64,
    stats: &mut LocalStats,
    mut audit: impl FnMut(&Residual<'_>, &mut LocalStats),
) -> FlowEnd {
    loop {
        if res.value > limit {
            return FlowEnd::AboveLimit;
        }
        let mut cost = SearchCost::default();
        let outcome = res.search(budget, &mut cost);
        stats.searches += 1;
        stats.scans += cost.scans;
        stats.residual_scans += cost.residual_scans;
        stats.max_search = stats.max_search.max(cost.residual_scans);
        match outcome {
            Search::Path(path) => {
                let amount = if unit { 1 } else { res.bottleneck(&path).min(limit + 1 - res.value) };
                res.augment(&path, amount);
                stats.augmentations += 1;
                audit(res, stats);
            }
            Search::Blocked(reach) => return FlowEnd::Cut(reach),
            Search::OverBudget => {
                stats.budget_exceeded += 1;
                debug_assert!(false, "local search exceeded its budget of {budget} residual arcs");
                return FlowEnd::OverBudget;
            }
        }
    }
}
