//! Approximate rooted and global connectivity.
//!
//! Each driver guesses the connectivity up to a factor of 2 and the sink
//! size up to a factor of 2. Sink sizes up to a balance point `k*` go to
//! the small-sink routine (local queries from sampled sinks); larger ones
//! go to the big-sink routine (exact flows on a sparsified graph from
//! sampled sinks). Every candidate cut is re-evaluated in the input graph.

mod edge;
mod global;
mod vertex;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::{CutOutcome, CutResult, VertexId};
use crate::local::{LocalConfig, LocalStats};
use crate::sparsify::{ln_floor1, Constants};
use crate::stats::OpCounts;

pub use edge::approx_rooted_ec;
pub use global::{approx_global_ec, approx_global_vc};
pub use vertex::approx_rooted_vc;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DriverConfig {
    /// Target accuracy, in `(0, 1)`.
    pub eps: f64,
    /// Target failure probability, in `(0, 1)`.
    pub fail_prob: f64,
    pub seed: u64,
    pub constants: Constants,
    /// Overrides the small/big balance point.
    pub k_star: Option<f64>,
    pub local: LocalConfig,
}

impl Default for DriverConfig {
    fn default() -> Self {
        DriverConfig {
            eps: 0.25,
            fail_prob: 0.01,
            seed: 0,
            constants: Constants::default(),
            k_star: None,
            local: LocalConfig::default(),
        }
    }
}

impl DriverConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.eps > 0.0 && self.eps < 1.0) {
            return Err(Error::InvalidParameter(format!("eps must lie in (0, 1), got {}", self.eps)));
        }
        if !(self.fail_prob > 0.0 && self.fail_prob < 1.0) {
            return Err(Error::InvalidParameter(format!("fail_prob must lie in (0, 1), got {}", self.fail_prob)));
        }
        if let Some(k) = self.k_star {
            if !(k >= 0.0) {
                return Err(Error::InvalidParameter(format!("k* must be nonnegative, got {k}")));
            }
        }
        Ok(())
    }

    /// Samples needed to hit a sink set of size at least `bound / 2` in a
    /// pool of `pool` vertices.
    fn sample_count(&self, pool: usize, bound: usize, n: usize) -> usize {
        let per = (self.constants.samples * ln_floor1(n)).max((1.0 / self.fail_prob).ln());
        (pool as f64 / bound as f64 * per).ceil() as usize
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    SmallSink,
    BigSink,
}

impl Branch {
    pub fn name(self) -> &'static str {
        match self {
            Branch::SmallSink => "small",
            Branch::BigSink => "big",
        }
    }
}

/// One dispatched `(guess, k)` pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GuessRecord {
    pub root: VertexId,
    /// Whether the run was on the reversed graph.
    pub reversed: bool,
    /// Connectivity guess in units of the input denominator.
    pub guess_units: u64,
    /// Sink size bound of the routine (`ℓ` for the small-sink branch).
    pub k: usize,
    pub branch: Branch,
    /// Lightest re-evaluated candidate this pair produced.
    pub best_units: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ApproxCutReport {
    pub best: CutOutcome,
    pub candidates_examined: u64,
    pub guesses: Vec<GuessRecord>,
    pub seed: u64,
    pub counts: OpCounts,
    pub local: LocalStats,
}

/// Running state of one driver invocation.
#[derive(Debug, Default)]
pub(crate) struct Tracker {
    pub best: Option<CutResult>,
    pub candidates: u64,
    pub guesses: Vec<GuessRecord>,
    pub counts: OpCounts,
    pub local: LocalStats,
}

impl Tracker {
    /// Records a re-evaluated candidate and returns its weight.
    pub fn offer(&mut self, c: CutResult) -> u64 {
        self.candidates += 1;
        let w = c.weight_units;
        if self.best.as_ref().map_or(true, |b| c.better_than(b)) {
            self.best = Some(c);
        }
        w
    }

    pub fn best_units(&self) -> Option<u64> {
        self.best.as_ref().map(|c| c.weight_units)
    }

    pub fn absorb_local(&mut self, s: LocalStats) {
        self.local += s;
        self.counts.local_queries += s.queries;
        self.counts.local_searches += s.searches;
        self.counts.edge_scans += s.scans;
    }

    pub fn merge(&mut self, other: Tracker) {
        if let Some(c) = other.best {
            if self.best.as_ref().map_or(true, |b| c.better_than(b)) {
                self.best = Some(c);
            }
        }
        self.candidates += other.candidates;
        self.guesses.extend(other.guesses);
        self.counts += other.counts;
        self.local += other.local;
    }

    pub fn finish(self, seed: u64) -> ApproxCutReport {
        ApproxCutReport {
            best: self.best.map_or(CutOutcome::NoCut, CutOutcome::Cut),
            candidates_examined: self.candidates,
            guesses: self.guesses,
            seed,
            counts: self.counts,
            local: self.local,
        }
    }
}

/// `lo, 2lo, 4lo, …` up to the first value at least `hi`.
pub(crate) fn guess_grid(lo: u64, hi: u64) -> Vec<u64> {
    let mut out = vec![lo.max(1)];
    while *out.last().unwrap() < hi {
        let next = out.last().unwrap().saturating_mul(2);
        out.push(next);
    }
    out
}

/// `1, 2, 4, …` up to the first power of two at least `max`.
pub(crate) fn k_grid(max: usize) -> Vec<usize> {
    let mut out = vec![1usize];
    while *out.last().unwrap() < max {
        out.push(out.last().unwrap() * 2);
    }
    out
}

/// The largest grid value not above `k_star`, if any.
pub(crate) fn small_top(grid: &[usize], k_star: f64) -> Option<usize> {
    grid.iter().copied().rev().find(|&k| k as f64 <= k_star)
}

/// `count` draws with replacement from `pool`, deduplicated and sorted;
/// the whole pool when `count` reaches its size.
pub(crate) fn sample<R: Rng>(pool: &[VertexId], count: usize, rng: &mut R) -> Vec<VertexId> {
    if count >= pool.len() {
        return pool.to_vec();
    }
    let mut out: Vec<VertexId> = (0..count).map(|_| *pool.choose(rng).expect("nonempty pool")).collect();
    out.sort_unstable();
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::SeedStream;

    #[test]
    fn grids() {
        assert_eq!(guess_grid(3, 20), vec![3, 6, 12, 24]);
        assert_eq!(guess_grid(5, 5), vec![5]);
        assert_eq!(k_grid(1), vec![1]);
        assert_eq!(k_grid(9), vec![1, 2, 4, 8, 16]);
        assert_eq!(small_top(&k_grid(9), 5.5), Some(4));
        assert_eq!(small_top(&k_grid(9), 0.5), None);
    }

    #[test]
    fn sampling_falls_back_to_the_pool() {
        let pool = [4, 7, 9];
        let mut rng = SeedStream::new(1).rng();
        assert_eq!(sample(&pool, 3, &mut rng), pool.to_vec());
        let s = sample(&pool, 2, &mut rng);
        assert!(!s.is_empty() && s.len() <= 2 && s.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn sample_count_grows_with_the_pool() {
        let cfg = DriverConfig::default();
        assert!(cfg.sample_count(100, 1, 100) > cfg.sample_count(100, 4, 100));
        assert_eq!(cfg.sample_count(0, 1, 10), 0);
    }
}
