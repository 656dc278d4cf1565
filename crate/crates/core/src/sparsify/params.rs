use num_integer::Integer;
use num_rational::Ratio;
use rand::Rng;

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::rng::SeedStream;

/// Tuning constants shared by the sparsifiers, local searches and drivers.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Constants {
    /// `τ = c_tau · ε² · λ / (k ln n)`.
    pub c_tau: f64,
    /// In-degree threshold `Δ = c_delta · k ln n / ε²`.
    pub c_delta: f64,
    /// Truncation cap `c_w · k ln n / ε²` (in units of `τ`).
    pub c_w: f64,
    /// Truncation never goes below `c_clamp · λ`.
    pub c_clamp: f64,
    /// The local and big-sink routines sparsify with `c_eps · ε`.
    pub c_eps: f64,
    /// Sample count multiplier.
    pub samples: f64,
}

impl Default for Constants {
    fn default() -> Self {
        Constants { c_tau: 1.0 / 64.0, c_delta: 192.0, c_w: 128.0, c_clamp: 2.0, c_eps: 0.25, samples: 3.0 }
    }
}

impl Constants {
    /// Applies `key=value` overrides separated by commas.
    pub fn with_overrides(mut self, overrides: &str) -> Result<Self> {
        for item in overrides.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (key, value) = item
                .split_once('=')
                .ok_or_else(|| Error::InvalidParameter(format!("expected key=value, got `{item}`")))?;
            let value = parse_positive(value.trim())
                .ok_or_else(|| Error::InvalidParameter(format!("bad value for {key}: `{value}`")))?;
            match key.trim() {
                "c_tau" => self.c_tau = value,
                "c_delta" => self.c_delta = value,
                "c_w" => self.c_w = value,
                "c_clamp" => self.c_clamp = value,
                "c_eps" => self.c_eps = value,
                "C" | "samples" => self.samples = value,
                other => return Err(Error::InvalidParameter(format!("unknown constant `{other}`"))),
            }
        }
        Ok(self)
    }

    pub fn fields(&self) -> [(&'static str, f64); 6] {
        [
            ("c_tau", self.c_tau),
            ("c_delta", self.c_delta),
            ("c_w", self.c_w),
            ("c_clamp", self.c_clamp),
            ("c_eps", self.c_eps),
            ("C", self.samples),
        ]
    }
}

fn parse_positive(text: &str) -> Option<f64> {
    let v = match text.split_once('/') {
        Some((p, q)) => p.trim().parse::<f64>().ok()? / q.trim().parse::<f64>().ok()?,
        None => text.parse().ok()?,
    };
    (v.is_finite() && v > 0.0).then_some(v)
}

/// Parameters of one sparsification.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SparsifyParams {
    /// Accuracy, in `(0, 1)`.
    pub eps: f64,
    /// Guess for the connectivity, in units of the input graph's denominator.
    pub lambda_units: u64,
    pub k: usize,
    pub constants: Constants,
    pub seed: SeedStream,
}

/// Integer quantities derived from [`SparsifyParams`] for a graph on `n`
/// vertices. All weights are in units of `τ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Derived {
    /// `λ / τ`, an integer by construction.
    pub steps: u64,
    /// Weight of each auxiliary edge or vertex.
    pub aux: u64,
    pub cap: u64,
    pub delta: u64,
}

/// The unit `τ = lambda_units / (steps · denominator)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Tau {
    pub lambda_units: u64,
    pub steps: u64,
    pub denominator: u64,
}

impl Tau {
    pub fn value(&self) -> Rational {
        Ratio::new(self.lambda_units, self.steps.saturating_mul(self.denominator))
    }

    /// `h · τ` expressed as a (possibly fractional) count of input-graph units.
    pub fn scale_units(&self, h: u64) -> Rational {
        let num = h as u128 * self.lambda_units as u128;
        let den = self.steps as u128;
        let g = num.gcd(&den);
        Ratio::new((num / g) as u64, (den / g) as u64)
    }

    /// `h · τ` as a float in input-graph units.
    pub fn scale_f64(&self, h: u64) -> f64 {
        h as f64 * self.lambda_units as f64 / self.steps as f64
    }
}

pub(crate) fn ln_floor1(n: usize) -> f64 {
    (n.max(1) as f64).ln().max(1.0)
}

impl SparsifyParams {
    pub fn new(eps: f64, lambda_units: u64, k: usize, seed: SeedStream) -> Self {
        SparsifyParams { eps, lambda_units, k, constants: Constants::default(), seed }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.eps > 0.0 && self.eps < 1.0) {
            return Err(Error::InvalidParameter(format!("eps must lie in (0, 1), got {}", self.eps)));
        }
        if self.lambda_units == 0 {
            return Err(Error::InvalidParameter("connectivity guess must be positive".into()));
        }
        if self.k == 0 {
            return Err(Error::InvalidParameter("k must be positive".into()));
        }
        Ok(())
    }

    /// `τ` is chosen as `λ / steps` for an integer `steps`, which makes `λ`
    /// an exact multiple; the auxiliary weight is then rounded down to a
    /// whole number of steps (at least one).
    pub fn derive(&self, n: usize) -> Derived {
        let c = &self.constants;
        let base = self.k as f64 * ln_floor1(n) / (self.eps * self.eps);
        let steps = (base / c.c_tau).ceil().max(1.0) as u64;
        let aux = ((self.eps * steps as f64 / (2.0 * self.k as f64)).floor() as u64).max(1);
        let cap = ((c.c_w * base).ceil() as u64).max((c.c_clamp * steps as f64).ceil() as u64).max(aux);
        let delta = ((c.c_delta * base).ceil() as u64).max(1);
        Derived { steps, aux, cap, delta }
    }

    pub fn tau(&self, n: usize, denominator: u64) -> Tau {
        Tau { lambda_units: self.lambda_units, steps: self.derive(n).steps, denominator }
    }
}

/// Rounds `w · steps / lambda` to an adjacent integer with the fractional
/// part as the probability of rounding up.
pub(crate) fn round_units<R: Rng>(w: u64, steps: u64, lambda: u64, rng: &mut R) -> Result<u64> {
    let a = w as u128 * steps as u128;
    let b = lambda as u128;
    let (q, rem) = (a / b, a % b);
    let up = rem > 0 && rng.gen_range(0..b) < rem;
    u64::try_from(q + up as u128).map_err(|_| Error::Overflow)
}

/// Randomized rounding of `w` to `τ · (⌊w/τ⌋ + B)` with `B ~ Bernoulli(frac(w/τ))`.
pub fn importance_round<R: Rng>(w: Rational, tau: Rational, rng: &mut R) -> Rational {
    assert!(*tau.numer() > 0, "tau must be positive");
    let a = *w.numer() as u128 * *tau.denom() as u128;
    let b = *w.denom() as u128 * *tau.numer() as u128;
    let (q, rem) = (a / b, a % b);
    let up = rem > 0 && rng.gen_range(0..b) < rem;
    tau * Ratio::from_integer((q + up as u128) as u64)
}
