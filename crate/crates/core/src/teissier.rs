//! The discrete Teissier distribution.
//!
//! Discretizing the continuous Teissier survival function
//! `S(x) = exp(αx − e^{αx} + 1)` at the integers and writing `θ = e^α`
//! gives, for `y = 0, 1, 2, …` and `θ > 1`,
//!
//! ```text
//! P(Y ≥ y) = θ^y · exp(1 − θ^y)
//! P(Y = y) = e · θ^y · (exp(−θ^y) − θ · exp(−θ^{y+1}))
//! ```
//!
//! All quantities are evaluated through `ln P(Y ≥ y) = −(e^a − 1 − a)` with
//! `a = y ln θ`, which stays finite long after `exp(−θ^y)` underflows.
//!
//! Infinite sums (moments, MGF, entropy, MRL, stress–strength) use
//! [`sum_series`] with the default truncation rule, and never stop before the
//! `1 − 1e−12` quantile of the distribution involved.

use rand::distr::Open01;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::distribution::DiscreteDistribution;
use crate::error::{Error, Result};
use crate::numerics::{expm1_minus_x, ln_one_minus_exp, sum_series, x_minus_ln1p, SeriesSpec};

/// Upper tail mass below which support scans stop.
pub const SUPPORT_TAIL: f64 = 1e-12;

/// A discrete Teissier law with parameter `θ > 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiscreteTeissier {
    theta: f64,
    ln_theta: f64,
    // θ − 1, exact in floating point for the θ range of interest
    excess: f64,
}

impl DiscreteTeissier {
    pub fn new(theta: f64) -> Result<Self> {
        if !(theta > 1.0) || !theta.is_finite() {
            return Err(Error::domain(format!("theta must be a finite value > 1, got {theta}")));
        }
        Ok(DiscreteTeissier {
            theta,
            ln_theta: theta.ln(),
            excess: theta - 1.0,
        })
    }

    /// Builds the law from the continuous rate `α = ln θ > 0`.
    pub fn from_alpha(alpha: f64) -> Result<Self> {
        if !(alpha > 0.0) || !alpha.is_finite() {
            return Err(Error::domain(format!("alpha must be a finite value > 0, got {alpha}")));
        }
        let theta = alpha.exp();
        Ok(DiscreteTeissier {
            theta,
            ln_theta: alpha,
            excess: alpha.exp_m1(),
        })
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn alpha(&self) -> f64 {
        self.ln_theta
    }

    /// `ln P(Y > y) − ln P(Y ≥ y) = ln θ − θ^y (θ − 1)`, always `≤ 0`.
    fn log_step(&self, y: u64) -> f64 {
        let a = y as f64 * self.ln_theta;
        -(x_minus_ln1p(self.excess) + self.excess * a.exp_m1())
    }

    /// `ln P(Y > y)`.
    pub fn ln_sf(&self, y: i64) -> f64 {
        if y < 0 {
            0.0
        } else {
            self.ln_survival_ge(y as u64 + 1)
        }
    }

    /// Hazard rate `P(Y = y | Y ≥ y) = 1 − θ exp(θ^y − θ^{y+1})`.
    pub fn hrf(&self, y: u64) -> f64 {
        -self.log_step(y).exp_m1()
    }

    /// Reversed hazard rate `P(Y = y | Y ≤ y)`.
    pub fn rhrf(&self, y: u64) -> Result<f64> {
        let c = self.cdf(y as i64);
        if c <= 0.0 {
            return Err(Error::domain(format!("cdf({y}) is zero, reversed hazard undefined")));
        }
        Ok(self.pmf(y) / c)
    }

    /// Second rate of failure `ln[S(y)/S(y+1)] = θ^{y+1}(θ − 1) − ln θ`.
    pub fn srf(&self, y: u64) -> f64 {
        -self.log_step(y + 1)
    }

    /// Smallest `y` with `P(Y > y) ≤ tail`.
    pub fn upper_tail_index(&self, tail: f64) -> u64 {
        let target = tail.ln();
        self.first_index(|y| self.ln_sf(y as i64) <= target)
    }

    /// The `1 − 1e−12` quantile: every support scan covers at least this far.
    pub fn support_bound(&self) -> u64 {
        self.upper_tail_index(SUPPORT_TAIL)
    }

    // Galloping then bisection for the first index satisfying a monotone predicate.
    fn first_index<P: Fn(u64) -> bool>(&self, pred: P) -> u64 {
        if pred(0) {
            return 0;
        }
        let mut lo = 0_u64;
        let mut hi = 1_u64;
        while !pred(hi) {
            lo = hi;
            hi = hi.saturating_mul(2);
            if hi == u64::MAX {
                break;
            }
        }
        while hi - lo > 1 {
            let mid = lo + (hi - lo) / 2;
            if pred(mid) {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        hi
    }

    /// Smallest `y` with `F(y) ≥ u`.
    pub fn quantile(&self, u: f64) -> Result<u64> {
        if !(u > 0.0 && u < 1.0) {
            return Err(Error::domain(format!("quantile level must lie in (0, 1), got {u}")));
        }
        Ok(self.quantile_unchecked(u))
    }

    fn quantile_unchecked(&self, u: f64) -> u64 {
        // F(y) ≥ u  ⇔  ln P(Y > y) ≤ ln(1 − u)
        let target = (-u).ln_1p();
        self.first_index(|y| self.ln_sf(y as i64) <= target)
    }

    /// `n` iid draws by inversion; identical `(θ, n, seed)` give identical output.
    pub fn sample(&self, n: usize, seed: u64) -> Vec<u64> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..n)
            .map(|_| {
                let u: f64 = rng.sample(Open01);
                self.quantile_unchecked(u)
            })
            .collect()
    }

    fn series(&self, start: u64) -> SeriesSpec {
        SeriesSpec::starting_at(start).through(self.support_bound())
    }

    /// `E(Yʳ)` for `r ∈ {1, 2, 3, 4}`, as `Σ_{y≥1} (yʳ − (y−1)ʳ) P(Y ≥ y)`.
    ///
    /// This is the alternating double sum over `k` with the inner series
    /// (the Taylor expansion of `exp(−θ^y)`) summed in closed form.
    pub fn raw_moment(&self, r: u32) -> Result<f64> {
        if !(1..=4).contains(&r) {
            return Err(Error::domain(format!("raw moments are available for r in 1..=4, got {r}")));
        }
        let r = r as i32;
        sum_series(&self.series(1), |y| {
            let yf = y as f64;
            let weight = yf.powi(r) - (yf - 1.0).powi(r);
            weight * self.ln_survival_ge(y).exp()
        })
    }

    pub fn mean(&self) -> Result<f64> {
        self.raw_moment(1)
    }

    fn central_moment(&self, mean: f64, k: i32) -> Result<f64> {
        sum_series(&self.series(0), |y| (y as f64 - mean).powi(k) * self.pmf(y))
    }

    pub fn variance(&self) -> Result<f64> {
        let mean = self.mean()?;
        self.central_moment(mean, 2)
    }

    /// Mean, variance, skewness, excess kurtosis, index of dispersion and
    /// coefficient of variation.
    pub fn descriptives(&self) -> Result<Descriptives> {
        let mean = self.mean()?;
        let variance = self.central_moment(mean, 2)?;
        let mu3 = self.central_moment(mean, 3)?;
        let mu4 = self.central_moment(mean, 4)?;
        Ok(Descriptives {
            mean,
            variance,
            skewness: mu3 / variance.powf(1.5),
            ex_kurtosis: mu4 / (variance * variance) - 3.0,
            iod: variance / mean,
            cv: variance.sqrt() / mean,
        })
    }

    /// `E[e^{tY}] = 1 + eθ(eᵗ − 1) Σ_{y≥1} exp(−θ^y)(θeᵗ)^{y−1}`.
    pub fn mgf(&self, t: f64) -> Result<f64> {
        if !t.is_finite() {
            return Err(Error::domain("mgf argument must be finite"));
        }
        let rate = self.ln_theta + t;
        let tail = sum_series(&self.series(1), |y| {
            let yf = y as f64;
            (-(yf * self.ln_theta).exp() + (yf - 1.0) * rate).exp()
        })?;
        Ok(1.0 + std::f64::consts::E * self.theta * t.exp_m1() * tail)
    }

    /// Rényi entropy `(1 − ρ)⁻¹ ln Σ p_yᵖ`.
    pub fn renyi_entropy(&self, order: RenyiOrder) -> Result<f64> {
        let rho = order.rho();
        let s = sum_series(&self.series(0), |y| (rho * self.ln_pmf(y)).exp())?;
        Ok(s.ln() / (1.0 - rho))
    }

    /// Mean residual life `m(i) = Σ_{j>i} S(j) / S(i)` with `S(j) = P(Y > j)`.
    ///
    /// Equivalently `E(Y − i − 1 | Y > i)`, so that `S(0)(1 + m(0)) = E(Y)`.
    pub fn mrl(&self, i: u64) -> Result<f64> {
        let base = self.ln_sf(i as i64);
        if base == f64::NEG_INFINITY {
            // beyond the representable tail the hazard is 1
            return Ok(0.0);
        }
        let spec = SeriesSpec::starting_at(i + 1).through(self.support_bound());
        sum_series(&spec, |j| (self.ln_sf(j as i64) - base).exp())
    }

    /// Mean past life `m*(i) = Σ_{k=1}^{i} F(k−1) / F(i−1)` for `i ≥ 1`.
    pub fn mpl(&self, i: u64) -> Result<f64> {
        if i < 1 {
            return Err(Error::domain("mean past life is defined for i >= 1"));
        }
        let denom = self.cdf(i as i64 - 1);
        if denom <= 0.0 {
            return Err(Error::domain(format!("F({}) is zero, mean past life undefined", i - 1)));
        }
        let total: f64 = (0..i).map(|k| self.cdf(k as i64)).sum();
        Ok(total / denom)
    }

    /// First `x ≥ 1` violating the necessary condition `p_x ≤ e⁻¹` for
    /// infinite divisibility, scanning up to the support bound. `None` means
    /// the condition holds on the scanned range, which is not a proof of
    /// infinite divisibility.
    pub fn infinite_divisibility_witness(&self) -> Option<(u64, f64)> {
        let limit = (-1.0_f64).exp();
        (1..=self.support_bound().max(1))
            .map(|x| (x, self.pmf(x)))
            .find(|&(_, p)| p > limit)
    }

    /// CDF of the `r`-th order statistic of an iid sample of size `n`:
    /// `Σ_{i=r}^{n} C(n, i) F(w)ⁱ (1 − F(w))^{n−i}`.
    pub fn order_stat_cdf(&self, spec: OrderStatSpec, w: i64) -> f64 {
        if w < 0 {
            return 0.0;
        }
        let f = self.cdf(w);
        let g = self.sf(w);
        binomial_upper_tail(spec.n, spec.r, f, g)
    }

    /// PMF of the `r`-th order statistic.
    pub fn order_stat_pmf(&self, spec: OrderStatSpec, w: u64) -> f64 {
        let w = w as i64;
        (self.order_stat_cdf(spec, w) - self.order_stat_cdf(spec, w - 1)).max(0.0)
    }
}

impl DiscreteDistribution for DiscreteTeissier {
    fn ln_survival_ge(&self, y: u64) -> f64 {
        -expm1_minus_x(y as f64 * self.ln_theta)
    }

    fn param_count(&self) -> usize {
        1
    }

    fn ln_pmf(&self, y: u64) -> f64 {
        self.ln_survival_ge(y) + ln_one_minus_exp(self.log_step(y))
    }
}

/// `P(stress < strength)` for independent discrete Teissier variables:
/// `Σ_y P(stress = y) · P(strength > y)`.
///
/// Each summand is `θ₂e²(θ₁θ₂)^y exp(−θ₂^{y+1})(exp(−θ₁^y) − θ₁exp(−θ₁^{y+1}))`
/// with `θ₁` the stress and `θ₂` the strength parameter. Ties count as
/// failures.
pub fn stress_strength_reliability(stress: &DiscreteTeissier, strength: &DiscreteTeissier) -> Result<f64> {
    let bound = stress.support_bound().min(strength.support_bound());
    let spec = SeriesSpec::starting_at(0).through(bound);
    sum_series(&spec, |y| (stress.ln_pmf(y) + strength.ln_sf(y as i64)).exp())
}

// Σ_{i=r}^{n} C(n,i) fⁱ gⁿ⁻ⁱ
fn binomial_upper_tail(n: u32, r: u32, f: f64, g: f64) -> f64 {
    if n <= 1000 {
        let mut coef = 1.0_f64; // C(n, i), starting at i = 0
        let mut total = 0.0;
        for i in 0..=n {
            if i >= r {
                total += coef * f.powi(i as i32) * g.powi((n - i) as i32);
            }
            coef = coef * (n - i) as f64 / (i + 1) as f64;
        }
        total.min(1.0)
    } else {
        let (lf, lg) = (f.ln(), g.ln());
        let mut ln_coef = 0.0_f64;
        let mut total = 0.0;
        for i in 0..=n {
            if i >= r {
                let t = ln_coef + i as f64 * lf + (n - i) as f64 * lg;
                total += t.exp();
            }
            ln_coef += ((n - i) as f64).ln() - ((i + 1) as f64).ln();
        }
        total.min(1.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Descriptives {
    pub mean: f64,
    pub variance: f64,
    pub skewness: f64,
    /// Fourth standardized central moment minus 3.
    pub ex_kurtosis: f64,
    pub iod: f64,
    pub cv: f64,
}

/// Sample size `n` and rank `r` (1-based) of an order statistic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OrderStatSpec {
    n: u32,
    r: u32,
}

impl OrderStatSpec {
    pub fn new(n: u32, r: u32) -> Result<Self> {
        if n == 0 || r == 0 || r > n {
            return Err(Error::domain(format!("order statistic needs 1 <= r <= n, got r = {r}, n = {n}")));
        }
        Ok(OrderStatSpec { n, r })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn r(&self) -> u32 {
        self.r
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RenyiOrder(f64);

impl RenyiOrder {
    pub fn new(rho: f64) -> Result<Self> {
        if !(rho > 0.0) || rho == 1.0 || !rho.is_finite() {
            return Err(Error::domain(format!("Renyi order must be > 0 and != 1, got {rho}")));
        }
        Ok(RenyiOrder(rho))
    }

    pub fn rho(&self) -> f64 {
        self.0
    }
}
