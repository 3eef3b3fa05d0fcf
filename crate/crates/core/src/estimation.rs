//! Point estimation of the discrete Teissier parameter by maximum likelihood
//! and by the method of moments, with Wald/delta-method standard errors.

use std::fmt;

use crate::distribution::DiscreteDistribution;
use crate::error::{Error, Result};
use crate::numerics::{find_root, find_root_newton, first_derivative, second_derivative, RootBracket};
use crate::teissier::DiscreteTeissier;

/// Upper limit of the MLE bracket search.
pub const THETA_MAX: f64 = 1e6;

/// How the stored integer values were derived from the raw observations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Transform {
    None,
    /// `value = floor(raw / divisor)`.
    ScaleFloor(f64),
}

/// An ordered sample of non-negative integers.
#[derive(Debug, Clone, PartialEq)]
pub struct Dataset {
    values: Vec<u64>,
    raw_values: Option<Vec<f64>>,
    transform: Transform,
}

impl Dataset {
    pub fn new(values: Vec<u64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::domain("dataset must not be empty"));
        }
        Ok(Dataset {
            values,
            raw_values: None,
            transform: Transform::None,
        })
    }

    /// Keeps the raw observations and stores `floor(raw / divisor)`.
    pub fn scale_floor(raw: Vec<f64>, divisor: f64) -> Result<Self> {
        if !(divisor > 0.0) || !divisor.is_finite() {
            return Err(Error::domain(format!("scale divisor must be positive, got {divisor}")));
        }
        if raw.is_empty() {
            return Err(Error::domain("dataset must not be empty"));
        }
        if let Some(bad) = raw.iter().find(|v| !(**v >= 0.0) || !v.is_finite()) {
            return Err(Error::domain(format!("raw value {bad} is not a finite non-negative number")));
        }
        let values = raw.iter().map(|v| (v / divisor).floor() as u64).collect();
        Ok(Dataset {
            values,
            raw_values: Some(raw),
            transform: Transform::ScaleFloor(divisor),
        })
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn raw_values(&self) -> Option<&[f64]> {
        self.raw_values.as_deref()
    }

    pub fn transform(&self) -> Transform {
        self.transform
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn mean(&self) -> f64 {
        self.values.iter().map(|&v| v as f64).sum::<f64>() / self.len() as f64
    }

    pub fn max(&self) -> u64 {
        self.values.iter().copied().max().unwrap_or(0)
    }

    pub fn sum_log_pmf<D: DiscreteDistribution + ?Sized>(&self, dist: &D) -> f64 {
        self.values.iter().map(|&y| dist.ln_pmf(y)).sum()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Mle,
    Mom,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Mle => "MLE",
            Method::Mom => "MOM",
        })
    }
}

/// Output of an estimator. One-parameter models carry a single entry in
/// `params`/`se`.
#[derive(Debug, Clone, PartialEq)]
pub struct FitResult {
    pub params: Vec<f64>,
    pub se: Vec<f64>,
    pub method: Method,
    /// Log-likelihood at the estimate (evaluated for MOM fits too).
    pub log_likelihood: f64,
    pub converged: bool,
    pub iterations: usize,
}

impl FitResult {
    pub fn theta_hat(&self) -> f64 {
        self.params[0]
    }

    pub fn theta_se(&self) -> f64 {
        self.se[0]
    }

    pub fn neg_log_likelihood(&self) -> f64 {
        -self.log_likelihood
    }
}

fn model(theta: f64) -> Result<DiscreteTeissier> {
    DiscreteTeissier::new(theta).map_err(|_| Error::domain(format!("theta must be > 1, got {theta}")))
}

/// Discrete Teissier log-likelihood `Σ ln p(yᵢ; θ)`.
pub fn log_likelihood(data: &Dataset, theta: f64) -> Result<f64> {
    Ok(data.sum_log_pmf(&model(theta)?))
}

/// `d ln p(y; θ) / dθ`.
///
/// With `D = θ exp(θ^y − θ^{y+1})`:
/// `y/θ − yθ^{y−1} − D (1/θ + yθ^{y−1} − (y+1)θ^y) / (1 − D)`,
/// rearranged so that neither the numerator nor `1 − D` cancels near `θ = 1`.
fn point_score(d: &DiscreteTeissier, y: u64) -> f64 {
    let theta = d.theta();
    let h = theta - 1.0;
    let yf = y as f64;
    let ln_t = d.alpha();
    // θ^{y−1}, θ^{y+1} − 1
    let pow_ym1 = ((yf - 1.0) * ln_t).exp();
    let grow = ((yf + 1.0) * ln_t).exp_m1();
    // dδ/dθ = −[(θ^{y+1} − 1)/θ + yθ^{y−1}(θ − 1)]
    let d_delta = -(grow / theta + yf * pow_ym1 * h);
    let hazard = d.hrf(y); // 1 − D
    let dee = 1.0 - hazard;
    let main = yf / theta - yf * pow_ym1;
    if dee == 0.0 {
        main
    } else {
        main - dee * d_delta / hazard
    }
}

/// Score `dℓ/dθ` of the discrete Teissier log-likelihood.
pub fn score(data: &Dataset, theta: f64) -> Result<f64> {
    let d = model(theta)?;
    Ok(data.values().iter().map(|&y| point_score(&d, y)).sum())
}

fn info_step(theta: f64) -> f64 {
    (1e-5 * theta.abs().max(1.0)).min(0.5 * (theta - 1.0))
}

/// Wald standard error `sqrt(−1/ℓ''(θ̂))` from a central second difference.
fn observed_se(data: &Dataset, theta: f64) -> f64 {
    let ll = |t: f64| log_likelihood(data, t).unwrap_or(f64::NEG_INFINITY);
    let curv = second_derivative(ll, theta, info_step(theta));
    if curv < 0.0 {
        (-1.0 / curv).sqrt()
    } else {
        f64::NAN
    }
}

fn require_positive_mean(data: &Dataset) -> Result<f64> {
    let mean = data.mean();
    if mean == 0.0 {
        return Err(Error::DegenerateData(
            "all observations are 0; the likelihood increases without bound as theta -> infinity".into(),
        ));
    }
    Ok(mean)
}

/// Maximum-likelihood estimate: the root of the score, bracketed by
/// expanding around a moment-based start and refined by safeguarded Newton.
pub fn fit_mle(data: &Dataset) -> Result<FitResult> {
    let ybar = require_positive_mean(data)?;
    let start = match mom_theta(ybar) {
        Ok(t) => t,
        Err(_) => 1.0 + 1.0 / (1.0 + ybar),
    };
    let s = |t: f64| score(data, t).unwrap_or(f64::NAN);

    // score → +∞ as θ → 1⁺ and is negative for large θ unless all y = 0
    let mut lo = start;
    let mut f_lo = s(lo);
    let mut hi = start;
    let mut f_hi = f_lo;
    if f_lo > 0.0 {
        while f_hi > 0.0 {
            lo = hi;
            f_lo = f_hi;
            hi = 1.0 + 2.0 * (hi - 1.0);
            if hi > THETA_MAX {
                return Err(Error::NoBracket { limit: THETA_MAX });
            }
            f_hi = s(hi);
        }
    } else {
        while !(f_lo > 0.0) {
            hi = lo;
            f_hi = f_lo;
            lo = 1.0 + 0.5 * (lo - 1.0);
            if lo - 1.0 < 1e-300 {
                return Err(Error::NoBracket { limit: THETA_MAX });
            }
            f_lo = s(lo);
        }
    }
    let bracket = RootBracket::from_values(lo, hi, f_lo, f_hi)?;
    let ds = |t: f64| first_derivative(s, t, 1e-6 * (t - 1.0).min(1.0));
    let root = find_root_newton(s, ds, bracket, 1e-15 * hi)?;
    let theta_hat = root.x;
    Ok(FitResult {
        params: vec![theta_hat],
        se: vec![observed_se(data, theta_hat)],
        method: Method::Mle,
        log_likelihood: log_likelihood(data, theta_hat)?,
        converged: true,
        iterations: root.iterations,
    })
}

fn population_mean(theta: f64) -> f64 {
    model(theta).and_then(|d| d.mean()).unwrap_or(f64::NAN)
}

// Solves E(Y; θ) = ybar. The population mean decreases strictly from +∞
// (θ → 1⁺) to 0 (θ → ∞).
fn mom_theta(ybar: f64) -> Result<f64> {
    let g = |t: f64| population_mean(t) - ybar;
    let start = 1.0 + 1.0 / (1.0 + ybar);
    let mut lo = start;
    let mut hi = start;
    let mut g_lo = g(lo);
    let mut g_hi = g_lo;
    while !(g_lo > 0.0) {
        hi = lo;
        g_hi = g_lo;
        lo = 1.0 + 0.5 * (lo - 1.0);
        g_lo = g(lo);
        if g_lo.is_nan() {
            return Err(Error::NoBracket { limit: lo });
        }
    }
    while !(g_hi < 0.0) {
        lo = hi;
        g_lo = g_hi;
        hi = 1.0 + 2.0 * (hi - 1.0);
        if hi > THETA_MAX {
            return Err(Error::NoBracket { limit: THETA_MAX });
        }
        g_hi = g(hi);
    }
    let bracket = RootBracket::from_values(lo, hi, g_lo, g_hi)?;
    find_root(g, bracket, 1e-14 * hi)
}

/// Method-of-moments estimate from `ȳ = Σ_{i≥1} θⁱ exp(1 − θⁱ)`, with the
/// delta-method standard error `sqrt(Var(Y; θ̂)/n) / |dμ/dθ(θ̂)|`.
pub fn fit_mom(data: &Dataset) -> Result<FitResult> {
    let ybar = require_positive_mean(data)?;
    let theta_hat = mom_theta(ybar)?;
    let d = model(theta_hat)?;
    let slope = first_derivative(population_mean, theta_hat, (1e-6 * theta_hat).min(0.5 * (theta_hat - 1.0)));
    let se = (d.variance()? / data.len() as f64).sqrt() / slope.abs();
    Ok(FitResult {
        params: vec![theta_hat],
        se: vec![se],
        method: Method::Mom,
        log_likelihood: log_likelihood(data, theta_hat)?,
        converged: true,
        iterations: 0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dataset_validation() {
        assert!(Dataset::new(vec![]).is_err());
        assert!(Dataset::scale_floor(vec![1.0, -2.0], 10.0).is_err());
        assert!(Dataset::scale_floor(vec![1.0], 0.0).is_err());
        let d = Dataset::scale_floor(vec![28869.0, 35838.0, 9999.0], 10_000.0).unwrap();
        assert_eq!(d.values(), &[2, 3, 0]);
        assert_eq!(d.transform(), Transform::ScaleFloor(10_000.0));
        assert_eq!(d.raw_values().unwrap().len(), 3);
    }

    #[test]
    fn single_zero_loglik() {
        let data = Dataset::new(vec![0]).unwrap();
        for theta in [1.01_f64, 1.5, 3.0] {
            let expected = (1.0 - theta * (1.0 - theta).exp()).ln();
            assert!((log_likelihood(&data, theta).unwrap() - expected).abs() < 1e-12);
        }
    }

    #[test]
    fn rejects_theta_at_or_below_one() {
        let data = Dataset::new(vec![1, 2]).unwrap();
        assert!(log_likelihood(&data, 1.0).is_err());
        assert!(score(&data, 0.9).is_err());
    }

    #[test]
    fn all_zero_data_is_degenerate() {
        let data = Dataset::new(vec![0, 0, 0]).unwrap();
        assert!(matches!(fit_mle(&data), Err(Error::DegenerateData(_))));
        assert!(matches!(fit_mom(&data), Err(Error::DegenerateData(_))));
    }

    #[test]
    fn mom_fixed_point_at_two() {
        let ybar = DiscreteTeissier::new(2.0).unwrap().mean().unwrap();
        let theta = mom_theta(ybar).unwrap();
        assert!((theta - 2.0).abs() < 1e-10);
    }
}
