//! Goodness of fit: information criteria, the Kolmogorov–Smirnov distance
//! with its asymptotic p-value, and multi-model comparison tables.

use std::cmp::Ordering;
use std::f64::consts::PI;

use crate::competitors::{fit_generic, Model, ModelDistribution};
use crate::distribution::DiscreteDistribution;
use crate::error::{Error, Result};
use crate::estimation::{Dataset, FitResult};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InformationCriteria {
    pub aic: f64,
    pub bic: f64,
    pub caic: f64,
}

/// `AIC = 2k + 2·nll`, `BIC = k ln n + 2·nll`, `CAIC = AIC + 2k(k+1)/(n−k−1)`.
pub fn information_criteria(neg_ll: f64, k: usize, n: usize) -> Result<InformationCriteria> {
    if n <= k + 1 {
        return Err(Error::domain(format!(
            "corrected AIC needs n > k + 1 (n = {n}, k = {k})"
        )));
    }
    let kf = k as f64;
    let aic = 2.0 * kf + 2.0 * neg_ll;
    Ok(InformationCriteria {
        aic,
        bic: kf * (n as f64).ln() + 2.0 * neg_ll,
        caic: aic + 2.0 * kf * (kf + 1.0) / (n as f64 - kf - 1.0),
    })
}

/// How the KS distance treats a discrete fitted CDF.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum KsConvention {
    /// The continuous-sample formula applied to the sorted observations,
    /// ties included: `max_i max(i/n − F(x₍ᵢ₎), F(x₍ᵢ₎) − (i−1)/n)`.
    /// This is what common statistical packages report for tied data.
    #[default]
    Continuous,
    /// Exact `sup_x |F_n(x) − F(x)|` over the integers.
    Discrete,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KsResult {
    pub stat: f64,
    pub pvalue: f64,
}

/// Kolmogorov–Smirnov distance between the sample and `cdf`, where `cdf(y)`
/// is `P(Y ≤ y)`.
pub fn ks_test<F: Fn(i64) -> f64>(data: &Dataset, cdf: F, convention: KsConvention) -> Result<KsResult> {
    let mut sorted = data.values().to_vec();
    sorted.sort_unstable();
    let n = sorted.len();
    let nf = n as f64;

    let mut prev = cdf(-1);
    if !(0.0..=1.0).contains(&prev) {
        return Err(Error::domain(format!("fitted CDF at -1 is {prev}, outside [0, 1]")));
    }
    let mut checked = -1_i64;
    let mut check_to = |y: i64, prev: &mut f64| -> Result<f64> {
        // monotone on every integer of the observed range
        while checked < y {
            checked += 1;
            let v = cdf(checked);
            if !(v >= *prev - 1e-15) || v > 1.0 + 1e-15 {
                return Err(Error::domain(format!(
                    "fitted CDF is not a non-decreasing map into [0, 1] at y = {checked}"
                )));
            }
            *prev = v;
        }
        Ok(*prev)
    };

    let mut d = 0.0_f64;
    match convention {
        KsConvention::Continuous => {
            for (i, &y) in sorted.iter().enumerate() {
                let f = check_to(y as i64, &mut prev)?;
                let above = (i + 1) as f64 / nf - f;
                let below = f - i as f64 / nf;
                d = d.max(above).max(below);
            }
        }
        KsConvention::Discrete => {
            let mut i = 0;
            let mut below_count = 0usize;
            while i < n {
                let y = sorted[i];
                let mut j = i;
                while j < n && sorted[j] == y {
                    j += 1;
                }
                let f_before = if y == 0 {
                    cdf(-1)
                } else {
                    check_to(y as i64 - 1, &mut prev)?
                };
                let f = check_to(y as i64, &mut prev)?;
                let emp_before = below_count as f64 / nf;
                let emp = j as f64 / nf;
                d = d.max((emp_before - f_before).abs()).max((emp - f).abs());
                below_count = j;
                i = j;
            }
        }
    }
    let stat = d.clamp(0.0, 1.0);
    Ok(KsResult {
        stat,
        pvalue: kolmogorov_pvalue(nf.sqrt() * stat),
    })
}

/// Asymptotic Kolmogorov tail `Q(t) = 2 Σ_{j≥1} (−1)^{j−1} exp(−2j²t²)`.
///
/// For `t < 1` the alternating series converges slowly, so the equivalent
/// Jacobi-theta form `1 − √(2π)/t Σ_{j≥1} exp(−(2j−1)²π²/(8t²))` is used.
pub fn kolmogorov_pvalue(t: f64) -> f64 {
    if t <= 0.0 {
        return 1.0;
    }
    let q = if t < 1.0 {
        let mut s = 0.0;
        for j in 1.. {
            let k = (2 * j - 1) as f64;
            let term = (-k * k * PI * PI / (8.0 * t * t)).exp();
            s += term;
            if term < 1e-12 {
                break;
            }
        }
        1.0 - (2.0 * PI).sqrt() / t * s
    } else {
        let mut s = 0.0;
        let mut sign = 1.0;
        for j in 1.. {
            let jf = j as f64;
            let term = (-2.0 * jf * jf * t * t).exp();
            s += sign * term;
            sign = -sign;
            if term < 1e-12 {
                break;
            }
        }
        2.0 * s
    };
    q.clamp(0.0, 1.0)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GofReport {
    pub neg_ll: f64,
    pub aic: f64,
    pub bic: f64,
    pub caic: f64,
    pub ks_stat: f64,
    pub ks_pvalue: f64,
    pub k: usize,
    pub n: usize,
}

/// Goodness-of-fit summary of `dist` on `data`.
pub fn gof_report<D: DiscreteDistribution + ?Sized>(
    data: &Dataset,
    dist: &D,
    convention: KsConvention,
) -> Result<GofReport> {
    let neg_ll = -data.sum_log_pmf(dist);
    let k = dist.param_count();
    let n = data.len();
    let ic = information_criteria(neg_ll, k, n)?;
    let ks = ks_test(data, |y| dist.cdf(y), convention)?;
    Ok(GofReport {
        neg_ll,
        aic: ic.aic,
        bic: ic.bic,
        caic: ic.caic,
        ks_stat: ks.stat,
        ks_pvalue: ks.pvalue,
        k,
        n,
    })
}

/// Report for a fitted model; the log-likelihood is taken from the fit.
pub fn fitted_report(data: &Dataset, model: Model, fit: &FitResult, convention: KsConvention) -> Result<GofReport> {
    let dist = ModelDistribution::new(model, &fit.params)?;
    let mut report = gof_report(data, &dist, convention)?;
    let ic = information_criteria(fit.neg_log_likelihood(), report.k, report.n)?;
    report.neg_ll = fit.neg_log_likelihood();
    report.aic = ic.aic;
    report.bic = ic.bic;
    report.caic = ic.caic;
    Ok(report)
}

#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonRow {
    pub model: Model,
    pub outcome: Result<(FitResult, GofReport)>,
}

impl ComparisonRow {
    pub fn report(&self) -> Option<&GofReport> {
        self.outcome.as_ref().ok().map(|(_, r)| r)
    }

    pub fn fit(&self) -> Option<&FitResult> {
        self.outcome.as_ref().ok().map(|(f, _)| f)
    }
}

/// Rows ordered by AIC, then BIC, then model name; failed fits come last.
#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonTable {
    pub rows: Vec<ComparisonRow>,
}

impl ComparisonTable {
    pub fn best(&self) -> Option<&ComparisonRow> {
        self.rows.first().filter(|r| r.outcome.is_ok())
    }

    pub fn rank_of(&self, model: Model) -> Option<usize> {
        self.rows
            .iter()
            .position(|r| r.model == model && r.outcome.is_ok())
            .map(|i| i + 1)
    }
}

fn row_order(a: &ComparisonRow, b: &ComparisonRow) -> Ordering {
    match (a.report(), b.report()) {
        (Some(ra), Some(rb)) => ra
            .aic
            .total_cmp(&rb.aic)
            .then(ra.bic.total_cmp(&rb.bic))
            .then_with(|| a.model.abbrev().cmp(b.model.abbrev())),
        (Some(_), None) => Ordering::Less,
        (None, Some(_)) => Ordering::Greater,
        (None, None) => a.model.abbrev().cmp(b.model.abbrev()),
    }
}

/// Fits every model by maximum likelihood on `data` (concurrently) and ranks
/// them.
pub fn compare_models(data: &Dataset, models: &[Model], convention: KsConvention) -> Result<ComparisonTable> {
    if models.is_empty() {
        return Err(Error::domain("no models to compare"));
    }
    let mut rows: Vec<ComparisonRow> = std::thread::scope(|scope| {
        let handles: Vec<_> = models
            .iter()
            .map(|&model| {
                scope.spawn(move || ComparisonRow {
                    model,
                    outcome: fit_generic(model, data)
                        .and_then(|fit| fitted_report(data, model, &fit, convention).map(|r| (fit, r))),
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("model fit panicked"))
            .collect()
    });
    rows.sort_by(row_order);
    Ok(ComparisonTable { rows })
}
