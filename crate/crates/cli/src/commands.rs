//! Subcommand bodies. Each returns the rendered output; printing and exit
//! codes are handled by `main`.

use discrete_teissier::{
    compare_models, fit_mle, fit_mom, fitted_report, log_likelihood, stress_strength_reliability,
    Dataset, DiscreteDistribution, DiscreteTeissier, FitResult, KsConvention, Method, Model,
};

use crate::error::{CliError, CliResult};
use crate::table::{Cell, Table};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum MethodChoice {
    Mle,
    Mom,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum PointFn {
    Pmf,
    Cdf,
    Hrf,
    LlProfile,
}

fn dt(theta: f64) -> CliResult<DiscreteTeissier> {
    Ok(DiscreteTeissier::new(theta)?)
}

fn text(s: impl Into<String>) -> Cell {
    Cell::Text(s.into())
}

/// Fit table plus the names of any estimators that failed to converge.
pub fn fit(data: &Dataset, method: MethodChoice, ks: KsConvention) -> CliResult<(Table, Vec<String>)> {
    let methods: &[Method] = match method {
        MethodChoice::Mle => &[Method::Mle],
        MethodChoice::Mom => &[Method::Mom],
        MethodChoice::Both => &[Method::Mle, Method::Mom],
    };
    let mut table = Table::new(["Method", "Estimate", "SE", "-LL", "AIC", "BIC", "CAIC", "K-S", "P-value"]);
    let mut unconverged = Vec::new();
    for &m in methods {
        let fit = match m {
            Method::Mle => fit_mle(data)?,
            Method::Mom => fit_mom(data)?,
        };
        if !fit.converged {
            unconverged.push(m.to_string());
        }
        let r = fitted_report(data, Model::Teissier, &fit, ks)?;
        table.push(vec![
            text(m.to_string()),
            Cell::Num(fit.theta_hat()),
            Cell::Num(fit.theta_se()),
            Cell::Num(r.neg_ll),
            Cell::Num(r.aic),
            Cell::Num(r.bic),
            Cell::Num(r.caic),
            Cell::Num(r.ks_stat),
            Cell::Prob(r.ks_pvalue),
        ]);
    }
    Ok((table, unconverged))
}

fn estimates(fit: &FitResult, precision: usize) -> String {
    fit.params
        .iter()
        .zip(&fit.se)
        .map(|(p, s)| format!("{p:.precision$} ({s:.precision$})"))
        .collect::<Vec<_>>()
        .join("; ")
}

/// Comparison table ranked by AIC; failed fits are kept as marked rows.
pub fn compare(data: &Dataset, models: &[Model], ks: KsConvention, precision: usize) -> CliResult<Table> {
    let ranked = compare_models(data, models, ks)?;
    let mut table = Table::new(["Model", "MLE(SE)", "-LL", "AIC", "BIC", "CAIC", "K-S", "P-value"]);
    for row in &ranked.rows {
        match &row.outcome {
            Ok((fit, r)) => {
                let name = if fit.converged {
                    row.model.abbrev().to_string()
                } else {
                    format!("{}*", row.model.abbrev())
                };
                table.push(vec![
                    text(name),
                    text(estimates(fit, precision)),
                    Cell::Num(r.neg_ll),
                    Cell::Num(r.aic),
                    Cell::Num(r.bic),
                    Cell::Num(r.caic),
                    Cell::Num(r.ks_stat),
                    Cell::Prob(r.ks_pvalue),
                ]);
            }
            Err(e) => {
                let mut cells = vec![text(format!("{}!", row.model.abbrev())), text(format!("failed: {e}"))];
                cells.extend((0..6).map(|_| text("-")));
                table.push(cells);
            }
        }
    }
    if ranked.rows.iter().any(|r| r.fit().is_some_and(|f| !f.converged)) {
        table.notes.push("* optimizer stopped before convergence".into());
    }
    if ranked.rows.iter().any(|r| r.outcome.is_err()) {
        table.notes.push("! fit failed".into());
    }
    Ok(table)
}

/// Below this θ the moment series need many thousands of terms.
pub const SLOW_SERIES_THETA: f64 = 1.05;

pub fn describe(grid: &[f64]) -> CliResult<Table> {
    let mut table = Table::new(["theta", "Mean", "Variance", "Skewness", "Ex-kurtosis", "IOD", "CV", "Flag"]);
    let mut flagged = false;
    for &theta in grid {
        let d = dt(theta)?.descriptives()?;
        let flag = theta < SLOW_SERIES_THETA;
        flagged |= flag;
        table.push(vec![
            Cell::Num(theta),
            Cell::Num(d.mean),
            Cell::Num(d.variance),
            Cell::Num(d.skewness),
            Cell::Num(d.ex_kurtosis),
            Cell::Num(d.iod),
            Cell::Num(d.cv),
            text(if flag { "*" } else { "" }),
        ]);
    }
    if flagged {
        table.notes.push(format!(
            "* theta < {SLOW_SERIES_THETA}: heavy tail; short truncated sums understate these moments"
        ));
    }
    Ok(table)
}

/// Matrix of `R = P(stress < strength)`; rows are stress θ₁, columns
/// strength θ₂.
pub fn stress_strength(theta1: &[f64], theta2: &[f64], precision: usize) -> CliResult<Table> {
    let strengths: Vec<DiscreteTeissier> = theta2.iter().map(|&t| dt(t)).collect::<CliResult<_>>()?;
    let mut headers = vec!["theta1\\theta2".to_string()];
    headers.extend(theta2.iter().map(|t| format!("{t:.precision$}")));
    let mut table = Table::new(headers);
    for &t1 in theta1 {
        let stress = dt(t1)?;
        let mut row = vec![Cell::Num(t1)];
        for strength in &strengths {
            row.push(Cell::Num(stress_strength_reliability(&stress, strength)?));
        }
        table.push(row);
    }
    Ok(table)
}

pub fn sample(theta: f64, n: usize, seed: u64) -> CliResult<Vec<u64>> {
    if n == 0 {
        return Err(CliError::Usage("--n must be at least 1".into()));
    }
    Ok(dt(theta)?.sample(n, seed))
}

pub fn points_fn(f: PointFn, theta: f64, max_y: u64) -> CliResult<Table> {
    let d = dt(theta)?;
    let name = match f {
        PointFn::Pmf => "pmf",
        PointFn::Cdf => "cdf",
        PointFn::Hrf => "hrf",
        PointFn::LlProfile => unreachable!("profile points need data"),
    };
    let mut table = Table::new(["y", name]);
    for y in 0..=max_y {
        let v = match f {
            PointFn::Pmf => d.pmf(y),
            PointFn::Cdf => d.cdf(y as i64),
            _ => d.hrf(y),
        };
        table.push(vec![Cell::Int(y), Cell::Num(v)]);
    }
    Ok(table)
}

/// `(θ, LL(θ))` on an odd grid centred on the MLE.
pub fn ll_profile(data: &Dataset, points: usize) -> CliResult<Table> {
    if points < 3 {
        return Err(CliError::Usage("--points must be at least 3".into()));
    }
    let fit = fit_mle(data)?;
    let (hat, se) = (fit.theta_hat(), fit.theta_se());
    let half = if se.is_finite() && se > 0.0 { 4.0 * se } else { 0.5 * (hat - 1.0) };
    let lo = (hat - half).max(1.0 + 0.25 * (hat - 1.0));
    let span = hat - lo;
    let steps = (points - 1) / 2;
    let mut table = Table::new(["theta", "loglik"]);
    for i in 0..=2 * steps {
        let theta = if i == steps {
            hat
        } else {
            lo + span * i as f64 / steps as f64
        };
        table.push(vec![Cell::Num(theta), Cell::Num(log_likelihood(data, theta)?)]);
    }
    Ok(table)
}
