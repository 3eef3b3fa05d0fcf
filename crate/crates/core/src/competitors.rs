//! Classical discrete lifetime models used as competitors, behind the same
//! [`DiscreteDistribution`] interface as the discrete Teissier law.
//!
//! Every model is a survival discretization `P(Y = y) = S(y) − S(y + 1)`
//! with `S(y) = P(Y ≥ y)`:
//!
//! | model | parameters | `S(y)` |
//! |---|---|---|
//! | Geometric (Geo) | `q ∈ (0,1)` | `q^y` |
//! | Discrete Rayleigh (DR) | `θ ∈ (0,1)` | `θ^{y²}` |
//! | Discrete Weibull (DW) | `q ∈ (0,1)`, `β > 0` | `q^{y^β}` |
//! | Discrete Pareto (DPa) | `θ ∈ (0,1)` | `θ^{ln(1+y)}` |
//! | Discrete Burr (DBr) | `θ ∈ (0,1)`, `β > 0` | `θ^{ln(1+y^β)}` |
//! | Discrete Lindley (DsLi) | `λ ∈ (0,1)` | `λ^y (1 − (1+y) ln λ) / (1 − ln λ)` |
//! | Poisson–Lindley (DPL) | `θ > 0` | `((θ+1)² + θy) / (θ+1)^{y+2}` |
//!
//! The Lindley form is the Gómez-Déniz & Calderín-Ojeda discretization of the
//! continuous Lindley survival function with `λ = e^{−θ}`; its mass function is
//! `λ^y [λ ln λ + (1−λ)(1 − (1+y) ln λ)] / (1 − ln λ)`. The Poisson–Lindley
//! form is Sankaran's, with mass `θ²(y+θ+2)/(θ+1)^{y+3}`.
//!
//! Fitting maximizes the likelihood in unconstrained working coordinates:
//! `ln(−ln p)` for parameters in `(0,1)` and `ln p` for positive ones.
//! Two-parameter models alternate one-dimensional golden-section searches
//! over the coordinates until the log-likelihood gains less than `1e−10`.

use std::fmt;
use std::str::FromStr;

use crate::distribution::DiscreteDistribution;
use crate::error::{Error, Result};
use crate::estimation::{fit_mle, Dataset, FitResult, Method};
use crate::numerics::{bracket_minimum, minimize_golden};
use crate::teissier::DiscreteTeissier;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Model {
    Teissier,
    Geometric,
    Rayleigh,
    Weibull,
    Pareto,
    Burr,
    Lindley,
    PoissonLindley,
}

/// Open interval `(lo, hi)` a parameter must lie in.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParamDomain {
    pub lo: f64,
    pub hi: f64,
}

impl ParamDomain {
    pub fn contains(&self, v: f64) -> bool {
        v > self.lo && v < self.hi
    }
}

const UNIT: ParamDomain = ParamDomain { lo: 0.0, hi: 1.0 };
const POSITIVE: ParamDomain = ParamDomain {
    lo: 0.0,
    hi: f64::INFINITY,
};
const ABOVE_ONE: ParamDomain = ParamDomain {
    lo: 1.0,
    hi: f64::INFINITY,
};

impl Model {
    pub const ALL: [Model; 8] = [
        Model::Teissier,
        Model::Weibull,
        Model::Rayleigh,
        Model::Geometric,
        Model::Pareto,
        Model::Burr,
        Model::Lindley,
        Model::PoissonLindley,
    ];

    pub fn abbrev(&self) -> &'static str {
        match self {
            Model::Teissier => "DT",
            Model::Geometric => "Geo",
            Model::Rayleigh => "DR",
            Model::Weibull => "DW",
            Model::Pareto => "DPa",
            Model::Burr => "DBr",
            Model::Lindley => "DsLi",
            Model::PoissonLindley => "DPL",
        }
    }

    pub fn domains(&self) -> &'static [ParamDomain] {
        match self {
            Model::Teissier => &[ABOVE_ONE],
            Model::Geometric | Model::Rayleigh | Model::Pareto | Model::Lindley => &[UNIT],
            Model::Weibull | Model::Burr => &[UNIT, POSITIVE],
            Model::PoissonLindley => &[POSITIVE],
        }
    }

    pub fn param_count(&self) -> usize {
        self.domains().len()
    }
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.abbrev())
    }
}

impl FromStr for Model {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let m = match s.trim().to_ascii_lowercase().as_str() {
            "dt" | "teissier" => Model::Teissier,
            "geo" | "geometric" => Model::Geometric,
            "dr" | "rayleigh" => Model::Rayleigh,
            "dw" | "weibull" => Model::Weibull,
            "dpa" | "pareto" => Model::Pareto,
            "dbr" | "db" | "burr" => Model::Burr,
            "dsli" | "lindley" => Model::Lindley,
            "dpl" | "poisson-lindley" => Model::PoissonLindley,
            other => return Err(Error::domain(format!("unknown model '{other}'"))),
        };
        Ok(m)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum Kernel {
    Teissier(DiscreteTeissier),
    Geometric { ln_q: f64 },
    Rayleigh { ln_theta: f64 },
    Weibull { ln_q: f64, beta: f64 },
    Pareto { ln_theta: f64 },
    Burr { ln_theta: f64, beta: f64 },
    Lindley { ln_lambda: f64 },
    PoissonLindley { theta: f64 },
}

/// A model with concrete parameter values.
#[derive(Debug, Clone, PartialEq)]
pub struct ModelDistribution {
    model: Model,
    params: Vec<f64>,
    kernel: Kernel,
}

impl ModelDistribution {
    pub fn new(model: Model, params: &[f64]) -> Result<Self> {
        let domains = model.domains();
        if params.len() != domains.len() {
            return Err(Error::domain(format!(
                "{model} takes {} parameter(s), got {}",
                domains.len(),
                params.len()
            )));
        }
        for (i, (&v, dom)) in params.iter().zip(domains).enumerate() {
            if !dom.contains(v) {
                return Err(Error::domain(format!(
                    "{model} parameter {} = {v} outside ({}, {})",
                    i + 1,
                    dom.lo,
                    dom.hi
                )));
            }
        }
        let kernel = match model {
            Model::Teissier => Kernel::Teissier(DiscreteTeissier::new(params[0])?),
            Model::Geometric => Kernel::Geometric { ln_q: params[0].ln() },
            Model::Rayleigh => Kernel::Rayleigh {
                ln_theta: params[0].ln(),
            },
            Model::Weibull => Kernel::Weibull {
                ln_q: params[0].ln(),
                beta: params[1],
            },
            Model::Pareto => Kernel::Pareto {
                ln_theta: params[0].ln(),
            },
            Model::Burr => Kernel::Burr {
                ln_theta: params[0].ln(),
                beta: params[1],
            },
            Model::Lindley => Kernel::Lindley {
                ln_lambda: params[0].ln(),
            },
            Model::PoissonLindley => Kernel::PoissonLindley { theta: params[0] },
        };
        Ok(ModelDistribution {
            model,
            params: params.to_vec(),
            kernel,
        })
    }

    pub fn model(&self) -> Model {
        self.model
    }

    pub fn params(&self) -> &[f64] {
        &self.params
    }
}

// ln(1 + eˣ)
fn softplus(x: f64) -> f64 {
    if x > 0.0 {
        x + (-x).exp().ln_1p()
    } else {
        x.exp().ln_1p()
    }
}

impl DiscreteDistribution for ModelDistribution {
    fn ln_survival_ge(&self, y: u64) -> f64 {
        if y == 0 {
            return 0.0;
        }
        let yf = y as f64;
        match self.kernel {
            Kernel::Teissier(ref d) => d.ln_survival_ge(y),
            Kernel::Geometric { ln_q } => yf * ln_q,
            Kernel::Rayleigh { ln_theta } => yf * yf * ln_theta,
            Kernel::Weibull { ln_q, beta } => yf.powf(beta) * ln_q,
            Kernel::Pareto { ln_theta } => yf.ln_1p() * ln_theta,
            Kernel::Burr { ln_theta, beta } => softplus(beta * yf.ln()) * ln_theta,
            Kernel::Lindley { ln_lambda } => {
                yf * ln_lambda + (-(1.0 + yf) * ln_lambda).ln_1p() - (-ln_lambda).ln_1p()
            }
            Kernel::PoissonLindley { theta } => {
                (theta * yf / ((theta + 1.0) * (theta + 1.0))).ln_1p() - yf * theta.ln_1p()
            }
        }
    }

    fn param_count(&self) -> usize {
        self.model.param_count()
    }

    fn ln_pmf(&self, y: u64) -> f64 {
        match self.kernel {
            Kernel::Teissier(ref d) => d.ln_pmf(y),
            Kernel::Geometric { ln_q } => (-ln_q.exp_m1()).ln() + y as f64 * ln_q,
            _ => {
                let a = self.ln_survival_ge(y);
                if a == f64::NEG_INFINITY {
                    return a;
                }
                a + crate::numerics::ln_one_minus_exp(self.ln_survival_ge(y + 1) - a)
            }
        }
    }
}

/// Mass function of `model` with parameters `params` at `y`.
pub fn pmf_generic(model: Model, params: &[f64], y: u64) -> Result<f64> {
    Ok(ModelDistribution::new(model, params)?.pmf(y))
}

// Working-coordinate limits for the line searches.
const W_LO: f64 = -40.0;
const W_HI: f64 = 12.0;
const LOG_BETA_LO: f64 = -8.0;
const LOG_BETA_HI: f64 = 8.0;
const LL_TOL: f64 = 1e-10;
const MAX_ROUNDS: usize = 20_000;

/// Likelihood evaluated on distinct values with multiplicities.
struct Objective<'a> {
    model: Model,
    counts: &'a [(u64, f64)],
    // mean of ln y over y ≥ 1; centres the scale coordinate of DW
    centre: f64,
}

impl Objective<'_> {
    fn kernel(&self, w: &[f64]) -> Kernel {
        let neg_exp = |v: f64| -v.exp();
        match self.model {
            Model::Teissier => unreachable!("DT is fitted through its score equation"),
            Model::Geometric => Kernel::Geometric { ln_q: neg_exp(w[0]) },
            Model::Rayleigh => Kernel::Rayleigh { ln_theta: neg_exp(w[0]) },
            Model::Pareto => Kernel::Pareto { ln_theta: neg_exp(w[0]) },
            Model::Lindley => Kernel::Lindley { ln_lambda: neg_exp(w[0]) },
            Model::PoissonLindley => Kernel::PoissonLindley { theta: w[0].exp() },
            Model::Weibull => {
                let beta = w[1].exp();
                Kernel::Weibull {
                    ln_q: neg_exp(w[0] - beta * self.centre),
                    beta,
                }
            }
            Model::Burr => {
                let beta = w[1].exp();
                Kernel::Burr {
                    // −ln θ · β is nearly constant along the likelihood ridge
                    ln_theta: neg_exp(w[0] - w[1]),
                    beta,
                }
            }
        }
    }

    fn natural(&self, w: &[f64]) -> Vec<f64> {
        match self.kernel(w) {
            Kernel::Teissier(d) => vec![d.theta()],
            Kernel::Geometric { ln_q } => vec![ln_q.exp()],
            Kernel::Rayleigh { ln_theta } | Kernel::Pareto { ln_theta } => vec![ln_theta.exp()],
            Kernel::Lindley { ln_lambda } => vec![ln_lambda.exp()],
            Kernel::PoissonLindley { theta } => vec![theta],
            Kernel::Weibull { ln_q, beta } => vec![ln_q.exp(), beta],
            Kernel::Burr { ln_theta, beta } => vec![ln_theta.exp(), beta],
        }
    }

    /// Jacobian `∂natural/∂working`, row-major.
    fn jacobian(&self, w: &[f64]) -> Vec<f64> {
        let p = self.natural(w);
        match self.model {
            Model::PoissonLindley => vec![p[0]],
            Model::Geometric | Model::Rayleigh | Model::Pareto | Model::Lindley => {
                // p = exp(−e^w)
                vec![-p[0] * w[0].exp()]
            }
            Model::Weibull => {
                let beta = p[1];
                let w0 = w[0] - beta * self.centre;
                let dp_dw0 = -p[0] * w0.exp();
                vec![dp_dw0, dp_dw0 * (-beta * self.centre), 0.0, beta]
            }
            Model::Burr => {
                let dp_dw0 = -p[0] * (w[0] - w[1]).exp();
                vec![dp_dw0, -dp_dw0, 0.0, p[1]]
            }
            Model::Teissier => unreachable!(),
        }
    }

    fn nll(&self, w: &[f64]) -> f64 {
        let dist = ModelDistribution {
            model: self.model,
            params: Vec::new(),
            kernel: self.kernel(w),
        };
        let ll: f64 = self.counts.iter().map(|&(y, c)| c * dist.ln_pmf(y)).sum();
        if ll.is_nan() {
            f64::INFINITY
        } else {
            -ll
        }
    }

    fn limits(&self, i: usize) -> (f64, f64) {
        match (self.model, i) {
            (Model::Weibull | Model::Burr, 1) => (LOG_BETA_LO, LOG_BETA_HI),
            (Model::PoissonLindley, _) => (-30.0, 10.0),
            _ => (W_LO, W_HI),
        }
    }

    fn start(&self, ybar: f64) -> Vec<f64> {
        let geo_w = (-(ybar / (1.0 + ybar)).ln()).ln();
        match self.model {
            Model::Geometric | Model::Lindley => vec![geo_w],
            Model::Rayleigh => vec![-2.0 * (ybar + 1.0).ln()],
            Model::Pareto => vec![(2.0_f64.ln()).ln()],
            Model::PoissonLindley => vec![(2.0 / (ybar + 1.0)).ln()],
            Model::Weibull => vec![geo_w + self.centre, 0.0],
            Model::Burr => vec![0.0, 0.0],
            Model::Teissier => unreachable!(),
        }
    }

    fn line_search(&self, w: &mut [f64], i: usize, step: f64) -> Result<f64> {
        let (lo, hi) = self.limits(i);
        let f = |x: f64| {
            let mut trial = w.to_vec();
            trial[i] = x;
            self.nll(&trial)
        };
        let (a, b) = bracket_minimum(f, w[i], step, lo, hi);
        let m = minimize_golden(f, a, b, 1e-11)?;
        if m.f_x <= self.nll(w) {
            w[i] = m.x;
        }
        Ok(self.nll(w))
    }

    fn at_limit(&self, w: &[f64]) -> bool {
        (0..w.len()).any(|i| {
            let (lo, hi) = self.limits(i);
            (w[i] - lo).abs() < 1e-6 || (hi - w[i]).abs() < 1e-6
        })
    }
}

fn counts(data: &Dataset) -> Vec<(u64, f64)> {
    let mut sorted = data.values().to_vec();
    sorted.sort_unstable();
    let mut out: Vec<(u64, f64)> = Vec::new();
    for y in sorted {
        match out.last_mut() {
            Some((v, c)) if *v == y => *c += 1.0,
            _ => out.push((y, 1.0)),
        }
    }
    out
}

/// Maximum-likelihood fit of any supported model.
pub fn fit_generic(model: Model, data: &Dataset) -> Result<FitResult> {
    if model == Model::Teissier {
        return fit_mle(data);
    }
    if data.max() == 0 {
        return Err(Error::DegenerateData(format!(
            "all observations are 0; the {model} likelihood has no interior maximum"
        )));
    }
    let counts = counts(data);
    let positives: Vec<f64> = data.values().iter().filter(|&&y| y > 0).map(|&y| (y as f64).ln()).collect();
    let centre = positives.iter().sum::<f64>() / positives.len() as f64;
    let obj = Objective {
        model,
        counts: &counts,
        centre,
    };
    let mut w = obj.start(data.mean());
    let dims = w.len();
    let mut steps = vec![0.5; dims];
    let mut nll = obj.nll(&w);
    let mut rounds = 0;
    let mut converged = false;
    while rounds < MAX_ROUNDS {
        rounds += 1;
        let before = w.clone();
        for i in 0..dims {
            obj.line_search(&mut w, i, steps[i])?;
        }
        if dims > 1 {
            // extrapolate along the net move of this round
            let dir: Vec<f64> = w.iter().zip(&before).map(|(a, b)| a - b).collect();
            let norm = dir.iter().map(|d| d * d).sum::<f64>().sqrt();
            if norm > 0.0 {
                let line = |s: f64| {
                    let p: Vec<f64> = w.iter().zip(&dir).map(|(a, d)| a + s * d).collect();
                    obj.nll(&p)
                };
                let (a, b) = bracket_minimum(line, 0.0, 1.0, -1e3, 1e3);
                let m = minimize_golden(line, a, b, 1e-9)?;
                if m.f_x < obj.nll(&w) {
                    w = w.iter().zip(&dir).map(|(a, d)| a + m.x * d).collect();
                }
            }
            for i in 0..dims {
                steps[i] = (2.0 * (w[i] - before[i]).abs()).clamp(1e-4, 0.5);
            }
        }
        let next = obj.nll(&w);
        let gain = nll - next;
        nll = next;
        if gain < LL_TOL {
            converged = true;
            break;
        }
    }
    if !nll.is_finite() {
        return Err(Error::NoConvergence { iterations: rounds });
    }
    let converged = converged && !obj.at_limit(&w);
    let se = wald_se(&obj, &w);
    Ok(FitResult {
        params: obj.natural(&w),
        se,
        method: Method::Mle,
        log_likelihood: -nll,
        converged,
        iterations: rounds,
    })
}

// sqrt(diag(J H⁻¹ Jᵀ)), H the observed information in working coordinates.
fn wald_se(obj: &Objective<'_>, w: &[f64]) -> Vec<f64> {
    let n = w.len();
    let h: Vec<f64> = w.iter().map(|v| 1e-4 * v.abs().max(1.0)).collect();
    let f = |p: &[f64]| obj.nll(p);
    let shifted = |di: f64, i: usize, dj: f64, j: usize| {
        let mut p = w.to_vec();
        p[i] += di;
        p[j] += dj;
        f(&p)
    };
    let f0 = f(w);
    let mut info = vec![0.0; n * n];
    for i in 0..n {
        let mut p = w.to_vec();
        p[i] += h[i];
        let fp = f(&p);
        p[i] -= 2.0 * h[i];
        let fm = f(&p);
        info[i * n + i] = (fp - 2.0 * f0 + fm) / (h[i] * h[i]);
        for j in 0..i {
            let v = (shifted(h[i], i, h[j], j) - shifted(h[i], i, -h[j], j) - shifted(-h[i], i, h[j], j)
                + shifted(-h[i], i, -h[j], j))
                / (4.0 * h[i] * h[j]);
            info[i * n + j] = v;
            info[j * n + i] = v;
        }
    }
    let cov = match n {
        1 => vec![1.0 / info[0]],
        2 => {
            let det = info[0] * info[3] - info[1] * info[2];
            vec![info[3] / det, -info[1] / det, -info[2] / det, info[0] / det]
        }
        _ => unreachable!("models have one or two parameters"),
    };
    let jac = obj.jacobian(w);
    (0..n)
        .map(|k| {
            let mut var = 0.0;
            for a in 0..n {
                for b in 0..n {
                    var += jac[k * n + a] * cov[a * n + b] * jac[k * n + b];
                }
            }
            if var >= 0.0 {
                var.sqrt()
            } else {
                f64::NAN
            }
        })
        .collect()
}
