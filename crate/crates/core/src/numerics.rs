//! Shared numerical machinery: truncated series summation, bracketed root
//! finding, golden-section minimization and central differences.
//!
//! Everything here is a pure function of its inputs.

use crate::error::{Error, Result};

/// Truncation rule for an infinite sum `Σ_{j ≥ start} term(j)`.
///
/// Summation stops at the first term with `|term| < abs_tol` once at least
/// `min_terms` terms have been added. Hitting `max_terms` first is an error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesSpec {
    pub start: u64,
    pub abs_tol: f64,
    pub min_terms: u64,
    pub max_terms: u64,
}

impl Default for SeriesSpec {
    fn default() -> Self {
        SeriesSpec {
            start: 0,
            abs_tol: 1e-15,
            min_terms: 64,
            max_terms: 10_000_000,
        }
    }
}

impl SeriesSpec {
    pub fn starting_at(start: u64) -> Self {
        SeriesSpec {
            start,
            ..Self::default()
        }
    }

    /// Raises the floor so that at least every index up to `last` is summed.
    pub fn through(mut self, last: u64) -> Self {
        let needed = last.saturating_sub(self.start).saturating_add(1);
        self.min_terms = self.min_terms.max(needed);
        self
    }

    pub fn with_tol(mut self, abs_tol: f64) -> Self {
        self.abs_tol = abs_tol;
        self
    }
}

/// Sums `term(start), term(start + 1), …` in ascending index order with
/// Neumaier compensation.
pub fn sum_series<F>(spec: &SeriesSpec, mut term: F) -> Result<f64>
where
    F: FnMut(u64) -> f64,
{
    if !(spec.abs_tol > 0.0) || spec.max_terms == 0 {
        return Err(Error::domain("series spec needs abs_tol > 0 and max_terms >= 1"));
    }
    let mut sum = 0.0_f64;
    let mut comp = 0.0_f64;
    let mut last = f64::NAN;
    for k in 0..spec.max_terms {
        let t = term(spec.start + k);
        if t.is_nan() {
            return Err(Error::domain(format!("series term {} is NaN", spec.start + k)));
        }
        let s = sum + t;
        if sum.abs() >= t.abs() {
            comp += (sum - s) + t;
        } else {
            comp += (t - s) + sum;
        }
        sum = s;
        last = t;
        if t.abs() < spec.abs_tol && k + 1 >= spec.min_terms {
            return Ok(sum + comp);
        }
    }
    Err(Error::NonConvergence {
        max_terms: spec.max_terms,
        last_term: last,
    })
}

/// An interval on which a continuous function changes sign.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootBracket {
    pub lo: f64,
    pub hi: f64,
    pub f_lo: f64,
    pub f_hi: f64,
}

impl RootBracket {
    pub fn new<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64) -> Result<Self> {
        Self::from_values(lo, hi, f(lo), f(hi))
    }

    pub fn from_values(lo: f64, hi: f64, f_lo: f64, f_hi: f64) -> Result<Self> {
        if !(lo < hi) {
            return Err(Error::domain(format!("bracket needs lo < hi, got [{lo}, {hi}]")));
        }
        if f_lo.is_nan() || f_hi.is_nan() || f_lo.signum() == f_hi.signum() && f_lo != 0.0 && f_hi != 0.0 {
            return Err(Error::InvalidBracket { lo, hi, f_lo, f_hi });
        }
        Ok(RootBracket { lo, hi, f_lo, f_hi })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Root {
    pub x: f64,
    pub f_x: f64,
    pub iterations: usize,
}

const ROOT_MAX_ITER: usize = 500;

/// Safeguarded root finder. The Newton slope is the bracket secant.
pub fn find_root<F: Fn(f64) -> f64>(f: F, bracket: RootBracket, xtol: f64) -> Result<f64> {
    hybrid_root(&f, None::<&fn(f64) -> f64>, bracket, xtol).map(|r| r.x)
}

/// Bisection with Newton acceleration: a Newton step from the better endpoint
/// is taken whenever it lands strictly inside the bracket and the previous
/// step at least halved the bracket; otherwise the bracket is bisected.
pub fn find_root_newton<F, D>(f: F, df: D, bracket: RootBracket, xtol: f64) -> Result<Root>
where
    F: Fn(f64) -> f64,
    D: Fn(f64) -> f64,
{
    hybrid_root(&f, Some(&df), bracket, xtol)
}

fn hybrid_root<F, D>(f: &F, df: Option<&D>, bracket: RootBracket, xtol: f64) -> Result<Root>
where
    F: Fn(f64) -> f64,
    D: Fn(f64) -> f64,
{
    if !(xtol > 0.0) {
        return Err(Error::domain("xtol must be positive"));
    }
    let RootBracket {
        mut lo,
        mut hi,
        mut f_lo,
        mut f_hi,
    } = bracket;
    if f_lo == 0.0 {
        return Ok(Root { x: lo, f_x: 0.0, iterations: 0 });
    }
    if f_hi == 0.0 {
        return Ok(Root { x: hi, f_x: 0.0, iterations: 0 });
    }
    let best = |lo: f64, f_lo: f64, hi: f64, f_hi: f64| {
        if f_lo.abs() <= f_hi.abs() {
            (lo, f_lo)
        } else {
            (hi, f_hi)
        }
    };
    let mut last_width = f64::INFINITY;
    for it in 1..=ROOT_MAX_ITER {
        let width = hi - lo;
        let (bx, bf) = best(lo, f_lo, hi, f_hi);
        if width < xtol {
            return Ok(Root { x: bx, f_x: bf, iterations: it - 1 });
        }
        let slope = match df {
            Some(d) => d(bx),
            None => (f_hi - f_lo) / width,
        };
        let mut x = bx - bf / slope;
        if !(x > lo && x < hi) || width > 0.5 * last_width {
            x = lo + 0.5 * width;
        } else {
            // keep the trial point at least xtol/2 off the endpoints so the
            // bracket can collapse once Newton has converged
            let pad = 0.5 * xtol;
            x = x.clamp(lo + pad, hi - pad);
        }
        last_width = width;
        let fx = f(x);
        if fx == 0.0 {
            return Ok(Root { x, f_x: 0.0, iterations: it });
        }
        if fx.is_nan() {
            return Err(Error::domain(format!("root target is NaN at x = {x}")));
        }
        if fx.signum() == f_lo.signum() {
            lo = x;
            f_lo = fx;
        } else {
            hi = x;
            f_hi = fx;
        }
    }
    Err(Error::NoConvergence {
        iterations: ROOT_MAX_ITER,
    })
}

/// Central second difference `(f(x+h) − 2f(x) + f(x−h)) / h²`.
pub fn second_derivative<F: Fn(f64) -> f64>(f: F, x: f64, h: f64) -> f64 {
    (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h)
}

/// Central first difference.
pub fn first_derivative<F: Fn(f64) -> f64>(f: F, x: f64, h: f64) -> f64 {
    (f(x + h) - f(x - h)) / (2.0 * h)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Minimum {
    pub x: f64,
    pub f_x: f64,
    pub iterations: usize,
}

const INV_PHI: f64 = 0.618_033_988_749_894_9;

/// Golden-section search for a minimum of a unimodal `f` on `[lo, hi]`.
/// Stops when the interval is narrower than `tol`.
pub fn minimize_golden<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, tol: f64) -> Result<Minimum> {
    if !(lo < hi) || !(tol > 0.0) {
        return Err(Error::domain("golden-section search needs lo < hi and tol > 0"));
    }
    let (mut a, mut b) = (lo, hi);
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    let mut it = 0;
    while b - a > tol {
        it += 1;
        if it > 10_000 {
            return Err(Error::NoConvergence { iterations: it });
        }
        // NaN compares false, so a NaN probe is treated as "worse"
        if fc < fd || fd.is_nan() {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = f(d);
        }
    }
    let (x, f_x) = if fc < fd { (c, fc) } else { (d, fd) };
    Ok(Minimum { x, f_x, iterations: it })
}

/// Walks downhill from `x0` with geometrically growing steps until `f` rises,
/// returning an interval `(a, b)` that contains a local minimum. The walk is
/// clamped to `[lower, upper]`.
pub fn bracket_minimum<F: Fn(f64) -> f64>(f: F, x0: f64, step: f64, lower: f64, upper: f64) -> (f64, f64) {
    const GROW: f64 = 1.618_033_988_749_895;
    let clamp = |x: f64| x.clamp(lower, upper);
    let step = step.abs().max(1e-12);
    let x0 = clamp(x0);
    let f0 = f(x0);
    let fwd = clamp(x0 + step);
    // (a, b): b is the best point so far, a the point it improved on
    let (mut a, mut stepsize) = if f(fwd) < f0 { (x0, step) } else { (fwd, -step) };
    let (mut b, mut f_b) = if stepsize > 0.0 { (fwd, f(fwd)) } else { (x0, f0) };
    for _ in 0..200 {
        let c = clamp(b + stepsize);
        if c == b {
            return if a < b { (a, b) } else { (b, a) };
        }
        let f_c = f(c);
        if !(f_c < f_b) {
            return if a < c { (a, c) } else { (c, a) };
        }
        a = b;
        b = c;
        f_b = f_c;
        stepsize *= GROW;
    }
    (lower, upper)
}

/// `eᵘ − 1 − u` without cancellation for small `|u|`.
pub fn expm1_minus_x(u: f64) -> f64 {
    if u.abs() < 0.1 {
        // u²/2! + u³/3! + …
        let mut term = u * u / 2.0;
        let mut sum = term;
        let mut k = 2.0;
        while term.abs() > 1e-17 * sum.abs() {
            k += 1.0;
            term *= u / k;
            sum += term;
        }
        sum
    } else {
        u.exp_m1() - u
    }
}

/// `h − ln(1 + h)` without cancellation for small `|h|`.
pub fn x_minus_ln1p(h: f64) -> f64 {
    if h.abs() < 0.1 {
        // h²/2 − h³/3 + h⁴/4 − …
        let mut pow = h * h;
        let mut sum = 0.0;
        let mut k = 2.0;
        loop {
            let term = pow / k;
            sum += term;
            if term.abs() <= 1e-17 * sum.abs() {
                break;
            }
            pow *= -h;
            k += 1.0;
        }
        sum
    } else {
        h - h.ln_1p()
    }
}

/// `ln(1 − eˣ)` for `x ≤ 0`, accurate at both ends.
pub fn ln_one_minus_exp(x: f64) -> f64 {
    if x > -std::f64::consts::LN_2 {
        (-x.exp_m1()).ln()
    } else {
        (-x.exp()).ln_1p()
    }
}
