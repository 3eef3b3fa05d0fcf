use crate::numerics::ln_one_minus_exp;

/// A distribution on the non-negative integers described through its
/// survival function.
///
/// Implementors supply `ln P(Y ≥ y)`; the mass function follows from
/// survival discretization, `P(Y = y) = P(Y ≥ y) − P(Y ≥ y + 1)`, evaluated
/// in log space so that deep-tail masses do not cancel to zero.
pub trait DiscreteDistribution {
    /// `ln P(Y ≥ y)`.
    fn ln_survival_ge(&self, y: u64) -> f64;

    /// Number of free parameters (for information criteria).
    fn param_count(&self) -> usize;

    fn ln_pmf(&self, y: u64) -> f64 {
        let a = self.ln_survival_ge(y);
        if a == f64::NEG_INFINITY {
            return a;
        }
        let b = self.ln_survival_ge(y + 1);
        a + ln_one_minus_exp(b - a)
    }

    fn pmf(&self, y: u64) -> f64 {
        self.ln_pmf(y).exp()
    }

    /// `P(Y ≤ y)`; zero for negative `y`.
    fn cdf(&self, y: i64) -> f64 {
        if y < 0 {
            0.0
        } else {
            -self.ln_survival_ge(y as u64 + 1).exp_m1()
        }
    }

    /// `P(Y > y)`; one for negative `y`.
    fn sf(&self, y: i64) -> f64 {
        if y < 0 {
            1.0
        } else {
            self.ln_survival_ge(y as u64 + 1).exp()
        }
    }
}
