//! The discrete Teissier distribution on `{0, 1, 2, …}`, with
//! `P(Y ≥ y) = θ^y e^{1 − θ^y}` for `θ > 1`, together with estimation,
//! competing discrete lifetime models and goodness-of-fit tools.
//!
//! ```
//! use discrete_teissier::{DiscreteDistribution, DiscreteTeissier};
//!
//! let d = DiscreteTeissier::new(2.0).unwrap();
//! assert!((d.pmf(1) - 0.5366).abs() < 1e-4);
//! ```

pub mod competitors;
pub mod datasets;
pub mod distribution;
pub mod error;
pub mod estimation;
pub mod gof;
pub mod numerics;
pub mod teissier;

pub use competitors::{fit_generic, pmf_generic, Model, ModelDistribution, ParamDomain};
pub use distribution::DiscreteDistribution;
pub use error::{Error, Result};
pub use estimation::{fit_mle, fit_mom, log_likelihood, score, Dataset, FitResult, Method, Transform};
pub use gof::{
    compare_models, fitted_report, gof_report, information_criteria, kolmogorov_pvalue, ks_test, ComparisonRow, ComparisonTable,
    GofReport, InformationCriteria, KsConvention, KsResult,
};
pub use teissier::{
    stress_strength_reliability, Descriptives, DiscreteTeissier, OrderStatSpec, RenyiOrder, SUPPORT_TAIL,
};
