//! Stable Faltings heights of the hyperelliptic curves `y^2 = x^n - 1`.
//!
//! For odd `n >= 3` the height of `X_n` decomposes into a finite-place sum
//! driven by cluster data at the primes dividing `n`, and an archimedean part
//! given by a product of gamma values. This crate computes that decomposition
//! at configurable precision and cross-checks every ingredient against an
//! independent route:
//!
//! * [`cluster`] - cluster pictures of `x(1 - x^n)` at odd primes `p | n`,
//!   both in closed form and by brute-force disc enumeration, plus the
//!   Kunzweiler order formula over the cluster data.
//! * [`gamma`] - Stirling-series log-gamma, beta values, and the analytic
//!   constants (`zeta'(-1)`, Barnes `G(1/2)`, Euler's constant) behind the
//!   gamma-sum bounds.
//! * [`arch`] - the infinite-place norm in closed form and a numerical
//!   period-matrix oracle (tanh-sinh quadrature plus complex LU determinant).
//! * [`height`] - assembly of the five height summands and the `n = 3`
//!   cross-check against Deligne's value.
//! * [`bounds`] - every inequality used to bracket the height: the gamma-sum
//!   bounds, the prime-sum bounds with their Chebyshev-theta ingredients, and
//!   the CM-height chain.
//!
//! All floating-point work goes through [`ctx::Ctx`], a precision context
//! backed by MPFR. Exact data (valuations, depths, order formulas) stays in
//! GMP rationals and never touches a float.

pub mod arch;
pub mod bounds;
pub mod cluster;
pub mod ctx;
pub mod exact;
pub mod gamma;
pub mod height;
pub mod linalg;
pub mod quad;

pub use ctx::{Ctx, Real};
pub use exact::{PrimeFactorization, Rational};

/// Errors shared by all modules.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("quadrature failed to contract below target after level {max_level}: last rel diff {last_rel_diff}")]
    QuadratureNoConvergence { max_level: u32, last_rel_diff: f64 },
    #[error("singular matrix in determinant computation")]
    SingularMatrix,
    #[error("internal consistency check failed: {0}")]
    ConsistencyCheck(String),
}

pub type Result<T> = std::result::Result<T, Error>;
