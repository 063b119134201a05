//! Deciding positive-real-root existence for integer polynomials via
//! positivity certificates, with exact rational arithmetic everywhere a
//! certificate is produced or checked.
//!
//! The core idea: a univariate real polynomial `P` has no root in `]0, ∞[`
//! exactly when some multiplier `T` with nonnegative coefficients makes
//! `P·T` a polynomial with strictly positive coefficients (Descartes' rule
//! of signs gives soundness; the converse is a structure theorem on the
//! quadratic factors of `P²`). The multiplier is found by exact rational
//! linear programming and re-verified by exact multiplication, then
//! cross-checked against a classical Sturm-sequence oracle.
//!
//! The same certificate shape extends to 3-SAT: a clause-sum polynomial `Q`
//! together with per-variable pin polynomials `Pᵢ = (Xᵢ−1)²(Xᵢ−2)²` admits
//! a combination `Q·K + Σ Pᵢ·Kᵢ` with positive coefficients only when the
//! formula is unsatisfiable.
//!
//! Modules map one-to-one onto the moving parts:
//! - [`unipoly`] / [`mpoly`] — exact polynomial arithmetic,
//! - [`oracle`] — Sturm counting and approximate complex roots (β),
//! - [`lp`] — exact two-phase simplex feasibility,
//! - [`cofactor`] — the quadratic-cofactor degree machinery and its table,
//! - [`certificate`] — the univariate decision procedure and witnesses,
//! - [`sat`] — DIMACS parsing, encoding, and unsat certificates,
//! - [`report`] — serializable run reports for the CLI.

pub mod certificate;
pub mod cofactor;
pub mod lp;
pub mod mpoly;
pub mod oracle;
pub mod rational;
pub mod report;
pub mod sat;
pub mod unipoly;

pub use mpoly::MultiPoly;
pub use rational::Rat;
pub use unipoly::UniPoly;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("resource limit exceeded: {0}")]
    Resource(String),
    #[error("root finding did not converge: residual {residual} after {iterations} iterations")]
    NonConvergence { residual: f64, iterations: usize },
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
