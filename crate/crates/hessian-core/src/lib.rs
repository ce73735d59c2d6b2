//! Numerical machinery for complex Hessian equations
//! `(chi + dd^c u)^m ∧ alpha^(n-m) = f alpha^n` on Euclidean balls in C^n,
//! written in the eigenvalue form `S_m(lambda)^(1/m) = h` where `lambda` are
//! the eigenvalues of `alpha^{-1}(chi + u_{i j-bar})`.
//!
//! The crate is organized around the pipeline:
//!
//! * [`symfun`] — elementary symmetric polynomials, the `Gamma_m` cone and
//!   the inequality battery (Garding, Maclaurin, product bounds).
//! * [`pencil`] — Hermitian pencil eigenvalues, frames and linearized
//!   operator coefficients.
//! * [`grid`] — ball discretization, complex Hessians, quadrature.
//! * [`solver`] — damped Newton with cone-preserving line search,
//!   continuity method, linear (m = 1) path, barrier/C0 diagnostics.
//! * [`envelope`] — Perron envelope sweeps over ball covers and the
//!   penalized approximation scheme.
//! * [`potential`] — capacity estimation, volume-capacity, stability and
//!   mixed-type inequality checks.
//! * [`mollify`] — constructive Green-kernel mollification of subharmonic
//!   functions in R^3 and the sub-mean-value characterization.

pub mod envelope;
pub mod expr;
pub mod grid;
pub mod mollify;
pub mod pencil;
pub mod potential;
pub mod problem;
pub mod report;
pub mod solver;
pub mod symfun;

pub use problem::ProblemSpec;
pub use report::SolveReport;

/// Errors shared across the crate's numerical modules.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("spectrum leaves Gamma_{m} cone: S_{k} <= 0 (S_k = {value:.6e})")]
    ConeViolation { m: usize, k: usize, value: f64 },
    #[error("metric error: {0}")]
    Metric(String),
    #[error("discretization error at node {node}: {message}")]
    Discretization { node: usize, message: String },
    #[error("solver error: {0}")]
    Solver(String),
    #[error("cone trap at node {node}: line search step {step:.3e} below minimum")]
    ConeTrap { node: usize, step: f64 },
    #[error("no convergence after {iters} iterations (residual {residual:.6e})")]
    NonConvergence { iters: usize, residual: f64 },
    #[error("geometry error: {0}")]
    Geometry(String),
    #[error("quadrature accuracy error: achieved {achieved:.3e}, requested {requested:.3e}")]
    Accuracy { achieved: f64, requested: f64 },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
