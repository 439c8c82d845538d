//! Fully first-order stochastic bilevel optimization.
//!
//! This crate implements the F²SA-p family of double-loop solvers for
//! nonconvex-strongly-convex bilevel problems. The hyper-gradient of
//! `phi(x) = f(x, y*(x))` is estimated purely from stochastic gradients of
//! `f` and `g` by applying a pth-order finite-difference stencil to the
//! perturbed value functions `l_nu(x) = min_y (nu f + g)(x, y)`.
//!
//! Module map:
//!
//! * [`findiff`] — exact-rational generation of the difference stencils and
//!   empirical order verification.
//! * [`oracles`] — the stochastic first-order oracle contract: seeded,
//!   replayable sampling plus SFO accounting.
//! * [`problems`] — synthetic bilevel instances with closed-form ground
//!   truth, a randomized worst-case chain instance, and a small
//!   learn-to-regularize demo.
//! * [`hypergrad`] — the analytic hyper-gradient, the finite-difference
//!   estimator assembly, and a brute-force reference.
//! * [`solvers`] — the F²SA-p / F²SA-2 double loops, hyper-parameter
//!   defaults, and a deterministic gradient-descent baseline.

pub mod findiff;
pub mod hypergrad;
pub mod oracles;
pub mod problems;
pub mod solvers;

pub use findiff::DiffStencil;
pub use oracles::{OracleCounter, Role, SeedPath};
pub use problems::BilevelProblem;
pub use solvers::{RunTrace, SolverConfig};
