//! Numerical library for *empty states*: the nontrivial limit of the
//! superposition of two copies of the same parametrized quantum state.
//!
//! Naively, `|r⟩ − |r⟩` is nothing. Taken as a limit of
//! `C·(|r + Δr⟩ − |r⟩)` with the normalization constant balancing the
//! vanishing difference, it is a new state — generally the derivative of
//! the family with respect to its parameter, reachable from any direction
//! `Δr = |Δr|·e^{iΔθ}` of the vanishing source.
//!
//! The crate provides
//!
//! * [`fock`] — truncated Fock-space vectors and matrix-free ladder,
//!   number, and quadrature operator actions;
//! * [`families`] — closed forms: coherent states, the two-level `|R⟩`
//!   example, the empty-coherent (EC) state and its generator and vacuum
//!   limit;
//! * [`builder`] — the family-agnostic numeric limit: step-schedule
//!   difference quotients, the `Re(g₁) = 0` necessary-condition check,
//!   Richardson extrapolation, and the double limit that empties a Fock
//!   level through an auxiliary family;
//! * [`observables`] — photon statistics, Mandel Q, phase distribution,
//!   quadrature variances and squeezing;
//! * [`quasiprob`] — Husimi and Wigner distributions, closed form against
//!   an independent displaced-parity oracle, plus grid evaluation;
//! * [`validation`] — the cross-validation suite wired into both the
//!   acceptance tests and the CLI.
//!
//! Every closed form is paired with an independent numeric route, and the
//! two are held together by the test suite at explicit tolerances.

pub mod builder;
pub mod error;
pub mod families;
pub mod fock;
pub mod observables;
pub mod quasiprob;
pub mod validation;

pub use error::{Error, Result};
pub use fock::{FockVector, Tolerances};
