//! Exact invariants and stability-parameter bookkeeping for U(p,q)-Higgs
//! bundles and holomorphic triples on a closed surface of genus `g ≥ 2`.
//!
//! - [`invariants`]: Milnor–Wood bounds, component census, and the Higgs ↔
//!   triple dictionary at `α = 2g − 2`.
//! - [`stability`]: slopes, α-slopes, the `α_M` bound, duality and subtriple
//!   margins.
//! - [`chambers`]: critical values of α, chambers, and an independent scan
//!   used as a cross-check.
//! - [`extension`]: Euler characteristics of the extension complex and
//!   expected dimensions.
//! - [`vhs`]: Hodge-chain gradings and the numerical minima test.
//!
//! All arithmetic is exact.

pub mod chambers;
pub mod error;
pub mod extension;
pub mod invariants;
pub mod rational;
pub mod stability;
pub mod sweeps;
pub mod vhs;

#[cfg(feature = "cli")]
pub mod cli;

pub use error::{Error, Result};
pub use invariants::{DegreeRange, DegreeWindow, HiggsType, MinimaType, Surface, TripleSide, TripleType};
pub use rational::Rational;
