//! Noncommutative Buchberger completion over the free algebra, with an Aho–Corasick
//! reducer and explicit budgets.

mod automaton;
mod engine;
mod obstruction;
mod serialize;

use thiserror::Error;

pub use automaton::DivisibilityAutomaton;
pub use engine::{
    buchberger, gb_degree, stabilize, AbortReason, EngineConfig, GbStats, GbStatus, GroebnerBasis,
    Stabilization, WordOrder,
};
pub use obstruction::{find_obstructions, s_polynomial, Obstruction};
pub use serialize::{GbFile, GbHeader, ParseGbError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GbError {
    #[error("the zero polynomial has no leading term")]
    ZeroPolynomial,
    #[error("obstruction does not match the leading words")]
    InvalidObstruction,
    #[error("polynomials live over different variable sets")]
    VariableUniverseMismatch,
    #[error("no degree bound, iteration cap or time budget set, and unbounded runs not enabled")]
    NoBound,
}

/// Builds the reducer for a basis: one pattern per leading word, in basis order.
pub fn build_reducer<C: crate::ncpoly::Coefficient>(
    basis: &[crate::ncpoly::NcPolynomial<C>],
) -> DivisibilityAutomaton {
    let n = basis.first().map_or(1, |g| g.universe() as usize);
    DivisibilityAutomaton::from_patterns(
        n * n,
        basis
            .iter()
            .map(|g| (!g.is_zero()).then(|| g.lt().clone()))
            .collect(),
    )
}
