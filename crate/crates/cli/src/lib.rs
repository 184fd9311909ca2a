//! Command implementations and the batch harness behind the `qautm` binary.

pub mod batch;
pub mod fixtures;
pub mod row;

use thiserror::Error;

pub use batch::{partition, run_batch, Partition, TableKind};
pub use fixtures::{read_fixtures, FixtureRow};
pub use row::{evaluate, AxiomOutcome, ResultRow, RunConfig, TSV_HEADER};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Matroid(#[from] qautm::matroid::MatroidError),
    #[error(transparent)]
    Quantum(#[from] qautm::quantum::QuantumError),
    #[error(transparent)]
    Groebner(#[from] qautm::groebner::GbError),
    #[error(transparent)]
    StrongMap(#[from] qautm::strong_maps::StrongMapError),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    /// `2` for bad input, `3` when two computations that must agree do not.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Inconsistent(_) => 3,
            _ => 2,
        }
    }

    pub fn io(path: impl AsRef<std::path::Path>, source: std::io::Error) -> CliError {
        CliError::Io {
            path: path.as_ref().display().to_string(),
            source,
        }
    }
}
