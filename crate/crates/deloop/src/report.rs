//! Check reports and the crate-wide error type.
//!
//! Validators distinguish two failure modes: *structural* errors (dangling
//! ids, missing table entries) abort with [`Error::Structure`], while *law*
//! violations are reported as data in a [`Report`] carrying the first
//! violated law together with the witnessing cell ids, in a fixed total
//! order on witnesses so reports are deterministic.

use serde::Serialize;

pub const SCHEMA_VERSION: u32 = 1;

/// The first violated law of a checked structure, with named witness cells.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub law: String,
    /// (role, cell id) pairs, e.g. `("f", "s0")`.
    pub cells: Vec<(String, String)>,
}

impl Witness {
    pub fn new(law: &str, cells: Vec<(&str, String)>) -> Self {
        Witness {
            law: law.to_string(),
            cells: cells.into_iter().map(|(r, c)| (r.to_string(), c)).collect(),
        }
    }
}

/// Outcome of a law-level validation run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Report {
    Pass,
    Fail { witness: Witness },
}

impl Report {
    pub fn fail(law: &str, cells: Vec<(&str, String)>) -> Self {
        Report::Fail { witness: Witness::new(law, cells) }
    }

    pub fn is_pass(&self) -> bool {
        matches!(self, Report::Pass)
    }

    /// Sequence two checks, keeping the first failure.
    pub fn and_then(self, next: impl FnOnce() -> Report) -> Report {
        match self {
            Report::Pass => next(),
            fail => fail,
        }
    }

    /// Turn a failure into an [`Error::Invalid`], for eager constructors.
    pub fn into_result(self) -> Result<(), Error> {
        match self {
            Report::Pass => Ok(()),
            Report::Fail { witness } => Err(Error::Invalid(format!(
                "{} [{}]",
                witness.law,
                witness
                    .cells
                    .iter()
                    .map(|(r, c)| format!("{r}={c}"))
                    .collect::<Vec<_>>()
                    .join(", ")
            ))),
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("structural error: {0}")]
    Structure(String),
    #[error("validation failed: {0}")]
    Invalid(String),
    #[error("coherence check failed: {0}")]
    Coherence(String),
    #[error("size guard: {0}")]
    SizeGuard(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
