use std::fmt;

use thiserror::Error;

/// The density-matrix invariant a candidate operator failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Invariant {
    Hermiticity,
    Trace,
    Positivity,
}

impl fmt::Display for Invariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Invariant::Hermiticity => "hermiticity",
            Invariant::Trace => "trace",
            Invariant::Positivity => "positivity",
        })
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid subsystem dimensions: {0}")]
    InvalidDims(String),

    #[error("matrix shape mismatch: expected side {expected}, found {found}")]
    ShapeMismatch { expected: usize, found: usize },

    #[error("operator side {side} exceeds the maximum of {max}")]
    SideTooLarge { side: usize, max: usize },

    #[error("invalid subsystem selection: {0}")]
    InvalidSelection(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("not a density matrix: {invariant} violated by {magnitude:e}")]
    Validation { invariant: Invariant, magnitude: f64 },

    #[error("state vector not normalized (norm = {norm})")]
    NotNormalized { norm: f64 },

    #[error("parameter {name} = {value} out of range")]
    ParameterOutOfRange { name: &'static str, value: f64 },

    #[error("expected {expected} subsystems, found {found}")]
    WrongSubsystemCount { expected: usize, found: usize },

    #[error("rank {rank} invalid for side {side}")]
    InvalidRank { rank: usize, side: usize },

    #[error("numerical integrity: {quantity} = {value:e} is below -{tolerance:e}")]
    NumericalIntegrity {
        quantity: String,
        value: f64,
        tolerance: f64,
    },

    #[error("unknown state family `{0}`")]
    UnknownFamily(String),

    #[error("family {family} takes {expected} parameters, got {found}")]
    ParamCount {
        family: &'static str,
        expected: String,
        found: usize,
    },

    #[error("sample count must be at least 1")]
    NoSamples,

    #[error("state file: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
