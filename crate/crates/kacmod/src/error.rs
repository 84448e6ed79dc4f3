//! Error and falsification-diagnostic types.

use serde::Serialize;
use thiserror::Error;

use crate::weight::{IntegralWeight, OddRoot};

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid algebra gl({m}/{n}): {detail}")]
    InvalidAlgebra { m: usize, n: usize, detail: String },

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("shape mismatch: expected ({}, {}), got ({}, {})", expected.0, expected.1, got.0, got.1)]
    ShapeMismatch {
        expected: (usize, usize),
        got: (usize, usize),
    },

    #[error("weight {0} is not dominant")]
    NotDominant(IntegralWeight),

    #[error("({mu} + rho, {gamma}) != 0: not an atypical root of mu")]
    NotAtypicalRoot { mu: IntegralWeight, gamma: OddRoot },

    #[error("interval is empty: {lo} is not <= {hi} in the partial order")]
    NotComparable {
        lo: IntegralWeight,
        hi: IntegralWeight,
    },

    #[error("{what} cap exceeded: size {size} > cap {cap}")]
    CapExceeded {
        what: &'static str,
        size: u128,
        cap: usize,
    },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("window is not order-convex: dominant weight {missing} lies between window members but is absent")]
    NonConvexWindow { missing: IntegralWeight },

    #[error("matrix is not unitriangular: {0}")]
    NotUnitriangular(String),

    #[error("not a g0-character: {detail} (offending weight {weight})")]
    NotCharacter {
        weight: IntegralWeight,
        detail: String,
    },

    #[error("conjecture falsification candidate: {0}")]
    Falsification(Falsification),

    #[error("internal error: {0}")]
    Internal(String),
}

/// Evidence against the multiplicity conjecture (or against this
/// implementation of it). A counterexample is a first-class result, so the
/// offending data is carried in full.
#[derive(Debug, Clone, Serialize)]
pub struct Falsification {
    pub mu: IntegralWeight,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theta: Option<Vec<u8>>,
    pub detail: String,
}

impl std::fmt::Display for Falsification {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "mu = {}", self.mu)?;
        if let Some(theta) = &self.theta {
            let bits: Vec<String> = theta.iter().map(|b| b.to_string()).collect();
            write!(f, ", theta = ({})", bits.join(","))?;
        }
        write!(f, ": {}", self.detail)
    }
}

impl Error {
    pub fn falsification(
        mu: IntegralWeight,
        theta: Option<Vec<u8>>,
        detail: impl Into<String>,
    ) -> Self {
        Error::Falsification(Falsification {
            mu,
            theta,
            detail: detail.into(),
        })
    }

    /// True for errors that should be reported as falsification candidates
    /// rather than plain failures.
    pub fn is_falsification(&self) -> bool {
        matches!(self, Error::Falsification(_))
    }
}
