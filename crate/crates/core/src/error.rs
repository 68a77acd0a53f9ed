//! Error types shared across the crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    /// An orbit or element enumeration went past the configured point budget.
    #[error("oversize: {what} needs more than {budget} points")]
    Oversize { what: String, budget: u64 },

    /// Coset enumeration hit the coset budget before the table closed.
    /// The group may be larger than the budget, or the presentation may
    /// define an infinite group.
    #[error("coset enumeration exceeded {max_cosets} cosets for {label}")]
    Exceeded { label: String, max_cosets: u64 },

    #[error("operation requires a regular ambient group")]
    NotRegular,

    #[error("subgroup is not normal in the ambient group: {context}")]
    NotNormal { context: String },

    #[error("subgroup is not abelian (witness pair: {witness})")]
    NotAbelian { witness: String },

    #[error("group of order {order} is not a {p}-group")]
    NotPGroup { order: u64, p: u64 },

    #[error("coset table is not closed")]
    NotClosed,

    #[error("presentation {label} realized order {got}, expected {expected}")]
    OrderMismatch {
        label: String,
        got: u64,
        expected: u64,
    },

    /// A generator assignment failed to respect a relator.
    #[error("relator {relator} has non-identity image under the assignment")]
    RelatorViolation { relator: String },

    /// The computed mu subgroup failed its centrality invariant. This is an
    /// internal consistency failure, never an expected outcome.
    #[error("mu(G) is not central in nu(G): witness {witness}")]
    Centrality { witness: String },

    #[error("cross-check {check_id} failed: {detail}")]
    CheckFailed { check_id: String, detail: String },

    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
}

impl Error {
    pub fn oversize(what: impl Into<String>, budget: u64) -> Self {
        Error::Oversize {
            what: what.into(),
            budget,
        }
    }

    /// True for the two budget-breach variants that the harness converts
    /// into a `skipped(oversize)` verdict instead of a failure.
    pub fn is_budget_breach(&self) -> bool {
        matches!(self, Error::Oversize { .. } | Error::Exceeded { .. })
    }
}
