use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::evidence::{Evidence, EvidenceVar};
use crate::kernel::CheckReport;

/// Stable, machine-readable error codes shared by the kernel, the parsers and the service.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ErrorCode {
    ArityMismatch,
    ActorMismatch,
    EvidenceShapeMismatch,
    ClaimMismatch,
    ContextError,
    NotAnAssumption,
    FreshnessViolation,
    UnknownTrustEdge,
    CaptureError,
    ConclusionMismatch,
    InvalidTree,
    WeightOutOfRange,
    ParseError,
}

impl fmt::Display for ErrorCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeightError {
    #[error("weight {0} is outside [0, 1]")]
    OutOfRange(String),
    #[error("malformed weight `{0}`")]
    Malformed(String),
}

/// Raised when substitution would capture a free variable of the substituted value.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("substituting for `{var}` would capture `{binder}`")]
pub struct CaptureError {
    pub var: EvidenceVar,
    pub binder: EvidenceVar,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{judgement} is not an assumption of the context")]
pub struct NotAnAssumption {
    pub judgement: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NormalizeError {
    #[error("normalisation ran out of fuel")]
    FuelExhausted { last: Evidence },
    #[error(transparent)]
    Capture(#[from] CaptureError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TrustError {
    #[error("no edge {truster} -> {trusted} in trust relation `{relation}`")]
    UnknownTrustEdge {
        relation: String,
        truster: String,
        trusted: String,
    },
    #[error("path is broken between {from} and {to}")]
    BrokenPath { from: String, to: String },
    #[error("edge {truster} -> {trusted} is declared twice in `{relation}`")]
    DuplicateEdge {
        relation: String,
        truster: String,
        trusted: String,
    },
    #[error("self-trust of {actor} is implicitly 1 and cannot be weighted {weight}")]
    WeightedSelfEdge { actor: String, weight: String },
}

/// A parse failure with a 1-based source location.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{line}:{column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
    pub code: ErrorCode,
}

impl ParseError {
    pub fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            column,
            message: message.into(),
            code: ErrorCode::ParseError,
        }
    }

    pub fn with_code(mut self, code: ErrorCode) -> Self {
        self.code = code;
        self
    }
}

/// Why a rule application or a proof tree was rejected.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum KernelError {
    #[error("{rule} expects {expected} premise(s), got {found}")]
    ArityMismatch {
        rule: String,
        expected: usize,
        found: usize,
    },
    #[error("premises are held by different actors: {0}")]
    ActorMismatch(String),
    #[error("evidence has the wrong shape: {0}")]
    EvidenceShapeMismatch(String),
    #[error("claim has the wrong shape: {0}")]
    ClaimMismatch(String),
    #[error("context mismatch: {0}")]
    ContextError(String),
    #[error(transparent)]
    NotAnAssumption(#[from] NotAnAssumption),
    #[error("freshness side-condition violated: {0}")]
    FreshnessViolation(String),
    #[error(transparent)]
    UnknownTrustEdge(TrustError),
    #[error(transparent)]
    Capture(#[from] CaptureError),
    #[error("stated conclusion differs from the computed one: {0}")]
    ConclusionMismatch(String),
    #[error("proof tree does not check ({} violation(s))", .0.violations.len())]
    InvalidTree(Box<CheckReport>),
}

impl KernelError {
    pub fn code(&self) -> ErrorCode {
        match self {
            KernelError::ArityMismatch { .. } => ErrorCode::ArityMismatch,
            KernelError::ActorMismatch(_) => ErrorCode::ActorMismatch,
            KernelError::EvidenceShapeMismatch(_) => ErrorCode::EvidenceShapeMismatch,
            KernelError::ClaimMismatch(_) => ErrorCode::ClaimMismatch,
            KernelError::ContextError(_) => ErrorCode::ContextError,
            KernelError::NotAnAssumption(_) => ErrorCode::NotAnAssumption,
            KernelError::FreshnessViolation(_) => ErrorCode::FreshnessViolation,
            KernelError::UnknownTrustEdge(_) => ErrorCode::UnknownTrustEdge,
            KernelError::Capture(_) => ErrorCode::CaptureError,
            KernelError::ConclusionMismatch(_) => ErrorCode::ConclusionMismatch,
            KernelError::InvalidTree(_) => ErrorCode::InvalidTree,
        }
    }
}

impl From<TrustError> for KernelError {
    fn from(e: TrustError) -> Self {
        KernelError::UnknownTrustEdge(e)
    }
}
