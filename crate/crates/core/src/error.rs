use std::fmt;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// A structural defect found by [`crate::graph::validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    DuplicateVertex(String),
    UndeclaredVertex { src: String, dst: String, missing: String },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::DuplicateVertex(name) => write!(f, "duplicate vertex `{name}`"),
            Violation::UndeclaredVertex { src, dst, missing } => {
                write!(f, "edge pair ({src} -> {dst}) names undeclared vertex `{missing}`")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("invalid vertex name `{0}` (expected letters, digits or `_`)")]
    InvalidVertexName(String),

    #[error("invalid graph: {}", join(.0))]
    InvalidGraph(Vec<Violation>),

    #[error("graded K-theory requires a graph without sinks; sinks: {}", .0.join(", "))]
    HasSinks(Vec<String>),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("{0}")]
    Input(String),
}

impl Error {
    /// True for violations of an operation's precondition (as opposed to
    /// malformed input). The CLI maps these to exit status 2.
    pub fn is_precondition(&self) -> bool {
        matches!(self, Error::HasSinks(_))
    }

    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse { line, message: message.into() }
    }
}

fn join(violations: &[Violation]) -> String {
    violations.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; ")
}
