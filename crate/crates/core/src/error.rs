use thiserror::Error;

use crate::value::Label;

/// Errors raised by constructors and operations of this crate.
///
/// Text-format problems are reported separately as [`crate::format::Diagnostic`],
/// which carries a source position.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("membership ({p}, {n}) is outside [0,1] x [-1,0]")]
    ValueOutOfRange { p: f64, n: f64 },

    #[error("{name} = {value} is outside {range}")]
    ParameterOutOfRange {
        name: &'static str,
        value: f64,
        range: &'static str,
    },

    #[error("invalid label {0:?}")]
    InvalidLabel(String),

    #[error("duplicate vertex label `{0}`")]
    DuplicateVertex(Label),

    #[error("duplicate edge label `{0}`")]
    DuplicateEdge(Label),

    #[error("{context}: expected {expected} entries, found {found}")]
    DimensionMismatch {
        context: String,
        expected: usize,
        found: usize,
    },

    #[error("edge `{0}` has empty support")]
    TrivialEdge(Label),

    #[error("vertex `{0}` lies in the support of no edge")]
    UncoveredVertex(Label),

    #[error("edge `{0}` has no vertices")]
    EmptyEdge(Label),

    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("unknown edge `{0}`")]
    UnknownEdge(String),

    #[error("operation needs a nonempty universe")]
    EmptyUniverse,

    #[error("operation needs at least one edge")]
    Edgeless,

    #[error("vertex `{0}` lies in no edge, its dual edge would be empty")]
    IsolatedVertex(Label),

    #[error("{what}: {actual} exceeds the configured bound {bound}")]
    Capacity {
        what: &'static str,
        bound: usize,
        actual: usize,
    },

    #[error("structural invariant violated: {0}")]
    Structural(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
