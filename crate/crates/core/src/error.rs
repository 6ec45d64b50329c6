use thiserror::Error;

use crate::seifert::ValidationReport;

#[derive(Debug, Error)]
pub enum Error {
    /// Input does not even have the shape of a partitioned square matrix,
    /// diagram, or move record. Distinct from a mathematical invariant failing.
    #[error("malformed input: {0}")]
    Structure(String),

    #[error("not a boundary link Seifert matrix: {0}")]
    InvalidMatrix(ValidationReport),

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("congruence block {block} is not unimodular (det = {det})")]
    NotUnimodular { block: usize, det: String },

    #[error("illegal enlargement signs ({eps}, {eps_prime}); must be (1,0) or (0,1)")]
    IllegalEps { eps: i64, eps_prime: i64 },

    #[error("clasp sign {0} is not 0 or 1")]
    IllegalClaspSign(i64),

    #[error("no S-reduction pattern at component {component}, offset {offset}")]
    PatternMismatch { component: usize, offset: usize },

    #[error("move {index} failed to replay")]
    Replay {
        index: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("witness does not replay: {0}")]
    Witness(String),

    #[error("component {component} has odd block size {size}")]
    OddBlock { component: usize, size: usize },

    #[error("unknown component label {0:?}")]
    UnknownComponent(String),

    #[error("component index {index} out of range for {count} components")]
    ComponentOutOfRange { index: usize, count: usize },

    #[error("{0}")]
    Diagram(String),

    #[error("depth {depth} too small (need at least {needed})")]
    Depth { depth: usize, needed: usize },

    #[error("letter {letter} is outside the generators x1..x{m}")]
    Letter { letter: i64, m: usize },

    #[error("closure has linking number {0}, expected 0")]
    NonzeroLinking(String),

    #[error("missing derived diagram for pair {pair}")]
    MissingDerived { pair: usize },

    #[error("catalog entry {name:?}: {detail}")]
    Catalog { name: String, detail: String },

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
