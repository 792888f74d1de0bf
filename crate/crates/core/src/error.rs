use thiserror::Error;

use crate::poset::NotALattice;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate element name `{0}`")]
    DuplicateName(String),
    #[error("unknown element name `{0}`")]
    UnknownName(String),
    #[error("order relation has a cycle through `{0}` and `{1}`")]
    CycleDetected(String, String),
    #[error("carrier must be non-empty")]
    EmptyCarrier,
    #[error("carrier of {size} elements exceeds the limit of {limit}")]
    CarrierTooLarge { size: usize, limit: usize },
    #[error("relation is not a partial order: {0}")]
    NotAPartialOrder(String),
    #[error(transparent)]
    NotALattice(#[from] NotALattice),
    #[error("structure has no greatest element")]
    NoTop,
    #[error("operation `{name}` is undefined at ({a}, {b})")]
    PartialTable { name: String, a: String, b: String },
    #[error("table size {found} does not match carrier size {expected}")]
    TableSize { expected: usize, found: usize },
    #[error("table cell names element {0} outside the carrier")]
    CellOutOfRange(usize),
    #[error("structure does not pass the relatively residuated axioms")]
    NotVerifiedRrl,
    #[error("structure does not pass the operator residuation axioms")]
    NotVerifiedOperatorPoset,
    #[error("hypothesis `{hypothesis}` fails at {witness:?}")]
    PreconditionFailed {
        hypothesis: &'static str,
        witness: Vec<usize>,
    },
    #[error("exhaustive subset scan requested on {size} elements (limit {limit})")]
    SubsetBudgetExceeded { size: usize, limit: usize },
    #[error("{what}: size {size} exceeds budget {limit}")]
    BudgetExceeded {
        what: &'static str,
        size: usize,
        limit: usize,
    },
    #[error("algebra declares no constant `{0}`")]
    MissingConstant(String),
    #[error("algebra has no operation `{0}`")]
    MissingOperation(String),
    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("line {line}, column {column}: unknown element `{name}`")]
    UnknownElement {
        line: usize,
        column: usize,
        name: String,
    },
    #[error("line {line}: table row has {found} cells, expected {expected}")]
    RaggedTable {
        line: usize,
        expected: usize,
        found: usize,
    },
}
