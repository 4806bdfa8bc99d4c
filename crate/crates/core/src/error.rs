use thiserror::Error;

/// Errors produced anywhere in the crate.
///
/// Variants carry the offending element labels so diagnostics can name them.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty input: a lattice needs at least one element")]
    EmptyInput,

    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),

    #[error("unknown label `{0}`")]
    UnknownLabel(String),

    #[error("cover relation is cyclic through `{0}`")]
    CyclicCovers(String),

    #[error("not a lattice: `{0}` and `{1}` have no unique {2}")]
    NotALattice(String, String, &'static str),

    #[error("lattice is not atomic: `{0}` is not the join of the atoms below it")]
    NotAtomic(String),

    #[error("`{0}` and `{1}` are not comparable")]
    NotComparable(String, String),

    #[error("the least element `{0}` cannot be part of a building set")]
    ContainsBottom(String),

    #[error("`{0}` is the least element")]
    BottomElement(String),

    #[error("not a building set: the factors of `{0}` do not decompose its lower interval")]
    NotABuildingSet(String),

    #[error("`{0}` is not a member of the building set")]
    NotInBuildingSet(String),

    #[error("{what} has size {size}, above the limit of {limit}")]
    TooLarge {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    #[error("lattice is not graded: maximal chains below `{0}` have different lengths")]
    NotGraded(String),

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("out of range: {0}")]
    OutOfRange(String),

    #[error("set {{{}}} is not nested", .0.join(", "))]
    NotNested(Vec<String>),

    #[error("generator #{0} is not homogeneous")]
    NonHomogeneousGenerator(usize),

    #[error("polynomial #{0} is not monic")]
    NotMonic(usize),

    #[error("cone {{{}}} is not in the fan", .0.join(", "))]
    ConeNotInFan(Vec<String>),

    #[error("ray `{0}` is not in the relative interior of the cone")]
    RayNotInterior(String),

    #[error("order is not admissible: `{0}` precedes `{1}` but lies below it")]
    OrderNotAdmissible(String, String),

    #[error("internal consistency failure: face {0} is missing")]
    FaceMissing(String),

    #[error("computation budget of {0} steps exhausted")]
    BudgetExhausted(usize),

    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("validation error: {0}")]
    Validation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
