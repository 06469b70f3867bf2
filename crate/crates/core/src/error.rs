use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("duplicate element `{0}`")]
    DuplicateElement(String),
    #[error("lattice has no elements")]
    EmptyLattice,
    #[error("covers contain a cycle through `{0}` and `{1}` (antisymmetry violated)")]
    Cycle(String, String),
    #[error("not a lattice: `{0}` and `{1}` have no unique {2}")]
    NotALattice(String, String, &'static str),
    #[error("lattice would have {count} elements, above the cap of {cap}")]
    SizeLimit { count: usize, cap: usize },
    #[error("the empty interval has no endpoints")]
    EmptyInterval,
    #[error("operands live over different lattices")]
    LatticeMismatch,
    #[error("membership must be total: expected {expected} grades, got {got}")]
    NotTotal { expected: usize, got: usize },
    #[error("invalid cut family: {0}")]
    InvalidFamily(String),
    #[error("invalid grade `{0}`: expected a rational in [0,1]")]
    InvalidGrade(String),
    #[error("invalid grade set: {0}")]
    GradeSetInvalid(String),
    #[error("not a fuzzy interval: cut at {0} is not a closed interval")]
    NotAFuzzyInterval(String),
    #[error("unknown standard lattice `{0}`")]
    UnknownFixture(String),
    #[error("malformed input: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
