use thiserror::Error;

/// Failures while building or validating a lattice.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("lattice must have at least one element")]
    InvalidSize,
    #[error("{size} elements exceeds the size limit of {limit}")]
    TooLarge { size: usize, limit: usize },
    #[error("duplicate element name `{0}`")]
    DuplicateName(String),
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("not a partial order: cycle through `{0}`")]
    NotAPoset(String),
    #[error("edge `{lower}` -> `{upper}` is not a cover (implied by a longer path)")]
    RedundantCover { lower: String, upper: String },
    #[error("duplicate cover `{lower}` -> `{upper}`")]
    DuplicateCover { lower: String, upper: String },
    #[error("no global bottom or top element")]
    NotBounded,
    #[error("`{a}` and `{b}` have no {bound}")]
    NotALattice {
        a: String,
        b: String,
        bound: &'static str,
    },
    #[error("distributivity fails at ({a}, {b}, {c}): {a} ∧ ({b} ∨ {c}) ≠ ({a} ∧ {b}) ∨ ({a} ∧ {c})")]
    NotDistributive { a: String, b: String, c: String },
    #[error("{0} is not closed under join and meet")]
    NotASublattice(String),
    #[error("lattice is not a Boolean hypercube")]
    NotHypercube,
    #[error("lattice is not a chain")]
    NotAChain,
    #[error("lattice has fewer than two atoms")]
    NotEnoughAtoms,
}

/// Failures in preorder construction and domain handling.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PreorderError {
    #[error("preorder covers {got} elements, lattice has {expected}")]
    CarrierMismatch { expected: usize, got: usize },
    #[error("preorder must have exactly one top element, found {0}")]
    NotTopped(usize),
    #[error("element `{0}` appears more than once")]
    Repeated(String),
    #[error("element `{0}` is missing")]
    Missing(String),
    #[error("relation is not S-consistent: cycle through element {0}")]
    NotConsistent(usize),
    #[error("enumeration over {size} elements exceeds the cap of {cap}")]
    TooLarge { size: usize, cap: usize },
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

/// Failures in rule construction and evaluation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RuleError {
    #[error("arity mismatch: expected {expected} voters, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("voter {voter} cast element {ballot}, which is outside their ballot space")]
    BallotOutOfSpace { voter: usize, ballot: usize },
    #[error("voter {voter}'s ballot space lists element {ballot} twice")]
    DuplicateBallot { voter: usize, ballot: usize },
    #[error("voter {0} has an empty ballot space")]
    EmptyBallotSpace(usize),
    #[error("corner profile needs ⊥/⊤ in voter {0}'s ballot space")]
    CornerNotInBallotSpace(usize),
    #[error("ballot leaf refers to voter {voter} but n = {n}")]
    BadLeafIndex { voter: usize, n: usize },
    #[error("table has {got} entries, expected {expected}")]
    TableSize { expected: usize, got: usize },
    #[error("ballot space product {size} exceeds the cap of {cap}")]
    TooLarge { size: u128, cap: u128 },
    #[error("malformed term tree: {0}")]
    MalformedTree(String),
    #[error("variable `{0}` is not bound")]
    UnboundVariable(String),
    #[error("element id {0} out of range")]
    BadElement(usize),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

/// Failures while running a verification.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("search space of {size} evaluations exceeds the cap of {cap}")]
    TooLarge { size: u128, cap: u128 },
    #[error("no suitable sublattice: {0}")]
    NoSuitableSublattice(String),
    #[error("domain for voter {voter} contains a preorder whose top is outside the ballot space")]
    TopOutsideBallots { voter: usize },
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("voter {voter} has no admissible preference")]
    EmptyDomain { voter: usize },
    #[error("domain has {got} voters, rule has {expected}")]
    ArityMismatch { expected: usize, got: usize },
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Preorder(#[from] PreorderError),
    #[error(transparent)]
    Rule(#[from] RuleError),
}

/// Failures while reading or writing the JSON file formats.
#[derive(Debug, Error)]
pub enum FormatError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("field `{field}`: {msg}")]
    Field { field: String, msg: String },
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Preorder(#[from] PreorderError),
    #[error(transparent)]
    Rule(#[from] RuleError),
}

impl FormatError {
    pub(crate) fn field(field: impl Into<String>, msg: impl Into<String>) -> Self {
        FormatError::Field {
            field: field.into(),
            msg: msg.into(),
        }
    }
}
