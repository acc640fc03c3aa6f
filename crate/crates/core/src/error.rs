use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("complete graph needs at least one vertex")]
    EmptyCompleteGraph,
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("edge {0} {1} listed twice")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("cannot enumerate graphs on {n} vertices (cap is {cap})")]
    AboveEnumerationCap { n: usize, cap: usize },
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum PosetError {
    #[error("element {element} out of range for poset on {m} elements")]
    ElementOutOfRange { element: usize, m: usize },
    #[error("order relation has a cycle through {0} and {1}")]
    Cycle(usize, usize),
    #[error("relation is not a partial order: {0}")]
    Invalid(crate::poset::Violation),
    #[error("density {0} is not a probability")]
    BadDensity(f64),
}

/// A malformed input file. Line numbers are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, message: impl Into<String>) -> Self {
        ParseError { line, message: message.into() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GameError {
    #[error("move {0} is not legal in this position")]
    IllegalMove(usize),
    #[error("set {set} lists element {element} outside universe of size {universe}")]
    ElementOutsideUniverse { set: usize, element: usize, universe: usize },
    #[error("position is terminal")]
    Terminal,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    /// The state budget ran out before the root was decided.
    #[error("undecided: state budget of {limit} exhausted")]
    BudgetExhausted { limit: u64 },
    #[error(transparent)]
    Game(#[from] GameError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("max vertex count {n} above enumeration cap {cap}")]
    AboveCap { n: usize, cap: usize },
    #[error("state budget must be positive")]
    ZeroBudget,
}
