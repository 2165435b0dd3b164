use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("shape error: {0}")]
    Shape(String),

    #[error("input is not a relative Heffter array: {0}")]
    NotHeffter(String),

    #[error("invalid transversal: {0}")]
    Transversal(String),

    #[error("no valid filling after {attempts} attempts (seed {seed})")]
    Exhausted { attempts: usize, seed: u64 },

    #[error("search budget exhausted: {0}")]
    BudgetExhausted(String),

    #[error("no ordering exists: {0}")]
    NoOrdering(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("ordering is not simple: {0}")]
    Collision(String),

    #[error("internal inconsistency: {0}")]
    Inconsistency(String),

    #[error("degenerate circuit: {0}")]
    DegenerateCircuit(String),

    #[error("host graphs differ: {0}")]
    HostMismatch(String),

    #[error("orderings are not compatible: {0}")]
    Incompatible(String),

    #[error("face coloring failed: {0}")]
    Coloring(String),

    #[error("not applicable: {0}")]
    NotApplicable(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
