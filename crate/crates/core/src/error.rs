use thiserror::Error;

/// Errors raised while building or checking stable Kneser structures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("malformed set: {0}")]
    MalformedSet(String),

    #[error("set {0} is not s-stable")]
    Unstable(String),

    #[error("inadmissible move at index {index} for class {class}: the shrinking gap has fewer than s blanks")]
    InadmissibleMove { class: String, index: usize },

    #[error("instance too large: {count} vertices exceeds the limit of {limit}")]
    TooLarge { count: u64, limit: u64 },

    #[error("friend-class graph is disconnected: {unreached} classes unreachable from the root")]
    Disconnected { unreached: usize },

    #[error("class {class} has tree degree {degree} exceeding its order {order}")]
    DegreeBound { class: String, degree: usize, order: u32 },

    #[error("witness {witness} does not lie in the orbit of class {class}")]
    WitnessMismatch { class: String, witness: String },

    #[error("slot {slot} of class {class} was already exchanged")]
    SlotOccupied { class: String, slot: u64 },

    #[error("cycle structure invariant broken: {0}")]
    BrokenCycle(String),

    #[error("not Hamiltonian: {reason}")]
    NotHamiltonian { reason: String },

    #[error("search budget of {budget} expansions exhausted")]
    BudgetExceeded { budget: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;
