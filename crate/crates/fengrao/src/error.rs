use thiserror::Error;

/// Errors reported by semigroup constructions and computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generators must be coprime (their gcd is {gcd})")]
    NotCoprime { gcd: u64 },

    #[error("small-element set is not additively closed: {u} + {v} is missing")]
    NotClosed { u: u64, v: u64 },

    #[error("Apery base must be positive, got {base}")]
    InvalidBase { base: i64 },

    #[error("{x} is not a member of the semigroup")]
    NotMember { x: u64 },

    #[error("window {window} above {m} contains {found} members, need {needed}")]
    WindowTooSmall {
        m: u64,
        window: u64,
        found: u64,
        needed: u64,
    },

    #[error("invalid inductive descriptor: {reason}")]
    InvalidDescriptor { reason: String },

    #[error("{x} lies outside the fundamental interval [1, {multiplicity}]")]
    OutOfFundamentalInterval { x: u64, multiplicity: u64 },

    #[error("semigroup does not have the Arf property")]
    NotArf,

    #[error("member {m} is below the conductor {conductor}")]
    BelowConductor { m: u64, conductor: u64 },

    /// The pattern's leading partial sums are not all positive, so the
    /// finite admission check below the conductor would be incomplete.
    #[error("pattern rejected: partial coefficient sum through position {position} is {sum}, must be >= 1")]
    NotAdmissibleShape { position: usize, sum: i64 },

    #[error("arithmetic overflow while computing {context}")]
    Overflow { context: &'static str },
}

pub type Result<T> = std::result::Result<T, Error>;
