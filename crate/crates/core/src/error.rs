use thiserror::Error;

use crate::root_system::SimpleType;

pub type Result<T> = std::result::Result<T, Error>;

/// Broad category of an [`Error`], used by front ends to pick exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// Malformed or out-of-range input.
    Input,
    /// Input is well formed but violates a hypothesis of the formula asked for.
    Domain,
    /// A computation guard was exceeded.
    Resource,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("type {letter}{rank} does not exist (rank constraint: {constraint})")]
    InvalidRank {
        letter: char,
        rank: usize,
        constraint: &'static str,
    },
    #[error("unknown Dynkin type letter {0:?}")]
    UnknownLetter(char),
    #[error("cannot parse {0:?} as a simple type such as \"E6\" or \"B4\"")]
    BadTypeName(String),
    #[error("node {node} is out of range for a rank-{rank} root system (nodes are 1..={rank})")]
    NodeOutOfRange { node: usize, rank: usize },
    #[error("weight has {got} coordinates, expected {expected}")]
    WeightLength { expected: usize, got: usize },
    #[error("the crossed-node set must be non-empty: Σ = ∅ gives g itself, not a proper parabolic")]
    EmptySigma,
    #[error("parabolic is of type {parabolic} but the root system is {root_system}")]
    TypeMismatch {
        parabolic: SimpleType,
        root_system: SimpleType,
    },
    #[error("weight {0} is not dominant for G (some fundamental-weight coefficient is negative)")]
    NotDominant(String),
    #[error(
        "weight {0} is not dominant for the parabolic: a coefficient off the crossed nodes is negative, so E_λ is not defined"
    )]
    NotParabolicDominant(String),
    #[error(
        "weight {0} is not dominant for G: by Bott–Borel–Weil H⁰(X, E_λ) = 0, so J(E_λ, −K_X) is undefined"
    )]
    VanishingSections(String),
    #[error("λ = 0 gives the trivial bundle; J(E_λ, −K_X) requires a nontrivial dominant weight")]
    TrivialWeight,
    #[error("J is undefined when h⁰ ≤ rank (h⁰ = {h0}, rank = {rank}): E is trivial or not globally generated")]
    UndefinedJ { h0: String, rank: String },
    #[error("J(E, L) needs m ≥ 1, rank ≥ 1 and a nonzero degree of L")]
    DegenerateJInput,
    #[error("{simple_type}/P(α{node}) is not Hermitian symmetric: g/p is not irreducible (α{node} has coefficient {coefficient} in the highest root)")]
    NotHermitian {
        simple_type: SimpleType,
        node: usize,
        coefficient: String,
    },
    #[error("operation needs a maximal parabolic (one crossed node), got {0} crossed nodes")]
    NotMaximal(usize),
    #[error("Freudenthal guard exceeded: {0}")]
    GuardExceeded(String),
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::VanishingSections(_)
            | Error::TrivialWeight
            | Error::UndefinedJ { .. }
            | Error::NotHermitian { .. } => ErrorKind::Domain,
            Error::GuardExceeded(_) => ErrorKind::Resource,
            _ => ErrorKind::Input,
        }
    }
}
