//! Exact Lie-theoretic invariants of irreducible homogeneous bundles on
//! compact Hermitian symmetric spaces `X = G/P(α_k)`, and the first-eigenvalue
//! bound `J(E_λ, −K_X)` built from them.
//!
//! All arithmetic is exact. Nodes follow Bourbaki numbering and are 1-based.

pub mod error;
pub mod invariants;
pub mod parabolic;
pub mod rational;
pub mod rep_dimension;
pub mod reproduce;
pub mod root_system;
pub mod text;
pub mod weight_search;

mod bigjson;

pub use error::{Error, ErrorKind, Result};
pub use invariants::{BundleCalculator, BundleReport, Family, HermitianSpace};
pub use parabolic::{LeviData, Parabolic};
pub use rational::Rational;
pub use root_system::{Letter, Root, RootSystem, SimpleType, Weight};
pub use weight_search::SearchOutcome;
