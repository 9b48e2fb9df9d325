//! Exact lattice-ordered operator algebra on `c₀₀(Λ)`.
//!
//! Vectors are finitely supported rational sequences indexed by atom
//! labels; operators are `c·I + M` with `M` a finitely supported matrix.
//! On top of that the crate provides the induced operator norm, finite
//! truncations, recovery of positive automorphisms in the form
//! `T ↦ P D T D⁻¹ P⁻¹`, biorthogonal bases for finite function families,
//! and the order duals of lexicographically ordered spaces. All arithmetic
//! is exact.

pub mod automorphism;
pub mod basis;
pub mod label;
pub mod lex;
pub mod linalg;
pub mod operator;
pub mod scalar;
pub mod vector;

pub use automorphism::{
    factor_automorphism, factor_rank_one, same_inner, AutomorphismImages, FactorError, PermDiag,
    RankOneFactors,
};
pub use basis::{delta_basis, BasisError, DeltaBasis, FunctionFamily};
pub use label::AtomLabel;
pub use lex::{LexError, LexFunctional, LexVector};
pub use operator::{Operator, OperatorError};
pub use scalar::{format_scalar, parse_scalar, Scalar};
pub use vector::FinSuppVector;
