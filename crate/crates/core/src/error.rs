use alloc::string::String;
use alloc::vec::Vec;

use crate::exact::Rational;

/// Errors raised by constructions and verifications.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("spectrum does not split over Q: rational roots account for {rational_multiplicity} of {dim}")]
    NonSplitSpectrum { rational_multiplicity: usize, dim: usize },
    #[error("Cartan element {cartan_index} is not diagonalizable (eigenvalue {eigenvalue})")]
    NotDiagonalizable { cartan_index: usize, eigenvalue: Rational },
    #[error("{axiom} fails on basis tuple {indices:?}")]
    AxiomViolation { axiom: &'static str, indices: Vec<usize> },
    #[error("structure table has no unit or the declared unit is not two-sided")]
    MissingUnit,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("element {index} of the proposed central subspace is not central")]
    NotCentral { index: usize },
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("operation requires {expected}")]
    WrongAlgebra { expected: &'static str },
    #[error("kind mismatch: table is {got}, expected {expected}")]
    KindMismatch { expected: &'static str, got: &'static str },
    #[error("cover map is not a homomorphism: {0}")]
    NotHomomorphism(String),
    #[error("not a 3-grading: {0}")]
    NotThreeGraded(String),
    #[error("element is not an idempotent")]
    NotIdempotent,
    #[error("multiplication by the idempotent has eigenvalue {0} outside {{0, 1/2, 1}}")]
    UnexpectedEigenvalue(Rational),
    #[error("the proposed unit fails on basis vector {0}")]
    UnitFailure(usize),
    #[error("super Jacobi identity fails on basis triple {0:?}")]
    JacobiFailure([usize; 3]),
    #[error("algebra is not perfect (derived dimension {derived} of {dim})")]
    NotPerfect { derived: usize, dim: usize },
    #[error("subspace is not closed under the product: {0}")]
    ClosureFailure(String),
    #[error("Cartan elements {0} and {1} do not commute")]
    CartanNotCommuting(usize, usize),
    #[error("element is not parity-homogeneous")]
    NotHomogeneous,
}
