//! Lexicographically ordered spaces and their order-bounded functionals.
//!
//! `ℝⁿ_Lex` is totally ordered, so sup and inf are max and min. It is not
//! Archimedean: `0 ≤ t·e_k ≤ e₁` for every `t > 0` and `k ≥ 2`. Hence an
//! order-bounded functional must vanish on `e₂, …, eₙ`, and the order dual
//! is `ℝ` via `φ ↦ φ(e₁)`. The same mechanism kills the tail of a
//! lexicographic product `X ∘ Y`: order-bounded functionals are exactly
//! those of the form `φ + 0`.

use std::cmp::Ordering;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::scalar::{serde_text_vec, Scalar};
use crate::vector::FinSuppVector;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LexError {
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("lexicographic vectors need at least one coordinate")]
    Empty,
    #[error("functional is order bounded; no unboundedness witness exists")]
    IsBounded,
    #[error("functional is nonzero on the tail and cannot be order bounded")]
    NotOrderBounded,
    #[error("lattice operations need a totally ordered head")]
    NotTotallyOrdered,
}

fn check_dims(a: usize, b: usize) -> Result<(), LexError> {
    if a == b {
        Ok(())
    } else {
        Err(LexError::DimensionMismatch(a, b))
    }
}

/// An element of `ℝⁿ_Lex`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Coords", into = "Coords")]
pub struct LexVector(Vec<Scalar>);

#[derive(Serialize, Deserialize)]
#[serde(transparent)]
struct Coords(#[serde(with = "serde_text_vec")] Vec<Scalar>);

impl TryFrom<Coords> for LexVector {
    type Error = LexError;

    fn try_from(c: Coords) -> Result<Self, Self::Error> {
        LexVector::new(c.0)
    }
}

impl From<LexVector> for Coords {
    fn from(v: LexVector) -> Self {
        Coords(v.0)
    }
}

impl LexVector {
    pub fn new(coords: Vec<Scalar>) -> Result<Self, LexError> {
        if coords.is_empty() {
            return Err(LexError::Empty);
        }
        Ok(LexVector(coords))
    }

    pub fn zero(dim: usize) -> Self {
        LexVector(vec![Scalar::zero(); dim.max(1)])
    }

    /// `e_k`, one-based as in the usual notation.
    pub fn unit(dim: usize, k: usize) -> Self {
        let mut v = Self::zero(dim);
        v.0[k - 1] = Scalar::one();
        v
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn sub(&self, other: &Self) -> Result<Self, LexError> {
        check_dims(self.dim(), other.dim())?;
        Ok(LexVector(
            self.0.iter().zip(&other.0).map(|(x, y)| x - y).collect(),
        ))
    }

    /// The first differing coordinate decides.
    pub fn compare(&self, other: &Self) -> Result<Ordering, LexError> {
        check_dims(self.dim(), other.dim())?;
        Ok(self
            .0
            .iter()
            .zip(&other.0)
            .map(|(x, y)| x.cmp(y))
            .find(|o| o.is_ne())
            .unwrap_or(Ordering::Equal))
    }

    /// Zero, or first nonzero coordinate positive.
    pub fn is_positive(&self) -> bool {
        self.0
            .iter()
            .find(|x| !x.is_zero())
            .is_none_or(|x| x.is_positive())
    }

    pub fn sup(&self, other: &Self) -> Result<Self, LexError> {
        Ok(match self.compare(other)? {
            Ordering::Less => other.clone(),
            _ => self.clone(),
        })
    }

    pub fn inf(&self, other: &Self) -> Result<Self, LexError> {
        Ok(match self.compare(other)? {
            Ordering::Greater => other.clone(),
            _ => self.clone(),
        })
    }
}

/// A linear functional `x ↦ Σ cᵢxᵢ` on `ℝⁿ_Lex`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Coords", into = "Coords")]
pub struct LexFunctional(Vec<Scalar>);

impl TryFrom<Coords> for LexFunctional {
    type Error = LexError;

    fn try_from(c: Coords) -> Result<Self, Self::Error> {
        LexFunctional::new(c.0)
    }
}

impl From<LexFunctional> for Coords {
    fn from(v: LexFunctional) -> Self {
        Coords(v.0)
    }
}

impl LexFunctional {
    pub fn new(coeffs: Vec<Scalar>) -> Result<Self, LexError> {
        if coeffs.is_empty() {
            return Err(LexError::Empty);
        }
        Ok(LexFunctional(coeffs))
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn evaluate(&self, x: &LexVector) -> Result<Scalar, LexError> {
        check_dims(self.dim(), x.dim())?;
        Ok(self.0.iter().zip(x.coords()).map(|(c, v)| c * v).sum())
    }

    /// Order bounded iff it vanishes on `e₂, …, eₙ`.
    pub fn is_order_bounded(&self) -> bool {
        self.0[1..].iter().all(Zero::is_zero)
    }

    /// One-based index of the first nonzero coefficient after `e₁`.
    pub fn first_unbounded_index(&self) -> Option<usize> {
        self.0
            .iter()
            .skip(1)
            .position(|c| !c.is_zero())
            .map(|i| i + 2)
    }

    /// `φ(e₁)` for order-bounded `φ`; this is the image in the order dual `ℝ`.
    pub fn dual_image(&self) -> Option<Scalar> {
        self.is_order_bounded().then(|| self.0[0].clone())
    }

    /// Some `x` with `0 ≤ x ≤ e₁` and `|φ(x)| > bound`: `x = t·e_k` for the
    /// first `k ≥ 2` with `c_k ≠ 0` and `t = (bound + 1)/|c_k|`. Negative
    /// bounds are treated as zero.
    pub fn unboundedness_witness(&self, bound: &Scalar) -> Result<LexVector, LexError> {
        let k = self.first_unbounded_index().ok_or(LexError::IsBounded)? - 1;
        let ck = &self.0[k];
        let bound = if bound.is_negative() {
            Scalar::zero()
        } else {
            bound.clone()
        };
        let t = (bound + Scalar::one()) / ck.abs();
        let mut x = LexVector::zero(self.dim());
        x.0[k] = t;
        Ok(x)
    }
}

/// Head component of an element of `X ∘ c₀₀(Λ)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Head {
    /// `ℝⁿ_Lex`, totally ordered.
    Lex(LexVector),
    /// `ℝⁿ` with the coordinatewise order.
    Coordinatewise(Vec<Scalar>),
}

impl Head {
    fn coords(&self) -> &[Scalar] {
        match self {
            Head::Lex(v) => v.coords(),
            Head::Coordinatewise(v) => v,
        }
    }

    fn is_zero(&self) -> bool {
        self.coords().iter().all(Zero::is_zero)
    }

    fn is_positive(&self) -> bool {
        match self {
            Head::Lex(v) => v.is_positive(),
            Head::Coordinatewise(v) => v.iter().all(|x| !x.is_negative()),
        }
    }

    fn sub(&self, other: &Self) -> Result<Self, LexError> {
        match (self, other) {
            (Head::Lex(x), Head::Lex(y)) => Ok(Head::Lex(x.sub(y)?)),
            (Head::Coordinatewise(x), Head::Coordinatewise(y)) => {
                check_dims(x.len(), y.len())?;
                Ok(Head::Coordinatewise(
                    x.iter().zip(y).map(|(a, b)| a - b).collect(),
                ))
            }
            _ => Err(LexError::DimensionMismatch(
                self.coords().len(),
                other.coords().len(),
            )),
        }
    }
}

/// `(x, y) ∈ X ∘ Y` with `Y = c₀₀(Λ)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LexProductElement {
    pub head: Head,
    pub tail: FinSuppVector,
}

impl LexProductElement {
    /// `(x, y) ≥ 0` iff `x > 0`, or `x = 0` and `y ≥ 0`.
    pub fn is_positive(&self) -> bool {
        if self.head.is_zero() {
            self.tail.is_positive()
        } else {
            self.head.is_positive()
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self, LexError> {
        Ok(LexProductElement {
            head: self.head.sub(&other.head)?,
            tail: self.tail.sub(&other.tail),
        })
    }

    /// `self ≤ other` in the lexicographic order.
    pub fn le(&self, other: &Self) -> Result<bool, LexError> {
        Ok(other.sub(self)?.is_positive())
    }

    fn lex_heads<'a>(&'a self, other: &'a Self) -> Result<Ordering, LexError> {
        match (&self.head, &other.head) {
            (Head::Lex(x), Head::Lex(y)) => x.compare(y),
            _ => Err(LexError::NotTotallyOrdered),
        }
    }

    /// Supremum; defined when the head is totally ordered.
    pub fn sup(&self, other: &Self) -> Result<Self, LexError> {
        Ok(match self.lex_heads(other)? {
            Ordering::Greater => self.clone(),
            Ordering::Less => other.clone(),
            Ordering::Equal => LexProductElement {
                head: self.head.clone(),
                tail: self.tail.sup(&other.tail),
            },
        })
    }

    pub fn inf(&self, other: &Self) -> Result<Self, LexError> {
        Ok(match self.lex_heads(other)? {
            Ordering::Greater => other.clone(),
            Ordering::Less => self.clone(),
            Ordering::Equal => LexProductElement {
                head: self.head.clone(),
                tail: self.tail.inf(&other.tail),
            },
        })
    }
}

/// A linear functional `(x, y) ↦ Σ hᵢxᵢ + Σ t_a y_a` on `X ∘ c₀₀(Λ)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductFunctional {
    pub head: Vec<Scalar>,
    pub tail: FinSuppVector,
}

impl ProductFunctional {
    pub fn evaluate(&self, z: &LexProductElement) -> Result<Scalar, LexError> {
        let xs = z.head.coords();
        check_dims(self.head.len(), xs.len())?;
        let head: Scalar = self.head.iter().zip(xs).map(|(c, x)| c * x).sum();
        let tail: Scalar = self.tail.iter().map(|(a, c)| c * z.tail.coord(a)).sum();
        Ok(head + tail)
    }

    /// The restriction `φ ↦ φ|_X`, which identifies the order dual of
    /// `X ∘ Y` with that of `X`.
    pub fn restrict_to_head(&self) -> Result<Vec<Scalar>, LexError> {
        product_dual_restrict(&self.head, &self.tail)
    }
}

pub fn product_dual_restrict(
    head: &[Scalar],
    tail: &FinSuppVector,
) -> Result<Vec<Scalar>, LexError> {
    if !tail.is_zero() {
        return Err(LexError::NotOrderBounded);
    }
    Ok(head.to_vec())
}
