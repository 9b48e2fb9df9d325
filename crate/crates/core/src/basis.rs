//! Biorthogonal bases for finite families of functions on a point set.
//!
//! Given linearly independent `h₁, …, hₙ : Ω → ℚ`, [`delta_basis`] finds a
//! basis `f₁, …, fₙ` of their span and points `a₁, …, aₙ` with
//! `fᵢ(aⱼ) = δᵢⱼ`. The construction is inductive: pivot on a point where
//! `h₁` is nonzero, eliminate that value from the remaining functions,
//! solve the smaller problem, then back-substitute into `h₁`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::label::AtomLabel;
use crate::vector::FinSuppVector;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BasisError {
    #[error("function family is empty")]
    EmptyFamily,
    #[error("functions are linearly dependent")]
    LinearlyDependent,
}

/// Finitely many functions `Ω → ℚ`, each presented by its finite support.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<FinSuppVector>", into = "Vec<FinSuppVector>")]
pub struct FunctionFamily {
    functions: Vec<FinSuppVector>,
}

impl FunctionFamily {
    pub fn new(functions: Vec<FinSuppVector>) -> Result<Self, BasisError> {
        if functions.is_empty() {
            return Err(BasisError::EmptyFamily);
        }
        Ok(FunctionFamily { functions })
    }

    pub fn functions(&self) -> &[FinSuppVector] {
        &self.functions
    }

    /// Union of the supports: the only points where anything is nonzero.
    pub fn points(&self) -> BTreeSet<AtomLabel> {
        self.functions.iter().flat_map(|f| f.support()).collect()
    }
}

impl TryFrom<Vec<FinSuppVector>> for FunctionFamily {
    type Error = BasisError;

    fn try_from(functions: Vec<FinSuppVector>) -> Result<Self, Self::Error> {
        FunctionFamily::new(functions)
    }
}

impl From<FunctionFamily> for Vec<FinSuppVector> {
    fn from(fam: FunctionFamily) -> Self {
        fam.functions
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeltaBasis {
    pub basis: Vec<FinSuppVector>,
    pub points: Vec<AtomLabel>,
}

pub fn delta_basis(fam: &FunctionFamily) -> Result<DeltaBasis, BasisError> {
    let (basis, points) = reduce(fam.functions())?;
    Ok(DeltaBasis { basis, points })
}

fn reduce(hs: &[FinSuppVector]) -> Result<(Vec<FinSuppVector>, Vec<AtomLabel>), BasisError> {
    let (head, rest) = hs.split_first().expect("nonempty by construction");
    // smallest point where the head is nonzero
    let (pivot, pivot_value) = head
        .iter()
        .next()
        .map(|(a, v)| (a.clone(), v.clone()))
        .ok_or(BasisError::LinearlyDependent)?;

    if rest.is_empty() {
        return Ok((vec![head.scale(&pivot_value.recip())], vec![pivot]));
    }

    let reduced: Vec<FinSuppVector> = rest
        .iter()
        .map(|h| h.sub(&head.scale(&(h.coord(&pivot) / &pivot_value))))
        .collect();
    let (tail_basis, tail_points) = reduce(&reduced)?;

    let mut g = head.clone();
    for (f, a) in tail_basis.iter().zip(&tail_points) {
        g = g.sub(&f.scale(&head.coord(a)));
    }
    let first = g.scale(&g.coord(&pivot).recip());

    let mut basis = Vec::with_capacity(hs.len());
    basis.push(first);
    basis.extend(tail_basis);
    let mut points = Vec::with_capacity(hs.len());
    points.push(pivot);
    points.extend(tail_points);
    Ok((basis, points))
}
