//! Positive automorphisms in permutation-diagonal form.
//!
//! A [`PermDiag`] is a bijection `π` of Λ together with positive weights
//! `δ`. It acts on operators by `T ↦ P D T D⁻¹ P⁻¹`, which on matrix units
//! reads `a⊗φ_b ↦ (δ_a/δ_b)·(π(a)⊗φ_π(b))`. [`factor_automorphism`] goes
//! the other way: from the images of all matrix units over a finite
//! support it recovers `π` and `δ` or reports which structural property of
//! an automorphism the images violate.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::label::{fresh_label, AtomLabel};
use crate::operator::{Index, Operator, OperatorError};
use crate::scalar::{format_scalar, parse_scalar, Scalar, ScalarParseError};
use crate::vector::FinSuppVector;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermDiagError {
    #[error("pi is not a bijection of its support (at {0})")]
    NotBijection(AtomLabel),
    #[error("delta at {0} is not strictly positive")]
    NonPositiveDelta(AtomLabel),
    #[error(transparent)]
    Scalar(#[from] ScalarParseError),
}

/// Finitely supported bijection `π` plus positive diagonal weights `δ`.
///
/// Stored canonically: fixed points of `π` and weights equal to 1 are
/// dropped, so structural equality is equality of the induced automorphism.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "PermDiagDoc", try_from = "PermDiagDoc")]
pub struct PermDiag {
    pi: BTreeMap<AtomLabel, AtomLabel>,
    delta: BTreeMap<AtomLabel, Scalar>,
}

impl PermDiag {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn new(
        pi: impl IntoIterator<Item = (AtomLabel, AtomLabel)>,
        delta: impl IntoIterator<Item = (AtomLabel, Scalar)>,
    ) -> Result<Self, PermDiagError> {
        let mut map = BTreeMap::new();
        for (a, b) in pi {
            if map.insert(a.clone(), b).is_some() {
                return Err(PermDiagError::NotBijection(a));
            }
        }
        let mut targets = BTreeSet::new();
        for (a, b) in &map {
            if !targets.insert(b.clone()) {
                return Err(PermDiagError::NotBijection(a.clone()));
            }
        }
        if let Some(stray) = targets.iter().find(|b| !map.contains_key(*b)) {
            return Err(PermDiagError::NotBijection(stray.clone()));
        }
        map.retain(|a, b| a != b);

        let mut weights = BTreeMap::new();
        for (a, d) in delta {
            if !d.is_positive() {
                return Err(PermDiagError::NonPositiveDelta(a));
            }
            if !d.is_one() {
                weights.insert(a, d);
            }
        }
        Ok(PermDiag {
            pi: map,
            delta: weights,
        })
    }

    pub fn image(&self, a: &AtomLabel) -> AtomLabel {
        self.pi.get(a).unwrap_or(a).clone()
    }

    pub fn preimage(&self, a: &AtomLabel) -> AtomLabel {
        self.pi
            .iter()
            .find(|(_, b)| *b == a)
            .map_or_else(|| a.clone(), |(src, _)| src.clone())
    }

    pub fn delta(&self, a: &AtomLabel) -> Scalar {
        self.delta.get(a).cloned().unwrap_or_else(Scalar::one)
    }

    /// Non-fixed points of `π`.
    pub fn permutation(&self) -> &BTreeMap<AtomLabel, AtomLabel> {
        &self.pi
    }

    /// Weights different from 1.
    pub fn weights(&self) -> &BTreeMap<AtomLabel, Scalar> {
        &self.delta
    }

    /// Atoms where `π` moves or `δ ≠ 1`.
    pub fn support(&self) -> BTreeSet<AtomLabel> {
        self.pi.keys().chain(self.delta.keys()).cloned().collect()
    }

    pub fn is_identity(&self) -> bool {
        self.pi.is_empty() && self.delta.is_empty()
    }

    /// The datum observable from matrix-unit images over `f`: `π` on `f`
    /// (closed into a bijection of `f ∪ π(f)`), `δ` on `f` rescaled so the
    /// smallest atom of `f` has weight 1, and identity elsewhere.
    pub fn restricted(&self, f: &BTreeSet<AtomLabel>) -> Self {
        let partial: BTreeMap<AtomLabel, AtomLabel> =
            f.iter().map(|a| (a.clone(), self.image(a))).collect();
        let scale = f
            .first()
            .map_or_else(Scalar::one, |first| self.delta(first).recip());
        let weights = f.iter().map(|a| (a.clone(), self.delta(a) * &scale));
        Self::new(close_injection(&partial), weights).expect("restriction of a valid datum")
    }

    /// The datum inducing the inverse automorphism:
    /// `π' = π⁻¹`, `δ'_a = 1/δ_{π⁻¹(a)}`.
    pub fn inverse(&self) -> Self {
        let pi = self.pi.iter().map(|(a, b)| (b.clone(), a.clone()));
        let delta = self.delta.iter().map(|(a, d)| (self.image(a), d.recip()));
        Self::new(pi, delta).expect("inverse of a valid datum")
    }

    /// `P D T D⁻¹ P⁻¹`: the scalar part is untouched and
    /// `(P D T D⁻¹ P⁻¹)(π(a), π(b)) = (δ_a/δ_b)·T(a, b)`.
    pub fn apply(&self, t: &Operator) -> Operator {
        Operator::new(
            t.scalar_part().clone(),
            t.entries().iter().map(|((a, b), v)| {
                (
                    (self.image(a), self.image(b)),
                    v * self.delta(a) / self.delta(b),
                )
            }),
        )
    }

    /// `P D` as an operator: `e_a ↦ δ_a·e_π(a)`.
    pub fn as_operator(&self) -> Operator {
        let mut entries: Vec<(Index, Scalar)> = Vec::new();
        for a in self.support() {
            entries.push(((self.image(&a), a.clone()), self.delta(&a)));
            entries.push(((a.clone(), a), -Scalar::one()));
        }
        Operator::new(Scalar::one(), entries)
    }

    /// Images `Φ(a⊗φ_b)` of every matrix unit over `f`.
    pub fn build_images(&self, f: &BTreeSet<AtomLabel>) -> AutomorphismImages {
        let images = f
            .iter()
            .flat_map(|a| f.iter().map(move |b| (a.clone(), b.clone())))
            .map(|(a, b)| {
                let unit = Operator::matrix_unit(a.clone(), b.clone());
                ((a, b), self.apply(&unit))
            })
            .collect();
        AutomorphismImages {
            support: f.clone(),
            images,
        }
    }

    /// Checks `Φ(T_F) = Φ(T)_{π(F)}`.
    pub fn truncation_commutes(&self, t: &Operator, f: &BTreeSet<AtomLabel>) -> bool {
        let image_set: BTreeSet<AtomLabel> = f.iter().map(|a| self.image(a)).collect();
        self.apply(&t.finite_truncation(f)) == self.apply(t).finite_truncation(&image_set)
    }
}

/// Extends an injective partial map on `F` to a bijection of `F ∪ π(F)` by
/// sending the end of every open chain back to its start.
fn close_injection(partial: &BTreeMap<AtomLabel, AtomLabel>) -> Vec<(AtomLabel, AtomLabel)> {
    let targets: BTreeSet<&AtomLabel> = partial.values().collect();
    let mut out: Vec<(AtomLabel, AtomLabel)> = partial
        .iter()
        .map(|(a, b)| (a.clone(), b.clone()))
        .collect();
    for start in partial.keys().filter(|a| !targets.contains(a)) {
        let mut end = start;
        while let Some(next) = partial.get(end) {
            end = next;
        }
        out.push((end.clone(), start.clone()));
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ImagesError {
    #[error("no image given for ({0}, {1})")]
    MissingImage(AtomLabel, AtomLabel),
    #[error("image for ({0}, {1}) lies outside the support")]
    OutsideSupport(AtomLabel, AtomLabel),
    #[error("image for ({0}, {1}) given twice")]
    DuplicateImage(AtomLabel, AtomLabel),
}

/// `F_ab := Φ(a⊗φ_b)` for every pair in a finite support.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "ImagesDoc", try_from = "ImagesDoc")]
pub struct AutomorphismImages {
    support: BTreeSet<AtomLabel>,
    images: BTreeMap<Index, Operator>,
}

impl AutomorphismImages {
    pub fn new(
        support: BTreeSet<AtomLabel>,
        images: impl IntoIterator<Item = (Index, Operator)>,
    ) -> Result<Self, ImagesError> {
        let mut map = BTreeMap::new();
        for ((a, b), op) in images {
            if !support.contains(&a) || !support.contains(&b) {
                return Err(ImagesError::OutsideSupport(a, b));
            }
            if map.insert((a.clone(), b.clone()), op).is_some() {
                return Err(ImagesError::DuplicateImage(a, b));
            }
        }
        for a in &support {
            for b in &support {
                if !map.contains_key(&(a.clone(), b.clone())) {
                    return Err(ImagesError::MissingImage(a.clone(), b.clone()));
                }
            }
        }
        Ok(AutomorphismImages {
            support,
            images: map,
        })
    }

    pub fn support(&self) -> &BTreeSet<AtomLabel> {
        &self.support
    }

    pub fn get(&self, a: &AtomLabel, b: &AtomLabel) -> &Operator {
        &self.images[&(a.clone(), b.clone())]
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Index, &Operator)> {
        self.images.iter()
    }

    /// Replaces one image, keeping totality.
    pub fn with_image(mut self, a: &AtomLabel, b: &AtomLabel, op: Operator) -> Self {
        if let Some(slot) = self.images.get_mut(&(a.clone(), b.clone())) {
            *slot = op;
        }
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RankOneError {
    #[error("operator has a nonzero scalar part")]
    ScalarPartNonzero,
    #[error("operator does not have rank one")]
    NotRankOne,
    #[error("operator is not positive")]
    NotPositive,
}

/// `F = γ·(u ⊗ ψ)` with `u, ψ ≥ 0` and the first nonzero entry of each
/// equal to 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankOneFactors {
    pub u: FinSuppVector,
    pub psi: FinSuppVector,
    pub gamma_ratio: Scalar,
}

impl RankOneFactors {
    pub fn to_operator(&self) -> Operator {
        Operator::finite(self.u.iter().flat_map(|(i, ui)| {
            self.psi
                .iter()
                .map(move |(j, pj)| ((i.clone(), j.clone()), ui * pj * &self.gamma_ratio))
        }))
    }

    /// The single atom carrying `v`, if there is exactly one.
    fn single_atom(v: &FinSuppVector) -> Option<&AtomLabel> {
        match v.len() {
            1 => v.entries().keys().next(),
            _ => None,
        }
    }
}

/// Splits a positive rank-one member of `𝒜₀` into column and row factors.
pub fn factor_rank_one(f: &Operator) -> Result<RankOneFactors, RankOneError> {
    if !f.is_finitely_supported() {
        return Err(RankOneError::ScalarPartNonzero);
    }
    if f.rank() != Ok(1) {
        return Err(RankOneError::NotRankOne);
    }
    let ((r0, c0), pivot) = f.entries().iter().next().expect("rank one is nonzero");
    let u: FinSuppVector = f
        .entries()
        .iter()
        .filter(|((_, c), _)| c == c0)
        .map(|((r, _), v)| (r.clone(), v / pivot))
        .collect();
    let psi: FinSuppVector = f
        .entries()
        .iter()
        .filter(|((r, _), _)| r == r0)
        .map(|((_, c), v)| (c.clone(), v / pivot))
        .collect();
    let factors = RankOneFactors {
        u,
        psi,
        gamma_ratio: pivot.clone(),
    };
    if !factors.gamma_ratio.is_positive() || !factors.u.is_positive() || !factors.psi.is_positive()
    {
        return Err(RankOneError::NotPositive);
    }
    Ok(factors)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FactorError {
    #[error("image of ({0}, {1}) is not rank one")]
    NotRankOne(AtomLabel, AtomLabel),
    #[error("image of ({0}, {1}) is not positive")]
    NotPositive(AtomLabel, AtomLabel),
    /// A factor of `F_aa` spreads over several atoms, so `F_aa` is not a
    /// matrix unit up to scale.
    #[error("image of ({0}, {0}) is not supported on a single atom")]
    NotAtomColumn(AtomLabel),
    #[error("atoms {0} and {1} are sent to the same atom")]
    NotInjective(AtomLabel, AtomLabel),
    #[error("scaling ratios are inconsistent on ({0}, {1}, {2})")]
    InconsistentScaling(AtomLabel, AtomLabel, AtomLabel),
    #[error("F({0},{1}) F({1},{2}) != F({0},{2})")]
    NotMultiplicative(AtomLabel, AtomLabel, AtomLabel),
}

impl FactorError {
    /// Offending atoms, in the order they appear in the variant.
    pub fn indices(&self) -> Vec<&AtomLabel> {
        match self {
            FactorError::NotAtomColumn(a) => vec![a],
            FactorError::NotRankOne(a, b)
            | FactorError::NotPositive(a, b)
            | FactorError::NotInjective(a, b) => vec![a, b],
            FactorError::InconsistentScaling(a, b, c) | FactorError::NotMultiplicative(a, b, c) => {
                vec![a, b, c]
            }
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            FactorError::NotRankOne(..) => "NotRankOne",
            FactorError::NotPositive(..) => "NotPositive",
            FactorError::NotAtomColumn(..) => "NotAtomColumn",
            FactorError::NotInjective(..) => "NotInjective",
            FactorError::InconsistentScaling(..) => "InconsistentScaling",
            FactorError::NotMultiplicative(..) => "NotMultiplicative",
        }
    }
}

/// Recovers `(π, δ)` from the images of all matrix units over a finite
/// support.
///
/// Checks run in stages, each over all pairs in label order: every image is
/// rank one, every image is positive, each `F_aa` is carried by a single
/// atom `π(a)`, `π` is injective, the ratios `F_ab(π(a), π(b))` satisfy the
/// cocycle law, and `F_ab F_bc = F_ac`. On success the result is
/// normalized so the smallest support atom has weight 1, and
/// `build_images` reproduces the input exactly.
pub fn factor_automorphism(imgs: &AutomorphismImages) -> Result<PermDiag, FactorError> {
    let support: Vec<&AtomLabel> = imgs.support.iter().collect();
    let pairs = || {
        support
            .iter()
            .flat_map(|a| support.iter().map(move |b| (*a, *b)))
    };

    for (a, b) in pairs() {
        if imgs.get(a, b).is_rank_one() != Ok(true) {
            return Err(FactorError::NotRankOne(a.clone(), b.clone()));
        }
    }

    let mut diagonal_factors = BTreeMap::new();
    for (a, b) in pairs() {
        match factor_rank_one(imgs.get(a, b)) {
            Ok(factors) => {
                if a == b {
                    diagonal_factors.insert(a, factors);
                }
            }
            Err(RankOneError::NotPositive) => {
                return Err(FactorError::NotPositive(a.clone(), b.clone()))
            }
            Err(_) => return Err(FactorError::NotRankOne(a.clone(), b.clone())),
        }
    }

    let mut pi: BTreeMap<AtomLabel, AtomLabel> = BTreeMap::new();
    for a in &support {
        let factors = &diagonal_factors[a];
        let column = RankOneFactors::single_atom(&factors.u);
        let row = RankOneFactors::single_atom(&factors.psi);
        match (column, row) {
            (Some(c), Some(r)) if c == r => {
                pi.insert((*a).clone(), c.clone());
            }
            _ => return Err(FactorError::NotAtomColumn((*a).clone())),
        }
    }

    let mut preimage: BTreeMap<&AtomLabel, &AtomLabel> = BTreeMap::new();
    for (a, c) in &pi {
        if let Some(prev) = preimage.insert(c, a) {
            return Err(FactorError::NotInjective(prev.clone(), a.clone()));
        }
    }

    let ratio = |a: &AtomLabel, b: &AtomLabel| imgs.get(a, b).entry(&pi[a], &pi[b]);
    let ratios: BTreeMap<(&AtomLabel, &AtomLabel), Scalar> =
        pairs().map(|(a, b)| ((a, b), ratio(a, b))).collect();
    for (a, b) in pairs() {
        for c in &support {
            if &ratios[&(a, b)] * &ratios[&(b, *c)] != ratios[&(a, *c)] {
                return Err(FactorError::InconsistentScaling(
                    a.clone(),
                    b.clone(),
                    (*c).clone(),
                ));
            }
        }
    }

    for (a, b) in pairs() {
        for c in &support {
            if imgs.get(a, b).compose(imgs.get(b, c)) != *imgs.get(a, c) {
                return Err(FactorError::NotMultiplicative(
                    a.clone(),
                    b.clone(),
                    (*c).clone(),
                ));
            }
        }
    }

    let Some(first) = support.first() else {
        return Ok(PermDiag::identity());
    };
    let delta = support
        .iter()
        .map(|b| ((*b).clone(), ratios[&(*first, *b)].recip()));
    let pd =
        PermDiag::new(close_injection(&pi), delta).expect("validated images give a valid datum");
    debug_assert_eq!(&pd.build_images(&imgs.support), imgs);
    Ok(pd)
}

/// Whether `T ↦ T₁ X T₁⁻¹` and `T ↦ T₂ X T₂⁻¹` coincide, i.e. whether
/// `T₂⁻¹T₁` lies in the centralizer. Decided by testing commutation with
/// every matrix unit over `probe`, the support of `T₂⁻¹T₁`, and one fresh
/// atom standing for the rest of Λ.
pub fn same_inner(
    t1: &Operator,
    t2: &Operator,
    probe: &BTreeSet<AtomLabel>,
) -> Result<bool, OperatorError> {
    t1.invert()?;
    let c = t2.invert()?.compose(t1);
    let mut atoms = probe.clone();
    atoms.extend(c.labels());
    atoms.insert(fresh_label(&atoms));
    let commutes = atoms.iter().all(|a| {
        atoms.iter().all(|b| {
            let unit = Operator::matrix_unit(a.clone(), b.clone());
            c.compose(&unit) == unit.compose(&c)
        })
    });
    Ok(commutes)
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PermDiagDoc {
    pi: BTreeMap<AtomLabel, AtomLabel>,
    delta: BTreeMap<AtomLabel, String>,
}

impl From<PermDiag> for PermDiagDoc {
    fn from(pd: PermDiag) -> Self {
        PermDiagDoc {
            pi: pd.pi,
            delta: pd
                .delta
                .iter()
                .map(|(a, d)| (a.clone(), format_scalar(d)))
                .collect(),
        }
    }
}

impl TryFrom<PermDiagDoc> for PermDiag {
    type Error = PermDiagError;

    fn try_from(doc: PermDiagDoc) -> Result<Self, Self::Error> {
        let delta = doc
            .delta
            .into_iter()
            .map(|(a, t)| parse_scalar(&t).map(|d| (a, d)))
            .collect::<Result<Vec<_>, _>>()?;
        PermDiag::new(doc.pi, delta)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ImagesDoc {
    support: Vec<AtomLabel>,
    images: Vec<ImageDoc>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ImageDoc {
    row: AtomLabel,
    col: AtomLabel,
    operator: Operator,
}

impl From<AutomorphismImages> for ImagesDoc {
    fn from(imgs: AutomorphismImages) -> Self {
        ImagesDoc {
            support: imgs.support.into_iter().collect(),
            images: imgs
                .images
                .into_iter()
                .map(|((row, col), operator)| ImageDoc { row, col, operator })
                .collect(),
        }
    }
}

impl TryFrom<ImagesDoc> for AutomorphismImages {
    type Error = ImagesError;

    fn try_from(doc: ImagesDoc) -> Result<Self, Self::Error> {
        AutomorphismImages::new(
            doc.support.into_iter().collect(),
            doc.images
                .into_iter()
                .map(|img| ((img.row, img.col), img.operator)),
        )
    }
}
