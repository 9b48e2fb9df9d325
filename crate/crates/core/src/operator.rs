//! Operators in the unital hull `ℝ·I + 𝒜₀`.
//!
//! An [`Operator`] is `c·I + M` where `M` is a finitely supported matrix with
//! respect to the atoms of `c₀₀(Λ)`: `φ_a(T e_b) = c·[a = b] + M(a, b)`.
//! The class is closed under composition, inversion, lattice operations
//! and finite truncation, and the operator norm on `(c₀₀(Λ), ‖·‖∞)` is the
//! maximal absolute row sum of the full (virtual) matrix.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::label::AtomLabel;
use crate::linalg;
use crate::scalar::{format_scalar, half, parse_scalar, Scalar, ScalarParseError};
use crate::vector::FinSuppVector;

pub type Index = (AtomLabel, AtomLabel);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OperatorError {
    /// The scalar part vanishes or the finite block is singular.
    #[error("operator is not invertible in the unital hull")]
    NotInvertible,
    /// Rank is only defined for finitely supported operators.
    #[error("operator has a nonzero scalar part")]
    ScalarPartNonzero,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "OperatorDoc", try_from = "OperatorDoc")]
pub struct Operator {
    scalar: Scalar,
    entries: BTreeMap<Index, Scalar>,
}

impl Operator {
    /// Builds `c·I + M`, summing repeated indices and dropping zeros.
    pub fn new(scalar: Scalar, entries: impl IntoIterator<Item = (Index, Scalar)>) -> Self {
        let mut map: BTreeMap<Index, Scalar> = BTreeMap::new();
        for (idx, value) in entries {
            *map.entry(idx).or_insert_with(Scalar::zero) += value;
        }
        map.retain(|_, v| !v.is_zero());
        Operator {
            scalar,
            entries: map,
        }
    }

    /// A member of `𝒜₀` (scalar part zero).
    pub fn finite(entries: impl IntoIterator<Item = (Index, Scalar)>) -> Self {
        Self::new(Scalar::zero(), entries)
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn identity() -> Self {
        Self::scalar_multiple(Scalar::one())
    }

    pub fn scalar_multiple(c: Scalar) -> Self {
        Operator {
            scalar: c,
            entries: BTreeMap::new(),
        }
    }

    /// `a ⊗ φ_b`, sending `e_b` to `e_a` and every other atom to zero.
    pub fn matrix_unit(a: AtomLabel, b: AtomLabel) -> Self {
        Self::finite([((a, b), Scalar::one())])
    }

    pub fn scalar_part(&self) -> &Scalar {
        &self.scalar
    }

    pub fn entries(&self) -> &BTreeMap<Index, Scalar> {
        &self.entries
    }

    /// Stored matrix-part entry `M(a, b)`.
    pub fn entry(&self, a: &AtomLabel, b: &AtomLabel) -> Scalar {
        self.entries
            .get(&(a.clone(), b.clone()))
            .cloned()
            .unwrap_or_else(Scalar::zero)
    }

    /// Full matrix coefficient `φ_a(T e_b)`.
    pub fn coefficient(&self, a: &AtomLabel, b: &AtomLabel) -> Scalar {
        let m = self.entry(a, b);
        if a == b {
            m + &self.scalar
        } else {
            m
        }
    }

    pub fn rows(&self) -> BTreeSet<AtomLabel> {
        self.entries.keys().map(|(r, _)| r.clone()).collect()
    }

    pub fn cols(&self) -> BTreeSet<AtomLabel> {
        self.entries.keys().map(|(_, c)| c.clone()).collect()
    }

    /// Rows ∪ columns of the matrix part.
    pub fn labels(&self) -> BTreeSet<AtomLabel> {
        self.entries
            .keys()
            .flat_map(|(r, c)| [r.clone(), c.clone()])
            .collect()
    }

    /// Membership in `𝒜₀`.
    pub fn is_finitely_supported(&self) -> bool {
        self.scalar.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.scalar.is_zero() && self.entries.is_empty()
    }

    /// Scalar multiple of the identity.
    pub fn is_scalar(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn apply(&self, x: &FinSuppVector) -> FinSuppVector {
        let diag = x.iter().map(|(a, v)| (a.clone(), v * &self.scalar));
        let matrix = self
            .entries
            .iter()
            .filter_map(|((a, b), t)| x.entries().get(b).map(|v| (a.clone(), t * v)));
        FinSuppVector::from_entries(diag.chain(matrix))
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(
            &self.scalar + &other.scalar,
            self.entries
                .iter()
                .chain(other.entries.iter())
                .map(|(k, v)| (k.clone(), v.clone())),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Scalar::one())
    }

    pub fn scale(&self, factor: &Scalar) -> Self {
        Self::new(
            &self.scalar * factor,
            self.entries.iter().map(|(k, v)| (k.clone(), v * factor)),
        )
    }

    /// `self ∘ other`:
    /// `(c₁I + M₁)(c₂I + M₂) = c₁c₂I + c₁M₂ + c₂M₁ + M₁M₂`.
    pub fn compose(&self, other: &Self) -> Self {
        let mut by_row: BTreeMap<&AtomLabel, Vec<(&AtomLabel, &Scalar)>> = BTreeMap::new();
        for ((r, c), v) in &other.entries {
            by_row.entry(r).or_default().push((c, v));
        }
        let product = self.entries.iter().flat_map(|((a, b), t)| {
            by_row
                .get(b)
                .into_iter()
                .flatten()
                .map(move |(c, s)| ((a.clone(), (*c).clone()), t * *s))
        });
        let left = other
            .entries
            .iter()
            .map(|(k, v)| (k.clone(), &self.scalar * v));
        let right = self
            .entries
            .iter()
            .map(|(k, v)| (k.clone(), &other.scalar * v));
        Self::new(
            &self.scalar * &other.scalar,
            left.chain(right).chain(product),
        )
    }

    /// Positivity: every full matrix coefficient is nonnegative, including
    /// the diagonal of the infinitely many rows outside the support.
    pub fn is_positive(&self) -> bool {
        if self.scalar.is_negative() {
            return false;
        }
        self.entries.iter().all(|((a, b), v)| {
            if a == b {
                !(v + &self.scalar).is_negative()
            } else {
                !v.is_negative()
            }
        })
    }

    /// Operator order: `self ≥ other`.
    pub fn dominates(&self, other: &Self) -> bool {
        self.sub(other).is_positive()
    }

    /// `|T|`, the entrywise absolute value of the full matrix.
    pub fn modulus(&self) -> Self {
        let c = self.scalar.abs();
        let entries: Vec<(Index, Scalar)> = self
            .entries
            .iter()
            .map(|((a, b), v)| {
                let value = if a == b {
                    (v + &self.scalar).abs() - &c
                } else {
                    v.abs()
                };
                ((a.clone(), b.clone()), value)
            })
            .collect();
        Self::new(c, entries)
    }

    /// `T ∨ S = ((T + S) + |T − S|) / 2`.
    pub fn sup(&self, other: &Self) -> Self {
        self.add(other)
            .add(&self.sub(other).modulus())
            .scale(&half())
    }

    /// `T ∧ S = ((T + S) − |T − S|) / 2`.
    pub fn inf(&self, other: &Self) -> Self {
        self.add(other)
            .sub(&self.sub(other).modulus())
            .scale(&half())
    }

    /// `T_F = Σ_{a,b∈F} (a⊗φ_a) T (b⊗φ_b)`, always in `𝒜₀`.
    pub fn finite_truncation(&self, f: &BTreeSet<AtomLabel>) -> Self {
        let diag = f
            .iter()
            .map(|a| ((a.clone(), a.clone()), self.scalar.clone()));
        let kept = self
            .entries
            .iter()
            .filter(|((a, b), _)| f.contains(a) && f.contains(b))
            .map(|(k, v)| (k.clone(), v.clone()));
        Self::finite(diag.chain(kept))
    }

    /// Norm on `(c₀₀(Λ), ‖·‖∞)`: the largest absolute row sum of the full
    /// matrix. Rows without stored entries contribute `|c|`.
    pub fn op_norm(&self) -> Scalar {
        let mut rows: BTreeMap<&AtomLabel, Scalar> = BTreeMap::new();
        let mut diagonal_seen: BTreeSet<&AtomLabel> = BTreeSet::new();
        for ((a, b), v) in &self.entries {
            let term = if a == b {
                diagonal_seen.insert(a);
                (v + &self.scalar).abs()
            } else {
                v.abs()
            };
            *rows.entry(a).or_insert_with(Scalar::zero) += term;
        }
        // rows with off-diagonal entries only still carry the scalar diagonal
        for (a, sum) in rows.iter_mut() {
            if !diagonal_seen.contains(a) {
                *sum += self.scalar.abs();
            }
        }
        rows.into_values()
            .chain(std::iter::once(self.scalar.abs()))
            .max()
            .expect("nonempty")
    }

    /// The finite block `c·I_F + M_F` on `F = labels()`, in label order.
    fn dense_block(&self, f: &[AtomLabel]) -> linalg::DenseMatrix {
        f.iter()
            .map(|a| f.iter().map(|b| self.coefficient(a, b)).collect())
            .collect()
    }

    /// Inverse in the unital hull. Off the support, `T` acts as `c·I`, so
    /// the inverse has scalar part `1/c`; on the support it is the exact
    /// inverse `B` of the finite block, stored as `B − (1/c)·I_F`.
    pub fn invert(&self) -> Result<Self, OperatorError> {
        if self.scalar.is_zero() {
            return Err(OperatorError::NotInvertible);
        }
        let f: Vec<AtomLabel> = self.labels().into_iter().collect();
        let block = linalg::inverse(self.dense_block(&f)).ok_or(OperatorError::NotInvertible)?;
        let c_inv = self.scalar.recip();
        let mut entries = Vec::with_capacity(f.len() * f.len());
        for (i, a) in f.iter().enumerate() {
            for (j, b) in f.iter().enumerate() {
                let mut v = block[i][j].clone();
                if i == j {
                    v -= &c_inv;
                }
                entries.push(((a.clone(), b.clone()), v));
            }
        }
        Ok(Self::new(c_inv, entries))
    }

    fn require_finite(&self) -> Result<(), OperatorError> {
        if self.scalar.is_zero() {
            Ok(())
        } else {
            Err(OperatorError::ScalarPartNonzero)
        }
    }

    /// Rank of the matrix part over ℚ.
    pub fn rank(&self) -> Result<usize, OperatorError> {
        self.require_finite()?;
        let rows: Vec<AtomLabel> = self.rows().into_iter().collect();
        let cols: Vec<AtomLabel> = self.cols().into_iter().collect();
        let dense = rows
            .iter()
            .map(|a| cols.iter().map(|b| self.entry(a, b)).collect())
            .collect();
        Ok(linalg::rank(dense))
    }

    pub fn is_rank_one(&self) -> Result<bool, OperatorError> {
        Ok(self.rank()? == 1)
    }

    /// `dim span { T (a⊗φ_b) T : a, b ∈ probe }`. The probe is widened to
    /// contain the support; products against atoms outside it vanish.
    pub fn dim_span_tat(&self, probe: &BTreeSet<AtomLabel>) -> Result<usize, OperatorError> {
        self.require_finite()?;
        let mut probe = probe.clone();
        probe.extend(self.labels());
        let products: Vec<Operator> = probe
            .iter()
            .flat_map(|a| probe.iter().map(move |b| (a, b)))
            .map(|(a, b)| {
                self.compose(&Operator::matrix_unit(a.clone(), b.clone()))
                    .compose(self)
            })
            .filter(|p| !p.is_zero())
            .collect();
        let keys: BTreeSet<&Index> = products.iter().flat_map(|p| p.entries.keys()).collect();
        let dense = products
            .iter()
            .map(|p| {
                keys.iter()
                    .map(|k| p.entries.get(*k).cloned().unwrap_or_else(Scalar::zero))
                    .collect()
            })
            .collect();
        Ok(linalg::rank(dense))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OperatorDocError {
    #[error(transparent)]
    Scalar(#[from] ScalarParseError),
    #[error("duplicate entry ({0}, {1})")]
    DuplicateEntry(AtomLabel, AtomLabel),
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct OperatorDoc {
    scalar: String,
    entries: Vec<EntryDoc>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct EntryDoc {
    row: AtomLabel,
    col: AtomLabel,
    value: String,
}

impl From<Operator> for OperatorDoc {
    fn from(op: Operator) -> Self {
        OperatorDoc {
            scalar: format_scalar(&op.scalar),
            entries: op
                .entries
                .iter()
                .map(|((row, col), v)| EntryDoc {
                    row: row.clone(),
                    col: col.clone(),
                    value: format_scalar(v),
                })
                .collect(),
        }
    }
}

impl TryFrom<OperatorDoc> for Operator {
    type Error = OperatorDocError;

    fn try_from(doc: OperatorDoc) -> Result<Self, Self::Error> {
        let scalar = parse_scalar(&doc.scalar)?;
        let mut seen = BTreeSet::new();
        let mut entries = Vec::with_capacity(doc.entries.len());
        for e in doc.entries {
            if !seen.insert((e.row.clone(), e.col.clone())) {
                return Err(OperatorDocError::DuplicateEntry(e.row, e.col));
            }
            entries.push(((e.row, e.col), parse_scalar(&e.value)?));
        }
        Ok(Operator::new(scalar, entries))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::label::{fresh_label, labels};
    use crate::scalar::{int, ratio};
    use proptest::prelude::*;

    fn l(s: &str) -> AtomLabel {
        AtomLabel::from(s)
    }

    fn e(a: &str, b: &str) -> Operator {
        Operator::matrix_unit(l(a), l(b))
    }

    fn op(c: i64, pairs: &[(&str, &str, i64)]) -> Operator {
        Operator::new(
            int(c),
            pairs.iter().map(|(a, b, v)| ((l(a), l(b)), int(*v))),
        )
    }

    fn basis(a: &str) -> FinSuppVector {
        FinSuppVector::basis(l(a))
    }

    /// Brute force `max ‖T x‖∞` over `x ∈ {−1,0,1}^cols` with one fresh
    /// column standing for the rest of Λ.
    fn sign_vector_norm(t: &Operator) -> Scalar {
        let mut taken = t.labels();
        let fresh = fresh_label(&taken);
        taken.insert(fresh);
        let cols: Vec<AtomLabel> = taken.into_iter().collect();
        let mut best = int(0);
        let total = 3usize.pow(cols.len() as u32);
        for code in 0..total {
            let mut rest = code;
            let x: FinSuppVector = cols
                .iter()
                .map(|c| {
                    let digit = (rest % 3) as i64 - 1;
                    rest /= 3;
                    (c.clone(), int(digit))
                })
                .collect();
            best = best.max(t.apply(&x).sup_norm());
        }
        best
    }

    #[test]
    fn matrix_unit_examples() {
        assert_eq!(e("a", "b").apply(&basis("b")), basis("a"));
        assert!(e("a", "b").apply(&basis("c")).is_zero());
        assert_eq!(e("a", "b").compose(&e("b", "c")), e("a", "c"));
        assert!(e("a", "b").compose(&e("c", "d")).is_zero());
    }

    #[test]
    fn apply_examples() {
        let x: FinSuppVector = [(l("a"), ratio(1, 3)), (l("q"), int(-2))]
            .into_iter()
            .collect();
        assert_eq!(Operator::identity().apply(&x), x);
        assert_eq!(
            op(0, &[("a", "b", 2)]).apply(&basis("b")),
            basis("a").scale(&int(2))
        );
        assert!(op(3, &[("a", "a", -3)]).apply(&basis("a")).is_zero());
    }

    #[test]
    fn compose_examples() {
        let t = op(2, &[("a", "b", 1)]);
        assert_eq!(t.compose(&Operator::identity()), t);
        assert_eq!(Operator::identity().compose(&t), t);
        assert_eq!(t.compose(&op(3, &[])), op(6, &[("a", "b", 3)]));
    }

    #[test]
    fn positivity_examples() {
        assert!(e("a", "b").is_positive());
        assert!(!op(0, &[("a", "b", -1)]).is_positive());
        let t = op(2, &[("a", "a", -1)]);
        assert!(t.is_positive());
        for lbl in ["a", "z"] {
            assert!(t.apply(&basis(lbl)).is_positive());
        }
        assert!(!op(-1, &[]).is_positive());
        assert!(!op(1, &[("a", "a", -2)]).is_positive());
    }

    #[test]
    fn modulus_examples() {
        assert_eq!(
            op(0, &[("a", "b", 2), ("c", "d", -3)]).modulus(),
            op(0, &[("a", "b", 2), ("c", "d", 3)])
        );
        let pos = op(1, &[("a", "b", 4), ("b", "b", 2)]);
        assert_eq!(pos.modulus(), pos);
        let t = op(1, &[("a", "a", -3)]);
        assert_eq!(t.modulus(), op(1, &[("a", "a", 1)]));
        assert_eq!(t.modulus().coefficient(&l("a"), &l("a")), int(2));
    }

    #[test]
    fn lattice_examples() {
        let t = op(1, &[("a", "b", -2), ("c", "c", 5)]);
        assert_eq!(t.sup(&t), t);
        assert_eq!(e("a", "b").sup(&e("a", "b").neg()), e("a", "b"));
        assert!(e("a", "b").inf(&e("c", "d")).is_zero());
    }

    #[test]
    fn truncation_examples() {
        let t = op(0, &[("a", "a", 1), ("b", "c", 2)]);
        assert_eq!(t.finite_truncation(&labels(["a"])), op(0, &[("a", "a", 1)]));
        assert_eq!(t.finite_truncation(&t.labels()), t);
        assert_eq!(
            Operator::identity().finite_truncation(&labels(["a", "b"])),
            op(0, &[("a", "a", 1), ("b", "b", 1)])
        );
    }

    #[test]
    fn norm_examples() {
        assert_eq!(e("a", "b").op_norm(), int(1));
        let t = op(0, &[("a", "a", 1), ("a", "b", -2), ("b", "a", 3)]);
        assert_eq!(sign_vector_norm(&t), int(3));
        assert_eq!(t.op_norm(), int(3));
        let s = op(2, &[("a", "b", 5)]);
        assert_eq!(sign_vector_norm(&s), int(7));
        assert_eq!(s.op_norm(), int(7));
        assert_eq!(op(-4, &[("a", "a", 4)]).op_norm(), int(4));
        assert_eq!(Operator::zero().op_norm(), int(0));
    }

    #[test]
    fn invert_examples() {
        assert_eq!(
            op(2, &[]).invert().unwrap(),
            Operator::scalar_multiple(ratio(1, 2))
        );
        let t = Operator::identity().add(&e("a", "b"));
        let inv = t.invert().unwrap();
        assert_eq!(inv, Operator::identity().sub(&e("a", "b")));
        assert_eq!(t.compose(&inv), Operator::identity());
        assert_eq!(e("a", "a").invert(), Err(OperatorError::NotInvertible));
        // I − E_aa kills e_a
        assert_eq!(
            op(1, &[("a", "a", -1)]).invert(),
            Err(OperatorError::NotInvertible)
        );
    }

    #[test]
    fn rank_examples() {
        assert_eq!(e("a", "b").is_rank_one(), Ok(true));
        assert_eq!(
            op(0, &[("a", "a", 1), ("b", "b", 1)]).is_rank_one(),
            Ok(false)
        );
        let t = op(
            0,
            &[("a", "a", 1), ("a", "b", 2), ("b", "a", 3), ("b", "b", 6)],
        );
        assert_eq!(t.is_rank_one(), Ok(true));
        assert_eq!(
            Operator::identity().is_rank_one(),
            Err(OperatorError::ScalarPartNonzero)
        );
    }

    #[test]
    fn dim_span_examples() {
        let ab = labels(["a", "b"]);
        assert_eq!(e("a", "b").dim_span_tat(&ab), Ok(1));
        assert_eq!(Operator::zero().dim_span_tat(&ab), Ok(0));
        let diag = op(0, &[("a", "a", 1), ("b", "b", 1)]);
        assert_eq!(diag.dim_span_tat(&ab), Ok(4));
        assert_eq!(
            Operator::identity().dim_span_tat(&ab),
            Err(OperatorError::ScalarPartNonzero)
        );
    }

    #[test]
    fn text_form_is_sorted() {
        let t = Operator::new(
            ratio(1, 2),
            [((l("b"), l("a")), int(3)), ((l("a"), l("b")), ratio(-2, 4))],
        );
        let text = serde_json::to_string(&t).unwrap();
        assert_eq!(
            text,
            r#"{"scalar":"1/2","entries":[{"row":"a","col":"b","value":"-1/2"},{"row":"b","col":"a","value":"3/1"}]}"#
        );
        let dup = r#"{"scalar":"0","entries":[{"row":"a","col":"a","value":"1"},{"row":"a","col":"a","value":"1"}]}"#;
        assert!(serde_json::from_str::<Operator>(dup).is_err());
    }

    fn arb_op(labels: &'static str, scalar: bool) -> impl Strategy<Value = Operator> {
        let c = if scalar { -3i64..=3 } else { 0i64..=0 };
        (
            c,
            prop::collection::vec((labels, labels, -4i64..=4, 1i64..=3), 0..6),
        )
            .prop_map(|(c, raw)| {
                Operator::new(
                    int(c),
                    raw.into_iter()
                        .map(|(a, b, n, d)| ((l(&a), l(&b)), ratio(n, d))),
                )
            })
    }

    proptest! {
        #[test]
        fn algebra_laws(
            t in arb_op("[a-c]", true),
            s in arb_op("[a-c]", true),
            r in arb_op("[a-c]", true),
        ) {
            prop_assert_eq!(t.compose(&s).compose(&r), t.compose(&s.compose(&r)));
            prop_assert_eq!(t.compose(&s.add(&r)), t.compose(&s).add(&t.compose(&r)));
            prop_assert_eq!(s.add(&r).compose(&t), s.compose(&t).add(&r.compose(&t)));
            prop_assert_eq!(t.compose(&Operator::identity()), t.clone());
        }

        #[test]
        fn compose_matches_apply(
            t in arb_op("[a-c]", true),
            s in arb_op("[a-c]", true),
        ) {
            for lbl in ["a", "b", "c", "z"] {
                let x = basis(lbl);
                prop_assert_eq!(t.compose(&s).apply(&x), t.apply(&s.apply(&x)));
            }
        }

        #[test]
        fn positivity_is_columnwise(t in arb_op("[a-c]", true)) {
            let mut cols = t.cols();
            cols.insert(fresh_label(&t.labels()));
            let by_columns = cols.iter().all(|c| t.apply(&FinSuppVector::basis(c.clone())).is_positive());
            prop_assert_eq!(t.is_positive(), by_columns);
        }

        #[test]
        fn modulus_is_least_upper_bound(t in arb_op("[a-c]", true), bump in arb_op("[a-c]", true)) {
            let m = t.modulus();
            prop_assert!(m.dominates(&t) && m.dominates(&t.neg()));
            let s = m.add(&bump.modulus());
            if s.dominates(&t) && s.dominates(&t.neg()) {
                prop_assert!(s.dominates(&m));
            }
        }

        #[test]
        fn riesz_identity(t in arb_op("[a-c]", true), s in arb_op("[a-c]", true)) {
            prop_assert_eq!(t.sup(&s).add(&t.inf(&s)), t.add(&s));
            prop_assert!(t.sup(&s).dominates(&t) && t.sup(&s).dominates(&s));
        }

        #[test]
        fn norm_matches_sign_vectors(t in arb_op("[a-c]", true)) {
            prop_assert_eq!(t.op_norm(), sign_vector_norm(&t));
        }

        #[test]
        fn norm_is_submultiplicative(t in arb_op("[a-c]", true), s in arb_op("[a-c]", true)) {
            prop_assert!(t.compose(&s).op_norm() <= t.op_norm() * s.op_norm());
        }

        #[test]
        fn invert_is_two_sided(t in arb_op("[a-c]", true)) {
            if let Ok(inv) = t.invert() {
                prop_assert_eq!(t.compose(&inv), Operator::identity());
                prop_assert_eq!(inv.compose(&t), Operator::identity());
            }
        }

        #[test]
        fn text_round_trip(t in arb_op("[a-d]", true)) {
            let text = serde_json::to_string(&t).unwrap();
            let back: Operator = serde_json::from_str(&text).unwrap();
            prop_assert_eq!(back, t);
        }
    }
}
