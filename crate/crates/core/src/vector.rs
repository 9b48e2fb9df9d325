//! The vector lattice `c₀₀(Λ)` of finitely supported rational sequences.
//!
//! Every label is an atom and the coordinate functional of atom `a` reads
//! the stored entry at `a`. Lattice operations are entrywise; a vector is
//! positive exactly when every coordinate is nonnegative.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::label::AtomLabel;
use crate::scalar::{format_scalar, parse_scalar, Scalar};

/// A finitely supported map `Λ → ℚ`. Zeros are never stored, so two
/// vectors are equal exactly when their maps are equal.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "VectorDoc", try_from = "VectorDoc")]
pub struct FinSuppVector {
    entries: BTreeMap<AtomLabel, Scalar>,
}

impl FinSuppVector {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The atom `e_a`.
    pub fn basis(a: AtomLabel) -> Self {
        Self::from_entries([(a, Scalar::from_integer(1.into()))])
    }

    /// Collects entries, summing repeated labels and dropping zeros.
    pub fn from_entries(entries: impl IntoIterator<Item = (AtomLabel, Scalar)>) -> Self {
        let mut map: BTreeMap<AtomLabel, Scalar> = BTreeMap::new();
        for (label, value) in entries {
            *map.entry(label).or_insert_with(Scalar::zero) += value;
        }
        map.retain(|_, v| !v.is_zero());
        FinSuppVector { entries: map }
    }

    /// Coordinate functional `φ_a`.
    pub fn coord(&self, a: &AtomLabel) -> Scalar {
        self.entries.get(a).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn entries(&self) -> &BTreeMap<AtomLabel, Scalar> {
        &self.entries
    }

    pub fn iter(&self) -> impl Iterator<Item = (&AtomLabel, &Scalar)> {
        self.entries.iter()
    }

    pub fn support(&self) -> BTreeSet<AtomLabel> {
        self.entries.keys().cloned().collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_positive(&self) -> bool {
        self.entries.values().all(|v| !v.is_negative())
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip_with(other, |x, y| x + y)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip_with(other, |x, y| x - y)
    }

    pub fn neg(&self) -> Self {
        self.map_values(|v| -v)
    }

    pub fn scale(&self, factor: &Scalar) -> Self {
        if factor.is_zero() {
            return Self::zero();
        }
        self.map_values(|v| v * factor)
    }

    pub fn sup(&self, other: &Self) -> Self {
        self.zip_with(other, |x, y| if x >= y { x.clone() } else { y.clone() })
    }

    pub fn inf(&self, other: &Self) -> Self {
        self.zip_with(other, |x, y| if x <= y { x.clone() } else { y.clone() })
    }

    pub fn abs(&self) -> Self {
        self.map_values(|v| v.abs())
    }

    /// Positive part `x ∨ 0`.
    pub fn positive_part(&self) -> Self {
        self.sup(&Self::zero())
    }

    /// Entrywise order: `self ≥ other`.
    pub fn dominates(&self, other: &Self) -> bool {
        self.sub(other).is_positive()
    }

    /// Sup-norm `max_a |x_a|`.
    pub fn sup_norm(&self) -> Scalar {
        self.entries
            .values()
            .map(|v| v.abs())
            .max()
            .unwrap_or_else(Scalar::zero)
    }

    fn map_values(&self, f: impl Fn(&Scalar) -> Scalar) -> Self {
        Self::from_entries(self.entries.iter().map(|(k, v)| (k.clone(), f(v))))
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> Self {
        let keys: BTreeSet<&AtomLabel> = self.entries.keys().chain(other.entries.keys()).collect();
        Self::from_entries(
            keys.into_iter()
                .map(|k| (k.clone(), f(&self.coord(k), &other.coord(k)))),
        )
    }
}

impl FromIterator<(AtomLabel, Scalar)> for FinSuppVector {
    fn from_iter<I: IntoIterator<Item = (AtomLabel, Scalar)>>(iter: I) -> Self {
        Self::from_entries(iter)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct VectorDoc {
    entries: BTreeMap<AtomLabel, String>,
}

impl From<FinSuppVector> for VectorDoc {
    fn from(v: FinSuppVector) -> Self {
        VectorDoc {
            entries: v
                .entries
                .iter()
                .map(|(k, x)| (k.clone(), format_scalar(x)))
                .collect(),
        }
    }
}

impl TryFrom<VectorDoc> for FinSuppVector {
    type Error = crate::scalar::ScalarParseError;

    fn try_from(doc: VectorDoc) -> Result<Self, Self::Error> {
        doc.entries
            .into_iter()
            .map(|(k, t)| parse_scalar(&t).map(|x| (k, x)))
            .collect::<Result<Vec<_>, _>>()
            .map(FinSuppVector::from_entries)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, ratio};
    use proptest::prelude::*;

    fn v(pairs: &[(&str, Scalar)]) -> FinSuppVector {
        pairs
            .iter()
            .map(|(k, x)| (AtomLabel::from(*k), x.clone()))
            .collect()
    }

    fn l(s: &str) -> AtomLabel {
        AtomLabel::from(s)
    }

    #[test]
    fn coordinates() {
        let x = v(&[("a", ratio(3, 2))]);
        assert_eq!(x.coord(&l("a")), ratio(3, 2));
        assert_eq!(x.coord(&l("b")), int(0));
        assert_eq!(FinSuppVector::zero().coord(&l("a")), int(0));
    }

    #[test]
    fn positivity_examples() {
        assert!(v(&[("a", int(1)), ("b", int(2))]).is_positive());
        assert!(!v(&[("a", int(1)), ("b", int(-1))]).is_positive());
        assert!(FinSuppVector::zero().is_positive());
    }

    #[test]
    fn lattice_examples() {
        let x = v(&[("a", int(1))]);
        let y = v(&[("a", int(-2)), ("b", int(1))]);
        assert_eq!(x.sup(&y), v(&[("a", int(1)), ("b", int(1))]));
        assert_eq!(y.inf(&y), y);
        assert_eq!(v(&[("a", int(-3))]).abs(), v(&[("a", int(3))]));
    }

    #[test]
    fn linear_examples() {
        assert_eq!(
            v(&[("a", int(1))]).add(&v(&[("a", int(-1))])),
            FinSuppVector::zero()
        );
        assert!(v(&[("a", int(5))]).scale(&int(0)).is_zero());
        assert_eq!(
            v(&[("a", int(1)), ("b", int(-1))]).scale(&int(2)),
            v(&[("a", int(2)), ("b", int(-2))])
        );
    }

    #[test]
    fn text_form() {
        let x = v(&[("b", ratio(-1, 2)), ("a", int(3))]);
        let text = serde_json::to_string(&x).unwrap();
        assert_eq!(text, r#"{"entries":{"a":"3/1","b":"-1/2"}}"#);
        let zeros: FinSuppVector =
            serde_json::from_str(r#"{"entries":{"a":"0/5","b":"2/4"}}"#).unwrap();
        assert_eq!(zeros, v(&[("b", ratio(1, 2))]));
        assert!(serde_json::from_str::<FinSuppVector>(r#"{"entries":{"a":"x"}}"#).is_err());
    }

    pub(crate) fn arb_vector() -> impl Strategy<Value = FinSuppVector> {
        prop::collection::vec(("[a-e]", -6i64..=6, 1i64..=4), 0..6).prop_map(|raw| {
            raw.into_iter()
                .map(|(k, n, d)| (AtomLabel::from(k), ratio(n, d)))
                .collect()
        })
    }

    proptest! {
        #[test]
        fn positivity_agrees_with_sup_and_abs(x in arb_vector()) {
            let p = x.is_positive();
            prop_assert_eq!(p, x.sup(&FinSuppVector::zero()) == x);
            prop_assert_eq!(p, x.abs() == x);
            prop_assert_eq!(p, x.support().iter().all(|a| x.coord(a) >= int(0)));
        }

        #[test]
        fn riesz_identity(x in arb_vector(), y in arb_vector()) {
            prop_assert_eq!(x.sup(&y).add(&x.inf(&y)), x.add(&y));
        }

        #[test]
        fn no_stored_zeros(x in arb_vector(), y in arb_vector()) {
            for z in [x.add(&y), x.sub(&y), x.sup(&y), x.inf(&y)] {
                prop_assert!(z.iter().all(|(_, v)| !v.is_zero()));
            }
        }

        #[test]
        fn text_round_trip(x in arb_vector()) {
            let text = serde_json::to_string(&x).unwrap();
            let back: FinSuppVector = serde_json::from_str(&text).unwrap();
            prop_assert_eq!(back, x);
        }
    }
}
