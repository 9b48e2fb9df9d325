use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use serde::{de::Error, Deserialize, Deserializer, Serialize, Serializer};

/// Name of an atom (a basis vector `e_λ` of `c₀₀(Λ)`).
///
/// Labels are opaque, cheap to clone, and ordered lexicographically by
/// their text. That order is used for canonical serialization and for
/// every deterministic tie-break in the crate.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AtomLabel(Arc<str>);

impl AtomLabel {
    pub fn new(name: impl AsRef<str>) -> Self {
        AtomLabel(Arc::from(name.as_ref()))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl From<&str> for AtomLabel {
    fn from(s: &str) -> Self {
        AtomLabel::new(s)
    }
}

impl From<String> for AtomLabel {
    fn from(s: String) -> Self {
        AtomLabel(Arc::from(s))
    }
}

impl fmt::Debug for AtomLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", &*self.0)
    }
}

impl fmt::Display for AtomLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl Serialize for AtomLabel {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.0)
    }
}

impl<'de> Deserialize<'de> for AtomLabel {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        if s.is_empty() {
            return Err(D::Error::custom("atom labels must be nonempty"));
        }
        Ok(AtomLabel::from(s))
    }
}

/// A label not contained in `taken`. Stands in for "the rest of Λ", which is
/// conceptually infinite.
pub fn fresh_label(taken: &BTreeSet<AtomLabel>) -> AtomLabel {
    (0u64..)
        .map(|i| AtomLabel::from(format!("~fresh{i}")))
        .find(|l| !taken.contains(l))
        .expect("unbounded label supply")
}

/// Builds a label set from string literals.
pub fn labels<'a>(names: impl IntoIterator<Item = &'a str>) -> BTreeSet<AtomLabel> {
    names.into_iter().map(AtomLabel::from).collect()
}
