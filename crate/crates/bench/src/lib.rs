//! Deterministic inputs for the benchmarks.

use std::collections::BTreeSet;

use atomlat::scalar::{int, ratio};
use atomlat::{AtomLabel, FinSuppVector, FunctionFamily, Operator, PermDiag};

pub fn atoms(n: usize) -> Vec<AtomLabel> {
    (0..n).map(|i| AtomLabel::new(format!("a{i:03}"))).collect()
}

/// A cyclic shift on `n` atoms with weights `1, 2, …, n`.
pub fn cyclic_permdiag(n: usize) -> PermDiag {
    let xs = atoms(n);
    let pi = (0..n).map(|i| (xs[i].clone(), xs[(i + 1) % n].clone()));
    let delta = (0..n).map(|i| (xs[i].clone(), int(i as i64 + 1)));
    PermDiag::new(pi, delta).unwrap()
}

pub fn support(n: usize) -> BTreeSet<AtomLabel> {
    atoms(n).into_iter().collect()
}

/// Dense `n × n` block with entries `((i·7 + j·3) mod 5 − 2)/(j + 1)` on
/// top of the identity.
pub fn dense_operator(n: usize) -> Operator {
    let xs = atoms(n);
    let entries = (0..n).flat_map(|i| {
        let xs = &xs;
        (0..n).map(move |j| {
            let v = ratio(((i * 7 + j * 3) % 5) as i64 - 2, j as i64 + 1);
            ((xs[i].clone(), xs[j].clone()), v)
        })
    });
    Operator::new(int(1), entries)
}

/// `u ⊗ ψ` on `n` atoms.
pub fn rank_one_operator(n: usize) -> Operator {
    let xs = atoms(n);
    Operator::finite((0..n).flat_map(|i| {
        let xs = &xs;
        (0..n).map(move |j| {
            (
                (xs[i].clone(), xs[j].clone()),
                int(((i + 1) * (j + 2)) as i64),
            )
        })
    }))
}

/// `n` functions on `n + 2` points: `h_k` is 1 on points `k..k+3` with a
/// varying weight, which keeps the family independent.
pub fn banded_family(n: usize) -> FunctionFamily {
    let xs = atoms(n + 2);
    let functions = (0..n)
        .map(|k| {
            (k..k + 3)
                .map(|p| (xs[p].clone(), ratio((p + k + 1) as i64, (k + 1) as i64)))
                .collect::<FinSuppVector>()
        })
        .collect();
    FunctionFamily::new(functions).unwrap()
}
