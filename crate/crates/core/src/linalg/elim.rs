//! Exact sparse elimination over a field.
//!
//! Vectors are reduced against pivots keyed by their leading index. Each
//! pivot optionally carries the combination of inserted vectors it came
//! from, which is what kernels and preimages are read off.

use std::collections::BTreeMap;

use crate::linalg::sparse::{SparseMatrix, SparseVec};
use crate::ring::Ring;

#[derive(Clone, Debug)]
struct Pivot {
    vector: SparseVec,
    combo: SparseVec,
}

/// Incremental echelon basis of a subspace.
#[derive(Clone, Debug)]
pub struct Echelon {
    ring: Ring,
    pivots: BTreeMap<usize, Pivot>,
    inserted: usize,
}

impl Echelon {
    pub fn new(ring: &Ring) -> Echelon {
        assert!(ring.is_field(), "sparse elimination needs a field");
        Echelon {
            ring: ring.clone(),
            pivots: BTreeMap::new(),
            inserted: 0,
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces `v`; returns the remainder and the combination of pivots used
    /// (in terms of inserted vectors) so that `v = remainder + Σ combo_k·input_k`.
    fn reduce_tracked(&self, v: &SparseVec) -> (SparseVec, SparseVec) {
        let ring = &self.ring;
        let mut rest = v.clone();
        let mut used = SparseVec::new();
        while let Some((lead, coeff)) = rest.leading().cloned() {
            let Some(p) = self.pivots.get(&lead) else { break };
            rest = rest.axpy(ring, &ring.neg(&coeff), &p.vector);
            used = used.axpy(ring, &coeff, &p.combo);
        }
        (rest, used)
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce_tracked(v).0.is_zero()
    }

    /// Adds `v` to the spanning set. Returns the combination of previously
    /// inserted vectors equal to `v` when it was already in the span.
    pub fn insert(&mut self, v: &SparseVec) -> Option<SparseVec> {
        let ring = self.ring.clone();
        let id = self.inserted;
        self.inserted += 1;
        let (rest, used) = self.reduce_tracked(v);
        if rest.is_zero() {
            return Some(used);
        }
        // rest = v - used·inputs, so the pivot's combination is e_id - used.
        let combo = SparseVec::unit(id, &ring).sub(&ring, &used);
        let (lead, coeff) = rest.leading().cloned().expect("nonzero remainder");
        let inv = ring.inv(&coeff).expect("field element");
        self.pivots.insert(
            lead,
            Pivot {
                vector: rest.scale(&ring, &inv),
                combo: combo.scale(&ring, &inv),
            },
        );
        None
    }

    /// Expresses `v` as a combination of inserted vectors, if possible.
    pub fn express(&self, v: &SparseVec) -> Option<SparseVec> {
        let (rest, used) = self.reduce_tracked(v);
        rest.is_zero().then_some(used)
    }
}

pub fn rank(ring: &Ring, m: &SparseMatrix) -> usize {
    let mut e = Echelon::new(ring);
    for c in m.columns() {
        e.insert(c);
    }
    e.rank()
}

/// Basis of `{x : m x = 0}`.
pub fn kernel_basis(ring: &Ring, m: &SparseMatrix) -> Vec<SparseVec> {
    let mut e = Echelon::new(ring);
    let mut kernel = Vec::new();
    for (j, c) in m.columns().iter().enumerate() {
        if let Some(combo) = e.insert(c) {
            kernel.push(SparseVec::unit(j, ring).sub(ring, &combo));
        }
    }
    kernel
}

/// Indices of a maximal set of independent columns, in column order.
pub fn pivot_columns(ring: &Ring, m: &SparseMatrix) -> Vec<usize> {
    let mut e = Echelon::new(ring);
    m.columns()
        .iter()
        .enumerate()
        .filter_map(|(j, c)| e.insert(c).is_none().then_some(j))
        .collect()
}

/// Some `x` with `m x = b`, or `None` when `b` is outside the column space.
pub fn solve(ring: &Ring, m: &SparseMatrix, b: &SparseVec) -> Option<SparseVec> {
    let mut e = Echelon::new(ring);
    for c in m.columns() {
        e.insert(c);
    }
    e.express(b)
}
