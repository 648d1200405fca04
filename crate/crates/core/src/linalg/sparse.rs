//! Sparse vectors and column-major sparse matrices over a [`Ring`].

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::ring::{Ring, Scalar};

/// Sorted `(index, value)` pairs with no stored zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SparseVec {
    entries: Vec<(usize, Scalar)>,
}

impl SparseVec {
    pub fn new() -> SparseVec {
        SparseVec::default()
    }

    pub fn unit(index: usize, ring: &Ring) -> SparseVec {
        SparseVec {
            entries: vec![(index, ring.one())],
        }
    }

    pub fn single(index: usize, value: Scalar) -> SparseVec {
        if value.is_zero() {
            SparseVec::new()
        } else {
            SparseVec {
                entries: vec![(index, value)],
            }
        }
    }

    /// Sums duplicate indices and drops zeros.
    pub fn from_terms<I>(ring: &Ring, terms: I) -> SparseVec
    where
        I: IntoIterator<Item = (usize, Scalar)>,
    {
        let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
        for (i, v) in terms {
            let slot = acc.entry(i).or_insert_with(Scalar::zero);
            *slot = ring.add(slot, &v);
        }
        SparseVec {
            entries: acc.into_iter().filter(|(_, v)| !v.is_zero()).collect(),
        }
    }

    pub fn from_dense(values: &[Scalar]) -> SparseVec {
        SparseVec {
            entries: values
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(i, v)| (i, v.clone()))
                .collect(),
        }
    }

    pub fn to_dense(&self, len: usize) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); len];
        for (i, v) in &self.entries {
            out[*i] = v.clone();
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = &(usize, Scalar)> {
        self.entries.iter()
    }

    pub fn get(&self, index: usize) -> Scalar {
        match self.entries.binary_search_by_key(&index, |(i, _)| *i) {
            Ok(pos) => self.entries[pos].1.clone(),
            Err(_) => Scalar::zero(),
        }
    }

    pub fn leading(&self) -> Option<&(usize, Scalar)> {
        self.entries.first()
    }

    pub fn max_index(&self) -> Option<usize> {
        self.entries.last().map(|(i, _)| *i)
    }

    pub fn scale(&self, ring: &Ring, c: &Scalar) -> SparseVec {
        if c.is_zero() {
            return SparseVec::new();
        }
        SparseVec {
            entries: self
                .entries
                .iter()
                .map(|(i, v)| (*i, ring.mul(v, c)))
                .filter(|(_, v)| !v.is_zero())
                .collect(),
        }
    }

    /// `self + c * other`, merging sorted lists.
    pub fn axpy(&self, ring: &Ring, c: &Scalar, other: &SparseVec) -> SparseVec {
        if c.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut a, mut b) = (self.entries.iter().peekable(), other.entries.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some((ia, va)), Some((ib, vb))) => {
                    if ia < ib {
                        out.push((*ia, va.clone()));
                        a.next();
                    } else if ib < ia {
                        out.push((*ib, ring.mul(c, vb)));
                        b.next();
                    } else {
                        let v = ring.add(va, &ring.mul(c, vb));
                        if !v.is_zero() {
                            out.push((*ia, v));
                        }
                        a.next();
                        b.next();
                    }
                }
                (Some((ia, va)), None) => {
                    out.push((*ia, va.clone()));
                    a.next();
                }
                (None, Some((ib, vb))) => {
                    out.push((*ib, ring.mul(c, vb)));
                    b.next();
                }
                (None, None) => break,
            }
        }
        out.retain(|(_, v)| !v.is_zero());
        SparseVec { entries: out }
    }

    pub fn add(&self, ring: &Ring, other: &SparseVec) -> SparseVec {
        self.axpy(ring, &ring.one(), other)
    }

    pub fn sub(&self, ring: &Ring, other: &SparseVec) -> SparseVec {
        self.axpy(ring, &ring.from_i64(-1), other)
    }

    /// Applies an index map, e.g. when embedding into a direct sum.
    pub fn reindex(&self, f: impl Fn(usize) -> usize) -> SparseVec {
        let mut entries: Vec<(usize, Scalar)> =
            self.entries.iter().map(|(i, v)| (f(*i), v.clone())).collect();
        entries.sort_by_key(|(i, _)| *i);
        SparseVec { entries }
    }

    /// Keeps only indices inside `range` and shifts them down to start at 0.
    pub fn restrict(&self, range: std::ops::Range<usize>) -> SparseVec {
        SparseVec {
            entries: self
                .entries
                .iter()
                .filter(|(i, _)| range.contains(i))
                .map(|(i, v)| (i - range.start, v.clone()))
                .collect(),
        }
    }
}

/// Column-major sparse matrix; column `j` is the image of basis vector `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    nrows: usize,
    cols: Vec<SparseVec>,
}

impl SparseMatrix {
    pub fn zero(nrows: usize, ncols: usize) -> SparseMatrix {
        SparseMatrix {
            nrows,
            cols: vec![SparseVec::new(); ncols],
        }
    }

    pub fn identity(n: usize, ring: &Ring) -> SparseMatrix {
        SparseMatrix {
            nrows: n,
            cols: (0..n).map(|i| SparseVec::unit(i, ring)).collect(),
        }
    }

    pub fn from_columns(nrows: usize, cols: Vec<SparseVec>) -> SparseMatrix {
        debug_assert!(cols.iter().all(|c| c.max_index().is_none_or(|i| i < nrows)));
        SparseMatrix { nrows, cols }
    }

    /// Assembles from `(row, col, value)` triplets, summing duplicates.
    pub fn from_triplets<I>(ring: &Ring, nrows: usize, ncols: usize, triplets: I) -> SparseMatrix
    where
        I: IntoIterator<Item = (usize, usize, Scalar)>,
    {
        let mut buckets: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); ncols];
        for (r, c, v) in triplets {
            debug_assert!(r < nrows && c < ncols);
            buckets[c].push((r, v));
        }
        SparseMatrix {
            nrows,
            cols: buckets
                .into_iter()
                .map(|b| SparseVec::from_terms(ring, b))
                .collect(),
        }
    }

    pub fn from_dense(rows: &[Vec<Scalar>], ncols: usize) -> SparseMatrix {
        let nrows = rows.len();
        let cols = (0..ncols)
            .map(|j| {
                let column: Vec<Scalar> = rows.iter().map(|r| r[j].clone()).collect();
                SparseVec::from_dense(&column)
            })
            .collect();
        SparseMatrix { nrows, cols }
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn column(&self, j: usize) -> &SparseVec {
        &self.cols[j]
    }

    pub fn columns(&self) -> &[SparseVec] {
        &self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> Scalar {
        self.cols[j].get(i)
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(SparseVec::nnz).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(SparseVec::is_zero)
    }

    /// First nonzero entry as `(row, col, value)`.
    pub fn first_nonzero(&self) -> Option<(usize, usize, Scalar)> {
        self.cols
            .iter()
            .enumerate()
            .find_map(|(j, c)| c.leading().map(|(i, v)| (*i, j, v.clone())))
    }

    pub fn apply(&self, ring: &Ring, v: &SparseVec) -> SparseVec {
        let mut acc = SparseVec::new();
        for (j, c) in v.iter() {
            acc = acc.axpy(ring, c, &self.cols[*j]);
        }
        acc
    }

    /// `self * rhs` (apply `rhs` first).
    pub fn compose(&self, ring: &Ring, rhs: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.ncols(), rhs.nrows, "composition dimension mismatch");
        SparseMatrix {
            nrows: self.nrows,
            cols: rhs.cols.iter().map(|c| self.apply(ring, c)).collect(),
        }
    }

    pub fn add(&self, ring: &Ring, rhs: &SparseMatrix) -> SparseMatrix {
        assert_eq!((self.nrows, self.ncols()), (rhs.nrows, rhs.ncols()));
        SparseMatrix {
            nrows: self.nrows,
            cols: self
                .cols
                .iter()
                .zip(&rhs.cols)
                .map(|(a, b)| a.add(ring, b))
                .collect(),
        }
    }

    pub fn sub(&self, ring: &Ring, rhs: &SparseMatrix) -> SparseMatrix {
        assert_eq!((self.nrows, self.ncols()), (rhs.nrows, rhs.ncols()));
        SparseMatrix {
            nrows: self.nrows,
            cols: self
                .cols
                .iter()
                .zip(&rhs.cols)
                .map(|(a, b)| a.sub(ring, b))
                .collect(),
        }
    }

    pub fn scale(&self, ring: &Ring, c: &Scalar) -> SparseMatrix {
        SparseMatrix {
            nrows: self.nrows,
            cols: self.cols.iter().map(|col| col.scale(ring, c)).collect(),
        }
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut rows: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); self.nrows];
        for (j, c) in self.cols.iter().enumerate() {
            for (i, v) in c.iter() {
                rows[*i].push((j, v.clone()));
            }
        }
        SparseMatrix {
            nrows: self.ncols(),
            cols: rows
                .into_iter()
                .map(|entries| SparseVec { entries })
                .collect(),
        }
    }

    /// Dense row-major copy.
    pub fn to_dense(&self) -> Vec<Vec<Scalar>> {
        let mut rows = vec![vec![Scalar::zero(); self.ncols()]; self.nrows];
        for (j, c) in self.cols.iter().enumerate() {
            for (i, v) in c.iter() {
                rows[*i][j] = v.clone();
            }
        }
        rows
    }

    /// Block-diagonal sum `self ⊕ other`.
    pub fn direct_sum(&self, other: &SparseMatrix) -> SparseMatrix {
        let shift = self.nrows;
        let mut cols = self.cols.clone();
        cols.extend(other.cols.iter().map(|c| c.reindex(|i| i + shift)));
        SparseMatrix {
            nrows: self.nrows + other.nrows,
            cols,
        }
    }
}
