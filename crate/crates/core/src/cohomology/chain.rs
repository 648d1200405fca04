//! The tensor chain modules `K_n` (tuples of `n+2` basis elements), their
//! twisted boundary, the contracting homotopy and the outer contraction.

use rayon::prelude::*;

use crate::algebra::MetagroupAlgebra;
use crate::error::{Error, Result};
use crate::gmodule::outer_left;
use crate::linalg::{SparseMatrix, SparseVec};
use crate::ring::Scalar;
use crate::tuple;

/// Number of basis tuples of `K_n`; `K_{-1}` is the algebra itself.
pub fn chain_dim(algebra: &MetagroupAlgebra, n: isize) -> usize {
    tuple::count(algebra.dim(), (n + 2) as usize)
}

fn check_degree(n: usize, cap: usize) -> Result<()> {
    if n > cap {
        return Err(Error::CapExceeded(format!("degree {n} exceeds the cap {cap}")));
    }
    Ok(())
}

/// `∂` applied to one basis tuple of length `len ≥ 2`, as `(index, coefficient)` terms.
pub fn boundary_of_tuple(algebra: &MetagroupAlgebra, x: &[usize]) -> Vec<(usize, Scalar)> {
    let g = algebra.group();
    let ring = algebra.ring();
    let m = g.size();
    (0..x.len() - 1)
        .map(|j| {
            let (out, phase) = tuple::contraction_phase(g, x, j);
            let mut s = algebra.chi(phase).clone();
            if j % 2 == 1 {
                s = ring.neg(&s);
            }
            (tuple::encode(&out, m), s)
        })
        .collect()
}

/// `∂_n` applied to a vector of `K_n`.
pub fn boundary_apply(algebra: &MetagroupAlgebra, n: usize, v: &SparseVec) -> SparseVec {
    let m = algebra.dim();
    let ring = algebra.ring();
    let terms = v.iter().flat_map(|(i, c)| {
        boundary_of_tuple(algebra, &tuple::decode(*i, m, n + 2))
            .into_iter()
            .map(move |(k, s)| (k, ring.mul(c, &s)))
    });
    SparseVec::from_terms(ring, terms.collect::<Vec<_>>())
}

/// The matrix of `∂_n : K_n → K_{n−1}` (with `K_{−1} = A`, so `∂_0` is the
/// multiplication map).
pub fn boundary_matrix(algebra: &MetagroupAlgebra, n: usize, cap: usize) -> Result<SparseMatrix> {
    check_degree(n, cap)?;
    let m = algebra.dim();
    let ring = algebra.ring();
    let cols: Vec<SparseVec> = (0..tuple::count(m, n + 2))
        .into_par_iter()
        .map(|i| SparseVec::from_terms(ring, boundary_of_tuple(algebra, &tuple::decode(i, m, n + 2))))
        .collect();
    Ok(SparseMatrix::from_columns(tuple::count(m, n + 1), cols))
}

/// `s_n(x_0, .., x_{n+1}) = (1, x_0, .., x_{n+1})` for `n ≥ −1`.
pub fn homotopy_apply(algebra: &MetagroupAlgebra, n: isize, v: &SparseVec) -> SparseVec {
    let m = algebra.dim();
    let shift = algebra.group().unit() * tuple::count(m, (n + 2) as usize);
    v.reindex(|i| shift + i)
}

pub fn homotopy_s(algebra: &MetagroupAlgebra, n: isize) -> SparseMatrix {
    let ring = algebra.ring();
    let dim = chain_dim(algebra, n);
    let cols = (0..dim)
        .map(|i| homotopy_apply(algebra, n, &SparseVec::unit(i, ring)))
        .collect();
    SparseMatrix::from_columns(chain_dim(algebra, n + 1), cols)
}

/// `p_n : K_{n+1} → K_n`, `(y, x_0, .., x_{n+1}) ↦ y·(x_0, .., x_{n+1})`
/// with the outer left action on `K_n`.
pub fn contraction_p(algebra: &MetagroupAlgebra, n: usize) -> SparseMatrix {
    let m = algebra.dim();
    let len = n + 3;
    let cols = (0..tuple::count(m, len))
        .map(|i| {
            let x = tuple::decode(i, m, len);
            let (idx, s) = outer_left(algebra, x[0], &x[1..]);
            SparseVec::single(idx, s)
        })
        .collect();
    SparseMatrix::from_columns(tuple::count(m, len - 1), cols)
}

/// First basis tuple of `K_{n+1}` on which `∂_n ∂_{n+1}` is nonzero.
pub fn boundary_squared_witness(algebra: &MetagroupAlgebra, n: usize) -> Option<Vec<usize>> {
    let m = algebra.dim();
    let ring = algebra.ring();
    let len = n + 3;
    (0..tuple::count(m, len)).into_par_iter().find_first(|&i| {
        let d = boundary_apply(algebra, n + 1, &SparseVec::unit(i, ring));
        !boundary_apply(algebra, n, &d).is_zero()
    })
    .map(|i| tuple::decode(i, m, len))
}

/// First basis tuple of `K_n` on which `∂_{n+1}s_n + s_{n−1}∂_n ≠ id`.
pub fn homotopy_witness(algebra: &MetagroupAlgebra, n: usize) -> Option<Vec<usize>> {
    let m = algebra.dim();
    let ring = algebra.ring();
    let len = n + 2;
    (0..tuple::count(m, len)).into_par_iter().find_first(|&i| {
        let x = SparseVec::unit(i, ring);
        let a = boundary_apply(algebra, n + 1, &homotopy_apply(algebra, n as isize, &x));
        let b = homotopy_apply(algebra, n as isize - 1, &boundary_apply(algebra, n, &x));
        a.add(ring, &b) != x
    })
    .map(|i| tuple::decode(i, m, len))
}
