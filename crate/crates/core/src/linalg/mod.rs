//! Exact linear algebra: sparse vectors/matrices, field elimination, and
//! Smith normal form over the integers.

pub mod elim;
pub mod snf;
pub mod sparse;

pub use elim::{kernel_basis, pivot_columns, rank, solve, Echelon};
pub use snf::{smith_normal_form, solve_integer, SmithForm};
pub use sparse::{SparseMatrix, SparseVec};

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::ring::{Ring, Scalar};

/// Dense integer copy of a sparse matrix whose entries are all integral.
pub fn to_integer_rows(m: &SparseMatrix) -> Result<Vec<Vec<BigInt>>> {
    let mut rows = vec![vec![BigInt::from(0); m.ncols()]; m.nrows()];
    for (j, c) in m.columns().iter().enumerate() {
        for (i, v) in c.iter() {
            if !v.is_integer() {
                return Err(Error::BadInput(format!("non-integral entry {v}")));
            }
            rows[*i][j] = v.to_integer();
        }
    }
    Ok(rows)
}

/// Rank of `m` over the ring's fraction field (or the field itself).
pub fn rank_over(ring: &Ring, m: &SparseMatrix) -> usize {
    match ring {
        Ring::Integers => rank(&Ring::Rationals, m),
        _ => rank(ring, m),
    }
}

/// Solve `m x = b` exactly in `ring` (integer solutions for `Z`).
pub fn solve_in(ring: &Ring, m: &SparseMatrix, b: &SparseVec) -> Result<Option<SparseVec>> {
    match ring {
        Ring::Integers => {
            let rows = to_integer_rows(m)?;
            let rhs: Vec<BigInt> = b.to_dense(m.nrows()).into_iter().map(|x| x.to_integer()).collect();
            Ok(solve_integer(&rows, m.ncols(), &rhs).map(|x| {
                let dense: Vec<Scalar> = x.into_iter().map(Scalar::from_integer).collect();
                SparseVec::from_dense(&dense)
            }))
        }
        _ => Ok(solve(ring, m, b)),
    }
}
