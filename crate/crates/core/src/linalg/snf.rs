//! Smith normal form of dense integer matrices.
//!
//! Pivots are chosen by minimal absolute value over the active block; ties
//! resolve to the first in row-major order, so results are deterministic.
//! Transforms are tracked so that `left · A · right = diag(d_1, .., d_r, 0..)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    /// Nonzero invariant factors, positive, each dividing the next.
    pub invariants: Vec<BigInt>,
    /// Unimodular row transform (`nrows × nrows`).
    pub left: Vec<Vec<BigInt>>,
    /// Unimodular column transform (`ncols × ncols`).
    pub right: Vec<Vec<BigInt>>,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.invariants.len()
    }

    /// Invariant factors different from one.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.invariants.iter().filter(|d| !d.is_one()).cloned().collect()
    }
}

fn identity(n: usize) -> Vec<Vec<BigInt>> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect()
}

struct Work {
    a: Vec<Vec<BigInt>>,
    u: Vec<Vec<BigInt>>,
    v: Vec<Vec<BigInt>>,
}

impl Work {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap(i, j);
        self.u.swap(i, j);
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        for row in self.a.iter_mut().chain(self.v.iter_mut()) {
            row.swap(i, j);
        }
    }

    /// row_i -= q * row_j
    fn row_axpy(&mut self, i: usize, j: usize, q: &BigInt) {
        for m in [&mut self.a, &mut self.u] {
            let src = m[j].clone();
            for (x, s) in m[i].iter_mut().zip(src) {
                *x -= q * s;
            }
        }
    }

    /// col_i -= q * col_j
    fn col_axpy(&mut self, i: usize, j: usize, q: &BigInt) {
        for m in [&mut self.a, &mut self.v] {
            for row in m.iter_mut() {
                let s = row[j].clone();
                row[i] -= q * s;
            }
        }
    }

    fn negate_row(&mut self, i: usize) {
        for m in [&mut self.a, &mut self.u] {
            for x in m[i].iter_mut() {
                *x = -x.clone();
            }
        }
    }
}

pub fn smith_normal_form(a: &[Vec<BigInt>], ncols: usize) -> SmithForm {
    let nrows = a.len();
    let mut w = Work {
        a: a.to_vec(),
        u: identity(nrows),
        v: identity(ncols),
    };
    let mut t = 0;
    while t < nrows.min(ncols) {
        // minimal nonzero pivot in the active block
        let mut best: Option<(usize, usize)> = None;
        for i in t..nrows {
            for j in t..ncols {
                if w.a[i][j].is_zero() {
                    continue;
                }
                if best.is_none_or(|(bi, bj)| w.a[i][j].abs() < w.a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);
        loop {
            let mut dirty = false;
            for i in t + 1..nrows {
                if w.a[i][t].is_zero() {
                    continue;
                }
                let q = w.a[i][t].div_floor(&w.a[t][t]);
                w.row_axpy(i, t, &q);
                if !w.a[i][t].is_zero() {
                    w.swap_rows(t, i);
                    dirty = true;
                }
            }
            for j in t + 1..ncols {
                if w.a[t][j].is_zero() {
                    continue;
                }
                let q = w.a[t][j].div_floor(&w.a[t][t]);
                w.col_axpy(j, t, &q);
                if !w.a[t][j].is_zero() {
                    w.swap_cols(t, j);
                    dirty = true;
                }
            }
            if dirty {
                continue;
            }
            // divisibility of the remaining block by the pivot
            let pivot = w.a[t][t].clone();
            let offender = (t + 1..nrows)
                .find(|&i| (t + 1..ncols).any(|j| !(&w.a[i][j] % &pivot).is_zero()));
            match offender {
                Some(i) => w.row_axpy(t, i, &BigInt::from(-1)),
                None => break,
            }
        }
        if w.a[t][t].is_negative() {
            w.negate_row(t);
        }
        t += 1;
    }
    let invariants = (0..t).map(|i| w.a[i][i].clone()).collect();
    SmithForm {
        invariants,
        left: w.u,
        right: w.v,
    }
}

fn mat_vec(m: &[Vec<BigInt>], x: &[BigInt]) -> Vec<BigInt> {
    m.iter()
        .map(|row| row.iter().zip(x).map(|(a, b)| a * b).sum())
        .collect()
}

/// Integer solution of `a x = b`, if one exists.
pub fn solve_integer(a: &[Vec<BigInt>], ncols: usize, b: &[BigInt]) -> Option<Vec<BigInt>> {
    let snf = smith_normal_form(a, ncols);
    let ub = mat_vec(&snf.left, b);
    let mut y = vec![BigInt::zero(); ncols];
    for (i, value) in ub.iter().enumerate() {
        match snf.invariants.get(i) {
            Some(d) => {
                let (q, r) = value.div_rem(d);
                if !r.is_zero() {
                    return None;
                }
                y[i] = q;
            }
            None if !value.is_zero() => return None,
            None => {}
        }
    }
    Some(mat_vec(&snf.right, &y))
}
