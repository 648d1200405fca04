//! Reference implementations written without the library's linear algebra,
//! tuple encoding or twisted formulas. They work on dense matrices and plain
//! structure constants and are only meant for small inputs.

#![allow(dead_code, clippy::needless_range_loop)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Structure constants of an algebra with a monomial basis:
/// `e_a e_b = sign[a][b] · e_{index[a][b]}`.
#[derive(Clone, Debug)]
pub struct Monomial {
    pub index: Vec<Vec<usize>>,
    pub sign: Vec<Vec<i64>>,
}

impl Monomial {
    pub fn dim(&self) -> usize {
        self.index.len()
    }

    pub fn is_associative(&self) -> bool {
        let m = self.dim();
        (0..m).all(|a| {
            (0..m).all(|b| {
                (0..m).all(|c| {
                    let ab = self.index[a][b];
                    let bc = self.index[b][c];
                    self.index[ab][c] == self.index[a][bc]
                        && self.sign[a][b] * self.sign[ab][c] == self.sign[b][c] * self.sign[a][bc]
                })
            })
        })
    }
}

/// All tuples of length `n` over `0..m` in lexicographic order (first entry
/// most significant).
pub fn tuples(m: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..m).map(move |x| {
                    let mut t = t.clone();
                    t.push(x);
                    t
                })
            })
            .collect();
    }
    out
}

fn position(t: &[usize], m: usize) -> usize {
    t.iter().fold(0, |acc, &x| acc * m + x)
}

/// The untwisted Hochschild coboundary `C^n(A, A) → C^{n+1}(A, A)` of an
/// associative monomial algebra with values in the regular bimodule.
/// Coordinates: `(tuple position) · m + (basis index of the value)`.
pub fn hochschild_coboundary(alg: &Monomial, n: usize) -> Vec<Vec<i64>> {
    let m = alg.dim();
    let rows = m.pow(n as u32 + 1) * m;
    let cols = m.pow(n as u32) * m;
    let mut d = vec![vec![0i64; cols]; rows];
    for x in tuples(m, n + 1) {
        let row_base = position(&x, m) * m;
        for k in 0..m {
            // x_1 · f(x_2, .., x_{n+1}): the value f(..) = e_k is multiplied on the left
            let c = position(&x[1..], m) * m + k;
            let target = alg.index[x[0]][k];
            d[row_base + target][c] += alg.sign[x[0]][k];
            // f(x_1, .., x_n) · x_{n+1}
            let c = position(&x[..n], m) * m + k;
            let target = alg.index[k][x[n]];
            let s = if (n + 1).is_multiple_of(2) { 1 } else { -1 };
            d[row_base + target][c] += s * alg.sign[k][x[n]];
            // inner contractions
            for j in 0..n {
                let mut y: Vec<usize> = x[..j].to_vec();
                y.push(alg.index[x[j]][x[j + 1]]);
                y.extend_from_slice(&x[j + 2..]);
                let s = if (j + 1) % 2 == 0 { 1 } else { -1 };
                let c = position(&y, m) * m + k;
                d[row_base + k][c] += s * alg.sign[x[j]][x[j + 1]];
            }
        }
    }
    d
}

/// Rank over the rationals by fraction-based Gaussian elimination.
pub fn rank_q(matrix: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<BigRational>> = matrix
        .iter()
        .map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect())
        .collect();
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !a[r][c].is_zero()) else { continue };
        a.swap(rank, p);
        for r in 0..rows {
            if r != rank && !a[r][c].is_zero() {
                let factor = &a[r][c] / &a[rank][c];
                for k in c..cols {
                    let sub = &factor * &a[rank][k];
                    a[r][k] -= sub;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Rank over `F_p` for a prime `p`.
pub fn rank_mod_p(matrix: &[Vec<i64>], p: i64) -> usize {
    let mut a: Vec<Vec<i64>> = matrix
        .iter()
        .map(|r| r.iter().map(|&x| x.rem_euclid(p)).collect())
        .collect();
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let inv = |x: i64| -> i64 {
        // Fermat inverse
        let mut result = 1i64;
        let mut base = x;
        let mut e = p - 2;
        while e > 0 {
            if e & 1 == 1 {
                result = result * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        result
    };
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows).find(|&r| a[r][c] != 0) else { continue };
        a.swap(rank, piv);
        let iv = inv(a[rank][c]);
        for r in 0..rows {
            if r != rank && a[r][c] != 0 {
                let factor = a[r][c] * iv % p;
                for k in c..cols {
                    a[r][k] = (a[r][k] - factor * a[rank][k]).rem_euclid(p);
                }
            }
        }
        rank += 1;
    }
    rank
}

/// `dim H^n = dim ker δ^n − rank δ^{n−1}` from dense coboundaries over `ℚ`
/// (`p = None`) or `F_p`.
pub fn hochschild_dimension(alg: &Monomial, n: usize, p: Option<i64>) -> usize {
    let rank = |d: &[Vec<i64>]| match p {
        Some(p) => rank_mod_p(d, p),
        None => rank_q(d),
    };
    let m = alg.dim();
    let dim_c = m.pow(n as u32) * m;
    let kernel = dim_c - rank(&hochschild_coboundary(alg, n));
    let image = if n == 0 { 0 } else { rank(&hochschild_coboundary(alg, n - 1)) };
    kernel - image
}

/// Determinant of a square integer matrix by fraction-free (Bareiss) elimination.
pub fn determinant(matrix: &[Vec<BigInt>]) -> BigInt {
    let n = matrix.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a = matrix.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Invariant factors `d_k / d_{k−1}` from the determinantal divisors `d_k`
/// (gcd of all `k × k` minors). Zero rows and columns are dropped first.
pub fn determinantal_invariants(matrix: &[Vec<i64>]) -> Vec<BigInt> {
    let rows: Vec<usize> = (0..matrix.len()).filter(|&r| matrix[r].iter().any(|&x| x != 0)).collect();
    let ncols = matrix.first().map_or(0, |r| r.len());
    let cols: Vec<usize> = (0..ncols).filter(|&c| rows.iter().any(|&r| matrix[r][c] != 0)).collect();
    let rank = rank_q(&rows.iter().map(|&r| cols.iter().map(|&c| matrix[r][c]).collect()).collect::<Vec<_>>());
    let mut divisors = vec![BigInt::one()];
    for k in 1..=rank {
        let mut g = BigInt::zero();
        'outer: for rs in subsets(rows.len(), k) {
            for cs in subsets(cols.len(), k) {
                let minor: Vec<Vec<BigInt>> = rs
                    .iter()
                    .map(|&r| cs.iter().map(|&c| BigInt::from(matrix[rows[r]][cols[c]])).collect())
                    .collect();
                g = g.gcd(&determinant(&minor));
                // the gcd can only shrink to the previous divisor's multiples
                if g == divisors[k - 1] {
                    break 'outer;
                }
            }
        }
        divisors.push(g.abs());
    }
    divisors.windows(2).map(|w| &w[1] / &w[0]).collect()
}

/// Cayley-Dickson product on coefficient vectors of length `2^level`:
/// `(a + b·l)(c + d·l) = (ac − f_level · d̄b) + (da + b·c̄)·l`.
pub fn cd_multiply(signs: &[i64], x: &[BigRational], y: &[BigRational]) -> Vec<BigRational> {
    let n = x.len();
    if n == 1 {
        return vec![&x[0] * &y[0]];
    }
    let h = n / 2;
    let f = BigRational::from_integer(signs[signs.len() - 1].into());
    let lower = &signs[..signs.len() - 1];
    let (a, b) = x.split_at(h);
    let (c, d) = y.split_at(h);
    let ac = cd_multiply(lower, a, c);
    let dbar_b = cd_multiply(lower, &cd_conjugate(d), b);
    let da = cd_multiply(lower, d, a);
    let b_cbar = cd_multiply(lower, b, &cd_conjugate(c));
    let mut out: Vec<BigRational> = ac.iter().zip(&dbar_b).map(|(p, q)| p - &f * q).collect();
    out.extend(da.iter().zip(&b_cbar).map(|(p, q)| p + q));
    out
}

pub fn cd_conjugate(x: &[BigRational]) -> Vec<BigRational> {
    x.iter()
        .enumerate()
        .map(|(i, c)| if i == 0 { c.clone() } else { -c.clone() })
        .collect()
}

pub fn cd_norm(x: &[BigRational]) -> BigRational {
    x.iter().map(|c| c * c).fold(BigRational::zero(), |a, b| a + b)
}
