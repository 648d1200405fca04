//! Cochains with values in a graded bimodule and the twisted coboundary.
//!
//! A cochain of degree `n` assigns a module vector to each `n`-tuple of basis
//! elements. With [`Support::Graded`] the value at `(x_1, .., x_n)` is
//! restricted to the graded part `M_{x_1⋯x_n}`; with [`Support::Full`] it is
//! unrestricted.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gmodule::{head_phase, GradedBimodule};
use crate::linalg::{SparseMatrix, SparseVec};
use crate::ring::{Ring, Scalar};
use crate::tuple;

/// Largest cochain space (coordinates) assembled before giving up.
pub const MAX_COCHAIN_DIM: usize = 1 << 22;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Support {
    Full,
    Graded,
    /// `Full` for associative metagroups, `Graded` otherwise.
    Auto,
}

impl Support {
    pub fn resolve(self, module: &GradedBimodule) -> Support {
        match self {
            Support::Auto if module.algebra().group().is_associative() => Support::Full,
            Support::Auto => Support::Graded,
            s => s,
        }
    }
}

impl std::fmt::Display for Support {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Support::Full => "full",
            Support::Graded => "graded",
            Support::Auto => "auto",
        })
    }
}

impl std::str::FromStr for Support {
    type Err = Error;

    fn from_str(s: &str) -> Result<Support> {
        match s {
            "full" => Ok(Support::Full),
            "graded" => Ok(Support::Graded),
            "auto" => Ok(Support::Auto),
            _ => Err(Error::BadInput(format!("unknown support `{s}`"))),
        }
    }
}

/// Coordinates of degree-`n` cochains: for each tuple, the module basis
/// indices allowed by the support.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CochainSpace {
    m: usize,
    degree: usize,
    support: Support,
    offsets: Vec<usize>,
    components: Vec<Vec<usize>>,
}

impl CochainSpace {
    pub fn new(module: &GradedBimodule, degree: usize, support: Support) -> Result<CochainSpace> {
        let support = support.resolve(module);
        let g = module.algebra().group();
        let m = g.size();
        let nt = tuple::count(m, degree);
        if nt.saturating_mul(module.dim()) > MAX_COCHAIN_DIM {
            return Err(Error::CapExceeded(format!(
                "{nt} tuples times module dimension {} is too large",
                module.dim()
            )));
        }
        let by_grade: Vec<Vec<usize>> = (0..m).map(|h| module.graded_part(h)).collect();
        let all: Vec<usize> = (0..module.dim()).collect();
        let components: Vec<Vec<usize>> = (0..nt)
            .map(|t| match support {
                Support::Graded => by_grade[tuple::product(g, &tuple::decode(t, m, degree)).0].clone(),
                _ => all.clone(),
            })
            .collect();
        let mut offsets = Vec::with_capacity(nt + 1);
        let mut acc = 0;
        for c in &components {
            offsets.push(acc);
            acc += c.len();
        }
        offsets.push(acc);
        Ok(CochainSpace {
            m,
            degree,
            support,
            offsets,
            components,
        })
    }

    pub fn dim(&self) -> usize {
        *self.offsets.last().expect("nonempty offsets")
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn support(&self) -> Support {
        self.support
    }

    pub fn tuples(&self) -> usize {
        self.components.len()
    }

    pub fn tuple(&self, t: usize) -> Vec<usize> {
        tuple::decode(t, self.m, self.degree)
    }

    /// Coordinate of module basis vector `k` at tuple `t`, if supported.
    pub fn index(&self, t: usize, k: usize) -> Option<usize> {
        self.components[t]
            .binary_search(&k)
            .ok()
            .map(|pos| self.offsets[t] + pos)
    }

    /// Tuple and module index of a coordinate.
    pub fn locate(&self, idx: usize) -> (usize, usize) {
        let t = self.offsets.partition_point(|&o| o <= idx) - 1;
        (t, self.components[t][idx - self.offsets[t]])
    }

    /// The value of a cochain at tuple `t` as a module vector.
    pub fn value(&self, f: &SparseVec, t: usize) -> SparseVec {
        let range = self.offsets[t]..self.offsets[t + 1];
        let comps = &self.components[t];
        f.restrict(range).reindex(|i| comps[i])
    }

    /// Assembles a cochain from its values; fails if a value leaves the support.
    pub fn from_values(&self, ring: &Ring, values: impl Fn(&[usize]) -> SparseVec) -> Result<SparseVec> {
        let mut terms = Vec::new();
        for t in 0..self.tuples() {
            let x = self.tuple(t);
            for (k, c) in values(&x).iter() {
                let idx = self.index(t, *k).ok_or_else(|| {
                    Error::DimensionMismatch(format!("value at {x:?} leaves the {} support", self.support))
                })?;
                terms.push((idx, c.clone()));
            }
        }
        Ok(SparseVec::from_terms(ring, terms))
    }
}

/// `δ^n f` at one argument tuple `x = (x_1, .., x_{n+1})`, expressed as
/// `(module index, cochain coordinate, coefficient)` triplets: the value of
/// `δf` at `x` in module direction `k` picks up `coefficient · f[coordinate]`.
fn coboundary_row_terms(
    module: &GradedBimodule,
    src: &CochainSpace,
    x: &[usize],
) -> Vec<(usize, usize, Scalar)> {
    let alg = module.algebra();
    let g = alg.group();
    let ring = alg.ring();
    let m = g.size();
    let n = x.len() - 1;
    let mut out = Vec::new();
    let w = tuple::product(g, x).1;
    // j = 0: t(x; l, u_1) · x_1·f(x_2, ..)
    {
        let y = &x[1..];
        let t = tuple::encode(y, m);
        let c0 = alg.chi(g.sub_phase(w, head_phase(alg, x[0], y)));
        let left = module.left_matrix(x[0]);
        for (pos, &i) in src.components[t].iter().enumerate() {
            for (k, a) in left.column(i).iter() {
                out.push((*k, src.offsets[t] + pos, ring.mul(c0, a)));
            }
        }
    }
    // j = 1..n: (−1)^j t(x; l, u_{j+1}) · f(.., x_j x_{j+1}, ..)
    for j in 1..=n {
        let (y, phase) = tuple::contraction_phase(g, x, j - 1);
        let t = tuple::encode(&y, m);
        let mut c = alg.chi(phase).clone();
        if j % 2 == 1 {
            c = ring.neg(&c);
        }
        for (pos, &i) in src.components[t].iter().enumerate() {
            out.push((i, src.offsets[t] + pos, c.clone()));
        }
    }
    // j = n+1: (−1)^{n+1} f(x_1, .., x_n)·x_{n+1}
    {
        let y = &x[..n];
        let t = tuple::encode(y, m);
        let sign = if (n + 1) % 2 == 1 { ring.from_i64(-1) } else { ring.one() };
        let right = module.right_matrix(x[n]).expect("two-sided module");
        for (pos, &i) in src.components[t].iter().enumerate() {
            for (k, a) in right.column(i).iter() {
                out.push((*k, src.offsets[t] + pos, ring.mul(&sign, a)));
            }
        }
    }
    out
}

/// The matrix of `δ^n : C^n → C^{n+1}` on the chosen support.
pub fn coboundary_matrix(module: &GradedBimodule, n: usize, support: Support) -> Result<SparseMatrix> {
    if !module.is_two_sided() {
        return Err(Error::DimensionMismatch("coboundary needs a two-sided module".into()));
    }
    let src = CochainSpace::new(module, n, support)?;
    let dst = CochainSpace::new(module, n + 1, support)?;
    let m = module.algebra().dim();
    let ring = module.ring();
    let rows: Vec<Result<Vec<(usize, usize, Scalar)>>> = (0..dst.tuples())
        .into_par_iter()
        .map(|xt| {
            let x = tuple::decode(xt, m, n + 1);
            let terms = coboundary_row_terms(module, &src, &x);
            // sum duplicates per (k, col) before checking support
            let mut acc: std::collections::BTreeMap<(usize, usize), Scalar> = Default::default();
            for (k, col, c) in terms {
                let e = acc.entry((k, col)).or_insert_with(|| ring.zero());
                *e = ring.add(e, &c);
            }
            let mut out = Vec::new();
            for ((k, col), c) in acc {
                if c == ring.zero() {
                    continue;
                }
                let row = dst.index(xt, k).ok_or_else(|| {
                    Error::NotAComplex(format!(
                        "coboundary of a {} cochain leaves the support at {x:?}",
                        dst.support
                    ))
                })?;
                out.push((row, col, c));
            }
            Ok(out)
        })
        .collect();
    let mut triplets = Vec::new();
    for r in rows {
        triplets.extend(r?);
    }
    Ok(SparseMatrix::from_triplets(ring, dst.dim(), src.dim(), triplets))
}

/// Direct evaluation of `δ^n f` for a cochain on the given space.
pub fn coboundary(module: &GradedBimodule, space: &CochainSpace, f: &SparseVec) -> Result<SparseVec> {
    Ok(coboundary_matrix(module, space.degree(), space.support())?.apply(module.ring(), f))
}

/// First argument tuple where `δ^{n+1} δ^n` is nonzero, if any.
pub fn complex_witness(module: &GradedBimodule, n: usize, support: Support) -> Result<Option<Vec<usize>>> {
    let d0 = coboundary_matrix(module, n, support)?;
    let d1 = coboundary_matrix(module, n + 1, support)?;
    let dd = d1.compose(module.ring(), &d0);
    let space = CochainSpace::new(module, n + 2, support)?;
    Ok(dd.first_nonzero().map(|(row, _, _)| space.tuple(space.locate(row).0)))
}
