//! Cocycles, coboundaries and cohomology groups.

use num_bigint::BigInt;

use crate::cohomology::cochain::{coboundary_matrix, complex_witness, CochainSpace, Support};
use crate::error::{Error, Result};
use crate::gmodule::GradedBimodule;
use crate::linalg::{self, Echelon, SparseMatrix, SparseVec};
use crate::ring::Ring;

/// Largest dense integer matrix (entries) handed to Smith normal form.
pub const MAX_DENSE_INTEGER_ENTRIES: usize = 1 << 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyGroup {
    pub degree: usize,
    pub ring: String,
    pub support: Support,
    pub dim_z: usize,
    pub dim_b: usize,
    /// Dimension over a field, free rank over the integers.
    pub rank: usize,
    /// Invariant factors different from one (integers only).
    pub torsion: Vec<BigInt>,
    /// Cocycles whose classes form a basis (fields only).
    pub representatives: Vec<SparseVec>,
}

/// Result of a cocycle test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CocycleCheck {
    pub is_cocycle: bool,
    /// First argument tuple where `δf` does not vanish.
    pub witness: Option<Vec<usize>>,
}

/// The complex `C^{n−1} → C^n → C^{n+1}` around degree `n`.
pub struct Neighborhood {
    pub space: CochainSpace,
    pub incoming: Option<SparseMatrix>,
    pub outgoing: SparseMatrix,
}

fn check_degree(n: usize, cap: usize) -> Result<()> {
    if n > cap {
        return Err(Error::CapExceeded(format!("degree {n} exceeds the cap {cap}")));
    }
    Ok(())
}

/// Builds `δ^{n−1}` and `δ^n`, refusing supports on which they do not compose to zero.
pub fn neighborhood(module: &GradedBimodule, n: usize, support: Support) -> Result<Neighborhood> {
    let space = CochainSpace::new(module, n, support)?;
    let outgoing = coboundary_matrix(module, n, support)?;
    let incoming = if n == 0 {
        None
    } else {
        let d = coboundary_matrix(module, n - 1, support)?;
        let dd = outgoing.compose(module.ring(), &d);
        if let Some((row, _, _)) = dd.first_nonzero() {
            let next = CochainSpace::new(module, n + 1, support)?;
            let t = next.tuple(next.locate(row).0);
            let labels: Vec<&str> = t.iter().map(|&b| module.algebra().group().label(b)).collect();
            return Err(Error::NotAComplex(format!(
                "δ^{n}∘δ^{} ≠ 0 on {} cochains, first at ({})",
                n - 1,
                space.support(),
                labels.join(", ")
            )));
        }
        Some(d)
    };
    Ok(Neighborhood {
        space,
        incoming,
        outgoing,
    })
}

/// `H^n(A, M)` on the chosen support.
pub fn cohomology_group(module: &GradedBimodule, n: usize, support: Support, cap: usize) -> Result<CohomologyGroup> {
    check_degree(n, cap)?;
    let ring = module.ring().clone();
    let nb = neighborhood(module, n, support)?;
    let dim = nb.space.dim();
    let support = nb.space.support();
    match ring {
        Ring::Integers => {
            let kernel_rank = dim - linalg::rank_over(&ring, &nb.outgoing);
            let (dim_b, torsion) = match &nb.incoming {
                None => (0, Vec::new()),
                Some(d) => {
                    if d.nrows().saturating_mul(d.ncols()) > MAX_DENSE_INTEGER_ENTRIES {
                        return Err(Error::CapExceeded(format!(
                            "integer coboundary matrix {}x{} too large for Smith normal form",
                            d.nrows(),
                            d.ncols()
                        )));
                    }
                    let snf = linalg::smith_normal_form(&linalg::to_integer_rows(d)?, d.ncols());
                    (snf.rank(), snf.torsion())
                }
            };
            Ok(CohomologyGroup {
                degree: n,
                ring: ring.to_string(),
                support,
                dim_z: kernel_rank,
                dim_b,
                rank: kernel_rank - dim_b,
                torsion,
                representatives: Vec::new(),
            })
        }
        _ => {
            let kernel = linalg::kernel_basis(&ring, &nb.outgoing);
            let mut ech = Echelon::new(&ring);
            let mut dim_b = 0;
            if let Some(d) = &nb.incoming {
                for c in d.columns() {
                    if ech.insert(c).is_none() {
                        dim_b += 1;
                    }
                }
            }
            let representatives: Vec<SparseVec> = kernel
                .iter()
                .filter(|z| ech.insert(z).is_none())
                .cloned()
                .collect();
            Ok(CohomologyGroup {
                degree: n,
                ring: ring.to_string(),
                support,
                dim_z: kernel.len(),
                dim_b,
                rank: representatives.len(),
                torsion: Vec::new(),
                representatives,
            })
        }
    }
}

/// Tests `δf = 0` and reports the first argument tuple where it fails.
pub fn is_cocycle(module: &GradedBimodule, space: &CochainSpace, f: &SparseVec) -> Result<CocycleCheck> {
    let d = coboundary_matrix(module, space.degree(), space.support())?;
    let df = d.apply(module.ring(), f);
    let witness = df.leading().map(|(row, _)| {
        let next = CochainSpace::new(module, space.degree() + 1, space.support()).expect("space built above");
        next.tuple(next.locate(*row).0)
    });
    Ok(CocycleCheck {
        is_cocycle: witness.is_none(),
        witness,
    })
}

/// Some `h` with `δh = f`, or `None` when `f` is not a coboundary.
/// Degree-zero cochains are never coboundaries unless zero.
pub fn is_coboundary(module: &GradedBimodule, space: &CochainSpace, f: &SparseVec) -> Result<Option<SparseVec>> {
    if space.degree() == 0 {
        return Ok(f.is_zero().then(SparseVec::new));
    }
    let d = coboundary_matrix(module, space.degree() - 1, space.support())?;
    linalg::solve_in(module.ring(), &d, f)
}

/// Basis of the derivations `Z^1` (fields only).
pub fn derivations(module: &GradedBimodule, support: Support) -> Result<Vec<SparseVec>> {
    require_field(module)?;
    let d1 = coboundary_matrix(module, 1, support)?;
    Ok(linalg::kernel_basis(module.ring(), &d1))
}

/// Basis of the inner derivations `B^1 = δ⁰(C⁰)` (fields only).
pub fn inner_derivations(module: &GradedBimodule, support: Support) -> Result<Vec<SparseVec>> {
    require_field(module)?;
    let d0 = coboundary_matrix(module, 0, support)?;
    let cols = linalg::pivot_columns(module.ring(), &d0);
    Ok(cols.into_iter().map(|j| d0.column(j).clone()).collect())
}

/// `H^1 = Der / Inn`.
pub fn outer_derivations(module: &GradedBimodule, support: Support, cap: usize) -> Result<CohomologyGroup> {
    cohomology_group(module, 1, support, cap)
}

/// First argument tuple where `δ^{n+1}δ^n` is nonzero on the support.
pub fn check_complex(module: &GradedBimodule, n: usize, support: Support) -> Result<Option<Vec<usize>>> {
    complex_witness(module, n, support)
}

fn require_field(module: &GradedBimodule) -> Result<()> {
    if !module.ring().is_field() {
        return Err(Error::RingIncompatible(format!(
            "a field is required, got {}",
            module.ring()
        )));
    }
    Ok(())
}
