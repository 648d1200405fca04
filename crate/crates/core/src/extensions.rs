//! Enlargements of modules and square-zero extensions of algebras built from
//! cocycles, together with their sums, scalar multiples and equivalences.
//!
//! All constructions work over fields, with explicit bases.

use std::collections::HashMap;

use crate::algebra::MetagroupAlgebra;
use crate::cohomology::{coboundary_matrix, is_coboundary, is_cocycle, CochainSpace, Support};
use crate::error::{Error, Result};
use crate::gmodule::{head_phase, GradedBimodule};
use crate::linalg::{self, Echelon, SparseMatrix, SparseVec};
use crate::ring::{Ring, Scalar};
use crate::tuple;

/// A short exact sequence `0 → M → E → N → 0` of graded modules.
#[derive(Clone, Debug)]
pub struct Enlargement {
    pub sub: GradedBimodule,
    pub quotient: GradedBimodule,
    pub total: GradedBimodule,
    /// `ξ : M → E`.
    pub xi: SparseMatrix,
    /// `η : E → N`.
    pub eta: SparseMatrix,
}

fn require_field(ring: &Ring) -> Result<()> {
    if !ring.is_field() {
        return Err(Error::RingIncompatible(format!("a field is required, got {ring}")));
    }
    Ok(())
}

/// Columns `[[a, b], [c, d]]` for square blocks of sizes `p` and `q`.
fn block(p: usize, q: usize, a: &SparseMatrix, b: Option<&SparseMatrix>, d: &SparseMatrix) -> SparseMatrix {
    let ring = Ring::Rationals;
    let mut cols: Vec<SparseVec> = a.columns().to_vec();
    for j in 0..q {
        let lower = d.column(j).reindex(|i| i + p);
        let col = match b {
            Some(b) => b.column(j).add(&ring, &lower),
            None => lower,
        };
        cols.push(col);
    }
    SparseMatrix::from_columns(p + q, cols)
}

/// Matrix of `M ⊕ N ⊇ M`.
fn inclusion_first(p: usize, q: usize, ring: &Ring) -> SparseMatrix {
    SparseMatrix::from_columns(p + q, (0..p).map(|i| SparseVec::unit(i, ring)).collect())
}

/// Matrix of `M ⊕ N → N`.
fn projection_second(p: usize, q: usize, ring: &Ring) -> SparseMatrix {
    let cols = (0..p + q)
        .map(|j| if j < p { SparseVec::new() } else { SparseVec::unit(j - p, ring) })
        .collect();
    SparseMatrix::from_columns(q, cols)
}

impl Enlargement {
    /// Checks `ηξ = 0`, injectivity of `ξ`, surjectivity of `η` and `ker η = im ξ`,
    /// and that `ξ`, `η` commute with the actions.
    pub fn check_exact(&self) -> Result<()> {
        let ring = self.total.ring();
        let fail = |msg: &str| Err(Error::DimensionMismatch(msg.to_string()));
        if !self.eta.compose(ring, &self.xi).is_zero() {
            return fail("η∘ξ ≠ 0");
        }
        let rx = linalg::rank(ring, &self.xi);
        let re = linalg::rank(ring, &self.eta);
        if rx != self.sub.dim() {
            return fail("ξ is not injective");
        }
        if re != self.quotient.dim() {
            return fail("η is not surjective");
        }
        if rx + re != self.total.dim() {
            return fail("ker η ≠ im ξ");
        }
        for h in 0..self.total.algebra().dim() {
            let commutes_xi = self.total.left_matrix(h).compose(ring, &self.xi)
                == self.xi.compose(ring, self.sub.left_matrix(h));
            let commutes_eta = self.eta.compose(ring, self.total.left_matrix(h))
                == self.quotient.left_matrix(h).compose(ring, &self.eta);
            if !commutes_xi || !commutes_eta {
                return fail("ξ or η does not commute with the left action");
            }
        }
        Ok(())
    }

    /// An `A`-linear section `s : N → E` with `ηs = id`, if one exists.
    pub fn splitting(&self) -> Result<Option<SparseMatrix>> {
        require_field(self.total.ring())?;
        let ring = self.total.ring();
        let (de, dn) = (self.total.dim(), self.quotient.dim());
        let (unknowns, index) = matrix_unknowns(de, dn);
        let mut eqs = Equations::default();
        // η s = id
        for j in 0..dn {
            for r in 0..dn {
                let terms: Vec<(usize, Scalar)> = (0..de)
                    .filter_map(|k| {
                        let c = self.eta.get(r, k);
                        let u = index.get(&(k, j))?;
                        (c != ring.zero()).then_some((*u, c))
                    })
                    .collect();
                let rhs = if r == j { ring.one() } else { ring.zero() };
                eqs.push(ring, terms, rhs);
            }
        }
        let both = |e: &SparseMatrix, n: &SparseMatrix, eqs: &mut Equations| {
            // (E_h s − s N_h) = 0
            for j in 0..dn {
                for i in 0..de {
                    let mut terms = Vec::new();
                    for k in 0..de {
                        let c = e.get(i, k);
                        if c != ring.zero() {
                            if let Some(u) = index.get(&(k, j)) {
                                terms.push((*u, c));
                            }
                        }
                    }
                    for (k, c) in n.column(j).iter() {
                        if let Some(u) = index.get(&(i, *k)) {
                            terms.push((*u, ring.neg(c)));
                        }
                    }
                    eqs.push(ring, terms, ring.zero());
                }
            }
        };
        for h in 0..self.total.algebra().dim() {
            both(self.total.left_matrix(h), self.quotient.left_matrix(h), &mut eqs);
            if let (Some(e), Some(n)) = (self.total.right_matrix(h), self.quotient.right_matrix(h)) {
                both(e, n, &mut eqs);
            }
        }
        Ok(eqs.solve(ring, unknowns.len()).map(|x| {
            let mut cols = vec![Vec::new(); dn];
            for (u, c) in x.iter() {
                let (i, j) = unknowns[*u];
                cols[j].push((i, c.clone()));
            }
            SparseMatrix::from_columns(de, cols.into_iter().map(|t| SparseVec::from_terms(ring, t)).collect())
        }))
    }
}

type Unknowns = (Vec<(usize, usize)>, HashMap<(usize, usize), usize>);

/// Entries `(i, j)` of an `nrows × ncols` matrix numbered column by column.
fn matrix_unknowns(nrows: usize, ncols: usize) -> Unknowns {
    let unknowns: Vec<(usize, usize)> = (0..ncols).flat_map(|j| (0..nrows).map(move |i| (i, j))).collect();
    let index = unknowns.iter().enumerate().map(|(u, &ij)| (ij, u)).collect();
    (unknowns, index)
}

/// Sparse linear system assembled row by row.
#[derive(Default)]
struct Equations {
    triplets: Vec<(usize, usize, Scalar)>,
    rhs: Vec<(usize, Scalar)>,
    rows: usize,
}

impl Equations {
    fn push(&mut self, ring: &Ring, terms: Vec<(usize, Scalar)>, rhs: Scalar) {
        if terms.is_empty() && rhs == ring.zero() {
            return;
        }
        let r = self.rows;
        self.rows += 1;
        self.triplets.extend(terms.into_iter().map(|(c, v)| (r, c, v)));
        if rhs != ring.zero() {
            self.rhs.push((r, rhs));
        }
    }

    fn solve(self, ring: &Ring, unknowns: usize) -> Option<SparseVec> {
        let a = SparseMatrix::from_triplets(ring, self.rows, unknowns, self.triplets);
        let b = SparseVec::from_terms(ring, self.rhs);
        linalg::solve(ring, &a, &b)
    }
}

/// An enlargement of `M` by `N` built from a 1-cocycle in `Hom(N, M)`.
#[derive(Clone, Debug)]
pub struct ModuleEnlargement {
    pub enlargement: Enlargement,
    /// `u ∈ Hom(N, M)` with `f = −δ⁰u` when the enlargement splits; the
    /// elements `(u(n), n)` then form a complementary submodule.
    pub splitting_map: Option<SparseVec>,
}

/// `P = M ⊕ N` with `a∘(m, n) = (a·m + f(a)(n), a·n)` for a 1-cocycle `f`
/// with values in `Hom(N, M)` (given on the full 1-cochain space of `hom`).
pub fn module_enlargement(
    f: &SparseVec,
    n: &GradedBimodule,
    mm: &GradedBimodule,
) -> Result<ModuleEnlargement> {
    require_field(mm.ring())?;
    let ring = mm.ring().clone();
    let hom = GradedBimodule::hom(n, mm)?;
    let space = CochainSpace::new(&hom, 1, Support::Full)?;
    let check = is_cocycle(&hom, &space, f)?;
    if !check.is_cocycle {
        return Err(Error::NotACocycle(format!("δf ≠ 0 at {:?}", check.witness)));
    }
    let (dm, dn) = (mm.dim(), n.dim());
    let alg = mm.algebra();
    let left: Vec<SparseMatrix> = (0..alg.dim())
        .map(|h| {
            let value = space.value(f, h);
            let mut cols = vec![Vec::new(); dn];
            for (e, c) in value.iter() {
                cols[e % dn].push((e / dn, c.clone()));
            }
            let fh = SparseMatrix::from_columns(
                dm,
                cols.into_iter().map(|t| SparseVec::from_terms(&ring, t)).collect(),
            );
            block(dm, dn, mm.left_matrix(h), Some(&fh), n.left_matrix(h))
        })
        .collect();
    let grades = mm.grades().iter().chain(n.grades()).copied().collect();
    let total = GradedBimodule::new(alg.clone(), "enlargement", grades, left, None)?;
    let enlargement = Enlargement {
        sub: mm.clone(),
        quotient: n.clone(),
        total,
        xi: inclusion_first(dm, dn, &ring),
        eta: projection_second(dm, dn, &ring),
    };
    enlargement.check_exact()?;
    let splitting_map = is_coboundary(&hom, &space, f)?.map(|w| w.scale(&ring, &ring.from_i64(-1)));
    Ok(ModuleEnlargement {
        enlargement,
        splitting_map,
    })
}

/// The square-zero extension `P = M ⊕ A` of a 2-cochain `f`:
/// `(m₁ + b₁)(m₂ + b₂) = m₁·b₂ + b₁·m₂ + f(b₁, b₂) + b₁b₂`.
#[derive(Clone, Debug)]
pub struct SquareZeroExtension {
    module: GradedBimodule,
    space: CochainSpace,
    cochain: SparseVec,
}

impl SquareZeroExtension {
    pub fn new(module: &GradedBimodule, space: &CochainSpace, f: &SparseVec) -> Result<SquareZeroExtension> {
        if space.degree() != 2 {
            return Err(Error::DimensionMismatch("a 2-cochain is required".into()));
        }
        if !module.is_two_sided() {
            return Err(Error::DimensionMismatch("a two-sided module is required".into()));
        }
        Ok(SquareZeroExtension {
            module: module.clone(),
            space: space.clone(),
            cochain: f.clone(),
        })
    }

    fn algebra(&self) -> &MetagroupAlgebra {
        self.module.algebra()
    }

    pub fn dim(&self) -> usize {
        self.module.dim() + self.algebra().dim()
    }

    /// `γ(a)`, the algebra basis element `a` inside `P`.
    pub fn gamma(&self, a: &SparseVec) -> SparseVec {
        let d = self.module.dim();
        a.reindex(|i| i + d)
    }

    /// The module vector `m` inside `P`.
    pub fn embed(&self, m: &SparseVec) -> SparseVec {
        m.clone()
    }

    /// Splits `x ∈ P` into its module and algebra parts.
    pub fn parts(&self, x: &SparseVec) -> (SparseVec, SparseVec) {
        let d = self.module.dim();
        (x.restrict(0..d), x.restrict(d..self.dim()))
    }

    pub fn mul(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        let ring = self.module.ring();
        let m = self.algebra().dim();
        let (m1, b1) = self.parts(x);
        let (m2, b2) = self.parts(y);
        let mut out = self.module.act_right_by(&m1, &b2);
        out = out.add(ring, &self.module.act_left_by(&b1, &m2));
        for (a, ca) in b1.iter() {
            for (b, cb) in b2.iter() {
                let value = self.space.value(&self.cochain, tuple::encode(&[*a, *b], m));
                out = out.axpy(ring, &ring.mul(ca, cb), &value);
            }
        }
        out.add(ring, &self.gamma(&self.algebra().mul(&b1, &b2)))
    }

    /// `(ab)c − t3(a,b,c)·a(bc)` for algebra basis elements.
    pub fn associativity_defect(&self, a: usize, b: usize, c: usize) -> SparseVec {
        let ring = self.module.ring();
        let alg = self.algebra();
        let (ga, gb, gc) = (self.gamma(&alg.basis(a)), self.gamma(&alg.basis(b)), self.gamma(&alg.basis(c)));
        let lhs = self.mul(&self.mul(&ga, &gb), &gc);
        let rhs = self.mul(&ga, &self.mul(&gb, &gc));
        lhs.sub(ring, &rhs.scale(ring, alg.t3(a, b, c)))
    }

    /// Basis triples on which the twisted associativity of `P` fails.
    pub fn defect_report(&self) -> Vec<[usize; 3]> {
        let m = self.algebra().dim();
        tuple::all(m, 3)
            .filter(|t| !self.associativity_defect(t[0], t[1], t[2]).is_zero())
            .map(|t| [t[0], t[1], t[2]])
            .collect()
    }

    /// Whether the span of the given elements is closed under the product.
    pub fn spans_subalgebra(&self, elements: &[SparseVec]) -> bool {
        let ring = self.module.ring();
        let mut ech = Echelon::new(ring);
        for e in elements {
            ech.insert(e);
        }
        elements
            .iter()
            .all(|x| elements.iter().all(|y| ech.contains(&self.mul(x, y))))
    }
}

/// The square-zero extension of `f`; the defect report lists the algebra
/// basis triples where `P` fails twisted associativity.
pub fn algebra_extension(
    module: &GradedBimodule,
    space: &CochainSpace,
    f: &SparseVec,
) -> Result<(SquareZeroExtension, Vec<[usize; 3]>)> {
    let ext = SquareZeroExtension::new(module, space, f)?;
    let defects = ext.defect_report();
    Ok((ext, defects))
}

/// The enlargement `E = P_n ⊕ M` in which an `(n+1)`-cocycle becomes a
/// coboundary, with the `n`-cochain `v(a_1..a_n) = ((a_1, .., a_n, 1), 0)`.
#[derive(Clone, Debug)]
pub struct TrivializingEnlargement {
    pub enlargement: Enlargement,
    /// Full-support `n`-cochain with values in `E`.
    pub v: SparseVec,
    /// `ξ∘f` as a full-support `(n+1)`-cochain with values in `E`.
    pub f_in_total: SparseVec,
    /// Whether `δv = ξ∘f` holds exactly.
    pub verified: bool,
}

/// Default largest `n` for [`trivializing_enlargement`].
pub const TRIVIALIZING_CAP: usize = 1;

pub fn trivializing_enlargement(
    mm: &GradedBimodule,
    space: &CochainSpace,
    f: &SparseVec,
    cap: usize,
) -> Result<TrivializingEnlargement> {
    require_field(mm.ring())?;
    if space.degree() == 0 {
        return Err(Error::DimensionMismatch("a cochain of degree at least 1 is required".into()));
    }
    let n = space.degree() - 1;
    if n > cap {
        return Err(Error::CapExceeded(format!("degree {n} exceeds the cap {cap}")));
    }
    let check = is_cocycle(mm, space, f)?;
    if !check.is_cocycle {
        return Err(Error::NotACocycle(format!("δf ≠ 0 at {:?}", check.witness)));
    }
    let alg = mm.algebra();
    let g = alg.group();
    let ring = mm.ring().clone();
    let m = g.size();
    let pn = GradedBimodule::pn(alg, n);
    let (dp, dm) = (pn.dim(), mm.dim());
    let right_m = |z: usize| mm.right_matrix(z).expect("two-sided module");
    // h(x)(y, z) = t(x, y; x{y}_l, l) · f(x, y)·z
    let left: Vec<SparseMatrix> = (0..m)
        .map(|x| {
            let cols: Vec<SparseVec> = (0..dp)
                .map(|p| {
                    let yz = tuple::decode(p, m, n + 1);
                    let (y, z) = (&yz[..n], yz[n]);
                    let mut args = Vec::with_capacity(n + 1);
                    args.push(x);
                    args.extend_from_slice(y);
                    let t = g.sub_phase(head_phase(alg, x, y), tuple::product(g, &args).1);
                    let value = space.value(f, tuple::encode(&args, m));
                    right_m(z).apply(&ring, &value).scale(&ring, alg.chi(t))
                })
                .collect();
            let h = SparseMatrix::from_columns(dm, cols);
            // [[L^P, 0], [H, L^M]] with P first
            let mut out: Vec<SparseVec> = Vec::with_capacity(dp + dm);
            for p in 0..dp {
                out.push(pn.left_matrix(x).column(p).add(&ring, &h.column(p).reindex(|i| i + dp)));
            }
            for k in 0..dm {
                out.push(mm.left_matrix(x).column(k).reindex(|i| i + dp));
            }
            SparseMatrix::from_columns(dp + dm, out)
        })
        .collect();
    let right: Vec<SparseMatrix> = (0..m)
        .map(|x| block(dp, dm, pn.right_matrix(x).expect("P_n is two-sided"), None, right_m(x)))
        .collect();
    let grades = pn.grades().iter().chain(mm.grades()).copied().collect();
    let total = GradedBimodule::new(alg.clone(), format!("trivializing:{n}"), grades, left, Some(right))?;
    let xi = SparseMatrix::from_columns(dp + dm, (0..dm).map(|k| SparseVec::unit(dp + k, &ring)).collect());
    let eta = SparseMatrix::from_columns(
        dp,
        (0..dp + dm)
            .map(|j| if j < dp { SparseVec::unit(j, &ring) } else { SparseVec::new() })
            .collect(),
    );
    let enlargement = Enlargement {
        sub: mm.clone(),
        quotient: pn,
        total: total.clone(),
        xi,
        eta,
    };
    let src = CochainSpace::new(&total, n, Support::Full)?;
    let dst = CochainSpace::new(&total, n + 1, Support::Full)?;
    let unit = g.unit();
    let v = src.from_values(&ring, |a| {
        let mut t = a.to_vec();
        t.push(unit);
        SparseVec::unit(tuple::encode(&t, m), &ring)
    })?;
    let f_in_total = dst.from_values(&ring, |x| {
        let value = space.value(f, tuple::encode(x, m));
        value.reindex(|k| k + dp)
    })?;
    let dv = coboundary_matrix(&total, n, Support::Full)?.apply(&ring, &v);
    let verified = dv == f_in_total;
    Ok(TrivializingEnlargement {
        enlargement,
        v,
        f_in_total,
        verified,
    })
}

/// `B = A ⊕ E` with `(a₁, p₁)(a₂, p₂) = (a₁a₂, a₁·p₂ + p₁·a₂)`, where `E` is
/// the trivializing enlargement of a derivation `d` of `A`, and `p = v()`.
#[derive(Clone, Debug)]
pub struct SemidirectProduct {
    pub algebra: MetagroupAlgebra,
    pub module: GradedBimodule,
    /// The element `p ∈ E` with `(a,0)(0,p) − (0,p)(a,0) = (0, ξ(d(a)))`.
    pub p: SparseVec,
    /// `ξ : A → E`, the regular module inside `E`.
    pub xi: SparseMatrix,
}

impl SemidirectProduct {
    pub fn dim(&self) -> usize {
        self.algebra.dim() + self.module.dim()
    }

    pub fn embed_algebra(&self, a: &SparseVec) -> SparseVec {
        a.clone()
    }

    pub fn embed_module(&self, p: &SparseVec) -> SparseVec {
        let d = self.algebra.dim();
        p.reindex(|i| i + d)
    }

    pub fn mul(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        let ring = self.algebra.ring();
        let d = self.algebra.dim();
        let (a1, p1) = (x.restrict(0..d), x.restrict(d..self.dim()));
        let (a2, p2) = (y.restrict(0..d), y.restrict(d..self.dim()));
        let p = self
            .module
            .act_left_by(&a1, &p2)
            .add(ring, &self.module.act_right_by(&p1, &a2));
        self.algebra.mul(&a1, &a2).add(ring, &self.embed_module(&p))
    }

    /// `[(a,0), (0,p)] = (a,0)(0,p) − (0,p)(a,0)`.
    pub fn commutator_with_p(&self, a: &SparseVec) -> SparseVec {
        let ring = self.algebra.ring();
        let x = self.embed_algebra(a);
        let p = self.embed_module(&self.p);
        self.mul(&x, &p).sub(ring, &self.mul(&p, &x))
    }
}

/// Makes the derivation `d` (a full-support 1-cocycle of the regular
/// module) inner in a larger algebra.
pub fn semidirect_inner(regular: &GradedBimodule, d: &SparseVec) -> Result<SemidirectProduct> {
    let space = CochainSpace::new(regular, 1, Support::Full)?;
    let triv = trivializing_enlargement(regular, &space, d, 0)?;
    if !triv.verified {
        return Err(Error::NotACocycle("trivializing enlargement did not verify".into()));
    }
    let e = triv.enlargement;
    Ok(SemidirectProduct {
        algebra: regular.algebra().clone(),
        module: e.total,
        p: triv.v,
        xi: e.xi,
    })
}

/// Subquotient `Q/T` of a module. `q_of_grade(g)` returns a basis of `Q_g`
/// and `t` spans `T`.
struct Subquotient {
    module: GradedBimodule,
    echelon: Echelon,
    /// For each echelon insertion id, the representative position (if any).
    rep_of_id: Vec<Option<usize>>,
    reps: Vec<SparseVec>,
}

impl Subquotient {
    fn build(
        ambient: &GradedBimodule,
        q_of_grade: impl Fn(usize) -> Vec<SparseVec>,
        t: &[SparseVec],
        name: &str,
    ) -> Result<Subquotient> {
        let ring = ambient.ring().clone();
        let mut echelon = Echelon::new(&ring);
        let mut rep_of_id = Vec::new();
        for v in t {
            echelon.insert(v);
            rep_of_id.push(None);
        }
        let mut reps = Vec::new();
        let mut grades = Vec::new();
        for g in 0..ambient.algebra().dim() {
            for v in q_of_grade(g) {
                if echelon.insert(&v).is_none() {
                    rep_of_id.push(Some(reps.len()));
                    reps.push(v);
                    grades.push(g);
                } else {
                    rep_of_id.push(None);
                }
            }
        }
        let coords = |echelon: &Echelon, rep_of_id: &[Option<usize>], v: &SparseVec| -> Result<SparseVec> {
            let combo = echelon
                .express(v)
                .ok_or_else(|| Error::DimensionMismatch("submodule is not closed under the action".into()))?;
            Ok(SparseVec::from_terms(
                &ring,
                combo.iter().filter_map(|(id, c)| rep_of_id[*id].map(|r| (r, c.clone()))).collect::<Vec<_>>(),
            ))
        };
        let act = |mats: &[SparseMatrix]| -> Result<Vec<SparseMatrix>> {
            mats.iter()
                .map(|a| {
                    let cols = reps
                        .iter()
                        .map(|r| coords(&echelon, &rep_of_id, &a.apply(&ring, r)))
                        .collect::<Result<Vec<_>>>()?;
                    Ok(SparseMatrix::from_columns(reps.len(), cols))
                })
                .collect()
        };
        let left = act(ambient.left_matrices())?;
        let right = match ambient.right_matrices() {
            Some(r) => Some(act(r)?),
            None => None,
        };
        let module = GradedBimodule::new(ambient.algebra().clone(), name, grades, left, right)?;
        Ok(Subquotient {
            module,
            echelon,
            rep_of_id,
            reps,
        })
    }

    fn coords(&self, v: &SparseVec) -> Result<SparseVec> {
        let ring = self.module.ring();
        let combo = self
            .echelon
            .express(v)
            .ok_or_else(|| Error::DimensionMismatch("vector outside the submodule".into()))?;
        Ok(SparseVec::from_terms(
            ring,
            combo
                .iter()
                .filter_map(|(id, c)| self.rep_of_id[*id].map(|r| (r, c.clone())))
                .collect::<Vec<_>>(),
        ))
    }
}

/// Indices of `module` vectors of grade `g`.
fn grade_indices(module: &GradedBimodule, g: usize) -> Vec<usize> {
    module.graded_part(g)
}

fn same_ends(a: &Enlargement, b: &Enlargement) -> Result<()> {
    if a.sub.dim() != b.sub.dim()
        || a.quotient.dim() != b.quotient.dim()
        || a.sub.grades() != b.sub.grades()
        || a.quotient.grades() != b.quotient.grades()
    {
        return Err(Error::DimensionMismatch("enlargements of different modules".into()));
    }
    Ok(())
}

/// Sum of enlargements: `Q = {(x₁, x₂) : η₁x₁ = η₂x₂}` modulo `T = {(ξm, −ξm)}`.
pub fn enlargement_sum(e1: &Enlargement, e2: &Enlargement) -> Result<Enlargement> {
    same_ends(e1, e2)?;
    let ring = e1.total.ring().clone();
    require_field(&ring)?;
    let ambient = e1.total.direct_sum(&e2.total)?;
    let d1 = e1.total.dim();
    // constraint [η₁, −η₂]
    let constraint = {
        let mut cols = e1.eta.columns().to_vec();
        cols.extend(e2.eta.columns().iter().map(|c| c.scale(&ring, &ring.from_i64(-1))));
        SparseMatrix::from_columns(e1.quotient.dim(), cols)
    };
    let q_of_grade = |g: usize| {
        let idx = grade_indices(&ambient, g);
        let restricted = SparseMatrix::from_columns(
            constraint.nrows(),
            idx.iter().map(|&i| constraint.column(i).clone()).collect(),
        );
        linalg::kernel_basis(&ring, &restricted)
            .into_iter()
            .map(|k| k.reindex(|i| idx[i]))
            .collect()
    };
    let minus = ring.from_i64(-1);
    let t: Vec<SparseVec> = (0..e1.sub.dim())
        .map(|k| {
            e1.xi
                .column(k)
                .add(&ring, &e2.xi.column(k).scale(&ring, &minus).reindex(|i| i + d1))
        })
        .collect();
    let sq = Subquotient::build(&ambient, q_of_grade, &t, "sum")?;
    let xi_cols = (0..e1.sub.dim())
        .map(|k| sq.coords(e1.xi.column(k)))
        .collect::<Result<Vec<_>>>()?;
    let reps_eta = representatives_map(&sq, |v| e1.eta.apply(&ring, &v.restrict(0..d1)), e1.quotient.dim())?;
    let out = Enlargement {
        sub: e1.sub.clone(),
        quotient: e1.quotient.clone(),
        xi: SparseMatrix::from_columns(sq.module.dim(), xi_cols),
        eta: reps_eta,
        total: sq.module,
    };
    out.check_exact()?;
    Ok(out)
}

/// Scalar multiple: `(E ⊕ M)/T_b` with `T_b = {(ξm, −b·m)}`, `M ↦ [(0, m)]`.
pub fn enlargement_scale(e: &Enlargement, b: &Scalar) -> Result<Enlargement> {
    let ring = e.total.ring().clone();
    require_field(&ring)?;
    let ambient = e.total.direct_sum(&e.sub)?;
    let de = e.total.dim();
    let q_of_grade = |g: usize| {
        grade_indices(&ambient, g)
            .into_iter()
            .map(|i| SparseVec::unit(i, &ring))
            .collect()
    };
    let t: Vec<SparseVec> = (0..e.sub.dim())
        .map(|k| {
            e.xi.column(k).add(&ring, &SparseVec::single(de + k, ring.neg(b)))
        })
        .collect();
    let sq = Subquotient::build(&ambient, q_of_grade, &t, "scaled")?;
    let xi_cols = (0..e.sub.dim())
        .map(|k| sq.coords(&SparseVec::unit(de + k, &ring)))
        .collect::<Result<Vec<_>>>()?;
    let eta = representatives_map(&sq, |v| e.eta.apply(&ring, &v.restrict(0..de)), e.quotient.dim())?;
    let out = Enlargement {
        sub: e.sub.clone(),
        quotient: e.quotient.clone(),
        xi: SparseMatrix::from_columns(sq.module.dim(), xi_cols),
        eta,
        total: sq.module,
    };
    out.check_exact()?;
    Ok(out)
}

/// Matrix of a map defined on representatives of a subquotient.
fn representatives_map(
    sq: &Subquotient,
    f: impl Fn(&SparseVec) -> SparseVec,
    nrows: usize,
) -> Result<SparseMatrix> {
    Ok(SparseMatrix::from_columns(nrows, sq.reps.iter().map(f).collect()))
}

/// A module isomorphism `π : E → E'` with `πξ = ξ'` and `η'π = η`, if any.
pub fn find_equivalence(a: &Enlargement, b: &Enlargement) -> Result<Option<SparseMatrix>> {
    same_ends(a, b)?;
    let ring = a.total.ring().clone();
    require_field(&ring)?;
    let (da, db) = (a.total.dim(), b.total.dim());
    let (unknowns, index) = matrix_unknowns(db, da);
    let mut eqs = Equations::default();
    let commute = |ma: &SparseMatrix, mb: &SparseMatrix, eqs: &mut Equations| {
        // π·ma − mb·π = 0, entry (i, j)
        let mb_rows = mb.transpose();
        for j in 0..da {
            for i in 0..db {
                let mut terms = Vec::new();
                for (k, c) in ma.column(j).iter() {
                    if let Some(u) = index.get(&(i, *k)) {
                        terms.push((*u, c.clone()));
                    }
                }
                for (k, c) in mb_rows.column(i).iter() {
                    if let Some(u) = index.get(&(*k, j)) {
                        terms.push((*u, ring.neg(c)));
                    }
                }
                eqs.push(&ring, terms, ring.zero());
            }
        }
    };
    for h in 0..a.total.algebra().dim() {
        commute(a.total.left_matrix(h), b.total.left_matrix(h), &mut eqs);
        if let (Some(x), Some(y)) = (a.total.right_matrix(h), b.total.right_matrix(h)) {
            commute(x, y, &mut eqs);
        }
    }
    // π ξ_a = ξ_b
    for j in 0..a.sub.dim() {
        for i in 0..db {
            let terms: Vec<(usize, Scalar)> = a
                .xi
                .column(j)
                .iter()
                .filter_map(|(k, c)| index.get(&(i, *k)).map(|u| (*u, c.clone())))
                .collect();
            eqs.push(&ring, terms, b.xi.get(i, j));
        }
    }
    // η_b π = η_a
    let eta_b_rows = b.eta.transpose();
    for j in 0..da {
        for r in 0..a.quotient.dim() {
            let terms: Vec<(usize, Scalar)> = eta_b_rows
                .column(r)
                .iter()
                .filter_map(|(k, c)| index.get(&(*k, j)).map(|u| (*u, c.clone())))
                .collect();
            eqs.push(&ring, terms, a.eta.get(r, j));
        }
    }
    Ok(eqs.solve(&ring, unknowns.len()).map(|x| {
        let mut cols = vec![Vec::new(); da];
        for (u, c) in x.iter() {
            let (i, j) = unknowns[*u];
            cols[j].push((i, c.clone()));
        }
        SparseMatrix::from_columns(db, cols.into_iter().map(|t| SparseVec::from_terms(&ring, t)).collect())
    }))
}
