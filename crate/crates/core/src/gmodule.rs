//! Graded two-sided modules over metagroup algebras.
//!
//! A module is free with an explicit basis; every basis vector carries a grade
//! (a basis index of the metagroup) and the action of each metagroup basis
//! element is stored as a sparse matrix acting on coefficient columns.

use crate::algebra::{AlgebraElement, MetagroupAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{SparseMatrix, SparseVec};
use crate::metagroup::{AxiomReport, Phase};
use crate::ring::Ring;
use crate::tuple;

#[derive(Clone, Debug)]
pub struct GradedBimodule {
    algebra: MetagroupAlgebra,
    name: String,
    grades: Vec<usize>,
    left: Vec<SparseMatrix>,
    right: Option<Vec<SparseMatrix>>,
}

impl GradedBimodule {
    /// Assembles a module from grades and action matrices. A module without
    /// right action matrices is a left module.
    pub fn new(
        algebra: MetagroupAlgebra,
        name: impl Into<String>,
        grades: Vec<usize>,
        left: Vec<SparseMatrix>,
        right: Option<Vec<SparseMatrix>>,
    ) -> Result<GradedBimodule> {
        let m = algebra.dim();
        let d = grades.len();
        if let Some(&g) = grades.iter().find(|&&g| g >= m) {
            return Err(Error::DimensionMismatch(format!("grade {g} out of range")));
        }
        let check = |mats: &[SparseMatrix]| -> Result<()> {
            if mats.len() != m {
                return Err(Error::DimensionMismatch(format!(
                    "expected {m} action matrices, got {}",
                    mats.len()
                )));
            }
            if let Some(a) = mats.iter().find(|a| a.nrows() != d || a.ncols() != d) {
                return Err(Error::DimensionMismatch(format!(
                    "action matrix is {}x{}, module has dimension {d}",
                    a.nrows(),
                    a.ncols()
                )));
            }
            Ok(())
        };
        check(&left)?;
        if let Some(r) = &right {
            check(r)?;
        }
        Ok(GradedBimodule {
            algebra,
            name: name.into(),
            grades,
            left,
            right,
        })
    }

    fn build(
        algebra: &MetagroupAlgebra,
        name: String,
        grades: Vec<usize>,
        left: impl Fn(usize, usize) -> SparseVec + Sync,
        right: Option<&(dyn Fn(usize, usize) -> SparseVec + Sync)>,
    ) -> GradedBimodule {
        let d = grades.len();
        let m = algebra.dim();
        let mats = |f: &(dyn Fn(usize, usize) -> SparseVec + Sync)| -> Vec<SparseMatrix> {
            (0..m)
                .map(|h| SparseMatrix::from_columns(d, (0..d).map(|i| f(h, i)).collect()))
                .collect()
        };
        GradedBimodule {
            algebra: algebra.clone(),
            name,
            grades,
            left: mats(&left),
            right: right.map(mats),
        }
    }

    /// `A` acting on itself by multiplication; `M_g` is spanned by `g`.
    pub fn regular(algebra: &MetagroupAlgebra) -> GradedBimodule {
        let m = algebra.dim();
        let prod = |a: usize, b: usize| {
            let (c, s) = algebra.basis_product(a, b);
            SparseVec::single(c, s.clone())
        };
        Self::build(
            algebra,
            "regular".into(),
            (0..m).collect(),
            prod,
            Some(&|h, x| prod(x, h)),
        )
    }

    /// `A^k`, the direct sum of `k` regular modules.
    pub fn regular_power(algebra: &MetagroupAlgebra, k: usize) -> GradedBimodule {
        assert!(k >= 1);
        let r = Self::regular(algebra);
        let mut out = r.clone();
        for _ in 1..k {
            out = out.direct_sum(&r).expect("same algebra");
        }
        out.name = format!("regular:{k}");
        out
    }

    /// A rank-one module on which every basis element acts as the identity,
    /// concentrated in the unit grade.
    pub fn trivial(algebra: &MetagroupAlgebra) -> GradedBimodule {
        let ring = algebra.ring().clone();
        let unit = move |_h: usize, _x: usize| SparseVec::unit(0, &ring);
        let unit_r = unit.clone();
        Self::build(algebra, "trivial".into(), vec![algebra.group().unit()], unit, Some(&unit_r))
    }

    pub fn direct_sum(&self, other: &GradedBimodule) -> Result<GradedBimodule> {
        if self.algebra.group() != other.algebra.group() || self.ring() != other.ring() {
            return Err(Error::DimensionMismatch("modules over different algebras".into()));
        }
        let sum = |a: &[SparseMatrix], b: &[SparseMatrix]| -> Vec<SparseMatrix> {
            a.iter().zip(b).map(|(x, y)| x.direct_sum(y)).collect()
        };
        let right = match (&self.right, &other.right) {
            (Some(a), Some(b)) => Some(sum(a, b)),
            _ => None,
        };
        Ok(GradedBimodule {
            algebra: self.algebra.clone(),
            name: format!("{}+{}", self.name, other.name),
            grades: self.grades.iter().chain(&other.grades).copied().collect(),
            left: sum(&self.left, &other.left),
            right,
        })
    }

    /// Tuples `(x_0, .., x_{n+1})` with the outer actions
    /// `x·(x_0, ..) = t(x, x_0, ..; x{x_0 ..}_l, l)·((x x_0), ..)` and
    /// `(.., x_{n+1})·x = t(.., x; l, {.., x_{n+1} x}_l)·(.., (x_{n+1} x))`.
    /// Grades are products of the entries.
    pub fn chain_module(algebra: &MetagroupAlgebra, n: usize) -> GradedBimodule {
        let g = algebra.group();
        let m = g.size();
        let len = n + 2;
        let grades = tuple::all(m, len).map(|t| tuple::product(g, &t).0).collect();
        Self::build(
            algebra,
            format!("chain:{n}"),
            grades,
            |h, i| {
                let (idx, s) = outer_left(algebra, h, &tuple::decode(i, m, len));
                SparseVec::single(idx, s)
            },
            Some(&|h, i| {
                let (idx, s) = outer_right(algebra, &tuple::decode(i, m, len), h);
                SparseVec::single(idx, s)
            }),
        )
    }

    /// `A ⊗ A^op` with the outer actions of [`Self::chain_module`] at `n = 0`.
    pub fn envelope(algebra: &MetagroupAlgebra) -> Result<GradedBimodule> {
        let ch = algebra.ring().characteristic();
        if ch == 2 || ch == 3 {
            return Err(Error::RingIncompatible(format!(
                "envelope module needs characteristic other than 2 and 3, got {ch}"
            )));
        }
        let mut e = Self::chain_module(algebra, 0);
        e.name = "envelope".into();
        Ok(e)
    }

    /// Tuples `(x_1, .., x_{n+1})` with right action contracting the last
    /// entry with `y` and left action the twisted alternating sum over all
    /// adjacent contractions of `(y, x_1, .., x_{n+1})`.
    pub fn pn(algebra: &MetagroupAlgebra, n: usize) -> GradedBimodule {
        let g = algebra.group();
        let ring = algebra.ring();
        let m = g.size();
        let len = n + 1;
        let grades = tuple::all(m, len).map(|t| tuple::product(g, &t).0).collect();
        let left = |y: usize, i: usize| {
            let x = tuple::decode(i, m, len);
            let mut full = Vec::with_capacity(len + 1);
            full.push(y);
            full.extend_from_slice(&x);
            // reference parenthesization y{x_1 .. x_{n+1}}_l
            let head = head_phase(algebra, y, &x);
            let terms = (0..len).map(|j| {
                let (out, _) = tuple::contract(g, &full, j);
                // t(y, x; y{x}_l, u) · phase(contraction) = head − w(out)
                let phase = g.sub_phase(head, tuple::product(g, &out).1);
                let mut s = algebra.chi(phase).clone();
                if j % 2 == 1 {
                    s = ring.neg(&s);
                }
                (tuple::encode(&out, m), s)
            });
            SparseVec::from_terms(ring, terms)
        };
        let right = |y: usize, i: usize| {
            let x = tuple::decode(i, m, len);
            let (idx, s) = outer_right(algebra, &x, y);
            SparseVec::single(idx, s)
        };
        Self::build(algebra, format!("P:{n}"), grades, left, Some(&right))
    }

    /// `Hom(N, M)` for left modules, with `(a·r)(x) = a·r(x)` and
    /// `(r·a)(x) = r(a·x)`. Basis map `E_ij` sends `n_j` to `m_i` and has
    /// grade `grade(m_i) / grade(n_j)`.
    pub fn hom(n: &GradedBimodule, mm: &GradedBimodule) -> Result<GradedBimodule> {
        if n.algebra.group() != mm.algebra.group() || n.ring() != mm.ring() {
            return Err(Error::DimensionMismatch("modules over different algebras".into()));
        }
        let g = n.algebra.group();
        let (dn, dm) = (n.dim(), mm.dim());
        let idx = |i: usize, j: usize| i * dn + j;
        let grades = (0..dm)
            .flat_map(|i| (0..dn).map(move |j| (i, j)))
            .map(|(i, j)| {
                g.rdiv(
                    crate::metagroup::Element::basis(mm.grades[i]),
                    crate::metagroup::Element::basis(n.grades[j]),
                )
                .basis
            })
            .collect();
        let left = |a: usize, e: usize| {
            let (i, j) = (e / dn, e % dn);
            mm.left[a].column(i).reindex(|k| idx(k, j))
        };
        let right = |a: usize, e: usize| {
            let (i, j) = (e / dn, e % dn);
            // E_ij ∘ L^N_a sends n_l to (L^N_a)_{j l} m_i
            let terms = (0..dn).filter_map(|l| {
                let c = n.left[a].get(j, l);
                (c != n.ring().zero()).then(|| (idx(i, l), c))
            });
            SparseVec::from_terms(n.ring(), terms)
        };
        Ok(Self::build(
            &n.algebra,
            format!("hom({},{})", n.name, mm.name),
            grades,
            left,
            Some(&right),
        ))
    }

    /// `n`-cochains with values in `M` as a module: `(x_0·f)(x) = x_0·f(x)`
    /// and `(f·x_0)(x_1..x_n) = Σ_k (−1)^k t·f(x_0, .., x_k x_{k+1}, .., x_n)
    /// + (−1)^n f(x_0, .., x_{n−1})·x_n`. Basis cochain `(Y, i)` maps `Y` to
    /// `m_i` and has grade `grade(m_i) / Π(Y)`.
    pub fn cochain_module(mm: &GradedBimodule, n: usize) -> Result<GradedBimodule> {
        let right_m = mm
            .right
            .as_ref()
            .ok_or_else(|| Error::DimensionMismatch("cochain module needs a two-sided module".into()))?;
        let algebra = &mm.algebra;
        let g = algebra.group();
        let ring = algebra.ring();
        let m = g.size();
        let d = mm.dim();
        let nt = tuple::count(m, n);
        let grades = (0..nt)
            .flat_map(|y| (0..d).map(move |i| (y, i)))
            .map(|(y, i)| {
                let prod = tuple::product(g, &tuple::decode(y, m, n)).0;
                g.rdiv(
                    crate::metagroup::Element::basis(mm.grades[i]),
                    crate::metagroup::Element::basis(prod),
                )
                .basis
            })
            .collect();
        let left = |x0: usize, e: usize| {
            let (y, i) = (e / d, e % d);
            mm.left[x0].column(i).reindex(|k| y * d + k)
        };
        // (f·x_0) as a linear map of f: for the basis cochain f = (Y, i) collect
        // every argument tuple X = (x_1..x_n) whose evaluation reads f(Y).
        let right = |x0: usize, e: usize| {
            let (yidx, i) = (e / d, e % d);
            let target = tuple::decode(yidx, m, n);
            let mut terms: Vec<(usize, crate::ring::Scalar)> = Vec::new();
            if n == 0 {
                return right_m[x0].column(i).clone();
            }
            for xi in 0..nt {
                let x = tuple::decode(xi, m, n);
                let mut full = Vec::with_capacity(n + 1);
                full.push(x0);
                full.extend_from_slice(&x);
                let head = head_phase(algebra, x0, &x);
                for k in 0..n {
                    let (out, _) = tuple::contract(g, &full, k);
                    if out != target {
                        continue;
                    }
                    let phase = g.sub_phase(head, tuple::product(g, &out).1);
                    let mut s = algebra.chi(phase).clone();
                    if k % 2 == 1 {
                        s = ring.neg(&s);
                    }
                    terms.push((xi * d + i, s));
                }
                if full[..n] == target[..] {
                    let last = x[n - 1];
                    let sign = if n % 2 == 1 { ring.from_i64(-1) } else { ring.one() };
                    for (k, c) in right_m[last].column(i).iter() {
                        terms.push((xi * d + k, ring.mul(&sign, c)));
                    }
                }
            }
            SparseVec::from_terms(ring, terms)
        };
        Ok(Self::build(
            algebra,
            format!("cochains:{n}({})", mm.name),
            grades,
            left,
            Some(&right),
        ))
    }

    pub fn algebra(&self) -> &MetagroupAlgebra {
        &self.algebra
    }

    pub fn ring(&self) -> &Ring {
        self.algebra.ring()
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn set_name(&mut self, name: impl Into<String>) {
        self.name = name.into();
    }

    pub fn dim(&self) -> usize {
        self.grades.len()
    }

    pub fn grades(&self) -> &[usize] {
        &self.grades
    }

    pub fn is_two_sided(&self) -> bool {
        self.right.is_some()
    }

    pub fn left_matrix(&self, h: usize) -> &SparseMatrix {
        &self.left[h]
    }

    pub fn right_matrix(&self, h: usize) -> Option<&SparseMatrix> {
        self.right.as_ref().map(|r| &r[h])
    }

    pub fn left_matrices(&self) -> &[SparseMatrix] {
        &self.left
    }

    pub fn right_matrices(&self) -> Option<&[SparseMatrix]> {
        self.right.as_deref()
    }

    /// Basis indices of the module vectors of grade `g`.
    pub fn graded_part(&self, g: usize) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.grades[i] == g).collect()
    }

    pub fn act_left(&self, h: usize, v: &SparseVec) -> SparseVec {
        self.left[h].apply(self.ring(), v)
    }

    pub fn act_right(&self, v: &SparseVec, h: usize) -> SparseVec {
        let r = self.right.as_ref().expect("two-sided module");
        r[h].apply(self.ring(), v)
    }

    pub fn act_left_by(&self, a: &AlgebraElement, v: &SparseVec) -> SparseVec {
        let ring = self.ring();
        a.iter().fold(SparseVec::new(), |acc, (h, c)| acc.axpy(ring, c, &self.act_left(*h, v)))
    }

    pub fn act_right_by(&self, v: &SparseVec, a: &AlgebraElement) -> SparseVec {
        let ring = self.ring();
        a.iter().fold(SparseVec::new(), |acc, (h, c)| acc.axpy(ring, c, &self.act_right(v, *h)))
    }

    /// Exhaustive check of the grading, the unit action and the three
    /// twisted associativity laws on all basis triples.
    pub fn check_axioms(&self) -> AxiomReport {
        let alg = &self.algebra;
        let g = alg.group();
        let ring = self.ring();
        let m = g.size();
        let unit = g.unit();
        let mut report = AxiomReport::default();
        let in_grade = |v: &SparseVec, grade: usize| v.iter().all(|(k, _)| self.grades[*k] == grade);
        // left and right multiplication by a basis product, phase folded
        let by_product = |h: usize, s: usize| -> (usize, crate::ring::Scalar) {
            let (c, p) = g.basis_mul(h, s);
            (c, alg.chi(p).clone())
        };
        for x in 0..self.dim() {
            let gx = self.grades[x];
            let vx = SparseVec::unit(x, ring);
            if self.act_left(unit, &vx) != vx {
                report.record("unit acts trivially (left)", vec![x], || "e·x ≠ x".into());
            }
            if self.is_two_sided() && self.act_right(&vx, unit) != vx {
                report.record("unit acts trivially (right)", vec![x], || "x·e ≠ x".into());
            }
            for h in 0..m {
                let hx = self.act_left(h, &vx);
                if !in_grade(&hx, g.basis_mul(h, gx).0) {
                    report.record("grading (left)", vec![h, x], || {
                        format!("{}·x leaves grade {}", g.label(h), g.label(g.basis_mul(h, gx).0))
                    });
                }
                if self.is_two_sided() {
                    let xh = self.act_right(&vx, h);
                    if !in_grade(&xh, g.basis_mul(gx, h).0) {
                        report.record("grading (right)", vec![x, h], || {
                            format!("x·{} leaves grade {}", g.label(h), g.label(g.basis_mul(gx, h).0))
                        });
                    }
                }
                for s in 0..m {
                    // (hs)x = t3(h,s,g) h(sx)
                    let (hs, c) = by_product(h, s);
                    let lhs = self.act_left(hs, &vx).scale(ring, &c);
                    let rhs = self
                        .act_left(h, &self.act_left(s, &vx))
                        .scale(ring, alg.t3(h, s, gx));
                    if lhs != rhs {
                        report.record("twisted associativity (left, left)", vec![h, s, x], || {
                            format!("(hs)x ≠ t3·h(sx) for h={}, s={}", g.label(h), g.label(s))
                        });
                    }
                    if !self.is_two_sided() {
                        continue;
                    }
                    // (hx)s = t3(h,g,s) h(xs)
                    let lhs = self.act_right(&self.act_left(h, &vx), s);
                    let rhs = self
                        .act_left(h, &self.act_right(&vx, s))
                        .scale(ring, alg.t3(h, gx, s));
                    if lhs != rhs {
                        report.record("twisted associativity (left, right)", vec![h, s, x], || {
                            format!("(hx)s ≠ t3·h(xs) for h={}, s={}", g.label(h), g.label(s))
                        });
                    }
                    // (xh)s = t3(g,h,s) x(hs)
                    let lhs = self.act_right(&self.act_right(&vx, h), s);
                    let rhs = self
                        .act_right(&vx, hs)
                        .scale(ring, &ring.mul(&c, alg.t3(gx, h, s)));
                    if lhs != rhs {
                        report.record("twisted associativity (right, right)", vec![h, s, x], || {
                            format!("(xh)s ≠ t3·x(hs) for h={}, s={}", g.label(h), g.label(s))
                        });
                    }
                }
            }
        }
        report
    }
}

/// Phase of `y·{x}_l` (unit-phase product of `y` with the left-nested product of `x`).
pub(crate) fn head_phase(algebra: &MetagroupAlgebra, y: usize, x: &[usize]) -> Phase {
    let g = algebra.group();
    let (b, w) = tuple::product(g, x);
    g.add_phase(w, g.basis_mul(y, b).1)
}

/// `h·(x_0, ..)`: index of `((h x_0), ..)` and its coefficient.
pub(crate) fn outer_left(algebra: &MetagroupAlgebra, h: usize, x: &[usize]) -> (usize, crate::ring::Scalar) {
    let g = algebra.group();
    let m = g.size();
    let mut out = x.to_vec();
    out[0] = g.basis_mul(h, x[0]).0;
    let phase = g.sub_phase(head_phase(algebra, h, x), tuple::product(g, &out).1);
    (tuple::encode(&out, m), algebra.chi(phase).clone())
}

/// `(.., x_last)·h`: index of `(.., (x_last h))` and its coefficient.
pub(crate) fn outer_right(algebra: &MetagroupAlgebra, x: &[usize], h: usize) -> (usize, crate::ring::Scalar) {
    let g = algebra.group();
    let m = g.size();
    let mut full = x.to_vec();
    full.push(h);
    let (out, phase) = tuple::contraction_phase(g, &full, x.len() - 1);
    (tuple::encode(&out, m), algebra.chi(phase).clone())
}
