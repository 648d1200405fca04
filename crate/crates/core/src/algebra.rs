//! Metagroup algebras `T[G]` in reduced form.
//!
//! Elements are sparse coefficient vectors over the basis of `G`; the phase
//! of a table entry is folded into the coefficient through the phase
//! embedding `χ`.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::linalg::{SparseMatrix, SparseVec};
use crate::metagroup::{Element, MetagroupTable, Phase};
use crate::ring::{PhaseEmbedding, Ring, Scalar};

/// Algebra elements are sparse vectors indexed by basis position.
pub type AlgebraElement = SparseVec;

/// Elements of `A ⊗ A^op`, indexed by `left * m + right`.
pub type EnvelopeElement = SparseVec;

#[derive(Clone, Debug)]
pub struct MetagroupAlgebra {
    group: Arc<MetagroupTable>,
    ring: Ring,
    chi: PhaseEmbedding,
}

impl MetagroupAlgebra {
    pub fn new(group: Arc<MetagroupTable>, ring: Ring) -> Result<MetagroupAlgebra> {
        let chi = ring.phase_embedding(group.phase_order())?;
        Ok(MetagroupAlgebra { group, ring, chi })
    }

    pub fn group(&self) -> &MetagroupTable {
        &self.group
    }

    pub fn group_arc(&self) -> &Arc<MetagroupTable> {
        &self.group
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn dim(&self) -> usize {
        self.group.size()
    }

    /// `χ(φ)` in the coefficient ring.
    pub fn chi(&self, phase: Phase) -> &Scalar {
        self.chi.chi(phase % self.group.phase_order())
    }

    pub fn chi_inv(&self, phase: Phase) -> &Scalar {
        self.chi(self.group.neg_phase(phase))
    }

    /// `χ(t3(a, b, c))`.
    pub fn t3(&self, a: usize, b: usize, c: usize) -> &Scalar {
        self.chi(self.group.t3(a, b, c).expect("validated metagroup"))
    }

    /// `ab = s · c` on basis elements.
    #[inline]
    pub fn basis_product(&self, a: usize, b: usize) -> (usize, &Scalar) {
        let (c, p) = self.group.basis_mul(a, b);
        (c, self.chi(p))
    }

    pub fn one(&self) -> AlgebraElement {
        SparseVec::unit(self.group.unit(), &self.ring)
    }

    pub fn basis(&self, a: usize) -> AlgebraElement {
        SparseVec::unit(a, &self.ring)
    }

    /// The image of a group element: `χ(phase) · basis`.
    pub fn element(&self, g: Element) -> AlgebraElement {
        SparseVec::single(g.basis, self.chi(g.phase).clone())
    }

    pub fn check_element(&self, x: &AlgebraElement) -> Result<()> {
        match x.max_index() {
            Some(i) if i >= self.dim() => Err(Error::MalformedElement(format!(
                "basis index {i} out of range for dimension {}",
                self.dim()
            ))),
            _ => Ok(()),
        }
    }

    pub fn mul(&self, x: &AlgebraElement, y: &AlgebraElement) -> AlgebraElement {
        let ring = &self.ring;
        let mut terms = Vec::with_capacity(x.nnz() * y.nnz());
        for (a, xa) in x.iter() {
            for (b, yb) in y.iter() {
                let (c, s) = self.basis_product(*a, *b);
                terms.push((c, ring.mul(&ring.mul(xa, yb), s)));
            }
        }
        SparseVec::from_terms(ring, terms)
    }

    /// Checked product.
    pub fn try_mul(&self, x: &AlgebraElement, y: &AlgebraElement) -> Result<AlgebraElement> {
        self.check_element(x)?;
        self.check_element(y)?;
        Ok(self.mul(x, y))
    }

    /// Product in the opposite algebra: `x ∘ y = yx`.
    pub fn opposite_mul(&self, x: &AlgebraElement, y: &AlgebraElement) -> AlgebraElement {
        self.mul(y, x)
    }

    /// Product in `A ⊗ A^op`: `(a ⊗ b*)(c ⊗ d*) = (ac) ⊗ (db)*`.
    pub fn envelope_mul(&self, x: &EnvelopeElement, y: &EnvelopeElement) -> EnvelopeElement {
        let ring = &self.ring;
        let m = self.dim();
        let mut terms = Vec::new();
        for (i, xi) in x.iter() {
            for (j, yj) in y.iter() {
                let (a, b) = (i / m, i % m);
                let (c, d) = (j / m, j % m);
                let (ac, s) = self.basis_product(a, c);
                let (db, t) = self.basis_product(d, b);
                let coeff = ring.mul(&ring.mul(xi, yj), &ring.mul(s, t));
                terms.push((ac * m + db, coeff));
            }
        }
        SparseVec::from_terms(ring, terms)
    }

    /// Matrices of `x ↦ hx` and `x ↦ xh`, acting on coefficient columns.
    pub fn mult_operators(&self, h: &AlgebraElement) -> (SparseMatrix, SparseMatrix) {
        let m = self.dim();
        let left = (0..m).map(|x| self.mul(h, &self.basis(x))).collect();
        let right = (0..m).map(|x| self.mul(&self.basis(x), h)).collect();
        (SparseMatrix::from_columns(m, left), SparseMatrix::from_columns(m, right))
    }

    /// The operator combination `x0 · (L_{x1}, R_{x2})` on basis elements,
    /// where `x L_a L_b = b(ax)`, `x L_a R_b = (ax)b` and `x R_a R_b = (xa)b`.
    ///
    /// With `twisted` the first and last terms carry `χ(t3(x0,x1,x2))^{-1}`.
    pub fn envelope_operator_action(&self, x0: usize, x1: usize, x2: usize, twisted: bool) -> Result<AlgebraElement> {
        let ch = self.ring.characteristic();
        if ch == 2 || ch == 3 {
            return Err(Error::RingIncompatible(format!(
                "operator action needs characteristic other than 2 and 3, got {ch}"
            )));
        }
        let ring = &self.ring;
        let b = |i| self.basis(i);
        let ll = self.mul(&b(x2), &self.mul(&b(x1), &b(x0)));
        let lr = self.mul(&self.mul(&b(x1), &b(x0)), &b(x2));
        let rr = self.mul(&self.mul(&b(x0), &b(x1)), &b(x2));
        let twist = if twisted {
            self.chi_inv(self.group.t3(x0, x1, x2)?).clone()
        } else {
            ring.one()
        };
        Ok(ll.add(ring, &rr).scale(ring, &twist).sub(ring, &lr))
    }
}
