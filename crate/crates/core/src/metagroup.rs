//! Finite metagroups in split form `B × F^×` with `F^×` cyclic of order `r`.
//!
//! The multiplication table stores, for each pair of basis indices, the basis
//! index of the product and a phase exponent. Phases are central, so the
//! product of general elements adds their exponents to the table phase.

use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, Result};

/// Exponent of the phase generator, taken modulo the phase order.
pub type Phase = u32;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Element {
    pub basis: usize,
    pub phase: Phase,
}

impl Element {
    pub fn new(basis: usize, phase: Phase) -> Element {
        Element { basis, phase }
    }

    pub fn basis(basis: usize) -> Element {
        Element { basis, phase: 0 }
    }
}

/// One violated axiom together with the first offending basis tuple.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub axiom: String,
    pub witness: Vec<usize>,
    pub detail: String,
    pub count: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub violations: Vec<Violation>,
}

impl AxiomReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    /// Records a failure; only the first witness per axiom is kept.
    pub fn record(&mut self, axiom: &str, witness: Vec<usize>, detail: impl FnOnce() -> String) {
        if let Some(v) = self.violations.iter_mut().find(|v| v.axiom == axiom) {
            v.count += 1;
            return;
        }
        self.violations.push(Violation {
            axiom: axiom.to_string(),
            witness,
            detail: detail(),
            count: 1,
        });
    }

    pub fn merge(&mut self, other: AxiomReport) {
        self.violations.extend(other.violations);
    }

    pub fn first_message(&self) -> String {
        self.violations
            .first()
            .map(|v| format!("{} violated at {:?}: {}", v.axiom, v.witness, v.detail))
            .unwrap_or_default()
    }
}

/// The six distinguished subsets of a metagroup, as sorted element lists.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Nuclei {
    pub commutative: Vec<Element>,
    pub left: Vec<Element>,
    pub middle: Vec<Element>,
    pub right: Vec<Element>,
    pub nucleus: Vec<Element>,
    pub center: Vec<Element>,
}

#[derive(Debug)]
pub struct MetagroupTable {
    name: String,
    labels: Vec<String>,
    phase_order: u32,
    unit: usize,
    table: Vec<(usize, Phase)>,
    t3_cache: OnceLock<Option<Vec<Phase>>>,
    central: OnceLock<bool>,
}

impl Clone for MetagroupTable {
    fn clone(&self) -> Self {
        MetagroupTable {
            name: self.name.clone(),
            labels: self.labels.clone(),
            phase_order: self.phase_order,
            unit: self.unit,
            table: self.table.clone(),
            t3_cache: OnceLock::new(),
            central: OnceLock::new(),
        }
    }
}

impl PartialEq for MetagroupTable {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels
            && self.phase_order == other.phase_order
            && self.unit == other.unit
            && self.table == other.table
    }
}

impl MetagroupTable {
    /// Builds a table and verifies every metagroup axiom.
    pub fn new(
        name: impl Into<String>,
        labels: Vec<String>,
        phase_order: u32,
        unit: usize,
        table: Vec<Vec<(usize, Phase)>>,
    ) -> Result<MetagroupTable> {
        let g = Self::new_unchecked(name, labels, phase_order, unit, table)?;
        let report = g.check_metagroup();
        if !report.is_ok() {
            return Err(Error::NotAMetagroup(report.first_message()));
        }
        Ok(g)
    }

    /// Builds a table checking only shape and index ranges.
    pub fn new_unchecked(
        name: impl Into<String>,
        labels: Vec<String>,
        phase_order: u32,
        unit: usize,
        table: Vec<Vec<(usize, Phase)>>,
    ) -> Result<MetagroupTable> {
        let m = labels.len();
        if m == 0 {
            return Err(Error::MalformedElement("empty basis".into()));
        }
        if phase_order == 0 {
            return Err(Error::MalformedElement("phase order must be at least 1".into()));
        }
        if unit >= m {
            return Err(Error::MalformedElement(format!("unit index {unit} out of range")));
        }
        if table.len() != m {
            return Err(Error::LengthMismatch { expected: m, got: table.len() });
        }
        let mut flat = Vec::with_capacity(m * m);
        for row in table {
            if row.len() != m {
                return Err(Error::LengthMismatch { expected: m, got: row.len() });
            }
            for (b, p) in row {
                if b >= m {
                    return Err(Error::MalformedElement(format!("basis index {b} out of range")));
                }
                if p >= phase_order {
                    return Err(Error::MalformedElement(format!("phase {p} out of range")));
                }
                flat.push((b, p));
            }
        }
        Ok(MetagroupTable {
            name: name.into(),
            labels,
            phase_order,
            unit,
            table: flat,
            t3_cache: OnceLock::new(),
            central: OnceLock::new(),
        })
    }

    /// Normalizes a full Cayley table on `N` elements into split form.
    ///
    /// `phase_generator` generates the central cyclic subgroup `F^×`. The
    /// first element of each `F^×`-orbit in input order becomes the basis
    /// representative.
    pub fn from_cayley_table(
        name: impl Into<String>,
        labels: &[String],
        table: &[Vec<usize>],
        unit: usize,
        phase_generator: usize,
    ) -> Result<MetagroupTable> {
        let n = labels.len();
        if table.len() != n || table.iter().any(|r| r.len() != n) {
            return Err(Error::LengthMismatch { expected: n, got: table.len() });
        }
        if unit >= n || phase_generator >= n || table.iter().flatten().any(|&x| x >= n) {
            return Err(Error::MalformedElement("index out of range".into()));
        }
        let z = phase_generator;
        for x in 0..n {
            if table[z][x] != table[x][z] {
                return Err(Error::NotAMetagroup(format!(
                    "phase generator does not commute with {}",
                    labels[x]
                )));
            }
        }
        // powers of z
        let mut powers = vec![unit];
        loop {
            let next = table[z][*powers.last().unwrap()];
            if next == unit {
                break;
            }
            if powers.contains(&next) || powers.len() > n {
                return Err(Error::NotAMetagroup("phase generator has no finite order".into()));
            }
            powers.push(next);
        }
        let r = powers.len() as u32;
        // decompose every element as z^k · representative
        let mut decomposition: Vec<Option<(usize, Phase)>> = vec![None; n];
        let mut reps = Vec::new();
        for x in 0..n {
            if decomposition[x].is_some() {
                continue;
            }
            let b = reps.len();
            reps.push(x);
            for (k, &zk) in powers.iter().enumerate() {
                let y = table[zk][x];
                if decomposition[y].is_some() {
                    return Err(Error::NotAMetagroup("phase orbits overlap".into()));
                }
                decomposition[y] = Some((b, k as Phase));
            }
        }
        let dec = |x: usize| decomposition[x].expect("every element decomposed");
        let rows = reps
            .iter()
            .map(|&a| reps.iter().map(|&b| dec(table[a][b])).collect())
            .collect();
        let rep_labels = reps.iter().map(|&x| labels[x].clone()).collect();
        let unit_basis = dec(unit).0;
        let g = Self::new(name, rep_labels, r, unit_basis, rows)?;
        // the split form must reproduce the input product exactly
        for x in 0..n {
            for y in 0..n {
                let (bx, px) = dec(x);
                let (by, py) = dec(y);
                let prod = g.mul(Element::new(bx, px), Element::new(by, py));
                if (prod.basis, prod.phase) != dec(table[x][y]) {
                    return Err(Error::NotAMetagroup(format!(
                        "phase generator is not central at ({}, {})",
                        labels[x], labels[y]
                    )));
                }
            }
        }
        Ok(g)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, b: usize) -> &str {
        &self.labels[b]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn phase_order(&self) -> u32 {
        self.phase_order
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn unit_element(&self) -> Element {
        Element::basis(self.unit)
    }

    /// The table as nested rows, for serialization.
    pub fn rows(&self) -> Vec<Vec<(usize, Phase)>> {
        self.table.chunks(self.size()).map(|r| r.to_vec()).collect()
    }

    pub fn add_phase(&self, a: Phase, b: Phase) -> Phase {
        ((a as u64 + b as u64) % self.phase_order as u64) as Phase
    }

    pub fn neg_phase(&self, a: Phase) -> Phase {
        (self.phase_order - a % self.phase_order) % self.phase_order
    }

    pub fn sub_phase(&self, a: Phase, b: Phase) -> Phase {
        self.add_phase(a, self.neg_phase(b))
    }

    /// Product of basis representatives.
    #[inline]
    pub fn basis_mul(&self, a: usize, b: usize) -> (usize, Phase) {
        self.table[a * self.size() + b]
    }

    #[inline]
    pub fn mul(&self, a: Element, b: Element) -> Element {
        let (c, p) = self.basis_mul(a.basis, b.basis);
        Element::new(c, self.add_phase(self.add_phase(a.phase, b.phase), p))
    }

    pub fn validate(&self, a: Element) -> Result<Element> {
        if a.basis >= self.size() || a.phase >= self.phase_order {
            return Err(Error::MalformedElement(format!("{a:?}")));
        }
        Ok(a)
    }

    /// Checked multiplication.
    pub fn try_mul(&self, a: Element, b: Element) -> Result<Element> {
        Ok(self.mul(self.validate(a)?, self.validate(b)?))
    }

    /// The unique `x` with `a x = b`.
    pub fn ldiv(&self, a: Element, b: Element) -> Element {
        let x = (0..self.size())
            .find(|&x| self.basis_mul(a.basis, x).0 == b.basis)
            .expect("Latin table");
        let p = self.basis_mul(a.basis, x).1;
        Element::new(x, self.sub_phase(b.phase, self.add_phase(a.phase, p)))
    }

    /// The unique `y` with `y a = b`.
    pub fn rdiv(&self, b: Element, a: Element) -> Element {
        let y = (0..self.size())
            .find(|&y| self.basis_mul(y, a.basis).0 == b.basis)
            .expect("Latin table");
        let p = self.basis_mul(y, a.basis).1;
        Element::new(y, self.sub_phase(b.phase, self.add_phase(a.phase, p)))
    }

    fn t3_direct(&self, a: usize, b: usize, c: usize) -> Result<Phase> {
        let (ab, p1) = self.basis_mul(a, b);
        let (abc, p2) = self.basis_mul(ab, c);
        let (bc, p3) = self.basis_mul(b, c);
        let (abc2, p4) = self.basis_mul(a, bc);
        if abc != abc2 {
            return Err(Error::NotAMetagroup(format!(
                "(ab)c and a(bc) differ in basis for ({}, {}, {})",
                self.labels[a], self.labels[b], self.labels[c]
            )));
        }
        Ok(self.sub_phase(self.add_phase(p1, p2), self.add_phase(p3, p4)))
    }

    fn t3_table(&self) -> Option<&Vec<Phase>> {
        self.t3_cache
            .get_or_init(|| {
                let m = self.size();
                let mut out = Vec::with_capacity(m * m * m);
                for a in 0..m {
                    for b in 0..m {
                        for c in 0..m {
                            out.push(self.t3_direct(a, b, c).ok()?);
                        }
                    }
                }
                Some(out)
            })
            .as_ref()
    }

    /// The phase `φ` with `(ab)c = φ · a(bc)` on basis representatives.
    pub fn t3(&self, a: usize, b: usize, c: usize) -> Result<Phase> {
        match self.t3_table() {
            Some(t) => {
                let m = self.size();
                Ok(t[(a * m + b) * m + c])
            }
            None => self.t3_direct(a, b, c),
        }
    }

    /// `t3` on elements; input phases do not matter.
    pub fn t3_elements(&self, a: Element, b: Element, c: Element) -> Result<Phase> {
        self.t3(a.basis, b.basis, c.basis)
    }

    /// The phase `φ` with `ab = φ · ba`.
    pub fn t2(&self, a: usize, b: usize) -> Result<Phase> {
        let (ab, p) = self.basis_mul(a, b);
        let (ba, q) = self.basis_mul(b, a);
        if ab != ba {
            return Err(Error::NotCentral(format!(
                "ab and ba differ in basis for ({}, {})",
                self.labels[a], self.labels[b]
            )));
        }
        Ok(self.sub_phase(p, q))
    }

    pub fn is_associative(&self) -> bool {
        match self.t3_table() {
            Some(t) => t.iter().all(|&p| p == 0),
            None => false,
        }
    }

    /// Whether `ab` and `ba` always share a basis component.
    pub fn is_central(&self) -> bool {
        *self.central.get_or_init(|| self.check_central().is_ok())
    }

    /// Verifies unique divisions, the unit law and basis agreement of `(ab)c`
    /// and `a(bc)`.
    pub fn check_metagroup(&self) -> AxiomReport {
        let m = self.size();
        let mut report = AxiomReport::default();
        for a in 0..m {
            let mut seen_row = vec![false; m];
            let mut seen_col = vec![false; m];
            for x in 0..m {
                let r = self.basis_mul(a, x).0;
                if std::mem::replace(&mut seen_row[r], true) {
                    report.record("left division", vec![a, r], || {
                        format!("{} x = {} has several solutions", self.labels[a], self.labels[r])
                    });
                }
                let c = self.basis_mul(x, a).0;
                if std::mem::replace(&mut seen_col[c], true) {
                    report.record("right division", vec![a, c], || {
                        format!("y {} = {} has several solutions", self.labels[a], self.labels[c])
                    });
                }
            }
        }
        for k in 0..m {
            if self.basis_mul(self.unit, k) != (k, 0) || self.basis_mul(k, self.unit) != (k, 0) {
                report.record("unit", vec![k], || {
                    format!("unit does not act trivially on {}", self.labels[k])
                });
            }
        }
        for a in 0..m {
            for b in 0..m {
                for c in 0..m {
                    if let Err(e) = self.t3_direct(a, b, c) {
                        report.record("twisted associativity", vec![a, b, c], || e.to_string());
                    }
                }
            }
        }
        report
    }

    /// Verifies that `ab` and `ba` agree up to a phase.
    pub fn check_central(&self) -> AxiomReport {
        let m = self.size();
        let mut report = AxiomReport::default();
        for a in 0..m {
            for b in 0..m {
                if let Err(e) = self.t2(a, b) {
                    report.record("twisted commutativity", vec![a, b], || e.to_string());
                }
            }
        }
        report
    }

    fn expand(&self, basis: impl Iterator<Item = usize>) -> Vec<Element> {
        basis
            .flat_map(|b| (0..self.phase_order).map(move |p| Element::new(b, p)))
            .collect()
    }

    /// Commutant, left/middle/right nuclei, nucleus and center.
    ///
    /// Phases are central, so membership depends only on the basis component.
    pub fn nuclei(&self) -> Nuclei {
        let m = self.size();
        let assoc = |a: usize, b: usize, c: usize| matches!(self.t3_direct(a, b, c), Ok(0));
        let commutes = |a: usize| (0..m).all(|b| self.basis_mul(a, b) == self.basis_mul(b, a));
        let com: Vec<usize> = (0..m).filter(|&a| commutes(a)).collect();
        let all_pairs = |f: &dyn Fn(usize, usize) -> bool| (0..m).all(|x| (0..m).all(|y| f(x, y)));
        let left: Vec<usize> = (0..m).filter(|&a| all_pairs(&|b, c| assoc(a, b, c))).collect();
        let middle: Vec<usize> = (0..m).filter(|&b| all_pairs(&|a, c| assoc(a, b, c))).collect();
        let right: Vec<usize> = (0..m).filter(|&c| all_pairs(&|a, b| assoc(a, b, c))).collect();
        let nucleus: Vec<usize> = left
            .iter()
            .copied()
            .filter(|x| middle.contains(x) && right.contains(x))
            .collect();
        let center: Vec<usize> = nucleus.iter().copied().filter(|x| com.contains(x)).collect();
        Nuclei {
            commutative: self.expand(com.into_iter()),
            left: self.expand(left.into_iter()),
            middle: self.expand(middle.into_iter()),
            right: self.expand(right.into_iter()),
            nucleus: self.expand(nucleus.into_iter()),
            center: self.expand(center.into_iter()),
        }
    }

    /// All elements in canonical order.
    pub fn elements(&self) -> Vec<Element> {
        self.expand(0..self.size())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic(n: usize) -> MetagroupTable {
        let labels = (0..n).map(|i| format!("g{i}")).collect();
        let table = (0..n).map(|a| (0..n).map(|b| ((a + b) % n, 0)).collect()).collect();
        MetagroupTable::new("cyclic", labels, 1, 0, table).unwrap()
    }

    #[test]
    fn trivial_group() {
        let g = MetagroupTable::new("one", vec!["e".into()], 1, 0, vec![vec![(0, 0)]]).unwrap();
        assert!(g.check_metagroup().is_ok());
        assert!(g.is_central());
        assert_eq!(g.t3(0, 0, 0).unwrap(), 0);
    }

    #[test]
    fn group_nuclei_are_everything() {
        let g = cyclic(3);
        let n = g.nuclei();
        assert_eq!(n.left.len(), 3);
        assert_eq!(n.center, g.elements());
    }

    #[test]
    fn broken_latin_row_reported() {
        let table = vec![vec![(0, 0), (1, 0)], vec![(1, 0), (1, 0)]];
        let g = MetagroupTable::new_unchecked("bad", vec!["e".into(), "a".into()], 1, 0, table).unwrap();
        let report = g.check_metagroup();
        assert!(report.violations.iter().any(|v| v.axiom == "left division"));
        assert!(MetagroupTable::new("bad", vec!["e".into(), "a".into()], 1, 0, g.rows()).is_err());
    }

    #[test]
    fn divisions_cancel() {
        let g = cyclic(5);
        for a in g.elements() {
            for b in g.elements() {
                assert_eq!(g.mul(a, g.ldiv(a, b)), b);
                assert_eq!(g.mul(g.rdiv(b, a), a), b);
            }
        }
    }

    #[test]
    fn cayley_table_normalization() {
        // Z/4 with phase generator 2 collapses to a two-element basis with r = 2
        let labels: Vec<String> = (0..4).map(|i| i.to_string()).collect();
        let table: Vec<Vec<usize>> = (0..4).map(|a| (0..4).map(|b| (a + b) % 4).collect()).collect();
        let g = MetagroupTable::from_cayley_table("z4", &labels, &table, 0, 2).unwrap();
        assert_eq!(g.size(), 2);
        assert_eq!(g.phase_order(), 2);
        assert_eq!(g.labels(), &["0".to_string(), "1".to_string()]);
        assert_eq!(g.basis_mul(1, 1), (0, 1));
    }

    #[test]
    fn out_of_range_is_malformed() {
        let g = cyclic(2);
        assert!(matches!(g.try_mul(Element::new(5, 0), Element::basis(0)), Err(Error::MalformedElement(_))));
    }
}
