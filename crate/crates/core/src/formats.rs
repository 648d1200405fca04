//! JSON interchange formats for metagroups, algebra elements, modules,
//! cochains, cohomology results and `t_n` queries.
//!
//! Scalars are exact strings such as `"-3/2"`; matrices are row-major.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::algebra::MetagroupAlgebra;
use crate::cohomology::{CochainSpace, CohomologyGroup};
use crate::error::{Error, Result};
use crate::gmodule::GradedBimodule;
use crate::linalg::{SparseMatrix, SparseVec};
use crate::metagroup::{MetagroupTable, Phase};
use crate::paren::{ParenTree, Permutation, QVector};
use crate::ring::{format_scalar, Ring};
use crate::tuple;

fn bad(msg: impl Into<String>) -> Error {
    Error::BadInput(msg.into())
}

/// `{ "name", "basis", "phase_order", "unit", "table" }` with table entries
/// `[basis, exponent]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MetagroupJson {
    pub name: String,
    pub basis: Vec<String>,
    pub phase_order: u32,
    pub unit: usize,
    pub table: Vec<Vec<(usize, Phase)>>,
}

impl MetagroupJson {
    pub fn from_table(g: &MetagroupTable) -> MetagroupJson {
        MetagroupJson {
            name: g.name().to_string(),
            basis: g.labels().to_vec(),
            phase_order: g.phase_order(),
            unit: g.unit(),
            table: g.rows(),
        }
    }

    /// Builds the table after checking every metagroup axiom.
    pub fn into_table(self) -> Result<MetagroupTable> {
        MetagroupTable::new(self.name, self.basis, self.phase_order, self.unit, self.table)
    }

    /// Builds the table checking only its shape, so that defects can be reported.
    pub fn into_table_unchecked(self) -> Result<MetagroupTable> {
        MetagroupTable::new_unchecked(self.name, self.basis, self.phase_order, self.unit, self.table)
    }
}

pub fn metagroup_to_string(g: &MetagroupTable) -> String {
    to_pretty(&MetagroupJson::from_table(g))
}

pub fn parse_metagroup_json(text: &str) -> Result<MetagroupJson> {
    serde_json::from_str(text).map_err(|e| bad(format!("metagroup JSON: {e}")))
}

/// Pretty JSON with a trailing newline.
pub fn to_pretty<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable value");
    s.push('\n');
    s
}

/// `{ "ring": "Q", "coeffs": { "label": "-3/2" } }`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ElementJson {
    pub ring: String,
    pub coeffs: BTreeMap<String, String>,
}

impl ElementJson {
    pub fn from_element(algebra: &MetagroupAlgebra, x: &SparseVec) -> ElementJson {
        let g = algebra.group();
        ElementJson {
            ring: algebra.ring().to_string(),
            coeffs: x
                .iter()
                .map(|(i, c)| (g.label(*i).to_string(), format_scalar(c)))
                .collect(),
        }
    }

    pub fn to_element(&self, algebra: &MetagroupAlgebra) -> Result<SparseVec> {
        let ring: Ring = self.ring.parse()?;
        if &ring != algebra.ring() {
            return Err(Error::RingIncompatible(format!(
                "element over {ring}, algebra over {}",
                algebra.ring()
            )));
        }
        let g = algebra.group();
        let terms = self
            .coeffs
            .iter()
            .map(|(label, c)| {
                let i = g
                    .index_of(label)
                    .ok_or_else(|| Error::MalformedElement(format!("unknown basis label {label:?}")))?;
                Ok((i, ring.parse_scalar(c)?))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(SparseVec::from_terms(&ring, terms))
    }
}

/// Module as ranks per grade, explicit grades of the basis, and row-major
/// action matrices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleJson {
    pub name: String,
    pub ring: String,
    pub metagroup: String,
    pub ranks: BTreeMap<String, usize>,
    pub grades: Vec<String>,
    pub left: Vec<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub right: Option<Vec<Vec<Vec<String>>>>,
}

fn matrix_rows(m: &SparseMatrix) -> Vec<Vec<String>> {
    m.to_dense()
        .iter()
        .map(|row| row.iter().map(format_scalar).collect())
        .collect()
}

fn matrix_from_rows(ring: &Ring, rows: &[Vec<String>], dim: usize) -> Result<SparseMatrix> {
    if rows.len() != dim || rows.iter().any(|r| r.len() != dim) {
        return Err(bad(format!("action matrix must be {dim}x{dim}")));
    }
    let mut triplets = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        for (j, c) in row.iter().enumerate() {
            let v = ring.parse_scalar(c)?;
            if v != ring.zero() {
                triplets.push((i, j, v));
            }
        }
    }
    Ok(SparseMatrix::from_triplets(ring, dim, dim, triplets))
}

impl ModuleJson {
    pub fn from_module(module: &GradedBimodule) -> ModuleJson {
        let g = module.algebra().group();
        let mut ranks = BTreeMap::new();
        for &h in module.grades() {
            *ranks.entry(g.label(h).to_string()).or_insert(0) += 1;
        }
        ModuleJson {
            name: module.name().to_string(),
            ring: module.ring().to_string(),
            metagroup: g.name().to_string(),
            ranks,
            grades: module.grades().iter().map(|&h| g.label(h).to_string()).collect(),
            left: module.left_matrices().iter().map(matrix_rows).collect(),
            right: module
                .right_matrices()
                .map(|r| r.iter().map(matrix_rows).collect()),
        }
    }

    pub fn to_module(&self, algebra: &MetagroupAlgebra) -> Result<GradedBimodule> {
        let g = algebra.group();
        let ring = algebra.ring();
        if self.ring != ring.to_string() {
            return Err(Error::RingIncompatible(format!("module over {}, algebra over {ring}", self.ring)));
        }
        let grades = self
            .grades
            .iter()
            .map(|l| g.index_of(l).ok_or_else(|| bad(format!("unknown grade {l:?}"))))
            .collect::<Result<Vec<_>>>()?;
        let mut counted = BTreeMap::new();
        for &h in &grades {
            *counted.entry(g.label(h).to_string()).or_insert(0usize) += 1;
        }
        counted.retain(|_, v| *v > 0);
        let mut declared = self.ranks.clone();
        declared.retain(|_, v| *v > 0);
        if counted != declared {
            return Err(bad("ranks per grade disagree with the grade list"));
        }
        let d = grades.len();
        let parse_all = |mats: &[Vec<Vec<String>>]| {
            mats.iter()
                .map(|m| matrix_from_rows(ring, m, d))
                .collect::<Result<Vec<_>>>()
        };
        let left = parse_all(&self.left)?;
        let right = self.right.as_deref().map(parse_all).transpose()?;
        GradedBimodule::new(algebra.clone(), self.name.clone(), grades, left, right)
    }
}

/// Key of a module basis vector: group labels for the regular module,
/// decimal indices otherwise.
pub fn module_key(module: &GradedBimodule, k: usize) -> String {
    if module.name() == "regular" {
        module.algebra().group().label(k).to_string()
    } else {
        k.to_string()
    }
}

fn module_index(module: &GradedBimodule, key: &str) -> Result<usize> {
    let idx = if module.name() == "regular" {
        module.algebra().group().index_of(key)
    } else {
        key.parse::<usize>().ok()
    };
    idx.filter(|&k| k < module.dim())
        .ok_or_else(|| bad(format!("unknown module basis key {key:?}")))
}

/// One value `f(args)` of a cochain.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CochainValue {
    pub args: Vec<String>,
    pub value: BTreeMap<String, String>,
}

/// A cochain file; tuples not listed map to zero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CochainJson {
    pub metagroup: String,
    pub ring: String,
    pub module: String,
    pub degree: usize,
    pub values: Vec<CochainValue>,
}

/// Nonzero values of a cochain, in canonical tuple order.
pub fn cochain_values(module: &GradedBimodule, space: &CochainSpace, f: &SparseVec) -> Vec<CochainValue> {
    let g = module.algebra().group();
    (0..space.tuples())
        .filter_map(|t| {
            let v = space.value(f, t);
            (!v.is_zero()).then(|| CochainValue {
                args: space.tuple(t).iter().map(|&b| g.label(b).to_string()).collect(),
                value: v.iter().map(|(k, c)| (module_key(module, *k), format_scalar(c))).collect(),
            })
        })
        .collect()
}

impl CochainJson {
    pub fn from_cochain(module: &GradedBimodule, space: &CochainSpace, f: &SparseVec) -> CochainJson {
        CochainJson {
            metagroup: module.algebra().group().name().to_string(),
            ring: module.ring().to_string(),
            module: module.name().to_string(),
            degree: space.degree(),
            values: cochain_values(module, space, f),
        }
    }

    /// Coordinates of the cochain in `space`; fails on values outside the support.
    pub fn to_cochain(&self, module: &GradedBimodule, space: &CochainSpace) -> Result<SparseVec> {
        let ring = module.ring();
        if self.ring != ring.to_string() {
            return Err(Error::RingIncompatible(format!("cochain over {}, module over {ring}", self.ring)));
        }
        if self.degree != space.degree() {
            return Err(Error::LengthMismatch {
                expected: space.degree(),
                got: self.degree,
            });
        }
        let g = module.algebra().group();
        let mut terms = Vec::new();
        for entry in &self.values {
            if entry.args.len() != self.degree {
                return Err(Error::LengthMismatch {
                    expected: self.degree,
                    got: entry.args.len(),
                });
            }
            let args = entry
                .args
                .iter()
                .map(|l| g.index_of(l).ok_or_else(|| Error::MalformedElement(format!("unknown basis label {l:?}"))))
                .collect::<Result<Vec<_>>>()?;
            let t = tuple::encode(&args, g.size());
            for (key, c) in &entry.value {
                let k = module_index(module, key)?;
                let idx = space.index(t, k).ok_or_else(|| {
                    bad(format!("value at {:?} leaves the {} support", entry.args, space.support()))
                })?;
                terms.push((idx, ring.parse_scalar(c)?));
            }
        }
        Ok(SparseVec::from_terms(ring, terms))
    }
}

/// Integer as a JSON number when it fits, else as a decimal string.
fn integer_value(x: &num_bigint::BigInt) -> Value {
    use num_traits::ToPrimitive;
    match x.to_u64() {
        Some(v) => Value::from(v),
        None => Value::from(x.to_string()),
    }
}

/// Result of a cohomology computation.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CohomologyJson {
    pub n: usize,
    pub ring: String,
    pub metagroup: String,
    pub module: String,
    pub support: String,
    #[serde(rename = "dim_Z")]
    pub dim_z: usize,
    #[serde(rename = "dim_B")]
    pub dim_b: usize,
    #[serde(rename = "H")]
    pub h: HJson,
    pub complex_check: String,
    pub witnesses: Vec<Vec<CochainValue>>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HJson {
    pub rank: usize,
    pub torsion: Vec<Value>,
}

impl CohomologyJson {
    pub fn from_group(module: &GradedBimodule, group: &CohomologyGroup) -> Result<CohomologyJson> {
        let space = CochainSpace::new(module, group.degree, group.support)?;
        Ok(CohomologyJson {
            n: group.degree,
            ring: group.ring.clone(),
            metagroup: module.algebra().group().name().to_string(),
            module: module.name().to_string(),
            support: group.support.to_string(),
            dim_z: group.dim_z,
            dim_b: group.dim_b,
            h: HJson {
                rank: group.rank,
                torsion: group.torsion.iter().map(integer_value).collect(),
            },
            complex_check: "ok".into(),
            witnesses: group
                .representatives
                .iter()
                .map(|z| cochain_values(module, &space, z))
                .collect(),
        })
    }
}

/// A `t_n` query: basis labels with optional phases, two trees (as
/// QVectors) and a permutation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TnQuery {
    pub elements: Vec<String>,
    #[serde(default)]
    pub phases: Option<Vec<Phase>>,
    pub q: QVector,
    pub u: QVector,
    #[serde(default)]
    pub permutation: Option<Vec<usize>>,
}

/// Parsed `t_n` query.
pub struct TnInput {
    pub elements: Vec<crate::metagroup::Element>,
    pub q: ParenTree,
    pub u: ParenTree,
    pub permutation: Permutation,
}

impl TnQuery {
    pub fn resolve(&self, g: &MetagroupTable) -> Result<TnInput> {
        let n = self.elements.len();
        let phases = self.phases.clone().unwrap_or_else(|| vec![0; n]);
        if phases.len() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                got: phases.len(),
            });
        }
        let elements = self
            .elements
            .iter()
            .zip(phases)
            .map(|(l, p)| {
                let b = g
                    .index_of(l)
                    .ok_or_else(|| Error::MalformedElement(format!("unknown basis label {l:?}")))?;
                g.validate(crate::metagroup::Element::new(b, p))
            })
            .collect::<Result<Vec<_>>>()?;
        let permutation = match &self.permutation {
            Some(p) => Permutation::new(p.clone())?,
            None => Permutation::identity(n),
        };
        Ok(TnInput {
            elements,
            q: ParenTree::from_qvector(&self.q)?,
            u: ParenTree::from_qvector(&self.u)?,
            permutation,
        })
    }
}
