//! Cayley-Dickson doubling on signed basis tables, generator metagroups and
//! direct products of metagroups with finite groups.

use crate::error::{Error, Result};
use crate::finite_group::FiniteGroup;
use crate::metagroup::MetagroupTable;
use crate::ring::{Ring, Scalar};

/// Largest supported doubling level (basis size 32).
pub const MAX_LEVEL: usize = 5;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CdParams {
    pub level: usize,
    pub scalars: Vec<i8>,
}

impl CdParams {
    /// All doubling scalars equal to `+1`.
    pub fn real(level: usize) -> CdParams {
        CdParams {
            level,
            scalars: vec![1; level],
        }
    }
}

/// Basis `i_0 .. i_{2^n - 1}` with signed products and a conjugation sign per
/// basis element. Doubling sends `(a, b)` to `a + b·l` with `l = i_{2^(n-1)}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CdTable {
    scalars: Vec<i8>,
    table: Vec<(usize, i8)>,
    conj: Vec<i8>,
}

impl CdTable {
    /// The one-dimensional base algebra spanned by `i_0`.
    pub fn base() -> CdTable {
        CdTable {
            scalars: Vec::new(),
            table: vec![(0, 1)],
            conj: vec![1],
        }
    }

    pub fn new(params: &CdParams) -> Result<CdTable> {
        if params.scalars.len() != params.level {
            return Err(Error::LengthMismatch {
                expected: params.level,
                got: params.scalars.len(),
            });
        }
        params.scalars.iter().try_fold(CdTable::base(), |t, &f| t.double(f))
    }

    pub fn level(&self) -> usize {
        self.scalars.len()
    }

    pub fn size(&self) -> usize {
        self.conj.len()
    }

    pub fn conj_sign(&self, a: usize) -> i8 {
        self.conj[a]
    }

    pub fn mul(&self, a: usize, b: usize) -> (usize, i8) {
        self.table[a * self.size() + b]
    }

    /// One doubling step `C(A, f)` with `(a + bl)(c + dl) = (ac − f d̄ b) + (da + b c̄) l`.
    pub fn double(&self, f: i8) -> Result<CdTable> {
        if self.level() >= MAX_LEVEL {
            return Err(Error::CapExceeded(format!("doubling level above {MAX_LEVEL}")));
        }
        if f != 1 && f != -1 {
            return Err(Error::BadInput(format!("doubling scalar {f} is not a unit sign")));
        }
        let m = self.size();
        let n = 2 * m;
        let mut table = vec![(0, 0); n * n];
        for x in 0..n {
            for y in 0..n {
                let (xa, xl) = (x % m, x >= m);
                let (ya, yl) = (y % m, y >= m);
                let (idx, sign) = match (xl, yl) {
                    (false, false) => self.mul(xa, ya),
                    // a · (d l) = (d a) l
                    (false, true) => {
                        let (k, s) = self.mul(ya, xa);
                        (k + m, s)
                    }
                    // (b l) · c = (b c̄) l
                    (true, false) => {
                        let (k, s) = self.mul(xa, ya);
                        (k + m, s * self.conj[ya])
                    }
                    // (b l)(d l) = −f d̄ b
                    (true, true) => {
                        let (k, s) = self.mul(ya, xa);
                        (k, -f * self.conj[ya] * s)
                    }
                };
                table[x * n + y] = (idx, sign);
            }
        }
        let conj = self.conj.iter().copied().chain(std::iter::repeat_n(-1, m)).collect();
        let mut scalars = self.scalars.clone();
        scalars.push(f);
        Ok(CdTable { scalars, table, conj })
    }

    pub fn labels(&self) -> Vec<String> {
        (0..self.size()).map(|i| format!("i{i}")).collect()
    }

    /// The generator metagroup: basis `i_k`, phase group `{±1}`.
    pub fn to_metagroup(&self, name: impl Into<String>) -> Result<MetagroupTable> {
        let m = self.size();
        let rows = (0..m)
            .map(|a| {
                (0..m)
                    .map(|b| {
                        let (k, s) = self.mul(a, b);
                        (k, u32::from(s < 0))
                    })
                    .collect()
            })
            .collect();
        MetagroupTable::new(name, self.labels(), 2, 0, rows)
    }

    /// Product of dense coefficient vectors over the rationals.
    pub fn multiply(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let m = self.size();
        let mut out = vec![Scalar::from_integer(0.into()); m];
        for (a, xa) in x.iter().enumerate() {
            if xa == &Scalar::from_integer(0.into()) {
                continue;
            }
            for (b, yb) in y.iter().enumerate() {
                let (k, s) = self.mul(a, b);
                out[k] += xa * yb * Scalar::from_integer(s.into());
            }
        }
        out
    }

    pub fn conjugate(&self, x: &[Scalar]) -> Vec<Scalar> {
        x.iter()
            .zip(&self.conj)
            .map(|(c, &s)| c * Scalar::from_integer(s.into()))
            .collect()
    }

    /// `T(x)` with `x + x̄ = T(x)·1`.
    pub fn trace(&self, x: &[Scalar]) -> Scalar {
        let sum: Vec<Scalar> = x.iter().zip(self.conjugate(x)).map(|(a, b)| a + b).collect();
        sum[0].clone()
    }

    /// `N(x)` with `x x̄ = N(x)·1`.
    pub fn norm(&self, x: &[Scalar]) -> Scalar {
        self.multiply(x, &self.conjugate(x))[0].clone()
    }

    /// `Im(z) = z − T(z)/2`.
    pub fn imaginary_part(&self, z: &[Scalar]) -> Vec<Scalar> {
        let half = self.trace(z) / Scalar::from_integer(2.into());
        let mut out = z.to_vec();
        out[0] -= half;
        out
    }

    /// Coefficient vector of basis element `a`.
    pub fn basis_vector(&self, a: usize) -> Vec<Scalar> {
        let ring = Ring::Rationals;
        (0..self.size()).map(|k| if k == a { ring.one() } else { ring.zero() }).collect()
    }
}

/// The metagroup of Cayley-Dickson generators at the given level.
pub fn generator_metagroup(params: &CdParams) -> Result<MetagroupTable> {
    let signs: Vec<String> = params
        .scalars
        .iter()
        .map(|&f| if f > 0 { "+1".to_string() } else { "-1".to_string() })
        .collect();
    let name = if signs.is_empty() {
        format!("cd:level={}", params.level)
    } else {
        format!("cd:level={},f={}", params.level, signs.join(","))
    };
    CdTable::new(params)?.to_metagroup(name)
}

/// The metagroup on `B_G × H`.
///
/// Without `center` the phase group of `G` is kept and `H` only enlarges the
/// basis. With `center = Some(z)`, `z` must be a central element of `H` whose
/// order equals the phase order of `G`; the phase generator of `G` is then
/// identified with `z`, giving basis `B_G × H/⟨z⟩`.
pub fn product_with_group(
    g: &MetagroupTable,
    h: &FiniteGroup,
    center: Option<usize>,
) -> Result<MetagroupTable> {
    let m = g.size();
    let k = h.order();
    let name = match center {
        None => format!("{}*{}", g.name(), h.name()),
        Some(z) => format!("{}*{}/{}", g.name(), h.name(), h.labels()[z]),
    };
    let labels: Vec<String> = (0..m)
        .flat_map(|a| (0..k).map(move |b| (a, b)))
        .map(|(a, b)| format!("{}*{}", g.label(a), h.labels()[b]))
        .collect();
    match center {
        None => {
            let rows = (0..m * k)
                .map(|x| {
                    (0..m * k)
                        .map(|y| {
                            let (c, p) = g.basis_mul(x / k, y / k);
                            (c * k + h.mul(x % k, y % k), p)
                        })
                        .collect()
                })
                .collect();
            MetagroupTable::new(name, labels, g.phase_order(), g.unit() * k + h.unit(), rows)
        }
        Some(z) => {
            if z >= k {
                return Err(Error::InvalidGroup(format!("central element {z} out of range")));
            }
            if !h.is_central(z) {
                return Err(Error::InvalidGroup(format!("{} is not central", h.labels()[z])));
            }
            if h.element_order(z) != g.phase_order() as usize {
                return Err(Error::InvalidGroup(format!(
                    "{} has order {}, phase group has order {}",
                    h.labels()[z],
                    h.element_order(z),
                    g.phase_order()
                )));
            }
            let zpow = |p: u32| (0..p).fold(h.unit(), |acc, _| h.mul(acc, z));
            let table: Vec<Vec<usize>> = (0..m * k)
                .map(|x| {
                    (0..m * k)
                        .map(|y| {
                            let (c, p) = g.basis_mul(x / k, y / k);
                            c * k + h.mul(zpow(p), h.mul(x % k, y % k))
                        })
                        .collect()
                })
                .collect();
            MetagroupTable::from_cayley_table(name, &labels, &table, g.unit() * k + h.unit(), g.unit() * k + z)
        }
    }
}
