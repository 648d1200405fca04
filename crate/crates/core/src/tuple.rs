//! Indexing of basis tuples in base `m`, first entry most significant, and
//! the phase bookkeeping shared by chain modules and coboundaries.

use crate::metagroup::{MetagroupTable, Phase};

pub fn count(m: usize, len: usize) -> usize {
    m.pow(len as u32)
}

pub fn encode(tuple: &[usize], m: usize) -> usize {
    tuple.iter().fold(0, |acc, &x| acc * m + x)
}

pub fn decode(mut index: usize, m: usize, len: usize) -> Vec<usize> {
    let mut out = vec![0; len];
    for slot in out.iter_mut().rev() {
        *slot = index % m;
        index /= m;
    }
    out
}

/// Iterator over all tuples of length `len` in index order.
pub fn all(m: usize, len: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..count(m, len)).map(move |i| decode(i, m, len))
}

/// Basis and phase of the left-nested product of the tuple (unit if empty).
pub fn product(g: &MetagroupTable, tuple: &[usize]) -> (usize, Phase) {
    let mut it = tuple.iter();
    let Some(&first) = it.next() else {
        return (g.unit(), 0);
    };
    it.fold((first, 0), |(b, p), &x| {
        let (c, q) = g.basis_mul(b, x);
        (c, g.add_phase(p, q))
    })
}

/// Contracts positions `j` and `j+1` (0-based) into their product.
/// Returns the shorter tuple and the phase of that product.
pub fn contract(g: &MetagroupTable, tuple: &[usize], j: usize) -> (Vec<usize>, Phase) {
    let (c, p) = g.basis_mul(tuple[j], tuple[j + 1]);
    let mut out = Vec::with_capacity(tuple.len() - 1);
    out.extend_from_slice(&tuple[..j]);
    out.push(c);
    out.extend_from_slice(&tuple[j + 2..]);
    (out, p)
}

/// The phase of `{tuple}_l` relative to `{tuple}_{u}` where `u` contracts
/// positions `j`, `j+1` (0-based) first; plus the phase of that contraction.
/// Together they give the coefficient of the contracted tuple in twisted
/// alternating sums.
///
/// Both trees evaluate the same factors, so the sum equals the difference of
/// the left-nested product phases of the two tuples.
pub fn contraction_phase(g: &MetagroupTable, tuple: &[usize], j: usize) -> (Vec<usize>, Phase) {
    let (out, _) = contract(g, tuple, j);
    let phase = g.sub_phase(product(g, tuple).1, product(g, &out).1);
    (out, phase)
}
