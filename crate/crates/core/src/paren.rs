//! Parenthesizations as full binary trees, the position-vector encoding, and
//! the twist `t_n` relating two ordered products of the same factors.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::metagroup::{Element, MetagroupTable, Phase};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ParenTree {
    Leaf,
    Node(Box<ParenTree>, Box<ParenTree>),
}

/// Position-vector encoding: entry `i` holds `(opens, closes)` at the gap
/// before factor `i` (the last entry is the gap after the final factor).
/// Every internal node, including the root, contributes one pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct QVector(pub Vec<(usize, usize)>);

impl ParenTree {
    pub fn node(l: ParenTree, r: ParenTree) -> ParenTree {
        ParenTree::Node(Box::new(l), Box::new(r))
    }

    pub fn leaves(&self) -> usize {
        match self {
            ParenTree::Leaf => 1,
            ParenTree::Node(l, r) => l.leaves() + r.leaves(),
        }
    }

    /// Left-nested product of the given subtrees: `(((t1 t2) t3) ...)`.
    pub fn left_fold(parts: Vec<ParenTree>) -> ParenTree {
        let mut it = parts.into_iter();
        let first = it.next().expect("at least one factor");
        it.fold(first, ParenTree::node)
    }

    /// `(...((x1 x2) x3)...) xn`.
    pub fn left_comb(n: usize) -> ParenTree {
        assert!(n >= 1);
        ParenTree::left_fold(vec![ParenTree::Leaf; n])
    }

    /// `x1 (x2 (... (x_{n-1} xn)))`.
    pub fn right_comb(n: usize) -> ParenTree {
        assert!(n >= 1);
        (1..n).fold(ParenTree::Leaf, |acc, _| ParenTree::node(ParenTree::Leaf, acc))
    }

    /// Multiplies factors `j` and `j+1` (1-based) first, then left-nests the
    /// resulting `n-1` factors.
    pub fn contract_pair(n: usize, j: usize) -> ParenTree {
        assert!(n >= 2 && j >= 1 && j < n);
        let mut parts = vec![ParenTree::Leaf; n - 1];
        parts[j - 1] = ParenTree::node(ParenTree::Leaf, ParenTree::Leaf);
        ParenTree::left_fold(parts)
    }

    /// `x1 · {x2, ..., xn}` with the tail left-nested.
    pub fn head_times_left(n: usize) -> ParenTree {
        assert!(n >= 2);
        ParenTree::node(ParenTree::Leaf, ParenTree::left_comb(n - 1))
    }

    /// `(x1 · {x2, ..., x_{n-1}}) · xn` with the middle left-nested.
    pub fn head_middle_last(n: usize) -> ParenTree {
        assert!(n >= 3);
        ParenTree::node(ParenTree::head_times_left(n - 1), ParenTree::Leaf)
    }

    /// Every full binary tree with `n` leaves, in a fixed order.
    pub fn all(n: usize) -> Vec<ParenTree> {
        assert!(n >= 1);
        if n == 1 {
            return vec![ParenTree::Leaf];
        }
        let mut out = Vec::new();
        for k in 1..n {
            for l in ParenTree::all(k) {
                for r in ParenTree::all(n - k) {
                    out.push(ParenTree::node(l.clone(), r));
                }
            }
        }
        out
    }

    /// Removes leaf `k` (0-based); its parent is replaced by the sibling.
    pub fn remove_leaf(&self, k: usize) -> Option<ParenTree> {
        match self {
            ParenTree::Leaf => None,
            ParenTree::Node(l, r) => {
                let nl = l.leaves();
                if k < nl {
                    Some(match l.remove_leaf(k) {
                        None => (**r).clone(),
                        Some(t) => ParenTree::node(t, (**r).clone()),
                    })
                } else {
                    Some(match r.remove_leaf(k - nl) {
                        None => (**l).clone(),
                        Some(t) => ParenTree::node((**l).clone(), t),
                    })
                }
            }
        }
    }

    pub fn to_qvector(&self) -> QVector {
        let n = self.leaves();
        let mut q = vec![(0, 0); n + 1];
        fn walk(t: &ParenTree, start: usize, q: &mut [(usize, usize)]) -> usize {
            match t {
                ParenTree::Leaf => 1,
                ParenTree::Node(l, r) => {
                    let a = walk(l, start, q);
                    let b = walk(r, start + a, q);
                    q[start].0 += 1;
                    q[start + a + b].1 += 1;
                    a + b
                }
            }
        }
        walk(self, 0, &mut q);
        QVector(q)
    }

    pub fn from_qvector(q: &QVector) -> Result<ParenTree> {
        let q = &q.0;
        if q.len() < 2 {
            return Err(Error::BadInput("position vector needs at least two entries".into()));
        }
        let n = q.len() - 1;
        if q[0].1 != 0 || q[n].0 != 0 {
            return Err(Error::BadInput("unbalanced parentheses at the ends".into()));
        }
        #[derive(PartialEq)]
        enum Tok {
            Open,
            Close,
            Factor,
        }
        let mut toks = Vec::new();
        for (i, &(opens, closes)) in q.iter().enumerate() {
            toks.extend(std::iter::repeat_with(|| Tok::Close).take(closes));
            toks.extend(std::iter::repeat_with(|| Tok::Open).take(opens));
            if i < n {
                toks.push(Tok::Factor);
            }
        }
        fn parse(toks: &[Tok], pos: &mut usize) -> Result<ParenTree> {
            let bad = || Error::BadInput("malformed parenthesization".into());
            match toks.get(*pos) {
                Some(Tok::Factor) => {
                    *pos += 1;
                    Ok(ParenTree::Leaf)
                }
                Some(Tok::Open) => {
                    *pos += 1;
                    let l = parse(toks, pos)?;
                    let r = parse(toks, pos)?;
                    if toks.get(*pos) != Some(&Tok::Close) {
                        return Err(bad());
                    }
                    *pos += 1;
                    Ok(ParenTree::node(l, r))
                }
                _ => Err(bad()),
            }
        }
        let mut pos = 0;
        let tree = parse(&toks, &mut pos)?;
        if pos != toks.len() {
            return Err(Error::BadInput("malformed parenthesization".into()));
        }
        Ok(tree)
    }

    /// Ordered product of `elements` following this tree.
    pub fn eval(&self, elements: &[Element], g: &MetagroupTable) -> Result<Element> {
        if elements.len() != self.leaves() {
            return Err(Error::LengthMismatch {
                expected: self.leaves(),
                got: elements.len(),
            });
        }
        Ok(self.eval_unchecked(elements, g))
    }

    fn eval_unchecked(&self, elements: &[Element], g: &MetagroupTable) -> Element {
        match self {
            ParenTree::Leaf => elements[0],
            ParenTree::Node(l, r) => {
                let k = l.leaves();
                g.mul(l.eval_unchecked(&elements[..k], g), r.eval_unchecked(&elements[k..], g))
            }
        }
    }

    /// Ordered product of basis representatives.
    pub fn eval_basis(&self, basis: &[usize], g: &MetagroupTable) -> Element {
        debug_assert_eq!(basis.len(), self.leaves());
        match self {
            ParenTree::Leaf => Element::basis(basis[0]),
            ParenTree::Node(l, r) => {
                let k = l.leaves();
                g.mul(l.eval_basis(&basis[..k], g), r.eval_basis(&basis[k..], g))
            }
        }
    }
}

/// A permutation of `0..n` as an index array; `(v ∘ w)(i) = v(w(i))`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(map: Vec<usize>) -> Result<Permutation> {
        let mut seen = vec![false; map.len()];
        for &i in &map {
            if i >= map.len() || std::mem::replace(&mut seen[i], true) {
                return Err(Error::BadInput(format!("{map:?} is not a permutation")));
            }
        }
        Ok(Permutation(map))
    }

    pub fn identity(n: usize) -> Permutation {
        Permutation((0..n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v] = i;
        }
        Permutation(inv)
    }

    pub fn compose(&self, w: &Permutation) -> Permutation {
        Permutation(w.0.iter().map(|&i| self.0[i]).collect())
    }

    /// `out[i] = items[v(i)]`.
    pub fn permute<T: Clone>(&self, items: &[T]) -> Vec<T> {
        self.0.iter().map(|&i| items[i].clone()).collect()
    }
}

/// The phase `t` with `{a}_q = t · {a_v(1), ..., a_v(n)}_u`.
pub fn tn(
    g: &MetagroupTable,
    elements: &[Element],
    q: &ParenTree,
    u: &ParenTree,
    v: &Permutation,
) -> Result<Phase> {
    let n = elements.len();
    for got in [q.leaves(), u.leaves(), v.len()] {
        if got != n {
            return Err(Error::LengthMismatch { expected: n, got });
        }
    }
    for &a in elements {
        g.validate(a)?;
    }
    if !v.is_identity() && !g.is_central() {
        return Err(Error::PermutationNeedsCentral);
    }
    let lhs = q.eval_unchecked(elements, g);
    let rhs = u.eval_unchecked(&v.permute(elements), g);
    if lhs.basis != rhs.basis {
        return Err(Error::ReassociationFailure(format!(
            "products land on {} and {}",
            g.label(lhs.basis),
            g.label(rhs.basis)
        )));
    }
    Ok(g.sub_phase(lhs.phase, rhs.phase))
}

/// `tn` with the identity permutation on basis representatives.
pub fn reassociation_phase(g: &MetagroupTable, basis: &[usize], q: &ParenTree, u: &ParenTree) -> Phase {
    let lhs = q.eval_basis(basis, g);
    let rhs = u.eval_basis(basis, g);
    debug_assert_eq!(lhs.basis, rhs.basis, "metagroup products agree in basis");
    g.sub_phase(lhs.phase, rhs.phase)
}
