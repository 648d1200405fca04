//! Small finite groups given by Cayley tables.

use crate::error::{Error, Result};
use crate::metagroup::MetagroupTable;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    name: String,
    labels: Vec<String>,
    unit: usize,
    table: Vec<Vec<usize>>,
}

impl FiniteGroup {
    /// Validates the Latin-square property, the unit and associativity.
    pub fn new(
        name: impl Into<String>,
        labels: Vec<String>,
        unit: usize,
        table: Vec<Vec<usize>>,
    ) -> Result<FiniteGroup> {
        let n = labels.len();
        let invalid = |msg: String| Err(Error::InvalidGroup(msg));
        if n == 0 || unit >= n {
            return invalid("empty group or unit out of range".into());
        }
        if table.len() != n || table.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return invalid("table shape or entries out of range".into());
        }
        for a in 0..n {
            let mut row = vec![false; n];
            let mut col = vec![false; n];
            for x in 0..n {
                if std::mem::replace(&mut row[table[a][x]], true)
                    || std::mem::replace(&mut col[table[x][a]], true)
                {
                    return invalid(format!("not a Latin square at {}", labels[a]));
                }
            }
            if table[unit][a] != a || table[a][unit] != a {
                return invalid(format!("unit does not fix {}", labels[a]));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return invalid(format!(
                            "not associative at ({}, {}, {})",
                            labels[a], labels[b], labels[c]
                        ));
                    }
                }
            }
        }
        Ok(FiniteGroup {
            name: name.into(),
            labels,
            unit,
            table,
        })
    }

    pub fn trivial() -> FiniteGroup {
        FiniteGroup::cyclic(1)
    }

    pub fn cyclic(n: usize) -> FiniteGroup {
        assert!(n >= 1);
        let labels = (0..n).map(|i| i.to_string()).collect();
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        FiniteGroup::new(format!("cyclic{n}"), labels, 0, table).expect("cyclic group")
    }

    /// The symmetric group on `n ≤ 4` points, permutations in lexicographic
    /// order of their one-line notation; `(στ)(i) = σ(τ(i))`.
    pub fn symmetric(n: usize) -> Result<FiniteGroup> {
        if !(1..=4).contains(&n) {
            return Err(Error::CapExceeded(format!("symmetric groups are limited to n <= 4, got {n}")));
        }
        let mut perms: Vec<Vec<usize>> = vec![vec![]];
        for _ in 0..n {
            perms = perms
                .into_iter()
                .flat_map(|p| {
                    (0..n).filter(|x| !p.contains(x)).map(|x| {
                        let mut q = p.clone();
                        q.push(x);
                        q
                    }).collect::<Vec<_>>()
                })
                .collect();
        }
        perms.sort();
        let index = |p: &Vec<usize>| perms.iter().position(|q| q == p).expect("closed");
        let table = perms
            .iter()
            .map(|s| {
                perms
                    .iter()
                    .map(|t| index(&t.iter().map(|&i| s[i]).collect()))
                    .collect()
            })
            .collect();
        let labels = perms
            .iter()
            .map(|p| format!("p{}", p.iter().map(|i| i.to_string()).collect::<String>()))
            .collect();
        FiniteGroup::new(format!("sym{n}"), labels, 0, table)
    }

    pub fn klein() -> FiniteGroup {
        let labels = ["e", "a", "b", "c"].iter().map(|s| s.to_string()).collect();
        let table = (0..4).map(|a| (0..4).map(|b| a ^ b).collect()).collect();
        FiniteGroup::new("klein", labels, 0, table).expect("Klein four-group")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.order()).all(|a| (0..self.order()).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn is_central(&self, z: usize) -> bool {
        (0..self.order()).all(|a| self.mul(a, z) == self.mul(z, a))
    }

    pub fn element_order(&self, z: usize) -> usize {
        let mut x = z;
        let mut k = 1;
        while x != self.unit {
            x = self.mul(x, z);
            k += 1;
        }
        k
    }

    /// The group as a metagroup with trivial phase group.
    pub fn to_metagroup(&self) -> MetagroupTable {
        let table = self
            .table
            .iter()
            .map(|r| r.iter().map(|&x| (x, 0)).collect())
            .collect();
        MetagroupTable::new(self.name.clone(), self.labels.clone(), 1, self.unit, table)
            .expect("groups are metagroups")
    }
}
