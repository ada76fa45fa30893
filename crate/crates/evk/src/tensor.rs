//! Nonnegative combinatorially symmetric tensors stored by their support.
//!
//! A symmetric tensor of order `m` and dimension `n` is determined by the
//! values on canonical (nondecreasing) multi-indices; one stored entry
//! stands for the whole permutation class. Vertices are 1-based throughout,
//! matching the text formats and the usual hypergraph conventions.

use crate::matrix::IntMatrix;
use num::{BigInt, BigRational, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

/// A canonical multi-index: `m` vertex indices in `1..=n`, nondecreasing.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultiIndex(Vec<usize>);

impl MultiIndex {
    /// Canonicalizes an arbitrary index tuple by sorting.
    pub fn new(mut indices: Vec<usize>) -> Self {
        indices.sort_unstable();
        MultiIndex(indices)
    }

    pub fn order(&self) -> usize {
        self.0.len()
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    /// Distinct vertices with their multiplicities, ascending.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &v in &self.0 {
            match out.last_mut() {
                Some((u, c)) if *u == v => *c += 1,
                _ => out.push((v, 1)),
            }
        }
        out
    }

    /// Distinct vertices appearing in this index.
    pub fn support(&self) -> Vec<usize> {
        self.multiplicities().into_iter().map(|(v, _)| v).collect()
    }

    /// The number of distinct permutations of this tuple.
    pub fn permutation_count(&self) -> u128 {
        let m = self.order() as u128;
        let mut count = factorial(m);
        for (_, c) in self.multiplicities() {
            count /= factorial(c as u128);
        }
        count
    }
}

pub(crate) fn factorial(k: u128) -> u128 {
    (1..=k).product::<u128>().max(1)
}

impl fmt::Debug for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TensorError {
    #[error("index {index} out of range 1..={dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("index tuple has length {found}, expected order {expected}")]
    OrderMismatch { expected: usize, found: usize },
    #[error("entry value must be strictly positive at {0:?}")]
    NonPositiveValue(MultiIndex),
    #[error("duplicate canonical entry {0:?} with conflicting values")]
    ConflictingDuplicate(MultiIndex),
    #[error("support is not closed under index permutation near {0:?}")]
    SupportNotSymmetric(MultiIndex),
    #[error("tensors differ in order or dimension")]
    ShapeMismatch,
    #[error("order must be at least 2 and dimension at least 1")]
    BadShape,
}

/// The support of a nonnegative symmetric tensor: strictly positive values
/// keyed by canonical multi-indices. Zero entries are absent, never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct SymTensorSupport {
    order: usize,
    dim: usize,
    entries: BTreeMap<MultiIndex, BigRational>,
    values_symmetrized: bool,
}

impl SymTensorSupport {
    /// Builds a support from raw `(index tuple, value)` pairs.
    ///
    /// If every supplied tuple is already nondecreasing, each is taken as a
    /// canonical entry. Otherwise the listing is treated as a plain
    /// enumeration of nonzero positions, which must then be closed under
    /// index permutation; values that differ within a permutation class are
    /// averaged and the result is flagged via [`values_symmetrized`].
    ///
    /// [`values_symmetrized`]: SymTensorSupport::values_symmetrized
    pub fn build_support(
        order: usize,
        dim: usize,
        raw_entries: Vec<(Vec<usize>, BigRational)>,
    ) -> Result<Self, TensorError> {
        if order < 2 || dim < 1 {
            return Err(TensorError::BadShape);
        }
        for (tuple, value) in &raw_entries {
            if tuple.len() != order {
                return Err(TensorError::OrderMismatch {
                    expected: order,
                    found: tuple.len(),
                });
            }
            if let Some(&bad) = tuple.iter().find(|&&v| v < 1 || v > dim) {
                return Err(TensorError::IndexOutOfRange { index: bad, dim });
            }
            if !value.is_positive() {
                return Err(TensorError::NonPositiveValue(MultiIndex::new(
                    tuple.clone(),
                )));
            }
        }

        let all_canonical = raw_entries
            .iter()
            .all(|(t, _)| t.windows(2).all(|w| w[0] <= w[1]));

        let mut entries: BTreeMap<MultiIndex, BigRational> = BTreeMap::new();
        let mut symmetrized = false;

        if all_canonical {
            for (tuple, value) in raw_entries {
                let key = MultiIndex::new(tuple);
                match entries.get(&key) {
                    Some(existing) if *existing != value => {
                        return Err(TensorError::ConflictingDuplicate(key))
                    }
                    _ => {
                        entries.insert(key, value);
                    }
                }
            }
        } else {
            // Raw dense listing: group by permutation class and require the
            // class to be fully present.
            let mut classes: BTreeMap<MultiIndex, Vec<(Vec<usize>, BigRational)>> = BTreeMap::new();
            for (tuple, value) in raw_entries {
                classes
                    .entry(MultiIndex::new(tuple.clone()))
                    .or_default()
                    .push((tuple, value));
            }
            for (key, members) in classes {
                let mut seen: BTreeMap<Vec<usize>, BigRational> = BTreeMap::new();
                for (tuple, value) in &members {
                    match seen.get(tuple) {
                        Some(existing) if existing != value => {
                            return Err(TensorError::ConflictingDuplicate(key))
                        }
                        _ => {
                            seen.insert(tuple.clone(), value.clone());
                        }
                    }
                }
                if seen.len() as u128 != key.permutation_count() {
                    return Err(TensorError::SupportNotSymmetric(key));
                }
                let sum = seen.values().fold(BigRational::zero(), |acc, v| acc + v);
                let mean = sum / BigRational::from(BigInt::from(seen.len() as u64));
                if seen.values().any(|v| *v != mean) {
                    symmetrized = true;
                }
                entries.insert(key, mean);
            }
        }

        Ok(SymTensorSupport {
            order,
            dim,
            entries,
            values_symmetrized: symmetrized,
        })
    }

    /// Convenience constructor: canonical entries all set to the same value.
    pub fn from_uniform_entries(
        order: usize,
        dim: usize,
        tuples: Vec<Vec<usize>>,
        value: BigRational,
    ) -> Result<Self, TensorError> {
        let raw = tuples.into_iter().map(|t| (t, value.clone())).collect();
        Self::build_support(order, dim, raw)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry_count(&self) -> usize {
        self.entries.len()
    }

    /// Canonical entries in lexicographic order.
    pub fn entries(&self) -> impl Iterator<Item = (&MultiIndex, &BigRational)> {
        self.entries.iter()
    }

    pub fn contains(&self, key: &MultiIndex) -> bool {
        self.entries.contains_key(key)
    }

    /// True when the raw constructor had to average asymmetric values.
    pub fn values_symmetrized(&self) -> bool {
        self.values_symmetrized
    }

    /// Weak irreducibility: the digraph with an arc `i -> j` whenever some
    /// nonzero entry starts at `i` and contains `j` is strongly connected.
    /// For a symmetric support every entry induces a complete digraph on its
    /// vertex set, so this reduces to connectivity of the entry/vertex
    /// incidence structure together with every vertex lying in some entry.
    pub fn is_weakly_irreducible(&self) -> bool {
        if self.entries.is_empty() {
            return false;
        }
        let mut uf = UnionFind::new(self.dim + 1);
        let mut touched = vec![false; self.dim + 1];
        for key in self.entries.keys() {
            let vs = key.support();
            for &v in &vs {
                touched[v] = true;
                uf.union(vs[0], v);
            }
        }
        if !touched.iter().skip(1).all(|&t| t) {
            return false;
        }
        let root = uf.find(1);
        (1..=self.dim).all(|v| uf.find(v) == root)
    }

    /// The incidence matrix: one row per canonical entry in lexicographic
    /// order, `b[e][j]` the multiplicity of vertex `j+1` in entry `e`.
    /// Every row sums to the order `m`.
    pub fn incidence_matrix(&self) -> IntMatrix {
        let mut mat = IntMatrix::zero(self.entries.len(), self.dim);
        for (row, key) in self.entries.keys().enumerate() {
            for (v, c) in key.multiplicities() {
                mat.set(row, v - 1, BigInt::from(c as u64));
            }
        }
        mat
    }

    /// True if every canonical entry of `self` is a canonical entry of `other`.
    pub fn is_subpattern_of(&self, other: &SymTensorSupport) -> Result<bool, TensorError> {
        if self.order != other.order || self.dim != other.dim {
            return Err(TensorError::ShapeMismatch);
        }
        Ok(self.entries.keys().all(|k| other.entries.contains_key(k)))
    }
}

impl fmt::Debug for SymTensorSupport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "SymTensorSupport(m={}, n={}, {} entries)",
            self.order,
            self.dim,
            self.entries.len()
        )
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }

    fn union(&mut self, a: usize, b: usize) {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra != rb {
            self.parent[ra] = rb;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::One;

    fn rat(p: i64, q: i64) -> BigRational {
        BigRational::new(BigInt::from(p), BigInt::from(q))
    }

    #[test]
    fn build_canonical_entry() {
        let a = SymTensorSupport::build_support(3, 3, vec![(vec![1, 2, 3], rat(1, 2))]).unwrap();
        assert_eq!(a.entry_count(), 1);
        let (key, value) = a.entries().next().unwrap();
        assert_eq!(key.indices(), &[1, 2, 3]);
        assert_eq!(*value, rat(1, 2));
        assert!(!a.values_symmetrized());
    }

    #[test]
    fn build_symmetric_matrix_pattern() {
        // A raw 2x2 symmetric listing collapses to one canonical entry.
        let a = SymTensorSupport::build_support(
            2,
            2,
            vec![(vec![1, 2], rat(1, 1)), (vec![2, 1], rat(1, 1))],
        )
        .unwrap();
        assert_eq!(a.entry_count(), 1);
        assert_eq!(a.entries().next().unwrap().0.indices(), &[1, 2]);
        assert!(!a.values_symmetrized());
    }

    #[test]
    fn build_rejects_open_permutation_class() {
        let err = SymTensorSupport::build_support(
            3,
            3,
            vec![(vec![1, 2, 3], rat(1, 1)), (vec![2, 1, 3], rat(1, 1))],
        )
        .unwrap_err();
        assert!(matches!(err, TensorError::SupportNotSymmetric(_)));
    }

    #[test]
    fn build_symmetrizes_uneven_values() {
        // Full permutation class of (1,2) with unequal values averages to 2.
        let a = SymTensorSupport::build_support(
            2,
            2,
            vec![(vec![1, 2], rat(1, 1)), (vec![2, 1], rat(3, 1))],
        )
        .unwrap();
        assert!(a.values_symmetrized());
        assert_eq!(*a.entries().next().unwrap().1, rat(2, 1));
    }

    #[test]
    fn build_rejects_bad_input() {
        assert!(matches!(
            SymTensorSupport::build_support(3, 3, vec![(vec![1, 2], rat(1, 1))]),
            Err(TensorError::OrderMismatch { .. })
        ));
        assert!(matches!(
            SymTensorSupport::build_support(3, 3, vec![(vec![1, 2, 4], rat(1, 1))]),
            Err(TensorError::IndexOutOfRange { index: 4, dim: 3 })
        ));
        assert!(matches!(
            SymTensorSupport::build_support(3, 3, vec![(vec![1, 2, 3], rat(0, 1))]),
            Err(TensorError::NonPositiveValue(_))
        ));
        assert!(matches!(
            SymTensorSupport::build_support(
                3,
                3,
                vec![(vec![1, 2, 3], rat(1, 1)), (vec![1, 2, 3], rat(2, 1))]
            ),
            Err(TensorError::ConflictingDuplicate(_))
        ));
    }

    #[test]
    fn weak_irreducibility() {
        let one = BigRational::one();
        let a =
            SymTensorSupport::from_uniform_entries(3, 3, vec![vec![1, 2, 3]], one.clone()).unwrap();
        assert!(a.is_weakly_irreducible());

        // vertex 3 isolated
        let b =
            SymTensorSupport::from_uniform_entries(3, 3, vec![vec![1, 2, 2]], one.clone()).unwrap();
        assert!(!b.is_weakly_irreducible());

        // two components
        let c = SymTensorSupport::from_uniform_entries(
            3,
            6,
            vec![vec![1, 2, 3], vec![4, 5, 6]],
            one.clone(),
        )
        .unwrap();
        assert!(!c.is_weakly_irreducible());

        // single diagonal entry on one vertex: a loop is strongly connected
        let d = SymTensorSupport::from_uniform_entries(3, 1, vec![vec![1, 1, 1]], one).unwrap();
        assert!(d.is_weakly_irreducible());
    }

    #[test]
    fn incidence_counts_multiplicities() {
        let a =
            SymTensorSupport::from_uniform_entries(3, 2, vec![vec![1, 1, 2]], rat(1, 1)).unwrap();
        let b = a.incidence_matrix();
        assert_eq!(b.rows(), 1);
        assert_eq!(b.cols(), 2);
        assert_eq!(*b.get(0, 0), BigInt::from(2));
        assert_eq!(*b.get(0, 1), BigInt::from(1));
    }

    #[test]
    fn incidence_row_of_plain_edge() {
        let a = SymTensorSupport::from_uniform_entries(4, 6, vec![vec![1, 2, 3, 4]], rat(1, 1))
            .unwrap();
        let b = a.incidence_matrix();
        let row: Vec<i64> = (0..6)
            .map(|j| i64::try_from(b.get(0, j)).unwrap())
            .collect();
        assert_eq!(row, vec![1, 1, 1, 1, 0, 0]);
    }

    #[test]
    fn subpattern_checks() {
        let one = BigRational::one();
        let a = SymTensorSupport::from_uniform_entries(
            3,
            4,
            vec![vec![1, 2, 3], vec![2, 3, 4]],
            one.clone(),
        )
        .unwrap();
        let b =
            SymTensorSupport::from_uniform_entries(3, 4, vec![vec![1, 2, 3]], one.clone()).unwrap();
        assert!(a.is_subpattern_of(&a).unwrap());
        assert!(b.is_subpattern_of(&a).unwrap());
        assert!(!a.is_subpattern_of(&b).unwrap());

        let c = SymTensorSupport::from_uniform_entries(3, 5, vec![vec![1, 2, 3]], one).unwrap();
        assert!(matches!(
            a.is_subpattern_of(&c),
            Err(TensorError::ShapeMismatch)
        ));
    }
}
