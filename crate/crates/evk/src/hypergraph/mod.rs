//! Uniform hypergraphs: the adjacency tensor, generator families, exact
//! combinatorial searches, and structural bounds on the eigenvariety
//! invariants.

mod bounds;
mod generate;
mod search;

pub use bounds::{bound_report, BoundCheck, BoundReport};
pub use search::{matching_number, max_path_length, path_cover_number, HPath};

use crate::matrix::IntMatrix;
use crate::tensor::{factorial, SymTensorSupport};
use num::{BigInt, BigRational};
use std::collections::BTreeSet;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HypergraphError {
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error("edge {0:?} does not have exactly {1} distinct vertices")]
    EdgeSize(Vec<usize>, usize),
    #[error("vertex {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("duplicate edge {0:?}")]
    DuplicateEdge(Vec<usize>),
    #[error("hypergraph is not connected")]
    NotConnected,
    #[error("search budget exceeded")]
    BudgetExceeded,
    #[error("bound violated: {0}")]
    BoundViolated(String),
    #[error(transparent)]
    Eigen(#[from] crate::eigenvariety::EigenError),
}

/// An `m`-uniform hypergraph on vertices `1..=n`. Edges are stored sorted,
/// in construction order.
#[derive(Clone, PartialEq, Eq)]
pub struct UniformHypergraph {
    m: usize,
    n: usize,
    edges: Vec<Vec<usize>>,
}

impl UniformHypergraph {
    pub fn new(m: usize, n: usize, edges: Vec<Vec<usize>>) -> Result<Self, HypergraphError> {
        if m < 2 || n < 1 {
            return Err(HypergraphError::BadParameters(
                "need uniformity >= 2 and at least one vertex".into(),
            ));
        }
        let mut seen = BTreeSet::new();
        let mut stored = Vec::with_capacity(edges.len());
        for edge in edges {
            let mut e = edge.clone();
            e.sort_unstable();
            e.dedup();
            if e.len() != m || edge.len() != m {
                return Err(HypergraphError::EdgeSize(edge, m));
            }
            if let Some(&bad) = e.iter().find(|&&v| v < 1 || v > n) {
                return Err(HypergraphError::IndexOutOfRange { index: bad, n });
            }
            if !seen.insert(e.clone()) {
                return Err(HypergraphError::DuplicateEdge(e));
            }
            stored.push(e);
        }
        Ok(UniformHypergraph {
            m,
            n,
            edges: stored,
        })
    }

    pub fn uniformity(&self) -> usize {
        self.m
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as sorted vertex lists, in construction order.
    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.n + 1];
        for e in &self.edges {
            for &v in e {
                deg[v] += 1;
            }
        }
        deg.remove(0);
        deg
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 1 {
            return true;
        }
        let mut parent: Vec<usize> = (0..=self.n).collect();
        fn find(parent: &mut Vec<usize>, x: usize) -> usize {
            if parent[x] != x {
                let r = find(parent, parent[x]);
                parent[x] = r;
            }
            parent[x]
        }
        for e in &self.edges {
            for &v in &e[1..] {
                let (a, b) = (find(&mut parent, e[0]), find(&mut parent, v));
                parent[a] = b;
            }
        }
        let mut touched = vec![false; self.n + 1];
        for e in &self.edges {
            for &v in e {
                touched[v] = true;
            }
        }
        if !touched[1..].iter().all(|&t| t) {
            return false;
        }
        let root = find(&mut parent, 1);
        (2..=self.n).all(|v| find(&mut parent, v) == root)
    }

    /// True when every edge contains a vertex of degree one.
    pub fn is_cored(&self) -> bool {
        let deg = self.degrees();
        self.edges
            .iter()
            .all(|e| e.iter().any(|&v| deg[v - 1] == 1))
    }

    /// The adjacency tensor: one canonical entry per edge with value
    /// `1/(m-1)!`, so that its incidence matrix is the 0/1 incidence matrix
    /// of the hypergraph.
    pub fn adjacency_tensor(&self) -> SymTensorSupport {
        let denom = BigInt::from(factorial((self.m - 1) as u128));
        let value = BigRational::new(BigInt::from(1), denom);
        SymTensorSupport::from_uniform_entries(self.m, self.n, self.edges.clone(), value)
            .expect("edges validated at construction")
    }

    /// The 0/1 incidence matrix with edges in lexicographic order, matching
    /// the adjacency tensor's.
    pub fn incidence_matrix(&self) -> IntMatrix {
        self.adjacency_tensor().incidence_matrix()
    }
}

impl fmt::Debug for UniformHypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "UniformHypergraph(m={}, n={}, {} edges)",
            self.m,
            self.n,
            self.edges.len()
        )
    }
}
