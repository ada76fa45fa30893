//! Generator families. Vertex numbering is deterministic: base vertices
//! first, fresh vertices in creation order.

use super::{HypergraphError, UniformHypergraph};

impl UniformHypergraph {
    /// The complete `m`-uniform hypergraph on `n` vertices: every `m`-subset
    /// is an edge.
    pub fn complete(n: usize, m: usize) -> Result<Self, HypergraphError> {
        if m < 2 || n < m {
            return Err(HypergraphError::BadParameters(format!(
                "complete hypergraph needs n >= m >= 2, got n={n}, m={m}"
            )));
        }
        let mut edges = Vec::new();
        let mut pick = vec![0usize; m];
        fn rec(start: usize, k: usize, n: usize, pick: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if k == pick.len() {
                out.push(pick.clone());
                return;
            }
            for v in start..=n {
                pick[k] = v;
                rec(v + 1, k + 1, n, pick, out);
            }
        }
        rec(1, 0, n, &mut pick, &mut edges);
        UniformHypergraph::new(m, n, edges)
    }

    /// The `m`-th power of a simple graph on `base_n` vertices: each 2-edge
    /// becomes an `m`-set by adding `m - 2` fresh vertices.
    pub fn power_of_graph(
        base_n: usize,
        graph_edges: &[(usize, usize)],
        m: usize,
    ) -> Result<Self, HypergraphError> {
        if m < 2 || base_n < 1 {
            return Err(HypergraphError::BadParameters(
                "power needs m >= 2 and a nonempty vertex set".into(),
            ));
        }
        let mut seen = std::collections::BTreeSet::new();
        for &(u, v) in graph_edges {
            if u == v || u < 1 || v < 1 || u > base_n || v > base_n {
                return Err(HypergraphError::BadParameters(format!(
                    "bad graph edge ({u}, {v}) on {base_n} vertices"
                )));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(HypergraphError::BadParameters(format!(
                    "duplicate graph edge ({u}, {v})"
                )));
            }
        }
        let t = graph_edges.len();
        let n = base_n + t * (m - 2);
        let mut next_fresh = base_n + 1;
        let mut edges = Vec::with_capacity(t);
        for &(u, v) in graph_edges {
            let mut e = vec![u, v];
            for _ in 0..m - 2 {
                e.push(next_fresh);
                next_fresh += 1;
            }
            edges.push(e);
        }
        UniformHypergraph::new(m, n, edges)
    }

    /// The hyperpath: the `m`-th power of the simple path on `base_n`
    /// vertices.
    pub fn hyperpath(base_n: usize, m: usize) -> Result<Self, HypergraphError> {
        if base_n < 1 {
            return Err(HypergraphError::BadParameters(
                "hyperpath needs at least one base vertex".into(),
            ));
        }
        let path_edges: Vec<(usize, usize)> = (1..base_n).map(|i| (i, i + 1)).collect();
        Self::power_of_graph(base_n, &path_edges, m)
    }

    /// The generalized squid `S(m, t)`: a base edge `{1, ..., m}` with `t`
    /// legs, the i-th leg being `{i}` plus `m - 1` fresh vertices.
    pub fn squid(m: usize, t: usize) -> Result<Self, HypergraphError> {
        if m < 3 || t < 1 || t > m {
            return Err(HypergraphError::BadParameters(format!(
                "squid needs m >= 3 and 1 <= t <= m, got m={m}, t={t}"
            )));
        }
        let n = t * m + m - t;
        let mut edges = vec![(1..=m).collect::<Vec<_>>()];
        let mut next_fresh = m + 1;
        for i in 1..=t {
            let mut leg = vec![i];
            for _ in 0..m - 1 {
                leg.push(next_fresh);
                next_fresh += 1;
            }
            edges.push(leg);
        }
        UniformHypergraph::new(m, n, edges)
    }

    /// The 3-uniform `n`-wheel: a center vertex 1 and rim vertices
    /// `2..=n+1`, with the `n` edges `{1, rim_i, rim_{i+1}}` cyclically.
    pub fn wheel(n: usize) -> Result<Self, HypergraphError> {
        if n < 3 {
            return Err(HypergraphError::BadParameters(format!(
                "wheel needs at least 3 rim vertices, got {n}"
            )));
        }
        let edges = (1..=n).map(|i| vec![1, 1 + i, 1 + (i % n) + 1]).collect();
        UniformHypergraph::new(3, n + 1, edges)
    }

    /// Grows a 3-uniform hypergraph by one triangle sharing the pair
    /// `{u, v}`, which must already lie inside an existing edge; the third
    /// vertex is fresh.
    pub fn grow_shared_pair(&self, u: usize, v: usize) -> Result<Self, HypergraphError> {
        if self.uniformity() != 3 {
            return Err(HypergraphError::BadParameters(
                "grow_shared_pair applies to 3-uniform hypergraphs".into(),
            ));
        }
        if u == v || u < 1 || v < 1 || u > self.vertex_count() || v > self.vertex_count() {
            return Err(HypergraphError::BadParameters(format!(
                "bad vertex pair ({u}, {v})"
            )));
        }
        if !self
            .edges()
            .iter()
            .any(|e| e.contains(&u) && e.contains(&v))
        {
            return Err(HypergraphError::BadParameters(format!(
                "pair ({u}, {v}) is not contained in any edge"
            )));
        }
        let w = self.vertex_count() + 1;
        let mut edges = self.edges().to_vec();
        edges.push(vec![u, v, w]);
        UniformHypergraph::new(3, w, edges)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_counts() {
        let g = UniformHypergraph::complete(4, 3).unwrap();
        assert_eq!(g.edge_count(), 4);
        assert_eq!(g.vertex_count(), 4);
        assert!(UniformHypergraph::complete(2, 3).is_err());
    }

    #[test]
    fn hyperpath_shape() {
        // single edge on m vertices
        let single = UniformHypergraph::hyperpath(2, 4).unwrap();
        assert_eq!(single.edge_count(), 1);
        assert_eq!(single.vertex_count(), 4);

        let g = UniformHypergraph::hyperpath(4, 3).unwrap();
        assert_eq!(g.vertex_count(), 7);
        assert_eq!(g.edge_count(), 3);
        assert!(g.is_connected());
        assert_eq!(g.edges()[0], vec![1, 2, 5]);
        assert_eq!(g.edges()[2], vec![3, 4, 7]);
    }

    #[test]
    fn squid_shape() {
        let g = UniformHypergraph::squid(3, 2).unwrap();
        assert_eq!(g.vertex_count(), 2 * 3 + 3 - 2);
        assert_eq!(g.edge_count(), 3);
        assert!(g.is_connected());
        for (m, t) in [(3, 1), (3, 3), (4, 2), (4, 4)] {
            let g = UniformHypergraph::squid(m, t).unwrap();
            assert_eq!(g.vertex_count(), t * m + m - t);
            assert_eq!(g.edge_count(), t + 1);
            assert!(g.is_connected());
        }
        assert!(UniformHypergraph::squid(3, 4).is_err());
    }

    #[test]
    fn wheel_shape() {
        let g = UniformHypergraph::wheel(3).unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 3);
        let g4 = UniformHypergraph::wheel(4).unwrap();
        assert_eq!(g4.vertex_count(), 5);
        assert_eq!(g4.edge_count(), 4);
        assert!(g4.is_connected());
    }

    #[test]
    fn grow_adds_fresh_triangle() {
        let g = UniformHypergraph::wheel(3).unwrap();
        let grown = g.grow_shared_pair(2, 3).unwrap();
        assert_eq!(grown.vertex_count(), 5);
        assert_eq!(grown.edge_count(), 4);
        assert!(grown.edges().last().unwrap().contains(&5));
        assert!(g.grow_shared_pair(2, 5).is_err());
    }

    #[test]
    fn growing_triangles_preserves_triviality_sign() {
        // whether the phase module is trivial is invariant along a chain of
        // shared-pair triangle extensions
        use crate::eigenvariety::analyze;
        for (start, expect_trivial) in [(3usize, true), (4usize, false)] {
            let mut g = UniformHypergraph::wheel(start).unwrap();
            for step in 0..3 {
                let es = analyze(&g.adjacency_tensor()).unwrap();
                assert_eq!(
                    es.is_trivial(),
                    expect_trivial,
                    "wheel({start}) after {step} extensions"
                );
                let e = g.edges().last().unwrap().clone();
                g = g.grow_shared_pair(e[0], e[1]).unwrap();
            }
        }
    }
}
