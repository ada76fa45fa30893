//! Exact combinatorial searches: maximum matching, longest path, and the
//! path cover number via maximum-edge path packings.
//!
//! A path of length `l` is an alternating sequence
//! `v_1, e_1, v_2, ..., v_l, e_l, v_{l+1}` with `{v_i, v_{i+1}} ⊆ e_i`, all
//! vertices and edges distinct, and `v_i` absent from every later edge
//! (`v_i ∉ e_j` for `j > i`, `i <= l-1`). A path covers all of its anchor
//! vertices `v_1..v_{l+1}`. Two paths are disjoint when neither's edges
//! contain any vertex covered by the other; in particular their anchor sets
//! are disjoint. Since every path cover with `t` paths uses exactly `n - t`
//! edges, the path cover number equals `n` minus the maximum number of
//! edges over all packings of pairwise disjoint paths.

use super::{HypergraphError, UniformHypergraph};

const SEARCH_BUDGET: u64 = 50_000_000;

/// A validated path witness: anchor vertices and edge indices into the
/// hypergraph's edge list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HPath {
    pub anchors: Vec<usize>,
    pub edge_indices: Vec<usize>,
}

impl HPath {
    /// Checks the walk condition, distinctness, and the no-return rule.
    pub fn is_valid(g: &UniformHypergraph, anchors: &[usize], edge_indices: &[usize]) -> bool {
        if anchors.is_empty() || anchors.len() != edge_indices.len() + 1 {
            return false;
        }
        let mut seen_v = std::collections::BTreeSet::new();
        if !anchors.iter().all(|v| seen_v.insert(*v)) {
            return false;
        }
        let mut seen_e = std::collections::BTreeSet::new();
        if !edge_indices.iter().all(|e| seen_e.insert(*e)) {
            return false;
        }
        for (i, &ei) in edge_indices.iter().enumerate() {
            let Some(edge) = g.edges().get(ei) else {
                return false;
            };
            if !edge.contains(&anchors[i]) || !edge.contains(&anchors[i + 1]) {
                return false;
            }
            // no earlier anchor may reappear in this or any later edge
            if anchors[..i].iter().any(|v| edge.contains(v)) {
                return false;
            }
        }
        true
    }
}

fn vertex_masks(g: &UniformHypergraph) -> Result<Vec<u128>, HypergraphError> {
    if g.vertex_count() > 128 {
        return Err(HypergraphError::BudgetExceeded);
    }
    Ok(g.edges()
        .iter()
        .map(|e| e.iter().fold(0u128, |m, &v| m | (1u128 << (v - 1))))
        .collect())
}

#[inline]
fn bit(v: usize) -> u128 {
    1u128 << (v - 1)
}

/// Maximum number of pairwise disjoint edges, by branch and bound over the
/// edge conflict matrix.
pub fn matching_number(g: &UniformHypergraph) -> usize {
    let e = g.edge_count();
    let conflict: Vec<Vec<bool>> = (0..e)
        .map(|i| {
            (0..e)
                .map(|j| g.edges()[i].iter().any(|v| g.edges()[j].contains(v)))
                .collect()
        })
        .collect();
    fn rec(conflict: &[Vec<bool>], idx: usize, chosen: &mut Vec<usize>, best: &mut usize) {
        *best = (*best).max(chosen.len());
        if chosen.len() + (conflict.len() - idx) <= *best {
            return;
        }
        for k in idx..conflict.len() {
            if chosen.iter().all(|&c| !conflict[c][k]) {
                chosen.push(k);
                rec(conflict, k + 1, chosen, best);
                chosen.pop();
            }
        }
    }
    let mut best = 0;
    rec(&conflict, 0, &mut Vec::new(), &mut best);
    best
}

struct WalkSearch<'a> {
    g: &'a UniformHypergraph,
    masks: Vec<u128>,
    budget: u64,
    exceeded: bool,
}

impl WalkSearch<'_> {
    fn tick(&mut self) -> bool {
        if self.budget == 0 {
            self.exceeded = true;
            return false;
        }
        self.budget -= 1;
        true
    }
}

/// The maximum path length `d(G)`: the largest number of edges over all
/// valid paths, by exhaustive extension.
pub fn max_path_length(g: &UniformHypergraph) -> Result<usize, HypergraphError> {
    let masks = vertex_masks(g)?;
    let mut s = WalkSearch {
        g,
        masks,
        budget: SEARCH_BUDGET,
        exceeded: false,
    };
    let mut best = 0;

    fn extend(
        s: &mut WalkSearch,
        anchors: &mut Vec<usize>,
        anchor_mask: u128,
        used: &mut Vec<bool>,
        len: usize,
        best: &mut usize,
    ) {
        *best = (*best).max(len);
        if !s.tick() {
            return;
        }
        let last = *anchors.last().expect("nonempty walk");
        // anchors that later edges must avoid: everything except the last
        let forbidden = anchor_mask & !bit(last);
        for k in 0..s.g.edges().len() {
            if used[k] || s.masks[k] & bit(last) == 0 || s.masks[k] & forbidden != 0 {
                continue;
            }
            for &next in &s.g.edges()[k] {
                if anchor_mask & bit(next) != 0 {
                    continue;
                }
                used[k] = true;
                anchors.push(next);
                extend(s, anchors, anchor_mask | bit(next), used, len + 1, best);
                anchors.pop();
                used[k] = false;
            }
        }
    }

    let mut used = vec![false; g.edge_count()];
    for v in 1..=g.vertex_count() {
        let mut anchors = vec![v];
        extend(&mut s, &mut anchors, bit(v), &mut used, 0, &mut best);
    }
    if s.exceeded {
        return Err(HypergraphError::BudgetExceeded);
    }
    Ok(best)
}

/// State for the maximum-edge packing behind the path cover number.
struct PackSearch<'a> {
    g: &'a UniformHypergraph,
    masks: Vec<u128>,
    used: Vec<bool>,
    budget: u64,
    exceeded: bool,
    best: usize,
}

impl PackSearch<'_> {
    fn tick(&mut self) -> bool {
        if self.budget == 0 {
            self.exceeded = true;
            return false;
        }
        self.budget -= 1;
        true
    }

    /// Starts new paths, the next one having its first edge at index >= lo
    /// (packings are enumerated with first-edge indices increasing).
    fn start_paths(&mut self, lo: usize, blocked_member: u128, blocked_anchor: u128, total: usize) {
        self.best = self.best.max(total);
        if !self.tick() {
            return;
        }
        let avail = (0..self.g.edge_count())
            .filter(|&k| !self.used[k] && self.masks[k] & blocked_member == 0)
            .count();
        if total + avail <= self.best {
            return;
        }
        for k in lo..self.g.edge_count() {
            if self.used[k] || self.masks[k] & blocked_member != 0 {
                continue;
            }
            let edge: Vec<usize> = self.g.edges()[k].clone();
            for &v1 in &edge {
                if bit(v1) & blocked_anchor != 0 {
                    continue;
                }
                for &v2 in &edge {
                    if v2 == v1 || bit(v2) & blocked_anchor != 0 {
                        continue;
                    }
                    self.used[k] = true;
                    let mut anchors = vec![v1, v2];
                    self.extend_path(
                        k,
                        &mut anchors,
                        bit(v1) | bit(v2),
                        self.masks[k],
                        1,
                        blocked_member,
                        blocked_anchor,
                        total,
                    );
                    self.used[k] = false;
                }
            }
        }
    }

    /// Either closes the current path or extends it by one more edge.
    #[allow(clippy::too_many_arguments)]
    fn extend_path(
        &mut self,
        first_edge: usize,
        anchors: &mut Vec<usize>,
        anchor_mask: u128,
        member_mask: u128,
        path_edges: usize,
        blocked_member: u128,
        blocked_anchor: u128,
        total: usize,
    ) {
        if !self.tick() {
            return;
        }
        // a path with l edges covers exactly l + 1 anchors, which is what
        // makes "n - total edges" count the covering paths
        debug_assert_eq!(anchors.len(), path_edges + 1);
        // closing the path: its anchors block future edges, its members
        // block future anchors
        self.start_paths(
            first_edge + 1,
            blocked_member | anchor_mask,
            blocked_anchor | member_mask,
            total + path_edges,
        );

        let last = *anchors.last().expect("path has anchors");
        let forbidden = anchor_mask & !bit(last);
        for k in 0..self.g.edge_count() {
            if self.used[k]
                || self.masks[k] & bit(last) == 0
                || self.masks[k] & forbidden != 0
                || self.masks[k] & blocked_member != 0
            {
                continue;
            }
            let edge: Vec<usize> = self.g.edges()[k].clone();
            for &next in &edge {
                if anchor_mask & bit(next) != 0 || bit(next) & blocked_anchor != 0 {
                    continue;
                }
                self.used[k] = true;
                anchors.push(next);
                self.extend_path(
                    first_edge,
                    anchors,
                    anchor_mask | bit(next),
                    member_mask | self.masks[k],
                    path_edges + 1,
                    blocked_member,
                    blocked_anchor,
                    total,
                );
                anchors.pop();
                self.used[k] = false;
            }
        }
    }
}

/// Maximum total number of edges over all packings of pairwise disjoint
/// paths.
fn max_packing_edges(g: &UniformHypergraph) -> Result<usize, HypergraphError> {
    let masks = vertex_masks(g)?;
    let mut s = PackSearch {
        g,
        masks,
        used: vec![false; g.edge_count()],
        budget: SEARCH_BUDGET,
        exceeded: false,
        best: 0,
    };
    s.start_paths(0, 0, 0, 0);
    if s.exceeded {
        return Err(HypergraphError::BudgetExceeded);
    }
    Ok(s.best)
}

/// The path cover number `pc(G) = n - max packing edges` of a connected
/// hypergraph. The single-vertex edgeless hypergraph is allowed and has
/// path cover number 1 (one trivial path).
pub fn path_cover_number(g: &UniformHypergraph) -> Result<usize, HypergraphError> {
    if !g.is_connected() {
        return Err(HypergraphError::NotConnected);
    }
    Ok(g.vertex_count() - max_packing_edges(g)?)
}
