//! Structural upper bounds on the stabilizing index and dimension of a
//! connected uniform hypergraph, tabulated against the exact values.
//!
//! The bounds are theorems, not heuristics: a violation means an
//! implementation bug and is reported as a hard error.

use super::{matching_number, max_path_length, path_cover_number};
use super::{HypergraphError, UniformHypergraph};
use crate::eigenvariety::analyze;
use crate::linalg::composition_length;
use num::BigUint;

/// One tabulated inequality `s <= m^exp`, `γ <= exp * cl(m)`.
#[derive(Clone, Debug)]
pub struct BoundCheck {
    pub name: &'static str,
    pub exponent: u64,
    pub index_bound: BigUint,
    pub dimension_bound: u64,
    pub index_holds: bool,
    pub dimension_holds: bool,
    pub index_tight: bool,
    pub dimension_tight: bool,
}

/// Exact invariants and the full bound table for one hypergraph.
#[derive(Clone, Debug)]
pub struct BoundReport {
    pub uniformity: usize,
    pub vertex_count: usize,
    pub edge_count: usize,
    pub stabilizing_index: BigUint,
    pub stabilizing_dimension: u64,
    pub path_cover: usize,
    pub matching: usize,
    pub max_path: usize,
    pub cored: bool,
    pub checks: Vec<BoundCheck>,
    /// For cored hypergraphs the index is pinned exactly, not just bounded.
    pub cored_exact: Option<bool>,
}

impl BoundReport {
    pub fn all_hold(&self) -> bool {
        self.checks
            .iter()
            .all(|c| c.index_holds && c.dimension_holds)
            && self.cored_exact != Some(false)
    }
}

fn check(name: &'static str, m: u64, exponent: u64, s: &BigUint, gamma: u64) -> BoundCheck {
    let index_bound = BigUint::from(m).pow(exponent as u32);
    let dimension_bound = exponent * composition_length(m);
    BoundCheck {
        name,
        exponent,
        index_holds: *s <= index_bound,
        dimension_holds: gamma <= dimension_bound,
        index_tight: *s == index_bound,
        dimension_tight: gamma == dimension_bound,
        index_bound,
        dimension_bound,
    }
}

/// Computes the exact invariants and every structural bound for a connected
/// hypergraph: path cover, matching (when there is more than one edge),
/// longest path, and the exact cored value when applicable.
pub fn bound_report(g: &UniformHypergraph) -> Result<BoundReport, HypergraphError> {
    if !g.is_connected() {
        return Err(HypergraphError::NotConnected);
    }
    let m = g.uniformity() as u64;
    let n = g.vertex_count();
    let es = analyze(&g.adjacency_tensor())?;
    let s = es.stabilizing_index().clone();
    let gamma = es.stabilizing_dimension();

    let pc = path_cover_number(g)?;
    let mu = matching_number(g);
    let d = max_path_length(g)?;

    let exponent = |raw: Option<usize>, name: &'static str| {
        raw.map(|e| e as u64)
            .ok_or_else(|| HypergraphError::BoundViolated(format!("{name}: negative exponent")))
    };
    let mut checks = vec![check(
        "path-cover",
        m,
        exponent(pc.checked_sub(1), "path-cover")?,
        &s,
        gamma,
    )];
    if g.edge_count() >= 2 {
        checks.push(check(
            "matching",
            m,
            exponent(n.checked_sub(mu + 2), "matching")?,
            &s,
            gamma,
        ));
    }
    checks.push(check(
        "longest-path",
        m,
        exponent(n.checked_sub(d + 1), "longest-path")?,
        &s,
        gamma,
    ));

    let cored = g.is_cored();
    let cored_exact = if cored {
        let e = exponent(n.checked_sub(1 + g.edge_count()), "cored-exact")?;
        let expect = BigUint::from(m).pow(e as u32);
        Some(s == expect && gamma == e * composition_length(m))
    } else {
        None
    };

    let report = BoundReport {
        uniformity: g.uniformity(),
        vertex_count: n,
        edge_count: g.edge_count(),
        stabilizing_index: s,
        stabilizing_dimension: gamma,
        path_cover: pc,
        matching: mu,
        max_path: d,
        cored,
        checks,
        cored_exact,
    };

    if !report.all_hold() {
        let bad: Vec<&str> = report
            .checks
            .iter()
            .filter(|c| !c.index_holds || !c.dimension_holds)
            .map(|c| c.name)
            .chain((report.cored_exact == Some(false)).then_some("cored-exact"))
            .collect();
        return Err(HypergraphError::BoundViolated(bad.join(", ")));
    }
    Ok(report)
}
