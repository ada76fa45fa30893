//! The analysis report: one JSON-serializable summary per input, with an
//! optional Perron block, eigenvector sweep summary, and bound table.

use crate::eigenvariety::EigenvarietyStructure;
use crate::hypergraph::BoundReport;
use crate::numeric::PerronResult;
use serde::Serialize;
use std::fmt::Write as _;

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct PerronJson {
    pub rho: f64,
    pub vector: Vec<f64>,
    pub iterations: usize,
    pub residual: f64,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SweepJson {
    /// Number of reconstructed eigenvectors accepted by residual.
    pub eigenvector_count: u64,
    pub max_residual: f64,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct BoundCheckJson {
    pub name: String,
    pub index_bound: String,
    pub dimension_bound: u64,
    pub index_holds: bool,
    pub dimension_holds: bool,
    pub index_tight: bool,
    pub dimension_tight: bool,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct BoundsJson {
    pub path_cover: usize,
    pub matching: usize,
    pub max_path: usize,
    pub cored: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cored_exact: Option<bool>,
    pub checks: Vec<BoundCheckJson>,
}

impl From<&BoundReport> for BoundsJson {
    fn from(r: &BoundReport) -> Self {
        BoundsJson {
            path_cover: r.path_cover,
            matching: r.matching,
            max_path: r.max_path,
            cored: r.cored,
            cored_exact: r.cored_exact,
            checks: r
                .checks
                .iter()
                .map(|c| BoundCheckJson {
                    name: c.name.to_string(),
                    index_bound: c.index_bound.to_string(),
                    dimension_bound: c.dimension_bound,
                    index_holds: c.index_holds,
                    dimension_holds: c.dimension_holds,
                    index_tight: c.index_tight,
                    dimension_tight: c.dimension_tight,
                })
                .collect(),
        }
    }
}

/// The top-level report. The stabilizing index is a decimal string since it
/// grows past machine range quickly; vertices are reported 1-based in the
/// input order, with vertex 1 the phase normalization anchor.
#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct AnalysisReport {
    pub input: String,
    pub kind: String,
    pub m: u64,
    pub n: usize,
    pub weakly_irreducible: bool,
    pub cyclic_index: u64,
    pub invariant_divisors_zm: Vec<u64>,
    pub unit_divisors: usize,
    pub free_rank: usize,
    pub stabilizing_index: String,
    pub stabilizing_dimension: u64,
    pub generators: Vec<Vec<u64>>,
    pub generator_orders: Vec<u64>,
    pub decomposition: String,
    pub vertex_order: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub perron: Option<PerronJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub enumerated_phase_vectors: Option<Vec<Vec<u64>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sweep: Option<SweepJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bounds: Option<BoundsJson>,
}

impl AnalysisReport {
    pub fn new(
        input: impl Into<String>,
        kind: impl Into<String>,
        es: &EigenvarietyStructure,
        cyclic_index: u64,
    ) -> Self {
        AnalysisReport {
            input: input.into(),
            kind: kind.into(),
            m: es.modulus(),
            n: es.dim(),
            weakly_irreducible: true,
            cyclic_index,
            invariant_divisors_zm: {
                let mut d = vec![1u64; es.unit_divisor_count()];
                d.extend_from_slice(es.zm_divisors());
                d
            },
            unit_divisors: es.unit_divisor_count(),
            free_rank: es.free_rank(),
            stabilizing_index: es.stabilizing_index().to_string(),
            stabilizing_dimension: es.stabilizing_dimension(),
            generators: es
                .generators()
                .iter()
                .map(|(p, _)| p.phases().to_vec())
                .collect(),
            generator_orders: es.generators().iter().map(|(_, o)| *o).collect(),
            decomposition: es.decomposition_string(),
            vertex_order: "vertices 1..n as given in the input; phases normalized at vertex 1"
                .into(),
            perron: None,
            enumerated_phase_vectors: None,
            sweep: None,
            bounds: None,
        }
    }

    pub fn with_perron(mut self, pr: &PerronResult) -> Self {
        self.perron = Some(PerronJson {
            rho: pr.rho(),
            vector: pr.vector().to_vec(),
            iterations: pr.iterations(),
            residual: pr.residual(),
        });
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Plain-text rendering for terminals.
    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "input                {}", self.input);
        let _ = writeln!(out, "kind                 {}", self.kind);
        let _ = writeln!(out, "order m              {}", self.m);
        let _ = writeln!(out, "dimension n          {}", self.n);
        let _ = writeln!(out, "weakly irreducible   {}", self.weakly_irreducible);
        let _ = writeln!(out, "cyclic index         {}", self.cyclic_index);
        let _ = writeln!(
            out,
            "invariant divisors   {:?} (units: {}, free rank: {})",
            self.invariant_divisors_zm, self.unit_divisors, self.free_rank
        );
        let _ = writeln!(out, "stabilizing index    {}", self.stabilizing_index);
        let _ = writeln!(out, "stabilizing dim      {}", self.stabilizing_dimension);
        let _ = writeln!(out, "decomposition        {}", self.decomposition);
        for (g, o) in self.generators.iter().zip(&self.generator_orders) {
            let _ = writeln!(out, "generator (order {o:>3}) {g:?}");
        }
        if let Some(p) = &self.perron {
            let _ = writeln!(
                out,
                "perron               rho = {:.12}, residual = {:.3e}, {} iterations",
                p.rho, p.residual, p.iterations
            );
            let _ = writeln!(out, "perron vector        {:?}", p.vector);
        }
        if let Some(points) = &self.enumerated_phase_vectors {
            let _ = writeln!(out, "phase vectors        {} enumerated", points.len());
            for p in points {
                let _ = writeln!(out, "  {p:?}");
            }
        }
        if let Some(s) = &self.sweep {
            let _ = writeln!(
                out,
                "eigenvector sweep    {} accepted, max residual {:.3e}",
                s.eigenvector_count, s.max_residual
            );
        }
        if let Some(b) = &self.bounds {
            let _ = writeln!(
                out,
                "searches             pc = {}, matching = {}, longest path = {}, cored = {}",
                b.path_cover, b.matching, b.max_path, b.cored
            );
            for c in &b.checks {
                let _ = writeln!(
                    out,
                    "bound {:<14} s <= {} [{}{}], gamma <= {} [{}{}]",
                    c.name,
                    c.index_bound,
                    if c.index_holds { "ok" } else { "VIOLATED" },
                    if c.index_tight { ", tight" } else { "" },
                    c.dimension_bound,
                    if c.dimension_holds { "ok" } else { "VIOLATED" },
                    if c.dimension_tight { ", tight" } else { "" },
                );
            }
            if let Some(exact) = b.cored_exact {
                let _ = writeln!(
                    out,
                    "cored exact value    {}",
                    if exact { "matches" } else { "VIOLATED" }
                );
            }
        }
        out
    }
}
