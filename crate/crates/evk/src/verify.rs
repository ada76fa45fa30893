//! Built-in regression table: every closed-form value, bound, and oracle
//! cross-check the library is expected to reproduce, runnable as one batch.
//!
//! The same checks back the `verify-paper` CLI command and the acceptance
//! test suite. Randomized instances use fixed seeds so a failure is always
//! reproducible.

use crate::eigenvariety::{
    analyze, coset_representative, cyclic_index, enumerate_ps0, subpattern_monotonicity_check,
    EigenvarietyStructure,
};
use crate::hypergraph::{
    bound_report, matching_number, max_path_length, path_cover_number, UniformHypergraph,
};
use crate::linalg::{brute_force_solve_mod, solve_mod};
use crate::numeric::{eigen_residual, perron_vector, reconstruct_eigenvector};
use crate::tensor::SymTensorSupport;
use num::{BigRational, BigUint, One};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;

const RESIDUAL_TOL: f64 = 1e-8;
const PERRON_TOL: f64 = 1e-10;
const PERRON_MAX_ITER: usize = 100_000;

/// Outcome of one regression check.
#[derive(Clone, Debug)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl CheckResult {
    fn ok(name: &'static str, detail: impl Into<String>) -> Self {
        CheckResult {
            name,
            passed: true,
            detail: detail.into(),
        }
    }

    fn fail(name: &'static str, detail: impl Into<String>) -> Self {
        CheckResult {
            name,
            passed: false,
            detail: detail.into(),
        }
    }
}

/// Runs every check in the regression table.
pub fn run_paper_checks() -> Vec<CheckResult> {
    vec![
        check_window_tensor(),
        check_tight_cycle(),
        check_closed_form_families(),
        check_wheel_parity(),
        check_solver_oracle(),
        check_eigenvector_witness(),
        check_search_values(),
        check_inequality_fuzzing(),
        check_triviality_equivalences(),
    ]
}

// ---------------------------------------------------------------------------
// fixtures

/// Order-12 tensor on 6 vertices whose incidence matrix has the sliding
/// window rows (3,3,3,1,1,1), (1,3,3,3,1,1), (1,1,3,3,3,1).
pub fn window_tensor_m12() -> SymTensorSupport {
    SymTensorSupport::from_uniform_entries(
        12,
        6,
        vec![
            vec![1, 1, 1, 2, 2, 2, 3, 3, 3, 4, 5, 6],
            vec![1, 2, 2, 2, 3, 3, 3, 4, 4, 4, 5, 6],
            vec![1, 2, 3, 3, 3, 4, 4, 4, 5, 5, 5, 6],
        ],
        BigRational::one(),
    )
    .expect("fixture is well formed")
}

/// 3-uniform tight cycle on six vertices: edges {i, i+1, i+2} cyclically.
pub fn tight_cycle_6() -> SymTensorSupport {
    SymTensorSupport::from_uniform_entries(
        3,
        6,
        vec![
            vec![1, 2, 3],
            vec![2, 3, 4],
            vec![3, 4, 5],
            vec![4, 5, 6],
            vec![1, 5, 6],
            vec![1, 2, 6],
        ],
        BigRational::one(),
    )
    .expect("fixture is well formed")
}

/// 17-vertex demonstration hypergraph for the path cover number: a 7-edge
/// caterpillar on anchors 1..8 with leaves 11..17, plus the edge {9,10,17}.
/// Its optimal packing uses all 8 edges, so the path cover number is 9.
pub fn caterpillar_17() -> UniformHypergraph {
    let mut edges: Vec<Vec<usize>> = (1..=7).map(|i| vec![i, i + 1, 10 + i]).collect();
    edges.push(vec![9, 10, 17]);
    UniformHypergraph::new(3, 17, edges).expect("fixture is well formed")
}

// ---------------------------------------------------------------------------
// randomized instance generation (fixed seeds at the call sites)

fn random_connected_hypergraph(
    rng: &mut ChaCha8Rng,
    n: usize,
    m: usize,
    extra: usize,
) -> UniformHypergraph {
    assert!(n >= m);
    let mut perm: Vec<usize> = (1..=n).collect();
    perm.shuffle(rng);
    let mut edges: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut sorted_first: Vec<usize> = perm[..m].to_vec();
    sorted_first.sort_unstable();
    edges.insert(sorted_first);
    let mut idx = m;
    while idx < n {
        let take = rng.gen_range(1..=(m - 1).min(n - idx));
        let mut e: Vec<usize> = perm[idx..idx + take].to_vec();
        while e.len() < m {
            let v = perm[rng.gen_range(0..idx)];
            if !e.contains(&v) {
                e.push(v);
            }
        }
        idx += take;
        e.sort_unstable();
        edges.insert(e);
    }
    for _ in 0..extra {
        let mut e: Vec<usize> = Vec::new();
        while e.len() < m {
            let v = rng.gen_range(1..=n);
            if !e.contains(&v) {
                e.push(v);
            }
        }
        e.sort_unstable();
        edges.insert(e);
    }
    UniformHypergraph::new(m, n, edges.into_iter().collect()).expect("generated edges are valid")
}

fn random_connected_graph(rng: &mut ChaCha8Rng, n: usize) -> Vec<(usize, usize)> {
    let mut edges: BTreeSet<(usize, usize)> = BTreeSet::new();
    for v in 2..=n {
        let u = rng.gen_range(1..v);
        edges.insert((u, v));
    }
    for _ in 0..rng.gen_range(0..=n) {
        let u = rng.gen_range(1..=n);
        let v = rng.gen_range(1..=n);
        if u != v {
            edges.insert((u.min(v), u.max(v)));
        }
    }
    edges.into_iter().collect()
}

fn random_connected_spanning_sub(rng: &mut ChaCha8Rng, g: &UniformHypergraph) -> UniformHypergraph {
    let mut keep: Vec<Vec<usize>> = g.edges().to_vec();
    let mut order = keep.clone();
    order.shuffle(rng);
    for e in order {
        if keep.len() == 1 {
            break;
        }
        if !rng.gen_bool(0.7) {
            continue;
        }
        let trial: Vec<Vec<usize>> = keep.iter().filter(|x| **x != e).cloned().collect();
        let h = UniformHypergraph::new(g.uniformity(), g.vertex_count(), trial.clone())
            .expect("subset of valid edges");
        if h.is_connected() {
            keep = trial;
        }
    }
    UniformHypergraph::new(g.uniformity(), g.vertex_count(), keep).expect("kept edges are valid")
}

// ---------------------------------------------------------------------------
// the checks

fn pow_big(m: u64, e: u64) -> BigUint {
    BigUint::from(m).pow(e as u32)
}

pub fn check_window_tensor() -> CheckResult {
    const NAME: &str = "window-tensor-structure";
    let es = match analyze(&window_tensor_m12()) {
        Ok(es) => es,
        Err(e) => return CheckResult::fail(NAME, format!("analyze failed: {e}")),
    };
    let mut divisors = vec![1u64; es.unit_divisor_count()];
    divisors.extend_from_slice(es.zm_divisors());
    let ok = divisors == vec![1, 2, 2]
        && es.decomposition_string() == "Z_2 ⊕ Z_2 ⊕ Z_12 ⊕ Z_12"
        && es.stabilizing_index() == &BigUint::from(576u32)
        && es.stabilizing_dimension() == 8;
    if ok {
        CheckResult::ok(
            NAME,
            "divisors (1,2,2), s = 576, gamma = 8, Z_2 + Z_2 + Z_12 + Z_12",
        )
    } else {
        CheckResult::fail(
            NAME,
            format!(
                "divisors {:?}, s = {}, gamma = {}, decomposition {}",
                divisors,
                es.stabilizing_index(),
                es.stabilizing_dimension(),
                es.decomposition_string()
            ),
        )
    }
}

pub fn check_tight_cycle() -> CheckResult {
    const NAME: &str = "tight-cycle-structure";
    let a = tight_cycle_6();
    let es = match analyze(&a) {
        Ok(es) => es,
        Err(e) => return CheckResult::fail(NAME, format!("analyze failed: {e}")),
    };
    if es.stabilizing_index() != &BigUint::from(3u32) || es.stabilizing_dimension() != 1 {
        return CheckResult::fail(
            NAME,
            format!(
                "s = {}, gamma = {}",
                es.stabilizing_index(),
                es.stabilizing_dimension()
            ),
        );
    }
    let points: BTreeSet<Vec<u64>> = match enumerate_ps0(&es, 100) {
        Ok(p) => p.into_iter().map(|v| v.phases().to_vec()).collect(),
        Err(e) => return CheckResult::fail(NAME, format!("enumeration failed: {e}")),
    };
    if !points.contains(&vec![0, 1, 2, 0, 1, 2]) {
        return CheckResult::fail(
            NAME,
            format!("phase module {points:?} misses (0,1,2,0,1,2)"),
        );
    }
    let brute = match brute_force_solve_mod(&a.incidence_matrix(), &[0; 6], 3, 1_000_000) {
        Ok(b) => b,
        Err(e) => return CheckResult::fail(NAME, format!("brute force failed: {e}")),
    };
    if brute.len() != 9 {
        return CheckResult::fail(NAME, format!("brute force found {} solutions", brute.len()));
    }
    CheckResult::ok(
        NAME,
        "s = 3, gamma = 1, (0,1,2,0,1,2) present, 9 = m*s solutions",
    )
}

fn analyze_graph(g: &UniformHypergraph) -> Result<EigenvarietyStructure, String> {
    analyze(&g.adjacency_tensor()).map_err(|e| format!("analyze failed: {e}"))
}

pub fn check_closed_form_families() -> CheckResult {
    const NAME: &str = "closed-form-families";
    let run = || -> Result<usize, String> {
        let mut checked = 0usize;

        // hyperpaths: s = m^{(n-1)(m-2)}
        for n in 2..=4usize {
            for m in 3..=5usize {
                let g = UniformHypergraph::hyperpath(n, m).map_err(|e| e.to_string())?;
                let es = analyze_graph(&g)?;
                let want = pow_big(m as u64, ((n - 1) * (m - 2)) as u64);
                if es.stabilizing_index() != &want {
                    return Err(format!(
                        "hyperpath({n},{m}): s = {} want {want}",
                        es.stabilizing_index()
                    ));
                }
                check_cored_value(&g, &es)?;
                checked += 1;
            }
        }

        // squids: s = m^{(t+1)(m-2)}
        for m in 3..=4usize {
            for t in 1..=m {
                let g = UniformHypergraph::squid(m, t).map_err(|e| e.to_string())?;
                let es = analyze_graph(&g)?;
                let want = pow_big(m as u64, ((t + 1) * (m - 2)) as u64);
                if es.stabilizing_index() != &want {
                    return Err(format!(
                        "squid({m},{t}): s = {} want {want}",
                        es.stabilizing_index()
                    ));
                }
                check_cored_value(&g, &es)?;
                checked += 1;
            }
        }

        // complete hypergraphs: s = 1
        for (n, m) in [(4, 3), (5, 3), (5, 4)] {
            let g = UniformHypergraph::complete(n, m).map_err(|e| e.to_string())?;
            let es = analyze_graph(&g)?;
            if !es.is_trivial() {
                return Err(format!("complete({n},{m}): s = {}", es.stabilizing_index()));
            }
            checked += 1;
        }

        // graph powers: s = m^{n-1+t(m-3)}
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0003);
        for _ in 0..5 {
            let n = rng.gen_range(2..=6usize);
            let graph = random_connected_graph(&mut rng, n);
            let t = graph.len();
            for m in [3usize, 4] {
                let g =
                    UniformHypergraph::power_of_graph(n, &graph, m).map_err(|e| e.to_string())?;
                let es = analyze_graph(&g)?;
                let want = pow_big(m as u64, (n - 1 + t * (m - 3)) as u64);
                if es.stabilizing_index() != &want {
                    return Err(format!(
                        "power(n={n},t={t},m={m}): s = {} want {want}",
                        es.stabilizing_index()
                    ));
                }
                check_cored_value(&g, &es)?;
                checked += 1;
            }
        }
        Ok(checked)
    };
    match run() {
        Ok(count) => CheckResult::ok(NAME, format!("{count} closed-form values match exactly")),
        Err(e) => CheckResult::fail(NAME, e),
    }
}

/// For cored instances the index is pinned: s = m^{n-1-|E|} exactly.
fn check_cored_value(g: &UniformHypergraph, es: &EigenvarietyStructure) -> Result<(), String> {
    if !g.is_cored() {
        return Ok(());
    }
    let e = (g.vertex_count() - 1 - g.edge_count()) as u64;
    let want = pow_big(g.uniformity() as u64, e);
    if es.stabilizing_index() != &want {
        return Err(format!(
            "cored instance (m={}, n={}, |E|={}): s = {} want {want}",
            g.uniformity(),
            g.vertex_count(),
            g.edge_count(),
            es.stabilizing_index()
        ));
    }
    Ok(())
}

pub fn check_wheel_parity() -> CheckResult {
    const NAME: &str = "wheel-parity-tripartition";
    for n in 3..=8usize {
        let g = match UniformHypergraph::wheel(n) {
            Ok(g) => g,
            Err(e) => return CheckResult::fail(NAME, format!("wheel({n}): {e}")),
        };
        let a = g.adjacency_tensor();
        let es = match analyze(&a) {
            Ok(es) => es,
            Err(e) => return CheckResult::fail(NAME, format!("wheel({n}): {e}")),
        };
        let positive = !es.is_trivial();
        if positive != (n % 2 == 0) {
            return CheckResult::fail(
                NAME,
                format!("wheel({n}): gamma = {}", es.stabilizing_dimension()),
            );
        }
        let parts = match crate::eigenvariety::tripartition_3uniform(&a) {
            Ok(p) => p,
            Err(e) => return CheckResult::fail(NAME, format!("wheel({n}): {e}")),
        };
        match (positive, parts) {
            (false, None) => {}
            (true, Some(parts)) => {
                if let Err(e) = verify_tripartition(&g, &parts) {
                    return CheckResult::fail(NAME, format!("wheel({n}): {e}"));
                }
            }
            (positive, parts) => {
                return CheckResult::fail(
                    NAME,
                    format!("wheel({n}): gamma>0 = {positive} but tripartition = {parts:?}"),
                );
            }
        }
    }
    CheckResult::ok(
        NAME,
        "gamma > 0 exactly for even wheels 3..8; tripartitions verified",
    )
}

fn verify_tripartition(g: &UniformHypergraph, parts: &[Vec<usize>; 3]) -> Result<(), String> {
    if parts.iter().any(|p| p.is_empty()) {
        return Err("a part is empty".into());
    }
    let mut label = vec![usize::MAX; g.vertex_count() + 1];
    let mut seen = 0usize;
    for (i, part) in parts.iter().enumerate() {
        for &v in part {
            if v < 1 || v > g.vertex_count() || label[v] != usize::MAX {
                return Err(format!("vertex {v} misplaced"));
            }
            label[v] = i;
            seen += 1;
        }
    }
    if seen != g.vertex_count() {
        return Err("parts do not partition the vertex set".into());
    }
    for e in g.edges() {
        let labels: BTreeSet<usize> = e.iter().map(|&v| label[v]).collect();
        if labels.len() != 1 && labels.len() != 3 {
            return Err(format!("edge {e:?} is neither monochromatic nor rainbow"));
        }
    }
    Ok(())
}

pub fn check_solver_oracle() -> CheckResult {
    const NAME: &str = "solver-oracle-equivalence";
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0005);
    for i in 0..30 {
        let m = if i % 2 == 0 { 3usize } else { 4 };
        let n = match m {
            3 => rng.gen_range(4..=10usize),
            _ => rng.gen_range(4..=8usize),
        };
        let extra = rng.gen_range(0..=n / 2);
        let g = random_connected_hypergraph(&mut rng, n, m, extra);
        let a = g.adjacency_tensor();
        let b = a.incidence_matrix();
        let mu = m as u64;

        let sol = match solve_mod(&b, &vec![0; b.rows()], mu) {
            Ok(s) => s,
            Err(e) => return CheckResult::fail(NAME, format!("solve failed: {e}")),
        };
        let brute = match brute_force_solve_mod(&b, &vec![0; b.rows()], mu, 200_000) {
            Ok(v) => v,
            Err(e) => return CheckResult::fail(NAME, format!("brute force failed: {e}")),
        };
        if sol.solution_count() != BigUint::from(brute.len()) {
            return CheckResult::fail(
                NAME,
                format!(
                    "instance {i} (m={m}, n={n}): solver count {} vs brute {}",
                    sol.solution_count(),
                    brute.len()
                ),
            );
        }

        let es = match analyze(&a) {
            Ok(es) => es,
            Err(e) => return CheckResult::fail(NAME, format!("analyze failed: {e}")),
        };
        // m * s must match the full homogeneous count
        if BigUint::from(mu) * es.stabilizing_index() != BigUint::from(brute.len()) {
            return CheckResult::fail(
                NAME,
                format!(
                    "instance {i}: m*s != |S_0| ({} vs {})",
                    es.stabilizing_index(),
                    brute.len()
                ),
            );
        }
        let normalized: BTreeSet<Vec<u64>> = brute
            .iter()
            .map(|x| {
                let shift = x[0];
                x.iter().map(|&v| (v + mu - shift) % mu).collect()
            })
            .collect();
        let enumerated: BTreeSet<Vec<u64>> = match enumerate_ps0(&es, 200_000) {
            Ok(p) => p.into_iter().map(|v| v.phases().to_vec()).collect(),
            Err(e) => return CheckResult::fail(NAME, format!("enumeration failed: {e}")),
        };
        if normalized != enumerated {
            return CheckResult::fail(
                NAME,
                format!("instance {i} (m={m}, n={n}): normalized brute set != enumerated set"),
            );
        }
    }
    CheckResult::ok(
        NAME,
        "30 random instances: counts and normalized sets agree",
    )
}

pub fn check_eigenvector_witness() -> CheckResult {
    const NAME: &str = "eigenvector-residual-witness";
    let mut cases: Vec<(String, SymTensorSupport)> = vec![("tight-cycle".into(), tight_cycle_6())];
    for (label, g) in [
        ("hyperpath(3,3)", UniformHypergraph::hyperpath(3, 3)),
        ("squid(3,1)", UniformHypergraph::squid(3, 1)),
        ("wheel(4)", UniformHypergraph::wheel(4)),
    ] {
        match g {
            Ok(g) => cases.push((label.into(), g.adjacency_tensor())),
            Err(e) => return CheckResult::fail(NAME, format!("{label}: {e}")),
        }
    }

    let mut total = 0u64;
    for (label, a) in &cases {
        let pr = match perron_vector(a, PERRON_TOL, PERRON_MAX_ITER) {
            Ok(p) => p,
            Err(e) => return CheckResult::fail(NAME, format!("{label}: perron failed: {e}")),
        };
        if pr.residual() >= RESIDUAL_TOL {
            return CheckResult::fail(
                NAME,
                format!("{label}: perron residual {:.3e}", pr.residual()),
            );
        }
        let es = match analyze(a) {
            Ok(es) => es,
            Err(e) => return CheckResult::fail(NAME, format!("{label}: {e}")),
        };
        let ell = match cyclic_index(a) {
            Ok(l) => l,
            Err(e) => return CheckResult::fail(NAME, format!("{label}: {e}")),
        };
        let points = match enumerate_ps0(&es, 1_000_000) {
            Ok(p) => p,
            Err(e) => return CheckResult::fail(NAME, format!("{label}: {e}")),
        };
        let mut accepted = BTreeSet::new();
        for phi in &points {
            let pair = reconstruct_eigenvector(phi, 0, ell, &pr);
            let res = match eigen_residual(a, &pair.vector, pair.lambda) {
                Ok(r) => r,
                Err(e) => return CheckResult::fail(NAME, format!("{label}: {e}")),
            };
            if res >= RESIDUAL_TOL {
                return CheckResult::fail(NAME, format!("{label}: residual {res:.3e} for {phi:?}"));
            }
            accepted.insert(phi.phases().to_vec());
        }
        if BigUint::from(accepted.len()) != *es.stabilizing_index() {
            return CheckResult::fail(
                NAME,
                format!(
                    "{label}: accepted {} eigenvectors, s = {}",
                    accepted.len(),
                    es.stabilizing_index()
                ),
            );
        }
        total += accepted.len() as u64;
        // every nonempty coset on the spectral circle reconstructs too
        for j in 0..ell {
            let rep = match coset_representative(a, ell, j) {
                Ok(Some(r)) => r,
                Ok(None) => {
                    return CheckResult::fail(
                        NAME,
                        format!("{label}: coset {j} of {ell} unexpectedly empty"),
                    )
                }
                Err(e) => return CheckResult::fail(NAME, format!("{label}: {e}")),
            };
            let pair = reconstruct_eigenvector(&rep, j, ell, &pr);
            let res = match eigen_residual(a, &pair.vector, pair.lambda) {
                Ok(r) => r,
                Err(e) => return CheckResult::fail(NAME, format!("{label}: {e}")),
            };
            if res >= RESIDUAL_TOL {
                return CheckResult::fail(NAME, format!("{label}: coset {j} residual {res:.3e}"));
            }
            total += 1;
        }
    }

    // closed-form spectral radii
    for m in [3usize, 4] {
        let denom: i64 = (1..m as i64).product();
        let a = SymTensorSupport::from_uniform_entries(
            m,
            m,
            vec![(1..=m).collect()],
            BigRational::new(1.into(), denom.into()),
        )
        .expect("single edge");
        let pr = match perron_vector(&a, PERRON_TOL, PERRON_MAX_ITER) {
            Ok(p) => p,
            Err(e) => return CheckResult::fail(NAME, format!("single {m}-edge: {e}")),
        };
        if (pr.rho() - 1.0).abs() >= RESIDUAL_TOL {
            return CheckResult::fail(NAME, format!("single {m}-edge: rho = {}", pr.rho()));
        }
    }
    for (n, m, want) in [(4usize, 3usize, 3.0f64), (5, 3, 6.0), (5, 4, 4.0)] {
        let g = UniformHypergraph::complete(n, m).expect("complete");
        let pr = match perron_vector(&g.adjacency_tensor(), PERRON_TOL, PERRON_MAX_ITER) {
            Ok(p) => p,
            Err(e) => return CheckResult::fail(NAME, format!("complete({n},{m}): {e}")),
        };
        if (pr.rho() - want).abs() >= RESIDUAL_TOL {
            return CheckResult::fail(
                NAME,
                format!("complete({n},{m}): rho = {} want {want}", pr.rho()),
            );
        }
    }
    CheckResult::ok(
        NAME,
        format!("{total} eigenpairs certified below {RESIDUAL_TOL:.0e}; spectral radii match"),
    )
}

pub fn check_search_values() -> CheckResult {
    const NAME: &str = "combinatorial-search-values";
    let cat = caterpillar_17();
    match path_cover_number(&cat) {
        Ok(9) => {}
        Ok(other) => return CheckResult::fail(NAME, format!("caterpillar pc = {other}, want 9")),
        Err(e) => return CheckResult::fail(NAME, format!("caterpillar: {e}")),
    }
    for n in 2..=4usize {
        for m in 3..=5usize {
            let g = match UniformHypergraph::hyperpath(n, m) {
                Ok(g) => g,
                Err(e) => return CheckResult::fail(NAME, format!("hyperpath({n},{m}): {e}")),
            };
            match path_cover_number(&g) {
                Ok(pc) if pc == (n - 1) * (m - 2) + 1 => {}
                Ok(pc) => {
                    return CheckResult::fail(
                        NAME,
                        format!(
                            "hyperpath({n},{m}): pc = {pc}, want {}",
                            (n - 1) * (m - 2) + 1
                        ),
                    )
                }
                Err(e) => return CheckResult::fail(NAME, format!("hyperpath({n},{m}): {e}")),
            }
            match max_path_length(&g) {
                Ok(d) if d == n - 1 => {}
                Ok(d) => {
                    return CheckResult::fail(
                        NAME,
                        format!("hyperpath({n},{m}): d = {d}, want {}", n - 1),
                    )
                }
                Err(e) => return CheckResult::fail(NAME, format!("hyperpath({n},{m}): {e}")),
            }
        }
    }
    for m in 3..=4usize {
        for t in 1..=m {
            let g = match UniformHypergraph::squid(m, t) {
                Ok(g) => g,
                Err(e) => return CheckResult::fail(NAME, format!("squid({m},{t}): {e}")),
            };
            let mu = matching_number(&g);
            if mu != t {
                return CheckResult::fail(NAME, format!("squid({m},{t}): matching = {mu}"));
            }
        }
    }
    CheckResult::ok(
        NAME,
        "pc(caterpillar) = 9; hyperpath pc/d and squid matchings exact",
    )
}

pub fn check_inequality_fuzzing() -> CheckResult {
    const NAME: &str = "inequality-fuzzing";
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0008);
    for i in 0..50 {
        let m = if rng.gen_bool(0.5) { 3usize } else { 4 };
        let n = rng.gen_range(m.max(5)..=12usize);
        let extra = rng.gen_range(0..=3usize);
        let g = random_connected_hypergraph(&mut rng, n, m, extra);
        let report = match bound_report(&g) {
            Ok(r) => r,
            Err(e) => {
                return CheckResult::fail(
                    NAME,
                    format!("instance {i} (m={m}, n={n}, |E|={}): {e}", g.edge_count()),
                )
            }
        };
        debug_assert!(report.all_hold());

        let sub = random_connected_spanning_sub(&mut rng, &g);
        let check = match subpattern_monotonicity_check(
            &g.adjacency_tensor(),
            &sub.adjacency_tensor(),
            100_000,
        ) {
            Ok(c) => c,
            Err(e) => return CheckResult::fail(NAME, format!("instance {i} spanning sub: {e}")),
        };
        if !check.all_hold() {
            return CheckResult::fail(
                NAME,
                format!(
                    "instance {i}: spanning-sub divisibility failed (s {} vs {})",
                    check.s_super, check.s_sub
                ),
            );
        }
    }
    CheckResult::ok(
        NAME,
        "50 random instances: all bounds and divisibility hold",
    )
}

pub fn check_triviality_equivalences() -> CheckResult {
    const NAME: &str = "triviality-equivalences";
    let mut instances: Vec<(String, SymTensorSupport)> = vec![
        ("window-tensor".into(), window_tensor_m12()),
        ("tight-cycle".into(), tight_cycle_6()),
    ];
    for (n, m) in [(4, 3), (5, 3), (5, 4)] {
        instances.push((
            format!("complete({n},{m})"),
            UniformHypergraph::complete(n, m)
                .expect("complete")
                .adjacency_tensor(),
        ));
    }
    for n in 2..=4usize {
        for m in 3..=5usize {
            instances.push((
                format!("hyperpath({n},{m})"),
                UniformHypergraph::hyperpath(n, m)
                    .expect("hyperpath")
                    .adjacency_tensor(),
            ));
        }
    }
    for n in 3..=8usize {
        instances.push((
            format!("wheel({n})"),
            UniformHypergraph::wheel(n)
                .expect("wheel")
                .adjacency_tensor(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0009);
    for i in 0..20 {
        let m = if i % 2 == 0 { 3usize } else { 4 };
        let n = rng.gen_range(m..=9usize);
        let extra = rng.gen_range(0..=2);
        instances.push((
            format!("random-{i}"),
            random_connected_hypergraph(&mut rng, n, m, extra).adjacency_tensor(),
        ));
    }

    for (label, a) in &instances {
        let es = match analyze(a) {
            Ok(es) => es,
            Err(e) => return CheckResult::fail(NAME, format!("{label}: {e}")),
        };
        let s_trivial = es.stabilizing_index().is_one();
        let gamma_zero = es.stabilizing_dimension() == 0;
        let module_trivial = match enumerate_ps0(&es, 1_000_000) {
            Ok(points) => points.len() == 1 && points[0].is_zero(),
            Err(_) => false,
        };
        let unit_count_full = es.unit_divisor_count() == es.dim() - 1
            && es.zm_divisors().is_empty()
            && es.free_rank() == 0;
        if !(s_trivial == gamma_zero
            && gamma_zero == module_trivial
            && module_trivial == unit_count_full)
        {
            return CheckResult::fail(
                NAME,
                format!(
                    "{label}: s=1:{s_trivial} gamma=0:{gamma_zero} module:{module_trivial} units:{unit_count_full}"
                ),
            );
        }
    }
    CheckResult::ok(
        NAME,
        format!(
            "{} instances: the four triviality conditions agree",
            instances.len()
        ),
    )
}
