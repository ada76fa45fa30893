//! Floating-point spectral computations: the Perron eigenpair by shifted
//! power iteration, reconstruction of every spectral-circle eigenvector from
//! phase vectors, and residual certification.

use crate::eigenvariety::PhaseVector;
use crate::tensor::{factorial, SymTensorSupport};
use num::complex::Complex64;
use num::ToPrimitive;
use std::f64::consts::TAU;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum NumericError {
    #[error("vector has length {found}, expected {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("tensor is not weakly irreducible")]
    NotWeaklyIrreducible,
    #[error("power iteration did not converge in {iterations} steps (residual {residual:.3e})")]
    NoConvergence { iterations: usize, residual: f64 },
}

/// The Perron eigenpair of a nonnegative weakly irreducible support.
#[derive(Clone, Debug)]
pub struct PerronResult {
    rho: f64,
    vector: Vec<f64>,
    iterations: usize,
    residual: f64,
}

impl PerronResult {
    /// The spectral radius estimate.
    pub fn rho(&self) -> f64 {
        self.rho
    }

    /// The positive eigenvector, normalized so the first coordinate is 1.
    pub fn vector(&self) -> &[f64] {
        &self.vector
    }

    pub fn iterations(&self) -> usize {
        self.iterations
    }

    /// Relative max-norm residual of the eigenpair.
    pub fn residual(&self) -> f64 {
        self.residual
    }
}

/// An eigenpair on the spectral circle, reconstructed from a phase vector.
#[derive(Clone, Debug)]
pub struct ComplexEigenpair {
    pub lambda: Complex64,
    pub vector: Vec<Complex64>,
    pub coset_index: u64,
    pub cyclic_index: u64,
}

/// One additive contribution of an entry to `A x^{m-1}`: the target
/// coordinate, the arrangement count of the remaining slots, and the
/// remaining multiset as (vertex, multiplicity) pairs.
struct ActionTerm {
    vertex: usize,
    coefficient: f64,
    remaining: Vec<(usize, usize)>,
}

struct EntryAction {
    value: f64,
    terms: Vec<ActionTerm>,
}

fn entry_actions(a: &SymTensorSupport) -> Vec<EntryAction> {
    let m = a.order();
    a.entries()
        .map(|(key, value)| {
            let mults = key.multiplicities();
            let terms = mults
                .iter()
                .map(|&(v, _)| {
                    let mut count = factorial((m - 1) as u128);
                    for &(u, cu) in &mults {
                        let reduced = if u == v { cu - 1 } else { cu };
                        count /= factorial(reduced as u128);
                    }
                    let remaining: Vec<(usize, usize)> = mults
                        .iter()
                        .filter_map(|&(u, cu)| {
                            let r = if u == v { cu - 1 } else { cu };
                            (r > 0).then_some((u, r))
                        })
                        .collect();
                    ActionTerm {
                        vertex: v,
                        coefficient: count as f64,
                        remaining,
                    }
                })
                .collect();
            EntryAction {
                value: value.to_f64().expect("rational fits in f64"),
                terms,
            }
        })
        .collect()
}

/// Applies the tensor to a complex vector: coordinate `i` of `A x^{m-1}`
/// sums, over entries containing `i`, the entry value times the number of
/// arrangements of the remaining slots times the matching monomial in `x`.
pub fn apply_tensor(a: &SymTensorSupport, x: &[Complex64]) -> Result<Vec<Complex64>, NumericError> {
    if x.len() != a.dim() {
        return Err(NumericError::DimensionMismatch {
            expected: a.dim(),
            found: x.len(),
        });
    }
    let mut out = vec![Complex64::new(0.0, 0.0); a.dim()];
    for action in entry_actions(a) {
        for term in &action.terms {
            let mut mono = Complex64::new(action.value * term.coefficient, 0.0);
            for &(u, r) in &term.remaining {
                mono *= x[u - 1].powu(r as u32);
            }
            out[term.vertex - 1] += mono;
        }
    }
    Ok(out)
}

/// Real specialization of [`apply_tensor`].
pub fn apply_tensor_real(a: &SymTensorSupport, x: &[f64]) -> Result<Vec<f64>, NumericError> {
    let cx: Vec<Complex64> = x.iter().map(|&v| Complex64::new(v, 0.0)).collect();
    Ok(apply_tensor(a, &cx)?.into_iter().map(|c| c.re).collect())
}

/// Relative residual of a candidate eigenpair: the max-norm of
/// `A y^{m-1} - λ y^{[m-1]}` divided by `max(1, |λ| · max_k |y_k|^{m-1})`.
pub fn eigen_residual(
    a: &SymTensorSupport,
    y: &[Complex64],
    lambda: Complex64,
) -> Result<f64, NumericError> {
    let ay = apply_tensor(a, y)?;
    let e = (a.order() - 1) as u32;
    let mut worst = 0.0f64;
    let mut ymax = 0.0f64;
    for (ai, yi) in ay.iter().zip(y) {
        let diff = (ai - lambda * yi.powu(e)).norm();
        worst = worst.max(diff);
        ymax = ymax.max(yi.norm());
    }
    let scale = (lambda.norm() * ymax.powi(e as i32)).max(1.0);
    Ok(worst / scale)
}

/// Computes the Perron eigenpair by power iteration on the shifted tensor
/// `A + I`.
///
/// The identity shift makes the iteration converge even when several
/// eigenvalues share the spectral circle, which is the generic situation
/// here, and does not move the eigenvector. The stopping rule brackets the
/// shifted spectral radius between the extreme Rayleigh-type ratios
/// `min_i y_i / x_i^{m-1}` and `max_i y_i / x_i^{m-1}`.
pub fn perron_vector(
    a: &SymTensorSupport,
    tol: f64,
    max_iter: usize,
) -> Result<PerronResult, NumericError> {
    if !a.is_weakly_irreducible() {
        return Err(NumericError::NotWeaklyIrreducible);
    }
    let n = a.dim();
    let e = (a.order() - 1) as f64;
    let mut x = vec![1.0f64; n];
    let mut rho_shifted = f64::NAN;
    let mut converged = false;
    let mut iterations = 0;

    for it in 1..=max_iter {
        iterations = it;
        let ax = apply_tensor_real(a, &x)?;
        let y: Vec<f64> = ax.iter().zip(&x).map(|(av, xv)| av + xv.powf(e)).collect();
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for (yv, xv) in y.iter().zip(&x) {
            let ratio = yv / xv.powf(e);
            lo = lo.min(ratio);
            hi = hi.max(ratio);
        }
        rho_shifted = 0.5 * (lo + hi);
        if hi - lo <= tol * hi.max(1.0) {
            converged = true;
            break;
        }
        let mut next: Vec<f64> = y.iter().map(|v| v.powf(1.0 / e)).collect();
        let max = next.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        for v in &mut next {
            *v /= max;
        }
        x = next;
    }

    let rho = rho_shifted - 1.0;
    let scale = x[0];
    let vector: Vec<f64> = x.iter().map(|v| v / scale).collect();
    let cx: Vec<Complex64> = vector.iter().map(|&v| Complex64::new(v, 0.0)).collect();
    let residual = eigen_residual(a, &cx, Complex64::new(rho, 0.0))?;

    if !converged && residual > tol {
        return Err(NumericError::NoConvergence {
            iterations,
            residual,
        });
    }
    Ok(PerronResult {
        rho,
        vector,
        iterations,
        residual,
    })
}

/// Rebuilds the eigenvector attached to a phase vector of coset `j`.
///
/// Coordinate `k` is `v_k · exp(-2πi φ_k / m)` and the eigenvalue is
/// `ρ · exp(-2πi j / ℓ)`: phases enter with a negative sign so that the
/// representative of coset `j` (a solution of `B x ≡ (mj/ℓ)·1`) pairs with
/// exactly that eigenvalue. Conjugating both gives the same set of
/// eigenpairs with the opposite sign convention. The moduli `|y_k|` equal
/// the Perron coordinates by construction; validity of the pair is checked
/// through [`eigen_residual`], not assumed.
pub fn reconstruct_eigenvector(
    phi: &PhaseVector,
    j: u64,
    ell: u64,
    pr: &PerronResult,
) -> ComplexEigenpair {
    assert_eq!(
        phi.dim(),
        pr.vector().len(),
        "phase/vector dimension mismatch"
    );
    let m = phi.modulus() as f64;
    let vector: Vec<Complex64> = phi
        .phases()
        .iter()
        .zip(pr.vector())
        .map(|(&p, &v)| Complex64::from_polar(v, -TAU * p as f64 / m))
        .collect();
    let lambda = Complex64::from_polar(pr.rho(), -TAU * j as f64 / ell as f64);
    ComplexEigenpair {
        lambda,
        vector,
        coset_index: j,
        cyclic_index: ell,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eigenvariety::{analyze, coset_representative, cyclic_index, enumerate_ps0};
    use crate::tensor::SymTensorSupport;
    use approx::assert_abs_diff_eq;
    use num::{BigInt, BigRational, One};

    fn rat(p: i64, q: i64) -> BigRational {
        BigRational::new(BigInt::from(p), BigInt::from(q))
    }

    fn single_edge_adjacency(m: usize) -> SymTensorSupport {
        let denom = (1..m as i64).product::<i64>();
        SymTensorSupport::from_uniform_entries(m, m, vec![(1..=m).collect()], rat(1, denom))
            .unwrap()
    }

    fn complete_adjacency(n: usize, m: usize) -> SymTensorSupport {
        let denom = (1..m as i64).product::<i64>();
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
        SymTensorSupport::from_uniform_entries(m, n, edges, rat(1, denom)).unwrap()
    }

    #[test]
    fn apply_single_edge_to_ones() {
        let a = single_edge_adjacency(3);
        let out = apply_tensor_real(&a, &[1.0, 1.0, 1.0]).unwrap();
        for v in out {
            assert_abs_diff_eq!(v, 1.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn apply_complete_counts_edges() {
        let a = complete_adjacency(4, 3);
        let out = apply_tensor_real(&a, &[1.0; 4]).unwrap();
        for v in out {
            assert_abs_diff_eq!(v, 3.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn apply_zero_vector() {
        let a = single_edge_adjacency(3);
        let out = apply_tensor_real(&a, &[0.0; 3]).unwrap();
        assert_eq!(out, vec![0.0; 3]);
    }

    #[test]
    fn apply_respects_multiplicities() {
        // entry (1,1,2) with value 1: coordinate 1 gets 2*x1*x2, coordinate 2 gets x1^2
        let a =
            SymTensorSupport::from_uniform_entries(3, 2, vec![vec![1, 1, 2]], rat(1, 1)).unwrap();
        let out = apply_tensor_real(&a, &[2.0, 5.0]).unwrap();
        assert_abs_diff_eq!(out[0], 2.0 * 2.0 * 5.0, epsilon = 1e-12);
        assert_abs_diff_eq!(out[1], 2.0 * 2.0, epsilon = 1e-12);
    }

    #[test]
    fn dimension_mismatch_is_reported() {
        let a = single_edge_adjacency(3);
        assert!(matches!(
            apply_tensor_real(&a, &[1.0, 1.0]),
            Err(NumericError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn perron_of_single_edge() {
        for m in [3usize, 4] {
            let a = single_edge_adjacency(m);
            let pr = perron_vector(&a, 1e-12, 100_000).unwrap();
            assert_abs_diff_eq!(pr.rho(), 1.0, epsilon = 1e-9);
            for &v in pr.vector() {
                assert_abs_diff_eq!(v, 1.0, epsilon = 1e-9);
            }
            assert!(pr.residual() < 1e-8);
        }
    }

    #[test]
    fn perron_of_complete() {
        // rho(K_n^{[m]}) = C(n-1, m-1)
        let a = complete_adjacency(5, 3);
        let pr = perron_vector(&a, 1e-12, 100_000).unwrap();
        assert_abs_diff_eq!(pr.rho(), 6.0, epsilon = 1e-8);
    }

    #[test]
    fn perron_of_graph_path() {
        // the 2-uniform path on 3 vertices is the classical P_3 adjacency
        // matrix with spectral radius sqrt(2)
        let a = SymTensorSupport::from_uniform_entries(
            2,
            3,
            vec![vec![1, 2], vec![2, 3]],
            BigRational::one(),
        )
        .unwrap();
        let pr = perron_vector(&a, 1e-12, 100_000).unwrap();
        assert_abs_diff_eq!(pr.rho(), 2f64.sqrt(), epsilon = 1e-9);
    }

    #[test]
    fn residual_detects_wrong_eigenvalue() {
        let a = single_edge_adjacency(3);
        let pr = perron_vector(&a, 1e-12, 100_000).unwrap();
        let y: Vec<Complex64> = pr
            .vector()
            .iter()
            .map(|&v| Complex64::new(v, 0.0))
            .collect();
        let good = eigen_residual(&a, &y, Complex64::new(pr.rho(), 0.0)).unwrap();
        let bad = eigen_residual(&a, &y, Complex64::new(pr.rho() + 1.0, 0.0)).unwrap();
        assert!(good < 1e-10);
        assert!(bad > 0.1);
    }

    #[test]
    fn reconstruct_coset_eigenpair() {
        // single 3-edge: phases (0,0,1) solve the j=1 coset; the eigenpair
        // with eigenvalue rho * exp(-2πi/3) must certify by residual
        let a = single_edge_adjacency(3);
        let pr = perron_vector(&a, 1e-12, 100_000).unwrap();
        let ell = cyclic_index(&a).unwrap();
        assert_eq!(ell, 3);
        let rep = coset_representative(&a, ell, 1).unwrap().unwrap();
        let pair = reconstruct_eigenvector(&rep, 1, ell, &pr);
        assert_abs_diff_eq!(pair.lambda.arg(), -TAU / 3.0, epsilon = 1e-12);
        let res = eigen_residual(&a, &pair.vector, pair.lambda).unwrap();
        assert!(res < 1e-8, "residual {res}");
    }

    #[test]
    fn reconstruct_sweep_over_phase_module() {
        // tight cycle: every phase vector yields an eigenvector for rho
        let edges = vec![
            vec![1, 2, 3],
            vec![2, 3, 4],
            vec![3, 4, 5],
            vec![4, 5, 6],
            vec![1, 5, 6],
            vec![1, 2, 6],
        ];
        let a = SymTensorSupport::from_uniform_entries(3, 6, edges, BigRational::one()).unwrap();
        let pr = perron_vector(&a, 1e-12, 100_000).unwrap();
        let es = analyze(&a).unwrap();
        let points = enumerate_ps0(&es, 100).unwrap();
        assert_eq!(points.len(), 3);
        for phi in &points {
            let pair = reconstruct_eigenvector(phi, 0, 3, &pr);
            let res = eigen_residual(&a, &pair.vector, pair.lambda).unwrap();
            assert!(res < 1e-8, "residual {res} for {phi:?}");
            for (yk, vk) in pair.vector.iter().zip(pr.vector()) {
                assert_abs_diff_eq!(yk.norm(), *vk, epsilon = 1e-12);
            }
        }
    }
}
