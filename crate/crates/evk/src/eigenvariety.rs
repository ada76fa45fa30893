//! The projective eigenvariety at the spectral radius, as a module over
//! `Z_m`.
//!
//! Writing `B` for the incidence matrix of a combinatorially symmetric
//! support of order `m`, the phase vectors of spectral-radius eigenvectors
//! (normalized so the first coordinate is zero) are exactly the solutions of
//! `B x ≡ 0 (mod m)` with `x_1 = 0`. This module computes that solution
//! module, its cardinality `s` (the stabilizing index), its composition
//! length `γ` (the stabilizing dimension), coset representatives for every
//! eigenvalue on the spectral circle, and the cyclic index.

use crate::linalg::{composition_length, derive_modm_divisors, smith_normal_form, solve_mod_with};
use crate::tensor::SymTensorSupport;
use num::{BigInt, BigUint, One};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EigenError {
    #[error("tensor is not weakly irreducible")]
    NotWeaklyIrreducible,
    #[error("enumeration of {size} elements exceeds cap {cap}")]
    CapExceeded { size: String, cap: u64 },
    #[error("operation requires an order-3 tensor, found order {0}")]
    NotThreeUniform(usize),
    #[error("first tensor is not a superpattern of the second")]
    NotSubpattern,
    #[error("coset parameters invalid: ell={ell} must divide m={m} and j={j} < ell")]
    BadCosetParameters { m: u64, ell: u64, j: u64 },
    #[error("tensors differ in order or dimension")]
    ShapeMismatch,
}

/// An element of `Z_m^n` with first coordinate normalized to zero.
///
/// Phase vectors stand for diagonal phase matrices: coordinate `k` is the
/// exponent of the m-th root of unity attached to vertex `k+1`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PhaseVector {
    modulus: u64,
    phases: Vec<u64>,
}

impl PhaseVector {
    pub fn new(modulus: u64, phases: Vec<u64>) -> Self {
        assert!(modulus >= 2);
        assert!(
            !phases.is_empty() && phases[0] == 0,
            "first coordinate must be 0"
        );
        assert!(
            phases.iter().all(|&p| p < modulus),
            "phases must lie in 0..m"
        );
        PhaseVector { modulus, phases }
    }

    /// Normalizes an arbitrary solution by subtracting `x_1 * (1,...,1)`.
    pub fn normalize(modulus: u64, x: &[u64]) -> Self {
        let shift = x[0] % modulus;
        let phases = x
            .iter()
            .map(|&v| (v % modulus + modulus - shift) % modulus)
            .collect();
        PhaseVector { modulus, phases }
    }

    pub fn zero(modulus: u64, dim: usize) -> Self {
        PhaseVector {
            modulus,
            phases: vec![0; dim],
        }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn phases(&self) -> &[u64] {
        &self.phases
    }

    pub fn dim(&self) -> usize {
        self.phases.len()
    }

    pub fn is_zero(&self) -> bool {
        self.phases.iter().all(|&p| p == 0)
    }

    /// Coordinate-wise sum mod m (the group law of the eigenvariety).
    pub fn add(&self, other: &PhaseVector) -> PhaseVector {
        assert_eq!(self.modulus, other.modulus);
        assert_eq!(self.dim(), other.dim());
        let phases = self
            .phases
            .iter()
            .zip(&other.phases)
            .map(|(a, b)| (a + b) % self.modulus)
            .collect();
        PhaseVector {
            modulus: self.modulus,
            phases,
        }
    }

    pub fn neg(&self) -> PhaseVector {
        let m = self.modulus;
        PhaseVector {
            modulus: m,
            phases: self.phases.iter().map(|&p| (m - p) % m).collect(),
        }
    }
}

impl fmt::Debug for PhaseVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PhaseVector(mod {}, {:?})", self.modulus, self.phases)
    }
}

/// The computed structure of the projective eigenvariety at the spectral
/// radius.
#[derive(Clone, Debug)]
pub struct EigenvarietyStructure {
    modulus: u64,
    dim: usize,
    zm_divisors: Vec<u64>,
    unit_divisor_count: usize,
    free_rank: usize,
    stabilizing_index: BigUint,
    stabilizing_dimension: u64,
    generators: Vec<(PhaseVector, u64)>,
}

impl EigenvarietyStructure {
    /// The tensor order, which is the modulus of the phase module.
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Invariant divisors over `Z_m` strictly between 1 and m, ascending.
    pub fn zm_divisors(&self) -> &[u64] {
        &self.zm_divisors
    }

    /// Number of unit invariant divisors of the incidence matrix over `Z_m`.
    pub fn unit_divisor_count(&self) -> usize {
        self.unit_divisor_count
    }

    /// Number of free `Z_m` summands of the phase module.
    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    /// The stabilizing index: the number of projective eigenvectors at the
    /// spectral radius.
    pub fn stabilizing_index(&self) -> &BigUint {
        &self.stabilizing_index
    }

    /// The stabilizing dimension: the composition length of the phase module.
    pub fn stabilizing_dimension(&self) -> u64 {
        self.stabilizing_dimension
    }

    /// Independent generators with their orders; the orders multiply to the
    /// stabilizing index and distinct coefficient tuples give distinct
    /// phase vectors.
    pub fn generators(&self) -> &[(PhaseVector, u64)] {
        &self.generators
    }

    /// Whether the only projective eigenvector is the Perron vector.
    pub fn is_trivial(&self) -> bool {
        self.stabilizing_index.is_one()
    }

    /// Renders the module as a direct sum of cyclic groups, e.g.
    /// `Z_2 ⊕ Z_2 ⊕ Z_12 ⊕ Z_12`, or `0` for the trivial module.
    pub fn decomposition_string(&self) -> String {
        let mut parts: Vec<String> = self.zm_divisors.iter().map(|d| format!("Z_{d}")).collect();
        parts.extend((0..self.free_rank).map(|_| format!("Z_{}", self.modulus)));
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" ⊕ ")
        }
    }
}

/// Computes the full eigenvariety structure of a support.
///
/// The divisors, stabilizing index and dimension come from the Smith normal
/// form of the incidence matrix; the generators come from the homogeneous
/// system augmented with the normalization row `x_1 ≡ 0`, which realizes the
/// quotient by the all-ones line directly as a solution module.
pub fn analyze(a: &SymTensorSupport) -> Result<EigenvarietyStructure, EigenError> {
    if !a.is_weakly_irreducible() {
        return Err(EigenError::NotWeaklyIrreducible);
    }
    let m = a.order() as u64;
    let n = a.dim();
    let b = a.incidence_matrix();

    let snf = smith_normal_form(&b);
    let (divisors, _s0_free) = derive_modm_divisors(&snf, m, n);
    let unit_divisor_count = divisors.iter().filter(|&&d| d == 1).count();
    let zm_divisors: Vec<u64> = divisors.iter().copied().filter(|&d| d > 1).collect();
    let free_rank = n - 1 - divisors.len();

    let mut stabilizing_index = BigUint::from(m).pow(free_rank as u32);
    for &d in &zm_divisors {
        stabilizing_index *= BigUint::from(d);
    }
    let stabilizing_dimension = zm_divisors
        .iter()
        .map(|&d| composition_length(d))
        .sum::<u64>()
        + free_rank as u64 * composition_length(m);

    // Generators of the normalized solution module.
    let mut first_row = vec![BigInt::from(0); n];
    first_row[0] = BigInt::from(1);
    let augmented = b.with_extra_row(&first_row);
    let snf_aug = smith_normal_form(&augmented);
    let sol = solve_mod_with(&snf_aug, &vec![0; augmented.rows()], m);
    let generators: Vec<(PhaseVector, u64)> = sol
        .generators()
        .iter()
        .map(|(v, ord)| (PhaseVector::new(m, v.clone()), *ord))
        .collect();

    // The generator orders must reproduce the invariant-factor decomposition;
    // a mismatch would be an implementation bug, not a property of the input.
    let mut orders: Vec<u64> = generators.iter().map(|(_, o)| *o).collect();
    orders.sort_unstable();
    let mut expected: Vec<u64> = zm_divisors
        .iter()
        .copied()
        .chain(std::iter::repeat_n(m, free_rank))
        .collect();
    expected.sort_unstable();
    assert_eq!(
        orders, expected,
        "generator orders disagree with the divisor decomposition"
    );

    Ok(EigenvarietyStructure {
        modulus: m,
        dim: n,
        zm_divisors,
        unit_divisor_count,
        free_rank,
        stabilizing_index,
        stabilizing_dimension,
        generators,
    })
}

/// Default cap for [`enumerate_ps0`].
pub const DEFAULT_ENUMERATION_CAP: u64 = 1_000_000;

/// Enumerates all phase vectors of the normalized solution module, the zero
/// vector first. Errors when the stabilizing index exceeds `cap`
/// ([`DEFAULT_ENUMERATION_CAP`] is the conventional choice).
pub fn enumerate_ps0(es: &EigenvarietyStructure, cap: u64) -> Result<Vec<PhaseVector>, EigenError> {
    if *es.stabilizing_index() > BigUint::from(cap) {
        return Err(EigenError::CapExceeded {
            size: es.stabilizing_index().to_string(),
            cap,
        });
    }
    let m = es.modulus;
    let n = es.dim;
    let mut out = Vec::new();
    let gens = &es.generators;
    let mut counters = vec![0u64; gens.len()];
    loop {
        let mut x = vec![0u64; n];
        for (c, (g, _)) in counters.iter().zip(gens) {
            if *c == 0 {
                continue;
            }
            for (xi, gi) in x.iter_mut().zip(g.phases()) {
                *xi = (*xi + crate::linalg::mulmod(*c, *gi, m)) % m;
            }
        }
        out.push(PhaseVector::new(m, x));
        let mut i = 0;
        loop {
            if i == counters.len() {
                return Ok(out);
            }
            counters[i] += 1;
            if counters[i] < gens[i].1 {
                break;
            }
            counters[i] = 0;
            i += 1;
        }
    }
}

fn divisors_descending(m: u64) -> Vec<u64> {
    let mut out: Vec<u64> = (1..=m).filter(|d| m.is_multiple_of(*d)).collect();
    out.reverse();
    out
}

/// The cyclic index: the number of distinct eigenvalues on the spectral
/// circle, computed as the largest divisor `ell` of `m` for which the coset
/// system `B x ≡ (m/ell) * (1,...,1) (mod m)` is feasible.
pub fn cyclic_index(a: &SymTensorSupport) -> Result<u64, EigenError> {
    if !a.is_weakly_irreducible() {
        return Err(EigenError::NotWeaklyIrreducible);
    }
    let m = a.order() as u64;
    let b = a.incidence_matrix();
    let snf = smith_normal_form(&b);
    let rows = b.rows();
    for ell in divisors_descending(m) {
        let rhs = vec![(m / ell) % m; rows];
        if solve_mod_with(&snf, &rhs, m).is_feasible() {
            return Ok(ell);
        }
    }
    unreachable!("ell = 1 is always feasible");
}

/// A normalized particular solution of `B x ≡ (m j / ell) * (1,...,1)
/// (mod m)`, or `None` when that coset is empty.
pub fn coset_representative(
    a: &SymTensorSupport,
    ell: u64,
    j: u64,
) -> Result<Option<PhaseVector>, EigenError> {
    if !a.is_weakly_irreducible() {
        return Err(EigenError::NotWeaklyIrreducible);
    }
    let m = a.order() as u64;
    if ell == 0 || !m.is_multiple_of(ell) || j >= ell {
        return Err(EigenError::BadCosetParameters { m, ell, j });
    }
    let b = a.incidence_matrix();
    let rhs = vec![m / ell * j % m; b.rows()];
    let sol = solve_mod_with(&smith_normal_form(&b), &rhs, m);
    Ok(sol.particular().map(|x| PhaseVector::normalize(m, x)))
}

/// For an order-3 weakly irreducible support with nontrivial eigenvariety,
/// the vertex tripartition induced by any nonzero phase vector: parts are
/// the vertices of phase 0, 1, 2. All three parts are nonempty and every
/// entry is contained in one part or meets all three.
pub fn tripartition_3uniform(a: &SymTensorSupport) -> Result<Option<[Vec<usize>; 3]>, EigenError> {
    if a.order() != 3 {
        return Err(EigenError::NotThreeUniform(a.order()));
    }
    let es = analyze(a)?;
    if es.is_trivial() {
        return Ok(None);
    }
    // Any nonzero phase vector induces a valid tripartition; take the first
    // generator and canonicalize against its negation for a stable output.
    let gen = &es.generators[0].0;
    debug_assert!(!gen.is_zero());
    let neg = gen.neg();
    let phi = if neg.phases() < gen.phases() {
        &neg
    } else {
        gen
    };
    let mut parts: [Vec<usize>; 3] = [Vec::new(), Vec::new(), Vec::new()];
    for (k, &p) in phi.phases().iter().enumerate() {
        parts[p as usize].push(k + 1);
    }
    Ok(Some(parts))
}

/// The outcome of checking subpattern monotonicity between a support and one
/// of its subpatterns.
#[derive(Clone, Debug)]
pub struct SubpatternReport {
    pub s_super: BigUint,
    pub s_sub: BigUint,
    pub gamma_super: u64,
    pub gamma_sub: u64,
    pub index_divides: bool,
    pub dimension_monotone: bool,
    /// Element-wise inclusion of the superpattern's phase module in the
    /// subpattern's, verified when enumerable under the cap.
    pub inclusion_verified: Option<bool>,
}

impl SubpatternReport {
    pub fn all_hold(&self) -> bool {
        self.index_divides && self.dimension_monotone && self.inclusion_verified != Some(false)
    }
}

/// Checks that dropping entries can only enlarge the eigenvariety: the
/// superpattern's stabilizing index divides the subpattern's, its dimension
/// is no larger, and its phase module is contained in the subpattern's.
pub fn subpattern_monotonicity_check(
    a: &SymTensorSupport,
    sub: &SymTensorSupport,
    cap: u64,
) -> Result<SubpatternReport, EigenError> {
    match sub.is_subpattern_of(a) {
        Ok(true) => {}
        Ok(false) => return Err(EigenError::NotSubpattern),
        Err(_) => return Err(EigenError::ShapeMismatch),
    }
    let es_super = analyze(a)?;
    let es_sub = analyze(sub)?;

    let index_divides =
        (es_sub.stabilizing_index() % es_super.stabilizing_index()) == BigUint::from(0u32);
    let dimension_monotone = es_super.stabilizing_dimension() <= es_sub.stabilizing_dimension();

    let inclusion_verified = match enumerate_ps0(&es_super, cap) {
        Ok(points) => {
            let m = es_super.modulus();
            let b_sub = sub.incidence_matrix();
            Some(
                points
                    .iter()
                    .all(|phi| b_sub.mul_vec_mod(phi.phases(), m).iter().all(|&r| r == 0)),
            )
        }
        Err(_) => None,
    };

    Ok(SubpatternReport {
        s_super: es_super.stabilizing_index().clone(),
        s_sub: es_sub.stabilizing_index().clone(),
        gamma_super: es_super.stabilizing_dimension(),
        gamma_sub: es_sub.stabilizing_dimension(),
        index_divides,
        dimension_monotone,
        inclusion_verified,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tensor::SymTensorSupport;
    use num::BigRational;
    use std::collections::BTreeSet;

    fn unit_support(order: usize, dim: usize, tuples: Vec<Vec<usize>>) -> SymTensorSupport {
        SymTensorSupport::from_uniform_entries(order, dim, tuples, BigRational::one()).unwrap()
    }

    /// Order-12, 6-dimensional sample whose incidence matrix has the sliding
    /// window rows (3,3,3,1,1,1), (1,3,3,3,1,1), (1,1,3,3,3,1).
    fn window_tensor_m12() -> SymTensorSupport {
        unit_support(
            12,
            6,
            vec![
                vec![1, 1, 1, 2, 2, 2, 3, 3, 3, 4, 5, 6],
                vec![1, 2, 2, 2, 3, 3, 3, 4, 4, 4, 5, 6],
                vec![1, 2, 3, 3, 3, 4, 4, 4, 5, 5, 5, 6],
            ],
        )
    }

    /// 3-uniform tight cycle on six vertices: edges {i, i+1, i+2} cyclically.
    fn tight_cycle_6() -> SymTensorSupport {
        unit_support(
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
        )
    }

    fn complete_k43() -> SymTensorSupport {
        unit_support(
            3,
            4,
            vec![vec![1, 2, 3], vec![1, 2, 4], vec![1, 3, 4], vec![2, 3, 4]],
        )
    }

    #[test]
    fn analyze_window_tensor() {
        let es = analyze(&window_tensor_m12()).unwrap();
        assert_eq!(es.modulus(), 12);
        assert_eq!(es.zm_divisors(), &[2, 2]);
        assert_eq!(es.unit_divisor_count(), 1);
        assert_eq!(es.free_rank(), 2);
        assert_eq!(es.stabilizing_index(), &BigUint::from(576u32));
        assert_eq!(es.stabilizing_dimension(), 8);
        assert_eq!(es.decomposition_string(), "Z_2 ⊕ Z_2 ⊕ Z_12 ⊕ Z_12");
        let order_product: u64 = es.generators().iter().map(|(_, o)| o).product();
        assert_eq!(order_product, 576);
    }

    #[test]
    fn analyze_tight_cycle() {
        let es = analyze(&tight_cycle_6()).unwrap();
        assert_eq!(es.stabilizing_index(), &BigUint::from(3u32));
        assert_eq!(es.stabilizing_dimension(), 1);
        let points: BTreeSet<Vec<u64>> = enumerate_ps0(&es, 100)
            .unwrap()
            .into_iter()
            .map(|p| p.phases().to_vec())
            .collect();
        let expected: BTreeSet<Vec<u64>> = [
            vec![0, 0, 0, 0, 0, 0],
            vec![0, 1, 2, 0, 1, 2],
            vec![0, 2, 1, 0, 2, 1],
        ]
        .into_iter()
        .collect();
        assert_eq!(points, expected);
    }

    #[test]
    fn enumerate_starts_at_zero_and_respects_cap() {
        let es = analyze(&tight_cycle_6()).unwrap();
        let points = enumerate_ps0(&es, 10).unwrap();
        assert!(points[0].is_zero());
        assert_eq!(points.len(), 3);

        let big = analyze(&window_tensor_m12()).unwrap();
        assert!(matches!(
            enumerate_ps0(&big, 100),
            Err(EigenError::CapExceeded { .. })
        ));
    }

    #[test]
    fn complete_hypergraph_is_trivial() {
        let es = analyze(&complete_k43()).unwrap();
        assert!(es.is_trivial());
        assert_eq!(es.stabilizing_dimension(), 0);
        assert_eq!(es.decomposition_string(), "0");
        let points = enumerate_ps0(&es, 10).unwrap();
        assert_eq!(points.len(), 1);
        assert!(points[0].is_zero());
        assert_eq!(cyclic_index(&complete_k43()).unwrap(), 1);
    }

    #[test]
    fn cyclic_index_single_edge() {
        for m in [3usize, 4] {
            let a = unit_support(m, m, vec![(1..=m).collect()]);
            assert_eq!(cyclic_index(&a).unwrap(), m as u64);
        }
    }

    #[test]
    fn cyclic_index_tight_cycle() {
        assert_eq!(cyclic_index(&tight_cycle_6()).unwrap(), 3);
    }

    #[test]
    fn cyclic_index_of_wheels() {
        // every edge of a wheel contains the center exactly once, so the
        // phase vector (1, 0, ..., 0) solves B x = 1 (mod 3) and the full
        // spectral circle is realized for every rim size
        for n in [3usize, 4, 5] {
            let edges = (1..=n)
                .map(|i| {
                    let mut e = vec![1, 1 + i, 1 + (i % n) + 1];
                    e.sort_unstable();
                    e
                })
                .collect();
            let a = SymTensorSupport::from_uniform_entries(3, n + 1, edges, BigRational::one())
                .unwrap();
            assert_eq!(cyclic_index(&a).unwrap(), 3, "wheel({n})");
        }
    }

    #[test]
    fn cyclic_index_of_graphs_is_bipartiteness() {
        // for m = 2 the coset system B x = 1 (mod 2) asks for a proper
        // 2-coloring, so c = 2 exactly for bipartite graphs
        let cycle = |k: usize| {
            let edges = (1..=k)
                .map(|i| {
                    let mut e = vec![i, (i % k) + 1];
                    e.sort_unstable();
                    e
                })
                .collect();
            unit_support(2, k, edges)
        };
        assert_eq!(cyclic_index(&cycle(4)).unwrap(), 2);
        assert_eq!(cyclic_index(&cycle(6)).unwrap(), 2);
        assert_eq!(cyclic_index(&cycle(3)).unwrap(), 1);
        assert_eq!(cyclic_index(&cycle(5)).unwrap(), 1);
    }

    #[test]
    fn coset_representatives() {
        let a = unit_support(3, 3, vec![vec![1, 2, 3]]);
        // j = 0 is the homogeneous system: the zero representative.
        let rep0 = coset_representative(&a, 3, 0).unwrap().unwrap();
        assert!(rep0.is_zero());
        // j = 1: coordinate sum ≡ 1 (mod 3), first coordinate 0.
        let rep1 = coset_representative(&a, 3, 1).unwrap().unwrap();
        assert_eq!(rep1.phases()[0], 0);
        assert_eq!(rep1.phases().iter().sum::<u64>() % 3, 1);
        // the complete hypergraph has an empty coset
        assert!(coset_representative(&complete_k43(), 3, 1)
            .unwrap()
            .is_none());
        // parameter validation
        assert!(matches!(
            coset_representative(&a, 2, 0),
            Err(EigenError::BadCosetParameters { .. })
        ));
    }

    #[test]
    fn tripartition_of_tight_cycle() {
        let parts = tripartition_3uniform(&tight_cycle_6()).unwrap().unwrap();
        assert_eq!(parts[0], vec![1, 4]);
        assert_eq!(parts[1], vec![2, 5]);
        assert_eq!(parts[2], vec![3, 6]);
    }

    #[test]
    fn tripartition_absent_for_trivial_module() {
        assert!(tripartition_3uniform(&complete_k43()).unwrap().is_none());
        let err = tripartition_3uniform(&window_tensor_m12()).unwrap_err();
        assert!(matches!(err, EigenError::NotThreeUniform(12)));
    }

    #[test]
    fn subpattern_monotonicity() {
        let full = tight_cycle_6();
        // drop one entry, keeping weak irreducibility
        let sub = unit_support(
            3,
            6,
            vec![
                vec![1, 2, 3],
                vec![2, 3, 4],
                vec![3, 4, 5],
                vec![4, 5, 6],
                vec![1, 5, 6],
            ],
        );
        let report = subpattern_monotonicity_check(&full, &sub, 10_000).unwrap();
        assert!(report.all_hold());
        assert_eq!(report.inclusion_verified, Some(true));

        // reflexive case: equality
        let same = subpattern_monotonicity_check(&full, &full, 10_000).unwrap();
        assert!(same.all_hold());
        assert_eq!(same.s_super, same.s_sub);

        // not a subpattern
        assert!(matches!(
            subpattern_monotonicity_check(&sub, &full, 10_000),
            Err(EigenError::NotSubpattern)
        ));
    }

    #[test]
    fn rejects_weakly_reducible_input() {
        let disconnected = unit_support(3, 6, vec![vec![1, 2, 3], vec![4, 5, 6]]);
        assert!(matches!(
            analyze(&disconnected),
            Err(EigenError::NotWeaklyIrreducible)
        ));
    }

    #[test]
    fn ps0_group_closure() {
        let es = analyze(&tight_cycle_6()).unwrap();
        let points = enumerate_ps0(&es, 100).unwrap();
        let set: BTreeSet<Vec<u64>> = points.iter().map(|p| p.phases().to_vec()).collect();
        for a in &points {
            assert!(set.contains(a.neg().phases()));
            for b in &points {
                assert!(set.contains(a.add(b).phases()));
            }
        }
    }
}
