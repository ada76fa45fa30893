//! Linear congruence systems `B x ≡ b (mod m)` solved through the integer
//! Smith normal form, plus an exhaustive oracle for small instances.

use super::snf::{smith_normal_form, SmithDecomposition};
use crate::matrix::{bigint_mod_u64, IntMatrix};
use num::{BigInt, BigUint, Integer, One, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolveError {
    #[error("right-hand side has length {found}, expected {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("enumeration of {size} states exceeds cap {cap}")]
    CapExceeded { size: String, cap: u64 },
}

/// The solution set of `B x ≡ b (mod m)` in parametric form.
///
/// Every solution is `particular + Σ c_i g_i (mod m)` with `0 <= c_i <
/// order_i`, and distinct coefficient tuples give distinct vectors, so the
/// set has exactly `Π order_i` elements when feasible.
#[derive(Clone, Debug)]
pub struct ModSolutionSet {
    modulus: u64,
    dim: usize,
    particular: Option<Vec<u64>>,
    generators: Vec<(Vec<u64>, u64)>,
}

impl ModSolutionSet {
    fn infeasible(modulus: u64, dim: usize) -> Self {
        ModSolutionSet {
            modulus,
            dim,
            particular: None,
            generators: Vec::new(),
        }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_feasible(&self) -> bool {
        self.particular.is_some()
    }

    pub fn particular(&self) -> Option<&[u64]> {
        self.particular.as_deref()
    }

    /// Generators with their orders; each order divides the modulus.
    pub fn generators(&self) -> &[(Vec<u64>, u64)] {
        &self.generators
    }

    /// Number of solutions (zero when infeasible).
    pub fn solution_count(&self) -> BigUint {
        if !self.is_feasible() {
            return BigUint::zero();
        }
        self.generators
            .iter()
            .fold(BigUint::one(), |acc, (_, ord)| acc * BigUint::from(*ord))
    }

    /// Enumerates every solution, starting from the particular one.
    pub fn iter(&self) -> SolutionIter<'_> {
        SolutionIter {
            set: self,
            counters: vec![0; self.generators.len()],
            done: !self.is_feasible(),
        }
    }
}

pub struct SolutionIter<'a> {
    set: &'a ModSolutionSet,
    counters: Vec<u64>,
    done: bool,
}

impl Iterator for SolutionIter<'_> {
    type Item = Vec<u64>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        let m = self.set.modulus;
        let mut x = self.set.particular.clone().expect("feasible");
        for (c, (g, _)) in self.counters.iter().zip(&self.set.generators) {
            if *c == 0 {
                continue;
            }
            for (xi, gi) in x.iter_mut().zip(g) {
                *xi = (*xi + mulmod(c % m, *gi, m)) % m;
            }
        }
        // odometer over the coefficient ranges
        let mut i = 0;
        loop {
            if i == self.counters.len() {
                self.done = true;
                break;
            }
            self.counters[i] += 1;
            if self.counters[i] < self.set.generators[i].1 {
                break;
            }
            self.counters[i] = 0;
            i += 1;
        }
        Some(x)
    }
}

#[inline]
pub(crate) fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    (a as u128 * b as u128 % m as u128) as u64
}

fn mod_inverse(a: u64, modulus: u64) -> u64 {
    if modulus == 1 {
        return 0;
    }
    let (mut t, mut new_t): (i128, i128) = (0, 1);
    let (mut r, mut new_r): (i128, i128) = (modulus as i128, (a % modulus) as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    assert_eq!(r, 1, "{a} not invertible mod {modulus}");
    t.rem_euclid(modulus as i128) as u64
}

/// Solves `B x ≡ b (mod m)` exactly.
///
/// Substituting `x = Q z` turns the system into the diagonal one
/// `s_i z_i ≡ (P b)_i`: each diagonal coordinate is feasible iff
/// `gcd(s_i, m)` divides the right-hand side, contributes a generator of
/// order `gcd(s_i, m)` when that gcd exceeds 1, and the coordinates past the
/// rank contribute free generators of order `m`.
pub fn solve_mod(b: &IntMatrix, rhs: &[u64], m: u64) -> Result<ModSolutionSet, SolveError> {
    assert!(m >= 2, "modulus must be at least 2");
    if rhs.len() != b.rows() {
        return Err(SolveError::DimensionMismatch {
            expected: b.rows(),
            found: rhs.len(),
        });
    }
    let snf = smith_normal_form(b);
    Ok(solve_mod_with(&snf, rhs, m))
}

/// Same as [`solve_mod`] but reuses an existing decomposition.
pub fn solve_mod_with(snf: &SmithDecomposition, rhs: &[u64], m: u64) -> ModSolutionSet {
    let n = snf.q().rows();
    let rows = snf.p().rows();
    let r = snf.rank();
    let mb = BigInt::from(m);

    // c = P b (mod m)
    let c: Vec<u64> = (0..rows)
        .map(|i| {
            let acc = snf
                .p()
                .row(i)
                .iter()
                .zip(rhs)
                .fold(BigInt::zero(), |acc, (p, &b)| acc + p * BigInt::from(b));
            bigint_mod_u64(&acc, &mb)
        })
        .collect();

    // feasibility and the diagonal particular solution
    let mut z0 = vec![0u64; n];
    let mut orders = Vec::new();
    for i in 0..rows.max(n) {
        if i < r {
            let s = &snf.diagonal()[i];
            let g = s.gcd(&mb).to_u64().expect("gcd fits u64");
            if !c[i].is_multiple_of(g) {
                return ModSolutionSet::infeasible(m, n);
            }
            let m_red = m / g;
            if m_red > 1 {
                let s_red = bigint_mod_u64(&(s / BigInt::from(g)), &BigInt::from(m_red));
                z0[i] = mulmod((c[i] / g) % m_red, mod_inverse(s_red, m_red), m_red);
            }
            if g > 1 {
                orders.push((i, g));
            }
        } else if i < rows && c[i] != 0 {
            return ModSolutionSet::infeasible(m, n);
        }
    }

    let q_col_mod = |j: usize| -> Vec<u64> {
        (0..n)
            .map(|i| bigint_mod_u64(snf.q().get(i, j), &mb))
            .collect()
    };

    let particular = {
        let mut x = vec![0u64; n];
        for (j, &z) in z0.iter().enumerate() {
            if z == 0 {
                continue;
            }
            let col = q_col_mod(j);
            for (xi, qi) in x.iter_mut().zip(col) {
                *xi = (*xi + mulmod(z, qi, m)) % m;
            }
        }
        x
    };

    let mut generators = Vec::new();
    for (i, g) in orders {
        let scale = m / g;
        let col = q_col_mod(i);
        let vec: Vec<u64> = col.into_iter().map(|v| mulmod(v, scale, m)).collect();
        generators.push((vec, g));
    }
    for j in r..n {
        generators.push((q_col_mod(j), m));
    }

    ModSolutionSet {
        modulus: m,
        dim: n,
        particular: Some(particular),
        generators,
    }
}

/// Default state cap for [`brute_force_solve_mod`].
pub const DEFAULT_BRUTE_FORCE_CAP: u64 = 10_000_000;

/// Exhaustively enumerates `Z_m^n` and returns every solution of
/// `B x ≡ b (mod m)`. Errors if `m^n` exceeds `cap`
/// ([`DEFAULT_BRUTE_FORCE_CAP`] is the conventional choice).
pub fn brute_force_solve_mod(
    b: &IntMatrix,
    rhs: &[u64],
    m: u64,
    cap: u64,
) -> Result<Vec<Vec<u64>>, SolveError> {
    assert!(m >= 2, "modulus must be at least 2");
    if rhs.len() != b.rows() {
        return Err(SolveError::DimensionMismatch {
            expected: b.rows(),
            found: rhs.len(),
        });
    }
    let n = b.cols();
    let total = BigUint::from(m).pow(n as u32);
    if total > BigUint::from(cap) {
        return Err(SolveError::CapExceeded {
            size: total.to_string(),
            cap,
        });
    }

    // reduce the matrix once
    let reduced: Vec<Vec<u64>> = (0..b.rows())
        .map(|i| {
            (0..n)
                .map(|j| bigint_mod_u64(b.get(i, j), &BigInt::from(m)))
                .collect()
        })
        .collect();

    let mut out = Vec::new();
    let mut x = vec![0u64; n];
    loop {
        let ok = reduced.iter().zip(rhs).all(|(row, &want)| {
            row.iter()
                .zip(&x)
                .fold(0u64, |acc, (a, b)| (acc + mulmod(*a, *b, m)) % m)
                == want
        });
        if ok {
            out.push(x.clone());
        }
        let mut i = 0;
        loop {
            if i == n {
                return Ok(out);
            }
            x[i] += 1;
            if x[i] < m {
                break;
            }
            x[i] = 0;
            i += 1;
        }
    }
}

/// Number of prime factors counted with multiplicity; `composition_length(1) = 0`.
pub fn composition_length(d: u64) -> u64 {
    assert!(d >= 1);
    let mut d = d;
    let mut count = 0;
    let mut p = 2;
    while p * p <= d {
        while d.is_multiple_of(p) {
            d /= p;
            count += 1;
        }
        p += 1;
    }
    if d > 1 {
        count += 1;
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn solutions_as_set(s: &ModSolutionSet) -> BTreeSet<Vec<u64>> {
        s.iter().collect()
    }

    #[test]
    fn composition_length_values() {
        assert_eq!(composition_length(1), 0);
        assert_eq!(composition_length(2), 1);
        assert_eq!(composition_length(12), 3);
        assert_eq!(composition_length(97), 1);
        assert_eq!(composition_length(360), 6);
    }

    #[test]
    fn single_row_all_ones() {
        // sum x_i ≡ 0 (mod m) has m^{m-1} solutions
        let m = 3u64;
        let b = IntMatrix::from_rows(&[vec![1, 1, 1]]);
        let s = solve_mod(&b, &[0], m).unwrap();
        assert!(s.is_feasible());
        assert_eq!(s.solution_count(), BigUint::from(9u32));
        let brute = brute_force_solve_mod(&b, &[0], m, 1000).unwrap();
        assert_eq!(brute.len(), 9);
        assert_eq!(
            solutions_as_set(&s),
            brute.into_iter().collect::<BTreeSet<_>>()
        );
    }

    #[test]
    fn infeasible_even_times_x() {
        // 2x ≡ 1 (mod 4) has no solution
        let b = IntMatrix::from_rows(&[vec![2]]);
        let s = solve_mod(&b, &[1], 4).unwrap();
        assert!(!s.is_feasible());
        assert_eq!(s.solution_count(), BigUint::zero());
        let brute = brute_force_solve_mod(&b, &[1], 4, 100).unwrap();
        assert!(brute.is_empty());
    }

    #[test]
    fn zero_matrix_all_solutions() {
        let b = IntMatrix::zero(1, 2);
        let brute = brute_force_solve_mod(&b, &[0], 2, 100).unwrap();
        assert_eq!(brute.len(), 4);
        let s = solve_mod(&b, &[0], 2).unwrap();
        assert_eq!(s.solution_count(), BigUint::from(4u32));
        assert_eq!(
            solutions_as_set(&s),
            brute.into_iter().collect::<BTreeSet<_>>()
        );
    }

    #[test]
    fn inhomogeneous_particular_solution() {
        let b = IntMatrix::from_rows(&[vec![1, 1, 1], vec![0, 2, 4]]);
        let m = 6;
        for rhs in [[0u64, 0], [1, 2], [5, 4], [3, 3]] {
            let s = solve_mod(&b, &rhs, m).unwrap();
            let brute = brute_force_solve_mod(&b, &rhs, m, 1_000_000).unwrap();
            assert_eq!(
                s.solution_count(),
                BigUint::from(brute.len()),
                "count mismatch for rhs {rhs:?}"
            );
            assert_eq!(
                solutions_as_set(&s),
                brute.into_iter().collect::<BTreeSet<_>>(),
                "set mismatch for rhs {rhs:?}"
            );
        }
    }

    #[test]
    fn window_matrix_solution_count() {
        // rows (3,3,3,1,1,1), (1,3,3,3,1,1), (1,1,3,3,3,1) over Z_12:
        // 12^3 * (1*2*2) homogeneous solutions
        let b = IntMatrix::from_rows(&[
            vec![3, 3, 3, 1, 1, 1],
            vec![1, 3, 3, 3, 1, 1],
            vec![1, 1, 3, 3, 3, 1],
        ]);
        let s = solve_mod(&b, &[0, 0, 0], 12).unwrap();
        assert_eq!(s.solution_count(), BigUint::from(6912u32));
    }

    #[test]
    fn all_ones_rhs_can_be_infeasible() {
        // complete 3-uniform incidence on 4 vertices: x_i + x_j + x_k = 1
        // (mod 3) over all triples forces all coordinates equal, but then
        // 3x = 0 != 1
        let b = IntMatrix::from_rows(&[
            vec![1, 1, 1, 0],
            vec![1, 1, 0, 1],
            vec![1, 0, 1, 1],
            vec![0, 1, 1, 1],
        ]);
        let s = solve_mod(&b, &[1, 1, 1, 1], 3).unwrap();
        assert!(!s.is_feasible());
    }

    #[test]
    fn cap_is_enforced() {
        let b = IntMatrix::zero(1, 10);
        let err = brute_force_solve_mod(&b, &[0], 10, 1_000_000).unwrap_err();
        assert!(matches!(err, SolveError::CapExceeded { .. }));
    }

    #[test]
    fn mod_inverse_small() {
        for m in 2..30u64 {
            for a in 1..m {
                if num::integer::gcd(a, m) == 1 {
                    assert_eq!(a * mod_inverse(a, m) % m, 1 % m);
                }
            }
        }
    }
}
