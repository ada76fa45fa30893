//! Integer Smith normal form with unimodular transforms.
//!
//! `P * B * Q = diag(s_1, ..., s_r, 0, ...)` with `det P = ±1`, `det Q = ±1`
//! and `s_i | s_{i+1}`. Elimination pivots on the smallest nonzero entry of
//! the remaining submatrix (ties broken by lowest `(row, col)`), with
//! nearest-integer quotients; both choices keep intermediate entries small
//! and make the transforms deterministic.

use crate::matrix::IntMatrix;
use num::{bigint::Sign, BigInt, Integer, Signed, ToPrimitive, Zero};

/// The result of diagonalizing an integer matrix.
#[derive(Clone, Debug)]
pub struct SmithDecomposition {
    p: IntMatrix,
    q: IntMatrix,
    diagonal: Vec<BigInt>,
    rows: usize,
    cols: usize,
}

impl SmithDecomposition {
    /// Left transform, `rows x rows`, unimodular.
    pub fn p(&self) -> &IntMatrix {
        &self.p
    }

    /// Right transform, `cols x cols`, unimodular.
    pub fn q(&self) -> &IntMatrix {
        &self.q
    }

    /// The positive invariant factors `s_1 | s_2 | ... | s_r`.
    pub fn diagonal(&self) -> &[BigInt] {
        &self.diagonal
    }

    pub fn rank(&self) -> usize {
        self.diagonal.len()
    }

    /// The full `rows x cols` diagonal matrix (for verification).
    pub fn diagonal_matrix(&self) -> IntMatrix {
        let mut d = IntMatrix::zero(self.rows, self.cols);
        for (i, s) in self.diagonal.iter().enumerate() {
            d.set(i, i, s.clone());
        }
        d
    }
}

/// Nearest-integer quotient; the remainder `a - q*b` satisfies `|r| <= |b|/2`.
fn div_round(a: &BigInt, b: &BigInt) -> BigInt {
    let (mut q, r) = a.div_rem(b);
    if r.abs() * 2 > b.abs() {
        if (a.sign() == Sign::Minus) == (b.sign() == Sign::Minus) {
            q += 1;
        } else {
            q -= 1;
        }
    }
    q
}

/// Smallest-|entry| pivot in the trailing submatrix starting at `(k, k)`.
fn select_pivot(m: &IntMatrix, k: usize) -> Option<(usize, usize)> {
    let mut best: Option<(BigInt, usize, usize)> = None;
    for i in k..m.rows() {
        for j in k..m.cols() {
            let v = m.get(i, j);
            if v.is_zero() {
                continue;
            }
            let a = v.abs();
            match &best {
                Some((cur, _, _)) if *cur <= a => {}
                _ => best = Some((a, i, j)),
            }
        }
    }
    best.map(|(_, i, j)| (i, j))
}

/// Computes the Smith normal form of `b` over the integers.
///
/// The zero matrix is allowed and yields rank 0 with identity transforms.
pub fn smith_normal_form(b: &IntMatrix) -> SmithDecomposition {
    let rows = b.rows();
    let cols = b.cols();
    let mut m = b.clone();
    let mut p = IntMatrix::identity(rows);
    let mut q = IntMatrix::identity(cols);

    let mut k = 0;
    while k < rows.min(cols) {
        // Place a pivot and shrink it until it cleanly divides its row,
        // column, and the whole trailing submatrix.
        'reduce: while let Some((pi, pj)) = select_pivot(&m, k) {
            if pi != k {
                m.swap_rows(k, pi);
                p.swap_rows(k, pi);
            }
            if pj != k {
                m.swap_cols(k, pj);
                q.swap_cols(k, pj);
            }

            let mut clean = true;
            for i in k + 1..rows {
                if m.get(i, k).is_zero() {
                    continue;
                }
                let c = -div_round(m.get(i, k), m.get(k, k));
                if !c.is_zero() {
                    m.row_axpy(i, k, &c);
                    p.row_axpy(i, k, &c);
                }
                if !m.get(i, k).is_zero() {
                    clean = false;
                }
            }
            for j in k + 1..cols {
                if m.get(k, j).is_zero() {
                    continue;
                }
                let c = -div_round(m.get(k, j), m.get(k, k));
                if !c.is_zero() {
                    m.col_axpy(j, k, &c);
                    q.col_axpy(j, k, &c);
                }
                if !m.get(k, j).is_zero() {
                    clean = false;
                }
            }
            if !clean {
                // Leftover remainders are smaller than the pivot; re-pivot.
                continue 'reduce;
            }

            // Divisibility sweep: pull a non-divisible entry into row k.
            let pivot = m.get(k, k).clone();
            let offender = (k + 1..rows).find_map(|i| {
                (k + 1..cols)
                    .find(|&j| !(m.get(i, j) % &pivot).is_zero())
                    .map(|j| (i, j))
            });
            if let Some((i, _)) = offender {
                let one = BigInt::from(1);
                m.row_axpy(k, i, &one);
                p.row_axpy(k, i, &one);
                continue 'reduce;
            }
            break;
        }

        if m.get(k, k).is_zero() {
            break;
        }
        if m.get(k, k).is_negative() {
            m.negate_row(k);
            p.negate_row(k);
        }
        k += 1;
    }

    let diagonal: Vec<BigInt> = (0..k).map(|i| m.get(i, i).clone()).collect();
    debug_assert!(diagonal.windows(2).all(|w| (&w[1] % &w[0]).is_zero()));

    SmithDecomposition {
        p,
        q,
        diagonal,
        rows,
        cols,
    }
}

/// Maps the integer invariant factors to the diagonal form over `Z_m`.
///
/// Each `d_i = gcd(s_i, m)` divides `m`; those equal to `m` act as zero
/// columns over `Z_m` and are dropped. Returns the surviving divisors
/// (divisibility-ordered, units included) and the number of free `Z_m`
/// coordinates of the homogeneous solution module, `n` minus the count of
/// surviving divisors.
pub fn derive_modm_divisors(snf: &SmithDecomposition, m: u64, n: usize) -> (Vec<u64>, usize) {
    assert!(m >= 2, "modulus must be at least 2");
    assert_eq!(n, snf.cols, "n must match the decomposed matrix");
    let mb = BigInt::from(m);
    let mut divisors = Vec::new();
    for s in &snf.diagonal {
        let d = s.gcd(&mb).to_u64().expect("divisor of m fits in u64");
        if d < m {
            divisors.push(d);
        }
    }
    debug_assert!(divisors.windows(2).all(|w| w[1] % w[0] == 0));
    let free_rank = n - divisors.len();
    (divisors, free_rank)
}
