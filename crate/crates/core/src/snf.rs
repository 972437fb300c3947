//! Smith normal form of integer matrices.
//!
//! Diagonalization by unimodular row/column operations, with the pivot chosen
//! as the smallest-absolute-value nonzero entry to limit coefficient growth.
//! Arithmetic runs on `i64` with overflow checks and escalates to
//! arbitrary-precision integers when a checked operation fails, so results
//! are always exact.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Diagonal of the Smith normal form: nonnegative, each entry dividing the
/// next, trailing zeros trimmed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithDiagonal(pub Vec<BigInt>);

impl SmithDiagonal {
    pub fn rank(&self) -> usize {
        self.0.iter().filter(|d| !Zero::is_zero(*d)).count()
    }

    /// Elementary divisors larger than one.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.0
            .iter()
            .filter(|d| !Zero::is_zero(*d) && !d.is_one())
            .cloned()
            .collect()
    }
}

trait SnfInt: Sized + Clone + PartialEq {
    fn is_zero(&self) -> bool;
    fn checked_sub_mul(&self, q: &Self, x: &Self) -> Option<Self>; // self - q * x
    fn checked_add_other(&self, other: &Self) -> Option<Self>;
    fn div_trunc(&self, other: &Self) -> Self;
    fn rem_trunc(&self, other: &Self) -> Self;
    fn abs_lt(&self, other: &Self) -> bool;
    fn to_bigint_abs(&self) -> BigInt;
}

impl SnfInt for i64 {
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn checked_sub_mul(&self, q: &Self, x: &Self) -> Option<Self> {
        q.checked_mul(*x).and_then(|p| self.checked_sub(p))
    }
    fn checked_add_other(&self, other: &Self) -> Option<Self> {
        self.checked_add(*other)
    }
    fn div_trunc(&self, other: &Self) -> Self {
        self / other
    }
    fn rem_trunc(&self, other: &Self) -> Self {
        self % other
    }
    fn abs_lt(&self, other: &Self) -> bool {
        self.unsigned_abs() < other.unsigned_abs()
    }
    fn to_bigint_abs(&self) -> BigInt {
        BigInt::from(self.unsigned_abs())
    }
}

impl SnfInt for BigInt {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn checked_sub_mul(&self, q: &Self, x: &Self) -> Option<Self> {
        Some(self - q * x)
    }
    fn checked_add_other(&self, other: &Self) -> Option<Self> {
        Some(self + other)
    }
    fn div_trunc(&self, other: &Self) -> Self {
        self / other
    }
    fn rem_trunc(&self, other: &Self) -> Self {
        self % other
    }
    fn abs_lt(&self, other: &Self) -> bool {
        self.abs() < other.abs()
    }
    fn to_bigint_abs(&self) -> BigInt {
        self.abs()
    }
}

/// Smith normal form of a dense matrix with `i8` entries (boundary matrices
/// have entries in `{-1, 0, 1}`). Escalates to big integers on overflow.
pub fn smith_normal_form(rows: usize, cols: usize, entries: &[i8]) -> SmithDiagonal {
    debug_assert_eq!(entries.len(), rows * cols);
    let small: Vec<i64> = entries.iter().map(|&x| x as i64).collect();
    if let Some(d) = snf_generic(rows, cols, small) {
        return SmithDiagonal(d);
    }
    let big: Vec<BigInt> = entries.iter().map(|&x| BigInt::from(x)).collect();
    SmithDiagonal(snf_generic(rows, cols, big).expect("bigint arithmetic cannot overflow"))
}

fn snf_generic<T: SnfInt>(rows: usize, cols: usize, mut a: Vec<T>) -> Option<Vec<BigInt>> {
    let idx = |i: usize, j: usize| i * cols + j;
    let n = rows.min(cols);
    let mut t = 0usize;
    'outer: while t < n {
        // smallest |nonzero| entry of the trailing submatrix
        let mut pivot: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if !a[idx(i, j)].is_zero()
                    && pivot.is_none_or(|(pi, pj)| a[idx(i, j)].abs_lt(&a[idx(pi, pj)]))
                {
                    pivot = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = pivot else {
            break 'outer;
        };
        if pi != t {
            for j in 0..cols {
                a.swap(idx(t, j), idx(pi, j));
            }
        }
        if pj != t {
            for i in 0..rows {
                a.swap(idx(i, t), idx(i, pj));
            }
        }

        // clear row and column t; remainders become the next pivot
        let mut clean = true;
        for i in t + 1..rows {
            if a[idx(i, t)].is_zero() {
                continue;
            }
            let q = a[idx(i, t)].div_trunc(&a[idx(t, t)]);
            for j in t..cols {
                a[idx(i, j)] = a[idx(i, j)].checked_sub_mul(&q, &a[idx(t, j)])?;
            }
            if !a[idx(i, t)].is_zero() {
                clean = false;
            }
        }
        for j in t + 1..cols {
            if a[idx(t, j)].is_zero() {
                continue;
            }
            let q = a[idx(t, j)].div_trunc(&a[idx(t, t)]);
            for i in t..rows {
                a[idx(i, j)] = a[idx(i, j)].checked_sub_mul(&q, &a[idx(i, t)])?;
            }
            if !a[idx(t, j)].is_zero() {
                clean = false;
            }
        }
        if !clean {
            continue 'outer;
        }

        // enforce the divisibility chain
        for i in t + 1..rows {
            for j in t + 1..cols {
                if !a[idx(i, j)].rem_trunc(&a[idx(t, t)]).is_zero() {
                    for jj in t..cols {
                        a[idx(t, jj)] = a[idx(t, jj)].checked_add_other(&a[idx(i, jj)])?;
                    }
                    continue 'outer;
                }
            }
        }
        t += 1;
    }

    let mut diag: Vec<BigInt> = (0..n).map(|i| a[idx(i, i)].to_bigint_abs()).collect();
    while diag.last().is_some_and(Zero::is_zero) {
        diag.pop();
    }
    Some(diag)
}
