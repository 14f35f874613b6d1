//! Fraction-free elimination kernels on row-major dense storage.

use super::ring::ExactRing;

pub(crate) struct Reduced<T> {
    pub rank: usize,
    /// Leibniz determinant for square input, zero otherwise or when singular.
    pub det: T,
}

/// Bareiss elimination with column skipping. Every intermediate entry is a
/// minor of the input, so all divisions are exact. Returns `None` only when
/// the ring reports overflow.
pub(crate) fn eliminate<T: ExactRing>(rows: usize, cols: usize, mut a: Vec<T>, one: T) -> Option<Reduced<T>> {
    debug_assert_eq!(a.len(), rows * cols);
    let zero = one.zero_like();
    let mut prev = one.clone();
    let mut r = 0;
    let mut negated = false;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let pivot = (r..rows).filter(|&i| !a[i * cols + c].is_zero()).min_by_key(|&i| a[i * cols + c].weight());
        let Some(p) = pivot else { continue };
        if p != r {
            for j in 0..cols {
                a.swap(p * cols + j, r * cols + j);
            }
            negated = !negated;
        }
        for i in r + 1..rows {
            let lead = a[i * cols + c].clone();
            for j in c + 1..cols {
                let v = T::cross_div(&a[r * cols + c], &a[i * cols + j], &lead, &a[r * cols + j], &prev)?;
                a[i * cols + j] = v;
            }
            a[i * cols + c] = zero.clone();
        }
        prev = a[r * cols + c].clone();
        r += 1;
    }
    let det = if rows == cols && r == rows {
        if rows == 0 {
            one
        } else if negated {
            prev.neg()?
        } else {
            prev
        }
    } else {
        zero
    };
    Some(Reduced { rank: r, det })
}

pub(crate) struct Solved<T> {
    /// Common diagonal value after elimination (± the determinant).
    pub scale: T,
    /// `scale * A^{-1} B`, row-major `n x m`.
    pub scaled: Vec<T>,
}

/// Fraction-free Gauss-Jordan on `[A | B]` with `A` square `n x n` and `B`
/// `n x m`. Returns `Some(None)` when `A` is singular.
pub(crate) fn solve<T: ExactRing>(n: usize, a: &[T], m: usize, b: &[T], one: T) -> Option<Option<Solved<T>>> {
    let zero = one.zero_like();
    let w = n + m;
    let mut aug: Vec<T> = Vec::with_capacity(n * w);
    for i in 0..n {
        aug.extend_from_slice(&a[i * n..(i + 1) * n]);
        aug.extend_from_slice(&b[i * m..(i + 1) * m]);
    }
    let mut prev = one;
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !aug[i * w + k].is_zero()) else {
            return Some(None);
        };
        if p != k {
            for j in 0..w {
                aug.swap(p * w + j, k * w + j);
            }
        }
        for i in 0..n {
            if i == k {
                continue;
            }
            let lead = aug[i * w + k].clone();
            for j in 0..w {
                if j == k {
                    continue;
                }
                let v = T::cross_div(&aug[k * w + k], &aug[i * w + j], &lead, &aug[k * w + j], &prev)?;
                aug[i * w + j] = v;
            }
            aug[i * w + k] = zero.clone();
        }
        prev = aug[k * w + k].clone();
    }
    let mut scaled = Vec::with_capacity(n * m);
    for i in 0..n {
        scaled.extend_from_slice(&aug[i * w + n..(i + 1) * w]);
    }
    Some(Some(Solved { scale: prev, scaled }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn rank_with_skipped_column() {
        // second column is zero below the first pivot
        let a: Vec<i64> = vec![1, 2, 3, 0, 0, 4, 0, 0, 8];
        let r = eliminate(3, 3, a, 1).unwrap();
        assert_eq!(r.rank, 2);
        assert_eq!(r.det, 0);
    }

    #[test]
    fn determinant_sign_tracks_swaps() {
        let a: Vec<i64> = vec![0, 1, 1, 0];
        assert_eq!(eliminate(2, 2, a, 1).unwrap().det, -1);
    }

    #[test]
    fn i64_overflow_reported() {
        let big = i64::MAX / 2;
        let a: Vec<i64> = vec![big, 1, 1, big];
        assert!(eliminate(2, 2, a, 1).is_none());
        let b: Vec<BigInt> = vec![big.into(), 1.into(), 1.into(), big.into()];
        let det = eliminate(2, 2, b, BigInt::from(1)).unwrap().det;
        assert_eq!(det, BigInt::from(big) * BigInt::from(big) - 1);
    }

    #[test]
    fn gauss_jordan_solves() {
        // A = [[2,1],[1,3]], B = [[3],[5]] -> x = (4/5, 7/5)
        let a: Vec<i64> = vec![2, 1, 1, 3];
        let b: Vec<i64> = vec![3, 5];
        let s = solve(2, &a, 1, &b, 1).unwrap().unwrap();
        assert_eq!(s.scale, 5);
        assert_eq!(s.scaled, vec![4, 7]);
        let sing: Vec<i64> = vec![1, 2, 2, 4];
        assert!(solve(2, &sing, 1, &b, 1).unwrap().is_none());
    }
}
