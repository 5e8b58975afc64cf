//! Exact rank of sparse integer matrices over the rationals.
//!
//! Fraction-free elimination: a row is reduced against a stored pivot row by
//! `p_lead * row - row_lead * pivot`, then divided by the gcd of its entries.
//! The fast path runs in `i128` with checked arithmetic; any overflow restarts
//! the computation over `BigInt`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{CheckedMul, CheckedSub, Signed};

/// Sparse row: `(column, value)` with strictly increasing columns and no zeros.
pub type SparseRow = Vec<(usize, i64)>;

trait Scalar: Clone + Integer + Signed + CheckedMul + CheckedSub {}
impl<T: Clone + Integer + Signed + CheckedMul + CheckedSub> Scalar for T {}

fn combine<T: Scalar>(a: &T, row: &[(usize, T)], b: &T, pivot: &[(usize, T)]) -> Option<Vec<(usize, T)>> {
    // a * row - b * pivot, dropping zeros.
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < pivot.len() {
        let ci = row.get(i).map_or(usize::MAX, |e| e.0);
        let cj = pivot.get(j).map_or(usize::MAX, |e| e.0);
        let (col, v) = if ci < cj {
            i += 1;
            (ci, a.checked_mul(&row[i - 1].1)?)
        } else if cj < ci {
            j += 1;
            (cj, T::zero().checked_sub(&b.checked_mul(&pivot[j - 1].1)?)?)
        } else {
            i += 1;
            j += 1;
            let x = a.checked_mul(&row[i - 1].1)?;
            let y = b.checked_mul(&pivot[j - 1].1)?;
            (ci, x.checked_sub(&y)?)
        };
        if !v.is_zero() {
            out.push((col, v));
        }
    }
    Some(out)
}

fn normalize<T: Scalar>(row: &mut [(usize, T)]) {
    let Some(first) = row.first() else { return };
    let mut g = first.1.abs();
    for e in row.iter().skip(1) {
        g = g.gcd(&e.1);
        if g.is_one() {
            break;
        }
    }
    let flip = row[0].1.is_negative();
    if !g.is_one() || flip {
        for e in row.iter_mut() {
            e.1 = e.1.div_floor(&g);
            if flip {
                e.1 = -e.1.clone();
            }
        }
    }
}

fn rank_in<T: Scalar>(rows: &[SparseRow], ncols: usize, lift: impl Fn(i64) -> T) -> Option<usize> {
    let mut pivots: Vec<Option<Vec<(usize, T)>>> = vec![None; ncols];
    let mut rank = 0;
    for r in rows {
        let mut row: Vec<(usize, T)> = r.iter().filter(|e| e.1 != 0).map(|&(c, v)| (c, lift(v))).collect();
        normalize(&mut row);
        loop {
            let Some(&(lead, ref a)) = row.first() else { break };
            match &pivots[lead] {
                Some(p) => {
                    let pa = p[0].1.clone();
                    let a = a.clone();
                    row = combine(&pa, &row, &a, p)?;
                    normalize(&mut row);
                }
                None => {
                    pivots[lead] = Some(row);
                    rank += 1;
                    break;
                }
            }
        }
    }
    Some(rank)
}

/// Rank over ℚ of the matrix whose rows are given sparsely.
pub fn rank(rows: &[SparseRow], ncols: usize) -> usize {
    if let Some(r) = rank_in::<i128>(rows, ncols, i128::from) {
        return r;
    }
    rank_in::<BigInt>(rows, ncols, BigInt::from).expect("BigInt arithmetic does not overflow")
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;
    use proptest::prelude::*;

    fn dense(m: &[Vec<i64>]) -> Vec<SparseRow> {
        m.iter()
            .map(|r| r.iter().enumerate().filter(|e| *e.1 != 0).map(|(c, &v)| (c, v)).collect())
            .collect()
    }

    /// Textbook elimination over exact rationals; independent of the sparse path.
    fn rational_rank(m: &[Vec<i64>]) -> usize {
        use num_rational::BigRational;
        let mut a: Vec<Vec<BigRational>> =
            m.iter().map(|r| r.iter().map(|&v| BigRational::from_integer(v.into())).collect()).collect();
        let ncols = a.first().map_or(0, Vec::len);
        let mut rank = 0;
        for c in 0..ncols {
            let Some(p) = (rank..a.len()).find(|&i| !a[i][c].is_zero()) else { continue };
            a.swap(rank, p);
            for i in 0..a.len() {
                if i != rank && !a[i][c].is_zero() {
                    let f = &a[i][c] / &a[rank][c];
                    for k in 0..ncols {
                        let d = &f * &a[rank][k];
                        a[i][k] -= d;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    #[test]
    fn small_cases() {
        assert_eq!(rank(&dense(&[vec![1, 2], vec![2, 4]]), 2), 1);
        assert_eq!(rank(&dense(&[vec![1, 0], vec![0, 1]]), 2), 2);
        assert_eq!(rank(&dense(&[vec![0, 0]]), 2), 0);
        assert_eq!(rank(&[], 3), 0);
        // A rank-2 matrix whose naive integer elimination grows entries.
        assert_eq!(rank(&dense(&[vec![6, 4, 2], vec![9, 6, 3], vec![1, 1, 1]]), 3), 2);
    }

    #[test]
    fn big_entries_fall_back() {
        let big = i64::MAX / 3;
        let m = vec![vec![big, big - 1, 7], vec![big - 5, big, 3], vec![1, big, big]];
        assert_eq!(rank(&dense(&m), 3), rational_rank(&m));
    }

    proptest! {
        #[test]
        fn matches_rational_elimination(m in proptest::collection::vec(proptest::collection::vec(-3i64..=3, 6), 0..7)) {
            prop_assert_eq!(rank(&dense(&m), 6), rational_rank(&m));
        }
    }
}
