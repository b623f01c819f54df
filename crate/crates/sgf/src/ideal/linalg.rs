//! Exact rational row reduction, used as the independent route to graded
//! generator counts.

use num_rational::Rational64;
use num_traits::Zero;

/// Rank of a matrix over the rationals by Gaussian elimination.
///
/// Consumes the rows. Entries here come from incidence-style difference
/// vectors, so the arithmetic stays tiny, but nothing below assumes that.
pub fn rank(mut rows: Vec<Vec<Rational64>>) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let ncols = rows[0].len();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot_row) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot_row);
        let (upper, lower) = rows.split_at_mut(rank + 1);
        let pivot_row = &upper[rank];
        let pivot = pivot_row[col];
        for row in lower {
            if row[col].is_zero() {
                continue;
            }
            let factor = row[col] / pivot;
            for (dst, src) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                *dst -= factor * src;
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational64 {
        Rational64::from_integer(n)
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(vec![]), 0);
        assert_eq!(rank(vec![vec![q(0), q(0)]]), 0);
        assert_eq!(rank(vec![vec![q(1), q(2)], vec![q(2), q(4)]]), 1);
        assert_eq!(
            rank(vec![
                vec![q(1), q(0), q(-1)],
                vec![q(0), q(1), q(-1)],
                vec![q(1), q(-1), q(0)],
            ]),
            2
        );
        assert_eq!(
            rank(vec![vec![q(2), q(1)], vec![q(1), q(1)], vec![q(0), q(5)]]),
            2
        );
    }
}
