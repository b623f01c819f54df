use crate::semigroup::NumericalSemigroup;

/// Hilbert function of the semigroup ring in degrees `0..=up_to`: each
/// graded piece is spanned by a single `t^d`, so the coefficient is 1
/// exactly on members.
pub fn hilbert_coefficients(h: &NumericalSemigroup, up_to: u64) -> Vec<u8> {
    (0..=up_to).map(|d| h.contains(d as i64) as u8).collect()
}

/// Number of monomials of each weighted degree `0..=up_to` in the ambient
/// polynomial ring: the coin-change counting recurrence for the product of
/// geometric series over the weights.
pub fn monomial_count_table(weights: &[u64], up_to: u64) -> Vec<u64> {
    let len = up_to as usize + 1;
    let mut table = vec![0u64; len];
    table[0] = 1;
    for &w in weights {
        for d in w as usize..len {
            table[d] += table[d - w as usize];
        }
    }
    table
}
