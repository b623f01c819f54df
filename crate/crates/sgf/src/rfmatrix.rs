//! Row-factorization matrices attached to pseudo-Frobenius numbers.
//!
//! For `alpha` in `PF(H)` an RF-matrix is an integer matrix with -1 on the
//! diagonal, nonnegative entries elsewhere, and every row representing
//! `alpha + a_i` as a combination of the other generators, so each row sums
//! against the generator vector to `alpha`. They exist for every `alpha`
//! and are not unique in general. The cyclic normal form, when some
//! simultaneous row/column permutation exhibits it, is what produces the
//! 2 x n determinantal presentation.

use serde::{Deserialize, Serialize};

use crate::config::Limits;
use crate::error::{Error, Result};
use crate::ideal::{Monomial, MonomialOrder};
use crate::semigroup::NumericalSemigroup;

/// An RF-matrix for `alpha`, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RfMatrix {
    alpha: u64,
    entries: Vec<Vec<i64>>,
}

impl RfMatrix {
    pub fn from_entries(alpha: u64, entries: Vec<Vec<i64>>) -> Self {
        RfMatrix { alpha, entries }
    }

    pub fn alpha(&self) -> u64 {
        self.alpha
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }

    /// Checks the three defining conditions against `h`: -1 diagonal,
    /// nonnegative off-diagonal, and row sums equal to `alpha`.
    pub fn validate(&self, h: &NumericalSemigroup) -> Result<()> {
        let n = h.embedding_dimension();
        if self.entries.len() != n || self.entries.iter().any(|r| r.len() != n) {
            return Err(Error::NotRfMatrix {
                reason: format!("expected a {n} x {n} matrix"),
            });
        }
        for (i, row) in self.entries.iter().enumerate() {
            for (j, &m) in row.iter().enumerate() {
                if i == j && m != -1 {
                    return Err(Error::NotRfMatrix {
                        reason: format!("diagonal entry ({i},{i}) is {m}, expected -1"),
                    });
                }
                if i != j && m < 0 {
                    return Err(Error::NotRfMatrix {
                        reason: format!("off-diagonal entry ({i},{j}) is negative"),
                    });
                }
            }
            let sum: i64 = row
                .iter()
                .zip(h.generators())
                .map(|(&m, &a)| m * a as i64)
                .sum();
            if sum != self.alpha as i64 {
                return Err(Error::NotRfMatrix {
                    reason: format!("row {i} sums to {sum}, expected {}", self.alpha),
                });
            }
        }
        Ok(())
    }
}

/// Certificate that a simultaneous row/column permutation brings an
/// RF-matrix to cyclic form: -1 diagonal, positive entries exactly on the
/// superdiagonal and the bottom-left corner.
///
/// `permutation[k]` is the original index placed at position `k`; the walk
/// starts at index 0, which makes the permutation lexicographically least
/// among the rotations of the cycle. `ells[k]` is the positive entry
/// attached to position `k`: `ells[0]` is the corner, `ells[k]` for `k > 0`
/// sits on the superdiagonal above position `k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyclicCertificate {
    pub permutation: Vec<usize>,
    pub ells: Vec<u64>,
}

/// All coefficient vectors representing `m` over the generators of `h`.
/// Empty exactly when `m` is not a member (or is negative).
pub fn factorizations(h: &NumericalSemigroup, m: i64, limits: &Limits) -> Result<Vec<Vec<u32>>> {
    crate::ideal::representations(h.generators(), m, limits.node_budget)
}

/// Every RF-matrix associated to `alpha`: the Cartesian product of the row
/// factorizations of `alpha + a_i`, which all vanish at their own index.
///
/// Errors if `alpha` is not pseudo-Frobenius or the product exceeds the
/// configured cap.
pub fn rf_matrices(
    h: &NumericalSemigroup,
    alpha: u64,
    limits: &Limits,
) -> Result<Vec<RfMatrix>> {
    let rows = rf_rows(h, alpha, limits)?;
    let count = rows.iter().map(Vec::len).product::<usize>();
    if count > limits.max_rf_matrices {
        return Err(Error::RfMatrixOverflow {
            cap: limits.max_rf_matrices,
        });
    }
    let n = h.embedding_dimension();
    let mut matrices = Vec::with_capacity(count);
    let mut choice = vec![0usize; n];
    loop {
        let entries: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                let mut row: Vec<i64> = rows[i][choice[i]].iter().map(|&c| c as i64).collect();
                row[i] = -1;
                row
            })
            .collect();
        matrices.push(RfMatrix {
            alpha,
            entries,
        });
        // Odometer increment over the row choices.
        let mut level = n;
        loop {
            if level == 0 {
                return Ok(matrices);
            }
            level -= 1;
            choice[level] += 1;
            if choice[level] < rows[level].len() {
                break;
            }
            choice[level] = 0;
        }
    }
}

/// Factorization lists of `alpha + a_i` per row, each entry vanishing at
/// its own coordinate.
fn rf_rows(
    h: &NumericalSemigroup,
    alpha: u64,
    limits: &Limits,
) -> Result<Vec<Vec<Vec<u32>>>> {
    if !h.pseudo_frobenius().contains(&alpha) {
        return Err(Error::NotPseudoFrobenius {
            alpha: alpha as i64,
        });
    }
    h.generators()
        .iter()
        .enumerate()
        .map(|(i, &a)| {
            let reps = factorizations(h, (alpha + a) as i64, limits)?;
            debug_assert!(!reps.is_empty());
            // A positive own coordinate would put alpha itself in H.
            debug_assert!(reps.iter().all(|c| c[i] == 0));
            Ok(reps)
        })
        .collect()
}

/// True when every column contains a strictly positive entry. Validates
/// the matrix first. Guaranteed to hold when `(n-1) * alpha` is outside
/// `H`; this is the checker, not the assumption.
pub fn check_column_positivity(m: &RfMatrix, h: &NumericalSemigroup) -> Result<bool> {
    m.validate(h)?;
    let n = m.size();
    Ok((0..n).all(|j| (0..n).any(|i| m.entries[i][j] > 0)))
}

/// Detects the cyclic normal form.
///
/// In cyclic form every row has exactly one positive entry and following
/// those entries walks a single n-cycle, so detection is a support check
/// plus a permutation walk from index 0.
pub fn find_cyclic_form(m: &RfMatrix) -> Option<CyclicCertificate> {
    let n = m.size();
    let mut successor = vec![0usize; n];
    for (i, row) in m.entries.iter().enumerate() {
        let positives: Vec<usize> = (0..n).filter(|&j| row[j] > 0).collect();
        if positives.len() != 1 {
            return None;
        }
        successor[i] = positives[0];
    }
    // Walk from 0; the walk must visit every index exactly once and return.
    let mut permutation = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    let mut at = 0usize;
    for _ in 0..n {
        if seen[at] {
            return None;
        }
        seen[at] = true;
        permutation.push(at);
        at = successor[at];
    }
    if at != 0 {
        return None;
    }
    // ells[0] is the corner entry, ells[k] the superdiagonal entry above
    // position k.
    let mut ells = vec![0u64; n];
    ells[0] = m.entries[permutation[n - 1]][permutation[0]] as u64;
    for k in 1..n {
        ells[k] = m.entries[permutation[k - 1]][permutation[k]] as u64;
    }
    Some(CyclicCertificate { permutation, ells })
}

/// The monomial top row of an RF-matrix: `f_i` has exponent `m_ij` on the
/// j-th variable for `j != i` and none of its own variable, so
/// `deg f_i = alpha + a_i`.
pub fn top_row_monomials(m: &RfMatrix, h: &NumericalSemigroup) -> Vec<Monomial> {
    let weights = h.generators();
    m.entries
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let exps: Vec<u32> = row
                .iter()
                .enumerate()
                .map(|(j, &e)| if j == i { 0 } else { e as u32 })
                .collect();
            Monomial::new(exps, weights)
        })
        .collect()
}

/// Degree balance of all 2 x 2 minors of `(f over x)`: checks
/// `deg(x_i f_j) = deg(x_j f_i)` for every pair, the exact membership
/// criterion for binomials in the toric ideal.
pub fn check_minors_in_kernel(top: &[Monomial], h: &NumericalSemigroup) -> bool {
    let weights = h.generators();
    let n = top.len();
    (0..n).all(|i| {
        (i + 1..n).all(|j| weights[i] + top[j].degree() == weights[j] + top[i].degree())
    })
}

/// All cyclic certificates over all RF-matrices of `alpha`, deterministic
/// order, paired with their matrices.
///
/// Only rows with single-support factorizations can appear in a cyclic
/// matrix, so the search walks that restricted product instead of the full
/// RF enumeration and stays small even when the matrix count is huge.
pub fn cyclic_certificates(
    h: &NumericalSemigroup,
    alpha: u64,
    limits: &Limits,
) -> Result<Vec<(RfMatrix, CyclicCertificate)>> {
    let rows = rf_rows(h, alpha, limits)?;
    let n = h.embedding_dimension();
    let singles: Vec<Vec<Vec<u32>>> = rows
        .into_iter()
        .map(|row| {
            row.into_iter()
                .filter(|c| c.iter().filter(|&&x| x > 0).count() == 1)
                .collect()
        })
        .collect();
    if singles.iter().any(Vec::is_empty) {
        return Ok(Vec::new());
    }
    let mut found = Vec::new();
    let mut choice = vec![0usize; n];
    loop {
        let entries: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                let mut row: Vec<i64> = singles[i][choice[i]].iter().map(|&c| c as i64).collect();
                row[i] = -1;
                row
            })
            .collect();
        let m = RfMatrix {
            alpha,
            entries,
        };
        if let Some(cert) = find_cyclic_form(&m) {
            found.push((m, cert));
        }
        let mut level = n;
        loop {
            if level == 0 {
                return Ok(found);
            }
            level -= 1;
            choice[level] += 1;
            if choice[level] < singles[level].len() {
                break;
            }
            choice[level] = 0;
        }
    }
}

/// Builds the order used for minor orientation from the semigroup weights.
pub fn weight_order(h: &NumericalSemigroup) -> MonomialOrder {
    MonomialOrder::grevlex(h.generators())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn limits() -> Limits {
        Limits::default()
    }

    #[test]
    fn factorization_examples() {
        let h = NumericalSemigroup::new(&[3, 4, 5]).unwrap();
        assert_eq!(factorizations(&h, 6, &limits()).unwrap(), vec![vec![2, 0, 0]]);
        assert_eq!(
            factorizations(&h, 9, &limits()).unwrap(),
            vec![vec![3, 0, 0], vec![0, 1, 1]]
        );
        assert_eq!(factorizations(&h, 0, &limits()).unwrap(), vec![vec![0, 0, 0]]);
    }

    #[test]
    fn unique_rf_matrix_for_three_four_five() {
        let h = NumericalSemigroup::new(&[3, 4, 5]).unwrap();
        let ms = rf_matrices(&h, 1, &limits()).unwrap();
        assert_eq!(ms.len(), 1);
        assert_eq!(
            ms[0].entries(),
            &[vec![-1, 1, 0], vec![0, -1, 1], vec![2, 0, -1]]
        );
        ms[0].validate(&h).unwrap();
    }

    #[test]
    fn rf_matrices_satisfy_definition_and_row_sum_identity() {
        let h = NumericalSemigroup::new(&[4, 6, 7, 9]).unwrap();
        let ms = rf_matrices(&h, 5, &limits()).unwrap();
        assert!(!ms.is_empty());
        for m in &ms {
            m.validate(&h).unwrap();
            // Summing all rows: sum_j (sum_i m_ij) a_j = n * alpha.
            let n = m.size();
            let total: i64 = (0..n)
                .map(|j| {
                    let col: i64 = (0..n).map(|i| m.entries()[i][j]).sum();
                    col * h.generators()[j] as i64
                })
                .sum();
            assert_eq!(total, n as i64 * 5);
        }
    }

    #[test]
    fn not_pseudo_frobenius_is_rejected() {
        let h = NumericalSemigroup::new(&[3, 4, 5]).unwrap();
        assert!(matches!(
            rf_matrices(&h, 3, &limits()),
            Err(Error::NotPseudoFrobenius { alpha: 3 })
        ));
    }

    #[test]
    fn overflow_cap_is_enforced() {
        let h = NumericalSemigroup::new(&[4, 6, 7, 9]).unwrap();
        let tight = Limits {
            max_rf_matrices: 3,
            ..Limits::default()
        };
        assert!(matches!(
            rf_matrices(&h, 5, &tight),
            Err(Error::RfMatrixOverflow { cap: 3 })
        ));
    }

    #[test]
    fn column_positivity() {
        let h = NumericalSemigroup::new(&[3, 4, 5]).unwrap();
        let m = &rf_matrices(&h, 1, &limits()).unwrap()[0];
        assert!(check_column_positivity(m, &h).unwrap());

        // Hand-built junk is rejected by validation.
        let junk = RfMatrix::from_entries(1, vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
        assert!(matches!(
            check_column_positivity(&junk, &h),
            Err(Error::NotRfMatrix { .. })
        ));

        let h = NumericalSemigroup::new(&[10, 11, 13, 14]).unwrap();
        for m in rf_matrices(&h, 12, &limits()).unwrap() {
            assert!(check_column_positivity(&m, &h).unwrap());
        }
    }

    #[test]
    fn cyclic_form_detection() {
        let h = NumericalSemigroup::new(&[3, 4, 5]).unwrap();
        let m = &rf_matrices(&h, 1, &limits()).unwrap()[0];
        let cert = find_cyclic_form(m).unwrap();
        assert_eq!(cert.permutation, vec![0, 1, 2]);
        assert_eq!(cert.ells, vec![2, 1, 1]);

        // A row with two positive entries cannot be cyclic.
        let twopos = RfMatrix::from_entries(
            2,
            vec![vec![-1, 1, 1], vec![0, -1, 2], vec![1, 0, -1]],
        );
        assert!(find_cyclic_form(&twopos).is_none());
    }

    #[test]
    fn cyclic_ells_match_min_multiples() {
        let h = NumericalSemigroup::new(&[3, 4, 5]).unwrap();
        let m = &rf_matrices(&h, 1, &limits()).unwrap()[0];
        let cert = find_cyclic_form(m).unwrap();
        for (k, &orig) in cert.permutation.iter().enumerate() {
            assert_eq!(cert.ells[k], h.min_multiple_in_complement(orig) - 1);
        }
    }

    #[test]
    fn cyclic_ells_plus_one_land_in_complement_monoid() {
        let h = NumericalSemigroup::new(&[5, 7, 9, 11, 13]).unwrap();
        let found = cyclic_certificates(&h, 2, &limits()).unwrap();
        assert!(!found.is_empty());
        for (_, cert) in &found {
            for (k, &orig) in cert.permutation.iter().enumerate() {
                let l = cert.ells[k];
                assert!(l >= 1);
                assert_eq!(l + 1, h.min_multiple_in_complement(orig));
            }
        }
    }

    #[test]
    fn top_row_and_kernel_criterion() {
        let h = NumericalSemigroup::new(&[3, 4, 5]).unwrap();
        let m = &rf_matrices(&h, 1, &limits()).unwrap()[0];
        let top = top_row_monomials(m, &h);
        let printed: Vec<String> = top.iter().map(|f| f.to_string()).collect();
        assert_eq!(printed, vec!["x2", "x3", "x1^2"]);
        for (i, f) in top.iter().enumerate() {
            assert_eq!(f.degree() - h.generators()[i], 1);
        }
        assert!(check_minors_in_kernel(&top, &h));

        // Perturbing one exponent breaks a balance.
        let mut bad = top.clone();
        bad[0] = Monomial::new(vec![0, 2, 0], h.generators());
        assert!(!check_minors_in_kernel(&bad, &h));
    }

    #[test]
    fn top_rows_from_any_rf_matrix_pass_the_kernel_criterion() {
        let h = NumericalSemigroup::new(&[4, 6, 7, 9]).unwrap();
        for m in rf_matrices(&h, 5, &limits()).unwrap() {
            let top = top_row_monomials(&m, &h);
            assert!(check_minors_in_kernel(&top, &h));
            let offsets: Vec<i64> = top
                .iter()
                .zip(h.generators())
                .map(|(f, &a)| f.degree() as i64 - a as i64)
                .collect();
            assert!(offsets.iter().all(|&o| o == 5));
        }
    }
}
