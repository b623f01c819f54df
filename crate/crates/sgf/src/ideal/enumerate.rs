use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

use super::monomial::Monomial;

/// All coefficient vectors `c >= 0` with `sum c_j * weights_j = target`,
/// in descending lexicographic order. Empty when the target has no
/// representation (in particular for negative targets).
///
/// Depth-first search bounding each coefficient by `remaining / weight`.
/// Exponential in the worst case; the node budget turns runaway searches
/// into an explicit error.
pub fn representations(weights: &[u64], target: i64, node_budget: usize) -> Result<Vec<Vec<u32>>> {
    if target < 0 {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut current = vec![0u32; weights.len()];
    let mut nodes = 0usize;
    dfs(weights, target as u64, 0, &mut current, &mut out, &mut nodes, node_budget)?;
    Ok(out)
}

fn dfs(
    weights: &[u64],
    remaining: u64,
    level: usize,
    current: &mut Vec<u32>,
    out: &mut Vec<Vec<u32>>,
    nodes: &mut usize,
    budget: usize,
) -> Result<()> {
    *nodes += 1;
    if *nodes > budget {
        return Err(Error::EnumerationBudgetExceeded { budget });
    }
    if level == weights.len() {
        if remaining == 0 {
            out.push(current.clone());
        }
        return Ok(());
    }
    if level == weights.len() - 1 {
        // Last variable: a single divisibility check instead of a scan.
        let w = weights[level];
        if remaining.is_multiple_of(w) {
            let c = remaining / w;
            assert!(c <= u32::MAX as u64, "exponent overflow");
            current[level] = c as u32;
            out.push(current.clone());
            current[level] = 0;
        }
        return Ok(());
    }
    let max_c = remaining / weights[level];
    assert!(max_c <= u32::MAX as u64, "exponent overflow");
    let mut c = max_c;
    loop {
        current[level] = c as u32;
        dfs(
            weights,
            remaining - c * weights[level],
            level + 1,
            current,
            out,
            nodes,
            budget,
        )?;
        if c == 0 {
            break;
        }
        c -= 1;
    }
    current[level] = 0;
    Ok(())
}

/// All monomials of weighted degree `d` over the semigroup's generator
/// weights. These share the image `t^d` under the defining algebra map, and
/// the list is empty exactly when `d` is not a member.
pub fn fiber(h: &NumericalSemigroup, d: i64, node_budget: usize) -> Result<Vec<Monomial>> {
    let weights = h.weights();
    Ok(representations(weights, d, node_budget)?
        .into_iter()
        .map(|exps| Monomial::new(exps, weights))
        .collect())
}
