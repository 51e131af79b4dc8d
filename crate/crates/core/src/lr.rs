//! Littlewood-Richardson coefficients and the count of minimal strata.

use crate::error::{Error, Result};
use crate::partition::Partition;

/// The subspace type of the minimal strata of `(β, γ)`: all 2s, plus a single
/// 1 when `|β| - |γ|` is odd.
pub fn alpha_for_type(beta: &Partition, gamma: &Partition) -> Result<Partition> {
    if !beta.contains(gamma) {
        return Err(Error::NotContained {
            beta: beta.clone(),
            gamma: gamma.clone(),
        });
    }
    let d = beta.weight() - gamma.weight();
    let mut parts = vec![2u32; (d / 2) as usize];
    if d % 2 == 1 {
        parts.push(1);
    }
    Ok(Partition::new(parts))
}

/// `c^β_{α,γ}`: skew semistandard tableaux of shape `β/γ` and content `α`
/// whose reading word (rows top to bottom, each right to left) is a lattice word.
pub fn lr_coefficient(alpha: &Partition, gamma: &Partition, beta: &Partition) -> u64 {
    if !beta.contains(gamma) || beta.weight() != alpha.weight() + gamma.weight() {
        return 0;
    }
    // cells in reading order
    let mut cells = Vec::new();
    for row in 0..beta.len() {
        for col in (gamma.part(row)..beta.part(row)).rev() {
            cells.push((row, col));
        }
    }
    let mut filling = vec![vec![0u32; beta.first() as usize]; beta.len()];
    let mut content = vec![0u32; alpha.len() + 1];
    let mut count = 0;
    fill(
        alpha,
        gamma,
        &cells,
        0,
        &mut filling,
        &mut content,
        &mut count,
    );
    count
}

fn fill(
    alpha: &Partition,
    gamma: &Partition,
    cells: &[(usize, u32)],
    k: usize,
    filling: &mut [Vec<u32>],
    content: &mut [u32],
    count: &mut u64,
) {
    let Some(&(row, col)) = cells.get(k) else {
        *count += 1;
        return;
    };
    let c = col as usize;
    // rows weakly increase left to right; the right neighbour is filled already
    let max = if c + 1 < filling[row].len() && filling[row][c + 1] > 0 {
        filling[row][c + 1]
    } else {
        alpha.len() as u32
    };
    // columns strictly increase downwards
    let min = if row > 0 && col >= gamma.part(row - 1) {
        filling[row - 1][c] + 1
    } else {
        1
    };
    for v in min..=max {
        let i = v as usize;
        if content[i] >= alpha.part(i - 1) {
            continue;
        }
        if i > 1 && content[i] + 1 > content[i - 1] {
            continue;
        }
        content[i] += 1;
        filling[row][c] = v;
        fill(alpha, gamma, cells, k + 1, filling, content, count);
        filling[row][c] = 0;
        content[i] -= 1;
    }
}

/// The predicted number of minimal strata, `c^β_{α,γ}`, when `β/γ` has at
/// most one box in each column; `None` otherwise.
///
/// The hypothesis is the column condition because a double pole at a point
/// puts two boxes in one column; without it the count can differ.
pub fn minimal_count_prediction(beta: &Partition, gamma: &Partition) -> Result<Option<u64>> {
    let alpha = alpha_for_type(beta, gamma)?;
    if !beta.is_column_strip(gamma)? {
        return Ok(None);
    }
    Ok(Some(lr_coefficient(&alpha, gamma, beta)))
}
