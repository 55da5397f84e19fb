//! Direct evaluators for the window-sum identities that underpin the pattern proofs.
//!
//! Each function only evaluates its identity; whether the grid actually has the window
//! property is the caller's concern (see [`super::check_windows`]).

use crate::error::{Error, Result};
use crate::grid::Grid;

fn require_multiple(len: usize, unit: usize, extra: usize, what: &str) -> Result<usize> {
    if unit == 0 || len < unit + extra || !(len - extra).is_multiple_of(unit) {
        return Err(Error::InvalidParameter(format!(
            "{what} {len} is not a positive multiple of {unit} plus {extra}"
        )));
    }
    Ok((len - extra) / unit)
}

/// Corner identity on an `(mp+1)×(np+1)` grid: `top_left + bottom_right ==
/// bottom_left + top_right`.
pub fn corner_identity(grid: &Grid, p: usize) -> Result<bool> {
    require_multiple(grid.rows(), p, 1, "row count")?;
    require_multiple(grid.cols(), p, 1, "column count")?;
    let (last_r, last_c) = (grid.rows() - 1, grid.cols() - 1);
    let (a, b) = (grid.get(0, 0), grid.get(0, last_c));
    let (c, d) = (grid.get(last_r, 0), grid.get(last_r, last_c));
    Ok(a + d == c + b)
}

/// Split-row identity on an `(mp+1)×np` grid: the first `k_split` entries of the top row
/// plus its last `p - k_split` entries equal the same selection from the bottom row.
pub fn split_row_identity(grid: &Grid, p: usize, k_split: usize) -> Result<bool> {
    split_row_identity_scaled(grid, p, p, k_split)
}

/// As [`split_row_identity`] with the block width replaced by `block = ℓp`: the grid
/// is `(m·block+1)×(n·block)`, `1 ≤ k_split < block`, and the trailing selection has
/// `block - k_split` entries.
pub fn split_row_identity_scaled(
    grid: &Grid,
    p: usize,
    block: usize,
    k_split: usize,
) -> Result<bool> {
    if p < 2 || !block.is_multiple_of(p) || block == 0 {
        return Err(Error::InvalidParameter(format!(
            "block width {block} is not a positive multiple of p={p}"
        )));
    }
    if k_split == 0 || k_split >= block {
        return Err(Error::InvalidParameter(format!(
            "k_split must satisfy 1 <= k_split < {block}, got {k_split}"
        )));
    }
    require_multiple(grid.rows(), block, 1, "row count")?;
    require_multiple(grid.cols(), block, 0, "column count")?;
    let cols = grid.cols();
    let pick = |r: usize| -> i64 {
        let line = grid.row(r);
        line[..k_split].iter().sum::<i64>() + line[cols - (block - k_split)..].iter().sum::<i64>()
    };
    Ok(pick(0) == pick(grid.rows() - 1))
}

/// Whether every 2×2 subarray (any two rows, any two columns) satisfies
/// `a[i1][j1] + a[i2][j2] == a[i1][j2] + a[i2][j1]`.
pub fn has_cross_identity(grid: &Grid) -> bool {
    let (rows, cols) = (grid.rows(), grid.cols());
    (0..rows).all(|i1| {
        (i1 + 1..rows).all(|i2| {
            (0..cols).all(|j1| {
                (j1 + 1..cols).all(|j2| {
                    grid.get(i1, j1) + grid.get(i2, j2) == grid.get(i1, j2) + grid.get(i2, j1)
                })
            })
        })
    })
}

/// Sum of the transversal choosing column `perm[i]` in row `i`.
pub fn transversal_sum(grid: &Grid, perm: &[usize]) -> Result<i64> {
    let m = grid.rows();
    if !grid.is_square() || perm.len() != m {
        return Err(Error::InvalidParameter(format!(
            "a transversal of a {}x{} grid needs a square grid and {m} columns",
            grid.rows(),
            grid.cols()
        )));
    }
    let mut seen = vec![false; m];
    for &c in perm {
        if c >= m || std::mem::replace(&mut seen[c], true) {
            return Err(Error::InvalidParameter(format!(
                "{perm:?} is not a permutation of 0..{m}"
            )));
        }
    }
    Ok(perm.iter().enumerate().map(|(r, &c)| grid.get(r, c)).sum())
}
