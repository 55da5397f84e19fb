//! The block involution θ: view an order-`n` square as a `p² × p²` array of blocks of
//! side `n/p²` and send block `(i, j)` to position `(ī, j̄)`, where `ī` swaps the two
//! base-`p` digits of `i`. Entries inside a block keep their relative position.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::{Grid, NaturalSquare};
use crate::params::TypeParams;

/// A block index `i = ℓ·p + m` in `0..p²` with its digit swap `ī = m·p + ℓ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DigitSwapIndex {
    pub p: usize,
    pub index: usize,
}

impl DigitSwapIndex {
    pub fn new(p: usize, index: usize) -> Result<Self> {
        if p < 2 || index >= p * p {
            return Err(Error::InvalidParameter(format!(
                "block index {index} outside 0..{}",
                p * p
            )));
        }
        Ok(DigitSwapIndex { p, index })
    }

    pub fn high(&self) -> usize {
        self.index / self.p
    }

    pub fn low(&self) -> usize {
        self.index % self.p
    }

    pub fn swapped(&self) -> usize {
        self.low() * self.p + self.high()
    }

    pub fn is_fixed(&self) -> bool {
        self.high() == self.low()
    }
}

fn block_side(grid: &Grid, params: &TypeParams) -> Result<usize> {
    if !grid.is_square() {
        return Err(Error::NotSquare {
            rows: grid.rows(),
            cols: grid.cols(),
        });
    }
    if grid.rows() != params.n() {
        return Err(Error::OrderMismatch {
            expected: params.n(),
            found: grid.rows(),
        });
    }
    let p2 = params.p() * params.p();
    if !params.n().is_multiple_of(p2) {
        return Err(Error::Divisibility(format!(
            "p^2={p2} does not divide order {}",
            params.n()
        )));
    }
    Ok(params.n() / p2)
}

/// Source index of every output line under the digit swap of its block.
fn swap_map(params: &TypeParams, side: usize) -> Vec<usize> {
    let p = params.p();
    (0..params.n())
        .map(|x| {
            let block = x / side;
            let swapped = (block % p) * p + block / p;
            swapped * side + x % side
        })
        .collect()
}

fn identity_map(n: usize) -> Vec<usize> {
    (0..n).collect()
}

/// `[θ(R)]_{i,j} = R_{ī,j̄}` on blocks.
pub fn theta(grid: &Grid, params: &TypeParams) -> Result<Grid> {
    let side = block_side(grid, params)?;
    let map = swap_map(params, side);
    Ok(grid.permuted(&map, &map))
}

/// `[θ_row(R)]_{i,j} = R_{ī,j}` on blocks.
pub fn theta_row(grid: &Grid, params: &TypeParams) -> Result<Grid> {
    let side = block_side(grid, params)?;
    Ok(grid.permuted(&swap_map(params, side), &identity_map(params.n())))
}

/// `[θ_col(R)]_{i,j} = R_{i,j̄}` on blocks.
pub fn theta_col(grid: &Grid, params: &TypeParams) -> Result<Grid> {
    let side = block_side(grid, params)?;
    Ok(grid.permuted(&identity_map(params.n()), &swap_map(params, side)))
}

/// θ on a natural square; the result is natural because θ only moves entries.
pub fn theta_square(square: &NaturalSquare, params: &TypeParams) -> Result<NaturalSquare> {
    theta(square.grid(), params).map(NaturalSquare::from_grid_unchecked)
}
