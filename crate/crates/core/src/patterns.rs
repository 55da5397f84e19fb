//! Franklin pattern geometry for orders `n = k·p³`.
//!
//! An up pattern lives in a frame of `n/p` consecutive (toric) rows. The frame is cut
//! into a `p × p²` array of blocks of side `k·p`, and the block columns are grouped into
//! `p` bands of `p` block columns each. For `j < (p-1)/2` the pattern meets one block per
//! block row in band `j` (main diagonal for even `j`, off diagonal for odd `j`) and the
//! mirror image of those blocks in band `p-1-j`. Inside each such block it takes two
//! partial rows (`2j` and `2j+1`) of every `p×p` sub-block on the main or off block
//! diagonal. For odd `p` the central band is cut into `p×p` squares instead, and the
//! pattern takes (part of) the bottom row of two squares per square-row, converging on a
//! peak (when `(p-1)/2` is odd) or a valley (when it is even).
//!
//! Right, down and left patterns are the up cells carried through 1, 2 or 3 clockwise
//! quarter turns of the ambient square.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::{block_at, BlockAddress, Grid};
use crate::params::TypeParams;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    Up,
    Right,
    Down,
    Left,
}

impl Direction {
    pub const ALL: [Direction; 4] = [
        Direction::Up,
        Direction::Right,
        Direction::Down,
        Direction::Left,
    ];

    /// Clockwise quarter turns that carry an up pattern onto this direction.
    pub fn quarter_turns(self) -> u32 {
        match self {
            Direction::Up => 0,
            Direction::Right => 1,
            Direction::Down => 2,
            Direction::Left => 3,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Direction::Up => "up",
            Direction::Right => "right",
            Direction::Down => "down",
            Direction::Left => "left",
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Direction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "up" => Ok(Direction::Up),
            "right" => Ok(Direction::Right),
            "down" => Ok(Direction::Down),
            "left" => Ok(Direction::Left),
            other => Err(Error::InvalidParameter(format!(
                "unknown direction {other:?} (expected up, right, down or left)"
            ))),
        }
    }
}

/// Which `α + β = p` splits a check ranges over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Partitions {
    /// Every `1 ≤ α ≤ p-1`.
    #[default]
    All,
    /// A single split: the weakened form of the pattern requirement.
    One(usize),
}

impl Partitions {
    pub fn alphas(self, p: usize) -> Result<Vec<usize>> {
        match self {
            Partitions::All => Ok((1..p).collect()),
            Partitions::One(alpha) => {
                check_alpha(alpha, p)?;
                Ok(vec![alpha])
            }
        }
    }
}

fn check_alpha(alpha: usize, p: usize) -> Result<()> {
    if alpha == 0 || alpha >= p {
        return Err(Error::InvalidParameter(format!(
            "alpha must satisfy 1 <= alpha < p={p}, got {alpha}"
        )));
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PatternSpec {
    pub direction: Direction,
    pub alpha: usize,
    pub frame_offset: usize,
    pub params: TypeParams,
}

impl PatternSpec {
    pub fn new(
        params: TypeParams,
        direction: Direction,
        alpha: usize,
        frame_offset: usize,
    ) -> Result<Self> {
        params.require_franklin()?;
        check_alpha(alpha, params.p())?;
        if frame_offset >= params.n() {
            return Err(Error::InvalidParameter(format!(
                "frame offset {frame_offset} outside 0..{}",
                params.n()
            )));
        }
        Ok(PatternSpec {
            direction,
            alpha,
            frame_offset,
            params,
        })
    }

    pub fn beta(&self) -> usize {
        self.params.p() - self.alpha
    }
}

impl fmt::Display for PatternSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} alpha={} offset={}",
            self.direction, self.alpha, self.frame_offset
        )
    }
}

/// Resolved cells of one pattern, sorted in row-major order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CellSet {
    cells: Vec<(usize, usize)>,
}

impl CellSet {
    fn from_unsorted(mut cells: Vec<(usize, usize)>) -> Self {
        cells.sort_unstable();
        CellSet { cells }
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn cells(&self) -> &[(usize, usize)] {
        &self.cells
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.cells.iter().copied()
    }

    pub fn contains(&self, cell: (usize, usize)) -> bool {
        self.cells.binary_search(&cell).is_ok()
    }

    pub fn sum(&self, grid: &Grid) -> i64 {
        self.iter().map(|(r, c)| grid.get(r, c)).sum()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Left,
    Right,
    Sole,
}

/// A block the up pattern passes through.
///
/// Outside the central band `row_in_band` is the block row of the `p × p²` partition and
/// the address has side `k·p`. In the central band it is the row of `p×p` squares
/// (`0..k·p`) and the address has side `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BandBlock {
    pub band: usize,
    pub row_in_band: usize,
    pub side: Side,
    pub address: BlockAddress,
}

/// Placement of the two central-band squares on one square-row, as column indices
/// local to the band (`0..k·p`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum CentralRow {
    /// Left and right squares coincide; the whole bottom row is taken.
    Sole(usize),
    /// Split bottom rows: `α`/`β` cells in each square depending on row parity.
    Pair(usize, usize),
    /// Touching squares (even `k`); both bottom rows are taken whole.
    Adjacent(usize, usize),
    /// The row that an adjacent pair leaves without any cell.
    Empty,
}

pub(crate) fn central_row(p: usize, k: usize, i: usize) -> CentralRow {
    let w = k * p;
    let peak = ((p - 1) / 2) % 2 == 1;
    debug_assert!(p % 2 == 1 && i < w);
    if w % 2 == 1 {
        let mid = (w - 1) / 2;
        if peak {
            if i == 0 {
                return CentralRow::Sole(mid);
            }
            let t = i.div_ceil(2);
            CentralRow::Pair(mid - t, mid + t)
        } else {
            if i == w - 1 {
                return CentralRow::Sole(mid);
            }
            let t = i / 2;
            CentralRow::Pair(t, w - 1 - t)
        }
    } else {
        let half = w / 2;
        if peak {
            match i {
                0 => CentralRow::Adjacent(half - 1, half),
                _ if i == w - 1 => CentralRow::Empty,
                _ => {
                    let t = i.div_ceil(2);
                    CentralRow::Pair(half - 1 - t, half + t)
                }
            }
        } else if i == w - 1 {
            CentralRow::Adjacent(half - 1, half)
        } else if i == w - 2 {
            CentralRow::Empty
        } else {
            let t = i / 2;
            CentralRow::Pair(t, w - 1 - t)
        }
    }
}

fn central_band(p: usize) -> Option<usize> {
    (p % 2 == 1).then(|| (p - 1) / 2)
}

/// Bands to the right of the vertical midline mirror those on the left.
fn is_mirrored(band: usize, p: usize) -> bool {
    2 * band > p - 1
}

/// Index `j` of the left/right band pair a band belongs to.
fn band_pair(band: usize, p: usize) -> usize {
    band.min(p - 1 - band)
}

/// Blocks of the frame starting at `frame_offset` that meet the up pattern, ordered by
/// band and then by row.
pub fn select_blocks(params: &TypeParams, frame_offset: usize) -> Result<Vec<BandBlock>> {
    let k = params.require_franklin()?;
    let p = params.p();
    let mut blocks = Vec::new();
    for band in 0..p {
        if Some(band) == central_band(p) {
            for i in 0..k * p {
                let mut push = |x: usize, side: Side| -> Result<()> {
                    let address = block_at(params, frame_offset, i, band * k * p + x, p)?;
                    blocks.push(BandBlock {
                        band,
                        row_in_band: i,
                        side,
                        address,
                    });
                    Ok(())
                };
                match central_row(p, k, i) {
                    CentralRow::Sole(x) => push(x, Side::Sole)?,
                    CentralRow::Pair(l, r) | CentralRow::Adjacent(l, r) => {
                        push(l, Side::Left)?;
                        push(r, Side::Right)?;
                    }
                    CentralRow::Empty => {}
                }
            }
            continue;
        }
        let j = band_pair(band, p);
        let mirrored = is_mirrored(band, p);
        for i in 0..p {
            let base = if j.is_multiple_of(2) {
                j * p + i
            } else {
                j * p + (p - 1 - i)
            };
            let col = if mirrored { p * p - 1 - base } else { base };
            blocks.push(BandBlock {
                band,
                row_in_band: i,
                side: if mirrored { Side::Right } else { Side::Left },
                address: block_at(params, frame_offset, i, col, k * p)?,
            });
        }
    }
    Ok(blocks)
}

/// Cells of `block` taken by the up pattern with split `alpha`, in block-local coordinates.
pub fn block_intersection(
    block: &BandBlock,
    alpha: usize,
    params: &TypeParams,
) -> Result<Vec<(usize, usize)>> {
    let k = params.require_franklin()?;
    let p = params.p();
    check_alpha(alpha, p)?;
    let invalid = |why: &str| {
        Err(Error::InvalidParameter(format!(
            "invalid band block: {why}"
        )))
    };
    if block.band >= p {
        return invalid("band out of range");
    }
    let first_alpha = 0..alpha;
    let last_beta = alpha..p;

    if Some(block.band) == central_band(p) {
        if block.address.block_size != p || block.row_in_band >= k * p {
            return invalid("central squares have side p and k*p rows");
        }
        let i = block.row_in_band;
        let bottom = p - 1;
        let cols = match (central_row(p, k, i), block.side) {
            (CentralRow::Sole(_), Side::Sole) => 0..p,
            (CentralRow::Adjacent(..), Side::Left | Side::Right) => 0..p,
            (CentralRow::Pair(..), Side::Left) if i.is_multiple_of(2) => first_alpha,
            (CentralRow::Pair(..), Side::Left) => last_beta,
            (CentralRow::Pair(..), Side::Right) if i.is_multiple_of(2) => last_beta,
            (CentralRow::Pair(..), Side::Right) => first_alpha,
            _ => return invalid("side does not match the central layout"),
        };
        return Ok(cols.map(|c| (bottom, c)).collect());
    }

    if block.address.block_size != k * p || block.row_in_band >= p {
        return invalid("outer blocks have side k*p and p rows");
    }
    let j = band_pair(block.band, p);
    // Sub-blocks sit on the main block diagonal exactly when row 2j opens with α cells.
    let leading = j.is_multiple_of(2) != is_mirrored(block.band, p);
    let (top, lower) = if leading {
        (first_alpha, last_beta)
    } else {
        (last_beta, first_alpha)
    };
    let mut cells = Vec::with_capacity(k * p);
    for s in 0..k {
        let sub_col = if leading { s } else { k - 1 - s };
        let (r0, c0) = (s * p, sub_col * p);
        cells.extend(top.clone().map(|c| (r0 + 2 * j, c0 + c)));
        cells.extend(lower.clone().map(|c| (r0 + 2 * j + 1, c0 + c)));
    }
    Ok(cells)
}

/// Up-pattern cells grouped by band pair `j` (`0..=(p-1)/2`, the last being the central
/// band when `p` is odd), before any rotation.
fn up_cells_by_pair(spec: &PatternSpec) -> Result<Vec<Vec<(usize, usize)>>> {
    let p = spec.params.p();
    let pairs = p / 2 + p % 2;
    let mut grouped = vec![Vec::new(); pairs];
    for block in select_blocks(&spec.params, spec.frame_offset)? {
        let local = block_intersection(&block, spec.alpha, &spec.params)?;
        let pair = band_pair(block.band, p);
        grouped[pair].extend(local.into_iter().map(|(r, c)| block.address.cell(r, c)));
    }
    Ok(grouped)
}

fn rotate_cell(cell: (usize, usize), n: usize, quarter_turns: u32) -> (usize, usize) {
    (0..quarter_turns).fold(cell, |(r, c), _| (c, n - 1 - r))
}

/// Resolves `spec` to its `n` cells.
pub fn franklin_cells(spec: &PatternSpec) -> Result<CellSet> {
    Ok(CellSet::from_unsorted(
        band_cells(spec)?.into_iter().flatten().collect(),
    ))
}

/// Cells of `spec` split by band pair: entry `j` holds the cells from bands `j` and
/// `p-1-j` (or the central band alone for `j = (p-1)/2`).
pub fn band_cells(spec: &PatternSpec) -> Result<Vec<Vec<(usize, usize)>>> {
    let n = spec.params.n();
    let turns = spec.direction.quarter_turns();
    Ok(up_cells_by_pair(spec)?
        .into_iter()
        .map(|cells| {
            cells
                .into_iter()
                .map(|c| rotate_cell(c, n, turns))
                .collect()
        })
        .collect())
}

/// Every pattern of the square in `(direction, alpha, offset)` order.
pub fn enumerate_patterns(
    params: &TypeParams,
    partitions: Partitions,
) -> Result<impl Iterator<Item = PatternSpec>> {
    params.require_franklin()?;
    let params = *params;
    let alphas = partitions.alphas(params.p())?;
    Ok(Direction::ALL.into_iter().flat_map(move |direction| {
        let alphas = alphas.clone();
        alphas.into_iter().flat_map(move |alpha| {
            (0..params.n()).map(move |frame_offset| PatternSpec {
                direction,
                alpha,
                frame_offset,
                params,
            })
        })
    }))
}
