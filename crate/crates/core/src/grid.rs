//! Integer grids with toroidal indexing, and the natural squares built on them.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::params::TypeParams;

/// A rectangular, row-major array of integers.
///
/// Grids are immutable values: every transformation returns a new grid.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "GridRepr", into = "GridRepr")]
pub struct Grid {
    rows: usize,
    cols: usize,
    entries: Vec<i64>,
}

#[derive(Serialize, Deserialize)]
struct GridRepr {
    rows: usize,
    cols: usize,
    entries: Vec<i64>,
}

impl TryFrom<GridRepr> for Grid {
    type Error = Error;

    fn try_from(repr: GridRepr) -> Result<Self> {
        Grid::new(repr.rows, repr.cols, repr.entries)
    }
}

impl From<Grid> for GridRepr {
    fn from(grid: Grid) -> Self {
        GridRepr {
            rows: grid.rows,
            cols: grid.cols,
            entries: grid.entries,
        }
    }
}

impl Grid {
    pub fn new(rows: usize, cols: usize, entries: Vec<i64>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::EmptyGrid { rows, cols });
        }
        if entries.len() != rows * cols {
            return Err(Error::ShapeMismatch {
                rows,
                cols,
                expected: rows * cols,
                found: entries.len(),
            });
        }
        Ok(Grid {
            rows,
            cols,
            entries,
        })
    }

    /// Builds a grid from a list of rows, rejecting ragged input.
    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != cols {
                return Err(Error::RaggedRow {
                    row: i,
                    expected: cols,
                    found: row.len(),
                });
            }
            entries.extend_from_slice(row);
        }
        Grid::new(rows.len(), cols, entries)
    }

    /// # Panics
    /// Panics if either dimension is zero.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> i64) -> Self {
        assert!(rows > 0 && cols > 0, "grid dimensions must be positive");
        let entries = (0..rows)
            .flat_map(|r| (0..cols).map(move |c| (r, c)))
            .map(|(r, c)| f(r, c))
            .collect();
        Grid {
            rows,
            cols,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    /// # Panics
    /// Panics if `(row, col)` is out of bounds.
    pub fn get(&self, row: usize, col: usize) -> i64 {
        assert!(
            row < self.rows && col < self.cols,
            "index ({row}, {col}) out of bounds"
        );
        self.entries[row * self.cols + col]
    }

    /// Entry at `(row mod rows, col mod cols)` using the non-negative modulus, so any
    /// integer pair addresses a cell of the torus.
    pub fn get_toric(&self, row: i64, col: i64) -> i64 {
        let r = row.rem_euclid(self.rows as i64) as usize;
        let c = col.rem_euclid(self.cols as i64) as usize;
        self.entries[r * self.cols + c]
    }

    pub fn row(&self, row: usize) -> &[i64] {
        &self.entries[row * self.cols..(row + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        self.entries
            .chunks(self.cols)
            .map(<[i64]>::to_vec)
            .collect()
    }

    /// Rotates clockwise by `quarter_turns` (taken mod 4).
    ///
    /// One turn maps the entry at `(rows-1-j, i)` of the input to `(i, j)` of the output.
    pub fn rotate_cw(&self, quarter_turns: u32) -> Grid {
        let mut out = self.clone();
        for _ in 0..quarter_turns % 4 {
            let prev = out;
            out = Grid::from_fn(prev.cols, prev.rows, |i, j| prev.get(prev.rows - 1 - j, i));
        }
        out
    }

    /// Builds a grid whose rows and columns are drawn from `self` through the given
    /// index maps: `out[i][j] = self[row_map[i]][col_map[j]]`.
    pub(crate) fn permuted(&self, row_map: &[usize], col_map: &[usize]) -> Grid {
        Grid::from_fn(row_map.len(), col_map.len(), |i, j| {
            self.get(row_map[i], col_map[j])
        })
    }

    /// The `rows × cols` rectangle with top-left corner `(row0, col0)`, without wrapping.
    pub fn subgrid(&self, row0: usize, col0: usize, rows: usize, cols: usize) -> Result<Grid> {
        if rows == 0 || cols == 0 || row0 + rows > self.rows || col0 + cols > self.cols {
            return Err(Error::InvalidParameter(format!(
                "{rows}x{cols} rectangle at ({row0}, {col0}) does not fit in {}x{}",
                self.rows, self.cols
            )));
        }
        Ok(Grid::from_fn(rows, cols, |r, c| {
            self.get(row0 + r, col0 + c)
        }))
    }

    /// Parses bare comma-separated rows. Blank lines are ignored; whitespace around
    /// tokens is allowed.
    pub fn from_csv(text: &str) -> Result<Self> {
        let mut rows: Vec<Vec<i64>> = Vec::new();
        for (idx, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let row = line
                .split(',')
                .map(|tok| {
                    let tok = tok.trim();
                    tok.parse::<i64>().map_err(|_| Error::Parse {
                        line: idx + 1,
                        message: format!("{tok:?} is not an integer"),
                    })
                })
                .collect::<Result<Vec<i64>>>()?;
            rows.push(row);
        }
        Grid::from_rows(&rows)
    }

    /// One comma-separated line per row, newline-terminated.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for r in 0..self.rows {
            let line: Vec<String> = self.row(r).iter().map(i64::to_string).collect();
            out.push_str(&line.join(","));
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for Grid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self
            .entries
            .iter()
            .map(|v| v.to_string().len())
            .max()
            .unwrap_or(1);
        for r in 0..self.rows {
            for (c, v) in self.row(r).iter().enumerate() {
                if c > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{v:>width$}")?;
            }
            f.write_str("\n")?;
        }
        Ok(())
    }
}

/// An order-`n` square whose entries are exactly `0, 1, ..., n²-1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Grid", into = "Grid")]
pub struct NaturalSquare {
    grid: Grid,
}

impl NaturalSquare {
    pub fn new(grid: Grid) -> Result<Self> {
        if !grid.is_square() {
            return Err(Error::NotSquare {
                rows: grid.rows,
                cols: grid.cols,
            });
        }
        if let Some(problem) = natural_defect(&grid) {
            return Err(Error::NotNatural(problem));
        }
        Ok(NaturalSquare { grid })
    }

    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        NaturalSquare::new(Grid::from_rows(rows)?)
    }

    /// Wraps a grid already known to be natural (e.g. an entry permutation of one).
    pub(crate) fn from_grid_unchecked(grid: Grid) -> Self {
        debug_assert!(grid.is_square() && natural_defect(&grid).is_none());
        NaturalSquare { grid }
    }

    pub fn order(&self) -> usize {
        self.grid.rows
    }

    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    pub fn into_grid(self) -> Grid {
        self.grid
    }

    pub fn get(&self, row: usize, col: usize) -> i64 {
        self.grid.get(row, col)
    }

    pub fn get_toric(&self, row: i64, col: i64) -> i64 {
        self.grid.get_toric(row, col)
    }

    pub fn rotate_cw(&self, quarter_turns: u32) -> NaturalSquare {
        NaturalSquare::from_grid_unchecked(self.grid.rotate_cw(quarter_turns))
    }
}

impl AsRef<Grid> for NaturalSquare {
    fn as_ref(&self) -> &Grid {
        &self.grid
    }
}

impl From<NaturalSquare> for Grid {
    fn from(square: NaturalSquare) -> Grid {
        square.grid
    }
}

impl TryFrom<Grid> for NaturalSquare {
    type Error = Error;

    fn try_from(grid: Grid) -> Result<Self> {
        NaturalSquare::new(grid)
    }
}

/// Describes the first reason `grid` is not natural, scanning cells in row-major order.
pub(crate) fn natural_defect(grid: &Grid) -> Option<String> {
    let total = grid.entries.len();
    let mut seen = vec![false; total];
    for (idx, &v) in grid.entries.iter().enumerate() {
        let (r, c) = (idx / grid.cols, idx % grid.cols);
        if v < 0 || v as u64 >= total as u64 {
            return Some(format!("entry {v} at ({r}, {c}) is outside 0..{total}"));
        }
        if std::mem::replace(&mut seen[v as usize], true) {
            return Some(format!("symbol {v} repeated at ({r}, {c})"));
        }
    }
    None
}

/// One block of a toric partition: `block_size` consecutive rows starting at
/// `row_origin` (wrapping) and `block_size` columns starting at `col_origin`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BlockAddress {
    pub block_row: usize,
    pub block_col: usize,
    pub block_size: usize,
    pub row_origin: usize,
    pub col_origin: usize,
    pub order: usize,
}

impl BlockAddress {
    /// Absolute toric coordinates of block-local cell `(row, col)`.
    pub fn cell(&self, row: usize, col: usize) -> (usize, usize) {
        debug_assert!(row < self.block_size && col < self.block_size);
        (
            (self.row_origin + row) % self.order,
            (self.col_origin + col) % self.order,
        )
    }

    pub fn rows(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.block_size).map(move |r| (self.row_origin + r) % self.order)
    }

    pub fn cols(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.block_size).map(move |c| (self.col_origin + c) % self.order)
    }
}

/// Locates block `(block_row, block_col)` of side `block_size` in a partition whose
/// first block row starts at absolute row `frame_offset`.
pub fn block_at(
    params: &TypeParams,
    frame_offset: usize,
    block_row: usize,
    block_col: usize,
    block_size: usize,
) -> Result<BlockAddress> {
    let n = params.n();
    if block_size == 0 || !n.is_multiple_of(block_size) {
        return Err(Error::Divisibility(format!(
            "block size {block_size} does not divide order {n}"
        )));
    }
    let per_side = n / block_size;
    if block_row >= per_side || block_col >= per_side {
        return Err(Error::InvalidParameter(format!(
            "block ({block_row}, {block_col}) outside a {per_side}x{per_side} partition"
        )));
    }
    Ok(BlockAddress {
        block_row,
        block_col,
        block_size,
        row_origin: (frame_offset + block_row * block_size) % n,
        col_origin: block_col * block_size,
        order: n,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn reading_order(n: usize) -> Grid {
        Grid::from_fn(n, n, |r, c| (r * n + c) as i64)
    }

    #[test]
    fn rejects_bad_shapes() {
        assert!(matches!(
            Grid::new(0, 3, vec![]),
            Err(Error::EmptyGrid { .. })
        ));
        assert!(matches!(
            Grid::new(2, 2, vec![1, 2, 3]),
            Err(Error::ShapeMismatch { found: 3, .. })
        ));
        assert!(matches!(
            Grid::from_rows(&[vec![1, 2], vec![3]]),
            Err(Error::RaggedRow { row: 1, .. })
        ));
    }

    #[test]
    fn natural_square_validation() {
        assert!(NaturalSquare::new(reading_order(4)).is_ok());
        let dup = Grid::from_rows(&[[0, 1], [1, 3]]).unwrap();
        assert!(matches!(NaturalSquare::new(dup), Err(Error::NotNatural(_))));
        let out_of_range = Grid::from_rows(&[[0, 1], [2, 4]]).unwrap();
        assert!(matches!(
            NaturalSquare::new(out_of_range),
            Err(Error::NotNatural(_))
        ));
        let rect = Grid::from_rows(&[[0, 1, 2]]).unwrap();
        assert!(matches!(
            NaturalSquare::new(rect),
            Err(Error::NotSquare { .. })
        ));
    }

    #[test]
    fn rotate_small() {
        let g = Grid::from_rows(&[[0, 1], [2, 3]]).unwrap();
        assert_eq!(g.rotate_cw(0), g);
        assert_eq!(g.rotate_cw(1), Grid::from_rows(&[[2, 0], [3, 1]]).unwrap());
        assert_eq!(g.rotate_cw(2), Grid::from_rows(&[[3, 2], [1, 0]]).unwrap());
    }

    #[test]
    fn rotate_rectangular() {
        let g = Grid::from_rows(&[[1, 2, 3], [4, 5, 6]]).unwrap();
        let r = g.rotate_cw(1);
        assert_eq!((r.rows(), r.cols()), (3, 2));
        assert_eq!(r, Grid::from_rows(&[[4, 1], [5, 2], [6, 3]]).unwrap());
        assert_eq!(r.rotate_cw(3), g);
    }

    #[test]
    fn toric_access_wraps_negative_indices() {
        let g = reading_order(3);
        assert_eq!(g.get_toric(-1, -1), 8);
        assert_eq!(g.get_toric(3, 4), 1);
        assert_eq!(g.get_toric(-4, 0), 6);
    }

    #[test]
    fn block_addresses() {
        let p8 = TypeParams::new(2, 8).unwrap();
        let b = block_at(&p8, 1, 0, 0, 2).unwrap();
        assert_eq!(b.rows().collect::<Vec<_>>(), vec![1, 2]);
        assert_eq!(b.cols().collect::<Vec<_>>(), vec![0, 1]);

        let p27 = TypeParams::new(3, 27).unwrap();
        let b = block_at(&p27, 0, 2, 8, 3).unwrap();
        assert_eq!(b.rows().collect::<Vec<_>>(), vec![6, 7, 8]);
        assert_eq!(b.cols().collect::<Vec<_>>(), vec![24, 25, 26]);

        let b = block_at(&p27, 26, 0, 0, 3).unwrap();
        assert_eq!(b.rows().collect::<Vec<_>>(), vec![26, 0, 1]);
        assert_eq!(b.cell(2, 2), (1, 2));

        assert!(matches!(
            block_at(&p27, 0, 0, 0, 4),
            Err(Error::Divisibility(_))
        ));
        assert!(matches!(
            block_at(&p27, 0, 9, 0, 3),
            Err(Error::InvalidParameter(_))
        ));
    }

    proptest! {
        #[test]
        fn toric_access_is_periodic(rows in 1usize..7, cols in 1usize..7, r in -50i64..50, c in -50i64..50) {
            let g = Grid::from_fn(rows, cols, |i, j| (i * 31 + j * 7) as i64);
            let v = g.get_toric(r, c);
            prop_assert_eq!(v, g.get_toric(r + rows as i64, c));
            prop_assert_eq!(v, g.get_toric(r, c - cols as i64));
        }

        #[test]
        fn four_quarter_turns_is_identity(n in 1usize..9, turns in 0u32..4) {
            let sq = NaturalSquare::new(reading_order(n)).unwrap();
            let mut s = sq.clone();
            for _ in 0..4 {
                s = s.rotate_cw(1);
            }
            prop_assert_eq!(&s, &sq);
            let composed = (0..turns).fold(sq.clone(), |acc, _| acc.rotate_cw(1));
            prop_assert_eq!(composed, sq.rotate_cw(turns));
        }
    }
}
