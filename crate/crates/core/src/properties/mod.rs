//! Verifiers for every line, window and pattern sum a type-p square can carry, and the
//! classification built from them.
//!
//! Every check scans in a fixed order and reports the first failure as a [`Witness`]
//! whose [`Location`] can be re-evaluated with [`evaluate`].

pub mod identities;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::{natural_defect, Grid};
use crate::params::TypeParams;
use crate::patterns::{
    band_cells, enumerate_patterns, franklin_cells, Direction, Partitions, PatternSpec,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Property {
    Natural,
    SemiMagic,
    Pandiagonal,
    Complementary,
    Pxp,
    OneOverPRows,
    OneOverPCols,
    FranklinPatterns,
}

impl Property {
    pub const ALL: [Property; 8] = [
        Property::Natural,
        Property::SemiMagic,
        Property::Pandiagonal,
        Property::Complementary,
        Property::Pxp,
        Property::OneOverPRows,
        Property::OneOverPCols,
        Property::FranklinPatterns,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Property::Natural => "natural",
            Property::SemiMagic => "semi_magic",
            Property::Pandiagonal => "pandiagonal",
            Property::Complementary => "complementary",
            Property::Pxp => "pxp",
            Property::OneOverPRows => "one_over_p_rows",
            Property::OneOverPCols => "one_over_p_cols",
            Property::FranklinPatterns => "franklin_patterns",
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Axis {
    Rows,
    Cols,
}

/// Where a witnessed sum was taken. Sums are re-computable with [`evaluate`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Location {
    /// Occurrence count of a symbol (naturality).
    Symbol {
        value: i64,
    },
    Row {
        index: usize,
    },
    Column {
        index: usize,
    },
    /// Broken diagonal `(i, i + offset)`.
    Diagonal {
        offset: usize,
    },
    /// Broken anti-diagonal `(i, offset - i)`.
    AntiDiagonal {
        offset: usize,
    },
    /// `p` cells from `(row, col)` stepping `n/p` down and right.
    Complement {
        row: usize,
        col: usize,
    },
    /// `p` cells from `(row, col)` stepping `n/p` down and left.
    AntiComplement {
        row: usize,
        col: usize,
    },
    /// Toric `p×p` window with top-left corner `(row, col)`.
    Window {
        row: usize,
        col: usize,
    },
    Segment {
        axis: Axis,
        line: usize,
        segment: usize,
    },
    Pattern {
        direction: Direction,
        alpha: usize,
        offset: usize,
    },
}

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Location::Symbol { value } => write!(f, "symbol {value}"),
            Location::Row { index } => write!(f, "row {index}"),
            Location::Column { index } => write!(f, "column {index}"),
            Location::Diagonal { offset } => write!(f, "diagonal offset {offset}"),
            Location::AntiDiagonal { offset } => write!(f, "anti-diagonal offset {offset}"),
            Location::Complement { row, col } => {
                write!(f, "complementary cells from ({row}, {col})")
            }
            Location::AntiComplement { row, col } => {
                write!(f, "anti-complementary cells from ({row}, {col})")
            }
            Location::Window { row, col } => write!(f, "window at ({row}, {col})"),
            Location::Segment {
                axis,
                line,
                segment,
            } => {
                let name = match axis {
                    Axis::Rows => "row",
                    Axis::Cols => "column",
                };
                write!(f, "{name} {line} segment {segment}")
            }
            Location::Pattern {
                direction,
                alpha,
                offset,
            } => write!(f, "{direction} pattern alpha={alpha} offset={offset}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Witness {
    pub location: Location,
    pub expected: i64,
    pub actual: i64,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: expected {}, found {}",
            self.location, self.expected, self.actual
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PropertyVerdict {
    pub property: Property,
    pub passed: bool,
    pub witness: Option<Witness>,
}

impl PropertyVerdict {
    pub fn pass(property: Property) -> Self {
        PropertyVerdict {
            property,
            passed: true,
            witness: None,
        }
    }

    pub fn fail(property: Property, witness: Witness) -> Self {
        PropertyVerdict {
            property,
            passed: false,
            witness: Some(witness),
        }
    }

    fn from_first_failure(property: Property, failure: Option<Witness>) -> Self {
        match failure {
            Some(w) => PropertyVerdict::fail(property, w),
            None => PropertyVerdict::pass(property),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Classification {
    None,
    SemiMagic,
    PandiagonalMagic,
    MostPerfectTypeP,
    FranklinTypeP,
    PandiagonalFranklinTypeP,
}

impl Classification {
    /// Highest label first.
    pub const PRIORITY: [Classification; 5] = [
        Classification::PandiagonalFranklinTypeP,
        Classification::FranklinTypeP,
        Classification::MostPerfectTypeP,
        Classification::PandiagonalMagic,
        Classification::SemiMagic,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Classification::None => "none",
            Classification::SemiMagic => "semi_magic",
            Classification::PandiagonalMagic => "pandiagonal_magic",
            Classification::MostPerfectTypeP => "most_perfect_type_p",
            Classification::FranklinTypeP => "franklin_type_p",
            Classification::PandiagonalFranklinTypeP => "pandiagonal_franklin_type_p",
        }
    }

    /// Verdicts that must all pass for this label.
    pub fn requirements(self) -> &'static [Property] {
        use Property::*;
        match self {
            Classification::None => &[],
            Classification::SemiMagic => &[Natural, SemiMagic],
            Classification::PandiagonalMagic => &[Natural, SemiMagic, Pandiagonal],
            Classification::MostPerfectTypeP => {
                &[Natural, SemiMagic, Pandiagonal, Complementary, Pxp]
            }
            Classification::FranklinTypeP => {
                &[Natural, Pxp, OneOverPRows, OneOverPCols, FranklinPatterns]
            }
            Classification::PandiagonalFranklinTypeP => &[
                Natural,
                SemiMagic,
                Pandiagonal,
                Pxp,
                OneOverPRows,
                OneOverPCols,
                FranklinPatterns,
            ],
        }
    }

    /// Whether `self` is at least as strong as `other` on the label lattice.
    pub fn satisfies(self, other: Classification) -> bool {
        if self == other || other == Classification::None {
            return true;
        }
        let passed: Vec<Property> = self.requirements().to_vec();
        other.requirements().iter().all(|p| passed.contains(p))
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Classification {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        [Classification::None]
            .into_iter()
            .chain(Classification::PRIORITY)
            .find(|c| c.as_str() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown classification {s:?}")))
    }
}

/// A check that was not run because the order does not admit it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SkippedCheck {
    pub property: Property,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyReport {
    pub params: TypeParams,
    pub verdicts: Vec<PropertyVerdict>,
    pub skipped: Vec<SkippedCheck>,
    pub classification: Classification,
}

impl PropertyReport {
    pub fn verdict(&self, property: Property) -> Option<&PropertyVerdict> {
        self.verdicts.iter().find(|v| v.property == property)
    }

    pub fn passed(&self, property: Property) -> bool {
        self.verdict(property).is_some_and(|v| v.passed)
    }

    /// Whether every requirement of `label` passed, independent of the assigned label.
    pub fn meets(&self, label: Classification) -> bool {
        label.requirements().iter().all(|&p| self.passed(p))
    }
}

/// Computes the strongest label whose requirements all passed.
pub fn classify(verdicts: &[PropertyVerdict]) -> Classification {
    let passed: BTreeMap<Property, bool> =
        verdicts.iter().map(|v| (v.property, v.passed)).collect();
    Classification::PRIORITY
        .into_iter()
        .find(|c| {
            c.requirements()
                .iter()
                .all(|p| passed.get(p).copied().unwrap_or(false))
        })
        .unwrap_or(Classification::None)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct CheckOptions {
    pub partitions: Partitions,
    /// Also require complementary sums along broken anti-diagonals.
    pub anti_complementary: bool,
}

impl CheckOptions {
    pub fn weakened(alpha: usize) -> Self {
        CheckOptions {
            partitions: Partitions::One(alpha),
            ..CheckOptions::default()
        }
    }
}

/// Target of a window check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum WindowTarget {
    /// Every window must sum to this value.
    Pinned(i64),
    /// Every window must match the first one.
    Equal,
}

/// Which windows a window check ranges over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Wrap {
    Toric,
    /// Only windows lying fully inside the grid.
    Interior,
}

fn ensure_order(grid: &Grid, params: &TypeParams) -> Result<usize> {
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
    Ok(params.n())
}

fn first_mismatch(
    expected: i64,
    sums: impl IntoIterator<Item = (Location, i64)>,
) -> Option<Witness> {
    sums.into_iter()
        .find(|&(_, actual)| actual != expected)
        .map(|(location, actual)| Witness {
            location,
            expected,
            actual,
        })
}

/// Entries are exactly `0..n²`. A witness names the first offending symbol in row-major
/// order together with its expected and actual occurrence counts.
pub fn check_natural(grid: &Grid) -> PropertyVerdict {
    if natural_defect(grid).is_none() && grid.is_square() {
        return PropertyVerdict::pass(Property::Natural);
    }
    let cells = grid.entries().len() as i64;
    let mut counts: BTreeMap<i64, i64> = BTreeMap::new();
    for &v in grid.entries() {
        *counts.entry(v).or_default() += 1;
    }
    let offending = grid
        .entries()
        .iter()
        .copied()
        .find(|v| !(0..cells).contains(v) || counts[v] > 1)
        .or_else(|| (0..cells).find(|v| !counts.contains_key(v)));
    match offending {
        Some(value) => PropertyVerdict::fail(
            Property::Natural,
            Witness {
                location: Location::Symbol { value },
                expected: i64::from((0..cells).contains(&value)),
                actual: counts.get(&value).copied().unwrap_or(0),
            },
        ),
        // Only reachable for non-square grids holding 0..rows*cols.
        None => PropertyVerdict::fail(
            Property::Natural,
            Witness {
                location: Location::Row { index: 0 },
                expected: grid.cols() as i64,
                actual: grid.rows() as i64,
            },
        ),
    }
}

fn row_sum(grid: &Grid, r: usize) -> i64 {
    grid.row(r).iter().sum()
}

fn col_sum(grid: &Grid, c: usize) -> i64 {
    (0..grid.rows()).map(|r| grid.get(r, c)).sum()
}

fn diagonal_sum(grid: &Grid, offset: usize) -> i64 {
    let n = grid.rows();
    (0..n).map(|i| grid.get(i, (i + offset) % n)).sum()
}

fn anti_diagonal_sum(grid: &Grid, offset: usize) -> i64 {
    let n = grid.rows();
    (0..n).map(|i| grid.get(i, (offset + n - i % n) % n)).sum()
}

fn complement_sum(grid: &Grid, p: usize, row: usize, col: usize, anti: bool) -> i64 {
    let n = grid.rows();
    let step = n / p;
    (0..p)
        .map(|t| {
            let r = (row + t * step) % n;
            let c = if anti {
                (col + n - (t * step) % n) % n
            } else {
                (col + t * step) % n
            };
            grid.get(r, c)
        })
        .sum()
}

fn window_sum(grid: &Grid, p: usize, row: usize, col: usize) -> i64 {
    (0..p)
        .flat_map(|dr| (0..p).map(move |dc| (dr, dc)))
        .map(|(dr, dc)| grid.get_toric((row + dr) as i64, (col + dc) as i64))
        .sum()
}

fn segment_sum(grid: &Grid, p: usize, axis: Axis, line: usize, segment: usize) -> i64 {
    let len = grid.rows() / p;
    let range = segment * len..(segment + 1) * len;
    match axis {
        Axis::Rows => range.map(|c| grid.get(line, c)).sum(),
        Axis::Cols => range.map(|r| grid.get(r, line)).sum(),
    }
}

/// Every row, then every column, sums to the magic sum.
pub fn check_semi_magic(grid: &Grid, params: &TypeParams) -> Result<PropertyVerdict> {
    let n = ensure_order(grid, params)?;
    let rows = (0..n).map(|r| (Location::Row { index: r }, row_sum(grid, r)));
    let cols = (0..n).map(|c| (Location::Column { index: c }, col_sum(grid, c)));
    Ok(PropertyVerdict::from_first_failure(
        Property::SemiMagic,
        first_mismatch(params.magic_sum(), rows.chain(cols)),
    ))
}

/// All `n` broken diagonals, then all `n` broken anti-diagonals, sum to the magic sum.
pub fn check_pandiagonal(grid: &Grid, params: &TypeParams) -> Result<PropertyVerdict> {
    let n = ensure_order(grid, params)?;
    let diagonals = (0..n).map(|c| (Location::Diagonal { offset: c }, diagonal_sum(grid, c)));
    let anti = (0..n).map(|c| {
        (
            Location::AntiDiagonal { offset: c },
            anti_diagonal_sum(grid, c),
        )
    });
    Ok(PropertyVerdict::from_first_failure(
        Property::Pandiagonal,
        first_mismatch(params.magic_sum(), diagonals.chain(anti)),
    ))
}

/// For every cell, the `p` cells spaced `n/p` apart along its broken main diagonal sum
/// to `p(n²-1)/2`. With `anti` set, the anti-diagonal spacing is required as well.
pub fn check_complementary(
    grid: &Grid,
    params: &TypeParams,
    anti: bool,
) -> Result<PropertyVerdict> {
    let n = ensure_order(grid, params)?;
    let target = params.complement_sum()?;
    let p = params.p();
    let cells = (0..n).flat_map(|r| (0..n).map(move |c| (r, c)));
    let main = cells.clone().map(|(r, c)| {
        (
            Location::Complement { row: r, col: c },
            complement_sum(grid, p, r, c, false),
        )
    });
    let failure = if anti {
        let anti_sums = cells.map(|(r, c)| {
            (
                Location::AntiComplement { row: r, col: c },
                complement_sum(grid, p, r, c, true),
            )
        });
        first_mismatch(target, main.chain(anti_sums))
    } else {
        first_mismatch(target, main)
    };
    Ok(PropertyVerdict::from_first_failure(
        Property::Complementary,
        failure,
    ))
}

/// Every toric `p×p` window sums to `p²(n²-1)/2`.
pub fn check_pxp(grid: &Grid, params: &TypeParams) -> Result<PropertyVerdict> {
    ensure_order(grid, params)?;
    check_windows(
        grid,
        params.p(),
        WindowTarget::Pinned(params.pxp_sum()?),
        Wrap::Toric,
    )
}

/// Window check on an arbitrary grid, in row-major order of the top-left corner.
pub fn check_windows(
    grid: &Grid,
    p: usize,
    target: WindowTarget,
    wrap: Wrap,
) -> Result<PropertyVerdict> {
    if p == 0 || grid.rows() < p || grid.cols() < p {
        return Err(Error::InvalidParameter(format!(
            "a {}x{} grid has no {p}x{p} windows",
            grid.rows(),
            grid.cols()
        )));
    }
    let (row_starts, col_starts) = match wrap {
        Wrap::Toric => (grid.rows(), grid.cols()),
        Wrap::Interior => (grid.rows() - p + 1, grid.cols() - p + 1),
    };
    let sums = window_sums(grid, p, row_starts, col_starts);
    let expected = match target {
        WindowTarget::Pinned(t) => t,
        WindowTarget::Equal => sums[0],
    };
    let failure = sums.iter().position(|&s| s != expected).map(|i| Witness {
        location: Location::Window {
            row: i / col_starts,
            col: i % col_starts,
        },
        expected,
        actual: sums[i],
    });
    Ok(PropertyVerdict::from_first_failure(Property::Pxp, failure))
}

/// Sliding toric window sums, row-major over the first `row_starts × col_starts` corners.
fn window_sums(grid: &Grid, p: usize, row_starts: usize, col_starts: usize) -> Vec<i64> {
    let (rows, cols) = (grid.rows(), grid.cols());
    let horizontal: Vec<Vec<i64>> = (0..rows)
        .map(|r| {
            let line = grid.row(r);
            let mut acc: i64 = (0..p).map(|c| line[c % cols]).sum();
            let mut out = Vec::with_capacity(col_starts);
            for c in 0..col_starts {
                out.push(acc);
                acc += line[(c + p) % cols] - line[c];
            }
            out
        })
        .collect();
    let mut sums = vec![0i64; row_starts * col_starts];
    for c in 0..col_starts {
        let mut acc: i64 = (0..p).map(|r| horizontal[r % rows][c]).sum();
        for r in 0..row_starts {
            sums[r * col_starts + c] = acc;
            acc += horizontal[(r + p) % rows][c] - horizontal[r][c];
        }
    }
    sums
}

/// Each row (or column) split into `p` aligned segments of length `n/p`, every segment
/// summing to `n(n²-1)/(2p)`. Scan is line-major, then segment.
pub fn check_one_over_p(grid: &Grid, params: &TypeParams, axis: Axis) -> Result<PropertyVerdict> {
    let n = ensure_order(grid, params)?;
    let target = params.segment_sum()?;
    let p = params.p();
    let sums = (0..n).flat_map(|line| {
        (0..p).map(move |segment| {
            (
                Location::Segment {
                    axis,
                    line,
                    segment,
                },
                segment_sum(grid, p, axis, line, segment),
            )
        })
    });
    let property = match axis {
        Axis::Rows => Property::OneOverPRows,
        Axis::Cols => Property::OneOverPCols,
    };
    Ok(PropertyVerdict::from_first_failure(
        property,
        first_mismatch(target, sums),
    ))
}

/// Every Franklin pattern of the selected partitions sums to the magic sum, scanned in
/// `(direction, alpha, offset)` order.
pub fn check_franklin_patterns(
    grid: &Grid,
    params: &TypeParams,
    partitions: Partitions,
) -> Result<PropertyVerdict> {
    ensure_order(grid, params)?;
    let target = params.magic_sum();
    for spec in enumerate_patterns(params, partitions)? {
        let actual = franklin_cells(&spec)?.sum(grid);
        if actual != target {
            return Ok(PropertyVerdict::fail(
                Property::FranklinPatterns,
                Witness {
                    location: pattern_location(&spec),
                    expected: target,
                    actual,
                },
            ));
        }
    }
    Ok(PropertyVerdict::pass(Property::FranklinPatterns))
}

fn pattern_location(spec: &PatternSpec) -> Location {
    Location::Pattern {
        direction: spec.direction,
        alpha: spec.alpha,
        offset: spec.frame_offset,
    }
}

/// Runs every check the order admits and classifies the square.
pub fn verify_all(
    grid: &Grid,
    params: &TypeParams,
    options: &CheckOptions,
) -> Result<PropertyReport> {
    ensure_order(grid, params)?;
    options.partitions.alphas(params.p())?;
    let mut verdicts = vec![check_natural(grid)];
    let mut skipped = Vec::new();
    let mut record = |property: Property, outcome: Result<PropertyVerdict>| -> Result<()> {
        match outcome {
            Ok(v) => verdicts.push(v),
            Err(Error::Divisibility(reason)) => skipped.push(SkippedCheck { property, reason }),
            Err(e) => return Err(e),
        }
        Ok(())
    };
    record(Property::SemiMagic, check_semi_magic(grid, params))?;
    record(Property::Pandiagonal, check_pandiagonal(grid, params))?;
    record(
        Property::Complementary,
        check_complementary(grid, params, options.anti_complementary),
    )?;
    record(Property::Pxp, check_pxp(grid, params))?;
    record(
        Property::OneOverPRows,
        check_one_over_p(grid, params, Axis::Rows),
    )?;
    record(
        Property::OneOverPCols,
        check_one_over_p(grid, params, Axis::Cols),
    )?;
    record(
        Property::FranklinPatterns,
        check_franklin_patterns(grid, params, options.partitions),
    )?;
    let classification = classify(&verdicts);
    Ok(PropertyReport {
        params: *params,
        verdicts,
        skipped,
        classification,
    })
}

/// Re-computes the quantity a witness location refers to.
pub fn evaluate(grid: &Grid, params: &TypeParams, location: &Location) -> Result<i64> {
    let n = ensure_order(grid, params)?;
    let p = params.p();
    let in_range = |i: usize| -> Result<usize> {
        if i < n {
            Ok(i)
        } else {
            Err(Error::InvalidParameter(format!("index {i} outside 0..{n}")))
        }
    };
    Ok(match *location {
        Location::Symbol { value } => grid.entries().iter().filter(|&&v| v == value).count() as i64,
        Location::Row { index } => row_sum(grid, in_range(index)?),
        Location::Column { index } => col_sum(grid, in_range(index)?),
        Location::Diagonal { offset } => diagonal_sum(grid, in_range(offset)?),
        Location::AntiDiagonal { offset } => anti_diagonal_sum(grid, in_range(offset)?),
        Location::Complement { row, col } | Location::AntiComplement { row, col } => {
            params.require_divides()?;
            let anti = matches!(location, Location::AntiComplement { .. });
            complement_sum(grid, p, in_range(row)?, in_range(col)?, anti)
        }
        Location::Window { row, col } => window_sum(grid, p, in_range(row)?, in_range(col)?),
        Location::Segment {
            axis,
            line,
            segment,
        } => {
            params.require_divides()?;
            if segment >= p {
                return Err(Error::InvalidParameter(format!(
                    "segment {segment} outside 0..{p}"
                )));
            }
            segment_sum(grid, p, axis, in_range(line)?, segment)
        }
        Location::Pattern {
            direction,
            alpha,
            offset,
        } => franklin_cells(&PatternSpec::new(*params, direction, alpha, offset)?)?.sum(grid),
    })
}

/// Expected per-band-pair sums of a Franklin pattern on a square of the form `θ(R)`:
/// `n(n²-1)/p` for each outer pair, `n(n²-1)/(2p)` for the central band.
pub fn band_targets(params: &TypeParams) -> Result<Vec<i64>> {
    params.require_franklin()?;
    let (n, p) = (params.n() as i64, params.p() as i64);
    let base = n * (n * n - 1);
    let mut targets = vec![base / p; (p / 2) as usize];
    if p % 2 == 1 {
        targets.push(base / (2 * p));
    }
    Ok(targets)
}

/// Pattern sum split by band pair.
pub fn band_sums(grid: &Grid, spec: &PatternSpec) -> Result<Vec<i64>> {
    ensure_order(grid, &spec.params)?;
    Ok(band_cells(spec)?
        .into_iter()
        .map(|cells| cells.into_iter().map(|(r, c)| grid.get(r, c)).sum())
        .collect())
}

/// Range of one band-pair sum over a family of patterns.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BandProfile {
    pub pair: usize,
    pub target: i64,
    pub min: i64,
    pub max: i64,
}

impl BandProfile {
    pub fn uniform_at_target(&self) -> bool {
        self.min == self.target && self.max == self.target
    }
}

/// Minimum and maximum of every band-pair sum over all selected patterns.
pub fn band_profile(
    grid: &Grid,
    params: &TypeParams,
    partitions: Partitions,
) -> Result<Vec<BandProfile>> {
    let targets = band_targets(params)?;
    let mut profile: Vec<BandProfile> = targets
        .iter()
        .enumerate()
        .map(|(pair, &target)| BandProfile {
            pair,
            target,
            min: i64::MAX,
            max: i64::MIN,
        })
        .collect();
    for spec in enumerate_patterns(params, partitions)? {
        for (entry, sum) in profile.iter_mut().zip(band_sums(grid, &spec)?) {
            entry.min = entry.min.min(sum);
            entry.max = entry.max.max(sum);
        }
    }
    Ok(profile)
}
