//! Most-perfect and type-p Franklin magic squares.
//!
//! * [`grid`]: integer grids with toric indexing, natural squares, block addresses.
//! * [`params`]: the prime `p`, the order `n`, and every sum target.
//! * [`patterns`]: Franklin pattern geometry for orders `k·p³`.
//! * [`properties`]: verifiers, witnesses and classification.
//! * [`involution`]: the block involution θ and its one-sided variants.
//! * [`construct`]: seeded digit-linear search for most-perfect squares.
//! * [`fixtures`]: the embedded reference squares.

pub mod construct;
pub mod error;
pub mod fixtures;
pub mod grid;
pub mod involution;
pub mod params;
pub mod patterns;
pub mod properties;

pub use construct::{
    candidate_to_square, generate_most_perfect, search_most_perfect, DigitLinearCandidate, Family,
    GeneratorConfig, SearchOutcome,
};
pub use error::{Error, Result};
pub use fixtures::{builtin_fixtures, fixture, Fixture};
pub use grid::{block_at, BlockAddress, Grid, NaturalSquare};
pub use involution::{theta, theta_col, theta_row, theta_square, DigitSwapIndex};
pub use params::{magic_sum, TypeParams, MAX_ORDER};
pub use patterns::{
    band_cells, block_intersection, enumerate_patterns, franklin_cells, select_blocks, BandBlock,
    CellSet, Direction, Partitions, PatternSpec, Side,
};
pub use properties::{
    band_profile, band_sums, band_targets, check_complementary, check_franklin_patterns,
    check_natural, check_one_over_p, check_pandiagonal, check_pxp, check_semi_magic, check_windows,
    classify, evaluate, verify_all, Axis, BandProfile, CheckOptions, Classification, Location,
    Property, PropertyReport, PropertyVerdict, SkippedCheck, WindowTarget, Witness, Wrap,
};
