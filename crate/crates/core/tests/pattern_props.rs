//! Randomized geometry checks on resolved Franklin patterns.

use franklin_core::{franklin_cells, Direction, PatternSpec, TypeParams};
use proptest::prelude::*;

fn spec_strategy() -> impl Strategy<Value = PatternSpec> {
    (prop::sample::select(vec![2usize, 3, 5]), 1usize..=3)
        .prop_flat_map(|(p, k)| {
            let n = k * p * p * p;
            (
                Just(p),
                Just(k),
                prop::sample::select(Direction::ALL.to_vec()),
                1..p,
                0..n,
            )
        })
        .prop_map(|(p, k, direction, alpha, offset)| {
            PatternSpec::new(
                TypeParams::franklin(p, k).unwrap(),
                direction,
                alpha,
                offset,
            )
            .unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn cell_count_and_bounds(spec in spec_strategy()) {
        let n = spec.params.n();
        let cells = franklin_cells(&spec).unwrap();
        prop_assert_eq!(cells.len(), n);
        prop_assert!(cells.iter().all(|(r, c)| r < n && c < n));
        let mut sorted = cells.cells().to_vec();
        sorted.dedup();
        prop_assert_eq!(sorted.len(), n);
    }

    #[test]
    fn rotations_follow_up_pattern(spec in spec_strategy()) {
        let n = spec.params.n();
        let up = franklin_cells(&PatternSpec { direction: Direction::Up, ..spec }).unwrap();
        let mut turned: Vec<(usize, usize)> = up
            .iter()
            .map(|cell| (0..spec.direction.quarter_turns()).fold(cell, |(r, c), _| (c, n - 1 - r)))
            .collect();
        turned.sort_unstable();
        let actual = franklin_cells(&spec).unwrap();
        prop_assert_eq!(&turned[..], actual.cells());
    }

    #[test]
    fn translation_shifts_rows(spec in spec_strategy()) {
        let n = spec.params.n();
        let base = PatternSpec { direction: Direction::Up, frame_offset: 0, ..spec };
        let moved = PatternSpec { direction: Direction::Up, ..spec };
        let mut shifted: Vec<(usize, usize)> = franklin_cells(&base)
            .unwrap()
            .iter()
            .map(|(r, c)| ((r + spec.frame_offset) % n, c))
            .collect();
        shifted.sort_unstable();
        let actual = franklin_cells(&moved).unwrap();
        prop_assert_eq!(&shifted[..], actual.cells());
    }
}
