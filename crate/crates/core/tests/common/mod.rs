//! Random grid generators shared by the integration tests.
#![allow(dead_code)]

use franklin_core::Grid;
use rand::seq::SliceRandom;
use rand::Rng;

/// Grid whose interior `p×p` windows all share one sum: the first `p-1` rows and
/// columns are random and every other cell closes the window ending at it. A constant
/// shift keeps entries non-negative.
pub fn window_grid(rows: usize, cols: usize, p: usize, rng: &mut impl Rng) -> Grid {
    assert!(rows >= p && cols >= p);
    let target: i64 = rng.gen_range(0..50 * (p * p) as i64);
    let mut a = vec![vec![0i64; cols]; rows];
    for (r, row) in a.iter_mut().enumerate() {
        for (c, cell) in row.iter_mut().enumerate() {
            if r < p - 1 || c < p - 1 {
                *cell = rng.gen_range(0..50);
            }
        }
    }
    for r in p - 1..rows {
        for c in p - 1..cols {
            let others: i64 = (r + 1 - p..=r)
                .flat_map(|i| (c + 1 - p..=c).map(move |j| (i, j)))
                .filter(|&(i, j)| (i, j) != (r, c))
                .map(|(i, j)| a[i][j])
                .sum();
            a[r][c] = target - others;
        }
    }
    let min = a.iter().flatten().copied().min().unwrap_or(0).min(0);
    Grid::from_fn(rows, cols, |r, c| a[r][c] - min)
}

/// Doubly periodic grid with period `p` plus a row term periodic in `p` with zero sum
/// over a period: all windows, wrapping or not, share one sum when `p` divides both
/// dimensions.
pub fn periodic_window_grid(rows: usize, cols: usize, p: usize, rng: &mut impl Rng) -> Grid {
    let base: Vec<Vec<i64>> = (0..p)
        .map(|_| (0..p).map(|_| rng.gen_range(0..30)).collect())
        .collect();
    let mut drift: Vec<i64> = (0..p).map(|_| rng.gen_range(-10..10)).collect();
    let mean: i64 = drift.iter().sum();
    drift[0] -= mean;
    let grid = Grid::from_fn(rows, cols, |r, c| {
        base[r % p][c % p] + drift[r % p] * c as i64
    });
    let min = grid.entries().iter().copied().min().unwrap_or(0).min(0);
    Grid::from_fn(rows, cols, |r, c| grid.get(r, c) - min)
}

/// `a(i, j) = x_i + y_j`, which satisfies the 2×2 cross identity everywhere.
pub fn cross_grid(m: usize, rng: &mut impl Rng) -> Grid {
    let x: Vec<i64> = (0..m).map(|_| rng.gen_range(0..100)).collect();
    let y: Vec<i64> = (0..m).map(|_| rng.gen_range(0..100)).collect();
    Grid::from_fn(m, m, |i, j| x[i] + y[j])
}

pub fn random_permutation(m: usize, rng: &mut impl Rng) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..m).collect();
    perm.shuffle(rng);
    perm
}

/// A uniformly random natural square of order `n`.
pub fn random_natural(n: usize, rng: &mut impl Rng) -> Grid {
    let mut symbols: Vec<i64> = (0..(n * n) as i64).collect();
    symbols.shuffle(rng);
    Grid::new(n, n, symbols).expect("n*n entries")
}

pub fn reading_order(n: usize) -> Grid {
    Grid::from_fn(n, n, |r, c| (r * n + c) as i64)
}

/// The 27 cells of the up pattern with `alpha = 1` and frame offset 2 on the order-27
/// reference square.
pub const BOXED_W: [(usize, usize); 27] = [
    (2, 0),
    (2, 25),
    (2, 26),
    (3, 1),
    (3, 2),
    (3, 24),
    (4, 12),
    (4, 13),
    (4, 14),
    (5, 3),
    (5, 22),
    (5, 23),
    (6, 4),
    (6, 5),
    (6, 21),
    (7, 10),
    (7, 11),
    (7, 15),
    (8, 6),
    (8, 19),
    (8, 20),
    (9, 7),
    (9, 8),
    (9, 18),
    (10, 9),
    (10, 16),
    (10, 17),
];

/// The up pattern of Franklin's square through 13, 59, ..., 36, 18.
pub const FIGURE1_UP: [(usize, usize); 8] = [
    (1, 0),
    (2, 1),
    (3, 2),
    (4, 3),
    (4, 4),
    (3, 5),
    (2, 6),
    (1, 7),
];
