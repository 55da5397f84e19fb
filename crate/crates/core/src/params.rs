//! Arithmetic frame of a type-p square: the prime, the order, and every sum target.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest order accepted anywhere in the crate. Keeps `n(n²-1)/2` far from `i64` overflow.
pub const MAX_ORDER: usize = 3000;

/// Sum of `0..n²` divided by `n`: the common total of every row of a natural magic square.
pub fn magic_sum(n: usize) -> i64 {
    let n = n as i64;
    n * (n * n - 1) / 2
}

pub fn is_prime(p: usize) -> bool {
    if p < 2 {
        return false;
    }
    (2..)
        .take_while(|d| d * d <= p)
        .all(|d| !p.is_multiple_of(d))
}

/// A prime `p` together with an order `n`.
///
/// Only primality and the order range are enforced on construction. Targets that need
/// extra divisibility (`p | n`, integral halves) are checked when requested, so that
/// degenerate orders such as `n = 2` can still be handed to the row/diagonal checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TypeParams {
    p: usize,
    n: usize,
}

impl TypeParams {
    pub fn new(p: usize, n: usize) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if n == 0 || n > MAX_ORDER {
            return Err(Error::OrderOutOfRange(n));
        }
        Ok(TypeParams { p, n })
    }

    /// Franklin context: `n = k·p³`.
    pub fn franklin(p: usize, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidParameter("k must be positive".into()));
        }
        let n = p
            .checked_pow(3)
            .and_then(|c| c.checked_mul(k))
            .ok_or(Error::OrderOutOfRange(usize::MAX))?;
        TypeParams::new(p, n)
    }

    /// Prime-power context: `n = p^r`.
    pub fn prime_power(p: usize, r: u32) -> Result<Self> {
        let n = p.checked_pow(r).ok_or(Error::OrderOutOfRange(usize::MAX))?;
        TypeParams::new(p, n)
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `k` with `n = k·p³`, if the order has that form.
    pub fn franklin_multiplier(&self) -> Option<usize> {
        let cube = self.p.pow(3);
        self.n.is_multiple_of(cube).then(|| self.n / cube)
    }

    pub fn require_franklin(&self) -> Result<usize> {
        self.franklin_multiplier().ok_or_else(|| {
            Error::Divisibility(format!(
                "order {} is not of the form k*{}^3",
                self.n, self.p
            ))
        })
    }

    pub fn magic_sum(&self) -> i64 {
        magic_sum(self.n)
    }

    /// Target of each aligned `n/p` segment of a row or column: `n(n²-1)/(2p)`.
    pub fn segment_sum(&self) -> Result<i64> {
        self.require_divides()?;
        let (n, p) = (self.n as i64, self.p as i64);
        exact_div(n * (n * n - 1), 2 * p, "1/p segment sum")
    }

    /// Target of every toric `p×p` window: `p²(n²-1)/2`.
    pub fn pxp_sum(&self) -> Result<i64> {
        let (n, p) = (self.n as i64, self.p as i64);
        exact_div(p * p * (n * n - 1), 2, "p x p window sum")
    }

    /// Target of `p` cells spaced `n/p` apart on a broken main diagonal: `p(n²-1)/2`.
    pub fn complement_sum(&self) -> Result<i64> {
        self.require_divides()?;
        let (n, p) = (self.n as i64, self.p as i64);
        exact_div(p * (n * n - 1), 2, "complementary sum")
    }

    pub(crate) fn require_divides(&self) -> Result<()> {
        if !self.n.is_multiple_of(self.p) {
            return Err(Error::Divisibility(format!(
                "p={} does not divide order {}",
                self.p, self.n
            )));
        }
        Ok(())
    }
}

fn exact_div(num: i64, den: i64, what: &str) -> Result<i64> {
    if num % den != 0 {
        return Err(Error::Divisibility(format!(
            "{what} {num}/{den} is not an integer"
        )));
    }
    Ok(num / den)
}
