//! Exact golden-ratio Beatty sequences.
//!
//! `A_n = ⌊nφ⌋` and `B_n = ⌊nφ²⌋ = A_n + n`, computed without floating point
//! as `(n + ⌊√(5n²)⌋) / 2`. Since `5n²` is never a perfect square for
//! `n ≥ 1`, the integer square root floors exactly where `n√5` does.

use std::fmt;
use std::time::Instant;

use crate::error::{Error, Result};
use crate::report::{Report, Status, Witness};

/// Largest supported index. Keeps `5n²` inside `u128` and `B_n` inside `u64`.
pub const MAX_INDEX: u64 = u64::MAX / 3;

/// Greatest `r` with `r * r <= x`.
#[inline]
pub fn isqrt(x: u128) -> u128 {
    x.isqrt()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BeattyIndex(u64);

impl BeattyIndex {
    pub fn new(n: u64) -> Result<Self> {
        if n > MAX_INDEX {
            return Err(Error::IndexTooLarge {
                index: n,
                max: MAX_INDEX,
            });
        }
        Ok(BeattyIndex(n))
    }

    pub fn get(self) -> u64 {
        self.0
    }
}

impl From<u32> for BeattyIndex {
    fn from(n: u32) -> Self {
        BeattyIndex(n as u64)
    }
}

impl fmt::Display for BeattyIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// `⌊nφ⌋`.
pub fn a_n(n: BeattyIndex) -> u64 {
    let n = n.0 as u128;
    ((n + isqrt(5 * n * n)) / 2) as u64
}

/// `⌊nφ²⌋`, i.e. `A_n + n`.
pub fn b_n(n: BeattyIndex) -> u64 {
    a_n(n) + n.0
}

/// `(n, A_n, B_n)` for `n = 0, 1, 2, ...`.
pub fn pairs() -> impl Iterator<Item = (u64, u64, u64)> {
    (0..=MAX_INDEX).map(|n| {
        let a = a_n(BeattyIndex(n));
        (n, a, a + n)
    })
}

/// Checks that every integer in `[1, bound]` is hit by exactly one of
/// `{A_n}` and `{B_n}` (`n >= 1`).
pub fn verify_complementarity(bound: u64) -> Result<Report> {
    if bound == 0 {
        return Err(Error::InvalidParams(
            "complementarity bound must be at least 1".into(),
        ));
    }
    let started = Instant::now();
    let len = usize::try_from(bound)
        .ok()
        .and_then(|b| b.checked_add(1))
        .ok_or_else(|| Error::InvalidParams(format!("bound {bound} is too large")))?;
    let mut counts = vec![0u32; len];
    for (_, a, b) in pairs().skip(1).take_while(|&(_, a, _)| a <= bound) {
        counts[a as usize] += 1;
        if b <= bound {
            counts[b as usize] += 1;
        }
    }
    let witness = counts
        .iter()
        .enumerate()
        .skip(1)
        .find(|&(_, &c)| c != 1)
        .map(|(value, &count)| Witness::Coverage {
            value: value as u64,
            count,
        });
    Ok(Report::new("beatty-complementarity", bound)
        .conclude(Status::Verified, witness)
        .timed(started))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn idx(n: u64) -> BeattyIndex {
        BeattyIndex::new(n).unwrap()
    }

    /// `⌊nφ⌋` bracketed between consecutive convergents of `√5`
    /// (`2/1, 9/4, 38/17, ...`, alternating sides); refined until the lower
    /// and upper brackets floor to the same integer.
    fn floor_n_phi_oracle(n: u64) -> u64 {
        let n = n as u128;
        let (mut p0, mut q0, mut p1, mut q1) = (2u128, 1u128, 9u128, 4u128);
        loop {
            let lo = (n * (q0 + p0)) / (2 * q0);
            let hi = (n * (q1 + p1)) / (2 * q1);
            // p0/q0 and p1/q1 straddle √5, and n·φ is never an integer.
            if lo == hi {
                return lo as u64;
            }
            let (p2, q2) = (4 * p1 + p0, 4 * q1 + q0);
            (p0, q0, p1, q1) = (p1, q1, p2, q2);
        }
    }

    #[test]
    fn isqrt_examples() {
        assert_eq!(isqrt(0), 0);
        assert_eq!(isqrt(1), 1);
        assert_eq!(isqrt(5), 2);
        assert_eq!(isqrt(2000), 44);
        assert_eq!(isqrt(u128::MAX), u64::MAX as u128);
        assert_eq!(isqrt((u64::MAX as u128) * (u64::MAX as u128)), u64::MAX as u128);
    }

    #[test]
    fn isqrt_2000_by_scan() {
        let r = (0u128..100).filter(|r| r * r <= 2000).max().unwrap();
        assert_eq!(r, 44);
    }

    #[test]
    fn sequence_examples() {
        assert_eq!(a_n(idx(0)), 0);
        assert_eq!(a_n(idx(1)), 1);
        assert_eq!(a_n(idx(4)), 6);
        assert_eq!(b_n(idx(0)), 0);
        assert_eq!(b_n(idx(1)), 2);
        assert_eq!(b_n(idx(4)), 10);
    }

    #[test]
    fn matches_convergent_oracle() {
        for n in 0..=10_000 {
            assert_eq!(a_n(idx(n)), floor_n_phi_oracle(n), "n = {n}");
        }
        for n in [MAX_INDEX / 1000, 123_456_789_012, 1 << 40] {
            assert_eq!(a_n(idx(n)), floor_n_phi_oracle(n), "n = {n}");
        }
    }

    #[test]
    fn max_index_limits() {
        let top = idx(MAX_INDEX);
        assert!(a_n(top) < b_n(top));
        let n = MAX_INDEX as u128;
        assert!(n.checked_mul(n).and_then(|sq| sq.checked_mul(5)).is_some());
        assert!((a_n(top) as u128) + n <= u64::MAX as u128);
        assert!(matches!(
            BeattyIndex::new(MAX_INDEX + 1),
            Err(Error::IndexTooLarge { .. })
        ));
    }

    #[test]
    fn monotone_gaps() {
        let mut prev = a_n(idx(0));
        for n in 1..=20_000 {
            let cur = a_n(idx(n));
            assert!(cur > prev);
            if n >= 2 {
                assert!(matches!(cur - prev, 1 | 2), "gap at n = {n}");
            }
            assert_eq!(b_n(idx(n)) - cur, n);
            prev = cur;
        }
    }

    #[test]
    fn complementarity() {
        for bound in [1, 10, 10_000] {
            let r = verify_complementarity(bound).unwrap();
            assert_eq!(r.status, Status::Verified, "bound {bound}");
        }
        assert!(verify_complementarity(0).is_err());
    }

    #[test]
    fn first_terms_partition() {
        let a: Vec<u64> = (1..=6).map(|n| a_n(idx(n))).collect();
        let b: Vec<u64> = (1..=4).map(|n| b_n(idx(n))).collect();
        assert_eq!(a, [1, 3, 4, 6, 8, 9]);
        assert_eq!(b, [2, 5, 7, 10]);
    }
}
