//! Compensated (Neumaier) summation.
//!
//! Large sums are split into fixed-size chunks that are summed independently
//! and then combined in chunk order. The chunk layout never depends on the
//! thread count, so the parallel and sequential paths return bit-identical
//! results.

use std::ops::{Add, AddAssign};

use crate::par::Execution;

/// Number of terms per independently summed block.
pub const CHUNK: usize = 1 << 14;

/// Running sum with Neumaier's correction term.
#[derive(Debug, Default, Clone, Copy)]
pub struct NeumaierSum {
    s: f64,
    c: f64,
}

impl NeumaierSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn sum(&self) -> f64 {
        self.s + self.c
    }
}

impl AddAssign<f64> for NeumaierSum {
    fn add_assign(&mut self, rhs: f64) {
        let (s, c) = two_sum(self.s, rhs);
        self.s = s;
        self.c += c;
    }
}

impl Add for NeumaierSum {
    type Output = NeumaierSum;

    fn add(self, rhs: Self) -> Self::Output {
        let (s, c1) = two_sum(self.s, rhs.s);
        NeumaierSum {
            s,
            c: (self.c + rhs.c) + c1,
        }
    }
}

impl FromIterator<f64> for NeumaierSum {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut acc = NeumaierSum::new();
        for x in iter {
            acc += x;
        }
        acc
    }
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let c = if a.abs() >= b.abs() {
        (a - s) + b
    } else {
        (b - s) + a
    };
    (s, c)
}

/// Compensated sum of any sequence of terms.
pub fn compensated_sum<I: IntoIterator<Item = f64>>(terms: I) -> f64 {
    terms.into_iter().collect::<NeumaierSum>().sum()
}

/// Compensated sum of `term(0) + ... + term(len - 1)` over fixed chunks.
pub fn chunked_sum<F>(len: usize, term: F, exec: Execution) -> f64
where
    F: Fn(usize) -> f64 + Sync,
{
    let chunks = len.div_ceil(CHUNK);
    let partial = |k: usize| -> NeumaierSum {
        let lo = k * CHUNK;
        let hi = (lo + CHUNK).min(len);
        (lo..hi).map(&term).collect()
    };
    crate::par::map_indexed(chunks, partial, exec)
        .into_iter()
        .fold(NeumaierSum::new(), |acc, part| acc + part)
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recovers_small_terms_next_to_large_ones() {
        let s = compensated_sum([1e200, 0.1, 0.2, 0.3, -1e200]);
        assert!((s - 0.6).abs() < 1e-15, "{s}");
        let naive: f64 = [1e200, 0.1, 0.2, 0.3, -1e200].iter().sum();
        assert_eq!(naive, 0.0);
    }

    #[test]
    fn chunked_paths_agree_bitwise() {
        let len = 3 * CHUNK + 17;
        let term = |i: usize| ((i as f64) * 0.1).sin() / (1.0 + i as f64);
        let seq = chunked_sum(len, term, Execution::Sequential);
        let par = chunked_sum(len, term, Execution::Parallel);
        assert_eq!(seq.to_bits(), par.to_bits());
    }

    #[test]
    fn empty_sum_is_zero() {
        assert_eq!(chunked_sum(0, |_| 1.0, Execution::Sequential), 0.0);
        assert_eq!(compensated_sum(std::iter::empty()), 0.0);
    }

    #[test]
    fn permutation_stable() {
        let mut xs: Vec<f64> = (1..=5000).map(|i| 1.0 / i as f64).collect();
        let a = compensated_sum(xs.iter().copied());
        xs.reverse();
        let b = compensated_sum(xs.iter().copied());
        assert!((a - b).abs() <= 1e-14 * a.abs());
    }
}
