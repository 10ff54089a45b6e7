//! Independent verification paths.
//!
//! * [`rational_report`] re-evaluates the index formulas in exact rational
//!   arithmetic.
//! * [`pairwise_gini`] uses the mean-absolute-difference identity
//!   `G = sum_i sum_j |x_i - x_j| / (2 n^2 mean)`, which never builds a
//!   Lorenz curve.
//! * [`apply_transfer`] constructs rank-preserving progressive transfers.

use std::cmp::Ordering;
use std::ops::{Add, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::dataset::Dataset;
use crate::error::{Error, Result};
use crate::sum::compensated_sum;

/// Exact values of the four indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalReport {
    pub gini: BigRational,
    pub g_right: BigRational,
    pub g_left: BigRational,
    pub sag: BigRational,
}

impl RationalReport {
    fn from_gaps(gaps: &[BigRational], n: usize) -> Self {
        let n_big = BigInt::from(n);
        let two = BigRational::from_integer(BigInt::from(2));
        let prefactor = BigRational::new(BigInt::from(2) * &n_big, &n_big * &n_big);
        let mut plain = BigRational::zero();
        let mut right = BigRational::zero();
        let mut left = BigRational::zero();
        for (k, d) in gaps.iter().enumerate() {
            let i = k + 1;
            let w = BigRational::new(BigInt::from(2 * i), n_big.clone());
            let w_rev = BigRational::new(BigInt::from(2 * n - 2 * i), n_big.clone());
            plain += d;
            right += d * w;
            left += d * w_rev;
        }
        let gini = &prefactor * plain;
        let g_right = &prefactor * right;
        let g_left = &prefactor * left;
        let sag = &gini + (&g_right - &g_left).abs() / two;
        Self {
            gini,
            g_right,
            g_left,
            sag,
        }
    }

    pub fn to_f64(&self) -> [f64; 4] {
        [&self.gini, &self.g_right, &self.g_left, &self.sag].map(rational_to_f64)
    }
}

pub fn rational_to_f64(r: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

/// All four indices of `values` in exact arithmetic.
pub fn rational_report(values: &[BigRational]) -> Result<RationalReport> {
    let n = values.len();
    if n < 2 {
        return Err(Error::EmptyOrSingleton { n });
    }
    let total: BigRational = values.iter().sum();
    if !total.is_positive() {
        return Err(Error::NonPositiveTotal {
            total: rational_to_f64(&total),
        });
    }
    let mut sorted = values.to_vec();
    sorted.sort();
    let n_big = BigInt::from(n);
    let mut cumulative = BigRational::zero();
    let gaps: Vec<BigRational> = sorted[..n - 1]
        .iter()
        .enumerate()
        .map(|(k, x)| {
            cumulative += x;
            BigRational::new(BigInt::from(k + 1), n_big.clone()) - &cumulative / &total
        })
        .collect();
    Ok(RationalReport::from_gaps(&gaps, n))
}

/// Exact indices for Lorenz resource shares `q_1..q_n` on the grid `i/n`.
/// The last share must be exactly 1.
pub fn rational_report_from_lorenz(q: &[BigRational]) -> Result<RationalReport> {
    let n = q.len();
    if n < 2 {
        return Err(Error::EmptyOrSingleton { n });
    }
    if !q[n - 1].eq(&BigRational::from_integer(BigInt::from(1))) {
        return Err(Error::BadEndpoint {
            last: rational_to_f64(&q[n - 1]),
        });
    }
    let n_big = BigInt::from(n);
    let gaps: Vec<BigRational> = q[..n - 1]
        .iter()
        .enumerate()
        .map(|(k, qk)| BigRational::new(BigInt::from(k + 1), n_big.clone()) - qk)
        .collect();
    Ok(RationalReport::from_gaps(&gaps, n))
}

/// Parses a plain decimal literal (`"-12"`, `"0.06"`, `"2.5e3"`) into an exact rational.
pub fn parse_decimal(s: &str) -> Option<BigRational> {
    let s = s.trim();
    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(pos) => (&s[..pos], s[pos + 1..].parse::<i32>().ok()?),
        None => (s, 0),
    };
    let (negative, digits) = match mantissa.as_bytes().first()? {
        b'-' => (true, &mantissa[1..]),
        b'+' => (false, &mantissa[1..]),
        _ => (false, mantissa),
    };
    let (int_part, frac_part) = match digits.split_once('.') {
        Some((a, b)) => (a, b),
        None => (digits, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part
        .bytes()
        .chain(frac_part.bytes())
        .all(|b| b.is_ascii_digit())
    {
        return None;
    }
    let mut numer: BigInt = format!("{int_part}{frac_part}").parse().ok()?;
    if negative {
        numer = -numer;
    }
    let scale = exponent - frac_part.len() as i32;
    let ten = BigInt::from(10);
    let r = if scale >= 0 {
        BigRational::from_integer(numer * num_traits::pow(ten, scale as usize))
    } else {
        BigRational::new(numer, num_traits::pow(ten, (-scale) as usize))
    };
    Some(r)
}

/// Exact rationals for integer observations.
pub fn rationals_from_integers(values: &[i64]) -> Vec<BigRational> {
    values
        .iter()
        .map(|&v| BigRational::from_integer(BigInt::from(v)))
        .collect()
}

/// Gini through the mean-absolute-difference identity, in `O(n log n)`.
///
/// With `x_(1) <= ... <= x_(n)`,
/// `sum_i sum_j |x_i - x_j| = 2 * sum_i (2i - n - 1) x_(i)`.
pub fn pairwise_gini(values: &[f64]) -> Result<f64> {
    let n = values.len();
    if n < 2 {
        return Err(Error::EmptyOrSingleton { n });
    }
    let total = compensated_sum(values.iter().copied());
    if total.is_nan() || total <= 0.0 {
        return Err(Error::NonPositiveTotal { total });
    }
    let mut sorted = values.to_vec();
    sorted.sort_unstable_by(f64::total_cmp);
    let nf = n as f64;
    let abs_diff_sum = 2.0
        * compensated_sum(
            sorted
                .iter()
                .enumerate()
                .map(|(k, &x)| (2.0 * (k + 1) as f64 - nf - 1.0) * x),
        );
    let mean = total / nf;
    Ok(abs_diff_sum / (2.0 * nf * nf * mean))
}

/// A progressive transfer between two positions of the ascending order (1-based).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TransferSpec {
    pub donor_rank: usize,
    pub recipient_rank: usize,
    pub amount: f64,
}

/// Minimum distance, relative to the mean, a transfer must leave to the
/// nearest rank neighbour.
pub const TRANSFER_MARGIN: f64 = 1e-9;

/// Moves `amount` from the donor to the recipient without reordering anyone.
///
/// Equal observations are interchangeable, so the recipient is treated as the
/// top of its tie group and the donor as the bottom of its own. Ranks map to
/// input positions through a stable sort; the result keeps input order.
pub fn apply_transfer(d: &Dataset, t: &TransferSpec) -> Result<Dataset> {
    if !t.amount.is_finite() || t.amount <= 0.0 {
        return Err(Error::InvalidAmount { amount: t.amount });
    }
    let margin = TRANSFER_MARGIN * d.mean();
    let mut values = d.values().to_vec();
    transfer_in_place(
        &mut values,
        t.recipient_rank,
        t.donor_rank,
        t.amount,
        margin,
    )?;
    Dataset::new(values)
}

/// Rational counterpart of [`apply_transfer`]; the total is preserved exactly.
pub fn apply_transfer_exact(
    values: &[BigRational],
    recipient_rank: usize,
    donor_rank: usize,
    amount: &BigRational,
) -> Result<Vec<BigRational>> {
    if !amount.is_positive() {
        return Err(Error::InvalidAmount {
            amount: rational_to_f64(amount),
        });
    }
    let total: BigRational = values.iter().sum();
    let mean = total / BigRational::from_integer(BigInt::from(values.len().max(1)));
    let margin = mean.abs() / BigRational::from_integer(BigInt::from(1_000_000_000));
    let mut out = values.to_vec();
    transfer_in_place(&mut out, recipient_rank, donor_rank, amount.clone(), margin)?;
    Ok(out)
}

fn transfer_in_place<T>(
    values: &mut [T],
    recipient_rank: usize,
    donor_rank: usize,
    amount: T,
    margin: T,
) -> Result<()>
where
    T: Clone + PartialOrd + std::fmt::Debug,
    for<'a> &'a T: Add<&'a T, Output = T> + Sub<&'a T, Output = T>,
{
    let n = values.len();
    if recipient_rank == 0 || recipient_rank >= donor_rank || donor_rank > n {
        return Err(Error::InvalidRanks {
            recipient: recipient_rank,
            donor: donor_rank,
            n,
        });
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| values[a].partial_cmp(&values[b]).unwrap_or(Ordering::Equal));
    let recipient_at = order[recipient_rank - 1];
    let donor_at = order[donor_rank - 1];
    let poorer = values[recipient_at].clone();
    let richer = values[donor_at].clone();
    if poorer >= richer {
        return Err(Error::RankViolation(format!(
            "recipient ({poorer:?}) is not strictly poorer than donor ({richer:?})"
        )));
    }
    // Nearest distinct values above the recipient and below the donor.
    let above = values
        .iter()
        .filter(|v| **v > poorer)
        .fold(None::<&T>, |m, v| match m {
            Some(m) if m <= v => Some(m),
            _ => Some(v),
        });
    let below = values
        .iter()
        .filter(|v| **v < richer)
        .fold(None::<&T>, |m, v| match m {
            Some(m) if m >= v => Some(m),
            _ => Some(v),
        });
    let raised = &poorer + &amount;
    let lowered = &richer - &amount;
    let adjacent = above.is_some_and(|a| *a >= richer);
    let ok = if adjacent {
        &lowered - &raised >= margin
    } else {
        let above = above.expect("a value strictly between recipient and donor exists");
        let below = below.expect("a value strictly between recipient and donor exists");
        above - &raised >= margin && &lowered - below >= margin
    };
    if !ok {
        return Err(Error::RankViolation(format!(
            "moving {amount:?} from {richer:?} to {poorer:?} would reorder the observations"
        )));
    }
    values[recipient_at] = raised;
    values[donor_at] = lowered;
    Ok(())
}
