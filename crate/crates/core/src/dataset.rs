//! Validated raw observations.

use crate::error::{Error, Result};
use crate::sum::compensated_sum;

/// A validated vector of observations (incomes, wealth, ...).
///
/// Holds at least two finite values with a strictly positive total.
/// Individual zeros and negatives are allowed. The input order is kept and an
/// ascending copy is cached for the Lorenz construction.
#[derive(Debug, Clone, PartialEq)]
pub struct Dataset {
    values: Vec<f64>,
    sorted: Vec<f64>,
    total: f64,
}

impl Dataset {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if values.len() < 2 {
            return Err(Error::EmptyOrSingleton { n: values.len() });
        }
        if let Some((index, &value)) = values.iter().enumerate().find(|(_, v)| !v.is_finite()) {
            return Err(Error::NonFiniteValue { index, value });
        }
        let total = compensated_sum(values.iter().copied());
        if !total.is_finite() || total <= 0.0 {
            return Err(Error::NonPositiveTotal { total });
        }
        let mut sorted = values.clone();
        sorted.sort_unstable_by(f64::total_cmp);
        Ok(Self {
            values,
            sorted,
            total,
        })
    }

    /// Observations in input order.
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Observations in ascending order.
    pub fn sorted(&self) -> &[f64] {
        &self.sorted
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn total(&self) -> f64 {
        self.total
    }

    pub fn mean(&self) -> f64 {
        self.total / self.len() as f64
    }

    pub fn min(&self) -> f64 {
        self.sorted[0]
    }

    pub fn max(&self) -> f64 {
        self.sorted[self.sorted.len() - 1]
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }
}

impl TryFrom<Vec<f64>> for Dataset {
    type Error = Error;

    fn try_from(values: Vec<f64>) -> Result<Self> {
        Dataset::new(values)
    }
}

/// Validates raw observations into a [`Dataset`].
pub fn build_dataset(raw: &[f64]) -> Result<Dataset> {
    Dataset::new(raw.to_vec())
}
