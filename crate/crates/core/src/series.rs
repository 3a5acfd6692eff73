//! Truncated Poincaré series.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Graded dimensions or ranks indexed by degree, known through `max_degree`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PoincareSeries {
    coefficients: Vec<u64>,
}

impl PoincareSeries {
    pub fn new(coefficients: Vec<u64>) -> Self {
        Self { coefficients }
    }

    pub fn coefficients(&self) -> &[u64] {
        &self.coefficients
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.coefficients.len().checked_sub(1).map(|d| d as u32)
    }

    pub fn get(&self, d: u32) -> Option<u64> {
        self.coefficients.get(d as usize).copied()
    }

    pub fn total(&self) -> u64 {
        self.coefficients.iter().sum()
    }

    pub fn truncate(&self, n: u32) -> Self {
        Self { coefficients: self.coefficients.iter().take(n as usize + 1).copied().collect() }
    }

    /// Expansion of ∏(1 + t^a) · ∏(1 − t^b)^{-1} · ∏(1 − t^c) through degree `n`.
    pub fn from_product(odd: &[u32], even: &[u32], numerator: &[u32], n: u32) -> Self {
        let len = n as usize + 1;
        let mut c = vec![0i128; len];
        c[0] = 1;
        for &a in odd {
            let a = a as usize;
            for d in (a..len).rev() {
                c[d] += c[d - a];
            }
        }
        for &b in even {
            let b = b as usize;
            for d in b..len {
                c[d] += c[d - b];
            }
        }
        for &e in numerator {
            let e = e as usize;
            for d in (e..len).rev() {
                c[d] -= c[d - e];
            }
        }
        Self { coefficients: c.into_iter().map(|x| u64::try_from(x).expect("non-negative series")).collect() }
    }
}

impl fmt::Display for PoincareSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coefficients.iter().map(u64::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// Coefficientwise equality through degree `n`.
pub fn series_equal(a: &PoincareSeries, b: &PoincareSeries, n: u32) -> Result<bool> {
    for s in [a, b] {
        let available = s.max_degree();
        if available.is_none_or(|m| m < n) {
            return Err(Error::InsufficientTruncation { available: available.unwrap_or(0), requested: n });
        }
    }
    Ok(a.coefficients[..=n as usize] == b.coefficients[..=n as usize])
}
