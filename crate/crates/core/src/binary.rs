use serde::Serialize;

use crate::error::{LejaError, Result};

/// The exponents `p_0 < p_1 < ... < p_s` of `k = 2^{p_0} + ... + 2^{p_s}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct BinaryExpansion {
    k: u64,
    exponents: Vec<u32>,
}

impl BinaryExpansion {
    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    /// `p_0`, the 2-adic valuation of `k`.
    pub fn lowest(&self) -> u32 {
        self.exponents[0]
    }

    pub fn highest(&self) -> u32 {
        *self.exponents.last().expect("expansion is never empty")
    }

    /// `s`, i.e. the number of binary ones minus one.
    pub fn s(&self) -> usize {
        self.exponents.len() - 1
    }

    /// Number of binary ones, `s + 1`.
    pub fn ones(&self) -> usize {
        self.exponents.len()
    }

    /// The odd part `2^{-p_0} k`.
    pub fn odd_part(&self) -> u64 {
        self.k >> self.lowest()
    }

    /// Sub-expansion `2^{p_j} + ... + 2^{p_s}` starting at term `j`.
    pub fn tail(&self, j: usize) -> BinaryExpansion {
        let exponents = self.exponents[j..].to_vec();
        let k = exponents.iter().map(|&p| 1u64 << p).sum();
        BinaryExpansion { k, exponents }
    }

    /// Builds an expansion from explicit exponents, which must be strictly increasing.
    pub fn from_exponents(exponents: &[u32]) -> Result<Self> {
        if exponents.is_empty() {
            return Err(LejaError::ZeroIndex);
        }
        if exponents.windows(2).any(|w| w[0] >= w[1]) || exponents[exponents.len() - 1] > 63 {
            return Err(LejaError::InvalidParameter(format!(
                "exponents {exponents:?} are not strictly increasing within 0..=63"
            )));
        }
        let k = exponents.iter().map(|&p| 1u64 << p).sum();
        Ok(BinaryExpansion { k, exponents: exponents.to_vec() })
    }
}

/// Expands `k >= 1` into its binary exponents, lowest first.
pub fn binary_expand(k: u64) -> Result<BinaryExpansion> {
    if k == 0 {
        return Err(LejaError::ZeroIndex);
    }
    let mut exponents = Vec::with_capacity(k.count_ones() as usize);
    let mut rest = k;
    while rest != 0 {
        let p = rest.trailing_zeros();
        exponents.push(p);
        rest &= rest - 1;
    }
    Ok(BinaryExpansion { k, exponents })
}
