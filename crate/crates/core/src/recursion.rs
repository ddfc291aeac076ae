//! The majorant sequence `U_k` of the squared quadratic Lebesgue constants and its
//! defect `Δ_k = 2^{-p_0} k - U_k`, all in exact dyadic arithmetic.

use std::collections::HashMap;

use crate::binary::BinaryExpansion;
use crate::dyadic::DyadicRational;
use crate::error::{LejaError, Result};
use crate::exec::{self, Execution};

/// Memo table for `U_1 = 1`, `U_{2N} = U_N`, `U_{2N+1} = ½U_{N+1} + 2U_N + ½`.
///
/// Only odd indices are stored, since `U_k = U_{odd part of k}`.
#[derive(Debug, Clone, Default)]
pub struct USequenceCache {
    memo: HashMap<u64, DyadicRational>,
}

impl USequenceCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.memo.len()
    }

    pub fn is_empty(&self) -> bool {
        self.memo.is_empty()
    }

    /// Exact `U_k`.
    pub fn u(&mut self, k: u64) -> Result<DyadicRational> {
        if k == 0 {
            return Err(LejaError::ZeroIndex);
        }
        Ok(self.u_odd(k >> k.trailing_zeros()))
    }

    fn u_odd(&mut self, k: u64) -> DyadicRational {
        debug_assert!(k % 2 == 1);
        if k == 1 {
            return DyadicRational::one();
        }
        if let Some(v) = self.memo.get(&k) {
            return v.clone();
        }
        let n = k / 2;
        let upper = self.u_odd((n + 1) >> (n + 1).trailing_zeros());
        let lower = self.u_odd(n >> n.trailing_zeros());
        let half = DyadicRational::new(1, 1);
        let value = upper.scale_pow2(-1) + lower.scale_pow2(1) + half;
        self.memo.insert(k, value.clone());
        value
    }

    /// Exact `Δ_k = 2^{-p_0} k - U_k`.
    pub fn delta(&mut self, k: u64) -> Result<DyadicRational> {
        let u = self.u(k)?;
        Ok(DyadicRational::from(k >> k.trailing_zeros()) - u)
    }

    /// The terms of the closed-form sum for `Δ_k`, one per `j = 1..=s`.
    pub fn lemma3_terms(&mut self, expansion: &BinaryExpansion) -> Result<Vec<DyadicRational>> {
        let p = expansion.exponents();
        let s = expansion.s();
        if s == 0 {
            return Err(LejaError::SingleTermExpansion(expansion.k()));
        }
        let mut terms = Vec::with_capacity(s);
        for j in 1..=s {
            let gap = i64::from(p[j] - p[j - 1]);
            let j_i = j as i64;
            let tail = expansion.tail(j);
            // 1 + 2^{p_{j+1}-p_j} + ... + 2^{p_s-p_j}
            let geometric = DyadicRational::from(tail.k() >> p[j]);
            let gap_factor = DyadicRational::pow2(gap) - DyadicRational::from_int(2);
            let coefficient = gap_factor.scale_pow2(j_i - i64::from(p[j]) + i64::from(p[0]));
            let delta_weight = DyadicRational::pow2(j_i - 1) * DyadicRational::from_int(3) - DyadicRational::one();
            let geometric_weight =
                (DyadicRational::pow2(gap) - DyadicRational::from_int(4)).scale_pow2(j_i - 2) + DyadicRational::one();
            let bracket = delta_weight * self.delta(tail.k())? + geometric_weight * geometric;
            terms.push(coefficient * bracket);
        }
        Ok(terms)
    }

    /// The closed-form sum for `Δ_k` over the binary expansion of `k`; needs `s >= 1`.
    pub fn lemma3_sum(&mut self, expansion: &BinaryExpansion) -> Result<DyadicRational> {
        Ok(self.lemma3_terms(expansion)?.into_iter().fold(DyadicRational::zero(), |acc, t| acc + t))
    }
}

pub fn u_value(k: u64) -> Result<DyadicRational> {
    USequenceCache::new().u(k)
}

pub fn delta_value(k: u64) -> Result<DyadicRational> {
    USequenceCache::new().delta(k)
}

pub fn lemma3_sum(expansion: &BinaryExpansion) -> Result<DyadicRational> {
    USequenceCache::new().lemma3_sum(expansion)
}

/// Checks `U_{2^n m} = U_m` and `U_{2^n m + 1} = 2^{-n} U_{m+1} + 4(1 - 2^{-n}) U_m + 1 - 2^{-n}`.
pub fn u_closed_form_check(cache: &mut USequenceCache, n: u32, m: u64) -> Result<bool> {
    if m == 0 {
        return Err(LejaError::ZeroIndex);
    }
    let shifted = m
        .checked_shl(n)
        .filter(|v| v >> n == m && *v < u64::MAX)
        .ok_or_else(|| LejaError::InvalidParameter(format!("2^{n}·{m} overflows")))?;
    let scaled_ok = cache.u(shifted)? == cache.u(m)?;
    let inv = DyadicRational::pow2(-i64::from(n));
    let one_minus = DyadicRational::one() - &inv;
    let rhs = &inv * cache.u(m + 1)? + (one_minus.scale_pow2(2) * cache.u(m)?) + one_minus;
    Ok(scaled_ok && cache.u(shifted + 1)? == rhs)
}

/// Checks `Δ_k = Δ_{2^{-p_0} k}`.
pub fn delta_reduction_check(cache: &mut USequenceCache, expansion: &BinaryExpansion) -> Result<bool> {
    Ok(cache.delta(expansion.k())? == cache.delta(expansion.odd_part())?)
}

/// `{k <= limit : Δ_k = 0}` found by scanning the exact recursion.
pub fn equality_characterization(limit: u64) -> Result<Vec<u64>> {
    if limit == 0 {
        return Err(LejaError::ZeroIndex);
    }
    let mut cache = USequenceCache::new();
    let mut out = Vec::new();
    for k in 1..=limit {
        if cache.delta(k)?.is_zero() {
            out.push(k);
        }
    }
    Ok(out)
}

/// `{2^p (2^n - 1) : p >= 0, n >= 1} ∩ [1, limit]`, sorted.
pub fn equality_set(limit: u64) -> Vec<u64> {
    let mut out = Vec::new();
    for n in 1..64u32 {
        let base = (1u64 << n) - 1;
        if base > limit {
            break;
        }
        let mut v = base;
        while v <= limit {
            out.push(v);
            match v.checked_mul(2) {
                Some(next) => v = next,
                None => break,
            }
        }
    }
    out.sort_unstable();
    out
}

/// `Δ_k` for `k = 1..=limit`, sharded over workers that each keep their own memo.
pub fn delta_table(limit: u64, exec: Execution) -> Vec<DyadicRational> {
    const SHARD: u64 = 4096;
    let shards = limit.div_ceil(SHARD) as usize;
    exec::map_range(shards, exec, |s| {
        let mut cache = USequenceCache::new();
        let lo = s as u64 * SHARD + 1;
        let hi = (lo + SHARD - 1).min(limit);
        (lo..=hi).map(|k| cache.delta(k).expect("k >= 1")).collect::<Vec<_>>()
    })
    .into_iter()
    .flatten()
    .collect()
}

/// `U_k` as a float, for comparison with computed constants.
pub fn u_as_f64(cache: &mut USequenceCache, k: u64) -> Result<f64> {
    Ok(cache.u(k)?.to_f64())
}
