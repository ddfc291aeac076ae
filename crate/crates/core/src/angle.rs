use std::cmp::Ordering;
use std::f64::consts::PI;
use std::fmt;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{LejaError, Result};

/// Largest supported `log_denominator`; keeps sums of two angles inside `u64`.
pub const MAX_LOG_DENOMINATOR: u32 = 62;

/// An exact angle `π · numerator / 2^log_denominator`, reduced modulo `2π`.
///
/// The canonical form has an odd numerator, or is `0/2^0`. Two angles are equal
/// exactly when their canonical fields are equal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct DyadicAngle {
    numerator: u64,
    log_denominator: u32,
}

impl DyadicAngle {
    pub const ZERO: DyadicAngle = DyadicAngle { numerator: 0, log_denominator: 0 };
    /// Half a turn, the point `-1`.
    pub const HALF_TURN: DyadicAngle = DyadicAngle { numerator: 1, log_denominator: 0 };

    /// Canonicalizes `π · numerator / 2^log_denominator` modulo `2π`.
    pub fn new(numerator: u64, log_denominator: u32) -> Result<Self> {
        if log_denominator > MAX_LOG_DENOMINATOR {
            return Err(LejaError::AngleOutOfRange { numerator, log_denominator });
        }
        Ok(Self::reduce(numerator, log_denominator))
    }

    /// The angle `π · 2^{-p}`.
    pub fn pow2_fraction(p: u32) -> Result<Self> {
        Self::new(1, p)
    }

    fn reduce(numerator: u64, log_denominator: u32) -> Self {
        // modulo 2, i.e. modulo 2^(b+1) on the numerator
        let modulus_bits = log_denominator + 1;
        let mut num = if modulus_bits >= 64 { numerator } else { numerator & ((1u64 << modulus_bits) - 1) };
        let mut b = log_denominator;
        if num == 0 {
            return Self::ZERO;
        }
        let tz = num.trailing_zeros().min(b);
        num >>= tz;
        b -= tz;
        DyadicAngle { numerator: num, log_denominator: b }
    }

    pub fn numerator(&self) -> u64 {
        self.numerator
    }

    pub fn log_denominator(&self) -> u32 {
        self.log_denominator
    }

    /// Angle in units of `π`, in `[0, 2)`.
    pub fn as_f64(&self) -> f64 {
        self.numerator as f64 / (1u64 << self.log_denominator) as f64
    }

    pub fn radians(&self) -> f64 {
        PI * self.as_f64()
    }

    /// Sum modulo `2π`.
    pub fn add(self, other: DyadicAngle) -> DyadicAngle {
        let b = self.log_denominator.max(other.log_denominator);
        let a1 = self.numerator << (b - self.log_denominator);
        let a2 = other.numerator << (b - other.log_denominator);
        // both below 2^(b+1) <= 2^63, so no overflow
        Self::reduce(a1 + a2, b)
    }

    pub fn neg(self) -> DyadicAngle {
        if self.numerator == 0 {
            return self;
        }
        let full = 2u64 << self.log_denominator;
        Self::reduce(full - self.numerator, self.log_denominator)
    }

    /// The angle of `e²` when `self` is the angle of `e`.
    pub fn double(self) -> DyadicAngle {
        if self.log_denominator == 0 {
            return Self::reduce(self.numerator << 1, 0);
        }
        Self::reduce(self.numerator, self.log_denominator - 1)
    }

    /// `exp(iπθ)`; quadrant multiples are exact.
    pub fn to_point(&self) -> Complex64 {
        let b = self.log_denominator;
        // split θ = q/2 + r with r in [0, 1/2)
        let (q, rem, rb) = if b == 0 {
            (self.numerator * 2, 0u64, 0u32)
        } else {
            let q = self.numerator >> (b - 1);
            let rem = self.numerator & ((1u64 << (b - 1)) - 1);
            (q, rem, b)
        };
        let base = if rem == 0 {
            Complex64::new(1.0, 0.0)
        } else {
            let r = rem as f64 / (1u64 << rb) as f64;
            let (s, c) = (PI * r).sin_cos();
            Complex64::new(c, s)
        };
        // adding +0.0 turns -0.0 into +0.0
        match q % 4 {
            0 => base,
            1 => Complex64::new(-base.im + 0.0, base.re),
            2 => Complex64::new(-base.re + 0.0, -base.im + 0.0),
            _ => Complex64::new(base.im, -base.re + 0.0),
        }
    }
}

impl Ord for DyadicAngle {
    fn cmp(&self, other: &Self) -> Ordering {
        let b = self.log_denominator.max(other.log_denominator);
        let a1 = self.numerator << (b - self.log_denominator);
        let a2 = other.numerator << (b - other.log_denominator);
        a1.cmp(&a2)
    }
}

impl PartialOrd for DyadicAngle {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for DyadicAngle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}π", self.numerator, 1u64 << self.log_denominator)
    }
}
