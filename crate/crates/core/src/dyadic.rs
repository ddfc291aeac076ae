use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

/// An exact number `numerator / 2^log_denominator` with an arbitrary-precision numerator.
///
/// Canonical: the numerator is odd, or the value is `0/2^0`. Every operation
/// provided here is exact.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DyadicRational {
    numerator: BigInt,
    log_denominator: u32,
}

impl DyadicRational {
    pub fn new(numerator: impl Into<BigInt>, log_denominator: u32) -> Self {
        Self::canonical(numerator.into(), log_denominator)
    }

    pub fn zero() -> Self {
        DyadicRational { numerator: BigInt::zero(), log_denominator: 0 }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        DyadicRational { numerator: BigInt::from(n), log_denominator: 0 }
    }

    /// `2^e` for any signed exponent.
    pub fn pow2(e: i64) -> Self {
        Self::one().scale_pow2(e)
    }

    fn canonical(mut numerator: BigInt, mut log_denominator: u32) -> Self {
        if numerator.is_zero() {
            return Self::zero();
        }
        let tz = numerator.trailing_zeros().unwrap_or(0).min(log_denominator as u64) as u32;
        if tz > 0 {
            numerator >>= tz;
            log_denominator -= tz;
        }
        DyadicRational { numerator, log_denominator }
    }

    pub fn numerator(&self) -> &BigInt {
        &self.numerator
    }

    pub fn log_denominator(&self) -> u32 {
        self.log_denominator
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.numerator.is_negative()
    }

    /// Multiplies by `2^e`.
    pub fn scale_pow2(&self, e: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        if e >= 0 {
            let e = e as u64;
            let b = self.log_denominator as u64;
            if e <= b {
                Self::canonical(self.numerator.clone(), (b - e) as u32)
            } else {
                Self::canonical(&self.numerator << (e - b), 0)
            }
        } else {
            let b = self.log_denominator as i64 - e;
            Self::canonical(self.numerator.clone(), u32::try_from(b).expect("denominator exponent overflow"))
        }
    }

    /// Numerators of `self` and `other` over the common denominator `2^b`.
    fn aligned(&self, other: &Self) -> (BigInt, BigInt, u32) {
        let b = self.log_denominator.max(other.log_denominator);
        (
            &self.numerator << (b - self.log_denominator),
            &other.numerator << (b - other.log_denominator),
            b,
        )
    }

    /// Nearest `f64`; large values saturate to infinity.
    pub fn to_f64(&self) -> f64 {
        let n = self.numerator.to_f64().unwrap_or(f64::NAN);
        if n.is_finite() && self.log_denominator < 1000 {
            n / 2f64.powi(self.log_denominator as i32)
        } else {
            // split the scaling so huge denominators do not underflow prematurely
            let shift = self.numerator.bits().saturating_sub(60);
            let head = (&self.numerator >> shift).to_f64().unwrap_or(f64::NAN);
            head * 2f64.powf(shift as f64 - self.log_denominator as f64)
        }
    }
}

impl From<i64> for DyadicRational {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<u64> for DyadicRational {
    fn from(n: u64) -> Self {
        DyadicRational { numerator: BigInt::from(n), log_denominator: 0 }
    }
}

impl Add<&DyadicRational> for &DyadicRational {
    type Output = DyadicRational;
    fn add(self, rhs: &DyadicRational) -> DyadicRational {
        let (a, b, d) = self.aligned(rhs);
        DyadicRational::canonical(a + b, d)
    }
}

impl Sub<&DyadicRational> for &DyadicRational {
    type Output = DyadicRational;
    fn sub(self, rhs: &DyadicRational) -> DyadicRational {
        let (a, b, d) = self.aligned(rhs);
        DyadicRational::canonical(a - b, d)
    }
}

impl Mul<&DyadicRational> for &DyadicRational {
    type Output = DyadicRational;
    fn mul(self, rhs: &DyadicRational) -> DyadicRational {
        DyadicRational::canonical(&self.numerator * &rhs.numerator, self.log_denominator + rhs.log_denominator)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<DyadicRational> for DyadicRational {
            type Output = DyadicRational;
            fn $m(self, rhs: DyadicRational) -> DyadicRational { (&self).$m(&rhs) }
        }
        impl $tr<&DyadicRational> for DyadicRational {
            type Output = DyadicRational;
            fn $m(self, rhs: &DyadicRational) -> DyadicRational { (&self).$m(rhs) }
        }
        impl $tr<DyadicRational> for &DyadicRational {
            type Output = DyadicRational;
            fn $m(self, rhs: DyadicRational) -> DyadicRational { self.$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for DyadicRational {
    type Output = DyadicRational;
    fn neg(self) -> DyadicRational {
        DyadicRational { numerator: -self.numerator, log_denominator: self.log_denominator }
    }
}

impl Neg for &DyadicRational {
    type Output = DyadicRational;
    fn neg(self) -> DyadicRational {
        -(self.clone())
    }
}

impl Ord for DyadicRational {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b, _) = self.aligned(other);
        a.cmp(&b)
    }
}

impl PartialOrd for DyadicRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for DyadicRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.log_denominator == 0 {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "{}/2^{}", self.numerator, self.log_denominator)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use proptest::prelude::*;

    fn to_rational(x: &DyadicRational) -> BigRational {
        BigRational::new(x.numerator().clone(), BigInt::from(1) << x.log_denominator())
    }

    #[test]
    fn worked_examples() {
        let half = DyadicRational::new(1, 1);
        assert_eq!(&half + &half, DyadicRational::one());
        assert_eq!(DyadicRational::new(3, 2) * DyadicRational::new(1, 1), DyadicRational::new(3, 3));
        assert_eq!(DyadicRational::from_int(5).scale_pow2(-3), DyadicRational::new(5, 3));
        assert_eq!(DyadicRational::new(5, 3).scale_pow2(5), DyadicRational::from_int(20));
        assert_eq!(DyadicRational::new(12, 4), DyadicRational::new(3, 2));
        assert_eq!(DyadicRational::new(0, 9), DyadicRational::zero());
        assert_eq!(DyadicRational::new(-7, 1).to_string(), "-7/2^1");
    }

    #[test]
    fn huge_exponents_stay_exact() {
        let tiny = DyadicRational::pow2(-4000);
        let big = DyadicRational::pow2(4000);
        assert_eq!(&tiny * &big, DyadicRational::one());
        let sum = &big + &tiny;
        assert_eq!(&sum - &big, tiny);
        assert!(big.to_f64().is_infinite());
        assert!((DyadicRational::new(3, 1100).to_f64()).abs() < 1e-300);
    }

    fn operand() -> impl Strategy<Value = DyadicRational> {
        (any::<i64>(), 0u32..80).prop_map(|(n, b)| DyadicRational::new(n, b))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(10_000))]
        #[test]
        fn agrees_with_big_rationals(x in operand(), y in operand(), e in -70i64..70) {
            let (rx, ry) = (to_rational(&x), to_rational(&y));
            prop_assert_eq!(to_rational(&(&x + &y)), &rx + &ry);
            prop_assert_eq!(to_rational(&(&x - &y)), &rx - &ry);
            prop_assert_eq!(to_rational(&(&x * &y)), &rx * &ry);
            prop_assert_eq!(x.cmp(&y), rx.cmp(&ry));
            let scale = if e >= 0 {
                BigRational::from_integer(BigInt::from(1) << e as u32)
            } else {
                BigRational::new(BigInt::from(1), BigInt::from(1) << (-e) as u32)
            };
            prop_assert_eq!(to_rational(&x.scale_pow2(e)), &rx * scale);
            let s = &x + &y;
            prop_assert!(s.numerator().trailing_zeros().map_or(true, |t| t == 0 || s.log_denominator() == 0));
        }
    }
}
