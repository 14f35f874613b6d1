//! Integral domains the elimination kernels run over.
//!
//! Machine integers report overflow by returning `None`; callers retry the
//! same computation over [`BigInt`].

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub(crate) trait ExactRing: Clone {
    fn zero_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    /// `(a*b - c*d) / e`, where the division is known to be exact.
    fn cross_div(a: &Self, b: &Self, c: &Self, d: &Self, e: &Self) -> Option<Self>;
    fn neg(&self) -> Option<Self>;
    /// Pivot preference; smaller is better.
    fn weight(&self) -> usize {
        0
    }
}

/// Integer rings with the extra operations used by sparse elimination.
pub(crate) trait IntRing: ExactRing {
    /// `a*x - b*y`
    fn combine(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self>;
    fn gcd(&self, other: &Self) -> Self;
    fn div_exact(&self, d: &Self) -> Self;
    fn is_negative(&self) -> bool;
    fn is_one(&self) -> bool;
}

impl ExactRing for i64 {
    fn zero_like(&self) -> Self {
        0
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn cross_div(a: &Self, b: &Self, c: &Self, d: &Self, e: &Self) -> Option<Self> {
        let num = (*a as i128).checked_mul(*b as i128)?.checked_sub((*c as i128).checked_mul(*d as i128)?)?;
        debug_assert_eq!(num % (*e as i128), 0);
        i64::try_from(num / (*e as i128)).ok()
    }
    fn neg(&self) -> Option<Self> {
        self.checked_neg()
    }
}

impl IntRing for i64 {
    fn combine(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self> {
        let v = (*a as i128) * (*x as i128) - (*b as i128) * (*y as i128);
        i64::try_from(v).ok()
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, d: &Self) -> Self {
        self / d
    }
    fn is_negative(&self) -> bool {
        *self < 0
    }
    fn is_one(&self) -> bool {
        *self == 1
    }
}

impl ExactRing for BigInt {
    fn zero_like(&self) -> Self {
        Zero::zero()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn cross_div(a: &Self, b: &Self, c: &Self, d: &Self, e: &Self) -> Option<Self> {
        let num = a * b - c * d;
        debug_assert!(Zero::is_zero(&(&num % e)));
        Some(num / e)
    }
    fn neg(&self) -> Option<Self> {
        Some(-self)
    }
    fn weight(&self) -> usize {
        self.bits() as usize
    }
}

impl IntRing for BigInt {
    fn combine(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self> {
        Some(a * x - b * y)
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, d: &Self) -> Self {
        self / d
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
}
