//! Exact rationals with an allocation-free fast path.
//!
//! Values that fit a reduced `Ratio<i64>` stay small; anything else is
//! promoted to a `BigRational`. The representation is canonical: a value is
//! stored big only if it does not fit, so structural equality is value
//! equality.

use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, CheckedSub, One, Signed, ToPrimitive, Zero};

#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Rational {
    Small(Ratio<i64>),
    Big(BigRational),
}

impl Rational {
    pub fn new(numer: i64, denom: i64) -> Rational {
        Rational::Small(Ratio::new(numer, denom))
    }

    pub fn from_big(value: BigRational) -> Rational {
        match (value.numer().to_i64(), value.denom().to_i64()) {
            // i64::MIN has no negation, keep it out of the fast path
            (Some(n), Some(d)) if n != i64::MIN => Rational::Small(Ratio::new_raw(n, d)),
            _ => Rational::Big(value),
        }
    }

    pub fn from_integer(value: BigInt) -> Rational {
        Rational::from_big(BigRational::from_integer(value))
    }

    pub fn to_big(&self) -> BigRational {
        match self {
            Rational::Small(r) => BigRational::new_raw(BigInt::from(*r.numer()), BigInt::from(*r.denom())),
            Rational::Big(r) => r.clone(),
        }
    }

    pub fn numer(&self) -> BigInt {
        match self {
            Rational::Small(r) => BigInt::from(*r.numer()),
            Rational::Big(r) => r.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match self {
            Rational::Small(r) => BigInt::from(*r.denom()),
            Rational::Big(r) => r.denom().clone(),
        }
    }

    pub fn is_integer(&self) -> bool {
        match self {
            Rational::Small(r) => r.is_integer(),
            Rational::Big(r) => r.is_integer(),
        }
    }

    /// Truncates toward zero, like `Ratio::to_integer`.
    pub fn to_integer(&self) -> BigInt {
        match self {
            Rational::Small(r) => BigInt::from(r.to_integer()),
            Rational::Big(r) => r.to_integer(),
        }
    }

    pub fn signum(&self) -> i32 {
        match self {
            Rational::Small(r) => r.numer().signum() as i32,
            Rational::Big(r) => {
                if r.is_zero() {
                    0
                } else if r.is_positive() {
                    1
                } else {
                    -1
                }
            }
        }
    }

    pub fn is_positive(&self) -> bool {
        self.signum() > 0
    }

    pub fn is_negative(&self) -> bool {
        self.signum() < 0
    }

    pub fn abs(&self) -> Rational {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    pub fn recip(&self) -> Rational {
        assert!(!self.is_zero(), "reciprocal of zero");
        Rational::one() / self
    }

    pub fn pow(&self, exp: u32) -> Rational {
        (0..exp).fold(Rational::one(), |acc, _| &acc * self)
    }

    /// `self += a * b`, the inner step of every elimination loop.
    pub fn add_product(&mut self, a: &Rational, b: &Rational) {
        if let (Rational::Small(x), Rational::Small(y), Rational::Small(z)) = (&*self, a, b) {
            if let Some(v) = y.checked_mul(z).and_then(|p| x.checked_add(&p)) {
                *self = Rational::Small(v);
                return;
            }
        }
        *self = &*self + &(a * b);
    }

    /// `self -= a * b`.
    pub fn sub_product(&mut self, a: &Rational, b: &Rational) {
        if let (Rational::Small(x), Rational::Small(y), Rational::Small(z)) = (&*self, a, b) {
            if let Some(v) = y.checked_mul(z).and_then(|p| x.checked_sub(&p)) {
                *self = Rational::Small(v);
                return;
            }
        }
        *self = &*self - &(a * b);
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                if let (Rational::Small(a), Rational::Small(b)) = (self, rhs) {
                    if let Some(v) = a.$checked(b) {
                        if *v.numer() != i64::MIN {
                            return Rational::Small(v);
                        }
                    }
                }
                Rational::from_big(self.to_big().$method(rhs.to_big()))
            }
        }
        impl $trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                (&self).$method(rhs)
            }
        }
        impl $trait<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                self.$method(&rhs)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl Div<&Rational> for &Rational {
    type Output = Rational;
    fn div(self, rhs: &Rational) -> Rational {
        assert!(!rhs.is_zero(), "division by zero");
        if let (Rational::Small(a), Rational::Small(b)) = (self, rhs) {
            if let Some(v) = a.checked_div(b) {
                if *v.numer() != i64::MIN && *v.denom() != i64::MIN {
                    return Rational::Small(v);
                }
            }
        }
        Rational::from_big(self.to_big() / rhs.to_big())
    }
}

impl Div<Rational> for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        &self / &rhs
    }
}

impl Div<&Rational> for Rational {
    type Output = Rational;
    fn div(self, rhs: &Rational) -> Rational {
        &self / rhs
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        match self {
            Rational::Small(r) => Rational::Small(-*r),
            Rational::Big(r) => Rational::from_big(-r),
        }
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        -&self
    }
}

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&Rational> for Rational {
    fn mul_assign(&mut self, rhs: &Rational) {
        *self = &*self * rhs;
    }
}

impl Default for Rational {
    fn default() -> Rational {
        Rational::zero()
    }
}

impl Zero for Rational {
    fn zero() -> Rational {
        Rational::Small(Ratio::from_integer(0))
    }

    fn is_zero(&self) -> bool {
        match self {
            Rational::Small(r) => r.is_zero(),
            Rational::Big(_) => false,
        }
    }
}

impl One for Rational {
    fn one() -> Rational {
        Rational::Small(Ratio::from_integer(1))
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| &acc + &x)
    }
}

impl<'a> Sum<&'a Rational> for Rational {
    fn sum<I: Iterator<Item = &'a Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| &acc + x)
    }
}

impl From<i64> for Rational {
    fn from(value: i64) -> Rational {
        if value == i64::MIN {
            Rational::Big(BigRational::from_integer(BigInt::from(value)))
        } else {
            Rational::Small(Ratio::from_integer(value))
        }
    }
}

impl From<BigInt> for Rational {
    fn from(value: BigInt) -> Rational {
        Rational::from_integer(value)
    }
}

impl From<BigRational> for Rational {
    fn from(value: BigRational) -> Rational {
        Rational::from_big(value)
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Rational) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Rational) -> Ordering {
        match (self, other) {
            (Rational::Small(a), Rational::Small(b)) => a.cmp(b),
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rational::Small(r) => write!(f, "{r}"),
            Rational::Big(r) => write!(f, "{r}"),
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid rational {0:?}")]
pub struct ParseRationalError(pub String);

impl FromStr for Rational {
    type Err = ParseRationalError;

    /// Accepts `"p"` or `"p/q"` with `q` nonzero.
    fn from_str(s: &str) -> Result<Rational, ParseRationalError> {
        let bad = || ParseRationalError(s.to_string());
        let s = s.trim();
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let n: BigInt = n.parse().map_err(|_| bad())?;
        let d: BigInt = d.parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        Ok(Rational::from_big(BigRational::new(n, d)))
    }
}
