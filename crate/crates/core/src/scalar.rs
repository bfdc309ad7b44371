//! Exact coefficient fields.
//!
//! Everything in this crate is computed over [`Rational`] (arbitrary precision
//! fractions). [`Gaussian`] rationals are available where complex coefficients
//! show up, e.g. for forms built from complex characters.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// Arbitrary precision rational number, always kept in lowest terms.
pub type Rational = num_rational::BigRational;

/// Exact field element usable as a coefficient of forms and matrices.
pub trait Scalar:
    Clone
    + PartialEq
    + Eq
    + std::hash::Hash
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    /// Complex conjugation; the identity on rationals.
    fn conj(&self) -> Self;
    fn from_rational(q: Rational) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(n)))
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// `Some(-1)`/`Some(1)` style sign used when printing; `None` when not real.
    fn real_sign(&self) -> Option<std::cmp::Ordering>;
}

impl Scalar for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn conj(&self) -> Self {
        self.clone()
    }
    fn from_rational(q: Rational) -> Self {
        q
    }
    fn real_sign(&self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(&Zero::zero()))
    }
}

/// Gaussian rational `re + i·im`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Gaussian {
    pub re: Rational,
    pub im: Rational,
}

impl Gaussian {
    pub fn new(re: Rational, im: Rational) -> Self {
        Gaussian { re, im }
    }

    pub fn i() -> Self {
        Gaussian::new(Zero::zero(), One::one())
    }

    /// `|z|²`, always a non-negative rational.
    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }
}

impl fmt::Display for Gaussian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if Zero::is_zero(&self.im) {
            write!(f, "{}", self.re)
        } else if Zero::is_zero(&self.re) {
            write!(f, "{}i", self.im)
        } else if self.im.is_negative() {
            write!(f, "({}-{}i)", self.re, -self.im.clone())
        } else {
            write!(f, "({}+{}i)", self.re, self.im)
        }
    }
}

impl Add for Gaussian {
    type Output = Gaussian;
    fn add(self, rhs: Gaussian) -> Gaussian {
        Gaussian::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl Sub for Gaussian {
    type Output = Gaussian;
    fn sub(self, rhs: Gaussian) -> Gaussian {
        Gaussian::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl Mul for Gaussian {
    type Output = Gaussian;
    fn mul(self, rhs: Gaussian) -> Gaussian {
        Gaussian::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Div for Gaussian {
    type Output = Gaussian;
    fn div(self, rhs: Gaussian) -> Gaussian {
        let n = rhs.norm_sqr();
        let num = self * rhs.conj();
        Gaussian::new(num.re / &n, num.im / n)
    }
}

impl Neg for Gaussian {
    type Output = Gaussian;
    fn neg(self) -> Gaussian {
        Gaussian::new(-self.re, -self.im)
    }
}

impl Scalar for Gaussian {
    fn zero() -> Self {
        Gaussian::new(Zero::zero(), Zero::zero())
    }
    fn one() -> Self {
        Gaussian::new(One::one(), Zero::zero())
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(&self.re) && Zero::is_zero(&self.im)
    }
    fn conj(&self) -> Self {
        Gaussian::new(self.re.clone(), -self.im.clone())
    }
    fn from_rational(q: Rational) -> Self {
        Gaussian::new(q, Zero::zero())
    }
    fn real_sign(&self) -> Option<std::cmp::Ordering> {
        if Zero::is_zero(&self.im) {
            Some(self.re.cmp(&Zero::zero()))
        } else {
            None
        }
    }
}

/// Parses `"p/q"`, `"p"` or `"-p/q"` into a reduced rational.
pub fn parse_rational(s: &str) -> Result<Rational, Error> {
    let t = s.trim();
    let bad = || Error::Parse(format!("invalid rational {s:?}"));
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let num = BigInt::from_str(num).map_err(|_| bad())?;
    let den = BigInt::from_str(den).map_err(|_| bad())?;
    if Zero::is_zero(&den) {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Rational::new(num, den))
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Exact square root of a rational, if it is the square of one.
pub fn rational_sqrt(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    if &(&n * &n) == q.numer() && &(&d * &d) == q.denom() {
        Some(Rational::new(n, d))
    } else {
        None
    }
}
