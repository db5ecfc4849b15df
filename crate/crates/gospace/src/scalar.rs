//! Exact field elements: rationals and Gaussian rationals, kept reduced at
//! all times. The complex unit is only meaningful in a gaussian-field
//! context; rational-field data must have a zero imaginary part.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A Gaussian rational re + im*i. Both parts are arbitrary-precision
/// reduced rationals, so every arithmetic result is exact.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    pub re: BigRational,
    pub im: BigRational,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid scalar `{text}`: {reason}")]
pub struct ParseScalarError {
    pub text: String,
    pub reason: &'static str,
}

impl Scalar {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Scalar { re, im }
    }

    pub fn zero() -> Self {
        Scalar::new(BigRational::zero(), BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar::new(BigRational::one(), BigRational::zero())
    }

    pub fn i() -> Self {
        Scalar::new(BigRational::zero(), BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::new(BigRational::from_integer(BigInt::from(n)), BigRational::zero())
    }

    /// n/d as a real scalar. Panics on d = 0.
    pub fn ratio(n: i64, d: i64) -> Self {
        Scalar::new(
            BigRational::new(BigInt::from(n), BigInt::from(d)),
            BigRational::zero(),
        )
    }

    pub fn gaussian_int(re: i64, im: i64) -> Self {
        Scalar::new(
            BigRational::from_integer(BigInt::from(re)),
            BigRational::from_integer(BigInt::from(im)),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Scalar {
        Scalar::new(self.re.clone(), -self.im.clone())
    }

    /// Multiplicative inverse. Panics on zero; callers pick nonzero pivots.
    pub fn inv(&self) -> Scalar {
        let norm = &self.re * &self.re + &self.im * &self.im;
        assert!(!norm.is_zero(), "inverse of zero scalar");
        Scalar::new(&self.re / &norm, -(&self.im / &norm))
    }

    pub fn scale_int(&self, n: i64) -> Scalar {
        let f = BigRational::from_integer(BigInt::from(n));
        Scalar::new(&self.re * &f, &self.im * &f)
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        Scalar::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl<'a> Add<&'a Scalar> for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'a Scalar) -> Scalar {
        Scalar::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        Scalar::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl<'a> Sub<&'a Scalar> for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        Scalar::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        (&self).mul(&rhs)
    }
}

impl<'a> Mul<&'a Scalar> for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        Scalar::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = (&*self).mul(rhs);
    }
}

impl Div for Scalar {
    type Output = Scalar;
    fn div(self, rhs: Scalar) -> Scalar {
        (&self).mul(&rhs.inv())
    }
}

impl<'a> Div<&'a Scalar> for &Scalar {
    type Output = Scalar;
    fn div(self, rhs: &'a Scalar) -> Scalar {
        self.mul(&rhs.inv())
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::new(-self.re, -self.im)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::new(-self.re.clone(), -self.im.clone())
    }
}

impl std::iter::Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        let mut acc = Scalar::zero();
        for s in iter {
            acc += &s;
        }
        acc
    }
}

/// Parses `-? DIGITS (/ DIGITS)?`. Rejects signs inside, empty digit runs,
/// and zero denominators.
fn parse_rational(text: &str) -> Result<BigRational, &'static str> {
    let (numer_text, denom_text) = match text.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (text, None),
    };
    let digits = numer_text.strip_prefix('-').unwrap_or(numer_text);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err("malformed numerator");
    }
    let numer: BigInt = numer_text.parse().map_err(|_| "malformed numerator")?;
    let denom = match denom_text {
        None => BigInt::one(),
        Some(d) => {
            if d.is_empty() || !d.bytes().all(|b| b.is_ascii_digit()) {
                return Err("malformed denominator");
            }
            let d: BigInt = d.parse().map_err(|_| "malformed denominator")?;
            if d.is_zero() {
                return Err("zero denominator");
            }
            d
        }
    };
    Ok(BigRational::new(numer, denom))
}

impl FromStr for Scalar {
    type Err = ParseScalarError;

    /// Grammar: `RATIONAL := '-'? DIGITS ('/' DIGITS)?` and
    /// `GAUSSIAN := RATIONAL (('+'|'-') RATIONAL? '*'? 'i')?`, plus the
    /// pure-imaginary forms "i", "-i", "3i", "3*i", "-2/5i".
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let fail = |reason| ParseScalarError { text: s.to_string(), reason };
        let t = s.trim();
        if t.is_empty() {
            return Err(fail("empty"));
        }
        let Some(body) = t.strip_suffix('i') else {
            let re = parse_rational(t).map_err(fail)?;
            return Ok(Scalar::new(re, BigRational::zero()));
        };
        // Any '+' or '-' past position 0 separates real and imaginary parts
        // (digit runs never contain signs).
        let sep = body
            .char_indices()
            .rev()
            .find(|(idx, ch)| (*ch == '+' || *ch == '-') && *idx > 0)
            .map(|(idx, _)| idx);
        let (re_text, im_text) = match sep {
            Some(p) => (&body[..p], &body[p..]),
            None => ("", body),
        };
        let re = if re_text.is_empty() {
            BigRational::zero()
        } else {
            parse_rational(re_text).map_err(fail)?
        };
        let im_core = im_text.strip_suffix('*').unwrap_or(im_text);
        let im = match im_core {
            "" | "+" => BigRational::one(),
            "-" => -BigRational::one(),
            _ => {
                if let Some(mag) = im_core.strip_prefix('+') {
                    if mag.starts_with('-') {
                        return Err(fail("malformed imaginary part"));
                    }
                    parse_rational(mag).map_err(fail)?
                } else {
                    parse_rational(im_core).map_err(fail)?
                }
            }
        };
        Ok(Scalar::new(re, im))
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        let mag = self.im.abs();
        if self.re.is_zero() {
            if self.im.is_one() {
                write!(f, "i")
            } else if self.im == -BigRational::one() {
                write!(f, "-i")
            } else {
                write!(f, "{}i", self.im)
            }
        } else {
            let sign = if self.im.is_negative() { '-' } else { '+' };
            if mag.is_one() {
                write!(f, "{}{}i", self.re, sign)
            } else {
                write!(f, "{}{}{}i", self.re, sign, mag)
            }
        }
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}
