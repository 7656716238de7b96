//! Gaussian rationals `a + b·i` with `a, b ∈ ℚ`.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_complex::Complex;
use serde::de::{self, Deserializer};
use serde::{Deserialize, Serialize, Serializer};

use super::rational::Rational;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Scalar {
    pub re: Rational,
    pub im: Rational,
}

impl Scalar {
    pub const ZERO: Scalar = Scalar { re: Rational::ZERO, im: Rational::ZERO };
    pub const ONE: Scalar = Scalar { re: Rational::ONE, im: Rational::ZERO };

    pub fn new(re: Rational, im: Rational) -> Self {
        Scalar { re, im }
    }

    pub fn real(re: Rational) -> Self {
        Scalar { re, im: Rational::ZERO }
    }

    pub fn int(n: i64) -> Self {
        Scalar::real(Rational::from_int(n))
    }

    /// `num/den` as a real scalar.
    pub fn frac(num: i64, den: i64) -> Self {
        Scalar::real(Rational::new(num, den))
    }

    pub fn i() -> Self {
        Scalar { re: Rational::ZERO, im: Rational::ONE }
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    #[inline]
    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// Complex conjugate.
    pub fn conj(&self) -> Self {
        Scalar { re: self.re.clone(), im: -&self.im }
    }

    /// `|z|² = a² + b²`.
    pub fn norm_sqr(&self) -> Rational {
        &(&self.re * &self.re) + &(&self.im * &self.im)
    }

    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "reciprocal of zero");
        if self.is_real() {
            return Scalar::real(self.re.recip());
        }
        let n = self.norm_sqr();
        Scalar { re: &self.re / &n, im: -(&self.im / &n) }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Scalar::ONE;
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    pub fn to_complex(&self) -> Complex<f64> {
        Complex::new(self.re.to_f64(), self.im.to_f64())
    }

    /// Multiply by a rational without going through the complex product.
    pub fn scale(&self, r: &Rational) -> Self {
        Scalar { re: &self.re * r, im: &self.im * r }
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::int(n)
    }
}

impl From<Rational> for Scalar {
    fn from(r: Rational) -> Self {
        Scalar::real(r)
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    #[inline]
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    #[inline]
    fn sub(self, rhs: &Scalar) -> Scalar {
        Scalar { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    #[inline]
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self.im.is_zero(), rhs.im.is_zero()) {
            (true, true) => Scalar::real(&self.re * &rhs.re),
            (true, false) => rhs.scale(&self.re),
            (false, true) => self.scale(&rhs.re),
            (false, false) => Scalar {
                re: &(&self.re * &rhs.re) - &(&self.im * &rhs.im),
                im: &(&self.re * &rhs.im) + &(&self.im * &rhs.re),
            },
        }
    }
}

impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        if rhs.is_real() {
            assert!(!rhs.re.is_zero(), "division by zero");
            return Scalar { re: &self.re / &rhs.re, im: &self.im / &rhs.re };
        }
        self * &rhs.recip()
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { re: -&self.re, im: -&self.im }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &'a Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl AddAssign<&Scalar> for Scalar {
    #[inline]
    fn add_assign(&mut self, rhs: &Scalar) {
        self.re += &rhs.re;
        if !rhs.im.is_zero() {
            self.im += &rhs.im;
        }
    }
}

impl SubAssign<&Scalar> for Scalar {
    #[inline]
    fn sub_assign(&mut self, rhs: &Scalar) {
        self.re -= &rhs.re;
        if !rhs.im.is_zero() {
            self.im -= &rhs.im;
        }
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

impl fmt::Display for Scalar {
    /// `a/b` for reals, otherwise `a/b+c/d*i` (or `a/b-c/d*i`).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.im.signum() < 0 {
            write!(f, "{}-{}*i", self.re, -&self.im)
        } else {
            write!(f, "{}+{}*i", self.re, self.im)
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{:?}", self.re)
        } else {
            write!(f, "{self}")
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid scalar literal {0:?}")]
pub struct ParseScalarError(pub String);

impl FromStr for Scalar {
    type Err = ParseScalarError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseScalarError(s.to_string());
        let s = s.trim();
        let Some(body) = s.strip_suffix("*i") else {
            return s.parse::<Rational>().map(Scalar::real).map_err(|_| err());
        };
        // split at the last sign that is not the leading one
        let split = body
            .char_indices()
            .skip(1)
            .filter(|&(_, c)| c == '+' || c == '-')
            .map(|(i, _)| i)
            .last();
        let (re, im) = match split {
            Some(i) => (&body[..i], &body[i..]),
            None => ("0", body),
        };
        let im = im.strip_prefix('+').unwrap_or(im);
        let re: Rational = re.parse().map_err(|_| err())?;
        let im: Rational = im.parse().map_err(|_| err())?;
        Ok(Scalar { re, im })
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = serde_json::Value::deserialize(d)?;
        match v {
            serde_json::Value::String(s) => s.parse().map_err(de::Error::custom),
            serde_json::Value::Number(n) => n
                .as_i64()
                .map(Scalar::int)
                .ok_or_else(|| de::Error::custom("non-integer number for scalar")),
            other => Err(de::Error::custom(format!("expected scalar string, got {other}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn arb() -> impl Strategy<Value = Scalar> {
        (-50i64..50, 1i64..20, -50i64..50, 1i64..20)
            .prop_map(|(a, b, c, d)| Scalar::new(Rational::new(a, b), Rational::new(c, d)))
    }

    #[test]
    fn display_round_trip() {
        for s in ["3/4", "-1/2+5/3*i", "0/1-1/1*i", "2/1+1/7*i"] {
            let z: Scalar = s.parse().unwrap();
            assert_eq!(z.to_string(), s);
        }
        assert_eq!("7".parse::<Scalar>().unwrap(), Scalar::int(7));
        assert_eq!("1/2*i".parse::<Scalar>().unwrap(), Scalar::new(Rational::ZERO, Rational::new(1, 2)));
    }

    #[test]
    fn i_squared() {
        assert_eq!(&Scalar::i() * &Scalar::i(), Scalar::int(-1));
    }

    proptest! {
        #[test]
        fn field_axioms(a in arb(), b in arb(), c in arb()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            if !b.is_zero() {
                prop_assert_eq!(&(&a / &b) * &b, a.clone());
            }
            prop_assert_eq!(a.conj().conj(), a.clone());
            prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
        }

        #[test]
        fn json_round_trip(a in arb()) {
            let s = serde_json::to_string(&a).unwrap();
            let back: Scalar = serde_json::from_str(&s).unwrap();
            prop_assert_eq!(back, a);
        }
    }
}
