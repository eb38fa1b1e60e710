use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// An exact complex number `re + im·i` with rational parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GaussianRational {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussianRational { re, im }
    }

    pub fn from_ints(re: i64, im: i64) -> Self {
        GaussianRational { re: BigRational::from_integer(re.into()), im: BigRational::from_integer(im.into()) }
    }

    pub fn real(re: BigRational) -> Self {
        GaussianRational { re, im: BigRational::zero() }
    }

    pub fn i() -> Self {
        Self::from_ints(0, 1)
    }

    pub fn conj(&self) -> Self {
        GaussianRational { re: self.re.clone(), im: -self.im.clone() }
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        let norm = &self.re * &self.re + &self.im * &self.im;
        if norm.is_zero() {
            return None;
        }
        Some(GaussianRational { re: &self.re / &norm, im: -&self.im / &norm })
    }
}

impl Zero for GaussianRational {
    fn zero() -> Self {
        Self::from_ints(0, 0)
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussianRational {
    fn one() -> Self {
        Self::from_ints(1, 0)
    }
}

impl From<i64> for GaussianRational {
    fn from(x: i64) -> Self {
        Self::from_ints(x, 0)
    }
}

impl From<BigInt> for GaussianRational {
    fn from(x: BigInt) -> Self {
        Self::real(BigRational::from_integer(x))
    }
}

impl Add for GaussianRational {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        &self + &o
    }
}

impl<'a> Add<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn add(self, o: &GaussianRational) -> GaussianRational {
        GaussianRational { re: &self.re + &o.re, im: &self.im + &o.im }
    }
}

impl AddAssign<&GaussianRational> for GaussianRational {
    fn add_assign(&mut self, o: &GaussianRational) {
        self.re += &o.re;
        self.im += &o.im;
    }
}

impl Sub for GaussianRational {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        GaussianRational { re: self.re - o.re, im: self.im - o.im }
    }
}

impl Neg for GaussianRational {
    type Output = Self;
    fn neg(self) -> Self {
        GaussianRational { re: -self.re, im: -self.im }
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational { re: -self.re.clone(), im: -self.im.clone() }
    }
}

impl Mul for GaussianRational {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        &self * &o
    }
}

impl<'a> Mul<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn mul(self, o: &GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl Div for GaussianRational {
    type Output = Self;
    /// Panics on division by zero.
    fn div(self, o: Self) -> Self {
        self * o.inv().expect("division by zero")
    }
}

fn fmt_rational(x: &BigRational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// `3`, `-1/2`, `2i`, `-i`, `2+3i`, `1/2-i`.
impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let imag = |x: &BigRational| -> String {
            if x.abs().is_one() {
                String::from("i")
            } else {
                format!("{}i", fmt_rational(&x.abs()))
            }
        };
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => f.write_str(&fmt_rational(&self.re)),
            (true, false) => {
                let sign = if self.im.is_negative() { "-" } else { "" };
                write!(f, "{sign}{}", imag(&self.im))
            }
            (false, false) => {
                let sign = if self.im.is_negative() { "-" } else { "+" };
                write!(f, "{}{sign}{}", fmt_rational(&self.re), imag(&self.im))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let i = GaussianRational::i();
        assert_eq!(&i * &i, GaussianRational::from(-1));
        let z = GaussianRational::from_ints(2, 3);
        assert_eq!(&z * &z.conj(), GaussianRational::from(13));
        assert_eq!(z.clone() / z.clone(), GaussianRational::one());
        assert!(GaussianRational::zero().inv().is_none());
    }

    #[test]
    fn display() {
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(GaussianRational::from_ints(2, 3).to_string(), "2+3i");
        assert_eq!(GaussianRational::from_ints(0, -1).to_string(), "-i");
        assert_eq!(GaussianRational::from_ints(0, 4).to_string(), "4i");
        assert_eq!(GaussianRational::from_ints(-1, 0).to_string(), "-1");
        assert_eq!(GaussianRational::new(half.clone(), -half).to_string(), "1/2-1/2i");
        assert_eq!(GaussianRational::zero().to_string(), "0");
    }
}
