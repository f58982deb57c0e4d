use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// A Gaussian integer `re + im·i` with arbitrary-precision parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussianInt {
    pub re: BigInt,
    pub im: BigInt,
}

impl GaussianInt {
    pub fn new(re: impl Into<BigInt>, im: impl Into<BigInt>) -> Self {
        GaussianInt {
            re: re.into(),
            im: im.into(),
        }
    }

    pub fn from_int(re: impl Into<BigInt>) -> Self {
        GaussianInt::new(re, 0)
    }

    pub fn i() -> Self {
        GaussianInt::new(0, 1)
    }

    pub fn conj(&self) -> Self {
        GaussianInt {
            re: self.re.clone(),
            im: -&self.im,
        }
    }

    /// `re² + im²`
    pub fn norm(&self) -> BigInt {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// `self / divisor` when the quotient is again a Gaussian integer.
    pub fn exact_div(&self, divisor: &GaussianInt) -> Option<GaussianInt> {
        let norm = divisor.norm();
        if norm.is_zero() {
            return None;
        }
        let num = self * &divisor.conj();
        if (&num.re % &norm).is_zero() && (&num.im % &norm).is_zero() {
            Some(GaussianInt {
                re: num.re / &norm,
                im: num.im / norm,
            })
        } else {
            None
        }
    }

    /// `self / k` for a rational integer `k`, when exact.
    pub fn exact_div_int(&self, k: &BigInt) -> Option<GaussianInt> {
        if k.is_zero() || !(&self.re % k).is_zero() || !(&self.im % k).is_zero() {
            return None;
        }
        Some(GaussianInt {
            re: &self.re / k,
            im: &self.im / k,
        })
    }
}

impl Zero for GaussianInt {
    fn zero() -> Self {
        GaussianInt::default()
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussianInt {
    fn one() -> Self {
        GaussianInt::from_int(1)
    }
}

impl fmt::Display for GaussianInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) if self.im == BigInt::one() => write!(f, "i"),
            (true, false) if self.im == -BigInt::one() => write!(f, "-i"),
            (true, false) => write!(f, "{}i", self.im),
            (false, false) => {
                let sign = if self.im.is_negative() { '-' } else { '+' };
                write!(f, "{}{}{}i", self.re, sign, self.im.abs())
            }
        }
    }
}

impl Add<&GaussianInt> for &GaussianInt {
    type Output = GaussianInt;
    fn add(self, rhs: &GaussianInt) -> GaussianInt {
        GaussianInt {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl Add for GaussianInt {
    type Output = GaussianInt;
    fn add(self, rhs: GaussianInt) -> GaussianInt {
        &self + &rhs
    }
}

impl AddAssign<&GaussianInt> for GaussianInt {
    fn add_assign(&mut self, rhs: &GaussianInt) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl Sub<&GaussianInt> for &GaussianInt {
    type Output = GaussianInt;
    fn sub(self, rhs: &GaussianInt) -> GaussianInt {
        GaussianInt {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl Sub for GaussianInt {
    type Output = GaussianInt;
    fn sub(self, rhs: GaussianInt) -> GaussianInt {
        &self - &rhs
    }
}

impl Mul<&GaussianInt> for &GaussianInt {
    type Output = GaussianInt;
    fn mul(self, rhs: &GaussianInt) -> GaussianInt {
        GaussianInt {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Mul for GaussianInt {
    type Output = GaussianInt;
    fn mul(self, rhs: GaussianInt) -> GaussianInt {
        &self * &rhs
    }
}

impl Neg for &GaussianInt {
    type Output = GaussianInt;
    fn neg(self) -> GaussianInt {
        GaussianInt {
            re: -&self.re,
            im: -&self.im,
        }
    }
}

impl Neg for GaussianInt {
    type Output = GaussianInt;
    fn neg(self) -> GaussianInt {
        -&self
    }
}
