use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{AlgebraError, GaussianMatrix};

/// Monic integer polynomial `λ^n + a_1 λ^{n-1} + … + a_n`, stored as
/// `[1, a_1, …, a_n]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPolynomial {
    coefficients: Vec<BigInt>,
}

impl IntPolynomial {
    /// Panics unless the leading coefficient is 1.
    pub fn from_coefficients(coefficients: Vec<BigInt>) -> Self {
        assert!(
            coefficients.first().is_some_and(One::is_one),
            "polynomial must be monic"
        );
        IntPolynomial { coefficients }
    }

    pub fn degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    /// `a_j`, the coefficient of `λ^{n-j}`.
    pub fn coefficient(&self, j: usize) -> &BigInt {
        &self.coefficients[j]
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coefficients
    }

    /// Multiplicity of 0 as a root.
    pub fn zero_root_multiplicity(&self) -> usize {
        self.coefficients
            .iter()
            .rev()
            .take_while(|c| c.is_zero())
            .count()
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coefficients
            .iter()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.degree();
        let mut first = true;
        for (j, c) in self.coefficients.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let power = n - j;
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let abs = c.abs();
            if !abs.is_one() || power == 0 {
                write!(f, "{abs}")?;
            }
            match power {
                0 => {}
                1 => write!(f, "λ")?,
                p => write!(f, "λ^{p}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// `det(λI - M)` by the Faddeev–LeVerrier recurrence
/// `N_1 = I`, `a_k = -tr(M N_k) / k`, `N_{k+1} = M N_k + a_k I`.
///
/// Works over the Gaussian integers; every division by `k` must be exact and
/// every coefficient must come out real.
pub fn char_poly(m: &GaussianMatrix) -> Result<IntPolynomial, AlgebraError> {
    if !m.is_square() {
        return Err(AlgebraError::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    let mut coefficients = vec![BigInt::one()];
    let mut acc = GaussianMatrix::identity(n);
    for k in 1..=n {
        let product = m.mul(&acc);
        let coefficient = (-product.trace())
            .exact_div_int(&BigInt::from(k))
            .ok_or(AlgebraError::NonIntegral { index: k })?;
        if !coefficient.is_real() {
            return Err(AlgebraError::NonReal { index: k });
        }
        if k < n {
            acc = product;
            for i in 0..n {
                acc[(i, i)] += &coefficient;
            }
        }
        coefficients.push(coefficient.re);
    }
    Ok(IntPolynomial { coefficients })
}
