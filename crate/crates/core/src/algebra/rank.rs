//! Fraction-free (Bareiss) row echelon reduction over the Gaussian integers.
//!
//! Every intermediate entry is a minor of the input, so the division by the
//! previous pivot is exact. Elimination first runs on `i128` parts with
//! checked arithmetic and falls back to arbitrary precision on overflow.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::{GaussianInt, GaussianMatrix};

pub(crate) trait EliminationEntry: Clone {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    /// `(pivot * x - factor * y) / prev`, or `None` on overflow.
    fn cross_div(pivot: &Self, x: &Self, factor: &Self, y: &Self, prev: &Self) -> Option<Self>;
}

/// Gaussian integer with machine-width parts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct SmallGaussian {
    pub re: i128,
    pub im: i128,
}

impl SmallGaussian {
    pub const ZERO: SmallGaussian = SmallGaussian { re: 0, im: 0 };
    pub const ONE: SmallGaussian = SmallGaussian { re: 1, im: 0 };
    pub const I: SmallGaussian = SmallGaussian { re: 0, im: 1 };
    pub const MINUS_I: SmallGaussian = SmallGaussian { re: 0, im: -1 };

    fn checked_mul(self, o: SmallGaussian) -> Option<SmallGaussian> {
        Some(SmallGaussian {
            re: self
                .re
                .checked_mul(o.re)?
                .checked_sub(self.im.checked_mul(o.im)?)?,
            im: self
                .re
                .checked_mul(o.im)?
                .checked_add(self.im.checked_mul(o.re)?)?,
        })
    }

    fn checked_sub(self, o: SmallGaussian) -> Option<SmallGaussian> {
        Some(SmallGaussian {
            re: self.re.checked_sub(o.re)?,
            im: self.im.checked_sub(o.im)?,
        })
    }

    fn checked_exact_div(self, d: SmallGaussian) -> Option<SmallGaussian> {
        if d.im == 0 {
            assert!(
                self.re % d.re == 0 && self.im % d.re == 0,
                "non-exact fraction-free division"
            );
            return Some(SmallGaussian {
                re: self.re / d.re,
                im: self.im / d.re,
            });
        }
        let norm =
            d.re.checked_mul(d.re)?
                .checked_add(d.im.checked_mul(d.im)?)?;
        let num = self.checked_mul(SmallGaussian {
            re: d.re,
            im: -d.im,
        })?;
        assert!(
            num.re % norm == 0 && num.im % norm == 0,
            "non-exact fraction-free division"
        );
        Some(SmallGaussian {
            re: num.re / norm,
            im: num.im / norm,
        })
    }

    fn from_big(g: &GaussianInt) -> Option<SmallGaussian> {
        let re = g.re.to_i64()?;
        let im = g.im.to_i64()?;
        Some(SmallGaussian {
            re: re as i128,
            im: im as i128,
        })
    }

    pub fn to_big(self) -> GaussianInt {
        GaussianInt::new(BigInt::from(self.re), BigInt::from(self.im))
    }
}

impl EliminationEntry for SmallGaussian {
    fn zero() -> Self {
        SmallGaussian::ZERO
    }

    fn one() -> Self {
        SmallGaussian::ONE
    }

    fn is_zero(&self) -> bool {
        self.re == 0 && self.im == 0
    }

    fn cross_div(pivot: &Self, x: &Self, factor: &Self, y: &Self, prev: &Self) -> Option<Self> {
        pivot
            .checked_mul(*x)?
            .checked_sub(factor.checked_mul(*y)?)?
            .checked_exact_div(*prev)
    }
}

impl EliminationEntry for GaussianInt {
    fn zero() -> Self {
        <GaussianInt as Zero>::zero()
    }

    fn one() -> Self {
        GaussianInt::from_int(1)
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn cross_div(pivot: &Self, x: &Self, factor: &Self, y: &Self, prev: &Self) -> Option<Self> {
        let num = &(pivot * x) - &(factor * y);
        Some(
            num.exact_div(prev)
                .expect("non-exact fraction-free division"),
        )
    }
}

/// Rank of a row-major `rows x cols` array. Pivot: first row with a nonzero
/// entry in the leftmost unresolved column. Returns `None` on overflow.
pub(crate) fn bareiss_rank<T: EliminationEntry>(
    mut a: Vec<T>,
    rows: usize,
    cols: usize,
) -> Option<usize> {
    let mut prev = T::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i * cols + c].is_zero()) else {
            continue;
        };
        if p != r {
            for j in c..cols {
                a.swap(p * cols + j, r * cols + j);
            }
        }
        let pivot = a[r * cols + c].clone();
        for i in r + 1..rows {
            let factor = a[i * cols + c].clone();
            for j in c + 1..cols {
                let updated =
                    T::cross_div(&pivot, &a[i * cols + j], &factor, &a[r * cols + j], &prev)?;
                a[i * cols + j] = updated;
            }
            a[i * cols + c] = T::zero();
        }
        prev = pivot;
        r += 1;
    }
    Some(r)
}

/// Rank over the Gaussian rationals.
pub fn exact_rank(m: &GaussianMatrix) -> usize {
    let small: Option<Vec<SmallGaussian>> =
        m.entries().iter().map(SmallGaussian::from_big).collect();
    if let Some(small) = small {
        if let Some(r) = bareiss_rank(small, m.rows(), m.cols()) {
            return r;
        }
    }
    bareiss_rank(m.entries().to_vec(), m.rows(), m.cols())
        .expect("arbitrary-precision elimination cannot overflow")
}

/// Rank of a matrix given directly as machine-width entries, falling back to
/// arbitrary precision on overflow.
pub(crate) fn small_rank(entries: Vec<SmallGaussian>, rows: usize, cols: usize) -> usize {
    match bareiss_rank(entries.clone(), rows, cols) {
        Some(r) => r,
        None => {
            let big = entries.into_iter().map(SmallGaussian::to_big).collect();
            bareiss_rank(big, rows, cols).expect("arbitrary-precision elimination cannot overflow")
        }
    }
}
