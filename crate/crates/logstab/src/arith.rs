//! Exact arithmetic shared by every other module: arbitrary-precision
//! binomial coefficients and exact rational slopes.
//!
//! Slopes are stored as the rational coefficient of the (positive) top
//! self-intersection number of the polarization, so every comparison made
//! anywhere in the crate is an exact integer cross-multiplication — no
//! floating point appears in any decision path.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

/// Exact rational number. Always reduced, denominator always positive.
pub type Rational = BigRational;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum ArithError {
    #[error("zero denominator")]
    ZeroDenominator,
}

/// Binomial coefficient `C(n, r)`, defined as 0 unless `0 <= r <= n`.
///
/// The out-of-range convention is load-bearing: the cohomology formulas in
/// [`crate::cohomology`] feed arguments straight in and rely on vanishing
/// outside the admissible range.
pub fn binomial(n: i64, r: i64) -> BigUint {
    if r < 0 || r > n {
        return BigUint::zero();
    }
    // 0 <= r <= n, so n >= 0 from here on.
    let r = r.min(n - r) as u64;
    let n = n as u64;
    let mut acc = BigUint::one();
    for i in 1..=r {
        // Incremental product of C(n-r+i, i); each division is exact.
        acc = acc * BigUint::from(n - r + i) / BigUint::from(i);
    }
    acc
}

/// The reduced fraction `num/den`. Errors on a zero denominator.
pub fn rat(num: i64, den: i64) -> Result<Rational, ArithError> {
    if den == 0 {
        return Err(ArithError::ZeroDenominator);
    }
    Ok(BigRational::new(BigInt::from(num), BigInt::from(den)))
}

/// The integer `n` as a rational.
pub fn rat_int(n: i64) -> Rational {
    BigRational::from(BigInt::from(n))
}
