//! Exact integer and rational sequences used by the closed forms.
//!
//! Everything here works over arbitrary-precision integers, so identities such
//! as the Eulerian row sums or the `P_n`/`Q_n` reflection can be asserted with
//! zero tolerance.

mod eulerian;
mod poly;

pub use eulerian::{eulerian_explicit, eulerian_recurrence, EulerianTable};
pub use poly::{p_poly, q_poly, ExactPoly};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Exact rational carrier. Always reduced with a positive denominator.
pub type Rational = BigRational;

/// `C(n, k)`, zero outside `0 <= k <= n`.
pub fn binomial(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigInt::one();
    for i in 0..k {
        // acc * (n - i) is always divisible by (i + 1) at this point
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `k!!` with `(-1)!! = 0!! = 1`.
pub fn double_factorial(k: i64) -> Result<BigInt> {
    if k < -1 {
        return Err(Error::InvalidArgument(format!(
            "double factorial needs k >= -1, got {k}"
        )));
    }
    let mut acc = BigInt::one();
    let mut m = k;
    while m > 1 {
        acc *= m;
        m -= 2;
    }
    Ok(acc)
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// `H_j = 1 + 1/2 + ... + 1/j`.
pub fn harmonic(j: u64) -> Result<Rational> {
    if j < 1 {
        return Err(Error::InvalidArgument("harmonic number needs j >= 1".into()));
    }
    Ok((1..=j).fold(Rational::zero(), |acc, i| {
        acc + Rational::new(BigInt::one(), BigInt::from(i))
    }))
}

/// Nearest `f64` to an exact rational. Handles numerators and denominators
/// far outside the `f64` range by shifting both to 64 significant bits first.
pub fn rational_to_f64(r: &Rational) -> f64 {
    big_ratio_to_f64(r.numer(), r.denom())
}

pub(crate) fn big_to_f64(x: &BigInt) -> f64 {
    big_ratio_to_f64(x, &BigInt::one())
}

fn big_ratio_to_f64(num: &BigInt, den: &BigInt) -> f64 {
    use num_traits::ToPrimitive;
    if num.is_zero() {
        return 0.0;
    }
    let nb = num.bits() as i64;
    let db = den.bits() as i64;
    // Keep 64 significant bits of each before dividing.
    let ns = (nb - 64).max(0);
    let ds = (db - 64).max(0);
    let n = (num >> ns as usize).to_f64().unwrap_or(f64::NAN);
    let d = (den >> ds as usize).to_f64().unwrap_or(f64::NAN);
    let q = n / d;
    let shift = ns - ds;
    q * 2f64.powi(shift.clamp(i32::MIN as i64, i32::MAX as i64) as i32)
}

#[cfg(test)]
mod tests {
    use super::*;

    // Pascal triangle built by addition only.
    fn pascal(n: usize) -> Vec<Vec<BigInt>> {
        let mut rows = vec![vec![BigInt::one()]];
        for i in 1..=n {
            let prev = &rows[i - 1];
            let mut row = vec![BigInt::one(); i + 1];
            for k in 1..i {
                row[k] = &prev[k - 1] + &prev[k];
            }
            rows.push(row);
        }
        rows
    }

    #[test]
    fn binomial_matches_pascal() {
        let tri = pascal(30);
        for (n, row) in tri.iter().enumerate() {
            for (k, v) in row.iter().enumerate() {
                assert_eq!(&binomial(n as u64, k as i64), v, "C({n},{k})");
            }
        }
        assert_eq!(binomial(0, 0), BigInt::one());
        assert_eq!(binomial(4, 2), BigInt::from(6));
        assert_eq!(binomial(6, 3), BigInt::from(20));
        assert_eq!(binomial(5, -1), BigInt::zero());
        assert_eq!(binomial(5, 6), BigInt::zero());
    }

    #[test]
    fn double_factorial_values() {
        assert_eq!(double_factorial(-1).unwrap(), BigInt::one());
        assert_eq!(double_factorial(0).unwrap(), BigInt::one());
        assert_eq!(double_factorial(7).unwrap(), BigInt::from(7 * 5 * 3));
        assert_eq!(double_factorial(8).unwrap(), BigInt::from(8 * 6 * 4 * 2));
        assert!(double_factorial(-2).is_err());
    }

    #[test]
    fn harmonic_values() {
        let r = |n: i64, d: i64| Rational::new(BigInt::from(n), BigInt::from(d));
        assert_eq!(harmonic(1).unwrap(), r(1, 1));
        assert_eq!(harmonic(2).unwrap(), r(3, 2));
        assert_eq!(harmonic(4).unwrap(), r(25, 12));
        assert!(harmonic(0).is_err());
    }

    #[test]
    fn rational_conversion_handles_huge_parts() {
        let big = factorial(300);
        let r = Rational::new(big.clone() * 3, big * 4);
        assert_eq!(rational_to_f64(&r), 0.75);
        let r = Rational::new(BigInt::from(1), BigInt::from(3));
        assert!((rational_to_f64(&r) - 1.0 / 3.0).abs() < 1e-17);
    }
}
