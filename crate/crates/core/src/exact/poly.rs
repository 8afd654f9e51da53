use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::{big_to_f64, Rational};
use crate::error::{Error, Result};

/// Dense polynomial with arbitrary-precision integer coefficients.
///
/// `coeffs[i]` is the coefficient of `u^i`. The vector never ends in a zero,
/// so the zero polynomial is the empty vector.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ExactPoly {
    coeffs: Vec<BigInt>,
}

impl ExactPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        ExactPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        ExactPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::new(vec![c.into()])
    }

    /// The monomial `u`.
    pub fn u() -> Self {
        Self::from_i64(&[0, 1])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// `p(-u)`.
    pub fn reflect(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn eval_int(&self, u: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * u + c)
    }

    /// Exact evaluation at a rational point.
    pub fn eval_rational(&self, u: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * u + Rational::from(c.clone()))
    }

    /// Horner evaluation in floating point.
    pub fn eval_f64(&self, u: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * u + big_to_f64(c))
    }

    /// Coefficients reversed with respect to `degree`, i.e. `u^d p(1/u)`.
    pub fn reversed(&self) -> Self {
        let mut c = self.coeffs.clone();
        c.reverse();
        Self::new(c)
    }

    /// Sum of absolute values of the coefficients.
    pub fn l1_norm(&self) -> BigInt {
        self.coeffs.iter().map(|c| c.abs()).sum()
    }
}

impl Add for &ExactPoly {
    type Output = ExactPoly;
    fn add(self, rhs: &ExactPoly) -> ExactPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = BigInt::zero();
        ExactPoly::new(
            (0..n)
                .map(|i| {
                    self.coeffs.get(i).unwrap_or(&zero) + rhs.coeffs.get(i).unwrap_or(&zero)
                })
                .collect(),
        )
    }
}

impl Sub for &ExactPoly {
    type Output = ExactPoly;
    fn sub(self, rhs: &ExactPoly) -> ExactPoly {
        self + &(-rhs)
    }
}

impl Neg for &ExactPoly {
    type Output = ExactPoly;
    fn neg(self) -> ExactPoly {
        ExactPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &ExactPoly {
    type Output = ExactPoly;
    fn mul(self, rhs: &ExactPoly) -> ExactPoly {
        if self.is_zero() || rhs.is_zero() {
            return ExactPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        ExactPoly::new(out)
    }
}

impl fmt::Display for ExactPoly {
    /// Coefficients, constant term first, separated by spaces.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Polynomials `P_n` produced by differentiating `1/(1 + e^{px})` n times in
/// `p`: `P_1 = 1`, `P_{n+1}(u) = (n u - 1) P_n(u) - u (1 + u) P_n'(u)`.
pub fn p_poly(n: u32) -> Result<ExactPoly> {
    if n < 1 {
        return Err(Error::InvalidArgument("P_n needs n >= 1".into()));
    }
    let u = ExactPoly::u();
    let u_one_plus_u = ExactPoly::from_i64(&[0, 1, 1]);
    let mut p = ExactPoly::constant(1);
    for k in 1..n {
        let factor = &u.scale(&BigInt::from(k)) - &ExactPoly::constant(1);
        p = &(&factor * &p) - &(&u_one_plus_u * &p.derivative());
    }
    Ok(p)
}

/// `Q_n(u) = (-1)^(n-1) P_n(-u)`; its coefficients are the Eulerian numbers.
///
/// The sign `(-1)^(n-1)` is the one that makes `Q_1 = 1` and all
/// coefficients positive.
pub fn q_poly(n: u32) -> Result<ExactPoly> {
    let p = p_poly(n)?.reflect();
    Ok(if n % 2 == 0 { -&p } else { p })
}
