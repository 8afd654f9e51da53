//! Powers of `tan x` on `[0, π/4]`.
//!
//! Values are kept exact as `s·κ + r` with `s = ±1`, `κ` the transcendental
//! base (`π/4` for even powers, `ln 2 / 2` for odd ones) and `r` rational, so
//! the recurrences can be checked with zero tolerance.

use std::f64::consts::{FRAC_PI_4, LN_2};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{int, require, CatalogEntry, Value};
use crate::exact::{rational_to_f64, Rational};
use crate::quadrature::{Integrand, IntervalSpec};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TanPower {
    /// Coefficient of the transcendental base, `±1`.
    pub sign: i8,
    pub rational: Rational,
}

impl TanPower {
    fn base(sign: i8) -> Self {
        TanPower {
            sign,
            rational: Rational::zero(),
        }
    }

    /// `-self + c`.
    fn step(&self, c: Rational) -> Self {
        TanPower {
            sign: -self.sign,
            rational: c - &self.rational,
        }
    }

    fn to_f64(&self, kappa: f64) -> f64 {
        f64::from(self.sign) * kappa + rational_to_f64(&self.rational)
    }

    /// `self + other` when both carry opposite signs of the same base, as in
    /// consecutive terms; `None` otherwise.
    pub fn sum_rational(&self, other: &TanPower) -> Option<Rational> {
        (self.sign + other.sign == 0).then(|| &self.rational + &other.rational)
    }
}

fn unit_fraction(d: i64) -> Rational {
    Rational::new(BigInt::one(), BigInt::from(d))
}

/// `I_n = ∫₀^{π/4} tan^{2n} x dx` from `I_0 = π/4`, `I_n = -I_{n-1} + 1/(2n-1)`.
pub fn tan_even_recurrence(n: u32) -> TanPower {
    let mut v = TanPower::base(1);
    for k in 1..=i64::from(n) {
        v = v.step(unit_fraction(2 * k - 1));
    }
    v
}

/// `I_n = (-1)^n (π/4 - sum_{j=1}^{n} (-1)^(j-1)/(2j-1))`.
pub fn tan_even_closed(n: u32) -> TanPower {
    let mut s = Rational::zero();
    for j in 1..=i64::from(n) {
        let t = unit_fraction(2 * j - 1);
        s = if j % 2 == 1 { s + t } else { s - t };
    }
    signed(n, TanPower { sign: 1, rational: -s })
}

/// `J_n = ∫₀^{π/4} tan^{2n+1} x dx` from `J_0 = ln 2/2`, `J_n = -J_{n-1} + 1/(2n)`.
pub fn tan_odd_recurrence(n: u32) -> TanPower {
    let mut v = TanPower::base(1);
    for k in 1..=i64::from(n) {
        v = v.step(unit_fraction(2 * k));
    }
    v
}

/// `J_n = ((-1)^n / 2)(ln 2 + sum_{k=1}^{n} (-1)^k / k)`.
pub fn tan_odd_closed(n: u32) -> TanPower {
    let mut s = Rational::zero();
    for k in 1..=i64::from(n) {
        let t = unit_fraction(k);
        s = if k % 2 == 0 { s + t } else { s - t };
    }
    signed(n, TanPower { sign: 1, rational: s / BigInt::from(2) })
}

fn signed(n: u32, v: TanPower) -> TanPower {
    if n % 2 == 0 {
        v
    } else {
        TanPower {
            sign: -v.sign,
            rational: -v.rational,
        }
    }
}

pub fn tan_power_even(n: u32) -> f64 {
    tan_even_closed(n).to_f64(FRAC_PI_4)
}

pub fn tan_power_odd(n: u32) -> f64 {
    tan_odd_closed(n).to_f64(LN_2 / 2.0)
}

/// The rational part grows toward `κ` while the value shrinks like `1/(4n)`,
/// so the float conversion cancels about `log10(4n)` digits.
fn with_scale(v: TanPower, kappa: f64) -> Value {
    Value {
        value: v.to_f64(kappa),
        scale: kappa + rational_to_f64(&v.rational).abs(),
    }
}

pub(crate) fn entries() -> Vec<CatalogEntry> {
    vec![
        CatalogEntry {
            id: "3.622.3",
            params: const { &[int("n")] },
            constraints: "n >= 0",
            provenance: "integration by parts, I_n = -I_{n-1} + 1/(2n-1)",
            grid: &[],
            check: |q| require(q.int("n")? >= 0, "3.622.3", "n >= 0"),
            closed: |q| Ok(with_scale(tan_even_closed(q.int("n")? as u32), FRAC_PI_4)),
            integrand: |q| {
                let n = q.int("n")? as i32;
                let f = Integrand::new(move |x: f64| x.tan().powi(2 * n));
                Ok((f, IntervalSpec::finite(0.0, FRAC_PI_4)))
            },
        },
        CatalogEntry {
            id: "3.622.4",
            params: const { &[int("n")] },
            constraints: "n >= 0",
            provenance: "integration by parts, J_n = -J_{n-1} + 1/(2n)",
            grid: &[],
            check: |q| require(q.int("n")? >= 0, "3.622.4", "n >= 0"),
            closed: |q| Ok(with_scale(tan_odd_closed(q.int("n")? as u32), LN_2 / 2.0)),
            integrand: |q| {
                let n = q.int("n")? as i32;
                let f = Integrand::new(move |x: f64| x.tan().powi(2 * n + 1));
                Ok((f, IntervalSpec::finite(0.0, FRAC_PI_4)))
            },
        },
    ]
}

/// Verbatim even-power display: the sum runs over `j = 0..n-1`.
pub fn tan_even_as_displayed(n: u32) -> f64 {
    let s: f64 = (0..i64::from(n))
        .map(|j| {
            let sign = if (j - 1).rem_euclid(2) == 0 { 1.0 } else { -1.0 };
            sign / (2 * j - 1) as f64
        })
        .sum();
    let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
    sign * (FRAC_PI_4 - s)
}

/// Verbatim odd-power display with prefactor `(-1)^(n+1)/2` and `ln 2 - sum`.
pub fn tan_odd_as_displayed(n: u32) -> f64 {
    let s: f64 = (1..=n)
        .map(|k| {
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            sign / f64::from(k)
        })
        .sum();
    let sign = if n % 2 == 1 { 1.0 } else { -1.0 };
    sign / 2.0 * (LN_2 - s)
}
