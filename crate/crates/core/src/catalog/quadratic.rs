//! Powers of a positive-definite quadratic `a x^2 + 2 b x + c`, `ac - b^2 > 0`.
//!
//! Two normalizations of the auxiliary parameter appear:
//! `u = 4(ac - b^2)/(ac)` for integer powers ([`halfline_u`]) and
//! `u = (ac - b^2)/(4ac)` for half-integer powers ([`half_integer_u`]). Each
//! one is the only choice that reproduces the quadrature oracle for its own
//! formula; swapping them breaks both.

use std::f64::consts::PI;

use super::{binom_f64, int, real, require, CatalogEntry, Params, Value};
use crate::error::Result;
use crate::exact::{big_to_f64, double_factorial};
use crate::quadrature::{Integrand, IntervalSpec};
use crate::special::arccot;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadraticParams {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl QuadraticParams {
    pub fn new(a: f64, b: f64, c: f64) -> Self {
        QuadraticParams { a, b, c }
    }

    /// The discriminant `b^2 - ac`; negative on the admissible domain.
    pub fn d(&self) -> f64 {
        self.b * self.b - self.a * self.c
    }

    fn from_params(q: &Params) -> Result<Self> {
        Ok(QuadraticParams::new(q.get("a")?, q.get("b")?, q.get("c")?))
    }

    fn check(&self, id: &str) -> Result<()> {
        require(self.a > 0.0, id, "a > 0")?;
        require(-self.d() > 0.0, id, "a c - b^2 > 0")
    }

    fn at(&self, x: f64) -> f64 {
        (self.a * x + 2.0 * self.b) * x + self.c
    }
}

pub fn halfline_u(q: QuadraticParams) -> f64 {
    4.0 * -q.d() / (q.a * q.c)
}

pub fn half_integer_u(q: QuadraticParams) -> f64 {
    -q.d() / (4.0 * q.a * q.c)
}

/// `∫₀^∞ dx/(a x^2 + 2bx + c) = arccot(b/sqrt(ac - b^2)) / sqrt(ac - b^2)`.
pub fn base_case(q: QuadraticParams) -> Result<f64> {
    q.check("3.249-base")?;
    let r = (-q.d()).sqrt();
    Ok(arccot(q.b / r) / r)
}

/// The same base case with argument `1/sqrt(ac - b^2)` in place of
/// `b/sqrt(ac - b^2)`.
pub fn base_case_unit_argument(q: QuadraticParams) -> Result<f64> {
    q.check("3.249-base")?;
    let r = (-q.d()).sqrt();
    Ok(arccot(1.0 / r) / r)
}

/// `∫₀^∞ dx/(a x^2 + 2bx + c)^n`, `n >= 1`, with `u = 4(ac - b^2)/(ac)`.
///
/// The factor `2b` in front is folded into the bracket, which makes `b = 0`
/// an ordinary point.
pub fn quadratic_power_halfline(q: QuadraticParams, n: u32) -> Result<Value> {
    q.check("3.252.1")?;
    require(n >= 1, "3.252.1", "n >= 1")?;
    Ok(halfline_with_u(q, n, halfline_u(q)))
}

/// Integer-power formula evaluated with an arbitrary `u`.
pub fn halfline_with_u(q: QuadraticParams, n: u32, u: f64) -> Value {
    let s = (q.a * q.c * u).sqrt();
    let lead = 2.0 * binom_f64(2 * u64::from(n) - 2, u64::from(n) - 1) / (q.a * (q.c * u).powi(n as i32));
    let head = s * arccot(2.0 * q.b / s);
    let (sum, abs) = central_series(u, n - 1);
    Value {
        value: lead * (head - q.b * sum),
        scale: lead.abs() * (head.abs() + q.b.abs() * abs),
    }
}

/// `sum_{j=1}^{terms} u^j/(j C(2j, j))` and the sum of absolute values.
fn central_series(u: f64, terms: u32) -> (f64, f64) {
    let mut sum = 0.0;
    let mut abs = 0.0;
    let mut central = 1.0;
    let mut power = 1.0;
    for j in 1..=terms {
        let jf = f64::from(j);
        central *= (2.0 * jf) * (2.0 * jf - 1.0) / (jf * jf);
        power *= u;
        let term = power / (jf * central);
        sum += term;
        abs += term.abs();
    }
    (sum, abs)
}

/// Partial sum `sum_{j=1}^{J} u^j/(j C(2j, j))` with `u = 4(ac - b^2)/(ac)`.
/// Requires `b > 0`, which puts `u` in `(0, 4)`.
pub fn quadratic_power_series_partial(q: QuadraticParams, terms: u32) -> Result<f64> {
    series_check(q)?;
    require(terms >= 1, "series", "J >= 1")?;
    Ok(central_series(halfline_u(q), terms).0)
}

/// Limit of [`quadratic_power_series_partial`]:
/// `sqrt(acu)/b · arccot(2b/sqrt(acu))`.
pub fn quadratic_power_series_limit(q: QuadraticParams) -> Result<f64> {
    series_check(q)?;
    let s = (q.a * q.c * halfline_u(q)).sqrt();
    Ok(s / q.b * arccot(2.0 * q.b / s))
}

fn series_check(q: QuadraticParams) -> Result<()> {
    q.check("series")?;
    require(q.b > 0.0, "series", "b > 0")?;
    require(halfline_u(q).abs() < 4.0, "series", "|u| < 4")
}

/// `∫_{-∞}^{∞} dx/(a x^2 + 2bx + c)^n = (2n-3)!! π a^(n-1) / ((2n-2)!! (ac-b^2)^(n-1/2))`.
pub fn quadratic_power_line(q: QuadraticParams, n: u32) -> Result<f64> {
    q.check("3.252.2")?;
    require(n >= 1, "3.252.2", "n >= 1")?;
    let n = i64::from(n);
    let ratio = big_to_f64(&double_factorial(2 * n - 3)?) / big_to_f64(&double_factorial(2 * n - 2)?);
    Ok(ratio * PI * q.a.powi(n as i32 - 1) / (-q.d()).powf(n as f64 - 0.5))
}

/// Wallis: `∫₀^∞ du/(1 + u^2)^n = (2n-3)!!/(2n-2)!! · π/2`.
pub fn wallis(n: u32) -> Result<f64> {
    require(n >= 1, "3.249.1", "n >= 1")?;
    let n = i64::from(n);
    let ratio = big_to_f64(&double_factorial(2 * n - 3)?) / big_to_f64(&double_factorial(2 * n - 2)?);
    Ok(ratio * PI / 2.0)
}

/// `∫₀^∞ dx/(a x^2 + 2bx + c)^(n+3/2)` with `u = (ac - b^2)/(4ac)`.
pub fn quadratic_power_half_integer(q: QuadraticParams, n: u32) -> Result<Value> {
    q.check("3.252.3")?;
    Ok(half_integer_with_u(q, n, half_integer_u(q)))
}

/// Half-integer formula evaluated with an arbitrary `u`.
pub fn half_integer_with_u(q: QuadraticParams, n: u32, u: f64) -> Value {
    let disc = -q.d();
    let lead = (q.c * u).powi(-(n as i32))
        / (q.c.sqrt() * binom_f64(2 * u64::from(n), u64::from(n)) * (2.0 * f64::from(n) + 1.0));
    let head = 1.0 / ((q.a * q.c).sqrt() + q.b);
    let mut sum = 0.0;
    let mut abs = 0.0;
    let mut power = 1.0;
    for j in 1..=n {
        power *= u;
        let term = binom_f64(2 * u64::from(j), u64::from(j)) * power;
        sum += term;
        abs += term.abs();
    }
    let k = q.b / disc;
    Value {
        value: lead * (head - k * sum),
        scale: lead.abs() * (head.abs() + k.abs() * abs),
    }
}

fn power_integrand(q: QuadraticParams, exponent: f64) -> Integrand {
    Integrand::new(move |x: f64| q.at(x).powf(-exponent))
}

const A_GRID: &[f64] = &[0.3, 3.0];
const B_GRID: &[f64] = &[-0.75, 0.0, 1.5];
const C_GRID: &[f64] = &[1.0, 10.0];

fn order(q: &Params, id: &str, min: i64) -> Result<u32> {
    let n = q.int("n")?;
    require(n >= min, id, if min == 0 { "n >= 0" } else { "n >= 1" })?;
    Ok(n as u32)
}

pub(crate) fn entries() -> Vec<CatalogEntry> {
    vec![
        CatalogEntry {
            id: "3.249-base",
            params: const { &[real("a"), real("b"), real("c")] },
            constraints: "a > 0, a c - b^2 > 0",
            provenance: "complete the square, then an arctangent substitution",
            grid: &[("a", &[0.3, 1.0, 3.0]), ("b", &[-1.5, -0.3, 0.0, 0.75, 1.5]), ("c", &[1.0, 10.0])],
            check: |q| QuadraticParams::from_params(q)?.check("3.249-base"),
            closed: |q| Ok(Value::stable(base_case(QuadraticParams::from_params(q)?)?)),
            integrand: |q| {
                let p = QuadraticParams::from_params(q)?;
                Ok((power_integrand(p, 1.0), IntervalSpec::semi_infinite(0.0)))
            },
        },
        CatalogEntry {
            id: "3.252.1",
            params: const { &[real("a"), real("b"), real("c"), int("n")] },
            constraints: "a > 0, a c - b^2 > 0, n >= 1",
            provenance: "(n-1)-fold c-derivative of the base case, closed by a rescaling of a, b, c",
            grid: &[("a", A_GRID), ("b", B_GRID), ("c", C_GRID), ("n", &[1.0, 2.0, 3.0, 6.0])],
            check: |q| {
                QuadraticParams::from_params(q)?.check("3.252.1")?;
                order(q, "3.252.1", 1).map(drop)
            },
            closed: |q| quadratic_power_halfline(QuadraticParams::from_params(q)?, order(q, "3.252.1", 1)?),
            integrand: |q| {
                let p = QuadraticParams::from_params(q)?;
                let n = order(q, "3.252.1", 1)?;
                Ok((power_integrand(p, f64::from(n)), IntervalSpec::semi_infinite(0.0)))
            },
        },
        CatalogEntry {
            id: "3.252.2",
            params: const { &[real("a"), real("b"), real("c"), int("n")] },
            constraints: "a > 0, a c - b^2 > 0, n >= 1",
            provenance: "shift and scale to the Wallis integral",
            grid: &[("a", A_GRID), ("b", B_GRID), ("c", C_GRID), ("n", &[1.0, 2.0, 4.0, 6.0])],
            check: |q| {
                QuadraticParams::from_params(q)?.check("3.252.2")?;
                order(q, "3.252.2", 1).map(drop)
            },
            closed: |q| {
                Ok(Value::stable(quadratic_power_line(QuadraticParams::from_params(q)?, order(q, "3.252.2", 1)?)?))
            },
            integrand: |q| {
                let p = QuadraticParams::from_params(q)?;
                let n = order(q, "3.252.2", 1)?;
                Ok((power_integrand(p, f64::from(n)), IntervalSpec::bi_infinite()))
            },
        },
        CatalogEntry {
            id: "3.249.1",
            params: const { &[int("n")] },
            constraints: "n >= 1",
            provenance: "Wallis integral",
            grid: &[("n", &[1.0, 2.0, 3.0, 4.0, 5.0, 6.0])],
            check: |q| order(q, "3.249.1", 1).map(drop),
            closed: |q| Ok(Value::stable(wallis(order(q, "3.249.1", 1)?)?)),
            integrand: |q| {
                let n = order(q, "3.249.1", 1)? as i32;
                let f = Integrand::new(move |x: f64| (1.0 + x * x).powi(-n));
                Ok((f, IntervalSpec::semi_infinite(0.0)))
            },
        },
        CatalogEntry {
            id: "3.252.3",
            params: const { &[real("a"), real("b"), real("c"), int("n")] },
            constraints: "a > 0, a c - b^2 > 0, n >= 0",
            provenance: "n-fold c-derivative of the n = 0 case, closed by a rescaling of a, b, c",
            grid: &[("a", A_GRID), ("b", B_GRID), ("c", C_GRID), ("n", &[0.0, 1.0, 2.0, 4.0, 6.0])],
            check: |q| {
                QuadraticParams::from_params(q)?.check("3.252.3")?;
                order(q, "3.252.3", 0).map(drop)
            },
            closed: |q| quadratic_power_half_integer(QuadraticParams::from_params(q)?, order(q, "3.252.3", 0)?),
            integrand: |q| {
                let p = QuadraticParams::from_params(q)?;
                let n = order(q, "3.252.3", 0)?;
                Ok((power_integrand(p, f64::from(n) + 1.5), IntervalSpec::semi_infinite(0.0)))
            },
        },
    ]
}
