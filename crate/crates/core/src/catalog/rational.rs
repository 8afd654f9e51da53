//! Rational functions of `x^2`, optionally over `sqrt(1 + t^2)`: the `q(a, b)`
//! three-case evaluation, `F_n(z)`, powers of `(ax^2+b)/(cx^2+d)` and
//! `I_{n+1}(a, b)`.

use std::f64::consts::PI;

use super::{binom_f64, int, real, require, CatalogEntry, Value};
use crate::error::Result;
use crate::quadrature::{Integrand, IntervalSpec};
use crate::special::atan_over;

/// `atanh(z)/z`, equal to 1 at `z = 0`.
fn atanh_over(z: f64) -> f64 {
    if z.abs() < 1e-4 {
        let z2 = z * z;
        1.0 + z2 / 3.0 + z2 * z2 / 5.0
    } else {
        z.atanh() / z
    }
}

/// `q(a, b) = ∫ dx/((1+x^2) sqrt(b + a x^2))` over the real line.
///
/// The three cases `a < b`, `a = b`, `a > b` are written as
/// `(2/sqrt(a)) atan(c)/c` and `(2/sqrt(a)) atanh(c)/c` with
/// `c = sqrt(|b - a|/a)`, so the seam at `a = b` is continuous.
pub fn q_sqrt_quadratic(a: f64, b: f64) -> Result<f64> {
    require(a > 0.0, "3.248.6", "a > 0")?;
    require(b > 0.0, "3.248.6", "b > 0")?;
    let lead = 2.0 / a.sqrt();
    Ok(if a < b {
        lead * atan_over(((b - a) / a).sqrt())
    } else if a == b {
        lead
    } else {
        lead * atanh_over(((a - b) / a).sqrt())
    })
}

/// `c_k = C(2k, k)/4^k` for `k = 0..=n`.
fn central_ratios(n: u32) -> Vec<f64> {
    let mut c = Vec::with_capacity(n as usize + 1);
    c.push(1.0);
    for k in 1..=n {
        let k = f64::from(k);
        let prev = *c.last().expect("nonempty");
        c.push(prev * (2.0 * k - 1.0) / (2.0 * k));
    }
    c
}

/// `F_n(z) = ∫₀¹ dx/(1 + z^2 x^2)^(n+1)` by the explicit sum. `F_n(0) = 1`.
pub fn f_n_closed(z: f64, n: u32) -> f64 {
    let c = central_ratios(n);
    let w = 1.0 / (1.0 + z * z);
    let mut sum = atan_over(z);
    let mut wk = 1.0;
    for k in 1..=n {
        wk *= w;
        sum += wk / (2.0 * f64::from(k) * c[k as usize]);
    }
    c[n as usize] * sum
}

/// `F_n(z)` by the forward recursion `2n F_n = (2n-1) F_{n-1} + (1+z^2)^(-n)`.
pub fn f_n_recursive(z: f64, n: u32) -> f64 {
    let w = 1.0 / (1.0 + z * z);
    let mut f = atan_over(z);
    let mut wk = 1.0;
    for k in 1..=n {
        let k = f64::from(k);
        wk *= w;
        f = ((2.0 * k - 1.0) * f + wk) / (2.0 * k);
    }
    f
}

/// `∫₀¹ ((a x^2 + b)/(c x^2 + d))^n dx` for `cd > 0`, `ad != 0`.
///
/// Partial fractions give `G = a/c + ((bc - ad)/(cd)) / (1 + (c/d) x^2)`, and
/// the binomial expansion of `G^n` is integrated termwise with `F_{k-1}`.
pub fn rational_power_integral(a: f64, b: f64, c: f64, d: f64, n: u32) -> Result<Value> {
    require(c * d > 0.0, "lemma-3.4", "c d > 0")?;
    require(a * d != 0.0, "lemma-3.4", "a d != 0")?;
    require(n >= 1, "lemma-3.4", "n >= 1")?;
    let z = (c / d).sqrt();
    let rho = (b * c - a * d) / (a * d);
    let lead = (a / c).powi(n as i32);
    let mut sum = 1.0;
    let mut abs = 1.0;
    let mut rk = 1.0;
    for k in 1..=n {
        rk *= rho;
        let term = binom_f64(n.into(), k.into()) * rk * f_n_closed(z, k - 1);
        sum += term;
        abs += term.abs();
    }
    Ok(Value {
        value: lead * sum,
        scale: lead.abs() * abs,
    })
}

/// `I_{n+1}(a, b) = ∫₀^∞ dt/((a + b t^2)^(n+1) sqrt(1 + t^2))` for `0 < a < b`.
///
/// Equals `(a (a - b)^n)^-1 sum_j C(n, j) (-b/a)^j F_j(sqrt(b/a - 1))`.
pub fn i_n_theorem(a: f64, b: f64, n: u32) -> Result<Value> {
    require(a > 0.0, "theorem-3.5", "a > 0")?;
    require(a < b, "theorem-3.5", "a < b")?;
    let z = (b / a - 1.0).sqrt();
    let ratio = -b / a;
    let mut sum = 0.0;
    let mut abs = 0.0;
    let mut rj = 1.0;
    for j in 0..=n {
        let term = binom_f64(n.into(), j.into()) * rj * f_n_closed(z, j);
        sum += term;
        abs += term.abs();
        rj *= ratio;
    }
    let lead = 1.0 / (a * (a - b).powi(n as i32));
    Ok(Value {
        value: lead * sum,
        scale: lead.abs() * abs,
    })
}

fn q_integrand(a: f64, b: f64) -> (Integrand, IntervalSpec) {
    let f = Integrand::new(move |x: f64| 1.0 / ((1.0 + x * x) * (b + a * x * x).sqrt()));
    (f, IntervalSpec::bi_infinite())
}

pub(crate) fn entries() -> Vec<CatalogEntry> {
    vec![
        CatalogEntry {
            id: "3.248.4",
            params: &[],
            constraints: "",
            provenance: "instance a = 3, b = 4 of 3.248.6",
            grid: &[],
            check: super::no_check,
            closed: |_| Ok(Value::stable(PI / 3.0)),
            integrand: |_| Ok(q_integrand(3.0, 4.0)),
        },
        CatalogEntry {
            id: "3.248.6",
            params: const { &[real("a"), real("b")] },
            constraints: "a > 0, b > 0",
            provenance: "symmetry, t = tan(phi), u = sin(phi); three cases a = b, a < b, a > b",
            grid: &[],
            check: |q| {
                require(q.get("a")? > 0.0, "3.248.6", "a > 0")?;
                require(q.get("b")? > 0.0, "3.248.6", "b > 0")
            },
            closed: |q| Ok(Value::stable(q_sqrt_quadratic(q.get("a")?, q.get("b")?)?)),
            integrand: |q| Ok(q_integrand(q.get("a")?, q.get("b")?)),
        },
        CatalogEntry {
            id: "lemma-3.3",
            params: const { &[real("z"), int("n")] },
            constraints: "n >= 0",
            provenance: "differential-difference system in z solved as a first-order recursion in n",
            grid: &[("z", &[0.0, 0.3, 1.0, 3.0, 10.0])],
            check: |q| require(q.int("n")? >= 0, "lemma-3.3", "n >= 0"),
            closed: |q| Ok(Value::stable(f_n_closed(q.get("z")?, q.int("n")? as u32))),
            integrand: |q| {
                let (z, n) = (q.get("z")?, q.int("n")? as i32);
                let f = Integrand::new(move |x: f64| (1.0 + z * z * x * x).powi(-(n + 1)));
                Ok((f, IntervalSpec::finite(0.0, 1.0)))
            },
        },
        CatalogEntry {
            id: "lemma-3.4",
            params: const { &[real("a"), real("b"), real("c"), real("d"), int("n")] },
            constraints: "c d > 0, a d != 0, n >= 1",
            provenance: "partial fractions, binomial expansion, termwise F_k",
            grid: &[
                ("a", &[0.3, 3.0]),
                ("b", &[0.75, 10.0]),
                ("c", &[-1.0, 3.0]),
                ("d", &[-3.0, 0.3, 1.5]),
                ("n", &[1.0, 3.0, 6.0]),
            ],
            check: |q| {
                let (a, c, d) = (q.get("a")?, q.get("c")?, q.get("d")?);
                require(c * d > 0.0, "lemma-3.4", "c d > 0")?;
                require(a * d != 0.0, "lemma-3.4", "a d != 0")?;
                require(q.int("n")? >= 1, "lemma-3.4", "n >= 1")
            },
            closed: |q| {
                rational_power_integral(q.get("a")?, q.get("b")?, q.get("c")?, q.get("d")?, q.int("n")? as u32)
            },
            integrand: |q| {
                let (a, b, c, d) = (q.get("a")?, q.get("b")?, q.get("c")?, q.get("d")?);
                let n = q.int("n")? as i32;
                let f = Integrand::new(move |x: f64| {
                    let x2 = x * x;
                    ((a * x2 + b) / (c * x2 + d)).powi(n)
                });
                Ok((f, IntervalSpec::finite(0.0, 1.0)))
            },
        },
        CatalogEntry {
            id: "theorem-3.5",
            params: const { &[real("a"), real("b"), int("n")] },
            constraints: "0 < a < b, n >= 0",
            provenance: "v = t/sqrt(1+t^2), splitting identity, then powers of a rational function",
            grid: &[
                ("a", &[0.3, 1.0, 3.0]),
                ("b", &[0.75, 1.5, 3.0, 10.0]),
                ("n", &[0.0, 1.0, 2.0, 4.0, 6.0]),
            ],
            check: |q| {
                let (a, b) = (q.get("a")?, q.get("b")?);
                require(a > 0.0, "theorem-3.5", "a > 0")?;
                require(a < b, "theorem-3.5", "a < b")?;
                require(q.int("n")? >= 0, "theorem-3.5", "n >= 0")
            },
            closed: |q| i_n_theorem(q.get("a")?, q.get("b")?, q.int("n")? as u32),
            integrand: |q| {
                let (a, b, n) = (q.get("a")?, q.get("b")?, q.int("n")? as i32);
                let f = Integrand::new(move |t: f64| {
                    (a + b * t * t).powi(-(n + 1)) / (1.0 + t * t).sqrt()
                });
                Ok((f, IntervalSpec::semi_infinite(0.0)))
            },
        },
    ]
}
