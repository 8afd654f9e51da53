//! Perfect derivatives in `ln x` and the log-ratio integrals on `[0, inf)`.

use std::f64::consts::{E, PI};

use super::{real, require, CatalogEntry, Value};
use crate::error::Result;
use crate::quadrature::{Integrand, IntervalSpec};

/// `e/2 - 1`, shared by 4.212.7 and 3.353.4.
pub fn half_e_minus_one() -> f64 {
    E / 2.0 - 1.0
}

/// `∫₁^e ln x/(α + ln x)^(α+1) dx = e/(α+1)^α - 1/α^α`.
pub fn perfect_derivative(alpha: f64) -> Result<f64> {
    require(alpha > 0.0, "lemma-10.1", "alpha > 0")?;
    Ok(E / (alpha + 1.0).powf(alpha) - alpha.powf(-alpha))
}

/// `∫₀^∞ dx/(1 + x^s) = π/(s sin(π/s))` for `s > 1`.
pub fn power_s(s: f64) -> Result<f64> {
    require(s > 1.0, "power-s", "s > 1")?;
    Ok(PI / (s * (PI / s).sin()))
}

/// `∫₀^∞ ln((a^s + x^s)/(b^s + x^s)) dx = (a - b) π / sin(π/s)`.
pub fn log_ratio_s(a: f64, b: f64, s: f64) -> Result<f64> {
    require(a > 0.0, "4.222-gen-s", "a > 0")?;
    require(b > 0.0, "4.222-gen-s", "b > 0")?;
    require(s > 1.0, "4.222-gen-s", "s > 1")?;
    Ok((a - b) * PI / (PI / s).sin())
}

fn log_ratio_integrand(a: f64, b: f64, s: f64) -> (Integrand, IntervalSpec) {
    let (as_, bs) = (a.powf(s), b.powf(s));
    let f = Integrand::new(move |x: f64| {
        let xs = x.powf(s);
        let d = (as_ - bs) / (bs + xs);
        if d.abs() < 0.5 {
            d.ln_1p()
        } else {
            ((as_ + xs) / (bs + xs)).ln()
        }
    });
    (f, IntervalSpec::semi_infinite(0.0).slow_decay(true))
}

pub(crate) fn entries() -> Vec<CatalogEntry> {
    vec![
        CatalogEntry {
            id: "4.212.7",
            params: &[],
            constraints: "",
            provenance: "t = 1 + ln x; (t - 1) e^t / t^2 is the derivative of e^t / t",
            grid: &[],
            check: super::no_check,
            closed: |_| Ok(Value::stable(half_e_minus_one())),
            integrand: |_| {
                let f = Integrand::new(|x: f64| {
                    let l = x.ln();
                    l / ((1.0 + l) * (1.0 + l))
                });
                Ok((f, IntervalSpec::finite(1.0, E)))
            },
        },
        CatalogEntry {
            id: "3.353.4",
            params: &[],
            constraints: "",
            provenance: "t = ln x in 4.212.7",
            grid: &[],
            check: super::no_check,
            closed: |_| Ok(Value::stable(half_e_minus_one())),
            integrand: |_| {
                let f = Integrand::new(|t: f64| t * t.exp() / ((1.0 + t) * (1.0 + t)));
                Ok((f, IntervalSpec::finite(0.0, 1.0)))
            },
        },
        CatalogEntry {
            id: "lemma-10.1",
            params: const { &[real("alpha")] },
            constraints: "alpha > 0",
            provenance: "t = alpha + ln x; (t - alpha) e^t / t^(alpha+1) is the derivative of e^t / t^alpha",
            grid: &[],
            check: |q| require(q.get("alpha")? > 0.0, "lemma-10.1", "alpha > 0"),
            closed: |q| Ok(Value::stable(perfect_derivative(q.get("alpha")?)?)),
            integrand: |q| {
                let alpha = q.get("alpha")?;
                let f = Integrand::new(move |x: f64| {
                    let l = x.ln();
                    l * (alpha + l).powf(-alpha - 1.0)
                });
                Ok((f, IntervalSpec::finite(1.0, E)))
            },
        },
        CatalogEntry {
            id: "4.222.1",
            params: const { &[real("a"), real("b")] },
            constraints: "a > 0, b > 0",
            provenance: "integrate by parts on [0, m] and let m -> infinity",
            grid: &[("a", &[0.3, 1.0, 10.0]), ("b", &[0.3, 1.0, 10.0])],
            check: |q| {
                require(q.get("a")? > 0.0, "4.222.1", "a > 0")?;
                require(q.get("b")? > 0.0, "4.222.1", "b > 0")
            },
            closed: |q| Ok(Value::stable((q.get("a")? - q.get("b")?) * PI)),
            integrand: |q| Ok(log_ratio_integrand(q.get("a")?, q.get("b")?, 2.0)),
        },
        CatalogEntry {
            id: "4.222-gen-s",
            params: const { &[real("a"), real("b"), real("s")] },
            constraints: "a > 0, b > 0, s > 1",
            provenance: "integrate by parts, then scale to the power-s integral",
            grid: &[("a", &[0.3, 1.0, 10.0]), ("b", &[0.3, 1.0, 10.0]), ("s", &[1.5, 3.0, 10.0])],
            check: |q| {
                require(q.get("a")? > 0.0, "4.222-gen-s", "a > 0")?;
                require(q.get("b")? > 0.0, "4.222-gen-s", "b > 0")?;
                require(q.get("s")? > 1.0, "4.222-gen-s", "s > 1")
            },
            closed: |q| Ok(Value::stable(log_ratio_s(q.get("a")?, q.get("b")?, q.get("s")?)?)),
            integrand: |q| Ok(log_ratio_integrand(q.get("a")?, q.get("b")?, q.get("s")?)),
        },
        CatalogEntry {
            id: "power-s",
            params: const { &[real("s")] },
            constraints: "s > 1",
            provenance: "beta-function evaluation, taken as known",
            grid: &[("s", &[1.5, 2.0, 3.0, 10.0])],
            check: |q| require(q.get("s")? > 1.0, "power-s", "s > 1"),
            closed: |q| Ok(Value::stable(power_s(q.get("s")?)?)),
            integrand: |q| {
                let s = q.get("s")?;
                let f = Integrand::new(move |x: f64| 1.0 / (1.0 + x.powf(s)));
                Ok((f, IntervalSpec::semi_infinite(0.0).slow_decay(true)))
            },
        },
    ]
}
