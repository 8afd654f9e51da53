//! Integrands built from `e^{-px}`: the fake-parameter family, `T_j`,
//! exponential-polynomial antiderivatives and 3.471.1.

use std::f64::consts::LN_2;

use super::{binom_f64, factorial_f64, int, real, require, CatalogEntry, Params, Value};
use crate::error::{domain, Result};
use crate::exact::p_poly;
use crate::quadrature::{Integrand, IntervalSpec};
use crate::special::exp_remainder;

/// Integrand `x^n e^{px} P_n(e^{px}) / (1 + e^{px})^(n+1)` on `[0, inf)`.
///
/// Evaluated as `x^n v P~_n(v) / (1 + v)^(n+1)` with `v = e^{-px}` and `P~_n`
/// the reversed polynomial, which cannot overflow.
pub fn pn_integrand(n: u32, p: f64) -> Result<(Integrand, IntervalSpec)> {
    if !(p > 0.0) {
        return Err(domain("pn-family", "p > 0"));
    }
    let rev: Vec<f64> = p_poly(n)?
        .reversed()
        .coeffs()
        .iter()
        .map(crate::exact::big_to_f64)
        .collect();
    let f = Integrand::new(move |x: f64| {
        let v = (-p * x).exp();
        if v == 0.0 {
            return 0.0;
        }
        let poly = rev.iter().rev().fold(0.0, |acc, c| acc * v + c);
        x.powi(n as i32) * v * poly / (1.0 + v).powi(n as i32 + 1)
    });
    Ok((f, IntervalSpec::semi_infinite(0.0)))
}

/// `T_j = ∫₀^∞ e^{-px} (e^{-x} - 1)^n x^{-j} dx` for `p > 0`, `1 <= j <= n`:
/// `(-1)^j/(j-1)! sum_k (-1)^k C(n,k) (p+n-k)^(j-1) ln(p+n-k)`.
pub fn t_family(p: f64, n: u32, j: u32) -> Result<Value> {
    t_family_shifted(p, n, j, 0.0)
}

/// Same value with `ln` replaced by `ln - H_{j-1}`. The harmonic term is a
/// polynomial of degree `j - 1 < n` in `k` and drops out of the alternating
/// sum, so the two results agree up to rounding.
pub fn t_family_with_harmonic(p: f64, n: u32, j: u32) -> Result<Value> {
    let h: f64 = (1..j).map(|i| 1.0 / f64::from(i)).sum();
    t_family_shifted(p, n, j, h)
}

fn t_family_shifted(p: f64, n: u32, j: u32, shift: f64) -> Result<Value> {
    check_t(p, n, j, "t-family")?;
    let mut sum = 0.0;
    let mut abs = 0.0;
    for k in 0..=n {
        let s = p + f64::from(n - k);
        let term = binom_f64(n.into(), k.into()) * s.powi(j as i32 - 1) * (s.ln() - shift);
        sum += if k % 2 == 0 { term } else { -term };
        abs += term.abs();
    }
    let lead = 1.0 / factorial_f64(u64::from(j - 1));
    let lead = if j % 2 == 0 { lead } else { -lead };
    Ok(Value {
        value: lead * sum,
        scale: lead.abs() * abs,
    })
}

fn check_t(p: f64, n: u32, j: u32, id: &str) -> Result<()> {
    require(p > 0.0, id, "p > 0")?;
    require(j >= 1, id, "j >= 1")?;
    require(j <= n, id, "j <= n")
}

fn t_integrand(p: f64, n: u32, j: u32) -> (Integrand, IntervalSpec) {
    let f = Integrand::new(move |x: f64| {
        let m = (-x).exp_m1();
        (m / x).powi(j as i32) * m.powi((n - j) as i32) * (-p * x).exp()
    });
    (f, IntervalSpec::semi_infinite(0.0))
}

/// `∫ x^n e^{ax} dx = n! e^{ax} sum_k (-1)^k x^(n-k) / ((n-k)! a^(k+1))`.
pub fn exp_poly_antiderivative(n: u32, a: f64, x: f64) -> Result<f64> {
    Ok(antiderivative_terms(n, a, x)?.value)
}

fn antiderivative_terms(n: u32, a: f64, x: f64) -> Result<Value> {
    require(a != 0.0, "2.321.2", "a != 0")?;
    let mut sum = 0.0;
    let mut abs = 0.0;
    for k in 0..=n {
        let term = x.powi((n - k) as i32) / (factorial_f64(u64::from(n - k)) * a.powi(k as i32 + 1));
        sum += if k % 2 == 0 { term } else { -term };
        abs += term.abs();
    }
    let lead = factorial_f64(n.into()) * (a * x).exp();
    Ok(Value {
        value: lead * sum,
        scale: lead * abs,
    })
}

/// `∫₀^u x^n e^{-ax} dx`, evaluated as `n!/a^(n+1) e^{-au} R_n(au)` with `R_n`
/// the remainder of the exponential series, so small `u` keeps full accuracy.
pub fn exp_poly_finite(n: u32, a: f64, u: f64) -> Result<f64> {
    require(a > 0.0, "3.351.1", "a > 0")?;
    require(u > 0.0, "3.351.1", "u > 0")?;
    let full = factorial_f64(n.into()) / a.powi(n as i32 + 1);
    Ok(full * (-a * u).exp() * exp_remainder(a * u, n))
}

/// `∫_u^∞ x^n e^{-ax} dx = e^{-au} sum_k (n!/k!) u^k / a^(n-k+1)`.
pub fn exp_poly_tail(n: u32, a: f64, u: f64) -> Result<f64> {
    require(a > 0.0, "3.351.2", "a > 0")?;
    require(u >= 0.0, "3.351.2", "u >= 0")?;
    let nf = factorial_f64(n.into());
    let sum: f64 = (0..=n)
        .map(|k| nf / factorial_f64(k.into()) * u.powi(k as i32) / a.powi((n - k) as i32 + 1))
        .sum();
    Ok((-a * u).exp() * sum)
}

/// 3.351.1 exactly as displayed when the integrand exponent `m` differs from
/// the `n` used on the right: integrand `x^m e^{-ax}` with `m = n + 1`.
pub fn exp_poly_finite_mismatched_integrand(n: u32, a: f64, u: f64) -> (Integrand, IntervalSpec) {
    let m = n as i32 + 1;
    let f = Integrand::new(move |x: f64| x.powi(m) * (-a * x).exp());
    (f, IntervalSpec::finite(0.0, u))
}

fn nat(q: &Params, name: &str) -> Result<u32> {
    let v = q.int(name)?;
    u32::try_from(v).map_err(|_| domain("parameter", format!("{name} >= 0")))
}

fn power_exp(n: u32, a: f64) -> Integrand {
    Integrand::new(move |x: f64| x.powi(n as i32) * (-a * x).exp())
}

pub(crate) fn entries() -> Vec<CatalogEntry> {
    vec![
        CatalogEntry {
            id: "3.310",
            params: const { &[real("p")] },
            constraints: "p > 0",
            provenance: "elementary primitive -e^{-px}/p",
            grid: &[],
            check: |q| require(q.get("p")? > 0.0, "3.310", "p > 0"),
            closed: |q| Ok(Value::stable(1.0 / q.get("p")?)),
            integrand: |q| {
                let p = q.get("p")?;
                Ok((Integrand::new(move |x: f64| (-p * x).exp()), IntervalSpec::semi_infinite(0.0)))
            },
        },
        CatalogEntry {
            id: "3.311.1",
            params: const { &[real("p")] },
            constraints: "p > 0",
            provenance: "t = px removes p; u = e^x and partial fractions",
            grid: &[],
            check: |q| require(q.get("p")? > 0.0, "3.311.1", "p > 0"),
            closed: |q| Ok(Value::stable(LN_2 / q.get("p")?)),
            integrand: |q| {
                let p = q.get("p")?;
                let f = Integrand::new(move |x: f64| {
                    let v = (-p * x).exp();
                    v / (1.0 + v)
                });
                Ok((f, IntervalSpec::semi_infinite(0.0)))
            },
        },
        CatalogEntry {
            id: "pn-family",
            params: const { &[int("n"), real("p")] },
            constraints: "n >= 1, p > 0",
            provenance: "n-fold p-derivative of 3.311.1; numerator polynomials from the P_n recurrence",
            grid: &[("n", &[1.0, 2.0, 3.0, 4.0, 5.0, 6.0])],
            check: |q| {
                require(q.int("n")? >= 1, "pn-family", "n >= 1")?;
                require(q.get("p")? > 0.0, "pn-family", "p > 0")
            },
            closed: |q| {
                let (n, p) = (nat(q, "n")?, q.get("p")?);
                Ok(Value::stable(factorial_f64(n.into()) * LN_2 / p.powi(n as i32 + 1)))
            },
            integrand: |q| pn_integrand(nat(q, "n")?, q.get("p")?),
        },
        CatalogEntry {
            id: "3.471.1",
            params: const { &[real("b"), real("u")] },
            constraints: "b > 0, u > 0",
            provenance: "t = -b/x turns the integrand into an exact derivative",
            grid: &[("b", &[0.3, 1.0, 10.0]), ("u", &[0.3, 1.0, 10.0])],
            check: |q| {
                require(q.get("b")? > 0.0, "3.471.1", "b > 0")?;
                require(q.get("u")? > 0.0, "3.471.1", "u > 0")
            },
            closed: |q| {
                let (b, u) = (q.get("b")?, q.get("u")?);
                Ok(Value::stable((-b / u).exp() / b))
            },
            integrand: |q| {
                let (b, u) = (q.get("b")?, q.get("u")?);
                let f = Integrand::new(move |x: f64| {
                    let e = (-b / x).exp();
                    if e == 0.0 {
                        0.0
                    } else {
                        e / (x * x)
                    }
                });
                Ok((f, IntervalSpec::finite(0.0, u)))
            },
        },
        CatalogEntry {
            id: "t-family",
            params: const { &[real("p"), int("n"), int("j")] },
            constraints: "p > 0, 1 <= j <= n",
            provenance: "T_j = -∫ T_{j-1} dp; iterated logarithm primitives, harmonic terms cancel",
            grid: &[
                ("p", &[0.3, 1.0, 10.0]),
                ("n", &[1.0, 2.0, 3.0, 4.0, 6.0]),
                ("j", &[1.0, 2.0, 3.0, 4.0, 6.0]),
            ],
            check: |q| {
                let (n, j) = (q.int("n")?, q.int("j")?);
                require(n >= 0, "t-family", "n >= 0")?;
                require(j >= 1, "t-family", "j >= 1")?;
                check_t(q.get("p")?, n as u32, j as u32, "t-family")
            },
            closed: |q| t_family(q.get("p")?, nat(q, "n")?, nat(q, "j")?),
            integrand: |q| Ok(t_integrand(q.get("p")?, nat(q, "n")?, nat(q, "j")?)),
        },
        CatalogEntry {
            id: "3.411.19",
            params: const { &[real("p"), int("n")] },
            constraints: "p > 0, n >= 1",
            provenance: "case j = 1 of the T_j family",
            grid: &[("p", &[0.3, 1.0, 3.0, 10.0]), ("n", &[1.0, 2.0, 3.0, 4.0, 6.0])],
            check: |q| {
                require(q.int("n")? >= 1, "3.411.19", "n >= 1")?;
                require(q.get("p")? > 0.0, "3.411.19", "p > 0")
            },
            closed: |q| {
                let (p, n) = (q.get("p")?, nat(q, "n")?);
                let mut sum = 0.0;
                let mut abs = 0.0;
                for k in 0..=n {
                    let term = binom_f64(n.into(), k.into()) * (p + f64::from(n - k)).ln();
                    sum += if k % 2 == 0 { term } else { -term };
                    abs += term.abs();
                }
                Ok(Value { value: -sum, scale: abs })
            },
            integrand: |q| Ok(t_integrand(q.get("p")?, nat(q, "n")?, 1)),
        },
        CatalogEntry {
            id: "3.411.20",
            params: const { &[real("p"), int("n")] },
            constraints: "p > 0, n >= 2",
            provenance: "case j = 2 of the T_j family",
            grid: &[("p", &[0.3, 1.0, 3.0, 10.0]), ("n", &[2.0, 3.0, 4.0, 6.0])],
            check: |q| {
                require(q.int("n")? >= 2, "3.411.20", "n >= 2")?;
                require(q.get("p")? > 0.0, "3.411.20", "p > 0")
            },
            closed: |q| {
                let (p, n) = (q.get("p")?, nat(q, "n")?);
                let mut sum = 0.0;
                let mut abs = 0.0;
                for k in 0..=n {
                    let s = p + f64::from(n - k);
                    let term = binom_f64(n.into(), k.into()) * s * s.ln();
                    sum += if k % 2 == 0 { term } else { -term };
                    abs += term.abs();
                }
                Ok(Value { value: sum, scale: abs })
            },
            integrand: |q| Ok(t_integrand(q.get("p")?, nat(q, "n")?, 2)),
        },
        CatalogEntry {
            id: "2.321.2",
            params: const { &[int("n"), real("a"), real("x")] },
            constraints: "n >= 0, a != 0, x > 0",
            provenance: "induction on the integration-by-parts recurrence 2.321.1; value F(x) - F(0)",
            grid: &[
                ("n", &[0.0, 1.0, 3.0, 6.0]),
                ("a", &[-3.0, -0.75, 0.3, 1.5]),
                ("x", &[0.3, 1.0, 3.0]),
            ],
            check: |q| {
                require(q.int("n")? >= 0, "2.321.2", "n >= 0")?;
                require(q.get("a")? != 0.0, "2.321.2", "a != 0")?;
                require(q.get("x")? > 0.0, "2.321.2", "x > 0")
            },
            closed: |q| {
                let (n, a, x) = (nat(q, "n")?, q.get("a")?, q.get("x")?);
                let hi = antiderivative_terms(n, a, x)?;
                let lo = antiderivative_terms(n, a, 0.0)?;
                Ok(Value {
                    value: hi.value - lo.value,
                    scale: hi.scale + lo.scale,
                })
            },
            integrand: |q| {
                let (n, a, x) = (nat(q, "n")?, q.get("a")?, q.get("x")?);
                Ok((power_exp(n, -a), IntervalSpec::finite(0.0, x)))
            },
        },
        CatalogEntry {
            id: "3.351.1",
            params: const { &[int("n"), real("a"), real("u")] },
            constraints: "n >= 0, a > 0, u > 0",
            provenance: "2.321.2 between 0 and u",
            grid: &[
                ("n", &[0.0, 1.0, 3.0, 6.0]),
                ("a", &[0.3, 1.0, 3.0, 10.0]),
                ("u", &[0.3, 1.0, 3.0]),
            ],
            check: |q| {
                require(q.int("n")? >= 0, "3.351.1", "n >= 0")?;
                require(q.get("a")? > 0.0, "3.351.1", "a > 0")?;
                require(q.get("u")? > 0.0, "3.351.1", "u > 0")
            },
            closed: |q| {
                Ok(Value::stable(exp_poly_finite(nat(q, "n")?, q.get("a")?, q.get("u")?)?))
            },
            integrand: |q| {
                let (n, a, u) = (nat(q, "n")?, q.get("a")?, q.get("u")?);
                Ok((power_exp(n, a), IntervalSpec::finite(0.0, u)))
            },
        },
        CatalogEntry {
            id: "3.351.2",
            params: const { &[int("n"), real("a"), real("u")] },
            constraints: "n >= 0, a > 0, u >= 0",
            provenance: "2.321.2 between u and infinity",
            grid: &[
                ("n", &[0.0, 1.0, 3.0, 6.0]),
                ("a", &[0.3, 1.0, 3.0, 10.0]),
                ("u", &[0.0, 1.0, 3.0]),
            ],
            check: |q| {
                require(q.int("n")? >= 0, "3.351.2", "n >= 0")?;
                require(q.get("a")? > 0.0, "3.351.2", "a > 0")?;
                require(q.get("u")? >= 0.0, "3.351.2", "u >= 0")
            },
            closed: |q| Ok(Value::stable(exp_poly_tail(nat(q, "n")?, q.get("a")?, q.get("u")?)?)),
            integrand: |q| {
                let (n, a, u) = (nat(q, "n")?, q.get("a")?, q.get("u")?);
                Ok((power_exp(n, a), IntervalSpec::semi_infinite(u)))
            },
        },
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn t_family_examples() {
        let v = t_family(1.0, 1, 1).unwrap().value;
        assert!((v + LN_2).abs() < 1e-15);
        let expected = 4.0 * 4f64.ln() - 6.0 * 3f64.ln() + 2.0 * LN_2;
        assert!((t_family(2.0, 2, 2).unwrap().value - expected).abs() < 1e-14);
        assert!(t_family(1.0, 1, 2).is_err());
        assert!(t_family(0.0, 2, 1).is_err());
    }

    #[test]
    fn harmonic_route_agrees() {
        for &(p, n, j) in &[(0.3, 4, 3), (3.0, 6, 6), (1.0, 2, 1)] {
            let a = t_family(p, n, j).unwrap();
            let b = t_family_with_harmonic(p, n, j).unwrap();
            assert!((a.value - b.value).abs() < 1e-10 * a.scale.max(1.0));
        }
    }

    #[test]
    fn antiderivative_examples() {
        assert_eq!(exp_poly_antiderivative(0, 1.0, 0.0).unwrap(), 1.0);
        assert_eq!(exp_poly_antiderivative(1, 1.0, 0.0).unwrap(), -1.0);
        assert!(exp_poly_antiderivative(1, 0.0, 1.0).is_err());
    }

    #[test]
    fn finite_and_tail_examples() {
        let e1 = (-1f64).exp();
        assert!((exp_poly_finite(1, 1.0, 1.0).unwrap() - (1.0 - 2.0 * e1)).abs() < 1e-15);
        assert!((exp_poly_tail(1, 1.0, 1.0).unwrap() - 2.0 * e1).abs() < 1e-15);
        assert!((exp_poly_finite(0, 1.0, 0.5).unwrap() - (1.0 - (-0.5f64).exp())).abs() < 1e-16);
        assert_eq!(exp_poly_tail(3, 2.0, 0.0).unwrap(), 6.0 / 16.0);
    }
}
