//! Algebraic integrands on `[0, 1]` and the `(1+x)/(x+a)` family on `[0, inf)`.

use super::{binom_f64, factorial_f64, int, real, require, CatalogEntry, Params, Value};
use crate::error::Result;
use crate::quadrature::{Abscissa, Integrand, IntervalSpec};
use crate::special::{beta, exp_remainder};

/// Branch threshold for the `a = 1` and `p = 0` limits of 3.195.
pub const LIMIT_BRANCH_THRESHOLD: f64 = 1e-12;

/// `ln x`, accurate near `x = 1` through the distance to the right endpoint.
fn ln_near_one(a: Abscissa) -> f64 {
    if a.from_hi < 0.5 {
        (-a.from_hi).ln_1p()
    } else {
        a.x.ln()
    }
}

/// `∫₀¹ (a + b√x)/(b + c√x) x^(n/2) dx` for `bc > 0`.
pub fn sqrt_rational(a: f64, b: f64, c: f64, n: u32) -> Result<Value> {
    require(b * c > 0.0, "lemma-2.1", "b c > 0")?;
    let u = a * c - b * b;
    let t = c / b;
    let r = b / c;
    let m = f64::from(n);
    // Bracket B = sum_j (-1)^j r^j/(n+1-j) + (-r)^(n+1) ln(1 + 1/r). For small
    // t = 1/r it is the tail of the logarithm series and the direct form
    // cancels badly, so sum the tail instead.
    let (bracket, bracket_scale) = if t <= 0.5 {
        let mut sum = 0.0;
        let mut abs = 0.0;
        let mut power = t;
        for i in 1..200 {
            let term = power / (m + 1.0 + f64::from(i));
            let signed = if i % 2 == 1 { term } else { -term };
            sum += signed;
            abs += term;
            if term < 1e-18 * sum.abs() {
                break;
            }
            power *= t;
        }
        (sum, abs)
    } else {
        let mut sum = 0.0;
        let mut abs = 0.0;
        let mut power = 1.0;
        for j in 0..=n {
            let term = power / (m - f64::from(j) + 1.0);
            sum += if j % 2 == 0 { term } else { -term };
            abs += term.abs();
            power *= r;
        }
        let log_term = power * t.ln_1p();
        let log_term = if n % 2 == 0 { -log_term } else { log_term };
        (sum + log_term, abs + log_term.abs())
    };
    let head = 2.0 * u / (c * c);
    let tail = 2.0 * b / ((m + 2.0) * c);
    Ok(Value {
        value: head * bracket + tail,
        scale: (head * bracket_scale).abs() + tail.abs(),
    })
}

/// 3.195 with its limit values: 1 at `a = 1`, `ln a/(a - 1)` at `p = 0`.
pub fn simple_change_of_variables(a: f64, p: f64) -> Result<f64> {
    require(a > 0.0, "3.195", "a > 0")?;
    if (a - 1.0).abs() <= LIMIT_BRANCH_THRESHOLD {
        return Ok(1.0);
    }
    let la = a.ln();
    if p.abs() <= LIMIT_BRANCH_THRESHOLD {
        return Ok(la / (a - 1.0));
    }
    Ok(-(-p * la).exp_m1() / (p * (a - 1.0)))
}

/// The `n`-th `p`-derivative of 3.195: the integrand gains `ln^n((1+x)/(x+a))`.
///
/// The bracket `n!(a^p - 1) - sum_k n!(p ln a)^k/k!` is `n!` times the
/// remainder of the exponential series at `p ln a`, which is evaluated
/// without cancellation.
pub fn log_power(a: f64, p: f64, n: u32) -> Result<f64> {
    require(a > 0.0, "3.195-log-n", "a > 0")?;
    require(a != 1.0, "3.195-log-n", "a != 1")?;
    let la = a.ln();
    let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
    let m = f64::from(n);
    if p == 0.0 {
        return Ok(sign * la.powi(n as i32 + 1) / ((m + 1.0) * (a - 1.0)));
    }
    let lead = sign * factorial_f64(n.into()) * (-p * la).exp() / ((a - 1.0) * p.powi(n as i32 + 1));
    Ok(lead * exp_remainder(p * la, n))
}

/// `∫₀^∞ (1+x)^(b-1)/(x+a)^(b+n) dx` as a beta value minus a finite sum.
pub fn free_parameter(a: f64, b: f64, n: u32) -> Result<Value> {
    require(a > 0.0, "lemma-5.1", "a > 0")?;
    require(a != 1.0, "lemma-5.1", "a != 1")?;
    require(b > 0.0, "lemma-5.1", "b > 0")?;
    require(n >= 1, "lemma-5.1", "n >= 1")?;
    let bn = beta(f64::from(n), b)?;
    let mut sum = 0.0;
    let mut abs = bn;
    for k in 0..n {
        let kf = f64::from(k);
        let term = binom_f64((n - 1).into(), k.into()) * a.powf(-b - kf) / (b + kf);
        sum += if k % 2 == 0 { term } else { -term };
        abs += term;
    }
    let lead = (a - 1.0).powi(-(n as i32));
    Ok(Value {
        value: lead * (bn - sum),
        scale: lead.abs() * abs,
    })
}

/// Integrand of 3.268.1, `1/(1-x) - p x^(p-1)/(1-x^p)`.
///
/// Both terms blow up like `1/(1-x)`; within `1e-3/max(1,p)` of the right
/// endpoint a Taylor expansion in `t = 1 - x` replaces the difference.
pub fn log_p_integrand(p: f64, a: Abscissa) -> f64 {
    if p == 1.0 {
        return 0.0;
    }
    let t = a.from_hi;
    if t < 1e-3 / p.max(1.0) {
        let q = p - 1.0;
        return q / 2.0 - (p - 5.0) * q / 12.0 * t - (p - 3.0) * q / 8.0 * t * t
            + q * (p * p * p + p * p - 109.0 * p + 251.0) / 720.0 * t * t * t
            + (p - 5.0) * q * (p * p + 6.0 * p - 19.0) / 288.0 * t * t * t * t;
    }
    let lx = ln_near_one(a);
    let xp = (p * lx).exp();
    1.0 / t - p * xp / a.x / -(p * lx).exp_m1()
}

fn p_of(params: &Params) -> Result<f64> {
    params.get("p")
}

pub(crate) fn entries() -> Vec<CatalogEntry> {
    vec![
        CatalogEntry {
            id: "3.249.6",
            params: const { &[real("p")] },
            constraints: "p > 0",
            provenance: "substitution y = 1 - sqrt(x) reduces to two power integrals",
            grid: &[],
            check: |q| require(p_of(q)? > 0.0, "3.249.6", "p > 0"),
            closed: |q| {
                let p = p_of(q)?;
                Ok(Value::stable(2.0 / (p * (p + 1.0))))
            },
            integrand: |q| {
                let p = p_of(q)?;
                let f = Integrand::with_distances(move |a: Abscissa| {
                    (a.from_hi / (1.0 + a.x.sqrt())).powf(p - 1.0)
                });
                Ok((f, IntervalSpec::finite(0.0, 1.0).singular_lo(true).singular_hi(p < 1.0)))
            },
        },
        CatalogEntry {
            id: "3.251.1",
            params: const { &[real("a"), real("p")] },
            constraints: "a > 0, p > 0",
            provenance: "substitution t = x^a gives a beta integral, I = B(p, 1/a)/a",
            grid: &[("a", &[0.3, 1.5, 10.0])],
            check: |q| {
                require(q.get("a")? > 0.0, "3.251.1", "a > 0")?;
                require(q.get("p")? > 0.0, "3.251.1", "p > 0")
            },
            closed: |q| {
                let (a, p) = (q.get("a")?, q.get("p")?);
                Ok(Value::stable(beta(p, 1.0 / a)? / a))
            },
            integrand: |q| {
                let (s, p) = (q.get("a")?, q.get("p")?);
                let f = Integrand::with_distances(move |a: Abscissa| {
                    (-(s * ln_near_one(a)).exp_m1()).powf(p - 1.0)
                });
                let d = IntervalSpec::finite(0.0, 1.0)
                    .singular_lo(s.fract() != 0.0)
                    .singular_hi(p < 1.0);
                Ok((f, d))
            },
        },
        CatalogEntry {
            id: "lemma-2.1",
            params: const { &[real("a"), real("b"), real("c"), int("n")] },
            constraints: "b c > 0, n >= 0",
            provenance: "substitution y = b + c sqrt(x) and binomial expansion of (y - b)^n",
            grid: &[
                ("a", &[0.3, 3.0]),
                ("b", &[-1.0, 0.75, 3.0]),
                ("c", &[-2.0, 0.3, 10.0]),
                ("n", &[0.0, 2.0, 6.0]),
            ],
            check: |q| {
                require(q.get("b")? * q.get("c")? > 0.0, "lemma-2.1", "b c > 0")?;
                require(q.int("n")? >= 0, "lemma-2.1", "n >= 0")
            },
            closed: |q| sqrt_rational(q.get("a")?, q.get("b")?, q.get("c")?, q.int("n")? as u32),
            integrand: |q| {
                let (a, b, c, n) = (q.get("a")?, q.get("b")?, q.get("c")?, q.int("n")?);
                let f = Integrand::new(move |x: f64| {
                    let s = x.sqrt();
                    (a + b * s) / (b + c * s) * s.powi(n as i32)
                });
                Ok((f, IntervalSpec::finite(0.0, 1.0).singular_lo(true)))
            },
        },
        CatalogEntry {
            id: "3.195",
            params: const { &[real("a"), real("p")] },
            constraints: "a > 0 (a = 1 and p = 0 use the limit values)",
            provenance: "substitution u = (1+x)/(x+a) gives a power integral over [1/a, 1]",
            grid: &[("a", &[0.3, 1.0, 1.5, 10.0]), ("p", &[-0.75, 0.0, 0.3, 1.0, 3.0, 10.0])],
            check: |q| require(q.get("a")? > 0.0, "3.195", "a > 0"),
            closed: |q| Ok(Value::stable(simple_change_of_variables(q.get("a")?, q.get("p")?)?)),
            integrand: |q| {
                let (a, p) = (q.get("a")?, q.get("p")?);
                let f = Integrand::new(move |x: f64| {
                    ((p - 1.0) * x.ln_1p() - (p + 1.0) * (x + a).ln()).exp()
                });
                Ok((f, IntervalSpec::semi_infinite(0.0)))
            },
        },
        CatalogEntry {
            id: "3.195-log-n",
            params: const { &[real("a"), real("p"), int("n")] },
            constraints: "a > 0, a != 1, n >= 0",
            provenance: "n-fold differentiation of 3.195 in p",
            grid: &[
                ("a", &[0.3, 3.0]),
                ("p", &[-0.75, 0.0, 0.75, 3.0]),
                ("n", &[1.0, 2.0, 4.0, 6.0]),
            ],
            check: |q| {
                let a = q.get("a")?;
                require(a > 0.0, "3.195-log-n", "a > 0")?;
                require(a != 1.0, "3.195-log-n", "a != 1")?;
                require(q.int("n")? >= 0, "3.195-log-n", "n >= 0")
            },
            closed: |q| Ok(Value::stable(log_power(q.get("a")?, q.get("p")?, q.int("n")? as u32)?)),
            integrand: |q| {
                let (a, p, n) = (q.get("a")?, q.get("p")?, q.int("n")? as i32);
                let f = Integrand::new(move |x: f64| {
                    let base = ((p - 1.0) * x.ln_1p() - (p + 1.0) * (x + a).ln()).exp();
                    let lr = ((1.0 - a) / (x + a)).ln_1p();
                    base * lr.powi(n)
                });
                Ok((f, IntervalSpec::semi_infinite(0.0)))
            },
        },
        CatalogEntry {
            id: "lemma-5.1",
            params: const { &[real("a"), real("b"), int("n")] },
            constraints: "a > 0, a != 1, b > 0, n >= 1",
            provenance: "substitution u = (1+x)/(a+x), series expansion, termwise integration",
            grid: &[("a", &[0.3, 3.0, 10.0]), ("b", &[0.3, 3.0]), ("n", &[1.0, 2.0, 4.0, 6.0])],
            check: |q| {
                let (a, b) = (q.get("a")?, q.get("b")?);
                require(a > 0.0, "lemma-5.1", "a > 0")?;
                require(a != 1.0, "lemma-5.1", "a != 1")?;
                require(b > 0.0, "lemma-5.1", "b > 0")?;
                require(q.int("n")? >= 1, "lemma-5.1", "n >= 1")
            },
            closed: |q| free_parameter(q.get("a")?, q.get("b")?, q.int("n")? as u32),
            integrand: |q| {
                let (a, b, n) = (q.get("a")?, q.get("b")?, q.int("n")? as f64);
                let f = Integrand::new(move |x: f64| {
                    ((b - 1.0) * x.ln_1p() - (b + n) * (x + a).ln()).exp()
                });
                Ok((f, IntervalSpec::semi_infinite(0.0)))
            },
        },
        CatalogEntry {
            id: "3.268.1",
            params: const { &[real("p")] },
            constraints: "p > 0",
            provenance: "integrate on [0, 1 - eps] and let eps -> 0",
            grid: &[],
            check: |q| require(p_of(q)? > 0.0, "3.268.1", "p > 0"),
            closed: |q| Ok(Value::stable(p_of(q)?.ln())),
            integrand: |q| {
                let p = p_of(q)?;
                let f = Integrand::with_distances(move |a: Abscissa| log_p_integrand(p, a));
                Ok((f, IntervalSpec::finite(0.0, 1.0).singular_lo(p < 1.0)))
            },
        },
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn limit_branches_of_3_195() {
        assert_eq!(simple_change_of_variables(1.0, 3.0).unwrap(), 1.0);
        assert_eq!(simple_change_of_variables(3.0, 0.0).unwrap(), 3f64.ln() / 2.0);
        let near = simple_change_of_variables(3.0, 1e-9).unwrap();
        assert!((near - 3f64.ln() / 2.0).abs() < 1e-8);
        assert!(simple_change_of_variables(-1.0, 1.0).is_err());
    }

    #[test]
    fn log_power_reduces_to_3_195() {
        for &(a, p) in &[(0.3, 0.75), (3.0, -0.75), (10.0, 3.0)] {
            let lhs = log_power(a, p, 0).unwrap();
            let rhs = simple_change_of_variables(a, p).unwrap();
            assert!((lhs - rhs).abs() < 1e-14 * rhs.abs(), "{a} {p}");
        }
    }

    #[test]
    fn sqrt_rational_branches_agree() {
        // t = c/b on either side of the 0.5 switch
        for n in [0, 1, 4] {
            let lo = sqrt_rational(1.3, 2.0, 0.999_999_9, n).unwrap().value;
            let hi = sqrt_rational(1.3, 2.0, 1.000_000_1, n).unwrap().value;
            assert!((lo - hi).abs() < 1e-6, "{n}: {lo} {hi}");
        }
    }

    #[test]
    fn sqrt_rational_trivial_case() {
        // a = b = c: integrand is x^(n/2)
        let v = sqrt_rational(2.0, 2.0, 2.0, 2).unwrap().value;
        assert!((v - 0.5).abs() < 1e-15);
    }

    #[test]
    fn log_p_integrand_is_continuous_at_series_switch() {
        let p = 2.5;
        let t = 1e-3 / p;
        let at = |t: f64| Abscissa { x: 1.0 - t, from_lo: 1.0 - t, from_hi: t };
        let below = log_p_integrand(p, at(t * (1.0 - 1e-9)));
        let above = log_p_integrand(p, at(t * (1.0 + 1e-9)));
        assert!((below - above).abs() < 1e-9);
    }
}
