//! Real-argument gamma, beta and arc-cotangent.

use std::f64::consts::{FRAC_PI_2, PI};

use crate::error::{Error, Result};

// Lanczos approximation, g = 7, nine terms.
const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// Largest argument accepted by [`gamma`]; `Γ(171.62)` overflows `f64`.
pub const GAMMA_MAX_ARG: f64 = 171.0;

/// `ln Γ(x)` for `x > 0`.
///
/// Integer arguments up to 171 go through an exact factorial product so that
/// `ln Γ(1) = ln Γ(2) = 0` hold exactly.
pub fn log_gamma(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::InvalidArgument(format!(
            "log_gamma needs a finite x > 0, got {x}"
        )));
    }
    if x.fract() == 0.0 && x <= GAMMA_MAX_ARG {
        return Ok(factorial_f64(x as u32 - 1).ln());
    }
    if x < 0.5 {
        // Γ(x) = Γ(x + 1) / x keeps the Lanczos sum in its accurate range.
        return Ok(lanczos_ln_gamma(x + 1.0) - x.ln());
    }
    Ok(lanczos_ln_gamma(x))
}

fn lanczos_ln_gamma(x: f64) -> f64 {
    let z = x - 1.0;
    let mut series = LANCZOS[0];
    for (i, c) in LANCZOS.iter().enumerate().skip(1) {
        series += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    0.5 * (2.0 * PI).ln() + (z + 0.5) * t.ln() - t + series.ln()
}

fn factorial_f64(n: u32) -> f64 {
    (1..=n).fold(1.0, |acc, k| acc * k as f64)
}

/// `Γ(x)` for `0 < x <= 171`.
pub fn gamma(x: f64) -> Result<f64> {
    if x > GAMMA_MAX_ARG {
        return Err(Error::InvalidArgument(format!(
            "gamma overflows for x = {x} > {GAMMA_MAX_ARG}"
        )));
    }
    if x > 0.0 && x.fract() == 0.0 {
        return Ok(factorial_f64(x as u32 - 1));
    }
    Ok(log_gamma(x)?.exp())
}

/// `B(a, b) = Γ(a) Γ(b) / Γ(a + b)`.
pub fn beta(a: f64, b: f64) -> Result<f64> {
    if !(a > 0.0 && b > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "beta needs a, b > 0, got ({a}, {b})"
        )));
    }
    Ok((log_gamma(a)? + log_gamma(b)? - log_gamma(a + b)?).exp())
}

/// Inverse cotangent on the branch `(0, π)`, continuous and decreasing on the
/// whole real line.
pub fn arccot(x: f64) -> f64 {
    if x > 1.0 {
        (1.0 / x).atan()
    } else if x < -1.0 {
        PI + (1.0 / x).atan()
    } else {
        FRAC_PI_2 - x.atan()
    }
}

/// `atan(z)/z`, equal to 1 at `z = 0`.
pub fn atan_over(z: f64) -> f64 {
    if z.abs() < 1e-4 {
        let z2 = z * z;
        1.0 - z2 / 3.0 + z2 * z2 / 5.0
    } else {
        z.atan() / z
    }
}

/// Remainder of the exponential series, `e^x - sum_{k=0}^{n} x^k/k!`.
///
/// For `|x| < n + 1` the remainder is summed directly from its own series,
/// which avoids subtracting two nearly equal numbers.
pub(crate) fn exp_remainder(x: f64, n: u32) -> f64 {
    if x.abs() < n as f64 + 1.0 {
        let mut term = 1.0;
        for k in 1..=n + 1 {
            term *= x / k as f64;
        }
        let mut sum = 0.0;
        let mut k = n + 1;
        loop {
            sum += term;
            k += 1;
            term *= x / k as f64;
            if term.abs() <= 1e-17 * sum.abs() || k > n + 400 {
                break;
            }
        }
        sum
    } else {
        let mut partial = 0.0;
        let mut term = 1.0;
        for k in 0..=n {
            if k > 0 {
                term *= x / k as f64;
            }
            partial += term;
        }
        x.exp() - partial
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn log_gamma_at_one_and_two_is_zero() {
        assert_eq!(log_gamma(1.0).unwrap(), 0.0);
        assert_eq!(log_gamma(2.0).unwrap(), 0.0);
    }

    #[test]
    fn log_gamma_half() {
        let want = 0.5 * PI.ln();
        assert!((log_gamma(0.5).unwrap() - want).abs() < 1e-15);
    }

    #[test]
    fn rejects_nonpositive() {
        assert!(log_gamma(0.0).is_err());
        assert!(log_gamma(-1.5).is_err());
        assert!(gamma(-0.5).is_err());
        assert!(gamma(172.0).is_err());
        assert!(beta(0.0, 1.0).is_err());
        assert!(beta(1.0, -2.0).is_err());
    }

    #[test]
    fn gamma_factorials() {
        assert_eq!(gamma(5.0).unwrap(), 24.0);
        assert_eq!(gamma(1.0).unwrap(), 1.0);
        assert!((gamma(0.5).unwrap() - PI.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn beta_simple_values() {
        assert!((beta(1.0, 1.0).unwrap() - 1.0).abs() < 1e-15);
        assert!((beta(2.0, 1.0).unwrap() - 0.5).abs() < 1e-15);
        assert!((beta(0.5, 0.5).unwrap() - PI).abs() < 1e-14);
        assert_eq!(beta(1.3, 2.7).unwrap(), beta(2.7, 1.3).unwrap());
    }

    #[test]
    fn arccot_branch() {
        assert_eq!(arccot(0.0), FRAC_PI_2);
        assert!((arccot(1.0) - PI / 4.0).abs() < 1e-16);
        assert!((arccot(1.0 / 3f64.sqrt()) - PI / 3.0).abs() < 1e-15);
        assert!((arccot(-1.0) - 3.0 * PI / 4.0).abs() < 1e-15);
        for &x in &[-1e300, -50.0, -1.0001, -0.3, 0.2, 0.9999, 1.0001, 7.0, 1e300] {
            let v = arccot(x);
            assert!(v > 0.0 && v <= PI, "arccot({x}) = {v}");
            assert!((v + arccot(-x) - PI).abs() < 1e-14);
        }
        // continuity across the |x| = 1 switch
        assert!((arccot(1.0 - 1e-15) - arccot(1.0 + 1e-15)).abs() < 1e-14);
        assert!((arccot(-1.0 - 1e-15) - arccot(-1.0 + 1e-15)).abs() < 1e-14);
    }

    #[test]
    fn atan_over_near_zero() {
        assert_eq!(atan_over(0.0), 1.0);
        let z = 1.5e-4;
        assert!((atan_over(z) - z.atan() / z).abs() < 1e-15);
        let z = 0.9e-4;
        assert!((atan_over(z) - (1.0 - z * z / 3.0)).abs() < 1e-16);
    }

    #[test]
    fn exp_remainder_both_regimes() {
        // direct sum reference for well-separated x
        let direct = |x: f64, n: u32| {
            let mut s = 0.0;
            let mut t = 1.0;
            for k in 0..=n {
                if k > 0 {
                    t *= x / k as f64;
                }
                s += t;
            }
            x.exp() - s
        };
        for &(x, n) in &[(20.0, 3), (-15.0, 4), (9.0, 2)] {
            let r = exp_remainder(x, n);
            assert!((r - direct(x, n)).abs() <= 1e-13 * r.abs());
        }
        // small x: leading term x^{n+1}/(n+1)!
        let r = exp_remainder(1e-3, 3);
        let lead = 1e-12 / 24.0;
        assert!((r / lead - 1.0 - 1e-3 / 5.0).abs() < 1e-6);
        assert_eq!(exp_remainder(0.0, 4), 0.0);
    }
}
