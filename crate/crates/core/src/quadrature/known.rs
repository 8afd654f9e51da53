//! Integrals with known values, used to check the oracle's error estimates.

use std::f64::consts::PI;

use super::{Integrand, IntervalSpec};

/// Γ(4/3) to double precision.
const GAMMA_4_3: f64 = 0.892_979_511_569_249_2;

pub struct KnownIntegral {
    pub name: &'static str,
    pub integrand: Integrand,
    pub domain: IntervalSpec,
    pub reference: f64,
}

/// The eight-integral suite: `e^{-x^k}` for `k = 1, 2, 3` on `[0, inf)`,
/// Wallis `n = 1..3`, `1/((1+x^2) sqrt(4+3x^2))` on the line and
/// `1/sqrt(x(1-x))` with both endpoints flagged.
pub fn known_value_suite() -> Vec<KnownIntegral> {
    let half_line = IntervalSpec::semi_infinite(0.0);
    let mut suite = vec![
        KnownIntegral {
            name: "exp(-x)",
            integrand: Integrand::new(|x: f64| (-x).exp()),
            domain: half_line,
            reference: 1.0,
        },
        KnownIntegral {
            name: "exp(-x^2)",
            integrand: Integrand::new(|x: f64| (-x * x).exp()),
            domain: half_line,
            reference: PI.sqrt() / 2.0,
        },
        KnownIntegral {
            name: "exp(-x^3)",
            integrand: Integrand::new(|x: f64| (-x * x * x).exp()),
            domain: half_line,
            reference: GAMMA_4_3,
        },
    ];
    let wallis = [("wallis n=1", 1, PI / 2.0), ("wallis n=2", 2, PI / 4.0), ("wallis n=3", 3, 3.0 * PI / 16.0)];
    for (name, n, reference) in wallis {
        suite.push(KnownIntegral {
            name,
            integrand: Integrand::new(move |x: f64| (1.0 + x * x).powi(-n)),
            domain: half_line,
            reference,
        });
    }
    suite.push(KnownIntegral {
        name: "3.248.4",
        integrand: Integrand::new(|x: f64| 1.0 / ((1.0 + x * x) * (4.0 + 3.0 * x * x).sqrt())),
        domain: IntervalSpec::bi_infinite(),
        reference: PI / 3.0,
    });
    suite.push(KnownIntegral {
        name: "beta(1/2,1/2)",
        integrand: Integrand::with_distances(|a| 1.0 / (a.from_lo * a.from_hi).sqrt()),
        domain: IntervalSpec::finite(0.0, 1.0).singular_lo(true).singular_hi(true),
        reference: PI,
    });
    suite
}
