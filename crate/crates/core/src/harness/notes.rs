//! Resolution notes for formulas whose printed form is ambiguous or
//! inconsistent, each with the anchor points that decide it.
//!
//! An anchor compares a reference value (usually the oracle) against the
//! implemented reading and against the conflicting reading. A note is settled
//! when every implemented reading agrees with its reference and at least one
//! conflicting reading does not.

use serde::Serialize;

use super::{oracle, DEFAULT_TOL_ABS, DEFAULT_TOL_REL};
use crate::catalog::quadratic::{
    base_case, base_case_unit_argument, half_integer_u, half_integer_with_u, halfline_u,
    halfline_with_u, quadratic_power_half_integer, quadratic_power_halfline, QuadraticParams,
};
use crate::catalog::rational::i_n_theorem;
use crate::catalog::tangent::{tan_even_as_displayed, tan_odd_as_displayed, tan_power_even, tan_power_odd};
use crate::catalog::exponential::{exp_poly_finite, exp_poly_finite_mismatched_integrand, t_family};
use crate::catalog::{evaluate_entry, integrand_of, Params};
use crate::error::Result;
use crate::exact::{p_poly, q_poly};
use crate::quadrature::{Integrand, IntervalSpec};

pub struct ResolutionNote {
    pub key: &'static str,
    pub entries: &'static [&'static str],
    pub resolution: &'static str,
    anchors: fn() -> Result<Vec<AnchorCheck>>,
}

impl ResolutionNote {
    pub fn anchors(&self) -> Result<Vec<AnchorCheck>> {
        (self.anchors)()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AnchorCheck {
    pub label: String,
    pub reference: f64,
    pub resolved: f64,
    pub alternative: f64,
}

fn agrees(reference: f64, x: f64) -> bool {
    (x - reference).abs() <= DEFAULT_TOL_ABS.max(DEFAULT_TOL_REL * reference.abs())
}

impl AnchorCheck {
    pub fn resolved_agrees(&self) -> bool {
        agrees(self.reference, self.resolved)
    }

    pub fn alternative_fails(&self) -> bool {
        !agrees(self.reference, self.alternative)
    }
}

/// Outcome of running a note's anchors.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NoteCheck {
    pub key: &'static str,
    pub entries: &'static [&'static str],
    pub resolution: &'static str,
    pub anchors: Vec<AnchorCheck>,
    pub error: Option<String>,
}

impl NoteCheck {
    /// All implemented readings agree and some conflicting reading fails.
    /// Notes without anchors are statements of domain and always settled.
    pub fn settled(&self) -> bool {
        self.error.is_none()
            && self.anchors.iter().all(AnchorCheck::resolved_agrees)
            && (self.anchors.is_empty() || self.anchors.iter().any(AnchorCheck::alternative_fails))
    }
}

pub fn notes() -> &'static [ResolutionNote] {
    NOTES
}

pub fn check_notes() -> Vec<NoteCheck> {
    NOTES
        .iter()
        .map(|n| {
            let (anchors, error) = match n.anchors() {
                Ok(a) => (a, None),
                Err(e) => (Vec::new(), Some(e.to_string())),
            };
            NoteCheck {
                key: n.key,
                entries: n.entries,
                resolution: n.resolution,
                anchors,
                error,
            }
        })
        .collect()
}

fn entry_oracle(id: &str, params: &Params) -> Result<f64> {
    let (f, domain) = integrand_of(id, params)?;
    Ok(oracle(&f, &domain)?.value)
}

fn raw_oracle(f: &Integrand, domain: &IntervalSpec) -> Result<f64> {
    Ok(oracle(f, domain)?.value)
}

fn quadratic(a: f64, b: f64, c: f64, n: f64) -> (QuadraticParams, Params) {
    let q = QuadraticParams::new(a, b, c);
    let p = Params::new().with("a", a).with("b", b).with("c", c).with("n", n);
    (q, p)
}

fn u_normalization() -> Result<Vec<AnchorCheck>> {
    let (q, p) = quadratic(1.0, 1.0, 2.0, 2.0);
    let integer = AnchorCheck {
        label: format!("3.252.1 {p}"),
        reference: entry_oracle("3.252.1", &p)?,
        resolved: quadratic_power_halfline(q, 2)?.value,
        alternative: halfline_with_u(q, 2, half_integer_u(q)).value,
    };
    let (q, p) = quadratic(1.0, 0.0, 1.0, 1.0);
    let half = AnchorCheck {
        label: format!("3.252.3 {p}"),
        reference: entry_oracle("3.252.3", &p)?,
        resolved: quadratic_power_half_integer(q, 1)?.value,
        alternative: half_integer_with_u(q, 1, halfline_u(q)).value,
    };
    Ok(vec![integer, half])
}

fn arccot_argument() -> Result<Vec<AnchorCheck>> {
    let mut out = Vec::new();
    for (a, b, c) in [(1.0, 0.0, 1.0), (3.0, 1.5, 1.0)] {
        let q = QuadraticParams::new(a, b, c);
        let p = Params::new().with("a", a).with("b", b).with("c", c);
        out.push(AnchorCheck {
            label: format!("3.249-base {p}"),
            reference: entry_oracle("3.249-base", &p)?,
            resolved: base_case(q)?,
            alternative: base_case_unit_argument(q)?,
        });
    }
    Ok(out)
}

/// The T_j sum with the binomial coefficient left out.
fn t_family_without_binomial(p: f64, n: u32, j: u32) -> f64 {
    let fact: f64 = (1..j).map(f64::from).product();
    let sum: f64 = (0..=n)
        .map(|k| {
            let s = p + f64::from(n - k);
            let term = s.powi(j as i32 - 1) * s.ln();
            if k % 2 == 0 { term } else { -term }
        })
        .sum();
    let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
    sign * sum / fact
}

fn binomial_coefficient() -> Result<Vec<AnchorCheck>> {
    let mut out = Vec::new();
    for (p, n, j) in [(2.0, 2, 2), (1.0, 3, 1)] {
        let params = Params::new().with("p", p).with("n", f64::from(n)).with("j", f64::from(j));
        out.push(AnchorCheck {
            label: format!("t-family {params}"),
            reference: entry_oracle("t-family", &params)?,
            resolved: t_family(p, n, j)?.value,
            alternative: t_family_without_binomial(p, n, j),
        });
    }
    Ok(out)
}

fn exponent_m_n() -> Result<Vec<AnchorCheck>> {
    let (n, a, u) = (1, 1.0, 1.0);
    let params = Params::new().with("n", f64::from(n)).with("a", a).with("u", u);
    let (f, domain) = exp_poly_finite_mismatched_integrand(n, a, u);
    Ok(vec![AnchorCheck {
        label: format!("3.351.1 {params}"),
        reference: exp_poly_finite(n, a, u)?,
        resolved: entry_oracle("3.351.1", &params)?,
        alternative: raw_oracle(&f, &domain)?,
    }])
}

fn tangent_index() -> Result<Vec<AnchorCheck>> {
    let even = Params::new().with("n", 2.0);
    let odd = Params::new().with("n", 0.0);
    Ok(vec![
        AnchorCheck {
            label: format!("3.622.3 {even}"),
            reference: entry_oracle("3.622.3", &even)?,
            resolved: tan_power_even(2),
            alternative: tan_even_as_displayed(2),
        },
        AnchorCheck {
            label: format!("3.622.4 {odd}"),
            reference: entry_oracle("3.622.4", &odd)?,
            resolved: tan_power_odd(0),
            alternative: tan_odd_as_displayed(0),
        },
    ])
}

fn q_sign() -> Result<Vec<AnchorCheck>> {
    // Q_1 = 1 and Q_2 = 1 + u; compare at u = 1 against the row sums n!.
    let mut out = Vec::new();
    for n in [1u32, 2] {
        let p = p_poly(n)?;
        let even = n % 2 == 0;
        let at_minus_one = p.eval_f64(-1.0);
        out.push(AnchorCheck {
            label: format!("Q_{n}(1)"),
            reference: (1..=n).map(f64::from).product(),
            resolved: q_poly(n)?.eval_f64(1.0),
            alternative: if even { at_minus_one } else { -at_minus_one },
        });
    }
    Ok(out)
}

fn free_parameter_exponent() -> Result<Vec<AnchorCheck>> {
    let (a, b, n) = (3.0, 1.0, 2.0);
    let params = Params::new().with("a", a).with("b", b).with("n", n);
    let printed = Integrand::new(move |x: f64| (b * x.ln_1p() - (b + n) * (x + a).ln()).exp());
    Ok(vec![AnchorCheck {
        label: format!("lemma-5.1 {params}"),
        reference: evaluate_entry("lemma-5.1", &params)?,
        resolved: entry_oracle("lemma-5.1", &params)?,
        alternative: raw_oracle(&printed, &IntervalSpec::semi_infinite(0.0))?,
    }])
}

fn theorem_sign() -> Result<Vec<AnchorCheck>> {
    let (a, b, n) = (1.0, 4.0, 1);
    let params = Params::new().with("a", a).with("b", b).with("n", f64::from(n));
    let v = i_n_theorem(a, b, n)?.value;
    Ok(vec![AnchorCheck {
        label: format!("theorem-3.5 {params}"),
        reference: entry_oracle("theorem-3.5", &params)?,
        resolved: v,
        alternative: -v,
    }])
}

fn no_anchors() -> Result<Vec<AnchorCheck>> {
    Ok(Vec::new())
}

static NOTES: &[ResolutionNote] = &[
    ResolutionNote {
        key: "u-normalization",
        entries: &["3.252.1", "3.252.3"],
        resolution: "integer powers use u = 4(ac - b^2)/(ac); half-integer powers use \
                     u = (ac - b^2)/(4ac); exchanging them breaks both formulas",
        anchors: u_normalization,
    },
    ResolutionNote {
        key: "arccot-argument",
        entries: &["3.249-base", "3.252.1"],
        resolution: "the base case is arccot(b/sqrt(ac - b^2))/sqrt(ac - b^2), which is \
                     pi/2 at a = c = 1, b = 0; the argument 1/sqrt(ac - b^2) is wrong",
        anchors: arccot_argument,
    },
    ResolutionNote {
        key: "binomial-coefficient",
        entries: &["t-family", "3.411.19", "3.411.20"],
        resolution: "the T_j sum carries C(n, k), as in its j = 1 and j = 2 cases; \
                     without it the sum does not match the integral",
        anchors: binomial_coefficient,
    },
    ResolutionNote {
        key: "exponent-m-n",
        entries: &["3.351.1"],
        resolution: "the integrand power x^m is read as x^n; with m = n + 1 the \
                     right side no longer matches",
        anchors: exponent_m_n,
    },
    ResolutionNote {
        key: "tangent-index",
        entries: &["3.622.3", "3.622.4"],
        resolution: "even powers sum (-1)^(j-1)/(2j-1) over j = 1..n; odd powers are \
                     ((-1)^n/2)(ln 2 + sum_{k=1}^n (-1)^k/k)",
        anchors: tangent_index,
    },
    ResolutionNote {
        key: "q-sign",
        entries: &[],
        resolution: "Q_n(u) = (-1)^(n-1) P_n(-u), the only sign consistent with \
                     P_1 = Q_1 = 1 and with Q_n having the Eulerian numbers as coefficients",
        anchors: q_sign,
    },
    ResolutionNote {
        key: "free-parameter-exponent",
        entries: &["lemma-5.1"],
        resolution: "the numerator is (1+x)^(b-1); with (1+x)^b the integral differs \
                     and diverges at n = 1",
        anchors: free_parameter_exponent,
    },
    ResolutionNote {
        key: "theorem-sign",
        entries: &["theorem-3.5"],
        resolution: "correct as printed, including the sign of (a - b)^n for a < b",
        anchors: theorem_sign,
    },
    ResolutionNote {
        key: "t-range",
        entries: &["t-family"],
        resolution: "T_j is finite only for 1 <= j <= n; at j = n + 1 the integrand \
                     behaves like -1/x at the origin",
        anchors: no_anchors,
    },
    ResolutionNote {
        key: "limit-branches",
        entries: &["3.195", "3.195-log-n", "lemma-5.1"],
        resolution: "3.195 takes the value 1 at a = 1 and ln a/(a - 1) at p = 0 \
                     (branch within relative distance 1e-12); its log-power and \
                     free-parameter generalizations are undefined at a = 1 and reject it",
        anchors: no_anchors,
    },
    ResolutionNote {
        key: "log-power-grouping",
        entries: &["3.195-log-n"],
        resolution: "the bracket is n!(a^p - 1) - sum_{k=1}^{n} n!(p ln a)^k/k!, \
                     i.e. n! times the tail of the exponential series; checked for n <= 6",
        anchors: no_anchors,
    },
];
