//! Numerical quadrature used as the independent oracle for every closed form.
//!
//! Smooth finite integrands go through adaptive Gauss–Kronrod (G10/K21)
//! bisection. As soon as an endpoint is flagged singular the double-exponential
//! (tanh-sinh) rule takes over. Semi-infinite and bi-infinite domains are first
//! mapped onto `(0, 1)`; the point at infinity becomes a finite endpoint that is
//! treated as singular only when the domain carries the slow-decay hint.
//!
//! Integrands receive an [`Abscissa`] carrying the distances to both
//! endpoints. Near an algebraic endpoint singularity those distances are far
//! more accurate than `x` itself, so integrands like `(1 - sqrt(x))^(p-1)` can be
//! written in terms of `from_hi` and stay accurate all the way to the endpoint.

mod known;
mod kronrod;
mod tanh_sinh;

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

pub use known::{known_value_suite, KnownIntegral};
pub use kronrod::adaptive_gauss_kronrod;
pub use tanh_sinh::tanh_sinh;

/// Default absolute-or-relative tolerance of the oracle.
pub const DEFAULT_TOL: f64 = 1e-10;
/// Default evaluation budget per integral.
pub const DEFAULT_MAX_EVALS: usize = 2_000_000;
/// Budget multiplier granted to domains with the slow-decay hint.
pub const SLOW_DECAY_BUDGET_FACTOR: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Interval {
    Finite { lo: f64, hi: f64 },
    SemiInfinite { lo: f64 },
    BiInfinite,
}

/// Integration domain plus hints for the scheme selection.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct IntervalSpec {
    pub interval: Interval,
    pub singular_lo: bool,
    pub singular_hi: bool,
    /// The integrand decays slower than `1/x^2` at infinity.
    pub slow_decay: bool,
}

impl IntervalSpec {
    pub fn finite(lo: f64, hi: f64) -> Self {
        Self::new(Interval::Finite { lo, hi })
    }

    pub fn semi_infinite(lo: f64) -> Self {
        Self::new(Interval::SemiInfinite { lo })
    }

    pub fn bi_infinite() -> Self {
        Self::new(Interval::BiInfinite)
    }

    fn new(interval: Interval) -> Self {
        IntervalSpec {
            interval,
            singular_lo: false,
            singular_hi: false,
            slow_decay: false,
        }
    }

    pub fn singular_lo(mut self, on: bool) -> Self {
        self.singular_lo = on;
        self
    }

    pub fn singular_hi(mut self, on: bool) -> Self {
        self.singular_hi = on;
        self
    }

    pub fn slow_decay(mut self, on: bool) -> Self {
        self.slow_decay = on;
        self
    }

    pub fn is_singular(&self) -> bool {
        self.singular_lo || self.singular_hi
    }

    pub fn validate(&self) -> Result<()> {
        let ok = match self.interval {
            Interval::Finite { lo, hi } => lo.is_finite() && hi.is_finite() && lo < hi,
            Interval::SemiInfinite { lo } => lo.is_finite(),
            Interval::BiInfinite => true,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidArgument(format!("invalid interval {self}")))
        }
    }

    /// Abscissa for a point of this domain, with distances computed directly.
    pub fn abscissa(&self, x: f64) -> Abscissa {
        match self.interval {
            Interval::Finite { lo, hi } => Abscissa {
                x,
                from_lo: x - lo,
                from_hi: hi - x,
            },
            Interval::SemiInfinite { lo } => Abscissa {
                x,
                from_lo: x - lo,
                from_hi: f64::INFINITY,
            },
            Interval::BiInfinite => Abscissa {
                x,
                from_lo: f64::INFINITY,
                from_hi: f64::INFINITY,
            },
        }
    }
}

impl fmt::Display for IntervalSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.interval {
            Interval::Finite { lo, hi } => write!(f, "[{lo}, {hi}]")?,
            Interval::SemiInfinite { lo } => write!(f, "[{lo}, inf)")?,
            Interval::BiInfinite => write!(f, "(-inf, inf)")?,
        }
        if self.singular_lo {
            write!(f, " singular-lo")?;
        }
        if self.singular_hi {
            write!(f, " singular-hi")?;
        }
        if self.slow_decay {
            write!(f, " slow-decay")?;
        }
        Ok(())
    }
}

/// A sample point: `x` together with its distances to the domain endpoints.
/// Distances to an infinite endpoint are `+inf`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Abscissa {
    pub x: f64,
    pub from_lo: f64,
    pub from_hi: f64,
}

/// Pointwise integrand. Cheap to clone.
#[derive(Clone)]
pub struct Integrand(Arc<dyn Fn(Abscissa) -> f64 + Send + Sync>);

impl Integrand {
    /// Integrand that only looks at `x`.
    pub fn new(f: impl Fn(f64) -> f64 + Send + Sync + 'static) -> Self {
        Integrand(Arc::new(move |a: Abscissa| f(a.x)))
    }

    /// Integrand that uses the endpoint distances.
    pub fn with_distances(f: impl Fn(Abscissa) -> f64 + Send + Sync + 'static) -> Self {
        Integrand(Arc::new(f))
    }

    pub fn at(&self, a: Abscissa) -> f64 {
        (self.0)(a)
    }

    /// Evaluate at `x` with distances derived from `domain`.
    pub fn eval(&self, x: f64, domain: &IntervalSpec) -> f64 {
        self.at(domain.abscissa(x))
    }
}

impl fmt::Debug for Integrand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("Integrand(..)")
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadResult {
    pub value: f64,
    pub abs_error_estimate: f64,
    pub n_evals: usize,
    pub converged: bool,
}

/// Error target for a running estimate: `max(tol, tol * |value|)`.
pub fn tolerance_target(tol: f64, value: f64) -> f64 {
    tol.max(tol * value.abs())
}

pub(crate) fn sample(f: &Integrand, a: Abscissa) -> Result<f64> {
    let y = f.at(a);
    if y.is_finite() {
        Ok(y)
    } else {
        Err(Error::NonFiniteSample { x: a.x })
    }
}

/// Map `[lo, inf)` onto `(0, 1)` by `x = lo + t/(1 - t)`, weight `1/(1 - t)^2`.
///
/// The inner abscissa is built from the complement `1 - t`, so `x` stays
/// accurate down to `1 - t` of order `1e-300`.
pub fn transform_semi_infinite(f: &Integrand, lo: f64) -> (Integrand, IntervalSpec) {
    let f = f.clone();
    let g = Integrand::with_distances(move |a: Abscissa| {
        let c = a.from_hi;
        let t = a.from_lo;
        let offset = t / c;
        let y = f.at(Abscissa {
            x: lo + offset,
            from_lo: offset,
            from_hi: f64::INFINITY,
        });
        if y == 0.0 {
            0.0
        } else {
            y / c / c
        }
    });
    (g, IntervalSpec::finite(0.0, 1.0))
}

/// Map `(-inf, inf)` onto `(0, 1)` by `x = (2t - 1)/(t (1 - t))`, which equals
/// `1/(1 - t) - 1/t`, with weight `1/t^2 + 1/(1 - t)^2`.
pub fn transform_bi_infinite(f: &Integrand) -> (Integrand, IntervalSpec) {
    let f = f.clone();
    let g = Integrand::with_distances(move |a: Abscissa| {
        let (t, c) = (a.from_lo, a.from_hi);
        let x = 1.0 / c - 1.0 / t;
        let y = f.at(Abscissa {
            x,
            from_lo: f64::INFINITY,
            from_hi: f64::INFINITY,
        });
        if y == 0.0 {
            0.0
        } else {
            y / t / t + y / c / c
        }
    });
    (g, IntervalSpec::finite(0.0, 1.0))
}

/// Integrate `f` over `domain` to `max(tol, tol*|I|)`.
///
/// A result that misses the tolerance within `max_evals` comes back with
/// `converged == false`; a non-finite sample is an error naming the abscissa.
pub fn integrate(
    f: &Integrand,
    domain: &IntervalSpec,
    tol: f64,
    max_evals: usize,
) -> Result<QuadResult> {
    domain.validate()?;
    if !(tol > 0.0) {
        return Err(Error::InvalidArgument(format!("tolerance must be > 0, got {tol}")));
    }
    let budget = if domain.slow_decay {
        max_evals.saturating_mul(SLOW_DECAY_BUDGET_FACTOR)
    } else {
        max_evals
    };
    match domain.interval {
        Interval::Finite { .. } => {
            if domain.is_singular() {
                tanh_sinh(f, domain, tol, budget)
            } else {
                adaptive_gauss_kronrod(f, domain, tol, budget)
            }
        }
        Interval::SemiInfinite { lo } => {
            let (g, unit) = transform_semi_infinite(f, lo);
            let unit = unit
                .singular_lo(domain.singular_lo)
                .singular_hi(domain.slow_decay);
            integrate_unit(&g, &unit, tol, budget)
        }
        Interval::BiInfinite => {
            let (g, unit) = transform_bi_infinite(f);
            let unit = unit
                .singular_lo(domain.slow_decay)
                .singular_hi(domain.slow_decay);
            integrate_unit(&g, &unit, tol, budget)
        }
    }
}

fn integrate_unit(g: &Integrand, unit: &IntervalSpec, tol: f64, budget: usize) -> Result<QuadResult> {
    if unit.is_singular() {
        tanh_sinh(g, unit, tol, budget)
    } else {
        adaptive_gauss_kronrod(g, unit, tol, budget)
    }
}

/// Double-exponential integration of a finite domain with flagged endpoint
/// singularities.
pub fn integrate_singular(f: &Integrand, domain: &IntervalSpec, tol: f64) -> Result<QuadResult> {
    domain.validate()?;
    match domain.interval {
        Interval::Finite { .. } => tanh_sinh(f, domain, tol, DEFAULT_MAX_EVALS),
        _ => Err(Error::InvalidArgument(
            "integrate_singular needs a finite domain".into(),
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn run(f: impl Fn(f64) -> f64 + Send + Sync + 'static, d: IntervalSpec) -> QuadResult {
        integrate(&Integrand::new(f), &d, 1e-10, DEFAULT_MAX_EVALS).unwrap()
    }

    #[test]
    fn semi_infinite_exponential() {
        let r = run(|x| (-x).exp(), IntervalSpec::semi_infinite(0.0));
        assert!(r.converged);
        assert!((r.value - 1.0).abs() < 1e-12);
        assert!(r.n_evals > 0);
    }

    #[test]
    fn shifted_semi_infinite() {
        let r = run(|x| (-x).exp(), IntervalSpec::semi_infinite(2.0));
        assert!((r.value - (-2f64).exp()).abs() < 1e-12);
    }

    #[test]
    fn bi_infinite_gaussian() {
        let r = run(|x| (-x * x).exp(), IntervalSpec::bi_infinite());
        assert!((r.value - PI.sqrt()).abs() < 1e-11);
    }

    #[test]
    fn zero_function_transforms_to_zero() {
        let zero = Integrand::new(|_| 0.0);
        let (g, unit) = transform_semi_infinite(&zero, 0.0);
        let r = integrate(&g, &unit, 1e-10, 10_000).unwrap();
        assert_eq!(r.value, 0.0);
        assert!(r.converged);
        let (g, unit) = transform_bi_infinite(&zero);
        assert_eq!(integrate(&g, &unit, 1e-10, 10_000).unwrap().value, 0.0);
    }

    #[test]
    fn non_finite_sample_is_an_error() {
        let f = Integrand::new(|x| if x > 0.5 { f64::NAN } else { 1.0 });
        let err = integrate(&f, &IntervalSpec::finite(0.0, 1.0), 1e-10, 10_000).unwrap_err();
        match err {
            Error::NonFiniteSample { x } => assert!(x > 0.5 && x < 1.0),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        // needs far more than 50 evaluations
        let f = Integrand::new(|x: f64| (40.0 * x).sin().abs());
        let r = integrate(&f, &IntervalSpec::finite(0.0, 10.0), 1e-12, 50).unwrap();
        assert!(!r.converged);
        assert!(r.n_evals > 0 && r.n_evals <= 50);
    }

    #[test]
    fn rejects_bad_domains_and_tolerances() {
        let f = Integrand::new(|x| x);
        assert!(integrate(&f, &IntervalSpec::finite(1.0, 0.0), 1e-10, 100).is_err());
        assert!(integrate(&f, &IntervalSpec::finite(0.0, 1.0), 0.0, 100).is_err());
        assert!(integrate_singular(&f, &IntervalSpec::semi_infinite(0.0), 1e-10).is_err());
    }

    #[test]
    fn abscissa_distances() {
        let d = IntervalSpec::finite(1.0, 3.0);
        let a = d.abscissa(2.5);
        assert_eq!((a.from_lo, a.from_hi), (1.5, 0.5));
        assert!(IntervalSpec::semi_infinite(0.0).abscissa(1.0).from_hi.is_infinite());
    }
}
