//! Registry of closed-form evaluations.
//!
//! Every entry pairs a closed-form evaluator with a pointwise integrand and
//! its domain, so the harness can check one against the other. Entry ids are
//! table numbers (`"3.249.6"`) or tags for the generalizations (`"lemma-2.1"`,
//! `"t-family"`).
//!
//! The structurally richer families are also exposed as plain functions in
//! the submodules, e.g. [`rational::f_n_closed`] or
//! [`quadratic::quadratic_power_halfline`].

pub mod algebraic;
pub mod exponential;
pub mod logarithmic;
pub mod quadratic;
pub mod rational;
pub mod tangent;

use std::fmt;
use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{domain, Error, Result};
use crate::quadrature::{Integrand, IntervalSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ParamKind {
    Real,
    Integer,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ParamSpec {
    pub name: &'static str,
    pub kind: ParamKind,
}

pub(crate) const fn real(name: &'static str) -> ParamSpec {
    ParamSpec {
        name,
        kind: ParamKind::Real,
    }
}

pub(crate) const fn int(name: &'static str) -> ParamSpec {
    ParamSpec {
        name,
        kind: ParamKind::Integer,
    }
}

/// Named parameter values in insertion order. Integers are stored as `f64`
/// and checked for integrality on access.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Params(Vec<(String, f64)>);

impl Params {
    pub fn new() -> Self {
        Params(Vec::new())
    }

    /// Builder form: `Params::new().with("a", 2.0).with("n", 3.0)`.
    pub fn with(mut self, name: &str, value: f64) -> Self {
        self.set(name, value);
        self
    }

    pub fn set(&mut self, name: &str, value: f64) {
        match self.0.iter_mut().find(|(k, _)| k == name) {
            Some(slot) => slot.1 = value,
            None => self.0.push((name.to_string(), value)),
        }
    }

    pub fn get(&self, name: &str) -> Result<f64> {
        self.0
            .iter()
            .find(|(k, _)| k == name)
            .map(|(_, v)| *v)
            .ok_or_else(|| Error::InvalidArgument(format!("missing parameter `{name}`")))
    }

    /// Integer parameter. Fails on missing or non-integral values.
    pub fn int(&self, name: &str) -> Result<i64> {
        let v = self.get(name)?;
        if v.fract() != 0.0 || v.abs() > 1e15 {
            return Err(Error::InvalidArgument(format!(
                "parameter `{name}` must be an integer, got {v}"
            )));
        }
        Ok(v as i64)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, f64)> {
        self.0.iter().map(|(k, v)| (k.as_str(), *v))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Parse `name=value` assignments.
    pub fn parse<'a>(items: impl IntoIterator<Item = &'a str>) -> Result<Self> {
        let mut p = Params::new();
        for item in items {
            let (k, v) = item
                .split_once('=')
                .ok_or_else(|| Error::InvalidArgument(format!("expected name=value, got `{item}`")))?;
            let v: f64 = v
                .trim()
                .parse()
                .map_err(|_| Error::InvalidArgument(format!("bad number in `{item}`")))?;
            p.set(k.trim(), v);
        }
        Ok(p)
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (k, v)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            write!(f, "{k}={v}")?;
        }
        Ok(())
    }
}

/// A closed-form value together with the largest magnitude among the terms
/// that were summed to produce it. `scale / max(|value|, 1)` bounds the
/// amplification of rounding error relative to the verification tolerances.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Value {
    pub value: f64,
    pub scale: f64,
}

impl Value {
    /// A value computed without cancellation.
    pub fn stable(value: f64) -> Self {
        Value {
            value,
            scale: value.abs(),
        }
    }

    pub fn amplification(&self) -> f64 {
        self.scale / self.value.abs().max(1.0)
    }
}

pub(crate) type CheckFn = fn(&Params) -> Result<()>;
pub(crate) type ClosedFn = fn(&Params) -> Result<Value>;
pub(crate) type IntegrandFn = fn(&Params) -> Result<(Integrand, IntervalSpec)>;

pub struct CatalogEntry {
    pub id: &'static str,
    pub params: &'static [ParamSpec],
    /// Human-readable domain, e.g. `"a > 0, a != 1"`.
    pub constraints: &'static str,
    /// Short note on how the closed form is obtained.
    pub provenance: &'static str,
    /// Per-parameter grid values replacing the harness defaults.
    pub grid: &'static [(&'static str, &'static [f64])],
    pub(crate) check: CheckFn,
    pub(crate) closed: ClosedFn,
    pub(crate) integrand: IntegrandFn,
}

impl fmt::Debug for CatalogEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CatalogEntry")
            .field("id", &self.id)
            .field("params", &self.params)
            .field("constraints", &self.constraints)
            .finish_non_exhaustive()
    }
}

impl CatalogEntry {
    /// Checks that `params` names exactly the declared parameters, that
    /// integer parameters are integral, and that the domain predicate holds.
    pub fn validate(&self, params: &Params) -> Result<()> {
        for (name, _) in params.iter() {
            if !self.params.iter().any(|s| s.name == name) {
                return Err(Error::InvalidArgument(format!(
                    "{} has no parameter `{name}`",
                    self.id
                )));
            }
        }
        for spec in self.params {
            let v = params.get(spec.name).map_err(|_| {
                Error::InvalidArgument(format!("{} needs parameter `{}`", self.id, spec.name))
            })?;
            if !v.is_finite() {
                return Err(domain(self.id, format!("finite {}", spec.name)));
            }
            if spec.kind == ParamKind::Integer {
                params.int(spec.name)?;
            }
        }
        (self.check)(params)
    }

    pub fn evaluate(&self, params: &Params) -> Result<f64> {
        Ok(self.evaluate_with_scale(params)?.value)
    }

    pub fn evaluate_with_scale(&self, params: &Params) -> Result<Value> {
        self.validate(params)?;
        (self.closed)(params)
    }

    pub fn integrand(&self, params: &Params) -> Result<(Integrand, IntervalSpec)> {
        self.validate(params)?;
        (self.integrand)(params)
    }
}

/// All registered entries in a fixed order.
pub fn registry() -> &'static [CatalogEntry] {
    static REGISTRY: OnceLock<Vec<CatalogEntry>> = OnceLock::new();
    REGISTRY.get_or_init(|| {
        let mut all = Vec::new();
        all.extend(algebraic::entries());
        all.extend(rational::entries());
        all.extend(exponential::entries());
        all.extend(tangent::entries());
        all.extend(logarithmic::entries());
        all.extend(quadratic::entries());
        all
    })
}

pub fn lookup(id: &str) -> Result<&'static CatalogEntry> {
    registry()
        .iter()
        .find(|e| e.id == id)
        .ok_or_else(|| Error::UnknownEntry(id.to_string()))
}

pub fn evaluate_entry(id: &str, params: &Params) -> Result<f64> {
    lookup(id)?.evaluate(params)
}

pub fn integrand_of(id: &str, params: &Params) -> Result<(Integrand, IntervalSpec)> {
    lookup(id)?.integrand(params)
}

#[derive(Serialize)]
struct Listing<'a> {
    id: &'a str,
    params: &'a [ParamSpec],
    constraints: &'a str,
    provenance: &'a str,
}

/// One JSON object per line: id, params, constraints, provenance.
pub fn listing() -> String {
    let mut out = String::new();
    for e in registry() {
        let row = Listing {
            id: e.id,
            params: e.params,
            constraints: e.constraints,
            provenance: e.provenance,
        };
        out.push_str(&serde_json::to_string(&row).expect("listing serializes"));
        out.push('\n');
    }
    out
}

/// Fails with a domain error naming `constraint` unless `ok`.
pub(crate) fn require(ok: bool, entry: &str, constraint: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(domain(entry, constraint))
    }
}

pub(crate) fn no_check(_: &Params) -> Result<()> {
    Ok(())
}

/// `C(n, k)` as a float for small arguments.
pub(crate) fn binom_f64(n: u64, k: u64) -> f64 {
    crate::exact::big_to_f64(&crate::exact::binomial(n, k as i64))
}

pub(crate) fn factorial_f64(n: u64) -> f64 {
    crate::exact::big_to_f64(&crate::exact::factorial(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique() {
        let mut ids: Vec<_> = registry().iter().map(|e| e.id).collect();
        ids.sort();
        let n = ids.len();
        ids.dedup();
        assert_eq!(ids.len(), n);
    }

    #[test]
    fn grid_overrides_name_declared_params() {
        for e in registry() {
            for (name, values) in e.grid {
                assert!(e.params.iter().any(|p| p.name == *name), "{} {name}", e.id);
                assert!(!values.is_empty());
            }
        }
    }

    #[test]
    fn params_parse_and_validate() {
        let p = Params::parse(["p=2", "n = 3"]).unwrap();
        assert_eq!(p.get("p").unwrap(), 2.0);
        assert_eq!(p.int("n").unwrap(), 3);
        assert!(Params::parse(["p"]).is_err());
        assert!(Params::new().with("n", 1.5).int("n").is_err());
        assert_eq!(p.to_string(), "p=2;n=3");
    }

    #[test]
    fn unknown_and_extra_parameters_are_rejected() {
        assert!(matches!(evaluate_entry("9.999", &Params::new()), Err(Error::UnknownEntry(_))));
        let extra = Params::new().with("p", 1.0).with("q", 1.0);
        assert!(evaluate_entry("3.310", &extra).is_err());
        assert!(evaluate_entry("3.310", &Params::new()).is_err());
    }

    #[test]
    fn domain_errors_name_the_constraint() {
        let err = evaluate_entry("3.195-log-n", &Params::new().with("a", 1.0).with("p", 2.0).with("n", 1.0))
            .unwrap_err();
        assert_eq!(err.to_string(), "3.195-log-n requires a != 1");
    }

    #[test]
    fn listing_has_one_line_per_entry() {
        let text = listing();
        assert_eq!(text.lines().count(), registry().len());
        for line in text.lines() {
            let v: serde_json::Value = serde_json::from_str(line).unwrap();
            assert!(v["id"].is_string());
            assert!(v["params"].is_array());
        }
    }
}
