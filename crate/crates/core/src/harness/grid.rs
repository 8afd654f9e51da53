//! Parameter grids.

use crate::catalog::{CatalogEntry, ParamKind, Params};
use crate::error::{Error, Result};

/// Real parameters default to these values, filtered by each entry's domain.
pub const DEFAULT_REALS: &[f64] = &[0.3, 0.75, 1.0, 1.5, 3.0, 10.0];

/// Integer orders default to `0..=DEFAULT_MAX_ORDER`.
pub const DEFAULT_MAX_ORDER: i64 = 6;

/// Values for one parameter.
#[derive(Clone, Debug, PartialEq)]
pub enum Axis {
    List(Vec<f64>),
    /// `count` evenly spaced values from `lo` to `hi` inclusive.
    Linear { lo: f64, hi: f64, count: usize },
    /// `count` geometrically spaced values from `lo` to `hi` inclusive.
    Log { lo: f64, hi: f64, count: usize },
}

impl Axis {
    /// Sorted, deduplicated values.
    pub fn values(&self) -> Result<Vec<f64>> {
        let mut v = match *self {
            Axis::List(ref xs) => xs.clone(),
            Axis::Linear { lo, hi, count } => spaced(lo, hi, count, |t| lo + (hi - lo) * t)?,
            Axis::Log { lo, hi, count } => {
                if !(lo > 0.0 && hi > 0.0) {
                    return Err(Error::InvalidArgument("log axis needs positive bounds".into()));
                }
                spaced(lo, hi, count, |t| (lo.ln() + (hi.ln() - lo.ln()) * t).exp())?
            }
        };
        if v.iter().any(|x| !x.is_finite()) {
            return Err(Error::InvalidArgument("grid values must be finite".into()));
        }
        v.sort_by(f64::total_cmp);
        v.dedup();
        Ok(v)
    }

    /// Parses `v1,v2,...`, `lo:hi:count` (linear) or `lo:hi:count:log`.
    pub fn parse(text: &str) -> Result<Self> {
        let bad = || Error::InvalidArgument(format!("bad grid axis `{text}`"));
        let num = |s: &str| s.trim().parse::<f64>().map_err(|_| bad());
        if text.contains(':') {
            let parts: Vec<&str> = text.split(':').collect();
            let (lo, hi) = (num(parts[0])?, num(parts.get(1).ok_or_else(bad)?)?);
            let count: usize = parts.get(2).ok_or_else(bad)?.trim().parse().map_err(|_| bad())?;
            return match parts.get(3).map(|s| s.trim()) {
                None | Some("linear") if parts.len() <= 4 => Ok(Axis::Linear { lo, hi, count }),
                Some("log") if parts.len() == 4 => Ok(Axis::Log { lo, hi, count }),
                _ => Err(bad()),
            };
        }
        let values = text.split(',').map(num).collect::<Result<Vec<_>>>()?;
        Ok(Axis::List(values))
    }
}

fn spaced(lo: f64, hi: f64, count: usize, at: impl Fn(f64) -> f64) -> Result<Vec<f64>> {
    match count {
        0 => Err(Error::InvalidArgument("axis count must be >= 1".into())),
        1 => Ok(vec![lo]),
        _ => Ok((0..count)
            .map(|i| {
                if i + 1 == count {
                    hi
                } else {
                    at(i as f64 / (count - 1) as f64)
                }
            })
            .collect()),
    }
}

/// One axis per parameter, in the entry's parameter order.
#[derive(Clone, Debug, PartialEq)]
pub struct GridSpec {
    pub axes: Vec<(String, Axis)>,
}

impl GridSpec {
    /// Shipped defaults: the entry's own overrides, else [`DEFAULT_REALS`] for
    /// reals and `0..=6` for integers.
    pub fn default_for(entry: &CatalogEntry) -> Self {
        let axes = entry
            .params
            .iter()
            .map(|spec| {
                let values = match entry.grid.iter().find(|(name, _)| *name == spec.name) {
                    Some((_, values)) => values.to_vec(),
                    None => match spec.kind {
                        ParamKind::Real => DEFAULT_REALS.to_vec(),
                        ParamKind::Integer => (0..=DEFAULT_MAX_ORDER).map(|n| n as f64).collect(),
                    },
                };
                (spec.name.to_string(), Axis::List(values))
            })
            .collect();
        GridSpec { axes }
    }

    /// Replaces the axis for `name`, failing if the grid has no such parameter.
    pub fn with_axis(mut self, name: &str, axis: Axis) -> Result<Self> {
        match self.axes.iter_mut().find(|(n, _)| n == name) {
            Some(slot) => slot.1 = axis,
            None => return Err(Error::InvalidArgument(format!("grid has no parameter `{name}`"))),
        }
        Ok(self)
    }

    /// Applies `name=axis` overrides in the syntax of [`Axis::parse`].
    pub fn with_overrides<'a>(mut self, items: impl IntoIterator<Item = &'a str>) -> Result<Self> {
        for item in items {
            let (name, axis) = item
                .split_once('=')
                .ok_or_else(|| Error::InvalidArgument(format!("expected name=values, got `{item}`")))?;
            self = self.with_axis(name.trim(), Axis::parse(axis)?)?;
        }
        Ok(self)
    }

    /// The cartesian product, lexicographic with the first parameter most
    /// significant and each axis ascending.
    pub fn points(&self) -> Result<Vec<Params>> {
        let mut points = vec![Params::new()];
        for (name, axis) in &self.axes {
            let values = axis.values()?;
            points = points
                .into_iter()
                .flat_map(|p| values.iter().map(move |&v| p.clone().with(name, v)))
                .collect();
        }
        Ok(points)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::lookup;

    #[test]
    fn defaults_and_overrides() {
        let g = GridSpec::default_for(lookup("3.311.1").unwrap());
        assert_eq!(g.points().unwrap().len(), DEFAULT_REALS.len());
        let g = g.with_overrides(["p=2,0.5,1,1"]).unwrap();
        let pts = g.points().unwrap();
        let ps: Vec<f64> = pts.iter().map(|q| q.get("p").unwrap()).collect();
        assert_eq!(ps, vec![0.5, 1.0, 2.0]);
        assert!(GridSpec::default_for(lookup("3.310").unwrap()).with_overrides(["q=1"]).is_err());
    }

    #[test]
    fn lexicographic_order() {
        let g = GridSpec {
            axes: vec![
                ("a".into(), Axis::List(vec![2.0, 1.0])),
                ("n".into(), Axis::List(vec![0.0, 1.0])),
            ],
        };
        let s: Vec<String> = g.points().unwrap().iter().map(|p| p.to_string()).collect();
        assert_eq!(s, ["a=1;n=0", "a=1;n=1", "a=2;n=0", "a=2;n=1"]);
    }

    #[test]
    fn spaced_axes() {
        let lin = Axis::parse("0:1:5").unwrap().values().unwrap();
        assert_eq!(lin, vec![0.0, 0.25, 0.5, 0.75, 1.0]);
        let log = Axis::parse("1:100:3:log").unwrap().values().unwrap();
        assert!((log[1] - 10.0).abs() < 1e-12);
        assert_eq!(log[2], 100.0);
        assert!(Axis::parse("1:2").is_err());
        assert!(Axis::parse("0:1:3:log").unwrap().values().is_err());
    }

    #[test]
    fn parameterless_entry_has_one_point() {
        let g = GridSpec::default_for(lookup("3.248.4").unwrap());
        assert_eq!(g.points().unwrap(), vec![Params::new()]);
    }
}
