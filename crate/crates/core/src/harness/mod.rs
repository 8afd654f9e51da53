//! Verification runner: sweeps catalog entries over parameter grids and
//! compares each closed form with the quadrature oracle.
//!
//! Grid points are evaluated in parallel and collected in grid order, so a
//! run's records do not depend on scheduling. `wall_time` is recorded only
//! when [`VerifyOptions::timing`] is set; otherwise it is 0 and reports from
//! identical configurations are byte-identical.

pub mod grid;
pub mod notes;
pub mod report;

use std::fmt::Write as _;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

pub use grid::{Axis, GridSpec};
pub use notes::{check_notes, AnchorCheck, NoteCheck};
pub use report::{emit_report, parse_report, Format};

use crate::catalog::{lookup, registry, CatalogEntry, Params};
use crate::error::{Error, Result};
use crate::quadrature::{integrate, Integrand, IntervalSpec, QuadResult, DEFAULT_MAX_EVALS};

/// Tolerance the oracle is run at.
pub const ORACLE_TOL: f64 = 1e-10;
pub const DEFAULT_TOL_ABS: f64 = 1e-8;
pub const DEFAULT_TOL_REL: f64 = 1e-8;

/// Default for [`VerifyOptions::amplification_cap`]: no point is skipped
/// for cancellation.
pub const AMPLIFICATION_CAP: f64 = f64::INFINITY;

/// The oracle as used throughout the harness.
pub fn oracle(f: &Integrand, domain: &IntervalSpec) -> Result<QuadResult> {
    integrate(f, domain, ORACLE_TOL, DEFAULT_MAX_EVALS)
}

#[derive(Clone, Debug, PartialEq)]
pub struct VerificationRecord {
    pub entry_id: String,
    pub params: Params,
    pub closed_value: f64,
    pub oracle_value: f64,
    pub abs_diff: f64,
    pub rel_diff: f64,
    pub oracle_converged: bool,
    pub pass: bool,
    pub n_evals: u64,
    /// Seconds; 0 unless timing was requested.
    pub wall_time: f64,
}

/// `oracle_converged && abs_diff <= max(tol_abs, tol_rel * |closed_value|)`.
pub fn verdict(converged: bool, abs_diff: f64, closed_value: f64, tol_abs: f64, tol_rel: f64) -> bool {
    converged && abs_diff <= tol_abs.max(tol_rel * closed_value.abs())
}

impl VerificationRecord {
    /// Recomputes the pass flag from the stored numbers.
    pub fn verdict(&self, tol_abs: f64, tol_rel: f64) -> bool {
        verdict(self.oracle_converged, self.abs_diff, self.closed_value, tol_abs, tol_rel)
    }
}

/// A grid point that was not evaluated, with the reason.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Skipped {
    pub entry_id: String,
    pub params: String,
    pub reason: String,
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub tol_abs: f64,
    pub tol_rel: f64,
    /// Skip points whose closed form amplifies rounding error by more than
    /// this factor.
    pub amplification_cap: f64,
    pub timing: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            tol_abs: DEFAULT_TOL_ABS,
            tol_rel: DEFAULT_TOL_REL,
            amplification_cap: AMPLIFICATION_CAP,
            timing: false,
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct EntryRun {
    pub records: Vec<VerificationRecord>,
    pub skipped: Vec<Skipped>,
}

enum Outcome {
    Record(VerificationRecord),
    Skip(Skipped),
}

fn check_point(entry: &CatalogEntry, params: Params, opts: &VerifyOptions) -> Outcome {
    let start = opts.timing.then(Instant::now);
    let skip = |reason: String| {
        Outcome::Skip(Skipped {
            entry_id: entry.id.to_string(),
            params: params.to_string(),
            reason,
        })
    };
    if let Err(e) = entry.validate(&params) {
        return skip(e.to_string());
    }
    let closed = entry.evaluate_with_scale(&params);
    if let Ok(v) = closed {
        let amp = v.amplification();
        if amp > opts.amplification_cap {
            return skip(format!(
                "closed-form amplification {amp:.1e} exceeds {:.0e}",
                opts.amplification_cap
            ));
        }
    }
    let closed_value = closed.map(|v| v.value).unwrap_or(f64::NAN);
    let quad = entry.integrand(&params).and_then(|(f, d)| oracle(&f, &d));
    let (oracle_value, converged, n_evals) = match quad {
        Ok(r) => (r.value, r.converged, r.n_evals as u64),
        Err(_) => (f64::NAN, false, 0),
    };
    let abs_diff = (closed_value - oracle_value).abs();
    let rel_diff = if closed_value != 0.0 {
        abs_diff / closed_value.abs()
    } else if abs_diff == 0.0 {
        0.0
    } else {
        f64::INFINITY
    };
    let converged = converged && closed_value.is_finite() && oracle_value.is_finite();
    Outcome::Record(VerificationRecord {
        entry_id: entry.id.to_string(),
        pass: verdict(converged, abs_diff, closed_value, opts.tol_abs, opts.tol_rel),
        params,
        closed_value,
        oracle_value,
        abs_diff,
        rel_diff,
        oracle_converged: converged,
        n_evals,
        wall_time: start.map_or(0.0, |t| t.elapsed().as_secs_f64()),
    })
}

fn run_points(work: Vec<(&CatalogEntry, Params)>, opts: &VerifyOptions) -> EntryRun {
    let outcomes: Vec<Outcome> = work
        .into_par_iter()
        .map(|(e, p)| check_point(e, p, opts))
        .collect();
    let mut run = EntryRun::default();
    for o in outcomes {
        match o {
            Outcome::Record(r) => run.records.push(r),
            Outcome::Skip(s) => run.skipped.push(s),
        }
    }
    run
}

/// Records for every admissible point of `grid`, in grid order.
pub fn verify_entry(id: &str, grid: &GridSpec, tol_abs: f64, tol_rel: f64) -> Result<Vec<VerificationRecord>> {
    let opts = VerifyOptions {
        tol_abs,
        tol_rel,
        ..VerifyOptions::default()
    };
    Ok(verify_entry_with(id, grid, &opts)?.records)
}

/// Like [`verify_entry`], also returning the skipped points.
pub fn verify_entry_with(id: &str, grid: &GridSpec, opts: &VerifyOptions) -> Result<EntryRun> {
    let entry = lookup(id)?;
    let work = grid.points()?.into_iter().map(|p| (entry, p)).collect();
    let run = run_points(work, opts);
    if run.records.is_empty() {
        return Err(Error::EmptyGrid(id.to_string()));
    }
    Ok(run)
}

#[derive(Clone, Debug, Serialize)]
pub struct EntrySummary {
    pub id: &'static str,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

#[derive(Clone, Debug)]
pub struct Summary {
    pub entries: Vec<EntrySummary>,
    pub records: Vec<VerificationRecord>,
    pub skipped: Vec<Skipped>,
    pub notes: Vec<NoteCheck>,
}

impl Summary {
    pub fn failures(&self) -> impl Iterator<Item = &VerificationRecord> {
        self.records.iter().filter(|r| !r.pass)
    }

    /// No failing record, no entry without records, every note settled.
    pub fn all_passed(&self) -> bool {
        self.failures().next().is_none()
            && self.entries.iter().all(|e| e.passed + e.failed > 0)
            && self.notes.iter().all(NoteCheck::settled)
    }

    /// Plain-text table of counts, skipped points and notes.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{:<14} {:>6} {:>6} {:>7}", "entry", "pass", "fail", "skipped");
        for e in &self.entries {
            let _ = writeln!(out, "{:<14} {:>6} {:>6} {:>7}", e.id, e.passed, e.failed, e.skipped);
        }
        let passed: usize = self.entries.iter().map(|e| e.passed).sum();
        let _ = writeln!(
            out,
            "total: {} points, {} passed, {} failed, {} skipped",
            self.records.len(),
            passed,
            self.records.len() - passed,
            self.skipped.len()
        );
        if !self.skipped.is_empty() {
            let _ = writeln!(out, "\nskipped:");
            for s in &self.skipped {
                let _ = writeln!(out, "  {} {}: {}", s.entry_id, s.params, s.reason);
            }
        }
        let _ = writeln!(out, "\nresolution notes:");
        for n in &self.notes {
            let status = if n.settled() { "settled" } else { "UNSETTLED" };
            let _ = writeln!(out, "  [{status}] {} ({}): {}", n.key, n.entries.join(", "), n.resolution);
            for a in &n.anchors {
                let _ = writeln!(
                    out,
                    "    {}: reference {:.12e}, implemented {:.12e}, alternative {:.12e}",
                    a.label, a.reference, a.resolved, a.alternative
                );
            }
            if let Some(e) = &n.error {
                let _ = writeln!(out, "    error: {e}");
            }
        }
        out
    }
}

/// Every registry entry on its default grid.
pub fn verify_all(tol_abs: f64, tol_rel: f64) -> Summary {
    verify_all_with(&VerifyOptions {
        tol_abs,
        tol_rel,
        ..VerifyOptions::default()
    })
}

pub fn verify_all_with(opts: &VerifyOptions) -> Summary {
    verify_entries(registry().iter(), |e| Ok(GridSpec::default_for(e)), opts)
}

/// Runs `entries` on the grids produced by `grid_for`. A grid that cannot be
/// built counts as a skipped point naming the error.
pub fn verify_entries<'a>(
    entries: impl Iterator<Item = &'a CatalogEntry>,
    grid_for: impl Fn(&CatalogEntry) -> Result<GridSpec>,
    opts: &VerifyOptions,
) -> Summary {
    let entries: Vec<&CatalogEntry> = entries.collect();
    let mut work = Vec::new();
    let mut grid_errors = Vec::new();
    for &e in &entries {
        match grid_for(e).and_then(|g| g.points()) {
            Ok(points) => work.extend(points.into_iter().map(|p| (e, p))),
            Err(err) => grid_errors.push(Skipped {
                entry_id: e.id.to_string(),
                params: String::new(),
                reason: err.to_string(),
            }),
        }
    }
    let mut run = run_points(work, opts);
    run.skipped.extend(grid_errors);
    let entry_summaries = entries
        .iter()
        .map(|e| {
            let mine = run.records.iter().filter(|r| r.entry_id == e.id);
            let passed = mine.clone().filter(|r| r.pass).count();
            EntrySummary {
                id: e.id,
                passed,
                failed: mine.count() - passed,
                skipped: run.skipped.iter().filter(|s| s.entry_id == e.id).count(),
            }
        })
        .collect();
    Summary {
        entries: entry_summaries,
        records: run.records,
        skipped: run.skipped,
        notes: check_notes(),
    }
}
