//! The quadrature oracle on the known-value suite: value, error estimate and
//! the true error for each integral.

use gr_elementary::harness::ORACLE_TOL;
use gr_elementary::quadrature::{integrate, known_value_suite, DEFAULT_MAX_EVALS};

fn main() -> gr_elementary::error::Result<()> {
    println!("{:<16} {:>22} {:>10} {:>10} {:>7}", "integral", "value", "estimate", "error", "evals");
    for k in known_value_suite() {
        let r = integrate(&k.integrand, &k.domain, ORACLE_TOL, DEFAULT_MAX_EVALS)?;
        println!(
            "{:<16} {:>22.16e} {:>10.2e} {:>10.2e} {:>7}",
            k.name,
            r.value,
            r.abs_error_estimate,
            (r.value - k.reference).abs(),
            r.n_evals
        );
    }
    Ok(())
}
