//! Full verification sweep with the summary table and resolution notes.

use gr_elementary::harness::{verify_all, DEFAULT_TOL_ABS, DEFAULT_TOL_REL};

fn main() {
    let summary = verify_all(DEFAULT_TOL_ABS, DEFAULT_TOL_REL);
    print!("{}", summary.render());
    for r in summary.failures() {
        println!("FAIL {} {} closed {:e} oracle {:e}", r.entry_id, r.params, r.closed_value, r.oracle_value);
    }
    if !summary.all_passed() {
        std::process::exit(1);
    }
}
