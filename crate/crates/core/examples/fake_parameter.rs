//! A parameter that cancels out of the closed form, and what differentiating
//! the integrand with respect to it produces.

use std::f64::consts::LN_2;

use gr_elementary::catalog::exponential::pn_integrand;
use gr_elementary::catalog::{evaluate_entry, Params};
use gr_elementary::exact::p_poly;
use gr_elementary::harness::oracle;

fn main() -> gr_elementary::error::Result<()> {
    for p in [0.5, 1.0, 2.0, 10.0] {
        let v = evaluate_entry("3.311.1", &Params::new().with("p", p))?;
        println!("p = {p:<4}  p * I(p) = {:.16e}  (ln 2 = {LN_2:.16e})", p * v);
    }

    println!();
    for n in 1..=4u32 {
        for p in [0.5, 1.0, 2.0] {
            let (f, domain) = pn_integrand(n, p)?;
            let r = oracle(&f, &domain)?;
            let expected = (1..=n).map(f64::from).product::<f64>() * LN_2 / p.powi(n as i32 + 1);
            println!(
                "n = {n}, p = {p:<3}  P_n = {:<24} oracle {:.12e}  n! ln2/p^(n+1) {expected:.12e}",
                p_poly(n)?.to_string(),
                r.value
            );
        }
    }
    Ok(())
}
