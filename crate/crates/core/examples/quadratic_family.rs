//! Powers of a quadratic on the half line: integer powers, half-integer
//! powers and the series limit, each against the oracle.

use gr_elementary::catalog::quadratic::{
    base_case, quadratic_power_half_integer, quadratic_power_halfline, quadratic_power_series_limit,
    quadratic_power_series_partial, QuadraticParams,
};
use gr_elementary::harness::oracle;
use gr_elementary::quadrature::{Integrand, IntervalSpec};

fn oracle_power(q: (f64, f64, f64), exponent: f64) -> f64 {
    let (a, b, c) = q;
    let f = Integrand::new(move |x: f64| ((a * x + 2.0 * b) * x + c).powf(-exponent));
    oracle(&f, &IntervalSpec::semi_infinite(0.0)).map(|r| r.value).unwrap_or(f64::NAN)
}

fn main() -> gr_elementary::error::Result<()> {
    let (a, b, c) = (1.0, 1.0, 2.0);
    let q = QuadraticParams::new(a, b, c);
    println!("a x^2 + 2 b x + c with a = {a}, b = {b}, c = {c}");
    println!("base case  {:.16e}", base_case(q)?);

    for n in 1..=5 {
        let v = quadratic_power_halfline(q, n)?;
        let o = oracle_power((a, b, c), f64::from(n));
        println!("n = {n}      closed {:.16e}  oracle {o:.16e}", v.value);
    }
    for n in 0..=4 {
        let v = quadratic_power_half_integer(q, n)?;
        let o = oracle_power((a, b, c), f64::from(n) + 1.5);
        println!("n = {n} + 3/2 closed {:.16e}  oracle {o:.16e}", v.value);
    }

    let limit = quadratic_power_series_limit(q)?;
    for terms in [1, 2, 5, 10, 20, 40] {
        let s = quadratic_power_series_partial(q, terms)?;
        println!("series J = {terms:>2}  {s:.16e}  gap {:.1e}", (limit - s).abs());
    }
    Ok(())
}
