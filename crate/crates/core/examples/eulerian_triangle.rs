//! Eulerian triangle and the P_n / Q_n polynomials built on it.
//!
//! ```text
//! cargo run --example eulerian_triangle -- 8
//! ```

use gr_elementary::exact::{factorial, p_poly, q_poly, EulerianTable};

fn main() -> gr_elementary::error::Result<()> {
    let n: u32 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(7);
    let table = EulerianTable::build(n)?;
    for (i, row) in table.rows().enumerate() {
        let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
        println!("{:>2}: {}", i + 1, cells.join(" "));
    }

    println!();
    for k in 1..=n.min(6) {
        println!("P_{k}(u) = {}", p_poly(k)?);
        let q = q_poly(k)?;
        println!("Q_{k}(u) = {}   Q_{k}(1) = {}", q, factorial(u64::from(k)));
    }
    Ok(())
}
