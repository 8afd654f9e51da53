//! Evaluate registry entries by id, and compare each with its integrand.
//!
//! ```text
//! cargo run --example catalog_eval -- 4.222.1 a=2 b=1
//! ```

use gr_elementary::catalog::{lookup, registry, ParamKind, Params};
use gr_elementary::harness::oracle;

fn main() -> gr_elementary::error::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    if let Some((id, rest)) = args.split_first() {
        let entry = lookup(id)?;
        let params = Params::parse(rest.iter().map(String::as_str))?;
        show(entry.id, &params)?;
        return Ok(());
    }

    // No arguments: one point per parameterless or single-parameter entry.
    for entry in registry() {
        let params = match entry.params {
            [] => Params::new(),
            [p] if p.kind == ParamKind::Real => Params::new().with(p.name, 1.5),
            _ => continue,
        };
        if entry.validate(&params).is_ok() {
            show(entry.id, &params)?;
        }
    }
    Ok(())
}

fn show(id: &str, params: &Params) -> gr_elementary::error::Result<()> {
    let entry = lookup(id)?;
    let closed = entry.evaluate(params)?;
    let (f, domain) = entry.integrand(params)?;
    let r = oracle(&f, &domain)?;
    println!(
        "{id:<12} {:<12} closed {closed:>22.16e}  oracle {:>22.16e}  diff {:.1e}  on {domain}",
        params.to_string(),
        r.value,
        (closed - r.value).abs()
    );
    Ok(())
}
