//! Verify one entry on a custom grid and write the records as JSON lines and
//! CSV, then read them back.
//!
//! ```text
//! cargo run --example report_export -- /tmp/reports
//! ```

use std::path::PathBuf;

use gr_elementary::catalog::lookup;
use gr_elementary::harness::{emit_report, parse_report, verify_entry, Axis, Format, GridSpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "target/reports".into()));
    std::fs::create_dir_all(&dir)?;

    let entry = lookup("4.222-gen-s")?;
    let grid = GridSpec::default_for(entry)
        .with_axis("s", Axis::Log { lo: 1.5, hi: 20.0, count: 5 })?
        .with_overrides(["a=0.5,2", "b=1"])?;
    let records = verify_entry(entry.id, &grid, 1e-8, 1e-8)?;

    for (format, name) in [(Format::JsonLines, "report.jsonl"), (Format::Csv, "report.csv")] {
        let path = dir.join(name);
        let bytes = emit_report(&records, format)?;
        std::fs::write(&path, &bytes)?;
        let back = parse_report(&std::fs::read(&path)?, format)?;
        assert_eq!(back, records);
        println!("{}: {} records", path.display(), back.len());
    }
    let passed = records.iter().filter(|r| r.pass).count();
    println!("{passed}/{} passed", records.len());
    Ok(())
}
