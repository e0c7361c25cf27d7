//! Random constant-diameter bodies and lenses through both checkers.

use sphaera::suite::{search, search_jsonl, SuiteConfig};

fn main() -> sphaera::Result<()> {
    let cfg = SuiteConfig { seed: 3, samples: 512, ..SuiteConfig::default() };
    let entries = search(12, &cfg)?;
    for (i, e) in entries.iter().enumerate() {
        println!(
            "{i:>2}: {:>2} arcs  diameter {:.6} {:<5}  width {:.6} {:<5}",
            e.body.pieces().len(),
            e.diameter_report.target,
            e.diameter_report.verdict,
            e.width_report.target,
            e.width_report.verdict,
        );
    }
    let log = search_jsonl(&entries);
    println!("{} bytes of JSON lines", log.len());
    Ok(())
}
