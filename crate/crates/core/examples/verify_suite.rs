//! The verification matrix at a reduced sampling resolution.

use sphaera::suite::{verify, SuiteConfig};

fn main() -> sphaera::Result<()> {
    let report = verify(&SuiteConfig { samples: 512, ..SuiteConfig::default() })?;
    println!("{report}");
    Ok(())
}
