//! Body JSON round trip and CSV profile export.

use sphaera::io::{body_from_json, body_to_json, profile_csv, ProfileKind};
use sphaera::reuleaux::{regular_reuleaux, ReuleauxSpec};
use sphaera::width::{diameter_profile, width_profile};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let body = regular_reuleaux(&ReuleauxSpec::new(3, 1.0))?;
    let json = body_to_json(&body);
    println!("{json}");
    let back = body_from_json(&json)?;
    println!("reloaded {} arcs", back.pieces().len());

    let csv = profile_csv(ProfileKind::Width, &width_profile(&back, 8)?);
    print!("\n{csv}");
    let csv = profile_csv(ProfileKind::Diameter, &diameter_profile(&back, 8));
    print!("\n{csv}");

    match body_from_json(r#"{"type":"polygon","vertices":[[1,0,0],[-1,0,0],[0,1,0]]}"#) {
        Ok(_) => println!("unexpectedly valid"),
        Err(e) => println!("\nrejected: {e}"),
    }
    Ok(())
}
