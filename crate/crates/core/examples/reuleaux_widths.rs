//! A spherical Reuleaux pentagon: widths, thickness, diameter and both checkers.

use sphaera::reuleaux::{circumradius, regular_reuleaux, ReuleauxSpec};
use sphaera::width::{check_constant_diameter, check_constant_width, diameter, thickness, width_given_support};
use sphaera::PointKind;

fn main() -> sphaera::Result<()> {
    let delta = 0.9;
    let body = regular_reuleaux(&ReuleauxSpec::new(5, delta))?;
    println!("circumradius {:.10}", circumradius(5, delta)?);

    for bp in body.boundary_sample(10) {
        let (kind, cone) = body.classify_boundary_point(&bp)?;
        let widths: Vec<String> = cone
            .sample(3)
            .iter()
            .map(|k| width_given_support(&body, k).map(|w| format!("{w:.10}")))
            .collect::<sphaera::Result<_>>()?;
        let kind = if kind == PointKind::Smooth { "smooth" } else { "vertex" };
        println!("{kind:>6} point: widths {}", widths.join(", "));
    }

    println!("thickness {:.10}", thickness(&body));
    println!("diameter  {:.10}", diameter(&body).value);
    let w = check_constant_width(&body, 1e-6);
    let d = check_constant_diameter(&body, 1e-6);
    println!("constant width:    {} (w = {:.10})", w.verdict, w.target);
    println!("constant diameter: {} (δ = {:.10})", d.verdict, d.target);
    Ok(())
}
