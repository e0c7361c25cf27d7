//! Diametral chords of a constant-diameter body: pairwise intersection and
//! the chord determined by each supporting hemisphere.

use sphaera::reuleaux::{random_reuleaux, ReuleauxSpec};
use sphaera::width::{check_chord_intersections, diametral_chords, orthogonality_residual, Correspondence};

fn main() -> sphaera::Result<()> {
    let body = random_reuleaux(&ReuleauxSpec::new(7, 1.1).with_seed(11))?;
    let chords = diametral_chords(&body, 1e-6);
    println!("{} diametral chords sampled", chords.len());
    let report = check_chord_intersections(&body)?;
    println!("all pairs intersect: {}", report.verdict);

    let corr = Correspondence::new(&body)?;
    for r in body.polar()?.boundary_sample(6) {
        let chord = corr.chord(&r.point)?;
        println!(
            "r = {:?}: chord length {:.10}, orthogonality residual {:.1e}",
            r.point,
            chord.length,
            orthogonality_residual(&chord, &r.point)
        );
    }
    Ok(())
}
