//! Lune thickness two ways, and the narrowest lune through a point.

use sphaera::sphere::hemispheres_through;
use sphaera::{geodesic_distance, lune_face_centers, narrowest_lune_through, Hemisphere, Lune, SpherePoint};

fn main() -> sphaera::Result<()> {
    let g = SpherePoint::new(0.0, 0.0, 1.0)?;
    let h = SpherePoint::new(1.0, 0.0, 0.4)?;
    let lune = Lune::new(Hemisphere::new(g), Hemisphere::new(h))?;
    let (ug, uh) = lune_face_centers(&lune)?;
    println!("face centers {ug:?} and {uh:?}");
    println!("thickness  π − |gh| = {:.12}", lune.thickness());
    println!("thickness |u_G u_H| = {:.12}", geodesic_distance(&ug, &uh));

    // p on the boundary of K, q on the arc from p toward the center of K.
    let k = Hemisphere::new(g);
    let p = SpherePoint::new(1.0, 0.0, 0.0)?;
    let q = p.toward(&g, 0.8).expect("p and g are distinct");
    let narrow = narrowest_lune_through(&k, &p, &q)?;
    println!("\nnarrowest lune through q: thickness {:.12} (|pq| = {:.12})", narrow.thickness(), p.distance(&q));
    let thinnest_other = hemispheres_through(&q, 360)
        .into_iter()
        .filter_map(|m| Lune::new(k, m).ok())
        .map(|l| l.thickness())
        .fold(f64::INFINITY, f64::min);
    println!("thinnest of 360 other lunes K ∩ M with q on bd(M): {thinnest_other:.12}");
    Ok(())
}
