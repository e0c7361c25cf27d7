//! Convex hulls on the sphere and their polar bodies.

use sphaera::reuleaux::ball;
use sphaera::{convex_hull, Body, SpherePoint};

fn main() -> sphaera::Result<()> {
    let pts: Vec<SpherePoint> =
        [[1.0, 0.2, 1.0], [-0.3, 0.9, 1.0], [-0.8, -0.5, 1.0], [0.4, -0.9, 1.0], [0.0, 0.0, 1.0]]
            .into_iter()
            .map(SpherePoint::try_from)
            .collect::<sphaera::Result<_>>()?;
    let hull = convex_hull(&pts)?;
    println!("hull keeps {} of {} points, area {:.6}", hull.vertices().len(), pts.len(), hull.area());

    let body: Body = hull.clone().into();
    let polar = body.polar()?;
    println!("polar area {:.6}", polar.area());
    let Body::Polygon(back) = polar.polar()? else { unreachable!() };
    let err = hull
        .vertices()
        .iter()
        .map(|v| back.vertices().iter().map(|w| v.distance(w)).fold(f64::INFINITY, f64::min))
        .fold(0.0, f64::max);
    println!("double polar matches the hull to {err:.1e}");

    let octant: Body = convex_hull(&[
        SpherePoint::new(1.0, 0.0, 0.0)?,
        SpherePoint::new(0.0, 1.0, 0.0)?,
        SpherePoint::new(0.0, 0.0, 1.0)?,
    ])?
    .into();
    println!("\noctant polar vertices: {:?}", octant.polar()?.pieces().iter().map(|e| e.start()).collect::<Vec<_>>());

    let b = ball(SpherePoint::new(0.0, 0.0, 1.0)?, 0.3)?;
    println!("polar of a ball of radius 0.3 has radius {:.12}", b.polar()?.pieces()[0].radius());
    Ok(())
}
