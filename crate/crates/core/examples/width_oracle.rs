//! The closed-form width against the brute-force lune search.

use sphaera::convex_hull;
use sphaera::width::{width_given_support, width_oracle};
use sphaera::SpherePoint;

fn main() -> sphaera::Result<()> {
    let pts = [[0.9, 0.1, 1.0], [-0.2, 0.8, 1.0], [-0.7, -0.3, 1.0], [0.3, -0.6, 1.0]]
        .into_iter()
        .map(SpherePoint::try_from)
        .collect::<sphaera::Result<Vec<_>>>()?;
    let body = convex_hull(&pts)?.into();
    for r in sphaera::Body::polar(&body)?.boundary_sample(8) {
        let exact = width_given_support(&body, &r.point)?;
        let brute = width_oracle(&body, &r.point, 10_000)?;
        println!("closed form {exact:.9}  oracle {brute:.9}  gap {:.1e}", brute - exact);
    }
    Ok(())
}
