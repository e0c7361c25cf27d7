//! Convex-body geometry on the unit sphere S².
//!
//! Lunes and their thickness, widths determined by supporting hemispheres,
//! diameters and diametral chords, polar bodies, and checkers for constant
//! width and constant diameter. Bodies are either geodesic polygons or bodies
//! bounded by circular arcs (balls, Reuleaux polygons, ball intersections).

pub mod body;
pub mod cli;
pub mod error;
pub mod grid;
pub mod io;
pub mod report;
pub mod reuleaux;
pub mod sphere;
pub mod suite;
pub mod tolerance;
pub mod width;

mod vec3;

pub use body::{
    convex_hull, ArcBody, Body, BoundaryPoint, CircleArc, ConeCenters, NormalCone, PointKind, SpherePolygon, TouchPoint,
};
pub use error::{Error, Result};
pub use report::{CheckReport, ProfileSample, Witness};
pub use sphere::{
    geodesic_distance, hemisphere_contains, lune_face_centers, lune_thickness, narrowest_lune_through, GeodesicArc,
    Hemisphere, Lune, SpherePoint,
};
