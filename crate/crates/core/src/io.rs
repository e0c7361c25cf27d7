//! Body files (JSON) and profile export (CSV).
//!
//! ```json
//! {"type": "polygon", "vertices": [[1,0,0], [0,1,0], [0,0,1]]}
//! {"type": "arcs", "arcs": [{"center": [0,0,1], "radius": 0.3, "start": [..], "end": [..]}]}
//! ```
//!
//! A single arc whose start equals its end is read as a full circle.

use std::fs;
use std::io::Write;
use std::path::Path;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::body::{ArcBody, Body, CircleArc, SpherePolygon};
use crate::error::Error;
use crate::report::ProfileSample;
use crate::sphere::{geodesic_distance, SpherePoint};
use crate::tolerance::EPS_INCIDENCE;

#[derive(Debug, thiserror::Error)]
pub enum IoError {
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Invalid(#[from] Error),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
enum BodyRepr {
    Polygon { vertices: Vec<[f64; 3]> },
    Arcs { arcs: Vec<ArcRepr> },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct ArcRepr {
    center: [f64; 3],
    radius: f64,
    start: [f64; 3],
    end: [f64; 3],
}

fn point(v: [f64; 3], what: &str) -> Result<SpherePoint, Error> {
    SpherePoint::try_from(v).map_err(|_| Error::InvalidBody(format!("{what} {v:?} is not a nonzero finite vector")))
}

impl From<&Body> for BodyRepr {
    fn from(body: &Body) -> Self {
        match body {
            Body::Polygon(p) => BodyRepr::Polygon { vertices: p.vertices().iter().map(SpherePoint::xyz).collect() },
            Body::Arcs(a) => BodyRepr::Arcs {
                arcs: a
                    .arcs()
                    .iter()
                    .map(|arc| ArcRepr {
                        center: arc.center().xyz(),
                        radius: arc.radius(),
                        start: arc.start().xyz(),
                        end: arc.end().xyz(),
                    })
                    .collect(),
            },
        }
    }
}

impl TryFrom<BodyRepr> for Body {
    type Error = Error;

    fn try_from(repr: BodyRepr) -> Result<Self, Error> {
        match repr {
            BodyRepr::Polygon { vertices } => {
                let vs = vertices.iter().enumerate().map(|(i, v)| point(*v, &format!("vertex {i}"))).collect::<Result<
                    Vec<_>,
                    _,
                >>(
                )?;
                Ok(SpherePolygon::new(vs)?.into())
            }
            BodyRepr::Arcs { arcs } => {
                let single = arcs.len() == 1;
                let pieces = arcs
                    .iter()
                    .enumerate()
                    .map(|(i, a)| {
                        let c = point(a.center, &format!("arc {i} center"))?;
                        let s = point(a.start, &format!("arc {i} start"))?;
                        let e = point(a.end, &format!("arc {i} end"))?;
                        let full = single && geodesic_distance(&s, &e) <= EPS_INCIDENCE;
                        CircleArc::from_endpoints(c, a.radius, s, e, full)
                            .map_err(|err| Error::InvalidBody(format!("arc {i}: {err}")))
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(ArcBody::new(pieces)?.into())
            }
        }
    }
}

impl Serialize for Body {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        BodyRepr::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Body {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = BodyRepr::deserialize(d)?;
        Body::try_from(repr).map_err(serde::de::Error::custom)
    }
}

pub fn body_from_json(text: &str) -> Result<Body, IoError> {
    let repr: BodyRepr = serde_json::from_str(text)?;
    Ok(Body::try_from(repr)?)
}

pub fn body_to_json(body: &Body) -> String {
    serde_json::to_string_pretty(body).expect("body serialization is infallible")
}

pub fn load_body(path: impl AsRef<Path>) -> Result<Body, IoError> {
    body_from_json(&fs::read_to_string(path)?)
}

pub fn save_body(body: &Body, path: impl AsRef<Path>) -> Result<(), IoError> {
    let mut text = body_to_json(body);
    text.push('\n');
    fs::write(path, text)?;
    Ok(())
}

/// Which quantity a profile records.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProfileKind {
    Width,
    Diameter,
}

impl ProfileKind {
    fn header(self) -> &'static str {
        match self {
            ProfileKind::Width => "index,k_x,k_y,k_z,width_radians",
            ProfileKind::Diameter => "index,p_x,p_y,p_z,farthest_distance_radians",
        }
    }
}

pub fn write_profile_csv<W: Write>(mut w: W, kind: ProfileKind, profile: &[ProfileSample]) -> std::io::Result<()> {
    writeln!(w, "{}", kind.header())?;
    for (i, s) in profile.iter().enumerate() {
        let [x, y, z] = s.point.xyz();
        writeln!(w, "{i},{x},{y},{z},{}", s.value)?;
    }
    Ok(())
}

pub fn profile_csv(kind: ProfileKind, profile: &[ProfileSample]) -> String {
    let mut out = Vec::new();
    write_profile_csv(&mut out, kind, profile).expect("writing to a Vec cannot fail");
    String::from_utf8(out).expect("csv is ascii")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reuleaux::{ball, regular_reuleaux, ReuleauxSpec};

    #[test]
    fn roundtrip_polygon_and_arcs() {
        let poly: Body = SpherePolygon::new(vec![
            SpherePoint::new(1., 0., 0.).unwrap(),
            SpherePoint::new(0., 1., 0.).unwrap(),
            SpherePoint::new(0., 0., 1.).unwrap(),
        ])
        .unwrap()
        .into();
        let back = body_from_json(&body_to_json(&poly)).unwrap();
        assert_eq!(back, poly);

        let r = regular_reuleaux(&ReuleauxSpec::new(5, 0.9)).unwrap();
        let back = body_from_json(&body_to_json(&r)).unwrap();
        assert_eq!(back.pieces().len(), 5);
        assert!((back.area() - r.area()).abs() < 1e-12);
    }

    #[test]
    fn single_closed_arc_is_full_circle() {
        let b = ball(SpherePoint::new(0., 0., 1.).unwrap(), 0.3).unwrap();
        let text = body_to_json(&b);
        assert!(text.contains("\"arcs\""));
        let back = body_from_json(&text).unwrap();
        assert!(back.pieces()[0].is_full_circle());
    }

    #[test]
    fn loader_renormalizes() {
        let b = body_from_json(r#"{"type":"polygon","vertices":[[2,0,0],[0,3,0],[0,0,0.5]]}"#).unwrap();
        let Body::Polygon(p) = b else { panic!() };
        assert_eq!(p.vertices()[0].xyz(), [1.0, 0.0, 0.0]);
    }

    #[test]
    fn loader_names_failed_invariant() {
        let cases = [
            (r#"{"type":"polygon","vertices":[[1,0,0],[0,1,0]]}"#, "at least 3"),
            (r#"{"type":"polygon","vertices":[[1,0,0],[0,0,0],[0,0,1]]}"#, "vertex 1"),
            (r#"{"type":"arcs","arcs":[{"center":[0,0,1],"radius":0.3,"start":[1,0,0],"end":[1,0,0]}]}"#, "distance"),
        ];
        for (text, needle) in cases {
            let err = body_from_json(text).unwrap_err().to_string();
            assert!(err.contains(needle), "{err}");
        }
        assert!(matches!(body_from_json("{"), Err(IoError::Json(_))));
        assert!(matches!(body_from_json(r#"{"type":"blob"}"#), Err(IoError::Json(_))));
    }

    #[test]
    fn csv_headers() {
        let s = [ProfileSample { point: SpherePoint::new(0., 0., 1.).unwrap(), value: 0.5 }];
        let w = profile_csv(ProfileKind::Width, &s);
        assert_eq!(w, "index,k_x,k_y,k_z,width_radians\n0,0,0,1,0.5\n");
        let d = profile_csv(ProfileKind::Diameter, &s);
        assert!(d.starts_with("index,p_x,p_y,p_z,farthest_distance_radians\n"));
    }
}
