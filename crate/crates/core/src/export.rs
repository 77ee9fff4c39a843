//! Geometry export: OFF meshes for viewers and an exact JSON document that
//! reads back into the same polytrope.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{ParseError, Result, TetraError};
use crate::extremal::{extremal_set, ExtremalLabel, ExtremalSet};
use crate::maxplus::KleeneMatrix;
use crate::polytrope::{build_polytrope, Edge, FVector, Facet, PolygonVector, Polytrope, Vertex};

pub const FORMAT_NAME: &str = "tetra-polytrope";
pub const FORMAT_VERSION: u32 = 1;

/// Face data; absent when the facets of a non-maximal span could not be
/// assembled.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceData {
    pub vertices: Vec<Vertex>,
    pub facets: Vec<Facet>,
    pub edges: Vec<Edge>,
    pub f_vector: FVector,
    pub polygon_vector: PolygonVector,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExportDocument {
    pub format: String,
    pub version: u32,
    pub matrix: KleeneMatrix,
    pub maximal: bool,
    pub extremals: ExtremalSet,
    pub faces: Option<FaceData>,
}

impl ExportDocument {
    pub fn from_polytrope(p: &Polytrope) -> Self {
        ExportDocument {
            format: FORMAT_NAME.into(),
            version: FORMAT_VERSION,
            matrix: p.matrix.clone(),
            maximal: p.is_maximal(),
            extremals: p.extremals.clone(),
            faces: Some(FaceData {
                vertices: p.vertices.clone(),
                facets: p.facets.clone(),
                edges: p.edges.clone(),
                f_vector: p.f_vector,
                polygon_vector: p.polygon_vector,
            }),
        }
    }

    /// Builds whatever is available. Maximal inputs must yield a full
    /// polytrope; for the others a facet failure leaves `faces` empty.
    pub fn of(a: &KleeneMatrix) -> Result<Self> {
        let extremals = extremal_set(a)?;
        match build_polytrope(a, extremals.clone()) {
            Ok(p) => Ok(Self::from_polytrope(&p)),
            Err(e) if extremals.maximal => Err(e),
            Err(_) => Ok(ExportDocument {
                format: FORMAT_NAME.into(),
                version: FORMAT_VERSION,
                matrix: a.clone(),
                maximal: false,
                extremals,
                faces: None,
            }),
        }
    }

    pub fn polytrope(&self) -> Option<Polytrope> {
        let f = self.faces.as_ref()?;
        Some(Polytrope {
            matrix: self.matrix.clone(),
            extremals: self.extremals.clone(),
            vertices: f.vertices.clone(),
            facets: f.facets.clone(),
            edges: f.edges.clone(),
            f_vector: f.f_vector,
            polygon_vector: f.polygon_vector,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("export document serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: ExportDocument = serde_json::from_str(text).map_err(|e| {
            ParseError::new(e.to_string()).at(format!("line {}, column {}", e.line(), e.column()))
        })?;
        if doc.format != FORMAT_NAME || doc.version != FORMAT_VERSION {
            return Err(ParseError::new(format!("unsupported document {} v{}", doc.format, doc.version)).into());
        }
        Ok(doc)
    }
}

/// OFF text in the chart `x4 = 0`, vertices with 12 decimals, faces
/// counter-clockwise seen from outside. Refused for non-maximal spans.
pub fn to_off(p: &Polytrope) -> Result<String> {
    if !p.is_maximal() {
        return Err(TetraError::NonMaximal("OFF export needs a maximal span".into()));
    }
    let index: BTreeMap<ExtremalLabel, usize> = p.vertices.iter().enumerate().map(|(n, v)| (v.label, n)).collect();
    let mut out = String::new();
    let _ = writeln!(out, "OFF");
    let _ = writeln!(out, "{} {} {}", p.f_vector.vertices, p.f_vector.facets, p.f_vector.edges);
    for v in &p.vertices {
        let [x, y, z] = v.point.to_f64();
        let _ = writeln!(out, "{x:.12} {y:.12} {z:.12}");
    }
    for f in &p.facets {
        let ids: Vec<String> = f.cycle.iter().map(|l| index[l].to_string()).collect();
        let _ = writeln!(out, "{} {}", ids.len(), ids.join(" "));
    }
    Ok(out)
}
