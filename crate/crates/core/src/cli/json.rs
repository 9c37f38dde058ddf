//! JSON schema v1 for instances and results.
//!
//! Rationals are always strings (`"3/7"`, `"-2"`), never JSON floats.
//! Instance coordinates may also be given as JSON integers on input.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::constructive::ProofTrace;
use crate::depth::DepthRegion;
use crate::error::{Error, Result};
use crate::geom::{format_rational, parse_rational, ConvexRegion, HalfPlane, Point, PointSet};
use crate::oracle::{count_by_shape, Partition, Shape, Witness};

pub const SCHEMA_VERSION: u32 = 1;

pub type PointText = [String; 2];

pub fn point_text(p: &Point) -> PointText {
    [format_rational(&p.x), format_rational(&p.y)]
}

pub fn parse_point_text(t: &PointText, at: &str) -> Result<Point> {
    let coord = |s: &str, axis: usize| {
        parse_rational(s).ok_or_else(|| Error::Parse { at: format!("{at}[{axis}]"), msg: format!("bad rational {s:?}") })
    };
    Ok(Point::new(coord(&t[0], 0)?, coord(&t[1], 1)?))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceDocument {
    pub schema_version: u32,
    pub points: Vec<PointText>,
    #[serde(default)]
    pub metadata: BTreeMap<String, String>,
}

impl InstanceDocument {
    pub fn new(ps: &PointSet, metadata: BTreeMap<String, String>) -> Self {
        InstanceDocument { schema_version: SCHEMA_VERSION, points: ps.iter().map(point_text).collect(), metadata }
    }

    pub fn point_set(&self) -> Result<PointSet> {
        let pts = self
            .points
            .iter()
            .enumerate()
            .map(|(i, t)| parse_point_text(t, &format!("points[{i}]")))
            .collect::<Result<Vec<_>>>()?;
        Ok(PointSet::new(pts))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegionDocument {
    pub k: usize,
    pub kind: String,
    pub vertices: Vec<PointText>,
    /// Each constraint `[a, b, c]` is the closed half-plane `a*x + b*y <= c`.
    pub constraints: Vec<[String; 3]>,
}

impl From<&DepthRegion> for RegionDocument {
    fn from(dr: &DepthRegion) -> Self {
        RegionDocument {
            k: dr.k,
            kind: dr.region.kind().name().to_string(),
            vertices: dr.region.vertices().iter().map(point_text).collect(),
            constraints: dr.constraints.iter().map(halfplane_text).collect(),
        }
    }
}

impl RegionDocument {
    pub fn vertex_points(&self) -> Result<Vec<Point>> {
        self.vertices
            .iter()
            .enumerate()
            .map(|(i, t)| parse_point_text(t, &format!("c3.vertices[{i}]")))
            .collect()
    }

    /// The region rebuilt from its vertices.
    pub fn region(&self) -> Result<ConvexRegion> {
        Ok(crate::geom::convex_hull(&self.vertex_points()?))
    }
}

fn halfplane_text(h: &HalfPlane) -> [String; 3] {
    [format_rational(h.a()), format_rational(h.b()), format_rational(h.c())]
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionDocument {
    pub parts: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<PointText>,
    pub shape: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<String>,
}

impl PartitionDocument {
    pub fn new(part: &Partition, witness: Option<&Witness>, provenance: Option<&str>) -> Self {
        PartitionDocument {
            parts: part.parts().to_vec(),
            witness: witness.map(|w| point_text(&w.point)),
            shape: witness.map_or(part.shape(), |w| w.shape).name().to_string(),
            provenance: provenance.map(str::to_string),
        }
    }

    pub fn witness_point(&self) -> Result<Option<Point>> {
        self.witness.as_ref().map(|t| parse_point_text(t, "witness")).transpose()
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counts {
    pub total: usize,
    pub s331: usize,
    pub s322: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultDocument {
    pub schema_version: u32,
    pub instance: InstanceDocument,
    /// Number of parts, recorded for `r`-part results.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<usize>,
    #[serde(default)]
    pub c3: Option<RegionDocument>,
    pub partitions: Vec<PartitionDocument>,
    #[serde(default)]
    pub case_label: Option<u8>,
    pub counts: Counts,
}

impl ResultDocument {
    fn with_partitions(ps: &PointSet, partitions: Vec<PartitionDocument>) -> Self {
        let counts = Counts {
            total: partitions.len(),
            s331: partitions.iter().filter(|p| p.shape == Shape::S331.name()).count(),
            s322: partitions.iter().filter(|p| p.shape == Shape::S322.name()).count(),
        };
        ResultDocument {
            schema_version: SCHEMA_VERSION,
            instance: InstanceDocument::new(ps, BTreeMap::new()),
            r: None,
            c3: None,
            partitions,
            case_label: None,
            counts,
        }
    }

    pub fn from_enumeration(ps: &PointSet, results: &[(Partition, Witness)]) -> Self {
        let docs = results.iter().map(|(p, w)| PartitionDocument::new(p, Some(w), None)).collect();
        let doc = ResultDocument::with_partitions(ps, docs);
        debug_assert_eq!((doc.counts.s331, doc.counts.s322), count_by_shape(results));
        doc
    }

    pub fn from_trace(ps: &PointSet, trace: &ProofTrace) -> Self {
        let docs = trace
            .entries
            .iter()
            .map(|e| PartitionDocument::new(&e.partition, Some(&e.witness), Some(e.provenance.name())))
            .collect();
        let mut doc = ResultDocument::with_partitions(ps, docs);
        doc.c3 = Some(RegionDocument::from(&trace.c3));
        doc.case_label = Some(trace.case_label);
        doc
    }

    /// `r`-part partitions whose common point is the input point `x_idx`.
    pub fn from_general(ps: &PointSet, r: usize, parts: &[Partition], x_idx: usize) -> Self {
        let x = &ps[x_idx];
        let docs = parts
            .iter()
            .map(|p| {
                let w = Witness { point: x.clone(), shape: p.shape() };
                PartitionDocument::new(p, Some(&w), Some("Case4Sector"))
            })
            .collect();
        let mut doc = ResultDocument::with_partitions(ps, docs);
        doc.r = Some(r);
        doc
    }

    pub fn counts_consistent(&self) -> bool {
        self.counts.total == self.partitions.len()
            && self.counts.s331 == self.partitions.iter().filter(|p| p.shape == "S331").count()
            && self.counts.s322 == self.partitions.iter().filter(|p| p.shape == "S322").count()
    }
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("documents always serialize");
    s.push('\n');
    s
}

fn json_error(e: serde_json::Error) -> Error {
    Error::Parse { at: format!("line {} column {}", e.line(), e.column()), msg: e.to_string() }
}

fn coordinate(v: &Value, at: String) -> Result<crate::geom::Rational> {
    let parsed = match v {
        Value::String(s) => parse_rational(s),
        Value::Number(n) if n.is_i64() || n.is_u64() => parse_rational(&n.to_string()),
        _ => None,
    };
    parsed.ok_or_else(|| Error::Parse { at, msg: format!("expected a rational string or integer, got {v}") })
}

/// Parses and normalizes an instance document. Rejects a wrong schema
/// version, malformed coordinates and duplicate points.
pub fn parse_instance_document(text: &[u8]) -> Result<InstanceDocument> {
    let root: Value = serde_json::from_slice(text).map_err(json_error)?;
    let err = |at: &str, msg: &str| Error::Parse { at: at.to_string(), msg: msg.to_string() };
    let obj = root.as_object().ok_or_else(|| err("$", "expected an object"))?;
    match obj.get("schema_version").and_then(Value::as_u64) {
        Some(v) if v == SCHEMA_VERSION as u64 => {}
        _ => return Err(err("schema_version", "expected schema_version 1")),
    }
    let raw = obj.get("points").and_then(Value::as_array).ok_or_else(|| err("points", "expected an array"))?;
    let mut points = Vec::with_capacity(raw.len());
    for (i, item) in raw.iter().enumerate() {
        let pair = item
            .as_array()
            .filter(|a| a.len() == 2)
            .ok_or_else(|| err(&format!("points[{i}]"), "expected a two-element array"))?;
        let p = Point::new(coordinate(&pair[0], format!("points[{i}][0]"))?, coordinate(&pair[1], format!("points[{i}][1]"))?);
        if let Some(j) = points.iter().position(|q| q == &p) {
            return Err(err(&format!("points[{i}]"), &format!("duplicate of points[{j}]")));
        }
        points.push(p);
    }
    let mut metadata = BTreeMap::new();
    if let Some(m) = obj.get("metadata") {
        let m = m.as_object().ok_or_else(|| err("metadata", "expected an object"))?;
        for (k, v) in m {
            let v = v.as_str().ok_or_else(|| err(&format!("metadata.{k}"), "expected a string"))?;
            metadata.insert(k.clone(), v.to_string());
        }
    }
    Ok(InstanceDocument::new(&PointSet::new(points), metadata))
}

pub fn parse_instance(text: &[u8]) -> Result<PointSet> {
    parse_instance_document(text)?.point_set()
}

pub fn parse_result(text: &[u8]) -> Result<ResultDocument> {
    serde_json::from_slice(text).map_err(json_error)
}

/// Partitions to check: either a result document, an object with a
/// `partitions` array of `{ "parts": ... }`, or a bare array of part lists.
pub fn parse_partition_list(text: &[u8]) -> Result<Vec<Vec<Vec<usize>>>> {
    let root: Value = serde_json::from_slice(text).map_err(json_error)?;
    let list = match &root {
        Value::Array(a) => a,
        Value::Object(o) => o
            .get("partitions")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse { at: "partitions".into(), msg: "expected an array".into() })?,
        _ => return Err(Error::Parse { at: "$".into(), msg: "expected an array or object".into() }),
    };
    list.iter()
        .enumerate()
        .map(|(i, item)| {
            let parts = item.get("parts").unwrap_or(item);
            serde_json::from_value(parts.clone())
                .map_err(|e| Error::Parse { at: format!("partitions[{i}]"), msg: e.to_string() })
        })
        .collect()
}
