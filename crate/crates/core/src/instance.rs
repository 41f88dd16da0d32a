//! The JSON instance format and augmentation output.
//!
//! Canonical instance schema:
//!
//! ```json
//! { "vertices": [1, 2],
//!   "edges": [[1, 2]],
//!   "drawings": [ { "name": "a", "pos": { "1": ["0", "0"], "2": ["3/2", "1"] } } ] }
//! ```
//!
//! Scalars are strings `"p"` or `"p/q"` in lowest terms with positive
//! denominator; plain JSON integers are also accepted on input.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde_json::{json, Map, Value};

use crate::drawing::PlanarDrawing;
use crate::error::{Error, Result};
use crate::geom::Point2;
use crate::graph::{LabelledGraph, VertexId};
use crate::pipeline::CompatibleResult;
use crate::scalar::{format_scalar, parse_scalar, Scalar};

/// A labelled graph with `k` named drawings over the same vertex set.
#[derive(Debug, Clone)]
pub struct Instance {
    graph: Arc<LabelledGraph>,
    names: Vec<String>,
    drawings: Vec<PlanarDrawing>,
}

impl Instance {
    pub fn build(
        vertices: Vec<VertexId>,
        edges: Vec<(VertexId, VertexId)>,
        drawings: Vec<(String, BTreeMap<VertexId, Point2>)>,
    ) -> Result<Self> {
        let graph = Arc::new(LabelledGraph::new(vertices, edges)?);
        let mut names = Vec::new();
        let mut ds = Vec::new();
        for (name, pos) in drawings {
            ds.push(PlanarDrawing::new(graph.clone(), pos)?);
            names.push(name);
        }
        if ds.is_empty() {
            return Err(Error::BadInstance("instance has no drawings".into()));
        }
        Ok(Instance { graph, names, drawings: ds })
    }

    pub fn graph(&self) -> &Arc<LabelledGraph> {
        &self.graph
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn drawings(&self) -> &[PlanarDrawing] {
        &self.drawings
    }

    pub fn drawing_count(&self) -> usize {
        self.drawings.len()
    }

    /// Parse the canonical JSON schema. An output file (with
    /// `added_vertices`/`added_edges`) parses as the augmented instance.
    pub fn from_json(text: &str) -> Result<Instance> {
        let v: Value = serde_json::from_str(text)
            .map_err(|e| Error::BadInstance(format!("invalid JSON: {e}")))?;
        let obj = v
            .as_object()
            .ok_or_else(|| Error::BadInstance("top level must be an object".into()))?;

        let mut vertices = parse_vertex_list(obj.get("vertices"))?;
        let mut edges = parse_edge_list(obj.get("edges"))?;
        if let Some(extra) = obj.get("added_vertices") {
            vertices.extend(parse_vertex_list(Some(extra))?);
        }
        if let Some(extra) = obj.get("added_edges") {
            edges.extend(parse_edge_list(Some(extra))?);
        }

        let drawings_json = obj
            .get("drawings")
            .and_then(|d| d.as_array())
            .ok_or_else(|| Error::BadInstance("missing \"drawings\" array".into()))?;
        let mut drawings = Vec::new();
        for (i, dj) in drawings_json.iter().enumerate() {
            let dobj = dj
                .as_object()
                .ok_or_else(|| Error::BadInstance(format!("drawing {i} must be an object")))?;
            let name = dobj
                .get("name")
                .and_then(|n| n.as_str())
                .map(|s| s.to_string())
                .unwrap_or_else(|| format!("drawing-{i}"));
            let pos_obj = dobj
                .get("pos")
                .and_then(|p| p.as_object())
                .ok_or_else(|| Error::BadInstance(format!("drawing {i} lacks \"pos\"")))?;
            let mut pos = BTreeMap::new();
            for (key, coords) in pos_obj {
                let id: VertexId = key
                    .parse()
                    .map_err(|_| Error::BadInstance(format!("bad vertex id {key:?}")))?;
                pos.insert(id, parse_point(coords)?);
            }
            drawings.push((name, pos));
        }
        Instance::build(vertices, edges, drawings)
    }

    /// Canonical JSON text (keys ordered, scalars in lowest terms).
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_value()).expect("serializable")
    }

    pub fn to_value(&self) -> Value {
        let vertices: Vec<Value> = self.graph.vertices().map(|v| json!(v)).collect();
        let edges: Vec<Value> = self.graph.edges().map(|(u, v)| json!([u, v])).collect();
        let drawings: Vec<Value> = self
            .drawings
            .iter()
            .zip(&self.names)
            .map(|(d, name)| {
                json!({
                    "name": name,
                    "pos": positions_value(d.positions()),
                })
            })
            .collect();
        json!({ "vertices": vertices, "edges": edges, "drawings": drawings })
    }
}

fn parse_vertex_list(v: Option<&Value>) -> Result<Vec<VertexId>> {
    let arr = v
        .and_then(|v| v.as_array())
        .ok_or_else(|| Error::BadInstance("missing vertex list".into()))?;
    arr.iter()
        .map(|x| {
            x.as_u64()
                .and_then(|n| u32::try_from(n).ok())
                .ok_or_else(|| Error::BadInstance(format!("bad vertex id {x}")))
        })
        .collect()
}

fn parse_edge_list(v: Option<&Value>) -> Result<Vec<(VertexId, VertexId)>> {
    let arr = v
        .and_then(|v| v.as_array())
        .ok_or_else(|| Error::BadInstance("missing edge list".into()))?;
    arr.iter()
        .map(|e| {
            let pair = e
                .as_array()
                .filter(|p| p.len() == 2)
                .ok_or_else(|| Error::BadInstance(format!("bad edge {e}")))?;
            let u = pair[0]
                .as_u64()
                .and_then(|n| u32::try_from(n).ok())
                .ok_or_else(|| Error::BadInstance(format!("bad edge {e}")))?;
            let v = pair[1]
                .as_u64()
                .and_then(|n| u32::try_from(n).ok())
                .ok_or_else(|| Error::BadInstance(format!("bad edge {e}")))?;
            Ok((u, v))
        })
        .collect()
}

fn parse_point(v: &Value) -> Result<Point2> {
    let arr = v
        .as_array()
        .filter(|a| a.len() == 2)
        .ok_or_else(|| Error::BadInstance(format!("bad position {v}")))?;
    Ok(Point2::new(parse_coord(&arr[0])?, parse_coord(&arr[1])?))
}

fn parse_coord(v: &Value) -> Result<Scalar> {
    match v {
        Value::String(s) => parse_scalar(s),
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(crate::scalar::scalar(i))
            } else {
                Err(Error::BadScalar(n.to_string()))
            }
        }
        other => Err(Error::BadScalar(other.to_string())),
    }
}

fn coord_value(s: &Scalar) -> Value {
    use num::ToPrimitive;
    if s.denom() == &num::BigInt::from(1) {
        if let Some(i) = s.numer().to_i64() {
            return json!(i);
        }
    }
    json!(format_scalar(s))
}

fn positions_value(pos: &BTreeMap<VertexId, Point2>) -> Value {
    let mut map = Map::new();
    for (v, p) in pos {
        map.insert(v.to_string(), json!([coord_value(&p.x), coord_value(&p.y)]));
    }
    Value::Object(map)
}

/// Output schema: the input extended with the added vertices and edges, the
/// drawings carrying positions for everything, and a summary report.
pub fn result_to_json(instance: &Instance, result: &CompatibleResult) -> String {
    let vertices: Vec<Value> = instance.graph().vertices().map(|v| json!(v)).collect();
    let edges: Vec<Value> = instance.graph().edges().map(|(u, v)| json!([u, v])).collect();
    let drawings: Vec<Value> = result
        .drawings
        .iter()
        .zip(instance.names())
        .map(|(d, name)| {
            json!({
                "name": name,
                "pos": positions_value(d.positions()),
            })
        })
        .collect();
    let added_vertices: Vec<Value> = result.added_vertices.iter().map(|v| json!(v)).collect();
    let added_edges: Vec<Value> = result
        .added_edges
        .iter()
        .map(|(u, v)| json!([u, v]))
        .collect();
    let value = json!({
        "vertices": vertices,
        "edges": edges,
        "drawings": drawings,
        "added_vertices": added_vertices,
        "added_edges": added_edges,
        "report": {
            "added_vertex_count": result.report.added_vertex_count,
            "added_edge_count": result.report.added_edge_count,
            "envelope_constant": result.report.envelope_constant,
        },
    });
    serde_json::to_string_pretty(&value).expect("serializable")
}
