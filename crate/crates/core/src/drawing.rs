//! Straight-line drawings and exact planarity validation.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::sync::Arc;

use num::ToPrimitive;
use num::Zero;

use crate::error::{Error, Result};
use crate::geom::{
    point_in_open_segment, segments_properly_interact, Point2, Segment, SegmentInteraction,
};
use crate::graph::{LabelledGraph, VertexId};
use crate::scalar::{floor_int, scalar, Scalar};

/// One straight-line realization of a [`LabelledGraph`].
#[derive(Debug, Clone)]
pub struct PlanarDrawing {
    graph: Arc<LabelledGraph>,
    pos: BTreeMap<VertexId, Point2>,
}

impl PlanarDrawing {
    /// Positions must cover exactly the graph's vertex set. Planarity is not
    /// checked here; call [`validate_planar`].
    pub fn new(graph: Arc<LabelledGraph>, pos: BTreeMap<VertexId, Point2>) -> Result<Self> {
        for v in graph.vertices() {
            if !pos.contains_key(&v) {
                return Err(Error::BadInstance(format!("vertex {v} has no position")));
            }
        }
        if pos.len() != graph.vertex_count() {
            return Err(Error::BadInstance(
                "positions reference vertices outside the graph".into(),
            ));
        }
        Ok(PlanarDrawing { graph, pos })
    }

    pub fn graph(&self) -> &Arc<LabelledGraph> {
        &self.graph
    }

    pub fn pos(&self, v: VertexId) -> &Point2 {
        &self.pos[&v]
    }

    pub fn positions(&self) -> &BTreeMap<VertexId, Point2> {
        &self.pos
    }

    pub fn segment(&self, u: VertexId, v: VertexId) -> Segment {
        Segment::new(self.pos(u).clone(), self.pos(v).clone())
    }

    /// The drawing extended by new positioned vertices and edges, sharing the
    /// given (already extended) graph.
    pub fn extended(
        &self,
        graph: Arc<LabelledGraph>,
        extra_pos: &BTreeMap<VertexId, Point2>,
    ) -> Result<Self> {
        let mut pos = self.pos.clone();
        for (v, p) in extra_pos {
            pos.insert(*v, p.clone());
        }
        PlanarDrawing::new(graph, pos)
    }

    pub fn ensure_planar(&self) -> Result<()> {
        let report = validate_planar(self);
        if report.is_empty() {
            Ok(())
        } else {
            Err(Error::NotPlanar(report))
        }
    }
}

/// A single planarity violation, naming the offending pair.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum Violation {
    CoincidentVertices(VertexId, VertexId),
    /// Two edge segments cross or overlap (condition on open segments).
    EdgePair {
        e1: (VertexId, VertexId),
        e2: (VertexId, VertexId),
        overlap: bool,
    },
    /// A vertex lies in the open interior of an edge segment.
    VertexOnEdge {
        v: VertexId,
        e: (VertexId, VertexId),
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::CoincidentVertices(u, v) => {
                write!(f, "vertices {u} and {v} share a position")
            }
            Violation::EdgePair { e1, e2, overlap } => write!(
                f,
                "edges ({},{}) and ({},{}) {}",
                e1.0,
                e1.1,
                e2.0,
                e2.1,
                if *overlap { "overlap" } else { "cross" }
            ),
            Violation::VertexOnEdge { v, e } => {
                write!(f, "vertex {v} lies inside edge ({},{})", e.0, e.1)
            }
        }
    }
}

/// Exact planarity check: every violating pair is reported, not just the
/// first. An empty report means the drawing is planar.
pub fn validate_planar(d: &PlanarDrawing) -> Vec<Violation> {
    let mut out = Vec::new();

    // Distinct positions.
    let mut seen: HashMap<&Point2, VertexId> = HashMap::new();
    for (&v, p) in d.positions() {
        if let Some(&u) = seen.get(p) {
            out.push(Violation::CoincidentVertices(u, v));
        } else {
            seen.insert(p, v);
        }
    }

    let edges: Vec<(VertexId, VertexId)> = d.graph().edges().collect();
    let segs: Vec<Option<Segment>> = edges
        .iter()
        .map(|&(u, v)| {
            let (a, b) = (d.pos(u).clone(), d.pos(v).clone());
            if a == b {
                None // degenerate under coincident vertices; already reported
            } else {
                Some(Segment::new(a, b))
            }
        })
        .collect();
    let verts: Vec<(VertexId, &Point2)> = d.positions().iter().map(|(&v, p)| (v, p)).collect();

    let check_pair = |i: usize, j: usize, out: &mut Vec<Violation>| {
        let (si, sj) = match (&segs[i], &segs[j]) {
            (Some(a), Some(b)) => (a, b),
            _ => return,
        };
        match segments_properly_interact(si, sj) {
            SegmentInteraction::Disjoint | SegmentInteraction::ShareEndpointOnly => {}
            SegmentInteraction::Cross => out.push(Violation::EdgePair {
                e1: edges[i],
                e2: edges[j],
                overlap: false,
            }),
            SegmentInteraction::Overlap => out.push(Violation::EdgePair {
                e1: edges[i],
                e2: edges[j],
                overlap: true,
            }),
            // The offending endpoint is also caught by the vertex scan; the
            // pair itself is reported there with the vertex named.
            SegmentInteraction::EndpointInInterior => {}
        }
    };
    let check_vertex = |vi: usize, ei: usize, out: &mut Vec<Violation>| {
        let (v, p) = verts[vi];
        let (a, b) = edges[ei];
        if v == a || v == b {
            return;
        }
        if let Some(seg) = &segs[ei] {
            if point_in_open_segment(p, seg) {
                out.push(Violation::VertexOnEdge { v, e: edges[ei] });
            }
        }
    };

    // Small drawings: brute force. Large ones: bucket segment bounding boxes
    // on an exact integer grid and only test co-located pairs.
    if edges.len() + verts.len() <= 600 {
        for i in 0..edges.len() {
            for j in (i + 1)..edges.len() {
                check_pair(i, j, &mut out);
            }
            for vi in 0..verts.len() {
                check_vertex(vi, i, &mut out);
            }
        }
    } else {
        let grid = Grid::build(d, &segs, &verts);
        for (i, j) in grid.candidate_edge_pairs() {
            check_pair(i, j, &mut out);
        }
        for (vi, ei) in grid.candidate_vertex_edge() {
            check_vertex(vi, ei, &mut out);
        }
    }

    out.sort();
    out.dedup();
    out
}

/// Uniform grid over exact coordinates. Purely a candidate filter: every
/// actually-interacting pair shares at least one cell, and all final
/// decisions are made by the exact predicates.
struct Grid {
    cells: HashMap<(i64, i64), Vec<u32>>,
    vcells: HashMap<(i64, i64), Vec<u32>>,
    seg_cells: Vec<Vec<(i64, i64)>>,
    min: Point2,
    cell: Scalar,
}

impl Grid {
    fn build(d: &PlanarDrawing, segs: &[Option<Segment>], verts: &[(VertexId, &Point2)]) -> Grid {
        let mut min_x = None::<Scalar>;
        let mut min_y = None::<Scalar>;
        let mut max_x = None::<Scalar>;
        let mut max_y = None::<Scalar>;
        for (_, p) in verts {
            min_x = Some(min_x.map_or(p.x.clone(), |m| m.min(p.x.clone())));
            min_y = Some(min_y.map_or(p.y.clone(), |m| m.min(p.y.clone())));
            max_x = Some(max_x.map_or(p.x.clone(), |m| m.max(p.x.clone())));
            max_y = Some(max_y.map_or(p.y.clone(), |m| m.max(p.y.clone())));
        }
        let min = Point2::new(min_x.unwrap_or_else(Scalar::zero), min_y.unwrap_or_else(Scalar::zero));
        let span_x = max_x.unwrap_or_else(Scalar::zero) - &min.x;
        let span_y = max_y.unwrap_or_else(Scalar::zero) - &min.y;
        let span = span_x.max(span_y).max(scalar(1));
        let side = ((verts.len() + segs.len()) as f64).sqrt().ceil() as i64;
        let side = side.clamp(4, 512);
        let cell = span / scalar(side);

        let mut grid = Grid {
            cells: HashMap::new(),
            vcells: HashMap::new(),
            seg_cells: vec![Vec::new(); segs.len()],
            min,
            cell,
        };
        let _ = d;
        for (i, seg) in segs.iter().enumerate() {
            let seg = match seg {
                Some(s) => s,
                None => continue,
            };
            let (x0, x1) = grid.range(&seg.a.x, &seg.b.x, true);
            let (y0, y1) = grid.range(&seg.a.y, &seg.b.y, false);
            for cx in x0..=x1 {
                for cy in y0..=y1 {
                    grid.cells.entry((cx, cy)).or_default().push(i as u32);
                    grid.seg_cells[i].push((cx, cy));
                }
            }
        }
        for (vi, (_, p)) in verts.iter().enumerate() {
            let cx = grid.index(&p.x, true);
            let cy = grid.index(&p.y, false);
            grid.vcells.entry((cx, cy)).or_default().push(vi as u32);
        }
        grid
    }

    fn index(&self, coord: &Scalar, x_axis: bool) -> i64 {
        let origin = if x_axis { &self.min.x } else { &self.min.y };
        let idx = floor_int(&((coord - origin) / &self.cell));
        idx.to_i64().unwrap_or(0)
    }

    fn range(&self, a: &Scalar, b: &Scalar, x_axis: bool) -> (i64, i64) {
        let ia = self.index(a, x_axis);
        let ib = self.index(b, x_axis);
        (ia.min(ib), ia.max(ib))
    }

    fn candidate_edge_pairs(&self) -> Vec<(usize, usize)> {
        let mut pairs = HashSet::new();
        for ids in self.cells.values() {
            for (k, &i) in ids.iter().enumerate() {
                for &j in &ids[k + 1..] {
                    let (lo, hi) = if i < j { (i, j) } else { (j, i) };
                    pairs.insert((lo as usize, hi as usize));
                }
            }
        }
        pairs.into_iter().collect()
    }

    fn candidate_vertex_edge(&self) -> Vec<(usize, usize)> {
        let mut pairs = HashSet::new();
        for (i, cells) in self.seg_cells.iter().enumerate() {
            for c in cells {
                if let Some(vs) = self.vcells.get(c) {
                    for &v in vs {
                        pairs.insert((v as usize, i));
                    }
                }
            }
        }
        pairs.into_iter().collect()
    }
}
