//! Connected augmentations, boundary fattenings, and the corner cost table.
//!
//! For each drawing, the components under consideration are first tied
//! together with non-crossing visibility edges. Walking the boundary of the
//! resulting face yields the corner path that prices every attachment corner:
//! the cost of travelling between two corners is the walk distance plus twice
//! the boundary sizes of the components passed on the way. These costs are
//! the per-drawing coordinates of the grid embedding.

use std::collections::BTreeSet;
use std::sync::Arc;

use num::{Signed, Zero};

use crate::drawing::PlanarDrawing;
use crate::embedding::{embed_unchecked, Dart, Embedding};
use crate::error::{Error, Result};
use crate::geom::{
    dist2, point_in_polygon_strict, point_on_polygon_boundary, point_on_segment,
    polygon_is_simple, segments_properly_interact, Point2, Segment, SegmentInteraction,
};
use crate::graph::VertexId;
use crate::scalar::{scalar, Scalar};

// ---------------------------------------------------------------------------
// Corners and participants
// ---------------------------------------------------------------------------

/// A corner of a boundary walk, identified by labels only so that it names
/// the same corner in every isomorphic drawing. `prev`/`next` are the walk
/// neighbors; `None` for the degenerate corner of an isolated vertex.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct CornerRef {
    pub vertex: VertexId,
    pub prev: Option<VertexId>,
    pub next: Option<VertexId>,
}

/// One participant of a connection run: a component (or the face boundary)
/// with its attachment corner and boundary size.
#[derive(Debug, Clone)]
pub struct Participant {
    /// Component id in the current graph.
    pub comp: usize,
    pub corner: CornerRef,
    /// Number of edges of the participant's boundary walk (`0` for isolated
    /// vertices; the face walk length for a face-boundary participant).
    pub boundary_len: usize,
}

/// The attachment corner of a component: the walk corner at its smallest
/// vertex, tie-broken by neighbor labels. Returns the corner and the walk
/// length.
pub fn attachment_corner(emb: &Embedding, d: &PlanarDrawing, comp: usize) -> (CornerRef, usize) {
    match emb.outer_walk_of_component(comp) {
        None => {
            let v = d.graph().components()[comp][0];
            (CornerRef { vertex: v, prev: None, next: None }, 0)
        }
        Some(wi) => {
            let walk = &emb.walks()[wi].darts;
            (corner_on_walk(walk), walk.len())
        }
    }
}

/// Smallest corner of an arbitrary walk.
pub fn corner_on_walk(walk: &[Dart]) -> CornerRef {
    let m = walk.len();
    (0..m)
        .map(|i| CornerRef {
            vertex: walk[i].0,
            prev: Some(walk[(i + m - 1) % m].0),
            next: Some(walk[i].1),
        })
        .min()
        .expect("non-empty walk")
}

// ---------------------------------------------------------------------------
// Visibility edges: the per-drawing connected augmentation
// ---------------------------------------------------------------------------

/// `G*`: the drawing plus the `r - 1` visibility edges that connect it, and
/// the boundary walk of its outer face.
#[derive(Debug, Clone)]
pub struct ConnectedAugmentation {
    pub drawing: PlanarDrawing,
    pub extra_edges: Vec<(VertexId, VertexId)>,
    /// Outer boundary walk of the connected result (face on the left).
    pub boundary: Vec<Dart>,
}

/// Connect all components of a drawing in which every component touches the
/// outer face. Components nested inside bounded faces are out of scope here
/// and rejected; the pipeline handles them face by face.
pub fn connect_components(d: &PlanarDrawing) -> Result<ConnectedAugmentation> {
    let emb = embed_unchecked(d);
    let r = d.graph().component_count();
    for comp in 0..r {
        if emb.face_of_component(comp) != emb.outer_face() {
            return Err(Error::BadParameter(format!(
                "component {comp} does not touch the outer face"
            )));
        }
    }
    let comps: Vec<usize> = (0..r).collect();
    let extra_edges = connect_groups(d, &comps)?;
    let gstar = augmented_drawing(d, &extra_edges)?;
    gstar.ensure_planar()?;
    let gemb = embed_unchecked(&gstar);
    let merged = gemb
        .outer_walk_of_component(gstar.graph().component_of(d.graph().components()[0][0]))
        .expect("connected graph has a boundary walk");
    Ok(ConnectedAugmentation {
        boundary: gemb.walks()[merged].darts.clone(),
        drawing: gstar,
        extra_edges,
    })
}

/// The drawing with extra straight-line edges added (graph extended, same
/// positions).
pub fn augmented_drawing(
    d: &PlanarDrawing,
    extra_edges: &[(VertexId, VertexId)],
) -> Result<PlanarDrawing> {
    let graph = Arc::new(d.graph().extended(&[], extra_edges)?);
    PlanarDrawing::new(graph, d.positions().clone())
}

/// Add non-crossing visibility edges until the given components form one
/// connected group. Deterministic: components are processed by the position
/// of their smallest-position vertex, each linked from its leftmost vertex
/// (falling back to its other vertices) to the nearest visible vertex of the
/// part already connected.
pub fn connect_groups(d: &PlanarDrawing, comps: &[usize]) -> Result<Vec<(VertexId, VertexId)>> {
    if comps.is_empty() {
        return Err(Error::BadParameter("nothing to connect".into()));
    }
    let graph = d.graph();
    let key = |v: VertexId| (d.pos(v).x.clone(), d.pos(v).y.clone(), v);
    let sorted_vertices = |comp: usize| -> Vec<VertexId> {
        let mut vs = graph.components()[comp].clone();
        vs.sort_by_key(|&v| key(v));
        vs
    };
    let mut order: Vec<usize> = comps.to_vec();
    order.sort_by_key(|&c| key(sorted_vertices(c)[0]));

    let mut connected: Vec<VertexId> = sorted_vertices(order[0]);
    let mut added: Vec<(VertexId, VertexId)> = Vec::new();
    let mut added_segs: Vec<Segment> = Vec::new();
    let mut pending: Vec<usize> = order[1..].to_vec();

    while !pending.is_empty() {
        let mut linked = None;
        'search: for (pi, &comp) in pending.iter().enumerate() {
            for &v in &sorted_vertices(comp) {
                let pv = d.pos(v);
                let mut candidates: Vec<VertexId> = connected.clone();
                candidates.sort_by_key(|&u| (dist2(pv, d.pos(u)), u));
                for u in candidates {
                    if visible(d, &added_segs, v, u) {
                        linked = Some((pi, comp, v, u));
                        break 'search;
                    }
                }
            }
        }
        let Some((pi, comp, v, u)) = linked else {
            return Err(Error::BadParameter(
                "no mutually visible pair between remaining components".into(),
            ));
        };
        added.push((v, u));
        added_segs.push(Segment::new(d.pos(v).clone(), d.pos(u).clone()));
        connected.extend(graph.components()[comp].iter().copied());
        connected.sort_unstable();
        pending.remove(pi);
    }
    Ok(added)
}

/// Exact mutual visibility: the open segment between the two vertices meets
/// no edge (existing or added) and contains no vertex.
fn visible(d: &PlanarDrawing, added: &[Segment], v: VertexId, u: VertexId) -> bool {
    let seg = Segment::new(d.pos(v).clone(), d.pos(u).clone());
    for (a, b) in d.graph().edges() {
        let e = d.segment(a, b);
        match segments_properly_interact(&seg, &e) {
            SegmentInteraction::Disjoint => {}
            SegmentInteraction::ShareEndpointOnly => {
                if !(a == v || a == u || b == v || b == u) {
                    return false;
                }
            }
            _ => return false,
        }
    }
    for e in added {
        match segments_properly_interact(&seg, e) {
            SegmentInteraction::Disjoint => {}
            SegmentInteraction::ShareEndpointOnly => {
                // Added edges share endpoints only at actual vertices.
                let shared = [&e.a, &e.b]
                    .iter()
                    .any(|p| **p == seg.a || **p == seg.b);
                if !shared {
                    return false;
                }
            }
            _ => return false,
        }
    }
    for (&w, p) in d.positions() {
        if w != v && w != u && point_on_segment(p, &seg) {
            return false;
        }
    }
    true
}

// ---------------------------------------------------------------------------
// Fattenings
// ---------------------------------------------------------------------------

/// The offset polyline of a boundary walk: one copy per corner, pushed into
/// the walked face along the corner's angle bisector. Corners of two-corner
/// walks additionally get two flanking points so the polyline surrounds a
/// bare edge instead of collapsing onto its supporting line; an isolated
/// vertex gets a four-point diamond.
#[derive(Debug, Clone)]
pub struct Fattening {
    /// Closed polyline.
    pub polygon: Vec<Point2>,
    /// Polyline index of each corner's primary copy, in walk order.
    pub copy_index: Vec<usize>,
}

impl Fattening {
    pub fn copy_of(&self, corner: usize) -> &Point2 {
        &self.polygon[self.copy_index[corner]]
    }

    pub fn len(&self) -> usize {
        self.polygon.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polygon.is_empty()
    }
}

/// Direction (not normalized) pointing from the corner into the walked face:
/// strictly inside the sector swept counterclockwise from the outgoing edge
/// to the incoming one.
fn face_side_direction(out_dir: &Point2, in_back_dir: &Point2) -> Point2 {
    let u1 = out_dir.scale(&(scalar(1) / out_dir.l1()));
    let u2 = in_back_dir.scale(&(scalar(1) / in_back_dir.l1()));
    let cross = u1.cross(&u2);
    let dot = u1.dot(&u2);
    if cross.is_zero() {
        if dot.is_positive() {
            // Full-angle corner at a degree-one vertex: straight back.
            return u1.scale(&scalar(-1));
        }
        // Straight corner: push to the left of the travel direction.
        return u1.rot90_ccw();
    }
    let s = u1.add(&u2);
    if cross.is_positive() {
        s
    } else {
        s.scale(&scalar(-1))
    }
}

/// Fatten a boundary walk by `eps`. The polyline follows the walk order.
pub fn fatten_walk(d: &PlanarDrawing, walk: &[Dart], eps: &Scalar) -> Fattening {
    let m = walk.len();
    assert!(m >= 2, "walks have at least two darts");
    let mut polygon = Vec::new();
    let mut copy_index = Vec::with_capacity(m);
    for i in 0..m {
        let v = d.pos(walk[i].0);
        let out_dir = d.pos(walk[i].1).sub(v);
        let prev = walk[(i + m - 1) % m].0;
        let in_back = d.pos(prev).sub(v);
        let b = face_side_direction(&out_dir, &in_back);
        let copy = v.add(&b.scale(eps));
        if m == 2 {
            // Bare edge: surround it instead of collapsing onto its line.
            let side = out_dir
                .scale(&(scalar(1) / out_dir.l1()))
                .rot90_ccw()
                .scale(eps);
            polygon.push(v.add(&side));
            copy_index.push(polygon.len());
            polygon.push(copy);
            polygon.push(v.sub(&side));
        } else {
            copy_index.push(polygon.len());
            polygon.push(copy);
        }
    }
    Fattening { polygon, copy_index }
}

/// Diamond fattening of an isolated vertex.
pub fn fatten_point(p: &Point2, eps: &Scalar) -> Fattening {
    let e = eps.clone();
    let polygon = vec![
        Point2::new(&p.x + &e, p.y.clone()),
        Point2::new(p.x.clone(), &p.y + &e),
        Point2::new(&p.x - &e, p.y.clone()),
        Point2::new(p.x.clone(), &p.y - &e),
    ];
    Fattening { polygon, copy_index: vec![0] }
}

/// A fattening is usable when it is a simple polygon that stays strictly
/// clear of the given obstacle segments and points.
pub fn fattening_is_clear(fat: &Fattening, obstacles: &[Segment], points: &[Point2]) -> bool {
    if !polygon_is_simple(&fat.polygon) {
        return false;
    }
    let n = fat.polygon.len();
    for i in 0..n {
        let side = Segment::new(fat.polygon[i].clone(), fat.polygon[(i + 1) % n].clone());
        for ob in obstacles {
            if segments_properly_interact(&side, ob) != SegmentInteraction::Disjoint {
                return false;
            }
        }
    }
    for p in points {
        if point_on_polygon_boundary(p, &fat.polygon) {
            return false;
        }
    }
    true
}

/// Simplicity plus containment of the owner, for fattenings that surround
/// their owner (component boundaries, and the outer walk of `G*`).
pub fn is_simple_fattening(fat: &Fattening, d: &PlanarDrawing, owner_vertices: &[VertexId]) -> bool {
    let segs: Vec<Segment> = d
        .graph()
        .edges()
        .filter(|&(a, b)| owner_vertices.contains(&a) || owner_vertices.contains(&b))
        .map(|(a, b)| d.segment(a, b))
        .collect();
    let pts: Vec<Point2> = owner_vertices.iter().map(|&v| d.pos(v).clone()).collect();
    if !fattening_is_clear(fat, &segs, &pts) {
        return false;
    }
    pts.iter().all(|p| point_in_polygon_strict(p, &fat.polygon))
}

/// Smallest non-zero difference between x coordinates or between y
/// coordinates across all the drawings.
pub fn min_coordinate_gap(drawings: &[&PlanarDrawing]) -> Option<Scalar> {
    let mut best: Option<Scalar> = None;
    for d in drawings {
        for pick in [true, false] {
            let mut coords: Vec<Scalar> = d
                .positions()
                .values()
                .map(|p| if pick { p.x.clone() } else { p.y.clone() })
                .collect();
            coords.sort();
            for w in coords.windows(2) {
                let diff = &w[1] - &w[0];
                if diff.is_positive() {
                    best = Some(match best {
                        None => diff,
                        Some(b) => b.min(diff),
                    });
                }
            }
        }
    }
    best
}

/// A base fattening scale that keeps every `G*` boundary fattening simple:
/// `m / (8n)` for `m` the minimum coordinate gap, halved (at most 64 times)
/// until the fattenings of all given augmentations verify as simple.
pub fn safe_epsilon(gstars: &[ConnectedAugmentation]) -> Result<Scalar> {
    let drawings: Vec<&PlanarDrawing> = gstars.iter().map(|g| &g.drawing).collect();
    let n = drawings
        .first()
        .map(|d| d.graph().vertex_count())
        .unwrap_or(1)
        .max(1);
    let m = min_coordinate_gap(&drawings)
        .ok_or_else(|| Error::BadParameter("drawing has no extent".into()))?;
    let mut eps = m / scalar(8 * n as i64);
    for _ in 0..64 {
        let ok = gstars.iter().all(|g| {
            let fat = fatten_walk(&g.drawing, &g.boundary, &eps);
            let segs: Vec<Segment> = g
                .drawing
                .graph()
                .edges()
                .map(|(a, b)| g.drawing.segment(a, b))
                .collect();
            let pts: Vec<Point2> = g.drawing.positions().values().cloned().collect();
            if !fattening_is_clear(&fat, &segs, &pts) {
                return false;
            }
            // Outer boundaries (non-positive walk area) must also surround
            // their owner; face walks only need to stay clear.
            let poly: Vec<Point2> =
                g.boundary.iter().map(|&(u, _)| g.drawing.pos(u).clone()).collect();
            if !crate::geom::signed_area2(&poly).is_positive() {
                let owner: BTreeSet<VertexId> =
                    g.boundary.iter().flat_map(|&(u, v)| [u, v]).collect();
                return owner
                    .iter()
                    .all(|&v| point_in_polygon_strict(g.drawing.pos(v), &fat.polygon));
            }
            true
        });
        if ok {
            return Ok(eps);
        }
        eps = eps / scalar(2);
    }
    Err(Error::ScheduleExhausted {
        rounds: 64,
        last: "could not make boundary fattenings simple".into(),
    })
}

// ---------------------------------------------------------------------------
// Cost table
// ---------------------------------------------------------------------------

/// Per-drawing corner costs. The boundary walk of `G*` is split at the base
/// corner (position 0); the cost from the base to participant `j` is the
/// walk distance plus twice the boundary sizes of all participants passed,
/// minus the two endpoint boundaries.
#[derive(Debug, Clone)]
pub struct CostTable {
    /// Corner position of each participant on the split walk.
    pub positions: Vec<usize>,
    /// Boundary size of each participant.
    pub boundary_len: Vec<usize>,
    /// Length of the split walk (number of edges).
    pub walk_len: usize,
    /// Cost from the base corner to each participant's corner.
    pub rank: Vec<i64>,
}

impl CostTable {
    /// Cost between two participants. Equals `|rank[i] - rank[j]|` by the
    /// telescoping identity, which `verify_telescoping` checks directly.
    pub fn cost_between(&self, i: usize, j: usize) -> i64 {
        (self.rank[i] - self.rank[j]).abs()
    }

    /// Recompute the cost between two participants by literally walking the
    /// split boundary and collecting boundary sizes, then compare with the
    /// rank arithmetic. Exact, zero tolerance.
    pub fn verify_telescoping(&self) -> std::result::Result<(), String> {
        let m = self.positions.len();
        for i in 0..m {
            for j in 0..m {
                let (lo, hi) = if self.positions[i] <= self.positions[j] { (i, j) } else { (j, i) };
                let mut direct: i64 =
                    (self.positions[hi] - self.positions[lo]) as i64;
                for t in 0..m {
                    if self.positions[t] >= self.positions[lo] && self.positions[t] <= self.positions[hi] {
                        direct += 2 * self.boundary_len[t] as i64;
                    }
                }
                direct -= self.boundary_len[i] as i64 + self.boundary_len[j] as i64;
                if direct != self.cost_between(i, j) {
                    return Err(format!(
                        "telescoping identity fails for participants {i},{j}: walk {direct} vs ranks {}",
                        self.cost_between(i, j)
                    ));
                }
            }
        }
        Ok(())
    }
}

/// Resolve a participant's corner to its position on a split walk: the
/// position whose outgoing dart matches the corner (corners keep their
/// outgoing edge when scaffold edges subdivide their wedge), or the first
/// position at the vertex for isolated-vertex corners.
pub fn corner_position(walk: &[Dart], corner: &CornerRef) -> Result<usize> {
    let found = match corner.next {
        Some(next) => walk.iter().position(|&(u, w)| u == corner.vertex && w == next),
        None => walk.iter().position(|&(u, _)| u == corner.vertex),
    };
    found.ok_or_else(|| {
        Error::BadParameter(format!(
            "corner at vertex {} not found on the boundary walk",
            corner.vertex
        ))
    })
}

/// Build the cost table for one drawing: `walk` must already be split at the
/// base participant's corner (its corner at position 0).
pub fn cost_table(walk: &[Dart], participants: &[Participant]) -> Result<CostTable> {
    let mut positions = Vec::with_capacity(participants.len());
    for p in participants {
        positions.push(corner_position(walk, &p.corner)?);
    }
    let boundary_len: Vec<usize> = participants.iter().map(|p| p.boundary_len).collect();
    let walk_len = walk.len();
    let mut rank = Vec::with_capacity(participants.len());
    for j in 0..participants.len() {
        let mut sigma: i64 = positions[j] as i64;
        for t in 0..participants.len() {
            if positions[t] <= positions[j] {
                sigma += 2 * boundary_len[t] as i64;
            }
        }
        sigma -= boundary_len[0] as i64 + boundary_len[j] as i64;
        rank.push(sigma);
    }
    debug_assert_eq!(rank[0], 0, "base corner costs nothing to reach");
    Ok(CostTable { positions, boundary_len, walk_len, rank })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::drawing::validate_planar;
    use crate::graph::LabelledGraph;
    use crate::scalar::ratio;
    use std::collections::BTreeMap;

    fn drawing(
        vertices: Vec<VertexId>,
        edges: Vec<(VertexId, VertexId)>,
        pos: Vec<(VertexId, i64, i64)>,
    ) -> PlanarDrawing {
        let g = Arc::new(LabelledGraph::new(vertices, edges).unwrap());
        let pos: BTreeMap<VertexId, Point2> = pos
            .into_iter()
            .map(|(v, x, y)| (v, Point2::from_ints(x, y)))
            .collect();
        PlanarDrawing::new(g, pos).unwrap()
    }

    #[test]
    fn connect_single_component_adds_nothing() {
        let d = drawing(vec![1, 2], vec![(1, 2)], vec![(1, 0, 0), (2, 1, 0)]);
        let ca = connect_components(&d).unwrap();
        assert!(ca.extra_edges.is_empty());
        assert_eq!(ca.boundary.len(), 2);
    }

    #[test]
    fn connect_two_segments() {
        let d = drawing(
            vec![1, 2, 3, 4],
            vec![(1, 2), (3, 4)],
            vec![(1, 0, 0), (2, 1, 0), (3, 5, 0), (4, 6, 0)],
        );
        let ca = connect_components(&d).unwrap();
        assert_eq!(ca.extra_edges.len(), 1);
        assert!(validate_planar(&ca.drawing).is_empty());
        assert!(ca.drawing.graph().is_connected());
    }

    #[test]
    fn connect_five_random_components() {
        // Five small components scattered with deliberate blockers.
        let d = drawing(
            vec![1, 2, 3, 4, 5, 6, 7, 8, 9],
            vec![(1, 2), (3, 4), (5, 6), (7, 8)],
            vec![
                (1, 0, 0),
                (2, 2, 3),
                (3, 10, 0),
                (4, 12, -2),
                (5, 5, 8),
                (6, 7, 9),
                (7, 20, 5),
                (8, 22, 5),
                (9, 15, 15),
            ],
        );
        let ca = connect_components(&d).unwrap();
        assert_eq!(ca.extra_edges.len(), 4);
        assert!(validate_planar(&ca.drawing).is_empty());
        assert!(ca.drawing.graph().is_connected());
    }

    #[test]
    fn connect_is_input_order_independent() {
        let mk = |perm: &[VertexId]| {
            let coords = [(0, 0), (2, 3), (10, 0), (12, -2), (5, 8), (7, 9)];
            let vertices: Vec<VertexId> = perm.to_vec();
            let mut pos = Vec::new();
            for (i, &v) in perm.iter().enumerate() {
                pos.push((v, coords[i].0, coords[i].1));
            }
            // Edges pair consecutive slots.
            let edges = vec![(perm[0], perm[1]), (perm[2], perm[3]), (perm[4], perm[5])];
            drawing(vertices, edges, pos)
        };
        let a = mk(&[1, 2, 3, 4, 5, 6]);
        let b = mk(&[1, 2, 3, 4, 5, 6]);
        let ea = connect_components(&a).unwrap().extra_edges;
        let eb = connect_components(&b).unwrap().extra_edges;
        assert_eq!(ea, eb);
    }

    #[test]
    fn nested_component_rejected() {
        let d = drawing(
            vec![1, 2, 3, 4],
            vec![(1, 2), (2, 3), (1, 3)],
            vec![(1, 0, 0), (2, 8, 0), (3, 0, 8), (4, 1, 1)],
        );
        assert!(connect_components(&d).is_err());
    }

    #[test]
    fn fatten_square() {
        let d = drawing(
            vec![1, 2, 3, 4],
            vec![(1, 2), (2, 3), (3, 4), (1, 4)],
            vec![(1, 0, 0), (2, 4, 0), (3, 4, 4), (4, 0, 4)],
        );
        let emb = embed_unchecked(&d);
        let wi = emb.outer_walk_of_component(0).unwrap();
        let walk = &emb.walks()[wi].darts;
        assert_eq!(walk.len(), 4);
        let fat = fatten_walk(&d, walk, &ratio(1, 4));
        assert_eq!(fat.polygon.len(), 4);
        assert!(is_simple_fattening(&fat, &d, &[1, 2, 3, 4]));
        // Every square vertex is strictly inside the fattening.
        for v in [1, 2, 3, 4] {
            assert!(point_in_polygon_strict(d.pos(v), &fat.polygon));
        }
    }

    #[test]
    fn fatten_bare_edge_is_a_hexagon() {
        let d = drawing(vec![1, 2], vec![(1, 2)], vec![(1, 0, 0), (2, 4, 0)]);
        let emb = embed_unchecked(&d);
        let walk = &emb.walks()[emb.outer_walk_of_component(0).unwrap()].darts;
        let fat = fatten_walk(&d, walk, &ratio(1, 2));
        assert_eq!(fat.polygon.len(), 6);
        assert_eq!(fat.copy_index.len(), 2);
        assert!(is_simple_fattening(&fat, &d, &[1, 2]));
        // Primary copies sit behind the endpoints on the edge's line.
        assert_eq!(*fat.copy_of(0), Point2::new(ratio(-1, 2), scalar(0)));
        assert_eq!(*fat.copy_of(1), Point2::new(ratio(9, 2), scalar(0)));
    }

    #[test]
    fn fatten_point_diamond() {
        let fat = fatten_point(&Point2::from_ints(3, 3), &ratio(1, 2));
        assert_eq!(fat.polygon.len(), 4);
        assert!(polygon_is_simple(&fat.polygon));
        assert!(point_in_polygon_strict(&Point2::from_ints(3, 3), &fat.polygon));
    }

    #[test]
    fn fatten_reflex_too_large_not_simple() {
        // A U-shaped path; a huge offset makes the two inner bend copies
        // swap sides, so the polyline self-intersects.
        let d = drawing(
            vec![1, 2, 3, 4],
            vec![(1, 2), (2, 3), (3, 4)],
            vec![(1, 0, 10), (2, 0, 0), (3, 10, 0), (4, 10, 10)],
        );
        let emb = embed_unchecked(&d);
        let walk = &emb.walks()[emb.outer_walk_of_component(0).unwrap()].darts;
        let small = fatten_walk(&d, walk, &ratio(1, 4));
        assert!(is_simple_fattening(&small, &d, &[1, 2, 3, 4]));
        let huge = fatten_walk(&d, walk, &scalar(40));
        assert!(!polygon_is_simple(&huge.polygon));
        assert!(!is_simple_fattening(&huge, &d, &[1, 2, 3, 4]));
    }

    #[test]
    fn safe_epsilon_unit_grid() {
        // Four vertices on the unit grid: gap m = 1, n = 4, candidate 1/32.
        let d = drawing(
            vec![1, 2, 3, 4],
            vec![(1, 2), (3, 4)],
            vec![(1, 0, 0), (2, 1, 0), (3, 3, 0), (4, 4, 1)],
        );
        let ca = connect_components(&d).unwrap();
        let eps = safe_epsilon(std::slice::from_ref(&ca)).unwrap();
        assert_eq!(eps, ratio(1, 32));
        // Scale equivariance: all coordinates times ten scale epsilon by ten.
        let d10 = drawing(
            vec![1, 2, 3, 4],
            vec![(1, 2), (3, 4)],
            vec![(1, 0, 0), (2, 10, 0), (3, 30, 0), (4, 40, 10)],
        );
        let ca10 = connect_components(&d10).unwrap();
        let eps10 = safe_epsilon(std::slice::from_ref(&ca10)).unwrap();
        assert_eq!(eps10, ratio(10, 32));
    }

    #[test]
    fn safe_epsilon_halving_engages() {
        // A long thin wedge forces the initial candidate to be halved: the
        // coordinate gap is large but the geometry is slim.
        let d = drawing(
            vec![1, 2, 3],
            vec![(1, 2), (2, 3)],
            vec![(1, 0, 0), (2, 100, 1), (3, 200, 0)],
        );
        let ca = connect_components(&d).unwrap();
        let eps = safe_epsilon(std::slice::from_ref(&ca)).unwrap();
        let fat = fatten_walk(&ca.drawing, &ca.boundary, &eps);
        assert!(is_simple_fattening(&fat, &ca.drawing, &[1, 2, 3]));
    }

    #[test]
    fn cost_table_single_component() {
        let d = drawing(vec![1, 2], vec![(1, 2)], vec![(1, 0, 0), (2, 1, 0)]);
        let ca = connect_components(&d).unwrap();
        let emb = embed_unchecked(&ca.drawing);
        let (corner, blen) = attachment_corner(&emb, &ca.drawing, 0);
        let mut walk = ca.boundary.clone();
        let pos = corner_position(&walk, &corner).unwrap();
        walk.rotate_left(pos);
        let table = cost_table(
            &walk,
            &[Participant { comp: 0, corner, boundary_len: blen }],
        )
        .unwrap();
        assert_eq!(table.rank, vec![0]);
        table.verify_telescoping().unwrap();
    }

    #[test]
    fn cost_table_two_segments_cross_checked() {
        let d = drawing(
            vec![1, 2, 3, 4],
            vec![(1, 2), (3, 4)],
            vec![(1, 0, 0), (2, 1, 0), (3, 5, 0), (4, 6, 0)],
        );
        let ca = connect_components(&d).unwrap();
        // Corners and boundary sizes come from the original components.
        let base_emb = embed_unchecked(&d);
        let (c0, b0g) = attachment_corner(&base_emb, &d, 0);
        let (c1, b1g) = attachment_corner(&base_emb, &d, 1);
        assert_eq!((b0g, b1g), (2, 2));
        let mut walk = ca.boundary.clone();
        let pos = corner_position(&walk, &c0).unwrap();
        walk.rotate_left(pos);
        let table = cost_table(
            &walk,
            &[
                Participant { comp: 0, corner: c0, boundary_len: b0g },
                Participant { comp: 1, corner: c1, boundary_len: b1g },
            ],
        )
        .unwrap();
        table.verify_telescoping().unwrap();
        // Lemma bound: every rank below 6n.
        let n = d.graph().vertex_count() as i64;
        assert!(table.rank.iter().all(|&s| s >= 0 && s < 6 * n));
        assert_eq!(table.cost_between(0, 1), table.rank[1]);
    }

    #[test]
    fn corner_selection_is_label_stable() {
        let mk = |dx: i64, dy: i64| {
            drawing(
                vec![1, 2, 3, 4, 5],
                vec![(1, 2), (2, 3), (1, 3)],
                vec![
                    (1, dx, dy),
                    (2, dx + 4, dy),
                    (3, dx, dy + 4),
                    (4, dx + 10, dy),
                    (5, dx + 11, dy + 2),
                ],
            )
        };
        let d1 = mk(0, 0);
        let d2 = mk(100, -50);
        let e1 = embed_unchecked(&d1);
        let e2 = embed_unchecked(&d2);
        for comp in 0..2 {
            assert_eq!(
                attachment_corner(&e1, &d1, comp),
                attachment_corner(&e2, &d2, comp)
            );
        }
    }
}
