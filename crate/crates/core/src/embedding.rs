//! Combinatorial embedding derived from exact coordinates: rotation systems,
//! face walks, per-face component containment, and outer boundaries.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num::Signed;

use crate::drawing::PlanarDrawing;
use crate::error::{Error, Result};
use crate::geom::{compare_angle, point_in_polygon_strict, signed_area2, Point2};
use crate::graph::VertexId;
use crate::scalar::Scalar;

pub type Dart = (VertexId, VertexId);

/// One face walk: a cyclic dart sequence with the face on the left of every
/// dart. Stored starting from its lexicographically smallest dart, so walks
/// of isomorphic drawings are identical label sequences.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Walk {
    pub darts: Vec<Dart>,
    pub component: usize,
    /// Twice the signed area of the origin polygon; positive walks bound a
    /// face, the non-positive walk of a component is its outer boundary.
    pub area2: Scalar,
}

impl Walk {
    pub fn origins(&self) -> Vec<VertexId> {
        self.darts.iter().map(|&(u, _)| u).collect()
    }

    pub fn polygon(&self, d: &PlanarDrawing) -> Vec<Point2> {
        self.darts.iter().map(|&(u, _)| d.pos(u).clone()).collect()
    }

    pub fn len(&self) -> usize {
        self.darts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }
}

/// A geometric face. The unbounded face has no bounding walk.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub boundary_walk: Option<usize>,
    /// Components lying directly inside this face (nesting children).
    pub contained: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct Embedding {
    rotations: BTreeMap<VertexId, Vec<VertexId>>,
    walks: Vec<Walk>,
    dart_walk: HashMap<Dart, usize>,
    outer_walk_of_component: Vec<Option<usize>>,
    faces: Vec<Face>,
    face_of_walk: Vec<usize>,
    face_of_component: Vec<usize>,
}

impl Embedding {
    /// Counterclockwise neighbor order around `v`.
    pub fn rotation(&self, v: VertexId) -> &[VertexId] {
        self.rotations.get(&v).map(|r| r.as_slice()).unwrap_or(&[])
    }

    pub fn rotations(&self) -> &BTreeMap<VertexId, Vec<VertexId>> {
        &self.rotations
    }

    pub fn walks(&self) -> &[Walk] {
        &self.walks
    }

    pub fn walk_of_dart(&self, dart: Dart) -> Option<usize> {
        self.dart_walk.get(&dart).copied()
    }

    /// Index of the outer boundary walk of a component; `None` for isolated
    /// vertices, which have no darts.
    pub fn outer_walk_of_component(&self, comp: usize) -> Option<usize> {
        self.outer_walk_of_component[comp]
    }

    /// Faces; index 0 is always the unbounded face.
    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn outer_face(&self) -> usize {
        0
    }

    pub fn face_of_walk(&self, walk: usize) -> usize {
        self.face_of_walk[walk]
    }

    /// The face directly containing a component.
    pub fn face_of_component(&self, comp: usize) -> usize {
        self.face_of_component[comp]
    }

    /// Euler check `V - E + F = 1 + r`; holds for every valid drawing.
    pub fn euler_consistent(&self, v: usize, e: usize, r: usize) -> bool {
        v + self.faces.len() == e + 1 + r
    }
}

/// Derive rotation system and face structure. Validates the drawing first.
pub fn derive_embedding(d: &PlanarDrawing) -> Result<Embedding> {
    d.ensure_planar()?;
    Ok(embed_unchecked(d))
}

/// Embedding computation for drawings already known to be planar.
pub fn embed_unchecked(d: &PlanarDrawing) -> Embedding {
    let graph = d.graph();

    let mut rotations: BTreeMap<VertexId, Vec<VertexId>> = BTreeMap::new();
    for v in graph.vertices() {
        let mut nbrs: Vec<VertexId> = graph.neighbors(v).to_vec();
        let origin = d.pos(v);
        nbrs.sort_by(|&a, &b| {
            compare_angle(&d.pos(a).sub(origin), &d.pos(b).sub(origin))
                .then_with(|| a.cmp(&b))
        });
        rotations.insert(v, nbrs);
    }

    // Trace face walks: the successor of dart (u,v) is (v,w) with w the
    // counterclockwise predecessor of u around v, keeping the face on the
    // left of every dart.
    let mut darts: Vec<Dart> = Vec::new();
    for (u, v) in graph.edges() {
        darts.push((u, v));
        darts.push((v, u));
    }
    darts.sort_unstable();
    let mut dart_walk: HashMap<Dart, usize> = HashMap::new();
    let mut walks: Vec<Walk> = Vec::new();
    for &start in &darts {
        if dart_walk.contains_key(&start) {
            continue;
        }
        let id = walks.len();
        let mut cycle = Vec::new();
        let mut cur = start;
        loop {
            dart_walk.insert(cur, id);
            cycle.push(cur);
            let (_, v) = cur;
            let rot = &rotations[&v];
            let idx = rot.iter().position(|&w| w == cur.0).expect("dart endpoint in rotation");
            let w = rot[(idx + rot.len() - 1) % rot.len()];
            cur = (v, w);
            if cur == start {
                break;
            }
        }
        // Canonical start: smallest dart.
        let min_pos = cycle
            .iter()
            .enumerate()
            .min_by_key(|&(_, d)| d)
            .map(|(i, _)| i)
            .unwrap();
        cycle.rotate_left(min_pos);
        let polygon: Vec<Point2> = cycle.iter().map(|&(u, _)| d.pos(u).clone()).collect();
        let area2 = signed_area2(&polygon);
        walks.push(Walk {
            component: graph.component_of(start.0),
            darts: cycle,
            area2,
        });
    }

    // Outer walk per component: the unique non-positive-area walk.
    let r = graph.component_count();
    let mut outer_walk_of_component: Vec<Option<usize>> = vec![None; r];
    for (i, w) in walks.iter().enumerate() {
        if !w.area2.is_positive() {
            debug_assert!(
                outer_walk_of_component[w.component].is_none(),
                "two non-positive walks in one component"
            );
            outer_walk_of_component[w.component] = Some(i);
        }
    }

    // Faces: the unbounded face plus one face per positive walk.
    let mut faces = vec![Face { boundary_walk: None, contained: Vec::new() }];
    let mut face_of_walk = vec![0usize; walks.len()];
    for (i, w) in walks.iter().enumerate() {
        if w.area2.is_positive() {
            face_of_walk[i] = faces.len();
            faces.push(Face { boundary_walk: Some(i), contained: Vec::new() });
        }
    }

    // Containment: the face directly holding each component is the innermost
    // positive walk strictly containing one of its vertices.
    let positive: Vec<usize> = walks
        .iter()
        .enumerate()
        .filter(|(_, w)| w.area2.is_positive())
        .map(|(i, _)| i)
        .collect();
    let polygons: HashMap<usize, Vec<Point2>> = positive
        .iter()
        .map(|&i| (i, walks[i].polygon(d)))
        .collect();
    let mut face_of_component = vec![0usize; r];
    for comp in 0..r {
        let rep = graph.components()[comp][0];
        let p = d.pos(rep);
        let mut best: Option<usize> = None;
        for &wi in &positive {
            if point_in_polygon_strict(p, &polygons[&wi]) {
                debug_assert_ne!(walks[wi].component, comp, "component inside its own face walk");
                best = match best {
                    None => Some(wi),
                    Some(b) if walks[wi].area2 < walks[b].area2 => Some(wi),
                    keep => keep,
                };
            }
        }
        let face = best.map(|wi| face_of_walk[wi]).unwrap_or(0);
        face_of_component[comp] = face;
    }
    // Attach outer walks of components to their containing face (the face a
    // component's outer walk borders is the face holding the component), and
    // record containment lists.
    let mut faces = faces;
    for comp in 0..r {
        faces[face_of_component[comp]].contained.push(comp);
    }
    for (i, w) in walks.iter().enumerate() {
        if !w.area2.is_positive() {
            face_of_walk[i] = face_of_component[w.component];
        }
    }

    let emb = Embedding {
        rotations,
        walks,
        dart_walk,
        outer_walk_of_component,
        faces,
        face_of_walk,
        face_of_component,
    };
    debug_assert!(emb.euler_consistent(graph.vertex_count(), graph.edge_count(), r));
    emb
}

/// One occurrence of a vertex on a boundary walk. Cut vertices appear once
/// per incidence with the walked face, each time with its own neighbors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Corner {
    pub vertex: VertexId,
    pub prev: Option<VertexId>,
    pub next: Option<VertexId>,
}

/// Counterclockwise Eulerian tour along the boundary of the outer face of
/// one connected component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryWalk {
    pub corners: Vec<Corner>,
    /// Number of edges traversed by the tour (`2E` for trees).
    pub edge_count: usize,
}

/// Boundary of the outer face of the component spanned by `component`, as a
/// counterclockwise tour. Errors if the vertex set is not exactly one
/// connected component of the drawing's graph.
pub fn outer_boundary(component: &BTreeSet<VertexId>, d: &PlanarDrawing) -> Result<BoundaryWalk> {
    let graph = d.graph();
    let Some(&rep) = component.iter().next() else {
        return Err(Error::Disconnected);
    };
    if !graph.contains_vertex(rep) {
        return Err(Error::BadInstance(format!("unknown vertex {rep}")));
    }
    let comp = graph.component_of(rep);
    let members: BTreeSet<VertexId> = graph.components()[comp].iter().copied().collect();
    if members != *component {
        return Err(Error::Disconnected);
    }
    let emb = derive_embedding(d)?;
    Ok(boundary_from_embedding(d, &emb, comp))
}

/// Same tour computed from an existing embedding.
pub fn boundary_from_embedding(d: &PlanarDrawing, emb: &Embedding, comp: usize) -> BoundaryWalk {
    match emb.outer_walk_of_component(comp) {
        None => {
            // Isolated vertex: a single corner with no incident edges.
            let v = d.graph().components()[comp][0];
            BoundaryWalk {
                corners: vec![Corner { vertex: v, prev: None, next: None }],
                edge_count: 0,
            }
        }
        Some(wi) => {
            // The stored walk keeps the outer face on the left, which goes
            // clockwise around the component; the tour is its reverse.
            let origins = emb.walks[wi].origins();
            let m = origins.len();
            let rev: Vec<VertexId> = origins.iter().rev().copied().collect();
            let corners = (0..m)
                .map(|i| Corner {
                    vertex: rev[i],
                    prev: Some(rev[(i + m - 1) % m]),
                    next: Some(rev[(i + 1) % m]),
                })
                .collect();
            BoundaryWalk { corners, edge_count: m }
        }
    }
}
