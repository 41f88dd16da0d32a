//! The abstract labelled graph and its component structure.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};

pub type VertexId = u32;

/// A labelled graph: ordered vertex ids, undirected edges, and the derived
/// partition into connected components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelledGraph {
    vertices: BTreeSet<VertexId>,
    edges: BTreeSet<(VertexId, VertexId)>,
    adjacency: BTreeMap<VertexId, Vec<VertexId>>,
    components: Vec<Vec<VertexId>>,
    component_of: BTreeMap<VertexId, usize>,
}

impl LabelledGraph {
    /// Build from vertex ids and undirected edges. Rejects self-loops,
    /// parallel edges, and edges over unknown vertices.
    pub fn new(vertices: Vec<VertexId>, edges: Vec<(VertexId, VertexId)>) -> Result<Self> {
        let vertex_set: BTreeSet<VertexId> = vertices.into_iter().collect();
        let mut edge_set = BTreeSet::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::BadInstance(format!("self-loop at vertex {u}")));
            }
            if !vertex_set.contains(&u) || !vertex_set.contains(&v) {
                return Err(Error::BadInstance(format!(
                    "edge ({u},{v}) references an unknown vertex"
                )));
            }
            let e = if u < v { (u, v) } else { (v, u) };
            if !edge_set.insert(e) {
                return Err(Error::BadInstance(format!("parallel edge ({u},{v})")));
            }
        }
        let mut adjacency: BTreeMap<VertexId, Vec<VertexId>> =
            vertex_set.iter().map(|&v| (v, Vec::new())).collect();
        for &(u, v) in &edge_set {
            adjacency.get_mut(&u).unwrap().push(v);
            adjacency.get_mut(&v).unwrap().push(u);
        }
        let (components, component_of) = connected_components(&vertex_set, &adjacency);
        Ok(LabelledGraph {
            vertices: vertex_set,
            edges: edge_set,
            adjacency,
            components,
            component_of,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.vertices.iter().copied()
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.vertices.contains(&v)
    }

    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        let e = if u < v { (u, v) } else { (v, u) };
        self.edges.contains(&e)
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        self.adjacency.get(&v).map(|n| n.as_slice()).unwrap_or(&[])
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.neighbors(v).len()
    }

    /// Connected components, each a sorted vertex list; components are
    /// ordered by their smallest vertex id.
    pub fn components(&self) -> &[Vec<VertexId>] {
        &self.components
    }

    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    pub fn component_of(&self, v: VertexId) -> usize {
        self.component_of[&v]
    }

    pub fn is_connected(&self) -> bool {
        self.components.len() <= 1
    }

    /// A copy with extra vertices and edges; ids of `extra_vertices` must be
    /// fresh.
    pub fn extended(
        &self,
        extra_vertices: &[VertexId],
        extra_edges: &[(VertexId, VertexId)],
    ) -> Result<Self> {
        let mut vertices: Vec<VertexId> = self.vertices.iter().copied().collect();
        for &v in extra_vertices {
            if self.vertices.contains(&v) {
                return Err(Error::BadInstance(format!("vertex id {v} is not fresh")));
            }
            vertices.push(v);
        }
        let mut edges: Vec<(VertexId, VertexId)> = self.edges.iter().copied().collect();
        edges.extend_from_slice(extra_edges);
        LabelledGraph::new(vertices, edges)
    }
}

fn connected_components(
    vertices: &BTreeSet<VertexId>,
    adjacency: &BTreeMap<VertexId, Vec<VertexId>>,
) -> (Vec<Vec<VertexId>>, BTreeMap<VertexId, usize>) {
    let mut component_of = BTreeMap::new();
    let mut components = Vec::new();
    for &start in vertices {
        if component_of.contains_key(&start) {
            continue;
        }
        let id = components.len();
        let mut stack = vec![start];
        let mut members = Vec::new();
        component_of.insert(start, id);
        while let Some(v) = stack.pop() {
            members.push(v);
            for &w in &adjacency[&v] {
                if !component_of.contains_key(&w) {
                    component_of.insert(w, id);
                    stack.push(w);
                }
            }
        }
        members.sort_unstable();
        components.push(members);
    }
    (components, component_of)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn components_partition() {
        let g = LabelledGraph::new(vec![1, 2, 3, 4, 5], vec![(1, 2), (2, 3), (4, 5)]).unwrap();
        assert_eq!(g.components(), &[vec![1, 2, 3], vec![4, 5]]);
        assert_eq!(g.component_of(3), 0);
        assert_eq!(g.component_of(5), 1);
        assert!(!g.is_connected());
    }

    #[test]
    fn rejects_loops_and_parallels() {
        assert!(LabelledGraph::new(vec![1], vec![(1, 1)]).is_err());
        assert!(LabelledGraph::new(vec![1, 2], vec![(1, 2), (2, 1)]).is_err());
        assert!(LabelledGraph::new(vec![1, 2], vec![(1, 3)]).is_err());
    }
}
