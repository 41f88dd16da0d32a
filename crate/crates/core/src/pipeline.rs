//! End-to-end compatible augmentation.
//!
//! One run connects all components that share a working region (the outer
//! face first, then each bounded face holding components): per drawing it
//! builds the visibility scaffold and cost table, embeds the participants as
//! one grid point per component with their per-drawing costs as coordinates,
//! orders them along a short uniform-norm spanning path, and draws that path
//! in every drawing. A second pass pads shorter hops with collinear
//! subdivision points so all drawings realize the same abstract graph.

use std::collections::BTreeMap;
use std::sync::Arc;

use num::ToPrimitive;

use crate::boundary::{
    attachment_corner, augmented_drawing, connect_groups, corner_on_walk, corner_position,
    cost_table, safe_epsilon, ConnectedAugmentation, CostTable, Participant,
};
use crate::drawing::PlanarDrawing;
use crate::embedding::{embed_unchecked, Dart};
use crate::error::{Error, Result};
use crate::geom::Point2;
use crate::graph::{LabelledGraph, VertexId};
use crate::instance::Instance;
use crate::iso::check_isomorphic;
use crate::linf::{linf_distance, spanning_path, GridPoint};
use crate::points::augment_points;
use crate::route::{draw_route_refined, ClearanceSchedule, RunContext, ROUTE_BUDGET_FACTOR};
use crate::scalar::scalar;

/// Options for [`compatible_augment`].
#[derive(Debug, Clone)]
pub struct AugmentOptions {
    /// Re-validate planarity and isomorphism of all drawings after every
    /// run and at the end. The route's own planarity certificates always
    /// run; this adds the cross-drawing oracle suite on top.
    pub full_validation: bool,
}

impl Default for AugmentOptions {
    fn default() -> Self {
        AugmentOptions { full_validation: true }
    }
}

/// Size accounting for one augmentation.
#[derive(Debug, Clone)]
pub struct SizeReport {
    pub vertices: usize,
    pub edges: usize,
    pub components: usize,
    pub drawings: usize,
    pub added_vertex_count: usize,
    pub added_edge_count: usize,
    /// `added_vertex_count / (n * r^(1-1/k))`, for the envelope fit.
    pub envelope_constant: f64,
}

/// Exact per-run cost data, kept for the zero-tolerance cost checks.
#[derive(Debug, Clone)]
pub struct CostRecord {
    /// Costs from the base corner, one list per drawing.
    pub ranks: Vec<Vec<i64>>,
    /// Vertex count of the graph at the time of the run; every cost stays
    /// below six times this.
    pub vertex_bound: usize,
    /// Uniform-norm hop distances of the chosen order.
    pub hop_distances: Vec<i64>,
    /// Realized interior counts per drawing and hop, before padding.
    pub realized: Vec<Vec<usize>>,
}

/// The augmentation: the connected supergraph, one drawing per input, and
/// the bookkeeping.
#[derive(Debug, Clone)]
pub struct CompatibleResult {
    pub graph: Arc<LabelledGraph>,
    pub drawings: Vec<PlanarDrawing>,
    pub added_vertices: Vec<VertexId>,
    pub added_edges: Vec<(VertexId, VertexId)>,
    pub report: SizeReport,
    pub cost_records: Vec<CostRecord>,
}

/// Compute a compatible augmentation of the instance's drawings.
pub fn compatible_augment(instance: &Instance, opts: &AugmentOptions) -> Result<CompatibleResult> {
    let drawings = instance.drawings();
    if drawings.is_empty() {
        return Err(Error::BadInstance("no drawings".into()));
    }
    let k = drawings.len();
    let graph = drawings[0].graph().clone();
    for d in drawings {
        d.ensure_planar()?;
    }
    for d in &drawings[1..] {
        check_isomorphic(&drawings[0], d)?;
    }

    let n = graph.vertex_count();
    let r = graph.component_count();
    let mut state = State {
        drawings: drawings.to_vec(),
        added_vertices: Vec::new(),
        added_edges: Vec::new(),
        cost_records: Vec::new(),
        fresh: graph.vertices().max().map_or(0, |v| v + 1),
        opts: opts.clone(),
    };

    if r > 1 {
        if k == 1 {
            scaffold_only(&mut state)?;
        } else if graph.edge_count() == 0 {
            point_run(&mut state)?;
        } else {
            general_runs(&mut state)?;
        }
    }

    if opts.full_validation {
        for d in &state.drawings {
            d.ensure_planar()?;
        }
        for d in &state.drawings[1..] {
            check_isomorphic(&state.drawings[0], d)?;
        }
        if !state.drawings[0].graph().is_connected() {
            return Err(Error::BadInstance("augmentation failed to connect the graph".into()));
        }
    }

    let added_v = state.added_vertices.len();
    let added_e = state.added_edges.len();
    let envelope = if r > 1 && n > 0 {
        let exponent = 1.0 - 1.0 / k as f64;
        added_v as f64 / (n as f64 * (r as f64).powf(exponent))
    } else {
        0.0
    };
    Ok(CompatibleResult {
        graph: state.drawings[0].graph().clone(),
        report: SizeReport {
            vertices: n,
            edges: graph.edge_count(),
            components: r,
            drawings: k,
            added_vertex_count: added_v,
            added_edge_count: added_e,
            envelope_constant: envelope,
        },
        drawings: state.drawings,
        added_vertices: state.added_vertices,
        added_edges: state.added_edges,
        cost_records: state.cost_records,
    })
}

/// The grid embedding of the participants: one point per component whose
/// coordinates are the per-drawing costs from the base corner.
pub fn embed_components(tables: &[CostTable]) -> Result<Vec<GridPoint>> {
    let Some(first) = tables.first() else {
        return Err(Error::BadParameter("no cost tables".into()));
    };
    let m = first.rank.len();
    for t in tables {
        if t.rank.len() != m {
            return Err(Error::DimensionMismatch(m, t.rank.len()));
        }
    }
    Ok((0..m)
        .map(|j| GridPoint::new(tables.iter().map(|t| scalar(t.rank[j])).collect(), j as u32))
        .collect())
}

struct State {
    drawings: Vec<PlanarDrawing>,
    added_vertices: Vec<VertexId>,
    added_edges: Vec<(VertexId, VertexId)>,
    cost_records: Vec<CostRecord>,
    fresh: VertexId,
    opts: AugmentOptions,
}

/// With a single drawing there is no compatibility constraint: the
/// visibility scaffold itself is the augmentation, region by region.
fn scaffold_only(state: &mut State) -> Result<()> {
    while let Some(region) = next_region(&state.drawings[0]) {
        let comps = region_components(&region);
        let edges = connect_groups(&state.drawings[0], &comps)?;
        let new_graph = Arc::new(state.drawings[0].graph().extended(&[], &edges)?);
        state.drawings[0] = state.drawings[0].extended(new_graph, &BTreeMap::new())?;
        state.added_edges.extend(edges);
    }
    Ok(())
}

/// All components are isolated vertices: order them by the spanning path of
/// their per-drawing horizontal ranks and thread one path through all of
/// them in every drawing.
fn point_run(state: &mut State) -> Result<()> {
    let labels: Vec<VertexId> = state.drawings[0].graph().vertices().collect();
    let ptsets: Vec<Vec<Point2>> = state
        .drawings
        .iter()
        .map(|d| labels.iter().map(|&v| d.pos(v).clone()).collect())
        .collect();
    let aug = augment_points(&ptsets, false)?;
    let stops: Vec<VertexId> = aug.order.iter().map(|&i| labels[i]).collect();
    let ranks = crate::points::compute_ranks(&ptsets);
    let hop_distances: Vec<i64> = aug
        .order
        .windows(2)
        .map(|w| crate::points::hop_rank_gap(&ranks, w[0], w[1]) as i64)
        .collect();
    let realized: Vec<Vec<usize>> = aug
        .routes
        .iter()
        .map(|r| r.iter().map(|h| h.len()).collect())
        .collect();
    state.cost_records.push(CostRecord {
        ranks: ranks
            .ranks
            .iter()
            .map(|per| per.iter().map(|&x| x as i64).collect())
            .collect(),
        vertex_bound: labels.len(),
        hop_distances,
        realized,
    });
    extend_all(state, &stops, &aug.routes)
}

/// The general case: connect the outer face, then every bounded face that
/// still holds components, until the graph is connected.
fn general_runs(state: &mut State) -> Result<()> {
    while let Some(region) = next_region(&state.drawings[0]) {
        execute_run(state, region)?;
        if state.opts.full_validation {
            for d in &state.drawings {
                d.ensure_planar()?;
            }
            for i in 1..state.drawings.len() {
                check_isomorphic(&state.drawings[0], &state.drawings[i])?;
            }
        }
    }
    Ok(())
}

/// A pending region of the drawing: either the outer face with at least two
/// top-level components, or a bounded face with components inside.
enum Region {
    Outer { roots: Vec<usize> },
    Face { walk_dart: Dart, boundary_comp: usize, walk: Vec<Dart>, contained: Vec<usize> },
}

fn region_components(region: &Region) -> Vec<usize> {
    match region {
        Region::Outer { roots } => roots.clone(),
        Region::Face { boundary_comp, contained, .. } => {
            let mut v = vec![*boundary_comp];
            v.extend(contained.iter().copied());
            v
        }
    }
}

/// Deterministic work discovery on the current drawing.
fn next_region(d: &PlanarDrawing) -> Option<Region> {
    let emb = embed_unchecked(d);
    let outer = &emb.faces()[emb.outer_face()];
    if outer.contained.len() >= 2 {
        return Some(Region::Outer { roots: outer.contained.clone() });
    }
    // Bounded faces in a deterministic order: by their walk's first dart.
    let mut candidates: Vec<(Dart, usize)> = emb
        .faces()
        .iter()
        .enumerate()
        .filter(|(_, f)| f.boundary_walk.is_some() && !f.contained.is_empty())
        .map(|(i, f)| (emb.walks()[f.boundary_walk.unwrap()].darts[0], i))
        .collect();
    candidates.sort();
    let (dart, face) = *candidates.first()?;
    let walk_idx = emb.faces()[face].boundary_walk.unwrap();
    Some(Region::Face {
        walk_dart: dart,
        boundary_comp: emb.walks()[walk_idx].component,
        walk: emb.walks()[walk_idx].darts.clone(),
        contained: emb.faces()[face].contained.clone(),
    })
}

/// One full connection run over a region, updating every drawing.
fn execute_run(state: &mut State, region: Region) -> Result<()> {
    let k = state.drawings.len();
    let emb0 = embed_unchecked(&state.drawings[0]);
    let d0 = state.drawings[0].clone();

    // Participants, base first. Attachment corners and boundary walks are
    // label data shared by all drawings.
    let mut participants: Vec<Participant> = Vec::new();
    let mut comp_walks: Vec<Option<Vec<Dart>>> = Vec::new();
    let mut push_component = |comp: usize,
                              participants: &mut Vec<Participant>,
                              comp_walks: &mut Vec<Option<Vec<Dart>>>| {
        let (corner, blen) = attachment_corner(&emb0, &d0, comp);
        participants.push(Participant { comp, corner, boundary_len: blen });
        comp_walks.push(
            emb0.outer_walk_of_component(comp)
                .map(|wi| emb0.walks()[wi].darts.clone()),
        );
    };
    match &region {
        Region::Outer { roots } => {
            // Base: the participant holding the smallest vertex label.
            let mut roots = roots.clone();
            roots.sort_by_key(|&c| d0.graph().components()[c][0]);
            for &comp in &roots {
                push_component(comp, &mut participants, &mut comp_walks);
            }
        }
        Region::Face { boundary_comp, walk, contained, .. } => {
            // The face boundary participates as the base; paths attach the
            // face's contents to it.
            participants.push(Participant {
                comp: *boundary_comp,
                corner: corner_on_walk(walk),
                boundary_len: walk.len(),
            });
            comp_walks.push(Some(walk.clone()));
            let mut inner = contained.clone();
            inner.sort_by_key(|&c| d0.graph().components()[c][0]);
            for &comp in &inner {
                push_component(comp, &mut participants, &mut comp_walks);
            }
        }
    }
    let comps: Vec<usize> = participants.iter().map(|p| p.comp).collect();

    // Per drawing: scaffold, working walk split at the base, cost table.
    let mut contexts: Vec<RunContext> = Vec::with_capacity(k);
    let mut gstars: Vec<ConnectedAugmentation> = Vec::with_capacity(k);
    let mut tables: Vec<CostTable> = Vec::with_capacity(k);
    for d in &state.drawings {
        let tg = connect_groups(d, &comps)?;
        let scaffold = augmented_drawing(d, &tg)?;
        let semb = embed_unchecked(&scaffold);
        let mut walk = match &region {
            Region::Outer { .. } => {
                let merged = scaffold.graph().component_of(participants[0].corner.vertex);
                let wi = semb
                    .outer_walk_of_component(merged)
                    .expect("connected scaffold has an outer walk");
                semb.walks()[wi].darts.clone()
            }
            Region::Face { walk_dart, .. } => {
                let wi = semb
                    .walk_of_dart(*walk_dart)
                    .expect("face dart survives scaffolding");
                semb.walks()[wi].darts.clone()
            }
        };
        let base_pos = corner_position(&walk, &participants[0].corner)?;
        walk.rotate_left(base_pos);
        let mut positions = Vec::with_capacity(participants.len());
        for p in &participants {
            positions.push(corner_position(&walk, &p.corner)?);
        }
        let table = cost_table(&walk, &participants)?;
        table
            .verify_telescoping()
            .map_err(|m| Error::BadInstance(format!("cost table inconsistency: {m}")))?;
        gstars.push(ConnectedAugmentation {
            drawing: scaffold.clone(),
            extra_edges: tg,
            boundary: walk.clone(),
        });
        tables.push(table);
        contexts.push(RunContext {
            base: d.clone(),
            scaffold,
            walk,
            participants: participants.clone(),
            positions,
            comp_walks: comp_walks.clone(),
        });
    }

    // Order along the short spanning path over the cost coordinates.
    let grid = embed_components(&tables)?;
    let path = spanning_path(&grid)?;
    let mut order: Vec<usize> = path.order.clone();
    orient_order(&mut order, &participants, &d0);
    let hop_distances: Vec<i64> = order
        .windows(2)
        .map(|w| {
            linf_distance(&grid[w[0]], &grid[w[1]]).map(|d| {
                d.to_integer().to_i64().expect("grid distances are small integers")
            })
        })
        .collect::<Result<_>>()?;

    // Draw the route in every drawing, with a shared initial schedule.
    let eps = safe_epsilon(&gstars)?;
    let hops_count = order.len().saturating_sub(1);
    let mut routes = Vec::with_capacity(k);
    for ctx in &contexts {
        let sched = ClearanceSchedule::new(eps.clone(), hops_count);
        routes.push(draw_route_refined(ctx, &order, sched)?);
    }

    // Budgets: realized counts, padded to the per-hop maximum.
    let realized: Vec<Vec<usize>> = routes
        .iter()
        .map(|r| r.hops.iter().map(|h| h.len()).collect())
        .collect();
    let mut budgets = vec![0usize; hops_count];
    for counts in &realized {
        for (j, &c) in counts.iter().enumerate() {
            budgets[j] = budgets[j].max(c);
        }
    }
    for (j, &b) in budgets.iter().enumerate() {
        let allowance = ROUTE_BUDGET_FACTOR * (hop_distances[j].unsigned_abs() as usize + 1);
        if b > allowance {
            return Err(Error::BadInstance(format!(
                "hop {j} used {b} vertices, over its budget {allowance}"
            )));
        }
    }
    let mut padded: Vec<Vec<Vec<Point2>>> = Vec::with_capacity(k);
    for (i, route) in routes.iter().enumerate() {
        let mut hops = route.hops.clone();
        for (j, hop) in hops.iter_mut().enumerate() {
            let missing = budgets[j] - hop.len();
            if missing > 0 {
                let from = hop.last().cloned().expect("route hops are never empty");
                let to = state.drawings[i]
                    .pos(participants[order[j + 1]].corner.vertex)
                    .clone();
                pad_collinear(hop, &from, &to, missing);
            }
        }
        padded.push(hops);
    }

    state.cost_records.push(CostRecord {
        ranks: tables.iter().map(|t| t.rank.clone()).collect(),
        vertex_bound: d0.graph().vertex_count(),
        hop_distances,
        realized,
    });

    let stops: Vec<VertexId> = order.iter().map(|&p| participants[p].corner.vertex).collect();
    extend_all(state, &stops, &padded)
}

/// Start the path order at the end holding the base participant, with ties
/// by smallest vertex label of the end participants.
fn orient_order(order: &mut [usize], participants: &[Participant], d0: &PlanarDrawing) {
    if order.len() < 2 {
        return;
    }
    let first = order[0];
    let last = order[order.len() - 1];
    if first == 0 {
        return;
    }
    if last == 0 {
        order.reverse();
        return;
    }
    let label = |p: usize| d0.graph().components()[participants[p].comp][0];
    if label(last) < label(first) {
        order.reverse();
    }
}

/// Insert `extra` evenly spaced subdivision points on the segment from
/// `from` to `to` (exclusive).
fn pad_collinear(hop: &mut Vec<Point2>, from: &Point2, to: &Point2, extra: usize) {
    let denom = scalar(extra as i64 + 1);
    for s in 1..=extra {
        let t = scalar(s as i64) / &denom;
        hop.push(from.lerp(to, &t));
    }
}

/// Add the shared abstract path to the graph and all drawings: hop `j` gets
/// the same fresh vertex ids everywhere, positioned per drawing.
fn extend_all(
    state: &mut State,
    stops: &[VertexId],
    per_drawing_hops: &[Vec<Vec<Point2>>],
) -> Result<()> {
    if stops.len() < 2 {
        return Ok(());
    }
    let hops = stops.len() - 1;
    let k = state.drawings.len();
    let mut ids: Vec<Vec<VertexId>> = Vec::with_capacity(hops);
    let mut new_vertices: Vec<VertexId> = Vec::new();
    let mut new_edges: Vec<(VertexId, VertexId)> = Vec::new();
    for j in 0..hops {
        let count = per_drawing_hops[0][j].len();
        for hops_i in per_drawing_hops.iter().take(k) {
            if hops_i[j].len() != count {
                return Err(Error::BadInstance(
                    "hop realizations disagree on their vertex count".into(),
                ));
            }
        }
        let mut hop_ids = Vec::with_capacity(count);
        for _ in 0..count {
            hop_ids.push(state.fresh);
            new_vertices.push(state.fresh);
            state.fresh += 1;
        }
        let mut prev = stops[j];
        for &u in &hop_ids {
            new_edges.push((prev, u));
            prev = u;
        }
        new_edges.push((prev, stops[j + 1]));
        ids.push(hop_ids);
    }

    let new_graph = Arc::new(state.drawings[0].graph().extended(&new_vertices, &new_edges)?);
    for (i, d) in state.drawings.iter_mut().enumerate() {
        let mut extra = BTreeMap::new();
        for (j, hop_ids) in ids.iter().enumerate() {
            for (s, &id) in hop_ids.iter().enumerate() {
                extra.insert(id, per_drawing_hops[i][j][s].clone());
            }
        }
        *d = d.extended(new_graph.clone(), &extra)?;
    }
    state.added_vertices.extend(new_vertices);
    state.added_edges.extend(new_edges);
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::Instance;

    fn instance(
        vertices: Vec<VertexId>,
        edges: Vec<(VertexId, VertexId)>,
        drawings: Vec<Vec<(VertexId, i64, i64)>>,
    ) -> Instance {
        let pos_sets = drawings
            .into_iter()
            .enumerate()
            .map(|(i, pos)| {
                (
                    format!("d{i}"),
                    pos.into_iter()
                        .map(|(v, x, y)| (v, Point2::from_ints(x, y)))
                        .collect::<BTreeMap<_, _>>(),
                )
            })
            .collect();
        Instance::build(vertices, edges, pos_sets).unwrap()
    }

    fn check(result: &CompatibleResult) {
        for d in &result.drawings {
            assert!(crate::drawing::validate_planar(d).is_empty());
        }
        for d in &result.drawings[1..] {
            assert!(crate::iso::drawings_isomorphic(&result.drawings[0], d).unwrap());
        }
        assert!(result.graph.is_connected());
    }

    #[test]
    fn connected_input_is_untouched() {
        let inst = instance(
            vec![1, 2],
            vec![(1, 2)],
            vec![vec![(1, 0, 0), (2, 1, 0)], vec![(1, 5, 5), (2, 6, 5)]],
        );
        let res = compatible_augment(&inst, &AugmentOptions::default()).unwrap();
        assert_eq!(res.report.added_vertex_count, 0);
        assert_eq!(res.report.added_edge_count, 0);
        check(&res);
    }

    #[test]
    fn two_points_two_drawings() {
        let inst = instance(
            vec![1, 2],
            vec![],
            vec![vec![(1, 0, 0), (2, 4, 1)], vec![(1, 3, 2), (2, 0, 0)]],
        );
        let res = compatible_augment(&inst, &AugmentOptions::default()).unwrap();
        check(&res);
        assert_eq!(res.report.added_vertex_count, 0);
        assert_eq!(res.report.added_edge_count, 1);
    }

    #[test]
    fn scattered_points() {
        let inst = instance(
            vec![0, 1, 2, 3, 4, 5],
            vec![],
            vec![
                vec![(0, 0, 0), (1, 3, 5), (2, 7, 1), (3, 11, 6), (4, 14, 2), (5, 18, 4)],
                vec![(0, 18, 1), (1, 3, 2), (2, 11, 5), (3, 0, 3), (4, 7, 6), (5, 14, 0)],
            ],
        );
        let res = compatible_augment(&inst, &AugmentOptions::default()).unwrap();
        check(&res);
        assert!(res.report.added_vertex_count > 0);
    }

    #[test]
    fn flat_components_two_drawings() {
        // Three small components, permuted between the drawings.
        let shapes = |o: [(i64, i64); 3]| {
            vec![
                (1, o[0].0, o[0].1),
                (2, o[0].0 + 2, o[0].1),
                (3, o[1].0, o[1].1),
                (4, o[1].0 + 1, o[1].1 + 2),
                (5, o[1].0 + 2, o[1].1),
                (6, o[2].0, o[2].1),
            ]
        };
        let inst = instance(
            vec![1, 2, 3, 4, 5, 6],
            vec![(1, 2), (3, 4), (4, 5), (3, 5)],
            vec![shapes([(0, 0), (10, 0), (20, 0)]), shapes([(20, 1), (0, 0), (10, 2)])],
        );
        let res = compatible_augment(&inst, &AugmentOptions::default()).unwrap();
        check(&res);
        assert!(res.report.added_vertex_count > 0);
        assert!(!res.cost_records.is_empty());
        // Exact cost bound from the construction: every cost below 6n.
        for rec in &res.cost_records {
            for ranks in &rec.ranks {
                for &s in ranks {
                    assert!(s >= 0 && s < 6 * rec.vertex_bound as i64);
                }
            }
        }
    }

    #[test]
    fn triangle_with_interior_vertex() {
        // A triangle holding an isolated vertex: handled by the face pass.
        let inst = instance(
            vec![1, 2, 3, 9],
            vec![(1, 2), (2, 3), (1, 3)],
            vec![
                vec![(1, 0, 0), (2, 12, 0), (3, 0, 12), (9, 3, 3)],
                vec![(1, 20, 0), (2, 32, 0), (3, 20, 12), (9, 24, 2)],
            ],
        );
        let res = compatible_augment(&inst, &AugmentOptions::default()).unwrap();
        check(&res);
        assert!(res.report.added_vertex_count >= 1);
    }

    #[test]
    fn nested_squares_with_point_between() {
        let square = |cx: i64, cy: i64, s: i64, ids: [VertexId; 4]| {
            vec![
                (ids[0], cx - s, cy - s),
                (ids[1], cx + s, cy - s),
                (ids[2], cx + s, cy + s),
                (ids[3], cx - s, cy + s),
            ]
        };
        let mut pos1 = square(0, 0, 20, [1, 2, 3, 4]);
        pos1.extend(square(0, 0, 5, [5, 6, 7, 8]));
        pos1.push((9, 10, 10));
        let mut pos2 = square(0, 0, 20, [1, 2, 3, 4]);
        pos2.extend(square(2, -2, 5, [5, 6, 7, 8]));
        pos2.push((9, -10, 10));
        let inst = instance(
            vec![1, 2, 3, 4, 5, 6, 7, 8, 9],
            vec![(1, 2), (2, 3), (3, 4), (1, 4), (5, 6), (6, 7), (7, 8), (5, 8)],
            vec![pos1, pos2],
        );
        let res = compatible_augment(&inst, &AugmentOptions::default()).unwrap();
        check(&res);
        assert!(res.report.added_vertex_count >= 1);
    }

    #[test]
    fn three_components_swap() {
        // Two drawings whose component order is reversed; the augmentation
        // must add vertices, not just edges, and stay valid.
        let seg = |a: VertexId, b: VertexId, x: i64, y: i64| vec![(a, x, y), (b, x + 2, y + 1)];
        let mk = |o: [(i64, i64); 3]| {
            let mut v = seg(1, 2, o[0].0, o[0].1);
            v.extend(seg(3, 4, o[1].0, o[1].1));
            v.extend(seg(5, 6, o[2].0, o[2].1));
            v
        };
        let inst = instance(
            vec![1, 2, 3, 4, 5, 6],
            vec![(1, 2), (3, 4), (5, 6)],
            vec![mk([(0, 0), (8, 0), (16, 0)]), mk([(16, 3), (8, 0), (0, 2)])],
        );
        let res = compatible_augment(&inst, &AugmentOptions::default()).unwrap();
        check(&res);
        for rec in &res.cost_records {
            for per_drawing in &rec.realized {
                for (j, &c) in per_drawing.iter().enumerate() {
                    let allowance =
                        ROUTE_BUDGET_FACTOR * (rec.hop_distances[j].unsigned_abs() as usize + 1);
                    assert!(c <= allowance, "hop {j} realized {c} over {allowance}");
                }
            }
        }
    }

    #[test]
    fn single_drawing_uses_edges_only() {
        let inst = instance(
            vec![1, 2, 3, 4],
            vec![(1, 2), (3, 4)],
            vec![vec![(1, 0, 0), (2, 1, 0), (3, 5, 0), (4, 6, 0)]],
        );
        let res = compatible_augment(&inst, &AugmentOptions::default()).unwrap();
        assert_eq!(res.report.added_vertex_count, 0);
        assert_eq!(res.report.added_edge_count, 1);
        check(&res);
    }

    #[test]
    fn three_drawings() {
        let seg = |a: VertexId, b: VertexId, x: i64, y: i64| vec![(a, x, y), (b, x + 2, y)];
        let mk = |o: [(i64, i64); 3]| {
            let mut v = seg(1, 2, o[0].0, o[0].1);
            v.extend(seg(3, 4, o[1].0, o[1].1));
            v.extend(seg(5, 6, o[2].0, o[2].1));
            v
        };
        let inst = instance(
            vec![1, 2, 3, 4, 5, 6],
            vec![(1, 2), (3, 4), (5, 6)],
            vec![
                mk([(0, 0), (8, 0), (16, 0)]),
                mk([(8, 2), (16, 0), (0, 1)]),
                mk([(16, 0), (0, 3), (8, 1)]),
            ],
        );
        let res = compatible_augment(&inst, &AugmentOptions::default()).unwrap();
        check(&res);
    }

    #[test]
    fn non_isomorphic_inputs_rejected() {
        // The isolated vertex is inside the triangle in one drawing only.
        let inst = instance(
            vec![1, 2, 3, 9],
            vec![(1, 2), (2, 3), (1, 3)],
            vec![
                vec![(1, 0, 0), (2, 12, 0), (3, 0, 12), (9, 3, 3)],
                vec![(1, 0, 0), (2, 12, 0), (3, 0, 12), (9, 30, 3)],
            ],
        );
        match compatible_augment(&inst, &AugmentOptions::default()) {
            Err(Error::NotIsomorphic(_)) => {}
            other => panic!("expected isomorphism rejection, got {other:?}"),
        }
    }
}
