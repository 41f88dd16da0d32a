//! Drawing the connector path through the attachment corners of one drawing.
//!
//! The path follows the boundary fattening of the connected scaffold at an
//! increasing offset, dropping to each attachment corner in turn. Pending
//! corners keep a cone of unobstructed access to the fattening; whenever the
//! walk would cut such a cone it takes a detour around the component at a
//! smaller offset. A corner whose component would end up on the wrong side
//! of the path is first circled once at the innermost offset. All clearance
//! values are verified after the fact with exact predicates; any violation
//! halves the schedule and redraws.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use num::{Signed, Zero};

use crate::boundary::{fatten_point, fatten_walk, fattening_is_clear, Fattening, Participant};
use crate::drawing::PlanarDrawing;
use crate::embedding::{embed_unchecked, Dart};
use crate::error::{Error, Result};
use crate::geom::{
    convex_hull, first_hit_param, point_in_convex, signed_area2, Point2, Segment,
};
use crate::graph::VertexId;
use crate::scalar::{scalar, Scalar};

/// Interior vertices per hop never exceed
/// `ROUTE_BUDGET_FACTOR * (corner cost + 1)`.
pub const ROUTE_BUDGET_FACTOR: usize = 12;

/// Concrete stand-ins for the construction's clearance values. All derived
/// offsets keep `lambda < delta_j < eps_j`, with `eps_j` strictly increasing
/// and `delta_j`, `tau_j` strictly decreasing over the hops.
#[derive(Debug, Clone)]
pub struct ClearanceSchedule {
    pub eps_max: Scalar,
    pub del_max: Scalar,
    pub tau0: Scalar,
    pub lambda: Scalar,
    pub hops: usize,
}

impl ClearanceSchedule {
    pub fn new(eps_max: Scalar, hops: usize) -> Self {
        let del_max = &eps_max / scalar(2);
        let tau0 = &eps_max / scalar(8);
        let lambda = &del_max / scalar(4 * (hops.max(1) as i64 + 1));
        ClearanceSchedule { eps_max, del_max, tau0, lambda, hops: hops.max(1) }
    }

    pub fn eps(&self, j: usize) -> Scalar {
        let h = self.hops as i64;
        &self.eps_max * (scalar(h) + scalar(j as i64 + 1)) / scalar(2 * h)
    }

    pub fn delta(&self, j: usize) -> Scalar {
        let h = self.hops as i64 + 1;
        &self.del_max * (scalar(h) - scalar(j as i64 + 1)) / scalar(2 * h)
    }

    pub fn tau(&self, j: usize) -> Scalar {
        &self.tau0 / scalar(j as i64 + 1)
    }

    /// Refinement step: everything halves, and the cone radius shrinks
    /// faster so access cones also narrow relative to the boundary offset.
    pub fn halved(&self) -> Self {
        ClearanceSchedule {
            eps_max: &self.eps_max / scalar(2),
            del_max: &self.del_max / scalar(2),
            tau0: &self.tau0 / scalar(4),
            lambda: &self.lambda / scalar(2),
            hops: self.hops,
        }
    }

    pub fn consistent(&self) -> bool {
        if !self.eps_max.is_positive() {
            return false;
        }
        for j in 0..self.hops {
            let d = self.delta(j);
            if !(self.lambda < d && d < self.eps(j)) {
                return false;
            }
            if j + 1 < self.hops
                && !(self.eps(j) < self.eps(j + 1)
                    && self.delta(j + 1) < d
                    && self.tau(j + 1) < self.tau(j))
            {
                return false;
            }
        }
        true
    }
}

/// Everything one drawing contributes to a connection run.
#[derive(Debug, Clone)]
pub struct RunContext {
    /// The real drawing: its edges and vertices are the obstacles the final
    /// path must respect.
    pub base: PlanarDrawing,
    /// The drawing plus its scaffold visibility edges.
    pub scaffold: PlanarDrawing,
    /// Boundary walk of the working face of the scaffold, split at the base
    /// corner (position 0).
    pub walk: Vec<Dart>,
    pub participants: Vec<Participant>,
    /// Corner position of each participant on `walk`.
    pub positions: Vec<usize>,
    /// Boundary walk of each participant in the real drawing (`None` for
    /// isolated vertices). The face-boundary participant of a face run uses
    /// its face walk here.
    pub comp_walks: Vec<Option<Vec<Dart>>>,
}

/// The drawn connector for one drawing.
#[derive(Debug, Clone)]
pub struct Route {
    /// Participant indices in visiting order.
    pub order: Vec<usize>,
    /// Interior vertices of each hop.
    pub hops: Vec<Vec<Point2>>,
}

/// Draw the route, halving the clearance schedule and retrying on any exact
/// check failure, at most 64 times.
pub fn draw_route_refined(
    ctx: &RunContext,
    order: &[usize],
    initial: ClearanceSchedule,
) -> Result<Route> {
    let mut sched = initial;
    let mut last = String::new();
    for _ in 0..64 {
        match draw_route(ctx, order, &sched) {
            Ok(route) => return Ok(route),
            Err(Error::BadParameter(msg)) => {
                last = msg;
                sched = sched.halved();
            }
            Err(e) => return Err(e),
        }
    }
    Err(Error::ScheduleExhausted { rounds: 64, last })
}

/// One attempt at the route under a fixed schedule. Clearance violations
/// come back as `BadParameter` so the caller can refine and retry.
pub fn draw_route(ctx: &RunContext, order: &[usize], sched: &ClearanceSchedule) -> Result<Route> {
    let r = order.len();
    if r == 0 {
        return Err(Error::BadParameter("empty visiting order".into()));
    }
    if r == 1 {
        // A single participant: the route is its corner alone.
        return Ok(Route { order: order.to_vec(), hops: Vec::new() });
    }
    if !sched.consistent() {
        return Err(Error::BadParameter("inconsistent clearance schedule".into()));
    }
    assert!(ctx.walk.len() >= 3, "working walks have at least three corners");

    let scaffold_segs: Vec<Segment> = ctx
        .scaffold
        .graph()
        .edges()
        .map(|(a, b)| ctx.scaffold.segment(a, b))
        .collect();
    let scaffold_pts: Vec<Point2> = ctx.scaffold.positions().values().cloned().collect();
    let base_segs: Vec<Segment> = ctx
        .base
        .graph()
        .edges()
        .map(|(a, b)| ctx.base.segment(a, b))
        .collect();
    let base_pts: Vec<Point2> = ctx.base.positions().values().cloned().collect();

    let mut hops: Vec<Vec<Point2>> = Vec::with_capacity(r - 1);
    let mut arrival: Option<Point2> = None;

    for h in 0..(r - 1) {
        let from = order[h];
        let to = order[h + 1];
        let eps = sched.eps(h);
        let delta = sched.delta(h);
        let tau = sched.tau(h);

        let fat = fatten_walk(&ctx.scaffold, &ctx.walk, &eps);
        if !fattening_is_clear(&fat, &scaffold_segs, &scaffold_pts) {
            return Err(Error::BadParameter(format!(
                "boundary fattening at hop {h} is not simple and clear"
            )));
        }

        let p_from = ctx.positions[from];
        let p_to = ctx.positions[to];
        let forward = p_to > p_from;
        let step: i64 = if forward { 1 } else { -1 };
        let w_from = fat.copy_of(p_from).clone();

        let mut interior: Vec<Point2> = Vec::new();

        // Departure: straight to the boundary copy, unless that leaves the
        // component on the wrong side, in which case circle it once at the
        // innermost offset and leave from there.
        let mut departure_ok = true;
        if let Some(arr) = &arrival {
            departure_ok =
                is_cw_successor(&ctx.base, ctx.participants[from].corner.vertex, arr, &w_from);
        }
        if departure_ok {
            interior.push(w_from.clone());
        } else {
            let loop_pts = wrong_side_loop(
                ctx,
                from,
                arrival.as_ref().expect("loop only after an arrival"),
                &sched.lambda,
                &base_segs,
                &base_pts,
            )?;
            interior.extend(loop_pts);
            interior.push(w_from.clone());
        }

        // Walk the fattening from the current corner towards the target,
        // detouring around every pending participant on the way.
        let pending: BTreeMap<usize, usize> = order[h + 2..]
            .iter()
            .map(|&t| (ctx.positions[t], t))
            .collect();
        let mut p = p_from as i64;
        loop {
            p += step;
            let pos = p as usize;
            if pos == p_to {
                break;
            }
            if let Some(&t) = pending.get(&pos) {
                let detour =
                    detour_around(ctx, t, &fat, forward, &tau, &delta, &base_segs, &base_pts)?;
                interior.extend(detour);
            } else {
                interior.push(fat.copy_of(pos).clone());
            }
        }

        // Arrival: stop at the near endpoint of the target's neighborhood
        // (the side the walk comes from) and drop straight to the corner.
        let entry = neighborhood_endpoint(&fat, p_to, forward, &tau);
        interior.push(entry.clone());
        arrival = Some(entry);
        hops.push(interior);
    }

    let route = Route { order: order.to_vec(), hops };

    // Final exact certificates: the path plus the real drawing is planar and
    // every component hangs off the correct side.
    let (full, seq) = assemble_route_drawing(&ctx.base, ctx, &route)?;
    let violations = crate::drawing::validate_planar(&full);
    if !violations.is_empty() {
        let mut msg = format!("drawn route crosses the drawing ({} violations):", violations.len());
        for v in violations.iter().take(4) {
            msg.push_str(&format!(" [{v}]"));
        }
        if std::env::var_os("COMPAUG_TRACE").is_some() {
            eprintln!("--- route failure dump ---");
            eprintln!("order: {order:?} positions: {:?}", ctx.positions);
            for (vid, p) in full.positions() {
                eprintln!(
                    "  v{vid} = ({}, {})",
                    crate::scalar::to_f64(&p.x),
                    crate::scalar::to_f64(&p.y)
                );
            }
        }
        return Err(Error::BadParameter(msg));
    }
    for &idx in order {
        let part = &ctx.participants[idx];
        let comp_vertices: BTreeSet<VertexId> = ctx
            .base
            .graph()
            .components()
            .get(part.comp)
            .map(|vs| vs.iter().copied().collect())
            .unwrap_or_default();
        match check_right_of(&full, &seq, &comp_vertices)? {
            true => {}
            false => {
                return Err(Error::BadParameter(format!(
                    "participant {idx} is on the wrong side of the route"
                )))
            }
        }
    }
    Ok(route)
}

/// The fattening point at parameter `tau` before/after the copy of the given
/// walk position (towards lower positions when `lower` is set).
fn neighborhood_endpoint(fat: &Fattening, pos: usize, lower: bool, tau: &Scalar) -> Point2 {
    let n = fat.polygon.len();
    let idx = fat.copy_index[pos];
    let nb = if lower { (idx + n - 1) % n } else { (idx + 1) % n };
    let w = &fat.polygon[idx];
    let d = fat.polygon[nb].sub(w);
    let len = d.l1();
    // Capped at a third of the edge so neighborhoods of adjacent corners
    // never meet.
    let t = if &len * scalar(3) <= *tau {
        scalar(1) / scalar(3)
    } else {
        tau / &len
    };
    w.add(&d.scale(&t))
}

/// Interior vertices of the detour around pending participant `t`:
/// neighborhood entry, drop to the component ring, the ring arc clear of the
/// access cone, and back out to the neighborhood exit.
#[allow(clippy::too_many_arguments)]
fn detour_around(
    ctx: &RunContext,
    t: usize,
    fat: &Fattening,
    forward: bool,
    tau: &Scalar,
    delta: &Scalar,
    base_segs: &[Segment],
    base_pts: &[Point2],
) -> Result<Vec<Point2>> {
    let pos = ctx.positions[t];
    let apex = ctx.base.pos(ctx.participants[t].corner.vertex).clone();
    let p_in = neighborhood_endpoint(fat, pos, forward, tau);
    let p_out = neighborhood_endpoint(fat, pos, !forward, tau);
    let w = fat.copy_of(pos).clone();
    let cone = convex_hull(&[apex.clone(), p_in.clone(), w, p_out.clone()]);

    let ring = participant_ring(ctx, t, delta);
    if !fattening_is_clear(&ring, base_segs, base_pts) {
        return Err(Error::BadParameter(format!(
            "component ring of participant {t} is not clear at its offset"
        )));
    }

    let x_in = ring_hit(&ring, &p_in, &apex)
        .ok_or_else(|| Error::BadParameter(format!("cone of participant {t} misses its ring")))?;
    let x_out = ring_hit(&ring, &p_out, &apex)
        .ok_or_else(|| Error::BadParameter(format!("cone of participant {t} misses its ring")))?;

    let arc = ring_arc_avoiding(&ring, &x_in, &x_out, &cone).ok_or_else(|| {
        Error::BadParameter(format!("no ring arc around participant {t} clears its cone"))
    })?;

    let mut out = vec![p_in, x_in];
    out.extend(arc);
    out.push(x_out);
    out.push(p_out);
    Ok(out)
}

/// The participant's component boundary offset by `by` (diamond for isolated
/// vertices).
fn participant_ring(ctx: &RunContext, t: usize, by: &Scalar) -> Fattening {
    match &ctx.comp_walks[t] {
        Some(walk) => fatten_walk(&ctx.base, walk, by),
        None => fatten_point(ctx.base.pos(ctx.participants[t].corner.vertex), by),
    }
}

/// First intersection of the segment from `from` towards `apex` with the
/// ring boundary, as a point.
fn ring_hit(ring: &Fattening, from: &Point2, apex: &Point2) -> Option<Point2> {
    if from == apex {
        return None;
    }
    let seg = Segment::new(from.clone(), apex.clone());
    let n = ring.polygon.len();
    let mut best: Option<Scalar> = None;
    for i in 0..n {
        let a = &ring.polygon[i];
        let b = &ring.polygon[(i + 1) % n];
        if a == b {
            continue;
        }
        if let Some(tp) = first_hit_param(&seg, &Segment::new(a.clone(), b.clone())) {
            best = Some(match best {
                None => tp,
                Some(b0) => b0.min(tp),
            });
        }
    }
    best.map(|t| seg.at(&t))
}

/// The ring walk from `x_in` to `x_out` that keeps the open access cone
/// clear: of the two ways around the ring, the one none of whose segments
/// meets the cone's interior. Returns the interior vertices in travel order.
fn ring_arc_avoiding(
    ring: &Fattening,
    x_in: &Point2,
    x_out: &Point2,
    cone: &[Point2],
) -> Option<Vec<Point2>> {
    if x_in == x_out {
        return None;
    }
    let n = ring.polygon.len();
    let locate = |p: &Point2| -> Option<usize> {
        for i in 0..n {
            let a = &ring.polygon[i];
            let b = &ring.polygon[(i + 1) % n];
            if a == b {
                continue;
            }
            if crate::geom::point_on_segment(p, &Segment::new(a.clone(), b.clone())) {
                return Some(i);
            }
        }
        None
    };
    let ei = locate(x_in)?;
    let eo = locate(x_out)?;

    // Candidate arcs as vertex index runs; on a shared edge the walk goes
    // the full circle, leaving away from the other hit point.
    let fwd_count = (eo + n - ei - 1) % n + 1;
    let bwd_count = (ei + n - eo - 1) % n + 1;
    let forward: Vec<Point2> = (0..fwd_count)
        .map(|s| ring.polygon[(ei + 1 + s) % n].clone())
        .collect();
    let backward: Vec<Point2> = (0..bwd_count)
        .map(|s| ring.polygon[(ei + n - s) % n].clone())
        .collect();

    let mut candidates: Vec<Vec<Point2>> = Vec::new();
    if ei == eo {
        // Same edge: going towards the far endpoint first would run over the
        // other hit point; only one direction is structurally sound.
        let a = &ring.polygon[ei];
        let toward_b = crate::geom::dist2(x_in, a) < crate::geom::dist2(x_out, a);
        if toward_b {
            candidates.push(backward);
        } else {
            candidates.push(forward);
        }
    } else {
        candidates.push(forward);
        candidates.push(backward);
    }

    let arc_clear = |arc: &[Point2]| -> bool {
        let mut prev = x_in.clone();
        for p in arc.iter().chain(std::iter::once(x_out)) {
            if *p == prev {
                return false;
            }
            if segment_meets_convex_interior(&Segment::new(prev.clone(), p.clone()), cone) {
                return false;
            }
            prev = p.clone();
        }
        true
    };
    let mut valid: Vec<Vec<Point2>> = candidates.into_iter().filter(|a| arc_clear(a)).collect();
    // Prefer the longer way around: it is the side away from the cone.
    valid.sort_by_key(|a| a.len());
    valid.pop()
}

/// Circle the departing component once at the innermost offset so that it
/// ends up on the correct side, returning the loop's interior vertices (the
/// caller appends the boundary copy afterwards).
fn wrong_side_loop(
    ctx: &RunContext,
    from: usize,
    arrival: &Point2,
    lambda: &Scalar,
    base_segs: &[Segment],
    base_pts: &[Point2],
) -> Result<Vec<Point2>> {
    let v = ctx.participants[from].corner.vertex;
    let origin = ctx.base.pos(v).clone();
    let ring = participant_ring(ctx, from, lambda);
    if !fattening_is_clear(&ring, base_segs, base_pts) {
        return Err(Error::BadParameter(format!(
            "innermost ring of participant {from} is not clear"
        )));
    }
    // Ring in clockwise order.
    let mut cw: Vec<Point2> = ring.polygon.clone();
    if signed_area2(&cw).is_positive() {
        cw.reverse();
    }
    // Entry: the ring vertex that becomes the clockwise successor of the
    // arrival direction in the rotation at the corner, as close clockwise to
    // the arrival as possible.
    let entry = cw
        .iter()
        .enumerate()
        .filter(|(_, e)| **e != origin && is_cw_successor(&ctx.base, v, arrival, e))
        .max_by(|a, b| {
            cmp_ccw_from(&arrival.sub(&origin), &a.1.sub(&origin), &b.1.sub(&origin))
        })
        .map(|(i, _)| i)
        .ok_or_else(|| {
            Error::BadParameter(format!("no usable loop entry at participant {from}"))
        })?;
    // Walk all ring vertices but skip the closing edge: the previous arrival
    // segment pierces the ring exactly there, and the exit climbs from the
    // last vertex, which sits just counterclockwise of the arrival.
    let m = cw.len();
    let mut pts = Vec::with_capacity(m);
    for s in 0..m {
        pts.push(cw[(entry + s) % m].clone());
    }
    Ok(pts)
}

/// Ordering of directions by counterclockwise angle from `base`, in
/// `(0, 2pi]`; a direction equal to `base` sorts last.
fn cmp_ccw_from(base: &Point2, a: &Point2, b: &Point2) -> std::cmp::Ordering {
    let sector = |d: &Point2| -> u8 {
        let c = base.cross(d);
        if c.is_positive() {
            0
        } else if c.is_zero() {
            if base.dot(d).is_negative() {
                1
            } else {
                3
            }
        } else {
            2
        }
    };
    let (sa, sb) = (sector(a), sector(b));
    match sa.cmp(&sb) {
        std::cmp::Ordering::Equal => {
            if sa == 1 || sa == 3 {
                std::cmp::Ordering::Equal
            } else {
                let c = a.cross(b);
                if c.is_positive() {
                    std::cmp::Ordering::Less
                } else if c.is_negative() {
                    std::cmp::Ordering::Greater
                } else {
                    std::cmp::Ordering::Equal
                }
            }
        }
        other => other,
    }
}

/// True iff walking clockwise from the direction towards `from_pt`, the very
/// next neighbor direction at vertex `v` is the one towards `to_pt`, taking
/// the vertex's real edges as the other neighbors. This is the rotation
/// condition that keeps the component on the right of the path.
fn is_cw_successor(base: &PlanarDrawing, v: VertexId, from_pt: &Point2, to_pt: &Point2) -> bool {
    let origin = base.pos(v);
    let d_from = from_pt.sub(origin);
    let d_to = to_pt.sub(origin);
    if d_from.is_zero() || d_to.is_zero() {
        return false;
    }
    // Clockwise-next equals maximal counterclockwise angle from `d_from`.
    for w in base.graph().neighbors(v) {
        let d = base.pos(*w).sub(origin);
        if cmp_ccw_from(&d_from, &d_to, &d) != std::cmp::Ordering::Greater {
            return false;
        }
    }
    true
}

/// Assemble the real drawing plus the route into one drawing with fresh ids
/// for the interior vertices. Returns the drawing and the route's vertex
/// sequence within it.
pub fn assemble_route_drawing(
    base: &PlanarDrawing,
    ctx: &RunContext,
    route: &Route,
) -> Result<(PlanarDrawing, Vec<VertexId>)> {
    let mut fresh: VertexId = base.graph().vertices().max().map_or(0, |v| v + 1);
    let mut vertices: Vec<VertexId> = base.graph().vertices().collect();
    let mut edges: Vec<(VertexId, VertexId)> = base.graph().edges().collect();
    let mut pos: BTreeMap<VertexId, Point2> = base.positions().clone();
    let mut seq: Vec<VertexId> = Vec::new();

    for (h, w) in route.order.windows(2).enumerate() {
        let a = ctx.participants[w[0]].corner.vertex;
        let b = ctx.participants[w[1]].corner.vertex;
        if h == 0 {
            seq.push(a);
        }
        let mut prev = a;
        for p in &route.hops[h] {
            vertices.push(fresh);
            pos.insert(fresh, p.clone());
            edges.push((prev, fresh));
            seq.push(fresh);
            prev = fresh;
            fresh += 1;
        }
        edges.push((prev, b));
        seq.push(b);
    }
    if route.order.len() == 1 {
        seq.push(ctx.participants[route.order[0]].corner.vertex);
    }
    let graph = Arc::new(crate::graph::LabelledGraph::new(vertices, edges)?);
    let drawing = PlanarDrawing::new(graph, pos)?;
    Ok((drawing, seq))
}

/// The rotation condition from the construction, checked on a finished
/// drawing: the route visits the component only at its attachment corner,
/// and at that corner the route's two neighbors are consecutive in clockwise
/// order. Errors when the route misses the component entirely.
pub fn check_right_of(
    full: &PlanarDrawing,
    route_seq: &[VertexId],
    component: &BTreeSet<VertexId>,
) -> Result<bool> {
    let on_route: Vec<(usize, VertexId)> = route_seq
        .iter()
        .enumerate()
        .filter(|(_, v)| component.contains(v))
        .map(|(i, &v)| (i, v))
        .collect();
    if on_route.is_empty() {
        return Err(Error::BadParameter("route does not visit the component".into()));
    }
    if on_route.len() > 1 {
        return Ok(false);
    }
    let (idx, a) = on_route[0];
    if idx == 0 || idx == route_seq.len() - 1 {
        // Path endpoints have a single route neighbor; nothing to separate.
        return Ok(true);
    }
    let prev = route_seq[idx - 1];
    let next = route_seq[idx + 1];
    let emb = embed_unchecked(full);
    let rot = emb.rotation(a);
    let m = rot.len();
    let (Some(pi), Some(ni)) = (
        rot.iter().position(|&w| w == prev),
        rot.iter().position(|&w| w == next),
    ) else {
        return Err(Error::BadParameter("route neighbors missing from rotation".into()));
    };
    // Adjacent in the cyclic order (clockwise and counterclockwise lists
    // have the same adjacencies).
    Ok((pi + 1) % m == ni || (ni + 1) % m == pi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boundary::{
        attachment_corner, connect_components, corner_position, cost_table, safe_epsilon,
    };
    use crate::drawing::validate_planar;
    use crate::graph::LabelledGraph;

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

    /// Build a top-level run context for a flat drawing whose components all
    /// touch the outer face, and draw the route in the given component
    /// order.
    fn run_route(d: &PlanarDrawing, order_comps: &[usize]) -> (RunContext, Route) {
        let ca = connect_components(d).unwrap();
        let emb = embed_unchecked(d);
        let r = d.graph().component_count();
        let mut participants = Vec::new();
        let mut comp_walks = Vec::new();
        for comp in 0..r {
            let (corner, blen) = attachment_corner(&emb, d, comp);
            participants.push(Participant { comp, corner, boundary_len: blen });
            comp_walks.push(
                emb.outer_walk_of_component(comp)
                    .map(|wi| emb.walks()[wi].darts.clone()),
            );
        }
        let mut walk = ca.boundary.clone();
        let base_pos = corner_position(&walk, &participants[0].corner).unwrap();
        walk.rotate_left(base_pos);
        let mut positions = Vec::new();
        for p in &participants {
            positions.push(corner_position(&walk, &p.corner).unwrap());
        }
        let eps = safe_epsilon(std::slice::from_ref(&ca)).unwrap();
        let sched = ClearanceSchedule::new(eps, order_comps.len().saturating_sub(1));
        let ctx = RunContext {
            base: d.clone(),
            scaffold: ca.drawing.clone(),
            walk,
            participants,
            positions,
            comp_walks,
        };
        let route = draw_route_refined(&ctx, order_comps, sched).unwrap();
        (ctx, route)
    }

    #[test]
    fn schedule_orderings() {
        let s = ClearanceSchedule::new(scalar(1), 5);
        assert!(s.consistent());
        assert!(s.halved().consistent());
        for j in 0..4 {
            assert!(s.eps(j) < s.eps(j + 1));
            assert!(s.delta(j + 1) < s.delta(j));
            assert!(s.tau(j + 1) < s.tau(j));
            assert!(s.lambda < s.delta(j + 1));
            assert!(s.delta(j) < s.eps(j));
        }
    }

    #[test]
    fn route_two_segments() {
        let d = drawing(
            vec![1, 2, 3, 4],
            vec![(1, 2), (3, 4)],
            vec![(1, 0, 0), (2, 2, 0), (3, 8, 0), (4, 10, 0)],
        );
        let (ctx, route) = run_route(&d, &[0, 1]);
        assert_eq!(route.hops.len(), 1);
        let (full, seq) = assemble_route_drawing(&d, &ctx, &route).unwrap();
        assert!(validate_planar(&full).is_empty());
        for comp in 0..2 {
            let members: BTreeSet<VertexId> =
                d.graph().components()[comp].iter().copied().collect();
            assert!(check_right_of(&full, &seq, &members).unwrap());
        }
        // Hop budget against the cost table.
        let table = cost_table(&ctx.walk, &ctx.participants).unwrap();
        let sigma = table.cost_between(0, 1) as usize;
        assert!(route.hops[0].len() <= ROUTE_BUDGET_FACTOR * (sigma + 1));
    }

    #[test]
    fn route_with_isolated_vertices() {
        let d = drawing(
            vec![1, 2, 3, 4],
            vec![(1, 2)],
            vec![(1, 0, 0), (2, 3, 0), (3, 8, 1), (4, 14, 0)],
        );
        let (ctx, route) = run_route(&d, &[0, 1, 2]);
        let (full, seq) = assemble_route_drawing(&d, &ctx, &route).unwrap();
        assert!(validate_planar(&full).is_empty());
        for comp in 0..3 {
            let members: BTreeSet<VertexId> =
                d.graph().components()[comp].iter().copied().collect();
            assert!(check_right_of(&full, &seq, &members).unwrap());
        }
    }

    #[test]
    fn route_detours_around_pending_component() {
        // Four components on a line, visited in an order that forces the
        // first hop to pass a pending component.
        let d = drawing(
            vec![1, 2, 3, 4, 5, 6, 7, 8],
            vec![(1, 2), (3, 4), (5, 6), (7, 8)],
            vec![
                (1, 0, 0),
                (2, 2, 0),
                (3, 10, 0),
                (4, 12, 0),
                (5, 20, 0),
                (6, 22, 0),
                (7, 30, 0),
                (8, 32, 0),
            ],
        );
        // Order 0, 2, 1, 3: the hop from 0 to 2 passes the pending
        // component 1 and must detour around it.
        let (ctx, route) = run_route(&d, &[0, 2, 1, 3]);
        let (full, seq) = assemble_route_drawing(&d, &ctx, &route).unwrap();
        assert!(validate_planar(&full).is_empty());
        for comp in 0..4 {
            let members: BTreeSet<VertexId> =
                d.graph().components()[comp].iter().copied().collect();
            assert!(check_right_of(&full, &seq, &members).unwrap());
        }
        let table = cost_table(&ctx.walk, &ctx.participants).unwrap();
        table.verify_telescoping().unwrap();
        let sigma = table.cost_between(0, 2) as usize;
        assert!(route.hops[0].len() <= ROUTE_BUDGET_FACTOR * (sigma + 1));
        assert!(route.hops[0].len() > 4, "detour must spend vertices");
    }

    #[test]
    fn right_of_negative_witness() {
        // A path 1-2-3 with connector edges threaded through the corner at 2
        // so that the component's edges separate the route's neighbors.
        let d = drawing(
            vec![1, 2, 3, 10, 11],
            vec![(1, 2), (2, 3)],
            vec![(1, 0, 0), (2, 2, 1), (3, 4, 0), (10, 2, 4), (11, 2, -2)],
        );
        let g = d.graph().extended(&[], &[(10, 2), (2, 11)]).unwrap();
        let full = PlanarDrawing::new(Arc::new(g), d.positions().clone()).unwrap();
        assert!(validate_planar(&full).is_empty());
        let members: BTreeSet<VertexId> = [1, 2, 3].into_iter().collect();
        assert_eq!(check_right_of(&full, &[10, 2, 11], &members).unwrap(), false);
        // A route that stays on one side: neighbors consecutive.
        let d2 = drawing(
            vec![1, 2, 3, 10, 11],
            vec![(1, 2), (2, 3)],
            vec![(1, 0, 0), (2, 2, 1), (3, 4, 0), (10, 1, 4), (11, 3, 4)],
        );
        let g2 = d2.graph().extended(&[], &[(10, 2), (2, 11)]).unwrap();
        let full2 = PlanarDrawing::new(Arc::new(g2), d2.positions().clone()).unwrap();
        assert!(validate_planar(&full2).is_empty());
        assert_eq!(check_right_of(&full2, &[10, 2, 11], &members).unwrap(), true);
        // Isolated vertex: the rotation condition is vacuous.
        let members10: BTreeSet<VertexId> = [10].into_iter().collect();
        assert!(check_right_of(&full2, &[10, 2, 11], &members10).unwrap());
        // Component not on the route at all: error.
        assert!(check_right_of(&full2, &[10, 11], &members).is_err());
    }

    #[test]
    fn route_mixed_shapes() {
        // Triangle, bare edge, isolated vertex; scrambled order.
        let d = drawing(
            vec![1, 2, 3, 4, 5, 6],
            vec![(1, 2), (2, 3), (1, 3), (4, 5)],
            vec![(1, 0, 0), (2, 4, 0), (3, 0, 4), (4, 10, 0), (5, 13, 2), (6, 20, 0)],
        );
        let (ctx, route) = run_route(&d, &[1, 0, 2]);
        let (full, seq) = assemble_route_drawing(&d, &ctx, &route).unwrap();
        assert!(validate_planar(&full).is_empty());
        for comp in 0..3 {
            let members: BTreeSet<VertexId> =
                d.graph().components()[comp].iter().copied().collect();
            assert!(check_right_of(&full, &seq, &members).unwrap());
        }
    }

    #[test]
    fn single_participant_route_is_a_point() {
        let d = drawing(vec![1, 2], vec![(1, 2)], vec![(1, 0, 0), (2, 1, 0)]);
        let ca = connect_components(&d).unwrap();
        let emb = embed_unchecked(&d);
        let (corner, blen) = attachment_corner(&emb, &d, 0);
        let mut walk = ca.boundary.clone();
        let pos = corner_position(&walk, &corner).unwrap();
        walk.rotate_left(pos);
        let ctx = RunContext {
            base: d.clone(),
            scaffold: ca.drawing.clone(),
            walk,
            participants: vec![Participant { comp: 0, corner, boundary_len: blen }],
            positions: vec![0],
            comp_walks: vec![Some(
                emb.walks()[emb.outer_walk_of_component(0).unwrap()].darts.clone(),
            )],
        };
        let route = draw_route(&ctx, &[0], &ClearanceSchedule::new(scalar(1), 0)).unwrap();
        assert!(route.hops.is_empty());
    }
}
