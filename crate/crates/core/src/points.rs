//! Planar spanning paths through point sets in a prescribed order.
//!
//! This is the edge-free special case of the augmentation: each hop between
//! consecutive points costs a number of extra vertices proportional to the
//! difference of their horizontal ranks. The construction keeps a horizontal
//! baseline below everything plus one downward-opening cone per unvisited
//! point; every hop descends from the current point, walks along the
//! baseline taking a three-vertex excursion around each intervening cone,
//! and ascends into the target's cone.

use std::collections::BTreeMap;
use std::sync::Arc;

use num::{One, Signed, Zero};

use crate::drawing::PlanarDrawing;
use crate::error::{Error, Result};
use crate::geom::{segment_clip_convex, Point2, Segment};
use crate::graph::{LabelledGraph, VertexId};
use crate::linf::{spanning_path, GridPoint};
use crate::scalar::{scalar, Scalar};

/// Extra vertices per hop never exceed `HOP_BUDGET_FACTOR * (rank gap + 1)`.
pub const HOP_BUDGET_FACTOR: usize = 4;

/// Horizontal ranks per drawing: `rank[i][v]` counts the points of drawing
/// `i` lexicographically left of point `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankTable {
    pub ranks: Vec<Vec<usize>>,
}

/// Ranks within each drawing. Coincident x-coordinates are disambiguated by
/// the symbolic shear, realized as lexicographic (x, y) comparison.
pub fn compute_ranks(drawings: &[Vec<Point2>]) -> RankTable {
    let ranks = drawings
        .iter()
        .map(|pts| {
            let mut idx: Vec<usize> = (0..pts.len()).collect();
            idx.sort_by(|&a, &b| (&pts[a].x, &pts[a].y).cmp(&(&pts[b].x, &pts[b].y)));
            let mut rank = vec![0usize; pts.len()];
            for (pos, &i) in idx.iter().enumerate() {
                rank[i] = pos;
            }
            rank
        })
        .collect();
    RankTable { ranks }
}

/// One downward-opening cone: apex plus half-width per unit of depth.
#[derive(Debug, Clone)]
pub struct Cone {
    pub apex: Point2,
    pub spread: Scalar,
}

impl Cone {
    fn half_width_at(&self, y: &Scalar) -> Scalar {
        &self.spread * (&self.apex.y - y)
    }

    /// The cone clipped to the halfplane above `baseline`, as a CCW triangle.
    fn clipped(&self, baseline: &Scalar) -> Vec<Point2> {
        let w = self.half_width_at(baseline);
        vec![
            Point2::new(&self.apex.x - &w, baseline.clone()),
            Point2::new(&self.apex.x + &w, baseline.clone()),
            self.apex.clone(),
        ]
    }

    pub fn contains(&self, p: &Point2, strict: bool) -> bool {
        if p.y > self.apex.y || (strict && p.y == self.apex.y) {
            return false;
        }
        let w = self.half_width_at(&p.y);
        let dx = (&p.x - &self.apex.x).abs();
        if strict {
            dx < w
        } else {
            dx <= w
        }
    }

    fn translate_down(&mut self, by: &Scalar) {
        self.apex.y = &self.apex.y - by;
    }
}

/// Construction state: the baseline, the pending cones, and the path so far.
/// All conditions are exact and checkable after every extension.
#[derive(Debug, Clone)]
pub struct CorridorState {
    /// Points in visit order (already sheared if shearing was needed).
    pts: Vec<Point2>,
    baseline: Scalar,
    step_drop: Scalar,
    /// Cone per visit position; retired entries are None.
    cones: Vec<Option<Cone>>,
    visited: usize,
    route: Vec<Point2>,
    hop_interiors: Vec<Vec<Point2>>,
}

impl CorridorState {
    pub fn route(&self) -> &[Point2] {
        &self.route
    }

    pub fn hops(&self) -> &[Vec<Point2>] {
        &self.hop_interiors
    }

    pub fn baseline(&self) -> &Scalar {
        &self.baseline
    }

    pub fn pending_cones(&self) -> impl Iterator<Item = (usize, &Cone)> {
        self.cones
            .iter()
            .enumerate()
            .filter_map(|(i, c)| c.as_ref().map(|c| (i, c)))
    }

    /// Exact check of the construction invariant: apexes sit vertically
    /// above their points; each cone holds its point, its downward ray, and
    /// no other; cones are pairwise disjoint above the baseline; the path
    /// avoids every pending cone and meets the current one only at its apex;
    /// and the baseline stays below the path.
    pub fn audit(&self) -> std::result::Result<(), String> {
        let live: Vec<(usize, &Cone)> = self.pending_cones().collect();
        for &(j, cone) in &live {
            let v = &self.pts[j];
            if cone.apex.x != v.x || cone.apex.y < v.y {
                return Err(format!("apex of cone {j} is not vertically above its point"));
            }
            if !cone.contains(v, false) {
                return Err(format!("cone {j} does not contain its point"));
            }
            let foot = Point2::new(v.x.clone(), self.baseline.clone());
            if !cone.contains(&foot, false) {
                return Err(format!("cone {j} misses the downward ray of its point"));
            }
            for (m, q) in self.pts.iter().enumerate() {
                if m != j && cone.contains(q, false) {
                    return Err(format!("cone {j} contains foreign point {m}"));
                }
            }
        }
        for (a, &(i, ci)) in live.iter().enumerate() {
            for &(j, cj) in &live[a + 1..] {
                let ti = ci.clipped(&self.baseline);
                let tj = cj.clipped(&self.baseline);
                if !crate::geom::convex_disjoint(&ti, &tj) {
                    return Err(format!("cones {i} and {j} intersect above the baseline"));
                }
            }
        }
        // Path versus cones: the only contact allowed is the apex of the
        // cone whose apex is the current path endpoint.
        for w in self.route.windows(2) {
            let seg = Segment::new(w[0].clone(), w[1].clone());
            for &(j, cone) in &live {
                let tri = cone.clipped(&self.baseline);
                if let Some((t0, t1)) = segment_clip_convex(&seg, &tri) {
                    if t0 > t1 {
                        continue;
                    }
                    if t0 < t1 {
                        return Err(format!("path passes through cone {j}"));
                    }
                    let touch = seg.at(&t0);
                    let apex_touch = touch == cone.apex && cone.apex == self.pts[j];
                    if !apex_touch {
                        return Err(format!("path touches cone {j} away from its apex"));
                    }
                }
            }
        }
        for p in &self.route {
            if p.y <= self.baseline {
                return Err("baseline is not strictly below the path".into());
            }
        }
        Ok(())
    }
}

/// A planar path visiting the points in the given order.
#[derive(Debug, Clone)]
pub struct OrderedPath {
    /// Visit order (indices into the input points).
    pub order: Vec<usize>,
    /// Interior vertices of each hop, in path direction.
    pub hops: Vec<Vec<Point2>>,
}

impl OrderedPath {
    /// The full polyline including the visited points themselves.
    pub fn polyline(&self, points: &[Point2]) -> Vec<Point2> {
        let mut out = Vec::new();
        for (h, w) in self.order.windows(2).enumerate() {
            out.push(points[w[0]].clone());
            out.extend(self.hops[h].iter().cloned());
        }
        out.push(points[*self.order.last().unwrap()].clone());
        out
    }
}

/// Draw a planar path connecting `points` in `order`, with at most
/// `HOP_BUDGET_FACTOR * (rank gap + 1)` interior vertices per hop. The
/// returned state allows exact invariant audits; `audit_each_step` runs them
/// after every extension.
pub fn draw_ordered_path(
    points: &[Point2],
    order: &[usize],
    audit_each_step: bool,
) -> Result<OrderedPath> {
    let n = points.len();
    if order.len() != n {
        return Err(Error::BadParameter("order is not a permutation".into()));
    }
    let mut seen = vec![false; n];
    for &i in order {
        if i >= n || seen[i] {
            return Err(Error::BadParameter("order is not a permutation".into()));
        }
        seen[i] = true;
    }
    {
        let mut sorted: Vec<&Point2> = points.iter().collect();
        sorted.sort();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::BadParameter("duplicate points".into()));
        }
    }
    if n == 0 {
        return Ok(OrderedPath { order: Vec::new(), hops: Vec::new() });
    }
    if n == 1 {
        return Ok(OrderedPath { order: order.to_vec(), hops: Vec::new() });
    }
    if n == 2 {
        // A single straight edge suffices: no other point can lie on it.
        return Ok(OrderedPath {
            order: order.to_vec(),
            hops: vec![Vec::new()],
        });
    }

    // Shear so x-coordinates are strictly increasing in lexicographic order.
    let theta = shear_factor(points);
    let sheared: Vec<Point2> = points
        .iter()
        .map(|p| Point2::new(&p.x + &theta * &p.y, p.y.clone()))
        .collect();

    let mut state = init_state(&sheared, order)?;
    for step in 0..(n - 1) {
        extend(&mut state, step)?;
        if audit_each_step {
            state
                .audit()
                .map_err(|m| Error::BadParameter(format!("invariant failed after hop {step}: {m}")))?;
        }
    }

    // Undo the shear on the interior vertices.
    let hops = state
        .hop_interiors
        .iter()
        .map(|hop| {
            hop.iter()
                .map(|p| Point2::new(&p.x - &theta * &p.y, p.y.clone()))
                .collect()
        })
        .collect();
    Ok(OrderedPath { order: order.to_vec(), hops })
}

fn shear_factor(points: &[Point2]) -> Scalar {
    let mut xs: Vec<&Scalar> = points.iter().map(|p| &p.x).collect();
    xs.sort();
    let distinct = xs.windows(2).all(|w| w[0] != w[1]);
    if distinct {
        return Scalar::zero();
    }
    let mut min_gap: Option<Scalar> = None;
    for w in xs.windows(2) {
        if w[0] != w[1] {
            let gap = w[1] - w[0];
            min_gap = Some(min_gap.map_or(gap.clone(), |m: Scalar| m.min(gap)));
        }
    }
    let gap = min_gap.unwrap_or_else(Scalar::one);
    let ys: Vec<&Scalar> = points.iter().map(|p| &p.y).collect();
    let span = ys.iter().max().map(|hi| {
        let lo = ys.iter().min().unwrap();
        *hi - *lo
    });
    let span = span.unwrap_or_else(Scalar::zero);
    gap / (scalar(2) * (span + scalar(1)))
}

fn init_state(pts_by_label: &[Point2], order: &[usize]) -> Result<CorridorState> {
    // Reindex points by visit position.
    let pts: Vec<Point2> = order.iter().map(|&i| pts_by_label[i].clone()).collect();
    let n = pts.len();
    let y_min = pts.iter().map(|p| &p.y).min().unwrap().clone();
    let y_max = pts.iter().map(|p| &p.y).max().unwrap().clone();
    let height = scalar(1) + &y_max - &y_min;

    let mut xs: Vec<Scalar> = pts.iter().map(|p| p.x.clone()).collect();
    xs.sort();
    let mut gap: Option<Scalar> = None;
    for w in xs.windows(2) {
        let g = &w[1] - &w[0];
        debug_assert!(g.is_positive(), "sheared x-coordinates must be distinct");
        gap = Some(gap.map_or(g.clone(), |m: Scalar| m.min(g)));
    }
    let gap = gap.ok_or_else(|| Error::BadParameter("need at least two points".into()))?;

    let baseline = &y_min - scalar(1);
    let apex_y = &y_max + &height;
    let base_half_width = &gap / scalar(4);
    // n baseline translations in total stay below height/4.
    let step_drop = &height / (scalar(4) * scalar(n as i64));

    let mut cones = Vec::with_capacity(n);
    for (i, p) in pts.iter().enumerate() {
        let apex = if i == 0 {
            p.clone()
        } else {
            Point2::new(p.x.clone(), apex_y.clone())
        };
        let depth = &apex.y - &baseline;
        debug_assert!(depth.is_positive());
        cones.push(Some(Cone {
            spread: &base_half_width / &depth,
            apex,
        }));
    }
    Ok(CorridorState {
        route: vec![pts[0].clone()],
        pts,
        baseline,
        step_drop,
        cones,
        visited: 1,
        hop_interiors: Vec::new(),
    })
}

/// Extend the path from visit position `step` to `step + 1`.
fn extend(state: &mut CorridorState, step: usize) -> Result<()> {
    let cur = step;
    let next = step + 1;
    let n = state.pts.len();

    // Lower the target cone until its apex sits on the target point.
    {
        let target = state.pts[next].clone();
        let cone = state.cones[next].as_mut().expect("target cone live");
        cone.apex = target;
    }

    let (v_cur, v_next) = (state.pts[cur].clone(), state.pts[next].clone());
    let rightward = v_next.x > v_cur.x;
    let cone_cur = state.cones[cur].clone().expect("current cone live");
    let cone_next = state.cones[next].clone().expect("target cone live");

    let y_b = state.baseline.clone();
    let side = |cone: &Cone, toward_right: bool| -> Point2 {
        let w = cone.half_width_at(&y_b);
        let x = if toward_right { &cone.apex.x + &w } else { &cone.apex.x - &w };
        Point2::new(x, y_b.clone())
    };
    // Descend the side of the current cone facing the target; ascend the
    // side of the target cone facing the current point.
    let descent = side(&cone_cur, rightward);
    let ascent = side(&cone_next, !rightward);

    let mut interior = vec![descent.clone()];
    // Excursions around every pending cone strictly between the two feet.
    let (lo, hi) = if rightward {
        (descent.x.clone(), ascent.x.clone())
    } else {
        (ascent.x.clone(), descent.x.clone())
    };
    let mut between: Vec<(usize, &Cone)> = state
        .cones
        .iter()
        .enumerate()
        .skip(next + 1)
        .filter_map(|(i, c)| c.as_ref().map(|c| (i, c)))
        .filter(|(_, c)| c.apex.x > lo && c.apex.x < hi)
        .collect();
    between.sort_by(|a, b| a.1.apex.x.cmp(&b.1.apex.x));
    if !rightward {
        between.reverse();
    }
    for (_, cone) in between {
        let first = side(cone, !rightward);
        let second = side(cone, rightward);
        interior.push(first);
        interior.push(cone.apex.clone());
        interior.push(second);
    }
    interior.push(ascent);

    state.route.extend(interior.iter().cloned());
    state.route.push(v_next);
    state.hop_interiors.push(interior);
    state.visited = next + 1;

    // Restore the invariant: retire the departed cone, narrow the arrival
    // cone, and translate the baseline and all pending cones down one step.
    state.cones[cur] = None;
    if let Some(c) = state.cones[next].as_mut() {
        c.spread = &c.spread / scalar(2);
    }
    state.baseline = &state.baseline - &state.step_drop;
    for i in (next + 1)..n {
        if let Some(c) = state.cones[i].as_mut() {
            c.translate_down(&state.step_drop);
        }
    }
    Ok(())
}

/// Result of augmenting `k` drawings of an edge-free graph: a shared visit
/// order, per-hop budgets, and per-drawing realizations already padded to
/// identical hop sizes.
#[derive(Debug, Clone)]
pub struct PointAugmentation {
    pub order: Vec<usize>,
    pub hop_budgets: Vec<usize>,
    /// `routes[i][j]`: interior vertices of hop `j` in drawing `i`.
    pub routes: Vec<Vec<Vec<Point2>>>,
}

/// Compatible augmentation of `k` point sets sharing labels: the visit order
/// comes from the spanning path over the rank vectors, each drawing realizes
/// it planarly, and shorter hops are padded with collinear subdivision points
/// so all drawings realize the same abstract path.
pub fn augment_points(drawings: &[Vec<Point2>], audit: bool) -> Result<PointAugmentation> {
    let k = drawings.len();
    if k == 0 {
        return Err(Error::BadParameter("no drawings".into()));
    }
    let n = drawings[0].len();
    for d in drawings {
        if d.len() != n {
            return Err(Error::BadInstance("drawings disagree on the label set".into()));
        }
    }
    if n == 0 {
        return Ok(PointAugmentation { order: Vec::new(), hop_budgets: Vec::new(), routes: vec![Vec::new(); k] });
    }

    let ranks = compute_ranks(drawings);
    let grid: Vec<GridPoint> = (0..n)
        .map(|v| {
            GridPoint::new(
                (0..k).map(|i| scalar(ranks.ranks[i][v] as i64)).collect(),
                v as u32,
            )
        })
        .collect();
    let path = spanning_path(&grid)?;
    let order: Vec<usize> = path.order.clone();

    let mut routes: Vec<Vec<Vec<Point2>>> = Vec::with_capacity(k);
    for pts in drawings {
        let drawn = draw_ordered_path(pts, &order, audit)?;
        routes.push(drawn.hops);
    }

    // Per-hop budgets and collinear padding to the maximum realized count.
    let hops = n - 1;
    let mut hop_budgets = vec![0usize; hops];
    for route in &routes {
        for (j, hop) in route.iter().enumerate() {
            hop_budgets[j] = hop_budgets[j].max(hop.len());
        }
    }
    for (i, route) in routes.iter_mut().enumerate() {
        let pts = &drawings[i];
        for (j, hop) in route.iter_mut().enumerate() {
            let target = hop_budgets[j];
            if hop.len() < target {
                let tail_start = hop
                    .last()
                    .cloned()
                    .unwrap_or_else(|| pts[order[j]].clone());
                let tail_end = pts[order[j + 1]].clone();
                pad_segment(hop, &tail_start, &tail_end, target - hop.len());
            }
        }
    }
    Ok(PointAugmentation { order, hop_budgets, routes })
}

/// Insert `extra` evenly spaced points strictly inside the segment.
fn pad_segment(hop: &mut Vec<Point2>, from: &Point2, to: &Point2, extra: usize) {
    let denom = scalar((extra + 1) as i64);
    for s in 1..=extra {
        let t = scalar(s as i64) / &denom;
        hop.push(from.lerp(to, &t));
    }
}

/// Assemble one drawing's route into a drawing of points plus path, for
/// validation: vertex `v` is point `v`; interior vertices get fresh ids.
pub fn route_drawing(points: &[Point2], aug: &PointAugmentation, drawing: usize) -> Result<PlanarDrawing> {
    let n = points.len();
    let mut vertices: Vec<VertexId> = (0..n as u32).collect();
    let mut pos: BTreeMap<VertexId, Point2> = (0..n).map(|v| (v as u32, points[v].clone())).collect();
    let mut edges: Vec<(VertexId, VertexId)> = Vec::new();
    let mut fresh = n as u32;
    for (j, w) in aug.order.windows(2).enumerate() {
        let mut prev = w[0] as u32;
        for p in &aug.routes[drawing][j] {
            vertices.push(fresh);
            pos.insert(fresh, p.clone());
            edges.push((prev, fresh));
            prev = fresh;
            fresh += 1;
        }
        edges.push((prev, w[1] as u32));
    }
    let g = Arc::new(LabelledGraph::new(vertices, edges)?);
    PlanarDrawing::new(g, pos)
}

/// Largest `|rank difference|` of a hop across all drawings.
pub fn hop_rank_gap(ranks: &RankTable, a: usize, b: usize) -> usize {
    ranks
        .ranks
        .iter()
        .map(|r| r[a].abs_diff(r[b]))
        .max()
        .unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::drawing::validate_planar;

    fn p(x: i64, y: i64) -> Point2 {
        Point2::from_ints(x, y)
    }

    #[test]
    fn rank_examples() {
        let t = compute_ranks(&[vec![p(5, 0), p(1, 0), p(9, 0)]]);
        assert_eq!(t.ranks[0], vec![1, 0, 2]);
        let t = compute_ranks(&[vec![p(1, 0), p(2, 0), p(3, 0)]]);
        assert_eq!(t.ranks[0], vec![0, 1, 2]);
        let t = compute_ranks(&[
            vec![p(1, 0), p(2, 0), p(3, 0)],
            vec![p(3, 0), p(2, 0), p(1, 0)],
        ]);
        assert_eq!(t.ranks[0], vec![0, 1, 2]);
        assert_eq!(t.ranks[1], vec![2, 1, 0]);
    }

    #[test]
    fn single_point_path() {
        let path = draw_ordered_path(&[p(3, 4)], &[0], true).unwrap();
        assert!(path.hops.is_empty());
        assert_eq!(path.polyline(&[p(3, 4)]).len(), 1);
    }

    #[test]
    fn duplicate_points_rejected() {
        assert!(draw_ordered_path(&[p(1, 1), p(1, 1)], &[0, 1], false).is_err());
    }

    fn assert_route_valid(points: &[Point2], order: &[usize]) {
        let path = draw_ordered_path(points, order, true).unwrap();
        let ranks = compute_ranks(&[points.to_vec()]);
        for (j, w) in order.windows(2).enumerate() {
            let gap = ranks.ranks[0][w[0]].abs_diff(ranks.ranks[0][w[1]]);
            assert!(
                path.hops[j].len() <= HOP_BUDGET_FACTOR * (gap + 1),
                "hop {j} used {} vertices for gap {gap}",
                path.hops[j].len()
            );
        }
        let aug = PointAugmentation {
            order: order.to_vec(),
            hop_budgets: path.hops.iter().map(|h| h.len()).collect(),
            routes: vec![path.hops.clone()],
        };
        let d = route_drawing(points, &aug, 0).unwrap();
        assert!(validate_planar(&d).is_empty(), "route plus points must stay planar");
    }

    #[test]
    fn collinear_left_to_right() {
        let pts: Vec<Point2> = (0..6).map(|i| p(2 * i, 0)).collect();
        assert_route_valid(&pts, &[0, 1, 2, 3, 4, 5]);
    }

    #[test]
    fn collinear_scrambled() {
        let pts: Vec<Point2> = (0..6).map(|i| p(2 * i, 0)).collect();
        assert_route_valid(&pts, &[3, 0, 5, 1, 4, 2]);
    }

    #[test]
    fn random_orders_stay_planar() {
        let mut seed: u64 = 7;
        let mut next = || {
            seed ^= seed << 13;
            seed ^= seed >> 7;
            seed ^= seed << 17;
            seed
        };
        for trial in 0..12 {
            let n = 3 + (trial % 6) as usize;
            let mut pts = Vec::new();
            while pts.len() < n {
                let q = p((next() % 40) as i64, (next() % 25) as i64);
                if !pts.contains(&q) {
                    pts.push(q);
                }
            }
            let mut order: Vec<usize> = (0..n).collect();
            for i in (1..n).rev() {
                let j = (next() % (i as u64 + 1)) as usize;
                order.swap(i, j);
            }
            assert_route_valid(&pts, &order);
        }
    }

    #[test]
    fn shared_x_coordinates_sheared() {
        let pts = vec![p(0, 0), p(0, 5), p(3, 2), p(3, 9)];
        assert_route_valid(&pts, &[2, 0, 3, 1]);
    }

    #[test]
    fn two_point_instance_is_single_edge() {
        let drawings = vec![
            vec![p(0, 0), p(5, 1)],
            vec![p(4, 2), p(1, 1)],
        ];
        let aug = augment_points(&drawings, true).unwrap();
        assert_eq!(aug.hop_budgets, vec![0]);
        assert!(aug.routes.iter().all(|r| r[0].is_empty()));
    }

    #[test]
    fn reversed_drawings_augment() {
        let a: Vec<Point2> = (0..8).map(|i| p(3 * i, (i % 3) * 2)).collect();
        let b: Vec<Point2> = a.iter().rev().cloned().collect();
        // Align labels: drawing b places label v at the mirrored point.
        let drawings = vec![a.clone(), b];
        let aug = augment_points(&drawings, true).unwrap();
        for i in 0..2 {
            let d = route_drawing(&drawings[i], &aug, i).unwrap();
            assert!(validate_planar(&d).is_empty());
        }
        // Hop budgets respect the max rank gap over both drawings.
        let ranks = compute_ranks(&drawings);
        for (j, w) in aug.order.windows(2).enumerate() {
            let gap = hop_rank_gap(&ranks, w[0], w[1]);
            assert!(aug.hop_budgets[j] <= HOP_BUDGET_FACTOR * (gap + 1));
        }
    }

    #[test]
    fn padded_routes_share_hop_sizes() {
        let a: Vec<Point2> = (0..7).map(|i| p(4 * i, (i % 2) * 3)).collect();
        let mut bpts = a.clone();
        bpts.reverse();
        let drawings = vec![a, bpts];
        let aug = augment_points(&drawings, false).unwrap();
        for j in 0..aug.hop_budgets.len() {
            assert_eq!(aug.routes[0][j].len(), aug.hop_budgets[j]);
            assert_eq!(aug.routes[1][j].len(), aug.hop_budgets[j]);
        }
        // Padding preserves planarity.
        for i in 0..2 {
            let d = route_drawing(&drawings[i], &aug, i).unwrap();
            assert!(validate_planar(&d).is_empty());
        }
    }
}
