//! 2D points, segments, and the exact predicates everything else leans on.

use std::cmp::Ordering;

use num::{Signed, Zero};

use crate::scalar::{scalar, Scalar};

/// A point (or direction vector) with exact rational coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point2 {
    pub x: Scalar,
    pub y: Scalar,
}

impl Point2 {
    pub fn new(x: Scalar, y: Scalar) -> Self {
        Point2 { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Point2::new(scalar(x), scalar(y))
    }

    pub fn add(&self, v: &Point2) -> Point2 {
        Point2::new(&self.x + &v.x, &self.y + &v.y)
    }

    pub fn sub(&self, v: &Point2) -> Point2 {
        Point2::new(&self.x - &v.x, &self.y - &v.y)
    }

    pub fn scale(&self, s: &Scalar) -> Point2 {
        Point2::new(&self.x * s, &self.y * s)
    }

    /// Point at parameter `t` on the segment from `self` to `other`.
    pub fn lerp(&self, other: &Point2, t: &Scalar) -> Point2 {
        self.add(&other.sub(self).scale(t))
    }

    pub fn cross(&self, other: &Point2) -> Scalar {
        &self.x * &other.y - &self.y * &other.x
    }

    pub fn dot(&self, other: &Point2) -> Scalar {
        &self.x * &other.x + &self.y * &other.y
    }

    pub fn rot90_ccw(&self) -> Point2 {
        Point2::new(-self.y.clone(), self.x.clone())
    }

    /// L1 norm; used to pick rational stand-ins for unit vectors.
    pub fn l1(&self) -> Scalar {
        self.x.abs() + self.y.abs()
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }
}

/// Squared Euclidean distance (exact).
pub fn dist2(p: &Point2, q: &Point2) -> Scalar {
    let d = p.sub(q);
    d.dot(&d)
}

/// Closed segment between two distinct points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Segment {
    pub a: Point2,
    pub b: Point2,
}

impl Segment {
    pub fn new(a: Point2, b: Point2) -> Self {
        debug_assert!(a != b, "degenerate segment");
        Segment { a, b }
    }

    pub fn dir(&self) -> Point2 {
        self.b.sub(&self.a)
    }

    pub fn at(&self, t: &Scalar) -> Point2 {
        self.a.lerp(&self.b, t)
    }
}

/// Sign of the signed area of the triangle `pqr`: `+1` for counterclockwise,
/// `0` for collinear, `-1` for clockwise. Exact.
pub fn orient(p: &Point2, q: &Point2, r: &Point2) -> i8 {
    let cross = q.sub(p).cross(&r.sub(p));
    match cross.cmp(&Scalar::zero()) {
        Ordering::Greater => 1,
        Ordering::Equal => 0,
        Ordering::Less => -1,
    }
}

/// True iff `p` lies on the closed segment `s`.
pub fn point_on_segment(p: &Point2, s: &Segment) -> bool {
    if orient(&s.a, &s.b, p) != 0 {
        return false;
    }
    let lo_x = s.a.x.clone().min(s.b.x.clone());
    let hi_x = s.a.x.clone().max(s.b.x.clone());
    let lo_y = s.a.y.clone().min(s.b.y.clone());
    let hi_y = s.a.y.clone().max(s.b.y.clone());
    lo_x <= p.x && p.x <= hi_x && lo_y <= p.y && p.y <= hi_y
}

/// True iff `p` lies strictly between the endpoints of `s`.
pub fn point_in_open_segment(p: &Point2, s: &Segment) -> bool {
    point_on_segment(p, s) && *p != s.a && *p != s.b
}

/// Exact classification of how two closed segments interact.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SegmentInteraction {
    Disjoint,
    /// The segments meet in exactly one point which is an endpoint of both.
    ShareEndpointOnly,
    /// Interiors cross transversally in a single point.
    Cross,
    /// Collinear with a common sub-segment of positive length.
    Overlap,
    /// An endpoint of one lies in the open interior of the other.
    EndpointInInterior,
}

pub fn segments_properly_interact(s: &Segment, t: &Segment) -> SegmentInteraction {
    use SegmentInteraction::*;

    let d1 = orient(&s.a, &s.b, &t.a);
    let d2 = orient(&s.a, &s.b, &t.b);
    let d3 = orient(&t.a, &t.b, &s.a);
    let d4 = orient(&t.a, &t.b, &s.b);

    if d1 * d2 < 0 && d3 * d4 < 0 {
        return Cross;
    }

    if d1 == 0 && d2 == 0 {
        // Collinear: compare 1D intervals along the dominant axis.
        let key = |p: &Point2| -> (Scalar, Scalar) { (p.x.clone(), p.y.clone()) };
        let (s_lo, s_hi) = minmax(key(&s.a), key(&s.b));
        let (t_lo, t_hi) = minmax(key(&t.a), key(&t.b));
        let lo = s_lo.clone().max(t_lo.clone());
        let hi = s_hi.clone().min(t_hi.clone());
        return match lo.cmp(&hi) {
            Ordering::Greater => Disjoint,
            Ordering::Less => Overlap,
            Ordering::Equal => {
                // Single shared point; decide whether it is interior to either.
                let p = Point2::new(lo.0, lo.1);
                if (p == s.a || p == s.b) && (p == t.a || p == t.b) {
                    ShareEndpointOnly
                } else {
                    EndpointInInterior
                }
            }
        };
    }

    if s.a == t.a || s.a == t.b || s.b == t.a || s.b == t.b {
        // Distinct supporting lines meet in at most one point, the shared one.
        return ShareEndpointOnly;
    }
    if point_in_open_segment(&t.a, s)
        || point_in_open_segment(&t.b, s)
        || point_in_open_segment(&s.a, t)
        || point_in_open_segment(&s.b, t)
    {
        return EndpointInInterior;
    }
    Disjoint
}

fn minmax<T: Ord>(a: T, b: T) -> (T, T) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Convex hull in counterclockwise order starting at the lexicographically
/// smallest point. Collinear boundary points are dropped; a singleton input
/// yields a single point, collinear input the two extremes.
pub fn convex_hull(points: &[Point2]) -> Vec<Point2> {
    let mut pts: Vec<Point2> = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() <= 2 {
        return pts;
    }
    let mut lower: Vec<Point2> = Vec::new();
    for p in &pts {
        while lower.len() >= 2 && orient(&lower[lower.len() - 2], &lower[lower.len() - 1], p) <= 0
        {
            lower.pop();
        }
        lower.push(p.clone());
    }
    let mut upper: Vec<Point2> = Vec::new();
    for p in pts.iter().rev() {
        while upper.len() >= 2 && orient(&upper[upper.len() - 2], &upper[upper.len() - 1], p) <= 0
        {
            upper.pop();
        }
        upper.push(p.clone());
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    if lower.len() < 2 {
        // All input points collinear; keep the two extremes.
        return vec![pts[0].clone(), pts[pts.len() - 1].clone()];
    }
    lower
}

/// Compare two non-zero direction vectors by counterclockwise angle from the
/// positive x-axis, in `[0, 2pi)`. Exact.
pub fn compare_angle(a: &Point2, b: &Point2) -> Ordering {
    debug_assert!(!a.is_zero() && !b.is_zero());
    let half = |v: &Point2| -> u8 {
        if v.y.is_positive() || (v.y.is_zero() && v.x.is_positive()) {
            0
        } else {
            1
        }
    };
    match half(a).cmp(&half(b)) {
        Ordering::Equal => {
            let c = a.cross(b);
            if c.is_positive() {
                Ordering::Less
            } else if c.is_negative() {
                Ordering::Greater
            } else {
                Ordering::Equal
            }
        }
        other => other,
    }
}

/// True iff direction `d` lies strictly inside the sector swept
/// counterclockwise from `from` to `to` (all non-zero; `from == to` means the
/// full circle minus that single direction).
pub fn dir_strictly_in_ccw_sector(d: &Point2, from: &Point2, to: &Point2) -> bool {
    let same = |u: &Point2, v: &Point2| u.cross(v).is_zero() && u.dot(v).is_positive();
    if same(d, from) || same(d, to) {
        return false;
    }
    if same(from, to) {
        return true;
    }
    let c_ft = from.cross(to);
    if c_ft.is_positive() || (c_ft.is_zero() && from.dot(to).is_negative()) {
        // Sector spans at most pi.
        from.cross(d).is_positive() && d.cross(to).is_positive()
    } else {
        // Reflex sector: complement of the ccw sector from `to` to `from`.
        !(to.cross(d).is_positive() && d.cross(from).is_positive())
    }
}

// ---------------------------------------------------------------------------
// Polygon helpers. A polygon is a closed polyline given by its vertices.
// ---------------------------------------------------------------------------

/// Twice the signed area (shoelace); positive for counterclockwise.
pub fn signed_area2(poly: &[Point2]) -> Scalar {
    let mut acc = Scalar::zero();
    for i in 0..poly.len() {
        let j = (i + 1) % poly.len();
        acc += poly[i].cross(&poly[j]);
    }
    acc
}

pub fn point_on_polygon_boundary(p: &Point2, poly: &[Point2]) -> bool {
    let n = poly.len();
    for i in 0..n {
        let j = (i + 1) % n;
        if poly[i] == poly[j] {
            if *p == poly[i] {
                return true;
            }
            continue;
        }
        if point_on_segment(p, &Segment::new(poly[i].clone(), poly[j].clone())) {
            return true;
        }
    }
    false
}

/// Strict interior test by exact ray crossing (half-open rule); points on the
/// boundary report `false`. Works for weakly-simple walks: an edge traversed
/// twice contributes two crossings which cancel modulo two.
pub fn point_in_polygon_strict(p: &Point2, poly: &[Point2]) -> bool {
    if point_on_polygon_boundary(p, poly) {
        return false;
    }
    let n = poly.len();
    let mut inside = false;
    for i in 0..n {
        let a = &poly[i];
        let b = &poly[(i + 1) % n];
        let a_above = a.y > p.y;
        let b_above = b.y > p.y;
        if a_above != b_above {
            // x coordinate of the crossing with the horizontal line through p
            let t = (&p.y - &a.y) / (&b.y - &a.y);
            let x = &a.x + &t * (&b.x - &a.x);
            if x > p.x {
                inside = !inside;
            }
        }
    }
    inside
}

/// Simple-polygon test: distinct vertices, no degenerate edges, adjacent
/// edges sharing exactly their common endpoint, all other pairs disjoint.
pub fn polygon_is_simple(poly: &[Point2]) -> bool {
    let n = poly.len();
    if n < 3 {
        return false;
    }
    for i in 0..n {
        if poly[i] == poly[(i + 1) % n] {
            return false;
        }
    }
    for i in 0..n {
        let si = Segment::new(poly[i].clone(), poly[(i + 1) % n].clone());
        for j in (i + 1)..n {
            let sj = Segment::new(poly[j].clone(), poly[(j + 1) % n].clone());
            let adjacent = j == i + 1 || (i == 0 && j == n - 1);
            match segments_properly_interact(&si, &sj) {
                SegmentInteraction::Disjoint => {}
                SegmentInteraction::ShareEndpointOnly if adjacent => {}
                _ => return false,
            }
        }
    }
    true
}

/// Clip the parametric segment to a convex polygon (CCW). Returns the
/// parameter interval `[t0, t1]` of the closed intersection, if any.
pub fn segment_clip_convex(seg: &Segment, convex: &[Point2]) -> Option<(Scalar, Scalar)> {
    let mut t0 = Scalar::zero();
    let mut t1 = scalar(1);
    let n = convex.len();
    for i in 0..n {
        let a = &convex[i];
        let b = &convex[(i + 1) % n];
        let edge = b.sub(a);
        // Signed distance factor of p(t) from edge line; >= 0 is inside.
        let f0 = edge.cross(&seg.a.sub(a));
        let f1 = edge.cross(&seg.b.sub(a));
        let df = &f1 - &f0;
        if df.is_zero() {
            if f0.is_negative() {
                return None;
            }
            continue;
        }
        let t = -&f0 / &df;
        if df.is_positive() {
            // Entering the halfplane at t.
            if t > t0 {
                t0 = t;
            }
        } else if t < t1 {
            t1 = t;
        }
        if t0 > t1 {
            return None;
        }
    }
    Some((t0, t1))
}

pub fn point_in_convex(p: &Point2, convex: &[Point2], strict: bool) -> bool {
    let n = convex.len();
    for i in 0..n {
        let a = &convex[i];
        let b = &convex[(i + 1) % n];
        if a == b {
            continue;
        }
        let o = orient(a, b, p);
        if o < 0 || (strict && o == 0) {
            return false;
        }
    }
    true
}

/// True iff the segment meets the open interior of a convex polygon.
pub fn segment_meets_convex_interior(seg: &Segment, convex: &[Point2]) -> bool {
    match segment_clip_convex(seg, convex) {
        None => false,
        Some((t0, t1)) => {
            if t0 >= t1 {
                // Single touching point cannot be interior.
                return t0 == t1 && point_in_convex(&seg.at(&t0), convex, true);
            }
            let mid = (&t0 + &t1) / scalar(2);
            point_in_convex(&seg.at(&mid), convex, true)
        }
    }
}

/// Closed-set disjointness of two convex polygons.
pub fn convex_disjoint(a: &[Point2], b: &[Point2]) -> bool {
    for p in a {
        if point_in_convex(p, b, false) {
            return false;
        }
    }
    for p in b {
        if point_in_convex(p, a, false) {
            return false;
        }
    }
    let na = a.len();
    let nb = b.len();
    for i in 0..na {
        if a[i] == a[(i + 1) % na] {
            continue;
        }
        let si = Segment::new(a[i].clone(), a[(i + 1) % na].clone());
        for j in 0..nb {
            if b[j] == b[(j + 1) % nb] {
                continue;
            }
            let sj = Segment::new(b[j].clone(), b[(j + 1) % nb].clone());
            if segments_properly_interact(&si, &sj) != SegmentInteraction::Disjoint {
                return false;
            }
        }
    }
    true
}

/// Smallest `t` in `[0,1]` at which `seg.at(t)` lies on the closed segment
/// `edge`, if the two meet at all.
pub fn first_hit_param(seg: &Segment, edge: &Segment) -> Option<Scalar> {
    let d1 = seg.dir();
    let d2 = edge.dir();
    let denom = d1.cross(&d2);
    if denom.is_zero() {
        // Parallel. Either disjoint lines or collinear overlap.
        if orient(&seg.a, &seg.b, &edge.a) != 0 {
            return None;
        }
        let proj = |p: &Point2| -> Scalar {
            // Parameter of the orthogonal projection of p on seg's line.
            d1.dot(&p.sub(&seg.a)) / d1.dot(&d1)
        };
        let (lo, hi) = minmax(proj(&edge.a), proj(&edge.b));
        let lo = lo.max(Scalar::zero());
        let hi = hi.min(scalar(1));
        if lo <= hi {
            return Some(lo);
        }
        return None;
    }
    // seg.a + t*d1 == edge.a + u*d2
    let w = edge.a.sub(&seg.a);
    let t = w.cross(&d2) / denom.clone();
    let u = w.cross(&d1) / denom;
    let zero = Scalar::zero();
    let one = scalar(1);
    if t >= zero && t <= one && u >= zero && u <= one {
        Some(t)
    } else {
        None
    }
}
