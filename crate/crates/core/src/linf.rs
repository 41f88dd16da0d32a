//! Spanning paths of point sets under the uniform (l-infinity) metric.
//!
//! The production algorithm is the closest-pair greedy tree followed by a
//! depth-first doubling into a path; for points in `[0,n]^k` the resulting
//! path has length at most a constant times `n * r^(1-1/k)`.

use num::{Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A point of the k-dimensional grid embedding, tagged with the label it
/// stands for (a component or vertex id).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridPoint {
    pub coords: Vec<Scalar>,
    pub label: u32,
}

impl GridPoint {
    pub fn new(coords: Vec<Scalar>, label: u32) -> Self {
        GridPoint { coords, label }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }
}

/// Max-coordinate distance. Errors on dimension mismatch.
pub fn linf_distance(a: &GridPoint, b: &GridPoint) -> Result<Scalar> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch(a.dim(), b.dim()));
    }
    let mut best = Scalar::zero();
    for (x, y) in a.coords.iter().zip(&b.coords) {
        let d = (x - y).abs();
        if d > best {
            best = d;
        }
    }
    Ok(best)
}

/// Spanning tree edge list over point indices.
pub type TreeEdges = Vec<(usize, usize)>;

/// Greedy closest-pair spanning tree: repeatedly join the closest remaining
/// pair and retire one endpoint. Ties break by the labels of the pair.
pub fn greedy_spanning_tree(points: &[GridPoint]) -> Result<TreeEdges> {
    if points.is_empty() {
        return Err(Error::BadParameter("empty point set".into()));
    }
    for p in points {
        if p.dim() != points[0].dim() {
            return Err(Error::DimensionMismatch(points[0].dim(), p.dim()));
        }
    }
    let n = points.len();
    let mut alive: Vec<usize> = (0..n).collect();
    let mut edges = Vec::with_capacity(n - 1);
    while alive.len() > 1 {
        let mut best: Option<(Scalar, usize, usize)> = None;
        for (ai, &i) in alive.iter().enumerate() {
            for &j in &alive[ai + 1..] {
                let d = linf_distance(&points[i], &points[j])?;
                let key = (
                    points[i].label.min(points[j].label),
                    points[i].label.max(points[j].label),
                );
                let better = match &best {
                    None => true,
                    Some((bd, bi, bj)) => {
                        let bkey = (
                            points[*bi].label.min(points[*bj].label),
                            points[*bi].label.max(points[*bj].label),
                        );
                        d < *bd || (d == *bd && key < bkey)
                    }
                };
                if better {
                    best = Some((d, i, j));
                }
            }
        }
        let (_, i, j) = best.unwrap();
        edges.push((i, j));
        // Retire the smaller-label endpoint; the other stays available.
        let gone = if points[i].label < points[j].label { i } else { j };
        alive.retain(|&x| x != gone);
    }
    Ok(edges)
}

pub fn tree_length(points: &[GridPoint], edges: &TreeEdges) -> Result<Scalar> {
    let mut total = Scalar::zero();
    for &(i, j) in edges {
        total += linf_distance(&points[i], &points[j])?;
    }
    Ok(total)
}

/// A visiting order of the points together with per-hop distances.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanningPath {
    /// Indices into the input point list, in visiting order.
    pub order: Vec<usize>,
    pub hop_lengths: Vec<Scalar>,
}

impl SpanningPath {
    pub fn total_length(&self) -> Scalar {
        self.hop_lengths.iter().fold(Scalar::zero(), |a, b| a + b)
    }

    pub fn labels(&self, points: &[GridPoint]) -> Vec<u32> {
        self.order.iter().map(|&i| points[i].label).collect()
    }
}

/// Depth-first traversal of the tree, shortcutting repeated vertices; the
/// triangle inequality makes the result at most twice the tree length.
pub fn tree_to_path(points: &[GridPoint], edges: &TreeEdges) -> Result<SpanningPath> {
    let n = points.len();
    if n == 0 {
        return Err(Error::BadParameter("empty point set".into()));
    }
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(i, j) in edges {
        adj[i].push(j);
        adj[j].push(i);
    }
    for nbrs in &mut adj {
        nbrs.sort_by_key(|&i| points[i].label);
    }
    // Root at the smallest label.
    let root = (0..n).min_by_key(|&i| points[i].label).unwrap();
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    let mut stack = vec![root];
    while let Some(v) = stack.pop() {
        if seen[v] {
            continue;
        }
        seen[v] = true;
        order.push(v);
        for &w in adj[v].iter().rev() {
            if !seen[w] {
                stack.push(w);
            }
        }
    }
    debug_assert_eq!(order.len(), n);
    let mut hop_lengths = Vec::with_capacity(n.saturating_sub(1));
    for w in order.windows(2) {
        hop_lengths.push(linf_distance(&points[w[0]], &points[w[1]])?);
    }
    Ok(SpanningPath { order, hop_lengths })
}

/// Greedy tree plus doubling, end to end. Deterministic given the input.
pub fn spanning_path(points: &[GridPoint]) -> Result<SpanningPath> {
    let tree = greedy_spanning_tree(points)?;
    tree_to_path(points, &tree)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::scalar;

    fn gp(coords: &[i64], label: u32) -> GridPoint {
        GridPoint::new(coords.iter().map(|&c| scalar(c)).collect(), label)
    }

    #[test]
    fn linf_examples() {
        assert_eq!(linf_distance(&gp(&[0, 0], 0), &gp(&[3, 1], 1)).unwrap(), scalar(3));
        assert_eq!(linf_distance(&gp(&[5, 5], 0), &gp(&[5, 5], 1)).unwrap(), scalar(0));
        assert_eq!(
            linf_distance(&gp(&[1, 9, 2], 0), &gp(&[4, 9, 8], 1)).unwrap(),
            scalar(6)
        );
        assert!(linf_distance(&gp(&[1], 0), &gp(&[1, 2], 1)).is_err());
    }

    #[test]
    fn greedy_tree_collinear() {
        let pts = vec![gp(&[0], 0), gp(&[1], 1), gp(&[3], 2)];
        let tree = greedy_spanning_tree(&pts).unwrap();
        assert_eq!(tree_length(&pts, &tree).unwrap(), scalar(3));
        // Point 0 joins point 1, then point 1 joins point 3.
        assert_eq!(tree, vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn greedy_tree_square() {
        // All six pairwise distances equal s under l-infinity; any spanning
        // tree has total 3s, which brute force over all 16 labelled trees
        // confirms (frozen here).
        let s = 5;
        let pts = vec![gp(&[0, 0], 0), gp(&[s, 0], 1), gp(&[s, s], 2), gp(&[0, s], 3)];
        let tree = greedy_spanning_tree(&pts).unwrap();
        assert_eq!(tree_length(&pts, &tree).unwrap(), scalar(3 * s));
    }

    #[test]
    fn star_tree_path() {
        // Star with center label 0: path visits the leaves through the center.
        let pts = vec![gp(&[0, 0], 0), gp(&[-4, 0], 1), gp(&[5, 0], 2)];
        let tree = vec![(0, 1), (0, 2)];
        let path = tree_to_path(&pts, &tree).unwrap();
        assert_eq!(path.total_length(), scalar(4 + 4 + 5));
        // Path-shaped tree: identical traversal, length unchanged.
        let pts = vec![gp(&[0], 0), gp(&[2], 1), gp(&[5], 2)];
        let tree = vec![(0, 1), (1, 2)];
        let path = tree_to_path(&pts, &tree).unwrap();
        assert_eq!(path.order, vec![0, 1, 2]);
        assert_eq!(path.total_length(), scalar(5));
    }

    #[test]
    fn singleton() {
        let pts = vec![gp(&[7, 7], 3)];
        let path = spanning_path(&pts).unwrap();
        assert_eq!(path.order, vec![0]);
        assert!(path.hop_lengths.is_empty());
    }

    #[test]
    fn path_at_most_twice_tree() {
        // Deterministic pseudo-random scatter; exact rational comparison.
        let mut seed: u64 = 0x9e3779b97f4a7c15;
        let mut next = || {
            seed ^= seed << 13;
            seed ^= seed >> 7;
            seed ^= seed << 17;
            (seed % 64) as i64
        };
        for trial in 0..40 {
            let n = 2 + (trial % 9);
            let pts: Vec<GridPoint> = (0..n)
                .map(|i| gp(&[next(), next()], i as u32))
                .collect();
            let tree = greedy_spanning_tree(&pts).unwrap();
            let tlen = tree_length(&pts, &tree).unwrap();
            let path = tree_to_path(&pts, &tree).unwrap();
            assert!(path.total_length() <= scalar(2) * &tlen);
            assert_eq!(path.order.len(), pts.len());
        }
    }

    #[test]
    fn scaling_equivariance() {
        let pts = vec![gp(&[1, 2], 0), gp(&[9, 4], 1), gp(&[3, 3], 2), gp(&[0, 7], 3)];
        let lam = 7i64;
        let scaled: Vec<GridPoint> = pts
            .iter()
            .map(|p| GridPoint::new(p.coords.iter().map(|c| c * scalar(lam)).collect(), p.label))
            .collect();
        let p1 = spanning_path(&pts).unwrap();
        let p2 = spanning_path(&scaled).unwrap();
        assert_eq!(p1.order, p2.order);
        assert_eq!(p2.total_length(), scalar(lam) * p1.total_length());
    }

    #[test]
    fn greedy_tree_obeys_packing_bound() {
        // For r points in [0,n]^2 the greedy tree length obeys
        // total <= 4 n sqrt(r), compared exactly as total^2 <= 16 n^2 r.
        let mut seed: u64 = 42;
        let mut next = || {
            seed ^= seed << 13;
            seed ^= seed >> 7;
            seed ^= seed << 17;
            seed
        };
        for _ in 0..20 {
            let n = 50 + (next() % 50) as i64;
            let r = 2 + (next() % 40) as usize;
            let pts: Vec<GridPoint> = (0..r)
                .map(|i| gp(&[(next() % (n as u64 + 1)) as i64, (next() % (n as u64 + 1)) as i64], i as u32))
                .collect();
            let tree = greedy_spanning_tree(&pts).unwrap();
            let total = tree_length(&pts, &tree).unwrap();
            assert!(
                &total * &total <= scalar(16) * scalar(n) * scalar(n) * scalar(r as i64),
                "packing bound violated: total={total} n={n} r={r}"
            );
        }
    }
}
