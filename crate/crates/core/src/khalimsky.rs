//! The Khalimsky plane `K^2`.
//!
//! The digital line `K` is `Z` with the topology generated by the
//! minimal neighborhoods `N(n) = {n}` for odd `n` and
//! `N(n) = {n - 1, n, n + 1}` for even `n`; odd points are open, even
//! points are closed. The plane is the product `K x K`. A point is
//! *pure* when its coordinates have equal parity and *mixed* otherwise.
//!
//! Connectivity here is topological, but on an Alexandroff space it
//! coincides with connectivity of the adjacency graph, where `y` is
//! adjacent to `x` when `{x, y}` is a connected subspace. That graph is
//! what the operations below traverse; the purely topological route
//! (minimal-open-set chasing) lives in [`crate::oracle`] and is used to
//! cross-check it.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::dsu::DisjointSets;
use crate::error::{Error, Result};
use crate::partition::ComponentPartition;

/// A point of the Khalimsky plane. Ordering is lexicographic.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct KPoint {
    pub x: i32,
    pub y: i32,
}

impl KPoint {
    pub const fn new(x: i32, y: i32) -> Self {
        KPoint { x, y }
    }

    /// Both coordinates have the same parity.
    pub fn is_pure(self) -> bool {
        (self.x - self.y) % 2 == 0
    }

    pub fn is_mixed(self) -> bool {
        !self.is_pure()
    }

    /// Pure with both coordinates odd: an open point of the plane.
    pub fn is_open(self) -> bool {
        self.x % 2 != 0 && self.y % 2 != 0
    }

    /// Pure with both coordinates even: a closed point of the plane.
    pub fn is_closed(self) -> bool {
        self.x % 2 == 0 && self.y % 2 == 0
    }

    /// Minimal open neighborhood in the product topology.
    pub fn minimal_neighborhood(self) -> KSet {
        product(&n_line(self.x), &n_line(self.y))
    }

    /// Closure of the singleton `{self}` in the product topology.
    pub fn closure(self) -> KSet {
        product(&cl_line(self.x), &cl_line(self.y))
    }

    /// The adjacent points: those `q != self` for which `{self, q}` is
    /// connected. Pure points have the eight surrounding lattice points,
    /// mixed points only the four axis neighbors. Always equals
    /// `(minimal_neighborhood ∪ closure) \ {self}`.
    pub fn adjacency(self) -> KSet {
        let offsets: &[(i32, i32)] = if self.is_pure() {
            &[
                (-1, -1),
                (-1, 0),
                (-1, 1),
                (0, -1),
                (0, 1),
                (1, -1),
                (1, 0),
                (1, 1),
            ]
        } else {
            &[(-1, 0), (0, -1), (0, 1), (1, 0)]
        };
        KSet::from_points(
            offsets
                .iter()
                .map(|&(dx, dy)| KPoint::new(self.x + dx, self.y + dy)),
        )
    }
}

impl From<(i32, i32)> for KPoint {
    fn from((x, y): (i32, i32)) -> Self {
        KPoint { x, y }
    }
}

impl fmt::Debug for KPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl fmt::Display for KPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Minimal open neighborhood of `n` on the digital line.
pub fn n_line(n: i32) -> Vec<i32> {
    if n % 2 != 0 {
        vec![n]
    } else {
        vec![n - 1, n, n + 1]
    }
}

/// Closure of `{n}` on the digital line; dual to [`n_line`]:
/// `m ∈ n_line(n)` exactly when `n ∈ cl_line(m)`.
pub fn cl_line(n: i32) -> Vec<i32> {
    if n % 2 != 0 {
        vec![n - 1, n, n + 1]
    } else {
        vec![n]
    }
}

fn product(xs: &[i32], ys: &[i32]) -> KSet {
    KSet::from_points(
        xs.iter()
            .flat_map(|&x| ys.iter().map(move |&y| KPoint::new(x, y))),
    )
}

/// Whether `p` and `q` are distinct and adjacent in the plane.
pub fn k_adjacent(p: KPoint, q: KPoint) -> bool {
    let (dx, dy) = ((p.x - q.x).abs(), (p.y - q.y).abs());
    if dx.max(dy) != 1 {
        return false;
    }
    // axis steps always connect; diagonal steps only between pure points
    dx + dy == 1 || p.is_pure()
}

/// For a mixed point, the two pure points completing its minimal
/// neighborhood and the two completing its closure, as
/// `(open pair, closed pair)`. Returns `None` for pure points.
pub fn mixed_spans(m: KPoint) -> Option<([KPoint; 2], [KPoint; 2])> {
    if m.is_pure() {
        return None;
    }
    let vertical = [KPoint::new(m.x, m.y - 1), KPoint::new(m.x, m.y + 1)];
    let horizontal = [KPoint::new(m.x - 1, m.y), KPoint::new(m.x + 1, m.y)];
    // N(m) \ {m} is always the open pair, cl(m) \ {m} the closed pair
    if m.x % 2 != 0 {
        Some((vertical, horizontal))
    } else {
        Some((horizontal, vertical))
    }
}

/// The mixed points adjacent to both `a` and `b`.
///
/// For distinct pure points this has size two exactly when `a` and `b`
/// are adjacent, size one when they sit two steps apart across a single
/// mixed point, and size zero otherwise.
pub fn shared_mixed(a: KPoint, b: KPoint) -> Result<KSet> {
    for p in [a, b] {
        if !p.is_pure() {
            return Err(Error::PureRequired(p.x, p.y));
        }
    }
    if a == b {
        return Err(Error::DistinctRequired);
    }
    // every mixed point adjacent to a pure point is one of its axis neighbors
    Ok(KSet::from_points(
        [(-1, 0), (0, -1), (0, 1), (1, 0)]
            .iter()
            .map(|&(dx, dy)| KPoint::new(a.x + dx, a.y + dy))
            .filter(|&m| (m.x - b.x).abs() + (m.y - b.y).abs() == 1),
    ))
}

/// A finite set of Khalimsky points, canonically ordered like
/// [`crate::rosenfeld::GridSet`].
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct KSet {
    points: Vec<KPoint>,
}

impl KSet {
    pub fn new() -> Self {
        KSet::default()
    }

    pub fn from_points(points: impl IntoIterator<Item = KPoint>) -> Self {
        let mut points: Vec<KPoint> = points.into_iter().collect();
        points.sort_unstable();
        points.dedup();
        KSet { points }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = KPoint> + '_ {
        self.points.iter().copied()
    }

    pub fn as_slice(&self) -> &[KPoint] {
        &self.points
    }

    pub fn contains(&self, p: KPoint) -> bool {
        self.points.binary_search(&p).is_ok()
    }

    pub fn insert(&mut self, p: KPoint) -> bool {
        match self.points.binary_search(&p) {
            Ok(_) => false,
            Err(i) => {
                self.points.insert(i, p);
                true
            }
        }
    }

    pub fn with(&self, p: KPoint) -> Self {
        let mut s = self.clone();
        s.insert(p);
        s
    }

    pub fn without(&self, p: KPoint) -> Self {
        KSet {
            points: self.points.iter().copied().filter(|&q| q != p).collect(),
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        KSet::from_points(self.iter().chain(other.iter()))
    }

    pub fn difference(&self, other: &Self) -> Self {
        KSet {
            points: self.iter().filter(|&p| !other.contains(p)).collect(),
        }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        KSet {
            points: small.iter().filter(|&p| large.contains(p)).collect(),
        }
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        self.iter().all(|p| other.contains(p))
    }

    pub fn is_disjoint_from(&self, other: &Self) -> bool {
        self.intersection(other).is_empty()
    }

    pub fn min_point(&self) -> Option<KPoint> {
        self.points.first().copied()
    }

    pub fn bounding_box(&self) -> Option<(KPoint, KPoint)> {
        let first = self.points.first()?;
        let (mut lo, mut hi) = (*first, *first);
        for p in &self.points {
            lo.x = lo.x.min(p.x);
            lo.y = lo.y.min(p.y);
            hi.x = hi.x.max(p.x);
            hi.y = hi.y.max(p.y);
        }
        Some((lo, hi))
    }

    /// All points pure.
    pub fn is_all_pure(&self) -> bool {
        self.points.iter().all(|p| p.is_pure())
    }

    pub fn pure_points(&self) -> KSet {
        KSet {
            points: self.iter().filter(|p| p.is_pure()).collect(),
        }
    }

    pub fn mixed_points(&self) -> KSet {
        KSet {
            points: self.iter().filter(|p| p.is_mixed()).collect(),
        }
    }

    /// Number of set members adjacent to `p`.
    pub fn degree(&self, p: KPoint) -> usize {
        p.adjacency().iter().filter(|&q| self.contains(q)).count()
    }

    /// Whether some point of `self` is adjacent to some point of `other`.
    pub fn adjacent_to(&self, other: &KSet) -> bool {
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        small
            .iter()
            .any(|p| p.adjacency().iter().any(|q| large.contains(q)))
    }

    /// Connected components of the subspace, via the adjacency graph.
    pub fn components(&self) -> ComponentPartition<KSet> {
        let mut dsu = DisjointSets::new(self.len());
        for (i, &p) in self.points.iter().enumerate() {
            for q in p.adjacency().iter() {
                if let Ok(j) = self.points.binary_search(&q) {
                    dsu.union(i, j);
                }
            }
        }
        let mut groups: Vec<Vec<KPoint>> = Vec::new();
        let mut group_of_root = std::collections::HashMap::new();
        for (i, &p) in self.points.iter().enumerate() {
            let root = dsu.find(i);
            let g = *group_of_root.entry(root).or_insert_with(|| {
                groups.push(Vec::new());
                groups.len() - 1
            });
            groups[g].push(p);
        }
        let components = groups.into_iter().map(|points| KSet { points }).collect();
        ComponentPartition::new(components, None)
    }

    /// Topological connectivity of the subspace. Empty sets and
    /// singletons are connected.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Classification by adjacency degrees within the set.
    ///
    /// Singletons and adjacent pairs count as arcs (images of the
    /// one- and two-point intervals); theorem-level operations that
    /// need two distinct endpoints filter those out themselves.
    pub fn classify(&self) -> KClass {
        if self.is_empty() {
            return KClass::Neither;
        }
        if self.len() == 1 {
            return KClass::Arc(self.points[0], self.points[0]);
        }
        let mut endpoints = Vec::new();
        let mut all_two = true;
        for p in self.iter() {
            match self.degree(p) {
                1 => {
                    endpoints.push(p);
                    all_two = false;
                }
                2 => {}
                _ => return KClass::Neither,
            }
        }
        if !self.is_connected() {
            return KClass::Neither;
        }
        match self.len() {
            1 => KClass::Arc(self.points[0], self.points[0]),
            2 => KClass::Arc(self.points[0], self.points[1]),
            n => {
                if all_two && n >= 4 {
                    KClass::JordanCurve
                } else if endpoints.len() == 2 {
                    KClass::Arc(endpoints[0], endpoints[1])
                } else {
                    KClass::Neither
                }
            }
        }
    }

    /// Components of the complement inside the bounding box inflated by
    /// a margin of 2, border component flagged as the unbounded one.
    /// Same windowing scheme as the grid-side complement, so the two
    /// planes can be compared over compatible regions.
    pub fn complement_components(&self) -> Result<ComponentPartition<KSet>> {
        let (lo, hi) = self.bounding_box().ok_or(Error::EmptyCurve)?;
        let (lo, hi) = (
            KPoint::new(lo.x - 2, lo.y - 2),
            KPoint::new(hi.x + 2, hi.y + 2),
        );
        let mut complement = Vec::new();
        for x in lo.x..=hi.x {
            for y in lo.y..=hi.y {
                let p = KPoint::new(x, y);
                if !self.contains(p) {
                    complement.push(p);
                }
            }
        }
        let complement = KSet { points: complement };
        let partition = complement.components();
        let outer = partition
            .components()
            .iter()
            .position(|c| c.contains(lo))
            .expect("window corner lies in the complement");
        Ok(ComponentPartition::new(
            partition.into_components(),
            Some(outer),
        ))
    }
}

impl fmt::Debug for KSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.points.iter()).finish()
    }
}

impl FromIterator<KPoint> for KSet {
    fn from_iter<T: IntoIterator<Item = KPoint>>(iter: T) -> Self {
        KSet::from_points(iter)
    }
}

impl FromIterator<(i32, i32)> for KSet {
    fn from_iter<T: IntoIterator<Item = (i32, i32)>>(iter: T) -> Self {
        KSet::from_points(iter.into_iter().map(KPoint::from))
    }
}

impl<'a> IntoIterator for &'a KSet {
    type Item = KPoint;
    type IntoIter = std::iter::Copied<std::slice::Iter<'a, KPoint>>;

    fn into_iter(self) -> Self::IntoIter {
        self.points.iter().copied()
    }
}

impl Serialize for KSet {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.points.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for KSet {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        Ok(KSet::from_points(Vec::<KPoint>::deserialize(deserializer)?))
    }
}

/// What a finite Khalimsky set looks like.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum KClass {
    /// Homeomorphic image of a finite interval of the digital line.
    /// Endpoints in canonical order; equal for a singleton.
    Arc(KPoint, KPoint),
    /// Connected, at least four points, every point with exactly two
    /// adjacent points in the set.
    JordanCurve,
    Neither,
}

impl KClass {
    pub fn is_arc(&self) -> bool {
        matches!(self, KClass::Arc(_, _))
    }

    pub fn is_jordan_curve(&self) -> bool {
        matches!(self, KClass::JordanCurve)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ks(pts: &[(i32, i32)]) -> KSet {
        pts.iter().copied().collect()
    }

    #[test]
    fn line_neighborhoods() {
        assert_eq!(n_line(3), vec![3]);
        assert_eq!(n_line(2), vec![1, 2, 3]);
        assert_eq!(n_line(0), vec![-1, 0, 1]);
        assert_eq!(cl_line(3), vec![2, 3, 4]);
        assert_eq!(cl_line(2), vec![2]);
        assert_eq!(cl_line(0), vec![0]);
    }

    #[test]
    fn line_duality() {
        for m in -6..=6 {
            for n in -6..=6 {
                assert_eq!(
                    n_line(m).contains(&n),
                    cl_line(n).contains(&m),
                    "duality fails at ({m}, {n})"
                );
            }
        }
    }

    #[test]
    fn purity() {
        assert!(KPoint::new(0, 0).is_closed());
        assert!(KPoint::new(1, 1).is_open());
        assert!(KPoint::new(1, -1).is_open());
        assert!(KPoint::new(-2, 4).is_closed());
        assert!(KPoint::new(1, 0).is_mixed());
        assert!(KPoint::new(0, 1).is_mixed());
        assert!(KPoint::new(-1, 0).is_mixed());
    }

    #[test]
    fn product_neighborhoods() {
        assert_eq!(
            KPoint::new(1, 0).minimal_neighborhood(),
            ks(&[(1, -1), (1, 0), (1, 1)])
        );
        assert_eq!(
            KPoint::new(1, 0).closure(),
            ks(&[(0, 0), (1, 0), (2, 0)])
        );
        assert_eq!(
            KPoint::new(1, 1).minimal_neighborhood(),
            ks(&[(1, 1)])
        );
    }

    #[test]
    fn adjacency_of_pure_and_mixed() {
        let pure: KSet = KPoint::new(0, 0).adjacency();
        assert_eq!(pure.len(), 8);
        let mixed = KPoint::new(1, 0).adjacency();
        assert_eq!(mixed, ks(&[(0, 0), (2, 0), (1, 1), (1, -1)]));
    }

    #[test]
    fn adjacency_equals_neighborhood_union_closure() {
        for x in -4..=4 {
            for y in -4..=4 {
                let p = KPoint::new(x, y);
                let direct = p.adjacency();
                let derived = p
                    .minimal_neighborhood()
                    .union(&p.closure())
                    .without(p);
                assert_eq!(direct, derived, "mismatch at {p}");
            }
        }
    }

    #[test]
    fn mixed_points_have_four_pure_neighbors() {
        for x in -4..=4 {
            for y in -4..=4 {
                let p = KPoint::new(x, y);
                let adj = p.adjacency();
                if p.is_mixed() {
                    assert_eq!(adj.len(), 4);
                    assert!(adj.is_all_pure());
                } else {
                    assert_eq!(adj.len(), 8);
                    assert_eq!(adj.iter().filter(|q| q.is_pure()).count(), 4);
                    assert_eq!(adj.iter().filter(|q| q.is_mixed()).count(), 4);
                }
            }
        }
    }

    #[test]
    fn mixed_spans_are_open_and_closed_pairs() {
        for m in [KPoint::new(1, 0), KPoint::new(0, 1), KPoint::new(-1, 2)] {
            let (open_pair, closed_pair) = mixed_spans(m).unwrap();
            assert!(open_pair.iter().all(|p| p.is_open()));
            assert!(closed_pair.iter().all(|p| p.is_closed()));
            let n = m.minimal_neighborhood().without(m);
            assert_eq!(n, KSet::from_points(open_pair));
            let cl = m.closure().without(m);
            assert_eq!(cl, KSet::from_points(closed_pair));
        }
        assert!(mixed_spans(KPoint::new(0, 0)).is_none());
    }

    #[test]
    fn shared_mixed_cases() {
        let two = shared_mixed(KPoint::new(0, 0), KPoint::new(1, 1)).unwrap();
        assert_eq!(two, ks(&[(0, 1), (1, 0)]));
        let one = shared_mixed(KPoint::new(0, 0), KPoint::new(2, 0)).unwrap();
        assert_eq!(one, ks(&[(1, 0)]));
        let none = shared_mixed(KPoint::new(0, 0), KPoint::new(4, 0)).unwrap();
        assert!(none.is_empty());
        assert!(shared_mixed(KPoint::new(1, 0), KPoint::new(0, 0)).is_err());
        assert!(shared_mixed(KPoint::new(0, 0), KPoint::new(0, 0)).is_err());
    }

    #[test]
    fn two_mixed_points_never_adjacent() {
        assert!(!ks(&[(0, 1), (1, 0)]).is_connected());
        assert!(ks(&[(0, 0), (1, 0)]).is_connected());
    }

    #[test]
    fn classify_segment_and_curves() {
        assert_eq!(
            ks(&[(0, 0), (1, 0), (2, 0)]).classify(),
            KClass::Arc(KPoint::new(0, 0), KPoint::new(2, 0))
        );
        // the adjacency set of a mixed point is the smallest Jordan curve
        assert_eq!(KPoint::new(1, 0).adjacency().classify(), KClass::JordanCurve);
        // image of the 8-point grid ring under the slant map
        let diamond_ring = ks(&[
            (0, 0),
            (1, -1),
            (2, -2),
            (3, -1),
            (4, 0),
            (3, 1),
            (2, 2),
            (1, 1),
        ]);
        assert_eq!(diamond_ring.classify(), KClass::JordanCurve);
        for p in diamond_ring.iter() {
            assert_eq!(diamond_ring.degree(p), 2);
        }
    }

    #[test]
    fn classify_degenerate_sizes() {
        let p = KPoint::new(2, 1);
        assert_eq!(ks(&[(2, 1)]).classify(), KClass::Arc(p, p));
        assert_eq!(
            ks(&[(0, 0), (1, 1)]).classify(),
            KClass::Arc(KPoint::new(0, 0), KPoint::new(1, 1))
        );
        // non-adjacent pair
        assert_eq!(ks(&[(0, 0), (3, 3)]).classify(), KClass::Neither);
        // a 3-cycle is neither an arc nor a Jordan curve
        assert_eq!(ks(&[(0, 0), (1, 0), (1, 1)]).classify(), KClass::Neither);
    }

    #[test]
    fn diamond_ring_complement() {
        let diamond_ring = ks(&[
            (0, 0),
            (1, -1),
            (2, -2),
            (3, -1),
            (4, 0),
            (3, 1),
            (2, 2),
            (1, 1),
        ]);
        let parts = diamond_ring.complement_components().unwrap();
        assert_eq!(parts.len(), 2);
        let inner: Vec<&KSet> = parts.inner_components().collect();
        assert_eq!(
            *inner[0],
            ks(&[(1, 0), (2, 0), (3, 0), (2, 1), (2, -1)])
        );
    }

    #[test]
    fn four_point_curve_complement() {
        let j = KPoint::new(1, 0).adjacency();
        let parts = j.complement_components().unwrap();
        assert_eq!(parts.len(), 2);
        let inner: Vec<&KSet> = parts.inner_components().collect();
        assert_eq!(*inner[0], ks(&[(1, 0)]));
        assert!(parts.outer_index().is_some());
    }

    #[test]
    fn jordan_curve_deletion_yields_arcs() {
        let j = KPoint::new(1, 0).adjacency();
        for p in j.iter() {
            assert!(j.without(p).classify().is_arc());
        }
    }
}
