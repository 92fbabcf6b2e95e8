//! The grid plane `Z^2` with 4- and 8-adjacency.
//!
//! Two points are 4-adjacent when they differ by one step along an axis,
//! and 8-adjacent when they differ by one step along an axis or a
//! diagonal. Everything here is graph theory over those two relations:
//! connectivity, components, paths (degree profile `1, 1, 2, ..., 2`),
//! closed curves (degree `2` everywhere), and complement components of a
//! curve inside a bounded window.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::dsu::DisjointSets;
use crate::error::{Error, Result};
use crate::partition::ComponentPartition;

/// A lattice point of `Z^2`.
///
/// The derived ordering is lexicographic (`x`, then `y`); it is the
/// canonical order used everywhere a deterministic listing is needed.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct GridPoint {
    pub x: i32,
    pub y: i32,
}

impl GridPoint {
    pub const fn new(x: i32, y: i32) -> Self {
        GridPoint { x, y }
    }
}

impl From<(i32, i32)> for GridPoint {
    fn from((x, y): (i32, i32)) -> Self {
        GridPoint { x, y }
    }
}

impl fmt::Debug for GridPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl fmt::Display for GridPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Which neighbor relation is in force.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum Adjacency {
    /// Axis neighbors only.
    Four,
    /// Axis and diagonal neighbors.
    Eight,
}

impl Adjacency {
    /// The paired relation used on the other side of a complement:
    /// closed 4-curves split the plane into 8-components and vice versa.
    pub fn complement(self) -> Self {
        match self {
            Adjacency::Four => Adjacency::Eight,
            Adjacency::Eight => Adjacency::Four,
        }
    }

    /// Offsets from a point to its neighbors, in canonical order.
    pub fn offsets(self) -> &'static [(i32, i32)] {
        const FOUR: [(i32, i32); 4] = [(-1, 0), (0, -1), (0, 1), (1, 0)];
        const EIGHT: [(i32, i32); 8] = [
            (-1, -1),
            (-1, 0),
            (-1, 1),
            (0, -1),
            (0, 1),
            (1, -1),
            (1, 0),
            (1, 1),
        ];
        match self {
            Adjacency::Four => &FOUR,
            Adjacency::Eight => &EIGHT,
        }
    }
}

impl fmt::Display for Adjacency {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Adjacency::Four => write!(f, "4"),
            Adjacency::Eight => write!(f, "8"),
        }
    }
}

/// The 8-neighborhood of a point labelled clockwise from the upper-left
/// corner: slot 0 is the upper-left diagonal, slot 1 is straight up, and
/// so on around to slot 7 (straight left). Diagonal slots are the even
/// indices 0, 2, 4, 6; the two axis slots flanking diagonal slot `i` are
/// `i - 1` and `i + 1` taken mod 8.
pub const NEIGHBOR_RING: [(i32, i32); 8] = [
    (-1, 1),
    (0, 1),
    (1, 1),
    (1, 0),
    (1, -1),
    (0, -1),
    (-1, -1),
    (-1, 0),
];

/// The points adjacent to `p`; `p` itself is excluded.
pub fn neighbors(p: GridPoint, adj: Adjacency) -> GridSet {
    GridSet::from_points(
        adj.offsets()
            .iter()
            .map(|&(dx, dy)| GridPoint::new(p.x + dx, p.y + dy)),
    )
}

/// Whether `p` and `q` are distinct and adjacent. No point is adjacent
/// to itself.
pub fn are_adjacent(p: GridPoint, q: GridPoint, adj: Adjacency) -> bool {
    let (dx, dy) = ((p.x - q.x).abs(), (p.y - q.y).abs());
    match adj {
        Adjacency::Four => dx + dy == 1,
        Adjacency::Eight => dx.max(dy) == 1,
    }
}

/// Whether some point of `a` is adjacent to some point of `b`.
pub fn sets_adjacent(a: &GridSet, b: &GridSet, adj: Adjacency) -> bool {
    let (small, large) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    small.iter().any(|p| {
        adj.offsets()
            .iter()
            .any(|&(dx, dy)| large.contains(GridPoint::new(p.x + dx, p.y + dy)))
    })
}

/// A finite set of grid points.
///
/// Points are kept sorted in canonical order, so iteration is
/// deterministic and equality is set equality regardless of how the set
/// was assembled.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct GridSet {
    points: Vec<GridPoint>,
}

impl GridSet {
    pub fn new() -> Self {
        GridSet::default()
    }

    pub fn from_points(points: impl IntoIterator<Item = GridPoint>) -> Self {
        let mut points: Vec<GridPoint> = points.into_iter().collect();
        points.sort_unstable();
        points.dedup();
        GridSet { points }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = GridPoint> + '_ {
        self.points.iter().copied()
    }

    pub fn as_slice(&self) -> &[GridPoint] {
        &self.points
    }

    pub fn contains(&self, p: GridPoint) -> bool {
        self.points.binary_search(&p).is_ok()
    }

    /// Adds a point, keeping canonical order. Returns false if already present.
    pub fn insert(&mut self, p: GridPoint) -> bool {
        match self.points.binary_search(&p) {
            Ok(_) => false,
            Err(i) => {
                self.points.insert(i, p);
                true
            }
        }
    }

    /// The set with `p` added.
    pub fn with(&self, p: GridPoint) -> Self {
        let mut s = self.clone();
        s.insert(p);
        s
    }

    /// The set with `p` removed.
    pub fn without(&self, p: GridPoint) -> Self {
        GridSet {
            points: self.points.iter().copied().filter(|&q| q != p).collect(),
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        GridSet::from_points(self.iter().chain(other.iter()))
    }

    pub fn difference(&self, other: &Self) -> Self {
        GridSet {
            points: self.iter().filter(|&p| !other.contains(p)).collect(),
        }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        GridSet {
            points: small.iter().filter(|&p| large.contains(p)).collect(),
        }
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        self.iter().all(|p| other.contains(p))
    }

    pub fn is_disjoint_from(&self, other: &Self) -> bool {
        self.intersection(other).is_empty()
    }

    /// Smallest point in canonical order.
    pub fn min_point(&self) -> Option<GridPoint> {
        self.points.first().copied()
    }

    /// Axis-aligned bounding box as `(min, max)` corners.
    pub fn bounding_box(&self) -> Option<(GridPoint, GridPoint)> {
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

    /// Number of points of this set adjacent to `p` (`p` itself never counts).
    pub fn degree(&self, p: GridPoint, adj: Adjacency) -> usize {
        adj.offsets()
            .iter()
            .filter(|&&(dx, dy)| self.contains(GridPoint::new(p.x + dx, p.y + dy)))
            .count()
    }

    /// Maximal connected subsets, in canonical order of their smallest
    /// points. Computed with union-find; the flood-fill route lives in
    /// [`crate::oracle`].
    pub fn components(&self, adj: Adjacency) -> ComponentPartition<GridSet> {
        let mut dsu = DisjointSets::new(self.len());
        for (i, &p) in self.points.iter().enumerate() {
            for &(dx, dy) in adj.offsets() {
                let q = GridPoint::new(p.x + dx, p.y + dy);
                if let Ok(j) = self.points.binary_search(&q) {
                    dsu.union(i, j);
                }
            }
        }
        let mut groups: Vec<Vec<GridPoint>> = Vec::new();
        let mut group_of_root = std::collections::HashMap::new();
        for (i, &p) in self.points.iter().enumerate() {
            let root = dsu.find(i);
            let g = *group_of_root.entry(root).or_insert_with(|| {
                groups.push(Vec::new());
                groups.len() - 1
            });
            groups[g].push(p);
        }
        // input is sorted, so each group is sorted and groups are already
        // ordered by their minimum point
        let components = groups
            .into_iter()
            .map(|points| GridSet { points })
            .collect();
        ComponentPartition::new(components, None)
    }

    /// Whether the set is connected under `adj`. The empty set and
    /// singletons count as connected.
    pub fn is_connected(&self, adj: Adjacency) -> bool {
        self.components(adj).len() <= 1
    }

    /// Degree-profile classification of the set, with connectivity
    /// required: a degree-correct union of two disjoint cycles is
    /// `Neither`, not `ClosedCurve`.
    pub fn classify(&self, adj: Adjacency) -> PathClass {
        if self.is_empty() {
            return PathClass::Neither;
        }
        let mut endpoints = Vec::new();
        for p in self.iter() {
            match self.degree(p, adj) {
                1 => endpoints.push(p),
                2 => {}
                _ => return PathClass::Neither,
            }
        }
        if !self.is_connected(adj) {
            return PathClass::Neither;
        }
        match endpoints.len() {
            0 => PathClass::ClosedCurve,
            2 => PathClass::Path(endpoints[0], endpoints[1]),
            _ => PathClass::Neither,
        }
    }

    /// Components of the complement of this set inside its bounding box
    /// inflated by a margin of 2, with the border-touching component
    /// flagged as the (window-relative) unbounded one.
    ///
    /// The margin keeps the border ring disjoint from and non-adjacent
    /// to the set, so the flagged component is exactly the intersection
    /// of the true unbounded component with the window, and the inner
    /// components are reported exactly.
    pub fn complement_components(&self, adj: Adjacency) -> Result<ComponentPartition<GridSet>> {
        let (lo, hi) = self.bounding_box().ok_or(Error::EmptyCurve)?;
        let (lo, hi) = (
            GridPoint::new(lo.x - 2, lo.y - 2),
            GridPoint::new(hi.x + 2, hi.y + 2),
        );
        let mut complement = Vec::new();
        for x in lo.x..=hi.x {
            for y in lo.y..=hi.y {
                let p = GridPoint::new(x, y);
                if !self.contains(p) {
                    complement.push(p);
                }
            }
        }
        let complement = GridSet { points: complement };
        let partition = complement.components(adj);
        // the corner is on the border ring, which the margin keeps fully
        // inside the complement, so its component is the unbounded one
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

impl fmt::Debug for GridSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.points.iter()).finish()
    }
}

impl FromIterator<GridPoint> for GridSet {
    fn from_iter<T: IntoIterator<Item = GridPoint>>(iter: T) -> Self {
        GridSet::from_points(iter)
    }
}

impl FromIterator<(i32, i32)> for GridSet {
    fn from_iter<T: IntoIterator<Item = (i32, i32)>>(iter: T) -> Self {
        GridSet::from_points(iter.into_iter().map(GridPoint::from))
    }
}

impl<'a> IntoIterator for &'a GridSet {
    type Item = GridPoint;
    type IntoIter = std::iter::Copied<std::slice::Iter<'a, GridPoint>>;

    fn into_iter(self) -> Self::IntoIter {
        self.points.iter().copied()
    }
}

impl Serialize for GridSet {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.points.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for GridSet {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        Ok(GridSet::from_points(Vec::<GridPoint>::deserialize(
            deserializer,
        )?))
    }
}

/// What a finite grid set looks like under one adjacency.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PathClass {
    /// Exactly two points of degree one, all others of degree two,
    /// connected. Endpoints are reported in canonical order.
    Path(GridPoint, GridPoint),
    /// Every point has exactly two neighbors in the set, connected.
    ClosedCurve,
    Neither,
}

impl PathClass {
    pub fn is_path(&self) -> bool {
        matches!(self, PathClass::Path(_, _))
    }

    pub fn is_closed_curve(&self) -> bool {
        matches!(self, PathClass::ClosedCurve)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gs(pts: &[(i32, i32)]) -> GridSet {
        pts.iter().copied().collect()
    }

    #[test]
    fn four_neighbors_of_origin() {
        let n = neighbors(GridPoint::new(0, 0), Adjacency::Four);
        assert_eq!(n, gs(&[(1, 0), (-1, 0), (0, 1), (0, -1)]));
    }

    #[test]
    fn eight_neighbors_of_origin() {
        let n = neighbors(GridPoint::new(0, 0), Adjacency::Eight);
        let expected: GridSet = (-1..=1)
            .flat_map(|x| (-1..=1).map(move |y| (x, y)))
            .filter(|&p| p != (0, 0))
            .collect();
        assert_eq!(n, expected);
        assert_eq!(n.len(), 8);
    }

    #[test]
    fn neighbors_translate() {
        let n = neighbors(GridPoint::new(5, -3), Adjacency::Four);
        assert_eq!(n, gs(&[(6, -3), (4, -3), (5, -2), (5, -4)]));
    }

    #[test]
    fn four_neighbors_subset_of_eight() {
        for x in -2..=2 {
            for y in -2..=2 {
                let p = GridPoint::new(x, y);
                let n4 = neighbors(p, Adjacency::Four);
                let n8 = neighbors(p, Adjacency::Eight);
                assert!(n4.is_subset_of(&n8));
                assert_eq!(n4.len(), 4);
                assert_eq!(n8.len(), 8);
            }
        }
    }

    #[test]
    fn adjacency_basics() {
        let o = GridPoint::new(0, 0);
        let d = GridPoint::new(1, 1);
        assert!(are_adjacent(o, d, Adjacency::Eight));
        assert!(!are_adjacent(o, d, Adjacency::Four));
        assert!(!are_adjacent(o, o, Adjacency::Eight));
        assert!(are_adjacent(d, o, Adjacency::Eight));
    }

    #[test]
    fn diagonal_pair_components() {
        let s = gs(&[(0, 0), (1, 1)]);
        assert_eq!(s.components(Adjacency::Four).len(), 2);
        assert_eq!(s.components(Adjacency::Eight).len(), 1);
    }

    #[test]
    fn connectivity_edge_cases() {
        assert!(GridSet::new().is_connected(Adjacency::Four));
        assert!(gs(&[(0, 0)]).is_connected(Adjacency::Four));
        assert!(!gs(&[(0, 0), (2, 0)]).is_connected(Adjacency::Eight));
    }

    #[test]
    fn classify_three_point_chain() {
        let c = gs(&[(0, 0), (1, 1), (2, 1)]);
        assert_eq!(
            c.classify(Adjacency::Eight),
            PathClass::Path(GridPoint::new(0, 0), GridPoint::new(2, 1))
        );
    }

    #[test]
    fn classify_diamond_is_closed_8_curve() {
        let diamond = gs(&[(1, 0), (0, 1), (-1, 0), (0, -1)]);
        assert_eq!(diamond.classify(Adjacency::Eight), PathClass::ClosedCurve);
        assert_eq!(diamond.classify(Adjacency::Four), PathClass::Neither);
    }

    #[test]
    fn classify_ring_is_closed_4_curve() {
        let ring = gs(&[
            (0, 0),
            (1, 0),
            (2, 0),
            (2, 1),
            (2, 2),
            (1, 2),
            (0, 2),
            (0, 1),
        ]);
        // each ring point has exactly two 4-neighbors in the set
        for p in ring.iter() {
            assert_eq!(ring.degree(p, Adjacency::Four), 2);
        }
        assert_eq!(ring.classify(Adjacency::Four), PathClass::ClosedCurve);
    }

    #[test]
    fn disconnected_degree_two_set_is_neither() {
        // two far-apart diamonds: degree-correct but disconnected
        let two = gs(&[
            (1, 0),
            (0, 1),
            (-1, 0),
            (0, -1),
            (11, 0),
            (10, 1),
            (9, 0),
            (10, -1),
        ]);
        assert_eq!(two.classify(Adjacency::Eight), PathClass::Neither);
    }

    #[test]
    fn singleton_and_empty_classify_as_neither() {
        assert_eq!(gs(&[(3, 3)]).classify(Adjacency::Eight), PathClass::Neither);
        assert_eq!(GridSet::new().classify(Adjacency::Four), PathClass::Neither);
    }

    #[test]
    fn ring_complement_has_inner_singleton() {
        let ring = gs(&[
            (0, 0),
            (1, 0),
            (2, 0),
            (2, 1),
            (2, 2),
            (1, 2),
            (0, 2),
            (0, 1),
        ]);
        let parts = ring.complement_components(Adjacency::Eight).unwrap();
        assert_eq!(parts.len(), 2);
        let inner: Vec<&GridSet> = parts.inner_components().collect();
        assert_eq!(inner.len(), 1);
        assert_eq!(*inner[0], gs(&[(1, 1)]));
    }

    #[test]
    fn diamond_complement_under_four_has_two_components() {
        // the 4-point closed 8-curve encloses exactly its center
        let diamond = gs(&[(1, 0), (0, 1), (-1, 0), (0, -1)]);
        let parts = diamond.complement_components(Adjacency::Four).unwrap();
        assert_eq!(parts.len(), 2);
        let inner: Vec<&GridSet> = parts.inner_components().collect();
        assert_eq!(*inner[0], gs(&[(0, 0)]));
    }

    #[test]
    fn square_complement_under_eight_is_single_component() {
        // the 2x2 square has no interior, so only the unbounded side remains
        let square = gs(&[(0, 0), (1, 0), (0, 1), (1, 1)]);
        let parts = square.complement_components(Adjacency::Eight).unwrap();
        assert_eq!(parts.len(), 1);
        assert_eq!(parts.outer_index(), Some(0));
    }

    #[test]
    fn empty_complement_is_an_error() {
        assert_eq!(
            GridSet::new().complement_components(Adjacency::Four),
            Err(Error::EmptyCurve)
        );
    }

    #[test]
    fn ring_table_matches_adjacency() {
        for (i, &(dx, dy)) in NEIGHBOR_RING.iter().enumerate() {
            let diagonal = dx != 0 && dy != 0;
            assert_eq!(diagonal, i % 2 == 0);
        }
    }
}
