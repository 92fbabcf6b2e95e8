//! Streaming enumeration of paths, curves, and arcs inside a window.
//!
//! A set is a path exactly when it induces a path graph, and a closed
//! curve exactly when it induces a single chordless cycle, so the
//! generators walk induced paths and induced cycles of the adjacency
//! graph by depth-first backtracking. Every emitted set appears exactly
//! once: cycles are rooted at their smallest point with the orientation
//! fixed by the smaller second vertex, paths at their smaller endpoint.
//!
//! The degree-2 pruning this embodies is what makes desk-scale windows
//! exhaustive in practice; the unpruned subset filter that validates it
//! lives in [`crate::oracle`].

use crate::harness::Window;
use crate::khalimsky::KSet;
use crate::rosenfeld::{Adjacency, GridSet};

type Pt = (i32, i32);

trait Graph {
    fn adjacent(&self, p: Pt, q: Pt) -> bool;
    /// Neighbors within the window, in canonical order.
    fn neighbors(&self, p: Pt) -> Vec<Pt>;
    fn vertices(&self) -> Vec<Pt>;
}

#[derive(Clone, Copy)]
struct GridGraph {
    win: Window,
    adj: Adjacency,
}

impl Graph for GridGraph {
    fn adjacent(&self, p: Pt, q: Pt) -> bool {
        let (dx, dy) = ((p.0 - q.0).abs(), (p.1 - q.1).abs());
        match self.adj {
            Adjacency::Four => dx + dy == 1,
            Adjacency::Eight => dx.max(dy) == 1,
        }
    }

    fn neighbors(&self, p: Pt) -> Vec<Pt> {
        self.adj
            .offsets()
            .iter()
            .map(|&(dx, dy)| (p.0 + dx, p.1 + dy))
            .filter(|&q| self.win.contains(q))
            .collect()
    }

    fn vertices(&self) -> Vec<Pt> {
        self.win.points().collect()
    }
}

#[derive(Clone, Copy)]
struct KhalimskyGraph {
    win: Window,
}

impl Graph for KhalimskyGraph {
    fn adjacent(&self, p: Pt, q: Pt) -> bool {
        let (dx, dy) = ((p.0 - q.0).abs(), (p.1 - q.1).abs());
        dx.max(dy) == 1 && (dx + dy == 1 || (p.0 - p.1) % 2 == 0)
    }

    fn neighbors(&self, p: Pt) -> Vec<Pt> {
        const DIAG: [(i32, i32); 8] = [
            (-1, -1),
            (-1, 0),
            (-1, 1),
            (0, -1),
            (0, 1),
            (1, -1),
            (1, 0),
            (1, 1),
        ];
        const AXIS: [(i32, i32); 4] = [(-1, 0), (0, -1), (0, 1), (1, 0)];
        let offsets: &[(i32, i32)] = if (p.0 - p.1) % 2 == 0 { &DIAG } else { &AXIS };
        offsets
            .iter()
            .map(|&(dx, dy)| (p.0 + dx, p.1 + dy))
            .filter(|&q| self.win.contains(q))
            .collect()
    }

    fn vertices(&self) -> Vec<Pt> {
        self.win.points().collect()
    }
}

#[derive(Clone, Copy, PartialEq)]
enum Action {
    Extend,
    Close,
}

struct Frame {
    items: Vec<(Pt, Action)>,
    next: usize,
}

/// Depth-first stream of the induced cycles of a graph, each reported
/// once as a point set, sizes 3..=max_size.
struct InducedCycles<G: Graph> {
    graph: G,
    max_size: usize,
    starts: Vec<Pt>,
    start_idx: usize,
    path: Vec<Pt>,
    frames: Vec<Frame>,
}

impl<G: Graph> InducedCycles<G> {
    fn new(graph: G, max_size: usize) -> Self {
        let starts = graph.vertices();
        InducedCycles {
            graph,
            max_size,
            starts,
            start_idx: 0,
            path: Vec::new(),
            frames: Vec::new(),
        }
    }

    /// Classify the neighbors of the current path tip. `path[0]` is the
    /// cycle root and must stay the minimum; a neighbor touching the
    /// root closes the cycle (extending past it would leave a chord),
    /// anything touching the interior is a chord and is dropped.
    fn build_frame(&self) -> Frame {
        let n = self.path.len();
        let root = self.path[0];
        let tip = self.path[n - 1];
        let interior: &[Pt] = if n >= 2 { &self.path[1..n - 1] } else { &[] };
        let mut items = Vec::new();
        for cand in self.graph.neighbors(tip) {
            if cand <= root || self.path.contains(&cand) {
                continue;
            }
            if interior.iter().any(|&p| self.graph.adjacent(cand, p)) {
                continue;
            }
            if n >= 2 && self.graph.adjacent(cand, root) {
                if n < self.max_size && self.path[1] < cand {
                    items.push((cand, Action::Close));
                }
            } else if n + 1 < self.max_size {
                items.push((cand, Action::Extend));
            }
        }
        Frame { items, next: 0 }
    }
}

impl<G: Graph> Iterator for InducedCycles<G> {
    type Item = Vec<Pt>;

    fn next(&mut self) -> Option<Vec<Pt>> {
        if self.max_size < 3 {
            return None;
        }
        loop {
            if self.frames.is_empty() {
                let v = *self.starts.get(self.start_idx)?;
                self.start_idx += 1;
                self.path = vec![v];
                let frame = self.build_frame();
                self.frames.push(frame);
                continue;
            }
            let frame = self.frames.last_mut().expect("nonempty");
            if frame.next >= frame.items.len() {
                self.frames.pop();
                self.path.pop();
                continue;
            }
            let (cand, action) = frame.items[frame.next];
            frame.next += 1;
            match action {
                Action::Close => {
                    let mut cycle = self.path.clone();
                    cycle.push(cand);
                    return Some(cycle);
                }
                Action::Extend => {
                    self.path.push(cand);
                    let frame = self.build_frame();
                    self.frames.push(frame);
                }
            }
        }
    }
}

/// Depth-first stream of the induced paths of a graph (at least two
/// vertices), each reported once as a point set.
struct InducedPaths<G: Graph> {
    graph: G,
    max_size: usize,
    starts: Vec<Pt>,
    start_idx: usize,
    path: Vec<Pt>,
    frames: Vec<Frame>,
}

impl<G: Graph> InducedPaths<G> {
    fn new(graph: G, max_size: usize) -> Self {
        let starts = graph.vertices();
        InducedPaths {
            graph,
            max_size,
            starts,
            start_idx: 0,
            path: Vec::new(),
            frames: Vec::new(),
        }
    }

    fn build_frame(&self) -> Frame {
        let n = self.path.len();
        if n >= self.max_size {
            return Frame {
                items: Vec::new(),
                next: 0,
            };
        }
        let tip = self.path[n - 1];
        let items = self
            .graph
            .neighbors(tip)
            .into_iter()
            .filter(|&cand| {
                !self.path.contains(&cand)
                    && !self.path[..n - 1]
                        .iter()
                        .any(|&p| self.graph.adjacent(cand, p))
            })
            .map(|cand| (cand, Action::Extend))
            .collect();
        Frame { items, next: 0 }
    }
}

impl<G: Graph> Iterator for InducedPaths<G> {
    type Item = Vec<Pt>;

    fn next(&mut self) -> Option<Vec<Pt>> {
        if self.max_size < 2 {
            return None;
        }
        loop {
            if self.frames.is_empty() {
                let v = *self.starts.get(self.start_idx)?;
                self.start_idx += 1;
                self.path = vec![v];
                let frame = self.build_frame();
                self.frames.push(frame);
                continue;
            }
            let frame = self.frames.last_mut().expect("nonempty");
            if frame.next >= frame.items.len() {
                self.frames.pop();
                self.path.pop();
                continue;
            }
            let (cand, _) = frame.items[frame.next];
            frame.next += 1;
            self.path.push(cand);
            let frame = self.build_frame();
            self.frames.push(frame);
            // emit with the smaller endpoint first so each set shows up
            // exactly once of the two traversal directions
            if self.path[0] < cand {
                return Some(self.path.clone());
            }
        }
    }
}

/// Every closed curve in the window with at most `max_size` points,
/// each exactly once. Under 8-adjacency the stream includes the
/// 3-point triangles; the theorem suites filter by size themselves.
pub fn enumerate_closed_curves(
    w: &Window,
    max_size: usize,
    adj: Adjacency,
) -> impl Iterator<Item = GridSet> {
    InducedCycles::new(GridGraph { win: *w, adj }, max_size).map(|pts| pts.into_iter().collect())
}

/// Every path (two or more points) in the window with at most
/// `max_size` points, each exactly once.
pub fn enumerate_paths(
    w: &Window,
    max_size: usize,
    adj: Adjacency,
) -> impl Iterator<Item = GridSet> {
    InducedPaths::new(GridGraph { win: *w, adj }, max_size).map(|pts| pts.into_iter().collect())
}

/// Every Jordan curve in the Khalimsky window with at most `max_size`
/// points, each exactly once.
pub fn enumerate_jordan_curves(w: &Window, max_size: usize) -> impl Iterator<Item = KSet> {
    InducedCycles::new(KhalimskyGraph { win: *w }, max_size)
        .filter(|pts| pts.len() >= 4)
        .map(|pts| pts.into_iter().collect())
}

/// Every arc with two or more points in the Khalimsky window, each
/// exactly once.
pub fn enumerate_arcs(w: &Window, max_size: usize) -> impl Iterator<Item = KSet> {
    InducedPaths::new(KhalimskyGraph { win: *w }, max_size).map(|pts| pts.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::khalimsky::KClass;
    use crate::rosenfeld::PathClass;
    use std::collections::BTreeSet;

    #[test]
    fn square_window_has_one_closed_4_curve() {
        let w = Window::of_size(2, 2).unwrap();
        let curves: Vec<GridSet> = enumerate_closed_curves(&w, 4, Adjacency::Four).collect();
        assert_eq!(curves.len(), 1);
        assert_eq!(
            curves[0],
            [(0, 0), (1, 0), (0, 1), (1, 1)].into_iter().collect()
        );
    }

    #[test]
    fn three_by_three_includes_the_ring() {
        let w = Window::of_size(3, 3).unwrap();
        let ring: GridSet = [
            (0, 0),
            (1, 0),
            (2, 0),
            (2, 1),
            (2, 2),
            (1, 2),
            (0, 2),
            (0, 1),
        ]
        .into_iter()
        .collect();
        assert!(enumerate_closed_curves(&w, 8, Adjacency::Four).any(|c| c == ring));
    }

    #[test]
    fn emitted_paths_classify_as_paths() {
        let w = Window::of_size(3, 3).unwrap();
        let sample: GridSet = [(0, 0), (1, 1), (2, 1)].into_iter().collect();
        let mut found = false;
        for p in enumerate_paths(&w, 3, Adjacency::Eight) {
            assert!(p.classify(Adjacency::Eight).is_path(), "{p:?}");
            found |= p == sample;
        }
        assert!(found);
    }

    #[test]
    fn emitted_curves_classify_as_closed() {
        let w = Window::of_size(3, 3).unwrap();
        for c in enumerate_closed_curves(&w, 8, Adjacency::Eight) {
            assert_eq!(c.classify(Adjacency::Eight), PathClass::ClosedCurve);
        }
    }

    #[test]
    fn emitted_jordan_curves_classify_as_jordan() {
        let w = Window::of_size(4, 4).unwrap();
        let mut count = 0;
        for j in enumerate_jordan_curves(&w, 8) {
            assert_eq!(j.classify(), KClass::JordanCurve, "{j:?}");
            count += 1;
        }
        assert!(count > 0);
    }

    #[test]
    fn no_duplicates_emitted() {
        let w = Window::of_size(3, 3).unwrap();
        let mut seen = BTreeSet::new();
        for c in enumerate_closed_curves(&w, 9, Adjacency::Eight) {
            assert!(seen.insert(c.as_slice().to_vec()), "duplicate {c:?}");
        }
        let mut seen = BTreeSet::new();
        for p in enumerate_arcs(&w, 5) {
            assert!(seen.insert(p.as_slice().to_vec()), "duplicate {p:?}");
        }
    }

    #[test]
    fn matches_brute_force_on_small_windows() {
        for (wd, ht) in [(2, 2), (3, 3), (4, 2)] {
            let w = Window::of_size(wd, ht).unwrap();
            for adj in [Adjacency::Four, Adjacency::Eight] {
                let fast: BTreeSet<GridSet> = enumerate_closed_curves(&w, 9, adj).collect();
                let brute: BTreeSet<GridSet> =
                    crate::oracle::brute_force_closed_curves(&w, 9, adj)
                        .into_iter()
                        .collect();
                assert_eq!(fast, brute, "curves {adj} in {wd}x{ht}");

                let fast: BTreeSet<GridSet> = enumerate_paths(&w, 6, adj).collect();
                let brute: BTreeSet<GridSet> = crate::oracle::brute_force_paths(&w, 6, adj)
                    .into_iter()
                    .collect();
                assert_eq!(fast, brute, "paths {adj} in {wd}x{ht}");
            }
            let fast: BTreeSet<KSet> = enumerate_jordan_curves(&w, 9).collect();
            let brute: BTreeSet<KSet> = crate::oracle::brute_force_jordan_curves(&w, 9)
                .into_iter()
                .collect();
            assert_eq!(fast, brute, "jordan curves in {wd}x{ht}");

            let fast: BTreeSet<KSet> = enumerate_arcs(&w, 6).collect();
            let brute: BTreeSet<KSet> = crate::oracle::brute_force_arcs(&w, 6)
                .into_iter()
                .collect();
            assert_eq!(fast, brute, "arcs in {wd}x{ht}");
        }
    }
}
