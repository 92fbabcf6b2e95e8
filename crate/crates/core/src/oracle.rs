//! Independent reference implementations.
//!
//! Everything here recomputes a result the main modules also produce,
//! by a deliberately different route: breadth-first flood fill instead
//! of union-find, minimal-open-set chasing instead of the adjacency
//! graph, brute-force subset filtering instead of backtracking
//! enumeration, and a permutation search for interval homeomorphisms
//! instead of the degree criterion. Verification suites and tests pit
//! the two routes against each other.

use std::collections::{BTreeSet, VecDeque};

use crate::harness::Window;
use crate::khalimsky::{KPoint, KSet};
use crate::rosenfeld::{Adjacency, GridPoint, GridSet};

fn grid_adjacent(p: (i32, i32), q: (i32, i32), adj: Adjacency) -> bool {
    let (dx, dy) = ((p.0 - q.0).abs(), (p.1 - q.1).abs());
    match adj {
        Adjacency::Four => dx + dy == 1,
        Adjacency::Eight => dx.max(dy) == 1,
    }
}

fn khalimsky_adjacent(p: (i32, i32), q: (i32, i32)) -> bool {
    let (dx, dy) = ((p.0 - q.0).abs(), (p.1 - q.1).abs());
    if dx.max(dy) != 1 {
        return false;
    }
    dx + dy == 1 || (p.0 - p.1) % 2 == 0
}

fn flood<F: Fn((i32, i32), (i32, i32)) -> bool>(
    points: &[(i32, i32)],
    adjacent: F,
) -> Vec<Vec<(i32, i32)>> {
    let mut seen = vec![false; points.len()];
    let mut out = Vec::new();
    for start in 0..points.len() {
        if seen[start] {
            continue;
        }
        let mut comp = Vec::new();
        let mut queue = VecDeque::from([start]);
        seen[start] = true;
        while let Some(i) = queue.pop_front() {
            comp.push(points[i]);
            for (j, &q) in points.iter().enumerate() {
                if !seen[j] && adjacent(points[i], q) {
                    seen[j] = true;
                    queue.push_back(j);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Components by breadth-first flood fill, ordered by minimum point.
pub fn flood_grid_components(s: &GridSet, adj: Adjacency) -> Vec<GridSet> {
    let pts: Vec<(i32, i32)> = s.iter().map(|p| (p.x, p.y)).collect();
    flood(&pts, |p, q| grid_adjacent(p, q, adj))
        .into_iter()
        .map(|c| c.into_iter().collect())
        .collect()
}

/// Khalimsky components by flood fill.
pub fn flood_k_components(s: &KSet) -> Vec<KSet> {
    let pts: Vec<(i32, i32)> = s.iter().map(|p| (p.x, p.y)).collect();
    flood(&pts, khalimsky_adjacent)
        .into_iter()
        .map(|c| c.into_iter().collect())
        .collect()
}

/// Complement components of a grid curve: flood fill over the bounding
/// box inflated by 2, the border-touching region first. Returns
/// `(outer, inner components)`, inner components ordered canonically.
pub fn flood_grid_complement(j: &GridSet, adj: Adjacency) -> Option<(GridSet, Vec<GridSet>)> {
    let (lo, hi) = j.bounding_box()?;
    let (lo, hi) = ((lo.x - 2, lo.y - 2), (hi.x + 2, hi.y + 2));
    let mut pts = Vec::new();
    for x in lo.0..=hi.0 {
        for y in lo.1..=hi.1 {
            if !j.contains(GridPoint::new(x, y)) {
                pts.push((x, y));
            }
        }
    }
    let comps = flood(&pts, |p, q| grid_adjacent(p, q, adj));
    let outer_idx = comps.iter().position(|c| c.contains(&lo))?;
    let outer: GridSet = comps[outer_idx].iter().copied().collect();
    let inners = comps
        .into_iter()
        .enumerate()
        .filter(|(i, _)| *i != outer_idx)
        .map(|(_, c)| c.into_iter().collect())
        .collect();
    Some((outer, inners))
}

/// Complement components of a Khalimsky curve by flood fill.
pub fn flood_k_complement(j: &KSet) -> Option<(KSet, Vec<KSet>)> {
    let (lo, hi) = j.bounding_box()?;
    let (lo, hi) = ((lo.x - 2, lo.y - 2), (hi.x + 2, hi.y + 2));
    let mut pts = Vec::new();
    for x in lo.0..=hi.0 {
        for y in lo.1..=hi.1 {
            if !j.contains(KPoint::new(x, y)) {
                pts.push((x, y));
            }
        }
    }
    let comps = flood(&pts, khalimsky_adjacent);
    let outer_idx = comps.iter().position(|c| c.contains(&lo))?;
    let outer: KSet = comps[outer_idx].iter().copied().collect();
    let inners = comps
        .into_iter()
        .enumerate()
        .filter(|(i, _)| *i != outer_idx)
        .map(|(_, c)| c.into_iter().collect())
        .collect();
    Some((outer, inners))
}

/// Connectivity of a Khalimsky subspace computed from the topology
/// itself: the component of a point is the closure of `{p}` under
/// taking subspace minimal neighborhoods and subspace closures, with no
/// reference to the adjacency relation.
pub fn topologically_connected(s: &KSet) -> bool {
    topological_component_count(s) <= 1
}

/// Number of components of the subspace, via minimal-open-set chasing.
pub fn topological_component_count(s: &KSet) -> usize {
    let mut remaining: BTreeSet<KPoint> = s.iter().collect();
    let mut count = 0;
    while let Some(&start) = remaining.iter().next() {
        count += 1;
        let mut frontier = vec![start];
        remaining.remove(&start);
        while let Some(p) = frontier.pop() {
            for q in p.minimal_neighborhood().iter().chain(p.closure().iter()) {
                if remaining.remove(&q) {
                    frontier.push(q);
                }
            }
        }
    }
    count
}

/// Whether the subspace is homeomorphic to a finite interval of the
/// digital line, decided by searching for an order-preserving bijection
/// outright. A homeomorphism of Alexandroff spaces is exactly a
/// bijection `f` with `q ∈ N(p) ⇔ f(q) ∈ N(f(p))` (neighborhoods taken
/// in the subspaces). Intended for small sets; cost grows with `|s|!`
/// in the worst case, though degree pruning cuts it down sharply.
pub fn is_interval_image(s: &KSet) -> bool {
    let n = s.len();
    if n == 0 {
        return false;
    }
    if n == 1 {
        return true;
    }
    let pts: Vec<KPoint> = s.iter().collect();
    // parity of the interval's first element is the only freedom left
    // after translation
    [0i32, 1].iter().any(|&start| {
        let mut assigned: Vec<Option<usize>> = vec![None; n];
        let mut used = vec![false; n];
        assign(&pts, s, start, 0, &mut assigned, &mut used)
    })
}

fn interval_related(a: i32, b: i32) -> bool {
    // b ∈ N(a) within any interval containing both
    a == b || ((a - b).abs() == 1 && a % 2 == 0)
}

fn k2_related(p: KPoint, q: KPoint, s: &KSet) -> bool {
    // q ∈ N_S(p); the minimal neighborhood of the subspace is the
    // ambient one intersected with the subspace
    debug_assert!(s.contains(p) && s.contains(q));
    p.minimal_neighborhood().contains(q)
}

fn assign(
    pts: &[KPoint],
    s: &KSet,
    start: i32,
    pos: usize,
    assigned: &mut Vec<Option<usize>>,
    used: &mut Vec<bool>,
) -> bool {
    let n = pts.len();
    if pos == n {
        return true;
    }
    let v_pos = start + pos as i32;
    for cand in 0..n {
        if used[cand] {
            continue;
        }
        let ok = (0..pos).all(|prev| {
            let v_prev = start + prev as i32;
            let p_prev = pts[assigned[prev].unwrap()];
            interval_related(v_pos, v_prev) == k2_related(pts[cand], p_prev, s)
                && interval_related(v_prev, v_pos) == k2_related(p_prev, pts[cand], s)
        });
        if ok {
            assigned[pos] = Some(cand);
            used[cand] = true;
            if assign(pts, s, start, pos + 1, assigned, used) {
                return true;
            }
            assigned[pos] = None;
            used[cand] = false;
        }
    }
    false
}

fn connected_pairwise(pts: &[(i32, i32)], adjacent: impl Fn((i32, i32), (i32, i32)) -> bool) -> bool {
    if pts.is_empty() {
        return true;
    }
    let mut seen = vec![false; pts.len()];
    let mut queue = VecDeque::from([0]);
    seen[0] = true;
    let mut reached = 1;
    while let Some(i) = queue.pop_front() {
        for j in 0..pts.len() {
            if !seen[j] && adjacent(pts[i], pts[j]) {
                seen[j] = true;
                reached += 1;
                queue.push_back(j);
            }
        }
    }
    reached == pts.len()
}

fn for_each_subset(w: &Window, max_size: usize, mut f: impl FnMut(&[(i32, i32)])) {
    let cells: Vec<(i32, i32)> = w.points().collect();
    assert!(
        cells.len() <= 20,
        "brute-force subset filtering is capped at area 20"
    );
    let mut subset = Vec::with_capacity(max_size);
    for mask in 1u32..(1 << cells.len()) {
        if (mask.count_ones() as usize) > max_size {
            continue;
        }
        subset.clear();
        for (i, &c) in cells.iter().enumerate() {
            if mask & (1 << i) != 0 {
                subset.push(c);
            }
        }
        f(&subset);
    }
}

fn degrees(pts: &[(i32, i32)], adjacent: impl Fn((i32, i32), (i32, i32)) -> bool) -> Vec<usize> {
    pts.iter()
        .map(|&p| pts.iter().filter(|&&q| adjacent(p, q)).count())
        .collect()
}

/// Every closed curve in the window found by filtering all subsets:
/// nonempty, all degrees exactly two, connected.
pub fn brute_force_closed_curves(w: &Window, max_size: usize, adj: Adjacency) -> Vec<GridSet> {
    let mut out = Vec::new();
    for_each_subset(w, max_size, |pts| {
        let adjacent = |p, q| grid_adjacent(p, q, adj);
        if degrees(pts, adjacent).iter().all(|&d| d == 2) && connected_pairwise(pts, adjacent) {
            out.push(pts.iter().copied().collect());
        }
    });
    out
}

/// Every path in the window found by filtering all subsets: two points
/// of degree one, the rest of degree two, connected.
pub fn brute_force_paths(w: &Window, max_size: usize, adj: Adjacency) -> Vec<GridSet> {
    let mut out = Vec::new();
    for_each_subset(w, max_size, |pts| {
        let adjacent = |p, q| grid_adjacent(p, q, adj);
        let degs = degrees(pts, adjacent);
        let ones = degs.iter().filter(|&&d| d == 1).count();
        let twos = degs.iter().filter(|&&d| d == 2).count();
        if ones == 2 && ones + twos == pts.len() && connected_pairwise(pts, adjacent) {
            out.push(pts.iter().copied().collect());
        }
    });
    out
}

/// Every Jordan curve in the window found by filtering all subsets:
/// connected, at least four points, all degrees exactly two.
pub fn brute_force_jordan_curves(w: &Window, max_size: usize) -> Vec<KSet> {
    let mut out = Vec::new();
    for_each_subset(w, max_size, |pts| {
        if pts.len() >= 4
            && degrees(pts, khalimsky_adjacent).iter().all(|&d| d == 2)
            && connected_pairwise(pts, khalimsky_adjacent)
        {
            out.push(pts.iter().copied().collect());
        }
    });
    out
}

/// Every arc with at least two points, by subset filtering.
pub fn brute_force_arcs(w: &Window, max_size: usize) -> Vec<KSet> {
    let mut out = Vec::new();
    for_each_subset(w, max_size, |pts| {
        let degs = degrees(pts, khalimsky_adjacent);
        let ones = degs.iter().filter(|&&d| d == 1).count();
        let twos = degs.iter().filter(|&&d| d == 2).count();
        if pts.len() >= 2
            && ones == 2
            && ones + twos == pts.len()
            && connected_pairwise(pts, khalimsky_adjacent)
        {
            out.push(pts.iter().copied().collect());
        }
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::khalimsky::KClass;

    fn ks(pts: &[(i32, i32)]) -> KSet {
        pts.iter().copied().collect()
    }

    #[test]
    fn flood_matches_union_find_on_samples() {
        let s: GridSet = [(0, 0), (1, 1), (3, 3), (4, 3), (0, 5)]
            .into_iter()
            .collect();
        for adj in [Adjacency::Four, Adjacency::Eight] {
            let a = flood_grid_components(&s, adj);
            let b = s.components(adj);
            assert_eq!(a, b.components().to_vec());
        }
    }

    #[test]
    fn topological_connectivity_matches_adjacency_route() {
        // mixed pair: disconnected both ways
        assert!(!topologically_connected(&ks(&[(0, 1), (1, 0)])));
        // adjacent pure pair
        assert!(topologically_connected(&ks(&[(0, 0), (1, 1)])));
        assert!(topologically_connected(&KSet::new()));
        assert_eq!(topological_component_count(&ks(&[(0, 0), (5, 5)])), 2);
    }

    #[test]
    fn interval_images() {
        assert!(is_interval_image(&ks(&[(0, 0)])));
        assert!(is_interval_image(&ks(&[(0, 0), (1, 1)])));
        assert!(is_interval_image(&ks(&[(0, 0), (1, 0), (2, 0)])));
        // a 3-cycle is connected but not an interval image
        assert!(!is_interval_image(&ks(&[(0, 0), (1, 0), (1, 1)])));
        // disconnected pair
        assert!(!is_interval_image(&ks(&[(0, 0), (4, 4)])));
        // the 4-point Jordan curve is not an arc
        assert!(!is_interval_image(&KPoint::new(1, 0).adjacency()));
    }

    #[test]
    fn interval_oracle_agrees_with_degree_criterion_on_small_window() {
        let w = Window::of_size(3, 3).unwrap();
        let mut checked = 0u32;
        for_each_subset(&w, 5, |pts| {
            let s: KSet = pts.iter().copied().collect();
            let is_arc = s.classify().is_arc();
            assert_eq!(
                is_arc,
                is_interval_image(&s),
                "degree criterion and homeomorphism search disagree on {s:?}"
            );
            checked += 1;
        });
        assert!(checked > 0);
    }

    #[test]
    fn brute_force_square_window() {
        let w = Window::of_size(2, 2).unwrap();
        let curves = brute_force_closed_curves(&w, 4, Adjacency::Four);
        assert_eq!(curves.len(), 1);
        assert_eq!(curves[0], [(0, 0), (1, 0), (0, 1), (1, 1)].into_iter().collect());
    }

    #[test]
    fn brute_force_arcs_match_classifier() {
        let w = Window::of_size(3, 3).unwrap();
        for arc in brute_force_arcs(&w, 4) {
            assert!(matches!(arc.classify(), KClass::Arc(_, _)));
        }
    }
}
