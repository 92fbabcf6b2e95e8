//! Cross-cutting properties: partition laws, the path-existence
//! characterization of connectivity, slant bijections, and agreements
//! with the reference oracles.

use std::collections::BTreeSet;

use proptest::prelude::*;

use digitop::harness::{
    enumerate_jordan_curves, enumerate_paths, random_grid_set, random_k_set, Window,
};
use digitop::khalimsky::{KPoint, KSet};
use digitop::oracle;
use digitop::rosenfeld::{are_adjacent, sets_adjacent, Adjacency, GridPoint, GridSet, PathClass};
use digitop::slant::{expand, slant_set, unslant_set};

fn arbitrary_points() -> impl Strategy<Value = Vec<(i32, i32)>> {
    proptest::collection::vec((-8i32..8, -8i32..8), 0..40)
}

proptest! {
    #[test]
    fn grid_set_is_canonical(pts in arbitrary_points(), seed in 0u64..u64::MAX) {
        let set: GridSet = pts.iter().copied().collect();
        // any reordering builds the same set
        let mut shuffled = pts.clone();
        let n = shuffled.len();
        let mut state = seed;
        for i in (1..n).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1);
            shuffled.swap(i, (state % (i as u64 + 1)) as usize);
        }
        let reordered: GridSet = shuffled.into_iter().collect();
        prop_assert_eq!(set.clone(), reordered);
        // iteration is sorted and duplicate-free
        let listed: Vec<GridPoint> = set.iter().collect();
        let mut sorted = listed.clone();
        sorted.sort_unstable();
        sorted.dedup();
        prop_assert_eq!(listed, sorted);
    }

    #[test]
    fn components_partition_laws(pts in arbitrary_points(), eight in any::<bool>()) {
        let adj = if eight { Adjacency::Eight } else { Adjacency::Four };
        let set: GridSet = pts.into_iter().collect();
        let parts = set.components(adj);
        // cover, disjointness, internal connectivity, mutual separation
        let mut union = GridSet::new();
        for c in parts.components() {
            prop_assert!(!c.is_empty());
            prop_assert!(c.is_subset_of(&set));
            prop_assert!(union.is_disjoint_from(c));
            union = union.union(c);
            prop_assert!(c.is_connected(adj));
        }
        prop_assert_eq!(union, set);
        for (i, a) in parts.components().iter().enumerate() {
            for b in parts.components().iter().skip(i + 1) {
                prop_assert!(!sets_adjacent(a, b, adj));
                // canonical order by minimum point
                prop_assert!(a.min_point() < b.min_point());
            }
        }
    }

    #[test]
    fn slant_round_trips(pts in arbitrary_points()) {
        let a: GridSet = pts.into_iter().collect();
        prop_assert_eq!(unslant_set(&slant_set(&a)), a.clone());
        // preimage-of-expansion identity
        prop_assert_eq!(unslant_set(&expand(&a)), a.clone());
        // the slant image carries exactly the pure points of the expansion
        prop_assert_eq!(expand(&a).pure_points(), slant_set(&a));
    }
}

/// Search for a path inside `s` whose endpoints are exactly `x` and
/// `y`: depth-first over chordless extensions, the literal reading of
/// the path definition.
fn path_between_exists(s: &GridSet, x: GridPoint, y: GridPoint, adj: Adjacency) -> bool {
    fn extend(s: &GridSet, path: &mut Vec<GridPoint>, goal: GridPoint, adj: Adjacency) -> bool {
        let tip = *path.last().unwrap();
        if tip == goal {
            return true;
        }
        let candidates: Vec<GridPoint> = s
            .iter()
            .filter(|&q| {
                are_adjacent(q, tip, adj)
                    && !path.contains(&q)
                    && path[..path.len() - 1].iter().all(|&p| !are_adjacent(q, p, adj))
            })
            .collect();
        for q in candidates {
            path.push(q);
            if extend(s, path, goal, adj) {
                return true;
            }
            path.pop();
        }
        false
    }
    let mut path = vec![x];
    extend(s, &mut path, y, adj)
}

#[test]
fn connectivity_is_pairwise_path_existence() {
    // every subset of a 3x3 window, both adjacencies
    let cells: Vec<GridPoint> = Window::of_size(3, 3)
        .unwrap()
        .points()
        .map(GridPoint::from)
        .collect();
    for mask in 0u32..(1 << 9) {
        let s: GridSet = cells
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, &p)| p)
            .collect();
        for adj in [Adjacency::Four, Adjacency::Eight] {
            let connected = s.is_connected(adj);
            let pairwise = s.iter().all(|x| {
                s.iter()
                    .filter(|&y| y > x)
                    .all(|y| path_between_exists(&s, x, y, adj))
            });
            assert_eq!(connected, pairwise, "{s:?} under {adj}");
        }
    }
}

#[test]
fn path_deletion_behaves() {
    let w = Window::of_size(4, 4).unwrap();
    for c in enumerate_paths(&w, 6, Adjacency::Eight) {
        let PathClass::Path(a, b) = c.classify(Adjacency::Eight) else {
            panic!("generator emits paths");
        };
        for end in [a, b] {
            let rest = c.without(end);
            assert!(
                rest.len() == 1 || rest.classify(Adjacency::Eight).is_path(),
                "removing endpoint {end} of {c:?}"
            );
        }
        for p in c.iter().filter(|&p| p != a && p != b) {
            assert_eq!(
                c.without(p).components(Adjacency::Eight).len(),
                2,
                "removing interior {p} of {c:?}"
            );
        }
    }
}

#[test]
fn thirty_random_points_match_flood_oracle() {
    let w = Window::of_size(10, 10).unwrap();
    let mut found = false;
    for seed in 0..200 {
        let s = random_grid_set(&w, 0.3, seed);
        if s.len() == 30 {
            found = true;
            let parts = s.components(Adjacency::Eight);
            assert_eq!(
                parts.components().to_vec(),
                oracle::flood_grid_components(&s, Adjacency::Eight)
            );
        }
    }
    assert!(found, "no 30-point sample drawn");
}

#[test]
fn khalimsky_components_match_topological_oracle() {
    let w = Window::of_size(8, 8).unwrap();
    for seed in 0..120 {
        let s = random_k_set(&w, 0.35, seed);
        assert_eq!(
            s.components().len(),
            oracle::topological_component_count(&s),
            "{s:?}"
        );
        assert_eq!(
            s.components().components().to_vec(),
            oracle::flood_k_components(&s)
        );
    }
}

#[test]
fn arc_criterion_matches_homeomorphism_search_up_to_seven_points() {
    // every subset with at most 7 points of a 4x4 Khalimsky window
    let cells: Vec<KPoint> = Window::of_size(4, 4)
        .unwrap()
        .points()
        .map(KPoint::from)
        .collect();
    for mask in 1u32..(1 << 16) {
        if mask.count_ones() > 7 {
            continue;
        }
        let s: KSet = cells
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, &p)| p)
            .collect();
        assert_eq!(
            s.classify().is_arc(),
            oracle::is_interval_image(&s),
            "degree criterion vs homeomorphism search on {s:?}"
        );
    }
}

#[test]
fn four_point_jordan_curves_are_mixed_point_diamonds() {
    // anchors of all four parities
    for (ox, oy) in [(0, 0), (1, 0), (0, 1), (1, 1)] {
        let w = Window::new(ox, ox + 4, oy, oy + 4).unwrap();
        let mut seen = 0;
        for j in enumerate_jordan_curves(&w, 4) {
            assert_eq!(j.len(), 4);
            seen += 1;
            let (lo, hi) = j.bounding_box().unwrap();
            let mut center = None;
            for x in lo.x..=hi.x {
                for y in lo.y..=hi.y {
                    let m = KPoint::new(x, y);
                    if m.is_mixed() && m.adjacency() == j {
                        center = Some(m);
                    }
                }
            }
            assert!(
                center.is_some(),
                "4-point Jordan curve {j:?} is not the adjacency set of a mixed point"
            );
        }
        assert!(seen > 0, "no 4-point curves in window at ({ox}, {oy})");
    }
}

#[test]
fn generated_jordan_curves_have_unique_canonical_forms() {
    let w = Window::of_size(5, 5).unwrap();
    let mut seen = BTreeSet::new();
    for j in enumerate_jordan_curves(&w, 10) {
        assert!(seen.insert(j.as_slice().to_vec()), "duplicate {j:?}");
    }
}
