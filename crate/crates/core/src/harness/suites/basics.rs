//! Pointwise structure of the Khalimsky plane and the slant map.

use super::{cex, grid_input, k_input, scan, Case, SuiteClock};
use crate::harness::SuiteParams;
use crate::khalimsky::{cl_line, n_line, shared_mixed, KPoint, KSet};
use crate::report::VerificationReport;
use crate::rosenfeld::{are_adjacent, Adjacency, GridPoint, GridSet};
use crate::slant::slant;

fn one_point_k(label: &str, p: KPoint) -> Vec<crate::report::LabeledSet> {
    vec![k_input(label, &KSet::from_points([p]))]
}

/// Exhaustive pointwise checks over the window: the two displayed
/// adjacency formulas agree with the neighborhood/closure route, purity
/// determines the neighbor census, and the line operators are dual.
pub fn adjacency_formula(params: &SuiteParams) -> VerificationReport {
    let clock = SuiteClock::start("adjacency-formula");
    let w = params.window;
    let tally = scan(w.points(), |(x, y)| {
        let p = KPoint::new(x, y);
        let direct = p.adjacency();
        let derived = p.minimal_neighborhood().union(&p.closure()).without(p);
        if direct != derived {
            return Case::fail(cex(
                one_point_k("point", p),
                "adjacency differs from (minimal neighborhood ∪ closure) \\ point",
                format!("{derived:?}"),
                format!("{direct:?}"),
            ));
        }
        let (pure_n, mixed_n) = (
            direct.iter().filter(|q| q.is_pure()).count(),
            direct.iter().filter(|q| q.is_mixed()).count(),
        );
        let want = if p.is_pure() { (4, 4) } else { (4, 0) };
        if (pure_n, mixed_n) != want {
            return Case::fail(cex(
                one_point_k("point", p),
                "neighbor census does not match purity",
                format!("{want:?} (pure, mixed)"),
                format!("({pure_n}, {mixed_n})"),
            ));
        }
        Case::pass()
    });
    // line duality over the window's x-range
    let range = w.x_min() - 1..=w.x_max() + 1;
    let duality = scan(
        range
            .clone()
            .flat_map(|m| range.clone().map(move |n| (m, n))),
        |(m, n)| {
            if n_line(m).contains(&n) != cl_line(n).contains(&m) {
                Case::fail(cex(
                    Vec::new(),
                    format!("line duality fails at ({m}, {n})"),
                    "n ∈ N(m) iff m ∈ cl(n)",
                    "mismatch",
                ))
            } else {
                Case::pass()
            }
        },
    );
    clock.report(tally.merge(duality), Vec::new())
}

/// Over all distinct pure pairs in the window: sharing exactly two
/// adjacent mixed points is equivalent to being adjacent.
pub fn mixed_pair(params: &SuiteParams) -> VerificationReport {
    let clock = SuiteClock::start("mixed-pair");
    let pure: Vec<KPoint> = params
        .window
        .points()
        .map(KPoint::from)
        .filter(|p| p.is_pure())
        .collect();
    let pairs = pure
        .iter()
        .flat_map(|&a| pure.iter().map(move |&b| (a, b)))
        .filter(|(a, b)| a < b);
    let tally = scan(pairs, |(a, b)| {
        let shared = shared_mixed(a, b).expect("pure distinct points");
        let adjacent = a.adjacency().contains(b);
        if (shared.len() == 2) != adjacent {
            return Case::fail(cex(
                vec![k_input("pair", &KSet::from_points([a, b]))],
                "shared mixed points do not characterize adjacency",
                format!("two shared mixed points iff adjacent (adjacent = {adjacent})"),
                format!("{} shared: {shared:?}", shared.len()),
            ));
        }
        Case::pass()
    });
    clock.report(tally, Vec::new())
}

/// Over all distinct grid pairs in the window: 4-adjacency corresponds
/// to image adjacency, and strict 8-adjacency to a unique shared mixed
/// point of the images.
pub fn slant_adjacency(params: &SuiteParams) -> VerificationReport {
    let clock = SuiteClock::start("slant-adjacency");
    let pts: Vec<GridPoint> = params.window.points().map(GridPoint::from).collect();
    let pairs = pts
        .iter()
        .flat_map(|&a| pts.iter().map(move |&b| (a, b)))
        .filter(|(a, b)| a < b);
    let tally = scan(pairs, |(a, b)| {
        let set = || vec![grid_input("pair", &GridSet::from_points([a, b]))];
        let four = are_adjacent(a, b, Adjacency::Four);
        let image_adjacent = slant(a).adjacency().contains(slant(b));
        if four != image_adjacent {
            return Case::fail(cex(
                set(),
                "4-adjacency does not match image adjacency",
                format!("4-adjacent = {four}"),
                format!("images adjacent = {image_adjacent}"),
            ));
        }
        let strict_eight = are_adjacent(a, b, Adjacency::Eight) && !four;
        let shared = shared_mixed(slant(a), slant(b)).expect("pure distinct images");
        if strict_eight != (shared.len() == 1) {
            return Case::fail(cex(
                set(),
                "strict 8-adjacency does not match a unique shared mixed point",
                format!("strictly 8-adjacent = {strict_eight}"),
                format!("{} shared mixed points: {shared:?}", shared.len()),
            ));
        }
        Case::pass()
    });
    clock.report(tally, Vec::new())
}
