//! Correspondence suites for the slant map and the expansion operator.

use super::{cex, grid_input, k_input, scan, Case, SuiteClock};
use crate::harness::{
    enumerate_arcs, enumerate_closed_curves, enumerate_jordan_curves, enumerate_paths,
    random_grid_set, random_k_set, SuiteParams,
};
use crate::khalimsky::{KClass, KPoint, KSet};
use crate::report::VerificationReport;
use crate::rosenfeld::{Adjacency, GridSet, PathClass};
use crate::slant::{expand, is_expansion_fixed, slant, slant_set, unslant, unslant_set};

fn arc_endpoints(s: &KSet) -> Option<(KPoint, KPoint)> {
    match s.classify() {
        KClass::Arc(a, b) => Some((a, b)),
        _ => None,
    }
}

/// Forward direction over every 8-path and closed 8-curve in the
/// window: expansion yields an arc with the corresponding pure
/// endpoints, or a Jordan curve. The reverse direction is spot-checked
/// on seeded random sets: an arc-shaped or Jordan-shaped expansion
/// forces the path or curve shape back on the grid side.
pub fn arc_gamma_star(params: &SuiteParams) -> VerificationReport {
    let clock = SuiteClock::start("arc-gamma-star");
    let paths = enumerate_paths(&params.window, params.max_size, Adjacency::Eight);
    let tally = scan(paths, |c| {
        let PathClass::Path(e1, e2) = c.classify(Adjacency::Eight) else {
            unreachable!("generator emits paths");
        };
        let star = expand(&c);
        let inputs = || vec![grid_input("8-path", &c), k_input("expansion", &star)];
        match star.classify() {
            KClass::Arc(a, b) if a.is_pure() && b.is_pure() => {
                let want = KSet::from_points([slant(e1), slant(e2)]);
                if KSet::from_points([a, b]) != want {
                    return Case::fail(cex(
                        inputs(),
                        "arc endpoints do not correspond to the path endpoints",
                        format!("{want:?}"),
                        format!("{:?}", KSet::from_points([a, b])),
                    ));
                }
                Case::pass()
            }
            other => Case::fail(cex(
                inputs(),
                "expansion of an 8-path is not an arc with pure endpoints",
                "arc with pure endpoints",
                format!("{other:?}"),
            )),
        }
    });

    let curves = enumerate_closed_curves(&params.window, params.max_size, Adjacency::Eight);
    let curve_tally = scan(curves, |c| {
        if c.len() < 4 {
            // the expansion of a 3-point curve picks up a degree-3 point
            return Case::skipped();
        }
        let star = expand(&c);
        if star.classify() != KClass::JordanCurve {
            return Case::fail(cex(
                vec![grid_input("closed 8-curve", &c), k_input("expansion", &star)],
                "expansion of a closed 8-curve is not a Jordan curve",
                "Jordan curve",
                format!("{:?}", star.classify()),
            ));
        }
        Case::pass()
    });

    // reverse direction on random sets
    let seeds = (0..params.samples as u64).map(|i| params.seed.wrapping_add(i));
    let densities = params.densities.clone();
    let window = params.window;
    let reverse_tally = scan(seeds, move |s| {
        let d = densities[(s % densities.len() as u64) as usize];
        let a = random_grid_set(&window, d, s);
        let star = expand(&a);
        let inputs = || vec![grid_input("set", &a), k_input("expansion", &star)];
        match star.classify() {
            KClass::Arc(x, y) if x.is_pure() && y.is_pure() => {
                if !a.classify(Adjacency::Eight).is_path() && a.len() >= 2 {
                    return Case::fail(cex(
                        inputs(),
                        "arc-shaped expansion with pure endpoints, but the set is not an 8-path",
                        "8-path",
                        format!("{:?}", a.classify(Adjacency::Eight)),
                    ));
                }
            }
            KClass::JordanCurve if !a.classify(Adjacency::Eight).is_closed_curve() => {
                return Case::fail(cex(
                    inputs(),
                    "Jordan-shaped expansion, but the set is not a closed 8-curve",
                    "closed 8-curve",
                    format!("{:?}", a.classify(Adjacency::Eight)),
                ));
            }
            _ => {}
        }
        Case::pass()
    });

    let notes = vec![format!(
        "paths and closed 8-curves up to {} points, plus {} random reverse checks",
        params.max_size, params.samples
    )];
    clock.report(tally.merge(curve_tally).merge(reverse_tally), notes)
}

/// Over every arc in the slant image of the window: with pure
/// endpoints, being expansion-fixed is equivalent to pulling back to an
/// 8-path (with corresponding endpoints); with mixed endpoints, a
/// path-shaped pullback forces the endpoint-stripped arc to be fixed.
/// Over every Jordan curve there: expansion-fixed is equivalent to a
/// closed-8-curve pullback.
pub fn path_pullback(params: &SuiteParams) -> VerificationReport {
    let clock = SuiteClock::start("path-pullback");
    let kwin = params.window.slant_image();
    let arcs = enumerate_arcs(&kwin, params.max_size);
    let tally = scan(arcs, |c| {
        let (z, w) = arc_endpoints(&c).expect("generator emits arcs");
        let pullback = unslant_set(&c);
        let shape = pullback.classify(Adjacency::Eight);
        let inputs = || vec![k_input("arc", &c), grid_input("pullback", &pullback)];
        if z.is_pure() && w.is_pure() {
            let fixed = expand(&pullback) == c;
            let is_path = shape.is_path();
            if fixed != is_path {
                return Case::fail(cex(
                    inputs(),
                    "expansion-fixed does not match the 8-path pullback",
                    format!("both or neither (fixed = {fixed})"),
                    format!("8-path = {is_path}"),
                ));
            }
            if let PathClass::Path(a, b) = shape {
                let want = GridSet::from_points([
                    unslant(z).expect("pure"),
                    unslant(w).expect("pure"),
                ]);
                if GridSet::from_points([a, b]) != want {
                    return Case::fail(cex(
                        inputs(),
                        "pullback endpoints do not correspond to the arc endpoints",
                        format!("{want:?}"),
                        format!("{:?}", GridSet::from_points([a, b])),
                    ));
                }
            }
            Case::pass()
        } else if z.is_mixed() && w.is_mixed() && shape.is_path() {
            let stripped = c.without(z).without(w);
            if expand(&unslant_set(&stripped)) != stripped {
                return Case::fail(cex(
                    inputs(),
                    "endpoint-stripped arc is not expansion-fixed",
                    format!("{stripped:?}"),
                    format!("{:?}", expand(&unslant_set(&stripped))),
                ));
            }
            Case::pass()
        } else {
            Case::skipped()
        }
    });

    let curves = enumerate_jordan_curves(&kwin, params.max_size);
    let curve_tally = scan(curves, |j| {
        let fixed = is_expansion_fixed(&j);
        let closed = unslant_set(&j).classify(Adjacency::Eight).is_closed_curve();
        if fixed != closed {
            return Case::fail(cex(
                vec![k_input("Jordan curve", &j)],
                "expansion-fixed does not match the closed-8-curve pullback",
                format!("both or neither (fixed = {fixed})"),
                format!("closed 8-curve = {closed}"),
            ));
        }
        Case::pass()
    });

    let notes = vec![format!("arcs and Jordan curves in {kwin}")];
    clock.report(tally.merge(curve_tally), notes)
}

/// Every all-pure arc pulls back to a 4-path with the corresponding
/// endpoints.
pub fn arc_pure_pullback(params: &SuiteParams) -> VerificationReport {
    let clock = SuiteClock::start("arc-pure-pullback");
    let kwin = params.window.slant_image();
    let arcs = enumerate_arcs(&kwin, params.max_size);
    let tally = scan(arcs, |c| {
        if !c.is_all_pure() {
            return Case::skipped();
        }
        let (z, w) = arc_endpoints(&c).expect("generator emits arcs");
        let pullback = unslant_set(&c);
        match pullback.classify(Adjacency::Four) {
            PathClass::Path(a, b) => {
                let want = GridSet::from_points([
                    unslant(z).expect("pure"),
                    unslant(w).expect("pure"),
                ]);
                if GridSet::from_points([a, b]) == want {
                    Case::pass()
                } else {
                    Case::fail(cex(
                        vec![k_input("pure arc", &c)],
                        "4-path endpoints do not correspond",
                        format!("{want:?}"),
                        format!("{:?}", GridSet::from_points([a, b])),
                    ))
                }
            }
            other => Case::fail(cex(
                vec![k_input("pure arc", &c), grid_input("pullback", &pullback)],
                "pullback of an all-pure arc is not a 4-path",
                "4-path",
                format!("{other:?}"),
            )),
        }
    });
    clock.report(tally, Vec::new())
}

/// The slant image of every 4-path is an arc with the corresponding
/// endpoints.
pub fn path_gamma(params: &SuiteParams) -> VerificationReport {
    let clock = SuiteClock::start("path-gamma");
    let paths = enumerate_paths(&params.window, params.max_size, Adjacency::Four);
    let tally = scan(paths, |c| {
        let PathClass::Path(e1, e2) = c.classify(Adjacency::Four) else {
            unreachable!("generator emits paths");
        };
        let image = slant_set(&c);
        match image.classify() {
            KClass::Arc(a, b) => {
                let want = KSet::from_points([slant(e1), slant(e2)]);
                if KSet::from_points([a, b]) == want {
                    Case::pass()
                } else {
                    Case::fail(cex(
                        vec![grid_input("4-path", &c)],
                        "arc endpoints do not correspond",
                        format!("{want:?}"),
                        format!("{:?}", KSet::from_points([a, b])),
                    ))
                }
            }
            other => Case::fail(cex(
                vec![grid_input("4-path", &c), k_input("image", &image)],
                "slant image of a 4-path is not an arc",
                "arc",
                format!("{other:?}"),
            )),
        }
    });
    clock.report(tally, Vec::new())
}

/// Degree census inside the expansion of every 8-path: images of the
/// two endpoints meet the expansion in exactly one point, everything
/// else in exactly two.
pub fn endpoint_degree(params: &SuiteParams) -> VerificationReport {
    let clock = SuiteClock::start("endpoint-degree");
    let paths = enumerate_paths(&params.window, params.max_size, Adjacency::Eight);
    let tally = scan(paths, |c| {
        let PathClass::Path(e1, e2) = c.classify(Adjacency::Eight) else {
            unreachable!("generator emits paths");
        };
        let star = expand(&c);
        let ends = KSet::from_points([slant(e1), slant(e2)]);
        for z in star.iter() {
            let want = if ends.contains(z) { 1 } else { 2 };
            let got = star.degree(z);
            if got != want {
                return Case::fail(cex(
                    vec![grid_input("8-path", &c), k_input("expansion", &star)],
                    format!("degree of {z} inside the expansion"),
                    format!("{want}"),
                    format!("{got}"),
                ));
            }
        }
        Case::pass()
    });
    clock.report(tally, Vec::new())
}

/// Expansion-after-preimage: keeps exactly the pure points of any set,
/// contains every Jordan curve, and on arcs loses exactly the mixed
/// endpoints.
pub fn gamma_star_containment(params: &SuiteParams) -> VerificationReport {
    let clock = SuiteClock::start("gamma-star-containment");
    let window = params.window;
    let seeds = (0..params.samples as u64).map(|i| params.seed.wrapping_add(i));
    let densities = params.densities.clone();
    let random_tally = scan(seeds, move |s| {
        let d = densities[(s % densities.len() as u64) as usize];
        let a = random_k_set(&window, d, s);
        let star = expand(&unslant_set(&a));
        if star.pure_points() != a.pure_points() {
            return Case::fail(cex(
                vec![k_input("set", &a)],
                "expansion-after-preimage changed the pure points",
                format!("{:?}", a.pure_points()),
                format!("{:?}", star.pure_points()),
            ));
        }
        Case::pass()
    });

    let jordan_tally = scan(
        crate::harness::enumerate_jordan_curves(&window, params.max_size),
        |j| {
            let star = expand(&unslant_set(&j));
            if !j.is_subset_of(&star) {
                return Case::fail(cex(
                    vec![k_input("Jordan curve", &j), k_input("expansion", &star)],
                    "Jordan curve not contained in its expansion-after-preimage",
                    "containment",
                    format!("missing {:?}", j.difference(&star)),
                ));
            }
            Case::pass()
        },
    );

    let arc_tally = scan(enumerate_arcs(&window, params.max_size), |c| {
        let (z, w) = arc_endpoints(&c).expect("generator emits arcs");
        let star = expand(&unslant_set(&c));
        let mixed_ends: Vec<KPoint> = [z, w].into_iter().filter(|p| p.is_mixed()).collect();
        let kept: KSet = c
            .iter()
            .filter(|p| !mixed_ends.contains(p))
            .collect();
        if !kept.is_subset_of(&star) {
            return Case::fail(cex(
                vec![k_input("arc", &c), k_input("expansion", &star)],
                "arc minus mixed endpoints not contained in its expansion-after-preimage",
                "containment",
                format!("missing {:?}", kept.difference(&star)),
            ));
        }
        for e in mixed_ends {
            if star.contains(e) {
                return Case::fail(cex(
                    vec![k_input("arc", &c), k_input("expansion", &star)],
                    format!("mixed endpoint {e} survived expansion-after-preimage"),
                    "dropped",
                    "present",
                ));
            }
        }
        Case::pass()
    });

    clock.report(random_tally.merge(jordan_tally).merge(arc_tally), Vec::new())
}
