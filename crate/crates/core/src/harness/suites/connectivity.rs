//! Connectivity preservation across the bridge.

use super::{cex, grid_input, k_input, scan, Case, SuiteClock};
use crate::harness::{
    enumerate_closed_curves, enumerate_jordan_curves, random_grid_set, random_k_set, SuiteParams,
};
use crate::jordan::{bracket, decompose, Regime};
use crate::khalimsky::KSet;
use crate::oracle;
use crate::report::VerificationReport;
use crate::rosenfeld::{sets_adjacent, Adjacency, GridSet};
use crate::slant::{expand, slant_set, unslant_set};

fn seeded_cases(params: &SuiteParams) -> impl Iterator<Item = (u64, f64)> + Send {
    let densities = params.densities.clone();
    let base = params.seed;
    (0..params.samples as u64).flat_map(move |i| {
        densities
            .clone()
            .into_iter()
            .enumerate()
            .map(move |(d_idx, d)| (base.wrapping_add(i * 1000 + d_idx as u64), d))
    })
}

fn connectivity_equivalence(
    name: &'static str,
    params: &SuiteParams,
    adj: Adjacency,
    image: fn(&GridSet) -> KSet,
) -> VerificationReport {
    let clock = SuiteClock::start(name);
    let window = params.window;
    let tally = scan(seeded_cases(params), move |(seed, density)| {
        let a = random_grid_set(&window, density, seed);
        let img = image(&a);
        let grid_connected = a.is_connected(adj);
        let k_connected = img.is_connected();
        let inputs = || vec![grid_input("set", &a), k_input("image", &img)];
        // both sides against their independent oracles
        let grid_oracle = oracle::flood_grid_components(&a, adj).len() <= 1;
        if grid_connected != grid_oracle {
            return Case::fail(cex(
                inputs(),
                "grid connectivity disagrees with the flood-fill oracle",
                format!("{grid_oracle}"),
                format!("{grid_connected}"),
            ));
        }
        let k_flood = oracle::flood_k_components(&img).len() <= 1;
        if k_connected != k_flood {
            return Case::fail(cex(
                inputs(),
                "Khalimsky connectivity disagrees with the flood-fill oracle",
                format!("{k_flood}"),
                format!("{k_connected}"),
            ));
        }
        let k_oracle = oracle::topologically_connected(&img);
        if k_connected != k_oracle {
            return Case::fail(cex(
                inputs(),
                "Khalimsky connectivity disagrees with the topological oracle",
                format!("{k_oracle}"),
                format!("{k_connected}"),
            ));
        }
        if grid_connected != k_connected {
            return Case::fail(cex(
                inputs(),
                format!("{adj}-connectivity does not transfer across the bridge"),
                format!("both or neither (grid = {grid_connected})"),
                format!("image connected = {k_connected}"),
            ));
        }
        Case::pass()
    });
    let notes = vec![format!(
        "{} random sets per density {:?}",
        params.samples, params.densities
    )];
    clock.report(tally, notes)
}

/// 4-connectivity on the grid is equivalent to connectivity of the
/// slant image, over seeded random sets at each density.
pub fn connectivity_4(params: &SuiteParams) -> VerificationReport {
    connectivity_equivalence("connectivity-4", params, Adjacency::Four, slant_set)
}

/// 8-connectivity on the grid is equivalent to connectivity of the
/// expansion, over seeded random sets at each density.
pub fn connectivity_8(params: &SuiteParams) -> VerificationReport {
    connectivity_equivalence("connectivity-8", params, Adjacency::Eight, expand)
}

/// Connected Khalimsky sets pull back 8-connected, and grid sets with a
/// connected slant image have a connected expansion.
pub fn connectivity_pullback(params: &SuiteParams) -> VerificationReport {
    let clock = SuiteClock::start("connectivity-pullback");
    let window = params.window;
    let kwin = window.slant_image();
    let pullback = scan(seeded_cases(params), move |(seed, density)| {
        let c = random_k_set(&kwin, density, seed);
        if !c.is_connected() {
            return Case::skipped();
        }
        let back = unslant_set(&c);
        if !back.is_connected(Adjacency::Eight) {
            return Case::fail(cex(
                vec![k_input("connected set", &c), grid_input("pullback", &back)],
                "pullback of a connected set is not 8-connected",
                "8-connected",
                format!("{} components", back.components(Adjacency::Eight).len()),
            ));
        }
        Case::pass()
    });
    let forward = scan(seeded_cases(params), move |(seed, density)| {
        let a = random_grid_set(&window, density, seed.wrapping_add(0x5eed));
        if !slant_set(&a).is_connected() {
            return Case::skipped();
        }
        let star = expand(&a);
        if !star.is_connected() {
            return Case::fail(cex(
                vec![grid_input("set", &a), k_input("expansion", &star)],
                "connected image but disconnected expansion",
                "connected expansion",
                format!("{} components", star.components().len()),
            ));
        }
        Case::pass()
    });
    clock.report(pullback.merge(forward), Vec::new())
}

/// Pulls one component out of each of two independent random sets so
/// the pieces are disjoint; `buffer` additionally discards everything
/// 8-adjacent to the first piece.
fn disjoint_pair(
    window: &crate::harness::Window,
    density: f64,
    seed: u64,
    buffer: bool,
) -> Option<(GridSet, GridSet)> {
    let first = random_grid_set(window, density, seed);
    let a = first.components(Adjacency::Eight).into_components().into_iter().next()?;
    let second = random_grid_set(window, density, seed.wrapping_add(0xb0b));
    let mut blocked = a.clone();
    if buffer {
        for p in a.iter() {
            blocked = blocked.union(&crate::rosenfeld::neighbors(p, Adjacency::Eight));
        }
    }
    let rest = second.difference(&blocked);
    let b = rest
        .components(Adjacency::Eight)
        .into_components()
        .into_iter()
        .max_by_key(|c| c.len())?;
    if b.is_empty() {
        return None;
    }
    Some((a, b))
}

/// Disjoint 8-connected sets whose slant images touch a common mixed
/// point unite 8-connected.
pub fn union_8(params: &SuiteParams) -> VerificationReport {
    let clock = SuiteClock::start("union-8");
    let window = params.window;
    let tally = scan(seeded_cases(params), move |(seed, density)| {
        let Some((a, b)) = disjoint_pair(&window, density, seed, false) else {
            return Case::skipped();
        };
        let (ia, ib) = (slant_set(&a), slant_set(&b));
        let pool = ia.union(&ib);
        let Some((lo, hi)) = pool.bounding_box() else {
            return Case::skipped();
        };
        let mut witness = false;
        'search: for x in lo.x - 1..=hi.x + 1 {
            for y in lo.y - 1..=hi.y + 1 {
                let m = crate::khalimsky::KPoint::new(x, y);
                if m.is_mixed() {
                    let adj = m.adjacency();
                    if adj.iter().any(|q| ia.contains(q)) && adj.iter().any(|q| ib.contains(q)) {
                        witness = true;
                        break 'search;
                    }
                }
            }
        }
        if !witness {
            return Case::skipped();
        }
        if !a.union(&b).is_connected(Adjacency::Eight) {
            return Case::fail(cex(
                vec![grid_input("first", &a), grid_input("second", &b)],
                "images meet at a mixed point but the union is not 8-connected",
                "8-connected union",
                "disconnected",
            ));
        }
        Case::pass().with_extra(1)
    });
    let notes = vec![format!("{} pairs satisfied the mixed-witness hypothesis", tally.extra)];
    clock.report(tally, notes)
}

/// Non-8-adjacent pieces stay apart on the Khalimsky side: their slant
/// images are disconnected, their expanded-and-bracketed sides against
/// any 5+ point Jordan curve are disconnected, and the two expanded
/// sides of an expansion-fixed curve are disconnected.
pub fn disconnection(params: &SuiteParams) -> VerificationReport {
    let clock = SuiteClock::start("disconnection");
    let window = params.window;

    let image_tally = scan(seeded_cases(params), move |(seed, density)| {
        let Some((a, b)) = disjoint_pair(&window, density, seed, true) else {
            return Case::skipped();
        };
        debug_assert!(!sets_adjacent(&a, &b, Adjacency::Eight));
        if slant_set(&a).union(&slant_set(&b)).is_connected() {
            return Case::fail(cex(
                vec![grid_input("first", &a), grid_input("second", &b)],
                "non-8-adjacent sets with a connected joint image",
                "disconnected union of images",
                "connected",
            ));
        }
        Case::pass()
    });

    // expanded-side variant: pieces are drawn from the complement of a
    // Jordan curve's preimage
    let kwin = window.slant_image();
    let curves: Vec<KSet> = enumerate_jordan_curves(&kwin, params.max_size)
        .filter(|j| j.len() > 4)
        .take(12)
        .collect();
    let side_tally = scan(
        seeded_cases(params).take(params.samples as usize),
        move |(seed, density)| {
            let Some(j) = curves.get((seed % curves.len().max(1) as u64) as usize) else {
                return Case::skipped();
            };
            let preimage = unslant_set(j);
            let sample = random_grid_set(&window, density, seed).difference(&preimage);
            let comps = sample.components(Adjacency::Eight).into_components();
            let Some(a) = comps.first().cloned() else {
                return Case::skipped();
            };
            let b = comps
                .into_iter()
                .skip(1)
                .find(|c| !sets_adjacent(&a, c, Adjacency::Eight));
            let Some(b) = b else {
                return Case::skipped();
            };
            let side_a = expand(&a).union(&bracket(&a, j));
            let side_b = expand(&b).union(&bracket(&b, j));
            if side_a.union(&side_b).is_connected() {
                return Case::fail(cex(
                    vec![
                        k_input("Jordan curve", j),
                        grid_input("first", &a),
                        grid_input("second", &b),
                    ],
                    "non-8-adjacent pieces with connected joint expanded sides",
                    "disconnected union",
                    "connected",
                ));
            }
            Case::pass()
        },
    );

    // the two expanded sides of an expansion-fixed curve
    let fixed_curves = enumerate_closed_curves(
        &kwin.slant_preimage(),
        params.max_size,
        Adjacency::Eight,
    )
    .filter(|c| c.len() >= 4)
    .map(|c| expand(&c))
    .filter(|j| j.len() > 4 && j.iter().all(|p| kwin.contains((p.x, p.y))));
    let fixed_tally = scan(fixed_curves, |j| {
        let d = match decompose(&j) {
            Ok(d) => d,
            Err(e) => {
                return Case::fail(cex(
                    vec![k_input("curve", &j)],
                    "decomposition failed",
                    "two expanded sides",
                    e.to_string(),
                ))
            }
        };
        debug_assert_eq!(d.regime, Regime::ExpansionFixed);
        if d.component_a.union(&d.component_b).is_connected() {
            return Case::fail(cex(
                vec![k_input("curve", &j)],
                "the two expanded sides of an expansion-fixed curve are not disconnected",
                "disconnected union",
                "connected",
            ));
        }
        Case::pass()
    });

    let notes = vec![format!(
        "{} sampled image pairs, curve-relative pairs, and expansion-fixed sides",
        params.samples
    )];
    clock.report(
        image_tally.merge(side_tally).merge(fixed_tally),
        notes,
    )
}
