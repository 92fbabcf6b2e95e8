//! Grid-plane Jordan-curve suites.

use super::{cex, grid_input, scan, Case, SuiteClock};
use crate::harness::{enumerate_closed_curves, SuiteParams};
use crate::oracle;
use crate::report::VerificationReport;
use crate::rosenfeld::{neighbors, Adjacency, GridPoint, GridSet, NEIGHBOR_RING};

/// Both conclusions of the grid Jordan curve theorem over every closed
/// curve in the window, for both adjacency pairings, cross-checked
/// against the flood-fill oracle. With `include_small` the size-4
/// curves enter as well, exposing the counterexample that makes the
/// "more than 4 points" hypothesis sharp.
pub fn jordan_rosenfeld(params: &SuiteParams) -> VerificationReport {
    let clock = SuiteClock::start("jordan-rosenfeld");
    let min_size = if params.include_small { 4 } else { 5 };
    let mut tally = super::Tally::default();
    for adj in [Adjacency::Four, Adjacency::Eight] {
        let other = adj.complement();
        let curves = enumerate_closed_curves(&params.window, params.max_size, adj);
        let part = scan(curves, |j| {
            if j.len() < min_size {
                return Case::skipped();
            }
            let inputs = || vec![grid_input(&format!("closed {adj}-curve"), &j)];
            let parts = j
                .complement_components(other)
                .expect("nonempty curve has a complement");
            let (oracle_outer, oracle_inners) =
                oracle::flood_grid_complement(&j, other).expect("nonempty curve");
            let oracle_all: Vec<&GridSet> = std::iter::once(&oracle_outer)
                .chain(oracle_inners.iter())
                .collect();
            if parts.len() != oracle_all.len()
                || !parts.components().iter().all(|c| oracle_all.contains(&c))
            {
                return Case::fail(cex(
                    inputs(),
                    "complement components disagree with the flood-fill oracle",
                    format!("{} oracle components", oracle_all.len()),
                    format!("{} components", parts.len()),
                ));
            }
            if parts.len() != 2 {
                return Case::fail(cex(
                    inputs(),
                    format!("complement does not split in two under {other}-adjacency"),
                    "2 components",
                    format!("{} components", parts.len()),
                ));
            }
            for p in j.iter() {
                for c in parts.components() {
                    if !neighbors(p, other).iter().any(|q| c.contains(q)) {
                        return Case::fail(cex(
                            inputs(),
                            format!("curve point {p} misses a {other}-neighbor in one component"),
                            format!("a {other}-neighbor in both components"),
                            "none in one of them",
                        ));
                    }
                }
            }
            Case::pass()
        });
        tally = tally.merge(part);
    }
    let notes = vec![format!(
        "curve sizes {min_size}..={} under both adjacencies",
        params.max_size
    )];
    clock.report(tally, notes)
}

/// For every closed 8-curve and every diagonal step on it, the two axis
/// neighbors flanking the diagonal land in different 4-components of
/// the complement.
pub fn different_components(params: &SuiteParams) -> VerificationReport {
    let clock = SuiteClock::start("different-components");
    let curves = enumerate_closed_curves(&params.window, params.max_size, Adjacency::Eight);
    let tally = scan(curves, |c| {
        if c.len() < 4 {
            // a 3-point curve puts the flanking neighbors on the curve itself
            return Case::skipped();
        }
        let parts = c
            .complement_components(Adjacency::Four)
            .expect("nonempty curve");
        let side_of = |p: GridPoint| parts.components().iter().position(|comp| comp.contains(p));
        let mut flank_pairs = 0;
        for p in c.iter() {
            for slot in [0usize, 2, 4, 6] {
                let (dx, dy) = NEIGHBOR_RING[slot];
                if !c.contains(GridPoint::new(p.x + dx, p.y + dy)) {
                    continue;
                }
                flank_pairs += 1;
                let before = NEIGHBOR_RING[(slot + 7) % 8];
                let after = NEIGHBOR_RING[(slot + 1) % 8];
                let a = GridPoint::new(p.x + before.0, p.y + before.1);
                let b = GridPoint::new(p.x + after.0, p.y + after.1);
                let (sa, sb) = (side_of(a), side_of(b));
                if sa.is_none() || sb.is_none() || sa == sb {
                    return Case::fail(cex(
                        vec![grid_input("closed 8-curve", &c)],
                        format!("flanking neighbors {a} and {b} of the diagonal at {p}"),
                        "different 4-components of the complement",
                        format!("components {sa:?} and {sb:?}"),
                    ));
                }
            }
        }
        Case::pass().with_extra(flank_pairs)
    });
    let notes = vec![format!("{} diagonal incidences checked", tally.extra)];
    clock.report(tally, notes)
}
