//! Jordan-curve complements on the Khalimsky plane, computed through
//! the grid bridge.
//!
//! Given a Jordan curve `J`, the grid preimage of `J` is a closed curve
//! in `Z^2` whenever `J` is all-pure (a 4-curve) or expansion-fixed (an
//! 8-curve). The grid-side Jordan curve theorem then splits the grid
//! complement into two pieces, and each piece is carried back as
//! `expand(side) ∪ bracket(side, J)`: the expansion of the grid side
//! plus the mixed points whose whole adjacency is swallowed by the side
//! and the curve. Those two sets turn out to be exactly the components
//! of the Khalimsky complement. A third regime handles curves that miss
//! being expansion-fixed by a single mixed point, by surgering that
//! point in, decomposing, and transferring the result back.

use std::time::Instant;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::harness::Window;
use crate::khalimsky::{KPoint, KSet};
use crate::report::{Counterexample, LabeledSet, Plane, VerificationReport};
use crate::rosenfeld::{Adjacency, GridSet, PathClass};
use crate::slant::{expand, is_expansion_fixed, slant_set, unslant_set};

/// The mixed points whose full adjacency lies inside `slant(a) ∪ j`:
/// the mixed padding that glues a grid-side region to the curve.
pub fn bracket(a: &GridSet, j: &KSet) -> KSet {
    let image = slant_set(a);
    let pool = image.union(j);
    let Some((lo, hi)) = pool.bounding_box() else {
        return KSet::new();
    };
    let mut out = Vec::new();
    for x in lo.x - 1..=hi.x + 1 {
        for y in lo.y - 1..=hi.y + 1 {
            let m = KPoint::new(x, y);
            if m.is_mixed() && m.adjacency().is_subset_of(&pool) {
                out.push(m);
            }
        }
    }
    KSet::from_points(out)
}

/// The mixed points of `expand(unslant_set(j))` that meet `j` in
/// exactly three adjacent points. These are the pivots at which
/// [`surgery`] applies; a curve is decomposable in the single-pivot
/// regime when this set is a singleton absorbing the whole expansion
/// surplus.
pub fn surgery_points(j: &KSet) -> KSet {
    expand(&unslant_set(j))
        .iter()
        .filter(|m| m.is_mixed() && m.adjacency().intersection(j).len() == 3)
        .collect()
}

/// Splits the three curve points adjacent to a surgery pivot into the
/// same-parity pair and the lone opposite-parity point.
fn split_contacts(m: KPoint, j: &KSet) -> Result<([KPoint; 2], KPoint)> {
    let contacts = m.adjacency().intersection(j);
    if contacts.len() != 3 {
        return Err(Error::SurgeryHypothesis(format!(
            "{m} meets the curve in {} points, need 3",
            contacts.len()
        )));
    }
    let open: Vec<KPoint> = contacts.iter().filter(|p| p.is_open()).collect();
    let closed: Vec<KPoint> = contacts.iter().filter(|p| p.is_closed()).collect();
    match (open.as_slice(), closed.as_slice()) {
        ([a, b], [c]) => Ok(([*a, *b], *c)),
        ([c], [a, b]) => Ok(([*a, *b], *c)),
        _ => Err(Error::SurgeryHypothesis(
            "contact points do not split into a same-parity pair and a lone point".into(),
        )),
    }
}

/// Curve surgery: swaps the pivot `m` in for the lone opposite-parity
/// contact point `c`, yielding `j \ {c} ∪ {m}`.
///
/// The result is again a Jordan curve whose surgery points are a subset
/// of `j`'s with `m` removed; both facts are checked before returning.
pub fn surgery(j: &KSet, m: KPoint) -> Result<KSet> {
    if !j.classify().is_jordan_curve() {
        return Err(Error::NotJordanCurve);
    }
    if j.len() <= 4 {
        return Err(Error::CurveTooSmall(j.len()));
    }
    if !surgery_points(j).contains(m) {
        return Err(Error::SurgeryHypothesis(format!(
            "{m} is not a surgery point of the curve"
        )));
    }
    let (_, lone) = split_contacts(m, j)?;
    let result = j.without(lone).with(m);
    if !result.classify().is_jordan_curve() {
        return Err(Error::Invariant(format!(
            "surgery at {m} did not produce a Jordan curve"
        )));
    }
    let after = surgery_points(&result);
    if after.contains(m) || !after.is_subset_of(&surgery_points(j)) {
        return Err(Error::Invariant(format!(
            "surgery points did not shrink at {m}"
        )));
    }
    Ok(result)
}

/// Which decomposition route applied to a curve.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum Regime {
    /// All points pure; the grid preimage is a closed 4-curve and the
    /// grid complement splits into 8-components.
    PurePoints,
    /// Expansion-fixed; the grid preimage is a closed 8-curve and the
    /// grid complement splits into 4-components.
    ExpansionFixed,
    /// The expansion surplus is one surgery pivot; decomposed through
    /// the surgered curve, then one side gains the pivot and the other
    /// loses the swapped-out point.
    SingleSurgeryPoint,
    /// None of the supported shapes; no decomposition is attempted.
    Unsupported,
}

impl std::fmt::Display for Regime {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Regime::PurePoints => write!(f, "pure-points"),
            Regime::ExpansionFixed => write!(f, "expansion-fixed"),
            Regime::SingleSurgeryPoint => write!(f, "single-surgery-point"),
            Regime::Unsupported => write!(f, "unsupported"),
        }
    }
}

/// The two sides of a Jordan-curve complement, with the grid-side
/// components that generated them.
///
/// `component_a` always descends from the grid side touching the window
/// border, so it is the window-relative unbounded component;
/// `component_b` is the bounded one and is exact. For the
/// single-surgery-point regime the grid sides are the 4-components of
/// the surgered curve's complement, since those are what generated the
/// decomposition.
#[derive(Clone, Debug, Serialize)]
pub struct JordanDecomposition {
    pub curve: KSet,
    pub regime: Regime,
    /// Window the components are reported relative to: the curve's
    /// bounding box inflated by 2.
    pub window: Window,
    pub component_a: KSet,
    pub component_b: KSet,
    pub a_side_grid: GridSet,
    pub b_side_grid: GridSet,
}

fn clip(s: &KSet, w: &Window) -> KSet {
    s.iter().filter(|p| w.contains((p.x, p.y))).collect()
}

/// One expanded side of the decomposition, clipped to the window.
fn expanded_side(grid_side: &GridSet, curve: &KSet, w: &Window) -> KSet {
    clip(&expand(grid_side).union(&bracket(grid_side, curve)), w)
}

/// Splits the window complement of `curve` through the grid: takes the
/// components of the grid complement of the curve's preimage under
/// `grid_adj`, requires exactly two after border merging, and expands
/// each back into the Khalimsky window.
fn grid_sides(
    curve: &KSet,
    window: &Window,
    grid_adj: Adjacency,
) -> Result<((KSet, GridSet), (KSet, GridSet))> {
    let preimage = unslant_set(curve);
    let grid_window = window.inflate(1).slant_preimage();
    let complement: GridSet = grid_window
        .points()
        .map(crate::rosenfeld::GridPoint::from)
        .filter(|&p| !preimage.contains(p))
        .collect();
    let parts = complement.components(grid_adj);
    let corner = crate::rosenfeld::GridPoint::new(grid_window.x_min(), grid_window.y_min());
    let outer_idx = parts
        .components()
        .iter()
        .position(|c| c.contains(corner))
        .ok_or_else(|| Error::Invariant("grid window corner not in complement".into()))?;
    if parts.len() != 2 {
        return Err(Error::Invariant(format!(
            "grid complement has {} {grid_adj}-components, expected 2",
            parts.len()
        )));
    }
    let inner_idx = 1 - outer_idx;
    let outer = parts.components()[outer_idx].clone();
    let inner = parts.components()[inner_idx].clone();
    let outer_side = expanded_side(&outer, curve, window);
    let inner_side = expanded_side(&inner, curve, window);
    Ok(((outer_side, outer), (inner_side, inner)))
}

/// Decomposes the complement of a Jordan curve with more than four
/// points into its two connected components, computed through the grid
/// bridge rather than by flood fill.
///
/// The regimes are tried in a fixed order: all-pure first, then
/// expansion-fixed, then the single-surgery-point transfer (an all-pure
/// curve is typically not expansion-fixed, so the order matters).
/// Curves outside the three supported shapes come back as
/// [`Regime::Unsupported`] with empty components; callers fall back to
/// [`KSet::complement_components`] for those.
///
/// For supported regimes the result is checked before returning: the
/// two sides are disjoint, connected, miss the curve, and cover the
/// window complement exactly.
pub fn decompose(j: &KSet) -> Result<JordanDecomposition> {
    if !j.classify().is_jordan_curve() {
        return Err(Error::NotJordanCurve);
    }
    if j.len() <= 4 {
        return Err(Error::CurveTooSmall(j.len()));
    }
    let (lo, hi) = j.bounding_box().expect("nonempty curve");
    let window = Window::unchecked(lo.x - 2, hi.x + 2, lo.y - 2, hi.y + 2);

    let decomposition = if j.is_all_pure() {
        let ((side_a, grid_a), (side_b, grid_b)) = grid_sides(j, &window, Adjacency::Eight)?;
        JordanDecomposition {
            curve: j.clone(),
            regime: Regime::PurePoints,
            window,
            component_a: side_a,
            component_b: side_b,
            a_side_grid: grid_a,
            b_side_grid: grid_b,
        }
    } else if is_expansion_fixed(j) {
        let ((side_a, grid_a), (side_b, grid_b)) = grid_sides(j, &window, Adjacency::Four)?;
        JordanDecomposition {
            curve: j.clone(),
            regime: Regime::ExpansionFixed,
            window,
            component_a: side_a,
            component_b: side_b,
            a_side_grid: grid_a,
            b_side_grid: grid_b,
        }
    } else {
        let pivots = surgery_points(j);
        let surplus = expand(&unslant_set(j)).difference(j);
        let single_pivot = pivots.len() == 1 && surplus == pivots;
        if !single_pivot {
            return Ok(JordanDecomposition {
                curve: j.clone(),
                regime: Regime::Unsupported,
                window,
                component_a: KSet::new(),
                component_b: KSet::new(),
                a_side_grid: GridSet::new(),
                b_side_grid: GridSet::new(),
            });
        }
        let pivot = pivots.min_point().expect("single pivot");
        let (_, swapped_out) = split_contacts(pivot, j)?;
        let spare = pivot
            .adjacency()
            .difference(j)
            .min_point()
            .ok_or_else(|| Error::Invariant("pivot has no free adjacent point".into()))?;
        let surgered = surgery(j, pivot)?;
        if !is_expansion_fixed(&surgered) {
            return Err(Error::Invariant(
                "surgered curve is not expansion-fixed".into(),
            ));
        }
        let ((side_a, grid_a), (side_b, grid_b)) = grid_sides(&surgered, &window, Adjacency::Four)?;
        // the pivot joins the side holding its fourth neighbor; the
        // swapped-out point sits on the other side and leaves it
        let (side_a, side_b) = if side_a.contains(spare) {
            if !side_b.contains(swapped_out) {
                return Err(Error::Invariant(
                    "swapped-out point not on the opposite side".into(),
                ));
            }
            (side_a.with(pivot), side_b.without(swapped_out))
        } else if side_b.contains(spare) {
            if !side_a.contains(swapped_out) {
                return Err(Error::Invariant(
                    "swapped-out point not on the opposite side".into(),
                ));
            }
            (side_a.without(swapped_out), side_b.with(pivot))
        } else {
            return Err(Error::Invariant(
                "pivot's fourth neighbor is on neither side".into(),
            ));
        };
        JordanDecomposition {
            curve: j.clone(),
            regime: Regime::SingleSurgeryPoint,
            window,
            component_a: side_a,
            component_b: side_b,
            a_side_grid: grid_a,
            b_side_grid: grid_b,
        }
    };
    check_decomposition(&decomposition)?;
    Ok(decomposition)
}

/// The structural facts every supported decomposition must satisfy.
fn check_decomposition(d: &JordanDecomposition) -> Result<()> {
    let (a, b, j) = (&d.component_a, &d.component_b, &d.curve);
    if !a.is_disjoint_from(b) {
        return Err(Error::Invariant("sides overlap".into()));
    }
    if a.adjacent_to(b) {
        return Err(Error::Invariant("sides touch each other".into()));
    }
    for (name, side) in [("a", a), ("b", b)] {
        if !side.is_disjoint_from(j) {
            return Err(Error::Invariant(format!("side {name} meets the curve")));
        }
        if !side.is_connected() {
            return Err(Error::Invariant(format!("side {name} is disconnected")));
        }
        if side.is_empty() {
            return Err(Error::Invariant(format!("side {name} is empty")));
        }
    }
    let union = a.union(b);
    let window_complement: KSet = d
        .window
        .points()
        .map(KPoint::from)
        .filter(|&p| !j.contains(p))
        .collect();
    if union != window_complement {
        return Err(Error::Invariant(
            "sides do not cover the window complement".into(),
        ));
    }
    Ok(())
}

/// Checks both conclusions of the grid-plane Jordan curve theorem on a
/// single closed curve: the complement of a closed `adj`-curve with
/// more than four points has exactly two components under the paired
/// adjacency, and every curve point has a neighbor in each.
///
/// Curves that miss the hypotheses produce a passing report marked
/// "hypothesis not met" rather than a failure.
pub fn verify_rosenfeld_jordan(j: &GridSet, adj: Adjacency) -> VerificationReport {
    let start = Instant::now();
    let mut report = VerificationReport {
        suite: format!("rosenfeld-jordan({adj}-curve)"),
        cases_examined: 1,
        cases_checked: 0,
        passed: true,
        first_counterexample: None,
        notes: Vec::new(),
        elapsed_ms: 0,
    };
    let hypothesis_failure = if j.classify(adj) != PathClass::ClosedCurve {
        Some(format!("hypothesis not met: not a closed {adj}-curve"))
    } else if j.len() <= 4 {
        Some(format!(
            "hypothesis not met: {} points, more than 4 required",
            j.len()
        ))
    } else {
        None
    };
    let other = adj.complement();
    if let Ok(parts) = j.complement_components(other) {
        let sizes: Vec<String> = parts
            .components()
            .iter()
            .enumerate()
            .map(|(i, c)| {
                if Some(i) == parts.outer_index() {
                    format!("{} (outer, window-relative)", c.len())
                } else {
                    format!("{}", c.len())
                }
            })
            .collect();
        report.notes.push(format!(
            "complement has {} {other}-component(s) of sizes [{}]",
            parts.len(),
            sizes.join(", ")
        ));
        if let Some(note) = hypothesis_failure {
            report.notes.push(note);
        } else {
            report.cases_checked = 1;
            let mut failure = None;
            if parts.len() != 2 {
                failure = Some((
                    "two complement components".to_string(),
                    format!("{} components", parts.len()),
                ));
            } else {
                'outer: for p in j.iter() {
                    for c in parts.components() {
                        let touches = crate::rosenfeld::neighbors(p, other)
                            .iter()
                            .any(|q| c.contains(q));
                        if !touches {
                            failure = Some((
                                format!("every curve point has a {other}-neighbor in each component"),
                                format!("{p} has none in one component"),
                            ));
                            break 'outer;
                        }
                    }
                }
            }
            if let Some((expected, actual)) = failure {
                report.passed = false;
                report.first_counterexample = Some(Counterexample {
                    inputs: vec![LabeledSet {
                        label: "curve".into(),
                        plane: Plane::Z2,
                        points: j.iter().map(|p| (p.x, p.y)).collect(),
                    }],
                    description: format!("closed {adj}-curve fails the Jordan conclusions"),
                    expected,
                    actual,
                });
            }
        }
    } else {
        report.notes.push("hypothesis not met: empty set".into());
    }
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::khalimsky::KClass;

    fn ks(pts: &[(i32, i32)]) -> KSet {
        pts.iter().copied().collect()
    }

    fn gs(pts: &[(i32, i32)]) -> GridSet {
        pts.iter().copied().collect()
    }

    fn diamond_ring() -> KSet {
        ks(&[
            (0, 0),
            (1, -1),
            (2, -2),
            (3, -1),
            (4, 0),
            (3, 1),
            (2, 2),
            (1, 1),
        ])
    }

    /// Jordan curve whose expansion surplus is the single pivot (1, 0):
    /// the 8-point ring around the origin with (1, 0) swapped for (2, 0).
    fn single_pivot_witness() -> KSet {
        ks(&[
            (2, 0),
            (1, 1),
            (0, 1),
            (-1, 1),
            (-1, 0),
            (-1, -1),
            (0, -1),
            (1, -1),
        ])
    }

    #[test]
    fn bracket_of_inner_point_pads_the_ring() {
        let inner = gs(&[(1, 1)]);
        assert_eq!(
            bracket(&inner, &diamond_ring()),
            ks(&[(1, 0), (3, 0), (2, 1), (2, -1)])
        );
    }

    #[test]
    fn bracket_of_empty_side_is_empty() {
        assert!(bracket(&GridSet::new(), &diamond_ring()).is_empty());
        assert!(bracket(&GridSet::new(), &KSet::new()).is_empty());
    }

    #[test]
    fn bracket_points_touch_the_side() {
        let inner = gs(&[(1, 1)]);
        let image = slant_set(&inner);
        for m in bracket(&inner, &diamond_ring()).iter() {
            assert!(m.adjacency().iter().any(|q| image.contains(q)));
        }
    }

    #[test]
    fn surgery_points_of_diamond_ring() {
        // all four padding points meet the ring in three points each
        assert_eq!(
            surgery_points(&diamond_ring()),
            ks(&[(1, 0), (3, 0), (2, 1), (2, -1)])
        );
    }

    #[test]
    fn expansion_fixed_curves_have_no_surgery_points() {
        let ring = expand(&gs(&[(1, 0), (0, 1), (-1, 0), (0, -1)]));
        assert!(is_expansion_fixed(&ring));
        assert!(surgery_points(&ring).is_empty());
    }

    #[test]
    fn witness_has_single_surgery_point() {
        let j = single_pivot_witness();
        assert_eq!(j.classify(), KClass::JordanCurve);
        let pivots = surgery_points(&j);
        assert_eq!(pivots, ks(&[(1, 0)]));
        let star = expand(&unslant_set(&j));
        assert_eq!(star, j.union(&pivots));
    }

    #[test]
    fn surgery_on_witness() {
        let j = single_pivot_witness();
        let m = KPoint::new(1, 0);
        let jm = surgery(&j, m).unwrap();
        assert_eq!(jm.len(), j.len());
        assert!(is_expansion_fixed(&jm));
        assert!(surgery_points(&jm).is_empty());
        // swapped out the lone closed contact (2, 0)
        assert!(!jm.contains(KPoint::new(2, 0)));
        assert!(jm.contains(m));
    }

    #[test]
    fn surgery_rejects_bad_pivots() {
        let j = single_pivot_witness();
        assert!(matches!(
            surgery(&j, KPoint::new(0, 1)),
            Err(Error::SurgeryHypothesis(_))
        ));
        assert!(matches!(
            surgery(&ks(&[(0, 0), (1, 1)]), KPoint::new(1, 0)),
            Err(Error::NotJordanCurve)
        ));
    }

    #[test]
    fn decompose_pure_ring() {
        let d = decompose(&diamond_ring()).unwrap();
        assert_eq!(d.regime, Regime::PurePoints);
        assert_eq!(
            d.component_b,
            ks(&[(1, 0), (2, 0), (3, 0), (2, 1), (2, -1)])
        );
        assert_eq!(d.b_side_grid, gs(&[(1, 1)]));
        // oracle agreement
        let (outer, inners) = crate::oracle::flood_k_complement(&diamond_ring()).unwrap();
        assert_eq!(inners, vec![d.component_b.clone()]);
        assert_eq!(outer, d.component_a);
    }

    #[test]
    fn decompose_expansion_fixed_ring() {
        let ring = expand(&gs(&[(1, 0), (0, 1), (-1, 0), (0, -1)]));
        let d = decompose(&ring).unwrap();
        assert_eq!(d.regime, Regime::ExpansionFixed);
        assert_eq!(d.component_b, ks(&[(0, 0)]));
    }

    #[test]
    fn decompose_single_pivot_witness() {
        let j = single_pivot_witness();
        let d = decompose(&j).unwrap();
        assert_eq!(d.regime, Regime::SingleSurgeryPoint);
        let (outer, inners) = crate::oracle::flood_k_complement(&j).unwrap();
        assert_eq!(inners.len(), 1);
        assert_eq!(d.component_b, inners[0]);
        assert_eq!(d.component_a, outer);
        // the bounded side is the origin plus the absorbed pivot
        assert_eq!(d.component_b, ks(&[(0, 0), (1, 0)]));
    }

    #[test]
    fn decompose_rejects_small_or_non_curves() {
        let four_point = KPoint::new(1, 0).adjacency();
        assert!(matches!(
            decompose(&four_point),
            Err(Error::CurveTooSmall(4))
        ));
        assert!(matches!(
            decompose(&ks(&[(0, 0), (1, 1)])),
            Err(Error::NotJordanCurve)
        ));
    }

    #[test]
    fn rosenfeld_report_on_ring() {
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
        let rep = verify_rosenfeld_jordan(&ring, Adjacency::Four);
        assert!(rep.passed);
        assert_eq!(rep.cases_checked, 1);
    }

    #[test]
    fn rosenfeld_report_hypothesis_excluded() {
        let diamond = gs(&[(1, 0), (0, 1), (-1, 0), (0, -1)]);
        let rep = verify_rosenfeld_jordan(&diamond, Adjacency::Eight);
        assert!(rep.passed);
        assert_eq!(rep.cases_checked, 0);
        assert!(rep.notes.iter().any(|n| n.contains("hypothesis not met")));

        let square = gs(&[(0, 0), (1, 0), (0, 1), (1, 1)]);
        let rep = verify_rosenfeld_jordan(&square, Adjacency::Four);
        assert!(rep.passed);
        assert_eq!(rep.cases_checked, 0);
        // the square's 8-complement is a single component, shown in the notes
        assert!(rep.notes.iter().any(|n| n.contains("1 8-component")));
    }
}
