//! The verification-suite registry.
//!
//! Each suite turns one verified statement into an exhaustive or seeded
//! machine check and reports the canonically smallest counterexample if
//! any case fails. Case checks run in parallel; reports are aggregated
//! by count-sum, all-pass, and minimum-counterexample, so the outcome
//! is independent of scheduling.

mod basics;
mod bridge;
mod connectivity;
mod curve_decomposition;
mod grid_jordan;

use std::time::Instant;

use rayon::iter::{ParallelBridge, ParallelIterator};

use crate::error::{Error, Result};
use crate::harness::SuiteParams;
use crate::khalimsky::KSet;
use crate::report::{Counterexample, LabeledSet, Plane, VerificationReport};
use crate::rosenfeld::GridSet;

/// Registry entry: suite name, what it checks, and how it reads the
/// window parameter.
#[derive(Clone, Copy, Debug)]
pub struct SuiteInfo {
    pub name: &'static str,
    pub summary: &'static str,
    /// Which plane the `window` parameter is a box in.
    pub window_plane: Plane,
}

type Checker = fn(&SuiteParams) -> VerificationReport;

struct Entry {
    info: SuiteInfo,
    run: Checker,
}

macro_rules! entry {
    ($name:literal, $plane:ident, $run:path, $summary:literal) => {
        Entry {
            info: SuiteInfo {
                name: $name,
                summary: $summary,
                window_plane: Plane::$plane,
            },
            run: $run,
        }
    };
}

fn entries() -> &'static [Entry] {
    &[
        entry!(
            "adjacency-formula",
            K2,
            basics::adjacency_formula,
            "adjacency of each point equals (minimal neighborhood ∪ closure) minus the point; purity census; line duality"
        ),
        entry!(
            "mixed-pair",
            K2,
            basics::mixed_pair,
            "two pure points share exactly two adjacent mixed points iff they are adjacent"
        ),
        entry!(
            "slant-adjacency",
            Z2,
            basics::slant_adjacency,
            "4-adjacency maps to Khalimsky adjacency under the slant map; strict 8-adjacency to a unique shared mixed point"
        ),
        entry!(
            "jordan-rosenfeld",
            Z2,
            grid_jordan::jordan_rosenfeld,
            "closed k-curves with more than 4 points split the grid complement into exactly two k'-components, each touching every curve point"
        ),
        entry!(
            "different-components",
            Z2,
            grid_jordan::different_components,
            "the two axis neighbors flanking a diagonal step of a closed 8-curve land in different 4-components of the complement"
        ),
        entry!(
            "arc-gamma-star",
            Z2,
            bridge::arc_gamma_star,
            "expansion turns 8-paths into arcs with pure endpoints and closed 8-curves (4+ points) into Jordan curves, and nothing else"
        ),
        entry!(
            "path-pullback",
            Z2,
            bridge::path_pullback,
            "an arc with pure endpoints pulls back to an 8-path iff it is expansion-fixed; a Jordan curve pulls back to a closed 8-curve iff it is expansion-fixed"
        ),
        entry!(
            "arc-pure-pullback",
            Z2,
            bridge::arc_pure_pullback,
            "an all-pure arc pulls back to a 4-path with corresponding endpoints"
        ),
        entry!(
            "path-gamma",
            Z2,
            bridge::path_gamma,
            "the slant image of a 4-path is an arc with corresponding endpoints"
        ),
        entry!(
            "endpoint-degree",
            Z2,
            bridge::endpoint_degree,
            "inside the expansion of an 8-path, images of endpoints have degree one and every other point degree two"
        ),
        entry!(
            "gamma-star-containment",
            K2,
            bridge::gamma_star_containment,
            "expansion-after-preimage keeps exactly the pure points, contains every Jordan curve, and loses only mixed arc endpoints"
        ),
        entry!(
            "connectivity-4",
            Z2,
            connectivity::connectivity_4,
            "a grid set is 4-connected iff its slant image is connected (both sides cross-checked against oracles)"
        ),
        entry!(
            "connectivity-8",
            Z2,
            connectivity::connectivity_8,
            "a grid set is 8-connected iff its expansion is connected (both sides cross-checked against oracles)"
        ),
        entry!(
            "connectivity-pullback",
            Z2,
            connectivity::connectivity_pullback,
            "connected Khalimsky sets pull back 8-connected; a connected slant image forces a connected expansion"
        ),
        entry!(
            "union-8",
            Z2,
            connectivity::union_8,
            "two disjoint 8-connected sets whose images touch a common mixed point unite into an 8-connected set"
        ),
        entry!(
            "disconnection",
            Z2,
            connectivity::disconnection,
            "non-8-adjacent sets have disconnected images, expanded sides included; the two expanded sides of an expansion-fixed curve are disconnected"
        ),
        entry!(
            "jordan-pure",
            K2,
            curve_decomposition::jordan_pure,
            "all-pure Jordan curves (5+ points) decompose through grid 8-components into exactly the two complement components, each adjacent to every curve point"
        ),
        entry!(
            "jordan-gamma-fixed",
            K2,
            curve_decomposition::jordan_gamma_fixed,
            "expansion-fixed Jordan curves (5+ points) decompose through grid 4-components into exactly the two complement components, each adjacent to every curve point"
        ),
        entry!(
            "jordan-sj-singleton",
            K2,
            curve_decomposition::jordan_sj_singleton,
            "curves whose expansion surplus is a single surgery pivot decompose via surgery into exactly the two complement components"
        ),
        entry!(
            "jordan-surgery",
            K2,
            curve_decomposition::jordan_surgery,
            "surgery at any pivot yields a Jordan curve with strictly fewer pivots"
        ),
        entry!(
            "jordan-deletion",
            K2,
            curve_decomposition::jordan_deletion,
            "deleting any point of a Jordan curve leaves an arc with a disconnected neighborhood trace; the degree criterion matches the deletion definition"
        ),
        entry!(
            "bracket-adjacent",
            K2,
            curve_decomposition::bracket_adjacent,
            "every bracket point of a side against a 5+ point Jordan curve touches the side's slant image"
        ),
        entry!(
            "component-expansion",
            K2,
            curve_decomposition::component_expansion,
            "expanded sides of 8-connected (pure curve) or 4-connected sets are connected, and avoid all-pure curves"
        ),
        entry!(
            "sj-conjecture-explore",
            K2,
            curve_decomposition::sj_conjecture_explore,
            "exploratory only, never fails: tallies whether curves absorbing their whole expansion surplus still split the complement in two"
        ),
    ]
}

/// All registered suites.
pub fn registry() -> Vec<SuiteInfo> {
    entries().iter().map(|e| e.info).collect()
}

/// Runs a registered suite. Deterministic for fixed name and
/// parameters; unknown names list the registry in the error.
pub fn run_suite(name: &str, params: &SuiteParams) -> Result<VerificationReport> {
    let entry = entries()
        .iter()
        .find(|e| e.info.name == name)
        .ok_or_else(|| Error::UnknownSuite(name.to_string()))?;
    Ok((entry.run)(params))
}

/// Per-case verdict inside a suite run.
pub(crate) struct Case {
    /// The case met the statement's hypothesis and was fully checked.
    pub checked: bool,
    /// Suite-specific tally (witness counts and the like).
    pub extra: u64,
    pub counterexample: Option<Counterexample>,
}

impl Case {
    pub fn skipped() -> Self {
        Case {
            checked: false,
            extra: 0,
            counterexample: None,
        }
    }

    pub fn pass() -> Self {
        Case {
            checked: true,
            extra: 0,
            counterexample: None,
        }
    }

    pub fn fail(cex: Counterexample) -> Self {
        Case {
            checked: true,
            extra: 0,
            counterexample: Some(cex),
        }
    }

    pub fn with_extra(mut self, extra: u64) -> Self {
        self.extra = extra;
        self
    }
}

#[derive(Default)]
pub(crate) struct Tally {
    pub examined: u64,
    pub checked: u64,
    pub extra: u64,
    pub worst: Option<Counterexample>,
}

impl Tally {
    fn absorb(mut self, case: Case) -> Self {
        self.examined += 1;
        self.checked += case.checked as u64;
        self.extra += case.extra;
        self.worst = min_cex(self.worst, case.counterexample);
        self
    }

    fn merge(self, other: Self) -> Self {
        Tally {
            examined: self.examined + other.examined,
            checked: self.checked + other.checked,
            extra: self.extra + other.extra,
            worst: min_cex(self.worst, other.worst),
        }
    }
}

fn min_cex(a: Option<Counterexample>, b: Option<Counterexample>) -> Option<Counterexample> {
    match (a, b) {
        (Some(x), Some(y)) => Some(if x <= y { x } else { y }),
        (x, None) => x,
        (None, y) => y,
    }
}

/// Runs `check` over every item in parallel and aggregates order-free.
pub(crate) fn scan<T, I, F>(items: I, check: F) -> Tally
where
    T: Send,
    I: Iterator<Item = T> + Send,
    F: Fn(T) -> Case + Sync + Send,
{
    items
        .par_bridge()
        .fold(Tally::default, |tally, item| tally.absorb(check(item)))
        .reduce(Tally::default, Tally::merge)
}

pub(crate) struct SuiteClock {
    name: &'static str,
    started: Instant,
}

impl SuiteClock {
    pub fn start(name: &'static str) -> Self {
        SuiteClock {
            name,
            started: Instant::now(),
        }
    }

    pub fn report(self, tally: Tally, notes: Vec<String>) -> VerificationReport {
        VerificationReport {
            suite: self.name.to_string(),
            cases_examined: tally.examined,
            cases_checked: tally.checked,
            passed: tally.worst.is_none(),
            first_counterexample: tally.worst,
            notes,
            elapsed_ms: self.started.elapsed().as_millis() as u64,
        }
    }
}

pub(crate) fn grid_input(label: &str, s: &GridSet) -> LabeledSet {
    LabeledSet {
        label: label.to_string(),
        plane: Plane::Z2,
        points: s.iter().map(|p| (p.x, p.y)).collect(),
    }
}

pub(crate) fn k_input(label: &str, s: &KSet) -> LabeledSet {
    LabeledSet {
        label: label.to_string(),
        plane: Plane::K2,
        points: s.iter().map(|p| (p.x, p.y)).collect(),
    }
}

pub(crate) fn cex(
    inputs: Vec<LabeledSet>,
    description: impl Into<String>,
    expected: impl Into<String>,
    actual: impl Into<String>,
) -> Counterexample {
    Counterexample {
        inputs,
        description: description.into(),
        expected: expected.into(),
        actual: actual.into(),
    }
}
