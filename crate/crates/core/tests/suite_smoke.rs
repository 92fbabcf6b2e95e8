//! Every registered suite runs green on small windows.

use digitop::harness::{registry, run_suite, SuiteParams, Window};
use digitop::Plane;

fn small_params(plane: Plane) -> SuiteParams {
    SuiteParams {
        // keep Khalimsky windows anchored at an even corner so both
        // parities of pure points are present
        window: match plane {
            Plane::Z2 => Window::of_size(5, 5).unwrap(),
            Plane::K2 => Window::of_size(6, 6).unwrap(),
        },
        max_size: 8,
        seed: 41,
        samples: 60,
        densities: vec![0.25, 0.45],
        include_small: false,
    }
}

#[test]
fn all_suites_pass_on_small_windows() {
    for info in registry() {
        let params = small_params(info.window_plane);
        let report = run_suite(info.name, &params).expect("registered suite");
        assert!(
            report.passed,
            "suite {} failed:\n{report}",
            info.name
        );
        assert!(report.cases_examined > 0, "suite {} ran no cases", info.name);
        println!(
            "{}: {} examined, {} checked, {} ms",
            info.name, report.cases_examined, report.cases_checked, report.elapsed_ms
        );
    }
}

#[test]
fn unknown_suite_lists_nothing_but_errors() {
    let err = run_suite("nosuch", &SuiteParams::default()).unwrap_err();
    assert!(err.to_string().contains("nosuch"));
}

#[test]
fn suite_reports_are_deterministic() {
    let params = small_params(Plane::Z2);
    let a = run_suite("jordan-rosenfeld", &params).unwrap();
    let b = run_suite("jordan-rosenfeld", &params).unwrap();
    assert_eq!(a.cases_examined, b.cases_examined);
    assert_eq!(a.cases_checked, b.cases_checked);
    assert_eq!(a.passed, b.passed);

    // failing runs also report the same (canonically smallest)
    // counterexample regardless of parallel scheduling
    let failing = SuiteParams {
        window: Window::of_size(5, 5).unwrap(),
        max_size: 8,
        include_small: true,
        ..small_params(Plane::Z2)
    };
    let a = run_suite("jordan-rosenfeld", &failing).unwrap();
    let b = run_suite("jordan-rosenfeld", &failing).unwrap();
    assert!(!a.passed);
    assert_eq!(a.first_counterexample, b.first_counterexample);
}

#[test]
fn sharpness_counterexample_is_the_unit_square() {
    let params = SuiteParams {
        window: Window::of_size(4, 4).unwrap(),
        max_size: 6,
        include_small: true,
        ..small_params(Plane::Z2)
    };
    let report = run_suite("jordan-rosenfeld", &params).unwrap();
    assert!(!report.passed);
    let cex = report.first_counterexample.expect("counterexample");
    assert_eq!(cex.inputs[0].points, vec![(0, 0), (0, 1), (1, 0), (1, 1)]);
}
