mod common;

use intertwine::verify::{self, Standard};
use intertwine::Execution;

#[test]
fn library_model_passes_small_grid() {
    for report in verify::run_all(&common::small_grid(), Execution::default()) {
        assert!(report.all_pass(), "{}: {:?}", report.suite, report.failures().next());
        assert!(report.summary().pass > 0, "{}", report.suite);
    }
}

#[test]
fn every_suite_flags_its_control() {
    for report in common::control_reports(&common::small_grid(), Execution::default()) {
        assert!(report.summary().fail > 0, "{} missed its perturbation", report.suite);
    }
}

#[test]
fn sequential_and_parallel_reports_agree() {
    let g = common::small_grid();
    let seq = verify::run_interface_checks_with(&Standard, &g, Execution::Sequential);
    let par = verify::run_interface_checks_with(&Standard, &g, Execution::Parallel);
    assert_eq!(seq, par);
}

#[test]
fn failing_records_carry_a_witness() {
    let g = common::small_grid();
    let report = verify::run_det_checks_with(&common::StrayDetFactor, &g, Execution::default());
    let f = report.failures().next().unwrap();
    assert!(f.identity.is_some() && f.lhs.is_some() && f.rhs.is_some());
    assert_ne!(f.lhs, f.rhs);
}
