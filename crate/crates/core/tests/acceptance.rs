//! Runs the full acceptance suite once and prints one PASS/FAIL line per
//! criterion (visible with `cargo test --test acceptance -- --nocapture`).

use rainbow_core::acceptance::run_all;

#[test]
fn acceptance_suite() {
    let reports = run_all();
    assert_eq!(reports.len(), 10);
    let mut failures = Vec::new();
    for report in &reports {
        let status = if report.pass { "PASS" } else { "FAIL" };
        println!(
            "criterion {:>2}  {status}  {:<32} {}",
            report.id, report.name, report.detail
        );
        if !report.pass {
            failures.push(format!("{} ({}): {}", report.id, report.name, report.detail));
        }
    }
    assert!(
        failures.is_empty(),
        "failing criteria:\n{}",
        failures.join("\n")
    );
}
