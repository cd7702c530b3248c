//! End-to-end tests of the `rainbow` binary: contract exit codes, document
//! shapes, and byte-level determinism of repeated invocations.

use std::path::Path;
use std::process::{Command, Output};

fn rainbow(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rainbow"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary launches")
}

fn stdout_str(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout is UTF-8")
}

fn stderr_str(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("stderr is UTF-8")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("process exits normally")
}

#[test]
fn construct_then_certify_reports_no_rainbow() {
    let dir = tempfile::tempdir().unwrap();
    let built = rainbow(
        dir.path(),
        &["construct", "ab", "--r", "2", "--t", "2", "-o", "g.rch"],
    );
    assert_eq!(code(&built), 0, "{}", stderr_str(&built));
    assert!(stdout_str(&built).contains("\"f\":2"));

    let certified = rainbow(dir.path(), &["certify", "-i", "g.rch", "--t", "2"]);
    assert_eq!(code(&certified), 0);
    let doc = stdout_str(&certified);
    assert!(doc.contains("\"result\":\"none\""), "doc: {doc}");
    assert!(doc.contains("\"nodes_explored\""), "doc: {doc}");

    // One class fewer than the construction's count leaves room for a rainbow.
    let single = rainbow(dir.path(), &["certify", "-i", "g.rch", "--t", "1"]);
    assert_eq!(code(&single), 0);
    assert!(stdout_str(&single).contains("\"result\":\"rainbow\""));
}

#[test]
fn identical_invocations_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let args = [
        "construct", "random", "--r", "2", "--t", "2", "--f", "10", "--s", "5", "--seed", "42",
        "-o", "r.rch",
    ];
    let first = rainbow(dir.path(), &args);
    assert_eq!(code(&first), 0);
    let bytes_one = std::fs::read(dir.path().join("r.rch")).unwrap();

    let again = rainbow(dir.path(), &args);
    assert_eq!(first.stdout, again.stdout);
    let bytes_two = std::fs::read(dir.path().join("r.rch")).unwrap();
    assert_eq!(bytes_one, bytes_two, "instance files must be byte-stable");

    for find_args in [
        vec!["find", "-i", "r.rch", "--t", "2", "--method", "theorem1", "--trace"],
        vec!["find", "-i", "r.rch", "--t", "2", "--method", "split", "--seed", "9"],
        vec!["stats", "-i", "r.rch"],
    ] {
        let a = rainbow(dir.path(), &find_args);
        let b = rainbow(dir.path(), &find_args);
        assert_eq!(a.stdout, b.stdout, "nondeterministic stdout for {find_args:?}");
        assert_eq!(code(&a), code(&b));
    }
}

#[test]
fn malformed_or_missing_input_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("bad.rch"), "rch 1\nmode partite\nr 2 t 2 f 1\n").unwrap();

    let truncated = rainbow(dir.path(), &["stats", "-i", "bad.rch"]);
    assert_eq!(code(&truncated), 1);
    assert!(stdout_str(&truncated).is_empty(), "errors must not print documents");

    let missing = rainbow(
        dir.path(),
        &["find", "-i", "absent.rch", "--t", "2", "--method", "exhaustive"],
    );
    assert_eq!(code(&missing), 1);

    std::fs::write(dir.path().join("vec.txt"), "1,x\n").unwrap();
    let vectors = rainbow(
        dir.path(),
        &["zerosum", "check", "--t", "2", "--k", "2", "--vectors", "vec.txt"],
    );
    assert_eq!(code(&vectors), 1);
}

#[test]
fn usage_violations_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    rainbow(
        dir.path(),
        &["construct", "ab", "--r", "2", "--t", "2", "-o", "g.rch"],
    );

    let unseeded = rainbow(
        dir.path(),
        &["find", "-i", "g.rch", "--t", "2", "--method", "split"],
    );
    assert_eq!(code(&unseeded), 2);

    let stray_seed = rainbow(
        dir.path(),
        &["find", "-i", "g.rch", "--t", "2", "--method", "exhaustive", "--seed", "1"],
    );
    assert_eq!(code(&stray_seed), 2);

    let wrong_t = rainbow(
        dir.path(),
        &["find", "-i", "g.rch", "--t", "3", "--method", "theorem1"],
    );
    assert_eq!(code(&wrong_t), 2);

    let zero_jobs = rainbow(dir.path(), &["--jobs", "0", "bounds", "--r", "2", "--t", "2"]);
    assert_eq!(code(&zero_jobs), 2);

    let tight_parts = rainbow(
        dir.path(),
        &["exact-f", "--r", "2", "--t", "3", "--s", "2", "--fmax", "2"],
    );
    assert_eq!(code(&tight_parts), 2);

    let small_bounds = rainbow(dir.path(), &["bounds", "--r", "1", "--t", "2"]);
    assert_eq!(code(&small_bounds), 2);
}

#[test]
fn unresolved_cap_exits_three() {
    let dir = tempfile::tempdir().unwrap();
    let out = rainbow(
        dir.path(),
        &["zerosum", "g", "--r", "2", "--t", "3", "--cap", "6"],
    );
    assert_eq!(code(&out), 3);
    let doc = stdout_str(&out);
    assert!(doc.contains("\"result\":\"unresolved_at_cap\""), "doc: {doc}");
    assert!(doc.contains("\"free_witness\""), "doc: {doc}");
}

#[test]
fn zero_sum_threshold_for_scalars() {
    let dir = tempfile::tempdir().unwrap();
    let out = rainbow(
        dir.path(),
        &["zerosum", "g", "--r", "1", "--t", "3", "--cap", "12"],
    );
    assert_eq!(code(&out), 0, "{}", stderr_str(&out));
    assert!(stdout_str(&out).contains("\"value\":5"));
}

#[test]
fn bound_table_pins_known_row() {
    let dir = tempfile::tempdir().unwrap();
    let out = rainbow(dir.path(), &["bounds", "--r", "2", "--t", "2"]);
    assert_eq!(code(&out), 0);
    let doc = stdout_str(&out);
    assert!(doc.contains("\"thm1\":\"7776\""), "doc: {doc}");
    assert!(doc.contains("\"thm2\":\"432\""), "doc: {doc}");
    assert!(doc.contains("\"ab_lower\":\"2\""), "doc: {doc}");
}

#[test]
fn every_method_finds_a_rainbow_on_an_easy_instance() {
    let dir = tempfile::tempdir().unwrap();
    rainbow(
        dir.path(),
        &[
            "construct", "random", "--r", "2", "--t", "2", "--f", "8", "--s", "5", "--seed", "7",
            "-o", "r.rch",
        ],
    );
    for method_args in [
        vec!["find", "-i", "r.rch", "--t", "2", "--method", "exhaustive"],
        vec!["find", "-i", "r.rch", "--t", "2", "--method", "pigeonhole"],
        vec!["find", "-i", "r.rch", "--t", "2", "--method", "split", "--seed", "3"],
    ] {
        let out = rainbow(dir.path(), &method_args);
        assert_eq!(code(&out), 0, "{method_args:?}: {}", stderr_str(&out));
        let doc = stdout_str(&out);
        assert!(doc.contains("\"result\":\"rainbow\""), "{method_args:?}: {doc}");
        assert!(doc.contains("\"pairs\":[["), "{method_args:?}: {doc}");
    }
}

#[test]
fn honest_method_failure_still_exits_zero() {
    let dir = tempfile::tempdir().unwrap();
    rainbow(
        dir.path(),
        &["construct", "ab", "--r", "2", "--t", "2", "-o", "g.rch"],
    );
    let out = rainbow(
        dir.path(),
        &["find", "-i", "g.rch", "--t", "2", "--method", "theorem1", "--trace"],
    );
    assert_eq!(code(&out), 0, "honest failure is not an error");
    let doc = stdout_str(&out);
    assert!(doc.contains("\"result\":\"failure\""), "doc: {doc}");
    assert!(doc.contains("\"stage\""), "failure carries its stage: {doc}");
    assert!(doc.contains("\"trace\""), "trace was requested: {doc}");
}

#[test]
fn reduce_shrinks_parts_and_keeps_colors() {
    let dir = tempfile::tempdir().unwrap();
    rainbow(
        dir.path(),
        &[
            "construct", "random", "--r", "2", "--t", "2", "--f", "12", "--s", "8", "--seed",
            "11", "-o", "big.rch",
        ],
    );
    let reduced = rainbow(
        dir.path(),
        &["reduce", "-i", "big.rch", "--s", "4", "-o", "small.rch"],
    );
    assert_eq!(code(&reduced), 0, "{}", stderr_str(&reduced));
    assert!(stdout_str(&reduced).contains("\"initial_colors\":12"));

    let after = rainbow(dir.path(), &["stats", "-i", "small.rch"]);
    let doc = stdout_str(&after);
    assert!(doc.contains("\"part_sizes\":[4,4]"), "doc: {doc}");
}

#[test]
fn exact_f_recovers_the_known_value_and_writes_a_witness() {
    let dir = tempfile::tempdir().unwrap();
    let out = rainbow(
        dir.path(),
        &[
            "exact-f", "--r", "2", "--t", "2", "--s", "6", "--fmax", "3", "-o", "wit.rch",
        ],
    );
    assert_eq!(code(&out), 0, "{}", stderr_str(&out));
    let doc = stdout_str(&out);
    assert!(doc.contains("\"value\":2"), "doc: {doc}");
    assert!(doc.contains("\"ceiling_hit\":false"), "doc: {doc}");
    assert!(doc.contains("\"inconclusive\":false"), "doc: {doc}");

    let witness = rainbow(dir.path(), &["certify", "-i", "wit.rch", "--t", "2"]);
    assert!(stdout_str(&witness).contains("\"result\":\"none\""));
}

#[test]
fn timing_stays_out_of_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let out = rainbow(dir.path(), &["bounds", "--r", "3", "--t", "2"]);
    assert!(!stdout_str(&out).contains("wall-time"));
    assert!(stderr_str(&out).contains("wall-time-ms"));
}

#[test]
fn selftest_passes() {
    let dir = tempfile::tempdir().unwrap();
    let out = rainbow(dir.path(), &["selftest"]);
    assert_eq!(code(&out), 0, "{}", stdout_str(&out));
    let doc = stdout_str(&out);
    assert!(doc.contains("criterion 10  PASS"), "doc: {doc}");
    assert!(!doc.contains("FAIL"), "doc: {doc}");
}
