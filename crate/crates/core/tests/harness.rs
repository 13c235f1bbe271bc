use orientdom::family::*;
use orientdom::harness::cache::DomCache;
use orientdom::harness::expr::build_expr;
use orientdom::harness::verify::*;
use orientdom::solvers::DomOptions;

fn opts(workers: usize, seed: u64) -> VerifyOptions {
    VerifyOptions { dom: DomOptions::default().with_workers(workers), seed }
}

#[test]
fn verify_all_is_deterministic_across_workers() {
    let one = run_verify("all", &opts(1, 5)).unwrap();
    let four = run_verify("all", &opts(4, 5)).unwrap();
    assert_eq!(render_table(&one), render_table(&four));
    assert_eq!(render_porcelain(&one), render_porcelain(&four));
    assert!(all_passed(&one), "{}", render_table(&one));
}

#[test]
fn every_case_names_its_result() {
    for c in run_verify("all", &opts(1, 1)).unwrap() {
        assert!(c.description.ends_with(']') && c.description.contains(" ["), "{}", c.description);
    }
}

#[test]
fn counterexample_suite_values() {
    let cases = run_verify("counterexample", &opts(1, 1)).unwrap();
    let get = |d: &str| cases.iter().find(|c| c.description.starts_with(d)).unwrap().computed;
    assert_eq!(get("(k,s)=(2,2) gamma"), Some(4));
    assert_eq!(get("(k,s)=(2,2) rho"), Some(3));
    assert_eq!(get("(k,s)=(2,2) orientation is acyclic"), Some(1));
}

#[test]
fn porcelain_has_six_fields() {
    let text = render_porcelain(&run_verify("prism", &opts(1, 1)).unwrap());
    for line in text.lines() {
        assert_eq!(line.split('\t').count(), 6, "{line}");
    }
}

#[test]
fn failing_case_reports_fail() {
    let case = VerifyCase {
        suite: "x",
        description: "d [a]".into(),
        expected: Some(Expected::Exact(2)),
        computed: Some(3),
        status: Status::Fail,
        note: String::new(),
    };
    assert!(!all_passed(&[case]));
    assert!(Expected::Interval(4, 5).accepts(5));
    assert!(!Expected::Interval(4, 5).accepts(6));
}

#[test]
fn expressions_match_builders() {
    assert_eq!(
        build_expr("cart(cycle:4,complete:2)").unwrap(),
        orientdom::products::cartesian(&cycle(4), &complete(2)).0
    );
    assert_eq!(build_expr("corona(path:3,path:2)").unwrap(), orientdom::products::corona(&path(3), &path(2)).0);
}

#[test]
fn cache_survives_garbage() {
    let dir = tempfile::tempdir().unwrap();
    let cache = DomCache::new(dir.path());
    cache.store(&cycle(5), 3).unwrap();
    let mut text = std::fs::read_to_string(cache.path()).unwrap();
    text.push_str("\u{0}\u{1}broken\n\tx\t\n");
    std::fs::write(cache.path(), text).unwrap();
    assert_eq!(cache.lookup(&cycle(5)), Some(3));
}
