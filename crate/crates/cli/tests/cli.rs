use std::path::Path;
use std::process::{Command, Output};

fn orientdom(cache: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_orientdom"))
        .args(args)
        .env("ORIENTDOM_CACHE_DIR", cache)
        .env_remove("RUST_LOG")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn field(text: &str, key: &str) -> String {
    text.lines()
        .find_map(|l| l.strip_prefix(&format!("{key} ")))
        .unwrap_or_else(|| panic!("no `{key}` in {text}"))
        .to_string()
}

#[test]
fn construct_dom_and_cache() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache");
    let g = dir.path().join("g.ug");
    let g_str = g.to_str().unwrap();
    assert!(orientdom(&cache, &["construct", "cart(path:3,complete:3)", "--out", g_str]).status.success());

    let first = orientdom(&cache, &["dom", "--graph", g_str]);
    assert!(first.status.success());
    let text = stdout(&first);
    assert_eq!(field(&text, "value"), "4");
    assert_eq!(field(&text, "source"), "search");
    assert_ne!(field(&text, "witness"), "-");

    let second = stdout(&orientdom(&cache, &["dom", "--graph", g_str]));
    assert_eq!(field(&second, "value"), "4");
    assert_eq!(field(&second, "source"), "cache");

    let cache_file = std::fs::read_to_string(cache.join("dom-cache.tsv")).unwrap();
    let line = cache_file.lines().next().unwrap();
    assert_eq!(line.split('\t').count(), 3);

    std::fs::write(cache.join("dom-cache.tsv"), format!("junk line\n{cache_file}")).unwrap();
    let third = orientdom(&cache, &["dom", "--graph", g_str]);
    assert_eq!(field(&stdout(&third), "source"), "cache");
    assert!(String::from_utf8_lossy(&third.stderr).contains("corrupt"));

    let fresh = stdout(&orientdom(&cache, &["dom", "--graph", g_str, "--no-cache"]));
    assert_eq!(field(&fresh, "source"), "search");
}

#[test]
fn orient_then_gamma_and_rho() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().join("ce.dg");
    let d_str = d.to_str().unwrap();
    let o = orientdom(dir.path(), &["orient", "--scheme", "acyclic_lex_cycle", "--params", "k=2,s=2", "--out", d_str]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(field(&stdout(&orientdom(dir.path(), &["gamma", "--digraph", d_str])), "value"), "4");
    assert_eq!(field(&stdout(&orientdom(dir.path(), &["rho", "--digraph", d_str])), "value"), "3");

    let corona = orientdom(dir.path(), &["orient", "--scheme", "corona_orientation", "--params", "g=path:3,h=path:2"]);
    assert!(corona.status.success());
    assert!(stdout(&corona).starts_with("dg 9 "));
}

#[test]
fn bounds_output() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("c5.ug");
    std::fs::write(&g, "ug 5 5\n0 1\n0 4\n1 2\n2 3\n3 4\n").unwrap();
    let text = stdout(&orientdom(dir.path(), &["bounds", "--graph", g.to_str().unwrap()]));
    assert_eq!(field(&text, "lower"), "2");
    assert_eq!(field(&text, "upper"), "3");
    assert_eq!(field(&text, "bip"), "4");
}

#[test]
fn verify_exit_codes_and_porcelain() {
    let dir = tempfile::tempdir().unwrap();
    let ok = orientdom(dir.path(), &["verify", "tripartite", "--porcelain"]);
    assert_eq!(ok.status.code(), Some(0));
    let text = stdout(&ok);
    assert!(text.lines().all(|l| l.starts_with("tripartite\tPASS\t")), "{text}");

    let bounds = orientdom(dir.path(), &["verify", "bounds"]);
    assert_eq!(bounds.status.code(), Some(0));
    assert!(stdout(&bounds).contains("SKIPPED"));

    assert_eq!(orientdom(dir.path(), &["verify", "nope"]).status.code(), Some(2));
    assert_eq!(orientdom(dir.path(), &["frobnicate"]).status.code(), Some(2));
    assert_eq!(orientdom(dir.path(), &["dom", "--graph", "/does/not/exist"]).status.code(), Some(2));
    assert_eq!(orientdom(dir.path(), &["orient", "--scheme", "nope"]).status.code(), Some(2));
}

#[test]
fn edge_cap_flag() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("k5.ug");
    let g_str = g.to_str().unwrap();
    assert!(orientdom(dir.path(), &["construct", "complete:5", "--out", g_str]).status.success());
    let capped = orientdom(dir.path(), &["dom", "--graph", g_str, "--max-edges", "5", "--no-cache"]);
    assert_eq!(capped.status.code(), Some(2));
    let ok = orientdom(dir.path(), &["dom", "--graph", g_str, "--workers", "2", "--no-cache"]);
    assert_eq!(field(&stdout(&ok), "value"), "2");
}

#[test]
fn props_small_run() {
    let dir = tempfile::tempdir().unwrap();
    let o = orientdom(dir.path(), &["props", "--corpus-size", "20", "--seed", "9", "--porcelain"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().all(|l| l.split('\t').nth(1) == Some("PASS")));
}
