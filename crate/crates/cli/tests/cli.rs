//! End-to-end tests of the `pairlab` binary: exit codes, report contents,
//! construct/check chains, search output and file round-trips.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use pairlab_cli::schema::InstanceFile;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_pairlab"))
}

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn check_flags_the_incompatible_product() {
    let out = run(&["check", fixture("i2.json").to_str().unwrap(), "--suite", "monad"]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("μ:FF→F is compatible"), "report must name the failing law: {text}");
}

#[test]
fn check_passes_the_one_dimensional_unital_algebra() {
    let out = run(&["check", fixture("i1.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("weak-monad"));
}

#[test]
fn truncated_file_is_malformed() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("trunc.json");
    std::fs::write(&path, "{\"ring\":\"Z2\",\"kind\":\"alg").unwrap();
    let out = run(&["check", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unknown_kind_is_malformed() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("odd.json");
    std::fs::write(
        &path,
        "{\"ring\":\"Z2\",\"kind\":\"frobnicator\",\"dims\":[1],\"matrices\":{}}",
    )
    .unwrap();
    let out = run(&["check", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("unknown kind"));
}

#[test]
fn unknown_suite_is_malformed() {
    let out = run(&["check", fixture("i1.json").to_str().unwrap(), "--suite", "nope"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn construct_mu_tilde_yields_a_weak_monad() {
    let dir = tempfile::tempdir().unwrap();
    let dest = dir.path().join("mt.json");
    let out = run(&[
        "construct",
        fixture("i2.json").to_str().unwrap(),
        "mu-tilde",
        "--out",
        dest.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let check = run(&["check", dest.to_str().unwrap(), "--suite", "monad"]);
    assert_eq!(check.status.code(), Some(0));
    assert!(stdout(&check).contains("weak-monad"));
}

#[test]
fn construct_delta_tilde_yields_an_r_counital_comonad() {
    let dir = tempfile::tempdir().unwrap();
    let dest = dir.path().join("dt.json");
    let out = run(&[
        "construct",
        fixture("c2.json").to_str().unwrap(),
        "delta-tilde",
        "--out",
        dest.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let check = run(&["check", dest.to_str().unwrap(), "--suite", "r-counital"]);
    assert_eq!(check.status.code(), Some(0));
}

#[test]
fn construct_eta_tilde_is_refused_without_a_compatible_product() {
    let out = run(&["construct", fixture("i2.json").to_str().unwrap(), "eta-tilde"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("μ not compatible"));
}

#[test]
fn construct_related_adjunction_and_induced_structures() {
    let dir = tempfile::tempdir().unwrap();
    for (construction, expect_kind) in [
        ("related-adjunction", "pairing"),
        ("induced-monad", "algebra"),
        ("induced-comonad", "coalgebra"),
    ] {
        let dest = dir.path().join(format!("{construction}.json"));
        let out = run(&[
            "construct",
            fixture("p1.json").to_str().unwrap(),
            construction,
            "--out",
            dest.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0), "{construction} failed: {}", stderr(&out));
        let file = InstanceFile::load(&dest).unwrap();
        assert_eq!(file.kind, expect_kind);
        file.build().unwrap();
    }
}

#[test]
fn construct_entwined_product_from_the_flip_fixture() {
    let dir = tempfile::tempdir().unwrap();
    let dest = dir.path().join("ep.json");
    let out = run(&[
        "construct",
        fixture("flip-entwining.json").to_str().unwrap(),
        "entwined-product",
        "--out",
        dest.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let check = run(&["check", dest.to_str().unwrap(), "--suite", "monad"]);
    assert_eq!(check.status.code(), Some(0), "entwined product must check as weak");
}

#[test]
fn construct_entwined_coproduct_from_the_flip_fixture() {
    let dir = tempfile::tempdir().unwrap();
    let dest = dir.path().join("ec.json");
    let out = run(&[
        "construct",
        fixture("flip-entwining-co.json").to_str().unwrap(),
        "entwined-coproduct",
        "--out",
        dest.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let check = run(&["check", dest.to_str().unwrap(), "--suite", "comonad"]);
    assert_eq!(check.status.code(), Some(0));
}

#[test]
fn search_with_an_impossible_pattern_reports_zero_and_exits_clean() {
    let out = run(&[
        "search", "--kind", "algebra", "--dims", "2", "--ring", "Z2", "--flags", "!assoc",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("\"matched\":0"));
}

#[test]
fn search_writes_parseable_matching_instances() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&[
        "search",
        "--kind",
        "algebra",
        "--dims",
        "2",
        "--ring",
        "Z2",
        "--flags",
        "regular,!compatible",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let matched: u64 = serde_json::from_str::<serde_json::Value>(&text).unwrap()["matched"]
        .as_u64()
        .unwrap();
    assert!(matched > 0);
    let files: Vec<_> = std::fs::read_dir(dir.path()).unwrap().collect();
    assert_eq!(files.len() as u64, matched);
    // every written instance parses and fails exactly the excluded law
    let sample = files[0].as_ref().unwrap().path();
    let check = run(&["check", sample.to_str().unwrap(), "--suite", "r-unital"]);
    assert_eq!(check.status.code(), Some(1));
    assert!(stdout(&check).contains("μ:FF→F is compatible"));
}

#[test]
fn search_is_deterministic() {
    let a = stdout(&run(&[
        "search", "--kind", "pairing", "--dims", "2,2", "--ring", "Z2", "--flags", "regular",
    ]));
    let b = stdout(&run(&[
        "search", "--kind", "pairing", "--dims", "2,2", "--ring", "Z2", "--flags", "regular",
    ]));
    assert_eq!(a, b);
}

#[test]
fn oracle_agrees_on_the_fixture_corpus() {
    for name in ["i1.json", "f-weak.json", "g-weak.json", "p1.json", "p2.json"] {
        let out = run(&["oracle", fixture(name).to_str().unwrap(), "--dims", "2"]);
        assert_eq!(out.status.code(), Some(0), "oracle disagreed on {name}: {}", stdout(&out));
    }
}

#[test]
fn oracle_rejects_kinds_without_an_oracle() {
    let out = run(&["oracle", fixture("w2-mixed.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn every_fixture_round_trips_through_the_schema() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    let mut seen = 0;
    for entry in std::fs::read_dir(dir).unwrap() {
        let path = entry.unwrap().path();
        if path.extension().and_then(|e| e.to_str()) != Some("json") {
            continue;
        }
        seen += 1;
        let file = InstanceFile::load(&path).unwrap();
        let text = serde_json::to_string(&file).unwrap();
        let back: InstanceFile = serde_json::from_str(&text).unwrap();
        assert_eq!(file, back, "round-trip failed for {}", path.display());
        file.build().unwrap_or_else(|e| panic!("{} does not build: {e}", path.display()));
    }
    assert!(seen >= 10, "fixture corpus went missing");
}

#[test]
fn every_fixture_checks_cleanly_or_reports_a_violation() {
    // the zero mixed law is the only corpus member expected to fail its suite
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    for entry in std::fs::read_dir(dir).unwrap() {
        let path = entry.unwrap().path();
        if path.extension().and_then(|e| e.to_str()) != Some("json") {
            continue;
        }
        let out = run(&["check", path.to_str().unwrap()]);
        let name = path.file_name().unwrap().to_str().unwrap();
        let expected = match name {
            "i2.json" | "i3.json" | "c2.json" | "c3.json" | "zero-mixed.json" | "p2.json" => 1,
            _ => 0,
        };
        assert_eq!(out.status.code(), Some(expected), "{name}: {}", stdout(&out));
    }
}
