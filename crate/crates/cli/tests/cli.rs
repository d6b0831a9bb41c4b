//! End-to-end tests of the command line binary: exit codes, report shapes,
//! determinism and format round trips.

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> String {
    let p = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name);
    p.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tiltcheck"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn info_reports_dimensions() {
    let out = run(&["info", "--algebra", &fixture("nakayama6.alg")]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["dim"], 16);
    assert_eq!(v["vertices"].as_array().unwrap().len(), 6);
    assert_eq!(v["projDimsOfSimples"]["1"], 3);
    assert_eq!(v["projDimsOfSimples"]["6"], 0);
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("dim = 16, vertices = 6"));
}

#[test]
fn malformed_file_gives_exit_two_with_position() {
    let dir = std::env::temp_dir().join("tiltcheck-bad");
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.alg");
    std::fs::write(&bad, "field Q\nvertices 1 2\narrow a: 1 -> 9\n").unwrap();
    let out = run(&["info", "--algebra", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line"), "diagnostics: {err}");
    // syntax error with position
    std::fs::write(&bad, "field Q\nvertices 1 2\nnonsense here\n").unwrap();
    let out = run(&["info", "--algebra", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));
}

#[test]
fn check_exit_codes() {
    let out = run(&[
        "check",
        "--algebra",
        &fixture("nakayama6.alg"),
        "--complex",
        &fixture("nakayama6_silting.cx"),
    ]);
    assert_eq!(out.status.code(), Some(3), "fixture verdict is NotEquivalence");
    let out = run(&[
        "check",
        "--algebra",
        &fixture("a2.alg"),
        "--complex",
        &fixture("a2_silting.cx"),
    ]);
    assert_eq!(out.status.code(), Some(0));
    // a non-silting list: a lone shifted projective fails generation
    let dir = std::env::temp_dir().join("tiltcheck-nonsilting");
    std::fs::create_dir_all(&dir).unwrap();
    let cx = dir.join("lone.cx");
    std::fs::write(&cx, "complex C\nterm -1 = P6\n").unwrap();
    let out = run(&[
        "check",
        "--algebra",
        &fixture("nakayama6.alg"),
        "--complex",
        cx.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(5));
    let v = json_of(&out);
    assert!(v["silting"]["generating"] == false);
    assert!(!v["silting"]["failures"].as_array().unwrap().is_empty());
}

#[test]
fn torsion_exit_codes() {
    let out = run(&[
        "torsion",
        "--algebra",
        &fixture("a2.alg"),
        "--pair",
        &fixture("a2_pair.tp"),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_of(&out)["route"], "splitting");
    let out = run(&[
        "torsion",
        "--algebra",
        &fixture("nakayama6.alg"),
        "--pair",
        &fixture("nakayama6_pair.tp"),
    ]);
    assert_eq!(out.status.code(), Some(4), "undetermined by torsion routes");
    // a mutated non-pair fails with exit 5 and a witness
    let dir = std::env::temp_dir().join("tiltcheck-nonpair");
    std::fs::create_dir_all(&dir).unwrap();
    let tp = dir.join("bad.tp");
    std::fs::write(
        &tp,
        "torsion [1] [1,2] [1,2,3] [4] [4,5] [5] [3]\nfree [2] [2,3] [4,5,6] [5,6] [6]\n",
    )
    .unwrap();
    let out = run(&[
        "torsion",
        "--algebra",
        &fixture("nakayama6.alg"),
        "--pair",
        tp.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(5));
    let v = json_of(&out);
    assert_eq!(v["axioms"]["ok"], false);
    assert!(v["axioms"]["violation"].as_str().is_some());
}

#[test]
fn verify_witness_fixture() {
    let out = run(&[
        "verify-witness",
        "--algebra",
        &fixture("nakayama6.alg"),
        "--pair",
        &fixture("nakayama6_pair.tp"),
        "--witness",
        &fixture("nakayama6_witness_234.wit"),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["valid"], true);
    // the obstruction class of this particular splice is the generator of a
    // one-dimensional third extension group, so vanishing is false
    assert_eq!(v["vanishing"], false);
    assert_eq!(v["class"]["degree"], 3);
}

#[test]
fn witness_search_single_module() {
    let out = run(&[
        "witness-search",
        "--algebra",
        &fixture("nakayama6.alg"),
        "--pair",
        &fixture("nakayama6_pair.tp"),
        "--module",
        "[2,3]",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    let results = v["results"].as_array().unwrap();
    assert_eq!(results.len(), 1);
    assert_eq!(results[0]["found"], true);
    assert_eq!(results[0]["classZero"], true);
}

#[test]
fn ext_command() {
    let out = run(&[
        "ext",
        "--algebra",
        &fixture("a2.alg"),
        "--from",
        "[1]",
        "--to",
        "[2]",
        "--degree",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_of(&out)["dimension"], 1);
    // degree 0 between disjoint-support intervals vanishes
    let out = run(&[
        "ext",
        "--algebra",
        &fixture("nakayama6.alg"),
        "--from",
        "[1,2,3]",
        "--to",
        "[2,3,4]",
        "--degree",
        "0",
    ]);
    assert_eq!(json_of(&out)["dimension"], 0);
}

#[test]
fn field_override() {
    let out = run(&[
        "info",
        "--algebra",
        &fixture("nakayama6.alg"),
        "--field",
        "F2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_of(&out)["field"], "F2");
    assert_eq!(json_of(&out)["dim"], 16);
}

#[test]
fn check_verdict_is_field_independent_on_the_fixture() {
    // the fixture algebra is monomial, so the silting verdict does not
    // depend on the ground field; run the full pipeline over F_5
    let out = run(&[
        "check",
        "--algebra",
        &fixture("nakayama6.alg"),
        "--field",
        "F5",
        "--complex",
        &fixture("nakayama6_silting.cx"),
    ]);
    assert_eq!(out.status.code(), Some(3));
    let v = json_of(&out);
    assert_eq!(v["conclusion"], "NotEquivalence");
    assert_eq!(v["evidence"]["homDimensions"]["Hom(P,P[-1])"], 4);
}

#[test]
fn out_flag_writes_the_same_bytes() {
    let dir = std::env::temp_dir().join("tiltcheck-out");
    std::fs::create_dir_all(&dir).unwrap();
    let out_path = dir.join("report.json");
    let out = run(&[
        "indecomposables",
        "--algebra",
        &fixture("a3.alg"),
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let file_bytes = std::fs::read(&out_path).unwrap();
    assert_eq!(file_bytes, out.stdout);
}

#[test]
fn format_round_trips() {
    use tiltcheck::formats;
    for name in ["a2.alg", "a3.alg", "nakayama6.alg"] {
        let text = std::fs::read_to_string(fixture(name)).unwrap();
        let alg = formats::algebra::parse_algebra(&text, None).unwrap();
        let ser = formats::algebra::serialize_algebra(&alg);
        let alg2 = formats::algebra::parse_algebra(&ser, None).unwrap();
        assert_eq!(ser, formats::algebra::serialize_algebra(&alg2));
        assert_eq!(alg.dim(), alg2.dim());
    }
    let alg_text = std::fs::read_to_string(fixture("nakayama6.alg")).unwrap();
    let alg = formats::algebra::parse_algebra(&alg_text, None).unwrap();
    {
        let text = std::fs::read_to_string(fixture("nakayama6_silting.cx")).unwrap();
        let cxs = formats::complex::parse_complexes(&alg, &text).unwrap();
        let ser = formats::complex::serialize_complexes(&alg, &cxs);
        let cxs2 = formats::complex::parse_complexes(&alg, &ser).unwrap();
        assert_eq!(cxs, cxs2);
    }
    let inds = tilt_core::indec::enumerate_indecomposables(&alg).unwrap();
    {
        let text = std::fs::read_to_string(fixture("nakayama6_pair.tp")).unwrap();
        let tp = formats::pair::parse_pair(&inds, &text).unwrap();
        let ser = formats::pair::serialize_pair(&inds, &tp);
        let tp2 = formats::pair::parse_pair(&inds, &ser).unwrap();
        assert_eq!(tp, tp2);
    }
    {
        let text = std::fs::read_to_string(fixture("nakayama6_witness_234.wit")).unwrap();
        let w = formats::witness::parse_witness(&alg, &text).unwrap();
        let ser = formats::witness::serialize_witness(&alg, &w);
        let w2 = formats::witness::parse_witness(&alg, &ser).unwrap();
        assert_eq!(w.u.blocks, w2.u.blocks);
        assert_eq!(w.v.blocks, w2.v.blocks);
        assert_eq!(w.w.blocks, w2.w.blocks);
        assert_eq!(w.z.blocks, w2.z.blocks);
    }
    // module file round trip
    let modtext = "module X\ndim 2=1 3=1\nmap b = [[1]]\n";
    let mods = formats::module::parse_modules(&alg, modtext).unwrap();
    let ser = formats::module::serialize_module(&alg, &mods[0].0, &mods[0].1);
    let mods2 = formats::module::parse_modules(&alg, &ser).unwrap();
    assert_eq!(mods[0].1, mods2[0].1);
}
