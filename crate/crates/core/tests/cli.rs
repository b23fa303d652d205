use std::io::Write as _;
use std::path::PathBuf;

use evoalg::catalog;
use evoalg::cli::{execute, run, CatalogAction, Command, EXIT_INPUT, EXIT_MISMATCH, EXIT_OK};
use evoalg::io::{parse_algebra, AlgebraFile};
use evoalg::scalar::int;

fn data(name: &str) -> String {
    format!("{}/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn cli(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("evoalg").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn temp_algebra(e: &evoalg::EvolutionAlgebra) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(AlgebraFile::from_algebra(e, None, None).to_json().as_bytes()).unwrap();
    f
}

#[test]
fn info_n22() {
    let (code, out, _) = cli(&["info", &data("n22.json")]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("ann dim 1, associative: yes, power-associative: yes, nil index 3, indecomposable"), "{out}");
}

#[test]
fn info_n46_not_associative() {
    let (code, out, _) = cli(&["info", &data("n46.json")]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("associative: no"), "{out}");
}

#[test]
fn info_rejects_ragged_squares() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(br#"{"dim": 2, "squares": [["0","1","0"],["0","0","0"]]}"#).unwrap();
    let (code, _, err) = cli(&["info", f.path().to_str().unwrap()]);
    assert_eq!(code, EXIT_INPUT);
    assert!(err.contains("squares[0]"), "{err}");
    let (code, _, err) = cli(&["info", "/nonexistent/file.json"]);
    assert_eq!(code, EXIT_INPUT);
    assert!(err.starts_with("error:"), "{err}");
}

#[test]
fn unknown_fields_warn_but_succeed() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(br#"{"dim": 1, "squares": [["0"]], "author": "x"}"#).unwrap();
    let (code, _, err) = cli(&["info", f.path().to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    assert!(err.contains("warning: ignoring unknown field `author`"), "{err}");
}

#[test]
fn derivations_listing_and_json() {
    let (code, out, _) = cli(&["derivations", &data("n22.json")]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("dim D = 2\n"), "{out}");
    assert!(out.contains("dim D' = 1"));

    let (code, out, _) = cli(&["derivations", &data("zero2.json"), "--json"]);
    assert_eq!(code, EXIT_OK);
    let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["dim_D"], 4);
    assert_eq!(doc["basis"].as_array().unwrap().len(), 4);

    let n617 = catalog::build("N_{6,17}", &[int(1), int(1), int(1)]).unwrap();
    let f = temp_algebra(&n617);
    let (_, out, _) = cli(&["derivations", f.path().to_str().unwrap(), "--json"]);
    let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["dim_D"], 10);
    assert_eq!(doc["dim_D_prime"], 8);
}

#[test]
fn inner_dimensions() {
    let n511 = catalog::build("N_{5,11}", &[int(1)]).unwrap();
    let f = temp_algebra(&n511);
    let (code, out, _) = cli(&["inner", f.path().to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("dim In = 3\n"), "{out}");
    assert!(out.contains("ideal [D, In] ⊆ In: yes"));

    let n625 = catalog::build("N_{6,25}", &[int(1)]).unwrap();
    let f = temp_algebra(&n625);
    let (_, out, _) = cli(&["inner", f.path().to_str().unwrap()]);
    assert!(out.starts_with("dim In = 3\n"), "{out}");

    let (code, out, _) = cli(&["inner", &data("zero2.json")]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("dim In = 0\n"), "{out}");
}

#[test]
fn inner_rejects_non_power_associative() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(br#"{"dim": 2, "squares": [["0","1"],["1","0"]]}"#).unwrap();
    let (code, _, err) = cli(&["inner", f.path().to_str().unwrap()]);
    assert_eq!(code, EXIT_INPUT);
    assert!(err.contains("not power-associative"), "{err}");
}

#[test]
fn decompose_examples() {
    let (code, out, _) = cli(&["decompose", &data("n44.json")]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("dim D = 2 + 2 + 1 + 1 = 6"), "{out}");
    assert_eq!(out.matches("e1^2 = e2, e2^2 = 0").count(), 2);

    let (_, out, _) = cli(&["decompose", &data("n32.json")]);
    assert!(out.contains("dim 2:") && out.contains("dim 1:"), "{out}");
    assert!(out.contains("= 5"), "{out}");

    let (code, out, _) = cli(&["decompose", &data("n46.json")]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("indecomposable: single block"), "{out}");
}

fn verify_cmd(name: Option<&str>, params: &[&str]) -> (i32, String, String) {
    let cmd = Command::Catalog {
        action: CatalogAction::Verify {
            name: name.map(str::to_string),
            params: params.iter().map(|s| s.to_string()).collect(),
        },
    };
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = execute(&cmd, 42, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn catalog_verify_single_rows() {
    let (code, out, _) = verify_cmd(Some("N_{5,12}"), &["1", "1"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("PASS N_{5,12}(1, 1)"), "{out}");
    assert!(out.contains("dim_D              computed 4"), "{out}");

    let (code, _, err) = verify_cmd(Some("N_{6,23}"), &["1", "1", "1", "1"]);
    assert_eq!(code, EXIT_INPUT);
    assert!(err.contains("αδ − βγ ≠ 0"), "{err}");

    let (code, _, _) = verify_cmd(Some("N_{9,9}"), &[]);
    assert_eq!(code, EXIT_INPUT);

    let (code, out, _) = verify_cmd(Some("N_{6,26}"), &[]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("dim_In is disputed (table 3 / proof 2); computed value 3"), "{out}");

    let (code, _, _) = verify_cmd(Some("N_{6,25}"), &["-2/3"]);
    assert_eq!(code, EXIT_OK);
}

#[test]
fn catalog_verify_all_reports_every_family() {
    let (code, out, _) = verify_cmd(None, &[]);
    for spec in catalog::families() {
        assert!(out.contains(spec.name), "{}", spec.name);
    }
    // the n = 3 derived-algebra row is the only disagreement
    assert_eq!(code, EXIT_MISMATCH);
    let failing: Vec<&str> = out.lines().filter(|l| l.starts_with("FAIL")).collect();
    assert!(!failing.is_empty() && failing.iter().all(|l| l.starts_with("FAIL N_{3,3}")), "{failing:?}");
}

#[test]
fn catalog_list_names_constraints() {
    let (code, out, _) = cli(&["catalog", "list"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("N_{6,18}(α, β, γ, δ)"));
    assert!(out.contains("αβ ≠ 0, γδ ≠ 0, αδ − βγ ≠ 0"));
    assert_eq!(out.lines().filter(|l| l.starts_with("N_{")).count(), catalog::families().len());
}

#[test]
fn usage_errors_exit_two() {
    let (code, _, err) = cli(&["frobnicate"]);
    assert_eq!(code, EXIT_INPUT);
    assert!(!err.is_empty());
    let (code, out, _) = cli(&["--help"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("derivations"));
}

#[test]
fn emitted_files_roundtrip() {
    for name in ["n22.json", "n32.json", "n44.json", "n46.json", "zero2.json", "idempotent_n22.json"] {
        let loaded = evoalg::io::load_algebra(&PathBuf::from(data(name))).unwrap();
        let again = AlgebraFile::from_algebra(&loaded.algebra, loaded.name.as_deref(), None).to_json();
        assert_eq!(parse_algebra(&again).unwrap().algebra, loaded.algebra);
    }
}
