use std::path::{Path, PathBuf};
use std::process::Command as Process;

use homhopf::cleft::ComoduleAlgebra;
use homhopf::corpus::{extension_system, hom_group_hopf, mutate, Mutation};
use homhopf::io::{write_json, CleftFile, ComoduleFile, ScalarRepr, StructureFile, SystemFile};
use homhopf::linalg::Field;
use homhopf_cli::{run, Command, Report, RunConfig};
use tempfile::TempDir;

const Q: Field = Field::Rational;

fn go(command: Command, out: &Path) -> Report {
    let mut cfg = RunConfig::new(command);
    cfg.out = out.to_path_buf();
    run(&cfg)
}

fn write_hopf(dir: &Path, name: &str, group: &str, auto: &str) -> PathBuf {
    let h = hom_group_hopf(group, auto, Q).unwrap();
    let path = dir.join(name);
    write_json(&path, &StructureFile::from_hopf(&h)).unwrap();
    path
}

fn example(dir: &TempDir, name: &str, auto: &str) -> Report {
    go(
        Command::Example {
            name: name.into(),
            params: vec![auto.into()],
        },
        dir.path(),
    )
}

#[test]
fn verify_hom_group_algebra_passes() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_hopf(dir.path(), "s3.json", "S3", "conj:(12)");
    let r = go(Command::Verify { path }, dir.path());
    assert!(r.passed, "{}", r.text());
    assert_eq!(r.exit_code(), 0);
    assert!(r.checks[0].axioms.len() >= 14);
}

#[test]
fn verify_reports_broken_coassociativity() {
    let dir = tempfile::tempdir().unwrap();
    let h = hom_group_hopf("Z3", "id", Q).unwrap();
    let mut file = StructureFile::from_hopf(&h);
    // Δ(1) = 1⊗1 + 2⊗2
    let comult = file.comult.as_mut().unwrap();
    comult[1][2][2] = ScalarRepr::Text("1".into());
    let path = dir.path().join("broken.json");
    write_json(&path, &file).unwrap();
    let r = go(Command::Verify { path }, dir.path());
    assert_eq!(r.exit_code(), 1);
    assert!(r.failed_check("hom_hopf", "hom_coalgebra.hom_coassociativity"), "{}", r.text());
    let fail = r.checks[0]
        .outcome("hom_coalgebra.hom_coassociativity")
        .unwrap();
    let cx = fail.counterexample.as_ref().unwrap();
    assert_eq!(cx.tuple, vec!["1".to_string()]);
    assert!(r.text().contains("[FAIL] hom_hopf/hom_coalgebra.hom_coassociativity at (1)"));
}

#[test]
fn verify_rejects_empty_basis() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("empty.json");
    std::fs::write(
        &path,
        r#"{"kind":"hom_algebra","field":"Q","basis":[],"alpha":[],"mult":[],"unit":[]}"#,
    )
    .unwrap();
    let r = go(Command::Verify { path }, dir.path());
    assert_eq!(r.exit_code(), 1);
    assert_eq!(r.error.as_ref().unwrap().kind, "ParseError");
    assert!(r.error.as_ref().unwrap().message.contains("empty.json"));
}

#[test]
fn example_then_crossed_and_roundtrip() {
    let dir = tempfile::tempdir().unwrap();
    let r = example(&dir, "S3/A3", "conj:(12)");
    assert!(r.passed, "{}", r.text());
    for f in ["group.json", "hopf.json", "system.json", "cleft.json", "comodule.json"] {
        assert!(dir.path().join(f).exists(), "{f}");
    }
    let sys = dir.path().join("system.json");
    let r = go(Command::Crossed { path: sys.clone(), force: false }, dir.path());
    assert!(r.passed, "{}", r.text());
    assert_eq!(r.facts["verdicts_agree"], true);
    assert!(dir.path().join("product.json").exists());
    let r = go(Command::Verify { path: dir.path().join("product.json") }, dir.path());
    assert!(r.passed, "{}", r.text());

    let r = go(Command::Roundtrip { path: sys }, dir.path());
    assert!(r.passed, "{}", r.text());
    let chains = r.facts["chains"].as_object().unwrap();
    assert_eq!(chains.len(), 3);
    assert!(chains.values().all(|v| v == true));

    let r = go(Command::Cleft { path: dir.path().join("cleft.json") }, dir.path());
    assert!(r.passed, "{}", r.text());
    assert_eq!(r.facts["coinvariants_dim"], 3);
}

fn broken_cocycle_system(dir: &Path) -> PathBuf {
    let s = extension_system("S3", "1", "id", Q).unwrap();
    let bad = mutate(&s, Mutation::Sigma("[(12)]", "[(13)]", &[(2, "e")])).unwrap();
    write_json(&dir.join("a.json"), &StructureFile::from_algebra(bad.a())).unwrap();
    write_json(&dir.join("h.json"), &StructureFile::from_hopf(bad.h())).unwrap();
    let path = dir.join("system.json");
    write_json(&path, &SystemFile::from_system(&bad, "a.json", "h.json")).unwrap();
    path
}

#[test]
fn crossed_refuses_broken_cocycle_without_force() {
    let dir = tempfile::tempdir().unwrap();
    let path = broken_cocycle_system(dir.path());
    let r = go(Command::Crossed { path, force: false }, dir.path());
    assert_eq!(r.exit_code(), 1);
    assert_eq!(r.error.as_ref().unwrap().kind, "ConditionsViolated");
    assert!(r.failed_check("crossed_system", "cocycle.cocycle"));
    assert!(!dir.path().join("product.json").exists());
}

#[test]
fn forced_broken_cocycle_shows_non_associativity() {
    let dir = tempfile::tempdir().unwrap();
    let path = broken_cocycle_system(dir.path());
    let r = go(Command::Crossed { path, force: true }, dir.path());
    assert_eq!(r.exit_code(), 1);
    assert!(r.error.is_none());
    assert!(dir.path().join("product.json").exists());
    let oracle = r.checks.iter().find(|c| c.structure == "crossed_product").unwrap();
    let fail = oracle.outcome("hom_associativity").unwrap();
    assert!(fail.counterexample.is_some());
    assert_eq!(r.facts["verdicts_agree"], true);
}

fn regular_kz2(dir: &Path) -> PathBuf {
    write_hopf(dir, "kz2.json", "Z2", "id");
    let h = hom_group_hopf("Z2", "id", Q).unwrap();
    let c = ComoduleAlgebra::regular(h);
    let comod = dir.join("comodule.json");
    write_json(&comod, &ComoduleFile::from_comodule(&c, "kz2.json", "kz2.json")).unwrap();
    comod
}

#[test]
fn galois_on_regular_kz2() {
    let dir = tempfile::tempdir().unwrap();
    let path = regular_kz2(dir.path());
    let r = go(Command::Galois { path }, dir.path());
    assert!(r.passed, "{}", r.text());
    assert_eq!(r.facts["galois_bijective"], true);
    assert_eq!(r.facts["galois_rank"], 4);
}

#[test]
fn unnormalized_cleft_map_is_diagnosed() {
    let dir = tempfile::tempdir().unwrap();
    regular_kz2(dir.path());
    let two = || ScalarRepr::Text("2".into());
    let zero = || ScalarRepr::Text("0".into());
    let file = CleftFile {
        comodule: "comodule.json".into(),
        gamma: vec![vec![two(), zero()], vec![zero(), two()]],
        gamma_inv: None,
    };
    let path = dir.path().join("cleft.json");
    write_json(&path, &file).unwrap();
    let r = go(Command::Cleft { path }, dir.path());
    assert_eq!(r.exit_code(), 1);
    assert_eq!(r.error.as_ref().unwrap().kind, "NormalizationMissing");
}

#[test]
fn example_without_section_lists_cosets() {
    let dir = tempfile::tempdir().unwrap();
    let r = example(&dir, "Z4/{0,2}", "inv");
    assert_eq!(r.exit_code(), 1);
    let err = r.error.as_ref().unwrap();
    assert_eq!(err.kind, "NoSection");
    assert!(err.message.contains("[1]={1,3}"), "{}", err.message);
    assert!(r.outputs.is_empty());
}

#[test]
fn trivial_z2_example_is_classical() {
    let dir = tempfile::tempdir().unwrap();
    let r = example(&dir, "Z2", "trivial");
    assert!(r.passed, "{}", r.text());
    let r = go(Command::Roundtrip { path: dir.path().join("system.json") }, dir.path());
    assert!(r.passed, "{}", r.text());
    let r = go(Command::Galois { path: dir.path().join("cleft.json") }, dir.path());
    assert!(r.passed, "{}", r.text());
    assert_eq!(r.facts["cleft_inverse_matches"], true);
}

#[test]
fn field_override_to_prime_field() {
    let dir = tempfile::tempdir().unwrap();
    example(&dir, "S3/A3", "conj:(12)");
    let mut cfg = RunConfig::new(Command::Roundtrip { path: dir.path().join("system.json") });
    cfg.field = Some(Field::prime(5).unwrap());
    cfg.out = dir.path().to_path_buf();
    let r = run(&cfg);
    assert!(r.passed, "{}", r.text());
    assert_eq!(r.field.as_deref(), Some("Fp:5"));
}

#[test]
fn binary_exit_codes_and_machine_schema() {
    let dir = tempfile::tempdir().unwrap();
    let bin = env!("CARGO_BIN_EXE_homhopf");
    let d = dir.path().to_str().unwrap();
    let ok = Process::new(bin)
        .args(["example", "S3/A3", "conj:(12)", "--out", d, "--format", "machine"])
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&ok.stdout).unwrap();
    assert_eq!(v["schema"], "homhopf-report/1");
    assert_eq!(v["passed"], true);
    assert!(v.get("elapsed").is_none());
    let bad = Process::new(bin)
        .args(["example", "Z4/{0,2}", "inv", "--out", d])
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&bad.stdout).contains("NoSection"));
}
