use clap::Parser;
use qpoly_hull::cli::{golden_checks, run, Cli, HullOutput};
use qpoly_hull::field::{Basis, Elem, FieldTower};
use qpoly_hull::frob::FrobFamily;
use qpoly_hull::linalg::Matrix;
use qpoly_hull::pencil::build_pencil;
use qpoly_hull::linops::QPoly;
use qpoly_hull::sweep::{sweep_p1, Family, ParamField, StrataTable};

fn cli(args: &[&str]) -> qpoly_hull::cli::Output {
    run(&Cli::try_parse_from(std::iter::once("qpoly-hull").chain(args.iter().copied())).unwrap())
}

#[test]
fn golden_checks_all_pass() {
    let failed: Vec<_> = golden_checks().unwrap().into_iter().filter(|c| !c.pass).collect();
    assert!(failed.is_empty(), "{failed:#?}");
}

#[test]
fn gf4_normal_basis_gram_is_identity() {
    let t = FieldTower::build(2, 1, 2).unwrap();
    let p = build_pencil(&t, &QPoly::frobenius(&t, 1), &Basis::normal(&t)).unwrap();
    assert_eq!(p.g0, Matrix::identity(2));
    assert_eq!(p.roots, vec![Elem::ONE]);
}

#[test]
fn gf64_default_modulus_counts() {
    let t = FieldTower::build(2, 2, 3).unwrap();
    let fam = FrobFamily::new(&t, 1).unwrap();
    let table = sweep_p1(&t, &Family::Frobenius(fam), ParamField::Top, 1 << 20, true).unwrap();
    assert_eq!((table.total, table.count(0), table.count(1)), (65, 60, 5));
    assert_eq!(table.non_bijective(), Some(21));
}

#[test]
fn gf64_base_sweep() {
    let out = cli(&["--p", "2", "--r", "2", "--m", "3", "sweep", "--field", "base", "--records"]);
    assert_eq!(out.code, 0);
    assert!(out.text.contains("S_0: 3 projective points"), "{}", out.text);
    assert!(out.text.contains("S_1: 2 projective points"), "{}", out.text);
}

#[test]
fn sweep_json_round_trips() {
    let out = cli(&["--p", "3", "--m", "3", "--format", "json", "sweep", "--field", "top", "--records"]);
    assert_eq!(out.code, 0);
    let v: serde_json::Value = serde_json::from_str(&out.text).unwrap();
    let table: StrataTable = serde_json::from_value(v["table"].clone()).unwrap();
    assert_eq!(serde_json::to_value(&table).unwrap(), v["table"]);
    assert_eq!(table.total, 28);
}

#[test]
fn hull_json_round_trips() {
    let out = cli(&["--p", "2", "--r", "2", "--m", "3", "--format", "json", "hull", "--lambda", "a^3+a^2+a", "--mu", "1"]);
    assert_eq!(out.code, 0, "{}", out.text);
    let v: serde_json::Value = serde_json::from_str(&out.text).unwrap();
    assert_eq!(v["schema"], 1);
    let h: HullOutput = serde_json::from_value(v.clone()).unwrap();
    assert_eq!(h.gram.hull_dim, h.adjoint_hull);
}

#[test]
fn discriminant_gf4() {
    let out = cli(&["--p", "2", "--m", "2", "discriminant", "--basis", "polynomial"]);
    assert_eq!(out.code, 0);
    assert!(out.text.contains("Delta(rho) = rho^4+1"), "{}", out.text);
    assert!(out.text.contains("D(s) = s^2+1"), "{}", out.text);
}

#[test]
fn csv_output() {
    let out = cli(&["--p", "2", "--m", "2", "--format", "csv", "sweep", "--field", "base"]);
    assert_eq!(out.text, "hull_dim,points\n0,2\n1,1\n");
}

#[test]
fn rdcode_from_file() {
    let dir = std::env::temp_dir().join(format!("qpoly-hull-golden-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("gens.txt");
    std::fs::write(&path, "# f and g\n0, 1, 0, 0, 0\n0, 0, 1, 1, 0\n").unwrap();
    let out = cli(&["--p", "2", "--m", "5", "rdcode", "--generators", path.to_str().unwrap()]);
    assert_eq!(out.code, 0, "{}", out.text);
    assert!(out.text.contains("rank(M) = 1, hull = 1"), "{}", out.text);
    std::fs::write(&path, "1, 1\n").unwrap();
    assert_eq!(cli(&["--p", "2", "--m", "5", "rdcode", "--generators", path.to_str().unwrap()]).code, 2);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn cap_is_enforced() {
    let out = cli(&["--p", "2", "--r", "6", "--m", "3", "--cap", "4096", "field-info"]);
    assert_eq!(out.code, 2);
}
