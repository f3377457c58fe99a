use std::process::{Command, Output};

fn charval(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_charval"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn cv_of_psl25_has_eight_values() {
    let out = charval(&["cv", "PSL(2,5)"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).lines().last(), Some("8 values"));
    let quiet = charval(&["--quiet", "cv", "PGL(2,5)"]);
    assert_eq!(stdout(&quiet), "8 values\n");
}

#[test]
fn cd_of_s6() {
    let out = charval(&["cd", "S(6)"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "1 5 9 10 16\n");
}

#[test]
fn trivial_group_table() {
    let out = charval(&["table", "C(1)"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("1 classes"));
    let rows: Vec<&str> = text.lines().filter(|l| l.starts_with("X.")).collect();
    assert_eq!(rows, vec!["X.1     1"]);
}

#[test]
fn text_table_shows_exact_and_approximate_values() {
    let text = stdout(&charval(&["table", "A(5)"]));
    assert!(text.contains("≈ 1.618034"));
    assert!(text.contains("≈ -0.618034"));
    assert!(text.contains("size    1  15  20  12  12"));
}

#[test]
fn json_export_round_trips() {
    let out = charval(&["table", "PSL(2,7)", "--format", "json"]);
    assert!(out.status.success());
    let export = charval::chartable::export::TableExport::from_json(&stdout(&out)).unwrap();
    assert_eq!(export.group.order, 168);
    let g: charval::families::GroupSpec = "PSL(2,7)".parse().unwrap();
    let table = charval::chartable::CharacterTable::compute(&g.build().unwrap(), 200_000).unwrap();
    assert_eq!(export.values().unwrap(), table.values().to_vec());

    let raw: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(raw["chars"].as_array().unwrap().len(), 6);
    assert_eq!(raw["classes"][0]["rep_cycles"], "()");
}

#[test]
fn csv_export() {
    let text = stdout(&charval(&["table", "S(3)", "--format", "csv"]));
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(
        lines,
        vec![
            "char,degree,1a,2a,3a",
            "size,,1,3,2",
            "order,,1,2,3",
            "X.1,1,1,1,1",
            "X.2,1,1,-1,1",
            "X.3,2,2,0,-1"
        ]
    );
}

#[test]
fn output_is_byte_stable() {
    let a = charval(&["table", "M10", "--format", "json"]);
    let b = charval(&["table", "M10", "--format", "json"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn exit_codes() {
    assert_eq!(charval(&["cd", "PSL(2,6)"]).status.code(), Some(2));
    assert_eq!(charval(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        charval(&["table", "S(3)", "--format", "xml"]).status.code(),
        Some(2)
    );
    assert_eq!(
        charval(&["verify", "--checks", "nope"]).status.code(),
        Some(2)
    );
    assert_eq!(
        charval(&["--budget", "10", "cv", "S(5)"]).status.code(),
        Some(3)
    );
}

#[test]
fn verify_runs_selected_checks() {
    let out = charval(&["verify", "--checks", "oracle-tables,lemma2", "--quiet"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("oracle-tables: PASS"));
    assert!(text.contains("lemma2: PASS"));
    assert!(text.ends_with("verdict: PASS\n"));
}

#[test]
fn verify_with_custom_catalog_and_budget_failure() {
    let dir = std::env::temp_dir().join(format!("charval-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("small.txt");
    std::fs::write(
        &path,
        "# tiny\nS(3) solvable-expected\nA(5) almost-simple\nC(5)\n",
    )
    .unwrap();
    let p = path.to_str().unwrap();

    let out = charval(&[
        "verify",
        "--catalog",
        p,
        "--checks",
        "lemma2,sakurai4,thmB,almost-simple,proof-ingredients",
    ]);
    assert!(out.status.success(), "{}", stdout(&out));

    // three entries cannot meet the coverage floor of ten groups with |cv| < 8
    let out = charval(&["verify", "--catalog", p, "--checks", "thmA"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("FAIL coverage"));

    let list = stdout(&charval(&["catalog-list", "--catalog", p, "--quiet"]));
    assert_eq!(list, "S(3)\nA(5)\nC(5)\n");

    assert_eq!(
        charval(&["--budget", "20", "verify", "--catalog", p])
            .status
            .code(),
        Some(3)
    );

    std::fs::write(&path, "S(3) shiny\n").unwrap();
    assert_eq!(charval(&["verify", "--catalog", p]).status.code(), Some(2));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn default_catalog_listing() {
    let text = stdout(&charval(&["catalog-list"]));
    assert!(text.lines().count() >= 40);
    assert!(text
        .lines()
        .any(|l| l.starts_with("perm:Q8:") && l.contains("order 8")));
    assert!(text
        .lines()
        .any(|l| l.starts_with("PSLExt(2,16;ff)") && l.contains("order 8160")));
}
