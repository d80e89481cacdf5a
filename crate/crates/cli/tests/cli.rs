use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_affine-chars"))
        .args(args)
        .env_remove("AFFINE_CHARS_FORMAT")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json_tail(o: &Output) -> serde_json::Value {
    let text = stdout(o);
    let start = text.find(['[', '{']).expect("json present");
    serde_json::from_str(&text[start..]).unwrap()
}

fn chi(o: &Output) -> Vec<String> {
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    v["chi"]["coeffs"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c.as_str().unwrap().to_owned())
        .collect()
}

fn strs(xs: &[i64]) -> Vec<String> {
    xs.iter().map(ToString::to_string).collect()
}

#[test]
fn permweights_vacuum_list() {
    let o = run(&[
        "permweights",
        "--rank",
        "4",
        "--level",
        "0",
        "--labels",
        "0,0,0,0",
        "--max-depth",
        "8",
    ]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("(0,0,0,0)_0 (1,0,0,1)_1"));
    assert_eq!(json_tail(&o).as_array().unwrap().len(), 32);
}

#[test]
fn permweights_basic_list_both_methods() {
    for method in ["translation", "lemma"] {
        let o = run(&[
            "permweights",
            "--rank",
            "4",
            "--level",
            "1",
            "--labels",
            "0,0,0,0",
            "--max-depth",
            "8",
            "--method",
            method,
        ]);
        assert!(o.status.success());
        let records = json_tail(&o);
        assert_eq!(records.as_array().unwrap().len(), 23, "{method}");
        assert_eq!(records[1]["labels"], serde_json::json!([2, 0, 0, 2]));
        assert_eq!(records[1]["depth"], 2);
    }
}

#[test]
fn permweights_depth_zero() {
    let o = run(&[
        "permweights",
        "--rank",
        "4",
        "--level",
        "0",
        "--labels",
        "0,0,0,0",
        "--max-depth",
        "0",
    ]);
    assert_eq!(stdout(&o).lines().next(), Some("(0,0,0,0)_0"));
    assert_eq!(json_tail(&o).as_array().unwrap().len(), 1);
}

#[test]
fn character_basic_a4() {
    let seven = run(&[
        "character",
        "--rank",
        "4",
        "--level",
        "1",
        "--labels",
        "0,0,0,0",
        "--max-depth",
        "7",
    ]);
    assert!(seven.status.success());
    assert_eq!(
        chi(&seven),
        strs(&[1, 24, 124, 500, 1625, 4752, 12524, 31000])
    );
    let two = run(&[
        "character",
        "--rank",
        "4",
        "--level",
        "1",
        "--labels",
        "0,0,0,0",
        "--max-depth",
        "2",
    ]);
    assert_eq!(chi(&two), strs(&[1, 24, 124]));
    let trivial = run(&[
        "character",
        "--rank",
        "2",
        "--level",
        "1",
        "--labels",
        "0,0",
        "--max-depth",
        "0",
    ]);
    assert_eq!(chi(&trivial), strs(&[1]));
}

#[test]
fn character_json_shape() {
    let o = run(&[
        "character",
        "--rank",
        "1",
        "--level",
        "1",
        "--labels",
        "1",
        "--max-depth",
        "1",
    ]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["algebra"], "A1(1)");
    assert_eq!(v["weight"]["k"], 1);
    assert_eq!(v["M"], 1);
    assert_eq!(v["anomaly"], "1/8");
    for key in ["numerator", "denominator"] {
        assert!(v[key]["coeffs"].is_array(), "{key}");
    }
}

#[test]
fn csv_format_from_flag_and_env() {
    let args = ["character", "--rank", "4", "--max-depth", "2"];
    let o = run(&[&args[..], &["--format", "csv"]].concat());
    assert_eq!(stdout(&o), "order,value\n0,1\n1,24\n2,124\n");
    let env = Command::new(env!("CARGO_BIN_EXE_affine-chars"))
        .args(args)
        .env("AFFINE_CHARS_FORMAT", "csv")
        .output()
        .unwrap();
    assert_eq!(env.stdout, o.stdout);
}

#[test]
fn oracle_stops_at_guaranteed_order() {
    let o = run(&["oracle", "--rank", "4", "--level", "1", "--shells", "2"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["guaranteed_order"], 7);
    assert_eq!(chi(&o), strs(&[1, 24, 124, 500, 1625, 4752, 12524, 31000]));
}

#[test]
fn theta_reports_shells() {
    let o = run(&[
        "theta",
        "--rank",
        "4",
        "--level",
        "0",
        "--shells",
        "1",
        "--max-depth",
        "9",
    ]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["theta"]["coeffs"][1], "20");
    assert_eq!(v["t_polynomials"][0]["shell"], 1);
    assert_eq!(v["t_polynomials"][0]["series"]["coeffs"][9], "10976");
}

#[test]
fn compare_passes() {
    let a4 = run(&[
        "compare",
        "--rank",
        "4",
        "--level",
        "1",
        "--labels",
        "0,0,0,0",
        "--max-depth",
        "8",
        "--shells",
        "2",
    ]);
    assert_eq!(a4.status.code(), Some(0), "{}", stdout(&a4));
    let table = stdout(&a4);
    let row8 = table
        .lines()
        .find(|l| l.trim_start().starts_with("8 "))
        .unwrap();
    assert!(row8.contains(" - ") && row8.ends_with("PASS"), "{row8}");
    let a2 = run(&[
        "compare",
        "--rank",
        "2",
        "--level",
        "1",
        "--labels",
        "0,0",
        "--max-depth",
        "5",
        "--shells",
        "2",
    ]);
    assert_eq!(a2.status.code(), Some(0), "{}", stdout(&a2));
}

#[test]
fn compare_rejects_corrupted_fixture() {
    let dir = std::env::temp_dir().join(format!("affine-chars-fixture-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.json");
    std::fs::write(
        &path,
        r#"{"trunc":8,"coeffs":["1","24","124","500","1626","4752","12524","31000","72250"]}"#,
    )
    .unwrap();
    let o = run(&[
        "compare",
        "--rank",
        "4",
        "--max-depth",
        "8",
        "--fixture",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("first mismatch at q^4"));
    assert!(String::from_utf8_lossy(&o.stderr).contains("q^4"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn invalid_weights_exit_2() {
    for args in [
        &[
            "character",
            "--rank",
            "4",
            "--level",
            "1",
            "--labels",
            "0,1,0,0",
        ][..],
        &["character", "--rank", "4", "--labels", "0,0,0"],
        &[
            "permweights",
            "--rank",
            "3",
            "--level",
            "2",
            "--labels",
            "-1,0,0",
        ],
        &[
            "character",
            "--rank",
            "4",
            "--max-depth",
            "3",
            "--truncate",
            "5",
        ],
        &["character", "--rank", "0"],
    ] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn output_file_and_determinism() {
    let dir = std::env::temp_dir().join(format!("affine-chars-out-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("chi.json");
    let args = [
        "character",
        "--rank",
        "3",
        "--level",
        "2",
        "--labels",
        "1,0,0",
        "--max-depth",
        "6",
    ];
    let o = run(&[&args[..], &["--out", path.to_str().unwrap()]].concat());
    assert!(o.status.success() && o.stdout.is_empty());
    assert_eq!(std::fs::read(&path).unwrap(), run(&args).stdout);
    std::fs::remove_dir_all(&dir).unwrap();
}
