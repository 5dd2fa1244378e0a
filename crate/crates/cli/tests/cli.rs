use std::path::Path;
use std::process::{Command, Output};

fn gapset(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gapset"))
        .args(args)
        .env_remove("GAPSET_GENUS_CAP")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = gapset(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn fixture(name: &str) -> String {
    let path = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name);
    std::fs::read_to_string(path).unwrap()
}

#[test]
fn count_matches_published_fixture() {
    let args = [
        "count",
        "--max-genus",
        "14",
        "--max-multiplicity",
        "6",
        "--format",
        "csv",
    ];
    assert_eq!(stdout(&args), fixture("count_g14_m6.csv"));
    let args = [
        "count",
        "--max-genus",
        "14",
        "--multiplicity",
        "6",
        "--format",
        "csv",
    ];
    assert_eq!(stdout(&args), fixture("row_m6_g14.csv"));
}

#[test]
fn count_genus_zero() {
    assert_eq!(
        stdout(&["count", "--max-genus", "0", "--format", "csv"]),
        "genus,n_g,n_prime_g,m1\n0,1,1,1\n"
    );
}

#[test]
fn count_json_totals() {
    let json: serde_json::Value =
        serde_json::from_str(&stdout(&["count", "--max-genus", "15", "--format", "json"])).unwrap();
    let n_g: Vec<u64> = serde_json::from_value(json["n_g"].clone()).unwrap();
    assert_eq!(n_g.last(), Some(&2857));
    assert_eq!(json["rows"].as_array().unwrap().len(), 16);
}

#[test]
fn enumerate_listings() {
    assert_eq!(stdout(&["enumerate", "--genus", "1"]), "1\n");
    assert_eq!(stdout(&["enumerate", "--genus", "2"]), "1,2\n1,3\n");
    assert_eq!(
        stdout(&["enumerate", "--genus", "4", "--multiplicity", "4"])
            .lines()
            .count(),
        3
    );
    assert_eq!(
        stdout(&[
            "enumerate",
            "--genus",
            "5",
            "--multiplicity",
            "4",
            "--format",
            "csv"
        ]),
        fixture("enumerate_g5_m4.csv")
    );
    let json: serde_json::Value = serde_json::from_str(&stdout(&[
        "enumerate",
        "--genus",
        "7",
        "--multiplicity",
        "5",
        "--format",
        "json",
    ]))
    .unwrap();
    assert_eq!(json.as_array().unwrap().len(), 10);
}

#[test]
fn kunz_examples() {
    assert_eq!(stdout(&["kunz", "--gaps", "1,2,3,4,6,7,11"]), "(3,2,1,1)\n");
    assert_eq!(stdout(&["kunz", "--gaps", ""]), "()\n");
    assert_eq!(stdout(&["kunz", "--gaps", "1,2"]), "(1,1)\n");
    assert_eq!(
        stdout(&["kunz", "--gaps", "1,2", "--format", "csv"]),
        "m,k_1,k_2\n3,1,1\n"
    );
    let out = gapset(&["kunz", "--gaps", "1,3,4"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_commands_pass() {
    assert!(stdout(&["verify", "criterion", "--max-m", "2", "--max-sum", "5"]).ends_with("PASS\n"));
    assert!(
        stdout(&["verify", "criterion", "--max-m", "5", "--max-sum", "6"])
            .contains("0 discrepancies")
    );
    let text = stdout(&[
        "verify",
        "injection",
        "--multiplicity",
        "4",
        "--max-genus",
        "20",
    ]);
    assert_eq!(text.lines().count(), 21);
    assert!(text.lines().all(|l| l.ends_with("PASS")));
    assert_eq!(stdout(&["verify", "golden"]).matches("PASS").count(), 4);
}

#[test]
fn injection_json_shape() {
    let out = stdout(&[
        "verify",
        "injection",
        "--multiplicity",
        "3",
        "--max-genus",
        "7",
        "--format",
        "json",
    ]);
    let json: serde_json::Value = serde_json::from_str(&out).unwrap();
    let last = &json.as_array().unwrap()[7];
    assert_eq!(last["m"], 3);
    assert_eq!(last["g"], 7);
    assert_eq!(last["map"], "f_2");
    assert_eq!(last["domain"], 3);
    assert_eq!(last["image"], 3);
    assert_eq!(last["failures"].as_array().unwrap().len(), 0);
}

#[test]
fn output_does_not_depend_on_jobs() {
    for args in [
        &["count", "--max-genus", "15", "--format", "csv"][..],
        &[
            "verify",
            "criterion",
            "--max-m",
            "5",
            "--max-sum",
            "6",
            "--format",
            "json",
        ],
        &[
            "verify",
            "injection",
            "--multiplicity",
            "3",
            "--max-genus",
            "25",
            "--format",
            "json",
        ],
    ] {
        let one = stdout(&[args, &["--jobs", "1"]].concat());
        let three = stdout(&[args, &["--jobs", "3"]].concat());
        assert_eq!(one, three, "{args:?}");
    }
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("gapset-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("row.csv");
    let p = path.to_str().unwrap();
    let printed = stdout(&[
        "count",
        "--max-genus",
        "14",
        "--multiplicity",
        "6",
        "--format",
        "csv",
        "--out",
        p,
    ]);
    assert!(printed.is_empty());
    assert_eq!(
        std::fs::read_to_string(&path).unwrap(),
        fixture("row_m6_g14.csv")
    );
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn genus_cap_is_enforced() {
    let out = gapset(&["count", "--max-genus", "36"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cap 35"));

    let out = gapset(&["count", "--max-genus", "12", "--genus-cap", "10"]);
    assert_eq!(out.status.code(), Some(2));

    let out = Command::new(env!("CARGO_BIN_EXE_gapset"))
        .args(["enumerate", "--genus", "3"])
        .env("GAPSET_GENUS_CAP", "2")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));

    // the compact enumerator handles a lone row far beyond the default cap
    let out = Command::new(env!("CARGO_BIN_EXE_gapset"))
        .args([
            "count",
            "--max-genus",
            "40",
            "--multiplicity",
            "3",
            "--format",
            "csv",
        ])
        .env("GAPSET_GENUS_CAP", "40")
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(String::from_utf8(out.stdout).unwrap().ends_with("40,14\n"));
}

#[test]
fn bad_arguments() {
    assert_eq!(
        gapset(&[
            "verify",
            "injection",
            "--multiplicity",
            "5",
            "--max-genus",
            "3"
        ])
        .status
        .code(),
        Some(2)
    );
    assert_eq!(
        gapset(&["count", "--max-genus", "3", "--multiplicity", "0"])
            .status
            .code(),
        Some(2)
    );
    assert!(!gapset(&["count"]).status.success());
}
