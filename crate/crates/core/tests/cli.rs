use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

const TERNARY: &str = "examples/ternary.json";

fn csbf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_csbf"))
        .args(args)
        .env_remove("CSBF_TOLERANCE")
        .output()
        .unwrap()
}

fn json(out: &Output) -> Value {
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

fn masses(block: &Value) -> Vec<(String, f64)> {
    block["masses"]
        .as_object()
        .unwrap()
        .iter()
        .map(|(k, v)| (k.clone(), v.as_f64().unwrap()))
        .collect()
}

fn collect_blocks<'a>(v: &'a Value, out: &mut Vec<&'a Value>) {
    match v {
        Value::Object(map) => {
            if map.contains_key("admissible") {
                out.push(v);
            }
            map.values().for_each(|c| collect_blocks(c, out));
        }
        Value::Array(items) => items.iter().for_each(|c| collect_blocks(c, out)),
        _ => {}
    }
}

#[test]
fn global_l1_mass_on_the_running_example() {
    let doc = json(&csbf(&[
        "approximate",
        TERNARY,
        "--norm",
        "l1",
        "--space",
        "mass",
        "--global",
    ]));
    let r = &doc["result"];
    assert_eq!(r["optima"], serde_json::json!(["y"]));
    let got = masses(&r["solutions"][0]["approximation"]);
    let want = [("y", 0.1), ("x,y", 0.4), ("y,z", 0.3), ("x,y,z", 0.2)];
    assert_eq!(got.len(), want.len());
    for ((k, v), (wk, wv)) in got.iter().zip(want) {
        assert_eq!(k, wk);
        assert!((v - wv).abs() < 1e-12);
    }
}

#[test]
fn l2_belief_focus_x_is_the_focused_transform() {
    let doc = json(&csbf(&[
        "approximate",
        TERNARY,
        "--norm",
        "l2",
        "--space",
        "belief",
        "--focus",
        "x",
    ]));
    let got = masses(&doc["result"]["solutions"][0]["approximation"]);
    let want = [("x", 0.2), ("x,y", 0.5), ("x,z", 0.0), ("x,y,z", 0.3)];
    for ((k, v), (wk, wv)) in got.iter().zip(want) {
        assert_eq!(k, wk);
        assert!((v - wv).abs() < 1e-12);
    }
}

#[test]
fn linf_mass_focus_x_interval_table() {
    let doc = json(&csbf(&[
        "approximate",
        TERNARY,
        "--norm",
        "linf",
        "--space",
        "mass",
        "--focus",
        "x",
        "--vertices",
    ]));
    let sol = &doc["result"]["solutions"][0];
    assert_eq!(sol["type"], "mass_box");
    let rows: Vec<(String, f64, f64)> = sol["intervals"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| {
            (
                r["subset"].as_str().unwrap().into(),
                r["lower"].as_f64().unwrap(),
                r["upper"].as_f64().unwrap(),
            )
        })
        .collect();
    let want = [("x", -0.1, 0.5), ("x,y", 0.1, 0.7), ("x,z", -0.3, 0.3)];
    for ((k, lo, hi), (wk, wlo, whi)) in rows.iter().zip(want) {
        assert_eq!(k, wk);
        assert!((lo - wlo).abs() < 1e-12 && (hi - whi).abs() < 1e-12);
    }
    assert_eq!(sol["vertices"].as_array().unwrap().len(), 8);
    assert_eq!(sol["admissible_strict_subset"], true);
}

#[test]
fn mass_blocks_sum_to_one_and_flag_negative_entries() {
    let runs: &[&[&str]] = &[
        &[
            "--norm",
            "linf",
            "--space",
            "mass",
            "--global",
            "--vertices",
        ],
        &[
            "--norm",
            "linf",
            "--space",
            "belief",
            "--global",
            "--vertices",
        ],
        &["--norm", "l2", "--space", "mass", "--rep", "n1", "--global"],
        &["--norm", "l1", "--space", "belief", "--global"],
    ];
    let mut saw_inadmissible = false;
    for flags in runs {
        let mut args = vec!["approximate", TERNARY];
        args.extend_from_slice(flags);
        let doc = json(&csbf(&args));
        let mut blocks = Vec::new();
        collect_blocks(&doc["result"], &mut blocks);
        assert!(!blocks.is_empty());
        for b in blocks {
            let entries = masses(b);
            let sum: f64 = entries.iter().map(|(_, v)| v).sum();
            assert!((sum - 1.0).abs() < 1e-9, "{flags:?}: {sum}");
            let negative = entries.iter().any(|(_, v)| *v < -1e-9);
            assert_eq!(b["admissible"].as_bool().unwrap(), !negative);
            saw_inadmissible |= negative;
        }
    }
    assert!(saw_inadmissible);
}

#[test]
fn output_is_byte_stable_and_parses_back() {
    let args = [
        "approximate",
        TERNARY,
        "--norm",
        "linf",
        "--space",
        "belief",
        "--global",
        "--vertices",
    ];
    let a = csbf(&args);
    let b = csbf(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);

    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("out.json");
    let written = csbf(&[
        "approximate",
        TERNARY,
        "--norm",
        "l1",
        "--space",
        "mass",
        "--global",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert!(written.status.success() && written.stdout.is_empty());
    let again = json(&csbf(&["inspect", out.to_str().unwrap()]));
    let direct = json(&csbf(&["inspect", TERNARY]));
    assert_eq!(again, direct);
}

#[test]
fn keys_are_normalized() {
    let doc = json(&csbf(&["inspect", "tests/fixtures/unordered_keys.json"]));
    let keys: Vec<&String> = doc["input"]["masses"].as_object().unwrap().keys().collect();
    assert_eq!(keys, ["x", "y", "x,y", "y,z"]);
}

#[test]
fn inspect_reports_consistency() {
    let doc = json(&csbf(&["inspect", TERNARY]));
    let r = &doc["result"];
    assert_eq!(r["consistent"], false);
    assert_eq!(r["core"], serde_json::json!([]));
    assert_eq!(
        r["contour"],
        serde_json::json!({"x": 0.6, "y": 0.8, "z": 0.3})
    );

    let doc = json(&csbf(&["inspect", "tests/fixtures/vacuous.json"]));
    assert_eq!(doc["result"]["consistent"], true);
    assert_eq!(doc["result"]["core"], serde_json::json!(["x", "y", "z"]));
}

#[test]
fn almost_normalized_input_is_renormalized_with_warning() {
    let out = csbf(&["inspect", "tests/fixtures/almost_normalized.json"]);
    let doc = json(&out);
    assert_eq!(doc["warnings"].as_array().unwrap().len(), 1);
    assert!(String::from_utf8_lossy(&out.stderr).contains("renormalized"));
    let sum: f64 = masses(&doc["input"]).iter().map(|(_, v)| v).sum();
    assert!((sum - 1.0).abs() < 1e-9);
    let dir = tempfile::tempdir().unwrap();
    let echo = dir.path().join("echo.json");
    std::fs::write(&echo, &out.stdout).unwrap();
    let again = json(&csbf(&["inspect", echo.to_str().unwrap()]));
    assert!(again.get("warnings").is_none());
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let broken = dir.path().join("broken.json");
    std::fs::write(&broken, "{\"frame\": [\"x\"], \"masses\": {\"x\": 0.5}}").unwrap();
    let broken = broken.to_str().unwrap();
    let code = |args: &[&str]| csbf(args).status.code().unwrap();

    assert_eq!(code(&["inspect", broken]), 2);
    assert_eq!(code(&["inspect", "does/not/exist.json"]), 2);
    assert_eq!(
        code(&[
            "approximate",
            TERNARY,
            "--norm",
            "l1",
            "--space",
            "mass",
            "--rep",
            "n1",
            "--global"
        ]),
        3
    );
    assert_eq!(
        code(&[
            "approximate",
            TERNARY,
            "--norm",
            "l2",
            "--space",
            "mass",
            "--global"
        ]),
        3
    );
    assert_eq!(
        code(&[
            "approximate",
            TERNARY,
            "--norm",
            "l2",
            "--space",
            "belief",
            "--rep",
            "n2",
            "--global"
        ]),
        3
    );
    assert_eq!(
        code(&["approximate", TERNARY, "--norm", "l1", "--space", "mass"]),
        3
    );
    assert_eq!(
        code(&[
            "approximate",
            TERNARY,
            "--norm",
            "l1",
            "--space",
            "mass",
            "--focus",
            "x",
            "--global"
        ]),
        3
    );
    assert_eq!(
        code(&[
            "approximate",
            TERNARY,
            "--norm",
            "l1",
            "--space",
            "mass",
            "--focus",
            "w"
        ]),
        4
    );

    let five = csbf(&["verify", "tests/fixtures/five_elements.json"]);
    assert_eq!(five.status.code(), Some(5));
    assert!(String::from_utf8_lossy(&five.stderr).contains("at most 4"));
}

#[test]
fn tolerance_override() {
    let run = |tol: &str| {
        Command::new(env!("CARGO_BIN_EXE_csbf"))
            .args([
                "approximate",
                TERNARY,
                "--norm",
                "linf",
                "--space",
                "mass",
                "--global",
            ])
            .env("CSBF_TOLERANCE", tol)
            .output()
            .unwrap()
    };
    assert_eq!(run("nope").status.code(), Some(3));
    // Criterion values are (0.3, 0.2, 0.4): a wide tolerance admits x as well.
    let doc = json(&run("0.15"));
    assert_eq!(doc["result"]["optima"], serde_json::json!(["x", "y"]));
}

#[test]
fn verify_passes_on_the_running_example() {
    let out = csbf(&["verify", TERNARY]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let doc = json(&out);
    assert_eq!(doc["result"]["passed"], true);
    assert_eq!(doc["result"]["checks"].as_array().unwrap().len(), 7);
}

#[test]
fn near_tie_lists_both_optima() {
    assert!(Path::new("tests/fixtures/near_tie.json").exists());
    let doc = json(&csbf(&[
        "approximate",
        "tests/fixtures/near_tie.json",
        "--norm",
        "linf",
        "--space",
        "belief",
        "--global",
    ]));
    assert_eq!(doc["result"]["optima"], serde_json::json!(["x", "y"]));
    let doc = json(&csbf(&[
        "approximate",
        "tests/fixtures/near_tie.json",
        "--norm",
        "l1",
        "--space",
        "mass",
        "--global",
    ]));
    assert_eq!(doc["result"]["optima"], serde_json::json!(["x", "y"]));
    assert_eq!(doc["result"]["solutions"].as_array().unwrap().len(), 2);

    let out = csbf(&["verify", "tests/fixtures/near_tie.json", "--seed", "3"]);
    let doc = json(&out);
    let checks = doc["result"]["checks"].as_array().unwrap();
    let linf_belief = checks
        .iter()
        .find(|c| c["norm"] == "linf" && c["space"] == "belief")
        .unwrap();
    assert_eq!(linf_belief["library_optima"], serde_json::json!(["x", "y"]));
    assert_eq!(linf_belief["oracle_optima"], serde_json::json!(["x", "y"]));
}
