//! End-to-end command-line behavior.

use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_twistspace"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("spawn twistspace")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn phase_space_latex_contains_printed_style_row() {
    let out = stdout(&[
        "phase-space",
        "--carrier",
        "rotation-gamma",
        "--k",
        "1",
        "--l",
        "2",
        "--gamma",
        "3",
        "--format",
        "latex",
    ]);
    assert!(
        out.contains("[x_1, x_3] = (i/\\xi) x_2"),
        "missing row in:\n{out}"
    );
    assert!(
        out.contains("\\cos\\left(\\frac{p_3}{2\\xi}\\right)"),
        "missing cosine in:\n{out}"
    );
}

#[test]
fn boost_json_has_hyperbolic_closed_form() {
    let out = stdout(&["phase-space", "--carrier", "boost", "--format", "json"]);
    assert!(
        out.contains("\"closed_form\": \"-i*cosh(s*p2)\""),
        "missing closed form in:\n{out}"
    );
    assert!(out.contains("\"lhs\": [\"x0\", \"p0\"]"));
}

#[test]
fn order_zero_is_canonical() {
    let out = stdout(&["phase-space", "--order", "0", "--format", "text"]);
    assert!(out.contains("[x0, p0] = -i"));
    assert!(out.contains("[x1, p1] = i\n"));
    assert!(!out.contains("cos"));
}

#[test]
fn identical_configs_are_byte_identical() {
    for args in [
        vec!["phase-space", "--carrier", "boost", "--format", "json"],
        vec!["contract", "--carrier", "rotation-zero", "--format", "json"],
        vec!["uncertainty", "--format", "json"],
        vec![
            "verify", "--tables", "--jacobi", "--order", "4", "--format", "json",
        ],
        vec!["coproducts", "--order", "3", "--format", "json"],
    ] {
        let a = run(&args);
        let b = run(&args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn structured_output_roundtrips() {
    for args in [
        ["phase-space", "--carrier", "rotation-gamma"],
        ["phase-space", "--carrier", "boost"],
        ["contract", "--carrier", "rotation-zero"],
        ["contract", "--carrier", "boost"],
    ] {
        let json = stdout(&[args[0], args[1], args[2], "--format", "json"]);
        let parsed = twistspace::emit::table_from_json(&json).expect("parse emitted table");
        let emitted = twistspace::emit::table_to_json(&parsed, None);
        let reparsed = twistspace::emit::table_from_json(&emitted).unwrap();
        assert_eq!(parsed.entries.len(), 28);
        for (k, e) in parsed.entries.iter() {
            assert_eq!(e.series, reparsed.entries[k].series, "{args:?} {k:?}");
        }
    }
}

#[test]
fn exit_codes() {
    // Invalid carrier indices: usage error 2.
    let out = run(&["phase-space", "--carrier", "rotation-gamma", "--gamma", "1"]);
    assert_eq!(out.status.code(), Some(2));
    // Unknown flag value: usage error 2.
    let out = run(&["phase-space", "--format", "yaml"]);
    assert_eq!(out.status.code(), Some(2));
    // Clap-level usage error.
    let out = run(&["no-such-command"]);
    assert_eq!(out.status.code(), Some(2));
    // Successful verify: 0.
    let out = run(&["verify", "--jacobi", "--carrier", "boost", "--order", "3"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn verify_order_zero_is_trivially_green() {
    let out = stdout(&["verify", "--all", "--order", "0"]);
    assert!(out.contains("overall: PASS"), "{out}");
}

#[test]
fn verify_all_passes_and_reports() {
    let out = stdout(&["verify", "--all", "--order", "4"]);
    assert!(out.contains("overall: PASS"), "{out}");
    for check in [
        "coproducts",
        "hopf",
        "tables",
        "jacobi",
        "contraction",
        "bounds",
        "numeric",
    ] {
        assert!(out.contains(check), "missing {check} in:\n{out}");
    }
    assert!(out.contains("sign-flip"));
    assert!(!out.contains("FAIL"));
}

#[test]
fn config_file_supplies_defaults() {
    let dir = std::env::temp_dir().join("twistspace-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let cfg_path = dir.join("config.json");
    std::fs::write(
        &cfg_path,
        "{\"carrier\": \"boost\", \"k\": 1, \"l\": 3, \"order\": 4, \"format\": \"json\"}",
    )
    .unwrap();
    let with_config = stdout(&["phase-space", "--config", cfg_path.to_str().unwrap()]);
    let explicit = stdout(&[
        "phase-space",
        "--carrier",
        "boost",
        "--k",
        "1",
        "--l",
        "3",
        "--order",
        "4",
        "--format",
        "json",
    ]);
    assert_eq!(with_config, explicit);
    // Explicit flags override the config.
    let overridden = stdout(&[
        "phase-space",
        "--config",
        cfg_path.to_str().unwrap(),
        "--format",
        "text",
    ]);
    assert!(overridden.starts_with("phase space"));
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join("twistspace-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("table.json");
    let _ = stdout(&[
        "phase-space",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    let content = std::fs::read_to_string(&path).unwrap();
    assert!(content.contains("\"relations\""));
}
