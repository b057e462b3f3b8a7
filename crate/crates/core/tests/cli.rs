use std::io::Write;
use std::process::{Command, Output};

fn umbral(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_umbral"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn laguerre_json_matches_library() {
    let o = umbral(&["laguerre", "--n", "3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let psi = umbral::psi::PsiSequence::qgauss(16);
    for n in 0..=3 {
        let p = umbral::ops::laguerre::q_laguerre_closed(&psi, n).unwrap();
        assert_eq!(v["polys"][n], serde_json::json!(p.coeff_strings()));
    }
}

#[test]
fn nogo_witness_exits_zero() {
    let o = umbral(&["nogo", "--psi", "fibonacci", "--n", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("verdict: WITNESS"));
    let o = umbral(&["nogo", "--psi", "qgauss", "--n", "5", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("\"verdict\": \"PASS\""));
}

#[test]
fn usage_errors_exit_two() {
    let o = umbral(&["table", "--psi", "lucas"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    for name in ["classic", "qgauss", "fibonacci", "square"] {
        assert!(err.contains(name), "{err}");
    }
    assert_eq!(umbral(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(umbral(&["spin", "--j", "1/3"]).status.code(), Some(2));
    assert_eq!(
        umbral(&["spin", "--j", "1", "--q", "1"]).status.code(),
        Some(2)
    );
    assert_eq!(
        umbral(&["sheffer", "--s", "laguerre"]).status.code(),
        Some(2)
    );
}

#[test]
fn custom_psi_file() {
    let dir = std::env::temp_dir().join(format!("umbral_cli_{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let good = dir.join("halves.json");
    std::fs::File::create(&good)
        .unwrap()
        .write_all(br#"["1", "1/2", "1/8", "1/64"]"#)
        .unwrap();
    let o = umbral(&[
        "table",
        "--psi",
        good.to_str().unwrap(),
        "--N",
        "3",
        "--format",
        "csv",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("3,1/64,8,64"), "{}", stdout(&o));

    let bad = dir.join("bad.json");
    std::fs::File::create(&bad)
        .unwrap()
        .write_all(br#"["1", "0"]"#)
        .unwrap();
    assert_eq!(
        umbral(&["table", "--psi", bad.to_str().unwrap(), "--N", "1"])
            .status
            .code(),
        Some(2)
    );
    let garbled = dir.join("garbled.json");
    std::fs::File::create(&garbled)
        .unwrap()
        .write_all(b"{not json")
        .unwrap();
    assert_eq!(
        umbral(&["table", "--psi", garbled.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn spin_report_schema() {
    let o = umbral(&["spin", "--j", "1", "--q", "1.5", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let reports = v["reports"].as_array().unwrap();
    assert_eq!(reports.len(), 2);
    for r in reports {
        for key in ["check", "params", "residuals", "convention", "pass"] {
            assert!(r.get(key).is_some(), "missing {key}");
        }
    }
    // √([1][2]) with [2]_q = q + 1/q
    let expect = (1.5f64 + 1.0 / 1.5).sqrt();
    assert!((v["matrices"]["Jplus"][0][1][0].as_f64().unwrap() - expect).abs() < 1e-14);
}

#[test]
fn spin_polar_skipped_when_not_psd() {
    let o = umbral(&["spin", "--j", "6", "--q", "0.5,0.8660254037844386"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("polar_decomposition: SKIPPED"));
    let o = umbral(&[
        "spin",
        "--j",
        "6",
        "--q",
        "0.5,0.8660254037844386",
        "--check",
        "polar",
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn weyl_text_flags_printed_diagonal() {
    let o = umbral(&["weyl", "--n", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("weyl_pair: PASS"));
    assert!(s.contains("printed zero diagonal of P deviates"));
}

#[test]
fn tolerance_can_fail_a_check() {
    // rounding residuals exceed a zero tolerance
    let o = umbral(&["weyl", "--n", "3", "--tolerance", "0"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(umbral(&["weyl", "--tolerance=-1"]).status.code(), Some(2));
    assert_eq!(
        umbral(&["spin", "--j", "1", "--tolerance", "NaN"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn csv_quotes_fields_with_commas() {
    let o = umbral(&["verify", "--suite", "nogo", "--N", "4", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.starts_with("suite,cell,status,detail\n"));
    assert!(s.contains("\"identity to n = 4; exact\"") || s.contains("identity to n = 4; exact"));
}
