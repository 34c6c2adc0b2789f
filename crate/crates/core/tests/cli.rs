use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn qcft(args: &[&str], out: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qcft"))
        .args(args)
        .arg("--out")
        .arg(out)
        .output()
        .expect("binary runs")
}

fn json(path: &Path) -> Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn inflate_reports_word_lengths() {
    let dir = tempfile::tempdir().unwrap();
    let out = qcft(&["inflate", "--tiling", "5,4", "--steps", "4"], dir.path());
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let report = json(&dir.path().join("inflate.json"));
    let lengths: Vec<u64> = report["lengths"].as_array().unwrap().iter().map(|v| v.as_u64().unwrap()).collect();
    assert_eq!(lengths, [5, 25, 95, 355, 1325]);
    assert_eq!(report["parents"].as_array().unwrap().len(), 4);
    let csv = std::fs::read_to_string(dir.path().join("inflate_counts.csv")).unwrap();
    assert!(csv.starts_with("# schema=1\nlayer,length,n_a,n_b,b_fraction\n"));
    assert!(csv.contains("\n4,1325,765,560,"));
}

#[test]
fn inflate_seed_only_and_flat_warning() {
    let dir = tempfile::tempdir().unwrap();
    let out = qcft(&["inflate", "--steps", "0", "--format", "json"], dir.path());
    assert!(out.status.success());
    assert_eq!(json(&dir.path().join("inflate.json"))["layers"], serde_json::json!(["aaaaa"]));

    let flat = qcft(&["inflate", "--tiling", "4,4", "--steps", "2", "--format", "json"], dir.path());
    assert!(flat.status.success());
    assert!(String::from_utf8_lossy(&flat.stderr).contains("non-hyperbolic"));
    let report = json(&dir.path().join("inflate.json"));
    assert_eq!(report["scale_factor"].as_f64().unwrap(), 1.0);
    assert_eq!(report["hyperbolic"], false);
}

#[test]
fn usage_errors_exit_with_one() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(qcft(&["inflate", "--tiling", "3,7"], dir.path()).status.code(), Some(1));
    assert_eq!(qcft(&["build", "--steps", "7"], dir.path()).status.code(), Some(1));
    assert_eq!(qcft(&["build", "--tiling", "five"], dir.path()).status.code(), Some(1));
    assert_eq!(qcft(&["contract", "--logical", "maybe"], dir.path()).status.code(), Some(1));
    assert_eq!(qcft(&["frobnicate"], dir.path()).status.code(), Some(1));
}

#[test]
fn contract_creates_missing_directories_and_svg() {
    let dir = tempfile::tempdir().unwrap();
    let nested = dir.path().join("a/b/c");
    let out = qcft(&["contract", "--steps", "1"], &nested);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let svg = std::fs::read_to_string(nested.join("contract.svg")).unwrap();
    // 11 pentagons: 55 sides = 2 * 15 interior + 25 boundary.
    assert!(svg.contains("tiles=11 edges=40"));
    assert_eq!(svg.matches("class=\"tile\"").count(), 11);
    assert_eq!(svg.matches("class=\"dimer\"").count(), 25);
    let state = json(&nested.join("state.json"));
    assert_eq!(state["state"]["dimers"].as_array().unwrap().len(), 25);
}

#[test]
fn single_pentagon_contract() {
    let dir = tempfile::tempdir().unwrap();
    assert!(qcft(&["contract", "--steps", "0"], dir.path()).status.success());
    let state = json(&dir.path().join("state.json"));
    let dimers: Vec<(u64, u64, i64)> = state["state"]["dimers"]
        .as_array()
        .unwrap()
        .iter()
        .map(|d| (d[0].as_u64().unwrap(), d[1].as_u64().unwrap(), d[2].as_i64().unwrap()))
        .collect();
    assert_eq!(dimers, (0..5).map(|j| (j, j + 5, -1)).collect::<Vec<_>>());
    let svg = std::fs::read_to_string(dir.path().join("contract.svg")).unwrap();
    assert_eq!(svg.matches("class=\"dimer\"").count(), 5);
}

#[test]
fn logical_file_and_anchor() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("logical.json");
    std::fs::write(&file, r#"{"0": 1, "3": 1}"#).unwrap();
    let arg = format!("file:{}", file.display());
    let a = qcft(&["contract", "--steps", "2", "--format", "json", "--logical", &arg], &dir.path().join("x"));
    assert!(a.status.success(), "{}", String::from_utf8_lossy(&a.stderr));
    let b = qcft(&["contract", "--steps", "2", "--format", "json", "--anchor", "19"], &dir.path().join("y"));
    assert!(b.status.success());
    let shifted = json(&dir.path().join("y/state.json"));
    let plain = {
        assert!(qcft(&["contract", "--steps", "2", "--format", "json"], &dir.path().join("z")).status.success());
        json(&dir.path().join("z/state.json"))
    };
    // A shift by L/5 sites is a symmetry of the all-zero state.
    assert_eq!(shifted["state"], plain["state"]);
    std::fs::write(&file, "[0, 2]").unwrap();
    assert_eq!(
        qcft(&["contract", "--steps", "1", "--logical", &arg], &dir.path().join("w")).status.code(),
        Some(1)
    );
}

#[test]
fn analyze_outputs_at_four_steps() {
    let dir = tempfile::tempdir().unwrap();
    let out = qcft(&["analyze", "--steps", "4", "--format", "json,csv"], dir.path());
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let fit = json(&dir.path().join("central_charge.json"));
    let c = fit["fit"]["c"].as_f64().unwrap();
    assert!((c - 4.7369).abs() / 4.7369 < 0.10);
    assert!(fit["c_max"]["c_max"].as_f64().unwrap() >= c);
    let rt = json(&dir.path().join("rt_report.json"));
    assert_eq!(rt["violations"].as_array().unwrap().len(), 0);
    assert_eq!(rt["regions_checked"], 10_000);

    let grid = std::fs::read_to_string(dir.path().join("fidelity_grid.csv")).unwrap();
    let rows: Vec<Vec<&str>> = grid.lines().skip(2).map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 3);
    for row in &rows {
        for d in [0, 265, 530, 795, 1060] {
            assert_eq!(row[d + 1], "1", "window {} offset {d}", row[0]);
        }
    }
    let entropy = std::fs::read_to_string(dir.path().join("entropy_profile.csv")).unwrap();
    assert!(entropy.lines().nth(1).unwrap().starts_with("ell,mean_S_nats"));
    assert_eq!(entropy.lines().count(), 2 + 1324);
}

#[test]
fn outputs_are_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (dir.path().join("a"), dir.path().join("b"));
    for d in [&a, &b] {
        assert!(qcft(&["report", "--steps", "2"], d).status.success());
    }
    let mut names: Vec<_> = std::fs::read_dir(&a).unwrap().map(|e| e.unwrap().file_name()).collect();
    names.sort();
    assert!(names.len() >= 15);
    for name in names {
        assert_eq!(std::fs::read(a.join(&name)).unwrap(), std::fs::read(b.join(&name)).unwrap(), "{name:?}");
    }
}

#[test]
fn render_writes_disk_and_plots() {
    let dir = tempfile::tempdir().unwrap();
    assert!(qcft(&["render", "--steps", "2"], dir.path()).status.success());
    for f in ["disk.svg", "entropy.svg", "histogram.svg", "fidelity.svg"] {
        let text = std::fs::read_to_string(dir.path().join(f)).unwrap();
        assert!(text.starts_with("<svg") && text.trim_end().ends_with("</svg>"), "{f}");
    }
}
