use std::path::PathBuf;
use std::process::{Command, Output};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

use ruukin::algebra::DumpFile;
use ruukin::model::Design;
use ruukin::printed;
use ruukin::singularity::{input_singular_configuration, SingularityModel};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../data")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ruukin"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn pars() -> String {
    data("pars.json").display().to_string()
}

fn pars2() -> String {
    data("pars2.json").display().to_string()
}

fn tmp(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("ruukin-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn ik_prints_both_roots() {
    let out = run(&["ik", "--design", &pars(), "--pose", "0,0,2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let s = 14f64.sqrt();
    for limb in v["limbs"].as_array().unwrap() {
        let roots: Vec<f64> = limb["roots"]
            .as_array()
            .unwrap()
            .iter()
            .map(|r| r.as_f64().unwrap())
            .collect();
        assert_eq!(roots.len(), 2);
        assert!((roots[0] - (3.0 - s)).abs() < 1e-12);
        assert!((roots[1] - (3.0 + s)).abs() < 1e-12);
        assert_eq!(limb["tag"], "regular");
    }
    assert_eq!(v["solutions"], 8);
    assert_eq!(v["design"]["a1"], "3");
}

#[test]
fn output_is_deterministic() {
    let args = [
        "fk",
        "--design",
        &pars(),
        "--inputs",
        "-0.7416573867739413,1,2",
    ];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.stdout, b.stdout);
    assert!(!a.stdout.is_empty());
}

#[test]
fn fk_reports_the_fixed_input_degeneration() {
    let out = run(&["fk", "--design", &pars2(), "--inputs", "-0.5,-0.5,-0.5"]);
    assert_eq!(out.status.code(), Some(3));
    let v = json(&out);
    let d = &v["degeneration"];
    assert_eq!(d["kind"], "self-motion-sphere");
    assert_eq!(d["self_motion_circle"]["radius_sq"], "7/4");
    assert_eq!(d["radius_sq"].as_f64(), Some(4.0));
    assert!(v["points"].as_array().unwrap().is_empty());
}

#[test]
fn fk_csv_lists_sorted_points() {
    let out = run(&[
        "fk",
        "--design",
        &pars(),
        "--inputs",
        "0,0,0",
        "--format",
        "csv",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert!(lines[0].starts_with("# design=a1=3 a3=5 r0=11 r1=7"));
    assert_eq!(&lines[1..], ["y1,y2,y3", "0,0,-3", "0,0,0"]);
}

#[test]
fn classify_flags_a_torus_configuration() {
    let model = SingularityModel::new(&Design::pars()).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let c = input_singular_configuration(&model, 1, &mut rng).unwrap();
    let text = |v: [f64; 3]| v.map(|x| format!("{x:?}")).join(",");
    let out = run(&[
        "classify",
        "--design",
        &pars(),
        "--pose",
        &text(c.y),
        "--inputs",
        &text(c.t),
    ]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let v = json(&out);
    assert_eq!(v["input_singular"], serde_json::json!([1]));
    assert_eq!(v["singular"], true);
}

#[test]
fn classify_rejects_points_off_the_variety() {
    let out = run(&[
        "classify",
        "--design",
        &pars(),
        "--pose",
        "0,0,2",
        "--inputs",
        "1,1,1",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("translational system"));
}

#[test]
fn constraints_dump_matches_printed_system() {
    let path = tmp("pars.dump");
    let out = run(&[
        "constraints",
        "--design",
        &pars(),
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let file = DumpFile::parse(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let design = Design::pars();
    assert_eq!(
        file.get("wt.g2").unwrap(),
        &design.apply(&printed::poly(printed::WT_G2))
    );
    for name in ["g1", "g8", "g12", "g34", "g56"] {
        assert!(file.get(name).is_some(), "{name}");
    }
}

#[test]
fn constraints_dump_round_trips() {
    let out = run(&["constraints", "--design", &pars2()]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let file = DumpFile::parse(&text).unwrap();
    assert_eq!(file.write(), text);
}

#[test]
fn workspace_cache_is_reused() {
    let dir = tmp("cache");
    let args = [
        "constraints",
        "--design",
        &pars2(),
        "--cache",
        dir.to_str().unwrap(),
    ];
    let first = run(&args);
    let cached: Vec<_> = std::fs::read_dir(&dir).unwrap().collect();
    assert_eq!(cached.len(), 1);
    let second = run(&args);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn malformed_design_is_an_error() {
    let path = tmp("bad.json");
    std::fs::write(&path, r#"{"a1": 3, "a3": 5, "r0": 0, "r1": 7}"#).unwrap();
    let out = run(&["constraints", "--design", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("r0"));
}

#[test]
fn usage_errors_exit_with_one() {
    for args in [
        vec!["ik", "--pose", "1,2"],
        vec!["surface", "joint-input", "--grid", "0:1:1"],
        vec!["surface", "no-such-surface", "--grid", "0:1:2"],
        vec!["constraints", "--format", "csv"],
        vec!["ik", "--pose", "0,0,2", "--tol", "-1"],
    ] {
        assert_eq!(run(&args).status.code(), Some(1), "{args:?}");
    }
}

fn surface_rows(text: &str) -> Vec<Vec<f64>> {
    text.lines()
        .skip(2)
        .map(|l| l.split(',').map(|x| x.parse().unwrap()).collect())
        .collect()
}

#[test]
fn torus_surface_passes_through_the_degenerate_points() {
    let out = run(&[
        "surface",
        "input-torus",
        "--design",
        &pars(),
        "--grid=-10:10:50",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("# design=a1=3 a3=5 r0=11 r1=7; surface=input-torus limb=1\n"));
    let rows = surface_rows(&text);
    assert_eq!(rows.len(), 50 * 50 * 50);
    let step = 20.0 / 49.0;
    for target in [[-2.0f64, 2.0, 0.0], [-2.0, -2.0, 0.0]] {
        // some corner of the grid cell holding the point is flagged
        let lo: [usize; 3] = std::array::from_fn(|d| ((target[d] + 10.0) / step).floor() as usize);
        let flagged = (0..8).any(|k| {
            let idx: [usize; 3] = std::array::from_fn(|d| lo[d] + ((k >> d) & 1));
            rows[idx[0] * 2500 + idx[1] * 50 + idx[2]][5] == 1.0
        });
        assert!(flagged, "{target:?}");
    }
}

#[test]
fn joint_surfaces_have_printed_constant_terms() {
    for (which, c) in [("joint-input", 32.0), ("joint-output", 144.0)] {
        let out = run(&["surface", which, "--grid=-3:3:3"]);
        let rows = surface_rows(&String::from_utf8(out.stdout).unwrap());
        let origin = rows.iter().find(|r| r[..3] == [0.0, 0.0, 0.0]).unwrap();
        assert_eq!(origin[3], c);
    }
}

#[test]
fn selfmotion_reports_exact_values() {
    let v = json(&run(&["selfmotion", "--design", &pars2()]));
    assert_eq!(v["self_motion"]["radius_sq"], "7/4");
    assert_eq!(
        v["self_motion"]["inputs"]["exact"],
        serde_json::json!(["-2", "-1/2"])
    );
    let v = json(&run(&["selfmotion", "--design", &pars()]));
    assert_eq!(v["self_motion"]["radius_sq"], "8");
    assert_eq!(v["self_motion"]["complex_inputs"], true);
}

#[test]
fn curve_meets_the_translational_mode_once() {
    let out = run(&["curve", "--grid=-1:1:41"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let rows: Vec<Vec<&str>> = text
        .lines()
        .skip(2)
        .map(|l| l.split(',').collect())
        .collect();
    assert_eq!(rows.len(), 41);
    for r in &rows {
        assert_eq!(r[11], "1", "{r:?}");
        assert_eq!(r[9] == "O1", r[0] == "0", "{r:?}");
    }
}

#[test]
fn verify_passes_for_the_default_design() {
    let out = run(&["verify", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert!(v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["passed"] == true));
}

#[test]
fn verify_fails_for_a_perturbed_design() {
    let path = tmp("perturbed.json");
    std::fs::write(&path, r#"{"a1": "3001/1000", "a3": 5, "r0": 11, "r1": 7}"#).unwrap();
    let out = run(&[
        "verify",
        "--design",
        path.to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let v = json(&out);
    let failed: Vec<&str> = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["passed"] == false)
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    assert_eq!(failed, ["joint-input-vanishing", "joint-output-vanishing"]);
}

#[test]
fn thread_cap_is_validated() {
    let ok = Command::new(env!("CARGO_BIN_EXE_ruukin"))
        .args(["surface", "joint-input", "--grid=-1:1:3"])
        .env("RUUKIN_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(0));
    let bad = Command::new(env!("CARGO_BIN_EXE_ruukin"))
        .args(["surface", "joint-input", "--grid=-1:1:3"])
        .env("RUUKIN_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(1));
}
