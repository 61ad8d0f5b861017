use std::process::Command;

fn lambert(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_lambert")).args(args).output().unwrap();
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn field(json_line: &str, key: &str) -> serde_json::Value {
    let v: serde_json::Value = serde_json::from_str(json_line).unwrap();
    v[key].clone()
}

#[test]
fn half_turn_of_the_unit_circle() {
    let (code, out, _) = lambert(&["tof", "--state", "1,0,0,1", "--turns", "0.5"]);
    assert_eq!(code, 0);
    let dt = field(out.lines().next().unwrap(), "dt").as_f64().unwrap();
    assert!((dt - std::f64::consts::PI).abs() < 1e-15);
}

#[test]
fn radial_collision_to_culmination() {
    let (code, out, _) = lambert(&["tof", "--rectilinear", "--H", "-0.5", "--from-collision", "--to-culmination"]);
    assert_eq!(code, 0);
    let dt = field(out.lines().next().unwrap(), "dt").as_f64().unwrap();
    assert!((dt - std::f64::consts::PI).abs() < 1e-15);
}

#[test]
fn two_directions_two_records() {
    let (code, out, _) = lambert(&["lambert", "--A", "1,0", "--B", "0,1", "--dt", "1.2"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 2);
    assert_ne!(field(lines[0], "H"), field(lines[1], "H"));
    assert_eq!(field(lines[0], "orientation"), "ccw");
    assert_eq!(field(lines[1], "orientation"), "cw");
}

#[test]
fn parabolic_closure() {
    let dt = "0.97671708843832249";
    let (code, out, _) = lambert(&["lambert", "--A", "1,0", "--B", "0,1", "--dt", dt, "--direction", "ccw"]);
    assert_eq!(code, 0);
    assert!(field(out.trim(), "H").as_f64().unwrap().abs() < 1e-9);
}

#[test]
fn exit_codes() {
    assert_eq!(lambert(&["lambert", "--A", "1,0", "--B", "0,1", "--dt", "x"]).0, 2);
    assert_eq!(lambert(&["lambert", "--A", "1,0", "--B", "0,1,2", "--dt", "1"]).0, 2);
    assert_eq!(lambert(&["lambert", "--A", "1,0", "--B", "0,1", "--dt", "1", "--tol", "nope=1"]).0, 2);
    let (code, _, err) = lambert(&["lambert", "--A", "1,0", "--B", "0,1", "--dt", "0.5", "--revs", "1", "--direction", "ccw"]);
    assert_eq!(code, 3);
    assert!(err.contains("no arc with requested winding"));
    let tight = lambert(&["verify", "--suite", "cycle", "--trials", "5", "--tol", "tof_invariance=1e-30"]);
    assert_eq!(tight.0, 4);
}

#[test]
fn verify_summary_is_machine_readable() {
    let (code, out, _) = lambert(&["verify", "--suite", "geometry", "--trials", "30", "--seed", "7"]);
    assert_eq!(code, 0);
    let last = out.lines().last().unwrap();
    assert_eq!(field(last, "passed"), true);
    assert_eq!(field(last, "suite"), "geometry");
}

#[test]
fn csv_output() {
    let (code, out, _) = lambert(&["--format", "csv", "tof", "--conic", "0.75,0,0.25", "--from", "0", "--to", "1"]);
    assert_eq!(code, 0);
    let mut lines = out.lines();
    assert!(lines.next().unwrap().starts_with("dt,H,kind"));
    assert!(lines.next().unwrap().contains("ellipse"));
}

#[test]
fn cycle_reports_constant_time() {
    let (code, out, _) = lambert(&["cycle", "--seed", "11", "--samples", "12"]);
    assert_eq!(code, 0);
    let summary = out.lines().last().unwrap();
    assert!(field(summary, "dt_deviation").as_f64().unwrap() < 1e-9);
    assert_eq!(out.lines().filter(|l| l.contains("\"limit\"")).count(), 2);
}

#[test]
fn plots_are_deterministic() {
    let dir = std::env::temp_dir().join(format!("lambert-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    for fig in ["chord-family", "cycle", "foci", "cycloid"] {
        let p1 = dir.join(format!("{fig}-1.svg"));
        let p2 = dir.join(format!("{fig}-2.svg"));
        for p in [&p1, &p2] {
            let code = lambert(&["plot", "--fig", fig, "--seed", "5", "--out", p.to_str().unwrap()]).0;
            assert_eq!(code, 0, "{fig}");
        }
        let (a, b) = (std::fs::read(&p1).unwrap(), std::fs::read(&p2).unwrap());
        assert!(a.starts_with(b"<svg"));
        assert_eq!(a, b);
    }
    std::fs::remove_dir_all(&dir).unwrap();
}
