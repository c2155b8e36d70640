use std::io::Write;
use std::process::{Command, Output};

fn vbridge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_vbridge")).args(args).env_remove("VBRIDGE_THREADS").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn temp_file(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

#[test]
fn torus_count_over_z() {
    let o = vbridge(&["color", "count", "torus2:4", "Z"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "16\n");
    let snf = vbridge(&["color", "count", "torus2:4", "Z", "--method", "snf"]);
    assert_eq!(stdout(&snf), "16\n");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(vbridge(&["frobnicate"]).status.code(), Some(2));
    let o = vbridge(&["color", "count", "torus2:4", "Q7"]);
    assert_eq!(o.status.code(), Some(2));
    let o = vbridge(&["quiver", "indeg", "torus2:4", "R4", "--endo", "1,2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("--endo"));
    let o = vbridge(&["color", "count", "torus2:4", "T", "--method", "snf"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("--method"));
}

#[test]
fn malformed_files_exit_one() {
    let pd = temp_file("X+ 0 1 2\n");
    let o = vbridge(&["diagram", "validate", pd.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 1"));
}

#[test]
fn pd_files_round_trip() {
    let gen = vbridge(&["diagram", "gen", "chain", "5"]);
    let pd = temp_file(&stdout(&gen));
    let o = vbridge(&["color", "count", pd.path().to_str().unwrap(), "R4"]);
    assert_eq!(stdout(&o), "64\n");
}

#[test]
fn biquandle_files_and_validation() {
    let shown = vbridge(&["algebra", "show", "Z"]);
    let f = temp_file(&stdout(&shown));
    let path = f.path().to_str().unwrap();
    assert_eq!(stdout(&vbridge(&["algebra", "validate", path])), "valid\n");
    assert_eq!(stdout(&vbridge(&["color", "count", "torus2:4", path])), "16\n");
    let broken = temp_file("2\n1 1\n2 2\n\n1 1\n1 1\n");
    let o = vbridge(&["algebra", "validate", broken.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("invalid\n"));
}

#[test]
fn quiver_commands() {
    let o = vbridge(&["quiver", "indeg", "torus2:4", "R4", "--endo", "2,4,2,4"]);
    assert_eq!(stdout(&o), "4u^4 + 12\n");
    let o = vbridge(&["quiver", "iso", "pretzel:9,2,9", "torus2:3", "R9", "--endo", "3,6,9,3,6,9,3,6,9"]);
    assert_eq!(stdout(&o), "not isomorphic\n");
    let o = vbridge(&["--format", "json", "quiver", "build", "torus2:2", "R3", "--all-endos"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let vertices = v["vertices"].as_array().unwrap().len();
    let endos = v["endomorphisms"].as_array().unwrap().len();
    assert_eq!(v["edges"].as_array().unwrap().len(), vertices * endos);
}

#[test]
fn enhancement_and_bridge() {
    assert_eq!(stdout(&vbridge(&["enhance", "colgroup", "knot:6_1", "R9"])), "54u^18 + 18u^6 + 9u^2\n");
    assert_eq!(vbridge(&["enhance", "colgroup", "knot:6_1", "Z"]).status.code(), Some(2));
    assert_eq!(stdout(&vbridge(&["bridge", "seeds", "torus2:3"])), "2 (strands 0,1)\n");
    assert_eq!(stdout(&vbridge(&["bridge", "lower", "torus2:3", "--alg", "R3", "--mode", "b1"])), "2\n");
    assert_eq!(stdout(&vbridge(&["bridge", "lower", "torus2:4", "--alg", "Z", "--alg", "R3"])), "2\n");
}

#[test]
fn coloring_table_layout() {
    let o = stdout(&vbridge(&["color", "list", "torus2:4", "Z", "--table"]));
    let lines: Vec<&str> = o.lines().collect();
    assert_eq!(lines.len(), 17);
    assert_eq!(lines[0], "s0\ts1\ts2\ts3\ts4\ts5\ts6\ts7");
}

#[test]
fn knot_table_override() {
    let table = temp_file("trefoil | X+ 1 4 2 5; X+ 5 2 0 3; X+ 3 0 4 1 | 3\n");
    let path = table.path().to_str().unwrap();
    let o = vbridge(&["--knot-table", path, "color", "count", "knot:trefoil", "R3"]);
    assert_eq!(stdout(&o), "9\n");
    let o = vbridge(&["--knot-table", path, "diagram", "knots"]);
    assert!(stdout(&o).contains("consistent"));
}

#[test]
fn repro_is_byte_stable_and_schema_shaped() {
    let args = ["--format", "json", "repro", "--only", "AC4", "--only", "AC6", "--no-timings"];
    let a = vbridge(&args);
    let b = vbridge(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_str(&stdout(&a)).unwrap();
    assert_eq!(v["passed"], 2);
    for item in v["items"].as_array().unwrap() {
        for key in ["id", "claim", "basis", "expected", "computed", "pass"] {
            assert!(item.get(key).is_some(), "{key}");
        }
        assert!(item.get("runtime_ms").is_none());
    }
    let schema: serde_json::Value = serde_json::from_str(&stdout(&vbridge(&["repro", "--schema"]))).unwrap();
    assert_eq!(schema["title"], "vbridge repro report");
}

#[test]
fn thread_settings() {
    let o = Command::new(env!("CARGO_BIN_EXE_vbridge"))
        .args(["color", "count", "torus2:5", "R5"])
        .env("VBRIDGE_THREADS", "2")
        .output()
        .unwrap();
    assert_eq!(stdout(&o), "25\n");
    let o = Command::new(env!("CARGO_BIN_EXE_vbridge"))
        .args(["color", "count", "torus2:5", "R5"])
        .env("VBRIDGE_THREADS", "many")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(stdout(&vbridge(&["--threads", "1", "color", "count", "torus2:5", "R5"])), "25\n");
}
