use std::io::Write;
use std::process::{Command, Output, Stdio};

const P4: &str = "4 3\n0 1\n1 2\n2 3\n";
const BOWTIE: &str = "5 6\n0 1\n1 2\n0 2\n2 3\n3 4\n2 4\n";

fn kindep(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_kindep"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn alpha_on_p4() {
    let o = kindep(&["alpha", "--k", "4"], P4);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "{\"alpha\":3,\"witness\":[0,1,2]}\n");
    for method in ["exact", "brute", "tree"] {
        let o = kindep(&["alpha", "--k", "4", "--method", method], P4);
        assert_eq!(stdout(&o), "{\"alpha\":3,\"witness\":[0,1,2]}\n", "{method}");
    }
}

#[test]
fn alpha_reads_graph6_and_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p4.g6");
    std::fs::write(&path, "Ch\n").unwrap();
    let o = kindep(&["alpha", path.to_str().unwrap()], "");
    assert_eq!(stdout(&o), "{\"alpha\":3,\"witness\":[0,1,2]}\n");
}

#[test]
fn shrink_rejects_shared_vertex() {
    let o = kindep(&["shrink"], BOWTIE);
    assert_eq!(o.status.code(), Some(1));
    assert!(o.stdout.is_empty());
    assert!(String::from_utf8_lossy(&o.stderr).contains("not vertex-disjoint"));
}

#[test]
fn shrink_uses_input_labels() {
    // Triangle 1-2-3 with pendant 0 on vertex 1.
    let o = kindep(&["shrink"], "4 4\n0 1\n1 2\n2 3\n1 3\n");
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["t_graph"]["nodes"], serde_json::json!(["0", "c0"]));
    assert_eq!(v["t_graph"]["edges"], serde_json::json!([["0", "c0"]]));
    assert_eq!(v["cycles"], serde_json::json!([[1, 2, 3]]));
}

#[test]
fn convert_round_trip() {
    let g6 = kindep(&["convert", "--to", "graph6"], P4);
    assert_eq!(stdout(&g6).lines().count(), 1);
    let back = kindep(&["convert", "--to", "edge-list"], &stdout(&g6));
    assert_eq!(stdout(&back), P4);
    let dot = kindep(&["convert", "--to", "dot"], P4);
    assert!(stdout(&dot).contains("graph"));
}

#[test]
fn format_errors_exit_two() {
    let o = kindep(&["omega"], "3 1\n0 7\n");
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 1"));
    let o = kindep(&["omega", "/nonexistent/graph.txt"], "");
    assert_eq!(o.status.code(), Some(2));
    let o = kindep(&["nonsense"], "");
    assert_eq!(o.status.code(), Some(2));
    let o = kindep(&["alpha", "--bogus"], P4);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn omega_and_classes() {
    let o = kindep(&["omega"], BOWTIE);
    assert_eq!(stdout(&o), "{\"components\":1,\"m\":6,\"n\":5,\"omega\":2}\n");
    let o = kindep(&["classes"], P4);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["pendant"], serde_json::json!([0, 3]));
    assert_eq!(v["q2"], serde_json::json!([1, 2]));
}

#[test]
fn check_good_and_explain() {
    let plain = kindep(&["check-good"], P4);
    let v: serde_json::Value = serde_json::from_str(&stdout(&plain)).unwrap();
    assert_eq!(v["direct_good"], true);
    assert_eq!(v["bound_value"], "3");
    assert!(v.get("explanation").is_none());
    let explained = kindep(&["check-good", "--explain"], P4);
    let v: serde_json::Value = serde_json::from_str(&stdout(&explained)).unwrap();
    assert_eq!(
        v["explanation"]["gamma_components"][0]["certificate"]["blocks"],
        serde_json::json!([[0, 1, 2, 3]])
    );
}

#[test]
fn generators() {
    let o = kindep(&["gen-r", "--i", "1", "--k", "4", "--format", "graph6"], "");
    assert_eq!(stdout(&o).lines().count(), 2);
    let o = kindep(&["gen-r", "--i", "2"], "");
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["count"], 10);
    let o = kindep(&["gen-good", "--n", "5", "--format", "graph6"], "");
    assert_eq!(stdout(&o).lines().count(), 1);
    let o = kindep(&["gen-r", "--i", "9"], "");
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn is_r_certificate_and_rejection() {
    let o = kindep(&["is-r"], "8 7\n0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n6 7\n");
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["member"], true);
    assert_eq!(
        v["certificate"]["blocks"],
        serde_json::json!([[0, 1, 2, 3], [4, 5, 6, 7]])
    );
    let o = kindep(&["is-r"], BOWTIE);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn sweep_is_deterministic_and_resumable() {
    let dir = tempfile::tempdir().unwrap();
    let out = |name: &str| dir.path().join(name).to_str().unwrap().to_owned();
    let (a, b, cp) = (out("a.json"), out("b.json"), out("cp.json"));
    let base = ["sweep", "--k", "2,4", "--n-max", "6", "--connected"];
    let o = kindep(&[&base[..], &["--out", &a, "--jobs", "1"]].concat(), "");
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let o = kindep(
        &[&base[..], &["--out", &b, "--checkpoint", &cp, "--jobs", "3"]].concat(),
        "",
    );
    assert!(o.status.success());
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    assert!(std::path::Path::new(&cp).exists());
}

#[test]
fn sweep_rejects_large_enumeration() {
    let o = kindep(&["sweep", "--k", "4", "--n-max", "11"], "");
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn outputs_are_byte_identical_across_runs() {
    for args in [
        &["check-good", "--explain"][..],
        &["shrink"],
        &["alpha", "--k", "3"],
        &["classes", "--format", "table"],
    ] {
        let g = "9 9\n0 1\n1 2\n2 3\n3 4\n4 0\n0 5\n5 6\n6 7\n7 8\n";
        assert_eq!(kindep(args, g).stdout, kindep(args, g).stdout);
    }
}

#[test]
fn help_exists_for_every_subcommand() {
    for sub in [
        "alpha",
        "omega",
        "classes",
        "shrink",
        "check-good",
        "gen-r",
        "is-r",
        "gen-good",
        "sweep",
        "convert",
    ] {
        let o = kindep(&[sub, "--help"], "");
        assert!(o.status.success(), "{sub}");
        assert!(stdout(&o).contains("Usage"), "{sub}");
    }
}
