use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

const BIN: &str = env!("CARGO_BIN_EXE_cyclo-darboux");

const FOUR: &str = "vars x,y,z,w; d(x)=w^2; d(y)=z*w; d(z)=y^2; d(w)=x*y;";

fn run(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(BIN)
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    {
        let mut pipe = child.stdin.take().unwrap();
        if let Some(text) = stdin {
            pipe.write_all(text.as_bytes()).unwrap();
        }
    }
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_string_lossy().into_owned()
}

#[test]
fn gen_jouanolou_then_analyze() {
    let gen = run(&["gen", "jouanolou", "--n", "3", "--s", "2"], None);
    assert!(gen.status.success());
    let spec = stdout(&gen);
    assert_eq!(spec, "vars x1, x2, x3;\nd(x1) = x2^2;\nd(x2) = x3^2;\nd(x3) = x1^2;\n");
    let out = run(&["analyze"], Some(&spec));
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("w_d = 7"), "{text}");
    assert!(text.contains("feasible k: 3"), "{text}");
}

#[test]
fn certify_four_variable_example_and_recheck() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write(dir.path(), "four.spec", FOUR);
    let cert = dir.path().join("four.json");
    let out = run(
        &["certify", &spec, "--max-degree", "1", "--out", cert.to_str().unwrap()],
        None,
    );
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("N = 3"), "{text}");
    assert!(text.contains("conjugation: true"), "{text}");
    assert!(text.contains("all sums zero: true"), "{text}");

    let json = std::fs::read_to_string(&cert).unwrap();
    assert!(json.contains("\"schema\": \"cyclo-darboux/1\""));
    let ok = run(&["recheck", cert.to_str().unwrap()], None);
    assert_eq!(ok.status.code(), Some(0), "{}", stdout(&ok));

    // The geometric sums are stored as exact zero vectors; corrupt one.
    let mut value: serde_json::Value = serde_json::from_str(&json).unwrap();
    value["lambda"]["rows"][0]["geometric_sum"]["coeffs"][0] = "1/2".into();
    let tampered = serde_json::to_string(&value).unwrap();
    let bad = run(&["recheck"], Some(&tampered));
    assert_eq!(bad.status.code(), Some(1));
    assert!(stdout(&bad).contains("FAILED"));
}

#[test]
fn orbit_on_jouanolou_2_2() {
    let spec = stdout(&run(&["gen", "jouanolou", "--n", "2", "--s", "2"], None));
    let out = run(&["orbit", "--f", "x1 - x2", "--lambda", "-x1 - x2"], Some(&spec));
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("F = x1^3 - x2^3"));

    let wrong = run(&["orbit", "--f", "x1 - x2", "--lambda", "x1"], Some(&spec));
    assert_eq!(wrong.status.code(), Some(1));
}

#[test]
fn darboux_exit_codes() {
    let spec = stdout(&run(&["gen", "jouanolou", "--n", "3", "--s", "2"], None));
    let out = run(&["darboux", "--max-degree", "2"], Some(&spec));
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("degree 1: NONE") && text.contains("degree 2: NONE"), "{text}");

    let fast = run(&["darboux", "--max-degree", "1", "--monomial-cofactors-only"], Some(&spec));
    assert_eq!(fast.status.code(), Some(3));

    let json = run(&["darboux", "--max-degree", "1", "--json"], Some("vars x,y; d(x)=y; d(y)=x;"));
    assert_eq!(json.status.code(), Some(0));
    assert!(stdout(&json).contains("\"status\": \"FOUND\""));
}

#[test]
fn parse_and_usage_errors_exit_2() {
    let out = run(&["analyze"], Some("vars x,y; d(x)=x+y; d(y)=x;"));
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("1:17"));
    let out = run(&["darboux"], Some(FOUR));
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["analyze", "/nonexistent/file.spec"], None);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn gen_cyclotomic_and_tensor() {
    let dir = tempfile::tempdir().unwrap();
    let tables = write(dir.path(), "t.txt", "0 2\n1 1\n\n0 2\n1 1\n");
    let out = run(
        &["gen", "cyclotomic", "--sizes", "2,2", "--tables", &tables, "--names", "x,y,z,w"],
        None,
    );
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "vars x, y, z, w;\nd(x) = w^2;\nd(y) = z*w;\nd(z) = y^2;\nd(w) = x*y;\n"
    );

    let a = write(dir.path(), "a.spec", "vars x,y; d(x)=y; d(y)=x;");
    let out = run(&["tensor", &a, &a], None);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "vars x, y, x_2, y_2;\nd(x) = y;\nd(y) = x;\nd(x_2) = y_2;\nd(y_2) = x_2;\n"
    );
}
