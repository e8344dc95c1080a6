use std::io::Write;
use std::process::{Command, Output};

fn derlog(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_derlog")).args(args).output().expect("run derlog")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let o = derlog(&all);
    serde_json::from_slice(&o.stdout).expect("json output")
}

#[test]
fn quadric_cone_has_seven_generators() {
    let o = derlog(&["derlog", "--f", "x*w-y*z", "--ring", "x,y,z,w"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("count: 7"));
    let v = json(&["derlog", "--f", "x*w-y*z", "--ring", "x,y,z,w"]);
    assert_eq!(v["witnesses"][1]["evidence"]["module"].as_array().unwrap().len(), 7);
}

#[test]
fn quadric_cone_example_passes() {
    let o = derlog(&["example", "quadric-cone", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["verdict"], "pass");
    assert_eq!(v["command"], "example");
}

#[test]
fn saito_on_normal_crossing() {
    let o = derlog(&["check-saito", "--ring", "x,y", "--fields", "x*d/dx", "y*d/dy", "--f", "x*y"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn failing_check_exits_one() {
    let o = derlog(&["check-saito", "--ring", "x,y", "--fields", "x*d/dx", "x*d/dy", "--f", "x*y"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("x^2"));
}

#[test]
fn usage_and_parse_errors_exit_two() {
    assert_eq!(derlog(&["derlog", "--ring", "x,y", "--f", "x+"]).status.code(), Some(2));
    assert_eq!(derlog(&["derlog", "--f", "x"]).status.code(), Some(2));
    assert_eq!(derlog(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(derlog(&["example", "no-such-example"]).status.code(), Some(2));
    assert_eq!(derlog(&["example", "sym3x3-minors"]).status.code(), Some(2));
    assert_eq!(derlog(&["fitting", "--ring", "x,y", "--f", "x*y", "--k", "3"]).status.code(), Some(2));
}

#[test]
fn timeout_exits_three() {
    let o = derlog(&["--timeout", "0.01", "example", "sym3x3-minors", "--long"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn json_is_deterministic_and_sorted() {
    let args = ["--json", "example", "whitney-umbrella"];
    let a = derlog(&args).stdout;
    let b = derlog(&args).stdout;
    assert_eq!(a, b);
    let text = String::from_utf8(a).unwrap();
    let keys: Vec<usize> = ["\"caveats\"", "\"check\"", "\"command\"", "\"engine_version\"", "\"input_hash\"", "\"timings_ms\"", "\"verdict\"", "\"witnesses\""]
        .iter()
        .map(|k| text.find(k).unwrap())
        .collect();
    assert!(keys.windows(2).all(|w| w[0] < w[1]));
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["engine_version"], env!("CARGO_PKG_VERSION"));
    assert_eq!(v["input_hash"].as_str().unwrap().len(), 64);
    assert_eq!(v["timings_ms"], serde_json::json!({}));
}

#[test]
fn input_hash_tracks_arguments() {
    let a = json(&["derlog", "--ring", "x,y", "--f", "x*y"]);
    let b = json(&["derlog", "--ring", "x,y", "--f", "x*y*(x+y)"]);
    assert_ne!(a["input_hash"], b["input_hash"]);
}

#[test]
fn timings_are_opt_in() {
    let v = json(&["--timings", "derlog", "--ring", "x,y", "--f", "x*y"]);
    assert!(v["timings_ms"]["total"].is_u64());
}

#[test]
fn non_reduced_input_is_flagged() {
    let v = json(&["derlog", "--ring", "x,y", "--f", "x^2*y"]);
    assert_eq!(v["caveats"][0], "input polynomial is not reduced");
}

#[test]
fn fitting_ideals_of_cone() {
    let v = json(&["fitting", "--ring", "x,y,z,w", "--f", "x*w-y*z", "--k", "1"]);
    assert_eq!(v["witnesses"][0]["name"], "I_1");
    assert_eq!(v["witnesses"][0]["evidence"]["ideal"], serde_json::json!(["w", "z", "y", "x"]));
}

#[test]
fn input_file_drives_bound_check() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(
        file,
        "# quadric cone\nring x, y, z, w\npoly f = x*w - y*z\ncomponent X = x*w - y*z, dim 3\ncomponent O = x, y, z, w, dim 0"
    )
    .unwrap();
    let path = file.path().to_str().unwrap();
    let o = derlog(&["--input", path, "bound"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let o = derlog(&["--input", path, "derlog"]);
    assert!(stdout(&o).contains("count: 7"));
    let a = json(&["--input", path, "bound"]);
    let b = json(&["--input", path, "bound"]);
    assert_eq!(a, b);
}

#[test]
fn input_file_errors_name_the_line() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "ring x, y\npoly f = x\npoly f = y").unwrap();
    let o = derlog(&["--input", file.path().to_str().unwrap(), "derlog"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
}

#[test]
fn named_fields_from_file() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "ring x, y\npoly f = x*y\nfield a = x*d/dx\nfield b = y*d/dy").unwrap();
    let path = file.path().to_str().unwrap();
    assert_eq!(derlog(&["--input", path, "check-saito"]).status.code(), Some(0));
    assert_eq!(derlog(&["--input", path, "check-saito2"]).status.code(), Some(0));
    assert_eq!(derlog(&["--input", path, "check-linear-fd"]).status.code(), Some(0));
}

#[test]
fn smooth_and_component_checks() {
    let o = derlog(&["check-smooth", "--ring", "x,y", "--dim", "1", "--fields", "d/dy", "x*d/dx"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let o = derlog(&["check-smooth", "--ring", "x,y", "--dim", "1", "--fields", "d/dy"]);
    assert_eq!(o.status.code(), Some(1));
    let o = derlog(&["check-component", "--ring", "x,y,z,w", "--f", "x*w-y*z", "--component", "X = x*w-y*z, dim 3"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn generalized_saito() {
    let o = derlog(&[
        "check-generalized", "--ring", "x,y", "--f", "x*y", "--fields", "x*d/dx", "y*d/dy",
        "--factor", "x", "--factor", "y",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn lists_examples() {
    let o = derlog(&["list-examples"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    for name in ["quadric-cone", "xz-yw-arrangement", "whitney-umbrella", "sym3x3-minors"] {
        assert!(s.contains(name));
    }
}

fn with_file(text: &str, args: &[&str]) -> Output {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    write!(file, "{text}").unwrap();
    let mut all = vec!["--input", file.path().to_str().unwrap()];
    all.extend_from_slice(args);
    derlog(&all)
}

#[test]
fn parses_a_full_document() {
    let doc = "# cone\nring x, y, z, w\npoly f = x*w - y*z\nfield e = x*d/dx + y*d/dy\n\
               module L = e, z*d/dz\ncomponent X3 = x*w - y*z, dim 3\nideal m = x, y, z, w\n";
    let o = with_file(doc, &["fitting", "--fields", "L", "--k", "2"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).contains("I_2: (y*z, x*z)"));
    let o = with_file(doc, &["derlog", "--ideal", "m"]);
    assert!(stdout(&o).contains("count: 16"), "{}", stdout(&o));
}

#[test]
fn reports_line_numbers() {
    for (text, line) in [
        ("ring x\npoly f = x +\n", 2),
        ("poly f = x\n", 1),
        ("ring x\npoly f = x\npoly f = x^2\n", 3),
        ("ring x,y\ncomponent A = x, dim 0\n", 2),
    ] {
        let o = with_file(text, &["derlog"]);
        assert_eq!(o.status.code(), Some(2));
        let err = String::from_utf8_lossy(&o.stderr).to_string();
        assert!(err.contains(&format!("line {line}")), "{err}");
    }
}
