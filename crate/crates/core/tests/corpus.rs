use derlog_core::*;

#[test]
fn unknown_and_gated() {
    assert!(matches!(run_example("nope", false), Err(Error::UnknownExample(_))));
    assert!(run_example("sym3x3-minors", false).is_err());
}

#[test]
fn quick_cases_pass() {
    for name in ["quadric-cone", "counterexample-origin", "trivial-generators", "normal-crossings"] {
        let rep = run_example(name, false).unwrap();
        assert!(rep.is_pass(), "{rep}");
    }
}
