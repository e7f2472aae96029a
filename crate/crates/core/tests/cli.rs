use std::io::Write;
use std::process::{Command, Stdio};

use segre_zeta::cli::{parse_and_run, parse::parse_zeta, Outcome};
use segre_zeta::RationalSeries;

fn run(args: &[&str]) -> Outcome {
    run_with_stdin(args, "")
}

fn run_with_stdin(args: &[&str], stdin: &str) -> Outcome {
    let argv = std::iter::once("szf").chain(args.iter().copied());
    parse_and_run(argv, &mut stdin.as_bytes())
}

fn ok(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(out.code, 0, "{args:?}: {}", out.stderr);
    out.stdout
}

fn lines(s: &str) -> Vec<&str> {
    s.lines().collect()
}

#[test]
fn ci_with_expansion() {
    let out = ok(&["ci", "2", "3", "4", "--expand", "5"]);
    assert_eq!(lines(&out), ["24t^3/((1+2t)(1+3t)(1+4t))", "24t^3 - 216t^4 + 1320t^5"]);
}

#[test]
fn bootstrap_revisit() {
    let out = ok(&["bootstrap", "--degrees", "2,3,4", "--segre", "0,0,2"]);
    assert_eq!(out, "(2t^2 + 24t^3)/((1+2t)(1+3t)(1+4t))\n");
    let out = ok(&["--expand", "9", "bootstrap", "--degrees", "2,3,4", "--segre", "0,0,2"]);
    assert_eq!(
        lines(&out)[1],
        "2t^2 + 6t^3 - 106t^4 + 750t^5 - 4138t^6 + 20286t^7 - 92986t^8 + 408750t^9"
    );
}

#[test]
fn ranks_of_the_twisted_cubic() {
    let out = ok(&["ranks", "--n", "3", "--zeta", "(3t^2+8t^3)/((1+2t)^3)"]);
    assert_eq!(lines(&out)[0], "delta_1 = 3, delta_0 = 4; dual: dimension 2, degree 4");
}

#[test]
fn monomial_claim_and_reduction_report() {
    let out = ok(&["monomial", "--generators", "7,0;5,1;4,2;3,4;2,5;1,7", "--expand", "4"]);
    let l = lines(&out);
    assert_eq!(l[0], "(t + 57t^2 + 640t^3 + 2016t^4)/((1+6t)^2(1+7t)(1+8t))");
    assert_eq!(l[1], "t + 30t^2 - 442t^3 + 4578t^4");
    assert!(l.iter().any(|s| s.starts_with("discarded") && s.ends_with("(3,4)")));
}

#[test]
fn monomial_from_stdin_document() {
    let doc = r#"{"vars": 2, "generators": [[3, 0], [0, 5]]}"#;
    let out = run_with_stdin(&["monomial", "--file", "-"], doc);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert_eq!(lines(&out.stdout)[0], "15t^2/((1+3t)(1+5t))");
}

#[test]
fn json_output_round_trips_through_zeta_file() {
    let json = ok(&["--format", "json", "linsys", "--d", "2", "--n", "3", "--counts", "1,2,1,0"]);
    let value: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(value["codim"], 2);
    assert_eq!(value["degree"], "3");
    let out = run_with_stdin(&["expand", "--zeta-file", "-", "--expand", "3"], &json);
    assert_eq!(lines(&out.stdout), ["(3t^2 + 8t^3)/((1+2t)^3)", "3t^2 - 10t^3"]);
}

#[test]
fn plain_outputs_reparse_and_expansions_agree() {
    let cases: &[&[&str]] = &[
        &["ci", "2", "3", "4"],
        &["ci", "1", "1"],
        &["monomial", "--generators", "2,0;1,1;0,2"],
        &["bootstrap", "--degrees", "2,2,2", "--segre", "0,0,3"],
        &["linsys", "--d", "3", "--n", "2", "--counts", "1,2,4"],
        &["product", "--zeta", "2t/(1+2t)", "--zeta", "(3t^2+8t^3)/((1+2t)^3)"],
        &["expand", "--zeta", "(t+57t^2+640t^3+2016t^4)/((1+6t)^2(1+7t)^2(1+8t))"],
    ];
    for args in cases {
        let mut argv = args.to_vec();
        argv.extend(["--expand", "12"]);
        let out = ok(&argv);
        let l = lines(&out);
        let f: RationalSeries = parse_zeta(l[0]).unwrap_or_else(|e| panic!("{args:?}: {e}"));
        let printed: RationalSeries = parse_zeta(l[1]).unwrap();
        assert_eq!(f.expand(12), printed.numerator().truncate(12), "{args:?}");
        assert_eq!(*f.numerator(), f.reduce().numerator().clone(), "{args:?} not reduced");
    }
}

#[test]
fn default_expansion_order_is_twice_the_pole_count() {
    let out = ok(&["expand", "--zeta", "6t^2/((1+2t)(1+3t))"]);
    let printed = parse_zeta(lines(&out)[1]).unwrap();
    assert_eq!(printed.numerator().degree(), Some(4));
}

#[test]
fn dual_and_checks() {
    let out = ok(&["dual", "--zeta", "(3t^2+8t^3)/((1+2t)^3)", "--expand", "6"]);
    assert_eq!(lines(&out), ["(3t^2 - 5t^3)/(1 - 3t + 3t^2 - t^3)", "3t^2 + 4t^3 + 3t^4 - 5t^6"]);

    assert_eq!(ok(&["check-ci", "--zeta", "6t^2/((1+2t)(1+3t))"]), "complete intersection of degrees 2, 3\n");
    assert_eq!(ok(&["check-ci", "--zeta", "(3t^2+8t^3)/((1+2t)^3)"]), "not a complete intersection\n");

    let out = ok(&["check-lci", "--zeta", "6t^2/((1+2t)(1+3t))", "--n", "5", "--degrees", "2,3,6"]);
    assert_eq!(out, "complete-intersection type: normal degrees [2, 3], residual degrees [6]\n");
}

#[test]
fn validate_exit_codes() {
    let good = run(&["validate", "--zeta", "(3t^2+8t^3)/((1+2t)^3)", "--degrees", "2,2,2"]);
    assert_eq!(good.code, 0);
    assert!(good.stdout.ends_with("valid\n"));
    let bad = run(&["validate", "--zeta", "6t^3/((1+2t)(1+3t)(1+4t))", "--degrees", "2,3"]);
    assert_eq!(bad.code, 6);
    assert!(bad.stdout.contains("[FAIL] poles"));
}

#[test]
fn error_exit_codes_are_distinct() {
    let usage = run(&["frobnicate"]);
    assert_eq!(usage.code, 2);
    assert!(!usage.stderr.is_empty());

    let malformed = run(&["expand", "--zeta", "(3t^2+8t^3)/((2+2t)^3)"]);
    assert_eq!(malformed.code, 3);
    assert_eq!(malformed.stderr.lines().count(), 1);

    let schema = run_with_stdin(&["expand", "--zeta-file", "-"], r#"{"numerator": ["0", 2], "denominator": [2]}"#);
    assert_eq!(schema.code, 3);
    assert!(schema.stderr.contains("/numerator/1"), "{}", schema.stderr);

    let io = run(&["expand", "--zeta-file", "/nonexistent/zeta.json"]);
    assert_eq!(io.code, 4);

    let math = run(&["ci", "2", "0"]);
    assert_eq!(math.code, 5);
    assert_eq!(math.stderr.lines().count(), 1);

    let not_segre = run(&["bootstrap", "--degrees", "2,2", "--segre", "0,-1"]);
    assert_eq!(not_segre.code, 5);

    assert_eq!(run(&["--help"]).code, 0);
}

#[test]
fn latex_rendering() {
    let out = ok(&["--format", "latex", "monomial", "--generators", "7,0;5,1;4,2;3,4;2,5;1,7"]);
    assert_eq!(
        lines(&out)[0],
        "\\frac{t + 57t^{2} + 640t^{3} + 2016t^{4}}{(1+6t)^{2}(1+7t)(1+8t)}"
    );
}

#[test]
fn output_is_deterministic() {
    let args = ["--format", "json", "monomial", "--generators", "7,0;5,1;4,2;3,4;2,5;1,7", "--expand", "8"];
    assert_eq!(run(&args), run(&args));
}

#[test]
fn binary_reads_stdin_and_format_env() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_szf"))
        .args(["expand", "--zeta-file", "-", "--expand", "4"])
        .env("SZF_FORMAT", "json")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(br#"{"numerator": ["0", "0", "6"], "denominator": [2, 3]}"#)
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(value["expansion"], serde_json::json!(["0", "0", "6", "-30", "114"]));
}
