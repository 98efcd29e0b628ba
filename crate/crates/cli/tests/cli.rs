use confrac_cli::{
    run, Outcome, CSV_HEADER, EXIT_HYPOTHESIS, EXIT_NUMERIC, EXIT_OK, EXIT_USAGE, EXIT_VIOLATED,
};
use serde_json::Value;
use std::process::Command;

fn confrac(args: &[&str]) -> Outcome {
    run(std::iter::once("confrac").chain(args.iter().copied()))
}

fn number(s: &str) -> f64 {
    s.trim().parse().unwrap()
}

const COUNTEREXAMPLE: [&str; 13] = [
    "check",
    "--ineq",
    "steffensen",
    "--f",
    "-1",
    "--g",
    "0.5",
    "--alpha",
    "0.5",
    "--a",
    "0",
    "--b",
    "1",
];

#[test]
fn deriv_example() {
    let out = confrac(&["deriv", "--expr", "t", "--alpha", "0.5", "--at", "4"]);
    assert_eq!(out.code, EXIT_OK);
    assert_eq!(out.stdout, "2\n");
    assert!(out.stderr.is_empty());
    let out = confrac(&[
        "deriv",
        "--expr",
        "t^alpha/alpha",
        "--alpha",
        "0.3",
        "--at",
        "2",
        "--order",
        "2",
    ]);
    assert!(number(&out.stdout).abs() < 1e-12);
}

#[test]
fn integrate_taylor_solve_and_ell() {
    let out = confrac(&[
        "integrate",
        "--expr",
        "1",
        "--alpha",
        "0.5",
        "--a",
        "0",
        "--b",
        "4",
    ]);
    assert_eq!((out.code, out.stdout.as_str()), (EXIT_OK, "4\n"));
    let out = confrac(&[
        "integrate",
        "--expr",
        "t",
        "--alpha",
        "1",
        "--a",
        "0",
        "--b",
        "1",
        "--tol",
        "1e-12",
    ]);
    assert_eq!(out.stdout, "0.5\n");

    let out = confrac(&[
        "taylor", "--expr", "exp(t)", "--alpha", "1", "--center", "0", "--degree", "4", "--at", "1",
    ]);
    assert!((number(&out.stdout) - 65.0 / 24.0).abs() < 1e-11);
    let out = confrac(&[
        "taylor",
        "--expr",
        "exp(t)",
        "--alpha",
        "1",
        "--center",
        "0",
        "--degree",
        "2",
        "--at",
        "1",
        "--remainder",
    ]);
    let lines: Vec<&str> = out.stdout.lines().collect();
    assert_eq!(lines.len(), 3);
    let rem = number(lines[1].strip_prefix("remainder ").unwrap());
    assert!((rem - (1f64.exp() - 2.5)).abs() < 1e-11);

    // D^2 y = 1 from zero data at 1 with alpha = 1/2: (span)^2 / 2 = 2 at t = 4.
    let out = confrac(&[
        "solve", "--order", "2", "--rhs", "1", "--alpha", "0.5", "--from", "1", "--to", "4",
    ]);
    assert!((number(&out.stdout) - 2.0).abs() < 1e-8, "{}", out.stdout);
    // y'' + 3y' + 2y = 0, y(0) = 1, y'(0) = 0.
    let out = confrac(&[
        "solve", "--order", "2", "--coeffs", "3;2", "--rhs", "0", "--alpha", "1", "--from", "0",
        "--to", "1", "--init", "1,0",
    ]);
    let want = 2.0 * (-1f64).exp() - (-2f64).exp();
    assert!((number(&out.stdout) - want).abs() < 1e-6);

    let out = confrac(&[
        "ell", "--g", "0.5", "--alpha", "0.5", "--a", "0", "--b", "1",
    ]);
    assert_eq!(out.stdout, "0.5\n");
}

#[test]
fn counterexample_json() {
    let mut args = COUNTEREXAMPLE.to_vec();
    args.push("--json");
    let out = confrac(&args);
    assert_eq!(out.code, EXIT_HYPOTHESIS);
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(
        keys,
        [
            "a",
            "actual",
            "alpha",
            "b",
            "holds",
            "hypotheses",
            "lower",
            "slack_high",
            "slack_low",
            "theorem",
            "upper"
        ]
    );
    assert_eq!(v["holds"], false);
    assert_eq!(v["actual"], -1.0);
    assert!((v["lower"].as_f64().unwrap() - (2f64.sqrt() - 2.0)).abs() < 1e-11);
    let hyp = &v["hypotheses"][0];
    assert_eq!(hyp["name"], "f >= 0");
    assert_eq!(hyp["verified"], false);
    assert!(hyp["witness"].is_number());
    assert!(v["hypotheses"][1]["witness"].is_null());
    // Sorted keys and 12 significant digits, byte for byte.
    assert!(out
        .stdout
        .starts_with(r#"{"a":0.0,"actual":-1.0,"alpha":0.5,"b":1.0,"holds":false,"#));
    assert!(out.stdout.contains(r#""lower":-0.585786437627,"#));
}

#[test]
fn text_and_csv_reports() {
    let base = [
        "check", "--ineq", "hh1", "--f", "exp(-t)", "--alpha", "1", "--a", "0", "--b", "1",
    ];
    let out = confrac(&base);
    assert_eq!(out.code, EXIT_OK);
    let first = out.stdout.lines().next().unwrap();
    let parts: Vec<&str> = first.split("  ").collect();
    assert_eq!(parts[0], "HOLDS");
    let values: Vec<f64> = parts[1].split(" ≤ ").map(number).collect();
    let mean = 1.0 - (-1f64).exp();
    assert!((values[0] - (-0.5f64).exp()).abs() < 1e-11);
    assert!((values[1] - mean).abs() < 1e-11);

    let mut csv = base.to_vec();
    csv.push("--csv");
    let out = confrac(&csv);
    let lines: Vec<&str> = out.stdout.lines().collect();
    assert_eq!(lines.len(), 2);
    assert_eq!(lines[0], CSV_HEADER.join(","));
    assert!(lines[1].starts_with("hh1,1,0,1,"));
    assert!(lines[1].ends_with(",true,true,"));

    let mut both = csv.clone();
    both.push("--json");
    assert_eq!(confrac(&both).code, EXIT_USAGE);
}

#[test]
fn sweep_rows_and_header() {
    let out = confrac(&[
        "sweep",
        "--ineq",
        "hh2",
        "--f",
        "exp(t)",
        "--alphas",
        "0.5:1.0:0.25",
        "--a",
        "0.5",
        "--b",
        "2",
    ]);
    assert_eq!(out.code, EXIT_OK);
    let lines: Vec<&str> = out.stdout.lines().collect();
    assert_eq!(lines.len(), 4);
    let alphas: Vec<&str> = lines[1..]
        .iter()
        .map(|l| l.split(',').nth(1).unwrap())
        .collect();
    assert_eq!(alphas, ["0.5", "0.75", "1"]);

    let out = confrac(&[
        "sweep",
        "--ineq",
        "hh2",
        "--f",
        "exp(t)",
        "--alphas",
        "0.5,1",
        "--windows",
        "0,1;1,3",
        "--json",
    ]);
    let rows: Vec<Value> = out
        .stdout
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(rows.len(), 4);
    assert_eq!(
        (rows[2]["a"].as_f64(), rows[2]["alpha"].as_f64()),
        (Some(1.0), Some(0.5))
    );
}

#[test]
fn sweep_survives_hypothesis_failures() {
    let out = confrac(&[
        "sweep",
        "--ineq",
        "steffensen",
        "--f",
        "1 - t^alpha",
        "--g",
        "1 - t",
        "--alphas",
        "0.1:1.0:0.1",
        "--a",
        "0",
        "--b",
        "1",
    ]);
    assert_eq!(out.stdout.lines().count(), 11);
    // Non-monotone f is rejected per instance, the batch still completes.
    let out = confrac(&[
        "sweep",
        "--ineq",
        "cebysev",
        "--f",
        "sin(3*t)",
        "--g",
        "t",
        "--alphas",
        "0.1:1.0:0.1",
        "--a",
        "0",
        "--b",
        "2",
    ]);
    assert_eq!(out.code, EXIT_HYPOTHESIS);
    let lines: Vec<&str> = out.stdout.lines().collect();
    assert_eq!(lines.len(), 11);
    assert!(lines[1..].iter().all(|l| l.contains(",false,false,")));
    // Bounds given in the wrong order.
    let out = confrac(&[
        "sweep", "--ineq", "hh3", "--f", "t", "--m", "2", "--M", "1", "--alphas", "0.5,1", "--a",
        "0", "--b", "1",
    ]);
    assert_eq!(out.code, EXIT_HYPOTHESIS);
    assert_eq!(out.stdout.lines().count(), 3);
}

#[test]
fn every_exit_code() {
    assert_eq!(
        confrac(&["deriv", "--expr", "t", "--alpha", "0.5", "--at", "4"]).code,
        EXIT_OK
    );

    // A narrow bump between the sample points passes the sampled hypothesis
    // |D f| <= M yet breaks the bound.
    let bump = "exp(-((t - 0.501953125)*10000)^2)";
    let out = confrac(&[
        "check",
        "--ineq",
        "ostrowski",
        "--f",
        bump,
        "--t",
        "0.501953125",
        "--M",
        "0.001",
        "--alpha",
        "1",
        "--a",
        "0",
        "--b",
        "1",
    ]);
    assert_eq!(out.code, EXIT_VIOLATED, "{}{}", out.stdout, out.stderr);
    assert!(out.stdout.starts_with("VIOLATED  "));

    assert_eq!(confrac(&COUNTEREXAMPLE).code, EXIT_HYPOTHESIS);
    let out = confrac(&["ell", "--g", "2", "--alpha", "0.5", "--a", "0", "--b", "1"]);
    assert_eq!(out.code, EXIT_HYPOTHESIS);
    let out = confrac(&[
        "check",
        "--ineq",
        "mm-bounds",
        "--f",
        "t",
        "--n",
        "0",
        "--m",
        "1",
        "--M",
        "1",
        "--alpha",
        "1",
        "--a",
        "0",
        "--b",
        "1",
    ]);
    assert_eq!(out.code, EXIT_HYPOTHESIS);

    let usage: [&[&str]; 10] = [
        &["deriv", "--alpha", "1.5", "--expr", "t", "--at", "1"],
        &["deriv", "--expr", "t +", "--alpha", "0.5", "--at", "1"],
        &["deriv", "--expr", "t", "--alpha", "abc", "--at", "1"],
        &[
            "integrate",
            "--expr",
            "t",
            "--alpha",
            "0.5",
            "--a",
            "2",
            "--b",
            "1",
        ],
        &["frobnicate"],
        &[],
        &[
            "check",
            "--ineq",
            "steffensen",
            "--f",
            "t",
            "--alpha",
            "0.5",
            "--a",
            "0",
            "--b",
            "1",
        ],
        &[
            "check", "--ineq", "nope", "--f", "t", "--alpha", "0.5", "--a", "0", "--b", "1",
        ],
        &[
            "sweep",
            "--ineq",
            "hh1",
            "--f",
            "t",
            "--alphas",
            "1:0.5:0.1",
            "--a",
            "0",
            "--b",
            "1",
        ],
        &[
            "solve", "--order", "2", "--coeffs", "1", "--rhs", "0", "--alpha", "1", "--from", "0",
            "--to", "1",
        ],
    ];
    for args in usage {
        let out = confrac(args);
        assert_eq!(out.code, EXIT_USAGE, "{args:?}: {}", out.stderr);
        assert_eq!(out.stderr.lines().count(), 1, "{args:?}: {}", out.stderr);
        assert!(out.stdout.is_empty());
    }

    let out = confrac(&[
        "deriv",
        "--expr",
        "sqrt(t - 1)",
        "--alpha",
        "1",
        "--at",
        "0.5",
    ]);
    assert_eq!(out.code, EXIT_NUMERIC, "{}", out.stderr);
    assert!(out.stderr.starts_with("confrac: numeric failure: "));
    let out = confrac(&[
        "sweep",
        "--ineq",
        "hh1",
        "--f",
        "sqrt(t - 1)",
        "--alphas",
        "1",
        "--a",
        "0",
        "--b",
        "1",
    ]);
    assert_eq!(out.code, EXIT_NUMERIC);

    let out = confrac(&["--help"]);
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.contains("sweep"));
}

#[test]
fn output_is_byte_identical_across_runs() {
    let cases: [&[&str]; 3] = [
        &COUNTEREXAMPLE,
        &[
            "sweep",
            "--ineq",
            "ostrowski",
            "--f",
            "sin(t)",
            "--t",
            "1",
            "--alphas",
            "0.1:1.0:0.1",
            "--a",
            "0.5",
            "--b",
            "2",
        ],
        &[
            "check", "--ineq", "jensen", "--w", "1 + t", "--g", "exp(-t)", "--F", "t^2", "--alpha",
            "0.7", "--a", "0", "--b", "2", "--json",
        ],
    ];
    for args in cases {
        assert_eq!(confrac(args), confrac(args));
    }
}

#[test]
fn binary_exit_status() {
    let out = Command::new(env!("CARGO_BIN_EXE_confrac"))
        .args(COUNTEREXAMPLE)
        .arg("--json")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(EXIT_HYPOTHESIS));
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        confrac(&[&COUNTEREXAMPLE[..], &["--json"]].concat()).stdout
    );
    let out = Command::new(env!("CARGO_BIN_EXE_confrac"))
        .args(["deriv", "--alpha", "2"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(EXIT_USAGE));
}
