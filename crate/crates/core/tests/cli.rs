use littlewood::cli::{run, EXIT_FAIL, EXIT_OK, EXIT_USAGE};
use serde_json::Value;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn invoke_with_stdin(args: &[&str], stdin: &str) -> Run {
    let mut input = stdin.as_bytes();
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("littlewood").chain(args.iter().copied());
    let code = run(argv, &mut input, &mut out, &mut err);
    Run {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

fn invoke(args: &[&str]) -> Run {
    invoke_with_stdin(args, "")
}

fn json(r: &Run) -> Value {
    serde_json::from_str(&r.stdout).unwrap_or_else(|e| panic!("{e}: {}", r.stdout))
}

/// CSV body without the `#` preamble line.
fn csv_rows(r: &Run) -> Vec<Vec<String>> {
    r.stdout
        .lines()
        .filter(|l| !l.starts_with('#'))
        .map(|l| l.split(',').map(str::to_string).collect())
        .collect()
}

#[test]
fn verify_theorems_passes_small_range() {
    let r = invoke(&["verify-theorems", "--max-n", "12"]);
    assert_eq!(r.code, EXIT_OK, "{}", r.stderr);
    let rows = csv_rows(&r);
    assert_eq!(rows[0].last().unwrap(), "status");
    assert!(rows[1..].iter().all(|row| row.last().unwrap() == "PASS"));
    // 11 + 5 + 11 + 6 classes
    assert_eq!(rows.len() - 1, 33);
}

#[test]
fn verify_theorems_parity_filter() {
    let r = invoke(&["verify-theorems", "--class", "skew", "--max-n", "12"]);
    assert_eq!(r.code, EXIT_OK);
    let ns: Vec<String> = csv_rows(&r)[1..].iter().map(|row| row[1].clone()).collect();
    assert_eq!(ns, ["3", "5", "7", "9", "11"]);
}

#[test]
fn verify_theorems_guardrail() {
    let r = invoke(&["verify-theorems", "--max-n", "10^9"]);
    assert_eq!(r.code, EXIT_USAGE);
    assert!(r.stderr.contains("1000000000"), "{}", r.stderr);
}

#[test]
fn verify_identities_full_range() {
    let r = invoke(&["verify-identities", "--max-n", "10000"]);
    assert_eq!(r.code, EXIT_OK, "{}", r.stdout);
    let rows = csv_rows(&r);
    assert_eq!(rows.len() - 1, 11);
}

#[test]
fn verify_identities_single_odd_identity() {
    let r = invoke(&["verify-identities", "--id", "7", "--max-n", "99", "--format", "json"]);
    assert_eq!(r.code, EXIT_OK);
    let v = json(&r);
    assert_eq!(v["rows"].as_array().unwrap().len(), 1);
    assert_eq!(v["rows"][0]["n_checked"], 49);
}

#[test]
fn verify_identities_rejects_unknown_id() {
    let r = invoke(&["verify-identities", "--id", "11"]);
    assert_eq!(r.code, EXIT_USAGE);
}

#[test]
fn sample_is_deterministic() {
    let args = [
        "sample", "--class", "all", "--n", "101", "--samples", "100000", "--seed", "42",
        "--no-timestamp",
    ];
    let a = invoke(&args);
    let b = invoke(&args);
    assert_eq!(a.code, EXIT_OK);
    assert_eq!(a.stdout, b.stdout);
    let v = json(&a);
    assert_eq!(v["seed"], 42);
    assert!(v["version"].as_str().unwrap().starts_with("littlewood "));
    assert_eq!(v["method"], "monte-carlo");
    assert!(v.get("generated_unix").is_none());
    assert!(v.get("wall_time_ms").is_none());
    let with_time = invoke(&args[..args.len() - 1]);
    assert!(json(&with_time).get("generated_unix").is_some());
}

#[test]
fn sample_without_seed_reports_the_generated_one() {
    let r = invoke(&["sample", "--class", "reciprocal", "--n", "20", "--samples", "1000"]);
    assert_eq!(r.code, EXIT_OK);
    let seed = json(&r)["seed"].as_u64().unwrap();
    assert!(r.stderr.contains(&seed.to_string()));
}

#[test]
fn sample_output_independent_of_threads() {
    let base = [
        "sample", "--class", "skew", "--n", "61", "--samples", "20000", "--seed", "9",
        "--no-timestamp", "--format", "csv",
    ];
    let one = invoke(&[&base[..], &["--threads", "1"]].concat());
    let three = invoke(&[&base[..], &["--threads", "3"]].concat());
    assert_eq!(one.stdout, three.stdout);
    let rows = csv_rows(&one);
    assert_eq!(
        rows[0],
        ["class", "n", "method", "mean_num", "mean_den", "var_num", "var_den", "samples", "seed"]
    );
    assert_eq!(rows[1][8], "9");
}

#[test]
fn parity_errors_are_usage_errors() {
    let r = invoke(&["sample", "--class", "skew", "--n", "10", "--seed", "1"]);
    assert_eq!(r.code, EXIT_USAGE);
    assert!(r.stderr.contains("odd"), "{}", r.stderr);
}

#[test]
fn search_matches_enumeration() {
    let r = invoke(&["search", "--class", "all", "--n", "13", "--no-timestamp"]);
    assert_eq!(r.code, EXIT_OK);
    let v = json(&r);
    // brute-force oracle
    let mut best = u64::MAX;
    for bits in 0u64..(1 << 13) {
        let coeffs: Vec<i8> = (0..13).map(|j| if bits >> j & 1 == 1 { -1 } else { 1 }).collect();
        let mut s = 169u64;
        for u in 1..13usize {
            let c: i64 = (0..u).map(|j| (coeffs[j] * coeffs[j + 13 - u]) as i64).sum();
            s += 2 * (c * c) as u64;
        }
        best = best.min(s);
    }
    assert_eq!(v["min"], best);
    assert_eq!(v["best_merit_factor"], "169/12");
    assert_eq!(v["class"], "all");
    assert_eq!(v["witnesses"].as_array().unwrap().len(), 1);
}

#[test]
fn search_guardrail() {
    let r = invoke(&["search", "--class", "all", "--n", "40"]);
    assert_eq!(r.code, EXIT_USAGE);
}

#[test]
fn crosscheck_reports_small_error() {
    let r = invoke(&["crosscheck", "--n", "256", "--count", "100", "--seed", "7"]);
    assert_eq!(r.code, EXIT_OK);
    let v = json(&r);
    assert!(v["max_rel_err_l4"].as_f64().unwrap() <= 1e-9);
    assert_eq!(v["seed"], 7);
    assert_eq!(v["pass"], true);
}

#[test]
fn norm_from_argument_and_stdin() {
    let r = invoke(&["norm", "+++-"]);
    assert_eq!(r.code, EXIT_OK);
    assert_eq!(
        r.stdout.trim(),
        r#"{"n":4,"seq":"+++-","c":[-1,0,1],"sum_c_sq":2,"norm4_fourth":20,"merit_factor":"4/1"}"#
    );
    let r = invoke_with_stdin(&["norm"], "++\n+++\n\n");
    let lines: Vec<Value> = r.stdout.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 2);
    assert_eq!(lines[0]["norm4_fourth"], 6);
    assert_eq!(lines[1]["norm4_fourth"], 19);
    let bad = invoke(&["norm", "++x"]);
    assert_eq!(bad.code, EXIT_USAGE);
}

#[test]
fn scan_emits_csv_with_seed_preamble() {
    let r = invoke(&[
        "scan", "--class", "all", "--n-list", "31,61", "--samples", "2000", "--seed", "4",
        "--no-timestamp",
    ]);
    assert_eq!(r.code, EXIT_OK, "{}", r.stderr);
    let first = r.stdout.lines().next().unwrap();
    assert!(first.starts_with("# littlewood ") && first.ends_with("seed=4"), "{first}");
    assert_eq!(csv_rows(&r).len(), 3);
}

#[test]
fn moments_command_methods_agree() {
    let e = json(&invoke(&["moments", "--class", "negrecip", "--n", "10", "--no-timestamp"]));
    let f = json(&invoke(&[
        "moments", "--class", "negrecip", "--n", "10", "--method", "formula", "--no-timestamp",
    ]));
    let p = json(&invoke(&[
        "moments", "--class", "negrecip", "--n", "10", "--method", "prop1", "--no-timestamp",
    ]));
    assert_eq!(e["mean_num"], f["mean_num"]);
    assert_eq!(e["var_num"], f["var_num"]);
    assert_eq!(p["mean"], format!("{}/1", e["mean_num"].as_str().unwrap()));
}

#[test]
fn output_file_and_unwritable_path() {
    let dir = std::env::temp_dir().join(format!("littlewood-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("search.json");
    let r = invoke(&[
        "search", "--class", "reciprocal", "--n", "9", "--no-timestamp", "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(r.code, EXIT_OK);
    assert!(r.stdout.is_empty());
    let written: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(written["class"], "reciprocal");
    std::fs::remove_dir_all(&dir).unwrap();

    let r = invoke(&[
        "search", "--class", "all", "--n", "4", "--output", "/nonexistent-dir/x/out.json",
    ]);
    assert_eq!(r.code, EXIT_USAGE);
}

#[test]
fn failing_crosscheck_would_exit_one() {
    // exit codes are distinct constants
    assert_ne!(EXIT_FAIL, EXIT_OK);
    assert_ne!(EXIT_FAIL, EXIT_USAGE);
}
