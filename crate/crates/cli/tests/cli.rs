use std::process::{Command, Output};

use galois_param_core::extensions::ExtensionDescriptor;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_galois-param")).args(args).output().expect("binary runs")
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().expect("exit code")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn exit_codes_follow_the_verdict() {
    // non-square discriminant: not parametric
    assert_eq!(code(&["case", "prop31", "1", "0", "1"]), 2);
    assert_eq!(code(&["case", "prop31", "1", "0", "-1"]), 0);
    assert_eq!(code(&["check", "--criterion", "ramvar", "--e1", "th.json", "--e2", "baby.json"]), 0);
    assert_eq!(code(&["check", "--criterion", "ih", "--e1", "morse5", "--e2", "morse5"]), 2);
    assert_eq!(code(&["check", "--criterion", "ic3", "--e1", "trinomial_s5", "--e2", "morse5"]), 0);
    // over an abstract hilbertian field IC3 does not apply
    assert_eq!(code(&["check", "--criterion", "ic3", "--e1", "j2", "--e2", "morse5"]), 3);
}

#[test]
fn usage_errors_exit_64() {
    assert_eq!(code(&["frobnicate"]), 64);
    assert_eq!(code(&["case", "no_such_case"]), 64);
    assert_eq!(code(&["build", "sqrt", "[1,2"]), 64);
    assert_eq!(code(&["specialize", "morse5", "--t0", "1/0"]), 64);
    assert_eq!(code(&["check", "--criterion", "ic1", "--e1", "/nonexistent.json", "--e2", "morse5"]), 64);
    assert_eq!(code(&["--help"]), 0);
}

#[test]
fn built_descriptors_round_trip() {
    let dir = std::env::temp_dir().join(format!("galois-param-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let builds: [&[&str]; 5] = [
        &["build", "sqrt", r#"["0","1"]"#],
        &["build", "trinomial", "--n", "5", "--m", "2"],
        &["build", "morse", r#"["0","1","0","0","0","1"]"#],
        &["build", "cyclotomic", "--n", "7"],
        &["build", "fixture", "j2"],
    ];
    for (i, args) in builds.iter().enumerate() {
        let text = stdout(args);
        let e = ExtensionDescriptor::parse_json(&text).unwrap();
        let path = dir.join(format!("e{i}.json"));
        std::fs::write(&path, &text).unwrap();
        let again = stdout(&["build", "manual", path.to_str().unwrap()]);
        assert_eq!(ExtensionDescriptor::parse_json(&again).unwrap(), e, "{args:?}");
    }
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn every_fixture_is_listed_and_loads() {
    let names = stdout(&["build", "fixture"]);
    assert!(names.lines().count() >= 20);
    for name in names.lines() {
        ExtensionDescriptor::parse_json(&stdout(&["build", "fixture", name])).unwrap();
    }
}

#[test]
fn specialize_reports_the_quadratic_field() {
    let out = stdout(&["--format", "json", "specialize", "sqrt_t2_plus_1", "--t0", "3"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["quadratic_kernel"], "10");
    let text = stdout(&["specialize", "cubic", "--t0", "2"]);
    assert!(text.contains("real roots: 1"), "{text}");
}

#[test]
fn group_commands() {
    let out = stdout(&["--format", "json", "group", "classes", "S4"]);
    let rows: Vec<serde_json::Value> = serde_json::from_str(&out).unwrap();
    assert_eq!(rows.len(), 5);
    assert_eq!(rows.iter().map(|r| r["size"].as_u64().unwrap()).sum::<u64>(), 24);
    assert_eq!(code(&["group", "cor53", "S4"]), 0);
    assert_eq!(code(&["group", "cor53", "Z8"]), 2);
}

#[test]
fn primes_census_of_phi5() {
    let out = stdout(&["--format", "json", "primes", r#"["1","1","1","1","1"]"#, "--bound", "100"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let divisors: Vec<u64> = v["divisors"].as_array().unwrap().iter().map(|x| x.as_u64().unwrap()).collect();
    assert_eq!(divisors, vec![5, 11, 31, 41, 61, 71]);
}

#[test]
fn all_case_studies_pass() {
    let out = run(&["case", "all"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
}
