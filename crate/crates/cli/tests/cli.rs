use std::process::{Command, Output};

fn adideal(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_adideal"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = adideal(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn orbit_of_2_2() {
    let out = stdout(&["orbit", "[2,2]", "--rank", "3"]);
    assert!(out.contains("lambda     [2,2]"), "{out}");
    assert!(out.contains("sequences  (1,3)(2,4)"), "{out}");
    assert!(out.contains("agrees"), "{out}");
}

#[test]
fn a3_class_sizes() {
    let csv = stdout(&["classes", "3", "--format", "csv"]);
    let sizes: Vec<&str> = csv.lines().skip(1).map(|l| l.split(',').nth(1).unwrap()).collect();
    assert_eq!(sizes, ["1", "5", "2", "5", "1"]);
}

#[test]
fn convert_round_trip() {
    let out = stdout(&["convert", "11001100", "--format", "csv"]);
    assert_eq!(out, "ideal,ballot,rank,valleys,max_height\n\"[2,2]\",11001100,3,1,2\n");
    let out = stdout(&["convert", "[2,2]", "--rank", "3", "--format", "csv"]);
    assert_eq!(out, "ideal,ballot,rank,valleys,max_height\n\"[2,2]\",11001100,3,1,2\n");
    let out = stdout(&["convert", "-", "--rank", "2", "--format", "csv"]);
    assert!(out.ends_with("-,111000,2,0,3\n"), "{out}");
}

#[test]
fn normalize_trace_replays() {
    let out = stdout(&["normalize", "[2,5],[3,6],[6,7]", "--rank", "8"]);
    let moves: Vec<adideal::Move> = out
        .lines()
        .filter(|l| !l.starts_with('#'))
        .map(|l| l.parse().unwrap())
        .collect();
    let start = adideal::RootIdeal::parse("[2,5],[3,6],[6,7]", adideal::Rank(8)).unwrap();
    let path = adideal::moves::replay(&start, &moves).unwrap();
    assert!(path.last().unwrap().is_parabolic());
}

#[test]
fn table2_json_has_margins() {
    let json: serde_json::Value = serde_json::from_str(&stdout(&["table2", "6", "--format", "json"])).unwrap();
    assert_eq!(json["total"], 429);
    assert_eq!(json["rows"]["1"]["0"], 1);
    assert_eq!(json["column_sums"]["0"], 1);
    assert_eq!(json["antidiagonal"].as_array().unwrap().len(), 7);
}

#[test]
fn output_independent_of_jobs() {
    for args in [["table1", "3..7"], ["classes", "7"], ["kreweras", "7"]] {
        let one = stdout(&[args[0], args[1], "--jobs", "1", "--format", "json"]);
        let many = stdout(&[args[0], args[1], "--jobs", "4", "--format", "json"]);
        assert_eq!(one, many, "{args:?}");
    }
}

#[test]
fn verify_passes_small_ranks() {
    let out = adideal(&["verify", "5", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().skip(1).all(|l| l.ends_with(",ok")));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["frobnicate"][..],
        &["orbit", "[2,2]"],
        &["orbit", "[9,9]", "--rank", "3"],
        &["convert", "[1,1]"],
        &["table1", "6..3"],
        &["enumerate", "13"],
        &["poset", "-", "--rank", "9"],
        &["orbit", "[1,1]", "--rank", "2", "--prime", "15"],
    ] {
        assert_eq!(adideal(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn poset_invariants() {
    let out = stdout(&["poset", "[2,2]", "--rank", "3"]);
    assert!(out.contains("graph edges        1-2 3-4"), "{out}");
    assert!(out.contains("chromatic          2"), "{out}");
}

#[test]
fn pairs_total_is_catalan() {
    let csv = stdout(&["pairs", "5", "--format", "csv"]);
    let total: u64 = csv
        .lines()
        .skip(1)
        .map(|l| l.rsplit(',').next().unwrap().parse::<u64>().unwrap())
        .sum();
    assert_eq!(total, 132);
}
