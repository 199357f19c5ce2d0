//! End-to-end tests of the binary: worked-example output, format
//! contracts, determinism, and the exit-code contract.

use std::process::{Command, Output};

fn hookswap(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hookswap"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = hookswap(args);
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf-8 output")
}

const LAMBDA: &str = "12,10,10,9,9,8,7,7,5,5,4,4,3,2,2,2,1,1";
const MU: &str = "12,10,10,9,8,7,7,7,6,6,5,5,3,2,2,1,1";

#[test]
fn phi_prints_the_worked_example() {
    let out = stdout(&["phi", "--partition", LAMBDA, "--cell", "6,5"]);
    assert_eq!(out, format!("partition: {MU}\ncell: 4,7\n"));
}

#[test]
fn phi_applied_twice_restores_the_input() {
    let out = stdout(&["phi", "--partition", MU, "--cell", "4,7"]);
    assert_eq!(out, format!("partition: {LAMBDA}\ncell: 6,5\n"));
}

#[test]
fn phi_trace_emits_the_intermediates_in_order() {
    let out = stdout(&["phi", "--partition", LAMBDA, "--cell", "6,5", "--trace"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 6);

    let stages: Vec<serde_json::Value> = lines[..4]
        .iter()
        .map(|line| serde_json::from_str(line).expect("valid JSON"))
        .collect();
    assert_eq!(stages[0]["stage"], "decompose");
    assert_eq!(stages[0]["A"], "5,5,4,4,3,2,2,2,1,1");
    assert_eq!(stages[0]["B"], "2,1,1");
    assert_eq!(stages[0]["C"], "12,10,10,9");
    assert_eq!(stages[0]["D"], "6,6,6,6");
    assert_eq!(stages[0]["E"], "3");
    assert_eq!(stages[1]["stage"], "to_tilde");
    assert_eq!(stages[1]["At"], "5,3,1");
    assert_eq!(stages[1]["Ct"], "12,10,10,9,8,7,5");
    assert_eq!(stages[2]["stage"], "rho");
    assert_eq!(stages[2]["At"], "3,1");
    assert_eq!(stages[2]["B"], "3,2,2,1,1");
    assert_eq!(stages[2]["D"], "4,4,4,4,4,4");
    assert_eq!(
        (stages[2]["l"].as_u64(), stages[2]["m"].as_u64()),
        (Some(5), Some(3))
    );
    assert_eq!(stages[3]["stage"], "from_tilde");

    assert_eq!(lines[4], format!("partition: {MU}"));
    assert_eq!(lines[5], "cell: 4,7");
}

#[test]
fn phi_json_round_trips_through_the_encodings() {
    let out = stdout(&[
        "phi",
        "--partition",
        LAMBDA,
        "--cell",
        "6,5",
        "--format",
        "json",
    ]);
    let value: serde_json::Value = serde_json::from_str(&out).expect("valid JSON");
    assert_eq!(value["partition"], MU);
    assert_eq!(value["cell"], "4,7");

    let back = stdout(&[
        "phi",
        "--partition",
        value["partition"].as_str().unwrap(),
        "--cell",
        value["cell"].as_str().unwrap(),
    ]);
    assert_eq!(back, format!("partition: {LAMBDA}\ncell: 6,5\n"));
}

#[test]
fn stats_of_a_single_cell() {
    let out = stdout(&["stats", "--partition", "1", "--cell", "1,1"]);
    assert_eq!(out, "arm=0 leg=0 coarm=0 coleg=0 hook=1 part=1\n");

    let json = stdout(&[
        "stats",
        "--partition",
        "1",
        "--cell",
        "1,1",
        "--format",
        "json",
    ]);
    let value: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(value["hook"], 1);
    assert_eq!(value["part"], 1);
}

#[test]
fn table_is_deterministic_and_matches_the_known_distribution() {
    let first = stdout(&["table", "--n", "4", "--kind", "hp"]);
    let second = stdout(&["table", "--n", "4", "--kind", "hp"]);
    assert_eq!(first, second);

    let lines: Vec<&str> = first.lines().collect();
    assert_eq!(lines[0], "stat1\tstat2\tcount");
    assert_eq!(lines.len(), 16);
    assert!(lines.contains(&"1\t1\t3"));
    assert!(lines.contains(&"4\t2\t1"));
    assert!(!first.contains("3\t3"));

    let json = stdout(&["table", "--n", "4", "--kind", "hp", "--format", "json"]);
    let value: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(value["n"], 4);
    assert_eq!(value["kind"], "hp");
    assert_eq!(value["rows"].as_array().unwrap().len(), 15);
    let total: u64 = value["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|row| row["count"].as_u64().unwrap())
        .sum();
    assert_eq!(total, 20);
}

#[test]
fn table_with_three_statistics_has_a_third_column() {
    let out = stdout(&["table", "--n", "3", "--kind", "alm"]);
    assert_eq!(out.lines().next(), Some("stat1\tstat2\tstat3\tcount"));
}

#[test]
fn gf_coefficients_count_the_class() {
    let json = stdout(&[
        "gf", "--arm", "0", "--leg", "0", "--coarm", "0", "--degree", "6", "--format", "json",
    ]);
    let value: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(
        value["coefficients"],
        serde_json::json!([0, 1, 1, 2, 3, 5, 7])
    );

    let text = stdout(&[
        "gf", "--arm", "1", "--leg", "1", "--coarm", "1", "--degree", "5",
    ]);
    assert_eq!(text, "1*q^5\n");
}

#[test]
fn verify_passes_on_small_ranges() {
    let out = hookswap(&["verify", "--checks", "involution,symmetry", "--max-n", "10"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 2);
    assert!(lines[0].starts_with("PASS involution (n <= 10)"));
    assert!(lines[1].starts_with("PASS symmetry (n <= 10)"));
}

#[test]
fn exit_codes_follow_the_contract() {
    // Parse error in the partition: exit 2 naming the invariant.
    let out = hookswap(&["stats", "--partition", "3,5", "--cell", "1,1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("weakly decreasing"));

    // Cell outside the diagram: exit 2.
    let out = hookswap(&["stats", "--partition", "3,1", "--cell", "2,2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("outside the diagram"));

    // Statistic-sum mismatch: exit 2.
    let out = hookswap(&[
        "tau",
        "--partition",
        "4",
        "--cell",
        "1,1",
        "--to-arm",
        "1",
        "--to-coarm",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(2));

    // Usage error: exit 2 (clap).
    let out = hookswap(&["definitely-not-a-subcommand"]);
    assert_eq!(out.status.code(), Some(2));

    // Success: exit 0.
    let out = hookswap(&["stats", "--partition", "2,1", "--cell", "1,1"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn zeta_transports_between_classes() {
    let out = stdout(&[
        "zeta",
        "--partition",
        "4,3,1",
        "--cell",
        "2,1",
        "--to-arm",
        "0",
        "--to-leg",
        "3",
    ]);
    let lines: Vec<&str> = out.lines().collect();
    let partition = lines[0].strip_prefix("partition: ").unwrap();
    let cell = lines[1].strip_prefix("cell: ").unwrap();
    let check = stdout(&["stats", "--partition", partition, "--cell", cell]);
    assert!(check.starts_with("arm=0 leg=3"));
}
