//! End-to-end checks of the command layer and the built binary: format
//! round-trips, exact string reproduction, and error paths.

use std::process::Command;

use gamma_asymp::exact::{rat, Rational};
use gamma_asymp::families::laplace_coeffs;

use gamma_asymp_cli::commands::{self, CommonOpts, PairMode};
use gamma_asymp_cli::output::{Cell, Format, OutputDocument};

const OPTS: CommonOpts = CommonOpts {
    precision: 120,
    max_order: 64,
    float_pairs: false,
};

/// Minimal CSV reader for the round-trip checks (handles quoted fields
/// with doubled quotes).
fn parse_csv(text: &str) -> Vec<Vec<String>> {
    let mut rows = Vec::new();
    for line in text.lines() {
        let mut fields = Vec::new();
        let mut chars = line.chars().peekable();
        loop {
            let mut field = String::new();
            if chars.peek() == Some(&'"') {
                chars.next();
                loop {
                    match chars.next() {
                        Some('"') if chars.peek() == Some(&'"') => {
                            chars.next();
                            field.push('"');
                        }
                        Some('"') => break,
                        Some(c) => field.push(c),
                        None => panic!("unterminated quoted field"),
                    }
                }
            } else {
                while let Some(&c) = chars.peek() {
                    if c == ',' {
                        break;
                    }
                    field.push(c);
                    chars.next();
                }
            }
            fields.push(field);
            match chars.next() {
                Some(',') => continue,
                None => break,
                Some(other) => panic!("unexpected character {other:?} after field"),
            }
        }
        rows.push(fields);
    }
    rows
}

fn json_rows(doc: &OutputDocument) -> Vec<Vec<String>> {
    let parsed: serde_json::Value = serde_json::from_str(&doc.render(Format::Json)).unwrap();
    parsed["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|row| {
            doc.headers
                .iter()
                .map(|h| row[h].as_str().unwrap().to_string())
                .collect()
        })
        .collect()
}

fn assert_csv_json_agree(doc: &OutputDocument) {
    let csv = parse_csv(&doc.render(Format::Csv));
    assert_eq!(csv[0], doc.headers, "csv header row");
    let csv_data: Vec<Vec<String>> = csv[1..].to_vec();
    assert_eq!(csv_data, json_rows(doc), "csv and json values differ");
}

#[test]
fn coeffs_round_trip_exactly() {
    let doc = commands::cmd_coeffs("laplace", 6, &OPTS).unwrap();
    assert_csv_json_agree(&doc);
    // parsing the emitted strings recovers the generator's rationals
    let generated = laplace_coeffs(6);
    for (n, row) in doc.rows.iter().enumerate() {
        let parsed: Rational = row[1].value().parse().unwrap();
        assert_eq!(&parsed, generated.coeff(n), "coefficient {n}");
    }
    // rendering is deterministic
    let again = commands::cmd_coeffs("laplace", 6, &OPTS).unwrap();
    assert_eq!(doc.render(Format::Markdown), again.render(Format::Markdown));
}

#[test]
fn coeffs_rejects_unknown_family_and_large_order() {
    assert!(commands::cmd_coeffs("lanczos", 4, &OPTS).is_err());
    assert!(commands::cmd_coeffs("laplace", 65, &OPTS).is_err());
    assert!(commands::cmd_coeffs("stirling_log", 0, &OPTS).is_err());
}

#[test]
fn coeffs_shifted_family_examples() {
    let doc = commands::cmd_coeffs("nemes_shifted", 4, &OPTS).unwrap();
    let md = doc.render(Format::Markdown);
    assert!(md.contains("| 4 | -257/207360 |"));

    let doc = commands::cmd_coeffs("central_binomial_shifted", 4, &OPTS).unwrap();
    let rows = json_rows(&doc);
    assert_eq!(rows[1][1], "0");
    assert_eq!(rows[3][1], "0");
    assert_eq!(rows[4][1], "21/8192");
}

#[test]
fn pairs_exact_contains_the_printed_fractions() {
    let doc = commands::cmd_pairs(3, PairMode::Exact, &OPTS).unwrap();
    assert_csv_json_agree(&doc);
    let md = doc.render(Format::Markdown);
    assert!(md.contains("570984637359867601981/2288928529497568067550"));
    // v_0 is an empty cell, not a zero
    assert_eq!(doc.rows[0][2], Cell::Empty);
}

#[test]
fn pairs_decimal_matches_the_fifteen_digit_listing() {
    let doc = commands::cmd_pairs(5, PairMode::Decimal, &OPTS).unwrap();
    let rows = json_rows(&doc);
    assert_eq!(rows[0][1], "1.000000000000000");
    assert_eq!(rows[5][1], "0.001199164540953");
    // the printed listing truncates where rounding bumps the last digit
    assert!(rows[4][2].starts_with("0.24983989241019"));
}

#[test]
fn pairs_zero_index_has_g0_only() {
    let doc = commands::cmd_pairs(0, PairMode::Exact, &OPTS).unwrap();
    let rows = json_rows(&doc);
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0], vec!["0", "1", ""]);
}

#[test]
fn pairs_beyond_exact_range_needs_float_mode() {
    assert!(commands::cmd_pairs(9, PairMode::Exact, &OPTS).is_err());
    assert!(commands::cmd_pairs(9, PairMode::Decimal, &OPTS).is_err());
    let float_opts = CommonOpts {
        float_pairs: true,
        ..OPTS
    };
    let doc = commands::cmd_pairs(9, PairMode::Decimal, &float_opts).unwrap();
    let rows = json_rows(&doc);
    assert_eq!(rows.len(), 10);
    // the float continuation reproduces the exact-range values
    assert_eq!(rows[5][2], "0.249958497082160");
    assert!(rows[9][2].starts_with("0.24999"));
}

#[test]
fn conjecture_lists_decreasing_distances() {
    let doc = commands::cmd_conjecture(7, 10, &OPTS).unwrap();
    assert_csv_json_agree(&doc);
    let rows = json_rows(&doc);
    assert_eq!(rows[6][1], "0.2499963289");
    assert_eq!(rows[1][1], "0.2459113026");
    let distances: Vec<f64> = rows.iter().map(|r| r[2].parse().unwrap()).collect();
    for m in 1..6 {
        assert!(
            distances[m + 1] < distances[m],
            "distance not decreasing at m={}",
            m + 1
        );
    }
    assert!(commands::cmd_conjecture(1, 10, &OPTS).is_err());
    assert!(commands::cmd_conjecture(9, 10, &OPTS).is_err());
}

#[test]
fn eval_reports_cell_and_raw_value() {
    let doc = commands::cmd_eval("nemes_shifted", 2, "100", 30, &OPTS).unwrap();
    let rows = json_rows(&doc);
    let row = &rows[0];
    assert_eq!(row[5], "+");
    assert_eq!(row[6], "10.1");
    assert!(row[4].starts_with("10.05"));
    assert_eq!(row[4].replace(['.', '-'], "").len(), 30);

    let doc = commands::cmd_eval("laplace", 2, "100", 30, &OPTS).unwrap();
    assert_eq!(json_rows(&doc)[0][6], "8.6");

    // smoke case: small argument still yields finite values
    let doc = commands::cmd_eval("laplace", 1, "1", 15, &OPTS).unwrap();
    let rows = json_rows(&doc);
    assert!(rows[0][3].parse::<f64>().is_ok());
    assert!(rows[0][4].parse::<f64>().is_ok());
}

#[test]
fn eval_rejects_bad_input() {
    assert!(commands::cmd_eval("laplace", 2, "1e3", 10, &OPTS).is_err());
    assert!(commands::cmd_eval("unknown", 2, "100", 10, &OPTS).is_err());
    assert!(commands::cmd_eval("stirling", 3, "100", 10, &OPTS).is_err());
    assert!(commands::cmd_eval("laplace", 2, "0.5", 10, &OPTS).is_err());
}

#[test]
fn table2_flags_the_ambiguous_cell() {
    let doc = commands::cmd_table2(&OPTS).unwrap();
    assert_csv_json_agree(&doc);
    assert_eq!(doc.notes.len(), 1);
    assert!(doc.notes[0].contains("x=10000"));
    assert!(doc.notes[0].contains("magnitude-only"));
    let parsed: serde_json::Value = serde_json::from_str(&doc.render(Format::Json)).unwrap();
    assert!(parsed["notes"][0].as_str().unwrap().contains("x=10000"));
    // determinism across runs
    let again = commands::cmd_table2(&OPTS).unwrap();
    assert_eq!(doc.render(Format::Csv), again.render(Format::Csv));
}

#[test]
fn binary_emits_csv() {
    let output = Command::new(env!("CARGO_BIN_EXE_gamma-asymp"))
        .args(["coeffs", "laplace", "2", "--format", "csv"])
        .output()
        .expect("binary runs");
    assert!(output.status.success());
    let stdout = String::from_utf8(output.stdout).unwrap();
    assert_eq!(stdout, "n,coefficient\n0,1\n1,\"1/12\"\n2,\"1/288\"\n");
}

#[test]
fn binary_writes_to_file_and_honors_env() {
    let dir = std::env::temp_dir().join("gamma-asymp-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("pairs.json");
    let output = Command::new(env!("CARGO_BIN_EXE_gamma-asymp"))
        .args(["pairs", "2", "--out", path.to_str().unwrap()])
        .env("GAMMA_ASYMP_FORMAT", "json")
        .output()
        .expect("binary runs");
    assert!(output.status.success());
    let contents = std::fs::read_to_string(&path).unwrap();
    let parsed: serde_json::Value = serde_json::from_str(&contents).unwrap();
    assert_eq!(parsed["command"], "pairs");
    assert_eq!(parsed["rows"][2]["v_n"], "1792627/7289730");
    std::fs::remove_file(&path).ok();
}

#[test]
fn binary_reports_errors_on_stderr() {
    let output = Command::new(env!("CARGO_BIN_EXE_gamma-asymp"))
        .args(["coeffs", "spouge", "4"])
        .output()
        .expect("binary runs");
    assert!(!output.status.success());
    let stderr = String::from_utf8(output.stderr).unwrap();
    assert!(stderr.contains("unknown coefficient family"));
}

#[test]
fn rationals_survive_the_csv_quoting() {
    let v1 = rat(23, 90);
    let doc = commands::cmd_pairs(1, PairMode::Exact, &OPTS).unwrap();
    let csv = parse_csv(&doc.render(Format::Csv));
    let parsed: Rational = csv[2][2].parse().unwrap();
    assert_eq!(parsed, v1);
}
