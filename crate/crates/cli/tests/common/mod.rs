#![allow(dead_code)]

use std::path::PathBuf;
use std::process::Command;

/// (golden name, arguments, documented exit code). Arguments are relative
/// to `tests/fixtures`.
pub const CASES: &[(&str, &[&str], i32)] = &[
    ("factor_ok", &["factor", "images_swap.json"], 0),
    (
        "factor_json",
        &["--format", "json", "factor", "images_swap.json"],
        0,
    ),
    (
        "factor_not_rank_one",
        &["factor", "images_not_rank_one.json"],
        2,
    ),
    (
        "factor_not_positive",
        &["factor", "images_not_positive.json"],
        3,
    ),
    (
        "factor_not_positive_json",
        &["--format", "json", "factor", "images_not_positive.json"],
        3,
    ),
    (
        "factor_not_atom_column",
        &["factor", "images_not_atom_column.json"],
        4,
    ),
    (
        "factor_not_injective",
        &["factor", "images_not_injective.json"],
        5,
    ),
    (
        "factor_inconsistent_scaling",
        &["factor", "images_inconsistent_scaling.json"],
        6,
    ),
    (
        "factor_not_multiplicative",
        &["factor", "images_not_multiplicative.json"],
        7,
    ),
    ("factor_malformed", &["factor", "images_malformed.json"], 1),
    (
        "factor_incomplete",
        &["factor", "images_incomplete.json"],
        1,
    ),
    ("norm_ok", &["norm", "op_norm.json"], 0),
    ("norm_shifted", &["norm", "op_shifted.json"], 0),
    ("norm_parse_error", &["norm", "op_truncated_text.json"], 1),
    ("modulus_ok", &["modulus", "op_mixed.json"], 0),
    ("modulus_parse_error", &["modulus", "op_zero_den.json"], 1),
    ("apply_ok", &["apply", "op_mixed.json", "vec.json"], 0),
    (
        "apply_parse_error",
        &["apply", "op_mixed.json", "vec_malformed.json"],
        1,
    ),
    ("truncate_ok", &["truncate", "op_mixed.json", "a", "c"], 0),
    (
        "truncate_parse_error",
        &["truncate", "op_duplicate.json", "a"],
        1,
    ),
    ("check_positive_ok", &["check-positive", "op_unit.json"], 0),
    (
        "check_positive_negative",
        &["check-positive", "op_negative.json"],
        0,
    ),
    (
        "check_positive_missing",
        &["check-positive", "missing.json"],
        9,
    ),
    ("lex_dual_bounded", &["lex-dual", "5", "0", "0"], 0),
    (
        "lex_dual_unbounded",
        &["lex-dual", "--witness-bound", "1000000", "0", "1"],
        0,
    ),
    (
        "lex_dual_negative",
        &[
            "--format",
            "json",
            "lex-dual",
            "--witness-bound",
            "5",
            "0",
            "0",
            "-2",
        ],
        0,
    ),
    ("lex_dual_parse_error", &["lex-dual", "1/0", "2"], 1),
    (
        "same_inner_true",
        &["same-inner", "op_double_shear.json", "op_shear.json"],
        0,
    ),
    (
        "same_inner_false",
        &[
            "same-inner",
            "op_shifted.json",
            "op_shear.json",
            "--probe",
            "a,b",
        ],
        0,
    ),
    (
        "same_inner_not_invertible",
        &["same-inner", "op_unit.json", "op_shear.json"],
        8,
    ),
];

pub fn fixtures_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures")
}

pub fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(format!("{name}.txt"))
}

/// Runs the binary from the fixtures directory; returns (stdout, exit code).
pub fn run_cli(args: &[&str]) -> (Vec<u8>, i32) {
    let output = Command::new(env!("CARGO_BIN_EXE_atomlat"))
        .current_dir(fixtures_dir())
        .args(args)
        .output()
        .expect("failed to spawn atomlat");
    (
        output.stdout,
        output.status.code().expect("exited by signal"),
    )
}
