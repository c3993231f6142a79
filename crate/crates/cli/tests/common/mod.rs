#![allow(dead_code)]

use std::path::PathBuf;
use std::process::{Command, Output};

pub fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_sphere-osc"))
}

pub fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("spawn sphere-osc")
}

pub fn run_env(args: &[&str], key: &str, value: &str) -> Output {
    bin().args(args).env(key, value).output().expect("spawn sphere-osc")
}

pub fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

pub fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

pub fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join("golden")
}

/// Invocations whose output is frozen under `tests/golden`.
pub const GOLDEN_CASES: &[(&str, &[&str])] = &[
    (
        "spectrum_free_n2.csv",
        &[
            "spectrum", "--dim", "2", "--w1", "0", "--w2", "0", "--nmax", "1", "--lmax", "1",
        ],
    ),
    (
        "spectrum_n3_equal.json",
        &[
            "spectrum", "--dim", "3", "--w1", "2", "--w2", "2", "--nmax", "0", "--lmax", "0", "--format", "json",
        ],
    ),
    (
        "spectrum_physical.csv",
        &[
            "spectrum", "--dim", "4", "--radius", "2", "--mass", "0.5", "--hbar", "1.5", "--omega1", "0.3", "--omega2",
            "0.1", "--nmax", "2", "--lmax", "1",
        ],
    ),
    (
        "wavefunction_n3.csv",
        &[
            "wavefunction",
            "--dim",
            "3",
            "--w1",
            "2",
            "--w2",
            "5",
            "--n",
            "2",
            "--l",
            "1",
            "--points",
            "13",
        ],
    ),
    (
        "wavefunction_projected_n2.csv",
        &[
            "wavefunction",
            "--dim",
            "2",
            "--w1",
            "1",
            "--n",
            "1",
            "--l",
            "-1",
            "--points",
            "9",
            "--projected",
        ],
    ),
    (
        "verify_free_ground.csv",
        &["verify", "--dim", "2", "--levels", "0", "--lmax", "0"],
    ),
    (
        "verify_n5.json",
        &[
            "verify", "--dim", "5", "--w1", "5", "--w2", "2", "--levels", "2", "--lmax", "1", "--format", "json",
        ],
    ),
    (
        "euclid_n3.csv",
        &["euclid-limit", "--dim", "3", "--n", "1", "--l", "1", "--chi", "0.5"],
    ),
];
