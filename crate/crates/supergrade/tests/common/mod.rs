#![allow(dead_code)]

use std::path::PathBuf;
use std::process::{Command, Output};

pub fn fixtures() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures")
}

/// Runs the binary inside the fixture directory so relative paths, and hence
/// report contents, do not depend on where the checkout lives.
pub fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_supergrade")).args(args).current_dir(fixtures()).output().expect("binary runs")
}

pub fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

pub fn stdout_json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("stdout is not JSON ({e}): {}", String::from_utf8_lossy(&o.stdout)))
}

/// Every fixture-driven invocation with its expected exit code. Commands that
/// write files use `--out` paths under `out/`.
pub const RUNS: &[(&[&str], i32)] = &[
    (&["check", "minimal.sca"], 0),
    (&["check", "sl2.sca"], 0),
    (&["check", "m11.sca"], 0),
    (&["check", "broken_jacobi.sca"], 1),
    (&["check", "bad_rational.sca"], 2),
    (&["h2", "psl22.sca"], 0),
    (&["h2", "psl33.sca", "--out", "out/h2_psl33.json"], 0),
    (&["h2", "sl21.sca"], 0),
    (&["decompose", "psl22.sca", "--cartan", "@psl22.cartan"], 0),
    (&["decompose", "psl33.sca", "--cartan", "@psl33.cartan", "--out", "out/roots_psl33.json"], 0),
    (&["verify-grading", "slA33_field.sca", "--cover", "sl33"], 0),
    (&["verify-grading", "slA33_dual.sca", "--cover", "sl33"], 0),
    (&["verify-grading", "slA33_grassmann1.sca", "--cover", "sl33", "--out", "out/grading.json"], 0),
    (&["verify-grading", "slA33_matrix11.sca", "--cover", "sl33", "--unit", "e[1,1]=1;e[1',1']=1"], 0),
    (&["verify-grading", "gl33.sca", "--cover", "sl33"], 1),
    (&["verify-grading", "sl33_natural.sca", "--cover", "sl33"], 1),
    (&["three-grading", "slA33_dual.sca", "--cover", "sl33"], 0),
    (&["three-grading", "psl22.sca", "--style", "sl2", "--h", "e[2,2]+e[2',2']=-2"], 0),
    (&["three-grading", "psl22.sca", "--style", "sl2", "--h", "e[2,2]+e[2',2']"], 1),
    (&["three-grading", "psl22.sca", "--style", "sl2"], 2),
    (&["tkk", "m11.sca"], 0),
    (&["tkk", "mplus2.sca", "--out", "out/tkk_mplus2.sca"], 0),
    (&["jordan-from-grading", "psl22.sca", "--e", "e[1,2]=1;e[1',2']=1", "--f", "e[2,1]=1;e[2',1']=1"], 0),
    (&["jordan-from-grading", "sl2.sca", "--e", "e[1,2]", "--f", "e[1,2]"], 1),
    (&["peirce", "m11.sca", "--idempotent", "e1"], 0),
    (&["peirce", "jp4.sca", "--idempotent", "@jp4_e1.vec"], 0),
    (&["peirce", "m11.sca", "--idempotent", "x"], 2),
    (&["certify-m11", "jp4.sca", "--e1", "@jp4_e1.vec", "--e2", "@jp4_e2.vec", "--x", "@jp4_x.vec", "--y", "@jp4_y.vec"], 0),
    (&["certify-m11", "jq4.sca", "--e1", "@jq4_e1.vec", "--e2", "@jq4_e2.vec", "--x", "@jq4_x.vec", "--y", "@jq4_y.vec"], 0),
    (&["certify-m11", "m11.sca", "--e1", "e1", "--e2", "e2", "--x", "y", "--y", "x"], 1),
    (&["certify-m11", "m11.sca", "--e1", "e1", "--e2", "e2", "--x", "x", "--y", "y", "--tkk"], 0),
    (&["uce", "psl22.sca", "--out", "out/uce_psl22.sca", "--report", "out/uce_psl22.json", "--cartan", "@psl22.cartan"], 0),
    (&["uce", "sl21.sca"], 0),
    (&["uce", "gl33.sca"], 1),
    (&["fingerprint", "psl22.sca", "--cartan", "@psl22.cartan"], 0),
    (&["isogenous", "sl33.sca", "psl33.sca"], 0),
    (&["isogenous", "psl22.sca", "psl33.sca"], 1),
    (&["construct", "slA", "3", "3", "grassmann", "1"], 0),
    (&["construct", "psl", "1", "--out", "out/psl22.sca", "--cartan-out", "out/psl22.cartan"], 0),
    (&["construct", "jp", "0"], 2),
    (&["construct", "sl", "2"], 2),
    (&["h2", "missing.sca"], 2),
    (&["h2", "m11.sca"], 2),
];
