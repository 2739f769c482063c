//! Golden cases shared by the golden tests and the acceptance run.

use std::path::{Path, PathBuf};
use std::process::Command;

/// (golden file stem, arguments, expected exit code)
pub const CASES: &[(&str, &[&str], i32)] = &[
    ("classify_e2", &["classify", "tests/data/e2.ent"], 0),
    ("classify_e1_json", &["--json", "classify", "tests/data/e1.ent"], 0),
    ("classify_indiscrete", &["classify", "tests/data/indiscrete2.ent"], 0),
    ("classify_weight", &["--json", "classify", "tests/data/path.wt"], 0),
    ("classify_graph_dot", &["--dot", "classify", "tests/data/cycle.gr"], 0),
    ("classify_assert_fails", &["--assert", "classify", "tests/data/e2.ent", "--expect", "coarse"], 1),
    ("classify_empty_points", &["classify", "tests/data/empty_points.ent"], 2),
    ("classify_unknown_label", &["classify", "tests/data/unknown_label.ent"], 3),
    ("functor_sym_e2", &["functor", "SYM", "tests/data/e2.ent"], 0),
    ("functor_w_e1_json", &["--json", "functor", "W", "tests/data/e1.ent"], 0),
    ("map_id", &["map", "tests/data/id_e2_e1.map"], 0),
    ("equiv_collapse", &["equiv", "tests/data/collapse.map"], 0),
    ("equiv_needs_quasi", &["equiv", "tests/data/id_e2_e1.map"], 3),
    ("quotient_chain", &["quotient", "tests/data/chain3.ent", "--partition", "1 2"], 0),
    ("quotient_chain_json", &["--json", "quotient", "tests/data/chain3.ent", "--partition", "0 3", "--class", "coarse"], 0),
    ("probe_quasi_sym", &["probe", "--family", "quasi_sym_Z", "--radius", "3", "--smax", "10", "--window", "-20:20"], 0),
    ("probe_cubic_json", &["--json", "probe", "--family", "cubic_skew", "--window", "-10:10", "--radius", "1", "--smax", "100"], 0),
    ("probe_cap", &["probe", "--family", "unit", "--window", "-100000:100000", "--radius", "1", "--smax", "1"], 4),
    ("word_metric_z4", &["word-metric", "tests/data/z4.mag", "--gens", "1", "--side", "left"], 0),
    ("word_metric_idem2_json", &["--json", "word-metric", "tests/data/idem2.mag", "--gens", "a"], 0),
    ("word_metric_z4_dot", &["--dot", "word-metric", "tests/data/z4.mag", "--gens", "1", "--side", "right"], 0),
    ("hyper_e2", &["hyper", "tests/data/e2.ent"], 0),
    ("hyper_exp_e2_dot", &["--dot", "hyper", "tests/data/e2.ent", "--exp"], 0),
];

pub fn transcript(args: &[&str]) -> (String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_entourage"))
        .args(args)
        .current_dir(env!("CARGO_MANIFEST_DIR"))
        .output()
        .expect("binary runs");
    let text = format!(
        "{}--- stderr\n{}",
        String::from_utf8(out.stdout).expect("utf-8 stdout"),
        String::from_utf8(out.stderr).expect("utf-8 stderr")
    );
    (text, out.status.code().expect("exit code"))
}

pub fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}
