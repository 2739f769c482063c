//! Golden-file tests: every case runs twice and must match its frozen
//! transcript byte for byte.

mod common;

use common::{golden_dir, transcript, CASES};

#[test]
fn golden_transcripts() {
    let dir = golden_dir();
    let mut mismatches = Vec::new();
    for &(stem, args, code) in CASES {
        let (first, status) = transcript(args);
        let (second, _) = transcript(args);
        assert_eq!(first, second, "{stem}: output differs between runs");
        assert_eq!(status, code, "{stem}: exit status\n{first}");
        let path = dir.join(format!("{stem}.txt"));
        let want = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        if want != first {
            mismatches.push(format!("{stem}:\n--- want\n{want}--- got\n{first}"));
        }
    }
    assert!(mismatches.is_empty(), "{}", mismatches.join("\n"));
}

#[test]
fn emitted_spaces_reparse() {
    let (out, status) = transcript(&["functor", "W", "tests/data/e1.ent"]);
    assert_eq!(status, 0);
    let body = out.split("--- stderr").next().unwrap();
    let (name, s) = entourage::format::parse_space(body).unwrap();
    assert_eq!(name, "W(e1)");
    assert!(s.max_ent().is_full());
}
