//! Command lines whose output is pinned by committed fixture files.

use std::path::{Path, PathBuf};

use crate::run_args;

/// `(fixture file name, arguments after the program name)`.
pub const CASES: &[(&str, &[&str])] = &[
    ("expand_2_2_x2.json", &["expand", "--b", "2", "--c", "2", "--var", "2", "--format", "json"]),
    ("expand_2_2_x3.json", &["expand", "--b", "2", "--c", "2", "--var", "3", "--format", "json"]),
    ("generic_0.json", &["expand", "--b", "2", "--c", "2", "--generic", "0", "--format", "json"]),
    ("generic_1.json", &["expand", "--b", "2", "--c", "2", "--generic", "1", "--format", "json"]),
    ("generic_2.json", &["expand", "--b", "2", "--c", "2", "--generic", "2", "--format", "json"]),
    ("minor_0.json", &["expand", "--b", "2", "--c", "2", "--minor", "0", "--in-generic", "--format", "json"]),
    ("minor_1.json", &["expand", "--b", "2", "--c", "2", "--minor", "1", "--a", "3", "--in-generic", "--format", "json"]),
    ("minor_2.json", &["expand", "--b", "2", "--c", "2", "--minor", "2", "--a", "1,1", "--in-generic", "--format", "json"]),
    ("minor_2_rational.json", &["expand", "--b", "2", "--c", "2", "--minor", "2", "--a", "-2/3,5", "--in-generic", "--format", "json"]),
    ("dominance_2_2_3_-3.json", &["dominance", "--b", "2", "--c", "2", "--lambda", "3,-3", "--format", "json"]),
];

pub fn fixture_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests").join("fixtures")
}

pub fn render(args: &[&str]) -> String {
    let mut full = vec!["rank2"];
    full.extend_from_slice(args);
    run_args(full).unwrap_or_else(|e| panic!("golden command {args:?} failed: {e}")).output
}

/// Names of fixtures whose committed bytes differ from the current output.
pub fn mismatches() -> Vec<String> {
    let dir = fixture_dir();
    CASES
        .iter()
        .filter(|(name, args)| std::fs::read(dir.join(name)).map_or(true, |bytes| bytes != render(args).as_bytes()))
        .map(|(name, _)| name.to_string())
        .collect()
}
