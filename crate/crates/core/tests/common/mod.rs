#![allow(dead_code)]

use std::path::PathBuf;

use lights_out::cli::run_cli;

pub struct Run {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run(args: &[&str]) -> Run {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("lights-out").chain(args.iter().copied());
    let code = run_cli(argv, &mut out, &mut err);
    Run {
        code,
        stdout: String::from_utf8(out).expect("utf-8 stdout"),
        stderr: String::from_utf8(err).expect("utf-8 stderr"),
    }
}

/// Rows of a CSV document as header-keyed maps.
pub fn csv_rows(text: &str) -> Vec<std::collections::HashMap<String, String>> {
    let mut lines = text.lines();
    let header: Vec<&str> = lines.next().expect("header").split(',').collect();
    lines
        .map(|l| {
            header
                .iter()
                .map(|h| h.to_string())
                .zip(l.split(',').map(str::to_string))
                .collect()
        })
        .collect()
}

pub fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
}

/// Published unlabeled counts: n, graphs, solvable, connected, connected solvable.
pub const PUBLISHED: [(usize, u64, u64, u64, u64); 8] = [
    (1, 1, 1, 1, 1),
    (2, 2, 1, 1, 0),
    (3, 4, 2, 2, 1),
    (4, 11, 4, 6, 2),
    (5, 34, 13, 21, 9),
    (6, 156, 47, 112, 33),
    (7, 1044, 339, 853, 290),
    (8, 12346, 4043, 11117, 3692),
];

pub const PUBLISHED_GN: [u64; 11] = [
    1, 2, 4, 11, 34, 156, 1044, 12346, 274668, 12005168, 1018997864,
];
