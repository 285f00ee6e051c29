#![allow(dead_code)]

use std::path::PathBuf;

use motifcc::{parse_edge_list, EdgeListOptions, Graph};

pub fn data_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("data")
        .join(name)
}

/// The karate club graph with its 1-based labels.
pub fn karate() -> Graph {
    let text = std::fs::read_to_string(data_path("karate.edges")).unwrap();
    parse_edge_list(
        &text,
        &EdgeListOptions {
            one_based: true,
            n: None,
        },
    )
    .unwrap()
}

/// The two factions as 0-based vertex indices.
pub fn karate_factions() -> Vec<Vec<usize>> {
    let text = std::fs::read_to_string(data_path("ground_truth_karate.json")).unwrap();
    let labels: Vec<Vec<usize>> = serde_json::from_str(&text).unwrap();
    labels
        .into_iter()
        .map(|f| f.into_iter().map(|l| l - 1).collect())
        .collect()
}

/// Every labelled simple graph on `n` vertices.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs = n * n.saturating_sub(1) / 2;
    (0..1u64 << pairs).map(move |mask| Graph::from_pair_mask(n, mask))
}

pub fn bin() -> std::process::Command {
    std::process::Command::new(env!("CARGO_BIN_EXE_motifcc"))
}

/// Small edge lists written into `dir`, 0-based.
pub fn write_fixtures(dir: &std::path::Path) {
    let k8: String = (0..8)
        .flat_map(|u| (u + 1..8).map(move |v| format!("{u} {v}\n")))
        .collect();
    let files = [
        ("triangle.edges", "0 1\n1 2\n0 2\n".to_string()),
        ("c4.edges", "0 1\n1 2\n2 3\n0 3\n".to_string()),
        (
            "two_triangles.edges",
            "0 1\n1 2\n0 2\n3 4\n4 5\n3 5\n".to_string(),
        ),
        ("k4.edges", "0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n".to_string()),
        ("k8.edges", k8),
    ];
    for (name, body) in files {
        std::fs::write(dir.join(name), body).unwrap();
    }
}

/// One invocation of every subcommand, paths relative to a fixture dir
/// prepared by [`write_fixtures`].
pub fn cli_cases(dir: &std::path::Path) -> Vec<Vec<String>> {
    let karate = data_path("karate.edges").display().to_string();
    let truth = data_path("ground_truth_karate.json").display().to_string();
    let f = |name: &str| dir.join(name).display().to_string();
    let cases: Vec<Vec<String>> = vec![
        vec![
            "mmcc".into(),
            f("two_triangles.edges"),
            "--pivot".into(),
            "random".into(),
        ],
        vec![
            "mmcc".into(),
            f("c4.edges"),
            "--nonedge-dissim-range".into(),
            "0.1,0.4".into(),
        ],
        vec![
            "--one-based".into(),
            "mmcc".into(),
            karate.clone(),
            "--nonedge-dissim-coeff".into(),
            "0.25".into(),
            "--lambda".into(),
            "2".into(),
            "--ground-truth".into(),
            truth.clone(),
        ],
        vec![
            "--one-based".into(),
            "anneal".into(),
            karate.clone(),
            "-m".into(),
            "2".into(),
            "--restarts".into(),
            "4".into(),
            "--ground-truth".into(),
            truth.clone(),
        ],
        vec![
            "anneal".into(),
            f("k4.edges"),
            "-m".into(),
            "1".into(),
            "--init".into(),
            "random".into(),
        ],
        vec![
            "bounds".into(),
            "--n".into(),
            "4,7,8,9,34".into(),
            "--d".into(),
            "2".into(),
        ],
        vec![
            "exact".into(),
            f("c4.edges"),
            "--what".into(),
            "etcc".into(),
        ],
        vec![
            "exact".into(),
            f("triangle.edges"),
            "--what".into(),
            "ecc".into(),
        ],
        vec![
            "exact".into(),
            f("two_triangles.edges"),
            "--what".into(),
            "mmcc".into(),
        ],
        vec![
            "exact".into(),
            f("two_triangles.edges"),
            "--what".into(),
            "assign".into(),
        ],
        vec![
            "--one-based".into(),
            "eval".into(),
            karate.clone(),
            "--partition".into(),
            truth.clone(),
        ],
        vec![
            "--one-based".into(),
            "eval".into(),
            karate.clone(),
            "--assignment".into(),
            truth,
        ],
        vec!["randcover".into(), f("k8.edges"), "--d".into(), "1".into()],
        vec!["--one-based".into(), "triangles".into(), karate],
    ];
    cases
}
