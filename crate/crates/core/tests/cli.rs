mod common;

use std::process::Output;

use motifcc::anneal::{default_weights, normalized_score, FeatureAssignment};
use serde_json::Value;

use common::{bin, cli_cases, data_path, karate, karate_factions, write_fixtures};

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn json(args: &[&str]) -> Value {
    let out = run(&[&["--json"], args].concat());
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

fn schema() -> jsonschema::Validator {
    let text = std::fs::read_to_string(
        std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("schema/run_report.schema.json"),
    )
    .unwrap();
    jsonschema::validator_for(&serde_json::from_str(&text).unwrap()).unwrap()
}

#[test]
fn every_command_matches_the_schema_and_replays() {
    let dir = tempfile::tempdir().unwrap();
    write_fixtures(dir.path());
    let validator = schema();
    for case in cli_cases(dir.path()) {
        let args: Vec<&str> = case.iter().map(String::as_str).collect();
        let first = run(&[&["--json", "--seed", "5"], &args[..]].concat());
        let second = run(&[&["--json", "--seed", "5"], &args[..]].concat());
        assert!(
            first.status.success(),
            "{args:?}: {}",
            String::from_utf8_lossy(&first.stderr)
        );
        assert_eq!(first.stdout, second.stdout, "{args:?} is not reproducible");
        let report: Value = serde_json::from_slice(&first.stdout).unwrap();
        let errors: Vec<String> = validator
            .iter_errors(&report)
            .map(|e| e.to_string())
            .collect();
        assert!(errors.is_empty(), "{args:?}: {errors:?}");
    }
}

#[test]
fn triangle_is_one_cluster() {
    let dir = tempfile::tempdir().unwrap();
    write_fixtures(dir.path());
    let r = json(&["mmcc", dir.path().join("triangle.edges").to_str().unwrap()]);
    assert_eq!(r["results"]["num_clusters"], 1);
    assert_eq!(r["results"]["rounded_cost"], 0.0);
}

#[test]
fn karate_reports_original_labels() {
    let karate_path = data_path("karate.edges");
    let truth = data_path("ground_truth_karate.json");
    let r = json(&[
        "--one-based",
        "mmcc",
        karate_path.to_str().unwrap(),
        "--nonedge-dissim-coeff",
        "0.25",
        "--lambda",
        "2",
        "--ground-truth",
        truth.to_str().unwrap(),
    ]);
    let clusters = r["results"]["clusters"].as_array().unwrap();
    assert_eq!(clusters.len(), 3);
    assert!(clusters.contains(&serde_json::json!([10])));
    assert_eq!(r["input"]["n"], 34);
}

#[test]
fn eval_matches_library() {
    let karate_path = data_path("karate.edges");
    let truth = data_path("ground_truth_karate.json");
    let r = json(&[
        "--one-based",
        "eval",
        karate_path.to_str().unwrap(),
        "--assignment",
        truth.to_str().unwrap(),
    ]);
    let g = karate();
    let mut sets = vec![Vec::new(); 34];
    for (k, f) in karate_factions().iter().enumerate() {
        for &v in f {
            sets[v].push(k + 1);
        }
    }
    let a = FeatureAssignment::from_sets(2, &sets).unwrap();
    let expected = normalized_score(&g, &a, &default_weights(&g));
    assert_eq!(r["results"]["normalized_score"].as_f64().unwrap(), expected);

    let r = json(&[
        "--one-based",
        "eval",
        karate_path.to_str().unwrap(),
        "--partition",
        truth.to_str().unwrap(),
    ]);
    let inst = motifcc::build_instance(&g, &motifcc::WeightConfig::default()).unwrap();
    let p = motifcc::Partition::from_clusters(34, &karate_factions()).unwrap();
    assert_eq!(
        r["results"]["cost"].as_f64().unwrap(),
        motifcc::mmcc_cost(&inst, &p)
    );
}

#[test]
fn bounds_and_exact_values() {
    let r = json(&["bounds", "--n", "9"]);
    assert_eq!(r["results"]["rows"][0]["etcc_bound"], 27);
    let text = run(&["bounds", "--n", "9"]);
    assert_eq!(
        String::from_utf8(text.stdout).unwrap(),
        "n\tecc_bound\tetcc_bound\talon_bound\n9\t20\t27\t1060\n"
    );

    let dir = tempfile::tempdir().unwrap();
    write_fixtures(dir.path());
    let r = json(&[
        "exact",
        "--what",
        "etcc",
        dir.path().join("c4.edges").to_str().unwrap(),
    ]);
    assert_eq!(r["results"]["optimum"], 4);
    let r = json(&[
        "anneal",
        dir.path().join("two_triangles.edges").to_str().unwrap(),
        "-m",
        "2",
        "--restarts",
        "4",
    ]);
    assert_eq!(r["results"]["normalized_score"], 1.0);
}

#[test]
fn export_and_reimport() {
    let dir = tempfile::tempdir().unwrap();
    write_fixtures(dir.path());
    let g = dir.path().join("two_triangles.edges");
    let lp = dir.path().join("relax.mps");
    let r = json(&[
        "mmcc",
        g.to_str().unwrap(),
        "--export-lp",
        lp.to_str().unwrap(),
        "--export-format",
        "mps",
        "--export-only",
    ]);
    assert_eq!(r["results"]["variables"], 15 + 20);
    assert!(std::fs::read_to_string(&lp).unwrap().starts_with("* "));

    // a partition indicator is a feasible point to import
    let model = motifcc::mmcc::build_lp(
        &motifcc::build_instance(
            &motifcc::parse_edge_list(&std::fs::read_to_string(&g).unwrap(), &Default::default())
                .unwrap(),
            &motifcc::WeightConfig::default(),
        )
        .unwrap(),
    );
    let p = motifcc::Partition::from_clusters(6, &[vec![0, 1, 2], vec![3, 4, 5]]).unwrap();
    let sol = motifcc::mmcc::LpSolution::from_partition(&model, &p);
    let sol_path = dir.path().join("relax.sol");
    std::fs::write(&sol_path, motifcc::mmcc::write_solution(&model, &sol)).unwrap();
    let r = json(&[
        "mmcc",
        g.to_str().unwrap(),
        "--lp-solution",
        sol_path.to_str().unwrap(),
    ]);
    assert_eq!(r["results"]["lp_backend"], "imported");
    assert_eq!(
        r["results"]["clusters"],
        serde_json::json!([[0, 1, 2], [3, 4, 5]])
    );
}

#[test]
fn output_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("bounds.json");
    let status = run(&[
        "--json",
        "--output",
        out.to_str().unwrap(),
        "bounds",
        "--n",
        "7",
    ]);
    assert!(status.status.success() && status.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(out).unwrap()).unwrap();
    assert_eq!(v["results"]["rows"][0]["etcc_bound"], 12);
}

#[test]
fn exit_codes_per_error_class() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.edges");
    std::fs::write(&bad, "0 1\n1 x\n").unwrap();
    let looped = dir.path().join("loop.edges");
    std::fs::write(&looped, "0 1\n2 2\n").unwrap();
    let big = dir.path().join("big.edges");
    std::fs::write(&big, "0 12\n").unwrap();
    let infeasible = dir.path().join("bad.sol");
    std::fs::write(&infeasible, "x_0_1 0.5\n").unwrap();
    let tri = dir.path().join("tri.edges");
    std::fs::write(&tri, "0 1\n1 2\n0 2\n").unwrap();

    let code = |args: &[&str]| run(args).status.code().unwrap();
    assert_eq!(code(&["triangles", bad.to_str().unwrap()]), 2);
    assert_eq!(code(&["triangles", looped.to_str().unwrap()]), 2);
    assert_eq!(code(&["nonsense"]), 2);
    assert_eq!(
        code(&["triangles", dir.path().join("missing").to_str().unwrap()]),
        3
    );
    assert_eq!(code(&["mmcc", tri.to_str().unwrap(), "--alpha", "0"]), 3);
    assert_eq!(
        code(&["mmcc", tri.to_str().unwrap(), "--nonedge-dissim", "1.5"]),
        3
    );
    assert_eq!(code(&["exact", "--what", "mmcc", big.to_str().unwrap()]), 4);
    assert_eq!(
        code(&[
            "mmcc",
            tri.to_str().unwrap(),
            "--lp-solution",
            infeasible.to_str().unwrap()
        ]),
        5
    );
    assert_eq!(code(&["bounds", "--n", "3"]), 0);
}
