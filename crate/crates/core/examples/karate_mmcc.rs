//! Cluster the karate club network through the LP relaxation for two nonedge
//! offsets and a range of triangle relevance values, and compare with the
//! known two-faction split.
//!
//! cargo run --release --example karate_mmcc

use motifcc::instance::partition_agreement;
use motifcc::mmcc::{build_lp, round_and_score, solve_lp, LpBackend, RoundingParams};
use motifcc::{build_instance, parse_edge_list, EdgeListOptions, WeightConfig};

fn main() -> motifcc::Result<()> {
    let text = include_str!("../data/karate.edges");
    let g = parse_edge_list(
        text,
        &EdgeListOptions {
            one_based: true,
            n: None,
        },
    )?;
    let truth: Vec<Vec<usize>> =
        serde_json::from_str::<Vec<Vec<usize>>>(include_str!("../data/ground_truth_karate.json"))?
            .into_iter()
            .map(|f| f.into_iter().map(|l| l - 1).collect())
            .collect();

    for coeff in [0.25, 0.2] {
        for lambda in 1..=4 {
            let inst = build_instance(&g, &WeightConfig::density_offset(coeff, lambda as f64))?;
            let sol = solve_lp(&build_lp(&inst), LpBackend::Auto)?;
            let out = round_and_score(&inst, &sol, &RoundingParams::default())?;
            let clusters: Vec<String> = out
                .partition
                .clusters()
                .iter()
                .map(|c| {
                    c.iter()
                        .map(|&v| g.label(v).to_string())
                        .collect::<Vec<_>>()
                        .join(" ")
                })
                .collect();
            println!(
                "offset {coeff} lambda {lambda}: lp {:.3} rounded {:.3} agreement {}/34",
                out.lp_objective,
                out.rounded_cost,
                partition_agreement(&out.partition, &truth)
            );
            for c in clusters {
                println!("  {{{c}}}");
            }
        }
    }
    Ok(())
}
