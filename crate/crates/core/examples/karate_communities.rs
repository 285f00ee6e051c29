//! Overlapping communities of the karate club network from two features,
//! found by simulated annealing.
//!
//! cargo run --release --example karate_communities -- [seed]

use motifcc::anneal::{anneal, communities_of, default_weights, AnnealParams};
use motifcc::{parse_edge_list, EdgeListOptions};

fn main() -> motifcc::Result<()> {
    let seed = std::env::args()
        .nth(1)
        .map_or(0, |s| s.parse().expect("integer seed"));
    let g = parse_edge_list(
        include_str!("../data/karate.edges"),
        &EdgeListOptions {
            one_based: true,
            n: None,
        },
    )?;
    let w = default_weights(&g);
    println!(
        "weights: edge {:.4} nonedge {:.4} triangle {:.4} nontriangle {:.4}",
        w.edge, w.nonedge, w.triangle, w.nontriangle
    );

    let out = anneal(&g, &AnnealParams::new(2, seed).restarts(10), &w)?;
    println!(
        "best normalized score {:.4} (chain seed {}, {} rounds)",
        out.normalized_score, out.seed, out.rounds
    );
    let communities = communities_of(&out.assignment);
    for (k, c) in communities.iter().enumerate() {
        let labels: Vec<String> = c.iter().map(|&v| g.label(v).to_string()).collect();
        println!("community {}: {}", k + 1, labels.join(" "));
    }
    let shared: Vec<usize> = (0..g.n())
        .filter(|&v| communities.iter().filter(|c| c.contains(&v)).count() > 1)
        .map(|v| g.label(v))
        .collect();
    println!("in more than one community: {shared:?}");
    Ok(())
}
