//! Edge-triangle clique covers of dense graphs built from random vertex
//! samples pruned to cliques.
//!
//! cargo run --release --example randomized_cover -- [seed]

use motifcc::bounds::{alon_bound, random_cover};
use motifcc::oracles::exact_etcc;
use motifcc::Graph;

fn main() -> motifcc::Result<()> {
    let seed = std::env::args()
        .nth(1)
        .map_or(0, |s| s.parse().expect("integer seed"));
    let k8 = Graph::complete(8);
    let minus_matching = Graph::from_edges(
        8,
        (0..8)
            .flat_map(|u| (u + 1..8).map(move |v| (u, v)))
            .filter(|&(u, v)| !(u % 2 == 0 && v == u + 1)),
    )?;
    let k10_minus_cycle = Graph::from_edges(
        10,
        (0..10)
            .flat_map(|u| (u + 2..10).map(move |v| (u, v)))
            .filter(|&(u, v)| !(u == 0 && v == 9)),
    )?;

    for (name, g, d) in [
        ("K8", &k8, 1),
        ("K8 minus a perfect matching", &minus_matching, 2),
        ("K10 minus a 10-cycle", &k10_minus_cycle, 3),
    ] {
        let r = random_cover(g, d, seed, 5)?;
        println!(
            "{name} (min degree {}, d = {d}): covered {} with {} distinct cliques out of {} drawn (bound {}), {} trial(s); exact optimum {}",
            g.min_degree(),
            r.covered_all,
            r.size,
            r.bound_used,
            alon_bound(g.n() as u64, d),
            r.trials_used,
            exact_etcc(g)?.optimum
        );
    }
    Ok(())
}
