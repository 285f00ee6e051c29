//! Load an edge list, then list its triangles and maximal cliques.
//!
//! cargo run --example graph_basics -- [path] [--one-based]

use motifcc::{enumerate_triangles, maximal_cliques, parse_edge_list, EdgeListOptions};

fn main() -> motifcc::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let one_based = args.iter().any(|a| a == "--one-based") || args.is_empty();
    let path = args
        .iter()
        .find(|a| !a.starts_with("--"))
        .cloned()
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/data/karate.edges").to_string());

    let g = parse_edge_list(
        &std::fs::read_to_string(&path)?,
        &EdgeListOptions { one_based, n: None },
    )?;
    println!(
        "{path}: {} vertices, {} edges, density {:.4}",
        g.n(),
        g.edge_count(),
        g.density()
    );

    let triangles = enumerate_triangles(&g);
    println!("{} triangles", triangles.len());
    for t in triangles.iter().take(5) {
        let [a, b, c] = t.0;
        println!("  {} {} {}", g.label(a), g.label(b), g.label(c));
    }

    let cliques = maximal_cliques(&g);
    let largest = cliques.iter().map(Vec::len).max().unwrap_or(0);
    println!(
        "{} maximal cliques, largest has {largest} vertices",
        cliques.len()
    );
    Ok(())
}
