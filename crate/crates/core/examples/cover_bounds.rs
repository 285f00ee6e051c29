//! Compare exact clique cover numbers with the closed-form bounds on Turán
//! graphs and random graphs.
//!
//! cargo run --release --example cover_bounds

use motifcc::bounds::{bounds_table, ecc_bound, etcc_bound};
use motifcc::oracles::{exact_ecc, exact_etcc};
use motifcc::{turan_graph, Graph};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> motifcc::Result<()> {
    print!("{}", bounds_table(&[7, 8, 9, 10, 34], 1));
    println!();
    println!("graph\tn\tecc\tecc_bound\tetcc\tetcc_bound");
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut graphs: Vec<(String, Graph)> = (7..=10)
        .map(|n| (format!("T({n},3)"), turan_graph(n, 3)))
        .collect();
    graphs.extend((0..4).map(|i| (format!("G(9,0.6)#{i}"), Graph::random(9, 0.6, &mut rng))));
    for (name, g) in graphs {
        let n = g.n() as u64;
        println!(
            "{name}\t{n}\t{}\t{}\t{}\t{}",
            exact_ecc(&g)?.optimum,
            ecc_bound(n),
            exact_etcc(&g)?.optimum,
            etcc_bound(n)
        );
    }
    Ok(())
}
