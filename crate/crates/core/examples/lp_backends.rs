//! Solve the same random relaxations with the dense tableau and the sparse
//! solver, and compare objective values and running times.
//!
//! cargo run --release --example lp_backends -- [max_n] [instances]

use std::time::Instant;

use motifcc::mmcc::{build_lp, solve_lp, LpBackend};
use motifcc::WeightedInstance;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> motifcc::Result<()> {
    let mut args = std::env::args()
        .skip(1)
        .map(|a| a.parse::<usize>().expect("integer argument"));
    let max_n = args.next().unwrap_or(10);
    let instances = args.next().unwrap_or(20);
    let mut rng = ChaCha8Rng::seed_from_u64(1);

    println!("n\tvars\trows\tdense_ms\tsparse_ms\tmax_gap");
    for n in 4..=max_n {
        let models: Vec<_> = (0..instances)
            .map(|_| build_lp(&WeightedInstance::random(n, &mut rng)))
            .collect();
        let mut times = [0.0; 2];
        let mut objectives = [Vec::new(), Vec::new()];
        for (k, backend) in [LpBackend::Dense, LpBackend::Sparse]
            .into_iter()
            .enumerate()
        {
            let start = Instant::now();
            for m in &models {
                objectives[k].push(solve_lp(m, backend)?.objective);
            }
            times[k] = start.elapsed().as_secs_f64() * 1e3 / instances as f64;
        }
        let gap = objectives[0]
            .iter()
            .zip(&objectives[1])
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        println!(
            "{n}\t{}\t{}\t{:.2}\t{:.2}\t{gap:.1e}",
            models[0].num_vars(),
            models[0].rows.len(),
            times[0],
            times[1]
        );
    }
    Ok(())
}
