//! Compare the LP bound, the exact optimum and the rounded clustering on
//! random weighted instances.
//!
//! cargo run --release --example approximation_check -- [instances] [seed]

use motifcc::mmcc::{build_lp, round_and_score, solve_lp, LpBackend, RoundingParams};
use motifcc::oracles::exact_mmcc;
use motifcc::WeightedInstance;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() -> motifcc::Result<()> {
    let mut args = std::env::args()
        .skip(1)
        .map(|a| a.parse::<u64>().expect("integer argument"));
    let instances = args.next().unwrap_or(50);
    let mut rng = ChaCha8Rng::seed_from_u64(args.next().unwrap_or(0));
    let params = RoundingParams::default();
    let guarantee = params
        .guarantee()
        .expect("default parameters carry a guarantee");

    let mut worst_rounded: f64 = 1.0;
    let mut worst_gap: f64 = 1.0;
    for _ in 0..instances {
        let inst = WeightedInstance::random(rng.gen_range(5..=8), &mut rng);
        let sol = solve_lp(&build_lp(&inst), LpBackend::Auto)?;
        let out = round_and_score(&inst, &sol, &params)?;
        let opt = exact_mmcc(&inst)?.optimum;
        assert!(out.lp_objective <= opt + 1e-6 && opt <= out.rounded_cost + 1e-6);
        assert!(out.rounded_cost <= guarantee * out.lp_objective + 1e-6);
        worst_rounded = worst_rounded.max(out.rounded_cost / opt);
        worst_gap = worst_gap.max(opt / out.lp_objective);
    }
    println!("{instances} instances, guarantee {guarantee}");
    println!("worst rounded / optimum {worst_rounded:.4}");
    println!("worst optimum / lp {worst_gap:.4}");
    Ok(())
}
