//! Export the relaxation in LP and MPS form for an external solver, then read
//! a `name value` solution back and round it.
//!
//! cargo run --example external_solver -- [out_dir] [solution_file]
//!
//! Without a solution file the internal solver's answer is written out in
//! the same format and read back, exercising the full round trip.

use std::path::PathBuf;

use motifcc::mmcc::{
    build_lp, export_lp, import_solution, round_and_score, solve_lp, write_solution, LpBackend,
    LpFormat, RoundingParams,
};
use motifcc::{build_instance, parse_edge_list, EdgeListOptions, WeightConfig};

fn main() -> motifcc::Result<()> {
    let mut args = std::env::args().skip(1);
    let dir = PathBuf::from(
        args.next()
            .unwrap_or_else(|| std::env::temp_dir().display().to_string()),
    );
    let g = parse_edge_list(
        "0 1\n1 2\n0 2\n2 3\n3 4\n4 5\n3 5\n",
        &EdgeListOptions::default(),
    )?;
    let inst = build_instance(&g, &WeightConfig::density_offset(0.2, 1.0))?;
    let model = build_lp(&inst);

    for (format, ext) in [(LpFormat::Lp, "lp"), (LpFormat::Mps, "mps")] {
        let path = dir.join(format!("relaxation.{ext}"));
        std::fs::write(&path, export_lp(&model, format))?;
        println!(
            "wrote {} ({} variables, {} rows)",
            path.display(),
            model.num_vars(),
            model.rows.len()
        );
    }
    println!(
        "objective offset not included in the files: {}",
        model.cost_offset
    );

    let solution = match args.next() {
        Some(path) => std::fs::read_to_string(path)?,
        None => write_solution(&model, &solve_lp(&model, LpBackend::Dense)?),
    };
    let sol = import_solution(&model, &solution)?;
    let out = round_and_score(&inst, &sol, &RoundingParams::default())?;
    println!(
        "lp objective {:.4}, rounded cost {:.4}",
        out.lp_objective, out.rounded_cost
    );
    println!("clusters {:?}", out.partition.clusters());
    Ok(())
}
