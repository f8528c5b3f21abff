//! Redundancy against the closed-form single-substitution single-deletion
//! baseline over a range of codebook sizes.
//!
//! Run with `cargo run --release --example redundancy_report`.

use ids_codebook::codebook_io::{self, ReportRow};
use ids_codebook::{grow_codebook, CheckSpec, EditOp, ErrorSpec, GenerationConfig};

fn main() -> ids_codebook::Result<()> {
    let budget = ErrorSpec::new(vec![EditOp::any_sub(), EditOp::any_ins(), EditOp::any_del()], vec![1, 0, 1])?;
    let mut rows: Vec<ReportRow> = Vec::new();
    for size in [2, 4, 8, 16, 32, 64] {
        let mut config = GenerationConfig::new(size, CheckSpec::Correct(budget.clone()));
        config.max_steps = 128;
        let best = (0..3)
            .filter_map(|seed| {
                config.seed = seed;
                grow_codebook(&config).ok()
            })
            .min_by_key(|c| c.seq_len());
        match best {
            Some(codebook) => rows.push(codebook_io::report(&codebook)),
            None => eprintln!("m = {size}: no seed converged"),
        }
    }
    codebook_io::write_report(&rows, std::io::stdout().lock())?;
    Ok(())
}
