//! Growing a codebook that corrects one substitution and one deletion, then
//! saving it and checking it again from the file.
//!
//! Run with `cargo run --release --example grow_codebook -- 16`.

use std::time::Instant;

use ids_codebook::codebook_io;
use ids_codebook::{grow_codebook, CheckSpec, EditOp, ErrorSpec, GenerationConfig};

fn main() -> ids_codebook::Result<()> {
    let size = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(16);
    let budget = ErrorSpec::new(vec![EditOp::any_sub(), EditOp::any_ins(), EditOp::any_del()], vec![1, 0, 1])?;
    println!("pair-check quotas: {:?}", budget.check_profile()?.quotas());

    let mut config = GenerationConfig::new(size, CheckSpec::Correct(budget));
    config.seed = 1;
    config.verbose = true;
    let start = Instant::now();
    let codebook = grow_codebook(&config)?;
    println!(
        "{} codewords of length {} in {:.2?}: redundancy {:.2}, baseline {:.2}",
        codebook.size(),
        codebook.seq_len(),
        start.elapsed(),
        codebook.redundancy(),
        codebook.baseline_redundancy()
    );
    for s in &codebook.sequences {
        println!("  {}", String::from_utf8_lossy(s));
    }

    let dir = std::env::temp_dir().join("ids-codebook-example");
    std::fs::create_dir_all(&dir)?;
    let path = dir.join(format!("codebook_m{size}.json"));
    codebook_io::save(&codebook, &path, true)?;
    codebook_io::load(&path, true)?;
    println!("saved and re-verified {}", path.display());
    Ok(())
}
