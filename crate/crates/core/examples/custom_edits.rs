//! Character-specific edits of interest: budgeting only the errors a
//! channel is known to make.
//!
//! Budgets made only of insertions and deletions keep their characters in
//! the pair check. Once substitutions are involved the check falls back to
//! wildcard edits, since chained or overlapping substitutions produce edges
//! no single listed edit matches.
//!
//! Run with `cargo run --example custom_edits`.

use std::sync::Arc;

use ids_codebook::edit_model::{format_eoi, parse_eoi};
use ids_codebook::fec_bitset::format_tuples;
use ids_codebook::{ecg, grow_codebook, CheckSpec, EditProfile, ErrorSpec, GenerationConfig};

fn main() -> ids_codebook::Result<()> {
    // C->T substitutions (deamination) and deletions of G
    let profile = Arc::new(EditProfile::parse("sub:C>T,del:G,ins:G", "2,1,1")?);
    for (a, b) in [("ACGT", "ATGT"), ("ACGT", "ATCT"), ("AGGCT", "AGCTG"), ("GAT", "AGT")] {
        let state = ecg::run_pair(profile.clone(), a.as_bytes(), b.as_bytes())?;
        println!("{a} -> {b}: {} (loss {})", format_tuples(&state.terminal_fecs()), state.pair_loss());
    }

    // an indel-only budget, then one that mixes in a substitution
    for (eoi, targets) in [("del:G", vec![2]), ("sub:C>T,del:G", vec![1, 1])] {
        let budget = ErrorSpec::new(parse_eoi(eoi)?, targets)?;
        let check = budget.check_profile()?;
        let codebook = grow_codebook(&GenerationConfig::new(16, CheckSpec::Correct(budget.clone())))?;
        println!(
            "correcting ({eoi}): pair check ({}) quotas {:?}{}; 16 codewords of length {}",
            format_eoi(check.eoi()),
            check.quotas(),
            if budget.exact_check() { "" } else { " (relaxed to wildcards)" },
            codebook.seq_len()
        );
    }
    Ok(())
}
