//! Feasible edit counts and loss between two sequences, checked against the
//! brute-force enumeration.
//!
//! Run with `cargo run --example pair_analysis -- AGC AGG 1,1,1`.

use std::sync::Arc;

use ids_codebook::fec_bitset::format_tuples;
use ids_codebook::{ecg, oracle, EditProfile};

fn main() -> ids_codebook::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let pairs: Vec<(String, String, String)> = match args.as_slice() {
        [a, b, eq] => vec![(a.clone(), b.clone(), eq.clone())],
        [] => vec![
            ("AGC".into(), "AGG".into(), "1,1,1".into()),
            ("TCTTCTTCCG".into(), "TCCGCAGAAT".into(), "4,2,2".into()),
            ("ACGTAC".into(), "CGTACA".into(), "1,1,1".into()),
        ],
        _ => {
            eprintln!("usage: pair_analysis [S1 S2 SUB,INS,DEL]");
            std::process::exit(2);
        }
    };

    for (s1, s2, eq) in pairs {
        let profile = Arc::new(EditProfile::parse("sub,ins,del", &eq)?);
        let state = ecg::run_pair(profile.clone(), s1.as_bytes(), s2.as_bytes())?;
        println!("{s1} -> {s2} under ({eq})");
        println!("  irreducible counts {}", format_tuples(&state.terminal_fecs()));
        println!("  all counts         {}", format_tuples(&state.terminal_fecs_all()));
        println!("  loss {} of L = {}, {} node visits", state.pair_loss(), profile.len(), state.visits());
        println!("  edit distance {}", oracle::levenshtein(s1.as_bytes(), s2.as_bytes()));
        if s1.len() <= oracle::BRUTE_FORCE_MAX_LEN {
            let brute = oracle::brute_force_fecs(s1.as_bytes(), s2.as_bytes(), &profile)?;
            println!("  brute force agrees: {}", brute == state.terminal_fecs());
        }
    }
    Ok(())
}
