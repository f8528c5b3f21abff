//! Growing a pair state as both sequences are extended, the way the
//! generator scores candidate suffixes without recomputing old layers.
//!
//! Run with `cargo run --example incremental_extension`.

use std::sync::Arc;

use ids_codebook::{ecg, EcgPairState, EditProfile};

fn main() -> ids_codebook::Result<()> {
    let profile = Arc::new(EditProfile::parse("sub,ins,del", "2,1,1")?);
    let s1 = b"ACGTTGCAAGTC";
    let s2 = b"ACGATGCTAGTA";

    let mut state = EcgPairState::new(profile.clone());
    let (rows, width) = state.band_shape();
    println!("band: {rows} rows of {width} cells");
    let mut at = 0;
    for next in [3, 4, 8, 12] {
        state.extend(s1, s2, at, next)?;
        println!(
            "prefix {next:>2}: {:<14} {:<14} loss {:>2}  visits {}",
            String::from_utf8_lossy(&s1[..next]),
            String::from_utf8_lossy(&s2[..next]),
            state.pair_loss(),
            state.visits()
        );
        at = next;
    }

    let batch = ecg::run_pair(profile.clone(), s1, s2)?;
    assert_eq!(state, batch);

    // trying a suffix works on a copy, so the committed state is untouched
    let mut trial = state.clone();
    let (t1, t2) = ([&s1[..], b"GG"].concat(), [&s2[..], b"GC"].concat());
    trial.extend_to(&t1, &t2, t1.len())?;
    println!("with suffixes GG / GC: loss {}", trial.pair_loss());

    // the contract: extension must start where the state left off
    let err = state.extend(s1, s2, 4, 12).unwrap_err();
    println!("out-of-order extend rejected: {err}");
    Ok(())
}
