//! Bit-level edge transitions on a single node.
//!
//! Starts from four count tuples under quotas (4,2,2) for (sub, ins, del)
//! and pushes them through a deletion, an insertion and a substitution edge
//! into the same target node.
//!
//! Run with `cargo run --example transition_walkthrough`.

use ids_codebook::edit_model::{EditProfile, FecTuple};
use ids_codebook::fec_bitset::{self, FecSet};
use ids_codebook::Edge;

fn main() -> ids_codebook::Result<()> {
    let profile = EditProfile::parse("sub,ins,del", "4,2,2")?;
    println!("L = {}, shifts = {:?}", profile.len(), profile.shifts());

    let start = [[0, 0, 0], [4, 1, 1], [1, 2, 1], [1, 1, 2]].map(|t| FecTuple(t.to_vec()));
    let source = fec_bitset::from_tuples(&start, &profile)?;
    println!("source {}", fec_bitset::format_tuples(&fec_bitset::to_tuples(&source, &profile)));

    let mut target = FecSet::empty(profile.len());
    for (name, edge) in [
        ("del", Edge::Del { from: b'T' }),
        ("ins", Edge::Ins { to: b'G' }),
        ("sub", Edge::Sub { from: b'T', to: b'G' }),
    ] {
        fec_bitset::transition(&source, edge, &profile, &mut target);
        let tuples = fec_bitset::to_tuples(&target, &profile);
        println!("after {name}: {}", fec_bitset::format_tuples(&tuples));
    }
    println!("bits   {}", target.bit_string());
    println!("loss   {}", fec_bitset::loss(&target));

    // equal characters: the match edge copies the source unchanged
    let mut matched = FecSet::empty(profile.len());
    fec_bitset::transition(&source, Edge::Match, &profile, &mut matched);
    assert_eq!(matched, source);
    Ok(())
}
