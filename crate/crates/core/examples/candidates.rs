//! Constrained suffix candidates: homopolymer run limit and GC balance over
//! a sliding window.
//!
//! Run with `cargo run --example candidates`.

use ids_codebook::{generate_candidates, ConstraintSpec};

fn show(context: &str, spec: &ConstraintSpec) {
    let got = generate_candidates(context.as_bytes(), spec);
    let shown: Vec<String> = got.iter().take(12).map(|s| String::from_utf8_lossy(s).into_owned()).collect();
    println!(
        "run {} gc_bal {} ctx {:?} aug {}: {} candidates, GC/AT cap {} -> {}{}",
        spec.run,
        spec.gc_bal,
        context,
        spec.aug_len,
        got.len(),
        spec.cap_gc(),
        shown.join(" "),
        if got.len() > shown.len() { " ..." } else { "" }
    );
}

fn main() -> ids_codebook::Result<()> {
    show("", &ConstraintSpec::new(2, 0.5, 0, 2)?);
    show("GG", &ConstraintSpec::new(2, 1.0, 2, 1)?);
    show("ACGG", &ConstraintSpec::new(3, 1.0, 4, 3)?);
    show("GCGCGCG", &ConstraintSpec::new(3, 0.6, 7, 1)?);
    show("ATGCATG", &ConstraintSpec::new(3, 0.6, 7, 4)?);

    let stuck = ConstraintSpec::new(1, 0.5, 0, 1)?;
    println!("feasible with window 1 and balance 0.5: {}", stuck.is_feasible());
    Ok(())
}
