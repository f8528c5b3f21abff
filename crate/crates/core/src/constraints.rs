//! Candidate suffixes under GC-balance and homopolymer-run constraints.
//!
//! Suffixes are grown breadth first out of homopolymer blocks. The GC and AT
//! counts are taken over a window made of the context tail (at most `ctx_len`
//! bases) plus the suffix, and both are capped at `floor(gc_bal * (ctx_len +
//! aug_len))`, so the GC fraction of a full window lies in
//! `[1 - gc_bal, gc_bal]`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::alphabet::{self, is_gc, last_run, BASES};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ConstraintSpec {
    /// Longest allowed homopolymer run.
    pub run: usize,
    /// Upper bound on the GC (and AT) fraction, in `[0.5, 1.0]`.
    pub gc_bal: f64,
    /// Context window length.
    pub ctx_len: usize,
    /// Augment length: bases added per step.
    pub aug_len: usize,
}

impl Default for ConstraintSpec {
    fn default() -> Self {
        ConstraintSpec {
            run: 3,
            gc_bal: 0.6,
            ctx_len: 7,
            aug_len: 1,
        }
    }
}

impl ConstraintSpec {
    pub fn new(run: usize, gc_bal: f64, ctx_len: usize, aug_len: usize) -> Result<Self> {
        let spec = ConstraintSpec { run, gc_bal, ctx_len, aug_len };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if self.run == 0 {
            return Err(Error::InvalidConfig("run length must be at least 1".into()));
        }
        if self.aug_len == 0 {
            return Err(Error::InvalidConfig("augment length must be at least 1".into()));
        }
        if !(0.5..=1.0).contains(&self.gc_bal) {
            return Err(Error::InvalidConfig(format!(
                "GC balance {} outside [0.5, 1.0]",
                self.gc_bal
            )));
        }
        Ok(())
    }

    pub fn window(&self) -> usize {
        self.ctx_len + self.aug_len
    }

    /// Cap on G+C in a window.
    pub fn cap_gc(&self) -> usize {
        // nudge so that e.g. 0.6 * 10 does not floor to 5
        (self.gc_bal * self.window() as f64 + 1e-9).floor() as usize
    }

    /// Cap on A+T in a window.
    pub fn cap_at(&self) -> usize {
        self.cap_gc()
    }

    pub fn is_feasible(&self) -> bool {
        self.cap_gc() + self.cap_at() >= self.window()
    }

    /// Whether `window` (context tail followed by a suffix) meets every constraint.
    pub fn admits(&self, window: &[u8]) -> bool {
        let gc = window.iter().filter(|&&b| is_gc(b)).count();
        gc <= self.cap_gc() && window.len() - gc <= self.cap_at() && alphabet::max_run(window) <= self.run
    }
}

/// Every block `c^k` for a nucleotide `c` and `1 <= k <= run`.
pub fn homopolymer_blocks(run: usize) -> Vec<Vec<u8>> {
    BASES
        .iter()
        .flat_map(|&c| (1..=run).map(move |k| vec![c; k]))
        .collect()
}

/// Suffixes of length `aug_len` that may follow `context_tail`, sorted.
///
/// `context_tail` should be the last `min(ctx_len, len)` bases of the
/// sequence being grown; longer inputs are cut to their last `ctx_len`
/// bases. An empty result means the constraints cannot be met from this
/// context.
pub fn generate_candidates(context_tail: &[u8], spec: &ConstraintSpec) -> Vec<Vec<u8>> {
    let ctx = &context_tail[context_tail.len().saturating_sub(spec.ctx_len)..];
    let cap_gc = spec.cap_gc();
    let cap_at = spec.cap_at();
    let blocks = homopolymer_blocks(spec.run);
    let ctx_gc = ctx.iter().filter(|&&b| is_gc(b)).count();

    let mut out = BTreeSet::new();
    // (suffix so far, GC count over the window)
    let mut frontier: Vec<(Vec<u8>, usize)> = vec![(Vec::new(), ctx_gc)];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for (item, gc) in frontier {
            if item.len() == spec.aug_len {
                out.insert(item);
                continue;
            }
            let at = ctx.len() + item.len() - gc;
            let last = item.last().or(ctx.last()).copied();
            for block in &blocks {
                let (nuc, len) = (block[0], block.len());
                if item.len() + len > spec.aug_len {
                    continue;
                }
                if is_gc(nuc) && gc + len > cap_gc {
                    continue;
                }
                if !is_gc(nuc) && at + len > cap_at {
                    continue;
                }
                if Some(nuc) == last {
                    // one block per run inside the suffix; only the first
                    // block may continue the context's trailing run
                    if !item.is_empty() || last_run(ctx) + len > spec.run {
                        continue;
                    }
                }
                let mut grown = item.clone();
                grown.extend_from_slice(block);
                next.push((grown, gc + if is_gc(nuc) { len } else { 0 }));
            }
        }
        frontier = next;
    }
    out.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn strings(v: &[Vec<u8>]) -> Vec<String> {
        v.iter().map(|s| String::from_utf8(s.clone()).unwrap()).collect()
    }

    #[test]
    fn blocks() {
        let b = strings(&homopolymer_blocks(2));
        assert_eq!(b, ["A", "AA", "C", "CC", "G", "GG", "T", "TT"]);
        assert_eq!(homopolymer_blocks(1).len(), 4);
        assert_eq!(homopolymer_blocks(5).len(), 20);
    }

    #[test]
    fn balanced_pairs() {
        let spec = ConstraintSpec::new(2, 0.5, 0, 2).unwrap();
        let mut got = strings(&generate_candidates(b"", &spec));
        got.sort();
        let mut want = ["AG", "AC", "GA", "CA", "TG", "TC", "GT", "CT"].map(String::from).to_vec();
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn unconstrained_single_base() {
        let spec = ConstraintSpec::new(1, 1.0, 0, 1).unwrap();
        assert_eq!(strings(&generate_candidates(b"", &spec)), ["A", "C", "G", "T"]);
    }

    #[test]
    fn context_run_blocks_continuation() {
        let spec = ConstraintSpec::new(2, 1.0, 2, 1).unwrap();
        let got = generate_candidates(b"GG", &spec);
        assert_eq!(strings(&got), ["A", "C", "T"]);
    }

    #[test]
    fn context_run_can_be_extended_up_to_limit() {
        let spec = ConstraintSpec::new(3, 1.0, 4, 3).unwrap();
        let got = strings(&generate_candidates(b"ACGG", &spec));
        assert!(got.contains(&"GAC".to_string()));
        assert!(!got.contains(&"GGA".to_string()));
        assert!(got.contains(&"AAA".to_string()));
    }

    #[test]
    fn validation() {
        assert!(ConstraintSpec::new(0, 0.5, 0, 1).is_err());
        assert!(ConstraintSpec::new(1, 0.4, 0, 1).is_err());
        assert!(ConstraintSpec::new(1, 0.5, 0, 0).is_err());
        assert_eq!(ConstraintSpec::new(3, 0.6, 5, 5).unwrap().cap_gc(), 6);
    }
}
