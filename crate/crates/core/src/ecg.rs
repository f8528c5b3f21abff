//! Banded, incremental dynamic program over the edit computational graph.
//!
//! Node `(i, j)` holds every feasible edit count turning `s1[..i]` into
//! `s2[..j]`. Nodes are swept in layers `k = max(i, j)`; only offsets
//! `|i - j| <= q` are kept, since a path with at most `q` insertions and `q`
//! deletions never strays further from the diagonal. Two rolling rows of
//! `2q + 1` cells suffice: cell `q + (j - i)` of row `k % 2` is node
//! `(i, j)` of layer `k`.
//!
//! Layer `k` depends only on the first `k` characters of each sequence, so a
//! state can be extended as both sequences grow without recomputing earlier
//! layers.

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::alphabet;
use crate::edit_model::{minimal_tuples, Edge, EditProfile, FecTuple};
use crate::error::{Error, Result};
use crate::fec_bitset::{self, FecSet};

#[derive(Debug, Clone)]
pub struct EcgPairState {
    profile: Arc<EditProfile>,
    width: usize,
    rows: Vec<FecSet>,
    consumed: usize,
    visits: u64,
    scratch: FecSet,
}

impl PartialEq for EcgPairState {
    fn eq(&self, other: &Self) -> bool {
        self.consumed == other.consumed
            && self.visits == other.visits
            && self.rows == other.rows
            && self.profile == other.profile
    }
}

impl EcgPairState {
    /// State for two empty prefixes: the origin holds the zero tuple only.
    pub fn new(profile: Arc<EditProfile>) -> Self {
        let q = profile.band();
        let width = 2 * q + 1;
        let l = profile.len();
        let mut rows = vec![FecSet::empty(l); 2 * width];
        rows[q] = FecSet::origin(l);
        EcgPairState {
            width,
            rows,
            consumed: 0,
            visits: 0,
            scratch: FecSet::empty(l),
            profile,
        }
    }

    pub fn profile(&self) -> &EditProfile {
        &self.profile
    }

    /// Number of positions consumed from each sequence.
    pub fn consumed(&self) -> usize {
        self.consumed
    }

    /// Interior nodes (both indices positive) evaluated so far.
    pub fn visits(&self) -> u64 {
        self.visits
    }

    /// `(rows, columns)` of the rolling band.
    pub fn band_shape(&self) -> (usize, usize) {
        (2, self.width)
    }

    /// Advances the band through steps `i0..i1`, after which node
    /// `(i1, i1)` is available.
    pub fn extend(&mut self, s1: &[u8], s2: &[u8], i0: usize, i1: usize) -> Result<()> {
        if i0 != self.consumed {
            return Err(Error::IncrementalContract {
                expected: self.consumed,
                got: i0,
            });
        }
        if i1 <= i0 {
            return Err(Error::OutOfRange {
                what: "extension end",
                detail: format!("end {i1} must exceed start {i0}"),
            });
        }
        for (name, s) in [("first", s1), ("second", s2)] {
            if s.len() < i1 {
                return Err(Error::OutOfRange {
                    what: "extension end",
                    detail: format!("{name} sequence has {} characters, need {i1}", s.len()),
                });
            }
        }
        alphabet::validate(&s1[..i1])?;
        alphabet::validate(&s2[..i1])?;
        for k in i0 + 1..=i1 {
            self.layer(s1, s2, k);
        }
        self.consumed = i1;
        Ok(())
    }

    /// Extends to `n`, a no-op when already there.
    pub fn extend_to(&mut self, s1: &[u8], s2: &[u8], n: usize) -> Result<()> {
        if n == self.consumed {
            return Ok(());
        }
        self.extend(s1, s2, self.consumed, n)
    }

    fn layer(&mut self, s1: &[u8], s2: &[u8], k: usize) {
        let q = self.profile.band();
        let w = self.width;
        let profile = &*self.profile;
        let (lo, hi) = self.rows.split_at_mut(w);
        let (cur, prev) = if k.is_multiple_of(2) { (lo, &*hi) } else { (hi, &*lo) };
        let scratch = &mut self.scratch;
        let reach = q.min(k);

        for c in (0..q - reach).chain(q + reach + 1..w) {
            cur[c].clear();
        }

        let order = (1..=reach)
            .rev()
            .flat_map(|t| [q + t, q - t])
            .chain(std::iter::once(q));
        for c in order {
            // j - i = c - q; the node sits on the layer's outer edge
            let (i, j) = if c >= q { (k - (c - q), k) } else { (k, k - (q - c)) };
            scratch.clear();

            if i >= 1 && j >= 1 {
                self.visits += 1;
            }
            let diag_ok = i >= 1 && j >= 1;
            let matched = diag_ok && s1[i - 1] == s2[j - 1];
            if matched {
                fec_bitset::transition(&prev[c], Edge::Match, profile, scratch);
            } else if diag_ok {
                let edge = Edge::Sub { from: s1[i - 1], to: s2[j - 1] };
                fec_bitset::transition(&prev[c], edge, profile, scratch);
            }
            if !matched || profile.has_char_specific_indel() {
                if i >= 1 && c + 1 < w {
                    let src = if c >= q { &cur[c + 1] } else { &prev[c + 1] };
                    fec_bitset::transition(src, Edge::Del { from: s1[i - 1] }, profile, scratch);
                }
                if j >= 1 && c >= 1 {
                    let src = if c <= q { &cur[c - 1] } else { &prev[c - 1] };
                    fec_bitset::transition(src, Edge::Ins { to: s2[j - 1] }, profile, scratch);
                }
            }
            cur[c].copy_from(scratch);
        }
    }

    fn current_row(&self) -> &[FecSet] {
        let start = (self.consumed % 2) * self.width;
        &self.rows[start..start + self.width]
    }

    /// Node `(i, j)` on the current layer, if it lies inside the band.
    pub fn node(&self, i: usize, j: usize) -> Option<&FecSet> {
        let k = self.consumed;
        let q = self.profile.band();
        if i.max(j) != k || i.abs_diff(j) > q {
            return None;
        }
        Some(&self.current_row()[q + j - i])
    }

    /// Bit set at node `(n, n)`.
    pub fn terminal_set(&self) -> &FecSet {
        &self.current_row()[self.profile.band()]
    }

    /// Irreducible feasible edit counts at `(n, n)`: tuples not dominated by
    /// another feasible tuple. Empty when the pair is out of reach.
    pub fn terminal_fecs(&self) -> BTreeSet<FecTuple> {
        minimal_tuples(fec_bitset::to_tuples(self.terminal_set(), &self.profile))
    }

    /// Every feasible edit count at `(n, n)`, dominated ones included.
    pub fn terminal_fecs_all(&self) -> BTreeSet<FecTuple> {
        fec_bitset::to_tuples(self.terminal_set(), &self.profile)
    }

    /// Loss of the terminal node; zero exactly when no path fits the quotas.
    pub fn pair_loss(&self) -> usize {
        fec_bitset::loss(self.terminal_set())
    }
}

/// Runs a fresh state over two equal-length sequences.
pub fn run_pair(profile: Arc<EditProfile>, s1: &[u8], s2: &[u8]) -> Result<EcgPairState> {
    if s1.len() != s2.len() {
        return Err(Error::UnequalLength(s1.len(), s2.len()));
    }
    let mut state = EcgPairState::new(profile);
    state.extend_to(s1, s2, s1.len())?;
    Ok(state)
}

/// Convenience: the terminal loss of a fresh run.
pub fn pair_loss(profile: Arc<EditProfile>, s1: &[u8], s2: &[u8]) -> Result<usize> {
    Ok(run_pair(profile, s1, s2)?.pair_loss())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::edit_model::EditOp;

    fn sid(eq: [usize; 3]) -> Arc<EditProfile> {
        Arc::new(
            EditProfile::new(
                vec![EditOp::any_sub(), EditOp::any_ins(), EditOp::any_del()],
                eq.to_vec(),
            )
            .unwrap(),
        )
    }

    fn set(v: &[[usize; 3]]) -> BTreeSet<FecTuple> {
        v.iter().map(|t| FecTuple(t.to_vec())).collect()
    }

    #[test]
    fn init_shapes() {
        let s = EcgPairState::new(sid([1, 1, 1]));
        assert_eq!(s.band_shape(), (2, 3));
        assert_eq!(s.pair_loss(), 8);
        let sub_only = Arc::new(EditProfile::new(vec![EditOp::any_sub()], vec![2]).unwrap());
        assert_eq!(EcgPairState::new(sub_only).band_shape(), (2, 1));
    }

    #[test]
    fn agc_agg() {
        let s = run_pair(sid([1, 1, 1]), b"AGC", b"AGG").unwrap();
        assert_eq!(s.terminal_fecs(), set(&[[1, 0, 0], [0, 1, 1]]));
        // (1,1,1) is feasible too (insert A, A>G, match, delete C) but dominated
        assert_eq!(s.terminal_fecs_all(), set(&[[1, 0, 0], [0, 1, 1], [1, 1, 1]]));
        // indices under (2,2,2) radices: (1,0,0) -> 1, (0,1,1) -> 6
        assert_eq!(s.pair_loss(), 8 - 1);
    }

    #[test]
    fn identical_sequences_keep_zero_tuple() {
        let p = sid([4, 2, 2]);
        let s = run_pair(p.clone(), b"ACGTTGCA", b"ACGTTGCA").unwrap();
        assert!(s.terminal_fecs().contains(&FecTuple::zero(3)));
        assert_eq!(s.pair_loss(), p.len());
    }

    #[test]
    fn paper_infeasible_pair() {
        let s = run_pair(sid([4, 2, 2]), b"TCTTCTTCCG", b"TCCGCAGAAT").unwrap();
        assert!(s.terminal_fecs().is_empty());
        assert_eq!(s.pair_loss(), 0);
    }

    #[test]
    fn incremental_contract() {
        let mut s = EcgPairState::new(sid([1, 1, 1]));
        s.extend(b"ACGT", b"ACGA", 0, 2).unwrap();
        assert!(matches!(
            s.extend(b"ACGT", b"ACGA", 1, 3),
            Err(Error::IncrementalContract { expected: 2, got: 1 })
        ));
        assert!(s.extend(b"ACGT", b"ACGA", 2, 2).is_err());
        assert!(s.extend(b"ACGT", b"ACGA", 2, 5).is_err());
        assert!(matches!(
            s.extend(b"ACNT", b"ACGA", 2, 4),
            Err(Error::Alphabet { byte: 'N', .. })
        ));
    }

    #[test]
    fn unequal_lengths_rejected() {
        assert!(matches!(
            run_pair(sid([1, 1, 1]), b"AC", b"ACG"),
            Err(Error::UnequalLength(2, 3))
        ));
    }

    #[test]
    fn off_diagonal_nodes() {
        let s = run_pair(sid([0, 1, 1]), b"ACG", b"CGA").unwrap();
        // deleting the leading A of s1 reaches (3, 2) with one deletion
        let node = s.node(3, 2).unwrap();
        assert_eq!(fec_bitset::to_tuples(node, s.profile()), set(&[[0, 0, 1]]));
        assert!(s.node(3, 0).is_none());
        assert!(s.node(2, 2).is_none());
        assert_eq!(s.terminal_fecs(), set(&[[0, 1, 1]]));
    }

    #[test]
    fn visit_count_small() {
        let s = run_pair(sid([1, 1, 1]), b"ACGTA", b"TTGCA").unwrap();
        assert_eq!(s.visits(), 5 * 3 - 2);
    }
}
