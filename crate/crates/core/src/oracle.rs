//! Slow reference implementations used to check the banded engine.

use std::collections::BTreeSet;

use crate::edit_model::{Edge, EditKind, EditOp, EditProfile, FecTuple};
use crate::error::{Error, Result};
use crate::fec_bitset::{self, FecSet};

/// Longest input accepted by [`brute_force_fecs`].
pub const BRUTE_FORCE_MAX_LEN: usize = 8;

/// Enumerates every edit script from `s1` to `s2` within quota and returns
/// the irreducible count tuples reached.
///
/// At each position the script may delete from `s1`, insert from `s2`,
/// substitute differing characters or step over equal ones. A charged edit
/// branches over every edit of interest it matches. Exponential; inputs are
/// capped at [`BRUTE_FORCE_MAX_LEN`].
pub fn brute_force_fecs(s1: &[u8], s2: &[u8], profile: &EditProfile) -> Result<BTreeSet<FecTuple>> {
    brute_force_fecs_all(s1, s2, profile).map(pareto_front)
}

/// Same enumeration, keeping dominated tuples.
pub fn brute_force_fecs_all(
    s1: &[u8],
    s2: &[u8],
    profile: &EditProfile,
) -> Result<BTreeSet<FecTuple>> {
    let len = s1.len().max(s2.len());
    if len > BRUTE_FORCE_MAX_LEN {
        return Err(Error::SizeGuard {
            len,
            max: BRUTE_FORCE_MAX_LEN,
        });
    }
    let mut found = BTreeSet::new();
    let mut counts = vec![0; profile.arity()];
    enumerate(s1, s2, profile.eoi(), profile.quotas(), &mut counts, &mut found);
    Ok(found)
}

fn enumerate(
    s1: &[u8],
    s2: &[u8],
    eoi: &[EditOp],
    eq: &[usize],
    counts: &mut Vec<usize>,
    found: &mut BTreeSet<FecTuple>,
) {
    if s1.is_empty() && s2.is_empty() {
        found.insert(FecTuple(counts.clone()));
        return;
    }
    let mut charge = |edge: Edge, rest1: &[u8], rest2: &[u8], counts: &mut Vec<usize>| {
        for (i, op) in eoi.iter().enumerate() {
            if op.matches(edge) && counts[i] < eq[i] {
                counts[i] += 1;
                enumerate(rest1, rest2, eoi, eq, counts, found);
                counts[i] -= 1;
            }
        }
    };
    if let Some((&a, rest1)) = s1.split_first() {
        charge(Edge::Del { from: a }, rest1, s2, counts);
    }
    if let Some((&b, rest2)) = s2.split_first() {
        charge(Edge::Ins { to: b }, s1, rest2, counts);
    }
    if let (Some((&a, rest1)), Some((&b, rest2))) = (s1.split_first(), s2.split_first()) {
        if a == b {
            enumerate(rest1, rest2, eoi, eq, counts, found);
        } else {
            charge(Edge::Sub { from: a, to: b }, rest1, rest2, counts);
        }
    }
}

fn pareto_front(all: BTreeSet<FecTuple>) -> BTreeSet<FecTuple> {
    let le = |a: &FecTuple, b: &FecTuple| a.0.iter().zip(&b.0).all(|(x, y)| x <= y);
    all.iter()
        .filter(|t| !all.iter().any(|u| u != *t && le(u, t)))
        .cloned()
        .collect()
}

/// Unbanded reference DP over the whole `(|s1|+1) x (|s2|+1)` graph, with
/// the same edge rules as the banded engine. Returns the terminal bit set.
pub fn full_matrix_fecs(s1: &[u8], s2: &[u8], profile: &EditProfile) -> FecSet {
    let (n, m) = (s1.len(), s2.len());
    let l = profile.len();
    let mut grid = vec![vec![FecSet::empty(l); m + 1]; n + 1];
    grid[0][0] = FecSet::origin(l);
    for i in 0..=n {
        for j in 0..=m {
            if i == 0 && j == 0 {
                continue;
            }
            let mut cell = FecSet::empty(l);
            let matched = i > 0 && j > 0 && s1[i - 1] == s2[j - 1];
            if matched {
                fec_bitset::transition(&grid[i - 1][j - 1], Edge::Match, profile, &mut cell);
            } else if i > 0 && j > 0 {
                let edge = Edge::Sub { from: s1[i - 1], to: s2[j - 1] };
                fec_bitset::transition(&grid[i - 1][j - 1], edge, profile, &mut cell);
            }
            if !matched || profile.has_char_specific_indel() {
                if i > 0 {
                    fec_bitset::transition(&grid[i - 1][j], Edge::Del { from: s1[i - 1] }, profile, &mut cell);
                }
                if j > 0 {
                    fec_bitset::transition(&grid[i][j - 1], Edge::Ins { to: s2[j - 1] }, profile, &mut cell);
                }
            }
            grid[i][j] = cell;
        }
    }
    grid.swap_remove(n).swap_remove(m)
}

/// Unit-cost edit distance.
pub fn levenshtein(s1: &[u8], s2: &[u8]) -> usize {
    let mut prev: Vec<usize> = (0..=s2.len()).collect();
    let mut cur = vec![0; s2.len() + 1];
    for (i, &a) in s1.iter().enumerate() {
        cur[0] = i + 1;
        for (j, &b) in s2.iter().enumerate() {
            let sub = prev[j] + usize::from(a != b);
            cur[j + 1] = sub.min(prev[j + 1] + 1).min(cur[j] + 1);
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    prev[s2.len()]
}

/// Swaps the insertion and deletion coordinates of a wildcard
/// substitution/insertion/deletion tuple.
pub fn swap_indel(t: &FecTuple, profile: &EditProfile) -> FecTuple {
    let kinds: Vec<EditKind> = profile.eoi().iter().map(EditOp::kind).collect();
    let ins = kinds.iter().position(|&k| k == EditKind::Ins);
    let del = kinds.iter().position(|&k| k == EditKind::Del);
    let mut out = t.clone();
    if let (Some(i), Some(d)) = (ins, del) {
        out.0.swap(i, d);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sid(eq: [usize; 3]) -> EditProfile {
        EditProfile::new(
            vec![EditOp::any_sub(), EditOp::any_ins(), EditOp::any_del()],
            eq.to_vec(),
        )
        .unwrap()
    }

    #[test]
    fn agc_agg() {
        let got = brute_force_fecs(b"AGC", b"AGG", &sid([1, 1, 1])).unwrap();
        let want: BTreeSet<_> = [vec![1, 0, 0], vec![0, 1, 1]].into_iter().map(FecTuple).collect();
        assert_eq!(got, want);
    }

    #[test]
    fn identity_contains_zero() {
        let p = sid([2, 1, 1]);
        let got = brute_force_fecs(b"GATTACA", b"GATTACA", &p).unwrap();
        assert_eq!(got.len(), 1);
        assert!(got.contains(&FecTuple::zero(3)));
        // dominated scripts exist as well, e.g. delete then reinsert
        assert!(brute_force_fecs_all(b"GATTACA", b"GATTACA", &p)
            .unwrap()
            .contains(&FecTuple(vec![0, 1, 1])));
    }

    #[test]
    fn size_guard() {
        assert!(matches!(
            brute_force_fecs(b"ACGTACGTA", b"ACGTACGTA", &sid([1, 1, 1])),
            Err(Error::SizeGuard { len: 9, max: 8 })
        ));
    }

    #[test]
    fn levenshtein_examples() {
        assert_eq!(levenshtein(b"TCTTCTTCCG", b"TCCGCAGAAT"), 7);
        assert_eq!(levenshtein(b"ACGT", b"ACGT"), 0);
        assert_eq!(levenshtein(b"AGC", b"AGG"), 1);
        assert_eq!(levenshtein(b"", b"ACG"), 3);
    }

    #[test]
    fn full_matrix_agrees_on_agc() {
        let p = sid([1, 1, 1]);
        let set = full_matrix_fecs(b"AGC", b"AGG", &p);
        assert_eq!(fec_bitset::to_tuples(&set, &p).len(), 3);
    }
}
