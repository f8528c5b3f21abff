//! Bit-array sets of feasible edit counts and the transition kernel on them.

use std::collections::BTreeSet;
use std::fmt;

use crate::edit_model::{Edge, EditProfile, FecTuple};
use crate::error::Result;

const WORD: usize = 64;

/// Set of feasible edit counts at one graph node, bit `k` standing for the
/// tuple with lattice index `k`. An empty set means the node is out of reach
/// within quota.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FecSet {
    len: usize,
    words: Vec<u64>,
}

impl FecSet {
    pub fn empty(len: usize) -> Self {
        FecSet {
            len,
            words: vec![0; len.div_ceil(WORD)],
        }
    }

    /// The set holding only the zero tuple.
    pub fn origin(len: usize) -> Self {
        let mut s = Self::empty(len);
        s.insert(0);
        s
    }

    /// Bit width `L`.
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn insert(&mut self, k: usize) {
        assert!(k < self.len, "bit {k} outside set of width {}", self.len);
        self.words[k / WORD] |= 1 << (k % WORD);
    }

    pub fn contains(&self, k: usize) -> bool {
        k < self.len && self.words[k / WORD] >> (k % WORD) & 1 == 1
    }

    pub fn clear(&mut self) {
        self.words.fill(0);
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Index of the lowest set bit.
    pub fn lowest(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * WORD + w.trailing_zeros() as usize)
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(move |&k| self.contains(k))
    }

    pub fn union_with(&mut self, other: &FecSet) {
        self.check_width(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn copy_from(&mut self, other: &FecSet) {
        self.check_width(other);
        self.words.copy_from_slice(&other.words);
    }

    /// `self |= (source & mask) << shift`, dropping bits past the width.
    fn or_masked_shifted(&mut self, source: &FecSet, mask: &FecSet, shift: usize) {
        let word_shift = shift / WORD;
        let bit_shift = shift % WORD;
        let masked = |i: usize| source.words[i] & mask.words[i];
        for w in word_shift..self.words.len() {
            let lo = w - word_shift;
            let mut v = masked(lo) << bit_shift;
            if bit_shift > 0 && lo > 0 {
                v |= masked(lo - 1) >> (WORD - bit_shift);
            }
            self.words[w] |= v;
        }
        self.trim();
    }

    fn trim(&mut self) {
        let tail = self.len % WORD;
        if tail != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << tail) - 1;
            }
        }
    }

    fn check_width(&self, other: &FecSet) {
        assert_eq!(
            self.len, other.len,
            "feasible edit count sets from different profiles"
        );
    }

    /// Grouped bit string, low index first, eight bits per group.
    pub fn bit_string(&self) -> String {
        let mut out = String::with_capacity(self.len + self.len / 8);
        for k in 0..self.len {
            if k > 0 && k % 8 == 0 {
                out.push(' ');
            }
            out.push(if self.contains(k) { '1' } else { '0' });
        }
        out
    }
}

impl fmt::Debug for FecSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FecSet[{}]", self.bit_string())
    }
}

/// Accumulates the effect of one edge from `source` into `target`.
///
/// A match edge copies the source set. Any other edge increments, for every
/// edit of interest it charges, that coordinate of each source tuple; tuples
/// already at quota in that coordinate are masked out first.
pub fn transition(source: &FecSet, edge: Edge, profile: &EditProfile, target: &mut FecSet) {
    assert_eq!(source.len, profile.len(), "source width does not match profile");
    assert_eq!(target.len, profile.len(), "target width does not match profile");
    if edge == Edge::Match {
        target.union_with(source);
        return;
    }
    for &i in profile.matching_edits(edge) {
        target.or_masked_shifted(source, &profile.masks()[i], profile.shifts()[i]);
    }
}

/// `L` minus the lowest set index, or 0 for the empty set.
pub fn loss(set: &FecSet) -> usize {
    set.lowest().map_or(0, |k| set.len - k)
}

pub fn to_tuples(set: &FecSet, profile: &EditProfile) -> BTreeSet<FecTuple> {
    set.ones()
        .map(|k| profile.index_encode(k).expect("set width matches profile"))
        .collect()
}

pub fn from_tuples<'a, I>(tuples: I, profile: &EditProfile) -> Result<FecSet>
where
    I: IntoIterator<Item = &'a FecTuple>,
{
    let mut set = FecSet::empty(profile.len());
    for t in tuples {
        set.insert(profile.index_decode(t)?);
    }
    Ok(set)
}

/// Tuple-set notation, e.g. `{(1,0,0),(0,1,1)}`.
pub fn format_tuples<'a, I>(tuples: I) -> String
where
    I: IntoIterator<Item = &'a FecTuple>,
{
    let inner: Vec<String> = tuples.into_iter().map(ToString::to_string).collect();
    format!("{{{}}}", inner.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::edit_model::EditOp;

    fn profile_422() -> EditProfile {
        EditProfile::new(
            vec![EditOp::any_sub(), EditOp::any_ins(), EditOp::any_del()],
            vec![4, 2, 2],
        )
        .unwrap()
    }

    fn tuples(v: &[[usize; 3]]) -> BTreeSet<FecTuple> {
        v.iter().map(|t| FecTuple(t.to_vec())).collect()
    }

    fn example_source(p: &EditProfile) -> FecSet {
        from_tuples(&tuples(&[[0, 0, 0], [4, 1, 1], [1, 2, 1], [1, 1, 2]]), p).unwrap()
    }

    #[test]
    fn deletion_edge_discards_overflow() {
        let p = profile_422();
        let src = example_source(&p);
        let mut dst = FecSet::empty(p.len());
        transition(&src, Edge::Del { from: b'A' }, &p, &mut dst);
        assert_eq!(to_tuples(&dst, &p), tuples(&[[0, 0, 1], [4, 1, 2], [1, 2, 2]]));
    }

    #[test]
    fn match_edge_copies() {
        let p = profile_422();
        let src = example_source(&p);
        let mut dst = FecSet::empty(p.len());
        transition(&src, Edge::Match, &p, &mut dst);
        assert_eq!(dst, src);
    }

    #[test]
    fn empty_source_is_inert() {
        let p = profile_422();
        let src = FecSet::empty(p.len());
        let mut dst = FecSet::empty(p.len());
        for edge in [
            Edge::Match,
            Edge::Sub { from: b'A', to: b'C' },
            Edge::Ins { to: b'G' },
            Edge::Del { from: b'T' },
        ] {
            transition(&src, edge, &p, &mut dst);
        }
        assert!(dst.is_empty());
    }

    #[test]
    fn loss_values() {
        let mut s = FecSet::empty(45);
        assert_eq!(loss(&s), 0);
        s.insert(44);
        assert_eq!(loss(&s), 1);
        s.insert(0);
        assert_eq!(loss(&s), 45);
    }

    #[test]
    fn tuple_bridge() {
        let p = profile_422();
        let origin = from_tuples(&tuples(&[[0, 0, 0]]), &p).unwrap();
        assert_eq!(origin, FecSet::origin(45));
        assert!(from_tuples(&BTreeSet::new(), &p).unwrap().is_empty());
        assert!(from_tuples(&tuples(&[[0, 3, 0]]), &p).is_err());
    }

    #[test]
    fn bit_string_groups_by_eight() {
        let mut s = FecSet::empty(10);
        s.insert(1);
        s.insert(9);
        assert_eq!(s.bit_string(), "01000000 01");
        assert_eq!(format!("{s:?}"), "FecSet[01000000 01]");
    }

    #[test]
    fn shifts_cross_word_boundaries() {
        let p = EditProfile::new(vec![EditOp::any_sub(), EditOp::any_del()], vec![99, 2]).unwrap();
        assert_eq!(p.len(), 300);
        let mut src = FecSet::empty(300);
        src.insert(63);
        src.insert(150);
        src.insert(250);
        let mut dst = FecSet::empty(300);
        transition(&src, Edge::Del { from: b'C' }, &p, &mut dst);
        // shift is 100; 250 is already at the deletion quota
        assert_eq!(dst.ones().collect::<Vec<_>>(), vec![163, 250]);
    }
}
