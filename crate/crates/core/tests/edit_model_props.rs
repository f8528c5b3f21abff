use std::collections::BTreeSet;

use ids_codebook::edit_model::{Edge, EditOp, EditProfile, FecTuple};
use ids_codebook::fec_bitset::{self, FecSet};
use proptest::prelude::*;

fn quotas() -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(0usize..5, 1..=4)
}

fn wildcard_profile(eq: Vec<usize>) -> EditProfile {
    let ops = [EditOp::any_sub(), EditOp::any_ins(), EditOp::any_del(), EditOp::any_sub()];
    EditProfile::new(ops[..eq.len()].to_vec(), eq).unwrap()
}

fn base() -> impl Strategy<Value = u8> {
    prop::sample::select(b"ACGT".to_vec())
}

fn edge() -> impl Strategy<Value = Edge> {
    prop_oneof![
        Just(Edge::Match),
        (base(), base()).prop_map(|(from, to)| Edge::Sub { from, to }),
        base().prop_map(|to| Edge::Ins { to }),
        base().prop_map(|from| Edge::Del { from }),
    ]
}

fn set_strategy(eq: Vec<usize>) -> impl Strategy<Value = (EditProfile, FecSet)> {
    let p = wildcard_profile(eq);
    let l = p.len();
    prop::collection::btree_set(0..l, 0..=l.min(12)).prop_map(move |bits| {
        let mut s = FecSet::empty(l);
        bits.into_iter().for_each(|b| s.insert(b));
        (p.clone(), s)
    })
}

proptest! {
    #[test]
    fn index_is_a_bijection(eq in quotas()) {
        let p = wildcard_profile(eq.clone());
        let all: BTreeSet<FecTuple> = (0..p.len()).map(|k| p.index_encode(k).unwrap()).collect();
        prop_assert_eq!(all.len(), p.len());
        for t in &all {
            prop_assert!(t.0.iter().zip(&eq).all(|(a, q)| a <= q));
            let back = p.index_decode(t).unwrap();
            prop_assert_eq!(&p.index_encode(back).unwrap(), t);
        }
        prop_assert!(p.index_encode(p.len()).is_err());
    }

    #[test]
    fn masks_mark_non_saturated_coordinates(eq in quotas()) {
        let p = wildcard_profile(eq.clone());
        for (i, mask) in p.masks().iter().enumerate() {
            // every coordinate value but the top one: L * eq / (eq + 1) bits
            prop_assert_eq!(mask.count() * (eq[i] + 1), p.len() * eq[i]);
            for k in 0..p.len() {
                let t = p.index_encode(k).unwrap();
                prop_assert_eq!(mask.contains(k), t.0[i] < eq[i]);
            }
        }
    }

    #[test]
    fn transition_matches_tuple_semantics((p, source) in quotas().prop_flat_map(set_strategy), e in edge()) {
        let mut got = FecSet::empty(p.len());
        fec_bitset::transition(&source, e, &p, &mut got);
        let mut want = BTreeSet::new();
        for t in fec_bitset::to_tuples(&source, &p) {
            if e == Edge::Match {
                want.insert(t.clone());
                continue;
            }
            for (i, op) in p.eoi().iter().enumerate() {
                if op.matches(e) && t.0[i] < p.quotas()[i] {
                    let mut u = t.clone();
                    u.0[i] += 1;
                    want.insert(u);
                }
            }
        }
        prop_assert_eq!(fec_bitset::to_tuples(&got, &p), want);
        prop_assert!(got.ones().all(|k| k < p.len()));
    }

    #[test]
    fn transition_distributes_over_union(
        (p, a, b) in quotas().prop_flat_map(|eq| (set_strategy(eq.clone()), set_strategy(eq)))
            .prop_map(|((p, a), (_, b))| (p, a, b)),
        e in edge(),
    ) {
        let l = p.len();
        let mut union = a.clone();
        union.union_with(&b);
        let mut lhs = FecSet::empty(l);
        fec_bitset::transition(&union, e, &p, &mut lhs);
        let mut rhs = FecSet::empty(l);
        fec_bitset::transition(&a, e, &p, &mut rhs);
        fec_bitset::transition(&b, e, &p, &mut rhs);
        prop_assert_eq!(&lhs, &rhs);
        // monotone: a is a subset of the union, so its image is too
        let mut image = FecSet::empty(l);
        fec_bitset::transition(&a, e, &p, &mut image);
        let mut joined = image.clone();
        joined.union_with(&lhs);
        prop_assert_eq!(joined, lhs);
    }

    #[test]
    fn transition_is_deterministic((p, source) in quotas().prop_flat_map(set_strategy), e in edge()) {
        let mut x = FecSet::empty(p.len());
        let mut y = FecSet::empty(p.len());
        fec_bitset::transition(&source, e, &p, &mut x);
        fec_bitset::transition(&source, e, &p, &mut y);
        prop_assert_eq!(x, y);
    }

    #[test]
    fn specific_edits_match_no_more_than_wildcards(e in edge(), c in base()) {
        for (specific, wildcard) in [
            (EditOp::del(Some(c)), EditOp::any_del()),
            (EditOp::ins(Some(c)), EditOp::any_ins()),
            (EditOp::sub(Some(c), None), EditOp::any_sub()),
            (EditOp::sub(None, Some(c)), EditOp::any_sub()),
        ] {
            prop_assert!(!specific.matches(e) || wildcard.matches(e));
        }
        prop_assert!(!EditOp::any_sub().matches(Edge::Match));
    }

    #[test]
    fn loss_is_bounded((p, source) in quotas().prop_flat_map(set_strategy)) {
        let loss = fec_bitset::loss(&source);
        prop_assert!(loss <= p.len());
        prop_assert_eq!(loss == 0, source.is_empty());
        prop_assert_eq!(source.contains(0), loss == p.len());
    }
}

#[test]
fn char_specific_edges() {
    let p = EditProfile::parse("del:A,del,sub:C>G", "1,2,1").unwrap();
    assert_eq!(p.matching_edits(Edge::Del { from: b'A' }), [0, 1]);
    assert_eq!(p.matching_edits(Edge::Del { from: b'C' }), [1]);
    assert_eq!(p.matching_edits(Edge::Sub { from: b'C', to: b'G' }), [2]);
    assert!(p.matching_edits(Edge::Sub { from: b'C', to: b'T' }).is_empty());
    assert!(p.matching_edits(Edge::Ins { to: b'A' }).is_empty());
    assert_eq!(p.band(), 3);
}
