//! Edit operations, quotas and the mixed-radix indexing of feasible edit counts.
//!
//! An [`EditProfile`] fixes an ordered list of edits of interest together with
//! a quota per edit. Every feasible edit count (one counter per edit, each
//! bounded by its quota) maps to a single index in `0..L` where
//! `L = prod(quota + 1)`. Coordinate 0 is the least significant digit, so
//! incrementing coordinate `i` adds `shift[i]` to the index.

use std::fmt;
use std::str::FromStr;

use crate::alphabet::{base_index, BASES};
use crate::error::{Error, Result};
use crate::fec_bitset::FecSet;

/// Upper bound on the lattice size `L`, i.e. the bit width of one DP cell.
pub const MAX_FEC_BITS: usize = 1 << 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EditKind {
    Sub,
    Ins,
    Del,
}

impl EditKind {
    pub fn as_str(self) -> &'static str {
        match self {
            EditKind::Sub => "sub",
            EditKind::Ins => "ins",
            EditKind::Del => "del",
        }
    }
}

/// One edit of interest. `None` in a character slot is the wildcard `*`.
///
/// Substitutions carry both characters, insertions only `to`, deletions only
/// `from`. The constructors enforce that shape.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct EditOp {
    kind: EditKind,
    from: Option<u8>,
    to: Option<u8>,
}

impl EditOp {
    pub fn sub(from: Option<u8>, to: Option<u8>) -> Self {
        EditOp { kind: EditKind::Sub, from, to }
    }

    pub fn ins(to: Option<u8>) -> Self {
        EditOp { kind: EditKind::Ins, from: None, to }
    }

    pub fn del(from: Option<u8>) -> Self {
        EditOp { kind: EditKind::Del, from, to: None }
    }

    pub fn any_sub() -> Self {
        Self::sub(None, None)
    }

    pub fn any_ins() -> Self {
        Self::ins(None)
    }

    pub fn any_del() -> Self {
        Self::del(None)
    }

    pub fn kind(&self) -> EditKind {
        self.kind
    }

    pub fn from_char(&self) -> Option<u8> {
        self.from
    }

    pub fn to_char(&self) -> Option<u8> {
        self.to
    }

    pub fn is_wildcard(&self) -> bool {
        self.from.is_none() && self.to.is_none()
    }

    /// The character this op is pinned to for insertions and deletions.
    fn indel_char(&self) -> Option<u8> {
        match self.kind {
            EditKind::Ins => self.to,
            EditKind::Del => self.from,
            EditKind::Sub => None,
        }
    }

    /// The same edit seen from the other end of a path.
    pub fn mirror(&self) -> EditOp {
        match self.kind {
            EditKind::Sub => EditOp::sub(self.to, self.from),
            EditKind::Ins => EditOp::del(self.to),
            EditKind::Del => EditOp::ins(self.from),
        }
    }

    /// Whether this op is charged by the given edge.
    pub fn matches(&self, edge: Edge) -> bool {
        let fits = |slot: Option<u8>, c: u8| slot.is_none_or(|s| s == c);
        match (self.kind, edge) {
            (EditKind::Sub, Edge::Sub { from, to }) => fits(self.from, from) && fits(self.to, to),
            (EditKind::Ins, Edge::Ins { to }) => fits(self.to, to),
            (EditKind::Del, Edge::Del { from }) => fits(self.from, from),
            _ => false,
        }
    }

    fn validate(&self) -> Result<()> {
        for c in [self.from, self.to].into_iter().flatten() {
            if base_index(c).is_none() {
                return Err(Error::InvalidProfile(format!(
                    "edit {self} uses non-nucleotide {:?}",
                    c as char
                )));
            }
        }
        let shape_ok = match self.kind {
            EditKind::Sub => true,
            EditKind::Ins => self.from.is_none(),
            EditKind::Del => self.to.is_none(),
        };
        if shape_ok {
            Ok(())
        } else {
            Err(Error::InvalidProfile(format!("malformed edit {self}")))
        }
    }
}

fn char_or_star(c: Option<u8>) -> char {
    c.map_or('*', char::from)
}

impl fmt::Display for EditOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            EditKind::Sub if self.is_wildcard() => f.write_str("sub"),
            EditKind::Sub => write!(f, "sub:{}>{}", char_or_star(self.from), char_or_star(self.to)),
            EditKind::Ins => match self.to {
                None => f.write_str("ins"),
                Some(c) => write!(f, "ins:{}", c as char),
            },
            EditKind::Del => match self.from {
                None => f.write_str("del"),
                Some(c) => write!(f, "del:{}", c as char),
            },
        }
    }
}

fn parse_slot(s: &str, whole: &str) -> Result<Option<u8>> {
    match s.as_bytes() {
        [b'*'] => Ok(None),
        [c] if base_index(c.to_ascii_uppercase()).is_some() => Ok(Some(c.to_ascii_uppercase())),
        _ => Err(Error::Parse(format!("bad character {s:?} in edit {whole:?}"))),
    }
}

impl FromStr for EditOp {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (head, tail) = match s.split_once(':') {
            Some((h, t)) => (h, Some(t)),
            None => (s, None),
        };
        match (head.to_ascii_lowercase().as_str(), tail) {
            ("sub", None) => Ok(EditOp::any_sub()),
            ("sub", Some(t)) => {
                let (from, to) = t
                    .split_once('>')
                    .ok_or_else(|| Error::Parse(format!("substitution {s:?} needs the form sub:X>Y")))?;
                Ok(EditOp::sub(parse_slot(from, s)?, parse_slot(to, s)?))
            }
            ("ins", None) => Ok(EditOp::any_ins()),
            ("ins", Some(t)) => Ok(EditOp::ins(parse_slot(t, s)?)),
            ("del", None) => Ok(EditOp::any_del()),
            ("del", Some(t)) => Ok(EditOp::del(parse_slot(t, s)?)),
            _ => Err(Error::Parse(format!("unknown edit {s:?}"))),
        }
    }
}

/// Parses a comma separated edit list such as `sub,ins:C,del:T`.
pub fn parse_eoi(s: &str) -> Result<Vec<EditOp>> {
    s.split(',').map(str::parse).collect()
}

/// Parses a comma separated quota list such as `4,2,2`.
pub fn parse_quotas(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|e| Error::Parse(format!("bad quota {t:?}: {e}")))
        })
        .collect()
}

pub fn format_eoi(eoi: &[EditOp]) -> String {
    eoi.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

pub fn format_quotas(eq: &[usize]) -> String {
    eq.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

/// An edge of the edit graph, carrying the characters it consumes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Edge {
    /// Characters agree; nothing is charged.
    Match,
    Sub { from: u8, to: u8 },
    Ins { to: u8 },
    Del { from: u8 },
}

/// A feasible edit count: one counter per edit of interest.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FecTuple(pub Vec<usize>);

impl FecTuple {
    pub fn zero(k: usize) -> Self {
        FecTuple(vec![0; k])
    }

    /// Componentwise `self <= other`.
    pub fn dominated_by(&self, other: &FecTuple) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }
}

impl From<Vec<usize>> for FecTuple {
    fn from(v: Vec<usize>) -> Self {
        FecTuple(v)
    }
}

impl fmt::Display for FecTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", format_quotas(&self.0))
    }
}

/// Keeps only the tuples not componentwise dominated by another tuple in the set.
pub fn minimal_tuples<I>(tuples: I) -> std::collections::BTreeSet<FecTuple>
where
    I: IntoIterator<Item = FecTuple>,
{
    let all: Vec<FecTuple> = tuples.into_iter().collect();
    all.iter()
        .filter(|t| !all.iter().any(|u| u != *t && u.dominated_by(t)))
        .cloned()
        .collect()
}

/// Edits of interest, their quotas and every constant derived from them.
///
/// Immutable once built; share it freely between threads.
#[derive(Debug, Clone, PartialEq)]
pub struct EditProfile {
    eoi: Vec<EditOp>,
    eq: Vec<usize>,
    len: usize,
    shift: Vec<usize>,
    masks: Vec<FecSet>,
    band: usize,
    char_indel: bool,
    // matching index lists per edge, indexed by base
    sub_table: [[Vec<usize>; 4]; 4],
    ins_table: [Vec<usize>; 4],
    del_table: [Vec<usize>; 4],
}

impl EditProfile {
    pub fn new(eoi: Vec<EditOp>, eq: Vec<usize>) -> Result<Self> {
        if eoi.is_empty() {
            return Err(Error::InvalidProfile("at least one edit of interest is required".into()));
        }
        if eoi.len() != eq.len() {
            return Err(Error::InvalidProfile(format!(
                "{} edits of interest but {} quotas",
                eoi.len(),
                eq.len()
            )));
        }
        for op in &eoi {
            op.validate()?;
        }

        let mut len: usize = 1;
        for &quota in &eq {
            len = quota
                .checked_add(1)
                .and_then(|radix| len.checked_mul(radix))
                .filter(|&l| l <= MAX_FEC_BITS)
                .ok_or_else(|| Error::Capacity {
                    required: required_bits(&eq),
                    max: MAX_FEC_BITS,
                })?;
        }

        let mut shift = Vec::with_capacity(eq.len());
        let mut acc = 1;
        for &quota in &eq {
            shift.push(acc);
            acc *= quota + 1;
        }

        let masks = (0..eq.len())
            .map(|i| {
                let mut m = FecSet::empty(len);
                for k in 0..len {
                    if (k / shift[i]) % (eq[i] + 1) < eq[i] {
                        m.insert(k);
                    }
                }
                m
            })
            .collect();

        // a path drifts off the diagonal by at most all its insertions or
        // all its deletions
        let total = |kind| eoi.iter().zip(&eq).filter(|(op, _)| op.kind == kind).map(|(_, &q)| q).sum::<usize>();
        let band = total(EditKind::Ins).max(total(EditKind::Del));

        let char_indel = eoi
            .iter()
            .any(|op| op.kind != EditKind::Sub && op.indel_char().is_some());

        let indices = |edge: Edge| -> Vec<usize> {
            eoi.iter()
                .enumerate()
                .filter(|(_, op)| op.matches(edge))
                .map(|(i, _)| i)
                .collect()
        };
        let sub_table = BASES.map(|from| BASES.map(|to| indices(Edge::Sub { from, to })));
        let ins_table = BASES.map(|to| indices(Edge::Ins { to }));
        let del_table = BASES.map(|from| indices(Edge::Del { from }));

        Ok(EditProfile {
            eoi,
            eq,
            len,
            shift,
            masks,
            band,
            char_indel,
            sub_table,
            ins_table,
            del_table,
        })
    }

    /// Parses the textual forms used on the command line, e.g. `"sub,ins,del"` / `"4,2,2"`.
    pub fn parse(eoi: &str, eq: &str) -> Result<Self> {
        Self::new(parse_eoi(eoi)?, parse_quotas(eq)?)
    }

    pub fn eoi(&self) -> &[EditOp] {
        &self.eoi
    }

    pub fn quotas(&self) -> &[usize] {
        &self.eq
    }

    /// Number of edits of interest.
    pub fn arity(&self) -> usize {
        self.eoi.len()
    }

    /// Lattice size `L`.
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn shifts(&self) -> &[usize] {
        &self.shift
    }

    pub fn masks(&self) -> &[FecSet] {
        &self.masks
    }

    /// Band half-width: the larger of the summed insertion quotas and the
    /// summed deletion quotas.
    pub fn band(&self) -> usize {
        self.band
    }

    /// Whether some insertion or deletion is tied to one character. Such
    /// profiles also need insertion and deletion edges into nodes whose
    /// characters match: a path may delete an equal character elsewhere and
    /// only the cheaper-looking match would otherwise be explored.
    pub fn has_char_specific_indel(&self) -> bool {
        self.char_indel
    }

    pub fn index_encode(&self, k: usize) -> Result<FecTuple> {
        if k >= self.len {
            return Err(Error::OutOfRange {
                what: "lattice index",
                detail: format!("{k} not below {}", self.len),
            });
        }
        let mut rest = k;
        let counts = self
            .eq
            .iter()
            .map(|&quota| {
                let digit = rest % (quota + 1);
                rest /= quota + 1;
                digit
            })
            .collect();
        Ok(FecTuple(counts))
    }

    pub fn index_decode(&self, t: &FecTuple) -> Result<usize> {
        if t.0.len() != self.eq.len() || t.0.iter().zip(&self.eq).any(|(c, q)| c > q) {
            return Err(Error::OutOfRange {
                what: "feasible edit count",
                detail: format!("{t} outside quotas ({})", format_quotas(&self.eq)),
            });
        }
        Ok(t.0.iter().zip(&self.shift).map(|(c, s)| c * s).sum())
    }

    /// Indices of every edit of interest charged by `edge`.
    pub fn matching_edits(&self, edge: Edge) -> &[usize] {
        let idx = |c: u8| base_index(c).expect("edge characters are validated nucleotides");
        match edge {
            Edge::Match => &[],
            Edge::Sub { from, to } => &self.sub_table[idx(from)][idx(to)],
            Edge::Ins { to } => &self.ins_table[idx(to)],
            Edge::Del { from } => &self.del_table[idx(from)],
        }
    }
}

fn required_bits(eq: &[usize]) -> usize {
    eq.iter()
        .try_fold(1usize, |acc, &q| acc.checked_mul(q.saturating_add(1)))
        .unwrap_or(usize::MAX)
}

/// Channel error budget a codebook must correct, one target count per edit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ErrorSpec {
    pub eoi: Vec<EditOp>,
    pub targets: Vec<usize>,
}

impl ErrorSpec {
    pub fn new(eoi: Vec<EditOp>, targets: Vec<usize>) -> Result<Self> {
        if eoi.len() != targets.len() || eoi.is_empty() {
            return Err(Error::InvalidProfile(format!(
                "{} edits of interest but {} correction targets",
                eoi.len(),
                targets.len()
            )));
        }
        Ok(ErrorSpec { eoi, targets })
    }

    /// Whether pair checks keep the per-character edits. With substitutions
    /// in the budget, character-specific edits compose: one side may chain
    /// `A>C` and `C>G`, or both sides may substitute the same base, giving
    /// path edges that no single listed edit matches.
    pub fn exact_check(&self) -> bool {
        let has_sub = self.eoi.iter().any(|op| op.kind == EditKind::Sub);
        !has_sub || self.eoi.iter().all(EditOp::is_wildcard)
    }

    /// The budget itself when [`exact_check`](Self::exact_check) holds,
    /// otherwise one wildcard edit per kind with the targets summed.
    pub fn check_budget(&self) -> (Vec<EditOp>, Vec<usize>) {
        if self.exact_check() {
            return (self.eoi.clone(), self.targets.clone());
        }
        let mut eoi = Vec::new();
        let mut targets = Vec::new();
        for (kind, op) in [
            (EditKind::Sub, EditOp::any_sub()),
            (EditKind::Ins, EditOp::any_ins()),
            (EditKind::Del, EditOp::any_del()),
        ] {
            let kinds = self.eoi.iter().zip(&self.targets).filter(|(o, _)| o.kind == kind);
            if kinds.clone().next().is_some() {
                eoi.push(op);
                targets.push(kinds.map(|(_, &t)| t).sum());
            }
        }
        (eoi, targets)
    }

    /// Edits of interest for pair checking: the check budget plus any
    /// missing mirror. An edit on one side of a pair shows up reversed on
    /// the path between the two codewords: an insertion as a deletion, a
    /// substitution `a>b` as `b>a`.
    pub fn check_eoi(&self) -> (Vec<EditOp>, Vec<usize>) {
        let (mut eoi, mut targets) = self.check_budget();
        for op in eoi.clone() {
            let mirror = op.mirror();
            if !eoi.contains(&mirror) {
                eoi.push(mirror);
                targets.push(0);
            }
        }
        (eoi, targets)
    }

    /// Profile used to check that two codewords can never be confused.
    pub fn check_profile(&self) -> Result<EditProfile> {
        let (eoi, targets) = self.check_eoi();
        let eq = quota_for_pair_check(&eoi, &targets)?;
        EditProfile::new(eoi, eq)
    }
}

/// Quotas for checking a codeword pair against a correction budget.
///
/// Two codewords are confusable when some corrupted word is reachable from
/// both; composing one corruption with the reverse of the other gives a path
/// between the codewords. Each quota is therefore the sum of the targets of
/// the edits equal to it or to its reverse. For wildcard edits this doubles
/// substitutions and gives every insertion and deletion quota
/// `t_ins + t_del`. Reverses missing from `eoi` are not charged; see
/// [`ErrorSpec::check_eoi`].
pub fn quota_for_pair_check(eoi: &[EditOp], targets: &[usize]) -> Result<Vec<usize>> {
    if eoi.len() != targets.len() {
        return Err(Error::InvalidProfile(format!(
            "{} edits of interest but {} correction targets",
            eoi.len(),
            targets.len()
        )));
    }
    Ok(eoi
        .iter()
        .map(|op| {
            eoi.iter()
                .zip(targets)
                .map(|(o, &t)| t * (usize::from(o == op) + usize::from(o.mirror() == *op)))
                .sum()
        })
        .collect())
}
