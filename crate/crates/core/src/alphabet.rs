//! The quaternary nucleotide alphabet. Sequences are plain ASCII byte slices.

use crate::error::{Error, Result};

pub const BASES: [u8; 4] = *b"ACGT";

#[inline]
pub fn base_index(b: u8) -> Option<usize> {
    match b {
        b'A' => Some(0),
        b'C' => Some(1),
        b'G' => Some(2),
        b'T' => Some(3),
        _ => None,
    }
}

#[inline]
pub fn is_gc(b: u8) -> bool {
    b == b'G' || b == b'C'
}

pub fn validate(seq: &[u8]) -> Result<()> {
    match seq.iter().position(|&b| base_index(b).is_none()) {
        Some(position) => Err(Error::Alphabet {
            byte: seq[position] as char,
            position,
        }),
        None => Ok(()),
    }
}

/// Length of the homopolymer run ending at the last base (0 for an empty slice).
pub fn last_run(seq: &[u8]) -> usize {
    match seq.last() {
        Some(&last) => seq.iter().rev().take_while(|&&b| b == last).count(),
        None => 0,
    }
}

/// Longest homopolymer run anywhere in `seq`.
pub fn max_run(seq: &[u8]) -> usize {
    seq.chunk_by(|a, b| a == b).map(<[u8]>::len).max().unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_nucleotides() {
        assert!(validate(b"ACGT").is_ok());
        let err = validate(b"ACNT").unwrap_err();
        assert!(matches!(err, Error::Alphabet { byte: 'N', position: 2 }));
        assert!(validate(b"acgt").is_err());
    }

    #[test]
    fn runs() {
        assert_eq!(last_run(b""), 0);
        assert_eq!(last_run(b"ACGGG"), 3);
        assert_eq!(max_run(b"AAACGGT"), 3);
        assert_eq!(max_run(b""), 0);
    }
}
