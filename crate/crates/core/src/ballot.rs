//! Ballot sequences (Dyck words) and their bijection with root ideals.
//!
//! The word of an ideal of A_n has length `2(n+1)`. Reading the matrix
//! columns `c = 1..=n+1` in turn, emit a `1` for the column and then one `0`
//! for every row whose first ideal column is `c + 1` (rows with no ideal
//! entries close after the last column). With this rule the empty ideal is
//! `1^{n+1} 0^{n+1}`, the minimal roots match the `01` factors in order, and
//! removing a minimal root turns its `01` into `10`.

use std::fmt;

use crate::error::{Error, Result};
use crate::ideal::RootIdeal;
use crate::root::{Rank, Root};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BallotSequence {
    bits: Vec<bool>,
}

impl BallotSequence {
    pub fn new(bits: Vec<bool>) -> Result<Self> {
        if !bits.len().is_multiple_of(2) {
            return Err(Error::InvalidBallot(format!("odd length {}", bits.len())));
        }
        if bits.len() / 2 > Rank::MAX + 1 {
            return Err(Error::RankLimit {
                rank: bits.len() / 2 - 1,
                limit: Rank::MAX,
                what: "ballot words",
            });
        }
        let mut h: isize = 0;
        for (k, &b) in bits.iter().enumerate() {
            h += if b { 1 } else { -1 };
            if h < 0 {
                return Err(Error::InvalidBallot(format!(
                    "height drops below zero at position {}",
                    k + 1
                )));
            }
        }
        if h != 0 {
            return Err(Error::InvalidBallot("unequal numbers of ones and zeros".into()));
        }
        Ok(BallotSequence { bits })
    }

    pub fn parse(s: &str) -> Result<Self> {
        let bits = s
            .trim()
            .chars()
            .map(|c| match c {
                '1' => Ok(true),
                '0' => Ok(false),
                _ => Err(Error::InvalidBallot(format!("unexpected character `{c}`"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(bits)
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    /// The rank `n` with `len = 2(n+1)`; words of length 0 have no rank.
    pub fn rank(&self) -> Option<Rank> {
        (self.bits.len() >= 2).then(|| Rank(self.bits.len() / 2 - 1))
    }

    /// Prefix heights `h_1, ..., h_{2(n+1)}`.
    pub fn heights(&self) -> Vec<usize> {
        let mut h = 0usize;
        self.bits
            .iter()
            .map(|&b| {
                if b {
                    h += 1;
                } else {
                    h -= 1;
                }
                h
            })
            .collect()
    }

    pub fn max_height(&self) -> usize {
        self.heights().into_iter().max().unwrap_or(0)
    }

    /// Number of `01` factors.
    pub fn valleys(&self) -> usize {
        self.bits.windows(2).filter(|w| !w[0] && w[1]).count()
    }

    /// Packs the word into an integer, first letter most significant.
    pub fn key(&self) -> u64 {
        self.bits.iter().fold(0u64, |acc, &b| (acc << 1) | b as u64)
    }
}

impl fmt::Display for BallotSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

pub fn ideal_to_ballot(ideal: &RootIdeal) -> BallotSequence {
    let size = ideal.rank().size();
    let cols = ideal.first_columns();
    let mut bits = Vec::with_capacity(2 * size);
    let mut row = 0;
    for c in 1..=size {
        bits.push(true);
        // rows whose last non-ideal column is c
        while row < size && cols[row] <= c + 1 {
            bits.push(false);
            row += 1;
        }
    }
    BallotSequence { bits }
}

pub fn ballot_to_ideal(b: &BallotSequence) -> Result<RootIdeal> {
    let rank = b.rank().ok_or_else(|| Error::InvalidBallot("empty word".into()))?;
    let mut cols = Vec::with_capacity(rank.size());
    let mut column = 0;
    for &bit in &b.bits {
        if bit {
            column += 1;
        } else {
            cols.push(column + 1);
        }
    }
    Ok(RootIdeal::from_first_columns(rank, &cols))
}

/// Positions (1-based, of the `0`) of the `01` factors, in order, paired with
/// the minimal root each one encodes.
pub fn valley_roots(b: &BallotSequence) -> Vec<(usize, Root)> {
    let mut out = Vec::new();
    let (mut ones, mut zeros) = (0, 0);
    for (k, w) in b.bits.windows(2).enumerate() {
        if w[0] {
            ones += 1;
        } else {
            zeros += 1;
            if w[1] {
                // zeros so far = row of the root, ones so far = its right index
                out.push((k + 1, Root { i: zeros, j: ones }));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(s: &str) -> BallotSequence {
        BallotSequence::parse(s).unwrap()
    }

    #[test]
    fn conventions() {
        let a3 = Rank(3);
        assert_eq!(ideal_to_ballot(&RootIdeal::empty(a3)).to_string(), "11110000");
        assert_eq!(ideal_to_ballot(&RootIdeal::full(a3)).to_string(), "10101010");
        let i = RootIdeal::parse("[2,2]", a3).unwrap();
        assert_eq!(ideal_to_ballot(&i).to_string(), "11001100");
        assert_eq!(ballot_to_ideal(&word("11001100")).unwrap(), i);
        assert_eq!(ideal_to_ballot(&RootIdeal::empty(Rank(0))).to_string(), "10");
    }

    #[test]
    fn statistics() {
        assert_eq!(word("11110000").valleys(), 0);
        assert_eq!(word("11110000").max_height(), 4);
        assert_eq!(word("10101010").valleys(), 3);
        assert_eq!(word("10101010").max_height(), 1);
        assert_eq!(word("11001100").valleys(), 1);
    }

    #[test]
    fn valleys_encode_minimal_roots() {
        let i = RootIdeal::parse("[1,1],[3,3]", Rank(3)).unwrap();
        let b = ideal_to_ballot(&i);
        let roots: Vec<Root> = valley_roots(&b).into_iter().map(|(_, r)| r).collect();
        assert_eq!(roots, i.min_roots());
    }

    #[test]
    fn rejects_bad_words() {
        assert!(BallotSequence::parse("0110").is_err());
        assert!(BallotSequence::parse("1100 0").is_err());
        assert!(BallotSequence::parse("111000100").is_err());
        assert!(BallotSequence::parse("1110").is_err());
        assert!(ballot_to_ideal(&word("")).is_err());
    }
}
