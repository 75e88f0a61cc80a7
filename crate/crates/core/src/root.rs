//! Positive roots of type A_n.
//!
//! The root `[i,j]` (with `1 <= i <= j <= n`) is `e_i - e_{j+1}`, the sum of
//! the simple roots `alpha_i, ..., alpha_j`. Its root vector is the matrix unit
//! at position `(i, j+1)` of an `(n+1) x (n+1)` matrix, so simple roots sit on
//! the superdiagonal.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Rank `n` of the root system A_n; matrices are `(n+1) x (n+1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rank(pub usize);

impl Rank {
    /// Largest rank whose ballot words fit in a `u64` key.
    pub const MAX: usize = 31;

    pub fn new(n: usize) -> Result<Self> {
        if n > Self::MAX {
            return Err(Error::RankLimit {
                rank: n,
                limit: Self::MAX,
                what: "representation",
            });
        }
        Ok(Rank(n))
    }

    pub fn n(self) -> usize {
        self.0
    }

    /// Matrix size `n + 1`.
    pub fn size(self) -> usize {
        self.0 + 1
    }

    /// All positive roots, ordered by `(i, j)`.
    pub fn positive_roots(self) -> impl Iterator<Item = Root> {
        let n = self.0;
        (1..=n).flat_map(move |i| (i..=n).map(move |j| Root { i, j }))
    }

    pub fn num_positive_roots(self) -> usize {
        self.0 * (self.0 + 1) / 2
    }
}

impl fmt::Display for Rank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A_{}", self.0)
    }
}

/// The positive root `[i,j] = e_i - e_{j+1}`, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Root {
    pub i: usize,
    pub j: usize,
}

impl Root {
    pub fn new(i: usize, j: usize, rank: Rank) -> Result<Self> {
        let root = Root { i, j };
        root.check(rank)?;
        Ok(root)
    }

    pub fn simple(i: usize) -> Self {
        Root { i, j: i }
    }

    pub fn check(self, rank: Rank) -> Result<()> {
        if self.i >= 1 && self.i <= self.j && self.j <= rank.n() {
            Ok(())
        } else {
            Err(Error::InvalidRoot {
                i: self.i,
                j: self.j,
                rank: rank.n(),
            })
        }
    }

    pub fn is_simple(self) -> bool {
        self.i == self.j
    }

    /// Height: number of simple roots in the sum.
    pub fn height(self) -> usize {
        self.j - self.i + 1
    }

    /// Matrix position `(row, col)` of the root vector, 1-based.
    pub fn matrix_position(self) -> (usize, usize) {
        (self.i, self.j + 1)
    }

    /// Root whose root vector sits at matrix position `(row, col)`, `row < col`.
    pub fn from_matrix_position(row: usize, col: usize) -> Self {
        debug_assert!(row < col);
        Root { i: row, j: col - 1 }
    }

    /// `self ⪯ other` in the root poset.
    pub fn leq(self, other: Root) -> bool {
        root_leq(self, other)
    }

    pub fn comparable(self, other: Root) -> bool {
        root_leq(self, other) || root_leq(other, self)
    }
}

/// `[i,j] ⪯ [i',j']` iff `i' <= i` and `j <= j'`.
pub fn root_leq(r1: Root, r2: Root) -> bool {
    r2.i <= r1.i && r1.j <= r2.j
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.i, self.j)
    }
}

impl FromStr for Root {
    type Err = Error;

    /// Accepts `[i,j]`, and `[i]` for the simple root `alpha_i`.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("expected [i,j], got `{s}`")))?;
        let nums: Vec<usize> = inner
            .split(',')
            .map(|t| t.trim().parse::<usize>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|e| Error::Parse(format!("bad root `{s}`: {e}")))?;
        match nums.as_slice() {
            [i] => Ok(Root::simple(*i)),
            [i, j] => Ok(Root { i: *i, j: *j }),
            _ => Err(Error::Parse(format!("expected [i,j], got `{s}`"))),
        }
    }
}
