//! Integer partitions, compositions, and the dominance order.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
///
/// The derived `Ord` is lexicographic on the parts; tables list partitions in
/// the reverse of that order (`[4]`, `[3,1]`, `[2,2]`, `[2,1,1]`, ...).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    /// Sorts arbitrary positive parts into a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Result<Self> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::new(parts)
    }

    /// `(1^k)`.
    pub fn ones(k: usize) -> Self {
        Partition(vec![1; k])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Largest part, 0 for the empty partition.
    pub fn largest(&self) -> usize {
        self.0.first().copied().unwrap_or(0)
    }

    /// Conjugate partition: `dual[j-1] = #{ i : parts[i] >= j }`.
    pub fn dual(&self) -> Partition {
        let width = self.largest();
        Partition(
            (1..=width)
                .map(|j| self.0.iter().take_while(|&&p| p >= j).count())
                .collect(),
        )
    }

    /// Prefix sums `p_1, p_1 + p_2, ...`.
    pub fn prefix_sums(&self) -> Vec<usize> {
        self.0
            .iter()
            .scan(0, |acc, &p| {
                *acc += p;
                Some(*acc)
            })
            .collect()
    }

    /// Sum of the `k` largest parts.
    pub fn prefix_sum(&self, k: usize) -> usize {
        self.0.iter().take(k).sum()
    }

    /// Multiplicity of the part `j`.
    pub fn multiplicity(&self, j: usize) -> usize {
        self.0.iter().filter(|&&p| p == j).count()
    }

    /// `self <= other` in dominance order.
    pub fn dominated_by(&self, other: &Partition) -> Result<bool> {
        dominance_leq(self, other)
    }

    /// Dominance comparison; `None` for incomparable partitions of equal size.
    pub fn dominance_cmp(&self, other: &Partition) -> Result<Option<Ordering>> {
        let le = dominance_leq(self, other)?;
        let ge = dominance_leq(other, self)?;
        Ok(match (le, ge) {
            (true, true) => Some(Ordering::Equal),
            (true, false) => Some(Ordering::Less),
            (false, true) => Some(Ordering::Greater),
            (false, false) => None,
        })
    }
}

/// True iff every prefix sum of `p` is at most the matching prefix sum of `q`.
pub fn dominance_leq(p: &Partition, q: &Partition) -> Result<bool> {
    if p.size() != q.size() {
        return Err(Error::SizeMismatch(p.size(), q.size()));
    }
    let k = p.len().max(q.len());
    Ok((1..=k).all(|t| p.prefix_sum(t) <= q.prefix_sum(t)))
}

/// All partitions of `n`, in reverse lexicographic order starting with `[n]`.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            cur.push(part);
            go(rest - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (k, p) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `[4,2,1]`; exponent shorthand `[3,1^2]` is also accepted.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("expected [p1,p2,...], got `{s}`")))?;
        let mut parts = Vec::new();
        if !inner.trim().is_empty() {
            for tok in inner.split(',') {
                let (base, exp) = match tok.split_once('^') {
                    Some((b, e)) => (b, e),
                    None => (tok, "1"),
                };
                let base: usize = base
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad part `{tok}`")))?;
                let exp: usize = exp
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad exponent `{tok}`")))?;
                parts.extend(std::iter::repeat_n(base, exp));
            }
        }
        Partition::new(parts)
    }
}

/// An ordered sequence of positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!(
                "composition {parts:?} has a zero part"
            )));
        }
        Ok(Composition(parts))
    }

    /// `(j_1, j_2 - j_1, ..., size - j_l)` for cut points `j_1 < ... < j_l` in `1..size`.
    pub fn from_cut_points(size: usize, cuts: &[usize]) -> Result<Self> {
        let bad = || Error::BadCutPoints {
            cuts: cuts.to_vec(),
            max: size.saturating_sub(1),
        };
        let mut prev = 0;
        let mut parts = Vec::with_capacity(cuts.len() + 1);
        for &c in cuts {
            if c <= prev || c >= size {
                return Err(bad());
            }
            parts.push(c - prev);
            prev = c;
        }
        if size > 0 {
            parts.push(size - prev);
        }
        Ok(Composition(parts))
    }

    /// Inverse of [`Composition::from_cut_points`].
    pub fn cut_points(&self) -> Vec<usize> {
        let mut acc = 0;
        let mut cuts: Vec<usize> = self
            .0
            .iter()
            .map(|p| {
                acc += p;
                acc
            })
            .collect();
        cuts.pop();
        cuts
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// The parts sorted into a partition.
    pub fn mu(&self) -> Partition {
        let mut parts = self.0.clone();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Number of partitions of `n`, by the bounded-part recurrence.
pub fn partition_count(n: usize) -> u64 {
    let mut table = vec![0u64; n + 1];
    table[0] = 1;
    for part in 1..=n {
        for total in part..=n {
            table[total] += table[total - part];
        }
    }
    table[n]
}
