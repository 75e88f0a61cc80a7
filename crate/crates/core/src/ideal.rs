//! Root ideals (upper order ideals of the positive-root poset) stored by
//! their antichain of minimal roots.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::partition::{Composition, Partition};
use crate::root::{root_leq, Rank, Root};

/// An ad-nilpotent ideal of type A_n in canonical form: its minimal roots,
/// sorted by left index. Left and right indices are then both strictly
/// increasing, so equality and hashing of this form are equality of ideals.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RootIdeal {
    rank: Rank,
    min_roots: Vec<Root>,
}

impl RootIdeal {
    /// Builds an ideal from its minimal roots, given in any order.
    pub fn new(rank: Rank, mut min_roots: Vec<Root>) -> Result<Self> {
        for r in &min_roots {
            r.check(rank)?;
        }
        min_roots.sort();
        min_roots.dedup();
        for (k, &a) in min_roots.iter().enumerate() {
            for &b in &min_roots[k + 1..] {
                if a.comparable(b) {
                    return Err(Error::NotAntichain(a, b));
                }
            }
        }
        Ok(RootIdeal { rank, min_roots })
    }

    /// Caller guarantees `min_roots` is a sorted antichain of valid roots.
    pub(crate) fn from_sorted_antichain(rank: Rank, min_roots: Vec<Root>) -> Self {
        debug_assert!(min_roots.windows(2).all(|w| w[0].i < w[1].i && w[0].j < w[1].j));
        RootIdeal { rank, min_roots }
    }

    pub fn empty(rank: Rank) -> Self {
        RootIdeal {
            rank,
            min_roots: Vec::new(),
        }
    }

    /// The full nilradical: all simple roots are minimal.
    pub fn full(rank: Rank) -> Self {
        RootIdeal {
            rank,
            min_roots: (1..=rank.n()).map(Root::simple).collect(),
        }
    }

    pub fn rank(&self) -> Rank {
        self.rank
    }

    pub fn min_roots(&self) -> &[Root] {
        &self.min_roots
    }

    /// Number of minimal roots, `m_I`.
    pub fn num_min_roots(&self) -> usize {
        self.min_roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.min_roots.is_empty()
    }

    pub fn contains(&self, root: Root) -> bool {
        self.min_roots.iter().any(|&m| root_leq(m, root))
    }

    /// Whether the matrix unit at `(row, col)` lies in the ideal.
    pub fn contains_position(&self, row: usize, col: usize) -> bool {
        row < col && col <= self.rank.size() && self.contains(Root::from_matrix_position(row, col))
    }

    /// Every root above some minimal root.
    pub fn closure(&self) -> BTreeSet<Root> {
        self.rank.positive_roots().filter(|&r| self.contains(r)).collect()
    }

    /// `dim I`.
    pub fn dim(&self) -> usize {
        self.rank.positive_roots().filter(|&r| self.contains(r)).count()
    }

    pub fn is_left_endpoint(&self, k: usize) -> bool {
        self.min_roots.iter().any(|r| r.i == k)
    }

    pub fn is_right_endpoint(&self, k: usize) -> bool {
        self.min_roots.iter().any(|r| r.j == k)
    }

    /// Stability under the simple reflection `s_j`: `j` is neither a left nor
    /// a right endpoint of a minimal root.
    pub fn is_j_stable(&self, j: usize) -> Result<bool> {
        if j == 0 || j > self.rank.n() {
            return Err(Error::IndexOutOfRange {
                index: j,
                max: self.rank.n(),
            });
        }
        Ok(!self.is_left_endpoint(j) && !self.is_right_endpoint(j))
    }

    /// For each row `r` in `1..=n+1`, the first column `c` with `(r, c)` in
    /// the ideal, or `n + 2` when the row is empty. Weakly increasing in `r`.
    pub fn first_columns(&self) -> Vec<usize> {
        let size = self.rank.size();
        let mut cols = Vec::with_capacity(size);
        let mut next = 0;
        for row in 1..=size {
            while next < self.min_roots.len() && self.min_roots[next].i < row {
                next += 1;
            }
            cols.push(self.min_roots.get(next).map_or(size + 1, |m| m.j + 1));
        }
        cols
    }

    /// Inverse of [`RootIdeal::first_columns`].
    pub(crate) fn from_first_columns(rank: Rank, cols: &[usize]) -> Self {
        let size = rank.size();
        let mut min_roots = Vec::new();
        for row in 1..size {
            let c = cols[row - 1];
            if c <= size && cols[row] > c {
                min_roots.push(Root::from_matrix_position(row, c));
            }
        }
        RootIdeal { rank, min_roots }
    }

    /// All minimal roots simple, i.e. the nilradical of a standard parabolic.
    pub fn is_parabolic(&self) -> bool {
        self.min_roots.iter().all(|r| r.is_simple())
    }

    /// Cut points `j_1 < ... < j_l` when the ideal is parabolic.
    pub fn cut_points(&self) -> Option<Vec<usize>> {
        self.is_parabolic()
            .then(|| self.min_roots.iter().map(|r| r.i).collect())
    }

    /// The partition `mu_P` of a parabolic nilradical.
    pub fn parabolic_mu(&self) -> Option<Partition> {
        let cuts = self.cut_points()?;
        Composition::from_cut_points(self.rank.size(), &cuts)
            .ok()
            .map(|c| c.mu())
    }

    /// Removes the minimal root `root`; `None` if it is not minimal.
    ///
    /// The new antichain keeps the other minimal roots and gains `[a-1,b]`
    /// unless `a-1` is 0 or a left endpoint, and `[a,b+1]` unless `b+1` is
    /// `n+1` or a right endpoint.
    pub fn remove_minimal(&self, root: Root) -> Option<RootIdeal> {
        if !self.min_roots.contains(&root) {
            return None;
        }
        let (a, b) = (root.i, root.j);
        let mut roots: Vec<Root> = self.min_roots.iter().copied().filter(|&r| r != root).collect();
        if a > 1 && !self.is_left_endpoint(a - 1) {
            roots.push(Root { i: a - 1, j: b });
        }
        if b < self.rank.n() && !self.is_right_endpoint(b + 1) {
            roots.push(Root { i: a, j: b + 1 });
        }
        roots.sort();
        Some(RootIdeal::from_sorted_antichain(self.rank, roots))
    }

    /// Whether `root` can be added so that the result is an ideal in which
    /// `root` is minimal: `root` is absent and both its upper covers present.
    pub fn can_add(&self, root: Root) -> bool {
        if self.contains(root) {
            return false;
        }
        let left_cover = root.i == 1
            || self.contains(Root {
                i: root.i - 1,
                j: root.j,
            });
        let right_cover = root.j == self.rank.n()
            || self.contains(Root {
                i: root.i,
                j: root.j + 1,
            });
        left_cover && right_cover
    }

    /// Adds `root` as a new minimal root; `None` unless [`RootIdeal::can_add`].
    pub fn add_minimal(&self, root: Root) -> Option<RootIdeal> {
        if root.check(self.rank).is_err() || !self.can_add(root) {
            return None;
        }
        let mut roots: Vec<Root> = self.min_roots.iter().copied().filter(|&m| !root_leq(root, m)).collect();
        roots.push(root);
        roots.sort();
        Some(RootIdeal::from_sorted_antichain(self.rank, roots))
    }

    /// Roots that [`RootIdeal::add_minimal`] accepts.
    pub fn addable_roots(&self) -> Vec<Root> {
        self.rank.positive_roots().filter(|&r| self.can_add(r)).collect()
    }

    /// Parses the interchange format: `[1,1],[3,3]`, or `-` for the empty ideal.
    pub fn parse(s: &str, rank: Rank) -> Result<Self> {
        let s = s.trim();
        if s == "-" || s.is_empty() {
            return Ok(RootIdeal::empty(rank));
        }
        let mut roots = Vec::new();
        let mut rest = s;
        while !rest.is_empty() {
            let close = rest
                .find(']')
                .ok_or_else(|| Error::Parse(format!("unterminated root in `{s}`")))?;
            roots.push(rest[..=close].parse::<Root>()?);
            rest = rest[close + 1..].trim_start();
            if let Some(r) = rest.strip_prefix(',') {
                rest = r.trim_start();
                if rest.is_empty() {
                    return Err(Error::Parse(format!("trailing comma in `{s}`")));
                }
            } else if !rest.is_empty() {
                return Err(Error::Parse(format!("expected `,` between roots in `{s}`")));
            }
        }
        RootIdeal::new(rank, roots)
    }
}

impl fmt::Display for RootIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.min_roots.is_empty() {
            return f.write_str("-");
        }
        for (k, r) in self.min_roots.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{r}")?;
        }
        Ok(())
    }
}

/// Recovers the ideal from an upward-closed set of roots.
pub fn minimal_roots(rank: Rank, roots: &BTreeSet<Root>) -> Result<RootIdeal> {
    for &r in roots {
        r.check(rank)?;
        let covers = [
            (r.i > 1).then(|| Root { i: r.i - 1, j: r.j }),
            (r.j < rank.n()).then(|| Root { i: r.i, j: r.j + 1 }),
        ];
        for up in covers.into_iter().flatten() {
            if !roots.contains(&up) {
                return Err(Error::NotUpwardClosed { lower: r, upper: up });
            }
        }
    }
    let mins: Vec<Root> = roots
        .iter()
        .copied()
        .filter(|&r| !roots.iter().any(|&s| s != r && root_leq(s, r)))
        .collect();
    Ok(RootIdeal::from_sorted_antichain(rank, mins))
}

/// The nilradical of the standard parabolic with the given cut points.
pub fn parabolic_ideal(rank: Rank, cuts: &[usize]) -> Result<RootIdeal> {
    if cuts.windows(2).any(|w| w[0] >= w[1]) || cuts.iter().any(|&c| c == 0 || c > rank.n()) {
        return Err(Error::BadCutPoints {
            cuts: cuts.to_vec(),
            max: rank.n(),
        });
    }
    Ok(RootIdeal::from_sorted_antichain(
        rank,
        cuts.iter().map(|&c| Root::simple(c)).collect(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    const A3: Rank = Rank(3);

    fn ideal(s: &str, rank: Rank) -> RootIdeal {
        RootIdeal::parse(s, rank).unwrap()
    }

    fn roots(list: &[(usize, usize)]) -> BTreeSet<Root> {
        list.iter().map(|&(i, j)| Root { i, j }).collect()
    }

    #[test]
    fn closure_examples() {
        assert_eq!(ideal("[2,2]", A3).closure(), roots(&[(2, 2), (1, 2), (2, 3), (1, 3)]));
        assert!(RootIdeal::empty(A3).closure().is_empty());
        assert_eq!(RootIdeal::full(A3).closure().len(), 6);
    }

    #[test]
    fn minimal_roots_examples() {
        let i = minimal_roots(A3, &roots(&[(2, 2), (1, 2), (2, 3), (1, 3)])).unwrap();
        assert_eq!(i.min_roots(), &[Root::simple(2)]);
        assert!(minimal_roots(A3, &BTreeSet::new()).unwrap().is_empty());
        let all: BTreeSet<Root> = A3.positive_roots().collect();
        assert_eq!(minimal_roots(A3, &all).unwrap(), RootIdeal::full(A3));
    }

    #[test]
    fn minimal_roots_rejects_non_ideal() {
        let err = minimal_roots(A3, &roots(&[(2, 2), (1, 2)])).unwrap_err();
        assert_eq!(
            err,
            Error::NotUpwardClosed {
                lower: Root { i: 1, j: 2 },
                upper: Root { i: 1, j: 3 }
            }
        );
    }

    #[test]
    fn stability_examples() {
        let i = ideal("[2,2]", A3);
        assert!(i.is_j_stable(1).unwrap());
        assert!(!i.is_j_stable(2).unwrap());
        assert!(i.is_j_stable(3).unwrap());
        for j in 1..=3 {
            assert!(RootIdeal::empty(A3).is_j_stable(j).unwrap());
        }
        assert!(i.is_j_stable(0).is_err());
        assert!(i.is_j_stable(4).is_err());
    }

    #[test]
    fn antichain_validation() {
        assert!(matches!(
            RootIdeal::parse("[1,3],[2,2]", A3),
            Err(Error::NotAntichain(..))
        ));
        assert!(RootIdeal::parse("[1,4]", A3).is_err());
        assert!(RootIdeal::parse("[1,1],", A3).is_err());
        // order of input does not matter
        assert_eq!(ideal("[3,3],[1,1]", A3), ideal("[1,1],[3,3]", A3));
    }

    #[test]
    fn text_round_trip() {
        for s in ["-", "[1,1],[3,3]", "[2,5],[3,6],[6,7]"] {
            assert_eq!(ideal(s, Rank(8)).to_string(), s);
        }
    }

    #[test]
    fn parabolic_examples() {
        let p = parabolic_ideal(A3, &[1, 3]).unwrap();
        assert_eq!(p.min_roots(), &[Root::simple(1), Root::simple(3)]);
        assert_eq!(p.parabolic_mu().unwrap().parts(), &[2, 1, 1]);
        assert_eq!(p.parabolic_mu().unwrap().dual().parts(), &[3, 1]);
        assert_eq!(parabolic_ideal(A3, &[1, 2, 3]).unwrap(), RootIdeal::full(A3));
        assert_eq!(parabolic_ideal(A3, &[]).unwrap().parabolic_mu().unwrap().parts(), &[4]);
        assert!(parabolic_ideal(A3, &[2, 1]).is_err());
        assert!(parabolic_ideal(A3, &[4]).is_err());
        assert_eq!(ideal("[1,2]", A3).parabolic_mu(), None);
    }

    #[test]
    fn remove_and_add_are_inverse_on_examples() {
        let i = ideal("[2,2]", A3);
        let j = i.remove_minimal(Root::simple(2)).unwrap();
        assert_eq!(j, ideal("[1,2],[2,3]", A3));
        assert_eq!(j.add_minimal(Root::simple(2)).unwrap(), i);
        assert_eq!(i.remove_minimal(Root { i: 1, j: 3 }), None);
        assert_eq!(
            ideal("[1,3]", A3).remove_minimal(Root { i: 1, j: 3 }).unwrap(),
            RootIdeal::empty(A3)
        );
    }

    #[test]
    fn first_columns_round_trip() {
        let i = ideal("[2,2]", A3);
        assert_eq!(i.first_columns(), vec![3, 3, 5, 5]);
        assert_eq!(RootIdeal::from_first_columns(A3, &i.first_columns()), i);
    }
}
