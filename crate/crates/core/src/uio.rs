//! Unit interval orders and indifference graphs attached to ideals, with
//! exhaustive oracles for chain families and graph invariants.
//!
//! The oracles enumerate subsets of the ground set as bitmasks and are
//! limited to `n + 1 <= 9` elements.

use crate::error::{Error, Result};
use crate::ideal::RootIdeal;

/// Largest rank the brute-force oracles accept.
pub const BRUTE_FORCE_RANK_LIMIT: usize = 8;

/// Strict order on `1..=size`; `i < j` in the order implies `i < j` as integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitIntervalOrder {
    size: usize,
    /// `above[i]`: bitmask of `j` (bit `j-1`) with `i ≺ j`, indexed from 1.
    above: Vec<u32>,
}

impl UnitIntervalOrder {
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn less(&self, i: usize, j: usize) -> bool {
        self.above[i] & (1 << (j - 1)) != 0
    }

    pub fn comparable(&self, i: usize, j: usize) -> bool {
        self.less(i, j) || self.less(j, i)
    }

    /// All pairs `(i, j)` with `i ≺ j`.
    pub fn relations(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 1..=self.size {
            for j in 1..=self.size {
                if self.less(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    fn is_chain(&self, mask: u32) -> bool {
        let elems = members(mask);
        elems
            .iter()
            .enumerate()
            .all(|(k, &a)| elems[k + 1..].iter().all(|&b| self.comparable(a, b)))
    }

    fn is_antichain(&self, mask: u32) -> bool {
        let elems = members(mask);
        elems
            .iter()
            .enumerate()
            .all(|(k, &a)| elems[k + 1..].iter().all(|&b| !self.comparable(a, b)))
    }
}

/// `i ≺ j` iff the matrix unit `(i, j)` lies in the ideal.
pub fn poset_from_ideal(ideal: &RootIdeal) -> UnitIntervalOrder {
    let size = ideal.rank().size();
    let mut above = vec![0u32; size + 1];
    for (i, row) in above.iter_mut().enumerate().skip(1) {
        for j in i + 1..=size {
            if ideal.contains_position(i, j) {
                *row |= 1 << (j - 1);
            }
        }
    }
    UnitIntervalOrder { size, above }
}

/// Simple graph on `1..=size`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndifferenceGraph {
    size: usize,
    /// `adj[i]`: neighbours of `i` as a bitmask, indexed from 1.
    adj: Vec<u32>,
}

impl IndifferenceGraph {
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.adj[i] & (1 << (j - 1)) != 0
    }

    /// Edges `(i, j)` with `i < j`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 1..=self.size {
            for j in i + 1..=self.size {
                if self.adjacent(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    fn is_independent(&self, mask: u32) -> bool {
        members(mask).iter().all(|&v| self.adj[v] & mask == 0)
    }

    fn is_clique(&self, mask: u32) -> bool {
        members(mask)
            .iter()
            .all(|&v| (self.adj[v] | (1 << (v - 1))) & mask == mask)
    }
}

/// Edges join incomparable elements.
pub fn indifference_graph(p: &UnitIntervalOrder) -> IndifferenceGraph {
    let mut adj = vec![0u32; p.size + 1];
    for (i, row) in adj.iter_mut().enumerate().skip(1) {
        for j in 1..=p.size {
            if i != j && !p.comparable(i, j) {
                *row |= 1 << (j - 1);
            }
        }
    }
    IndifferenceGraph { size: p.size, adj }
}

fn members(mask: u32) -> Vec<usize> {
    (0..32).filter(|b| mask & (1 << b) != 0).map(|b| b + 1).collect()
}

fn check_limit(size: usize) -> Result<()> {
    if size > BRUTE_FORCE_RANK_LIMIT + 1 {
        return Err(Error::RankLimit {
            rank: size - 1,
            limit: BRUTE_FORCE_RANK_LIMIT,
            what: "brute-force oracles",
        });
    }
    Ok(())
}

/// Minimum number of `allowed` blocks covering each subset, by memoized
/// search: a cover of `S` puts the lowest element of `S` in some allowed
/// block `B ⊆ S`, and the rest is a cover of `S \ B`.
fn min_covers(size: usize, allowed: impl Fn(u32) -> bool) -> Vec<usize> {
    let full = 1u32 << size;
    let ok: Vec<bool> = (0..full).map(&allowed).collect();
    let mut cover = vec![usize::MAX; full as usize];
    cover[0] = 0;
    for set in 1..full {
        let low = set & set.wrapping_neg();
        let rest = set ^ low;
        // enumerate submasks of `rest`, each joined with `low`
        let mut sub = rest;
        loop {
            let block = sub | low;
            if ok[block as usize] {
                let prev = cover[(set ^ block) as usize];
                cover[set as usize] = cover[set as usize].min(prev + 1);
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
    }
    cover
}

/// Largest total size of `k` pairwise disjoint chains.
pub fn greene_kleitman_oracle(p: &UnitIntervalOrder, k: usize) -> Result<usize> {
    check_limit(p.size)?;
    if k == 0 || k > p.size.max(1) {
        return Err(Error::IndexOutOfRange { index: k, max: p.size });
    }
    let cover = min_covers(p.size, |m| p.is_chain(m));
    Ok((0..cover.len())
        .filter(|&s| cover[s] <= k)
        .map(|s| (s as u32).count_ones() as usize)
        .max()
        .unwrap_or(0))
}

/// The partition whose prefix sums are the Greene–Kleitman numbers.
pub fn greene_kleitman_partition(p: &UnitIntervalOrder) -> Result<Vec<usize>> {
    let mut prev = 0;
    let mut parts = Vec::new();
    for k in 1..=p.size {
        let gk = greene_kleitman_oracle(p, k)?;
        if gk > prev {
            parts.push(gk - prev);
        }
        prev = gk;
    }
    Ok(parts)
}

/// Largest antichain, by exhaustive search.
pub fn max_antichain(p: &UnitIntervalOrder) -> Result<usize> {
    check_limit(p.size)?;
    Ok((0..1u32 << p.size)
        .filter(|&m| p.is_antichain(m))
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap_or(0))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GraphInvariants {
    pub independence_number: usize,
    pub clique_number: usize,
    pub chromatic_number: usize,
}

pub fn graph_invariants(g: &IndifferenceGraph) -> Result<GraphInvariants> {
    check_limit(g.size)?;
    let masks = 0..1u32 << g.size;
    let independence_number = masks
        .clone()
        .filter(|&m| g.is_independent(m))
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap_or(0);
    let clique_number = masks
        .filter(|&m| g.is_clique(m))
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap_or(0);
    let cover = min_covers(g.size, |m| g.is_independent(m));
    let chromatic_number = cover[(1usize << g.size) - 1];
    Ok(GraphInvariants {
        independence_number,
        clique_number,
        chromatic_number,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root::Rank;

    #[test]
    fn empty_and_full() {
        let n = 4;
        let p = poset_from_ideal(&RootIdeal::empty(Rank(n)));
        assert!(p.relations().is_empty());
        let g = indifference_graph(&p);
        assert_eq!(g.edges().len(), 10);
        let inv = graph_invariants(&g).unwrap();
        assert_eq!(
            inv,
            GraphInvariants {
                independence_number: 1,
                clique_number: 5,
                chromatic_number: 5
            }
        );
        for k in 1..=5 {
            assert_eq!(greene_kleitman_oracle(&p, k).unwrap(), k);
        }

        let p = poset_from_ideal(&RootIdeal::full(Rank(n)));
        let g = indifference_graph(&p);
        assert!(g.edges().is_empty());
        let inv = graph_invariants(&g).unwrap();
        assert_eq!(
            inv,
            GraphInvariants {
                independence_number: 5,
                clique_number: 1,
                chromatic_number: 1
            }
        );
        for k in 1..=5 {
            assert_eq!(greene_kleitman_oracle(&p, k).unwrap(), 5);
        }
    }

    #[test]
    fn a3_example() {
        let i = RootIdeal::parse("[2,2]", Rank(3)).unwrap();
        let p = poset_from_ideal(&i);
        assert_eq!(p.relations(), vec![(1, 3), (1, 4), (2, 3), (2, 4)]);
        let g = indifference_graph(&p);
        assert_eq!(g.edges(), vec![(1, 2), (3, 4)]);
        assert_eq!(greene_kleitman_oracle(&p, 1).unwrap(), 2);
        assert_eq!(greene_kleitman_oracle(&p, 2).unwrap(), 4);
        assert_eq!(greene_kleitman_partition(&p).unwrap(), vec![2, 2]);
        assert_eq!(max_antichain(&p).unwrap(), 2);
        let inv = graph_invariants(&g).unwrap();
        assert_eq!(
            inv,
            GraphInvariants {
                independence_number: 2,
                clique_number: 2,
                chromatic_number: 2
            }
        );
    }

    #[test]
    fn refuses_large_inputs() {
        let p = poset_from_ideal(&RootIdeal::empty(Rank(9)));
        assert!(matches!(greene_kleitman_oracle(&p, 1), Err(Error::RankLimit { .. })));
        assert!(graph_invariants(&indifference_graph(&p)).is_err());
        let small = poset_from_ideal(&RootIdeal::empty(Rank(3)));
        assert!(greene_kleitman_oracle(&small, 0).is_err());
        assert!(greene_kleitman_oracle(&small, 5).is_err());
    }
}
