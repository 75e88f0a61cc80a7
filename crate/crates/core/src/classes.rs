//! Connected components of the move graphs over all ideals of a rank.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;

use crate::ballot::ideal_to_ballot;
use crate::enumerate::{enumerate_ideals, ENUMERATION_LIMIT};
use crate::error::{Error, Result};
use crate::ideal::RootIdeal;
use crate::jordan::gerstenhaber_partition;
use crate::moves::{remove_neighbors, MoveKind};
use crate::partition::Partition;
use crate::root::Rank;

/// Disjoint sets where the smaller index always becomes the root, so every
/// set is represented by its first member in enumeration order.
#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        while self.parent[x] != root {
            let next = self.parent[x];
            self.parent[x] = root;
            x = next;
        }
        root
    }

    /// Merges the sets of `a` and `b`; returns false if already joined.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivalenceClass {
    pub id: usize,
    /// First member in enumeration order.
    pub representative: RootIdeal,
    /// Members in enumeration order.
    pub ideals: Vec<RootIdeal>,
    /// `lambda_I`, constant on the class; set for basic moves.
    pub label: Option<Partition>,
}

impl EquivalenceClass {
    pub fn len(&self) -> usize {
        self.ideals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ideals.is_empty()
    }
}

#[derive(Debug, Clone)]
pub struct ClassTable {
    pub rank: Rank,
    pub kind: MoveKind,
    /// Ordered by representative.
    pub classes: Vec<EquivalenceClass>,
}

impl ClassTable {
    pub fn num_ideals(&self) -> usize {
        self.classes.iter().map(EquivalenceClass::len).sum()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(EquivalenceClass::len).collect()
    }

    /// Class index of every ideal.
    pub fn class_of(&self) -> HashMap<&RootIdeal, usize> {
        let mut out = HashMap::new();
        for (k, class) in self.classes.iter().enumerate() {
            for ideal in &class.ideals {
                out.insert(ideal, k);
            }
        }
        out
    }

    /// Whether the classes are exactly the fibers of `stat`: constant on each
    /// class, distinct across classes.
    pub fn matches_fibers<T, F>(&self, stat: F) -> FiberComparison<T>
    where
        T: Ord + Clone,
        F: Fn(&RootIdeal) -> T,
    {
        let mut split = Vec::new();
        let mut owner: BTreeMap<T, Vec<usize>> = BTreeMap::new();
        for (k, class) in self.classes.iter().enumerate() {
            let value = stat(&class.representative);
            if class.ideals.iter().any(|i| stat(i) != value) {
                split.push(k);
            }
            owner.entry(value).or_default().push(k);
        }
        let merged: Vec<(T, Vec<usize>)> = owner.into_iter().filter(|(_, ks)| ks.len() > 1).collect();
        FiberComparison {
            non_constant: split,
            shared_values: merged,
        }
    }
}

/// Outcome of [`ClassTable::matches_fibers`].
#[derive(Debug, Clone)]
pub struct FiberComparison<T> {
    /// Classes on which the statistic varies.
    pub non_constant: Vec<usize>,
    /// Values taken on more than one class, with those classes.
    pub shared_values: Vec<(T, Vec<usize>)>,
}

impl<T> FiberComparison<T> {
    pub fn coincide(&self) -> bool {
        self.non_constant.is_empty() && self.shared_values.is_empty()
    }
}

/// Components of the move graph of `kind` over all ideals of `rank`, built
/// from the removal edges of every ideal. Basic classes are labelled by
/// `lambda_I`, which must be constant on each.
pub fn equivalence_classes(rank: Rank, kind: MoveKind) -> Result<ClassTable> {
    if rank.n() > ENUMERATION_LIMIT {
        return Err(Error::RankLimit {
            rank: rank.n(),
            limit: ENUMERATION_LIMIT,
            what: "enumeration",
        });
    }
    let ideals = enumerate_ideals(rank);
    classes_of(rank, kind, ideals)
}

/// As [`equivalence_classes`], over an already enumerated list of every
/// ideal of `rank`.
pub fn classes_of(rank: Rank, kind: MoveKind, ideals: Vec<RootIdeal>) -> Result<ClassTable> {
    let index: HashMap<u64, usize> = ideals
        .iter()
        .enumerate()
        .map(|(k, i)| (ideal_to_ballot(i).key(), k))
        .collect();

    // sharded edge generation, single deterministic merge
    let edges: Vec<Vec<usize>> = ideals
        .par_iter()
        .map(|i| {
            remove_neighbors(i, kind)
                .iter()
                .map(|j| index[&ideal_to_ballot(j).key()])
                .collect()
        })
        .collect();
    let mut uf = UnionFind::new(ideals.len());
    for (a, targets) in edges.iter().enumerate() {
        for &b in targets {
            uf.union(a, b);
        }
    }

    let mut by_root: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for k in 0..ideals.len() {
        by_root.entry(uf.find(k)).or_default().push(k);
    }
    let labels: Option<Vec<Partition>> =
        (kind == MoveKind::Basic).then(|| ideals.par_iter().map(gerstenhaber_partition).collect());

    let mut classes = Vec::with_capacity(by_root.len());
    for (id, (root, members)) in by_root.into_iter().enumerate() {
        let label = match &labels {
            Some(l) => {
                let first = &l[root];
                if let Some(&bad) = members.iter().find(|&&m| &l[m] != first) {
                    return Err(Error::Inconsistent(format!(
                        "lambda differs on a basic class: {} has {}, {} has {}",
                        ideals[root], first, ideals[bad], l[bad]
                    )));
                }
                Some(first.clone())
            }
            None => None,
        };
        classes.push(EquivalenceClass {
            id,
            representative: ideals[root].clone(),
            ideals: members.iter().map(|&m| ideals[m].clone()).collect(),
            label,
        });
    }
    Ok(ClassTable { rank, kind, classes })
}
