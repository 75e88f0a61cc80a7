//! Enumerative statistics over all ideals of a rank: class sizes `N_lambda`,
//! the joint (bounce, valley) table, Kreweras and Narayana counts, and the
//! index/corank double-counting identities.
//!
//! Per-ideal statistics are computed in parallel and folded into tallies;
//! the folds are commutative, so results do not depend on the thread count.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;

use crate::ballot::ideal_to_ballot;
use crate::classes::classes_of;
use crate::enumerate::{binomial, catalan, enumerate_ideals, ENUMERATION_LIMIT};
use crate::error::{Error, Result};
use crate::ideal::RootIdeal;
use crate::jordan::{gerstenhaber_partition, kreweras_partition};
use crate::moves::MoveKind;
use crate::partition::{partitions_of, Partition};
use crate::root::Rank;

/// Everything the tables need from one ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealStats {
    pub lambda: Partition,
    pub kreweras: Partition,
    pub valleys: usize,
    pub max_height: usize,
}

impl IdealStats {
    pub fn of(ideal: &RootIdeal) -> Self {
        IdealStats {
            lambda: gerstenhaber_partition(ideal),
            kreweras: kreweras_partition(ideal),
            valleys: ideal.num_min_roots(),
            max_height: ideal_to_ballot(ideal).max_height(),
        }
    }

    /// Index `(lambda_I)_1`.
    pub fn index(&self) -> usize {
        self.lambda.largest()
    }

    /// Corank: number of parts of `lambda_I`.
    pub fn corank(&self) -> usize {
        self.lambda.len()
    }
}

/// All ideals of a rank with their statistics, in enumeration order.
#[derive(Debug, Clone)]
pub struct Census {
    pub rank: Rank,
    pub ideals: Vec<RootIdeal>,
    pub stats: Vec<IdealStats>,
}

impl Census {
    pub fn new(rank: Rank) -> Result<Self> {
        if rank.n() > ENUMERATION_LIMIT {
            return Err(Error::RankLimit {
                rank: rank.n(),
                limit: ENUMERATION_LIMIT,
                what: "enumeration",
            });
        }
        let ideals = enumerate_ideals(rank);
        let stats = ideals.par_iter().map(IdealStats::of).collect();
        Ok(Census { rank, ideals, stats })
    }

    pub fn len(&self) -> usize {
        self.ideals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ideals.is_empty()
    }

    fn tally<K: Ord + Send, F>(&self, key: F) -> BTreeMap<K, u64>
    where
        F: Fn(&IdealStats) -> K + Sync,
    {
        self.stats
            .par_iter()
            .fold(BTreeMap::new, |mut acc, s| {
                *acc.entry(key(s)).or_insert(0) += 1;
                acc
            })
            .reduce(BTreeMap::new, |mut a, b| {
                for (k, v) in b {
                    *a.entry(k).or_insert(0) += v;
                }
                a
            })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NLambdaTable {
    pub rank: Rank,
    /// One entry per partition of `n+1`.
    pub counts: BTreeMap<Partition, u64>,
}

impl NLambdaTable {
    /// Entries in table order: `[n+1]` first, `[1^{n+1}]` last.
    pub fn rows(&self) -> impl Iterator<Item = (&Partition, u64)> {
        self.counts.iter().rev().map(|(p, &c)| (p, c))
    }

    pub fn get(&self, lambda: &Partition) -> u64 {
        self.counts.get(lambda).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }
}

/// `N_lambda` by counting fibers of `lambda_I`, cross-checked against the
/// sizes of the basic-move classes.
pub fn n_lambda_table(rank: Rank) -> Result<NLambdaTable> {
    let census = Census::new(rank)?;
    n_lambda_from(&census)
}

pub fn n_lambda_from(census: &Census) -> Result<NLambdaTable> {
    let mut counts: BTreeMap<Partition, u64> = partitions_of(census.rank.size()).into_iter().map(|p| (p, 0)).collect();
    for (lambda, c) in census.tally(|s| s.lambda.clone()) {
        *counts
            .get_mut(&lambda)
            .ok_or_else(|| Error::Inconsistent(format!("{lambda} is not a partition of n+1")))? = c;
    }
    let table = classes_of(census.rank, MoveKind::Basic, census.ideals.clone())?;
    let mut class_sizes: BTreeMap<Partition, u64> = BTreeMap::new();
    for class in &table.classes {
        let label = class.label.clone().expect("basic classes are labelled");
        if class_sizes.insert(label.clone(), class.len() as u64).is_some() {
            return Err(Error::Inconsistent(format!("two basic classes share lambda = {label}")));
        }
    }
    for (lambda, &c) in &counts {
        let by_class = class_sizes.get(lambda).copied().unwrap_or(0);
        if by_class != c {
            return Err(Error::Inconsistent(format!(
                "N_{lambda}: fiber count {c} but basic class size {by_class}"
            )));
        }
    }
    Ok(NLambdaTable {
        rank: census.rank,
        counts,
    })
}

/// Counts by `(index r, valleys s)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JointTable {
    pub rank: Rank,
    pub counts: BTreeMap<(usize, usize), u64>,
}

impl JointTable {
    pub fn get(&self, r: usize, s: usize) -> u64 {
        self.counts.get(&(r, s)).copied().unwrap_or(0)
    }

    /// Row indices `1..=n+1`.
    pub fn rows(&self) -> std::ops::RangeInclusive<usize> {
        1..=self.rank.size()
    }

    /// Column indices `0..=n`.
    pub fn cols(&self) -> std::ops::RangeInclusive<usize> {
        0..=self.rank.n()
    }

    pub fn row_sum(&self, r: usize) -> u64 {
        self.cols().map(|s| self.get(r, s)).sum()
    }

    pub fn col_sum(&self, s: usize) -> u64 {
        self.rows().map(|r| self.get(r, s)).sum()
    }

    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }
}

pub fn joint_table(rank: Rank) -> Result<JointTable> {
    Ok(joint_from(&Census::new(rank)?))
}

pub fn joint_from(census: &Census) -> JointTable {
    JointTable {
        rank: census.rank,
        counts: census.tally(|s| (s.index(), s.valleys)),
    }
}

/// Counts by `(corank, valleys)`.
pub fn dual_joint_from(census: &Census) -> JointTable {
    JointTable {
        rank: census.rank,
        counts: census.tally(|s| (s.corank(), s.valleys)),
    }
}

/// `K_lambda = multinomial(n+2; a_1, ..., a_{n+1}, n+2-l) / (n+2)` where
/// `a_j` is the multiplicity of `j` in `lambda` and `l` its number of parts.
pub fn kreweras_number(lambda: &Partition, rank: Rank) -> Result<BigUint> {
    let size = rank.size();
    if lambda.size() != size {
        return Err(Error::SizeMismatch(lambda.size(), size));
    }
    let top = size + 1;
    let factorial = |k: usize| -> BigUint { (1..=k).fold(BigUint::from(1u32), |acc, t| acc * BigUint::from(t)) };
    let mut denom = factorial(top - lambda.len());
    for j in 1..=size {
        denom *= factorial(lambda.multiplicity(j));
    }
    let multinomial = factorial(top) / &denom;
    let divisor = BigUint::from(top);
    if !(&multinomial % &divisor).is_zero() {
        return Err(Error::Inconsistent(format!(
            "K_{lambda}: {multinomial} is not divisible by {top}"
        )));
    }
    Ok(multinomial / divisor)
}

/// `K_lambda` by counting ideals with Kreweras partition `lambda`.
pub fn kreweras_table(rank: Rank) -> Result<BTreeMap<Partition, u64>> {
    Ok(kreweras_from(&Census::new(rank)?))
}

pub fn kreweras_from(census: &Census) -> BTreeMap<Partition, u64> {
    let mut counts: BTreeMap<Partition, u64> = partitions_of(census.rank.size()).into_iter().map(|p| (p, 0)).collect();
    for (p, c) in census.tally(|s| s.kreweras.clone()) {
        counts.insert(p, c);
    }
    counts
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KrewerasRow {
    pub lambda: Partition,
    pub formula: BigUint,
    pub enumerated: u64,
}

/// Formula against enumeration for every partition; fails on the first
/// disagreement or if the totals miss the Catalan number.
pub fn kreweras_check(census: &Census) -> Result<Vec<KrewerasRow>> {
    let counts = kreweras_from(census);
    let mut rows = Vec::new();
    let mut total = BigUint::zero();
    for lambda in partitions_of(census.rank.size()) {
        let enumerated = counts.get(&lambda).copied().unwrap_or(0);
        let formula = kreweras_number(&lambda, census.rank)?;
        if formula != BigUint::from(enumerated) {
            return Err(Error::Inconsistent(format!(
                "K_{lambda}: formula {formula}, enumeration {enumerated}"
            )));
        }
        total += &formula;
        rows.push(KrewerasRow {
            lambda,
            formula,
            enumerated,
        });
    }
    let expected = catalan(census.rank.size());
    if total != expected {
        return Err(Error::Inconsistent(format!(
            "sum of K_lambda is {total}, expected {expected}"
        )));
    }
    Ok(rows)
}

/// `Nar(N, k+1) = binom(N, k) binom(N, k+1) / N`: Dyck paths of semilength
/// `N` with `k` valleys.
pub fn narayana(size: usize, valleys: usize) -> BigUint {
    if size == 0 {
        return BigUint::from((valleys == 0) as u32);
    }
    binomial(size, valleys) * binomial(size, valleys + 1) / BigUint::from(size)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NarayanaRow {
    pub valleys: usize,
    pub observed: u64,
    pub narayana: BigUint,
}

pub fn narayana_check(census: &Census) -> Result<Vec<NarayanaRow>> {
    let by_valleys = census.tally(|s| s.valleys);
    let mut rows = Vec::new();
    for k in 0..=census.rank.n() {
        let observed = by_valleys.get(&k).copied().unwrap_or(0);
        let expected = narayana(census.rank.size(), k);
        if BigUint::from(observed) != expected {
            return Err(Error::Inconsistent(format!(
                "#(m_I = {k}) = {observed}, Narayana number {expected}"
            )));
        }
        rows.push(NarayanaRow {
            valleys: k,
            observed,
            narayana: expected,
        });
    }
    Ok(rows)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexCorankReport {
    /// `(k, sum of N_lambda over lambda_1 = k, sum of N_{lambda*} over lambda_1 = k)`.
    pub sums: Vec<(usize, u64, u64)>,
    /// Number of `(r, s)` cells compared in the refined identity.
    pub cells_checked: usize,
}

/// Checks `sum_{lambda_1=k} N_lambda = sum_{lambda_1=k} N_{lambda*}` and
/// `#{index r, m = s} = #{corank r, m = n - s}`.
pub fn index_corank_check(census: &Census, table: &NLambdaTable) -> Result<IndexCorankReport> {
    let size = census.rank.size();
    let mut sums = Vec::new();
    for k in 1..=size {
        let mut by_index = 0;
        let mut by_dual = 0;
        for (lambda, &c) in &table.counts {
            if lambda.largest() == k {
                by_index += c;
                by_dual += table.get(&lambda.dual());
            }
        }
        if by_index != by_dual {
            return Err(Error::Inconsistent(format!(
                "k = {k}: sum N_lambda = {by_index}, sum N_lambda* = {by_dual}"
            )));
        }
        sums.push((k, by_index, by_dual));
    }
    let joint = joint_from(census);
    let dual = dual_joint_from(census);
    let n = census.rank.n();
    let mut cells = 0;
    for r in 1..=size {
        for s in 0..=n {
            let (a, b) = (joint.get(r, s), dual.get(r, n - s));
            if a != b {
                return Err(Error::Inconsistent(format!(
                    "(r, s) = ({r}, {s}): #(index r, m = s) = {a}, #(corank r, m = {}) = {b}",
                    n - s
                )));
            }
            cells += 1;
        }
    }
    Ok(IndexCorankReport {
        sums,
        cells_checked: cells,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AntidiagonalCell {
    pub index: usize,
    pub valleys: usize,
    pub observed: u64,
    pub binomial: BigUint,
}

impl AntidiagonalCell {
    pub fn matches(&self) -> bool {
        BigUint::from(self.observed) == self.binomial
    }
}

/// Cells `(r, r-1)` of the joint table beside `binom(n + m, n - m)`.
/// Reported, never asserted.
pub fn antidiagonal_report(table: &JointTable) -> Vec<AntidiagonalCell> {
    let n = table.rank.n();
    table
        .rows()
        .map(|r| {
            let m = r - 1;
            AntidiagonalCell {
                index: r,
                valleys: m,
                observed: table.get(r, m),
                binomial: binomial(n + m, n - m),
            }
        })
        .collect()
}

/// Every nonzero cell `(r, s)` must satisfy `r - 1 <= s <= n + 1 - ceil((n+1)/r)`.
pub fn joint_zero_region_check(table: &JointTable) -> Result<()> {
    let size = table.rank.size();
    for (&(r, s), &c) in &table.counts {
        if c == 0 {
            continue;
        }
        let upper = size - size.div_ceil(r);
        if s + 1 < r || s > upper {
            return Err(Error::Inconsistent(format!(
                "nonzero cell (r, s) = ({r}, {s}) outside [{}, {upper}]",
                r - 1
            )));
        }
    }
    Ok(())
}

/// Joint tally of `(lambda_I, lambda(e_I))`.
pub fn partition_pair_tally(census: &Census) -> BTreeMap<(Partition, Partition), u64> {
    census.tally(|s| (s.lambda.clone(), s.kreweras.clone()))
}

pub fn to_u64(x: &BigUint) -> u64 {
    x.to_u64().expect("count fits in u64")
}
