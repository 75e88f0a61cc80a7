//! Gerstenhaber's characteristic sequences, the partition `lambda_I` of the
//! orbit attached to an ideal, and Jordan types of nilpotent matrices.

use std::collections::BTreeMap;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::{DenseMatrix, PrimeField};
use crate::ideal::RootIdeal;
use crate::partition::Partition;

/// Disjoint increasing sequences covering `1..=n+1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacteristicSequences {
    sequences: Vec<Vec<usize>>,
}

impl CharacteristicSequences {
    pub fn sequences(&self) -> &[Vec<usize>] {
        &self.sequences
    }

    pub fn partition(&self) -> Partition {
        Partition::new(self.sequences.iter().map(Vec::len).collect())
            .expect("characteristic sequences have weakly decreasing lengths")
    }
}

impl fmt::Display for CharacteristicSequences {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for seq in &self.sequences {
            let items: Vec<String> = seq.iter().map(|k| k.to_string()).collect();
            write!(f, "({})", items.join(","))?;
        }
        Ok(())
    }
}

/// Greedy chains: each sequence starts at the smallest unused index, and the
/// successor of `i` is the smallest unused `j` with `(i, j)` in the ideal.
pub fn characteristic_sequences(ideal: &RootIdeal) -> CharacteristicSequences {
    let size = ideal.rank().size();
    let first = ideal.first_columns();
    let mut used = vec![false; size + 1];
    let mut sequences = Vec::new();
    while let Some(start) = (1..=size).find(|&k| !used[k]) {
        let mut seq = vec![start];
        used[start] = true;
        let mut cur = start;
        while let Some(next) = (first[cur - 1]..=size).find(|&j| !used[j]) {
            seq.push(next);
            used[next] = true;
            cur = next;
        }
        sequences.push(seq);
    }
    CharacteristicSequences { sequences }
}

/// `lambda_I`, the lengths of the characteristic sequences.
pub fn gerstenhaber_partition(ideal: &RootIdeal) -> Partition {
    characteristic_sequences(ideal).partition()
}

/// Strictly upper triangular matrix with sparse entries, 1-based positions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseNilpotentMatrix {
    size: usize,
    entries: BTreeMap<(usize, usize), u64>,
}

impl SparseNilpotentMatrix {
    pub fn new(size: usize) -> Self {
        SparseNilpotentMatrix {
            size,
            entries: BTreeMap::new(),
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Sets a nonzero entry; zero values remove the entry.
    pub fn set(&mut self, row: usize, col: usize, value: u64) -> Result<()> {
        if row == 0 || row >= col || col > self.size {
            return Err(Error::IndexOutOfRange {
                index: col,
                max: self.size,
            });
        }
        if value == 0 {
            self.entries.remove(&(row, col));
        } else {
            self.entries.insert((row, col), value);
        }
        Ok(())
    }

    pub fn entries(&self) -> &BTreeMap<(usize, usize), u64> {
        &self.entries
    }

    pub fn positions(&self) -> Vec<(usize, usize)> {
        self.entries.keys().copied().collect()
    }

    pub fn to_dense(&self, field: PrimeField) -> DenseMatrix {
        let mut m = DenseMatrix::zero(self.size);
        for (&(r, c), &v) in &self.entries {
            m.set(r - 1, c - 1, v % field.modulus());
        }
        m
    }
}

/// Ranks of `m^0, m^1, ...` until the power vanishes.
pub fn power_ranks(m: &SparseNilpotentMatrix, field: PrimeField) -> Vec<usize> {
    let base = m.to_dense(field);
    let mut ranks = vec![m.size()];
    let mut power = base.clone();
    loop {
        let r = power.rank(field);
        ranks.push(r);
        if r == 0 {
            break;
        }
        power = power.mul(&base, field);
    }
    ranks
}

/// Jordan type: the number of blocks of size at least `k` is
/// `rank(m^{k-1}) - rank(m^k)`.
pub fn jordan_type(m: &SparseNilpotentMatrix, field: PrimeField) -> Partition {
    let ranks = power_ranks(m, field);
    let dual: Vec<usize> = ranks.windows(2).map(|w| w[0] - w[1]).filter(|&d| d > 0).collect();
    Partition::new(dual).expect("rank drops are weakly decreasing").dual()
}

/// Smallest `k >= 1` with `m^k = 0`, by repeated multiplication.
pub fn nilpotency_index(m: &SparseNilpotentMatrix, field: PrimeField) -> usize {
    let base = m.to_dense(field);
    let mut power = base.clone();
    let mut k = 1;
    while !power.is_zero() {
        power = power.mul(&base, field);
        k += 1;
    }
    k
}

pub fn matrix_rank(m: &SparseNilpotentMatrix, field: PrimeField) -> usize {
    m.to_dense(field).rank(field)
}

/// The sum of `t_{i_1 i_2} + t_{i_2 i_3} + ...` over all characteristic sequences.
pub fn gerstenhaber_element(ideal: &RootIdeal) -> SparseNilpotentMatrix {
    let mut m = SparseNilpotentMatrix::new(ideal.rank().size());
    for seq in characteristic_sequences(ideal).sequences() {
        for w in seq.windows(2) {
            m.set(w[0], w[1], 1).expect("sequence steps are above the diagonal");
        }
    }
    m
}

/// `e_I`: unit entries at the positions of the minimal roots.
pub fn kreweras_element(ideal: &RootIdeal) -> SparseNilpotentMatrix {
    let mut m = SparseNilpotentMatrix::new(ideal.rank().size());
    for root in ideal.min_roots() {
        let (r, c) = root.matrix_position();
        m.set(r, c, 1).expect("root positions are above the diagonal");
    }
    m
}

/// `lambda(e_I)`.
///
/// The minimal roots have distinct rows and distinct columns, so `e_I` is a
/// partial permutation; its Jordan type is read off the chains it forms.
pub fn kreweras_partition(ideal: &RootIdeal) -> Partition {
    let size = ideal.rank().size();
    let mut next = vec![0usize; size + 1];
    let mut has_pred = vec![false; size + 1];
    for root in ideal.min_roots() {
        let (r, c) = root.matrix_position();
        next[r] = c;
        has_pred[c] = true;
    }
    let mut parts = Vec::new();
    for start in (1..=size).filter(|&k| !has_pred[k]) {
        let mut len = 1;
        let mut at = start;
        while next[at] != 0 {
            at = next[at];
            len += 1;
        }
        parts.push(len);
    }
    Partition::from_unsorted(parts).expect("chain lengths are positive")
}

/// `m_I`, the number of minimal roots (valleys of the Dyck path).
pub fn valley_count(ideal: &RootIdeal) -> usize {
    ideal.num_min_roots()
}

/// Random element of the ideal: every position gets an independent uniform
/// nonzero scalar.
pub fn random_element<R: Rng>(ideal: &RootIdeal, field: PrimeField, rng: &mut R) -> SparseNilpotentMatrix {
    let mut m = SparseNilpotentMatrix::new(ideal.rank().size());
    for root in ideal.closure() {
        let (r, c) = root.matrix_position();
        let v = rng.gen_range(1..field.modulus());
        m.set(r, c, v).expect("root positions are above the diagonal");
    }
    m
}

/// Seed for trial `t`, derived from the caller's seed.
pub fn trial_seed(seed: u64, trial: usize) -> u64 {
    seed ^ (trial as u64 + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15)
}

/// Jordan types of `trials` random elements of the ideal.
pub fn generic_trials(ideal: &RootIdeal, trials: usize, seed: u64, field: PrimeField) -> Vec<SparseNilpotentMatrix> {
    (0..trials)
        .map(|t| {
            let mut rng = ChaCha8Rng::seed_from_u64(trial_seed(seed, t));
            random_element(ideal, field, &mut rng)
        })
        .collect()
}

/// Dominance-maximum Jordan type over random elements of the ideal.
///
/// Fails if two trials give incomparable partitions.
pub fn generic_orbit_partition(ideal: &RootIdeal, trials: usize, seed: u64, field: PrimeField) -> Result<Partition> {
    let types: Vec<Partition> = generic_trials(ideal, trials.max(1), seed, field)
        .iter()
        .map(|m| jordan_type(m, field))
        .collect();
    let mut best = types[0].clone();
    for t in &types[1..] {
        match best.dominance_cmp(t)? {
            Some(std::cmp::Ordering::Less) => best = t.clone(),
            Some(_) => {}
            None => return Err(Error::OracleAnomaly(best.to_string(), t.to_string())),
        }
    }
    Ok(best)
}
