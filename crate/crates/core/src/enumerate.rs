//! Canonical enumeration of all ideals of a given rank.
//!
//! Ideals are emitted in lexicographic order of their ballot words with
//! `1 < 0`, i.e. from the empty ideal (`1^{n+1}0^{n+1}`) to the full
//! nilradical (`(10)^{n+1}`).

use num_bigint::BigUint;

use crate::ballot::{ballot_to_ideal, BallotSequence};
use crate::ideal::RootIdeal;
use crate::root::Rank;

/// Default ceiling for exhaustive work: `C(13) = 742900` ideals.
pub const ENUMERATION_LIMIT: usize = 12;

/// All ballot words of rank `n` in canonical order.
pub fn enumerate_ballots(rank: Rank) -> Vec<BallotSequence> {
    fn go(ones: usize, zeros: usize, half: usize, cur: &mut Vec<bool>, out: &mut Vec<BallotSequence>) {
        if ones == half && zeros == half {
            out.push(BallotSequence::new(cur.clone()).expect("generator only builds ballot words"));
            return;
        }
        if ones < half {
            cur.push(true);
            go(ones + 1, zeros, half, cur, out);
            cur.pop();
        }
        if zeros < ones {
            cur.push(false);
            go(ones, zeros + 1, half, cur, out);
            cur.pop();
        }
    }
    let half = rank.size();
    let mut out = Vec::new();
    go(0, 0, half, &mut Vec::with_capacity(2 * half), &mut out);
    out
}

/// All ideals of rank `n` in canonical order.
pub fn enumerate_ideals(rank: Rank) -> Vec<RootIdeal> {
    enumerate_ballots(rank)
        .iter()
        .map(|b| ballot_to_ideal(b).expect("ballot word of the right rank"))
        .collect()
}

/// `C(k) = binom(2k, k) / (k + 1)`, exactly.
pub fn catalan(k: usize) -> BigUint {
    binomial(2 * k, k) / BigUint::from(k + 1)
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    let k = k.min(n - k);
    let mut acc = BigUint::from(1u32);
    for t in 0..k {
        acc = acc * BigUint::from(n - t) / BigUint::from(t + 1);
    }
    acc
}
