//! The full cross-module invariant suite for one rank, stopping at the first
//! falsified statement with a witness.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use num_bigint::BigUint;

use crate::ballot::{ballot_to_ideal, ideal_to_ballot, valley_roots};
use crate::classes::{classes_of, ClassTable};
use crate::enumerate::{catalan, enumerate_ballots};
use crate::field::PrimeField;
use crate::ideal::{minimal_roots, parabolic_ideal, RootIdeal};
use crate::jordan::{
    characteristic_sequences, generic_orbit_partition, generic_trials, gerstenhaber_element, jordan_type,
    kreweras_element, matrix_rank, nilpotency_index,
};
use crate::moves::{licensed, neighbors, normalize_to_parabolic, replay, Move, MoveKind, Side};
use crate::partition::{dominance_leq, partition_count, Partition};
use crate::root::Rank;
use crate::stats::{
    index_corank_check, joint_from, joint_zero_region_check, kreweras_check, n_lambda_from, narayana_check, Census,
};
use crate::uio::{
    graph_invariants, greene_kleitman_oracle, indifference_graph, max_antichain, poset_from_ideal,
    BRUTE_FORCE_RANK_LIMIT,
};

#[derive(Debug, Clone, Copy)]
pub struct VerifyConfig {
    pub trials: usize,
    pub seed: u64,
    pub field: PrimeField,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            trials: 5,
            seed: 0,
            field: PrimeField::default(),
        }
    }
}

/// A falsified invariant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Falsified {
    pub rank: usize,
    pub check: &'static str,
    pub witness: String,
}

impl fmt::Display for Falsified {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A_{}: {} falsified: {}", self.rank, self.check, self.witness)
    }
}

impl std::error::Error for Falsified {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub rank: usize,
    pub check: &'static str,
    /// Number of individual instances checked.
    pub instances: usize,
}

type CheckResult = std::result::Result<usize, Falsified>;
type Check = (&'static str, fn(&Ctx) -> CheckResult);

struct Ctx {
    rank: Rank,
    census: Census,
    basic: ClassTable,
    inner: ClassTable,
    outer: ClassTable,
    config: VerifyConfig,
}

impl Ctx {
    fn fail(&self, check: &'static str, witness: impl Into<String>) -> Falsified {
        Falsified {
            rank: self.rank.n(),
            check,
            witness: witness.into(),
        }
    }
}

fn ensure(cond: bool, ctx: &Ctx, check: &'static str, witness: impl FnOnce() -> String) -> Result<(), Falsified> {
    if cond {
        Ok(())
    } else {
        Err(ctx.fail(check, witness()))
    }
}

/// Runs every check for every rank `0..=max_rank`.
pub fn verify_up_to(max_rank: usize, config: &VerifyConfig) -> std::result::Result<Vec<CheckOutcome>, Falsified> {
    let mut out = Vec::new();
    for n in 0..=max_rank {
        out.extend(verify_rank(Rank(n), config)?);
    }
    Ok(out)
}

pub fn verify_rank(rank: Rank, config: &VerifyConfig) -> std::result::Result<Vec<CheckOutcome>, Falsified> {
    let setup = |e: crate::error::Error| Falsified {
        rank: rank.n(),
        check: "setup",
        witness: e.to_string(),
    };
    let census = Census::new(rank).map_err(setup)?;
    let basic = classes_of(rank, MoveKind::Basic, census.ideals.clone()).map_err(setup)?;
    let inner = classes_of(rank, MoveKind::Inner, census.ideals.clone()).map_err(setup)?;
    let outer = classes_of(rank, MoveKind::Outer, census.ideals.clone()).map_err(setup)?;
    let ctx = Ctx {
        rank,
        census,
        basic,
        inner,
        outer,
        config: *config,
    };

    let checks: &[Check] = &[
        ("catalan count", check_count),
        ("closure/minimal_roots round trip", check_closure),
        ("antichain endpoints distinct", check_endpoints),
        ("ballot round trip", check_ballot),
        ("valleys = minimal roots", check_valleys),
        ("max height = parts of lambda", check_max_height),
        ("removal and addition rules", check_remove_add),
        ("basic = inner and outer", check_basic_split),
        ("move replay", check_replay),
        ("basic classes = lambda fibers", check_basic_classes),
        ("index constant on inner classes", check_inner),
        ("corank constant on outer classes", check_outer),
        ("parabolic classes by mu", check_parabolics),
        ("normalize to parabolic", check_normalize),
        ("characteristic sequences", check_sequences),
        ("gerstenhaber element", check_element),
        ("generic oracle", check_generic),
        ("kreweras partition", check_kreweras_partition),
        ("kreweras formula", check_kreweras_formula),
        ("narayana", check_narayana),
        ("index/corank double counting", check_index_corank),
        ("joint table zero region", check_zero_region),
        ("unit interval order oracles", check_uio),
    ];
    let mut out = Vec::new();
    for &(name, check) in checks {
        let instances = check(&ctx).map_err(|mut f| {
            f.check = name;
            f
        })?;
        out.push(CheckOutcome {
            rank: rank.n(),
            check: name,
            instances,
        });
    }
    Ok(out)
}

fn check_count(ctx: &Ctx) -> CheckResult {
    let expected = catalan(ctx.rank.size());
    let got = BigUint::from(ctx.census.len());
    ensure(got == expected, ctx, "", || {
        format!("{got} ideals, expected {expected}")
    })?;
    Ok(1)
}

fn check_closure(ctx: &Ctx) -> CheckResult {
    for ideal in &ctx.census.ideals {
        let closure = ideal.closure();
        let back = minimal_roots(ctx.rank, &closure).map_err(|e| ctx.fail("", format!("{ideal}: {e}")))?;
        ensure(&back == ideal, ctx, "", || format!("{ideal} came back as {back}"))?;
        // brute force upward closure
        let brute: BTreeSet<_> = ctx
            .rank
            .positive_roots()
            .filter(|&b| ideal.min_roots().iter().any(|&m| m.leq(b)))
            .collect();
        ensure(brute == closure, ctx, "", || format!("closure of {ideal}"))?;
    }
    Ok(ctx.census.len())
}

fn check_endpoints(ctx: &Ctx) -> CheckResult {
    for ideal in &ctx.census.ideals {
        let lefts: BTreeSet<_> = ideal.min_roots().iter().map(|r| r.i).collect();
        let rights: BTreeSet<_> = ideal.min_roots().iter().map(|r| r.j).collect();
        let m = ideal.num_min_roots();
        ensure(lefts.len() == m && rights.len() == m, ctx, "", || ideal.to_string())?;
        ensure(
            ideal.min_roots().windows(2).all(|w| w[0].i < w[1].i && w[0].j < w[1].j),
            ctx,
            "",
            || ideal.to_string(),
        )?;
    }
    Ok(ctx.census.len())
}

fn check_ballot(ctx: &Ctx) -> CheckResult {
    for ideal in &ctx.census.ideals {
        let word = ideal_to_ballot(ideal);
        let back = ballot_to_ideal(&word).map_err(|e| ctx.fail("", e.to_string()))?;
        ensure(&back == ideal, ctx, "", || format!("{ideal} -> {word} -> {back}"))?;
    }
    let words = enumerate_ballots(ctx.rank);
    for word in &words {
        let ideal = ballot_to_ideal(word).map_err(|e| ctx.fail("", e.to_string()))?;
        ensure(&ideal_to_ballot(&ideal) == word, ctx, "", || {
            format!("{word} -> {ideal}")
        })?;
        // removing a minimal root turns its 01 into 10
        for (pos, root) in valley_roots(word) {
            let smaller = ideal_to_ballot(&ideal.remove_minimal(root).expect("valley root is minimal"));
            let mut expected = word.bits().to_vec();
            expected.swap(pos - 1, pos);
            ensure(smaller.bits() == expected, ctx, "", || {
                format!("removing {root} from {word} gave {smaller}")
            })?;
        }
    }
    Ok(ctx.census.len() + words.len())
}

fn check_valleys(ctx: &Ctx) -> CheckResult {
    for ideal in &ctx.census.ideals {
        let word = ideal_to_ballot(ideal);
        ensure(word.valleys() == ideal.num_min_roots(), ctx, "", || {
            format!("{ideal}: word {word}")
        })?;
        let roots: Vec<_> = valley_roots(&word).into_iter().map(|(_, r)| r).collect();
        ensure(roots == ideal.min_roots(), ctx, "", || {
            format!("{ideal}: valleys encode {roots:?}")
        })?;
    }
    Ok(ctx.census.len())
}

fn check_max_height(ctx: &Ctx) -> CheckResult {
    for (ideal, s) in ctx.census.ideals.iter().zip(&ctx.census.stats) {
        ensure(s.max_height == s.corank(), ctx, "", || {
            format!("{ideal}: max height {}, lambda {}", s.max_height, s.lambda)
        })?;
    }
    Ok(ctx.census.len())
}

fn check_remove_add(ctx: &Ctx) -> CheckResult {
    let mut count = 0;
    for ideal in &ctx.census.ideals {
        for &root in ideal.min_roots() {
            let removed = ideal.remove_minimal(root).expect("minimal");
            let mut closure = ideal.closure();
            closure.remove(&root);
            let brute = minimal_roots(ctx.rank, &closure).map_err(|e| ctx.fail("", e.to_string()))?;
            ensure(removed == brute, ctx, "", || {
                format!("{ideal} minus {root}: {removed} vs {brute}")
            })?;
            ensure(removed.add_minimal(root).as_ref() == Some(ideal), ctx, "", || {
                format!("{removed} plus {root} does not give {ideal}")
            })?;
            count += 1;
        }
    }
    Ok(count)
}

fn check_basic_split(ctx: &Ctx) -> CheckResult {
    let mut count = 0;
    for ideal in &ctx.census.ideals {
        for &root in ideal.min_roots() {
            for side in [Side::Left, Side::Right] {
                let basic = licensed(ideal, root, MoveKind::Basic, side);
                let inner = licensed(ideal, root, MoveKind::Inner, side);
                let outer = licensed(ideal, root, MoveKind::Outer, side);
                // basic licence straight from j-stability
                let stable = match side {
                    Side::Left => root.i >= 2 && ideal.is_j_stable(root.i - 1).unwrap_or(false),
                    Side::Right => root.j < ctx.rank.n() && ideal.is_j_stable(root.j + 1).unwrap_or(false),
                };
                ensure(basic == (inner && outer) && basic == stable, ctx, "", || {
                    format!("{ideal}, {root} {side}: basic {basic}, inner {inner}, outer {outer}, stable {stable}")
                })?;
                count += 1;
            }
        }
    }
    Ok(count)
}

fn check_replay(ctx: &Ctx) -> CheckResult {
    let mut count = 0;
    for kind in MoveKind::ALL {
        for ideal in &ctx.census.ideals {
            for next in neighbors(ideal, kind) {
                let mv = Move::between(ideal, &next, kind)
                    .ok_or_else(|| ctx.fail("", format!("{ideal} and {next} are not adjacent for {kind}")))?;
                let got = mv.apply(ideal).map_err(|e| ctx.fail("", e.to_string()))?;
                ensure(got == next, ctx, "", || {
                    format!("{mv} on {ideal} gave {got}, expected {next}")
                })?;
                let back = Move::between(&next, ideal, kind)
                    .ok_or_else(|| ctx.fail("", format!("{next} -> {ideal} not licensed for {kind}")))?;
                ensure(back.apply(&next).as_ref() == Ok(ideal), ctx, "", || {
                    format!("reverse of {mv}")
                })?;
                count += 1;
            }
        }
    }
    Ok(count)
}

fn lambda_of(ctx: &Ctx) -> HashMap<&RootIdeal, &Partition> {
    ctx.census
        .ideals
        .iter()
        .zip(&ctx.census.stats)
        .map(|(i, s)| (i, &s.lambda))
        .collect()
}

fn check_basic_classes(ctx: &Ctx) -> CheckResult {
    let expected = partition_count(ctx.rank.size());
    let got = ctx.basic.classes.len() as u64;
    ensure(got == expected, ctx, "", || {
        format!("{got} basic classes, p(n+1) = {expected}")
    })?;
    let lambda = lambda_of(ctx);
    let cmp = ctx.basic.matches_fibers(|i| lambda[i].clone());
    ensure(cmp.coincide(), ctx, "", || {
        format!(
            "non-constant classes {:?}, shared labels {:?}",
            cmp.non_constant, cmp.shared_values
        )
    })?;
    let table = n_lambda_from(&ctx.census).map_err(|e| ctx.fail("", e.to_string()))?;
    Ok(table.counts.len())
}

fn check_inner(ctx: &Ctx) -> CheckResult {
    let lambda = lambda_of(ctx);
    let cmp = ctx.inner.matches_fibers(|i| lambda[i].largest());
    ensure(cmp.non_constant.is_empty(), ctx, "", || {
        let k = cmp.non_constant[0];
        format!(
            "index varies on the inner class of {}",
            ctx.inner.classes[k].representative
        )
    })?;
    Ok(ctx.inner.classes.len())
}

fn check_outer(ctx: &Ctx) -> CheckResult {
    let lambda = lambda_of(ctx);
    let cmp = ctx.outer.matches_fibers(|i| lambda[i].len());
    ensure(cmp.non_constant.is_empty(), ctx, "", || {
        let k = cmp.non_constant[0];
        format!(
            "corank varies on the outer class of {}",
            ctx.outer.classes[k].representative
        )
    })?;
    Ok(ctx.outer.classes.len())
}

fn check_parabolics(ctx: &Ctx) -> CheckResult {
    let class_of = ctx.basic.class_of();
    let n = ctx.rank.n();
    let parabolics: Vec<RootIdeal> = (0u32..1 << n)
        .map(|mask| {
            let cuts: Vec<usize> = (1..=n).filter(|&k| mask & (1 << (k - 1)) != 0).collect();
            parabolic_ideal(ctx.rank, &cuts).expect("increasing cuts")
        })
        .collect();
    let mut count = 0;
    for p in &parabolics {
        for q in &parabolics {
            let same_class = class_of[p] == class_of[q];
            let same_mu = p.parabolic_mu() == q.parabolic_mu();
            ensure(same_class == same_mu, ctx, "", || {
                format!("{p} vs {q}: same class {same_class}, same mu {same_mu}")
            })?;
            count += 1;
        }
    }
    Ok(count)
}

fn check_normalize(ctx: &Ctx) -> CheckResult {
    let class_of = ctx.basic.class_of();
    for (ideal, s) in ctx.census.ideals.iter().zip(&ctx.census.stats) {
        let (target, moves) = normalize_to_parabolic(ideal);
        let path = replay(ideal, &moves).map_err(|e| ctx.fail("", format!("witness from {ideal}: {e}")))?;
        ensure(path.last() == Some(&target) && target.is_parabolic(), ctx, "", || {
            format!("{ideal} -> {target}")
        })?;
        ensure(class_of[ideal] == class_of[&target], ctx, "", || {
            format!("{ideal} and {target} in different classes")
        })?;
        let mu = target.parabolic_mu().expect("parabolic");
        ensure(mu.dual() == s.lambda, ctx, "", || {
            format!("{ideal}: mu* = {}, lambda = {}", mu.dual(), s.lambda)
        })?;
    }
    Ok(ctx.census.len())
}

fn check_sequences(ctx: &Ctx) -> CheckResult {
    let size = ctx.rank.size();
    for ideal in &ctx.census.ideals {
        let seqs = characteristic_sequences(ideal);
        let mut seen: Vec<usize> = seqs.sequences().iter().flatten().copied().collect();
        seen.sort_unstable();
        ensure(seen == (1..=size).collect::<Vec<_>>(), ctx, "", || {
            format!("{ideal}: {seqs} is not a set partition")
        })?;
        ensure(seqs.sequences()[0][0] == 1, ctx, "", || {
            format!("{ideal}: first sequence {seqs}")
        })?;
        ensure(
            seqs.sequences().windows(2).all(|w| w[0].len() >= w[1].len()),
            ctx,
            "",
            || format!("{ideal}: lengths of {seqs}"),
        )?;
        for seq in seqs.sequences() {
            ensure(
                seq.windows(2)
                    .all(|w| w[0] < w[1] && ideal.contains_position(w[0], w[1])),
                ctx,
                "",
                || format!("{ideal}: step outside the ideal in {seqs}"),
            )?;
        }
    }
    Ok(ctx.census.len())
}

fn check_element(ctx: &Ctx) -> CheckResult {
    for (ideal, s) in ctx.census.ideals.iter().zip(&ctx.census.stats) {
        let x = gerstenhaber_element(ideal);
        ensure(
            x.positions().iter().all(|&(r, c)| ideal.contains_position(r, c)),
            ctx,
            "",
            || format!("{ideal}: support of x leaves the ideal"),
        )?;
        let t = jordan_type(&x, ctx.config.field);
        ensure(t == s.lambda, ctx, "", || {
            format!("{ideal}: lambda(x) = {t}, lambda_I = {}", s.lambda)
        })?;
    }
    Ok(ctx.census.len())
}

fn check_generic(ctx: &Ctx) -> CheckResult {
    let VerifyConfig { trials, seed, field } = ctx.config;
    let size = ctx.rank.size();
    for (ideal, s) in ctx.census.ideals.iter().zip(&ctx.census.stats) {
        let oracle =
            generic_orbit_partition(ideal, trials, seed, field).map_err(|e| ctx.fail("", format!("{ideal}: {e}")))?;
        ensure(oracle == s.lambda, ctx, "", || {
            format!("{ideal}: oracle {oracle}, gerstenhaber {}", s.lambda)
        })?;
        let mats = generic_trials(ideal, trials, seed, field);
        let index = mats.iter().map(|m| nilpotency_index(m, field)).max().unwrap_or(1);
        let max_rank = mats.iter().map(|m| matrix_rank(m, field)).max().unwrap_or(0);
        ensure(index == s.index(), ctx, "", || {
            format!("{ideal}: nilpotency index {index}, lambda {}", s.lambda)
        })?;
        ensure(size - max_rank == s.corank(), ctx, "", || {
            format!("{ideal}: rank {max_rank}, lambda {}", s.lambda)
        })?;
    }
    Ok(ctx.census.len())
}

fn check_kreweras_partition(ctx: &Ctx) -> CheckResult {
    let size = ctx.rank.size();
    for (ideal, s) in ctx.census.ideals.iter().zip(&ctx.census.stats) {
        let by_rank = jordan_type(&kreweras_element(ideal), ctx.config.field);
        ensure(by_rank == s.kreweras, ctx, "", || {
            format!("{ideal}: {by_rank} vs {}", s.kreweras)
        })?;
        ensure(s.kreweras.len() + s.valleys == size, ctx, "", || {
            format!("{ideal}: lambda(e_I) = {}", s.kreweras)
        })?;
        let dominated = dominance_leq(&s.kreweras, &s.lambda).unwrap_or(false);
        ensure(dominated, ctx, "", || {
            format!("{ideal}: lambda(e_I) = {} not below {}", s.kreweras, s.lambda)
        })?;
    }
    Ok(ctx.census.len())
}

fn check_kreweras_formula(ctx: &Ctx) -> CheckResult {
    kreweras_check(&ctx.census)
        .map(|rows| rows.len())
        .map_err(|e| ctx.fail("", e.to_string()))
}

fn check_narayana(ctx: &Ctx) -> CheckResult {
    narayana_check(&ctx.census)
        .map(|rows| rows.len())
        .map_err(|e| ctx.fail("", e.to_string()))
}

fn check_index_corank(ctx: &Ctx) -> CheckResult {
    let table = n_lambda_from(&ctx.census).map_err(|e| ctx.fail("", e.to_string()))?;
    let report = index_corank_check(&ctx.census, &table).map_err(|e| ctx.fail("", e.to_string()))?;
    Ok(report.sums.len() + report.cells_checked)
}

fn check_zero_region(ctx: &Ctx) -> CheckResult {
    let size = ctx.rank.size();
    for (ideal, s) in ctx.census.ideals.iter().zip(&ctx.census.stats) {
        let upper_corank = size - s.corank();
        let upper_index = size - size.div_ceil(s.index());
        ensure(s.valleys <= upper_corank && s.valleys <= upper_index, ctx, "", || {
            format!("{ideal}: m_I = {} with lambda = {}", s.valleys, s.lambda)
        })?;
    }
    joint_zero_region_check(&joint_from(&ctx.census)).map_err(|e| ctx.fail("", e.to_string()))?;
    Ok(ctx.census.len())
}

fn check_uio(ctx: &Ctx) -> CheckResult {
    if ctx.rank.n() > BRUTE_FORCE_RANK_LIMIT {
        return Ok(0);
    }
    let size = ctx.rank.size();
    for (ideal, s) in ctx.census.ideals.iter().zip(&ctx.census.stats) {
        let poset = poset_from_ideal(ideal);
        let err = |e: crate::error::Error| ctx.fail("", e.to_string());
        for k in 1..=size {
            let gk = greene_kleitman_oracle(&poset, k).map_err(err)?;
            ensure(gk == s.lambda.prefix_sum(k), ctx, "", || {
                format!("{ideal}: k = {k}, chains cover {gk}, lambda {}", s.lambda)
            })?;
        }
        let inv = graph_invariants(&indifference_graph(&poset)).map_err(err)?;
        ensure(
            inv.independence_number == s.index()
                && inv.clique_number == s.corank()
                && inv.chromatic_number == s.corank(),
            ctx,
            "",
            || format!("{ideal}: {inv:?}, lambda {}", s.lambda),
        )?;
        let width = max_antichain(&poset).map_err(err)?;
        ensure(width == s.corank(), ctx, "", || {
            format!("{ideal}: max antichain {width}, lambda {}", s.lambda)
        })?;
    }
    Ok(ctx.census.len())
}
