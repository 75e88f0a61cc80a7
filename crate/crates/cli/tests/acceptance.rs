//! Acceptance suite: ten criteria, one PASS/FAIL line each.
//!
//! Expected values come either from the shipped golden tables or from small
//! oracles written here, independent of the library code under test.

use std::collections::{BTreeMap, HashMap};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use adideal::classes::classes_of;
use adideal::jordan::{generic_orbit_partition, kreweras_partition};
use adideal::moves::{licensed, replay, shortest_path, Direction};
use adideal::stats::Census;
use adideal::uio::{graph_invariants, greene_kleitman_oracle, indifference_graph, poset_from_ideal};
use adideal::{
    ballot_to_ideal, enumerate_ideals, gerstenhaber_partition, ideal_to_ballot, BallotSequence, MoveKind, Partition,
    PrimeField, Rank, RootIdeal,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! check {
    ($cond:expr, $($msg:tt)*) => {
        if !$cond {
            return Err(format!($($msg)*));
        }
    };
}

fn golden(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "golden", name]
        .iter()
        .collect();
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("reading {}: {e}", path.display()))
}

fn run_cli(args: &[&str]) -> (String, Duration) {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_adideal"))
        .args(args)
        .output()
        .expect("binary runs");
    let elapsed = start.elapsed();
    assert!(
        out.status.success(),
        "adideal {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    (String::from_utf8(out.stdout).expect("utf-8 output"), elapsed)
}

// ---- oracles ----------------------------------------------------------

/// p(n) by the standard parts-at-most-k recurrence.
fn partition_number(n: usize) -> u64 {
    let mut ways = vec![0u64; n + 1];
    ways[0] = 1;
    for part in 1..=n {
        for total in part..=n {
            ways[total] += ways[total - part];
        }
    }
    ways[n]
}

fn binom(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

fn catalan(k: usize) -> u128 {
    binom(2 * k as u64, k as u64) / (k as u128 + 1)
}

/// `(n+2)! / (prod_j a_j! * (n+2-l)!) / (n+2)` with `a_j` the multiplicity of
/// `j` in `lambda` and `l` its number of parts.
fn kreweras_formula(lambda: &[usize], n: usize) -> u128 {
    let mut mult: BTreeMap<usize, usize> = BTreeMap::new();
    for &p in lambda {
        *mult.entry(p).or_default() += 1;
    }
    let denom: u128 = mult.values().map(|&a| factorial(a)).product::<u128>() * factorial(n + 2 - lambda.len());
    let num = factorial(n + 2);
    assert_eq!(num % denom, 0);
    let multinomial = num / denom;
    assert_eq!(multinomial % (n as u128 + 2), 0);
    multinomial / (n as u128 + 2)
}

/// All partitions of `n`, largest part first.
fn all_partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

fn dual(parts: &[usize]) -> Vec<usize> {
    let width = parts.first().copied().unwrap_or(0);
    (1..=width).map(|j| parts.iter().filter(|&&p| p >= j).count()).collect()
}

fn count_valleys(word: &str) -> usize {
    word.as_bytes().windows(2).filter(|w| w == b"01").count()
}

/// Peak height of the path with `1` as an up step and `0` as a down step.
fn peak(word: &str) -> usize {
    let mut h = 0i64;
    let mut best = 0;
    for c in word.chars() {
        h += if c == '1' { 1 } else { -1 };
        best = best.max(h);
    }
    best as usize
}

fn field() -> PrimeField {
    PrimeField::default()
}

// ---- criteria ---------------------------------------------------------

fn table1() -> Outcome {
    let (out, elapsed) = run_cli(&["table1", "3..6", "--format", "csv"]);
    check!(
        out == golden("table1.csv"),
        "table1 3..6 differs from golden/table1.csv:\n{out}"
    );
    // spot values, and every per-rank total against Catalan
    for (rank, lambda, expected) in [
        (6, "[6,1]", 11),
        (6, "[5,2]", 32),
        (6, "[4,2,1]", 87),
        (6, "[3,2,1,1]", 84),
        (5, "[3,2,1]", 37),
        (4, "[3,1,1]", 10),
    ] {
        let line = format!("{rank},\"{lambda}\",{expected}");
        check!(out.lines().any(|l| l == line), "missing row {line}");
    }
    for rank in 3..=6usize {
        let line = format!("{rank},total,{}", catalan(rank + 1));
        check!(out.lines().any(|l| l == line), "missing total {line}");
    }
    check!(elapsed < Duration::from_secs(10), "took {elapsed:?}");
    Ok(format!("byte-identical to golden, {:.2?}", elapsed))
}

fn table2() -> Outcome {
    let (out, elapsed) = run_cli(&["table2", "10", "--format", "csv"]);
    check!(
        out == golden("table2.csv"),
        "table2 10 differs from golden/table2.csv:\n{out}"
    );
    let rows: Vec<Vec<u64>> = out
        .lines()
        .skip(1)
        .map(|l| l.split(',').skip(1).map(|c| c.parse().expect("number")).collect())
        .collect();
    let row_sums: Vec<u64> = rows[..11].iter().map(|r| r[11]).collect();
    check!(
        row_sums == [1, 1023, 9922, 18579, 16017, 8778, 3366, 912, 168, 19, 1],
        "row sums {row_sums:?}"
    );
    for (col, m) in (0..=10u64).rev().enumerate() {
        let narayana = binom(11, m) * binom(11, m + 1) / 11;
        let sum: u64 = rows[..11].iter().map(|r| r[col]).sum();
        check!(
            sum as u128 == narayana && rows[11][col] == sum,
            "column m = {m}: {sum} vs Narayana {narayana}"
        );
    }
    check!(rows[11][11] == 58786, "total {}", rows[11][11]);
    check!(elapsed < Duration::from_secs(60), "took {elapsed:?}");
    Ok(format!(
        "121 cells, margins and Narayana column sums match, {:.2?}",
        elapsed
    ))
}

fn basic_classes_are_fibers() -> Outcome {
    for n in 0..=10 {
        let rank = Rank(n);
        let ideals = enumerate_ideals(rank);
        let table = classes_of(rank, MoveKind::Basic, ideals).map_err(|e| e.to_string())?;
        let expected = partition_number(n + 1);
        check!(
            table.classes.len() as u64 == expected,
            "A_{n}: {} classes, p(n+1) = {expected}",
            table.classes.len()
        );
        let mut seen: HashMap<Partition, usize> = HashMap::new();
        for class in &table.classes {
            let lambda = gerstenhaber_partition(&class.representative);
            check!(
                class.ideals.iter().all(|i| gerstenhaber_partition(i) == lambda),
                "A_{n}: lambda varies on the class of {}",
                class.representative
            );
            check!(
                seen.insert(lambda.clone(), class.id).is_none(),
                "A_{n}: two classes with lambda {lambda}"
            );
        }
    }
    check!(partition_number(11) == 56, "p(11)");
    Ok("n = 0..=10, p(11) = 56 classes at n = 10".into())
}

fn gerstenhaber_vs_oracle() -> Outcome {
    let (trials, seed) = (5, 0);
    let mut count = 0;
    for n in 0..=7 {
        for ideal in enumerate_ideals(Rank(n)) {
            let oracle = generic_orbit_partition(&ideal, trials, seed, field()).map_err(|e| e.to_string())?;
            let lambda = gerstenhaber_partition(&ideal);
            check!(
                oracle == lambda,
                "{ideal} in A_{n}: oracle {oracle}, sequences {lambda}"
            );
            count += 1;
        }
    }
    let all = enumerate_ideals(Rank(10));
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..500 {
        let ideal = &all[rng.gen_range(0..all.len())];
        let oracle = generic_orbit_partition(ideal, trials, seed, field()).map_err(|e| e.to_string())?;
        let lambda = gerstenhaber_partition(ideal);
        check!(oracle == lambda, "{ideal} in A_10: oracle {oracle}, sequences {lambda}");
    }
    Ok(format!("{count} ideals for n <= 7 and 500 sampled at n = 10"))
}

fn move_invariances() -> Outcome {
    for n in 0..=8 {
        let rank = Rank(n);
        let ideals = enumerate_ideals(rank);
        for (kind, stat) in [
            (
                MoveKind::Basic,
                (|p: &Partition| p.to_string()) as fn(&Partition) -> String,
            ),
            (MoveKind::Inner, |p: &Partition| p.largest().to_string()),
            (MoveKind::Outer, |p: &Partition| p.len().to_string()),
        ] {
            let table = classes_of(rank, kind, ideals.clone()).map_err(|e| e.to_string())?;
            for class in &table.classes {
                let value = stat(&gerstenhaber_partition(&class.representative));
                check!(
                    class.ideals.iter().all(|i| stat(&gerstenhaber_partition(i)) == value),
                    "A_{n}: {kind} class of {} not constant",
                    class.representative
                );
            }
        }
    }
    Ok("lambda / index / corank constant on basic / inner / outer classes, n <= 8".into())
}

fn kreweras_numbers() -> Outcome {
    for n in 0..=10 {
        let mut counts: HashMap<Vec<usize>, u128> = HashMap::new();
        let ideals = enumerate_ideals(Rank(n));
        for ideal in &ideals {
            *counts.entry(kreweras_partition(ideal).parts().to_vec()).or_default() += 1;
        }
        let mut total = 0;
        for lambda in all_partitions(n + 1) {
            let formula = kreweras_formula(&lambda, n);
            let got = counts.get(&lambda).copied().unwrap_or(0);
            check!(
                got == formula,
                "A_{n}: K_{lambda:?} enumerated {got}, formula {formula}"
            );
            total += formula;
        }
        check!(
            total == catalan(n + 1) && ideals.len() as u128 == total,
            "A_{n}: total {total}"
        );
    }
    Ok("every partition of n+1, n <= 10; totals are Catalan".into())
}

fn double_counting() -> Outcome {
    for n in 0..=10 {
        let census = Census::new(Rank(n)).map_err(|e| e.to_string())?;
        let size = n + 1;
        let lambdas: Vec<Vec<usize>> = census.stats.iter().map(|s| s.lambda.parts().to_vec()).collect();
        let mut n_lambda: HashMap<Vec<usize>, u64> = HashMap::new();
        for l in &lambdas {
            *n_lambda.entry(l.clone()).or_default() += 1;
        }
        for k in 1..=size {
            let parts = all_partitions(size);
            let lhs: u64 = parts
                .iter()
                .filter(|p| p[0] == k)
                .map(|p| n_lambda.get(p).copied().unwrap_or(0))
                .sum();
            let rhs: u64 = parts
                .iter()
                .filter(|p| p[0] == k)
                .map(|p| n_lambda.get(&dual(p)).copied().unwrap_or(0))
                .sum();
            check!(lhs == rhs, "A_{n}, k = {k}: {lhs} vs {rhs}");
        }
        let mut by_index: HashMap<(usize, usize), u64> = HashMap::new();
        let mut by_corank: HashMap<(usize, usize), u64> = HashMap::new();
        for (l, s) in lambdas.iter().zip(&census.stats) {
            *by_index.entry((l[0], s.valleys)).or_default() += 1;
            *by_corank.entry((l.len(), s.valleys)).or_default() += 1;
        }
        for r in 1..=size {
            for s in 0..=n {
                let a = by_index.get(&(r, s)).copied().unwrap_or(0);
                let b = by_corank.get(&(r, n - s)).copied().unwrap_or(0);
                check!(a == b, "A_{n}, r = {r}, s = {s}: {a} vs {b}");
            }
        }
    }
    Ok("index and corank sums and joint cells agree, n <= 10".into())
}

fn ballot_structure() -> Outcome {
    let mut count = 0;
    for n in 0..=8 {
        for ideal in enumerate_ideals(Rank(n)) {
            let word = ideal_to_ballot(&ideal);
            let text = word.to_string();
            check!(text.len() == 2 * (n + 1), "{ideal}: word {text}");
            let reparsed = BallotSequence::parse(&text).map_err(|e| e.to_string())?;
            let back = ballot_to_ideal(&reparsed).map_err(|e| e.to_string())?;
            check!(back == ideal, "{ideal} -> {text} -> {back}");
            check!(
                count_valleys(&text) == ideal.num_min_roots(),
                "{ideal}: valleys of {text}"
            );
            let lambda = gerstenhaber_partition(&ideal);
            check!(
                peak(&text) == lambda.len(),
                "{ideal}: peak of {text} vs lambda {lambda}"
            );
            count += 1;
        }
    }
    Ok(format!("{count} ideals, n <= 8"))
}

fn uio_oracles() -> Outcome {
    let mut count = 0;
    for n in 0..=6 {
        for ideal in enumerate_ideals(Rank(n)) {
            let lambda = gerstenhaber_partition(&ideal);
            let p = poset_from_ideal(&ideal);
            let mut prefix = 0;
            for (k, part) in (1..=n + 1).zip(lambda.parts().iter().chain(std::iter::repeat(&0))) {
                prefix += part;
                let gk = greene_kleitman_oracle(&p, k).map_err(|e| e.to_string())?;
                check!(gk == prefix, "{ideal}: k = {k}, chains cover {gk}, lambda {lambda}");
            }
            let inv = graph_invariants(&indifference_graph(&p)).map_err(|e| e.to_string())?;
            check!(
                inv.independence_number == lambda.largest(),
                "{ideal}: independence {inv:?} vs {lambda}"
            );
            check!(inv.clique_number == lambda.len(), "{ideal}: clique {inv:?} vs {lambda}");
            check!(
                inv.chromatic_number == lambda.len(),
                "{ideal}: chromatic {inv:?} vs {lambda}"
            );
            count += 1;
        }
    }
    Ok(format!("{count} ideals, n <= 6"))
}

fn worked_example() -> Outcome {
    let rank = Rank(8);
    let waypoints: Vec<RootIdeal> = ["[2,5],[3,6],[6,7]", "[2,5],[5,6],[6,7]", "[5,5],[6,7]"]
        .iter()
        .map(|s| RootIdeal::parse(s, rank))
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    let mut steps = 0;
    for pair in waypoints.windows(2) {
        let moves = shortest_path(&pair[0], &pair[1], MoveKind::Basic)
            .ok_or_else(|| format!("{} and {} are not connected by basic moves", pair[0], pair[1]))?;
        let path = replay(&pair[0], &moves).map_err(|e| e.to_string())?;
        check!(path.last() == Some(&pair[1]), "replay ends at {:?}", path.last());
        let mut current = &pair[0];
        for (mv, next) in moves.iter().zip(&path[1..]) {
            // the licence lives on the larger ideal of the two
            let (big, small) = match mv.direction {
                Direction::Remove => (current, next),
                Direction::Add => (next, current),
            };
            check!(
                big.min_roots().contains(&mv.root),
                "{mv}: {} not minimal in {big}",
                mv.root
            );
            let mut closure = big.closure();
            closure.remove(&mv.root);
            check!(
                closure == small.closure(),
                "{mv}: {big} and {small} differ by more than one root"
            );
            let k = match mv.side {
                adideal::Side::Left => mv.root.i.checked_sub(1).filter(|&k| k >= 1),
                adideal::Side::Right => Some(mv.root.j + 1).filter(|&k| k <= rank.n()),
            };
            let stable = k.is_some_and(|k| big.is_j_stable(k).unwrap_or(false));
            check!(
                stable && licensed(big, mv.root, MoveKind::Basic, mv.side),
                "{mv} on {big} is not licensed"
            );
            current = next;
            steps += 1;
        }
    }
    Ok(format!("{steps} licensed basic moves through the three waypoints"))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("table1 3..6 reproduces N_lambda for A_3..A_6", table1),
        ("table2 10 reproduces the joint index/valley table", table2),
        (
            "basic classes are the fibers of lambda, n <= 10",
            basic_classes_are_fibers,
        ),
        (
            "Gerstenhaber partition agrees with the random-matrix oracle",
            gerstenhaber_vs_oracle,
        ),
        ("move systems preserve lambda, index, corank", move_invariances),
        ("Kreweras formula matches enumeration", kreweras_numbers),
        ("index/corank double counting", double_counting),
        ("ballot words: round trip, valleys, peak height", ballot_structure),
        ("unit interval order oracles", uio_oracles),
        ("A_8 worked move chain replays", worked_example),
    ];
    let mut failures = 0;
    for (k, (name, criterion)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(criterion)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        match outcome {
            Ok(detail) => println!(
                "criterion {:>2}: PASS  {name} ({detail}) [{:.2?}]",
                k + 1,
                start.elapsed()
            ),
            Err(why) => {
                failures += 1;
                println!("criterion {:>2}: FAIL  {name}: {why}", k + 1);
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failures,
        criteria.len()
    );
    if failures > 0 {
        std::process::exit(1);
    }
}
