//! Exit criteria. Each test prints one `PASS`/`FAIL` line per criterion;
//! run with `cargo test -p oddpi-cli --test acceptance -- --nocapture`.

use std::process::Command;
use std::time::{Duration, Instant};

use oddpi::oracle::{ap_intersection_bruteforce, sieve_primes};
use oddpi::{
    ap_term, breakdown, common_difference, lambda_c, multi_first_common, pair_first_common,
    prime_pi, product_form_first_common, raw_odd_sum, sieve_restricted,
};
use rayon::prelude::*;

fn report(id: u32, name: &str, ok: bool, detail: &str) {
    println!(
        "[{}] criterion {id}: {name} ({detail})",
        if ok { "PASS" } else { "FAIL" }
    );
    assert!(ok, "criterion {id} failed: {detail}");
}

#[test]
fn criterion_1_known_values() {
    let started = Instant::now();
    let got: Vec<u64> = [10, 100, 1000].iter().map(|&n| prime_pi(n)).collect();
    let elapsed = started.elapsed();
    report(
        1,
        "pi(10), pi(100), pi(1000) = 4, 25, 168",
        got == [4, 25, 168] && elapsed < Duration::from_secs(1),
        &format!("got {got:?} in {elapsed:?}"),
    );
}

#[test]
fn criterion_2_worked_example() {
    let b = breakdown(100).unwrap();
    let ok = b.even_composites == 49
        && b.raw_odd_sum == 28
        && b.lambda_c == 3
        && b.restricted_indices == [1, 2, 3]
        && b.pi == 25;
    report(2, "breakdown(100) internals", ok, &format!("{b:?}"));
}

#[test]
fn criterion_3_oracle_equivalence() {
    let started = Instant::now();
    let oracle = sieve_primes(100_000).unwrap();
    let mismatches: Vec<u64> = (0..=100_000u64)
        .into_par_iter()
        .filter(|&n| prime_pi(n) != oracle.pi(n))
        .collect();
    let mut detail = format!("{} mismatches over [0, 1e5]", mismatches.len());
    let mut ok = mismatches.is_empty();
    for n in [1_000_000u64, 10_000_000] {
        let expected = sieve_primes(n).unwrap().pi(n);
        let got = prime_pi(n);
        ok &= got == expected;
        detail.push_str(&format!("; pi({n}) = {got}, sieve {expected}"));
    }
    let elapsed = started.elapsed();
    ok &= elapsed <= Duration::from_secs(300);
    detail.push_str(&format!("; {elapsed:?}"));
    report(3, "exhaustive oracle equivalence", ok, &detail);
}

#[test]
fn criterion_4_lambda_identity() {
    let oracle = sieve_primes(10_000).unwrap();
    let bad: Vec<u64> = (2..=10_000u64)
        .filter(|&n| {
            let restricted = sieve_restricted(n);
            raw_odd_sum(n, &restricted) - lambda_c(n, &restricted) != oracle.odd_composites(n)
        })
        .collect();
    report(
        4,
        "raw sum - lambda_c = odd composites for N in [2, 1e4]",
        bad.is_empty(),
        &format!("{} failures, first {:?}", bad.len(), bad.first()),
    );
}

#[test]
fn criterion_5_intersection_algebra() {
    const LIMIT: u64 = 100_000;
    // a pair's first common term is at least 3pq >= 9q, so larger bases never qualify
    let max_base = LIMIT / 9;
    let indices: Vec<u64> = sieve_restricted((max_base + 1) * (max_base + 1))
        .indices()
        .iter()
        .copied()
        .filter(|&n| 2 * n < max_base)
        .collect();
    let mut checked = [0usize; 2];
    let mut failures = Vec::new();
    let mut check = |subset: &[u64], formula: u128| {
        if formula > LIMIT as u128 {
            return;
        }
        let common = ap_intersection_bruteforce(subset, LIMIT).unwrap();
        let diff = common_difference(subset).unwrap();
        let ok = common.first().map(|&m| m as u128) == Some(formula)
            && common.windows(2).all(|w| (w[1] - w[0]) as u128 == diff);
        checked[subset.len() - 2] += 1;
        if !ok {
            failures.push(subset.to_vec());
        }
    };
    for (i, &a) in indices.iter().enumerate() {
        for (j, &b) in indices.iter().enumerate().skip(i + 1) {
            let p = (2 * a + 1) * (2 * b + 1);
            if p * 3 > LIMIT {
                break;
            }
            check(&[a, b], pair_first_common(a, b).unwrap());
            for &c in &indices[j + 1..] {
                if p * (2 * c + 1) > LIMIT {
                    break;
                }
                check(&[a, b, c], multi_first_common(&[a, b, c]).unwrap());
            }
        }
    }
    let restricted_100: Vec<u64> = sieve_restricted(201 * 201).indices().to_vec();
    let mut agreement = 0usize;
    for (i, &a) in restricted_100.iter().enumerate() {
        for &b in &restricted_100[i + 1..] {
            if pair_first_common(a, b).unwrap() != product_form_first_common(&[a, b]).unwrap() {
                failures.push(vec![a, b]);
            }
            agreement += 1;
        }
    }
    report(
        5,
        "first common terms and common differences",
        failures.is_empty() && checked[0] > 0 && checked[1] > 0,
        &format!(
            "{} pairs and {} triples vs brute force, {agreement} pairs with indices <= 100 \
             cross-checked, failures {failures:?}",
            checked[0], checked[1]
        ),
    );
}

#[test]
fn criterion_6_coverage() {
    const LIMIT: u64 = 100_000;
    let oracle = sieve_primes(LIMIT).unwrap();
    let mut uncovered = Vec::new();
    let mut composites = 0usize;
    for c in (9..=LIMIT).step_by(2).filter(|&c| !oracle.is_prime(c)) {
        composites += 1;
        let p = (3..).step_by(2).find(|&d| c % d == 0).unwrap();
        let n = (p - 1) / 2;
        let hit = oracle.is_prime(p)
            && p * p <= c
            && (c - p * p) % (2 * p) == 0
            && ap_term(n, (c - p * p) / (2 * p) + 1).unwrap() == c;
        if !hit {
            uncovered.push(c);
        }
    }
    report(
        6,
        "every odd composite <= 1e5 is a term of a prime row",
        uncovered.is_empty(),
        &format!("{composites} odd composites, uncovered {uncovered:?}"),
    );
}

#[test]
fn criterion_7_pruned_enumeration_is_linear() {
    let out = Command::new(env!("CARGO_BIN_EXE_oddpi"))
        .args([
            "bench", "--max", "1000000", "--step", "10", "--format", "csv",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let csv = String::from_utf8(out.stdout).unwrap();
    println!("{csv}");
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("n,pi,micros,subset_terms,nonzero_terms"));
    let rows: Vec<(u64, u64)> = lines
        .map(|l| {
            let f: Vec<u64> = l.split(',').map(|x| x.parse().unwrap()).collect();
            (f[0], f[3])
        })
        .filter(|&(n, _)| n >= 1_000)
        .collect();
    assert_eq!(
        rows.iter().map(|r| r.0).collect::<Vec<_>>(),
        [1_000, 10_000, 100_000, 1_000_000]
    );
    // distinct subsets have distinct odd squarefree products <= N
    let ok = rows.iter().all(|&(n, terms)| 2 * terms <= n);
    let ratios: Vec<String> = rows
        .iter()
        .map(|&(n, terms)| format!("{:.4}", terms as f64 / n as f64))
        .collect();
    let slope = ((rows[3].1 as f64) / (rows[0].1 as f64)).log10() / 3.0;
    report(
        7,
        "lambda_c subset terms bounded by N/2",
        ok,
        &format!("terms/N = {ratios:?}, log-log slope {slope:.3}"),
    );
}
