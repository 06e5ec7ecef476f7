//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Runs without the libtest harness so the summary lines are always shown.

use std::process::{Command, ExitCode};
use std::sync::Arc;
use std::time::{Duration, Instant};

use coordring::verify::{self, derive_seed, VerificationReport};
use coordring::{Field, PointSet};

const SEED: u64 = 0;

type Check = fn() -> Outcome;

struct Outcome {
    ok: bool,
    detail: String,
}

fn field(q: u32) -> Field {
    Field::from_order(q).unwrap()
}

fn full(q: u32, n: usize) -> Arc<PointSet> {
    PointSet::full(&field(q), n).unwrap()
}

fn summarize(reports: &[VerificationReport]) -> Outcome {
    let instances: u64 = reports.iter().map(|r| r.instance_count).sum();
    let oracle: u64 = reports.iter().map(|r| r.oracle_count).sum();
    let failures: u64 = reports.iter().map(|r| r.failure_count).sum();
    let vacuous = reports.iter().any(|r| r.instance_count == 0);
    let mut detail = format!("{instances} instances, {oracle} oracle-checked, {failures} failures");
    if let Some(f) = reports.iter().flat_map(|r| &r.failures).next() {
        detail.push_str(&format!("; first: {f}"));
    }
    Outcome {
        ok: failures == 0 && !vacuous && !reports.is_empty(),
        detail,
    }
}

/// The grid of criterion 1: FULL plus five random proper subsets per (q, n).
fn nullstellensatz_grid() -> Vec<Arc<PointSet>> {
    let mut sets = Vec::new();
    for (cell, (q, n)) in [2u32, 3, 4]
        .iter()
        .flat_map(|&q| [1usize, 2].map(|n| (q, n)))
        .enumerate()
    {
        sets.extend(
            verify::cell_point_sets(&field(q), n, 5, derive_seed(SEED, &[cell as u64])).unwrap(),
        );
    }
    sets
}

fn nullstellensatz_suite(membership: &verify::MembershipFn) -> (Vec<VerificationReport>, Duration) {
    let start = Instant::now();
    let reports = nullstellensatz_grid()
        .iter()
        .enumerate()
        .map(|(i, s)| {
            verify::verify_nullstellensatz_with(
                s,
                100,
                derive_seed(SEED, &[100, i as u64]),
                membership,
            )
        })
        .collect();
    (reports, start.elapsed())
}

fn criterion_1() -> Outcome {
    let (reports, elapsed) = nullstellensatz_suite(&verify::standard_membership);
    let mut out = summarize(&reports);
    // every cell with q^|S| <= 2^16 must have been cross-checked by brute force
    let missing_oracle = reports.iter().zip(nullstellensatz_grid()).any(|(r, s)| {
        (s.field().order() as u64)
            .checked_pow(s.len() as u32)
            .is_some_and(|c| c <= 1 << 16)
            && r.oracle_count == 0
    });
    out.ok &= !missing_oracle && elapsed < Duration::from_secs(60);
    out.detail = format!(
        "{} reports, {}; {:.1}s",
        reports.len(),
        out.detail,
        elapsed.as_secs_f64()
    );
    out
}

fn criterion_2() -> Outcome {
    let a = verify::verify_weak(&full(2, 1), 0, SEED);
    let b = verify::verify_weak(&full(3, 1), 0, SEED);
    let mut out = summarize(&[a.clone(), b.clone()]);
    out.ok &= a.instance_count == 16 && b.instance_count == 729;
    out
}

fn criterion_3() -> Outcome {
    let mut reports = Vec::new();
    for q in [2, 3, 4] {
        reports.push(
            verify::verify_radical(&full(q, 1), 500, derive_seed(SEED, &[3, q as u64])).unwrap(),
        );
    }
    for q in [2, 3, 4, 5] {
        reports.push(verify::verify_bezout(&field(q), 10).unwrap());
    }
    summarize(&reports)
}

fn five_point_subset_of_f2_cubed() -> Arc<PointSet> {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(derive_seed(SEED, &[4]));
    let f = field(2);
    let all = PointSet::full(&f, 3).unwrap();
    let picked = rand::seq::index::sample(&mut rng, all.len(), 5);
    PointSet::new(
        &f,
        3,
        picked.iter().map(|i| all.points()[i].clone()).collect(),
    )
    .unwrap()
}

fn criterion_4() -> Outcome {
    let sets = [
        full(2, 1),
        full(2, 2),
        full(3, 1),
        five_point_subset_of_f2_cubed(),
    ];
    let reports: Vec<_> = sets
        .iter()
        .map(|s| verify::verify_correspondence(s).unwrap())
        .collect();
    summarize(&reports)
}

fn criterion_5() -> Outcome {
    let reports: Vec<_> = [full(2, 1), full(2, 2), full(3, 1)]
        .iter()
        .map(|s| verify::verify_quotient(s).unwrap())
        .collect();
    let mut out = summarize(&reports);
    out.ok &= reports.iter().all(|r| r.oracle_count == r.instance_count);
    out
}

fn criterion_6() -> Outcome {
    let mut reports = Vec::new();
    for (s, samples) in [
        (full(2, 1), 0),
        (full(3, 1), 0),
        (full(4, 1), 200),
        (full(2, 2), 200),
    ] {
        reports
            .extend(verify::verify_sum_identities(&s, samples, derive_seed(SEED, &[6])).unwrap());
    }
    let mut out = summarize(&reports);
    out.ok &= reports[0].instance_count == 16 && reports[2].instance_count == 729;
    out.ok &= reports[4..].iter().all(|r| r.instance_count >= 200);
    out
}

fn criterion_7() -> Outcome {
    let mut reports = Vec::new();
    for q in [2, 3] {
        for n in [1, 2] {
            reports.push(
                verify::verify_zero_function(
                    &field(q),
                    n,
                    500,
                    derive_seed(SEED, &[7, q as u64, n as u64]),
                )
                .unwrap(),
            );
        }
    }
    summarize(&reports)
}

fn criterion_8() -> Outcome {
    let a = verify::verify_rabinowitsch(&full(2, 1), 0, SEED).unwrap();
    let b = verify::verify_rabinowitsch(&full(3, 1), 200, derive_seed(SEED, &[8])).unwrap();
    let mut out = summarize(&[a.clone(), b.clone()]);
    // all (J, φ) over F_2^1: 4 principal + 16 two-generator ideals, 4 φ each
    out.ok &= a.instance_count == 80 && b.instance_count == 200;
    out
}

fn criterion_9() -> Outcome {
    let (reports, _) = nullstellensatz_suite(&verify::membership_ignoring_first_variety_point);
    let failures: u64 = reports.iter().map(|r| r.failure_count).sum();
    let example = reports
        .iter()
        .flat_map(|r| &r.failures)
        .next()
        .cloned()
        .unwrap_or_default();
    Outcome {
        ok: failures >= 1,
        detail: format!("broken membership detected: {failures} failures; first: {example}"),
    }
}

fn criterion_10() -> Outcome {
    let args = [
        "verify", "all", "--q", "2,3,4", "--n", "1,2", "--trials", "100", "--seed", "0", "--json",
    ];
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_coordring"))
            .args(args)
            .output()
            .unwrap()
    };
    let (a, b) = (run(), run());
    let ok = a.status.code() == Some(0)
        && b.status.code() == Some(0)
        && a.stdout == b.stdout
        && !a.stdout.is_empty();
    let parsed: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap_or_default();
    Outcome {
        ok: ok && parsed["result"]["passed"] == serde_json::Value::Bool(true),
        detail: format!(
            "exit {:?}/{:?}, {} bytes, identical: {}",
            a.status.code(),
            b.status.code(),
            a.stdout.len(),
            a.stdout == b.stdout
        ),
    }
}

fn main() -> ExitCode {
    let criteria: [(&str, Check); 10] = [
        (
            "Nullstellensatz over the q x n grid, with brute-force membership",
            criterion_1,
        ),
        (
            "weak Nullstellensatz unit certificates, exhaustive pairs",
            criterion_2,
        ),
        ("radicality and Bezout reconstruction", criterion_3),
        ("subset/ideal correspondence", criterion_4),
        ("ideal quotients of vanishing ideals", criterion_5),
        ("sum identities for units and zero sets", criterion_6),
        ("zero function iff variety is everything", criterion_7),
        ("Rabinowitsch lift criterion", criterion_8),
        ("fault injection is detected", criterion_9),
        ("CLI verify all output is byte-identical", criterion_10),
    ];
    let mut all_ok = true;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let out = check();
        all_ok &= out.ok;
        println!(
            "criterion {:>2}: {} - {name} ({}) [{:.2}s]",
            i + 1,
            if out.ok { "PASS" } else { "FAIL" },
            out.detail,
            start.elapsed().as_secs_f64()
        );
    }
    println!(
        "acceptance: {}",
        if all_ok {
            "all criteria passed"
        } else {
            "FAILED"
        }
    );
    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
