//! Acceptance criteria, one pass/fail line each, with wall-clock budgets.
//!
//! A criterion passes only if its checks report no failures and it finishes
//! within its budget. The process exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rank2_tool::golden;
use rank2_tool::report::{Failure, VerificationReport};
use rank2_tool::verify::*;

struct Criterion {
    id: u8,
    title: &'static str,
    budget: Option<Duration>,
    run: fn() -> VerificationReport,
}

fn secs(s: u64) -> Option<Duration> {
    Some(Duration::from_secs(s))
}

fn golden_files() -> VerificationReport {
    let mut r = VerificationReport::empty("golden");
    r.cases = golden::CASES.len();
    r.failures = golden::mismatches().into_iter().map(|name| Failure::new(name, "fixture", "committed bytes", "different output")).collect();
    r
}

fn criteria() -> Vec<Criterion> {
    vec![
        Criterion {
            id: 1,
            title: "Chebyshev long recursion and parity/odd identities, 9 pairs, i, l in [-12, 12]",
            budget: secs(5),
            run: || chebyshev_identities(&CHEBYSHEV_PAIRS, 12),
        },
        Criterion {
            id: 2,
            title: "monotone ratio limits within 1e-9 at i = 40 for (2,3), (1,5), (3,3)",
            budget: secs(1),
            run: || chebyshev_limits(&LIMIT_PAIRS, 40),
        },
        Criterion {
            id: 3,
            title: "two-step closed forms on 500 random points, eigenvectors for 4 <= bc <= 20, imaginary-cone closed forms for |k| <= 17",
            budget: secs(5),
            run: || {
                VerificationReport::merged(
                    "tropical",
                    [tropical_two_step(&TROPICAL_PAIRS, 500, 2024), tropical_eigenvectors(20), tropical_imaginary(&TROPICAL_PAIRS, 17)],
                )
            },
        },
        Criterion {
            id: 4,
            title: "closed-form dominance polygon equals the K = 40 oracle at lattice level, 5 pairs, |l0|, |l1| <= 6",
            budget: secs(60),
            run: || dominance_oracle(&DOMINANCE_PAIRS, 6, 40),
        },
        Criterion {
            id: 5,
            title: "class vertices feasible and tight, neighbouring classes agree on the separating rays",
            budget: None,
            run: || dominance_classes(&DOMINANCE_PAIRS, 8, 12),
        },
        Criterion {
            id: 6,
            title: "cluster monomial supports equal the lattice points of the support region, 4 pairs, |k| <= 5, exponents <= 3",
            budget: secs(120),
            run: || support_cluster_monomials(&SUPPORT_PAIRS, 5, 3, 1_000_000),
        },
        Criterion {
            id: 7,
            title: "P, P' and corner closures inside S; S cap R in P and S cap R' in P' for imaginary g-vectors, |l0| <= 6",
            budget: None,
            run: || containments(&CONTAINMENT_PAIRS, 6),
        },
        Criterion {
            id: 8,
            title: "minor expansions for n <= 8, pointed coefficients, leading gamma = 1 for n <= 10, monomial ratios for n <= 6",
            budget: secs(30),
            run: || VerificationReport::merged("affine", [affine_minors(8, 5, 31), affine_gamma(10), affine_monomial_ratio(6, 37)]),
        },
        Criterion { id: 9, title: "golden fixtures match byte for byte", budget: None, run: golden_files },
    ]
}

fn main() -> ExitCode {
    // libtest-style flags such as --nocapture are accepted and ignored
    let mut all_ok = true;
    let mut summary = Vec::new();
    for c in criteria() {
        let start = Instant::now();
        let report = (c.run)();
        let elapsed = start.elapsed();
        let in_time = c.budget.is_none_or(|b| elapsed <= b);
        let ok = report.passed() && in_time;
        all_ok &= ok;
        let budget = c.budget.map_or_else(|| "no budget".to_string(), |b| format!("budget {} s", b.as_secs()));
        println!(
            "criterion {}: {} | {} | {} cases, {} failures, {:.2} s, {}",
            c.id,
            if ok { "PASS" } else { "FAIL" },
            c.title,
            report.cases,
            report.failures.len(),
            elapsed.as_secs_f64(),
            budget
        );
        if !in_time {
            println!("    over budget");
        }
        for f in report.failures.iter().take(5) {
            println!("    {} [{}]: expected {}, got {}", f.case, f.inputs, f.expected, f.actual);
        }
        if report.failures.len() > 5 {
            println!("    ... {} more", report.failures.len() - 5);
        }
        summary.push((c.id, ok));
    }
    let passed = summary.iter().filter(|(_, ok)| *ok).count();
    println!("acceptance: {passed}/{} criteria passed", summary.len());
    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
