//! End-to-end acceptance checks. Each criterion prints one pass/fail line;
//! the test fails if any criterion does.

use std::time::Instant;

use wtg_core::fixtures::connected_multigraph_corpus;
use wtg_core::graph::{EdgeLabel, Multigraph};
use wtg_core::poly::tutte_recursive;
use wtg_core::verify::{
    all_passed, check_categorification_structure, check_euler_identities, check_example_3_1,
    check_example_4_1, check_example_6_1, check_example_6_2, check_example_7_1,
    check_invariant_identities, check_log_concavity, check_oracle_equivalence,
    check_structural_properties, check_theorem_4_3, check_theorem_5_2, CheckResult,
    DEFAULT_SEED,
};
use wtg_core::weights::hom_basis;
use wtg_core::RankOracle;

fn report(criterion: usize, budget_secs: u64, results: Vec<CheckResult>) -> bool {
    let passed = all_passed(&results);
    let detail = results
        .iter()
        .map(|r| format!("{}: {}", r.name, r.detail))
        .collect::<Vec<_>>()
        .join("; ");
    println!(
        "criterion {criterion:2}: {} ({detail}) [budget {budget_secs}s]",
        if passed { "PASS" } else { "FAIL" }
    );
    passed
}

fn timed(budget_secs: u64, check: impl FnOnce() -> Vec<CheckResult>) -> Vec<CheckResult> {
    let start = Instant::now();
    let mut results = check();
    let elapsed = start.elapsed();
    if elapsed.as_secs() >= budget_secs {
        results.push(CheckResult {
            name: "time-budget",
            passed: false,
            detail: format!("took {elapsed:?}, budget {budget_secs}s"),
        });
    }
    results
}

/// Deletion–contraction with a different pivot order: permute the edge list
/// (and the label with it) and compare the recursive polynomial.
fn pivot_independence() -> CheckResult {
    for g in connected_multigraph_corpus(4) {
        let n = g.original_edge_count();
        if n < 2 {
            continue;
        }
        let edges: Vec<(usize, usize)> = g.edges().map(|(_, e)| e).collect();
        let reversed: Vec<(usize, usize)> = edges.iter().rev().copied().collect();
        let g_rev = Multigraph::new(g.vertex_count(), &reversed);
        // edge i of g is edge n−1−i of g_rev; keep the same Ω-label per edge
        let s = EdgeLabel::identity(n);
        let s_rev = EdgeLabel::new((0..n).map(|i| s.of(n - 1 - i)).collect()).unwrap();
        let m = RankOracle::graphic(g.clone());
        let m_rev = RankOracle::graphic(g_rev);
        for d in 0..=n.min(2) {
            for f in hom_basis(n, d) {
                let a = tutte_recursive(&m, &s, &f).unwrap();
                let b = tutte_recursive(&m_rev, &s_rev, &f).unwrap();
                if a != b {
                    return CheckResult {
                        name: "pivot-independence",
                        passed: false,
                        detail: format!("differs at {n} edges, d={d}"),
                    };
                }
            }
        }
    }
    CheckResult {
        name: "pivot-independence",
        passed: true,
        detail: "recursion agrees under reversed edge order".into(),
    }
}

#[test]
fn acceptance() {
    let mut ok = true;
    ok &= report(1, 1, timed(1, || vec![check_example_3_1()]));
    ok &= report(2, 1, timed(1, || vec![check_example_4_1()]));
    ok &= report(3, 5, timed(5, || vec![check_example_6_2()]));
    ok &= report(4, 30, timed(30, || vec![check_example_6_1()]));
    ok &= report(5, 120, timed(120, || {
        vec![check_oracle_equivalence(DEFAULT_SEED)]
    }));
    ok &= report(6, 120, timed(120, || {
        vec![check_theorem_4_3(), check_theorem_5_2(DEFAULT_SEED)]
    }));
    ok &= report(7, 300, timed(300, || vec![check_invariant_identities()]));
    ok &= report(8, 300, timed(300, || {
        vec![
            check_categorification_structure(),
            check_example_7_1(),
            check_euler_identities(),
        ]
    }));
    ok &= report(9, 60, timed(60, || {
        vec![check_structural_properties(), pivot_independence()]
    }));
    ok &= report(10, 5, timed(5, || vec![check_log_concavity()]));
    assert!(ok, "one or more acceptance criteria failed");
}
