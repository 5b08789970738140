//! Executable cross-checks of the counting machinery and the validator
//! hierarchy: tree-enumeration counts, root-flexibility tables against
//! exact us-numbers, the minimal inflexible tree size pinned by exhaustive
//! oracle, and a randomized hierarchy fuzz.

use crate::coloring::Coloring;
use crate::exact::{
    exact_rank_number, min_inflexible_tree, root_flexibility, rooted_trees, ExactOutcome,
    RankKind,
};
use crate::generators::SplitMix64;
use crate::graph::Graph;
use crate::validators::{is_l_vr, is_proper, is_vr, DEFAULT_PATH_BUDGET};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    /// The measured value disagrees with the predicted closed form; the
    /// measured value stands and the disagreement is reported, not
    /// patched.
    Discrepancy,
    Fail,
}

#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: String,
    pub status: CheckStatus,
    pub detail: String,
}

#[derive(Debug, Clone)]
pub struct SelfcheckReport {
    pub checks: Vec<CheckResult>,
}

impl SelfcheckReport {
    /// True when nothing failed; documented discrepancies count as ok.
    pub fn all_ok(&self) -> bool {
        self.checks.iter().all(|c| c.status != CheckStatus::Fail)
    }
}

const ENUM_BUDGET: u64 = 100_000_000;

fn tree_enumeration_counts() -> CheckResult {
    let expected = [1usize, 1, 2, 4, 9, 20, 48, 115];
    let measured: Vec<usize> = (1..=8).map(|n| rooted_trees(n).len()).collect();
    let ok = measured == expected;
    CheckResult {
        name: "rooted tree enumeration counts n<=8".into(),
        status: if ok { CheckStatus::Pass } else { CheckStatus::Fail },
        detail: format!("measured {measured:?}"),
    }
}

/// For every rooted tree with at most `n_max` vertices: the flexibility
/// predicate is monotone in its floor, and any tree with a passing floor
/// admits a us-coloring with `k - 1` colors (so its exact us-number is
/// below `k`).
fn flexibility_tables(k: usize, n_max: usize) -> CheckResult {
    let mut trees_checked = 0usize;
    let mut flexible = 0usize;
    for n in 1..=n_max {
        for tree in rooted_trees(n) {
            trees_checked += 1;
            let flags: Vec<bool> = (1..k)
                .map(|floor| root_flexibility(&tree, 0, floor, k, ENUM_BUDGET).expect("small tree"))
                .collect();
            for w in flags.windows(2) {
                if w[0] && !w[1] {
                    return CheckResult {
                        name: format!("flexibility tables k={k} trees n<={n_max}"),
                        status: CheckStatus::Fail,
                        detail: format!("monotonicity broken on a {n}-vertex tree: {flags:?}"),
                    };
                }
            }
            let us = match exact_rank_number(&tree, RankKind::Us, k, ENUM_BUDGET).expect("small tree") {
                ExactOutcome::Ranked { k, .. } => k,
                ExactOutcome::Infeasible => k + 1,
            };
            if flags.iter().any(|&f| f) {
                flexible += 1;
                if us >= k {
                    return CheckResult {
                        name: format!("flexibility tables k={k} trees n<={n_max}"),
                        status: CheckStatus::Fail,
                        detail: format!("flexible {n}-vertex tree has us-number {us} >= {k}"),
                    };
                }
            }
        }
    }
    CheckResult {
        name: format!("flexibility tables k={k} trees n<={n_max}"),
        status: CheckStatus::Pass,
        detail: format!("{trees_checked} trees checked, {flexible} flexible, all consistent"),
    }
}

/// Pins the minimal inflexible tree size for floor 1 by exhaustive oracle
/// and compares it against the predicted closed form `k - 2`.
fn min_inflexible_pin(k: usize, n_max: usize) -> CheckResult {
    let name = format!("minimal inflexible tree size, floor 1, k={k}");
    match min_inflexible_tree(1, k, n_max, ENUM_BUDGET) {
        Ok(Some(hit)) => {
            let predicted = k - 2;
            if hit.n == predicted {
                CheckResult {
                    name,
                    status: CheckStatus::Pass,
                    detail: format!("measured {} matches predicted k-2 = {predicted}", hit.n),
                }
            } else {
                CheckResult {
                    name,
                    status: CheckStatus::Discrepancy,
                    detail: format!(
                        "measured {} but predicted k-2 = {predicted}; measured value stands",
                        hit.n
                    ),
                }
            }
        }
        Ok(None) => CheckResult {
            name,
            status: CheckStatus::Fail,
            detail: format!("no inflexible tree with at most {n_max} vertices"),
        },
        Err(e) => CheckResult { name, status: CheckStatus::Fail, detail: e.to_string() },
    }
}

/// Seeded random graph plus coloring, small enough for every validator.
pub fn random_instance(rng: &mut SplitMix64, max_n: usize) -> (Graph, Coloring) {
    let n = 1 + rng.next_index(max_n);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.next_index(3) == 0 {
                edges.push((u, v));
            }
        }
    }
    let g = Graph::build(n, edges).expect("generated edges are valid");
    let palette = 1 + rng.next_index(n);
    let colors = (0..n).map(|_| 1 + rng.next_index(palette)).collect();
    (g, Coloring::new(colors).expect("positive colors"))
}

/// Validator hierarchy on random pairs: a vertex ranking is an l-vertex
/// ranking for every l, validity is monotone downward in l, the l = 1
/// case coincides with properness, and every returned witness re-checks.
fn hierarchy_fuzz(cases: usize, seed: u64) -> CheckResult {
    let name = format!("hierarchy fuzz, {cases} random (graph, coloring) pairs");
    let mut rng = SplitMix64::new(seed);
    for case in 0..cases {
        let (g, c) = random_instance(&mut rng, 9);
        let proper = is_proper(&g, &c).expect("total");
        let vr = is_vr(&g, &c).expect("total");
        let mut valid_up_to = Vec::new();
        for l in 1..=4usize {
            let verdict = is_l_vr(&g, &c, l, DEFAULT_PATH_BUDGET).expect("small graph");
            if let Some(v) = &verdict {
                if !v.verify(&g, &c, Some(l)) {
                    return CheckResult {
                        name,
                        status: CheckStatus::Fail,
                        detail: format!("case {case}: witness fails its own invariants"),
                    };
                }
            }
            valid_up_to.push(verdict.is_none());
        }
        if let Some(v) = &vr {
            if !v.verify(&g, &c, None) {
                return CheckResult {
                    name,
                    status: CheckStatus::Fail,
                    detail: format!("case {case}: vr witness fails its own invariants"),
                };
            }
        }
        let fail = |what: &str| CheckResult {
            name: format!("hierarchy fuzz, {cases} random (graph, coloring) pairs"),
            status: CheckStatus::Fail,
            detail: format!("case {case}: {what}"),
        };
        if vr.is_none() && !valid_up_to.iter().all(|&ok| ok) {
            return fail("vertex ranking valid but some l-vertex ranking fails");
        }
        for w in valid_up_to.windows(2) {
            if w[1] && !w[0] {
                return fail("valid at l+1 but invalid at l");
            }
        }
        if valid_up_to[0] != proper.is_none() {
            return fail("l = 1 disagrees with properness");
        }
    }
    CheckResult {
        name,
        status: CheckStatus::Pass,
        detail: "no counterexamples".into(),
    }
}

/// Runs the full battery. `fuzz_cases` trades time for coverage; 10_000
/// is the standard setting.
pub fn run_selfcheck(fuzz_cases: usize, seed: u64) -> SelfcheckReport {
    let mut checks = vec![tree_enumeration_counts(), flexibility_tables(4, 6)];
    for k in [3, 4, 5] {
        checks.push(min_inflexible_pin(k, 6));
    }
    checks.push(hierarchy_fuzz(fuzz_cases, seed));
    SelfcheckReport { checks }
}
