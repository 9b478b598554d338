//! Invariants cheap enough to verify on every install.

use num_bigint::BigUint;

use crate::graph::{pair_count, Graph};
use crate::oracle::brute_force_universally_solvable;
use crate::partition::{
    class_weight, factorial, pair_orbit_count, partition_stream, representative_permutation,
};
use crate::sampler::{compute_gn, pair_orbits, GraphCountTable};

#[derive(Clone, Debug)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn outcome(name: &'static str, failure: Option<String>, ok_detail: String) -> CheckOutcome {
    match failure {
        Some(detail) => CheckOutcome {
            name,
            passed: false,
            detail,
        },
        None => CheckOutcome {
            name,
            passed: true,
            detail: ok_detail,
        },
    }
}

/// Pair-orbit walk agrees with the closed-form orbit count.
pub fn check_orbit_counts(max_n: usize) -> CheckOutcome {
    let mut checked = 0;
    let failure = (1..=max_n).find_map(|n| {
        partition_stream(n).find_map(|p| {
            checked += 1;
            let walked = pair_orbits(&representative_permutation(&p)).len() as u64;
            let closed = pair_orbit_count(&p);
            (walked != closed)
                .then(|| format!("n = {n}, class {p}: walked {walked}, formula {closed}"))
        })
    });
    outcome(
        "orbit-count",
        failure,
        format!("{checked} classes, n <= {max_n}"),
    )
}

/// Class weights sum to `n! * g_n` for the embedded `g_n`.
pub fn check_weight_sums(max_n: usize) -> CheckOutcome {
    let table = GraphCountTable::embedded();
    let failure = (1..=max_n).find_map(|n| {
        let total: BigUint = partition_stream(n).map(|p| class_weight(&p).w).sum();
        let expected = factorial(n) * table.get(n)?;
        (total != expected).then(|| format!("n = {n}: sum {total}, expected {expected}"))
    });
    outcome("weight-sum", failure, format!("n <= {max_n}"))
}

/// Literal definition of universal solvability against matrix rank.
pub fn check_brute_force(max_n: usize) -> CheckOutcome {
    let mut checked = 0;
    let failure = (1..=max_n).find_map(|n| {
        (0u64..1 << pair_count(n)).find_map(|mask| {
            let mut g = Graph::empty(n);
            for p in 0..pair_count(n) {
                g.set_pair(p, mask >> p & 1 == 1);
            }
            checked += 1;
            let literal = brute_force_universally_solvable(&g).ok()?;
            (literal != g.is_universally_solvable()).then(|| format!("disagreement on {g:?}"))
        })
    });
    outcome(
        "brute-force",
        failure,
        format!("{checked} labeled graphs, n <= {max_n}"),
    )
}

/// `compute_gn` against the embedded table.
pub fn check_gn_table(max_n: usize) -> CheckOutcome {
    let table = GraphCountTable::embedded();
    let failure = (1..=max_n).find_map(|n| match compute_gn(n) {
        Ok(v) if Some(&v) == table.get(n) => None,
        Ok(v) => Some(format!("n = {n}: computed {v}, table {:?}", table.get(n))),
        Err(e) => Some(format!("n = {n}: {e}")),
    });
    outcome("gn-table", failure, format!("n <= {max_n}"))
}

pub fn run_selfcheck() -> Vec<CheckOutcome> {
    vec![
        check_orbit_counts(12),
        check_weight_sums(11),
        check_brute_force(4),
        check_gn_table(30),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_pass() {
        for c in run_selfcheck() {
            assert!(c.passed, "{}: {}", c.name, c.detail);
        }
    }
}
