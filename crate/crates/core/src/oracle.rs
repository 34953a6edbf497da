//! Exhaustive reference computations used to cross-check the formulas.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::domination::{masked_run, run_online_domination, GraphSpec, Permutation};
use crate::enumerate::{factorial_u64, fold_permutations, BruteForceOptions};
use crate::error::Result;

/// `(Σ_π γ(π)) / n!` over all revelation orders of `graph`.
pub fn brute_force_expectation(graph: &GraphSpec, opts: &BruteForceOptions) -> Result<BigRational> {
    let n = graph.vertex_count();
    let total = match graph.neighbor_masks() {
        Some(masks) => fold_permutations(
            n,
            opts,
            || 0u64,
            |acc, p| *acc += u64::from(masked_run(masks, p).count_ones()),
            |a, b| a + b,
        )?,
        None => fold_permutations(
            n,
            opts,
            || 0u64,
            |acc, p| {
                let perm = Permutation::from_trusted(p);
                *acc += run_online_domination(graph, &perm).map(|o| o.size as u64).unwrap_or(0);
            },
            |a, b| a + b,
        )?,
    };
    Ok(BigRational::new(BigInt::from(total), BigInt::from(factorial_u64(n))))
}
