use std::collections::BTreeSet;

use crate::domination::{path_run_mask, Permutation};
use crate::enumerate::{count_permutations, fold_permutations, BruteForceOptions};
use crate::error::{invalid, Result};

use super::BoundKind;

fn check_width(n: usize) -> Result<()> {
    if n == 0 || n > 64 {
        return Err(invalid("path brute force needs 1 <= n <= 64"));
    }
    Ok(())
}

/// Matching permutations counted over all of `S_n`, with the first
/// `witness_cap` of them in lexicographic order.
pub(crate) fn count_with_witnesses<P>(n: usize, opts: &BruteForceOptions, pred: P) -> Result<(u64, Vec<Permutation>)>
where
    P: Fn(&[u32]) -> bool + Sync,
{
    let cap = opts.witness_cap;
    fold_permutations(
        n,
        opts,
        || (0u64, Vec::new()),
        |(count, wit), p| {
            if pred(p) {
                *count += 1;
                if wit.len() < cap {
                    wit.push(Permutation::from_trusted(p));
                }
            }
        },
        |(c1, mut w1), (c2, w2)| {
            let room = cap.saturating_sub(w1.len());
            w1.extend(w2.into_iter().take(room));
            (c1 + c2, w1)
        },
    )
}

/// Permutations whose run on `path(n)` has size exactly `target`.
pub fn count_gamma_equal(n: usize, target: usize, opts: &BruteForceOptions) -> Result<(u64, Vec<Permutation>)> {
    check_width(n)?;
    count_with_witnesses(n, opts, |p| path_run_mask(p).count_ones() as usize == target)
}

/// Number of revelation orders of `path(n)` producing each size:
/// `result[g]` counts orders with `γ = g`.
pub fn gamma_distribution_bruteforce(n: usize, opts: &BruteForceOptions) -> Result<Vec<u64>> {
    check_width(n)?;
    fold_permutations(
        n,
        opts,
        || vec![0u64; n + 1],
        |hist, p| hist[path_run_mask(p).count_ones() as usize] += 1,
        |mut a, b| {
            a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
            a
        },
    )
}

/// `D(n)`: orders whose dominating set is exactly the odd vertices.
#[allow(non_snake_case)]
pub fn count_D_bruteforce(n: usize, opts: &BruteForceOptions) -> Result<u64> {
    check_width(n)?;
    let odd = (0..n).step_by(2).fold(0u64, |m, b| m | 1 << b);
    count_permutations(n, opts, |p| path_run_mask(p) == odd)
}

/// Distinct dominating sets (as bitmasks) produced by worst-case orders.
pub fn worst_case_sets_bruteforce(n: usize, opts: &BruteForceOptions) -> Result<BTreeSet<u64>> {
    check_width(n)?;
    let target = BoundKind::Worst.extremal_size(n) as u32;
    fold_permutations(
        n,
        opts,
        BTreeSet::new,
        |sets, p| {
            let m = path_run_mask(p);
            if m.count_ones() == target {
                sets.insert(m);
            }
        },
        |mut a, b| {
            a.extend(b);
            a
        },
    )
}
