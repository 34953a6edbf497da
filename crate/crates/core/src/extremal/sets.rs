use crate::domination::{is_independent_dominating, GraphSpec};
use crate::error::{invalid, Result};

/// The independent dominating sets of `path(n)` of the largest possible size
/// `⌈n/2⌉`, each sorted ascending.
///
/// Odd `n` has only the odd vertices. Even `n` has the sets
/// `{1, 3, ..., 2j-1, 2j+2, 2j+4, ..., n}` for `j = 0..=n/2`: `j = 0` is the
/// even vertices, `j = n/2` the odd ones, and every other `j` leaves a single
/// two-vertex gap between `2j-1` and `2j+2`. That makes `n/2 + 1` sets.
pub fn enumerate_maximal_independent_dominating_sets(n: usize) -> Vec<Vec<u32>> {
    let n32 = n as u32;
    if n == 0 {
        return Vec::new();
    }
    if n % 2 == 1 {
        return vec![(1..=n32).step_by(2).collect()];
    }
    (0..=n32 / 2)
        .rev()
        .map(|j| (1..2 * j).step_by(2).chain((2 * j + 2..=n32).step_by(2)).collect())
        .collect()
}

/// Every independent dominating set of `path(n)` with `⌈n/2⌉` members, found
/// by scanning all `2^n` subsets. Sets are bitmasks (bit `v - 1`), ascending.
pub fn exhaustive_maximum_independent_dominating_sets(n: usize) -> Result<Vec<u64>> {
    if n == 0 || n > 24 {
        return Err(invalid("subset search supports 1 <= n <= 24"));
    }
    let graph = GraphSpec::path(n)?;
    let target = n.div_ceil(2) as u32;
    let mut found = Vec::new();
    let mut members = Vec::with_capacity(n);
    for mask in 0u64..1 << n {
        if mask.count_ones() != target {
            continue;
        }
        members.clear();
        members.extend((0..n as u32).filter(|b| mask >> b & 1 == 1).map(|b| b + 1));
        if is_independent_dominating(&graph, &members)? {
            found.push(mask);
        }
    }
    Ok(found)
}

pub fn mask_of(set: &[u32]) -> u64 {
    set.iter().fold(0, |m, &v| m | 1 << (v - 1))
}

pub fn members_of(mask: u64) -> Vec<u32> {
    (0..64).filter(|b| mask >> b & 1 == 1).map(|b| b + 1).collect()
}
