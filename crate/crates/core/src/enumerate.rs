//! Exhaustive iteration over `S_n`.
//!
//! The rank range `0..n!` is cut into a fixed number of contiguous chunks that
//! depends only on `n`; each chunk starts from an unranked permutation and
//! walks forward with the in-place lexicographic successor. Chunk results are
//! reduced in rank order, so the outcome never depends on the worker count.

use rayon::prelude::*;

use crate::error::{Error, Result};

/// Default largest `n` enumerated without an explicit override.
pub const DEFAULT_BRUTE_FORCE_CAP: usize = 11;

/// Hard ceiling: ranks are `u64`.
pub const MAX_ENUMERABLE: usize = 20;

const TARGET_CHUNKS: u64 = 512;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BruteForceOptions {
    pub cap: usize,
    pub allow_large: bool,
    /// `None` uses rayon's global pool.
    pub workers: Option<usize>,
    pub witness_cap: usize,
}

impl Default for BruteForceOptions {
    fn default() -> Self {
        BruteForceOptions {
            cap: DEFAULT_BRUTE_FORCE_CAP,
            allow_large: false,
            workers: None,
            witness_cap: 100,
        }
    }
}

impl BruteForceOptions {
    pub fn with_cap(cap: usize) -> Self {
        BruteForceOptions {
            cap,
            ..Default::default()
        }
    }

    pub fn check(&self, n: usize) -> Result<()> {
        if n > MAX_ENUMERABLE || (n > self.cap && !self.allow_large) {
            return Err(Error::ResourceLimit {
                what: format!("brute force over {n}! permutations"),
                limit: if n > MAX_ENUMERABLE {
                    MAX_ENUMERABLE as u64
                } else {
                    self.cap as u64
                },
                override_flag: "--allow-large",
            });
        }
        Ok(())
    }
}

pub fn factorial_u64(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// Rearranges `a` into its lexicographic successor; returns false (leaving
/// `a` untouched) when `a` is the last permutation.
pub fn next_permutation(a: &mut [u32]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

/// The permutation of `1..=n` with lexicographic rank `rank` (0-based).
pub fn unrank(n: usize, mut rank: u64) -> Vec<u32> {
    let mut pool: Vec<u32> = (1..=n as u32).collect();
    let mut out = Vec::with_capacity(n);
    for k in (0..n).rev() {
        let f = factorial_u64(k);
        let idx = (rank / f) as usize;
        rank %= f;
        out.push(pool.remove(idx));
    }
    out
}

/// Folds `visit` over every permutation of `1..=n` (as 1-based label slices)
/// and combines chunk accumulators with `merge` in rank order.
pub fn fold_permutations<T, I, V, M>(n: usize, opts: &BruteForceOptions, init: I, visit: V, merge: M) -> Result<T>
where
    T: Send,
    I: Fn() -> T + Sync,
    V: Fn(&mut T, &[u32]) + Sync,
    M: Fn(T, T) -> T,
{
    opts.check(n)?;
    let total = factorial_u64(n);
    let chunk_len = total.div_ceil(TARGET_CHUNKS).max(1);
    let chunks = total.div_ceil(chunk_len);

    let run_chunk = |c: u64| {
        let start = c * chunk_len;
        let len = chunk_len.min(total - start);
        let mut perm = unrank(n, start);
        let mut acc = init();
        for k in 0..len {
            visit(&mut acc, &perm);
            if k + 1 < len {
                next_permutation(&mut perm);
            }
        }
        acc
    };

    let parts: Vec<T> = match opts.workers {
        Some(w) => rayon::ThreadPoolBuilder::new()
            .num_threads(w.max(1))
            .build()
            .map_err(|e| Error::InvalidInput(format!("cannot start worker pool: {e}")))?
            .install(|| (0..chunks).into_par_iter().map(run_chunk).collect()),
        None => (0..chunks).into_par_iter().map(run_chunk).collect(),
    };
    Ok(parts.into_iter().reduce(merge).unwrap_or_else(init))
}

/// Counts permutations satisfying `pred`.
pub fn count_permutations<P>(n: usize, opts: &BruteForceOptions, pred: P) -> Result<u64>
where
    P: Fn(&[u32]) -> bool + Sync,
{
    fold_permutations(n, opts, || 0u64, |acc, p| *acc += u64::from(pred(p)), |a, b| a + b)
}
