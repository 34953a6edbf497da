use crate::domination::Permutation;
use crate::enumerate::{count_permutations, BruteForceOptions};
use crate::error::Result;

/// Weak peak at every even (1-based) position: at least one existing
/// neighbour is smaller.
pub fn is_weakly_alternating(perm: &Permutation) -> bool {
    weakly_alternating(perm.as_slice())
}

/// No even (1-based) position holds a strict local maximum, i.e. a value
/// larger than every existing neighbour.
pub fn has_no_even_local_maxima(perm: &Permutation) -> bool {
    no_even_local_maxima(perm.as_slice())
}

pub(crate) fn weakly_alternating(p: &[u32]) -> bool {
    let n = p.len();
    (2..=n).step_by(2).all(|i| {
        let v = p[i - 1];
        p[i - 2] < v || (i < n && p[i] < v)
    })
}

pub(crate) fn no_even_local_maxima(p: &[u32]) -> bool {
    let n = p.len();
    (2..=n).step_by(2).all(|i| {
        let v = p[i - 1];
        let above_left = p[i - 2] < v;
        let above_right = i == n || p[i] < v;
        !(above_left && above_right)
    })
}

/// `|W_n|` by exhaustive enumeration.
pub fn count_weakly_alternating(n: usize, opts: &BruteForceOptions) -> Result<u64> {
    count_permutations(n, opts, weakly_alternating)
}

pub fn count_no_even_local_maxima(n: usize, opts: &BruteForceOptions) -> Result<u64> {
    count_permutations(n, opts, no_even_local_maxima)
}
