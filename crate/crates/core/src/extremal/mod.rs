//! Worst-case (`F_n`) and best-case (`B_n`) revelation orders of the path.
//!
//! Every count is available from at least two independent routes: exhaustive
//! enumeration of `S_n`, the worst-case recurrence, the exponential generating
//! function, and the closed best-case formulas.

mod best_case;
mod bruteforce;
mod patterns;
mod recurrence;
mod sets;

pub use best_case::{b_formula, b_formula_applicable};
pub use bruteforce::{
    count_D_bruteforce, count_gamma_equal, gamma_distribution_bruteforce, worst_case_sets_bruteforce,
};
pub use patterns::{
    count_no_even_local_maxima, count_weakly_alternating, has_no_even_local_maxima, is_weakly_alternating,
};
pub use recurrence::{f_recurrence, FTable};
pub use sets::{
    enumerate_maximal_independent_dominating_sets, exhaustive_maximum_independent_dominating_sets, mask_of, members_of,
};

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::domination::Permutation;
use crate::enumerate::BruteForceOptions;
use crate::error::{invalid, Error, Result};
use crate::series;

pub type BigCount = BigUint;

/// `⌈n/2⌉`, the largest size an independent set of `path(n)` can have.
pub fn max_dominating_size(n: usize) -> usize {
    n.div_ceil(2)
}

/// `⌈n/3⌉`; each chosen vertex dominates at most three vertices.
pub fn min_dominating_size(n: usize) -> usize {
    n.div_ceil(3)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundKind {
    Worst,
    Best,
}

impl BoundKind {
    pub fn extremal_size(self, n: usize) -> usize {
        match self {
            BoundKind::Worst => max_dominating_size(n),
            BoundKind::Best => min_dominating_size(n),
        }
    }
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoundKind::Worst => "worst",
            BoundKind::Best => "best",
        })
    }
}

impl FromStr for BoundKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "worst" => Ok(BoundKind::Worst),
            "best" => Ok(BoundKind::Best),
            _ => Err(invalid(format!("unknown bound kind {s:?}"))),
        }
    }
}

/// How a count was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    BruteForce,
    Recurrence,
    Egf,
    Formula,
}

impl Method {
    /// Methods that can count the given bound.
    pub fn applicable(kind: BoundKind) -> &'static [Method] {
        match kind {
            BoundKind::Worst => &[Method::BruteForce, Method::Recurrence, Method::Egf],
            BoundKind::Best => &[Method::BruteForce, Method::Formula],
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::BruteForce => "brute_force",
            Method::Recurrence => "recurrence",
            Method::Egf => "egf",
            Method::Formula => "formula",
        })
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "brute_force" | "bruteforce" | "brute-force" => Ok(Method::BruteForce),
            "recurrence" => Ok(Method::Recurrence),
            "egf" => Ok(Method::Egf),
            "formula" => Ok(Method::Formula),
            _ => Err(invalid(format!("unknown method {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtremalReport {
    pub n: usize,
    pub bound_kind: BoundKind,
    pub extremal_size: usize,
    #[serde(with = "crate::serde_util::decimal")]
    pub count: BigCount,
    pub method: Method,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witnesses: Option<Vec<Permutation>>,
}

/// Counts `F_n` or `B_n` by running every order in `S_n`.
pub fn count_extremal_bruteforce(n: usize, kind: BoundKind, opts: &BruteForceOptions) -> Result<ExtremalReport> {
    let extremal_size = kind.extremal_size(n);
    let (count, witnesses) = count_gamma_equal(n, extremal_size, opts)?;
    Ok(ExtremalReport {
        n,
        bound_kind: kind,
        extremal_size,
        count: count.into(),
        method: Method::BruteForce,
        witnesses: Some(witnesses),
    })
}

/// Counts `F_n` or `B_n` with the requested method.
pub fn count_extremal(n: usize, kind: BoundKind, method: Method, opts: &BruteForceOptions) -> Result<ExtremalReport> {
    if n < 1 {
        return Err(invalid("n must be at least 1"));
    }
    let count = match (kind, method) {
        (_, Method::BruteForce) => return count_extremal_bruteforce(n, kind, opts),
        (BoundKind::Worst, Method::Recurrence) => f_recurrence(n),
        (BoundKind::Worst, Method::Egf) => series::f_from_egf(n)?.swap_remove(n),
        (BoundKind::Best, Method::Formula) => b_formula(n)?,
        _ => return Err(invalid(format!("method {method} does not count {kind}-case orders"))),
    };
    Ok(ExtremalReport {
        n,
        bound_kind: kind,
        extremal_size: kind.extremal_size(n),
        count,
        method,
        witnesses: None,
    })
}
