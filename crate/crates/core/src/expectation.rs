//! Exact expected size of the online dominating set for paths and the
//! families whose expectation reduces to the path.
//!
//! For the path the expectation satisfies
//! `E(n) = 1 + (2/n) * (E(1) + ... + E(n-2))`, with `E(n) = 0` for `n <= 0`.
//! Multiplying through by `n!` keeps everything integral:
//! with `T(n) = n! E(n)` and `U(m) = m! (E(1) + ... + E(m))`,
//!
//! ```text
//! T(n) = n! + 2 (n - 1) U(n - 2)
//! U(m) = m U(m - 1) + T(m)
//! ```
//!
//! so a table costs `O(n)` big-integer operations and no gcds.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::domination::GraphSpec;
use crate::error::{invalid, Result};

pub type ExactRational = BigRational;

fn int(v: usize) -> BigInt {
    BigInt::from(v)
}

fn ratio(num: usize, den: usize) -> BigRational {
    BigRational::new(int(num), int(den))
}

/// `E(n)` for `n = 0..=n_max`, built from the integer-scaled recurrence.
#[derive(Debug, Clone)]
pub struct ExpectationTable {
    // scaled[n] = n! * E(n)
    scaled: Vec<BigUint>,
    factorials: Vec<BigUint>,
}

impl ExpectationTable {
    pub fn build(n_max: usize) -> Self {
        let mut scaled = Vec::with_capacity(n_max + 1);
        let mut factorials = Vec::with_capacity(n_max + 1);
        let mut steps = RecurrenceSteps::new();
        scaled.push(BigUint::zero());
        factorials.push(BigUint::one());
        for _ in 1..=n_max {
            steps.advance();
            scaled.push(steps.scaled_current().clone());
            factorials.push(steps.factorial.clone());
        }
        ExpectationTable { scaled, factorials }
    }

    pub fn max_n(&self) -> usize {
        self.scaled.len() - 1
    }

    /// `E(n)`; zero for `n == 0`.
    pub fn value(&self, n: usize) -> ExactRational {
        BigRational::new(self.scaled[n].clone().into(), self.factorials[n].clone().into())
    }

    /// `n! E(n)`, the total of `γ` over all `n!` revelation orders.
    pub fn total_over_permutations(&self, n: usize) -> &BigUint {
        &self.scaled[n]
    }

    pub fn values(&self) -> impl Iterator<Item = ExactRational> + '_ {
        (0..=self.max_n()).map(|n| self.value(n))
    }
}

/// Streaming state of the scaled recurrence, keeping only the last few terms.
struct RecurrenceSteps {
    n: usize,
    factorial: BigUint,
    // U(n), U(n-1), U(n-2)
    partial: [BigUint; 3],
    current: BigUint,
}

impl RecurrenceSteps {
    fn new() -> Self {
        RecurrenceSteps {
            n: 0,
            factorial: BigUint::one(),
            partial: [BigUint::zero(), BigUint::zero(), BigUint::zero()],
            current: BigUint::zero(),
        }
    }

    fn advance(&mut self) {
        self.n += 1;
        let n = self.n;
        self.factorial *= n;
        // partial[1] holds U(n - 2) once shifted below
        let u_nm2 = &self.partial[1];
        self.current = &self.factorial + u_nm2 * (2 * (n - 1));
        let u_n = &self.partial[0] * n + &self.current;
        self.partial.rotate_right(1);
        self.partial[0] = u_n;
    }

    fn scaled_current(&self) -> &BigUint {
        &self.current
    }

    fn value(&self) -> ExactRational {
        BigRational::new(self.current.clone().into(), self.factorial.clone().into())
    }
}

/// `E(n)` for the path on `n` vertices via the recurrence; `0` for `n == 0`.
pub fn gamma_o_path_recurrence(n: usize) -> ExactRational {
    let mut steps = RecurrenceSteps::new();
    for _ in 0..n {
        steps.advance();
    }
    if n == 0 {
        BigRational::zero()
    } else {
        steps.value()
    }
}

/// `g_n = Σ_{j=0}^{n} (n + 1 - j) (-2)^j / j!`, the `x^n` coefficient of
/// `e^{-2x} / (1 - x)^2`.
pub fn g_coefficient(n: usize) -> ExactRational {
    // n! g_n = Σ (n+1-j) (-2)^j n!/j!; accumulate n!/j! from j = n downward
    let mut tail = BigInt::one();
    let mut acc = BigInt::zero();
    for j in (0..=n).rev() {
        let pow = BigInt::from(-2).pow(j as u32);
        acc += &pow * &tail * int(n + 1 - j);
        tail *= int(j.max(1));
    }
    // tail is now n! (the j = 0 step multiplied by 1)
    BigRational::new(acc, tail)
}

/// `E(n) = -g_n / 2 + (n + 1) / 2`.
pub fn gamma_o_path_closed_form(n: usize) -> Result<ExactRational> {
    if n < 1 {
        return Err(invalid("closed form needs n >= 1"));
    }
    let half = ratio(1, 2);
    Ok(-g_coefficient(n) * &half + ratio(n + 1, 2))
}

/// The simplified expression `-(n+3)/2 Σ_{j=0}^{n} (-2)^j/j! + (n+1)/2`.
///
/// It differs from [`gamma_o_path_closed_form`] by `(-2)^n / n!`, so it is
/// only asymptotically correct. Exposed for side-by-side reporting.
pub fn gamma_o_path_closed_form_as_printed(n: usize) -> Result<ExactRational> {
    if n < 1 {
        return Err(invalid("closed form needs n >= 1"));
    }
    let mut term = BigRational::one();
    let mut sum = BigRational::zero();
    for j in 0..=n {
        if j > 0 {
            term = term * ratio(2, j) * BigRational::from_integer((-1).into());
        }
        sum += &term;
    }
    Ok(-(sum * ratio(n + 3, 2)) + ratio(n + 1, 2))
}

/// `lim E(n)/n = (e² - 1) / (2e²) = 1/2 - 1/(2e²)`.
pub fn gamma_o_asymptotic_constant() -> f64 {
    0.5 - 0.5 * (-2.0f64).exp()
}

/// Floating-point evaluation of the recurrence for `n = 0..=n_max`.
pub fn gamma_o_path_f64_table(n_max: usize) -> Vec<f64> {
    let mut values = vec![0.0; n_max + 1];
    let mut prefix = 0.0; // Σ_{i=1}^{n-2} E(i)
    for n in 1..=n_max {
        if n >= 3 {
            prefix += values[n - 2];
        }
        values[n] = 1.0 + 2.0 * prefix / n as f64;
    }
    values
}

/// Best-effort conversion for reporting.
pub fn rational_to_f64(r: &ExactRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// `E(C_n) = 1 + E(P_{n-3})`.
pub fn gamma_o_cycle(n: usize) -> Result<ExactRational> {
    if n < 3 {
        return Err(invalid("cycle needs n >= 3"));
    }
    Ok(BigRational::one() + gamma_o_path_recurrence(n - 3))
}

/// `(l² + 1) / (l + 1)` for the star with `l` leaves.
pub fn gamma_o_star(leaves: usize) -> Result<ExactRational> {
    if leaves < 1 {
        return Err(invalid("star needs at least one leaf"));
    }
    Ok(ratio(leaves * leaves + 1, leaves + 1))
}

/// Wheel with `s` spokes: the hub comes first with probability `1/(s+1)` and
/// dominates everything; otherwise the first rim vertex is chosen, the hub is
/// dominated, and the rest of the rim is a path on `s - 3` vertices.
///
/// `(1 + s (1 + E(P_{s-3}))) / (s + 1)`
pub fn gamma_o_wheel(spokes: usize) -> Result<ExactRational> {
    if spokes < 3 {
        return Err(invalid("wheel needs at least 3 spokes"));
    }
    let rim_first = BigRational::one() + gamma_o_path_recurrence(spokes - 3);
    Ok((BigRational::one() + rim_first * int(spokes)) / int(spokes + 1))
}

/// `1/(s+1) + s/(s+1) E(P_{s-3})`, which leaves out the first rim vertex.
/// Kept only for comparison with [`gamma_o_wheel`].
pub fn gamma_o_wheel_as_printed(spokes: usize) -> Result<ExactRational> {
    if spokes < 3 {
        return Err(invalid("wheel needs at least 3 spokes"));
    }
    Ok(ratio(1, spokes + 1) + ratio(spokes, spokes + 1) * gamma_o_path_recurrence(spokes - 3))
}

/// `Σ p_i² / Σ p_i`.
pub fn gamma_o_complete_multipartite(parts: &[usize]) -> Result<ExactRational> {
    if parts.is_empty() {
        return Err(invalid("need at least one part"));
    }
    if parts.contains(&0) {
        return Err(invalid("every part must have size >= 1"));
    }
    let squares: usize = parts.iter().map(|p| p * p).sum();
    Ok(ratio(squares, parts.iter().sum()))
}

/// Caro–Wei quantity `Σ_v 1 / (1 + deg v)`.
///
/// A vertex revealed before all of its neighbours is always chosen, and that
/// happens with probability `1 / (1 + deg v)`, so this bounds the expectation
/// from below.
pub fn caro_wei_bound(graph: &GraphSpec) -> ExactRational {
    (1..=graph.vertex_count() as u32)
        .map(|v| ratio(1, 1 + graph.degree(v)))
        .sum()
}
