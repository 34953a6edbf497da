use num_bigint::BigUint;
use num_integer::binomial;
use num_traits::{One, Zero};

/// `f(n) = |F_n|`, the number of worst-case revelation orders of the path.
///
/// With `f(0) = f(1) = 1`, for `n >= 2`
///
/// ```text
/// f(n) = 2(n-1) f(n-2) + (n-1)(n-2) Σ_i C(n-3, i-2) f(i-2) f(n-i-1)
/// ```
///
/// where `i` ranges over odd `3..=n-2` for odd `n` (the first vertex chosen
/// must be odd) and over all of `2..=n-1` for even `n`.
#[derive(Debug, Clone)]
pub struct FTable {
    values: Vec<BigUint>,
}

impl FTable {
    pub fn build(n_max: usize) -> Self {
        let mut values: Vec<BigUint> = Vec::with_capacity(n_max + 1);
        for n in 0..=n_max {
            let next = if n <= 1 { BigUint::one() } else { step(&values, n) };
            values.push(next);
        }
        FTable { values }
    }

    pub fn get(&self, n: usize) -> &BigUint {
        &self.values[n]
    }

    pub fn values(&self) -> &[BigUint] {
        &self.values
    }
}

fn step(f: &[BigUint], n: usize) -> BigUint {
    let endpoint = &f[n - 2] * (2 * (n - 1));
    let interior: Box<dyn Iterator<Item = usize>> = if n % 2 == 1 {
        Box::new((3..=n.saturating_sub(2)).step_by(2))
    } else {
        Box::new(2..n)
    };
    let mut sum = BigUint::zero();
    for i in interior {
        sum += binomial(BigUint::from(n - 3), BigUint::from(i - 2)) * &f[i - 2] * &f[n - i - 1];
    }
    endpoint + sum * ((n - 1) * (n - 2))
}

pub fn f_recurrence(n: usize) -> BigUint {
    FTable::build(n).get(n).clone()
}
