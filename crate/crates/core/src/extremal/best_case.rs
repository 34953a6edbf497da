use num_bigint::{BigInt, BigUint};
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

fn big(v: usize) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn choose(n: usize, k: usize) -> BigRational {
    if k > n {
        return BigRational::zero();
    }
    BigRational::from_integer(binomial(BigInt::from(n), BigInt::from(k)))
}

/// `m! / 3^{m/3}` for `m ≡ 0 (mod 3)`: the number of optimal orders of a
/// path whose length is a multiple of three.
fn tiled(m: usize) -> BigRational {
    debug_assert_eq!(m % 3, 0);
    let fact: BigInt = (1..=m).map(BigInt::from).product();
    BigRational::new(fact, BigInt::from(3).pow((m / 3) as u32))
}

/// `|B_n|` from the closed formulas, one per residue of `n` mod 3.
///
/// Valid for `n ≡ 0` with `n >= 3`, `n ≡ 2` with `n >= 5` and `n ≡ 1` with
/// `n >= 10`; other sizes are refused.
pub fn b_formula(n: usize) -> Result<BigUint> {
    let value = match n % 3 {
        0 if n >= 3 => tiled(n),
        2 if n > 2 => {
            let third = (n - 2) / 3;
            big(24) * choose(n, 5) * tiled(n - 5) * big(third) + big(2) * choose(n, 2) * tiled(n - 2)
        }
        1 if n > 7 => {
            let third = (n - 4) / 3;
            let triple_block = big(720) * choose(n, 7) * big(third) * tiled(n - 7);
            let two_blocks = big(24 * 24) * choose(10, 5) * choose(n, 10) * choose(third, 2) * tiled(n - 10);
            let both_ends = big(6) * choose(n, 4) * tiled(n - 4);
            let one_end = big(9) * choose(n, 4) * tiled(n - 4)
                + big(24) * choose(n, 2) * choose(n - 2, 5) * tiled(n - 7) * big(third);
            triple_block + two_blocks + both_ends + big(2) * one_end
        }
        r => {
            return Err(Error::NotApplicable {
                n,
                valid: match r {
                    0 => "n ≡ 0 (mod 3) with n >= 3",
                    2 => "n ≡ 2 (mod 3) with n >= 5",
                    _ => "n ≡ 1 (mod 3) with n >= 10",
                },
            })
        }
    };
    if !value.is_integer() || value.is_negative() {
        return Err(Error::Consistency(format!("best-case formula gave {value} at n = {n}")));
    }
    Ok(value.to_integer().to_biguint().expect("checked non-negative"))
}

pub fn b_formula_applicable(n: usize) -> bool {
    match n % 3 {
        0 => n >= 3,
        2 => n >= 5,
        _ => n >= 10,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_values() {
        for (n, e) in [
            (3u64, 2u64),
            (5, 64),
            (6, 80),
            (8, 9856),
            (9, 13440),
            (10, 1377792),
            (11, 4139520),
        ] {
            assert_eq!(b_formula(n as usize).unwrap(), BigUint::from(e), "n = {n}");
        }
    }

    #[test]
    fn refuses_outside_range() {
        for n in [0, 1, 2, 4, 7] {
            assert!(matches!(b_formula(n), Err(Error::NotApplicable { .. })), "n = {n}");
            assert!(!b_formula_applicable(n));
        }
        assert!(b_formula_applicable(10));
    }
}
