//! Truncated power series over exact rationals, and the exponential
//! generating functions for `D(n)` and `f(n) = |F_n|`.
//!
//! With `Q(x) = cosh x - x sinh x`:
//!
//! * `G(x) = sinh x / Q(x)` carries `D(n)` for odd `n`,
//! * `H(x) = 1 / Q(x)` carries `D(n)` for even `n`,
//! * `F(x) = G(x) + H(x)²` carries `f(n)` for every `n`.

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{invalid, Error, Result};

pub const DEFAULT_ORDER: usize = 64;

/// `Σ_{k=0}^{order} c_k x^k`; terms beyond `order` are discarded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerSeries {
    coeffs: Vec<BigRational>,
}

impl PowerSeries {
    /// Pads or truncates `coeffs` to exactly `order + 1` terms.
    pub fn new(mut coeffs: Vec<BigRational>, order: usize) -> Self {
        coeffs.resize(order + 1, BigRational::zero());
        PowerSeries { coeffs }
    }

    pub fn from_integers(coeffs: &[i64], order: usize) -> Self {
        Self::new(
            coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect(),
            order,
        )
    }

    pub fn zero(order: usize) -> Self {
        Self::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::new(vec![BigRational::one()], order)
    }

    /// The series `x`.
    pub fn x(order: usize) -> Self {
        Self::new(vec![BigRational::zero(), BigRational::one()], order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &BigRational {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(self.coeffs[..=order.min(self.order())].to_vec(), order)
    }

    pub fn scale(&self, s: &BigRational) -> Self {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    /// `b` with `a b = 1` through the order, via
    /// `b_k = -(1/a_0) Σ_{j=1}^{k} a_j b_{k-j}`.
    pub fn reciprocal(&self) -> Result<Self> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(Error::Singular);
        }
        let inv_a0 = a0.recip();
        let mut b = Vec::with_capacity(self.coeffs.len());
        b.push(inv_a0.clone());
        for k in 1..self.coeffs.len() {
            let mut acc = BigRational::zero();
            for j in 1..=k {
                if !self.coeffs[j].is_zero() {
                    acc += &self.coeffs[j] * &b[k - j];
                }
            }
            b.push(-(acc * &inv_a0));
        }
        Ok(PowerSeries { coeffs: b })
    }

    fn zip_with(&self, rhs: &Self, f: impl Fn(&BigRational, &BigRational) -> BigRational) -> Self {
        let order = self.order().min(rhs.order());
        PowerSeries {
            coeffs: (0..=order).map(|k| f(&self.coeffs[k], &rhs.coeffs[k])).collect(),
        }
    }
}

impl Add for &PowerSeries {
    type Output = PowerSeries;

    fn add(self, rhs: &PowerSeries) -> PowerSeries {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &PowerSeries {
    type Output = PowerSeries;

    fn sub(self, rhs: &PowerSeries) -> PowerSeries {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Neg for &PowerSeries {
    type Output = PowerSeries;

    fn neg(self) -> PowerSeries {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

/// Cauchy product truncated at the smaller order.
impl Mul for &PowerSeries {
    type Output = PowerSeries;

    fn mul(self, rhs: &PowerSeries) -> PowerSeries {
        let order = self.order().min(rhs.order());
        let mut out = vec![BigRational::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        PowerSeries { coeffs: out }
    }
}

fn inverse_factorials(order: usize) -> Vec<BigRational> {
    let mut out = Vec::with_capacity(order + 1);
    let mut fact = BigInt::one();
    for k in 0..=order {
        if k > 0 {
            fact *= k;
        }
        out.push(BigRational::new(BigInt::one(), fact.clone()));
    }
    out
}

pub fn cosh_series(order: usize) -> PowerSeries {
    let inv = inverse_factorials(order);
    PowerSeries {
        coeffs: inv
            .into_iter()
            .enumerate()
            .map(|(k, c)| if k % 2 == 0 { c } else { BigRational::zero() })
            .collect(),
    }
}

pub fn sinh_series(order: usize) -> PowerSeries {
    let inv = inverse_factorials(order);
    PowerSeries {
        coeffs: inv
            .into_iter()
            .enumerate()
            .map(|(k, c)| if k % 2 == 1 { c } else { BigRational::zero() })
            .collect(),
    }
}

/// The generating functions shared by `D` and `f`.
#[derive(Debug, Clone)]
pub struct DominationEgfs {
    /// `sinh x / (cosh x - x sinh x)`
    pub odd_part: PowerSeries,
    /// `1 / (cosh x - x sinh x)`
    pub even_part: PowerSeries,
}

impl DominationEgfs {
    pub fn new(order: usize) -> Self {
        let sinh = sinh_series(order);
        let denominator = &cosh_series(order) - &(&PowerSeries::x(order) * &sinh);
        let even_part = denominator.reciprocal().expect("cosh x - x sinh x has constant term 1");
        let odd_part = &sinh * &even_part;
        DominationEgfs { odd_part, even_part }
    }

    /// `G + H`, whose coefficients give `D(n) / n!`.
    pub fn odd_vertex_series(&self) -> PowerSeries {
        &self.odd_part + &self.even_part
    }

    /// `G + H²`, whose coefficients give `f(n) / n!`.
    pub fn worst_case_series(&self) -> PowerSeries {
        &self.odd_part + &(&self.even_part * &self.even_part)
    }
}

/// `n! [x^n] s` for every `n`, failing unless each is a non-negative integer.
pub fn egf_counts(s: &PowerSeries) -> Result<Vec<BigUint>> {
    let mut fact = BigInt::one();
    let mut out = Vec::with_capacity(s.coeffs.len());
    for (n, c) in s.coeffs.iter().enumerate() {
        if n > 0 {
            fact *= n;
        }
        let scaled = c * BigRational::from_integer(fact.clone());
        if !scaled.is_integer() || scaled.is_negative() {
            return Err(Error::Consistency(format!(
                "n! [x^{n}] = {scaled} is not a non-negative integer"
            )));
        }
        out.push(scaled.to_integer().to_biguint().expect("non-negative"));
    }
    Ok(out)
}

/// `D(0..=order)` from `G` and `H`.
#[allow(non_snake_case)]
pub fn D_from_egf(order: usize) -> Result<Vec<BigUint>> {
    let egfs = DominationEgfs::new(order);
    // G is odd and H even, so their sum interleaves the two halves.
    for (k, (g, h)) in egfs.odd_part.coeffs().iter().zip(egfs.even_part.coeffs()).enumerate() {
        let stray = if k % 2 == 0 { g } else { h };
        if !stray.is_zero() {
            return Err(Error::Consistency(format!("parity violated at x^{k}")));
        }
    }
    egf_counts(&egfs.odd_vertex_series())
}

/// `f(0..=order)` from `F = G + H²`; each `[x^n] F` is the probability
/// that a uniform order is worst-case, so it must lie in `[0, 1]`.
pub fn f_from_egf(order: usize) -> Result<Vec<BigUint>> {
    let series = DominationEgfs::new(order).worst_case_series();
    if let Some((k, c)) = series
        .coeffs()
        .iter()
        .enumerate()
        .find(|(_, c)| *c > &BigRational::one())
    {
        return Err(Error::Consistency(format!("[x^{k}] F = {c} exceeds 1")));
    }
    egf_counts(&series)
}

/// `f(n) = Σ_{i=0}^{n/2} C(n, 2i) D(2i) D(n - 2i)` for even `n`, checked
/// against the given tables.
#[allow(non_snake_case)]
pub fn convolution_holds(n: usize, D: &[BigUint], f: &[BigUint]) -> bool {
    if n % 2 == 1 || n >= D.len() || n >= f.len() {
        return false;
    }
    let sum: BigUint = (0..=n / 2)
        .map(|i| binomial(BigUint::from(n), BigUint::from(2 * i)) * &D[2 * i] * &D[n - 2 * i])
        .sum();
    sum == f[n]
}

/// Builds both tables at order `n` and checks the even convolution.
pub fn convolution_check(n_even: usize) -> Result<bool> {
    if n_even == 0 || n_even % 2 == 1 {
        return Err(invalid("convolution identity is stated for positive even n"));
    }
    Ok(convolution_holds(n_even, &D_from_egf(n_even)?, &f_from_egf(n_even)?))
}
