//! Dense integer polynomials in one and two variables with arbitrary-precision coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// `Σ c_i t^i`, coefficients indexed by exponent, trailing zeros trimmed.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `t`
    pub fn t() -> Self {
        Self::from_i64(&[0, 1])
    }

    /// `t^k`
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::one();
        IntPolynomial { coeffs }
    }

    /// `t - c`
    pub fn linear_root(c: i64) -> Self {
        Self::from_i64(&[-c, 1])
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    /// Coefficients from lowest to highest degree.
    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Coefficients from highest to lowest degree, as polynomials are usually written.
    pub fn from_descending(coeffs: &[i64]) -> Self {
        let mut v: Vec<BigInt> = coeffs.iter().map(|&c| BigInt::from(c)).collect();
        v.reverse();
        Self::from_coeffs(v)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficients from highest to lowest degree.
    pub fn descending(&self) -> Vec<BigInt> {
        self.coeffs.iter().rev().cloned().collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn eval(&self, t: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * t + c)
    }

    pub fn eval_i64(&self, t: i64) -> BigInt {
        self.eval(&BigInt::from(t))
    }

    pub fn pow(&self, k: usize) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Division by `t - c`: returns quotient and remainder (synthetic division).
    pub fn div_rem_linear(&self, c: i64) -> (IntPolynomial, BigInt) {
        if self.coeffs.is_empty() {
            return (Self::zero(), BigInt::zero());
        }
        let c = BigInt::from(c);
        let n = self.coeffs.len();
        let mut quotient = vec![BigInt::zero(); n - 1];
        let mut carry = BigInt::zero();
        for i in (0..n).rev() {
            let v = &self.coeffs[i] + &carry * &c;
            if i == 0 {
                carry = v;
            } else {
                quotient[i - 1] = v.clone();
                carry = v;
            }
        }
        (Self::from_coeffs(quotient), carry)
    }

    /// Exact quotient by `t - c`; errors if the remainder is nonzero.
    pub fn div_exact_linear(&self, c: i64) -> Result<IntPolynomial> {
        let (q, r) = self.div_rem_linear(c);
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::NonzeroRemainder)
        }
    }

    /// `p(1 - t)`
    pub fn compose_one_minus_t(&self) -> Self {
        let base = Self::from_i64(&[1, -1]);
        let mut out = Self::zero();
        let mut power = Self::one();
        for c in &self.coeffs {
            out = &out + &power.scale(c);
            power = &power * &base;
        }
        out
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Absolute values of the coefficients, highest degree first.
    pub fn abs_descending(&self) -> Vec<BigInt> {
        self.coeffs.iter().rev().map(|c| c.abs()).collect()
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::from_coeffs((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::from_coeffs((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::from_coeffs(out)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(f, self.coeffs.iter().enumerate().rev().map(|(k, c)| (c, var_power("t", k))))
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({self})")
    }
}

fn var_power(var: &str, k: usize) -> String {
    match k {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{k}"),
    }
}

fn fmt_terms<'a>(f: &mut fmt::Formatter<'_>, terms: impl Iterator<Item = (&'a BigInt, String)>) -> fmt::Result {
    let mut first = true;
    for (c, vars) in terms {
        if c.is_zero() {
            continue;
        }
        let negative = c.is_negative();
        let mag = c.abs();
        if first {
            if negative {
                write!(f, "-")?;
            }
        } else {
            write!(f, "{}", if negative { " - " } else { " + " })?;
        }
        first = false;
        if vars.is_empty() {
            write!(f, "{mag}")?;
        } else if mag.is_one() {
            write!(f, "{vars}")?;
        } else {
            write!(f, "{mag}{vars}")?;
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

/// `Σ c_{ij} x^i y^j`, stored as a rectangular coefficient matrix (row = power of x).
#[derive(Clone, PartialEq, Eq, Default)]
pub struct IntPolynomial2 {
    coeffs: Vec<Vec<BigInt>>,
}

impl IntPolynomial2 {
    /// Build from `coeffs[i][j]` = coefficient of `x^i y^j`; trims to the
    /// smallest enclosing rectangle.
    pub fn from_coeffs(coeffs: Vec<Vec<BigInt>>) -> Self {
        let mut p = IntPolynomial2 { coeffs };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        let width = self
            .coeffs
            .iter()
            .filter_map(|row| row.iter().rposition(|c| !c.is_zero()))
            .max()
            .map_or(0, |w| w + 1);
        for row in &mut self.coeffs {
            row.resize(width, BigInt::zero());
        }
        while self.coeffs.last().is_some_and(|r| r.iter().all(Zero::is_zero)) {
            self.coeffs.pop();
        }
    }

    pub fn coeff(&self, i: usize, j: usize) -> BigInt {
        self.coeffs.get(i).and_then(|r| r.get(j)).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[Vec<BigInt>] {
        &self.coeffs
    }

    pub fn x_degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn y_degree(&self) -> usize {
        self.coeffs.first().map_or(0, |r| r.len().saturating_sub(1))
    }

    /// `p(y, x)`
    pub fn swap_variables(&self) -> Self {
        let rows = self.coeffs.len();
        let cols = self.coeffs.first().map_or(0, Vec::len);
        Self::from_coeffs((0..cols).map(|j| (0..rows).map(|i| self.coeffs[i][j].clone()).collect()).collect())
    }

    pub fn eval(&self, x: &BigInt, y: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, row| {
            acc * x + row.iter().rev().fold(BigInt::zero(), |a, c| a * y + c)
        })
    }

    /// Substitute `y = y0` to get a polynomial in `x`.
    pub fn specialize_y(&self, y0: &BigInt) -> IntPolynomial {
        IntPolynomial::from_coeffs(
            self.coeffs.iter().map(|row| row.iter().rev().fold(BigInt::zero(), |a, c| a * y0 + c)).collect(),
        )
    }

    pub fn all_nonnegative(&self) -> bool {
        self.coeffs.iter().flatten().all(|c| !c.is_negative())
    }
}

impl fmt::Display for IntPolynomial2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (i, row) in self.coeffs.iter().enumerate().rev() {
            for (j, c) in row.iter().enumerate().rev() {
                let vars = format!("{}{}", var_power("x", i), var_power("y", j));
                terms.push((c, vars));
            }
        }
        fmt_terms(f, terms.into_iter())
    }
}

impl fmt::Debug for IntPolynomial2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial2({self})")
    }
}
