use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::{coefficient_prefix, int, Rational};
use crate::{Error, Result};

/// Dense univariate polynomial with rational coefficients.
///
/// `coeffs[i]` is the coefficient of `t^i`. Trailing zeros are always trimmed, so the
/// zero polynomial has no coefficients and structural equality is value equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c · t^degree`
    pub fn monomial(c: Rational, degree: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); degree + 1];
        coeffs[degree] = c;
        Self::from_coeffs(coeffs)
    }

    /// The polynomial `t`.
    pub fn var() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Horner evaluation.
    pub fn evaluate(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn has_integer_coefficients(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Canonical text form in descending powers, e.g. `45t^2+55t+1`.
    pub fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (negative, body) = coefficient_prefix(c, i == 0);
            if negative {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            if let Some(body) = body {
                out.push_str(&body);
            }
            match i {
                0 => {}
                1 => out.push_str(var),
                _ => {
                    out.push_str(var);
                    out.push('^');
                    out.push_str(&i.to_string());
                }
            }
        }
        out
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("t"))
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;

    fn add(self, rhs: &UniPoly) -> UniPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::from_coeffs((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;

    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::from_coeffs((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;

    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        UniPoly::from_coeffs(coeffs)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;

    fn neg(self) -> UniPoly {
        UniPoly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for UniPoly {
            type Output = UniPoly;
            fn $method(self, rhs: UniPoly) -> UniPoly {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// Interpolates through arbitrary distinct nodes using Newton divided differences.
///
/// The result is the unique polynomial of degree `< points.len()` through all points.
pub fn interpolate(points: &[(Rational, Rational)]) -> Result<UniPoly> {
    for (i, (xi, _)) in points.iter().enumerate() {
        if points[..i].iter().any(|(xj, _)| xj == xi) {
            return Err(Error::DegenerateInterpolation(super::format_rational(xi)));
        }
    }
    let n = points.len();
    let mut table: Vec<Rational> = points.iter().map(|(_, y)| y.clone()).collect();
    // table[i] becomes f[x_0, ..., x_i] after the sweep below
    for level in 1..n {
        for i in (level..n).rev() {
            let num = &table[i] - &table[i - 1];
            let den = &points[i].0 - &points[i - level].0;
            table[i] = num / den;
        }
    }
    let mut result = UniPoly::zero();
    let mut basis = UniPoly::one();
    for (i, dd) in table.iter().enumerate() {
        result = &result + &basis.scale(dd);
        let factor = UniPoly::from_coeffs(vec![-points[i].0.clone(), Rational::one()]);
        basis = &basis * &factor;
    }
    Ok(result)
}

/// Interpolates values sampled at `t = 0, 1, ..., d` with forward differences,
/// expanding in the binomial basis `C(t, j)`.
pub fn interpolate_consecutive(values: &[Rational]) -> UniPoly {
    let mut diffs = values.to_vec();
    let mut leading = Vec::with_capacity(values.len());
    for _ in 0..values.len() {
        leading.push(diffs[0].clone());
        diffs = diffs.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    let mut result = UniPoly::zero();
    let mut basis = UniPoly::one(); // C(t, j)
    for (j, delta) in leading.iter().enumerate() {
        result = &result + &basis.scale(delta);
        let factor = UniPoly::from_coeffs(vec![int(-(j as i64)), Rational::one()])
            .scale(&super::rat(1, j as i64 + 1));
        basis = &basis * &factor;
    }
    result
}
