use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::{coefficient_prefix, int, Rational};

/// Sparse bivariate polynomial `Σ c_ij x^i y^j`. Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), Rational>,
}

impl BiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(Rational::one(), 0, 0)
    }

    pub fn monomial(c: Rational, i: u32, j: u32) -> Self {
        let mut p = Self::zero();
        p.add_term(i, j, c);
        p
    }

    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1, 0)
    }

    pub fn y() -> Self {
        Self::monomial(Rational::one(), 0, 1)
    }

    /// Builds from integer terms `(i, j, c)`; repeated exponents accumulate.
    pub fn from_terms(terms: &[(u32, u32, i64)]) -> Self {
        let mut p = Self::zero();
        for &(i, j, c) in terms {
            p.add_term(i, j, int(c));
        }
        p
    }

    pub fn add_term(&mut self, i: u32, j: u32, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry((i, j)).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), &Rational)> {
        self.terms.iter().map(|(&k, v)| (k, v))
    }

    pub fn coeff(&self, i: u32, j: u32) -> Rational {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, j)| i + j).max()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(&k, v)| (k, v * c)).collect(),
        }
    }

    /// `p(y, x)`
    pub fn swap_vars(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(&(i, j), v)| ((j, i), v.clone())).collect(),
        }
    }

    pub fn evaluate(&self, x: &Rational, y: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for (&(i, j), c) in &self.terms {
            acc += c * pow(x, i) * pow(y, j);
        }
        acc
    }

    pub fn has_integer_coefficients(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// Terms in canonical display order: descending total degree, then descending power of x.
    pub fn ordered_terms(&self) -> Vec<((u32, u32), Rational)> {
        let mut v: Vec<_> = self.terms.iter().map(|(&k, c)| (k, c.clone())).collect();
        v.sort_by(|((a1, b1), _), ((a2, b2), _)| (a2 + b2, a2).cmp(&(a1 + b1, a1)));
        v
    }

    pub fn render(&self, xvar: &str, yvar: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for ((i, j), c) in self.ordered_terms() {
            let (negative, body) = coefficient_prefix(&c, i + j == 0);
            if negative {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            if let Some(body) = body {
                out.push_str(&body);
            }
            for (var, e) in [(xvar, i), (yvar, j)] {
                match e {
                    0 => {}
                    1 => out.push_str(var),
                    _ => out.push_str(&format!("{var}^{e}")),
                }
            }
        }
        out
    }
}

fn pow(base: &Rational, exp: u32) -> Rational {
    (0..exp).fold(Rational::one(), |acc, _| acc * base)
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("x", "y"))
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;

    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_term(i, j, c.clone());
        }
        out
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;

    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_term(i, j, -c);
        }
        out
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;

    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(i1, j1), a) in &self.terms {
            for (&(i2, j2), b) in &rhs.terms {
                out.add_term(i1 + i2, j1 + j2, a * b);
            }
        }
        out
    }
}

impl Add for BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: BiPoly) -> BiPoly {
        &self + &rhs
    }
}

impl Mul for BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: BiPoly) -> BiPoly {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat;
    use proptest::prelude::*;

    #[test]
    fn scalar_distributivity() {
        let s = &BiPoly::x() + &BiPoly::y();
        let half = s.scale(&rat(1, 2));
        assert_eq!(&half + &half, s);
    }

    #[test]
    fn evaluate_sum() {
        let s = &BiPoly::x() + &BiPoly::y();
        assert_eq!(s.evaluate(&int(1), &int(1)), int(2));
    }

    #[test]
    fn cancellation_removes_terms() {
        let s = &BiPoly::x() - &BiPoly::x();
        assert!(s.is_zero());
        assert_eq!(s.total_degree(), None);
    }

    #[test]
    fn rendering_is_canonical() {
        let p = BiPoly::from_terms(&[(0, 1, 1), (1, 0, 1), (0, 2, 1), (1, 1, 1), (2, 0, 1)]);
        assert_eq!(p.to_string(), "x^2+xy+y^2+x+y");
        assert_eq!(BiPoly::from_terms(&[(0, 0, 3), (1, 0, -2)]).to_string(), "-2x+3");
    }

    fn small_bipoly() -> impl Strategy<Value = BiPoly> {
        prop::collection::vec((0u32..3, 0u32..3, -9i64..9), 0..5)
            .prop_map(|ts| BiPoly::from_terms(&ts))
    }

    proptest! {
        #[test]
        fn ring_axioms(p in small_bipoly(), q in small_bipoly(), r in small_bipoly()) {
            prop_assert_eq!(&p + &q, &q + &p);
            prop_assert_eq!(&p * &q, &q * &p);
            prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
            prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
            prop_assert_eq!((&p * &q).swap_vars(), &p.swap_vars() * &q.swap_vars());
        }
    }
}
