//! Closed forms for uniform matroids and the partition-sum combinator that turns them
//! into invariants of `C_n^{a,b}`.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::combinat::{binomial, eulerian, factorial, partitions};
use crate::exactalg::{big, int, BiPoly, Rational, UniPoly};
use crate::matroid::SchubertSpec;
use crate::polytope::{ehrhart_interpolate, system_of_schubert};
use crate::{Error, Result};

fn bin(n: usize, k: usize) -> Rational {
    big(binomial(n as i64, k as i64))
}

fn bin_i(n: i64, k: i64) -> Rational {
    big(binomial(n, k))
}

fn check_kn(k: usize, n: usize) -> Result<()> {
    if k > n {
        return Err(Error::FormulaRange(format!("rank {k} exceeds ground {n}")));
    }
    Ok(())
}

/// Tutte polynomial of `U_{k,n}`. The boundary cases `k = 0` and `k = n` give `y^n` and `x^n`.
pub fn tutte_uniform(k: usize, n: usize) -> Result<BiPoly> {
    check_kn(k, n)?;
    if k == 0 {
        return Ok(BiPoly::monomial(Rational::one(), 0, n as u32));
    }
    if k == n {
        return Ok(BiPoly::monomial(Rational::one(), n as u32, 0));
    }
    let (k, n) = (k as i64, n as i64);
    let mut p = BiPoly::zero();
    for i in 1..=k {
        p.add_term(i as u32, 0, bin_i(n - i - 1, n - k - 1));
    }
    for i in 1..=n - k {
        p.add_term(0, i as u32, bin_i(n - i - 1, k - 1));
    }
    Ok(p)
}

/// Ehrhart polynomial of the hypersimplex `P(U_{k,n})`:
/// `Σ_{j<k} (-1)^j C(n,j) C((k-j)t - j + n - 1, n - 1)`.
pub fn ehrhart_uniform(k: usize, n: usize) -> Result<UniPoly> {
    check_kn(k, n)?;
    if k == 0 || k == n {
        return Ok(UniPoly::one());
    }
    let mut total = UniPoly::zero();
    for j in 0..k {
        // C(m, n-1) with m = (k-j)t + (n-1-j), expanded as a falling product in t
        let mut term = UniPoly::one();
        for i in 0..n - 1 {
            let factor = UniPoly::from_coeffs(vec![int((n - 1 - j) as i64 - i as i64), int((k - j) as i64)]);
            term = &term * &factor;
        }
        let sign = if j % 2 == 0 { int(1) } else { int(-1) };
        let scale = sign * bin(n, j) / big(factorial(n - 1));
        total = &total + &term.scale(&scale);
    }
    Ok(total)
}

/// Kazhdan–Lusztig polynomial of `U_{k,n}`; `U_{n,n}` gets the constant 1.
pub fn kl_uniform(k: usize, n: usize) -> Result<UniPoly> {
    check_kn(k, n)?;
    if k == 0 {
        return Err(Error::FormulaRange("KL polynomial undefined for rank 0".into()));
    }
    if k == n {
        return Ok(UniPoly::one());
    }
    let (k, n) = (k as i64, n as i64);
    let coeffs = (0..=(k - 1) / 2)
        .map(|i| {
            let sum: Rational = (0..n - k)
                .map(|h| bin_i(k - i + h, h + i + 1) * bin_i(i - 1 + h, h))
                .sum();
            bin_i(n, i) * sum / int(k - i)
        })
        .collect();
    Ok(UniPoly::from_coeffs(coeffs))
}

/// Inverse Kazhdan–Lusztig polynomial of `U_{k,n}`, for `1 ≤ k < n`.
pub fn inverse_kl_uniform(k: usize, n: usize) -> Result<UniPoly> {
    if k == 0 || k >= n {
        return Err(Error::FormulaRange(format!("inverse KL needs 1 <= k < n, got k={k}, n={n}")));
    }
    let (k, n) = (k as i64, n as i64);
    let coeffs = (0..=(k - 1) / 2)
        .map(|j| {
            let weight = int((n - k) * (k - 2 * j)) / int((n - k + j) * (n - j));
            bin_i(n, k) * weight * bin_i(k, j)
        })
        .collect();
    Ok(UniPoly::from_coeffs(coeffs))
}

/// Z-polynomial of `U_{k,n}` from the coefficient formula, for `1 ≤ k < n`.
pub fn zpoly_uniform(k: usize, n: usize) -> Result<UniPoly> {
    if k == 0 || k >= n {
        return Err(Error::FormulaRange(format!("Z coefficient formula needs 1 <= k < n, got k={k}, n={n}")));
    }
    let (k, n) = (k as i64, n as i64);
    let coeffs = (0..=k)
        .map(|i| {
            let sum: Rational = (0..n - k)
                .map(|h| {
                    let w = int(i * (h - n + k + 1) + n - k) / int((h + 1) * (n - k));
                    w * bin_i(i - 1 + h, h) * bin_i(k - i + h, h)
                })
                .sum();
            bin_i(n, i + n - k) * bin_i(n, i) / bin_i(n, n - k) * sum
        })
        .collect();
    Ok(UniPoly::from_coeffs(coeffs))
}

/// Z-polynomial of `U_{k,n}` assembled from KL polynomials of smaller uniform matroids:
/// `t^k + Σ_{i=1}^k C(n, n-k+i) t^{k-i} P_{U_{i,n-k+i}}(t)`.
pub fn zpoly_from_kl(k: usize, n: usize) -> Result<UniPoly> {
    if k == 0 || k >= n {
        return Err(Error::FormulaRange(format!("Z from KL needs 1 <= k < n, got k={k}, n={n}")));
    }
    let mut z = UniPoly::monomial(Rational::one(), k);
    for i in 1..=k {
        let shift = UniPoly::monomial(bin(n, n - k + i), k - i);
        z = &z + &(&shift * &kl_uniform(i, n - k + i)?);
    }
    Ok(z)
}

/// Rank generating function of the lattice of flats of `U_{k,n}`: `Σ_{i<k} C(n,i) x^i + x^k`.
pub fn whitney_uniform(k: usize, n: usize) -> Result<UniPoly> {
    check_kn(k, n)?;
    let mut coeffs: Vec<Rational> = (0..k).map(|i| bin(n, i)).collect();
    coeffs.push(Rational::one());
    Ok(UniPoly::from_coeffs(coeffs))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum InvariantFamily {
    Ehrhart,
    Tutte,
    Kl,
    #[serde(rename = "invkl")]
    InverseKl,
    Z,
    Whitney,
}

impl InvariantFamily {
    pub const ALL: [InvariantFamily; 6] = [
        InvariantFamily::Ehrhart,
        InvariantFamily::Tutte,
        InvariantFamily::Kl,
        InvariantFamily::InverseKl,
        InvariantFamily::Z,
        InvariantFamily::Whitney,
    ];

    pub fn name(self) -> &'static str {
        match self {
            InvariantFamily::Ehrhart => "ehrhart",
            InvariantFamily::Tutte => "tutte",
            InvariantFamily::Kl => "kl",
            InvariantFamily::InverseKl => "invkl",
            InvariantFamily::Z => "z",
            InvariantFamily::Whitney => "whitney",
        }
    }

    /// Variable names used when rendering; Tutte is the only bivariate family.
    pub fn variables(self) -> &'static [&'static str] {
        match self {
            InvariantFamily::Tutte => &["x", "y"],
            _ => &["t"],
        }
    }

    pub fn eval_uniform(self, k: usize, n: usize) -> Result<InvariantValue> {
        Ok(match self {
            InvariantFamily::Ehrhart => InvariantValue::Uni(ehrhart_uniform(k, n)?),
            InvariantFamily::Tutte => InvariantValue::Bi(tutte_uniform(k, n)?),
            InvariantFamily::Kl => InvariantValue::Uni(kl_uniform(k, n)?),
            InvariantFamily::InverseKl => InvariantValue::Uni(inverse_kl_uniform(k, n)?),
            InvariantFamily::Z => InvariantValue::Uni(zpoly_uniform(k, n)?),
            InvariantFamily::Whitney => InvariantValue::Uni(whitney_uniform(k, n)?),
        })
    }

    fn one(self) -> InvariantValue {
        match self {
            InvariantFamily::Tutte => InvariantValue::Bi(BiPoly::one()),
            _ => InvariantValue::Uni(UniPoly::one()),
        }
    }
}

impl fmt::Display for InvariantFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for InvariantFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        InvariantFamily::ALL
            .into_iter()
            .find(|f| f.name() == s.to_ascii_lowercase())
            .ok_or_else(|| Error::InvalidArgument(format!("unknown invariant family '{s}'")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum InvariantValue {
    Uni(UniPoly),
    Bi(BiPoly),
}

impl InvariantValue {
    pub fn as_uni(&self) -> Option<&UniPoly> {
        match self {
            InvariantValue::Uni(p) => Some(p),
            InvariantValue::Bi(_) => None,
        }
    }

    pub fn as_bi(&self) -> Option<&BiPoly> {
        match self {
            InvariantValue::Bi(p) => Some(p),
            InvariantValue::Uni(_) => None,
        }
    }

    fn mul(&self, other: &InvariantValue) -> InvariantValue {
        match (self, other) {
            (InvariantValue::Uni(p), InvariantValue::Uni(q)) => InvariantValue::Uni(p * q),
            (InvariantValue::Bi(p), InvariantValue::Bi(q)) => InvariantValue::Bi(p * q),
            _ => unreachable!("mixed value rings within one family"),
        }
    }

    fn add_scaled(&mut self, other: &InvariantValue, c: &Rational) {
        match (self, other) {
            (InvariantValue::Uni(p), InvariantValue::Uni(q)) => *p = &*p + &q.scale(c),
            (InvariantValue::Bi(p), InvariantValue::Bi(q)) => *p = &*p + &q.scale(c),
            _ => unreachable!("mixed value rings within one family"),
        }
    }

    pub fn has_integer_coefficients(&self) -> bool {
        match self {
            InvariantValue::Uni(p) => p.has_integer_coefficients(),
            InvariantValue::Bi(p) => p.has_integer_coefficients(),
        }
    }

    pub fn render(&self, vars: &[&str]) -> String {
        match self {
            InvariantValue::Uni(p) => p.render(vars.first().copied().unwrap_or("t")),
            InvariantValue::Bi(p) => p.render(vars[0], vars[1]),
        }
    }
}

impl fmt::Display for InvariantValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InvariantValue::Uni(p) => write!(f, "{p}"),
            InvariantValue::Bi(p) => write!(f, "{p}"),
        }
    }
}

/// Integer-valued on `0..=deg`, hence on all integers.
fn integer_valued(p: &UniPoly) -> bool {
    let deg = p.degree().unwrap_or(0);
    (0..=deg as i64).all(|t| p.evaluate(&int(t)).is_integer())
}

/// `f(C_n^{a,b}) = Σ_{λ⊢n} (1/z_λ) Π_i f(U_{λ_i b, λ_i(a+b)})`, computed exactly.
///
/// The result is checked for integrality: integer coefficients for every family except
/// Ehrhart, where integer values at all nonnegative integers are required instead.
pub fn catalan_invariant(fam: InvariantFamily, a: usize, b: usize, n: usize) -> Result<InvariantValue> {
    if a == 0 || b == 0 || n == 0 {
        return Err(Error::InvalidArgument("a, b, n must be positive".into()));
    }
    // factors[p] = f(U_{pb, p(a+b)})
    let factors: Vec<InvariantValue> = std::iter::once(Ok(fam.one()))
        .chain((1..=n).map(|p| fam.eval_uniform(p * b, p * (a + b))))
        .collect::<Result<_>>()?;
    let mut total = match fam.one() {
        InvariantValue::Uni(_) => InvariantValue::Uni(UniPoly::zero()),
        InvariantValue::Bi(_) => InvariantValue::Bi(BiPoly::zero()),
    };
    for lambda in partitions(n) {
        let term = lambda
            .parts()
            .iter()
            .fold(fam.one(), |acc, &p| acc.mul(&factors[p]));
        let weight = Rational::one() / big(lambda.z_value());
        total.add_scaled(&term, &weight);
    }
    let integral = match (&total, fam) {
        (InvariantValue::Uni(p), InvariantFamily::Ehrhart) => integer_valued(p),
        (v, _) => v.has_integer_coefficients(),
    };
    if !integral {
        return Err(Error::ValuativeIdentityViolated(format!(
            "{fam} of C_{n}^({a},{b}) is not integral: {total}"
        )));
    }
    Ok(total)
}

/// `A(n(a+b)-1, nb) / (n · (n(a+b)-1)!)`.
pub fn volume_catalan(a: usize, b: usize, n: usize) -> Result<Rational> {
    if a == 0 || b == 0 || n == 0 {
        return Err(Error::InvalidArgument("a, b, n must be positive".into()));
    }
    let m = n * (a + b) - 1;
    Ok(big(eulerian(m, n * b)) / (big(n) * big(factorial(m))))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PanhandleReport {
    pub a: usize,
    pub b: usize,
    pub lhs: UniPoly,
    pub rhs: UniPoly,
    pub equal: bool,
    /// `(t, lhs(t), rhs(t))` for `t = 0..=tmax`.
    pub values: Vec<(u64, String, String)>,
}

/// Compares the Ehrhart polynomial of the Schubert matroid with runs `(1,1,a,b)` against
/// `((a+1)/(a+b+1) t + 1) · i(U_{b,a+b+1}, t)`. Reports, never asserts.
pub fn panhandle_conjecture_check(a: usize, b: usize, tmax: u64) -> Result<PanhandleReport> {
    if a == 0 || b == 0 {
        return Err(Error::InvalidArgument("a, b must be positive".into()));
    }
    let spec = SchubertSpec::from_runs(&[1, 1, a, b])?;
    let sys = system_of_schubert(&spec);
    let lhs = ehrhart_interpolate(&sys, spec.ground() - 1)?.poly;
    let factor = UniPoly::from_coeffs(vec![Rational::one(), Rational::new((a + 1).into(), (a + b + 1).into())]);
    let rhs = &factor * &ehrhart_uniform(b, a + b + 1)?;
    let values = (0..=tmax)
        .map(|t| {
            let x = big(t);
            (t, lhs.evaluate(&x).to_string(), rhs.evaluate(&x).to_string())
        })
        .collect();
    Ok(PanhandleReport { a, b, equal: lhs == rhs, lhs, rhs, values })
}

/// True when every coefficient is strictly positive.
pub fn all_coefficients_positive(p: &UniPoly) -> bool {
    p.coeffs().iter().all(|c| c > &Rational::zero())
}
