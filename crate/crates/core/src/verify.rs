//! Independent oracles and identity suites.
//!
//! Oracles work from first principles (rank function, lattice of flats, lattice-point
//! counts, exhaustive subset enumeration) and never call the closed forms they check.

use std::collections::HashMap;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::combinat::{factorial, gap_partition, gap_subset_count, multinomial, partitions, refinements, stirling2, Partition};
use crate::exactalg::{big, int, BiPoly, Rational, UniPoly};
use crate::invariants::{catalan_invariant, InvariantFamily, InvariantValue};
use crate::matroid::{GroundSubset, MatroidExpr};
use crate::polytope::{ehrhart_interpolate, subdivision_check, system_of_matroid};
use crate::{Error, Result};

pub const TUTTE_GROUND_CAP: usize = 16;
pub const WHITNEY_GROUND_CAP: usize = 14;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyCase {
    pub instance: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

impl VerifyCase {
    pub fn compare(instance: impl Into<String>, expected: impl ToString, actual: impl ToString) -> Self {
        let expected = expected.to_string();
        let actual = actual.to_string();
        Self { instance: instance.into(), pass: expected == actual, expected, actual }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub suite: String,
    pub seed: Option<u64>,
    pub cases: Vec<VerifyCase>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    pub runtime_ms: u64,
}

impl VerifyReport {
    pub fn new(suite: impl Into<String>) -> Self {
        Self { suite: suite.into(), seed: None, cases: Vec::new(), notes: Vec::new(), runtime_ms: 0 }
    }

    pub fn passed(&self) -> bool {
        self.cases.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &VerifyCase> {
        self.cases.iter().filter(|c| !c.pass)
    }

    pub fn push(&mut self, case: VerifyCase) {
        self.cases.push(case);
    }

    /// Appends the cases and notes of `other`, keeping their order.
    pub fn absorb(&mut self, other: VerifyReport) {
        self.cases.extend(other.cases);
        self.notes.extend(other.notes);
    }

    fn timed(mut self, start: Instant) -> Self {
        self.runtime_ms = start.elapsed().as_millis() as u64;
        self
    }
}

/// `T_M(x,y) = Σ_{A⊆E} (x-1)^{r(E)-r(A)} (y-1)^{|A|-r(A)}`, summed over every subset.
pub fn tutte_bruteforce(m: &MatroidExpr) -> Result<BiPoly> {
    let n = m.ground();
    if n > TUTTE_GROUND_CAP {
        return Err(Error::EnumerationTooLarge { ground: n, cap: TUTTE_GROUND_CAP });
    }
    let full = m.total_rank();
    let mut histogram: HashMap<(u32, u32), u64> = HashMap::new();
    for mask in 0..1u64 << n {
        let a = GroundSubset::from_mask(mask);
        let r = m.rank(a)?;
        *histogram.entry(((full - r) as u32, (a.len() - r) as u32)).or_insert(0) += 1;
    }
    let x1 = &BiPoly::x() - &BiPoly::one();
    let y1 = &BiPoly::y() - &BiPoly::one();
    let max_i = histogram.keys().map(|k| k.0).max().unwrap_or(0);
    let max_j = histogram.keys().map(|k| k.1).max().unwrap_or(0);
    let xp: Vec<BiPoly> = (0..=max_i).scan(BiPoly::one(), |acc, _| {
        let cur = acc.clone();
        *acc = &*acc * &x1;
        Some(cur)
    }).collect();
    let yp: Vec<BiPoly> = (0..=max_j).scan(BiPoly::one(), |acc, _| {
        let cur = acc.clone();
        *acc = &*acc * &y1;
        Some(cur)
    }).collect();
    let mut keys: Vec<_> = histogram.into_iter().collect();
    keys.sort();
    let mut total = BiPoly::zero();
    for ((i, j), count) in keys {
        total = &total + &(&xp[i as usize] * &yp[j as usize]).scale(&big(count));
    }
    Ok(total)
}

/// `Σ W_i x^i` with `W_i` the number of flats of rank `i`.
pub fn whitney_bruteforce(m: &MatroidExpr) -> Result<UniPoly> {
    let w = m.flats_by_rank_capped(WHITNEY_GROUND_CAP)?;
    Ok(UniPoly::from_coeffs(w.into_iter().map(big).collect()))
}

/// Ehrhart polynomial of `P(M)` from lattice-point counts.
pub fn ehrhart_bruteforce(m: &MatroidExpr) -> Result<UniPoly> {
    let sys = system_of_matroid(m);
    Ok(ehrhart_interpolate(&sys, m.ground().saturating_sub(m.block_count()))?.poly)
}

/// Compares the partition sum against the oracles for `C_n^{a,b}`. Families without a
/// first-principles oracle (KL, inverse KL, Z) are skipped with a note.
pub fn valuative_identity_suite(a: usize, b: usize, n: usize, families: &[InvariantFamily]) -> Result<VerifyReport> {
    let start = Instant::now();
    let m = MatroidExpr::catalan(a, b, n)?;
    let mut report = VerifyReport::new("valuative");
    for &fam in families {
        let instance = format!("{fam} C_{n}^({a},{b})");
        let oracle = match fam {
            InvariantFamily::Tutte => InvariantValue::Bi(tutte_bruteforce(&m)?),
            InvariantFamily::Whitney => InvariantValue::Uni(whitney_bruteforce(&m)?),
            InvariantFamily::Ehrhart => InvariantValue::Uni(ehrhart_bruteforce(&m)?),
            _ => {
                report.notes.push(format!("{instance}: no independent oracle"));
                continue;
            }
        };
        let value = catalan_invariant(fam, a, b, n)?;
        report.push(VerifyCase::compare(instance, oracle, value));
    }
    Ok(report.timed(start))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LambdaContribution {
    pub lambda: Partition,
    /// Contribution divided by `|K_μ|`, i.e. how often a single permutation of type μ is counted.
    pub per_element: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountingIdentity {
    pub mu: Partition,
    pub contributions: Vec<LambdaContribution>,
    pub total: Rational,
    pub expected: BigInt,
}

/// Left-hand side of the counting identity for a fixed cycle type μ ≠ (n):
/// `Σ_{λ≠(n)} (-1)^{ℓ(λ)} (p(λ)/ℓ(λ)) Σ_{σ∈F(λ), σ∼μ} Π_i |K_{σ^i}| · C(n; λ)`,
/// with one entry per λ whose refinements reach μ.
pub fn counting_identity(mu: &Partition) -> Result<CountingIdentity> {
    let n = mu.size();
    if n == 0 || mu.len() == 1 {
        return Err(Error::InvalidArgument(format!("counting identity needs μ with at least two parts, got {mu}")));
    }
    let class = mu.cycle_class_size();
    let mut contributions = Vec::new();
    let mut total = Rational::zero();
    for lambda in partitions(n) {
        let l = lambda.len();
        if l == 1 {
            continue;
        }
        let inner: BigInt = refinements(&lambda)
            .into_iter()
            .filter(|r| mu.same_parts(r.composition.parts()))
            .map(|r| r.blocks.iter().map(Partition::cycle_class_size).product::<BigInt>())
            .sum();
        if inner.is_zero() {
            continue;
        }
        let sign = if l % 2 == 0 { int(1) } else { int(-1) };
        let value = sign * big(lambda.perm_count()) / big(l) * big(inner) * big(multinomial(lambda.parts()));
        total += &value;
        contributions.push(LambdaContribution { per_element: value / big(class.clone()), lambda });
    }
    Ok(CountingIdentity { mu: mu.clone(), contributions, total, expected: class })
}

/// Checks the counting identity for μ, together with the per-length totals
/// `Σ_{ℓ(λ)=k} contribution = (-1)^k (k-1)! S(ℓ(μ), k)` (per element).
pub fn counting_identity_check(mu: &Partition) -> Result<VerifyReport> {
    let start = Instant::now();
    if mu.size() > 8 {
        return Err(Error::InvalidArgument(format!("{mu} is larger than 8")));
    }
    let id = counting_identity(mu)?;
    let mut report = VerifyReport::new("counting");
    let r = mu.len();
    for k in 2..=r {
        let got: Rational = id
            .contributions
            .iter()
            .filter(|c| c.lambda.len() == k)
            .map(|c| c.per_element.clone())
            .sum();
        let sign = if k % 2 == 0 { 1 } else { -1 };
        let expected = big(factorial(k - 1) * stirling2(r, k) * sign);
        report.push(VerifyCase::compare(format!("μ={mu} length {k}"), expected, got));
    }
    report.push(VerifyCase::compare(format!("μ={mu} total"), &id.expected, &id.total));
    report.notes = id
        .contributions
        .iter()
        .map(|c| format!("μ={mu} λ={}: {}", c.lambda, crate::exactalg::format_rational(&c.per_element)))
        .collect();
    Ok(report.timed(start))
}

/// Counting identity for every μ ⊢ m with at least two parts, `2 ≤ m ≤ n_max`.
pub fn counting_suite(n_max: usize) -> Result<VerifyReport> {
    let start = Instant::now();
    let mus: Vec<Partition> = (2..=n_max)
        .flat_map(partitions)
        .filter(|mu| mu.len() > 1)
        .collect();
    let parts: Vec<VerifyReport> = mus.par_iter().map(counting_identity_check).collect::<Result<_>>()?;
    let mut report = VerifyReport::new("counting");
    for p in parts {
        report.absorb(p);
    }
    Ok(report.timed(start))
}

/// Exhaustive check of the number of subsets of `[n]` with each gap partition.
pub fn gap_count_suite(n: usize) -> Result<VerifyReport> {
    let start = Instant::now();
    if n == 0 || n > 20 {
        return Err(Error::InvalidArgument(format!("gap suite needs 1 <= n <= 20, got {n}")));
    }
    let mut tally: HashMap<Partition, u64> = HashMap::new();
    for mask in 1u64..1 << n {
        let subset: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect();
        *tally.entry(gap_partition(&subset, n)?).or_insert(0) += 1;
    }
    let mut report = VerifyReport::new("gaps");
    let mut sum = BigInt::zero();
    for lambda in partitions(n) {
        let formula = gap_subset_count(n, &lambda)?;
        sum += &formula;
        let brute = tally.get(&lambda).copied().unwrap_or(0);
        report.push(VerifyCase::compare(format!("n={n} λ={lambda}"), brute, &formula));
    }
    report.push(VerifyCase::compare(format!("n={n} total"), (BigInt::one() << n) - 1, sum));
    Ok(report.timed(start))
}

pub fn gaps_suite(n_max: usize) -> Result<VerifyReport> {
    let start = Instant::now();
    let parts: Vec<VerifyReport> = (1..=n_max).into_par_iter().map(gap_count_suite).collect::<Result<_>>()?;
    let mut report = VerifyReport::new("gaps");
    for p in parts {
        report.absorb(p);
    }
    Ok(report.timed(start))
}

pub fn subdivision_suite(a: usize, b: usize, n: usize, trials: usize, seed: u64) -> Result<VerifyReport> {
    let start = Instant::now();
    let check = subdivision_check(a, b, n, trials, seed)?;
    let mut report = VerifyReport::new("subdivision");
    report.seed = Some(seed);
    let points = check.random_points + check.vertex_points;
    report.push(VerifyCase::compare(
        format!("C_{n}^({a},{b}) {} random + {} vertex points", check.random_points, check.vertex_points),
        format!("0/{points} failures"),
        format!("{}/{points} failures", check.failures.len()),
    ));
    for f in &check.failures {
        report.notes.push(format!(
            "x=({}): uniform {} signed sum {} covered {}",
            f.point.join(","),
            f.uniform,
            f.signed_sum,
            f.covered
        ));
    }
    Ok(report.timed(start))
}

/// A row of a published table at `a = b = 1`. Rows marked incomplete list only the
/// printed coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoldenRow {
    pub n: usize,
    /// `(degree, coefficient)` pairs.
    pub terms: Vec<(usize, i64)>,
    pub complete: bool,
}

impl GoldenRow {
    fn full(n: usize, ascending: &[i64]) -> Self {
        Self { n, terms: ascending.iter().copied().enumerate().collect(), complete: true }
    }

    pub fn matches(&self, p: &UniPoly) -> bool {
        let printed = self.terms.iter().all(|&(d, c)| p.coeff(d) == int(c));
        if self.complete {
            printed && p.degree().unwrap_or(0) + 1 == self.terms.len()
        } else {
            printed
        }
    }

    pub fn render(&self) -> String {
        let p = UniPoly::from_coeffs({
            let max = self.terms.iter().map(|t| t.0).max().unwrap_or(0);
            let mut c = vec![Rational::zero(); max + 1];
            for &(d, v) in &self.terms {
                c[d] = int(v);
            }
            c
        });
        if self.complete {
            return p.to_string();
        }
        // printed high-degree terms, then an ellipsis, then the constant term
        let high: Vec<(usize, i64)> = {
            let mut t: Vec<_> = self.terms.iter().copied().filter(|&(d, _)| d > 0).collect();
            t.sort_by_key(|&(d, _)| std::cmp::Reverse(d));
            t
        };
        let mut out = UniPoly::from_coeffs({
            let max = high.first().map(|t| t.0).unwrap_or(0);
            let mut c = vec![Rational::zero(); max + 1];
            for &(d, v) in &high {
                c[d] = int(v);
            }
            c
        })
        .to_string();
        out.push_str("+...+");
        out.push_str(&self.terms.iter().find(|t| t.0 == 0).map(|t| t.1).unwrap_or(0).to_string());
        out
    }
}

/// Published values of the KL, inverse KL, Z and Whitney polynomials of `C_n` (a = b = 1).
pub fn golden_table(fam: InvariantFamily) -> Vec<GoldenRow> {
    match fam {
        InvariantFamily::Kl => vec![
            GoldenRow::full(2, &[1]),
            GoldenRow::full(3, &[1, 3]),
            GoldenRow::full(4, &[1, 15]),
            GoldenRow::full(5, &[1, 55, 45]),
            GoldenRow::full(6, &[1, 185, 473]),
            GoldenRow::full(7, &[1, 612, 3239, 1092]),
        ],
        InvariantFamily::InverseKl => vec![
            GoldenRow::full(2, &[2]),
            GoldenRow::full(3, &[5, 3]),
            GoldenRow::full(4, &[14, 19]),
            GoldenRow::full(5, &[42, 92, 45]),
            GoldenRow::full(6, &[132, 405, 396]),
            GoldenRow::full(7, &[429, 1705, 2491, 1092]),
        ],
        InvariantFamily::Z => vec![
            GoldenRow::full(2, &[1, 3, 1]),
            GoldenRow::full(3, &[1, 8, 8, 1]),
            GoldenRow::full(4, &[1, 22, 50, 22, 1]),
            GoldenRow::full(5, &[1, 64, 278, 278, 64, 1]),
            GoldenRow::full(6, &[1, 196, 1433, 2619, 1433, 196, 1]),
            GoldenRow { n: 7, terms: vec![(7, 1), (6, 625), (5, 7010), (4, 20596), (0, 1)], complete: false },
        ],
        InvariantFamily::Whitney => vec![
            GoldenRow::full(2, &[1, 3, 1]),
            GoldenRow::full(3, &[1, 5, 8, 1]),
            GoldenRow::full(4, &[1, 7, 19, 22, 1]),
            GoldenRow::full(5, &[1, 9, 34, 67, 64, 1]),
            GoldenRow::full(6, &[1, 11, 53, 144, 232, 196, 1]),
            GoldenRow::full(7, &[1, 13, 76, 261, 573, 804, 625, 1]),
        ],
        _ => Vec::new(),
    }
}

/// Partition-sum values at `a = b = 1` against the published tables.
pub fn tables_suite() -> Result<VerifyReport> {
    let start = Instant::now();
    let mut report = VerifyReport::new("tables");
    for fam in [InvariantFamily::Kl, InvariantFamily::InverseKl, InvariantFamily::Z, InvariantFamily::Whitney] {
        for row in golden_table(fam) {
            let value = catalan_invariant(fam, 1, 1, row.n)?;
            let p = value.as_uni().expect("univariate family");
            let actual = if row.matches(p) { row.render() } else { p.to_string() };
            report.push(VerifyCase::compare(format!("{fam} n={}", row.n), row.render(), actual));
        }
    }
    Ok(report.timed(start))
}

/// All `(a, b, n)` with `n(a+b) ≤ max_ground`, in lexicographic order.
pub fn instances_up_to(max_ground: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for a in 1..max_ground {
        for b in 1..max_ground {
            for n in 1..=max_ground / (a + b).max(1) {
                if n * (a + b) <= max_ground {
                    out.push((a, b, n));
                }
            }
        }
    }
    out
}

/// Tutte and Whitney oracles on every instance of ground size ≤ `max_ground`, and the
/// Ehrhart oracle on those of ground size ≤ `min(max_ground, 8)`.
pub fn oracles_suite(max_ground: usize) -> Result<VerifyReport> {
    let start = Instant::now();
    let instances = instances_up_to(max_ground.min(WHITNEY_GROUND_CAP));
    let parts: Vec<VerifyReport> = instances
        .par_iter()
        .map(|&(a, b, n)| {
            let mut fams = vec![InvariantFamily::Tutte, InvariantFamily::Whitney];
            if n * (a + b) <= 8 {
                fams.push(InvariantFamily::Ehrhart);
            }
            valuative_identity_suite(a, b, n, &fams)
        })
        .collect::<Result<_>>()?;
    let mut report = VerifyReport::new("oracles");
    for p in parts {
        report.absorb(p);
    }
    Ok(report.timed(start))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::SchubertSpec;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn tutte_oracle_examples() {
        let u12 = MatroidExpr::uniform(1, 2).unwrap();
        assert_eq!(tutte_bruteforce(&u12).unwrap().to_string(), "x+y");
        let c2 = MatroidExpr::catalan(1, 1, 2).unwrap();
        assert_eq!(tutte_bruteforce(&c2).unwrap().to_string(), "x^2+xy+y^2+x+y");
        let sum = MatroidExpr::direct_sum(vec![u12.clone(), u12]).unwrap();
        let xy = &BiPoly::x() + &BiPoly::y();
        assert_eq!(tutte_bruteforce(&sum).unwrap(), &xy * &xy);
        let big_one = MatroidExpr::uniform(3, 17).unwrap();
        assert!(matches!(tutte_bruteforce(&big_one), Err(Error::EnumerationTooLarge { .. })));
    }

    #[test]
    fn tutte_oracle_properties() {
        let ms = [
            MatroidExpr::catalan(1, 1, 3).unwrap(),
            MatroidExpr::catalan(2, 1, 2).unwrap(),
            MatroidExpr::catalan(1, 2, 3).unwrap(),
            MatroidExpr::schubert(SchubertSpec::from_runs(&[1, 2, 2, 1, 1, 3]).unwrap()),
            MatroidExpr::direct_sum(vec![MatroidExpr::uniform(2, 4).unwrap(), MatroidExpr::catalan(1, 1, 2).unwrap()]).unwrap(),
        ];
        for m in &ms {
            let t = tutte_bruteforce(m).unwrap();
            assert_eq!(tutte_bruteforce(&m.dual()).unwrap(), t.swap_vars(), "{m}");
            assert_eq!(t.evaluate(&int(1), &int(1)), big(m.enumerate_bases().unwrap().len()));
            assert_eq!(t.evaluate(&int(2), &int(2)), big(1u64 << m.ground()));
        }
    }

    #[test]
    fn whitney_oracle_examples() {
        let w = |m: MatroidExpr| whitney_bruteforce(&m).unwrap().to_string();
        assert_eq!(w(MatroidExpr::uniform(2, 4).unwrap()), "t^2+4t+1");
        assert_eq!(w(MatroidExpr::catalan(1, 1, 2).unwrap()), "t^2+3t+1");
        assert_eq!(w(MatroidExpr::catalan(1, 1, 3).unwrap()), "t^3+8t^2+5t+1");
        for (a, b, n) in [(1, 1, 4), (2, 1, 3), (1, 3, 2)] {
            let p = whitney_bruteforce(&MatroidExpr::catalan(a, b, n).unwrap()).unwrap();
            assert_eq!(p.coeff(0), int(1));
            assert_eq!(p.leading(), int(1));
        }
    }

    #[test]
    fn valuative_examples() {
        let fams = [InvariantFamily::Tutte];
        assert!(valuative_identity_suite(1, 1, 2, &fams).unwrap().passed());
        assert!(valuative_identity_suite(1, 1, 3, &[InvariantFamily::Whitney]).unwrap().passed());
        let r = valuative_identity_suite(2, 1, 2, &[InvariantFamily::Ehrhart, InvariantFamily::Kl]).unwrap();
        assert!(r.passed());
        assert_eq!(r.cases.len(), 1);
        assert_eq!(r.notes.len(), 1);
    }

    #[test]
    fn counting_worked_example() {
        let id = counting_identity(&p(&[2, 2, 1, 1])).unwrap();
        let mut per: Vec<Rational> = id.contributions.iter().map(|c| c.per_element.clone()).collect();
        per.sort();
        let mut expected: Vec<Rational> = [6, -8, -2, -2, 3, 2, 2].iter().map(|&v| int(v)).collect();
        expected.sort();
        assert_eq!(per, expected);
        assert_eq!(id.total, int(45));
        assert!(counting_identity_check(&p(&[2, 2, 1, 1])).unwrap().passed());
    }

    #[test]
    fn counting_small_cases() {
        let r = counting_identity(&p(&[1, 1])).unwrap();
        assert_eq!(r.contributions.len(), 1);
        assert_eq!(r.total, int(1));
        let r = counting_identity(&p(&[2, 1])).unwrap();
        assert_eq!(r.total, int(3));
        assert!(counting_identity(&p(&[3])).is_err());
        assert!(counting_suite(7).unwrap().passed());
    }

    #[test]
    fn gap_suites() {
        let r = gap_count_suite(7).unwrap();
        assert!(r.passed());
        let case = r.cases.iter().find(|c| c.instance == "n=7 λ=(3,2,1,1)").unwrap();
        assert_eq!(case.actual, "21");
        let r2 = gap_count_suite(2).unwrap();
        assert_eq!(r2.cases.len(), 3);
        assert_eq!(r2.cases[2].expected, "3");
        assert!(r2.passed());
    }

    #[test]
    fn subdivision_suite_passes() {
        let r = subdivision_suite(1, 1, 2, 1000, 7).unwrap();
        assert!(r.passed());
        assert_eq!(r.seed, Some(7));
    }

    #[test]
    fn tables_match() {
        let r = tables_suite().unwrap();
        assert!(r.passed(), "{:?}", r.failures().collect::<Vec<_>>());
        assert_eq!(r.cases.len(), 24);
    }

    #[test]
    fn golden_rendering() {
        let z = golden_table(InvariantFamily::Z);
        assert_eq!(z[0].render(), "t^2+3t+1");
        assert_eq!(z[5].render(), "t^7+625t^6+7010t^5+20596t^4+...+1");
        assert!(!z[5].matches(&UniPoly::from_ints(&[1, 0, 0, 0, 20596, 7010, 625, 2])));
    }

    #[test]
    fn reports_round_trip() {
        let mut r = gap_count_suite(4).unwrap();
        r.seed = Some(3);
        r.notes.push("note".into());
        let json = serde_json::to_string(&r).unwrap();
        let back: VerifyReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
        let c = counting_identity(&p(&[2, 1, 1])).unwrap();
        let back: CountingIdentity = serde_json::from_str(&serde_json::to_string(&c).unwrap()).unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn oracles_small() {
        let r = oracles_suite(6).unwrap();
        assert!(r.passed());
        assert!(r.cases.len() > 10);
    }
}
