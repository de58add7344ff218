//! Partitions, compositions and the counting numbers that appear in the partition-sum
//! formula and its proof.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Sorts `parts` decreasingly. Zero parts are rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidArgument("partition parts must be positive".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The integer being partitioned.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts, ℓ(λ).
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `(part, multiplicity)` pairs in decreasing order of part.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// `z_λ = Π i^{α_i} α_i!` where `α_i` counts the parts equal to `i`.
    pub fn z_value(&self) -> BigInt {
        self.multiplicities()
            .into_iter()
            .fold(BigInt::one(), |acc, (part, mult)| {
                acc * BigInt::from(part).pow(mult as u32) * factorial(mult)
            })
    }

    /// Number of distinct orderings of the parts, `ℓ! / Π α_i!`.
    pub fn perm_count(&self) -> BigInt {
        let denom = self
            .multiplicities()
            .into_iter()
            .fold(BigInt::one(), |acc, (_, mult)| acc * factorial(mult));
        factorial(self.len()) / denom
    }

    /// Size of the conjugacy class of cycle type λ in the symmetric group, `n! / z_λ`.
    pub fn cycle_class_size(&self) -> BigInt {
        factorial(self.size()) / self.z_value()
    }

    /// Whether `other` is a rearrangement of the same multiset of parts.
    pub fn same_parts(&self, parts: &[usize]) -> bool {
        let mut sorted = parts.to_vec();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        sorted == self.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.parts)
    }
}

/// An ordered sequence of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidArgument("composition parts must be positive".into()));
        }
        Ok(Self { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Least `m ≥ 1` such that rotating the composition by `m` places leaves it unchanged,
    /// i.e. the number of distinct cyclic shifts. Always divides the length.
    pub fn least_period(&self) -> usize {
        let k = self.parts.len();
        (1..k)
            .find(|&m| (0..k).all(|i| self.parts[i] == self.parts[(i + m) % k]))
            .unwrap_or(k)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.parts)
    }
}

fn write_parts(f: &mut fmt::Formatter<'_>, parts: &[usize]) -> fmt::Result {
    f.write_str("(")?;
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{p}")?;
    }
    f.write_str(")")
}

/// All partitions of `n` in reverse-lexicographic order, e.g. `(4),(3,1),(2,2),(2,1,1),(1,1,1,1)`.
///
/// `n = 0` yields the single empty partition.
pub fn partitions(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    extend_partitions(n, n, &mut current, &mut out);
    out
}

fn extend_partitions(remaining: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition { parts: current.clone() });
        return;
    }
    for part in (1..=max_part.min(remaining)).rev() {
        current.push(part);
        extend_partitions(remaining - part, part, current, out);
        current.pop();
    }
}

/// Circular gap partition of a nonempty `A ⊆ [n]`.
///
/// With `A = {a_1 < ... < a_r}` on a circle of length `n`, the parts are
/// `a_2 - a_1, ..., a_r - a_{r-1}, n - a_r + a_1`, sorted decreasingly.
pub fn gap_partition(subset: &[usize], n: usize) -> Result<Partition> {
    if subset.is_empty() {
        return Err(Error::EmptySubset);
    }
    let mut a = subset.to_vec();
    a.sort_unstable();
    a.dedup();
    if let Some(&bad) = a.iter().find(|&&x| x == 0 || x > n) {
        return Err(Error::OutOfRange { element: bad, ground: n });
    }
    let mut gaps: Vec<usize> = a.windows(2).map(|w| w[1] - w[0]).collect();
    gaps.push(n - a[a.len() - 1] + a[0]);
    Partition::new(gaps)
}

/// `(n / ℓ(λ)) · p(λ)`: the number of subsets of `[n]` whose gap partition is λ.
pub fn gap_subset_count(n: usize, lambda: &Partition) -> Result<BigInt> {
    if lambda.size() != n || lambda.is_empty() {
        return Err(Error::InvalidArgument(format!("{lambda} is not a partition of {n}")));
    }
    let numer = BigInt::from(n) * lambda.perm_count();
    let (q, r) = numer.div_rem(&BigInt::from(lambda.len()));
    if !r.is_zero() {
        return Err(Error::InvalidArgument(format!(
            "gap count for {lambda} of {n} is not an integer"
        )));
    }
    Ok(q)
}

/// A refinement `σ = σ^1 · σ^2 ⋯ σ^ℓ` of a partition λ where each block `σ^i ⊢ λ_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Refinement {
    pub composition: Composition,
    pub blocks: Vec<Partition>,
}

/// All refinements of λ obtained by concatenating a partition of each part, in order.
pub fn refinements(lambda: &Partition) -> Vec<Refinement> {
    let mut out: Vec<Vec<Partition>> = vec![Vec::new()];
    for &part in lambda.parts() {
        let options = partitions(part);
        out = out
            .into_iter()
            .flat_map(|prefix| {
                options.iter().map(move |p| {
                    let mut next = prefix.clone();
                    next.push(p.clone());
                    next
                })
            })
            .collect();
    }
    out.into_iter()
        .map(|blocks| {
            let parts = blocks.iter().flat_map(|b| b.parts().iter().copied()).collect();
            Refinement {
                composition: Composition { parts },
                blocks,
            }
        })
        .collect()
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// Binomial coefficient extended to a negative upper index by `C(n,k) = (-1)^k C(k-n-1,k)`.
/// Zero when `k < 0` or `0 ≤ n < k`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    if n < 0 {
        let magnitude = binomial(k - n - 1, k);
        return if k % 2 == 0 { magnitude } else { -magnitude };
    }
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `(Σ parts)! / Π parts!`
pub fn multinomial(parts: &[usize]) -> BigInt {
    let total: usize = parts.iter().sum();
    parts
        .iter()
        .fold(factorial(total), |acc, &p| acc / factorial(p))
}

/// Eulerian number `A(n, k)`: permutations of `[n]` with exactly `k - 1` descents.
/// Zero outside `1 ≤ k ≤ n`.
pub fn eulerian(n: usize, k: usize) -> BigInt {
    if k == 0 || k > n {
        return BigInt::zero();
    }
    // row[k] holds A(m, k) for the current m
    let mut row = vec![BigInt::zero(); n + 2];
    row[1] = BigInt::one();
    for m in 2..=n {
        let mut next = vec![BigInt::zero(); n + 2];
        for j in 1..=m {
            next[j] = BigInt::from(j) * &row[j] + BigInt::from(m + 1 - j) * &row[j - 1];
        }
        row = next;
    }
    row[k].clone()
}

/// Stirling number of the second kind `S(r, k)`.
pub fn stirling2(r: usize, k: usize) -> BigInt {
    let mut row = vec![BigInt::zero(); k + 1];
    row[0] = BigInt::one();
    for _ in 0..r {
        for j in (1..=k).rev() {
            row[j] = BigInt::from(j) * &row[j] + &row[j - 1];
        }
        row[0] = BigInt::zero();
    }
    row[k].clone()
}
