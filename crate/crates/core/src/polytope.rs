//! Exact halfspace systems for matroid polytopes and the cyclically rotated Catalan
//! systems, with rational membership, lattice-point counting and Ehrhart interpolation.
//!
//! Every system lives in the cube `0 ≤ x ≤ 1` (scaled by the dilation) on the hyperplane
//! `Σx = k`, and adds lower bounds `Σ_{i∈I} x_i ≥ j` over circular intervals `I`.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::exactalg::{big, interpolate_consecutive, Rational, UniPoly};
use crate::matroid::{MatroidExpr, SchubertSpec};
use crate::{Error, Result};

/// `Σ_{i∈I} x_i ≥ lower` over the circular interval `I = {start, ..., start+len-1} mod dim`
/// (0-based coordinates).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IntervalBound {
    pub start: usize,
    pub len: usize,
    pub lower: usize,
}

impl IntervalBound {
    pub fn indices(&self, dim: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).map(move |i| (self.start + i) % dim)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrefixSystem {
    dim: usize,
    target: usize,
    constraints: Vec<IntervalBound>,
}

impl PrefixSystem {
    /// Bounds that hold trivially (`lower = 0` or the interval is the whole circle) are
    /// dropped; duplicates are merged.
    pub fn new(dim: usize, target: usize, constraints: Vec<IntervalBound>) -> Result<Self> {
        if target > dim {
            return Err(Error::InvalidArgument(format!("target {target} exceeds dimension {dim}")));
        }
        let mut kept = Vec::new();
        for c in constraints {
            if c.len == 0 || c.len > dim || c.start >= dim {
                return Err(Error::InvalidArgument(format!("bad interval {c:?} for dimension {dim}")));
            }
            if c.lower == 0 || c.len == dim {
                continue;
            }
            kept.push(c);
        }
        kept.sort();
        kept.dedup();
        Ok(Self { dim, target, constraints: kept })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn constraints(&self) -> &[IntervalBound] {
        &self.constraints
    }

    /// Conjunction of two systems on the same hyperplane.
    pub fn intersect(&self, other: &PrefixSystem) -> Result<Self> {
        if self.dim != other.dim || self.target != other.target {
            return Err(Error::DimensionMismatch { expected: self.dim, got: other.dim });
        }
        let mut constraints = self.constraints.clone();
        constraints.extend(other.constraints.iter().cloned());
        Self::new(self.dim, self.target, constraints)
    }

    /// Membership of `x` in the `t`-th dilate.
    pub fn contains(&self, x: &[Rational], t: &Rational) -> Result<bool> {
        if x.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, got: x.len() });
        }
        if x.iter().any(|v| v.is_negative() || v > t) {
            return Ok(false);
        }
        let total: Rational = x.iter().sum();
        if total != t * big(self.target) {
            return Ok(false);
        }
        Ok(self.constraints.iter().all(|c| {
            let s: Rational = c.indices(self.dim).map(|i| &x[i]).sum();
            s >= t * big(c.lower)
        }))
    }

    pub fn contains_integral(&self, x: &[i64]) -> Result<bool> {
        let v: Vec<Rational> = x.iter().map(|&c| big(c)).collect();
        self.contains(&v, &Rational::one())
    }

    /// Number of integer points in the `t`-th dilate.
    ///
    /// Each bound becomes a difference constraint on prefix sums `P_0 = 0, ..., P_d = tk`;
    /// coordinates are fixed left to right while remembering only the prefix sums that
    /// some later constraint still refers to.
    pub fn lattice_points(&self, t: u64) -> BigInt {
        let t = t as i64;
        let d = self.dim;
        let total = t * self.target as i64;
        if d == 0 {
            return BigInt::from(u8::from(total == 0));
        }
        let diffs = self.difference_constraints(t);
        // active[i]: prefix positions j in 1..i referenced by a constraint ending after i
        let active: Vec<Vec<usize>> = (0..=d)
            .map(|i| {
                let mut v: Vec<usize> = diffs
                    .iter()
                    .filter(|c| c.lo >= 1 && c.lo < i && c.hi > i)
                    .map(|c| c.lo)
                    .collect();
                v.sort_unstable();
                v.dedup();
                v
            })
            .collect();
        let mut ending: Vec<Vec<&DiffConstraint>> = vec![Vec::new(); d + 1];
        for c in &diffs {
            ending[c.hi].push(c);
        }

        // state key: [P_i, P_j for j in active[i]]
        let mut layer: HashMap<Vec<i64>, u128> = HashMap::from([(vec![0], 1)]);
        for i in 0..d {
            let mut next: HashMap<Vec<i64>, u128> = HashMap::new();
            let remaining_after = (d - i - 1) as i64;
            for (state, count) in &layer {
                let p_i = state[0];
                let lookup = |j: usize| -> i64 {
                    if j == 0 {
                        0
                    } else if j == i {
                        p_i
                    } else {
                        let pos = active[i].binary_search(&j).expect("active prefix");
                        state[1 + pos]
                    }
                };
                for x in 0..=t {
                    let p_next = p_i + x;
                    if p_next > total || total - p_next > t * remaining_after {
                        continue;
                    }
                    let ok = ending[i + 1].iter().all(|c| {
                        let diff = p_next - lookup(c.lo);
                        c.min.is_none_or(|m| diff >= m) && c.max.is_none_or(|m| diff <= m)
                    });
                    if !ok {
                        continue;
                    }
                    let mut key = Vec::with_capacity(1 + active[i + 1].len());
                    key.push(p_next);
                    key.extend(active[i + 1].iter().map(|&j| lookup(j)));
                    *next.entry(key).or_insert(0) += count;
                }
            }
            layer = next;
        }
        BigInt::from(layer.values().sum::<u128>())
    }

    fn difference_constraints(&self, t: i64) -> Vec<DiffConstraint> {
        let d = self.dim;
        let k = self.target as i64;
        self.constraints
            .iter()
            .map(|c| {
                let end = c.start + c.len;
                let lower = t * c.lower as i64;
                if end <= d {
                    DiffConstraint { lo: c.start, hi: end, min: Some(lower), max: None }
                } else {
                    // (P_d - P_start) + P_{end-d} ≥ lower  ⇔  P_start - P_{end-d} ≤ tk - lower
                    DiffConstraint { lo: end - d, hi: c.start, min: None, max: Some(t * k - lower) }
                }
            })
            .collect()
    }

    /// Lattice points of the `t`-th dilate by plain enumeration of `{0..t}^d ∩ {Σx = tk}`,
    /// checking each point with [`PrefixSystem::contains`].
    pub fn lattice_points_bruteforce(&self, t: u64) -> BigInt {
        let mut count = 0u64;
        let mut x = vec![0i64; self.dim];
        let total = t as i64 * self.target as i64;
        let tr = big(t as i64);
        fn go(sys: &PrefixSystem, x: &mut Vec<i64>, i: usize, left: i64, t: i64, tr: &Rational, count: &mut u64) {
            if i == x.len() {
                if left == 0 {
                    let v: Vec<Rational> = x.iter().map(|&c| big(c)).collect();
                    if sys.contains(&v, tr).expect("dims match") {
                        *count += 1;
                    }
                }
                return;
            }
            let rest = (x.len() - i - 1) as i64;
            for v in 0..=t.min(left) {
                if left - v > rest * t {
                    continue;
                }
                x[i] = v;
                go(sys, x, i + 1, left - v, t, tr, count);
            }
            x[i] = 0;
        }
        go(self, &mut x, 0, total, t as i64, &tr, &mut count);
        BigInt::from(count)
    }

    /// Integer points at dilation 1, as 0/1 vectors, in lexicographic order.
    pub fn vertices_01(&self) -> Vec<Vec<i64>> {
        let mut out = Vec::new();
        for mask in 0..1u64 << self.dim {
            if mask.count_ones() as usize != self.target {
                continue;
            }
            let x: Vec<i64> = (0..self.dim).map(|i| (mask >> i & 1) as i64).collect();
            if self.contains_integral(&x).expect("dims match") {
                out.push(x);
            }
        }
        out.sort();
        out
    }
}

impl fmt::Display for PrefixSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "dim {} sum {}", self.dim, self.target)?;
        for c in &self.constraints {
            write!(f, "; [{}+{}) >= {}", c.start, c.len, c.lower)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
struct DiffConstraint {
    lo: usize,
    hi: usize,
    min: Option<i64>,
    max: Option<i64>,
}

/// `P(SM_n(S)) = {Σx = k, Σ_{i ≤ s_j} x_i ≥ j for j = 1..k} ∩ [0,1]^n`.
pub fn system_of_schubert(spec: &SchubertSpec) -> PrefixSystem {
    let constraints = spec
        .set()
        .iter()
        .enumerate()
        .map(|(j, &s)| IntervalBound { start: 0, len: s, lower: j + 1 })
        .collect();
    PrefixSystem::new(spec.ground(), spec.rank(), constraints).expect("valid Schubert spec")
}

#[derive(Clone, Copy, Debug)]
enum Bound {
    AtLeast(usize),
    AtMost(usize),
}

/// Non-wrapping interval bounds in local coordinates, valid together with `Σx = rank`.
struct LocalSystem {
    ground: usize,
    rank: usize,
    bounds: Vec<(usize, usize, Bound)>,
}

fn local_system(m: &MatroidExpr) -> LocalSystem {
    match m {
        MatroidExpr::Uniform { rank, ground } => LocalSystem { ground: *ground, rank: *rank, bounds: Vec::new() },
        MatroidExpr::Schubert(spec) => LocalSystem {
            ground: spec.ground(),
            rank: spec.rank(),
            bounds: spec
                .set()
                .iter()
                .enumerate()
                .map(|(j, &s)| (0, s, Bound::AtLeast(j + 1)))
                .collect(),
        },
        MatroidExpr::Dual(inner) => {
            // P(M*) = 1 - P(M)
            let inner = local_system(inner);
            let bounds = inner
                .bounds
                .into_iter()
                .map(|(s, len, b)| match b {
                    Bound::AtLeast(j) => (s, len, Bound::AtMost(len - j)),
                    Bound::AtMost(j) => (s, len, Bound::AtLeast(len - j)),
                })
                .collect();
            LocalSystem { ground: inner.ground, rank: inner.ground - inner.rank, bounds }
        }
        MatroidExpr::DirectSum(blocks) => {
            let mut bounds = Vec::new();
            let mut offset = 0;
            let mut rank = 0;
            for block in blocks {
                let local = local_system(block);
                bounds.extend(local.bounds.iter().map(|&(s, len, b)| (s + offset, len, b)));
                bounds.push((offset, local.ground, Bound::AtLeast(local.rank)));
                bounds.push((offset, local.ground, Bound::AtMost(local.rank)));
                offset += local.ground;
                rank += local.rank;
            }
            LocalSystem { ground: offset, rank, bounds }
        }
    }
}

/// Halfspace system for any [`MatroidExpr`]; upper bounds on an interval become lower
/// bounds on its circular complement.
pub fn system_of_matroid(m: &MatroidExpr) -> PrefixSystem {
    let local = local_system(m);
    let d = local.ground;
    let k = local.rank;
    let constraints = local
        .bounds
        .into_iter()
        .filter_map(|(start, len, b)| match b {
            Bound::AtLeast(j) => Some(IntervalBound { start, len, lower: j }),
            Bound::AtMost(_) if len == d => None,
            Bound::AtMost(j) => Some(IntervalBound {
                start: (start + len) % d,
                len: d - len,
                lower: k - j,
            }),
        })
        .collect();
    PrefixSystem::new(d, k, constraints).expect("valid matroid system")
}

fn check_abn(a: usize, b: usize, n: usize) -> Result<()> {
    if a == 0 || b == 0 || n == 0 {
        return Err(Error::InvalidArgument("a, b, n must be positive".into()));
    }
    Ok(())
}

/// The uniform system `{Σx = nb} ∩ [0,1]^{n(a+b)}`.
pub fn uniform_system(a: usize, b: usize, n: usize) -> Result<PrefixSystem> {
    check_abn(a, b, n)?;
    PrefixSystem::new(n * (a + b), n * b, Vec::new())
}

/// The Catalan system rotated by `shift` blocks of size `a+b`:
/// `Σ_{i ∈ [(a+b)j] + (a+b)·shift} x_i ≥ jb` for `j = 1..n-1`, indices taken cyclically.
pub fn rotated_catalan_system(a: usize, b: usize, n: usize, shift: usize) -> Result<PrefixSystem> {
    check_abn(a, b, n)?;
    if shift >= n {
        return Err(Error::InvalidArgument(format!("shift {shift} out of range 0..{n}")));
    }
    let block = a + b;
    let constraints = (1..n)
        .map(|j| IntervalBound { start: block * shift, len: block * j, lower: b * j })
        .collect();
    PrefixSystem::new(n * block, n * b, constraints)
}

/// `Q(A)`: the intersection of the rotated systems with shifts `j - 1` for `j ∈ A ⊆ [n]`.
pub fn q_system(subset: &[usize], a: usize, b: usize, n: usize) -> Result<PrefixSystem> {
    check_abn(a, b, n)?;
    if subset.is_empty() {
        return Err(Error::EmptySubset);
    }
    let mut sys = uniform_system(a, b, n)?;
    for &j in subset {
        if j == 0 || j > n {
            return Err(Error::OutOfRange { element: j, ground: n });
        }
        sys = sys.intersect(&rotated_catalan_system(a, b, n, j - 1)?)?;
    }
    Ok(sys)
}

/// A run of `len` consecutive blocks of size `a+b`, starting at block `start` (0-based),
/// wrapping around the circle.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CircularBlock {
    pub start: usize,
    pub len: usize,
}

/// The circular pieces cut by `A ⊆ [n]`; `Q(A)` is the product of the Catalan polytopes
/// `P(C_len^{a,b})` placed on these pieces.
pub fn q_blocks(subset: &[usize], n: usize) -> Result<Vec<CircularBlock>> {
    if subset.is_empty() {
        return Err(Error::EmptySubset);
    }
    let mut a = subset.to_vec();
    a.sort_unstable();
    a.dedup();
    let r = a.len();
    Ok((0..r)
        .map(|i| {
            let len = if i + 1 < r { a[i + 1] - a[i] } else { n - a[r - 1] + a[0] };
            CircularBlock { start: a[i] - 1, len }
        })
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EhrhartResult {
    pub poly: UniPoly,
    pub dim: usize,
    pub leading: Rational,
}

/// Counts lattice points at `t = 0..=degree_hint`, interpolates, and checks the result
/// against a fresh count at `t = degree_hint + 1`.
pub fn ehrhart_interpolate(sys: &PrefixSystem, degree_hint: usize) -> Result<EhrhartResult> {
    let values: Vec<Rational> = (0..=degree_hint as u64)
        .map(|t| Rational::from_integer(sys.lattice_points(t)))
        .collect();
    let poly = interpolate_consecutive(&values);
    let check_at = degree_hint + 1;
    let predicted = poly.evaluate(&big(check_at as i64));
    if predicted != Rational::from_integer(sys.lattice_points(check_at as u64)) {
        return Err(Error::DegreeHintTooSmall { degree: degree_hint, node: check_at });
    }
    let dim = poly.degree().unwrap_or(0);
    let leading = poly.leading();
    Ok(EhrhartResult { poly, dim, leading })
}

/// Ehrhart polynomial of a matroid polytope, whose dimension is ground minus the number of
/// connected components. The block count of the expression is used as that number, which
/// is exact for direct sums of connected blocks.
pub fn ehrhart_of_matroid(m: &MatroidExpr) -> Result<EhrhartResult> {
    let sys = system_of_matroid(m);
    ehrhart_interpolate(&sys, m.ground().saturating_sub(m.block_count()))
}

/// Lattice-relative volume: the leading Ehrhart coefficient.
pub fn volume_from_ehrhart(e: &EhrhartResult) -> Rational {
    e.leading.clone()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubdivisionFailure {
    pub point: Vec<String>,
    pub uniform: i64,
    pub signed_sum: i64,
    pub covered: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubdivisionReport {
    pub a: usize,
    pub b: usize,
    pub n: usize,
    pub seed: u64,
    pub random_points: usize,
    pub vertex_points: usize,
    pub failures: Vec<SubdivisionFailure>,
}

impl SubdivisionReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Random rational point of `{Σx = target} ∩ [0,1]^dim` with common denominator ≤ 64.
///
/// Numerators are drawn coordinate by coordinate from the range that keeps the remaining
/// sum feasible, then the coordinates are shuffled.
pub fn sample_point(rng: &mut impl Rng, dim: usize, target: usize) -> Vec<Rational> {
    let q: i64 = rng.gen_range(1..=64);
    let mut left = target as i64 * q;
    let mut numers = Vec::with_capacity(dim);
    for i in 0..dim {
        let rest = (dim - i - 1) as i64;
        let lo = (left - rest * q).max(0);
        let hi = left.min(q);
        let v = rng.gen_range(lo..=hi);
        numers.push(v);
        left -= v;
    }
    for i in (1..dim).rev() {
        let j = rng.gen_range(0..=i);
        numers.swap(i, j);
    }
    numers.into_iter().map(|v| Rational::new(v.into(), q.into())).collect()
}

/// Pointwise check of `1_{P(U)} = Σ_{∅≠A⊆[n]} (-1)^{|A|-1} 1_{Q(A)}` together with the
/// covering `P(U) = ∪_m P(C_{n,m})`, at `trials` seeded random points plus every 0/1
/// vertex of the uniform polytope.
pub fn subdivision_check(a: usize, b: usize, n: usize, trials: usize, seed: u64) -> Result<SubdivisionReport> {
    let uniform = uniform_system(a, b, n)?;
    if uniform.dim() > 16 {
        return Err(Error::InvalidArgument(format!("ground {} too large to sample", uniform.dim())));
    }
    let rotations: Vec<PrefixSystem> = (0..n)
        .map(|m| rotated_catalan_system(a, b, n, m))
        .collect::<Result<_>>()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points: Vec<Vec<Rational>> = (0..trials)
        .map(|_| sample_point(&mut rng, uniform.dim(), uniform.target()))
        .collect();
    let vertices = uniform.vertices_01();
    let vertex_points = vertices.len();
    points.extend(vertices.into_iter().map(|v| v.into_iter().map(big).collect()));

    let one = Rational::one();
    let mut failures = Vec::new();
    for x in &points {
        let in_uniform = uniform.contains(x, &one)?;
        let membership: Vec<bool> = rotations
            .iter()
            .map(|sys| sys.contains(x, &one))
            .collect::<Result<_>>()?;
        let mut signed = 0i64;
        for mask in 1u32..1 << n {
            if (0..n).all(|m| mask >> m & 1 == 0 || membership[m]) {
                signed += if mask.count_ones() % 2 == 1 { 1 } else { -1 };
            }
        }
        let covered = membership.iter().any(|&m| m);
        let lhs = i64::from(in_uniform);
        if lhs != signed || covered != in_uniform {
            failures.push(SubdivisionFailure {
                point: x.iter().map(crate::exactalg::format_rational).collect(),
                uniform: lhs,
                signed_sum: signed,
                covered,
            });
        }
    }
    Ok(SubdivisionReport { a, b, n, seed, random_points: trials, vertex_points, failures })
}

/// Whether `x` lies in the product of Catalan polytopes on the circular pieces cut by `A`,
/// each piece pinned to its share `len·b` of the total.
pub fn in_block_product(subset: &[usize], a: usize, b: usize, n: usize, x: &[Rational]) -> Result<bool> {
    let block = a + b;
    let d = n * block;
    if x.len() != d {
        return Err(Error::DimensionMismatch { expected: d, got: x.len() });
    }
    for piece in q_blocks(subset, n)? {
        let local: Vec<Rational> = (0..piece.len * block)
            .map(|i| x[(piece.start * block + i) % d].clone())
            .collect();
        let sys = system_of_schubert(&crate::matroid::catalan_matroid(a, b, piece.len)?);
        if !sys.contains(&local, &Rational::one())? {
            return Ok(false);
        }
    }
    Ok(true)
}
