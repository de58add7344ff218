//! Structural matroids: uniform, Schubert (which includes every (a,b)-Catalan matroid),
//! duals and direct sums.
//!
//! Ground sets are `[n] = {1, ..., n}` with `n ≤ 64`; subsets are bitmasks. Rank of a
//! Schubert matroid is computed by the box-filling rule, which needs no basis list, so
//! rank queries work on any ground size. Enumerations (bases, flats) are guarded by caps.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

pub const DEFAULT_BASIS_CAP: usize = 20;
pub const DEFAULT_FLAT_CAP: usize = 14;
pub const MAX_GROUND: usize = 64;

/// A subset of `[n]`, stored as a bitmask with bit `i - 1` marking element `i`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroundSubset(u64);

impl GroundSubset {
    pub fn empty() -> Self {
        Self(0)
    }

    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_GROUND);
        if n == MAX_GROUND {
            Self(u64::MAX)
        } else {
            Self((1u64 << n) - 1)
        }
    }

    pub fn from_mask(mask: u64) -> Self {
        Self(mask)
    }

    pub fn mask(self) -> u64 {
        self.0
    }

    /// Elements must lie in `1..=64`.
    pub fn from_elements(elements: &[usize]) -> Result<Self> {
        let mut mask = 0u64;
        for &e in elements {
            if e == 0 || e > MAX_GROUND {
                return Err(Error::OutOfRange { element: e, ground: MAX_GROUND });
            }
            mask |= 1 << (e - 1);
        }
        Ok(Self(mask))
    }

    pub fn contains(self, element: usize) -> bool {
        (1..=MAX_GROUND).contains(&element) && self.0 >> (element - 1) & 1 == 1
    }

    pub fn with(self, element: usize) -> Self {
        Self(self.0 | 1 << (element - 1))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn max_element(self) -> Option<usize> {
        (self.0 != 0).then(|| 64 - self.0.leading_zeros() as usize)
    }

    /// Ascending elements.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let bit = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(bit + 1)
        })
    }

    pub fn elements(self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn union(self, other: Self) -> Self {
        Self(self.0 | other.0)
    }

    pub fn complement(self, n: usize) -> Self {
        Self(!self.0 & Self::full(n).0)
    }

    pub fn is_subset_of(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Relabels `i ↦ i + offset`.
    pub fn shifted_up(self, offset: usize) -> Self {
        Self(self.0 << offset)
    }

    /// Restriction to `offset+1 ..= offset+len`, relabelled to `1..=len`.
    pub fn window(self, offset: usize, len: usize) -> Self {
        Self((self.0 >> offset) & Self::full(len).0)
    }
}

impl fmt::Display for GroundSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, e) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

/// `|T| = |S|` and the i-th smallest element of `T` is at most the i-th smallest of `S`.
pub fn dominates(t: GroundSubset, s: GroundSubset) -> bool {
    t.len() == s.len() && t.iter().zip(s.iter()).all(|(a, b)| a <= b)
}

/// A Schubert matroid `SM_n(S)` given by the run lengths of the indicator vector of `S`,
/// which alternates `0^{r_1} 1^{r_2} ... 0^{r_{2m-1}} 1^{r_{2m}}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SchubertSpec {
    runs: Vec<usize>,
    set: Vec<usize>,
}

impl SchubertSpec {
    pub fn from_runs(runs: &[usize]) -> Result<Self> {
        if runs.is_empty() || runs.len() % 2 != 0 {
            return Err(Error::InvalidRunEncoding(format!(
                "expected a nonempty even number of runs, got {}",
                runs.len()
            )));
        }
        if runs.contains(&0) {
            return Err(Error::InvalidRunEncoding("runs must be positive".into()));
        }
        let mut set = Vec::new();
        let mut pos = 0;
        for pair in runs.chunks(2) {
            pos += pair[0];
            set.extend(pos + 1..=pos + pair[1]);
            pos += pair[1];
        }
        if pos > MAX_GROUND {
            return Err(Error::InvalidRunEncoding(format!("ground size {pos} exceeds {MAX_GROUND}")));
        }
        Ok(Self { runs: runs.to_vec(), set })
    }

    pub fn runs(&self) -> &[usize] {
        &self.runs
    }

    /// Sorted elements of `S`.
    pub fn set(&self) -> &[usize] {
        &self.set
    }

    pub fn subset(&self) -> GroundSubset {
        GroundSubset::from_elements(&self.set).expect("validated at construction")
    }

    pub fn ground(&self) -> usize {
        self.runs.iter().sum()
    }

    pub fn rank(&self) -> usize {
        self.set.len()
    }

    /// Size of the filling of the boxes at rows `S` by `order`: each element goes into the
    /// topmost empty box whose row is at least the element, or is dropped.
    pub fn filling_size(&self, order: &[usize]) -> usize {
        let mut filled = vec![false; self.set.len()];
        let mut count = 0;
        for &w in order {
            let start = self.set.partition_point(|&s| s < w);
            if let Some(slot) = (start..self.set.len()).find(|&i| !filled[i]) {
                filled[slot] = true;
                count += 1;
            }
        }
        count
    }
}

/// The (a,b)-Catalan matroid: run lengths `(a, b, a, b, ..., a, b)` with `2n` runs,
/// on ground `[n(a+b)]` with rank `nb`.
pub fn catalan_matroid(a: usize, b: usize, n: usize) -> Result<SchubertSpec> {
    if a == 0 || b == 0 || n == 0 {
        return Err(Error::InvalidArgument("a, b, n must be positive".into()));
    }
    let runs: Vec<usize> = std::iter::repeat_n([a, b], n).flatten().collect();
    SchubertSpec::from_runs(&runs)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MatroidExpr {
    Uniform { rank: usize, ground: usize },
    Schubert(SchubertSpec),
    /// Blocks laid out consecutively on the ground set.
    DirectSum(Vec<MatroidExpr>),
    Dual(Box<MatroidExpr>),
}

impl MatroidExpr {
    pub fn uniform(rank: usize, ground: usize) -> Result<Self> {
        if rank > ground || ground > MAX_GROUND {
            return Err(Error::InvalidArgument(format!("U_{{{rank},{ground}}} is not a valid uniform matroid")));
        }
        Ok(Self::Uniform { rank, ground })
    }

    pub fn schubert(spec: SchubertSpec) -> Self {
        Self::Schubert(spec)
    }

    pub fn catalan(a: usize, b: usize, n: usize) -> Result<Self> {
        catalan_matroid(a, b, n).map(Self::Schubert)
    }

    pub fn direct_sum(blocks: Vec<MatroidExpr>) -> Result<Self> {
        if blocks.is_empty() {
            return Err(Error::InvalidArgument("direct sum needs at least one block".into()));
        }
        let ground: usize = blocks.iter().map(MatroidExpr::ground).sum();
        if ground > MAX_GROUND {
            return Err(Error::InvalidArgument(format!("ground size {ground} exceeds {MAX_GROUND}")));
        }
        Ok(Self::DirectSum(blocks))
    }

    /// Matroid whose bases are the complements of the bases of `self`.
    pub fn dual(&self) -> Self {
        match self {
            Self::Uniform { rank, ground } => Self::Uniform { rank: ground - rank, ground: *ground },
            Self::DirectSum(blocks) => Self::DirectSum(blocks.iter().map(Self::dual).collect()),
            Self::Dual(inner) => (**inner).clone(),
            Self::Schubert(_) => Self::Dual(Box::new(self.clone())),
        }
    }

    pub fn ground(&self) -> usize {
        match self {
            Self::Uniform { ground, .. } => *ground,
            Self::Schubert(spec) => spec.ground(),
            Self::DirectSum(blocks) => blocks.iter().map(Self::ground).sum(),
            Self::Dual(inner) => inner.ground(),
        }
    }

    /// Rank of the whole matroid.
    pub fn total_rank(&self) -> usize {
        match self {
            Self::Uniform { rank, .. } => *rank,
            Self::Schubert(spec) => spec.rank(),
            Self::DirectSum(blocks) => blocks.iter().map(Self::total_rank).sum(),
            Self::Dual(inner) => inner.ground() - inner.total_rank(),
        }
    }

    /// Number of direct-sum blocks at the top level (1 for anything else).
    pub fn block_count(&self) -> usize {
        match self {
            Self::DirectSum(blocks) => blocks.iter().map(Self::block_count).sum(),
            _ => 1,
        }
    }

    pub fn rank(&self, t: GroundSubset) -> Result<usize> {
        let n = self.ground();
        if let Some(max) = t.max_element().filter(|&m| m > n) {
            return Err(Error::OutOfRange { element: max, ground: n });
        }
        Ok(self.rank_of(t))
    }

    fn rank_of(&self, t: GroundSubset) -> usize {
        match self {
            Self::Uniform { rank, .. } => t.len().min(*rank),
            Self::Schubert(spec) => spec.filling_size(&t.elements()),
            Self::DirectSum(blocks) => {
                let mut offset = 0;
                let mut total = 0;
                for block in blocks {
                    let g = block.ground();
                    total += block.rank_of(t.window(offset, g));
                    offset += g;
                }
                total
            }
            Self::Dual(inner) => {
                let n = inner.ground();
                t.len() + inner.rank_of(t.complement(n)) - inner.total_rank()
            }
        }
    }

    pub fn is_basis(&self, t: GroundSubset) -> bool {
        t.len() == self.total_rank() && self.rank_of(t) == t.len()
    }

    /// All bases in lexicographic order of their sorted element lists.
    pub fn enumerate_bases(&self) -> Result<Vec<GroundSubset>> {
        self.enumerate_bases_capped(DEFAULT_BASIS_CAP)
    }

    pub fn enumerate_bases_capped(&self, cap: usize) -> Result<Vec<GroundSubset>> {
        let n = self.ground();
        if n > cap {
            return Err(Error::EnumerationTooLarge { ground: n, cap });
        }
        let mut bases = self.bases_unchecked();
        bases.sort_by_key(|b| b.elements());
        Ok(bases)
    }

    fn bases_unchecked(&self) -> Vec<GroundSubset> {
        match self {
            Self::Uniform { rank, ground } => {
                let mut out = Vec::new();
                combinations(*ground, *rank, &mut |mask| out.push(GroundSubset(mask)));
                out
            }
            Self::Schubert(spec) => {
                let mut out = Vec::new();
                dominated_subsets(spec.set(), 0, 1, 0, &mut out);
                out
            }
            Self::DirectSum(blocks) => {
                let mut acc = vec![GroundSubset::empty()];
                let mut offset = 0;
                for block in blocks {
                    let block_bases = block.bases_unchecked();
                    acc = acc
                        .iter()
                        .flat_map(|prefix| {
                            block_bases
                                .iter()
                                .map(move |b| prefix.union(b.shifted_up(offset)))
                        })
                        .collect();
                    offset += block.ground();
                }
                acc
            }
            Self::Dual(inner) => {
                let n = inner.ground();
                inner.bases_unchecked().into_iter().map(|b| b.complement(n)).collect()
            }
        }
    }

    /// `{x : rk(A ∪ {x}) = rk(A)}`
    pub fn closure(&self, a: GroundSubset) -> Result<GroundSubset> {
        let base = self.rank(a)?;
        let mut out = a;
        for x in 1..=self.ground() {
            if !a.contains(x) && self.rank_of(a.with(x)) == base {
                out = out.with(x);
            }
        }
        Ok(out)
    }

    fn is_flat(&self, f: GroundSubset) -> bool {
        let r = self.rank_of(f);
        (1..=self.ground()).all(|x| f.contains(x) || self.rank_of(f.with(x)) > r)
    }

    /// Whitney numbers of the second kind `W_0, ..., W_k`: flats counted by rank.
    pub fn flats_by_rank(&self) -> Result<Vec<u64>> {
        self.flats_by_rank_capped(DEFAULT_FLAT_CAP)
    }

    pub fn flats_by_rank_capped(&self, cap: usize) -> Result<Vec<u64>> {
        let n = self.ground();
        if n > cap {
            return Err(Error::EnumerationTooLarge { ground: n, cap });
        }
        let mut counts = vec![0u64; self.total_rank() + 1];
        for mask in 0..1u64 << n {
            let f = GroundSubset(mask);
            if self.is_flat(f) {
                counts[self.rank_of(f)] += 1;
            }
        }
        Ok(counts)
    }
}

impl fmt::Display for MatroidExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Uniform { rank, ground } => write!(f, "U({rank},{ground})"),
            Self::Schubert(spec) => write!(f, "SM{:?}", spec.runs()),
            Self::DirectSum(blocks) => {
                for (i, b) in blocks.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" ⊕ ")?;
                    }
                    write!(f, "{b}")?;
                }
                Ok(())
            }
            Self::Dual(inner) => write!(f, "({inner})*"),
        }
    }
}

/// Calls `emit` with every `k`-subset mask of `[n]`.
fn combinations(n: usize, k: usize, emit: &mut impl FnMut(u64)) {
    fn go(start: usize, n: usize, left: usize, mask: u64, emit: &mut impl FnMut(u64)) {
        if left == 0 {
            emit(mask);
            return;
        }
        for e in start..=n + 1 - left {
            go(e + 1, n, left - 1, mask | 1 << (e - 1), emit);
        }
    }
    if k <= n {
        go(1, n, k, 0, emit);
    }
}

/// Subsets `{t_1 < ... < t_k}` with `t_i ≤ s_i`.
fn dominated_subsets(s: &[usize], i: usize, min: usize, mask: u64, out: &mut Vec<GroundSubset>) {
    if i == s.len() {
        out.push(GroundSubset(mask));
        return;
    }
    for t in min..=s[i] {
        dominated_subsets(s, i + 1, t + 1, mask | 1 << (t - 1), out);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn set(elements: &[usize]) -> GroundSubset {
        GroundSubset::from_elements(elements).unwrap()
    }

    fn c(a: usize, b: usize, n: usize) -> MatroidExpr {
        MatroidExpr::catalan(a, b, n).unwrap()
    }

    fn u(k: usize, n: usize) -> MatroidExpr {
        MatroidExpr::uniform(k, n).unwrap()
    }

    /// Rank straight from the definition: max |T ∩ B| over enumerated bases.
    fn rank_from_bases(bases: &[GroundSubset], t: GroundSubset) -> usize {
        bases.iter().map(|b| (b.mask() & t.mask()).count_ones() as usize).max().unwrap_or(0)
    }

    fn sample_matroids() -> Vec<MatroidExpr> {
        let mut out = vec![u(2, 4), u(1, 3), u(3, 5), u(0, 2), u(3, 3)];
        for (a, b, n) in [(1, 1, 1), (1, 1, 2), (1, 1, 3), (1, 1, 4), (1, 1, 5), (2, 1, 2), (1, 2, 2), (2, 2, 2), (3, 1, 2), (1, 3, 1)] {
            out.push(c(a, b, n));
        }
        for runs in [&[1usize, 1, 2, 1, 1, 3][..], &[3, 2], &[1, 1, 1, 2], &[2, 1, 1, 2]] {
            out.push(MatroidExpr::schubert(SchubertSpec::from_runs(runs).unwrap()));
        }
        out.push(MatroidExpr::direct_sum(vec![u(2, 4), u(1, 2)]).unwrap());
        out.push(MatroidExpr::direct_sum(vec![c(1, 1, 2), u(1, 3)]).unwrap());
        out.push(c(1, 1, 3).dual());
        out.push(MatroidExpr::direct_sum(vec![c(1, 2, 1).dual(), c(1, 1, 2)]).unwrap());
        out
    }

    #[test]
    fn run_encoding() {
        let spec = SchubertSpec::from_runs(&[1, 1, 2, 1, 1, 3]).unwrap();
        assert_eq!(spec.set(), &[2, 5, 7, 8, 9]);
        assert_eq!((spec.ground(), spec.rank()), (9, 5));
        let spec = SchubertSpec::from_runs(&[1, 1, 1, 1]).unwrap();
        assert_eq!((spec.set(), spec.ground(), spec.rank()), (&[2usize, 4][..], 4, 2));
        let spec = SchubertSpec::from_runs(&[3, 2]).unwrap();
        assert_eq!((spec.set(), spec.ground(), spec.rank()), (&[4usize, 5][..], 5, 2));
        assert!(matches!(SchubertSpec::from_runs(&[1, 2, 3]), Err(Error::InvalidRunEncoding(_))));
        assert!(matches!(SchubertSpec::from_runs(&[1, 0]), Err(Error::InvalidRunEncoding(_))));
        assert!(matches!(SchubertSpec::from_runs(&[]), Err(Error::InvalidRunEncoding(_))));
    }

    #[test]
    fn catalan_specs() {
        assert_eq!(catalan_matroid(1, 1, 2).unwrap().runs(), &[1, 1, 1, 1]);
        assert_eq!(catalan_matroid(1, 1, 2).unwrap().set(), &[2, 4]);
        assert_eq!(catalan_matroid(2, 3, 1).unwrap().set(), &[3, 4, 5]);
        let c3 = catalan_matroid(1, 1, 3).unwrap();
        assert_eq!((c3.ground(), c3.rank()), (6, 3));
        assert!(catalan_matroid(0, 1, 1).is_err());
    }

    #[test]
    fn dominance() {
        assert!(dominates(set(&[1, 3]), set(&[2, 4])));
        assert!(!dominates(set(&[3, 4]), set(&[2, 4])));
        assert!(dominates(set(&[2, 4]), set(&[2, 4])));
        assert!(!dominates(set(&[1]), set(&[2, 4])));
    }

    #[test]
    fn filling_rank_matches_figure() {
        let spec = SchubertSpec::from_runs(&[1, 1, 1, 3, 1, 1]).unwrap();
        assert_eq!(spec.set(), &[2, 4, 5, 6, 8]);
        assert_eq!(spec.filling_size(&[6, 7, 1, 8, 5]), 4);
        let m = MatroidExpr::schubert(spec);
        assert_eq!(m.rank(set(&[1, 5, 6, 7, 8])).unwrap(), 4);
        assert_eq!(m.rank(GroundSubset::empty()).unwrap(), 0);
        assert_eq!(m.rank(GroundSubset::full(8)).unwrap(), 5);
        assert!(matches!(m.rank(set(&[9])), Err(Error::OutOfRange { element: 9, ground: 8 })));
    }

    #[test]
    fn filling_rank_is_order_independent() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for runs in [&[1usize, 1, 1, 3, 1, 1][..], &[1, 1, 2, 1, 1, 3], &[2, 1, 2, 1, 2, 1]] {
            let spec = SchubertSpec::from_runs(runs).unwrap();
            for mask in 0..1u64 << spec.ground() {
                let mut order = GroundSubset::from_mask(mask).elements();
                let expected = spec.filling_size(&order);
                for _ in 0..20 {
                    order.shuffle(&mut rng);
                    assert_eq!(spec.filling_size(&order), expected);
                }
            }
        }
    }

    #[test]
    fn basis_lists() {
        let bases = c(1, 1, 2).enumerate_bases().unwrap();
        let lists: Vec<_> = bases.iter().map(|b| b.elements()).collect();
        assert_eq!(lists, vec![vec![1, 2], vec![1, 3], vec![1, 4], vec![2, 3], vec![2, 4]]);
        assert_eq!(u(2, 3).enumerate_bases().unwrap().len(), 3);
        assert_eq!(c(1, 1, 3).enumerate_bases().unwrap().len(), 14);
        // brute-force dominance filter over the power set
        let s = set(&[2, 4, 6]);
        let brute = (0..1u64 << 6).filter(|&m| dominates(GroundSubset::from_mask(m), s)).count();
        assert_eq!(brute, 14);
        let counts: Vec<usize> = (1..=4).map(|n| c(1, 1, n).enumerate_bases().unwrap().len()).collect();
        assert_eq!(counts, vec![2, 5, 14, 42]);
        assert!(matches!(
            c(1, 1, 11).enumerate_bases(),
            Err(Error::EnumerationTooLarge { ground: 22, cap: 20 })
        ));
    }

    #[test]
    fn closures_and_flats() {
        assert_eq!(c(1, 1, 2).closure(set(&[3])).unwrap(), set(&[3, 4]));
        assert_eq!(u(2, 4).flats_by_rank().unwrap(), vec![1, 4, 1]);
        assert_eq!(c(1, 1, 2).flats_by_rank().unwrap(), vec![1, 3, 1]);
        assert!(matches!(c(1, 1, 8).flats_by_rank(), Err(Error::EnumerationTooLarge { .. })));
    }

    #[test]
    fn duals() {
        assert_eq!(u(2, 4).dual(), u(2, 4));
        assert_eq!(u(1, 3).dual(), u(2, 3));
        let m = c(1, 1, 2);
        assert_eq!(m.dual().dual(), m);
        let bases: Vec<_> = m.enumerate_bases().unwrap();
        let dual_bases = m.dual().enumerate_bases().unwrap();
        let mut complements: Vec<_> = bases.iter().map(|b| b.complement(4)).collect();
        complements.sort_by_key(|b| b.elements());
        assert_eq!(dual_bases, complements);
        // dual rank formula agrees with rank computed from the dual's bases
        let d = c(1, 2, 2).dual();
        let db = d.enumerate_bases().unwrap();
        for mask in 0..1u64 << 6 {
            let t = GroundSubset::from_mask(mask);
            assert_eq!(d.rank(t).unwrap(), rank_from_bases(&db, t));
        }
    }

    #[test]
    fn direct_sums() {
        let s = MatroidExpr::direct_sum(vec![u(1, 2), u(1, 2)]).unwrap();
        assert_eq!((s.ground(), s.total_rank()), (4, 2));
        assert_eq!(s.enumerate_bases().unwrap().len(), 4);
        let single = MatroidExpr::direct_sum(vec![u(2, 4)]).unwrap();
        assert_eq!(single.enumerate_bases().unwrap(), u(2, 4).enumerate_bases().unwrap());
        let s = MatroidExpr::direct_sum(vec![u(2, 4), u(1, 2)]).unwrap();
        assert_eq!(s.enumerate_bases().unwrap().len(), 12);
        assert!(MatroidExpr::direct_sum(vec![]).is_err());
    }

    #[test]
    fn rank_agrees_with_bases() {
        for m in sample_matroids() {
            if m.ground() > 10 {
                continue;
            }
            let bases = m.enumerate_bases().unwrap();
            let r = m.total_rank();
            for b in &bases {
                assert_eq!(m.rank(*b).unwrap(), r, "{m} basis {b}");
            }
            for mask in 0..1u64 << m.ground() {
                let t = GroundSubset::from_mask(mask);
                let rk = m.rank(t).unwrap();
                assert_eq!(rk, rank_from_bases(&bases, t), "{m} subset {t}");
            }
        }
    }

    #[test]
    fn basis_exchange() {
        for m in sample_matroids() {
            if m.ground() > 8 {
                continue;
            }
            let bases = m.enumerate_bases().unwrap();
            for a in &bases {
                for b in &bases {
                    for x in a.iter().filter(|&x| !b.contains(x)) {
                        let ok = b.iter().filter(|&y| !a.contains(y)).any(|y| {
                            let swapped = GroundSubset::from_mask(a.mask() & !(1 << (x - 1))).with(y);
                            bases.contains(&swapped)
                        });
                        assert!(ok, "{m}: exchange fails for {a}, {b}, {x}");
                    }
                }
            }
        }
    }

    #[test]
    fn flats_start_and_end_with_one() {
        for m in sample_matroids() {
            if m.ground() > 10 {
                continue;
            }
            let w = m.flats_by_rank().unwrap();
            assert_eq!(w.first(), Some(&1), "{m}");
            assert_eq!(w.last(), Some(&1), "{m}");
        }
    }

    #[test]
    fn catalan_is_loopless_and_coloopless() {
        for (a, b, n) in [(1, 1, 1), (1, 1, 2), (1, 1, 3), (1, 1, 4), (1, 1, 5), (2, 1, 2), (1, 2, 2), (2, 2, 2), (3, 1, 2), (1, 4, 2), (2, 3, 2)] {
            let m = c(a, b, n);
            let bases = m.enumerate_bases().unwrap();
            let union = bases.iter().fold(0u64, |acc, b| acc | b.mask());
            let coverage = bases.iter().fold(0u64, |acc, b| acc | !b.mask());
            assert_eq!(union, GroundSubset::full(m.ground()).mask());
            assert_eq!(coverage & GroundSubset::full(m.ground()).mask(), GroundSubset::full(m.ground()).mask());
        }
    }
}
