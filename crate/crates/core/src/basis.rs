//! Subset/bitmask combinatorics indexing the spin-wave sector bases.
//!
//! Basis states of the `r` sector are the `r`-element subsets of the vertex
//! set, held as single-word bitmasks and addressed by colexicographic rank:
//! for `S = {s_1 < ... < s_r}` the rank is `sum_j C(s_j, j)`, a closed-form
//! bijection onto `[0, C(v,r))` that needs no lookup tables per element.

use std::fmt;
use std::sync::LazyLock;

use crate::error::{Error, Result};

/// Hard cap on lattice size so every subset fits one 64-bit word.
pub const MAX_VERTICES: usize = 64;

static BINOMIAL: LazyLock<Vec<Vec<u64>>> = LazyLock::new(|| {
    let n = MAX_VERTICES + 1;
    let mut table = vec![vec![0u64; n]; n];
    table[0][0] = 1;
    // Pascal's triangle; all C(n,k) with n <= 64 fit in u64, and the checked
    // add guards that claim rather than assuming it.
    for i in 1..n {
        let (prev, rest) = table.split_at_mut(i);
        let prev = &prev[i - 1];
        let row = &mut rest[0];
        row[0] = 1;
        for k in 1..=i {
            row[k] = prev[k - 1]
                .checked_add(if k <= i - 1 { prev[k] } else { 0 })
                .expect("binomial table overflow");
        }
    }
    table
});

/// `C(n, k)`; zero when `k > n`. Panics if `n` exceeds [`MAX_VERTICES`].
pub fn binomial(n: usize, k: usize) -> u64 {
    assert!(n <= MAX_VERTICES, "binomial argument {n} exceeds vertex cap");
    if k > n {
        0
    } else {
        BINOMIAL[n][k]
    }
}

/// Dimension of the `r` spin-wave sector on `v` vertices, `C(v,r)`.
pub fn sector_dimension(v: usize, r: usize) -> usize {
    binomial(v, r) as usize
}

/// A subset of vertex positions, bit `i` set iff vertex `i` is in the set
/// (spin up at `i`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subset(u64);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn from_bits(bits: u64) -> Self {
        Subset(bits)
    }

    pub fn from_members<I: IntoIterator<Item = usize>>(members: I) -> Self {
        let mut bits = 0u64;
        for m in members {
            assert!(m < MAX_VERTICES, "vertex {m} exceeds the bitmask cap");
            bits |= 1 << m;
        }
        Subset(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn cardinality(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, i: usize) -> bool {
        i < MAX_VERTICES && self.0 >> i & 1 == 1
    }

    /// Toggles membership of both `i` and `j`: the image of the basis state
    /// under the swap operator on an edge with exactly one endpoint inside.
    pub fn swap_pair(self, i: usize, j: usize) -> Self {
        Subset(self.0 ^ (1 << i) ^ (1 << j))
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: Subset) -> Self {
        Subset(self.0 | other.0)
    }

    /// Members in ascending order.
    pub fn members(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (n, m) in self.members().enumerate() {
            if n > 0 {
                write!(f, ",")?;
            }
            write!(f, "{m}")?;
        }
        write!(f, "}}")
    }
}

/// Colexicographic rank of `s` among subsets of its own cardinality:
/// `sum_j C(s_j, j)` over sorted members `s_1 < ... < s_r`.
pub fn colex_rank(s: Subset) -> usize {
    let mut rank = 0u64;
    for (j, m) in s.members().enumerate() {
        rank += binomial(m, j + 1);
    }
    rank as usize
}

/// Rank of `s` in the `r` sector; errors if `s` has the wrong cardinality.
pub fn rank(s: Subset, r: usize) -> Result<usize> {
    let found = s.cardinality();
    if found != r {
        return Err(Error::CardinalityMismatch { expected: r, found });
    }
    Ok(colex_rank(s))
}

/// Inverse of [`rank`]: the `index`-th `r`-subset of `[0, v)` in colex order.
pub fn unrank(index: usize, v: usize, r: usize) -> Result<Subset> {
    let dim = sector_dimension(v, r);
    if index >= dim {
        return Err(Error::IndexOutOfRange { index, dim });
    }
    let mut remaining = index as u64;
    let mut bits = 0u64;
    let mut bound = v;
    for j in (1..=r).rev() {
        // Largest c < bound with C(c, j) <= remaining.
        let mut c = bound - 1;
        while binomial(c, j) > remaining {
            c -= 1;
        }
        remaining -= binomial(c, j);
        bits |= 1 << c;
        bound = c;
    }
    Ok(Subset(bits))
}

fn low_mask(r: usize) -> u64 {
    if r == 0 {
        0
    } else {
        u64::MAX >> (64 - r)
    }
}

/// Gosper's hack: next `r`-bit pattern in ascending numeric (= colex) order.
fn next_pattern(x: u64) -> u64 {
    let c = x & x.wrapping_neg();
    let r = x + c;
    (((r ^ x) >> 2) / c) | r
}

/// All `r`-subsets of `[0, v)` in colexicographic order.
pub fn subsets(v: usize, r: usize) -> impl Iterator<Item = Subset> {
    let total = if r <= v { sector_dimension(v, r) } else { 0 };
    let mut current = low_mask(r);
    let mut produced = 0usize;
    std::iter::from_fn(move || {
        if produced == total {
            return None;
        }
        let out = Subset(current);
        produced += 1;
        if produced < total {
            current = next_pattern(current);
        }
        Some(out)
    })
}

/// All `k`-subsets of `s`, in colex order of positions within `s`. Yields
/// exactly `C(#s, k)` subsets; empty if `k > #s`.
pub fn subsets_of(s: Subset, k: usize) -> impl Iterator<Item = Subset> {
    let members: Vec<usize> = s.members().collect();
    let total = if k <= members.len() {
        binomial(members.len(), k) as usize
    } else {
        0
    };
    let mut compressed = low_mask(k);
    let mut produced = 0usize;
    std::iter::from_fn(move || {
        if produced == total {
            return None;
        }
        let mut bits = 0u64;
        let mut pattern = compressed;
        while pattern != 0 {
            let t = pattern.trailing_zeros() as usize;
            bits |= 1 << members[t];
            pattern &= pattern - 1;
        }
        produced += 1;
        if produced < total {
            compressed = next_pattern(compressed);
        }
        Some(Subset(bits))
    })
}

/// Indexing descriptor for one spin-wave sector: `r`-subsets of `v` vertices
/// addressed by colex rank.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SectorBasis {
    v: usize,
    r: usize,
    dim: usize,
}

impl SectorBasis {
    pub fn new(v: usize, r: usize) -> Result<Self> {
        if v > MAX_VERTICES || r > v {
            return Err(Error::SectorOutOfRange { r, v });
        }
        Ok(SectorBasis {
            v,
            r,
            dim: sector_dimension(v, r),
        })
    }

    pub fn vertices(&self) -> usize {
        self.v
    }

    pub fn sector(&self) -> usize {
        self.r
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self, s: Subset) -> Result<usize> {
        rank(s, self.r)
    }

    pub fn unrank(&self, index: usize) -> Result<Subset> {
        unrank(index, self.v, self.r)
    }

    pub fn iter(&self) -> impl Iterator<Item = Subset> {
        subsets(self.v, self.r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(0, 0), 1);
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(10, 5), 252);
        assert_eq!(binomial(10, 4), 210);
        assert_eq!(binomial(5, 6), 0);
        assert_eq!(binomial(64, 32), 1_832_624_140_942_590_534);
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(Subset::from_members([0, 1]), 2).unwrap(), 0);
        assert_eq!(rank(Subset::from_members([1, 2]), 2).unwrap(), 2);
        assert_eq!(rank(Subset::from_members([2, 3]), 2).unwrap(), 5);
        assert!(matches!(
            rank(Subset::from_members([0, 1]), 3),
            Err(Error::CardinalityMismatch {
                expected: 3,
                found: 2
            })
        ));
    }

    #[test]
    fn unrank_examples() {
        assert_eq!(unrank(0, 4, 2).unwrap(), Subset::from_members([0, 1]));
        assert_eq!(unrank(5, 4, 2).unwrap(), Subset::from_members([2, 3]));
        assert!(matches!(
            unrank(6, 4, 2),
            Err(Error::IndexOutOfRange { index: 6, dim: 6 })
        ));
    }

    #[test]
    fn roundtrip_all_20_subsets() {
        for k in 0..binomial(6, 3) as usize {
            let s = unrank(k, 6, 3).unwrap();
            assert_eq!(s.cardinality(), 3);
            assert_eq!(rank(s, 3).unwrap(), k);
        }
    }

    #[test]
    fn iteration_matches_rank_order() {
        for v in 0..=10 {
            for r in 0..=v {
                let mut prev_bits = None;
                for (k, s) in subsets(v, r).enumerate() {
                    assert_eq!(colex_rank(s), k);
                    assert_eq!(unrank(k, v, r).unwrap(), s);
                    // colex rank is strictly monotone in numeric bitmask order
                    if let Some(p) = prev_bits {
                        assert!(s.bits() > p);
                    }
                    prev_bits = Some(s.bits());
                }
                assert_eq!(subsets(v, r).count(), sector_dimension(v, r));
            }
        }
    }

    #[test]
    fn sector_dimensions_partition_hilbert_space() {
        for v in 0..=16 {
            let total: u64 = (0..=v).map(|r| binomial(v, r)).sum();
            assert_eq!(total, 1u64 << v);
        }
    }

    #[test]
    fn subsets_of_examples() {
        let s = Subset::from_members([0, 1, 2]);
        let got: Vec<Subset> = subsets_of(s, 2).collect();
        assert_eq!(
            got,
            vec![
                Subset::from_members([0, 1]),
                Subset::from_members([0, 2]),
                Subset::from_members([1, 2]),
            ]
        );

        let s = Subset::from_members([0, 1]);
        let got: Vec<Subset> = subsets_of(s, 2).collect();
        assert_eq!(got, vec![s]);

        assert_eq!(subsets_of(s, 3).count(), 0);
    }

    #[test]
    fn subsets_of_sparse_members() {
        let s = Subset::from_members([1, 4, 9, 33]);
        let got: Vec<Subset> = subsets_of(s, 2).collect();
        assert_eq!(got.len(), 6);
        for t in &got {
            assert!(t.is_subset_of(s));
            assert_eq!(t.cardinality(), 2);
        }
    }

    #[test]
    fn full_sector_edge_cases() {
        assert_eq!(subsets(0, 0).collect::<Vec<_>>(), vec![Subset::EMPTY]);
        assert_eq!(unrank(0, 5, 0).unwrap(), Subset::EMPTY);
        let full = unrank(0, 5, 5).unwrap();
        assert_eq!(full, Subset::from_members([0, 1, 2, 3, 4]));
    }

    proptest! {
        #[test]
        fn rank_unrank_roundtrip(v in 1usize..=20, bits in any::<u64>()) {
            let s = Subset::from_bits(bits & low_mask(v));
            let r = s.cardinality();
            let k = rank(s, r).unwrap();
            prop_assert!(k < sector_dimension(v, r));
            prop_assert_eq!(unrank(k, v, r).unwrap(), s);
        }

        #[test]
        fn subsets_of_counts(bits in any::<u64>(), k in 0usize..=8) {
            let s = Subset::from_bits(bits & low_mask(16));
            let n = subsets_of(s, k).count();
            prop_assert_eq!(n as u64, binomial(s.cardinality(), k));
            let mut seen = std::collections::HashSet::new();
            for t in subsets_of(s, k) {
                prop_assert!(t.is_subset_of(s));
                prop_assert_eq!(t.cardinality(), k);
                prop_assert!(seen.insert(t.bits()));
            }
        }
    }
}
