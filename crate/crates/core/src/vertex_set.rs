use std::cmp::Ordering;
use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

/// A subset of `0..universe` with bitset semantics.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    bits: FixedBitSet,
}

impl VertexSet {
    pub fn empty(universe: usize) -> Self {
        VertexSet {
            bits: FixedBitSet::with_capacity(universe),
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(universe);
        bits.insert_range(..);
        VertexSet { bits }
    }

    /// Rejects members outside `0..universe`. Duplicates are ignored.
    pub fn from_members<I: IntoIterator<Item = usize>>(universe: usize, members: I) -> Result<Self> {
        let mut s = VertexSet::empty(universe);
        for v in members {
            if v >= universe {
                return Err(Error::InvalidInput(format!(
                    "vertex {v} out of range for a graph on {universe} vertices"
                )));
            }
            s.bits.insert(v);
        }
        Ok(s)
    }

    /// Members are the set bits of `mask`; requires `universe <= 64`.
    pub fn from_mask(universe: usize, mask: u64) -> Self {
        debug_assert!(universe <= 64);
        debug_assert!(universe == 64 || mask >> universe == 0);
        let mut s = VertexSet::empty(universe);
        let mut m = mask;
        while m != 0 {
            s.bits.insert(m.trailing_zeros() as usize);
            m &= m - 1;
        }
        s
    }

    pub fn to_mask(&self) -> Option<u64> {
        if self.universe() > 64 {
            return None;
        }
        Some(self.iter().fold(0u64, |m, v| m | (1 << v)))
    }

    pub fn universe(&self) -> usize {
        self.bits.len()
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.bits.contains(v)
    }

    pub fn insert(&mut self, v: usize) {
        self.bits.insert(v);
    }

    pub fn remove(&mut self, v: usize) {
        self.bits.set(v, false);
    }

    /// Members in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.ones()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut bits = self.bits.clone();
        bits.union_with(&other.bits);
        VertexSet { bits }
    }

    /// `universe \ self`.
    pub fn complement(&self) -> VertexSet {
        let mut bits = self.bits.clone();
        bits.toggle_range(..);
        VertexSet { bits }
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.bits.is_subset(&other.bits)
    }

    /// Lexicographic order on the sorted member lists (a proper prefix sorts first).
    pub fn lex_cmp(&self, other: &VertexSet) -> Ordering {
        self.iter().cmp(other.iter())
    }

    /// Space-separated sorted members.
    pub fn to_list_string(&self) -> String {
        let v: Vec<String> = self.iter().map(|v| v.to_string()).collect();
        v.join(" ")
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// `a` precedes `b` in lexicographic order of sorted member lists.
///
/// Let `d` be the smallest element in exactly one of them. Both agree below
/// `d`; the set holding `d` is smaller unless the other set has nothing
/// above `d`, in which case the other set is a proper prefix.
#[inline]
pub fn mask_lex_less(a: u64, b: u64) -> bool {
    let diff = a ^ b;
    if diff == 0 {
        return false;
    }
    let d = diff.trailing_zeros();
    let above = if d == 63 { 0 } else { u64::MAX << (d + 1) };
    if a & (1 << d) != 0 {
        b & above != 0
    } else {
        a & above == 0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn membership_and_range() {
        let s = VertexSet::from_members(5, [4, 1, 1]).unwrap();
        assert_eq!(s.to_vec(), vec![1, 4]);
        assert_eq!(s.len(), 2);
        assert!(VertexSet::from_members(3, [3]).is_err());
        assert_eq!(s.complement().to_vec(), vec![0, 2, 3]);
    }

    #[test]
    fn lex_examples() {
        let a = VertexSet::from_members(4, [0, 3]).unwrap();
        let b = VertexSet::from_members(4, [1, 2]).unwrap();
        assert_eq!(a.lex_cmp(&b), Ordering::Less);
        assert!(mask_lex_less(0b1001, 0b0110));
        // {0} is a prefix of {0, 1}
        assert!(mask_lex_less(0b01, 0b11));
        assert!(!mask_lex_less(0b11, 0b01));
        // the empty set precedes everything
        assert!(mask_lex_less(0, 0b100));
    }

    proptest! {
        #[test]
        fn mask_lex_matches_list_order(a in 0u64..1 << 12, b in 0u64..1 << 12) {
            let sa = VertexSet::from_mask(12, a);
            let sb = VertexSet::from_mask(12, b);
            prop_assert_eq!(mask_lex_less(a, b), sa.lex_cmp(&sb) == Ordering::Less);
            prop_assert_eq!(sa.to_mask(), Some(a));
        }
    }
}
