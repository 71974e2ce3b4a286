//! Fixed-universe bitsets used for element sets of posets and lattices.
//!
//! Sets over the same universe compare as integers (element 0 is the least
//! significant bit), which is the canonical order used everywhere a list of
//! sets must be reproducible.

use std::cmp::Ordering;
use std::fmt;

const BITS: usize = 64;

/// A subset of `{0, .., universe-1}` stored as 64-bit blocks.
///
/// Trailing bits beyond the universe are kept zero, so equality and hashing
/// are plain block comparisons. The universe size itself is not stored; all
/// operations either take it as an argument or combine sets of equal block
/// length.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ElemSet {
    blocks: Box<[u64]>,
}

pub fn blocks_for(universe: usize) -> usize {
    universe.div_ceil(BITS).max(1)
}

impl ElemSet {
    pub fn empty(universe: usize) -> Self {
        ElemSet {
            blocks: vec![0; blocks_for(universe)].into_boxed_slice(),
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = Self::empty(universe);
        for i in 0..universe {
            s.insert(i);
        }
        s
    }

    pub fn singleton(universe: usize, elem: usize) -> Self {
        let mut s = Self::empty(universe);
        s.insert(elem);
        s
    }

    pub fn from_iter(universe: usize, iter: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::empty(universe);
        for i in iter {
            s.insert(i);
        }
        s
    }

    /// Interprets the low bits of `mask` as the members. Universe must be <= 64.
    pub fn from_mask(universe: usize, mask: u64) -> Self {
        debug_assert!(universe <= BITS);
        let mut s = Self::empty(universe);
        s.blocks[0] = mask;
        s
    }

    pub fn as_mask(&self) -> u64 {
        debug_assert!(self.blocks.len() == 1);
        self.blocks[0]
    }

    pub fn insert(&mut self, i: usize) {
        self.blocks[i / BITS] |= 1 << (i % BITS);
    }

    pub fn remove(&mut self, i: usize) {
        self.blocks[i / BITS] &= !(1 << (i % BITS));
    }

    pub fn contains(&self, i: usize) -> bool {
        self.blocks[i / BITS] >> (i % BITS) & 1 == 1
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.iter().all(|&b| b == 0)
    }

    pub fn len(&self) -> usize {
        self.blocks.iter().map(|b| b.count_ones() as usize).sum()
    }

    pub fn union(&self, other: &ElemSet) -> ElemSet {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn intersect(&self, other: &ElemSet) -> ElemSet {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &ElemSet) -> ElemSet {
        self.zip_with(other, |a, b| a & !b)
    }

    pub fn union_in_place(&mut self, other: &ElemSet) {
        for (a, b) in self.blocks.iter_mut().zip(other.blocks.iter()) {
            *a |= b;
        }
    }

    pub fn is_subset(&self, other: &ElemSet) -> bool {
        self.blocks
            .iter()
            .zip(other.blocks.iter())
            .all(|(a, b)| a & !b == 0)
    }

    pub fn intersects(&self, other: &ElemSet) -> bool {
        self.blocks
            .iter()
            .zip(other.blocks.iter())
            .any(|(a, b)| a & b != 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.blocks.iter().enumerate().flat_map(|(bi, &block)| {
            let mut b = block;
            std::iter::from_fn(move || {
                if b == 0 {
                    None
                } else {
                    let t = b.trailing_zeros() as usize;
                    b &= b - 1;
                    Some(bi * BITS + t)
                }
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    fn zip_with(&self, other: &ElemSet, f: impl Fn(u64, u64) -> u64) -> ElemSet {
        debug_assert_eq!(self.blocks.len(), other.blocks.len());
        ElemSet {
            blocks: self
                .blocks
                .iter()
                .zip(other.blocks.iter())
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }
}

impl Ord for ElemSet {
    fn cmp(&self, other: &Self) -> Ordering {
        // integer order: most significant block decides
        self.blocks.iter().rev().cmp(other.blocks.iter().rev())
    }
}

impl PartialOrd for ElemSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// A dense boolean square matrix, used for order relations.
#[derive(Clone, PartialEq, Eq)]
pub struct Relation {
    n: usize,
    row_blocks: usize,
    bits: Box<[u64]>,
}

impl Relation {
    pub fn new(n: usize) -> Self {
        let row_blocks = blocks_for(n);
        Relation {
            n,
            row_blocks,
            bits: vec![0; n * row_blocks].into_boxed_slice(),
        }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn set(&mut self, i: usize, j: usize) {
        self.bits[i * self.row_blocks + j / BITS] |= 1 << (j % BITS);
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.row_blocks + j / BITS] >> (j % BITS) & 1 == 1
    }

    /// The row `{j : (i, j) in R}` as a set.
    pub fn row(&self, i: usize) -> ElemSet {
        ElemSet {
            blocks: self.bits[i * self.row_blocks..(i + 1) * self.row_blocks].into(),
        }
    }

    pub fn row_is_subset(&self, i: usize, set: &ElemSet) -> bool {
        self.bits[i * self.row_blocks..(i + 1) * self.row_blocks]
            .iter()
            .zip(set.blocks.iter())
            .all(|(a, b)| a & !b == 0)
    }

    pub fn row_intersects(&self, i: usize, set: &ElemSet) -> bool {
        self.bits[i * self.row_blocks..(i + 1) * self.row_blocks]
            .iter()
            .zip(set.blocks.iter())
            .any(|(a, b)| a & b != 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_ops() {
        let a = ElemSet::from_iter(10, [1, 3, 7]);
        let b = ElemSet::from_iter(10, [3, 4]);
        assert_eq!(a.union(&b).to_vec(), vec![1, 3, 4, 7]);
        assert_eq!(a.intersect(&b).to_vec(), vec![3]);
        assert_eq!(a.difference(&b).to_vec(), vec![1, 7]);
        assert!(!a.is_subset(&b));
        assert!(ElemSet::from_iter(10, [3]).is_subset(&b));
        assert_eq!(a.len(), 3);
    }

    #[test]
    fn integer_order_across_blocks() {
        let lo = ElemSet::from_iter(100, [0, 63]);
        let hi = ElemSet::from_iter(100, [64]);
        assert!(lo < hi);
        assert!(ElemSet::empty(100) < lo);
    }
}
