//! Subsets of `[1, m - 1]` packed into one machine word.

use core::fmt;

/// A set of residues in `[1, 63]`; bit `r` stands for residue `r`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ResidueSet(u64);

impl ResidueSet {
    pub const EMPTY: ResidueSet = ResidueSet(0);

    /// The full interval `[1, m - 1]`. Empty for `m <= 1`.
    pub fn full(m: u32) -> Self {
        debug_assert!(m <= crate::MAX_MULTIPLICITY);
        if m <= 1 {
            return Self::EMPTY;
        }
        // bits 1..m-1
        let bits = if m >= 64 { u64::MAX } else { (1u64 << m) - 1 };
        ResidueSet(bits & !1)
    }

    pub const fn from_bits(bits: u64) -> Self {
        ResidueSet(bits & !1)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, r: u32) -> bool {
        r < 64 && self.0 & (1u64 << r) != 0
    }

    pub fn with(self, r: u32) -> Self {
        debug_assert!((1..64).contains(&r));
        ResidueSet(self.0 | (1u64 << r))
    }

    pub fn without(self, r: u32) -> Self {
        debug_assert!((1..64).contains(&r));
        ResidueSet(self.0 & !(1u64 << r))
    }

    pub fn len(self) -> u32 {
        self.0.count_ones()
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: ResidueSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn difference(self, other: ResidueSet) -> ResidueSet {
        ResidueSet(self.0 & !other.0)
    }

    pub fn largest(self) -> Option<u32> {
        if self.0 == 0 {
            None
        } else {
            Some(63 - self.0.leading_zeros())
        }
    }

    /// Residues in increasing order.
    pub fn iter(self) -> Iter {
        Iter(self.0)
    }
}

impl FromIterator<u32> for ResidueSet {
    fn from_iter<I: IntoIterator<Item = u32>>(iter: I) -> Self {
        iter.into_iter().fold(ResidueSet::EMPTY, ResidueSet::with)
    }
}

#[derive(Clone, Debug)]
pub struct Iter(u64);

impl Iterator for Iter {
    type Item = u32;

    fn next(&mut self) -> Option<u32> {
        if self.0 == 0 {
            return None;
        }
        let r = self.0.trailing_zeros();
        self.0 &= self.0 - 1;
        Some(r)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

impl fmt::Debug for ResidueSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;

    #[test]
    fn full_interval() {
        assert!(ResidueSet::full(1).is_empty());
        assert_eq!(ResidueSet::full(5).iter().collect::<Vec<_>>(), [1, 2, 3, 4]);
        assert_eq!(ResidueSet::full(64).len(), 63);
        assert_eq!(ResidueSet::full(64).largest(), Some(63));
    }

    #[test]
    fn subset_and_difference() {
        let a: ResidueSet = [1, 2, 4].into_iter().collect();
        let b: ResidueSet = [1, 4].into_iter().collect();
        assert!(b.is_subset(a));
        assert!(!a.is_subset(b));
        assert_eq!(a.difference(b).iter().collect::<Vec<_>>(), [2]);
        assert_eq!(a.without(4).largest(), Some(2));
    }
}
