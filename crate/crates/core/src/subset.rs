//! Bitmask subsets of a ground set Ω = {1..n}, n ≤ 24.

use crate::Error;

pub const MAX_GROUND: usize = 24;

/// A subset of Ω = {1..n} as a bitmask. Bit `i-1` holds membership of
/// element `i`. Ground sets are capped at 24 elements since every consumer
/// enumerates 2^n subsets.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct SubsetMask {
    n: u8,
    bits: u32,
}

impl SubsetMask {
    pub fn new(n: usize, bits: u32) -> Self {
        assert!(n <= MAX_GROUND, "ground set too large: {n}");
        assert!(
            bits & !Self::full_bits(n) == 0,
            "bits outside ground set of size {n}"
        );
        SubsetMask { n: n as u8, bits }
    }

    pub fn empty(n: usize) -> Self {
        Self::new(n, 0)
    }

    pub fn full(n: usize) -> Self {
        Self::new(n, Self::full_bits(n))
    }

    /// Singleton {element}, 1-based.
    pub fn singleton(n: usize, element: usize) -> Self {
        assert!((1..=n).contains(&element));
        Self::new(n, 1 << (element - 1))
    }

    pub fn from_elements(n: usize, elements: &[usize]) -> Self {
        let mut bits = 0u32;
        for &e in elements {
            assert!((1..=n).contains(&e), "element {e} outside 1..={n}");
            bits |= 1 << (e - 1);
        }
        Self::new(n, bits)
    }

    fn full_bits(n: usize) -> u32 {
        if n == 0 {
            0
        } else {
            (1u32 << n) - 1
        }
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn contains(&self, element: usize) -> bool {
        element >= 1 && element <= self.n() && self.bits >> (element - 1) & 1 == 1
    }

    pub fn insert(&self, element: usize) -> Self {
        assert!((1..=self.n()).contains(&element));
        Self::new(self.n(), self.bits | 1 << (element - 1))
    }

    pub fn remove(&self, element: usize) -> Self {
        assert!((1..=self.n()).contains(&element));
        Self::new(self.n(), self.bits & !(1 << (element - 1)))
    }

    pub fn union(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        Self::new(self.n(), self.bits | other.bits)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        Self::new(self.n(), self.bits & other.bits)
    }

    pub fn complement(&self) -> Self {
        Self::new(self.n(), !self.bits & Self::full_bits(self.n()))
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn elements(&self) -> impl Iterator<Item = usize> + '_ {
        (1..=self.n()).filter(move |&e| self.contains(e))
    }

    /// All 2^n subsets of the ground set, in increasing bit order.
    pub fn all(n: usize) -> impl Iterator<Item = SubsetMask> {
        assert!(n <= MAX_GROUND);
        (0..=Self::full_bits(n)).map(move |bits| SubsetMask::new(n, bits))
    }

    /// All subsets of `self`, in increasing bit order.
    pub fn subsets(&self) -> Vec<SubsetMask> {
        let n = self.n();
        let full = self.bits;
        let mut out = Vec::with_capacity(1 << self.len());
        // standard subset-of-mask walk
        let mut sub = 0u32;
        loop {
            out.push(SubsetMask::new(n, sub));
            if sub == full {
                break;
            }
            sub = (sub.wrapping_sub(full)) & full;
        }
        out.sort();
        out
    }

    /// All k-element subsets of Ω, in increasing bit order.
    pub fn all_of_size(n: usize, k: usize) -> Vec<SubsetMask> {
        SubsetMask::all(n)
            .filter(|m| m.len() == k)
            .collect()
    }

    pub fn check_same_ground(&self, other_n: usize) -> Result<(), Error> {
        if self.n() != other_n {
            Err(Error::DimensionMismatch {
                left: self.n(),
                right: other_n,
            })
        } else {
            Ok(())
        }
    }
}

impl std::fmt::Display for SubsetMask {
    fn fmt(&self, fmt: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(fmt, "{{")?;
        for (i, e) in self.elements().enumerate() {
            if i > 0 {
                write!(fmt, ",")?;
            }
            write!(fmt, "{e}")?;
        }
        write!(fmt, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_set_algebra() {
        let a = SubsetMask::from_elements(4, &[1, 3]);
        let b = SubsetMask::from_elements(4, &[3, 4]);
        assert_eq!(a.union(&b), SubsetMask::from_elements(4, &[1, 3, 4]));
        assert_eq!(a.intersection(&b), SubsetMask::from_elements(4, &[3]));
        assert_eq!(a.complement(), SubsetMask::from_elements(4, &[2, 4]));
        assert_eq!(a.len(), 2);
        assert!(a.is_subset_of(&SubsetMask::full(4)));
        assert!(SubsetMask::empty(4).is_subset_of(&a));
    }

    #[test]
    fn subset_enumeration_counts() {
        assert_eq!(SubsetMask::all(4).count(), 16);
        assert_eq!(SubsetMask::all_of_size(4, 2).len(), 6);
        let m = SubsetMask::from_elements(5, &[2, 4, 5]);
        assert_eq!(m.subsets().len(), 8);
        assert!(m.subsets().iter().all(|s| s.is_subset_of(&m)));
    }

    #[test]
    fn display_form() {
        assert_eq!(SubsetMask::from_elements(4, &[1, 3]).to_string(), "{1,3}");
        assert_eq!(SubsetMask::empty(2).to_string(), "{}");
    }
}
