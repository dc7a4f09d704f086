//! Bitmask subsets of a ground set `{0, .., n-1}`.
//!
//! Elements are stored 0-based; `Display` and [`Subset::from_labels`] use the
//! 1-based labels `1..=n` that appear in input documents and reports.

use std::fmt;

use serde::{Serialize, Serializer};

/// Largest ground set a [`Subset`] can address.
pub const MAX_ELEMENTS: usize = 32;

/// A subset of `{0, .., n-1}` packed into the bits of a `u32`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Subset(u32);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    #[inline]
    pub const fn from_bits(bits: u32) -> Self {
        Subset(bits)
    }

    #[inline]
    pub const fn bits(self) -> u32 {
        self.0
    }

    /// The table index of this subset.
    #[inline]
    pub const fn index(self) -> usize {
        self.0 as usize
    }

    /// `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        assert!(
            n <= MAX_ELEMENTS,
            "ground set of size {n} exceeds {MAX_ELEMENTS}"
        );
        if n == MAX_ELEMENTS {
            Subset(u32::MAX)
        } else {
            Subset((1u32 << n) - 1)
        }
    }

    #[inline]
    pub fn singleton(e: usize) -> Self {
        debug_assert!(e < MAX_ELEMENTS);
        Subset(1 << e)
    }

    /// Builds a subset from 0-based element indices.
    pub fn from_elements<I: IntoIterator<Item = usize>>(elements: I) -> Self {
        elements
            .into_iter()
            .fold(Subset::EMPTY, |acc, e| acc.with(e))
    }

    /// Builds a subset from 1-based labels, as written in documents.
    ///
    /// Panics on label 0.
    pub fn from_labels(labels: &[usize]) -> Self {
        Subset::from_elements(labels.iter().map(|&l| {
            assert!(l >= 1, "element labels are 1-based");
            l - 1
        }))
    }

    #[inline]
    pub fn contains(self, e: usize) -> bool {
        e < MAX_ELEMENTS && self.0 & (1 << e) != 0
    }

    #[inline]
    #[must_use]
    pub fn with(self, e: usize) -> Self {
        Subset(self.0 | (1 << e))
    }

    #[inline]
    #[must_use]
    pub fn without(self, e: usize) -> Self {
        Subset(self.0 & !(1 << e))
    }

    #[inline]
    #[must_use]
    pub fn union(self, other: Subset) -> Self {
        Subset(self.0 | other.0)
    }

    #[inline]
    #[must_use]
    pub fn intersection(self, other: Subset) -> Self {
        Subset(self.0 & other.0)
    }

    #[inline]
    #[must_use]
    pub fn difference(self, other: Subset) -> Self {
        Subset(self.0 & !other.0)
    }

    /// Complement inside `{0, .., n-1}`.
    #[inline]
    #[must_use]
    pub fn complement(self, n: usize) -> Self {
        Subset(Subset::full(n).0 & !self.0)
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    /// True when every element is below `n`.
    #[inline]
    pub fn fits(self, n: usize) -> bool {
        self.is_subset_of(Subset::full(n))
    }

    /// 0-based elements in increasing order.
    pub fn elements(self) -> Elements {
        Elements(self.0)
    }

    /// 1-based labels in increasing order.
    pub fn labels(self) -> Vec<usize> {
        self.elements().map(|e| e + 1).collect()
    }

    /// Every subset of `{0, .., n-1}` in increasing bitmask order.
    pub fn all(n: usize) -> impl Iterator<Item = Subset> + Clone {
        (0..=Subset::full(n).0 as u64).map(|b| Subset(b as u32))
    }

    /// Every subset of `self`, including the empty set and `self`.
    pub fn subsets(self) -> SubsetsOf {
        SubsetsOf {
            mask: self.0,
            next: Some(0),
        }
    }

    /// Removes element `t` and shifts the higher elements down by one.
    ///
    /// This is the coordinate map from `{0, .., n-1}` to `{0, .., n-2}` used
    /// when an element is deleted, contracted or sliced away.
    #[must_use]
    pub fn squeeze_out(self, t: usize) -> Self {
        let low = self.0 & ((1u32 << t) - 1);
        let high = (self.0 as u64 >> (t + 1)) as u32;
        Subset(low | (high << t))
    }

    /// Inverse of [`Subset::squeeze_out`]: opens a zero slot at position `t`.
    #[must_use]
    pub fn spread_at(self, t: usize) -> Self {
        let low = self.0 & ((1u32 << t) - 1);
        let high = ((self.0 as u64 >> t) << (t + 1)) as u32;
        Subset(low | high)
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, e) in self.elements().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", e + 1)?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Subset {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.labels())
    }
}

#[derive(Clone, Debug)]
pub struct Elements(u32);

impl Iterator for Elements {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let e = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(e)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for Elements {}

/// Submask enumeration in increasing numeric order.
#[derive(Clone, Debug)]
pub struct SubsetsOf {
    mask: u32,
    next: Option<u32>,
}

impl Iterator for SubsetsOf {
    type Item = Subset;

    fn next(&mut self) -> Option<Subset> {
        let cur = self.next?;
        self.next = if cur == self.mask {
            None
        } else {
            // next submask above `cur`
            Some(((cur | !self.mask).wrapping_add(1)) & self.mask)
        };
        Some(Subset(cur))
    }
}
