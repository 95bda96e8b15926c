use std::fmt;

use serde::Serialize;

/// A subset of `[m]` (`m ≤ 32`) as a bitmask; bit `k - 1` stands for `k`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Subset(u32);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn from_bits(bits: u32) -> Self {
        Subset(bits)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    /// `[m]`.
    pub fn full(m: usize) -> Self {
        Subset(if m >= 32 { u32::MAX } else { (1u32 << m) - 1 })
    }

    /// `[a, b]`, empty when `a > b`. Elements below 1 are dropped.
    pub fn range(a: i64, b: i64) -> Self {
        let a = a.max(1);
        if a > b {
            return Subset::EMPTY;
        }
        Subset(Subset::full(b as usize).0 & !Subset::full(a as usize - 1).0)
    }

    pub fn contains(self, k: usize) -> bool {
        k >= 1 && self.0 >> (k - 1) & 1 == 1
    }

    pub fn with(self, k: usize) -> Self {
        Subset(self.0 | 1 << (k - 1))
    }

    pub fn without(self, k: usize) -> Self {
        Subset(self.0 & !(1 << (k - 1)))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: Subset) -> Self {
        Subset(self.0 | other.0)
    }

    pub fn intersection(self, other: Subset) -> Self {
        Subset(self.0 & other.0)
    }

    pub fn difference(self, other: Subset) -> Self {
        Subset(self.0 & !other.0)
    }

    pub fn symmetric_difference(self, other: Subset) -> Self {
        Subset(self.0 ^ other.0)
    }

    /// Largest element, if any.
    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 32 - self.0.leading_zeros() as usize)
    }

    /// Elements in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        (1..=32).filter(move |&k| self.contains(k))
    }

    /// Every subset of `[m]`, by bitmask.
    pub fn all(m: usize) -> impl Iterator<Item = Subset> {
        (0..1u32 << m).map(Subset)
    }
}

impl FromIterator<usize> for Subset {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        iter.into_iter().fold(Subset::EMPTY, Subset::with)
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.iter().map(|k| k.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn basics() {
        let s: Subset = [1, 3].into_iter().collect();
        assert_eq!(s.to_string(), "{1,3}");
        assert_eq!(Subset::EMPTY.to_string(), "{}");
        assert_eq!(Subset::range(2, 4).iter().collect::<Vec<_>>(), vec![2, 3, 4]);
        assert_eq!(Subset::range(0, 1), Subset::from_bits(1));
        assert!(Subset::range(3, 2).is_empty());
        assert_eq!(s.max(), Some(3));
        assert_eq!(Subset::all(3).count(), 8);
        assert_eq!(Subset::full(3).len(), 3);
    }

    proptest! {
        #[test]
        fn set_algebra(a in 0u32..1024, b in 0u32..1024) {
            let (x, y) = (Subset::from_bits(a), Subset::from_bits(b));
            prop_assert_eq!(x.symmetric_difference(y), x.union(y).difference(x.intersection(y)));
            prop_assert!(x.intersection(y).is_subset(x));
            prop_assert_eq!(x.symmetric_difference(y).symmetric_difference(y), x);
            let back: Subset = x.iter().collect();
            prop_assert_eq!(back, x);
        }
    }
}
