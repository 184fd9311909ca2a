use std::fmt;

/// Largest element label a [`Subset`] can hold.
pub const MAX_LABEL: u8 = 31;

/// A finite set of labels in `0..=31`, stored as a bitmask (bit `i` is label `i`).
///
/// The numeric order of the mask is the colexicographic ("reverse lexicographic")
/// order on subsets, which is what the revlex basis encoding walks through.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Subset(pub u32);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn singleton(label: u8) -> Subset {
        debug_assert!(label <= MAX_LABEL);
        Subset(1 << label)
    }

    /// `{1, ..., n}`.
    pub fn range(n: usize) -> Subset {
        debug_assert!(n <= MAX_LABEL as usize);
        Subset(((1u64 << (n + 1)) - 2) as u32)
    }

    pub fn from_labels<I: IntoIterator<Item = u8>>(labels: I) -> Subset {
        labels.into_iter().fold(Subset::EMPTY, |acc, l| acc.with(l))
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, label: u8) -> bool {
        label <= MAX_LABEL && self.0 & (1 << label) != 0
    }

    pub fn with(self, label: u8) -> Subset {
        Subset(self.0 | (1 << label))
    }

    pub fn without(self, label: u8) -> Subset {
        Subset(self.0 & !(1 << label))
    }

    pub fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    pub fn intersection(self, other: Subset) -> Subset {
        Subset(self.0 & other.0)
    }

    pub fn difference(self, other: Subset) -> Subset {
        Subset(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Subset) -> bool {
        self.0 & other.0 == 0
    }

    pub fn max_label(self) -> Option<u8> {
        (self.0 != 0).then(|| 31 - self.0.leading_zeros() as u8)
    }

    pub fn min_label(self) -> Option<u8> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as u8)
    }

    /// Labels in increasing order.
    pub fn iter(self) -> Labels {
        Labels(self.0)
    }

    pub fn to_vec(self) -> Vec<u8> {
        self.iter().collect()
    }

    /// All subsets of `self`, in increasing mask order.
    pub fn subsets(self) -> Submasks {
        Submasks {
            universe: self.0,
            next: Some(0),
        }
    }

    /// Compact digit form, e.g. `123`; falls back to `{10,11}` style
    /// when a label has two digits.
    pub fn compact(self) -> String {
        if self.iter().all(|l| l < 10) {
            if self.is_empty() {
                return "∅".to_string();
            }
            self.iter().map(|l| char::from(b'0' + l)).collect()
        } else {
            self.to_string()
        }
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, l) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromIterator<u8> for Subset {
    fn from_iter<T: IntoIterator<Item = u8>>(iter: T) -> Self {
        Subset::from_labels(iter)
    }
}

pub struct Labels(u32);

impl Iterator for Labels {
    type Item = u8;

    fn next(&mut self) -> Option<u8> {
        if self.0 == 0 {
            return None;
        }
        let l = self.0.trailing_zeros() as u8;
        self.0 &= self.0 - 1;
        Some(l)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Labels {}

pub struct Submasks {
    universe: u32,
    next: Option<u32>,
}

impl Iterator for Submasks {
    type Item = Subset;

    fn next(&mut self) -> Option<Subset> {
        let cur = self.next?;
        // standard "next submask in increasing order" trick
        let succ = (cur | !self.universe).wrapping_add(1) & self.universe;
        self.next = (succ != 0).then_some(succ);
        Some(Subset(cur))
    }
}

/// Binomial coefficient, exact for the small arguments used here.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as usize
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn range_and_iteration() {
        let s = Subset::range(4);
        assert_eq!(s.to_vec(), vec![1, 2, 3, 4]);
        assert_eq!(s.len(), 4);
        assert_eq!(Subset::range(0), Subset::EMPTY);
        assert_eq!(s.max_label(), Some(4));
        assert_eq!(Subset::EMPTY.max_label(), None);
    }

    #[test]
    fn submasks_cover_power_set() {
        let s = Subset::from_labels([1, 3, 4]);
        let all: Vec<_> = s.subsets().collect();
        assert_eq!(all.len(), 8);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert!(all.iter().all(|x| x.is_subset_of(s)));
        assert_eq!(Subset::EMPTY.subsets().count(), 1);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(7, 3), 35);
        assert_eq!(binomial(4, 2), 6);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial(0, 0), 1);
    }

    #[test]
    fn display_forms() {
        let s = Subset::from_labels([1, 2, 3]);
        assert_eq!(s.to_string(), "{1,2,3}");
        assert_eq!(s.compact(), "123");
    }
}
