//! Fixed-capacity bitset over element indices.
//!
//! Every concrete object in this crate has at most [`MAX_ORDER`] elements, so
//! a subobject payload fits in four machine words and is `Copy`.

use std::cmp::Ordering;
use std::fmt;

/// Largest carrier size any concrete model accepts.
pub const MAX_ORDER: usize = 256;

const WORDS: usize = MAX_ORDER / 64;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct ElemSet([u64; WORDS]);

impl ElemSet {
    pub const fn empty() -> Self {
        ElemSet([0; WORDS])
    }

    /// `{0, 1, .., n-1}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_ORDER);
        let mut s = Self::empty();
        for (w, word) in s.0.iter_mut().enumerate() {
            let lo = w * 64;
            if n >= lo + 64 {
                *word = u64::MAX;
            } else if n > lo {
                *word = (1u64 << (n - lo)) - 1;
            }
        }
        s
    }

    pub fn singleton(x: usize) -> Self {
        let mut s = Self::empty();
        s.insert(x);
        s
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        x < MAX_ORDER && self.0[x >> 6] & (1u64 << (x & 63)) != 0
    }

    #[inline]
    pub fn insert(&mut self, x: usize) -> bool {
        assert!(x < MAX_ORDER, "element index {x} exceeds capacity");
        let was = self.contains(x);
        self.0[x >> 6] |= 1u64 << (x & 63);
        !was
    }

    #[inline]
    pub fn remove(&mut self, x: usize) {
        if x < MAX_ORDER {
            self.0[x >> 6] &= !(1u64 << (x & 63));
        }
    }

    pub fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    pub fn is_subset(&self, other: &ElemSet) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a & !b == 0)
    }

    pub fn intersection(&self, other: &ElemSet) -> ElemSet {
        let mut out = *self;
        for (a, b) in out.0.iter_mut().zip(other.0.iter()) {
            *a &= b;
        }
        out
    }

    pub fn union(&self, other: &ElemSet) -> ElemSet {
        let mut out = *self;
        for (a, b) in out.0.iter_mut().zip(other.0.iter()) {
            *a |= b;
        }
        out
    }

    /// Smallest member, if any.
    pub fn first(&self) -> Option<usize> {
        self.0.iter().enumerate().find(|(_, w)| **w != 0).map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    pub fn iter(&self) -> Iter {
        Iter { set: *self, word: 0 }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for ElemSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = ElemSet::empty();
        for x in iter {
            s.insert(x);
        }
        s
    }
}

pub struct Iter {
    set: ElemSet,
    word: usize,
}

impl Iterator for Iter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        while self.word < WORDS {
            let w = &mut self.set.0[self.word];
            if *w != 0 {
                let bit = w.trailing_zeros() as usize;
                *w &= *w - 1;
                return Some(self.word * 64 + bit);
            }
            self.word += 1;
        }
        None
    }
}

/// Size first, then the ascending element lists lexicographically.
impl Ord for ElemSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.iter().cmp(other.iter()))
    }
}

impl PartialOrd for ElemSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Prints as `{0,2,5}`.
impl fmt::Display for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, x) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn full_and_display() {
        assert_eq!(ElemSet::full(0).len(), 0);
        assert_eq!(ElemSet::full(64).len(), 64);
        assert_eq!(ElemSet::full(130).len(), 130);
        assert_eq!(ElemSet::from_iter([2, 0, 5]).to_string(), "{0,2,5}");
        assert_eq!(ElemSet::empty().to_string(), "{}");
    }

    #[test]
    fn ordering_is_size_then_lex() {
        let a = ElemSet::from_iter([0, 5]);
        let b = ElemSet::from_iter([0, 1, 2]);
        let c = ElemSet::from_iter([0, 3]);
        let mut v = vec![b, a, c];
        v.sort();
        assert_eq!(v, vec![c, a, b]);
    }

    proptest! {
        #[test]
        fn matches_btreeset(xs in proptest::collection::vec(0usize..MAX_ORDER, 0..40),
                            ys in proptest::collection::vec(0usize..MAX_ORDER, 0..40)) {
            use std::collections::BTreeSet;
            let a: ElemSet = xs.iter().copied().collect();
            let b: ElemSet = ys.iter().copied().collect();
            let sa: BTreeSet<usize> = xs.iter().copied().collect();
            let sb: BTreeSet<usize> = ys.iter().copied().collect();
            prop_assert_eq!(a.to_vec(), sa.iter().copied().collect::<Vec<_>>());
            prop_assert_eq!(a.union(&b).to_vec(), sa.union(&sb).copied().collect::<Vec<_>>());
            prop_assert_eq!(a.intersection(&b).to_vec(), sa.intersection(&sb).copied().collect::<Vec<_>>());
            prop_assert_eq!(a.is_subset(&b), sa.is_subset(&sb));
            prop_assert_eq!(a.first(), sa.iter().next().copied());
        }
    }
}
