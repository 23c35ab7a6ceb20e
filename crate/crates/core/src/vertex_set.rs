//! Bitmask vertex sets.
//!
//! A single machine word covers graphs with up to 64 vertices without heap
//! allocation; larger graphs spill into further words transparently.

use std::fmt;

use smallvec::SmallVec;

const WORD: usize = 64;

/// A set of vertex identifiers stored as a bitmask.
///
/// Trailing zero words are always trimmed, so two sets with the same members
/// compare equal regardless of how they were built.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet {
    words: SmallVec<[u64; 2]>,
}

impl VertexSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// The set `{0, 1, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        let mut words: SmallVec<[u64; 2]> = SmallVec::from_elem(u64::MAX, n / WORD);
        if !n.is_multiple_of(WORD) {
            words.push((1u64 << (n % WORD)) - 1);
        }
        Self { words }
    }

    pub fn from_mask(mask: u64) -> Self {
        let mut s = Self {
            words: SmallVec::from_elem(mask, 1),
        };
        s.trim();
        s
    }

    /// The single-word mask, if every member is below 64.
    pub fn to_mask(&self) -> Option<u64> {
        match self.words.len() {
            0 => Some(0),
            1 => Some(self.words[0]),
            _ => None,
        }
    }

    pub fn insert(&mut self, v: usize) {
        let (w, b) = (v / WORD, v % WORD);
        if self.words.len() <= w {
            self.words.resize(w + 1, 0);
        }
        self.words[w] |= 1 << b;
    }

    pub fn remove(&mut self, v: usize) {
        let (w, b) = (v / WORD, v % WORD);
        if w < self.words.len() {
            self.words[w] &= !(1 << b);
            self.trim();
        }
    }

    pub fn contains(&self, v: usize) -> bool {
        let (w, b) = (v / WORD, v % WORD);
        w < self.words.len() && self.words[w] & (1 << b) != 0
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// Smallest member.
    pub fn first(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, w)| **w != 0)
            .map(|(i, w)| i * WORD + w.trailing_zeros() as usize)
    }

    /// Members in ascending order.
    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            index: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        let (long, short) = if self.words.len() >= other.words.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut words = long.words.clone();
        for (w, o) in words.iter_mut().zip(short.words.iter()) {
            *w |= o;
        }
        Self { words }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let mut s = Self {
            words: self
                .words
                .iter()
                .zip(other.words.iter())
                .map(|(a, b)| a & b)
                .collect(),
        };
        s.trim();
        s
    }

    pub fn difference(&self, other: &Self) -> Self {
        let mut words = self.words.clone();
        for (w, o) in words.iter_mut().zip(other.words.iter()) {
            *w &= !o;
        }
        let mut s = Self { words };
        s.trim();
        s
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.words.iter().enumerate().all(|(i, w)| {
            let o = other.words.get(i).copied().unwrap_or(0);
            w & !o == 0
        })
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(a, b)| a & b == 0)
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = Self::new();
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let b = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.index * WORD + b);
            }
            self.index += 1;
            self.current = *self.words.get(self.index)?;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn full_and_mask() {
        assert_eq!(VertexSet::full(0).len(), 0);
        assert_eq!(VertexSet::full(3).to_mask(), Some(0b111));
        assert_eq!(VertexSet::full(64).to_mask(), Some(u64::MAX));
        let big = VertexSet::full(130);
        assert_eq!(big.len(), 130);
        assert_eq!(big.to_mask(), None);
        assert_eq!(big.iter().last(), Some(129));
    }

    #[test]
    fn removal_trims_so_equality_is_structural() {
        let mut a: VertexSet = [3, 100].into_iter().collect();
        a.remove(100);
        assert_eq!(a, VertexSet::from_mask(1 << 3));
        assert_eq!(a.first(), Some(3));
    }

    proptest! {
        #[test]
        fn iteration_is_sorted_and_matches_len(xs in proptest::collection::vec(0usize..200, 0..40)) {
            let s: VertexSet = xs.iter().copied().collect();
            let members: Vec<usize> = s.iter().collect();
            let mut expect = xs.clone();
            expect.sort_unstable();
            expect.dedup();
            prop_assert_eq!(&members, &expect);
            prop_assert_eq!(s.len(), expect.len());
        }

        #[test]
        fn set_algebra(xs in proptest::collection::vec(0usize..150, 0..30),
                       ys in proptest::collection::vec(0usize..150, 0..30)) {
            let a: VertexSet = xs.iter().copied().collect();
            let b: VertexSet = ys.iter().copied().collect();
            let u = a.union(&b);
            let i = a.intersection(&b);
            let d = a.difference(&b);
            for v in 0..150 {
                prop_assert_eq!(u.contains(v), a.contains(v) || b.contains(v));
                prop_assert_eq!(i.contains(v), a.contains(v) && b.contains(v));
                prop_assert_eq!(d.contains(v), a.contains(v) && !b.contains(v));
            }
            prop_assert!(i.is_subset(&a) && a.is_subset(&u));
            prop_assert!(d.is_disjoint(&b));
        }
    }
}
