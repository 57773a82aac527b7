//! Fixed-width bit vectors over a vertex range `[0, n)`.
//!
//! `VertexSet` doubles as the adjacency-row type of [`crate::graph::Graph`]
//! and as the candidate set `X` handled by the visibility and solver modules.

use std::cmp::Ordering;
use std::fmt;

const WORD_BITS: usize = 64;

#[inline(always)]
fn words_for(n: usize) -> usize {
    n.div_ceil(WORD_BITS)
}

/// A set of vertices drawn from `[0, n)`, stored as 64-bit words.
///
/// All mutating operations keep the invariant that no bit at position `>= n`
/// is ever set, so word-wise comparisons and complements are exact.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    n: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn empty(n: usize) -> Self {
        VertexSet {
            n,
            words: vec![0; words_for(n)],
        }
    }

    pub fn full(n: usize) -> Self {
        let mut s = Self::empty(n);
        for (i, w) in s.words.iter_mut().enumerate() {
            let lo = i * WORD_BITS;
            *w = if n - lo >= WORD_BITS {
                u64::MAX
            } else {
                (1u64 << (n - lo)) - 1
            };
        }
        s
    }

    pub fn from_indices(n: usize, indices: &[usize]) -> Option<Self> {
        let mut s = Self::empty(n);
        for &v in indices {
            if v >= n {
                return None;
            }
            s.insert(v);
        }
        Some(s)
    }

    /// Single-word constructor used by the solver's subset scans (`n <= 64`).
    pub fn from_word(n: usize, word: u64) -> Self {
        debug_assert!(n <= WORD_BITS);
        debug_assert_eq!(word & !mask_lo(n), 0);
        let mut s = Self::empty(n);
        if let Some(w) = s.words.first_mut() {
            *w = word;
        }
        s
    }

    /// Overwrite the contents from a single word without reallocating.
    pub fn set_word(&mut self, word: u64) {
        debug_assert!(self.n <= WORD_BITS);
        debug_assert!(word == 0 || !self.words.is_empty());
        if let Some(w) = self.words.first_mut() {
            *w = word;
        }
        for w in self.words.iter_mut().skip(1) {
            *w = 0;
        }
    }

    #[inline(always)]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline(always)]
    pub fn contains(&self, v: usize) -> bool {
        debug_assert!(v < self.n);
        self.words[v / WORD_BITS] >> (v % WORD_BITS) & 1 != 0
    }

    #[inline(always)]
    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < self.n);
        self.words[v / WORD_BITS] |= 1u64 << (v % WORD_BITS);
    }

    #[inline(always)]
    pub fn remove(&mut self, v: usize) {
        debug_assert!(v < self.n);
        self.words[v / WORD_BITS] &= !(1u64 << (v % WORD_BITS));
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn clear(&mut self) {
        self.words.iter_mut().for_each(|w| *w = 0);
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            word_idx: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn complement(&self) -> Self {
        let mut out = Self::full(self.n);
        for (o, w) in out.words.iter_mut().zip(&self.words) {
            *o &= !w;
        }
        out
    }

    pub fn union_with(&mut self, other: &Self) {
        debug_assert_eq!(self.n, other.n);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &Self) {
        debug_assert_eq!(self.n, other.n);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn subtract(&mut self, other: &Self) {
        debug_assert_eq!(self.n, other.n);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        debug_assert_eq!(self.n, other.n);
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    #[inline(always)]
    pub fn intersects(&self, other: &Self) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    /// `(self ∩ other) \ minus != ∅` without allocating.
    ///
    /// This is the diameter-2 visibility kernel: `a` and `b` are adjacency
    /// rows and `minus` is the blocking set `X`.
    #[inline(always)]
    pub fn intersection_avoids(&self, other: &Self, minus: &Self) -> bool {
        debug_assert_eq!(self.n, other.n);
        debug_assert_eq!(self.n, minus.n);
        self.words
            .iter()
            .zip(&other.words)
            .zip(&minus.words)
            .any(|((a, b), m)| a & b & !m != 0)
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    /// Colexicographic order on subsets: `S < T` iff the largest element of
    /// the symmetric difference lies in `T`.
    pub fn cmp_colex(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.n, other.n);
        for (a, b) in self.words.iter().zip(&other.words).rev() {
            if a != b {
                let diff = a ^ b;
                let top = 1u64 << (63 - diff.leading_zeros());
                return if b & top != 0 {
                    Ordering::Less
                } else {
                    Ordering::Greater
                };
            }
        }
        Ordering::Equal
    }
}

#[inline(always)]
fn mask_lo(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    word_idx: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        while self.current == 0 {
            self.word_idx += 1;
            if self.word_idx >= self.words.len() {
                return None;
            }
            self.current = self.words[self.word_idx];
        }
        let bit = self.current.trailing_zeros() as usize;
        self.current &= self.current - 1;
        Some(self.word_idx * WORD_BITS + bit)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}
