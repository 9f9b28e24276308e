//! Fixed-universe vertex sets backed by bit words.
//!
//! Every set knows the size of the universe it lives in; sets from different
//! universes must never be combined (checked by assertion). All set algebra is
//! exact and allocation is avoided on the hot paths via the `*_in_place`
//! variants.

/// Dense vertex index in `[0, n)`.
pub type VertexId = usize;

const WORD_BITS: usize = 64;

#[inline]
fn word_count(n: usize) -> usize {
    n.div_ceil(WORD_BITS)
}

/// A subset of a fixed universe `{0, 1, ..., n-1}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    n: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn empty(n: usize) -> Self {
        VertexSet {
            n,
            words: vec![0; word_count(n)],
        }
    }

    pub fn full(n: usize) -> Self {
        let mut s = Self::empty(n);
        for i in 0..n {
            s.insert(i);
        }
        s
    }

    pub fn singleton(n: usize, v: VertexId) -> Self {
        let mut s = Self::empty(n);
        s.insert(v);
        s
    }

    pub fn from_indices<I: IntoIterator<Item = VertexId>>(n: usize, indices: I) -> Self {
        let mut s = Self::empty(n);
        for i in indices {
            s.insert(i);
        }
        s
    }

    /// Builds a set from the low `n` bits of `mask`. Only valid for `n <= 64`.
    pub fn from_mask(n: usize, mask: u64) -> Self {
        assert!(n <= 64, "mask constructor limited to universes of size 64");
        assert!(n == 64 || mask >> n == 0, "mask has bits outside universe");
        let mut s = Self::empty(n);
        if n > 0 {
            s.words[0] = mask;
        }
        s
    }

    #[inline]
    pub fn universe_size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn contains(&self, v: VertexId) -> bool {
        debug_assert!(v < self.n, "vertex {v} outside universe of size {}", self.n);
        self.words[v / WORD_BITS] >> (v % WORD_BITS) & 1 != 0
    }

    #[inline]
    pub fn insert(&mut self, v: VertexId) {
        assert!(v < self.n, "vertex {v} outside universe of size {}", self.n);
        self.words[v / WORD_BITS] |= 1 << (v % WORD_BITS);
    }

    #[inline]
    pub fn remove(&mut self, v: VertexId) {
        assert!(v < self.n, "vertex {v} outside universe of size {}", self.n);
        self.words[v / WORD_BITS] &= !(1 << (v % WORD_BITS));
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    #[inline]
    fn check_same_universe(&self, other: &VertexSet) {
        assert_eq!(
            self.n, other.n,
            "sets from different universes are not comparable"
        );
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        out.union_in_place(other);
        out
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        out.intersect_in_place(other);
        out
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        out.subtract_in_place(other);
        out
    }

    pub fn complement(&self) -> VertexSet {
        let mut out = Self::full(self.n);
        out.subtract_in_place(self);
        out
    }

    #[inline]
    pub fn union_in_place(&mut self, other: &VertexSet) {
        self.check_same_universe(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    #[inline]
    pub fn intersect_in_place(&mut self, other: &VertexSet) {
        self.check_same_universe(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    #[inline]
    pub fn subtract_in_place(&mut self, other: &VertexSet) {
        self.check_same_universe(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    #[inline]
    pub fn intersects(&self, other: &VertexSet) -> bool {
        self.check_same_universe(other);
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    #[inline]
    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        !self.intersects(other)
    }

    #[inline]
    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        self.check_same_universe(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    /// Number of members of `self ∩ other` without allocating.
    #[inline]
    pub fn intersection_len(&self, other: &VertexSet) -> usize {
        self.check_same_universe(other);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// Ascending iterator over members.
    pub fn iter(&self) -> Iter<'_> {
        Iter {
            set: self,
            word_ix: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn to_vec(&self) -> Vec<VertexId> {
        self.iter().collect()
    }

    /// Smallest member, if any.
    pub fn min_member(&self) -> Option<VertexId> {
        self.iter().next()
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Orders sets as the integers their bit patterns encode (universe size first,
/// then most significant word down). Used to normalize family listings.
impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.n
            .cmp(&other.n)
            .then_with(|| self.words.iter().rev().cmp(other.words.iter().rev()))
    }
}

impl std::fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct Iter<'a> {
    set: &'a VertexSet,
    word_ix: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = VertexId;

    fn next(&mut self) -> Option<VertexId> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.word_ix * WORD_BITS + bit);
            }
            self.word_ix += 1;
            if self.word_ix >= self.set.words.len() {
                return None;
            }
            self.current = self.set.words[self.word_ix];
        }
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = VertexId;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

/// Visits every `k`-subset of `{0, ..., n-1}` in lexicographic order of the
/// ascending vertex lists, calling `f` with the current tuple. `f` returns
/// `false` to stop early.
pub fn for_each_k_subset<F: FnMut(&[VertexId]) -> bool>(n: usize, k: usize, mut f: F) {
    if k > n {
        return;
    }
    let mut tuple: Vec<VertexId> = (0..k).collect();
    if k == 0 {
        f(&tuple);
        return;
    }
    loop {
        if !f(&tuple) {
            return;
        }
        // advance to the next combination
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if tuple[i] != i + n - k {
                break;
            }
            if i == 0 {
                return;
            }
        }
        tuple[i] += 1;
        for j in i + 1..k {
            tuple[j] = tuple[j - 1] + 1;
        }
    }
}
