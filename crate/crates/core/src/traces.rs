//! Traces of edges on small vertex sets, and the derived notions built on
//! them: k-compatibility, shattering, VC-dimension, and conformality.
//!
//! A trace `(T, S)` fixes a k-set `S` and a designated subset `T`; a set `E`
//! realizes it when `E ∩ S = T`. Inside a table traces are packed as k-bit
//! masks under the ascending ordering of `S`, which keeps the inner loops of
//! the extension construction allocation-free.

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::set::{for_each_k_subset, VertexId, VertexSet};

/// A pair `(T, S)` with `T ⊆ S`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Trace {
    t: VertexSet,
    s: VertexSet,
}

impl Trace {
    pub fn new(t: VertexSet, s: VertexSet) -> Result<Self> {
        if t.universe_size() != s.universe_size() || !t.is_subset_of(&s) {
            return Err(Error::InvalidTrace);
        }
        Ok(Trace { t, s })
    }

    pub fn t(&self) -> &VertexSet {
        &self.t
    }

    pub fn s(&self) -> &VertexSet {
        &self.s
    }
}

/// The set of traces realized on a fixed `S`, stored as packed masks.
#[derive(Clone, Debug)]
pub struct TraceTable {
    s: Vec<VertexId>,
    universe_size: usize,
    realized: Vec<u64>, // sorted, deduplicated
}

impl TraceTable {
    /// Packs `set ∩ S` into a mask; bit `i` stands for the i-th smallest
    /// member of `S`.
    #[inline]
    pub fn mask_of(&self, set: &VertexSet) -> u64 {
        mask_on(set, &self.s)
    }

    #[inline]
    pub fn contains_mask(&self, mask: u64) -> bool {
        self.realized.binary_search(&mask).is_ok()
    }

    pub fn contains(&self, t: &VertexSet) -> bool {
        self.contains_mask(self.mask_of(t))
    }

    pub fn len(&self) -> usize {
        self.realized.len()
    }

    pub fn is_empty(&self) -> bool {
        self.realized.is_empty()
    }

    pub fn s_vertices(&self) -> &[VertexId] {
        &self.s
    }

    /// Realized traces as sets, in ascending mask order.
    pub fn realized_sets(&self) -> Vec<VertexSet> {
        self.realized
            .iter()
            .map(|&m| unmask_on(m, &self.s, self.universe_size))
            .collect()
    }
}

#[inline]
pub(crate) fn mask_on(set: &VertexSet, s: &[VertexId]) -> u64 {
    debug_assert!(s.len() <= 63);
    let mut mask = 0u64;
    for (i, &v) in s.iter().enumerate() {
        if set.contains(v) {
            mask |= 1 << i;
        }
    }
    mask
}

pub(crate) fn unmask_on(mask: u64, s: &[VertexId], universe: usize) -> VertexSet {
    let mut out = VertexSet::empty(universe);
    for (i, &v) in s.iter().enumerate() {
        if mask >> i & 1 != 0 {
            out.insert(v);
        }
    }
    out
}

/// The exact set `{F ∩ S : F edge}` for the given `S`.
pub fn traces_on(h: &Hypergraph, s: &VertexSet) -> TraceTable {
    assert_eq!(s.universe_size(), h.universe_size(), "universe mismatch");
    let sv: Vec<VertexId> = s.iter().collect();
    traces_on_vertices(h, &sv)
}

pub(crate) fn traces_on_vertices(h: &Hypergraph, sv: &[VertexId]) -> TraceTable {
    assert!(sv.len() <= 63, "trace width limited to 63");
    let mut realized: Vec<u64> = h.edges().iter().map(|e| mask_on(e, sv)).collect();
    realized.sort_unstable();
    realized.dedup();
    TraceTable {
        s: sv.to_vec(),
        universe_size: h.universe_size(),
        realized,
    }
}

/// Streams every k-trace `(T, S)` that no edge of `h` realizes.
///
/// Order is deterministic: `S` ranges over k-subsets in lexicographic order
/// of their ascending vertex lists, and for each `S` the missing `T`s come in
/// ascending mask order.
pub fn missing_k_traces(h: &Hypergraph, k: usize) -> Result<MissingTraces<'_>> {
    check_k(h, k)?;
    Ok(MissingTraces {
        h,
        k,
        state: None,
        done: false,
    })
}

pub struct MissingTraces<'a> {
    h: &'a Hypergraph,
    k: usize,
    state: Option<(Vec<VertexId>, TraceTable, u64)>, // (S, table, next mask)
    done: bool,
}

impl MissingTraces<'_> {
    /// Advances the current S-tuple; returns false when exhausted.
    fn advance_s(&mut self) -> bool {
        let n = self.h.universe_size();
        let k = self.k;
        let next = match &self.state {
            None => Some((0..k).collect::<Vec<_>>()),
            Some((s, _, _)) => next_combination(s, n),
        };
        match next {
            Some(sv) => {
                let table = traces_on_vertices(self.h, &sv);
                self.state = Some((sv, table, 0));
                true
            }
            None => {
                self.done = true;
                false
            }
        }
    }
}

fn next_combination(cur: &[VertexId], n: usize) -> Option<Vec<VertexId>> {
    let k = cur.len();
    let mut next = cur.to_vec();
    let mut i = k;
    loop {
        if i == 0 {
            return None;
        }
        i -= 1;
        if next[i] != i + n - k {
            break;
        }
        if i == 0 {
            return None;
        }
    }
    next[i] += 1;
    for j in i + 1..k {
        next[j] = next[j - 1] + 1;
    }
    Some(next)
}

impl Iterator for MissingTraces<'_> {
    type Item = Trace;

    fn next(&mut self) -> Option<Trace> {
        if self.done {
            return None;
        }
        if self.state.is_none() && !self.advance_s() {
            return None;
        }
        loop {
            let (sv, table, next_mask) = self.state.as_mut().unwrap();
            let limit = 1u64 << sv.len();
            let mut found = None;
            let mut m = *next_mask;
            while m < limit {
                if !table.contains_mask(m) {
                    found = Some(m);
                    m += 1;
                    break;
                }
                m += 1;
            }
            *next_mask = m;
            if let Some(mask) = found {
                let n = self.h.universe_size();
                let s_set = VertexSet::from_indices(n, sv.iter().copied());
                let t_set = unmask_on(mask, sv, n);
                return Some(Trace { t: t_set, s: s_set });
            }
            if !self.advance_s() {
                return None;
            }
        }
    }
}

fn check_k(h: &Hypergraph, k: usize) -> Result<()> {
    let n = h.universe_size();
    if k == 0 || k > n {
        return Err(Error::KOutOfRange { k, n });
    }
    if k > 63 {
        return Err(Error::KTooLarge { k });
    }
    Ok(())
}

/// True iff every k-trace of `e` is realized by some edge of `h`.
pub fn is_k_compatible(e: &VertexSet, h: &Hypergraph, k: usize) -> Result<bool> {
    check_k(h, k)?;
    assert_eq!(e.universe_size(), h.universe_size(), "universe mismatch");
    let mut ok = true;
    for_each_k_subset(h.universe_size(), k, |sv| {
        let table = traces_on_vertices(h, sv);
        if !table.contains_mask(mask_on(e, sv)) {
            ok = false;
            return false;
        }
        true
    });
    Ok(ok)
}

/// True iff all `2^|U|` subsets of `U` occur as traces of edges on `U`.
pub fn shatters(h: &Hypergraph, u: &VertexSet) -> bool {
    assert_eq!(u.universe_size(), h.universe_size(), "universe mismatch");
    let width = u.len();
    if width > 63 {
        return false; // would need 2^width distinct edges; unreachable in practice
    }
    traces_on(h, u).len() == 1usize << width
}

/// Exact VC-dimension by increasing-size search, -1 for an edge-less
/// hypergraph. A shattered d-set needs 2^d distinct edges, so the search is
/// capped at floor(log2(edge count)).
pub fn vc_dim(h: &Hypergraph) -> i32 {
    if h.edge_count() == 0 {
        return -1;
    }
    let n = h.universe_size();
    let max_d = (usize::BITS - 1 - h.edge_count().leading_zeros()) as usize; // floor(log2 m)
    let mut dim = 0; // the empty set is shattered by any edge
    for d in 1..=max_d.min(n) {
        let mut found = false;
        for_each_k_subset(n, d, |sv| {
            let u = VertexSet::from_indices(n, sv.iter().copied());
            if shatters(h, &u) {
                found = true;
                return false;
            }
            true
        });
        if !found {
            break;
        }
        dim = d;
    }
    dim as i32
}

/// A set is "uncovered" when it is contained in no edge. `h` is k-conformal
/// iff every inclusion-minimal uncovered set has at most `k` members.
///
/// Brute force over subsets in increasing size; exponential in the universe,
/// intended for small instances only.
pub fn is_k_conformal(h: &Hypergraph, k: usize) -> bool {
    let n = h.universe_size();
    for size in k + 1..=n {
        let mut violated = false;
        for_each_k_subset(n, size, |sv| {
            let x = VertexSet::from_indices(n, sv.iter().copied());
            if is_minimal_uncovered(h, &x, sv) {
                violated = true;
                return false;
            }
            true
        });
        if violated {
            return false;
        }
    }
    true
}

/// The least `c` such that `h` is c-conformal: the size of its largest
/// inclusion-minimal uncovered set (0 when every set is covered).
pub fn conformality(h: &Hypergraph) -> usize {
    let n = h.universe_size();
    let mut best = 0;
    for size in 0..=n {
        for_each_k_subset(n, size, |sv| {
            let x = VertexSet::from_indices(n, sv.iter().copied());
            if is_minimal_uncovered(h, &x, sv) {
                best = size;
                return false; // one witness per size suffices
            }
            true
        });
    }
    best
}

/// The conformality when it is at most `max`, `None` otherwise. Checks the
/// sizes above `max` first so an over-cap answer exits without the full
/// scan below it.
pub fn conformality_bounded(h: &Hypergraph, max: usize) -> Option<usize> {
    if !is_k_conformal(h, max) {
        return None;
    }
    let n = h.universe_size();
    let mut best = 0;
    for size in 0..=max.min(n) {
        for_each_k_subset(n, size, |sv| {
            let x = VertexSet::from_indices(n, sv.iter().copied());
            if is_minimal_uncovered(h, &x, sv) {
                best = size;
                return false;
            }
            true
        });
    }
    Some(best)
}

fn is_covered(h: &Hypergraph, x: &VertexSet) -> bool {
    h.edges().iter().any(|f| x.is_subset_of(f))
}

fn is_minimal_uncovered(h: &Hypergraph, x: &VertexSet, sv: &[VertexId]) -> bool {
    if is_covered(h, x) {
        return false;
    }
    let mut sub = x.clone();
    for &v in sv {
        sub.remove(v);
        if !is_covered(h, &sub) {
            return false;
        }
        sub.insert(v);
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(n: usize, members: &[VertexId]) -> VertexSet {
        VertexSet::from_indices(n, members.iter().copied())
    }

    fn h1() -> Hypergraph {
        Hypergraph::from_edge_lists(4, [vec![0, 1], vec![1, 2], vec![2, 3]])
    }

    /// Three disjoint singleton edges.
    fn h2() -> Hypergraph {
        Hypergraph::from_edge_lists(3, [vec![0], vec![1], vec![2]])
    }

    /// All eight subsets of a 3-universe as edges.
    fn complete3() -> Hypergraph {
        Hypergraph::new(3, (0..8).map(|m| VertexSet::from_mask(3, m)).collect())
    }

    #[test]
    fn traces_on_pairs() {
        let h = h1();
        let t = traces_on(&h, &vs(4, &[0, 1]));
        let sets = t.realized_sets();
        assert_eq!(sets, vec![vs(4, &[]), vs(4, &[1]), vs(4, &[0, 1])]);
        let t = traces_on(&h, &vs(4, &[0, 3]));
        assert_eq!(
            t.realized_sets(),
            vec![vs(4, &[]), vs(4, &[0]), vs(4, &[3])]
        );
        let none = Hypergraph::new(4, vec![]);
        assert!(traces_on(&none, &vs(4, &[0, 2])).is_empty());
    }

    #[test]
    fn traces_len_bound() {
        let h = h1();
        for s in [vs(4, &[0, 1]), vs(4, &[1, 2, 3]), VertexSet::full(4)] {
            let t = traces_on(&h, &s);
            assert!(t.len() <= h.edge_count().min(1 << s.len()));
        }
    }

    #[test]
    fn missing_traces_of_h1() {
        let h = h1();
        let missing: Vec<Trace> = missing_k_traces(&h, 2).unwrap().collect();
        assert_eq!(missing.len(), 8);
        assert_eq!(missing[0].t(), &vs(4, &[0]));
        assert_eq!(missing[0].s(), &vs(4, &[0, 1]));
        // every listed trace is genuinely unrealized
        for tr in &missing {
            assert!(!traces_on(&h, tr.s()).contains(tr.t()));
        }
    }

    #[test]
    fn missing_traces_complete_hypergraph_empty() {
        let missing: Vec<Trace> = missing_k_traces(&complete3(), 2).unwrap().collect();
        assert!(missing.is_empty());
    }

    #[test]
    fn missing_traces_no_edges() {
        let h = Hypergraph::new(3, vec![]);
        let missing: Vec<Trace> = missing_k_traces(&h, 1).unwrap().collect();
        assert_eq!(missing.len(), 6, "both masks missing for each vertex");
    }

    #[test]
    fn missing_traces_k_range() {
        let h = h1();
        assert!(matches!(
            missing_k_traces(&h, 0),
            Err(Error::KOutOfRange { .. })
        ));
        assert!(matches!(
            missing_k_traces(&h, 5),
            Err(Error::KOutOfRange { .. })
        ));
    }

    #[test]
    fn k_compatibility() {
        let h = h1();
        assert!(is_k_compatible(&vs(4, &[1, 2]), &h, 2).unwrap());
        assert!(!is_k_compatible(&vs(4, &[0, 3]), &h, 2).unwrap());
        for e in h.edges() {
            assert!(is_k_compatible(e, &h, 2).unwrap());
        }
    }

    #[test]
    fn shattering() {
        let h = h1();
        assert!(!shatters(&h, &vs(4, &[0, 3])));
        assert!(shatters(&h, &vs(4, &[])));
        assert!(!shatters(&h2(), &vs(3, &[0, 1])));
        assert!(shatters(&complete3(), &VertexSet::full(3)));
    }

    #[test]
    fn vc_dimension_values() {
        assert_eq!(vc_dim(&h1()), 1);
        assert_eq!(vc_dim(&complete3()), 3);
        assert_eq!(vc_dim(&h2()), 1);
        assert_eq!(vc_dim(&Hypergraph::new(3, vec![])), -1);
        // a single empty edge shatters exactly the empty set
        assert_eq!(vc_dim(&Hypergraph::from_edge_lists(3, [vec![]])), 0);
    }

    #[test]
    fn vc_log_bound() {
        for h in [h1(), h2(), complete3()] {
            let m = h.edge_count();
            let bound = (usize::BITS - 1 - m.leading_zeros()) as i32;
            assert!(vc_dim(&h) <= bound);
        }
    }

    #[test]
    fn conformality_checks() {
        assert!(is_k_conformal(&h1(), 2));
        let triangle = Hypergraph::from_edge_lists(3, [vec![0, 1], vec![1, 2], vec![0, 2]]);
        assert!(!is_k_conformal(&triangle, 2));
        assert_eq!(conformality(&triangle), 3);
        let with_full = Hypergraph::from_edge_lists(3, [vec![0, 1, 2]]);
        for k in 0..=3 {
            assert!(is_k_conformal(&with_full, k));
        }
        assert_eq!(conformality(&with_full), 0);
    }

    #[test]
    fn conformality_bounded_matches_exact() {
        let triangle = Hypergraph::from_edge_lists(3, [vec![0, 1], vec![1, 2], vec![0, 2]]);
        assert_eq!(conformality_bounded(&triangle, 2), None);
        assert_eq!(conformality_bounded(&triangle, 3), Some(3));
        assert_eq!(conformality_bounded(&h1(), 2), Some(2));
    }

    #[test]
    fn trace_validation() {
        assert!(Trace::new(vs(4, &[0]), vs(4, &[0, 1])).is_ok());
        assert_eq!(
            Trace::new(vs(4, &[2]), vs(4, &[0, 1])),
            Err(Error::InvalidTrace)
        );
        assert_eq!(
            Trace::new(vs(3, &[0]), vs(4, &[0, 1])),
            Err(Error::InvalidTrace)
        );
    }
}
