//! Deciding whether a small set extends to a minimal transversal, and whether
//! a k-trace is realizable by one, with constructive witnesses.
//!
//! The criterion: partition the edges into those missing `T` entirely (H_0)
//! and those meeting it in exactly one vertex v (H_v); edges meeting `T` in
//! two or more vertices are hit regardless and can never be private, so they
//! impose nothing. `T` extends to a minimal transversal iff some choice of
//! one private candidate F_v per v leaves no H_0 edge inside the blocker
//! union W = ∪(F_v \ {v}). On acceptance the witness is completed greedily
//! outside T ∪ W.

use crate::hypergraph::Hypergraph;
use crate::set::{VertexId, VertexSet};
use crate::traces::Trace;
use std::collections::HashSet;

/// Constructive evidence that `T` is contained in a minimal transversal.
#[derive(Clone, Debug)]
pub struct SubtransversalCertificate {
    /// For each v of T in ascending order, the index of the selected edge
    /// with F ∩ T = {v}.
    pub selection: Vec<(VertexId, usize)>,
    /// W = union of the selected edges minus their private vertices.
    pub blocker_union: VertexSet,
    /// A minimal transversal containing T and avoiding W.
    pub witness: VertexSet,
}

#[derive(Clone)]
struct ClassEntry {
    edge_index: usize,
    blocker: VertexSet, // F \ {v}
}

/// Checks whether `t` is contained in some minimal transversal of `g`,
/// returning a certificate when it is.
///
/// `g` should be Sperner-reduced; an empty edge makes every answer `None`.
/// The selection loop runs in the lexicographic order of edge indices, so
/// repeated calls return the identical certificate.
pub fn is_subtransversal(g: &Hypergraph, t: &VertexSet) -> Option<SubtransversalCertificate> {
    assert_eq!(t.universe_size(), g.universe_size(), "universe mismatch");
    let n = g.universe_size();

    // partition the edges by their intersection with T
    let t_vertices: Vec<VertexId> = t.iter().collect();
    let mut h0: Vec<usize> = Vec::new();
    let mut classes: Vec<Vec<ClassEntry>> = vec![Vec::new(); t_vertices.len()];
    for (i, f) in g.edges().iter().enumerate() {
        match f.intersection_len(t) {
            0 => h0.push(i),
            1 => {
                let v = f.intersection(t).min_member().unwrap();
                let pos = t_vertices.binary_search(&v).unwrap();
                let mut blocker = f.clone();
                blocker.remove(v);
                classes[pos].push(ClassEntry {
                    edge_index: i,
                    blocker,
                });
            }
            _ => {}
        }
    }
    if classes.iter().any(|c| c.is_empty()) {
        return None; // some v of T has no private-edge candidate
    }
    // duplicate blockers accept or reject identically; keeping only the
    // first (lowest edge index) preserves the lexicographic-first selection
    let mut seen: HashSet<VertexSet> = HashSet::new();
    for class in &mut classes {
        seen.clear();
        class.retain(|c| seen.insert(c.blocker.clone()));
    }

    // suffix unions of the blocker families: an H_0 edge outside
    // W ∪ suffix[d] can never be swallowed below depth d
    let mut suffix = vec![VertexSet::empty(n); classes.len() + 1];
    for d in (0..classes.len()).rev() {
        let mut u = suffix[d + 1].clone();
        for c in &classes[d] {
            u.union_in_place(&c.blocker);
        }
        suffix[d] = u;
    }

    let watch: Vec<&VertexSet> = h0
        .iter()
        .map(|&i| g.edge(i))
        .filter(|f| f.is_subset_of(&suffix[0]))
        .collect();
    // an empty edge is swallowed by W = ∅ already
    if watch.iter().any(|f| f.is_empty()) {
        return None;
    }

    let mut path: Vec<usize> = Vec::with_capacity(classes.len());
    let w = VertexSet::empty(n);
    let accepted = search(&classes, &suffix, 0, &w, &watch, &mut path)?;

    let selection: Vec<(VertexId, usize)> = t_vertices
        .iter()
        .zip(&path)
        .map(|(&v, &ci)| (v, classes[t_vertices.binary_search(&v).unwrap()][ci].edge_index))
        .collect();

    // complete the witness: cover H_0 greedily outside T ∪ W
    let mut region = accepted.complement();
    region.subtract_in_place(t);
    let mut witness = region.clone();
    debug_assert!(
        h0.iter().all(|&i| g.edge(i).intersects(&witness)),
        "acceptance guarantees no H_0 edge is inside T ∪ W"
    );
    for v in region.iter() {
        witness.remove(v);
        if !h0.iter().all(|&i| g.edge(i).intersects(&witness)) {
            witness.insert(v);
        }
    }
    witness.union_in_place(t);

    Some(SubtransversalCertificate {
        selection,
        blocker_union: accepted,
        witness,
    })
}

/// Depth-first scan of the selection product. Subtrees whose partial blocker
/// union already swallows a watched edge contain no accepting leaf and are
/// skipped; watched edges that no completion can swallow are dropped. Reaching
/// a leaf therefore means acceptance. Returns the accepted blocker union.
fn search(
    classes: &[Vec<ClassEntry>],
    suffix: &[VertexSet],
    depth: usize,
    w: &VertexSet,
    watch: &[&VertexSet],
    path: &mut Vec<usize>,
) -> Option<VertexSet> {
    if depth == classes.len() {
        debug_assert!(watch.is_empty());
        return Some(w.clone());
    }
    let mut reach = suffix[depth + 1].clone();
    reach.union_in_place(w);
    for (ci, entry) in classes[depth].iter().enumerate() {
        let mut w2 = w.clone();
        w2.union_in_place(&entry.blocker);
        let mut r2 = reach.clone();
        r2.union_in_place(&entry.blocker);
        let mut dead = false;
        let mut kept: Vec<&VertexSet> = Vec::with_capacity(watch.len());
        for f in watch {
            if f.is_subset_of(&w2) {
                dead = true;
                break;
            }
            if f.is_subset_of(&r2) {
                kept.push(f);
            }
        }
        if dead {
            continue;
        }
        path.push(ci);
        if let Some(acc) = search(classes, suffix, depth + 1, &w2, &kept, path) {
            return Some(acc);
        }
        path.pop();
    }
    None
}

/// Looks for a minimal transversal of `g` meeting `S` in exactly `T`.
///
/// Works in the sub-universe V \ (S \ T): a minimal transversal realizes the
/// trace iff it lives there and contains T, which reduces to the
/// sub-transversal check on the projected hypergraph. An edge that vanishes
/// under the projection rules out every candidate.
pub fn realize_trace(g: &Hypergraph, trace: &Trace) -> Option<VertexSet> {
    assert_eq!(
        trace.s().universe_size(),
        g.universe_size(),
        "universe mismatch"
    );
    let removed = trace.s().difference(trace.t());
    let vprime = removed.complement();
    let (sub, map) = g
        .derive_sub(&vprime, None, true)
        .expect("no edge selection involved");
    if sub.edges().iter().any(|e| e.is_empty()) {
        return None;
    }
    let reduced = sub.sperner_reduce();
    let cert = is_subtransversal(&reduced, &map.to_sub(trace.t()))?;
    Some(map.to_super(&cert.witness))
}
