//! Lift constructions that pad a hypergraph with fresh vertices or fresh
//! small edges, the maps recovering the original minimal transversals from
//! the lifted ones, and the embedding of a small hypergraph onto a shattered
//! vertex set.

use crate::hypergraph::Hypergraph;
use crate::set::{for_each_k_subset, VertexId, VertexSet};
use crate::traces::{shatters, vc_dim};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LiftKind {
    /// k fresh vertices added to every edge.
    HatUp(usize),
    /// One fresh vertex x, plus an edge X ∪ {x} for every k-subset X of the
    /// base universe.
    HatDown(usize),
}

/// A lifted hypergraph together with its base and the fresh vertices.
#[derive(Clone, Debug)]
pub struct LiftedHypergraph {
    pub base: Hypergraph,
    pub kind: LiftKind,
    pub lifted: Hypergraph,
    pub new_vertices: Vec<VertexId>,
}

fn lifted_labels(base: &Hypergraph, extra: usize) -> Vec<String> {
    let mut labels: Vec<String> = (0..base.universe_size())
        .map(|v| base.label(v))
        .collect();
    for i in 1..=extra {
        let mut name = format!("_x{i}");
        while labels.contains(&name) {
            name.insert(0, '_');
        }
        labels.push(name);
    }
    labels
}

/// Adds `k` fresh vertices to every edge. The lifted minimal transversals
/// are exactly the original ones plus the fresh singletons.
pub fn hat_up(h: &Hypergraph, k: usize) -> LiftedHypergraph {
    assert!(k >= 1, "at least one fresh vertex required");
    assert!(h.edge_count() >= 1, "the base needs at least one edge");
    let n = h.universe_size();
    let new_vertices: Vec<VertexId> = (n..n + k).collect();
    let edges = h
        .edges()
        .iter()
        .map(|e| {
            let mut big = VertexSet::from_indices(n + k, e.iter());
            for &x in &new_vertices {
                big.insert(x);
            }
            big
        })
        .collect();
    let lifted = Hypergraph::new(n + k, edges).with_labels(lifted_labels(h, k));
    LiftedHypergraph {
        base: h.clone(),
        kind: LiftKind::HatUp(k),
        lifted,
        new_vertices,
    }
}

/// Keeps the original edges and adds, for every k-subset X of the base
/// universe, the edge X ∪ {x} with x a single fresh vertex.
pub fn hat_down(h: &Hypergraph, k: usize) -> LiftedHypergraph {
    let n = h.universe_size();
    assert!(k >= 1 && k <= n, "k must be in [1, n]");
    let x = n;
    let mut edges: Vec<VertexSet> = h
        .edges()
        .iter()
        .map(|e| VertexSet::from_indices(n + 1, e.iter()))
        .collect();
    for_each_k_subset(n, k, |sv| {
        let mut e = VertexSet::from_indices(n + 1, sv.iter().copied());
        e.insert(x);
        edges.push(e);
        true
    });
    let lifted = Hypergraph::new(n + 1, edges).with_labels(lifted_labels(h, 1));
    LiftedHypergraph {
        base: h.clone(),
        kind: LiftKind::HatDown(k),
        lifted,
        new_vertices: vec![x],
    }
}

/// Given all minimal transversals of a hat-up lift, recovers those of the
/// base: drop the fresh singletons, restrict the rest.
pub fn recover_from_hat_up(trs: &[VertexSet], lift: &LiftedHypergraph) -> Vec<VertexSet> {
    assert!(matches!(lift.kind, LiftKind::HatUp(_)));
    let base_n = lift.base.universe_size();
    trs.iter()
        .filter(|t| !t.iter().any(|v| v >= base_n))
        .map(|t| VertexSet::from_indices(base_n, t.iter()))
        .collect()
}

/// Given all minimal transversals of a hat-down lift, recovers those of the
/// base: strip x where present; keep an x-free member only if it is still
/// minimal for the base.
pub fn recover_from_hat_down(trs: &[VertexSet], lift: &LiftedHypergraph) -> Vec<VertexSet> {
    assert!(matches!(lift.kind, LiftKind::HatDown(_)));
    let base_n = lift.base.universe_size();
    let x = lift.new_vertices[0];
    let mut out = Vec::new();
    for t in trs {
        let restricted = VertexSet::from_indices(base_n, t.iter().filter(|&v| v != x));
        if t.contains(x) {
            out.push(restricted);
        } else if lift.base.is_minimal_transversal(&restricted) {
            out.push(restricted);
        }
    }
    out
}

/// Witness that `f` appears as a partial subhypergraph of `h`: where each
/// vertex of `f` landed, and which edge of `h` realizes each edge of `f` as
/// its trace on the image.
#[derive(Clone, Debug)]
pub struct PartialEmbedding {
    /// vertex_map[v of f] = vertex of h.
    pub vertex_map: Vec<VertexId>,
    /// edge_map[edge index of f] = edge index of h.
    pub edge_map: Vec<usize>,
}

/// Maps `f` onto a shattered vertex set of `h` of size |V(f)|, if one
/// exists, picking the lexicographically first shattered set and the first
/// realizing edge per trace. Succeeds exactly when vc_dim(h) >= |V(f)|.
pub fn embed_partial(h: &Hypergraph, f: &Hypergraph) -> Option<PartialEmbedding> {
    let width = f.universe_size();
    if (vc_dim(h) as i64) < width as i64 {
        return None;
    }
    let n = h.universe_size();
    let mut target: Option<Vec<VertexId>> = None;
    for_each_k_subset(n, width, |sv| {
        let u = VertexSet::from_indices(n, sv.iter().copied());
        if shatters(h, &u) {
            target = Some(sv.to_vec());
            return false;
        }
        true
    });
    let target = target?;

    let mut edge_map = Vec::with_capacity(f.edge_count());
    for fe in f.edges() {
        let image = VertexSet::from_indices(n, fe.iter().map(|v| target[v]));
        let witness = h.edges().iter().position(|he| {
            let mut trace = he.clone();
            trace.intersect_in_place(&VertexSet::from_indices(n, target.iter().copied()));
            trace == image
        });
        edge_map.push(witness.expect("a shattered set realizes every subset"));
    }
    Some(PartialEmbedding {
        vertex_map: target,
        edge_map,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::brute_tr;

    fn vs(n: usize, members: &[VertexId]) -> VertexSet {
        VertexSet::from_indices(n, members.iter().copied())
    }

    fn h1() -> Hypergraph {
        Hypergraph::from_edge_lists(4, [vec![0, 1], vec![1, 2], vec![2, 3]])
    }

    fn sorted(mut v: Vec<VertexSet>) -> Vec<VertexSet> {
        v.sort();
        v
    }

    #[test]
    fn hat_up_definition() {
        let lift = hat_up(&h1(), 2);
        assert_eq!(lift.lifted.universe_size(), 6);
        assert_eq!(
            lift.lifted.edge_lists(),
            vec![vec![0, 1, 4, 5], vec![1, 2, 4, 5], vec![2, 3, 4, 5]]
        );
        assert_eq!(lift.new_vertices, vec![4, 5]);
        let single = hat_up(&Hypergraph::from_edge_lists(1, [vec![0]]), 1);
        assert_eq!(single.lifted.edge_lists(), vec![vec![0, 1]]);
    }

    #[test]
    fn hat_up_transversals() {
        let lift = hat_up(&h1(), 2);
        let lifted_tr = brute_tr(&lift.lifted).unwrap();
        let mut expected: Vec<VertexSet> = brute_tr(&h1())
            .unwrap()
            .iter()
            .map(|t| VertexSet::from_indices(6, t.iter()))
            .collect();
        expected.push(vs(6, &[4]));
        expected.push(vs(6, &[5]));
        assert_eq!(sorted(lifted_tr), sorted(expected));
    }

    #[test]
    fn hat_down_small_example() {
        let base = Hypergraph::from_edge_lists(2, [vec![0, 1]]);
        let lift = hat_down(&base, 1);
        assert_eq!(
            lift.lifted.edge_lists(),
            vec![vec![0, 1], vec![0, 2], vec![1, 2]]
        );
        let tr = brute_tr(&lift.lifted).unwrap();
        assert_eq!(
            sorted(tr),
            sorted(vec![vs(3, &[0, 2]), vs(3, &[1, 2]), vs(3, &[0, 1])])
        );
    }

    #[test]
    fn hat_down_full_width() {
        let lift = hat_down(&h1(), 4);
        assert_eq!(lift.lifted.edge_count(), h1().edge_count() + 1);
        assert_eq!(
            lift.lifted.edge_lists().last().unwrap(),
            &vec![0, 1, 2, 3, 4]
        );
    }

    #[test]
    fn recover_hat_up_round_trip() {
        for k in 1..=3 {
            let lift = hat_up(&h1(), k);
            let lifted_tr = brute_tr(&lift.lifted).unwrap();
            let recovered = recover_from_hat_up(&lifted_tr, &lift);
            assert_eq!(sorted(recovered), sorted(brute_tr(&h1()).unwrap()));
        }
        let lift = hat_up(&h1(), 1);
        assert!(recover_from_hat_up(&[], &lift).is_empty());
    }

    #[test]
    fn recover_empty_family() {
        let lift = hat_down(&h1(), 2);
        assert!(recover_from_hat_down(&[], &lift).is_empty());
    }

    #[test]
    fn recover_hat_down_round_trip() {
        for k in 1..=4 {
            let lift = hat_down(&h1(), k);
            let lifted_tr = brute_tr(&lift.lifted).unwrap();
            let recovered = recover_from_hat_down(&lifted_tr, &lift);
            assert_eq!(
                sorted(recovered),
                sorted(brute_tr(&h1()).unwrap()),
                "k = {k}"
            );
        }
    }

    #[test]
    fn recover_hat_down_filters_non_minimal() {
        let base = Hypergraph::from_edge_lists(2, [vec![0, 1]]);
        let lift = hat_down(&base, 1);
        let lifted_tr = brute_tr(&lift.lifted).unwrap();
        // {0,1} is a lifted minimal transversal without x but only a
        // non-minimal transversal of the base; it must be dropped
        let recovered = recover_from_hat_down(&lifted_tr, &lift);
        assert_eq!(sorted(recovered), sorted(vec![vs(2, &[0]), vs(2, &[1])]));
    }

    #[test]
    fn hat_down_membership_and_threshold() {
        let h = h1();
        let n = h.universe_size();
        for k in 1..=3usize {
            let lift = hat_down(&h, k);
            let lifted_tr = brute_tr(&lift.lifted).unwrap();
            let x = lift.new_vertices[0];
            for t in brute_tr(&h).unwrap() {
                if t.len() < n - k + 1 {
                    let mut with_x = VertexSet::from_indices(n + 1, t.iter());
                    with_x.insert(x);
                    assert!(lifted_tr.contains(&with_x), "k = {k}");
                }
            }
            for t in &lifted_tr {
                if !t.contains(x) {
                    assert!(t.len() >= n - k + 1, "k = {k}");
                }
            }
        }
    }

    #[test]
    fn embedding_into_complete_hypergraph() {
        let complete3 =
            Hypergraph::new(3, (0..8).map(|m| VertexSet::from_mask(3, m)).collect());
        let f = Hypergraph::from_edge_lists(2, [vec![0, 1]]);
        let emb = embed_partial(&complete3, &f).expect("everything is shattered");
        assert_eq!(emb.vertex_map.len(), 2);
        assert_eq!(emb.edge_map.len(), 1);
        // the witness edge's trace on the image reproduces the edge of f
        let image = VertexSet::from_indices(3, emb.vertex_map.iter().copied());
        let witness = complete3.edge(emb.edge_map[0]);
        assert_eq!(witness.intersection(&image), image);
    }

    #[test]
    fn embedding_fails_beyond_vc_dim() {
        let f = Hypergraph::from_edge_lists(2, [vec![0, 1]]);
        assert!(embed_partial(&h1(), &f).is_none(), "vc_dim(h1) = 1 < 2");
    }

    #[test]
    fn embedding_reproduces_edges_generally() {
        let complete3 =
            Hypergraph::new(3, (0..8).map(|m| VertexSet::from_mask(3, m)).collect());
        let f = Hypergraph::from_edge_lists(2, [vec![], vec![0], vec![0, 1], vec![1]]);
        let emb = embed_partial(&complete3, &f).unwrap();
        let image_universe = VertexSet::from_indices(3, emb.vertex_map.iter().copied());
        for (fi, fe) in f.edges().iter().enumerate() {
            let expected = VertexSet::from_indices(3, fe.iter().map(|v| emb.vertex_map[v]));
            let got = complete3.edge(emb.edge_map[fi]).intersection(&image_universe);
            assert_eq!(got, expected, "edge {fi}");
        }
    }
}
