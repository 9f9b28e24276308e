//! Brute-force reference implementations, for cross-checking the fast paths
//! and for the CLI `oracle` subcommands. Correctness over speed throughout.

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::set::VertexSet;
use crate::traces::{mask_on, traces_on_vertices};
use rayon::prelude::*;

const MAX_SCAN_VERTICES: usize = 22;
const MAX_EXT_VERTICES: usize = 18;

/// All minimal transversals, computed by two independent methods that must
/// agree: a full subset scan and a sequential edge product with absorption.
/// Result sorted in ascending mask order.
///
/// Panics if the two methods disagree (that would mean a bug in one of them,
/// never a property of the input).
pub fn brute_tr(h: &Hypergraph) -> Result<Vec<VertexSet>> {
    let n = h.universe_size();
    if n > MAX_SCAN_VERTICES {
        return Err(Error::TooLarge {
            what: "subset scan over the universe",
            limit: MAX_SCAN_VERTICES,
        });
    }
    let scan = tr_by_scan(h);
    let product = tr_by_product(h);
    assert_eq!(
        scan, product,
        "brute-force transversal methods disagree; one of them is buggy"
    );
    Ok(scan)
}

fn tr_by_scan(h: &Hypergraph) -> Vec<VertexSet> {
    let n = h.universe_size();
    (0u64..1 << n)
        .into_par_iter()
        .filter_map(|mask| {
            let x = VertexSet::from_mask(n, mask);
            (h.is_transversal(&x) && h.is_minimal_transversal(&x)).then_some(x)
        })
        .collect()
    // ascending mask order is preserved: par_iter over a range collects in order
}

fn tr_by_product(h: &Hypergraph) -> Vec<VertexSet> {
    let n = h.universe_size();
    let mut family = vec![VertexSet::empty(n)];
    for edge in h.edges() {
        let mut next: Vec<VertexSet> = Vec::new();
        let push_minimal = |cand: VertexSet, out: &mut Vec<VertexSet>| {
            if out.iter().any(|m| m.is_subset_of(&cand)) {
                return;
            }
            out.retain(|m| !cand.is_subset_of(m));
            out.push(cand);
        };
        for t in &family {
            if t.intersects(edge) {
                push_minimal(t.clone(), &mut next);
            } else {
                for v in edge.iter() {
                    let mut grown = t.clone();
                    grown.insert(v);
                    push_minimal(grown, &mut next);
                }
            }
        }
        family = next;
    }
    family.sort();
    family
}

/// All k-compatible subsets by full subset scan, ascending mask order.
pub fn brute_ext_k(h: &Hypergraph, k: usize) -> Result<Vec<VertexSet>> {
    let n = h.universe_size();
    if n > MAX_EXT_VERTICES {
        return Err(Error::TooLarge {
            what: "subset scan for the k-extension",
            limit: MAX_EXT_VERTICES,
        });
    }
    if k == 0 || k > n {
        return Err(Error::KOutOfRange { k, n });
    }
    // one trace table per k-subset, shared across all 2^n candidates
    let mut tables = Vec::new();
    crate::set::for_each_k_subset(n, k, |sv| {
        tables.push(traces_on_vertices(h, sv));
        true
    });
    Ok((0u64..1 << n)
        .into_par_iter()
        .filter_map(|mask| {
            let e = VertexSet::from_mask(n, mask);
            tables
                .iter()
                .all(|t| t.contains_mask(mask_on(&e, t.s_vertices())))
                .then_some(e)
        })
        .collect())
}

/// True iff `g`'s edge set equals the minimal transversals of `h`.
pub fn brute_is_dual(h: &Hypergraph, g: &Hypergraph) -> Result<bool> {
    let tr = brute_tr(h)?;
    let mut g_edges = g.edges().to_vec();
    g_edges.sort();
    g_edges.dedup();
    Ok(tr == g_edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::set::VertexId;

    fn vs(n: usize, members: &[VertexId]) -> VertexSet {
        VertexSet::from_indices(n, members.iter().copied())
    }

    fn h1() -> Hypergraph {
        Hypergraph::from_edge_lists(4, [vec![0, 1], vec![1, 2], vec![2, 3]])
    }

    #[test]
    fn tr_of_h1() {
        let tr = brute_tr(&h1()).unwrap();
        let mut expected = vec![vs(4, &[1, 2]), vs(4, &[1, 3]), vs(4, &[0, 2])];
        expected.sort();
        assert_eq!(tr, expected);
    }

    #[test]
    fn tr_degenerate() {
        let none = Hypergraph::new(3, vec![]);
        assert_eq!(brute_tr(&none).unwrap(), vec![VertexSet::empty(3)]);
        let with_empty = Hypergraph::from_edge_lists(3, [vec![0], vec![]]);
        assert!(brute_tr(&with_empty).unwrap().is_empty());
    }

    #[test]
    fn tr_too_large() {
        let h = Hypergraph::new(40, vec![VertexSet::full(40)]);
        assert!(matches!(brute_tr(&h), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn tr_is_involutive_on_sperner_inputs() {
        let h = h1().sperner_reduce();
        let tr = brute_tr(&h).unwrap();
        let dual = Hypergraph::new(4, tr);
        let back = brute_tr(&dual).unwrap();
        let mut orig = h.edges().to_vec();
        orig.sort();
        assert_eq!(back, orig);
    }

    #[test]
    fn ext2_values() {
        let got = brute_ext_k(&h1(), 2).unwrap();
        let mut expected = h1().edges().to_vec();
        expected.sort();
        assert_eq!(got, expected);

        let h2 = Hypergraph::from_edge_lists(3, [vec![0], vec![1], vec![2]]);
        let got = brute_ext_k(&h2, 2).unwrap();
        assert_eq!(
            got,
            vec![vs(3, &[]), vs(3, &[0]), vs(3, &[1]), vs(3, &[2])]
        );
    }

    #[test]
    fn ext_k_equals_edges_at_full_width() {
        let h = h1();
        let got = brute_ext_k(&h, 4).unwrap();
        let mut expected = h.edges().to_vec();
        expected.sort();
        assert_eq!(got, expected);
    }

    #[test]
    fn dual_check() {
        let h = h1();
        let tr = Hypergraph::new(4, brute_tr(&h).unwrap());
        assert!(brute_is_dual(&h, &tr).unwrap());
        let partial = Hypergraph::new(4, vec![vs(4, &[1, 2])]);
        assert!(!brute_is_dual(&h, &partial).unwrap());
        let none = Hypergraph::new(3, vec![]);
        let empty_only = Hypergraph::new(3, vec![VertexSet::empty(3)]);
        assert!(brute_is_dual(&none, &empty_only).unwrap());
    }
}
