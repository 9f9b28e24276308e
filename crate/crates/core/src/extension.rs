//! The k-extension of a hypergraph: all vertex sets whose k-traces are
//! realized by edges.
//!
//! Built level by level along the vertex order. Level k holds the distinct
//! edge traces on the first k vertices; at level i every member E of the
//! previous level spawns the candidates E and E ∪ {v_i}, which are kept iff
//! each k-subset S containing v_i realizes their trace. Subsets avoiding v_i
//! are inherited from the previous level, so they need no re-check.

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::set::{for_each_k_subset, VertexId, VertexSet};
use crate::traces::{mask_on, traces_on_vertices, TraceTable};
use std::collections::HashSet;

/// Deduplicated family of k-compatible sets in construction order.
#[derive(Clone, Debug)]
pub struct ExtensionFamily {
    universe_size: usize,
    members: Vec<VertexSet>,
    index: HashSet<VertexSet>,
}

impl ExtensionFamily {
    pub fn universe_size(&self) -> usize {
        self.universe_size
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, e: &VertexSet) -> bool {
        self.index.contains(e)
    }

    /// Members in construction order.
    pub fn members(&self) -> &[VertexSet] {
        &self.members
    }

    pub fn iter(&self) -> std::slice::Iter<'_, VertexSet> {
        self.members.iter()
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

/// 4 * sum_{i<k} C(n, i), saturating. The family stays under the sum whenever
/// the VC-dimension is below k, so exceeding this signals a k chosen too
/// small (or an adversarial instance) before memory does.
pub fn default_cap(n: usize, k: usize) -> usize {
    let mut total: u128 = 0;
    let mut binom: u128 = 1; // C(n, 0)
    for i in 0..k {
        total = total.saturating_add(binom);
        binom = binom.saturating_mul((n - i) as u128) / (i as u128 + 1);
    }
    usize::try_from(total.saturating_mul(4)).unwrap_or(usize::MAX)
}

/// Computes the full k-extension. Aborts with
/// [`Error::ExtensionOverflow`] if any level grows past `cap`
/// (defaulting to [`default_cap`]).
pub fn ext_k(h: &Hypergraph, k: usize, cap: Option<usize>) -> Result<ExtensionFamily> {
    check_k(h, k)?;
    let n = h.universe_size();
    let cap = cap.unwrap_or_else(|| default_cap(n, k));

    // level k: distinct traces of the edges on the first k vertices
    let prefix: Vec<VertexId> = (0..k).collect();
    let mut members: Vec<VertexSet> = Vec::new();
    let mut index: HashSet<VertexSet> = HashSet::new();
    for e in h.edges() {
        let t = crate::traces::unmask_on(mask_on(e, &prefix), &prefix, n);
        if index.insert(t.clone()) {
            members.push(t);
        }
    }
    if members.len() > cap {
        return Err(Error::ExtensionOverflow { cap, level: k });
    }

    for i in k + 1..=n {
        let vi = i - 1;
        // one trace table per k-subset of the prefix that contains v_i
        let mut tables: Vec<TraceTable> = Vec::new();
        for_each_k_subset(i - 1, k - 1, |rest| {
            let mut sv = rest.to_vec();
            sv.push(vi);
            tables.push(traces_on_vertices(h, &sv));
            true
        });

        let passes = |cand: &VertexSet| {
            tables
                .iter()
                .all(|t| t.contains_mask(mask_on(cand, t.s_vertices())))
        };

        let mut next_members: Vec<VertexSet> = Vec::new();
        let mut next_index: HashSet<VertexSet> = HashSet::new();
        for e in &members {
            let mut with_vi = e.clone();
            with_vi.insert(vi);
            for cand in [e, &with_vi] {
                if passes(cand) && next_index.insert(cand.clone()) {
                    next_members.push(cand.clone());
                    if next_members.len() > cap {
                        return Err(Error::ExtensionOverflow { cap, level: i });
                    }
                }
            }
        }
        members = next_members;
        index = next_index;
    }

    Ok(ExtensionFamily {
        universe_size: n,
        members,
        index,
    })
}

/// Members of the k-extension contained in no edge of `h`, in construction
/// order. These are the only extension members a dual-check needs to probe.
pub fn ext_k_nondominated(h: &Hypergraph, k: usize, cap: Option<usize>) -> Result<Vec<VertexSet>> {
    let fam = ext_k(h, k, cap)?;
    Ok(fam
        .members()
        .iter()
        .filter(|e| !h.edges().iter().any(|f| e.is_subset_of(f)))
        .cloned()
        .collect())
}
