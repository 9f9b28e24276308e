//! Hypergraphs over a fixed vertex universe, with the reduction to
//! inclusion-minimal edges, transversal predicates, and the derived
//! subhypergraph operators used by the trace-realization machinery.

use crate::error::{Error, Result};
use crate::set::{VertexId, VertexSet};

/// A hypergraph: a universe `{0, ..., n-1}` plus an ordered list of edges.
///
/// Edge lists are kept as constructed (duplicates and dominated edges
/// included); only [`Hypergraph::sperner_reduce`] removes them. The `sperner`
/// flag records that the reduction has run.
#[derive(Clone, PartialEq, Eq)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<VertexSet>,
    sperner: bool,
    labels: Option<Vec<String>>,
}

impl Hypergraph {
    pub fn new(n: usize, edges: Vec<VertexSet>) -> Self {
        for e in &edges {
            assert_eq!(e.universe_size(), n, "edge universe does not match");
        }
        Hypergraph {
            n,
            edges,
            sperner: false,
            labels: None,
        }
    }

    pub fn from_edge_lists<I, E>(n: usize, edges: I) -> Self
    where
        I: IntoIterator<Item = E>,
        E: IntoIterator<Item = VertexId>,
    {
        Self::new(
            n,
            edges
                .into_iter()
                .map(|e| VertexSet::from_indices(n, e))
                .collect(),
        )
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.n, "one label per vertex required");
        self.labels = Some(labels);
        self
    }

    #[inline]
    pub fn universe_size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    #[inline]
    pub fn edge(&self, i: usize) -> &VertexSet {
        &self.edges[i]
    }

    #[inline]
    pub fn is_sperner(&self) -> bool {
        self.sperner
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Label of vertex `v`, falling back to its decimal index.
    pub fn label(&self, v: VertexId) -> String {
        match &self.labels {
            Some(ls) => ls[v].clone(),
            None => v.to_string(),
        }
    }

    /// Renders a set as its labels in ascending universe order.
    pub fn format_set(&self, set: &VertexSet) -> String {
        if set.is_empty() {
            return "-".to_string();
        }
        set.iter()
            .map(|v| self.label(v))
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Keeps the inclusion-minimal edges, dropping duplicates; surviving edges
    /// stay in first-occurrence order. The reduced hypergraph has the same
    /// minimal transversals as the original.
    pub fn sperner_reduce(&self) -> Hypergraph {
        // each survivor is pushed at its first occurrence and `retain` keeps
        // relative order, so the result is in first-occurrence order
        let mut kept: Vec<&VertexSet> = Vec::new();
        for e in &self.edges {
            if kept.iter().any(|k| k.is_subset_of(e)) {
                continue;
            }
            kept.retain(|k| !e.is_subset_of(k));
            kept.push(e);
        }
        Hypergraph {
            n: self.n,
            edges: kept.into_iter().cloned().collect(),
            sperner: true,
            labels: self.labels.clone(),
        }
    }

    /// True iff `x` meets every edge. Vacuously true with no edges; always
    /// false when an empty edge is present.
    pub fn is_transversal(&self, x: &VertexSet) -> bool {
        assert_eq!(x.universe_size(), self.n, "universe mismatch");
        self.edges.iter().all(|e| e.intersects(x))
    }

    /// True iff `x` is a transversal and no proper subset is; equivalently,
    /// every member of `x` has a private edge it alone hits.
    pub fn is_minimal_transversal(&self, x: &VertexSet) -> bool {
        if !self.is_transversal(x) {
            return false;
        }
        x.iter().all(|v| {
            self.edges
                .iter()
                .any(|e| e.contains(v) && e.intersection_len(x) == 1)
        })
    }

    /// Shrinks a transversal to a minimal one by scanning its members in
    /// ascending index order and dropping each whose removal keeps the set a
    /// transversal.
    pub fn minimalize(&self, x: &VertexSet) -> Result<VertexSet> {
        if !self.is_transversal(x) {
            return Err(Error::NotATransversal);
        }
        let mut cur = x.clone();
        for v in x.iter() {
            cur.remove(v);
            if !self.is_transversal(&cur) {
                cur.insert(v);
            }
        }
        Ok(cur)
    }

    /// Intersects the selected edges (all when `edge_indices` is `None`) with
    /// `vs` and re-indexes onto the sub-universe. Empty intersections are
    /// dropped unless `keep_empty` is set.
    pub fn derive_sub(
        &self,
        vs: &VertexSet,
        edge_indices: Option<&[usize]>,
        keep_empty: bool,
    ) -> Result<(Hypergraph, SubMap)> {
        assert_eq!(vs.universe_size(), self.n, "universe mismatch");
        let map = SubMap::new(vs);
        let mut edges = Vec::new();
        let mut push = |e: &VertexSet| {
            let part = e.intersection(vs);
            if keep_empty || !part.is_empty() {
                edges.push(map.to_sub(&part));
            }
        };
        match edge_indices {
            Some(ixs) => {
                for &i in ixs {
                    if i >= self.edges.len() {
                        return Err(Error::EdgeIndexOutOfRange {
                            index: i,
                            count: self.edges.len(),
                        });
                    }
                    push(&self.edges[i]);
                }
            }
            None => {
                for e in &self.edges {
                    push(e);
                }
            }
        }
        let labels = self
            .labels
            .as_ref()
            .map(|ls| map.old_of_new.iter().map(|&v| ls[v].clone()).collect());
        Ok((
            Hypergraph {
                n: map.sub_universe_size(),
                edges,
                sperner: false,
                labels,
            },
            map,
        ))
    }

    /// Keeps only the edges entirely inside `vs`, re-indexed onto the
    /// sub-universe.
    pub fn restriction(&self, vs: &VertexSet) -> (Hypergraph, SubMap) {
        assert_eq!(vs.universe_size(), self.n, "universe mismatch");
        let map = SubMap::new(vs);
        let edges = self
            .edges
            .iter()
            .filter(|e| e.is_subset_of(vs))
            .map(|e| map.to_sub(e))
            .collect();
        let labels = self
            .labels
            .as_ref()
            .map(|ls| map.old_of_new.iter().map(|&v| ls[v].clone()).collect());
        (
            Hypergraph {
                n: map.sub_universe_size(),
                edges,
                sperner: false,
                labels,
            },
            map,
        )
    }

    /// Edges as sorted index lists, mainly for tests and display.
    pub fn edge_lists(&self) -> Vec<Vec<VertexId>> {
        self.edges.iter().map(|e| e.to_vec()).collect()
    }

    /// Appends `e` unless a kept edge is contained in it, evicting kept
    /// edges that contain `e`. Keeps the family an antichain in
    /// first-occurrence order, matching what a full re-reduction of the
    /// extended edge list would produce.
    pub(crate) fn insert_edge_minimal(&mut self, e: VertexSet) {
        assert_eq!(e.universe_size(), self.n, "universe mismatch");
        if self.edges.iter().any(|k| k.is_subset_of(&e)) {
            return;
        }
        self.edges.retain(|k| !e.is_subset_of(k));
        self.edges.push(e);
    }
}

impl std::fmt::Debug for Hypergraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Hypergraph(n={}, edges={:?})", self.n, self.edge_lists())
    }
}

/// Records how a sub-universe was carved out of a larger one, so sets can be
/// mapped in both directions.
#[derive(Clone, Debug)]
pub struct SubMap {
    super_size: usize,
    old_of_new: Vec<VertexId>,
    new_of_old: Vec<Option<VertexId>>,
}

impl SubMap {
    pub(crate) fn new(vs: &VertexSet) -> Self {
        let old_of_new: Vec<VertexId> = vs.iter().collect();
        let mut new_of_old = vec![None; vs.universe_size()];
        for (new, &old) in old_of_new.iter().enumerate() {
            new_of_old[old] = Some(new);
        }
        SubMap {
            super_size: vs.universe_size(),
            old_of_new,
            new_of_old,
        }
    }

    pub fn sub_universe_size(&self) -> usize {
        self.old_of_new.len()
    }

    /// Maps a set in the original universe into the sub-universe. Members
    /// outside the sub-universe are dropped.
    pub fn to_sub(&self, set: &VertexSet) -> VertexSet {
        assert_eq!(set.universe_size(), self.super_size, "universe mismatch");
        VertexSet::from_indices(
            self.old_of_new.len(),
            set.iter().filter_map(|v| self.new_of_old[v]),
        )
    }

    /// Maps a set in the sub-universe back to the original one.
    pub fn to_super(&self, set: &VertexSet) -> VertexSet {
        assert_eq!(
            set.universe_size(),
            self.old_of_new.len(),
            "universe mismatch"
        );
        VertexSet::from_indices(self.super_size, set.iter().map(|v| self.old_of_new[v]))
    }
}
