//! The dual-check: given a Sperner hypergraph `h` and a partial list `g` of
//! its minimal transversals, either confirm the list is complete or produce a
//! missing one.
//!
//! The core check works on the flipped question "is h exactly Tr(g)?": a
//! counterexample E ∈ Tr(g) \ h either realizes a k-trace no edge of h
//! realizes (loop 1) or is k-compatible with h and dominated by no edge
//! (loop 2). Either way E yields a new minimal transversal of h inside its
//! complement. The verdict is correct for every k; only the running time
//! depends on choosing k above the VC-dimension of h.

use crate::error::{Error, Result};
use crate::extension::ext_k_nondominated;
use crate::hypergraph::{Hypergraph, SubMap};
use crate::set::{VertexId, VertexSet};
use crate::subtransversal::is_subtransversal;
use crate::traces::{missing_k_traces, Trace};
use std::collections::HashMap;

/// Which loops the core check runs. `Conformal` skips the extension loop;
/// that is sound only when the caller knows `h` is k-conformal (every
/// extension member is then dominated by an edge), and is not verified here.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DualizeMode {
    General,
    Conformal,
}

/// Where a witness came from.
#[derive(Clone, Debug)]
pub enum Provenance {
    /// The precheck found an edge of `h` that is a non-minimal transversal
    /// of `g`: edge index and the removable vertex.
    Precheck { edge_index: usize, vertex: VertexId },
    /// Loop 1: a minimal transversal of `g` realizing this missing k-trace.
    TraceLoop(Trace),
    /// Loop 2: a non-dominated k-compatible set that is a minimal
    /// transversal of `g`.
    ExtensionLoop,
}

/// Outcome of the core check: either the hypergraphs are dual or we hold a
/// member of Tr(g) \ h.
#[derive(Clone, Debug)]
pub enum DualCheckOutcome {
    Dual,
    Witness {
        set: VertexSet,
        provenance: Provenance,
    },
}

/// Outcome of a full step: either `g` is complete or we hold a member of
/// Tr(h) \ g.
#[derive(Clone, Debug)]
pub enum StepOutcome {
    Dual,
    NewTransversal {
        set: VertexSet,
        provenance: Provenance,
    },
}

/// Scans the edges of `h` in order for one that is a non-minimal transversal
/// of `g`, returning the first `(edge index, removable vertex)` found, the
/// vertex taken in ascending order. `None` means every edge of `h` is a
/// minimal transversal of `g`.
///
/// Errors with [`Error::EdgeNotTransversal`] if some edge of `h` fails to be
/// a transversal of `g` at all — that means `g` is not a sub-family of
/// `Tr(h)` and the caller's instance is malformed.
pub fn precheck_minimal(h: &Hypergraph, g: &Hypergraph) -> Result<Option<(usize, VertexId)>> {
    assert_eq!(h.universe_size(), g.universe_size(), "universe mismatch");
    for (i, e) in h.edges().iter().enumerate() {
        if !g.is_transversal(e) {
            return Err(Error::EdgeNotTransversal { index: i });
        }
        let mut reduced = e.clone();
        for x in e.iter() {
            reduced.remove(x);
            if g.is_transversal(&reduced) {
                return Ok(Some((i, x)));
            }
            reduced.insert(x);
        }
    }
    Ok(None)
}

/// The projection of `g` onto the complement of a fixed removed set
/// `D = S \ T`, kept Sperner-reduced, shared across every trace with that
/// `D` and folded forward as `g` grows. Incremental minimal-insertion
/// produces exactly what a from-scratch projection and reduction of the
/// current `g` would, including edge order, so cached and fresh paths pick
/// identical witnesses.
struct CachedView {
    /// False once some member of `g` lies inside `D`: every edge of the
    /// projection would be empty, no candidate can avoid `D`.
    live: bool,
    map: SubMap,
    sub: Hypergraph,
    folded: usize,
}

impl CachedView {
    fn new(removed: &VertexSet) -> Self {
        let map = SubMap::new(&removed.complement());
        let sub = Hypergraph::new(map.sub_universe_size(), Vec::new());
        CachedView {
            live: true,
            map,
            sub,
            folded: 0,
        }
    }

    fn fold_up_to(&mut self, g: &Hypergraph) {
        if self.live {
            for i in self.folded..g.edge_count() {
                let proj = self.map.to_sub(g.edge(i));
                if proj.is_empty() {
                    self.live = false;
                    break;
                }
                self.sub.insert_edge_minimal(proj);
            }
        }
        self.folded = g.edge_count();
    }
}

/// Reusable dual-check state for a fixed `h`, `k` and mode. The extension
/// list depends only on `h` and is computed once, on first use; the trace
/// stream is re-enumerated per step (it is cheap next to the realizability
/// checks). Projected views of `g` are cached across steps as long as `g`
/// only grows by appending, which is how the enumeration driver uses them.
pub struct Dualizer {
    h: Hypergraph,
    k: usize,
    mode: DualizeMode,
    cap: Option<usize>,
    ext_nondominated: Option<Result<Vec<VertexSet>>>,
    views: HashMap<VertexSet, CachedView>,
    g_prefix: Vec<VertexSet>,
    eager_views: bool,
}

impl Dualizer {
    /// `h` must be Sperner-reduced (see [`Hypergraph::sperner_reduce`]).
    pub fn new(h: Hypergraph, k: usize, mode: DualizeMode, cap: Option<usize>) -> Result<Self> {
        assert!(h.is_sperner(), "dual checks require a Sperner-reduced h");
        let n = h.universe_size();
        if k == 0 || k > n {
            return Err(Error::KOutOfRange { k, n });
        }
        if k > 63 {
            return Err(Error::KTooLarge { k });
        }
        Ok(Dualizer {
            h,
            k,
            mode,
            cap,
            ext_nondominated: None,
            views: HashMap::new(),
            g_prefix: Vec::new(),
            eager_views: false,
        })
    }

    pub fn hypergraph(&self) -> &Hypergraph {
        &self.h
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Switches the view cache to eager maintenance: every step folds the
    /// newly added members into every projected view, so the work of keeping
    /// the cache current is spread evenly across steps instead of piling up
    /// on the first step that scans deep. Worth it for drivers that run many
    /// steps on the same instance; the view count is `sum_{d<=k} C(n, d)`,
    /// so callers should gate on that.
    pub fn enable_eager_views(&mut self) {
        self.eager_views = true;
    }

    /// Forces the extension list (it depends only on `h`), so later steps
    /// never pay its construction. Errors with the same overflow the lazy
    /// path would hit.
    pub fn ensure_extension(&mut self) -> Result<()> {
        if self.mode == DualizeMode::General {
            self.ext_nondominated
                .get_or_insert_with(|| ext_k_nondominated(&self.h, self.k, self.cap))
                .clone()?;
        }
        Ok(())
    }

    /// Number of distinct removed sets `D = S \ T` the trace loop can see.
    pub(crate) fn view_count_bound(n: usize, k: usize) -> u128 {
        let mut total: u128 = 0;
        let mut binom: u128 = 1;
        for d in 0..=k {
            total = total.saturating_add(binom);
            binom = binom
                .saturating_mul((n - d) as u128)
                .saturating_div(d as u128 + 1);
        }
        total
    }

    /// Brings the view cache in line with `g`. Cached views assume `g` grows
    /// by appending; anything else resets the cache.
    fn sync_views(&mut self, g: &Hypergraph) {
        if !g.edges().starts_with(&self.g_prefix) {
            self.views.clear();
        }
        self.g_prefix = g.edges().to_vec();
        if !self.eager_views {
            return;
        }
        if self.views.is_empty() {
            let n = self.h.universe_size();
            for d in 0..=self.k {
                crate::set::for_each_k_subset(n, d, |sv| {
                    let removed = VertexSet::from_indices(n, sv.iter().copied());
                    self.views
                        .insert(removed.clone(), CachedView::new(&removed));
                    true
                });
            }
        }
        for view in self.views.values_mut() {
            view.fold_up_to(g);
        }
    }

    /// Runs the two loops. Assumes every edge of `h` is already known to be
    /// a minimal transversal of `g` (the precheck passed).
    pub fn core_check(&mut self, g: &Hypergraph) -> Result<DualCheckOutcome> {
        assert_eq!(
            self.h.universe_size(),
            g.universe_size(),
            "universe mismatch"
        );

        self.sync_views(g);

        // loop 1: missing k-traces, realizability against Tr(g). The
        // projected view of g depends only on D = S \ T, so it is shared
        // across the up-to-2^k traces with that removed set and across steps.
        let h = self.h.clone(); // frees `self` for the view cache below
        for trace in missing_k_traces(&h, self.k)? {
            let removed = trace.s().difference(trace.t());
            let view = self
                .views
                .entry(removed.clone())
                .or_insert_with(|| CachedView::new(&removed));
            view.fold_up_to(g);
            if !view.live {
                continue; // an edge of g lies inside D: trace unrealizable
            }
            if let Some(cert) = is_subtransversal(&view.sub, &view.map.to_sub(trace.t())) {
                return Ok(DualCheckOutcome::Witness {
                    set: view.map.to_super(&cert.witness),
                    provenance: Provenance::TraceLoop(trace),
                });
            }
        }

        // loop 2: k-compatible sets dominated by no edge of h
        if self.mode == DualizeMode::General {
            let ext = self
                .ext_nondominated
                .get_or_insert_with(|| ext_k_nondominated(&self.h, self.k, self.cap))
                .clone()?;
            for e in &ext {
                if g.is_minimal_transversal(e) {
                    return Ok(DualCheckOutcome::Witness {
                        set: e.clone(),
                        provenance: Provenance::ExtensionLoop,
                    });
                }
            }
        }

        Ok(DualCheckOutcome::Dual)
    }

    /// One full step: validate `g ⊆ Tr(h)`, run the precheck, then the core
    /// check, and map any witness back into a member of Tr(h) \ g.
    pub fn step(&mut self, g: &Hypergraph) -> Result<StepOutcome> {
        for (i, member) in g.edges().iter().enumerate() {
            if !self.h.is_minimal_transversal(member) {
                return Err(Error::NotInDual {
                    index: i,
                    member: member.clone(),
                });
            }
        }
        self.sync_views(g);

        if let Some((edge_index, x)) = precheck_minimal(&self.h, g)? {
            let mut candidate = self.h.edge(edge_index).complement();
            candidate.insert(x);
            let set = self
                .h
                .minimalize(&candidate)
                .expect("complement of an edge plus a removable vertex hits every edge");
            return Ok(StepOutcome::NewTransversal {
                set,
                provenance: Provenance::Precheck {
                    edge_index,
                    vertex: x,
                },
            });
        }

        match self.core_check(g)? {
            DualCheckOutcome::Dual => Ok(StepOutcome::Dual),
            DualCheckOutcome::Witness { set, provenance } => {
                // set ∈ Tr(g) \ h contains no edge of h, so its complement
                // is a transversal of h, and none of its minimal
                // sub-transversals can be in g
                let new = self
                    .h
                    .minimalize(&set.complement())
                    .expect("complement of a core witness hits every edge");
                Ok(StepOutcome::NewTransversal {
                    set: new,
                    provenance,
                })
            }
        }
    }
}

/// One-shot core check (Sperner `h`, precheck assumed done).
pub fn dualize_core(
    h: &Hypergraph,
    g: &Hypergraph,
    k: usize,
    mode: DualizeMode,
) -> Result<DualCheckOutcome> {
    Dualizer::new(h.clone(), k, mode, None)?.core_check(g)
}

/// One-shot step: decide `g = Tr(h)` or produce a member of Tr(h) \ g.
pub fn trans_hyp_step(
    h: &Hypergraph,
    g: &Hypergraph,
    k: usize,
    mode: DualizeMode,
) -> Result<StepOutcome> {
    Dualizer::new(h.clone(), k, mode, None)?.step(g)
}
