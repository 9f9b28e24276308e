//! Incremental enumeration of all minimal transversals: grow a partial list
//! one member per dual-check step until the check reports completeness.

use crate::dualizer::{Dualizer, DualizeMode, StepOutcome};
use crate::error::Result;
use crate::hypergraph::Hypergraph;
use crate::set::VertexSet;
use crate::traces::vc_dim;
use std::time::{Duration, Instant};

/// How the trace width k is picked.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KPolicy {
    Fixed(usize),
    /// vc_dim(h) + 1, by brute-force VC computation. Exponential in the
    /// universe; meant for small instances.
    AutoVc,
    /// floor(log2 m) + 1, clamped to [1, n]. Always sound; gives the
    /// quasi-polynomial general mode.
    AutoLog,
}

/// Enumeration mode: the general two-loop check under some k policy, or the
/// conformal fast path that skips the extension loop at a caller-supplied k.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EnumMode {
    General(KPolicy),
    /// Sound only for k-conformal inputs; not verified here.
    Conformal(usize),
}

#[derive(Clone, Copy, Debug)]
pub struct EnumConfig {
    pub mode: EnumMode,
    pub limit: Option<usize>,
}

impl Default for EnumConfig {
    fn default() -> Self {
        EnumConfig {
            mode: EnumMode::General(KPolicy::AutoLog),
            limit: None,
        }
    }
}

/// Resolves a k policy against a Sperner-reduced hypergraph with at least
/// one edge.
pub fn choose_k(h: &Hypergraph, policy: KPolicy) -> Result<usize> {
    let n = h.universe_size();
    let validated = |k: usize| {
        if k == 0 || k > n {
            Err(crate::error::Error::KOutOfRange { k, n })
        } else {
            Ok(k)
        }
    };
    match policy {
        KPolicy::Fixed(k) => validated(k),
        KPolicy::AutoVc => validated((vc_dim(h) + 1) as usize),
        KPolicy::AutoLog => {
            let m = h.edge_count();
            assert!(m >= 1, "k policies need at least one edge");
            let k = (usize::BITS - 1 - m.leading_zeros()) as usize + 1;
            Ok(k.clamp(1, n))
        }
    }
}

/// Streams the minimal transversals of `h`, one per dual-check step, in
/// discovery order. Construction Sperner-reduces the input; an empty edge
/// yields an empty stream, an edge-less input yields only the empty set.
pub fn enumerate_all(h: &Hypergraph, config: EnumConfig) -> Result<Enumeration> {
    let reduced = h.sperner_reduce();
    let state = if reduced.edges().iter().any(|e| e.is_empty()) {
        State::Finished
    } else if reduced.edge_count() == 0 {
        State::EmitEmptySet
    } else {
        let (k, mode) = match config.mode {
            EnumMode::General(policy) => (choose_k(&reduced, policy)?, DualizeMode::General),
            EnumMode::Conformal(k) => (k, DualizeMode::Conformal),
        };
        let mut dualizer = Dualizer::new(reduced.clone(), k, mode, None)?;
        // a long-running driver amortizes the shared caches up front: the
        // extension list is fixed by h, and eagerly maintained views spread
        // the projection work evenly over the steps
        dualizer.ensure_extension()?;
        if Dualizer::view_count_bound(reduced.universe_size(), k) <= 200_000 {
            dualizer.enable_eager_views();
        }
        State::Seed(dualizer)
    };
    Ok(Enumeration {
        h: reduced,
        found: Vec::new(),
        limit: config.limit,
        truncated: false,
        step_durations: Vec::new(),
        state,
    })
}

enum State {
    EmitEmptySet,
    Seed(Dualizer),
    Running(Dualizer),
    Finished,
}

/// Iterator over the minimal transversals. Internal dual-check failures (for
/// example an extension cap overflow under a fixed k chosen too small)
/// surface as an `Err` item, after which the stream ends.
pub struct Enumeration {
    h: Hypergraph,
    found: Vec<VertexSet>,
    limit: Option<usize>,
    truncated: bool,
    step_durations: Vec<Duration>,
    state: State,
}

impl Enumeration {
    /// The Sperner-reduced hypergraph being enumerated.
    pub fn hypergraph(&self) -> &Hypergraph {
        &self.h
    }

    /// Number of members emitted so far.
    pub fn emitted(&self) -> usize {
        self.found.len()
    }

    /// True once the stream stopped early because of `limit`.
    pub fn truncated(&self) -> bool {
        self.truncated
    }

    /// Wall time of each dual-check step, including the final one that
    /// returned Dual.
    pub fn step_durations(&self) -> &[Duration] {
        &self.step_durations
    }

    fn at_limit(&self) -> bool {
        self.limit.is_some_and(|l| self.found.len() >= l)
    }
}

impl Iterator for Enumeration {
    type Item = Result<VertexSet>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.at_limit() && !matches!(self.state, State::Finished) {
            self.truncated = true;
            self.state = State::Finished;
            return None;
        }
        match std::mem::replace(&mut self.state, State::Finished) {
            State::Finished => None,
            State::EmitEmptySet => {
                let empty = VertexSet::empty(self.h.universe_size());
                self.found.push(empty.clone());
                Some(Ok(empty))
            }
            State::Seed(dualizer) => {
                let seed = self
                    .h
                    .minimalize(&VertexSet::full(self.h.universe_size()))
                    .expect("the full universe hits every nonempty edge");
                debug_assert!(self.h.is_minimal_transversal(&seed));
                self.found.push(seed.clone());
                self.state = State::Running(dualizer);
                Some(Ok(seed))
            }
            State::Running(mut dualizer) => {
                let g = Hypergraph::new(self.h.universe_size(), self.found.clone());
                let start = Instant::now();
                let outcome = dualizer.step(&g);
                self.step_durations.push(start.elapsed());
                match outcome {
                    Ok(StepOutcome::Dual) => None,
                    Ok(StepOutcome::NewTransversal { set, .. }) => {
                        debug_assert!(self.h.is_minimal_transversal(&set));
                        debug_assert!(!self.found.contains(&set));
                        self.found.push(set.clone());
                        self.state = State::Running(dualizer);
                        Some(Ok(set))
                    }
                    Err(e) => Some(Err(e)),
                }
            }
        }
    }
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

    fn collect(h: &Hypergraph, config: EnumConfig) -> Vec<VertexSet> {
        enumerate_all(h, config)
            .unwrap()
            .map(|r| r.unwrap())
            .collect()
    }

    #[test]
    fn k_choices() {
        let h = h1().sperner_reduce();
        assert_eq!(choose_k(&h, KPolicy::AutoVc).unwrap(), 2);
        assert_eq!(choose_k(&h, KPolicy::AutoLog).unwrap(), 2);
        assert_eq!(choose_k(&h, KPolicy::Fixed(4)).unwrap(), 4);
        assert!(choose_k(&h, KPolicy::Fixed(0)).is_err());
        assert!(choose_k(&h, KPolicy::Fixed(5)).is_err());
    }

    #[test]
    fn enumerates_h1_in_discovery_order() {
        let got = collect(
            &h1(),
            EnumConfig {
                mode: EnumMode::General(KPolicy::Fixed(2)),
                limit: None,
            },
        );
        // seed is the greedy minimalization of the full universe; the rest
        // follow in deterministic step order
        assert_eq!(
            got,
            vec![vs(4, &[1, 3]), vs(4, &[0, 2]), vs(4, &[1, 2])]
        );
    }

    #[test]
    fn single_singleton_edge() {
        let h = Hypergraph::from_edge_lists(1, [vec![0]]);
        let got = collect(&h, EnumConfig::default());
        assert_eq!(got, vec![vs(1, &[0])]);
    }

    #[test]
    fn empty_edge_means_no_transversals() {
        let h = Hypergraph::from_edge_lists(3, [vec![0, 1], vec![]]);
        let got = collect(&h, EnumConfig::default());
        assert!(got.is_empty());
    }

    #[test]
    fn no_edges_means_empty_set_only() {
        let h = Hypergraph::new(3, vec![]);
        let got = collect(&h, EnumConfig::default());
        assert_eq!(got, vec![VertexSet::empty(3)]);
    }

    #[test]
    fn limit_truncates() {
        let mut stream = enumerate_all(
            &h1(),
            EnumConfig {
                mode: EnumMode::General(KPolicy::Fixed(2)),
                limit: Some(2),
            },
        )
        .unwrap();
        assert_eq!(stream.by_ref().filter_map(|r| r.ok()).count(), 2);
        assert!(stream.truncated());
    }

    #[test]
    fn conformal_mode_matches_general_on_conformal_input() {
        // 2-uniform path: triangle-free, hence 2-conformal
        let path = Hypergraph::from_edge_lists(5, [vec![0, 1], vec![1, 2], vec![2, 3], vec![3, 4]]);
        let general = collect(
            &path,
            EnumConfig {
                mode: EnumMode::General(KPolicy::Fixed(2)),
                limit: None,
            },
        );
        let conformal = collect(
            &path,
            EnumConfig {
                mode: EnumMode::Conformal(2),
                limit: None,
            },
        );
        let sort = |mut v: Vec<VertexSet>| {
            v.sort();
            v
        };
        assert_eq!(sort(general), sort(conformal));
    }
}
