//! Cyclicization: repeatedly delete sources and sinks.
//!
//! Removing a source (a simple injective) or a sink (a simple projective)
//! leaves the singularity category unchanged, and the end result does not
//! depend on the order of removals. What remains is either empty (the
//! cyclicization is simple) or a quiver with neither sources nor sinks.

use alloc::vec;
use alloc::vec::Vec;

use crate::quiver::ValuedQuiver;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RemovalKind {
    Source,
    Sink,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicizationResult {
    pub core: ValuedQuiver,
    /// Removed vertices (indices into the original quiver) in removal order.
    pub trace: Vec<(usize, RemovalKind)>,
    /// `embedding[k]` is the original index of core vertex `k`.
    pub embedding: Vec<usize>,
    pub is_simple: bool,
}

impl CyclicizationResult {
    /// Core index of an original vertex, if it survived.
    pub fn core_index(&self, original: usize) -> Option<usize> {
        self.embedding.iter().position(|&v| v == original)
    }
}

struct Peeler<'q> {
    quiver: &'q ValuedQuiver,
    alive: Vec<bool>,
    in_deg: Vec<usize>,
    out_deg: Vec<usize>,
}

impl<'q> Peeler<'q> {
    fn new(quiver: &'q ValuedQuiver) -> Self {
        let n = quiver.len();
        let mut in_deg = vec![0; n];
        let mut out_deg = vec![0; n];
        for (s, t, _) in quiver.arrows() {
            out_deg[s] += 1;
            in_deg[t] += 1;
        }
        Peeler { quiver, alive: vec![true; n], in_deg, out_deg }
    }

    fn kind(&self, v: usize) -> Option<RemovalKind> {
        if !self.alive[v] {
            None
        } else if self.in_deg[v] == 0 {
            Some(RemovalKind::Source)
        } else if self.out_deg[v] == 0 {
            Some(RemovalKind::Sink)
        } else {
            None
        }
    }

    fn candidates(&self) -> Vec<(usize, RemovalKind)> {
        (0..self.alive.len()).filter_map(|v| self.kind(v).map(|k| (v, k))).collect()
    }

    fn remove(&mut self, v: usize) {
        self.alive[v] = false;
        for (t, _) in self.quiver.out_arrows(v) {
            self.in_deg[t] -= 1;
        }
        for (s, _) in self.quiver.in_arrows(v) {
            self.out_deg[s] -= 1;
        }
    }

    fn finish(self, trace: Vec<(usize, RemovalKind)>) -> CyclicizationResult {
        let embedding: Vec<usize> = self.alive.iter().enumerate().filter_map(|(v, &a)| a.then_some(v)).collect();
        let core = self.quiver.full_subquiver(&embedding);
        CyclicizationResult { is_simple: core.is_empty(), core, trace, embedding }
    }
}

/// Peel in declaration order, rescanning from the first vertex after each
/// removal. An isolated vertex is recorded as a source.
pub fn cyclicize(q: &ValuedQuiver) -> CyclicizationResult {
    cyclicize_with(q, |_| 0)
}

/// Peel with a caller-chosen removal order: `choose` receives the current
/// removable vertices (ascending) and returns the position of the one to
/// remove next.
pub fn cyclicize_with<F>(q: &ValuedQuiver, mut choose: F) -> CyclicizationResult
where
    F: FnMut(&[(usize, RemovalKind)]) -> usize,
{
    let mut peeler = Peeler::new(q);
    let mut trace = Vec::new();
    loop {
        let candidates = peeler.candidates();
        if candidates.is_empty() {
            break;
        }
        let pick = candidates[choose(&candidates) % candidates.len()];
        peeler.remove(pick.0);
        trace.push(pick);
    }
    peeler.finish(trace)
}

/// Nonempty with no sources and no sinks.
pub fn is_cyclic_like(q: &ValuedQuiver) -> bool {
    !q.is_empty() && (0..q.len()).all(|v| !q.is_source(v) && !q.is_sink(v))
}
