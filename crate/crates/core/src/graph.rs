//! Structural analysis of the underlying digraph: sources, sinks, cycles and
//! strongly connected components.

use alloc::vec;
use alloc::vec::Vec;

use crate::quiver::ValuedQuiver;

/// Vertex sets are sorted index lists (declaration order).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexClassification {
    /// No incoming arrows (simple injective).
    pub sources: Vec<usize>,
    /// No outgoing arrows (simple projective).
    pub sinks: Vec<usize>,
    /// Lies on an oriented cycle (loops included).
    pub cyclic: Vec<usize>,
    /// On a path that starts and ends at cyclic vertices.
    pub cyclic_like: Vec<usize>,
    pub reaches_cycle: Vec<usize>,
    pub reached_by_cycle: Vec<usize>,
    /// Strongly connected components in reverse topological order.
    pub scc: Vec<Vec<usize>>,
    /// `component_of[v]` indexes into `scc`.
    pub component_of: Vec<usize>,
}

impl VertexClassification {
    pub fn is_source(&self, v: usize) -> bool {
        self.sources.binary_search(&v).is_ok()
    }

    pub fn is_sink(&self, v: usize) -> bool {
        self.sinks.binary_search(&v).is_ok()
    }

    pub fn is_cyclic(&self, v: usize) -> bool {
        self.cyclic.binary_search(&v).is_ok()
    }

    pub fn is_cyclic_like(&self, v: usize) -> bool {
        self.cyclic_like.binary_search(&v).is_ok()
    }

    pub fn reaches_cycle(&self, v: usize) -> bool {
        self.reaches_cycle.binary_search(&v).is_ok()
    }

    pub fn reached_by_cycle(&self, v: usize) -> bool {
        self.reached_by_cycle.binary_search(&v).is_ok()
    }
}

fn successors(q: &ValuedQuiver) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); q.len()];
    for (s, t, _) in q.arrows() {
        adj[s].push(t);
    }
    adj
}

fn predecessors(q: &ValuedQuiver) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); q.len()];
    for (s, t, _) in q.arrows() {
        adj[t].push(s);
    }
    adj
}

/// Tarjan's algorithm with an explicit call stack.
pub fn strongly_connected_components(adj: &[Vec<usize>]) -> Vec<Vec<usize>> {
    const UNSEEN: usize = usize::MAX;
    let n = adj.len();
    let mut index = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut comps = Vec::new();
    let mut next = 0;

    for root in 0..n {
        if index[root] != UNSEEN {
            continue;
        }
        // (vertex, position in its successor list)
        let mut call: Vec<(usize, usize)> = vec![(root, 0)];
        index[root] = next;
        low[root] = next;
        next += 1;
        stack.push(root);
        on_stack[root] = true;

        while let Some(top) = call.last_mut() {
            let v = top.0;
            if let Some(&w) = adj[v].get(top.1) {
                top.1 += 1;
                if index[w] == UNSEEN {
                    index[w] = next;
                    low[w] = next;
                    next += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
                continue;
            }
            call.pop();
            if let Some(&(parent, _)) = call.last() {
                low[parent] = low[parent].min(low[v]);
            }
            if low[v] == index[v] {
                let mut comp = Vec::new();
                loop {
                    let w = stack.pop().expect("root is on the stack");
                    on_stack[w] = false;
                    comp.push(w);
                    if w == v {
                        break;
                    }
                }
                comp.sort_unstable();
                comps.push(comp);
            }
        }
    }
    comps
}

fn closure(adj: &[Vec<usize>], seeds: &[usize]) -> Vec<bool> {
    let mut mark = vec![false; adj.len()];
    let mut stack: Vec<usize> = seeds.to_vec();
    for &s in seeds {
        mark[s] = true;
    }
    while let Some(v) = stack.pop() {
        for &w in &adj[v] {
            if !mark[w] {
                mark[w] = true;
                stack.push(w);
            }
        }
    }
    mark
}

fn indices(mask: &[bool]) -> Vec<usize> {
    mask.iter().enumerate().filter_map(|(i, &m)| m.then_some(i)).collect()
}

pub fn classify(q: &ValuedQuiver) -> VertexClassification {
    let n = q.len();
    let succ = successors(q);
    let pred = predecessors(q);
    let scc = strongly_connected_components(&succ);
    let mut component_of = vec![0; n];
    for (c, comp) in scc.iter().enumerate() {
        for &v in comp {
            component_of[v] = c;
        }
    }

    let mut cyclic_mask = vec![false; n];
    for comp in &scc {
        let on_cycle = comp.len() > 1 || q.valuation(comp[0], comp[0]).is_some();
        if on_cycle {
            for &v in comp {
                cyclic_mask[v] = true;
            }
        }
    }
    let cyclic = indices(&cyclic_mask);
    let reaches = closure(&pred, &cyclic);
    let reached = closure(&succ, &cyclic);
    let like: Vec<bool> = reaches.iter().zip(&reached).map(|(&a, &b)| a && b).collect();

    VertexClassification {
        sources: (0..n).filter(|&v| pred[v].is_empty()).collect(),
        sinks: (0..n).filter(|&v| succ[v].is_empty()).collect(),
        cyclic,
        cyclic_like: indices(&like),
        reaches_cycle: indices(&reaches),
        reached_by_cycle: indices(&reached),
        scc,
        component_of,
    }
}
