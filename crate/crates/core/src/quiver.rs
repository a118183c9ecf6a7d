//! Valued quivers and their validation.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer;

use crate::error::QuiverError;

/// Opaque vertex label. Ordering inside a quiver is declaration order, not
/// the ordering of the labels themselves.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(String);

impl VertexId {
    pub fn new(label: impl Into<String>) -> Self {
        VertexId(label.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for VertexId {
    fn from(s: &str) -> Self {
        VertexId(s.into())
    }
}

impl From<String> for VertexId {
    fn from(s: String) -> Self {
        VertexId(s)
    }
}

/// The pair `(a, b)` attached to an arrow `i -> j`: `a` is the dimension of
/// `Ext¹(S_i, S_j)` over `Δ_j`, `b` its dimension over `Δ_i^op`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Valuation {
    pub a: u64,
    pub b: u64,
}

impl Valuation {
    pub const TRIVIAL: Valuation = Valuation { a: 1, b: 1 };

    pub const fn new(a: u64, b: u64) -> Self {
        Valuation { a, b }
    }

    /// `m` parallel arrows over a field.
    pub const fn split(m: u64) -> Self {
        Valuation { a: m, b: m }
    }

    pub fn is_trivial(&self) -> bool {
        *self == Self::TRIVIAL
    }
}

impl Default for Valuation {
    fn default() -> Self {
        Self::TRIVIAL
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawArrow {
    pub source: VertexId,
    pub target: VertexId,
    /// `None` means the trivial valuation.
    pub valuation: Option<Valuation>,
}

impl RawArrow {
    pub fn new(source: impl Into<VertexId>, target: impl Into<VertexId>) -> Self {
        RawArrow { source: source.into(), target: target.into(), valuation: None }
    }

    pub fn valued(source: impl Into<VertexId>, target: impl Into<VertexId>, a: u64, b: u64) -> Self {
        RawArrow { source: source.into(), target: target.into(), valuation: Some(Valuation::new(a, b)) }
    }
}

/// Unvalidated quiver data as it comes out of a parser or a builder.
///
/// Weights may be given for any subset of the vertices. Each weakly
/// connected component without a given weight receives its minimal positive
/// integer symmetrizer; components with given weights are propagated from
/// them.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RawQuiver {
    pub vertices: Vec<VertexId>,
    pub weights: Vec<(VertexId, u64)>,
    pub arrows: Vec<RawArrow>,
}

impl RawQuiver {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn vertex(mut self, id: impl Into<VertexId>) -> Self {
        self.vertices.push(id.into());
        self
    }

    pub fn vertices<I, V>(mut self, ids: I) -> Self
    where
        I: IntoIterator<Item = V>,
        V: Into<VertexId>,
    {
        self.vertices.extend(ids.into_iter().map(Into::into));
        self
    }

    pub fn weight(mut self, id: impl Into<VertexId>, f: u64) -> Self {
        self.weights.push((id.into(), f));
        self
    }

    pub fn arrow(mut self, source: impl Into<VertexId>, target: impl Into<VertexId>) -> Self {
        self.arrows.push(RawArrow::new(source, target));
        self
    }

    pub fn valued_arrow(mut self, source: impl Into<VertexId>, target: impl Into<VertexId>, a: u64, b: u64) -> Self {
        self.arrows.push(RawArrow::valued(source, target, a, b));
        self
    }

    pub fn validate(&self) -> Result<ValuedQuiver, QuiverError> {
        validate(self)
    }
}

/// A validated valued quiver.
///
/// Vertices are addressed by their position in declaration order; every
/// matrix and report uses that order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValuedQuiver {
    vertices: Vec<VertexId>,
    weights: Vec<u64>,
    arrows: BTreeMap<(usize, usize), Valuation>,
}

impl ValuedQuiver {
    pub fn empty() -> Self {
        ValuedQuiver { vertices: Vec::new(), weights: Vec::new(), arrows: BTreeMap::new() }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn vertex(&self, index: usize) -> &VertexId {
        &self.vertices[index]
    }

    pub fn index_of(&self, id: &VertexId) -> Option<usize> {
        self.vertices.iter().position(|v| v == id)
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn weight(&self, index: usize) -> u64 {
        self.weights[index]
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    /// All arrows, sorted by `(source, target)` index.
    pub fn arrows(&self) -> impl Iterator<Item = (usize, usize, Valuation)> + '_ {
        self.arrows.iter().map(|(&(s, t), &v)| (s, t, v))
    }

    pub fn valuation(&self, source: usize, target: usize) -> Option<Valuation> {
        self.arrows.get(&(source, target)).copied()
    }

    pub fn out_arrows(&self, source: usize) -> impl Iterator<Item = (usize, Valuation)> + '_ {
        self.arrows.range((source, 0)..(source + 1, 0)).map(|(&(_, t), &v)| (t, v))
    }

    pub fn in_arrows(&self, target: usize) -> impl Iterator<Item = (usize, Valuation)> + '_ {
        self.arrows.iter().filter(move |(&(_, t), _)| t == target).map(|(&(s, _), &v)| (s, v))
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out_arrows(v).count()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.in_arrows(v).count()
    }

    pub fn is_source(&self, v: usize) -> bool {
        self.in_degree(v) == 0
    }

    pub fn is_sink(&self, v: usize) -> bool {
        self.out_degree(v) == 0
    }

    /// `M[i][j] = a_ij` for each arrow `i -> j`, zero elsewhere.
    pub fn a_matrix(&self) -> Vec<Vec<u64>> {
        let n = self.len();
        let mut m = vec![vec![0; n]; n];
        for (s, t, v) in self.arrows() {
            m[s][t] = v.a;
        }
        m
    }

    pub fn b_matrix(&self) -> Vec<Vec<u64>> {
        let n = self.len();
        let mut m = vec![vec![0; n]; n];
        for (s, t, v) in self.arrows() {
            m[s][t] = v.b;
        }
        m
    }

    /// True when every valuation is `(1,1)`.
    pub fn is_trivially_valued(&self) -> bool {
        self.arrows.values().all(Valuation::is_trivial)
    }

    /// Full subquiver on `keep` (indices into `self`), in the given order.
    /// Weights and valuations are inherited.
    pub fn full_subquiver(&self, keep: &[usize]) -> ValuedQuiver {
        let mut new_index = vec![usize::MAX; self.len()];
        for (k, &v) in keep.iter().enumerate() {
            new_index[v] = k;
        }
        let arrows = self
            .arrows
            .iter()
            .filter_map(|(&(s, t), &v)| {
                let (ns, nt) = (new_index[s], new_index[t]);
                (ns != usize::MAX && nt != usize::MAX).then_some(((ns, nt), v))
            })
            .collect();
        ValuedQuiver {
            vertices: keep.iter().map(|&v| self.vertices[v].clone()).collect(),
            weights: keep.iter().map(|&v| self.weights[v]).collect(),
            arrows,
        }
    }

    /// Re-open the quiver as raw data with every weight pinned.
    pub fn to_raw(&self) -> RawQuiver {
        RawQuiver {
            vertices: self.vertices.clone(),
            weights: self.vertices.iter().cloned().zip(self.weights.iter().copied()).collect(),
            arrows: self
                .arrows()
                .map(|(s, t, v)| RawArrow {
                    source: self.vertices[s].clone(),
                    target: self.vertices[t].clone(),
                    valuation: Some(v),
                })
                .collect(),
        }
    }

    pub(crate) fn from_parts_unchecked(
        vertices: Vec<VertexId>,
        weights: Vec<u64>,
        arrows: BTreeMap<(usize, usize), Valuation>,
    ) -> Self {
        debug_assert_eq!(vertices.len(), weights.len());
        ValuedQuiver { vertices, weights, arrows }
    }
}

/// Positive rational used during symmetrizer propagation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Ratio {
    num: u128,
    den: u128,
}

impl Ratio {
    fn int(n: u64) -> Self {
        Ratio { num: n as u128, den: 1 }
    }

    fn scale(self, mul: u64, div: u64) -> Option<Self> {
        let num = self.num.checked_mul(mul as u128)?;
        let den = self.den.checked_mul(div as u128)?;
        let g = num.gcd(&den);
        Some(Ratio { num: num / g, den: den / g })
    }
}

/// Check raw quiver data and compute the symmetrizer weights.
pub fn validate(raw: &RawQuiver) -> Result<ValuedQuiver, QuiverError> {
    let n = raw.vertices.len();
    let mut index: BTreeMap<&VertexId, usize> = BTreeMap::new();
    for (i, id) in raw.vertices.iter().enumerate() {
        if index.insert(id, i).is_some() {
            return Err(QuiverError::DuplicateVertex { index: i, id: id.clone() });
        }
    }

    let mut arrows: BTreeMap<(usize, usize), Valuation> = BTreeMap::new();
    let mut arrow_pos: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for (k, arrow) in raw.arrows.iter().enumerate() {
        let lookup = |id: &VertexId| {
            index.get(id).copied().ok_or_else(|| QuiverError::DanglingEndpoint { arrow: k, id: id.clone() })
        };
        let s = lookup(&arrow.source)?;
        let t = lookup(&arrow.target)?;
        let v = arrow.valuation.unwrap_or_default();
        if v.a == 0 || v.b == 0 {
            return Err(QuiverError::NonPositiveValuation { arrow: k, a: v.a, b: v.b });
        }
        if s == t && v.a != v.b {
            return Err(QuiverError::LoopMismatch { arrow: k, vertex: arrow.source.clone(), a: v.a, b: v.b });
        }
        if arrows.insert((s, t), v).is_some() {
            return Err(QuiverError::DuplicateArrow {
                arrow: k,
                tail: arrow.source.clone(),
                head: arrow.target.clone(),
            });
        }
        arrow_pos.insert((s, t), k);
    }

    let mut given: Vec<Option<u64>> = vec![None; n];
    for (k, (id, f)) in raw.weights.iter().enumerate() {
        let &i = index.get(id).ok_or_else(|| QuiverError::UnknownWeightVertex { index: k, id: id.clone() })?;
        if *f == 0 {
            return Err(QuiverError::NonPositiveWeight { index: k, id: id.clone() });
        }
        if given[i].replace(*f).is_some() {
            return Err(QuiverError::DuplicateWeight { index: k, id: id.clone() });
        }
    }

    // Undirected adjacency: (neighbour, multiply-by, divide-by, arrow position).
    // Walking i -> j forwards gives f_j = f_i·b/a; backwards f_i = f_j·a/b.
    let mut adj: Vec<Vec<(usize, u64, u64, usize)>> = vec![Vec::new(); n];
    for (&(s, t), v) in &arrows {
        if s == t {
            continue;
        }
        let k = arrow_pos[&(s, t)];
        adj[s].push((t, v.b, v.a, k));
        adj[t].push((s, v.a, v.b, k));
    }

    let mut value: Vec<Option<Ratio>> = vec![None; n];
    let mut weights = vec![0u64; n];
    let mut in_component = vec![false; n];
    for start in 0..n {
        if value[start].is_some() {
            continue;
        }
        // Collect the component first so we can seed from a given weight.
        let mut component = Vec::new();
        let mut pending = VecDeque::from([start]);
        in_component[start] = true;
        while let Some(u) = pending.pop_front() {
            component.push(u);
            for &(w, _, _, _) in &adj[u] {
                if !in_component[w] {
                    in_component[w] = true;
                    pending.push_back(w);
                }
            }
        }
        let root = component.iter().copied().find(|&u| given[u].is_some()).unwrap_or(start);
        value[root] = Some(Ratio::int(given[root].unwrap_or(1)));
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            let fu = value[u].expect("queued vertices carry a value");
            for &(w, mul, div, k) in &adj[u] {
                let fw = fu.scale(mul, div).ok_or(QuiverError::Overflow)?;
                match value[w] {
                    None => {
                        value[w] = Some(fw);
                        queue.push_back(w);
                    }
                    Some(existing) if existing != fw => {
                        return Err(QuiverError::SymmetrizerInconsistent { arrow: k });
                    }
                    Some(_) => {}
                }
            }
        }

        if given[root].is_some() {
            for &u in &component {
                let r = value[u].expect("component fully visited");
                if r.den != 1 || r.num > u64::MAX as u128 {
                    return Err(QuiverError::NonIntegralWeight { id: raw.vertices[u].clone() });
                }
                if let Some(g) = given[u] {
                    if g as u128 != r.num {
                        // The first arrow on a path from the root explains the clash.
                        let k = adj[u].first().map(|e| e.3).unwrap_or(0);
                        return Err(QuiverError::SymmetrizerInconsistent { arrow: k });
                    }
                }
                weights[u] = r.num as u64;
            }
        } else {
            let lcm_den = component
                .iter()
                .try_fold(1u128, |acc, &u| {
                    let d = value[u].expect("visited").den;
                    acc.checked_mul(d / acc.gcd(&d))
                })
                .ok_or(QuiverError::Overflow)?;
            let mut ints = Vec::with_capacity(component.len());
            for &u in &component {
                let r = value[u].expect("visited");
                ints.push(r.num.checked_mul(lcm_den / r.den).ok_or(QuiverError::Overflow)?);
            }
            let g = ints.iter().fold(0u128, |acc, &x| acc.gcd(&x));
            for (&u, &x) in component.iter().zip(&ints) {
                let f = x / g;
                if f > u64::MAX as u128 {
                    return Err(QuiverError::Overflow);
                }
                weights[u] = f as u64;
            }
        }
    }

    Ok(ValuedQuiver { vertices: raw.vertices.clone(), weights, arrows })
}
