//! The associated regular algebra `Γ(A)`.
//!
//! `Γ(A)` is the direct limit of the semisimple algebras
//! `End_{A/r}(r^{⊗i}) = ∏_j M_{c_j}(Δ_j^op)`, where `c^{(i)}` is the
//! dimension vector of `r^{⊗i} = Ω^i(A/r)`. Its level-by-level block data is
//! a Bratteli diagram. When the singularity category is Hom-finite, `Γ(A)`
//! is semisimple: one block per vertex of the cyclicization, permuted by
//! the shift functor.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::RangeInclusive;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::cyclicize::cyclicize;
use crate::error::Error;
use crate::perm::Permutation;
use crate::quiver::{Valuation, ValuedQuiver, VertexId};
use crate::syzygy::{default_horizon, syzygy_step, DimVector, SingularityData};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BratteliDiagram {
    /// `levels[i]` lists `(vertex, c^{(i)}_vertex)` for the nonzero blocks.
    pub levels: Vec<Vec<(usize, BigUint)>>,
    /// `edges[i]` lists `(l, j, a_lj)` from block `l` at level `i` to block
    /// `j` at level `i + 1`.
    pub edges: Vec<Vec<(usize, usize, u64)>>,
    /// `Σ_j (c^{(i)}_j)²·f_j`.
    pub level_dims: Vec<BigUint>,
    /// Whether the map from level `i` to level `i + 1` is injective.
    pub injective_flags: Vec<bool>,
}

impl BratteliDiagram {
    pub fn depth(&self) -> usize {
        self.edges.len()
    }

    /// Block size at `(level, vertex)`, zero when absent.
    pub fn size(&self, level: usize, vertex: usize) -> BigUint {
        self.levels[level].iter().find(|(v, _)| *v == vertex).map(|(_, c)| c.clone()).unwrap_or_default()
    }

    /// Smallest `p ≥ 1` with `levels[i + p] == levels[i]` for every level
    /// inside the diagram.
    pub fn period_from_start(&self) -> Option<usize> {
        (1..self.levels.len()).find(|&p| (0..self.levels.len() - p).all(|i| self.levels[i] == self.levels[i + p]))
    }
}

pub fn bratteli(q: &ValuedQuiver, depth: usize) -> Result<BratteliDiagram, Error> {
    if depth < 1 {
        return Err(Error::InvalidDepth);
    }
    let n = q.len();
    let mut c = DimVector::from_vec(vec![BigUint::one(); n]);
    let mut levels = Vec::with_capacity(depth + 1);
    let mut edges = Vec::with_capacity(depth);
    let mut level_dims = Vec::with_capacity(depth + 1);
    let mut injective_flags = Vec::with_capacity(depth);
    for i in 0..=depth {
        let blocks: Vec<(usize, BigUint)> = c.support().into_iter().map(|v| (v, c.get(v).clone())).collect();
        level_dims.push(blocks.iter().map(|(v, s)| s * s * q.weight(*v)).sum::<BigUint>());
        if i < depth {
            injective_flags.push(blocks.iter().all(|(v, _)| !q.is_sink(*v)));
            edges.push(blocks.iter().flat_map(|&(l, _)| q.out_arrows(l).map(move |(j, val)| (l, j, val.a))).collect());
            c = syzygy_step(q, &c);
        }
        levels.push(blocks);
    }
    Ok(BratteliDiagram { levels, edges, level_dims, injective_flags })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HomFiniteReason {
    SimpleCyclicization,
    TrivialCycles { cycles: usize },
    NontrivialValuation { source: VertexId, target: VertexId, valuation: Valuation },
    OutDegree { vertex: VertexId, degree: usize },
    InDegree { vertex: VertexId, degree: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomFiniteReport {
    pub hom_finite: bool,
    pub reason: HomFiniteReason,
}

impl fmt::Display for HomFiniteReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HomFiniteReason::SimpleCyclicization => {
                f.write_str("cyclicization is simple, so the singularity category vanishes")
            }
            HomFiniteReason::TrivialCycles { .. } => f.write_str("cyclicization is a disjoint union of trivial cycles"),
            HomFiniteReason::NontrivialValuation { source, target, valuation } => {
                write!(f, "core arrow {source} -> {target} has valuation {valuation}, not (1,1)")
            }
            HomFiniteReason::OutDegree { vertex, degree } => {
                write!(f, "core vertex {vertex} has {degree} outgoing arrows")
            }
            HomFiniteReason::InDegree { vertex, degree } => {
                write!(f, "core vertex {vertex} has {degree} incoming arrows")
            }
        }
    }
}

impl fmt::Display for HomFiniteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.hom_finite, self.reason)
    }
}

/// Hom-finiteness of `D_sg(A)`: the cyclicization is empty, or a disjoint
/// union of oriented cycles with trivial valuation.
pub fn hom_finite(q: &ValuedQuiver) -> HomFiniteReport {
    let core = cyclicize(q).core;
    if core.is_empty() {
        return HomFiniteReport { hom_finite: true, reason: HomFiniteReason::SimpleCyclicization };
    }
    let refuse = |reason| HomFiniteReport { hom_finite: false, reason };
    if let Some((s, t, v)) = core.arrows().find(|(_, _, v)| !v.is_trivial()) {
        return refuse(HomFiniteReason::NontrivialValuation {
            source: core.vertex(s).clone(),
            target: core.vertex(t).clone(),
            valuation: v,
        });
    }
    for v in 0..core.len() {
        let degree = core.out_degree(v);
        if degree != 1 {
            return refuse(HomFiniteReason::OutDegree { vertex: core.vertex(v).clone(), degree });
        }
    }
    for v in 0..core.len() {
        let degree = core.in_degree(v);
        if degree != 1 {
            return refuse(HomFiniteReason::InDegree { vertex: core.vertex(v).clone(), degree });
        }
    }
    let successor = core_successor(&core);
    let cycles = Permutation::from_images(successor).map_or(0, |p| p.cycle_type().len());
    HomFiniteReport { hom_finite: true, reason: HomFiniteReason::TrivialCycles { cycles } }
}

fn core_successor(core: &ValuedQuiver) -> Vec<usize> {
    (0..core.len()).map(|v| core.out_arrows(v).next().map(|(t, _)| t).expect("core has no sinks")).collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    /// Index of the representative vertex in the original quiver.
    pub vertex: usize,
    pub id: VertexId,
    pub size: BigUint,
    pub weight: u64,
}

/// Semisimple structure of `Γ(A)` with the shift `Σ_A = - ⊗ K¹(A)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigmaStructure {
    /// One block `M_{c_u}(Δ_u^op)` per core vertex, in core order.
    pub blocks: Vec<Block>,
    /// Block `u` goes to block `sigma_perm.apply(u)` under the shift.
    pub sigma_perm: Permutation,
    pub order: usize,
    /// The arrow-successor permutation `σ` on the core, which is `Ω` on
    /// simples.
    pub omega_perm: Permutation,
}

impl SigmaStructure {
    /// `Σ_u f_u·c_u²`.
    pub fn total_dim(&self) -> BigUint {
        self.blocks.iter().map(|b| &b.size * &b.size * b.weight).sum()
    }

    /// `dim K^n = Σ_u f_u·c_u·c_{σ^n(u)}`.
    pub fn pairing(&self, n: i64) -> BigUint {
        let p = self.omega_perm.pow(n);
        self.blocks.iter().enumerate().map(|(u, b)| &b.size * &self.blocks[p.apply(u)].size * b.weight).sum()
    }
}

/// Blocks of `Γ(A)` and the shift permutation for a Hom-finite quiver with
/// nonempty cyclicization.
pub fn gamma_blocks(q: &ValuedQuiver) -> Result<SigmaStructure, Error> {
    let report = hom_finite(q);
    if !report.hom_finite {
        return Err(Error::NotHomFinite(report));
    }
    let cyc = cyclicize(q);
    if cyc.is_simple {
        return Err(Error::VanishingSingularityCategory);
    }
    let core = &cyc.core;
    let omega = Permutation::from_images(core_successor(core)).expect("Hom-finite core is a permutation");
    let settle = q.len();
    // q(S_j)[m] ≅ q(S_{σ^{-m}(j)}), so Ω^m S_a lands in block σ^{-m}(j).
    let back = omega.pow(-(settle as i64));
    let data = SingularityData::new(q);
    let mut sizes = vec![BigUint::zero(); core.len()];
    for a in 0..q.len() {
        if data.is_zero(a) {
            continue;
        }
        let mut v = DimVector::unit(q.len(), a);
        for _ in 0..settle {
            v = syzygy_step(q, &v);
        }
        for (k, &orig) in cyc.embedding.iter().enumerate() {
            sizes[back.apply(k)] += v.get(orig);
        }
    }
    let blocks = cyc
        .embedding
        .iter()
        .zip(sizes)
        .map(|(&orig, size)| Block { vertex: orig, id: q.vertex(orig).clone(), size, weight: q.weight(orig) })
        .collect();
    let sigma_perm = omega.inverse();
    Ok(SigmaStructure { blocks, order: sigma_perm.order(), sigma_perm, omega_perm: omega })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KDimCheck {
    pub shift: i64,
    /// Certified `k_dim`, when one was obtained.
    pub k_dim: Option<BigUint>,
    pub pairing: BigUint,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremAReport {
    pub range: (i64, i64),
    pub all_bijective: bool,
    /// First `(n, m)` with `Σ^n Σ^m ≠ Σ^{n+m}`.
    pub composition_failure: Option<(i64, i64)>,
    pub k_dims: Vec<KDimCheck>,
    pub k_dim_matches_pairing: bool,
    pub k_dim_constant: bool,
    /// Smallest positive `p` with `Σ^p = id`.
    pub order: usize,
}

impl TheoremAReport {
    /// Invertibility, the composition law, and `dim K^n` matching the block
    /// pairing for every shift in range.
    pub fn passes(&self) -> bool {
        self.all_bijective && self.composition_failure.is_none() && self.k_dim_matches_pairing
    }

    pub fn summary(&self) -> String {
        format!(
            "range [{}, {}]: bijective={} composition={} k_dim=pairing:{} k_dim constant:{} order={}",
            self.range.0,
            self.range.1,
            self.all_bijective,
            self.composition_failure.is_none(),
            self.k_dim_matches_pairing,
            self.k_dim_constant,
            self.order
        )
    }
}

/// Check, at the level of block permutations and dimensions, that the
/// shift powers compose (`Σ^n Σ^m = Σ^{n+m}`), that each is invertible, and
/// that `dim K^n` equals the pairing `Σ_u f_u c_u c_{σ^n u}`.
pub fn verify_theorem_a(q: &ValuedQuiver, range: RangeInclusive<i64>) -> Result<TheoremAReport, Error> {
    let sigma = gamma_blocks(q)?;
    let data = SingularityData::new(q);
    let (lo, hi) = (*range.start(), *range.end());
    let powers: Vec<(i64, Permutation)> = range.clone().map(|n| (n, sigma.sigma_perm.pow(n))).collect();
    let all_bijective = powers.iter().all(|(_, p)| p.is_bijection());
    let mut composition_failure = None;
    'outer: for (n, pn) in &powers {
        for (m, pm) in &powers {
            if pn.then(pm) != sigma.sigma_perm.pow(n + m) {
                composition_failure = Some((*n, *m));
                break 'outer;
            }
        }
    }
    let mut k_dims = Vec::new();
    for n in range {
        let r = data.k_dim(n, default_horizon(q, n))?;
        let k_dim = if r.certified { r.value } else { None };
        k_dims.push(KDimCheck { shift: n, k_dim, pairing: sigma.pairing(n) });
    }
    let k_dim_matches_pairing = k_dims.iter().all(|c| c.k_dim.as_ref() == Some(&c.pairing));
    let k_dim_constant = k_dims.windows(2).all(|w| w[0].k_dim == w[1].k_dim);
    Ok(TheoremAReport {
        range: (lo, hi),
        all_bijective,
        composition_failure,
        k_dims,
        k_dim_matches_pairing,
        k_dim_constant,
        order: sigma.order,
    })
}
