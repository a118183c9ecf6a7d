use alloc::vec;
use alloc::vec::Vec;

use super::field::{check_prime, FpMatrix};
use super::{arrow_list, OracleError};
use crate::quiver::{ValuedQuiver, VertexId};

/// Representation of `kQ/J²`: a space at each vertex and one matrix per
/// arrow, `maps[k]` of shape `dims[target] × dims[source]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepModule {
    p: u8,
    arrows: Vec<(usize, usize)>,
    dims: Vec<usize>,
    maps: Vec<FpMatrix>,
}

impl RepModule {
    /// The zero module over `q`.
    pub fn zero(q: &ValuedQuiver, p: u32) -> Result<Self, OracleError> {
        let p = check_prime(p)?;
        Ok(Self::zero_with(p, arrow_list(q)?, q.len()))
    }

    fn zero_with(p: u8, arrows: Vec<(usize, usize)>, n: usize) -> Self {
        let maps = arrows.iter().map(|_| FpMatrix::zeros(p, 0, 0)).collect();
        RepModule { p, arrows, dims: vec![0; n], maps }
    }

    /// Checks shapes and returns the module. Does not check the relation.
    pub fn new(q: &ValuedQuiver, p: u32, dims: Vec<usize>, maps: Vec<FpMatrix>) -> Result<Self, OracleError> {
        let p = check_prime(p)?;
        let arrows = arrow_list(q)?;
        let shapes_ok = dims.len() == q.len()
            && maps.len() == arrows.len()
            && arrows
                .iter()
                .zip(&maps)
                .all(|(&(s, t), m)| m.prime() == p && m.rows() == dims[t] && m.cols() == dims[s]);
        if !shapes_ok {
            return Err(OracleError::ShapeMismatch);
        }
        Ok(RepModule { p, arrows, dims, maps })
    }

    pub fn prime(&self) -> u8 {
        self.p
    }

    pub fn arrows(&self) -> &[(usize, usize)] {
        &self.arrows
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn map(&self, k: usize) -> &FpMatrix {
        &self.maps[k]
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    /// Every arrow map vanishes.
    pub fn is_semisimple(&self) -> bool {
        self.maps.iter().all(FpMatrix::is_zero)
    }

    pub(crate) fn same_shape(&self, other: &RepModule) -> bool {
        self.p == other.p && self.arrows == other.arrows && self.dims.len() == other.dims.len()
    }

    /// All composites `x_l ∘ x_k` of two arrow maps vanish.
    pub fn satisfies_radical_square_zero(&self) -> bool {
        self.arrows.iter().enumerate().all(|(k, &(_, mid))| {
            self.arrows
                .iter()
                .enumerate()
                .filter(|(_, &(s, _))| s == mid)
                .all(|(l, _)| self.maps[l].mul(&self.maps[k]).is_zero())
        })
    }

    fn resized(&self, dims: Vec<usize>) -> RepModule {
        let maps = self.arrows.iter().map(|&(s, t)| FpMatrix::zeros(self.p, dims[t], dims[s])).collect();
        RepModule { p: self.p, arrows: self.arrows.clone(), dims, maps }
    }
}

/// Simple module at vertex index `v`.
pub fn build_simple_at(q: &ValuedQuiver, v: usize, p: u32) -> Result<RepModule, OracleError> {
    if v >= q.len() {
        return Err(OracleError::ShapeMismatch);
    }
    let zero = RepModule::zero(q, p)?;
    let mut dims = vec![0; q.len()];
    dims[v] = 1;
    Ok(zero.resized(dims))
}

/// Simple module `S_v`.
pub fn build_simple(q: &ValuedQuiver, v: &VertexId, p: u32) -> Result<RepModule, OracleError> {
    let i = q.index_of(v).ok_or_else(|| OracleError::UnknownVertex(v.clone()))?;
    build_simple_at(q, i, p)
}

/// Indecomposable projective `P(S_v)`.
pub fn build_projective(q: &ValuedQuiver, v: &VertexId, p: u32) -> Result<RepModule, OracleError> {
    let s = build_simple(q, v, p)?;
    Ok(projective_cover(&s).module)
}

/// Where a generator's copy of `P(S_t)` sits inside the cover.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Summand {
    pub vertex: usize,
    /// Index of the top basis vector in `P_t`.
    pub top: usize,
    /// `(arrow, index in P_target)` for each arrow leaving `t`.
    pub radical: Vec<(usize, usize)>,
}

/// `π: P → M` with `P` a direct sum of indecomposable projectives, one per
/// generator of `M`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjectiveCover {
    pub module: RepModule,
    /// `surjection[v]` is `π_v`, of shape `dim M_v × dim P_v`.
    pub surjection: Vec<FpMatrix>,
    /// Generators `(vertex, vector in M_vertex)`, lifting a basis of the top.
    pub generators: Vec<(usize, Vec<u8>)>,
    pub summands: Vec<Summand>,
}

fn top_generators(m: &RepModule, t: usize) -> Vec<Vec<u8>> {
    let d = m.dims[t];
    let mut columns: Vec<Vec<u8>> = Vec::new();
    for (k, &(_, target)) in m.arrows.iter().enumerate() {
        if target == t {
            columns.extend((0..m.maps[k].cols()).map(|j| m.maps[k].column(j)));
        }
    }
    let rad_cols = columns.len();
    let aug = FpMatrix::from_columns(m.p, d, &columns).hstack(&FpMatrix::identity(m.p, d));
    let mut r = aug;
    let pivots = r.rref_in_place();
    pivots
        .into_iter()
        .filter(|&c| c >= rad_cols)
        .map(|c| {
            let mut e = vec![0u8; d];
            e[c - rad_cols] = 1;
            e
        })
        .collect()
}

pub fn projective_cover(m: &RepModule) -> ProjectiveCover {
    let n = m.dims.len();
    let mut generators = Vec::new();
    for t in 0..n {
        generators.extend(top_generators(m, t).into_iter().map(|g| (t, g)));
    }
    let mut dims = vec![0usize; n];
    let mut summands = Vec::with_capacity(generators.len());
    for &(t, _) in &generators {
        let top = dims[t];
        dims[t] += 1;
        let mut radical = Vec::new();
        for (k, &(s, j)) in m.arrows.iter().enumerate() {
            if s == t {
                radical.push((k, dims[j]));
                dims[j] += 1;
            }
        }
        summands.push(Summand { vertex: t, top, radical });
    }
    let mut module = m.resized(dims.clone());
    let mut surjection: Vec<FpMatrix> = (0..n).map(|v| FpMatrix::zeros(m.p, m.dims[v], dims[v])).collect();
    // Images of all generators at a vertex along an arrow, one product per arrow.
    let images: Vec<FpMatrix> = m
        .arrows
        .iter()
        .enumerate()
        .map(|(k, &(s, _))| {
            let at_s: Vec<Vec<u8>> = generators.iter().filter(|(t, _)| *t == s).map(|(_, g)| g.clone()).collect();
            m.maps[k].mul(&FpMatrix::from_columns(m.p, m.dims[s], &at_s))
        })
        .collect();
    let mut rank_at = vec![0usize; n];
    for (summand, (t, g)) in summands.iter().zip(&generators) {
        surjection[*t].set_column(summand.top, g);
        let r = rank_at[*t];
        rank_at[*t] += 1;
        for &(k, idx) in &summand.radical {
            let j = m.arrows[k].1;
            module.maps[k].set(idx, summand.top, 1);
            surjection[j].set_column(idx, &images[k].column(r));
        }
    }
    ProjectiveCover { module, surjection, generators, summands }
}

/// `Ω(M) = ker(P → M)` together with the data needed to apply `Ω` to maps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Syzygy {
    pub cover: ProjectiveCover,
    /// `kernels[v]` has as columns a basis of `ker π_v ⊆ P_v`.
    pub kernels: Vec<FpMatrix>,
    pub module: RepModule,
}

impl Syzygy {
    pub fn of(m: &RepModule) -> Syzygy {
        let cover = projective_cover(m);
        let kernels: Vec<FpMatrix> = cover.surjection.iter().map(FpMatrix::kernel).collect();
        let dims: Vec<usize> = kernels.iter().map(FpMatrix::cols).collect();
        let mut module = m.resized(dims);
        for (k, &(s, t)) in m.arrows.iter().enumerate() {
            let image = cover.module.maps[k].mul(&kernels[s]);
            module.maps[k] = kernels[t].solve(&image).expect("kernel is a submodule");
        }
        Syzygy { cover, kernels, module }
    }
}

pub fn syzygy_rep(m: &RepModule) -> RepModule {
    Syzygy::of(m).module
}
