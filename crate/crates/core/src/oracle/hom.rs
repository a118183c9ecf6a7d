use alloc::vec::Vec;

use super::field::{span_rank, FpMatrix};
use super::rep::{projective_cover, RepModule};
use super::OracleError;

/// Module homomorphism, one matrix per vertex (`dim N_v × dim M_v`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Morphism {
    pub components: Vec<FpMatrix>,
}

impl Morphism {
    /// `other ∘ self`.
    pub fn then(&self, other: &Morphism) -> Morphism {
        Morphism { components: self.components.iter().zip(&other.components).map(|(f, g)| g.mul(f)).collect() }
    }

    /// Entries of all components, concatenated.
    pub fn flatten(&self) -> Vec<u8> {
        self.components.iter().flat_map(|c| c.entries().iter().copied()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(FpMatrix::is_zero)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomSpace {
    pub basis: Vec<Morphism>,
}

impl HomSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Solve the intertwining equations `N(k) φ_s = φ_t M(k)`.
pub fn hom_space(m: &RepModule, n: &RepModule) -> Result<HomSpace, OracleError> {
    if !m.same_shape(n) {
        return Err(OracleError::ShapeMismatch);
    }
    let p = m.prime();
    let (md, nd) = (m.dims(), n.dims());
    let mut offsets = Vec::with_capacity(md.len());
    let mut unknowns = 0;
    for v in 0..md.len() {
        offsets.push(unknowns);
        unknowns += nd[v] * md[v];
    }
    let var = |v: usize, i: usize, j: usize| offsets[v] + i * md[v] + j;

    let mut rows: Vec<Vec<u8>> = Vec::new();
    for (k, &(s, t)) in m.arrows().iter().enumerate() {
        let (mk, nk) = (m.map(k), n.map(k));
        if mk.is_zero() && nk.is_zero() {
            continue;
        }
        for i in 0..nd[t] {
            for j in 0..md[s] {
                let mut row = alloc::vec![0u8; unknowns];
                for l in 0..nd[s] {
                    let x = nk.get(i, l);
                    if x != 0 {
                        let c = var(s, l, j);
                        row[c] = ((u32::from(row[c]) + u32::from(x)) % u32::from(p)) as u8;
                    }
                }
                for l in 0..md[t] {
                    let x = mk.get(l, j);
                    if x != 0 {
                        let c = var(t, i, l);
                        row[c] = ((u32::from(row[c]) + u32::from(p - x)) % u32::from(p)) as u8;
                    }
                }
                if row.iter().any(|&x| x != 0) {
                    rows.push(row);
                }
            }
        }
    }
    let kernel = FpMatrix::from_row_vectors(p, unknowns, &rows).kernel();
    let basis = (0..kernel.cols())
        .map(|c| {
            let x = kernel.column(c);
            let components = (0..md.len())
                .map(|v| {
                    let mut f = FpMatrix::zeros(p, nd[v], md[v]);
                    for i in 0..nd[v] {
                        for j in 0..md[v] {
                            f.set(i, j, x[var(v, i, j)]);
                        }
                    }
                    f
                })
                .collect();
            Morphism { components }
        })
        .collect();
    Ok(HomSpace { basis })
}

/// `Hom(M, N)` modulo the maps factoring through a projective.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StableHomSpace {
    pub hom: HomSpace,
    /// Spanning set (flattened) of the maps that factor through `P(N) → N`.
    pub projective_part: Vec<Vec<u8>>,
    pub projective_rank: usize,
}

impl StableHomSpace {
    pub fn dim(&self) -> usize {
        self.hom.dim() - self.projective_rank
    }
}

/// A map factors through some projective iff it factors through the
/// projective cover of `N`, so it suffices to compose `Hom(M, P_N)` with
/// `π_N`.
pub fn stable_hom_space(m: &RepModule, n: &RepModule) -> Result<StableHomSpace, OracleError> {
    let hom = hom_space(m, n)?;
    let cover = projective_cover(n);
    let pi = Morphism { components: cover.surjection.clone() };
    let through = hom_space(m, &cover.module)?;
    let projective_part: Vec<Vec<u8>> = through.basis.iter().map(|h| h.then(&pi).flatten()).collect();
    let len = m.dims().iter().zip(n.dims()).map(|(a, b)| a * b).sum();
    let projective_rank = span_rank(m.prime(), len, &projective_part);
    Ok(StableHomSpace { hom, projective_part, projective_rank })
}
