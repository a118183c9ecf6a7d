//! Syzygies of semisimple modules and Hom dimensions in the singularity
//! category.
//!
//! For a radical-square-zero algebra the syzygy of a semisimple module is
//! `r ⊗ -`, so on dimension vectors it is the transpose action of the
//! a-matrix: `Ω(S_l) = ⊕_j S_j^{a_lj}`. Hom spaces in `D_sg` are colimits of
//! stable Hom spaces along `Ω`:
//!
//! `Hom(q S_a, q S_b[n]) = colim_m  stHom(Ω^m S_a, Ω^{m-n} S_b)`,  `m ≥ max(0, n)`.
//!
//! Only the part of `Ω^m S_a` supported on cyclic-like vertices survives in
//! `D_sg`, and on that part the connecting maps are injective, so the
//! colimit dimension is the limit of a nondecreasing integer sequence.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::Add;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::Error;
use crate::gamma::hom_finite;
use crate::graph::{classify, VertexClassification};
use crate::quiver::ValuedQuiver;

/// Multiplicities of the simple modules in a semisimple module, indexed by
/// vertex position.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DimVector(Vec<BigUint>);

impl DimVector {
    pub fn zeros(n: usize) -> Self {
        DimVector(vec![BigUint::zero(); n])
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = Self::zeros(n);
        v.0[i] = BigUint::one();
        v
    }

    pub fn from_counts(counts: &[u64]) -> Self {
        DimVector(counts.iter().map(|&c| BigUint::from(c)).collect())
    }

    pub fn from_vec(entries: Vec<BigUint>) -> Self {
        DimVector(entries)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, i: usize) -> &BigUint {
        &self.0[i]
    }

    pub fn entries(&self) -> &[BigUint] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn support(&self) -> Vec<usize> {
        self.0.iter().enumerate().filter_map(|(i, x)| (!x.is_zero()).then_some(i)).collect()
    }

    /// Base-field length `Σ f_j·v_j`.
    pub fn total_length(&self, q: &ValuedQuiver) -> BigUint {
        self.0.iter().zip(q.weights()).map(|(x, &f)| x * f).sum()
    }

    /// Zero out every entry whose mask bit is false.
    pub fn restrict(&self, mask: &[bool]) -> DimVector {
        DimVector(self.0.iter().zip(mask).map(|(x, &keep)| if keep { x.clone() } else { BigUint::zero() }).collect())
    }

    /// Pick out the entries at `indices`, in that order.
    pub fn select(&self, indices: &[usize]) -> DimVector {
        DimVector(indices.iter().map(|&i| self.0[i].clone()).collect())
    }
}

impl Add for &DimVector {
    type Output = DimVector;

    fn add(self, rhs: &DimVector) -> DimVector {
        assert_eq!(self.len(), rhs.len(), "dimension vectors of different length");
        DimVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

/// One syzygy step: `result[j] = Σ_{l -> j} a_lj · v[l]`. Sinks are simple
/// projective and contribute nothing.
pub fn syzygy_step(q: &ValuedQuiver, v: &DimVector) -> DimVector {
    let mut out = DimVector::zeros(q.len());
    for (s, t, val) in q.arrows() {
        if !v.0[s].is_zero() {
            out.0[t] += &v.0[s] * val.a;
        }
    }
    out
}

pub fn omega_iterate(q: &ValuedQuiver, v: &DimVector, m: usize) -> DimVector {
    let mut cur = v.clone();
    for _ in 0..m {
        if cur.is_zero() {
            break;
        }
        cur = syzygy_step(q, &cur);
    }
    cur
}

/// Base-field dimension of the stable Hom space between `⊕ S_j^{v_j}` and
/// `⊕ S_j^{w_j}`. Endomorphisms of a simple projective factor through a
/// projective, so sinks drop out.
pub fn stable_hom_dim(q: &ValuedQuiver, v: &DimVector, w: &DimVector) -> BigUint {
    let mut total = BigUint::zero();
    for j in 0..q.len() {
        if q.is_sink(j) || v.0[j].is_zero() || w.0[j].is_zero() {
            continue;
        }
        total += &v.0[j] * &w.0[j] * q.weight(j);
    }
    total
}

/// `q(S_a) = 0` in `D_sg`, i.e. `S_a` has finite projective dimension: no
/// path from `a` reaches an oriented cycle.
pub fn sg_is_zero(q: &ValuedQuiver, a: usize) -> bool {
    !classify(q).reaches_cycle(a)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HomStatus {
    /// Exact finite value, proved.
    Finite,
    /// One of the objects vanishes in `D_sg`.
    Zero,
    /// Proved to grow without bound.
    Unbounded,
    /// No proof either way within the horizon; only `level_dims` is reported.
    Horizon,
}

impl HomStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            HomStatus::Finite => "finite",
            HomStatus::Zero => "zero",
            HomStatus::Unbounded => "unbounded",
            HomStatus::Horizon => "horizon",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomDimResult {
    pub status: HomStatus,
    /// Present iff the status is `Finite` or `Zero`.
    pub value: Option<BigUint>,
    /// Stable Hom dimensions on cyclic-like support, one per level starting
    /// at `first_level`.
    pub level_dims: Vec<BigUint>,
    /// Absolute syzygy level `m` of `level_dims[0]`; equals `max(0, n)`.
    pub first_level: usize,
    /// Index into `level_dims` from which every entry equals `value`.
    pub stable_from: Option<usize>,
    pub certified: bool,
}

impl HomDimResult {
    pub fn is_certified_finite(&self) -> bool {
        self.certified && matches!(self.status, HomStatus::Finite | HomStatus::Zero)
    }
}

/// `4·|V| + |n| + 8`.
pub fn default_horizon(q: &ValuedQuiver, n: i64) -> usize {
    4 * q.len() + n.unsigned_abs() as usize + 8
}

/// Data shared by every Hom query on one quiver.
#[derive(Debug, Clone)]
pub struct SingularityData<'q> {
    quiver: &'q ValuedQuiver,
    classes: VertexClassification,
    core_mask: Vec<bool>,
    /// On a nontrivial strongly connected component whose a-submatrix is
    /// not a permutation matrix.
    expanding: Vec<bool>,
    hom_finite: bool,
}

impl<'q> SingularityData<'q> {
    pub fn new(quiver: &'q ValuedQuiver) -> Self {
        let classes = classify(quiver);
        let n = quiver.len();
        let mut core_mask = vec![false; n];
        for &v in &classes.cyclic_like {
            core_mask[v] = true;
        }
        let mut expanding = vec![false; n];
        for comp in &classes.scc {
            if !classes.is_cyclic(comp[0]) {
                continue;
            }
            let inside = |v: usize| classes.component_of[v] == classes.component_of[comp[0]];
            let permutes = comp.iter().all(|&v| {
                let outs: Vec<_> = quiver.out_arrows(v).filter(|&(t, _)| inside(t)).collect();
                let ins: Vec<_> = quiver.in_arrows(v).filter(|&(s, _)| inside(s)).collect();
                outs.len() == 1 && ins.len() == 1 && outs[0].1.a == 1 && ins[0].1.a == 1
            });
            if !permutes {
                for &v in comp {
                    expanding[v] = true;
                }
            }
        }
        let hom_finite = hom_finite(quiver).hom_finite;
        SingularityData { quiver, classes, core_mask, expanding, hom_finite }
    }

    pub fn quiver(&self) -> &ValuedQuiver {
        self.quiver
    }

    pub fn classes(&self) -> &VertexClassification {
        &self.classes
    }

    pub fn is_hom_finite(&self) -> bool {
        self.hom_finite
    }

    pub fn is_zero(&self, a: usize) -> bool {
        !self.classes.reaches_cycle(a)
    }

    /// `dim Hom_{D_sg}(q S_a, q S_b[n])`.
    pub fn hom_dim(&self, a: usize, b: usize, n: i64, horizon: usize) -> Result<HomDimResult, Error> {
        if horizon < 1 {
            return Err(Error::InvalidHorizon);
        }
        let q = self.quiver;
        let len = q.len();
        if a >= len || b >= len {
            return Err(Error::Invalid(alloc::format!("vertex index out of range for {len} vertices")));
        }

        let first_level = n.max(0) as usize;
        let shift_b = |m: usize| (m as i64 - n) as usize;
        // Beyond this depth every surviving summand sits on cyclic-like vertices.
        let settled = len + first_level;
        let last_reported = first_level + horizon;
        let last = last_reported.max(settled);

        let mut x = omega_iterate(q, &DimVector::unit(len, a), first_level);
        let mut y = omega_iterate(q, &DimVector::unit(len, b), shift_b(first_level));
        let mut level_dims = Vec::with_capacity(horizon + 1);
        let mut hits = vec![0u32; len];
        let mut settled_dim = BigUint::zero();
        for m in first_level..=last {
            let xr = x.restrict(&self.core_mask);
            let yr = y.restrict(&self.core_mask);
            let d = stable_hom_dim(q, &xr, &yr);
            if m <= last_reported {
                for (u, hit) in hits.iter_mut().enumerate() {
                    if self.expanding[u] && !xr.0[u].is_zero() && !yr.0[u].is_zero() {
                        *hit += 1;
                    }
                }
                level_dims.push(d.clone());
            }
            if m == settled {
                settled_dim = d;
            }
            if m < last {
                x = syzygy_step(q, &x);
                y = syzygy_step(q, &y);
            }
        }

        let stable_from = |value: &BigUint, dims: &[BigUint]| {
            let i = dims.iter().position(|d| d == value)?;
            dims[i..].iter().all(|d| d == value).then_some(i)
        };

        let result = if self.is_zero(a) || self.is_zero(b) {
            let value = BigUint::zero();
            HomDimResult {
                status: HomStatus::Zero,
                stable_from: stable_from(&value, &level_dims),
                value: Some(value),
                level_dims,
                first_level,
                certified: true,
            }
        } else if self.hom_finite {
            // Permutation core: the sequence is constant from `settled` on.
            HomDimResult {
                status: HomStatus::Finite,
                stable_from: stable_from(&settled_dim, &level_dims),
                value: Some(settled_dim),
                level_dims,
                first_level,
                certified: true,
            }
        } else if hits.iter().any(|&h| h >= 2) {
            HomDimResult {
                status: HomStatus::Unbounded,
                value: None,
                level_dims,
                first_level,
                stable_from: None,
                certified: true,
            }
        } else {
            HomDimResult {
                status: HomStatus::Horizon,
                value: None,
                level_dims,
                first_level,
                stable_from: None,
                certified: false,
            }
        };
        Ok(result)
    }

    /// Total dimension of `K^n(A) = Hom(q(A/r), q(A/r)[n])`.
    pub fn k_dim(&self, n: i64, horizon: usize) -> Result<HomDimResult, Error> {
        if horizon < 1 {
            return Err(Error::InvalidHorizon);
        }
        let len = self.quiver.len();
        let first_level = n.max(0) as usize;
        let mut level_dims = vec![BigUint::zero(); horizon + 1];
        let mut value = BigUint::zero();
        let mut any_unbounded = false;
        let mut all_certified = true;
        let mut all_zero = true;
        let mut stable_idx: Option<usize> = Some(0);
        for a in 0..len {
            for b in 0..len {
                let r = self.hom_dim(a, b, n, horizon)?;
                for (acc, d) in level_dims.iter_mut().zip(&r.level_dims) {
                    *acc += d;
                }
                match r.status {
                    HomStatus::Unbounded => any_unbounded = true,
                    HomStatus::Horizon => all_certified = false,
                    HomStatus::Finite => all_zero = false,
                    HomStatus::Zero => {}
                }
                if let Some(v) = &r.value {
                    value += v;
                }
                stable_idx = match (stable_idx, r.stable_from) {
                    (Some(i), Some(j)) => Some(i.max(j)),
                    _ => None,
                };
            }
        }
        let (status, value, certified) = if any_unbounded {
            (HomStatus::Unbounded, None, true)
        } else if !all_certified {
            (HomStatus::Horizon, None, false)
        } else if all_zero {
            (HomStatus::Zero, Some(BigUint::zero()), true)
        } else {
            (HomStatus::Finite, Some(value), true)
        };
        let stable_from = if value.is_some() { stable_idx } else { None };
        Ok(HomDimResult { status, value, level_dims, first_level, stable_from, certified })
    }
}

/// `dim Hom_{D_sg(A)}(q S_a, q S_b[n])`, see [`SingularityData::hom_dim`].
pub fn sg_hom_dim(q: &ValuedQuiver, a: usize, b: usize, n: i64, horizon: usize) -> Result<HomDimResult, Error> {
    SingularityData::new(q).hom_dim(a, b, n, horizon)
}

pub fn k_dim(q: &ValuedQuiver, n: i64, horizon: usize) -> Result<HomDimResult, Error> {
    SingularityData::new(q).k_dim(n, horizon)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{adjoin_sink, adjoin_source, gen_cycle, gen_loops};
    use crate::quiver::{RawQuiver, Valuation};

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    fn path2() -> ValuedQuiver {
        RawQuiver::new().vertices(["1", "2"]).arrow("1", "2").validate().unwrap()
    }

    #[test]
    fn syzygy_step_examples() {
        assert_eq!(syzygy_step(&gen_loops(2), &DimVector::unit(1, 0)), DimVector::from_counts(&[2]));
        assert_eq!(syzygy_step(&gen_cycle(3), &DimVector::unit(3, 0)), DimVector::unit(3, 1));
        assert!(syzygy_step(&path2(), &DimVector::unit(2, 1)).is_zero());
    }

    #[test]
    fn omega_iterate_examples() {
        assert_eq!(omega_iterate(&gen_loops(3), &DimVector::unit(1, 0), 4), DimVector::from_counts(&[81]));
        let v = DimVector::from_counts(&[2, 5, 7]);
        assert_eq!(omega_iterate(&gen_cycle(3), &v, 0), v);
        assert_eq!(omega_iterate(&gen_cycle(2), &DimVector::unit(2, 0), 2), DimVector::unit(2, 0));
    }

    #[test]
    fn omega_needs_arbitrary_precision() {
        let v = omega_iterate(&gen_loops(5), &DimVector::unit(1, 0), 60);
        assert_eq!(v.get(0), &big(5).pow(60));
    }

    #[test]
    fn stable_hom_dim_examples() {
        let e = |n, i| DimVector::unit(n, i);
        assert_eq!(stable_hom_dim(&gen_cycle(3), &e(3, 0), &e(3, 0)), big(1));
        assert_eq!(stable_hom_dim(&path2(), &e(2, 1), &e(2, 1)), big(0));
        let four = DimVector::from_counts(&[4]);
        assert_eq!(stable_hom_dim(&gen_loops(2), &four, &four), big(16));
    }

    #[test]
    fn sg_is_zero_examples() {
        let path = RawQuiver::new().vertices(["1", "2", "3"]).arrow("1", "2").arrow("2", "3").validate().unwrap();
        assert!(sg_is_zero(&path, 0));
        let with_sink = adjoin_sink(&gen_cycle(2), "t", &[("2".into(), Valuation::TRIVIAL)], None).unwrap();
        assert!(sg_is_zero(&with_sink, 2));
        let with_source = adjoin_source(&gen_cycle(2), "s", &[("1".into(), Valuation::TRIVIAL)], None).unwrap();
        assert!(!sg_is_zero(&with_source, 2));
    }

    #[test]
    fn hom_dim_on_three_cycle() {
        let q = gen_cycle(3);
        let r = sg_hom_dim(&q, 0, 1, 1, 10).unwrap();
        assert_eq!(r.status, HomStatus::Finite);
        assert_eq!(r.value, Some(big(1)));
        assert!(r.certified);
        let r0 = sg_hom_dim(&q, 0, 1, 0, 10).unwrap();
        assert_eq!((r0.status, r0.value), (HomStatus::Finite, Some(big(0))));
    }

    #[test]
    fn hom_dim_on_two_loops_is_unbounded() {
        let r = sg_hom_dim(&gen_loops(2), 0, 0, 0, 6).unwrap();
        assert_eq!(r.status, HomStatus::Unbounded);
        assert!(r.certified);
        let expect: Vec<BigUint> = (0..=6).map(|i| big(4).pow(i)).collect();
        assert_eq!(r.level_dims, expect);
    }

    #[test]
    fn hom_dim_vanishes_for_finite_global_dimension() {
        let r = sg_hom_dim(&path2(), 0, 0, 0, 4).unwrap();
        assert_eq!(r.status, HomStatus::Zero);
        assert_eq!(r.value, Some(big(0)));
    }

    #[test]
    fn horizon_must_be_positive() {
        assert_eq!(sg_hom_dim(&gen_cycle(2), 0, 0, 0, 0), Err(Error::InvalidHorizon));
    }

    #[test]
    fn k_dim_examples() {
        let q = gen_cycle(3);
        for n in [0, 7, -4] {
            let r = k_dim(&q, n, default_horizon(&q, n)).unwrap();
            assert_eq!((r.status, r.value), (HomStatus::Finite, Some(big(3))), "n = {n}");
        }
        let l = gen_loops(2);
        let r = k_dim(&l, 0, default_horizon(&l, 0)).unwrap();
        assert_eq!(r.status, HomStatus::Unbounded);
    }

    #[test]
    fn source_contributes_a_shifted_copy() {
        // s -> 1 on the 2-cycle: q(S_s) ≅ q(S_1)[1] ≅ q(S_2).
        let q = adjoin_source(&gen_cycle(2), "s", &[("1".into(), Valuation::TRIVIAL)], None).unwrap();
        let s = q.index_of(&"s".into()).unwrap();
        let h = |a, b, n| sg_hom_dim(&q, a, b, n, 12).unwrap().value.unwrap();
        assert_eq!(h(s, 1, 0), big(1));
        assert_eq!(h(s, 0, 0), big(0));
        assert_eq!(h(s, 0, 1), big(1));
        assert_eq!(h(s, s, 0), big(1));
        let k0 = k_dim(&q, 0, 12).unwrap().value.unwrap();
        let k1 = k_dim(&q, 1, 12).unwrap().value.unwrap();
        assert_eq!((k0, k1), (big(5), big(4)));
    }

    #[test]
    fn finite_value_matches_tail_of_levels() {
        let q = adjoin_source(&gen_cycle(3), "s", &[("1".into(), Valuation::split(2))], None).unwrap();
        for a in 0..q.len() {
            for b in 0..q.len() {
                let r = sg_hom_dim(&q, a, b, 2, 20).unwrap();
                let i = r.stable_from.expect("horizon covers the transient");
                assert!(r.level_dims[i..].iter().all(|d| Some(d) == r.value.as_ref()));
            }
        }
    }
}
