//! Quiver-level constructions: one-point (co)extensions, trivial-extension
//! powers, disjoint unions, and seeded generators for test families.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use num_integer::Integer;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, QuiverError};
use crate::quiver::{RawArrow, RawQuiver, Valuation, ValuedQuiver, VertexId};

fn adjoin(
    q: &ValuedQuiver,
    id: VertexId,
    arrows: &[(VertexId, Valuation)],
    weight: Option<u64>,
    outgoing: bool,
) -> Result<ValuedQuiver, Error> {
    if let Some(index) = q.index_of(&id) {
        return Err(QuiverError::DuplicateVertex { index, id }.into());
    }
    let mut raw = q.to_raw();
    for (other, v) in arrows {
        if *other == id {
            return Err(Error::Invalid(format!("adjoined vertex `{id}` cannot carry a loop")));
        }
        let (source, target) = if outgoing { (id.clone(), other.clone()) } else { (other.clone(), id.clone()) };
        raw.arrows.push(RawArrow { source, target, valuation: Some(*v) });
    }
    if let Some(f) = weight {
        raw.weights.push((id.clone(), f));
    }
    raw.vertices.push(id);
    Ok(raw.validate()?)
}

/// Add a new vertex with arrows starting at it (one-point extension). When
/// `weight` is `None` it is derived from the symmetrizer identity.
pub fn adjoin_source(
    q: &ValuedQuiver,
    id: impl Into<VertexId>,
    out_arrows: &[(VertexId, Valuation)],
    weight: Option<u64>,
) -> Result<ValuedQuiver, Error> {
    adjoin(q, id.into(), out_arrows, weight, true)
}

/// Add a new vertex with arrows ending at it (one-point coextension).
pub fn adjoin_sink(
    q: &ValuedQuiver,
    id: impl Into<VertexId>,
    in_arrows: &[(VertexId, Valuation)],
    weight: Option<u64>,
) -> Result<ValuedQuiver, Error> {
    adjoin(q, id.into(), in_arrows, weight, false)
}

fn mat_mul(x: &[Vec<u64>], y: &[Vec<u64>]) -> Result<Vec<Vec<u64>>, Error> {
    let n = x.len();
    let mut out = vec![vec![0u64; n]; n];
    for i in 0..n {
        for k in 0..n {
            if x[i][k] == 0 {
                continue;
            }
            for j in 0..n {
                let term = x[i][k].checked_mul(y[k][j]).ok_or(Error::Overflow)?;
                out[i][j] = out[i][j].checked_add(term).ok_or(Error::Overflow)?;
            }
        }
    }
    Ok(out)
}

fn mat_pow(m: &[Vec<u64>], exp: u32) -> Result<Vec<Vec<u64>>, Error> {
    let n = m.len();
    let mut acc: Vec<Vec<u64>> = (0..n).map(|i| (0..n).map(|j| u64::from(i == j)).collect()).collect();
    let mut base = m.to_vec();
    let mut e = exp;
    while e > 0 {
        if e & 1 == 1 {
            acc = mat_mul(&acc, &base)?;
        }
        e >>= 1;
        if e > 0 {
            base = mat_mul(&base, &base)?;
        }
    }
    Ok(acc)
}

/// Quiver of `G^n = A/r ⊕ r^{⊗n}`: same vertices and weights, with a- and
/// b-matrices raised to the `n`-th power.
pub fn trivial_ext_power(q: &ValuedQuiver, n: u32) -> Result<ValuedQuiver, Error> {
    if n < 1 {
        return Err(Error::InvalidPower);
    }
    let a = mat_pow(&q.a_matrix(), n)?;
    let b = mat_pow(&q.b_matrix(), n)?;
    let mut raw = q.to_raw();
    raw.arrows.clear();
    for i in 0..q.len() {
        for j in 0..q.len() {
            if a[i][j] > 0 {
                raw.arrows.push(RawArrow {
                    source: q.vertex(i).clone(),
                    target: q.vertex(j).clone(),
                    valuation: Some(Valuation::new(a[i][j], b[i][j])),
                });
            }
        }
    }
    Ok(raw.validate()?)
}

/// Vertices of `q1` followed by those of `q2`; colliding labels from `q2`
/// get primes appended until unique.
pub fn disjoint_union(q1: &ValuedQuiver, q2: &ValuedQuiver) -> ValuedQuiver {
    let mut vertices: Vec<VertexId> = q1.vertices().to_vec();
    let mut weights: Vec<u64> = q1.weights().to_vec();
    let mut arrows: BTreeMap<(usize, usize), Valuation> = q1.arrows().map(|(s, t, v)| ((s, t), v)).collect();
    let offset = q1.len();
    for (i, id) in q2.vertices().iter().enumerate() {
        let mut label = id.as_str().to_string();
        while vertices.iter().any(|v| v.as_str() == label) {
            label.push('\'');
        }
        vertices.push(VertexId::new(label));
        weights.push(q2.weight(i));
    }
    arrows.extend(q2.arrows().map(|(s, t, v)| ((s + offset, t + offset), v)));
    ValuedQuiver::from_parts_unchecked(vertices, weights, arrows)
}

/// Oriented cycle `1 -> 2 -> … -> ℓ -> 1` with trivial valuation.
pub fn gen_cycle(len: usize) -> ValuedQuiver {
    assert!(len >= 1, "cycle length must be positive");
    let mut raw = RawQuiver::new().vertices((1..=len).map(|i| i.to_string()));
    for i in 1..=len {
        raw = raw.arrow(i.to_string(), (i % len + 1).to_string());
    }
    raw.validate().expect("cycles are valid")
}

/// One vertex with `n` loops, i.e. `k[x_1..x_n]/(x_i x_j)`.
pub fn gen_loops(n: u64) -> ValuedQuiver {
    assert!(n >= 1, "need at least one loop");
    RawQuiver::new().vertex("1").valued_arrow("1", "1", n, n).validate().expect("loops are valid")
}

/// Seeded random quiver over a field: up to `max_vertices` vertices, each
/// ordered pair (loops included) carrying `m` parallel arrows with
/// probability about `1.2 / |V|`, `m` uniform in `1..=max_a`.
pub fn gen_random(seed: u64, max_vertices: usize, max_a: u64) -> ValuedQuiver {
    random_quiver(&mut ChaCha8Rng::seed_from_u64(seed), max_vertices, max_a, false)
}

/// Like [`gen_random`] but with weights in `{1, 2}` and genuinely valued
/// arrows `(m·f_i/g, m·f_j/g)`, `g = gcd(f_i, f_j)`.
pub fn gen_random_valued(seed: u64, max_vertices: usize, max_a: u64) -> ValuedQuiver {
    random_quiver(&mut ChaCha8Rng::seed_from_u64(seed), max_vertices, max_a, true)
}

fn random_quiver<R: Rng>(rng: &mut R, max_vertices: usize, max_a: u64, valued: bool) -> ValuedQuiver {
    let n = rng.gen_range(1..=max_vertices.max(1));
    let weights: Vec<u64> = (0..n).map(|_| if valued { rng.gen_range(1..=2) } else { 1 }).collect();
    let p = (1.2 / n as f64).min(0.6);
    let mut raw = RawQuiver::new().vertices((1..=n).map(|i| i.to_string()));
    for (i, &fi) in weights.iter().enumerate() {
        raw = raw.weight((i + 1).to_string(), fi);
    }
    for i in 0..n {
        for j in 0..n {
            if !rng.gen_bool(p) {
                continue;
            }
            let m = rng.gen_range(1..=max_a.max(1));
            let (fi, fj) = (weights[i], weights[j]);
            let g = fi.gcd(&fj);
            raw = raw.valued_arrow((i + 1).to_string(), (j + 1).to_string(), m * fi / g, m * fj / g);
        }
    }
    raw.validate().expect("generated data is symmetrizable")
}

fn fresh_id(q: &ValuedQuiver, prefix: &str) -> VertexId {
    (0..)
        .map(|k| VertexId::new(format!("{prefix}{k}")))
        .find(|id| q.index_of(id).is_none())
        .expect("unbounded supply of labels")
}

fn random_extension<R: Rng>(rng: &mut R, q: &ValuedQuiver) -> ValuedQuiver {
    let source = rng.gen_bool(0.5);
    let id = fresh_id(q, if source { "s" } else { "t" });
    let mut targets: Vec<usize> = (0..q.len()).collect();
    targets.shuffle(rng);
    let count = if q.is_empty() { 0 } else { rng.gen_range(1..=q.len().min(2)) };
    // The new vertex has weight 1, so an arrow to a vertex of weight f
    // carries (m, m·f) as a source and (m·f, m) as a sink.
    let arrows: Vec<(VertexId, Valuation)> = targets[..count]
        .iter()
        .map(|&t| {
            let (m, f) = (rng.gen_range(1..=2), q.weight(t));
            let v = if source { Valuation::new(m, m * f) } else { Valuation::new(m * f, m) };
            (q.vertex(t).clone(), v)
        })
        .collect();
    let out = if source { adjoin_source(q, id, &arrows, Some(1)) } else { adjoin_sink(q, id, &arrows, Some(1)) };
    out.expect("weight-1 extensions are always symmetrizable")
}

/// Adjoin one random source or sink of weight 1, with one or two arrows of
/// multiplicity 1 or 2. On a quiver over a field the result stays over a
/// field.
pub fn adjoin_random(q: &ValuedQuiver, seed: u64) -> ValuedQuiver {
    random_extension(&mut ChaCha8Rng::seed_from_u64(seed), q)
}

fn random_cycles<R: Rng>(rng: &mut R) -> ValuedQuiver {
    let count = rng.gen_range(1..=3);
    (0..count).fold(ValuedQuiver::empty(), |acc, _| disjoint_union(&acc, &gen_cycle(rng.gen_range(1..=5))))
}

/// Hom-finite family: a disjoint union of 1–3 trivial cycles of lengths
/// 1–5, with up to four random sources and sinks adjoined.
pub fn gen_hom_finite(seed: u64) -> ValuedQuiver {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut q = random_cycles(&mut rng);
    for _ in 0..rng.gen_range(0..=4) {
        q = random_extension(&mut rng, &q);
    }
    q
}

/// How [`gen_defective`] spoils the cycles.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Defect {
    /// Extra arrow between two cycle vertices: one vertex gets out-degree 2
    /// and another in-degree 2.
    Chord,
    /// A cycle arrow gets valuation `(2,2)`.
    DoubledArrow,
    /// An extra component `1 -> 2 (1,2)`, `2 -> 1 (2,1)`.
    ValuedTwoCycle,
}

/// Non-Hom-finite family: like [`gen_hom_finite`] but with one defect
/// planted in the cyclicization before sources and sinks are adjoined.
pub fn gen_defective(seed: u64) -> (ValuedQuiver, Defect) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cycles = random_cycles(&mut rng);
    let mut defect = [Defect::Chord, Defect::DoubledArrow, Defect::ValuedTwoCycle][rng.gen_range(0..3)];
    let free: Vec<(usize, usize)> = (0..cycles.len())
        .flat_map(|u| (0..cycles.len()).map(move |w| (u, w)))
        .filter(|&(u, w)| cycles.valuation(u, w).is_none())
        .collect();
    // A single loop leaves no room for a chord.
    if free.is_empty() && defect == Defect::Chord {
        defect = Defect::DoubledArrow;
    }
    let mut raw = cycles.to_raw();
    match defect {
        Defect::Chord => {
            let (u, w) = *free.choose(&mut rng).expect("checked above");
            raw.arrows.push(RawArrow::new(cycles.vertex(u).clone(), cycles.vertex(w).clone()));
        }
        Defect::DoubledArrow => {
            let k = rng.gen_range(0..raw.arrows.len());
            raw.arrows[k].valuation = Some(Valuation::split(2));
        }
        Defect::ValuedTwoCycle => {
            let (x, y) = (fresh_id(&cycles, "v"), fresh_id(&cycles, "w"));
            raw.vertices.extend([x.clone(), y.clone()]);
            raw.weights.extend([(x.clone(), 1), (y.clone(), 2)]);
            raw.arrows.push(RawArrow::valued(x.clone(), y.clone(), 1, 2));
            raw.arrows.push(RawArrow::valued(y, x, 2, 1));
        }
    }
    let mut q = raw.validate().expect("planted defects keep the quiver symmetrizable");
    for _ in 0..rng.gen_range(0..=4) {
        q = random_extension(&mut rng, &q);
    }
    (q, defect)
}
