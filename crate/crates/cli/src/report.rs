//! JSON encodings of core results. Every report carries
//! `"schema": "radzero/1"` and the name of the command that produced it;
//! arbitrary-precision integers are decimal strings.

use radzero_core::gamma::KDimCheck;
use radzero_core::{
    BigUint, BratteliDiagram, CyclicizationResult, HomDimResult, HomFiniteReason, HomFiniteReport, Permutation,
    RemovalKind, SigmaStructure, TheoremAReport, ValuedQuiver, VertexClassification,
};
use serde_json::{json, Map, Value};

pub const SCHEMA: &str = "radzero/1";

pub fn envelope(command: &str, fields: Value) -> Value {
    let mut map = Map::new();
    map.insert("schema".into(), json!(SCHEMA));
    map.insert("command".into(), json!(command));
    if let Value::Object(rest) = fields {
        map.extend(rest);
    }
    Value::Object(map)
}

pub fn big(n: &BigUint) -> Value {
    Value::String(n.to_str_radix(10))
}

fn bigs(ns: &[BigUint]) -> Value {
    Value::Array(ns.iter().map(big).collect())
}

fn ids(q: &ValuedQuiver, idx: &[usize]) -> Value {
    idx.iter().map(|&i| json!(q.vertex(i).as_str())).collect()
}

pub fn quiver(name: &str, q: &ValuedQuiver) -> Value {
    json!({
        "name": name,
        "vertices": q.vertices().iter().zip(q.weights())
            .map(|(v, f)| json!({"id": v.as_str(), "weight": f}))
            .collect::<Vec<_>>(),
        "arrows": q.arrows()
            .map(|(s, t, v)| json!({"source": q.vertex(s).as_str(), "target": q.vertex(t).as_str(), "a": v.a, "b": v.b}))
            .collect::<Vec<_>>(),
    })
}

pub fn classification(q: &ValuedQuiver, c: &VertexClassification) -> Value {
    json!({
        "sources": ids(q, &c.sources),
        "sinks": ids(q, &c.sinks),
        "cyclic": ids(q, &c.cyclic),
        "cyclic_like": ids(q, &c.cyclic_like),
        "reaches_cycle": ids(q, &c.reaches_cycle),
        "reached_by_cycle": ids(q, &c.reached_by_cycle),
    })
}

pub fn cyclicization(q: &ValuedQuiver, r: &CyclicizationResult) -> Value {
    json!({
        "core": quiver("core", &r.core),
        "is_simple": r.is_simple,
        "embedding": ids(q, &r.embedding),
        "trace": r.trace.iter().map(|(v, k)| json!({
            "vertex": q.vertex(*v).as_str(),
            "kind": match k { RemovalKind::Source => "source", RemovalKind::Sink => "sink" },
        })).collect::<Vec<_>>(),
    })
}

pub fn hom_finite(r: &HomFiniteReport) -> Value {
    let kind = match &r.reason {
        HomFiniteReason::SimpleCyclicization => "simple_cyclicization",
        HomFiniteReason::TrivialCycles { .. } => "trivial_cycles",
        HomFiniteReason::NontrivialValuation { .. } => "nontrivial_valuation",
        HomFiniteReason::OutDegree { .. } => "out_degree",
        HomFiniteReason::InDegree { .. } => "in_degree",
    };
    json!({"hom_finite": r.hom_finite, "reason": r.reason.to_string(), "reason_kind": kind})
}

pub fn bratteli(q: &ValuedQuiver, d: &BratteliDiagram) -> Value {
    let sizes: Vec<Vec<Value>> =
        (0..d.levels.len()).map(|i| (0..q.len()).map(|v| big(&d.size(i, v))).collect()).collect();
    json!({
        "depth": d.depth(),
        "vertices": q.vertices().iter().map(|v| v.as_str()).collect::<Vec<_>>(),
        "sizes": sizes,
        "levels": d.levels.iter().map(|level| level.iter()
            .map(|(v, c)| json!({"vertex": q.vertex(*v).as_str(), "size": big(c)}))
            .collect::<Vec<_>>()).collect::<Vec<_>>(),
        "edges": d.edges.iter().map(|level| level.iter()
            .map(|(l, j, a)| json!({"from": q.vertex(*l).as_str(), "to": q.vertex(*j).as_str(), "multiplicity": a}))
            .collect::<Vec<_>>()).collect::<Vec<_>>(),
        "level_dims": bigs(&d.level_dims),
        "injective": d.injective_flags,
        "period_from_start": d.period_from_start(),
    })
}

pub fn hom_dim(r: &HomDimResult) -> Value {
    json!({
        "status": r.status.as_str(),
        "value": r.value.as_ref().map(big),
        "certified": r.certified,
        "first_level": r.first_level,
        "stable_from": r.stable_from,
        "level_dims": bigs(&r.level_dims),
    })
}

fn perm(q: &ValuedQuiver, blocks_at: &[usize], p: &Permutation) -> Value {
    blocks_at
        .iter()
        .enumerate()
        .map(|(u, &v)| json!({"from": q.vertex(v).as_str(), "to": q.vertex(blocks_at[p.apply(u)]).as_str()}))
        .collect()
}

pub fn sigma(q: &ValuedQuiver, s: &SigmaStructure) -> Value {
    let at: Vec<usize> = s.blocks.iter().map(|b| b.vertex).collect();
    json!({
        "blocks": s.blocks.iter().map(|b| json!({"vertex": b.id.as_str(), "size": big(&b.size), "weight": b.weight})).collect::<Vec<_>>(),
        "sigma": perm(q, &at, &s.sigma_perm),
        "omega": perm(q, &at, &s.omega_perm),
        "cycle_type": s.sigma_perm.cycle_type(),
        "order": s.order,
        "dimension": big(&s.total_dim()),
    })
}

fn k_check(c: &KDimCheck) -> Value {
    json!({"shift": c.shift, "k_dim": c.k_dim.as_ref().map(big), "pairing": big(&c.pairing)})
}

pub fn theorem_a(r: &TheoremAReport) -> Value {
    json!({
        "range": [r.range.0, r.range.1],
        "passes": r.passes(),
        "all_bijective": r.all_bijective,
        "composition_failure": r.composition_failure.map(|(n, m)| json!([n, m])),
        "k_dim_matches_pairing": r.k_dim_matches_pairing,
        "k_dim_constant": r.k_dim_constant,
        "order": r.order,
        "k_dims": r.k_dims.iter().map(k_check).collect::<Vec<_>>(),
    })
}
