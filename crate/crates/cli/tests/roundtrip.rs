//! parse ∘ serialize ∘ parse = parse, and canonical text is a fixed point,
//! over the hand-written corpus plus generated documents.

use std::fs;
use std::path::Path;

use radzero_cli::dsl::{self, serialize, serialize_quiver, QuiverDocument};
use radzero_core::constructions::{
    adjoin_random, disjoint_union, gen_cycle, gen_defective, gen_hom_finite, gen_loops, gen_random, gen_random_valued,
    trivial_ext_power,
};

fn corpus() -> Vec<(String, String)> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/corpus");
    let mut docs: Vec<(String, String)> = fs::read_dir(&dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "qv"))
        .map(|p| (p.display().to_string(), fs::read_to_string(&p).unwrap()))
        .collect();
    docs.sort();

    let mut generated = Vec::new();
    for len in 1..=6 {
        generated.push((format!("cycle{len}"), gen_cycle(len)));
    }
    for n in 1..=4 {
        generated.push((format!("loops{n}"), gen_loops(n)));
    }
    for seed in 0..12 {
        generated.push((format!("random{seed}"), gen_random(seed, 5, 2)));
        generated.push((format!("valued{seed}"), gen_random_valued(seed, 4, 2)));
        generated.push((format!("finite{seed}"), gen_hom_finite(seed)));
        generated.push((format!("defect{seed}"), gen_defective(seed).0));
    }
    for seed in 0..4 {
        let q = gen_hom_finite(100 + seed);
        generated.push((format!("ext{seed}"), adjoin_random(&q, seed)));
        generated.push((format!("g2_{seed}"), trivial_ext_power(&q, 2).unwrap()));
        generated.push((format!("union{seed}"), disjoint_union(&q, &gen_cycle(2))));
    }
    docs.extend(generated.into_iter().map(|(name, q)| (name.clone(), serialize_quiver(&name, &q))));
    docs
}

#[test]
fn corpus_has_at_least_fifty_documents() {
    assert!(corpus().len() >= 50, "{}", corpus().len());
}

#[test]
fn parse_serialize_parse_is_stable() {
    for (name, text) in corpus() {
        let first = dsl::parse(&text).unwrap_or_else(|e| panic!("{name}: {e}"));
        let canonical = serialize(&first);
        let second: QuiverDocument = dsl::parse(&canonical).unwrap_or_else(|e| panic!("{name}: {e}\n{canonical}"));
        assert_eq!(first, second, "{name}");
        assert_eq!(first.body, second.body, "{name}");
        assert_eq!(serialize(&second), canonical, "{name}: canonical text is not a fixed point");
    }
}

#[test]
fn canonical_text_has_no_redundant_lines() {
    for (name, text) in corpus() {
        let canonical = serialize(&dsl::parse(&text).unwrap());
        for line in canonical.lines() {
            assert!(!line.contains('#'), "{name}: {line}");
            assert!(!line.ends_with("[1,1]"), "{name}: {line}");
            assert!(!(line.starts_with("weight") && line.ends_with("= 1")), "{name}: {line}");
        }
    }
}
