//! Deterministic default instances for each group of checks.

use std::ops::RangeInclusive;

use crate::convexity::Distance;
use crate::family::{FamilySpec, DEFAULT_COTREE_DEPTH};

pub const DUARTE_RANGE: RangeInclusive<usize> = 1..=10;
pub const UNBOUNDED_RANGE: RangeInclusive<usize> = 2..=8;
/// Size of the lemma corpus.
pub const LEMMA_CORPUS_SIZE: usize = 200;
/// Largest base graph used by the default disconnected instances, so that
/// prisms stay within the default solver cap.
pub const MAX_DISCONNECTED_BASE: usize = 11;

fn k(n: usize) -> FamilySpec {
    FamilySpec::Complete(n)
}

fn union(parts: Vec<FamilySpec>) -> FamilySpec {
    FamilySpec::Union(parts)
}

fn join(parts: Vec<FamilySpec>) -> FamilySpec {
    FamilySpec::Join(parts)
}

fn spider() -> FamilySpec {
    FamilySpec::Edges {
        n: 6,
        edges: vec![(0, 1), (1, 2), (2, 3), (1, 4), (2, 5)],
    }
}

fn order(spec: &FamilySpec) -> usize {
    spec.generate().map_or(usize::MAX, |g| g.order())
}

/// The first `count` seeded graphs that satisfy `keep`.
fn seeded(
    count: usize,
    make: impl Fn(u64) -> FamilySpec,
    keep: impl Fn(&FamilySpec) -> bool,
) -> Vec<FamilySpec> {
    (0..).map(make).filter(|s| keep(s)).take(count).collect()
}

fn connected(spec: &FamilySpec) -> bool {
    spec.generate().is_ok_and(|g| g.is_connected())
}

/// 200 graphs on at most 8 vertices.
pub fn lemma_corpus() -> Vec<FamilySpec> {
    let mut out = Vec::new();
    out.extend((1..=8).map(FamilySpec::Path));
    out.extend((3..=8).map(FamilySpec::Cycle));
    out.extend((1..=8).map(k));
    out.extend((1..=7).map(FamilySpec::Star));
    out.extend((2..=6).map(FamilySpec::Theorem9));
    out.push(spider());
    for n in 4..=8 {
        out.extend((0..4).map(|seed| FamilySpec::Tree { n, seed }));
    }
    for n in 3..=8 {
        out.extend((0..5).map(|seed| FamilySpec::Cograph {
            n,
            seed,
            depth: DEFAULT_COTREE_DEPTH,
        }));
    }
    out.extend([
        union(vec![k(2), k(2), k(1)]),
        union(vec![FamilySpec::Path(3), k(1)]),
        union(vec![FamilySpec::Cycle(4), k(1), k(1)]),
        union(vec![k(3), FamilySpec::Path(4)]),
        union(vec![FamilySpec::Star(3), k(2)]),
        join(vec![k(1), union(vec![k(2), k(2)])]),
        join(vec![union(vec![k(1), k(1)]), union(vec![k(1), k(1), k(1)])]),
    ]);
    let mut seed = 0u64;
    while out.len() < LEMMA_CORPUS_SIZE {
        let n = 3 + (seed as usize % 6);
        let percent = [25, 40, 55, 70][(seed as usize / 6) % 4];
        out.push(FamilySpec::Gnp { n, percent, seed });
        seed += 1;
    }
    out
}

/// Stars with 3 to 7 leaves, seeded trees on 5 to 9 vertices that are not
/// stars, and a small spider.
pub fn tree_specs() -> Vec<FamilySpec> {
    let mut out: Vec<FamilySpec> = (3..=7).map(FamilySpec::Star).collect();
    let not_star = |s: &FamilySpec| {
        s.generate()
            .is_ok_and(|g| (0..g.order()).all(|v| g.degree(v) + 1 < g.order()))
    };
    for n in 5..=9 {
        out.extend(seeded(2, |seed| FamilySpec::Tree { n, seed }, not_star));
    }
    out.push(spider());
    out
}

/// Unions with at least two nontrivial components.
pub fn multi_component_specs() -> Vec<FamilySpec> {
    let p = FamilySpec::Path;
    vec![
        union(vec![k(2), k(2)]),
        union(vec![k(2), k(2), k(1)]),
        union(vec![p(3), k(2), k(1), k(1)]),
        union(vec![k(3), p(4)]),
        union(vec![FamilySpec::Cycle(4), k(2), k(2)]),
        union(vec![FamilySpec::Star(3), p(3), k(1)]),
        union(vec![k(2), k(3), k(4), k(1)]),
        union(vec![p(4), FamilySpec::Cycle(4), k(1), k(1)]),
    ]
}

/// Connected graphs used as the single nontrivial component.
pub fn nontrivial_pool() -> Vec<FamilySpec> {
    let mut out: Vec<FamilySpec> = (2..=8).map(FamilySpec::Path).collect();
    out.extend((4..=8).map(FamilySpec::Cycle));
    out.extend([
        FamilySpec::Star(3),
        FamilySpec::Star(4),
        k(3),
        k(4),
        FamilySpec::Theorem9(3),
        spider(),
    ]);
    for n in [6, 7] {
        out.extend(seeded(2, |seed| FamilySpec::Tree { n, seed }, |_| true));
    }
    for n in [5, 6, 7] {
        out.extend(seeded(
            2,
            |seed| FamilySpec::Gnp {
                n,
                percent: 50,
                seed,
            },
            connected,
        ));
    }
    // Diameter at most 3 with a complement of diameter at most 2.
    let both_small = |s: &FamilySpec| {
        s.generate().is_ok_and(|g| {
            g.diameter() <= Distance::Finite(3) && g.complement().diameter() <= Distance::Finite(2)
        })
    };
    for n in [5, 6] {
        out.extend(seeded(
            2,
            |seed| FamilySpec::Gnp {
                n,
                percent: 50,
                seed: 100 + seed,
            },
            both_small,
        ));
    }
    out
}

/// One nontrivial component plus 1 to 3 isolated vertices.
pub fn single_component_specs() -> Vec<FamilySpec> {
    let mut out = Vec::new();
    for base in nontrivial_pool() {
        for t in 1..=3 {
            let mut parts = vec![base.clone()];
            parts.extend(std::iter::repeat_n(k(1), t));
            let spec = union(parts);
            if order(&spec) <= MAX_DISCONNECTED_BASE {
                out.push(spec);
            }
        }
    }
    out
}

pub fn disconnected_specs() -> Vec<FamilySpec> {
    let mut out = multi_component_specs();
    out.extend(single_component_specs());
    out
}

/// Connected cographs covering every shape of complement.
pub fn cograph_specs() -> Vec<FamilySpec> {
    let two = || union(vec![k(1), k(1)]);
    let mut out: Vec<FamilySpec> = (2..=6).map(k).collect();
    out.extend([
        join(vec![two(), two()]),
        join(vec![two(), two(), two()]),
        join(vec![two(), two(), k(1)]),
        join(vec![two(), union(vec![k(1), k(1), k(1)]), k(2)]),
        join(vec![union(vec![k(2), k(1)]), two()]),
        join(vec![union(vec![k(2), k(2)]), union(vec![k(3), k(1)]), k(1)]),
    ]);
    let disconnected = [
        two(),
        union(vec![k(2), k(1)]),
        union(vec![k(2), k(2)]),
        union(vec![k(3), k(1), k(1)]),
        union(vec![join(vec![k(1), two()]), k(1)]),
        union(vec![join(vec![two(), two()]), k(2)]),
    ];
    for t in [1, 2] {
        for h in &disconnected {
            out.push(join(vec![k(t), h.clone()]));
        }
    }
    for n in 3..=9 {
        out.extend(seeded(
            2,
            |seed| FamilySpec::Cograph {
                n,
                seed,
                depth: DEFAULT_COTREE_DEPTH,
            },
            connected,
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes_and_bounds() {
        let lemma = lemma_corpus();
        assert_eq!(lemma.len(), LEMMA_CORPUS_SIZE);
        assert!(lemma.iter().all(|s| order(s) <= 8));
        assert!(tree_specs().iter().all(|s| s.generate().unwrap().is_tree()));
        assert!(disconnected_specs()
            .iter()
            .all(|s| order(s) <= MAX_DISCONNECTED_BASE));
        assert!(cograph_specs().iter().all(|s| {
            let g = s.generate().unwrap();
            g.is_connected() && g.is_cograph() && g.order() <= 12
        }));
    }

    #[test]
    fn deterministic() {
        assert_eq!(lemma_corpus(), lemma_corpus());
        assert_eq!(cograph_specs(), cograph_specs());
    }
}
