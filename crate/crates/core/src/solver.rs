//! Exact minimum hull sets.
//!
//! Candidate sets are tested in ascending cardinality and, within one
//! cardinality, in lexicographic order of their sorted vertex sequence, so
//! the first hull set found is minimum and the witness is deterministic.
//! Callers may restrict the search with vertices every hull set must
//! contain and pairs every hull set must intersect.

use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;

use crate::convexity::{all_pairs_distances, ClosureScratch, IntervalTable};
use crate::error::SolverError;
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Default cap on the vertex count accepted by the exact search.
pub const DEFAULT_MAX_VERTICES: usize = 24;

/// Largest graph for which constrained answers are re-checked by an
/// unconstrained search when `recheck_small` is on.
pub const RECHECK_LIMIT: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchConfig {
    /// Graphs with more vertices are refused.
    pub max_vertices: usize,
    /// Worker threads per cardinality level.
    pub parallel_width: usize,
    /// When off, forced vertices, pairs and lower bounds are all ignored.
    pub pruning_enabled: bool,
    /// Re-run small constrained searches without constraints and fail on
    /// disagreement.
    pub recheck_small: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self {
            max_vertices: DEFAULT_MAX_VERTICES,
            parallel_width: 1,
            pruning_enabled: true,
            recheck_small: cfg!(debug_assertions),
        }
    }
}

impl SearchConfig {
    pub fn unpruned() -> Self {
        Self {
            pruning_enabled: false,
            recheck_small: false,
            ..Self::default()
        }
    }

    fn validate(&self) -> Result<(), SolverError> {
        if self.max_vertices < 1 {
            return Err(SolverError::Config("max_vertices must be at least 1"));
        }
        if self.parallel_width < 1 {
            return Err(SolverError::Config("parallel_width must be at least 1"));
        }
        Ok(())
    }
}

/// Candidates tested at one cardinality. Every one of them was rejected
/// except, at the final cardinality, the last.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CardinalityLog {
    pub cardinality: usize,
    pub tested: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HullReport {
    pub hull_number: usize,
    /// A minimum hull set: the lexicographically first one for exact
    /// searches, a union of per-component witnesses otherwise.
    pub witness: VertexSet,
    /// Vertices the search required in every candidate.
    pub forced: VertexSet,
    /// Pairs every candidate had to intersect.
    pub pairs: Vec<(usize, usize)>,
    pub sets_tested: u64,
    /// First cardinality searched; smaller ones are excluded by sound
    /// lower bounds.
    pub start_cardinality: usize,
    /// Per-cardinality counts. Empty when the report sums several
    /// components.
    pub log: Vec<CardinalityLog>,
}

/// Simplicial vertices: members of every hull set.
pub fn forced_vertices(g: &Graph) -> VertexSet {
    g.simplicial_vertices()
}

/// Pairs `(i, n + i)` of the complementary prism of `g` where `i` is
/// simplicial in `g` and `i` is also simplicial in the complement of `g`.
/// Every hull set of the prism meets each such pair.
pub fn forced_pairs_prism(g: &Graph) -> Vec<(usize, usize)> {
    let n = g.order();
    let in_g = g.simplicial_vertices();
    let in_complement = g.complement().simplicial_vertices();
    in_g.intersection(&in_complement)
        .iter()
        .map(|i| (i, n + i))
        .collect()
}

fn check_size(n: usize, cfg: &SearchConfig) -> Result<(), SolverError> {
    cfg.validate()?;
    if n > cfg.max_vertices {
        return Err(SolverError::TooLarge {
            n,
            cap: cfg.max_vertices,
        });
    }
    Ok(())
}

/// Minimum hull set of `g` by exhaustive search restricted to supersets of
/// `forced` that intersect every pair in `pairs`.
///
/// The constraints must hold for every hull set of `g`; pass an empty set
/// and no pairs for an unconstrained search.
pub fn hull_number_exact(
    g: &Graph,
    cfg: &SearchConfig,
    forced: &VertexSet,
    pairs: &[(usize, usize)],
) -> Result<HullReport, SolverError> {
    let n = g.order();
    check_size(n, cfg)?;
    if forced.len() > n {
        return Err(SolverError::ForcedTooLarge {
            forced: forced.len(),
            n,
        });
    }
    if let Some(vertex) = forced.iter().find(|&v| v >= n) {
        return Err(SolverError::ConstraintOutOfRange { vertex, n });
    }
    if let Some(&(a, b)) = pairs.iter().find(|&&(a, b)| a >= n || b >= n) {
        return Err(SolverError::ConstraintOutOfRange {
            vertex: a.max(b),
            n,
        });
    }
    let forced = VertexSet::from_vertices(n, forced.iter());

    let dm = all_pairs_distances(g);
    let table = IntervalTable::new(g, &dm);
    let report = if cfg.pruning_enabled {
        search(&table, cfg, &forced, pairs)
    } else {
        search(&table, cfg, &VertexSet::new(n), &[])
    }?;

    let constrained = !forced.is_empty() || !pairs.is_empty();
    if cfg.recheck_small && cfg.pruning_enabled && constrained && n <= RECHECK_LIMIT {
        let plain = search(&table, &SearchConfig::unpruned(), &VertexSet::new(n), &[])?;
        if plain.hull_number != report.hull_number {
            return Err(SolverError::UnsoundConstraints {
                constrained: report.hull_number,
                unconstrained: plain.hull_number,
            });
        }
    }
    Ok(report)
}

/// Hull number via per-component search. Components are solved
/// independently with their simplicial vertices forced, and the results
/// are summed.
pub fn hull_number(g: &Graph, cfg: &SearchConfig) -> Result<HullReport, SolverError> {
    let n = g.order();
    check_size(n, cfg)?;
    let components = g.components();
    let mut total = HullReport {
        hull_number: 0,
        witness: VertexSet::new(n),
        forced: VertexSet::new(n),
        pairs: Vec::new(),
        sets_tested: 0,
        start_cardinality: 0,
        log: Vec::new(),
    };
    if components.is_empty() {
        let table = IntervalTable::new(g, &all_pairs_distances(g));
        return search(&table, cfg, &VertexSet::new(0), &[]);
    }
    let single = components.len() == 1;
    for comp in &components {
        let (sub, map) = g.induced_subgraph(comp);
        let forced = if cfg.pruning_enabled {
            forced_vertices(&sub)
        } else {
            VertexSet::new(sub.order())
        };
        let part = hull_number_exact(&sub, cfg, &forced, &[])?;
        total.hull_number += part.hull_number;
        total.sets_tested += part.sets_tested;
        total.start_cardinality += part.start_cardinality;
        for v in part.witness.iter() {
            total.witness.insert(map[v]);
        }
        for v in part.forced.iter() {
            total.forced.insert(map[v]);
        }
        if single {
            total.log = part.log;
        }
    }
    Ok(total)
}

/// Hull number of the complementary prism of `g`, searched with the
/// prism's simplicial vertices forced and the pairs of
/// [`forced_pairs_prism`] required.
pub fn hull_number_prism(g: &Graph, cfg: &SearchConfig) -> Result<HullReport, SolverError> {
    check_size(2 * g.order(), cfg)?;
    let prism = g.complementary_prism();
    let forced = forced_vertices(&prism);
    let pairs = forced_pairs_prism(g);
    hull_number_exact(&prism, cfg, &forced, &pairs)
}

/// Greedy count of pairwise-disjoint pairs; each needs its own vertex.
fn disjoint_pair_bound(n: usize, pairs: &[(usize, usize)]) -> usize {
    let mut used = VertexSet::new(n);
    let mut count = 0;
    for &(a, b) in pairs {
        if a == b {
            if used.insert(a) {
                count += 1;
            }
        } else if !used.contains(a) && !used.contains(b) {
            used.insert(a);
            used.insert(b);
            count += 1;
        }
    }
    count
}

/// The search proper, on an already validated problem.
fn search(
    table: &IntervalTable,
    cfg: &SearchConfig,
    forced: &VertexSet,
    pairs: &[(usize, usize)],
) -> Result<HullReport, SolverError> {
    let n = table.order();
    let open_pairs: Vec<(usize, usize)> = pairs
        .iter()
        .copied()
        .filter(|&(a, b)| !forced.contains(a) && !forced.contains(b))
        .collect();

    let start = if cfg.pruning_enabled {
        let base = n.min(2);
        (forced.len() + disjoint_pair_bound(n, &open_pairs)).max(base)
    } else {
        0
    };

    let problem = Problem::new(table, forced, &open_pairs);
    let pool = if cfg.parallel_width > 1 {
        Some(
            rayon::ThreadPoolBuilder::new()
                .num_threads(cfg.parallel_width)
                .build()
                .map_err(|_| SolverError::Config("could not start worker threads"))?,
        )
    } else {
        None
    };

    let mut log = Vec::new();
    let mut sets_tested = 0;
    for k in start..=n {
        let (hit, tested) = match &pool {
            Some(pool) => pool.install(|| problem.level(k, true)),
            None => problem.level(k, false),
        };
        sets_tested += tested;
        log.push(CardinalityLog {
            cardinality: k,
            tested,
        });
        if let Some(witness) = hit {
            return Ok(HullReport {
                hull_number: k,
                witness: VertexSet::from_vertices(n, witness),
                forced: forced.clone(),
                pairs: pairs.to_vec(),
                sets_tested,
                start_cardinality: start,
                log,
            });
        }
    }
    unreachable!("the full vertex set is always a hull set")
}

/// Search state shared by all workers at one cardinality.
struct Problem<'a> {
    table: &'a IntervalTable,
    forced: Vec<usize>,
    free: Vec<usize>,
    /// `closing[q]`: for each open pair whose larger free position is `q`,
    /// the smaller position. Skipping position `q` requires the smaller one
    /// to be chosen already.
    closing: Vec<Vec<usize>>,
}

struct BlockOutcome {
    hit: Option<Vec<usize>>,
    tested: u64,
}

impl<'a> Problem<'a> {
    fn new(table: &'a IntervalTable, forced: &VertexSet, open_pairs: &[(usize, usize)]) -> Self {
        let n = table.order();
        let free: Vec<usize> = (0..n).filter(|&v| !forced.contains(v)).collect();
        let mut position = vec![usize::MAX; n];
        for (p, &v) in free.iter().enumerate() {
            position[v] = p;
        }
        let mut closing = vec![Vec::new(); free.len()];
        for &(a, b) in open_pairs {
            let (pa, pb) = (position[a], position[b]);
            let (lo, hi) = (pa.min(pb), pa.max(pb));
            closing[hi].push(lo);
        }
        Self {
            table,
            forced: forced.to_vec(),
            free,
            closing,
        }
    }

    /// Tests every admissible candidate of cardinality `k` in lexicographic
    /// order until one spans the graph. Blocks are the candidates sharing a
    /// first free vertex; the lowest hitting block wins, so the outcome and
    /// the tested count do not depend on scheduling.
    fn level(&self, k: usize, parallel: bool) -> (Option<Vec<usize>>, u64) {
        if k < self.forced.len() {
            return (None, 0);
        }
        let r = k - self.forced.len();
        if r > self.free.len() {
            return (None, 0);
        }
        if r == 0 {
            let outcome = self.block(None, 0, &AtomicUsize::new(usize::MAX));
            return (outcome.hit, outcome.tested);
        }
        let blocks = self.free.len() - r + 1;
        let best = AtomicUsize::new(usize::MAX);
        let outcomes: Vec<BlockOutcome> = if parallel {
            (0..blocks)
                .into_par_iter()
                .map(|b| self.block(Some(b), r, &best))
                .collect()
        } else {
            let mut out = Vec::new();
            for b in 0..blocks {
                let o = self.block(Some(b), r, &best);
                let done = o.hit.is_some();
                out.push(o);
                if done {
                    break;
                }
            }
            out
        };
        let mut tested = 0;
        for o in outcomes {
            tested += o.tested;
            if o.hit.is_some() {
                return (o.hit, tested);
            }
        }
        (None, tested)
    }

    fn block(&self, first: Option<usize>, r: usize, best: &AtomicUsize) -> BlockOutcome {
        let mut state = Walk {
            problem: self,
            chosen: Vec::with_capacity(r),
            picked: vec![false; self.free.len()],
            scratch: ClosureScratch::default(),
            tested: 0,
            block: first.unwrap_or(0),
            best,
            seed: Vec::with_capacity(self.forced.len() + r),
        };
        let hit = match first {
            None => {
                if state.skip_ok(0, self.free.len()) {
                    state.leaf()
                } else {
                    None
                }
            }
            Some(b) => {
                if state.skip_ok(0, b) {
                    state.descend(b, r)
                } else {
                    None
                }
            }
        };
        if hit.is_some() {
            best.fetch_min(state.block, Ordering::Relaxed);
        }
        BlockOutcome {
            hit,
            tested: state.tested,
        }
    }
}

struct Walk<'p, 'a> {
    problem: &'p Problem<'a>,
    chosen: Vec<usize>,
    picked: Vec<bool>,
    scratch: ClosureScratch,
    tested: u64,
    block: usize,
    best: &'p AtomicUsize,
    seed: Vec<usize>,
}

impl Walk<'_, '_> {
    /// Every open pair closing in `from..to` is already hit.
    fn skip_ok(&self, from: usize, to: usize) -> bool {
        (from..to).all(|q| self.problem.closing[q].iter().all(|&lo| self.picked[lo]))
    }

    /// Picks free position `pos`, then `remaining - 1` more above it.
    fn descend(&mut self, pos: usize, remaining: usize) -> Option<Vec<usize>> {
        if self.best.load(Ordering::Relaxed) < self.block {
            return None;
        }
        self.chosen.push(pos);
        self.picked[pos] = true;
        let found = if remaining == 1 {
            if self.skip_ok(pos + 1, self.problem.free.len()) {
                self.leaf()
            } else {
                None
            }
        } else {
            let last_start = self.problem.free.len() - (remaining - 1);
            let mut found = None;
            for next in pos + 1..=last_start {
                if !self.skip_ok(pos + 1, next) {
                    break;
                }
                found = self.descend(next, remaining - 1);
                if found.is_some() {
                    break;
                }
            }
            found
        };
        self.picked[pos] = false;
        self.chosen.pop();
        found
    }

    fn leaf(&mut self) -> Option<Vec<usize>> {
        self.tested += 1;
        self.seed.clear();
        self.seed.extend_from_slice(&self.problem.forced);
        self.seed
            .extend(self.chosen.iter().map(|&p| self.problem.free[p]));
        if self
            .problem
            .table
            .spans(self.seed.iter().copied(), &mut self.scratch)
        {
            let mut witness = self.seed.clone();
            witness.sort_unstable();
            Some(witness)
        } else {
            None
        }
    }
}

/// Every minimum hull set, by plain enumeration of all subsets in
/// ascending size. Exponential; meant for small graphs.
pub fn all_minimum_hull_sets(g: &Graph) -> (usize, Vec<VertexSet>) {
    let n = g.order();
    let table = IntervalTable::new(g, &all_pairs_distances(g));
    let mut scratch = ClosureScratch::default();
    for k in 0..=n {
        let mut found = Vec::new();
        let mut combo: Vec<usize> = (0..k).collect();
        loop {
            if table.spans(combo.iter().copied(), &mut scratch) {
                found.push(VertexSet::from_vertices(n, combo.iter().copied()));
            }
            // advance to the next k-combination in lexicographic order
            let Some(i) = (0..k).rev().find(|&i| combo[i] < n - k + i) else {
                break;
            };
            combo[i] += 1;
            for j in i + 1..k {
                combo[j] = combo[j - 1] + 1;
            }
        }
        if !found.is_empty() {
            return (k, found);
        }
    }
    unreachable!("the full vertex set is always a hull set")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::convexity::is_hull_set;
    use crate::family::FamilySpec;

    fn gen(s: &str) -> Graph {
        s.parse::<FamilySpec>().unwrap().generate().unwrap()
    }

    fn set(n: usize, vs: &[usize]) -> VertexSet {
        VertexSet::from_vertices(n, vs.iter().copied())
    }

    fn exact(g: &Graph) -> HullReport {
        hull_number_exact(g, &SearchConfig::default(), &VertexSet::new(g.order()), &[]).unwrap()
    }

    #[test]
    fn forced_vertex_examples() {
        assert_eq!(forced_vertices(&gen("complete:5")).len(), 5);
        assert_eq!(forced_vertices(&gen("prism(star:3)")).to_vec(), vec![4]);
        assert!(forced_vertices(&gen("cycle:6")).is_empty());
    }

    #[test]
    fn forced_pair_examples() {
        assert_eq!(
            forced_pairs_prism(&gen("star:3")),
            vec![(1, 5), (2, 6), (3, 7)]
        );
        assert!(forced_pairs_prism(&gen("cycle:5")).is_empty());
        assert_eq!(
            forced_pairs_prism(&gen("complete:3")),
            vec![(0, 3), (1, 4), (2, 5)]
        );
    }

    #[test]
    fn exact_examples() {
        let cfg = SearchConfig::default();
        assert_eq!(
            hull_number_prism(&gen("complete:4"), &cfg)
                .unwrap()
                .hull_number,
            4
        );
        assert_eq!(
            hull_number_prism(&gen("path:3"), &cfg).unwrap().hull_number,
            3
        );
        assert_eq!(
            hull_number_prism(&gen("cycle:6"), &cfg)
                .unwrap()
                .hull_number,
            2
        );
        assert_eq!(exact(&gen("prism(complete:4)")).hull_number, 4);
        assert_eq!(exact(&gen("prism(cycle:6)")).hull_number, 2);
        let k1 = exact(&Graph::complete(1));
        assert_eq!((k1.hull_number, k1.witness.to_vec()), (1, vec![0]));
        let empty = exact(&Graph::empty(0));
        assert_eq!(empty.hull_number, 0);
    }

    #[test]
    fn decomposed_examples() {
        let cfg = SearchConfig::default();
        assert_eq!(
            hull_number(&gen("union(complete:2,complete:2)"), &cfg)
                .unwrap()
                .hull_number,
            4
        );
        let p7 = hull_number(&gen("path:7"), &cfg).unwrap();
        assert_eq!((p7.hull_number, p7.witness.to_vec()), (2, vec![0, 6]));
        let c4 = hull_number(&gen("cycle:4"), &cfg).unwrap();
        assert_eq!((c4.hull_number, c4.witness.to_vec()), (2, vec![0, 2]));
        assert_eq!(hull_number(&Graph::empty(0), &cfg).unwrap().hull_number, 0);
        assert_eq!(hull_number(&Graph::empty(3), &cfg).unwrap().hull_number, 3);
    }

    #[test]
    fn prism_examples() {
        let cfg = SearchConfig::default();
        assert_eq!(
            hull_number_prism(&gen("star:3"), &cfg).unwrap().hull_number,
            4
        );
        assert_eq!(
            hull_number_prism(&gen("theorem9:4"), &cfg)
                .unwrap()
                .hull_number,
            4
        );
        assert_eq!(
            hull_number_prism(&gen("union(complete:3,complete:3)"), &cfg)
                .unwrap()
                .hull_number,
            3
        );
    }

    #[test]
    fn witness_is_lexicographically_first() {
        let g = gen("prism(path:5)");
        let dm = all_pairs_distances(&g);
        let report = exact(&g);
        let (h, all) = all_minimum_hull_sets(&g);
        assert_eq!(report.hull_number, h);
        let first = all.iter().min_by(|a, b| a.lex_cmp(b)).unwrap();
        assert_eq!(&report.witness, first);
        assert!(is_hull_set(&g, &dm, &report.witness));
    }

    #[test]
    fn parallel_search_matches_sequential() {
        for text in [
            "prism(theorem9:4)",
            "prism(tree:7:seed=3)",
            "prism(union(path:3,complete:2,complete:1))",
        ] {
            let g = gen(text);
            let seq = exact(&g);
            for width in [2, 3, 5] {
                let cfg = SearchConfig {
                    parallel_width: width,
                    ..SearchConfig::default()
                };
                let par = hull_number_exact(&g, &cfg, &VertexSet::new(g.order()), &[]).unwrap();
                assert_eq!(par, seq, "{text} width {width}");
            }
        }
    }

    #[test]
    fn refusals() {
        let g = gen("complete:5");
        let small = SearchConfig {
            max_vertices: 4,
            ..SearchConfig::default()
        };
        assert_eq!(
            hull_number(&g, &small),
            Err(SolverError::TooLarge { n: 5, cap: 4 })
        );
        assert_eq!(
            hull_number_prism(&gen("complete:3"), &small),
            Err(SolverError::TooLarge { n: 6, cap: 4 })
        );
        let cfg = SearchConfig::default();
        assert_eq!(
            hull_number_exact(&g, &cfg, &VertexSet::full(7), &[]),
            Err(SolverError::ForcedTooLarge { forced: 7, n: 5 })
        );
        assert_eq!(
            hull_number_exact(&g, &cfg, &set(9, &[6]), &[]),
            Err(SolverError::ConstraintOutOfRange { vertex: 6, n: 5 })
        );
        assert_eq!(
            hull_number_exact(&g, &cfg, &VertexSet::new(5), &[(0, 8)]),
            Err(SolverError::ConstraintOutOfRange { vertex: 8, n: 5 })
        );
        let zero = SearchConfig {
            parallel_width: 0,
            ..SearchConfig::default()
        };
        assert!(matches!(
            hull_number(&g, &zero),
            Err(SolverError::Config(_))
        ));
    }

    #[test]
    fn unsound_constraints_are_detected_on_small_graphs() {
        // vertex 1 is in no minimum hull set of P_4
        let g = gen("path:4");
        let err = hull_number_exact(
            &g,
            &SearchConfig {
                recheck_small: true,
                ..SearchConfig::default()
            },
            &set(4, &[1]),
            &[],
        )
        .unwrap_err();
        assert_eq!(
            err,
            SolverError::UnsoundConstraints {
                constrained: 3,
                unconstrained: 2
            }
        );
    }

    #[test]
    fn lower_levels_are_logged_as_rejected() {
        let g = gen("prism(cycle:5)");
        let r = exact(&g);
        assert_eq!(r.hull_number, 3);
        assert_eq!(r.start_cardinality, 2);
        assert_eq!(r.log.len(), 2);
        assert_eq!(r.log[0].cardinality, 2);
        assert_eq!(r.log[0].tested, 45);
        assert_eq!(r.sets_tested, r.log.iter().map(|l| l.tested).sum::<u64>());
    }
}
