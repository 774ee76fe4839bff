//! Geodetic convexity: hop distances, closed intervals, the iterated
//! interval operator and convex hulls.

use std::collections::VecDeque;
use std::fmt;

use crate::graph::Graph;
use crate::vertex_set::{words_for, VertexSet};

/// A hop distance, or `Unreachable` for vertices in different components.
///
/// `Unreachable` orders above every finite distance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Distance {
    Finite(u32),
    Unreachable,
}

impl Distance {
    pub fn finite(self) -> Option<u32> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Unreachable => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Distance::Finite(_))
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Unreachable => f.write_str("inf"),
        }
    }
}

/// All-pairs hop distances of one graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<Distance>,
}

impl DistanceMatrix {
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> Distance {
        self.d[u * self.n + v]
    }
}

/// One breadth-first search per vertex.
pub fn all_pairs_distances(g: &Graph) -> DistanceMatrix {
    let n = g.order();
    let mut d = vec![Distance::Unreachable; n * n];
    let mut queue = VecDeque::with_capacity(n);
    for s in 0..n {
        let row = &mut d[s * n..(s + 1) * n];
        row[s] = Distance::Finite(0);
        queue.clear();
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            let Distance::Finite(du) = row[u] else {
                unreachable!()
            };
            for w in g.neighbors(u) {
                if row[w] == Distance::Unreachable {
                    row[w] = Distance::Finite(du + 1);
                    queue.push_back(w);
                }
            }
        }
    }
    DistanceMatrix { n, d }
}

/// Closed interval `I[u, v]`: `u`, `v` and every vertex on some shortest
/// `u`-`v` path. When no path exists only the endpoints are included.
pub fn interval_pair(g: &Graph, dm: &DistanceMatrix, u: usize, v: usize) -> VertexSet {
    let n = g.order();
    let mut out = VertexSet::new(n);
    out.insert(u);
    out.insert(v);
    let Distance::Finite(duv) = dm.get(u, v) else {
        return out;
    };
    for w in 0..n {
        if let (Distance::Finite(a), Distance::Finite(b)) = (dm.get(u, w), dm.get(w, v)) {
            if a + b == duv {
                out.insert(w);
            }
        }
    }
    out
}

/// `I[S]`: union of `I[u, v]` over unordered pairs of `S`, singletons
/// included. `I[∅] = ∅`.
pub fn interval_set(g: &Graph, dm: &DistanceMatrix, s: &VertexSet) -> VertexSet {
    let members = s.to_vec();
    let mut out = s.clone();
    for (i, &u) in members.iter().enumerate() {
        for &v in &members[i + 1..] {
            out.union_with(&interval_pair(g, dm, u, v));
        }
    }
    out
}

/// The iterates `S = I^0[S], I^1[S], ...` up to and including the first
/// repetition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HullTrace {
    /// `steps[p] = I^p[S]`; the last entry repeats `steps[fixpoint_index]`.
    pub steps: Vec<VertexSet>,
    /// First `p` with `steps[p] == steps[p + 1]`.
    pub fixpoint_index: usize,
}

impl HullTrace {
    /// The convex hull `H(S)`.
    pub fn final_set(&self) -> &VertexSet {
        &self.steps[self.fixpoint_index]
    }

    /// Number of strict growth steps before the fixpoint.
    pub fn growth_steps(&self) -> usize {
        self.fixpoint_index
    }
}

/// Iterates [`interval_set`] from `s` until it stops growing. Each strict
/// step adds at least one vertex, so at most `n` iterations run.
pub fn convex_hull(g: &Graph, dm: &DistanceMatrix, s: &VertexSet) -> HullTrace {
    let mut steps = vec![s.clone()];
    for _ in 0..=g.order() {
        let last = steps.last().expect("nonempty");
        let next = interval_set(g, dm, last);
        let done = &next == last;
        steps.push(next);
        if done {
            let fixpoint_index = steps.len() - 2;
            return HullTrace {
                steps,
                fixpoint_index,
            };
        }
    }
    unreachable!("interval iteration exceeded vertex count")
}

/// `I[S] = S`.
pub fn is_convex(g: &Graph, dm: &DistanceMatrix, s: &VertexSet) -> bool {
    &interval_set(g, dm, s) == s
}

/// `H(S) = V(G)`.
pub fn is_hull_set(g: &Graph, dm: &DistanceMatrix, s: &VertexSet) -> bool {
    convex_hull(g, dm, s).final_set().is_full()
}

/// Every closed interval of a graph, precomputed as packed bitsets so hull
/// closure can run without allocation.
#[derive(Debug, Clone)]
pub struct IntervalTable {
    n: usize,
    stride: usize,
    data: Vec<u64>,
}

/// Reusable buffers for [`IntervalTable::closure_into`].
#[derive(Debug, Default, Clone)]
pub struct ClosureScratch {
    current: Vec<u64>,
    next: Vec<u64>,
    members: Vec<usize>,
    frontier: Vec<usize>,
}

impl IntervalTable {
    pub fn new(g: &Graph, dm: &DistanceMatrix) -> Self {
        let n = g.order();
        let stride = words_for(n);
        let mut data = vec![0u64; n * n * stride];
        for u in 0..n {
            for v in u..n {
                let iv = interval_pair(g, dm, u, v);
                for (a, b) in [(u, v), (v, u)] {
                    let at = (a * n + b) * stride;
                    data[at..at + stride].copy_from_slice(iv.words());
                }
            }
        }
        Self { n, stride, data }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    fn row(&self, u: usize, v: usize) -> &[u64] {
        let at = (u * self.n + v) * self.stride;
        &self.data[at..at + self.stride]
    }

    pub fn interval(&self, u: usize, v: usize) -> VertexSet {
        VertexSet::from_words(self.n, self.row(u, v))
    }

    /// Convex hull of `seed`.
    pub fn closure(&self, seed: &VertexSet) -> VertexSet {
        let mut scratch = ClosureScratch::default();
        self.closure_into(seed.iter(), &mut scratch);
        VertexSet::from_words(self.n, &scratch.current)
    }

    /// Whether the hull of `seed` is every vertex.
    pub fn spans<I>(&self, seed: I, scratch: &mut ClosureScratch) -> bool
    where
        I: IntoIterator<Item = usize>,
    {
        self.closure_into(seed, scratch) == self.n
    }

    /// Computes the hull into `scratch.current` and returns its size.
    ///
    /// Only pairs with at least one endpoint added in the previous round are
    /// expanded; pairs of older members were already absorbed.
    pub fn closure_into<I>(&self, seed: I, scratch: &mut ClosureScratch) -> usize
    where
        I: IntoIterator<Item = usize>,
    {
        let ClosureScratch {
            current,
            next,
            members,
            frontier,
        } = scratch;
        current.clear();
        current.resize(self.stride, 0);
        members.clear();
        for v in seed {
            let bit = 1u64 << (v % 64);
            if current[v / 64] & bit == 0 {
                current[v / 64] |= bit;
                members.push(v);
            }
        }
        frontier.clear();
        frontier.extend_from_slice(members);
        while !frontier.is_empty() && members.len() < self.n {
            next.clear();
            next.extend_from_slice(current);
            for &u in frontier.iter() {
                for &v in members.iter() {
                    for (a, b) in next.iter_mut().zip(self.row(u, v)) {
                        *a |= b;
                    }
                }
            }
            frontier.clear();
            for (w, (a, b)) in next.iter().zip(current.iter()).enumerate() {
                let mut fresh = a & !b;
                while fresh != 0 {
                    frontier.push(w * 64 + fresh.trailing_zeros() as usize);
                    fresh &= fresh - 1;
                }
            }
            members.extend_from_slice(frontier);
            std::mem::swap(current, next);
        }
        members.len()
    }
}
