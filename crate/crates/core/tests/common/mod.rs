//! A slow reference implementation built only from `has_edge`: Floyd–Warshall
//! distances, intervals straight from the definition, and hull numbers by
//! scanning every subset. Sets are `u64` masks.

#![allow(dead_code)]

use geohull::{Graph, VertexSet};

pub struct Oracle {
    n: usize,
    dist: Vec<Vec<Option<u32>>>,
}

impl Oracle {
    pub fn new(g: &Graph) -> Self {
        let n = g.order();
        assert!(n <= 20, "oracle is exponential");
        let mut dist = vec![vec![None; n]; n];
        for (u, row) in dist.iter_mut().enumerate() {
            for (v, d) in row.iter_mut().enumerate() {
                if u == v {
                    *d = Some(0);
                } else if g.has_edge(u, v) {
                    *d = Some(1);
                }
            }
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if let (Some(a), Some(b)) = (dist[i][k], dist[k][j]) {
                        if dist[i][j].is_none_or(|d| a + b < d) {
                            dist[i][j] = Some(a + b);
                        }
                    }
                }
            }
        }
        Oracle { n, dist }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn full(&self) -> u64 {
        (1u64 << self.n) - 1
    }

    pub fn dist(&self, u: usize, v: usize) -> Option<u32> {
        self.dist[u][v]
    }

    pub fn interval(&self, u: usize, v: usize) -> u64 {
        let Some(d) = self.dist[u][v] else {
            return (1 << u) | (1 << v);
        };
        (0..self.n)
            .filter(
                |&w| matches!((self.dist[u][w], self.dist[w][v]), (Some(a), Some(b)) if a + b == d),
            )
            .fold(0, |m, w| m | 1 << w)
    }

    pub fn interval_set(&self, s: u64) -> u64 {
        let members: Vec<usize> = (0..self.n).filter(|&v| s >> v & 1 == 1).collect();
        let mut out = 0;
        for (i, &u) in members.iter().enumerate() {
            for &v in &members[i..] {
                out |= self.interval(u, v);
            }
        }
        out
    }

    pub fn hull(&self, s: u64) -> u64 {
        let mut cur = s;
        loop {
            let next = self.interval_set(cur);
            if next == cur {
                return cur;
            }
            cur = next;
        }
    }

    pub fn is_convex(&self, s: u64) -> bool {
        self.interval_set(s) == s
    }

    /// Intersection of every convex superset of `s`.
    pub fn smallest_convex_superset(&self, s: u64) -> u64 {
        let mut out = self.full();
        for t in 0..=self.full() {
            if t & s == s && self.is_convex(t) {
                out &= t;
            }
        }
        out
    }

    /// Hull number and every minimum hull set, by brute force.
    pub fn minimum_hull_sets(&self) -> (usize, Vec<u64>) {
        if self.n == 0 {
            return (0, vec![0]);
        }
        let mut best = usize::MAX;
        let mut sets = Vec::new();
        for s in 0..=self.full() {
            let size = s.count_ones() as usize;
            if size > best || self.hull(s) != self.full() {
                continue;
            }
            if size < best {
                best = size;
                sets.clear();
            }
            sets.push(s);
        }
        (best, sets)
    }

    pub fn hull_number(&self) -> usize {
        self.minimum_hull_sets().0
    }
}

pub fn to_set(n: usize, mask: u64) -> VertexSet {
    VertexSet::from_vertices(n, (0..n).filter(|&v| mask >> v & 1 == 1))
}

pub fn to_mask(s: &VertexSet) -> u64 {
    s.iter().fold(0, |m, v| m | 1 << v)
}
