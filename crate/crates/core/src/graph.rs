//! Simple undirected graphs and the structural operations used throughout
//! the crate: complement, disjoint union, join, complementary prism,
//! components, and a handful of recognizers.

use crate::convexity::{all_pairs_distances, Distance};
use crate::error::GraphError;
use crate::vertex_set::VertexSet;

/// A finite simple undirected graph on vertices `0..n`.
///
/// Adjacency is stored as one bitset row per vertex. Graphs are immutable
/// once built; every operation returns a new graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    rows: Vec<VertexSet>,
}

impl Graph {
    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Self {
            rows: vec![VertexSet::new(n); n],
        }
    }

    /// Builds a graph from an edge list. Rejects self-loops, duplicate
    /// edges (in either orientation) and out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut rows = vec![VertexSet::new(n); n];
        for &(u, v) in edges {
            for vertex in [u, v] {
                if vertex >= n {
                    return Err(GraphError::VertexOutOfRange { vertex, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if !rows[u].insert(v) {
                return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
            }
            rows[v].insert(u);
        }
        Ok(Self { rows })
    }

    /// Like [`Graph::from_edges`] but silently merges repeated edges.
    pub(crate) fn from_edge_iter<I>(n: usize, edges: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut rows = vec![VertexSet::new(n); n];
        for (u, v) in edges {
            debug_assert!(u != v && u < n && v < n);
            rows[u].insert(v);
            rows[v].insert(u);
        }
        Self { rows }
    }

    pub fn complete(n: usize) -> Self {
        Self::from_edge_iter(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.rows.len()
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.iter().filter(move |&v| v > u).map(move |v| (u, v)))
            .collect()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    /// Open neighborhood of `v`.
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.rows[v]
    }

    /// Closed neighborhood of `v`.
    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        let mut s = self.rows[v].clone();
        s.insert(v);
        s
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.rows[u].contains(v)
    }

    /// True when every two distinct members of `set` are adjacent.
    pub fn is_clique(&self, set: &VertexSet) -> bool {
        set.iter().all(|v| {
            let mut others = set.clone();
            others.remove(v);
            others.is_subset(&self.rows[v])
        })
    }

    /// Subgraph induced on `set`, relabeled to `0..set.len()` in ascending
    /// order of the original indices. The returned vector maps new labels
    /// back to old ones.
    pub fn induced_subgraph(&self, set: &VertexSet) -> (Graph, Vec<usize>) {
        let map = set.to_vec();
        let mut index = vec![usize::MAX; self.order()];
        for (new, &old) in map.iter().enumerate() {
            index[old] = new;
        }
        let k = map.len();
        let rows = map
            .iter()
            .map(|&old| {
                VertexSet::from_vertices(
                    k,
                    self.rows[old]
                        .iter()
                        .filter(|&w| set.contains(w))
                        .map(|w| index[w]),
                )
            })
            .collect();
        (Graph { rows }, map)
    }

    /// Same vertex set, edge `{u, v}` present iff absent here (`u != v`).
    pub fn complement(&self) -> Graph {
        let rows = self
            .rows
            .iter()
            .enumerate()
            .map(|(v, row)| {
                let mut c = row.complement();
                c.remove(v);
                c
            })
            .collect();
        Graph { rows }
    }

    /// Complementary prism: vertex `i` is `v_i` of this graph, vertex
    /// `n + i` is its copy in the complement, and `{i, n + i}` are the
    /// matching edges.
    pub fn complementary_prism(&self) -> Graph {
        let n = self.order();
        let mut edges = self.edges();
        for u in 0..n {
            for v in u + 1..n {
                if !self.has_edge(u, v) {
                    edges.push((n + u, n + v));
                }
            }
            edges.push((u, n + u));
        }
        Graph::from_edge_iter(2 * n, edges)
    }

    /// Concatenates vertex blocks in order, with no edges between blocks.
    pub fn disjoint_union(graphs: &[Graph]) -> Graph {
        let total = graphs.iter().map(Graph::order).sum();
        let mut edges = Vec::new();
        let mut offset = 0;
        for g in graphs {
            edges.extend(g.edges().into_iter().map(|(u, v)| (u + offset, v + offset)));
            offset += g.order();
        }
        Graph::from_edge_iter(total, edges)
    }

    /// Disjoint union plus every edge between distinct blocks.
    pub fn join(graphs: &[Graph]) -> Graph {
        let complements: Vec<Graph> = graphs.iter().map(Graph::complement).collect();
        Graph::disjoint_union(&complements).complement()
    }

    /// Connected components, each as a vertex set, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let n = self.order();
        let mut seen = VertexSet::new(n);
        let mut out = Vec::new();
        for start in 0..n {
            if seen.contains(start) {
                continue;
            }
            let mut comp = VertexSet::new(n);
            let mut stack = vec![start];
            seen.insert(start);
            while let Some(u) = stack.pop() {
                comp.insert(u);
                for w in self.rows[u].iter() {
                    if seen.insert(w) {
                        stack.push(w);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Greatest pairwise distance; [`Distance::Unreachable`] if the graph is
    /// disconnected and `0` when there are at most one vertex.
    pub fn diameter(&self) -> Distance {
        if self.order() <= 1 {
            return Distance::Finite(0);
        }
        let dm = all_pairs_distances(self);
        (0..self.order())
            .flat_map(|u| (0..self.order()).map(move |v| (u, v)))
            .map(|(u, v)| dm.get(u, v))
            .max()
            .unwrap_or(Distance::Finite(0))
    }

    /// Vertices whose closed neighborhood is a clique. Isolated vertices
    /// qualify.
    pub fn simplicial_vertices(&self) -> VertexSet {
        VertexSet::from_vertices(
            self.order(),
            (0..self.order()).filter(|&v| self.is_clique(&self.rows[v])),
        )
    }

    /// No induced `P_4`, checked over all 4-vertex subsets.
    pub fn is_cograph(&self) -> bool {
        let n = self.order();
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    for d in c + 1..n {
                        if self.induces_p4([a, b, c, d]) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    // A 4-vertex graph with 3 edges is P_4, K_{1,3} or K_3 + K_1; only P_4
    // has every degree in {1, 2}.
    fn induces_p4(&self, quad: [usize; 4]) -> bool {
        let mut degrees = [0usize; 4];
        let mut edges = 0;
        for i in 0..4 {
            for j in i + 1..4 {
                if self.has_edge(quad[i], quad[j]) {
                    edges += 1;
                    degrees[i] += 1;
                    degrees[j] += 1;
                }
            }
        }
        edges == 3 && degrees.iter().all(|&d| d == 1 || d == 2)
    }

    /// Connected with exactly `n - 1` edges, `n >= 1`.
    pub fn is_tree(&self) -> bool {
        self.order() >= 1 && self.is_connected() && self.edge_count() == self.order() - 1
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.order())
            .field("edges", &self.edges())
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::from_edge_iter(n, (1..n).map(|i| (i - 1, i)))
    }

    fn cycle(n: usize) -> Graph {
        Graph::from_edge_iter(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    fn star(leaves: usize) -> Graph {
        Graph::from_edge_iter(leaves + 1, (1..=leaves).map(|i| (0, i)))
    }

    #[test]
    fn from_edges_rejects_bad_input() {
        assert_eq!(
            Graph::from_edges(3, &[(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(
            Graph::from_edges(3, &[(1, 1)]),
            Err(GraphError::SelfLoop(1))
        );
        assert_eq!(
            Graph::from_edges(3, &[(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
    }

    #[test]
    fn complement_examples() {
        let k4c = Graph::complete(4).complement();
        assert_eq!(k4c.order(), 4);
        assert_eq!(k4c.edge_count(), 0);
        assert_eq!(path(5).complement().complement(), path(5));
        let c5c = cycle(5).complement();
        assert_eq!(c5c.edge_count(), 5);
        assert!((0..5).all(|v| c5c.degree(v) == 2));
        assert!(c5c.is_connected());
    }

    #[test]
    fn prism_examples() {
        let p = path(4).complementary_prism();
        assert_eq!((p.order(), p.edge_count()), (8, 10));

        let k = Graph::complete(3).complementary_prism();
        assert_eq!(
            k.edges(),
            vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 4), (2, 5)]
        );

        let s = star(3).complementary_prism();
        assert_eq!((s.order(), s.edge_count()), (8, 10));
        assert_eq!(s.degree(4), 1);
    }

    #[test]
    fn union_examples() {
        let k2 = Graph::complete(2);
        let u = Graph::disjoint_union(&[k2.clone(), k2]);
        assert_eq!((u.order(), u.edge_count(), u.components().len()), (4, 2, 2));
        assert_eq!(Graph::disjoint_union(&[path(3)]), path(3));
        let u =
            Graph::disjoint_union(&[Graph::complete(3), Graph::complete(1), Graph::complete(1)]);
        assert_eq!((u.order(), u.edge_count(), u.components().len()), (5, 3, 3));
        assert_eq!(Graph::disjoint_union(&[]).order(), 0);
    }

    #[test]
    fn join_of_two_independent_pairs_is_c4() {
        let j = Graph::join(&[Graph::empty(2), Graph::empty(2)]);
        assert_eq!(j.edges(), vec![(0, 2), (0, 3), (1, 2), (1, 3)]);
    }

    #[test]
    fn components_examples() {
        assert_eq!(path(5).components(), vec![VertexSet::full(5)]);
        let u = Graph::disjoint_union(&[Graph::complete(2), Graph::complete(1)]);
        let comps: Vec<Vec<usize>> = u.components().iter().map(VertexSet::to_vec).collect();
        assert_eq!(comps, vec![vec![0, 1], vec![2]]);
        let comps: Vec<Vec<usize>> = Graph::empty(3)
            .components()
            .iter()
            .map(VertexSet::to_vec)
            .collect();
        assert_eq!(comps, vec![vec![0], vec![1], vec![2]]);
    }

    #[test]
    fn diameter_examples() {
        assert_eq!(path(5).diameter(), Distance::Finite(4));
        assert_eq!(Graph::complete(4).diameter(), Distance::Finite(1));
        assert_eq!(
            Graph::complete(3).complementary_prism().diameter(),
            Distance::Finite(3)
        );
        assert_eq!(Graph::empty(2).diameter(), Distance::Unreachable);
        assert_eq!(Graph::empty(1).diameter(), Distance::Finite(0));
        assert_eq!(Graph::empty(0).diameter(), Distance::Finite(0));
    }

    #[test]
    fn simplicial_examples() {
        assert_eq!(path(4).simplicial_vertices().to_vec(), vec![0, 3]);
        assert_eq!(Graph::complete(5).simplicial_vertices().len(), 5);
        assert!(cycle(5).simplicial_vertices().is_empty());
        assert_eq!(Graph::empty(2).simplicial_vertices().len(), 2);
    }

    #[test]
    fn cograph_examples() {
        assert!(!path(4).is_cograph());
        assert!(Graph::complete(4).is_cograph());
        assert!(!cycle(5).is_cograph());
        assert!(cycle(4).is_cograph());
        assert!(star(4).is_cograph());
    }

    #[test]
    fn tree_examples() {
        assert!(path(6).is_tree());
        assert!(!cycle(4).is_tree());
        assert!(!Graph::empty(2).is_tree());
        assert!(Graph::empty(1).is_tree());
        assert!(!Graph::empty(0).is_tree());
    }

    #[test]
    fn induced_subgraph_relabels() {
        let g = cycle(6);
        let (h, map) = g.induced_subgraph(&VertexSet::from_vertices(6, [1, 2, 3, 5]));
        assert_eq!(map, vec![1, 2, 3, 5]);
        assert_eq!(h.edges(), vec![(0, 1), (1, 2)]);
    }
}
