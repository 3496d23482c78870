//! Graph representation and the combinatorial primitives used everywhere else:
//! bipartitions, balls, induced subgraphs, k-chords, cycles, thick sets.

mod chords;
mod cycles;
mod edgelist;
mod graph6;
mod iso;
mod paths;
mod thick;

pub use chords::{find_k_chords, is_k_induced};
pub use cycles::{cycles_through, girth, is_good_cycle, is_internal_edge, CycleAnchor};
pub use edgelist::{format_edge_list, parse_edge_list};
pub use graph6::{graph6_decode, graph6_encode};
pub use iso::{canonical_form, is_heawood, is_isomorphic};
pub use paths::find_2_induced_path;
pub use thick::{is_thick, ThickStatus};

use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::VecDeque;

/// Simple undirected graph on vertices `0..n`, immutable after construction.
/// Neighbor lists are sorted ascending.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adjacency: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Graph {
    /// Build a graph from an edge list. Duplicate edges are merged; self-loops
    /// and out-of-range endpoints are rejected.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { v: w, n });
                }
            }
            if !adjacency[u].contains(&v) {
                adjacency[u].push(v);
                adjacency[v].push(u);
            }
        }
        let mut edge_count = 0;
        for list in &mut adjacency {
            list.sort_unstable();
            edge_count += list.len();
        }
        Ok(Graph {
            n,
            adjacency,
            edge_count: edge_count / 2,
        })
    }

    pub fn empty(n: usize) -> Graph {
        Graph {
            n,
            adjacency: vec![Vec::new(); n],
            edge_count: 0,
        }
    }

    /// Cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3);
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edge_list(n, &edges).unwrap()
    }

    /// Path on `n >= 1` vertices.
    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edge_list(n, &edges).unwrap()
    }

    /// Complete bipartite graph with sides `a` and `b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..a {
            for v in 0..b {
                edges.push((u, a + v));
            }
        }
        Graph::from_edge_list(a + b, &edges).unwrap()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn is_subcubic(&self) -> bool {
        self.max_degree() <= 3
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.adjacency[u]
                .iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<_> = self.adjacency.iter().map(Vec::len).collect();
        d.sort_unstable();
        d
    }

    /// Distances from `v` by breadth-first search; `usize::MAX` marks
    /// unreachable vertices.
    pub fn distances_from(&self, v: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n];
        let mut queue = VecDeque::new();
        dist[v] = 0;
        queue.push_back(v);
        while let Some(u) = queue.pop_front() {
            for &w in &self.adjacency[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// All vertices at distance at most `r` from `v`, as a sorted set.
    pub fn ball(&self, v: usize, r: usize) -> VertexSet {
        let dist = self.distances_from(v);
        let members = (0..self.n).filter(|&u| dist[u] <= r).collect();
        VertexSet::from_sorted(members, self.n)
    }

    /// N(C): vertices outside `set` with a neighbor inside it.
    pub fn neighbors_of_set(&self, set: &VertexSet) -> VertexSet {
        let mut mark = vec![false; self.n];
        for &v in set.members() {
            mark[v] = true;
        }
        let mut out = vec![false; self.n];
        for &v in set.members() {
            for &w in &self.adjacency[v] {
                if !mark[w] {
                    out[w] = true;
                }
            }
        }
        VertexSet::from_sorted((0..self.n).filter(|&u| out[u]).collect(), self.n)
    }

    /// Induced subgraph handle on `set`, with the map back to host indices.
    pub fn induced_subgraph(&self, set: &VertexSet) -> SubgraphHandle {
        let vertex_map: Vec<usize> = set.members().to_vec();
        let mut inverse = vec![usize::MAX; self.n];
        for (i, &v) in vertex_map.iter().enumerate() {
            inverse[v] = i;
        }
        let mut edges = Vec::new();
        for (i, &v) in vertex_map.iter().enumerate() {
            for &w in &self.adjacency[v] {
                if inverse[w] != usize::MAX && inverse[w] > i {
                    edges.push((i, inverse[w]));
                }
            }
        }
        let induced_graph = Graph::from_edge_list(vertex_map.len(), &edges).unwrap();
        SubgraphHandle {
            vertices: set.clone(),
            induced_graph,
            vertex_map,
        }
    }

    /// Delete a vertex set, returning the induced subgraph on the complement.
    pub fn delete_vertices(&self, set: &VertexSet) -> SubgraphHandle {
        self.induced_subgraph(&set.complement())
    }

    /// Connected components as sorted vertex sets, ordered by minimum vertex.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adjacency[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(VertexSet::from_sorted(comp, self.n));
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// Canonical two-coloring, or `None` when an odd cycle exists. Within each
    /// component the side containing its lowest-indexed vertex goes to `a_side`.
    pub fn bipartition(&self) -> Option<Bipartition> {
        let mut color = vec![u8::MAX; self.n];
        let mut a_side = Vec::new();
        let mut b_side = Vec::new();
        for s in 0..self.n {
            if color[s] != u8::MAX {
                continue;
            }
            color[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adjacency[u] {
                    if color[w] == u8::MAX {
                        color[w] = 1 - color[u];
                        queue.push_back(w);
                    } else if color[w] == color[u] {
                        return None;
                    }
                }
            }
        }
        for v in 0..self.n {
            if color[v] == 0 {
                a_side.push(v);
            } else {
                b_side.push(v);
            }
        }
        Some(Bipartition {
            a_side: VertexSet::from_sorted(a_side, self.n),
            b_side: VertexSet::from_sorted(b_side, self.n),
        })
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Disjoint union, relabeling the second operand upward.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut edges: Vec<_> = self.edges().collect();
        edges.extend(other.edges().map(|(u, v)| (u + self.n, v + self.n)));
        Graph::from_edge_list(self.n + other.n, &edges).unwrap()
    }

    /// Relabel vertices by `perm` (vertex `v` becomes `perm[v]`).
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let edges: Vec<_> = self.edges().map(|(u, v)| (perm[u], perm[v])).collect();
        Graph::from_edge_list(self.n, &edges).unwrap()
    }

    /// Symmetric 0/1 adjacency matrix in row-major order.
    pub fn adjacency_matrix(&self) -> Vec<Vec<u8>> {
        let mut m = vec![vec![0u8; self.n]; self.n];
        for (u, v) in self.edges() {
            m[u][v] = 1;
            m[v][u] = 1;
        }
        m
    }
}

/// Sorted, duplicate-free set of vertices of a host graph of size `host_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct VertexSet {
    members: Vec<usize>,
    host_n: usize,
}

impl VertexSet {
    pub fn new(mut members: Vec<usize>, host_n: usize) -> Result<VertexSet> {
        members.sort_unstable();
        members.dedup();
        if let Some(&v) = members.last() {
            if v >= host_n {
                return Err(Error::VertexOutOfRange { v, n: host_n });
            }
        }
        Ok(VertexSet { members, host_n })
    }

    /// `members` must already be sorted and duplicate-free.
    pub fn from_sorted(members: Vec<usize>, host_n: usize) -> VertexSet {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(members.last().map_or(true, |&v| v < host_n));
        VertexSet { members, host_n }
    }

    pub fn empty(host_n: usize) -> VertexSet {
        VertexSet {
            members: Vec::new(),
            host_n,
        }
    }

    pub fn full(host_n: usize) -> VertexSet {
        VertexSet {
            members: (0..host_n).collect(),
            host_n,
        }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn host_n(&self) -> usize {
        self.host_n
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        debug_assert_eq!(self.host_n, other.host_n);
        let mut m = self.members.clone();
        m.extend_from_slice(&other.members);
        m.sort_unstable();
        m.dedup();
        VertexSet::from_sorted(m, self.host_n)
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let m = self
            .members
            .iter()
            .copied()
            .filter(|&v| other.contains(v))
            .collect();
        VertexSet::from_sorted(m, self.host_n)
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let m = self
            .members
            .iter()
            .copied()
            .filter(|&v| !other.contains(v))
            .collect();
        VertexSet::from_sorted(m, self.host_n)
    }

    pub fn complement(&self) -> VertexSet {
        let m = (0..self.host_n).filter(|&v| !self.contains(v)).collect();
        VertexSet::from_sorted(m, self.host_n)
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        self.members.iter().all(|&v| other.contains(v))
    }

    pub fn is_disjoint_from(&self, other: &VertexSet) -> bool {
        self.members.iter().all(|&v| !other.contains(v))
    }
}

/// An induced subgraph together with the map from its indices back to the host.
#[derive(Clone, Debug)]
pub struct SubgraphHandle {
    pub vertices: VertexSet,
    pub induced_graph: Graph,
    /// `vertex_map[i]` is the host index of induced vertex `i`.
    pub vertex_map: Vec<usize>,
}

impl SubgraphHandle {
    pub fn host_index(&self, induced: usize) -> usize {
        self.vertex_map[induced]
    }

    pub fn induced_index(&self, host: usize) -> Option<usize> {
        self.vertex_map.binary_search(&host).ok()
    }
}

/// Ordered bipartition (A, B) of a bipartite graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bipartition {
    pub a_side: VertexSet,
    pub b_side: VertexSet,
}

impl Bipartition {
    /// The same partition with the roles of the sides swapped.
    pub fn swapped(&self) -> Bipartition {
        Bipartition {
            a_side: self.b_side.clone(),
            b_side: self.a_side.clone(),
        }
    }

    /// Which side a vertex lies on: `0` for A, `1` for B.
    pub fn side_of(&self, v: usize) -> u8 {
        if self.a_side.contains(v) {
            0
        } else {
            1
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_edge_list_basic() {
        let g = Graph::from_edge_list(2, &[(0, 1)]).unwrap();
        assert_eq!(g.degree_sequence(), vec![1, 1]);
        let c6 = Graph::cycle(6);
        assert!(c6.adjacency.iter().all(|l| l.len() == 2));
        assert_eq!(c6.edge_count(), 6);
        assert!(matches!(
            Graph::from_edge_list(3, &[(0, 0)]),
            Err(Error::SelfLoop(0))
        ));
        assert!(matches!(
            Graph::from_edge_list(2, &[(0, 5)]),
            Err(Error::VertexOutOfRange { .. })
        ));
        // duplicates collapse
        let g = Graph::from_edge_list(3, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn bipartition_cases() {
        let c6 = Graph::cycle(6);
        let b = c6.bipartition().unwrap();
        assert_eq!(b.a_side.len(), 3);
        assert_eq!(b.b_side.len(), 3);
        assert!(b.a_side.contains(0));
        assert!(Graph::cycle(5).bipartition().is_none());
        // no edge inside a side
        for (u, v) in c6.edges() {
            assert_ne!(b.side_of(u), b.side_of(v));
        }
    }

    #[test]
    fn ball_examples() {
        let c6 = Graph::cycle(6);
        assert_eq!(c6.ball(0, 1).members(), &[0, 1, 5]);
        assert_eq!(c6.ball(0, 0).members(), &[0]);
        // Balls are nested and stabilize at the component.
        for r in 0..6 {
            let b1 = c6.ball(2, r);
            let b2 = c6.ball(2, r + 1);
            assert!(b1.is_subset_of(&b2));
        }
        assert_eq!(c6.ball(0, 10).len(), 6);
    }

    #[test]
    fn neighbors_of_set_examples() {
        let c6 = Graph::cycle(6);
        let empty = VertexSet::empty(6);
        assert!(c6.neighbors_of_set(&empty).is_empty());
        let k2 = Graph::from_edge_list(2, &[(0, 1)]).unwrap();
        let s = VertexSet::new(vec![0], 2).unwrap();
        assert_eq!(k2.neighbors_of_set(&s).members(), &[1]);
        let s = VertexSet::new(vec![0, 2], 6).unwrap();
        assert_eq!(c6.neighbors_of_set(&s).members(), &[1, 3, 5]);
    }

    #[test]
    fn induced_subgraph_examples() {
        let c6 = Graph::cycle(6);
        let all = c6.induced_subgraph(&VertexSet::full(6));
        assert_eq!(all.induced_graph, c6);
        let p = c6.induced_subgraph(&VertexSet::new(vec![0, 1, 2], 6).unwrap());
        assert_eq!(p.induced_graph.edge_count(), 2);
        assert_eq!(p.induced_graph.degree_sequence(), vec![1, 1, 2]);
        let b = c6.bipartition().unwrap();
        let side = c6.induced_subgraph(&b.a_side);
        assert_eq!(side.induced_graph.edge_count(), 0);
    }

    #[test]
    fn connected_components_examples() {
        assert_eq!(Graph::cycle(6).connected_components().len(), 1);
        let two = Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
        let comps = two.connected_components();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].members(), &[0, 1]);
        let empty3 = Graph::empty(3);
        assert_eq!(empty3.connected_components().len(), 3);
    }
}
