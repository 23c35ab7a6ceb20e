//! Simple undirected graphs as arrays of sorted neighbour sequences.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// An immutable simple undirected graph on vertices `0..n`.
///
/// Every adjacency sequence is strictly increasing and symmetric, there are
/// no self-loops, and edges have a canonical enumeration: pairs `(u, v)` with
/// `u < v` in lexicographic order. Edge indices used elsewhere in the crate
/// (edge colourings, line graphs) refer to that enumeration.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
    // Index of the first edge (u, _) with u as smaller endpoint.
    edge_offset: Vec<usize>,
}

impl Graph {
    /// Builds a graph from an arbitrary edge list. Repeated pairs and
    /// self-loops are dropped.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::Input(format!(
                    "edge ({u}, {v}) has an endpoint outside 0..{n}"
                )));
            }
            if u != v {
                adj[u].push(v);
                adj[v].push(u);
            }
        }
        Ok(Self::from_raw_adjacency(adj))
    }

    pub fn empty(n: usize) -> Self {
        Self::from_raw_adjacency(vec![Vec::new(); n])
    }

    // Sorts and deduplicates; input must already be loop-free and symmetric.
    fn from_raw_adjacency(mut adj: Vec<Vec<usize>>) -> Self {
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        let mut edge_offset = Vec::with_capacity(adj.len() + 1);
        let mut m = 0;
        for (u, list) in adj.iter().enumerate() {
            edge_offset.push(m);
            m += list.len() - list.partition_point(|&w| w <= u);
        }
        edge_offset.push(m);
        Self {
            adj,
            m,
            edge_offset,
        }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn neighbours(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in canonical order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| {
            let start = list.partition_point(|&w| w <= u);
            list[start..].iter().map(move |&w| (u, w))
        })
    }

    /// Canonical index of edge `uv`, or `None` if absent.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        if b >= self.n() {
            return None;
        }
        let list = &self.adj[a];
        let pos = list.binary_search(&b).ok()?;
        Some(self.edge_offset[a] + pos - list.partition_point(|&w| w <= a))
    }

    /// Closed-neighbourhood-free adjacency as a vertex set.
    pub fn neighbour_set(&self, v: usize) -> VertexSet {
        self.adj[v].iter().copied().collect()
    }

    /// Per-vertex neighbour bitmasks, available when `n <= 64`.
    pub fn adjacency_masks(&self) -> Option<Vec<u64>> {
        if self.n() > 64 {
            return None;
        }
        Some(
            self.adj
                .iter()
                .map(|list| list.iter().fold(0u64, |acc, &w| acc | 1 << w))
                .collect(),
        )
    }

    pub fn add_edge(&self, u: usize, v: usize) -> Result<Self> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v || self.has_edge(u, v) {
            return Err(Error::Input(format!(
                "cannot add edge ({u}, {v}): loop or already present"
            )));
        }
        let mut adj = self.adj.clone();
        adj[u].push(v);
        adj[v].push(u);
        Ok(Self::from_raw_adjacency(adj))
    }

    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Self> {
        if !self.has_edge(u, v) {
            return Err(Error::Input(format!("edge ({u}, {v}) not present")));
        }
        let mut adj = self.adj.clone();
        adj[u].retain(|&w| w != v);
        adj[v].retain(|&w| w != u);
        Ok(Self::from_raw_adjacency(adj))
    }

    /// Contracts the edge `vw`. See [`Graph::identify`] for the relabelling.
    pub fn contract_edge(&self, v: usize, w: usize) -> Result<(Self, Vec<usize>)> {
        if !self.has_edge(v, w) {
            return Err(Error::Input(format!("edge ({v}, {w}) not present")));
        }
        self.identify(v, w)
    }

    /// Merges two distinct vertices, adjacent or not, into one.
    ///
    /// The merged vertex takes `min(v, w)`; vertices above `max(v, w)` shift
    /// down by one. Parallel edges collapse and the loop from an edge `vw`
    /// disappears. Returns the graph and the old-to-new vertex map.
    pub fn identify(&self, v: usize, w: usize) -> Result<(Self, Vec<usize>)> {
        self.check_vertex(v)?;
        self.check_vertex(w)?;
        if v == w {
            return Err(Error::Input(format!("cannot identify vertex {v} with itself")));
        }
        let (keep, drop) = (v.min(w), v.max(w));
        let mapping: Vec<usize> = (0..self.n())
            .map(|x| match x.cmp(&drop) {
                std::cmp::Ordering::Less => x,
                std::cmp::Ordering::Equal => keep,
                std::cmp::Ordering::Greater => x - 1,
            })
            .collect();
        let mut adj = vec![Vec::new(); self.n() - 1];
        for (a, b) in self.edges() {
            let (a, b) = (mapping[a], mapping[b]);
            if a != b {
                adj[a].push(b);
                adj[b].push(a);
            }
        }
        Ok((Self::from_raw_adjacency(adj), mapping))
    }

    /// `G[W]` with dense relabelling; the second value maps new ids back to
    /// the originals. Members of `W` outside `0..n` are ignored.
    pub fn induced_subgraph(&self, subset: &VertexSet) -> (Self, Vec<usize>) {
        let back: Vec<usize> = subset.iter().take_while(|&v| v < self.n()).collect();
        let mut forward = vec![usize::MAX; self.n()];
        for (i, &v) in back.iter().enumerate() {
            forward[v] = i;
        }
        let adj = back
            .iter()
            .map(|&v| {
                self.adj[v]
                    .iter()
                    .filter_map(|&w| (forward[w] != usize::MAX).then_some(forward[w]))
                    .collect()
            })
            .collect();
        (Self::from_raw_adjacency(adj), back)
    }

    /// The line graph. Vertex `i` of the result is the `i`-th canonical edge,
    /// whose endpoints are returned alongside.
    pub fn line_graph(&self) -> (Self, Vec<(usize, usize)>) {
        let edges: Vec<(usize, usize)> = self.edges().collect();
        let mut adj = vec![Vec::new(); edges.len()];
        for v in 0..self.n() {
            let incident: Vec<usize> = self.adj[v]
                .iter()
                .map(|&w| self.edge_index(v, w).expect("adjacent"))
                .collect();
            for (i, &a) in incident.iter().enumerate() {
                for &b in &incident[i + 1..] {
                    adj[a].push(b);
                    adj[b].push(a);
                }
            }
        }
        (Self::from_raw_adjacency(adj), edges)
    }

    /// Adds a new vertex `n` adjacent to every existing vertex.
    pub fn add_apex(&self) -> Self {
        let n = self.n();
        let mut adj = self.adj.clone();
        for list in &mut adj {
            list.push(n);
        }
        adj.push((0..n).collect());
        Self::from_raw_adjacency(adj)
    }

    pub fn complement(&self) -> Self {
        let n = self.n();
        let adj = (0..n)
            .map(|v| {
                (0..n)
                    .filter(|&w| w != v && self.adj[v].binary_search(&w).is_err())
                    .collect()
            })
            .collect();
        Self::from_raw_adjacency(adj)
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Self) -> Self {
        let shift = self.n();
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|list| list.iter().map(|&w| w + shift).collect()),
        );
        Self::from_raw_adjacency(adj)
    }

    /// Smallest-last ordering and the degeneracy.
    ///
    /// Repeatedly removes a vertex of minimum remaining degree (lowest index on
    /// ties) and places it last; `dgn` is the largest minimum degree seen.
    /// Every vertex then has at most `dgn` neighbours earlier in the ordering.
    pub fn degeneracy_ordering(&self) -> (Vec<usize>, usize) {
        let n = self.n();
        let mut degree: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        let mut buckets: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); self.max_degree() + 1];
        for v in 0..n {
            buckets[degree[v]].insert(v);
        }
        let mut removed = vec![false; n];
        let mut order = Vec::with_capacity(n);
        let mut dgn = 0;
        let mut lowest = 0;
        for _ in 0..n {
            while buckets[lowest].is_empty() {
                lowest += 1;
            }
            let v = buckets[lowest].pop_first().expect("non-empty bucket");
            dgn = dgn.max(lowest);
            removed[v] = true;
            order.push(v);
            for &w in &self.adj[v] {
                if !removed[w] {
                    buckets[degree[w]].remove(&w);
                    degree[w] -= 1;
                    buckets[degree[w]].insert(w);
                    lowest = lowest.min(degree[w]);
                }
            }
        }
        order.reverse();
        (order, dgn)
    }

    /// Connected components, each sorted, in order of their smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let v = comp[i];
                i += 1;
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_forest(&self) -> bool {
        self.m + self.components().len() == self.n()
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::Input(format!("vertex {v} outside 0..{}", self.n())))
        }
    }

    /// Full scan of the representation invariants.
    pub fn check_invariants(&self) -> bool {
        let mut degree_sum = 0;
        for (v, list) in self.adj.iter().enumerate() {
            if list.windows(2).any(|p| p[0] >= p[1]) {
                return false;
            }
            if list.iter().any(|&w| w == v || w >= self.n() || !self.has_edge(w, v)) {
                return false;
            }
            degree_sum += list.len();
        }
        degree_sum == 2 * self.m
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use proptest::prelude::*;

    fn k3() -> Graph {
        families::complete(3)
    }

    #[test]
    fn build_normalizes_duplicates_and_loops() {
        let g = Graph::new(3, [(0, 1), (1, 0), (2, 2)]).unwrap();
        assert_eq!(g.m(), 1);
        assert_eq!(g.neighbours(0), &[1]);
        assert!(g.neighbours(2).is_empty());
        assert_eq!(k3().m(), 3);
    }

    #[test]
    fn build_rejects_out_of_range() {
        assert!(matches!(Graph::new(2, [(0, 2)]), Err(Error::Input(_))));
    }

    #[test]
    fn paw_degrees() {
        let g = families::paw();
        assert_eq!(g.m(), 4);
        assert_eq!(g.degree(families::PAW_U), 3);
    }

    #[test]
    fn contractions() {
        let (g, map) = k3().contract_edge(0, 2).unwrap();
        assert_eq!((g.n(), g.m()), (2, 1));
        assert_eq!(map, vec![0, 1, 0]);

        let paw = families::paw();
        let (g, _) = paw.contract_edge(families::PAW_X, families::PAW_U).unwrap();
        assert_eq!(g, families::complete(3));
        // The merged u/v vertex sees x and w, which stay non-adjacent.
        let (g, _) = paw.contract_edge(families::PAW_U, families::PAW_V).unwrap();
        assert_eq!((g.n(), g.m()), (3, 2));

        let (g, _) = families::cycle(4).contract_edge(0, 1).unwrap();
        assert_eq!(g, families::cycle(3));

        assert!(k3().delete_edge(0, 1).unwrap().contract_edge(0, 1).is_err());
    }

    #[test]
    fn add_and_delete() {
        let paw = families::paw();
        let more = paw.add_edge(families::PAW_X, families::PAW_V).unwrap();
        assert_eq!(more.m(), 5);
        let p3 = k3().delete_edge(0, 1).unwrap();
        assert_eq!(p3.m(), 2);
        assert_eq!(p3.add_edge(0, 1).unwrap(), k3());
        assert!(k3().add_edge(0, 1).is_err());
        assert!(k3().add_edge(1, 1).is_err());
    }

    #[test]
    fn induced_subgraphs() {
        let paw = families::paw();
        let w: VertexSet = [families::PAW_U, families::PAW_V, families::PAW_W]
            .into_iter()
            .collect();
        let (tri, back) = paw.induced_subgraph(&w);
        assert_eq!(tri, families::complete(3));
        assert_eq!(back, vec![families::PAW_U, families::PAW_V, families::PAW_W]);

        let (same, back) = paw.induced_subgraph(&VertexSet::full(4));
        assert_eq!(same, paw);
        assert_eq!(back, vec![0, 1, 2, 3]);

        let (none, _) = paw.induced_subgraph(&VertexSet::new());
        assert_eq!((none.n(), none.m()), (0, 0));
    }

    #[test]
    fn line_graphs() {
        assert_eq!(k3().line_graph().0, k3());
        assert_eq!(families::path(3).line_graph().0, families::complete(2));
        assert_eq!(families::star(3).line_graph().0, k3());
    }

    #[test]
    fn degeneracy() {
        assert_eq!(families::path(7).degeneracy_ordering().1, 1);
        assert_eq!(families::star(5).degeneracy_ordering().1, 1);
        assert_eq!(families::cycle(5).degeneracy_ordering().1, 2);
        assert_eq!(families::complete(5).degeneracy_ordering().1, 4);
    }

    #[test]
    fn apex() {
        assert_eq!(k3().add_apex(), families::complete(4));
        let wheel = families::cycle(5).add_apex();
        assert_eq!(wheel.degree(5), 5);
        assert_eq!(wheel.m(), 10);
    }

    #[test]
    fn edge_indices_follow_canonical_order() {
        let g = families::petersen();
        for (i, (u, v)) in g.edges().enumerate() {
            assert_eq!(g.edge_index(u, v), Some(i));
            assert_eq!(g.edge_index(v, u), Some(i));
        }
        assert_eq!(g.edge_index(0, 0), None);
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..=max_n).prop_flat_map(|n| {
            proptest::collection::vec((0..n, 0..n), 0..3 * n)
                .prop_map(move |edges| Graph::new(n, edges).unwrap())
        })
    }

    proptest! {
        #[test]
        fn every_operation_preserves_invariants(g in arb_graph(12), a in 0usize..12, b in 0usize..12) {
            prop_assert!(g.check_invariants());
            let n = g.n();
            let (a, b) = (a % n, b % n);
            if a != b {
                let common = g.neighbours(a).iter().filter(|w| g.has_edge(b, **w)).count();
                if g.has_edge(a, b) {
                    let (c, _) = g.contract_edge(a, b).unwrap();
                    prop_assert!(c.check_invariants());
                    prop_assert_eq!(c.n(), n - 1);
                    prop_assert!(c.m() + 1 + common >= g.m());
                    prop_assert!(c.m() < g.m());
                    let d = g.delete_edge(a, b).unwrap();
                    prop_assert!(d.check_invariants());
                    prop_assert_eq!(d.m(), g.m() - 1);
                } else {
                    let e = g.add_edge(a, b).unwrap();
                    prop_assert!(e.check_invariants());
                    prop_assert_eq!(e.delete_edge(a, b).unwrap(), g.clone());
                }
            }
            let (l, ends) = g.line_graph();
            prop_assert!(l.check_invariants());
            prop_assert_eq!(l.n(), g.m());
            prop_assert_eq!(ends.len(), g.m());
            let expected: usize = (0..n).map(|v| g.degree(v) * g.degree(v).saturating_sub(1)).sum();
            prop_assert_eq!(2 * l.m(), expected);
            prop_assert!(g.add_apex().check_invariants());
            prop_assert!(g.complement().check_invariants());
        }

        #[test]
        fn smallest_last_back_degree_bounded(g in arb_graph(20)) {
            let (order, dgn) = g.degeneracy_ordering();
            let mut position = vec![0; g.n()];
            for (i, &v) in order.iter().enumerate() {
                position[v] = i;
            }
            let mut sorted = order.clone();
            sorted.sort_unstable();
            prop_assert_eq!(sorted, (0..g.n()).collect::<Vec<_>>());
            for &v in &order {
                let back = g.neighbours(v).iter().filter(|&&w| position[w] < position[v]).count();
                prop_assert!(back <= dgn);
            }
        }
    }
}
