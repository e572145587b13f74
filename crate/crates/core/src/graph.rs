//! Simple undirected graphs and the unicyclic families used throughout the
//! crate.
//!
//! Vertices are `0..n`. Constructors follow one labeling convention so that
//! golden outputs (graph6 strings, polynomial dumps) are byte-stable: cycle
//! vertices come first in cycle order, then the attached vertices.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

/// An immutable simple undirected graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    /// Sorted, each pair stored as `(min, max)`.
    edges: Vec<(usize, usize)>,
    /// Sorted neighbor lists.
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an edge list, rejecting loops, duplicates and
    /// out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut list = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidParameters(format!(
                    "edge ({u},{v}) has an endpoint outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::InvalidParameters(format!("self-loop at {u}")));
            }
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidParameters(format!(
                "duplicate edge ({},{})",
                w[0].0, w[0].1
            )));
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &list {
            adj[u].push(v);
            adj[v].push(u);
        }
        for nb in &mut adj {
            nb.sort_unstable();
        }
        Ok(Graph { n, edges: list, adj })
    }

    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Connected components as sorted vertex lists, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// True when the graph has no cycle.
    pub fn is_forest(&self) -> bool {
        self.size() + self.components().len() == self.n
    }

    /// Subgraph induced on `keep` (any order), relabeled to `0..keep.len()`
    /// in the order given.
    pub fn induced(&self, keep: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let mut edges = Vec::new();
        for &(u, v) in &self.edges {
            if index[u] != usize::MAX && index[v] != usize::MAX {
                edges.push((index[u], index[v]));
            }
        }
        Graph::from_edges(keep.len(), edges).expect("induced subgraph of a simple graph is simple")
    }

    /// Graph with the listed vertices deleted; survivors keep their relative order.
    pub fn without_vertices(&self, drop: &[usize]) -> Graph {
        let mut gone = vec![false; self.n];
        for &v in drop {
            gone[v] = true;
        }
        let keep: Vec<usize> = (0..self.n).filter(|&v| !gone[v]).collect();
        self.induced(&keep)
    }

    /// Graph with one edge deleted; vertex set unchanged.
    pub fn without_edge(&self, u: usize, v: usize) -> Graph {
        let key = (u.min(v), u.max(v));
        Graph::from_edges(self.n, self.edges.iter().copied().filter(|&e| e != key))
            .expect("edge deletion keeps the graph simple")
    }

    /// The unique cycle of a connected unicyclic graph, in traversal order
    /// starting from its smallest vertex. `None` for every other graph.
    pub fn unique_cycle(&self) -> Option<Vec<usize>> {
        if self.n < 3 || self.size() != self.n || !self.is_connected() {
            return None;
        }
        // Peel leaves; the 2-core of a unicyclic graph is exactly its cycle.
        let mut deg = self.degrees();
        let mut removed = vec![false; self.n];
        let mut stack: Vec<usize> = (0..self.n).filter(|&v| deg[v] == 1).collect();
        while let Some(v) = stack.pop() {
            removed[v] = true;
            for &w in &self.adj[v] {
                if !removed[w] {
                    deg[w] -= 1;
                    if deg[w] == 1 {
                        stack.push(w);
                    }
                }
            }
        }
        let start = (0..self.n).find(|&v| !removed[v])?;
        let mut cycle = vec![start];
        let mut prev = usize::MAX;
        let mut cur = start;
        loop {
            let next = self.adj[cur]
                .iter()
                .copied()
                .find(|&w| !removed[w] && w != prev)?;
            if next == start {
                break;
            }
            cycle.push(next);
            prev = cur;
            cur = next;
        }
        Some(cycle)
    }

    /// Dense 0/1 adjacency matrix in row-major order.
    pub fn adjacency_matrix(&self) -> Vec<Vec<f64>> {
        let mut a = vec![vec![0.0; self.n]; self.n];
        for &(u, v) in &self.edges {
            a[u][v] = 1.0;
            a[v][u] = 1.0;
        }
        a
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

/// The cycle `C_n`.
pub fn make_cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidOrder {
            n,
            reason: "a cycle needs at least 3 vertices",
        });
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// The path `P_n`.
pub fn make_path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidOrder {
            n,
            reason: "a path needs at least 1 vertex",
        });
    }
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

/// The lollipop `P_n^l`: cycle `C_l` on vertices `0..l` with a pendant path
/// `l..n` hanging from vertex 0. `P_n^n` is `C_n`.
pub fn make_lollipop(n: usize, l: usize) -> Result<Graph> {
    if l < 3 || l > n {
        return Err(Error::InvalidParameters(format!(
            "lollipop P_{n}^{l} needs 3 <= l <= n"
        )));
    }
    let cycle = (0..l).map(|i| (i, (i + 1) % l));
    let tail = (l..n).map(|v| (if v == l { 0 } else { v - 1 }, v));
    Graph::from_edges(n, cycle.chain(tail))
}

/// A member of `C(n, l)`: cycle `C_l` with `attachment[i]` pendant vertices
/// on cycle vertex `i`. Pendants are numbered from `l` upward, grouped by
/// cycle position.
pub fn make_cycle_with_pendants(n: usize, l: usize, attachment: &[usize]) -> Result<Graph> {
    if l < 3 || l > n {
        return Err(Error::InvalidParameters(format!(
            "cycle with pendants needs 3 <= l <= n, got n={n}, l={l}"
        )));
    }
    if attachment.len() != l {
        return Err(Error::InvalidParameters(format!(
            "expected {l} attachment counts, got {}",
            attachment.len()
        )));
    }
    let total: usize = attachment.iter().sum();
    if total != n - l {
        return Err(Error::InvalidParameters(format!(
            "attachment counts sum to {total}, expected n-l = {}",
            n - l
        )));
    }
    let mut edges: Vec<(usize, usize)> = (0..l).map(|i| (i, (i + 1) % l)).collect();
    let mut next = l;
    for (i, &k) in attachment.iter().enumerate() {
        for _ in 0..k {
            edges.push((i, next));
            next += 1;
        }
    }
    Graph::from_edges(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_four() {
        let g = make_cycle(4).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 3), (1, 2), (2, 3)]);
        assert!(g.degrees().iter().all(|&d| d == 2));
        assert_eq!(make_cycle(3).unwrap().size(), 3);
        assert!(matches!(make_cycle(2), Err(Error::InvalidOrder { .. })));
    }

    #[test]
    fn paths() {
        assert_eq!(make_path(1).unwrap().size(), 0);
        assert_eq!(make_path(2).unwrap().size(), 1);
        assert_eq!(make_path(5).unwrap().degrees(), vec![1, 2, 2, 2, 1]);
        assert!(make_path(0).is_err());
    }

    #[test]
    fn lollipops() {
        let g = make_lollipop(7, 6).unwrap();
        assert_eq!((g.order(), g.size()), (7, 7));
        let deg = g.degrees();
        assert_eq!(deg.iter().filter(|&&d| d == 3).count(), 1);
        assert_eq!(deg.iter().filter(|&&d| d == 1).count(), 1);
        assert_eq!(make_lollipop(6, 6).unwrap(), make_cycle(6).unwrap());
        let p43 = make_lollipop(4, 3).unwrap();
        assert_eq!(p43.edges(), &[(0, 1), (0, 2), (0, 3), (1, 2)]);
        assert!(make_lollipop(5, 2).is_err());
        assert!(make_lollipop(5, 6).is_err());
    }

    #[test]
    fn pendants() {
        let g = make_cycle_with_pendants(6, 4, &[2, 0, 0, 0]).unwrap();
        assert_eq!((g.order(), g.size()), (6, 6));
        assert_eq!(g.degree(0), 4);
        assert_eq!(
            make_cycle_with_pendants(4, 3, &[1, 0, 0]).unwrap(),
            make_lollipop(4, 3).unwrap()
        );
        assert!(make_cycle_with_pendants(5, 4, &[1, 1, 0, 0]).is_err());
    }

    #[test]
    fn cycles_found() {
        assert_eq!(make_lollipop(7, 6).unwrap().unique_cycle().unwrap().len(), 6);
        assert_eq!(make_path(5).unwrap().unique_cycle(), None);
        assert_eq!(
            make_cycle(9).unwrap().unique_cycle().unwrap(),
            vec![0, 1, 2, 3, 4, 5, 6, 7, 8]
        );
        let g = make_cycle_with_pendants(9, 5, &[1, 0, 2, 0, 1]).unwrap();
        let c = g.unique_cycle().unwrap();
        assert_eq!(c.len(), 5);
        for w in 0..c.len() {
            assert!(g.has_edge(c[w], c[(w + 1) % c.len()]));
        }
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(Graph::from_edges(3, [(0, 0)]).is_err());
        assert!(Graph::from_edges(3, [(0, 1), (1, 0)]).is_err());
        assert!(Graph::from_edges(3, [(0, 3)]).is_err());
    }

    #[test]
    fn deletion_helpers() {
        let g = make_cycle(5).unwrap();
        let h = g.without_edge(0, 4);
        assert!(h.is_forest() && h.is_connected());
        let f = g.without_vertices(&[0, 1]);
        assert_eq!((f.order(), f.size()), (3, 2));
        assert_eq!(g.without_vertices(&[0, 2]).components().len(), 2);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn lollipop_shape(n in 3usize..40, l in 3usize..40) {
                prop_assume!(l <= n);
                let g = make_lollipop(n, l).unwrap();
                prop_assert!(g.is_connected());
                prop_assert_eq!(g.size(), n);
                prop_assert_eq!(g.unique_cycle().unwrap().len(), l);
            }

            #[test]
            fn pendant_leaves(l in 3usize..10, extra in proptest::collection::vec(0usize..4, 10)) {
                let att = &extra[..l];
                let n = l + att.iter().sum::<usize>();
                let g = make_cycle_with_pendants(n, l, att).unwrap();
                prop_assert_eq!(g.degrees().iter().filter(|&&d| d == 1).count(), n - l);
            }
        }
    }
}
