//! Rooted trees as level sequences.
//!
//! A level sequence lists vertex depths in preorder, root first at depth 0.
//! The canonical sequence of a rooted tree is the lexicographically largest
//! one over all child orderings, obtained by emitting subtrees in decreasing
//! order of their own canonical sequences. Canonical sequences identify
//! rooted trees up to isomorphism and double as memo keys for the forest
//! characteristic-polynomial recursion.

use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct LevelSequence(pub Vec<u8>);

impl LevelSequence {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Parent of each vertex in preorder numbering; the root maps to `None`.
    pub fn parents(&self) -> Vec<Option<usize>> {
        let mut last_at_depth: Vec<usize> = Vec::new();
        let mut parents = Vec::with_capacity(self.0.len());
        for (i, &d) in self.0.iter().enumerate() {
            let d = d as usize;
            parents.push(if d == 0 { None } else { Some(last_at_depth[d - 1]) });
            last_at_depth.truncate(d);
            last_at_depth.push(i);
        }
        parents
    }

    /// True for the single-vertex tree.
    pub fn is_trivial(&self) -> bool {
        self.0.len() == 1
    }

    /// True for a path hanging from one of its ends: `0, 1, 2, ...`.
    pub fn is_rooted_path(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &d)| d as usize == i)
    }

    /// True for a star rooted at its center (every non-root at depth 1).
    pub fn is_rooted_star(&self) -> bool {
        self.0.iter().skip(1).all(|&d| d == 1)
    }
}

impl fmt::Display for LevelSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(".")?;
            }
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for LevelSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

/// All rooted trees on `k` vertices, each in canonical form, in decreasing
/// lexicographic order (path first, star last).
///
/// Successor rule (Beyer and Hedetniemi): let `p` be the last position with
/// depth greater than 1 and `q` the last position before `p` at depth
/// `L[p] - 1`; then `L[i] = L[i - (p - q)]` for every `i >= p`. Each step is
/// constant time amortized.
pub fn rooted_trees(k: usize) -> Vec<LevelSequence> {
    if k == 0 {
        return Vec::new();
    }
    let mut cur: Vec<u8> = (0..k as u8).collect();
    let mut out = vec![LevelSequence(cur.clone())];
    while let Some(p) = cur.iter().rposition(|&d| d > 1) {
        let q = cur[..p]
            .iter()
            .rposition(|&d| d == cur[p] - 1)
            .expect("a vertex at depth > 1 has a parent");
        let shift = p - q;
        for i in p..k {
            cur[i] = cur[i - shift];
        }
        out.push(LevelSequence(cur.clone()));
    }
    out
}

/// Canonical level sequence of the tree reachable from `root` without
/// passing through `blocked` (used to cut a tree off a cycle).
pub fn canonical_rooted(adj: &[Vec<usize>], root: usize, blocked: &dyn Fn(usize) -> bool) -> LevelSequence {
    fn encode(
        adj: &[Vec<usize>],
        v: usize,
        parent: usize,
        depth: u8,
        blocked: &dyn Fn(usize) -> bool,
    ) -> Vec<u8> {
        let mut kids: Vec<Vec<u8>> = adj[v]
            .iter()
            .filter(|&&w| w != parent && !blocked(w))
            .map(|&w| encode(adj, w, v, depth + 1, blocked))
            .collect();
        kids.sort_unstable_by(|a, b| b.cmp(a));
        let mut seq = Vec::with_capacity(1 + kids.iter().map(Vec::len).sum::<usize>());
        seq.push(depth);
        for k in kids {
            seq.extend(k);
        }
        seq
    }
    LevelSequence(encode(adj, root, usize::MAX, 0, blocked))
}

/// Canonical code of a free tree given by adjacency lists: the larger of
/// the canonical rooted sequences at its center(s).
pub fn canonical_free_tree(adj: &[Vec<usize>]) -> LevelSequence {
    let n = adj.len();
    if n <= 2 {
        return LevelSequence((0..n as u8).collect());
    }
    let mut deg: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| deg[v] <= 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for &w in &adj[v] {
                if deg[w] > 1 {
                    deg[w] -= 1;
                    if deg[w] == 1 {
                        next.push(w);
                    }
                }
            }
            deg[v] = 0;
        }
        layer = next;
    }
    let none = |_: usize| false;
    layer
        .iter()
        .map(|&c| canonical_rooted(adj, c, &none))
        .max()
        .expect("a nonempty tree has a center")
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn adj_of(seq: &LevelSequence) -> Vec<Vec<usize>> {
        let parents = seq.parents();
        let mut adj = vec![Vec::new(); seq.len()];
        for (v, p) in parents.iter().enumerate() {
            if let Some(p) = *p {
                adj[v].push(p);
                adj[p].push(v);
            }
        }
        adj
    }

    #[test]
    fn small_counts() {
        assert_eq!(rooted_trees(1).len(), 1);
        let three = rooted_trees(3);
        assert_eq!(three, vec![LevelSequence(vec![0, 1, 2]), LevelSequence(vec![0, 1, 1])]);
        let counts: Vec<usize> = (1..=10).map(|k| rooted_trees(k).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 9, 20, 48, 115, 286, 719]);
    }

    #[test]
    fn five_vertex_trees_match_brute_force() {
        // Every labeled rooted tree on 5 vertices via parent arrays where
        // parent[v] < v is not assumed: enumerate all functions from
        // non-root vertices to vertices, keep the acyclic ones, and reduce
        // each to its canonical code.
        let k: usize = 5;
        let mut codes = BTreeSet::new();
        let total = k.pow((k - 1) as u32);
        for mut code in 0..total {
            let mut parent = vec![usize::MAX; k];
            for v in 1..k {
                parent[v] = code % k;
                code /= k;
            }
            let acyclic = (1..k).all(|mut v| {
                for _ in 0..k {
                    if v == 0 {
                        return true;
                    }
                    v = parent[v];
                }
                false
            });
            if !acyclic {
                continue;
            }
            let mut adj = vec![Vec::new(); k];
            for v in 1..k {
                adj[v].push(parent[v]);
                adj[parent[v]].push(v);
            }
            codes.insert(canonical_rooted(&adj, 0, &|_| false));
        }
        assert_eq!(codes.len(), 9);
        let generated: BTreeSet<_> = rooted_trees(k).into_iter().collect();
        assert_eq!(codes, generated);
    }

    #[test]
    fn generated_sequences_are_canonical() {
        for k in 1..=9 {
            for seq in rooted_trees(k) {
                assert_eq!(canonical_rooted(&adj_of(&seq), 0, &|_| false), seq);
            }
        }
    }

    #[test]
    fn free_tree_codes_identify_relabelings() {
        // path 0-1-2-3 labeled two ways
        let a = vec![vec![1], vec![0, 2], vec![1, 3], vec![2]];
        let b = vec![vec![2], vec![3], vec![0, 3], vec![1, 2]];
        assert_eq!(canonical_free_tree(&a), canonical_free_tree(&b));
        let star = vec![vec![1, 2, 3], vec![0], vec![0], vec![0]];
        assert_ne!(canonical_free_tree(&a), canonical_free_tree(&star));
        // free trees on 7 vertices: 11
        let mut free = BTreeSet::new();
        for seq in rooted_trees(7) {
            free.insert(canonical_free_tree(&adj_of(&seq)));
        }
        assert_eq!(free.len(), 11);
    }

    #[test]
    fn shape_predicates() {
        assert!(LevelSequence(vec![0, 1, 2, 3]).is_rooted_path());
        assert!(LevelSequence(vec![0, 1, 1, 1]).is_rooted_star());
        assert!(LevelSequence(vec![0]).is_trivial());
        assert_eq!(LevelSequence(vec![0, 1, 2, 1]).to_string(), "0.1.2.1");
    }
}
