//! Characteristic polynomials `det(xI - A)` over the integers.
//!
//! Trees use the pendant recurrence `phi(T) = x phi(T - v) - phi(T - u - v)`
//! for a leaf `v` with neighbor `u`, memoized on canonical free-tree codes.
//! A unicyclic component takes one step of the cycle-edge recurrence
//! `phi(G) = phi(G - uv) - phi(G - u - v) - 2 phi(G - C)`, after which every
//! residual graph is a forest. Anything else goes through Berkowitz's
//! division-free algorithm, which also serves as the reference.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poly::IntPolynomial;
use crate::trees::{canonical_free_tree, LevelSequence};

/// Largest order accepted by [`charpoly_general_reference`].
pub const REFERENCE_LIMIT: usize = 64;

/// Memo table for tree polynomials, keyed by canonical free-tree code.
/// One table can be reused across calls on the same thread.
#[derive(Default)]
pub struct TreeMemo {
    map: HashMap<LevelSequence, IntPolynomial>,
}

impl TreeMemo {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }
}

pub fn charpoly(g: &Graph) -> IntPolynomial {
    charpoly_with(g, &mut TreeMemo::new())
}

pub fn charpoly_with(g: &Graph, memo: &mut TreeMemo) -> IntPolynomial {
    let mut out = IntPolynomial::one();
    for comp in g.components() {
        let h = g.induced(&comp);
        let p = if h.size() + 1 == h.order() {
            tree_poly(&adjacency(&h), memo)
        } else if h.size() == h.order() {
            unicyclic_poly(&h, memo)
        } else {
            berkowitz(&h)
        };
        out = out * p;
    }
    out
}

fn adjacency(g: &Graph) -> Vec<Vec<usize>> {
    (0..g.order()).map(|v| g.neighbors(v).to_vec()).collect()
}

fn forest_poly(g: &Graph, memo: &mut TreeMemo) -> IntPolynomial {
    debug_assert!(g.is_forest());
    let mut out = IntPolynomial::one();
    for comp in g.components() {
        out = out * tree_poly(&adjacency(&g.induced(&comp)), memo);
    }
    out
}

fn unicyclic_poly(g: &Graph, memo: &mut TreeMemo) -> IntPolynomial {
    let cycle = g.unique_cycle().expect("connected with n edges");
    let (u, v) = (cycle[0], cycle[1]);
    let a = forest_poly(&g.without_edge(u, v), memo);
    let b = forest_poly(&g.without_vertices(&[u, v]), memo);
    let c = forest_poly(&g.without_vertices(&cycle), memo);
    a - b - c.scale(&BigInt::from(2))
}

/// Polynomial of a tree given by adjacency lists.
fn tree_poly(adj: &[Vec<usize>], memo: &mut TreeMemo) -> IntPolynomial {
    match adj.len() {
        0 => return IntPolynomial::one(),
        1 => return IntPolynomial::x(),
        2 => return IntPolynomial::from_descending(&[1, 0, -1]),
        _ => {}
    }
    let key = canonical_free_tree(adj);
    if let Some(p) = memo.map.get(&key) {
        return p.clone();
    }
    let v = (0..adj.len()).find(|&v| adj[v].len() == 1).expect("trees have leaves");
    let u = adj[v][0];
    let mut removed = vec![false; adj.len()];
    removed[v] = true;
    let minus_v = split(adj, &removed);
    removed[u] = true;
    let minus_uv = split(adj, &removed);

    let mut first = IntPolynomial::x();
    for t in &minus_v {
        first = first * tree_poly(t, memo);
    }
    let mut second = IntPolynomial::one();
    for t in &minus_uv {
        second = second * tree_poly(t, memo);
    }
    let p = first - second;
    memo.map.insert(key, p.clone());
    p
}

/// Components of the graph left after deleting `removed`, each relabeled
/// to `0..k`.
fn split(adj: &[Vec<usize>], removed: &[bool]) -> Vec<Vec<Vec<usize>>> {
    let n = adj.len();
    let mut index = vec![usize::MAX; n];
    let mut comps = Vec::new();
    for s in 0..n {
        if removed[s] || index[s] != usize::MAX {
            continue;
        }
        let mut members = vec![s];
        index[s] = 0;
        let mut i = 0;
        while i < members.len() {
            let x = members[i];
            for &w in &adj[x] {
                if !removed[w] && index[w] == usize::MAX {
                    index[w] = members.len();
                    members.push(w);
                }
            }
            i += 1;
        }
        let local = members
            .iter()
            .map(|&x| {
                adj[x]
                    .iter()
                    .filter(|&&w| !removed[w])
                    .map(|&w| index[w])
                    .collect()
            })
            .collect();
        comps.push(local);
    }
    comps
}

/// Characteristic polynomial by Berkowitz's algorithm on the exact integer
/// adjacency matrix.
pub fn charpoly_general_reference(g: &Graph) -> Result<IntPolynomial> {
    if g.order() > REFERENCE_LIMIT {
        return Err(Error::UnsupportedSize {
            n: g.order(),
            limit: REFERENCE_LIMIT,
        });
    }
    Ok(berkowitz(g))
}

fn berkowitz(g: &Graph) -> IntPolynomial {
    let n = g.order();
    let a: Vec<Vec<BigInt>> = (0..n)
        .map(|i| (0..n).map(|j| BigInt::from(g.has_edge(i, j) as u8)).collect())
        .collect();
    // vect holds the characteristic polynomial of the leading r x r block,
    // highest degree first.
    let mut vect = vec![BigInt::one()];
    for r in 0..n {
        // Toeplitz column: 1, -a_rr, -R S, -R M S, -R M^2 S, ...
        let mut col = Vec::with_capacity(r + 2);
        col.push(BigInt::one());
        col.push(-&a[r][r]);
        let mut s: Vec<BigInt> = (0..r).map(|i| a[i][r].clone()).collect();
        for k in 0..r {
            let rs: BigInt = (0..r).map(|j| &a[r][j] * &s[j]).sum();
            col.push(-rs);
            if k + 1 < r {
                s = (0..r)
                    .map(|i| (0..r).map(|j| &a[i][j] * &s[j]).sum())
                    .collect();
            }
        }
        let mut next = vec![BigInt::zero(); r + 2];
        for (i, slot) in next.iter_mut().enumerate() {
            for (j, v) in vect.iter().enumerate() {
                if i >= j {
                    *slot += &col[i - j] * v;
                }
            }
        }
        vect = next;
    }
    vect.reverse();
    IntPolynomial::new(vect)
}

/// Number of `k`-edge matchings of a forest.
pub fn matching_count(t: &Graph, k: usize) -> Result<BigInt> {
    if !t.is_forest() {
        return Err(Error::Domain("matching_count needs a forest".into()));
    }
    let n = t.order();
    // For each vertex: counts by size with the vertex free / covered.
    let mut free: Vec<Vec<BigInt>> = vec![Vec::new(); n];
    let mut covered: Vec<Vec<BigInt>> = vec![Vec::new(); n];
    let mut total = vec![BigInt::one()];
    let mut seen = vec![false; n];
    for root in 0..n {
        if seen[root] {
            continue;
        }
        // Iterative DFS order, children processed before parents.
        let mut order = Vec::new();
        let mut parent = vec![usize::MAX; n];
        let mut stack = vec![root];
        seen[root] = true;
        while let Some(v) = stack.pop() {
            order.push(v);
            for &w in t.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = v;
                    stack.push(w);
                }
            }
        }
        for &v in order.iter().rev() {
            let mut f = vec![BigInt::one()];
            let mut c: Vec<BigInt> = Vec::new();
            for &w in t.neighbors(v) {
                if parent[w] != v {
                    continue;
                }
                let w_any = add(&free[w], &covered[w]);
                // v covered by the edge vw: previously free v, w free below.
                let via = shift(&mul(&f, &free[w]));
                c = add(&mul(&c, &w_any), &via);
                f = mul(&f, &w_any);
            }
            free[v] = f;
            covered[v] = c;
        }
        total = mul(&total, &add(&free[root], &covered[root]));
    }
    Ok(total.get(k).cloned().unwrap_or_default())
}

fn add(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len().max(b.len())];
    for (i, v) in a.iter().enumerate() {
        out[i] += v;
    }
    for (i, v) in b.iter().enumerate() {
        out[i] += v;
    }
    out
}

fn mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn shift(a: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero()];
    out.extend(a.iter().cloned());
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_cycle, make_cycle_with_pendants, make_lollipop, make_path};

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_descending(c)
    }

    #[test]
    fn small_known_polynomials() {
        assert_eq!(charpoly(&make_cycle(3).unwrap()), p(&[1, 0, -3, -2]));
        assert_eq!(
            charpoly(&make_lollipop(8, 6).unwrap()),
            p(&[1, 0, -8, 0, 19, 0, -16, 0, 4])
        );
        assert_eq!(
            charpoly(&make_lollipop(7, 6).unwrap()),
            p(&[1, 0, -7, 0, 13, 0, -7, 0])
        );
        assert_eq!(charpoly(&make_lollipop(4, 3).unwrap()), p(&[1, 0, -4, -2, 1]));
        assert_eq!(charpoly(&make_path(1).unwrap()), p(&[1, 0]));
        assert_eq!(charpoly(&Graph::empty(0)), IntPolynomial::one());
    }

    #[test]
    fn reference_matches_on_cycles() {
        assert_eq!(
            charpoly_general_reference(&make_cycle(4).unwrap()).unwrap(),
            p(&[1, 0, -4, 0, 0])
        );
        for n in 3..=12 {
            let g = make_cycle(n).unwrap();
            assert_eq!(charpoly(&g), charpoly_general_reference(&g).unwrap(), "C_{n}");
        }
    }

    #[test]
    fn reference_on_dense_and_disconnected_graphs() {
        // K4: (x - 3)(x + 1)^3
        let k4 = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(charpoly(&k4), p(&[1, 0, -6, -8, -3]));
        // two triangles
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert_eq!(charpoly(&g), p(&[1, 0, -3, -2]).pow(2));
        assert_eq!(charpoly(&g), charpoly_general_reference(&g).unwrap());
        assert!(matches!(
            charpoly_general_reference(&Graph::empty(65)),
            Err(Error::UnsupportedSize { .. })
        ));
    }

    #[test]
    fn matchings() {
        let p4 = make_path(4).unwrap();
        assert_eq!(matching_count(&p4, 1).unwrap(), BigInt::from(3));
        assert_eq!(matching_count(&p4, 2).unwrap(), BigInt::from(1));
        assert_eq!(matching_count(&p4, 3).unwrap(), BigInt::from(0));
        assert_eq!(matching_count(&make_path(5).unwrap(), 2).unwrap(), BigInt::from(3));
        assert!(matches!(
            matching_count(&make_cycle(4).unwrap(), 1),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn matching_polynomial_of_trees() {
        // Brute force over edge subsets on a spider with legs 1, 2, 3.
        let t = Graph::from_edges(7, [(0, 1), (0, 2), (2, 3), (0, 4), (4, 5), (5, 6)]).unwrap();
        let edges = t.edges();
        let mut counts = [0i64; 4];
        for mask in 0u32..(1 << edges.len()) {
            let mut used = [false; 7];
            let mut ok = true;
            for (i, &(a, b)) in edges.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    ok &= !used[a] && !used[b];
                    used[a] = true;
                    used[b] = true;
                }
            }
            if ok {
                counts[mask.count_ones() as usize] += 1;
            }
        }
        let phi = charpoly(&t);
        for (k, &c) in counts.iter().enumerate() {
            assert_eq!(matching_count(&t, k).unwrap(), BigInt::from(c));
            let sign = if k % 2 == 0 { 1 } else { -1 };
            assert_eq!(phi.descending_coeff(2 * k), BigInt::from(sign * c));
        }
    }

    #[test]
    fn pendant_families_match_reference() {
        for (n, l, att) in [
            (6, 4, vec![2, 0, 0, 0]),
            (9, 5, vec![1, 0, 2, 0, 1]),
            (10, 3, vec![3, 2, 2]),
        ] {
            let g = make_cycle_with_pendants(n, l, &att).unwrap();
            assert_eq!(charpoly(&g), charpoly_general_reference(&g).unwrap());
        }
    }

    #[test]
    fn lollipop_recurrence() {
        for n in 5..=30 {
            for t in 3..=n - 2 {
                let a = charpoly(&make_lollipop(n, t).unwrap());
                let b = charpoly(&make_lollipop(n - 1, t).unwrap());
                let c = charpoly(&make_lollipop(n - 2, t).unwrap());
                assert_eq!(a, IntPolynomial::x() * b - c, "n={n} t={t}");
            }
        }
    }

    #[test]
    fn memo_is_reused() {
        let mut memo = TreeMemo::new();
        let g = make_lollipop(14, 3).unwrap();
        let first = charpoly_with(&g, &mut memo);
        let size = memo.len();
        assert!(size > 0);
        assert_eq!(charpoly_with(&g, &mut memo), first);
        assert_eq!(memo.len(), size);
    }
}
