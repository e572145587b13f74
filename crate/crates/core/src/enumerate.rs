//! Connected unicyclic graphs up to isomorphism, and the exhaustive
//! maximal-energy search over them.
//!
//! A unicyclic graph is its cycle plus one rooted tree hanging from each
//! cycle vertex. Two graphs are isomorphic exactly when their tree sequences
//! agree up to rotation and reflection of the cycle, so the code of a graph
//! is the smallest such sequence. Trees compare in decreasing canonical
//! order, which puts the largest tree first: the lollipop `P_n^l` has code
//! `[path, single, single, ...]` and realizes with the same labels as
//! [`make_lollipop`](crate::graph::make_lollipop).

use std::cmp::Ordering;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::charpoly::charpoly;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poly::IntPolynomial;
use crate::roots::{energy_of_poly, EnergyValue};
use crate::trees::{rooted_trees, LevelSequence};

/// Largest order accepted by the generator.
pub const MAX_ORDER: usize = 18;

/// Enclosure radius that overlapping candidates are refined to.
pub const TIE_RADIUS: f64 = 1e-12;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UnicyclicCode {
    pub cycle: Vec<LevelSequence>,
}

fn tree_cmp(a: &LevelSequence, b: &LevelSequence) -> Ordering {
    b.cmp(a)
}

fn seq_cmp(a: &[LevelSequence], b: &[LevelSequence]) -> Ordering {
    a.iter()
        .zip(b)
        .map(|(x, y)| tree_cmp(x, y))
        .find(|o| o.is_ne())
        .unwrap_or_else(|| a.len().cmp(&b.len()))
}

impl Ord for UnicyclicCode {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cycle_len()
            .cmp(&other.cycle_len())
            .then_with(|| seq_cmp(&self.cycle, &other.cycle))
    }
}

impl PartialOrd for UnicyclicCode {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// True when no rotation or reflection of `seq` is smaller.
fn is_normal(seq: &[LevelSequence]) -> bool {
    let l = seq.len();
    for start in 0..l {
        for dir in [1isize, -1] {
            if start == 0 && dir == 1 {
                continue;
            }
            let at = |i: usize| &seq[(start as isize + dir * i as isize).rem_euclid(l as isize) as usize];
            for i in 0..l {
                match tree_cmp(at(i), &seq[i]) {
                    Ordering::Less => return false,
                    Ordering::Greater => break,
                    Ordering::Equal => {}
                }
            }
        }
    }
    true
}

impl UnicyclicCode {
    /// Normalizes an arbitrary tree sequence around a cycle.
    pub fn new(mut cycle: Vec<LevelSequence>) -> Result<Self> {
        if cycle.len() < 3 || cycle.iter().any(|t| t.is_empty()) {
            return Err(Error::InvalidParameters("a unicyclic code needs at least 3 nonempty trees".into()));
        }
        let l = cycle.len();
        let mut best = cycle.clone();
        for start in 0..l {
            for dir in [1isize, -1] {
                let cand: Vec<LevelSequence> = (0..l)
                    .map(|i| cycle[(start as isize + dir * i as isize).rem_euclid(l as isize) as usize].clone())
                    .collect();
                if seq_cmp(&cand, &best).is_lt() {
                    best = cand;
                }
            }
        }
        cycle = best;
        Ok(UnicyclicCode { cycle })
    }

    pub fn cycle_len(&self) -> usize {
        self.cycle.len()
    }

    pub fn order(&self) -> usize {
        self.cycle.iter().map(LevelSequence::len).sum()
    }

    /// Cycle vertices `0..l`, then each tree's non-root vertices in preorder,
    /// tree by tree.
    pub fn realize(&self) -> Graph {
        let l = self.cycle_len();
        let mut edges: Vec<(usize, usize)> = (0..l).map(|i| (i, (i + 1) % l)).collect();
        let mut next = l;
        for (i, tree) in self.cycle.iter().enumerate() {
            let base = next;
            for (j, parent) in tree.parents().into_iter().enumerate().skip(1) {
                let p = parent.expect("non-root vertices have parents");
                let pu = if p == 0 { i } else { base + p - 1 };
                edges.push((pu, base + j - 1));
            }
            next += tree.len() - 1;
        }
        Graph::from_edges(next, edges).expect("realized code is a simple graph")
    }

    /// `C:n`, `L:n:l`, `CP:n:l:a0,a1,...` when the graph belongs to one of
    /// those families, otherwise `U:l:` followed by the tree codes.
    pub fn family_name(&self) -> String {
        let (n, l) = (self.order(), self.cycle_len());
        let nontrivial: Vec<&LevelSequence> = self.cycle.iter().filter(|t| !t.is_trivial()).collect();
        if nontrivial.is_empty() {
            return format!("C:{n}");
        }
        if nontrivial.len() == 1 && nontrivial[0].is_rooted_path() {
            return format!("L:{n}:{l}");
        }
        if self.cycle.iter().all(LevelSequence::is_rooted_star) {
            let counts: Vec<String> = self.cycle.iter().map(|t| (t.len() - 1).to_string()).collect();
            return format!("CP:{n}:{l}:{}", counts.join(","));
        }
        let trees: Vec<String> = self.cycle.iter().map(|t| t.to_string()).collect();
        format!("U:{l}:{}", trees.join("|"))
    }
}

impl fmt::Display for UnicyclicCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.family_name())
    }
}

impl fmt::Debug for UnicyclicCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UnicyclicCode({self})")
    }
}

impl Serialize for UnicyclicCode {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.family_name())
    }
}

fn check_order(n: usize) -> Result<()> {
    if n < 3 {
        return Err(Error::InvalidOrder {
            n,
            reason: "a unicyclic graph needs at least 3 vertices",
        });
    }
    if n > MAX_ORDER {
        return Err(Error::UnsupportedSize { n, limit: MAX_ORDER });
    }
    Ok(())
}

/// Every code on `n` vertices, sorted.
pub fn unicyclic_codes(n: usize) -> Result<Vec<UnicyclicCode>> {
    check_order(n)?;
    let trees: Vec<Vec<LevelSequence>> = (0..=n - 2).map(rooted_trees).collect();
    let mut out = Vec::new();
    for l in 3..=n {
        let mut seq = Vec::with_capacity(l);
        fill(l, n - l, &trees, &mut seq, &mut out);
    }
    out.sort();
    Ok(out)
}

/// Extends `seq` to length `l` using exactly `extra` non-root vertices,
/// keeping only normal forms.
fn fill(
    l: usize,
    extra: usize,
    trees: &[Vec<LevelSequence>],
    seq: &mut Vec<LevelSequence>,
    out: &mut Vec<UnicyclicCode>,
) {
    if seq.len() == l {
        if extra == 0 && is_normal(seq) {
            out.push(UnicyclicCode { cycle: seq.clone() });
        }
        return;
    }
    let last = seq.len() + 1 == l;
    let sizes = if last { extra..=extra } else { 0..=extra };
    for k in sizes {
        for t in &trees[k + 1] {
            // the first tree is the largest in a normal form
            if let Some(first) = seq.first() {
                if tree_cmp(t, first).is_lt() {
                    continue;
                }
            }
            seq.push(t.clone());
            fill(l, extra - k, trees, seq, out);
            seq.pop();
        }
    }
}

/// Every connected unicyclic graph on `n` vertices exactly once up to
/// isomorphism, in code order.
pub fn unicyclic_graphs(n: usize) -> Result<impl Iterator<Item = (UnicyclicCode, Graph)>> {
    Ok(unicyclic_codes(n)?.into_iter().map(|c| {
        let g = c.realize();
        (c, g)
    }))
}

pub fn count_unicyclic(n: usize) -> Result<usize> {
    Ok(unicyclic_codes(n)?.len())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Tie {
    /// Enclosures still overlap at the refinement radius.
    Unresolved,
    /// Equal characteristic polynomials: the energies are equal.
    Cospectral,
}

#[derive(Clone, Debug, Serialize)]
pub struct RankedGraph {
    pub rank: usize,
    pub code: UnicyclicCode,
    pub energy: EnergyValue,
    /// Set when this entry cannot be ordered against the next one.
    pub tie_with_next: Option<Tie>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchResult {
    pub n: usize,
    pub examined: usize,
    pub ranked: Vec<RankedGraph>,
}

impl SearchResult {
    pub fn winner(&self) -> &RankedGraph {
        &self.ranked[0]
    }
}

struct Scored {
    code: UnicyclicCode,
    poly: IntPolynomial,
    energy: EnergyValue,
}

fn by_energy(a: &Scored, b: &Scored) -> Ordering {
    b.energy
        .value
        .total_cmp(&a.energy.value)
        .then_with(|| a.code.cmp(&b.code))
}

/// The `top_k` unicyclic graphs on `n` vertices by energy.
///
/// Everything whose enclosure reaches the `top_k`-th lower bound is refined
/// to [`TIE_RADIUS`] before the final ordering, so the ranking never hinges
/// on overlapping enclosures. Parallel over graphs; results are identical
/// to a serial run.
pub fn max_energy_search(n: usize, top_k: usize, tol: f64) -> Result<SearchResult> {
    if top_k == 0 {
        return Err(Error::InvalidParameters("top-k must be at least 1".into()));
    }
    let codes = unicyclic_codes(n)?;
    let mut scored: Vec<Scored> = codes
        .into_par_iter()
        .map(|code| -> Result<Scored> {
            let poly = charpoly(&code.realize());
            let energy = energy_of_poly(&poly, tol)?;
            Ok(Scored { code, poly, energy })
        })
        .collect::<Result<_>>()?;
    let examined = scored.len();
    scored.sort_by(by_energy);

    let k = top_k.min(examined);
    let floor = scored[k - 1].energy.value - scored[k - 1].energy.radius;
    let cut = scored
        .iter()
        .rposition(|s| s.energy.value + s.energy.radius >= floor)
        .map_or(k, |i| i + 1)
        .max(k);
    let mut head: Vec<Scored> = scored.drain(..cut).collect();
    head.par_iter_mut().try_for_each(|s| -> Result<()> {
        if s.energy.radius > TIE_RADIUS {
            // Float rounding can keep the radius just above the target; the
            // enclosure is still valid and any overlap left is flagged below.
            s.energy = match energy_of_poly(&s.poly, TIE_RADIUS) {
                Ok(e) => e,
                Err(Error::Convergence { estimate, error, .. })
                    if estimate.is_finite() && error < s.energy.radius =>
                {
                    EnergyValue { value: estimate, radius: error }
                }
                Err(e) => return Err(e),
            };
        }
        Ok(())
    })?;
    head.sort_by(by_energy);
    head.truncate(k);

    let ranked = head
        .iter()
        .enumerate()
        .map(|(i, s)| {
            let tie_with_next = head.get(i + 1).and_then(|t| {
                if t.poly == s.poly {
                    Some(Tie::Cospectral)
                } else if t.energy.overlaps(&s.energy) {
                    Some(Tie::Unresolved)
                } else {
                    None
                }
            });
            RankedGraph {
                rank: i + 1,
                code: s.code.clone(),
                energy: s.energy,
                tie_with_next,
            }
        })
        .collect();
    Ok(SearchResult { n, examined, ranked })
}
