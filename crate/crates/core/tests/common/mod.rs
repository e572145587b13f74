use std::collections::HashMap;

/// Labeled brute force: every graph on `n` vertices with `n` edges whose
/// degrees do not increase with the label (each isomorphism class has such
/// a labeling), kept if connected, deduplicated by explicit isomorphism
/// tests within buckets of a degree invariant.
pub fn brute_force_count(n: usize) -> usize {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let mut reps: HashMap<Vec<(usize, Vec<usize>)>, Vec<Vec<Vec<bool>>>> = HashMap::new();
    let mut idx: Vec<usize> = (0..n).collect();
    loop {
        let mut deg = vec![0usize; n];
        for &k in &idx {
            let (a, b) = pairs[k];
            deg[a] += 1;
            deg[b] += 1;
        }
        if deg.windows(2).all(|w| w[0] >= w[1]) {
            let mut adj = vec![vec![false; n]; n];
            for &k in &idx {
                let (a, b) = pairs[k];
                adj[a][b] = true;
                adj[b][a] = true;
            }
            if connected(&adj) {
                let key = invariant(&adj);
                let bucket = reps.entry(key).or_default();
                if !bucket.iter().any(|r| isomorphic(r, &adj)) {
                    bucket.push(adj);
                }
            }
        }
        if !next_combination(&mut idx, pairs.len()) {
            break;
        }
    }
    reps.values().map(Vec::len).sum()
}

fn next_combination(idx: &mut [usize], m: usize) -> bool {
    let k = idx.len();
    for i in (0..k).rev() {
        if idx[i] < m - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

fn connected(adj: &[Vec<bool>]) -> bool {
    let n = adj.len();
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for w in 0..n {
            if adj[v][w] && !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

fn degree(adj: &[Vec<bool>], v: usize) -> usize {
    adj[v].iter().filter(|&&b| b).count()
}

fn invariant(adj: &[Vec<bool>]) -> Vec<(usize, Vec<usize>)> {
    let n = adj.len();
    let mut inv: Vec<(usize, Vec<usize>)> = (0..n)
        .map(|v| {
            let mut nd: Vec<usize> = (0..n).filter(|&w| adj[v][w]).map(|w| degree(adj, w)).collect();
            nd.sort_unstable();
            (degree(adj, v), nd)
        })
        .collect();
    inv.sort();
    inv
}

fn isomorphic(a: &[Vec<bool>], b: &[Vec<bool>]) -> bool {
    fn extend(a: &[Vec<bool>], b: &[Vec<bool>], map: &mut Vec<usize>, used: &mut [bool]) -> bool {
        let v = map.len();
        if v == a.len() {
            return true;
        }
        for w in 0..b.len() {
            if used[w] || degree(a, v) != degree(b, w) {
                continue;
            }
            if (0..v).any(|u| a[u][v] != b[map[u]][w]) {
                continue;
            }
            map.push(w);
            used[w] = true;
            if extend(a, b, map, used) {
                return true;
            }
            map.pop();
            used[w] = false;
        }
        false
    }
    extend(a, b, &mut Vec::new(), &mut vec![false; b.len()])
}
