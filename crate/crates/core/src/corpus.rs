//! Test-instance corpora: every graph on a few vertices (one per
//! isomorphism class, or every labelled graph) and seeded random graphs.

use crate::error::{Error, Result};
use crate::graph::{random_graph, Graph};
use crate::numeric::ExactRational;

/// Largest order for which [`all_graphs`] is offered; the next order would
/// mean two million graphs times 5040 relabellings.
pub const MAX_ISO_CORPUS_VERTICES: usize = 6;
pub const MAX_LABELLED_CORPUS_VERTICES: usize = 6;

fn pair_index(n: usize) -> Vec<Vec<usize>> {
    // graph6 column order: (0,1), (0,2), (1,2), (0,3), ...
    (0..n)
        .map(|a| {
            (0..n)
                .map(|b| match a.cmp(&b) {
                    std::cmp::Ordering::Less => b * (b - 1) / 2 + a,
                    std::cmp::Ordering::Greater => a * (a - 1) / 2 + b,
                    std::cmp::Ordering::Equal => usize::MAX,
                })
                .collect()
        })
        .collect()
}

fn from_mask(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if mask >> k & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::new(n, &edges).expect("ids in range")
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                rec(cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// One graph per isomorphism class on exactly `n` vertices: each class is
/// represented by its labelling with the smallest edge bitmask (bits in
/// graph6 order). Output is sorted by that bitmask.
pub fn all_graphs(n: usize) -> Result<Vec<Graph>> {
    if n > MAX_ISO_CORPUS_VERTICES {
        return Err(Error::InstanceTooLarge(format!(
            "isomorphism-class corpus is limited to {MAX_ISO_CORPUS_VERTICES} vertices"
        )));
    }
    let pairs = n * n.saturating_sub(1) / 2;
    let idx = pair_index(n);
    // for each relabelling, where each pair bit moves to
    let moves: Vec<Vec<usize>> = permutations(n)
        .into_iter()
        .map(|perm| {
            let mut mv = Vec::with_capacity(pairs);
            for j in 1..n {
                for i in 0..j {
                    mv.push(idx[perm[i]][perm[j]]);
                }
            }
            mv
        })
        .collect();

    let mut out = Vec::new();
    'masks: for mask in 0u64..1 << pairs {
        for mv in &moves {
            let mut image = 0u64;
            for (k, &to) in mv.iter().enumerate() {
                image |= (mask >> k & 1) << to;
            }
            if image < mask {
                continue 'masks;
            }
        }
        out.push(from_mask(n, mask));
    }
    Ok(out)
}

/// Every labelled graph on exactly `n` vertices, ordered by edge bitmask.
pub fn all_labelled_graphs(n: usize) -> Result<Vec<Graph>> {
    if n > MAX_LABELLED_CORPUS_VERTICES {
        return Err(Error::InstanceTooLarge(format!(
            "labelled corpus is limited to {MAX_LABELLED_CORPUS_VERTICES} vertices"
        )));
    }
    let pairs = n * n.saturating_sub(1) / 2;
    Ok((0u64..1 << pairs).map(|mask| from_mask(n, mask)).collect())
}

/// Seeded random corpus. Graph `i` (0-based) has
/// `min_n + i mod (max_n - min_n + 1)` vertices and is
/// `random_graph(N, p, seed + i)` (wrapping add).
pub fn random_corpus(
    count: usize,
    min_n: usize,
    max_n: usize,
    p: &ExactRational,
    seed: u64,
) -> Result<Vec<Graph>> {
    if min_n > max_n {
        return Err(Error::InvalidArgument(format!(
            "empty size range {min_n}..={max_n}"
        )));
    }
    let span = max_n - min_n + 1;
    (0..count)
        .map(|i| random_graph(min_n + i % span, p, seed.wrapping_add(i as u64)))
        .collect()
}
