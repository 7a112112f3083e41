//! Enumeration of bipartite graphs with an apex vertex.
//!
//! Labelling: `V1 = {0, .., n1-1}` with apex `0`, `V2 = {n1, .., n-1}`. The
//! apex is adjacent to all of `V2`; every other `w ∈ V1` gets an arbitrary
//! (possibly empty) neighbourhood in `V2`. Since permuting the non-apex
//! vertices of `V1` gives the same graph up to relabelling, their
//! neighbourhoods are emitted as a non-decreasing sequence of bitmasks, so
//! each multiset of neighbourhoods appears once. `V2` is not canonicalised.
//! Order: by `n`, then `n1`, then the mask sequence lexicographically.

use crate::error::{Error, Result};
use crate::graph::{BipartiteApexGraph, Graph};

pub const MAX_ENUMERATION_VERTICES: usize = 8;

pub fn enumerate_apex_bipartite(
    max_vertices: usize,
) -> Result<impl Iterator<Item = BipartiteApexGraph>> {
    if max_vertices > MAX_ENUMERATION_VERTICES {
        return Err(Error::InstanceTooLarge(format!(
            "apex enumeration is limited to {MAX_ENUMERATION_VERTICES} vertices, asked for {max_vertices}"
        )));
    }
    Ok((2..=max_vertices).flat_map(|n| {
        (1..n).flat_map(move |n1| {
            let n2 = n - n1;
            mask_multisets(n1 - 1, 1usize << n2)
                .into_iter()
                .map(move |masks| build(n1, n2, &masks))
        })
    }))
}

/// All non-decreasing sequences of length `len` over `0..alphabet`.
fn mask_multisets(len: usize, alphabet: usize) -> Vec<Vec<usize>> {
    fn rec(
        len: usize,
        alphabet: usize,
        start: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for m in start..alphabet {
            cur.push(m);
            rec(len, alphabet, m, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(len, alphabet, 0, &mut Vec::with_capacity(len), &mut out);
    out
}

fn build(n1: usize, n2: usize, masks: &[usize]) -> BipartiteApexGraph {
    let n = n1 + n2;
    let mut edges: Vec<(usize, usize)> = (n1..n).map(|x| (0, x)).collect();
    for (i, &mask) in masks.iter().enumerate() {
        let w = i + 1;
        edges.extend((0..n2).filter(|b| mask >> b & 1 == 1).map(|b| (w, n1 + b)));
    }
    let graph = Graph::new(n, &edges).expect("ids in range");
    BipartiteApexGraph::new(graph, (0..n1).collect(), (n1..n).collect(), 0)
        .expect("construction yields a valid apex graph")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::graph6::emit_graph6;

    fn all(max: usize) -> Vec<BipartiteApexGraph> {
        enumerate_apex_bipartite(max).unwrap().collect()
    }

    fn binom(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn small_cases() {
        let two = all(2);
        assert_eq!(two.len(), 1);
        assert_eq!(two[0].graph(), &Graph::complete(2));

        let three = all(3);
        assert!(three.iter().any(|h| h.graph() == &Graph::star(2)));

        let four = all(4);
        assert!(four
            .iter()
            .any(|h| h.graph() == &Graph::complete_bipartite(2, 2)));
        assert!(four.iter().all(|h| h.apex() == 0));
    }

    #[test]
    fn counts_match_multiset_formula() {
        for max in 2..=7 {
            let expected: usize = (2..=max)
                .flat_map(|n| (1..n).map(move |n1| (n1, n - n1)))
                .map(|(n1, n2)| binom((1 << n2) + n1 - 2, n1 - 1))
                .sum();
            assert_eq!(all(max).len(), expected, "max {max}");
        }
    }

    #[test]
    fn emitted_graphs_are_distinct_and_valid() {
        let gs = all(6);
        let mut seen = std::collections::HashSet::new();
        for h in &gs {
            assert!(h.part2().iter().all(|&x| h.graph().has_edge(h.apex(), x)));
            assert!(h.m() >= h.n2());
            assert!(seen.insert(emit_graph6(h.graph()).unwrap()));
        }
    }

    #[test]
    fn guard() {
        assert!(enumerate_apex_bipartite(8).is_ok());
        assert!(matches!(
            enumerate_apex_bipartite(9),
            Err(Error::InstanceTooLarge(_))
        ));
    }
}
