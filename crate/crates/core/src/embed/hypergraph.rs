use num_traits::Zero;
use serde::Serialize;

use crate::drc::{for_each_support, surjection_table, threshold};
use crate::error::{Error, Result};
use crate::graph::{BipartiteApexGraph, Graph, VertexSet};
use crate::numeric::{nat, BigNat, ExactRational};

/// Hypergraph on `0..vertex_count` whose edges form a multiset of vertex
/// sets, kept in construction order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SetHypergraph {
    vertex_count: usize,
    edges: Vec<Vec<usize>>,
}

impl SetHypergraph {
    /// Edges are sorted and deduplicated internally; duplicate edges are kept.
    pub fn new(vertex_count: usize, edges: Vec<Vec<usize>>) -> Result<Self> {
        let mut out = Vec::with_capacity(edges.len());
        for mut e in edges {
            e.sort_unstable();
            e.dedup();
            if let Some(&v) = e.iter().find(|&&v| v >= vertex_count) {
                return Err(Error::InvalidVertex {
                    vertex: v,
                    vertex_count,
                });
            }
            out.push(e);
        }
        Ok(SetHypergraph {
            vertex_count,
            edges: out,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }
}

/// Hypergraph on `V2` (re-indexed `0..n2` in `part2` order) with one edge
/// `N(w)` for each non-apex `w ∈ V1`, in `part1` order.
pub fn link_hypergraph(h: &BipartiteApexGraph) -> SetHypergraph {
    let index_in_v2 = |x: usize| {
        h.part2()
            .iter()
            .position(|&y| y == x)
            .expect("edges cross the parts")
    };
    let edges = h
        .part1()
        .iter()
        .filter(|&&w| w != h.apex())
        .map(|&w| h.graph().neighbors(w).iter().map(index_in_v2).collect())
        .collect();
    SetHypergraph::new(h.n2(), edges).expect("indices below n2")
}

/// Edge relation on tuples drawn from `N(anchor)`: a `k`-tuple is an edge
/// iff its common neighbourhood in `host` has at least `thresholds[k]`
/// vertices.
#[derive(Clone, Debug)]
pub struct ThresholdPredicate {
    host: Graph,
    anchor: usize,
    targets: Vec<usize>,
    thresholds: Vec<ExactRational>,
    ceils: Vec<usize>,
}

impl ThresholdPredicate {
    /// Thresholds `(2n)^(-n-1) p^k N` for `k = 0..=n`.
    pub fn new(host: &Graph, anchor: usize, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument(
                "pattern size n must be at least 1".into(),
            ));
        }
        if host.vertex_count() == 0 {
            return Err(Error::EmptyGraph);
        }
        let thresholds = (0..=n)
            .map(|k| threshold(n, host.vertex_count(), host.edge_count(), k))
            .collect();
        Self::with_thresholds(host, anchor, thresholds)
    }

    pub fn with_thresholds(
        host: &Graph,
        anchor: usize,
        thresholds: Vec<ExactRational>,
    ) -> Result<Self> {
        host.check_vertex(anchor)?;
        let ceils = thresholds
            .iter()
            .map(|t| usize::try_from(&t.ceil()).unwrap_or(usize::MAX))
            .collect();
        Ok(ThresholdPredicate {
            targets: host.neighbors(anchor).to_vec(),
            host: host.clone(),
            anchor,
            thresholds,
            ceils,
        })
    }

    pub fn host(&self) -> &Graph {
        &self.host
    }

    pub fn anchor(&self) -> usize {
        self.anchor
    }

    pub fn targets(&self) -> &[usize] {
        &self.targets
    }

    pub fn thresholds(&self) -> &[ExactRational] {
        &self.thresholds
    }

    /// Largest tuple length with a threshold.
    pub fn max_len(&self) -> usize {
        self.thresholds.len().saturating_sub(1)
    }

    pub(crate) fn accepts_common(&self, len: usize, common: usize) -> bool {
        common >= self.ceils[len]
    }

    /// Whether `tuple` (host vertex ids) is an edge.
    pub fn accepts(&self, tuple: &[usize]) -> Result<bool> {
        if tuple.len() > self.max_len() {
            return Err(Error::InvalidArgument(format!(
                "no threshold for tuples of length {}",
                tuple.len()
            )));
        }
        let common = self.host.common_neighborhood(tuple)?.len();
        Ok(self.accepts_common(tuple.len(), common))
    }

    /// Ordered `k`-tuples over the targets that are not edges.
    pub fn non_edge_count(&self, k: usize) -> Result<BigNat> {
        if k > self.max_len() {
            return Err(Error::InvalidArgument(format!(
                "no threshold for tuples of length {k}"
            )));
        }
        if k == 0 {
            let common = self.host.vertex_count();
            return Ok(nat(!self.accepts_common(0, common) as u32));
        }
        let surj = surjection_table(k);
        let mut total = BigNat::zero();
        for_each_support(&self.host, &self.targets, k, |j, common| {
            if !self.accepts_common(k, common.len()) {
                total += &surj[k][j];
            }
            true
        });
        Ok(total)
    }
}

/// Maps `V(hyp) -> targets` under which every edge's image tuple is accepted.
/// An edge `{a < b < ...}` is checked as the tuple `(g(a), g(b), ...)`; the
/// predicate only sees the support and the length, so the order is
/// immaterial, and repeated images keep the tuple length.
pub fn count_hyper_homs(hyp: &SetHypergraph, pred: &ThresholdPredicate) -> Result<BigNat> {
    if let Some(e) = hyp.edges().iter().find(|e| e.len() > pred.max_len()) {
        return Err(Error::InvalidArgument(format!(
            "edge of size {} exceeds the predicate's tuple lengths",
            e.len()
        )));
    }
    let v = hyp.vertex_count();
    // edges indexed by their largest vertex; empty edges checked once up front
    let mut closing: Vec<Vec<&[usize]>> = vec![Vec::new(); v];
    for e in hyp.edges() {
        match e.last() {
            Some(&last) => closing[last].push(e),
            None => {
                if !pred.accepts_common(0, pred.host().vertex_count()) {
                    return Ok(BigNat::zero());
                }
            }
        }
    }

    struct Walk<'a> {
        pred: &'a ThresholdPredicate,
        closing: Vec<Vec<&'a [usize]>>,
        images: Vec<usize>,
        scratch: VertexSet,
        count: u128,
        spill: BigNat,
    }
    impl Walk<'_> {
        fn closes_ok(&mut self, i: usize) -> bool {
            let host = self.pred.host();
            for e in &self.closing[i] {
                self.scratch.assign(host.neighbors(self.images[e[0]]));
                for &x in &e[1..] {
                    self.scratch.intersect_with(host.neighbors(self.images[x]));
                }
                if !self.pred.accepts_common(e.len(), self.scratch.len()) {
                    return false;
                }
            }
            true
        }

        fn run(&mut self, i: usize) {
            if i == self.images.len() {
                if self.count == u128::MAX {
                    self.spill += self.count;
                    self.count = 0;
                }
                self.count += 1;
                return;
            }
            for t in 0..self.pred.targets().len() {
                self.images[i] = self.pred.targets()[t];
                if self.closes_ok(i) {
                    self.run(i + 1);
                }
            }
        }
    }

    let mut walk = Walk {
        pred,
        closing,
        images: vec![0; v],
        scratch: VertexSet::empty(pred.host().vertex_count()),
        count: 0,
        spill: BigNat::zero(),
    };
    walk.run(0);
    Ok(walk.spill + walk.count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Pow;

    /// Independent count over every map, checking every edge through
    /// `accepts` (which recomputes common neighbourhoods from scratch).
    fn brute_force(hyp: &SetHypergraph, pred: &ThresholdPredicate) -> u64 {
        let t = pred.targets().len();
        let v = hyp.vertex_count();
        if v == 0 {
            return hyp.edges().iter().all(|e| {
                pred.accepts(&e.iter().map(|_| 0).collect::<Vec<_>>())
                    .unwrap()
            }) as u64;
        }
        if t == 0 {
            return 0;
        }
        let mut idx = vec![0usize; v];
        let mut count = 0;
        loop {
            let ok = hyp.edges().iter().all(|e| {
                let tuple: Vec<usize> = e.iter().map(|&x| pred.targets()[idx[x]]).collect();
                pred.accepts(&tuple).unwrap()
            });
            count += ok as u64;
            let mut i = 0;
            loop {
                if i == v {
                    return count;
                }
                idx[i] += 1;
                if idx[i] < t {
                    break;
                }
                idx[i] = 0;
                i += 1;
            }
        }
    }

    fn apex(g: Graph) -> BipartiteApexGraph {
        BipartiteApexGraph::from_graph(g).unwrap()
    }

    #[test]
    fn link_hypergraph_examples() {
        let k2 = link_hypergraph(&apex(Graph::complete(2)));
        assert_eq!((k2.vertex_count(), k2.edge_count()), (1, 0));

        let c4 = link_hypergraph(&apex(Graph::cycle(4)));
        assert_eq!(c4.vertex_count(), 2);
        assert_eq!(c4.edges(), &[vec![0, 1]]);

        // V1 = {u=0, w1=1, w2=2}, V2 = {a=3, b=4}, w1~a, w2~a
        let g = Graph::new(5, &[(0, 3), (0, 4), (1, 3), (2, 3)]).unwrap();
        let h = BipartiteApexGraph::new(g, vec![0, 1, 2], vec![3, 4], 0).unwrap();
        let hyp = link_hypergraph(&h);
        assert_eq!(hyp.edges(), &[vec![0], vec![0]]);
    }

    #[test]
    fn vacuous_and_accept_all() {
        let k4 = Graph::complete(4);
        let pred = ThresholdPredicate::new(&k4, 0, 3).unwrap();
        let t = pred.targets().len() as u32;
        let empty = SetHypergraph::new(3, vec![]).unwrap();
        assert_eq!(
            count_hyper_homs(&empty, &pred).unwrap(),
            nat(Pow::pow(t, 3u32))
        );

        let zero = vec![ExactRational::zero(); 4];
        let all = ThresholdPredicate::with_thresholds(&k4, 0, zero).unwrap();
        let hyp = SetHypergraph::new(3, vec![vec![0, 1], vec![1, 2], vec![0, 1, 2]]).unwrap();
        assert_eq!(count_hyper_homs(&hyp, &all).unwrap(), nat(27u32));
    }

    #[test]
    fn single_edge_on_k4_matches_brute_force() {
        let k4 = Graph::complete(4);
        let two = ExactRational::from_integer(nat(2u32));
        let pred = ThresholdPredicate::with_thresholds(&k4, 0, vec![two.clone(), two.clone(), two])
            .unwrap();
        let hyp = SetHypergraph::new(2, vec![vec![0, 1]]).unwrap();
        // targets {1,2,3}; a pair of distinct targets shares 2 neighbours, a
        // repeated target has 3, so every one of the 9 maps is accepted
        assert_eq!(
            count_hyper_homs(&hyp, &pred).unwrap(),
            nat(brute_force(&hyp, &pred))
        );
        assert_eq!(brute_force(&hyp, &pred), 9);

        let three = ExactRational::from_integer(nat(3u32));
        let pred =
            ThresholdPredicate::with_thresholds(&k4, 0, vec![three.clone(), three.clone(), three])
                .unwrap();
        assert_eq!(count_hyper_homs(&hyp, &pred).unwrap(), nat(3u32));
        assert_eq!(brute_force(&hyp, &pred), 3);
        assert_eq!(pred.non_edge_count(2).unwrap(), nat(6u32));
    }

    #[test]
    fn empty_edges_and_long_edges() {
        let k3 = Graph::complete(3);
        let too_high = vec![ExactRational::from_integer(nat(4u32)); 2];
        let pred = ThresholdPredicate::with_thresholds(&k3, 0, too_high).unwrap();
        let hyp = SetHypergraph::new(1, vec![vec![]]).unwrap();
        assert!(count_hyper_homs(&hyp, &pred).unwrap().is_zero());
        assert_eq!(pred.non_edge_count(0).unwrap(), nat(1u32));

        let long = SetHypergraph::new(3, vec![vec![0, 1, 2]]).unwrap();
        assert!(count_hyper_homs(&long, &pred).is_err());
        assert!(SetHypergraph::new(2, vec![vec![2]]).is_err());
    }
}
