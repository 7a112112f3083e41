use super::Graph;
use crate::error::{Error, Result};

/// Bipartite graph `H = (V1, V2, E)` together with an apex `u ∈ V1` that is
/// adjacent to every vertex of `V2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteApexGraph {
    graph: Graph,
    part1: Vec<usize>,
    part2: Vec<usize>,
    apex: usize,
}

impl BipartiteApexGraph {
    /// Validates the bipartition and the apex.
    pub fn new(graph: Graph, part1: Vec<usize>, part2: Vec<usize>, apex: usize) -> Result<Self> {
        let n = graph.vertex_count();
        let mut side = vec![None; n];
        for (s, part) in [(0u8, &part1), (1u8, &part2)] {
            for &v in part {
                graph.check_vertex(v)?;
                if side[v].replace(s).is_some() {
                    return Err(Error::InvalidArgument(format!("vertex {v} listed twice")));
                }
            }
        }
        if let Some(v) = side.iter().position(Option::is_none) {
            return Err(Error::InvalidArgument(format!(
                "vertex {v} in neither part"
            )));
        }
        if graph.edges().any(|(a, b)| side[a] == side[b]) {
            return Err(Error::NotBipartite);
        }
        if !part1.contains(&apex) {
            return Err(Error::InvalidHypothesis(format!(
                "apex {apex} is not in the first part"
            )));
        }
        if let Some(&x) = part2.iter().find(|&&x| !graph.has_edge(apex, x)) {
            return Err(Error::InvalidHypothesis(format!(
                "apex {apex} is not adjacent to {x}"
            )));
        }
        Ok(BipartiteApexGraph {
            graph,
            part1,
            part2,
            apex,
        })
    }

    /// Finds the smallest vertex `u` whose neighbourhood and non-neighbourhood
    /// are both independent; then `V2 = N(u)` and `V1` is the rest, each in
    /// ascending order.
    pub fn from_graph(graph: Graph) -> Result<Self> {
        if !graph.is_bipartite() {
            return Err(Error::NotBipartite);
        }
        let n = graph.vertex_count();
        for u in 0..n {
            let nbrs = graph.neighbors(u);
            let independent_split = graph
                .edges()
                .all(|(a, b)| nbrs.contains(a) != nbrs.contains(b));
            if independent_split {
                let part2 = nbrs.to_vec();
                let part1 = (0..n).filter(|v| !nbrs.contains(*v)).collect();
                return Self::new(graph, part1, part2, u);
            }
        }
        Err(Error::InvalidHypothesis(
            "no vertex is complete to the other part".into(),
        ))
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn part1(&self) -> &[usize] {
        &self.part1
    }

    pub fn part2(&self) -> &[usize] {
        &self.part2
    }

    pub fn apex(&self) -> usize {
        self.apex
    }

    pub fn n(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn m(&self) -> usize {
        self.graph.edge_count()
    }

    pub fn n1(&self) -> usize {
        self.part1.len()
    }

    pub fn n2(&self) -> usize {
        self.part2.len()
    }
}
