//! Simple undirected graphs on dense vertex ids `0..N`.

mod bipartite;
pub mod edgelist;
pub mod graph6;
mod random;

pub use bipartite::BipartiteApexGraph;
pub use random::random_graph;

use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::numeric::{nat, ExactRational};

/// Fixed-universe bitset of vertex ids.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    universe: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn empty(universe: usize) -> Self {
        VertexSet {
            universe,
            words: vec![0; universe.div_ceil(64)],
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = Self::empty(universe);
        for (i, w) in s.words.iter_mut().enumerate() {
            let lo = i * 64;
            let bits = (universe - lo).min(64);
            *w = if bits == 64 {
                u64::MAX
            } else {
                (1u64 << bits) - 1
            };
        }
        s
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < self.universe);
        self.words[v / 64] |= 1 << (v % 64);
    }

    pub fn remove(&mut self, v: usize) {
        self.words[v / 64] &= !(1 << (v % 64));
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.universe && self.words[v / 64] & (1 << (v % 64)) != 0
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= *b;
        }
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    /// Overwrite with `a ∩ b` without reallocating.
    pub(crate) fn assign_intersection(&mut self, a: &VertexSet, b: &VertexSet) {
        for ((w, x), y) in self.words.iter_mut().zip(&a.words).zip(&b.words) {
            *w = x & y;
        }
    }

    pub(crate) fn assign(&mut self, other: &VertexSet) {
        self.words.copy_from_slice(&other.words);
    }

    /// `|self ∩ other|` without materialising the intersection.
    pub fn intersection_len(&self, other: &VertexSet) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + b)
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Simple undirected graph: no loops, no multi-edges.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    rows: Vec<VertexSet>,
    edge_count: usize,
}

impl Graph {
    /// Graph on `n` vertices with the given edges. Repeated edges are merged.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n);
        for &(u, v) in edges {
            g.insert_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn empty(n: usize) -> Self {
        Graph {
            rows: vec![VertexSet::empty(n); n],
            edge_count: 0,
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge_unchecked(u, v);
            }
        }
        g
    }

    /// Path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Self {
        let mut g = Self::empty(n);
        for v in 1..n {
            g.add_edge_unchecked(v - 1, v);
        }
        g
    }

    /// Cycle `0 - 1 - ... - (n-1) - 0`, for `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let mut g = Self::path(n);
        g.add_edge_unchecked(n - 1, 0);
        g
    }

    /// Star `K_{1,k}` with center 0.
    pub fn star(k: usize) -> Self {
        let mut g = Self::empty(k + 1);
        for v in 1..=k {
            g.add_edge_unchecked(0, v);
        }
        g
    }

    /// `K_{a,b}` with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut g = Self::empty(a + b);
        for u in 0..a {
            for v in a..a + b {
                g.add_edge_unchecked(u, v);
            }
        }
        g
    }

    /// Vertex-disjoint union, with `other` relabelled after `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.vertex_count();
        let mut g = Self::empty(off + other.vertex_count());
        for (u, v) in self
            .edges()
            .chain(other.edges().map(|(u, v)| (u + off, v + off)))
        {
            g.add_edge_unchecked(u, v);
        }
        g
    }

    fn add_edge_unchecked(&mut self, u: usize, v: usize) {
        if !self.rows[u].contains(v) {
            self.rows[u].insert(v);
            self.rows[v].insert(u);
            self.edge_count += 1;
        }
    }

    pub(crate) fn insert_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.add_edge_unchecked(u, v);
        Ok(())
    }

    /// Copy of this graph with `{u, v}` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        let mut g = self.clone();
        g.insert_edge(u, v)?;
        Ok(g)
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(Error::InvalidVertex {
                vertex: v,
                vertex_count: self.vertex_count(),
            })
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.rows.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.rows.len() && self.rows[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].len()
    }

    /// Adjacency row of `v`. Panics if `v` is out of range.
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.rows[v]
    }

    pub fn neighborhood(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(self.rows[v].clone())
    }

    /// Vertices adjacent to every entry of `tuple`; the empty tuple yields
    /// every vertex. Only the set of distinct entries matters.
    pub fn common_neighborhood(&self, tuple: &[usize]) -> Result<VertexSet> {
        let mut acc = VertexSet::full(self.vertex_count());
        for &v in tuple {
            self.check_vertex(v)?;
            acc.intersect_with(&self.rows[v]);
        }
        Ok(acc)
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// `2E / N^2`, which equals the homomorphism density of a single edge.
    pub fn edge_density(&self) -> Result<ExactRational> {
        let n = self.vertex_count();
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        ExactRational::new(nat(2 * self.edge_count as u64), nat(n as u64) * n as u64)
    }

    /// Categorical product: `(a, b) ~ (c, d)` iff `a ~ c` in `self` and
    /// `b ~ d` in `other`. Vertex `(a, b)` is encoded as `a * |other| + b`.
    pub fn tensor_product(&self, other: &Graph) -> Graph {
        let nf = self.vertex_count();
        let ng = other.vertex_count();
        let mut g = Graph::empty(nf * ng);
        for a in 0..nf {
            for b in 0..ng {
                let x = a * ng + b;
                let row = &mut g.rows[x];
                for c in self.rows[a].iter() {
                    for d in other.rows[b].iter() {
                        row.insert(c * ng + d);
                    }
                }
            }
        }
        g.edge_count = 2 * self.edge_count * other.edge_count;
        g
    }

    /// `G^1 = G`, `G^r = G^(r-1) × G`.
    pub fn tensor_power(&self, r: usize) -> Result<Graph> {
        if r == 0 {
            return Err(Error::InvalidPower);
        }
        let mut acc = self.clone();
        for _ in 1..r {
            acc = acc.tensor_product(self);
        }
        Ok(acc)
    }

    /// Proper 2-colouring (colour of each vertex), if one exists. Each
    /// component's smallest vertex gets colour 0.
    pub fn two_coloring(&self) -> Option<Vec<u8>> {
        let n = self.vertex_count();
        let mut color: Vec<Option<u8>> = vec![None; n];
        let mut stack = Vec::new();
        for s in 0..n {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(0);
            stack.push(s);
            while let Some(u) = stack.pop() {
                let cu = color[u].unwrap();
                for w in self.rows[u].iter() {
                    match color[w] {
                        None => {
                            color[w] = Some(1 - cu);
                            stack.push(w);
                        }
                        Some(cw) if cw == cu => return None,
                        _ => {}
                    }
                }
            }
        }
        Some(color.into_iter().map(Option::unwrap).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_coloring().is_some()
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
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
                let u = comp[i];
                i += 1;
                for w in self.rows[u].iter() {
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

    pub fn is_regular(&self) -> bool {
        let mut degs = (0..self.vertex_count()).map(|v| self.degree(v));
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn has_no_edges(&self) -> bool {
        self.edge_count.is_zero()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Graph(n={}, edges={:?})",
            self.vertex_count(),
            self.edges().collect::<Vec<_>>()
        )
    }
}
