//! Backtracking homomorphism counter.
//!
//! Each connected component of the pattern is counted separately and the
//! results multiplied. Within a component, vertices are placed in a greedy
//! order (most already-placed neighbours first, ties to the smaller id), and
//! a vertex's candidates are the common neighbourhood of the images of its
//! placed neighbours. Vertices with no neighbour later in the order are
//! "terminal": once everything else is placed their choices are independent,
//! so they contribute the product of their candidate-set sizes instead of
//! being enumerated.

use num_traits::{One, Zero};

use crate::error::Result;
use crate::graph::{Graph, VertexSet};
use crate::limits::Limits;
use crate::numeric::BigNat;

struct ComponentPlan {
    /// Pattern vertex placed at each core depth.
    core: Vec<usize>,
    /// For each core depth, the earlier core depths it is adjacent to.
    back: Vec<Vec<usize>>,
    /// For each core depth, a forced image (rooted counting).
    pinned: Vec<Option<usize>>,
    /// For each terminal vertex, the core depths of its neighbours.
    terminals: Vec<Vec<usize>>,
    terminal_pins: Vec<Option<usize>>,
}

fn plan_component(h: &Graph, comp: &[usize], pins: &[Option<usize>]) -> ComponentPlan {
    let mut order = Vec::with_capacity(comp.len());
    let mut placed = vec![false; h.vertex_count()];
    while order.len() < comp.len() {
        // comp is sorted, so max_by_key's last-wins rule needs reversed iteration
        // to keep the smaller id on ties.
        let next = comp
            .iter()
            .rev()
            .copied()
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let placed_nbrs = h.neighbors(v).iter().filter(|&w| placed[w]).count();
                (pins[v].is_some(), placed_nbrs)
            })
            .expect("unplaced vertex remains");
        placed[next] = true;
        order.push(next);
    }

    let pos: Vec<Option<usize>> = {
        let mut p = vec![None; h.vertex_count()];
        for (i, &v) in order.iter().enumerate() {
            p[v] = Some(i);
        }
        p
    };
    let is_terminal: Vec<bool> = order
        .iter()
        .enumerate()
        .map(|(i, &v)| h.neighbors(v).iter().all(|w| pos[w].unwrap() < i))
        .collect();

    let mut core_depth = vec![usize::MAX; h.vertex_count()];
    let mut plan = ComponentPlan {
        core: Vec::new(),
        back: Vec::new(),
        pinned: Vec::new(),
        terminals: Vec::new(),
        terminal_pins: Vec::new(),
    };
    for (i, &v) in order.iter().enumerate() {
        if is_terminal[i] {
            continue;
        }
        core_depth[v] = plan.core.len();
        let back = h
            .neighbors(v)
            .iter()
            .filter(|&w| pos[w].unwrap() < i)
            .map(|w| core_depth[w])
            .collect();
        plan.core.push(v);
        plan.back.push(back);
        plan.pinned.push(pins[v]);
    }
    for (i, &v) in order.iter().enumerate() {
        if is_terminal[i] {
            // all neighbours of a terminal precede it and are core
            plan.terminals
                .push(h.neighbors(v).iter().map(|w| core_depth[w]).collect());
            plan.terminal_pins.push(pins[v]);
        }
    }
    plan
}

/// Sum of `u128` terms that spills into a [`BigNat`] on overflow.
struct Tally {
    small: u128,
    big: BigNat,
}

impl Tally {
    fn new() -> Self {
        Tally {
            small: 0,
            big: BigNat::zero(),
        }
    }

    fn add(&mut self, x: u128) {
        match self.small.checked_add(x) {
            Some(s) => self.small = s,
            None => {
                self.big += self.small;
                self.small = x;
            }
        }
    }

    fn add_big(&mut self, x: BigNat) {
        self.big += x;
    }

    fn total(self) -> BigNat {
        self.big + self.small
    }
}

struct Search<'a> {
    g: &'a Graph,
    plan: &'a ComponentPlan,
    images: Vec<usize>,
    buffers: Vec<Vec<usize>>,
    scratch: VertexSet,
    tally: Tally,
}

impl Search<'_> {
    fn candidates(&mut self, depth: usize) -> Vec<usize> {
        let mut buf = std::mem::take(&mut self.buffers[depth]);
        buf.clear();
        let back = &self.plan.back[depth];
        let n = self.g.vertex_count();
        if let Some(x) = self.plan.pinned[depth] {
            if back.iter().all(|&d| self.g.has_edge(self.images[d], x)) {
                buf.push(x);
            }
            return buf;
        }
        match back.as_slice() {
            [] => buf.extend(0..n),
            [d] => buf.extend(self.g.neighbors(self.images[*d]).iter()),
            [d, rest @ ..] => {
                self.scratch.assign(self.g.neighbors(self.images[*d]));
                for &e in rest {
                    self.scratch
                        .intersect_with(self.g.neighbors(self.images[e]));
                }
                buf.extend(self.scratch.iter());
            }
        }
        buf
    }

    fn terminal_choices(&mut self, t: usize) -> usize {
        let nbrs = &self.plan.terminals[t];
        if let Some(x) = self.plan.terminal_pins[t] {
            return nbrs.iter().all(|&d| self.g.has_edge(self.images[d], x)) as usize;
        }
        match nbrs.as_slice() {
            [] => self.g.vertex_count(),
            [d] => self.g.degree(self.images[*d]),
            [d, e] => self
                .g
                .neighbors(self.images[*d])
                .intersection_len(self.g.neighbors(self.images[*e])),
            [d, rest @ ..] => {
                self.scratch.assign(self.g.neighbors(self.images[*d]));
                for &e in rest {
                    self.scratch
                        .intersect_with(self.g.neighbors(self.images[e]));
                }
                self.scratch.len()
            }
        }
    }

    fn leaf(&mut self) {
        let mut prod: u128 = 1;
        for t in 0..self.plan.terminals.len() {
            let c = self.terminal_choices(t) as u128;
            if c == 0 {
                return;
            }
            match prod.checked_mul(c) {
                Some(p) => prod = p,
                None => {
                    let mut big = BigNat::from(prod) * c;
                    for u in t + 1..self.plan.terminals.len() {
                        big *= self.terminal_choices(u);
                    }
                    self.tally.add_big(big);
                    return;
                }
            }
        }
        self.tally.add(prod);
    }

    fn run(&mut self, depth: usize) {
        if depth == self.plan.core.len() {
            self.leaf();
            return;
        }
        let cands = self.candidates(depth);
        for &x in &cands {
            self.images[depth] = x;
            self.run(depth + 1);
        }
        self.buffers[depth] = cands;
    }
}

fn count_component(g: &Graph, plan: &ComponentPlan) -> BigNat {
    let depth = plan.core.len();
    let mut search = Search {
        g,
        plan,
        images: vec![0; depth],
        buffers: vec![Vec::new(); depth],
        scratch: VertexSet::empty(g.vertex_count()),
        tally: Tally::new(),
    };
    search.run(0);
    search.tally.total()
}

/// Homomorphisms `h -> g` that send each `(pattern_vertex, image)` in `pins`
/// to the given image.
pub(crate) fn count_with_pins(
    h: &Graph,
    g: &Graph,
    pins: &[(usize, usize)],
    limits: &Limits,
) -> Result<BigNat> {
    let mut pin_of = vec![None; h.vertex_count()];
    for &(v, x) in pins {
        h.check_vertex(v)?;
        g.check_vertex(x)?;
        pin_of[v] = Some(x);
    }
    let plans: Vec<ComponentPlan> = h
        .components()
        .iter()
        .map(|comp| plan_component(h, comp, &pin_of))
        .collect();
    for plan in &plans {
        let free = plan.pinned.iter().filter(|p| p.is_none()).count();
        limits.check_power(g.vertex_count(), free, "homomorphism search")?;
    }
    let mut total = BigNat::one();
    for plan in &plans {
        let c = count_component(g, plan);
        if c.is_zero() {
            return Ok(c);
        }
        total *= c;
    }
    Ok(total)
}
