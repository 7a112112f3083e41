//! Homomorphism counts `h_H(G)`, densities `t_H(G) = h_H(G) / N^|H|`, and the
//! Sidorenko comparison `t_H(G) >= t_K2(G)^m`.

mod backtrack;
mod enumerate;

pub use enumerate::{enumerate_apex_bipartite, MAX_ENUMERATION_VERTICES};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{BipartiteApexGraph, Graph};
use crate::limits::Limits;
use crate::numeric::{big_pow, nat, serialize_nat, BigNat, ExactRational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomCountResult {
    #[serde(serialize_with = "serialize_nat")]
    pub count: BigNat,
    pub h_vertices: usize,
    pub g_vertices: usize,
    #[serde(serialize_with = "serialize_nat")]
    pub density_num: BigNat,
    #[serde(serialize_with = "serialize_nat")]
    pub density_den: BigNat,
}

impl HomCountResult {
    pub fn density(&self) -> ExactRational {
        ExactRational::new(self.density_num.clone(), self.density_den.clone())
            .expect("N >= 1 so N^n > 0")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SidorenkoVerdict {
    pub holds: bool,
    /// `h_H(G) · N^(2m)`
    #[serde(serialize_with = "serialize_nat")]
    pub lhs: BigNat,
    /// `(2E)^m · N^n`
    #[serde(serialize_with = "serialize_nat")]
    pub rhs: BigNat,
    /// `t_H(G) / p^m` in lowest terms; `None` when `p = 0`.
    pub slack_ratio: Option<ExactRational>,
    /// Whether `H` has a vertex complete to the other part.
    pub apex_hypothesis: bool,
    pub m: usize,
    pub n: usize,
}

/// Counts by enumerating all `N^|H|` maps. Independent of the optimised
/// counter and used as its oracle.
pub fn count_homs_bruteforce(h: &Graph, g: &Graph, limits: &Limits) -> Result<BigNat> {
    let n = h.vertex_count();
    let big_n = g.vertex_count();
    limits.check_power(big_n, n, "brute-force enumeration")?;
    if n == 0 {
        return Ok(nat(1u32));
    }
    if big_n == 0 {
        return Ok(nat(0u32));
    }
    let edges: Vec<(usize, usize)> = h.edges().collect();
    let mut map = vec![0usize; n];
    let mut count: u64 = 0;
    loop {
        if edges.iter().all(|&(a, b)| g.has_edge(map[a], map[b])) {
            count += 1;
        }
        let mut i = 0;
        loop {
            if i == n {
                return Ok(nat(count));
            }
            map[i] += 1;
            if map[i] < big_n {
                break;
            }
            map[i] = 0;
            i += 1;
        }
    }
}

/// Exact `h_H(G)` by component-factorised backtracking.
pub fn count_homs(h: &Graph, g: &Graph, limits: &Limits) -> Result<BigNat> {
    backtrack::count_with_pins(h, g, &[], limits)
}

/// Homomorphisms that send each `(pattern_vertex, host_vertex)` pair as given.
pub fn count_homs_pinned(
    h: &Graph,
    g: &Graph,
    pins: &[(usize, usize)],
    limits: &Limits,
) -> Result<BigNat> {
    backtrack::count_with_pins(h, g, pins, limits)
}

pub fn hom_density(h: &Graph, g: &Graph, limits: &Limits) -> Result<HomCountResult> {
    if g.vertex_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    let count = count_homs(h, g, limits)?;
    let den = big_pow(&nat(g.vertex_count() as u64), h.vertex_count() as u32);
    Ok(HomCountResult {
        density_num: count.clone(),
        count,
        h_vertices: h.vertex_count(),
        g_vertices: g.vertex_count(),
        density_den: den,
    })
}

/// `h · N^(2m) >= (2E)^m · N^n`, i.e. `t_H(G) >= p^m`, in exact integers.
pub fn sidorenko_check(h: &Graph, g: &Graph, limits: &Limits) -> Result<SidorenkoVerdict> {
    if !h.is_bipartite() {
        return Err(Error::NotBipartite);
    }
    if g.vertex_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    let count = count_homs(h, g, limits)?;
    let m = h.edge_count();
    let n = h.vertex_count();
    let big_n = nat(g.vertex_count() as u64);
    let lhs = count * big_pow(&big_n, 2 * m as u32);
    let rhs = big_pow(&nat(2 * g.edge_count() as u64), m as u32) * big_pow(&big_n, n as u32);
    let slack_ratio = ExactRational::new(lhs.clone(), rhs.clone())
        .ok()
        .map(|r| r.reduced());
    Ok(SidorenkoVerdict {
        holds: lhs >= rhs,
        lhs,
        rhs,
        slack_ratio,
        apex_hypothesis: BipartiteApexGraph::from_graph(h.clone()).is_ok(),
        m,
        n,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;
    use proptest::prelude::*;

    fn lim() -> Limits {
        Limits::default()
    }

    fn both(h: &Graph, g: &Graph) -> (BigNat, BigNat) {
        (
            count_homs(h, g, &lim()).unwrap(),
            count_homs_bruteforce(h, g, &lim()).unwrap(),
        )
    }

    #[test]
    fn bruteforce_examples() {
        let k3 = Graph::complete(3);
        assert_eq!(
            count_homs_bruteforce(&Graph::complete(2), &k3, &lim()).unwrap(),
            nat(6u32)
        );
        assert_eq!(
            count_homs_bruteforce(&Graph::empty(1), &Graph::cycle(5), &lim()).unwrap(),
            nat(5u32)
        );
        assert_eq!(
            count_homs_bruteforce(&Graph::cycle(4), &Graph::complete(2), &lim()).unwrap(),
            nat(2u32)
        );
    }

    #[test]
    fn bruteforce_guard() {
        let tight = Limits::new(81).unwrap();
        assert!(count_homs_bruteforce(&Graph::path(4), &Graph::complete(3), &tight).is_ok());
        assert!(matches!(
            count_homs_bruteforce(&Graph::path(5), &Graph::complete(3), &tight),
            Err(Error::InstanceTooLarge(_))
        ));
    }

    #[test]
    fn optimised_examples() {
        let k3 = Graph::complete(3);
        assert_eq!(both(&Graph::path(3), &k3), (nat(12u32), nat(12u32)));
        assert_eq!(both(&Graph::cycle(4), &k3), (nat(18u32), nat(18u32)));
        let two_k2 = Graph::complete(2).disjoint_union(&Graph::complete(2));
        assert_eq!(both(&two_k2, &k3), (nat(36u32), nat(36u32)));
    }

    #[test]
    fn degenerate_hosts_and_patterns() {
        let e0 = Graph::empty(0);
        assert_eq!(count_homs(&e0, &e0, &lim()).unwrap(), nat(1u32));
        assert!(count_homs(&Graph::empty(2), &e0, &lim()).unwrap().is_zero());
        assert_eq!(
            count_homs(&Graph::empty(3), &Graph::complete(2), &lim()).unwrap(),
            nat(8u32)
        );
        // isolated pattern vertices contribute a factor N each
        let k2_plus = Graph::complete(2).disjoint_union(&Graph::empty(2));
        assert_eq!(
            count_homs(&k2_plus, &Graph::complete(3), &lim()).unwrap(),
            nat(54u32)
        );
    }

    #[test]
    fn density_examples() {
        let k3 = Graph::complete(3);
        let d = hom_density(&Graph::complete(2), &k3, &lim()).unwrap();
        assert_eq!(d.density(), ExactRational::ratio(2, 3).unwrap());
        let d = hom_density(&Graph::star(2), &k3, &lim()).unwrap();
        assert_eq!(
            (d.density_num.clone(), d.density_den.clone()),
            (nat(12u32), nat(27u32))
        );
        let d = hom_density(&Graph::cycle(4), &k3, &lim()).unwrap();
        assert_eq!(d.density(), ExactRational::ratio(18, 81).unwrap());
        assert_eq!(
            hom_density(&k3, &Graph::empty(0), &lim()).unwrap_err(),
            Error::EmptyGraph
        );
    }

    #[test]
    fn sidorenko_examples() {
        let k3 = Graph::complete(3);
        let v = sidorenko_check(&Graph::star(2), &k3, &lim()).unwrap();
        assert!(v.holds && v.apex_hypothesis);
        assert_eq!(v.slack_ratio.unwrap(), ExactRational::one());

        let v = sidorenko_check(&Graph::cycle(4), &k3, &lim()).unwrap();
        assert!(v.holds);
        assert_eq!(v.slack_ratio.unwrap().to_string(), "9/8");

        let v = sidorenko_check(&Graph::complete(2), &Graph::empty(5), &lim()).unwrap();
        assert!(v.holds);
        assert!(v.lhs.is_zero() && v.rhs.is_zero() && v.slack_ratio.is_none());

        assert_eq!(
            sidorenko_check(&k3, &k3, &lim()).unwrap_err(),
            Error::NotBipartite
        );
        // P6 is bipartite without an apex: checked, flagged as outside the hypothesis
        let v = sidorenko_check(&Graph::path(6), &k3, &lim()).unwrap();
        assert!(v.holds && !v.apex_hypothesis);
    }

    fn arb_graph(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
        (min_n..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(
                move |bits| {
                    let mut it = bits.into_iter();
                    let mut edges = Vec::new();
                    for v in 1..n {
                        for u in 0..v {
                            if it.next().unwrap() {
                                edges.push((u, v));
                            }
                        }
                    }
                    Graph::new(n, &edges).unwrap()
                },
            )
        })
    }

    proptest! {
        #[test]
        fn matches_bruteforce(h in arb_graph(0, 4), g in arb_graph(0, 5)) {
            let (fast, slow) = both(&h, &g);
            prop_assert_eq!(fast, slow);
        }

        #[test]
        fn edge_and_star_identities(g in arb_graph(1, 8), k in 1usize..=3) {
            prop_assert_eq!(count_homs(&Graph::complete(2), &g, &lim()).unwrap(), nat(2 * g.edge_count() as u64));
            let deg_pow: u64 = (0..g.vertex_count()).map(|v| (g.degree(v) as u64).pow(k as u32)).sum();
            prop_assert_eq!(count_homs(&Graph::star(k), &g, &lim()).unwrap(), nat(deg_pow));
            prop_assert_eq!(count_homs_bruteforce(&Graph::star(k), &g, &lim()).unwrap(), nat(deg_pow));
        }

        #[test]
        fn four_cycle_codegree_identity(g in arb_graph(1, 7)) {
            let n = g.vertex_count();
            let mut expected: u64 = 0;
            for u in 0..n {
                for v in 0..n {
                    let c = g.common_neighborhood(&[u, v]).unwrap().len() as u64;
                    expected += c * c;
                }
            }
            prop_assert_eq!(count_homs(&Graph::cycle(4), &g, &lim()).unwrap(), nat(expected));
        }

        #[test]
        fn density_in_unit_interval(h in arb_graph(0, 4), g in arb_graph(1, 6)) {
            let d = hom_density(&h, &g, &lim()).unwrap();
            prop_assert!(d.count <= d.density_den);
            if h.has_no_edges() {
                prop_assert_eq!(d.density(), ExactRational::one());
            }
        }

        #[test]
        fn adding_an_edge_never_decreases(h in arb_graph(1, 4), g in arb_graph(2, 6), a in 0usize..6, b in 0usize..6) {
            let n = g.vertex_count();
            let (a, b) = (a % n, b % n);
            prop_assume!(a != b);
            let g2 = g.with_edge(a, b).unwrap();
            prop_assert!(count_homs(&h, &g2, &lim()).unwrap() >= count_homs(&h, &g, &lim()).unwrap());
        }
    }
}
