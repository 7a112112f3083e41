//! Deterministic dependent-random-choice accounting.
//!
//! For a host graph with `N` vertices and `E` edges (`p = 2E/N^2`) and a
//! pattern size `n`, a `k`-tuple of vertices is *deficient* when its common
//! neighbourhood has at most `(2n)^(-n-1) p^k N` vertices. A vertex `v` is bad
//! for `k` when at least `|N(v)|^k / (2n)` of the `k`-tuples drawn from `N(v)`
//! (with repetition) are deficient, and good when it is bad for no
//! `k ∈ 1..=n`. The claim under audit: good vertices carry at least half the
//! degree sum, i.e. `Σ_{v good} deg v >= E`.
//!
//! Tuples are counted by grouping them on their support set: a set of size
//! `j` is the support of exactly `surj(k, j)` ordered `k`-tuples.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::numeric::{big_pow, nat, serialize_nat, BigNat, ExactRational};

#[derive(Clone, Debug, Serialize)]
pub struct DrcParams {
    pub n: usize,
    pub vertex_count: usize,
    pub edge_count: usize,
    /// `tuple_threshold(k)` for `k = 0..=n`.
    pub thresholds: Vec<ExactRational>,
    #[serde(skip)]
    floors: Vec<usize>,
    #[serde(skip)]
    ceils: Vec<usize>,
    #[serde(skip)]
    surjections: Vec<Vec<BigNat>>,
}

impl DrcParams {
    pub fn new(g: &Graph, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument(
                "pattern size n must be at least 1".into(),
            ));
        }
        if g.vertex_count() == 0 {
            return Err(Error::EmptyGraph);
        }
        let thresholds: Vec<ExactRational> = (0..=n)
            .map(|k| threshold(n, g.vertex_count(), g.edge_count(), k))
            .collect();
        Self::with_thresholds(g, n, thresholds)
    }

    /// Same accounting with caller-chosen thresholds (index `k = 0..=n`).
    /// With the default constants every threshold is below 1 until `N` is
    /// astronomically large, which makes deficiency vacuous on small hosts;
    /// this constructor exercises the bookkeeping at those sizes.
    pub fn with_thresholds(g: &Graph, n: usize, thresholds: Vec<ExactRational>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument(
                "pattern size n must be at least 1".into(),
            ));
        }
        if g.vertex_count() == 0 {
            return Err(Error::EmptyGraph);
        }
        if thresholds.len() != n + 1 {
            return Err(Error::InvalidArgument(format!(
                "expected {} thresholds, got {}",
                n + 1,
                thresholds.len()
            )));
        }
        let floors = thresholds.iter().map(|t| to_usize(&t.floor())).collect();
        let ceils = thresholds.iter().map(|t| to_usize(&t.ceil())).collect();
        Ok(DrcParams {
            n,
            vertex_count: g.vertex_count(),
            edge_count: g.edge_count(),
            thresholds,
            floors,
            ceils,
            surjections: surjection_table(n),
        })
    }

    /// `(2n)^(-n-1) p^k N`, held exactly as `(2E)^k N / ((2n)^(n+1) N^(2k))`.
    pub fn tuple_threshold(&self, k: usize) -> &ExactRational {
        &self.thresholds[k]
    }

    /// `1 / (2n)`
    pub fn badness_fraction(&self) -> ExactRational {
        ExactRational::ratio(1, 2 * self.n as u64).expect("n >= 1")
    }

    /// `|N(S)| <= tuple_threshold(k)`; exact because the left side is an integer.
    pub fn is_deficient(&self, k: usize, common: usize) -> bool {
        common <= self.floors[k]
    }

    /// `|N(S)| >= tuple_threshold(k)`.
    pub fn meets_threshold(&self, k: usize, common: usize) -> bool {
        common >= self.ceils[k]
    }

    /// Number of `k`-tuples whose support is a fixed `j`-set.
    pub fn surjections(&self, k: usize, j: usize) -> &BigNat {
        &self.surjections[k][j]
    }

    fn check_k(&self, k: usize) -> Result<()> {
        if k == 0 || k > self.n {
            return Err(Error::InvalidArgument(format!(
                "k = {k} outside 1..={}",
                self.n
            )));
        }
        Ok(())
    }
}

pub(crate) fn threshold(
    n: usize,
    vertex_count: usize,
    edge_count: usize,
    k: usize,
) -> ExactRational {
    let big_n = nat(vertex_count as u64);
    let num = big_pow(&nat(2 * edge_count as u64), k as u32) * &big_n;
    let den = big_pow(&nat(2 * n as u64), n as u32 + 1) * big_pow(&big_n, 2 * k as u32);
    ExactRational::new(num, den).expect("N >= 1")
}

fn to_usize(x: &BigNat) -> usize {
    usize::try_from(x).unwrap_or(usize::MAX)
}

/// `surj[k][j]` = number of maps from a `k`-set onto a `j`-set.
pub(crate) fn surjection_table(n: usize) -> Vec<Vec<BigNat>> {
    let mut t = vec![vec![BigNat::zero(); n + 1]; n + 1];
    t[0][0] = BigNat::one();
    for k in 1..=n {
        for j in 1..=k {
            t[k][j] = (&t[k - 1][j] + &t[k - 1][j - 1]) * j;
        }
    }
    t
}

/// Visits every nonempty subset of `pool` with at most `max_size` elements,
/// passing its size and common neighbourhood. Returning `false` from the
/// callback skips that subset's supersets.
pub(crate) fn for_each_support<F>(g: &Graph, pool: &[usize], max_size: usize, mut visit: F)
where
    F: FnMut(usize, &VertexSet) -> bool,
{
    fn rec<F: FnMut(usize, &VertexSet) -> bool>(
        g: &Graph,
        pool: &[usize],
        start: usize,
        depth: usize,
        max_size: usize,
        stack: &mut Vec<VertexSet>,
        visit: &mut F,
    ) {
        for i in start..pool.len() {
            let (lower, upper) = stack.split_at_mut(depth + 1);
            upper[0].assign_intersection(&lower[depth], g.neighbors(pool[i]));
            let descend = visit(depth + 1, &upper[0]);
            if descend && depth + 1 < max_size {
                rec(g, pool, i + 1, depth + 1, max_size, stack, visit);
            }
        }
    }
    let mut stack = vec![VertexSet::full(g.vertex_count()); max_size + 1];
    if max_size > 0 {
        rec(g, pool, 0, 0, max_size, &mut stack, &mut visit);
    }
}

/// Deficient `k`-tuple counts over `N(v)` for every `k` in `1..=n`
/// (index `k`; index 0 unused).
pub fn deficient_counts(g: &Graph, v: usize, params: &DrcParams) -> Result<Vec<BigNat>> {
    g.check_vertex(v)?;
    let n = params.n;
    let pool = g.neighbors(v).to_vec();
    let mut counts = vec![BigNat::zero(); n + 1];
    // v is a common neighbour of every tuple drawn from N(v)
    if params.floors[1..].iter().all(|&f| f == 0) {
        return Ok(counts);
    }
    for_each_support(g, &pool, n, |j, common| {
        let c = common.len();
        for (k, slot) in counts.iter_mut().enumerate().skip(j) {
            if params.is_deficient(k, c) {
                *slot += params.surjections(k, j);
            }
        }
        true
    });
    Ok(counts)
}

/// Ordered `k`-tuples (repetition allowed) over `N(v)` whose common
/// neighbourhood has at most `tuple_threshold(k)` vertices.
pub fn deficient_tuple_count(g: &Graph, v: usize, k: usize, params: &DrcParams) -> Result<BigNat> {
    params.check_k(k)?;
    Ok(deficient_counts(g, v, params)?.swap_remove(k))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KAudit {
    pub k: usize,
    #[serde(serialize_with = "serialize_nat")]
    pub deficient_count: BigNat,
    pub bad: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VertexAudit {
    pub vertex: usize,
    pub degree: usize,
    pub per_k: Vec<KAudit>,
    pub good: bool,
}

pub fn classify_vertex(g: &Graph, v: usize, params: &DrcParams) -> Result<VertexAudit> {
    let counts = deficient_counts(g, v, params)?;
    let degree = g.degree(v);
    let two_n = 2 * params.n as u64;
    let per_k: Vec<KAudit> = counts
        .into_iter()
        .enumerate()
        .skip(1)
        .map(|(k, deficient_count)| {
            // deficient >= d^k / (2n)
            let bad = &deficient_count * two_n >= big_pow(&nat(degree as u64), k as u32);
            KAudit {
                k,
                deficient_count,
                bad,
            }
        })
        .collect();
    Ok(VertexAudit {
        vertex: v,
        degree,
        good: per_k.iter().all(|a| !a.bad),
        per_k,
    })
}

/// Pairs `(v, S)` with `S` a deficient `k`-tuple of vertices of `G` and `v`
/// adjacent to all of `S`; computed as `Σ_S |N(S)|` over deficient `S`,
/// independently of the per-vertex counts.
pub fn count_xk(g: &Graph, k: usize, params: &DrcParams) -> Result<BigNat> {
    params.check_k(k)?;
    let pool: Vec<usize> = (0..g.vertex_count()).collect();
    let mut total = BigNat::zero();
    for_each_support(g, &pool, k, |j, common| {
        let c = common.len();
        if c > 0 && params.is_deficient(k, c) {
            total += params.surjections(k, j) * c;
        }
        // an empty common neighbourhood stays empty in every superset
        c > 0
    });
    Ok(total)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct XkCheck {
    pub k: usize,
    #[serde(serialize_with = "serialize_nat")]
    pub x_k: BigNat,
    /// `tuple_threshold(k) · N^k`
    pub upper: ExactRational,
    /// `x_k <= upper`
    pub upper_holds: bool,
    /// `Σ_v deficient_tuple_count(v, k)`; must equal `x_k`.
    #[serde(serialize_with = "serialize_nat")]
    pub x_k_by_vertex: BigNat,
    /// `x_k >= Σ_{v bad for k} deg(v)^k / (2n)`
    pub bad_mass_holds: bool,
    pub bad_degree_sum: usize,
    /// `(Σ_{v bad for k} deg v)^k · (2n)^n <= (pN^2)^k`
    pub bad_degree_power_holds: bool,
    /// `2n · Σ_{v bad for k} deg v <= pN^2`
    pub bad_degree_linear_holds: bool,
    pub holds: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct GoodstepReport {
    pub params: DrcParams,
    pub audits: Vec<VertexAudit>,
    #[serde(serialize_with = "serialize_nat")]
    pub good_degree_sum: BigNat,
    /// `pN^2 / 2`, which is exactly `E`.
    pub bound: ExactRational,
    pub holds: bool,
    pub xk_checks: Vec<XkCheck>,
}

impl GoodstepReport {
    /// True when any audited inequality fails. The inequalities are
    /// unconditional, so this signals a bug rather than a counterexample.
    pub fn lemma_violation(&self) -> bool {
        !self.holds || self.xk_checks.iter().any(|c| !c.holds)
    }

    pub fn good_vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.audits.iter().filter(|a| a.good).map(|a| a.vertex)
    }
}

/// Classifies every vertex, in vertex order.
pub fn audit_vertices(g: &Graph, params: &DrcParams) -> Result<Vec<VertexAudit>> {
    (0..g.vertex_count())
        .map(|v| classify_vertex(g, v, params))
        .collect()
}

pub fn verify_goodstep(g: &Graph, n: usize) -> Result<GoodstepReport> {
    let params = DrcParams::new(g, n)?;
    let audits = audit_vertices(g, &params)?;
    let good_degree_sum: BigNat = audits
        .iter()
        .filter(|a| a.good)
        .map(|a| nat(a.degree as u64))
        .sum();
    let edges = nat(g.edge_count() as u64);
    let holds = good_degree_sum >= edges;

    let big_n = nat(g.vertex_count() as u64);
    let two_e = nat(2 * g.edge_count() as u64);
    let two_n = nat(2 * n as u64);
    let mut xk_checks = Vec::with_capacity(n);
    for k in 1..=n {
        let x_k = count_xk(g, k, &params)?;
        let upper =
            params.tuple_threshold(k) * &ExactRational::from_integer(big_pow(&big_n, k as u32));
        let upper_holds = upper.ge_integer(&x_k);
        let x_k_by_vertex: BigNat = audits.iter().map(|a| &a.per_k[k - 1].deficient_count).sum();

        let bad: Vec<&VertexAudit> = audits.iter().filter(|a| a.per_k[k - 1].bad).collect();
        let bad_mass: BigNat = bad
            .iter()
            .map(|a| big_pow(&nat(a.degree as u64), k as u32))
            .sum();
        let bad_mass_holds = &x_k * &two_n >= bad_mass;
        let bad_degree_sum: usize = bad.iter().map(|a| a.degree).sum();
        let sum = nat(bad_degree_sum as u64);
        let bad_degree_power_holds =
            big_pow(&sum, k as u32) * big_pow(&two_n, n as u32) <= big_pow(&two_e, k as u32);
        let bad_degree_linear_holds = &sum * &two_n <= two_e;

        let holds = upper_holds
            && x_k == x_k_by_vertex
            && bad_mass_holds
            && bad_degree_power_holds
            && bad_degree_linear_holds;
        xk_checks.push(XkCheck {
            k,
            x_k,
            upper,
            upper_holds,
            x_k_by_vertex,
            bad_mass_holds,
            bad_degree_sum,
            bad_degree_power_holds,
            bad_degree_linear_holds,
            holds,
        });
    }

    Ok(GoodstepReport {
        params,
        audits,
        good_degree_sum,
        bound: ExactRational::from_integer(edges),
        holds,
        xk_checks,
    })
}
