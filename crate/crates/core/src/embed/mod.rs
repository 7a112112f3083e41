//! Verifiers for the embedding bounds: the union-bound hypergraph embedding,
//! the apex lower bound `h_H(G) >= (2n)^(-n^2) p^m N^n`, multiplicativity of
//! homomorphism counts over tensor products, and the tensor-power
//! amplification that turns the apex bound into `t_H(G) >= p^m`.
//!
//! Verifiers return a [`LemmaReport`] instead of asserting, so callers can log
//! a violation together with its instance.

mod hypergraph;

pub use hypergraph::{count_hyper_homs, link_hypergraph, SetHypergraph, ThresholdPredicate};

use std::collections::BTreeMap;
use std::fmt;

use num_traits::One;
use serde::Serialize;

use crate::drc::{audit_vertices, DrcParams};
use crate::error::{Error, Result};
use crate::graph::{BipartiteApexGraph, Graph};
use crate::hom::{count_homs, count_homs_pinned, sidorenko_check};
use crate::limits::Limits;
use crate::numeric::{big_pow, nat, serialize_nat, BigNat, ExactRational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LemmaId {
    Randomembed,
    Importantstep,
    Tensor,
    MainTheorem,
}

impl fmt::Display for LemmaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LemmaId::Randomembed => "randomembed",
            LemmaId::Importantstep => "importantstep",
            LemmaId::Tensor => "tensor",
            LemmaId::MainTheorem => "main-theorem",
        })
    }
}

/// Outcome of one verifier. The conclusion is `lhs >= rhs_num / rhs_den`
/// (equality for [`LemmaId::Tensor`]).
#[derive(Clone, Debug, Serialize)]
pub struct LemmaReport {
    pub which: LemmaId,
    pub hypothesis_satisfied: bool,
    pub conclusion_holds: bool,
    #[serde(serialize_with = "serialize_nat")]
    pub lhs: BigNat,
    #[serde(serialize_with = "serialize_nat")]
    pub rhs_num: BigNat,
    #[serde(serialize_with = "serialize_nat")]
    pub rhs_den: BigNat,
    pub details: BTreeMap<String, String>,
    /// Failed internal consistency checks.
    pub violations: Vec<String>,
    pub sub_reports: Vec<LemmaReport>,
}

impl LemmaReport {
    fn new(which: LemmaId, lhs: BigNat, rhs_num: BigNat, rhs_den: BigNat) -> Self {
        LemmaReport {
            which,
            hypothesis_satisfied: true,
            conclusion_holds: false,
            lhs,
            rhs_num,
            rhs_den,
            details: BTreeMap::new(),
            violations: Vec::new(),
            sub_reports: Vec::new(),
        }
    }

    fn detail(&mut self, key: &str, value: impl ToString) {
        self.details.insert(key.to_string(), value.to_string());
    }

    /// A satisfied hypothesis with a failed conclusion, or any failed
    /// internal check, here or in a sub-report.
    pub fn lemma_violation(&self) -> bool {
        (self.hypothesis_satisfied && !self.conclusion_holds)
            || !self.violations.is_empty()
            || self.sub_reports.iter().any(LemmaReport::lemma_violation)
    }

    /// `rhs_num / rhs_den`.
    pub fn rhs(&self) -> ExactRational {
        ExactRational::new(self.rhs_num.clone(), self.rhs_den.clone()).expect("nonzero denominator")
    }
}

/// Checks the union-bound embedding: if for every `k ∈ 1..=v` at most
/// `T^k / (2e)` of the `k`-tuples over the `T` targets are non-edges, then at
/// least `T^v / 2` maps are homomorphisms.
pub fn verify_randomembed(
    hyp: &SetHypergraph,
    pred: &ThresholdPredicate,
    e_bound: usize,
) -> Result<LemmaReport> {
    if e_bound == 0 {
        return Err(Error::InvalidArgument(
            "edge bound must be at least 1".into(),
        ));
    }
    if e_bound < hyp.edge_count() {
        return Err(Error::InvalidArgument(format!(
            "edge bound {e_bound} is below the edge count {}",
            hyp.edge_count()
        )));
    }
    let v = hyp.vertex_count();
    if v > pred.max_len() {
        return Err(Error::InvalidArgument(format!(
            "predicate has no threshold for {v}-tuples"
        )));
    }
    let t = nat(pred.targets().len() as u64);
    let count = count_hyper_homs(hyp, pred)?;
    let t_pow_v = big_pow(&t, v as u32);

    let mut report = LemmaReport::new(LemmaId::Randomembed, count, t_pow_v, nat(2u32));
    let two_e = nat(2 * e_bound as u64);
    for k in 1..=v {
        let non_edges = pred.non_edge_count(k)?;
        let ok = &non_edges * &two_e <= big_pow(&t, k as u32);
        report.detail(&format!("non_edges_k{k}"), &non_edges);
        report.hypothesis_satisfied &= ok;
    }
    report.conclusion_holds = &report.lhs * 2u32 >= report.rhs_num;
    report.detail("anchor", pred.anchor());
    report.detail("targets", pred.targets().len());
    report.detail("hyper_vertices", v);
    report.detail("hyper_edges", hyp.edge_count());
    report.detail("e_bound", e_bound);
    Ok(report)
}

/// Per-anchor result of the embedding argument.
struct AnchorOutcome {
    report: LemmaReport,
    /// `½ |N(v)|^n2 · Π_w threshold(|N(w)|)`
    chain_term: ExactRational,
}

fn anchor_outcome(
    h: &BipartiteApexGraph,
    g: &Graph,
    hyp: &SetHypergraph,
    anchor: usize,
    limits: &Limits,
) -> Result<AnchorOutcome> {
    let n = h.n();
    let pred = ThresholdPredicate::new(g, anchor, n)?;
    let mut report = verify_randomembed(hyp, &pred, n)?;
    if !report.hypothesis_satisfied {
        report
            .violations
            .push(format!("good anchor {anchor} fails the non-edge bound"));
    }

    // each hypergraph homomorphism extends in at least Π_w threshold(|N(w)|) ways
    let product = hyp.edges().iter().fold(ExactRational::one(), |acc, e| {
        &acc * &pred.thresholds()[e.len()]
    });
    let rooted = count_homs_pinned(h.graph(), g, &[(h.apex(), anchor)], limits)?;
    let extension_bound = &ExactRational::from_integer(report.lhs.clone()) * &product;
    let anchor_bound_holds = extension_bound.le_integer(&rooted);
    if !anchor_bound_holds {
        report.violations.push(format!(
            "rooted count {rooted} at anchor {anchor} is below {extension_bound}"
        ));
    }
    report.detail("rooted_homs", &rooted);
    report.detail("extension_bound_approx", extension_bound.to_f64_approx());
    report.detail("anchor_bound_holds", anchor_bound_holds);

    let half_t_pow = ExactRational::new(report.rhs_num.clone(), nat(2u32)).expect("2 > 0");
    Ok(AnchorOutcome {
        report,
        chain_term: &half_t_pow * &product,
    })
}

/// `h_H(G) · (2n)^(n^2) · N^(2m) >= (2E)^m · N^n`, plus the per-anchor
/// embedding diagnostics over every good vertex of `G`.
///
/// The link hypergraph is taken over `V1 \ {u}` and the non-edge bound over
/// the anchor's own neighbourhood, `|N(v)|^k / (2n)`, with edge bound `e = n`.
pub fn verify_importantstep(
    h: &BipartiteApexGraph,
    g: &Graph,
    limits: &Limits,
) -> Result<LemmaReport> {
    if g.vertex_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    let n = h.n();
    let m = h.m();
    let big_n = nat(g.vertex_count() as u64);
    let two_e = nat(2 * g.edge_count() as u64);

    let count = count_homs(h.graph(), g, limits)?;
    let scale = big_pow(&nat(2 * n as u64), (n * n) as u32);
    let rhs_num = big_pow(&two_e, m as u32) * big_pow(&big_n, n as u32);
    let rhs_den = &scale * big_pow(&big_n, 2 * m as u32);
    let mut report = LemmaReport::new(LemmaId::Importantstep, count, rhs_num, rhs_den);
    report.conclusion_holds = &report.lhs * &report.rhs_den >= report.rhs_num;

    let params = DrcParams::new(g, n)?;
    let audits = audit_vertices(g, &params)?;
    let good: Vec<usize> = audits.iter().filter(|a| a.good).map(|a| a.vertex).collect();
    let good_degree_sum: usize = good.iter().map(|&v| g.degree(v)).sum();
    if good_degree_sum < g.edge_count() {
        report.violations.push(format!(
            "good degree sum {good_degree_sum} is below E = {}",
            g.edge_count()
        ));
    }

    let hyp = link_hypergraph(h);
    let mut chain = ExactRational::zero();
    for &v in &good {
        let outcome = anchor_outcome(h, g, &hyp, v, limits)?;
        chain = &chain + &outcome.chain_term;
        report.sub_reports.push(outcome.report);
    }
    // h >= Σ_good ½|N(v)|^n2 Π thresholds >= (2n)^(-n^2) p^m N^n
    if !chain.le_integer(&report.lhs) {
        report.violations.push(format!(
            "count {} is below the anchor sum {chain}",
            report.lhs
        ));
    }
    if chain < report.rhs() {
        report
            .violations
            .push(format!("anchor sum {chain} is below the final bound"));
    }

    report.detail("n", n);
    report.detail("m", m);
    report.detail("n1", h.n1());
    report.detail("n2", h.n2());
    report.detail("N", g.vertex_count());
    report.detail("E", g.edge_count());
    report.detail("good_vertices", format!("{good:?}"));
    report.detail("good_degree_sum", good_degree_sum);
    report.detail("anchor_sum_approx", chain.to_f64_approx());
    report.detail("bound_approx", report.rhs().to_f64_approx());
    report.detail(
        "reading",
        "link edges over V1\\{u}; non-edge bound |N(v)|^k/(2n) for 1<=k<=n2; e = n",
    );
    Ok(report)
}

/// `h_H(F × G) = h_H(F) · h_H(G)`.
pub fn verify_tensor_multiplicativity(
    h: &Graph,
    f: &Graph,
    g: &Graph,
    limits: &Limits,
) -> Result<LemmaReport> {
    let fg = f.tensor_product(g);
    let lhs = count_homs(h, &fg, limits)?;
    let hf = count_homs(h, f, limits)?;
    let hg = count_homs(h, g, limits)?;
    let mut report = LemmaReport::new(LemmaId::Tensor, lhs, &hf * &hg, BigNat::one());
    report.conclusion_holds = report.lhs == report.rhs_num;
    if !report.conclusion_holds {
        report.violations.push(format!(
            "h(F×G) = {} but h(F)·h(G) = {}",
            report.lhs, report.rhs_num
        ));
    }
    if let (Ok(pf), Ok(pg), Ok(pfg)) = (f.edge_density(), g.edge_density(), fg.edge_density()) {
        let ok = pfg == &pf * &pg;
        report.detail("edge_density_product_holds", ok);
        if !ok {
            report
                .violations
                .push("edge density is not multiplicative".into());
        }
    }
    report.detail("h_f", &hf);
    report.detail("h_g", &hg);
    Ok(report)
}

/// Checks `t_H(G) >= p^m` directly, and for each `r ≤ max_power` that
/// `t_H(G^r) = t_H(G)^r`, `p(G^r) = p(G)^r`, and the apex bound on `G^r`.
pub fn verify_main_theorem(
    h: &BipartiteApexGraph,
    g: &Graph,
    max_power: usize,
    limits: &Limits,
) -> Result<LemmaReport> {
    if max_power == 0 {
        return Err(Error::InvalidArgument(
            "max_power must be at least 1".into(),
        ));
    }
    if g.vertex_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    let n = h.n();
    let top_order = g
        .vertex_count()
        .checked_pow(max_power as u32)
        .ok_or_else(|| Error::InstanceTooLarge(format!("G^{max_power} is too large")))?;
    limits.check_power(top_order, n, "tensor power map space")?;

    let verdict = sidorenko_check(h.graph(), g, limits)?;
    let big_n = nat(g.vertex_count() as u64);
    let m = h.m();
    let mut report = LemmaReport::new(
        LemmaId::MainTheorem,
        verdict.lhs.clone() / big_pow(&big_n, 2 * m as u32),
        verdict.rhs.clone(),
        big_pow(&big_n, 2 * m as u32),
    );
    report.conclusion_holds = verdict.holds;
    report.detail("m", m);
    report.detail("n", n);
    let p = g.edge_density()?;
    match &verdict.slack_ratio {
        Some(s) => {
            report.detail("slack_ratio", s);
            report.detail("slack_approx", s.to_f64_approx());
        }
        None => report.detail("slack_ratio", "undefined (p = 0)"),
    }
    if !verdict.holds {
        if let Some(c) = verdict.slack_ratio.as_ref() {
            // smallest r with c^r < (2n)^(-n^2), where the apex bound on G^r
            // would be contradicted
            let limit =
                ExactRational::new(BigNat::one(), big_pow(&nat(2 * n as u64), (n * n) as u32))
                    .expect("positive");
            let mut r = 1u32;
            while c.pow(r) >= limit && r < 1 << 16 {
                r += 1;
            }
            report.detail("contradiction_power", r);
        }
    }

    let h1 = count_homs(h.graph(), g, limits)?;
    let mut power = g.clone();
    for r in 1..=max_power {
        if r > 1 {
            power = power.tensor_product(g);
        }
        let hr = count_homs(h.graph(), &power, limits)?;
        let multiplicative = hr == big_pow(&h1, r as u32);
        let density_ok = power.edge_density()? == p.pow(r as u32);
        report.detail(&format!("h_power{r}"), &hr);
        report.detail(&format!("multiplicative_power{r}"), multiplicative);
        if !multiplicative {
            report.violations.push(format!("t_H(G^{r}) != t_H(G)^{r}"));
        }
        if !density_ok {
            report.violations.push(format!("p(G^{r}) != p(G)^{r}"));
        }
        let mut sub = verify_importantstep(h, &power, limits)?;
        sub.detail("power", r);
        report.sub_reports.push(sub);
    }
    Ok(report)
}
