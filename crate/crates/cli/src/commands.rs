//! One function per subcommand. Each turns the loaded instances into
//! report records plus a summary.

use hombound::embed::{verify_importantstep, verify_main_theorem, verify_tensor_multiplicativity};
use hombound::hom::{count_homs, enumerate_apex_bipartite, hom_density, sidorenko_check};
use hombound::numeric::BigNat;
use hombound::{verify_goodstep, BipartiteApexGraph, ExactRational, LemmaReport, Limits};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::config::RunConfig;
use crate::error::CliError;
use crate::input::Instance;
use crate::report::Record;

pub struct Output {
    pub records: Vec<Record>,
    pub summary: Map<String, Value>,
}

fn nat(x: &BigNat) -> Value {
    Value::String(x.to_string())
}

/// Lowest terms, as `num/den`.
fn rational(x: &ExactRational) -> Value {
    Value::String(x.reduced().to_string())
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report types serialize")
}

/// Report fields of a verifier outcome, flattened into the record.
fn lemma_fields(rec: &mut Record, report: &LemmaReport) {
    if let Value::Object(m) = to_value(report) {
        rec.fields.extend(m);
    }
    rec.set("rhs", rational(&report.rhs()));
    rec.violation |= report.lemma_violation();
}

/// Runs `f` on every job. Records come back sorted by id. In strict mode
/// jobs run one at a time in id order and stop after the first violation.
fn run_jobs<J, F>(mut jobs: Vec<(String, J)>, strict: bool, f: F) -> Result<Vec<Record>, CliError>
where
    J: Sync,
    F: Fn(&str, &J) -> Result<Record, CliError> + Sync,
{
    jobs.sort_by(|a, b| a.0.cmp(&b.0));
    if strict {
        let mut out = Vec::new();
        for (id, job) in &jobs {
            let rec = f(id, job)?;
            let stop = rec.violation;
            out.push(rec);
            if stop {
                break;
            }
        }
        return Ok(out);
    }
    jobs.par_iter().map(|(id, job)| f(id, job)).collect()
}

fn pair_jobs<'a>(
    hs: &'a [Instance],
    gs: &'a [Instance],
) -> Vec<(String, (&'a Instance, &'a Instance))> {
    hs.iter()
        .flat_map(|h| {
            gs.iter()
                .map(move |g| (format!("h={} g={}", h.id, g.id), (h, g)))
        })
        .collect()
}

fn core_err(id: &str) -> impl Fn(hombound::Error) -> CliError + '_ {
    move |e| CliError::from_core(e, id)
}

fn base_summary(records: &[Record]) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("records".into(), records.len().into());
    m.insert(
        "violations".into(),
        records.iter().filter(|r| r.violation).count().into(),
    );
    m
}

pub fn hom(
    cfg: &RunConfig,
    limits: &Limits,
    hs: &[Instance],
    gs: &[Instance],
) -> Result<Output, CliError> {
    let records = run_jobs(pair_jobs(hs, gs), cfg.strict, |id, (h, g)| {
        let count = count_homs(&h.graph, &g.graph, limits).map_err(core_err(id))?;
        let mut rec = Record::new(id.to_string());
        rec.set("h", h.id.as_str());
        rec.set("g", g.id.as_str());
        rec.set("count", nat(&count));
        Ok(rec)
    })?;
    let summary = base_summary(&records);
    Ok(Output { records, summary })
}

pub fn density(
    cfg: &RunConfig,
    limits: &Limits,
    hs: &[Instance],
    gs: &[Instance],
) -> Result<Output, CliError> {
    let records = run_jobs(pair_jobs(hs, gs), cfg.strict, |id, (h, g)| {
        let r = hom_density(&h.graph, &g.graph, limits).map_err(core_err(id))?;
        let mut rec = Record::new(id.to_string());
        rec.set("h", h.id.as_str());
        rec.set("g", g.id.as_str());
        rec.set("count", nat(&r.count));
        rec.set("density", rational(&r.density()));
        rec.set("density_num", nat(&r.density_num));
        rec.set("density_den", nat(&r.density_den));
        rec.set("density_approx", r.density().to_f64_approx());
        Ok(rec)
    })?;
    let summary = base_summary(&records);
    Ok(Output { records, summary })
}

pub fn check_sidorenko(
    cfg: &RunConfig,
    limits: &Limits,
    hs: &[Instance],
    gs: &[Instance],
) -> Result<Output, CliError> {
    let records = run_jobs(pair_jobs(hs, gs), cfg.strict, |id, (h, g)| {
        let v = sidorenko_check(&h.graph, &g.graph, limits).map_err(core_err(id))?;
        let mut rec = Record::new(id.to_string());
        rec.set("h", h.id.as_str());
        rec.set("g", g.id.as_str());
        rec.set("holds", v.holds);
        rec.set("lhs", nat(&v.lhs));
        rec.set("rhs", nat(&v.rhs));
        rec.set(
            "slack",
            v.slack_ratio.as_ref().map_or(Value::Null, rational),
        );
        rec.set(
            "slack_approx",
            v.slack_ratio.as_ref().map(ExactRational::to_f64_approx),
        );
        rec.set("apex_hypothesis", v.apex_hypothesis);
        rec.set("m", v.m);
        rec.set("n", v.n);
        // outside the apex class a failure is a counterexample, not a bug
        rec.set("counterexample", !v.holds && !v.apex_hypothesis);
        rec.violation = !v.holds && v.apex_hypothesis;
        if let (Some(r), true) = (cfg.r, v.apex_hypothesis) {
            let apex = BipartiteApexGraph::from_graph(h.graph.clone()).map_err(core_err(id))?;
            let report = verify_main_theorem(&apex, &g.graph, r, limits).map_err(core_err(id))?;
            rec.violation |= report.lemma_violation();
            rec.set("tensor_powers", to_value(&report));
        }
        Ok(rec)
    })?;
    let mut summary = base_summary(&records);
    let failures = records
        .iter()
        .filter(|r| r.fields["holds"] == false)
        .count();
    summary.insert("failures".into(), failures.into());
    Ok(Output { records, summary })
}

pub fn drc(cfg: &RunConfig, limits: &Limits, gs: &[Instance]) -> Result<Output, CliError> {
    let n = cfg.n.expect("validated");
    let jobs = gs
        .iter()
        .map(|g| (format!("g={} n={n}", g.id), g))
        .collect();
    let records = run_jobs(jobs, cfg.strict, |id, g| {
        // tuples over a neighbourhood: at most N^n per vertex and k
        let size = g.graph.vertex_count() as u128;
        let work = u32::try_from(n).ok().and_then(|e| size.checked_pow(e));
        if work.is_none_or(|w| w > u128::from(limits.max_evaluations)) {
            return Err(CliError::from_core(
                hombound::Error::InstanceTooLarge(format!("{size}^{n} tuples exceed the guard")),
                id,
            ));
        }
        let report = verify_goodstep(&g.graph, n).map_err(core_err(id))?;
        let mut rec = Record::new(id.to_string());
        rec.set("g", g.id.as_str());
        rec.set("n", n);
        rec.set("holds", report.holds);
        rec.set("good_degree_sum", nat(&report.good_degree_sum));
        rec.set("bound", rational(&report.bound));
        rec.set("edge_count", report.params.edge_count);
        rec.set("thresholds", to_value(&report.params.thresholds));
        rec.set("good_vertices", report.good_vertices().collect::<Vec<_>>());
        let vertices: Vec<Value> = report
            .audits
            .iter()
            .map(|a| {
                let mut a = a.clone();
                if let Some(k) = cfg.k {
                    a.per_k.retain(|x| x.k == k);
                }
                to_value(&a)
            })
            .collect();
        rec.set("vertices", vertices);
        let xk: Vec<Value> = report
            .xk_checks
            .iter()
            .filter(|x| cfg.k.is_none_or(|k| x.k == k))
            .map(to_value)
            .collect();
        rec.set("xk_checks", xk);
        rec.violation = report.lemma_violation();
        Ok(rec)
    })?;
    let summary = base_summary(&records);
    Ok(Output { records, summary })
}

fn apex_of(h: &Instance) -> Result<BipartiteApexGraph, CliError> {
    BipartiteApexGraph::from_graph(h.graph.clone())
        .map_err(|e| CliError::from_core(e, &format!("h={}", h.id)))
}

pub fn embed_verify(
    cfg: &RunConfig,
    limits: &Limits,
    hs: &[Instance],
    gs: &[Instance],
) -> Result<Output, CliError> {
    let apexes: Vec<BipartiteApexGraph> = hs.iter().map(apex_of).collect::<Result<_, _>>()?;
    let jobs = hs
        .iter()
        .zip(&apexes)
        .flat_map(|(h, a)| {
            gs.iter()
                .map(move |g| (format!("h={} g={}", h.id, g.id), (h, a, g)))
        })
        .collect();
    let records = run_jobs(jobs, cfg.strict, |id, (h, apex, g)| {
        let report = verify_importantstep(apex, &g.graph, limits).map_err(core_err(id))?;
        let mut rec = Record::new(id.to_string());
        lemma_fields(&mut rec, &report);
        rec.set("h", h.id.as_str());
        rec.set("g", g.id.as_str());
        Ok(rec)
    })?;
    let summary = base_summary(&records);
    Ok(Output { records, summary })
}

pub fn tensor(
    cfg: &RunConfig,
    limits: &Limits,
    hs: &[Instance],
    gs: &[Instance],
) -> Result<Output, CliError> {
    let mut jobs = Vec::new();
    for h in hs {
        for (i, f) in gs.iter().enumerate() {
            for g in &gs[i..] {
                jobs.push((format!("h={} f={} g={}", h.id, f.id, g.id), (h, f, g)));
            }
        }
    }
    let records = run_jobs(jobs, cfg.strict, |id, (h, f, g)| {
        let report = verify_tensor_multiplicativity(&h.graph, &f.graph, &g.graph, limits)
            .map_err(core_err(id))?;
        let mut rec = Record::new(id.to_string());
        lemma_fields(&mut rec, &report);
        rec.set("h", h.id.as_str());
        rec.set("f", f.id.as_str());
        rec.set("g", g.id.as_str());
        Ok(rec)
    })?;
    let summary = base_summary(&records);
    Ok(Output { records, summary })
}

/// Per pattern: minimum slack over the corpus, and every pair where the
/// density bound or the apex bound fails.
pub fn search(cfg: &RunConfig, limits: &Limits, gs: &[Instance]) -> Result<Output, CliError> {
    let max = cfg.max_vertices.expect("validated");
    let patterns: Vec<BipartiteApexGraph> = enumerate_apex_bipartite(max)
        .map_err(|e| CliError::from_core(e, "--max-vertices"))?
        .collect();
    let jobs = patterns
        .iter()
        .map(|h| {
            let g6 = hombound::graph::graph6::emit_graph6(h.graph()).expect("at most 8 vertices");
            (format!("h={g6} n1={}", h.n1()), (g6, h))
        })
        .collect();
    let records = run_jobs(jobs, cfg.strict, |id, (g6, h)| {
        let mut rec = Record::new(id.to_string());
        let mut min: Option<(ExactRational, &str)> = None;
        let mut violations = Vec::new();
        for g in gs {
            let pair = format!("{id} g={}", g.id);
            let v = sidorenko_check(h.graph(), &g.graph, limits).map_err(core_err(&pair))?;
            if !v.holds {
                violations.push(json!({"g": g.id, "check": "density"}));
            }
            if let Some(s) = v.slack_ratio {
                if min.as_ref().is_none_or(|(best, _)| s < *best) {
                    min = Some((s, &g.id));
                }
            }
            let report = verify_importantstep(h, &g.graph, limits).map_err(core_err(&pair))?;
            if report.lemma_violation() {
                violations.push(
                    json!({"g": g.id, "check": "importantstep", "details": report.violations}),
                );
            }
            if cfg.strict && !violations.is_empty() {
                break;
            }
        }
        rec.set("h", g6.as_str());
        rec.set("n", h.n());
        rec.set("m", h.m());
        rec.set("n1", h.n1());
        rec.set("n2", h.n2());
        rec.set("pairs", gs.len());
        rec.set(
            "min_slack",
            min.as_ref().map_or(Value::Null, |(s, _)| rational(s)),
        );
        rec.set(
            "min_slack_approx",
            min.as_ref().map(|(s, _)| s.to_f64_approx()),
        );
        rec.set("argmin_g", min.as_ref().map(|(_, g)| g.to_string()));
        rec.violation = !violations.is_empty();
        rec.set("violations", violations);
        Ok(rec)
    })?;
    let mut summary = base_summary(&records);
    summary.insert("patterns".into(), patterns.len().into());
    summary.insert("hosts".into(), gs.len().into());
    let overall = records
        .iter()
        .filter_map(|r| match &r.fields["min_slack"] {
            Value::String(s) => Some((parse_rational(s), s.clone())),
            _ => None,
        })
        .min_by(|a, b| a.0.cmp(&b.0))
        .map(|(_, s)| s);
    summary.insert("min_slack".into(), overall.into());
    Ok(Output { records, summary })
}

fn parse_rational(s: &str) -> ExactRational {
    let (n, d) = s.split_once('/').expect("written as num/den");
    ExactRational::new(n.parse().expect("decimal"), d.parse().expect("decimal")).expect("nonzero")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_strings_round_trip() {
        let x = ExactRational::ratio(9, 8).unwrap();
        assert_eq!(parse_rational(&x.to_string()), x);
    }

    #[test]
    fn strict_jobs_stop_at_first_violation() {
        let jobs: Vec<(String, u32)> = (0..5).map(|i| (format!("j{i}"), i)).collect();
        let f = |id: &str, &i: &u32| {
            let mut r = Record::new(id.to_string());
            r.violation = i >= 2;
            Ok(r)
        };
        assert_eq!(run_jobs(jobs.clone(), true, f).unwrap().len(), 3);
        assert_eq!(run_jobs(jobs, false, f).unwrap().len(), 5);
    }
}
