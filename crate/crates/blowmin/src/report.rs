//! Machine-readable reports. All maps are ordered, so the same inputs always
//! serialize to the same bytes.

use std::collections::BTreeMap;
use std::fmt::Display;

use blowmin_core::search::{StepKind, SweepOutcome, SweepReport};
use blowmin_core::{Graph, SearchResult, ShiftTrace, Weighting};
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::Result;
use crate::formats::{graph_hash, GraphFile};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    HypothesesUnmet,
}

impl Verdict {
    /// 0 pass, 1 failure, 2 for instances outside the claim's hypotheses.
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Pass => 0,
            Verdict::Fail => 1,
            Verdict::HypothesesUnmet => 2,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub claim: String,
    pub instance: Value,
    /// Exact values as decimal strings.
    pub values: BTreeMap<String, String>,
    pub verdict: Verdict,
    pub details: Vec<String>,
}

impl VerificationReport {
    pub fn new(claim: &str, instance: Value) -> Self {
        Self {
            claim: claim.to_owned(),
            instance,
            values: BTreeMap::new(),
            verdict: Verdict::Pass,
            details: Vec::new(),
        }
    }

    pub fn value(&mut self, name: &str, v: impl Display) -> &mut Self {
        self.values.insert(name.to_owned(), v.to_string());
        self
    }

    pub fn detail(&mut self, line: impl Into<String>) -> &mut Self {
        self.details.push(line.into());
        self
    }

    /// Records a check; any failed check makes the verdict `fail`.
    pub fn check(&mut self, ok: bool, what: impl Into<String>) -> &mut Self {
        let what = what.into();
        self.details.push(format!("{}: {what}", if ok { "ok" } else { "FAILED" }));
        if !ok && self.verdict == Verdict::Pass {
            self.verdict = Verdict::Fail;
        }
        self
    }

    pub fn unmet(&mut self, why: impl Into<String>) -> &mut Self {
        self.details.push(format!("hypotheses unmet: {}", why.into()));
        self.verdict = Verdict::HypothesesUnmet;
        self
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn exit_code(&self) -> i32 {
        self.verdict.exit_code()
    }
}

/// `{ "graph": ..., "graph_hash": ... }` plus any extra parameters.
pub fn graph_instance(g: &Graph, params: Value) -> Value {
    let mut instance = json!({
        "graph": GraphFile::from_graph(g),
        "graph_hash": graph_hash(g),
    });
    if let (Value::Object(map), Value::Object(extra)) = (&mut instance, params) {
        map.extend(extra);
    }
    instance
}

fn weights(w: &Weighting) -> Value {
    json!(w.weights())
}

pub fn search_json(instance: Value, r: &SearchResult) -> Value {
    json!({
        "instance": instance,
        "min": r.min_value.to_string(),
        "minimizers": r.minimizers.iter().map(weights).collect::<Vec<_>>(),
        "minimizer_count": r.minimizer_count,
        "truncated": r.truncated(),
        "visited": r.visited,
        "total_weightings": r.total_weightings.to_string(),
        "trace": [],
    })
}

pub fn trace_steps_json(t: &ShiftTrace) -> Vec<Value> {
    t.steps
        .iter()
        .map(|step| {
            let mut v = match &step.kind {
                StepKind::Shift { spec } => json!({ "kind": "shift", "A": spec.a(), "B": spec.b() }),
                StepKind::Balance { from, to } => json!({ "kind": "balance", "from": from, "to": to }),
                StepKind::Relocate { from, to } => json!({ "kind": "relocate", "from": from, "to": to }),
            };
            v["before"] = json!(step.before.to_string());
            v["after"] = json!(step.after.to_string());
            v["weights"] = weights(&step.weighting);
            v
        })
        .collect()
}

/// A structured minimizer's result in the search report layout; `visited`
/// counts the trace steps.
pub fn trace_json(instance: Value, t: &ShiftTrace) -> Value {
    json!({
        "instance": instance,
        "min": t.final_value.to_string(),
        "minimizers": [weights(&t.final_weighting)],
        "visited": t.steps.len(),
        "initial": { "weights": weights(&t.initial), "value": t.initial_value.to_string() },
        "monotone": t.is_monotone(),
        "trace": trace_steps_json(t),
    })
}

#[derive(Debug, Serialize)]
struct SweepCsvRow<'a> {
    graph: &'a str,
    graph_hash: String,
    n: usize,
    edges: usize,
    m: u64,
    k: usize,
    status: &'static str,
    min: String,
    minimizers: String,
    best_uniform: String,
    witness_set: String,
    conjecture_holds: String,
    uniform_alpha_minimal: String,
    note: String,
}

fn csv_rows<'a>(report: &SweepReport, graphs: &'a [Graph], names: &'a [String]) -> Vec<SweepCsvRow<'a>> {
    report
        .rows
        .iter()
        .map(|row| {
            let g = &graphs[row.graph];
            let mut out = SweepCsvRow {
                graph: &names[row.graph],
                graph_hash: graph_hash(g),
                n: g.n(),
                edges: g.edge_count(),
                m: row.m,
                k: row.k,
                status: "skipped",
                min: String::new(),
                minimizers: String::new(),
                best_uniform: String::new(),
                witness_set: String::new(),
                conjecture_holds: String::new(),
                uniform_alpha_minimal: String::new(),
                note: String::new(),
            };
            match &row.outcome {
                SweepOutcome::Evaluated(f) => {
                    out.status = "evaluated";
                    out.min = f.min_value.to_string();
                    out.minimizers = f.minimizer_count.to_string();
                    out.best_uniform = f.best_uniform_value.to_string();
                    out.witness_set = f.witness_set.iter().map(usize::to_string).collect::<Vec<_>>().join(" ");
                    out.conjecture_holds = f.conjecture_holds.to_string();
                    out.uniform_alpha_minimal = f.uniform_alpha_minimal.to_string();
                }
                SweepOutcome::Skipped(why) => out.note = why.clone(),
            }
            out
        })
        .collect()
}

/// One row per (graph, m, k) instance.
pub fn sweep_csv(report: &SweepReport, graphs: &[Graph], names: &[String]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in csv_rows(report, graphs, names) {
        w.serialize(row)?;
    }
    let bytes = w.into_inner().map_err(|e| csv::Error::from(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("CSV output is UTF-8"))
}

pub fn sweep_json(report: &SweepReport, graphs: &[Graph], names: &[String]) -> Value {
    let rows: Vec<Value> = report
        .rows
        .iter()
        .map(|row| {
            let g = &graphs[row.graph];
            let mut v = json!({
                "graph": names[row.graph],
                "graph_hash": graph_hash(g),
                "m": row.m,
                "k": row.k,
            });
            match &row.outcome {
                SweepOutcome::Evaluated(f) => {
                    v["status"] = json!("evaluated");
                    v["min"] = json!(f.min_value.to_string());
                    v["minimizer_count"] = json!(f.minimizer_count);
                    v["best_uniform"] = json!(f.best_uniform_value.to_string());
                    v["witness_set"] = json!(f.witness_set);
                    v["witness"] = weights(&f.witness);
                    v["conjecture_holds"] = json!(f.conjecture_holds);
                    v["uniform_alpha_minimal"] = json!(f.uniform_alpha_minimal);
                }
                SweepOutcome::Skipped(why) => {
                    v["status"] = json!("skipped");
                    v["note"] = json!(why);
                }
            }
            v
        })
        .collect();
    let flagged = |rows: Vec<&blowmin_core::search::SweepRow>| -> Vec<Value> {
        rows.iter()
            .map(|r| json!({ "graph": names[r.graph], "m": r.m, "k": r.k }))
            .collect()
    };
    json!({
        "graphs": graphs.len(),
        "instances": report.rows.len(),
        "skipped": report.skipped(),
        "violations": flagged(report.violations()),
        "non_uniform_alpha": flagged(report.non_uniform_alpha()),
        "rows": rows,
    })
}
