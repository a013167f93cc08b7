//! Reproductions of closed-form values and instance checks of the
//! minimization results. Every function recomputes from scratch and returns a
//! [`VerificationReport`].

use blowmin_core::blowup::{count_cliques_formula, count_cliques_oracle_within, uniform_weighting, DEFAULT_MAX_BLOWUP};
use blowmin_core::families::{
    build_multipartite, build_sperner, hall_level_matching, middle_level, LevelDirection, MultipartiteSpec,
};
use blowmin_core::graph::{is_chordal, is_independent, max_independent_set};
use blowmin_core::search::{
    brute_force_min_with, minimize_chordal, minimize_multipartite, minimize_sperner, strict_gap_check, SearchBudget,
    DEFAULT_MAX_WEIGHTINGS, MINIMIZER_CAP,
};
use blowmin_core::shift::{build_injection_certificate, shift_edge, validate_shift};
use blowmin_core::{BigCount, Error as CoreError, Graph, SearchResult, ShiftMode, ShiftSpec, ShiftTrace, Weighting};
use serde_json::json;

use crate::error::{Error, Result};
use crate::report::{graph_instance, trace_steps_json, VerificationReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub max_weightings: u64,
    /// Largest blow-up built explicitly for oracle counts and certificates.
    pub max_blowup: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Self {
            max_weightings: DEFAULT_MAX_WEIGHTINGS,
            max_blowup: DEFAULT_MAX_BLOWUP,
        }
    }
}

impl Budget {
    fn search(self) -> SearchBudget {
        SearchBudget {
            max_weightings: self.max_weightings,
            minimizer_cap: MINIMIZER_CAP,
        }
    }
}

/// The triangular prism: inner triangle 0,1,2, outer triangle 3,4,5, and
/// the matching `i - (i + 3)`.
pub fn prism() -> Graph {
    Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])
        .expect("prism is simple")
}

/// Formula value, cross-checked against the explicit blow-up when it fits.
fn counted(r: &mut VerificationReport, g: &Graph, w: &Weighting, k: usize, name: &str, budget: Budget) -> Result<BigCount> {
    let value = count_cliques_formula(g, w, k)?;
    r.value(name, &value);
    match count_cliques_oracle_within(g, w, k, budget.max_blowup) {
        Ok(oracle) => {
            r.value(&format!("{name}_oracle"), &oracle);
            r.check(oracle == value, format!("{name}: formula {value} = explicit blow-up {oracle}"));
        }
        Err(CoreError::BudgetExceeded { .. }) => {
            r.detail(format!("{name}: blow-up on {} vertices not built", w.total()));
        }
        Err(e) => return Err(e.into()),
    }
    Ok(value)
}

fn brute(r: &mut VerificationReport, g: &Graph, m: u64, k: usize, budget: Budget) -> Result<SearchResult> {
    let best = brute_force_min_with(g, m, k, budget.search())?;
    r.value("brute_force_min", &best.min_value);
    r.value("minimizer_count", best.minimizer_count);
    r.value("visited", best.visited);
    Ok(best)
}

fn record_trace(r: &mut VerificationReport, t: &ShiftTrace, min: &BigCount) {
    r.value("trace_start", &t.initial_value);
    r.value("trace_final", &t.final_value);
    r.value("trace_steps", t.steps.len());
    r.check(t.is_monotone(), "every trace step keeps or lowers the count");
    r.check(t.final_value == *min, format!("trace ends at the minimum {min}"));
    if let serde_json::Value::Object(map) = &mut r.instance {
        map.insert("trace".into(), json!(trace_steps_json(t)));
    }
}

fn start_or_uniform(g: &Graph, start: Option<Weighting>, m: u64) -> Result<Weighting> {
    match start {
        Some(w) => {
            if w.total() != m {
                return Err(Error::Usage(format!("start weighting has total {} but m = {m}", w.total())));
            }
            w.check_against(g)?;
            Ok(w)
        }
        None => Ok(uniform_weighting(g, &(0..g.n()).collect::<Vec<_>>(), m)?),
    }
}

/// The 3-vertex path with `m = 3k`: `(k, k, k)` against `(2k, 0, k)`.
pub fn reproduce_counterexample1(k: usize, budget: Budget) -> Result<VerificationReport> {
    if k < 3 {
        return Err(Error::Usage("counterexample1 needs k >= 3".into()));
    }
    let g = Graph::path(3)?;
    let kk = k as u64;
    let uniform = Weighting::new(vec![kk, kk, kk])?;
    let shifted = Weighting::new(vec![2 * kk, 0, kk])?;
    let mut r = VerificationReport::new(
        "counterexample1",
        graph_instance(&g, json!({ "k": k, "m": 3 * kk, "uniform": uniform.weights(), "shifted": shifted.weights() })),
    );
    let c = BigCount::binomial(2 * kk, kk);
    let one = BigCount::from(1u64);
    let uniform_closed = BigCount::from(c.value() + c.value() - one.value());
    let shifted_closed = c.clone() + one;
    r.value("uniform_closed_form", &uniform_closed);
    r.value("shifted_closed_form", &shifted_closed);
    let u = counted(&mut r, &g, &uniform, k, "uniform", budget)?;
    let s = counted(&mut r, &g, &shifted, k, "shifted", budget)?;
    r.check(u == uniform_closed, "uniform value is 2 C(2k,k) - 1");
    r.check(s == shifted_closed, "shifted value is C(2k,k) + 1");
    r.check(s < u, "the non-uniform weighting has fewer k-cliques");
    Ok(r)
}

/// π_3 on the prism: all ones, then two successive single-edge shifts.
pub fn reproduce_figure1(budget: Budget) -> Result<VerificationReport> {
    let g = prism();
    let a = Weighting::ones(6);
    let b = shift_edge(&g, &a, 1, 0)?;
    let c = shift_edge(&g, &a, 1, 4)?;
    let mut r = VerificationReport::new(
        "figure1",
        graph_instance(&g, json!({ "k": 3, "weightings": [a.weights(), b.weights(), c.weights()] })),
    );
    let values = [
        counted(&mut r, &g, &a, 3, "a", budget)?,
        counted(&mut r, &g, &b, 3, "b", budget)?,
        counted(&mut r, &g, &c, 3, "c", budget)?,
    ];
    let expected = [2u64, 3, 4];
    r.check(values.iter().zip(expected).all(|(v, e)| *v == e), "π_3 sequence is 2, 3, 4");
    Ok(r)
}

/// Floor/ceiling counts of a uniform weighting on `n` isolated vertices.
pub fn reproduce_remark2(m: u64, n: usize, k: usize) -> Result<VerificationReport> {
    if n == 0 {
        return Err(Error::Usage("remark2_counts needs n >= 1".into()));
    }
    let g = Graph::empty(n)?;
    let all: Vec<usize> = (0..n).collect();
    let w = uniform_weighting(&g, &all, m)?;
    let floor = m / n as u64;
    let rem = (m % n as u64) as usize;
    let at_floor = w.weights().iter().filter(|&&x| x == floor).count();
    let at_ceil = w.weights().iter().filter(|&&x| x == floor + 1).count();
    let mut r = VerificationReport::new(
        "remark2_counts",
        json!({ "n": n, "m": m, "k": k, "weights": w.weights() }),
    );
    r.value("floor_count", at_floor).value("ceil_count", at_ceil).value("r", rem);
    r.check(at_floor == n - rem && at_ceil == rem, format!("(n - r, r) = ({}, {rem})", n - rem));
    let values: Vec<BigCount> = blowmin_core::search::all_uniform_weightings(&g, &all, m)?
        .iter()
        .map(|x| count_cliques_formula(&g, x, k))
        .collect::<Result<_, _>>()?;
    r.value("uniform_placements", values.len());
    r.check(values.windows(2).all(|p| p[0] == p[1]), "every placement of the ceilings gives the same count");
    Ok(r)
}

/// π_2 minimum is attained by a uniform-α weighting.
pub fn verify_t3(g: &Graph, m: u64, budget: Budget) -> Result<VerificationReport> {
    let mut r = VerificationReport::new("t3", graph_instance(g, json!({ "m": m, "k": 2 })));
    let best = brute(&mut r, g, m, 2, budget)?;
    let w = uniform_weighting(g, &max_independent_set(g), m)?;
    let value = count_cliques_formula(g, &w, 2)?;
    r.value("uniform_alpha", &value);
    r.detail(format!("uniform-α weighting {:?}", w.weights()));
    r.check(value == best.min_value, "uniform-α value equals the minimum");
    Ok(r)
}

/// Uniform on the middle level of `B_n` is minimal; the shifting trace
/// reaches it.
pub fn verify_t4(n: usize, m: u64, k: usize, start: Option<Weighting>, budget: Budget) -> Result<VerificationReport> {
    let b = build_sperner(n)?;
    let g = &b.graph;
    let mut r = VerificationReport::new("t4", graph_instance(g, json!({ "n": n, "m": m, "k": k })));
    let best = brute(&mut r, g, m, k, budget)?;
    let w = uniform_weighting(g, &middle_level(&b), m)?;
    let value = count_cliques_formula(g, &w, k)?;
    r.value("uniform_middle", &value);
    r.check(value == best.min_value, "uniform on the middle level equals the minimum");
    let t = minimize_sperner(&b, &start_or_uniform(g, start, m)?, k)?;
    record_trace(&mut r, &t, &best.min_value);
    Ok(r)
}

/// Uniform on a largest part of a complete multipartite graph is minimal.
pub fn verify_t5(sizes: Vec<usize>, m: u64, k: usize, start: Option<Weighting>, budget: Budget) -> Result<VerificationReport> {
    let spec = MultipartiteSpec::new(sizes)?;
    let g = build_multipartite(&spec)?;
    let mut r = VerificationReport::new("t5", graph_instance(&g, json!({ "sizes": spec.sizes(), "m": m, "k": k })));
    let best = brute(&mut r, &g, m, k, budget)?;
    let w = uniform_weighting(&g, &spec.parts()[0], m)?;
    let value = count_cliques_formula(&g, &w, k)?;
    r.value("uniform_largest_part", &value);
    r.check(value == best.min_value, "uniform on a largest part equals the minimum");
    let t = minimize_multipartite(&g, &spec, &start_or_uniform(&g, start, m)?, k)?;
    record_trace(&mut r, &t, &best.min_value);
    Ok(r)
}

/// Uniform-α is minimal on a chordal graph.
pub fn verify_t6(g: &Graph, m: u64, k: usize, start: Option<Weighting>, budget: Budget) -> Result<VerificationReport> {
    let mut r = VerificationReport::new("t6", graph_instance(g, json!({ "m": m, "k": k })));
    if !is_chordal(g) {
        r.unmet("graph is not chordal");
        return Ok(r);
    }
    let best = brute(&mut r, g, m, k, budget)?;
    let w = uniform_weighting(g, &max_independent_set(g), m)?;
    let value = count_cliques_formula(g, &w, k)?;
    r.value("uniform_alpha", &value);
    r.check(value == best.min_value, "uniform-α value equals the minimum");
    let t = minimize_chordal(g, &start_or_uniform(g, start, m)?, k)?;
    record_trace(&mut r, &t, &best.min_value);
    Ok(r)
}

fn strict_gap(claim: &str, g: &Graph, m: u64, k: usize, params: serde_json::Value, family_ok: Result<(), &str>, budget: Budget) -> Result<VerificationReport> {
    let gap = strict_gap_check(g, m, k)?;
    let mut r = VerificationReport::new(claim, graph_instance(g, params));
    r.value("alpha", gap.alpha).value("alpha_k", gap.alpha_k);
    r.detail(format!("largest independent set {:?}", gap.independent_set));
    r.detail(format!("largest {k}-clique independent set {:?} (lexicographically first)", gap.clique_independent_set));
    let a = counted(&mut r, g, &gap.uniform_alpha, k, "uniform_alpha", budget)?;
    let c = counted(&mut r, g, &gap.uniform_clique_independent, k, "uniform_clique_independent", budget)?;
    r.check(a == gap.uniform_alpha_value && c == gap.uniform_clique_independent_value, "values match the gap check");
    if let Err(why) = family_ok {
        r.unmet(why);
    } else if !gap.hypotheses_met {
        r.unmet(format!("needs k >= 3 and m >= k α_k = {}", k * gap.alpha_k));
    } else {
        r.check(gap.strict, format!("{a} < {c}"));
    }
    Ok(r)
}

/// Strict gap on `B_n`.
pub fn verify_t8(n: usize, m: u64, k: usize, budget: Budget) -> Result<VerificationReport> {
    let b = build_sperner(n)?;
    let family = if n >= 2 { Ok(()) } else { Err("needs n >= 2") };
    strict_gap("t8", &b.graph, m, k, json!({ "n": n, "m": m, "k": k }), family, budget)
}

/// Strict gap on a complete multipartite graph with a unique largest part.
pub fn verify_t9(sizes: Vec<usize>, m: u64, k: usize, budget: Budget) -> Result<VerificationReport> {
    let spec = MultipartiteSpec::new(sizes)?;
    let g = build_multipartite(&spec)?;
    let s = spec.sizes();
    let family = if s.len() >= 2 && s[0] > s[1] { Ok(()) } else { Err("needs a part strictly larger than the others") };
    strict_gap("t9", &g, m, k, json!({ "sizes": s, "m": m, "k": k }), family, budget)
}

/// Balanced weights minimize on an edgeless graph.
pub fn verify_lemma1(n: usize, m: u64, k: usize, budget: Budget) -> Result<VerificationReport> {
    let g = Graph::empty(n)?;
    let mut r = VerificationReport::new("lemma1", graph_instance(&g, json!({ "m": m, "k": k })));
    let best = brute(&mut r, &g, m, k, budget)?;
    let w = uniform_weighting(&g, &(0..n).collect::<Vec<_>>(), m)?;
    let value = count_cliques_formula(&g, &w, k)?;
    r.value("uniform", &value);
    r.check(value == best.min_value, "balanced value equals the minimum");
    Ok(r)
}

/// A weighting on an independent set is beaten by uniform on a largest one.
pub fn verify_lemma2(g: &Graph, w: &Weighting, k: usize) -> Result<VerificationReport> {
    w.check_against(g)?;
    let mut r = VerificationReport::new("lemma2", graph_instance(g, json!({ "weights": w.weights(), "k": k })));
    let support = w.support();
    if !is_independent(g, &support)? {
        r.unmet("the weighting is not supported on an independent set");
        return Ok(r);
    }
    let target = max_independent_set(g);
    let uniform = uniform_weighting(g, &target, w.total())?;
    let before = count_cliques_formula(g, w, k)?;
    let after = count_cliques_formula(g, &uniform, k)?;
    r.value("given", &before).value("uniform_alpha", &after);
    r.detail(format!("uniform on {target:?}: {:?}", uniform.weights()));
    r.check(after <= before, format!("{after} <= {before}"));
    Ok(r)
}

/// Simultaneous shift: conditions, clique injection and the inequality.
pub fn verify_lemma3(g: &Graph, w: &Weighting, spec: &ShiftSpec, mode: ShiftMode, k: usize, budget: Budget) -> Result<VerificationReport> {
    w.check_against(g)?;
    let mut r = VerificationReport::new(
        "lemma3",
        graph_instance(g, json!({ "weights": w.weights(), "A": spec.a(), "B": spec.b(), "mode": mode.as_str(), "k": k })),
    );
    let validation = validate_shift(g, w, spec, mode)?;
    r.value("a_independent", validation.a_independent);
    if !validation.is_valid() {
        for f in &validation.failures {
            r.detail(format!("{:?} fails at pair {} (vertex {:?})", f.condition, f.index, f.vertex));
        }
        r.unmet("shift conditions fail");
        return Ok(r);
    }
    let shifted = blowmin_core::shift::multi_shift(g, w, spec, mode)?;
    let before = count_cliques_formula(g, w, k)?;
    let after = count_cliques_formula(g, &shifted, k)?;
    r.value("before", &before).value("after", &after);
    r.detail(format!("shifted weighting {:?}", shifted.weights()));
    if w.total() as usize <= budget.max_blowup {
        let cert = build_injection_certificate(g, w, spec, mode, k)?;
        r.value("domain_cliques", &cert.domain_cliques).value("codomain_cliques", &cert.codomain_cliques);
        r.check(cert.phi_bijective, "φ is a bijection of blow-up vertices");
        r.check(cert.cliques_preserved, "φ maps k-cliques to k-cliques");
        r.check(cert.injective, "the induced clique map is injective");
    } else {
        r.detail(format!("certificate skipped: blow-up on {} vertices", w.total()));
    }
    r.check(after <= before, format!("{after} <= {before}"));
    Ok(r)
}

/// Saturating injection from level `r` of `B_n` into the adjacent level.
pub fn verify_lemma8(n: usize, level: usize, direction: LevelDirection) -> Result<VerificationReport> {
    let b = build_sperner(n)?;
    let mut r = VerificationReport::new("lemma8", json!({ "n": n, "r": level, "direction": direction.as_str() }));
    let matching = match hall_level_matching(&b, level, direction) {
        Ok(m) => m,
        Err(CoreError::HallPrecondition { .. }) => {
            r.unmet(format!("level {level} of B_{n} is not on the {direction} side of n/2"));
            return Ok(r);
        }
        Err(e) => return Err(e.into()),
    };
    r.value("level_size", b.level_vertices(level).len()).value("matched", matching.pairs.len());
    for &(s, t) in &matching.pairs {
        r.detail(format!("{} -> {}", b.graph.label(s).unwrap_or("?"), b.graph.label(t).unwrap_or("?")));
    }
    r.check(matching.is_saturating(&b), "every set of the level is matched to a distinct neighbour");
    Ok(r)
}
