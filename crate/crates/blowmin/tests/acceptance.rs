//! End-to-end acceptance run: one PASS/FAIL line per criterion.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use blowmin::verify::{prism, reproduce_counterexample1, reproduce_figure1, verify_t8, Budget};
use blowmin_core::blowup::{count_cliques_formula, count_cliques_oracle, uniform_weighting};
use blowmin_core::families::{
    build_multipartite, build_sperner, hall_level_matching, integer_partitions, middle_level, nonisomorphic_graphs,
    LevelDirection, MultipartiteSpec,
};
use blowmin_core::graph::{all_max_independent_sets, is_chordal, is_k_clique_independent};
use blowmin_core::search::{
    all_uniform_weightings, brute_force_min, conjecture_sweep, minimize_chordal, minimize_multipartite,
    minimize_sperner, SearchBudget, SweepOutcome,
};
use blowmin_core::shift::{build_injection_certificate, multi_shift, validate_shift};
use blowmin_core::{BigCount, Graph, ShiftMode, ShiftSpec, ShiftTrace, Weighting};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn w(v: &[u64]) -> Weighting {
    Weighting::new(v.to_vec()).unwrap()
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let t = start.elapsed();
    ensure(t < limit, || format!("took {t:?}, limit {limit:?}"))
}

fn path_counterexample() -> Outcome {
    let start = Instant::now();
    let g = Graph::path(3).unwrap();
    let expected = [(3u64, 39u64, 21u64), (4, 139, 71), (5, 503, 253)];
    for (k, uniform, shifted) in expected {
        let c = BigCount::binomial(2 * k, k).to_u128().unwrap() as u64;
        ensure(uniform == 2 * c - 1 && shifted == c + 1, || format!("closed forms disagree at k={k}"))?;
        let wu = w(&[k, k, k]);
        let ws = w(&[2 * k, 0, k]);
        let ku = k as usize;
        for (name, value) in [
            ("formula (k,k,k)", count_cliques_formula(&g, &wu, ku)),
            ("oracle (k,k,k)", count_cliques_oracle(&g, &wu, ku)),
        ] {
            ensure(value.as_ref().is_ok_and(|v| *v == uniform), || format!("k={k} {name}: {value:?}"))?;
        }
        for (name, value) in [
            ("formula (2k,0,k)", count_cliques_formula(&g, &ws, ku)),
            ("oracle (2k,0,k)", count_cliques_oracle(&g, &ws, ku)),
        ] {
            ensure(value.as_ref().is_ok_and(|v| *v == shifted), || format!("k={k} {name}: {value:?}"))?;
        }
        let report = reproduce_counterexample1(ku, Budget::default()).map_err(|e| e.to_string())?;
        ensure(report.passed(), || format!("report for k={k} did not pass"))?;
    }
    within(start, Duration::from_secs(1))?;
    Ok("39/21, 139/71, 503/253 by formula and explicit blow-up".into())
}

fn prism_sequence() -> Outcome {
    let start = Instant::now();
    let g = prism();
    let steps = [(w(&[1, 1, 1, 1, 1, 1]), 2u64), (w(&[2, 0, 1, 1, 1, 1]), 3), (w(&[1, 0, 1, 1, 2, 1]), 4)];
    for (x, expected) in &steps {
        let f = count_cliques_formula(&g, x, 3).map_err(|e| e.to_string())?;
        let o = count_cliques_oracle(&g, x, 3).map_err(|e| e.to_string())?;
        ensure(f == *expected && o == *expected, || format!("{:?}: formula {f}, oracle {o}, want {expected}", x.weights()))?;
    }
    let report = reproduce_figure1(Budget::default()).map_err(|e| e.to_string())?;
    ensure(report.passed(), || "figure report did not pass".into())?;
    within(start, Duration::from_secs(1))?;
    Ok("π_3 = 2, 3, 4".into())
}

fn random_formula_vs_oracle() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(20_241_019);
    let trials = 10_000;
    for _ in 0..trials {
        let n = rng.gen_range(1..=6);
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                if rng.gen_bool(0.5) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edges(n, &edges).unwrap();
        let m = rng.gen_range(0..=10);
        let mut weights = vec![0u64; n];
        for _ in 0..m {
            weights[rng.gen_range(0..n)] += 1;
        }
        let x = w(&weights);
        let k = rng.gen_range(1..=5);
        let f = count_cliques_formula(&g, &x, k).map_err(|e| e.to_string())?;
        let o = count_cliques_oracle(&g, &x, k).map_err(|e| e.to_string())?;
        ensure(f == o, || format!("{edges:?} {weights:?} k={k}: formula {f}, oracle {o}"))?;
    }
    within(start, Duration::from_secs(300))?;
    Ok(format!("{trials} random instances, no discrepancies"))
}

fn sperner_middle_level() -> Outcome {
    let start = Instant::now();
    let mut checked = 0;
    for n in 2..=3 {
        let b = build_sperner(n).unwrap();
        let mid = middle_level(&b);
        for m in 1..=6 {
            for k in 2..=3 {
                let best = brute_force_min(&b.graph, m, k).map_err(|e| e.to_string())?;
                let uniform = uniform_weighting(&b.graph, &mid, m).unwrap();
                let value = count_cliques_formula(&b.graph, &uniform, k).unwrap();
                ensure(value == best.min_value, || format!("n={n} m={m} k={k}: {value} vs {}", best.min_value))?;
                for s in starts(&b.graph, m) {
                    let t = minimize_sperner(&b, &s, k).map_err(|e| e.to_string())?;
                    check_trace(&t, &best.min_value, &format!("B_{n} m={m} k={k}"))?;
                    ensure(t.final_weighting.is_uniform_on(&mid), || format!("B_{n} m={m} k={k}: not uniform on the middle"))?;
                }
                checked += 1;
            }
        }
    }
    within(start, Duration::from_secs(600))?;
    Ok(format!("{checked} instances, shifting traces from every single-vertex start"))
}

/// All weight on each single vertex, plus uniform on all vertices.
fn starts(g: &Graph, m: u64) -> Vec<Weighting> {
    let n = g.n();
    let mut out: Vec<Weighting> = (0..n)
        .map(|v| {
            let mut x = vec![0; n];
            x[v] = m;
            w(&x)
        })
        .collect();
    out.push(uniform_weighting(g, &(0..n).collect::<Vec<_>>(), m).unwrap());
    out
}

fn check_trace(t: &ShiftTrace, min: &BigCount, what: &str) -> Result<(), String> {
    ensure(t.is_monotone(), || format!("{what}: trace not monotone"))?;
    ensure(t.final_value == *min, || format!("{what}: final {} vs minimum {min}", t.final_value))
}

fn structured_minimizers() -> Outcome {
    let start = Instant::now();
    let mut traces = 0;
    for n in 1..=5 {
        for sizes in integer_partitions(n) {
            let spec = MultipartiteSpec::new(sizes).unwrap();
            let g = build_multipartite(&spec).unwrap();
            for m in 1..=6 {
                for k in 2..=3 {
                    let best = brute_force_min(&g, m, k).map_err(|e| e.to_string())?;
                    for s in starts(&g, m) {
                        let t = minimize_multipartite(&g, &spec, &s, k).map_err(|e| e.to_string())?;
                        check_trace(&t, &best.min_value, &format!("parts {:?} m={m} k={k}", spec.sizes()))?;
                        traces += 1;
                    }
                }
            }
        }
        for g in nonisomorphic_graphs(n).into_iter().filter(is_chordal) {
            for m in 1..=6 {
                for k in 2..=3 {
                    let best = brute_force_min(&g, m, k).map_err(|e| e.to_string())?;
                    for s in starts(&g, m) {
                        let t = minimize_chordal(&g, &s, k).map_err(|e| e.to_string())?;
                        check_trace(&t, &best.min_value, &format!("chordal {:?} m={m} k={k}", g.edges()))?;
                        traces += 1;
                    }
                }
            }
        }
    }
    within(start, Duration::from_secs(900))?;
    Ok(format!("{traces} monotone traces ending at the exact minimum"))
}

fn edge_minimum_uniform_alpha() -> Outcome {
    let mut checked = 0;
    for n in 1..=4 {
        for g in nonisomorphic_graphs(n) {
            for m in 1..=6 {
                let best = brute_force_min(&g, m, 2).map_err(|e| e.to_string())?;
                let attained = all_max_independent_sets(&g).iter().any(|set| {
                    all_uniform_weightings(&g, set, m)
                        .unwrap()
                        .iter()
                        .any(|x| count_cliques_formula(&g, x, 2).unwrap() == best.min_value)
                });
                ensure(attained, || format!("{:?} m={m}", g.edges()))?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} instances"))
}

/// α_k by trying every vertex subset.
fn alpha_k_exhaustive(g: &Graph, k: usize) -> usize {
    (0u64..1 << g.n())
        .filter_map(|mask| {
            let set: Vec<usize> = (0..g.n()).filter(|&v| mask >> v & 1 == 1).collect();
            is_k_clique_independent(g, &set, k).unwrap().then_some(set.len())
        })
        .max()
        .unwrap()
}

fn strict_gaps() -> Outcome {
    let budget = Budget::default();
    let r = verify_t8(2, 9, 3, budget).map_err(|e| e.to_string())?;
    let pair = (r.values["uniform_alpha"].as_str(), r.values["uniform_clique_independent"].as_str());
    let oracle = (r.values["uniform_alpha_oracle"].as_str(), r.values["uniform_clique_independent_oracle"].as_str());
    ensure(r.passed() && pair == ("14", "39") && oracle == pair, || format!("B_2: {:?} {:?}", r.verdict, r.values))?;
    let b3 = build_sperner(3).unwrap();
    let alpha_3 = alpha_k_exhaustive(&b3.graph, 3);
    let m = 3 * alpha_3 as u64;
    let r = verify_t8(3, m, 3, budget).map_err(|e| e.to_string())?;
    ensure(r.values["alpha_k"] == alpha_3.to_string(), || "α_3 mismatch".into())?;
    ensure(r.values.contains_key("uniform_alpha_oracle"), || "B_3 values not recomputed by the oracle".into())?;
    ensure(r.passed(), || format!("B_3: {:?} {:?}", r.verdict, r.details))?;
    Ok(format!(
        "B_2: 14 < 39; B_3 with α_3 = {alpha_3}, m = {m}: {} < {}",
        r.values["uniform_alpha"], r.values["uniform_clique_independent"]
    ))
}

fn shift_certificates() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut valid = 0;
    let mut attempts = 0;
    while valid < 200 {
        attempts += 1;
        ensure(attempts < 500_000, || format!("only {valid} valid specs generated"))?;
        let n = rng.gen_range(2..=7);
        let p = rng.gen_range(0.3..0.9);
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edges(n, &edges).unwrap();
        let m = rng.gen_range(1..=12);
        let mut weights = vec![0u64; n];
        for _ in 0..m {
            weights[rng.gen_range(0..n)] += 1;
        }
        let x = w(&weights);
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(&mut rng);
        let r = rng.gen_range(1..=n / 2);
        let spec = ShiftSpec::new(order[..r].to_vec(), order[r..2 * r].to_vec()).unwrap();
        let mode = if rng.gen_bool(0.5) { ShiftMode::Lemma3 } else { ShiftMode::Lemma4 };
        if !validate_shift(&g, &x, &spec, mode).unwrap().is_valid() {
            continue;
        }
        valid += 1;
        let shifted = multi_shift(&g, &x, &spec, mode).unwrap();
        for k in 2..=4 {
            let cert = build_injection_certificate(&g, &x, &spec, mode, k).map_err(|e| e.to_string())?;
            let what = || format!("{edges:?} {weights:?} {spec:?} {mode:?} k={k}");
            ensure(cert.phi_bijective && cert.cliques_preserved && cert.injective, what)?;
            let before = count_cliques_formula(&g, &x, k).unwrap();
            let after = count_cliques_formula(&g, &shifted, k).unwrap();
            ensure(after <= before, what)?;
        }
    }
    Ok(format!("{valid} valid specs, k = 2..4, all certified"))
}

fn level_matchings() -> Outcome {
    let mut levels = 0;
    for n in 1..=5 {
        let b = build_sperner(n).unwrap();
        for r in 0..=n {
            for direction in [LevelDirection::Up, LevelDirection::Down] {
                let applies = match direction {
                    LevelDirection::Up => 2 * r < n,
                    LevelDirection::Down => 2 * r > n,
                };
                let result = hall_level_matching(&b, r, direction);
                if !applies {
                    ensure(result.is_err(), || format!("n={n} r={r} {direction}: accepted outside hypotheses"))?;
                    continue;
                }
                let matching = result.map_err(|e| e.to_string())?;
                let sources = b.level_vertices(r);
                let mut images: Vec<usize> = matching.pairs.iter().map(|p| p.1).collect();
                images.sort_unstable();
                images.dedup();
                let nested = matching.pairs.iter().all(|&(s, t)| {
                    let (x, y) = (b.subset_mask(s), b.subset_mask(t));
                    (x.count_ones() as i64 - y.count_ones() as i64).abs() == 1 && (x & y == x.min(y))
                });
                ensure(
                    matching.pairs.len() == sources.len() && images.len() == sources.len() && nested,
                    || format!("n={n} r={r} {direction}"),
                )?;
                ensure(matching.is_saturating(&b), || format!("n={n} r={r} {direction}: saturation check"))?;
                levels += 1;
            }
        }
    }
    Ok(format!("{levels} levels saturated"))
}

fn conjecture_sweep_small() -> Outcome {
    let graphs: Vec<Graph> = (1..=4).flat_map(nonisomorphic_graphs).filter(Graph::is_connected).collect();
    let report = conjecture_sweep(&graphs, 1..=6, 2..=3, SearchBudget::default()).map_err(|e| e.to_string())?;
    ensure(report.skipped() == 0, || "instances skipped".into())?;
    ensure(report.violations().is_empty(), || format!("{} violations", report.violations().len()))?;
    for row in &report.rows {
        let SweepOutcome::Evaluated(f) = &row.outcome else { continue };
        let g = &graphs[row.graph];
        let attained = all_max_independent_sets(g).iter().any(|set| {
            all_uniform_weightings(g, set, row.m)
                .unwrap()
                .iter()
                .any(|x| count_cliques_formula(g, x, row.k).unwrap() == f.min_value)
        });
        ensure(attained == f.uniform_alpha_minimal, || format!("flag mismatch at {:?} m={} k={}", g.edges(), row.m, row.k))?;
    }
    Ok(format!(
        "{} instances, 0 violations, {} flagged as not uniform-α minimal",
        report.rows.len(),
        report.non_uniform_alpha().len()
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("path counterexample values", path_counterexample),
        ("prism shift sequence", prism_sequence),
        ("formula matches explicit blow-up", random_formula_vs_oracle),
        ("Sperner middle level is minimal", sperner_middle_level),
        ("multipartite and chordal minimizers", structured_minimizers),
        ("edge minimum is uniform-α", edge_minimum_uniform_alpha),
        ("strict gaps on B_2 and B_3", strict_gaps),
        ("shift certificates", shift_certificates),
        ("level matchings saturate", level_matchings),
        ("conjecture sweep", conjecture_sweep_small),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        match outcome {
            Ok(msg) => println!("PASS {:>2} {name}: {msg} ({elapsed:.2?})", i + 1),
            Err(msg) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {msg} ({elapsed:.2?})", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
