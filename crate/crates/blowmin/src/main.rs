use std::path::{Path, PathBuf};
use std::process::ExitCode;

use blowmin::formats::{parse_sizes, parse_weights, read_graph, read_shift, to_json_string, write_output, GraphFile};
use blowmin::report::{graph_instance, search_json, sweep_csv, sweep_json, trace_json};
use blowmin::{verify, Budget, Error, Result};
use blowmin_core::blowup::{count_cliques_formula, uniform_weighting, DEFAULT_MAX_BLOWUP};
use blowmin_core::families::{
    build_multipartite, build_sperner, nonisomorphic_graphs, recognize_multipartite, LevelDirection, MultipartiteSpec,
};
use blowmin_core::search::{
    brute_force_min_with, conjecture_sweep, minimize_chordal, minimize_multipartite, minimize_multipartite_parts,
    minimize_sperner, SearchBudget, DEFAULT_MAX_WEIGHTINGS, MINIMIZER_CAP,
};
use blowmin_core::shift::{multi_shift, validate_shift};
use blowmin_core::{Graph, Weighting};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

#[derive(Parser)]
#[command(name = "blowmin", version, about = "Minimize k-clique counts of weighted graph blow-ups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Largest number of weightings the brute-force search may enumerate.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_WEIGHTINGS)]
    max_weightings: u64,
    /// Largest blow-up built explicitly for oracle counts and certificates.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_BLOWUP)]
    max_blowup: usize,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Emit family graphs in the graph JSON format.
    Family {
        #[command(subcommand)]
        family: Family,
    },
    /// Apply a simultaneous shift and report its validation and counts.
    Shift {
        #[arg(long)]
        graph: PathBuf,
        /// Inline `3,0,3` or a weighting JSON file.
        #[arg(long)]
        weights: String,
        /// Shift spec JSON file.
        #[arg(long)]
        spec: PathBuf,
        #[arg(long, default_value_t = 3)]
        k: usize,
    },
    /// Minimize π_k over all m-weightings, exhaustively or by shifting.
    Minimize {
        #[arg(long, value_enum)]
        method: Method,
        #[arg(long)]
        graph: Option<PathBuf>,
        /// Sperner graph order for `--method sperner`.
        #[arg(long)]
        n: Option<usize>,
        /// Part sizes for `--method multipartite`, e.g. `2,1`.
        #[arg(long)]
        sizes: Option<String>,
        #[arg(long)]
        m: Option<u64>,
        #[arg(long)]
        k: usize,
        /// Starting weighting for the shifting methods; defaults to uniform
        /// on all vertices.
        #[arg(long)]
        weights: Option<String>,
    },
    /// Check one result on one instance.
    Verify {
        #[arg(value_enum)]
        claim: Claim,
        #[arg(long)]
        graph: Option<PathBuf>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        sizes: Option<String>,
        #[arg(long)]
        m: Option<u64>,
        #[arg(long)]
        k: Option<usize>,
        /// Level for lemma8.
        #[arg(long)]
        r: Option<usize>,
        #[arg(long, value_enum)]
        direction: Option<Direction>,
        #[arg(long)]
        weights: Option<String>,
        /// Shift spec JSON file for lemma3.
        #[arg(long)]
        spec: Option<PathBuf>,
    },
    /// Recompute closed-form values.
    Reproduce {
        #[arg(value_enum)]
        claim: Reproduction,
        #[arg(long, default_value_t = 3)]
        k: usize,
        #[arg(long, default_value_t = 7)]
        m: u64,
        #[arg(long, default_value_t = 3)]
        n: usize,
    },
    /// Compare uniform weightings on k-clique independent sets with the
    /// exact minimum over a corpus.
    Sweep {
        /// Directory of graph JSON files; defaults to all connected graphs
        /// on at most `--n-max` vertices.
        #[arg(long)]
        corpus: Option<PathBuf>,
        #[arg(long, default_value_t = 4)]
        n_max: usize,
        #[arg(long, default_value_t = 6)]
        m_max: u64,
        #[arg(long, default_value_t = 3)]
        k_max: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
}

#[derive(Subcommand)]
enum Family {
    Sperner {
        #[arg(long)]
        n: usize,
    },
    Multipartite {
        #[arg(long)]
        sizes: String,
    },
    /// One graph per isomorphism class; with `--out DIR`, one file each.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        connected: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Brute,
    Sperner,
    Multipartite,
    Chordal,
}

#[derive(Clone, Copy, ValueEnum)]
enum Claim {
    T3,
    T4,
    T5,
    T6,
    T8,
    T9,
    Lemma1,
    Lemma2,
    Lemma3,
    Lemma8,
}

#[derive(Clone, Copy, ValueEnum)]
enum Reproduction {
    Counterexample1,
    Figure1,
    #[value(name = "remark2_counts", alias = "remark2-counts")]
    Remark2Counts,
}

#[derive(Clone, Copy, ValueEnum)]
enum Direction {
    Up,
    Down,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

fn need<T>(value: Option<T>, flag: &str) -> Result<T> {
    value.ok_or_else(|| Error::Usage(format!("--{flag} is required here")))
}

fn run(cli: Cli) -> Result<i32> {
    let budget = Budget {
        max_weightings: cli.max_weightings,
        max_blowup: cli.max_blowup,
    };
    let out = cli.out.as_deref();
    match cli.command {
        Command::Family { family } => cmd_family(family, out),
        Command::Shift { graph, weights, spec, k } => cmd_shift(&graph, &weights, &spec, k, out),
        Command::Minimize {
            method,
            graph,
            n,
            sizes,
            m,
            k,
            weights,
        } => cmd_minimize(method, graph, n, sizes, m, k, weights, budget, out),
        Command::Verify {
            claim,
            graph,
            n,
            sizes,
            m,
            k,
            r,
            direction,
            weights,
            spec,
        } => {
            let graph = graph.map(|p| read_graph(&p)).transpose()?;
            let weights = weights.map(|w| parse_weights(&w)).transpose()?;
            let sizes = sizes.map(|s| parse_sizes(&s)).transpose()?;
            let report = match claim {
                Claim::T3 => verify::verify_t3(&need(graph, "graph")?, need(m, "m")?, budget)?,
                Claim::T4 => verify::verify_t4(need(n, "n")?, need(m, "m")?, need(k, "k")?, weights, budget)?,
                Claim::T5 => verify::verify_t5(need(sizes, "sizes")?, need(m, "m")?, need(k, "k")?, weights, budget)?,
                Claim::T6 => verify::verify_t6(&need(graph, "graph")?, need(m, "m")?, need(k, "k")?, weights, budget)?,
                Claim::T8 => verify::verify_t8(need(n, "n")?, need(m, "m")?, need(k, "k")?, budget)?,
                Claim::T9 => verify::verify_t9(need(sizes, "sizes")?, need(m, "m")?, need(k, "k")?, budget)?,
                Claim::Lemma1 => verify::verify_lemma1(need(n, "n")?, need(m, "m")?, need(k, "k")?, budget)?,
                Claim::Lemma2 => verify::verify_lemma2(&need(graph, "graph")?, &need(weights, "weights")?, need(k, "k")?)?,
                Claim::Lemma3 => {
                    let (spec, mode) = read_shift(&need(spec, "spec")?)?;
                    verify::verify_lemma3(&need(graph, "graph")?, &need(weights, "weights")?, &spec, mode, need(k, "k")?, budget)?
                }
                Claim::Lemma8 => {
                    let direction = match need(direction, "direction")? {
                        Direction::Up => LevelDirection::Up,
                        Direction::Down => LevelDirection::Down,
                    };
                    verify::verify_lemma8(need(n, "n")?, need(r, "r")?, direction)?
                }
            };
            write_output(out, &to_json_string(&report)?)?;
            Ok(report.exit_code())
        }
        Command::Reproduce { claim, k, m, n } => {
            let report = match claim {
                Reproduction::Counterexample1 => verify::reproduce_counterexample1(k, budget)?,
                Reproduction::Figure1 => verify::reproduce_figure1(budget)?,
                Reproduction::Remark2Counts => verify::reproduce_remark2(m, n, k)?,
            };
            write_output(out, &to_json_string(&report)?)?;
            Ok(report.exit_code())
        }
        Command::Sweep {
            corpus,
            n_max,
            m_max,
            k_max,
            format,
        } => cmd_sweep(corpus.as_deref(), n_max, m_max, k_max, format, budget, out),
    }
}

fn cmd_family(family: Family, out: Option<&Path>) -> Result<i32> {
    let g = match family {
        Family::Sperner { n } => build_sperner(n)?.graph,
        Family::Multipartite { sizes } => build_multipartite(&MultipartiteSpec::new(parse_sizes(&sizes)?)?)?,
        Family::Enumerate { n, connected } => {
            if n > 6 {
                return Err(Error::Usage("enumeration is limited to 6 vertices".into()));
            }
            let graphs: Vec<Graph> = nonisomorphic_graphs(n)
                .into_iter()
                .filter(|g| !connected || g.is_connected())
                .collect();
            match out {
                Some(dir) => {
                    std::fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
                    for (i, g) in graphs.iter().enumerate() {
                        let path = dir.join(format!("n{n}_{i:03}.json"));
                        write_output(Some(&path), &to_json_string(&GraphFile::from_graph(g))?)?;
                    }
                }
                None => {
                    let files: Vec<GraphFile> = graphs.iter().map(GraphFile::from_graph).collect();
                    write_output(None, &to_json_string(&files)?)?;
                }
            }
            return Ok(0);
        }
    };
    write_output(out, &to_json_string(&GraphFile::from_graph(&g))?)?;
    Ok(0)
}

fn cmd_shift(graph: &Path, weights: &str, spec: &Path, k: usize, out: Option<&Path>) -> Result<i32> {
    let g = read_graph(graph)?;
    let w = parse_weights(weights)?;
    let (spec, mode) = read_shift(spec)?;
    w.check_against(&g)?;
    let validation = validate_shift(&g, &w, &spec, mode)?;
    let failures: Vec<_> = validation
        .failures
        .iter()
        .map(|f| json!({ "condition": format!("{:?}", f.condition), "index": f.index, "vertex": f.vertex }))
        .collect();
    let mut report = json!({
        "instance": graph_instance(&g, json!({ "weights": w.weights(), "A": spec.a(), "B": spec.b(), "mode": mode.as_str(), "k": k })),
        "validation": {
            "mode": mode.as_str(),
            "edges": validation.cond_edges,
            "b_condition": validation.cond_b,
            "neighborhood": validation.cond_neighborhood,
            "a_independent": validation.a_independent,
            "valid": validation.is_valid(),
            "failures": failures,
        },
        "before": count_cliques_formula(&g, &w, k)?.to_string(),
    });
    let code = if validation.is_valid() {
        let shifted = multi_shift(&g, &w, &spec, mode)?;
        report["after"] = json!(count_cliques_formula(&g, &shifted, k)?.to_string());
        report["shifted"] = json!(shifted.weights());
        0
    } else {
        1
    };
    write_output(out, &to_json_string(&report)?)?;
    Ok(code)
}

#[allow(clippy::too_many_arguments)]
fn cmd_minimize(
    method: Method,
    graph: Option<PathBuf>,
    n: Option<usize>,
    sizes: Option<String>,
    m: Option<u64>,
    k: usize,
    weights: Option<String>,
    budget: Budget,
    out: Option<&Path>,
) -> Result<i32> {
    let start = weights.map(|w| parse_weights(&w)).transpose()?;
    let m = match (m, &start) {
        (Some(m), Some(w)) if w.total() != m => {
            return Err(Error::Usage(format!("--weights sums to {} but --m is {m}", w.total())))
        }
        (Some(m), _) => m,
        (None, Some(w)) => w.total(),
        (None, None) => return Err(Error::Usage("--m or --weights is required".into())),
    };
    let params = json!({ "m": m, "k": k });
    let start_for = |g: &Graph| -> Result<Weighting> {
        match &start {
            Some(w) => Ok(w.clone()),
            None => Ok(uniform_weighting(g, &(0..g.n()).collect::<Vec<_>>(), m)?),
        }
    };
    let report = match method {
        Method::Brute => {
            let g = read_graph(&need(graph, "graph")?)?;
            let search = SearchBudget {
                max_weightings: budget.max_weightings,
                minimizer_cap: MINIMIZER_CAP,
            };
            let r = brute_force_min_with(&g, m, k, search)?;
            search_json(graph_instance(&g, params), &r)
        }
        Method::Sperner => {
            let b = build_sperner(need(n, "n")?)?;
            let t = minimize_sperner(&b, &start_for(&b.graph)?, k)?;
            trace_json(graph_instance(&b.graph, params), &t)
        }
        Method::Multipartite => match (sizes, graph) {
            (Some(sizes), _) => {
                let spec = MultipartiteSpec::new(parse_sizes(&sizes)?)?;
                let g = build_multipartite(&spec)?;
                let t = minimize_multipartite(&g, &spec, &start_for(&g)?, k)?;
                trace_json(graph_instance(&g, params), &t)
            }
            (None, Some(path)) => {
                let g = read_graph(&path)?;
                let parts = recognize_multipartite(&g).ok_or(blowmin_core::Error::MultipartiteMismatch)?;
                let t = minimize_multipartite_parts(&g, &parts, &start_for(&g)?, k)?;
                trace_json(graph_instance(&g, params), &t)
            }
            (None, None) => return Err(Error::Usage("--sizes or --graph is required".into())),
        },
        Method::Chordal => {
            let g = read_graph(&need(graph, "graph")?)?;
            let t = minimize_chordal(&g, &start_for(&g)?, k)?;
            trace_json(graph_instance(&g, params), &t)
        }
    };
    write_output(out, &to_json_string(&report)?)?;
    Ok(0)
}

fn cmd_sweep(
    corpus: Option<&Path>,
    n_max: usize,
    m_max: u64,
    k_max: usize,
    format: Format,
    budget: Budget,
    out: Option<&Path>,
) -> Result<i32> {
    let (graphs, names) = match corpus {
        Some(dir) => {
            let mut files: Vec<PathBuf> = std::fs::read_dir(dir)
                .map_err(|e| Error::io(dir, e))?
                .map(|entry| entry.map(|e| e.path()).map_err(|e| Error::io(dir, e)))
                .collect::<Result<Vec<_>>>()?
                .into_iter()
                .filter(|p| p.extension().is_some_and(|x| x == "json"))
                .collect();
            files.sort();
            let graphs = files.iter().map(|p| read_graph(p)).collect::<Result<Vec<_>>>()?;
            let names = files
                .iter()
                .map(|p| p.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default())
                .collect();
            (graphs, names)
        }
        None => {
            if n_max > 6 {
                return Err(Error::Usage("--n-max is limited to 6".into()));
            }
            let mut graphs = Vec::new();
            let mut names = Vec::new();
            for n in 1..=n_max {
                for (i, g) in nonisomorphic_graphs(n).into_iter().filter(Graph::is_connected).enumerate() {
                    graphs.push(g);
                    names.push(format!("n{n}_{i:03}"));
                }
            }
            (graphs, names)
        }
    };
    if k_max < 2 {
        return Err(Error::Usage("--k-max must be at least 2".into()));
    }
    let search = SearchBudget {
        max_weightings: budget.max_weightings,
        minimizer_cap: MINIMIZER_CAP,
    };
    let report = conjecture_sweep(&graphs, 1..=m_max, 2..=k_max, search)?;
    let text = match format {
        Format::Csv => sweep_csv(&report, &graphs, &names)?,
        Format::Json => to_json_string(&sweep_json(&report, &graphs, &names))?,
    };
    write_output(out, &text)?;
    Ok(if report.violations().is_empty() { 0 } else { 1 })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
