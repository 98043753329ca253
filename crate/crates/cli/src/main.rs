//! `turanlab`: scriptable front end over turanlab-core.
//!
//! Graph inputs are graph6 lines (standard input or `--input`). Reports are
//! single-line JSON objects carrying a `schema` field, or CSV where offered.
//! Exit status is 0 on success, 1 on a domain error (JSON on standard error)
//! and 2 on a usage error.

use std::fs;
use std::io::{self, BufWriter, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde::Serialize;
use serde_json::{json, Value};

use turanlab_core::{
    apex_cliques, apex_mixed, audit_structure, base_plus_k4, build_gf, build_gf_i, chvatal_erdos_report,
    claw2_report, claw_report, classify_with, clique_union, contains_linear_forest, count_cliques,
    dirac_report, disintegrate, enumerate_with, gf_formula, path_union, reconcile, sample_apex_mixed_audit,
    theorem_value, threshold_n, Base, EnumFilter, EnumOptions, Error, ExtremalRecord, Graph, LemmaReport,
    LinearForest,
};

const DEFAULT_SEED: u64 = 20240601;

#[derive(Parser)]
#[command(name = "turanlab", version, about = "Generalized Turán numbers of linear forests")]
struct Cli {
    /// Worker threads; 1 keeps every run bitwise reproducible.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print δ_F = Σ⌊ℓ_i/2⌋ − 1.
    Delta {
        #[arg(long)]
        forest: LinearForest,
    },
    /// Build a named construction.
    Construct {
        #[command(subcommand)]
        kind: Construction,
        #[arg(long, value_enum, default_value_t = GraphFormat::Graph6, global = true)]
        format: GraphFormat,
    },
    /// Count K_s in G_F(n), or in each input graph.
    Count {
        #[arg(long)]
        s: usize,
        #[arg(long, requires = "n")]
        forest: Option<LinearForest>,
        #[arg(long, requires = "forest")]
        n: Option<usize>,
        #[arg(long, conflicts_with = "forest")]
        input: Option<PathBuf>,
    },
    /// Closed-form 𝒩_s(G_F(n)), plus the theorem value when ex(n, K_s, P_ℓ) is supplied.
    Formula {
        #[arg(long)]
        forest: LinearForest,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        s: usize,
        /// ex(n, K_s, P_ℓ) for the longest path ℓ of the forest.
        #[arg(long)]
        path_ex: Option<BigUint>,
    },
    /// Decide whether each input graph contains the forest.
    Contains {
        #[arg(long)]
        forest: LinearForest,
        /// Include the vertex sequences of the paths found.
        #[arg(long)]
        witness: bool,
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Disintegration trace down to the δ_F-core of each input graph.
    Core {
        #[arg(long)]
        forest: LinearForest,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Emit every graph of order n passing the filters, one graph6 line each.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        filter: FilterArgs,
        #[arg(long)]
        budget: Option<u64>,
        /// Only graphs to which no edge can be added within the filters.
        #[arg(long)]
        edge_maximal: bool,
    },
    /// Exhaustive ex(n, K_s, F) with every extremal graph.
    Extremal {
        #[arg(long)]
        forest: LinearForest,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long, value_enum, default_value_t = TableFormat::Json)]
        format: TableFormat,
    },
    /// Brute force against the theorem value over a range of n.
    Reconcile {
        #[arg(long)]
        forest: LinearForest,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        from: usize,
        #[arg(long)]
        to: usize,
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long, value_enum, default_value_t = TableFormat::Json)]
        format: TableFormat,
    },
    /// Structural verdict for each input graph.
    Classify {
        #[arg(long)]
        forest: LinearForest,
        /// Classify even when n < 2|F|.
        #[arg(long)]
        any_order: bool,
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Classify every connected F-free graph of order n with minimum degree ≥ δ_F,
    /// or random spanning subgraphs of the mixed apex family with `--sample`.
    Audit {
        #[arg(long)]
        forest: LinearForest,
        #[arg(long)]
        n: usize,
        #[arg(long, conflicts_with = "sample")]
        budget: Option<u64>,
        /// Number of random samples; F must be 2P_ℓ.
        #[arg(long)]
        sample: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Exhaustive checks of the path lemmas.
    LemmaCheck {
        #[arg(value_enum)]
        which: Lemma,
        #[arg(long, default_value_t = 16)]
        max_order: usize,
        #[arg(long, value_enum, default_value_t = ReportFormat::Table)]
        format: ReportFormat,
    },
}

#[derive(Subcommand)]
enum Construction {
    /// G_F(n).
    Gf {
        #[arg(long)]
        forest: LinearForest,
        #[arg(long)]
        n: usize,
    },
    /// G_F(n, i) for F = kP_3 with the greedy cross-edge attachment.
    GfI {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        i: usize,
    },
    /// K_1 + tK_{ℓ−1}.
    ApexCliques {
        #[arg(long)]
        ell: usize,
        #[arg(long)]
        t: usize,
    },
    /// K_1 + (t₁K_{ℓ−1} ∪ t₂K_{ℓ−2}).
    ApexMixed {
        #[arg(long)]
        ell: usize,
        #[arg(long)]
        t1: usize,
        #[arg(long)]
        t2: usize,
    },
    /// K_2 + tK_4 or E_2 + tK_4.
    BasePlusK4 {
        #[arg(long)]
        base: Base,
        #[arg(long)]
        t: usize,
    },
    /// Disjoint copies of K_{ℓ−1} covering n vertices.
    CliqueUnion {
        #[arg(long)]
        ell: usize,
        #[arg(long)]
        n: usize,
    },
    /// The forest itself as a graph.
    PathUnion {
        #[arg(long)]
        forest: LinearForest,
    },
}

#[derive(Args)]
struct FilterArgs {
    #[arg(long)]
    connected: bool,
    #[arg(long)]
    min_degree: Option<usize>,
    #[arg(long)]
    f_free: Option<LinearForest>,
    #[arg(long)]
    max_edges: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Graph6,
    Dot,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Table,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Lemma {
    Claw,
    Claw2,
    Dirac,
    ChvatalErdos,
}

/// Failures reported as JSON on standard error with exit status 1.
enum Failure {
    Domain(Error),
    Io(io::Error),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl Failure {
    fn report(&self) -> Value {
        let (code, message) = match self {
            Failure::Domain(e) => (e.code(), e.to_string()),
            Failure::Io(e) => ("io", e.to_string()),
            Failure::Check(m) => ("check_failed", m.clone()),
        };
        json!({ "schema": "turanlab.error/1", "error": code, "message": message })
    }
}

type Outcome = std::result::Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(cli.threads.max(1)).build_global() {
        eprintln!("{}", Failure::Check(e.to_string()).report());
        return ExitCode::from(1);
    }
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(cli.command, &mut out).and_then(|()| out.flush().map_err(Failure::from));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(f) => {
            let _ = out.flush();
            eprintln!("{}", f.report());
            ExitCode::from(1)
        }
    }
}

fn emit(out: &mut impl Write, value: &impl Serialize) -> Outcome {
    serde_json::to_writer(&mut *out, value).map_err(|e| Failure::Io(e.into()))?;
    writeln!(out)?;
    Ok(())
}

fn read_graphs(input: Option<&PathBuf>) -> std::result::Result<Vec<Graph>, Failure> {
    let text = match input {
        Some(path) => fs::read_to_string(path)?,
        None => {
            let mut s = String::new();
            io::stdin().lock().read_to_string(&mut s)?;
            s
        }
    };
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(|l| Graph::from_graph6(l).map_err(Failure::from))
        .collect()
}

fn run(command: Command, out: &mut impl Write) -> Outcome {
    match command {
        Command::Delta { forest } => writeln!(out, "{}", forest.delta())?,
        Command::Construct { kind, format } => {
            let g = match kind {
                Construction::Gf { forest, n } => build_gf(&forest, n)?,
                Construction::GfI { k, n, i } => build_gf_i(k, n, i, None)?,
                Construction::ApexCliques { ell, t } => apex_cliques(ell, t)?,
                Construction::ApexMixed { ell, t1, t2 } => apex_mixed(ell, t1, t2)?,
                Construction::BasePlusK4 { base, t } => base_plus_k4(base, t)?,
                Construction::CliqueUnion { ell, n } => clique_union(ell, n)?,
                Construction::PathUnion { forest } => path_union(&forest)?,
            };
            match format {
                GraphFormat::Graph6 => writeln!(out, "{}", g.to_graph6())?,
                GraphFormat::Dot => write!(out, "{}", g.to_dot())?,
            }
        }
        Command::Count { s, forest, n, input } => {
            if s == 0 {
                return Err(Error::InvalidParameter("clique order s must be at least 1".into()).into());
            }
            if let (Some(forest), Some(n)) = (forest, n) {
                let g = build_gf(&forest, n)?;
                let value = count_cliques(&g, s);
                emit(out, &json!({
                    "schema": "turanlab.count/1",
                    "forest": forest.to_string(),
                    "n": n,
                    "s": s,
                    "value": big(&value),
                    "source": "enumerated",
                }))?;
            } else {
                for g in read_graphs(input.as_ref())? {
                    let value = count_cliques(&g, s);
                    emit(out, &json!({
                        "schema": "turanlab.count/1",
                        "graph6": g.to_graph6(),
                        "n": g.order(),
                        "s": s,
                        "value": big(&value),
                        "source": "enumerated",
                    }))?;
                }
            }
        }
        Command::Formula { forest, n, s, path_ex } => {
            let value = gf_formula(&forest, n, s)?;
            let mut report = json!({
                "schema": "turanlab.formula/1",
                "forest": forest.to_string(),
                "n": n,
                "s": s,
                "value": big(&value),
                "source": "formula",
                "threshold": threshold_n(&forest, s).ok().map(|t| big(&t)),
            });
            if let Some(p) = path_ex {
                report["theorem_value"] = big(&theorem_value(&forest, n, s, &p)?);
            }
            emit(out, &report)?;
        }
        Command::Contains { forest, witness, input } => {
            for g in read_graphs(input.as_ref())? {
                let found = contains_linear_forest(&g, &forest);
                let mut line = json!({
                    "schema": "turanlab.contains/1",
                    "graph6": g.to_graph6(),
                    "forest": forest.to_string(),
                    "contains": found.is_some(),
                });
                if witness {
                    line["witness"] = json!(found.map(|w| w.paths));
                }
                emit(out, &line)?;
            }
        }
        Command::Core { forest, s, input } => {
            for g in read_graphs(input.as_ref())? {
                let trace = disintegrate(&g, &forest, s)?;
                let mut line = serde_json::to_value(&trace).map_err(|e| Failure::Io(e.into()))?;
                line["schema"] = json!("turanlab.core/1");
                line["forest"] = json!(forest.to_string());
                line["m"] = json!(trace.core_order());
                emit(out, &line)?;
            }
        }
        Command::Enumerate { n, filter, budget, edge_maximal } => {
            let filter = EnumFilter {
                connected: filter.connected.then_some(true),
                min_degree: filter.min_degree,
                f_free: filter.f_free,
                max_edges: filter.max_edges,
            };
            let options = EnumOptions { budget, edge_maximal_only: edge_maximal };
            for e in enumerate_with(n, &filter, &options)? {
                writeln!(out, "{}", e.graph.to_graph6())?;
            }
        }
        Command::Extremal { forest, n, s, budget, format } => {
            let record = turanlab_core::brute_force_ex(n, s, &forest, budget)?;
            write_records(out, &[record], format, "turanlab.extremal/1")?;
        }
        Command::Reconcile { forest, s, from, to, budget, format } => {
            let records = reconcile(from..=to, s, &forest, budget)?;
            write_records(out, &records, format, "turanlab.reconcile/1")?;
        }
        Command::Classify { forest, any_order, input } => {
            for g in read_graphs(input.as_ref())? {
                let verdict = classify_with(&g, &forest, !any_order);
                let mut line = serde_json::to_value(&verdict).map_err(|e| Failure::Io(e.into()))?;
                line["schema"] = json!("turanlab.classify/1");
                line["graph6"] = json!(g.to_graph6());
                line["forest"] = json!(forest.to_string());
                emit(out, &line)?;
            }
        }
        Command::Audit { forest, n, budget, sample, seed } => {
            let (report, sampling) = match sample {
                Some(samples) => {
                    let ell = match forest.orders() {
                        [a, b] if a == b => *a,
                        _ => {
                            return Err(Error::InvalidParameter(format!("sampling audits need F = 2P_ℓ, got {forest}")).into())
                        }
                    };
                    (sample_apex_mixed_audit(ell, n, samples, seed)?, Some(json!({ "samples": samples, "seed": seed })))
                }
                None => (audit_structure(&forest, n, budget)?, None),
            };
            let mut line = serde_json::to_value(&report).map_err(|e| Failure::Io(e.into()))?;
            line["schema"] = json!("turanlab.audit/1");
            line["unclassified"] = json!(report.unclassified());
            if let Some(s) = sampling {
                line["sampling"] = s;
            }
            emit(out, &line)?;
        }
        Command::LemmaCheck { which, max_order, format } => {
            let report = match which {
                Lemma::Claw => claw_report(max_order),
                Lemma::Claw2 => claw2_report(max_order),
                Lemma::Dirac => dirac_report(max_order)?,
                Lemma::ChvatalErdos => chvatal_erdos_report(max_order)?,
            };
            match format {
                ReportFormat::Json => {
                    let mut line = serde_json::to_value(&report).map_err(|e| Failure::Io(e.into()))?;
                    line["schema"] = json!("turanlab.lemma/1");
                    line["verdict"] = json!(verdict(&report));
                    emit(out, &line)?;
                }
                ReportFormat::Table => write_lemma_table(out, &report)?,
            }
            if !report.passed() {
                return Err(Failure::Check(format!("{} mismatches: {}", report.lemma, report.mismatches.join(", "))));
            }
        }
    }
    Ok(())
}

fn big(v: &BigUint) -> Value {
    match u64::try_from(v) {
        Ok(x) => json!(x),
        Err(_) => json!(v.to_string()),
    }
}

fn verdict(r: &LemmaReport) -> &'static str {
    if r.passed() {
        "PASS"
    } else {
        "FAIL"
    }
}

fn write_lemma_table(out: &mut impl Write, r: &LemmaReport) -> Outcome {
    if !r.rows.is_empty() {
        writeln!(out, "{:<16} {:>5} {:<10} {:>7} {:>9}", "forest", "delta", "host", "f_free", "predicted")?;
        for row in &r.rows {
            writeln!(
                out,
                "{:<16} {:>5} {:<10} {:>7} {:>9}{}",
                row.forest,
                row.delta,
                row.host,
                row.f_free,
                row.predicted_free,
                if row.agrees() { "" } else { "  MISMATCH" }
            )?;
        }
    }
    writeln!(
        out,
        "{}: bound {}, checked {}, applicable {}, mismatches {}",
        r.lemma,
        r.bound,
        r.checked,
        r.applicable,
        r.mismatches.len()
    )?;
    writeln!(out, "verdict {}", verdict(r))?;
    Ok(())
}

fn opt_big(v: &Option<BigUint>) -> String {
    v.as_ref().map(ToString::to_string).unwrap_or_default()
}

fn write_records(out: &mut impl Write, records: &[ExtremalRecord], format: TableFormat, schema: &str) -> Outcome {
    match format {
        TableFormat::Json => {
            for r in records {
                let mut line = serde_json::to_value(r).map_err(|e| Failure::Io(e.into()))?;
                line["schema"] = json!(schema);
                line["status"] = json!(r.status());
                emit(out, &line)?;
            }
        }
        TableFormat::Csv => {
            writeln!(out, "n,s,F,brute,formula,threshold,agrees,extremal_graph6")?;
            for r in records {
                let agrees = r.agrees.map(|a| a.to_string()).unwrap_or_default();
                writeln!(
                    out,
                    "{},{},{},{},{},{},{},{}",
                    r.n,
                    r.s,
                    r.forest,
                    r.value,
                    opt_big(&r.formula_value),
                    opt_big(&r.threshold),
                    agrees,
                    r.extremal_graphs.join(" ")
                )?;
            }
        }
    }
    Ok(())
}
