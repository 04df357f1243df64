//! `weakclose`: closure parameters, enumeration and solvers for edge-list graphs.

use std::fs::File;
use std::io::{self, BufReader, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use weakclose::biclique::{
    enumerate_maximal_non_induced_bicliques, solve_induced_biclique, solve_induced_biclique_2closed,
    solve_induced_biclique_cclosed, solve_induced_kk_biclique, solve_max_edge_non_induced_biclique,
    solve_non_induced_biclique,
};
use weakclose::cliques::{count_maximal_cliques, enumerate_maximal_cliques};
use weakclose::closure::degeneracy_ordering;
use weakclose::dense::{
    enumerate_maximal_defective_cliques, enumerate_maximal_splexes, solve_defective_clique,
    solve_defective_clique_via_cover, solve_splex,
};
use weakclose::domination::{solve_dominating_clique, solve_ids};
use weakclose::kernel::{solve_independent_set, solve_monotone_subgraph, solve_sparsest_k_subgraph, MonotoneClass};
use weakclose::oracle::{oracle_decide, Params, Problem};
use weakclose::{closure_ordering, graph_stats, Error, Graph, ProblemAnswer, VertexSet, Witness};

const EXIT_YES: u8 = 0;
const EXIT_NO: u8 = 10;
const EXIT_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_RESOURCE: u8 = 3;

#[derive(Parser)]
#[command(name = "weakclose", version, about = "Weak closure parameters and solvers for edge-list graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print n, m, max degree, c-closure, degeneracy and weak closure.
    Stats {
        path: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// One stats row per edge-list file in a directory.
    Report {
        dir: PathBuf,
        /// Write the table here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print a closure ordering as `rank label step_closure` lines.
    Order {
        path: PathBuf,
        /// Print a degeneracy ordering (`rank label step_degree`) instead.
        #[arg(long)]
        degeneracy: bool,
    },
    /// Enumerate maximal sets as JSON arrays of labels, one per line.
    Enum {
        what: Family,
        path: PathBuf,
        #[arg(long)]
        s: Option<usize>,
        #[arg(long)]
        count_only: bool,
    },
    /// Decide a problem and print a JSON answer. Exit 0 on yes, 10 on no.
    Solve {
        /// One of is, monotone, sparsest, splex, defective, defective-cover,
        /// ni-biclique, ni-maxedge, ind-kk, ind-k1k2, ind-cclosed,
        /// ind-2closed, ids, dc, or oracle:<problem>.
        problem: String,
        path: PathBuf,
        #[command(flatten)]
        params: SolveParams,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Cliques,
    Splex,
    Defective,
    Bicliques,
}

#[derive(Args, Debug, Default)]
struct SolveParams {
    #[arg(short = 'k')]
    k: Option<usize>,
    #[arg(long)]
    s: Option<usize>,
    #[arg(long)]
    t: Option<usize>,
    #[arg(long)]
    k1: Option<usize>,
    #[arg(long)]
    k2: Option<usize>,
    /// Monotone class for `monotone`: edgeless, acyclic, bipartite,
    /// max-degree:D or max-edges:T.
    #[arg(long)]
    class: Option<String>,
}

/// A failure with the exit code it maps to.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Resource { .. } | Error::Scale { .. } | Error::Budget(_) => EXIT_RESOURCE,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        if let Some(inner) = e.downcast_ref::<Error>() {
            let mut f = Failure::from(inner.clone());
            f.message = format!("{e:#}");
            return f;
        }
        Failure {
            code: EXIT_USAGE,
            message: format!("{e:#}"),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    if let Err(f) = configure_threads() {
        eprintln!("weakclose: {}", f.message);
        return ExitCode::from(f.code);
    }
    let mut out = String::new();
    let result = run(cli.command, &mut out);
    let mut stdout = io::stdout().lock();
    let _ = stdout.write_all(out.as_bytes());
    let _ = stdout.flush();
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("weakclose: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn configure_threads() -> Result<(), Failure> {
    let Ok(raw) = std::env::var("WEAKCLOSE_THREADS") else {
        return Ok(());
    };
    let threads: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&t| t > 0)
        .ok_or_else(|| usage(format!("WEAKCLOSE_THREADS must be a positive integer, got '{raw}'")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| usage(format!("cannot configure thread pool: {e}")))
}

fn load(path: &Path) -> anyhow::Result<Graph> {
    let file = File::open(path).with_context(|| format!("cannot open {}", path.display()))?;
    let (g, report) = Graph::parse_edge_list(BufReader::new(file)).with_context(|| format!("{}", path.display()))?;
    if report.self_loops_dropped > 0 {
        eprintln!(
            "weakclose: warning: {}: dropped {} self-loop(s)",
            path.display(),
            report.self_loops_dropped
        );
    }
    Ok(g)
}

fn run(command: Command, out: &mut String) -> Result<u8, Failure> {
    match command {
        Command::Stats { path, json } => {
            let g = load(&path)?;
            let s = graph_stats(&g);
            if json {
                out.push_str(&serde_json::to_string(&s).expect("stats serialize"));
                out.push('\n');
            } else {
                out.push_str(&format!("{}\t{}\t{}\t{}\t{}\t{}\n", s.n, s.m, s.max_degree, s.c, s.d, s.gamma));
            }
            Ok(EXIT_YES)
        }
        Command::Report { dir, out: target } => report(&dir, target.as_deref(), out),
        Command::Order { path, degeneracy } => {
            let g = load(&path)?;
            if degeneracy {
                let ord = degeneracy_ordering(&g);
                for (i, (&v, &d)) in ord.order().iter().zip(ord.step_degree()).enumerate() {
                    out.push_str(&format!("{} {} {}\n", i + 1, g.label(v), d));
                }
            } else {
                out.push_str(&closure_ordering(&g).export(&g));
            }
            Ok(EXIT_YES)
        }
        Command::Enum {
            what,
            path,
            s,
            count_only,
        } => enumerate(what, &path, s, count_only, out),
        Command::Solve { problem, path, params } => solve(&problem, &path, &params, out),
    }
}

const REPORT_HEADER: &str = "name\tn\tm\tmax_degree\tc\td\tgamma\n";

fn report(dir: &Path, target: Option<&Path>, out: &mut String) -> Result<u8, Failure> {
    let entries = std::fs::read_dir(dir)
        .with_context(|| format!("cannot read directory {}", dir.display()))
        .map_err(Failure::from)?;
    let mut files: Vec<PathBuf> = entries
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.is_file())
        .collect();
    files.sort();

    let mut table = String::from(REPORT_HEADER);
    let mut failed = 0;
    for path in &files {
        let name = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
        match load(path) {
            Ok(g) => {
                let s = graph_stats(&g);
                table.push_str(&format!(
                    "{name}\t{}\t{}\t{}\t{}\t{}\t{}\n",
                    s.n, s.m, s.max_degree, s.c, s.d, s.gamma
                ));
            }
            Err(e) => {
                failed += 1;
                eprintln!("weakclose: skipping {}: {e:#}", path.display());
            }
        }
    }
    match target {
        Some(p) => std::fs::write(p, &table)
            .with_context(|| format!("cannot write {}", p.display()))
            .map_err(Failure::from)?,
        None => out.push_str(&table),
    }
    Ok(if failed > 0 { EXIT_FAILED } else { EXIT_YES })
}

fn labels(g: &Graph, set: &VertexSet) -> Value {
    json!(g.labels_of(set))
}

fn enumerate(what: Family, path: &Path, s: Option<usize>, count_only: bool, out: &mut String) -> Result<u8, Failure> {
    let g = load(path)?;
    let need_s = || s.ok_or_else(|| usage("--s is required for splex and defective enumeration"));
    let sets: Vec<VertexSet> = match what {
        Family::Cliques if count_only => {
            out.push_str(&format!("{}\n", count_maximal_cliques(&g)));
            return Ok(EXIT_YES);
        }
        Family::Cliques => enumerate_maximal_cliques(&g),
        Family::Splex => match need_s()? {
            1 => enumerate_maximal_cliques(&g),
            s => enumerate_maximal_splexes(&g, s)?.sets,
        },
        Family::Defective => match need_s()? {
            0 => enumerate_maximal_cliques(&g),
            s => enumerate_maximal_defective_cliques(&g, s)?.sets,
        },
        Family::Bicliques => enumerate_maximal_non_induced_bicliques(&g)?,
    };
    if count_only {
        out.push_str(&format!("{}\n", sets.len()));
    } else {
        for set in &sets {
            out.push_str(&labels(&g, set).to_string());
            out.push('\n');
        }
    }
    Ok(EXIT_YES)
}

fn need(value: Option<usize>, flag: &str, problem: &str) -> Result<usize, Failure> {
    value.ok_or_else(|| usage(format!("problem '{problem}' requires {flag}")))
}

fn solve(problem: &str, path: &Path, p: &SolveParams, out: &mut String) -> Result<u8, Failure> {
    let g = load(path)?;
    let answer = if let Some(inner) = problem.strip_prefix("oracle:") {
        let params = Params {
            k: p.k,
            s: p.s,
            t: p.t,
            k1: p.k1,
            k2: p.k2,
            class: p.class.clone(),
        };
        oracle_decide(Problem::from_id(inner, &params)?, &g)?
    } else {
        dispatch(problem, &g, p)?
    };

    let mut params = Map::new();
    for (name, value) in [("k", p.k), ("s", p.s), ("t", p.t), ("k1", p.k1), ("k2", p.k2)] {
        if let Some(v) = value {
            params.insert(name.into(), json!(v));
        }
    }
    if let Some(class) = &p.class {
        params.insert("class".into(), json!(class));
    }
    let witness = match &answer.witness {
        None => Value::Null,
        Some(Witness::Set(set)) => labels(&g, set),
        Some(Witness::Biclique(b)) => json!({
            "side_s": labels(&g, &b.side_s),
            "side_t": labels(&g, &b.side_t),
            "induced": b.induced,
        }),
    };
    let doc = json!({
        "problem": problem,
        "params": params,
        "answer": if answer.decision { "yes" } else { "no" },
        "witness": witness,
        "stats": answer.stats,
    });
    out.push_str(&doc.to_string());
    out.push('\n');
    Ok(if answer.decision { EXIT_YES } else { EXIT_NO })
}

fn dispatch(problem: &str, g: &Graph, p: &SolveParams) -> Result<ProblemAnswer, Failure> {
    let k = || need(p.k, "-k", problem);
    let s = || need(p.s, "--s", problem);
    let k1 = || need(p.k1, "--k1", problem);
    let k2 = || need(p.k2, "--k2", problem);
    Ok(match problem {
        "is" => solve_independent_set(g, k()?)?,
        "monotone" => {
            let class = p
                .class
                .as_deref()
                .ok_or_else(|| usage("problem 'monotone' requires --class"))?;
            solve_monotone_subgraph(g, k()?, MonotoneClass::parse(class)?)?
        }
        "sparsest" => solve_sparsest_k_subgraph(g, k()?, need(p.t, "--t", problem)?)?,
        "splex" => solve_splex(g, s()?, k()?)?,
        "defective" => solve_defective_clique(g, s()?, k()?)?,
        "defective-cover" => solve_defective_clique_via_cover(g, s()?, k()?)?,
        "ni-biclique" => solve_non_induced_biclique(g, k1()?, k2()?)?,
        "ni-maxedge" => solve_max_edge_non_induced_biclique(g, k()?)?,
        "ind-kk" => solve_induced_kk_biclique(g, k()?)?,
        "ind-k1k2" => solve_induced_biclique(g, k1()?, k2()?)?,
        "ind-cclosed" => solve_induced_biclique_cclosed(g, k1()?, k2()?)?,
        "ind-2closed" => solve_induced_biclique_2closed(g, k1()?, k2()?)?,
        "ids" => solve_ids(g, k()?),
        "dc" => solve_dominating_clique(g, k()?),
        other => {
            return Err(usage(format!(
                "unknown problem '{other}'; expected one of is, monotone, sparsest, splex, defective, \
                 defective-cover, ni-biclique, ni-maxedge, ind-kk, ind-k1k2, ind-cclosed, ind-2closed, \
                 ids, dc, oracle:<problem>"
            )))
        }
    })
}
