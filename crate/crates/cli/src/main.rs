use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use fmc_core::corpus::{forests_up_to_iso, graphs_up_to_iso, ENUMERATION_LIMIT};
use fmc_core::oracle::{find_minor, MINOR_ORACLE_HOST_LIMIT, MINOR_ORACLE_PATTERN_LIMIT};
use fmc_core::pathwidth::{pathwidth_exact_with_limit, BRUTEFORCE_LIMIT};
use fmc_core::{
    decide_with, generate, parse_edge_list, parse_graph6, pathwidth_bruteforce, to_edge_list,
    to_graph6, validate_model, verify, Certificate, ChoiceMode, EngineConfig, Error, Evidence,
    Graph, GraphKind, Limits,
};

/// Path-width or forest minor, with a checkable certificate either way.
#[derive(Parser)]
#[command(name = "fmc", version)]
struct Cli {
    /// Input graph format; by default `.g6` files are graph6, everything else an edge list.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    EdgeList,
    Graph6,
}

#[derive(Subcommand)]
enum Command {
    /// Print the path-width of a graph and an optimal decomposition.
    Pw { graph: PathBuf },
    /// Print a decomposition of G of width at most |F|-2, or a model of F in G.
    Decide {
        graph: PathBuf,
        forest: PathBuf,
        /// Break ties in the construction with this seed instead of lowest index.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Check a certificate; exit status 0 iff it is valid.
    Verify {
        graph: PathBuf,
        forest: PathBuf,
        certificate: PathBuf,
    },
    /// Print a generated graph: complete N | path N | star N | cycle N | tree N | gnp N P.
    Gen {
        kind: String,
        params: Vec<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run decide and verify over a corpus and print a summary.
    Sweep {
        /// Host size. Up to the enumeration limit every graph is used; beyond it, random samples.
        #[arg(long)]
        n: usize,
        /// Largest forest size; all forests up to isomorphism are used.
        #[arg(long)]
        forest_max: usize,
        /// Cross-check against the brute-force path-width and minor oracles.
        #[arg(long)]
        oracle: bool,
        /// Random hosts drawn when `n` is too large to enumerate.
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            let internal = matches!(
                e.downcast_ref::<Error>(),
                Some(Error::InternalInvariant(_) | Error::Contract(_))
            );
            ExitCode::from(if internal { 1 } else { 2 })
        }
    }
}

fn limits() -> anyhow::Result<Limits> {
    let mut limits = Limits::default();
    if let Ok(raw) = std::env::var("FMC_LIMIT_N") {
        limits.dp = raw
            .trim()
            .parse()
            .with_context(|| format!("FMC_LIMIT_N must be an integer, got `{raw}`"))?;
    }
    Ok(limits)
}

fn read_text(path: &Path) -> anyhow::Result<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .context("reading stdin")?;
        Ok(s)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

fn read_graph(path: &Path, format: Option<Format>) -> anyhow::Result<Graph> {
    let text = read_text(path)?;
    let format = format.unwrap_or(if path.extension().is_some_and(|e| e == "g6") {
        Format::Graph6
    } else {
        Format::EdgeList
    });
    let g = match format {
        Format::EdgeList => parse_edge_list(&text),
        Format::Graph6 => parse_graph6(&text),
    };
    g.with_context(|| format!("parsing {}", path.display()))
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    let format = cli.format;
    let mut out = io::stdout().lock();
    match cli.command {
        Command::Pw { graph } => {
            let g = read_graph(&graph, format)?;
            let (pw, d) = pathwidth_exact_with_limit(&g, limits()?.dp)?;
            write!(out, "pathwidth {pw}\n{d}")?;
        }
        Command::Decide {
            graph,
            forest,
            seed,
        } => {
            let g = read_graph(&graph, format)?;
            let f = read_graph(&forest, format)?;
            let config = EngineConfig {
                limits: limits()?,
                choice: seed.map_or(ChoiceMode::Lowest, ChoiceMode::Seeded),
            };
            let cert = decide_with(&g, &f, config)?;
            write!(out, "{}", cert.write(&g))?;
        }
        Command::Verify {
            graph,
            forest,
            certificate,
        } => {
            let g = read_graph(&graph, format)?;
            let f = read_graph(&forest, format)?;
            let text = read_text(&certificate)?;
            let report = match Certificate::parse(&text, &g, &f) {
                Ok(cert) => verify(&g, &f, &cert),
                Err(Error::Parse { line, message }) => {
                    writeln!(out, "violation: certificate line {line}: {message}")?;
                    return Ok(ExitCode::from(1));
                }
                Err(e) => return Err(e.into()),
            };
            write!(out, "{report}")?;
            if !report.is_clean() {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Gen { kind, params, seed } => {
            let g = generate(parse_kind(&kind, &params)?, seed)?;
            match format {
                Some(Format::Graph6) => writeln!(out, "{}", to_graph6(&g)?)?,
                _ => write!(out, "{}", to_edge_list(&g))?,
            }
        }
        Command::Sweep {
            n,
            forest_max,
            oracle,
            samples,
            seed,
        } => {
            let summary = sweep(n, forest_max, oracle, samples, seed, limits()?)?;
            for line in &summary.failures {
                writeln!(out, "{line}")?;
            }
            writeln!(out, "instances       {}", summary.instances)?;
            writeln!(out, "decompositions  {}", summary.decompositions)?;
            writeln!(out, "models          {}", summary.models)?;
            writeln!(out, "failures        {}", summary.failures.len())?;
            if !summary.failures.is_empty() {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn parse_kind(kind: &str, params: &[String]) -> anyhow::Result<GraphKind> {
    let int = |i: usize| -> anyhow::Result<usize> {
        let raw = params
            .get(i)
            .with_context(|| format!("`{kind}` needs {} parameter(s)", i + 1))?;
        raw.parse()
            .with_context(|| format!("`{raw}` is not a vertex count"))
    };
    let expect = |k: usize| -> anyhow::Result<()> {
        if params.len() != k {
            bail!("`{kind}` takes {k} parameter(s), got {}", params.len());
        }
        Ok(())
    };
    let kind = match kind {
        "complete" => GraphKind::Complete { n: int(0)? },
        "path" => GraphKind::Path { n: int(0)? },
        "star" => GraphKind::Star { n: int(0)? },
        "cycle" => GraphKind::Cycle { n: int(0)? },
        "tree" => GraphKind::RandomTree { n: int(0)? },
        "gnp" => {
            expect(2)?;
            let p = params[1]
                .parse()
                .with_context(|| format!("`{}` is not a probability", params[1]))?;
            return Ok(GraphKind::Gnp { n: int(0)?, p });
        }
        other => bail!("unknown graph kind `{other}`"),
    };
    expect(1)?;
    Ok(kind)
}

struct Summary {
    instances: usize,
    decompositions: usize,
    models: usize,
    failures: Vec<String>,
}

enum Outcome {
    Decomposition,
    Model,
    Failed(String),
}

fn sweep(
    n: usize,
    forest_max: usize,
    oracle: bool,
    samples: usize,
    seed: u64,
    limits: Limits,
) -> anyhow::Result<Summary> {
    if forest_max == 0 || forest_max > ENUMERATION_LIMIT {
        bail!("--forest-max must be between 1 and {ENUMERATION_LIMIT}");
    }
    let hosts = if n <= ENUMERATION_LIMIT.min(7) {
        graphs_up_to_iso(n)?
    } else {
        (0..samples as u64)
            .map(|i| generate(GraphKind::Gnp { n, p: 0.5 }, seed.wrapping_add(i)))
            .collect::<Result<_, _>>()?
    };
    let forests = forests_up_to_iso(forest_max)?;
    let config = EngineConfig {
        limits,
        choice: ChoiceMode::Lowest,
    };
    let jobs: Vec<(usize, usize)> = (0..hosts.len())
        .flat_map(|g| (0..forests.len()).map(move |f| (g, f)))
        .collect();
    let outcomes: Vec<Outcome> = jobs
        .par_iter()
        .map(|&(gi, fi)| check_instance(&hosts[gi], &forests[fi], config, oracle))
        .collect();

    let mut summary = Summary {
        instances: jobs.len(),
        decompositions: 0,
        models: 0,
        failures: Vec::new(),
    };
    for (&(gi, fi), outcome) in jobs.iter().zip(outcomes) {
        match outcome {
            Outcome::Decomposition => summary.decompositions += 1,
            Outcome::Model => summary.models += 1,
            Outcome::Failed(why) => summary.failures.push(format!(
                "FAIL host {} forest {}: {why}",
                to_graph6(&hosts[gi]).unwrap_or_default(),
                to_graph6(&forests[fi]).unwrap_or_default()
            )),
        }
    }
    Ok(summary)
}

fn check_instance(g: &Graph, f: &Graph, config: EngineConfig, oracle: bool) -> Outcome {
    let cert = match decide_with(g, f, config) {
        Ok(c) => c,
        Err(e) => return Outcome::Failed(e.to_string()),
    };
    let report = verify(g, f, &cert);
    if !report.is_clean() {
        return Outcome::Failed(report.to_string().replace('\n', "; "));
    }
    let narrow = matches!(cert.evidence, Evidence::Decomposition(_));
    if oracle {
        if g.n() <= BRUTEFORCE_LIMIT {
            match pathwidth_bruteforce(g) {
                Ok(pw) if (pw <= f.n() as isize - 2) != narrow => {
                    return Outcome::Failed(format!("branch disagrees with path-width {pw}"))
                }
                Ok(_) => {}
                Err(e) => return Outcome::Failed(e.to_string()),
            }
        }
        if g.n() <= MINOR_ORACLE_HOST_LIMIT && f.n() <= MINOR_ORACLE_PATTERN_LIMIT {
            match find_minor(g, f) {
                Ok(Some(m)) if !validate_model(g, &m).is_clean() => {
                    return Outcome::Failed("oracle model does not validate".into())
                }
                Ok(None) if !narrow => {
                    return Outcome::Failed("oracle finds no minor but a model was returned".into())
                }
                Ok(_) => {}
                Err(e) => return Outcome::Failed(e.to_string()),
            }
        }
    }
    if narrow {
        Outcome::Decomposition
    } else {
        Outcome::Model
    }
}
