use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use modcohom::cache::{Cache, CACHE_ENV};
use modcohom::cohom::{compute_label, decompose_character, CharacterTable, CohomError};
use modcohom::report::{render, DegreeRange, OutputFormat};
use modcohom::repr::ReprError;
use modcohom::suite::{self, SuiteName, SuiteOutcome};
use modcohom::{AlgebraKind, CohomologyReport, ModuleFamily, ModuleLabel, PrimeField};

#[derive(Parser)]
#[command(name = "modcohom", version, about = "Exact cohomology of sl3 and gl3 over F_p")]
struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Directory for cached reports.
    #[arg(long, global = true, env = CACHE_ENV)]
    cache: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Output {
    #[arg(long, default_value = "json")]
    format: OutputFormat,
    /// Write to a file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Leave out degrees (or modules) with zero cohomology.
    #[arg(long)]
    only_nonzero: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Cohomology table of one module.
    Table {
        #[arg(long)]
        p: u32,
        #[arg(long, default_value = "sl3")]
        algebra: AlgebraKind,
        /// trivial, or simple|weyl|induced|verma:r,s
        #[arg(long)]
        module: ModuleLabel,
        /// e.g. 3, 2..5 or 0-8
        #[arg(long)]
        degrees: Option<DegreeRange>,
        #[command(flatten)]
        output: Output,
    },
    /// Every restricted weight of a family; lists those with nonzero cohomology.
    Scan {
        #[arg(long)]
        p: u32,
        #[arg(long, default_value = "sl3")]
        algebra: AlgebraKind,
        /// simple, weyl, induced or verma
        #[arg(long, default_value = "simple")]
        family: String,
        /// Allow p > 7.
        #[arg(long)]
        allow_large_p: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Compare computed tables with the built-in expectations.
    Verify {
        /// theorem1, corollary1, corollary2, corollary3, lemma-blocks, properties or all
        #[arg(long)]
        suite: String,
        #[arg(long)]
        p: u32,
        #[arg(long, default_value = "text")]
        format: OutputFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Character of one module and its composition factors.
    Char {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        module: ModuleLabel,
        #[command(flatten)]
        output: Output,
    },
}

enum Failure {
    Usage(String),
    Mismatch,
    Internal(String),
}

impl From<CohomError> for Failure {
    fn from(e: CohomError) -> Self {
        match e {
            CohomError::Repr(r) => r.into(),
            other => Failure::Internal(other.to_string()),
        }
    }
}

impl From<ReprError> for Failure {
    fn from(e: ReprError) -> Self {
        match e {
            ReprError::BadSelector(_)
            | ReprError::NotConstructible(_)
            | ReprError::WeightOutOfRange { .. }
            | ReprError::Field(_) => Failure::Usage(e.to_string()),
            other => Failure::Internal(other.to_string()),
        }
    }
}

fn io_failure(e: std::io::Error) -> Failure {
    Failure::Internal(e.to_string())
}

fn check_prime(p: u32) -> Result<(), Failure> {
    PrimeField::new(p as i64).map(|_| ()).map_err(|e| Failure::Usage(e.to_string()))
}

fn emit(text: &str, out: &Option<PathBuf>) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text).map_err(io_failure),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

struct Runner {
    cache: Option<Cache>,
}

impl Runner {
    fn report(&self, p: u32, kind: AlgebraKind, m: &ModuleLabel) -> Result<CohomologyReport, CohomError> {
        match &self.cache {
            Some(c) => c.get_or_compute(p, kind, m, || compute_label(p, kind, m)),
            None => compute_label(p, kind, m),
        }
    }
}

fn parse_family(s: &str) -> Result<ModuleFamily, Failure> {
    match s {
        "simple" => Ok(ModuleFamily::Simple),
        "weyl" => Ok(ModuleFamily::Weyl),
        "induced" => Ok(ModuleFamily::Induced),
        "verma" => Ok(ModuleFamily::Verma),
        other => Err(Failure::Usage(format!(
            "unknown family `{other}` (expected simple, weyl, induced or verma)"
        ))),
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    if let Some(n) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| Failure::Internal(e.to_string()))?;
    }
    let runner = Runner {
        cache: cli.cache.map(Cache::new),
    };
    match cli.command {
        Command::Table {
            p,
            algebra,
            module,
            degrees,
            output,
        } => {
            check_prime(p)?;
            let report = runner.report(p, algebra, &module)?;
            let text = render(&report, output.format, degrees, output.only_nonzero);
            emit(&text, &output.out)
        }
        Command::Scan {
            p,
            algebra,
            family,
            allow_large_p,
            output,
        } => {
            check_prime(p)?;
            if p > 7 && !allow_large_p {
                return Err(Failure::Usage(format!(
                    "scanning p = {p} builds {} modules; pass --allow-large-p to proceed",
                    p * p
                )));
            }
            let family = parse_family(&family)?;
            scan(&runner, p, algebra, family, &output)
        }
        Command::Verify { suite, p, format, out } => {
            check_prime(p)?;
            let names: Vec<SuiteName> = if suite == "all" {
                SuiteName::ALL.to_vec()
            } else {
                vec![suite.parse().map_err(Failure::Usage)?]
            };
            let source = |kind: AlgebraKind, m: &ModuleLabel| runner.report(p, kind, m);
            let outcomes = names
                .into_iter()
                .map(|s| suite::run(s, p, &source))
                .collect::<Result<Vec<_>, _>>()?;
            emit(&render_outcomes(&outcomes, format), &out)?;
            if outcomes.iter().all(SuiteOutcome::all_passed) {
                Ok(())
            } else {
                Err(Failure::Mismatch)
            }
        }
        Command::Char { p, module, output } => {
            check_prime(p)?;
            let rep = module.build(p)?;
            let ch = rep.character();
            let dec = decompose_character(&ch, &CharacterTable::simple(p))
                .map_err(|w| Failure::Internal(format!("non-dominant maximal weight {w}")))?;
            let factors: Vec<String> = dec
                .factors
                .iter()
                .map(|(w, m)| format!("{m}L({},{})", w.a, w.b))
                .collect();
            let text = match output.format {
                OutputFormat::Json => {
                    let weights: serde_json::Map<String, serde_json::Value> = ch
                        .multiplicities()
                        .iter()
                        .map(|(w, m)| (format!("[{},{}]", w.a, w.b), json!(m)))
                        .collect();
                    let facs: Vec<_> = dec
                        .factors
                        .iter()
                        .map(|(w, m)| json!({"weight": [w.a, w.b], "mult": m}))
                        .collect();
                    let doc = json!({
                        "p": p,
                        "module": module.to_string(),
                        "dim": rep.dim(),
                        "weights": weights,
                        "factors": facs,
                        "residual_dim": dec.residual.dim(),
                    });
                    serde_json::to_string_pretty(&doc).expect("serialisable") + "\n"
                }
                OutputFormat::Csv => {
                    let mut s = String::from("weight_a,weight_b,mult\n");
                    for (w, m) in ch.multiplicities() {
                        s += &format!("{},{},{}\n", w.a, w.b, m);
                    }
                    s
                }
                OutputFormat::Text => format!(
                    "{module} over F_{p}: dim {}, {} weights\ncomposition factors: {}\n",
                    rep.dim(),
                    ch.multiplicities().len(),
                    factors.join(" + ")
                ),
            };
            emit(&text, &output.out)
        }
    }
}

fn scan(
    runner: &Runner,
    p: u32,
    algebra: AlgebraKind,
    family: ModuleFamily,
    output: &Output,
) -> Result<(), Failure> {
    use rayon::prelude::*;
    let weights: Vec<(u32, u32)> = (0..p).flat_map(|r| (0..p).map(move |s| (r, s))).collect();
    let results: Vec<((u32, u32), Result<Vec<usize>, String>)> = weights
        .par_iter()
        .map(|&(r, s)| {
            let m = ModuleLabel::new(family, r, s);
            ((r, s), runner.report(p, algebra, &m).map(|rep| rep.dims()).map_err(|e| e.to_string()))
        })
        .collect();
    let nonzero: Vec<(u32, u32)> = results
        .iter()
        .filter(|(_, d)| d.as_ref().is_ok_and(|d| d.iter().any(|&x| x > 0)))
        .map(|(w, _)| *w)
        .collect();
    let failures: Vec<String> = results
        .iter()
        .filter_map(|((r, s), d)| d.as_ref().err().map(|e| format!("({r},{s}): {e}")))
        .collect();
    let shown = results.iter().filter(|(w, d)| {
        !output.only_nonzero || d.is_err() || nonzero.contains(w)
    });
    let text = match output.format {
        OutputFormat::Json => {
            let modules: Vec<_> = shown
                .map(|((r, s), d)| match d {
                    Ok(dims) => json!({"weight": [r, s], "dims": dims}),
                    Err(e) => json!({"weight": [r, s], "error": e}),
                })
                .collect();
            let nz: Vec<_> = nonzero.iter().map(|(r, s)| json!([r, s])).collect();
            let doc = json!({
                "p": p,
                "algebra": algebra.name(),
                "family": family.name(),
                "nonzero": nz,
                "modules": modules,
            });
            serde_json::to_string_pretty(&doc).expect("serialisable") + "\n"
        }
        OutputFormat::Csv => {
            let mut s = String::from("r,s,nonzero,dims\n");
            for ((r, st), d) in shown {
                match d {
                    Ok(dims) => {
                        let ds: Vec<String> = dims.iter().map(|x| x.to_string()).collect();
                        s += &format!("{r},{st},{},{}\n", nonzero.contains(&(*r, *st)), ds.join(" "));
                    }
                    Err(e) => s += &format!("{r},{st},error,\"{e}\"\n"),
                }
            }
            s
        }
        OutputFormat::Text => {
            let mut s = format!("{} modules over {algebra}, p = {p}\n", family.name());
            for ((r, st), d) in shown {
                match d {
                    Ok(dims) => s += &format!("({r},{st})  {dims:?}\n"),
                    Err(e) => s += &format!("({r},{st})  error: {e}\n"),
                }
            }
            let list: Vec<String> = nonzero.iter().map(|(r, s)| format!("({r},{s})")).collect();
            s += &format!("nonzero cohomology: {}\n", list.join(" "));
            s
        }
    };
    emit(&text, &output.out)?;
    if failures.is_empty() {
        Ok(())
    } else {
        Err(Failure::Internal(format!(
            "{} module(s) failed: {}",
            failures.len(),
            failures.join("; ")
        )))
    }
}

fn render_outcomes(outcomes: &[SuiteOutcome], format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => {
            let docs: Vec<_> = outcomes
                .iter()
                .map(|o| {
                    let rows: Vec<_> = o
                        .rows
                        .iter()
                        .map(|r| {
                            json!({"id": r.id, "expected": r.expected, "actual": r.actual, "passed": r.passed()})
                        })
                        .collect();
                    json!({
                        "suite": o.suite.name(),
                        "p": o.p,
                        "passed": o.passed(),
                        "failed": o.failed(),
                        "rows": rows,
                        "notes": o.notes,
                    })
                })
                .collect();
            serde_json::to_string_pretty(&docs).expect("serialisable") + "\n"
        }
        OutputFormat::Csv => {
            let mut s = String::from("suite,p,id,passed,expected,actual\n");
            for o in outcomes {
                for r in &o.rows {
                    s += &format!(
                        "{},{},\"{}\",{},\"{}\",\"{}\"\n",
                        o.suite,
                        o.p,
                        r.id,
                        r.passed(),
                        r.expected,
                        r.actual
                    );
                }
            }
            s
        }
        OutputFormat::Text => outcomes.iter().map(SuiteOutcome::render).collect(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
