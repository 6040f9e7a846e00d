use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use lindef::OrderKind;
use lindef_cli::commands::{self, CommandError, CommandResult, Outcome, Params};
use lindef_cli::corpus::{self, Kind};
use lindef_cli::golden;
use lindef_cli::{ParseOptions, Report, Session, SessionError};

#[derive(Parser, Debug)]
#[command(name = "lindef", version, about = "Linearity defect of graded modules over standard graded algebras")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Global {
    /// Session file with ring, ideal and module declarations; `-` for stdin.
    #[arg(long, short = 's', global = true)]
    session: Option<PathBuf>,
    /// Homological window h.
    #[arg(long, default_value_t = 6, global = true)]
    steps: usize,
    /// Largest power s of the maximal ideal in the Tor-map criterion.
    #[arg(long, default_value_t = 4, global = true)]
    smax: u32,
    /// Characteristic for rings that do not give one.
    #[arg(long, default_value_t = 32003, global = true)]
    prime: u32,
    #[arg(long, value_enum, default_value_t = Order::Degrevlex, global = true)]
    order: Order,
    /// Write the JSON report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,
    #[arg(long, env = "LINDEF_JOBS", default_value_t = 1, global = true)]
    jobs: usize,
    /// Include wall time in the report (breaks byte-identical output).
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Order {
    Degrevlex,
    Deglex,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum CorpusKind {
    Ses,
    Sega,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Parse the session and print it back in canonical form.
    Parse,
    /// Minimal free resolution and Betti table of a module.
    Resolve {
        #[arg(long)]
        module: String,
    },
    /// Linearity defect from the linear part, cross-checked by Tor maps.
    Lind {
        #[arg(long)]
        module: String,
    },
    /// Tor maps Tor_i(R/m^(s+1), M) -> Tor_i(R/m^s, M).
    Sega {
        #[arg(long)]
        module: String,
    },
    /// Per-degree linearity of the components of a module.
    Componentwise {
        #[arg(long)]
        module: String,
    },
    /// Analysis of a declared short exact sequence.
    Ses {
        #[arg(long)]
        ses: String,
    },
    /// Check a declared Koszul filtration, or build one from an ideal q.
    Filtration {
        #[arg(long, conflicts_with = "conca")]
        filtration: Option<String>,
        /// Ideal q with m^2 = qm and q^2 = 0.
        #[arg(long)]
        conca: Option<String>,
        /// Further ideals containing q to include.
        #[arg(long = "extra", requires = "conca")]
        extra: Vec<String>,
        /// Modules with qM = 0 to test for linear quotients.
        #[arg(long = "module", requires = "conca")]
        modules: Vec<String>,
    },
    /// Linear quotients along the minimal generators of a module.
    Quotients {
        #[arg(long)]
        module: String,
    },
    /// lind over R against lind over S = R/J.
    Chrings {
        #[arg(long)]
        ring: String,
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        module: String,
    },
    /// Intersection of linear ideals.
    Threeideals {
        #[arg(long, value_delimiter = ',', required_unless_present = "special")]
        ideals: Vec<String>,
        /// p,q,r,s for (x_1..x_p) ∩ (y_1..y_q) ∩ (x_1+y_1..x_s+y_s, z_1..z_r).
        #[arg(long, value_delimiter = ',', num_args = 1, conflicts_with = "ideals")]
        special: Option<Vec<usize>>,
    },
    /// Golden examples with pinned values.
    Golden {
        #[arg(long, default_value = "all")]
        example: String,
    },
    /// Random corpus run.
    Fuzz {
        #[arg(long, value_enum, default_value_t = CorpusKind::Ses)]
        kind: CorpusKind,
        #[arg(long, default_value_t = 100)]
        count: usize,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Parse => "parse",
            Command::Resolve { .. } => "resolve",
            Command::Lind { .. } => "lind",
            Command::Sega { .. } => "sega",
            Command::Componentwise { .. } => "componentwise",
            Command::Ses { .. } => "ses",
            Command::Filtration { .. } => "filtration",
            Command::Quotients { .. } => "quotients",
            Command::Chrings { .. } => "chrings",
            Command::Threeideals { .. } => "threeideals",
            Command::Golden { .. } => "golden",
            Command::Fuzz { .. } => "fuzz",
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("lindef: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn load_session(g: &Global, p: &Params) -> Result<Session> {
    let Some(path) = &g.session else { bail!("this command needs --session FILE") };
    let text = if path.as_os_str() == "-" {
        std::io::read_to_string(std::io::stdin()).context("reading the session from stdin")?
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
    };
    let opts = ParseOptions { prime: p.prime, order: p.order };
    Session::parse_with(&text, opts).map_err(|e: SessionError| anyhow::anyhow!("{}:{e}", path.display()))
}

fn run(cli: &Cli) -> Result<i32> {
    let g = &cli.global;
    let params = Params {
        prime: g.prime,
        order: match g.order {
            Order::Degrevlex => OrderKind::DegRevLex,
            Order::Deglex => OrderKind::DegLex,
        },
        steps: g.steps,
        smax: g.smax.max(1),
        seed: g.seed,
        jobs: g.jobs.max(1),
    };
    let start = Instant::now();
    let result = dispatch(&cli.command, g, &params)?;
    let report = Report::new(cli.command.name(), &params, result.outcome, result.results, g.timing.then(|| start.elapsed()));
    let text = report.to_json();
    match &g.out {
        Some(path) => std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))?,
        None => print!("{text}"),
    }
    Ok(result.outcome.exit_code())
}

fn dispatch(cmd: &Command, g: &Global, p: &Params) -> Result<CommandResult> {
    let session = || load_session(g, p);
    let r: Result<CommandResult, CommandError> = match cmd {
        Command::Parse => Ok(commands::describe(&session()?)),
        Command::Resolve { module } => session().map(|s| s.module(module))?.map_err(Into::into).and_then(|m| commands::resolve_module(&m, p)),
        Command::Lind { module } => session().map(|s| s.module(module))?.map_err(Into::into).and_then(|m| commands::lind_module(&m, p)),
        Command::Sega { module } => session().map(|s| s.module(module))?.map_err(Into::into).and_then(|m| commands::sega_module(&m, p)),
        Command::Componentwise { module } => {
            session().map(|s| s.module(module))?.map_err(Into::into).and_then(|m| commands::componentwise(&m, p))
        }
        Command::Ses { ses } => commands::ses(&session()?, ses, p),
        Command::Filtration { filtration, conca, extra, modules } => match (filtration, conca) {
            (Some(f), _) => commands::filtration(&session()?, f, p),
            (None, Some(q)) => commands::conca(&session()?, q, extra, modules, p),
            (None, None) => bail!("give --filtration NAME or --conca IDEAL"),
        },
        Command::Quotients { module } => session().map(|s| s.module(module))?.map_err(Into::into).and_then(|m| commands::quotients(&m, p)),
        Command::Chrings { ring, ideal, module } => commands::chrings(&session()?, ring, ideal, module, p),
        Command::Threeideals { ideals, special } => match special {
            Some(v) if v.len() == 4 => commands::special_family(v[0], v[1], v[2], v[3], p),
            Some(_) => bail!("--special takes four numbers p,q,r,s"),
            None => commands::three_ideals(&session()?, ideals, p),
        },
        Command::Golden { example } => golden::run(example, p.jobs).map(|checks| {
            let failed = checks.iter().filter(|c| !c.pass).count();
            let outcome = if failed == 0 { Outcome::Ok } else { Outcome::Violation };
            CommandResult {
                outcome,
                results: serde_json::json!({ "passed": checks.len() - failed, "failed": failed, "checks": checks }),
            }
        }),
        Command::Fuzz { kind, count } => {
            let kind = match kind {
                CorpusKind::Ses => Kind::Ses,
                CorpusKind::Sega => Kind::Sega,
            };
            corpus::run(kind, *count, p).map(|sum| CommandResult {
                outcome: if sum.failures.is_empty() { Outcome::Ok } else { Outcome::Violation },
                results: serde_json::to_value(&sum).expect("summaries serialize"),
            })
        }
    };
    Ok(r?)
}
