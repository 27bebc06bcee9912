use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use bgposet_cli::commands::{self, HasseArgs, Method};
use bgposet_cli::parse::Element;
use bgposet_cli::verify::{self, Suite};
use bgposet_cli::{config, CliError, Format};

/// Bruhat order on bigrassmannian permutations: enumeration,
/// comparability, counting formulas, Hasse-diagram export and a
/// formula-vs-oracle verification suite.
#[derive(Parser)]
#[command(name = "bgposet", version)]
struct Cli {
    /// Output format; data commands default to JSON, `verify` to a
    /// plain pass/fail report. CSV covers the enumerate/stats/verify
    /// tables.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Largest accepted order; for `verify`, the sweep bound.
    #[arg(long, global = true)]
    max_n: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List every bigrassmannian element of order n with its statistics.
    Enumerate { n: usize },
    /// Decide p <= q in the Bruhat order.
    Compare {
        p: String,
        q: String,
        /// auto picks vector when both arguments are bigrassmannian,
        /// the single-row test when only the left one is, and the full
        /// tableau comparison otherwise.
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
    },
    /// Count bigrassmannian elements weakly below a permutation.
    Beta { element: String },
    /// Count bigrassmannian elements weakly above a bigrassmannian element.
    Alpha { element: String },
    /// Canonical forms of a bigrassmannian element.
    Vector { element: String },
    /// Poset-wide statistics of order n.
    Stats { n: usize },
    /// Count saturated chains from lo up to hi.
    Chains { lo: String, hi: String },
    /// Hasse-diagram distance between two elements.
    Distance { a: String, b: String },
    /// Largest antichain size; optionally the covering path decomposition.
    Antichain {
        n: usize,
        #[arg(long)]
        paths: bool,
    },
    /// Count (and optionally list) the butterflies of order n.
    Butterflies {
        n: usize,
        #[arg(long)]
        list: bool,
    },
    /// Maximal elements below (or minimal above) a set of targets.
    Below {
        targets: Vec<String>,
        #[arg(long)]
        above: bool,
    },
    /// Export the Hasse diagram as DOT, rank-aligned by level.
    Hasse {
        n: usize,
        /// Output file; stdout when omitted.
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Highlight the down-set of this element.
        #[arg(long)]
        downset: Option<String>,
        /// Highlight the up-set of this element.
        #[arg(long)]
        upset: Option<String>,
    },
    /// Run the formula-vs-oracle verification suites.
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum SuiteArg {
    All,
    Order,
    Counts,
    Sperner,
    Butterfly,
    Below,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::All => Suite::All,
            SuiteArg::Order => Suite::Order,
            SuiteArg::Counts => Suite::Counts,
            SuiteArg::Sperner => Suite::Sperner,
            SuiteArg::Butterfly => Suite::Butterfly,
            SuiteArg::Below => Suite::Below,
        }
    }
}

fn require_json(format: Format) -> Result<(), CliError> {
    if format != Format::Json {
        return Err(CliError::new(2, "this command only supports --format json"));
    }
    Ok(())
}

fn run(cli: Cli) -> Result<String, CliError> {
    let limits = config::load_limits(cli.max_n)?;
    let format = cli.format.unwrap_or(Format::Json);
    match cli.command {
        Command::Enumerate { n } => commands::enumerate(n, format, &limits),
        Command::Compare { p, q, method } => {
            require_json(format)?;
            commands::compare(&Element::parse(&p)?, &Element::parse(&q)?, method, &limits)
        }
        Command::Beta { element } => {
            require_json(format)?;
            commands::beta(&Element::parse(&element)?, &limits)
        }
        Command::Alpha { element } => {
            require_json(format)?;
            commands::alpha(&Element::parse(&element)?, &limits)
        }
        Command::Vector { element } => {
            require_json(format)?;
            commands::vector(&Element::parse(&element)?, &limits)
        }
        Command::Stats { n } => commands::stats(n, format, &limits),
        Command::Chains { lo, hi } => {
            require_json(format)?;
            commands::chains(&Element::parse(&lo)?, &Element::parse(&hi)?, &limits)
        }
        Command::Distance { a, b } => {
            require_json(format)?;
            commands::distance(&Element::parse(&a)?, &Element::parse(&b)?, &limits)
        }
        Command::Antichain { n, paths } => {
            require_json(format)?;
            commands::antichain(n, paths, &limits)
        }
        Command::Butterflies { n, list } => {
            require_json(format)?;
            commands::butterflies_cmd(n, list, &limits)
        }
        Command::Below { targets, above } => {
            require_json(format)?;
            let elems = targets
                .iter()
                .map(|t| Element::parse(t))
                .collect::<Result<Vec<_>, CliError>>()?;
            commands::below(&elems, above, &limits)
        }
        Command::Hasse {
            n,
            dot,
            downset,
            upset,
        } => {
            require_json(format)?;
            let downset = downset.as_deref().map(Element::parse).transpose()?;
            let upset = upset.as_deref().map(Element::parse).transpose()?;
            commands::hasse(
                HasseArgs {
                    n,
                    dot_path: dot.as_deref(),
                    downset: downset.as_ref(),
                    upset: upset.as_ref(),
                },
                &limits,
            )
        }
        Command::Verify { suite } => {
            let max_n = cli.max_n.unwrap_or(6);
            if max_n > limits.bg_sweep_max.max(limits.sn_sweep_max).max(8) {
                return Err(CliError::new(
                    2,
                    format!(
                        "--max-n {max_n} exceeds the configured oracle caps; raise \
                         BGPOSET_BG_SWEEP_MAX / BGPOSET_SN_SWEEP_MAX to allow it"
                    ),
                ));
            }
            let reports = verify::run(suite.into(), max_n, &limits);
            let failed = reports.iter().filter(|r| r.status != "pass").count();
            let text = match cli.format {
                Some(Format::Json) => {
                    serde_json::to_string_pretty(&reports).expect("reports serialize")
                }
                Some(Format::Csv) => {
                    let mut lines =
                        vec!["status,suite,check,max_n,instances,counterexample".to_string()];
                    for r in &reports {
                        lines.push(format!(
                            "{},{},{},{},{},\"{}\"",
                            r.status,
                            r.suite,
                            r.name,
                            r.max_n,
                            r.instances,
                            r.counterexample.as_deref().unwrap_or("")
                        ));
                    }
                    lines.join("\n")
                }
                None => {
                    let mut lines: Vec<String> = reports
                        .iter()
                        .map(|r| {
                            let mut line = format!(
                                "{:4}  {:<48} n<={:<2} instances={}",
                                r.status,
                                format!("{}/{}", r.suite, r.name),
                                r.max_n,
                                r.instances
                            );
                            if let Some(ce) = &r.counterexample {
                                line.push_str(&format!("  counterexample: {ce}"));
                            }
                            line
                        })
                        .collect();
                    lines.push(format!(
                        "summary: {} checks, {} passed, {} failed (max-n {})",
                        reports.len(),
                        reports.len() - failed,
                        failed,
                        max_n
                    ));
                    lines.join("\n")
                }
            };
            if failed > 0 {
                println!("{text}");
                return Err(CliError::new(
                    1,
                    format!("{failed} verification check(s) failed"),
                ));
            }
            Ok(text)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(text) => {
            if !text.is_empty() {
                println!("{text}");
            }
            ExitCode::SUCCESS
        }
        Err(err) => {
            eprintln!("error: {}", err.message);
            ExitCode::from(err.code.clamp(0, 255) as u8)
        }
    }
}
