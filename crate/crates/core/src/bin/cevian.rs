use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use cevian::catalog::{classify, family_matches, trivial_solutions, Mode};
use cevian::census::census_with;
use cevian::config::RunConfig;
use cevian::cyclotomic::ceva_holds_exact_with_cap;
use cevian::io::{format_angles, parse_triangle, parse_tuple, write_census_files};
use cevian::recursion::{explore, Strategy};
use cevian::svg::render_svg;
use cevian::{CevaTuple, Error, Triangle};

#[derive(Parser)]
#[command(
    name = "cevian",
    version,
    about = "Rational-angle subdivisions of triangles"
)]
struct Cli {
    /// JSON run configuration; fields not given keep their defaults.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Int,
    Rat,
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    AvoidBisector,
    Exhaustive,
}

#[derive(Subcommand)]
enum Cmd {
    /// Decide the trigonometric Ceva identity exactly.
    Verify {
        #[arg(long, value_parser = parse_tuple)]
        tuple: CevaTuple,
    },
    /// List the trivial subdivisions of a triangle.
    Trivial {
        #[arg(long, value_parser = parse_triangle)]
        triangle: Triangle,
        #[arg(long, value_enum, default_value = "int")]
        mode: ModeArg,
    },
    /// List the family subdivisions of a triangle.
    Families {
        #[arg(long, value_parser = parse_triangle)]
        triangle: Triangle,
    },
    /// Classify a subdivision as trivial, family or sporadic.
    Classify {
        #[arg(long, value_parser = parse_tuple)]
        tuple: CevaTuple,
    },
    /// Enumerate every integer-degree subdivision and write the census files.
    EnumerateZ {
        #[arg(long)]
        threads: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the census headline counts.
    Counts {
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Expand recursive subdivisions and print the tree as JSON.
    Recurse {
        #[arg(long, value_parser = parse_triangle)]
        triangle: Triangle,
        #[arg(long, value_enum, default_value = "avoid-bisector")]
        strategy: StrategyArg,
        #[arg(long)]
        max_depth: Option<usize>,
        #[arg(long)]
        max_nodes: Option<usize>,
    },
    /// Draw a subdivision as SVG.
    Render {
        #[arg(long, value_parser = parse_tuple)]
        tuple: CevaTuple,
        #[arg(long)]
        out: PathBuf,
    },
}

fn run(cli: Cli) -> Result<bool, Error> {
    let mut cfg = match &cli.config {
        Some(p) => RunConfig::load(p)?,
        None => RunConfig::default(),
    };
    match cli.cmd {
        Cmd::Verify { tuple } => {
            let ok = ceva_holds_exact_with_cap(&tuple, cfg.level_cap)?;
            println!("{}", if ok { "EXACT-TRUE" } else { "EXACT-FALSE" });
            Ok(ok)
        }
        Cmd::Trivial { triangle, mode } => {
            let mode = match mode {
                ModeArg::Int => Mode::Integer,
                ModeArg::Rat => Mode::Rational,
            };
            let sols = trivial_solutions(&triangle, mode);
            for (t, class) in &sols.tuples {
                println!("{} {}", class.kind.label(), format_angles(t.entries()));
            }
            for c in &sols.continua {
                println!(
                    "trivial-ii continuum apex={} s in (0,{})",
                    c.labels[c.apex()],
                    c.leg()
                );
            }
            Ok(true)
        }
        Cmd::Families { triangle } => {
            for m in family_matches(&triangle) {
                println!(
                    "{} t={} {}",
                    m.family.label(),
                    m.t,
                    format_angles(m.tuple.entries())
                );
            }
            Ok(true)
        }
        Cmd::Classify { tuple } => match classify(&tuple) {
            Ok(c) => {
                println!("{}", c.label());
                Ok(true)
            }
            Err(Error::NotASolution) => {
                println!("not-a-solution");
                Ok(false)
            }
            Err(e) => Err(e),
        },
        Cmd::EnumerateZ { threads, out } => {
            if let Some(n) = threads {
                cfg.threads = n;
            }
            let report = census_with(&cfg.scan())?;
            let dir = out.unwrap_or(cfg.out_dir);
            for p in write_census_files(&report, &dir)? {
                println!("wrote {}", p.display());
            }
            println!("{}", report.aggregates.headline());
            Ok(true)
        }
        Cmd::Counts { threads } => {
            if let Some(n) = threads {
                cfg.threads = n;
            }
            println!("{}", census_with(&cfg.scan())?.aggregates.headline());
            Ok(true)
        }
        Cmd::Recurse {
            triangle,
            strategy,
            max_depth,
            max_nodes,
        } => {
            cfg.max_depth = max_depth.unwrap_or(cfg.max_depth);
            cfg.max_nodes = max_nodes.unwrap_or(cfg.max_nodes);
            cfg.validate()?;
            let strategy = match strategy {
                StrategyArg::AvoidBisector => Strategy::AvoidBisector,
                StrategyArg::Exhaustive => Strategy::Exhaustive,
            };
            let tree = explore(&triangle, strategy, cfg.budget())?;
            println!(
                "{}",
                serde_json::to_string_pretty(&tree).map_err(|e| Error::Io(e.to_string()))?
            );
            Ok(true)
        }
        Cmd::Render { tuple, out } => {
            std::fs::write(&out, render_svg(&tuple)?)?;
            println!("wrote {}", out.display());
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::Budget(_) | Error::LevelOverCap { .. } | Error::Io(_) => 3,
                Error::NotASolution => 1,
                _ => 2,
            })
        }
    }
}
