use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use frieze_cli::{
    affine_json, enumerate, frieze, parse_cycle, parse_rational, parse_window, render_arrangement,
    render_triangulation, roots, triangulate, AffineCheck, FriezeFormat, RenderWhat, Result,
};

/// Quiddity cycles, frieze patterns and their affine arrangements.
#[derive(Parser, Debug)]
#[command(name = "frieze", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print every quiddity cycle of a given length as JSON lines.
    Enumerate {
        #[arg(long)]
        length: usize,
        /// Keep only dense cycles.
        #[arg(long)]
        dense: bool,
        /// Print one lexicographically minimal rotation per class.
        #[arg(long)]
        up_to_rotation: bool,
    },
    /// Print the frieze pattern of a cycle.
    Frieze {
        /// Comma-separated entries, e.g. 3,1,4,1,3,1,4,1.
        #[arg(long)]
        cycle: String,
        #[arg(long, value_enum, default_value = "text")]
        format: FriezeFormat,
    },
    /// Print the triangulation of a cycle as JSON.
    Triangulate {
        #[arg(long)]
        cycle: String,
    },
    /// Print the positive rank-2 roots at one chamber as JSON.
    Roots {
        #[arg(long)]
        cycle: String,
        #[arg(long, default_value_t = 1)]
        chamber: usize,
    },
    /// Analyse the affine arrangement built on one chamber.
    Affine {
        #[arg(long)]
        cycle: String,
        #[arg(long, default_value_t = 1)]
        chamber: usize,
        #[arg(long, value_enum, default_value = "count")]
        check: AffineCheck,
        /// Largest |d| of the roots tested by `--check ca`.
        #[arg(long, default_value_t = 3)]
        d_bound: u32,
    },
    /// Write an SVG drawing.
    Render {
        #[arg(long, value_enum)]
        what: RenderWhat,
        #[arg(long)]
        cycle: String,
        #[arg(long, default_value_t = 1)]
        chamber: usize,
        /// Pixels per unit (arrangement) or circumradius (triangulation).
        #[arg(long)]
        scale: Option<String>,
        /// x_min,x_max,y_min,y_max for arrangements; default 0,1,0,1.
        #[arg(long)]
        window: Option<String>,
        /// Output file; standard output when omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

fn run(cli: Cli) -> Result<()> {
    let out = match cli.command {
        Command::Enumerate {
            length,
            dense,
            up_to_rotation,
        } => enumerate(length, dense, up_to_rotation)?,
        Command::Frieze { cycle, format } => frieze(&parse_cycle(&cycle)?, format)?,
        Command::Triangulate { cycle } => triangulate(&parse_cycle(&cycle)?)?,
        Command::Roots { cycle, chamber } => roots(&parse_cycle(&cycle)?, chamber)?,
        Command::Affine {
            cycle,
            chamber,
            check,
            d_bound,
        } => affine_json(&parse_cycle(&cycle)?, chamber, check, d_bound)?,
        Command::Render {
            what,
            cycle,
            chamber,
            scale,
            window,
            output,
        } => {
            let c = parse_cycle(&cycle)?;
            let svg = match what {
                RenderWhat::Triangulation => {
                    let scale = parse_rational(scale.as_deref().unwrap_or("160"))?;
                    render_triangulation(&c, &scale)?
                }
                RenderWhat::Arrangement => {
                    let scale = parse_rational(scale.as_deref().unwrap_or("480"))?;
                    let window = window.as_deref().map(parse_window).transpose()?;
                    render_arrangement(&c, chamber, window, &scale)?
                }
            };
            match output {
                Some(path) => {
                    std::fs::write(path, svg)?;
                    String::new()
                }
                None => svg,
            }
        }
    };
    print!("{out}");
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("frieze: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
