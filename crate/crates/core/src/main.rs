use std::fs;
use std::io::{self, Read};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use nacrig::formats::{parse_graph, GraphFormat};
use nacrig::laman::{verify_conjecture, DEFAULT_LAMAN_CAP};
use nacrig::motion::DEFAULT_FRAMES;
use nacrig::nac::parse_coloring;
use nacrig::report::{analyze, build_motion, nac_listing, AnalyzeOptions, FlexMode, DEFAULT_COLORING_CAP};
use nacrig::structure::DEFAULT_MAX_CUT_SIZE;
use nacrig::{fixtures, svg, Error, NamedGraph};

#[derive(Parser)]
#[command(name = "nacrig", version, about = "NAC-colorings and flexible labelings of graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Graph6,
    Edges,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Grid,
    Zigzag,
    #[value(name = "3d")]
    ThreeD,
}

#[derive(Clone, Copy, ValueEnum)]
enum Out {
    Json,
    Svg,
    SvgAnimated,
}

#[derive(clap::Args)]
struct Input {
    /// Graph file, `-` for stdin, or a bundled fixture name (e.g. PRISM)
    input: String,
    /// Input format; detected from the content when omitted
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Subcommand)]
enum Command {
    /// Full report: structure, NAC-colorings and verdict
    Analyze {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        up_to_swap: bool,
        #[arg(long, default_value_t = DEFAULT_MAX_CUT_SIZE)]
        max_cut_size: usize,
        /// List every coloring instead of the first 64
        #[arg(long)]
        all: bool,
    },
    /// List NAC-colorings
    Nac {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        up_to_swap: bool,
        #[arg(long)]
        all: bool,
    },
    /// Build a flexible labeling and sample its motion
    Flex {
        #[command(flatten)]
        input: Input,
        /// Coloring file (`u v r|b` lines) or bundled name: delta1, delta2, rotating, fig12
        #[arg(long, conflicts_with = "auto")]
        coloring: Option<String>,
        /// Use the first NAC-coloring found
        #[arg(long)]
        auto: bool,
        #[arg(long, value_enum, default_value = "grid")]
        mode: Mode,
        #[arg(long, default_value_t = DEFAULT_FRAMES)]
        frames: usize,
        #[arg(long, value_enum, default_value = "json")]
        out: Out,
        /// Output directory for SVG files, or file for JSON (default stdout)
        #[arg(long)]
        dest: Option<PathBuf>,
    },
    /// Check the Laman sweep up to a vertex count
    Verify {
        #[arg(long, default_value_t = DEFAULT_LAMAN_CAP)]
        max_n: usize,
        #[arg(long)]
        checkpoint: Option<PathBuf>,
        /// Also save the JSON report here
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

fn load(input: &Input) -> Result<(NamedGraph, GraphFormat), Error> {
    let text = if input.input == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        s
    } else if Path::new(&input.input).exists() {
        fs::read_to_string(&input.input)?
    } else if let Some(g) = fixtures::fixture(&input.input) {
        return Ok((g, GraphFormat::EdgeList));
    } else {
        return Err(Error::InvalidGraph(format!(
            "{:?} is neither a file nor a fixture ({})",
            input.input,
            fixtures::fixture_names().join(", ")
        )));
    };
    let format = match input.format {
        Some(Format::Graph6) => GraphFormat::Graph6,
        Some(Format::Edges) => GraphFormat::EdgeList,
        None => GraphFormat::detect(&text),
    };
    Ok((parse_graph(&text, format)?, format))
}

fn print_json(value: &impl serde::Serialize) -> Result<(), Error> {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

fn cap(all: bool) -> Option<usize> {
    (!all).then_some(DEFAULT_COLORING_CAP)
}

fn run(cli: Cli) -> Result<u8, Error> {
    match cli.command {
        Command::Analyze {
            input,
            up_to_swap,
            max_cut_size,
            all,
        } => {
            let (g, format) = load(&input)?;
            let opts = AnalyzeOptions {
                up_to_swap,
                max_cut_size,
                coloring_cap: cap(all),
                ..AnalyzeOptions::default()
            };
            let report = analyze(&g, format, &opts);
            print_json(&report)?;
            Ok(report.exit_code() as u8)
        }
        Command::Nac {
            input,
            up_to_swap,
            all,
        } => {
            let (g, _) = load(&input)?;
            let listing = nac_listing(&g, up_to_swap, cap(all));
            print_json(&listing)?;
            Ok(if listing.count > 0 { 0 } else { 1 })
        }
        Command::Flex {
            input,
            coloring,
            auto: _,
            mode,
            frames,
            out,
            dest,
        } => {
            let (g, _) = load(&input)?;
            let coloring = match coloring {
                None => None,
                Some(c) if Path::new(&c).exists() => Some(parse_coloring(&g, &fs::read_to_string(&c)?)?),
                Some(c) => Some(fixtures::named_coloring(&g, &c).ok_or_else(|| {
                    Error::Contract(format!("{c:?} is neither a coloring file nor a bundled coloring of this graph"))
                })?),
            };
            let mode = match mode {
                Mode::Grid => FlexMode::Grid,
                Mode::Zigzag => FlexMode::Zigzag,
                Mode::ThreeD => FlexMode::ThreeD,
            };
            let motion = match build_motion(&g.graph, coloring.as_ref(), mode, frames) {
                Ok(m) => m,
                Err(e @ (Error::CompleteGraph | Error::NoNacColoring)) => {
                    eprintln!("{e}");
                    return Ok(1);
                }
                Err(e) => return Err(e),
            };
            match out {
                Out::Json => {
                    let doc = serde_json::to_string_pretty(&motion.to_document(&g))?;
                    match dest {
                        Some(path) => fs::write(path, doc + "\n")?,
                        None => println!("{doc}"),
                    }
                }
                Out::Svg => {
                    let dir = dest.unwrap_or_else(|| PathBuf::from("."));
                    fs::create_dir_all(&dir)?;
                    for k in 0..motion.frames.len() {
                        fs::write(dir.join(format!("frame_{k:03}.svg")), svg::frame_svg(&motion, k))?;
                    }
                    eprintln!("wrote {} frames to {}", motion.frames.len(), dir.display());
                }
                Out::SvgAnimated => {
                    let path = dest.unwrap_or_else(|| PathBuf::from("motion.svg"));
                    fs::write(&path, svg::animated_svg(&motion))?;
                    eprintln!("wrote {}", path.display());
                }
            }
            Ok(0)
        }
        Command::Verify {
            max_n,
            checkpoint,
            report,
        } => {
            let r = verify_conjecture(max_n, checkpoint.as_deref())?;
            print_json(&r)?;
            if let Some(path) = report {
                fs::write(path, serde_json::to_string_pretty(&r)? + "\n")?;
            }
            Ok(if r.holds() { 0 } else { 1 })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = nacrig::configure_threads_from_env() {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
