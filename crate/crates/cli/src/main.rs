use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use surfgeo_core::DEFAULT_MAX_CYCLES;

mod commands;

#[derive(Parser)]
#[command(
    name = "surfgeo",
    version,
    about = "Simplicial surfaces and re-embeddings of simplicial spheres"
)]
struct Cli {
    /// Write output to this file instead of stdout.
    #[arg(short = 'o', long = "output", global = true)]
    output: Option<PathBuf>,

    /// Limit on the number of simple cycles for cycle double cover searches.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_CYCLES)]
    max_cycles: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check that a file describes a simplicial surface.
    Validate { path: PathBuf },
    /// Print invariants of a surface as key=value pairs.
    Info { path: PathBuf },
    /// Print the face graph or edge graph of a surface.
    Graph {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = GraphKind::Face)]
        kind: GraphKind,
    },
    /// Enumerate the simplicial surfaces a cubic graph embeds on.
    Embed {
        path: PathBuf,
        /// Only vertex-faithful surfaces (peripheral-cycle search).
        #[arg(long)]
        peripheral_only: bool,
        /// Only surfaces with Euler characteristic at least this value.
        #[arg(long, allow_negative_numbers = true)]
        min_chi: Option<i64>,
    },
    /// Re-embeddings of a vertex-faithful sphere on the projective plane,
    /// the torus and the Klein bottle.
    Reembed {
        path: PathBuf,
        #[arg(long, value_enum)]
        target: Option<Target>,
        /// Compute the surfaces from all cycle double covers instead.
        #[arg(long)]
        oracle: bool,
        /// Print only the counts.
        #[arg(long)]
        count: bool,
    },
    /// Generate vertex-faithful spheres.
    Generate(GenerateArgs),
    /// Count spheres and re-embeddings by number of faces.
    Table {
        #[arg(long, default_value_t = 12)]
        max_faces: usize,
        /// Count non-isomorphic surfaces instead of node-set orbits.
        #[arg(long)]
        isomorphism_classes: bool,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct GenerateArgs {
    /// All spheres with this many faces.
    #[arg(long)]
    faces: Option<usize>,
    /// A named construction: `double-ngon:K` or `prop45:N`.
    #[arg(long)]
    family: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphKind {
    Face,
    Edge,
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    #[value(name = "projective-plane", alias = "projective")]
    ProjectivePlane,
    Torus,
    #[value(name = "klein-bottle", alias = "klein")]
    KleinBottle,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = match commands::run(&cli) {
        Ok(text) => text,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(e.exit_code());
        }
    };
    let written = match &cli.output {
        Some(path) => std::fs::write(path, &out).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            use std::io::Write;
            std::io::stdout()
                .write_all(out.as_bytes())
                .map_err(|e| e.to_string())
        }
    };
    match written {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
