use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use sphere_forge_cli::{load, run, Command, Format, Options};

/// Computations in derived categories of path algebras, driven by a JSON workspace.
#[derive(Parser, Debug)]
#[command(name = "sphere-forge", version)]
struct Cli {
    /// Workspace JSON file
    workspace: PathBuf,
    #[arg(long, value_enum, default_value_t = FormatArg::Json, global = true)]
    format: FormatArg,
    /// Seed for randomized isomorphism certificates and random cones
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Comma-separated probe names (overrides the workspace list)
    #[arg(long, value_delimiter = ',', global = true)]
    probes: Option<Vec<String>>,
    /// Comma-separated roster names (overrides the workspace list)
    #[arg(long, value_delimiter = ',', global = true)]
    roster: Option<Vec<String>>,
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Json,
    Dot,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Graded dimensions of Hom^*(X, Y)
    Hom { x: String, y: String },
    /// Serre functor applied to X
    Serre { x: String },
    /// Exceptional/spherelike profile of X
    Detect { x: String },
    /// Spherical twist T_A(X)
    Twist { a: String, x: String },
    /// Left mutation of X through E
    MutateLeft { e: String, x: String },
    /// Right mutation of X through E
    MutateRight { e: String, x: String },
    /// Projection triangles of X for an embedding
    SodProject { emb: String, x: String },
    /// The P operator of an embedding applied to X
    POp { emb: String, x: String },
    /// Asphericity triangle of a d-spherelike object
    Asphericity {
        a: String,
        #[arg(allow_negative_numbers = true)]
        d: i64,
    },
    /// Neighbourhood membership of B for the source object A
    Member {
        flavor: String,
        emb: String,
        a: String,
        b: String,
    },
    /// Splitting of B into its image and orthogonal parts
    Decompose { emb: String, b: String },
    /// Membership poset of the roster over the probes
    Poset {
        emb: String,
        #[arg(long, default_value = "frbO")]
        flavor: String,
    },
    /// Run a named verification suite
    Verify { suite: String },
}

impl From<Cmd> for Command {
    fn from(c: Cmd) -> Command {
        match c {
            Cmd::Hom { x, y } => Command::Hom { x, y },
            Cmd::Serre { x } => Command::Serre { x },
            Cmd::Detect { x } => Command::Detect { x },
            Cmd::Twist { a, x } => Command::Twist { a, x },
            Cmd::MutateLeft { e, x } => Command::MutateLeft { e, x },
            Cmd::MutateRight { e, x } => Command::MutateRight { e, x },
            Cmd::SodProject { emb, x } => Command::SodProject { emb, x },
            Cmd::POp { emb, x } => Command::POp { emb, x },
            Cmd::Asphericity { a, d } => Command::Asphericity { a, d },
            Cmd::Member { flavor, emb, a, b } => Command::Member { flavor, emb, a, b },
            Cmd::Decompose { emb, b } => Command::Decompose { emb, b },
            Cmd::Poset { emb, flavor } => Command::Poset { emb, flavor },
            Cmd::Verify { suite } => Command::Verify { suite },
        }
    }
}

fn main() -> ExitCode {
    env_logger::init();
    let cli = Cli::parse();
    let ws = match load(&cli.workspace) {
        Ok(ws) => ws,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    log::info!("loaded {} objects from {}", ws.objects().len(), cli.workspace.display());
    let opts = Options {
        format: match cli.format {
            FormatArg::Json => Format::Json,
            FormatArg::Dot => Format::Dot,
        },
        seed: cli.seed,
        probes: cli.probes,
        roster: cli.roster,
    };
    match run(&ws, &cli.command.into(), &opts) {
        Ok(out) => {
            print!("{}", out.text);
            ExitCode::from(out.exit_code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
