use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use toric_nnd::report::{exit_code, parse_input, Command, Session, Settings};
use toric_nnd::Error;

/// Invariants of Newton nondegenerate divisors in affine toric varieties.
#[derive(Parser)]
#[command(name = "toric-nnd", version)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Dual fan of the Newton polyhedron.
    Fan(Common),
    /// Resolution graph and its normal form.
    Graph(Common),
    /// Pointedness, isolatedness, δ, geometric genus, canonical cycle.
    Invariants(Common),
    /// Diagonal computation sequence.
    Seq(Common),
    /// B1-facet reduction.
    Reduce(Common),
    /// Everything; stage failures are listed in the report.
    Report(Common),
}

#[derive(Args)]
struct Common {
    /// Input document, or `-` for standard input.
    input: PathBuf,
    /// Write the resolution graph in DOT format.
    #[arg(long, value_name = "PATH")]
    dot: Option<PathBuf>,
    /// Write the JSON report here instead of standard output.
    #[arg(long, value_name = "PATH")]
    json: Option<PathBuf>,
    /// Give up on δ after this many lattice shells.
    #[arg(long, value_name = "N")]
    delta_shell_cap: Option<usize>,
    /// Root node (vertex id) of the diagonal sequence.
    #[arg(long, value_name = "NODE_ID")]
    root: Option<usize>,
}

fn read_text(path: &PathBuf) -> Result<String, Error> {
    let mut text = String::new();
    if path.as_os_str() == "-" {
        std::io::stdin().read_to_string(&mut text).map_err(|e| Error::Input(format!("stdin: {e}")))?;
    } else {
        text = std::fs::read_to_string(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
    }
    Ok(text)
}

fn write(path: &PathBuf, text: &str) -> Result<(), Error> {
    std::fs::write(path, text).map_err(|e| Error::Input(format!("{}: {e}", path.display())))
}

fn run(cmd: Command, args: Common) -> Result<i32, Error> {
    let spec = parse_input(&read_text(&args.input)?).map_err(|e| match e {
        Error::Input(m) => Error::Input(format!("{}: {m}", args.input.display())),
        e => e,
    })?;
    let mut settings = Settings::from_spec(&spec);
    if let Some(n) = args.delta_shell_cap {
        settings.shell_cap = n;
    }
    if args.root.is_some() {
        settings.root = args.root;
    }
    let dot_path = args.dot.or_else(|| spec.options.dot.clone().map(PathBuf::from));
    let json_path = args.json.or_else(|| spec.options.json.clone().map(PathBuf::from));
    let session = Session::new(spec, settings);
    let out = session.run(cmd);
    match &json_path {
        Some(p) => write(p, &out.render())?,
        None => print!("{}", out.render()),
    }
    if let Some(p) = &dot_path {
        write(p, &session.dot()?)?;
    }
    if let Some(e) = &out.failure {
        eprintln!("toric-nnd: {} [{}]", e, e.code());
    }
    Ok(out.exit_code())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (cmd, args) = match cli.command {
        Cmd::Fan(a) => (Command::Fan, a),
        Cmd::Graph(a) => (Command::Graph, a),
        Cmd::Invariants(a) => (Command::Invariants, a),
        Cmd::Seq(a) => (Command::Seq, a),
        Cmd::Reduce(a) => (Command::Reduce, a),
        Cmd::Report(a) => (Command::Report, a),
    };
    let code = match run(cmd, args) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("toric-nnd: {} [{}]", e, e.code());
            exit_code(&e)
        }
    };
    ExitCode::from(code as u8)
}
