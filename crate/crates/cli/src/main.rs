use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use wkl::commands::{run, Command, Outcome};
use wkl::config::JobConfig;
use wkl::report::{emit, Format, Report};
use wkl::CliError;

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Cmd {
    Chartable,
    SigmaX,
    Dims,
    Orbits,
    Cells,
    ScatterRank,
    Verify,
    Tables,
    /// Run the command named in the config.
    Run,
}

#[derive(Parser, Debug)]
#[command(name = "wkl", version, about = "Whittaker dimensions of covering-group principal series")]
struct Args {
    #[arg(value_enum)]
    command: Cmd,
    /// JSON job configuration.
    #[arg(long)]
    config: Option<PathBuf>,
    /// json, csv or md.
    #[arg(long)]
    format: Option<String>,
    /// Output file, or a directory with `tables --golden`.
    #[arg(long)]
    out: Option<PathBuf>,
    /// numeric or exact.
    #[arg(long)]
    mode: Option<String>,
    /// Number of numeric seeds.
    #[arg(long)]
    seeds: Option<u64>,
    /// Numeric value of q.
    #[arg(long)]
    q: Option<u64>,
    /// Value of xi, 1 or -1.
    #[arg(long, allow_hyphen_values = true)]
    xi: Option<i64>,
    /// With `tables`: write one file per table into `--out`.
    #[arg(long)]
    golden: bool,
}

fn command(cmd: Cmd, cfg: &JobConfig) -> Result<Command, CliError> {
    Ok(match cmd {
        Cmd::Chartable => Command::Chartable,
        Cmd::SigmaX => Command::SigmaX,
        Cmd::Dims => Command::Dims,
        Cmd::Orbits => Command::Orbits,
        Cmd::Cells => Command::Cells,
        Cmd::ScatterRank => Command::ScatterRank,
        Cmd::Verify => Command::Verify,
        Cmd::Tables => Command::Tables,
        Cmd::Run => cfg
            .command
            .as_deref()
            .ok_or_else(|| CliError::Schema("config has no `command`".into()))?
            .parse()?,
    })
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn main_inner(args: Args) -> Result<Outcome, CliError> {
    let mut cfg = match &args.config {
        Some(p) => JobConfig::load(p)?,
        None => JobConfig::default(),
    };
    if let Some(m) = args.mode {
        cfg.scattering.mode = m;
    }
    if let Some(s) = args.seeds {
        cfg.scattering.seeds = s;
    }
    if let Some(q) = args.q {
        cfg.scattering.q = q;
    }
    if let Some(xi) = args.xi {
        match cfg.covering.as_mut() {
            Some(c) => c.xi = xi,
            None => return Err(CliError::Schema("--xi needs a covering".into())),
        }
    }
    let format: Format = args
        .format
        .as_deref()
        .or(cfg.format.as_deref())
        .unwrap_or("md")
        .parse()?;
    let cmd = command(args.command, &cfg)?;
    let result = run(cmd, &cfg)?;
    if args.golden && cmd == Command::Tables {
        let dir = args
            .out
            .ok_or_else(|| CliError::Schema("--golden needs --out <dir>".into()))?;
        std::fs::create_dir_all(&dir).map_err(|e| CliError::Io(e.to_string()))?;
        for t in &result.report.tables {
            let single = Report {
                command: "tables".into(),
                mirrors: vec![t.name.clone()],
                tables: vec![t.clone()],
                flags: vec![],
            };
            write(&dir.join(format!("{}.{}", t.name, format.extension())), &emit(&single, format))?;
        }
    } else {
        let text = emit(&result.report, format);
        match args.out {
            Some(p) => write(&p, &text)?,
            None => print!("{text}"),
        }
    }
    Ok(result.outcome)
}

fn main() -> ExitCode {
    let args = Args::parse();
    match main_inner(args) {
        Ok(o) => ExitCode::from(o.exit_code() as u8),
        Err(e) => {
            eprintln!("wkl: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
