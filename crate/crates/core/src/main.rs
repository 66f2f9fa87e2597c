use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use screenq::commands::{
    cmd_act, cmd_braid, cmd_serre_scan, cmd_verify, AlgebraSource, Outcome, OutputFormat, RunConfig, Suite,
    EXIT_CONFIG,
};
use screenq::Weight;

#[derive(Parser)]
#[command(name = "screenq", version, about = "Exact screening-current representations of quantum superalgebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Catalog algebra: sl2, sl3, sl2_1, osp1_2
    #[arg(long, conflicts_with = "config")]
    algebra: Option<String>,

    /// JSON root-datum file
    #[arg(long)]
    config: Option<PathBuf>,

    #[arg(long, default_value_t = 4)]
    depth: usize,

    /// Permit depths above 12
    #[arg(long)]
    allow_deep: bool,

    /// `generic` or comma-separated coordinates such as `1,-1/3`
    #[arg(long, default_value = "generic")]
    weight: String,

    #[arg(long, value_enum, env = "SCREENQ_FORMAT", default_value = "text")]
    format: Format,

    /// Worker threads (defaults to all cores)
    #[arg(long)]
    jobs: Option<usize>,

    /// Write the report here instead of standard output
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Relations,
    Coproduct,
    Hopf,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Check identities as exact operator identities on the module
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(value_enum, default_value = "all")]
        suite: SuiteArg,
    },
    /// Apply a generator word such as "E1 F1 K2-" to a basis vector
    Act {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value = "")]
        word: String,
        /// Screening sequence of the start vector, e.g. `2,1`; empty for V_λ
        #[arg(long, default_value = "")]
        start: String,
    },
    /// Singular vectors of a given multidegree at generic weight
    SerreScan {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        multidegree: String,
    },
    /// Exchange phase of two screened vertex operators
    Braid {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        lambda1: String,
        #[arg(long, default_value = "")]
        seq1: String,
        #[arg(long, allow_hyphen_values = true)]
        lambda2: String,
        #[arg(long, default_value = "")]
        seq2: String,
    },
}

fn config(common: &Common) -> screenq::Result<RunConfig> {
    let algebra = match (&common.algebra, &common.config) {
        (_, Some(path)) => AlgebraSource::ConfigFile(path.clone()),
        (Some(name), None) => AlgebraSource::Catalog(name.clone()),
        (None, None) => return Err(screenq::Error::Config("one of --algebra or --config is required".into())),
    };
    Ok(RunConfig {
        algebra,
        depth: common.depth,
        weight: Weight::parse(&common.weight)?,
        format: match common.format {
            Format::Text => OutputFormat::Text,
            Format::Json => OutputFormat::Json,
        },
        allow_deep: common.allow_deep,
    })
}

fn run(command: &Command) -> screenq::Result<Outcome> {
    match command {
        Command::Verify { common, suite } => {
            let suite = match suite {
                SuiteArg::Relations => Suite::Relations,
                SuiteArg::Coproduct => Suite::Coproduct,
                SuiteArg::Hopf => Suite::Hopf,
                SuiteArg::All => Suite::All,
            };
            cmd_verify(&config(common)?, suite)
        }
        Command::Act { common, word, start } => cmd_act(&config(common)?, word, start),
        Command::SerreScan { common, multidegree } => cmd_serre_scan(&config(common)?, multidegree),
        Command::Braid { common, lambda1, seq1, lambda2, seq2 } => {
            cmd_braid(&config(common)?, lambda1, seq1, lambda2, seq2)
        }
    }
}

fn common(command: &Command) -> &Common {
    match command {
        Command::Verify { common, .. }
        | Command::Act { common, .. }
        | Command::SerreScan { common, .. }
        | Command::Braid { common, .. } => common,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let opts = common(&cli.command);
    if let Some(jobs) = opts.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_CONFIG as u8);
        }
    }
    match run(&cli.command) {
        Ok(outcome) => {
            let written = match &opts.output {
                Some(path) => std::fs::write(path, &outcome.output),
                None => std::io::stdout().write_all(outcome.output.as_bytes()),
            };
            if let Err(e) = written {
                eprintln!("error: {e}");
                return ExitCode::from(EXIT_CONFIG as u8);
            }
            ExitCode::from(outcome.code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_CONFIG as u8)
        }
    }
}
