use std::io::Write;
use std::process::ExitCode;

use chenforms_cli::{
    cmd_coeffs, cmd_itint, cmd_order_cert, cmd_period, cmd_period_matrix, cmd_verify, Check,
    CliError, Overrides, RunConfig,
};
use clap::{Parser, Subcommand};

#[derive(Parser, Debug)]
#[command(name = "chenforms", version, about = "Iterated integrals of modular 1-forms and higher-order forms")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Group level (only 11 has built-in forms).
    #[arg(long, global = true)]
    level: Option<u64>,
    /// Quadrature target tolerance.
    #[arg(long, global = true)]
    tol: Option<f64>,
    /// q-expansion truncation.
    #[arg(long, global = true)]
    terms: Option<usize>,
    /// Initial panels per path segment.
    #[arg(long, global = true)]
    panels: Option<usize>,
    /// Gauss–Legendre nodes per panel.
    #[arg(long, global = true)]
    nodes: Option<usize>,
    /// Base point "re,im".
    #[arg(long, global = true, allow_hyphen_values = true)]
    basepoint: Option<String>,
    /// File with one "a,b,c,d" group element per line.
    #[arg(long, global = true)]
    elements: Option<String>,
    /// key=value configuration file.
    #[arg(long, global = true)]
    config: Option<String>,
    /// Constancy sample points "re,im;re,im;…".
    #[arg(long = "z-samples", global = true, allow_hyphen_values = true)]
    z_samples: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// q-expansion coefficients a_0..a_N as TSV.
    Coeffs {
        form: String,
        #[arg(default_value_t = 10)]
        n: usize,
    },
    /// Period of one letter along z → g·z.
    Period {
        letter: String,
        element: String,
        #[arg(long, allow_hyphen_values = true)]
        z: Option<String>,
    },
    /// Iterated integral of a word along a polyline.
    Itint {
        word: String,
        #[arg(allow_hyphen_values = true)]
        path: String,
    },
    /// Run a named verification suite.
    Verify { check: String },
    /// Order certificate for the form built from an unmixed word.
    OrderCert {
        word: String,
        #[arg(long, default_value_t = 5)]
        count: usize,
    },
    /// Period matrix of the weight-2 basis against the elements.
    PeriodMatrix,
}

fn run(cli: &Cli) -> Result<chenforms_cli::Report, CliError> {
    let flags = Overrides {
        level: cli.level,
        truncation: cli.terms,
        tol: cli.tol,
        panels: cli.panels,
        nodes: cli.nodes,
        basepoint: cli.basepoint.clone(),
        elements_file: cli.elements.clone(),
        z_samples: cli.z_samples.clone(),
    };
    let cfg = RunConfig::resolve(cli.config.as_deref(), &flags)?;
    match &cli.command {
        Command::Coeffs { form, n } => cmd_coeffs(&cfg, form, *n),
        Command::Period { letter, element, z } => cmd_period(&cfg, letter, element, z.as_deref()),
        Command::Itint { word, path } => cmd_itint(&cfg, word, path),
        Command::Verify { check } => cmd_verify(&cfg, check.parse::<Check>()?),
        Command::OrderCert { word, count } => cmd_order_cert(&cfg, word, *count),
        Command::PeriodMatrix => cmd_period_matrix(&cfg),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            let mut out = std::io::stdout().lock();
            let _ = out.write_all(report.text.as_bytes());
            let _ = out.flush();
            ExitCode::from(report.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
