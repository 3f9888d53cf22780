use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use closedpoly::family::SteinMode;
use closedpoly::{OrderSpec, Rational};
use closedpoly_cli::commands::{self, CliError, Input, Report};
use closedpoly_cli::data::parse_rational;

#[derive(Parser)]
#[command(
    name = "closedpoly",
    version,
    about = "Closedness and generative polynomials over the rationals"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderArg {
    Grlex,
    Grevlex,
}

impl From<OrderArg> for OrderSpec {
    fn from(o: OrderArg) -> Self {
        match o {
            OrderArg::Grlex => OrderSpec::GradedLex,
            OrderArg::Grevlex => OrderSpec::GradedRevLex,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    H,
    F,
}

#[derive(clap::Args)]
struct Common {
    /// Monomial order used for leading terms.
    #[arg(long, value_enum, default_value = "grlex")]
    order: OrderArg,
    /// Print a JSON document instead of the summary.
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the generative polynomial h and F with f = F(h).
    Decompose {
        /// Polynomial file, or `-` for stdin.
        #[arg(long)]
        poly: String,
        /// Try every divisor of the leading multiplicity, without pruning.
        #[arg(long)]
        no_newton: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Decide whether f is closed.
    IsClosed {
        #[arg(long)]
        poly: String,
        #[command(flatten)]
        common: Common,
    },
    /// Potential leading terms and divisor sequences of f.
    Newton {
        #[arg(long)]
        poly: String,
        #[command(flatten)]
        common: Common,
    },
    /// Jacobian test for algebraic dependence of f and g.
    Depend {
        #[arg(long)]
        f: String,
        #[arg(long)]
        g: String,
        #[arg(long)]
        json: bool,
    },
    /// Factor f + mu through the generative pair.
    Family {
        #[arg(long)]
        poly: String,
        #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
        mu: Rational,
        /// Comma-separated exceptional shifts of h.
        #[arg(long, allow_hyphen_values = true)]
        eh: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Check the factor-count inequality on a factorization-pattern file.
    Stein {
        #[arg(long)]
        data: String,
        #[arg(long, value_enum)]
        mode: ModeArg,
        /// Degree of the generic factors (f-form).
        #[arg(long)]
        d: Option<u32>,
        #[arg(long)]
        json: bool,
    },
    /// Minimal generators of the saturated monoid.
    Saturate {
        /// Generators as `a1,b1;a2,b2;...`.
        #[arg(long)]
        gens: String,
        #[arg(long)]
        bound: Option<u32>,
        #[arg(long)]
        json: bool,
    },
}

fn rational_arg(s: &str) -> Result<Rational, String> {
    parse_rational(s).ok_or_else(|| format!("not a rational number: {s:?}"))
}

fn read_source(path: &str) -> Result<String, CliError> {
    let mut text = String::new();
    let res = if path == "-" {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    res.map_err(|e| CliError::Domain(format!("cannot read {path}: {e}")))?;
    Ok(text)
}

fn run(cli: Cli) -> Result<(Report, bool), CliError> {
    match cli.command {
        Command::Decompose {
            poly,
            no_newton,
            common,
        } => {
            let text = read_source(&poly)?;
            let r = commands::decompose(
                Input {
                    name: &poly,
                    text: &text,
                },
                &common.order.into(),
                !no_newton,
            )?;
            Ok((r, common.json))
        }
        Command::IsClosed { poly, common } => {
            let text = read_source(&poly)?;
            Ok((
                commands::is_closed(
                    Input {
                        name: &poly,
                        text: &text,
                    },
                    &common.order.into(),
                )?,
                common.json,
            ))
        }
        Command::Newton { poly, common } => {
            let text = read_source(&poly)?;
            Ok((
                commands::newton(
                    Input {
                        name: &poly,
                        text: &text,
                    },
                    &common.order.into(),
                )?,
                common.json,
            ))
        }
        Command::Depend { f, g, json } => {
            let tf = read_source(&f)?;
            let tg = read_source(&g)?;
            Ok((
                commands::depend(
                    Input {
                        name: &f,
                        text: &tf,
                    },
                    Input {
                        name: &g,
                        text: &tg,
                    },
                )?,
                json,
            ))
        }
        Command::Family {
            poly,
            mu,
            eh,
            common,
        } => {
            let eh = eh
                .map(|s| commands::parse_rational_list(&s))
                .transpose()
                .map_err(CliError::Domain)?;
            let text = read_source(&poly)?;
            let r = commands::family(
                Input {
                    name: &poly,
                    text: &text,
                },
                &common.order.into(),
                &mu,
                eh.as_deref(),
            )?;
            Ok((r, common.json))
        }
        Command::Stein {
            data,
            mode,
            d,
            json,
        } => {
            let text = read_source(&data)?;
            let mode = match mode {
                ModeArg::H => SteinMode::HForm,
                ModeArg::F => SteinMode::FForm,
            };
            Ok((
                commands::stein(
                    Input {
                        name: &data,
                        text: &text,
                    },
                    mode,
                    d,
                )?,
                json,
            ))
        }
        Command::Saturate { gens, bound, json } => {
            let gens = commands::parse_gens(&gens).map_err(CliError::Domain)?;
            Ok((commands::saturate(&gens, bound)?, json))
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok((report, true)) => {
            println!(
                "{}",
                serde_json::to_string_pretty(&report.json).expect("serializable")
            );
            ExitCode::SUCCESS
        }
        Ok((report, false)) => {
            println!("{}", report.summary);
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
