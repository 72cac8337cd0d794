//! The `vpq` command line: parse and normalize expressions, run
//! verification suites, export tables and dump Fock matrices.

pub mod latex;
pub mod parse;
pub mod suites;
pub mod table;

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;
use vpq_core::freealg::{R5Variant, Strategy};
use vpq_core::homlie::{vbracket, StructureConstant};
use vpq_core::oscillator::{verify_bracket, verify_power_commutator};
use vpq_core::{
    CoproductC, FockOperator, GuardSpec, HomLieElement, HopfAlgebra, Mode, Oscillator, Relations,
};

pub use parse::{parse_element, parse_scalar, ParseError};
pub use suites::{Record, Suite, VerifyOptions};
pub use table::{TableFormat, TableKind};

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Core(#[from] vpq_core::Error),
    #[error("cannot write {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{0}")]
    Usage(String),
}

#[derive(Debug, Parser)]
#[command(
    name = "vpq",
    version,
    about = "Two-parameter deformed Virasoro algebra toolkit"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    /// `q^n L_n C = p^n C L_n`.
    #[default]
    Hopf,
    /// `q^n L_n C = C L_n`.
    #[value(alias = "r5-8.11")]
    Enveloping,
}

impl From<VariantArg> for R5Variant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Hopf => R5Variant::Hopf,
            VariantArg::Enveloping => R5Variant::Enveloping,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum StrategyArg {
    #[default]
    Leftmost,
    Rightmost,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Classical,
    OneParam,
    TwoParam,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Classical => Mode::Classical,
            ModeArg::OneParam => Mode::OneParam,
            ModeArg::TwoParam => Mode::TwoParam,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TextFormat {
    Text,
    Json,
    Latex,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MatrixFormat {
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FockOp {
    /// The matrix of `L_n`.
    L,
    /// Residual of the deformed bracket of `L_n` and `L_m`.
    Bracket,
    /// Residual of the power commutator of `a` and `(a⁺)ⁿ`.
    Power,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the normal form of an expression.
    Normalize {
        expr: String,
        #[arg(long, value_enum, default_value_t)]
        variant: VariantArg,
        #[arg(long, value_enum, default_value_t)]
        strategy: StrategyArg,
        #[arg(long, value_enum, default_value = "text")]
        format: TextFormat,
    },
    /// Print the Hom-Lie bracket `[L_n, L_m]`.
    Bracket {
        #[arg(allow_negative_numbers = true)]
        n: i64,
        #[arg(allow_negative_numbers = true)]
        m: i64,
        /// Print the reordering remainder in the enveloping algebra instead.
        #[arg(long)]
        env: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: TextFormat,
    },
    /// Run a verification suite and print one JSON record per check.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        /// Index window half-width.
        #[arg(long, default_value_t = 2)]
        range: i64,
        /// Fock-space dimension.
        #[arg(long, default_value_t = 12)]
        dim: usize,
        #[arg(long, value_enum, default_value_t)]
        variant: VariantArg,
        /// Use `Δ(C) = C⊗1 + 1⊗T` as the coproduct of `C`.
        #[arg(long)]
        strict_typos: bool,
        /// Let failures under `--variant` or `--strict-typos` set the exit status.
        #[arg(long)]
        gate_typos: bool,
        #[arg(long, default_value_t = 20_240_917)]
        seed: u64,
        /// Random words for the confluence suite.
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 8)]
        max_len: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Export a table.
    Table {
        #[arg(value_enum)]
        kind: TableKind,
        #[arg(long, default_value_t = 2)]
        range: i64,
        #[arg(long, value_enum, default_value = "json")]
        format: TableFormat,
        #[arg(long, value_enum, default_value_t)]
        variant: VariantArg,
        #[arg(long)]
        strict_typos: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Dump a Fock-space matrix or residual.
    Fock {
        #[arg(value_enum)]
        op: FockOp,
        #[arg(allow_negative_numbers = true)]
        n: i64,
        #[arg(allow_negative_numbers = true)]
        m: Option<i64>,
        #[arg(long, default_value_t = 12)]
        dim: usize,
        #[arg(long, value_enum, default_value = "two-param")]
        mode: ModeArg,
        #[arg(long, value_enum, default_value = "csv")]
        format: MatrixFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// What a command produced: text for stdout (or `--out`) and an exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub output: String,
    pub out: Option<PathBuf>,
    /// 0 when every check passed, 1 when a residual was found.
    pub code: u8,
    /// Summary for stderr.
    pub note: Option<String>,
}

impl Outcome {
    fn text(output: String) -> Self {
        Outcome {
            output,
            out: None,
            code: 0,
            note: None,
        }
    }
}

fn coproduct_c(strict: bool) -> CoproductC {
    if strict {
        CoproductC::Printed
    } else {
        CoproductC::Corrected
    }
}

fn matrix(op: &FockOperator, format: MatrixFormat) -> String {
    match format {
        MatrixFormat::Csv => op.to_csv(),
        MatrixFormat::Json => op.to_json().to_string() + "\n",
    }
}

pub fn run(cli: Cli) -> Result<Outcome, CliError> {
    match cli.command {
        Command::Normalize {
            expr,
            variant,
            strategy,
            format,
        } => {
            let x = parse_element(&expr)?;
            let strategy = match strategy {
                StrategyArg::Leftmost => Strategy::Leftmost,
                StrategyArg::Rightmost => Strategy::Rightmost,
            };
            let nf = Relations::new(variant.into()).normalize_with(&x, strategy);
            Ok(Outcome::text(match format {
                TextFormat::Text => format!("{nf}\n"),
                TextFormat::Json => format!("{}\n", nf.to_json()),
                TextFormat::Latex => format!("{}\n", latex::element(&nf)),
            }))
        }
        Command::Bracket { n, m, env, format } => {
            let text = if env {
                let b = Relations::default().bracket_env(n, m);
                match format {
                    TextFormat::Text => b.to_string(),
                    TextFormat::Json => b.to_json().to_string(),
                    TextFormat::Latex => latex::element(&b),
                }
            } else {
                let b = vbracket(&HomLieElement::l(n), &HomLieElement::l(m));
                match format {
                    TextFormat::Text => b.to_string(),
                    TextFormat::Json => serde_json::to_string(&StructureConstant {
                        n,
                        m,
                        coeff_l: b.l_coeff(n + m).to_string(),
                        coeff_c: b.c_coeff().to_string(),
                    })
                    .expect("plain data"),
                    TextFormat::Latex => latex::homlie(&b),
                }
            };
            Ok(Outcome::text(text + "\n"))
        }
        Command::Verify {
            suite,
            range,
            dim,
            variant,
            strict_typos,
            gate_typos,
            seed,
            samples,
            max_len,
            out,
        } => {
            if range < 0 {
                return Err(CliError::Usage("--range must be nonnegative".into()));
            }
            let opts = VerifyOptions {
                range,
                dim,
                variant: variant.into(),
                coproduct_c: coproduct_c(strict_typos),
                seed,
                samples,
                max_len,
            };
            let records = suites::run(suite, &opts)?;
            let mut output = String::new();
            for r in &records {
                output.push_str(&serde_json::to_string(r).expect("plain data"));
                output.push('\n');
            }
            let failed = records.iter().filter(|r| !r.passed()).count();
            let gated = (variant == VariantArg::Hopf && !strict_typos) || gate_typos;
            Ok(Outcome {
                output,
                out,
                code: u8::from(failed > 0 && gated),
                note: Some(format!(
                    "{} records, {failed} failed (seed {seed})",
                    records.len()
                )),
            })
        }
        Command::Table {
            kind,
            range,
            format,
            variant,
            strict_typos,
            out,
        } => {
            if range < 0 {
                return Err(CliError::Usage("--range must be nonnegative".into()));
            }
            let h = HopfAlgebra::new(Relations::new(variant.into()), coproduct_c(strict_typos));
            Ok(Outcome {
                out,
                ..Outcome::text(table::export(kind, format, range, &h))
            })
        }
        Command::Fock {
            op,
            n,
            m,
            dim,
            mode,
            format,
            out,
        } => {
            let osc = Oscillator::new(dim, mode.into())?;
            let (mat, is_residual) = match op {
                FockOp::L => (osc.l(n)?, false),
                FockOp::Bracket => {
                    let m =
                        m.ok_or_else(|| CliError::Usage("fock bracket needs N and M".into()))?;
                    let guard = GuardSpec::new(dim, 2, n.max(m).max(0) as usize)?;
                    (verify_bracket(n, m, &osc, &guard)?, true)
                }
                FockOp::Power => (verify_power_commutator(n, &osc)?, true),
            };
            Ok(Outcome {
                code: u8::from(is_residual && !mat.is_zero()),
                out,
                ..Outcome::text(matrix(&mat, format))
            })
        }
    }
}
