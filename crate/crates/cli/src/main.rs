//! `atomlat`: run lattice and automorphism computations on JSON inputs and
//! print deterministic reports.

mod report;

use std::collections::BTreeSet;
use std::fs;
use std::process::ExitCode;

use atomlat::same_inner;
use atomlat::{
    factor_automorphism, parse_scalar, AtomLabel, AutomorphismImages, FactorError, FinSuppVector,
    LexFunctional, Operator,
};
use clap::{Parser, Subcommand};
use serde::de::DeserializeOwned;

use report::{Diagnostic, Exit, Format, InputDigest, Payload, Report};

#[derive(Parser)]
#[command(
    name = "atomlat",
    version,
    about = "Exact operator lattice computations on c00"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Recover the permutation-diagonal form from matrix-unit images.
    Factor { images: String },
    /// Operator norm on (c00, sup-norm).
    Norm { operator: String },
    /// Modulus |T|.
    Modulus { operator: String },
    /// Apply an operator to a vector.
    Apply { operator: String, vector: String },
    /// Finite truncation T_F onto the given atoms.
    Truncate {
        operator: String,
        #[arg(required = true)]
        labels: Vec<String>,
    },
    /// Decide whether an operator is positive.
    CheckPositive { operator: String },
    /// Decide whether two invertible operators induce the same inner
    /// automorphism.
    SameInner {
        first: String,
        second: String,
        /// Extra atoms to probe with matrix units.
        #[arg(long, value_delimiter = ',')]
        probe: Vec<String>,
    },
    /// Order-dual image of a functional on R^n ordered lexicographically.
    LexDual {
        /// Produce an unboundedness witness exceeding this bound.
        #[arg(long)]
        witness_bound: Option<String>,
        #[arg(required = true, allow_negative_numbers = true)]
        coeffs: Vec<String>,
    },
}

struct Session {
    inputs: Vec<InputDigest>,
}

impl Session {
    fn load<T: DeserializeOwned>(&mut self, path: &str) -> Result<T, Diagnostic> {
        let bytes = fs::read(path)
            .map_err(|e| Diagnostic::new("IoError", format!("{path}: {e}"), Exit::Other))?;
        self.inputs.push(InputDigest::new(path, &bytes));
        serde_json::from_slice(&bytes)
            .map_err(|e| Diagnostic::new("ParseError", format!("{path}: {e}"), Exit::Parse))
    }
}

fn factor_diagnostic(err: &FactorError) -> Diagnostic {
    let exit = match err {
        FactorError::NotRankOne(..) => Exit::NotRankOne,
        FactorError::NotPositive(..) => Exit::NotPositive,
        FactorError::NotAtomColumn(..) => Exit::NotAtomColumn,
        FactorError::NotInjective(..) => Exit::NotInjective,
        FactorError::InconsistentScaling(..) => Exit::InconsistentScaling,
        FactorError::NotMultiplicative(..) => Exit::NotMultiplicative,
    };
    let mut d = Diagnostic::new(err.kind(), err, exit);
    d.indices = err.indices().iter().map(|a| a.to_string()).collect();
    d
}

fn parse_label(text: &str) -> Result<AtomLabel, Diagnostic> {
    if text.is_empty() {
        return Err(Diagnostic::new(
            "ParseError",
            "atom labels must be nonempty",
            Exit::Parse,
        ));
    }
    Ok(AtomLabel::from(text))
}

fn parse_rational(text: &str) -> Result<atomlat::Scalar, Diagnostic> {
    parse_scalar(text).map_err(|e| Diagnostic::new("ParseError", e, Exit::Parse))
}

fn run(command: &Command, session: &mut Session) -> Result<Payload, Diagnostic> {
    match command {
        Command::Factor { images } => {
            let imgs: AutomorphismImages = session.load(images)?;
            factor_automorphism(&imgs)
                .map(Payload::PermDiag)
                .map_err(|e| factor_diagnostic(&e))
        }
        Command::Norm { operator } => {
            let t: Operator = session.load(operator)?;
            Ok(Payload::Scalar(t.op_norm()))
        }
        Command::Modulus { operator } => {
            let t: Operator = session.load(operator)?;
            Ok(Payload::Operator(t.modulus()))
        }
        Command::Apply { operator, vector } => {
            let t: Operator = session.load(operator)?;
            let x: FinSuppVector = session.load(vector)?;
            Ok(Payload::Vector(t.apply(&x)))
        }
        Command::Truncate { operator, labels } => {
            let t: Operator = session.load(operator)?;
            let f = labels
                .iter()
                .map(|l| parse_label(l))
                .collect::<Result<BTreeSet<_>, _>>()?;
            Ok(Payload::Operator(t.finite_truncation(&f)))
        }
        Command::CheckPositive { operator } => {
            let t: Operator = session.load(operator)?;
            Ok(Payload::Positivity(t.is_positive()))
        }
        Command::SameInner {
            first,
            second,
            probe,
        } => {
            let t1: Operator = session.load(first)?;
            let t2: Operator = session.load(second)?;
            let probe = probe
                .iter()
                .map(|l| parse_label(l))
                .collect::<Result<BTreeSet<_>, _>>()?;
            same_inner(&t1, &t2, &probe)
                .map(Payload::SameInner)
                .map_err(|e| Diagnostic::new("NotInvertible", e, Exit::NotInvertible))
        }
        Command::LexDual {
            witness_bound,
            coeffs,
        } => {
            let coeffs = coeffs
                .iter()
                .map(|c| parse_rational(c))
                .collect::<Result<Vec<_>, _>>()?;
            let phi = LexFunctional::new(coeffs)
                .map_err(|e| Diagnostic::new("LexError", e, Exit::Other))?;
            let first_unbounded = phi.first_unbounded_index();
            let witness = match (witness_bound, first_unbounded) {
                (Some(b), Some(_)) => {
                    let bound = parse_rational(b)?;
                    Some(
                        phi.unboundedness_witness(&bound)
                            .map_err(|e| Diagnostic::new("LexError", e, Exit::Other))?,
                    )
                }
                _ => None,
            };
            Ok(Payload::LexDual {
                dual_image: phi.dual_image(),
                first_unbounded,
                witness,
            })
        }
    }
}

fn echo(args: &[String]) -> String {
    args.join(" ")
}

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if e.use_stderr() => {
            eprint!("{e}");
            return ExitCode::from(Exit::Parse as u8);
        }
        Err(e) => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
    };
    let mut session = Session { inputs: Vec::new() };
    let outcome = run(&cli.command, &mut session);
    let report = Report {
        command: echo(&args),
        inputs: session.inputs,
        outcome,
    };
    print!("{}", report.render(cli.format));
    ExitCode::from(report.exit() as u8)
}
