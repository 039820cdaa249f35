//! Command-line front end: stable text/JSON output for scripting.
//!
//! Exit codes: 0 on success, 1 when a verification command reports a
//! failure, 2 on usage or input errors.

use std::ffi::OsString;

use clap::{Args, Parser, Subcommand, ValueEnum};

use springer::combinatorics::{BlockNilpotent, Partition, Permutation};
use springer::localization::restrict_springer;
use springer::polyring::Poly;
use springer::presentation::{
    classical_generators_with_limit, equivariant_generators_with_limit, flag_generators,
    IdealPresentation, MAX_ENUMERATION_N,
};
use springer::suites::{run_suites, SuiteKind};
use springer::symfun::{factorial_elementary, factorial_schur, y_alphabet};
use springer::verify::{
    hilbert_function_with_limit, rank_certificate_with_limit, MAX_HILBERT_N, MAX_RANK_N,
};

#[derive(Parser)]
#[command(
    name = "springer",
    about = "Exact computations with equivariant cohomology of type-A Springer varieties",
    version
)]
struct Cli {
    /// Seed for all randomized checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Override the per-command soft limit on n.
    #[arg(long, global = true)]
    max_n: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct LambdaArg {
    /// Partition as comma-separated parts, e.g. 3,2,1.
    #[arg(long)]
    lambda: String,
}

impl LambdaArg {
    fn parse(&self) -> Result<Partition, String> {
        self.lambda.parse().map_err(|e| format!("{e}"))
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Equivariant,
    Classical,
    Flag,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Cas,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Vanishing,
    Action,
    Diagram,
    Schur,
    All,
}

impl SuiteArg {
    fn kind(self) -> SuiteKind {
        match self {
            SuiteArg::Vanishing => SuiteKind::Vanishing,
            SuiteArg::Action => SuiteKind::Action,
            SuiteArg::Diagram => SuiteKind::Diagram,
            SuiteArg::Schur => SuiteKind::Schur,
            SuiteArg::All => SuiteKind::All,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// List the torus fixed points of the Springer variety.
    FixedPoints {
        #[command(flatten)]
        lambda: LambdaArg,
        /// Print only the number of fixed points.
        #[arg(long)]
        count_only: bool,
    },
    /// Emit an ideal presentation.
    Generators {
        #[command(flatten)]
        lambda: LambdaArg,
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long, value_enum, default_value_t = FormatArg::Json)]
        format: FormatArg,
    },
    /// Restrict a polynomial class to every fixed point.
    Restrict {
        #[command(flatten)]
        lambda: LambdaArg,
        /// Polynomial in the text grammar, e.g. "y1*y2 - u1".
        #[arg(long)]
        poly: String,
    },
    /// Apply the symmetric-group action to a polynomial.
    Act {
        #[command(flatten)]
        lambda: LambdaArg,
        /// Permutation in one-line notation.
        #[arg(long)]
        perm: String,
        #[arg(long)]
        poly: String,
    },
    /// Hilbert function of the classical quotient.
    Hilbert {
        #[command(flatten)]
        lambda: LambdaArg,
    },
    /// Localization rank certificate.
    Rank {
        #[command(flatten)]
        lambda: LambdaArg,
    },
    /// Run verification suites; exits 1 on any failure.
    Verify {
        #[command(flatten)]
        lambda: LambdaArg,
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
    },
    /// Compare the tableau and alternating-sum forms of a factorial Schur
    /// function (the latter exists for column shapes).
    Schur {
        /// Shape as comma-separated parts, e.g. 1,1 for a column of 2.
        #[arg(long)]
        shape: String,
        /// Number of x-variables.
        #[arg(long)]
        s: usize,
        /// Comma-separated shift alphabet entries, each a polynomial,
        /// e.g. "u1,u1,u2" or "0,0,0".
        #[arg(long)]
        alphabet: String,
    },
    /// Print the refinement permutation and its filtration check.
    ExportWn {
        #[command(flatten)]
        lambda: LambdaArg,
    },
}

pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.exit_code() == 0 { 0 } else { 2 };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(&cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            2
        }
    }
}

fn dispatch(cli: &Cli) -> Result<i32, String> {
    let fail = |e: springer::Error| format!("{e}");
    match &cli.command {
        Command::FixedPoints { lambda, count_only } => {
            let lambda = lambda.parse()?;
            check_n(&lambda, cli.max_n, MAX_ENUMERATION_N, "fixed-point enumeration")?;
            let points = lambda.fixed_points();
            if *count_only {
                println!("{}", points.len());
            } else {
                for w in points {
                    println!("{w}");
                }
            }
            Ok(0)
        }
        Command::Generators {
            lambda,
            kind,
            format,
        } => {
            let lambda = lambda.parse()?;
            let max_n = cli.max_n.unwrap_or(MAX_ENUMERATION_N);
            let presentation: IdealPresentation = match kind {
                KindArg::Equivariant => {
                    equivariant_generators_with_limit(&lambda, max_n).map_err(fail)?
                }
                KindArg::Classical => {
                    classical_generators_with_limit(&lambda, max_n).map_err(fail)?
                }
                KindArg::Flag => flag_generators(lambda.n()).map_err(fail)?,
            };
            match format {
                FormatArg::Json =>

                    println!("{}", serde_json::to_string_pretty(&presentation.to_json()).unwrap()),
                FormatArg::Cas => print!("{}", presentation.to_cas_text()),
            }
            Ok(0)
        }
        Command::Restrict { lambda, poly } => {
            let lambda = lambda.parse()?;
            check_n(&lambda, cli.max_n, MAX_ENUMERATION_N, "fixed-point restriction")?;
            let poly: Poly = poly.parse().map_err(fail)?;
            let class = restrict_springer(&poly, &lambda).map_err(fail)?;
            println!("{}", serde_json::to_string_pretty(&class.to_json()).unwrap());
            Ok(0)
        }
        Command::Act { lambda, perm, poly } => {
            let lambda = lambda.parse()?;
            let w: Permutation = perm.parse().map_err(fail)?;
            if w.n() != lambda.n() {
                return Err(format!(
                    "permutation length {} does not match |lambda| = {}",
                    w.n(),
                    lambda.n()
                ));
            }
            let poly: Poly = poly.parse().map_err(fail)?;
            let acted = springer::localization::act_on_poly(&w, &poly).map_err(fail)?;
            println!("{acted}");
            Ok(0)
        }
        Command::Hilbert { lambda } => {
            let lambda = lambda.parse()?;
            let max_n = cli.max_n.unwrap_or(MAX_HILBERT_N);
            let report = hilbert_function_with_limit(&lambda, max_n).map_err(fail)?;
            println!("{}", serde_json::to_string_pretty(&report.to_json()).unwrap());
            Ok(if report.matches_rank() { 0 } else { 1 })
        }
        Command::Rank { lambda } => {
            let lambda = lambda.parse()?;
            let max_n = cli.max_n.unwrap_or(MAX_RANK_N);
            let cert = rank_certificate_with_limit(&lambda, cli.seed, max_n).map_err(fail)?;
            println!("{}", serde_json::to_string_pretty(&cert.to_json()).unwrap());
            Ok(if cert.passed { 0 } else { 1 })
        }
        Command::Verify { lambda, suite } => {
            let lambda = lambda.parse()?;
            check_n(&lambda, cli.max_n, MAX_ENUMERATION_N, "verification suites")?;
            let reports = run_suites(&lambda, suite.kind(), cli.seed).map_err(fail)?;
            let all_pass = reports.iter().all(|r| r.passed());
            let json = serde_json::json!({
                "lambda": lambda.parts().to_vec(),
                "seed": cli.seed,
                "suites": reports.iter().map(|r| r.to_json()).collect::<Vec<_>>(),
                "pass": all_pass,
            });
            println!("{}", serde_json::to_string_pretty(&json).unwrap());
            Ok(if all_pass { 0 } else { 1 })
        }
        Command::Schur { shape, s, alphabet } => {
            let shape: Partition = shape.parse().map_err(fail)?;
            let shifts: Vec<Poly> = alphabet
                .split(',')
                .map(|t| t.trim().parse().map_err(fail))
                .collect::<Result<_, _>>()?;
            let tableaux = factorial_schur(&shape, *s, &shifts).map_err(fail)?;
            let is_column = shape.parts().iter().all(|&p| p == 1);
            let alternating = if is_column {
                Some(factorial_elementary(shape.ell(), &y_alphabet(*s), &shifts).map_err(fail)?)
            } else {
                None
            };
            let json = serde_json::json!({
                "shape": shape.parts().to_vec(),
                "s": s,
                "alphabet": shifts.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
                "tableau_form": tableaux.to_string(),
                "alternating_form": alternating.as_ref().map(|p| p.to_string()),
                "equal": alternating.as_ref().map(|p| *p == tableaux),
            });
            println!("{}", serde_json::to_string_pretty(&json).unwrap());
            Ok(0)
        }
        Command::ExportWn { lambda } => {
            let lambda = lambda.parse()?;
            let wn = lambda.refinement_permutation();
            println!("{wn}");
            let nilpotent = BlockNilpotent::new(&lambda);
            let refines = nilpotent.is_refined_by(&wn);
            let blocks = lambda.refined_block_sequence();
            let compatible = (1..=lambda.n()).all(|i| {
                lambda.block_of(wn.apply(i)).map(|b| b == blocks[i - 1]).unwrap_or(false)
            });
            println!(
                "refinement-check: {}",
                if refines && compatible { "ok" } else { "FAILED" }
            );
            Ok(if refines && compatible { 0 } else { 1 })
        }
    }
}

fn check_n(
    lambda: &Partition,
    override_n: Option<usize>,
    default_limit: usize,
    op: &str,
) -> Result<(), String> {
    let limit = override_n.unwrap_or(default_limit);
    if lambda.n() > limit {
        return Err(format!(
            "n = {} exceeds the soft limit {limit} for {op}; pass --max-n to override",
            lambda.n()
        ));
    }
    Ok(())
}
