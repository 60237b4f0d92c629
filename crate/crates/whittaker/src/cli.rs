//! Argument parsing and the four subcommands.
//!
//! Exit codes: 0 success, 1 an identity failed, 2 bad usage or input.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use whittaker_core::alcove::ramyip_sum;
use whittaker_core::compression::stats::{fiber_term, SignConvention};
use whittaker_core::compression::{
    generation_tree, root_column, root_filling, sort_preimage, strong_compression_closed_form,
};
use whittaker_core::fillings::hhl_sum;
use whittaker_core::tokuyama::tokuyama_sum;
use whittaker_core::{LaurentPoly, Ssyt};

use crate::convention::{self, VariableMap};
use crate::dot::{tree_to_dot, tree_to_json};
use crate::io::{parse_list, parse_partition, parse_ssyt, poly_to_json, poly_to_value};
use crate::verify::{self, Bounds};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "whittaker",
    version,
    about = "Spherical Whittaker function formulas and compression checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the polynomial given by one of the three formulas.
    Eval(EvalArgs),
    /// List the fillings that sort to a tableau, with their terms.
    Preimage(PreimageArgs),
    /// Emit the generation tree of a two-column configuration.
    Tree(TreeArgs),
    /// Run the identity sweep over small (λ, n).
    Verify(VerifyArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Formula {
    Ramyip,
    Hhl,
    Tokuyama,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Pretty,
    Json,
    Dot,
}

#[derive(Args, Debug)]
struct EvalArgs {
    /// Comma-separated parts; "" is the zero partition.
    #[arg(long, default_value = "", allow_hyphen_values = true)]
    lambda: String,
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, default_value_t = Formula::Hhl)]
    formula: Formula,
    #[arg(long, value_enum, default_value_t = Format::Pretty)]
    format: Format,
}

#[derive(Args, Debug)]
struct PreimageArgs {
    /// Tableau file, rows top first; "-" reads standard input.
    file: PathBuf,
    #[arg(long)]
    n: usize,
    /// If given, the tableau must have shape λ+ρ.
    #[arg(long)]
    lambda: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Pretty)]
    format: Format,
}

#[derive(Args, Debug)]
struct TreeArgs {
    #[arg(long)]
    n: usize,
    /// Values of the left column, in any order.
    #[arg(long, requires = "right", conflicts_with = "ssyt")]
    left: Option<String>,
    /// The fixed right column, top first.
    #[arg(long)]
    right: Option<String>,
    /// Further columns to the right, leftmost first; repeatable.
    #[arg(long)]
    context: Vec<String>,
    /// Tableau file: the tree of its first column against the root of the rest.
    #[arg(long)]
    ssyt: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Dot)]
    format: Format,
    /// Merge chains of single-child nodes.
    #[arg(long)]
    collapse_unary: bool,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, default_value_t = 3)]
    max_n: usize,
    #[arg(long, default_value_t = 2)]
    max_lambda1: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Random admissible pairs per instance for the length formula.
    #[arg(long, default_value_t = 1000)]
    samples: usize,
    #[arg(long, value_enum, default_value_t = Format::Pretty)]
    format: Format,
    /// Corrupt the descent statistic of the weak-compression closed form.
    #[arg(long, hide = true)]
    negative_control: bool,
}

struct Failure {
    code: i32,
    message: String,
}

fn usage(message: impl std::fmt::Display) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.to_string(),
    }
}

fn read_input(path: &PathBuf) -> Result<String, Failure> {
    if path.as_os_str() == "-" {
        std::io::read_to_string(std::io::stdin()).map_err(usage)
    } else {
        std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))
    }
}

fn variable_map() -> Result<VariableMap, Failure> {
    convention::detect().ok_or(Failure {
        code: EXIT_FAILED,
        message: "no variable map reconciles the pattern and filling sides at n = 2".into(),
    })
}

fn print_poly(out: &mut dyn Write, p: &LaurentPoly, format: Format) -> std::io::Result<()> {
    match format {
        Format::Json => writeln!(out, "{}", poly_to_json(p)),
        _ => writeln!(out, "{p}"),
    }
}

fn eval(args: &EvalArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let lam = parse_partition(&args.lambda).map_err(usage)?;
    if args.n == 0 || lam.num_parts() >= args.n {
        return Err(usage(format!(
            "lambda {lam} needs at most n - 1 parts with n >= 1"
        )));
    }
    let p = match args.formula {
        Formula::Ramyip => ramyip_sum(&lam, args.n),
        Formula::Hhl => hhl_sum(&lam, args.n),
        Formula::Tokuyama => tokuyama_sum(&lam, args.n),
    }
    .map_err(usage)?;
    let p = if args.formula == Formula::Tokuyama {
        variable_map()?.apply(&p)
    } else {
        p
    };
    print_poly(out, &p, args.format).map_err(usage)?;
    Ok(EXIT_OK)
}

fn preimage(args: &PreimageArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let tableau: Ssyt = parse_ssyt(&read_input(&args.file)?).map_err(usage)?;
    if let Some(l) = &args.lambda {
        let lam = parse_partition(l).map_err(usage)?;
        let shape = lam.plus_rho(args.n).map_err(usage)?;
        if tableau.shape() != shape {
            return Err(usage(format!(
                "tableau has shape {}, expected {shape}",
                tableau.shape()
            )));
        }
    }
    let n = args.n;
    let fillings = sort_preimage(&tableau, n).map_err(usage)?;
    let mut sum = LaurentPoly::zero(0);
    let mut terms = Vec::with_capacity(fillings.len());
    for f in &fillings {
        let term = fiber_term(f, n, SignConvention::Inversions).map_err(usage)?;
        sum = &sum + &term;
        terms.push(term);
    }
    let closed = strong_compression_closed_form(&tableau, n).map_err(usage)?;
    let ok = sum == closed;
    match args.format {
        Format::Json => {
            let listed: Vec<_> = fillings
                .iter()
                .zip(&terms)
                .map(|(f, t)| json!({ "rows": f.rows(), "term": poly_to_value(t) }))
                .collect();
            let v = json!({
                "fillings": listed,
                "sum": poly_to_value(&sum),
                "closed_form": poly_to_value(&closed),
                "match": ok,
            });
            writeln!(out, "{v}").map_err(usage)?;
        }
        _ => {
            for (f, t) in fillings.iter().zip(&terms) {
                writeln!(out, "{f}  {t}").map_err(usage)?;
            }
            writeln!(out, "fillings: {}", fillings.len()).map_err(usage)?;
            writeln!(out, "sum: {sum}").map_err(usage)?;
            writeln!(out, "closed form: {closed}").map_err(usage)?;
            writeln!(out, "{}", if ok { "match" } else { "MISMATCH" }).map_err(usage)?;
        }
    }
    Ok(if ok { EXIT_OK } else { EXIT_FAILED })
}

fn tree(args: &TreeArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let (set, right, context) = if let Some(path) = &args.ssyt {
        let tableau = parse_ssyt(&read_input(path)?).map_err(usage)?;
        let root = root_filling(&tableau).map_err(usage)?;
        let cols = root.into_columns();
        if cols.len() < 2 {
            return Err(usage("the tableau needs at least two columns"));
        }
        (cols[0].clone(), cols[1].clone(), cols[2..].to_vec())
    } else {
        let (Some(left), Some(right)) = (&args.left, &args.right) else {
            return Err(usage("give --left and --right, or --ssyt"));
        };
        let context = args
            .context
            .iter()
            .map(|c| parse_list(c))
            .collect::<Result<Vec<_>, _>>()
            .map_err(usage)?;
        (
            parse_list(left).map_err(usage)?,
            parse_list(right).map_err(usage)?,
            context,
        )
    };
    let root = root_column(&set, &right).map_err(usage)?;
    let tree = generation_tree(&root, &right, &context, args.n).map_err(usage)?;
    match args.format {
        Format::Json => writeln!(out, "{}", tree_to_json(&tree)),
        _ => write!(out, "{}", tree_to_dot(&tree, args.collapse_unary)),
    }
    .map_err(usage)?;
    Ok(EXIT_OK)
}

fn run_verify(args: &VerifyArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    if args.max_n == 0 {
        return Err(usage("--max-n must be positive"));
    }
    let bounds = Bounds {
        max_n: args.max_n,
        max_lambda1: args.max_lambda1,
        seed: args.seed,
        samples: args.samples,
        negative_control: args.negative_control,
    };
    let report = verify::run(&bounds, variable_map()?).map_err(usage)?;
    match args.format {
        Format::Json => {
            let checks: serde_json::Map<String, serde_json::Value> = report
                .audit
                .checks()
                .iter()
                .map(|(k, t)| {
                    ((*k).to_owned(), json!({ "passed": t.passed, "failed": t.failed, "counterexample": t.first_failure }))
                })
                .collect();
            let v = json!({
                "variable_map": report.map.to_string(),
                "instances": report.instances,
                "checks": checks,
                "passed": report.passed(),
            });
            writeln!(out, "{v}")
        }
        _ => write!(out, "{}", report.render()),
    }
    .map_err(usage)?;
    Ok(if report.passed() {
        EXIT_OK
    } else {
        EXIT_FAILED
    })
}

/// Parses `args` (program name first), runs the command and returns the
/// exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let result = match &cli.command {
        Command::Eval(a) => eval(a, out),
        Command::Preimage(a) => preimage(a, out),
        Command::Tree(a) => tree(a, out),
        Command::Verify(a) => run_verify(a, out),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}
