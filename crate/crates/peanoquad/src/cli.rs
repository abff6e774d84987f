//! Command-line front end.
//!
//! Every numeric value is printed either as an exact `p/q` string or as a
//! directed-rounded decimal interval, never as bare floating point, so the
//! output can feed regression tests byte for byte. The numeric-backend
//! decimal precision is taken from `PEANO_PRECISION` (default 50); an
//! alternative node table can be supplied with `--nodes-file`.

use crate::combo::{lookup_rule, parse_combo};
use crate::convexity::{corpus, corpus_function, Smoothness};
use crate::enclosure::{
    bracket_rule_pair, compare_remainders, composite_enclose, radau_counterexample,
    sampled_precheck,
};
use crate::field::FieldElement;
use crate::interval::RationalInterval;
use crate::numeric::NodeTable;
use crate::peano::{certify_sign, RemainderFunctional, SignVerdict};
use crate::rational::{decimal_string, parse_rational, pow10, rat_int, Rational, RoundDir};
use crate::rules::{builtin_rule, QuadratureRule, RuleValue, BUILTIN_RULES};
use clap::{Parser, Subcommand, ValueEnum};
use num_traits::One;
use rand::rngs::StdRng;
use rand::SeedableRng;
use serde::{Deserialize, Serialize};
use std::io::Write;
use std::path::PathBuf;
use thiserror::Error;

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Combo(#[from] crate::combo::ComboParseError),
    #[error("{0}")]
    Rule(#[from] crate::rules::RuleError),
    #[error("{0}")]
    Peano(#[from] crate::peano::PeanoError),
    #[error("{0}")]
    Enclose(#[from] crate::enclosure::EncloseError),
    #[error("{0}")]
    NodeTable(#[from] crate::numeric::NodeTableError),
    #[error("unknown corpus function `{0}`")]
    UnknownFunction(String),
    #[error("invalid rational `{0}`")]
    BadRational(String),
    #[error("corpus functions are declared on [-1, 1]; need -1 <= a < b <= 1")]
    DomainOutOfRange,
    #[error("figure quadratures are 1/2*G_n + 1/2*Lob_(n+1) for n in {{4, 5}}, got n = {0}")]
    BadFigureOrder(u32),
    #[error(
        "exact kernel pieces are unavailable for a numeric-backend combination; use --output csv"
    )]
    NumericKernelJson,
    #[error("PEANO_PRECISION must be a positive integer, got `{0}`")]
    BadPrecision(String),
    #[error("write failed: {0}")]
    Io(#[from] std::io::Error),
}

#[derive(Parser)]
#[command(
    name = "peanoquad",
    version,
    about = "Exact quadrature rules, Peano kernel certification, and guaranteed integral enclosures"
)]
struct Cli {
    /// JSON node table for the numeric-backend rules (defaults to the embedded one)
    #[arg(long, global = true, value_name = "PATH")]
    nodes_file: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Quadrature rule catalog
    Rules {
        #[command(subcommand)]
        action: ListAction,
    },
    /// Integrand corpus
    Corpus {
        #[command(subcommand)]
        action: ListAction,
    },
    /// Exact error constant ∫K of the remainder of a rule combination
    Constant {
        /// Combination, e.g. 0.5*g2+0.5*lob3
        #[arg(long)]
        combo: String,
        /// Peano order r (the functional must annihilate degree ≤ r−1)
        #[arg(long)]
        order: u32,
        /// Certify ∫ − Q instead of Q − ∫
        #[arg(long)]
        flip: bool,
    },
    /// Sign-certify the Peano kernel of a rule combination
    Certify {
        #[arg(long)]
        combo: String,
        #[arg(long)]
        order: u32,
        #[arg(long)]
        flip: bool,
        /// Exit with status 2 unless the verdict matches
        #[arg(long, value_enum)]
        expect: Option<ExpectedVerdict>,
    },
    /// Peano kernel: exact pieces as JSON, or grid enclosures as CSV
    Kernel {
        #[arg(long)]
        combo: String,
        #[arg(long)]
        order: u32,
        #[arg(long)]
        flip: bool,
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        output: OutputFormat,
        /// Grid points for CSV output
        #[arg(long, default_value_t = 101)]
        grid: u32,
    },
    /// Gauss vs Lobatto remainders of a corpus function on [−1, 1]
    Compare {
        #[arg(long = "fn")]
        function: String,
        #[arg(long)]
        n: u32,
    },
    /// Certified enclosure of the integral of a (2n−1)-convex corpus function
    Enclose {
        #[arg(long = "fn")]
        function: String,
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        #[arg(long)]
        n: u32,
        /// Target bracket width
        #[arg(long)]
        tol: String,
        #[arg(long, default_value_t = 24)]
        max_depth: u32,
    },
    /// Reproduce a counterexample report
    Counterexample {
        #[arg(value_enum)]
        which: CounterexampleKind,
    },
    /// Kernel-enclosure CSV for the ½G_n + ½Lob_{n+1} quadratures, n ∈ {4, 5}
    Figure {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 400)]
        grid: u32,
    },
}

#[derive(Subcommand)]
enum ListAction {
    /// Dump the catalog as JSON
    List,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExpectedVerdict {
    Nonnegative,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum CounterexampleKind {
    Radau,
}

/// Runs the CLI. Exit code 0 on success, 1 on usage or evaluation errors,
/// 2 when `certify --expect` is not met.
pub fn run<O: Write, E: Write>(
    args: impl IntoIterator<Item = String>,
    out: &mut O,
    err: &mut E,
) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return 0;
            }
            let _ = write!(err, "{e}");
            return 1;
        }
    };
    let digits = match std::env::var("PEANO_PRECISION") {
        Ok(v) => match v.parse::<u32>() {
            Ok(d) if d >= 1 => d,
            _ => {
                let _ = writeln!(err, "error: {}", CliError::BadPrecision(v));
                return 1;
            }
        },
        Err(_) => 50,
    };
    match execute(cli, digits, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

fn execute<O: Write>(cli: Cli, digits: u32, out: &mut O) -> Result<i32, CliError> {
    let table = match &cli.nodes_file {
        Some(path) => NodeTable::from_path(path)?,
        None => NodeTable::embedded(),
    };
    match cli.command {
        Command::Rules {
            action: ListAction::List,
        } => rules_list(&table, digits, out),
        Command::Corpus {
            action: ListAction::List,
        } => corpus_list(out),
        Command::Constant { combo, order, flip } => constant(&table, &combo, order, flip, out),
        Command::Certify {
            combo,
            order,
            flip,
            expect,
        } => certify(&table, &combo, order, flip, expect, out),
        Command::Kernel {
            combo,
            order,
            flip,
            output,
            grid,
        } => kernel(&table, &combo, order, flip, output, grid, digits, out),
        Command::Compare { function, n } => compare(&function, n, digits, out),
        Command::Enclose {
            function,
            a,
            b,
            n,
            tol,
            max_depth,
        } => enclose(&function, &a, &b, n, &tol, max_depth, digits, out),
        Command::Counterexample {
            which: CounterexampleKind::Radau,
        } => radau(digits, out),
        Command::Figure { n, grid } => figure(&table, n, grid, digits, out),
    }
}

// ---- output schemas -------------------------------------------------------

#[derive(Serialize, Deserialize)]
pub struct FieldJson {
    pub a: String,
    pub b: String,
    pub c: String,
    pub d: String,
}

impl From<&FieldElement> for FieldJson {
    fn from(x: &FieldElement) -> Self {
        let (a, b, c, d) = x.coordinates();
        FieldJson {
            a: a.to_string(),
            b: b.to_string(),
            c: c.to_string(),
            d: d.to_string(),
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
pub enum ValueJson {
    Exact(FieldJson),
    Interval([String; 2]),
}

#[derive(Serialize, Deserialize)]
pub struct IntervalJson {
    pub lo: String,
    pub hi: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact: Option<String>,
}

#[derive(Serialize, Deserialize)]
pub struct PointJson {
    pub node: ValueJson,
    pub weight: ValueJson,
}

#[derive(Serialize, Deserialize)]
pub struct RuleJson {
    pub name: String,
    pub backend: String,
    pub exactness_degree: u32,
    pub symmetric: bool,
    pub points: Vec<PointJson>,
}

#[derive(Serialize, Deserialize)]
pub struct CorpusJson {
    pub name: String,
    pub convexity_orders: Vec<u32>,
    /// Largest r with f ∈ C^r; null means infinitely smooth.
    pub smoothness: Option<u32>,
}

#[derive(Serialize, Deserialize)]
pub struct ConstantJson {
    pub constant: String,
}

#[derive(Serialize, Deserialize)]
pub struct CertifyJson {
    pub verdict: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<crate::peano::SignChangeWitness>,
}

#[derive(Serialize, Deserialize)]
pub struct KernelJson {
    pub combo: String,
    pub order: u32,
    pub breakpoints: Vec<FieldJson>,
    pub pieces: Vec<Vec<FieldJson>>,
}

#[derive(Serialize, Deserialize)]
pub struct CompareJson {
    #[serde(rename = "fn")]
    pub function: String,
    pub n: u32,
    pub gauss_error: IntervalJson,
    pub lobatto_error: IntervalJson,
    pub reference_integral: IntervalJson,
    pub theorem_holds: bool,
}

#[derive(Serialize, Deserialize)]
pub struct EncloseJson {
    #[serde(rename = "fn")]
    pub function: String,
    pub n: u32,
    pub a: String,
    pub b: String,
    pub lower: IntervalJson,
    pub upper: IntervalJson,
    pub best_estimate: String,
    pub width: String,
    pub rule_pair: [String; 2],
    pub subdivisions: u32,
}

#[derive(Serialize, Deserialize)]
pub struct RadauJson {
    pub polynomial_residual: String,
    pub rational_fn_rule_value: String,
    pub rational_fn_residual: IntervalJson,
    pub signs_differ: bool,
}

fn interval_json(i: &RationalInterval, places: u32) -> IntervalJson {
    IntervalJson {
        lo: decimal_string(i.lo(), places, RoundDir::Down),
        hi: decimal_string(i.hi(), places, RoundDir::Up),
        exact: if i.is_point() {
            Some(i.lo().to_string())
        } else {
            None
        },
    }
}

fn value_json(v: &RuleValue, places: u32) -> ValueJson {
    match v {
        RuleValue::Exact(x) => ValueJson::Exact(FieldJson::from(x)),
        RuleValue::Approx(i) => ValueJson::Interval([
            decimal_string(i.lo(), places, RoundDir::Down),
            decimal_string(i.hi(), places, RoundDir::Up),
        ]),
    }
}

// ---- subcommands ----------------------------------------------------------

fn rule_json(rule: &QuadratureRule, exactness: u32, places: u32) -> RuleJson {
    RuleJson {
        name: rule.name().to_string(),
        backend: if rule.is_exact_backend() {
            "exact"
        } else {
            "numeric"
        }
        .to_string(),
        exactness_degree: exactness,
        symmetric: rule.is_symmetric(),
        points: rule
            .points()
            .iter()
            .map(|p| PointJson {
                node: value_json(p.node(), places),
                weight: value_json(p.weight(), places),
            })
            .collect(),
    }
}

fn rules_list<O: Write>(table: &NodeTable, digits: u32, out: &mut O) -> Result<i32, CliError> {
    let mut catalog = Vec::new();
    for name in BUILTIN_RULES {
        let rule = builtin_rule(name)?;
        let d = rule.exactness_degree()?;
        catalog.push(rule_json(&rule, d, digits + 2));
    }
    for entry in &table.rules {
        let rule = table.rule(&entry.name)?;
        catalog.push(rule_json(&rule, entry.exactness_degree, digits + 2));
    }
    writeln!(
        out,
        "{}",
        serde_json::to_string(&catalog).expect("serializable")
    )?;
    Ok(0)
}

fn corpus_list<O: Write>(out: &mut O) -> Result<i32, CliError> {
    let list: Vec<CorpusJson> = corpus()
        .iter()
        .map(|f| CorpusJson {
            name: f.name().to_string(),
            convexity_orders: f.known_convexity_orders().iter().copied().collect(),
            smoothness: match f.smoothness() {
                Smoothness::Infinite => None,
                Smoothness::Finite(r) => Some(r),
            },
        })
        .collect();
    writeln!(
        out,
        "{}",
        serde_json::to_string(&list).expect("serializable")
    )?;
    Ok(0)
}

fn functional(
    table: &NodeTable,
    combo: &str,
    order: u32,
    flip: bool,
) -> Result<RemainderFunctional, CliError> {
    let spec = parse_combo(combo)?;
    let rule = spec.resolve(table)?.flatten()?;
    let e = if flip {
        RemainderFunctional::integral_minus_rule(rule, order)?
    } else {
        RemainderFunctional::rule_minus_integral(rule, order)?
    };
    Ok(e)
}

fn constant<O: Write>(
    table: &NodeTable,
    combo: &str,
    order: u32,
    flip: bool,
    out: &mut O,
) -> Result<i32, CliError> {
    let e = functional(table, combo, order, flip)?;
    let kernel = e.build_kernel()?;
    let c = crate::peano::error_constant(&kernel);
    let rendered = match c.as_rational() {
        Some(r) => r.to_string(),
        None => serde_json::to_string(&c).expect("serializable"),
    };
    let doc = ConstantJson { constant: rendered };
    writeln!(
        out,
        "{}",
        serde_json::to_string(&doc).expect("serializable")
    )?;
    Ok(0)
}

fn certify<O: Write>(
    table: &NodeTable,
    combo: &str,
    order: u32,
    flip: bool,
    expect: Option<ExpectedVerdict>,
    out: &mut O,
) -> Result<i32, CliError> {
    let e = functional(table, combo, order, flip)?;
    let kernel = e.build_kernel()?;
    let verdict = certify_sign(&kernel);
    let doc = CertifyJson {
        verdict: verdict.label().to_string(),
        witness: match &verdict {
            SignVerdict::SignChanging(w) => Some((**w).clone()),
            _ => None,
        },
    };
    writeln!(
        out,
        "{}",
        serde_json::to_string(&doc).expect("serializable")
    )?;
    let code = match (expect, &verdict) {
        (Some(ExpectedVerdict::Nonnegative), SignVerdict::Nonnegative) => 0,
        (Some(ExpectedVerdict::Nonnegative), _) => 2,
        (None, _) => 0,
    };
    Ok(code)
}

#[allow(clippy::too_many_arguments)]
fn kernel<O: Write>(
    table: &NodeTable,
    combo: &str,
    order: u32,
    flip: bool,
    output: OutputFormat,
    grid: u32,
    digits: u32,
    out: &mut O,
) -> Result<i32, CliError> {
    let e = functional(table, combo, order, flip)?;
    match output {
        OutputFormat::Json => {
            if !e.rule().is_exact_backend() {
                return Err(CliError::NumericKernelJson);
            }
            let kernel = e.build_kernel()?;
            let doc = KernelJson {
                combo: combo.to_string(),
                order,
                breakpoints: kernel.breakpoints().iter().map(FieldJson::from).collect(),
                pieces: kernel
                    .pieces()
                    .iter()
                    .map(|p| p.coeffs().iter().map(FieldJson::from).collect())
                    .collect(),
            };
            writeln!(
                out,
                "{}",
                serde_json::to_string(&doc).expect("serializable")
            )?;
        }
        OutputFormat::Csv => {
            let samples = e.kernel_samples(grid, digits, None)?;
            let places = digits + 2;
            writeln!(out, "x_lo,x_hi,K_lo,K_hi")?;
            for s in samples {
                writeln!(
                    out,
                    "{},{},{},{}",
                    decimal_string(&s.x, places, RoundDir::Down),
                    decimal_string(&s.x, places, RoundDir::Up),
                    decimal_string(s.value.lo(), places, RoundDir::Down),
                    decimal_string(s.value.hi(), places, RoundDir::Up),
                )?;
            }
        }
    }
    Ok(0)
}

fn compare<O: Write>(function: &str, n: u32, digits: u32, out: &mut O) -> Result<i32, CliError> {
    let f = corpus_function(function).ok_or_else(|| CliError::UnknownFunction(function.into()))?;
    let report = compare_remainders(&f, n, digits)?;
    let margin = pow10(digits.saturating_sub(10).max(10)).recip();
    let places = digits + 2;
    let doc = CompareJson {
        function: function.to_string(),
        n,
        gauss_error: interval_json(&report.gauss_error, places),
        lobatto_error: interval_json(&report.lobatto_error, places),
        reference_integral: interval_json(&report.reference_integral, places),
        theorem_holds: report.theorem_holds_within(&margin),
    };
    writeln!(
        out,
        "{}",
        serde_json::to_string(&doc).expect("serializable")
    )?;
    Ok(0)
}

#[allow(clippy::too_many_arguments)]
fn enclose<O: Write>(
    function: &str,
    a: &str,
    b: &str,
    n: u32,
    tol: &str,
    max_depth: u32,
    digits: u32,
    out: &mut O,
) -> Result<i32, CliError> {
    let f = corpus_function(function).ok_or_else(|| CliError::UnknownFunction(function.into()))?;
    let a: Rational = parse_rational(a).map_err(|_| CliError::BadRational(a.into()))?;
    let b: Rational = parse_rational(b).map_err(|_| CliError::BadRational(b.into()))?;
    let tol: Rational = parse_rational(tol).map_err(|_| CliError::BadRational(tol.into()))?;
    if a < rat_int(-1) || b > rat_int(1) || a >= b {
        return Err(CliError::DomainOutOfRange);
    }
    let (lo_name, hi_name) = bracket_rule_pair(n)?;
    let convexity_order = 2 * n - 1;
    if !f.is_declared_convex(convexity_order) {
        // not analytically known: run the sampled pre-check (deterministic seed)
        let mut rng = StdRng::seed_from_u64(0);
        sampled_precheck(&f, convexity_order, 1000, (&a, &b), &mut rng)?;
    }
    let result = composite_enclose(&f, &a, &b, n, &tol, max_depth, digits)?;
    let places = digits + 2;
    let doc = EncloseJson {
        function: function.to_string(),
        n,
        a: a.to_string(),
        b: b.to_string(),
        lower: interval_json(result.lower_value(), places),
        upper: interval_json(result.upper_value(), places),
        best_estimate: decimal_string(&result.best_estimate(), places, RoundDir::Nearest),
        width: decimal_string(&result.width(), places, RoundDir::Up),
        rule_pair: [lo_name.to_string(), hi_name.to_string()],
        subdivisions: result.subdivisions(),
    };
    writeln!(
        out,
        "{}",
        serde_json::to_string(&doc).expect("serializable")
    )?;
    Ok(0)
}

fn radau<O: Write>(digits: u32, out: &mut O) -> Result<i32, CliError> {
    let report = radau_counterexample(digits)?;
    let doc = RadauJson {
        polynomial_residual: report.polynomial_residual.to_string(),
        rational_fn_rule_value: report.rational_fn_rule_value.to_string(),
        rational_fn_residual: interval_json(&report.rational_fn_residual, digits + 2),
        signs_differ: report.signs_differ,
    };
    writeln!(
        out,
        "{}",
        serde_json::to_string(&doc).expect("serializable")
    )?;
    Ok(0)
}

fn figure<O: Write>(
    table: &NodeTable,
    n: u32,
    grid: u32,
    digits: u32,
    out: &mut O,
) -> Result<i32, CliError> {
    if !(n == 4 || n == 5) {
        return Err(CliError::BadFigureOrder(n));
    }
    let g = lookup_rule(&format!("g{n}"), table)?;
    let lob = lookup_rule(&format!("lob{}", n + 1), table)?;
    let half = Rational::one() / rat_int(2);
    let rule = crate::rules::combine(&[(half.clone(), &g), (half, &lob)])?;
    let e = RemainderFunctional::rule_minus_integral(rule, 2 * n)?;
    let samples = e.kernel_samples(grid, digits, None)?;
    let places = digits + 2;
    writeln!(out, "x,K_lo,K_hi")?;
    for s in samples {
        writeln!(
            out,
            "{},{},{}",
            s.x,
            decimal_string(s.value.lo(), places, RoundDir::Down),
            decimal_string(s.value.hi(), places, RoundDir::Up),
        )?;
    }
    Ok(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_ok(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv =
            std::iter::once("peanoquad".to_string()).chain(args.iter().map(|s| s.to_string()));
        let code = run(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn constant_subcommand_prints_the_mean_value_constants() {
        let (code, out, _) = run_ok(&["constant", "--combo", "0.5*g2+0.5*lob3", "--order", "4"]);
        assert_eq!(code, 0);
        let doc: ConstantJson = serde_json::from_str(&out).unwrap();
        assert_eq!(doc.constant, "1/540");
        let (code, out, _) = run_ok(&["constant", "--combo", "0.5*g3+0.5*lob4", "--order", "6"]);
        assert_eq!(code, 0);
        let doc: ConstantJson = serde_json::from_str(&out).unwrap();
        assert_eq!(doc.constant, "1/94500");
    }

    #[test]
    fn certify_exit_codes_follow_expectations() {
        let (code, out, _) = run_ok(&[
            "certify",
            "--combo",
            "0.5*g3+0.5*lob4",
            "--order",
            "6",
            "--expect",
            "nonnegative",
        ]);
        assert_eq!(code, 0);
        let doc: CertifyJson = serde_json::from_str(&out).unwrap();
        assert_eq!(doc.verdict, "Nonnegative");
        // the averaged Radau kernel changes sign: exit 2 under --expect
        let (code, out, _) = run_ok(&[
            "certify",
            "--combo",
            "0.5*rad2l+0.5*rad2r",
            "--order",
            "3",
            "--expect",
            "nonnegative",
        ]);
        assert_eq!(code, 2);
        let doc: CertifyJson = serde_json::from_str(&out).unwrap();
        assert_eq!(doc.verdict, "SignChanging");
        assert!(doc.witness.is_some());
    }

    #[test]
    fn usage_errors_exit_one() {
        let (code, out, err) = run_ok(&["constant", "--combo", "0.5*g2"]);
        assert_eq!(code, 1, "missing --order");
        assert!(out.is_empty());
        assert!(!err.is_empty());
        let (code, _, err) = run_ok(&["constant", "--combo", "1*nosuchrule", "--order", "4"]);
        assert_eq!(code, 1);
        assert!(err.contains("nosuchrule"));
        let (code, _, _) = run_ok(&["frobnicate"]);
        assert_eq!(code, 1);
        // unknown flags are rejected
        let (code, _, _) = run_ok(&["corpus", "list", "--frob"]);
        assert_eq!(code, 1);
    }

    #[test]
    fn rules_list_round_trips_and_is_deterministic() {
        let (code, out1, _) = run_ok(&["rules", "list"]);
        assert_eq!(code, 0);
        let (_, out2, _) = run_ok(&["rules", "list"]);
        assert_eq!(out1, out2, "byte-identical output");
        let catalog: Vec<RuleJson> = serde_json::from_str(&out1).unwrap();
        assert_eq!(catalog.len(), BUILTIN_RULES.len() + 4);
        let g2 = catalog.iter().find(|r| r.name == "g2").unwrap();
        assert_eq!(g2.backend, "exact");
        assert_eq!(g2.exactness_degree, 3);
        let g4 = catalog.iter().find(|r| r.name == "g4").unwrap();
        assert_eq!(g4.backend, "numeric");
        assert_eq!(g4.exactness_degree, 7);
    }

    #[test]
    fn corpus_list_schema() {
        let (code, out, _) = run_ok(&["corpus", "list"]);
        assert_eq!(code, 0);
        let list: Vec<CorpusJson> = serde_json::from_str(&out).unwrap();
        let exp = list.iter().find(|f| f.name == "exp").unwrap();
        assert!(exp.smoothness.is_none());
        assert!(exp.convexity_orders.contains(&5));
        let x4 = list.iter().find(|f| f.name == "xplus4").unwrap();
        assert_eq!(x4.smoothness, Some(3));
    }

    #[test]
    fn kernel_json_and_csv() {
        let (code, out, _) = run_ok(&["kernel", "--combo", "0.5*g2+0.5*lob3", "--order", "4"]);
        assert_eq!(code, 0);
        let doc: KernelJson = serde_json::from_str(&out).unwrap();
        assert_eq!(doc.breakpoints.len(), 5);
        assert_eq!(doc.pieces.len(), 4);
        let (code, out, _) = run_ok(&[
            "kernel",
            "--combo",
            "0.5*g2+0.5*lob3",
            "--order",
            "4",
            "--output",
            "csv",
            "--grid",
            "11",
        ]);
        assert_eq!(code, 0);
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines[0], "x_lo,x_hi,K_lo,K_hi");
        assert_eq!(lines.len(), 12);
        // the numeric backend refuses JSON pieces
        let (code, _, err) = run_ok(&["kernel", "--combo", "0.5*g4+0.5*lob5", "--order", "8"]);
        assert_eq!(code, 1);
        assert!(err.contains("csv"));
    }

    #[test]
    fn compare_and_enclose_schemas() {
        let (code, out, _) = run_ok(&["compare", "--fn", "x^4", "--n", "2"]);
        assert_eq!(code, 0);
        let doc: CompareJson = serde_json::from_str(&out).unwrap();
        assert!(doc.theorem_holds);
        assert_eq!(doc.gauss_error.exact.as_deref(), Some("8/45"));
        let (code, out, _) = run_ok(&[
            "enclose", "--fn", "x^2", "--a", "-1", "--b", "1", "--n", "1", "--tol", "3",
        ]);
        assert_eq!(code, 0);
        let doc: EncloseJson = serde_json::from_str(&out).unwrap();
        assert_eq!(
            doc.rule_pair,
            ["midpoint".to_string(), "trapezoid".to_string()]
        );
        assert_eq!(doc.subdivisions, 1);
        assert_eq!(doc.lower.exact.as_deref(), Some("0"));
        assert_eq!(doc.upper.exact.as_deref(), Some("2"));
    }

    #[test]
    fn enclose_rejects_out_of_domain_intervals() {
        let (code, _, err) = run_ok(&[
            "enclose", "--fn", "exp", "--a", "-5", "--b", "5", "--n", "2", "--tol", "1",
        ]);
        assert_eq!(code, 1);
        assert!(err.contains("[-1, 1]"));
    }

    #[test]
    fn enclose_prechecks_undeclared_convexity() {
        // (x+1)/(x+2) is concave, so an order-1 enclosure must be refused
        let (code, _, err) = run_ok(&[
            "enclose",
            "--fn",
            "(x+1)/(x+2)",
            "--a",
            "-1",
            "--b",
            "1",
            "--n",
            "1",
            "--tol",
            "0.1",
        ]);
        assert_eq!(code, 1);
        assert!(err.contains("pre-check"));
    }

    #[test]
    fn counterexample_radau_output() {
        let (code, out, _) = run_ok(&["counterexample", "radau"]);
        assert_eq!(code, 0);
        let doc: RadauJson = serde_json::from_str(&out).unwrap();
        assert_eq!(doc.polynomial_residual, "16/135");
        assert_eq!(doc.rational_fn_rule_value, "94/105");
        assert!(doc.signs_differ);
        assert!(doc.rational_fn_residual.hi.starts_with("-0.00614"));
    }

    #[test]
    fn figure_csv_shape() {
        let (code, out, _) = run_ok(&["figure", "--n", "4", "--grid", "21"]);
        assert_eq!(code, 0);
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines[0], "x,K_lo,K_hi");
        assert_eq!(lines.len(), 22);
        assert!(lines[1].starts_with("-1,"));
        let (code, _, _) = run_ok(&["figure", "--n", "7"]);
        assert_eq!(code, 1);
    }
}
