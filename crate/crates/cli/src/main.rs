//! `etale`: command-line front end for etale-core.
//!
//! Exit codes: 0 success, 1 falsified check or validation failure,
//! 2 parse or usage error.

mod report;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use etale_core::companion::{etale_of_capped, inv_iso_report, DEFAULT_CAP};
use etale_core::cuntz::{endo_check, zero_simplifying_witness, CantorTerm, TableMap};
use etale_core::monoid::{build_i, build_pt};
use etale_core::words::{check_alphabet, BasicMap, PrefixCode};
use etale_core::{Error, FiniteRRMonoid};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use report::{Format, Report};

#[derive(Parser, Debug)]
#[command(name = "etale", version, about = "Right restriction monoids, companions and Cuntz-Thompson arithmetic")]
struct Cli {
    /// Output format for results on standard output.
    #[arg(long, global = true, value_enum, default_value = "text")]
    report: Format,

    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check associativity, identity, zero and RR1-RR6 on a monoid file.
    Axioms { file: PathBuf },
    /// Classify a monoid file (inverse, Boolean, etale, ...).
    Analyze { file: PathBuf },
    /// Build the companion Etale(M) of a finite Boolean inverse monoid.
    Companion {
        file: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
        /// Upper bound on the number of closed sets enumerated.
        #[arg(long, default_value_t = DEFAULT_CAP)]
        max_acceptable: usize,
    },
    /// Check that M is isomorphic to the partial units of Etale(M).
    VerifyInv {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        max_acceptable: usize,
    },
    /// Write PT_n or I_n in the interchange format.
    Gen {
        #[arg(value_enum)]
        family: Family,
        n: usize,
        /// Destination file; standard output when absent.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Polycyclic monoid arithmetic on basic maps `x>y`.
    Pn {
        #[arg(value_enum)]
        op: PnOp,
        n: usize,
        f: String,
        g: String,
    },
    /// Arithmetic on tables `[x>y, ...]` of the monoid H_n.
    H {
        #[arg(value_enum)]
        op: HOp,
        n: usize,
        #[arg(num_args = 1..=2, required = true)]
        elements: Vec<String>,
    },
    /// Cantor algebra terms.
    Cantor {
        #[arg(value_enum)]
        op: CantorOp,
        n: usize,
        term: String,
    },
    /// The total element witnessing 0-simplicity for a prefix code.
    Witness { n: usize, code: String },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Family {
    Pt,
    Inv,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum PnOp {
    Mul,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum HOp {
    Compose,
    Reduce,
    Invert,
    Classify,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum CantorOp {
    Eval,
}

/// Failures that end a command before it produces a report.
#[derive(Debug)]
enum Failure {
    Core(Error),
    Io(String),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Core(Error::Parse { .. }) | Failure::Usage(_) => 2,
            Failure::Core(_) | Failure::Io(_) => 1,
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Core(e) => write!(f, "{}", e),
            Failure::Io(m) | Failure::Usage(m) => write!(f, "{}", m),
        }
    }
}

type Outcome = std::result::Result<Report, Failure>;

fn load(path: &Path) -> std::result::Result<FiniteRRMonoid, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Io(format!("cannot read {}: {}", path.display(), e)))?;
    Ok(FiniteRRMonoid::from_json(&text)?)
}

fn save(path: &Path, text: &str) -> std::result::Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::Io(format!("cannot write {}: {}", path.display(), e)))
}

fn names(m: &FiniteRRMonoid, items: &[usize]) -> Vec<String> {
    items.iter().map(|&a| m.element_name(a).to_string()).collect()
}

fn axioms(file: &Path) -> Outcome {
    let m = load(file)?;
    let check = m.check_axioms();
    let mut r = Report::new();
    r.field("name", m.name()).field("size", m.size()).field("passed", check.passed);
    let violations: Vec<Value> = check
        .violations
        .iter()
        .map(|v| json!({"axiom": v.axiom.to_string(), "witness": names(&m, &v.witness)}))
        .collect();
    let text = check
        .violations
        .iter()
        .map(|v| format!("{} violated at ({})", v.axiom, names(&m, &v.witness).join(", ")))
        .collect();
    r.field_as("violations", violations, text);
    r.field("violation_count", check.violation_count);
    r.ok = check.passed;
    Ok(r)
}

fn analyze(file: &Path) -> Outcome {
    let m = load(file)?;
    let check = m.check_axioms();
    let mut r = Report::new();
    r.field("name", m.name()).field("size", m.size()).field("axioms_passed", check.passed);
    if !check.passed {
        r.ok = false;
        return Ok(r);
    }
    let class = serde_json::to_value(m.classify()).expect("classification serializes");
    r.fields_from(class);
    Ok(r)
}

fn companion(file: &Path, output: &Path, cap: usize) -> Outcome {
    let m = load(file)?;
    let c = etale_of_capped(&m, cap)?;
    save(output, &c.monoid.to_json())?;
    let iota: Vec<String> = c.iota.iter().map(|&i| c.monoid.element_name(i).to_string()).collect();
    let mut r = Report::new();
    r.field("name", c.monoid.name())
        .field("elements", c.monoid.size())
        .field("partial_units", c.monoid.partial_units().len())
        .field("principal", iota)
        .field("output", output.display().to_string());
    Ok(r)
}

fn verify_inv(file: &Path, cap: usize) -> Outcome {
    let m = load(file)?;
    let c = etale_of_capped(&m, cap)?;
    let report = inv_iso_report(&m, &c);
    let mut r = Report::new();
    r.field("name", m.name())
        .fields_from(serde_json::to_value(&report).expect("report serializes"))
        .field("isomorphic", report.isomorphic());
    r.ok = report.isomorphic();
    Ok(r)
}

fn generate(family: Family, n: usize, output: Option<&Path>) -> Outcome {
    let m = match family {
        Family::Pt => build_pt(n)?,
        Family::Inv => build_i(n)?,
    };
    let text = m.to_json();
    let mut r = Report::new();
    match output {
        Some(path) => {
            save(path, &text)?;
            r.field("name", m.name())
                .field("size", m.size())
                .field("output", path.display().to_string());
        }
        None => {
            // the monoid itself is the result
            let value: Value = serde_json::from_str(&text).expect("canonical JSON parses");
            r.field_as("monoid", value, vec![text.trim_end().to_string()]);
        }
    }
    Ok(r)
}

fn pn(op: PnOp, n: usize, f: &str, g: &str) -> Outcome {
    check_alphabet(n)?;
    let (f, g) = (BasicMap::parse(f, n)?, BasicMap::parse(g, n)?);
    let PnOp::Mul = op;
    let mut r = Report::new();
    let product = f.mul(&g).to_string();
    r.field_as("product", product.clone(), vec![product]);
    Ok(r)
}

/// The text line for a table result is the table alone.
fn table_result(r: &mut Report, key: &str, t: &TableMap) {
    let s = t.to_string();
    r.field_as(key, s.clone(), vec![s]);
}

fn h(op: HOp, n: usize, elements: &[String], seed: u64) -> Outcome {
    check_alphabet(n)?;
    let wanted = if matches!(op, HOp::Compose) { 2 } else { 1 };
    if elements.len() != wanted {
        return Err(Failure::Usage(format!(
            "h {:?} takes {} element(s), got {}",
            op,
            wanted,
            elements.len()
        )));
    }
    let tables = elements
        .iter()
        .map(|e| TableMap::parse(e, n))
        .collect::<std::result::Result<Vec<_>, _>>()?;
    let f = &tables[0];
    let mut r = Report::new();
    match op {
        HOp::Compose => table_result(&mut r, "result", &f.compose(&tables[1]).reduce()),
        HOp::Reduce => table_result(&mut r, "result", &f.reduce()),
        HOp::Invert => match f.invert() {
            Some(inv) => table_result(&mut r, "result", &inv.reduce()),
            None => {
                return Err(Failure::Core(Error::Precondition(format!(
                    "{} is not a partial unit",
                    f
                ))))
            }
        },
        HOp::Classify => {
            let reduced = f.reduce();
            r.field("element", reduced.to_string())
                .field("zero", f.is_zero())
                .field("projection", f.star().same_function(f))
                .field("total", f.is_total())
                .field("partial_unit", f.is_partial_unit())
                .field("unit", f.is_unit())
                .field("domain", reduced.domain_code().to_string());
            if f.is_total() {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let endo = endo_check(f, 50, etale_core::cuntz::random::default_max_len(n), &mut rng)?;
                r.field("cantor_endomorphism", endo.passed());
                r.ok = endo.passed();
            }
        }
    }
    Ok(r)
}

fn cantor(op: CantorOp, n: usize, text: &str) -> Outcome {
    check_alphabet(n)?;
    let CantorOp::Eval = op;
    let term = CantorTerm::parse(text, n)?;
    let value = term.eval(n)?;
    let mut r = Report::new();
    r.field("term", term.to_string());
    table_result(&mut r, "value", &value);
    r.field("domain", value.domain_code().to_string())
        .field("skeleton", term.skeleton_code(n)?.to_string());
    Ok(r)
}

fn witness(n: usize, code: &str) -> Outcome {
    check_alphabet(n)?;
    let x = PrefixCode::parse(code, n)?;
    let a = zero_simplifying_witness(&x)?;
    let e = TableMap::make(n, x.words().iter().map(|w| (w.clone(), w.clone())).collect())?;
    let image = e.compose(&a).star();
    let holds = image.equals(&TableMap::identity(n));
    let mut r = Report::new();
    table_result(&mut r, "witness", &a);
    r.field("code", x.to_string())
        .field("restricted_domain", image.reduce().to_string())
        .field("holds", holds);
    r.ok = holds;
    Ok(r)
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Axioms { file } => axioms(file),
        Command::Analyze { file } => analyze(file),
        Command::Companion { file, output, max_acceptable } => companion(file, output, *max_acceptable),
        Command::VerifyInv { file, max_acceptable } => verify_inv(file, *max_acceptable),
        Command::Gen { family, n, output } => generate(*family, *n, output.as_deref()),
        Command::Pn { op, n, f, g } => pn(*op, *n, f, g),
        Command::H { op, n, elements } => h(*op, *n, elements, cli.seed),
        Command::Cantor { op, n, term } => cantor(*op, *n, term),
        Command::Witness { n, code } => witness(*n, code),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            println!("{}", report.render(cli.report));
            if report.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(failure) => {
            eprintln!("error: {}", failure);
            ExitCode::from(failure.exit_code())
        }
    }
}

