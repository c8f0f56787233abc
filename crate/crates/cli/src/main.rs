mod algebra;
mod output;

use std::path::Path;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use hbk_core::eval::{
    check_scaling, horn_sweep, invariant_f, invariant_v, verify_relations_with, EvalError,
};
use hbk_core::hopf::{build_qcqs, compute_integrals, verify_yd_with, write_hopf, QcqsBundle};
use hbk_core::report::Coverage;
use hbk_core::scalar::parse_scalar;
use hbk_core::tangle::{builtin, parse, RelationCatalogue, TangleExpr};
use hbk_core::zoo::kac_b4m;

use algebra::{check_axioms, AlgebraSpec};
use output::{print_suite, print_summary, show, AlgebraSummary, RunReport, Suites, TangleResult};

#[derive(Debug, Parser)]
#[command(name = "hbk", version, about = "Handlebody-link invariants from unimodular Hopf algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check the Hopf axioms, the Yetter-Drinfeld structure and the tangle relations.
    Verify {
        #[command(flatten)]
        algebra: AlgebraSpec,
        /// Visit every basis tuple even when that is slow.
        #[arg(long)]
        exhaustive: bool,
        #[arg(long)]
        json: bool,
    },
    /// Compute v_A(H) (and F_A(H) for closed H) for one tangle.
    Invariant {
        #[command(flatten)]
        algebra: AlgebraSpec,
        /// Builtin name (O, theta, genus(g), A#B) or path to a tangle file.
        #[arg(long)]
        tangle: String,
        /// Evaluate v at every hornable cap and compare.
        #[arg(long)]
        check_horns: bool,
        /// Check both scaling laws for λ ↦ cλ with this c.
        #[arg(long)]
        scale: Option<String>,
        /// Also print k-digit decimal approximations.
        #[arg(long, value_name = "K")]
        decimal: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// v-values of builtin tangles across B_{4m}, in the layout of a table.
    Table {
        /// Range such as 3..7 (inclusive) or a list such as 3,5,7.
        #[arg(long, default_value = "3..7")]
        m: String,
        /// Tangles, one per row.
        #[arg(long = "tangle", default_values_t = vec!["theta".to_string()])]
        tangles: Vec<String>,
        #[arg(long)]
        json: bool,
    },
    /// Write the structure constants of an algebra in the raw file format.
    Export {
        #[command(flatten)]
        algebra: AlgebraSpec,
    },
}

#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Computation(String),
    Unsupported(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Computation(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Unsupported(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Computation(m) | Failure::Unsupported(m) => m,
        }
    }
}

impl From<EvalError> for Failure {
    fn from(e: EvalError) -> Self {
        match e {
            EvalError::AssumptionFails => Failure::Unsupported(e.to_string()),
            EvalError::NotClosed(..) | EvalError::NotHornable(..) | EvalError::Horn(_) => Failure::Usage(e.to_string()),
            _ => Failure::Computation(e.to_string()),
        }
    }
}

fn bundle(spec: &AlgebraSpec) -> Result<(QcqsBundle, hbk_core::report::AxiomReport), Failure> {
    let loaded = spec.load()?;
    let hopf_report = check_axioms(&loaded.hopf)?;
    let ints = compute_integrals(&loaded.hopf).map_err(|e| Failure::Computation(e.to_string()))?;
    if !ints.unimodular {
        return Err(Failure::Unsupported(format!("{} is not unimodular", loaded.hopf.name())));
    }
    let b = build_qcqs(loaded.hopf.into_shared(), ints).map_err(|e| Failure::Computation(e.to_string()))?;
    let b = match loaded.lambda_scale {
        Some(c) => b.rescaled(&c).map_err(|e| Failure::Computation(e.to_string()))?,
        None => b,
    };
    Ok((b, hopf_report))
}

fn load_tangle(arg: &str) -> Result<TangleExpr, Failure> {
    if let Ok(e) = builtin(arg) {
        return Ok(e);
    }
    let path = Path::new(arg);
    if path.exists() {
        let text = std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {arg}: {e}")))?;
        return parse(&text).map_err(|e| Failure::Usage(format!("{arg}: {e}")));
    }
    parse(arg).map_err(|e| Failure::Usage(format!("`{arg}` is neither a builtin, a file, nor an expression: {e}")))
}

fn json<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable report")
}

fn cmd_verify(spec: &AlgebraSpec, exhaustive: bool, as_json: bool) -> Result<bool, Failure> {
    let (b, hopf) = bundle(spec)?;
    let coverage = if exhaustive { Coverage::Exhaustive } else { Coverage::default() };
    let suites = Suites {
        hopf: Some(hopf),
        yd: Some(verify_yd_with(&b, coverage)),
        relations: Some(verify_relations_with(&b, &RelationCatalogue::standard(), coverage)),
    };
    let ok = suites.all_passed();
    let report = RunReport {
        algebra: AlgebraSummary::new(&b),
        results: vec![],
        suites,
    };
    if as_json {
        println!("{}", json(&report));
    } else {
        print_summary(&report.algebra);
        for (title, r) in [
            ("hopf", &report.suites.hopf),
            ("yd", &report.suites.yd),
            ("relations", &report.suites.relations),
        ] {
            if let Some(r) = r {
                print_suite(title, r);
            }
        }
    }
    Ok(ok)
}

fn tangle_result(b: &QcqsBundle, name: &str, e: &TangleExpr) -> Result<TangleResult, Failure> {
    let v = invariant_v(b, e)?;
    let f = if e.is_closed() { Some(invariant_f(b, e)?) } else { None };
    Ok(TangleResult::new(name, &v, f.as_ref()))
}

fn cmd_invariant(
    spec: &AlgebraSpec,
    tangle: &str,
    check_horns: bool,
    scale: Option<&str>,
    decimal: Option<usize>,
    as_json: bool,
) -> Result<bool, Failure> {
    let e = load_tangle(tangle)?;
    match e.arity() {
        (0, 0) | (0, 1) => {}
        (s, t) => return Err(Failure::Usage(format!("tangle has arity {s}→{t}; need 0→0 or 0→1"))),
    }
    let (b, _) = bundle(spec)?;
    let mut res = tangle_result(&b, tangle, &e)?;
    let mut ok = true;
    if check_horns && e.is_closed() {
        let sweep = horn_sweep(&b, &e)?;
        res.horn_checked = sweep.values.iter().map(|(p, _)| *p).collect();
        res.horn_independent = Some(sweep.independent());
        ok &= sweep.independent();
    }
    if let Some(c) = scale {
        let c = parse_scalar(b.conductor(), c).map_err(|e| Failure::Usage(format!("bad --scale: {e}")))?;
        if c.is_zero() {
            return Err(Failure::Usage("--scale must be nonzero".into()));
        }
        if !e.is_closed() {
            return Err(Failure::Usage("--scale needs a closed tangle".into()));
        }
        let s = check_scaling(&b, &e, &c)?;
        res.scaling_holds = Some(s.holds());
        ok &= s.holds();
    }
    let report = RunReport {
        algebra: AlgebraSummary::new(&b),
        results: vec![res],
        suites: Suites::default(),
    };
    if as_json {
        println!("{}", json(&report));
        return Ok(ok);
    }
    let r = &report.results[0];
    println!("v = {}", show(&r.exact, decimal));
    if let Some(f) = &r.exact_f {
        println!("F = {}", show(f, decimal));
    }
    if b.conductor() > 1 {
        println!("(z = exp(2πi/{}))", b.conductor());
    }
    println!("caps {}, cups {}", r.caps, r.cups);
    if let Some(ind) = r.horn_independent {
        println!("horn positions {:?}: {}", r.horn_checked, if ind { "independent" } else { "DIFFER" });
    }
    if let Some(s) = r.scaling_holds {
        println!("scaling laws: {}", if s { "hold" } else { "FAIL" });
    }
    Ok(ok)
}

fn parse_range(text: &str) -> Result<Vec<usize>, Failure> {
    let bad = || Failure::Usage(format!("bad m range `{text}`"));
    if let Some((a, b)) = text.split_once("..") {
        let a: usize = a.trim().parse().map_err(|_| bad())?;
        let b: usize = b.trim_start_matches('=').trim().parse().map_err(|_| bad())?;
        if a > b {
            return Err(bad());
        }
        return Ok((a..=b).collect());
    }
    text.split(',').map(|s| s.trim().parse().map_err(|_| bad())).collect()
}

#[derive(serde::Serialize)]
struct TableRow {
    m: usize,
    algebra: AlgebraSummary,
    results: Vec<TangleResult>,
}

fn cmd_table(m: &str, tangles: &[String], as_json: bool) -> Result<bool, Failure> {
    let ms = parse_range(m)?;
    if let Some(bad) = ms.iter().find(|m| **m <= 2) {
        return Err(Failure::Usage(format!("m must exceed 2 (got {bad})")));
    }
    let exprs = tangles.iter().map(|t| load_tangle(t)).collect::<Result<Vec<_>, _>>()?;
    let mut rows = Vec::new();
    for &m in &ms {
        let (h, _) = kac_b4m(m).map_err(|e| Failure::Usage(e.to_string()))?;
        check_axioms(&h)?;
        let ints = compute_integrals(&h).map_err(|e| Failure::Computation(e.to_string()))?;
        let b = build_qcqs(h.into_shared(), ints).map_err(|e| Failure::Computation(e.to_string()))?;
        let results = tangles
            .iter()
            .zip(&exprs)
            .map(|(name, e)| tangle_result(&b, name, e))
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(TableRow {
            m,
            algebra: AlgebraSummary::new(&b),
            results,
        });
    }
    if as_json {
        println!("{}", json(&rows));
        return Ok(true);
    }
    let cells: Vec<Vec<String>> = (0..tangles.len())
        .map(|t| rows.iter().map(|r| r.results[t].exact.to_string()).collect())
        .collect();
    let width = cells.iter().flatten().map(String::len).chain(std::iter::once(4)).max().unwrap_or(4) + 2;
    let label = tangles.iter().map(String::len).chain(std::iter::once(6)).max().unwrap_or(6) + 2;
    print!("{:<label$}", "H \\ m");
    for m in &ms {
        print!("{m:>width$}");
    }
    println!();
    for (name, row) in tangles.iter().zip(&cells) {
        print!("{name:<label$}");
        for c in row {
            print!("{c:>width$}");
        }
        println!();
    }
    Ok(true)
}

fn run(cli: Cli) -> Result<bool, Failure> {
    match cli.command {
        Command::Verify { algebra, exhaustive, json } => cmd_verify(&algebra, exhaustive, json),
        Command::Invariant {
            algebra,
            tangle,
            check_horns,
            scale,
            decimal,
            json,
        } => cmd_invariant(&algebra, &tangle, check_horns, scale.as_deref(), decimal, json),
        Command::Table { m, tangles, json } => cmd_table(&m, &tangles, json),
        Command::Export { algebra } => {
            let loaded = algebra.load()?;
            print!("{}", write_hopf(&loaded.hopf));
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
