//! `fuzcon` — evaluate, induce, classify, check laws, verify theorems,
//! reproduce the catalog tables and run fuzzing campaigns from the command
//! line.
//!
//! Exit codes: 0 — every verdict holds / the reproduction matches; 1 — a
//! check failed (the witness is in the report) or a counterexample was found;
//! 2 — usage or input error.
//!
//! Operands are catalog names (`T_L`, `remark41_D`, `N_S`, ...), names from
//! the definition file named by the `FUZCON_CATALOG` environment variable, or
//! `@file.fz:name` references into a definition file.

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use fuzcon::analysis::{
    check_law, classify_negation, extracted_negation_continuous, verify_theorem, LawId,
    LawOperands, TheoremId,
};
use fuzcon::catalog::{Catalog, ExpectedNegation};
use fuzcon::connective::{BinaryConnective, ConnectiveKind, DeclaredFlags, UnaryFunction};
use fuzcon::expr::{parse_definition_file, Arity, Expr};
use fuzcon::fuzz::{self, GeneratorFamily, GeneratorParams, SearchTarget};
use fuzcon::induce;
use fuzcon::report::{binary_csv, unary_csv, write_atomic, CheckResult};
use fuzcon::{NumericConfig, Verdict};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "fuzcon", version, about = "Workbench for fuzzy connectives")]
struct Cli {
    /// Override numeric settings, e.g. `--config grid_1d=1025,eps_eq=1e-8`.
    /// Every report embeds the effective configuration.
    #[arg(long, global = true, value_delimiter = ',')]
    config: Vec<String>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct OperandArgs {
    #[arg(long)]
    implication: Option<String>,
    #[arg(long)]
    conjunction: Option<String>,
    #[arg(long)]
    disjunction: Option<String>,
    #[arg(long)]
    negation: Option<String>,
    /// Second negation operand for two-negation checks.
    #[arg(long)]
    negation2: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a connective at a point or dump it on a grid.
    Eval {
        /// Operand reference (catalog name or `@file:name`).
        reference: String,
        /// Evaluation point: `x` or `x,y`.
        #[arg(long, value_delimiter = ',', num_args = 1..=2, conflicts_with = "out")]
        at: Option<Vec<f64>>,
        /// Samples per axis for a grid dump.
        #[arg(long, default_value_t = 101)]
        grid: usize,
        /// Write a CSV dump instead of printing a single value.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compute the natural negation induced by a conjunction or disjunction.
    Induce {
        #[arg(long, conflicts_with = "disjunction")]
        conjunction: Option<String>,
        #[arg(long)]
        disjunction: Option<String>,
        /// Number of sample points in the CSV dump.
        #[arg(long, default_value_t = 1001)]
        grid: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Classify a negation: monotonicity, continuity, strictness, strongness.
    Classify {
        #[arg(long)]
        negation: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a named law against operands.
    Check {
        #[arg(long)]
        law: String,
        #[command(flatten)]
        operands: OperandArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Verify a theorem conclusion against operands.
    Verify {
        #[arg(long)]
        theorem: String,
        #[command(flatten)]
        operands: OperandArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Reproduce the catalog tables and diff them against expectations.
    Tables {
        /// Which table to reproduce: 1, 2, 3 or `all`.
        #[arg(long, default_value = "all")]
        which: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Rebuild a disjunction from an implication and measure the round-trip.
    Roundtrip {
        #[arg(long)]
        implication: String,
        /// Samples per axis for the sup-norm scan.
        #[arg(long, default_value_t = 101)]
        grid: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Hunt counterexamples with randomly generated monotone connectives.
    Fuzz {
        /// Law or theorem id to attack, e.g. `THM_3_1` or `LEM`.
        #[arg(long)]
        target: String,
        #[arg(long, default_value_t = 100)]
        budget: usize,
        /// Grid nodes (bilinear family) or profile knots.
        #[arg(long, default_value_t = 17)]
        m: usize,
        #[arg(long, default_value = "conjunction")]
        kind: String,
        #[arg(long)]
        commutative: bool,
        /// Instance family: `bilinear` or `profile`.
        #[arg(long, default_value = "bilinear")]
        family: String,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also dump the counterexample's grid nodes as CSV.
        #[arg(long)]
        grid_csv: Option<PathBuf>,
    },
    /// Export every expression-backed catalog entry as a definition file.
    ExportCatalog {
        #[arg(long)]
        out: PathBuf,
    },
}

/// Name resolution over the catalog, the `FUZCON_CATALOG` file and
/// `@file:name` references.
struct Registry {
    catalog: Catalog,
    extra: Vec<(String, Expr)>,
}

impl Registry {
    fn open() -> Result<Self> {
        let catalog = fuzcon::load_catalog().map_err(|e| anyhow!("{e}"))?;
        let mut extra = Vec::new();
        if let Ok(path) = std::env::var("FUZCON_CATALOG") {
            let text = std::fs::read_to_string(&path)
                .with_context(|| format!("reading FUZCON_CATALOG file `{path}`"))?;
            extra = parse_definition_file(&text)
                .with_context(|| format!("parsing FUZCON_CATALOG file `{path}`"))?;
        }
        Ok(Registry { catalog, extra })
    }

    fn lookup_expr(&self, reference: &str) -> Result<Option<Expr>> {
        if let Some(rest) = reference.strip_prefix('@') {
            let (file, name) = rest
                .rsplit_once(':')
                .ok_or_else(|| anyhow!("`{reference}`: expected `@file:name`"))?;
            let text = std::fs::read_to_string(file)
                .with_context(|| format!("reading definition file `{file}`"))?;
            let defs = parse_definition_file(&text)
                .with_context(|| format!("parsing definition file `{file}`"))?;
            let expr = defs
                .into_iter()
                .find(|(n, _)| n == name)
                .map(|(_, e)| e)
                .ok_or_else(|| anyhow!("no definition named `{name}` in `{file}`"))?;
            return Ok(Some(expr));
        }
        Ok(self
            .extra
            .iter()
            .find(|(n, _)| n == reference)
            .map(|(_, e)| e.clone()))
    }

    fn binary(&self, reference: &str, kind: ConnectiveKind) -> Result<BinaryConnective> {
        if let Some(expr) = self.lookup_expr(reference)? {
            if expr.arity() != Arity::Binary {
                bail!("`{reference}` is unary, expected a binary connective");
            }
            let name = reference.trim_start_matches('@').replace(':', "_");
            return Ok(BinaryConnective::from_expr(
                name,
                kind,
                DeclaredFlags::none(),
                expr,
            ));
        }
        self.catalog
            .binary(reference)
            .map(|b| {
                // reinterpret under the requested role so validation applies
                // the right boundary conditions
                if b.kind() == kind {
                    b.clone()
                } else {
                    b.with_kind(kind)
                }
            })
            .ok_or_else(|| anyhow!("unknown connective `{reference}`"))
    }

    fn unary(&self, reference: &str) -> Result<UnaryFunction> {
        if let Some(expr) = self.lookup_expr(reference)? {
            if expr.arity() != Arity::Unary {
                bail!("`{reference}` is binary, expected a unary function");
            }
            let name = reference.trim_start_matches('@').replace(':', "_");
            return Ok(UnaryFunction::from_expr(name, expr));
        }
        self.catalog
            .unary(reference)
            .cloned()
            .ok_or_else(|| anyhow!("unknown negation `{reference}`"))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    let mut cfg = NumericConfig::default();
    for entry in &cli.config {
        let (key, value) = entry
            .split_once('=')
            .ok_or_else(|| anyhow!("--config expects key=value, got `{entry}`"))?;
        cfg.apply_override(key.trim(), value.trim())
            .map_err(|e| anyhow!("{e}"))?;
    }

    let registry = Registry::open()?;
    match cli.command {
        Command::Eval {
            reference,
            at,
            grid,
            out,
        } => eval_command(&registry, &reference, at, grid, out),
        Command::Induce {
            conjunction,
            disjunction,
            grid,
            out,
        } => induce_command(&registry, &cfg, conjunction, disjunction, grid, out),
        Command::Classify { negation, out } => {
            let n = registry.unary(&negation)?;
            let report = classify_negation(&n, &cfg);
            println!(
                "{}: non_increasing {}, continuous {}, strictly_decreasing {}, strict {}, strong {}",
                report.name,
                report.non_increasing.holds,
                report.continuous.holds,
                report.strictly_decreasing.holds,
                report.strict.holds,
                report.strong.holds
            );
            if let Some(path) = out {
                let json = serde_json::to_string_pretty(&report)?;
                write_atomic(&path, &json)?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Check { law, operands, out } => {
            let law: LawId = law.parse().map_err(|e| anyhow!("{e}"))?;
            let resolved = resolve_operands(&registry, &operands)?;
            let check = check_law(law, &resolved.as_law_operands(), &cfg)
                .map_err(|e| anyhow!("{e}"))?;
            finish_check(check, out)
        }
        Command::Verify {
            theorem,
            operands,
            out,
        } => {
            let theorem: TheoremId = theorem.parse().map_err(|e| anyhow!("{e}"))?;
            let resolved = resolve_operands(&registry, &operands)?;
            let check = verify_theorem(theorem, &resolved.as_law_operands(), &cfg)
                .map_err(|e| anyhow!("{e}"))?;
            finish_check(check, out)
        }
        Command::Tables { which, out } => tables_command(&registry.catalog, &cfg, &which, out),
        Command::Roundtrip {
            implication,
            grid,
            out,
        } => roundtrip_command(&registry, &cfg, &implication, grid, out),
        Command::Fuzz {
            target,
            budget,
            m,
            kind,
            commutative,
            family,
            out,
            grid_csv,
        } => fuzz_command(
            &cfg, &target, budget, m, &kind, commutative, &family, out, grid_csv,
        ),
        Command::ExportCatalog { out } => {
            write_atomic(&out, &registry.catalog.to_definition_file())?;
            println!("catalog exported to {}", out.display());
            Ok(ExitCode::SUCCESS)
        }
    }
}

struct ResolvedOperands {
    implication: Option<BinaryConnective>,
    conjunction: Option<BinaryConnective>,
    disjunction: Option<BinaryConnective>,
    negation: Option<UnaryFunction>,
    negation2: Option<UnaryFunction>,
}

impl ResolvedOperands {
    fn as_law_operands(&self) -> LawOperands<'_> {
        LawOperands {
            implication: self.implication.as_ref(),
            conjunction: self.conjunction.as_ref(),
            disjunction: self.disjunction.as_ref(),
            negation: self.negation.as_ref(),
            second_negation: self.negation2.as_ref(),
        }
    }
}

fn resolve_operands(registry: &Registry, args: &OperandArgs) -> Result<ResolvedOperands> {
    Ok(ResolvedOperands {
        implication: args
            .implication
            .as_deref()
            .map(|r| registry.binary(r, ConnectiveKind::Implication))
            .transpose()?,
        conjunction: args
            .conjunction
            .as_deref()
            .map(|r| registry.binary(r, ConnectiveKind::Conjunction))
            .transpose()?,
        disjunction: args
            .disjunction
            .as_deref()
            .map(|r| registry.binary(r, ConnectiveKind::Disjunction))
            .transpose()?,
        negation: args.negation.as_deref().map(|r| registry.unary(r)).transpose()?,
        negation2: args
            .negation2
            .as_deref()
            .map(|r| registry.unary(r))
            .transpose()?,
    })
}

fn finish_check(check: CheckResult, out: Option<PathBuf>) -> Result<ExitCode> {
    println!("{check}");
    for note in &check.notes {
        println!("  {note}");
    }
    if let Some(path) = out {
        write_atomic(&path, &check.to_json_string())?;
    }
    Ok(if check.holds_verdict() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn eval_command(
    registry: &Registry,
    reference: &str,
    at: Option<Vec<f64>>,
    grid: usize,
    out: Option<PathBuf>,
) -> Result<ExitCode> {
    // the reference may be unary or binary; try binary first
    let binary = registry.binary(reference, ConnectiveKind::Raw);
    let unary = registry.unary(reference);
    match (binary, unary, at) {
        (Ok(b), _, Some(point)) => {
            if point.len() != 2 {
                bail!("`{reference}` is binary, pass --at x,y");
            }
            println!("{}", b.eval(point[0], point[1]));
            Ok(ExitCode::SUCCESS)
        }
        (_, Ok(u), Some(point)) => {
            if point.len() != 1 {
                bail!("`{reference}` is unary, pass --at x");
            }
            println!("{}", u.eval(point[0]));
            Ok(ExitCode::SUCCESS)
        }
        (Ok(b), _, None) => {
            let path = out.ok_or_else(|| anyhow!("pass --at or --out"))?;
            let pts: Vec<f64> = (0..grid).map(|i| i as f64 / (grid - 1) as f64).collect();
            let mut rows = Vec::with_capacity(grid * grid);
            for &x in &pts {
                for &y in &pts {
                    rows.push((x, y, b.eval(x, y)));
                }
            }
            write_atomic(&path, &binary_csv(&rows))?;
            Ok(ExitCode::SUCCESS)
        }
        (_, Ok(u), None) => {
            let path = out.ok_or_else(|| anyhow!("pass --at or --out"))?;
            let rows: Vec<(f64, f64)> = (0..grid)
                .map(|i| {
                    let x = i as f64 / (grid - 1) as f64;
                    (x, u.eval(x))
                })
                .collect();
            write_atomic(&path, &unary_csv(&rows))?;
            Ok(ExitCode::SUCCESS)
        }
        (Err(e), Err(_), _) => Err(e),
    }
}

fn induce_command(
    registry: &Registry,
    cfg: &NumericConfig,
    conjunction: Option<String>,
    disjunction: Option<String>,
    grid: usize,
    out: Option<PathBuf>,
) -> Result<ExitCode> {
    let induced = match (conjunction, disjunction) {
        (Some(r), None) => {
            let c = registry.binary(&r, ConnectiveKind::Conjunction)?;
            induce::natural_negation_of_conjunction(&c, cfg).map_err(|e| anyhow!("{e}"))?
        }
        (None, Some(r)) => {
            let d = registry.binary(&r, ConnectiveKind::Disjunction)?;
            induce::natural_negation_of_disjunction(&d, cfg).map_err(|e| anyhow!("{e}"))?
        }
        _ => bail!("pass exactly one of --conjunction or --disjunction"),
    };
    println!(
        "{} from {}: {}",
        induced.function.name(),
        induced.source,
        if induced.is_negation {
            "a fuzzy negation"
        } else {
            "NOT a fuzzy negation"
        }
    );
    if let Some(path) = out {
        let rows: Vec<(f64, f64)> = (0..grid)
            .map(|i| {
                let x = i as f64 / (grid - 1) as f64;
                (x, induced.function.eval(x))
            })
            .collect();
        write_atomic(&path, &unary_csv(&rows))?;
    }
    Ok(ExitCode::SUCCESS)
}

fn tables_command(
    catalog: &Catalog,
    cfg: &NumericConfig,
    which: &str,
    out: Option<PathBuf>,
) -> Result<ExitCode> {
    let selected: Vec<u8> = match which {
        "1" => vec![1],
        "2" => vec![2],
        "3" => vec![3],
        "all" => vec![1, 2, 3],
        other => bail!("--which must be 1, 2, 3 or all (got `{other}`)"),
    };
    let mut all_match = true;
    let mut rows_json = Vec::new();

    for table in selected {
        match table {
            1 => {
                println!("table 1: natural negations of conjunctions");
                for fixture in &catalog.conjunctions {
                    if !fixture.provenance.starts_with("table:1") {
                        continue;
                    }
                    let induced =
                        induce::natural_negation_of_conjunction(&fixture.connective, cfg)
                            .map_err(|e| anyhow!("{e}"))?;
                    let (expected, ok, computed) = match &fixture.expected_negation {
                        ExpectedNegation::Negation(n) => {
                            let mut max_err = 0.0f64;
                            for i in 0..=1000 {
                                let x = i as f64 / 1000.0;
                                max_err =
                                    max_err.max((induced.function.eval(x) - n.eval(x)).abs());
                            }
                            (
                                n.name().to_string(),
                                induced.is_negation && max_err <= 1e-6,
                                format!("max deviation {max_err:.2e}"),
                            )
                        }
                        ExpectedNegation::NotANegation => (
                            "(not a negation)".to_string(),
                            !induced.is_negation,
                            format!("value at 1 is {}", induced.function.eval(1.0)),
                        ),
                    };
                    all_match &= ok;
                    let status = if ok { "match" } else { "MISMATCH" };
                    println!(
                        "  {:10} -> {:18} {status} ({computed})",
                        fixture.connective.name(),
                        expected
                    );
                    rows_json.push(serde_json::json!({
                        "table": 1, "name": fixture.connective.name(),
                        "expected": expected, "match": ok, "computed": computed,
                    }));
                }
            }
            2 => {
                println!("table 2: implications induced with natural negations");
                for fixture in &catalog.disjunctions {
                    if !fixture.provenance.starts_with("table:2") {
                        continue;
                    }
                    let induced =
                        induce::natural_negation_of_disjunction(&fixture.connective, cfg)
                            .map_err(|e| anyhow!("{e}"))?;
                    let ExpectedNegation::Negation(expected_n) = &fixture.expected_negation
                    else {
                        continue;
                    };
                    let expected_i = fixture.expected_implication.as_ref().unwrap();
                    let composed =
                        induce::implication_from_dn(&fixture.connective, &induced.function, cfg)
                            .map_err(|e| anyhow!("{e}"))?;
                    let mut n_err = 0.0f64;
                    let mut i_err = 0.0f64;
                    for i in 0..=100 {
                        let x = i as f64 / 100.0;
                        n_err = n_err.max((induced.function.eval(x) - expected_n.eval(x)).abs());
                        for j in 0..=100 {
                            let y = j as f64 / 100.0;
                            i_err =
                                i_err.max((composed.eval(x, y) - expected_i.eval(x, y)).abs());
                        }
                    }
                    let ok = n_err <= 1e-6 && i_err <= 1e-6;
                    all_match &= ok;
                    let status = if ok { "match" } else { "MISMATCH" };
                    println!(
                        "  {:10} -> {:6} and {:6} {status} (deviations {n_err:.2e}, {i_err:.2e})",
                        fixture.connective.name(),
                        expected_n.name(),
                        expected_i.name()
                    );
                    rows_json.push(serde_json::json!({
                        "table": 2, "name": fixture.connective.name(),
                        "expected_negation": expected_n.name(),
                        "expected_implication": expected_i.name(),
                        "match": ok,
                    }));
                }
            }
            3 => {
                println!("table 3: independence of the three conditions");
                for row in &catalog.independence {
                    let as_implication = row.function.with_kind(ConnectiveKind::Implication);
                    let fi = fuzcon::validate_connective(&as_implication, cfg).holds_verdict();
                    let cond = check_law(
                        LawId::Cond47,
                        &LawOperands {
                            implication: Some(&row.function),
                            ..LawOperands::default()
                        },
                        cfg,
                    )
                    .map_err(|e| anyhow!("{e}"))?
                    .holds_verdict();
                    let cont = extracted_negation_continuous(&row.function, cfg);
                    let ok = (fi, cond, cont)
                        == (row.is_implication, row.section_condition, row.negation_continuous);
                    all_match &= ok;
                    let mark = |b: bool| if b { "yes" } else { "no " };
                    let status = if ok { "match" } else { "MISMATCH" };
                    println!(
                        "  {:6} implication {} | sections {} | continuous {} {status}",
                        row.function.name(),
                        mark(fi),
                        mark(cond),
                        mark(cont)
                    );
                    rows_json.push(serde_json::json!({
                        "table": 3, "name": row.function.name(),
                        "is_implication": fi, "section_condition": cond,
                        "negation_continuous": cont, "match": ok,
                    }));
                }
            }
            _ => unreachable!(),
        }
    }

    if let Some(path) = out {
        let doc = serde_json::json!({
            "schema_version": fuzcon::report::SCHEMA_VERSION,
            "rows": rows_json,
            "all_match": all_match,
        });
        write_atomic(&path, &serde_json::to_string_pretty(&doc)?)?;
    }
    Ok(if all_match {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn roundtrip_command(
    registry: &Registry,
    cfg: &NumericConfig,
    implication: &str,
    grid: usize,
    out: Option<PathBuf>,
) -> Result<ExitCode> {
    let i = registry.binary(implication, ConnectiveKind::Implication)?;
    let check =
        verify_theorem(TheoremId::Thm41, &LawOperands::implication(&i), cfg)
            .map_err(|e| anyhow!("{e}"))?;
    if check.verdict == Verdict::PreconditionFailed {
        return finish_check(check, out);
    }
    let n_i = induce::negation_of_implication(&i, cfg).map_err(|e| anyhow!("{e}"))?;
    let d = induce::disjunction_from_implication(&i, cfg).map_err(|e| anyhow!("{e}"))?;
    let mut sup = 0.0f64;
    for a in 0..grid {
        let x = a as f64 / (grid - 1) as f64;
        let nx = n_i.eval(x);
        for b in 0..grid {
            let y = b as f64 / (grid - 1) as f64;
            sup = sup.max((d.eval(nx, y) - i.eval(x, y)).abs());
        }
    }
    println!("sup-norm round-trip distance on a {grid}x{grid} grid: {sup:e}");
    finish_check(check, out)
}

#[allow(clippy::too_many_arguments)]
fn fuzz_command(
    cfg: &NumericConfig,
    target: &str,
    budget: usize,
    m: usize,
    kind: &str,
    commutative: bool,
    family: &str,
    out: Option<PathBuf>,
    grid_csv: Option<PathBuf>,
) -> Result<ExitCode> {
    let target: SearchTarget = target.parse().map_err(|e| anyhow!("{e}"))?;
    let kind = match kind {
        "conjunction" => ConnectiveKind::Conjunction,
        "disjunction" => ConnectiveKind::Disjunction,
        other => bail!("--kind must be conjunction or disjunction (got `{other}`)"),
    };
    let family = match family {
        "bilinear" => GeneratorFamily::Bilinear,
        "profile" => GeneratorFamily::ShiftedProfile,
        other => bail!("--family must be bilinear or profile (got `{other}`)"),
    };
    let params = GeneratorParams {
        m,
        kind,
        commutative,
        family,
    };
    match fuzz::search_counterexample(target, &params, budget, cfg)
        .map_err(|e| anyhow!("{e}"))?
    {
        None => {
            println!("no counterexample within budget {budget}");
            Ok(ExitCode::SUCCESS)
        }
        Some(bundle) => {
            println!("counterexample at seed {}: {}", bundle.seed, bundle.check);
            if let Some(path) = out {
                let mut doc = bundle.check.to_json();
                doc["seed"] = serde_json::json!(bundle.seed);
                doc["generator_m"] = serde_json::json!(m);
                doc["generator_commutative"] = serde_json::json!(commutative);
                write_atomic(&path, &serde_json::to_string_pretty(&doc)?)?;
            }
            if let Some(path) = grid_csv {
                if let Some(grid) = bundle.connective.grid() {
                    write_atomic(&path, &grid.to_csv())?;
                } else {
                    dump_connective_csv(&path, &bundle.connective, 33)?;
                }
            }
            Ok(ExitCode::from(1))
        }
    }
}

fn dump_connective_csv(path: &Path, b: &BinaryConnective, grid: usize) -> Result<()> {
    let pts: Vec<f64> = (0..grid).map(|i| i as f64 / (grid - 1) as f64).collect();
    let mut rows = Vec::with_capacity(grid * grid);
    for &x in &pts {
        for &y in &pts {
            rows.push((x, y, b.eval(x, y)));
        }
    }
    write_atomic(path, &binary_csv(&rows))?;
    Ok(())
}
