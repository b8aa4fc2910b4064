//! Command-line surface over the library: catalog inspection, series
//! and nilradical reports, formation membership, the F/N comparison,
//! the Leibniz counterexample generator, and batch check suites.
//!
//! Exit codes: 0 when every requested check passes, 1 when a check
//! fails, 2 on input errors (bad files, unknown entries, bad specs).

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use formations::batch::{parse_checks, run_batch};
use formations::catalog::{builtin, parse_catalog, CatalogDocument};
use formations::counterexample::generate_counterexample;
use formations::formation::{fn_theorem_check, formation_membership, FormationSpec};
use formations::series::{
    chief_series, derived_series, is_soluble, leib_ideal, lower_central_series, nilradical,
};
use formations::subspace::SubspaceBasis;
use formations::{AlgebraKind, Error};

#[derive(Parser)]
#[command(
    name = "formations",
    version,
    about = "Exact computations with soluble Lie and Leibniz algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CatalogArgs {
    /// Catalog files; the built-in catalog is used when none are given
    paths: Vec<PathBuf>,
    /// Restrict to the named entry
    #[arg(long)]
    entry: Option<String>,
    /// Write the report to a file instead of stdout
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Check every entry against its declared algebra or module laws
    Validate(CatalogArgs),
    /// One-line structural summary per entry
    Info(CatalogArgs),
    /// Derived and lower central series dimensions
    Series(CatalogArgs),
    /// Nilradical of each soluble algebra
    Nilradical(CatalogArgs),
    /// Chief series with factor dimensions and centralizers
    ChiefSeries(CatalogArgs),
    /// Leib ideal of each algebra and the induced Lie quotient
    Leib(CatalogArgs),
    /// Formation membership for each algebra
    Check {
        /// Formation spec, e.g. supersoluble or loc(abelian)
        #[arg(long)]
        formation: String,
        #[command(flatten)]
        catalog: CatalogArgs,
    },
    /// Compare loc(K) membership with nilpotent-by-K membership
    FnCheck {
        /// Inner formation spec K
        #[arg(long)]
        inner: String,
        #[command(flatten)]
        catalog: CatalogArgs,
    },
    /// Build the non-Lie Leibniz extension of a Lie algebra by a module
    Counterexample {
        /// Base algebra name
        #[arg(long)]
        base: String,
        /// Left module name
        #[arg(long)]
        module: String,
        #[command(flatten)]
        catalog: CatalogArgs,
    },
    /// Run a comma-separated list of named checks over the catalog
    Batch {
        /// validate, series, nilradical-oracle, char0-abelian,
        /// fn-theorem:<spec>, leib-properties, dichotomy, certificate
        #[arg(long)]
        checks: String,
        /// Emit the report as JSON
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        catalog: CatalogArgs,
    },
}

fn load_document(args: &CatalogArgs) -> Result<CatalogDocument, Error> {
    let mut doc = if args.paths.is_empty() {
        builtin::document()
    } else {
        let mut merged = CatalogDocument::empty();
        for path in &args.paths {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::UnknownEntry(format!("{}: {e}", path.display())))?;
            merged = merged.merge(parse_catalog(&text)?)?;
        }
        merged
    };
    if let Some(name) = &args.entry {
        if !doc.entries.iter().any(|e| e.name() == *name) {
            return Err(Error::UnknownEntry(name.clone()));
        }
        doc.entries.retain(|e| e.name() == *name);
    }
    Ok(doc)
}

fn deliver(args: &CatalogArgs, report: &str) -> Result<(), Error> {
    match &args.output {
        Some(path) => std::fs::write(path, report)
            .map_err(|e| Error::UnknownEntry(format!("{}: {e}", path.display()))),
        None => {
            print!("{report}");
            Ok(())
        }
    }
}

fn describe_space(space: &SubspaceBasis) -> String {
    if space.is_zero() {
        return "0".to_string();
    }
    let rows: Vec<String> = space
        .basis_rows()
        .iter()
        .map(|r| {
            let coords: Vec<String> = r.iter().map(|s| s.to_string()).collect();
            format!("({})", coords.join(", "))
        })
        .collect();
    rows.join(" ")
}

/// Runs one verb; Ok(true) means every per-entry check passed.
fn run(cli: Cli) -> Result<bool, Error> {
    match cli.command {
        Command::Validate(args) => {
            let doc = load_document(&args)?;
            let mut out = String::new();
            let mut ok = true;
            for entry in &doc.entries {
                match entry {
                    formations::CatalogEntry::Algebra(a) => {
                        let report = a.validate();
                        if report.is_valid() {
                            let _ = writeln!(out, "{}: valid {}", a.name(), a.kind());
                        } else {
                            ok = false;
                            let _ = writeln!(out, "{}: INVALID as {}", a.name(), a.kind());
                            for v in &report.violations {
                                let _ = writeln!(out, "  {v}");
                            }
                        }
                    }
                    formations::CatalogEntry::Module(m) => {
                        let report = m.verify();
                        if report.is_valid() {
                            let _ = writeln!(
                                out,
                                "{}: valid module over {}",
                                m.name(),
                                m.algebra().name()
                            );
                        } else {
                            ok = false;
                            let _ = writeln!(out, "{}: INVALID module", m.name());
                            for v in &report.violations {
                                let _ = writeln!(out, "  {v}");
                            }
                        }
                    }
                }
            }
            deliver(&args, &out)?;
            Ok(ok)
        }
        Command::Info(args) => {
            let doc = load_document(&args)?;
            let mut out = String::new();
            for entry in &doc.entries {
                match entry {
                    formations::CatalogEntry::Algebra(a) => {
                        let _ = writeln!(
                            out,
                            "{}: {} algebra over {}, dim {}, {} bracket terms",
                            a.name(),
                            a.kind(),
                            a.field(),
                            a.dim(),
                            a.bracket_terms().len()
                        );
                    }
                    formations::CatalogEntry::Module(m) => {
                        let _ = writeln!(
                            out,
                            "{}: module over {}, dim {}, right action {}",
                            m.name(),
                            m.algebra().name(),
                            m.dim_v(),
                            if m.has_right_action() { "present" } else { "absent" }
                        );
                    }
                }
            }
            deliver(&args, &out)?;
            Ok(true)
        }
        Command::Series(args) => {
            let doc = load_document(&args)?;
            let mut out = String::new();
            for a in doc.algebras() {
                let derived = derived_series(a);
                let lower = lower_central_series(a);
                let _ = writeln!(
                    out,
                    "{}: derived {:?}, lower central {:?}, soluble {}, nilpotent {}",
                    a.name(),
                    derived.dims(),
                    lower.dims(),
                    derived.reaches_zero(),
                    lower.reaches_zero()
                );
            }
            deliver(&args, &out)?;
            Ok(true)
        }
        Command::Nilradical(args) => {
            let doc = load_document(&args)?;
            let mut out = String::new();
            for a in doc.algebras() {
                if !is_soluble(a) {
                    let _ = writeln!(out, "{}: skipped (not soluble)", a.name());
                    continue;
                }
                let n = nilradical(a)?;
                let _ = writeln!(
                    out,
                    "{}: nilradical dim {}, basis {}",
                    a.name(),
                    n.dim(),
                    describe_space(n.space())
                );
            }
            deliver(&args, &out)?;
            Ok(true)
        }
        Command::ChiefSeries(args) => {
            let doc = load_document(&args)?;
            let mut out = String::new();
            for a in doc.algebras() {
                if !is_soluble(a) {
                    let _ = writeln!(out, "{}: skipped (not soluble)", a.name());
                    continue;
                }
                let series = chief_series(a)?;
                let ideal_dims: Vec<usize> =
                    series.ideals.iter().map(SubspaceBasis::dim).collect();
                let _ = writeln!(
                    out,
                    "{}: ideal dims {:?}, factor dims {:?}",
                    a.name(),
                    ideal_dims,
                    series.factor_dims()
                );
                for (i, c) in series.centralizers.iter().enumerate() {
                    let _ = writeln!(
                        out,
                        "  factor {}: centralizer dim {}, basis {}",
                        i + 1,
                        c.dim(),
                        describe_space(c)
                    );
                }
            }
            deliver(&args, &out)?;
            Ok(true)
        }
        Command::Leib(args) => {
            let doc = load_document(&args)?;
            let mut out = String::new();
            for a in doc.algebras() {
                let leib = leib_ideal(a)?;
                let (q, _) = a.quotient(&leib)?;
                let _ = writeln!(
                    out,
                    "{}: leib ideal dim {}, basis {}, quotient is lie: {}",
                    a.name(),
                    leib.dim(),
                    describe_space(leib.space()),
                    q.validate_as(AlgebraKind::Lie).is_valid()
                );
            }
            deliver(&args, &out)?;
            Ok(true)
        }
        Command::Check { formation, catalog } => {
            let spec: FormationSpec = formation.parse()?;
            let doc = load_document(&catalog)?;
            let mut out = String::new();
            let mut all_member = true;
            for a in doc.algebras() {
                let member = if spec.needs_chief_series() && !is_soluble(a) {
                    let _ = writeln!(out, "{}: not a member (not soluble)", a.name());
                    all_member = false;
                    continue;
                } else {
                    formation_membership(a, &spec)?
                };
                if !member {
                    all_member = false;
                }
                let _ = writeln!(
                    out,
                    "{}: {}member of {}",
                    a.name(),
                    if member { "" } else { "not a " },
                    spec
                );
            }
            deliver(&catalog, &out)?;
            Ok(all_member)
        }
        Command::FnCheck { inner, catalog } => {
            let spec: FormationSpec = inner.parse()?;
            let doc = load_document(&catalog)?;
            let mut out = String::new();
            let mut ok = true;
            for a in doc.algebras() {
                if !is_soluble(a) {
                    let _ = writeln!(out, "{}: skipped (not soluble)", a.name());
                    continue;
                }
                let report = fn_theorem_check(a, &spec)?;
                let verdict = if report.informational {
                    "informational"
                } else if report.agree {
                    "agree"
                } else {
                    ok = false;
                    "DISAGREE"
                };
                let _ = writeln!(
                    out,
                    "{}: loc({}) {} vs nilpotent-by({}) {} [{}]",
                    a.name(),
                    spec,
                    report.loc_member,
                    spec,
                    report.nilpotent_by_member,
                    verdict
                );
            }
            deliver(&catalog, &out)?;
            Ok(ok)
        }
        Command::Counterexample {
            base,
            module,
            catalog,
        } => {
            let doc = load_document(&catalog)?;
            let base_algebra = doc
                .algebra(&base)
                .ok_or_else(|| Error::UnknownEntry(base.clone()))?;
            let module_presentation = doc
                .module(&module)
                .ok_or_else(|| Error::UnknownEntry(module.clone()))?;
            let result = generate_counterexample(base_algebra, module_presentation)?;
            let mut out = String::new();
            for line in &result.report_lines {
                let _ = writeln!(out, "# {line}");
            }
            out.push_str(&result.entry_text);
            deliver(&catalog, &out)?;
            Ok(true)
        }
        Command::Batch {
            checks,
            json,
            catalog,
        } => {
            let list = parse_checks(&checks)?;
            if list.is_empty() {
                return Err(Error::UnknownCheck("empty check list".into()));
            }
            let doc = load_document(&catalog)?;
            let report = run_batch(&doc, &list);
            let rendered = if json {
                report.render_json()
            } else {
                report.render_text()
            };
            deliver(&catalog, &rendered)?;
            Ok(!report.has_failures())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
