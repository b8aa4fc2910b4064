//! Batch evaluation of named checks over a catalog, with deterministic
//! text and JSON reports.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::algebra::{AlgebraKind, AlgebraPresentation};
use crate::catalog::CatalogDocument;
use crate::certificate::{check_certificate, standard_subdirect_certificate};
use crate::error::{Error, Result};
use crate::formation::{char0_abelian_quotient_check, fn_theorem_check, FormationSpec};
use crate::module::DichotomyClass;
use crate::scalar::FieldTag;
use crate::series::{
    chief_series, derived_series, is_nilpotent, is_soluble, leib_ideal, lower_central_series,
    nilradical,
};
use crate::subspace::SubspaceBasis;

/// Largest GF(p) algebra dimension the brute-force nilradical oracle
/// will enumerate subspaces for.
const ORACLE_DIM_LIMIT: usize = 4;
const ORACLE_CHAR_LIMIT: u64 = 5;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BatchCheck {
    Validate,
    Series,
    NilradicalOracle,
    Char0Abelian,
    FnTheorem(FormationSpec),
    LeibProperties,
    Dichotomy,
    Certificate,
}

impl fmt::Display for BatchCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BatchCheck::Validate => write!(f, "validate"),
            BatchCheck::Series => write!(f, "series"),
            BatchCheck::NilradicalOracle => write!(f, "nilradical-oracle"),
            BatchCheck::Char0Abelian => write!(f, "char0-abelian"),
            BatchCheck::FnTheorem(inner) => write!(f, "fn-theorem:{inner}"),
            BatchCheck::LeibProperties => write!(f, "leib-properties"),
            BatchCheck::Dichotomy => write!(f, "dichotomy"),
            BatchCheck::Certificate => write!(f, "certificate"),
        }
    }
}

impl FromStr for BatchCheck {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s {
            "validate" => Ok(BatchCheck::Validate),
            "series" => Ok(BatchCheck::Series),
            "nilradical-oracle" => Ok(BatchCheck::NilradicalOracle),
            "char0-abelian" => Ok(BatchCheck::Char0Abelian),
            "leib-properties" => Ok(BatchCheck::LeibProperties),
            "dichotomy" => Ok(BatchCheck::Dichotomy),
            "certificate" => Ok(BatchCheck::Certificate),
            _ => match s.strip_prefix("fn-theorem:") {
                Some(inner) => Ok(BatchCheck::FnTheorem(inner.parse()?)),
                None => Err(Error::UnknownCheck(s.to_string())),
            },
        }
    }
}

/// Comma-separated check list as accepted on the command line.
pub fn parse_checks(s: &str) -> Result<Vec<BatchCheck>> {
    s.split(',')
        .filter(|part| !part.trim().is_empty())
        .map(str::parse)
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skip,
    Info,
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CheckStatus::Pass => write!(f, "PASS"),
            CheckStatus::Fail => write!(f, "FAIL"),
            CheckStatus::Skip => write!(f, "SKIP"),
            CheckStatus::Info => write!(f, "INFO"),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckOutcome {
    pub entry: String,
    pub check: String,
    pub status: CheckStatus,
    pub details: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct BatchReport {
    pub outcomes: Vec<CheckOutcome>,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub informational: usize,
}

impl BatchReport {
    fn from_outcomes(mut outcomes: Vec<CheckOutcome>) -> BatchReport {
        outcomes.sort_by(|a, b| a.entry.cmp(&b.entry));
        let count = |status: CheckStatus| outcomes.iter().filter(|o| o.status == status).count();
        BatchReport {
            passed: count(CheckStatus::Pass),
            failed: count(CheckStatus::Fail),
            skipped: count(CheckStatus::Skip),
            informational: count(CheckStatus::Info),
            outcomes,
        }
    }

    pub fn has_failures(&self) -> bool {
        self.failed > 0
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for o in &self.outcomes {
            out.push_str(&format!("[{}] {} :: {}\n", o.status, o.entry, o.check));
            for d in &o.details {
                out.push_str(&format!("       {d}\n"));
            }
        }
        out.push_str(&format!(
            "summary: {} pass, {} fail, {} skip, {} info\n",
            self.passed, self.failed, self.skipped, self.informational
        ));
        out
    }

    pub fn render_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }
}

fn outcome(
    entry: &str,
    check: &BatchCheck,
    status: CheckStatus,
    details: Vec<String>,
) -> CheckOutcome {
    CheckOutcome {
        entry: entry.to_string(),
        check: check.to_string(),
        status,
        details,
    }
}

fn error_outcome(entry: &str, check: &BatchCheck, err: &Error) -> CheckOutcome {
    outcome(entry, check, CheckStatus::Fail, vec![format!("error: {err}")])
}

/// Exhaustive maximal nilpotent ideal over a small GF(p) algebra, with
/// a uniqueness assertion. Returns the violated condition as Err text.
fn brute_force_nilradical(
    l: &AlgebraPresentation,
) -> std::result::Result<SubspaceBasis, String> {
    let p = match l.field() {
        FieldTag::GF(p) => p,
        FieldTag::Q => return Err("oracle needs a finite field".into()),
    };
    let mut nilpotent_ideals = Vec::new();
    for space in crate::enumerate::all_subspaces(p, l.dim()) {
        if !l.is_ideal(&space).map_err(|e| e.to_string())? {
            continue;
        }
        let sub = l
            .restrict_to_subalgebra(&space)
            .map_err(|e| e.to_string())?;
        if is_nilpotent(&sub) {
            nilpotent_ideals.push(space);
        }
    }
    let max_dim = nilpotent_ideals.iter().map(SubspaceBasis::dim).max().unwrap_or(0);
    let maximal: Vec<&SubspaceBasis> = nilpotent_ideals
        .iter()
        .filter(|s| s.dim() == max_dim)
        .collect();
    if maximal.len() != 1 {
        return Err(format!(
            "maximal nilpotent ideal is not unique: {} candidates of dim {}",
            maximal.len(),
            max_dim
        ));
    }
    let winner = maximal[0].clone();
    for candidate in &nilpotent_ideals {
        if !candidate.is_subspace_of(&winner).map_err(|e| e.to_string())? {
            return Err("a nilpotent ideal escapes the maximal one".into());
        }
    }
    Ok(winner)
}

fn check_algebra(l: &AlgebraPresentation, check: &BatchCheck) -> CheckOutcome {
    let entry = l.name();
    match check {
        BatchCheck::Validate => {
            let report = l.validate();
            if report.is_valid() {
                outcome(entry, check, CheckStatus::Pass, vec![format!("valid {}", l.kind())])
            } else {
                let details = report.violations.iter().map(|v| v.to_string()).collect();
                outcome(entry, check, CheckStatus::Fail, details)
            }
        }
        BatchCheck::Series => {
            let derived = derived_series(l);
            let lower = lower_central_series(l);
            let details = vec![
                format!("derived dims: {:?}", derived.dims()),
                format!("lower central dims: {:?}", lower.dims()),
                format!(
                    "soluble: {}, nilpotent: {}",
                    derived.reaches_zero(),
                    lower.reaches_zero()
                ),
            ];
            outcome(entry, check, CheckStatus::Pass, details)
        }
        BatchCheck::NilradicalOracle => {
            let feasible = matches!(l.field(), FieldTag::GF(p) if p <= ORACLE_CHAR_LIMIT)
                && l.dim() <= ORACLE_DIM_LIMIT;
            if !feasible {
                return outcome(
                    entry,
                    check,
                    CheckStatus::Skip,
                    vec!["oracle enumerates subspaces only for small GF(p) algebras".into()],
                );
            }
            if !is_soluble(l) {
                return outcome(
                    entry,
                    check,
                    CheckStatus::Skip,
                    vec!["nilradical is defined here for soluble algebras".into()],
                );
            }
            let computed = match nilradical(l) {
                Ok(n) => n,
                Err(e) => return error_outcome(entry, check, &e),
            };
            match brute_force_nilradical(l) {
                Ok(oracle) => {
                    if oracle == *computed.space() {
                        outcome(
                            entry,
                            check,
                            CheckStatus::Pass,
                            vec![format!("nilradical dim {} confirmed by enumeration", oracle.dim())],
                        )
                    } else {
                        outcome(
                            entry,
                            check,
                            CheckStatus::Fail,
                            vec![format!(
                                "centralizer intersection has dim {}, enumeration found dim {}",
                                computed.dim(),
                                oracle.dim()
                            )],
                        )
                    }
                }
                Err(msg) => outcome(entry, check, CheckStatus::Fail, vec![msg]),
            }
        }
        BatchCheck::Char0Abelian => {
            if l.field() != FieldTag::Q || l.kind() != AlgebraKind::Lie {
                return outcome(
                    entry,
                    check,
                    CheckStatus::Skip,
                    vec!["check applies to Lie algebras over Q".into()],
                );
            }
            if !is_soluble(l) {
                return outcome(
                    entry,
                    check,
                    CheckStatus::Skip,
                    vec!["check applies to soluble algebras".into()],
                );
            }
            match char0_abelian_quotient_check(l) {
                Ok(report) if report.pass => outcome(
                    entry,
                    check,
                    CheckStatus::Pass,
                    vec![format!(
                        "all {} factor quotients abelian",
                        report.factor_quotients_abelian.len()
                    )],
                ),
                Ok(report) => outcome(
                    entry,
                    check,
                    CheckStatus::Fail,
                    vec![format!("flags: {:?}", report.factor_quotients_abelian)],
                ),
                Err(e) => error_outcome(entry, check, &e),
            }
        }
        BatchCheck::FnTheorem(inner) => {
            if !is_soluble(l) {
                return outcome(
                    entry,
                    check,
                    CheckStatus::Skip,
                    vec!["check applies to soluble algebras".into()],
                );
            }
            match fn_theorem_check(l, inner) {
                Ok(report) => {
                    let detail = format!(
                        "loc: {}, nilpotent-by: {}",
                        report.loc_member, report.nilpotent_by_member
                    );
                    if report.informational {
                        outcome(entry, check, CheckStatus::Info, vec![detail])
                    } else if report.agree {
                        outcome(entry, check, CheckStatus::Pass, vec![detail])
                    } else {
                        outcome(entry, check, CheckStatus::Fail, vec![detail])
                    }
                }
                Err(e) => error_outcome(entry, check, &e),
            }
        }
        BatchCheck::LeibProperties => {
            let leib = match leib_ideal(l) {
                Ok(leib) => leib,
                Err(e) => return error_outcome(entry, check, &e),
            };
            let mut problems = Vec::new();
            let right_product = l
                .product_subspaces(leib.space(), &l.full_space())
                .expect("spaces live in l");
            if !right_product.is_zero() {
                problems.push("Leib(L)·L is nonzero".to_string());
            }
            let self_product = l
                .product_subspaces(leib.space(), leib.space())
                .expect("spaces live in l");
            if !self_product.is_zero() {
                problems.push("Leib(L) is not abelian".to_string());
            }
            match l.quotient(&leib) {
                Ok((q, _)) => {
                    if !q.validate_as(AlgebraKind::Lie).is_valid() {
                        problems.push("quotient by Leib(L) is not a Lie algebra".to_string());
                    }
                }
                Err(e) => problems.push(format!("quotient failed: {e}")),
            }
            if problems.is_empty() {
                outcome(
                    entry,
                    check,
                    CheckStatus::Pass,
                    vec![format!("leib ideal dim {}", leib.dim())],
                )
            } else {
                outcome(entry, check, CheckStatus::Fail, problems)
            }
        }
        BatchCheck::Dichotomy => {
            if !is_soluble(l) {
                return outcome(
                    entry,
                    check,
                    CheckStatus::Skip,
                    vec!["chief factors need a soluble algebra".into()],
                );
            }
            let series = match chief_series(l) {
                Ok(s) => s,
                Err(e) => return error_outcome(entry, check, &e),
            };
            let mut classes = Vec::new();
            for factor in &series.factors {
                match factor.classify_dichotomy() {
                    Ok(DichotomyClass::Neither) => {
                        return outcome(
                            entry,
                            check,
                            CheckStatus::Fail,
                            vec![format!("factor {} is neither symmetric nor antisymmetric", factor.name())],
                        );
                    }
                    Ok(class) => classes.push(class.to_string()),
                    Err(e) => return error_outcome(entry, check, &e),
                }
            }
            outcome(
                entry,
                check,
                CheckStatus::Pass,
                vec![format!("factor classes: {}", classes.join(", "))],
            )
        }
        BatchCheck::Certificate => {
            if !is_soluble(l) {
                return outcome(
                    entry,
                    check,
                    CheckStatus::Skip,
                    vec!["certificates are built for soluble algebras".into()],
                );
            }
            let cert = match standard_subdirect_certificate(l) {
                Ok(c) => c,
                Err(e) => return error_outcome(entry, check, &e),
            };
            match check_certificate(&cert, &FormationSpec::Soluble) {
                Ok(true) => outcome(
                    entry,
                    check,
                    CheckStatus::Pass,
                    vec![format!(
                        "certificate over {} with {} witness ideals accepted",
                        cert.algebra.name(),
                        cert.witnesses.len()
                    )],
                ),
                Ok(false) => outcome(
                    entry,
                    check,
                    CheckStatus::Fail,
                    vec!["certificate rejected semantically".into()],
                ),
                Err(e) => error_outcome(entry, check, &e),
            }
        }
    }
}

pub fn run_batch(doc: &CatalogDocument, checks: &[BatchCheck]) -> BatchReport {
    let mut outcomes = Vec::new();
    for check in checks {
        for l in doc.algebras() {
            outcomes.push(check_algebra(l, check));
        }
        if let BatchCheck::Validate = check {
            for m in doc.modules() {
                let report = m.verify();
                if report.is_valid() {
                    outcomes.push(outcome(
                        m.name(),
                        check,
                        CheckStatus::Pass,
                        vec![format!("valid module over {}", m.algebra().name())],
                    ));
                } else {
                    let details = report.violations.iter().map(|v| v.to_string()).collect();
                    outcomes.push(outcome(m.name(), check, CheckStatus::Fail, details));
                }
            }
        }
    }
    BatchReport::from_outcomes(outcomes)
}
