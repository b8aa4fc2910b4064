//! Formation predicates and the F/N quotient comparison.
//!
//! A formation here is a decidable predicate described by a small spec
//! tree. The interesting variants are `LocallyDefined(K)`, which tests
//! L/C_L(H/K) ∈ K for every chief factor H/K, and `NilpotentBy(K)`,
//! which tests L/N(L) ∈ K. Over GF(p) the two agree; over Q the
//! comparison is still runnable but only informational.

use std::fmt;
use std::str::FromStr;

use crate::algebra::{AlgebraKind, AlgebraPresentation, IdealHandle};
use crate::error::{Error, Result};
use crate::scalar::FieldTag;
use crate::series::{chief_series, is_nilpotent, is_soluble, nilradical};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FormationSpec {
    Zero,
    Abelian,
    Nilpotent,
    Soluble,
    Supersoluble,
    NilpotentBy(Box<FormationSpec>),
    LocallyDefined(Box<FormationSpec>),
}

impl fmt::Display for FormationSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormationSpec::Zero => write!(f, "zero"),
            FormationSpec::Abelian => write!(f, "abelian"),
            FormationSpec::Nilpotent => write!(f, "nilpotent"),
            FormationSpec::Soluble => write!(f, "soluble"),
            FormationSpec::Supersoluble => write!(f, "supersoluble"),
            FormationSpec::NilpotentBy(inner) => write!(f, "nilpotent-by({inner})"),
            FormationSpec::LocallyDefined(inner) => write!(f, "loc({inner})"),
        }
    }
}

impl FromStr for FormationSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s {
            "zero" => return Ok(FormationSpec::Zero),
            "abelian" => return Ok(FormationSpec::Abelian),
            "nilpotent" => return Ok(FormationSpec::Nilpotent),
            "soluble" => return Ok(FormationSpec::Soluble),
            "supersoluble" => return Ok(FormationSpec::Supersoluble),
            _ => {}
        }
        type Wrap = fn(Box<FormationSpec>) -> FormationSpec;
        for (prefix, wrap) in [
            ("nilpotent-by(", FormationSpec::NilpotentBy as Wrap),
            ("loc(", FormationSpec::LocallyDefined as Wrap),
        ] {
            if let Some(rest) = s.strip_prefix(prefix) {
                let inner = rest
                    .strip_suffix(')')
                    .ok_or_else(|| Error::BadFormationSpec(s.to_string()))?;
                return Ok(wrap(Box::new(inner.parse::<FormationSpec>()?)));
            }
        }
        Err(Error::BadFormationSpec(s.to_string()))
    }
}

impl FormationSpec {
    /// True when deciding membership requires a chief series.
    pub fn needs_chief_series(&self) -> bool {
        matches!(
            self,
            FormationSpec::Supersoluble
                | FormationSpec::NilpotentBy(_)
                | FormationSpec::LocallyDefined(_)
        )
    }
}

fn is_abelian(l: &AlgebraPresentation) -> bool {
    l.product_subspaces(&l.full_space(), &l.full_space())
        .expect("full space lives in the algebra")
        .is_zero()
}

pub fn formation_membership(l: &AlgebraPresentation, spec: &FormationSpec) -> Result<bool> {
    match spec {
        FormationSpec::Zero => Ok(l.dim() == 0),
        FormationSpec::Abelian => Ok(is_abelian(l)),
        FormationSpec::Nilpotent => Ok(is_nilpotent(l)),
        FormationSpec::Soluble => Ok(is_soluble(l)),
        FormationSpec::Supersoluble => {
            let series = chief_series(l)?;
            Ok(series.factor_dims().iter().all(|&d| d == 1))
        }
        FormationSpec::NilpotentBy(inner) => {
            let n = nilradical(l)?;
            let (q, _) = l.quotient(&n)?;
            formation_membership(&q, inner)
        }
        FormationSpec::LocallyDefined(inner) => {
            let series = chief_series(l)?;
            for centralizer in &series.centralizers {
                let c = IdealHandle::new(l, centralizer.clone())?;
                let (q, _) = l.quotient(&c)?;
                if !formation_membership(&q, inner)? {
                    return Ok(false);
                }
            }
            Ok(true)
        }
    }
}

/// Side-by-side result of the two membership tests that the F/N
/// quotient theorem relates.
#[derive(Debug, Clone)]
pub struct FnTheoremReport {
    pub algebra: String,
    pub inner: FormationSpec,
    pub loc_member: bool,
    pub nilpotent_by_member: bool,
    pub agree: bool,
    /// Set over Q, where agreement is expected but not required.
    pub informational: bool,
}

pub fn fn_theorem_check(
    l: &AlgebraPresentation,
    inner: &FormationSpec,
) -> Result<FnTheoremReport> {
    if !is_soluble(l) {
        return Err(Error::NotSoluble(l.name().to_string()));
    }
    let loc_member =
        formation_membership(l, &FormationSpec::LocallyDefined(Box::new(inner.clone())))?;
    let nilpotent_by_member =
        formation_membership(l, &FormationSpec::NilpotentBy(Box::new(inner.clone())))?;
    Ok(FnTheoremReport {
        algebra: l.name().to_string(),
        inner: inner.clone(),
        loc_member,
        nilpotent_by_member,
        agree: loc_member == nilpotent_by_member,
        informational: l.field() == FieldTag::Q,
    })
}

/// Per chief factor, whether L modulo the factor's centralizer is
/// abelian. Over Q this holds for every soluble Lie algebra.
#[derive(Debug, Clone)]
pub struct Char0AbelianReport {
    pub algebra: String,
    pub factor_quotients_abelian: Vec<bool>,
    pub pass: bool,
}

pub fn char0_abelian_quotient_check(l: &AlgebraPresentation) -> Result<Char0AbelianReport> {
    if l.field() != FieldTag::Q {
        return Err(Error::FieldMismatch("Q".into(), l.field().to_string()));
    }
    if l.kind() != AlgebraKind::Lie {
        return Err(Error::InvalidAlgebra(
            l.name().to_string(),
            "abelian-quotient check applies to Lie algebras".into(),
        ));
    }
    let series = chief_series(l)?;
    let mut flags = Vec::with_capacity(series.length());
    for centralizer in &series.centralizers {
        let c = IdealHandle::new(l, centralizer.clone())?;
        let (q, _) = l.quotient(&c)?;
        flags.push(is_abelian(&q));
    }
    let pass = flags.iter().all(|&b| b);
    Ok(Char0AbelianReport {
        algebra: l.name().to_string(),
        factor_quotients_abelian: flags,
        pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::builtin;

    fn spec(s: &str) -> FormationSpec {
        s.parse().unwrap()
    }

    #[test]
    fn spec_syntax_round_trips() {
        for text in [
            "zero",
            "abelian",
            "nilpotent",
            "soluble",
            "supersoluble",
            "nilpotent-by(abelian)",
            "loc(zero)",
            "loc(nilpotent-by(abelian))",
            "nilpotent-by(loc(soluble))",
        ] {
            assert_eq!(spec(text).to_string(), text);
        }
    }

    #[test]
    fn spec_syntax_rejects_garbage() {
        for text in ["", "frobenius", "loc(abelian", "loc()", "nilpotent-by", "loc(abelian))"] {
            assert!(
                text.parse::<FormationSpec>().is_err(),
                "accepted {text:?}"
            );
        }
    }

    #[test]
    fn atomic_memberships() {
        let r2 = builtin::r2();
        assert!(!formation_membership(&r2, &spec("zero")).unwrap());
        assert!(!formation_membership(&r2, &spec("abelian")).unwrap());
        assert!(!formation_membership(&r2, &spec("nilpotent")).unwrap());
        assert!(formation_membership(&r2, &spec("soluble")).unwrap());
        assert!(formation_membership(&builtin::ab1(), &spec("abelian")).unwrap());
        assert!(!formation_membership(&builtin::sl2(), &spec("soluble")).unwrap());
    }

    #[test]
    fn supersolubility() {
        assert!(formation_membership(&builtin::r2(), &spec("supersoluble")).unwrap());
        assert!(formation_membership(&builtin::h3(), &spec("supersoluble")).unwrap());
        // bottom chief factor is 2-dimensional
        assert!(!formation_membership(&builtin::e4_gf2(), &spec("supersoluble")).unwrap());
        assert!(matches!(
            formation_membership(&builtin::sl2(), &spec("supersoluble")),
            Err(Error::NotSoluble(_))
        ));
    }

    #[test]
    fn loc_zero_is_the_nilpotency_predicate() {
        for a in [
            builtin::ab1(),
            builtin::r2(),
            builtin::h3(),
            builtin::r2_gf2(),
            builtin::r2_gf3(),
            builtin::e4_gf2(),
            builtin::p3(),
            builtin::p4_gf2(),
        ] {
            let loc = formation_membership(&a, &spec("loc(zero)")).unwrap();
            assert_eq!(loc, is_nilpotent(&a), "algebra {}", a.name());
        }
        assert!(formation_membership(&builtin::h3(), &spec("loc(zero)")).unwrap());
    }

    #[test]
    fn e4_needs_a_soluble_inner_formation() {
        let e4 = builtin::e4_gf2();
        assert!(!formation_membership(&e4, &spec("loc(abelian)")).unwrap());
        assert!(!formation_membership(&e4, &spec("nilpotent-by(abelian)")).unwrap());
        assert!(formation_membership(&e4, &spec("loc(soluble)")).unwrap());
        assert!(formation_membership(&e4, &spec("nilpotent-by(soluble)")).unwrap());
    }

    #[test]
    fn fn_theorem_agreement_on_builtin_gf_algebras() {
        for a in [builtin::r2_gf2(), builtin::r2_gf3(), builtin::e4_gf2(), builtin::p4_gf2()] {
            for inner in ["zero", "abelian", "nilpotent", "soluble"] {
                let report = fn_theorem_check(&a, &spec(inner)).unwrap();
                assert!(report.agree, "{} with inner {}", a.name(), inner);
                assert!(!report.informational);
            }
        }
    }

    #[test]
    fn fn_theorem_report_fields() {
        let report = fn_theorem_check(&builtin::r2_gf3(), &spec("abelian")).unwrap();
        assert!(report.loc_member);
        assert!(report.nilpotent_by_member);
        assert!(report.agree);

        let report = fn_theorem_check(&builtin::e4_gf2(), &spec("abelian")).unwrap();
        assert!(!report.loc_member);
        assert!(!report.nilpotent_by_member);
        assert!(report.agree);

        let report = fn_theorem_check(&builtin::h3(), &spec("zero")).unwrap();
        assert!(report.loc_member && report.nilpotent_by_member);
        assert!(report.informational);

        assert!(matches!(
            fn_theorem_check(&builtin::sl2(), &spec("zero")),
            Err(Error::NotSoluble(_))
        ));
    }

    #[test]
    fn char0_abelian_quotients() {
        assert!(char0_abelian_quotient_check(&builtin::r2()).unwrap().pass);
        let h3_report = char0_abelian_quotient_check(&builtin::h3()).unwrap();
        assert!(h3_report.pass);
        assert_eq!(h3_report.factor_quotients_abelian.len(), 3);

        let sum = builtin::r2().direct_sum(&builtin::h3()).unwrap();
        assert!(char0_abelian_quotient_check(&sum).unwrap().pass);
    }

    #[test]
    fn char0_check_rejects_wrong_field_and_kind() {
        assert!(matches!(
            char0_abelian_quotient_check(&builtin::r2_gf2()),
            Err(Error::FieldMismatch(_, _))
        ));
        assert!(matches!(
            char0_abelian_quotient_check(&builtin::p3()),
            Err(Error::InvalidAlgebra(_, _))
        ));
    }
}
