//! The non-Lie Leibniz algebra built from a Lie algebra and a left
//! module with zero right action.
//!
//! Given a soluble Lie algebra L and a left module V with L·V = V, the
//! split extension P = V ⊕ L with VL = 0 is a Leibniz algebra that is
//! not Lie, has Leib(P) = V, and has P/V isomorphic to L. Polarization
//! gives Leib(P) = L·V, which is why L·V = V is required.

use crate::algebra::{AlgebraKind, AlgebraPresentation, IdealHandle};
use crate::catalog::emit_algebra;
use crate::error::{Error, Result};
use crate::module::ModulePresentation;
use crate::series::{is_soluble, leib_ideal};
use crate::subspace::SubspaceBasis;

#[derive(Debug, Clone)]
pub struct Counterexample {
    pub algebra: AlgebraPresentation,
    /// The embedded copy of V, equal to Leib of the new algebra.
    pub module_ideal: IdealHandle,
    /// Human-readable verification results, one line each.
    pub report_lines: Vec<String>,
    /// The new algebra as a catalog stanza.
    pub entry_text: String,
}

fn rejected(msg: impl Into<String>) -> Error {
    Error::CounterexampleRejected(msg.into())
}

/// Span of L·V inside V: the column spaces of all left action matrices.
fn action_image(module: &ModulePresentation) -> Result<SubspaceBasis> {
    let field = module.algebra().field();
    let mut columns = Vec::new();
    for i in 0..module.algebra().dim() {
        let m = module.left(i);
        for c in 0..module.dim_v() {
            columns.push((0..module.dim_v()).map(|r| m.get(r, c).clone()).collect());
        }
    }
    SubspaceBasis::span(field, module.dim_v(), &columns)
}

pub fn generate_counterexample(
    base: &AlgebraPresentation,
    module: &ModulePresentation,
) -> Result<Counterexample> {
    if base.kind() != AlgebraKind::Lie {
        return Err(rejected("base algebra must be of Lie kind"));
    }
    if !is_soluble(base) {
        return Err(rejected("base algebra must be soluble"));
    }
    if !module.algebra().same_structure(base) {
        return Err(rejected("module is not defined over the base algebra"));
    }
    if module.has_right_action() {
        return Err(rejected("module must be a left module with no right action"));
    }
    let verify = module.verify();
    if !verify.is_valid() {
        return Err(rejected("module fails the left representation law"));
    }
    let image = action_image(module)?;
    if image.is_zero() {
        return Err(rejected(
            "module action is trivial: the extension would be a Lie algebra",
        ));
    }
    if !image.is_full() {
        return Err(rejected(format!(
            "L·V is a proper nonzero subspace (dim {} of {}): Leib of the extension \
             equals L·V by polarization, so it would not be the whole module",
            image.dim(),
            module.dim_v()
        )));
    }

    let extension = module.antisymmetrize()?.split_extension()?;
    let name = format!("cx_{}_{}", base.name(), module.name());
    let p = extension.algebra.with_name(name);
    let module_ideal = IdealHandle::new(&p, extension.module_ideal.space().clone())?;

    let mut report_lines = Vec::new();
    let as_leibniz = p.validate_as(AlgebraKind::Leibniz);
    report_lines.push(format!(
        "valid leibniz algebra: {}",
        if as_leibniz.is_valid() { "yes" } else { "NO" }
    ));
    if !as_leibniz.is_valid() {
        return Err(rejected("construction produced an invalid algebra"));
    }
    let as_lie = p.validate_as(AlgebraKind::Lie);
    match as_lie.violations.first() {
        Some(v) => report_lines.push(format!("fails lie validation: {v}")),
        None => return Err(rejected("construction produced a Lie algebra")),
    }
    let leib = leib_ideal(&p)?;
    let leib_is_v = leib.space() == module_ideal.space();
    report_lines.push(format!(
        "leib ideal equals the embedded module: {}",
        if leib_is_v { "yes" } else { "NO" }
    ));
    if !leib_is_v {
        return Err(rejected("Leib of the extension is not the module copy"));
    }
    let (quotient, _) = p.quotient(&module_ideal)?;
    let base_promoted = base.clone().into_leibniz_kind();
    let recovers = quotient.same_structure(&base_promoted);
    report_lines.push(format!(
        "quotient by the module recovers the base constants: {}",
        if recovers { "yes" } else { "NO" }
    ));
    if !recovers {
        return Err(rejected("quotient does not match the base presentation"));
    }

    let entry_text = emit_algebra(&p);
    Ok(Counterexample {
        algebra: p,
        module_ideal,
        report_lines,
        entry_text,
    })
}
