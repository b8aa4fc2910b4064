//! Exact-arithmetic toolkit for finite-dimensional soluble Lie and Leibniz
//! algebras over Q and prime fields GF(p).
//!
//! The crate computes the classical structural invariants (derived and
//! lower central series, chief series with centralizers, the nilradical,
//! the Leib ideal) and decides membership in formation classes given by
//! predicate trees (`zero`, `abelian`, `nilpotent`, `soluble`,
//! `supersoluble`, `nilpotent-by(..)`, `loc(..)`). On top of that sit the
//! constructions relating a locally defined formation to its nilpotent
//! quotient description: split extensions, fiber products of epimorphisms,
//! subdirect-sum membership certificates, and the antisymmetrized-module
//! counterexample generator for Leibniz algebras.
//!
//! Everything is exact: rationals are arbitrary-precision fractions in
//! lowest terms and prime-field residues are reduced representatives.
//! All values are immutable after construction and all operations are
//! pure functions, so values can be shared freely across threads.
//!
//! Entry points:
//! - [`catalog`] parses and emits the line-oriented catalog format and
//!   ships the built-in algebra collection (see [`catalog::builtin`]).
//! - [`algebra::AlgebraPresentation`] carries structure constants; the
//!   [`series`] and [`formation`] modules compute invariants over it.
//! - [`batch`] runs named check suites over a catalog and renders
//!   deterministic reports; the `formations` binary exposes all of this
//!   on the command line.

pub mod algebra;
pub mod batch;
pub mod catalog;
pub mod certificate;
pub mod counterexample;
pub mod enumerate;
pub mod error;
pub mod formation;
pub mod matrix;
pub mod module;
pub mod sampling;
pub mod scalar;
pub mod series;
pub mod subspace;

pub use algebra::{fiber_product, AlgebraKind, AlgebraPresentation, FiberProduct, IdealHandle, Morphism};
pub use batch::{parse_checks, run_batch, BatchCheck, BatchReport, CheckOutcome, CheckStatus};
pub use catalog::{parse_catalog, CatalogDocument, CatalogEntry};
pub use certificate::{
    check_certificate, standard_subdirect_certificate, CertTarget, CertificateWitness,
    MembershipCertificate,
};
pub use counterexample::{generate_counterexample, Counterexample};
pub use error::{Error, Result};
pub use formation::{
    char0_abelian_quotient_check, fn_theorem_check, formation_membership, FormationSpec,
};
pub use matrix::MatrixExact;
pub use module::{section_module, DichotomyClass, ModulePresentation, SectionModule};
pub use scalar::{FieldTag, Scalar};
pub use series::{
    chief_series, derived_series, is_nilpotent, is_soluble, leib_ideal, lower_central_series,
    nilradical, ChiefSeries, SeriesRecord,
};
pub use subspace::SubspaceBasis;
