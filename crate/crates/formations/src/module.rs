//! Modules and bimodules over algebra presentations.
//!
//! A left action is a matrix per algebra basis element; an optional right
//! action turns the module into a Leibniz bimodule. A missing right action
//! encodes VL = 0, the antisymmetric case, so it is normalized away when
//! given explicitly as zero.

use std::fmt;

use crate::algebra::{unit_vector, AlgebraKind, AlgebraPresentation, IdealHandle};
use crate::enumerate::nonzero_vectors;
use crate::error::{Error, Result};
use crate::matrix::MatrixExact;
use crate::scalar::{FieldTag, Scalar};
use crate::subspace::SubspaceBasis;

/// How many spins the exhaustive minimality search may perform before
/// falling back to recursive basis spinning.
const EXHAUSTIVE_GENERATOR_LIMIT: u128 = 1 << 17;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModulePresentation {
    name: String,
    algebra: AlgebraPresentation,
    dim_v: usize,
    left_action: Vec<MatrixExact>,
    right_action: Option<Vec<MatrixExact>>,
}

impl ModulePresentation {
    /// Wraps action matrices after shape checks. A right action that is
    /// identically zero is normalized to `None`.
    pub fn new(
        name: impl Into<String>,
        algebra: AlgebraPresentation,
        dim_v: usize,
        left_action: Vec<MatrixExact>,
        right_action: Option<Vec<MatrixExact>>,
    ) -> Result<Self> {
        let name = name.into();
        let check_shape = |mats: &[MatrixExact], side: &str| -> Result<()> {
            if mats.len() != algebra.dim() {
                return Err(Error::DimensionMismatch(format!(
                    "{side} action of `{name}` has {} matrices for a {}-dimensional algebra",
                    mats.len(),
                    algebra.dim()
                )));
            }
            for m in mats {
                if m.rows() != dim_v || m.cols() != dim_v {
                    return Err(Error::DimensionMismatch(format!(
                        "{side} action matrix of `{name}` is {}x{}, expected {dim_v}x{dim_v}",
                        m.rows(),
                        m.cols()
                    )));
                }
                if m.field() != algebra.field() {
                    return Err(Error::FieldMismatch(
                        algebra.field().to_string(),
                        m.field().to_string(),
                    ));
                }
            }
            Ok(())
        };
        check_shape(&left_action, "left")?;
        let right_action = match right_action {
            Some(mats) => {
                check_shape(&mats, "right")?;
                if mats.iter().all(MatrixExact::is_zero) {
                    None
                } else {
                    Some(mats)
                }
            }
            None => None,
        };
        Ok(ModulePresentation {
            name,
            algebra,
            dim_v,
            left_action,
            right_action,
        })
    }

    /// The module with all actions zero.
    pub fn trivial(algebra: AlgebraPresentation, dim_v: usize) -> Self {
        let zero = MatrixExact::zero(algebra.field(), dim_v, dim_v);
        let left = vec![zero; algebra.dim()];
        ModulePresentation {
            name: format!("trivial{dim_v}"),
            algebra,
            dim_v,
            left_action: left,
            right_action: None,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn algebra(&self) -> &AlgebraPresentation {
        &self.algebra
    }

    pub fn field(&self) -> FieldTag {
        self.algebra.field()
    }

    pub fn dim_v(&self) -> usize {
        self.dim_v
    }

    pub fn left(&self, i: usize) -> &MatrixExact {
        &self.left_action[i]
    }

    pub fn right(&self, i: usize) -> Option<&MatrixExact> {
        self.right_action.as_ref().map(|r| &r[i])
    }

    pub fn has_right_action(&self) -> bool {
        self.right_action.is_some()
    }

    /// Matrix of v -> x·v for x given in algebra coordinates.
    pub fn left_of_vector(&self, x: &[Scalar]) -> MatrixExact {
        self.combine(x, &self.left_action)
    }

    /// Matrix of v -> v·x; zero when the right action is absent.
    pub fn right_of_vector(&self, x: &[Scalar]) -> MatrixExact {
        match &self.right_action {
            Some(mats) => self.combine(x, mats),
            None => MatrixExact::zero(self.field(), self.dim_v, self.dim_v),
        }
    }

    fn combine(&self, x: &[Scalar], mats: &[MatrixExact]) -> MatrixExact {
        assert_eq!(x.len(), self.algebra.dim(), "algebra coordinate length");
        let mut out = MatrixExact::zero(self.field(), self.dim_v, self.dim_v);
        for (i, c) in x.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            out = out.add(&mats[i].scale(c)).expect("uniform shapes");
        }
        out
    }

    /// Checks the representation law and, when a right action is present,
    /// the two bimodule compatibility laws, on all basis pairs.
    pub fn verify(&self) -> ModuleValidationReport {
        let n = self.algebra.dim();
        let mut violations = Vec::new();
        let left_of = |v: &[Scalar]| self.left_of_vector(v);
        for i in 0..n {
            for j in 0..n {
                let lhs = left_of(&self.algebra.basis_product(i, j));
                let li_lj = self.left_action[i]
                    .mul(&self.left_action[j])
                    .expect("square");
                let lj_li = self.left_action[j]
                    .mul(&self.left_action[i])
                    .expect("square");
                let rhs = li_lj.sub(&lj_li).expect("square");
                let diff = lhs.sub(&rhs).expect("square");
                if !diff.is_zero() {
                    violations.push(ModuleLawViolation {
                        law: ModuleLaw::LeftRepresentation,
                        i,
                        j,
                        discrepancy: diff,
                    });
                }
            }
        }
        if let Some(right) = &self.right_action {
            let right_of = |v: &[Scalar]| self.combine(v, right);
            for a in 0..n {
                for (c, rc) in right.iter().enumerate() {
                    // L(a) R(c) = R(c) L(a) + R(a·c)
                    let lhs = self.left_action[a].mul(rc).expect("square");
                    let rhs = rc
                        .mul(&self.left_action[a])
                        .expect("square")
                        .add(&right_of(&self.algebra.basis_product(a, c)))
                        .expect("square");
                    let diff = lhs.sub(&rhs).expect("square");
                    if !diff.is_zero() {
                        violations.push(ModuleLawViolation {
                            law: ModuleLaw::MixedCompatibility,
                            i: a,
                            j: c,
                            discrepancy: diff,
                        });
                    }
                }
            }
            for b in 0..n {
                for c in 0..n {
                    // R(b·c) = R(c) R(b) + L(b) R(c)
                    let lhs = right_of(&self.algebra.basis_product(b, c));
                    let rhs = right[c]
                        .mul(&right[b])
                        .expect("square")
                        .add(&self.left_action[b].mul(&right[c]).expect("square"))
                        .expect("square");
                    let diff = lhs.sub(&rhs).expect("square");
                    if !diff.is_zero() {
                        violations.push(ModuleLawViolation {
                            law: ModuleLaw::RightCompatibility,
                            i: b,
                            j: c,
                            discrepancy: diff,
                        });
                    }
                }
            }
        }
        ModuleValidationReport {
            module: self.name.clone(),
            violations,
        }
    }

    fn check_vector(&self, v: &[Scalar]) -> Result<()> {
        if v.len() != self.dim_v {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} in module `{}` of dimension {}",
                v.len(),
                self.name,
                self.dim_v
            )));
        }
        Ok(())
    }

    /// Smallest action-closed subspace containing the seeds.
    pub fn spin_space(&self, seeds: &[Vec<Scalar>]) -> Result<SubspaceBasis> {
        for s in seeds {
            self.check_vector(s)?;
        }
        let mut space = SubspaceBasis::span(self.field(), self.dim_v, seeds)?;
        loop {
            let mut vectors = space.basis_rows();
            let before = space.dim();
            for row in space.basis_rows() {
                for i in 0..self.algebra.dim() {
                    vectors.push(self.left_action[i].apply(&row)?);
                    if let Some(right) = &self.right_action {
                        vectors.push(right[i].apply(&row)?);
                    }
                }
            }
            space = SubspaceBasis::span(self.field(), self.dim_v, &vectors)?;
            if space.dim() == before {
                return Ok(space);
            }
        }
    }

    /// Smallest submodule containing `v`.
    pub fn spin(&self, v: &[Scalar]) -> Result<SubmoduleBasis> {
        let space = self.spin_space(&[v.to_vec()])?;
        SubmoduleBasis::new(self.clone(), space)
    }

    /// A minimal nonzero submodule.
    ///
    /// Over GF(p) with a feasible generator count every 1-dimensional
    /// generator is spun, so the result is certified minimal and the
    /// lexicographically first generator of minimal spin wins. Over Q (or
    /// out-of-range p) basis vectors of the current candidate are spun
    /// recursively until none produces a proper nonzero submodule.
    pub fn minimal_submodule(&self) -> Result<SubmoduleBasis> {
        if self.dim_v == 0 {
            return Err(Error::ZeroModule);
        }
        if let FieldTag::GF(p) = self.field() {
            let count = (p as u128).saturating_pow(self.dim_v as u32);
            if count <= EXHAUSTIVE_GENERATOR_LIMIT {
                let mut best: Option<SubspaceBasis> = None;
                for v in nonzero_vectors(p, self.dim_v) {
                    let spun = self.spin_space(&[v])?;
                    if best.as_ref().is_none_or(|b| spun.dim() < b.dim()) {
                        best = Some(spun);
                    }
                }
                return SubmoduleBasis::new(self.clone(), best.expect("dim_v >= 1"));
            }
        }
        let mut current = SubspaceBasis::full(self.field(), self.dim_v);
        'descend: loop {
            let mut smallest: Option<SubspaceBasis> = None;
            for row in current.basis_rows() {
                let spun = self.spin_space(&[row])?;
                if spun.dim() < current.dim()
                    && smallest.as_ref().is_none_or(|s| spun.dim() < s.dim())
                {
                    smallest = Some(spun);
                }
            }
            match smallest {
                Some(s) => {
                    current = s;
                    continue 'descend;
                }
                None => return SubmoduleBasis::new(self.clone(), current),
            }
        }
    }

    pub fn is_irreducible(&self) -> Result<bool> {
        Ok(self.minimal_submodule()?.space().is_full())
    }

    /// {x in L : x·V = 0 and V·x = 0}; an ideal for valid modules.
    pub fn representation_kernel(&self) -> Result<IdealHandle> {
        let n = self.algebra.dim();
        let field = self.field();
        let block = self.dim_v * self.dim_v;
        let sides = if self.right_action.is_some() { 2 } else { 1 };
        let mut conditions = MatrixExact::zero(field, sides * block, n);
        for i in 0..n {
            for r in 0..self.dim_v {
                for c in 0..self.dim_v {
                    conditions.set(r * self.dim_v + c, i, self.left_action[i].get(r, c).clone());
                    if let Some(right) = &self.right_action {
                        conditions.set(
                            block + r * self.dim_v + c,
                            i,
                            right[i].get(r, c).clone(),
                        );
                    }
                }
            }
        }
        let kernel = crate::subspace::kernel(&conditions);
        IdealHandle::new(&self.algebra, kernel)
    }

    pub fn is_faithful(&self) -> Result<bool> {
        Ok(self.representation_kernel()?.dim() == 0)
    }

    /// Loday–Pirashvili type of an irreducible bimodule. `Neither` is
    /// only reachable through invalid input and is surfaced for tests.
    pub fn classify_dichotomy(&self) -> Result<DichotomyClass> {
        let report = self.verify();
        if !report.is_valid() {
            return Err(Error::InvalidModule(self.name.clone(), report.summary()));
        }
        let minimal = self.minimal_submodule()?;
        if !minimal.space().is_full() {
            return Err(Error::NotIrreducible(minimal.space().dim()));
        }
        Ok(self.raw_dichotomy())
    }

    /// The classification rule alone, without the irreducibility
    /// precondition; used to exhibit what reducible inputs would do.
    pub fn raw_dichotomy(&self) -> DichotomyClass {
        match &self.right_action {
            None => DichotomyClass::Antisymmetric,
            Some(right) => {
                let symmetric = right
                    .iter()
                    .zip(&self.left_action)
                    .all(|(r, l)| *r == l.neg());
                if symmetric {
                    DichotomyClass::Symmetric
                } else {
                    DichotomyClass::Neither
                }
            }
        }
    }

    /// Bimodule with VL = 0 on the same left action.
    pub fn antisymmetrize(&self) -> Result<ModulePresentation> {
        if self.right_action.is_some() {
            return Err(Error::RightActionPresent);
        }
        let report = self.verify();
        if !report.is_valid() {
            return Err(Error::InvalidModule(self.name.clone(), report.summary()));
        }
        Ok(self.clone())
    }

    /// Bimodule with vx = −xv on the same left action.
    pub fn symmetrize(&self) -> Result<ModulePresentation> {
        if self.right_action.is_some() {
            return Err(Error::RightActionPresent);
        }
        let report = self.verify();
        if !report.is_valid() {
            return Err(Error::InvalidModule(self.name.clone(), report.summary()));
        }
        let right: Vec<MatrixExact> = self.left_action.iter().map(MatrixExact::neg).collect();
        ModulePresentation::new(
            self.name.clone(),
            self.algebra.clone(),
            self.dim_v,
            self.left_action.clone(),
            Some(right),
        )
    }

    /// Split extension on V ⊕ L: (v1+x1)(v2+x2) = (x1·v2 + v1·x2) + x1x2.
    /// The result is Lie exactly when the base is Lie and the bimodule is
    /// symmetric (including trivially, with both actions zero).
    pub fn split_extension(&self) -> Result<SplitExtension> {
        let report = self.verify();
        if !report.is_valid() {
            return Err(Error::InvalidModule(self.name.clone(), report.summary()));
        }
        let base = &self.algebra;
        let field = self.field();
        let n = base.dim();
        let total = self.dim_v + n;
        let symmetric = (0..n).all(|i| {
            let r = match &self.right_action {
                Some(right) => right[i].clone(),
                None => MatrixExact::zero(field, self.dim_v, self.dim_v),
            };
            r == self.left_action[i].neg()
        });
        let kind = if base.kind() == AlgebraKind::Lie && symmetric {
            AlgebraKind::Lie
        } else {
            AlgebraKind::Leibniz
        };
        let mut terms: Vec<(usize, usize, usize, Scalar)> = Vec::new();
        for (i, j, k, c) in base.bracket_terms() {
            terms.push((self.dim_v + i, self.dim_v + j, self.dim_v + k, c));
        }
        for i in 0..n {
            for v in 0..self.dim_v {
                for r in 0..self.dim_v {
                    let c = self.left_action[i].get(r, v);
                    if !c.is_zero() {
                        terms.push((self.dim_v + i, v, r, c.clone()));
                    }
                    if let Some(right) = &self.right_action {
                        let c = right[i].get(r, v);
                        if !c.is_zero() {
                            terms.push((v, self.dim_v + i, r, c.clone()));
                        }
                    }
                }
            }
        }
        let algebra = AlgebraPresentation::new(
            format!("split({},{})", base.name(), self.name),
            field,
            kind,
            total,
            terms,
        )?;
        let validation = algebra.validate();
        if !validation.is_valid() {
            return Err(Error::InvalidAlgebra(
                algebra.name().to_string(),
                validation.summary(),
            ));
        }
        let module_rows: Vec<Vec<Scalar>> = (0..self.dim_v)
            .map(|i| unit_vector(field, total, i))
            .collect();
        let module_space = SubspaceBasis::span(field, total, &module_rows)?;
        let module_ideal = IdealHandle::new(&algebra, module_space)?;
        Ok(SplitExtension {
            algebra,
            module_ideal,
        })
    }

    /// Module structure on an action-invariant subspace, in the
    /// coordinates of its echelon basis.
    pub fn restrict_to(&self, space: &SubspaceBasis) -> Result<ModulePresentation> {
        if space.ambient_dim() != self.dim_v || space.field() != self.field() {
            return Err(Error::DimensionMismatch(
                "restriction subspace has the wrong ambient space".into(),
            ));
        }
        let rows = space.basis_rows();
        let sub_dim = space.dim();
        let restrict_side = |mats: &[MatrixExact]| -> Result<Vec<MatrixExact>> {
            let mut out = Vec::with_capacity(mats.len());
            for m in mats {
                let mut small = MatrixExact::zero(self.field(), sub_dim, sub_dim);
                for (c, row) in rows.iter().enumerate() {
                    let image = m.apply(row)?;
                    let coords = space.solve(&image)?.ok_or(Error::NotASubmodule)?;
                    for (r, coeff) in coords.into_iter().enumerate() {
                        small.set(r, c, coeff);
                    }
                }
                out.push(small);
            }
            Ok(out)
        };
        let left = restrict_side(&self.left_action)?;
        let right = match &self.right_action {
            Some(mats) => Some(restrict_side(mats)?),
            None => None,
        };
        ModulePresentation::new(
            format!("{}|{}", self.name, sub_dim),
            self.algebra.clone(),
            sub_dim,
            left,
            right,
        )
    }

    /// Direct sum with another module over the same algebra.
    pub fn direct_sum(&self, other: &ModulePresentation) -> Result<ModulePresentation> {
        if !self.algebra.same_structure(&other.algebra) {
            return Err(Error::DimensionMismatch(
                "direct sum of modules over different algebras".into(),
            ));
        }
        let field = self.field();
        let total = self.dim_v + other.dim_v;
        let embed = |a: &MatrixExact, b: &MatrixExact| {
            let mut m = MatrixExact::zero(field, total, total);
            for r in 0..self.dim_v {
                for c in 0..self.dim_v {
                    m.set(r, c, a.get(r, c).clone());
                }
            }
            for r in 0..other.dim_v {
                for c in 0..other.dim_v {
                    m.set(self.dim_v + r, self.dim_v + c, b.get(r, c).clone());
                }
            }
            m
        };
        let left: Vec<MatrixExact> = (0..self.algebra.dim())
            .map(|i| embed(&self.left_action[i], &other.left_action[i]))
            .collect();
        let zero = MatrixExact::zero(field, self.dim_v, self.dim_v);
        let zero_other = MatrixExact::zero(field, other.dim_v, other.dim_v);
        let right = if self.right_action.is_some() || other.right_action.is_some() {
            Some(
                (0..self.algebra.dim())
                    .map(|i| {
                        let a = self.right(i).unwrap_or(&zero);
                        let b = other.right(i).unwrap_or(&zero_other);
                        embed(a, b)
                    })
                    .collect(),
            )
        } else {
            None
        };
        ModulePresentation::new(
            format!("{}(+){}", self.name, other.name),
            self.algebra.clone(),
            total,
            left,
            right,
        )
    }
}

/// An action-closed subspace of a module.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubmoduleBasis {
    module: ModulePresentation,
    space: SubspaceBasis,
}

impl SubmoduleBasis {
    pub fn new(module: ModulePresentation, space: SubspaceBasis) -> Result<Self> {
        for row in space.basis_rows() {
            for i in 0..module.algebra.dim() {
                if !space.contains(&module.left_action[i].apply(&row)?)? {
                    return Err(Error::NotASubmodule);
                }
                if let Some(right) = &module.right_action {
                    if !space.contains(&right[i].apply(&row)?)? {
                        return Err(Error::NotASubmodule);
                    }
                }
            }
        }
        Ok(SubmoduleBasis { module, space })
    }

    pub fn module(&self) -> &ModulePresentation {
        &self.module
    }

    pub fn space(&self) -> &SubspaceBasis {
        &self.space
    }

    pub fn into_space(self) -> SubspaceBasis {
        self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DichotomyClass {
    Symmetric,
    Antisymmetric,
    Neither,
}

impl fmt::Display for DichotomyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DichotomyClass::Symmetric => write!(f, "symmetric"),
            DichotomyClass::Antisymmetric => write!(f, "antisymmetric"),
            DichotomyClass::Neither => write!(f, "neither"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModuleLaw {
    /// L(ab) = L(a)L(b) − L(b)L(a)
    LeftRepresentation,
    /// L(a)R(c) = R(c)L(a) + R(ac)
    MixedCompatibility,
    /// R(bc) = R(c)R(b) + L(b)R(c)
    RightCompatibility,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleLawViolation {
    pub law: ModuleLaw,
    pub i: usize,
    pub j: usize,
    pub discrepancy: MatrixExact,
}

impl fmt::Display for ModuleLawViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let law = match self.law {
            ModuleLaw::LeftRepresentation => "left representation law",
            ModuleLaw::MixedCompatibility => "mixed compatibility law",
            ModuleLaw::RightCompatibility => "right compatibility law",
        };
        write!(f, "{} fails at basis pair (e{}, e{})", law, self.i + 1, self.j + 1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleValidationReport {
    pub module: String,
    pub violations: Vec<ModuleLawViolation>,
}

impl ModuleValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn summary(&self) -> String {
        if self.is_valid() {
            "valid module".to_string()
        } else {
            format!(
                "{} law violation(s); first: {}",
                self.violations.len(),
                self.violations[0]
            )
        }
    }
}

/// A split extension together with a handle on the embedded module ideal.
#[derive(Debug, Clone)]
pub struct SplitExtension {
    pub algebra: AlgebraPresentation,
    pub module_ideal: IdealHandle,
}

/// The action of `l` on the section H/K, in the coordinates of an echelon
/// basis of representatives, plus the data needed to lift submodules back
/// into the ambient algebra.
#[derive(Debug, Clone)]
pub struct SectionModule {
    pub module: ModulePresentation,
    /// Echelon basis of section representatives inside the ambient space.
    pub section: SubspaceBasis,
    /// The ideal K that was quotiented away.
    pub below: SubspaceBasis,
}

impl SectionModule {
    /// Ambient subspace K + lift(S) for a submodule S in section
    /// coordinates.
    pub fn pull_back(&self, sub: &SubspaceBasis) -> Result<SubspaceBasis> {
        if sub.ambient_dim() != self.module.dim_v() {
            return Err(Error::DimensionMismatch(
                "submodule not in section coordinates".into(),
            ));
        }
        let mut rows = self.below.basis_rows();
        for coords in sub.basis_rows() {
            rows.push(self.section.lift(&coords));
        }
        SubspaceBasis::span(
            self.below.field(),
            self.below.ambient_dim(),
            &rows,
        )
    }
}

/// Builds the L-module H/K for ideals K ⊆ H of `l`.
pub fn section_module(
    l: &AlgebraPresentation,
    h: &SubspaceBasis,
    k: &SubspaceBasis,
) -> Result<SectionModule> {
    if !k.is_subspace_of(h)? {
        return Err(Error::NotInvariantSection("K is not contained in H".into()));
    }
    if !l.is_ideal(h)? {
        return Err(Error::NotInvariantSection("H is not L-invariant".into()));
    }
    if !l.is_ideal(k)? {
        return Err(Error::NotInvariantSection("K is not L-invariant".into()));
    }
    let field = l.field();
    let reduced: Vec<Vec<Scalar>> = h
        .basis_rows()
        .iter()
        .map(|r| k.reduce_mod(r))
        .collect();
    let section = SubspaceBasis::span(field, l.dim(), &reduced)?;
    let dim_v = section.dim();
    let rows = section.basis_rows();
    let mut left = Vec::with_capacity(l.dim());
    let mut right = Vec::with_capacity(l.dim());
    for i in 0..l.dim() {
        let ei = unit_vector(field, l.dim(), i);
        let mut lm = MatrixExact::zero(field, dim_v, dim_v);
        let mut rm = MatrixExact::zero(field, dim_v, dim_v);
        for (c, row) in rows.iter().enumerate() {
            let lv = k.reduce_mod(&l.product_vectors(&ei, row));
            let rv = k.reduce_mod(&l.product_vectors(row, &ei));
            let lc = section
                .solve(&lv)?
                .ok_or_else(|| Error::NotInvariantSection("section is not action-closed".into()))?;
            let rc = section
                .solve(&rv)?
                .ok_or_else(|| Error::NotInvariantSection("section is not action-closed".into()))?;
            for (r, coeff) in lc.into_iter().enumerate() {
                lm.set(r, c, coeff);
            }
            for (r, coeff) in rc.into_iter().enumerate() {
                rm.set(r, c, coeff);
            }
        }
        left.push(lm);
        right.push(rm);
    }
    let module = ModulePresentation::new(
        format!("{}-section{}", l.name(), dim_v),
        l.clone(),
        dim_v,
        left,
        Some(right),
    )?;
    Ok(SectionModule {
        module,
        section,
        below: k.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::builtin;

    fn w_module() -> ModulePresentation {
        builtin::module("w")
    }

    fn lambda_module() -> ModulePresentation {
        builtin::module("lambda")
    }

    #[test]
    fn trivial_module_is_valid() {
        let m = ModulePresentation::trivial(builtin::sl2(), 3);
        assert!(m.verify().is_valid());
        assert!(!m.has_right_action());
    }

    #[test]
    fn w_is_a_valid_left_module() {
        assert!(w_module().verify().is_valid());
    }

    #[test]
    fn identity_in_place_of_swap_breaks_the_representation_law() {
        let r2 = builtin::r2_gf2();
        let field = FieldTag::GF(2);
        let d = MatrixExact::from_integers(field, &[&[0, 0], &[0, 1]]);
        let id = MatrixExact::identity(field, 2);
        let bad = ModulePresentation::new("bad", r2, 2, vec![d, id], None).unwrap();
        let report = bad.verify();
        assert!(!report.is_valid());
        assert!(report
            .violations
            .iter()
            .any(|v| v.law == ModuleLaw::LeftRepresentation && v.i == 0 && v.j == 1));
    }

    #[test]
    fn spinning_zero_gives_the_zero_submodule() {
        let m = w_module();
        let z = vec![Scalar::zero(FieldTag::GF(2)); 2];
        assert!(m.spin(&z).unwrap().space().is_zero());
    }

    #[test]
    fn spinning_w0_fills_w() {
        let m = w_module();
        let w0 = unit_vector(FieldTag::GF(2), 2, 0);
        assert!(m.spin(&w0).unwrap().space().is_full());
    }

    #[test]
    fn w_is_irreducible_and_faithful() {
        let m = w_module();
        assert!(m.is_irreducible().unwrap());
        assert!(m.is_faithful().unwrap());
    }

    #[test]
    fn direct_sum_with_trivial_line_has_a_minimal_line() {
        let m = w_module();
        let t = ModulePresentation::trivial(m.algebra().clone(), 1);
        let sum = m.direct_sum(&t).unwrap();
        let minimal = sum.minimal_submodule().unwrap();
        assert_eq!(minimal.dim(), 1);
        assert!(!sum.is_irreducible().unwrap());
    }

    #[test]
    fn regular_h3_module_has_minimal_submodule_spanned_by_the_center() {
        let h3 = builtin::h3();
        let left: Vec<MatrixExact> = (0..3).map(|i| h3.left_mult_matrix(i)).collect();
        let m = ModulePresentation::new("h3-regular", h3, 3, left, None).unwrap();
        assert!(m.verify().is_valid());
        let minimal = m.minimal_submodule().unwrap();
        assert_eq!(minimal.dim(), 1);
        assert!(minimal
            .space()
            .contains(&unit_vector(FieldTag::Q, 3, 2))
            .unwrap());
    }

    #[test]
    fn representation_kernels_match_direct_solves() {
        let lambda = lambda_module();
        let kernel = lambda.representation_kernel().unwrap();
        assert_eq!(kernel.dim(), 1);
        assert!(kernel
            .space()
            .contains(&unit_vector(FieldTag::Q, 2, 1))
            .unwrap());

        let trivial = ModulePresentation::trivial(builtin::r2(), 2);
        assert_eq!(trivial.representation_kernel().unwrap().dim(), 2);
    }

    #[test]
    fn dichotomy_classification() {
        let anti = lambda_module().antisymmetrize().unwrap();
        assert_eq!(anti.classify_dichotomy().unwrap(), DichotomyClass::Antisymmetric);

        let sym = w_module().symmetrize().unwrap();
        assert_eq!(sym.classify_dichotomy().unwrap(), DichotomyClass::Symmetric);

        let reducible = w_module().direct_sum(&w_module()).unwrap();
        assert!(matches!(
            reducible.classify_dichotomy(),
            Err(Error::NotIrreducible(_))
        ));
    }

    #[test]
    fn antisymmetrize_rejects_bimodules() {
        let sym = w_module().symmetrize().unwrap();
        assert!(matches!(sym.antisymmetrize(), Err(Error::RightActionPresent)));
    }

    #[test]
    fn symmetric_split_extension_of_w_is_e4() {
        let ext = w_module().symmetrize().unwrap().split_extension().unwrap();
        assert_eq!(ext.algebra.kind(), AlgebraKind::Lie);
        assert!(ext.algebra.same_structure(&builtin::e4_gf2()));
        assert_eq!(ext.module_ideal.dim(), 2);
    }

    #[test]
    fn antisymmetric_split_extension_of_lambda_is_p3() {
        let ext = lambda_module()
            .antisymmetrize()
            .unwrap()
            .split_extension()
            .unwrap();
        assert_eq!(ext.algebra.kind(), AlgebraKind::Leibniz);
        assert!(ext.algebra.same_structure(&builtin::p3()));
        assert!(!ext.algebra.validate_as(AlgebraKind::Lie).is_valid());
    }

    #[test]
    fn antisymmetric_split_extension_of_w_is_p4() {
        let ext = w_module()
            .antisymmetrize()
            .unwrap()
            .split_extension()
            .unwrap();
        assert!(ext.algebra.same_structure(&builtin::p4_gf2()));
    }

    #[test]
    fn quotient_of_split_extension_recovers_the_base() {
        let ext = w_module().symmetrize().unwrap().split_extension().unwrap();
        let (q, _) = ext.algebra.quotient(&ext.module_ideal).unwrap();
        assert!(q.same_structure(&builtin::r2_gf2().with_name(q.name().to_string())));

        let ext = w_module().antisymmetrize().unwrap().split_extension().unwrap();
        let (q, _) = ext.algebra.quotient(&ext.module_ideal).unwrap();
        let base_as_leibniz = builtin::r2_gf2()
            .into_leibniz_kind()
            .with_name(q.name().to_string());
        assert!(q.same_structure(&base_as_leibniz));
    }

    #[test]
    fn section_module_of_the_embedded_ideal_recovers_the_actions() {
        let e4 = builtin::e4_gf2();
        let field = FieldTag::GF(2);
        let w = SubspaceBasis::span(
            field,
            4,
            &[unit_vector(field, 4, 0), unit_vector(field, 4, 1)],
        )
        .unwrap();
        let section = section_module(&e4, &w, &SubspaceBasis::zero(field, 4)).unwrap();
        assert_eq!(section.module.dim_v(), 2);
        let d = MatrixExact::from_integers(field, &[&[0, 0], &[0, 1]]);
        let s = MatrixExact::from_integers(field, &[&[0, 1], &[1, 0]]);
        assert_eq!(*section.module.left(2), d);
        assert_eq!(*section.module.left(3), s);
        assert_eq!(section.module.right(2).unwrap(), &d);
        assert!(section.module.verify().is_valid());
    }

    #[test]
    fn section_pull_back_extends_k_by_lifts() {
        let e4 = builtin::e4_gf2();
        let field = FieldTag::GF(2);
        let w = SubspaceBasis::span(
            field,
            4,
            &[unit_vector(field, 4, 0), unit_vector(field, 4, 1)],
        )
        .unwrap();
        let full = e4.full_space();
        let section = section_module(&e4, &full, &w).unwrap();
        let sub = SubspaceBasis::span(
            field,
            2,
            &[vec![Scalar::zero(field), Scalar::one(field)]],
        )
        .unwrap();
        let lifted = section.pull_back(&sub).unwrap();
        assert_eq!(lifted.dim(), 3);
        assert!(w.is_subspace_of(&lifted).unwrap());
    }

    #[test]
    fn exhaustive_enumeration_agrees_with_is_irreducible() {
        use crate::enumerate::all_subspaces;
        for module in [w_module(), w_module().direct_sum(&w_module()).unwrap()] {
            let mut proper_nonzero = false;
            for space in all_subspaces(2, module.dim_v()) {
                if space.is_zero() || space.is_full() {
                    continue;
                }
                if SubmoduleBasis::new(module.clone(), space).is_ok() {
                    proper_nonzero = true;
                }
            }
            assert_eq!(module.is_irreducible().unwrap(), !proper_nonzero);
        }
    }
}
