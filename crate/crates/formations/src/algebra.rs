//! Structure-constant presentations of Lie and Leibniz algebras.
//!
//! A presentation fixes a basis e_1..e_n and a sparse product table
//! e_i e_j = sum_k c_ijk e_k. Lie algebras are stored with the full table
//! (both (i,j) and (j,i)); validation enforces anticommutativity instead
//! of assuming it, so one code path serves both kinds.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::matrix::MatrixExact;
use crate::scalar::{FieldTag, Scalar};
use crate::subspace::{kernel, rref, SubspaceBasis};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AlgebraKind {
    Lie,
    Leibniz,
}

impl fmt::Display for AlgebraKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraKind::Lie => write!(f, "lie"),
            AlgebraKind::Leibniz => write!(f, "leibniz"),
        }
    }
}

/// A finite-dimensional algebra given by structure constants.
///
/// Indices are 0-based internally; the catalog format and all reports use
/// 1-based basis labels e1..en.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraPresentation {
    name: String,
    field: FieldTag,
    kind: AlgebraKind,
    dim: usize,
    // (i, j) -> {k -> c_ijk}, zero coefficients absent
    brackets: BTreeMap<(usize, usize), BTreeMap<usize, Scalar>>,
}

impl AlgebraPresentation {
    /// Builds a presentation from sparse bracket terms `(i, j, k, c)`
    /// meaning `e_i e_j += c e_k`. Zero coefficients are dropped; indices
    /// must lie below `dim` and coefficients in `field`.
    pub fn new(
        name: impl Into<String>,
        field: FieldTag,
        kind: AlgebraKind,
        dim: usize,
        terms: Vec<(usize, usize, usize, Scalar)>,
    ) -> Result<Self> {
        field.validate()?;
        let name = name.into();
        let mut brackets: BTreeMap<(usize, usize), BTreeMap<usize, Scalar>> = BTreeMap::new();
        for (i, j, k, c) in terms {
            if i >= dim || j >= dim || k >= dim {
                return Err(Error::DimensionMismatch(format!(
                    "bracket index ({},{},{}) outside dimension {dim} in `{name}`",
                    i + 1,
                    j + 1,
                    k + 1
                )));
            }
            if c.field() != field {
                return Err(Error::FieldMismatch(field.to_string(), c.field().to_string()));
            }
            if c.is_zero() {
                continue;
            }
            let slot = brackets.entry((i, j)).or_default();
            let entry = match slot.remove(&k) {
                Some(prev) => prev.add(&c),
                None => c,
            };
            if entry.is_zero() {
                slot.remove(&k);
            } else {
                slot.insert(k, entry);
            }
        }
        brackets.retain(|_, terms| !terms.is_empty());
        Ok(AlgebraPresentation {
            name,
            field,
            kind,
            dim,
            brackets,
        })
    }

    /// Convenience constructor with 1-based indices and integer coefficients.
    pub fn from_integer_table(
        name: impl Into<String>,
        field: FieldTag,
        kind: AlgebraKind,
        dim: usize,
        table: &[(usize, usize, usize, i64)],
    ) -> Result<Self> {
        let terms = table
            .iter()
            .map(|&(i, j, k, c)| (i - 1, j - 1, k - 1, Scalar::from_integer(field, c)))
            .collect();
        AlgebraPresentation::new(name, field, kind, dim, terms)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn field(&self) -> FieldTag {
        self.field
    }

    pub fn kind(&self) -> AlgebraKind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// Same field, kind, dimension and product table; the name may differ.
    pub fn same_structure(&self, other: &AlgebraPresentation) -> bool {
        self.field == other.field
            && self.kind == other.kind
            && self.dim == other.dim
            && self.brackets == other.brackets
    }

    /// Re-tags a Lie presentation as Leibniz. Every Lie algebra satisfies
    /// the left Leibniz identity, so validity is preserved.
    pub fn into_leibniz_kind(mut self) -> Self {
        self.kind = AlgebraKind::Leibniz;
        self
    }

    /// Sparse bracket terms in lexicographic (i, j, k) order, 0-based.
    pub fn bracket_terms(&self) -> Vec<(usize, usize, usize, Scalar)> {
        let mut out = Vec::new();
        for (&(i, j), terms) in &self.brackets {
            for (&k, c) in terms {
                out.push((i, j, k, c.clone()));
            }
        }
        out
    }

    /// The product e_i e_j as a dense coordinate vector.
    pub fn basis_product(&self, i: usize, j: usize) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(self.field); self.dim];
        if let Some(terms) = self.brackets.get(&(i, j)) {
            for (&k, c) in terms {
                out[k] = c.clone();
            }
        }
        out
    }

    /// Bilinear extension of the product table.
    pub fn product_vectors(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(x.len(), self.dim, "left factor length");
        assert_eq!(y.len(), self.dim, "right factor length");
        let mut out = vec![Scalar::zero(self.field); self.dim];
        for (&(i, j), terms) in &self.brackets {
            let coeff = x[i].mul(&y[j]);
            if coeff.is_zero() {
                continue;
            }
            for (&k, c) in terms {
                out[k] = out[k].add(&coeff.mul(c));
            }
        }
        out
    }

    /// Matrix of left multiplication v -> e_i v.
    pub fn left_mult_matrix(&self, i: usize) -> MatrixExact {
        let mut m = MatrixExact::zero(self.field, self.dim, self.dim);
        for j in 0..self.dim {
            if let Some(terms) = self.brackets.get(&(i, j)) {
                for (&k, c) in terms {
                    m.set(k, j, c.clone());
                }
            }
        }
        m
    }

    /// Matrix of right multiplication v -> v e_i.
    pub fn right_mult_matrix(&self, i: usize) -> MatrixExact {
        let mut m = MatrixExact::zero(self.field, self.dim, self.dim);
        for j in 0..self.dim {
            if let Some(terms) = self.brackets.get(&(j, i)) {
                for (&k, c) in terms {
                    m.set(k, j, c.clone());
                }
            }
        }
        m
    }

    pub fn zero_space(&self) -> SubspaceBasis {
        SubspaceBasis::zero(self.field, self.dim)
    }

    pub fn full_space(&self) -> SubspaceBasis {
        SubspaceBasis::full(self.field, self.dim)
    }

    /// Validates the identities of the declared kind.
    pub fn validate(&self) -> ValidationReport {
        self.validate_as(self.kind)
    }

    /// Validates against the identities of an arbitrary kind; used to show
    /// a Leibniz presentation fails the Lie axioms.
    pub fn validate_as(&self, kind: AlgebraKind) -> ValidationReport {
        let mut violations = Vec::new();
        match kind {
            AlgebraKind::Lie => {
                for i in 0..self.dim {
                    let sq = self.basis_product(i, i);
                    if !is_zero_vec(&sq) {
                        violations.push(IdentityViolation::NonzeroSquare { i, value: sq });
                    }
                }
                for i in 0..self.dim {
                    for j in 0..self.dim {
                        if i == j {
                            continue;
                        }
                        let fwd = self.basis_product(i, j);
                        let bwd = self.basis_product(j, i);
                        let sum = add_vecs(&fwd, &bwd);
                        if !is_zero_vec(&sum) {
                            violations.push(IdentityViolation::Anticommutativity {
                                i,
                                j,
                                discrepancy: sum,
                            });
                        }
                    }
                }
                for i in 0..self.dim {
                    for j in 0..self.dim {
                        for k in 0..self.dim {
                            let ei = unit_vector(self.field, self.dim, i);
                            let ej = unit_vector(self.field, self.dim, j);
                            let ek = unit_vector(self.field, self.dim, k);
                            let t1 = self.product_vectors(&self.basis_product(i, j), &ek);
                            let t2 = self.product_vectors(&self.basis_product(j, k), &ei);
                            let t3 = self.product_vectors(&self.basis_product(k, i), &ej);
                            let sum = add_vecs(&add_vecs(&t1, &t2), &t3);
                            if !is_zero_vec(&sum) {
                                violations.push(IdentityViolation::Jacobi {
                                    i,
                                    j,
                                    k,
                                    discrepancy: sum,
                                });
                            }
                        }
                    }
                }
            }
            AlgebraKind::Leibniz => {
                for a in 0..self.dim {
                    for b in 0..self.dim {
                        for c in 0..self.dim {
                            let ec = unit_vector(self.field, self.dim, c);
                            let eb = unit_vector(self.field, self.dim, b);
                            let lhs = self.product_vectors(
                                &unit_vector(self.field, self.dim, a),
                                &self.basis_product(b, c),
                            );
                            let t1 = self.product_vectors(&self.basis_product(a, b), &ec);
                            let t2 = self.product_vectors(&eb, &self.basis_product(a, c));
                            let diff = sub_vecs(&lhs, &add_vecs(&t1, &t2));
                            if !is_zero_vec(&diff) {
                                violations.push(IdentityViolation::Leibniz {
                                    a,
                                    b,
                                    c,
                                    discrepancy: diff,
                                });
                            }
                        }
                    }
                }
            }
        }
        ValidationReport {
            algebra: self.name.clone(),
            checked_kind: kind,
            violations,
        }
    }

    /// Canonical span of {x y : x in A, y in B}; bilinearity makes basis
    /// products sufficient.
    pub fn product_subspaces(
        &self,
        a: &SubspaceBasis,
        b: &SubspaceBasis,
    ) -> Result<SubspaceBasis> {
        self.check_ambient(a)?;
        self.check_ambient(b)?;
        let mut products = Vec::new();
        for x in a.basis_rows() {
            for y in b.basis_rows() {
                products.push(self.product_vectors(&x, &y));
            }
        }
        SubspaceBasis::span(self.field, self.dim, &products)
    }

    fn check_ambient(&self, s: &SubspaceBasis) -> Result<()> {
        if s.ambient_dim() != self.dim || s.field() != self.field {
            return Err(Error::DimensionMismatch(format!(
                "subspace of {} over {} against algebra `{}` of dimension {} over {}",
                s.ambient_dim(),
                s.field(),
                self.name,
                self.dim,
                self.field
            )));
        }
        Ok(())
    }

    /// True iff L·S ⊆ S and S·L ⊆ S. Both inclusions are required even
    /// for Lie algebras, where they coincide.
    pub fn is_ideal(&self, s: &SubspaceBasis) -> Result<bool> {
        self.check_ambient(s)?;
        for v in s.basis_rows() {
            for i in 0..self.dim {
                let left = self.left_mult_matrix(i).apply(&v)?;
                if !s.contains(&left)? {
                    return Ok(false);
                }
                let right = self.right_mult_matrix(i).apply(&v)?;
                if !s.contains(&right)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Presentation of L/A on the non-pivot coordinates of the ideal's
    /// echelon basis, together with the natural epimorphism.
    pub fn quotient(&self, ideal: &IdealHandle) -> Result<(AlgebraPresentation, Morphism)> {
        if !ideal.parent().same_structure(self) {
            return Err(Error::DimensionMismatch(format!(
                "ideal of `{}` used with `{}`",
                ideal.parent().name(),
                self.name
            )));
        }
        let space = ideal.space();
        let complement = space.non_pivot_columns();
        let qdim = complement.len();
        // projection matrix: coordinates of the reduced basis images
        let mut proj = MatrixExact::zero(self.field, qdim, self.dim);
        for j in 0..self.dim {
            let reduced = space.reduce_mod(&unit_vector(self.field, self.dim, j));
            for (r, &col) in complement.iter().enumerate() {
                proj.set(r, j, reduced[col].clone());
            }
        }
        let mut terms = Vec::new();
        for (a, &ca) in complement.iter().enumerate() {
            for (b, &cb) in complement.iter().enumerate() {
                let product = self.basis_product(ca, cb);
                let reduced = space.reduce_mod(&product);
                for (k, &ck) in complement.iter().enumerate() {
                    if !reduced[ck].is_zero() {
                        terms.push((a, b, k, reduced[ck].clone()));
                    }
                }
            }
        }
        let quotient = AlgebraPresentation::new(
            format!("{}/({}d)", self.name, space.dim()),
            self.field,
            self.kind,
            qdim,
            terms,
        )?;
        let morphism = Morphism::new(self.clone(), quotient.clone(), proj)?;
        Ok((quotient, morphism))
    }

    /// Block-diagonal direct sum; both summands embed as ideals.
    pub fn direct_sum(&self, other: &AlgebraPresentation) -> Result<AlgebraPresentation> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(
                self.field.to_string(),
                other.field.to_string(),
            ));
        }
        if self.kind != other.kind {
            return Err(Error::DimensionMismatch(format!(
                "direct sum of kind {} with kind {}",
                self.kind, other.kind
            )));
        }
        let mut terms: Vec<(usize, usize, usize, Scalar)> = self.bracket_terms();
        for (i, j, k, c) in other.bracket_terms() {
            terms.push((self.dim + i, self.dim + j, self.dim + k, c));
        }
        AlgebraPresentation::new(
            format!("{}(+){}", self.name, other.name),
            self.field,
            self.kind,
            self.dim + other.dim,
            terms,
        )
    }

    /// Centralizer of the section H/K: all x with xH ⊆ K and Hx ⊆ K.
    /// Both sides are required; for Lie algebras they coincide.
    pub fn centralizer_of_section(
        &self,
        h: &SubspaceBasis,
        k: &SubspaceBasis,
    ) -> Result<SubspaceBasis> {
        self.check_ambient(h)?;
        self.check_ambient(k)?;
        if !k.is_subspace_of(h)? {
            return Err(Error::NotInvariantSection("K is not contained in H".into()));
        }
        if !self.is_ideal(h)? {
            return Err(Error::NotInvariantSection("H is not L-invariant".into()));
        }
        if !self.is_ideal(k)? {
            return Err(Error::NotInvariantSection("K is not L-invariant".into()));
        }
        // linear conditions on x: reduce x·w and w·x mod K for each basis w of H
        let mut blocks: Vec<MatrixExact> = Vec::new();
        for w in h.basis_rows() {
            let mut left_block = MatrixExact::zero(self.field, self.dim, self.dim);
            let mut right_block = MatrixExact::zero(self.field, self.dim, self.dim);
            for i in 0..self.dim {
                let ei = unit_vector(self.field, self.dim, i);
                let xw = k.reduce_mod(&self.product_vectors(&ei, &w));
                let wx = k.reduce_mod(&self.product_vectors(&w, &ei));
                for r in 0..self.dim {
                    left_block.set(r, i, xw[r].clone());
                    right_block.set(r, i, wx[r].clone());
                }
            }
            blocks.push(left_block);
            blocks.push(right_block);
        }
        let mut stacked = MatrixExact::zero(self.field, 0, self.dim);
        for b in blocks {
            stacked = stacked.vstack(&b)?;
        }
        Ok(kernel(&stacked))
    }

    /// Presentation of a product-closed subspace on its echelon basis.
    pub fn restrict_to_subalgebra(&self, space: &SubspaceBasis) -> Result<AlgebraPresentation> {
        self.check_ambient(space)?;
        let rows = space.basis_rows();
        let mut terms = Vec::new();
        for (a, x) in rows.iter().enumerate() {
            for (b, y) in rows.iter().enumerate() {
                let product = self.product_vectors(x, y);
                let coords = space
                    .solve(&product)?
                    .ok_or(Error::NotASubalgebra)?;
                for (k, c) in coords.into_iter().enumerate() {
                    if !c.is_zero() {
                        terms.push((a, b, k, c));
                    }
                }
            }
        }
        AlgebraPresentation::new(
            format!("{}|sub{}", self.name, space.dim()),
            self.field,
            self.kind,
            space.dim(),
            terms,
        )
    }

    /// Rewrites the presentation in the basis given by the columns of `t`.
    pub fn change_basis(&self, t: &MatrixExact) -> Result<AlgebraPresentation> {
        if t.rows() != self.dim || t.cols() != self.dim || t.field() != self.field {
            return Err(Error::DimensionMismatch(
                "change of basis must be square over the algebra's field".into(),
            ));
        }
        let t_inv = crate::subspace::invert(t)
            .ok_or_else(|| Error::DimensionMismatch("change of basis is singular".into()))?;
        let mut terms = Vec::new();
        let cols: Vec<Vec<Scalar>> = (0..self.dim)
            .map(|c| (0..self.dim).map(|r| t.get(r, c).clone()).collect())
            .collect();
        for i in 0..self.dim {
            for j in 0..self.dim {
                let product = self.product_vectors(&cols[i], &cols[j]);
                let new_coords = t_inv.apply(&product)?;
                for (k, c) in new_coords.into_iter().enumerate() {
                    if !c.is_zero() {
                        terms.push((i, j, k, c));
                    }
                }
            }
        }
        AlgebraPresentation::new(
            format!("{}~", self.name),
            self.field,
            self.kind,
            self.dim,
            terms,
        )
    }
}

/// A linear map between presentations that respects products.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Morphism {
    source: AlgebraPresentation,
    target: AlgebraPresentation,
    matrix: MatrixExact,
    surjective: bool,
}

impl Morphism {
    /// Wraps a (dim_target x dim_source) matrix after verifying that it
    /// respects products on all basis pairs. The surjectivity flag is
    /// derived from the rank.
    pub fn new(
        source: AlgebraPresentation,
        target: AlgebraPresentation,
        matrix: MatrixExact,
    ) -> Result<Self> {
        if matrix.rows() != target.dim() || matrix.cols() != source.dim() {
            return Err(Error::DimensionMismatch(format!(
                "morphism matrix {}x{} for map {} -> {}",
                matrix.rows(),
                matrix.cols(),
                source.dim(),
                target.dim()
            )));
        }
        if matrix.field() != source.field() || source.field() != target.field() {
            return Err(Error::FieldMismatch(
                source.field().to_string(),
                target.field().to_string(),
            ));
        }
        for i in 0..source.dim() {
            for j in 0..source.dim() {
                let via_source = matrix.apply(&source.basis_product(i, j))?;
                let xi = matrix.apply(&unit_vector(source.field(), source.dim(), i))?;
                let xj = matrix.apply(&unit_vector(source.field(), source.dim(), j))?;
                let via_target = target.product_vectors(&xi, &xj);
                if via_source != via_target {
                    return Err(Error::NotAMorphism(i + 1, j + 1));
                }
            }
        }
        let surjective = rref(&matrix).dim() == target.dim();
        Ok(Morphism {
            source,
            target,
            matrix,
            surjective,
        })
    }

    pub fn source(&self) -> &AlgebraPresentation {
        &self.source
    }

    pub fn target(&self) -> &AlgebraPresentation {
        &self.target
    }

    pub fn matrix(&self) -> &MatrixExact {
        &self.matrix
    }

    pub fn is_surjective(&self) -> bool {
        self.surjective
    }

    pub fn is_bijective(&self) -> bool {
        self.surjective && self.source.dim() == self.target.dim()
    }

    pub fn apply(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        self.matrix.apply(v)
    }

    /// Kernel as a subspace of the source.
    pub fn kernel_space(&self) -> SubspaceBasis {
        kernel(&self.matrix)
    }

    /// Image as a subspace of the target.
    pub fn image(&self) -> SubspaceBasis {
        rref(&self.matrix.transpose())
    }

    /// Preimage of a subspace of the target.
    pub fn preimage(&self, space: &SubspaceBasis) -> Result<SubspaceBasis> {
        if space.ambient_dim() != self.target.dim() {
            return Err(Error::DimensionMismatch(
                "preimage of a subspace with the wrong ambient dimension".into(),
            ));
        }
        let field = self.matrix.field();
        let mut conditions = MatrixExact::zero(field, self.target.dim(), self.source.dim());
        for j in 0..self.source.dim() {
            let image = self
                .matrix
                .apply(&unit_vector(field, self.source.dim(), j))?;
            let reduced = space.reduce_mod(&image);
            for (r, value) in reduced.iter().enumerate() {
                conditions.set(r, j, value.clone());
            }
        }
        Ok(kernel(&conditions))
    }

    /// self ∘ other (apply `other` first).
    pub fn compose(&self, other: &Morphism) -> Result<Morphism> {
        if !other.target.same_structure(&self.source) {
            return Err(Error::TargetMismatch);
        }
        let matrix = self.matrix.mul(&other.matrix)?;
        Morphism::new(other.source.clone(), self.target.clone(), matrix)
    }

    /// Re-runs the construction checks; reports the first failure.
    pub fn check(&self) -> Result<()> {
        let rebuilt = Morphism::new(
            self.source.clone(),
            self.target.clone(),
            self.matrix.clone(),
        )?;
        if rebuilt.surjective != self.surjective {
            return Err(Error::DimensionMismatch(
                "recorded surjectivity flag does not match the rank".into(),
            ));
        }
        Ok(())
    }
}

/// An ideal A of a fixed parent algebra: L·A ⊆ A and A·L ⊆ A.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealHandle {
    parent: AlgebraPresentation,
    space: SubspaceBasis,
}

impl IdealHandle {
    pub fn new(parent: &AlgebraPresentation, space: SubspaceBasis) -> Result<Self> {
        if !parent.is_ideal(&space)? {
            return Err(Error::NotAnIdeal(parent.name().to_string()));
        }
        Ok(IdealHandle {
            parent: parent.clone(),
            space,
        })
    }

    pub fn parent(&self) -> &AlgebraPresentation {
        &self.parent
    }

    pub fn space(&self) -> &SubspaceBasis {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }
}

/// Fiber product of two epimorphisms onto a common target: the subalgebra
/// of the direct sum where the two images agree, with its coordinate
/// projections.
#[derive(Debug, Clone)]
pub struct FiberProduct {
    pub algebra: AlgebraPresentation,
    /// The fiber as a subspace of the direct sum of the two sources.
    pub space_in_sum: SubspaceBasis,
    pub proj_left: Morphism,
    pub proj_right: Morphism,
}

/// Builds the fiber product of `f1 : X1 -> T` and `f2 : X2 -> T`.
pub fn fiber_product(f1: &Morphism, f2: &Morphism) -> Result<FiberProduct> {
    if !f1.target().same_structure(f2.target()) {
        return Err(Error::TargetMismatch);
    }
    for f in [f1, f2] {
        f.check()?;
        if !f.is_surjective() {
            return Err(Error::NotAnEpimorphism {
                rank: rref(f.matrix()).dim(),
                dim: f.target().dim(),
            });
        }
    }
    let field = f1.source().field();
    let (n1, n2) = (f1.source().dim(), f2.source().dim());
    let t_dim = f1.target().dim();
    let sum = f1.source().direct_sum(f2.source())?;
    // agreement equations: f1(x1) - f2(x2) = 0
    let mut conditions = MatrixExact::zero(field, t_dim, n1 + n2);
    for r in 0..t_dim {
        for c in 0..n1 {
            conditions.set(r, c, f1.matrix().get(r, c).clone());
        }
        for c in 0..n2 {
            conditions.set(r, n1 + c, f2.matrix().get(r, c).neg());
        }
    }
    let space_in_sum = kernel(&conditions);
    let algebra = sum
        .restrict_to_subalgebra(&space_in_sum)?
        .with_name(format!(
            "fiber({},{})",
            f1.source().name(),
            f2.source().name()
        ));
    let rows = space_in_sum.basis_rows();
    let mut m1 = MatrixExact::zero(field, n1, space_in_sum.dim());
    let mut m2 = MatrixExact::zero(field, n2, space_in_sum.dim());
    for (c, row) in rows.iter().enumerate() {
        for (r, value) in row.iter().take(n1).enumerate() {
            m1.set(r, c, value.clone());
        }
        for (r, value) in row.iter().skip(n1).take(n2).enumerate() {
            m2.set(r, c, value.clone());
        }
    }
    let proj_left = Morphism::new(algebra.clone(), f1.source().clone(), m1)?;
    let proj_right = Morphism::new(algebra.clone(), f2.source().clone(), m2)?;
    Ok(FiberProduct {
        algebra,
        space_in_sum,
        proj_left,
        proj_right,
    })
}

/// Outcome of validating a presentation against one set of identities:
/// either empty or a list of concrete violated instances with the exact
/// discrepancy vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub algebra: String,
    pub checked_kind: AlgebraKind,
    pub violations: Vec<IdentityViolation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn summary(&self) -> String {
        if self.is_valid() {
            format!("valid {}", self.checked_kind)
        } else {
            let first = &self.violations[0];
            format!(
                "{} violation(s) against the {} identities; first: {}",
                self.violations.len(),
                self.checked_kind,
                first
            )
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IdentityViolation {
    /// e_i e_i != 0 (reported separately from anticommutativity so the
    /// characteristic-2 case is not silently lost).
    NonzeroSquare { i: usize, value: Vec<Scalar> },
    /// e_i e_j + e_j e_i != 0.
    Anticommutativity {
        i: usize,
        j: usize,
        discrepancy: Vec<Scalar>,
    },
    /// Jacobiator at (i, j, k) nonzero.
    Jacobi {
        i: usize,
        j: usize,
        k: usize,
        discrepancy: Vec<Scalar>,
    },
    /// a(bc) - (ab)c - b(ac) nonzero at basis triple (a, b, c).
    Leibniz {
        a: usize,
        b: usize,
        c: usize,
        discrepancy: Vec<Scalar>,
    },
}

impl fmt::Display for IdentityViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IdentityViolation::NonzeroSquare { i, value } => {
                write!(f, "e{0}*e{0} = {1} (must vanish)", i + 1, format_vec(value))
            }
            IdentityViolation::Anticommutativity { i, j, discrepancy } => write!(
                f,
                "e{}*e{} + e{}*e{} = {}",
                i + 1,
                j + 1,
                j + 1,
                i + 1,
                format_vec(discrepancy)
            ),
            IdentityViolation::Jacobi { i, j, k, discrepancy } => write!(
                f,
                "Jacobi at (e{}, e{}, e{}): {}",
                i + 1,
                j + 1,
                k + 1,
                format_vec(discrepancy)
            ),
            IdentityViolation::Leibniz { a, b, c, discrepancy } => write!(
                f,
                "Leibniz at (e{}, e{}, e{}): {}",
                a + 1,
                b + 1,
                c + 1,
                format_vec(discrepancy)
            ),
        }
    }
}

pub(crate) fn format_vec(v: &[Scalar]) -> String {
    let parts: Vec<String> = v.iter().map(Scalar::to_string).collect();
    format!("({})", parts.join(", "))
}

/// The i-th standard basis vector of F^dim.
pub fn unit_vector(field: FieldTag, dim: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(field); dim];
    v[i] = Scalar::one(field);
    v
}

pub(crate) fn is_zero_vec(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

pub(crate) fn add_vecs(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x.add(y)).collect()
}

pub(crate) fn sub_vecs(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x.sub(y)).collect()
}
