//! Seeded random constructions for tests and stress checks: small
//! scalars, invertible matrices, and soluble algebras grown by iterated
//! one-dimensional split extensions.

use rand::Rng;

use crate::algebra::{AlgebraKind, AlgebraPresentation};
use crate::error::Result;
use crate::matrix::MatrixExact;
use crate::module::ModulePresentation;
use crate::scalar::{FieldTag, Scalar};
use crate::series::derived_series;
use crate::subspace::{kernel, SubspaceBasis};

/// Over GF(p) a uniform residue; over Q a small integer in −2..=2.
pub fn random_scalar(rng: &mut impl Rng, field: FieldTag) -> Scalar {
    match field {
        FieldTag::Q => Scalar::from_integer(field, rng.gen_range(-2..=2)),
        FieldTag::GF(p) => Scalar::from_integer(field, rng.gen_range(0..p as i64)),
    }
}

pub fn random_vector(rng: &mut impl Rng, field: FieldTag, dim: usize) -> Vec<Scalar> {
    (0..dim).map(|_| random_scalar(rng, field)).collect()
}

/// Product of a random unit lower-triangular and a random unit
/// upper-triangular matrix: always invertible, entries stay small.
pub fn random_invertible(rng: &mut impl Rng, field: FieldTag, n: usize) -> MatrixExact {
    let mut lower = MatrixExact::identity(field, n);
    let mut upper = MatrixExact::identity(field, n);
    for r in 0..n {
        for c in 0..n {
            if r > c {
                lower.set(r, c, random_scalar(rng, field));
            } else if r < c {
                upper.set(r, c, random_scalar(rng, field));
            }
        }
    }
    lower.mul(&upper).expect("square factors")
}

/// A one-dimensional module over `l` given by a random character that
/// kills the derived subalgebra. `symmetric` selects the right action:
/// R = −L for symmetric, absent for antisymmetric.
pub fn random_character_module(
    rng: &mut impl Rng,
    l: &AlgebraPresentation,
    symmetric: bool,
) -> Result<ModulePresentation> {
    let field = l.field();
    let derived = derived_series(l);
    let derived_term = &derived.terms[1.min(derived.terms.len() - 1)];
    let annihilator = if derived_term.is_zero() {
        SubspaceBasis::span(
            field,
            l.dim(),
            &(0..l.dim())
                .map(|i| crate::algebra::unit_vector(field, l.dim(), i))
                .collect::<Vec<_>>(),
        )?
    } else {
        kernel(&MatrixExact::from_rows(field, derived_term.basis_rows())?)
    };
    let mut character = vec![Scalar::zero(field); l.dim()];
    for row in annihilator.basis_rows() {
        let coeff = random_scalar(rng, field);
        for (slot, entry) in character.iter_mut().zip(&row) {
            *slot = slot.add(&coeff.mul(entry));
        }
    }
    let left: Vec<MatrixExact> = character
        .iter()
        .map(|c| MatrixExact::from_rows(field, vec![vec![c.clone()]]).expect("1x1"))
        .collect();
    let module = ModulePresentation::new(
        format!("{}-char", l.name()),
        l.clone(),
        1,
        left,
        None,
    )?;
    if symmetric {
        module.symmetrize()
    } else {
        Ok(module)
    }
}

/// Grows a soluble algebra of the requested dimension by repeated split
/// extensions with random character modules. With `allow_leibniz` the
/// steps mix symmetric and antisymmetric modules; otherwise every step
/// is symmetric and the result is a Lie algebra.
pub fn random_soluble_algebra(
    rng: &mut impl Rng,
    field: FieldTag,
    target_dim: usize,
    allow_leibniz: bool,
) -> Result<AlgebraPresentation> {
    let kind = if allow_leibniz {
        AlgebraKind::Leibniz
    } else {
        AlgebraKind::Lie
    };
    let mut l = AlgebraPresentation::new("seed", field, kind, target_dim.min(1), vec![])?;
    let mut step = 0;
    while l.dim() < target_dim {
        let symmetric = !allow_leibniz || rng.gen_bool(0.5);
        let module = random_character_module(rng, &l, symmetric)?;
        let extension = module.split_extension()?;
        step += 1;
        l = extension.algebra.with_name(format!("rand{}d{}", step, target_dim));
    }
    Ok(l)
}
