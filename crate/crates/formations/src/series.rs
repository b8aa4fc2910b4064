//! Structural series: derived, lower central, chief; the Leib ideal and
//! the nilradical.
//!
//! The chief series drives everything downstream: its factors are the
//! irreducible sections whose centralizers cut out the nilradical and
//! decide membership in locally defined formations.

use crate::algebra::{add_vecs, AlgebraPresentation, IdealHandle};
use crate::error::{Error, Result};
use crate::module::{section_module, ModulePresentation};
use crate::subspace::SubspaceBasis;

/// A descending series of subspaces, from the whole algebra down to the
/// stable term (included once).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesRecord {
    pub algebra: AlgebraPresentation,
    pub terms: Vec<SubspaceBasis>,
}

impl SeriesRecord {
    pub fn reaches_zero(&self) -> bool {
        self.terms.last().is_some_and(SubspaceBasis::is_zero)
    }

    pub fn dims(&self) -> Vec<usize> {
        self.terms.iter().map(SubspaceBasis::dim).collect()
    }
}

/// L ⊇ L' ⊇ L'' ⊇ … with each term the product of the previous with
/// itself; stops at the first repetition.
pub fn derived_series(l: &AlgebraPresentation) -> SeriesRecord {
    let mut terms = vec![l.full_space()];
    loop {
        let current = terms.last().unwrap();
        let next = l
            .product_subspaces(current, current)
            .expect("series terms live in the algebra");
        if next == *current {
            break;
        }
        terms.push(next);
    }
    SeriesRecord {
        algebra: l.clone(),
        terms,
    }
}

/// L^1 = L, L^{k+1} = L·L^k (plus L^k·L for Leibniz kind); stops at the
/// first repetition.
pub fn lower_central_series(l: &AlgebraPresentation) -> SeriesRecord {
    let full = l.full_space();
    let mut terms = vec![full.clone()];
    loop {
        let current = terms.last().unwrap();
        let left = l
            .product_subspaces(&full, current)
            .expect("series terms live in the algebra");
        let next = match l.kind() {
            crate::algebra::AlgebraKind::Lie => left,
            crate::algebra::AlgebraKind::Leibniz => {
                let right = l
                    .product_subspaces(current, &full)
                    .expect("series terms live in the algebra");
                left.sum(&right).expect("same ambient")
            }
        };
        if next == *current {
            break;
        }
        terms.push(next);
    }
    SeriesRecord {
        algebra: l.clone(),
        terms,
    }
}

pub fn is_soluble(l: &AlgebraPresentation) -> bool {
    derived_series(l).reaches_zero()
}

pub fn is_nilpotent(l: &AlgebraPresentation) -> bool {
    lower_central_series(l).reaches_zero()
}

/// Leib(L) = span of all squares x², computed by polarization: the
/// squares e_i e_i together with e_i e_j + e_j e_i for i < j span the
/// same space in every characteristic, including 2.
pub fn leib_ideal(l: &AlgebraPresentation) -> Result<IdealHandle> {
    let mut generators = Vec::new();
    for i in 0..l.dim() {
        generators.push(l.basis_product(i, i));
        for j in (i + 1)..l.dim() {
            generators.push(add_vecs(&l.basis_product(i, j), &l.basis_product(j, i)));
        }
    }
    let space = SubspaceBasis::span(l.field(), l.dim(), &generators)?;
    IdealHandle::new(l, space)
}

/// An ascending chief series 0 = I_0 < I_1 < … < I_m = L with, per step,
/// the factor I_j/I_{j−1} as an L-bimodule and its centralizer in L.
#[derive(Debug, Clone)]
pub struct ChiefSeries {
    pub algebra: AlgebraPresentation,
    pub ideals: Vec<SubspaceBasis>,
    pub factors: Vec<ModulePresentation>,
    pub centralizers: Vec<SubspaceBasis>,
}

impl ChiefSeries {
    pub fn length(&self) -> usize {
        self.factors.len()
    }

    pub fn factor_dims(&self) -> Vec<usize> {
        self.factors.iter().map(ModulePresentation::dim_v).collect()
    }
}

/// Builds a chief series by repeatedly pulling back a minimal ideal of
/// the quotient by the series so far. The minimal ideal is found inside
/// the last nonzero derived term of the quotient, which is abelian, so
/// ideals of the quotient inside it are exactly the submodules.
pub fn chief_series(l: &AlgebraPresentation) -> Result<ChiefSeries> {
    if !is_soluble(l) {
        return Err(Error::NotSoluble(l.name().to_string()));
    }
    let mut ideals = vec![l.zero_space()];
    while !ideals.last().unwrap().is_full() {
        let current = IdealHandle::new(l, ideals.last().unwrap().clone())?;
        let (q, pi) = l.quotient(&current)?;
        let derived = derived_series(&q);
        // last nonzero term: derived reaches zero because quotients of
        // soluble algebras are soluble
        let socle_seed = derived.terms[derived.terms.len().saturating_sub(2)].clone();
        let section = section_module(&q, &socle_seed, &q.zero_space())?;
        let minimal = section.module.minimal_submodule()?;
        let minimal_in_q = section.pull_back(minimal.space())?;
        let next = pi.preimage(&minimal_in_q)?;
        ideals.push(next);
    }
    let mut factors = Vec::new();
    let mut centralizers = Vec::new();
    for step in 1..ideals.len() {
        let below = &ideals[step - 1];
        let above = &ideals[step];
        let section = section_module(l, above, below)?;
        if !section.module.is_irreducible()? {
            return Err(Error::ReducibleChiefFactor(l.name().to_string()));
        }
        let factor = section
            .module
            .with_name(format!("{}-chief{}", l.name(), step));
        centralizers.push(l.centralizer_of_section(above, below)?);
        factors.push(factor);
    }
    Ok(ChiefSeries {
        algebra: l.clone(),
        ideals,
        factors,
        centralizers,
    })
}

/// N(L): the intersection of the centralizers of the factors of a chief
/// series. The result does not depend on the chosen series.
pub fn nilradical(l: &AlgebraPresentation) -> Result<IdealHandle> {
    let series = chief_series(l)?;
    let mut intersection = l.full_space();
    for c in &series.centralizers {
        intersection = intersection.intersect(c)?;
    }
    IdealHandle::new(l, intersection)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::unit_vector;
    use crate::catalog::builtin;
    use crate::scalar::FieldTag;

    #[test]
    fn derived_series_shapes() {
        assert_eq!(derived_series(&builtin::ab1()).dims(), vec![1, 0]);
        assert_eq!(derived_series(&builtin::r2()).dims(), vec![2, 1, 0]);
        assert_eq!(derived_series(&builtin::h3()).dims(), vec![3, 1, 0]);
        // perfect: the series is constant at the whole algebra
        assert_eq!(derived_series(&builtin::sl2()).dims(), vec![3]);
    }

    #[test]
    fn lower_central_series_shapes() {
        assert_eq!(lower_central_series(&builtin::h3()).dims(), vec![3, 1, 0]);
        assert_eq!(lower_central_series(&builtin::r2()).dims(), vec![2, 1]);
        assert!(is_nilpotent(&builtin::h3()));
        assert!(!is_nilpotent(&builtin::r2()));
        assert!(is_soluble(&builtin::r2()));
        assert!(!is_soluble(&builtin::sl2()));
    }

    #[test]
    fn zero_dimensional_algebra_is_nilpotent() {
        let zero = AlgebraPresentation::new(
            "z",
            FieldTag::Q,
            crate::algebra::AlgebraKind::Lie,
            0,
            vec![],
        )
        .unwrap();
        assert_eq!(lower_central_series(&zero).dims(), vec![0]);
        assert!(is_nilpotent(&zero));
        assert!(is_soluble(&zero));
    }

    #[test]
    fn lie_algebras_have_zero_leib_ideal() {
        for a in [builtin::r2(), builtin::h3(), builtin::sl2(), builtin::e4_gf2()] {
            assert_eq!(leib_ideal(&a).unwrap().dim(), 0, "algebra {}", a.name());
        }
    }

    #[test]
    fn leib_ideal_of_p3_is_the_module_line() {
        let p3 = builtin::p3();
        let leib = leib_ideal(&p3).unwrap();
        assert_eq!(leib.dim(), 1);
        assert!(leib.space().contains(&unit_vector(FieldTag::Q, 3, 0)).unwrap());
    }

    #[test]
    fn leib_ideal_of_p4_is_the_whole_module_despite_char_two() {
        let p4 = builtin::p4_gf2();
        let leib = leib_ideal(&p4).unwrap();
        assert_eq!(leib.dim(), 2);
        let field = FieldTag::GF(2);
        assert!(leib.space().contains(&unit_vector(field, 4, 0)).unwrap());
        assert!(leib.space().contains(&unit_vector(field, 4, 1)).unwrap());
    }

    #[test]
    fn leib_ideal_annihilates_on_the_right_and_quotient_is_lie() {
        for a in [builtin::p3(), builtin::p4_gf2()] {
            let leib = leib_ideal(&a).unwrap();
            let product = a
                .product_subspaces(leib.space(), &a.full_space())
                .unwrap();
            assert!(product.is_zero(), "Leib(L)·L != 0 for {}", a.name());
            let self_product = a.product_subspaces(leib.space(), leib.space()).unwrap();
            assert!(self_product.is_zero());
            let (q, _) = a.quotient(&leib).unwrap();
            assert!(q.validate_as(crate::algebra::AlgebraKind::Lie).is_valid());
        }
    }

    #[test]
    fn chief_series_of_ab1() {
        let series = chief_series(&builtin::ab1()).unwrap();
        assert_eq!(series.factor_dims(), vec![1]);
        assert!(series.centralizers[0].is_full());
    }

    #[test]
    fn chief_series_of_r2() {
        let series = chief_series(&builtin::r2()).unwrap();
        assert_eq!(series.factor_dims(), vec![1, 1]);
        let e2 = SubspaceBasis::span(FieldTag::Q, 2, &[unit_vector(FieldTag::Q, 2, 1)]).unwrap();
        assert_eq!(series.ideals[1], e2);
        assert_eq!(series.centralizers[0], e2);
        assert!(series.centralizers[1].is_full());
    }

    #[test]
    fn chief_series_of_e4_has_a_two_dimensional_bottom_factor() {
        let series = chief_series(&builtin::e4_gf2()).unwrap();
        assert_eq!(series.factor_dims(), vec![2, 1, 1]);
        let field = FieldTag::GF(2);
        let w = SubspaceBasis::span(
            field,
            4,
            &[unit_vector(field, 4, 0), unit_vector(field, 4, 1)],
        )
        .unwrap();
        assert_eq!(series.ideals[1], w);
        assert_eq!(series.centralizers[0], w);
    }

    #[test]
    fn chief_series_rejects_insoluble_input() {
        assert!(matches!(
            chief_series(&builtin::sl2()),
            Err(Error::NotSoluble(_))
        ));
    }

    #[test]
    fn chief_factor_kernels_equal_centralizers() {
        for a in [builtin::r2(), builtin::h3(), builtin::e4_gf2(), builtin::p3(), builtin::p4_gf2()]
        {
            let series = chief_series(&a).unwrap();
            for (factor, centralizer) in series.factors.iter().zip(&series.centralizers) {
                let kernel = factor.representation_kernel().unwrap();
                assert_eq!(
                    kernel.space(),
                    centralizer,
                    "kernel/centralizer mismatch for {}",
                    a.name()
                );
            }
        }
    }

    #[test]
    fn nilradical_examples() {
        let e2 = SubspaceBasis::span(FieldTag::Q, 2, &[unit_vector(FieldTag::Q, 2, 1)]).unwrap();
        assert_eq!(*nilradical(&builtin::r2()).unwrap().space(), e2);
        assert!(nilradical(&builtin::h3()).unwrap().space().is_full());

        let field = FieldTag::GF(2);
        let w = SubspaceBasis::span(
            field,
            4,
            &[unit_vector(field, 4, 0), unit_vector(field, 4, 1)],
        )
        .unwrap();
        assert_eq!(*nilradical(&builtin::e4_gf2()).unwrap().space(), w);
    }

    #[test]
    fn nilradical_of_p3_is_the_abelian_part() {
        // v and y commute with everything nilpotently; x acts with weight 1
        let n = nilradical(&builtin::p3()).unwrap();
        assert_eq!(n.dim(), 2);
        assert!(n.space().contains(&unit_vector(FieldTag::Q, 3, 0)).unwrap());
        assert!(n.space().contains(&unit_vector(FieldTag::Q, 3, 2)).unwrap());
    }

    #[test]
    fn nilradical_is_stable_under_change_of_basis() {
        use crate::matrix::MatrixExact;
        let e4 = builtin::e4_gf2();
        let t = MatrixExact::from_integers(
            FieldTag::GF(2),
            &[&[1, 0, 1, 0], &[0, 1, 0, 0], &[0, 0, 1, 1], &[0, 0, 0, 1]],
        );
        let moved = e4.change_basis(&t).unwrap();
        let n_moved = nilradical(&moved).unwrap();
        // transform back: columns of t map new coordinates to old
        let back: Vec<Vec<_>> = n_moved
            .space()
            .basis_rows()
            .iter()
            .map(|v| t.apply(v).unwrap())
            .collect();
        let transformed = SubspaceBasis::span(FieldTag::GF(2), 4, &back).unwrap();
        assert_eq!(transformed, *nilradical(&e4).unwrap().space());
    }
}
