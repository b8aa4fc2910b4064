//! The subdirect-sum device: given two epimorphisms onto a common
//! quotient, the fiber product picks out the subalgebra of the direct
//! sum where both coordinates map to the same point. Applied to the
//! two copies of r2 → r2/⟨e2⟩ it produces a 3-dimensional algebra with
//! surjective projections onto both copies.

use formations::algebra::fiber_product;
use formations::catalog::builtin;
use formations::series::leib_ideal;
use formations::IdealHandle;

fn main() {
    let r2 = builtin::r2();
    let e2_line = IdealHandle::new(
        &r2,
        formations::SubspaceBasis::span(
            r2.field(),
            2,
            &[formations::algebra::unit_vector(r2.field(), 2, 1)],
        )
        .unwrap(),
    )
    .unwrap();

    let (_, pi1) = r2.quotient(&e2_line).unwrap();
    let (_, pi2) = r2.quotient(&e2_line).unwrap();

    let fiber = fiber_product(&pi1, &pi2).unwrap();
    println!(
        "fiber of r2 -> r2/<e2> against itself: dim {} inside dim {}",
        fiber.algebra.dim(),
        pi1.source().dim() + pi2.source().dim()
    );
    println!("  valid: {}", fiber.algebra.validate().is_valid());
    println!(
        "  projections surjective: {} {}",
        fiber.proj_left.is_surjective(),
        fiber.proj_right.is_surjective()
    );
    println!(
        "  leib ideal dim: {} (the fiber of two Lie algebras stays Lie)",
        leib_ideal(&fiber.algebra).unwrap().dim()
    );

    // fibering the identity against itself recovers the diagonal
    let id = formations::Morphism::new(
        r2.clone(),
        r2.clone(),
        formations::MatrixExact::identity(r2.field(), 2),
    )
    .unwrap();
    let diag = fiber_product(&id, &id).unwrap();
    println!(
        "\nidentity against itself: dim {} with bijective projections {} {}",
        diag.algebra.dim(),
        diag.proj_left.is_bijective(),
        diag.proj_right.is_bijective()
    );
}
