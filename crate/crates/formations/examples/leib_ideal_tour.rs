//! The Leib ideal: span of all squares x·x. It vanishes exactly on Lie
//! algebras, kills the algebra from the left side of products into it,
//! and the quotient by it is always Lie.
//!
//! Over GF(2) the polarized generators e_i·e_j + e_j·e_i matter: p4_gf2
//! has all basis squares zero yet a 2-dimensional Leib ideal.

use formations::catalog::builtin;
use formations::series::leib_ideal;
use formations::AlgebraKind;

fn main() {
    let doc = builtin::document();
    for a in doc.algebras() {
        let leib = leib_ideal(a).unwrap();
        let (q, _) = a.quotient(&leib).unwrap();
        println!(
            "{:8} leib dim {}  quotient dim {} lie-valid {}",
            a.name(),
            leib.dim(),
            q.dim(),
            q.validate_as(AlgebraKind::Lie).is_valid()
        );

        // Leib(L)·L = 0 and Leib(L) is abelian
        let product = a.product_subspaces(leib.space(), &a.full_space()).unwrap();
        assert!(product.is_zero());
    }

    let p4 = builtin::p4_gf2();
    println!("\nbasis squares of {}:", p4.name());
    for i in 0..p4.dim() {
        let square = p4.basis_product(i, i);
        let all_zero = square.iter().all(|s| s.is_zero());
        println!("  e{}·e{} zero: {}", i + 1, i + 1, all_zero);
    }
    println!(
        "yet leib dim = {} from the symmetrized products e_i e_j + e_j e_i",
        leib_ideal(&p4).unwrap().dim()
    );
}
