//! Modules and bimodules: spinning submodules, certified minimal
//! submodules, the symmetric/antisymmetric dichotomy for irreducible
//! bimodules, and split extensions in both directions.

use formations::algebra::unit_vector;
use formations::catalog::builtin;
use formations::module::section_module;

fn main() {
    // h3 acting on itself: the regular bimodule. Spinning any vector
    // outside the center sweeps in the center, and the unique minimal
    // submodule is the center itself.
    let h3 = builtin::h3();
    let regular = section_module(&h3, &h3.full_space(), &h3.zero_space()).unwrap();
    let spun = regular.module.spin(&unit_vector(h3.field(), 3, 0)).unwrap();
    println!("h3 regular module: spin(e1) dim {}", spun.space().dim());
    let minimal = regular.module.minimal_submodule().unwrap();
    println!(
        "  minimal submodule dim {} contains e3: {}",
        minimal.space().dim(),
        minimal.space().contains(&unit_vector(h3.field(), 3, 2)).unwrap()
    );

    // w is the irreducible 2-dimensional module over r2 presented over
    // GF(2); minimality of the whole space certifies irreducibility
    let w = builtin::module("w");
    println!(
        "\nw over r2_gf2: irreducible {}, faithful {}",
        w.is_irreducible().unwrap(),
        w.is_faithful().unwrap()
    );

    // the same left action supports two bimodule completions
    let symmetric = w.symmetrize().unwrap();
    let antisymmetric = w.antisymmetrize().unwrap();
    println!("  symmetrize:     {}", symmetric.classify_dichotomy().unwrap());
    println!("  antisymmetrize: {}", antisymmetric.classify_dichotomy().unwrap());

    // and the two split extensions differ in kind: V ⊕ L is a Lie
    // algebra for the symmetric completion, a non-Lie Leibniz algebra
    // for the antisymmetric one
    let lie_ext = symmetric.split_extension().unwrap();
    let leibniz_ext = antisymmetric.split_extension().unwrap();
    println!(
        "\nsplit extensions: symmetric -> {} ({}), antisymmetric -> {} ({})",
        lie_ext.algebra.kind(),
        if lie_ext.algebra.same_structure(&builtin::e4_gf2()) {
            "matches e4_gf2"
        } else {
            "unexpected"
        },
        leibniz_ext.algebra.kind(),
        if leibniz_ext.algebra.same_structure(&builtin::p4_gf2()) {
            "matches p4_gf2"
        } else {
            "unexpected"
        }
    );

    // quotienting the extension by the embedded module recovers the base
    let (q, _) = leibniz_ext
        .algebra
        .quotient(&leibniz_ext.module_ideal)
        .unwrap();
    println!(
        "quotient of the Leibniz extension by V recovers r2_gf2: {}",
        q.same_structure(&builtin::r2_gf2().into_leibniz_kind())
    );
}
