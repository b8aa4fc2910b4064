//! Builds non-Lie Leibniz algebras from a Lie algebra L and a left
//! module V with L·V = V: the split extension on V ⊕ L with VL = 0.
//! The embedded V becomes exactly the Leib ideal, and the quotient by
//! it recovers L, so the construction pairs a Lie algebra with a
//! genuinely Leibniz partner sharing the same Lie quotient.

use formations::catalog::builtin;
use formations::counterexample::generate_counterexample;
use formations::module::ModulePresentation;

fn main() {
    // the 1-dimensional module over r2 where e1 acts as identity
    let out = generate_counterexample(&builtin::r2(), &builtin::module("lambda")).unwrap();
    println!("r2 + lambda:");
    for line in &out.report_lines {
        println!("  {line}");
    }
    println!("  same constants as builtin p3: {}", out.algebra.same_structure(&builtin::p3()));
    println!("{}", out.entry_text);

    // the 2-dimensional irreducible module over r2 presented over GF(2)
    let out = generate_counterexample(&builtin::r2_gf2(), &builtin::module("w")).unwrap();
    println!("r2_gf2 + w:");
    for line in &out.report_lines {
        println!("  {line}");
    }
    println!(
        "  same constants as builtin p4_gf2: {}",
        out.algebra.same_structure(&builtin::p4_gf2())
    );

    // rejections: a trivial module, and one whose action image is proper
    let trivial = ModulePresentation::trivial(builtin::r2(), 1);
    println!("\ntrivial module: {:?}", generate_counterexample(&builtin::r2(), &trivial).err());
}
