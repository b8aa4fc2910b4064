//! Validates every entry of the built-in catalog against its declared
//! identities: Lie algebras must be anticommutative with zero squares
//! and satisfy Jacobi, Leibniz algebras the left Leibniz identity, and
//! modules the representation and bimodule compatibility laws.

use formations::catalog::builtin;
use formations::CatalogEntry;

fn main() {
    let doc = builtin::document();
    for entry in &doc.entries {
        match entry {
            CatalogEntry::Algebra(a) => {
                let report = a.validate();
                println!(
                    "{:8} {:7} dim {}  ->  {}",
                    a.name(),
                    a.kind().to_string(),
                    a.dim(),
                    if report.is_valid() { "valid" } else { "INVALID" }
                );
                for v in &report.violations {
                    println!("         {v}");
                }
            }
            CatalogEntry::Module(m) => {
                let report = m.verify();
                println!(
                    "{:8} module  dim {}  over {}  ->  {}",
                    m.name(),
                    m.dim_v(),
                    m.algebra().name(),
                    if report.is_valid() { "valid" } else { "INVALID" }
                );
            }
        }
    }

    // a deliberately broken table: [e1,e2] = e1 fails Jacobi with e3
    let bad = formations::AlgebraPresentation::from_integer_table(
        "bad",
        formations::FieldTag::Q,
        formations::AlgebraKind::Lie,
        3,
        &[(1, 2, 1, 1), (2, 1, 1, -1), (1, 3, 3, 1), (3, 1, 3, -1)],
    )
    .unwrap();
    let report = bad.validate();
    println!("\nbroken table reports:");
    for v in &report.violations {
        println!("  {v}");
    }
}
