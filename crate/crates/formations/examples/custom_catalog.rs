//! Builds a catalog programmatically, emits it in the canonical text
//! format, parses the text back, and runs the batch checks over it.

use formations::batch::{parse_checks, run_batch};
use formations::catalog::{emit_catalog, parse_catalog, CatalogDocument, CatalogEntry};
use formations::{AlgebraKind, AlgebraPresentation, FieldTag};

fn main() {
    // the 3-dimensional Heisenberg algebra over GF(5), entered by table
    let h3_gf5 = AlgebraPresentation::from_integer_table(
        "h3_gf5",
        FieldTag::GF(5),
        AlgebraKind::Lie,
        3,
        &[(1, 2, 3, 1), (2, 1, 3, 4)],
    )
    .unwrap();

    // a soluble non-nilpotent algebra over GF(5): [e1,e2] = 2 e2
    let scaled_r2 = AlgebraPresentation::from_integer_table(
        "r2_gf5",
        FieldTag::GF(5),
        AlgebraKind::Lie,
        2,
        &[(1, 2, 2, 2), (2, 1, 2, 3)],
    )
    .unwrap();

    let mut doc = CatalogDocument::empty();
    doc.add_entry(CatalogEntry::Algebra(h3_gf5)).unwrap();
    doc.add_entry(CatalogEntry::Algebra(scaled_r2)).unwrap();

    let text = emit_catalog(&doc);
    println!("canonical text:\n{text}");

    let reparsed = parse_catalog(&text).unwrap();
    assert_eq!(doc, reparsed);
    println!("round trip: exact\n");

    let checks = parse_checks("validate,series,nilradical-oracle,leib-properties").unwrap();
    let report = run_batch(&reparsed, &checks);
    print!("{}", report.render_text());
    assert!(!report.has_failures());
}
