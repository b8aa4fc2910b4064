//! Compares loc(K) membership with L/N(L) ∈ K over the prime fields,
//! where the two predicates define the same class, and over Q, where
//! the comparison is informational.

use formations::catalog::builtin;
use formations::formation::{fn_theorem_check, FormationSpec};
use formations::series::is_soluble;

fn main() {
    let inners: Vec<FormationSpec> = ["zero", "abelian", "nilpotent", "soluble"]
        .iter()
        .map(|s| s.parse().unwrap())
        .collect();

    let doc = builtin::document();
    for a in doc.algebras() {
        if !is_soluble(a) {
            println!("{:8} skipped: not soluble", a.name());
            continue;
        }
        for inner in &inners {
            let report = fn_theorem_check(a, inner).unwrap();
            let tag = if report.informational {
                "info "
            } else if report.agree {
                "agree"
            } else {
                "DISAGREE"
            };
            println!(
                "{:8} inner {:9} loc {:5} nilpotent-by {:5} [{tag}]",
                a.name(),
                inner.to_string(),
                report.loc_member,
                report.nilpotent_by_member
            );
            if !report.informational {
                assert!(report.agree);
            }
        }
    }
}
