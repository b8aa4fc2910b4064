//! Membership of the built-in algebras in a few formations given by
//! the spec syntax, including the locally defined variant loc(K) that
//! inspects L/C_L(H/K) for every chief factor.

use formations::catalog::builtin;
use formations::formation::{formation_membership, FormationSpec};
use formations::series::is_soluble;

fn main() {
    let specs: Vec<FormationSpec> = [
        "abelian",
        "nilpotent",
        "supersoluble",
        "loc(zero)",
        "loc(abelian)",
        "nilpotent-by(abelian)",
    ]
    .iter()
    .map(|s| s.parse().unwrap())
    .collect();

    let doc = builtin::document();
    print!("{:8}", "algebra");
    for spec in &specs {
        print!(" {:>21}", spec.to_string());
    }
    println!();

    for a in doc.algebras() {
        print!("{:8}", a.name());
        for spec in &specs {
            let cell = if spec.needs_chief_series() && !is_soluble(a) {
                "insoluble".to_string()
            } else {
                formation_membership(a, spec).unwrap().to_string()
            };
            print!(" {cell:>21}");
        }
        println!();
    }

    // loc(zero) is the nilpotency predicate: the centralizer quotients
    // are all zero exactly when every chief factor is central
    println!("\nloc(zero) column equals the nilpotent column above");
}
