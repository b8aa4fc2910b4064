//! Derived and lower central series for the built-in algebras, with
//! the solubility and nilpotency verdicts they determine.

use formations::catalog::builtin;
use formations::series::{derived_series, lower_central_series};

fn main() {
    let doc = builtin::document();
    println!(
        "{:8} {:22} {:22} {:8} nilpotent",
        "algebra", "derived dims", "lower central dims", "soluble"
    );
    for a in doc.algebras() {
        let derived = derived_series(a);
        let lower = lower_central_series(a);
        println!(
            "{:8} {:22} {:22} {:8} {}",
            a.name(),
            format!("{:?}", derived.dims()),
            format!("{:?}", lower.dims()),
            derived.reaches_zero(),
            lower.reaches_zero()
        );
    }

    // sl2 is perfect: its derived series never moves
    let sl2 = builtin::sl2();
    assert_eq!(derived_series(&sl2).dims(), vec![3]);
    println!("\nsl2 derived series is constant: perfect, hence not soluble");
}
