//! Builds a chief series step by step for e4_gf2, the 4-dimensional
//! Lie algebra over GF(2) whose bottom chief factor is 2-dimensional,
//! then prints each factor with its centralizer.
//!
//! The series ascends through minimal ideals of successive quotients;
//! each factor H/K is an irreducible bimodule and its centralizer
//! C = {x : xH ⊆ K and Hx ⊆ K} is an ideal of the whole algebra.

use formations::catalog::builtin;
use formations::series::chief_series;

fn main() {
    let e4 = builtin::e4_gf2();
    let series = chief_series(&e4).unwrap();

    println!("chief series of {} (dim {}):", e4.name(), e4.dim());
    for (i, ideal) in series.ideals.iter().enumerate() {
        println!("  I_{}: dim {}", i, ideal.dim());
    }

    println!("\nfactors:");
    for (i, factor) in series.factors.iter().enumerate() {
        let centralizer = &series.centralizers[i];
        let kernel = factor.representation_kernel().unwrap();
        println!(
            "  {}: dim {}, irreducible {}, centralizer dim {} (= representation kernel: {})",
            factor.name(),
            factor.dim_v(),
            factor.is_irreducible().unwrap(),
            centralizer.dim(),
            kernel.space() == centralizer
        );
    }

    // supersolubility fails precisely because of the 2-dimensional factor
    let dims = series.factor_dims();
    println!("\nfactor dimensions {dims:?}: supersoluble iff all are 1");

    // the Q Leibniz example p3 has a one-dimensional bottom factor that is
    // antisymmetric (the module the algebra was built from)
    let p3 = builtin::p3();
    let series = chief_series(&p3).unwrap();
    println!("\nchief factor classes of {}:", p3.name());
    for factor in &series.factors {
        println!(
            "  {}: dim {}, {}",
            factor.name(),
            factor.dim_v(),
            factor.classify_dichotomy().unwrap()
        );
    }
}
