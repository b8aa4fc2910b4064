//! Computes nilradicals as intersections of chief factor centralizers
//! and confirms them against exhaustive subspace enumeration over
//! GF(2) and GF(3).

use formations::catalog::builtin;
use formations::enumerate::all_subspaces;
use formations::scalar::FieldTag;
use formations::series::{is_nilpotent, is_soluble, nilradical};

fn main() {
    for a in [builtin::r2_gf2(), builtin::r2_gf3(), builtin::e4_gf2(), builtin::p4_gf2()] {
        let p = match a.field() {
            FieldTag::GF(p) => p,
            FieldTag::Q => unreachable!("all chosen examples are modular"),
        };
        assert!(is_soluble(&a));
        let n = nilradical(&a).unwrap();

        // oracle: every subspace, keep the nilpotent ideals, demand a
        // unique maximum
        let mut best: Option<_> = None;
        let mut count = 0usize;
        for space in all_subspaces(p, a.dim()) {
            if !a.is_ideal(&space).unwrap() {
                continue;
            }
            let sub = a.restrict_to_subalgebra(&space).unwrap();
            if !is_nilpotent(&sub) {
                continue;
            }
            count += 1;
            let dim = space.dim();
            match &best {
                Some((d, _)) if *d >= dim => {}
                _ => best = Some((dim, space)),
            }
        }
        let (dim, space) = best.unwrap();
        println!(
            "{:8} GF({}): nilradical dim {} | {} nilpotent ideals enumerated, max dim {}, equal: {}",
            a.name(),
            p,
            n.dim(),
            count,
            dim,
            space == *n.space()
        );
        assert_eq!(space, *n.space());
    }
}
