//! Subdirect-sum membership certificates. A certificate for L lists
//! ideals with zero intersection whose quotients land in a Lie
//! formation K0 or in a declared pool of Leibniz algebras; accepting
//! it confirms L/Leib(L) ∈ K0.

use formations::catalog::builtin;
use formations::certificate::{
    check_certificate, standard_subdirect_certificate, CertificateWitness,
    MembershipCertificate,
};
use formations::formation::FormationSpec;
use formations::series::leib_ideal;

fn main() {
    let soluble = FormationSpec::Soluble;

    // Lie algebras certify themselves with the zero ideal
    let cert = standard_subdirect_certificate(&builtin::r2()).unwrap();
    println!(
        "r2: {} witnesses, pool {}, accepted: {}",
        cert.witnesses.len(),
        cert.pool.len(),
        check_certificate(&cert, &soluble).unwrap()
    );

    // a genuinely Leibniz algebra certifies through the direct sum of
    // its Lie quotient with itself
    let cert = standard_subdirect_certificate(&builtin::p3()).unwrap();
    println!(
        "p3: certificate lives on {} (dim {}), accepted: {}",
        cert.algebra.name(),
        cert.algebra.dim(),
        check_certificate(&cert, &soluble).unwrap()
    );

    // against a formation the Lie quotient misses, the answer is no
    println!(
        "p3 against abelian: {}",
        check_certificate(&cert, &FormationSpec::Abelian).unwrap()
    );

    // structural defects are errors, not membership answers: two copies
    // of the same nonzero ideal cannot have zero intersection
    let p3 = builtin::p3();
    let leib = leib_ideal(&p3).unwrap();
    let broken = MembershipCertificate {
        algebra: p3.clone(),
        pool: Vec::new(),
        witnesses: vec![
            CertificateWitness {
                ideal: leib.clone(),
                target: formations::certificate::CertTarget::InFormation,
            },
            CertificateWitness {
                ideal: leib,
                target: formations::certificate::CertTarget::InFormation,
            },
        ],
    };
    println!(
        "overlapping witnesses: {:?}",
        check_certificate(&broken, &soluble).unwrap_err()
    );
}
