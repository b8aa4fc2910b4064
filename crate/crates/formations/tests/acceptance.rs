//! Acceptance gate: one test per criterion, each printing a single
//! verdict line. Run with `cargo test --test acceptance -- --nocapture`
//! to see the lines.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use formations::algebra::{fiber_product, unit_vector};
use formations::batch::{parse_checks, run_batch};
use formations::catalog::{builtin, emit_catalog, parse_catalog};
use formations::certificate::{check_certificate, CertTarget, CertificateWitness, MembershipCertificate};
use formations::counterexample::generate_counterexample;
use formations::enumerate::all_subspaces;
use formations::formation::{char0_abelian_quotient_check, formation_membership, FormationSpec};
use formations::module::DichotomyClass;
use formations::sampling::random_soluble_algebra;
use formations::series::{chief_series, is_nilpotent, is_soluble, leib_ideal, nilradical};
use formations::{
    AlgebraKind, AlgebraPresentation, FieldTag, IdealHandle, MatrixExact, Morphism, SubspaceBasis,
};

fn verdict(criterion: &str, pass: bool) {
    println!("acceptance {criterion}: {}", if pass { "pass" } else { "FAIL" });
    assert!(pass, "criterion failed: {criterion}");
}

#[test]
fn criterion_1_identities() {
    let doc = builtin::document();
    let mut ok = true;
    for a in doc.algebras() {
        ok &= a.validate().is_valid();
    }
    for m in doc.modules() {
        ok &= m.verify().is_valid();
    }
    for name in ["p3", "p4_gf2"] {
        let a = builtin::algebra(name);
        ok &= !a.validate_as(AlgebraKind::Lie).is_valid();
        ok &= a.validate_as(AlgebraKind::Leibniz).is_valid();
    }
    verdict("1 identity suite", ok);
}

#[test]
fn criterion_2_char0_abelian_quotients() {
    let mut corpus: Vec<AlgebraPresentation> = builtin::document()
        .algebras()
        .filter(|a| a.field() == FieldTag::Q && a.kind() == AlgebraKind::Lie && is_soluble(a))
        .cloned()
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(20);
    for i in 0..50 {
        let dim = 2 + (i % 5);
        corpus.push(random_soluble_algebra(&mut rng, FieldTag::Q, dim, false).unwrap());
    }
    let mut ok = !corpus.is_empty();
    for l in &corpus {
        let report = char0_abelian_quotient_check(l).unwrap();
        ok &= report.pass;
    }
    verdict("2 char-0 abelian quotient suite (53 algebras)", ok);
}

fn brute_force_nilradical(l: &AlgebraPresentation) -> Option<SubspaceBasis> {
    let p = match l.field() {
        FieldTag::GF(p) => p,
        FieldTag::Q => return None,
    };
    let mut nilpotent_ideals = Vec::new();
    for space in all_subspaces(p, l.dim()) {
        if !l.is_ideal(&space).unwrap() {
            continue;
        }
        let sub = l.restrict_to_subalgebra(&space).unwrap();
        if is_nilpotent(&sub) {
            nilpotent_ideals.push(space);
        }
    }
    let max_dim = nilpotent_ideals.iter().map(SubspaceBasis::dim).max()?;
    let mut maximal = nilpotent_ideals.iter().filter(|s| s.dim() == max_dim);
    let winner = maximal.next()?.clone();
    if maximal.next().is_some() {
        return None;
    }
    // uniqueness of the maximum: every nilpotent ideal sits inside it
    for candidate in &nilpotent_ideals {
        if !candidate.is_subspace_of(&winner).unwrap() {
            return None;
        }
    }
    Some(winner)
}

#[test]
fn criterion_3_nilradical_oracle() {
    let mut corpus: Vec<AlgebraPresentation> = builtin::document()
        .algebras()
        .filter(|a| matches!(a.field(), FieldTag::GF(2) | FieldTag::GF(3)) && a.dim() <= 4)
        .cloned()
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(30);
    for i in 0..25 {
        let field = if i % 2 == 0 { FieldTag::GF(2) } else { FieldTag::GF(3) };
        let dim = 2 + (i % 3);
        corpus.push(random_soluble_algebra(&mut rng, field, dim, true).unwrap());
    }
    let mut ok = corpus.len() >= 29;
    for l in &corpus {
        assert!(is_soluble(l), "corpus member {} must be soluble", l.name());
        let computed = nilradical(l).unwrap();
        match brute_force_nilradical(l) {
            Some(oracle) => ok &= oracle == *computed.space(),
            None => ok = false,
        }
    }
    verdict("3 nilradical oracle (29 algebras)", ok);
}

#[test]
fn criterion_4_fn_theorem() {
    let inners = [
        FormationSpec::Zero,
        FormationSpec::Abelian,
        FormationSpec::Nilpotent,
        FormationSpec::Soluble,
    ];
    let mut ok = true;
    for l in builtin::document().algebras() {
        if matches!(l.field(), FieldTag::GF(2) | FieldTag::GF(3)) && is_soluble(l) {
            for inner in &inners {
                let loc = formation_membership(
                    l,
                    &FormationSpec::LocallyDefined(Box::new(inner.clone())),
                )
                .unwrap();
                let nil_by = formation_membership(
                    l,
                    &FormationSpec::NilpotentBy(Box::new(inner.clone())),
                )
                .unwrap();
                ok &= loc == nil_by;
            }
        }
        // loc(zero) = nilpotency, on every soluble entry over any field
        if is_soluble(l) {
            let loc_zero = formation_membership(
                l,
                &FormationSpec::LocallyDefined(Box::new(FormationSpec::Zero)),
            )
            .unwrap();
            ok &= loc_zero == is_nilpotent(l);
        }
    }
    verdict("4 F/N theorem suite", ok);
}

#[test]
fn criterion_5_leib_properties() {
    let mut ok = true;
    for l in builtin::document().algebras() {
        let leib = leib_ideal(l).unwrap();
        let right = l.product_subspaces(leib.space(), &l.full_space()).unwrap();
        ok &= right.is_zero();
        let square = l.product_subspaces(leib.space(), leib.space()).unwrap();
        ok &= square.is_zero();
        let (q, _) = l.quotient(&leib).unwrap();
        ok &= q.validate_as(AlgebraKind::Lie).is_valid();
    }
    verdict("5 Leib ideal suite", ok);
}

#[test]
fn criterion_6_dichotomy() {
    let mut corpus: Vec<AlgebraPresentation> = builtin::document()
        .algebras()
        .filter(|a| is_soluble(a))
        .cloned()
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(60);
    for i in 0..20 {
        let field = if i % 2 == 0 { FieldTag::GF(2) } else { FieldTag::GF(3) };
        corpus.push(random_soluble_algebra(&mut rng, field, 2 + (i % 3), true).unwrap());
    }
    let mut ok = true;
    let mut factors_seen = 0usize;
    for l in &corpus {
        for factor in &chief_series(l).unwrap().factors {
            factors_seen += 1;
            let class = factor.classify_dichotomy().unwrap();
            ok &= class != DichotomyClass::Neither;
        }
    }
    ok &= factors_seen >= 30;
    verdict("6 dichotomy suite", ok);
}

#[test]
fn criterion_7_counterexamples() {
    let q_case = generate_counterexample(&builtin::r2(), &builtin::module("lambda")).unwrap();
    let mut ok = q_case.algebra.same_structure(&builtin::p3());
    ok &= q_case.module_ideal.space() == leib_ideal(&q_case.algebra).unwrap().space();
    let (q, _) = q_case.algebra.quotient(&q_case.module_ideal).unwrap();
    ok &= q.same_structure(&builtin::r2().into_leibniz_kind());

    let gf2_case = generate_counterexample(&builtin::r2_gf2(), &builtin::module("w")).unwrap();
    ok &= gf2_case.algebra.same_structure(&builtin::p4_gf2());
    ok &= gf2_case.module_ideal.space() == leib_ideal(&gf2_case.algebra).unwrap().space();
    let (q, _) = gf2_case.algebra.quotient(&gf2_case.module_ideal).unwrap();
    ok &= q.same_structure(&builtin::r2_gf2().into_leibniz_kind());

    verdict("7 counterexample suite", ok);
}

#[test]
fn criterion_8_subdirect_devices() {
    // fiber product of the two projections r2 -> r2/<e2>
    let r2 = builtin::r2();
    let line = IdealHandle::new(
        &r2,
        SubspaceBasis::span(FieldTag::Q, 2, &[unit_vector(FieldTag::Q, 2, 1)]).unwrap(),
    )
    .unwrap();
    let (_, pi1) = r2.quotient(&line).unwrap();
    let (_, pi2) = r2.quotient(&line).unwrap();
    let fiber = fiber_product(&pi1, &pi2).unwrap();
    let mut ok = fiber.algebra.validate().is_valid();
    ok &= fiber.algebra.dim() == 3;
    ok &= fiber.proj_left.is_surjective() && fiber.proj_right.is_surjective();

    // certificate for direct_sum(r2, p3) with the two summand complements
    let p3 = builtin::p3();
    let r2_leibniz = r2.clone().into_leibniz_kind();
    let sum = r2_leibniz.direct_sum(&p3).unwrap();
    let first = IdealHandle::new(
        &sum,
        SubspaceBasis::span(
            FieldTag::Q,
            5,
            &[unit_vector(FieldTag::Q, 5, 0), unit_vector(FieldTag::Q, 5, 1)],
        )
        .unwrap(),
    )
    .unwrap();
    let second = IdealHandle::new(
        &sum,
        SubspaceBasis::span(
            FieldTag::Q,
            5,
            &[
                unit_vector(FieldTag::Q, 5, 2),
                unit_vector(FieldTag::Q, 5, 3),
                unit_vector(FieldTag::Q, 5, 4),
            ],
        )
        .unwrap(),
    )
    .unwrap();
    // sum/second ≅ r2 (Lie, in K0) and sum/first ≅ p3 (pool member)
    let (quotient_to_p3, _) = sum.quotient(&first).unwrap();
    let iso = Morphism::new(quotient_to_p3, p3.clone(), MatrixExact::identity(FieldTag::Q, 3))
        .unwrap();
    let cert = MembershipCertificate {
        algebra: sum,
        pool: vec![p3],
        witnesses: vec![
            CertificateWitness {
                ideal: second,
                target: CertTarget::InFormation,
            },
            CertificateWitness {
                ideal: first,
                target: CertTarget::PoolMember {
                    index: 0,
                    iso: Box::new(iso),
                },
            },
        ],
    };
    ok &= check_certificate(&cert, &FormationSpec::Soluble).unwrap();
    verdict("8 subdirect-sum devices", ok);
}

#[test]
fn criterion_9_format_determinism() {
    let doc = builtin::document();
    let emitted = emit_catalog(&doc);
    let reparsed = parse_catalog(&emitted).unwrap();
    let mut ok = reparsed == doc;
    ok &= emit_catalog(&reparsed) == emitted;

    let checks = parse_checks(
        "validate,series,nilradical-oracle,char0-abelian,fn-theorem:abelian,\
         leib-properties,dichotomy,certificate",
    )
    .unwrap();
    let first = run_batch(&doc, &checks);
    let second = run_batch(&doc, &checks);
    ok &= first.render_text() == second.render_text();
    ok &= first.render_json() == second.render_json();
    ok &= !first.has_failures();
    verdict("9 format and determinism suite", ok);
}
