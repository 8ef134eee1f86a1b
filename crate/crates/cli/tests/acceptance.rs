//! Acceptance suite: one test per criterion, each printing a PASS line.
//!
//! Criteria are exercised end to end against the library and the demo /
//! corpus runners, with every tolerance pinned in code (exact set equality
//! everywhere; the only numeric tolerances are the runtime budgets).

use std::sync::Arc;
use std::time::Instant;

use koethe::bits::BitSet;
use koethe::classify::{classify_kothe, necessary_condition_scan, Answer, Assumptions, Caps};
use koethe::group::{materialize_group, GroupDescriptor};
use koethe::group_ring::{augmentation_ideal, build_group_ring, radical_transfer_check};
use koethe::modules::{average_section, find_section, FiniteModule, Linearity, ModuleHom};
use koethe::ring::decomp::is_r_admissible;
use koethe::ring::ideal::{all_ideals, is_pir_both, is_principal, Sidedness};
use koethe::ring::radical::lift_idempotent;
use koethe::ring::{materialize_ring, RingDescriptor, RingTable};

use koethe_cli::{corpus, demo, Question};

fn criterion_rings() -> Vec<RingDescriptor> {
    vec![
        RingDescriptor::galois_field(2, 1),
        RingDescriptor::galois_field(3, 1),
        RingDescriptor::galois_field(2, 2),
        RingDescriptor::galois_field(5, 1),
        RingDescriptor::zmod(4),
        RingDescriptor::zmod(6),
        RingDescriptor::zmod(8),
        RingDescriptor::zmod(9),
    ]
}

fn criterion_groups() -> Vec<GroupDescriptor> {
    let mut groups: Vec<GroupDescriptor> = (1..=6).map(GroupDescriptor::cyclic).collect();
    groups.push(GroupDescriptor::direct_product(vec![
        GroupDescriptor::cyclic(2),
        GroupDescriptor::cyclic(2),
    ]));
    groups.push(GroupDescriptor::symmetric(3));
    groups.push(GroupDescriptor::dihedral(8));
    groups.push(GroupDescriptor::Quaternion8);
    groups
}

/// Materialized criterion-corpus group rings with |`R[G]`| <= 4096.
fn corpus_group_rings() -> Vec<(String, Arc<RingTable>)> {
    let mut out = Vec::new();
    for rd in criterion_rings() {
        let r = materialize_ring(&rd, 65536).unwrap();
        for gd in criterion_groups() {
            let g = materialize_group(&gd).unwrap();
            let size = (r.size() as u128).pow(g.order() as u32);
            if size <= 4096 {
                let s = build_group_ring(&r, &g, 65536).unwrap();
                out.push((format!("{}[{}]", rd.label(), gd.label()), s));
            }
        }
    }
    out
}

#[test]
fn criterion_1_demo_regression() {
    let started = Instant::now();
    let results = demo::run(&Caps::default()).unwrap();
    let by_name = |name: &str| results.iter().find(|r| r.name.contains(name)).unwrap();

    let zq8 = by_name("integral quaternion");
    assert_eq!(zq8.answer, Answer::No);

    let f2s3 = results
        .iter()
        .find(|r| r.ring == "F2" && r.group == "S3" && r.question == Question::Kothe)
        .unwrap();
    assert_eq!(f2s3.answer, Answer::Yes);
    // The exhaustive 64-element scan exhibits a non-central idempotent and
    // settles what the class sum e+g+g^2 actually is (idempotent, central).
    assert!(f2s3
        .extras
        .iter()
        .any(|e| e.contains("64-element") && e.contains("non-central idempotent")));
    assert!(f2s3
        .extras
        .iter()
        .any(|e| e.contains("e + g + g^2") && e.contains("idempotent and central")));
    assert!(f2s3.extras.iter().any(|e| e.contains("discrepancy note")));

    let f3 = by_name("characteristic-3 field over C3xD8");
    assert_eq!(f3.answer, Answer::Yes);
    assert_eq!(f3.decisive_rule.as_deref(), Some("R2"));
    let fired = f3.verdict.trace.iter().find(|r| r.decisive).unwrap();
    assert!(
        fired
            .hypotheses
            .iter()
            .any(|h| h.statement.contains("order 8")),
        "the witness subgroup {{e}} x D8 of order 8 must be cited"
    );

    let f13 = by_name("characteristic-13 field over C3xD8");
    assert_eq!(f13.answer, Answer::Yes);
    assert_eq!(f13.decisive_rule.as_deref(), Some("R1"));
    assert!(f13.verdict.notes().any(|n| n.contains("convention note")));
    assert!(f13.extras.iter().any(|e| e.contains("discrepancy note")));

    // At least six derived fixtures beyond the four literature instances.
    assert!(results.len() >= 10);

    let elapsed = started.elapsed();
    assert!(
        elapsed.as_secs_f64() < 5.0,
        "demo must finish in under 5 s, took {elapsed:?}"
    );
    println!(
        "criterion 1 PASS: demo regression ({} fixtures in {:.2?})",
        results.len(),
        elapsed
    );
}

#[test]
fn criterion_2_oracle_theorem_agreement() {
    let started = Instant::now();
    let report = corpus::run(
        &criterion_rings(),
        &criterion_groups(),
        4096,
        &Caps::default(),
    )
    .unwrap();
    assert!(report.compared > 0, "the corpus must compare instances");
    assert_eq!(
        report.disagreements,
        0,
        "symbolic and oracle verdicts disagree: {:?}",
        report
            .rows
            .iter()
            .filter(|r| r.status == corpus::RowStatus::Disagree)
            .collect::<Vec<_>>()
    );
    let elapsed = started.elapsed();
    assert!(
        elapsed.as_secs() < 600,
        "corpus must finish in under 10 min, took {elapsed:?}"
    );
    println!(
        "criterion 2 PASS: {} instances compared, 0 disagreements in {:.2?}",
        report.compared, elapsed
    );
}

#[test]
fn criterion_3_derived_verdicts() {
    let asm = Assumptions::default();
    let expectations = [
        (
            RingDescriptor::zmod(4),
            GroupDescriptor::cyclic(2),
            Answer::No,
        ),
        (
            RingDescriptor::zmod(4),
            GroupDescriptor::cyclic(3),
            Answer::Yes,
        ),
        (
            RingDescriptor::galois_field(2, 1),
            GroupDescriptor::direct_product(vec![
                GroupDescriptor::cyclic(2),
                GroupDescriptor::cyclic(2),
            ]),
            Answer::No,
        ),
        (
            RingDescriptor::galois_field(2, 1),
            GroupDescriptor::cyclic(4),
            Answer::Yes,
        ),
        (
            RingDescriptor::galois_field(2, 1),
            GroupDescriptor::Quaternion8,
            Answer::No,
        ),
    ];
    for (rd, gd, expected) in &expectations {
        let v = classify_kothe(rd, gd, &asm).unwrap();
        assert_eq!(v.answer, *expected, "{}[{}]", rd.label(), gd.label());
    }

    // Z4[C2]: the oracle finds a reproducible non-principal witness.
    let z4c2 = materialize_ring(
        &RingDescriptor::group_ring(RingDescriptor::zmod(4), GroupDescriptor::cyclic(2)),
        65536,
    )
    .unwrap();
    let first = is_pir_both(&z4c2, 100_000).unwrap();
    assert!(!first.is_pir);
    let witness = first.witness.clone().unwrap();
    assert!(is_principal(&z4c2, &witness).is_none());
    let second = is_pir_both(&z4c2, 100_000).unwrap();
    assert_eq!(
        witness,
        second.witness.unwrap(),
        "witness must be deterministic"
    );

    // Z4[C3]: the principal-ideal property is confirmed on all 64 elements.
    let z4c3 = materialize_ring(
        &RingDescriptor::group_ring(RingDescriptor::zmod(4), GroupDescriptor::cyclic(3)),
        65536,
    )
    .unwrap();
    assert_eq!(z4c3.size(), 64);
    assert!(is_pir_both(&z4c3, 100_000).unwrap().is_pir);

    // F2[C4]: chain ring, the ideal lattice is a 5-chain.
    let f2c4 = materialize_ring(
        &RingDescriptor::group_ring(
            RingDescriptor::galois_field(2, 1),
            GroupDescriptor::cyclic(4),
        ),
        65536,
    )
    .unwrap();
    let lattice = all_ideals(&f2c4, Sidedness::Left, 100_000).unwrap();
    assert_eq!(lattice.len(), 5);
    for window in lattice.windows(2) {
        assert!(
            window[0].members.is_subset(&window[1].members),
            "the lattice must be totally ordered"
        );
    }

    // F2[Q8]: non-PIR confirmed by the exhaustive closure on 256 elements.
    let f2q8 = materialize_ring(
        &RingDescriptor::group_ring(
            RingDescriptor::galois_field(2, 1),
            GroupDescriptor::Quaternion8,
        ),
        65536,
    )
    .unwrap();
    assert_eq!(f2q8.size(), 256);
    let outcome = is_pir_both(&f2q8, 100_000).unwrap();
    assert!(!outcome.is_pir);
    let w = outcome.witness.unwrap();
    w.verify(&f2q8).unwrap();
    assert!(is_principal(&f2q8, &w).is_none());
    let again = is_pir_both(&f2q8, 100_000).unwrap();
    assert_eq!(w, again.witness.unwrap());

    println!("criterion 3 PASS: five derived verdicts with reproducible witnesses");
}

#[test]
fn criterion_4_radical_identities() {
    // J(F_p[C_{p^k}]) equals the augmentation ideal.
    for (p, n) in [(2usize, 2usize), (2, 4), (3, 3)] {
        let r = materialize_ring(&RingDescriptor::galois_field(p, 1), 65536).unwrap();
        let g = materialize_group(&GroupDescriptor::cyclic(n)).unwrap();
        let s = build_group_ring(&r, &g, 65536).unwrap();
        let radical = s.jacobson_radical().ideal.clone();
        let aug = augmentation_ideal(&s).unwrap();
        assert_eq!(
            radical.members.to_vec(),
            aug.members.to_vec(),
            "F{p}[C{n}]: radical vs augmentation ideal"
        );
    }

    // J(R[G]) = J(R)·R[G] for (Z4, C3) and (Z9, C2).
    for (rd, gd) in [
        (RingDescriptor::zmod(4), GroupDescriptor::cyclic(3)),
        (RingDescriptor::zmod(9), GroupDescriptor::cyclic(2)),
    ] {
        let r = materialize_ring(&rd, 65536).unwrap();
        let g = materialize_group(&gd).unwrap();
        let t = radical_transfer_check(&r, &g, 65536).unwrap();
        assert!(t.preconditions_hold);
        assert!(t.containment);
        assert!(t.equal, "{}[{}]", rd.label(), gd.label());
    }

    // Maschke semisimplicity across the field corpus: char does not divide
    // |G| forces a zero radical.
    let mut checked = 0;
    for rd in [
        RingDescriptor::galois_field(2, 1),
        RingDescriptor::galois_field(3, 1),
        RingDescriptor::galois_field(2, 2),
        RingDescriptor::galois_field(5, 1),
    ] {
        let r = materialize_ring(&rd, 65536).unwrap();
        let p = r.characteristic();
        for gd in criterion_groups() {
            let g = materialize_group(&gd).unwrap();
            if g.order() % p == 0 {
                continue;
            }
            if (r.size() as u128).pow(g.order() as u32) > 4096 {
                continue;
            }
            let s = build_group_ring(&r, &g, 65536).unwrap();
            assert!(
                s.is_semiprimitive(),
                "{}[{}] must be semisimple",
                rd.label(),
                gd.label()
            );
            checked += 1;
        }
    }
    assert!(checked >= 8);
    println!("criterion 4 PASS: radical identities (including {checked} semisimplicity checks)");
}

#[test]
fn criterion_5_idempotent_lifting() {
    let mut rings_with_radical = 0;
    let mut lifts = 0;
    for (label, s) in corpus_group_rings() {
        let radical = s.jacobson_radical().clone();
        if radical.ideal.is_zero() {
            continue;
        }
        rings_with_radical += 1;
        let bound = (radical.nilpotency_index as f64).log2().ceil().max(1.0) as usize;
        let q = s.quotient_ring(&radical.ideal).unwrap();
        for ebar in q.ring.idempotents() {
            let x0 = q.reps[ebar];
            let lift = lift_idempotent(&s, &radical.ideal, x0).unwrap();
            assert_eq!(
                s.mul(lift.idempotent, lift.idempotent),
                lift.idempotent,
                "{label}: lift must be idempotent"
            );
            assert!(
                radical.ideal.members.contains(s.sub(lift.idempotent, x0)),
                "{label}: lift must project to the input"
            );
            assert!(
                lift.iterations <= bound,
                "{label}: {} iterations exceeds ceil(log2({}))",
                lift.iterations,
                radical.nilpotency_index
            );
            lifts += 1;
        }
    }
    assert!(rings_with_radical >= 10);
    println!(
        "criterion 5 PASS: {lifts} idempotents lifted over {rings_with_radical} rings with nonzero radical"
    );
}

/// The coefficient ring as a module over S = `R[G]` via the augmentation.
fn projection_hom(l: &Arc<FiniteModule>, sub: &BitSet) -> (Arc<FiniteModule>, ModuleHom) {
    let (quotient, project) = l.quotient(sub).unwrap();
    let m = Arc::new(quotient);
    let map: Vec<u32> = project.iter().map(|&x| x as u32).collect();
    let psi = ModuleHom::new(Arc::clone(l), Arc::clone(&m), map, Linearity::GroupRing).unwrap();
    (m, psi)
}

#[test]
fn criterion_6_averaging_sections() {
    // For every corpus pair with |G|·1 invertible, every generated
    // surjection fixture with a coefficient-ring section must average to a
    // verified group-ring-linear section.
    let mut pairs = 0;
    let mut averaged = 0;
    for rd in criterion_rings() {
        let r = materialize_ring(&rd, 65536).unwrap();
        for gd in criterion_groups() {
            let g = materialize_group(&gd).unwrap();
            let size = (r.size() as u128).pow(g.order() as u32);
            if size > 256 || !r.is_n_one_unit(g.order()) {
                continue;
            }
            pairs += 1;
            let s = build_group_ring(&r, &g, 65536).unwrap();
            let l = Arc::new(FiniteModule::regular(&s));
            let ideals = all_ideals(&s, Sidedness::Left, 100_000).unwrap();
            for ideal in ideals.iter().take(12) {
                if ideal.size() == s.size() {
                    continue; // quotient by the whole ring is trivial
                }
                let (_m, psi) = projection_hom(&l, &ideal.members);
                let phit = match find_section(&psi, Linearity::CoefficientRing, 1 << 20) {
                    Ok(Some(h)) => h,
                    Ok(None) => continue,
                    Err(koethe::Error::CapExceeded { .. }) => continue,
                    Err(e) => panic!("section search failed: {e}"),
                };
                let phi = average_section(&psi, &phit).unwrap();
                assert_eq!(phi.linearity, Linearity::GroupRing);
                assert!(phi.is_section_of(&psi));
                averaged += 1;
            }
        }
    }
    assert!(
        pairs >= 10,
        "expected at least 10 unit-order pairs, got {pairs}"
    );
    assert!(
        averaged >= 20,
        "expected at least 20 averaged sections, got {averaged}"
    );

    // The negative instance: F2[C2] -> F2 admits an F2-linear section but
    // no group-ring-linear one (|G|·1 = 0 blocks the averaging).
    let s = materialize_ring(
        &RingDescriptor::group_ring(
            RingDescriptor::galois_field(2, 1),
            GroupDescriptor::cyclic(2),
        ),
        65536,
    )
    .unwrap();
    let l = Arc::new(FiniteModule::regular(&s));
    let aug = augmentation_ideal(&s).unwrap();
    let (_m, psi) = projection_hom(&l, &aug.members);
    assert!(find_section(&psi, Linearity::CoefficientRing, 1 << 20)
        .unwrap()
        .is_some());
    assert!(find_section(&psi, Linearity::GroupRing, 1 << 20)
        .unwrap()
        .is_none());

    println!("criterion 6 PASS: {averaged} averaged sections over {pairs} pairs; F2[C2] negative case confirmed");
}

#[test]
fn criterion_7_admissibility() {
    // Pinned values first.
    let z4 = materialize_ring(&RingDescriptor::zmod(4), 65536).unwrap();
    let c3 = materialize_group(&GroupDescriptor::cyclic(3)).unwrap();
    let c2 = materialize_group(&GroupDescriptor::cyclic(2)).unwrap();
    assert!(is_r_admissible(&z4, &c3, 65536, 100_000).unwrap());
    assert!(!is_r_admissible(&z4, &c2, 65536, 100_000).unwrap());

    // Every local artinian principal-ideal coefficient ring in the corpus
    // with |G|·1 invertible and R[G] abelian must be admissible.
    let mut checked = 0;
    for rd in criterion_rings() {
        let r = materialize_ring(&rd, 65536).unwrap();
        if r.is_local().is_none() || !is_pir_both(&r, 100_000).unwrap().is_pir {
            continue;
        }
        for gd in criterion_groups() {
            let g = materialize_group(&gd).unwrap();
            if !r.is_n_one_unit(g.order()) {
                continue;
            }
            let size = (r.size() as u128).pow(g.order() as u32);
            if size > 4096 {
                continue;
            }
            let s = build_group_ring(&r, &g, 65536).unwrap();
            if !s.is_abelian_ring() {
                continue;
            }
            assert!(
                is_r_admissible(&r, &g, 65536, 100_000).unwrap(),
                "{}[{}] must be admissible",
                rd.label(),
                gd.label()
            );
            checked += 1;
        }
    }
    assert!(checked >= 10);
    println!("criterion 7 PASS: admissibility holds on {checked} corpus pairs; (Z4, C3) true and (Z4, C2) false");
}

#[test]
fn criterion_8_necessary_condition_scan() {
    let r = materialize_ring(&RingDescriptor::zmod(4), 65536).unwrap();
    let g = materialize_group(&GroupDescriptor::cyclic(6)).unwrap();
    let caps = Caps {
        scan_quotient_size: 256,
        ..Default::default()
    };
    let outcome = necessary_condition_scan(&r, &g, &caps).unwrap();
    assert!(
        outcome
            .refutations
            .iter()
            .any(|rf| rf.quotient_ring_size == 16 && rf.subgroup.order() == 3),
        "the scan must surface the 16-element refuting quotient"
    );

    // The verdict is No with every materialization capped at 4096 elements.
    let asm = Assumptions {
        caps: Caps {
            ring_size: 4096,
            ..Default::default()
        },
        ..Default::default()
    };
    let v = classify_kothe(&RingDescriptor::zmod(4), &GroupDescriptor::cyclic(6), &asm).unwrap();
    assert_eq!(v.answer, Answer::No);
    println!(
        "criterion 8 PASS: scan surfaced {} refutation(s); verdict No under the 4096 cap",
        outcome.refutations.len()
    );
}
