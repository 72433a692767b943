mod common;

use common::*;
use kummerlab_core::dualgraph::DynkinClass;
use kummerlab_core::effmodel::FiberType;
use kummerlab_core::kummer::{
    check_admissible, check_pair_admissible, predict_rdp, resolution_checklist,
    BaseChangeRecommendation, Flag, KummerError,
};
use kummerlab_core::localtate::KodairaSymbol;
use kummerlab_core::numring::NumberRing;
use kummerlab_core::weierstrass::WeierstrassModel;

#[test]
fn pinch_curves_are_admissible() {
    for sign in [1, -1] {
        let rep = check_admissible(&pinch(sign)).unwrap();
        assert!(rep.verdict, "{:?}", rep.reasons);
        assert_eq!(rep.primes.len(), 1);
        let p = &rep.primes[0];
        assert_eq!(p.residue_char, 2);
        assert_eq!(p.symbol, KodairaSymbol::II);
        // val(b₂a₄+b₆) = 2 = 2·val(2,a₁,a₃)
        assert_eq!(p.val_key, Some(2));
        assert_eq!(p.val_d, Some(1));
        assert_eq!(p.fiber_type, Some(FiberType::Mu2));
        assert_eq!(p.fixed_components, Some(4));
    }
}

#[test]
fn rejects_fail_with_the_printed_valuations() {
    let cases = [
        (reject_gaussian(), 6i64, "24i"),
        (reject_sqrt_m2_first(), 6, "24"),
        (reject_sqrt_m2_second(), 4, "4"),
    ];
    for (m, vk, label) in cases {
        let rep = check_admissible(&m).unwrap();
        assert!(!rep.verdict, "{label} must be rejected");
        let p2 = rep
            .primes
            .iter()
            .find(|p| p.residue_char == 2)
            .expect("a prime above two");
        assert_eq!(p2.flag_i, Flag::Fail, "{label}: failing clause is freeness");
        assert_eq!(p2.flag_ii, Flag::Pass, "{label}: reduction is additive at two");
        assert_eq!(p2.val_key, Some(vk), "{label}");
        assert_eq!(p2.val_d, Some(1), "{label}");
    }
    // the exact key elements
    let g = NumberRing::quadratic(-1).unwrap();
    assert_eq!(check_admissible(&reject_gaussian()).unwrap().key_identity, g.quad(0, 24));
    let r = NumberRing::quadratic(-2).unwrap();
    assert_eq!(
        check_admissible(&reject_sqrt_m2_first()).unwrap().key_identity,
        r.from_i64(24)
    );
    assert_eq!(
        check_admissible(&reject_sqrt_m2_second()).unwrap().key_identity,
        r.from_i64(4)
    );
}

#[test]
fn table_curves_are_admissible() {
    for idx in 0..8 {
        let rep = check_admissible(&table_curve(idx)).unwrap();
        assert!(rep.verdict, "curve {idx}: {:?}", rep.reasons);
        for p in &rep.primes {
            if p.residue_char == 2 {
                assert_eq!(p.fiber_type, Some(FiberType::ConstantZ2));
                assert_eq!(p.flag_iii, Flag::Pass, "curve {idx} ordinary at {}", p.label);
            }
        }
    }
}

#[test]
fn pair_logic() {
    // the conjugate pair over Z[ω]
    let rep = check_pair_admissible(&pinch(1), &pinch(-1)).unwrap();
    assert!(rep.verdict, "{:?}", rep.reasons);
    assert!(rep.char_two.iter().all(|r| r.iii_star && r.isomorphic_effective_models));

    // a single admissible curve pairs with itself
    for idx in [0, 4] {
        let m = table_curve(idx);
        let rep = check_pair_admissible(&m, &m).unwrap();
        assert!(rep.verdict);
        // and agrees with the single-curve certificate
        assert_eq!(rep.left.verdict, check_admissible(&m).unwrap().verdict);
    }

    // same-field pairs from the table
    for (a, b) in [(0, 1), (2, 3), (4, 5), (4, 6), (6, 7)] {
        let rep = check_pair_admissible(&table_curve(a), &table_curve(b)).unwrap();
        assert!(rep.verdict, "pair ({a},{b}): {:?}", rep.reasons);
    }

    // mismatched rings error out
    assert!(matches!(
        check_pair_admissible(&pinch(1), &table_curve(0)),
        Err(KummerError::MismatchedRings)
    ));

    // differing bad-prime sets are rejected
    let r = NumberRing::quadratic(-3).unwrap();
    let other = WeierstrassModel::new(r, [r.one(), r.zero(), r.zero(), r.zero(), r.one()])
        .unwrap();
    let rep = check_pair_admissible(&pinch(1), &other).unwrap();
    assert!(!rep.verdict);
    assert!(!rep.same_bad_primes);
    assert!(rep.reasons.iter().any(|s| s.contains("bad-prime sets differ")));
}

#[test]
fn rdp_predictor_covers_the_table() {
    // away from two
    let c = predict_rdp(3, FiberType::ConstantZ2, None, None).unwrap();
    assert_eq!(c.label(), "16A1");
    assert_eq!(c.total_rank(), 16);
    assert!(!c.has_critical());

    // multiplicative at two
    let c = predict_rdp(2, FiberType::Mu2, None, None).unwrap();
    assert_eq!(c.total_rank(), 20);
    assert!(c.has_critical());
    assert_eq!(
        c.entries.iter().map(|e| (e.class, e.count)).collect::<Vec<_>>(),
        vec![(DynkinClass::A(1), 16), (DynkinClass::D(4), 1)]
    );

    // unipotent at two, both selectors
    let c = predict_rdp(2, FiberType::Alpha2, None, Some((2, 2))).unwrap();
    assert_eq!(
        c.entries.iter().map(|e| (e.class, e.count)).collect::<Vec<_>>(),
        vec![(DynkinClass::D(4), 4), (DynkinClass::D(4), 1)]
    );
    assert_eq!(c.total_rank(), 20);
    let c = predict_rdp(2, FiberType::Alpha2, None, Some((1, 2))).unwrap();
    assert_eq!(c.entries[0], kummerlab_core::kummer::RdpEntry {
        class: DynkinClass::D(8),
        count: 2,
        critical: false
    });
    assert_eq!(c.total_rank(), 20);

    // ordinary constant rows
    let c = predict_rdp(2, FiberType::ConstantZ2, Some(4), None).unwrap();
    assert_eq!(c.label(), "4D4");
    assert_eq!(c.total_rank(), 16);
    let c = predict_rdp(2, FiberType::ConstantZ2, Some(2), None).unwrap();
    assert_eq!(c.label(), "2D8");
    assert_eq!(c.total_rank(), 16);

    // inconsistent inputs
    assert!(predict_rdp(2, FiberType::ConstantZ2, Some(3), None).is_err());
    assert!(predict_rdp(2, FiberType::Alpha2, None, Some((1, 1))).is_err());
    assert!(predict_rdp(3, FiberType::Mu2, None, None).is_err());
}

#[test]
fn checklist_for_the_conjugate_pair_recommends_the_tame_cubic() {
    let (l, r) = (pinch(1), pinch(-1));
    let pair = check_pair_admissible(&l, &r).unwrap();
    let cl = resolution_checklist(&l, &r, &pair).unwrap();
    assert!(cl.third_root_of_unity_in_field);
    assert!(cl.critical_residue_field_equals_base);
    assert_eq!(cl.two_torsion_constant, Flag::Pass);
    assert_eq!(cl.isomorphic_after_sh, Flag::Pass);
    assert_eq!(cl.quadratic_good_reduction, Flag::Pass);
    assert_eq!(cl.recommendation, BaseChangeRecommendation::TameCubic);
    let rec = &cl.per_prime[0];
    assert_eq!(rec.kraus_order, Some(6));
    assert_eq!(rec.base_changed_symbol, Some(KodairaSymbol::IStar(0)));
}

#[test]
fn checklist_for_good_reduction_pairs_needs_no_base_change() {
    for (a, b) in [(0usize, 1usize), (2, 3), (4, 6)] {
        let (l, r) = (table_curve(a), table_curve(b));
        let pair = check_pair_admissible(&l, &r).unwrap();
        let cl = resolution_checklist(&l, &r, &pair).unwrap();
        assert_eq!(cl.two_torsion_constant, Flag::Pass, "pair ({a},{b})");
        assert_eq!(cl.recommendation, BaseChangeRecommendation::NoBaseChange);
        assert_eq!(cl.isomorphic_after_sh, Flag::NotApplicable);
    }
}

#[test]
fn checklist_requires_an_admissible_pair() {
    let l = reject_gaussian();
    let pair = check_pair_admissible(&l, &l).unwrap();
    assert!(!pair.verdict);
    assert!(matches!(
        resolution_checklist(&l, &l, &pair),
        Err(KummerError::NotAdmissible)
    ));
}

#[test]
fn mu2_iff_etale_on_corpus_with_disjoint_fix_and_sing() {
    use kummerlab_core::effmodel::{effective_model_fiber, fixed_scheme_fiber};
    use kummerlab_core::localtate::tate_algorithm;
    use kummerlab_core::numring::primes_over_two;
    // on curves whose certificate passes freeness, the fixed fiber is etale
    // exactly when the effective model is multiplicative
    let mut models = vec![pinch(1), pinch(-1)];
    for idx in 0..8 {
        models.push(table_curve(idx));
    }
    for m in models {
        let rep = check_admissible(&m).unwrap();
        assert!(rep.passes_i_ii());
        for p in primes_over_two(&m.ring()).unwrap() {
            let min = tate_algorithm(&m, &p).unwrap().minimal;
            let eff = effective_model_fiber(&min).unwrap();
            let fix = fixed_scheme_fiber(&min).unwrap();
            assert_eq!(
                eff.fiber_type == FiberType::Mu2,
                fix.etale,
                "at {} of {:?}",
                p.label(),
                m.ring()
            );
        }
    }
}

#[test]
fn verdicts_invariant_under_coordinate_changes() {
    use kummerlab_core::weierstrass::CoordinateChange;
    let m = pinch(1);
    let ring = m.ring();
    let w = ring.generator();
    // units of Z[ω] are ±ω^k
    let changes = [
        CoordinateChange {
            u: w.clone(),
            r: ring.from_i64(2),
            s: w.clone(),
            t: ring.from_i64(-1),
        },
        CoordinateChange {
            u: w.mul(&w).neg(),
            r: w.mul_i64(3),
            s: ring.zero(),
            t: w.clone(),
        },
    ];
    let base = check_admissible(&m).unwrap().verdict;
    for ch in changes {
        let m2 = m.transform(&ch).unwrap();
        assert_eq!(check_admissible(&m2).unwrap().verdict, base);
    }
    // and for a reject
    let m = reject_gaussian();
    let g = m.ring();
    let i = g.generator();
    let ch = CoordinateChange {
        u: i.clone(),
        r: g.quad(1, -1),
        s: i.mul_i64(-1),
        t: g.from_i64(2),
    };
    let m2 = m.transform(&ch).unwrap();
    assert!(!check_admissible(&m2).unwrap().verdict);
}
