//! The step-by-step classification pass. Translations follow the classical
//! procedure and are valid at every residue characteristic, including two:
//! residue-field root finding is exhaustive (the fields here have at most a
//! few dozen elements), lifts are exact, and non-minimality restarts divide
//! the equation by the uniformizer.

use super::{
    KodairaSymbol, LocalCoordChange, LocalModel, ReductionClass, TateError, TateResult,
};
use crate::ff::{roots_in_field, Ff, FfDesc};
use crate::numring::{LocalElem, LocalPrime, Valn};

pub(super) fn run(model: &LocalModel) -> Result<TateResult, TateError> {
    let prime = model.prime().clone();
    let order = prime.residue_field().order();
    if order > 1024 {
        return Err(TateError::ResidueFieldTooLarge(order));
    }
    for a in [
        &model.coeffs().a1,
        &model.coeffs().a2,
        &model.coeffs().a3,
        &model.coeffs().a4,
        &model.coeffs().a6,
    ] {
        if !a.val(&prime).at_least(0) {
            return Err(TateError::NonIntegralModel);
        }
    }
    let mut cur = model.clone();
    let mut change = LocalCoordChange::identity(prime.ring());
    let mut guard = match cur.val_delta() {
        Valn::Fin(v) => v / 12 + 2,
        Valn::Inf => return Err(TateError::Precondition("a nonzero discriminant")),
    };
    loop {
        match pass(&mut cur, &mut change, &prime)? {
            Some((symbol, reduction)) => {
                let vd = cur
                    .val_delta()
                    .finite()
                    .expect("discriminant stays nonzero") as u32;
                let m = symbol.components();
                let conductor = match reduction {
                    ReductionClass::Good => 0,
                    _ => vd + 1 - m,
                };
                let delta_wild = match reduction {
                    ReductionClass::Additive => conductor
                        .checked_sub(2)
                        .expect("additive conductor exponent is at least two"),
                    _ => 0,
                };
                return Ok(TateResult {
                    symbol,
                    m,
                    val_delta_min: vd,
                    conductor,
                    delta_wild,
                    reduction,
                    minimal: cur,
                    change,
                });
            }
            None => {
                cur.scale_down_pi();
                change.then_pi_scale();
                guard -= 1;
                if guard < 0 {
                    return Err(TateError::LoopGuard);
                }
            }
        }
    }
}

fn translate(
    cur: &mut LocalModel,
    change: &mut LocalCoordChange,
    prime: &LocalPrime,
    r: &LocalElem,
    s: &LocalElem,
    t: &LocalElem,
) {
    change.then_translation(prime, r, s, t);
    cur.translate(r, s, t);
}

/// One classification pass; `None` means the model was non-minimal and the
/// caller must rescale by π and try again.
#[allow(clippy::type_complexity)]
fn pass(
    cur: &mut LocalModel,
    change: &mut LocalCoordChange,
    prime: &LocalPrime,
) -> Result<Option<(KodairaSymbol, ReductionClass)>, TateError> {
    let k = prime.residue_field();
    let p = prime.residue_char();
    let vd = cur
        .val_delta()
        .finite()
        .expect("nonzero discriminant") ;

    // Step 1: good reduction
    if vd == 0 {
        return Ok(Some((KodairaSymbol::I(0), ReductionClass::Good)));
    }

    // Step 2: move the singular point of the reduction to the origin
    let (x0, y0) = singular_point(cur, &k);
    let zero = LocalElem::from_ring(prime.ring().zero());
    let r = LocalElem::lift(prime, &x0);
    let t = LocalElem::lift(prime, &y0);
    translate(cur, change, prime, &r, &zero, &t);
    debug_assert!(cur.coeffs().a3.val(prime).at_least(1));
    debug_assert!(cur.coeffs().a4.val(prime).at_least(1));
    debug_assert!(cur.coeffs().a6.val(prime).at_least(1));

    // multiplicative iff the tangent cone at the origin is a node (b₂ a unit)
    let b2 = &cur.coeffs().b_invariants()[0];
    if b2.val(prime) == Valn::Fin(0) {
        return Ok(Some((KodairaSymbol::I(vd as u32), ReductionClass::Multiplicative)));
    }
    let add = ReductionClass::Additive;

    // Step 3
    if !cur.coeffs().a6.val(prime).at_least(2) {
        return Ok(Some((KodairaSymbol::II, add)));
    }
    // Step 4
    if !cur.coeffs().b_invariants()[3].val(prime).at_least(3) {
        return Ok(Some((KodairaSymbol::III, add)));
    }
    // Step 5
    if !cur.coeffs().b_invariants()[2].val(prime).at_least(3) {
        return Ok(Some((KodairaSymbol::IV, add)));
    }

    // Step 6 normalization: arrange π | a₁, a₂; π² | a₃, a₄; π³ | a₆.
    // First kill the tangent-cone square: s̄ is the double root of
    // T² + ā₁T - ā₂ (it exists because b₂ ≡ 0).
    let a1r = cur.res_shift(&cur.coeffs().a1.clone(), 0);
    let a2r = cur.res_shift(&cur.coeffs().a2.clone(), 0);
    let tangent = [a2r.neg(), a1r, k.one()];
    let sbar = roots_in_field(&tangent, &k)
        .first()
        .map(|(r, _)| *r)
        .expect("vanishing b2 forces a double tangent root over a perfect field");
    let s = LocalElem::lift(prime, &sbar);
    translate(cur, change, prime, &zero, &s, &zero);

    // then push a₃ (p odd) resp. a₆ (p = 2) one level deeper
    if p != 2 {
        let t = cur.coeffs().a3.neg().div_int(&num_bigint::BigInt::from(2));
        translate(cur, change, prime, &zero, &zero, &t);
    } else {
        let tau = cur.res_shift(&cur.coeffs().a6.clone(), 2).sqrt_char2();
        let t = LocalElem::lift(prime, &tau).mul_pi(prime, 1);
        translate(cur, change, prime, &zero, &zero, &t);
    }
    debug_assert!(cur.coeffs().a1.val(prime).at_least(1));
    debug_assert!(cur.coeffs().a2.val(prime).at_least(1));
    debug_assert!(cur.coeffs().a3.val(prime).at_least(2));
    debug_assert!(cur.coeffs().a4.val(prime).at_least(2));
    debug_assert!(cur.coeffs().a6.val(prime).at_least(3));

    // Step 6: the cubic P(T) = T³ + a₂,₁T² + a₄,₂T + a₆,₃ over k
    let cubic = [
        cur.res_shift(&cur.coeffs().a6.clone(), 3),
        cur.res_shift(&cur.coeffs().a4.clone(), 2),
        cur.res_shift(&cur.coeffs().a2.clone(), 1),
        k.one(),
    ];
    let roots = roots_in_field(&cubic, &k);
    let repeated = roots.iter().find(|(_, m)| *m >= 2).copied();
    match repeated {
        None => {
            // a repeated geometric root of a cubic over a perfect field is
            // rational, so no repeated k-root means P is separable
            Ok(Some((KodairaSymbol::IStar(0), add)))
        }
        Some((rbar, 2)) => i_star_loop(cur, change, prime, &k, p, rbar, vd),
        Some((rbar, _)) => step_eight(cur, change, prime, &k, p, rbar),
    }
}

/// The unique singular point of the reduced cubic, found by exhaustive
/// search over the (tiny) residue plane.
fn singular_point(cur: &LocalModel, k: &FfDesc) -> (Ff, Ff) {
    let a1 = cur.res_shift(&cur.coeffs().a1.clone(), 0);
    let a2 = cur.res_shift(&cur.coeffs().a2.clone(), 0);
    let a3 = cur.res_shift(&cur.coeffs().a3.clone(), 0);
    let a4 = cur.res_shift(&cur.coeffs().a4.clone(), 0);
    let a6 = cur.res_shift(&cur.coeffs().a6.clone(), 0);
    let two = k.from_u64(2);
    let three = k.from_u64(3);
    for x in k.elements() {
        for y in k.elements() {
            // F = y² + a₁xy + a₃y - x³ - a₂x² - a₄x - a₆
            let f = y
                .mul(&y)
                .add(&a1.mul(&x).mul(&y))
                .add(&a3.mul(&y))
                .sub(&x.mul(&x).mul(&x))
                .sub(&a2.mul(&x).mul(&x))
                .sub(&a4.mul(&x))
                .sub(&a6);
            if !f.is_zero() {
                continue;
            }
            // ∂F/∂x = a₁y - 3x² - 2a₂x - a₄
            let fx = a1
                .mul(&y)
                .sub(&three.mul(&x).mul(&x))
                .sub(&two.mul(&a2).mul(&x))
                .sub(&a4);
            if !fx.is_zero() {
                continue;
            }
            // ∂F/∂y = 2y + a₁x + a₃
            let fy = two.mul(&y).add(&a1.mul(&x)).add(&a3);
            if fy.is_zero() {
                return (x, y);
            }
        }
    }
    unreachable!("positive discriminant valuation forces a rational singular point")
}

/// Steps 7: the I_n* subprocedure, alternating quadratics in Y and X.
fn i_star_loop(
    cur: &mut LocalModel,
    change: &mut LocalCoordChange,
    prime: &LocalPrime,
    k: &FfDesc,
    p: u64,
    rbar: Ff,
    vd: i64,
) -> Result<Option<(KodairaSymbol, ReductionClass)>, TateError> {
    let zero = LocalElem::from_ring(prime.ring().zero());
    let r = LocalElem::lift(prime, &rbar).mul_pi(prime, 1);
    translate(cur, change, prime, &r, &zero, &zero);
    debug_assert_eq!(cur.coeffs().a2.val(prime), Valn::Fin(1));

    let mut level: u32 = 2;
    loop {
        // quadratic in Y: Y² + a₃,ℓ·Y - a₆,₂ℓ
        let b = cur.res_shift(&cur.coeffs().a3.clone(), level);
        let c = cur.res_shift(&cur.coeffs().a6.clone(), 2 * level);
        let separable = if p == 2 {
            !b.is_zero()
        } else {
            !b.mul(&b).add(&c.mul(&c.desc.from_u64(4))).is_zero()
        };
        if separable {
            return Ok(Some((KodairaSymbol::IStar(2 * level - 3), ReductionClass::Additive)));
        }
        let ybar = if p == 2 { c.sqrt_char2() } else { b.neg().div(&k.from_u64(2)) };
        let t = LocalElem::lift(prime, &ybar).mul_pi(prime, level);
        translate(cur, change, prime, &zero, &zero, &t);

        // quadratic in X: a₂,₁·X² + a₄,ℓ₊₁·X + a₆,₂ℓ₊₁
        let qa = cur.res_shift(&cur.coeffs().a2.clone(), 1);
        let qb = cur.res_shift(&cur.coeffs().a4.clone(), level + 1);
        let qc = cur.res_shift(&cur.coeffs().a6.clone(), 2 * level + 1);
        debug_assert!(!qa.is_zero());
        let separable = if p == 2 {
            !qb.is_zero()
        } else {
            !qb.mul(&qb)
                .sub(&qa.mul(&qc).mul(&qa.desc.from_u64(4)))
                .is_zero()
        };
        if separable {
            return Ok(Some((KodairaSymbol::IStar(2 * level - 2), ReductionClass::Additive)));
        }
        let xbar = if p == 2 {
            qc.div(&qa).sqrt_char2()
        } else {
            qb.neg().div(&qa.mul(&k.from_u64(2)))
        };
        let r = LocalElem::lift(prime, &xbar).mul_pi(prime, level);
        translate(cur, change, prime, &r, &zero, &zero);

        level += 1;
        if level as i64 > vd + 6 {
            return Err(TateError::LoopGuard);
        }
    }
}

/// Steps 8-11: triple root of the cubic. Returns `None` from step 11 when
/// the model is certified non-minimal.
fn step_eight(
    cur: &mut LocalModel,
    change: &mut LocalCoordChange,
    prime: &LocalPrime,
    k: &FfDesc,
    p: u64,
    rbar: Ff,
) -> Result<Option<(KodairaSymbol, ReductionClass)>, TateError> {
    let zero = LocalElem::from_ring(prime.ring().zero());
    let r = LocalElem::lift(prime, &rbar).mul_pi(prime, 1);
    translate(cur, change, prime, &r, &zero, &zero);
    debug_assert!(cur.coeffs().a2.val(prime).at_least(2));
    debug_assert!(cur.coeffs().a4.val(prime).at_least(3));
    debug_assert!(cur.coeffs().a6.val(prime).at_least(4));

    // quadratic Y² + a₃,₂·Y - a₆,₄
    let b = cur.res_shift(&cur.coeffs().a3.clone(), 2);
    let c = cur.res_shift(&cur.coeffs().a6.clone(), 4);
    let separable = if p == 2 {
        !b.is_zero()
    } else {
        !b.mul(&b).add(&c.mul(&c.desc.from_u64(4))).is_zero()
    };
    if separable {
        return Ok(Some((KodairaSymbol::IVStar, ReductionClass::Additive)));
    }
    let ybar = if p == 2 { c.sqrt_char2() } else { b.neg().div(&k.from_u64(2)) };
    let t = LocalElem::lift(prime, &ybar).mul_pi(prime, 2);
    translate(cur, change, prime, &zero, &zero, &t);

    // Step 9
    if !cur.coeffs().a4.val(prime).at_least(4) {
        return Ok(Some((KodairaSymbol::IIIStar, ReductionClass::Additive)));
    }
    // Step 10
    if !cur.coeffs().a6.val(prime).at_least(6) {
        return Ok(Some((KodairaSymbol::IIStar, ReductionClass::Additive)));
    }
    // Step 11: not minimal
    debug_assert!(cur.coeffs().a1.val(prime).at_least(1));
    debug_assert!(cur.coeffs().a3.val(prime).at_least(3));
    Ok(None)
}
