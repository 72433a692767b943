//! The admissibility certificate for the Kummer construction (single curves
//! and pairs), the rational-double-point configuration of the quotient
//! family's fibers, and the simultaneous-resolution checklist.
//!
//! The certificate examines every prime above two and every prime dividing
//! the norm of the discriminant: bad reduction must be additive with residue
//! characteristic two, freeness at the singular point amounts to the exact
//! valuation identity val(b₂a₄+b₆) = 2·val(2,a₁,a₃) on the minimal model,
//! and fixed-scheme fibers at characteristic two must be geometrically
//! disconnected.

use crate::dualgraph::DynkinClass;
use crate::effmodel::{
    effective_model_fiber, fixed_scheme_fiber, tate_oort_isomorphic, EffModelError,
    EffectiveModelFiber, FiberType,
};
use crate::localtate::{
    base_change_tame_cubic, count_roots_in_completion, kraus_potential_good_reduction,
    tate_algorithm, KodairaSymbol, KrausOutcome, LocalModel, ReductionClass, TateError,
};
use crate::numring::{
    primes_over, primes_over_two, LocalElem, LocalPrime, NumberRing, NumringError, RingElement,
    Valn,
};
use crate::weierstrass::{WeierstrassError, WeierstrassModel};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum KummerError {
    #[error(transparent)]
    Weierstrass(#[from] WeierstrassError),
    #[error(transparent)]
    Tate(#[from] TateError),
    #[error(transparent)]
    EffModel(#[from] EffModelError),
    #[error(transparent)]
    Numring(#[from] NumringError),
    #[error("trial division exceeded its bound while factoring the discriminant norm {0}")]
    FactorBound(BigInt),
    #[error("the two curves live over different rings")]
    MismatchedRings,
    #[error("the pair is not admissible; no checklist can be derived")]
    NotAdmissible,
    #[error("inconsistent predictor input: {0}")]
    InconsistentInput(String),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Flag {
    Pass,
    Fail,
    NotApplicable,
}

impl Flag {
    pub fn ok(&self) -> bool {
        !matches!(self, Flag::Fail)
    }
}

impl std::fmt::Display for Flag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Flag::Pass => write!(f, "pass"),
            Flag::Fail => write!(f, "fail"),
            Flag::NotApplicable => write!(f, "n/a"),
        }
    }
}

/// Everything the certificate records at one prime.
#[derive(Clone, Debug)]
pub struct PrimeRecord {
    pub label: String,
    pub residue_char: u64,
    pub reduction: ReductionClass,
    pub symbol: KodairaSymbol,
    pub val_delta_min: u32,
    /// val(b₂a₄ + b₆) on the minimal model, at additive char-2 primes
    pub val_key: Option<i64>,
    /// val(2, a₁, a₃) on the minimal model
    pub val_d: Option<i64>,
    pub fiber_type: Option<FiberType>,
    pub fixed_components: Option<u32>,
    /// freeness at the singular locus (vacuous on smooth fibers)
    pub flag_i: Flag,
    /// bad reduction only additive at residue characteristic two
    pub flag_ii: Flag,
    /// geometrically disconnected fixed-scheme fiber at char two
    pub flag_iii: Flag,
    pub reasons: Vec<String>,
}

impl PrimeRecord {
    pub fn all_ok(&self) -> bool {
        self.flag_i.ok() && self.flag_ii.ok() && self.flag_iii.ok()
    }
}

/// The certificate for a single curve.
#[derive(Clone, Debug)]
pub struct AdmissibilityReport {
    /// b₂a₄ + b₆ of the input model (global), for exact cross-checks
    pub key_identity: RingElement,
    pub primes: Vec<PrimeRecord>,
    pub verdict: bool,
    pub reasons: Vec<String>,
}

impl AdmissibilityReport {
    /// conditions (i) and (ii) alone, as required of each member of a pair
    pub fn passes_i_ii(&self) -> bool {
        self.primes.iter().all(|p| p.flag_i.ok() && p.flag_ii.ok())
    }

    pub fn bad_primes(&self) -> Vec<String> {
        self.primes
            .iter()
            .filter(|p| p.reduction != ReductionClass::Good)
            .map(|p| p.label.clone())
            .collect()
    }
}

/// Odd prime factors of |n| by trial division.
fn odd_prime_factors_bigint(n: &BigInt) -> Result<Vec<u64>, KummerError> {
    let mut n = n.abs();
    if n.is_zero() {
        return Err(KummerError::FactorBound(n));
    }
    let two = BigInt::from(2);
    while n.is_even() {
        n /= &two;
    }
    let mut out = Vec::new();
    let mut d: u64 = 3;
    let bound: u64 = 10_000_000;
    while BigInt::from(d) * BigInt::from(d) <= n {
        if (&n % d).is_zero() {
            out.push(d);
            while (&n % d).is_zero() {
                n /= BigInt::from(d);
            }
        }
        d += 2;
        if d > bound {
            return Err(KummerError::FactorBound(n));
        }
    }
    if n > BigInt::one() {
        let p = u64::try_from(&n).map_err(|_| KummerError::FactorBound(n.clone()))?;
        out.push(p);
    }
    Ok(out)
}

/// The primes the certificate must examine: everything above two, plus
/// everything above an odd prime dividing the norm of the discriminant.
fn candidate_primes(model: &WeierstrassModel) -> Result<Vec<LocalPrime>, KummerError> {
    let ring = model.ring();
    let mut out = primes_over_two(&ring)?;
    let norm = model.invariants().delta.absolute_norm();
    for p in odd_prime_factors_bigint(&norm)? {
        out.extend(primes_over(&ring, p)?);
    }
    Ok(out)
}

fn examine_prime(
    model: &WeierstrassModel,
    prime: &LocalPrime,
) -> Result<PrimeRecord, KummerError> {
    let t = tate_algorithm(model, prime)?;
    let p = prime.residue_char();
    // the freeness condition holds for every minimal integral equation of
    // the curve, but the value of val(b₂a₄+b₆) is not translation-invariant;
    // prefer the caller's own equation when it is already minimal so the
    // recorded valuations match the equation on file
    let input_local = LocalModel::localize(model, prime)?;
    let minimal = if input_local.val_delta() == Valn::Fin(t.val_delta_min as i64) {
        input_local
    } else {
        t.minimal.clone()
    };
    let mut rec = PrimeRecord {
        label: prime.label(),
        residue_char: p,
        reduction: t.reduction,
        symbol: t.symbol,
        val_delta_min: t.val_delta_min,
        val_key: None,
        val_d: None,
        fiber_type: None,
        fixed_components: None,
        flag_i: Flag::NotApplicable,
        flag_ii: Flag::NotApplicable,
        flag_iii: Flag::NotApplicable,
        reasons: Vec::new(),
    };
    match t.reduction {
        ReductionClass::Good => {
            if p == 2 {
                let eff = effective_model_fiber(&minimal)?;
                let fix = fixed_scheme_fiber(&minimal)?;
                rec.fiber_type = Some(eff.fiber_type);
                rec.val_d = Some(eff.d as i64);
                rec.fixed_components = Some(fix.components);
                if fix.geometrically_disconnected() {
                    rec.flag_iii = Flag::Pass;
                } else {
                    rec.flag_iii = Flag::Fail;
                    rec.reasons.push(format!(
                        "{}: two-torsion fiber is geometrically connected (supersingular reduction)",
                        rec.label
                    ));
                }
            }
        }
        ReductionClass::Multiplicative => {
            rec.flag_ii = Flag::Fail;
            rec.flag_i = Flag::Fail;
            rec.reasons.push(format!(
                "{}: multiplicative reduction (the fixed scheme meets the singular point)",
                rec.label
            ));
        }
        ReductionClass::Additive => {
            if p != 2 {
                rec.flag_ii = Flag::Fail;
                rec.reasons.push(format!(
                    "{}: additive reduction at residue characteristic {p}",
                    rec.label
                ));
            } else {
                rec.flag_ii = Flag::Pass;
                let key = minimal.coeffs().key_identity_value();
                let vk = key.val(prime);
                let d = minimal.d_invariant();
                rec.val_key = vk.finite();
                rec.val_d = Some(d);
                if vk == Valn::Fin(2 * d) {
                    rec.flag_i = Flag::Pass;
                } else {
                    rec.flag_i = Flag::Fail;
                    rec.reasons.push(format!(
                        "{}: val(b2*a4+b6) = {} but 2*val(2,a1,a3) = {}",
                        rec.label,
                        vk,
                        2 * d
                    ));
                }
                let eff = effective_model_fiber(&minimal)?;
                rec.fiber_type = Some(eff.fiber_type);
                let fix = fixed_scheme_fiber(&minimal)?;
                rec.fixed_components = Some(fix.components);
                if fix.geometrically_disconnected() {
                    rec.flag_iii = Flag::Pass;
                } else {
                    rec.flag_iii = Flag::Fail;
                    rec.reasons.push(format!(
                        "{}: fixed-scheme fiber is geometrically connected",
                        rec.label
                    ));
                }
            }
        }
    }
    Ok(rec)
}

/// The single-curve admissibility certificate.
pub fn check_admissible(model: &WeierstrassModel) -> Result<AdmissibilityReport, KummerError> {
    let key_identity = model.key_identity();
    let mut primes = Vec::new();
    let mut reasons = Vec::new();
    for prime in candidate_primes(model)? {
        let rec = examine_prime(model, &prime)?;
        reasons.extend(rec.reasons.clone());
        primes.push(rec);
    }
    let verdict = primes.iter().all(|p| p.all_ok());
    Ok(AdmissibilityReport { key_identity, primes, verdict, reasons })
}

/// A per-prime entry of the pair certificate.
#[derive(Clone, Debug)]
pub struct PairPrimeRecord {
    pub label: String,
    /// at least one of the two fixed-scheme fibers geometrically disconnected
    pub iii_star: bool,
    /// the effective models are isomorphic as order-two group schemes
    pub isomorphic_effective_models: bool,
    pub fiber_types: (FiberType, FiberType),
    pub fixed_components: (u32, u32),
}

/// The certificate for a pair of curves over the same ring.
#[derive(Clone, Debug)]
pub struct PairReport {
    pub left: AdmissibilityReport,
    pub right: AdmissibilityReport,
    pub same_bad_primes: bool,
    pub char_two: Vec<PairPrimeRecord>,
    pub verdict: bool,
    pub reasons: Vec<String>,
}

/// The pair version: same bad primes, each curve free at the singular locus
/// with only additive char-2 bad reduction, at least one disconnected
/// fixed-scheme fiber per char-2 prime, and isomorphic effective models
/// everywhere above two.
pub fn check_pair_admissible(
    left: &WeierstrassModel,
    right: &WeierstrassModel,
) -> Result<PairReport, KummerError> {
    if left.ring() != right.ring() {
        return Err(KummerError::MismatchedRings);
    }
    let lrep = check_admissible(left)?;
    let rrep = check_admissible(right)?;
    let mut reasons = Vec::new();
    let same_bad_primes = lrep.bad_primes() == rrep.bad_primes();
    if !same_bad_primes {
        reasons.push(format!(
            "bad-prime sets differ: {:?} vs {:?}",
            lrep.bad_primes(),
            rrep.bad_primes()
        ));
    }
    if !lrep.passes_i_ii() {
        reasons.push("first curve violates freeness or reduction-type conditions".into());
    }
    if !rrep.passes_i_ii() {
        reasons.push("second curve violates freeness or reduction-type conditions".into());
    }
    let mut char_two = Vec::new();
    for prime in primes_over_two(&left.ring())? {
        let lmin = tate_algorithm(left, &prime)?.minimal;
        let rmin = tate_algorithm(right, &prime)?.minimal;
        let (leff, lfix) = (effective_model_fiber(&lmin)?, fixed_scheme_fiber(&lmin)?);
        let (reff, rfix) = (effective_model_fiber(&rmin)?, fixed_scheme_fiber(&rmin)?);
        let iii_star =
            lfix.geometrically_disconnected() || rfix.geometrically_disconnected();
        if !iii_star {
            reasons.push(format!(
                "{}: both fixed-scheme fibers are geometrically connected",
                prime.label()
            ));
        }
        let iso = tate_oort_isomorphic(&leff, &reff)?;
        if !iso {
            reasons.push(format!(
                "{}: effective models are not isomorphic (d = {} vs {})",
                prime.label(),
                leff.d,
                reff.d
            ));
        }
        char_two.push(PairPrimeRecord {
            label: prime.label(),
            iii_star,
            isomorphic_effective_models: iso,
            fiber_types: (leff.fiber_type, reff.fiber_type),
            fixed_components: (lfix.components, rfix.components),
        });
    }
    let verdict = same_bad_primes
        && lrep.passes_i_ii()
        && rrep.passes_i_ii()
        && char_two
            .iter()
            .all(|r| r.iii_star && r.isomorphic_effective_models);
    Ok(PairReport { left: lrep, right: rrep, same_bad_primes, char_two, verdict, reasons })
}

// ---------------------------------------------------------------------------
// RDP configuration of the quotient fibers
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RdpEntry {
    pub class: DynkinClass,
    pub count: u32,
    /// the additional singularity over the unipotent point
    pub critical: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RdpConfiguration {
    pub entries: Vec<RdpEntry>,
}

impl RdpConfiguration {
    pub fn total_rank(&self) -> u32 {
        self.entries.iter().map(|e| e.class.rank() * e.count).sum()
    }

    pub fn has_critical(&self) -> bool {
        self.entries.iter().any(|e| e.critical)
    }

    pub fn label(&self) -> String {
        self.entries
            .iter()
            .map(|e| {
                let tag = if e.critical { "+crit" } else { "" };
                format!("{}{}{}", e.count, e.class, tag)
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// The fiberwise quotient table: characteristic away from two gives sixteen
/// A₁; at two, μ₂ gives 16A₁ + D₄, α₂ gives 4D₄ + D₄ or 2D₈ + D₄ depending
/// on whether both fixed loci split, and constant Z/2 gives 4D₄ or 2D₈
/// according to the number n of two-torsion points of the abelian fiber.
pub fn predict_rdp(
    residue_char: u64,
    fiber: FiberType,
    two_torsion_points: Option<u32>,
    fix_components: Option<(u32, u32)>,
) -> Result<RdpConfiguration, KummerError> {
    let plain = |class: DynkinClass, count: u32| RdpEntry { class, count, critical: false };
    let crit = RdpEntry { class: DynkinClass::D(4), count: 1, critical: true };
    if residue_char != 2 {
        if fiber != FiberType::ConstantZ2 {
            return Err(KummerError::InconsistentInput(
                "away from two the effective model is the constant group".into(),
            ));
        }
        return Ok(RdpConfiguration { entries: vec![plain(DynkinClass::A(1), 16)] });
    }
    match fiber {
        FiberType::Mu2 => Ok(RdpConfiguration {
            entries: vec![plain(DynkinClass::A(1), 16), crit],
        }),
        FiberType::Alpha2 => {
            let (c1, c2) = fix_components.ok_or_else(|| {
                KummerError::InconsistentInput(
                    "the unipotent row needs the pair of fixed-scheme component counts".into(),
                )
            })?;
            if c1 < 2 && c2 < 2 {
                return Err(KummerError::InconsistentInput(
                    "pair admissibility requires a disconnected fixed scheme on one factor"
                        .into(),
                ));
            }
            if c1 >= 2 && c2 >= 2 {
                Ok(RdpConfiguration { entries: vec![plain(DynkinClass::D(4), 4), crit] })
            } else {
                Ok(RdpConfiguration { entries: vec![plain(DynkinClass::D(8), 2), crit] })
            }
        }
        FiberType::ConstantZ2 => {
            let n = two_torsion_points.ok_or_else(|| {
                KummerError::InconsistentInput(
                    "the ordinary row needs n = #A[2] of the abelian fiber".into(),
                )
            })?;
            match n {
                4 => Ok(RdpConfiguration { entries: vec![plain(DynkinClass::D(4), 4)] }),
                2 => Ok(RdpConfiguration { entries: vec![plain(DynkinClass::D(8), 2)] }),
                _ => Err(KummerError::InconsistentInput(format!(
                    "n = {n} two-torsion points is impossible for an admissible pair"
                ))),
            }
        }
    }
}

// ---------------------------------------------------------------------------
// simultaneous-resolution checklist
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BaseChangeRecommendation {
    /// the partial-resolution route applies over the base ring itself
    NoBaseChange,
    /// adjoin a primitive third root of unity first
    AdjoinThirdRoot,
    /// the tame cubic base change to the tower
    TameCubic,
}

impl std::fmt::Display for BaseChangeRecommendation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BaseChangeRecommendation::NoBaseChange => write!(f, "none"),
            BaseChangeRecommendation::AdjoinThirdRoot => write!(f, "adjoin third root of unity"),
            BaseChangeRecommendation::TameCubic => write!(f, "tame cubic base change"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct ChecklistPrimeRecord {
    pub label: String,
    pub reduction: ReductionClass,
    pub two_torsion_constant: (bool, bool),
    pub kraus_order: Option<u32>,
    /// Kodaira symbol after the tame cubic base change, when computed
    pub base_changed_symbol: Option<KodairaSymbol>,
}

#[derive(Clone, Debug)]
pub struct ResolutionChecklist {
    pub third_root_of_unity_in_field: bool,
    /// finite residue fields are perfect, so the critical-point residue
    /// field never grows; recorded as a fact
    pub critical_residue_field_equals_base: bool,
    pub two_torsion_constant: Flag,
    pub isomorphic_after_sh: Flag,
    pub quadratic_good_reduction: Flag,
    pub per_prime: Vec<ChecklistPrimeRecord>,
    pub recommendation: BaseChangeRecommendation,
    pub notes: Vec<String>,
}

/// Whether the two-division field of the model embeds into the completion
/// at the prime: all three roots of T³ + b₂T² + 8b₄T + 16b₆ (the x-cubic
/// rescaled by T = 4x) must lie in the completion.
fn two_torsion_constant_at(
    model: &WeierstrassModel,
    prime: &LocalPrime,
) -> Result<bool, KummerError> {
    let [b2, b4, b6, _] = model.coeffs().b_invariants();
    let cubic = [
        LocalElem::from_ring(b6.mul_i64(16)),
        LocalElem::from_ring(b4.mul_i64(8)),
        LocalElem::from_ring(b2),
        LocalElem::from_ring(model.ring().one()),
    ];
    Ok(count_roots_in_completion(&cubic, prime)? == 3)
}

fn ring_has_third_root_of_unity(ring: &NumberRing) -> bool {
    matches!(ring, NumberRing::Quadratic { m: -3 } | NumberRing::Tower { .. })
}

fn ring_has_fourth_root_of_unity(ring: &NumberRing) -> bool {
    matches!(ring, NumberRing::Quadratic { m: -1 })
}

/// Equality of j-invariants as the exact cross-product c₄³·Δ' = c₄'³·Δ.
fn same_j_invariant(a: &WeierstrassModel, b: &WeierstrassModel) -> bool {
    let ia = a.invariants();
    let ib = b.invariants();
    ia.j.0.mul(&ib.j.1) == ib.j.0.mul(&ia.j.1)
}

fn j_is_1728(a: &WeierstrassModel) -> bool {
    let ia = a.invariants();
    ia.j.0 == ia.j.1.mul_i64(1728)
}

/// The hypothesis checklist for a simultaneous minimal resolution of the
/// Kummer family of an admissible pair, with the recommended base change.
pub fn resolution_checklist(
    left: &WeierstrassModel,
    right: &WeierstrassModel,
    pair: &PairReport,
) -> Result<ResolutionChecklist, KummerError> {
    if !pair.verdict {
        return Err(KummerError::NotAdmissible);
    }
    let ring = left.ring();
    let omega = ring_has_third_root_of_unity(&ring);
    let mut notes = Vec::new();
    let mut per_prime = Vec::new();
    let mut all_constant = true;
    let mut any_bad = false;
    let mut all_bad_order_six = true;

    for prime in primes_over_two(&ring)? {
        let lt = tate_algorithm(left, &prime)?;
        let lc = two_torsion_constant_at(left, &prime)?;
        let rc = two_torsion_constant_at(right, &prime)?;
        all_constant &= lc && rc;
        let mut kraus_order = None;
        let mut base_changed_symbol = None;
        if lt.reduction != ReductionClass::Good {
            any_bad = true;
            if prime.ramification_index() == 1 {
                let k = kraus_potential_good_reduction(left, &prime)?;
                kraus_order = k.order();
                match k {
                    KrausOutcome::OrderSix => {
                        // 6 = 3 × 2: after the tame cubic the residual
                        // extension is quadratic
                        if ring == NumberRing::quadratic(-3).expect("squarefree") {
                            let tower = base_change_tame_cubic(left)?;
                            let tp = primes_over_two(&tower.ring())?.remove(0);
                            let tt = tate_algorithm(&tower, &tp)?;
                            base_changed_symbol = Some(tt.symbol);
                        }
                    }
                    _ => all_bad_order_six = false,
                }
            } else {
                all_bad_order_six = false;
                notes.push(format!(
                    "{}: potential-good-reduction order not certified at a ramified prime",
                    prime.label()
                ));
            }
        }
        per_prime.push(ChecklistPrimeRecord {
            label: prime.label(),
            reduction: lt.reduction,
            two_torsion_constant: (lc, rc),
            kraus_order,
            base_changed_symbol,
        });
    }

    let two_torsion_constant = if all_constant { Flag::Pass } else { Flag::Fail };
    if !all_constant {
        notes.push(
            "two-torsion does not become constant over every completion above two".into(),
        );
    }

    let isomorphic_after_sh = if !any_bad {
        Flag::NotApplicable
    } else if same_j_invariant(left, right) {
        if !j_is_1728(left) || ring_has_fourth_root_of_unity(&ring) {
            Flag::Pass
        } else {
            notes.push(
                "equal j = 1728 without a fourth root of unity: isomorphism over the strict henselization not certified".into(),
            );
            Flag::Fail
        }
    } else {
        notes.push("distinct j-invariants: the curves are not geometrically isomorphic".into());
        Flag::Fail
    };

    let quadratic_good_reduction = if !any_bad {
        Flag::NotApplicable
    } else if all_bad_order_six {
        Flag::Pass
    } else {
        Flag::Fail
    };

    let (recommendation, mut rec_notes) = recommend_base_change(
        omega,
        any_bad,
        all_constant,
        all_bad_order_six,
        isomorphic_after_sh.ok(),
    );
    notes.append(&mut rec_notes);
    if !any_bad && all_constant {
        notes.push(
            "constant two-torsion with ordinary reduction provides a two-torsion section of \
             fiberwise order two (the input for a free-involution quotient of the family)"
                .into(),
        );
    }

    Ok(ResolutionChecklist {
        third_root_of_unity_in_field: omega,
        critical_residue_field_equals_base: true,
        two_torsion_constant,
        isomorphic_after_sh,
        quadratic_good_reduction,
        per_prime,
        recommendation,
        notes,
    })
}

/// The recommendation as pure flag logic: no bad primes needs nothing; bad
/// primes without a third root of unity fail hypothesis (i) of the
/// resolution theorem and ask for adjoining one; bad primes with order-six
/// potential good reduction and geometrically isomorphic members route
/// through the tame cubic base change.
fn recommend_base_change(
    omega: bool,
    any_bad: bool,
    all_constant: bool,
    all_bad_order_six: bool,
    iso_ok: bool,
) -> (BaseChangeRecommendation, Vec<String>) {
    let mut notes = Vec::new();
    let rec = if !any_bad {
        if !all_constant {
            notes.push("constancy fails; no base change certified by this checklist".into());
        }
        BaseChangeRecommendation::NoBaseChange
    } else if !omega {
        notes.push(
            "the field has no primitive third root of unity: resolution hypothesis (i) fails"
                .into(),
        );
        BaseChangeRecommendation::AdjoinThirdRoot
    } else if all_bad_order_six && iso_ok {
        BaseChangeRecommendation::TameCubic
    } else {
        notes.push("bad primes present but the implemented criteria do not certify a route".into());
        BaseChangeRecommendation::NoBaseChange
    };
    (rec, notes)
}

/// The effective-model fibers of a model at all primes above two (minimal
/// models are taken internally); convenience for callers assembling
/// predictor input.
pub fn effective_fibers_above_two(
    model: &WeierstrassModel,
) -> Result<Vec<(LocalPrime, EffectiveModelFiber, u32)>, KummerError> {
    let mut out = Vec::new();
    for prime in primes_over_two(&model.ring())? {
        let t = tate_algorithm(model, &prime)?;
        let eff = effective_model_fiber(&t.minimal)?;
        let fix = fixed_scheme_fiber(&t.minimal)?;
        out.push((prime, eff, fix.components));
    }
    Ok(out)
}

/// Re-check that a local model is minimal and produce its fixed-scheme
/// component count; used by the command-line layer.
pub fn fixed_components_of_minimal(model: &LocalModel) -> Result<u32, KummerError> {
    Ok(fixed_scheme_fiber(model)?.components)
}
