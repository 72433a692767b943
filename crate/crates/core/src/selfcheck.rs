//! Deterministic randomized identity checks over all supported rings.
//!
//! These back both the test suite and the verification command: each
//! function draws a reproducible stream of random elements or models from a
//! SplitMix generator and verifies an exact identity, returning the first
//! counterexample as an error string. No tolerance anywhere; every check is
//! an equality of ring elements or valuations.

use crate::kummer::check_admissible;
use crate::localtate::tate_algorithm;
use crate::numring::{primes_over, primes_over_two, NumberRing, RingElement, Valn};
use crate::weierstrass::{CoordinateChange, WeierstrassModel};
use num_bigint::BigInt;

/// Small deterministic generator so the suites are reproducible without a
/// dependency on an external RNG.
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> SplitMix64 {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, n: u64) -> u64 {
        self.next_u64() % n
    }

    pub fn int(&mut self, lo: i64, hi: i64) -> i64 {
        lo + self.below((hi - lo + 1) as u64) as i64
    }
}

/// The rings exercised by the random suites.
pub fn rings_under_test() -> Vec<NumberRing> {
    vec![
        NumberRing::Rational,
        NumberRing::quadratic(-3).unwrap(),
        NumberRing::quadratic(-1).unwrap(),
        NumberRing::quadratic(-2).unwrap(),
        NumberRing::quadratic(7).unwrap(),
        NumberRing::quadratic(41).unwrap(),
        NumberRing::quadratic(65).unwrap(),
        NumberRing::tower(2).unwrap(),
    ]
}

pub fn random_element(rng: &mut SplitMix64, ring: &NumberRing, span: i64) -> RingElement {
    match ring {
        NumberRing::Rational => ring.from_i64(rng.int(-span, span)),
        NumberRing::Quadratic { .. } => ring.quad(rng.int(-span, span), rng.int(-span, span)),
        NumberRing::Tower { .. } => ring.tower_elem([
            (BigInt::from(rng.int(-span, span)), BigInt::from(rng.int(-span, span))),
            (BigInt::from(rng.int(-span, span)), BigInt::from(rng.int(-span, span))),
            (BigInt::from(rng.int(-span, span)), BigInt::from(rng.int(-span, span))),
        ]),
    }
}

pub fn random_model(rng: &mut SplitMix64, ring: &NumberRing) -> WeierstrassModel {
    loop {
        let a = [
            random_element(rng, ring, 5),
            random_element(rng, ring, 5),
            random_element(rng, ring, 5),
            random_element(rng, ring, 5),
            random_element(rng, ring, 5),
        ];
        if let Ok(m) = WeierstrassModel::new(*ring, a) {
            return m;
        }
    }
}

/// c₄³ - c₆² = 1728Δ, 4b₈ = b₂b₆ - b₄², and the decomposition
/// b₂a₄ + b₆ = 4(a₂a₄ + a₆) + a₁²a₄ + a₃² on random models.
pub fn check_bc_identities(cases: u32, seed: u64) -> Result<(), String> {
    let mut rng = SplitMix64::new(seed);
    let rings = rings_under_test();
    for i in 0..cases {
        let ring = &rings[(i as usize) % rings.len()];
        let m = random_model(&mut rng, ring);
        // invariants() and key_identity() assert the identities exactly and
        // panic on violation; reaching here means they hold
        let inv = m.invariants();
        let lhs = inv.c4.mul(&inv.c4).mul(&inv.c4).sub(&inv.c6.mul(&inv.c6));
        if lhs != inv.delta.mul_i64(1728) {
            return Err(format!("c-identity failed on case {i} over {ring:?}"));
        }
        if inv.b8.mul_i64(4) != inv.b2.mul(&inv.b6).sub(&inv.b4.mul(&inv.b4)) {
            return Err(format!("b8-identity failed on case {i} over {ring:?}"));
        }
        let _ = m.key_identity();
    }
    Ok(())
}

/// At a prime of residue characteristic two, the reductions satisfy
/// (a₁ ≡ a₃ ≡ 0) ⟺ (Δ ≡ c₄ ≡ 0).
pub fn check_vanishing_equivalence(cases: u32, seed: u64) -> Result<(), String> {
    let mut rng = SplitMix64::new(seed);
    let rings = rings_under_test();
    for i in 0..cases {
        let ring = &rings[(i as usize) % rings.len()];
        let m = random_model(&mut rng, ring);
        let inv = m.invariants();
        for p in primes_over_two(ring).map_err(|e| e.to_string())? {
            let red_zero = |x: &RingElement| {
                p.val_ring(x).expect("same ring").at_least(1)
            };
            let lhs = red_zero(m.a_list()[0]) && red_zero(m.a_list()[2]);
            let rhs = red_zero(&inv.delta) && red_zero(&inv.c4);
            if lhs != rhs {
                return Err(format!(
                    "vanishing equivalence failed on case {i} over {ring:?} at {}",
                    p.label()
                ));
            }
        }
    }
    Ok(())
}

/// Scaling a model up by u multiplies Δ by u¹² and c₄ by u⁴; scaling back
/// down recovers the model; j is a fixed point (c₄³Δ' = c₄'³Δ); and
/// composite changes act like their composition.
pub fn check_transform_covariance(cases: u32, seed: u64) -> Result<(), String> {
    let mut rng = SplitMix64::new(seed);
    let rings = rings_under_test();
    for i in 0..cases {
        let ring = &rings[(i as usize) % rings.len()];
        let m = random_model(&mut rng, ring);
        let mut u = random_element(&mut rng, ring, 3);
        if u.is_zero() {
            u = ring.one();
        }
        // scale up: a_i ↦ a_i u^i is the transform by u⁻¹
        let [a1, a2, a3, a4, a6] = m.a_list();
        let up = WeierstrassModel::new(
            *ring,
            [
                a1.mul(&u),
                a2.mul(&u.pow(2)),
                a3.mul(&u.pow(3)),
                a4.mul(&u.pow(4)),
                a6.mul(&u.pow(6)),
            ],
        )
        .map_err(|e| format!("case {i}: scaled model must stay smooth: {e}"))?;
        let (iv, iv_up) = (m.invariants(), up.invariants());
        if iv_up.delta != iv.delta.mul(&u.pow(12)) {
            return Err(format!("Δ covariance failed on case {i} over {ring:?}"));
        }
        if iv_up.c4 != iv.c4.mul(&u.pow(4)) {
            return Err(format!("c₄ covariance failed on case {i} over {ring:?}"));
        }
        // j as a fraction is untouched
        if iv.j.0.mul(&iv_up.j.1) != iv_up.j.0.mul(&iv.j.1) {
            return Err(format!("j not fixed on case {i} over {ring:?}"));
        }
        // scaling back down is the admissible change (u, 0, 0, 0)
        let down = up
            .transform(&CoordinateChange {
                u: u.clone(),
                r: ring.zero(),
                s: ring.zero(),
                t: ring.zero(),
            })
            .map_err(|e| format!("case {i}: down-scaling must be integral: {e}"))?;
        if down != m {
            return Err(format!("round trip failed on case {i} over {ring:?}"));
        }
        // translations form a group action
        let c1 = CoordinateChange {
            u: ring.one(),
            r: random_element(&mut rng, ring, 4),
            s: random_element(&mut rng, ring, 4),
            t: random_element(&mut rng, ring, 4),
        };
        let c2 = CoordinateChange {
            u: ring.one(),
            r: random_element(&mut rng, ring, 4),
            s: random_element(&mut rng, ring, 4),
            t: random_element(&mut rng, ring, 4),
        };
        let two_steps = m
            .transform(&c1)
            .and_then(|x| x.transform(&c2))
            .map_err(|e| e.to_string())?;
        let composed = m.transform(&c1.then(&c2)).map_err(|e| e.to_string())?;
        if two_steps != composed {
            return Err(format!("composition failed on case {i} over {ring:?}"));
        }
        if two_steps.invariants().delta != iv.delta {
            return Err(format!("translation changed Δ on case {i} over {ring:?}"));
        }
    }
    Ok(())
}

/// val(xy) = val(x) + val(y) and the ultrametric inequality with equality
/// for distinct valuations, at every prime above two and above five.
pub fn check_valuation_additivity(cases: u32, seed: u64) -> Result<(), String> {
    let mut rng = SplitMix64::new(seed);
    let rings = rings_under_test();
    for i in 0..cases {
        let ring = &rings[(i as usize) % rings.len()];
        let x = random_element(&mut rng, ring, 40);
        let y = random_element(&mut rng, ring, 40);
        let mut primes = primes_over_two(ring).map_err(|e| e.to_string())?;
        if !matches!(ring, NumberRing::Tower { .. }) {
            primes.extend(primes_over(ring, 5).map_err(|e| e.to_string())?);
        }
        for p in primes {
            let vx = p.val_ring(&x).map_err(|e| e.to_string())?;
            let vy = p.val_ring(&y).map_err(|e| e.to_string())?;
            let vxy = p.val_ring(&x.mul(&y)).map_err(|e| e.to_string())?;
            let expected = match (vx, vy) {
                (Valn::Fin(a), Valn::Fin(b)) => Valn::Fin(a + b),
                _ => Valn::Inf,
            };
            if vxy != expected {
                return Err(format!(
                    "val(xy) != val x + val y on case {i} over {ring:?} at {}",
                    p.label()
                ));
            }
            let vsum = p.val_ring(&x.add(&y)).map_err(|e| e.to_string())?;
            let min = vx.min(vy);
            if vsum < min {
                return Err(format!("ultrametric failed on case {i} over {ring:?}"));
            }
            if vx != vy && vsum != min {
                return Err(format!(
                    "strict ultrametric equality failed on case {i} over {ring:?}"
                ));
            }
        }
    }
    Ok(())
}

/// Field norms are multiplicative.
pub fn check_norm_multiplicativity(cases: u32, seed: u64) -> Result<(), String> {
    let mut rng = SplitMix64::new(seed);
    let rings = rings_under_test();
    for i in 0..cases {
        let ring = &rings[(i as usize) % rings.len()];
        let x = random_element(&mut rng, ring, 50);
        let y = random_element(&mut rng, ring, 50);
        if x.mul(&y).norm() != x.norm().mul(&y.norm()) {
            return Err(format!("norm not multiplicative on case {i} over {ring:?}"));
        }
    }
    Ok(())
}

/// Split-prime valuations are stable under forced precision escalation:
/// val(x·2^64) - 64 computes the same valuation through a deeper 2-adic
/// expansion.
pub fn check_split_precision_stability(cases: u32, seed: u64) -> Result<(), String> {
    let mut rng = SplitMix64::new(seed);
    for ring in [NumberRing::quadratic(41).unwrap(), NumberRing::quadratic(65).unwrap()] {
        for p in primes_over_two(&ring).map_err(|e| e.to_string())? {
            for i in 0..cases {
                let mut x = random_element(&mut rng, &ring, 1000);
                if x.is_zero() {
                    x = ring.one();
                }
                let v = p.val_ring(&x).map_err(|e| e.to_string())?;
                let big = x.mul(&ring.from_bigint(BigInt::from(2u8).pow(64)));
                let vbig = p.val_ring(&big).map_err(|e| e.to_string())?;
                if vbig != v.add_i64(64) {
                    return Err(format!(
                        "split valuation unstable on case {i} over {ring:?} at {}",
                        p.label()
                    ));
                }
            }
        }
    }
    Ok(())
}

fn selectable_units(ring: &NumberRing) -> Vec<RingElement> {
    let mut units = vec![ring.one(), ring.one().neg()];
    match ring {
        NumberRing::Quadratic { m: -3 } => {
            let w = ring.generator();
            units.push(w.clone());
            units.push(w.mul(&w));
            units.push(w.neg());
        }
        NumberRing::Quadratic { m: -1 } => {
            units.push(ring.generator());
            units.push(ring.generator().neg());
        }
        _ => {}
    }
    units
}

/// Admissibility verdicts are invariant under coordinate changes with unit
/// scale: the certificate is computed on minimal models.
pub fn check_verdict_invariance(cases: u32, seed: u64) -> Result<(), String> {
    let mut rng = SplitMix64::new(seed);
    let zw = NumberRing::quadratic(-3).unwrap();
    let zi = NumberRing::quadratic(-1).unwrap();
    let zs = NumberRing::quadratic(-2).unwrap();
    let pool: Vec<WeierstrassModel> = vec![
        WeierstrassModel::new(
            zw,
            [zw.zero(), zw.quad(1, 1), zw.zero(), zw.quad(0, 1), zw.zero()],
        )
        .unwrap(),
        WeierstrassModel::new(
            zw,
            [zw.zero(), zw.quad(1, 1).neg(), zw.zero(), zw.quad(0, 1), zw.zero()],
        )
        .unwrap(),
        WeierstrassModel::new(
            zi,
            [zi.quad(1, 1), zi.quad(0, 1), zi.zero(), zi.from_i64(2), zi.quad(0, 3)],
        )
        .unwrap(),
        WeierstrassModel::new(
            zs,
            [zs.quad(0, 1), zs.from_i64(-1), zs.zero(), zs.from_i64(-2), zs.from_i64(3)],
        )
        .unwrap(),
        WeierstrassModel::new(
            zs,
            [zs.quad(0, 1), zs.from_i64(-1), zs.quad(0, 1), zs.from_i64(-1), zs.zero()],
        )
        .unwrap(),
    ];
    let base: Vec<bool> = pool
        .iter()
        .map(|m| check_admissible(m).map(|r| r.verdict).map_err(|e| e.to_string()))
        .collect::<Result<_, _>>()?;
    for i in 0..cases {
        let which = (i as usize) % pool.len();
        let m = &pool[which];
        let ring = m.ring();
        let units = selectable_units(&ring);
        let u = units[rng.below(units.len() as u64) as usize].clone();
        let ch = CoordinateChange {
            u,
            r: random_element(&mut rng, &ring, 4),
            s: random_element(&mut rng, &ring, 4),
            t: random_element(&mut rng, &ring, 4),
        };
        let m2 = m.transform(&ch).map_err(|e| e.to_string())?;
        let verdict = check_admissible(&m2).map_err(|e| e.to_string())?.verdict;
        if verdict != base[which] {
            return Err(format!("verdict changed under a unit change on case {i}"));
        }
        // the Kodaira symbol is invariant too
        let p = primes_over_two(&ring).map_err(|e| e.to_string())?.remove(0);
        let s1 = tate_algorithm(m, &p).map_err(|e| e.to_string())?.symbol;
        let s2 = tate_algorithm(&m2, &p).map_err(|e| e.to_string())?.symbol;
        if s1 != s2 {
            return Err(format!("Kodaira symbol changed under a unit change on case {i}"));
        }
    }
    Ok(())
}
