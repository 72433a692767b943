//! Weierstrass models y² + a₁xy + a₃y = x³ + a₂x² + a₄x + a₆, their b/c
//! invariants, discriminant and j-invariant, and admissible coordinate
//! changes (u, r, s, t).
//!
//! The invariant formulas are written once over a minimal coefficient trait
//! so that exact ring elements and localized elements share the code path.

use crate::numring::{LocalElem, NumberRing, RingElement};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WeierstrassError {
    #[error("the discriminant vanishes; the generic fiber would be singular")]
    ZeroDiscriminant,
    #[error("coordinate change produces non-integral coefficients (a{0} is not divisible by u^{0})")]
    NonIntegral(u8),
    #[error("coordinate change with u = 0")]
    ZeroScale,
    #[error("model and argument live over different rings")]
    MixedRings,
}

/// Minimal arithmetic needed by the invariant formulas.
pub trait Coefficient: Clone {
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    /// A constant in the same ring as `self`.
    fn small(&self, n: i64) -> Self;
    fn is_zero(&self) -> bool;
}

impl Coefficient for RingElement {
    fn add(&self, o: &Self) -> Self {
        RingElement::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        RingElement::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        RingElement::mul(self, o)
    }
    fn neg(&self) -> Self {
        RingElement::neg(self)
    }
    fn small(&self, n: i64) -> Self {
        self.ring().from_i64(n)
    }
    fn is_zero(&self) -> bool {
        RingElement::is_zero(self)
    }
}

impl Coefficient for LocalElem {
    fn add(&self, o: &Self) -> Self {
        LocalElem::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        LocalElem::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        LocalElem::mul(self, o)
    }
    fn neg(&self) -> Self {
        LocalElem::neg(self)
    }
    fn small(&self, n: i64) -> Self {
        LocalElem::small(self, n)
    }
    fn is_zero(&self) -> bool {
        LocalElem::is_zero(self)
    }
}

/// The five coefficients of a long Weierstrass equation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Coeffs<T> {
    pub a1: T,
    pub a2: T,
    pub a3: T,
    pub a4: T,
    pub a6: T,
}

impl<T: Coefficient> Coeffs<T> {
    pub fn b_invariants(&self) -> [T; 4] {
        let Coeffs { a1, a2, a3, a4, a6 } = self;
        let b2 = a1.mul(a1).add(&a2.mul(&a2.small(4)));
        let b4 = a4.mul(&a4.small(2)).add(&a1.mul(a3));
        let b6 = a3.mul(a3).add(&a6.mul(&a6.small(4)));
        let b8 = a1
            .mul(a1)
            .mul(a6)
            .add(&a2.mul(a6).mul(&a2.small(4)))
            .sub(&a1.mul(a3).mul(a4))
            .add(&a2.mul(a3).mul(a3))
            .sub(&a4.mul(a4));
        [b2, b4, b6, b8]
    }

    pub fn c_invariants(&self) -> [T; 2] {
        let [b2, b4, b6, _] = self.b_invariants();
        let c4 = b2.mul(&b2).sub(&b4.mul(&b4.small(24)));
        let c6 = b2
            .mul(&b2)
            .mul(&b2)
            .neg()
            .add(&b2.mul(&b4).mul(&b2.small(36)))
            .sub(&b6.mul(&b6.small(216)));
        [c4, c6]
    }

    pub fn discriminant(&self) -> T {
        let [b2, b4, b6, b8] = self.b_invariants();
        b2.mul(&b2)
            .mul(&b8)
            .neg()
            .sub(&b4.mul(&b4).mul(&b4).mul(&b4.small(8)))
            .sub(&b6.mul(&b6).mul(&b6.small(27)))
            .add(&b2.mul(&b4).mul(&b6).mul(&b2.small(9)))
    }

    /// b₂a₄ + b₆, the quantity controlling freeness at the singular locus.
    pub fn key_identity_value(&self) -> T {
        let [b2, _, b6, _] = self.b_invariants();
        b2.mul(&self.a4).add(&b6)
    }

    /// Translation part of a coordinate change: x = x' + r, y = y' + s·x' + t.
    pub fn translate(&self, r: &T, s: &T, t: &T) -> Coeffs<T> {
        let Coeffs { a1, a2, a3, a4, a6 } = self;
        let two = a1.small(2);
        let three = a1.small(3);
        let na1 = a1.add(&s.mul(&two));
        let na2 = a2
            .sub(&s.mul(a1))
            .add(&r.mul(&three))
            .sub(&s.mul(s));
        let na3 = a3.add(&r.mul(a1)).add(&t.mul(&two));
        let na4 = a4
            .sub(&s.mul(a3))
            .add(&r.mul(a2).mul(&two))
            .sub(&t.add(&r.mul(s)).mul(a1))
            .add(&r.mul(r).mul(&three))
            .sub(&s.mul(t).mul(&two));
        let na6 = a6
            .add(&r.mul(a4))
            .add(&r.mul(r).mul(a2))
            .add(&r.mul(r).mul(r))
            .sub(&t.mul(a3))
            .sub(&t.mul(t))
            .sub(&r.mul(t).mul(a1));
        Coeffs { a1: na1, a2: na2, a3: na3, a4: na4, a6: na6 }
    }

    /// Sanity identities: 4b₈ = b₂b₆ − b₄² and c₄³ − c₆² = 1728Δ.
    pub fn identities_hold(&self) -> bool {
        let [b2, b4, b6, b8] = self.b_invariants();
        let lhs = b8.mul(&b8.small(4));
        let rhs = b2.mul(&b6).sub(&b4.mul(&b4));
        if !lhs.sub(&rhs).is_zero() {
            return false;
        }
        let [c4, c6] = self.c_invariants();
        let delta = self.discriminant();
        c4.mul(&c4)
            .mul(&c4)
            .sub(&c6.mul(&c6))
            .sub(&delta.mul(&delta.small(1728)))
            .is_zero()
    }
}

/// A smooth Weierstrass model over one of the supported rings.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeierstrassModel {
    ring: NumberRing,
    coeffs: Coeffs<RingElement>,
}

/// The derived quantities of a model. `j` is kept as the exact fraction
/// (c₄³, Δ); every consumer only needs valuations or residues of it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeierstrassInvariants {
    pub b2: RingElement,
    pub b4: RingElement,
    pub b6: RingElement,
    pub b8: RingElement,
    pub c4: RingElement,
    pub c6: RingElement,
    pub delta: RingElement,
    /// j = c₄³ / Δ as an exact numerator/denominator pair
    pub j: (RingElement, RingElement),
}

impl WeierstrassModel {
    pub fn new(
        ring: NumberRing,
        a: [RingElement; 5],
    ) -> Result<WeierstrassModel, WeierstrassError> {
        let [a1, a2, a3, a4, a6] = a;
        for c in [&a1, &a2, &a3, &a4, &a6] {
            if c.ring() != ring {
                return Err(WeierstrassError::MixedRings);
            }
        }
        let coeffs = Coeffs { a1, a2, a3, a4, a6 };
        if coeffs.discriminant().is_zero() {
            return Err(WeierstrassError::ZeroDiscriminant);
        }
        debug_assert!(coeffs.identities_hold());
        Ok(WeierstrassModel { ring, coeffs })
    }

    pub fn from_i64(ring: NumberRing, a: [i64; 5]) -> Result<WeierstrassModel, WeierstrassError> {
        WeierstrassModel::new(ring, a.map(|n| ring.from_i64(n)))
    }

    pub fn ring(&self) -> NumberRing {
        self.ring
    }

    pub fn coeffs(&self) -> &Coeffs<RingElement> {
        &self.coeffs
    }

    pub fn a_list(&self) -> [&RingElement; 5] {
        let Coeffs { a1, a2, a3, a4, a6 } = &self.coeffs;
        [a1, a2, a3, a4, a6]
    }

    pub fn invariants(&self) -> WeierstrassInvariants {
        let [b2, b4, b6, b8] = self.coeffs.b_invariants();
        let [c4, c6] = self.coeffs.c_invariants();
        let delta = self.coeffs.discriminant();
        assert!(self.coeffs.identities_hold(), "b/c identities must hold exactly");
        let j_num = c4.mul(&c4).mul(&c4);
        WeierstrassInvariants {
            b2,
            b4,
            b6,
            b8,
            c4,
            c6,
            j: (j_num, delta.clone()),
            delta,
        }
    }

    /// b₂a₄ + b₆ together with the exact decomposition
    /// b₂a₄ + b₆ = 4(a₂a₄ + a₆) + a₁²a₄ + a₃².
    pub fn key_identity(&self) -> RingElement {
        let v = self.coeffs.key_identity_value();
        let Coeffs { a1, a2, a3, a4, a6 } = &self.coeffs;
        let rhs = a2
            .mul(a4)
            .add(a6)
            .mul_i64(4)
            .add(&a1.mul(a1).mul(a4))
            .add(&a3.mul(a3));
        assert_eq!(v, rhs, "b-value identity violated");
        v
    }

    /// Apply a coordinate change; errors when coefficients stop being
    /// integral in the ring.
    pub fn transform(
        &self,
        change: &CoordinateChange,
    ) -> Result<WeierstrassModel, WeierstrassError> {
        if change.u.is_zero() {
            return Err(WeierstrassError::ZeroScale);
        }
        let moved = self.coeffs.translate(&change.r, &change.s, &change.t);
        let u2 = change.u.mul(&change.u);
        let u3 = u2.mul(&change.u);
        let u4 = u2.mul(&u2);
        let u6 = u3.mul(&u3);
        let a1 = moved.a1.checked_div(&change.u).ok_or(WeierstrassError::NonIntegral(1))?;
        let a2 = moved.a2.checked_div(&u2).ok_or(WeierstrassError::NonIntegral(2))?;
        let a3 = moved.a3.checked_div(&u3).ok_or(WeierstrassError::NonIntegral(3))?;
        let a4 = moved.a4.checked_div(&u4).ok_or(WeierstrassError::NonIntegral(4))?;
        let a6 = moved.a6.checked_div(&u6).ok_or(WeierstrassError::NonIntegral(6))?;
        WeierstrassModel::new(self.ring, [a1, a2, a3, a4, a6])
    }
}

/// An admissible coordinate change x = u²x' + r, y = u³y' + su²x' + t.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CoordinateChange {
    pub u: RingElement,
    pub r: RingElement,
    pub s: RingElement,
    pub t: RingElement,
}

impl CoordinateChange {
    pub fn identity(ring: NumberRing) -> CoordinateChange {
        CoordinateChange {
            u: ring.one(),
            r: ring.zero(),
            s: ring.zero(),
            t: ring.zero(),
        }
    }

    /// The change obtained by applying `self` first and then `next`.
    pub fn then(&self, next: &CoordinateChange) -> CoordinateChange {
        let u1 = &self.u;
        let u1sq = u1.mul(u1);
        let u1cb = u1sq.mul(u1);
        CoordinateChange {
            u: u1.mul(&next.u),
            r: u1sq.mul(&next.r).add(&self.r),
            s: u1.mul(&next.s).add(&self.s),
            t: u1cb.mul(&next.t).add(&u1sq.mul(&self.s).mul(&next.r)).add(&self.t),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn pinch(sign: i64) -> WeierstrassModel {
        let r = NumberRing::quadratic(-3).unwrap();
        let a2 = r.quad(1, 1).mul_i64(sign);
        WeierstrassModel::new(
            r,
            [r.zero(), a2, r.zero(), r.quad(0, 1), r.zero()],
        )
        .unwrap()
    }

    #[test]
    fn pinch_invariants() {
        for sign in [1, -1] {
            let m = pinch(sign);
            let inv = m.invariants();
            let ring = m.ring();
            assert_eq!(inv.delta, ring.from_i64(16));
            assert!(inv.c4.is_zero());
            // j = 0 as the exact pair (0, 16)
            assert!(inv.j.0.is_zero());
            assert_eq!(inv.j.1, ring.from_i64(16));
        }
    }

    #[test]
    fn small_discriminant_oracle() {
        // y² + xy = x³ + 1 has Δ = -433 (independent symbolic expansion)
        let q = NumberRing::Rational;
        let m = WeierstrassModel::from_i64(q, [1, 0, 0, 0, 1]).unwrap();
        assert_eq!(m.invariants().delta, q.from_i64(-433));
    }

    #[test]
    fn cuspidal_cubic_rejected() {
        let q = NumberRing::Rational;
        assert_eq!(
            WeierstrassModel::from_i64(q, [0, 0, 0, 0, 0]).unwrap_err(),
            WeierstrassError::ZeroDiscriminant
        );
    }

    #[test]
    fn key_identity_values() {
        // gaussian reject: b₂a₄ + b₆ = 24i
        let g = NumberRing::quadratic(-1).unwrap();
        let m = WeierstrassModel::new(
            g,
            [g.quad(1, 1), g.quad(0, 1), g.zero(), g.from_i64(2), g.quad(0, 3)],
        )
        .unwrap();
        assert_eq!(m.key_identity(), g.quad(0, 24));

        // second reject over Z[√-2]: value 4
        let r = NumberRing::quadratic(-2).unwrap();
        let pi = r.quad(0, 1);
        let m = WeierstrassModel::new(
            r,
            [pi.clone(), r.from_i64(-1), pi, r.from_i64(-1), r.zero()],
        )
        .unwrap();
        assert_eq!(m.key_identity(), r.from_i64(4));

        // a₁ = a₃ = 0, a₂ = a₄ = a₆ = 1: reduces to 4(a₂a₄ + a₆) = 8
        let q = NumberRing::Rational;
        let m = WeierstrassModel::from_i64(q, [0, 1, 0, 1, 1]).unwrap();
        assert_eq!(m.key_identity(), q.from_i64(8));
    }

    #[test]
    fn transform_identity_and_scaling() {
        let q = NumberRing::Rational;
        let m = WeierstrassModel::from_i64(q, [1, 0, 0, 0, 1]).unwrap();
        let id = CoordinateChange::identity(q);
        assert_eq!(m.transform(&id).unwrap(), m);

        // y² = x³ + 64 scales down by u = 2 to y² = x³ + 1
        let big = WeierstrassModel::from_i64(q, [0, 0, 0, 0, 64]).unwrap();
        let ch = CoordinateChange {
            u: q.from_i64(2),
            r: q.zero(),
            s: q.zero(),
            t: q.zero(),
        };
        let small = big.transform(&ch).unwrap();
        assert_eq!(small, WeierstrassModel::from_i64(q, [0, 0, 0, 0, 1]).unwrap());
        // Δ covariance: Δ' = Δ / u¹²
        let d_big = big.invariants().delta;
        let d_small = small.invariants().delta;
        assert_eq!(
            d_small.mul(&q.from_bigint(BigInt::from(4096))),
            d_big
        );
        // illegal rescale errors out
        assert!(matches!(
            small.transform(&ch),
            Err(WeierstrassError::NonIntegral(_))
        ));
    }

    #[test]
    fn change_composition_is_associative_action() {
        let q = NumberRing::Rational;
        let m = WeierstrassModel::from_i64(q, [1, -2, 3, 0, 5]).unwrap();
        let c1 = CoordinateChange {
            u: q.from_i64(1),
            r: q.from_i64(2),
            s: q.from_i64(-1),
            t: q.from_i64(3),
        };
        let c2 = CoordinateChange {
            u: q.from_i64(-1),
            r: q.from_i64(-4),
            s: q.from_i64(2),
            t: q.from_i64(1),
        };
        let via_steps = m.transform(&c1).unwrap().transform(&c2).unwrap();
        let via_composite = m.transform(&c1.then(&c2)).unwrap();
        assert_eq!(via_steps, via_composite);
    }
}
