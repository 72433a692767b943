//! Exact arithmetic in the supported number rings: the rational integers,
//! quadratic orders of integers Z[θ], and the tower Z[ω][c]/(c^3 - a).
//!
//! Quadratic elements are stored in the θ-basis where θ = (1+√m)/2 for
//! m ≡ 1 mod 4 and θ = √m otherwise, so the coefficient lattice is always
//! the maximal order. Tower elements are triples over Z[ω] with c^3 = a for
//! a rational integer a of 2-adic valuation one, which makes c^3 - a
//! Eisenstein at the inert prime of Z[ω].

mod disc;
mod hensel;
mod local;
mod primes;

pub use disc::{
    is_fundamental_discriminant, pure_cubic_discriminant, s3_theorem_applies,
    FundamentalDiscriminant, PureCubicData,
};
pub use local::{LocalElem, Valn};
pub use primes::{primes_over, primes_over_two, valuation, LocalPrime, Splitting};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NumringError {
    #[error("quadratic parameter m = {0} must be squarefree and different from 0, 1")]
    NotSquarefree(i64),
    #[error("tower parameter a = {0} must have 2-adic valuation exactly one")]
    BadTowerParameter(i64),
    #[error("element does not belong to the ring of the prime")]
    MixedRings,
    #[error("unsupported ring kind for this operation")]
    UnsupportedRing,
    #[error("residue characteristic {0} too large for exhaustive residue search")]
    PrimeTooLarge(u64),
    #[error("2-adic precision ceiling exceeded (internal bug: valuations of nonzero elements terminate)")]
    PrecisionCeiling,
    #[error("trial-division bound exceeded while factoring {0}")]
    FactorBound(BigInt),
}

/// One of the supported coefficient rings.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum NumberRing {
    /// The rational integers Z.
    Rational,
    /// The maximal order of Q(√m) for squarefree m != 0, 1.
    Quadratic { m: i64 },
    /// Z[ω][c]/(c^3 - a) over the Eisenstein integers, val(a) = 1 at 2Z[ω].
    Tower { a: i64 },
}

pub(crate) fn i64_squarefree(m: i64) -> bool {
    let mut n = m.unsigned_abs();
    let mut d = 2u64;
    while d * d <= n {
        if n % (d * d) == 0 {
            return false;
        }
        while n % d == 0 {
            n /= d;
        }
        d += 1;
    }
    true
}

impl NumberRing {
    pub fn rational() -> Self {
        NumberRing::Rational
    }

    pub fn quadratic(m: i64) -> Result<Self, NumringError> {
        if m == 0 || m == 1 || !i64_squarefree(m) {
            return Err(NumringError::NotSquarefree(m));
        }
        Ok(NumberRing::Quadratic { m })
    }

    /// Z[ω][c]/(c^3 - a); requires v_2(a) = 1 so that c generates the unique
    /// prime above two.
    pub fn tower(a: i64) -> Result<Self, NumringError> {
        if a == 0 || a % 2 != 0 || (a / 2) % 2 == 0 {
            return Err(NumringError::BadTowerParameter(a));
        }
        Ok(NumberRing::Tower { a })
    }

    /// Degree over Z.
    pub fn degree(&self) -> u32 {
        match self {
            NumberRing::Rational => 1,
            NumberRing::Quadratic { .. } => 2,
            NumberRing::Tower { .. } => 6,
        }
    }

    /// Whether the θ-convention is θ = (1+√m)/2.
    pub fn half_basis(&self) -> bool {
        match self {
            NumberRing::Quadratic { m } => m.rem_euclid(4) == 1,
            _ => false,
        }
    }

    pub fn zero(&self) -> RingElement {
        self.from_i64(0)
    }

    pub fn one(&self) -> RingElement {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> RingElement {
        self.from_bigint(BigInt::from(n))
    }

    pub fn from_bigint(&self, n: BigInt) -> RingElement {
        let repr = match self {
            NumberRing::Rational => Repr::Int(n),
            NumberRing::Quadratic { .. } => Repr::Quad(n, BigInt::zero()),
            NumberRing::Tower { .. } => Repr::Tower(Box::new([
                (n, BigInt::zero()),
                (BigInt::zero(), BigInt::zero()),
                (BigInt::zero(), BigInt::zero()),
            ])),
        };
        RingElement { ring: *self, repr }
    }

    /// x + y·θ in a quadratic ring.
    pub fn quad(&self, x: impl Into<BigInt>, y: impl Into<BigInt>) -> RingElement {
        match self {
            NumberRing::Quadratic { .. } => RingElement {
                ring: *self,
                repr: Repr::Quad(x.into(), y.into()),
            },
            _ => panic!("quad() on a non-quadratic ring"),
        }
    }

    /// x + y·√m, converted to the θ-basis.
    pub fn quad_sqrt_basis(
        &self,
        x: impl Into<BigInt>,
        y: impl Into<BigInt>,
    ) -> RingElement {
        let (x, y) = (x.into(), y.into());
        if self.half_basis() {
            // x + y√m = (x - y) + 2y·θ
            self.quad(x - &y, y * 2)
        } else {
            self.quad(x, y)
        }
    }

    /// Tower element from Z[ω]-pairs: (x0+y0ω) + (x1+y1ω)c + (x2+y2ω)c².
    pub fn tower_elem(&self, coeffs: [(BigInt, BigInt); 3]) -> RingElement {
        match self {
            NumberRing::Tower { .. } => RingElement {
                ring: *self,
                repr: Repr::Tower(Box::new(coeffs)),
            },
            _ => panic!("tower_elem() on a non-tower ring"),
        }
    }

    /// The generator c of the tower (c^3 = a).
    pub fn tower_gen(&self) -> RingElement {
        self.tower_elem([
            (BigInt::zero(), BigInt::zero()),
            (BigInt::one(), BigInt::zero()),
            (BigInt::zero(), BigInt::zero()),
        ])
    }

    /// θ itself in a quadratic ring, or ω in the tower.
    pub fn generator(&self) -> RingElement {
        match self {
            NumberRing::Rational => self.one(),
            NumberRing::Quadratic { .. } => self.quad(0, 1),
            NumberRing::Tower { .. } => self.tower_elem([
                (BigInt::zero(), BigInt::one()),
                (BigInt::zero(), BigInt::zero()),
                (BigInt::zero(), BigInt::zero()),
            ]),
        }
    }
}

/// An exact element of one of the supported rings.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct RingElement {
    ring: NumberRing,
    repr: Repr,
}

#[derive(Clone, PartialEq, Eq, Debug, Hash)]
enum Repr {
    Int(BigInt),
    Quad(BigInt, BigInt),
    Tower(Box<[(BigInt, BigInt); 3]>),
}

/// ω-pair product over Z[ω]: ω² = ω - 1.
fn eis_mul(a: &(BigInt, BigInt), b: &(BigInt, BigInt)) -> (BigInt, BigInt) {
    let tt = &a.1 * &b.1;
    (&a.0 * &b.0 - &tt, &a.0 * &b.1 + &a.1 * &b.0 + tt)
}

fn eis_add(a: &(BigInt, BigInt), b: &(BigInt, BigInt)) -> (BigInt, BigInt) {
    (&a.0 + &b.0, &a.1 + &b.1)
}

fn eis_scale(a: &(BigInt, BigInt), k: &BigInt) -> (BigInt, BigInt) {
    (&a.0 * k, &a.1 * k)
}

impl RingElement {
    pub fn ring(&self) -> NumberRing {
        self.ring
    }

    pub fn is_zero(&self) -> bool {
        match &self.repr {
            Repr::Int(x) => x.is_zero(),
            Repr::Quad(x, y) => x.is_zero() && y.is_zero(),
            Repr::Tower(c) => c.iter().all(|(x, y)| x.is_zero() && y.is_zero()),
        }
    }

    /// Integer coefficients in a fixed basis order (1; θ) or
    /// (1, ω, c, ωc, c², ωc²).
    pub fn coords(&self) -> Vec<BigInt> {
        match &self.repr {
            Repr::Int(x) => vec![x.clone()],
            Repr::Quad(x, y) => vec![x.clone(), y.clone()],
            Repr::Tower(c) => c
                .iter()
                .flat_map(|(x, y)| [x.clone(), y.clone()])
                .collect(),
        }
    }

    pub(crate) fn quad_parts(&self) -> (&BigInt, &BigInt) {
        match &self.repr {
            Repr::Quad(x, y) => (x, y),
            _ => panic!("quad_parts on non-quadratic element"),
        }
    }

    pub(crate) fn int_part(&self) -> &BigInt {
        match &self.repr {
            Repr::Int(x) => x,
            _ => panic!("int_part on non-rational element"),
        }
    }

    pub(crate) fn tower_parts(&self) -> &[(BigInt, BigInt); 3] {
        match &self.repr {
            Repr::Tower(c) => c,
            _ => panic!("tower_parts on non-tower element"),
        }
    }

    fn assert_same_ring(&self, o: &RingElement) {
        assert_eq!(self.ring, o.ring, "ring elements from different rings");
    }

    pub fn add(&self, o: &RingElement) -> RingElement {
        self.assert_same_ring(o);
        let repr = match (&self.repr, &o.repr) {
            (Repr::Int(a), Repr::Int(b)) => Repr::Int(a + b),
            (Repr::Quad(x1, y1), Repr::Quad(x2, y2)) => Repr::Quad(x1 + x2, y1 + y2),
            (Repr::Tower(a), Repr::Tower(b)) => Repr::Tower(Box::new([
                eis_add(&a[0], &b[0]),
                eis_add(&a[1], &b[1]),
                eis_add(&a[2], &b[2]),
            ])),
            _ => unreachable!(),
        };
        RingElement { ring: self.ring, repr }
    }

    pub fn neg(&self) -> RingElement {
        let repr = match &self.repr {
            Repr::Int(a) => Repr::Int(-a),
            Repr::Quad(x, y) => Repr::Quad(-x, -y),
            Repr::Tower(c) => Repr::Tower(Box::new([
                (-&c[0].0, -&c[0].1),
                (-&c[1].0, -&c[1].1),
                (-&c[2].0, -&c[2].1),
            ])),
        };
        RingElement { ring: self.ring, repr }
    }

    pub fn sub(&self, o: &RingElement) -> RingElement {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &RingElement) -> RingElement {
        self.assert_same_ring(o);
        let repr = match (&self.repr, &o.repr) {
            (Repr::Int(a), Repr::Int(b)) => Repr::Int(a * b),
            (Repr::Quad(x1, y1), Repr::Quad(x2, y2)) => {
                let m = match self.ring {
                    NumberRing::Quadratic { m } => m,
                    _ => unreachable!(),
                };
                let tt = y1 * y2;
                if self.ring.half_basis() {
                    // θ² = θ + (m-1)/4
                    let q = BigInt::from((m - 1) / 4);
                    Repr::Quad(x1 * x2 + &tt * q, x1 * y2 + y1 * x2 + tt)
                } else {
                    Repr::Quad(x1 * x2 + &tt * BigInt::from(m), x1 * y2 + y1 * x2)
                }
            }
            (Repr::Tower(u), Repr::Tower(v)) => {
                let a = match self.ring {
                    NumberRing::Tower { a } => BigInt::from(a),
                    _ => unreachable!(),
                };
                // degree-4 product, then c^3 = a, c^4 = a c
                let zero = (BigInt::zero(), BigInt::zero());
                let mut prod = vec![zero.clone(); 5];
                for i in 0..3 {
                    for j in 0..3 {
                        let t = eis_mul(&u[i], &v[j]);
                        prod[i + j] = eis_add(&prod[i + j], &t);
                    }
                }
                let c0 = eis_add(&prod[0], &eis_scale(&prod[3], &a));
                let c1 = eis_add(&prod[1], &eis_scale(&prod[4], &a));
                let c2 = prod[2].clone();
                Repr::Tower(Box::new([c0, c1, c2]))
            }
            _ => unreachable!(),
        };
        RingElement { ring: self.ring, repr }
    }

    pub fn mul_i64(&self, k: i64) -> RingElement {
        self.mul(&self.ring.from_i64(k))
    }

    pub fn pow(&self, e: u32) -> RingElement {
        let mut acc = self.ring.one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Galois conjugate in a quadratic ring (θ ↦ θ̄).
    pub fn conj(&self) -> RingElement {
        match &self.repr {
            Repr::Int(_) => self.clone(),
            Repr::Quad(x, y) => {
                if self.ring.half_basis() {
                    // θ̄ = 1 - θ
                    self.ring.quad(x + y, -y)
                } else {
                    self.ring.quad(x.clone(), -y)
                }
            }
            Repr::Tower(_) => panic!("conj is only defined for quadratic rings here"),
        }
    }

    /// Field norm down to the base: Z for rational/quadratic elements and
    /// Z[ω] for tower elements.
    pub fn norm(&self) -> RingElement {
        match &self.repr {
            Repr::Int(x) => self.ring.from_bigint(x.clone()),
            Repr::Quad(x, y) => {
                let m = match self.ring {
                    NumberRing::Quadratic { m } => m,
                    _ => unreachable!(),
                };
                let n = if self.ring.half_basis() {
                    // N(x+yθ) = x² + xy + y²(1-m)/4
                    x * x + x * y + y * y * BigInt::from((1 - m) / 4)
                } else {
                    x * x - y * y * BigInt::from(m)
                };
                NumberRing::Rational.from_bigint(n)
            }
            Repr::Tower(c) => {
                let a = match self.ring {
                    NumberRing::Tower { a } => BigInt::from(a),
                    _ => unreachable!(),
                };
                // N(x0 + x1 c + x2 c²) = x0³ + a x1³ + a² x2³ - 3a x0 x1 x2
                let cube = |t: &(BigInt, BigInt)| eis_mul(&eis_mul(t, t), t);
                let x0 = cube(&c[0]);
                let x1 = eis_scale(&cube(&c[1]), &a);
                let x2 = eis_scale(&cube(&c[2]), &(&a * &a));
                let mix = eis_scale(
                    &eis_mul(&eis_mul(&c[0], &c[1]), &c[2]),
                    &(&a * BigInt::from(3)),
                );
                let n = (
                    x0.0 + x1.0 + x2.0 - mix.0,
                    x0.1 + x1.1 + x2.1 - mix.1,
                );
                let base = NumberRing::Quadratic { m: -3 };
                base.quad(n.0, n.1)
            }
        }
    }

    /// Absolute norm down to Z.
    pub fn absolute_norm(&self) -> BigInt {
        match &self.repr {
            Repr::Int(x) => x.clone(),
            Repr::Quad(..) => self.norm().int_part().clone(),
            Repr::Tower(_) => self.norm().norm().int_part().clone(),
        }
    }

    /// Exact division in the ring; `None` when `self/d` is not integral.
    pub fn checked_div(&self, d: &RingElement) -> Option<RingElement> {
        self.assert_same_ring(d);
        assert!(!d.is_zero(), "division by zero");
        match (&self.repr, &d.repr) {
            (Repr::Int(a), Repr::Int(b)) => {
                let (q, r) = a.div_rem(b);
                r.is_zero().then(|| self.ring.from_bigint(q))
            }
            (Repr::Quad(..), Repr::Quad(..)) => {
                let num = self.mul(&d.conj());
                let n = d.norm().int_part().clone();
                let (x, y) = num.quad_parts();
                let (qx, rx) = x.div_rem(&n);
                let (qy, ry) = y.div_rem(&n);
                (rx.is_zero() && ry.is_zero()).then(|| self.ring.quad(qx, qy))
            }
            (Repr::Tower(_), Repr::Tower(dv)) => {
                let a = match self.ring {
                    NumberRing::Tower { a } => BigInt::from(a),
                    _ => unreachable!(),
                };
                // cofactor: d'·d'' so that d·cof = N(d) in Z[ω]
                let (x0, x1, x2) = (&dv[0], &dv[1], &dv[2]);
                let cof0 = {
                    let t = eis_mul(x0, x0);
                    let s = eis_scale(&eis_mul(x1, x2), &a);
                    (t.0 - s.0, t.1 - s.1)
                };
                let cof1 = {
                    let t = eis_scale(&eis_mul(x2, x2), &a);
                    let s = eis_mul(x0, x1);
                    (t.0 - s.0, t.1 - s.1)
                };
                let cof2 = {
                    let t = eis_mul(x1, x1);
                    let s = eis_mul(x0, x2);
                    (t.0 - s.0, t.1 - s.1)
                };
                let cof = self.ring.tower_elem([cof0, cof1, cof2]);
                let num = self.mul(&cof);
                let n = d.norm(); // in Z[ω]
                // divide each Z[ω]-coordinate of num by n exactly
                let (nx, ny) = n.quad_parts();
                let nn = {
                    // N_{Z[ω]/Z}(n) = x² + xy + y²
                    nx * nx + nx * ny + ny * ny
                };
                if nn.is_zero() {
                    return None;
                }
                let nconj = (nx + ny, -ny.clone());
                let parts = num.tower_parts();
                let mut out: [(BigInt, BigInt); 3] = Default::default();
                for (i, p) in parts.iter().enumerate() {
                    let q = eis_mul(p, &nconj);
                    let (qx, rx) = q.0.div_rem(&nn);
                    let (qy, ry) = q.1.div_rem(&nn);
                    if !rx.is_zero() || !ry.is_zero() {
                        return None;
                    }
                    out[i] = (qx, qy);
                }
                Some(self.ring.tower_elem(out))
            }
            _ => unreachable!(),
        }
    }

    /// Whether the element is a unit of the ring (norm ±1).
    pub fn is_unit(&self) -> bool {
        let n = self.absolute_norm();
        n.abs().is_one()
    }

    /// Exact square root in the ring, if one exists. Implemented for the
    /// rational and quadratic rings (tower elements are not needed here).
    pub fn sqrt_exact(&self) -> Option<RingElement> {
        match &self.repr {
            Repr::Int(x) => {
                if x.is_negative() {
                    return None;
                }
                let r = x.sqrt();
                (&r * &r == *x).then(|| self.ring.from_bigint(r))
            }
            Repr::Quad(ax, bx) => {
                let m = match self.ring {
                    NumberRing::Quadratic { m } => m,
                    _ => unreachable!(),
                };
                let verify = |cand: RingElement| -> Option<RingElement> {
                    (cand.mul(&cand) == *self).then_some(cand)
                };
                let n2 = self.norm().int_part().clone();
                if n2.is_negative() {
                    return None;
                }
                let n = n2.sqrt();
                if &n * &n != n2 {
                    return None;
                }
                for sn in [n.clone(), -n] {
                    if self.ring.half_basis() {
                        // trace(z)² = 2A + B + 2·N(z) with z² = A + Bθ
                        let s2 = BigInt::from(2) * ax + bx + BigInt::from(2) * &sn;
                        if s2.is_negative() {
                            continue;
                        }
                        let s = s2.sqrt();
                        if &s * &s != s2 {
                            continue;
                        }
                        if s.is_zero() {
                            // trace zero: z = u(1 - 2θ) = -u√m, so target = u²m
                            let mb = BigInt::from(m);
                            if bx.is_zero() {
                                let (q, r) = ax.div_rem(&mb);
                                if r.is_zero() && !q.is_negative() {
                                    let u = q.sqrt();
                                    if &u * &u == q {
                                        let v = -(&u) * 2;
                                        if let Some(z) = verify(self.ring.quad(u, v)) {
                                            return Some(z);
                                        }
                                    }
                                }
                            }
                            continue;
                        }
                        let (v, rv) = bx.div_rem(&s);
                        if !rv.is_zero() {
                            continue;
                        }
                        let sv = &s - &v;
                        if sv.is_odd() {
                            continue;
                        }
                        let u = sv / 2;
                        if let Some(z) = verify(self.ring.quad(u, v)) {
                            return Some(z);
                        }
                    } else {
                        // z = u + v√m: u² = (A ± n)/2
                        let t = ax + &sn;
                        if t.is_odd() || t.is_negative() {
                            continue;
                        }
                        let u2: BigInt = t / 2;
                        let u = u2.sqrt();
                        if &u * &u != u2 {
                            continue;
                        }
                        if u.is_zero() {
                            if bx.is_zero() {
                                let mb = BigInt::from(m);
                                let (q, r) = ax.div_rem(&mb);
                                if r.is_zero() && !q.is_negative() {
                                    let v = q.sqrt();
                                    if &v * &v == q {
                                        if let Some(z) = verify(self.ring.quad(0, v)) {
                                            return Some(z);
                                        }
                                    }
                                }
                            }
                            continue;
                        }
                        let two_u = BigInt::from(2) * &u;
                        let (v, rv) = bx.div_rem(&two_u);
                        if !rv.is_zero() {
                            continue;
                        }
                        if let Some(z) = verify(self.ring.quad(u.clone(), v.clone())) {
                            return Some(z);
                        }
                        if let Some(z) = verify(self.ring.quad(-u, -v)) {
                            return Some(z);
                        }
                    }
                }
                None
            }
            Repr::Tower(_) => None,
        }
    }

    /// gcd of the integer coordinates (zero for the zero element).
    pub(crate) fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.coords() {
            g = g.gcd(&c);
        }
        g
    }

    pub(crate) fn div_content(&self, g: &BigInt) -> RingElement {
        if g.is_zero() || g.is_one() {
            return self.clone();
        }
        let repr = match &self.repr {
            Repr::Int(x) => Repr::Int(x / g),
            Repr::Quad(x, y) => Repr::Quad(x / g, y / g),
            Repr::Tower(c) => Repr::Tower(Box::new([
                (&c[0].0 / g, &c[0].1 / g),
                (&c[1].0 / g, &c[1].1 / g),
                (&c[2].0 / g, &c[2].1 / g),
            ])),
        };
        RingElement { ring: self.ring, repr }
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn pair(f: &mut fmt::Formatter<'_>, x: &BigInt, y: &BigInt) -> fmt::Result {
            if y.is_zero() {
                write!(f, "{x}")
            } else if x.is_zero() {
                write!(f, "{y}*w")
            } else if y.is_negative() {
                write!(f, "{x}{y}*w")
            } else {
                write!(f, "{x}+{y}*w")
            }
        }
        match &self.repr {
            Repr::Int(x) => write!(f, "{x}"),
            Repr::Quad(x, y) => pair(f, x, y),
            Repr::Tower(c) => {
                let mut first = true;
                for (i, (x, y)) in c.iter().enumerate() {
                    if x.is_zero() && y.is_zero() {
                        continue;
                    }
                    if !first {
                        write!(f, " + ")?;
                    }
                    first = false;
                    write!(f, "(")?;
                    pair(f, x, y)?;
                    write!(f, ")")?;
                    match i {
                        1 => write!(f, "*c")?,
                        2 => write!(f, "*c^2")?,
                        _ => {}
                    }
                }
                if first {
                    write!(f, "0")?;
                }
                Ok(())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quadratic_ring_is_closed_in_half_basis() {
        let r = NumberRing::quadratic(-3).unwrap();
        let w = r.generator();
        // ω² = ω - 1
        assert_eq!(w.mul(&w), w.sub(&r.one()));
        // ω³ = -1, ω^6 = 1
        assert_eq!(w.pow(3), r.one().neg());
        assert_eq!(w.pow(6), r.one());
    }

    #[test]
    fn norm_examples() {
        // 8 + 3√7 is a fundamental unit of Q(√7)
        let r7 = NumberRing::quadratic(7).unwrap();
        let e = r7.quad_sqrt_basis(8, 3);
        assert_eq!(e.norm().int_part(), &BigInt::from(1));
        // 8 + √65 has norm -1
        let r65 = NumberRing::quadratic(65).unwrap();
        let e = r65.quad_sqrt_basis(8, 1);
        assert_eq!(e.norm().int_part(), &BigInt::from(-1));
        // trivial
        assert_eq!(r65.one().norm().int_part(), &BigInt::from(1));
        // 32 + 5√41 has norm -1
        let r41 = NumberRing::quadratic(41).unwrap();
        let e = r41.quad_sqrt_basis(32, 5);
        assert_eq!(e.norm().int_part(), &BigInt::from(-1));
    }

    #[test]
    fn norm_is_multiplicative_quadratic() {
        let r = NumberRing::quadratic(65).unwrap();
        let x = r.quad(3, -2);
        let y = r.quad(-7, 5);
        assert_eq!(
            x.mul(&y).norm(),
            x.norm().mul(&y.norm()),
        );
    }

    #[test]
    fn tower_arithmetic_and_norm() {
        let t = NumberRing::tower(2).unwrap();
        let c = t.tower_gen();
        assert_eq!(c.pow(3), t.from_i64(2));
        // norm of c is a·(unit): N(c) = a = 2 viewed in Z[ω]
        let n = c.norm();
        assert_eq!(n.quad_parts().0, &BigInt::from(2));
        assert_eq!(n.quad_parts().1, &BigInt::zero());
        // multiplicativity spot check
        let w = t.generator();
        let x = c.add(&w).add(&t.from_i64(3));
        let y = c.mul(&c).sub(&w.mul_i64(2));
        assert_eq!(x.mul(&y).norm(), x.norm().mul(&y.norm()));
    }

    #[test]
    fn checked_div_roundtrip() {
        let r = NumberRing::quadratic(-1).unwrap();
        let pi = r.quad(1, 1); // 1 + i
        let x = r.quad(5, -3).mul(&pi);
        assert_eq!(x.checked_div(&pi).unwrap(), r.quad(5, -3));
        assert!(r.one().checked_div(&pi).is_none());

        let t = NumberRing::tower(2).unwrap();
        let c = t.tower_gen();
        let y = t.tower_elem([
            (BigInt::from(4), BigInt::from(-1)),
            (BigInt::from(0), BigInt::from(7)),
            (BigInt::from(2), BigInt::from(2)),
        ]);
        let prod = y.mul(&c);
        assert_eq!(prod.checked_div(&c).unwrap(), y);
        assert!(t.one().checked_div(&c).is_none());
    }

    #[test]
    fn sqrt_exact_quadratic() {
        let r41 = NumberRing::quadratic(41).unwrap();
        let s = r41.quad(14, 5);
        assert_eq!(s.mul(&s).sqrt_exact().map(|z| z.mul(&z)), Some(s.mul(&s)));
        // 446 + 165θ = (14 + 5θ)²
        let target = r41.quad(446, 165);
        let z = target.sqrt_exact().expect("is a square");
        assert_eq!(z.mul(&z), target);
        assert!(r41.quad(447, 165).sqrt_exact().is_none());

        let r7 = NumberRing::quadratic(7).unwrap();
        assert!(r7.one().sqrt_exact().is_some());
        assert_eq!(r7.from_i64(1), r7.one().sqrt_exact().unwrap());
        let u = r7.quad(3, 1);
        assert_eq!(u.mul(&u).sqrt_exact().map(|z| z.mul(&z)), Some(u.mul(&u)));
        // -ω is a square in Z[ω]: (-ω) = (ω²)²
        let rm3 = NumberRing::quadratic(-3).unwrap();
        let w = rm3.generator();
        let target = w.neg();
        let z = target.sqrt_exact().expect("-ω is the fourth power of ω");
        assert_eq!(z.mul(&z), target);
    }

    #[test]
    fn squarefree_guard() {
        assert!(NumberRing::quadratic(12).is_err());
        assert!(NumberRing::quadratic(1).is_err());
        assert!(NumberRing::quadratic(-4).is_err());
        assert!(NumberRing::tower(4).is_err());
        assert!(NumberRing::tower(3).is_err());
        assert!(NumberRing::tower(6).is_ok());
    }
}
