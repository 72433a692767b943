//! Exact arithmetic in the localization of a ring at one of its primes.
//!
//! Local elements are fractions x/s with x in the ring and s a nonzero
//! rational integer. This is closed under every operation Tate's algorithm
//! performs (translations by ring elements, division by uniformizer powers,
//! division by 2 away from two), and valuations/residues stay exact.

use super::primes::{LocalPrime, Splitting};
use super::{NumberRing, RingElement};
use crate::ff::Ff;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// A normalized valuation value: finite or +∞ (the valuation of zero).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Valn {
    Fin(i64),
    Inf,
}

impl Valn {
    pub fn is_finite(&self) -> bool {
        matches!(self, Valn::Fin(_))
    }

    pub fn finite(&self) -> Option<i64> {
        match self {
            Valn::Fin(v) => Some(*v),
            Valn::Inf => None,
        }
    }

    pub fn at_least(&self, bound: i64) -> bool {
        match self {
            Valn::Fin(v) => *v >= bound,
            Valn::Inf => true,
        }
    }

    pub fn add_i64(&self, k: i64) -> Valn {
        match self {
            Valn::Fin(v) => Valn::Fin(v + k),
            Valn::Inf => Valn::Inf,
        }
    }
}

impl PartialOrd for Valn {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Valn {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        match (self, other) {
            (Valn::Inf, Valn::Inf) => std::cmp::Ordering::Equal,
            (Valn::Inf, _) => std::cmp::Ordering::Greater,
            (_, Valn::Inf) => std::cmp::Ordering::Less,
            (Valn::Fin(a), Valn::Fin(b)) => a.cmp(b),
        }
    }
}

impl fmt::Display for Valn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valn::Fin(v) => write!(f, "{v}"),
            Valn::Inf => write!(f, "inf"),
        }
    }
}

/// An element of the localization at a prime: `num / den` with `den` a
/// positive rational integer.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LocalElem {
    num: RingElement,
    den: BigInt,
}

impl LocalElem {
    pub fn from_ring(x: RingElement) -> LocalElem {
        LocalElem { num: x, den: BigInt::one() }
    }

    pub fn new(num: RingElement, den: BigInt) -> LocalElem {
        assert!(!den.is_zero(), "zero denominator");
        let mut e = LocalElem { num, den };
        e.normalize();
        e
    }

    pub fn ring(&self) -> NumberRing {
        self.num.ring()
    }

    pub fn num(&self) -> &RingElement {
        &self.num
    }

    pub fn den(&self) -> &BigInt {
        &self.den
    }

    /// The element as a ring element when the denominator reduces to one.
    pub fn as_ring_element(&self) -> Option<RingElement> {
        self.den.is_one().then(|| self.num.clone())
    }

    fn normalize(&mut self) {
        if self.den.is_negative() {
            self.den = -self.den.clone();
            self.num = self.num.neg();
        }
        if self.num.is_zero() {
            self.den = BigInt::one();
            return;
        }
        let g = self.num.content().gcd(&self.den);
        if !g.is_one() {
            self.num = self.num.div_content(&g);
            self.den = &self.den / g;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn small(&self, n: i64) -> LocalElem {
        LocalElem::from_ring(self.num.ring().from_i64(n))
    }

    pub fn add(&self, o: &LocalElem) -> LocalElem {
        let num = self
            .num
            .mul(&self.num.ring().from_bigint(o.den.clone()))
            .add(&o.num.mul(&o.num.ring().from_bigint(self.den.clone())));
        LocalElem::new(num, &self.den * &o.den)
    }

    pub fn sub(&self, o: &LocalElem) -> LocalElem {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> LocalElem {
        LocalElem { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn mul(&self, o: &LocalElem) -> LocalElem {
        LocalElem::new(self.num.mul(&o.num), &self.den * &o.den)
    }

    pub fn mul_i64(&self, k: i64) -> LocalElem {
        LocalElem::new(self.num.mul_i64(k), self.den.clone())
    }

    pub fn mul_ring(&self, k: &RingElement) -> LocalElem {
        LocalElem::new(self.num.mul(k), self.den.clone())
    }

    /// Division by a nonzero rational integer (exact in the localization as
    /// long as the integer is a unit there; tracked in the denominator).
    pub fn div_int(&self, k: &BigInt) -> LocalElem {
        LocalElem::new(self.num.clone(), &self.den * k)
    }

    pub fn pow(&self, e: u32) -> LocalElem {
        let mut acc = LocalElem::from_ring(self.num.ring().one());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Valuation at the prime; the denominator contributes -e·v_p(den).
    pub fn val(&self, prime: &LocalPrime) -> Valn {
        if self.num.is_zero() {
            return Valn::Inf;
        }
        let vnum = prime
            .val_ring(&self.num)
            .expect("element and prime share a ring")
            .finite()
            .expect("nonzero numerator");
        let p = BigInt::from(prime.residue_char());
        let mut vden = 0i64;
        let mut d = self.den.clone();
        loop {
            let (q, r) = d.div_rem(&p);
            if r.is_zero() {
                vden += 1;
                d = q;
            } else {
                break;
            }
        }
        Valn::Fin(vnum - prime.ramification_index() as i64 * vden)
    }

    /// Reduction modulo the prime. The element must have val >= 0.
    pub fn residue(&self, prime: &LocalPrime) -> Ff {
        let k = prime.residue_field();
        match self.val(prime) {
            Valn::Inf => return k.zero(),
            Valn::Fin(v) => {
                assert!(v >= 0, "residue of an element with negative valuation");
                if v > 0 {
                    return k.zero();
                }
            }
        }
        // split off the p-part of the denominator
        let p = BigInt::from(prime.residue_char());
        let mut dp = 0u32;
        let mut dunit = self.den.clone();
        loop {
            let (q, r) = dunit.div_rem(&p);
            if r.is_zero() {
                dp += 1;
                dunit = q;
            } else {
                break;
            }
        }
        let du_red = dunit.mod_floor(&p).to_u64_digits().1.first().copied().unwrap_or(0);
        let du_inv = k.from_u64(du_red).inv();

        if let (NumberRing::Quadratic { .. }, Splitting::Split { .. }) =
            (self.ring(), prime.splitting())
        {
            // residue through the p-adic embedding digit
            let (x, y) = self.num.quad_parts();
            let (v, digit) = split_embedding_val(prime, x, y);
            debug_assert_eq!(v, dp as u64);
            return k.from_u64(digit).mul(&du_inv);
        }

        // unique prime above p: p^dp divides the numerator coordinate-wise
        let num = divide_coords_exact(&self.num, &p, dp);
        let r = prime.reduce_ring(&num).expect("same ring");
        r.mul(&du_inv)
    }

    /// Divide by the k-th power of the uniformizer.
    pub fn div_pi(&self, prime: &LocalPrime, k: u32) -> LocalElem {
        if k == 0 {
            return self.clone();
        }
        let (w, n) = prime.pi_cofactor();
        let mut num = self.num.clone();
        let mut den = self.den.clone();
        for _ in 0..k {
            num = num.mul(&w);
            den *= &n;
        }
        LocalElem::new(num, den)
    }

    /// Multiply by the k-th power of the uniformizer.
    pub fn mul_pi(&self, prime: &LocalPrime, k: u32) -> LocalElem {
        let mut num = self.num.clone();
        for _ in 0..k {
            num = num.mul(prime.uniformizer());
        }
        LocalElem { num, den: self.den.clone() }
    }

    /// Canonical lift of a residue-field element.
    pub fn lift(prime: &LocalPrime, r: &Ff) -> LocalElem {
        LocalElem::from_ring(prime.lift(r))
    }
}

fn split_embedding_val(prime: &LocalPrime, x: &BigInt, y: &BigInt) -> (u64, u64) {
    prime
        .split_val_and_unit(x, y)
        .expect("split valuation terminates on nonzero elements")
}

fn divide_coords_exact(x: &RingElement, p: &BigInt, k: u32) -> RingElement {
    if k == 0 {
        return x.clone();
    }
    let d = p.pow(k);
    x.checked_div(&x.ring().from_bigint(d))
        .expect("valuation bound guarantees exact division")
}

impl fmt::Display for LocalElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/{}", self.num, self.den)
        }
    }
}
