//! Prime decomposition in the supported rings and normalized valuations.

use super::hensel::SplitEmbedding;
use super::{NumberRing, NumringError, RingElement};
use crate::ff::{Ff, FfDesc};
use crate::numring::local::Valn;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Splitting {
    Split { which: u8 },
    Inert,
    Ramified,
}

/// A prime of the ring above a rational prime p, with enough structure to
/// compute valuations, residues and Teichmüller-free lifts exactly.
#[derive(Clone, Debug)]
pub struct LocalPrime {
    ring: NumberRing,
    p: u64,
    splitting: Splitting,
    e: u32,
    f: u32,
    uniformizer: RingElement,
    /// starting p-adic precision (in digits) for split-prime valuations;
    /// escalates by doubling until the valuation stabilizes
    hensel_start_digits: u32,
    /// reduction data: the residue class of θ for f = 1 primes
    theta_bar: u64,
    /// minimal polynomial data T² = s·T + q for the Hensel embedding
    minpoly: Option<(BigInt, BigInt, u64)>, // (s, q, r0)
}

impl PartialEq for LocalPrime {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.p == other.p && self.splitting == other.splitting
    }
}
impl Eq for LocalPrime {}

impl LocalPrime {
    pub fn ring(&self) -> NumberRing {
        self.ring
    }

    pub fn residue_char(&self) -> u64 {
        self.p
    }

    pub fn splitting(&self) -> Splitting {
        self.splitting
    }

    pub fn ramification_index(&self) -> u32 {
        self.e
    }

    pub fn residue_degree(&self) -> u32 {
        self.f
    }

    pub fn uniformizer(&self) -> &RingElement {
        &self.uniformizer
    }

    pub fn hensel_start_digits(&self) -> u32 {
        self.hensel_start_digits
    }

    /// A short label like "(2)" or "(1+w)" or "P2_1".
    pub fn label(&self) -> String {
        match self.splitting {
            Splitting::Split { which } => format!("P{}_{}", self.p, which),
            Splitting::Inert => format!("({})", self.p),
            Splitting::Ramified => format!("({})", self.uniformizer),
        }
    }

    pub fn residue_field(&self) -> FfDesc {
        if self.f == 1 {
            FfDesc::prime(self.p)
        } else {
            match self.ring {
                NumberRing::Quadratic { .. } => {
                    let (s, q, _) = self.minpoly.as_ref().expect("inert prime has minpoly");
                    let p = BigInt::from(self.p);
                    FfDesc::quadratic(
                        self.p,
                        s.mod_floor(&p).to_u64_digits().1.first().copied().unwrap_or(0),
                        q.mod_floor(&p).to_u64_digits().1.first().copied().unwrap_or(0),
                    )
                }
                NumberRing::Tower { .. } => FfDesc::f4(),
                NumberRing::Rational => unreachable!(),
            }
        }
    }

    fn embedding(&self) -> SplitEmbedding {
        let (s, q, r0) = self.minpoly.clone().expect("split prime carries minpoly");
        SplitEmbedding { p: self.p, s, q, r0 }
    }

    /// Valuation and leading unit digit of x + yθ through the p-adic
    /// embedding; split primes only.
    pub(crate) fn split_val_and_unit(
        &self,
        x: &BigInt,
        y: &BigInt,
    ) -> Result<(u64, u64), NumringError> {
        debug_assert!(matches!(self.splitting, Splitting::Split { .. }));
        self.embedding().val_and_residue(x, y)
    }

    /// Normalized valuation of a ring element (val(π) = 1, val(0) = ∞).
    pub fn val_ring(&self, x: &RingElement) -> Result<Valn, NumringError> {
        if x.ring() != self.ring {
            return Err(NumringError::MixedRings);
        }
        if x.is_zero() {
            return Ok(Valn::Inf);
        }
        let vp_int = |n: &BigInt| -> i64 {
            let p = BigInt::from(self.p);
            let mut v = 0i64;
            let mut t = n.abs();
            loop {
                let (q, r) = t.div_rem(&p);
                if r.is_zero() && !t.is_zero() {
                    v += 1;
                    t = q;
                } else {
                    return v;
                }
            }
        };
        let v = match (&self.ring, self.splitting) {
            (NumberRing::Rational, _) => vp_int(x.int_part()),
            (NumberRing::Quadratic { .. }, Splitting::Inert) => {
                let (a, b) = x.quad_parts();
                if a.is_zero() {
                    vp_int(b)
                } else if b.is_zero() {
                    vp_int(a)
                } else {
                    vp_int(a).min(vp_int(b))
                }
            }
            (NumberRing::Quadratic { .. }, Splitting::Ramified) => {
                vp_int(x.norm().int_part())
            }
            (NumberRing::Quadratic { .. }, Splitting::Split { .. }) => {
                let (a, b) = x.quad_parts();
                let (v, _) = self.embedding().val_and_residue(a, b)?;
                v as i64
            }
            (NumberRing::Tower { .. }, _) => {
                let parts = x.tower_parts();
                let mut best = i64::MAX;
                for (i, (a, b)) in parts.iter().enumerate() {
                    if a.is_zero() && b.is_zero() {
                        continue;
                    }
                    let inner = if a.is_zero() {
                        vp_int(b)
                    } else if b.is_zero() {
                        vp_int(a)
                    } else {
                        vp_int(a).min(vp_int(b))
                    };
                    best = best.min(3 * inner + i as i64);
                }
                best
            }
        };
        Ok(Valn::Fin(v))
    }

    /// Reduction of a ring element modulo the prime.
    pub fn reduce_ring(&self, x: &RingElement) -> Result<Ff, NumringError> {
        if x.ring() != self.ring {
            return Err(NumringError::MixedRings);
        }
        let k = self.residue_field();
        let p = BigInt::from(self.p);
        let red = |n: &BigInt| -> u64 {
            n.mod_floor(&p).to_u64_digits().1.first().copied().unwrap_or(0)
        };
        let out = match (&self.ring, self.splitting) {
            (NumberRing::Rational, _) => k.from_u64(red(x.int_part())),
            (NumberRing::Quadratic { .. }, Splitting::Inert) => {
                let (a, b) = x.quad_parts();
                k.from_pair(red(a), red(b))
            }
            (NumberRing::Quadratic { .. }, Splitting::Ramified) => {
                let (a, b) = x.quad_parts();
                k.from_u64((red(a) + red(b) * (self.theta_bar % self.p)) % self.p)
            }
            (NumberRing::Quadratic { .. }, Splitting::Split { .. }) => {
                let (a, b) = x.quad_parts();
                k.from_u64((red(a) + red(b) * (self.theta_bar % self.p)) % self.p)
            }
            (NumberRing::Tower { .. }, _) => {
                let (a, b) = &x.tower_parts()[0];
                k.from_pair(red(a), red(b))
            }
        };
        Ok(out)
    }

    /// A lift of a residue-field element into the ring.
    pub fn lift(&self, r: &Ff) -> RingElement {
        match (&self.ring, self.f) {
            (NumberRing::Rational, _) => self.ring.from_i64(r.a as i64),
            (NumberRing::Quadratic { .. }, 1) => {
                // split and ramified primes have prime residue fields
                self.ring.quad(r.a as i64, 0)
            }
            (NumberRing::Quadratic { .. }, _) => self.ring.quad(r.a as i64, r.b as i64),
            (NumberRing::Tower { .. }, _) => self.ring.tower_elem([
                (BigInt::from(r.a), BigInt::from(r.b)),
                (BigInt::zero(), BigInt::zero()),
                (BigInt::zero(), BigInt::zero()),
            ]),
        }
    }

    /// (w, n) with uniformizer·w = n a rational integer; gives 1/π = w/n.
    pub(crate) fn pi_cofactor(&self) -> (RingElement, BigInt) {
        match (&self.ring, self.splitting) {
            (NumberRing::Rational, _) => (self.ring.one(), BigInt::from(self.p)),
            (NumberRing::Quadratic { .. }, Splitting::Split { .. })
            | (NumberRing::Quadratic { .. }, Splitting::Inert) => {
                (self.ring.one(), BigInt::from(self.p))
            }
            (NumberRing::Quadratic { .. }, Splitting::Ramified) => {
                let w = self.uniformizer.conj();
                let n = self.uniformizer.norm().int_part().clone();
                (w, n)
            }
            (NumberRing::Tower { a }, _) => {
                let c = self.ring.tower_gen();
                (c.mul(&c), BigInt::from(*a))
            }
        }
    }
}

/// All primes of the ring above 2, with correct e, f and uniformizers.
pub fn primes_over_two(ring: &NumberRing) -> Result<Vec<LocalPrime>, NumringError> {
    primes_over(ring, 2)
}

/// All primes of the ring above the rational prime p.
pub fn primes_over(ring: &NumberRing, p: u64) -> Result<Vec<LocalPrime>, NumringError> {
    if p < 2 {
        return Err(NumringError::UnsupportedRing);
    }
    if p > 1_000_003 {
        return Err(NumringError::PrimeTooLarge(p));
    }
    let base = LocalPrime {
        ring: *ring,
        p,
        splitting: Splitting::Inert,
        e: 1,
        f: 1,
        uniformizer: ring.from_i64(p as i64),
        hensel_start_digits: 64,
        theta_bar: 0,
        minpoly: None,
    };
    match ring {
        NumberRing::Rational => Ok(vec![base]),
        NumberRing::Quadratic { m } => {
            let m = *m;
            // θ minimal polynomial T² - sT - q
            let (s, q) = if ring.half_basis() {
                (BigInt::from(1), BigInt::from((m - 1) / 4))
            } else {
                (BigInt::zero(), BigInt::from(m))
            };
            let pb = p as i64;
            let disc_divisible = if p == 2 {
                m.rem_euclid(4) != 1
            } else {
                m.rem_euclid(pb) == 0
            };
            if disc_divisible {
                // ramified
                let (pi, theta_bar) = ramified_uniformizer(ring, m, p)?;
                return Ok(vec![LocalPrime {
                    splitting: Splitting::Ramified,
                    e: 2,
                    f: 1,
                    uniformizer: pi,
                    theta_bar,
                    minpoly: Some((s, q, 0)),
                    ..base
                }]);
            }
            // split or inert according to the roots of the minimal polynomial mod p
            let pq = BigInt::from(p);
            let sm = s.mod_floor(&pq).to_u64_digits().1.first().copied().unwrap_or(0);
            let qm = q.mod_floor(&pq).to_u64_digits().1.first().copied().unwrap_or(0);
            let mut roots = Vec::new();
            for r in 0..p {
                // r² - s·r - q ≡ 0 mod p
                let lhs = ((r as u128 * r as u128) % p as u128 + 2 * p as u128
                    - (sm as u128 * r as u128) % p as u128
                    - qm as u128 % p as u128)
                    % p as u128;
                if lhs == 0 {
                    roots.push(r);
                }
            }
            match roots.len() {
                2 => {
                    let out = roots
                        .iter()
                        .enumerate()
                        .map(|(i, r0)| LocalPrime {
                            splitting: Splitting::Split { which: i as u8 + 1 },
                            e: 1,
                            f: 1,
                            uniformizer: ring.from_i64(p as i64),
                            theta_bar: *r0,
                            minpoly: Some((s.clone(), q.clone(), *r0)),
                            ..base.clone()
                        })
                        .collect();
                    Ok(out)
                }
                0 => Ok(vec![LocalPrime {
                    splitting: Splitting::Inert,
                    e: 1,
                    f: 2,
                    uniformizer: ring.from_i64(p as i64),
                    minpoly: Some((s, q, 0)),
                    ..base
                }]),
                _ => unreachable!("a separable quadratic mod p has 0 or 2 roots"),
            }
        }
        NumberRing::Tower { .. } => {
            if p != 2 {
                return Err(NumringError::UnsupportedRing);
            }
            Ok(vec![LocalPrime {
                splitting: Splitting::Ramified,
                e: 3,
                f: 2,
                uniformizer: ring.tower_gen(),
                minpoly: None,
                ..base
            }])
        }
    }
}

fn ramified_uniformizer(
    ring: &NumberRing,
    m: i64,
    p: u64,
) -> Result<(RingElement, u64), NumringError> {
    if p == 2 {
        if m % 2 == 0 {
            // π = √m = θ, θ̄ = 0
            Ok((ring.quad(0, 1), 0))
        } else {
            // m ≡ 3 mod 4: any x + θ with odd x works; prefer one whose norm
            // is ±2 so local denominators stay 2-powers
            // x odd gives N(x+θ) = x² - m ≡ 2 mod 4, hence valuation one
            let mut best: Option<(i64, i64)> = None; // (x, |odd part of norm|)
            for x in (1..=15i64).step_by(2) {
                let n = (x * x - m).abs();
                if n == 0 {
                    continue;
                }
                let mut odd = n;
                while odd % 2 == 0 {
                    odd /= 2;
                }
                match best {
                    Some((_, o)) if o <= odd => {}
                    _ => best = Some((x, odd)),
                }
            }
            let (x, _) = best.unwrap_or((1, 1));
            // θ ≡ -x ≡ x mod 2
            Ok((ring.quad(x, 1), 1))
        }
    } else {
        // odd p | m
        let pb = p as i64;
        if ring.half_basis() {
            // π = 2θ - 1 = √m ; θ̄ = (p+1)/2
            let theta_bar = ((pb + 1) / 2) as u64;
            Ok((ring.quad(-1, 2), theta_bar))
        } else {
            Ok((ring.quad(0, 1), 0))
        }
    }
}

/// The normalized P-adic valuation of a ring element.
pub fn valuation(x: &RingElement, prime: &LocalPrime) -> Result<Valn, NumringError> {
    prime.val_ring(x)
}
