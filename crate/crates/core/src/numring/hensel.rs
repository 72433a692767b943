//! Newton lifting of simple roots of the θ minimal polynomial to p-adic
//! precision, used for valuations and residues at split primes.

use super::NumringError;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

fn p_pow(p: u64, k: u32) -> BigInt {
    BigInt::from(p).pow(k)
}

fn inv_mod(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.extended_gcd(m);
    debug_assert!(e.gcd.is_one(), "inverse of non-unit");
    e.x.mod_floor(m)
}

/// The p-adic embedding θ ↦ r determined by a simple root r ≡ r0 (mod p) of
/// T² - s·T - q.
#[derive(Clone, Debug)]
pub(crate) struct SplitEmbedding {
    pub p: u64,
    pub s: BigInt,
    pub q: BigInt,
    pub r0: u64,
}

impl SplitEmbedding {
    fn f(&self, r: &BigInt) -> BigInt {
        r * r - &self.s * r - &self.q
    }

    fn fprime(&self, r: &BigInt) -> BigInt {
        BigInt::from(2) * r - &self.s
    }

    /// Root modulo p^k (k in p-digits).
    pub fn root(&self, k: u32) -> BigInt {
        let mut r = BigInt::from(self.r0);
        let mut prec = 1u32;
        debug_assert!(self.f(&r).mod_floor(&BigInt::from(self.p)).is_zero());
        while prec < k {
            prec = (prec * 2).min(k);
            let m = p_pow(self.p, prec);
            let d = inv_mod(&self.fprime(&r).mod_floor(&m), &m);
            r = (&r - self.f(&r) * d).mod_floor(&m);
        }
        r
    }

    /// Valuation and unit residue digit of x + yθ at this prime: returns
    /// (v, u) with x + yθ = p^v · (u + O(p)), u in 1..p. Precision escalates
    /// from 64 digits until the valuation stabilizes.
    pub fn val_and_residue(&self, x: &BigInt, y: &BigInt) -> Result<(u64, u64), NumringError> {
        debug_assert!(!(x.is_zero() && y.is_zero()));
        let mut k: u32 = 64;
        loop {
            let m = p_pow(self.p, k);
            let t = (x + y * self.root(k)).mod_floor(&m);
            if !t.is_zero() {
                let p = BigInt::from(self.p);
                let mut v = 0u64;
                let mut t = t;
                loop {
                    let (q, r) = t.div_rem(&p);
                    if r.is_zero() {
                        v += 1;
                        t = q;
                    } else {
                        break;
                    }
                }
                let digit = t.mod_floor(&p);
                return Ok((v, digit.to_u64_digits().1.first().copied().unwrap_or(0)));
            }
            if k >= 1 << 20 {
                return Err(NumringError::PrecisionCeiling);
            }
            k *= 2;
        }
    }
}
