//! Small finite fields used as residue fields, plus GF(2^12) for exact
//! geometric root counting in residue characteristic two.
//!
//! Residue fields are GF(p) or GF(p^2) with a runtime descriptor; every
//! computation is an exact table-free loop over field elements, which is
//! cheap because the fields in play are tiny (F_2, F_4, F_p, F_{p^2} for
//! small p).

use std::fmt;

/// Descriptor of GF(p) (`deg == 1`) or GF(p^2) (`deg == 2`).
///
/// For degree two the generator `t` satisfies `t^2 = u*t + v`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub struct FfDesc {
    pub p: u64,
    pub deg: u8,
    pub u: u64,
    pub v: u64,
}

impl FfDesc {
    pub fn prime(p: u64) -> Self {
        FfDesc { p, deg: 1, u: 0, v: 0 }
    }

    /// GF(p^2) as GF(p)[t]/(t^2 - u t - v); the caller guarantees irreducibility.
    pub fn quadratic(p: u64, u: u64, v: u64) -> Self {
        FfDesc { p, deg: 2, u: u % p, v: v % p }
    }

    /// The standard F_4 = F_2[t]/(t^2 + t + 1).
    pub fn f4() -> Self {
        FfDesc::quadratic(2, 1, 1)
    }

    pub fn order(&self) -> u64 {
        if self.deg == 1 { self.p } else { self.p * self.p }
    }

    pub fn zero(&self) -> Ff {
        Ff { desc: *self, a: 0, b: 0 }
    }

    pub fn one(&self) -> Ff {
        Ff { desc: *self, a: 1 % self.p, b: 0 }
    }

    pub fn from_u64(&self, n: u64) -> Ff {
        Ff { desc: *self, a: n % self.p, b: 0 }
    }

    pub fn from_i64(&self, n: i64) -> Ff {
        let m = n.rem_euclid(self.p as i64) as u64;
        self.from_u64(m)
    }

    /// The generator `t` (only meaningful for degree two).
    pub fn gen(&self) -> Ff {
        debug_assert_eq!(self.deg, 2);
        Ff { desc: *self, a: 0, b: 1 }
    }

    pub fn from_pair(&self, a: u64, b: u64) -> Ff {
        Ff { desc: *self, a: a % self.p, b: if self.deg == 2 { b % self.p } else { 0 } }
    }

    /// All field elements, in a fixed order.
    pub fn elements(&self) -> impl Iterator<Item = Ff> + '_ {
        let p = self.p;
        let bs = if self.deg == 2 { p } else { 1 };
        (0..bs).flat_map(move |b| (0..p).map(move |a| Ff { desc: *self, a, b }))
    }
}

/// An element of GF(p) or GF(p^2): `a + b*t`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub struct Ff {
    pub desc: FfDesc,
    pub a: u64,
    pub b: u64,
}

impl Ff {
    pub fn is_zero(&self) -> bool {
        self.a == 0 && self.b == 0
    }

    pub fn add(&self, o: &Ff) -> Ff {
        debug_assert_eq!(self.desc, o.desc);
        let p = self.desc.p;
        Ff { desc: self.desc, a: (self.a + o.a) % p, b: (self.b + o.b) % p }
    }

    pub fn sub(&self, o: &Ff) -> Ff {
        let p = self.desc.p;
        Ff { desc: self.desc, a: (self.a + p - o.a) % p, b: (self.b + p - o.b) % p }
    }

    pub fn neg(&self) -> Ff {
        self.desc.zero().sub(self)
    }

    pub fn mul(&self, o: &Ff) -> Ff {
        debug_assert_eq!(self.desc, o.desc);
        let p = self.desc.p as u128;
        let (a1, b1, a2, b2) = (self.a as u128, self.b as u128, o.a as u128, o.b as u128);
        if self.desc.deg == 1 {
            return Ff { desc: self.desc, a: (a1 * a2 % p) as u64, b: 0 };
        }
        // (a1 + b1 t)(a2 + b2 t) with t^2 = u t + v
        let (u, v) = (self.desc.u as u128, self.desc.v as u128);
        let tt = b1 * b2 % p;
        let a = (a1 * a2 + tt * v) % p;
        let b = (a1 * b2 + a2 * b1 + tt * u) % p;
        Ff { desc: self.desc, a: a as u64, b: b as u64 }
    }

    pub fn pow(&self, mut e: u64) -> Ff {
        let mut base = *self;
        let mut acc = self.desc.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self) -> Ff {
        assert!(!self.is_zero(), "inverse of zero in finite field");
        self.pow(self.desc.order() - 2)
    }

    pub fn div(&self, o: &Ff) -> Ff {
        self.mul(&o.inv())
    }

    /// Square root in characteristic two (Frobenius is bijective): x^(q/2).
    pub fn sqrt_char2(&self) -> Ff {
        debug_assert_eq!(self.desc.p, 2);
        self.pow(self.desc.order() / 2)
    }
}

impl fmt::Display for Ff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.desc.deg == 1 || self.b == 0 {
            write!(f, "{}", self.a)
        } else if self.a == 0 && self.b == 1 {
            write!(f, "t")
        } else if self.a == 0 {
            write!(f, "{}t", self.b)
        } else if self.b == 1 {
            write!(f, "{}+t", self.a)
        } else {
            write!(f, "{}+{}t", self.a, self.b)
        }
    }
}

// ---------------------------------------------------------------------------
// polynomials over Ff (dense, little-endian)
// ---------------------------------------------------------------------------

/// Trim trailing zeros; the zero polynomial becomes an empty vector.
pub fn poly_trim(mut f: Vec<Ff>) -> Vec<Ff> {
    while let Some(last) = f.last() {
        if last.is_zero() {
            f.pop();
        } else {
            break;
        }
    }
    f
}

pub fn poly_eval(f: &[Ff], x: &Ff) -> Ff {
    let mut acc = x.desc.zero();
    for c in f.iter().rev() {
        acc = acc.mul(x).add(c);
    }
    acc
}

/// Divide `f` by the linear factor `T - r`; returns the quotient.
/// The caller must know `r` is a root.
pub fn poly_deflate(f: &[Ff], r: &Ff) -> Vec<Ff> {
    let n = f.len();
    if n <= 1 {
        return vec![];
    }
    let mut q = vec![r.desc.zero(); n - 1];
    let mut carry = f[n - 1];
    for i in (0..n - 1).rev() {
        q[i] = carry;
        carry = f[i].add(&carry.mul(r));
    }
    debug_assert!(carry.is_zero(), "deflation by a non-root");
    q
}

/// Roots of `f` in its (small) coefficient field, with multiplicities.
pub fn roots_in_field(f: &[Ff], desc: &FfDesc) -> Vec<(Ff, u32)> {
    let f = poly_trim(f.to_vec());
    let mut out = Vec::new();
    if f.is_empty() {
        return out;
    }
    for x in desc.elements() {
        if poly_eval(&f, &x).is_zero() {
            let mut mult = 0u32;
            let mut g = f.clone();
            while !g.is_empty() && poly_eval(&g, &x).is_zero() {
                g = poly_deflate(&g, &x);
                mult += 1;
            }
            out.push((x, mult));
        }
    }
    out
}

// ---------------------------------------------------------------------------
// GF(2^12): one field containing every root of a cubic over F_2 or F_4
// ---------------------------------------------------------------------------

/// GF(2^12) = F_2[x]/(x^12 + x^3 + 1). Subfields are GF(2^d) for d | 12,
/// so the splitting field of any polynomial of degree <= 3 over F_2 or F_4
/// embeds here (factor degrees 1,2,3 over either base give extensions of
/// degree dividing 12).
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub struct Gf4096(pub u16);

const GF4096_POLY: u32 = (1 << 12) | (1 << 3) | 1;

impl Gf4096 {
    pub const ZERO: Gf4096 = Gf4096(0);
    pub const ONE: Gf4096 = Gf4096(1);

    pub fn add(self, o: Gf4096) -> Gf4096 {
        Gf4096(self.0 ^ o.0)
    }

    pub fn mul(self, o: Gf4096) -> Gf4096 {
        let mut acc: u32 = 0;
        let a = self.0 as u32;
        let mut b = o.0 as u32;
        let mut shift = a;
        while b != 0 {
            if b & 1 == 1 {
                acc ^= shift;
            }
            b >>= 1;
            shift <<= 1;
        }
        // reduce degree-22 product
        for bit in (12..=23).rev() {
            if acc >> bit & 1 == 1 {
                acc ^= GF4096_POLY << (bit - 12);
            }
        }
        Gf4096(acc as u16)
    }

    pub fn pow(self, mut e: u64) -> Gf4096 {
        let mut base = self;
        let mut acc = Gf4096::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(base);
            }
            base = base.mul(base);
            e >>= 1;
        }
        acc
    }

    /// An element of multiplicative order three (so w^2 = w + 1); this is the
    /// image of the F_4 generator.
    pub fn omega() -> Gf4096 {
        for n in 2..4096u16 {
            let x = Gf4096(n);
            if x.mul(x).add(x) == Gf4096::ONE {
                return x;
            }
        }
        unreachable!("GF(4096) contains F_4")
    }
}

/// Embed an element of F_2 or standard F_4 (t^2 = t + 1) into GF(2^12).
pub fn embed_char2(x: &Ff) -> Gf4096 {
    debug_assert_eq!(x.desc.p, 2);
    if x.desc.deg == 2 {
        debug_assert_eq!((x.desc.u, x.desc.v), (1, 1));
    }
    let mut r = if x.a == 1 { Gf4096::ONE } else { Gf4096::ZERO };
    if x.b == 1 {
        r = r.add(Gf4096::omega());
    }
    r
}

/// Distinct geometric roots (over the algebraic closure) of a polynomial of
/// degree <= 3 with coefficients in F_2 or F_4, together with multiplicities.
/// Returned as the sorted multiplicity profile, e.g. `[1, 2]` for a double
/// plus a simple root.
pub fn geometric_root_profile_char2(f: &[Ff]) -> Vec<u32> {
    let f = poly_trim(f.to_vec());
    assert!(f.len() <= 4, "geometric root counting is implemented for degree <= 3");
    let coeffs: Vec<Gf4096> = f.iter().map(embed_char2).collect();
    let mut profile = Vec::new();
    if coeffs.len() <= 1 {
        return profile;
    }
    let eval = |g: &[Gf4096], x: Gf4096| -> Gf4096 {
        let mut acc = Gf4096::ZERO;
        for c in g.iter().rev() {
            acc = acc.mul(x).add(*c);
        }
        acc
    };
    let deflate = |g: &[Gf4096], r: Gf4096| -> Vec<Gf4096> {
        let n = g.len();
        let mut q = vec![Gf4096::ZERO; n - 1];
        let mut carry = g[n - 1];
        for i in (0..n - 1).rev() {
            q[i] = carry;
            carry = g[i].add(carry.mul(r));
        }
        q
    };
    for n in 0..4096u16 {
        let x = Gf4096(n);
        if eval(&coeffs, x) == Gf4096::ZERO {
            let mut mult = 0u32;
            let mut g = coeffs.clone();
            while g.len() > 1 && eval(&g, x) == Gf4096::ZERO {
                g = deflate(&g, x);
                mult += 1;
            }
            profile.push(mult);
        }
    }
    profile.sort_unstable();
    debug_assert_eq!(
        profile.iter().sum::<u32>() as usize,
        coeffs.len() - 1,
        "cubic over F_4 must split in GF(2^12)"
    );
    profile
}

/// Polynomial gcd (monic output) over a small field.
pub fn poly_gcd(f: &[Ff], g: &[Ff]) -> Vec<Ff> {
    let mut a = poly_trim(f.to_vec());
    let mut b = poly_trim(g.to_vec());
    while !b.is_empty() {
        // a mod b
        let lead = b.last().unwrap().inv();
        let mut r = a.clone();
        while r.len() >= b.len() && !r.is_empty() {
            let k = r.len() - b.len();
            let q = r.last().unwrap().mul(&lead);
            for i in 0..b.len() {
                r[k + i] = r[k + i].sub(&q.mul(&b[i]));
            }
            r = poly_trim(r);
        }
        a = b;
        b = r;
    }
    if let Some(lead) = a.last().map(|c| c.inv()) {
        a = a.iter().map(|c| c.mul(&lead)).collect();
    }
    a
}

/// Multiplicity profile of the geometric roots (over the algebraic closure)
/// of a polynomial of degree ≤ 3 over a small residue field, sorted.
pub fn geometric_root_profile(f: &[Ff], desc: &FfDesc) -> Vec<u32> {
    let f = poly_trim(f.to_vec());
    let deg = f.len().saturating_sub(1);
    assert!(deg <= 3, "profiles implemented for degree <= 3");
    if deg == 0 {
        return vec![];
    }
    if desc.p == 2 {
        return geometric_root_profile_char2(&f);
    }
    // odd characteristic: distinct-root count via gcd with the derivative;
    // for degree <= 3 the count determines the profile
    let mut deriv = vec![desc.zero(); deg];
    for (i, c) in f.iter().enumerate().skip(1) {
        deriv[i - 1] = c.mul(&desc.from_u64(i as u64));
    }
    let deriv = poly_trim(deriv);
    let distinct = if deriv.is_empty() {
        // f = (T - c)^p with p = 3: one geometric root
        1
    } else {
        deg - (poly_gcd(&f, &deriv).len() - 1)
    };
    match (deg, distinct) {
        (1, _) => vec![1],
        (2, 2) => vec![1, 1],
        (2, 1) => vec![2],
        (3, 3) => vec![1, 1, 1],
        (3, 2) => vec![1, 2],
        (3, 1) => vec![3],
        _ => unreachable!("impossible root profile"),
    }
}
