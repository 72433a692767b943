//! Discriminant classifiers: fundamental discriminants of quadratic fields
//! and discriminants of pure cubic fields.

use super::NumringError;
#[cfg(test)]
use super::i64_squarefree;

/// A fundamental discriminant d = ε·(-1/p₁…p_r)·2^ν·p₁…p_r with pairwise
/// different odd primes, ν ∈ {0,2,3}, and ε = -1 forced when ν = 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FundamentalDiscriminant {
    pub value: i64,
    pub epsilon: i8,
    pub nu: u8,
    pub odd_primes: Vec<u64>,
}

fn odd_prime_factors(mut n: u64) -> Option<Vec<u64>> {
    // squarefree factorization; None when not squarefree
    let mut out = Vec::new();
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            n /= d;
            if n % d == 0 {
                return None;
            }
            out.push(d);
        }
        d += 2;
    }
    if n > 1 {
        out.push(n);
    }
    Some(out)
}

/// Decompose d in the displayed fundamental-discriminant form, or return
/// `None` when d is not the discriminant of a quadratic field.
///
/// This agrees with the direct test: d ≡ 1 mod 4 and squarefree, or d = 4k
/// with k ≡ 2, 3 mod 4 and k squarefree.
pub fn is_fundamental_discriminant(d: i64) -> Option<FundamentalDiscriminant> {
    if d == 0 {
        return None;
    }
    let mut n = d.unsigned_abs();
    let mut nu: u8 = 0;
    while n % 2 == 0 {
        n /= 2;
        nu += 1;
    }
    if !matches!(nu, 0 | 2 | 3) {
        return None;
    }
    let odd_primes = odd_prime_factors(n)?;
    // χ = (-1 / p₁…p_r): +1 iff the odd part is ≡ 1 mod 4
    let chi: i64 = if n % 4 == 1 { 1 } else { -1 };
    let epsilon = d.signum() * chi;
    match nu {
        0 if epsilon != 1 => return None,
        2 if epsilon != -1 => return None,
        _ => {}
    }
    Some(FundamentalDiscriminant {
        value: d,
        epsilon: epsilon as i8,
        nu,
        odd_primes,
    })
}

/// Discriminant data of the pure cubic field Q(∛m).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PureCubicData {
    /// cube-reduced radicand
    pub m: i64,
    /// squarefree part with exponent one
    pub a: i64,
    /// squarefree part with exponent two
    pub b: i64,
    /// conductor-like factor: d_K = -3 f²
    pub f: i64,
    pub d_k: i64,
}

/// Computes (d_K, f) for K = Q(∛m) with m = ±a·b²:
/// f = 3·p₁…p_r when a² ≢ b² mod 9, otherwise f = p₁…p_r, and d_K = -3f².
pub fn pure_cubic_discriminant(m: i64) -> Result<PureCubicData, NumringError> {
    if m == 0 || m == 1 || m == -1 {
        return Err(NumringError::UnsupportedRing);
    }
    // strip cube factors: Q(∛(k³·m')) = Q(∛m')
    let mut m_red = m;
    let mut k = 2i64;
    while k * k * k <= m_red.abs() {
        while m_red % (k * k * k) == 0 {
            m_red /= k * k * k;
        }
        k += 1;
    }
    if m_red == 1 || m_red == -1 {
        return Err(NumringError::UnsupportedRing);
    }
    let mut n = m_red.unsigned_abs();
    let mut a = 1i64;
    let mut b = 1i64;
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            match e {
                1 => a *= d as i64,
                2 => b *= d as i64,
                _ => unreachable!("cube factors were stripped"),
            }
        }
        d += 1;
    }
    if n > 1 {
        a *= n as i64;
    }
    let rad = a * b;
    let f = if (a * a - b * b).rem_euclid(9) != 0 {
        3 * rad
    } else {
        rad
    };
    Ok(PureCubicData {
        m: m_red,
        a,
        b,
        f,
        d_k: -3 * f * f,
    })
}

/// Whether the pure cubic field Q(∛m) has discriminant -3f² with f even.
pub fn s3_theorem_applies(m: i64) -> Result<bool, NumringError> {
    Ok(pure_cubic_discriminant(m)?.f % 2 == 0)
}
