//! Exact linear algebra for the monodromy arguments: Kronecker products,
//! characteristic polynomials by the division-free Berkowitz method, the
//! eigenvalue-multiplicity criterion forcing both tensor factors to be
//! homotheties, and the permutation-block characteristic polynomials of the
//! D₄ exceptional configuration.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MonodromyError {
    #[error("matrices must be square and nonempty")]
    NotSquare,
    #[error("the criterion requires a nonzero eigenvalue")]
    ZeroAlpha,
    #[error("rational root candidates exceed the enumeration bound")]
    CandidateBound,
    #[error("criterion triggered for a non-homothety (contradicts the multiplicity bound)")]
    LemmaViolated,
}

/// Exact scalars: rationals or small prime fields.
pub trait Scalar: Clone + PartialEq + std::fmt::Debug {
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    /// a constant in the same field as `self`
    fn small(&self, n: i64) -> Self;
    fn is_zero(&self) -> bool;
}

impl Scalar for BigRational {
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn small(&self, n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
}

/// An element of F_p for a small prime p, carrying its modulus.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Fp {
    pub p: u64,
    pub v: u64,
}

impl Fp {
    pub fn new(p: u64, v: i64) -> Fp {
        Fp { p, v: v.rem_euclid(p as i64) as u64 }
    }
}

impl Scalar for Fp {
    fn add(&self, o: &Self) -> Self {
        Fp { p: self.p, v: (self.v + o.v) % self.p }
    }
    fn sub(&self, o: &Self) -> Self {
        Fp { p: self.p, v: (self.v + self.p - o.v) % self.p }
    }
    fn mul(&self, o: &Self) -> Self {
        Fp { p: self.p, v: (self.v as u128 * o.v as u128 % self.p as u128) as u64 }
    }
    fn neg(&self) -> Self {
        Fp { p: self.p, v: (self.p - self.v) % self.p }
    }
    fn small(&self, n: i64) -> Self {
        Fp::new(self.p, n)
    }
    fn is_zero(&self) -> bool {
        self.v == 0
    }
}

/// A square matrix with exact entries, row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExactMatrix<T> {
    n: usize,
    data: Vec<T>,
}

impl<T: Scalar> ExactMatrix<T> {
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<ExactMatrix<T>, MonodromyError> {
        let n = rows.len();
        if n == 0 || rows.iter().any(|r| r.len() != n) {
            return Err(MonodromyError::NotSquare);
        }
        Ok(ExactMatrix { n, data: rows.into_iter().flatten().collect() })
    }

    pub fn diagonal(entries: Vec<T>) -> Result<ExactMatrix<T>, MonodromyError> {
        let n = entries.len();
        if n == 0 {
            return Err(MonodromyError::NotSquare);
        }
        let zero = entries[0].small(0);
        let mut data = vec![zero; n * n];
        for (i, e) in entries.into_iter().enumerate() {
            data[i * n + i] = e;
        }
        Ok(ExactMatrix { n, data })
    }

    pub fn scalar_matrix(n: usize, lambda: T) -> Result<ExactMatrix<T>, MonodromyError> {
        ExactMatrix::diagonal(vec![lambda; n])
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.n + j]
    }

    /// Some(λ) when the matrix is λ·identity.
    pub fn as_homothety(&self) -> Option<T> {
        let lam = self.entry(0, 0).clone();
        for i in 0..self.n {
            for j in 0..self.n {
                let e = self.entry(i, j);
                if i == j {
                    if *e != lam {
                        return None;
                    }
                } else if !e.is_zero() {
                    return None;
                }
            }
        }
        Some(lam)
    }

    /// Kronecker (tensor) product; the spectrum is the product set of the
    /// factors' spectra.
    pub fn kronecker(&self, g: &ExactMatrix<T>) -> ExactMatrix<T> {
        let m = self.n;
        let n = g.n;
        let nn = m * n;
        let zero = self.data[0].small(0);
        let mut data = vec![zero; nn * nn];
        for i1 in 0..m {
            for j1 in 0..m {
                for i2 in 0..n {
                    for j2 in 0..n {
                        data[(i1 * n + i2) * nn + (j1 * n + j2)] =
                            self.entry(i1, j1).mul(g.entry(i2, j2));
                    }
                }
            }
        }
        ExactMatrix { n: nn, data }
    }

    /// Characteristic polynomial det(T·I - A), ascending coefficients,
    /// monic, by the division-free Samuelson-Berkowitz scheme.
    pub fn charpoly(&self) -> Vec<T> {
        let n = self.n;
        let one = self.data[0].small(1);
        // descending-coefficient vector of the charpoly of the trailing
        // submatrix A[k.., k..], starting from the empty matrix
        let mut coeffs: Vec<T> = vec![one.clone()];
        for k in (0..n).rev() {
            let size = n - k; // submatrix dimension
            // v[0] = 1, v[1] = -a, v[j] = -(R · M^{j-2} · C)
            let mut v: Vec<T> = Vec::with_capacity(size + 1);
            v.push(one.clone());
            v.push(self.entry(k, k).neg());
            if size > 1 {
                // w starts as C; iteratively multiply by M
                let mut w: Vec<T> = (k + 1..n).map(|i| self.entry(i, k).clone()).collect();
                for _ in 0..size - 1 {
                    // dot R·w
                    let mut dot = one.small(0);
                    for (idx, j) in (k + 1..n).enumerate() {
                        dot = dot.add(&self.entry(k, j).mul(&w[idx]));
                    }
                    v.push(dot.neg());
                    // w = M·w
                    let mut nw = vec![one.small(0); w.len()];
                    for (ri, i) in (k + 1..n).enumerate() {
                        let mut acc = one.small(0);
                        for (ci, j) in (k + 1..n).enumerate() {
                            acc = acc.add(&self.entry(i, j).mul(&w[ci]));
                        }
                        nw[ri] = acc;
                    }
                    w = nw;
                }
            }
            // Toeplitz multiply: new[i] = Σ_j v[i-j]·coeffs[j]
            let mut next = vec![one.small(0); coeffs.len() + 1];
            for (i, slot) in next.iter_mut().enumerate() {
                for (j, c) in coeffs.iter().enumerate() {
                    if i >= j && i - j < v.len() {
                        *slot = slot.add(&v[i - j].mul(c));
                    }
                }
            }
            coeffs = next;
        }
        coeffs.reverse(); // ascending
        coeffs
    }
}

/// Evaluate an ascending-coefficient polynomial.
pub fn poly_eval<T: Scalar>(f: &[T], x: &T) -> T {
    let mut acc = x.small(0);
    for c in f.iter().rev() {
        acc = acc.mul(x).add(c);
    }
    acc
}

/// Multiply two ascending-coefficient polynomials.
pub fn poly_mul<T: Scalar>(f: &[T], g: &[T]) -> Vec<T> {
    if f.is_empty() || g.is_empty() {
        return vec![];
    }
    let zero = f[0].small(0);
    let mut out = vec![zero; f.len() + g.len() - 1];
    for (i, a) in f.iter().enumerate() {
        for (j, b) in g.iter().enumerate() {
            out[i + j] = out[i + j].add(&a.mul(b));
        }
    }
    out
}

/// Algebraic multiplicity of α as a root of f (synthetic division count).
pub fn root_multiplicity<T: Scalar>(f: &[T], alpha: &T) -> u32 {
    let mut g = f.to_vec();
    let mut mult = 0;
    loop {
        while matches!(g.last(), Some(c) if c.is_zero()) {
            g.pop();
        }
        if g.len() <= 1 || !poly_eval(&g, alpha).is_zero() {
            return mult;
        }
        // divide by (T - α)
        let mut q = vec![alpha.small(0); g.len() - 1];
        let mut carry = g.last().unwrap().clone();
        for i in (0..g.len() - 1).rev() {
            q[i] = carry.clone();
            carry = g[i].add(&carry.mul(alpha));
        }
        g = q;
        mult += 1;
    }
}

/// Outcome of the homothety criterion on a Kronecker product.
///
/// The multiplicity bound alone forces both factors to have a single
/// eigenvalue; semisimplicity of the product (automatic for the monodromy
/// matrices this is applied to, which are scalar multiples of permutation
/// matrices) then forces both factors to be honest homotheties. A pair of
/// nontrivial Jordan blocks shows the bound alone is not enough, so the
/// trigger here is: multiplicity exceeded *and* the product semisimple —
/// which under the bound just means f⊗g = α·id.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Criterion<T> {
    /// some nonzero eigenvalue α of the semisimple product f⊗g has
    /// algebraic multiplicity exceeding mn - min(m, n); both factors are
    /// verified homotheties
    BothHomotheties { alpha: T, f_scalar: T, g_scalar: T },
    NotTriggered,
}

/// Nonzero field elements that are roots of the (monic) polynomial.
fn nonzero_roots_fp(f: &[Fp]) -> Vec<Fp> {
    let p = f[0].p;
    (1..p)
        .map(|v| Fp { p, v })
        .filter(|x| poly_eval(f, x).is_zero())
        .collect()
}

fn nonzero_roots_rational(f: &[BigRational]) -> Result<Vec<BigRational>, MonodromyError> {
    // clear denominators to an integer polynomial
    let mut lcm = BigInt::one();
    for c in f {
        lcm = lcm.lcm(c.denom());
    }
    let ints: Vec<BigInt> = f
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();
    let mut trimmed = ints.clone();
    while matches!(trimmed.last(), Some(c) if c.is_zero()) {
        trimmed.pop();
    }
    if trimmed.len() <= 1 {
        return Ok(vec![]);
    }
    let lead = trimmed.last().unwrap().abs();
    // strip powers of T so the constant term is nonzero
    let mut low = 0;
    while trimmed[low].is_zero() {
        low += 1;
    }
    let cst = trimmed[low].abs();
    let bound = BigInt::from(1_000_000_000u64);
    if cst > bound || lead > bound {
        return Err(MonodromyError::CandidateBound);
    }
    let divisors = |n: &BigInt| -> Vec<BigInt> {
        let n = u64::try_from(n.abs()).expect("bounded above");
        let mut out = Vec::new();
        let mut d = 1u64;
        while d * d <= n {
            if n % d == 0 {
                out.push(BigInt::from(d));
                out.push(BigInt::from(n / d));
            }
            d += 1;
        }
        out
    };
    let mut roots = Vec::new();
    for p in divisors(&cst) {
        for q in divisors(&lead) {
            for sign in [1i64, -1] {
                let cand = BigRational::new(&p * BigInt::from(sign), q.clone());
                if !Zero::is_zero(&cand)
                    && Zero::is_zero(&poly_eval(f, &cand))
                    && !roots.contains(&cand)
                {
                    roots.push(cand.clone());
                }
            }
        }
    }
    Ok(roots)
}

/// The criterion over a small prime field.
pub fn homothety_criterion_fp(
    f: &ExactMatrix<Fp>,
    g: &ExactMatrix<Fp>,
) -> Result<Criterion<Fp>, MonodromyError> {
    let kron = f.kronecker(g);
    let chi = kron.charpoly();
    let roots = nonzero_roots_fp(&chi);
    decide(f, g, &chi, roots)
}

/// The criterion over the rationals.
pub fn homothety_criterion(
    f: &ExactMatrix<BigRational>,
    g: &ExactMatrix<BigRational>,
) -> Result<Criterion<BigRational>, MonodromyError> {
    let kron = f.kronecker(g);
    let chi = kron.charpoly();
    let roots = nonzero_roots_rational(&chi)?;
    decide(f, g, &chi, roots)
}

fn decide<T: Scalar>(
    f: &ExactMatrix<T>,
    g: &ExactMatrix<T>,
    chi: &[T],
    candidates: Vec<T>,
) -> Result<Criterion<T>, MonodromyError> {
    let (m, n) = (f.dim(), g.dim());
    let threshold = (m * n - m.min(n)) as u32;
    for alpha in candidates {
        if alpha.is_zero() {
            return Err(MonodromyError::ZeroAlpha);
        }
        if root_multiplicity(chi, &alpha) > threshold {
            // the bound forces single eigenvalues λ, μ on the factors;
            // with a semisimple product the nilpotent parts vanish, which
            // is exactly the case f⊗g = α·id, i.e. both factors scalar
            match (f.as_homothety(), g.as_homothety()) {
                (Some(lam), Some(mu)) => {
                    if lam.mul(&mu) != alpha {
                        return Err(MonodromyError::LemmaViolated);
                    }
                    return Ok(Criterion::BothHomotheties {
                        alpha,
                        f_scalar: lam,
                        g_scalar: mu,
                    });
                }
                // non-semisimple product: outside the hypothesis
                _ => return Ok(Criterion::NotTriggered),
            }
        }
    }
    Ok(Criterion::NotTriggered)
}

/// Whether the monodromy element fixes the two exceptional legs or swaps
/// them; the third case does not occur for D₄ configurations over the
/// residue fields in play.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum D4Case {
    FixesBothLegs,
    SwapsLegs,
}

/// α times the displayed 4×4 permutation matrix (identity block E₂ plus a
/// 2×2 block that is the identity or the swap), and its characteristic
/// polynomial: (T-α)⁴ in the fixing case, (T-α)³(T+α) in the swapping case.
pub fn d4_monodromy_charpoly(
    case: D4Case,
    alpha: &BigRational,
) -> Result<Vec<BigRational>, MonodromyError> {
    if Zero::is_zero(alpha) {
        return Err(MonodromyError::ZeroAlpha);
    }
    let z = BigRational::zero();
    let a = alpha.clone();
    let rows = match case {
        D4Case::FixesBothLegs => vec![
            vec![a.clone(), z.clone(), z.clone(), z.clone()],
            vec![z.clone(), a.clone(), z.clone(), z.clone()],
            vec![z.clone(), z.clone(), a.clone(), z.clone()],
            vec![z.clone(), z.clone(), z.clone(), a.clone()],
        ],
        D4Case::SwapsLegs => vec![
            vec![a.clone(), z.clone(), z.clone(), z.clone()],
            vec![z.clone(), a.clone(), z.clone(), z.clone()],
            vec![z.clone(), z.clone(), z.clone(), a.clone()],
            vec![z.clone(), z.clone(), a.clone(), z.clone()],
        ],
    };
    Ok(ExactMatrix::from_rows(rows)?.charpoly())
}

/// (T - α)^k (T + α)^l as an ascending-coefficient polynomial.
pub fn binomial_power_product(alpha: &BigRational, k: u32, l: u32) -> Vec<BigRational> {
    let one = BigRational::one();
    let mut out = vec![one.clone()];
    let minus = vec![-alpha.clone(), one.clone()];
    let plus = vec![alpha.clone(), one];
    for _ in 0..k {
        out = poly_mul(&out, &minus);
    }
    for _ in 0..l {
        out = poly_mul(&out, &plus);
    }
    out
}
