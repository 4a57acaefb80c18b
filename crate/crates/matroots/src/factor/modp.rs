//! Polynomial arithmetic and factorization over 𝔽p for odd primes p.

use super::FactorError;
use num_bigint::BigUint;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub(crate) fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

fn mod_inv(a: u64, p: u64) -> u64 {
    // Extended Euclid on signed words; p is prime and a ≢ 0.
    let (mut r0, mut r1) = (p as i128, (a % p) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    assert_eq!(r0, 1, "mod_inv of a non-unit");
    t0.rem_euclid(p as i128) as u64
}

/// Dense polynomial over 𝔽p; `coeffs[i]` is the coefficient of x^i, stored
/// reduced mod p with a nonzero leading coefficient.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ModPPoly {
    p: u64,
    coeffs: Vec<u64>,
}

impl ModPPoly {
    /// p must be an odd prime.
    pub fn new(p: u64, coeffs: Vec<u64>) -> Self {
        debug_assert!(p > 2 && is_prime_u64(p), "modulus must be an odd prime");
        let mut coeffs: Vec<u64> = coeffs.into_iter().map(|c| c % p).collect();
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        ModPPoly { p, coeffs }
    }

    pub fn from_signed(p: u64, coeffs: &[i64]) -> Self {
        Self::new(
            p,
            coeffs.iter().map(|&c| c.rem_euclid(p as i64) as u64).collect(),
        )
    }

    pub fn zero(p: u64) -> Self {
        ModPPoly { p, coeffs: vec![] }
    }

    pub fn constant(p: u64, c: u64) -> Self {
        Self::new(p, vec![c])
    }

    pub fn var(p: u64) -> Self {
        Self::new(p, vec![0, 1])
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> u64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn lc(&self) -> u64 {
        *self.coeffs.last().expect("lc of zero polynomial")
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    pub(crate) fn mul_scalar(&self, c: u64) -> ModPPoly {
        let p = self.p as u128;
        let c = (c % self.p) as u128;
        ModPPoly::new(
            self.p,
            self.coeffs
                .iter()
                .map(|&a| ((a as u128 * c) % p) as u64)
                .collect(),
        )
    }

    pub fn monic(&self) -> ModPPoly {
        let lc = self.lc();
        if lc == 1 {
            return self.clone();
        }
        self.mul_scalar(mod_inv(lc, self.p))
    }

    pub fn add(&self, other: &ModPPoly) -> ModPPoly {
        debug_assert_eq!(self.p, other.p);
        let n = self.coeffs.len().max(other.coeffs.len());
        ModPPoly::new(
            self.p,
            (0..n).map(|k| (self.coeff(k) + other.coeff(k)) % self.p).collect(),
        )
    }

    pub fn sub(&self, other: &ModPPoly) -> ModPPoly {
        debug_assert_eq!(self.p, other.p);
        let n = self.coeffs.len().max(other.coeffs.len());
        ModPPoly::new(
            self.p,
            (0..n)
                .map(|k| (self.p + self.coeff(k) - other.coeff(k)) % self.p)
                .collect(),
        )
    }

    pub fn mul(&self, other: &ModPPoly) -> ModPPoly {
        debug_assert_eq!(self.p, other.p);
        if self.is_zero() || other.is_zero() {
            return ModPPoly::zero(self.p);
        }
        let p = self.p as u128;
        let mut out = vec![0u128; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + a as u128 * b as u128) % p;
            }
        }
        ModPPoly::new(self.p, out.into_iter().map(|c| c as u64).collect())
    }

    pub fn divmod(&self, div: &ModPPoly) -> (ModPPoly, ModPPoly) {
        debug_assert_eq!(self.p, div.p);
        let dd = div.degree().expect("division by zero polynomial");
        let p = self.p;
        let inv_lc = mod_inv(div.lc(), p);
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (ModPPoly::zero(p), self.clone());
        }
        let mut quot = vec![0u64; rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            let q = ((rem[k] as u128 * inv_lc as u128) % p as u128) as u64;
            rem[k] = 0;
            if q == 0 {
                continue;
            }
            for i in 0..dd {
                let t = (q as u128 * div.coeffs[i] as u128) % p as u128;
                rem[k - dd + i] = ((rem[k - dd + i] as u128 + p as u128 - t) % p as u128) as u64;
            }
            quot[k - dd] = q;
        }
        (ModPPoly::new(p, quot), ModPPoly::new(p, rem))
    }

    pub fn gcd(&self, other: &ModPPoly) -> ModPPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divmod(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.monic()
        }
    }

    /// Extended Euclid: (g, s, t) with s·self + t·other = g, g monic.
    pub fn xgcd(&self, other: &ModPPoly) -> (ModPPoly, ModPPoly, ModPPoly) {
        let p = self.p;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (ModPPoly::constant(p, 1), ModPPoly::zero(p));
        let (mut t0, mut t1) = (ModPPoly::zero(p), ModPPoly::constant(p, 1));
        while !r1.is_zero() {
            let (q, r) = r0.divmod(&r1);
            let s = s0.sub(&q.mul(&s1));
            let t = t0.sub(&q.mul(&t1));
            (r0, r1) = (r1, r);
            (s0, s1) = (s1, s);
            (t0, t1) = (t1, t);
        }
        let inv = mod_inv(r0.lc(), p);
        (r0.mul_scalar(inv), s0.mul_scalar(inv), t0.mul_scalar(inv))
    }

    pub fn derivative(&self) -> ModPPoly {
        if self.coeffs.len() <= 1 {
            return ModPPoly::zero(self.p);
        }
        let p = self.p as u128;
        ModPPoly::new(
            self.p,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, &c)| ((k as u128 % p) * c as u128 % p) as u64)
                .collect(),
        )
    }

    /// self^exp mod modulus by square and multiply.
    pub fn pow_mod(&self, exp: &BigUint, modulus: &ModPPoly) -> ModPPoly {
        let p = self.p;
        let mut result = ModPPoly::constant(p, 1);
        let mut base = self.divmod(modulus).1;
        let bits = exp.bits();
        for i in 0..bits {
            if exp.bit(i) {
                result = result.mul(&base).divmod(modulus).1;
            }
            if i + 1 < bits {
                base = base.mul(&base).divmod(modulus).1;
            }
        }
        result
    }
}

/// Factors a squarefree polynomial over 𝔽p into monic irreducibles whose
/// product is monic(a). Distinct-degree splitting first, then Cantor and
/// Zassenhaus equal-degree splitting; the random choices are drawn from a
/// ChaCha stream seeded by `seed`, so runs are reproducible.
pub fn factor_mod_p(a: &ModPPoly, seed: u64) -> Result<Vec<ModPPoly>, FactorError> {
    let p = a.p;
    if a.is_zero() {
        return Err(FactorError::ZeroPolynomial);
    }
    let f = a.monic();
    if f.degree() == Some(0) {
        return Ok(vec![]);
    }
    if f.gcd(&f.derivative()).degree() != Some(0) {
        return Err(FactorError::NotSquarefreeModP { p });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out: Vec<ModPPoly> = Vec::new();
    let mut f_star = f;
    let mut h = ModPPoly::var(p);
    let x = ModPPoly::var(p);
    let mut k = 1usize;
    while f_star.degree().unwrap() >= 2 * k {
        h = h.pow_mod(&BigUint::from(p), &f_star);
        let g = h.sub(&x).gcd(&f_star);
        if g.degree().is_some_and(|d| d >= 1) {
            equal_degree_split(&g, k, &mut rng, &mut out);
            f_star = f_star.divmod(&g).0;
            h = h.divmod(&f_star).1;
        }
        k += 1;
    }
    if f_star.degree().is_some_and(|d| d >= 1) {
        out.push(f_star);
    }
    out.sort_by(|a, b| {
        a.coeffs
            .len()
            .cmp(&b.coeffs.len())
            .then_with(|| a.coeffs.cmp(&b.coeffs))
    });
    Ok(out)
}

/// Cantor-Zassenhaus: splits a product of irreducibles all of degree d.
fn equal_degree_split(g: &ModPPoly, d: usize, rng: &mut ChaCha8Rng, out: &mut Vec<ModPPoly>) {
    let p = g.p;
    let deg = g.degree().unwrap();
    if deg == d {
        out.push(g.monic());
        return;
    }
    let exp = (BigUint::from(p).pow(d as u32) - BigUint::one()) / BigUint::from(2u32);
    loop {
        let r = loop {
            let coeffs: Vec<u64> = (0..deg).map(|_| rng.gen_range(0..p)).collect();
            let r = ModPPoly::new(p, coeffs);
            if r.degree().is_some_and(|dr| dr >= 1) {
                break r;
            }
        };
        let s = r.pow_mod(&exp, g);
        let w = s.sub(&ModPPoly::constant(p, 1)).gcd(g);
        if let Some(dw) = w.degree() {
            if dw >= 1 && dw < deg {
                equal_degree_split(&w, d, rng, out);
                equal_degree_split(&g.divmod(&w).0, d, rng, out);
                return;
            }
        }
    }
}
