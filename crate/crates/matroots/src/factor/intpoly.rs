//! Integer polynomials used inside the factorization pipeline.

use crate::poly::UniPoly;
use crate::rational::Rational;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Dense integer polynomial, ascending coefficients, trimmed.
#[derive(Clone, PartialEq, Eq, Debug)]
pub(crate) struct IntPoly {
    pub coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn one() -> Self {
        IntPoly {
            coeffs: vec![BigInt::one()],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lc(&self) -> &BigInt {
        self.coeffs.last().expect("lc of zero polynomial")
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::new(vec![]);
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        IntPoly::new((0..n).map(|k| self.coeff(k) - other.coeff(k)).collect())
    }

    /// Exact division by a monic divisor over ℤ; None when the remainder is
    /// nonzero.
    pub fn div_exact_monic(&self, div: &IntPoly) -> Option<IntPoly> {
        debug_assert!(div.is_monic());
        let dd = div.degree().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return if self.is_zero() {
                Some(IntPoly::new(vec![]))
            } else {
                None
            };
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            let q = std::mem::replace(&mut rem[k], BigInt::zero());
            if q.is_zero() {
                continue;
            }
            for i in 0..dd {
                rem[k - dd + i] -= &q * &div.coeffs[i];
            }
            quot[k - dd] = q;
        }
        if rem.iter().all(|c| c.is_zero()) {
            Some(IntPoly::new(quot))
        } else {
            None
        }
    }

    /// Positive gcd of the coefficients; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Writes a rational polynomial as scale·prim with prim a primitive
    /// integer polynomial whose leading coefficient is positive.
    pub fn from_unipoly(p: &UniPoly) -> (Rational, IntPoly) {
        assert!(!p.is_zero());
        let mut den = BigInt::one();
        for c in p.coeffs() {
            den = den.lcm(c.denom());
        }
        let ints: Vec<BigInt> = p
            .coeffs()
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        let poly = IntPoly::new(ints);
        let mut content = poly.content();
        if poly.lc().is_negative() {
            content = -content;
        }
        let prim = IntPoly::new(poly.coeffs.iter().map(|c| c / &content).collect());
        (Rational::new(content, den), prim)
    }

    pub fn to_unipoly(&self) -> UniPoly {
        UniPoly::new(
            self.coeffs
                .iter()
                .map(|c| Rational::from_integer(c.clone()))
                .collect(),
        )
    }

    /// Reduce every coefficient to its least nonnegative residue mod m.
    pub fn reduce_mod(&self, m: &BigInt) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| c.mod_floor(m)).collect())
    }

    /// Reduce every coefficient to its centered residue in (−m/2, m/2].
    pub fn centered_mod(&self, m: &BigInt) -> IntPoly {
        let half = m / 2;
        IntPoly::new(
            self.coeffs
                .iter()
                .map(|c| {
                    let r = c.mod_floor(m);
                    if r > half {
                        r - m
                    } else {
                        r
                    }
                })
                .collect(),
        )
    }

    pub fn mul_mod(&self, other: &IntPoly, m: &BigInt) -> IntPoly {
        self.mul(other).reduce_mod(m)
    }

    pub fn add_mod(&self, other: &IntPoly, m: &BigInt) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        IntPoly::new(
            (0..n)
                .map(|k| (self.coeff(k) + other.coeff(k)).mod_floor(m))
                .collect(),
        )
    }

    pub fn sub_mod(&self, other: &IntPoly, m: &BigInt) -> IntPoly {
        self.sub(other).reduce_mod(m)
    }

    /// Division with remainder by a monic divisor, coefficients mod m.
    pub fn divmod_monic_mod(&self, div: &IntPoly, m: &BigInt) -> (IntPoly, IntPoly) {
        debug_assert!(div.is_monic());
        let dd = div.degree().expect("division by zero polynomial");
        let mut rem = self.reduce_mod(m).coeffs;
        if rem.len() <= dd {
            return (IntPoly::new(vec![]), IntPoly::new(rem));
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            let q = std::mem::replace(&mut rem[k], BigInt::zero());
            if q.is_zero() {
                continue;
            }
            for i in 0..dd {
                rem[k - dd + i] = (&rem[k - dd + i] - &q * &div.coeffs[i]).mod_floor(m);
            }
            quot[k - dd] = q;
        }
        (IntPoly::new(quot), IntPoly::new(rem))
    }

    /// Squared Euclidean norm of the coefficient vector.
    pub fn norm2_sq(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |acc, c| acc + c * c)
    }
}
