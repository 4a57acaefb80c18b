//! Arithmetic in ℚ(μ) = ℚ[λ]/(f) for a monic irreducible modulus f, and the
//! field-level machinery the solver rests on: extracting the admissible γ
//! with p(γ) = μ from degree-n factors of f∘p, and computing characteristic
//! polynomials of field elements along two independent routes.

use crate::factor::{factor_over_q, factor_over_q_with, FactorConfig, FactorError, Factorization};
use crate::matrix::RatMatrix;
use crate::poly::UniPoly;
use crate::rational::{rat, Rational};
use crate::resultant::resultant_over_polys;
use num_traits::Zero;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("modulus must be monic")]
    ModulusNotMonic,
    #[error("modulus must be nonconstant")]
    ModulusConstant,
    #[error("modulus is reducible over the rationals")]
    ModulusReducible,
    #[error("division by zero in the number field")]
    DivisionByZero,
    #[error("gcd of two zero polynomials")]
    GcdOfZeros,
    #[error("constant p maps every element to the eigenvalue; solutions are not enumerable")]
    ConstantComposition,
    #[error(transparent)]
    Factor(#[from] FactorError),
}

/// An element of ℚ(μ), stored as its reduced representative in ℚ[λ] with
/// degree below the modulus degree. Elements carry no back-reference; all
/// operations go through the [`NumberField`] that created them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NFElement {
    rep: UniPoly,
}

impl NFElement {
    pub fn rep(&self) -> &UniPoly {
        &self.rep
    }

    pub fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }

    /// The rational value, when the element lies in the prime field.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.rep.is_zero() {
            Some(rat(0))
        } else if self.rep.is_constant() {
            Some(self.rep.coeff(0))
        } else {
            None
        }
    }
}

/// A polynomial with coefficients in ℚ(μ), trimmed of leading zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NFPoly {
    coeffs: Vec<NFElement>,
}

impl NFPoly {
    pub fn new(mut coeffs: Vec<NFElement>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        NFPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[NFElement] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn coeff(&self, k: usize) -> NFElement {
        self.coeffs.get(k).cloned().unwrap_or(NFElement {
            rep: UniPoly::zero(),
        })
    }

    fn lc(&self) -> &NFElement {
        self.coeffs.last().expect("lc of zero polynomial")
    }
}

/// ℚ(μ) with a certified monic irreducible modulus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumberField {
    modulus: UniPoly,
}

impl NumberField {
    /// Builds the field, certifying that f is monic, nonconstant, and
    /// irreducible over ℚ (by full factorization).
    pub fn new(f: &UniPoly) -> Result<NumberField, FieldError> {
        if f.is_zero() || f.is_constant() {
            return Err(FieldError::ModulusConstant);
        }
        if !f.is_monic() {
            return Err(FieldError::ModulusNotMonic);
        }
        if f.degree() != Some(1) && !factor_over_q(f)?.is_irreducible() {
            return Err(FieldError::ModulusReducible);
        }
        Ok(NumberField { modulus: f.clone() })
    }

    pub fn modulus(&self) -> &UniPoly {
        &self.modulus
    }

    /// Extension degree n = [ℚ(μ) : ℚ].
    pub fn degree(&self) -> usize {
        self.modulus.degree().expect("modulus is nonconstant")
    }

    /// The class of a rational polynomial, reduced mod the modulus.
    pub fn element(&self, rep: &UniPoly) -> NFElement {
        let (_, r) = rep.divmod(&self.modulus).expect("modulus is nonzero");
        NFElement { rep: r }
    }

    pub fn zero(&self) -> NFElement {
        NFElement {
            rep: UniPoly::zero(),
        }
    }

    pub fn one(&self) -> NFElement {
        self.constant(rat(1))
    }

    pub fn constant(&self, c: Rational) -> NFElement {
        self.element(&UniPoly::constant(c))
    }

    /// μ, the class of λ.
    pub fn generator(&self) -> NFElement {
        self.element(&UniPoly::var())
    }

    /// Coordinates of x in the power basis 1, μ, …, μ^(n−1).
    pub fn coords(&self, x: &NFElement) -> Vec<Rational> {
        (0..self.degree()).map(|k| x.rep.coeff(k)).collect()
    }

    pub fn add(&self, a: &NFElement, b: &NFElement) -> NFElement {
        self.element(&(&a.rep + &b.rep))
    }

    pub fn sub(&self, a: &NFElement, b: &NFElement) -> NFElement {
        self.element(&(&a.rep - &b.rep))
    }

    pub fn neg(&self, a: &NFElement) -> NFElement {
        NFElement {
            rep: -(&a.rep),
        }
    }

    pub fn mul(&self, a: &NFElement, b: &NFElement) -> NFElement {
        self.element(&(&a.rep * &b.rep))
    }

    pub fn scale(&self, a: &NFElement, c: &Rational) -> NFElement {
        NFElement {
            rep: a.rep.scale(c),
        }
    }

    /// Inverse via the extended Euclidean algorithm: s·rep + t·f = 1.
    pub fn inv(&self, a: &NFElement) -> Result<NFElement, FieldError> {
        if a.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        let (g, s, _) = a
            .rep
            .xgcd(&self.modulus)
            .expect("operands are nonzero");
        debug_assert!(g.is_one(), "modulus is irreducible, gcd must be 1");
        Ok(self.element(&s))
    }

    pub fn div(&self, a: &NFElement, b: &NFElement) -> Result<NFElement, FieldError> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    /// Evaluates a rational-coefficient polynomial at a field element.
    pub fn eval_unipoly(&self, q: &UniPoly, x: &NFElement) -> NFElement {
        let mut acc = self.zero();
        for c in q.coeffs().iter().rev() {
            acc = self.mul(&acc, x);
            acc = self.add(&acc, &self.constant(c.clone()));
        }
        acc
    }

    /// Lifts a rational polynomial to one with (constant) ℚ(μ) coefficients.
    pub fn lift_poly(&self, q: &UniPoly) -> NFPoly {
        NFPoly::new(q.coeffs().iter().map(|c| self.constant(c.clone())).collect())
    }

    pub fn poly_sub(&self, a: &NFPoly, b: &NFPoly) -> NFPoly {
        let n = a.coeffs.len().max(b.coeffs.len());
        NFPoly::new((0..n).map(|k| self.sub(&a.coeff(k), &b.coeff(k))).collect())
    }

    pub fn poly_mul(&self, a: &NFPoly, b: &NFPoly) -> NFPoly {
        if a.is_zero() || b.is_zero() {
            return NFPoly::new(vec![]);
        }
        let mut out = vec![self.zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, ai) in a.coeffs.iter().enumerate() {
            for (j, bj) in b.coeffs.iter().enumerate() {
                let prod = self.mul(ai, bj);
                out[i + j] = self.add(&out[i + j], &prod);
            }
        }
        NFPoly::new(out)
    }

    pub fn poly_monic(&self, a: &NFPoly) -> Result<NFPoly, FieldError> {
        if a.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        let inv = self.inv(a.lc())?;
        Ok(NFPoly::new(
            a.coeffs.iter().map(|c| self.mul(c, &inv)).collect(),
        ))
    }

    /// Long division over ℚ(μ); the divisor must be nonzero.
    pub fn poly_divmod(&self, a: &NFPoly, b: &NFPoly) -> Result<(NFPoly, NFPoly), FieldError> {
        if b.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        let db = b.degree().expect("nonzero divisor");
        let inv_lc = self.inv(b.lc())?;
        let mut rem: Vec<NFElement> = a.coeffs.clone();
        if rem.len() <= db {
            return Ok((NFPoly::new(vec![]), a.clone()));
        }
        let mut quot = vec![self.zero(); rem.len() - db];
        for k in (db..rem.len()).rev() {
            let q = self.mul(&rem[k], &inv_lc);
            if q.is_zero() {
                continue;
            }
            for i in 0..=db {
                let t = self.mul(&q, &b.coeffs[i]);
                rem[k - db + i] = self.sub(&rem[k - db + i], &t);
            }
            quot[k - db] = q;
        }
        Ok((NFPoly::new(quot), NFPoly::new(rem)))
    }

    /// Monic gcd over ℚ(μ).
    pub fn poly_gcd(&self, a: &NFPoly, b: &NFPoly) -> Result<NFPoly, FieldError> {
        if a.is_zero() && b.is_zero() {
            return Err(FieldError::GcdOfZeros);
        }
        let mut x = a.clone();
        let mut y = b.clone();
        while !y.is_zero() {
            let (_, r) = self.poly_divmod(&x, &y)?;
            x = y;
            y = r;
        }
        self.poly_monic(&x)
    }

    /// Evaluates a ℚ(μ)-coefficient polynomial at a field element.
    pub fn poly_eval(&self, a: &NFPoly, x: &NFElement) -> NFElement {
        let mut acc = self.zero();
        for c in a.coeffs.iter().rev() {
            acc = self.mul(&acc, x);
            acc = self.add(&acc, c);
        }
        acc
    }

    /// Characteristic polynomial of the element g(μ) as the resultant
    /// Res_t(f(t), λ − g(t)), a monic degree-n polynomial in λ.
    pub fn char_poly_of_element(&self, g: &UniPoly) -> UniPoly {
        let rep = self.element(g).rep;
        let f_coeffs: Vec<UniPoly> = self
            .modulus
            .coeffs()
            .iter()
            .map(|c| UniPoly::constant(c.clone()))
            .collect();
        // λ − g(t) as a polynomial in t whose coefficients live in ℚ[λ].
        let mut g_coeffs: Vec<UniPoly> = rep
            .coeffs()
            .iter()
            .map(|c| UniPoly::constant(-c))
            .collect();
        if g_coeffs.is_empty() {
            g_coeffs.push(UniPoly::zero());
        }
        g_coeffs[0] = &g_coeffs[0] + &UniPoly::var();
        let res = resultant_over_polys(&f_coeffs, &g_coeffs)
            .expect("both operands are nonzero");
        debug_assert!(res.is_monic(), "resultant route must yield a monic result");
        res
    }

    /// Characteristic polynomial of g(μ) from the power sums
    /// s_k = trace(g(C_f)^k) through Newton's identities. Independent of
    /// [`Self::char_poly_of_element`]; the two must always agree.
    pub fn char_poly_via_newton(&self, g: &UniPoly) -> UniPoly {
        let n = self.degree();
        let companion = RatMatrix::companion(&self.modulus).expect("modulus is monic");
        let m = companion.eval_poly(g);
        let mut power = m.clone();
        let mut s = Vec::with_capacity(n + 1);
        s.push(rat(0)); // unused index 0
        for k in 1..=n {
            s.push(power.trace());
            if k < n {
                power = &power * &m;
            }
        }
        let mut e = vec![rat(1)];
        for k in 1..=n {
            let mut acc = rat(0);
            for i in 1..=k {
                let term = &e[k - i] * &s[i];
                if i % 2 == 1 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            e.push(acc / Rational::from_integer(k.into()));
        }
        let mut coeffs = vec![rat(0); n + 1];
        for (k, ek) in e.iter().enumerate() {
            let c = if k % 2 == 0 { ek.clone() } else { -ek.clone() };
            coeffs[n - k] = c;
        }
        UniPoly::new(coeffs)
    }

    /// One nonzero kernel vector of a square matrix over ℚ(μ), or None if
    /// the matrix is invertible. The trailing free variable is set to 1.
    pub(crate) fn kernel_vector(&self, rows: &[Vec<NFElement>]) -> Option<Vec<NFElement>> {
        let n = rows.len();
        let mut m: Vec<Vec<NFElement>> = rows.to_vec();
        for row in &m {
            assert_eq!(row.len(), n, "kernel_vector expects a square matrix");
        }
        let mut pivots: Vec<(usize, usize)> = Vec::new();
        let mut rank_row = 0usize;
        for col in 0..n {
            let Some(pr) = (rank_row..n).find(|&r| !m[r][col].is_zero()) else {
                continue;
            };
            m.swap(rank_row, pr);
            let inv = self.inv(&m[rank_row][col]).expect("pivot is nonzero");
            for j in 0..n {
                m[rank_row][j] = self.mul(&m[rank_row][j], &inv);
            }
            for r in 0..n {
                if r != rank_row && !m[r][col].is_zero() {
                    let factor = m[r][col].clone();
                    for j in 0..n {
                        let t = self.mul(&factor, &m[rank_row][j]);
                        m[r][j] = self.sub(&m[r][j], &t);
                    }
                }
            }
            pivots.push((rank_row, col));
            rank_row += 1;
            if rank_row == n {
                return None;
            }
        }
        let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
        let free = (0..n).rev().find(|c| !pivot_cols.contains(c))?;
        let mut v = vec![self.zero(); n];
        v[free] = self.one();
        for &(r, c) in &pivots {
            v[c] = self.neg(&m[r][free]);
        }
        Some(v)
    }
}

/// A degree-n factor h of f∘p together with its root γ ∈ ℚ(μ) satisfying
/// p(γ) = μ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdmissibleGamma {
    pub factor: UniPoly,
    pub gamma: NFElement,
}

/// Everything learned from factoring the composition f∘p: the field ℚ(μ),
/// the composition itself, its full factorization, and one admissible γ per
/// degree-n irreducible factor, in the factor order.
#[derive(Debug, Clone)]
pub struct AdmissibilityReport {
    pub field: NumberField,
    pub composition: UniPoly,
    pub factorization: Factorization,
    pub admissible: Vec<AdmissibleGamma>,
}

pub fn admissible_gammas(f: &UniPoly, p: &UniPoly) -> Result<AdmissibilityReport, FieldError> {
    admissible_gammas_with(f, p, &FactorConfig::default())
}

/// Factors f∘p and pairs every degree-n rational factor h with its γ: the
/// gcd of h(T) and p(T) − μ over ℚ(μ) is linear, T − γ, because exactly one
/// root of h maps to μ under p.
pub fn admissible_gammas_with(
    f: &UniPoly,
    p: &UniPoly,
    config: &FactorConfig,
) -> Result<AdmissibilityReport, FieldError> {
    let field = NumberField::new(f)?;
    let n = field.degree();
    if p.is_zero() || p.is_constant() {
        let value = p.coeff(0);
        if f.eval(&value).is_zero() {
            // p(X) = value·I = A for every X; nothing finite to enumerate.
            return Err(FieldError::ConstantComposition);
        }
        let composition = UniPoly::constant(f.eval(&value));
        let factorization = factor_over_q_with(&composition, config)?;
        return Ok(AdmissibilityReport {
            field,
            composition,
            factorization,
            admissible: vec![],
        });
    }
    let composition = f.compose(p);
    let factorization = factor_over_q_with(&composition, config)?;
    let mut admissible = Vec::new();
    let mu = field.generator();
    for (h, _) in &factorization.factors {
        if h.degree() != Some(n) {
            continue;
        }
        let h_lift = field.lift_poly(h);
        let mut p_minus_mu = field.lift_poly(p);
        p_minus_mu = field.poly_sub(
            &p_minus_mu,
            &NFPoly::new(vec![mu.clone()]),
        );
        let g = field.poly_gcd(&h_lift, &p_minus_mu)?;
        assert_eq!(
            g.degree(),
            Some(1),
            "a degree-n factor of the composition shares exactly one root with p(T) = μ"
        );
        let gamma = field.neg(&g.coeff(0));
        debug_assert!(
            field.eval_unipoly(p, &gamma) == mu,
            "γ must map to μ under p"
        );
        debug_assert!(
            field.eval_unipoly(h, &gamma).is_zero(),
            "γ must be a root of its factor"
        );
        admissible.push(AdmissibleGamma {
            factor: h.clone(),
            gamma,
        });
    }
    Ok(AdmissibilityReport {
        field,
        composition,
        factorization,
        admissible,
    })
}
