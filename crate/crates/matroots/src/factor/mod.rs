//! Exact factorization of univariate polynomials over ℚ.
//!
//! The pipeline is classical Zassenhaus: strip content, split into
//! squarefree parts with Yun's algorithm, reduce each part to a monic
//! integer polynomial, factor it modulo a good odd prime, lift the modular
//! factors with quadratic Hensel steps past twice the Mignotte bound, and
//! recombine subsets of lifted factors by trial division.

pub(crate) mod hensel;
pub(crate) mod intpoly;
pub(crate) mod modp;

pub use hensel::hensel_lift;
pub use modp::{factor_mod_p, ModPPoly};

use crate::poly::UniPoly;
use crate::rational::Rational;
use intpoly::IntPoly;
use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FactorError {
    #[error("cannot factor the zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial is not squarefree modulo {p}")]
    NotSquarefreeModP { p: u64 },
    #[error("{p} is not an odd prime")]
    BadPrime { p: u64 },
    #[error("lift exponent must be at least 1")]
    BadExponent,
    #[error("polynomial has non-integer coefficients")]
    NotIntegral,
    #[error("polynomial vanishes modulo {p}")]
    VanishesModP { p: u64 },
    #[error("polynomial is not monic of full degree modulo {p}")]
    NotMonicModP { p: u64 },
    #[error("the given polynomials do not multiply to the target modulo {p}")]
    NotAFactorization { p: u64 },
    #[error("the given factors share a root modulo {p}")]
    FactorsNotCoprime { p: u64 },
    #[error("{found} modular factors exceed the recombination budget of {budget}")]
    TooManyModularFactors { found: usize, budget: usize },
}

/// Tuning knobs for [`factor_over_q_with`].
#[derive(Debug, Clone)]
pub struct FactorConfig {
    /// Seed for the equal-degree splitting randomness; fixed seed, fixed output.
    pub seed: u64,
    /// Upper bound on the number of modular factors fed to recombination.
    pub max_recombination: usize,
}

impl Default for FactorConfig {
    fn default() -> Self {
        FactorConfig {
            seed: 1,
            max_recombination: 24,
        }
    }
}

/// A complete factorization a = content · ∏ fᵢ^eᵢ with each fᵢ monic and
/// irreducible over ℚ, listed in canonical order (degree, then ascending
/// coefficient comparison) with distinct fᵢ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub content: Rational,
    pub factors: Vec<(UniPoly, usize)>,
}

impl Factorization {
    /// Multiplies the factorization back out.
    pub fn product(&self) -> UniPoly {
        let mut acc = UniPoly::constant(self.content.clone());
        for (f, e) in &self.factors {
            acc = &acc * &f.pow(*e);
        }
        acc
    }

    pub fn is_irreducible(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].1 == 1
    }
}

/// Yun's squarefree decomposition. Returns monic pairwise coprime parts
/// with a = lc(a) · ∏ pᵢ^eᵢ and strictly increasing multiplicities eᵢ.
pub fn squarefree_decompose(a: &UniPoly) -> Result<Vec<(UniPoly, usize)>, FactorError> {
    if a.is_zero() {
        return Err(FactorError::ZeroPolynomial);
    }
    if a.is_constant() {
        return Ok(vec![]);
    }
    let f = a.monic();
    let fd = f.derivative();
    let u = f.gcd(&fd).expect("nonzero inputs");
    let mut parts = Vec::new();
    let mut v = exact_div(&f, &u);
    let mut w = exact_div(&fd, &u);
    let mut i = 1usize;
    while v.degree() != Some(0) {
        let diff = &w - &v.derivative();
        let h = v.gcd(&diff).expect("v is nonzero");
        if h.degree() != Some(0) {
            parts.push((h.clone(), i));
        }
        v = exact_div(&v, &h);
        w = exact_div(&diff, &h);
        i += 1;
    }
    Ok(parts)
}

fn exact_div(a: &UniPoly, b: &UniPoly) -> UniPoly {
    let (q, r) = a.divmod(b).expect("divisor is nonzero");
    debug_assert!(r.is_zero(), "division must be exact here");
    q
}

/// Factors a over ℚ with default settings.
pub fn factor_over_q(a: &UniPoly) -> Result<Factorization, FactorError> {
    factor_over_q_with(a, &FactorConfig::default())
}

/// Factors a over ℚ into monic irreducibles times a content.
pub fn factor_over_q_with(
    a: &UniPoly,
    config: &FactorConfig,
) -> Result<Factorization, FactorError> {
    if a.is_zero() {
        return Err(FactorError::ZeroPolynomial);
    }
    let content = a.leading_coeff().expect("nonzero").clone();
    let mut factors: Vec<(UniPoly, usize)> = Vec::new();
    for (part, mult) in squarefree_decompose(a)? {
        for irr in factor_squarefree_monic(&part, config)? {
            factors.push((irr, mult));
        }
    }
    factors.sort_by(|(f, _), (g, _)| f.canonical_cmp(g));
    let result = Factorization { content, factors };
    debug_assert_eq!(result.product(), *a, "factorization must multiply back");
    Ok(result)
}

/// Zassenhaus on a monic squarefree polynomial of degree ≥ 1.
fn factor_squarefree_monic(
    g: &UniPoly,
    config: &FactorConfig,
) -> Result<Vec<UniPoly>, FactorError> {
    debug_assert!(g.is_monic());
    if g.degree() == Some(1) {
        return Ok(vec![g.clone()]);
    }
    let (_, prim) = IntPoly::from_unipoly(g);
    let lc = prim.lc().clone();
    let d = prim.degree().expect("degree at least 2");

    // Monic model: big_f(y) = lc^(d−1) · prim(y / lc); roots scale by lc.
    // The y^j coefficient is prim_j · lc^(d−1−j), which for j = d is 1.
    let mut big_f_coeffs = Vec::with_capacity(d + 1);
    for (j, c) in prim.coeffs.iter().enumerate() {
        if j == d {
            big_f_coeffs.push(BigInt::from(1));
        } else {
            big_f_coeffs.push(c * lc.pow((d - 1 - j) as u32));
        }
    }
    let big_f = IntPoly::new(big_f_coeffs);
    debug_assert!(big_f.is_monic());

    let p = choose_prime(&big_f);
    let modular = factor_mod_p(&hensel::to_modp(&big_f, p), config.seed)?;
    let r = modular.len();
    if r == 1 {
        return Ok(vec![g.clone()]);
    }
    if r > config.max_recombination {
        return Err(FactorError::TooManyModularFactors {
            found: r,
            budget: config.max_recombination,
        });
    }

    // Mignotte: every monic factor of big_f has coefficients bounded by
    // 2^d · ‖big_f‖₂; lift until the modulus exceeds twice that.
    let bound = BigInt::from(2).pow(d as u32) * (big_f.norm2_sq().sqrt() + 1);
    let two_bound = &bound * 2;
    let mut target = BigInt::from(p);
    while target <= two_bound {
        target = &target * &target;
    }
    let lifted = hensel::lift_factor_list(&big_f, &modular, p, &target);

    // Recombination: try subsets of lifted factors in increasing size; a
    // subset whose centered product divides what is left is a true factor.
    let mut found: Vec<IntPoly> = Vec::new();
    let mut remaining = lifted;
    let mut f_star = big_f;
    let mut size = 1usize;
    'outer: while 2 * size <= remaining.len() {
        for combo in (0..remaining.len()).combinations(size) {
            let mut cand = IntPoly::one();
            for &i in &combo {
                cand = cand.mul_mod(&remaining[i], &target);
            }
            let cand = cand.centered_mod(&target);
            let c0 = cand.coeff(0);
            let f0 = f_star.coeff(0);
            if !f0.is_zero() && (c0.is_zero() || !f0.is_multiple_of(&c0)) {
                continue;
            }
            if let Some(q) = f_star.div_exact_monic(&cand) {
                found.push(cand);
                let mut keep = Vec::new();
                for (i, fac) in remaining.into_iter().enumerate() {
                    if !combo.contains(&i) {
                        keep.push(fac);
                    }
                }
                remaining = keep;
                f_star = q;
                continue 'outer;
            }
        }
        size += 1;
    }
    if f_star.degree().is_some_and(|deg| deg >= 1) {
        found.push(f_star);
    }

    // Map factors of big_f back: h(x) = H(lc·x) / lc^(deg H), monic over ℚ.
    let lc_rat = Rational::from(lc);
    let mut out = Vec::with_capacity(found.len());
    for big_h in found {
        let dh = big_h.degree().expect("factors are nonconstant");
        let coeffs = big_h
            .coeffs
            .iter()
            .enumerate()
            .map(|(j, c)| {
                let mut v = Rational::from(c.clone());
                for _ in j..dh {
                    v /= &lc_rat;
                }
                v
            })
            .collect();
        out.push(UniPoly::new(coeffs));
    }
    debug_assert_eq!(
        out.iter().fold(UniPoly::one(), |acc, h| &acc * h),
        *g,
        "recombined factors must multiply back to the input part"
    );
    Ok(out)
}

/// Smallest odd prime keeping the monic integer polynomial squarefree mod p.
/// Such a prime exists because the discriminant is a nonzero integer.
fn choose_prime(f: &IntPoly) -> u64 {
    let mut p = 3u64;
    loop {
        if modp::is_prime_u64(p) {
            let fp = hensel::to_modp(f, p);
            if fp.degree() == f.degree()
                && fp.gcd(&fp.derivative()).degree() == Some(0)
            {
                return p;
            }
        }
        p += 2;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};
    use proptest::prelude::*;

    fn poly(cs: &[i64]) -> UniPoly {
        UniPoly::from_integers(cs)
    }

    #[test]
    fn rejects_zero() {
        assert_eq!(factor_over_q(&UniPoly::zero()), Err(FactorError::ZeroPolynomial));
        assert_eq!(
            squarefree_decompose(&UniPoly::zero()),
            Err(FactorError::ZeroPolynomial)
        );
    }

    #[test]
    fn constants_have_empty_factor_list() {
        let f = factor_over_q(&UniPoly::constant(ratio(-7, 3))).unwrap();
        assert_eq!(f.content, ratio(-7, 3));
        assert!(f.factors.is_empty());
        assert_eq!(f.product(), UniPoly::constant(ratio(-7, 3)));
    }

    #[test]
    fn squarefree_parts() {
        // (x − 1)²(x + 2)
        let a = &poly(&[-1, 1]).pow(2) * &poly(&[2, 1]);
        let parts = squarefree_decompose(&a).unwrap();
        assert_eq!(parts, vec![(poly(&[2, 1]), 1), (poly(&[-1, 1]), 2)]);
        // (x² − 1)², with a content to strip
        let b = poly(&[-1, 0, 1]).pow(2).scale(&ratio(3, 2));
        let parts = squarefree_decompose(&b).unwrap();
        assert_eq!(parts, vec![(poly(&[-1, 0, 1]), 2)]);
        // squarefree input comes back whole
        let c = poly(&[-2, 0, 1]);
        assert_eq!(squarefree_decompose(&c).unwrap(), vec![(c.clone(), 1)]);
    }

    #[test]
    fn lambda6_plus_3_is_irreducible() {
        let f = factor_over_q(&poly(&[3, 0, 0, 0, 0, 0, 1])).unwrap();
        assert_eq!(f.content, rat(1));
        assert_eq!(f.factors, vec![(poly(&[3, 0, 0, 0, 0, 0, 1]), 1)]);
        assert!(f.is_irreducible());
    }

    #[test]
    fn degree_six_splits_into_two_cubics() {
        let comp = poly(&[-30, -18, 18, -1, 3, -3, 1]);
        let f = factor_over_q(&comp).unwrap();
        assert_eq!(f.content, rat(1));
        assert_eq!(
            f.factors,
            vec![
                (poly(&[-6, 0, 0, 1]), 1),
                (poly(&[5, 3, -3, 1]), 1),
            ]
        );
        assert_eq!(f.product(), comp);
    }

    #[test]
    fn degree_six_splits_into_quadratic_and_quartic() {
        let comp = &poly(&[-2, 0, 1]) * &poly(&[4, 0, -6, 0, 1]);
        let f = factor_over_q(&comp).unwrap();
        assert_eq!(
            f.factors,
            vec![
                (poly(&[-2, 0, 1]), 1),
                (poly(&[4, 0, -6, 0, 1]), 1),
            ]
        );
    }

    #[test]
    fn x4_plus_1_needs_recombination() {
        // Reducible modulo every prime, irreducible over ℚ.
        let f = factor_over_q(&poly(&[1, 0, 0, 0, 1])).unwrap();
        assert!(f.is_irreducible());
    }

    #[test]
    fn content_and_multiplicities() {
        // 6(x − 1)²(x + 1) with factors in canonical order.
        let a = (&poly(&[-1, 1]).pow(2) * &poly(&[1, 1])).scale(&rat(6));
        let f = factor_over_q(&a).unwrap();
        assert_eq!(f.content, rat(6));
        assert_eq!(f.factors, vec![(poly(&[-1, 1]), 2), (poly(&[1, 1]), 1)]);
        assert_eq!(f.product(), a);
    }

    #[test]
    fn rational_coefficients() {
        // (x − 2)(x − 1/2) = x² − 5/2·x + 1
        let a = UniPoly::new(vec![rat(1), ratio(-5, 2), rat(1)]);
        let f = factor_over_q(&a).unwrap();
        assert_eq!(f.content, rat(1));
        assert_eq!(
            f.factors,
            vec![
                (poly(&[-2, 1]), 1),
                (UniPoly::new(vec![ratio(-1, 2), rat(1)]), 1),
            ]
        );
    }

    #[test]
    fn budget_is_enforced() {
        // x⁴ + 1 has at least two modular factors for any odd prime.
        let config = FactorConfig {
            seed: 1,
            max_recombination: 1,
        };
        assert!(matches!(
            factor_over_q_with(&poly(&[1, 0, 0, 0, 1]), &config),
            Err(FactorError::TooManyModularFactors { budget: 1, .. })
        ));
    }

    #[test]
    fn factoring_is_deterministic() {
        let a = &poly(&[-6, 0, 0, 1]) * &poly(&[5, 3, -3, 1]);
        let f1 = factor_over_q(&a).unwrap();
        let f2 = factor_over_q_with(&a, &FactorConfig { seed: 99, ..Default::default() })
            .unwrap();
        assert_eq!(f1, f2);
    }

    /// Rational root test: a monic-or-not integer polynomial of degree 2 or 3
    /// is irreducible over ℚ exactly when it has no rational root.
    fn has_rational_root(cs: &[i64]) -> bool {
        let a = poly(cs);
        let d = a.degree().unwrap();
        assert!(d == 2 || d == 3);
        let a0 = cs[0].unsigned_abs();
        let ad = cs[d].unsigned_abs();
        if a0 == 0 {
            return true;
        }
        let divisors = |n: u64| -> Vec<u64> {
            (1..=n).filter(|k| n % k == 0).collect()
        };
        for p in divisors(a0) {
            for q in &divisors(ad) {
                for sign in [1i64, -1] {
                    let root = ratio(sign * p as i64, *q as i64);
                    if a.eval(&root).is_zero() {
                        return true;
                    }
                }
            }
        }
        false
    }

    proptest! {
        #[test]
        fn low_degree_irreducibility_matches_root_test(
            c0 in -6i64..=6, c1 in -6i64..=6, c2 in -6i64..=6, lead in 1i64..=3
        ) {
            let cs = vec![c0, c1, c2, lead];
            prop_assume!(c0 != 0);
            let f = factor_over_q(&poly(&cs)).unwrap();
            prop_assert_eq!(f.is_irreducible(), !has_rational_root(&cs));
        }

        #[test]
        fn factor_product_roundtrip(
            picks in proptest::collection::vec(0usize..6, 1..4),
            num in -5i64..=5, den in 1i64..=4
        ) {
            prop_assume!(num != 0);
            let pool = [
                poly(&[1, 0, 1]),
                poly(&[-2, 0, 1]),
                poly(&[1, 1, 1]),
                poly(&[-2, 0, 0, 1]),
                poly(&[-1, -1, 0, 1]),
                poly(&[2, 1]),
            ];
            let mut a = UniPoly::constant(ratio(num, den));
            for &i in &picks {
                a = &a * &pool[i];
            }
            let f = factor_over_q(&a).unwrap();
            prop_assert_eq!(f.product(), a);
            prop_assert_eq!(f.content, ratio(num, den));
            // Factors refine the pool choices: same total degree, all monic.
            let total: usize = f.factors.iter().map(|(h, e)| h.degree().unwrap() * e).sum();
            let expected: usize = picks.iter().map(|&i| pool[i].degree().unwrap()).sum();
            prop_assert_eq!(total, expected);
            for (h, _) in &f.factors {
                prop_assert!(h.is_monic());
            }
        }

        #[test]
        fn squarefree_decomposition_reconstructs(
            c0 in -4i64..=4, c1 in -4i64..=4, e1 in 1usize..=3, e2 in 1usize..=2
        ) {
            let p1 = poly(&[c0, 1]);
            let p2 = poly(&[c1, 0, 1]);
            let a = &p1.pow(e1) * &p2.pow(e2);
            prop_assume!(!a.is_zero());
            let parts = squarefree_decompose(&a).unwrap();
            let mut back = UniPoly::one();
            for (part, e) in &parts {
                back = &back * &part.pow(*e);
                prop_assert!(part.is_monic());
            }
            prop_assert_eq!(back, a.monic());
            // Pairwise coprime parts.
            for i in 0..parts.len() {
                for j in i + 1..parts.len() {
                    let g = parts[i].0.gcd(&parts[j].0).unwrap();
                    prop_assert_eq!(g.degree(), Some(0));
                }
            }
        }
    }
}
