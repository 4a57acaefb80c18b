//! Quadratic Hensel lifting of modular factorizations.

use super::intpoly::IntPoly;
use super::modp::ModPPoly;
use super::FactorError;
use crate::poly::UniPoly;
use num_bigint::BigInt;
use num_traits::One;

pub(crate) fn intpoly_from_modp(f: &ModPPoly) -> IntPoly {
    IntPoly::new(f.coeffs().iter().map(|&c| BigInt::from(c)).collect())
}

pub(crate) fn to_modp(f: &IntPoly, p: u64) -> ModPPoly {
    use num_integer::Integer;
    use num_traits::ToPrimitive;
    let pb = BigInt::from(p);
    ModPPoly::new(
        p,
        f.coeffs
            .iter()
            .map(|c| c.mod_floor(&pb).to_u64().unwrap())
            .collect(),
    )
}

/// One quadratic step. Inputs satisfy, mod m:
///   f ≡ g·h,  s·g + t·h ≡ 1,  h monic,  deg s < deg h,  deg t < deg g.
/// Returns (g1, h1, s1, t1) satisfying the same relations mod m².
pub(crate) fn hensel_step(
    f: &IntPoly,
    g: &IntPoly,
    h: &IntPoly,
    s: &IntPoly,
    t: &IntPoly,
    m: &BigInt,
) -> (IntPoly, IntPoly, IntPoly, IntPoly) {
    let m2 = m * m;
    debug_assert!(h.is_monic());
    let e = f.sub_mod(&g.mul(h), &m2);
    // h1 = h + (s·e rem h) stays monic: the correction has degree < deg h.
    let (_, r) = s.mul(&e).divmod_monic_mod(h, &m2);
    let h1 = h.add_mod(&r, &m2);
    // h1 is monic, hence a non-zerodivisor mod m²; g1 is the exact quotient.
    let (g1, rem) = f.divmod_monic_mod(&h1, &m2);
    debug_assert!(rem.is_zero(), "h1 must divide f mod m²");
    // Refresh the Bezout pair: b = s·g1 + t·h1 − 1 ≡ 0 mod m.
    let b = s
        .mul(&g1)
        .add_mod(&t.mul(&h1), &m2)
        .sub_mod(&IntPoly::one(), &m2);
    let (_, s1) = s
        .mul(&IntPoly::one().sub_mod(&b, &m2))
        .divmod_monic_mod(&h1, &m2);
    // s1·g1 + t1·h1 = 1 mod m² pins down t1 = (1 − s1·g1)/h1 exactly.
    let (t1, rem2) = IntPoly::one()
        .sub_mod(&s1.mul(&g1), &m2)
        .divmod_monic_mod(&h1, &m2);
    debug_assert!(rem2.is_zero(), "Bezout refresh must divide exactly");
    (g1, h1, s1, t1)
}

/// Lifts f ≡ ∏ factors (mod p), f monic over ℤ, to monic factors mod
/// `target` = p^(2^j) by peeling one factor at a time. The mod-p factors
/// must be monic and pairwise coprime (a squarefree factorization is).
pub(crate) fn lift_factor_list(
    f: &IntPoly,
    factors: &[ModPPoly],
    p: u64,
    target: &BigInt,
) -> Vec<IntPoly> {
    debug_assert!(f.is_monic());
    let mut lifted = Vec::with_capacity(factors.len());
    let mut remaining = f.reduce_mod(target);
    for (i, fac) in factors.iter().enumerate() {
        if i + 1 == factors.len() {
            lifted.push(remaining);
            break;
        }
        let g_mod = factors[i + 1..]
            .iter()
            .fold(ModPPoly::constant(p, 1), |acc, q| acc.mul(q));
        // s·g + t·h = 1 with h = fac; xgcd degree bounds give deg s < deg h.
        let (d, s_mod, t_mod) = g_mod.xgcd(fac);
        assert_eq!(d.degree(), Some(0), "mod-p factors must be coprime");
        let mut g = intpoly_from_modp(&g_mod);
        let mut h = intpoly_from_modp(fac);
        let mut s = intpoly_from_modp(&s_mod);
        let mut t = intpoly_from_modp(&t_mod);
        let mut m = BigInt::from(p);
        while &m < target {
            (g, h, s, t) = hensel_step(&remaining, &g, &h, &s, &t, &m);
            m = &m * &m;
        }
        lifted.push(h.reduce_mod(target));
        // The cofactor g is monic mod target and carries the rest of the peel.
        remaining = g.reduce_mod(target);
    }
    lifted
}

fn integral(p: &UniPoly) -> Option<IntPoly> {
    let mut coeffs = Vec::with_capacity(p.coeffs().len());
    for c in p.coeffs() {
        if !c.denom().is_one() {
            return None;
        }
        coeffs.push(c.numer().clone());
    }
    Some(IntPoly::new(coeffs))
}

fn modinv_bigint(a: &BigInt, m: &BigInt) -> BigInt {
    use num_integer::Integer;
    let e = a.extended_gcd(m);
    assert!(e.gcd.is_one(), "not invertible");
    e.x.mod_floor(m)
}

/// Lifts a factorization a ≡ g·h (mod p) to a ≡ G·H (mod p^k) with
/// G ≡ g and H ≡ h (mod p). Coefficients of G and H are centered in
/// (−p^k/2, p^k/2]. Requires integer coefficients, a monic mod p with
/// no degree drop, and gcd(g, h) = 1 in 𝔽p[x]; p must be an odd prime.
pub fn hensel_lift(
    a: &UniPoly,
    g: &UniPoly,
    h: &UniPoly,
    p: u64,
    k: u32,
) -> Result<(UniPoly, UniPoly), FactorError> {
    if p == 2 || !super::modp::is_prime_u64(p) {
        return Err(FactorError::BadPrime { p });
    }
    if k == 0 {
        return Err(FactorError::BadExponent);
    }
    let (a_int, g_int, h_int) = match (integral(a), integral(g), integral(h)) {
        (Some(a), Some(g), Some(h)) => (a, g, h),
        _ => return Err(FactorError::NotIntegral),
    };
    let a_p = to_modp(&a_int, p);
    let g_p = to_modp(&g_int, p);
    let h_p = to_modp(&h_int, p);
    if a_p.is_zero() || g_p.is_zero() || h_p.is_zero() {
        return Err(FactorError::VanishesModP { p });
    }
    if !a_p.is_monic() || a_p.degree() != a_int.degree() {
        return Err(FactorError::NotMonicModP { p });
    }
    if g_p.mul(&h_p) != a_p {
        return Err(FactorError::NotAFactorization { p });
    }
    let (d, _, _) = g_p.xgcd(&h_p);
    if d.degree() != Some(0) {
        return Err(FactorError::FactorsNotCoprime { p });
    }

    // The step needs a monic h over ℤ. Lift (g·lc(h), h/lc(h)) instead and
    // scale back at the end so the outputs reduce to the given g and h mod p.
    let lc_h = h_p.lc();
    let h_monic = h_p.monic();
    let g_scaled = g_p.mul_scalar(lc_h);
    let (d2, s2, t2) = g_scaled.xgcd(&h_monic);
    debug_assert_eq!(d2.degree(), Some(0));

    let pb = BigInt::from(p);
    let target = pb.pow(k);
    let f = a_int.reduce_mod(&target);
    let mut gg = intpoly_from_modp(&g_scaled);
    let mut hh = intpoly_from_modp(&h_monic);
    let mut ss = intpoly_from_modp(&s2);
    let mut tt = intpoly_from_modp(&t2);
    let mut m = pb.clone();
    while m < target {
        (gg, hh, ss, tt) = hensel_step(&f, &gg, &hh, &ss, &tt, &m);
        m = &m * &m;
    }
    // m = p^(2^j) may overshoot p^k; the congruences still hold mod p^k.
    let mut g_out = gg.reduce_mod(&target);
    let mut h_out = hh.reduce_mod(&target);
    if lc_h != 1 {
        let lc = BigInt::from(lc_h);
        let inv = modinv_bigint(&lc, &target);
        h_out = h_out.mul(&IntPoly::new(vec![lc])).reduce_mod(&target);
        g_out = g_out.mul(&IntPoly::new(vec![inv])).reduce_mod(&target);
    }
    Ok((
        g_out.centered_mod(&target).to_unipoly(),
        h_out.centered_mod(&target).to_unipoly(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::UniPoly;
    use num_traits::Zero;

    fn ip(coeffs: &[i64]) -> IntPoly {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn step_doubles_precision() {
        // x² − 2 ≡ (x − 3)(x − 4) mod 7; one step reaches mod 49.
        // (x − 3) − (x − 4) = 1 gives the exact Bezout pair s = 1, t = −1.
        let f = ip(&[-2, 0, 1]);
        let g = ip(&[-3, 1]);
        let h = ip(&[-4, 1]);
        let s = ip(&[1]);
        let t = ip(&[-1]);
        let (g1, h1, s1, t1) = hensel_step(&f, &g, &h, &s, &t, &BigInt::from(7));
        let m2 = BigInt::from(49);
        assert!(f.sub_mod(&g1.mul(&h1), &m2).is_zero());
        let bez = s1.mul(&g1).add_mod(&t1.mul(&h1), &m2);
        assert_eq!(bez.centered_mod(&m2), IntPoly::one());
        // 10² ≡ 2 (mod 49), 10 ≡ 3 and −10 ≡ 4 (mod 7): the root 3 lifts
        // to 10 and the root 4 lifts to −10.
        assert_eq!((10 * 10 - 2) % 49, 0);
        assert_eq!(g1.centered_mod(&m2), ip(&[-10, 1]));
        assert_eq!(h1.centered_mod(&m2), ip(&[10, 1]));
    }

    #[test]
    fn lift_to_requested_exponent() {
        let f = UniPoly::from_integers(&[-2, 0, 1]);
        let g = UniPoly::from_integers(&[-3, 1]);
        let h = UniPoly::from_integers(&[-4, 1]);
        let (gg, hh) = hensel_lift(&f, &g, &h, 7, 2).unwrap();
        assert_eq!(gg, UniPoly::from_integers(&[-10, 1]));
        assert_eq!(hh, UniPoly::from_integers(&[10, 1]));
        // k = 1 returns centered representatives of the inputs.
        let (g1, h1) = hensel_lift(&f, &g, &h, 7, 1).unwrap();
        assert_eq!(g1, UniPoly::from_integers(&[-3, 1]));
        assert_eq!(h1, UniPoly::from_integers(&[3, 1]));
        // k = 4 overshoots to 7⁸ internally; verify the mod-7⁴ congruence
        // and that the factors still reduce to the mod-7 inputs.
        let (g4, h4) = hensel_lift(&f, &g, &h, 7, 4).unwrap();
        let m = BigInt::from(2401);
        let prod = &(&g4 * &h4) - &f;
        for c in prod.coeffs() {
            assert!(c.denom().is_one());
            assert!((c.numer() % &m).is_zero());
        }
        for (lifted, base) in [(&g4, &g), (&h4, &h)] {
            let diff = lifted - base;
            for c in diff.coeffs() {
                assert!((c.numer() % BigInt::from(7)).is_zero());
            }
        }
    }

    #[test]
    fn lift_quartic_pair() {
        // x⁴ − 6x² + 4 ≡ (x² + 3x − 2)(x² − 3x − 2) mod 7, since
        // (x² − 2)² − 9x² = x⁴ − 13x² + 4 ≡ x⁴ + x² + 4 (mod 7).
        let f = UniPoly::from_integers(&[4, 0, -6, 0, 1]);
        let fp = to_modp(&ip(&[4, 0, -6, 0, 1]), 7);
        let parts = crate::factor::modp::factor_mod_p(&fp, 1).unwrap();
        assert_eq!(parts.len(), 2);
        assert!(parts.iter().all(|q| q.degree() == Some(2)));
        let g = intpoly_from_modp(&parts[0]).to_unipoly();
        let h = intpoly_from_modp(&parts[1]).to_unipoly();
        let (gg, hh) = hensel_lift(&f, &g, &h, 7, 6).unwrap();
        let m = BigInt::from(7u64.pow(6));
        let prod = &(&gg * &hh) - &f;
        for c in prod.coeffs() {
            assert!((c.numer() % &m).is_zero());
        }
    }

    #[test]
    fn rejects_bad_inputs() {
        let f = UniPoly::from_integers(&[-2, 0, 1]);
        let g = UniPoly::from_integers(&[-3, 1]);
        let h = UniPoly::from_integers(&[-4, 1]);
        assert!(matches!(
            hensel_lift(&f, &g, &h, 6, 2),
            Err(FactorError::BadPrime { p: 6 })
        ));
        assert!(matches!(
            hensel_lift(&f, &g, &h, 2, 2),
            Err(FactorError::BadPrime { p: 2 })
        ));
        assert!(matches!(
            hensel_lift(&f, &g, &h, 7, 0),
            Err(FactorError::BadExponent)
        ));
        let wrong = UniPoly::from_integers(&[1, 1]);
        assert!(matches!(
            hensel_lift(&f, &g, &wrong, 7, 2),
            Err(FactorError::NotAFactorization { p: 7 })
        ));
        // (x − 1)² mod 5 with g = h = x − 1: shared factor.
        let sq = UniPoly::from_integers(&[1, -2, 1]);
        let lin = UniPoly::from_integers(&[-1, 1]);
        assert!(matches!(
            hensel_lift(&sq, &lin, &lin, 5, 2),
            Err(FactorError::FactorsNotCoprime { p: 5 })
        ));
        let half = UniPoly::new(vec![crate::rational::ratio(1, 2), crate::rational::rat(1)]);
        assert!(matches!(
            hensel_lift(&f, &half, &h, 7, 2),
            Err(FactorError::NotIntegral)
        ));
        // 7x² + x − 2 drops to degree 1 mod 7.
        let drop = UniPoly::from_integers(&[-2, 1, 7]);
        assert!(matches!(
            hensel_lift(&drop, &g, &h, 7, 2),
            Err(FactorError::NotMonicModP { p: 7 })
        ));
        // 7x² − 14 vanishes outright.
        let vanish = UniPoly::from_integers(&[-14, 0, 7]);
        assert!(matches!(
            hensel_lift(&vanish, &g, &h, 7, 2),
            Err(FactorError::VanishesModP { p: 7 })
        ));
    }

    #[test]
    fn multifactor_peel() {
        // f = (x − 1)(x − 2)(x − 3), lifted from mod 5 to mod 5⁴.
        let f = ip(&[-6, 11, -6, 1]);
        let parts = crate::factor::modp::factor_mod_p(&to_modp(&f, 5), 1).unwrap();
        assert_eq!(parts.len(), 3);
        let target = BigInt::from(625);
        let lifted = lift_factor_list(&f, &parts, 5, &target);
        assert_eq!(lifted.len(), 3);
        let prod = lifted.iter().fold(IntPoly::one(), |acc, q| acc.mul(q));
        assert!(prod.sub_mod(&f, &target).is_zero());
        // The true roots 1, 2, 3 are small, so the centered lifts are exact.
        let mut centered: Vec<IntPoly> =
            lifted.iter().map(|q| q.centered_mod(&target)).collect();
        centered.sort_by_key(|q| q.coeff(0));
        assert_eq!(centered, vec![ip(&[-3, 1]), ip(&[-2, 1]), ip(&[-1, 1])]);
    }
}
