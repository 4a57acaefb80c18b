//! Resultants via the subresultant polynomial remainder sequence.
//!
//! The core runs over any integral domain with exact division, which covers
//! the two cases needed here: coefficients in ℚ and coefficients in ℚ[x]
//! (for resultants that eliminate one variable of a bivariate polynomial).

use crate::poly::{PolyError, UniPoly};
use crate::rational::{rat, Rational};
use num_traits::Zero;

pub(crate) trait Domain: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Exact division. Panics when the quotient does not exist in the domain;
    /// the subresultant recurrences guarantee it does.
    fn exact_div(&self, other: &Self) -> Self;
}

impl Domain for Rational {
    fn zero() -> Self {
        rat(0)
    }
    fn one() -> Self {
        rat(1)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn exact_div(&self, other: &Self) -> Self {
        assert!(!Zero::is_zero(other), "exact_div by zero");
        self / other
    }
}

impl Domain for UniPoly {
    fn zero() -> Self {
        UniPoly::zero()
    }
    fn one() -> Self {
        UniPoly::one()
    }
    fn is_zero(&self) -> bool {
        UniPoly::is_zero(self)
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn exact_div(&self, other: &Self) -> Self {
        let (q, r) = self.divmod(other).expect("exact_div by zero polynomial");
        assert!(r.is_zero(), "exact_div left a remainder");
        q
    }
}

/// Dense polynomial in the eliminated variable, coefficients in D.
#[derive(Clone)]
struct TPoly<D> {
    c: Vec<D>,
}

impl<D: Domain> TPoly<D> {
    fn new(mut c: Vec<D>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        TPoly { c }
    }

    fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// Degree of a nonzero polynomial.
    fn deg(&self) -> usize {
        self.c.len() - 1
    }

    fn lc(&self) -> &D {
        self.c.last().expect("lc of zero")
    }

    fn scale(&self, d: &D) -> TPoly<D> {
        TPoly::new(self.c.iter().map(|x| x.mul(d)).collect())
    }

    fn exact_div_scalar(&self, d: &D) -> TPoly<D> {
        TPoly::new(self.c.iter().map(|x| x.exact_div(d)).collect())
    }

    /// self − m·t^shift·other.
    fn sub_shifted_mul(&self, other: &TPoly<D>, m: &D, shift: usize) -> TPoly<D> {
        let n = self.c.len().max(other.c.len() + shift);
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            let a = self.c.get(k).cloned().unwrap_or_else(D::zero);
            let b = if k >= shift {
                other.c.get(k - shift).map(|x| x.mul(m))
            } else {
                None
            };
            out.push(match b {
                Some(b) => a.sub(&b),
                None => a,
            });
        }
        TPoly::new(out)
    }
}

fn pow<D: Domain>(d: &D, e: usize) -> D {
    let mut acc = D::one();
    for _ in 0..e {
        acc = acc.mul(d);
    }
    acc
}

/// Pseudo-remainder: lc(b)^(deg a − deg b + 1)·a = q·b + r with deg r < deg b.
fn pseudo_rem<D: Domain>(a: &TPoly<D>, b: &TPoly<D>) -> TPoly<D> {
    let d = b.lc().clone();
    let mut e = a.deg() - b.deg() + 1;
    let mut r = a.clone();
    while !r.is_zero() && r.deg() >= b.deg() {
        let m = r.lc().clone();
        let shift = r.deg() - b.deg();
        // r·d and m·t^shift·b share the leading term m·d·t^deg(r).
        r = r.scale(&d).sub_shifted_mul(b, &m, shift);
        e -= 1;
    }
    r.scale(&pow(&d, e))
}

/// Subresultant PRS; both inputs nonzero.
fn res_core<D: Domain>(mut a: TPoly<D>, mut b: TPoly<D>) -> D {
    let mut negate = false;
    if a.deg() < b.deg() {
        if a.deg() % 2 == 1 && b.deg() % 2 == 1 {
            negate = !negate;
        }
        std::mem::swap(&mut a, &mut b);
    }
    let finish = |negate: bool, v: D| if negate { v.neg() } else { v };
    if b.deg() == 0 {
        return finish(negate, pow(b.lc(), a.deg()));
    }
    let mut g = D::one();
    let mut h = D::one();
    loop {
        let delta = a.deg() - b.deg();
        if a.deg() % 2 == 1 && b.deg() % 2 == 1 {
            negate = !negate;
        }
        let r = pseudo_rem(&a, &b);
        a = b;
        let divisor = g.mul(&pow(&h, delta));
        b = r.exact_div_scalar(&divisor);
        if b.is_zero() {
            // Nontrivial common factor.
            return D::zero();
        }
        g = a.lc().clone();
        if delta > 0 {
            h = pow(&g, delta).exact_div(&pow(&h, delta - 1));
        }
        if b.deg() == 0 {
            break;
        }
    }
    let da = a.deg();
    finish(negate, pow(b.lc(), da).exact_div(&pow(&h, da - 1)))
}

/// Resultant of two nonzero rational polynomials, with the Sylvester-matrix
/// sign convention.
pub fn resultant(a: &UniPoly, b: &UniPoly) -> Result<Rational, PolyError> {
    if a.is_zero() || b.is_zero() {
        return Err(PolyError::ZeroResultantOperand);
    }
    Ok(res_core(
        TPoly::new(a.coeffs().to_vec()),
        TPoly::new(b.coeffs().to_vec()),
    ))
}

/// Resultant in the eliminated variable t of two polynomials given by their
/// t-coefficient slices, each coefficient a polynomial in the surviving
/// variable. Returns a polynomial in the surviving variable.
pub fn resultant_over_polys(a: &[UniPoly], b: &[UniPoly]) -> Result<UniPoly, PolyError> {
    let pa = TPoly::new(a.to_vec());
    let pb = TPoly::new(b.to_vec());
    if pa.is_zero() || pb.is_zero() {
        return Err(PolyError::ZeroResultantOperand);
    }
    Ok(res_core(pa, pb))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;
    use proptest::prelude::*;

    /// Independent oracle: the resultant as the determinant of the Sylvester
    /// matrix, expanded by exact Gaussian elimination.
    fn sylvester_resultant(a: &UniPoly, b: &UniPoly) -> Rational {
        let m = a.degree().unwrap();
        let n = b.degree().unwrap();
        if m == 0 && n == 0 {
            return rat(1);
        }
        let size = m + n;
        let mut rows = vec![vec![rat(0); size]; size];
        for i in 0..n {
            for k in 0..=m {
                rows[i][i + m - k] = a.coeff(k);
            }
        }
        for i in 0..m {
            for k in 0..=n {
                rows[n + i][i + n - k] = b.coeff(k);
            }
        }
        // Fraction-full elimination is fine for an oracle.
        let mut det = rat(1);
        for col in 0..size {
            let pivot = (col..size).find(|&r| !Zero::is_zero(&rows[r][col]));
            let Some(p) = pivot else { return rat(0) };
            if p != col {
                rows.swap(p, col);
                det = -det;
            }
            det = det * &rows[col][col];
            let inv = rows[col][col].recip();
            for r in col + 1..size {
                if Zero::is_zero(&rows[r][col]) {
                    continue;
                }
                let factor = &rows[r][col] * &inv;
                for c in col..size {
                    let t = &rows[col][c] * &factor;
                    rows[r][c] = &rows[r][c] - &t;
                }
            }
        }
        det
    }

    #[test]
    fn substitution_resultants() {
        // Res_t(t^2 - 2, x - t) = x^2 - 2.
        let f = UniPoly::from_integers(&[-2, 0, 1]);
        let a: Vec<UniPoly> = f.coeffs().iter().cloned().map(UniPoly::constant).collect();
        let b = vec![UniPoly::var(), UniPoly::from_integers(&[-1])];
        assert_eq!(
            resultant_over_polys(&a, &b).unwrap(),
            UniPoly::from_integers(&[-2, 0, 1])
        );

        // Res_t(t^2 - 2, x - (t + 1)) = x^2 - 2x - 1.
        let b = vec![UniPoly::from_integers(&[-1, 1]), UniPoly::from_integers(&[-1])];
        assert_eq!(
            resultant_over_polys(&a, &b).unwrap(),
            UniPoly::from_integers(&[-1, -2, 1])
        );
    }

    #[test]
    fn linear_first_operand_evaluates() {
        // Res_t(t - c, b(t)) = b(c).
        let b = UniPoly::from_integers(&[1, -4, 0, 1]);
        for c in [-3i64, 0, 2, 7] {
            let lin = UniPoly::new(vec![rat(-c), rat(1)]);
            assert_eq!(resultant(&lin, &b).unwrap(), b.eval(&rat(c)));
        }
    }

    #[test]
    fn zero_operands_are_rejected() {
        assert_eq!(
            resultant(&UniPoly::zero(), &UniPoly::one()),
            Err(PolyError::ZeroResultantOperand)
        );
    }

    #[test]
    fn shared_factor_gives_zero() {
        let a = UniPoly::from_integers(&[-1, 0, 1]);
        let b = UniPoly::from_integers(&[-1, 1]);
        assert_eq!(resultant(&a, &b).unwrap(), rat(0));
        let c = UniPoly::from_integers(&[2, 3, 1]); // (x+1)(x+2)
        let d = UniPoly::from_integers(&[-2, -1, 1]); // (x+1)(x-2)
        assert_eq!(resultant(&c, &d).unwrap(), rat(0));
    }

    #[test]
    fn matches_sylvester_on_known_pairs() {
        let pairs = [
            (vec![-2i64, 0, 1], vec![-3i64, 0, 1]),
            (vec![3, 0, 0, 1], vec![1, 1]),
            (vec![-7, -2, 1], vec![1, -4, 0, 1]),
            (vec![5, 0, 2], vec![4, 3, 2, 1]),
        ];
        for (ca, cb) in pairs {
            let a = UniPoly::from_integers(&ca);
            let b = UniPoly::from_integers(&cb);
            assert_eq!(resultant(&a, &b).unwrap(), sylvester_resultant(&a, &b));
        }
    }

    fn arb_nonzero(max_deg: usize) -> impl Strategy<Value = UniPoly> {
        prop::collection::vec((-6i64..=6, 1i64..=3), 1..=max_deg + 1)
            .prop_map(|cs| UniPoly::new(cs.into_iter().map(|(n, d)| ratio(n, d)).collect()))
            .prop_filter("nonzero", |p| !p.is_zero())
    }

    proptest! {
        #[test]
        fn agrees_with_sylvester_determinant(a in arb_nonzero(5), b in arb_nonzero(5)) {
            prop_assert_eq!(resultant(&a, &b).unwrap(), sylvester_resultant(&a, &b));
        }

        #[test]
        fn identity_substitution_recovers_monic_input(cs in prop::collection::vec(-5i64..=5, 1..=5)) {
            let mut c: Vec<UniPoly> = cs.iter().map(|&k| UniPoly::from_integers(&[k])).collect();
            c.push(UniPoly::one());
            let f = UniPoly::new(
                c.iter().map(|p| p.coeff(0)).collect()
            );
            // Res_t(f(t), x - t) = f(x) for monic f.
            let b = vec![UniPoly::var(), UniPoly::from_integers(&[-1])];
            prop_assert_eq!(resultant_over_polys(&c, &b).unwrap(), f);
        }
    }
}
