//! Decision and construction of rational solutions to p(X) = A when the
//! characteristic polynomial f of A is irreducible.
//!
//! The equation is solvable exactly when f∘p has a rational factor h of
//! degree n, and there is exactly one solution per distinct such factor.
//! Two independent constructions are kept side by side: the companion
//! similarity route ([`solve_from_factor`]) and the eigenvector coordinate
//! route ([`solve_drazin`]); they must agree entry for entry.

use crate::factor::{FactorConfig, FactorError, Factorization};
use crate::matrix::{LinAlgError, RatMatrix};
use crate::numberfield::{admissible_gammas_with, FieldError, NFElement, NumberField};
use crate::poly::UniPoly;
use crate::rational::rat;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("characteristic polynomial is reducible; use the structured solvers")]
    ReducibleCharPoly,
    #[error("p is the constant eigenvalue of a 1×1 matrix; every X is a solution")]
    ConstantPolynomial,
    #[error("invalid factor: {0}")]
    BadFactor(String),
    #[error("the element is not admissible: p(γ) ≠ μ")]
    NotAdmissible,
    #[error("dimension mismatch between the matrix arguments")]
    DimensionMismatch,
    #[error(transparent)]
    Factor(#[from] FactorError),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

fn map_field(e: FieldError) -> SolveError {
    match e {
        FieldError::ModulusReducible => SolveError::ReducibleCharPoly,
        FieldError::ConstantComposition => SolveError::ConstantPolynomial,
        FieldError::Factor(f) => SolveError::Factor(f),
        other => SolveError::Internal(format!("unexpected field error: {other}")),
    }
}

fn map_linalg(e: LinAlgError, what: &str) -> SolveError {
    SolveError::Internal(format!("{what}: {e}"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Decision {
    Solvable,
    Unsolvable,
}

/// The full outcome of deciding (and optionally solving) p(X) = A.
///
/// `count` equals the number of distinct degree-n irreducible factors of
/// the composition, which is both the length of `admissible` and, once
/// enumerated, the length of `solutions`. `solutions` stays `None` for
/// [`decide`], which constructs nothing.
#[derive(Debug, Clone)]
pub struct SolveReport {
    pub decision: Decision,
    pub char_poly: UniPoly,
    pub composition: UniPoly,
    pub factors: Factorization,
    pub admissible: Vec<NFElement>,
    pub solutions: Option<Vec<RatMatrix>>,
    pub count: usize,
}

impl SolveReport {
    /// The degree-n irreducible factors of the composition, in the same
    /// order as `admissible` and `solutions`.
    pub fn admissible_factors(&self) -> Vec<&UniPoly> {
        let n = self.char_poly.degree().expect("char poly is nonconstant");
        self.factors
            .factors
            .iter()
            .filter(|(h, _)| h.degree() == Some(n))
            .map(|(h, _)| h)
            .collect()
    }
}

/// A monic polynomial together with its companion matrix; companions are
/// nonderogatory, so the characteristic and minimal polynomials both equal
/// `poly`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompanionMatrix {
    pub poly: UniPoly,
    pub matrix: RatMatrix,
}

impl CompanionMatrix {
    pub fn new(poly: &UniPoly) -> Result<CompanionMatrix, LinAlgError> {
        let matrix = RatMatrix::companion(poly)?;
        debug_assert_eq!(matrix.char_poly(), *poly);
        debug_assert_eq!(matrix.min_poly(), *poly);
        Ok(CompanionMatrix {
            poly: poly.clone(),
            matrix,
        })
    }
}

/// Decides solvability of p(X) = A without constructing solutions.
pub fn decide(a: &RatMatrix, p: &UniPoly) -> Result<SolveReport, SolveError> {
    decide_with(a, p, &FactorConfig::default())
}

pub fn decide_with(
    a: &RatMatrix,
    p: &UniPoly,
    config: &FactorConfig,
) -> Result<SolveReport, SolveError> {
    let f = a.char_poly();
    let report = admissible_gammas_with(&f, p, config).map_err(map_field)?;
    let count = report.admissible.len();
    Ok(SolveReport {
        decision: if count > 0 {
            Decision::Solvable
        } else {
            Decision::Unsolvable
        },
        char_poly: f,
        composition: report.composition,
        factors: report.factorization,
        admissible: report.admissible.into_iter().map(|g| g.gamma).collect(),
        solutions: None,
        count,
    })
}

/// Decides and constructs every rational solution, one per distinct
/// degree-n factor of f∘p, in canonical factor order. Each solution comes
/// from the companion route; debug builds rerun the eigenvector route and
/// require exact agreement.
pub fn enumerate_solutions(a: &RatMatrix, p: &UniPoly) -> Result<SolveReport, SolveError> {
    enumerate_solutions_with(a, p, &FactorConfig::default())
}

pub fn enumerate_solutions_with(
    a: &RatMatrix,
    p: &UniPoly,
    config: &FactorConfig,
) -> Result<SolveReport, SolveError> {
    let mut report = decide_with(a, p, config)?;
    let factors: Vec<UniPoly> = report
        .admissible_factors()
        .into_iter()
        .cloned()
        .collect();
    debug_assert_eq!(factors.len(), report.admissible.len());
    let mut solutions = Vec::with_capacity(factors.len());
    for (h, gamma) in factors.iter().zip(&report.admissible) {
        let x = solve_from_factor(a, p, h)?;
        if cfg!(debug_assertions) {
            let x_drazin = solve_drazin(a, p, gamma)?;
            if x != x_drazin {
                return Err(SolveError::Internal(
                    "companion and Drazin routes disagree".into(),
                ));
            }
        }
        if !verify_solution(a, p, &x)? {
            return Err(SolveError::Internal(
                "constructed solution failed verification".into(),
            ));
        }
        solutions.push(x);
    }
    for i in 0..solutions.len() {
        for j in i + 1..solutions.len() {
            if solutions[i] == solutions[j] {
                return Err(SolveError::Internal(
                    "solutions for distinct factors must be distinct".into(),
                ));
            }
        }
    }
    report.solutions = Some(solutions);
    Ok(report)
}

fn basis_vector(n: usize, k: usize) -> Vec<crate::rational::Rational> {
    (0..n).map(|i| if i == k { rat(1) } else { rat(0) }).collect()
}

/// Companion similarity route. Requires h monic of degree n dividing f∘p
/// with f irreducible; any such divisor is automatically irreducible,
/// because every irreducible factor of f∘p has degree at least n.
///
/// With B = companion(h): p(B) and A share the irreducible characteristic
/// polynomial f, so both Krylov matrices K_B = krylov(p(B), e₁) and
/// K_A = krylov(A, e₁) are invertible and S = K_B·K_A⁻¹ conjugates A to
/// p(B). Then X = S⁻¹·B·S satisfies p(X) = A.
pub fn solve_from_factor(
    a: &RatMatrix,
    p: &UniPoly,
    h: &UniPoly,
) -> Result<RatMatrix, SolveError> {
    let n = a.dim();
    let f = a.char_poly();
    NumberField::new(&f).map_err(map_field)?;
    if !h.is_monic() {
        return Err(SolveError::BadFactor("h must be monic".into()));
    }
    if h.degree() != Some(n) {
        return Err(SolveError::BadFactor(format!(
            "h must have degree {n}, the size of A"
        )));
    }
    let composition = f.compose(p);
    let (_, rem) = composition
        .divmod(h)
        .expect("h is nonzero");
    if !rem.is_zero() {
        return Err(SolveError::BadFactor(
            "h does not divide f∘p".into(),
        ));
    }
    let b = CompanionMatrix::new(h).map_err(|e| map_linalg(e, "companion of h"))?;
    let p_of_b = b.matrix.eval_poly(p);
    if p_of_b.char_poly() != f {
        return Err(SolveError::Internal(
            "p(companion(h)) must have characteristic polynomial f".into(),
        ));
    }
    let e1 = basis_vector(n, 0);
    let k_b = p_of_b
        .krylov(&e1)
        .map_err(|e| map_linalg(e, "Krylov of p(B)"))?;
    let k_a = a.krylov(&e1).map_err(|e| map_linalg(e, "Krylov of A"))?;
    let k_a_inv = k_a
        .inverse()
        .map_err(|e| map_linalg(e, "Krylov matrix of A is invertible for irreducible f"))?;
    let s = &k_b * &k_a_inv;
    let s_inv = s
        .inverse()
        .map_err(|e| map_linalg(e, "S is a product of invertible matrices"))?;
    let x = &s_inv * &(&b.matrix * &s);
    debug_assert_eq!(x.char_poly(), *h);
    if x.eval_poly(p) != *a {
        return Err(SolveError::Internal(
            "companion route produced a non-solution".into(),
        ));
    }
    Ok(x)
}

/// Eigenvector coordinate route. Requires γ admissible: p(γ) = μ in
/// ℚ(μ) = ℚ[λ]/(f).
///
/// Solve (A − μI)w = 0 over ℚ(μ), write the coordinates of the entries of
/// w into a rational matrix W (so W·(1, μ, …, μ^(n−1))ᵀ = w), likewise C
/// for γ·w, and return X = C·W⁻¹.
pub fn solve_drazin(
    a: &RatMatrix,
    p: &UniPoly,
    gamma: &NFElement,
) -> Result<RatMatrix, SolveError> {
    let n = a.dim();
    let f = a.char_poly();
    let field = NumberField::new(&f).map_err(map_field)?;
    let gamma = field.element(gamma.rep());
    let mu = field.generator();
    if field.eval_unipoly(p, &gamma) != mu {
        return Err(SolveError::NotAdmissible);
    }
    let rows: Vec<Vec<NFElement>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let entry = field.constant(a.at(i, j).clone());
                    if i == j {
                        field.sub(&entry, &mu)
                    } else {
                        entry
                    }
                })
                .collect()
        })
        .collect();
    let w = field.kernel_vector(&rows).ok_or_else(|| {
        SolveError::Internal("A − μI is singular because f(μ) = 0".into())
    })?;
    let w_rows: Vec<Vec<crate::rational::Rational>> =
        w.iter().map(|wi| field.coords(wi)).collect();
    let c_rows: Vec<Vec<crate::rational::Rational>> = w
        .iter()
        .map(|wi| field.coords(&field.mul(&gamma, wi)))
        .collect();
    let w_mat = RatMatrix::from_rows(w_rows).map_err(|e| map_linalg(e, "W shape"))?;
    let c_mat = RatMatrix::from_rows(c_rows).map_err(|e| map_linalg(e, "C shape"))?;
    let w_inv = w_mat
        .inverse()
        .map_err(|e| map_linalg(e, "W is invertible for irreducible f"))?;
    let x = &c_mat * &w_inv;
    if x.eval_poly(p) != *a {
        return Err(SolveError::Internal(
            "Drazin route produced a non-solution".into(),
        ));
    }
    Ok(x)
}

/// Exact check that p(X) = A by Horner evaluation over matrices.
pub fn verify_solution(
    a: &RatMatrix,
    p: &UniPoly,
    x: &RatMatrix,
) -> Result<bool, SolveError> {
    if a.dim() != x.dim() {
        return Err(SolveError::DimensionMismatch);
    }
    Ok(x.eval_poly(p) == *a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::solve_columns;
    use crate::rational::ratio;

    fn poly(cs: &[i64]) -> UniPoly {
        UniPoly::from_integers(cs)
    }

    fn example2_a() -> RatMatrix {
        RatMatrix::from_integers(&[&[0, 1, 0], &[0, 0, 1], &[-3, 0, 0]])
    }

    fn example3_a() -> RatMatrix {
        RatMatrix::from_integers(&[&[-1, 6, 2], &[-1, -1, -2], &[-3, 3, -1]])
    }

    fn example3_x() -> RatMatrix {
        RatMatrix::from_integers(&[&[1, 0, 2], &[-1, 1, 0], &[0, 3, 1]])
    }

    fn example5_a() -> RatMatrix {
        RatMatrix::from_integers(&[&[1, -2], &[-4, 1]])
    }

    fn example5_x() -> RatMatrix {
        RatMatrix::from_integers(&[&[0, 1], &[2, 0]])
    }

    #[test]
    fn unsolvable_cube_root_case() {
        // f = λ³ + 3, p = λ²: f∘p = λ⁶ + 3 is irreducible, so no solution.
        let report = enumerate_solutions(&example2_a(), &poly(&[0, 0, 1])).unwrap();
        assert_eq!(report.decision, Decision::Unsolvable);
        assert_eq!(report.char_poly, poly(&[3, 0, 0, 1]));
        assert_eq!(report.composition, poly(&[3, 0, 0, 0, 0, 0, 1]));
        assert_eq!(report.count, 0);
        assert_eq!(report.solutions, Some(vec![]));
        assert!(report.admissible.is_empty());
    }

    #[test]
    fn decide_does_not_construct() {
        let report = decide(&example3_a(), &poly(&[-1, -1, 1])).unwrap();
        assert_eq!(report.decision, Decision::Solvable);
        assert_eq!(report.count, 2);
        assert!(report.solutions.is_none());
    }

    #[test]
    fn two_solutions_for_golden_ratio_p() {
        // p = λ² − λ − 1: f∘p = (λ³ − 6)(λ³ − 3λ² + 3λ + 5), count 2.
        let a = example3_a();
        let p = poly(&[-1, -1, 1]);
        let report = enumerate_solutions(&a, &p).unwrap();
        assert_eq!(report.decision, Decision::Solvable);
        assert_eq!(report.count, 2);
        assert_eq!(
            report.factors.factors,
            vec![(poly(&[-6, 0, 0, 1]), 1), (poly(&[5, 3, -3, 1]), 1)]
        );
        let solutions = report.solutions.clone().unwrap();
        assert_eq!(solutions.len(), 2);
        assert!(solutions.contains(&example3_x()));
        for (x, h) in solutions.iter().zip(report.admissible_factors()) {
            assert!(verify_solution(&a, &p, x).unwrap());
            assert_eq!(&x.char_poly(), h);
            // Solutions commute with A and are polynomials in A.
            assert_eq!(&(x * &a), &(&a * x));
            let powers: Vec<Vec<_>> = (0..3)
                .scan(RatMatrix::identity(3), |acc, _| {
                    let v = acc.vectorize();
                    *acc = &*acc * &a;
                    Some(v)
                })
                .collect();
            assert!(solve_columns(&powers, &x.vectorize()).is_some());
        }
        assert_ne!(solutions[0], solutions[1]);
    }

    #[test]
    fn single_solution_cubic_p() {
        let a = example5_a();
        let p = poly(&[1, -4, 0, 1]);
        let report = enumerate_solutions(&a, &p).unwrap();
        assert_eq!(report.count, 1);
        assert_eq!(report.solutions, Some(vec![example5_x()]));
        assert_eq!(
            report.factors.factors,
            vec![(poly(&[-2, 0, 1]), 1), (poly(&[4, 0, -6, 0, 1]), 1)]
        );
    }

    #[test]
    fn both_routes_agree_on_worked_cases() {
        let a = example5_a();
        let p = poly(&[1, -4, 0, 1]);
        let x1 = solve_from_factor(&a, &p, &poly(&[-2, 0, 1])).unwrap();
        assert_eq!(x1, example5_x());
        let field = NumberField::new(&a.char_poly()).unwrap();
        let gamma = field.element(&UniPoly::new(vec![ratio(1, 2), ratio(-1, 2)]));
        let x2 = solve_drazin(&a, &p, &gamma).unwrap();
        assert_eq!(x2, example5_x());

        let a3 = example3_a();
        let p3 = poly(&[-1, -1, 1]);
        let report = enumerate_solutions(&a3, &p3).unwrap();
        for (h, gamma) in report
            .admissible_factors()
            .iter()
            .zip(&report.admissible)
        {
            let via_companion = solve_from_factor(&a3, &p3, h).unwrap();
            let via_drazin = solve_drazin(&a3, &p3, gamma).unwrap();
            assert_eq!(via_companion, via_drazin);
        }
    }

    #[test]
    fn identity_and_linear_p() {
        // p = λ: the only factor is f itself and X = A.
        let a = example5_a();
        let report = enumerate_solutions(&a, &UniPoly::var()).unwrap();
        assert_eq!(report.count, 1);
        assert_eq!(report.solutions, Some(vec![a.clone()]));
        // p = 2λ + 1 on A' = 2A + I recovers A.
        let a_prime = &a.scale(&rat(2)) + &RatMatrix::identity(2);
        let report = enumerate_solutions(&a_prime, &poly(&[1, 2])).unwrap();
        assert_eq!(report.count, 1);
        assert_eq!(report.solutions, Some(vec![a.clone()]));
    }

    #[test]
    fn factor_validation() {
        let a = example5_a();
        let p = poly(&[1, -4, 0, 1]);
        // Not monic.
        let double = poly(&[-2, 0, 1]).scale(&rat(2));
        assert!(matches!(
            solve_from_factor(&a, &p, &double),
            Err(SolveError::BadFactor(_))
        ));
        // Wrong degree.
        assert!(matches!(
            solve_from_factor(&a, &p, &poly(&[4, 0, -6, 0, 1])),
            Err(SolveError::BadFactor(_))
        ));
        // Right degree, does not divide.
        assert!(matches!(
            solve_from_factor(&a, &p, &poly(&[2, -3, 1])),
            Err(SolveError::BadFactor(_))
        ));
    }

    #[test]
    fn gamma_validation() {
        let a = example5_a();
        let p = poly(&[1, -4, 0, 1]);
        let field = NumberField::new(&a.char_poly()).unwrap();
        // μ itself is not admissible: p(μ) ≠ μ here.
        assert!(matches!(
            solve_drazin(&a, &p, &field.generator()),
            Err(SolveError::NotAdmissible)
        ));
    }

    #[test]
    fn reducible_char_poly_is_refused() {
        let a = RatMatrix::from_integers(&[&[1, 0], &[0, 2]]);
        assert!(matches!(
            decide(&a, &poly(&[0, 0, 1])),
            Err(SolveError::ReducibleCharPoly)
        ));
    }

    #[test]
    fn constant_p_cases() {
        // n = 2: a constant p can never hit a matrix with irreducible f.
        let a = example5_a();
        let report = decide(&a, &poly(&[5])).unwrap();
        assert_eq!(report.decision, Decision::Unsolvable);
        assert_eq!(report.count, 0);
        // n = 1, p ≡ 7 and A = [7]: every X solves; dedicated error.
        let a1 = RatMatrix::from_integers(&[&[7]]);
        assert!(matches!(
            decide(&a1, &poly(&[7])),
            Err(SolveError::ConstantPolynomial)
        ));
        // n = 1, p ≡ 5 and A = [7]: unsolvable.
        let report = decide(&a1, &poly(&[5])).unwrap();
        assert_eq!(report.decision, Decision::Unsolvable);
    }

    #[test]
    fn non_squarefree_composition() {
        // n = 1, A = [2], p = λ² − 2λ + 3: f∘p = (λ − 1)², one solution X = [1].
        let a = RatMatrix::from_integers(&[&[2]]);
        let p = poly(&[3, -2, 1]);
        let report = enumerate_solutions(&a, &p).unwrap();
        assert_eq!(report.count, 1);
        assert_eq!(
            report.solutions,
            Some(vec![RatMatrix::from_integers(&[&[1]])])
        );
        assert_eq!(report.factors.factors, vec![(poly(&[-1, 1]), 2)]);
    }

    #[test]
    fn verification() {
        let a = example3_a();
        let p = poly(&[-1, -1, 1]);
        assert!(verify_solution(&a, &p, &example3_x()).unwrap());
        assert!(!verify_solution(&a, &p, &a).unwrap());
        assert!(matches!(
            verify_solution(&a, &p, &example5_x()),
            Err(SolveError::DimensionMismatch)
        ));
    }

    #[test]
    fn spectral_consistency() {
        // p maps the spectrum of X onto the spectrum of A: p(γ) = μ, so the
        // characteristic polynomial of p(γ) is f itself.
        let a = example5_a();
        let p = poly(&[1, -4, 0, 1]);
        let report = decide(&a, &p).unwrap();
        let gamma = &report.admissible[0];
        let field = NumberField::new(&report.char_poly).unwrap();
        let p_of_gamma = p.compose(gamma.rep());
        assert_eq!(
            field.char_poly_of_element(&p_of_gamma),
            report.char_poly
        );
    }
}
