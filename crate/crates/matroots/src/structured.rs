//! Solvers beyond irreducible characteristic polynomials: the blockwise
//! treatment of simple matrices (squarefree characteristic polynomial) and
//! the algebraic sufficient-condition report for nonderogatory matrices.

use crate::factor::{factor_over_q_with, FactorConfig, FactorError, Factorization};
use crate::matrix::{rank_of_columns, LinAlgError, RatMatrix};
use crate::poly::UniPoly;
use crate::rational::rat;
use crate::resultant::{resultant, resultant_over_polys};
use crate::solver::{
    enumerate_solutions_with, verify_solution, CompanionMatrix, Decision, SolveError, SolveReport,
};
use itertools::Itertools;
use num_traits::Zero;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructuredError {
    #[error("matrix is not simple: characteristic polynomial has a repeated factor")]
    NotSimple,
    #[error("matrix is derogatory: minimal polynomial is a proper divisor of the characteristic polynomial")]
    Derogatory,
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error(transparent)]
    Factor(#[from] FactorError),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

fn map_linalg(e: LinAlgError, what: &str) -> StructuredError {
    StructuredError::Internal(format!("{what}: {e}"))
}

/// True iff the characteristic polynomial is squarefree, i.e. every
/// eigenvalue has algebraic multiplicity one.
pub fn is_simple(a: &RatMatrix) -> bool {
    let f = a.char_poly();
    let g = f.gcd(&f.derivative()).expect("char poly is nonzero");
    g.degree() == Some(0)
}

/// True iff the minimal polynomial equals the characteristic polynomial.
pub fn is_nonderogatory(a: &RatMatrix) -> bool {
    a.min_poly() == a.char_poly()
}

/// A block-diagonalization A = T⁻¹·(⊕ blocks)·T where the blocks are the
/// companion matrices of the distinct irreducible factors of char_poly(A),
/// in canonical factor order.
#[derive(Debug, Clone)]
pub struct CompanionJordanForm {
    pub t: RatMatrix,
    pub blocks: Vec<CompanionMatrix>,
}

impl CompanionJordanForm {
    /// ⊕ blocks as one matrix.
    pub fn block_matrix(&self) -> RatMatrix {
        let blocks: Vec<RatMatrix> = self.blocks.iter().map(|b| b.matrix.clone()).collect();
        RatMatrix::block_diagonal(&blocks)
    }
}

/// Block-diagonalizes a simple matrix. For each irreducible factor fᵢ the
/// Bezout identity s·fᵢ + t·(f/fᵢ) = 1 gives the projector (t·f/fᵢ)(A)
/// onto ker fᵢ(A); the first standard basis vector with a nonzero
/// projection is a cyclic vector for the restriction (fᵢ is irreducible),
/// and its Krylov vectors contribute the columns for that block.
pub fn companion_jordan(a: &RatMatrix) -> Result<CompanionJordanForm, StructuredError> {
    companion_jordan_with(a, &FactorConfig::default())
}

pub fn companion_jordan_with(
    a: &RatMatrix,
    config: &FactorConfig,
) -> Result<CompanionJordanForm, StructuredError> {
    let n = a.dim();
    let f = a.char_poly();
    let factorization = factor_over_q_with(&f, config)?;
    if factorization.factors.iter().any(|(_, e)| *e > 1) {
        return Err(StructuredError::NotSimple);
    }
    let mut blocks = Vec::with_capacity(factorization.factors.len());
    let mut columns: Vec<Vec<crate::rational::Rational>> = Vec::with_capacity(n);
    for (fi, _) in &factorization.factors {
        let ni = fi.degree().expect("factors are nonconstant");
        let (cofactor, rem) = f.divmod(fi).expect("factor is nonzero");
        debug_assert!(rem.is_zero());
        let (g, _, t) = fi.xgcd(&cofactor).expect("operands are nonzero");
        if !g.is_one() {
            return Err(StructuredError::Internal(
                "distinct irreducible factors must be coprime".into(),
            ));
        }
        // Reduce t·cofactor mod f; by Cayley-Hamilton the action on ℚⁿ is
        // unchanged and the degree stays below n.
        let (_, proj_poly) = (&t * &cofactor)
            .divmod(&f)
            .expect("char poly is nonzero");
        let projector = a.eval_poly(&proj_poly);
        let mut seed = None;
        for j in 0..n {
            let w = projector.column(j);
            if w.iter().any(|c| !c.is_zero()) {
                seed = Some(w);
                break;
            }
        }
        let Some(w) = seed else {
            return Err(StructuredError::Internal(
                "projector onto a nontrivial kernel cannot be zero".into(),
            ));
        };
        let mut krylov_cols = Vec::with_capacity(ni);
        let mut v = w;
        for _ in 0..ni {
            krylov_cols.push(v.clone());
            v = a.mul_vec(&v);
        }
        if rank_of_columns(&krylov_cols) != ni {
            return Err(StructuredError::Internal(
                "a nonzero vector in ker fᵢ(A) must be cyclic for the restriction".into(),
            ));
        }
        columns.extend(krylov_cols);
        blocks.push(CompanionMatrix::new(fi).map_err(|e| map_linalg(e, "companion block"))?);
    }
    let u = RatMatrix::from_columns(&columns);
    let t = u.inverse().map_err(|e| map_linalg(e, "change of basis"))?;
    let form = CompanionJordanForm { t, blocks };
    // Reconstruction check: A = T⁻¹·(⊕Cᵢ)·T exactly.
    let reconstructed = &(&u * &form.block_matrix()) * &form.t;
    if reconstructed != *a {
        return Err(StructuredError::Internal(
            "companion-Jordan reconstruction failed".into(),
        ));
    }
    Ok(form)
}

/// Solves p(X) = A for simple A blockwise: each block Cᵢ (companion of the
/// irreducible fᵢ) is solved by the core solver, and the solution set is
/// the cartesian product of the per-block lists conjugated back by T.
///
/// The report reuses [`SolveReport`]: `factors` is the factorization of
/// f∘p merged across blocks, `admissible` concatenates the per-block γ
/// lists in block order (so `count`, the product of per-block counts, can
/// exceed its length), and `solutions` is the full cartesian product.
pub fn solve_simple(a: &RatMatrix, p: &UniPoly) -> Result<SolveReport, StructuredError> {
    solve_simple_with(a, p, &FactorConfig::default())
}

pub fn solve_simple_with(
    a: &RatMatrix,
    p: &UniPoly,
    config: &FactorConfig,
) -> Result<SolveReport, StructuredError> {
    let form = companion_jordan_with(a, config)?;
    let f = a.char_poly();
    let mut block_reports = Vec::with_capacity(form.blocks.len());
    for block in &form.blocks {
        block_reports.push(enumerate_solutions_with(&block.matrix, p, config)?);
    }
    let mut count = 1usize;
    let mut admissible = Vec::new();
    let mut merged_factors: Vec<(UniPoly, usize)> = Vec::new();
    let mut content = rat(1);
    for report in &block_reports {
        count *= report.count;
        admissible.extend(report.admissible.iter().cloned());
        content *= &report.factors.content;
        merged_factors.extend(report.factors.factors.iter().cloned());
    }
    merged_factors.sort_by(|(x, _), (y, _)| x.canonical_cmp(y));
    let factors = Factorization {
        content,
        factors: merged_factors,
    };
    let composition = f.compose(p);
    debug_assert_eq!(factors.product(), composition);

    let u = form
        .t
        .inverse()
        .map_err(|e| map_linalg(e, "T is invertible"))?;
    let per_block: Vec<&Vec<RatMatrix>> = block_reports
        .iter()
        .map(|r| r.solutions.as_ref().expect("enumerated"))
        .collect();
    let mut solutions = Vec::with_capacity(count);
    if per_block.iter().all(|list| !list.is_empty()) {
        for choice in per_block
            .iter()
            .map(|list| list.iter())
            .multi_cartesian_product()
        {
            let owned: Vec<RatMatrix> = choice.into_iter().cloned().collect();
            let direct_sum = RatMatrix::block_diagonal(&owned);
            let x = &(&u * &direct_sum) * &form.t;
            if !verify_solution(a, p, &x).map_err(StructuredError::Solve)? {
                return Err(StructuredError::Internal(
                    "blockwise solution failed verification".into(),
                ));
            }
            solutions.push(x);
        }
    }
    if solutions.len() != count {
        return Err(StructuredError::Internal(
            "solution count must be the product of per-block counts".into(),
        ));
    }
    for i in 0..solutions.len() {
        for j in i + 1..solutions.len() {
            if solutions[i] == solutions[j] {
                return Err(StructuredError::Internal(
                    "blockwise solutions must be pairwise distinct".into(),
                ));
            }
        }
    }
    Ok(SolveReport {
        decision: if count > 0 {
            Decision::Solvable
        } else {
            Decision::Unsolvable
        },
        char_poly: f,
        composition,
        factors,
        admissible,
        solutions: Some(solutions),
        count,
    })
}

/// The pairwise sum D(u, v) = Σₘ pₘ Σ_{i<m} uⁱ·v^(m−1−i), which satisfies
/// D(u, v)·(u − v) = p(u) − p(v) and D(γ, γ) = p′(γ). Returned as a
/// polynomial in v whose coefficients are polynomials in u.
fn pairwise_sum(p: &UniPoly) -> Vec<UniPoly> {
    let d = p.degree().unwrap_or(0);
    if d == 0 {
        return vec![UniPoly::zero()];
    }
    // Coefficient of v^k collects pₘ·u^(m−1−k) for every m > k.
    let mut coeffs: Vec<UniPoly> = vec![UniPoly::zero(); d];
    for m in 1..=d {
        let pm = p.coeff(m);
        if pm.is_zero() {
            continue;
        }
        for k in 0..m {
            let term = UniPoly::monomial(pm.clone(), m - 1 - k);
            coeffs[k] = &coeffs[k] + &term;
        }
    }
    coeffs
}

/// Checks the algebraic sufficient condition on a factor h: the product of
/// D(γ_s, γ_t) over all ordered root pairs of h (including s = t, which
/// contributes p′(γ)) is nonzero. Computed exactly as the iterated
/// resultant Res_u(h(u), Res_v(h(v), D(u, v))); a vanishing inner
/// resultant already forces the product to zero.
pub fn condition13_holds(h: &UniPoly, p: &UniPoly) -> bool {
    assert!(h.is_monic(), "condition13 expects a monic factor");
    assert!(
        !p.is_zero() && !p.is_constant(),
        "condition13 expects nonconstant p"
    );
    let d_coeffs = pairwise_sum(p);
    let h_over_u: Vec<UniPoly> = h
        .coeffs()
        .iter()
        .map(|c| UniPoly::constant(c.clone()))
        .collect();
    let inner = resultant_over_polys(&h_over_u, &d_coeffs)
        .expect("h and D are nonzero polynomials in v");
    if inner.is_zero() {
        return false;
    }
    let outer = resultant(h, &inner).expect("both operands are nonzero");
    !outer.is_zero()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NonderoVerdict {
    Sufficient,
    NoSolution,
    NotEstablished,
}

/// Outcome of the sufficient-condition check for nonderogatory A.
///
/// `factors` lists char_poly(A) = ∏ fⱼ^(dⱼ); `per_factor[j]` carries the
/// number of admissible γ for (fⱼ, p) and whether some admissible γ's
/// factor satisfies condition 13. The verdict is SUFFICIENT when every
/// factor has an admissible γ and (dⱼ = 1 or condition 13 holds),
/// NO_SOLUTION when some factor has none (necessity), and
/// NOT_ESTABLISHED otherwise; the condition is sufficient, not necessary.
#[derive(Debug, Clone)]
pub struct NonderoReport {
    pub factors: Vec<(UniPoly, usize)>,
    pub per_factor: Vec<(usize, bool)>,
    pub verdict: NonderoVerdict,
}

pub fn nondero_report(a: &RatMatrix, p: &UniPoly) -> Result<NonderoReport, StructuredError> {
    nondero_report_with(a, p, &FactorConfig::default())
}

pub fn nondero_report_with(
    a: &RatMatrix,
    p: &UniPoly,
    config: &FactorConfig,
) -> Result<NonderoReport, StructuredError> {
    if !is_nonderogatory(a) {
        return Err(StructuredError::Derogatory);
    }
    let f = a.char_poly();
    let factorization = factor_over_q_with(&f, config)?;
    let mut per_factor = Vec::with_capacity(factorization.factors.len());
    for (fj, _) in &factorization.factors {
        let report = crate::numberfield::admissible_gammas_with(fj, p, config)
            .map_err(|e| StructuredError::Internal(format!("admissibility of a factor: {e}")))?;
        let admissible_count = report.admissible.len();
        let cond13 = report
            .admissible
            .iter()
            .any(|ag| condition13_holds(&ag.factor, p));
        per_factor.push((admissible_count, cond13));
    }
    let any_empty = per_factor.iter().any(|&(c, _)| c == 0);
    let all_good = factorization
        .factors
        .iter()
        .zip(&per_factor)
        .all(|((_, d), &(c, cond))| c > 0 && (*d == 1 || cond));
    let verdict = if any_empty {
        NonderoVerdict::NoSolution
    } else if all_good {
        NonderoVerdict::Sufficient
    } else {
        NonderoVerdict::NotEstablished
    };
    Ok(NonderoReport {
        factors: factorization.factors,
        per_factor,
        verdict,
    })
}
