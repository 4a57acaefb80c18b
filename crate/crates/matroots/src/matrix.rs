//! Exact rational matrices and the linear algebra used by the solvers.

use crate::poly::UniPoly;
use crate::rational::{format_rational, rat, Rational};
use num_traits::Zero;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinAlgError {
    #[error("singular matrix (rank {rank})")]
    Singular { rank: usize },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("rows do not form a square matrix")]
    NotSquare,
    #[error("companion matrix requires a monic polynomial of degree >= 1")]
    InvalidCompanionPolynomial,
}

/// Square matrix over ℚ, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatMatrix {
    n: usize,
    entries: Vec<Rational>,
}

impl RatMatrix {
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self, LinAlgError> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(LinAlgError::NotSquare);
        }
        Ok(RatMatrix {
            n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Convenience constructor for integer matrices; panics on ragged rows.
    pub fn from_integers(rows: &[&[i64]]) -> Self {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&x| rat(x)).collect())
            .collect();
        Self::from_rows(rows).expect("ragged rows")
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        RatMatrix { n, entries }
    }

    /// Matrix with the given columns; panics unless they form a square.
    pub fn from_columns(cols: &[Vec<Rational>]) -> Self {
        let n = cols.len();
        assert!(cols.iter().all(|c| c.len() == n), "ragged columns");
        Self::from_fn(n, |i, j| cols[j][i].clone())
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| if i == j { rat(1) } else { rat(0) })
    }

    pub fn zero(n: usize) -> Self {
        RatMatrix {
            n,
            entries: vec![rat(0); n * n],
        }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn at(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.n).map(|i| self.at(i, j).clone()).collect()
    }

    pub fn trace(&self) -> Rational {
        (0..self.n).fold(rat(0), |acc, i| acc + self.at(i, i))
    }

    pub fn scale(&self, c: &Rational) -> RatMatrix {
        RatMatrix {
            n: self.n,
            entries: self.entries.iter().map(|x| x * c).collect(),
        }
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.n);
        (0..self.n)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(rat(0), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    /// Row-major flattening, used for dependency searches over matrix powers.
    pub fn vectorize(&self) -> Vec<Rational> {
        self.entries.clone()
    }

    /// p(self) by Horner.
    pub fn eval_poly(&self, p: &UniPoly) -> RatMatrix {
        let mut acc = RatMatrix::zero(self.n);
        for c in p.coeffs().iter().rev() {
            acc = &(&acc * self) + &RatMatrix::identity(self.n).scale(c);
        }
        acc
    }

    /// Companion matrix of a monic polynomial: ones on the subdiagonal and
    /// negated coefficients in the last column, so that the Krylov matrix of
    /// (C, e1) is the identity.
    pub fn companion(p: &UniPoly) -> Result<Self, LinAlgError> {
        let n = match p.degree() {
            Some(n) if n >= 1 && p.is_monic() => n,
            _ => return Err(LinAlgError::InvalidCompanionPolynomial),
        };
        Ok(Self::from_fn(n, |i, j| {
            if j == n - 1 {
                -p.coeff(i)
            } else if i == j + 1 {
                rat(1)
            } else {
                rat(0)
            }
        }))
    }

    /// Columns v, Av, ..., A^(n-1)v.
    pub fn krylov(&self, v: &[Rational]) -> Result<RatMatrix, LinAlgError> {
        if v.len() != self.n {
            return Err(LinAlgError::DimensionMismatch {
                expected: self.n,
                got: v.len(),
            });
        }
        let mut cols = Vec::with_capacity(self.n);
        let mut cur = v.to_vec();
        for _ in 0..self.n {
            cols.push(cur.clone());
            cur = self.mul_vec(&cur);
        }
        Ok(Self::from_columns(&cols))
    }

    /// Characteristic polynomial det(xI − A) by the Berkowitz scheme, which
    /// is division-free and exact.
    pub fn char_poly(&self) -> UniPoly {
        let n = self.n;
        // Coefficients of the char poly of the leading principal r×r minor,
        // descending powers, starting from the empty matrix.
        let mut c = vec![rat(1)];
        for r in 0..n {
            // Principal (r+1)×(r+1) block [[M, s], [row, a]].
            let a = self.at(r, r).clone();
            let mut t = Vec::with_capacity(r + 2);
            t.push(rat(1));
            t.push(-a);
            if r > 0 {
                let row: Vec<Rational> = (0..r).map(|j| self.at(r, j).clone()).collect();
                let mut u: Vec<Rational> = (0..r).map(|i| self.at(i, r).clone()).collect();
                for k in 0..r {
                    let dot = row.iter().zip(&u).fold(rat(0), |acc, (x, y)| acc + x * y);
                    t.push(-dot);
                    if k + 1 < r {
                        // u ← M·u for the next power.
                        u = (0..r)
                            .map(|i| {
                                (0..r).fold(rat(0), |acc, j| acc + self.at(i, j) * &u[j])
                            })
                            .collect();
                    }
                }
            }
            // Convolve and truncate to length r + 2.
            let mut next = vec![rat(0); r + 2];
            for (i, ci) in c.iter().enumerate() {
                for (j, tj) in t.iter().enumerate() {
                    if i + j < r + 2 {
                        next[i + j] = &next[i + j] + &(ci * tj);
                    }
                }
            }
            c = next;
        }
        c.reverse();
        UniPoly::new(c)
    }

    /// Minimal polynomial, found as the first linear dependency among
    /// I, A, A², … under exact Gaussian elimination.
    pub fn min_poly(&self) -> UniPoly {
        let mut cols: Vec<Vec<Rational>> = vec![RatMatrix::identity(self.n).vectorize()];
        let mut power = RatMatrix::identity(self.n);
        for _ in 1..=self.n {
            power = &power * self;
            let target = power.vectorize();
            if let Some(sol) = solve_columns(&cols, &target) {
                let mut coeffs: Vec<Rational> = sol.into_iter().map(|c| -c).collect();
                coeffs.push(rat(1));
                return UniPoly::new(coeffs);
            }
            cols.push(target);
        }
        unreachable!("Cayley-Hamilton guarantees a dependency by degree n");
    }

    /// Exact inverse; a singular input reports its rank.
    pub fn inverse(&self) -> Result<RatMatrix, LinAlgError> {
        let n = self.n;
        let mut a: Vec<Vec<Rational>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut inv: Vec<Vec<Rational>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { rat(1) } else { rat(0) })
                    .collect()
            })
            .collect();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else {
                return Err(LinAlgError::Singular { rank: self.rank() });
            };
            a.swap(col, p);
            inv.swap(col, p);
            let piv = a[col][col].recip();
            for j in 0..n {
                a[col][j] = &a[col][j] * &piv;
                inv[col][j] = &inv[col][j] * &piv;
            }
            for r in 0..n {
                if r == col || a[r][col].is_zero() {
                    continue;
                }
                let f = a[r][col].clone();
                for j in 0..n {
                    let t = &a[col][j] * &f;
                    a[r][j] = &a[r][j] - &t;
                    let t = &inv[col][j] * &f;
                    inv[r][j] = &inv[r][j] - &t;
                }
            }
        }
        Ok(RatMatrix {
            n,
            entries: inv.into_iter().flatten().collect(),
        })
    }

    pub fn rank(&self) -> usize {
        rank_of_columns(&(0..self.n).map(|j| self.column(j)).collect::<Vec<_>>())
    }

    /// Block-diagonal assembly.
    pub fn block_diagonal(blocks: &[RatMatrix]) -> RatMatrix {
        let n = blocks.iter().map(|b| b.n).sum();
        let mut m = RatMatrix::zero(n);
        let mut off = 0;
        for b in blocks {
            for i in 0..b.n {
                for j in 0..b.n {
                    m.entries[(off + i) * n + (off + j)] = b.at(i, j).clone();
                }
            }
            off += b.n;
        }
        m
    }
}

/// Solves Σ x_j·cols[j] = rhs exactly; None when inconsistent. Free
/// variables, if any, are set to zero.
pub(crate) fn solve_columns(cols: &[Vec<Rational>], rhs: &[Rational]) -> Option<Vec<Rational>> {
    let k = cols.len();
    let m = rhs.len();
    debug_assert!(cols.iter().all(|c| c.len() == m));
    let mut rows: Vec<Vec<Rational>> = (0..m)
        .map(|i| {
            let mut row: Vec<Rational> = cols.iter().map(|c| c[i].clone()).collect();
            row.push(rhs[i].clone());
            row
        })
        .collect();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut next_row = 0;
    for col in 0..k {
        let Some(p) = (next_row..m).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(next_row, p);
        let piv = rows[next_row][col].recip();
        for j in col..=k {
            rows[next_row][j] = &rows[next_row][j] * &piv;
        }
        for r in 0..m {
            if r == next_row || rows[r][col].is_zero() {
                continue;
            }
            let f = rows[r][col].clone();
            for j in col..=k {
                let t = &rows[next_row][j] * &f;
                rows[r][j] = &rows[r][j] - &t;
            }
        }
        pivots.push((next_row, col));
        next_row += 1;
        if next_row == m {
            break;
        }
    }
    // Inconsistent when a zero row has a nonzero right-hand side.
    for r in next_row..m {
        if !rows[r][k].is_zero() {
            return None;
        }
    }
    let mut x = vec![rat(0); k];
    for (r, c) in pivots {
        x[c] = rows[r][k].clone();
    }
    Some(x)
}

pub(crate) fn rank_of_columns(cols: &[Vec<Rational>]) -> usize {
    if cols.is_empty() {
        return 0;
    }
    let m = cols[0].len();
    let mut rows: Vec<Vec<Rational>> = (0..m)
        .map(|i| cols.iter().map(|c| c[i].clone()).collect())
        .collect();
    let k = cols.len();
    let mut rank = 0;
    for col in 0..k {
        let Some(p) = (rank..m).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let piv = rows[rank][col].recip();
        for r in rank + 1..m {
            if rows[r][col].is_zero() {
                continue;
            }
            let f = &rows[r][col] * &piv;
            for j in col..k {
                let t = &rows[rank][j] * &f;
                rows[r][j] = &rows[r][j] - &t;
            }
        }
        rank += 1;
        if rank == m {
            break;
        }
    }
    rank
}

impl Add for &RatMatrix {
    type Output = RatMatrix;
    fn add(self, rhs: &RatMatrix) -> RatMatrix {
        assert_eq!(self.n, rhs.n);
        RatMatrix {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &RatMatrix {
    type Output = RatMatrix;
    fn sub(self, rhs: &RatMatrix) -> RatMatrix {
        assert_eq!(self.n, rhs.n);
        RatMatrix {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Mul for &RatMatrix {
    type Output = RatMatrix;
    fn mul(self, rhs: &RatMatrix) -> RatMatrix {
        assert_eq!(self.n, rhs.n);
        RatMatrix::from_fn(self.n, |i, j| {
            (0..self.n).fold(rat(0), |acc, k| acc + self.at(i, k) * rhs.at(k, j))
        })
    }
}

impl Neg for &RatMatrix {
    type Output = RatMatrix;
    fn neg(self) -> RatMatrix {
        RatMatrix {
            n: self.n,
            entries: self.entries.iter().map(|x| -x).collect(),
        }
    }
}

impl fmt::Display for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            write!(f, "[")?;
            for j in 0..self.n {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", format_rational(self.at(i, j)))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatMatrix({}x{})\n{}", self.n, self.n, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn e1(n: usize) -> Vec<Rational> {
        let mut v = vec![rat(0); n];
        v[0] = rat(1);
        v
    }

    #[test]
    fn char_poly_known_matrices() {
        let a = RatMatrix::from_integers(&[&[0, 1, 0], &[0, 0, 1], &[-3, 0, 0]]);
        assert_eq!(a.char_poly(), UniPoly::from_integers(&[3, 0, 0, 1]));

        let a = RatMatrix::from_integers(&[&[-1, 6, 2], &[-1, -1, -2], &[-3, 3, -1]]);
        assert_eq!(a.char_poly(), UniPoly::from_integers(&[-11, 21, 3, 1]));

        let a = RatMatrix::from_integers(&[&[1, -2], &[-4, 1]]);
        assert_eq!(a.char_poly(), UniPoly::from_integers(&[-7, -2, 1]));

        let i2 = RatMatrix::identity(2);
        assert_eq!(i2.char_poly(), UniPoly::from_integers(&[1, -2, 1]));
    }

    #[test]
    fn char_poly_of_companion_is_the_polynomial() {
        let p = UniPoly::from_integers(&[5, 3, -3, 1]);
        let c = RatMatrix::companion(&p).unwrap();
        assert_eq!(c.char_poly(), p);
        assert_eq!(c.min_poly(), p);
    }

    #[test]
    fn companion_rejects_non_monic() {
        assert_eq!(
            RatMatrix::companion(&UniPoly::from_integers(&[1, 2])),
            Err(LinAlgError::InvalidCompanionPolynomial)
        );
        assert_eq!(
            RatMatrix::companion(&UniPoly::one()),
            Err(LinAlgError::InvalidCompanionPolynomial)
        );
    }

    #[test]
    fn krylov_of_companion_at_e1_is_identity() {
        let p = UniPoly::from_integers(&[-11, 21, 3, 1]);
        let c = RatMatrix::companion(&p).unwrap();
        assert_eq!(c.krylov(&e1(3)).unwrap(), RatMatrix::identity(3));
    }

    #[test]
    fn krylov_examples() {
        let d = RatMatrix::from_integers(&[&[1, 0], &[0, 2]]);
        let k = d.krylov(&[rat(1), rat(1)]).unwrap();
        assert_eq!(k, RatMatrix::from_integers(&[&[1, 1], &[1, 2]]));

        let z = d.krylov(&[rat(0), rat(0)]).unwrap();
        assert_eq!(z, RatMatrix::zero(2));

        assert!(matches!(
            d.krylov(&[rat(1)]),
            Err(LinAlgError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn min_poly_examples() {
        let d = RatMatrix::from_integers(&[&[2, 0], &[0, 2]]);
        assert_eq!(d.min_poly(), UniPoly::from_integers(&[-2, 1]));

        let j = RatMatrix::from_integers(&[&[4, 1], &[0, 4]]);
        assert_eq!(j.min_poly(), UniPoly::from_integers(&[16, -8, 1]));
        assert_eq!(j.min_poly(), j.char_poly());
    }

    #[test]
    fn inverse_roundtrip_and_singular_rank() {
        let a = RatMatrix::from_integers(&[&[2, 1], &[7, 4]]);
        let inv = a.inverse().unwrap();
        assert_eq!(&a * &inv, RatMatrix::identity(2));
        assert_eq!(&inv * &a, RatMatrix::identity(2));

        let s = RatMatrix::from_integers(&[&[1, 2], &[2, 4]]);
        assert_eq!(s.inverse(), Err(LinAlgError::Singular { rank: 1 }));
        assert_eq!(
            RatMatrix::zero(3).inverse(),
            Err(LinAlgError::Singular { rank: 0 })
        );
    }

    #[test]
    fn eval_poly_horner() {
        let a = RatMatrix::from_integers(&[&[1, 0, 2], &[-1, 1, 0], &[0, 3, 1]]);
        let p = UniPoly::from_integers(&[-1, -1, 1]);
        let expected = RatMatrix::from_integers(&[&[-1, 6, 2], &[-1, -1, -2], &[-3, 3, -1]]);
        assert_eq!(a.eval_poly(&p), expected);
        assert_eq!(a.eval_poly(&UniPoly::zero()), RatMatrix::zero(3));
        assert_eq!(a.eval_poly(&UniPoly::var()), a);
    }

    #[test]
    fn block_diagonal_assembles() {
        let b = RatMatrix::block_diagonal(&[
            RatMatrix::from_integers(&[&[2]]),
            RatMatrix::from_integers(&[&[0, 1], &[1, 0]]),
        ]);
        assert_eq!(
            b,
            RatMatrix::from_integers(&[&[2, 0, 0], &[0, 0, 1], &[0, 1, 0]])
        );
    }

    #[test]
    fn solve_columns_handles_consistency() {
        let cols = vec![vec![rat(1), rat(0)], vec![rat(1), rat(1)]];
        let sol = solve_columns(&cols, &[rat(3), rat(2)]).unwrap();
        assert_eq!(sol, vec![rat(1), rat(2)]);
        assert!(solve_columns(&cols[..1].to_vec(), &[rat(0), rat(1)]).is_none());
    }

    fn arb_matrix(n: usize) -> impl Strategy<Value = RatMatrix> {
        prop::collection::vec(-4i64..=4, n * n).prop_map(move |v| {
            RatMatrix::from_fn(n, |i, j| rat(v[i * n + j]))
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn cayley_hamilton(n in 1usize..=4, seed in any::<u64>()) {
            use rand::{Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let a = RatMatrix::from_fn(n, |_, _| rat(rng.gen_range(-4..=4)));
            prop_assert_eq!(a.eval_poly(&a.char_poly()), RatMatrix::zero(n));
        }

        #[test]
        fn min_poly_divides_char_poly(a in arb_matrix(3)) {
            let f = a.char_poly();
            let m = a.min_poly();
            let (_, r) = f.divmod(&m).unwrap();
            prop_assert!(r.is_zero());
            prop_assert_eq!(a.eval_poly(&m), RatMatrix::zero(3));
        }

        #[test]
        fn char_poly_is_monic_of_degree_n(a in arb_matrix(4)) {
            let f = a.char_poly();
            prop_assert_eq!(f.degree(), Some(4));
            prop_assert!(f.is_monic());
        }
    }
}
