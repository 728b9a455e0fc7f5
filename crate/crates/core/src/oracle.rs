//! Slow, independent re-derivation of extremal enumerators.
//!
//! Builds the full `(m+1) x (m+1)` constraint system from directly powered
//! basis elements and solves it with fraction-free (Bareiss) elimination.
//! Nothing here relies on the unit-diagonal shape the fast solver exploits.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::gleason::{admissible, type_params, CodeType, ExtremalEnumerator, GleasonError};
use crate::polyarith::{poly_mul, poly_pow, BigCoeff, StepPoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("singular system")]
    Singular,
    #[error("system is not square: {rows} rows, {cols} columns, rhs {rhs}")]
    Shape { rows: usize, cols: usize, rhs: usize },
    #[error("non-integral result at {what} {index}: {value}")]
    NonIntegral { what: &'static str, index: usize, value: BigRational },
    #[error(transparent)]
    Gleason(#[from] GleasonError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearSystem {
    pub matrix: Vec<Vec<BigRational>>,
    pub rhs: Vec<BigRational>,
}

impl LinearSystem {
    pub fn new(matrix: Vec<Vec<BigRational>>, rhs: Vec<BigRational>) -> Result<Self, OracleError> {
        let rows = matrix.len();
        if rhs.len() != rows || matrix.iter().any(|r| r.len() != rows) {
            return Err(OracleError::Shape {
                rows,
                cols: matrix.first().map_or(0, Vec::len),
                rhs: rhs.len(),
            });
        }
        Ok(Self { matrix, rhs })
    }

    pub fn from_integers(matrix: &[Vec<i64>], rhs: &[i64]) -> Result<Self, OracleError> {
        let q = |x: &i64| BigRational::from_integer(BigInt::from(*x));
        Self::new(
            matrix.iter().map(|r| r.iter().map(q).collect()).collect(),
            rhs.iter().map(q).collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.rhs.len()
    }
}

fn basis_elements(t: CodeType, n: usize) -> Vec<StepPoly> {
    let p = type_params(t);
    let j = n / p.s;
    let m = j / p.r;
    (0..=m)
        .map(|i| poly_mul(&poly_pow(&p.f, j - p.r * i), &poly_pow(&p.g, i)).expect("same step"))
        .collect()
}

pub fn build_system(t: CodeType, n: usize) -> Result<LinearSystem, OracleError> {
    if !admissible(t, n) {
        return Err(GleasonError::Inadmissible { code_type: t, n }.into());
    }
    let basis = basis_elements(t, n);
    let dim = basis.len();
    let matrix = (0..dim)
        .map(|k| {
            basis
                .iter()
                .map(|b| BigRational::from_integer(b.coeffs()[k].clone()))
                .collect()
        })
        .collect();
    let mut rhs = vec![BigRational::zero(); dim];
    rhs[0] = BigRational::one();
    LinearSystem::new(matrix, rhs)
}

/// Exact solve: rows are cleared to integers, eliminated with Bareiss'
/// fraction-free scheme using first-nonzero pivoting, then back-substituted
/// in rationals.
pub fn solve(sys: &LinearSystem) -> Result<Vec<BigRational>, OracleError> {
    let dim = sys.dim();
    // Augmented integer matrix, each row scaled by the lcm of its denominators.
    let mut rows: Vec<Vec<BigInt>> = sys
        .matrix
        .iter()
        .zip(&sys.rhs)
        .map(|(row, b)| {
            let l = row
                .iter()
                .chain(std::iter::once(b))
                .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            row.iter()
                .chain(std::iter::once(b))
                .map(|x| x.numer() * (&l / x.denom()))
                .collect()
        })
        .collect();

    let mut prev = BigInt::one();
    for k in 0..dim {
        let pivot = (k..dim).find(|&r| !rows[r][k].is_zero()).ok_or(OracleError::Singular)?;
        rows.swap(k, pivot);
        for i in k + 1..dim {
            for c in k + 1..=dim {
                let v = &rows[k][k] * &rows[i][c] - &rows[i][k] * &rows[k][c];
                // Bareiss: the division is exact.
                rows[i][c] = v / &prev;
            }
            rows[i][k] = BigInt::zero();
        }
        prev = rows[k][k].clone();
    }

    let mut x = vec![BigRational::zero(); dim];
    for i in (0..dim).rev() {
        let mut s = BigRational::from_integer(rows[i][dim].clone());
        for c in i + 1..dim {
            s -= BigRational::from_integer(rows[i][c].clone()) * &x[c];
        }
        x[i] = s / BigRational::from_integer(rows[i][i].clone());
    }
    Ok(x)
}

fn integral(v: &BigRational, what: &'static str, index: usize) -> Result<BigCoeff, OracleError> {
    if v.is_integer() {
        Ok(v.to_integer())
    } else {
        Err(OracleError::NonIntegral { what, index, value: v.clone() })
    }
}

/// Oracle counterpart of [`crate::gleason::extremal_enumerator`].
pub fn generic_solve(t: CodeType, n: usize) -> Result<ExtremalEnumerator, OracleError> {
    let sys = build_system(t, n)?;
    let sol = solve(&sys)?;
    let basis = basis_elements(t, n);
    let p = type_params(t);
    let w = p.w;
    let len = n / w + 1;
    let mut slots = vec![BigRational::zero(); len];
    for (ai, b) in sol.iter().zip(&basis) {
        for (s, c) in slots.iter_mut().zip(b.coeffs()) {
            *s += ai * BigRational::from_integer(c.clone());
        }
    }
    let a = sol
        .iter()
        .enumerate()
        .map(|(i, v)| integral(v, "basis coefficient", i))
        .collect::<Result<Vec<_>, _>>()?;
    let coeffs = slots
        .iter()
        .enumerate()
        .map(|(k, v)| integral(v, "slot", k))
        .collect::<Result<Vec<_>, _>>()?;
    let poly = StepPoly::new(n, w, coeffs).expect("slot count");
    Ok(ExtremalEnumerator { code_type: t, n, j: n / p.s, m: sol.len() - 1, a, poly })
}
