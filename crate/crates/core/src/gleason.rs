//! Gleason invariant-ring data for the four self-dual code types and the
//! triangular construction of extremal weight enumerators.
//!
//! Every weight enumerator of a Type I-IV code lies in `C[f, g]` for the
//! type's generator pair. The extremal enumerator of length `n` is
//!
//! ```text
//! W* = sum_{i=0..m} a_i f^(j - R*i) g^i,   j = n / S,  m = floor(n / (R*S))
//! ```
//!
//! with `a_0 = 1` and lattice slots `1..=m` forced to zero. Each `g` has
//! its lowest nonzero slot at index 1 with coefficient `+1`, so the basis
//! element `f^(j-Ri) g^i` starts at slot `i` with coefficient `+1` and the
//! `a_i` fall out of a unit-diagonal triangular solve over the integers.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::polyarith::{
    add_scaled_in_place, poly_div_exact, poly_mul, poly_pow, BigCoeff, PolyError, StepPoly,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum CodeType {
    I,
    II,
    III,
    IV,
}

impl CodeType {
    pub const ALL: [CodeType; 4] = [CodeType::I, CodeType::II, CodeType::III, CodeType::IV];

    /// Lower-case tag used on the command line and in file names.
    pub fn tag(self) -> &'static str {
        match self {
            CodeType::I => "i",
            CodeType::II => "ii",
            CodeType::III => "iii",
            CodeType::IV => "iv",
        }
    }

    /// Human-readable admissibility rule.
    pub fn modulus_rule(self) -> &'static str {
        match self {
            CodeType::I | CodeType::IV => "n must be even",
            CodeType::II => "n must satisfy 8|n",
            CodeType::III => "n must satisfy 4|n",
        }
    }
}

impl fmt::Display for CodeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CodeType::I => "I",
            CodeType::II => "II",
            CodeType::III => "III",
            CodeType::IV => "IV",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown code type {0:?} (expected i, ii, iii or iv)")]
pub struct ParseCodeTypeError(pub String);

impl FromStr for CodeType {
    type Err = ParseCodeTypeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "i" | "1" => Ok(CodeType::I),
            "ii" | "2" => Ok(CodeType::II),
            "iii" | "3" => Ok(CodeType::III),
            "iv" | "4" => Ok(CodeType::IV),
            _ => Err(ParseCodeTypeError(s.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GleasonError {
    #[error("inadmissible length n = {n} for Type {code_type}: {}", code_type.modulus_rule())]
    Inadmissible { code_type: CodeType, n: usize },
    #[error("basis element {index} has diagonal coefficient {value}, expected 1")]
    NonUnitDiagonal { index: usize, value: BigInt },
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Constants and generators of one code type.
#[derive(Debug, Clone)]
pub struct TypeParams {
    pub code_type: CodeType,
    /// Field size.
    pub q: u32,
    /// Weight divisor; also the lattice step of every enumerator.
    pub w: usize,
    pub r: usize,
    pub s: usize,
    pub f: StepPoly,
    pub g: StepPoly,
    /// Lengths must be multiples of this.
    pub length_modulus: usize,
}

fn sp(degree: usize, step: usize, c: &[i64]) -> StepPoly {
    StepPoly::from_i64s(degree, step, c).expect("generator layout")
}

fn y_power(ye: usize, step: usize) -> StepPoly {
    StepPoly::monomial(ye, step, ye / step, BigInt::one())
}

fn xy_power(e: usize, step: usize) -> StepPoly {
    // X^e Y^e
    StepPoly::monomial(2 * e, step, e / step, BigInt::one())
}

fn mul(a: &StepPoly, b: &StepPoly) -> StepPoly {
    poly_mul(a, b).expect("generator steps agree")
}

pub fn type_params(t: CodeType) -> TypeParams {
    match t {
        CodeType::I => {
            // f = X^2 + Y^2, g = X^2 Y^2 (X^2 - Y^2)^2
            let f = sp(2, 2, &[1, 1]);
            let g = mul(&xy_power(2, 2), &poly_pow(&sp(2, 2, &[1, -1]), 2));
            TypeParams { code_type: t, q: 2, w: 2, r: 4, s: 2, f, g, length_modulus: 2 }
        }
        CodeType::II => {
            // f = X^8 + 14 X^4 Y^4 + Y^8, g = X^4 Y^4 (X^4 - Y^4)^4
            let f = sp(8, 4, &[1, 14, 1]);
            let g = mul(&xy_power(4, 4), &poly_pow(&sp(4, 4, &[1, -1]), 4));
            TypeParams { code_type: t, q: 2, w: 4, r: 3, s: 8, f, g, length_modulus: 8 }
        }
        CodeType::III => {
            // f = X^4 + 8 X Y^3, g = Y^3 (X^3 - Y^3)^3
            let f = sp(4, 3, &[1, 8]);
            let g = mul(&y_power(3, 3), &poly_pow(&sp(3, 3, &[1, -1]), 3));
            TypeParams { code_type: t, q: 3, w: 3, r: 3, s: 4, f, g, length_modulus: 4 }
        }
        CodeType::IV => {
            // f = X^2 + 3 Y^2, g = Y^2 (X^2 - Y^2)^2
            let f = sp(2, 2, &[1, 3]);
            let g = mul(&y_power(2, 2), &poly_pow(&sp(2, 2, &[1, -1]), 2));
            TypeParams { code_type: t, q: 4, w: 2, r: 3, s: 2, f, g, length_modulus: 2 }
        }
    }
}

pub fn admissible(t: CodeType, n: usize) -> bool {
    let p = type_params(t);
    n >= 1 && n % p.length_modulus == 0 && n % p.s == 0
}

fn check_admissible(t: CodeType, n: usize) -> Result<TypeParams, GleasonError> {
    if !admissible(t, n) {
        return Err(GleasonError::Inadmissible { code_type: t, n });
    }
    Ok(type_params(t))
}

/// `m = floor(n / (R*S))`.
pub fn free_count(t: CodeType, n: usize) -> usize {
    let p = type_params(t);
    n / (p.r * p.s)
}

/// `w * (m + 1)`: the weight of the first slot the extremal enumerator may
/// populate beyond `X^n`.
pub fn extremal_minimum_weight(t: CodeType, n: usize) -> Result<usize, GleasonError> {
    let p = check_admissible(t, n)?;
    Ok(p.w * (n / (p.r * p.s) + 1))
}

/// The solved extremal enumerator for one `(type, n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtremalEnumerator {
    pub code_type: CodeType,
    pub n: usize,
    pub j: usize,
    pub m: usize,
    /// Basis coefficients `a_0 ..= a_m`.
    pub a: Vec<BigCoeff>,
    /// Degree `n`, step `w`; slot `i` holds `A*_{w i}`.
    pub poly: StepPoly,
}

impl ExtremalEnumerator {
    pub fn step(&self) -> usize {
        self.poly.step()
    }

    /// `floor(n / w)`.
    pub fn top_slot(&self) -> usize {
        self.poly.top_slot()
    }

    /// Coefficient of weight `wt`, zero off the lattice.
    pub fn coefficient_at_weight(&self, wt: usize) -> BigCoeff {
        if wt % self.step() != 0 {
            return BigInt::zero();
        }
        self.poly.slot(wt / self.step()).cloned().unwrap_or_default()
    }
}

pub fn extremal_enumerator(t: CodeType, n: usize) -> Result<ExtremalEnumerator, GleasonError> {
    let p = check_admissible(t, n)?;
    let j = n / p.s;
    let m = j / p.r;
    debug_assert_eq!(p.f.degree(), p.s);
    debug_assert_eq!(p.g.degree(), p.r * p.s);

    let f_r = poly_pow(&p.f, p.r);
    let mut basis = poly_pow(&p.f, j);
    let mut acc = basis.clone();
    let mut a = Vec::with_capacity(m + 1);
    a.push(BigInt::one());

    for i in 1..=m {
        // f^(j - R i) g^i from f^(j - R(i-1)) g^(i-1)
        basis = poly_div_exact(&poly_mul(&basis, &p.g)?, &f_r)?;
        assert_eq!(basis.degree(), n, "basis element {i} has wrong degree");
        let diag = &basis.coeffs()[i];
        if !diag.is_one() || basis.coeffs()[..i].iter().any(|c| !c.is_zero()) {
            return Err(GleasonError::NonUnitDiagonal { index: i, value: diag.clone() });
        }
        let ai = -acc.coeffs()[i].clone();
        add_scaled_in_place(&mut acc, &ai, &basis)?;
        a.push(ai);
    }

    debug_assert!(acc.coeffs()[1..=m].iter().all(Zero::is_zero));
    Ok(ExtremalEnumerator { code_type: t, n, j, m, a, poly: acc })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyarith::{densify, eval_at_ones, macwilliams_transform, poly_add_scaled};

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn params_table() {
        let p = type_params(CodeType::III);
        assert_eq!((p.w, p.r, p.s, p.q), (3, 3, 4, 3));
        assert_eq!(p.f.coeffs(), &ints(&[1, 8])[..]);
        assert_eq!((p.f.step(), p.f.degree()), (3, 4));
        assert_eq!(p.g.coeffs(), &ints(&[0, 1, -3, 3, -1])[..]);

        let p = type_params(CodeType::II);
        assert_eq!((p.w, p.r, p.s), (4, 3, 8));
        assert_eq!(p.g.degree(), 24);
        assert_eq!(p.g.coeffs(), &ints(&[0, 1, -4, 6, -4, 1, 0])[..]);

        let p = type_params(CodeType::IV);
        assert_eq!(p.q, 4);
        assert_eq!(p.f.coeffs(), &ints(&[1, 3])[..]);
        assert_eq!((p.f.step(), p.f.degree()), (2, 2));

        let p = type_params(CodeType::I);
        assert_eq!((p.w, p.r, p.s, p.q), (2, 4, 2, 2));
        assert_eq!(p.g.coeffs(), &ints(&[0, 1, -2, 1, 0])[..]);
    }

    #[test]
    fn generator_shape_for_every_type() {
        for t in CodeType::ALL {
            let p = type_params(t);
            assert_eq!(p.f.degree(), p.s, "{t}");
            assert_eq!(p.g.degree(), p.r * p.s, "{t}");
            assert!(p.f.coeffs()[0].is_one(), "{t}");
            assert_eq!(p.g.first_nonzero_slot(), Some(1), "{t}");
            assert!(p.g.coeffs()[1].is_one(), "{t}");
            // f(1,1)^S' = q^(S/2), g(1,1) = 0
            assert_eq!(eval_at_ones(&p.f), BigInt::from(p.q).pow(p.s as u32 / 2), "{t}");
            assert!(eval_at_ones(&p.g).is_zero(), "{t}");
        }
    }

    #[test]
    fn generators_are_macwilliams_invariant() {
        for t in CodeType::ALL {
            let p = type_params(t);
            for gen in [&p.f, &p.g] {
                let d = densify(gen);
                let scale = BigInt::from(p.q).pow(d.degree() as u32 / 2);
                assert_eq!(macwilliams_transform(&d, p.q).unwrap(), d.scale(&scale), "{t}");
            }
        }
    }

    #[test]
    fn admissibility() {
        assert!(admissible(CodeType::III, 12));
        assert!(!admissible(CodeType::III, 10));
        assert!(admissible(CodeType::II, 24));
        assert!(!admissible(CodeType::II, 12));
        assert!(admissible(CodeType::I, 2));
        assert!(!admissible(CodeType::IV, 7));
        assert!(!admissible(CodeType::I, 0));
    }

    #[test]
    fn minimum_weights() {
        assert_eq!(extremal_minimum_weight(CodeType::III, 72).unwrap(), 21);
        assert_eq!(extremal_minimum_weight(CodeType::II, 24).unwrap(), 8);
        assert_eq!(extremal_minimum_weight(CodeType::II, 48).unwrap(), 12);
        assert_eq!(extremal_minimum_weight(CodeType::I, 8).unwrap(), 4);
        assert_eq!(extremal_minimum_weight(CodeType::IV, 6).unwrap(), 4);
        let err = extremal_minimum_weight(CodeType::III, 10).unwrap_err();
        assert_eq!(err.to_string(), "inadmissible length n = 10 for Type III: n must satisfy 4|n");
    }

    #[test]
    fn ternary_golay() {
        let e = extremal_enumerator(CodeType::III, 12).unwrap();
        assert_eq!((e.j, e.m), (3, 1));
        assert_eq!(e.a, ints(&[1, -24]));
        assert_eq!(e.poly.coeffs(), &ints(&[1, 0, 264, 440, 24])[..]);
    }

    #[test]
    fn binary_golay() {
        let e = extremal_enumerator(CodeType::II, 24).unwrap();
        assert_eq!(e.a, ints(&[1, -42]));
        assert_eq!(e.poly.coeffs(), &ints(&[1, 0, 759, 2576, 759, 0, 1])[..]);
    }

    #[test]
    fn extended_hamming() {
        let e = extremal_enumerator(CodeType::I, 8).unwrap();
        assert_eq!(e.a, ints(&[1, -4]));
        assert_eq!(e.poly.coeffs(), &ints(&[1, 0, 14, 0, 1])[..]);
    }

    #[test]
    fn m_zero_is_pure_f_power() {
        let e = extremal_enumerator(CodeType::II, 16).unwrap();
        assert_eq!(e.m, 0);
        assert_eq!(e.poly, poly_pow(&type_params(CodeType::II).f, 2));
    }

    #[test]
    fn inadmissible_rejected() {
        assert_eq!(
            extremal_enumerator(CodeType::II, 12).unwrap_err(),
            GleasonError::Inadmissible { code_type: CodeType::II, n: 12 }
        );
    }

    #[test]
    fn perturbing_a_breaks_extremality() {
        for (t, n) in [(CodeType::III, 24), (CodeType::II, 48), (CodeType::I, 16), (CodeType::IV, 12)] {
            let e = extremal_enumerator(t, n).unwrap();
            let p = type_params(t);
            for i in 1..=e.m {
                let basis = poly_mul(&poly_pow(&p.f, e.j - p.r * i), &poly_pow(&p.g, i)).unwrap();
                let bumped = poly_add_scaled(&e.poly, &BigInt::one(), &basis).unwrap();
                assert!(bumped.coeffs()[1..=e.m].iter().any(|c| !c.is_zero()), "{t} {n} a_{i}");
            }
        }
    }

    #[test]
    fn code_type_parsing() {
        assert_eq!("iii".parse::<CodeType>().unwrap(), CodeType::III);
        assert_eq!("IV".parse::<CodeType>().unwrap(), CodeType::IV);
        assert!("v".parse::<CodeType>().is_err());
        for t in CodeType::ALL {
            assert_eq!(t.tag().parse::<CodeType>().unwrap(), t);
        }
    }
}
