//! Dense homogeneous bivariate integer polynomials on a Y-exponent lattice.
//!
//! A [`StepPoly`] of degree `n` and step `w` stores the coefficient of
//! `X^(n - w*k) Y^(w*k)` in slot `k`, for `k = 0 ..= n / w`. Trailing zero
//! slots are always kept so slot indices stay aligned with weights.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Exact coefficient type.
pub type BigCoeff = BigInt;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("step mismatch: {0} vs {1}")]
    StepMismatch(usize, usize),
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("step must be positive")]
    ZeroStep,
    #[error("expected {expected} coefficients for degree {degree} step {step}, got {got}")]
    BadLength {
        degree: usize,
        step: usize,
        expected: usize,
        got: usize,
    },
    #[error("MacWilliams transform needs a step-1 polynomial, got step {0}")]
    NotDense(usize),
    #[error("MacWilliams transform needs even degree, got {0}")]
    OddDegree(usize),
    #[error("divisor has zero constant slot")]
    DivisorNotUnit,
    #[error("division is not exact")]
    Inexact,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct StepPoly {
    degree: usize,
    step: usize,
    coeffs: Vec<BigCoeff>,
}

impl StepPoly {
    pub fn new(degree: usize, step: usize, coeffs: Vec<BigCoeff>) -> Result<Self, PolyError> {
        if step == 0 {
            return Err(PolyError::ZeroStep);
        }
        let expected = degree / step + 1;
        if coeffs.len() != expected {
            return Err(PolyError::BadLength {
                degree,
                step,
                expected,
                got: coeffs.len(),
            });
        }
        Ok(Self {
            degree,
            step,
            coeffs,
        })
    }

    /// Convenience constructor from small integers.
    pub fn from_i64s(degree: usize, step: usize, coeffs: &[i64]) -> Result<Self, PolyError> {
        Self::new(degree, step, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero(degree: usize, step: usize) -> Self {
        assert!(step > 0, "step must be positive");
        Self {
            degree,
            step,
            coeffs: vec![BigInt::zero(); degree / step + 1],
        }
    }

    /// The constant polynomial 1 (degree 0).
    pub fn one(step: usize) -> Self {
        assert!(step > 0, "step must be positive");
        Self {
            degree: 0,
            step,
            coeffs: vec![BigInt::one()],
        }
    }

    /// The single monomial `c * X^(degree - step*slot) Y^(step*slot)`.
    pub fn monomial(degree: usize, step: usize, slot: usize, c: BigCoeff) -> Self {
        let mut p = Self::zero(degree, step);
        p.coeffs[slot] = c;
        p
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn step(&self) -> usize {
        self.step
    }

    pub fn coeffs(&self) -> &[BigCoeff] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigCoeff> {
        self.coeffs
    }

    /// Highest lattice slot, `degree / step`.
    pub fn top_slot(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn slot(&self, k: usize) -> Option<&BigCoeff> {
        self.coeffs.get(k)
    }

    /// Y-exponent (weight) of slot `k`.
    pub fn weight_of(&self, k: usize) -> usize {
        self.step * k
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Index of the lowest nonzero slot.
    pub fn first_nonzero_slot(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Terms as `(weight, coefficient)` pairs, nonzero only.
    pub fn nonzero_terms(&self) -> impl Iterator<Item = (usize, &BigCoeff)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(k, c)| (k * self.step, c))
    }

    pub fn scale(&self, c: &BigCoeff) -> Self {
        Self {
            degree: self.degree,
            step: self.step,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }
}

impl fmt::Debug for StepPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "StepPoly(deg={}, step={}, [", self.degree, self.step)?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("])")
    }
}

impl fmt::Display for StepPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let ye = self.step * k;
            let xe = self.degree - ye;
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            first = false;
            let bare = xe == 0 && ye == 0;
            if !mag.is_one() || bare {
                write!(f, "{mag}")?;
            }
            match xe {
                0 => {}
                1 => f.write_str("X")?,
                e => write!(f, "X^{e}")?,
            }
            match ye {
                0 => {}
                1 => f.write_str("Y")?,
                e => write!(f, "Y^{e}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

pub fn poly_mul(p: &StepPoly, r: &StepPoly) -> Result<StepPoly, PolyError> {
    if p.step != r.step {
        return Err(PolyError::StepMismatch(p.step, r.step));
    }
    let degree = p.degree + r.degree;
    let mut out = vec![BigInt::zero(); degree / p.step + 1];
    // Iterate the shorter operand outermost; generators are short.
    let (long, short) = if p.coeffs.len() >= r.coeffs.len() {
        (p, r)
    } else {
        (r, p)
    };
    for (i, s) in short.coeffs.iter().enumerate() {
        if s.is_zero() {
            continue;
        }
        for (k, l) in long.coeffs.iter().enumerate() {
            if !l.is_zero() {
                out[i + k] += s * l;
            }
        }
    }
    Ok(StepPoly {
        degree,
        step: p.step,
        coeffs: out,
    })
}

pub fn poly_pow(p: &StepPoly, e: usize) -> StepPoly {
    let mut acc = StepPoly::one(p.step);
    for _ in 0..e {
        acc = poly_mul(&acc, p).expect("same step");
    }
    acc
}

/// `p + c * r`, slotwise.
pub fn poly_add_scaled(p: &StepPoly, c: &BigCoeff, r: &StepPoly) -> Result<StepPoly, PolyError> {
    let mut out = p.clone();
    add_scaled_in_place(&mut out, c, r)?;
    Ok(out)
}

/// In-place form of [`poly_add_scaled`].
pub fn add_scaled_in_place(
    acc: &mut StepPoly,
    c: &BigCoeff,
    r: &StepPoly,
) -> Result<(), PolyError> {
    if acc.step != r.step {
        return Err(PolyError::StepMismatch(acc.step, r.step));
    }
    if acc.degree != r.degree {
        return Err(PolyError::DegreeMismatch(acc.degree, r.degree));
    }
    if c.is_zero() {
        return Ok(());
    }
    for (a, b) in acc.coeffs.iter_mut().zip(&r.coeffs) {
        if !b.is_zero() {
            *a += c * b;
        }
    }
    Ok(())
}

/// Exact quotient `p / d` for a divisor whose slot 0 is +1 or -1.
///
/// Runs as a power-series division in the slot index and then checks that
/// the remainder vanishes.
pub fn poly_div_exact(p: &StepPoly, d: &StepPoly) -> Result<StepPoly, PolyError> {
    if p.step != d.step {
        return Err(PolyError::StepMismatch(p.step, d.step));
    }
    if d.degree > p.degree {
        return Err(PolyError::Inexact);
    }
    let lead = &d.coeffs[0];
    let lead_sign = if lead.is_one() {
        false
    } else if (-lead).is_one() {
        true
    } else {
        return Err(PolyError::DivisorNotUnit);
    };
    let degree = p.degree - d.degree;
    let qlen = degree / p.step + 1;
    let mut q: Vec<BigInt> = Vec::with_capacity(qlen);
    for k in 0..qlen {
        let mut v = p.coeffs[k].clone();
        for l in 1..d.coeffs.len().min(k + 1) {
            let dl = &d.coeffs[l];
            if !dl.is_zero() {
                v -= dl * &q[k - l];
            }
        }
        if lead_sign {
            v = -v;
        }
        q.push(v);
    }
    let quotient = StepPoly {
        degree,
        step: p.step,
        coeffs: q,
    };
    if poly_mul(&quotient, d)? != *p {
        return Err(PolyError::Inexact);
    }
    Ok(quotient)
}

/// Step-1 view of the same polynomial.
pub fn densify(p: &StepPoly) -> StepPoly {
    let mut out = vec![BigInt::zero(); p.degree + 1];
    for (k, c) in p.coeffs.iter().enumerate() {
        out[k * p.step] = c.clone();
    }
    StepPoly {
        degree: p.degree,
        step: 1,
        coeffs: out,
    }
}

/// Re-lattice a step-1 polynomial to step `w`, failing if any term is off
/// the lattice.
pub fn sparsify(p: &StepPoly, w: usize) -> Option<StepPoly> {
    if p.step != 1 || w == 0 {
        return None;
    }
    let mut out = Vec::with_capacity(p.degree / w + 1);
    for (j, c) in p.coeffs.iter().enumerate() {
        if j % w == 0 {
            out.push(c.clone());
        } else if !c.is_zero() {
            return None;
        }
    }
    Some(StepPoly {
        degree: p.degree,
        step: w,
        coeffs: out,
    })
}

/// `P(X + (q-1)Y, X - Y)` for a step-1 polynomial of even degree.
///
/// Evaluated by homogeneous Horner: `S <- S*(X+(q-1)Y) + c_j (X-Y)^j`,
/// carrying `(X-Y)^j` along, so the cost is quadratic in the degree.
pub fn macwilliams_transform(p: &StepPoly, q: u32) -> Result<StepPoly, PolyError> {
    if p.step != 1 {
        return Err(PolyError::NotDense(p.step));
    }
    if p.degree % 2 != 0 {
        return Err(PolyError::OddDegree(p.degree));
    }
    let n = p.degree;
    let qm1 = BigInt::from(q) - 1;
    // acc has degree j after step j; vpow = (X - Y)^j.
    let mut acc: Vec<BigInt> = vec![p.coeffs[0].clone()];
    let mut vpow: Vec<BigInt> = vec![BigInt::one()];
    for j in 1..=n {
        // acc *= (X + (q-1)Y)
        let mut next = vec![BigInt::zero(); j + 1];
        for (i, a) in acc.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            next[i] += a;
            next[i + 1] += a * &qm1;
        }
        // vpow *= (X - Y)
        let mut vnext = vec![BigInt::zero(); j + 1];
        for (i, v) in vpow.iter().enumerate() {
            vnext[i] += v;
            vnext[i + 1] -= v;
        }
        vpow = vnext;
        let c = &p.coeffs[j];
        if !c.is_zero() {
            for (t, v) in next.iter_mut().zip(&vpow) {
                *t += c * v;
            }
        }
        acc = next;
    }
    Ok(StepPoly {
        degree: n,
        step: 1,
        coeffs: acc,
    })
}

/// `P(1, 1)`, the sum of all coefficients.
pub fn eval_at_ones(p: &StepPoly) -> BigCoeff {
    p.coeffs.iter().sum()
}
