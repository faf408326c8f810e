//! Twisted polynomials Σ cᵢτⁱ with τ·c = c^q·τ over multivariate coefficients.

mod drinfeld;
#[cfg(test)]
mod tests;

use std::fmt;

use thiserror::Error;

use crate::poly::{PolyError, Ring, SparsePoly};

pub use drinfeld::{
    commutation_constraints, eliminate_s, eliminate_s_both_orders, eliminate_t, find_isogeny_specialization,
    isogeny_system_s, isogeny_system_t, phi_s, phi_t, simplify_p3_identity, Constraints, DrinfeldRing,
    IdentityCheck, IsogenySpecialization,
};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SkewError {
    #[error("twist q = {q} is not a power of the characteristic {p}")]
    BadTwist { q: u64, p: u64 },
    #[error("skew polynomials with different twists {0} and {1}")]
    TwistMismatch(u64, u64),
    #[error("eliminated relation is not of the expected form: {0}")]
    EliminationMismatch(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

#[derive(Clone)]
pub struct SkewPoly<R: Ring> {
    q: u64,
    coeffs: Vec<SparsePoly<R>>,
}

fn is_power_of(q: u64, p: u64) -> bool {
    if p < 2 || q < p {
        return false;
    }
    let mut x = q;
    while x % p == 0 {
        x /= p;
    }
    x == 1
}

impl<R: Ring> SkewPoly<R> {
    /// Coefficients c₀…c_d of τ⁰…τ^d.
    pub fn new(q: u64, coeffs: Vec<SparsePoly<R>>) -> Result<Self, SkewError> {
        if let Some(c) = coeffs.first() {
            let p = c.ring().characteristic();
            if !is_power_of(q, p) {
                return Err(SkewError::BadTwist { q, p });
            }
        }
        let mut s = SkewPoly { q, coeffs };
        s.trim();
        Ok(s)
    }

    fn trim(&mut self) {
        while self.coeffs.last().map_or(false, SparsePoly::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn coeffs(&self) -> &[SparsePoly<R>] {
        &self.coeffs
    }

    /// τ-degree; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> Option<&SparsePoly<R>> {
        self.coeffs.get(i)
    }

    pub fn add(&self, other: &Self) -> Result<Self, SkewError> {
        if self.q != other.q {
            return Err(SkewError::TwistMismatch(self.q, other.q));
        }
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(match (self.coeffs.get(i), other.coeffs.get(i)) {
                (Some(a), Some(b)) => a.checked_add(b)?,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        let mut s = SkewPoly { q: self.q, coeffs: out };
        s.trim();
        Ok(s)
    }

    pub fn neg(&self) -> Self {
        SkewPoly { q: self.q, coeffs: self.coeffs.iter().map(SparsePoly::neg_poly).collect() }
    }

    pub fn sub(&self, other: &Self) -> Result<Self, SkewError> {
        self.add(&other.neg())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

/// (Σaᵢτⁱ)(Σbⱼτʲ) = Σ aᵢ·bⱼ^{qⁱ}·τ^{i+j}.
pub fn skew_mul<R: Ring>(a: &SkewPoly<R>, b: &SkewPoly<R>) -> Result<SkewPoly<R>, SkewError> {
    if a.q != b.q {
        return Err(SkewError::TwistMismatch(a.q, b.q));
    }
    if a.is_zero() || b.is_zero() {
        return Ok(SkewPoly { q: a.q, coeffs: Vec::new() });
    }
    let mut out: Vec<Option<SparsePoly<R>>> = vec![None; a.coeffs.len() + b.coeffs.len() - 1];
    let mut qi = 1u64;
    for (i, ai) in a.coeffs.iter().enumerate() {
        if !ai.is_zero() {
            for (j, bj) in b.coeffs.iter().enumerate() {
                if bj.is_zero() {
                    continue;
                }
                let term = ai.checked_mul(&bj.frobenius(qi))?;
                out[i + j] = Some(match out[i + j].take() {
                    Some(acc) => acc.checked_add(&term)?,
                    None => term,
                });
            }
        }
        qi = qi.checked_mul(a.q).expect("twist exponent overflow");
    }
    let zero = a.coeffs[0].scale(&a.coeffs[0].ring().zero());
    let mut s = SkewPoly { q: a.q, coeffs: out.into_iter().map(|c| c.unwrap_or_else(|| zero.clone())).collect() };
    s.trim();
    Ok(s)
}

impl<R: Ring> PartialEq for SkewPoly<R> {
    fn eq(&self, other: &Self) -> bool {
        self.q == other.q && self.coeffs == other.coeffs
    }
}

impl<R: Ring> fmt::Debug for SkewPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format!("({c})"),
                1 => format!("({c})τ"),
                _ => format!("({c})τ^{i}"),
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}
