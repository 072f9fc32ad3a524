//! Eta invariants of the twisted Dirac operator on the lens space at infinity.
//!
//! For a character χ of G = ℤ/r the invariant is the exact rational
//!
//! ```text
//! η = −(2/r) · Σ_{j=1}^{r−1} χ(g^j) / det(I − g^j),
//! det(I − g^j) = ∏_α (1 − ζ^{j·w_α}),
//! ```
//!
//! evaluated in ℚ(ζ_r) and certified rational at the end.  Since the character
//! of ρ ⊗ σ* is ζ^{(ρ−σ)j}, the whole r² table of pairs collapses to the r
//! values η_d indexed by the difference d = ρ − σ.

use crate::group::{CyclotomicNumber, GroupAction, Rational};
use num_complex::Complex64;
use thiserror::Error;

/// Correctness alarms from the exact evaluation; neither can occur for a
/// validated group and a genuine character.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EtaError {
    /// det(I − g^j) vanished; impossible when the action is free.
    #[error("det(I − g^{j}) = 0; the group element g^{j} has a fixed axis")]
    ZeroDenominator { j: usize },
    /// The character sum failed the rationality certificate; impossible for a
    /// genuine character of G.
    #[error("eta character sum is not rational: {value}")]
    NonRationalResult { value: String },
}

/// Exact eta invariants of one group, indexed by the character difference.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EtaTable {
    group: GroupAction,
    by_difference: Vec<Rational>,
}

impl EtaTable {
    /// The group the table belongs to.
    pub fn group(&self) -> &GroupAction {
        &self.group
    }

    /// η_d for all residues d = 0,…,r−1 in order.
    pub fn by_difference(&self) -> &[Rational] {
        &self.by_difference
    }

    /// η_{ρ−σ}, accepting any integers for ρ and σ.
    pub fn eta(&self, rho: i64, sigma: i64) -> &Rational {
        &self.by_difference[self.group.reduce(rho - sigma)]
    }

    /// The r×r matrix with entry (ρ,σ) = η_{ρ−σ}, indexed by all irreducibles.
    pub fn pair_view(&self) -> Vec<Vec<Rational>> {
        let r = self.group.order();
        (0..r)
            .map(|rho| {
                (0..r)
                    .map(|sigma| self.eta(rho as i64, sigma as i64).clone())
                    .collect()
            })
            .collect()
    }
}

/// Inverse denominators 1/det(I − g^j) for j = 1,…,r−1, exact in ℚ(ζ_r).
fn inverse_determinants(g: &GroupAction) -> Result<Vec<CyclotomicNumber>, EtaError> {
    let r = g.order();
    let one = CyclotomicNumber::one(r);
    let mut out = Vec::with_capacity(r - 1);
    for j in 1..r {
        let mut det = one.clone();
        for w in g.weights() {
            let factor = &one - &g.zeta_pow((j * w) as i64);
            det = &det * &factor;
        }
        if det.is_zero() {
            return Err(EtaError::ZeroDenominator { j });
        }
        // det ≠ 0 in a field, so the unwrap cannot fire.
        out.push(det.inv().expect("nonzero cyclotomic number is invertible"));
    }
    Ok(out)
}

fn certify(sum: CyclotomicNumber, scale: Rational) -> Result<Rational, EtaError> {
    match sum.is_rational() {
        Some(q) => Ok(q * scale),
        None => Err(EtaError::NonRationalResult {
            value: sum.to_string(),
        }),
    }
}

/// Exact eta invariant for an arbitrary character, supplied as j ↦ χ(g^j).
pub fn eta_invariant(
    g: &GroupAction,
    chi: impl Fn(usize) -> CyclotomicNumber,
) -> Result<Rational, EtaError> {
    let r = g.order();
    let inv = inverse_determinants(g)?;
    let mut sum = CyclotomicNumber::zero(r);
    for j in 1..r {
        sum = &sum + &(&chi(j) * &inv[j - 1]);
    }
    certify(sum, Rational::new((-2).into(), (r as i64).into()))
}

/// Tabulates η_d for every difference residue d, sharing the denominator
/// inversions across the whole table.
pub fn eta_table(g: &GroupAction) -> Result<EtaTable, EtaError> {
    let r = g.order();
    let inv = inverse_determinants(g)?;
    let scale = Rational::new((-2).into(), (r as i64).into());
    let mut by_difference = Vec::with_capacity(r);
    for d in 0..r {
        let mut sum = CyclotomicNumber::zero(r);
        for j in 1..r {
            sum = &sum + &(&g.zeta_pow((d * j) as i64) * &inv[j - 1]);
        }
        by_difference.push(certify(sum, scale.clone())?);
    }
    Ok(EtaTable {
        group: g.clone(),
        by_difference,
    })
}

/// Floating-point oracle: direct complex summation of the defining formula.
///
/// Test-only cross-check for the exact path; never feeds reported results.
pub fn eta_float(g: &GroupAction, d: i64) -> f64 {
    let r = g.order();
    let zeta = |e: f64| Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * e / r as f64);
    let mut sum = Complex64::new(0.0, 0.0);
    for j in 1..r {
        let mut det = Complex64::new(1.0, 0.0);
        for w in g.weights() {
            det *= Complex64::new(1.0, 0.0) - zeta((j * w) as f64);
        }
        sum += zeta((d * j as i64) as f64) / det;
    }
    -2.0 / r as f64 * sum.re
}
