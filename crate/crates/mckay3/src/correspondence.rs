//! Exact verification of the index-theoretic identity chain linking C̃ to the
//! eta invariants, and the predicted intersection matrix −C⁻¹.
//!
//! The central identity, checked with zero tolerance for every pair of
//! irreducibles τ, σ, is
//!
//! ```text
//! Σ_ρ c_{τρ} · η_{ρ−σ} = −2(δ_{τσ} − 1/r).
//! ```
//!
//! Feeding it back into the alternating character sums pins down the matrix of
//! reduced-Chern-character pairings as −C⁻¹ and shows C is invertible along
//! the way; the chain below replays each step as an exact rational check.

use crate::eta::{EtaError, EtaTable, eta_table};
use crate::group::{GroupAction, Rational, rational_to_string};
use crate::mckay::{MckayError, MckayMatrix, cartan_matrices};
use num_traits::{One, Zero};
use thiserror::Error;

/// Errors propagated from the eta and matrix layers.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CorrespondenceError {
    /// Eta evaluation failed one of its correctness alarms.
    #[error(transparent)]
    Eta(#[from] EtaError),
    /// Matrix assembly or inversion failed.
    #[error(transparent)]
    Mckay(#[from] MckayError),
}

/// One exact check: what was compared, whether it held, and the worst witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckRecord {
    /// Short machine-friendly name.
    pub name: String,
    /// Human-readable statement of the identity being checked.
    pub statement: String,
    /// Exact pass/fail.
    pub pass: bool,
    /// Left-hand value at the witness indices (or a summary).
    pub lhs: String,
    /// Right-hand value at the witness indices (or a summary).
    pub rhs: String,
    /// Indices of the first failing pair, when the check fails.
    pub witness: Option<String>,
}

/// Outcome of the full identity chain for one group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    /// The group under test.
    pub group: GroupAction,
    /// Every individual check, in chain order.
    pub checks: Vec<CheckRecord>,
    /// Conjunction of all checks.
    pub overall: bool,
}

/// The predicted intersection matrix M = −C⁻¹ on the nontrivial irreducibles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionPrediction {
    /// The group the prediction belongs to.
    pub group: GroupAction,
    /// (r−1)×(r−1) exact matrix, rows and columns indexed by irreducibles 1,…,r−1.
    pub matrix: Vec<Vec<Rational>>,
    /// What entry (ρ,σ) computes geometrically.
    pub interpretation: String,
}

fn delta(a: usize, b: usize) -> Rational {
    if a == b {
        Rational::one()
    } else {
        Rational::zero()
    }
}

/// Σ_ρ c_{τρ} η_{ρ−σ} for one pair (τ,σ).
fn weighted_eta_sum(m: &MckayMatrix, t: &EtaTable, tau: usize, sigma: usize) -> Rational {
    let r = t.group().order();
    let mut acc = Rational::zero();
    for rho in 0..r {
        acc += Rational::from(num_bigint::BigInt::from(m.full[tau][rho]))
            * t.eta(rho as i64, sigma as i64);
    }
    acc
}

/// Checks Σ_ρ c_{τρ} η_{ρ−σ} = −2(δ_{τσ} − 1/r) exactly over all τ, σ.
pub fn verify_index_identity(g: &GroupAction) -> Result<CheckRecord, CorrespondenceError> {
    let m = cartan_matrices(g)?;
    let t = eta_table(g)?;
    Ok(index_identity_check(g, &m, &t))
}

fn index_identity_check(g: &GroupAction, m: &MckayMatrix, t: &EtaTable) -> CheckRecord {
    let r = g.order();
    let inv_r = Rational::new(1.into(), (r as i64).into());
    let mut record = CheckRecord {
        name: "index-identity".to_string(),
        statement: "Σ_ρ c_{τρ} η_{ρ−σ} = −2(δ_{τσ} − 1/r) for all τ,σ".to_string(),
        pass: true,
        lhs: String::new(),
        rhs: String::new(),
        witness: None,
    };
    for tau in 0..r {
        for sigma in 0..r {
            let lhs = weighted_eta_sum(m, t, tau, sigma);
            let rhs = (delta(tau, sigma) - &inv_r) * Rational::new((-2).into(), 1.into());
            if lhs != rhs && record.pass {
                record.pass = false;
                record.lhs = rational_to_string(&lhs);
                record.rhs = rational_to_string(&rhs);
                record.witness = Some(format!("(τ,σ)=({tau},{sigma})"));
            }
        }
    }
    if record.pass {
        record.lhs = format!("all {} pairs", r * r);
        record.rhs = "exact".to_string();
    }
    record
}

/// Replays the identity chain exactly and reports each step.
///
/// The steps, for all τ, σ over the full set of irreducibles:
/// (index-identity) the weighted eta sum above;
/// (third-term-cancellation) (Σ_ρ c_{τρ}) · η_{−σ} = 0, the row-sum fact that
/// drops the constant eta term;
/// (delta-identity) m̂_{τσ} := ½[Σ_ρ c_{τρ}η_{ρ−σ} − Σ_ρ c_{τρ}η_ρ] equals
/// δ_{τρ₀} − δ_{τσ};
/// (inverse-consistency) the matrix M solved from the restriction of the
/// delta identity to nontrivial τ, σ satisfies C·M = −I and M = −C⁻¹ exactly.
pub fn verify_chain(g: &GroupAction) -> Result<VerificationReport, CorrespondenceError> {
    let r = g.order();
    let m = cartan_matrices(g)?;
    let t = eta_table(g)?;
    let mut checks = Vec::new();

    checks.push(index_identity_check(g, &m, &t));

    // Row sums of C̃ kill the constant term η_{σ*}: (Σ_ρ c_{τρ}) η_{−σ} = 0.
    let mut cancellation = CheckRecord {
        name: "third-term-cancellation".to_string(),
        statement: "(Σ_ρ c_{τρ}) · η_{−σ} = 0 for all τ,σ".to_string(),
        pass: true,
        lhs: String::new(),
        rhs: String::new(),
        witness: None,
    };
    for tau in 0..r {
        let row_sum: i64 = m.full[tau].iter().sum();
        for sigma in 0..r {
            let product =
                Rational::from(num_bigint::BigInt::from(row_sum)) * t.eta(-(sigma as i64), 0);
            if !product.is_zero() && cancellation.pass {
                cancellation.pass = false;
                cancellation.lhs = rational_to_string(&product);
                cancellation.rhs = "0/1".to_string();
                cancellation.witness = Some(format!("(τ,σ)=({tau},{sigma})"));
            }
        }
    }
    if cancellation.pass {
        cancellation.lhs = format!("all {} pairs", r * r);
        cancellation.rhs = "exact".to_string();
    }
    checks.push(cancellation);

    // m̂_{τσ} = ½[Σ_ρ c_{τρ}η_{ρ−σ} − Σ_ρ c_{τρ}η_ρ] = δ_{τρ₀} − δ_{τσ}.
    let half = Rational::new(1.into(), 2.into());
    let mut m_hat = vec![vec![Rational::zero(); r]; r];
    let mut delta_check = CheckRecord {
        name: "delta-identity".to_string(),
        statement: "½[Σ_ρ c_{τρ}η_{ρ−σ} − Σ_ρ c_{τρ}η_ρ] = δ_{τρ₀} − δ_{τσ} for all τ,σ"
            .to_string(),
        pass: true,
        lhs: String::new(),
        rhs: String::new(),
        witness: None,
    };
    for tau in 0..r {
        let eta_column = weighted_eta_sum(&m, &t, tau, 0);
        for sigma in 0..r {
            let value = (weighted_eta_sum(&m, &t, tau, sigma) - &eta_column) * &half;
            let expect = delta(tau, 0) - delta(tau, sigma);
            if value != expect && delta_check.pass {
                delta_check.pass = false;
                delta_check.lhs = rational_to_string(&value);
                delta_check.rhs = rational_to_string(&expect);
                delta_check.witness = Some(format!("(τ,σ)=({tau},{sigma})"));
            }
            m_hat[tau][sigma] = value;
        }
    }
    if delta_check.pass {
        delta_check.lhs = format!("all {} pairs", r * r);
        delta_check.rhs = "exact".to_string();
    }
    checks.push(delta_check);

    // Restricted to nontrivial indices the right-hand side is −I, so the
    // matrix M with C·M = (m̂_{τσ}) is exactly −C⁻¹.
    let mut inverse_check = CheckRecord {
        name: "inverse-consistency".to_string(),
        statement: "M solved from C·M = (m̂_{τσ})_{τ,σ≠0} equals −C⁻¹ and C·M = −I".to_string(),
        pass: true,
        lhs: String::new(),
        rhs: String::new(),
        witness: None,
    };
    let n = r - 1;
    // Solve column by column through the exact inverse: M = C⁻¹ · m̂.
    let mut solved = vec![vec![Rational::zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            let mut acc = Rational::zero();
            for k in 0..n {
                acc += &m.inverse[i][k] * &m_hat[k + 1][j + 1];
            }
            solved[i][j] = acc;
        }
    }
    'outer: for i in 0..n {
        for j in 0..n {
            let neg_inverse = -m.inverse[i][j].clone();
            if solved[i][j] != neg_inverse {
                inverse_check.pass = false;
                inverse_check.lhs = rational_to_string(&solved[i][j]);
                inverse_check.rhs = rational_to_string(&neg_inverse);
                inverse_check.witness = Some(format!("(ρ,σ)=({},{})", i + 1, j + 1));
                break 'outer;
            }
            // C·M = −I re-expanded from the solved matrix.
            let mut prod = Rational::zero();
            for k in 0..n {
                prod += Rational::from(num_bigint::BigInt::from(m.reduced[i][k])) * &solved[k][j];
            }
            let expect = -delta(i, j);
            if prod != expect {
                inverse_check.pass = false;
                inverse_check.lhs = rational_to_string(&prod);
                inverse_check.rhs = rational_to_string(&expect);
                inverse_check.witness = Some(format!("(C·M) at ({},{})", i + 1, j + 1));
                break 'outer;
            }
        }
    }
    if inverse_check.pass {
        inverse_check.lhs = format!("{n}×{n} matrix");
        inverse_check.rhs = "−C⁻¹".to_string();
    }
    checks.push(inverse_check);

    let overall = checks.iter().all(|c| c.pass);
    Ok(VerificationReport {
        group: g.clone(),
        checks,
        overall,
    })
}

/// The predicted intersection matrix M = −C⁻¹ with its geometric reading.
pub fn predicted_intersection_matrix(
    g: &GroupAction,
) -> Result<IntersectionPrediction, CorrespondenceError> {
    let m = cartan_matrices(g)?;
    let matrix: Vec<Vec<Rational>> = m
        .inverse
        .iter()
        .map(|row| row.iter().map(|e| -e.clone()).collect())
        .collect();
    Ok(IntersectionPrediction {
        group: g.clone(),
        matrix,
        interpretation: "entry (ρ,σ) predicts ∫ ch̃(𝓡_ρ)∧ch̃(𝓡_σ*) = \
                         ½∫ c₁(𝓡_ρ)²c₁(𝓡_σ) − c₁(𝓡_ρ)c₁(𝓡_σ)² on the crepant resolution"
            .to_string(),
    })
}
