//! The symplectic side of the moduli problem: moment map for the compact
//! gauge torus, its pairing with the Kähler form, and a Newton solver that
//! flows a constellation along its complexified gauge orbit to the level set
//! μ = ζ_θ — or certifies that no such point exists.
//!
//! The compact group U(1)^r acts by phases on arrow values; its
//! complexification (ℂ*)^r acts through real parameters x ∈ ℝ^r (summing to
//! zero) as b_α(k) ↦ e^{x_{k+w_α}−x_k} b_α(k).  Restricted to one orbit, the
//! problem becomes a smooth convex minimization on ℝ^r/ℝ·(1,…,1) whose
//! gradient is exactly μ − ζ_θ, so a solution is a zero of the gradient and a
//! destabilizing subset shows up as a direction of unbounded descent.

use crate::group::Rational;
use crate::quiver::{Constellation, QuiverError, StabilityParam, VertexSet, is_invariant};
use num_complex::Complex64;
use thiserror::Error;

/// Errors from the orbit solver.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum KempfNessError {
    /// Input validation failures shared with the representation layer.
    #[error(transparent)]
    Quiver(#[from] QuiverError),
    /// The iteration neither converged nor produced a certificate.
    #[error("no moment-map solution within {iterations} iterations; residual {residual:.3e}")]
    MaxIterExceeded { iterations: usize, residual: f64 },
}

/// μ_k = ½(Σ_incoming |b|² − Σ_outgoing |b|²) per vertex; the vertex-wise
/// moment map of the U(1)^r action for ω(B,C) = Im Σ_a b_a c̄_a.
pub fn moment_map(b: &Constellation) -> Vec<f64> {
    let g = b.group();
    let mut mu = vec![0.0; g.order()];
    for a in b.arrows() {
        let half_sq = 0.5 * b.get(a.tail, a.flavor).norm_sqr();
        mu[a.head(g)] += half_sq;
        mu[a.tail] -= half_sq;
    }
    mu
}

/// The central level ζ_θ: θ read pointwise as a vertex vector.
pub fn zeta_of_theta(theta: &StabilityParam) -> Vec<f64> {
    theta.to_floats()
}

/// Acts by the real one-parameter subgroup x: b_α(k) ↦ e^{x_{k+w_α}−x_k} b_α(k).
pub fn gauge_act(x: &[f64], b: &Constellation) -> Constellation {
    let g = b.group();
    let mut out = b.clone();
    for a in b.arrows() {
        let scale = (x[a.head(g)] - x[a.tail]).exp();
        out.set(a.tail, a.flavor, scale * b.get(a.tail, a.flavor));
    }
    out
}

/// The vector field of ξ = i·diag(t) ∈ u(1)^r at B: arrow (k,α) carries
/// i(t_{k+w_α} − t_k)·b_α(k).
pub fn infinitesimal_gauge(t: &[f64], b: &Constellation) -> Constellation {
    let g = b.group();
    let mut out = b.clone();
    for a in b.arrows() {
        let speed = t[a.head(g)] - t[a.tail];
        out.set(
            a.tail,
            a.flavor,
            Complex64::new(0.0, speed) * b.get(a.tail, a.flavor),
        );
    }
    out
}

/// ω(B,C) = Im Σ_a b_a c̄_a, the Kähler form on the space of arrow values.
pub fn kahler_form(b: &Constellation, c: &Constellation) -> f64 {
    b.values()
        .iter()
        .zip(c.values())
        .map(|(x, y)| (x * y.conj()).im)
        .sum()
}

/// ⟨μ, ξ⟩ = Σ_k μ_k t_k for ξ = i·diag(t).
pub fn moment_pairing(mu: &[f64], t: &[f64]) -> f64 {
    mu.iter().zip(t).map(|(m, v)| m * v).sum()
}

/// The orbit functional f(x) = ¼ Σ_a |b_a|² e^{2(x_h − x_t)} − Σ_k θ_k x_k,
/// whose gradient is μ(x·B) − ζ_θ.
pub fn kn_functional(x: &[f64], b: &Constellation, theta: &StabilityParam) -> f64 {
    let g = b.group();
    let zeta = theta.to_floats();
    let mut f = 0.0;
    for a in b.arrows() {
        let delta = x[a.head(g)] - x[a.tail];
        f += 0.25 * b.get(a.tail, a.flavor).norm_sqr() * (2.0 * delta).exp();
    }
    for (k, z) in zeta.iter().enumerate() {
        f -= z * x[k];
    }
    f
}

/// ∇f(x) = μ(gauge_act(x, B)) − ζ_θ, computed literally in that form.
pub fn kn_gradient(x: &[f64], b: &Constellation, theta: &StabilityParam) -> Vec<f64> {
    let mu = moment_map(&gauge_act(x, b));
    let zeta = theta.to_floats();
    mu.iter().zip(&zeta).map(|(m, z)| m - z).collect()
}

/// ∇²f(x) = Σ_a |b'_a|² (e_h − e_t)(e_h − e_t)ᵀ, the graph Laplacian of the
/// gauged arrow weights; always singular along (1,…,1).
pub fn kn_hessian(x: &[f64], b: &Constellation) -> Vec<Vec<f64>> {
    let g = b.group();
    let r = g.order();
    let gauged = gauge_act(x, b);
    let mut h = vec![vec![0.0; r]; r];
    for a in gauged.arrows() {
        let w = gauged.get(a.tail, a.flavor).norm_sqr();
        let (head, tail) = (a.head(g), a.tail);
        h[head][head] += w;
        h[tail][tail] += w;
        h[head][tail] -= w;
        h[tail][head] -= w;
    }
    h
}

/// Solver knobs with the documented defaults.
#[derive(Debug, Clone)]
pub struct SolverConfig {
    /// Convergence threshold on ‖μ − ζ_θ‖∞.
    pub tol: f64,
    /// Iteration budget before giving up.
    pub max_iter: usize,
    /// ‖x‖∞ beyond which a destabilizing subset is extracted.
    pub divergence: f64,
    /// Line-search shrink factor in (0,1).
    pub backtrack: f64,
    /// Record the residual after every iteration.
    pub record_history: bool,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            tol: 1e-10,
            max_iter: 500,
            divergence: 50.0,
            backtrack: 0.5,
            record_history: false,
        }
    }
}

/// Result of flowing one orbit to the moment-map level set.
#[derive(Debug, Clone, PartialEq)]
pub enum SolveOutcome {
    /// A gauge parameter x with ‖μ(x·B) − ζ_θ‖∞ ≤ tol.
    Solved {
        /// The solving gauge parameter, mean-centered.
        x: Vec<f64>,
        /// Final ‖μ − ζ_θ‖∞.
        residual: f64,
        /// Iterations used.
        iterations: usize,
        /// Residual per iteration when history recording was on.
        history: Vec<f64>,
    },
    /// The flow diverged; the low side of the gauge parameter is an invariant
    /// subset with θ(S) ≤ 0, certifying non-stability.
    Unstable {
        /// The destabilizing vertex subset.
        certificate: VertexSet,
        /// θ(certificate), exactly.
        theta_value: Rational,
        /// Iterations before divergence.
        iterations: usize,
    },
}

fn linf(v: &[f64]) -> f64 {
    // A NaN component (overflowed gauge exponentials cancel to ∞ − ∞) must
    // read as an infinite residual, never as zero: f64::max ignores NaN.
    v.iter().fold(0.0, |m, &x| {
        if x.is_nan() {
            f64::INFINITY
        } else {
            m.max(x.abs())
        }
    })
}

fn mean_center(v: &mut [f64]) {
    let mean = v.iter().sum::<f64>() / v.len() as f64;
    for x in v.iter_mut() {
        *x -= mean;
    }
}

fn cholesky(a: &[Vec<f64>]) -> Option<Vec<Vec<f64>>> {
    let n = a.len();
    let mut l = vec![vec![0.0; n]; n];
    for i in 0..n {
        for j in 0..=i {
            let mut sum = a[i][j];
            for k in 0..j {
                sum -= l[i][k] * l[j][k];
            }
            if i == j {
                if sum <= 1e-12 * (1.0 + a[i][i].abs()) {
                    return None;
                }
                l[i][i] = sum.sqrt();
            } else {
                l[i][j] = sum / l[j][j];
            }
        }
    }
    Some(l)
}

fn cholesky_solve(a: &[Vec<f64>], rhs: &[f64]) -> Option<Vec<f64>> {
    let l = cholesky(a)?;
    let n = rhs.len();
    let mut y = vec![0.0; n];
    for i in 0..n {
        let mut sum = rhs[i];
        for k in 0..i {
            sum -= l[i][k] * y[k];
        }
        y[i] = sum / l[i][i];
    }
    let mut x = vec![0.0; n];
    for i in (0..n).rev() {
        let mut sum = y[i];
        for k in i + 1..n {
            sum -= l[k][i] * x[k];
        }
        x[i] = sum / l[i][i];
    }
    Some(x)
}

/// Splits the sorted gauge parameter at its largest gaps and returns the first
/// low side that is invariant with θ(S) ≤ 0.
fn divergence_certificate(
    b: &Constellation,
    theta: &StabilityParam,
    x: &[f64],
    support_tol: f64,
) -> Option<(VertexSet, Rational)> {
    let r = x.len();
    let mut order: Vec<usize> = (0..r).collect();
    order.sort_by(|&i, &j| x[i].partial_cmp(&x[j]).unwrap());
    let mut splits: Vec<usize> = (1..r).collect();
    splits.sort_by(|&p, &q| {
        let gap_p = x[order[p]] - x[order[p - 1]];
        let gap_q = x[order[q]] - x[order[q - 1]];
        gap_q.partial_cmp(&gap_p).unwrap()
    });
    for p in splits {
        let s = VertexSet::from_vertices(&order[..p]);
        if !s.is_proper_nonempty(r) {
            continue;
        }
        if !is_invariant(b, s, support_tol) {
            continue;
        }
        let value = theta.eval(s);
        if value <= Rational::from_integer(0.into()) {
            return Some((s, value));
        }
    }
    None
}

/// Damped Newton descent on the orbit functional.  Returns the solving gauge
/// parameter, or a destabilizing subset when the flow runs off to infinity.
pub fn kempf_ness_solve(
    b: &Constellation,
    theta: &StabilityParam,
    config: &SolverConfig,
) -> Result<SolveOutcome, KempfNessError> {
    let r = b.group().order();
    if theta.len() != r {
        return Err(QuiverError::ThetaLengthMismatch {
            expected: r,
            got: theta.len(),
        }
        .into());
    }
    let zeta = theta.to_floats();
    let support_tol = b.support_tolerance();
    let mut x = vec![0.0; r];
    let mut divergence = config.divergence;
    let mut history = Vec::new();
    let mut iter = 0;
    loop {
        let gauged = gauge_act(&x, b);
        let g: Vec<f64> = moment_map(&gauged)
            .iter()
            .zip(&zeta)
            .map(|(m, z)| m - z)
            .collect();
        let residual = linf(&g);
        if config.record_history {
            history.push(residual);
        }
        if residual <= config.tol {
            return Ok(SolveOutcome::Solved {
                x,
                residual,
                iterations: iter,
                history,
            });
        }
        if linf(&x) > divergence {
            if let Some((certificate, theta_value)) =
                divergence_certificate(b, theta, &x, support_tol)
            {
                return Ok(SolveOutcome::Unstable {
                    certificate,
                    theta_value,
                    iterations: iter,
                });
            }
            divergence *= 2.0;
        }
        if iter >= config.max_iter {
            return Err(KempfNessError::MaxIterExceeded {
                iterations: iter,
                residual,
            });
        }
        iter += 1;

        let mut ghat = g.clone();
        mean_center(&mut ghat);
        let hess = kn_hessian(&x, b);
        let trace: f64 = (0..r).map(|i| hess[i][i]).sum();
        let shift = 1.0 + trace / r as f64;
        let mut lhs = hess;
        for row in lhs.iter_mut() {
            for entry in row.iter_mut() {
                *entry += shift / r as f64;
            }
        }
        let rhs: Vec<f64> = ghat.iter().map(|v| -v).collect();
        let newton = cholesky_solve(&lhs, &rhs);
        let f0 = kn_functional(&x, b, theta);
        let mut moved = false;
        let gradient_dir: Vec<f64> = ghat.iter().map(|v| -v).collect();
        let residual_at = |y: &[f64]| {
            let mu = moment_map(&gauge_act(y, b));
            linf(
                &mu.iter()
                    .zip(&zeta)
                    .map(|(m, z)| m - z)
                    .collect::<Vec<f64>>(),
            )
        };
        for d in [newton.as_deref(), Some(&gradient_dir[..])]
            .into_iter()
            .flatten()
        {
            let slope: f64 = g.iter().zip(d).map(|(a, v)| a * v).sum();
            if slope >= 0.0 {
                continue;
            }
            let mut step = 1.0;
            while step > 1e-16 {
                let trial: Vec<f64> = x.iter().zip(d).map(|(a, v)| a + step * v).collect();
                // Near the minimum the functional's decrease drops below its
                // own rounding noise while the gradient keeps contracting, so
                // a shrinking residual also accepts the step.
                let sufficient_decrease =
                    kn_functional(&trial, b, theta) <= f0 + 1e-4 * step * slope;
                if sufficient_decrease || residual_at(&trial) < residual {
                    x = trial;
                    mean_center(&mut x);
                    moved = true;
                    break;
                }
                step *= config.backtrack;
            }
            if moved {
                break;
            }
        }
        if !moved {
            // Fully stalled line searches leave x unchanged; the iteration
            // budget then converts the stall into an honest error.
        }
    }
}
