//! Exterior-power decomposition multiplicities and the McKay-quiver matrix C̃.
//!
//! Tensoring an irreducible ρ with the virtual representation
//! Σᵢ (−1)^i Λ^iℂ³ defines integers c_{ρσ} = Σᵢ (−1)^i a^{(i)}_{ρσ}.  For a
//! cyclic group all irreducibles are one-dimensional, so the multiplicities
//! are plain weight counts: a^{(i)}_{ρσ} = #{weights u of Λ^iℂ³ : σ ≡ ρ + u}.
//! C̃ collects the c_{ρσ} over all irreducibles, C deletes the trivial row and
//! column, and C⁻¹ is computed exactly over the integers.

use crate::group::{GroupAction, Rational};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

/// Errors from exterior-power indexing and exact inversion.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MckayError {
    /// Exterior powers of ℂ³ exist only for i ∈ {0,1,2,3}.
    #[error("exterior power index {0} is out of range; Λ^iℂ³ needs 0 ≤ i ≤ 3")]
    IndexOutOfRange(u8),
    /// The matrix has no inverse over ℚ.
    #[error("matrix is singular over the rationals")]
    SingularMatrix,
}

/// The matrix C̃ over all irreducibles, its principal submatrix C with the
/// trivial representation deleted, and the exact inverse C⁻¹.
///
/// Rows and columns are indexed by irreducible characters 0,1,…,r−1 in that
/// order; `reduced` and `inverse` drop index 0 and keep 1,…,r−1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MckayMatrix {
    /// r×r matrix of c_{ρσ} over all irreducibles.
    pub full: Vec<Vec<i64>>,
    /// (r−1)×(r−1) principal submatrix with the trivial row and column erased.
    pub reduced: Vec<Vec<i64>>,
    /// Exact rational inverse of `reduced`.
    pub inverse: Vec<Vec<Rational>>,
    /// Determinant of `reduced` (nonzero by construction).
    pub determinant: BigInt,
}

/// Weights of Λ^iℂ³ as characters of G, sorted: {0}, {w₁,w₂,w₃},
/// {w₁+w₂, w₁+w₃, w₂+w₃} and {w₁+w₂+w₃} ≡ {0} for i = 0,1,2,3.
pub fn exterior_weights(g: &GroupAction, i: u8) -> Result<Vec<usize>, MckayError> {
    let r = g.order();
    let [w1, w2, w3] = g.weights();
    let mut ws = match i {
        0 => vec![0],
        1 => vec![w1, w2, w3],
        2 => vec![(w1 + w2) % r, (w1 + w3) % r, (w2 + w3) % r],
        3 => vec![(w1 + w2 + w3) % r],
        _ => return Err(MckayError::IndexOutOfRange(i)),
    };
    ws.sort_unstable();
    Ok(ws)
}

/// Multiplicity a^{(i)}_{ρσ} of σ in Λ^iℂ³ ⊗ ρ: the number of weights u of
/// Λ^iℂ³ with σ ≡ ρ + u (mod r).  Indices ρ, σ are reduced mod r.
pub fn multiplicity(g: &GroupAction, i: u8, rho: i64, sigma: i64) -> Result<usize, MckayError> {
    let r = g.order();
    let rho = g.reduce(rho);
    let sigma = g.reduce(sigma);
    let count = exterior_weights(g, i)?
        .into_iter()
        .filter(|&u| (rho + u) % r == sigma)
        .count();
    Ok(count)
}

/// Assembles C̃, C and the exact inverse C⁻¹ for a validated group.
///
/// `SingularMatrix` cannot occur for a valid group; surfacing it instead of
/// panicking keeps the invertibility claim an observable fact rather than an
/// assumption.
pub fn cartan_matrices(g: &GroupAction) -> Result<MckayMatrix, MckayError> {
    let r = g.order();
    let mut full = vec![vec![0i64; r]; r];
    for rho in 0..r {
        for sigma in 0..r {
            let mut c = 0i64;
            for i in 0..=3u8 {
                let sign = if i % 2 == 0 { 1 } else { -1 };
                c += sign * multiplicity(g, i, rho as i64, sigma as i64)? as i64;
            }
            full[rho][sigma] = c;
        }
    }
    let reduced: Vec<Vec<i64>> = (1..r)
        .map(|rho| (1..r).map(|sigma| full[rho][sigma]).collect())
        .collect();
    let as_big: Vec<Vec<BigInt>> = reduced
        .iter()
        .map(|row| row.iter().map(|&e| BigInt::from(e)).collect())
        .collect();
    let (inverse, determinant) = invert_integer_matrix(&as_big)?;
    Ok(MckayMatrix {
        full,
        reduced,
        inverse,
        determinant,
    })
}

/// Exact inverse and determinant of a square integer matrix by fraction-free
/// (Bareiss-style) Gauss–Jordan elimination on [A | I].
///
/// Every intermediate division is exact over ℤ, so no rounding enters; the
/// determinant falls out of the final pivot.  Returns `SingularMatrix` when no
/// nonzero pivot can be found in some column.
pub fn invert_integer_matrix(
    matrix: &[Vec<BigInt>],
) -> Result<(Vec<Vec<Rational>>, BigInt), MckayError> {
    let n = matrix.len();
    assert!(n > 0, "cannot invert an empty matrix");
    assert!(
        matrix.iter().all(|row| row.len() == n),
        "matrix must be square"
    );
    // Work on the augmented block [A | I].
    let mut m: Vec<Vec<BigInt>> = matrix
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut aug = row.clone();
            aug.extend((0..n).map(|j| {
                if i == j {
                    BigInt::one()
                } else {
                    BigInt::zero()
                }
            }));
            aug
        })
        .collect();
    let mut sign = 1i8;
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            let swap = (k + 1..n).find(|&i| !m[i][k].is_zero());
            match swap {
                Some(i) => {
                    m.swap(k, i);
                    sign = -sign;
                }
                None => return Err(MckayError::SingularMatrix),
            }
        }
        let pivot = m[k][k].clone();
        for i in 0..n {
            if i == k {
                continue;
            }
            let factor = m[i][k].clone();
            for j in 0..2 * n {
                let num = &pivot * &m[i][j] - &factor * &m[k][j];
                let (q, rem) = num.div_rem(&prev);
                assert!(rem.is_zero(), "fraction-free elimination divided inexactly");
                m[i][j] = q;
            }
        }
        prev = pivot;
    }
    // After full elimination every diagonal entry equals the (signed)
    // determinant, and row i of the right block is that multiple of row i of
    // the inverse.
    let inverse: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| Rational::new(m[i][n + j].clone(), m[i][i].clone()))
                .collect()
        })
        .collect();
    let mut det = m[n - 1][n - 1].clone();
    if sign < 0 {
        det = -det;
    }
    Ok((inverse, det))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn group(r: usize, w: [i64; 3]) -> GroupAction {
        GroupAction::new(r, w[0], w[1], w[2]).unwrap()
    }

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn all_valid_groups(max_r: usize) -> Vec<GroupAction> {
        let mut out = Vec::new();
        for r in 2..=max_r {
            for w1 in 1..r as i64 {
                for w2 in 1..r as i64 {
                    for w3 in 1..r as i64 {
                        if let Ok(g) = GroupAction::new(r, w1, w2, w3) {
                            out.push(g);
                        }
                    }
                }
            }
        }
        out
    }

    #[test]
    fn exterior_weights_follow_the_wedge_powers() {
        let g = group(3, [1, 1, 1]);
        assert_eq!(exterior_weights(&g, 0).unwrap(), vec![0]);
        assert_eq!(exterior_weights(&g, 1).unwrap(), vec![1, 1, 1]);
        assert_eq!(exterior_weights(&g, 2).unwrap(), vec![2, 2, 2]);
        assert_eq!(exterior_weights(&g, 3).unwrap(), vec![0]);

        let g = group(7, [1, 2, 4]);
        assert_eq!(exterior_weights(&g, 2).unwrap(), vec![3, 5, 6]);
        assert_eq!(exterior_weights(&g, 3).unwrap(), vec![0]);
        assert_eq!(exterior_weights(&g, 4), Err(MckayError::IndexOutOfRange(4)));
    }

    #[test]
    fn multiplicities_count_matching_weights() {
        let g = group(3, [1, 1, 1]);
        assert_eq!(multiplicity(&g, 1, 0, 1).unwrap(), 3);
        for k in 0..3 {
            assert_eq!(multiplicity(&g, 0, k, k).unwrap(), 1);
        }
        let g = group(7, [1, 2, 4]);
        assert_eq!(multiplicity(&g, 1, 0, 3).unwrap(), 0);
        assert_eq!(multiplicity(&g, 1, 0, 2).unwrap(), 1);
        // Indices reduce mod r.
        assert_eq!(multiplicity(&g, 1, 7, 9).unwrap(), 1);
    }

    #[test]
    fn one_third_matrices_match_hand_counts() {
        let m = cartan_matrices(&group(3, [1, 1, 1])).unwrap();
        assert_eq!(m.full, vec![vec![0, -3, 3], vec![3, 0, -3], vec![-3, 3, 0]]);
        assert_eq!(m.reduced, vec![vec![0, -3], vec![3, 0]]);
        assert_eq!(
            m.inverse,
            vec![
                vec![Rational::zero(), rat(1, 3)],
                vec![rat(-1, 3), Rational::zero()],
            ]
        );
        assert_eq!(m.determinant.to_i64(), Some(9));
    }

    #[test]
    fn alternating_sum_matches_the_two_sided_weight_count() {
        // c_{ρσ} = #{i : σ ≡ ρ − wᵢ} − #{i : σ ≡ ρ + wᵢ}: the Λ⁰ and Λ³ terms
        // cancel and Λ² contributes the negated weights.
        for g in all_valid_groups(13) {
            let r = g.order();
            let m = cartan_matrices(&g).unwrap();
            for rho in 0..r {
                for sigma in 0..r {
                    let minus = g
                        .weights()
                        .iter()
                        .filter(|&&w| (rho + r - w) % r == sigma)
                        .count() as i64;
                    let plus = g
                        .weights()
                        .iter()
                        .filter(|&&w| (rho + w) % r == sigma)
                        .count() as i64;
                    assert_eq!(m.full[rho][sigma], minus - plus, "{g} at ({rho},{sigma})");
                }
            }
        }
    }

    #[test]
    fn rows_sum_to_zero_and_the_matrix_is_skew() {
        for g in [
            group(3, [1, 1, 1]),
            group(5, [1, 2, 2]),
            group(7, [1, 2, 4]),
        ] {
            let m = cartan_matrices(&g).unwrap();
            let r = g.order();
            for rho in 0..r {
                assert_eq!(m.full[rho].iter().sum::<i64>(), 0, "{g} row {rho}");
                for sigma in 0..r {
                    assert_eq!(m.full[rho][sigma], -m.full[sigma][rho]);
                }
            }
        }
    }

    #[test]
    fn inverse_times_matrix_is_the_identity_exactly() {
        for g in [
            group(5, [1, 1, 3]),
            group(7, [1, 3, 3]),
            group(11, [1, 2, 8]),
        ] {
            let m = cartan_matrices(&g).unwrap();
            let n = g.order() - 1;
            for i in 0..n {
                for j in 0..n {
                    let mut acc = Rational::zero();
                    for k in 0..n {
                        acc += rat(m.reduced[i][k], 1) * &m.inverse[k][j];
                    }
                    let expect = if i == j {
                        Rational::one()
                    } else {
                        Rational::zero()
                    };
                    assert_eq!(acc, expect, "{g} at ({i},{j})");
                }
            }
            assert!(!m.determinant.is_zero());
        }
    }

    #[test]
    fn singular_input_is_reported_not_inverted() {
        let singular: Vec<Vec<BigInt>> = vec![
            vec![BigInt::from(1), BigInt::from(2)],
            vec![BigInt::from(2), BigInt::from(4)],
        ];
        assert_eq!(
            invert_integer_matrix(&singular),
            Err(MckayError::SingularMatrix)
        );
    }

    #[test]
    fn inversion_handles_pivot_swaps_and_diagonals() {
        // A permutation matrix forces a row swap and has determinant −1.
        let perm: Vec<Vec<BigInt>> = vec![
            vec![BigInt::zero(), BigInt::one(), BigInt::zero()],
            vec![BigInt::one(), BigInt::zero(), BigInt::zero()],
            vec![BigInt::zero(), BigInt::zero(), BigInt::one()],
        ];
        let (inv, det) = invert_integer_matrix(&perm).unwrap();
        assert_eq!(det, BigInt::from(-1));
        assert_eq!(inv[0][1], Rational::one());
        assert_eq!(inv[1][0], Rational::one());
        assert_eq!(inv[2][2], Rational::one());
        assert_eq!(inv[0][0], Rational::zero());

        let diag: Vec<Vec<BigInt>> = vec![
            vec![BigInt::from(2), BigInt::zero()],
            vec![BigInt::zero(), BigInt::from(3)],
        ];
        let (inv, det) = invert_integer_matrix(&diag).unwrap();
        assert_eq!(det, BigInt::from(6));
        assert_eq!(inv[0][0], rat(1, 2));
        assert_eq!(inv[1][1], rat(1, 3));
    }
}
