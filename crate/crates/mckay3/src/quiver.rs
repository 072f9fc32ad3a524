//! G-constellations as McKay-quiver representations with dimension vector
//! (1,…,1): commutation relations, invariant vertex subsets, θ-(semi)stability
//! with witnesses, and torus-fixed-point enumeration.
//!
//! The McKay quiver of 1/r(w₁,w₂,w₃) has vertex set ℤ/r and, for each vertex k
//! and flavor α ∈ {1,2,3}, one arrow k → k+w_α carrying the value b_α(k).  The
//! relation locus is cut out by b_β(k+w_α)b_α(k) = b_α(k+w_β)b_β(k) for all k
//! and α < β.  Subrepresentations correspond to vertex subsets closed under
//! the arrows with nonzero values, which makes every stability question a
//! finite subset scan at this dimension vector.

use crate::group::{GroupAction, Rational, parse_rational, rational_to_string};
use num_complex::Complex64;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use std::fmt;
use thiserror::Error;

/// Exhaustive vertex-subset scans stop at this order (2^r cases).
pub const SUBSET_SCAN_LIMIT: usize = 13;
/// Exhaustive arrow-support scans stop at this order (2^{3r} cases).
pub const SUPPORT_SCAN_LIMIT: usize = 7;
/// Attempts before a zero pattern is declared infeasible.
const PATTERN_RETRIES: usize = 8;

/// Errors from stability parameters, generators, and fixed-point scans.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QuiverError {
    /// θ must pair to zero with the regular representation.
    #[error("stability parameters must sum to zero, got {sum}")]
    ThetaSumNonzero { sum: String },
    /// θ needs one value per irreducible.
    #[error("stability parameter has {got} entries but the group has {expected} irreducibles")]
    ThetaLengthMismatch { expected: usize, got: usize },
    /// θ must be nonempty.
    #[error("stability parameter is empty")]
    EmptyTheta,
    /// A θ literal could not be parsed.
    #[error("cannot parse stability literal {literal:?}; expected comma-separated rationals")]
    BadThetaLiteral { literal: String },
    /// θ pairs to zero with a proper subrepresentation.
    #[error("θ is not generic: θ(S) = 0 for the vertex subset S = {witness}")]
    NotGeneric { witness: VertexSet },
    /// The requested zero pattern is incompatible with the relations.
    #[error("zero pattern breaks the commutation relations; no constellation supports it")]
    PatternInfeasible,
    /// An arrow reference fell outside the quiver.
    #[error("arrow ({tail},{flavor}) is out of range for order {order}")]
    InvalidArrow {
        order: usize,
        tail: usize,
        flavor: usize,
    },
    /// The order exceeds a documented exhaustive-scan limit.
    #[error("order {order} exceeds the exhaustive-scan limit {limit}")]
    OrderTooLarge { order: usize, limit: usize },
}

/// A subset of the vertex set ℤ/r, stored as a bitmask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(pub u32);

impl VertexSet {
    /// The empty subset.
    pub const EMPTY: VertexSet = VertexSet(0);

    /// The full vertex set for order r.
    pub fn full(r: usize) -> VertexSet {
        VertexSet((1u32 << r) - 1)
    }

    /// Builds a subset from explicit vertices.
    pub fn from_vertices(vs: &[usize]) -> VertexSet {
        VertexSet(vs.iter().fold(0, |m, &v| m | 1 << v))
    }

    /// Membership test.
    pub fn contains(self, k: usize) -> bool {
        self.0 >> k & 1 == 1
    }

    /// Number of vertices in the subset.
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// True iff no vertex is present.
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// True iff the subset is all of ℤ/r.
    pub fn is_full(self, r: usize) -> bool {
        self == Self::full(r)
    }

    /// True iff the subset is neither empty nor everything.
    pub fn is_proper_nonempty(self, r: usize) -> bool {
        !self.is_empty() && !self.is_full(r)
    }

    /// Set union.
    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    /// Set intersection.
    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    /// Complement inside ℤ/r.
    pub fn complement(self, r: usize) -> VertexSet {
        VertexSet(!self.0 & Self::full(r).0)
    }

    /// Member vertices in increasing order.
    pub fn vertices(self) -> Vec<usize> {
        (0..32).filter(|&k| self.contains(k)).collect()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inner: Vec<String> = self.vertices().iter().map(|v| v.to_string()).collect();
        write!(f, "{{{}}}", inner.join(","))
    }
}

/// A rational stability parameter θ with θ(R) = Σ_k θ_k = 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilityParam {
    values: Vec<Rational>,
}

/// Whether θ avoids the walls θ(S) = 0, with a witness when it does not.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Genericity {
    /// θ(S) ≠ 0 for every proper nonempty subset.
    Generic,
    /// Some proper nonempty subset pairs to zero.
    Degenerate {
        /// A subset with θ(S) = 0.
        witness: VertexSet,
    },
}

impl StabilityParam {
    /// Validates Σθ = 0 and wraps the values.
    pub fn new(values: Vec<Rational>) -> Result<Self, QuiverError> {
        if values.is_empty() {
            return Err(QuiverError::EmptyTheta);
        }
        let sum: Rational = values.iter().sum();
        if !sum.is_zero() {
            return Err(QuiverError::ThetaSumNonzero {
                sum: rational_to_string(&sum),
            });
        }
        Ok(StabilityParam { values })
    }

    /// Parses a comma-separated rational literal such as "-2,1,1" or "−1/2,1/4,1/4".
    pub fn parse(s: &str) -> Result<Self, QuiverError> {
        let values: Result<Vec<Rational>, _> = s.split(',').map(parse_rational).collect();
        match values {
            Ok(v) if !v.is_empty() => StabilityParam::new(v),
            _ => Err(QuiverError::BadThetaLiteral {
                literal: s.to_string(),
            }),
        }
    }

    /// Number of vertices r the parameter lives on.
    pub fn len(&self) -> usize {
        self.values.len()
    }

    /// True iff the parameter has no entries (impossible after validation).
    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// The exact values θ₀,…,θ_{r−1}.
    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    /// θ(S) = Σ_{k∈S} θ_k.
    pub fn eval(&self, s: VertexSet) -> Rational {
        let mut acc = Rational::zero();
        for k in 0..self.values.len() {
            if s.contains(k) {
                acc += &self.values[k];
            }
        }
        acc
    }

    /// Values as floats, for the numeric layers.
    pub fn to_floats(&self) -> Vec<f64> {
        self.values
            .iter()
            .map(|q| q.to_f64().unwrap_or(f64::NAN))
            .collect()
    }

    /// Exhaustively decides whether θ(S) ≠ 0 for every proper nonempty subset.
    pub fn genericity(&self) -> Result<Genericity, QuiverError> {
        let r = self.values.len();
        if r > SUBSET_SCAN_LIMIT {
            return Err(QuiverError::OrderTooLarge {
                order: r,
                limit: SUBSET_SCAN_LIMIT,
            });
        }
        let sums = self.subset_sums();
        for s in 1..(1u32 << r) - 1 {
            if sums[s as usize].is_zero() {
                return Ok(Genericity::Degenerate {
                    witness: VertexSet(s),
                });
            }
        }
        Ok(Genericity::Generic)
    }

    /// Convenience boolean form of [`StabilityParam::genericity`].
    pub fn is_generic(&self) -> Result<bool, QuiverError> {
        Ok(matches!(self.genericity()?, Genericity::Generic))
    }

    /// θ(S) for every subset mask, built by peeling the lowest vertex.
    fn subset_sums(&self) -> Vec<Rational> {
        let r = self.values.len();
        let mut sums = vec![Rational::zero(); 1 << r];
        for s in 1..(1u32 << r) {
            let k = s.trailing_zeros() as usize;
            sums[s as usize] = &sums[(s & (s - 1)) as usize] + &self.values[k];
        }
        sums
    }
}

impl fmt::Display for StabilityParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(|q| q.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// One arrow (k, α): tail vertex k, flavor α ∈ {1,2,3}, head k + w_α.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Arrow {
    /// Tail vertex in ℤ/r.
    pub tail: usize,
    /// Flavor index 1, 2 or 3 selecting the weight w_α.
    pub flavor: usize,
}

impl Arrow {
    /// Head vertex k + w_α mod r.
    pub fn head(self, g: &GroupAction) -> usize {
        (self.tail + g.weights()[self.flavor - 1]) % g.order()
    }

    /// Flat index in flavor-major order.
    fn index(self, r: usize) -> usize {
        (self.flavor - 1) * r + self.tail
    }

    fn from_index(r: usize, idx: usize) -> Arrow {
        Arrow {
            tail: idx % r,
            flavor: idx / r + 1,
        }
    }
}

impl fmt::Display for Arrow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.tail, self.flavor)
    }
}

/// A McKay-quiver representation with dimension vector (1,…,1): one complex
/// value per arrow.
#[derive(Debug, Clone, PartialEq)]
pub struct Constellation {
    group: GroupAction,
    values: Vec<Complex64>,
}

impl Constellation {
    /// Wraps 3r arrow values given in flavor-major order (all of flavor 1, then 2, then 3).
    pub fn new(group: GroupAction, values: Vec<Complex64>) -> Self {
        assert_eq!(
            values.len(),
            3 * group.order(),
            "a constellation carries one value per arrow"
        );
        Constellation { group, values }
    }

    /// The zero representation.
    pub fn zeros(group: GroupAction) -> Self {
        let n = 3 * group.order();
        Constellation {
            group,
            values: vec![Complex64::new(0.0, 0.0); n],
        }
    }

    /// The acting group.
    pub fn group(&self) -> &GroupAction {
        &self.group
    }

    /// All arrow values in flavor-major order.
    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    /// b_α(k) for flavor α ∈ {1,2,3}.
    pub fn get(&self, k: usize, flavor: usize) -> Complex64 {
        self.values[Arrow { tail: k, flavor }.index(self.group.order())]
    }

    /// Overwrites b_α(k).
    pub fn set(&mut self, k: usize, flavor: usize, value: Complex64) {
        let idx = Arrow { tail: k, flavor }.index(self.group.order());
        self.values[idx] = value;
    }

    /// Largest arrow magnitude.
    pub fn max_abs(&self) -> f64 {
        self.values.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }

    /// Default support threshold: 1e−12 relative to the largest magnitude, so
    /// exact zeros never count as arrows.
    pub fn support_tolerance(&self) -> f64 {
        1e-12 * self.max_abs()
    }

    /// Every arrow of the quiver in flavor-major order.
    pub fn arrows(&self) -> impl Iterator<Item = Arrow> + '_ {
        let r = self.group.order();
        (0..3 * r).map(move |idx| Arrow::from_index(r, idx))
    }

    /// Arrows with |b| above the threshold, sorted by (tail, flavor).
    pub fn support(&self, tol: f64) -> Vec<Arrow> {
        let mut arrows: Vec<Arrow> = self
            .arrows()
            .filter(|a| self.values[a.index(self.group.order())].norm() > tol)
            .collect();
        arrows.sort_by_key(|a| (a.tail, a.flavor));
        arrows
    }

    /// Per-vertex masks of head vertices reachable along one supported arrow.
    fn neighbor_masks(&self, tol: f64) -> Vec<u32> {
        let r = self.group.order();
        let mut nbr = vec![0u32; r];
        for a in self.arrows() {
            if self.values[a.index(r)].norm() > tol {
                nbr[a.tail] |= 1 << a.head(&self.group);
            }
        }
        nbr
    }
}

/// Largest commutation defect max_{k,α<β} |b_β(k+w_α)b_α(k) − b_α(k+w_β)b_β(k)|.
pub fn relation_residual(b: &Constellation) -> f64 {
    let g = b.group();
    let r = g.order();
    let w = g.weights();
    let mut worst: f64 = 0.0;
    for k in 0..r {
        for alpha in 1..=3usize {
            for beta in alpha + 1..=3 {
                let via_alpha = b.get((k + w[alpha - 1]) % r, beta) * b.get(k, alpha);
                let via_beta = b.get((k + w[beta - 1]) % r, alpha) * b.get(k, beta);
                worst = worst.max((via_alpha - via_beta).norm());
            }
        }
    }
    worst
}

/// True iff S is closed under every arrow with |b| > tol leaving S.
pub fn is_invariant(b: &Constellation, s: VertexSet, tol: f64) -> bool {
    let nbr = b.neighbor_masks(tol);
    s.vertices().iter().all(|&k| nbr[k] & !s.0 == 0)
}

/// All subsets of ℤ/r closed under the supported arrows, including ∅ and the
/// full set, in increasing mask order.
pub fn invariant_subsets(b: &Constellation, tol: f64) -> Result<Vec<VertexSet>, QuiverError> {
    let r = b.group().order();
    if r > SUBSET_SCAN_LIMIT {
        return Err(QuiverError::OrderTooLarge {
            order: r,
            limit: SUBSET_SCAN_LIMIT,
        });
    }
    let nbr = b.neighbor_masks(tol);
    let mut out = Vec::new();
    for s in 0..(1u32 << r) {
        let closed = (0..r).all(|k| s >> k & 1 == 0 || nbr[k] & !s == 0);
        if closed {
            out.push(VertexSet(s));
        }
    }
    Ok(out)
}

/// Verdict of a stability test, with the destabilizing subset on failure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilityVerdict {
    /// Whether the tested inequality holds for every invariant subset.
    pub holds: bool,
    /// A violating subset when it does not.
    pub witness: Option<VertexSet>,
}

fn theta_matches(b: &Constellation, theta: &StabilityParam) -> Result<(), QuiverError> {
    if theta.len() != b.group().order() {
        return Err(QuiverError::ThetaLengthMismatch {
            expected: b.group().order(),
            got: theta.len(),
        });
    }
    Ok(())
}

fn stability_scan(
    b: &Constellation,
    theta: &StabilityParam,
    tol: f64,
    strict: bool,
) -> Result<StabilityVerdict, QuiverError> {
    theta_matches(b, theta)?;
    let r = b.group().order();
    for s in invariant_subsets(b, tol)? {
        if !s.is_proper_nonempty(r) {
            continue;
        }
        let value = theta.eval(s);
        let violated = if strict {
            !value.is_positive()
        } else {
            value.is_negative()
        };
        if violated {
            return Ok(StabilityVerdict {
                holds: false,
                witness: Some(s),
            });
        }
    }
    Ok(StabilityVerdict {
        holds: true,
        witness: None,
    })
}

/// θ-stability: θ(S) > 0 for every proper nonempty invariant subset.
pub fn is_theta_stable(
    b: &Constellation,
    theta: &StabilityParam,
    tol: f64,
) -> Result<StabilityVerdict, QuiverError> {
    stability_scan(b, theta, tol, true)
}

/// θ-semistability: θ(S) ≥ 0 for every proper nonempty invariant subset.
pub fn is_theta_semistable(
    b: &Constellation,
    theta: &StabilityParam,
    tol: f64,
) -> Result<StabilityVerdict, QuiverError> {
    stability_scan(b, theta, tol, false)
}

/// Draws one Gaussian value per flavor, fills b_α(k) = x_α, then zeroes the
/// requested arrows.  The constant-per-flavor fill commutes exactly; a zero
/// pattern that breaks the relations is redrawn up to a bound and then
/// rejected as infeasible.
pub fn random_constellation(
    g: &GroupAction,
    seed: u64,
    zero_pattern: Option<&[Arrow]>,
) -> Result<Constellation, QuiverError> {
    let r = g.order();
    if let Some(pattern) = zero_pattern {
        for a in pattern {
            if a.tail >= r || !(1..=3).contains(&a.flavor) {
                return Err(QuiverError::InvalidArrow {
                    order: r,
                    tail: a.tail,
                    flavor: a.flavor,
                });
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..PATTERN_RETRIES {
        let mut values = Vec::with_capacity(3 * r);
        for _ in 0..3usize {
            let x = Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal));
            values.extend(std::iter::repeat_n(x, r));
        }
        let mut b = Constellation::new(g.clone(), values);
        if let Some(pattern) = zero_pattern {
            for a in pattern {
                b.set(a.tail, a.flavor, Complex64::new(0.0, 0.0));
            }
        }
        if relation_residual(&b) == 0.0 {
            return Ok(b);
        }
    }
    Err(QuiverError::PatternInfeasible)
}

/// One isolated torus-fixed point: an arrow support and the θ that stabilizes it.
#[derive(Debug, Clone, PartialEq)]
pub struct FixedPoint {
    /// Supported arrows, sorted by (tail, flavor).
    pub support: Vec<Arrow>,
    /// The stability parameter the point was enumerated for.
    pub stable_for: StabilityParam,
}

#[derive(Debug, Clone)]
struct Candidate {
    mask: u64,
    /// Proper nonempty vertex subsets closed under the support's arrows.
    invariant: Vec<VertexSet>,
}

/// The θ-independent part of the fixed-point scan for one group: every arrow
/// support satisfying path-exchange and rigidity, with its invariant subsets.
///
/// Precomputing this once lets many stability parameters be screened cheaply.
#[derive(Debug, Clone)]
pub struct FixedPointCandidates {
    group: GroupAction,
    candidates: Vec<Candidate>,
}

impl FixedPointCandidates {
    /// Scans all 2^{3r} arrow supports; keeps those satisfying path-exchange
    /// and the rigidity rank condition.
    pub fn new(g: &GroupAction) -> Result<Self, QuiverError> {
        let r = g.order();
        if r > SUPPORT_SCAN_LIMIT {
            return Err(QuiverError::OrderTooLarge {
                order: r,
                limit: SUPPORT_SCAN_LIMIT,
            });
        }
        let w = g.weights();
        // For each vertex and flavor pair, the four arrows of the two
        // two-step paths k → k+w_α → k+w_α+w_β and k → k+w_β → k+w_α+w_β.
        let mut quads: Vec<[usize; 4]> = Vec::with_capacity(3 * r);
        for k in 0..r {
            for (alpha, beta) in [(1usize, 2usize), (1, 3), (2, 3)] {
                let a1 = Arrow {
                    tail: k,
                    flavor: alpha,
                }
                .index(r);
                let a2 = Arrow {
                    tail: (k + w[alpha - 1]) % r,
                    flavor: beta,
                }
                .index(r);
                let a3 = Arrow {
                    tail: k,
                    flavor: beta,
                }
                .index(r);
                let a4 = Arrow {
                    tail: (k + w[beta - 1]) % r,
                    flavor: alpha,
                }
                .index(r);
                quads.push([a1, a2, a3, a4]);
            }
        }
        let mut candidates = Vec::new();
        for mask in 0..1u64 << (3 * r) {
            let path_exchange = quads
                .iter()
                .all(|q| (mask >> q[0] & mask >> q[1] & 1) == (mask >> q[2] & mask >> q[3] & 1));
            if !path_exchange {
                continue;
            }
            if rigidity_dimension(mask, &quads) != r - 1 {
                continue;
            }
            candidates.push(Candidate {
                mask,
                invariant: support_invariant_subsets(g, mask),
            });
        }
        Ok(FixedPointCandidates {
            group: g.clone(),
            candidates,
        })
    }

    /// The group the candidates were scanned for.
    pub fn group(&self) -> &GroupAction {
        &self.group
    }

    /// Number of θ-independent candidates.
    pub fn len(&self) -> usize {
        self.candidates.len()
    }

    /// True iff no support survived the scan.
    pub fn is_empty(&self) -> bool {
        self.candidates.is_empty()
    }

    /// Keeps the candidates whose all-ones representation is θ-stable.
    pub fn for_theta(&self, theta: &StabilityParam) -> Result<Vec<FixedPoint>, QuiverError> {
        let r = self.group.order();
        if theta.len() != r {
            return Err(QuiverError::ThetaLengthMismatch {
                expected: r,
                got: theta.len(),
            });
        }
        if let Genericity::Degenerate { witness } = theta.genericity()? {
            return Err(QuiverError::NotGeneric { witness });
        }
        let sums = theta.subset_sums();
        let positive: Vec<bool> = sums.iter().map(|q| q.is_positive()).collect();
        let mut out = Vec::new();
        for c in &self.candidates {
            if c.invariant.iter().all(|s| positive[s.0 as usize]) {
                let mut support: Vec<Arrow> = (0..3 * r)
                    .filter(|&i| c.mask >> i & 1 == 1)
                    .map(|i| Arrow::from_index(r, i))
                    .collect();
                support.sort_by_key(|a| (a.tail, a.flavor));
                out.push(FixedPoint {
                    support,
                    stable_for: theta.clone(),
                });
            }
        }
        Ok(out)
    }
}

/// Proper nonempty vertex subsets closed under the arrows of a support mask.
fn support_invariant_subsets(g: &GroupAction, mask: u64) -> Vec<VertexSet> {
    let r = g.order();
    let mut nbr = vec![0u32; r];
    for idx in 0..3 * r {
        if mask >> idx & 1 == 1 {
            let a = Arrow::from_index(r, idx);
            nbr[a.tail] |= 1 << a.head(g);
        }
    }
    let mut out = Vec::new();
    for s in 1..(1u32 << r) - 1 {
        let closed = (0..r).all(|k| s >> k & 1 == 0 || nbr[k] & !s == 0);
        if closed {
            out.push(VertexSet(s));
        }
    }
    out
}

/// Dimension of the solution space of the log-linearized relations on a
/// support: variables are the supported arrows, one equation per relation pair
/// whose two paths both lie inside the support.
fn rigidity_dimension(mask: u64, quads: &[[usize; 4]]) -> usize {
    let columns: Vec<usize> = (0..64).filter(|&i| mask >> i & 1 == 1).collect();
    if columns.is_empty() {
        return 0;
    }
    let col_of = |arrow: usize| columns.binary_search(&arrow).expect("arrow in support");
    let mut rows: Vec<Vec<i128>> = Vec::new();
    for q in quads {
        if q.iter().all(|&a| mask >> a & 1 == 1) {
            let mut row = vec![0i128; columns.len()];
            row[col_of(q[0])] += 1;
            row[col_of(q[1])] += 1;
            row[col_of(q[2])] -= 1;
            row[col_of(q[3])] -= 1;
            rows.push(row);
        }
    }
    columns.len() - integer_rank(rows)
}

/// Rank over ℚ of a small integer matrix by fraction-free elimination.
fn integer_rank(mut m: Vec<Vec<i128>>) -> usize {
    if m.is_empty() {
        return 0;
    }
    let cols = m[0].len();
    let mut rank = 0;
    let mut prev = 1i128;
    for col in 0..cols {
        let Some(p) = (rank..m.len()).find(|&i| m[i][col] != 0) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank][col];
        for i in rank + 1..m.len() {
            for j in col + 1..cols {
                let num = pivot * m[i][j] - m[i][col] * m[rank][j];
                debug_assert_eq!(num % prev, 0, "fraction-free elimination stayed exact");
                m[i][j] = num / prev;
            }
            m[i][col] = 0;
        }
        prev = pivot;
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

/// All isolated torus-fixed points of the θ-stable moduli: supports satisfying
/// path-exchange, θ-stability of the all-ones representation, and rigidity.
pub fn enumerate_fixed_points(
    g: &GroupAction,
    theta: &StabilityParam,
) -> Result<Vec<FixedPoint>, QuiverError> {
    FixedPointCandidates::new(g)?.for_theta(theta)
}
