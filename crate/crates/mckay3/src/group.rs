//! The acting group 1/r(w₁,w₂,w₃) ⊂ SL(3,ℂ) and exact arithmetic in ℚ(ζ_r).
//!
//! A cyclic group of prime order r acts on ℂ³ by diagonal matrices with
//! eigenvalues ζ^{w₁}, ζ^{w₂}, ζ^{w₃}, where ζ = e^{2πi/r}.  Requiring the
//! action to be free on ℂ³∖{0} forces r prime and every wᵢ ≢ 0, and the
//! SL(3,ℂ) condition forces w₁+w₂+w₃ ≡ 0 (mod r).  Character sums over this
//! group live in the cyclotomic field ℚ(ζ_r) = ℚ[x]/Φ_r(x), represented here
//! exactly in the power basis {1, ζ, …, ζ^{r−2}}.

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use thiserror::Error;

/// Exact rational scalar used throughout the exact paths.
pub type Rational = BigRational;

/// Errors from group validation, literal parsing, and cyclotomic division.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    /// The order is not prime; a free action on ℂ³∖{0} forces a cyclic group of prime order.
    #[error("group order {0} is not prime; a free action on ℂ³∖{{0}} forces prime order")]
    NotPrime(usize),
    /// The weights do not sum to 0 mod r, so the action does not land in SL(3,ℂ).
    #[error("weights sum to {sum} mod {order}; an SL(3,ℂ) action needs w₁+w₂+w₃ ≡ 0")]
    DeterminantNotOne { order: usize, sum: usize },
    /// Some weight is 0 mod r, so the action fixes a coordinate axis.
    #[error("weight w{index} ≡ 0 mod {order} fixes a coordinate axis; the action must be free")]
    NotFree { order: usize, index: usize },
    /// A group literal could not be parsed.
    #[error("cannot parse group literal {literal:?}; expected \"1/r(w1,w2,w3)\"")]
    BadLiteral { literal: String },
    /// A rational literal could not be parsed.
    #[error("cannot parse rational {literal:?}; expected \"p/q\" or \"p\" with q > 0")]
    BadRational { literal: String },
    /// Attempted to invert the zero element of ℚ(ζ_r).
    #[error("division by zero in ℚ(ζ_{order})")]
    DivisionByZero { order: usize },
}

/// Renders an exact rational as "p/q" with q > 0 and gcd(p,q) = 1, e.g. "0/1", "-2/9".
pub fn rational_to_string(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Parses "p/q" or a bare integer "p"; accepts the Unicode minus sign.
pub fn parse_rational(s: &str) -> Result<Rational, GroupError> {
    let cleaned = s.trim().replace('\u{2212}', "-");
    let bad = || GroupError::BadRational {
        literal: s.to_string(),
    };
    let (num, den) = match cleaned.split_once('/') {
        Some((n, d)) => (n.trim().to_string(), d.trim().to_string()),
        None => (cleaned.clone(), "1".to_string()),
    };
    let n = num.parse::<num_bigint::BigInt>().map_err(|_| bad())?;
    let d = den.parse::<num_bigint::BigInt>().map_err(|_| bad())?;
    if d.is_zero() || d.is_negative() {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

fn is_prime(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// The cyclic group 1/r(w₁,w₂,w₃) acting diagonally on ℂ³.
///
/// Irreducible representations are indexed by ℤ/r; index 0 is the trivial
/// class.  Weight triples are kept as given (reduced mod r) rather than
/// canonicalized, so matrix indices stay aligned with the chosen labeling;
/// [`GroupAction::equivalent_presentations`] lists the relabelings.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupAction {
    order: usize,
    weights: [usize; 3],
}

impl GroupAction {
    /// Validates and builds the group 1/r(w₁,w₂,w₃); weights are reduced mod r.
    pub fn new(r: usize, w1: i64, w2: i64, w3: i64) -> Result<Self, GroupError> {
        if !is_prime(r) {
            return Err(GroupError::NotPrime(r));
        }
        let weights = [reduce(w1, r), reduce(w2, r), reduce(w3, r)];
        let sum = (weights[0] + weights[1] + weights[2]) % r;
        if sum != 0 {
            return Err(GroupError::DeterminantNotOne { order: r, sum });
        }
        for (i, &w) in weights.iter().enumerate() {
            if w == 0 {
                return Err(GroupError::NotFree {
                    order: r,
                    index: i + 1,
                });
            }
        }
        Ok(GroupAction { order: r, weights })
    }

    /// Group order r = |G|.
    pub fn order(&self) -> usize {
        self.order
    }

    /// The defining weights (w₁,w₂,w₃), each in 1..r.
    pub fn weights(&self) -> [usize; 3] {
        self.weights
    }

    /// Reduces an integer into 0..r.
    pub fn reduce(&self, a: i64) -> usize {
        reduce(a, self.order)
    }

    /// Character value χ_k(g^j) = ζ^{kj} of the k-th irreducible at the j-th power of the generator.
    pub fn character(&self, k: usize, j: usize) -> CyclotomicNumber {
        self.zeta_pow((k % self.order) as i64 * (j % self.order) as i64)
    }

    /// The root of unity ζ^e in canonical basis form.
    pub fn zeta_pow(&self, e: i64) -> CyclotomicNumber {
        CyclotomicNumber::zeta_pow(self.order, e)
    }

    /// All weight triples presenting the same subgroup of SL(3,ℂ): permutations
    /// of the weights combined with replacing the generator (w ↦ u·w, gcd(u,r)=1).
    pub fn equivalent_presentations(&self) -> Vec<GroupAction> {
        let r = self.order;
        let [a, b, c] = self.weights;
        let perms = [
            [a, b, c],
            [a, c, b],
            [b, a, c],
            [b, c, a],
            [c, a, b],
            [c, b, a],
        ];
        let mut out: Vec<GroupAction> = Vec::new();
        for u in 1..r {
            for p in perms {
                let g = GroupAction {
                    order: r,
                    weights: [(u * p[0]) % r, (u * p[1]) % r, (u * p[2]) % r],
                };
                if !out.contains(&g) {
                    out.push(g);
                }
            }
        }
        out.sort();
        out
    }

    /// Parses a group literal "1/r(w1,w2,w3)"; accepts the Unicode minus sign and spaces.
    pub fn parse(s: &str) -> Result<Self, GroupError> {
        let bad = || GroupError::BadLiteral {
            literal: s.to_string(),
        };
        let cleaned: String = s
            .replace('\u{2212}', "-")
            .chars()
            .filter(|c| !c.is_whitespace())
            .collect();
        let rest = cleaned.strip_prefix("1/").ok_or_else(bad)?;
        let open = rest.find('(').ok_or_else(bad)?;
        let r = rest[..open].parse::<usize>().map_err(|_| bad())?;
        let body = rest[open + 1..].strip_suffix(')').ok_or_else(bad)?;
        let parts: Vec<&str> = body.split(',').collect();
        if parts.len() != 3 {
            return Err(bad());
        }
        let mut w = [0i64; 3];
        for (i, p) in parts.iter().enumerate() {
            w[i] = p.parse::<i64>().map_err(|_| bad())?;
        }
        GroupAction::new(r, w[0], w[1], w[2])
    }
}

impl fmt::Display for GroupAction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "1/{}({},{},{})",
            self.order, self.weights[0], self.weights[1], self.weights[2]
        )
    }
}

impl FromStr for GroupAction {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        GroupAction::parse(s)
    }
}

fn reduce(a: i64, r: usize) -> usize {
    let m = a.rem_euclid(r as i64);
    m as usize
}

/// An exact element of ℚ(ζ_r) for prime r, stored in the basis {1, ζ, …, ζ^{r−2}}
/// of ℚ[x]/Φ_r(x) with Φ_r = 1 + x + … + x^{r−1}.
///
/// The basis has r−1 entries and the representation is unique, so equality is
/// coefficientwise.  ζ^{r−1} reduces to −(1 + ζ + … + ζ^{r−2}).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclotomicNumber {
    order: usize,
    coeffs: Vec<Rational>,
}

impl CyclotomicNumber {
    /// The zero element of ℚ(ζ_r).
    pub fn zero(r: usize) -> Self {
        CyclotomicNumber {
            order: r,
            coeffs: vec![Rational::zero(); r - 1],
        }
    }

    /// The unit element of ℚ(ζ_r).
    pub fn one(r: usize) -> Self {
        Self::from_rational(r, Rational::one())
    }

    /// Embeds a rational constant.
    pub fn from_rational(r: usize, q: Rational) -> Self {
        let mut c = Self::zero(r);
        c.coeffs[0] = q;
        c
    }

    /// The primitive root ζ = e^{2πi/r}.
    pub fn zeta(r: usize) -> Self {
        Self::zeta_pow(r, 1)
    }

    /// The power ζ^e, reduced into the canonical basis (negative e allowed).
    pub fn zeta_pow(r: usize, e: i64) -> Self {
        let m = reduce(e, r);
        let mut c = Self::zero(r);
        if m < r - 1 {
            c.coeffs[m] = Rational::one();
        } else {
            // ζ^{r−1} = −(1 + ζ + … + ζ^{r−2}) from Φ_r(ζ) = 0.
            for t in 0..r - 1 {
                c.coeffs[t] = -Rational::one();
            }
        }
        c
    }

    /// Cyclotomic order r of the ambient field.
    pub fn order(&self) -> usize {
        self.order
    }

    /// Coefficients in the basis {1, ζ, …, ζ^{r−2}}.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// True iff every basis coefficient vanishes.
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Returns the rational value iff all non-constant coefficients vanish.
    pub fn is_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against Φ_r.
    pub fn inv(&self) -> Result<Self, GroupError> {
        if self.is_zero() {
            return Err(GroupError::DivisionByZero { order: self.order });
        }
        let r = self.order;
        // Φ_r = 1 + x + … + x^{r−1}, irreducible for prime r, so gcd(self, Φ_r)
        // is a nonzero constant c and the Bézout cofactor u gives self⁻¹ = u/c.
        let phi = vec![Rational::one(); r];
        let a = self.coeffs.clone();
        let (g, u) = poly_ext_gcd(&a, &phi);
        debug_assert_eq!(
            poly_degree(&g),
            Some(0),
            "Φ_r must be coprime to any nonzero residue"
        );
        let c = g[0].clone();
        // deg u < deg Φ_r − deg g = r − 1, so u fits the basis; the vector may
        // carry zero padding beyond that degree.
        debug_assert!(poly_degree(&u).is_none_or(|d| d < r - 1));
        let mut coeffs = vec![Rational::zero(); r - 1];
        for (t, coef) in u.iter().enumerate().take(r - 1) {
            coeffs[t] = coef / &c;
        }
        Ok(CyclotomicNumber { order: r, coeffs })
    }

    /// Scales by a rational factor.
    pub fn scale(&self, q: &Rational) -> Self {
        CyclotomicNumber {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    /// Numeric evaluation at ζ = e^{2πi/r}, for cross-checks against floating-point oracles.
    pub fn to_complex(&self) -> Complex64 {
        let r = self.order as f64;
        let mut acc = Complex64::new(0.0, 0.0);
        for (t, c) in self.coeffs.iter().enumerate() {
            let angle = 2.0 * std::f64::consts::PI * (t as f64) / r;
            acc += Complex64::from_polar(1.0, angle) * c.to_f64().unwrap_or(f64::NAN);
        }
        acc
    }

    fn assert_same_field(&self, other: &Self) {
        assert_eq!(
            self.order, other.order,
            "cyclotomic operands live in different fields"
        );
    }
}

impl fmt::Display for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: Vec<String> = Vec::new();
        for (t, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let coef = rational_to_string(c);
            let term = match t {
                0 => coef,
                1 => format!("{coef}·ζ"),
                _ => format!("{coef}·ζ^{t}"),
            };
            terms.push(term);
        }
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

impl Add for &CyclotomicNumber {
    type Output = CyclotomicNumber;

    fn add(self, rhs: &CyclotomicNumber) -> CyclotomicNumber {
        self.assert_same_field(rhs);
        CyclotomicNumber {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &CyclotomicNumber {
    type Output = CyclotomicNumber;

    fn sub(self, rhs: &CyclotomicNumber) -> CyclotomicNumber {
        self.assert_same_field(rhs);
        CyclotomicNumber {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &CyclotomicNumber {
    type Output = CyclotomicNumber;

    fn neg(self) -> CyclotomicNumber {
        CyclotomicNumber {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &CyclotomicNumber {
    type Output = CyclotomicNumber;

    fn mul(self, rhs: &CyclotomicNumber) -> CyclotomicNumber {
        self.assert_same_field(rhs);
        let r = self.order;
        // Convolve, fold exponents with ζ^r = 1, then expand ζ^{r−1} via Φ_r.
        let mut by_exp = vec![Rational::zero(); r];
        for (s, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (t, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                by_exp[(s + t) % r] += a * b;
            }
        }
        let top = by_exp[r - 1].clone();
        let mut coeffs = Vec::with_capacity(r - 1);
        for e in by_exp.into_iter().take(r - 1) {
            coeffs.push(e - &top);
        }
        CyclotomicNumber { order: r, coeffs }
    }
}

fn poly_degree(p: &[Rational]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

fn poly_sub_scaled(p: &mut Vec<Rational>, q: &[Rational], factor: &Rational, shift: usize) {
    if p.len() < q.len() + shift {
        p.resize(q.len() + shift, Rational::zero());
    }
    for (i, c) in q.iter().enumerate() {
        p[i + shift] -= factor * c;
    }
}

fn poly_div_rem(num: &[Rational], den: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let dd = poly_degree(den).expect("division by the zero polynomial");
    let lead = den[dd].clone();
    let mut rem = num.to_vec();
    let mut quo = vec![Rational::zero(); num.len().max(1)];
    while let Some(dn) = poly_degree(&rem) {
        if dn < dd {
            break;
        }
        let factor = &rem[dn] / &lead;
        let shift = dn - dd;
        quo[shift] = factor.clone();
        poly_sub_scaled(&mut rem, den, &factor, shift);
    }
    (quo, rem)
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len() + b.len()];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            out[i + j] += x * y;
        }
    }
    out
}

/// Extended Euclid in ℚ[x]: returns (g, u) with u·a + v·b = g for some v.
fn poly_ext_gcd(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut r0 = a.to_vec();
    let mut r1 = b.to_vec();
    let mut s0 = vec![Rational::one()];
    let mut s1 = vec![Rational::zero()];
    while poly_degree(&r1).is_some() {
        let (q, rem) = poly_div_rem(&r0, &r1);
        let qs = poly_mul(&q, &s1);
        let mut s2 = s0.clone();
        if s2.len() < qs.len() {
            s2.resize(qs.len(), Rational::zero());
        }
        for (i, c) in qs.iter().enumerate() {
            s2[i] -= c;
        }
        r0 = std::mem::replace(&mut r1, rem);
        s0 = std::mem::replace(&mut s1, s2);
    }
    (r0, s0)
}
