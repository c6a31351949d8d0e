//! Monic polynomials over the rationals and factorization into
//! irreducibles.
//!
//! The factorizer runs squarefree decomposition (Yun), strips rational
//! roots, and certifies the residual: degree two or three with no
//! rational root is irreducible outright, anything larger goes through
//! bounded Kronecker trial factorization. A residual the bound cannot
//! settle is reported as `FactorizationIncomplete`, never guessed.

use super::matrix::Matrix;
use super::Rational;
use num::bigint::BigInt;
use num::{Integer, One, Signed, Zero};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FactorError {
    #[error("cannot certify irreducibility of a degree-{degree} residual within coefficient bound {bound}")]
    FactorizationIncomplete { degree: usize, bound: u64 },
}

/// Coefficients lowest degree first; no trailing zeros; the zero
/// polynomial is the empty list.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RationalPolynomial {
    coeffs: Vec<Rational>,
}

impl RationalPolynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        RationalPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        RationalPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        RationalPolynomial { coeffs: vec![Rational::one()] }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        RationalPolynomial::new(coeffs.iter().map(|&n| super::rat_int(n)).collect())
    }

    /// x - r
    pub fn linear_from_root(r: &Rational) -> Self {
        RationalPolynomial::new(vec![-r.clone(), Rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with the zero polynomial reported as 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_one()
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let lead = self.leading();
        RationalPolynomial::new(self.coeffs.iter().map(|c| c / &lead).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + other.coeff(i)).collect();
        RationalPolynomial::new(coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - other.coeff(i)).collect();
        RationalPolynomial::new(coeffs)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return RationalPolynomial::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        RationalPolynomial::new(coeffs)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        RationalPolynomial::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Euclidean division: self = q * divisor + r with deg r < deg divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let mut rem = self.clone();
        let mut quot = vec![Rational::zero(); self.coeffs.len().max(1)];
        let dlead = divisor.leading();
        let ddeg = divisor.degree();
        while !rem.is_zero() && rem.degree() >= ddeg {
            let shift = rem.degree() - ddeg;
            let factor = rem.leading() / &dlead;
            quot[shift] = quot[shift].clone() + &factor;
            // rem -= factor * x^shift * divisor
            let mut sub = vec![Rational::zero(); shift];
            sub.extend(divisor.coeffs.iter().map(|c| c * &factor));
            rem = rem.sub(&RationalPolynomial::new(sub));
        }
        (RationalPolynomial::new(quot), rem)
    }

    pub fn divides_exactly(&self, divisor: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(divisor);
        r.is_zero().then_some(q)
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return RationalPolynomial::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * super::rat_int(i as i64))
            .collect();
        RationalPolynomial::new(coeffs)
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Horner evaluation with a square matrix argument.
    pub fn eval_matrix(&self, m: &Matrix) -> Matrix {
        assert!(m.is_square(), "matrix argument must be square");
        let n = m.rows();
        let mut acc = Matrix::zero(n, n);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(m);
            for i in 0..n {
                let v = acc.get(i, i) + c;
                acc.set(i, i, v);
            }
        }
        acc
    }

    /// Squarefree decomposition of a monic polynomial (Yun): returns
    /// pairwise coprime monic parts with their multiplicities, whose
    /// product with multiplicities is the input.
    pub fn squarefree_decomposition(&self) -> Vec<(Self, usize)> {
        assert!(!self.is_zero() && self.is_monic(), "input must be monic");
        if self.degree() == 0 {
            return Vec::new();
        }
        let deriv = self.derivative();
        let a0 = self.gcd(&deriv);
        if a0.degree() == 0 {
            return vec![(self.clone(), 1)];
        }
        let mut out = Vec::new();
        let mut b = self.divides_exactly(&a0).expect("gcd divides");
        let c = deriv.divides_exactly(&a0).expect("gcd divides derivative");
        let mut d = c.sub(&b.derivative());
        let mut i = 1;
        while b.degree() > 0 {
            let a = b.gcd(&d);
            if a.degree() > 0 {
                out.push((a.monic(), i));
            }
            b = b.divides_exactly(&a).expect("squarefree step divides");
            let cc = d.divides_exactly(&a).expect("squarefree step divides");
            d = cc.sub(&b.derivative());
            i += 1;
        }
        out
    }

    /// Factors a polynomial of degree >= 1 into monic irreducibles with
    /// multiplicities. The product of the factors equals the monic
    /// normalization of the input, exactly.
    pub fn factor_over_rationals(
        &self,
        coefficient_bound: u64,
    ) -> Result<Vec<(Self, usize)>, FactorError> {
        assert!(self.degree() >= 1, "factorization needs degree >= 1");
        let monic = self.monic();
        let mut factors: Vec<(Self, usize)> = Vec::new();
        for (part, mult) in monic.squarefree_decomposition() {
            for f in factor_squarefree(&part, coefficient_bound)? {
                factors.push((f, mult));
            }
        }
        factors.sort();
        Ok(factors)
    }
}

impl fmt::Display for RationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            let abs = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let show_coeff = !abs.is_one() || i == 0;
            if show_coeff {
                write!(f, "{abs}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "{}x", if show_coeff { "*" } else { "" })?,
                _ => write!(f, "{}x^{}", if show_coeff { "*" } else { "" }, i)?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for RationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalPolynomial({self})")
    }
}

/// Factors a monic squarefree polynomial into monic irreducibles.
fn factor_squarefree(
    poly: &RationalPolynomial,
    bound: u64,
) -> Result<Vec<RationalPolynomial>, FactorError> {
    let mut out = Vec::new();
    let mut rest = poly.clone();

    // Strip rational roots, re-deriving the candidate set as the residual
    // shrinks.
    loop {
        if rest.degree() == 0 {
            return Ok(out);
        }
        if rest.degree() == 1 {
            out.push(rest.monic());
            return Ok(out);
        }
        match find_rational_root(&rest) {
            Some(root) => {
                let lin = RationalPolynomial::linear_from_root(&root);
                rest = rest.divides_exactly(&lin).expect("verified root divides");
                out.push(lin);
            }
            None => break,
        }
    }

    // No rational roots remain: a quadratic or cubic residual is
    // irreducible, anything larger goes through Kronecker trials.
    if rest.degree() <= 3 {
        out.push(rest.monic());
        return Ok(out);
    }
    let (int_poly, _) = to_integer(&rest);
    let mut pieces = kronecker_factor(&primitive_part(&int_poly), bound)?;
    out.append(&mut pieces);
    Ok(out)
}

/// First rational root of the polynomial, if any, by the divisor test on
/// the primitive integer form.
fn find_rational_root(poly: &RationalPolynomial) -> Option<Rational> {
    if poly.coeff(0).is_zero() {
        return Some(Rational::zero());
    }
    let (int_coeffs, _) = to_integer(poly);
    let prim = primitive_part(&int_coeffs);
    let constant = prim.first().expect("nonempty").clone();
    let leading = prim.last().expect("nonempty").clone();
    let const_divs = divisors(&constant.abs());
    let lead_divs = divisors(&leading.abs());
    for p in &const_divs {
        for q in &lead_divs {
            for sign in [1i64, -1] {
                let candidate = Rational::new(p * BigInt::from(sign), q.clone());
                if poly.eval(&candidate).is_zero() {
                    return Some(candidate);
                }
            }
        }
    }
    None
}

/// Scales a rational polynomial to integer coefficients (content not yet
/// removed). Returns the coefficient list lowest-first and the scale used.
fn to_integer(poly: &RationalPolynomial) -> (Vec<BigInt>, BigInt) {
    let mut scale = BigInt::one();
    for c in poly.coeffs() {
        scale = scale.lcm(c.denom());
    }
    let coeffs = poly
        .coeffs()
        .iter()
        .map(|c| {
            let scaled = c * Rational::from_integer(scale.clone());
            debug_assert!(scaled.is_integer());
            scaled.to_integer()
        })
        .collect();
    (coeffs, scale)
}

fn primitive_part(coeffs: &[BigInt]) -> Vec<BigInt> {
    let mut content = BigInt::zero();
    for c in coeffs {
        content = content.gcd(c);
    }
    if content.is_zero() || content.is_one() {
        return coeffs.to_vec();
    }
    let sign = if coeffs.last().map(Signed::is_negative).unwrap_or(false) {
        -content
    } else {
        content
    };
    coeffs.iter().map(|c| c / &sign).collect()
}

/// All positive divisors of |n|, n nonzero, by trial division.
fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    assert!(!n.is_zero(), "divisors of zero requested");
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            small.push(d.clone());
            let q = &n / &d;
            if q != d {
                large.push(q);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

fn eval_int(coeffs: &[BigInt], x: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    for c in coeffs.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

/// Kronecker trial factorization of a primitive squarefree integer
/// polynomial with no rational roots. Complete as long as the divisor
/// enumeration stays under the combination cap and no candidate is
/// rejected purely for exceeding the coefficient bound; otherwise the
/// residual is reported incomplete rather than declared irreducible.
fn kronecker_factor(
    coeffs: &[BigInt],
    bound: u64,
) -> Result<Vec<RationalPolynomial>, FactorError> {
    let degree = coeffs.len() - 1;
    debug_assert!(degree >= 4);
    let poly = RationalPolynomial::new(
        coeffs.iter().map(|c| Rational::from_integer(c.clone())).collect(),
    );
    let bound_big = BigInt::from(bound);
    let combo_cap = bound as u128;

    let mut k = 2;
    while k <= degree / 2 {
        // Evaluation points 0, 1, -1, 2, -2, ...
        let points: Vec<BigInt> = (0..=k as i64)
            .map(|i| BigInt::from(if i % 2 == 1 { (i + 1) / 2 } else { -(i / 2) }))
            .collect();
        let values: Vec<BigInt> = points.iter().map(|x| eval_int(coeffs, x)).collect();
        debug_assert!(values.iter().all(|v| !v.is_zero()));

        // Candidate factor values at each point: all signed divisors,
        // except the first point where the sign is normalized positive.
        let mut candidate_values: Vec<Vec<BigInt>> = Vec::new();
        for (i, v) in values.iter().enumerate() {
            let divs = divisors(v);
            let signed: Vec<BigInt> = if i == 0 {
                divs
            } else {
                divs.iter().flat_map(|d| [d.clone(), -d]).collect()
            };
            candidate_values.push(signed);
        }
        let combos: u128 = candidate_values
            .iter()
            .map(|c| c.len() as u128)
            .product();
        if combos > combo_cap {
            return Err(FactorError::FactorizationIncomplete { degree, bound });
        }

        let mut hit_bound = false;
        let mut counters = vec![0usize; candidate_values.len()];
        'combo: loop {
            let chosen: Vec<Rational> = counters
                .iter()
                .zip(&candidate_values)
                .map(|(&i, vals)| Rational::from_integer(vals[i].clone()))
                .collect();
            if let Some(g) = interpolate(&points, &chosen, k) {
                if g.coeffs().iter().all(|c| c.is_integer()) {
                    let too_big = g
                        .coeffs()
                        .iter()
                        .any(|c| c.to_integer().abs() > bound_big);
                    if too_big {
                        hit_bound = true;
                    } else if let Some(quotient) = poly.divides_exactly(&g.monic()) {
                        // Any proper factor of g would have degree >= 2 and
                        // < k, hence found at a smaller k: g is irreducible.
                        let mut out = vec![g.monic()];
                        let q_monic = quotient.monic();
                        if q_monic.degree() <= 3 {
                            if q_monic.degree() >= 1 {
                                out.push(q_monic);
                            }
                        } else {
                            let (qi, _) = to_integer(&q_monic);
                            let mut rest = kronecker_factor(&primitive_part(&qi), bound)?;
                            out.append(&mut rest);
                        }
                        return Ok(out);
                    }
                }
            }
            // odometer increment
            for slot in 0..counters.len() {
                counters[slot] += 1;
                if counters[slot] < candidate_values[slot].len() {
                    continue 'combo;
                }
                counters[slot] = 0;
            }
            break;
        }
        if hit_bound {
            return Err(FactorError::FactorizationIncomplete { degree, bound });
        }
        k += 1;
    }
    Ok(vec![poly.monic()])
}

/// Lagrange interpolation of degree <= k through the given points; None
/// when the interpolant has degree < k (those candidates belong to an
/// earlier factor-degree pass).
fn interpolate(points: &[BigInt], values: &[Rational], k: usize) -> Option<RationalPolynomial> {
    let mut acc = RationalPolynomial::zero();
    for (i, xi) in points.iter().enumerate() {
        let mut numer = RationalPolynomial::one();
        let mut denom = Rational::one();
        for (j, xj) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            numer = numer.mul(&RationalPolynomial::new(vec![
                Rational::from_integer(-xj.clone()),
                Rational::one(),
            ]));
            denom *= Rational::from_integer(xi - xj);
        }
        let term = numer.scale(&(values[i].clone() / denom));
        acc = acc.add(&term);
    }
    (acc.degree() == k).then_some(acc)
}

pub(crate) const DEFAULT_COEFFICIENT_BOUND: u64 = 1_000_000;
