//! Dense univariate polynomials with arbitrary-precision integer coefficients.
//!
//! Coefficients are stored lowest degree first, and the same order is used
//! for the comma-separated text format (`"4,0,-5,0,1"` is x⁴ − 5x² + 4).

mod factor;
mod field;
mod resultant;
mod sturm;
mod unimodal;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub use factor::{
    factor_irreducible, find_factor_kronecker, squarefree_factor, Factorization,
    DEFAULT_DEGREE_CAP,
};
pub use field::NumberField;
pub use resultant::{compose_sum, resultant};
pub use sturm::{
    is_totally_real, isolate_extreme_roots, isolate_real_roots, sturm_count, Bound, RootBox,
    SturmSequence,
};
pub use unimodal::{abs_profile, is_unimodal, ProfileMode};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("polynomial must be nonzero")]
    ZeroPolynomial,
    #[error("polynomial must be monic: {0}")]
    NotMonic(IntPoly),
    #[error("polynomial is not totally real: {0}")]
    NotTotallyReal(IntPoly),
    #[error("polynomial must be nonconstant")]
    Constant,
    #[error("degree {degree} exceeds the factorization cap {cap}")]
    DegreeAboveCap { degree: usize, cap: usize },
    #[error("cannot parse polynomial {text:?}: {reason}")]
    Parse { text: String, reason: String },
    #[error("unsupported power sum index {0}")]
    PowerSumIndex(usize),
}

/// An integer polynomial. The zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::from_i64s(&[0, 1])
    }

    /// `x - root`.
    pub fn linear(root: impl Into<BigInt>) -> Self {
        Self::new(vec![-root.into(), BigInt::one()])
    }

    /// `c x^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.push(c);
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `x^k`, zero past the degree.
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut out = Self::one();
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + BigRational::from_integer(c.clone()))
    }

    /// Sign of `f(p/q)` computed from the homogenized integer form.
    pub fn sign_at(&self, x: &BigRational) -> i32 {
        let (p, q) = (x.numer(), x.denom());
        let mut acc = BigInt::zero();
        let mut qpow = BigInt::one();
        // Horner in p with powers of q attached to lower terms.
        for c in self.coeffs.iter().rev() {
            acc = acc * p + c * &qpow;
            qpow *= q;
        }
        sign_of(&acc)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigInt::from(k))
                .collect(),
        )
    }

    /// Non-negative gcd of the coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.content();
        if self.leading().unwrap().is_negative() {
            c = -c;
        }
        Self::new(self.coeffs.iter().map(|a| a / &c).collect())
    }

    /// `f(-x)`.
    pub fn reflect(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// `f(x + shift)`.
    pub fn shift(&self, shift: &BigInt) -> Self {
        let step = Self::new(vec![shift.clone(), BigInt::one()]);
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| &(&acc * &step) + &Self::constant(c.clone()))
    }

    /// Division over the rationals: `self = q * divisor + r`, `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &IntPoly) -> Result<(RatPoly, RatPoly), PolyError> {
        RatPoly::from(self).div_rem(&RatPoly::from(divisor))
    }

    /// The integer quotient `self / divisor` when the division is exact in ℤ[x].
    pub fn exact_div(&self, divisor: &IntPoly) -> Option<IntPoly> {
        let dlen = divisor.coeffs.len();
        if dlen == 0 {
            return None;
        }
        if self.coeffs.len() < dlen {
            return self.is_zero().then(Self::zero);
        }
        let lead = divisor.leading().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); rem.len() - dlen + 1];
        for k in (0..quot.len()).rev() {
            let top = &rem[k + dlen - 1];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (i, d) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &q * d;
            }
            quot[k] = q;
        }
        rem.iter().all(Zero::is_zero).then(|| Self::new(quot))
    }

    /// True iff `self` divides `other` in ℤ[x].
    pub fn divides(&self, other: &IntPoly) -> bool {
        other.exact_div(self).is_some()
    }

    /// Largest `m` such that `self^m` divides `other`, for nonconstant `self`
    /// and nonzero `other`.
    pub fn multiplicity_in(&self, other: &IntPoly) -> usize {
        assert!(!self.is_constant() && !other.is_zero());
        let mut rest = other.clone();
        let mut m = 0;
        while let Some(q) = self.exact_div_of(&rest) {
            rest = q;
            m += 1;
        }
        m
    }

    fn exact_div_of(&self, dividend: &IntPoly) -> Option<IntPoly> {
        dividend.exact_div(self)
    }

    /// Remainder of `self` by `divisor`, scaled by a positive constant so
    /// that it stays integral and keeps the sign of the rational remainder.
    fn positive_pseudo_rem(&self, divisor: &IntPoly) -> IntPoly {
        let dlen = divisor.coeffs.len();
        assert!(dlen > 0, "pseudo-remainder by zero");
        if self.coeffs.len() < dlen {
            return self.clone();
        }
        let lead = divisor.leading().unwrap().abs();
        let sign_lead = divisor.leading().unwrap().signum();
        let mut rem = self.coeffs.clone();
        while rem.len() >= dlen {
            let top = rem.pop().unwrap();
            if top.is_zero() {
                continue;
            }
            let shift = rem.len() + 1 - dlen;
            for c in rem.iter_mut() {
                *c *= &lead;
            }
            let factor = &top * &sign_lead;
            for (i, d) in divisor.coeffs.iter().take(dlen - 1).enumerate() {
                rem[shift + i] -= &factor * d;
            }
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        IntPoly::new(rem)
    }

    pub fn is_squarefree(&self) -> bool {
        !self.is_zero() && gcd(self, &self.derivative()).is_constant()
    }

    /// `f / gcd(f, f')`, primitive with positive leading coefficient.
    pub fn squarefree_part(&self) -> IntPoly {
        if self.is_constant() {
            return self.primitive_part();
        }
        let g = gcd(self, &self.derivative());
        self.primitive_part()
            .exact_div(&g)
            .expect("gcd divides f")
            .primitive_part()
    }

    /// Sum of `k`-th powers of the roots (with multiplicity) via Newton's
    /// identities. The polynomial must be monic.
    pub fn power_sum(&self, k: usize) -> Result<BigInt, PolyError> {
        if !self.is_monic() {
            return Err(PolyError::NotMonic(self.clone()));
        }
        let n = self.degree().unwrap();
        // e_i = (-1)^i a_{n-i}
        let e = |i: usize| -> BigInt {
            if i > n {
                return BigInt::zero();
            }
            let a = self.coeff(n - i);
            if i % 2 == 1 {
                -a
            } else {
                a
            }
        };
        let mut p: Vec<BigInt> = vec![BigInt::from(n)];
        for m in 1..=k {
            let mut s = BigInt::zero();
            for i in 1..m {
                let term = e(i) * &p[m - i];
                if (i - 1) % 2 == 0 {
                    s += term;
                } else {
                    s -= term;
                }
            }
            let last = e(m) * BigInt::from(m);
            if (m - 1) % 2 == 0 {
                s += last;
            } else {
                s -= last;
            }
            p.push(s);
        }
        Ok(p.swap_remove(k))
    }

    /// Comma-separated coefficients, lowest degree first. Zero is `"0"`.
    pub fn to_csv(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.coeffs
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(",")
    }

    pub fn from_csv(text: &str) -> Result<Self, PolyError> {
        let text = text.trim();
        if text.is_empty() {
            return Err(PolyError::Parse {
                text: text.into(),
                reason: "empty coefficient list".into(),
            });
        }
        text.split(',')
            .map(|t| {
                t.trim().parse::<BigInt>().map_err(|e| PolyError::Parse {
                    text: text.into(),
                    reason: format!("{t:?}: {e}"),
                })
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Self::new)
    }
}

pub(crate) fn sign_of(x: &BigInt) -> i32 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

impl FromStr for IntPoly {
    type Err = PolyError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::from_csv(s)
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let abs = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = !abs.is_one() || k == 0;
            if show_coeff {
                write!(f, "{abs}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

impl serde::Serialize for IntPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_csv())
    }
}

impl<'de> serde::Deserialize<'de> for IntPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        IntPoly::from_csv(&text).map_err(serde::de::Error::custom)
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: IntPoly) -> IntPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        -&self
    }
}

impl std::iter::Product for IntPoly {
    fn product<I: Iterator<Item = IntPoly>>(iter: I) -> IntPoly {
        iter.fold(IntPoly::one(), |acc, p| &acc * &p)
    }
}

/// Primitive gcd with positive leading coefficient; `gcd(0, 0) = 0`.
pub fn gcd(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let (mut a, mut b) = (a.primitive_part(), b.primitive_part());
    if a.degree() < b.degree() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_zero() {
        let r = a.positive_pseudo_rem(&b).primitive_part();
        a = b;
        b = r;
    }
    a
}

/// Polynomial with rational coefficients; used inside division and root
/// isolation only.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct RatPoly {
    coeffs: Vec<BigRational>,
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// The integer polynomial with the same coefficients, if all are integral.
    pub fn to_int_poly(&self) -> Option<IntPoly> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect::<Option<Vec<_>>>()
            .map(IntPoly::new)
    }

    pub fn div_rem(&self, divisor: &RatPoly) -> Result<(RatPoly, RatPoly), PolyError> {
        let dlen = divisor.coeffs.len();
        if dlen == 0 {
            return Err(PolyError::DivisionByZero);
        }
        if self.coeffs.len() < dlen {
            return Ok((RatPoly::default(), self.clone()));
        }
        let lead = divisor.coeffs.last().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigRational::zero(); rem.len() - dlen + 1];
        for k in (0..quot.len()).rev() {
            let q = &rem[k + dlen - 1] / lead;
            if q.is_zero() {
                continue;
            }
            for (i, d) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &q * d;
            }
            quot[k] = q;
        }
        rem.truncate(dlen - 1);
        Ok((RatPoly::new(quot), RatPoly::new(rem)))
    }

    pub fn mul(&self, rhs: &RatPoly) -> RatPoly {
        if self.is_zero() || rhs.is_zero() {
            return RatPoly::default();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RatPoly::new(out)
    }

    pub fn add(&self, rhs: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let get = |p: &RatPoly, k: usize| p.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero);
        RatPoly::new((0..n).map(|k| get(self, k) + get(rhs, k)).collect())
    }
}

impl From<&IntPoly> for RatPoly {
    fn from(p: &IntPoly) -> Self {
        RatPoly::new(
            p.coeffs
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(&p(&[-1, 1]) * &p(&[1, 1]), p(&[-1, 0, 1]));
        assert_eq!(&p(&[-2, 0, 1]) + &IntPoly::zero(), p(&[-2, 0, 1]));
        assert_eq!(&p(&[-1, 0, 1]) * &p(&[-4, 0, 1]), p(&[4, 0, -5, 0, 1]));
        assert_eq!(&p(&[1, 2]) - &p(&[1, 2]), IntPoly::zero());
        assert_eq!(-p(&[1, -1]), p(&[-1, 1]));
    }

    #[test]
    fn normalization_strips_leading_zeros() {
        let q = p(&[1, 2, 0, 0]);
        assert_eq!(q.degree(), Some(1));
        assert_eq!(IntPoly::from_i64s(&[0, 0]).degree(), None);
    }

    #[test]
    fn divides_examples() {
        let f = p(&[4, 0, -5, 0, 1]);
        assert!(p(&[-1, 0, 1]).divides(&f));
        assert_eq!(p(&[-1, 0, 1]).exact_div(&f), None);
        assert_eq!(f.exact_div(&p(&[-1, 0, 1])), Some(p(&[-4, 0, 1])));
        assert!(!p(&[-2, 0, 1]).divides(&p(&[-1, 0, 1])));
        assert!(f.divides(&f));
        // Non-monic divisors: 2x+2 divides 2x^2-2 but not x^2-1 over ℤ.
        assert!(p(&[2, 2]).divides(&p(&[-2, 0, 2])));
        assert!(!p(&[2, 2]).divides(&p(&[-1, 0, 1])));
    }

    #[test]
    fn div_rem_by_zero_is_an_error() {
        assert_eq!(p(&[1, 1]).div_rem(&IntPoly::zero()), Err(PolyError::DivisionByZero));
    }

    #[test]
    fn div_rem_over_rationals() {
        let (q, r) = p(&[1, 0, 1]).div_rem(&p(&[1, 2])).unwrap();
        // x^2 + 1 = (x/2 - 1/4)(2x + 1) + 5/4
        let half = BigRational::new(1.into(), 2.into());
        let quarter = BigRational::new(1.into(), 4.into());
        assert_eq!(q.coeffs(), &[-quarter, half]);
        assert_eq!(r.coeffs(), &[BigRational::new(5.into(), 4.into())]);
    }

    #[test]
    fn multiplicity() {
        let f = p(&[-1, 1]).pow(3) * p(&[2, 1]);
        assert_eq!(p(&[-1, 1]).multiplicity_in(&f), 3);
        assert_eq!(p(&[2, 1]).multiplicity_in(&f), 1);
        assert_eq!(p(&[5, 1]).multiplicity_in(&f), 0);
    }

    #[test]
    fn gcd_examples() {
        let a = p(&[-1, 1]) * p(&[-2, 1]);
        let b = p(&[-1, 1]) * p(&[3, 1]);
        assert_eq!(gcd(&a, &b), p(&[-1, 1]));
        assert_eq!(gcd(&p(&[2, 4]), &p(&[-3, 0, 12])), p(&[1, 2]));
        assert_eq!(gcd(&IntPoly::zero(), &IntPoly::zero()), IntPoly::zero());
        assert_eq!(gcd(&p(&[1, 1]), &p(&[1])), p(&[1]));
    }

    #[test]
    fn power_sum_examples() {
        let f = p(&[4, 0, -5, 0, 1]);
        assert_eq!(f.power_sum(2).unwrap(), BigInt::from(10));
        assert_eq!(f.power_sum(1).unwrap(), BigInt::from(0));
        assert_eq!(p(&[1, -2, 1]).power_sum(1).unwrap(), BigInt::from(2));
        assert!(matches!(p(&[1, 2]).power_sum(1), Err(PolyError::NotMonic(_))));
        // Roots 1, 2, 3: p3 = 36.
        let cubic = p(&[-1, 1]) * p(&[-2, 1]) * p(&[-3, 1]);
        assert_eq!(cubic.power_sum(3).unwrap(), BigInt::from(36));
        assert_eq!(cubic.power_sum(0).unwrap(), BigInt::from(3));
    }

    #[test]
    fn csv_format() {
        let f: IntPoly = "4,0,-5,0,1".parse().unwrap();
        assert_eq!(f, p(&[4, 0, -5, 0, 1]));
        assert_eq!(f.to_csv(), "4,0,-5,0,1");
        assert_eq!(IntPoly::zero().to_csv(), "0");
        assert_eq!("0".parse::<IntPoly>().unwrap(), IntPoly::zero());
        assert!("1,,2".parse::<IntPoly>().is_err());
        assert!("".parse::<IntPoly>().is_err());
        assert_eq!(f.to_string(), "x^4 - 5x^2 + 4");
        assert_eq!(p(&[-1, -1]).to_string(), "-x - 1");
    }

    #[test]
    fn shift_and_reflect() {
        let f = p(&[-2, 0, 1]);
        assert_eq!(f.shift(&BigInt::from(1)), p(&[-1, 2, 1]));
        assert_eq!(p(&[1, 2, 3, 4]).reflect(), p(&[1, -2, 3, -4]));
    }

    #[test]
    fn sign_at_rational() {
        let f = p(&[-2, 0, 1]);
        let r = |a: i64, b: i64| BigRational::new(a.into(), b.into());
        assert_eq!(f.sign_at(&r(3, 2)), 1);
        assert_eq!(f.sign_at(&r(7, 5)), -1);
        assert_eq!(p(&[-1, 0, 4]).sign_at(&r(1, 2)), 0);
    }

    fn arb_poly(max_deg: usize) -> impl Strategy<Value = IntPoly> {
        proptest::collection::vec(-20i64..=20, 0..=max_deg + 1).prop_map(|c| IntPoly::from_i64s(&c))
    }

    proptest! {
        #[test]
        fn div_rem_reconstructs(f in arb_poly(12), g in arb_poly(12)) {
            prop_assume!(!g.is_zero());
            let (q, r) = f.div_rem(&g).unwrap();
            let back = q.mul(&RatPoly::from(&g)).add(&r);
            prop_assert_eq!(back, RatPoly::from(&f));
            prop_assert!(r.degree() < g.degree());
        }

        #[test]
        fn exact_div_of_product(f in arb_poly(6), g in arb_poly(6)) {
            prop_assume!(!g.is_zero());
            let prod = &f * &g;
            prop_assert_eq!(prod.exact_div(&g), Some(f));
        }

        #[test]
        fn gcd_divides_both(f in arb_poly(5), g in arb_poly(5), h in arb_poly(3)) {
            prop_assume!(!h.is_zero() && !(f.is_zero() && g.is_zero()));
            let a = &f * &h;
            let b = &g * &h;
            let d = gcd(&a, &b);
            prop_assert!(d.divides(&a) && d.divides(&b));
            prop_assert!(h.primitive_part().divides(&d));
        }
    }
}
