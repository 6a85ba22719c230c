use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, One};

use super::{IntPoly, RatPoly};

/// Arithmetic in `Q[x]/(mu)` for a monic irreducible `mu`, with elements
/// stored as coefficient vectors of length `deg mu`, lowest power first.
#[derive(Debug, Clone)]
pub struct NumberField {
    modulus: IntPoly,
    degree: usize,
}

impl NumberField {
    /// Panics unless `mu` is monic of degree at least 1.
    pub fn new(mu: &IntPoly) -> Self {
        let degree = mu.degree().expect("nonzero modulus");
        assert!(degree >= 1 && mu.is_monic(), "modulus must be monic and nonconstant");
        NumberField {
            modulus: mu.clone(),
            degree,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    fn reduce<T: Clone + Num + From<BigInt>>(&self, mut c: Vec<T>) -> Vec<T> {
        let d = self.degree;
        let m: Vec<T> = self
            .modulus
            .coeffs()
            .iter()
            .map(|b| T::from(b.clone()))
            .collect();
        while c.len() > d {
            let top = c.pop().unwrap();
            if top.is_zero() {
                continue;
            }
            let shift = c.len() - d;
            for (i, mi) in m.iter().take(d).enumerate() {
                let v = c[shift + i].clone() - top.clone() * mi.clone();
                c[shift + i] = v;
            }
        }
        c.resize(d, T::zero());
        c
    }

    pub fn reduce_int(&self, p: &IntPoly) -> Vec<BigInt> {
        self.reduce(p.coeffs().to_vec())
    }

    pub fn mul<T: Clone + Num + From<BigInt>>(&self, a: &[T], b: &[T]) -> Vec<T> {
        let mut out = vec![T::zero(); a.len() + b.len()];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                out[i + j] = out[i + j].clone() + x.clone() * y.clone();
            }
        }
        self.reduce(out)
    }

    /// The class of `x`.
    pub fn generator<T: Clone + Num + From<BigInt>>(&self) -> Vec<T> {
        self.reduce(vec![T::zero(), T::one()])
    }

    /// Multiplicative inverse, or `None` for zero.
    pub fn inverse(&self, a: &[BigInt]) -> Option<Vec<BigRational>> {
        let a = RatPoly::from(&IntPoly::new(a.to_vec()));
        if a.is_zero() {
            return None;
        }
        // Extended Euclid: track s with s * a ≡ r (mod mu).
        let (mut r0, mut r1) = (RatPoly::from(&self.modulus), a);
        let (mut s0, mut s1) = (RatPoly::new(vec![]), RatPoly::new(vec![BigRational::one()]));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1).expect("nonzero divisor");
            let s = s0.add(&negate(&q.mul(&s1)));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
        }
        if r0.degree() != Some(0) {
            return None;
        }
        let c = r0.coeffs()[0].clone();
        let coeffs: Vec<BigRational> = s0.coeffs().iter().map(|v| v / &c).collect();
        Some(self.reduce(coeffs))
    }
}

fn negate(p: &RatPoly) -> RatPoly {
    RatPoly::new(p.coeffs().iter().map(|c| -c).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn golden_ratio_field() {
        // x^2 = x + 1
        let k = NumberField::new(&IntPoly::from_i64s(&[-1, -1, 1]));
        let phi: Vec<BigInt> = k.generator();
        assert_eq!(k.mul(&phi, &phi), vec![BigInt::one(), BigInt::one()]);
        // 1/phi = phi - 1
        assert_eq!(k.inverse(&phi).unwrap(), vec![r(-1, 1), r(1, 1)]);
        assert!(k.inverse(&[BigInt::zero(), BigInt::zero()]).is_none());
    }

    #[test]
    fn inverse_round_trips() {
        let k = NumberField::new(&IntPoly::from_i64s(&[2, -4, -6, 0, 1]));
        let a: Vec<BigInt> = [3, -1, 0, 2].iter().map(|&v| BigInt::from(v)).collect();
        let inv = k.inverse(&a).unwrap();
        let a_rat: Vec<BigRational> = a.iter().cloned().map(BigRational::from_integer).collect();
        let one = k.mul(&a_rat, &inv);
        assert_eq!(one, vec![r(1, 1), r(0, 1), r(0, 1), r(0, 1)]);
    }

    #[test]
    fn rational_field() {
        let k = NumberField::new(&IntPoly::from_i64s(&[-3, 1]));
        let x: Vec<BigInt> = k.generator();
        assert_eq!(x, vec![BigInt::from(3)]);
        assert_eq!(k.inverse(&x).unwrap(), vec![r(1, 3)]);
    }
}
