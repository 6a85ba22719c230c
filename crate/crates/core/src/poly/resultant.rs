use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::{IntPoly, PolyError, RatPoly};
use crate::matrix::IntegerMatrix;

/// Resultant of two nonzero polynomials as the determinant of their
/// Sylvester matrix.
pub fn resultant(f: &IntPoly, g: &IntPoly) -> Result<BigInt, PolyError> {
    let (Some(m), Some(n)) = (f.degree(), g.degree()) else {
        return Err(PolyError::ZeroPolynomial);
    };
    let size = m + n;
    let mut s = IntegerMatrix::zeros(size, size);
    for row in 0..n {
        for (k, c) in f.coeffs().iter().rev().enumerate() {
            s[(row, row + k)] = c.clone();
        }
    }
    for row in 0..m {
        for (k, c) in g.coeffs().iter().rev().enumerate() {
            s[(n + row, row + k)] = c.clone();
        }
    }
    Ok(s.determinant().expect("Sylvester matrix is square"))
}

/// Polynomial whose roots are all sums `α + β` with `f(α) = 0` and
/// `g(β) = 0`, counted with multiplicity.
///
/// Computes `Res_y(f(y), g(x - y))` at `deg f · deg g + 1` integer points and
/// interpolates. The result is returned primitive with positive leading
/// coefficient, so monic inputs give a monic output.
pub fn compose_sum(f: &IntPoly, g: &IntPoly) -> Result<IntPoly, PolyError> {
    let (Some(m), Some(n)) = (f.degree(), g.degree()) else {
        return Err(PolyError::ZeroPolynomial);
    };
    let points = m * n + 1;
    let reflected = g.reflect();
    let mut samples = Vec::with_capacity(points);
    for i in 0..points {
        let x0 = BigInt::from(i);
        let shifted = reflected.shift(&-&x0);
        samples.push((x0, resultant(f, &shifted)?));
    }
    let h = interpolate(&samples);
    Ok(h.primitive_part())
}

fn interpolate(points: &[(BigInt, BigInt)]) -> IntPoly {
    let mut acc = RatPoly::new(vec![]);
    for (i, (xi, yi)) in points.iter().enumerate() {
        let mut basis = RatPoly::new(vec![BigRational::from_integer(yi.clone())]);
        for (j, (xj, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            let den = BigRational::from_integer(xi - xj);
            basis = basis.mul(&RatPoly::new(vec![
                BigRational::from_integer(-xj) / &den,
                BigRational::one() / &den,
            ]));
        }
        acc = acc.add(&basis);
    }
    let coeffs = acc
        .coeffs()
        .iter()
        .map(|c| {
            debug_assert!(c.is_integer());
            c.to_integer()
        })
        .collect();
    IntPoly::new(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn resultant_examples() {
        // Res(x - a, g) = g(a)
        let g = p(&[3, -2, 1]);
        assert_eq!(resultant(&p(&[-5, 1]), &g).unwrap(), g.eval(&BigInt::from(5)));
        // Common root gives zero.
        assert!(resultant(&p(&[-1, 0, 1]), &p(&[-1, 1])).unwrap().is_zero());
        assert_eq!(resultant(&p(&[2]), &p(&[0, 0, 1])).unwrap(), BigInt::from(4));
        assert!(resultant(&IntPoly::zero(), &g).is_err());
    }

    #[test]
    fn compose_sum_examples() {
        // roots ±1 and ±1: sums -2, 0, 0, 2
        let f = p(&[-1, 0, 1]);
        assert_eq!(compose_sum(&f, &f).unwrap(), p(&[0, 0, -4, 0, 1]));
        // roots {1} and {2, 3}: sums 3, 4
        assert_eq!(compose_sum(&p(&[-1, 1]), &p(&[6, -5, 1])).unwrap(), p(&[12, -7, 1]));
        // sqrt2 + sqrt3 has minimal polynomial x^4 - 10x^2 + 1
        assert_eq!(
            compose_sum(&p(&[-2, 0, 1]), &p(&[-3, 0, 1])).unwrap(),
            p(&[1, 0, -10, 0, 1])
        );
    }

    proptest! {
        #[test]
        fn compose_sum_of_linear_factors(
            a in proptest::collection::vec(-4i64..=4, 1..4),
            b in proptest::collection::vec(-4i64..=4, 1..4),
        ) {
            let f: IntPoly = a.iter().map(|&r| IntPoly::linear(r)).product();
            let g: IntPoly = b.iter().map(|&r| IntPoly::linear(r)).product();
            let expected: IntPoly = a
                .iter()
                .flat_map(|&x| b.iter().map(move |&y| IntPoly::linear(x + y)))
                .product();
            prop_assert_eq!(compose_sum(&f, &g).unwrap(), expected);
        }
    }
}
