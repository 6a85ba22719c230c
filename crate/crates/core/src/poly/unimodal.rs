use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::IntPoly;

/// How coefficient sequences are read off a polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ProfileMode {
    /// Absolute values with structural zeros removed: the trailing zero
    /// block (a factor `x^k`) and, for a polynomial whose nonzero terms all
    /// share one exponent parity, the positions of the other parity.
    #[default]
    Structural,
    /// Signed coefficients, every position kept.
    Literal,
}

/// Coefficient profile from the highest degree down.
pub fn abs_profile(f: &IntPoly, mode: ProfileMode) -> Vec<BigInt> {
    let Some(deg) = f.degree() else {
        return Vec::new();
    };
    match mode {
        ProfileMode::Literal => f.coeffs().iter().rev().cloned().collect(),
        ProfileMode::Structural => {
            let low = (0..=deg).find(|&k| !f.coeff(k).is_zero()).unwrap_or(0);
            let parity = (low..=deg)
                .filter(|&k| !f.coeff(k).is_zero())
                .all(|k| (deg - k) % 2 == 0);
            (low..=deg)
                .rev()
                .filter(|&k| !parity || (deg - k) % 2 == 0)
                .map(|k| f.coeff(k).abs())
                .collect()
        }
    }
}

/// True when the sequence never increases after it first decreases.
pub fn is_unimodal(seq: &[BigInt]) -> bool {
    if seq.is_empty() {
        return true;
    }
    let mut i = 0;
    while i + 1 < seq.len() && seq[i] <= seq[i + 1] {
        i += 1;
    }
    while i + 1 < seq.len() && seq[i] >= seq[i + 1] {
        i += 1;
    }
    i + 1 == seq.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn b(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn profile_examples() {
        let f = IntPoly::from_i64s(&[0, 3, 0, -4, 0, 1]);
        assert_eq!(abs_profile(&f, ProfileMode::Structural), b(&[1, 4, 3]));
        assert_eq!(abs_profile(&f, ProfileMode::Literal), b(&[1, 0, -4, 0, 3, 0]));
        let g = IntPoly::from_i64s(&[2, -1, 0, 1]);
        assert_eq!(abs_profile(&g, ProfileMode::Structural), b(&[1, 0, 1, 2]));
        assert!(abs_profile(&IntPoly::zero(), ProfileMode::Structural).is_empty());
    }

    #[test]
    fn unimodality_examples() {
        assert!(is_unimodal(&b(&[1, 4, 3])));
        assert!(is_unimodal(&b(&[1, 2, 2, 1])));
        assert!(is_unimodal(&b(&[5, 3, 1])));
        assert!(is_unimodal(&b(&[])));
        assert!(!is_unimodal(&b(&[1, 2, 1, 2])));
        assert!(!is_unimodal(&b(&[2, 2, 1, 2])));
        assert!(!is_unimodal(&b(&[1, 0, -4, 0, 3, 0])));
    }

    fn has_single_peak(seq: &[i64]) -> bool {
        // An interior strict valley is the only way to fail.
        for i in 0..seq.len() {
            for j in i + 1..seq.len() {
                for k in j + 1..seq.len() {
                    if seq[j] < seq[i] && seq[j] < seq[k] {
                        return false;
                    }
                }
            }
        }
        true
    }

    proptest! {
        #[test]
        fn unimodal_matches_valley_oracle(seq in proptest::collection::vec(0i64..5, 0..8)) {
            prop_assert_eq!(is_unimodal(&b(&seq)), has_single_peak(&seq));
        }
    }
}
