//! Real-root counting and isolation with Sturm sequences.
//!
//! Intervals are half-open `(lo, hi]`, which makes counts additive over
//! adjacent intervals. All arithmetic is exact.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{sign_of, IntPoly, PolyError};

/// An endpoint of a counting interval.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bound {
    NegInf,
    At(BigRational),
    PosInf,
}

impl Bound {
    pub fn int(v: i64) -> Self {
        Bound::At(BigRational::from_integer(v.into()))
    }
}

impl From<BigRational> for Bound {
    fn from(r: BigRational) -> Self {
        Bound::At(r)
    }
}

/// Sturm sequence of the squarefree part of a polynomial.
#[derive(Debug, Clone)]
pub struct SturmSequence {
    seq: Vec<IntPoly>,
}

/// Divides by the positive content, keeping signs.
fn strip_content(p: IntPoly) -> IntPoly {
    let c = p.content();
    if c.is_zero() || c.is_one() {
        return p;
    }
    IntPoly::new(p.coeffs.iter().map(|a| a / &c).collect())
}

impl SturmSequence {
    /// Panics on the zero polynomial.
    pub fn new(f: &IntPoly) -> Self {
        assert!(!f.is_zero(), "Sturm sequence of the zero polynomial");
        let base = f.squarefree_part();
        let mut seq = vec![base.clone()];
        if !base.is_constant() {
            seq.push(strip_content(base.derivative()));
            loop {
                let n = seq.len();
                let r = seq[n - 2].positive_pseudo_rem(&seq[n - 1]);
                if r.is_zero() {
                    break;
                }
                seq.push(strip_content(-r));
            }
        }
        SturmSequence { seq }
    }

    /// The squarefree polynomial whose roots are counted.
    pub fn base(&self) -> &IntPoly {
        &self.seq[0]
    }

    fn variations(&self, at: &Bound) -> usize {
        let mut last = 0;
        let mut count = 0;
        for p in &self.seq {
            let s = match at {
                Bound::At(x) => p.sign_at(x),
                Bound::PosInf => sign_of(p.leading().unwrap()),
                Bound::NegInf => {
                    let s = sign_of(p.leading().unwrap());
                    if p.degree().unwrap() % 2 == 1 {
                        -s
                    } else {
                        s
                    }
                }
            };
            if s != 0 {
                if last != 0 && s != last {
                    count += 1;
                }
                last = s;
            }
        }
        count
    }

    /// Number of distinct real roots in `(lo, hi]`.
    pub fn count(&self, lo: &Bound, hi: &Bound) -> usize {
        let ordered = match (lo, hi) {
            (Bound::PosInf, _) | (_, Bound::NegInf) => false,
            (Bound::At(a), Bound::At(b)) => a < b,
            _ => true,
        };
        if !ordered {
            return 0;
        }
        self.variations(lo) - self.variations(hi)
    }

    pub fn count_real(&self) -> usize {
        self.count(&Bound::NegInf, &Bound::PosInf)
    }
}

/// Distinct real roots of `f` in `(lo, hi]`. `f` must be nonzero.
pub fn sturm_count(f: &IntPoly, lo: &Bound, hi: &Bound) -> usize {
    SturmSequence::new(f).count(lo, hi)
}

/// True iff every root of `f` is real.
pub fn is_totally_real(f: &IntPoly) -> bool {
    let s = SturmSequence::new(f);
    s.count_real() == s.base().degree().unwrap()
}

/// Every root lies strictly inside `(-B, B)`.
pub(crate) fn cauchy_bound(f: &IntPoly) -> BigInt {
    let lead = f.leading().expect("nonzero").abs();
    let max = f.coeffs()[..f.coeffs().len() - 1]
        .iter()
        .map(Signed::abs)
        .max()
        .unwrap_or_default();
    BigInt::one() + Integer::div_ceil(&max, &lead)
}

/// A rational interval `(lo, hi]` holding exactly one root of `poly`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootBox {
    pub poly: IntPoly,
    pub lo: BigRational,
    pub hi: BigRational,
}

impl RootBox {
    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    /// Halves the box, keeping the isolated root.
    pub fn bisect(&mut self, sturm: &SturmSequence) {
        let mid = (&self.lo + &self.hi) / BigRational::from_integer(2.into());
        if sturm.count(&Bound::At(self.lo.clone()), &Bound::At(mid.clone())) == 1 {
            self.hi = mid;
        } else {
            self.lo = mid;
        }
    }

    pub fn refine_to(&mut self, sturm: &SturmSequence, width: &BigRational) {
        while &self.width() > width {
            self.bisect(sturm);
        }
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo < x && x <= &self.hi
    }

    /// True iff the two boxes cannot hold the same real number.
    pub fn disjoint(&self, other: &RootBox) -> bool {
        self.hi <= other.lo || other.hi <= self.lo
    }
}

/// Isolating boxes for all distinct real roots of `f`, in ascending order.
pub fn isolate_real_roots(f: &IntPoly) -> Vec<RootBox> {
    let sturm = SturmSequence::new(f);
    let base = sturm.base().clone();
    if base.is_constant() {
        return Vec::new();
    }
    let b = BigRational::from_integer(cauchy_bound(&base));
    let mut out = Vec::new();
    let mut stack = vec![(-b.clone(), b)];
    // Depth-first with the right half pushed first so boxes come out ascending.
    while let Some((lo, hi)) = stack.pop() {
        let c = sturm.count(&Bound::At(lo.clone()), &Bound::At(hi.clone()));
        match c {
            0 => {}
            1 => out.push(RootBox {
                poly: base.clone(),
                lo,
                hi,
            }),
            _ => {
                let mid = (&lo + &hi) / BigRational::from_integer(2.into());
                stack.push((mid.clone(), hi));
                stack.push((lo, mid));
            }
        }
    }
    out
}

/// Boxes of width at most `precision` around the largest and the smallest
/// root of a totally real, nonconstant `f`.
pub fn isolate_extreme_roots(
    f: &IntPoly,
    precision: &BigRational,
) -> Result<(RootBox, RootBox), PolyError> {
    if f.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    if f.is_constant() {
        return Err(PolyError::Constant);
    }
    let sturm = SturmSequence::new(f);
    if sturm.count_real() != sturm.base().degree().unwrap() {
        return Err(PolyError::NotTotallyReal(f.clone()));
    }
    let base = sturm.base().clone();
    let b = BigRational::from_integer(cauchy_bound(&base));
    let two = BigRational::from_integer(2.into());
    let at = |x: &BigRational| Bound::At(x.clone());

    let (mut lo, mut hi) = (-b.clone(), b.clone());
    while sturm.count(&at(&lo), &at(&hi)) > 1 || &(&hi - &lo) > precision {
        let mid = (&lo + &hi) / &two;
        if sturm.count(&at(&mid), &at(&hi)) >= 1 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let largest = RootBox {
        poly: base.clone(),
        lo,
        hi,
    };

    let (mut lo, mut hi) = (-b.clone(), b);
    while sturm.count(&at(&lo), &at(&hi)) > 1 || &(&hi - &lo) > precision {
        let mid = (&lo + &hi) / &two;
        if sturm.count(&at(&lo), &at(&mid)) >= 1 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    let smallest = RootBox { poly: base, lo, hi };
    Ok((largest, smallest))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    fn r(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    #[test]
    fn count_examples() {
        assert_eq!(sturm_count(&p(&[-2, 0, 1]), &Bound::int(0), &Bound::PosInf), 1);
        assert_eq!(
            sturm_count(&p(&[4, 0, -5, 0, 1]), &Bound::NegInf, &Bound::PosInf),
            4
        );
        assert_eq!(sturm_count(&p(&[1, 0, 1]), &Bound::NegInf, &Bound::PosInf), 0);
    }

    #[test]
    fn half_open_endpoints() {
        // Roots 1 and 2.
        let f = p(&[2, -3, 1]);
        assert_eq!(sturm_count(&f, &Bound::int(1), &Bound::int(2)), 1);
        assert_eq!(sturm_count(&f, &Bound::int(0), &Bound::int(1)), 1);
        assert_eq!(sturm_count(&f, &Bound::int(0), &Bound::int(2)), 2);
        assert_eq!(sturm_count(&f, &Bound::int(2), &Bound::PosInf), 0);
        assert_eq!(sturm_count(&f, &Bound::int(2), &Bound::int(1)), 0);
    }

    #[test]
    fn repeated_roots_count_once() {
        // (x - 1)^3 (x + 2)
        let f = p(&[-1, 1]).pow(3) * p(&[2, 1]);
        assert_eq!(sturm_count(&f, &Bound::NegInf, &Bound::PosInf), 2);
        assert!(is_totally_real(&f));
    }

    #[test]
    fn totally_real_examples() {
        assert!(is_totally_real(&p(&[-2, 0, 1])));
        assert!(!is_totally_real(&p(&[1, 0, 1])));
        assert!(is_totally_real(&p(&[0, 3, 0, -4, 0, 1])));
        assert!(!is_totally_real(&(p(&[1, 0, 1]) * p(&[-2, 0, 1]))));
    }

    #[test]
    fn extreme_roots_examples() {
        let w = r(1, 10);
        let (big, small) = isolate_extreme_roots(&p(&[-4, 0, 1]), &w).unwrap();
        assert!(big.contains(&r(2, 1)) && small.contains(&r(-2, 1)));

        let (big, _) = isolate_extreme_roots(&p(&[-2, -3, 0, 1]), &w).unwrap();
        assert!(big.contains(&r(2, 1)));

        let (big, small) = isolate_extreme_roots(&p(&[0, 3, 0, -4, 0, 1]), &w).unwrap();
        assert!(big.width() <= w);
        // sqrt(3) in (lo, hi], and the box sits inside (1.7, 1.8).
        assert!(&big.lo * &big.lo < r(3, 1) && r(3, 1) <= &big.hi * &big.hi);
        assert!(big.lo >= r(17, 10) && big.hi <= r(18, 10));
        assert_eq!(sturm_count(&big.poly, &Bound::At(r(17, 10)), &Bound::At(r(18, 10))), 1);
        assert!(small.lo < r(0, 1) && &small.lo * &small.lo > r(3, 1));
        assert!(small.hi >= r(0, 1) || &small.hi * &small.hi <= r(3, 1));
    }

    #[test]
    fn extreme_roots_rejects_bad_input() {
        let w = r(1, 10);
        assert!(matches!(
            isolate_extreme_roots(&p(&[1, 0, 1]), &w),
            Err(PolyError::NotTotallyReal(_))
        ));
        assert_eq!(isolate_extreme_roots(&p(&[3]), &w), Err(PolyError::Constant));
    }

    #[test]
    fn isolation_is_ascending_and_complete() {
        let f = p(&[-1, 0, 1]) * p(&[-4, 0, 1]) * p(&[-2, 0, 1]);
        let boxes = isolate_real_roots(&f);
        assert_eq!(boxes.len(), 6);
        for pair in boxes.windows(2) {
            assert!(pair[0].hi <= pair[1].lo);
        }
        assert!(boxes[0].contains(&r(-2, 1)));
        assert!(boxes[5].contains(&r(2, 1)));
    }

    #[test]
    fn bisection_keeps_root() {
        let f = p(&[-2, 0, 1]);
        let sturm = SturmSequence::new(&f);
        let mut b = isolate_real_roots(&f).pop().unwrap();
        b.refine_to(&sturm, &r(1, 1000));
        assert!(&b.lo * &b.lo < r(2, 1) && r(2, 1) < &b.hi * &b.hi);
    }

    proptest! {
        // Products of linear and quadratic factors with known real roots.
        #[test]
        fn count_matches_known_roots(
            lin in proptest::collection::btree_set(-6i64..=6, 0..4),
            quad in proptest::collection::btree_set(2i64..=7, 0..3),
            extra in 0usize..2,
        ) {
            let mut f = IntPoly::one();
            for &a in &lin { f = &f * &p(&[-a, 1]); }
            // Roots keyed by (sign, square) so that sqrt(4) and 2 coincide.
            let mut roots: std::collections::BTreeSet<(i64, i64)> =
                lin.iter().map(|&a| (a.signum(), a * a)).collect();
            for &k in &quad {
                f = &f * &p(&[-k, 0, 1]);
                roots.insert((1, k));
                roots.insert((-1, k));
            }
            if extra == 1 { f = &f * &p(&[1, 0, 1]); }
            prop_assume!(!f.is_constant());
            let expected = roots.len();
            prop_assert_eq!(sturm_count(&f, &Bound::NegInf, &Bound::PosInf), expected);
            prop_assert_eq!(isolate_real_roots(&f).len(), expected);
        }
    }
}
