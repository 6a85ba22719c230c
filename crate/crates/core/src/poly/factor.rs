//! Squarefree decomposition and complete factorization over ℤ at small degree.
//!
//! Factorization favours auditability over speed. Every factor is confirmed
//! by exact division, and irreducibility follows from an exhaustive search
//! over candidate factors of degree at most half the remaining degree:
//!
//! * for totally real parts, candidates are subsets of the real roots; the
//!   coefficients of a candidate are enclosed in exact rational intervals
//!   and rejected as soon as some enclosure contains no integer;
//! * otherwise linear factors are taken from the real roots and the rest is
//!   searched by Kronecker's method (interpolation through divisors of
//!   values at integer points).

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::sturm::{isolate_real_roots, RootBox, SturmSequence};
use super::{gcd, IntPoly, PolyError, RatPoly};

pub const DEFAULT_DEGREE_CAP: usize = 16;

/// `content * Π factor^multiplicity`, factors primitive with positive
/// leading coefficient, sorted by degree then coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub content: BigInt,
    pub factors: Vec<(IntPoly, usize)>,
}

impl Factorization {
    pub fn product(&self) -> IntPoly {
        let prod: IntPoly = self.factors.iter().map(|(f, m)| f.pow(*m)).product();
        prod.scale(&self.content)
    }

    /// Total number of irreducible factors counted with multiplicity.
    pub fn factor_count(&self) -> usize {
        self.factors.iter().map(|(_, m)| m).sum()
    }

    pub fn is_irreducible(&self) -> bool {
        self.content.abs().is_one() && self.factors.len() == 1 && self.factors[0].1 == 1
    }
}

/// Yun's squarefree decomposition of the primitive part of `f`.
///
/// Returns pairwise coprime squarefree factors with their multiplicities,
/// ordered by multiplicity; the content of `f` is dropped.
pub fn squarefree_factor(f: &IntPoly) -> Vec<(IntPoly, usize)> {
    if f.is_constant() {
        return Vec::new();
    }
    let f = f.primitive_part();
    let fp = f.derivative();
    let a0 = gcd(&f, &fp);
    let mut b = f.exact_div(&a0).expect("gcd divides f");
    let c = fp.exact_div(&a0).expect("primitive gcd divides f'");
    let mut d = &c - &b.derivative();
    let mut out = Vec::new();
    let mut i = 1;
    while !b.is_constant() {
        let a = gcd(&b, &d);
        let next_b = b.exact_div(&a).expect("gcd divides b");
        let c = d.exact_div(&a).expect("gcd divides d");
        d = &c - &next_b.derivative();
        if !a.is_constant() {
            out.push((a, i));
        }
        b = next_b;
        i += 1;
    }
    out
}

/// Complete factorization into irreducible primitive factors.
pub fn factor_irreducible(f: &IntPoly, degree_cap: usize) -> Result<Factorization, PolyError> {
    let degree = f.degree().ok_or(PolyError::ZeroPolynomial)?;
    if degree > degree_cap {
        return Err(PolyError::DegreeAboveCap {
            degree,
            cap: degree_cap,
        });
    }
    let mut content = f.content();
    if f.leading().unwrap().is_negative() {
        content = -content;
    }
    let mut factors = Vec::new();
    for (part, m) in squarefree_factor(f) {
        for q in split_squarefree(&part) {
            factors.push((q, m));
        }
    }
    factors.sort_by(|a, b| a.0.degree().cmp(&b.0.degree()).then_with(|| a.0.cmp(&b.0)));
    Ok(Factorization { content, factors })
}

/// Irreducible factors of a primitive squarefree polynomial.
fn split_squarefree(s: &IntPoly) -> Vec<IntPoly> {
    let degree = s.degree().unwrap();
    if degree <= 1 {
        return vec![s.primitive_part()];
    }
    let sturm = SturmSequence::new(s);
    let mut roots = isolate_real_roots(s);
    let fine = BigRational::new(1.into(), 64.into());
    for r in &mut roots {
        r.refine_to(&sturm, &fine);
    }
    let totally_real = roots.len() == degree;
    let mut current = s.primitive_part();
    let mut out = Vec::new();
    let max_real_degree = if totally_real { degree / 2 } else { 1 };
    let mut min_degree = 1;
    while let Some((h, used, d)) =
        real_root_factor(&current, &mut roots, &sturm, min_degree, max_real_degree)
    {
        current = current.exact_div(&h).expect("certified by division");
        for &i in used.iter().rev() {
            roots.remove(i);
        }
        out.push(h);
        min_degree = d;
    }
    if totally_real || current.degree().unwrap_or(0) < 4 {
        // Totally real: the subset search was exhaustive. Otherwise a
        // remainder of degree < 4 without linear factors is irreducible.
        if !current.is_constant() {
            out.push(current);
        }
        return out;
    }
    let mut d = 2;
    while 2 * d <= current.degree().unwrap() {
        match find_factor_kronecker(&current, d) {
            Some(h) => {
                current = current.exact_div(&h).expect("certified by division");
                out.push(h);
            }
            None => d += 1,
        }
    }
    out.push(current);
    out
}

/// Searches subsets of the isolated real roots for a factor of degree in
/// `min_degree..=max_degree`, smallest degree first. Returns the factor,
/// the indices of its roots, and its degree.
fn real_root_factor(
    current: &IntPoly,
    roots: &mut [RootBox],
    sturm: &SturmSequence,
    min_degree: usize,
    max_degree: usize,
) -> Option<(IntPoly, Vec<usize>, usize)> {
    let n = roots.len();
    let max_degree = max_degree.min(current.degree()? / 2).min(n);
    let leads = positive_divisors(current.leading()?);
    for d in min_degree..=max_degree {
        let mut subset: Vec<usize> = (0..d).collect();
        loop {
            if let Some(h) = test_subset(current, roots, &subset, sturm, &leads) {
                return Some((h, subset, d));
            }
            if !next_combination(&mut subset, n) {
                break;
            }
        }
    }
    None
}

fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    for i in (0..k).rev() {
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

#[derive(Clone, Debug)]
struct Interval {
    lo: BigRational,
    hi: BigRational,
}

impl Interval {
    fn point(x: BigRational) -> Self {
        Interval {
            lo: x.clone(),
            hi: x,
        }
    }

    fn add(&self, o: &Interval) -> Interval {
        Interval {
            lo: &self.lo + &o.lo,
            hi: &self.hi + &o.hi,
        }
    }

    fn mul(&self, o: &Interval) -> Interval {
        let products = [
            &self.lo * &o.lo,
            &self.lo * &o.hi,
            &self.hi * &o.lo,
            &self.hi * &o.hi,
        ];
        Interval {
            lo: products.iter().min().unwrap().clone(),
            hi: products.iter().max().unwrap().clone(),
        }
    }
}

enum IntegerHits {
    None,
    One(BigInt),
    Many,
}

fn integers_in(lo: &BigRational, hi: &BigRational) -> IntegerHits {
    let a = lo.ceil().to_integer();
    let b = hi.floor().to_integer();
    match a.cmp(&b) {
        std::cmp::Ordering::Greater => IntegerHits::None,
        std::cmp::Ordering::Equal => IntegerHits::One(a),
        std::cmp::Ordering::Less => IntegerHits::Many,
    }
}

/// Decides whether `lead * Π_{i in subset} (x - root_i)` is an integer factor
/// of `current` for some admissible leading coefficient, refining the root
/// boxes until the coefficient enclosures settle the question.
fn test_subset(
    current: &IntPoly,
    roots: &mut [RootBox],
    subset: &[usize],
    sturm: &SturmSequence,
    leads: &[BigInt],
) -> Option<IntPoly> {
    loop {
        // Monic product with interval coefficients, lowest degree first.
        let mut coeffs = vec![Interval::point(BigRational::one())];
        for &i in subset {
            let neg_root = Interval {
                lo: -roots[i].hi.clone(),
                hi: -roots[i].lo.clone(),
            };
            let mut next = vec![Interval::point(BigRational::zero()); coeffs.len() + 1];
            for (k, c) in coeffs.iter().enumerate() {
                next[k + 1] = next[k + 1].add(c);
                next[k] = next[k].add(&c.mul(&neg_root));
            }
            coeffs = next;
        }
        let mut undecided = false;
        for lead in leads {
            let scale = BigRational::from_integer(lead.clone());
            let mut values = Vec::with_capacity(coeffs.len());
            let mut rejected = false;
            let mut many = false;
            for c in &coeffs {
                match integers_in(&(&c.lo * &scale), &(&c.hi * &scale)) {
                    IntegerHits::None => {
                        rejected = true;
                        break;
                    }
                    IntegerHits::One(v) => values.push(v),
                    IntegerHits::Many => many = true,
                }
            }
            if rejected {
                continue;
            }
            if many {
                undecided = true;
                continue;
            }
            let h = IntPoly::new(values);
            if h.divides(current) {
                return Some(h.primitive_part());
            }
        }
        if !undecided {
            return None;
        }
        for &i in subset {
            roots[i].bisect(sturm);
        }
    }
}

/// Positive divisors of `|n|` in ascending order; `n` must be nonzero.
pub(crate) fn positive_divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    assert!(!n.is_zero(), "divisors of zero");
    if let Some(small) = n.to_u64() {
        let mut low = Vec::new();
        let mut high = Vec::new();
        let mut d = 1u64;
        while d.saturating_mul(d) <= small {
            if small % d == 0 {
                low.push(BigInt::from(d));
                if d != small / d {
                    high.push(BigInt::from(small / d));
                }
            }
            d += 1;
        }
        low.extend(high.into_iter().rev());
        return low;
    }
    let mut low = Vec::new();
    let mut high = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        let (q, r) = n.div_rem(&d);
        if r.is_zero() {
            if q != d {
                high.push(q);
            }
            low.push(d.clone());
        }
        d += 1;
    }
    low.extend(high.into_iter().rev());
    low
}

/// Kronecker's method: a factor of `f` of degree exactly `d`, if any.
///
/// The returned factor is primitive with positive leading coefficient.
/// Exponential in `d`; intended for small degrees.
pub fn find_factor_kronecker(f: &IntPoly, d: usize) -> Option<IntPoly> {
    let f = f.primitive_part();
    let n = f.degree()?;
    if d == 0 || d >= n {
        return None;
    }
    // Candidate points 0, 1, -1, 2, -2, ... with f(a) != 0; keep the ones
    // with the fewest divisors among the first few.
    let mut pool: Vec<(BigInt, BigInt)> = Vec::new();
    let mut k = 0i64;
    while pool.len() < 3 * (d + 1) {
        let a = BigInt::from(if k % 2 == 0 { -(k / 2) } else { k / 2 + 1 });
        k += 1;
        let v = f.eval(&a);
        if v.is_zero() {
            if d == 1 {
                return Some(IntPoly::linear(a));
            }
            continue;
        }
        pool.push((a, v));
    }
    pool.sort_by_key(|(_, v)| v.abs());
    pool.truncate(d + 1);
    let points: Vec<BigInt> = pool.iter().map(|(a, _)| a.clone()).collect();
    let choices: Vec<Vec<BigInt>> = pool
        .iter()
        .enumerate()
        .map(|(i, (_, v))| {
            let divs = positive_divisors(v);
            if i == 0 {
                // Fix the sign of h(a_0); h and -h are the same factor.
                divs
            } else {
                divs.iter().flat_map(|x| [x.clone(), -x]).collect()
            }
        })
        .collect();
    let lead = f.leading().unwrap().clone();
    let mut values = Vec::with_capacity(d + 1);
    kronecker_search(&f, &lead, d, &points, &choices, &mut values)
}

fn kronecker_search(
    f: &IntPoly,
    lead: &BigInt,
    d: usize,
    points: &[BigInt],
    choices: &[Vec<BigInt>],
    values: &mut Vec<BigInt>,
) -> Option<IntPoly> {
    let i = values.len();
    if i == points.len() {
        let h = interpolate(points, values)?;
        if h.degree() != Some(d) || !lead.is_multiple_of(h.leading().unwrap()) {
            return None;
        }
        return h.divides(f).then(|| h.primitive_part());
    }
    for v in &choices[i] {
        // h(a_i) - h(a_j) is divisible by a_i - a_j for integer h.
        let consistent = (0..i).all(|j| {
            let da = &points[i] - &points[j];
            (v - &values[j]).is_multiple_of(&da)
        });
        if !consistent {
            continue;
        }
        values.push(v.clone());
        if let Some(h) = kronecker_search(f, lead, d, points, choices, values) {
            return Some(h);
        }
        values.pop();
    }
    None
}

/// Lagrange interpolation; `None` unless the result has integer coefficients.
fn interpolate(points: &[BigInt], values: &[BigInt]) -> Option<IntPoly> {
    let mut acc = RatPoly::default();
    for (i, (a, v)) in points.iter().zip(values).enumerate() {
        let mut basis = RatPoly::new(vec![BigRational::from_integer(v.clone())]);
        for (j, b) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            let denom = BigRational::from_integer(a - b);
            basis = basis.mul(&RatPoly::new(vec![
                BigRational::from_integer(-b) / &denom,
                BigRational::one() / &denom,
            ]));
        }
        acc = acc.add(&basis);
    }
    acc.to_int_poly()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn squarefree_examples() {
        assert_eq!(squarefree_factor(&p(&[1, 2, 1])), vec![(p(&[1, 1]), 1 + 1)]);
        assert_eq!(
            squarefree_factor(&p(&[-2, -3, 0, 1])),
            vec![(p(&[-2, 1]), 1), (p(&[1, 1]), 2)]
        );
        assert_eq!(
            squarefree_factor(&p(&[0, 0, 0, -4, 0, 1])),
            vec![(p(&[-4, 0, 1]), 1), (p(&[0, 1]), 3)]
        );
        assert!(squarefree_factor(&p(&[7])).is_empty());
    }

    #[test]
    fn squarefree_drops_content() {
        let f = p(&[-3, 0, 3]).scale(&BigInt::from(-2));
        assert_eq!(squarefree_factor(&f), vec![(p(&[-1, 0, 1]), 1)]);
    }

    #[test]
    fn factor_examples() {
        let f = factor_irreducible(&p(&[4, 0, -5, 0, 1]), DEFAULT_DEGREE_CAP).unwrap();
        assert_eq!(
            f.factors,
            vec![(p(&[-2, 1]), 1), (p(&[-1, 1]), 1), (p(&[1, 1]), 1), (p(&[2, 1]), 1)]
        );
        let f = factor_irreducible(&p(&[1, 0, -3, 0, 1]), DEFAULT_DEGREE_CAP).unwrap();
        assert_eq!(f.factors, vec![(p(&[-1, -1, 1]), 1), (p(&[-1, 1, 1]), 1)]);
        let f = factor_irreducible(&p(&[-2, 0, 1]), DEFAULT_DEGREE_CAP).unwrap();
        assert!(f.is_irreducible());
    }

    #[test]
    fn factor_full_charpoly_of_k14() {
        let f = factor_irreducible(&p(&[0, 0, 0, -4, 0, 1]), 16).unwrap();
        assert_eq!(f.factors, vec![(p(&[-2, 1]), 1), (p(&[0, 1]), 3), (p(&[2, 1]), 1)]);
        assert_eq!(f.product(), p(&[0, 0, 0, -4, 0, 1]));
    }

    #[test]
    fn factor_cap_and_zero() {
        let big = p(&[-1, 1]).pow(17);
        assert_eq!(
            factor_irreducible(&big, 16),
            Err(PolyError::DegreeAboveCap { degree: 17, cap: 16 })
        );
        assert_eq!(factor_irreducible(&IntPoly::zero(), 16), Err(PolyError::ZeroPolynomial));
    }

    #[test]
    fn factor_non_monic_and_content() {
        // -6 (2x - 1)(x^2 - 2)(x^2 + 1)
        let f = p(&[-1, 2]) * p(&[-2, 0, 1]) * p(&[1, 0, 1]);
        let f = f.scale(&BigInt::from(-6));
        let fac = factor_irreducible(&f, 16).unwrap();
        assert_eq!(fac.content, BigInt::from(-6));
        assert_eq!(
            fac.factors,
            vec![(p(&[-1, 2]), 1), (p(&[-2, 0, 1]), 1), (p(&[1, 0, 1]), 1)]
        );
        assert_eq!(fac.product(), f);
    }

    #[test]
    fn factor_not_totally_real_quartics() {
        // (x^2 + x + 1)(x^2 - 3): mixed real and complex roots.
        let f = p(&[1, 1, 1]) * p(&[-3, 0, 1]);
        let fac = factor_irreducible(&f, 16).unwrap();
        assert_eq!(fac.factors, vec![(p(&[-3, 0, 1]), 1), (p(&[1, 1, 1]), 1)]);
        // (x^2 + 1)(x^2 + 2) has no real roots at all.
        let g = p(&[1, 0, 1]) * p(&[2, 0, 1]);
        assert_eq!(factor_irreducible(&g, 16).unwrap().factors.len(), 2);
        // x^4 + 1 is irreducible.
        assert!(factor_irreducible(&p(&[1, 0, 0, 0, 1]), 16).unwrap().is_irreducible());
    }

    #[test]
    fn factor_degree_eight_totally_real() {
        // Minimal polynomial of 2cos(2π/17) times its conjugate octic: the
        // charpoly of P16 over (x) splits into two octics.
        let p16 = {
            let mut a = IntPoly::one();
            let mut b = IntPoly::x();
            for _ in 2..=16 {
                let c = &(&IntPoly::x() * &b) - &a;
                a = b;
                b = c;
            }
            b
        };
        let fac = factor_irreducible(&p16, 16).unwrap();
        assert_eq!(fac.product(), p16);
        let degrees: Vec<_> = fac.factors.iter().map(|(f, _)| f.degree().unwrap()).collect();
        assert_eq!(degrees, vec![8, 8]);
    }

    #[test]
    fn kronecker_finds_known_factors() {
        let f = p(&[1, 1, 1]) * p(&[-3, 0, 1]);
        let h = find_factor_kronecker(&f, 2).unwrap();
        assert!(h == p(&[1, 1, 1]) || h == p(&[-3, 0, 1]));
        assert_eq!(find_factor_kronecker(&p(&[1, 0, 0, 0, 1]), 2), None);
        assert_eq!(find_factor_kronecker(&p(&[-6, 1, 1]), 1), Some(p(&[-2, 1])));
    }

    #[test]
    fn divisors() {
        let d: Vec<_> = positive_divisors(&BigInt::from(-12))
            .into_iter()
            .map(|x| x.to_i64().unwrap())
            .collect();
        assert_eq!(d, vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(positive_divisors(&BigInt::from(1)).len(), 1);
    }

    fn monic_linear_quadratic() -> impl Strategy<Value = IntPoly> {
        prop_oneof![
            (-5i64..=5).prop_map(|a| p(&[-a, 1])),
            (-4i64..=4, -6i64..=6).prop_map(|(b, c)| p(&[c, b, 1])),
        ]
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn factorization_reconstructs_and_is_irreducible(
            parts in proptest::collection::vec((monic_linear_quadratic(), 1usize..=2), 1..4)
        ) {
            let f: IntPoly = parts.iter().map(|(q, m)| q.pow(*m)).product();
            prop_assume!(f.degree().unwrap() <= 10);
            let fac = factor_irreducible(&f, 16).unwrap();
            prop_assert_eq!(fac.product(), f.clone());
            for (q, _) in &fac.factors {
                let d = q.degree().unwrap();
                if d > 1 {
                    // No rational root, and no proper factor by exhaustive trial.
                    for k in 1..=d / 2 {
                        prop_assert!(find_factor_kronecker(q, k).is_none(), "{} has a degree {} factor", q, k);
                    }
                }
            }
        }
    }
}
