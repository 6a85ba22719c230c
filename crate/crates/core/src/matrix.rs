//! Dense matrices over ℤ with exact, division-free algorithms.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::poly::IntPoly;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatrixError {
    #[error("{rows}x{cols} matrix needs {expected} entries, got {got}")]
    EntryCount {
        rows: usize,
        cols: usize,
        expected: usize,
        got: usize,
    },
    #[error("operation needs a square matrix, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: {0}")]
    Dimension(String),
}

/// Row-major matrix of arbitrary-precision integers.
#[derive(Clone, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl fmt::Debug for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntegerMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl IntegerMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Result<Self, MatrixError> {
        if entries.len() != rows * cols {
            return Err(MatrixError::EntryCount {
                rows,
                cols,
                expected: rows * cols,
                got: entries.len(),
            });
        }
        Ok(IntegerMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntegerMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Panics on ragged rows.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        IntegerMatrix {
            rows: r,
            cols: c,
            entries: rows.iter().flatten().map(|&v| BigInt::from(v)).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, r: usize) -> &[BigInt] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    fn require_square(&self) -> Result<usize, MatrixError> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(MatrixError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        IntegerMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|a| a * c).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, MatrixError> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(MatrixError::Dimension(format!(
                "cannot add {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(IntegerMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn mul(&self, other: &Self) -> Result<Self, MatrixError> {
        if self.cols != other.rows {
            return Err(MatrixError::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Assembles a block matrix; every block row must agree on heights and
    /// every block column on widths.
    pub fn block(blocks: &[Vec<&IntegerMatrix>]) -> Result<Self, MatrixError> {
        let heights: Vec<usize> = blocks
            .iter()
            .map(|row| row.first().map_or(0, |b| b.rows))
            .collect();
        let widths: Vec<usize> = blocks
            .first()
            .map(|row| row.iter().map(|b| b.cols).collect())
            .unwrap_or_default();
        for (bi, row) in blocks.iter().enumerate() {
            if row.len() != widths.len() {
                return Err(MatrixError::Dimension(format!(
                    "block row {bi} has {} blocks, expected {}",
                    row.len(),
                    widths.len()
                )));
            }
            for (bj, b) in row.iter().enumerate() {
                if b.rows != heights[bi] || b.cols != widths[bj] {
                    return Err(MatrixError::Dimension(format!(
                        "block ({bi}, {bj}) is {}x{}, expected {}x{}",
                        b.rows, b.cols, heights[bi], widths[bj]
                    )));
                }
            }
        }
        let rows: usize = heights.iter().sum();
        let cols: usize = widths.iter().sum();
        let mut out = Self::zeros(rows, cols);
        let mut r0 = 0;
        for (bi, row) in blocks.iter().enumerate() {
            let mut c0 = 0;
            for (bj, b) in row.iter().enumerate() {
                for i in 0..b.rows {
                    for j in 0..b.cols {
                        out[(r0 + i, c0 + j)] = b[(i, j)].clone();
                    }
                }
                c0 += widths[bj];
            }
            r0 += heights[bi];
        }
        Ok(out)
    }

    /// `p(M)` by Horner's rule.
    pub fn eval_poly(&self, p: &IntPoly) -> Result<Self, MatrixError> {
        let n = self.require_square()?;
        let mut acc = Self::zeros(n, n);
        for c in p.coeffs().iter().rev() {
            acc = acc.mul(self)?;
            for i in 0..n {
                acc[(i, i)] += c;
            }
        }
        Ok(acc)
    }

    /// Fraction-free (Bareiss) row echelon form; returns the rank and the
    /// sign of the row permutation together with the reduced entries.
    fn bareiss(&self) -> (usize, bool, Vec<BigInt>) {
        let (rows, cols) = (self.rows, self.cols);
        let mut a = self.entries.clone();
        let mut prev = BigInt::one();
        let mut r = 0;
        let mut negated = false;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| !a[i * cols + c].is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..cols {
                    a.swap(p * cols + j, r * cols + j);
                }
                negated = !negated;
            }
            let pivot = a[r * cols + c].clone();
            for i in r + 1..rows {
                let factor = a[i * cols + c].clone();
                for j in c + 1..cols {
                    let v = &pivot * &a[i * cols + j] - &factor * &a[r * cols + j];
                    a[i * cols + j] = v / &prev;
                }
                a[i * cols + c] = BigInt::zero();
            }
            prev = pivot;
            r += 1;
        }
        (r, negated, a)
    }

    pub fn rank(&self) -> usize {
        self.bareiss().0
    }

    /// Dimension of the rational null space (right kernel).
    pub fn kernel_dimension(&self) -> Result<usize, MatrixError> {
        self.require_square()?;
        Ok(self.cols - self.rank())
    }

    pub fn determinant(&self) -> Result<BigInt, MatrixError> {
        let n = self.require_square()?;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let (rank, negated, a) = self.bareiss();
        if rank < n {
            return Ok(BigInt::zero());
        }
        let d = a[n * n - 1].clone();
        Ok(if negated { -d } else { d })
    }

    /// Characteristic polynomial `det(xI - M)` by Berkowitz's division-free
    /// algorithm. Sparse rows keep adjacency matrices cheap.
    pub fn charpoly(&self) -> Result<IntPoly, MatrixError> {
        let n = self.require_square()?;
        if n == 0 {
            return Ok(IntPoly::one());
        }
        let sparse: Vec<Vec<(usize, BigInt)>> = (0..n)
            .map(|i| {
                self.row(i)
                    .iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .map(|(j, v)| (j, v.clone()))
                    .collect()
            })
            .collect();
        // Coefficients highest degree first.
        let mut c = vec![BigInt::one(), -self[(0, 0)].clone()];
        for r in 1..n {
            // q_0 = 1, q_1 = -a_rr, q_{k+2} = -R A_r^k C.
            let mut q = Vec::with_capacity(r + 2);
            q.push(BigInt::one());
            q.push(-self[(r, r)].clone());
            let mut v: Vec<BigInt> = (0..r).map(|i| self[(i, r)].clone()).collect();
            for k in 0..r {
                let dot: BigInt = sparse[r]
                    .iter()
                    .filter(|(j, _)| *j < r)
                    .map(|(j, a)| a * &v[*j])
                    .sum();
                q.push(-dot);
                if k + 1 < r {
                    v = (0..r)
                        .map(|i| {
                            sparse[i]
                                .iter()
                                .filter(|(j, _)| *j < r)
                                .map(|(j, a)| a * &v[*j])
                                .sum()
                        })
                        .collect();
                }
            }
            let mut next = vec![BigInt::zero(); r + 2];
            for (i, slot) in next.iter_mut().enumerate() {
                for (j, cj) in c.iter().enumerate().take(i + 1) {
                    if !cj.is_zero() {
                        *slot += &q[i - j] * cj;
                    }
                }
            }
            c = next;
        }
        c.reverse();
        Ok(IntPoly::new(c))
    }

    /// Upper bound on `log2 |det|` from Hadamard's inequality, or `None`
    /// when some row is zero (so the determinant is zero).
    pub fn hadamard_bits(&self) -> Option<u64> {
        let mut bits = 0u64;
        for i in 0..self.rows {
            let sq: BigInt = self.row(i).iter().map(|a| a * a).sum();
            if sq.is_zero() {
                return None;
            }
            let mut norm = sq.sqrt();
            if &norm * &norm < sq {
                norm += 1;
            }
            bits += norm.bits();
        }
        Some(bits)
    }

    fn residues(&self, p: u64) -> Vec<u64> {
        let pb = BigInt::from(p);
        self.entries
            .iter()
            .map(|a| match a.to_i64() {
                Some(v) => v.rem_euclid(p as i64) as u64,
                None => a.mod_floor(&pb).to_u64().unwrap(),
            })
            .collect()
    }

    /// Rank over GF(p) for a prime `p < 2^31`.
    pub fn rank_mod(&self, p: u64) -> usize {
        modular::rank(self.residues(p), self.rows, self.cols, p)
    }

    /// Exact singularity test by reduction modulo enough primes to exceed
    /// the Hadamard bound. Stops at the first prime with nonzero determinant.
    pub fn is_singular_multimodular(&self) -> Result<bool, MatrixError> {
        let n = self.require_square()?;
        if n == 0 {
            return Ok(false);
        }
        let Some(bits) = self.hadamard_bits() else {
            return Ok(true);
        };
        // Each prime exceeds 2^30.
        let count = (bits / 30 + 1) as usize;
        let primes = modular::primes_below_2_31(count);
        let nonsingular = primes
            .par_iter()
            .any(|&p| modular::rank(self.residues(p), n, n, p) == n);
        Ok(!nonsingular)
    }

    /// Exact singularity test; Bareiss for small matrices, multimodular
    /// reduction otherwise.
    pub fn is_singular(&self) -> Result<bool, MatrixError> {
        let n = self.require_square()?;
        if n <= BAREISS_LIMIT {
            Ok(self.rank() < n)
        } else {
            self.is_singular_multimodular()
        }
    }

    /// Certified bounds `lower ≤ nullity ≤ upper` without exact elimination:
    /// the upper bound comes from ranks modulo a few primes, the lower bound
    /// is 1 when the matrix is certified singular and 0 otherwise.
    pub fn nullity_bounds(&self, primes: usize) -> Result<(usize, usize), MatrixError> {
        let n = self.require_square()?;
        let rank_lower = modular::primes_below_2_31(primes)
            .par_iter()
            .map(|&p| self.rank_mod(p))
            .max()
            .unwrap_or(0);
        let lower = usize::from(self.is_singular()?);
        Ok((lower, n - rank_lower))
    }
}

/// Matrices up to this order use exact Bareiss elimination for singularity.
pub const BAREISS_LIMIT: usize = 64;

impl std::ops::Index<(usize, usize)> for IntegerMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntegerMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.entries[i * self.cols + j]
    }
}

mod modular {
    /// Barrett reduction for a fixed modulus below 2^31.
    #[derive(Clone, Copy)]
    struct Barrett {
        p: u64,
        m: u64,
    }

    impl Barrett {
        fn new(p: u64) -> Self {
            Barrett {
                p,
                m: u64::MAX / p,
            }
        }

        #[inline(always)]
        fn reduce(self, x: u64) -> u64 {
            let q = ((x as u128 * self.m as u128) >> 64) as u64;
            let mut r = x - q * self.p;
            while r >= self.p {
                r -= self.p;
            }
            r
        }
    }

    fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
        let mut acc = 1u64;
        b %= p;
        while e > 0 {
            if e & 1 == 1 {
                acc = ((acc as u128 * b as u128) % p as u128) as u64;
            }
            b = ((b as u128 * b as u128) % p as u128) as u64;
            e >>= 1;
        }
        acc
    }

    fn is_prime(n: u64) -> bool {
        if n < 2 {
            return false;
        }
        for sp in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
            if n.is_multiple_of(sp) {
                return n == sp;
            }
        }
        let mut d = n - 1;
        let mut s = 0;
        while d.is_multiple_of(2) {
            d /= 2;
            s += 1;
        }
        // Deterministic for n < 3.3e24 with these bases.
        'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
            let mut x = pow_mod(a, d, n);
            if x == 1 || x == n - 1 {
                continue;
            }
            for _ in 1..s {
                x = ((x as u128 * x as u128) % n as u128) as u64;
                if x == n - 1 {
                    continue 'witness;
                }
            }
            return false;
        }
        true
    }

    /// The `count` largest primes below 2^31, descending.
    pub(super) fn primes_below_2_31(count: usize) -> Vec<u64> {
        let mut out = Vec::with_capacity(count);
        let mut n = (1u64 << 31) - 1;
        while out.len() < count {
            if is_prime(n) {
                out.push(n);
            }
            n -= 2;
        }
        out
    }

    pub(super) fn rank(mut a: Vec<u64>, rows: usize, cols: usize, p: u64) -> usize {
        let red = Barrett::new(p);
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(piv) = (r..rows).find(|&i| a[i * cols + c] != 0) else {
                continue;
            };
            if piv != r {
                for j in c..cols {
                    a.swap(piv * cols + j, r * cols + j);
                }
            }
            let inv = pow_mod(a[r * cols + c], p - 2, p);
            for j in c..cols {
                a[r * cols + j] = red.reduce(a[r * cols + j] * inv);
            }
            let (head, tail) = a.split_at_mut((r + 1) * cols);
            let pivot_row = &head[r * cols..];
            for row in tail.chunks_exact_mut(cols) {
                let f = row[c];
                if f == 0 {
                    continue;
                }
                let f = p - f;
                for j in c..cols {
                    row[j] = red.reduce(row[j] + f * pivot_row[j]);
                }
            }
            r += 1;
        }
        r
    }

    #[cfg(test)]
    mod tests {
        use super::*;

        #[test]
        fn primes_are_prime_and_large() {
            let ps = primes_below_2_31(5);
            assert_eq!(ps[0], 2_147_483_647);
            assert!(ps.iter().all(|&p| p > 1 << 30 && is_prime(p)));
            assert!(!is_prime(2_147_483_649));
            assert!(is_prime(97) && !is_prime(91));
        }

        #[test]
        fn barrett_matches_remainder() {
            let p = 2_147_483_629;
            let red = Barrett::new(p);
            for x in [0u64, 1, p - 1, p, p + 1, (p - 1) * (p - 1) + p - 1, u64::MAX / 2] {
                assert_eq!(red.reduce(x), x % p);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn m(rows: &[Vec<i64>]) -> IntegerMatrix {
        IntegerMatrix::from_rows(rows)
    }

    #[test]
    fn kernel_dimension_examples() {
        assert_eq!(IntegerMatrix::zeros(3, 3).kernel_dimension().unwrap(), 3);
        assert_eq!(IntegerMatrix::identity(3).kernel_dimension().unwrap(), 0);
        let k14 = m(&[
            vec![0, 1, 1, 1, 1],
            vec![1, 0, 0, 0, 0],
            vec![1, 0, 0, 0, 0],
            vec![1, 0, 0, 0, 0],
            vec![1, 0, 0, 0, 0],
        ]);
        assert_eq!(k14.kernel_dimension().unwrap(), 3);
        assert!(matches!(
            IntegerMatrix::zeros(2, 3).kernel_dimension(),
            Err(MatrixError::NotSquare { .. })
        ));
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(m(&[vec![2, 1], vec![1, 3]]).determinant().unwrap(), BigInt::from(5));
        assert_eq!(m(&[vec![0, 1], vec![1, 0]]).determinant().unwrap(), BigInt::from(-1));
        assert_eq!(
            m(&[vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 10]]).determinant().unwrap(),
            BigInt::from(-3)
        );
        assert_eq!(IntegerMatrix::zeros(0, 0).determinant().unwrap(), BigInt::one());
    }

    #[test]
    fn rank_with_skipped_columns() {
        let a = m(&[vec![0, 1, 2], vec![0, 2, 4], vec![0, 0, 1]]);
        assert_eq!(a.rank(), 2);
        let b = m(&[vec![1, 2, 3, 4], vec![2, 4, 6, 8]]);
        assert_eq!(b.rank(), 1);
    }

    #[test]
    fn charpoly_small() {
        assert_eq!(
            m(&[vec![0, 1], vec![1, 0]]).charpoly().unwrap(),
            IntPoly::from_i64s(&[-1, 0, 1])
        );
        let a = m(&[vec![2, 1, 0], vec![-1, 3, 4], vec![5, 0, 1]]);
        // det(xI - A) = x^3 - 6x^2 + 12x - 27
        assert_eq!(a.charpoly().unwrap(), IntPoly::from_i64s(&[-27, 12, -6, 1]));
        assert_eq!(IntegerMatrix::zeros(0, 0).charpoly().unwrap(), IntPoly::one());
    }

    #[test]
    fn eval_poly_horner() {
        let a = m(&[vec![0, 1], vec![1, 0]]);
        let p = IntPoly::from_i64s(&[-1, 0, 1]);
        assert_eq!(a.eval_poly(&p).unwrap(), IntegerMatrix::zeros(2, 2));
    }

    #[test]
    fn block_assembly() {
        let a = m(&[vec![1]]);
        let f = m(&[vec![2, 3]]);
        let e = m(&[vec![4], vec![5]]);
        let b = m(&[vec![6, 7], vec![8, 9]]);
        let full = IntegerMatrix::block(&[vec![&a, &f], vec![&e, &b]]).unwrap();
        assert_eq!(full, m(&[vec![1, 2, 3], vec![4, 6, 7], vec![5, 8, 9]]));
        assert!(IntegerMatrix::block(&[vec![&a, &e]]).is_err());
    }

    fn random_matrix(rng: &mut ChaCha8Rng, n: usize, rank: usize) -> IntegerMatrix {
        // Product of n×rank and rank×n factors has rank ≤ `rank`.
        let l = IntegerMatrix::new(n, rank, (0..n * rank).map(|_| rng.gen_range(-3..=3).into()).collect()).unwrap();
        let r = IntegerMatrix::new(rank, n, (0..n * rank).map(|_| rng.gen_range(-3..=3).into()).collect()).unwrap();
        l.mul(&r).unwrap()
    }

    #[test]
    fn modular_and_bareiss_agree() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for trial in 0..200 {
            let n = rng.gen_range(1..=9);
            let rank = rng.gen_range(0..=n);
            let a = random_matrix(&mut rng, n, rank);
            let exact = a.rank() < n;
            assert_eq!(a.is_singular_multimodular().unwrap(), exact, "trial {trial}: {a:?}");
            let (lo, hi) = a.nullity_bounds(3).unwrap();
            let nullity = a.kernel_dimension().unwrap();
            assert!(lo <= nullity && nullity <= hi);
            assert_eq!(hi, nullity, "three large primes resolve small ranks");
        }
    }

    #[test]
    fn multimodular_handles_large_entries() {
        // Determinant 2^62 * 3 ≠ 0 is invisible to a single 31-bit prime
        // only if that prime divides it, which none does; the zero case
        // needs the full bound.
        let big = BigInt::from(1u64 << 62);
        let a = IntegerMatrix::new(2, 2, vec![big.clone(), big.clone(), big.clone(), big * 4]).unwrap();
        assert!(!a.is_singular_multimodular().unwrap());
        let s = IntegerMatrix::new(2, 2, vec![BigInt::from(3), BigInt::from(6), BigInt::from(1), BigInt::from(2)]).unwrap();
        assert!(s.is_singular_multimodular().unwrap());
    }

    #[test]
    fn determinant_matches_charpoly_constant_term() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..100 {
            let n = rng.gen_range(1..=6);
            let a = random_matrix(&mut rng, n, n);
            let cp = a.charpoly().unwrap();
            let det = a.determinant().unwrap();
            let sign = if n % 2 == 0 { BigInt::one() } else { -BigInt::one() };
            assert_eq!(cp.coeff(0), sign * det);
            assert_eq!(cp.coeff(n - 1), -(0..n).map(|i| a[(i, i)].clone()).sum::<BigInt>());
        }
    }
}
