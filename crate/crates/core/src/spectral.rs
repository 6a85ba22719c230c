//! Exact spectral invariants of graphs.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;
use crate::matrix::{IntegerMatrix, MatrixError, BAREISS_LIMIT};
use crate::poly::{
    factor_irreducible, gcd, isolate_extreme_roots, sturm_count, Bound, IntPoly, PolyError,
    RootBox, SturmSequence, DEFAULT_DEGREE_CAP,
};

/// Largest order for which exact-mode checks compute a full characteristic
/// polynomial.
pub const DEFAULT_EXACT_ORDER_CAP: usize = 160;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpectralError {
    #[error("polynomial {0} is not monic")]
    NotMonic(IntPoly),
    #[error("polynomial {0} must have degree at least 1")]
    Constant(IntPoly),
    #[error("polynomial {0} is reducible; membership needs an irreducible factor")]
    Reducible(IntPoly),
    #[error("exact mode is capped at order {cap}, graph has order {order}")]
    OrderAboveCap { order: usize, cap: usize },
    #[error("polynomial has degree {degree} but the order is {order}")]
    DegreeMismatch { degree: usize, order: usize },
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Caps for exact computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub exact_order_cap: usize,
    pub factor_degree_cap: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            exact_order_cap: DEFAULT_EXACT_ORDER_CAP,
            factor_degree_cap: DEFAULT_DEGREE_CAP,
        }
    }
}

pub fn adjacency_matrix(g: &Graph) -> IntegerMatrix {
    let n = g.order();
    let mut m = IntegerMatrix::zeros(n, n);
    for (u, v) in g.edges() {
        m[(u, v)] = BigInt::one();
        m[(v, u)] = BigInt::one();
    }
    m
}

/// `det(xI - A(g))`.
pub fn charpoly(g: &Graph) -> IntPoly {
    adjacency_matrix(g)
        .charpoly()
        .expect("adjacency matrices are square")
}

/// Characteristic polynomial of a forest through its matching polynomial,
/// by dynamic programming over rooted subtrees. `None` if `g` has a cycle.
pub fn forest_charpoly(g: &Graph) -> Option<IntPoly> {
    if !g.is_forest() {
        return None;
    }
    let n = g.order();
    let x = IntPoly::x();
    let mut with_root = vec![IntPoly::one(); n];
    let mut without_root = vec![IntPoly::one(); n];
    let mut visited = vec![false; n];
    let mut result = IntPoly::one();
    for root in 0..n {
        if visited[root] {
            continue;
        }
        let mut order = Vec::new();
        let mut parent = vec![usize::MAX; n];
        let mut stack = vec![root];
        visited[root] = true;
        while let Some(v) = stack.pop() {
            order.push(v);
            for &w in g.neighbors(v) {
                if !visited[w] {
                    visited[w] = true;
                    parent[w] = v;
                    stack.push(w);
                }
            }
        }
        for &v in order.iter().rev() {
            let children: Vec<usize> = g
                .neighbors(v)
                .iter()
                .copied()
                .filter(|&c| parent[c] == v)
                .collect();
            let prod: IntPoly = children.iter().map(|&c| with_root[c].clone()).product();
            let mut m = &x * &prod;
            for (i, &c) in children.iter().enumerate() {
                let others: IntPoly = children
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != i)
                    .map(|(_, &d)| with_root[d].clone())
                    .product();
                m = m - &without_root[c] * &others;
            }
            without_root[v] = prod;
            with_root[v] = m;
        }
        result = &result * &with_root[root];
    }
    Some(result)
}

/// Matching polynomial `Σ (-1)^k m_k x^(n-2k)` by edge deletion with
/// memoization and component splitting.
pub fn matching_poly(g: &Graph) -> IntPoly {
    let mut memo = HashMap::new();
    matching_rec(g, &mut memo)
}

type MatchKey = (usize, Vec<(usize, usize)>);

fn matching_rec(g: &Graph, memo: &mut HashMap<MatchKey, IntPoly>) -> IntPoly {
    let n = g.order();
    if g.edge_count() == 0 {
        return IntPoly::monomial(BigInt::one(), n);
    }
    let key = (n, g.edges().collect::<Vec<_>>());
    if let Some(p) = memo.get(&key) {
        return p.clone();
    }
    let components = g.components();
    let result = if components.len() > 1 {
        components
            .iter()
            .map(|c| matching_rec(&g.induced(c), memo))
            .product()
    } else {
        let u = (0..n)
            .filter(|&v| g.degree(v) > 0)
            .min_by_key(|&v| g.degree(v))
            .unwrap();
        let v = g.neighbors(u)[0];
        let deleted = g.toggle_edge(u, v).expect("edge endpoints are valid");
        let rest: Vec<usize> = (0..n).filter(|&w| w != u && w != v).collect();
        matching_rec(&deleted, memo) - matching_rec(&g.induced(&rest), memo)
    };
    memo.insert(key, result.clone());
    result
}

/// `mu(A(g))` by Horner's rule, multiplying by the sparse adjacency
/// structure instead of a dense matrix.
pub fn poly_of_adjacency(g: &Graph, mu: &IntPoly) -> IntegerMatrix {
    let n = g.order();
    let mut acc = IntegerMatrix::zeros(n, n);
    for c in mu.coeffs().iter().rev() {
        let mut next = IntegerMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let mut s = BigInt::zero();
                for &k in g.neighbors(j) {
                    s += &acc[(i, k)];
                }
                next[(i, j)] = s;
            }
            next[(i, i)] += c;
        }
        acc = next;
    }
    acc
}

fn require_monic(mu: &IntPoly) -> Result<usize, SpectralError> {
    match mu.degree() {
        None | Some(0) => Err(SpectralError::Constant(mu.clone())),
        Some(d) if mu.is_monic() => Ok(d),
        Some(_) => Err(SpectralError::NotMonic(mu.clone())),
    }
}

/// Nullity of `mu(A(g))` when cheaply exact, otherwise a certified lower
/// bound of 0 or 1 from a singularity test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Nullity {
    Exact(usize),
    AtLeast(usize),
}

pub fn root_nullity(g: &Graph, mu: &IntPoly) -> Result<Nullity, SpectralError> {
    require_monic(mu)?;
    let m = poly_of_adjacency(g, mu);
    if g.order() <= BAREISS_LIMIT {
        Ok(Nullity::Exact(m.kernel_dimension()?))
    } else {
        Ok(Nullity::AtLeast(usize::from(m.is_singular()?)))
    }
}

/// Whether the irreducible monic `mu` divides `charpoly(g)`.
///
/// For symmetric `A` and irreducible `mu`, the nullity of `mu(A)` is
/// `deg mu` times the multiplicity of any root of `mu`, so a single
/// kernel vector already certifies membership.
pub fn contains_root(g: &Graph, mu: &IntPoly) -> Result<bool, SpectralError> {
    let d = require_monic(mu)?;
    if !factor_irreducible(mu, d.max(DEFAULT_DEGREE_CAP))?.is_irreducible() {
        return Err(SpectralError::Reducible(mu.clone()));
    }
    Ok(match root_nullity(g, mu)? {
        Nullity::Exact(k) => k >= d,
        Nullity::AtLeast(k) => k >= 1,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DivisibilityMode {
    Exact,
    Kernel,
}

/// Strength of a divisibility verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Certification {
    DoesNotDivide,
    /// Every root is present; multiplicities beyond one are unproven.
    RootsPresent,
    /// Divides with full multiplicity.
    ExactDivides,
}

impl fmt::Display for Certification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Certification::DoesNotDivide => "does-not-divide",
            Certification::RootsPresent => "roots-present",
            Certification::ExactDivides => "exact-divides",
        })
    }
}

/// Per-factor evidence gathered in kernel mode.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorEvidence {
    pub factor: IntPoly,
    pub required: usize,
    pub nullity: Nullity,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisibilityVerdict {
    pub level: Certification,
    pub mode: DivisibilityMode,
    pub evidence: Vec<FactorEvidence>,
}

impl DivisibilityVerdict {
    pub fn holds(&self) -> bool {
        self.level != Certification::DoesNotDivide
    }
}

/// Tests `f | charpoly(g)`.
///
/// Exact mode divides the full characteristic polynomial. Forests use the
/// matching-polynomial recursion at any order; other graphs are limited to
/// `limits.exact_order_cap`. Kernel mode factors `f` and inspects the
/// nullity of `mu(A)` for each irreducible factor `mu`.
pub fn spectrum_divides(
    f: &IntPoly,
    g: &Graph,
    mode: DivisibilityMode,
    limits: &Limits,
) -> Result<DivisibilityVerdict, SpectralError> {
    if f.degree().is_none() {
        return Err(SpectralError::Constant(f.clone()));
    }
    if !f.is_monic() {
        return Err(SpectralError::NotMonic(f.clone()));
    }
    match mode {
        DivisibilityMode::Exact => {
            let p = match forest_charpoly(g) {
                Some(p) => p,
                None if g.order() > limits.exact_order_cap => {
                    return Err(SpectralError::OrderAboveCap {
                        order: g.order(),
                        cap: limits.exact_order_cap,
                    })
                }
                None => charpoly(g),
            };
            let level = if f.divides(&p) {
                Certification::ExactDivides
            } else {
                Certification::DoesNotDivide
            };
            Ok(DivisibilityVerdict {
                level,
                mode,
                evidence: Vec::new(),
            })
        }
        DivisibilityMode::Kernel => {
            let factors = factor_irreducible(f, limits.factor_degree_cap)?;
            let mut level = Certification::ExactDivides;
            let mut evidence = Vec::new();
            for (mu, m) in factors.factors {
                let d = mu.degree().unwrap();
                let nullity = root_nullity(g, &mu)?;
                let factor_level = match nullity {
                    Nullity::Exact(k) if k >= d * m => Certification::ExactDivides,
                    Nullity::Exact(_) => Certification::DoesNotDivide,
                    Nullity::AtLeast(k) if k >= 1 && m == 1 => Certification::ExactDivides,
                    Nullity::AtLeast(k) if k >= 1 => Certification::RootsPresent,
                    Nullity::AtLeast(_) => Certification::DoesNotDivide,
                };
                level = level.min(factor_level);
                evidence.push(FactorEvidence {
                    factor: mu,
                    required: m,
                    nullity,
                });
            }
            Ok(DivisibilityVerdict {
                level,
                mode,
                evidence,
            })
        }
    }
}

/// One condition of the necessary-condition report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Condition {
    pub item: u8,
    pub statement: &'static str,
    pub passed: bool,
    pub witness: String,
}

/// Exact evaluation of the five necessary conditions for a polynomial to be
/// the characteristic polynomial of a graph of order `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NecessaryReport {
    pub order: usize,
    pub power_sum_1: BigInt,
    pub power_sum_2: BigInt,
    pub edge_bound: BigInt,
    pub roots_above_order_bound: usize,
    pub largest_root: RootBox,
    pub smallest_root: RootBox,
    pub conditions: Vec<Condition>,
}

impl NecessaryReport {
    pub fn all_pass(&self) -> bool {
        self.conditions.iter().all(|c| c.passed)
    }
}

impl fmt::Display for NecessaryReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.conditions {
            writeln!(
                f,
                "item {}: {} [{}] {}",
                c.item,
                if c.passed { "pass" } else { "fail" },
                c.statement,
                c.witness
            )?;
        }
        write!(
            f,
            "verdict: {}",
            if self.all_pass() { "all conditions hold" } else { "violated" }
        )
    }
}

pub fn check_necessary(f: &IntPoly, n: usize) -> Result<NecessaryReport, SpectralError> {
    let degree = require_monic(f)?;
    if degree != n {
        return Err(SpectralError::DegreeMismatch { degree, order: n });
    }
    let precision = BigRational::new(BigInt::one(), BigInt::from(16));
    let (largest, smallest) = isolate_extreme_roots(f, &precision)?;

    let p1 = f.power_sum(1)?;
    let p2 = f.power_sum(2)?;
    let bound = BigInt::from(n) * BigInt::from(n as i64 - 1);
    let above = sturm_count(f, &Bound::int(n as i64 - 1), &Bound::PosInf);

    let (item5, witness5) = compare_extremes(f, &largest)?;

    let conditions = vec![
        Condition {
            item: 1,
            statement: "closed under algebraic conjugation",
            passed: true,
            witness: "structural: roots of an integer polynomial".into(),
        },
        Condition {
            item: 2,
            statement: "eigenvalues sum to 0",
            passed: p1.is_zero(),
            witness: format!("p1 = {p1}"),
        },
        Condition {
            item: 3,
            statement: "sum of squares at most n(n-1)",
            passed: p2 <= bound,
            witness: format!("p2 = {p2}, n(n-1) = {bound}"),
        },
        Condition {
            item: 4,
            statement: "largest eigenvalue at most n-1",
            passed: above == 0,
            witness: format!("{above} roots in ({}, +inf)", n as i64 - 1),
        },
        Condition {
            item: 5,
            statement: "|smallest| at most largest",
            passed: item5,
            witness: witness5,
        },
    ];
    Ok(NecessaryReport {
        order: n,
        power_sum_1: p1,
        power_sum_2: p2,
        edge_bound: bound,
        roots_above_order_bound: above,
        largest_root: largest,
        smallest_root: smallest,
        conditions,
    })
}

/// Decides `-λ_min ≤ λ_max` for totally real `f`.
fn compare_extremes(f: &IntPoly, largest: &RootBox) -> Result<(bool, String), SpectralError> {
    let reflected = f.reflect();
    let precision = BigRational::new(BigInt::one(), BigInt::from(16));
    // The largest root of f(-x) is -λ_min.
    let (neg_min, _) = isolate_extreme_roots(&reflected, &precision)?;
    let common = gcd(&f.squarefree_part(), &reflected.squarefree_part());
    if !common.is_constant() {
        let lo = Bound::At(neg_min.lo.clone());
        let hi = Bound::At(neg_min.hi.clone());
        if sturm_count(&common, &lo, &hi) == 1 {
            return Ok((
                true,
                format!("-lambda_min is a common root, certified by gcd {common}"),
            ));
        }
    }
    let s_max = SturmSequence::new(f);
    let s_neg = SturmSequence::new(&reflected);
    let (mut a, mut b) = (largest.clone(), neg_min);
    while !a.disjoint(&b) {
        a.bisect(&s_max);
        b.bisect(&s_neg);
    }
    let passed = b.hi <= a.lo;
    Ok((
        passed,
        format!(
            "lambda_max in ({}, {}], -lambda_min in ({}, {}]",
            a.lo, a.hi, b.lo, b.hi
        ),
    ))
}

/// Checks `charpoly(M3) = charpoly(B) · charpoly(M2)` for
/// `M3 = [[A, F, F], [E, B, 0], [E, 0, B]]` and `M2 = [[A, 2F], [E, B]]`.
pub fn verify_block_identity(
    a: &IntegerMatrix,
    b: &IntegerMatrix,
    e: &IntegerMatrix,
    f: &IntegerMatrix,
) -> Result<bool, SpectralError> {
    let (k, m) = (a.rows(), b.rows());
    if !a.is_square() || !b.is_square() {
        return Err(MatrixError::Dimension("A and B must be square".into()).into());
    }
    if (e.rows(), e.cols()) != (m, k) || (f.rows(), f.cols()) != (k, m) {
        return Err(MatrixError::Dimension(format!(
            "E must be {m}x{k} and F must be {k}x{m}"
        ))
        .into());
    }
    let zero = IntegerMatrix::zeros(m, m);
    let m3 = IntegerMatrix::block(&[vec![a, f, f], vec![e, b, &zero], vec![e, &zero, b]])?;
    let f2 = f.scale(&BigInt::from(2));
    let m2 = IntegerMatrix::block(&[vec![a, &f2], vec![e, b]])?;
    Ok(m3.charpoly()? == b.charpoly()? * m2.charpoly()?)
}
