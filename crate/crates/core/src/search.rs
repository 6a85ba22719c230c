//! Bounded exhaustive enumeration and witness discovery.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;
use crate::poly::{
    factor_irreducible, is_totally_real, isolate_real_roots, IntPoly, NumberField, PolyError,
};
use crate::spectral::{charpoly, contains_root, forest_charpoly, SpectralError};

/// Largest order for exhaustive labeled enumeration.
pub const LABELED_ORDER_CAP: usize = 8;
/// Default largest order for unlabeled tree enumeration.
pub const DEFAULT_TREE_ORDER_CAP: usize = 18;
/// Default largest witness order searched.
pub const DEFAULT_WITNESS_ORDER: usize = 14;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SearchError {
    #[error("order {order} exceeds the enumeration cap {cap}")]
    CapExceeded { order: usize, cap: usize },
    #[error("no witness for {poly} within {bound}")]
    NotFound { poly: IntPoly, bound: SearchBound },
    #[error("{0} is not irreducible")]
    Reducible(IntPoly),
    #[error("{0} has non-real roots")]
    NotTotallyReal(IntPoly),
    #[error("polynomial has degree {degree} but the order is {order}")]
    DegreeMismatch { degree: usize, order: usize },
    #[error(transparent)]
    Spectral(#[from] SpectralError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SearchMode {
    Graphs,
    Trees,
    ConnectedGraphs,
}

/// Limits of a bounded search. Exhaustion is reported against this bound
/// and never read as nonexistence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SearchBound {
    pub min_order: usize,
    pub max_order: usize,
    pub mode: SearchMode,
    pub budget: Option<u64>,
}

impl SearchBound {
    pub fn trees(max_order: usize) -> Self {
        SearchBound {
            min_order: 1,
            max_order,
            mode: SearchMode::Trees,
            budget: None,
        }
    }

    pub fn with_min_order(mut self, min_order: usize) -> Self {
        self.min_order = min_order;
        self
    }

    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = Some(budget);
        self
    }
}

impl Default for SearchBound {
    fn default() -> Self {
        SearchBound::trees(DEFAULT_WITNESS_ORDER)
    }
}

impl fmt::Display for SearchBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mode = match self.mode {
            SearchMode::Graphs => "graphs",
            SearchMode::Trees => "trees",
            SearchMode::ConnectedGraphs => "connected graphs",
        };
        write!(f, "{mode} of order {}..={}", self.min_order, self.max_order)?;
        if let Some(b) = self.budget {
            write!(f, " (budget {b} candidates)")?;
        }
        Ok(())
    }
}

/// Vertex pairs in graph6 bit order: `(0,1), (0,2), (1,2), (0,3), ...`.
fn pair_order(n: usize) -> Vec<(usize, usize)> {
    (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect()
}

/// The labeled graph whose edge set is the bitmask `mask` over pairs in
/// graph6 order.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let edges: Vec<_> = pair_order(n)
        .into_iter()
        .enumerate()
        .filter(|(k, _)| mask >> k & 1 == 1)
        .map(|(_, e)| e)
        .collect();
    Graph::new(n, &edges).expect("pairs are in range")
}

fn check_labeled_cap(n: usize) -> Result<u64, SearchError> {
    if n > LABELED_ORDER_CAP {
        return Err(SearchError::CapExceeded {
            order: n,
            cap: LABELED_ORDER_CAP,
        });
    }
    Ok(1u64 << (n * n.saturating_sub(1) / 2))
}

/// All labeled graphs on `n` vertices in ascending bitmask order.
pub fn enumerate_labeled_graphs(n: usize) -> Result<impl Iterator<Item = Graph>, SearchError> {
    let total = check_labeled_cap(n)?;
    Ok((0..total).map(move |mask| graph_from_mask(n, mask)))
}

/// A rooted tree as its parenthesis code: a vertex is `(` followed by the
/// codes of its children in sorted order and then `)`.
type Code = String;

fn code_cmp(a: &Code, b: &Code) -> std::cmp::Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

/// Rooted trees of every size up to `max`, each list sorted by code.
struct RootedTrees {
    by_size: Vec<Vec<Code>>,
}

impl RootedTrees {
    fn new(max: usize) -> Self {
        let mut by_size: Vec<Vec<Code>> = vec![Vec::new(); max + 1];
        if max >= 1 {
            by_size[1].push("()".to_string());
        }
        for s in 2..=max {
            let mut out = Vec::new();
            let forests = Self::forests_from(&by_size, s - 1, s - 1);
            for children in forests {
                out.push(wrap(&children));
            }
            out.sort_by(code_cmp);
            by_size[s] = out;
        }
        RootedTrees { by_size }
    }

    /// Multisets of rooted trees with total size `total` and every part of
    /// size at most `cap`, each child list in non-increasing order.
    fn forests_from(by_size: &[Vec<Code>], total: usize, cap: usize) -> Vec<Vec<Code>> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        Self::extend(by_size, total, (cap, usize::MAX), &mut current, &mut out);
        out
    }

    fn extend(
        by_size: &[Vec<Code>],
        remaining: usize,
        limit: (usize, usize),
        current: &mut Vec<Code>,
        out: &mut Vec<Vec<Code>>,
    ) {
        if remaining == 0 {
            out.push(current.clone());
            return;
        }
        let (max_size, max_index) = limit;
        for size in (1..=max_size.min(remaining)).rev() {
            let upper = if size == max_size {
                max_index.min(by_size[size].len().saturating_sub(1))
            } else {
                by_size[size].len().saturating_sub(1)
            };
            if by_size[size].is_empty() {
                continue;
            }
            for idx in (0..=upper).rev() {
                current.push(by_size[size][idx].clone());
                Self::extend(by_size, remaining - size, (size, idx), current, out);
                current.pop();
            }
        }
    }
}

fn wrap(children: &[Code]) -> Code {
    let mut sorted: Vec<&Code> = children.iter().collect();
    sorted.sort_by(|a, b| code_cmp(a, b));
    let mut s = String::with_capacity(2 + children.iter().map(String::len).sum::<usize>());
    s.push('(');
    for c in sorted {
        s.push_str(c);
    }
    s.push(')');
    s
}

/// Builds a graph from a rooted code; vertices are numbered in preorder.
fn graph_from_code(code: &str) -> Graph {
    let mut edges = Vec::new();
    let mut stack: Vec<usize> = Vec::new();
    let mut next = 0;
    for ch in code.chars() {
        if ch == '(' {
            if let Some(&parent) = stack.last() {
                edges.push((parent, next));
            }
            stack.push(next);
            next += 1;
        } else {
            stack.pop();
        }
    }
    Graph::new(next, &edges).expect("codes describe trees")
}

fn rooted_code(g: &Graph, root: usize) -> Code {
    fn rec(g: &Graph, v: usize, parent: usize) -> Code {
        let children: Vec<Code> = g
            .neighbors(v)
            .iter()
            .filter(|&&w| w != parent)
            .map(|&w| rec(g, w, v))
            .collect();
        wrap(&children)
    }
    rec(g, root, usize::MAX)
}

/// Canonical code of a tree: the least rooted code over all roots.
pub fn tree_code(g: &Graph) -> String {
    (0..g.order())
        .map(|r| rooted_code(g, r))
        .min_by(code_cmp)
        .unwrap_or_default()
}

/// All unlabeled trees of order `n`, generated around their centroids and
/// listed in canonical order with vertex 0 at the root of the least code.
pub fn enumerate_trees(n: usize) -> Result<Vec<Graph>, SearchError> {
    enumerate_trees_capped(n, DEFAULT_TREE_ORDER_CAP)
}

pub fn enumerate_trees_capped(n: usize, cap: usize) -> Result<Vec<Graph>, SearchError> {
    if n > cap {
        return Err(SearchError::CapExceeded { order: n, cap });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let rooted = RootedTrees::new(n / 2 + 1);
    let mut codes: Vec<Code> = Vec::new();
    // One centroid: every branch has fewer than n/2 vertices.
    let branch_cap = (n - 1) / 2;
    if n == 1 {
        codes.push("()".into());
    } else if branch_cap >= 1 {
        for children in RootedTrees::forests_from(&rooted.by_size, n - 1, branch_cap) {
            codes.push(wrap(&children));
        }
    }
    // Two centroids joined by an edge, halves of equal size.
    if n.is_multiple_of(2) {
        let half = &rooted.by_size[n / 2];
        for i in 0..half.len() {
            for j in i..half.len() {
                let mut joined = half[j].clone();
                joined.pop();
                joined.push_str(&half[i]);
                joined.push(')');
                codes.push(joined);
            }
        }
    }
    let mut trees: Vec<(Code, Graph)> = codes
        .par_iter()
        .map(|c| {
            let g = graph_from_code(c);
            let canon = tree_code(&g);
            (canon.clone(), graph_from_code(&canon))
        })
        .collect();
    trees.sort_by(|a, b| code_cmp(&a.0, &b.0));
    Ok(trees.into_iter().map(|(_, g)| g).collect())
}

/// `K_{1,k^2}`, which has `k` as an eigenvalue.
pub fn integer_eigen_star(k: usize) -> Graph {
    Graph::star(k * k)
}

/// Upper bound on the squared spectral radius of trees of each order is
/// `n - 1`; returns the least order whose trees could host every real root
/// of `q`.
fn least_feasible_tree_order(q: &IntPoly) -> usize {
    let boxes = isolate_real_roots(q);
    let mut needed = BigRational::zero();
    for b in &boxes {
        // Inner endpoint of the box bounds |root| from below.
        let inner = if b.lo.is_negative() && !b.hi.is_positive() {
            -b.hi.clone()
        } else if !b.lo.is_negative() {
            b.lo.clone()
        } else {
            BigRational::zero()
        };
        let sq = &inner * &inner;
        if sq > needed {
            needed = sq;
        }
    }
    let floor = needed.floor().to_integer();
    let min_n: BigInt = if BigRational::from_integer(floor.clone()) == needed {
        floor + 1
    } else {
        floor + 2
    };
    usize::try_from(min_n).unwrap_or(usize::MAX).max(q.degree().unwrap_or(0))
}

/// First tree within `bound`, in canonical order, whose characteristic
/// polynomial is divisible by the monic `q`.
pub fn find_tree_divisor(q: &IntPoly, bound: &SearchBound) -> Result<Graph, SearchError> {
    let start = bound.min_order.max(least_feasible_tree_order(q)).max(1);
    let mut examined = 0u64;
    for n in start..=bound.max_order {
        let trees = enumerate_trees_capped(n, bound.max_order.max(DEFAULT_TREE_ORDER_CAP))?;
        let trees: &[Graph] = match bound.budget {
            Some(b) if examined + trees.len() as u64 > b => {
                let keep = (b - examined) as usize;
                &trees[..keep]
            }
            _ => &trees,
        };
        examined += trees.len() as u64;
        let hit = trees.par_iter().find_first(|t| {
            let p = forest_charpoly(t).expect("trees are forests");
            q.divides(&p)
        });
        if let Some(t) = hit {
            return Ok(t.clone());
        }
        if bound.budget.is_some_and(|b| examined >= b) {
            break;
        }
    }
    Err(SearchError::NotFound {
        poly: q.clone(),
        bound: *bound,
    })
}

/// First tree within `bound` having a root of the irreducible, totally real,
/// monic `mu` as an eigenvalue, re-verified by kernel rank.
pub fn find_tree_witness(mu: &IntPoly, bound: &SearchBound) -> Result<Graph, SearchError> {
    let degree = mu.degree().ok_or(PolyError::ZeroPolynomial)?;
    if degree == 0 {
        return Err(PolyError::Constant.into());
    }
    if !mu.is_monic() {
        return Err(PolyError::NotMonic(mu.clone()).into());
    }
    if !factor_irreducible(mu, degree.max(crate::poly::DEFAULT_DEGREE_CAP))?.is_irreducible() {
        return Err(SearchError::Reducible(mu.clone()));
    }
    if !is_totally_real(mu) {
        return Err(SearchError::NotTotallyReal(mu.clone()));
    }
    let t = find_tree_divisor(mu, bound)?;
    assert!(contains_root(&t, mu)?, "witness failed kernel re-verification");
    Ok(t)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Refutation {
    /// No labeled graph of the order has this characteristic polynomial.
    Refuted { scanned: u64 },
    Realized(Graph),
}

/// Scans every labeled graph of order `n` for one with characteristic
/// polynomial `f`. Masks whose edge count differs from `p2 / 2` are
/// rejected without computing a characteristic polynomial.
pub fn refute_spectrum(f: &IntPoly, n: usize) -> Result<Refutation, SearchError> {
    let total = check_labeled_cap(n)?;
    let degree = f.degree().ok_or(PolyError::ZeroPolynomial)?;
    if degree != n {
        return Err(SearchError::DegreeMismatch { degree, order: n });
    }
    if !f.is_monic() {
        return Err(PolyError::NotMonic(f.clone()).into());
    }
    let p2 = f.power_sum(2)?;
    let edges = if p2.is_negative() || (&p2 % 2u32) != BigInt::zero() {
        None
    } else {
        u32::try_from(p2 / 2u32).ok()
    };
    let hit = edges.and_then(|m| {
        (0..total)
            .into_par_iter()
            .filter(|mask| mask.count_ones() == m)
            .find_first(|&mask| charpoly(&graph_from_mask(n, mask)) == *f)
    });
    Ok(match hit {
        Some(mask) => Refutation::Realized(graph_from_mask(n, mask)),
        None => Refutation::Refuted { scanned: total },
    })
}

/// Limits for [`find_joined_tree`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct JoinBound {
    /// Largest rooted branch hung from the hub.
    pub max_branch_order: usize,
    /// Largest branch allowed in the two-branch half of a three-branch join.
    pub triple_branch_order: usize,
    pub max_leaves: usize,
}

impl Default for JoinBound {
    fn default() -> Self {
        JoinBound {
            max_branch_order: 11,
            triple_branch_order: 9,
            max_leaves: 40,
        }
    }
}

/// Rooted trees as child lists over earlier ids, grouped by size.
struct RootedLibrary {
    size: Vec<usize>,
    children: Vec<Vec<usize>>,
    first_of_size: Vec<usize>,
}

impl RootedLibrary {
    fn new(max: usize) -> Self {
        let mut lib = RootedLibrary {
            size: vec![1],
            children: vec![Vec::new()],
            first_of_size: vec![0, 0, 1],
        };
        for s in 2..=max {
            let mut out = Vec::new();
            let top = lib.first_of_size[s] - 1;
            lib.multisets(s - 1, top, &mut Vec::new(), &mut out);
            for ch in out {
                lib.size.push(s);
                lib.children.push(ch);
            }
            lib.first_of_size.push(lib.size.len());
        }
        lib
    }

    fn multisets(&self, rem: usize, max_id: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rem == 0 {
            out.push(cur.clone());
            return;
        }
        for t in (0..=max_id).rev() {
            if self.size[t] <= rem {
                cur.push(t);
                self.multisets(rem - self.size[t], t, cur, out);
                cur.pop();
            }
        }
    }

    fn len(&self) -> usize {
        self.size.len()
    }

    fn up_to(&self, size: usize) -> usize {
        self.first_of_size[(size + 1).min(self.first_of_size.len() - 1)]
    }

    fn attach(&self, id: usize, parent: usize, next: &mut usize, edges: &mut Vec<(usize, usize)>) {
        let v = *next;
        *next += 1;
        edges.push((parent, v));
        for &c in &self.children[id] {
            self.attach(c, v, next, edges);
        }
    }
}

type Elem = Vec<BigRational>;

fn elem_sub(a: &[BigRational], b: &[BigRational]) -> Elem {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn elem_add(a: &[BigRational], b: &[BigRational]) -> Elem {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// Searches trees made of a hub vertex, up to `max_leaves` pendant leaves
/// and one to three rooted branches from a library, for one having a root
/// `alpha` of the irreducible monic `mu` as an eigenvalue.
///
/// With `A_R = P(R)(alpha)` and `B_R = P(R - r)(alpha)` for a branch `R`
/// rooted at `r`, the hub tree has `alpha` as an eigenvalue whenever every
/// `A_R` is nonzero and `sum B_R / A_R = alpha - k / alpha`. All quantities
/// live in `Q(alpha)`, so matches are exact. Among all matches the one of
/// least order is returned, and it is re-verified by polynomial division.
pub fn find_joined_tree(mu: &IntPoly, bound: &JoinBound) -> Result<Graph, SearchError> {
    let degree = mu.degree().ok_or(PolyError::ZeroPolynomial)?;
    if degree == 0 {
        return Err(PolyError::Constant.into());
    }
    if !mu.is_monic() {
        return Err(PolyError::NotMonic(mu.clone()).into());
    }
    if !factor_irreducible(mu, degree.max(crate::poly::DEFAULT_DEGREE_CAP))?.is_irreducible() {
        return Err(SearchError::Reducible(mu.clone()));
    }
    let not_found = || SearchError::NotFound {
        poly: mu.clone(),
        bound: SearchBound::trees(
            1 + bound.max_leaves + bound.max_branch_order + 2 * bound.triple_branch_order,
        ),
    };
    if *mu == IntPoly::x() {
        return Err(not_found());
    }
    let field = NumberField::new(mu);
    let lib = RootedLibrary::new(bound.max_branch_order.max(bound.triple_branch_order).max(1));
    let alpha: Vec<BigInt> = field.generator();
    let one: Vec<BigInt> = {
        let mut v = vec![BigInt::zero(); degree];
        v[0] = BigInt::one();
        v
    };
    let mut a_val: Vec<Vec<BigInt>> = Vec::with_capacity(lib.len());
    let mut b_val: Vec<Vec<BigInt>> = Vec::with_capacity(lib.len());
    for id in 0..lib.len() {
        let ch = &lib.children[id];
        let mut prod = one.clone();
        for &c in ch {
            prod = field.mul(&prod, &a_val[c]);
        }
        let mut a = field.mul(&alpha, &prod);
        for (j, &c) in ch.iter().enumerate() {
            let mut term = b_val[c].clone();
            for (i, &d) in ch.iter().enumerate() {
                if i != j {
                    term = field.mul(&term, &a_val[d]);
                }
            }
            for (x, t) in a.iter_mut().zip(term) {
                *x -= t;
            }
        }
        a_val.push(a);
        b_val.push(prod);
    }
    let w: Vec<Option<Elem>> = a_val
        .iter()
        .zip(&b_val)
        .map(|(a, b)| {
            let inv = field.inverse(a)?;
            let b: Elem = b.iter().cloned().map(BigRational::from_integer).collect();
            Some(field.mul(&b, &inv))
        })
        .collect();
    let branch_ids: Vec<usize> = (0..lib.up_to(bound.max_branch_order))
        .filter(|&i| w[i].is_some())
        .collect();
    let mut single: HashMap<&Elem, usize> = HashMap::new();
    for &i in &branch_ids {
        single.entry(w[i].as_ref().unwrap()).or_insert(i);
    }
    let small = lib.up_to(bound.triple_branch_order);
    let mut pairs: HashMap<Elem, (usize, usize)> = HashMap::new();
    for i in (0..small).filter(|&i| w[i].is_some()) {
        for j in (0..=i).filter(|&j| w[j].is_some()) {
            let s = elem_add(w[i].as_ref().unwrap(), w[j].as_ref().unwrap());
            pairs.entry(s).or_insert((j, i));
        }
    }
    let alpha_rat: Elem = alpha.iter().cloned().map(BigRational::from_integer).collect();
    let alpha_inv = field.inverse(&alpha).expect("alpha is nonzero");
    let mut best: Option<(usize, usize, Vec<usize>)> = None;
    let mut offer = |k: usize, mut ids: Vec<usize>| {
        ids.sort_unstable();
        let order = 1 + k + ids.iter().map(|&i| lib.size[i]).sum::<usize>();
        let cand = (order, k, ids);
        if best.as_ref().is_none_or(|b| cand < *b) {
            best = Some(cand);
        }
    };
    for k in 0..=bound.max_leaves {
        let scaled: Elem = alpha_inv
            .iter()
            .map(|c| c * BigRational::from_integer(BigInt::from(k)))
            .collect();
        let target = elem_sub(&alpha_rat, &scaled);
        if let Some(&i) = single.get(&target) {
            offer(k, vec![i]);
        }
        for &i in &branch_ids {
            let rest = elem_sub(&target, w[i].as_ref().unwrap());
            if let Some(&j) = single.get(&rest) {
                offer(k, vec![i, j]);
            }
            if let Some(&(a, b)) = pairs.get(&rest) {
                offer(k, vec![i, a, b]);
            }
        }
    }
    let (order, k, ids) = best.ok_or_else(not_found)?;
    let mut edges: Vec<(usize, usize)> = (1..=k).map(|l| (0, l)).collect();
    let mut next = k + 1;
    for &id in &ids {
        lib.attach(id, 0, &mut next, &mut edges);
    }
    debug_assert_eq!(next, order);
    let g = Graph::new(order, &edges).expect("hub trees are simple");
    let g = graph_from_code(&tree_code(&g));
    let p = forest_charpoly(&g).expect("trees are forests");
    assert!(mu.divides(&p), "joined tree failed exact re-verification");
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    /// Decodes a Prüfer sequence into a labeled tree on `seq.len() + 2`
    /// vertices.
    fn prufer_tree(seq: &[usize]) -> Graph {
        let n = seq.len() + 2;
        let mut degree = vec![1; n];
        for &s in seq {
            degree[s] += 1;
        }
        let mut edges = Vec::new();
        for &s in seq {
            let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
            edges.push((leaf, s));
            degree[leaf] -= 1;
            degree[s] -= 1;
        }
        let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
        edges.push((rest[0], rest[1]));
        Graph::new(n, &edges).unwrap()
    }

    fn oracle_tree_codes(n: usize) -> BTreeSet<String> {
        if n == 1 {
            return ["()".to_string()].into();
        }
        let len = n - 2;
        let total = n.pow(len as u32);
        (0..total)
            .into_par_iter()
            .map(|mut idx| {
                let mut seq = vec![0; len];
                for s in seq.iter_mut() {
                    *s = idx % n;
                    idx /= n;
                }
                tree_code(&prufer_tree(&seq))
            })
            .collect::<Vec<_>>()
            .into_iter()
            .collect()
    }

    #[test]
    fn labeled_enumeration_counts() {
        assert_eq!(enumerate_labeled_graphs(4).unwrap().count(), 64);
        assert_eq!(enumerate_labeled_graphs(1).unwrap().count(), 1);
        let connected = enumerate_labeled_graphs(3)
            .unwrap()
            .filter(|g| g.is_connected().unwrap())
            .count();
        assert_eq!(connected, 4);
        assert!(matches!(
            enumerate_labeled_graphs(9).map(|_| ()),
            Err(SearchError::CapExceeded { .. })
        ));
    }

    #[test]
    fn mask_bits_follow_graph6_order() {
        assert_eq!(graph_from_mask(3, 0b010).edges().collect::<Vec<_>>(), vec![(0, 2)]);
        let g = graph_from_mask(4, 0b111111);
        assert_eq!(g, Graph::complete(4));
    }

    #[test]
    fn tree_counts_small() {
        let expected = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106];
        for (i, &e) in expected.iter().enumerate() {
            let trees = enumerate_trees(i + 1).unwrap();
            assert_eq!(trees.len(), e, "order {}", i + 1);
            for t in &trees {
                assert!(t.is_tree() && t.order() == i + 1);
            }
        }
        assert!(enumerate_trees(0).unwrap().is_empty());
        assert!(enumerate_trees(19).is_err());
    }

    #[test]
    fn trees_match_labeled_oracle() {
        for n in 1..=8 {
            let generated: BTreeSet<String> =
                enumerate_trees(n).unwrap().iter().map(tree_code).collect();
            assert_eq!(generated, oracle_tree_codes(n), "order {n}");
        }
    }

    #[test]
    fn tree_order_is_canonical() {
        let trees = enumerate_trees(7).unwrap();
        let codes: Vec<String> = trees.iter().map(tree_code).collect();
        let mut sorted = codes.clone();
        sorted.sort_by(code_cmp);
        assert_eq!(codes, sorted);
        let four = enumerate_trees(4).unwrap();
        assert!(four.iter().any(|t| t.max_degree() == 3));
        assert!(four.iter().any(|t| t.max_degree() == 2));
    }

    #[test]
    fn witness_examples() {
        let bound = SearchBound::trees(8);
        let w = find_tree_witness(&p(&[-2, 0, 1]), &bound).unwrap();
        assert_eq!(w.order(), 3);
        let w = find_tree_witness(&p(&[-3, 0, 1]), &bound).unwrap();
        assert!(w.order() <= 5);
        assert!(contains_root(&w, &p(&[-3, 0, 1])).unwrap());
        assert!(matches!(
            find_tree_witness(&p(&[-1, 0, 1]), &bound),
            Err(SearchError::Reducible(_))
        ));
        assert!(matches!(
            find_tree_witness(&p(&[1, 0, 1]), &bound),
            Err(SearchError::NotTotallyReal(_))
        ));
        match find_tree_witness(&p(&[-4, 1]), &bound) {
            Err(SearchError::NotFound { bound: b, .. }) => assert_eq!(b.max_order, 8),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn witness_independent_of_threads() {
        let mu = p(&[-1, -1, 1]);
        let bound = SearchBound::trees(8);
        let one = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
        let four = rayon::ThreadPoolBuilder::new().num_threads(4).build().unwrap();
        let a = one.install(|| find_tree_witness(&mu, &bound).unwrap());
        let b = four.install(|| find_tree_witness(&mu, &bound).unwrap());
        assert_eq!(a.to_graph6().unwrap(), b.to_graph6().unwrap());
    }

    #[test]
    fn budget_truncates_search() {
        let bound = SearchBound::trees(10).with_budget(3);
        assert!(matches!(
            find_tree_divisor(&p(&[-5, 0, 1]), &bound),
            Err(SearchError::NotFound { .. })
        ));
    }

    #[test]
    fn star_eigenvalues() {
        assert_eq!(integer_eigen_star(2), Graph::star(4));
        assert_eq!(integer_eigen_star(1), Graph::complete(2));
        assert!(contains_root(&integer_eigen_star(4), &p(&[-4, 1])).unwrap());
    }

    #[test]
    fn refute_examples() {
        assert_eq!(
            refute_spectrum(&p(&[4, 0, -5, 0, 1]), 4).unwrap(),
            Refutation::Refuted { scanned: 64 }
        );
        match refute_spectrum(&p(&[0, 0, -4, 0, 1]), 4).unwrap() {
            Refutation::Realized(g) => {
                assert_eq!(charpoly(&g), p(&[0, 0, -4, 0, 1]));
                assert!(g.is_connected().unwrap() && g.edge_count() == 4);
            }
            r => panic!("{r:?}"),
        }
        assert_eq!(
            refute_spectrum(&p(&[-1, 0, 1]), 2).unwrap(),
            Refutation::Realized(Graph::complete(2))
        );
    }

    #[test]
    fn refute_realizes_every_small_spectrum() {
        for n in 1..=5 {
            for g in enumerate_labeled_graphs(n).unwrap().step_by(5) {
                let f = charpoly(&g);
                match refute_spectrum(&f, n).unwrap() {
                    Refutation::Realized(h) => assert_eq!(charpoly(&h), f),
                    r => panic!("{r:?}"),
                }
            }
        }
    }

    #[test]
    fn joined_trees_reach_beyond_enumeration() {
        for csv in ["-4,-2,1", "2,-6,-1,1", "2,-4,-6,0,1"] {
            let mu: IntPoly = csv.parse().unwrap();
            assert!(find_tree_divisor(&mu, &SearchBound::trees(12)).is_err());
            let t = find_joined_tree(&mu, &JoinBound::default()).unwrap();
            assert!(t.is_tree());
            assert!(contains_root(&t, &mu).unwrap(), "{csv}");
        }
    }

    #[test]
    fn joined_search_rejects_bad_input() {
        let reducible = IntPoly::from_i64s(&[-1, 0, 1]);
        assert!(matches!(
            find_joined_tree(&reducible, &JoinBound::default()),
            Err(SearchError::Reducible(_))
        ));
        assert!(matches!(
            find_joined_tree(&IntPoly::x(), &JoinBound::default()),
            Err(SearchError::NotFound { .. })
        ));
    }

    #[test]
    fn joined_search_matches_small_hub_trees() {
        // K_{1,2} has eigenvalue sqrt 2.
        let mu = IntPoly::from_i64s(&[-2, 0, 1]);
        let t = find_joined_tree(&mu, &JoinBound::default()).unwrap();
        assert_eq!(t.order(), 3);
    }
}
