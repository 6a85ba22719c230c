//! Graph products, the eigenvalue gadget, and the pipelines that build
//! connected graphs and trees with prescribed eigenvalues.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::certificate::{Certificate, CertificateBuilder, Claim, PartRef};
use crate::graph::{Graph, GraphError};
use crate::poly::{
    abs_profile, factor_irreducible, is_totally_real, is_unimodal, IntPoly, PolyError,
    ProfileMode, DEFAULT_DEGREE_CAP,
};
use crate::search::{enumerate_labeled_graphs, find_tree_divisor, SearchBound, SearchError};
use crate::spectral::{charpoly, forest_charpoly, Certification, DivisibilityMode};
use crate::witness::{WitnessError, WitnessKind, WitnessOrigin, WitnessSource};

#[derive(Debug, Error)]
pub enum ConstructionError {
    #[error("the prescribed spectrum is empty")]
    EmptySpectrum,
    #[error("{0} must be nonconstant")]
    Constant(IntPoly),
    #[error("{0} is not monic")]
    NotMonic(IntPoly),
    #[error("{0} is not squarefree; repeat it to request multiplicity")]
    NotSquarefree(IntPoly),
    #[error("{0} has non-real roots")]
    NotTotallyReal(IntPoly),
    #[error("zero augmentation needs a connected graph with an edge")]
    NotAugmentable,
    #[error("{got} attachment vertices given for {expected} parts")]
    AttachmentCount { expected: usize, got: usize },
    #[error("coefficient profile of {0} is not unimodal")]
    NotUnimodal(IntPoly),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Search(#[from] SearchError),
    #[error(transparent)]
    Witness(#[from] WitnessError),
}

/// Which connected non-bipartite graph with eigenvalues 0 and 1 is used.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GadgetVariant {
    /// A triangle with two pendant vertices and a pendant 2-path at one
    /// corner; 7 vertices.
    #[default]
    Small,
    /// `P5 + C3`; 15 vertices.
    Large,
}

impl fmt::Display for GadgetVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GadgetVariant::Small => "small",
            GadgetVariant::Large => "large",
        })
    }
}

impl FromStr for GadgetVariant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "small" => Ok(GadgetVariant::Small),
            "large" => Ok(GadgetVariant::Large),
            other => Err(format!("unknown gadget variant {other:?}; use small or large")),
        }
    }
}

/// `G + H` with adjacency `A(G) ⊗ I + I ⊗ A(H)`; vertex `(i, j)` is
/// `i * |H| + j`.
pub fn cartesian_sum(g: &Graph, h: &Graph) -> Graph {
    let nh = h.order();
    let mut edges = Vec::with_capacity(g.edge_count() * nh + h.edge_count() * g.order());
    for i in 0..g.order() {
        edges.extend(h.edges().map(|(a, b)| (i * nh + a, i * nh + b)));
    }
    for (u, v) in g.edges() {
        edges.extend((0..nh).map(|j| (u * nh + j, v * nh + j)));
    }
    Graph::new(g.order() * nh, &edges).expect("product indices are in range")
}

/// `G × H` with adjacency `A(G) ⊗ A(H)`, same vertex numbering as
/// [`cartesian_sum`].
pub fn tensor_product(g: &Graph, h: &Graph) -> Graph {
    let nh = h.order();
    let mut edges = Vec::with_capacity(2 * g.edge_count() * h.edge_count());
    for (u, v) in g.edges() {
        for (a, b) in h.edges() {
            edges.push((u * nh + a, v * nh + b));
            edges.push((u * nh + b, v * nh + a));
        }
    }
    Graph::new(g.order() * nh, &edges).expect("product indices are in range")
}

pub fn gadget_f(variant: GadgetVariant) -> Graph {
    match variant {
        GadgetVariant::Small => Graph::new(
            7,
            &[(0, 1), (1, 2), (0, 2), (0, 3), (0, 4), (0, 5), (5, 6)],
        )
        .expect("gadget edges are valid"),
        GadgetVariant::Large => cartesian_sum(&Graph::path(5), &Graph::cycle(3)),
    }
}

/// `F × G`: connected, with 0 in its spectrum and every eigenvalue of `G`
/// kept (as a product with the eigenvalue 1 of `F`).
pub fn zero_augment(g: &Graph, variant: GadgetVariant) -> Result<Graph, ConstructionError> {
    if g.order() < 2 || !g.is_connected()? {
        return Err(ConstructionError::NotAugmentable);
    }
    Ok(tensor_product(&gadget_f(variant), g))
}

/// One part of a doubling composition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Part {
    pub graph: Graph,
    /// The vertex of the part joined to the base.
    pub part_vertex: usize,
    pub base_vertex: usize,
}

/// `G ∘ [H1, ..., Hp]`: for each part, two copies of `Hi` are appended
/// (first copy, then second copy, numbered as in `Hi`) and both copies of
/// `part_vertex` are joined to `base_vertex`.
pub fn double_composition(g: &Graph, parts: &[Part]) -> Result<Graph, GraphError> {
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    let mut offset = g.order();
    for part in parts {
        let h = &part.graph;
        if part.part_vertex >= h.order() {
            return Err(GraphError::VertexOutOfRange {
                vertex: part.part_vertex,
                order: h.order(),
            });
        }
        if part.base_vertex >= g.order() {
            return Err(GraphError::VertexOutOfRange {
                vertex: part.base_vertex,
                order: g.order(),
            });
        }
        for copy in 0..2 {
            let base = offset + copy * h.order();
            edges.extend(h.edges().map(|(u, v)| (u + base, v + base)));
            edges.push((part.base_vertex, base + part.part_vertex));
        }
        offset += 2 * h.order();
    }
    Graph::new(offset, &edges)
}

/// How an entry of a prescribed spectrum was validated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    Irreducible,
    /// Squarefree, and either reducible or beyond the factorization cap.
    Squarefree,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumEntry {
    pub poly: IntPoly,
    pub multiplicity: usize,
    pub provenance: Provenance,
}

/// Monic, squarefree, totally real polynomials with multiplicities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrescribedSpectrum {
    entries: Vec<SpectrumEntry>,
}

impl PrescribedSpectrum {
    /// Repeated polynomials raise the multiplicity of their entry.
    pub fn new(polys: &[IntPoly]) -> Result<Self, ConstructionError> {
        let mut grouped: Vec<(IntPoly, usize)> = Vec::new();
        for p in polys {
            match grouped.iter_mut().find(|(q, _)| q == p) {
                Some((_, m)) => *m += 1,
                None => grouped.push((p.clone(), 1)),
            }
        }
        Self::from_entries(grouped)
    }

    pub fn from_entries(entries: Vec<(IntPoly, usize)>) -> Result<Self, ConstructionError> {
        if entries.is_empty() {
            return Err(ConstructionError::EmptySpectrum);
        }
        let entries = entries
            .into_iter()
            .map(|(poly, multiplicity)| {
                let provenance = validate(&poly)?;
                Ok(SpectrumEntry {
                    poly,
                    multiplicity: multiplicity.max(1),
                    provenance,
                })
            })
            .collect::<Result<Vec<_>, ConstructionError>>()?;
        Ok(PrescribedSpectrum { entries })
    }

    pub fn entries(&self) -> &[SpectrumEntry] {
        &self.entries
    }

    /// The product of every entry raised to its multiplicity.
    pub fn product(&self) -> IntPoly {
        self.entries
            .iter()
            .fold(IntPoly::one(), |acc, e| &acc * &e.poly.pow(e.multiplicity))
    }
}

fn validate(poly: &IntPoly) -> Result<Provenance, ConstructionError> {
    let degree = match poly.degree() {
        Some(d) if d >= 1 => d,
        _ => return Err(ConstructionError::Constant(poly.clone())),
    };
    if !poly.is_monic() {
        return Err(ConstructionError::NotMonic(poly.clone()));
    }
    if !poly.is_squarefree() {
        return Err(ConstructionError::NotSquarefree(poly.clone()));
    }
    if !is_totally_real(poly) {
        return Err(ConstructionError::NotTotallyReal(poly.clone()));
    }
    if degree > DEFAULT_DEGREE_CAP {
        return Ok(Provenance::Squarefree);
    }
    Ok(if factor_irreducible(poly, DEFAULT_DEGREE_CAP)?.is_irreducible() {
        Provenance::Irreducible
    } else {
        Provenance::Squarefree
    })
}

/// A witness graph for `poly`.
#[derive(Debug, Clone)]
struct Resolved {
    poly: IntPoly,
    graph: Graph,
    origin: WitnessOrigin,
}

fn is_not_found(e: &WitnessError) -> bool {
    matches!(e, WitnessError::Search(SearchError::NotFound { .. }))
}

/// `mu(-x)` made monic.
fn mirror(mu: &IntPoly) -> IntPoly {
    let r = mu.reflect();
    if r.leading().is_some_and(|c| c.sign() == num_bigint::Sign::Minus) {
        -r
    } else {
        r
    }
}

/// Witnesses for one entry: a single graph when the whole entry has one,
/// otherwise one per irreducible factor. Tree spectra are symmetric, so for
/// trees a witness of `mu` also covers `mu(-x)`.
fn resolve(
    entry: &SpectrumEntry,
    source: &mut WitnessSource,
    kind: WitnessKind,
) -> Result<Vec<Resolved>, ConstructionError> {
    match source.witness(&entry.poly, kind) {
        Ok((graph, origin)) => {
            return Ok(vec![Resolved {
                poly: entry.poly.clone(),
                graph,
                origin,
            }])
        }
        Err(e) if entry.provenance == Provenance::Squarefree && is_not_found(&e) => {}
        Err(e) => return Err(e.into()),
    }
    let factors = factor_irreducible(&entry.poly, DEFAULT_DEGREE_CAP)?;
    let mut chosen: Vec<IntPoly> = Vec::new();
    for (mu, _) in factors.factors {
        if kind == WitnessKind::Tree && chosen.contains(&mirror(&mu)) {
            continue;
        }
        chosen.push(mu);
    }
    chosen
        .into_iter()
        .map(|mu| {
            let (graph, origin) = source.witness(&mu, kind)?;
            Ok(Resolved {
                poly: mu,
                graph,
                origin,
            })
        })
        .collect()
}

fn witness_origin(r: &Resolved) -> String {
    format!("{} witness for {}", r.origin, r.poly.to_csv())
}

fn divides_claim(target: usize, poly: &IntPoly, mode: DivisibilityMode) -> Claim {
    Claim::Divides {
        target,
        poly: poly.to_csv(),
        mode,
        level: Certification::ExactDivides,
    }
}

/// A connected graph having 0 and a root of every entry as eigenvalues.
///
/// Each witness `Wi` is zero-augmented to `Gi = F × Wi` and the results are
/// combined left to right, `H = (...((G1 + G2) + G3) ...) + Gp`. Since 0 lies
/// in every `Gi`, each eigenvalue of each `Gi` survives as a sum with 0.
/// Multiplicities are ignored.
pub fn prescribe_connected(
    spec: &PrescribedSpectrum,
    source: &mut WitnessSource,
    variant: GadgetVariant,
) -> Result<(Graph, Certificate), ConstructionError> {
    let mut resolved = Vec::new();
    for entry in spec.entries() {
        resolved.extend(resolve(entry, source, WitnessKind::Connected)?);
    }
    let mut b = CertificateBuilder::new();
    b.set_gadget(variant);
    let gadget = b.primitive(&gadget_f(variant), format!("gadget {variant}"))?;
    let mut acc: Option<usize> = None;
    for r in &resolved {
        let w = b.primitive(&r.graph, witness_origin(r))?;
        if b.graph(w).order() < 2 || !b.graph(w).is_connected()? {
            return Err(ConstructionError::NotAugmentable);
        }
        let z = b.tensor_product(gadget, w);
        acc = Some(match acc {
            None => z,
            Some(k) => b.cartesian_sum(k, z),
        });
    }
    let target = b.last();
    b.claim(Claim::Connected { target });
    b.claim(divides_claim(target, &IntPoly::x(), DivisibilityMode::Kernel));
    for entry in spec.entries() {
        b.claim(divides_claim(target, &entry.poly, DivisibilityMode::Kernel));
    }
    Ok(b.finish()?)
}

/// A tree containing every entry with its multiplicity: `E1 ∘ [T1, ..., Tq]`
/// with one witness tree per entry instance. `attach` overrides the part
/// vertex joined to the center (default 0 for every part).
pub fn prescribe_tree(
    spec: &PrescribedSpectrum,
    source: &mut WitnessSource,
    attach: Option<&[usize]>,
) -> Result<(Graph, Certificate), ConstructionError> {
    let mut parts: Vec<Resolved> = Vec::new();
    for entry in spec.entries() {
        let witnesses = resolve(entry, source, WitnessKind::Tree)?;
        for _ in 0..entry.multiplicity {
            parts.extend(witnesses.iter().cloned());
        }
    }
    if let Some(a) = attach {
        if a.len() != parts.len() {
            return Err(ConstructionError::AttachmentCount {
                expected: parts.len(),
                got: a.len(),
            });
        }
    }
    let mut b = CertificateBuilder::new();
    let center = b.primitive(&Graph::empty(1), "singleton")?;
    let mut refs = Vec::with_capacity(parts.len());
    let mut union = IntPoly::one();
    let mut primitives: Vec<(&IntPoly, &Graph, usize)> = Vec::new();
    for (i, r) in parts.iter().enumerate() {
        let known = primitives
            .iter()
            .find(|(p, g, _)| **p == r.poly && **g == r.graph);
        let step = match known {
            Some(&(_, _, s)) => s,
            None => {
                let s = b.primitive(&r.graph, witness_origin(r))?;
                primitives.push((&r.poly, &r.graph, s));
                s
            }
        };
        union = &union * &tree_charpoly(&r.graph);
        refs.push(PartRef {
            graph: step,
            part_vertex: attach.map_or(0, |a| a[i]),
            base_vertex: 0,
        });
    }
    let target = b.double_composition(center, &refs)?;
    b.claim(Claim::Tree { target });
    b.claim(divides_claim(target, &spec.product(), DivisibilityMode::Exact));
    b.claim(divides_claim(target, &union, DivisibilityMode::Exact));
    Ok(b.finish()?)
}

fn tree_charpoly(t: &Graph) -> IntPoly {
    forest_charpoly(t).unwrap_or_else(|| charpoly(t))
}

/// Irreducible factors of `f` with multiplicity, pairing `mu` with `mu(-x)`
/// when both occur so that one witness serves the pair.
pub fn group_factors(f: &IntPoly) -> Result<Vec<(IntPoly, usize)>, ConstructionError> {
    let factors = factor_irreducible(f, DEFAULT_DEGREE_CAP)?.factors;
    let mut left: Vec<(IntPoly, usize)> = factors;
    let mut out = Vec::new();
    let mut i = 0;
    while i < left.len() {
        let (mu, m) = left[i].clone();
        let nu = mirror(&mu);
        let partner = (nu != mu)
            .then(|| left.iter().position(|(p, k)| *p == nu && *k > 0))
            .flatten();
        match partner {
            Some(j) if m > 0 => {
                let k = m.min(left[j].1);
                out.push((&mu * &nu, k));
                left[i].1 -= k;
                left[j].1 -= k;
                if left[i].1 > 0 {
                    out.push((mu, left[i].1));
                    left[i].1 = 0;
                }
            }
            _ if m > 0 => {
                out.push((mu, m));
                left[i].1 = 0;
            }
            _ => {}
        }
        i += 1;
    }
    Ok(out)
}

/// A tree whose characteristic polynomial is divisible by `charpoly(g)`,
/// with multiplicity.
pub fn divisor_tree(
    g: &Graph,
    source: &mut WitnessSource,
    attach: Option<&[usize]>,
) -> Result<(Graph, Certificate), ConstructionError> {
    if g.order() == 0 {
        return Err(GraphError::EmptyGraph.into());
    }
    let f = tree_charpoly(g);
    let spec = PrescribedSpectrum::from_entries(group_factors(&f)?)?;
    let (t, mut cert) = prescribe_tree(&spec, source, attach)?;
    let target = cert.steps.len() - 1;
    cert.claims
        .push(divides_claim(target, &f, DivisibilityMode::Exact));
    Ok((t, cert))
}

#[derive(Debug, Clone)]
pub struct Unimodalization {
    /// The cofactor `g` with `f * g = charpoly(tree)`.
    pub cofactor: IntPoly,
    pub tree: Graph,
    pub certificate: Certificate,
}

/// Finds `g` with `f * g` the characteristic polynomial of a tree, which
/// makes the coefficient profile of `f * g` unimodal. With `search_order`
/// set, trees up to that order are also scanned and the smallest tree
/// found either way is used.
pub fn unimodalize(
    f: &IntPoly,
    source: &mut WitnessSource,
    profile: ProfileMode,
    search_order: Option<usize>,
) -> Result<Unimodalization, ConstructionError> {
    match f.degree() {
        Some(d) if d >= 1 => {}
        _ => return Err(ConstructionError::Constant(f.clone())),
    }
    if !f.is_monic() {
        return Err(ConstructionError::NotMonic(f.clone()));
    }
    if !is_totally_real(&f.squarefree_part()) {
        return Err(ConstructionError::NotTotallyReal(f.clone()));
    }
    let spec = PrescribedSpectrum::from_entries(group_factors(f)?)?;
    let (mut tree, mut cert) = prescribe_tree(&spec, source, None)?;
    if let Some(order) = search_order {
        match find_tree_divisor(f, &SearchBound::trees(order)) {
            Ok(small) if small.order() < tree.order() => {
                let mut b = CertificateBuilder::new();
                let t = b.primitive(&small, format!("search within order {order}"))?;
                b.claim(Claim::Tree { target: t });
                let (g, c) = b.finish()?;
                tree = g;
                cert = c;
            }
            Ok(_) | Err(SearchError::NotFound { .. }) => {}
            Err(e) => return Err(e.into()),
        }
    }
    let target = cert.steps.len() - 1;
    let p = tree_charpoly(&tree);
    let cofactor = p.exact_div(f).expect("the tree's characteristic polynomial is divisible by f");
    if !is_unimodal(&abs_profile(&p, profile)) {
        return Err(ConstructionError::NotUnimodal(p));
    }
    if !cert
        .claims
        .iter()
        .any(|c| matches!(c, Claim::Divides { poly, .. } if *poly == f.to_csv()))
    {
        cert.claims.push(divides_claim(target, f, DivisibilityMode::Exact));
    }
    cert.claims.push(Claim::UnimodalProduct {
        target,
        factor: f.to_csv(),
        cofactor: cofactor.to_csv(),
        profile,
    });
    Ok(Unimodalization {
        cofactor,
        tree,
        certificate: cert,
    })
}

/// The first connected non-bipartite labeled graph, by order and then by
/// edge mask, having both 0 and 1 as eigenvalues.
pub fn smallest_gadget(max_order: usize) -> Result<Option<Graph>, ConstructionError> {
    for n in 3..=max_order {
        for g in enumerate_labeled_graphs(n)? {
            if g.is_bipartite() || !g.is_connected()? {
                continue;
            }
            let p = charpoly(&g);
            if p.coeff(0).sign() == num_bigint::Sign::NoSign
                && p.eval(&num_bigint::BigInt::from(1)).sign() == num_bigint::Sign::NoSign
            {
                return Ok(Some(g));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::contains_root;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn products_of_edges() {
        let k2 = Graph::path(2);
        let sum = cartesian_sum(&k2, &k2);
        assert_eq!(charpoly(&sum), p(&[0, 0, -4, 0, 1]));
        assert!(sum.is_connected().unwrap());
        let prod = tensor_product(&k2, &k2);
        assert_eq!(prod.edge_count(), 2);
        assert!(!prod.is_connected().unwrap());
        assert_eq!(cartesian_sum(&Graph::empty(1), &Graph::cycle(5)), Graph::cycle(5));
        assert!(tensor_product(&Graph::cycle(3), &k2).is_connected().unwrap());
        assert!(!tensor_product(&Graph::path(3), &k2).is_connected().unwrap());
    }

    #[test]
    fn gadgets() {
        for (variant, order) in [(GadgetVariant::Small, 7), (GadgetVariant::Large, 15)] {
            let f = gadget_f(variant);
            assert_eq!(f.order(), order);
            assert!(f.is_connected().unwrap() && !f.is_bipartite());
            assert!(contains_root(&f, &IntPoly::x()).unwrap());
            assert!(contains_root(&f, &p(&[-1, 1])).unwrap());
        }
        assert_eq!(gadget_f(GadgetVariant::Small).edge_count(), 7);
    }

    #[test]
    fn zero_augment_examples() {
        let h = zero_augment(&Graph::path(3), GadgetVariant::Small).unwrap();
        assert_eq!(h.order(), 21);
        assert!(h.is_connected().unwrap());
        assert!(contains_root(&h, &IntPoly::x()).unwrap());
        assert!(contains_root(&h, &p(&[-2, 0, 1])).unwrap());
        let h = zero_augment(&Graph::path(2), GadgetVariant::Small).unwrap();
        assert_eq!(h.order(), 14);
        for mu in [p(&[0, 1]), p(&[-1, 1]), p(&[1, 1])] {
            assert!(contains_root(&h, &mu).unwrap());
        }
        assert!(matches!(
            zero_augment(&Graph::empty(1), GadgetVariant::Small),
            Err(ConstructionError::NotAugmentable)
        ));
        assert!(zero_augment(&Graph::empty(2), GadgetVariant::Small).is_err());
    }

    #[test]
    fn composition_examples() {
        let parts = [
            Part {
                graph: Graph::path(2),
                part_vertex: 0,
                base_vertex: 0,
            },
            Part {
                graph: Graph::star(4),
                part_vertex: 0,
                base_vertex: 0,
            },
        ];
        let t = double_composition(&Graph::empty(1), &parts).unwrap();
        assert_eq!((t.order(), t.edge_count()), (15, 14));
        assert!(t.is_tree());
        assert!(p(&[4, 0, -5, 0, 1]).divides(&charpoly(&t)));
        let single = Part {
            graph: Graph::empty(1),
            part_vertex: 0,
            base_vertex: 0,
        };
        let p3 = double_composition(&Graph::empty(1), &[single]).unwrap();
        assert_eq!(p3.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 2)]);
        let bad = Part {
            graph: Graph::path(2),
            part_vertex: 2,
            base_vertex: 0,
        };
        assert!(double_composition(&Graph::empty(1), &[bad]).is_err());
    }

    #[test]
    fn spectrum_validation() {
        assert!(matches!(
            PrescribedSpectrum::new(&[]),
            Err(ConstructionError::EmptySpectrum)
        ));
        assert!(matches!(
            PrescribedSpectrum::new(&[p(&[1, 0, 1])]),
            Err(ConstructionError::NotTotallyReal(_))
        ));
        assert!(matches!(
            PrescribedSpectrum::new(&[p(&[1, 2, 1])]),
            Err(ConstructionError::NotSquarefree(_))
        ));
        assert!(matches!(
            PrescribedSpectrum::new(&[p(&[1, 2])]),
            Err(ConstructionError::NotMonic(_))
        ));
        let s = PrescribedSpectrum::new(&[p(&[-2, 0, 1]), p(&[-1, 0, 1]), p(&[-2, 0, 1])]).unwrap();
        assert_eq!(s.entries()[0].multiplicity, 2);
        assert_eq!(s.entries()[0].provenance, Provenance::Irreducible);
        assert_eq!(s.entries()[1].provenance, Provenance::Squarefree);
    }

    #[test]
    fn grouping_pairs_mirrored_factors() {
        let c3 = p(&[-2, -3, 0, 1]);
        let g = group_factors(&c3).unwrap();
        assert_eq!(g, vec![(p(&[-2, 1]), 1), (p(&[1, 1]), 2)]);
        let g = group_factors(&p(&[4, 0, -5, 0, 1])).unwrap();
        assert_eq!(g, vec![(p(&[-4, 0, 1]), 1), (p(&[-1, 0, 1]), 1)]);
        let g = group_factors(&(&p(&[-1, 1]).pow(2) * &p(&[1, 1]))).unwrap();
        assert_eq!(g.iter().map(|(_, m)| m).sum::<usize>(), 2);
    }
}
