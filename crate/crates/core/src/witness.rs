//! Witness graphs for prescribed eigenvalues.
//!
//! A witness for a monic polynomial `q` is a graph whose characteristic
//! polynomial is divisible by `q`. Sources are consulted in a fixed order:
//! user-supplied graphs, the persistent cache, closed-form families, and
//! finally bounded tree search.

use std::collections::BTreeMap;
use std::fmt;
use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;
use crate::poly::{is_totally_real, IntPoly, PolyError};
use crate::search::{find_joined_tree, find_tree_divisor, JoinBound, SearchBound, SearchError};
use crate::spectral::{charpoly, forest_charpoly};

/// Longest path tried as a closed-form witness.
pub const PATH_WITNESS_LIMIT: usize = 32;

#[derive(Debug, Error)]
pub enum WitnessError {
    #[error("user witness for {poly} rejected: {reason}")]
    Rejected { poly: IntPoly, reason: String },
    #[error(transparent)]
    Search(#[from] SearchError),
    #[error("witness cache {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
}

/// Where a witness came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum WitnessOrigin {
    User,
    Cache,
    ClosedForm,
    Search,
}

impl fmt::Display for WitnessOrigin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WitnessOrigin::User => "user",
            WitnessOrigin::Cache => "cache",
            WitnessOrigin::ClosedForm => "closed-form",
            WitnessOrigin::Search => "search",
        })
    }
}

/// Shape a witness must have.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WitnessKind {
    /// Any tree, including the single vertex.
    Tree,
    /// A connected graph with at least one edge.
    Connected,
}

impl WitnessKind {
    fn admits(self, g: &Graph) -> Result<(), String> {
        match self {
            WitnessKind::Tree if g.is_tree() => Ok(()),
            WitnessKind::Tree => Err("not a tree".into()),
            WitnessKind::Connected if g.order() >= 2 && g.is_connected().unwrap_or(false) => {
                Ok(())
            }
            WitnessKind::Connected => Err("not a connected graph with an edge".into()),
        }
    }

    fn min_order(self) -> usize {
        match self {
            WitnessKind::Tree => 1,
            WitnessKind::Connected => 2,
        }
    }
}

fn graph_charpoly(g: &Graph) -> IntPoly {
    forest_charpoly(g).unwrap_or_else(|| charpoly(g))
}

fn check_witness(q: &IntPoly, g: &Graph, kind: WitnessKind) -> Result<(), String> {
    kind.admits(g)?;
    if q.divides(&graph_charpoly(g)) {
        Ok(())
    } else {
        Err(format!("{q} does not divide its characteristic polynomial"))
    }
}

/// Persistent map from polynomials to witness graphs, one
/// `<csv><TAB><graph6>` entry per line.
#[derive(Debug, Clone, Default)]
pub struct WitnessCache {
    path: Option<PathBuf>,
    entries: BTreeMap<String, String>,
}

impl WitnessCache {
    pub fn in_memory() -> Self {
        Self::default()
    }

    /// Loads `path` if it exists. Every entry is re-verified; malformed or
    /// failing lines are dropped with a warning.
    pub fn open(path: impl AsRef<Path>) -> Result<Self, WitnessError> {
        let path = path.as_ref().to_path_buf();
        let mut cache = WitnessCache {
            path: Some(path.clone()),
            entries: BTreeMap::new(),
        };
        let text = match fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) if e.kind() == io::ErrorKind::NotFound => return Ok(cache),
            Err(source) => return Err(WitnessError::Io { path, source }),
        };
        for (lineno, line) in text.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            match Self::parse_line(line) {
                Ok((q, g)) => {
                    cache.entries.insert(q.to_csv(), g.to_graph6().expect("parsed graph6"));
                }
                Err(reason) => log::warn!(
                    "dropping witness cache line {} of {}: {reason}",
                    lineno + 1,
                    path.display()
                ),
            }
        }
        Ok(cache)
    }

    fn parse_line(line: &str) -> Result<(IntPoly, Graph), String> {
        let (csv, g6) = line.split_once('\t').ok_or("missing tab separator")?;
        let q: IntPoly = csv.parse().map_err(|e| format!("{e}"))?;
        if q.degree().unwrap_or(0) == 0 || !q.is_monic() {
            return Err("polynomial must be monic and nonconstant".into());
        }
        let g = Graph::from_graph6(g6.trim()).map_err(|e| format!("{e}"))?;
        if !q.divides(&graph_charpoly(&g)) {
            return Err(format!("{q} does not divide the characteristic polynomial"));
        }
        Ok((q, g))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, q: &IntPoly) -> Option<Graph> {
        self.entries
            .get(&q.to_csv())
            .and_then(|g6| Graph::from_graph6(g6).ok())
    }

    pub fn insert(&mut self, q: &IntPoly, g: &Graph) {
        if let Ok(g6) = g.to_graph6() {
            self.entries.insert(q.to_csv(), g6);
        }
    }

    /// Writes the cache back to its file; in-memory caches are unaffected.
    pub fn save(&self) -> Result<(), WitnessError> {
        let Some(path) = &self.path else {
            return Ok(());
        };
        let mut text = String::new();
        for (csv, g6) in &self.entries {
            text.push_str(csv);
            text.push('\t');
            text.push_str(g6);
            text.push('\n');
        }
        fs::write(path, text).map_err(|source| WitnessError::Io {
            path: path.clone(),
            source,
        })
    }
}

/// Strategy chain producing verified witnesses.
#[derive(Debug, Clone)]
pub struct WitnessSource {
    user: BTreeMap<String, Graph>,
    cache: WitnessCache,
    bound: SearchBound,
    join: Option<JoinBound>,
}

impl Default for WitnessSource {
    fn default() -> Self {
        WitnessSource::new(SearchBound::default())
    }
}

impl WitnessSource {
    pub fn new(bound: SearchBound) -> Self {
        WitnessSource {
            user: BTreeMap::new(),
            cache: WitnessCache::default(),
            bound,
            join: Some(JoinBound::default()),
        }
    }

    /// Limits for the hub-tree fallback, or `None` to disable it.
    pub fn with_join(mut self, join: Option<JoinBound>) -> Self {
        self.join = join;
        self
    }

    pub fn with_cache(mut self, cache: WitnessCache) -> Self {
        self.cache = cache;
        self
    }

    pub fn with_user(mut self, q: &IntPoly, g: Graph) -> Self {
        self.user.insert(q.to_csv(), g);
        self
    }

    pub fn bound(&self) -> &SearchBound {
        &self.bound
    }

    pub fn cache(&self) -> &WitnessCache {
        &self.cache
    }

    pub fn has_user_witness(&self, q: &IntPoly) -> bool {
        self.user.contains_key(&q.to_csv())
    }

    /// A verified witness of the requested kind for the monic `q`.
    pub fn witness(
        &mut self,
        q: &IntPoly,
        kind: WitnessKind,
    ) -> Result<(Graph, WitnessOrigin), WitnessError> {
        match q.degree() {
            Some(d) if d >= 1 => {}
            _ => return Err(SearchError::Poly(PolyError::Constant).into()),
        }
        if !q.is_monic() {
            return Err(SearchError::Poly(PolyError::NotMonic(q.clone())).into());
        }
        if !is_totally_real(&q.squarefree_part()) {
            return Err(SearchError::NotTotallyReal(q.clone()).into());
        }
        if let Some(g) = self.user.get(&q.to_csv()) {
            return match check_witness(q, g, kind) {
                Ok(()) => Ok((g.clone(), WitnessOrigin::User)),
                Err(reason) => Err(WitnessError::Rejected {
                    poly: q.clone(),
                    reason,
                }),
            };
        }
        if let Some(g) = self.cache.get(q) {
            if check_witness(q, &g, kind).is_ok() {
                return Ok((g, WitnessOrigin::Cache));
            }
        }
        if let Some(g) = closed_form(q, kind) {
            debug_assert!(check_witness(q, &g, kind).is_ok());
            return Ok((g, WitnessOrigin::ClosedForm));
        }
        let bound = self
            .bound
            .with_min_order(self.bound.min_order.max(kind.min_order()));
        let g = match (find_tree_divisor(q, &bound), &self.join) {
            (Ok(g), _) => g,
            (Err(SearchError::NotFound { .. }), Some(join)) if q.degree() > Some(1) => {
                match find_joined_tree(q, join) {
                    Ok(g) => g,
                    Err(SearchError::Reducible(_)) => {
                        return Err(SearchError::NotFound {
                            poly: q.clone(),
                            bound,
                        }
                        .into())
                    }
                    Err(e) => return Err(e.into()),
                }
            }
            (Err(e), _) => return Err(e.into()),
        };
        check_witness(q, &g, kind).expect("search results divide");
        self.cache.insert(q, &g);
        Ok((g, WitnessOrigin::Search))
    }
}

/// Witnesses from families with known spectra: stars for `x - k` and
/// `x^2 - k`, the single vertex for `x`, and paths.
pub fn closed_form(q: &IntPoly, kind: WitnessKind) -> Option<Graph> {
    let c = q.coeffs();
    let is_x = |p: &IntPoly| p.degree() == Some(1) && p.coeff(0).is_zero();
    if is_x(q) {
        if kind == WitnessKind::Tree {
            return Some(Graph::empty(1));
        }
    } else if q.degree() == Some(1) && q.is_monic() {
        let k = c[0].abs().to_usize()?;
        return Some(Graph::star(k.checked_mul(k)?));
    } else if q.degree() == Some(2) && q.is_monic() && c[1].is_zero() && c[0].is_negative() {
        let k = (-&c[0]).to_usize()?;
        return Some(Graph::star(k));
    }
    let mut prev = IntPoly::one();
    let mut cur = IntPoly::x();
    let x = IntPoly::x();
    for n in 1..=PATH_WITNESS_LIMIT {
        if n >= kind.min_order() && q.divides(&cur) {
            return Some(Graph::path(n));
        }
        let next = &x * &cur - prev;
        prev = std::mem::replace(&mut cur, next);
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    fn linear(k: i64) -> IntPoly {
        IntPoly::linear(k)
    }

    #[test]
    fn closed_forms() {
        assert_eq!(closed_form(&linear(4), WitnessKind::Tree), Some(Graph::star(16)));
        assert_eq!(closed_form(&linear(-1), WitnessKind::Tree), Some(Graph::star(1)));
        assert_eq!(closed_form(&p(&[-4, 0, 1]), WitnessKind::Tree), Some(Graph::star(4)));
        assert_eq!(closed_form(&IntPoly::x(), WitnessKind::Tree), Some(Graph::empty(1)));
        assert_eq!(closed_form(&IntPoly::x(), WitnessKind::Connected), Some(Graph::path(3)));
        assert_eq!(closed_form(&p(&[-1, -1, 1]), WitnessKind::Tree), Some(Graph::path(4)));
        // 2cos(2pi/7) has a cubic minimal polynomial and lives in P_6.
        assert_eq!(closed_form(&p(&[1, -2, -1, 1]), WitnessKind::Tree), Some(Graph::path(6)));
        assert_eq!(closed_form(&p(&[-5, -1, 1]), WitnessKind::Tree), None);
    }

    #[test]
    fn user_witness_checked() {
        let q = p(&[-2, 0, 1]);
        let mut src = WitnessSource::new(SearchBound::trees(6)).with_user(&q, Graph::path(3));
        assert_eq!(src.witness(&q, WitnessKind::Tree).unwrap().1, WitnessOrigin::User);
        let mut bad = WitnessSource::new(SearchBound::trees(6)).with_user(&q, Graph::path(4));
        assert!(matches!(
            bad.witness(&q, WitnessKind::Tree),
            Err(WitnessError::Rejected { .. })
        ));
        let mut cyc = WitnessSource::new(SearchBound::trees(6)).with_user(&linear(2), Graph::cycle(3));
        assert!(cyc.witness(&linear(2), WitnessKind::Tree).is_err());
        assert!(cyc.witness(&linear(2), WitnessKind::Connected).is_ok());
    }

    #[test]
    fn search_fills_cache() {
        let q = p(&[-3, -1, 1]);
        let mut src = WitnessSource::new(SearchBound::trees(8));
        let (g, origin) = src.witness(&q, WitnessKind::Tree).unwrap();
        assert_eq!(origin, WitnessOrigin::Search);
        assert!(q.divides(&charpoly(&g)));
        assert_eq!(src.witness(&q, WitnessKind::Tree).unwrap(), (g, WitnessOrigin::Cache));
    }

    #[test]
    fn cache_file_round_trip_drops_corrupt_lines() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("witnesses.tsv");
        {
            let mut f = fs::File::create(&path).unwrap();
            writeln!(f, "-2,0,1\tBg").unwrap();
            writeln!(f, "-3,0,1\tBg").unwrap();
            writeln!(f, "garbage").unwrap();
            writeln!(f, "-1,0,1\t!!").unwrap();
        }
        let cache = WitnessCache::open(&path).unwrap();
        assert_eq!(cache.len(), 1);
        assert_eq!(cache.get(&p(&[-2, 0, 1])), Some(Graph::path(3)));
        cache.save().unwrap();
        let reread = fs::read_to_string(&path).unwrap();
        assert_eq!(reread, "-2,0,1\tBg\n");
        assert!(WitnessCache::open(dir.path().join("missing")).unwrap().is_empty());
    }

    #[test]
    fn hub_fallback_covers_enumeration_gaps() {
        let q = p(&[-4, -2, 1]);
        let mut src = WitnessSource::new(SearchBound::trees(10));
        let (g, origin) = src.witness(&q, WitnessKind::Tree).unwrap();
        assert_eq!(origin, WitnessOrigin::Search);
        assert!(g.is_tree() && g.order() > 10);
        let mut strict = WitnessSource::new(SearchBound::trees(10)).with_join(None);
        assert!(matches!(
            strict.witness(&q, WitnessKind::Tree),
            Err(WitnessError::Search(SearchError::NotFound { .. }))
        ));
    }
}
