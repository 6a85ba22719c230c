//! Simple undirected graphs on dense vertex sets `0..n`.
//!
//! Graphs are immutable once built. Every operation that combines graphs
//! fixes its relabeling explicitly so that results (and the certificates
//! that describe them) are reproducible byte-for-byte.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("edge ({u}, {v}) has an endpoint outside 0..{order}")]
    EndpointOutOfRange { u: usize, v: usize, order: usize },
    #[error("vertex {vertex} is outside 0..{order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("invalid size {size} for {family}")]
    InvalidSize { family: &'static str, size: usize },
    #[error("operation requires a graph of order at least 1")]
    EmptyGraph,
    #[error("malformed graph6 encoding: {0}")]
    MalformedGraph6(String),
    #[error("order {0} is not supported by graph6")]
    UnsupportedOrder(usize),
    #[error("malformed edge list: {0}")]
    MalformedEdgeList(String),
}

/// A simple undirected graph.
///
/// Equality compares structure only; vertex labels are annotations.
#[derive(Clone, Default)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    labels: BTreeMap<usize, String>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.adjacency == other.adjacency
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("order", &self.order())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Standard families with a fixed canonical labeling.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Path,
    Cycle,
    Complete,
    /// `Star(k)` is K₁,ₖ with the center at vertex 0.
    Star,
    Empty,
}

impl Family {
    fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Complete => "complete",
            Family::Star => "star",
            Family::Empty => "empty",
        }
    }
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges collapse.
    pub fn new(order: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut adjacency = vec![Vec::new(); order];
        for &(u, v) in edges {
            if u >= order || v >= order {
                return Err(GraphError::EndpointOutOfRange { u, v, order });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph {
            adjacency,
            labels: BTreeMap::new(),
        })
    }

    /// The edgeless graph on `order` vertices.
    pub fn empty(order: usize) -> Self {
        Graph {
            adjacency: vec![Vec::new(); order],
            labels: BTreeMap::new(),
        }
    }

    /// Canonical labeled instance of a named family.
    ///
    /// `size` is the vertex count, except for `Star` where it is the number
    /// of leaves (so `named(Star, 4)` is K₁,₄ on 5 vertices).
    pub fn named(family: Family, size: usize) -> Result<Self, GraphError> {
        let invalid = || GraphError::InvalidSize {
            family: family.name(),
            size,
        };
        let edges: Vec<(usize, usize)> = match family {
            Family::Path => {
                if size < 1 {
                    return Err(invalid());
                }
                (1..size).map(|i| (i - 1, i)).collect()
            }
            Family::Cycle => {
                if size < 3 {
                    return Err(invalid());
                }
                (0..size).map(|i| (i, (i + 1) % size)).collect()
            }
            Family::Complete => {
                if size < 1 {
                    return Err(invalid());
                }
                (0..size)
                    .flat_map(|i| (i + 1..size).map(move |j| (i, j)))
                    .collect()
            }
            Family::Star => {
                if size < 1 {
                    return Err(invalid());
                }
                (1..=size).map(|i| (0, i)).collect()
            }
            Family::Empty => {
                if size < 1 {
                    return Err(invalid());
                }
                Vec::new()
            }
        };
        let order = if family == Family::Star { size + 1 } else { size };
        Graph::new(order, &edges)
    }

    pub fn path(n: usize) -> Self {
        Self::named(Family::Path, n).expect("path order must be at least 1")
    }

    pub fn cycle(n: usize) -> Self {
        Self::named(Family::Cycle, n).expect("cycle order must be at least 3")
    }

    pub fn complete(n: usize) -> Self {
        Self::named(Family::Complete, n).expect("complete graph order must be at least 1")
    }

    /// K₁,ₖ with center 0.
    pub fn star(leaves: usize) -> Self {
        Self::named(Family::Star, leaves).expect("star needs at least one leaf")
    }

    pub fn order(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.get(&v).map(String::as_str)
    }

    pub fn with_label(mut self, v: usize, label: impl Into<String>) -> Self {
        assert!(v < self.order(), "label on missing vertex {v}");
        self.labels.insert(v, label.into());
        self
    }

    /// Returns a copy of the graph with one extra edge, or the same graph if
    /// the edge already exists.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Self, GraphError> {
        let mut edges: Vec<_> = self.edges().collect();
        edges.push((u, v));
        let mut g = Graph::new(self.order(), &edges)?;
        g.labels = self.labels.clone();
        Ok(g)
    }

    /// Returns a copy with edge `{u, v}` toggled.
    pub fn toggle_edge(&self, u: usize, v: usize) -> Result<Self, GraphError> {
        if self.has_edge(u, v) {
            let edges: Vec<_> = self
                .edges()
                .filter(|&e| e != (u.min(v), u.max(v)))
                .collect();
            Graph::new(self.order(), &edges)
        } else {
            self.with_edge(u, v)
        }
    }

    /// True iff a traversal from vertex 0 reaches every vertex.
    pub fn is_connected(&self) -> Result<bool, GraphError> {
        if self.order() == 0 {
            return Err(GraphError::EmptyGraph);
        }
        Ok(self.component_of(0).len() == self.order())
    }

    /// True iff the graph admits a proper 2-coloring.
    pub fn is_bipartite(&self) -> bool {
        self.two_coloring().is_some()
    }

    /// A proper 2-coloring, if one exists.
    pub fn two_coloring(&self) -> Option<Vec<bool>> {
        let n = self.order();
        let mut color: Vec<Option<bool>> = vec![None; n];
        let mut queue = VecDeque::new();
        for start in 0..n {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(false);
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].unwrap();
                for &w in &self.adjacency[u] {
                    match color[w] {
                        None => {
                            color[w] = Some(!cu);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cu => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(color.into_iter().map(Option::unwrap).collect())
    }

    /// Acyclic and connected.
    pub fn is_tree(&self) -> bool {
        self.order() >= 1
            && self.edge_count() + 1 == self.order()
            && self.is_connected().unwrap_or(false)
    }

    pub fn is_forest(&self) -> bool {
        self.edge_count() + self.components().len() == self.order()
    }

    /// Vertex sets of the connected components, each sorted, ordered by
    /// smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.order()];
        let mut out = Vec::new();
        for v in 0..self.order() {
            if !seen[v] {
                let comp = self.component_of(v);
                for &u in &comp {
                    seen[u] = true;
                }
                out.push(comp);
            }
        }
        out
    }

    fn component_of(&self, start: usize) -> Vec<usize> {
        let mut seen = vec![false; self.order()];
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        let mut comp = Vec::new();
        while let Some(u) = queue.pop_front() {
            comp.push(u);
            for &w in &self.adjacency[u] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        comp.sort_unstable();
        comp
    }

    /// Induced subgraph on `vertices`, relabeled in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.order()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let edges: Vec<_> = self
            .edges()
            .filter(|&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|(u, v)| (index[u], index[v]))
            .collect();
        Graph::new(vertices.len(), &edges).expect("induced edges are in range")
    }

    /// Relabels vertex `v` to `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.order());
        let edges: Vec<_> = self.edges().map(|(u, v)| (perm[u], perm[v])).collect();
        Graph::new(self.order(), &edges).expect("permutation keeps edges in range")
    }

    /// Dense 0/1 adjacency rows.
    pub fn adjacency_rows(&self) -> Vec<Vec<bool>> {
        let n = self.order();
        let mut rows = vec![vec![false; n]; n];
        for (u, v) in self.edges() {
            rows[u][v] = true;
            rows[v][u] = true;
        }
        rows
    }

    /// Builds a graph from a symmetric boolean relation.
    pub fn from_adjacency_rows(rows: &[Vec<bool>]) -> Result<Graph, GraphError> {
        let n = rows.len();
        let mut edges = Vec::new();
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(GraphError::MalformedEdgeList(format!(
                    "row {i} has length {} in a {n}-vertex matrix",
                    row.len()
                )));
            }
            if row[i] {
                return Err(GraphError::SelfLoop(i));
            }
            for j in i + 1..n {
                if row[j] != rows[j][i] {
                    return Err(GraphError::MalformedEdgeList(format!(
                        "relation is not symmetric at ({i}, {j})"
                    )));
                }
                if row[j] {
                    edges.push((i, j));
                }
            }
        }
        Graph::new(n, &edges)
    }

    /// The edge-list text format: `n m` on the first line, then `u v` lines.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.order(), self.edge_count());
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
        let bad = |msg: String| GraphError::MalformedEdgeList(msg);
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines.next().ok_or_else(|| bad("missing header".into()))?;
        let parse_pair = |line: &str| -> Result<(usize, usize), GraphError> {
            let mut it = line.split_whitespace();
            let a = it.next().and_then(|t| t.parse().ok());
            let b = it.next().and_then(|t| t.parse().ok());
            match (a, b, it.next()) {
                (Some(a), Some(b), None) => Ok((a, b)),
                _ => Err(bad(format!("expected two integers, got {line:?}"))),
            }
        };
        let (n, m) = parse_pair(header)?;
        let edges = lines.map(parse_pair).collect::<Result<Vec<_>, _>>()?;
        if edges.len() != m {
            return Err(bad(format!("header announces {m} edges, found {}", edges.len())));
        }
        Graph::new(n, &edges)
    }
}

/// Concatenates the parts, shifting each part's labels by the orders of the
/// parts before it.
pub fn disjoint_union(parts: &[Graph]) -> Graph {
    let mut edges = Vec::new();
    let mut labels = BTreeMap::new();
    let mut offset = 0;
    for part in parts {
        edges.extend(part.edges().map(|(u, v)| (u + offset, v + offset)));
        for (&v, label) in &part.labels {
            labels.insert(v + offset, label.clone());
        }
        offset += part.order();
    }
    let mut g = Graph::new(offset, &edges).expect("shifted edges are in range");
    g.labels = labels;
    g
}

// graph6: https://users.cecs.anu.edu.au/~bdm/data/formats.txt

const GRAPH6_HEADER: &str = ">>graph6<<";
const GRAPH6_MAX_ORDER: usize = 68_719_476_735;

fn encode_order(n: usize, out: &mut Vec<u8>) -> Result<(), GraphError> {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else if n <= GRAPH6_MAX_ORDER {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        return Err(GraphError::UnsupportedOrder(n));
    }
    Ok(())
}

impl Graph {
    /// Encodes the graph in graph6 (upper triangle, column by column).
    pub fn to_graph6(&self) -> Result<String, GraphError> {
        let n = self.order();
        let mut out = Vec::new();
        encode_order(n, &mut out)?;
        let mut acc = 0u8;
        let mut bits = 0;
        for j in 1..n {
            for i in 0..j {
                acc = (acc << 1) | u8::from(self.has_edge(i, j));
                bits += 1;
                if bits == 6 {
                    out.push(acc + 63);
                    acc = 0;
                    bits = 0;
                }
            }
        }
        if bits > 0 {
            out.push((acc << (6 - bits)) + 63);
        }
        Ok(String::from_utf8(out).expect("graph6 bytes are printable ASCII"))
    }

    pub fn from_graph6(text: &str) -> Result<Graph, GraphError> {
        let bad = |msg: &str| GraphError::MalformedGraph6(msg.to_string());
        let text = text.trim_end_matches(['\n', '\r']);
        let text = text.strip_prefix(GRAPH6_HEADER).unwrap_or(text);
        let bytes = text.as_bytes();
        if bytes.is_empty() {
            return Err(bad("empty input"));
        }
        if let Some(b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
            return Err(GraphError::MalformedGraph6(format!(
                "byte {b:#04x} outside the printable graph6 range"
            )));
        }
        let (n, body) = if bytes[0] != 126 {
            ((bytes[0] - 63) as usize, &bytes[1..])
        } else if bytes.len() >= 2 && bytes[1] == 126 {
            if bytes.len() < 8 {
                return Err(bad("truncated order field"));
            }
            let n = bytes[2..8]
                .iter()
                .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
            if n <= 258_047 {
                return Err(bad("non-minimal order field"));
            }
            (n, &bytes[8..])
        } else {
            if bytes.len() < 4 {
                return Err(bad("truncated order field"));
            }
            let n = bytes[1..4]
                .iter()
                .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
            if n <= 62 {
                return Err(bad("non-minimal order field"));
            }
            (n, &bytes[4..])
        };
        let pairs = n * n.saturating_sub(1) / 2;
        let expected = pairs.div_ceil(6);
        if body.len() != expected {
            return Err(GraphError::MalformedGraph6(format!(
                "order {n} needs {expected} data bytes, found {}",
                body.len()
            )));
        }
        let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
        for k in pairs..expected * 6 {
            if bit(k) {
                return Err(bad("nonzero padding bits"));
            }
        }
        let mut edges = Vec::new();
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if bit(k) {
                    edges.push((i, j));
                }
                k += 1;
            }
        }
        Graph::new(n, &edges)
    }
}
