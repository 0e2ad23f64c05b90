//! Labeled defining graphs and the graph-combinatorial queries the bound
//! engine and the certificate checker rely on.
//!
//! A [`DefiningGraph`] is a finite simplicial graph whose edges carry either
//! an integer coefficient (Artin/Coxeter presentations) or a relator word
//! (graph-group presentations). Graphs are immutable after construction and
//! every query here is a pure function, so values can be shared freely.

use std::collections::BTreeMap;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::word::{validate_edge_word, Word};

/// Hard cap imposed by the bitset adjacency representation.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("invalid vertex name `{0}` (expected letter followed by letters, digits or `_`)")]
    InvalidName(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("duplicate edge [{0}, {1}]")]
    DuplicateEdge(String, String),
    #[error("loop edge at `{0}`")]
    LoopEdge(String),
    #[error("coefficient label must be >= 2, got {0}")]
    InvalidCoefficient(u32),
    #[error("edge label kind does not match group kind `{0}`")]
    LabelKindMismatch(GroupKind),
    #[error("invalid relator on edge [{a}, {b}]: {source}")]
    InvalidRelator {
        a: String,
        b: String,
        #[source]
        source: crate::word::WordError,
    },
    #[error("graph has {0} vertices; at most {MAX_VERTICES} are supported")]
    TooManyVertices(usize),
    #[error("empty graph has no cliques")]
    EmptyGraph,
    #[error("graph is a forest; it has no cycle vertex")]
    Forest,
}

/// Name of a generator vertex. Ordering is lexicographic on the name.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexId(String);

impl VertexId {
    pub fn new(name: impl Into<String>) -> Result<Self, GraphError> {
        let name = name.into();
        if Self::is_valid(&name) {
            Ok(VertexId(name))
        } else {
            Err(GraphError::InvalidName(name))
        }
    }

    pub fn is_valid(name: &str) -> bool {
        let mut chars = name.chars();
        match chars.next() {
            Some(c) if c.is_ascii_alphabetic() => {
                chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
            }
            _ => false,
        }
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VertexId({})", self.0)
    }
}

impl FromStr for VertexId {
    type Err = GraphError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        VertexId::new(s)
    }
}

/// Which presentation the defining graph encodes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GroupKind {
    Artin,
    Coxeter,
    GraphGroup,
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GroupKind::Artin => "artin",
            GroupKind::Coxeter => "coxeter",
            GroupKind::GraphGroup => "graphgroup",
        })
    }
}

impl FromStr for GroupKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "artin" => Ok(GroupKind::Artin),
            "coxeter" => Ok(GroupKind::Coxeter),
            "graphgroup" => Ok(GroupKind::GraphGroup),
            other => Err(format!("unknown kind `{other}`")),
        }
    }
}

/// Edge label: a braid coefficient for Artin/Coxeter graphs, a relator word
/// for graph-group graphs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EdgeLabel {
    Coefficient(u32),
    Relator(Word),
}

impl fmt::Display for EdgeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EdgeLabel::Coefficient(m) => write!(f, "{m}"),
            EdgeLabel::Relator(w) => write!(f, "{w}"),
        }
    }
}

/// A subset of a graph's vertices. Always interpreted as the full subgraph
/// it spans.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord)]
pub struct VertexSet(BTreeSet<VertexId>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(BTreeSet::new())
    }

    pub fn insert(&mut self, v: VertexId) -> bool {
        self.0.insert(v)
    }

    pub fn contains(&self, v: &VertexId) -> bool {
        self.0.contains(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &VertexId> {
        self.0.iter()
    }

    pub fn names(&self) -> Vec<String> {
        self.0.iter().map(|v| v.as_str().to_owned()).collect()
    }
}

impl FromIterator<VertexId> for VertexSet {
    fn from_iter<T: IntoIterator<Item = VertexId>>(iter: T) -> Self {
        VertexSet(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = &'a VertexId;
    type IntoIter = std::collections::btree_set::Iter<'a, VertexId>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Headline combinatorial statistics of a defining graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphStats {
    /// Clique number: the number of vertices of the largest clique.
    pub sim: usize,
    /// First Betti number |E| - |V| + #components; 0 exactly for forests.
    pub betti: usize,
    pub components: usize,
    /// Exact chromatic number for small graphs, a greedy upper bound beyond.
    pub chromatic_upper: usize,
}

/// Immutable labeled defining graph.
///
/// Vertices are stored sorted, so the internal index order coincides with
/// the lexicographic order on names. Adjacency is kept as one bitset per
/// vertex, which keeps the subgraph-heavy recursion in the engine cheap.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DefiningGraph {
    kind: GroupKind,
    names: Vec<VertexId>,
    adj: Vec<u64>,
    /// Adjacency restricted to coefficient-2 edges (free-abelian cliques).
    adj2: Vec<u64>,
    labels: BTreeMap<(usize, usize), EdgeLabel>,
}

impl DefiningGraph {
    /// Builds a graph, validating simpliciality, label kinds and (for graph
    /// groups) every relator word against its edge's endpoints.
    pub fn new(
        kind: GroupKind,
        vertices: Vec<VertexId>,
        edges: Vec<(VertexId, VertexId, EdgeLabel)>,
    ) -> Result<Self, GraphError> {
        if vertices.len() > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(vertices.len()));
        }
        let mut names = vertices;
        names.sort();
        for w in names.windows(2) {
            if w[0] == w[1] {
                return Err(GraphError::DuplicateVertex(w[0].as_str().to_owned()));
            }
        }
        let index = |v: &VertexId| -> Result<usize, GraphError> {
            names
                .binary_search(v)
                .map_err(|_| GraphError::UnknownVertex(v.as_str().to_owned()))
        };
        let mut adj = vec![0u64; names.len()];
        let mut adj2 = vec![0u64; names.len()];
        let mut labels = BTreeMap::new();
        for (a, b, label) in edges {
            if a == b {
                return Err(GraphError::LoopEdge(a.as_str().to_owned()));
            }
            let (ia, ib) = (index(&a)?, index(&b)?);
            let key = (ia.min(ib), ia.max(ib));
            let label = match (&label, kind) {
                (EdgeLabel::Coefficient(m), GroupKind::Artin | GroupKind::Coxeter) => {
                    if *m < 2 {
                        return Err(GraphError::InvalidCoefficient(*m));
                    }
                    label
                }
                (EdgeLabel::Relator(w), GroupKind::GraphGroup) => {
                    let w = validate_edge_word(w.clone(), &a, &b).map_err(|source| {
                        GraphError::InvalidRelator {
                            a: a.as_str().to_owned(),
                            b: b.as_str().to_owned(),
                            source,
                        }
                    })?;
                    EdgeLabel::Relator(w)
                }
                _ => return Err(GraphError::LabelKindMismatch(kind)),
            };
            if labels.insert(key, label).is_some() {
                return Err(GraphError::DuplicateEdge(
                    names[key.0].as_str().to_owned(),
                    names[key.1].as_str().to_owned(),
                ));
            }
            adj[ia] |= 1 << ib;
            adj[ib] |= 1 << ia;
            if matches!(labels[&key], EdgeLabel::Coefficient(2)) {
                adj2[ia] |= 1 << ib;
                adj2[ib] |= 1 << ia;
            }
        }
        Ok(DefiningGraph {
            kind,
            names,
            adj,
            adj2,
            labels,
        })
    }

    /// Convenience constructor for coefficient-labeled graphs.
    pub fn from_coefficient_edges(
        kind: GroupKind,
        vertices: &[&str],
        edges: &[(&str, &str, u32)],
    ) -> Result<Self, GraphError> {
        let vs = vertices
            .iter()
            .map(|n| VertexId::new(*n))
            .collect::<Result<Vec<_>, _>>()?;
        let es = edges
            .iter()
            .map(|(a, b, m)| {
                Ok((
                    VertexId::new(*a)?,
                    VertexId::new(*b)?,
                    EdgeLabel::Coefficient(*m),
                ))
            })
            .collect::<Result<Vec<_>, GraphError>>()?;
        DefiningGraph::new(kind, vs, es)
    }

    pub fn kind(&self) -> GroupKind {
        self.kind
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.labels.len()
    }

    /// Vertices in ascending (lexicographic) order.
    pub fn vertices(&self) -> &[VertexId] {
        &self.names
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.names.iter().cloned().collect()
    }

    pub fn contains_vertex(&self, v: &VertexId) -> bool {
        self.names.binary_search(v).is_ok()
    }

    pub fn index_of(&self, v: &VertexId) -> Option<usize> {
        self.names.binary_search(v).ok()
    }

    pub fn name(&self, index: usize) -> &VertexId {
        &self.names[index]
    }

    pub fn adjacent(&self, a: &VertexId, b: &VertexId) -> bool {
        match (self.index_of(a), self.index_of(b)) {
            (Some(i), Some(j)) => self.adj[i] & (1 << j) != 0,
            _ => false,
        }
    }

    pub fn label(&self, a: &VertexId, b: &VertexId) -> Option<&EdgeLabel> {
        let i = self.index_of(a)?;
        let j = self.index_of(b)?;
        self.labels.get(&(i.min(j), i.max(j)))
    }

    /// Edges in ascending order of their (sorted) endpoint pair.
    pub fn edges(&self) -> impl Iterator<Item = (&VertexId, &VertexId, &EdgeLabel)> {
        self.labels
            .iter()
            .map(move |(&(i, j), l)| (&self.names[i], &self.names[j], l))
    }

    // ---- mask-level internals shared by the engine and the checker ----

    pub(crate) fn full_mask(&self) -> u64 {
        if self.names.is_empty() {
            0
        } else if self.names.len() == 64 {
            u64::MAX
        } else {
            (1u64 << self.names.len()) - 1
        }
    }

    pub(crate) fn mask_of(&self, vs: &VertexSet) -> Result<u64, GraphError> {
        let mut mask = 0u64;
        for v in vs.iter() {
            let i = self
                .index_of(v)
                .ok_or_else(|| GraphError::UnknownVertex(v.as_str().to_owned()))?;
            mask |= 1 << i;
        }
        Ok(mask)
    }

    pub(crate) fn set_of(&self, mask: u64) -> VertexSet {
        bits(mask).map(|i| self.names[i].clone()).collect()
    }

    pub(crate) fn adj_in(&self, v: usize, mask: u64) -> u64 {
        self.adj[v] & mask
    }

    pub(crate) fn edge_count_in(&self, mask: u64) -> usize {
        bits(mask)
            .map(|v| (self.adj[v] & mask & !low_bits(v + 1)).count_ones() as usize)
            .sum()
    }

    pub(crate) fn components_in(&self, mask: u64) -> Vec<u64> {
        let mut out = Vec::new();
        let mut seen = 0u64;
        for v in bits(mask) {
            if seen & (1 << v) != 0 {
                continue;
            }
            let mut comp = 1u64 << v;
            let mut frontier = comp;
            while frontier != 0 {
                let mut next = 0u64;
                for u in bits(frontier) {
                    next |= self.adj[u] & mask & !comp;
                }
                comp |= next;
                frontier = next;
            }
            seen |= comp;
            out.push(comp);
        }
        out
    }

    pub(crate) fn betti_in(&self, mask: u64) -> usize {
        let c = self.components_in(mask).len();
        self.edge_count_in(mask) + c - mask.count_ones() as usize
    }

    pub(crate) fn is_complete_in(&self, mask: u64) -> bool {
        let n = mask.count_ones() as usize;
        self.edge_count_in(mask) == n * (n - 1) / 2
    }

    /// Exact clique number by branch and bound over a degeneracy order.
    pub(crate) fn clique_number_in(&self, mask: u64) -> usize {
        clique_number_bnb(&self.adj, mask)
    }

    /// Clique number of the subgraph keeping only coefficient-2 edges.
    pub(crate) fn clique2_number_in(&self, mask: u64) -> usize {
        clique_number_bnb(&self.adj2, mask)
    }

    /// All cliques of exactly the maximum size, as masks in lexicographic
    /// order of their vertex lists.
    pub(crate) fn max_cliques_in(&self, mask: u64) -> Vec<u64> {
        let k = self.clique_number_in(mask);
        if k == 0 {
            return Vec::new();
        }
        let mut out = Vec::new();
        fn extend(adj: &[u64], clique: u64, size: usize, cand: u64, k: usize, out: &mut Vec<u64>) {
            if size == k {
                out.push(clique);
                return;
            }
            let mut p = cand;
            while p != 0 {
                if size + (p.count_ones() as usize) < k {
                    return;
                }
                let v = p.trailing_zeros() as usize;
                p &= p - 1;
                extend(adj, clique | (1 << v), size + 1, p & adj[v], k, out);
            }
        }
        extend(&self.adj, 0, 0, mask, k, &mut out);
        out
    }

    /// All coefficient edges inside `mask` satisfy `pred`. Vacuously true
    /// when there are no edges. False if any edge carries a relator.
    pub(crate) fn all_coefficients_in(&self, mask: u64, pred: impl Fn(u32) -> bool) -> bool {
        self.labels.iter().all(|(&(i, j), l)| {
            if mask & (1 << i) == 0 || mask & (1 << j) == 0 {
                return true;
            }
            match l {
                EdgeLabel::Coefficient(m) => pred(*m),
                EdgeLabel::Relator(_) => false,
            }
        })
    }

    /// First back-edge of a lexicographic DFS; returns the endpoint with the
    /// larger degree (ties broken towards the smaller vertex).
    pub(crate) fn cycle_vertex_in(&self, mask: u64) -> Option<usize> {
        fn dfs(
            g: &DefiningGraph,
            mask: u64,
            v: usize,
            parent: usize,
            seen: &mut u64,
        ) -> Option<(usize, usize)> {
            *seen |= 1 << v;
            for w in bits(g.adj[v] & mask) {
                if w == parent {
                    continue;
                }
                if *seen & (1 << w) != 0 {
                    return Some((v, w));
                }
                if let Some(hit) = dfs(g, mask, w, v, seen) {
                    return Some(hit);
                }
            }
            None
        }
        let mut seen = 0u64;
        for root in bits(mask) {
            if seen & (1 << root) != 0 {
                continue;
            }
            if let Some((u, w)) = dfs(self, mask, root, usize::MAX, &mut seen) {
                let (du, dw) = (
                    (self.adj[u] & mask).count_ones(),
                    (self.adj[w] & mask).count_ones(),
                );
                return Some(if du > dw {
                    u
                } else if dw > du {
                    w
                } else {
                    u.min(w)
                });
            }
        }
        None
    }

    pub(crate) fn chromatic_upper_in(&self, mask: u64) -> usize {
        let n = mask.count_ones() as usize;
        if n == 0 {
            return 0;
        }
        if n <= 12 {
            chromatic_exact(&self.adj, mask)
        } else {
            greedy_coloring(&self.adj, mask)
        }
    }
}

pub(crate) fn bits(mask: u64) -> impl Iterator<Item = usize> {
    std::iter::successors(if mask == 0 { None } else { Some(mask) }, |m| {
        let m = m & (m - 1);
        if m == 0 {
            None
        } else {
            Some(m)
        }
    })
    .map(|m| m.trailing_zeros() as usize)
}

fn low_bits(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn degeneracy_order(adj: &[u64], mask: u64) -> Vec<usize> {
    let mut remaining = mask;
    let mut order = Vec::with_capacity(mask.count_ones() as usize);
    while remaining != 0 {
        let v = bits(remaining)
            .min_by_key(|&v| ((adj[v] & remaining).count_ones(), v))
            .unwrap();
        order.push(v);
        remaining &= !(1 << v);
    }
    order
}

fn clique_number_bnb(adj: &[u64], mask: u64) -> usize {
    if mask == 0 {
        return 0;
    }
    fn extend(adj: &[u64], size: usize, cand: u64, best: &mut usize) {
        if size > *best {
            *best = size;
        }
        let mut p = cand;
        while p != 0 {
            if size + p.count_ones() as usize <= *best {
                return;
            }
            let v = p.trailing_zeros() as usize;
            p &= p - 1;
            extend(adj, size + 1, p & adj[v], best);
        }
    }
    let order = degeneracy_order(adj, mask);
    let mut best = 0;
    let mut suffix = mask;
    for &v in &order {
        suffix &= !(1 << v);
        if (suffix.count_ones() as usize) < best {
            break;
        }
        extend(adj, 1, adj[v] & suffix, &mut best);
    }
    best
}

fn greedy_coloring(adj: &[u64], mask: u64) -> usize {
    let mut order: Vec<usize> = bits(mask).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse((adj[v] & mask).count_ones()), v));
    let mut color = vec![usize::MAX; 64];
    let mut used = 0;
    for &v in &order {
        let mut taken = 0u64;
        for w in bits(adj[v] & mask) {
            if color[w] != usize::MAX {
                taken |= 1 << color[w];
            }
        }
        let c = (!taken).trailing_zeros() as usize;
        color[v] = c;
        used = used.max(c + 1);
    }
    used
}

/// Exact chromatic number via DSATUR-style branch and bound: branch on the
/// most saturated uncolored vertex, bounded above by the greedy coloring.
fn chromatic_exact(adj: &[u64], mask: u64) -> usize {
    let lower = clique_number_bnb(adj, mask);
    let mut best = greedy_coloring(adj, mask);
    if lower == best {
        return best;
    }

    struct State<'a> {
        adj: &'a [u64],
        mask: u64,
        color: Vec<usize>,
        best: usize,
        lower: usize,
    }

    fn solve(s: &mut State, colored: u64, used: usize, classes: &mut Vec<u64>) {
        if used >= s.best {
            return;
        }
        if colored == s.mask {
            s.best = used;
            return;
        }
        // most saturated vertex; ties by degree then index
        let v = bits(s.mask & !colored)
            .max_by_key(|&v| {
                let mut sat = 0u64;
                for w in bits(s.adj[v] & s.mask & colored) {
                    sat |= 1 << s.color[w];
                }
                (
                    sat.count_ones(),
                    (s.adj[v] & s.mask).count_ones(),
                    std::cmp::Reverse(v),
                )
            })
            .unwrap();
        for c in 0..used.min(s.best - 1) {
            if classes[c] & s.adj[v] == 0 {
                classes[c] |= 1 << v;
                s.color[v] = c;
                solve(s, colored | (1 << v), used, classes);
                classes[c] &= !(1 << v);
                if s.best == s.lower {
                    return;
                }
            }
        }
        if used + 1 < s.best {
            classes.push(1 << v);
            s.color[v] = used;
            solve(s, colored | (1 << v), used + 1, classes);
            classes.pop();
        }
    }

    let mut state = State {
        adj,
        mask,
        color: vec![usize::MAX; 64],
        best,
        lower,
    };
    solve(&mut state, 0, 0, &mut Vec::new());
    best = state.best;
    best
}

// ---- public operations ----

/// The full subgraph spanned by `vs`: exactly the edges of `g` with both
/// endpoints in `vs`, labels and kind preserved.
pub fn full_subgraph(g: &DefiningGraph, vs: &VertexSet) -> Result<DefiningGraph, GraphError> {
    let mask = g.mask_of(vs)?;
    let vertices: Vec<VertexId> = bits(mask).map(|i| g.names[i].clone()).collect();
    let edges = g
        .labels
        .iter()
        .filter(|(&(i, j), _)| mask & (1 << i) != 0 && mask & (1 << j) != 0)
        .map(|(&(i, j), l)| (g.names[i].clone(), g.names[j].clone(), l.clone()))
        .collect();
    DefiningGraph::new(g.kind, vertices, edges)
}

/// Maximal connected vertex sets, ordered by least vertex.
pub fn connected_components(g: &DefiningGraph) -> Vec<VertexSet> {
    g.components_in(g.full_mask())
        .into_iter()
        .map(|m| g.set_of(m))
        .collect()
}

/// |E| - |V| + #components; zero exactly for forests.
pub fn betti_number(g: &DefiningGraph) -> usize {
    g.betti_in(g.full_mask())
}

/// Exact clique number (the `sim` statistic); 0 for the empty graph.
pub fn clique_number(g: &DefiningGraph) -> usize {
    g.clique_number_in(g.full_mask())
}

/// All cliques of exactly the maximum size, in lexicographic order.
pub fn maximal_cliques_of_max_size(g: &DefiningGraph) -> Result<Vec<VertexSet>, GraphError> {
    if g.vertex_count() == 0 {
        return Err(GraphError::EmptyGraph);
    }
    Ok(g.max_cliques_in(g.full_mask())
        .into_iter()
        .map(|m| g.set_of(m))
        .collect())
}

/// Adjacency set of `v`.
pub fn neighbors(g: &DefiningGraph, v: &VertexId) -> Result<VertexSet, GraphError> {
    let i = g
        .index_of(v)
        .ok_or_else(|| GraphError::UnknownVertex(v.as_str().to_owned()))?;
    Ok(g.set_of(g.adj[i]))
}

/// True iff the full subgraph on `vs` has no edge. Vertices outside `g`
/// contribute no edges.
pub fn is_independent(g: &DefiningGraph, vs: &VertexSet) -> bool {
    let mut mask = 0u64;
    for v in vs.iter() {
        if let Some(i) = g.index_of(v) {
            mask |= 1 << i;
        }
    }
    g.edge_count_in(mask) == 0
}

/// A vertex lying on some cycle, chosen deterministically: take the first
/// back-edge of a lexicographic DFS and return its endpoint with the larger
/// degree (ties towards the lexicographically least vertex).
pub fn find_cycle_vertex(g: &DefiningGraph) -> Result<VertexId, GraphError> {
    g.cycle_vertex_in(g.full_mask())
        .map(|i| g.names[i].clone())
        .ok_or(GraphError::Forest)
}

/// Exact chromatic number when the graph has at most 12 vertices, otherwise
/// a greedy upper bound. Always at least the clique number.
pub fn chromatic_number_upper(g: &DefiningGraph) -> usize {
    g.chromatic_upper_in(g.full_mask())
}

pub fn graph_stats(g: &DefiningGraph) -> GraphStats {
    let mask = g.full_mask();
    GraphStats {
        sim: g.clique_number_in(mask),
        betti: g.betti_in(mask),
        components: g.components_in(mask).len(),
        chromatic_upper: g.chromatic_upper_in(mask),
    }
}
