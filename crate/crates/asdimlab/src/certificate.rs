//! Serializable decomposition-proof trees and an independent checker.
//!
//! A certificate records, for every node of the decomposition, which rule
//! justified the claimed bound. The checker re-derives every rule
//! precondition and every arithmetic combination from the graph alone — it
//! shares the graph primitives but none of the engine's search state or
//! memoization, so a certificate stands or falls on its own content.
//!
//! Wire format (JSON, UTF-8): the top level is
//! `{"fingerprint": hex, "mode": "conditional"|"unconditional", "root": node}`,
//! a node is `{"rule", "vertices", "lower", "upper", "exact", "conditional",
//! "data", "children"}` with vertex arrays sorted, `upper` either an integer
//! or the string `"unknown"`, and no extra fields anywhere. Serialization is
//! byte-deterministic.

use std::fmt;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::bound::{Bound, ExtBound, Mode};
use crate::engine::RuleId;
use crate::graph::{bits, DefiningGraph, GroupKind};
use crate::input::canonical_text;

/// One node of the decomposition tree.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertNode {
    pub rule: RuleId,
    /// Sorted vertex names of the full subgraph this node covers.
    pub vertices: Vec<String>,
    pub lower: u32,
    pub upper: ExtBound,
    pub exact: bool,
    pub conditional: bool,
    /// Rule-specific record; `{}` for leaves and free products.
    pub data: serde_json::Value,
    pub children: Vec<CertNode>,
}

impl CertNode {
    pub(crate) fn make(
        rule: RuleId,
        vertices: Vec<String>,
        bound: Bound,
        data: serde_json::Value,
        children: Vec<CertNode>,
    ) -> CertNode {
        CertNode {
            rule,
            vertices,
            lower: bound.lower,
            upper: bound.upper,
            exact: bound.exact,
            conditional: bound.conditional,
            data,
            children,
        }
    }

    pub fn bound(&self) -> Bound {
        Bound {
            lower: self.lower,
            upper: self.upper,
            exact: self.exact,
            conditional: self.conditional,
        }
    }
}

/// A decomposition proof bound to one input graph by fingerprint.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Certificate {
    pub fingerprint: String,
    pub mode: Mode,
    pub root: CertNode,
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("certificate parse error at line {line}, column {column}: {message}")]
pub struct CertParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl Certificate {
    /// Deterministic JSON rendering (pretty-printed, trailing newline).
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("certificate serialization");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Certificate, CertParseError> {
        serde_json::from_str(text).map_err(|e| CertParseError {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })
    }
}

/// SHA-256 of the canonical text serialization of the graph (sorted
/// vertices, sorted edges), as lowercase hex.
pub fn fingerprint(g: &DefiningGraph) -> String {
    let digest = Sha256::digest(canonical_text(g).as_bytes());
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

/// Why a certificate was rejected, with the path of the offending node.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rejection {
    pub path: String,
    pub reason: String,
}

impl fmt::Display for Rejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at {}: {}", self.path, self.reason)
    }
}

impl std::error::Error for Rejection {}

fn reject<T>(path: &str, reason: impl Into<String>) -> Result<T, Rejection> {
    Err(Rejection {
        path: path.to_owned(),
        reason: reason.into(),
    })
}

/// Re-validates a certificate against a graph without trusting the engine:
/// fingerprint binding, structural containment of every node, amalgam and
/// free-product shape conditions, every leaf rule's graph-theoretic
/// precondition recomputed from scratch, exact equality of every claimed
/// bound with the rule arithmetic, and conditional-flag hygiene.
pub fn check(cert: &Certificate, g: &DefiningGraph) -> Result<(), Rejection> {
    let expected = fingerprint(g);
    if cert.fingerprint != expected {
        return reject(
            "root",
            format!(
                "fingerprint {} does not match the graph's {}",
                cert.fingerprint, expected
            ),
        );
    }
    let all: Vec<String> = g.vertices().iter().map(|v| v.as_str().to_owned()).collect();
    if cert.root.vertices != all {
        return reject("root", "root vertex set must cover the whole graph");
    }
    check_node(g, &cert.root, cert.mode, "root")
}

fn mask_of_sorted_names(g: &DefiningGraph, names: &[String], path: &str) -> Result<u64, Rejection> {
    let mut mask = 0u64;
    for pair in names.windows(2) {
        if pair[0] >= pair[1] {
            return reject(path, "vertex array must be strictly sorted");
        }
    }
    for name in names {
        let id = crate::graph::VertexId::new(name.clone()).map_err(|_| Rejection {
            path: path.to_owned(),
            reason: format!("invalid vertex name `{name}`"),
        })?;
        match g.index_of(&id) {
            Some(i) => mask |= 1 << i,
            None => return reject(path, format!("unknown vertex `{name}`")),
        }
    }
    Ok(mask)
}

fn data_keys<'a>(
    node: &'a CertNode,
    expected: &[&str],
    path: &str,
) -> Result<&'a serde_json::Map<String, serde_json::Value>, Rejection> {
    let obj = match node.data.as_object() {
        Some(obj) => obj,
        None => return reject(path, "data must be a JSON object"),
    };
    let mut keys: Vec<&str> = obj.keys().map(String::as_str).collect();
    keys.sort_unstable();
    let mut want: Vec<&str> = expected.to_vec();
    want.sort_unstable();
    if keys != want {
        return reject(
            path,
            format!("data fields {keys:?} do not match the rule's {want:?}"),
        );
    }
    Ok(obj)
}

fn data_str<'a>(
    obj: &'a serde_json::Map<String, serde_json::Value>,
    key: &str,
    path: &str,
) -> Result<&'a str, Rejection> {
    obj.get(key)
        .and_then(|v| v.as_str())
        .ok_or_else(|| Rejection {
            path: path.to_owned(),
            reason: format!("data field `{key}` must be a string"),
        })
}

fn data_names(
    obj: &serde_json::Map<String, serde_json::Value>,
    key: &str,
    path: &str,
) -> Result<Vec<String>, Rejection> {
    let arr = obj
        .get(key)
        .and_then(|v| v.as_array())
        .ok_or_else(|| Rejection {
            path: path.to_owned(),
            reason: format!("data field `{key}` must be an array"),
        })?;
    arr.iter()
        .map(|v| {
            v.as_str().map(str::to_owned).ok_or_else(|| Rejection {
                path: path.to_owned(),
                reason: format!("data field `{key}` must contain strings"),
            })
        })
        .collect()
}

/// Kind-level lower bound, recomputed here from graph primitives.
fn floor_of(g: &DefiningGraph, mask: u64) -> u32 {
    if g.kind() != GroupKind::Artin || mask == 0 {
        return 0;
    }
    let base = if g.edge_count_in(mask) > 0 { 2 } else { 1 };
    base.max(g.clique2_number_in(mask) as u32)
}

fn expect_bound(node: &CertNode, expected: Bound, path: &str) -> Result<(), Rejection> {
    if node.lower != expected.lower {
        return reject(
            path,
            format!(
                "claimed lower {} but the rule derives {}",
                node.lower, expected.lower
            ),
        );
    }
    if node.upper != expected.upper {
        return reject(
            path,
            format!(
                "claimed upper {} but the rule derives {}",
                node.upper, expected.upper
            ),
        );
    }
    if node.exact != expected.exact {
        return reject(path, "exact flag does not match the derived bound");
    }
    if node.conditional != expected.conditional {
        return reject(path, "conditional flag does not match the derivation");
    }
    Ok(())
}

fn check_node(g: &DefiningGraph, node: &CertNode, mode: Mode, path: &str) -> Result<(), Rejection> {
    let mask = mask_of_sorted_names(g, &node.vertices, path)?;
    if node.conditional && mode != Mode::Conditional {
        return reject(path, "conditional bound in an unconditional certificate");
    }
    match node.rule {
        RuleId::FreeProduct => check_free_product(g, node, mode, path, mask),
        RuleId::AmalgamCycle | RuleId::AmalgamUniqueClique | RuleId::AmalgamMultiClique => {
            check_amalgam(g, node, mode, path, mask)
        }
        _ => check_leaf(g, node, mode, path, mask),
    }
}

fn check_leaf(
    g: &DefiningGraph,
    node: &CertNode,
    mode: Mode,
    path: &str,
    mask: u64,
) -> Result<(), Rejection> {
    if !node.children.is_empty() {
        return reject(path, "leaf rule must have no children");
    }
    data_keys(node, &[], path)?;
    let n = mask.count_ones() as usize;
    let edges = g.edge_count_in(mask);
    let kind = g.kind();
    let floor = floor_of(g, mask);
    let fin = |lower: u32, upper: u32| Bound::new(lower.max(floor), ExtBound::Finite(upper), false);
    let fail = |why: &str| -> Result<Bound, Rejection> {
        reject(path, format!("{} precondition failed: {why}", node.rule))
    };
    let expected = match node.rule {
        RuleId::LeafEmpty => {
            if mask != 0 {
                return fail("graph is not empty").map(|_| ());
            }
            Bound::exact_value(0)
        }
        RuleId::LeafFreeArtin => {
            if kind != GroupKind::Artin || n != 1 {
                return fail("requires a single Artin vertex").map(|_| ());
            }
            fin(1, 1)
        }
        RuleId::LeafCoxeterVertex => {
            if kind != GroupKind::Coxeter || n != 1 {
                return fail("requires a single Coxeter vertex").map(|_| ());
            }
            fin(0, 0)
        }
        RuleId::LeafCoxeterEdge => {
            if kind != GroupKind::Coxeter || n != 2 || edges != 1 {
                return fail("requires a single Coxeter edge").map(|_| ());
            }
            fin(0, 0)
        }
        RuleId::LeafArtinForest => {
            if kind != GroupKind::Artin || g.betti_in(mask) != 0 || edges == 0 {
                return fail("requires an Artin forest with at least one edge").map(|_| ());
            }
            fin(2, 2)
        }
        RuleId::LeafCoxeterForest => {
            if kind != GroupKind::Coxeter || g.betti_in(mask) != 0 {
                return fail("requires a Coxeter forest").map(|_| ());
            }
            fin(0, 1)
        }
        RuleId::LeafGraphGroupForest => {
            if kind != GroupKind::GraphGroup || g.betti_in(mask) != 0 || edges == 0 {
                return fail("requires a graph-group forest with at least one edge").map(|_| ());
            }
            fin(0, 2)
        }
        RuleId::LeafLargeTypeSim3 => {
            if kind != GroupKind::Artin
                || g.clique_number_in(mask) != 3
                || !g.all_coefficients_in(mask, |m| m >= 3)
            {
                return fail("requires a large-type Artin graph of clique number 3").map(|_| ());
            }
            fin(2, 2)
        }
        RuleId::LeafRaag => {
            if kind != GroupKind::Artin || !g.all_coefficients_in(mask, |m| m == 2) {
                return fail("requires a right-angled Artin graph").map(|_| ());
            }
            let sim = g.clique_number_in(mask) as u32;
            fin(sim, sim)
        }
        RuleId::LeafCompleteCoxeter => {
            if kind != GroupKind::Coxeter || n == 0 || !g.is_complete_in(mask) {
                return fail("requires a complete Coxeter graph").map(|_| ());
            }
            fin(0, n as u32)
        }
        RuleId::LeafCompleteArtinConjectural => {
            if mode != Mode::Conditional {
                return fail("conjectural rule is disabled in unconditional mode").map(|_| ());
            }
            if kind != GroupKind::Artin || n == 0 || !g.is_complete_in(mask) {
                return fail("requires a complete Artin graph").map(|_| ());
            }
            Bound::new(
                floor,
                ExtBound::Finite(g.clique_number_in(mask) as u32),
                true,
            )
        }
        RuleId::LeafUnknown => Bound::new(floor, ExtBound::Unknown, false),
        _ => unreachable!("non-leaf rules handled elsewhere"),
    };
    expect_bound(node, expected, path)
}

fn check_free_product(
    g: &DefiningGraph,
    node: &CertNode,
    mode: Mode,
    path: &str,
    mask: u64,
) -> Result<(), Rejection> {
    data_keys(node, &[], path)?;
    let comps = g.components_in(mask);
    if comps.len() < 2 {
        return reject(path, "free product requires at least two components");
    }
    if node.children.len() != comps.len() {
        return reject(
            path,
            format!(
                "free product has {} children but the subgraph has {} components",
                node.children.len(),
                comps.len()
            ),
        );
    }
    for (i, (child, comp)) in node.children.iter().zip(&comps).enumerate() {
        let child_path = format!("{path}.children[{i}]");
        let child_mask = mask_of_sorted_names(g, &child.vertices, &child_path)?;
        if child_mask != *comp {
            return reject(
                &child_path,
                "child vertex set is not the corresponding connected component",
            );
        }
        check_node(g, child, mode, &child_path)?;
    }
    let mut upper = ExtBound::Finite(1);
    let mut lower = 1u32;
    let mut conditional = false;
    for child in &node.children {
        upper = upper.max(child.upper);
        lower = lower.max(child.lower);
        conditional |= child.conditional;
    }
    expect_bound(node, Bound::new(lower, upper, conditional), path)
}

fn check_amalgam(
    g: &DefiningGraph,
    node: &CertNode,
    mode: Mode,
    path: &str,
    mask: u64,
) -> Result<(), Rejection> {
    if !matches!(g.kind(), GroupKind::Artin | GroupKind::Coxeter) {
        return reject(path, "amalgam rules apply only to Artin and Coxeter graphs");
    }
    if node.children.len() != 3 {
        return reject(
            path,
            "amalgam node must have exactly three children (left, right, separator)",
        );
    }
    let child_masks: Vec<u64> = {
        let mut ms = Vec::with_capacity(3);
        for (i, child) in node.children.iter().enumerate() {
            let child_path = format!("{path}.children[{i}]");
            ms.push(mask_of_sorted_names(g, &child.vertices, &child_path)?);
        }
        ms
    };
    let (left, right, sep) = (child_masks[0], child_masks[1], child_masks[2]);
    if left | right != mask {
        return reject(path, "left and right children must cover the node");
    }
    if left & right != sep {
        return reject(path, "separator must be the intersection of left and right");
    }
    if sep == left || sep == right {
        return reject(path, "separator must be a proper subset of both sides");
    }
    for v in bits(left & !sep) {
        if g.adj_in(v, right & !sep) != 0 {
            return reject(path, "an edge crosses the separator");
        }
    }

    let sim = g.clique_number_in(mask);
    match node.rule {
        RuleId::AmalgamCycle => {
            let obj = data_keys(node, &["separator", "v1"], path)?;
            let v1_name = data_str(obj, "v1", path)?;
            let sep_names = data_names(obj, "separator", path)?;
            if sep_names != node.children[2].vertices {
                return reject(path, "data separator does not match the separator child");
            }
            let v1 = lookup(g, v1_name, mask, path)?;
            if sim != 2 {
                return reject(path, "cycle split requires clique number 2");
            }
            if g.betti_in(mask) == 0 {
                return reject(path, "cycle split requires a cycle");
            }
            if left != mask & !(1 << v1) {
                return reject(path, "left child must be the graph without v1");
            }
            if sep != g.adj_in(v1, mask) {
                return reject(path, "separator must be the neighbor set of v1");
            }
            if right != sep | (1 << v1) {
                return reject(path, "right child must be the closed star of v1");
            }
            if g.edge_count_in(sep) != 0 {
                return reject(path, "cycle-split separator must be independent");
            }
        }
        RuleId::AmalgamUniqueClique => {
            let obj = data_keys(node, &["separator", "v1", "x"], path)?;
            let v1 = lookup(g, data_str(obj, "v1", path)?, mask, path)?;
            let x = lookup(g, data_str(obj, "x", path)?, mask, path)?;
            let sep_names = data_names(obj, "separator", path)?;
            if sep_names != node.children[2].vertices {
                return reject(path, "data separator does not match the separator child");
            }
            if sim < 3 {
                return reject(path, "clique split requires clique number at least 3");
            }
            if v1 == x || g.adj_in(v1, mask) & (1 << x) != 0 {
                return reject(path, "v1 and x must be distinct and non-adjacent");
            }
            let cliques = g.max_cliques_in(mask);
            if cliques.len() != 1 {
                return reject(
                    path,
                    "unique-clique split requires exactly one maximum clique",
                );
            }
            if cliques[0] & (1 << v1) == 0 || cliques[0] & (1 << x) != 0 {
                return reject(path, "v1 must lie in the maximum clique and x outside it");
            }
            if left != mask & !(1 << v1) || right != mask & !(1 << x) {
                return reject(path, "children must be the graph without v1 and without x");
            }
            if g.clique_number_in(left) >= sim || g.clique_number_in(sep) >= sim {
                return reject(
                    path,
                    "clique number must drop on the left side and the separator",
                );
            }
        }
        RuleId::AmalgamMultiClique => {
            let obj = data_keys(node, &["dropped", "separator", "v1"], path)?;
            let v1 = lookup(g, data_str(obj, "v1", path)?, mask, path)?;
            let sep_names = data_names(obj, "separator", path)?;
            if sep_names != node.children[2].vertices {
                return reject(path, "data separator does not match the separator child");
            }
            let mut dropped = 0u64;
            for name in data_names(obj, "dropped", path)? {
                dropped |= 1 << lookup(g, &name, mask, path)?;
            }
            if dropped == 0 || dropped & (1 << v1) != 0 {
                return reject(path, "dropped set must be non-empty and avoid v1");
            }
            for d in bits(dropped) {
                if g.adj_in(v1, mask) & (1 << d) != 0 {
                    return reject(path, "every dropped vertex must be non-adjacent to v1");
                }
            }
            if sim < 3 {
                return reject(path, "clique split requires clique number at least 3");
            }
            let cliques = g.max_cliques_in(mask);
            if cliques.len() < 2 {
                return reject(path, "multi-clique split requires several maximum cliques");
            }
            if !cliques.iter().any(|c| c & (1 << v1) != 0) {
                return reject(path, "v1 must lie in some maximum clique");
            }
            if left != mask & !(1 << v1) || right != mask & !dropped {
                return reject(
                    path,
                    "children must be the graph without v1 and without the dropped set",
                );
            }
            if g.clique_number_in(sep) >= sim {
                return reject(path, "separator clique number must drop");
            }
        }
        _ => unreachable!(),
    }

    for (i, child) in node.children.iter().enumerate() {
        check_node(g, child, mode, &format!("{path}.children[{i}]"))?;
    }
    let (l, r, s) = (
        node.children[0].bound(),
        node.children[1].bound(),
        node.children[2].bound(),
    );
    let upper = l.upper.max(r.upper).max(s.upper.plus_one());
    let lower = l.lower.max(r.lower).max(floor_of(g, mask));
    let conditional = l.conditional || r.conditional || s.conditional;
    expect_bound(node, Bound::new(lower, upper, conditional), path)
}

fn lookup(g: &DefiningGraph, name: &str, mask: u64, path: &str) -> Result<usize, Rejection> {
    let id = crate::graph::VertexId::new(name).map_err(|_| Rejection {
        path: path.to_owned(),
        reason: format!("invalid vertex name `{name}` in data"),
    })?;
    match g.index_of(&id) {
        Some(i) if mask & (1 << i) != 0 => Ok(i),
        _ => reject(
            path,
            format!("data vertex `{name}` is not in the node's subgraph"),
        ),
    }
}
