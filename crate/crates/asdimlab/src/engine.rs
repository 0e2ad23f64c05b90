//! The recursive certified-bound computation.
//!
//! Every graph is reduced along a small set of rules:
//!
//! * disconnected graphs split as free products
//!   (`asdim(A * B) = max{asdim A, asdim B, 1}`);
//! * clique-number-2 graphs with a cycle split as an amalgam over the
//!   independent neighbor set of a cycle vertex;
//! * clique-number >= 3 graphs that are not complete split as an amalgam
//!   whose separator has strictly smaller clique number, driving the
//!   recursion towards complete graphs;
//! * base cases (forests, free groups, finite dihedral edges, right-angled
//!   graphs, large-type triangles, complete graphs) are closed directly.
//!
//! Amalgam arithmetic is `max{left, right, separator + 1}` for upper bounds
//! and plain subgroup monotonicity for lower bounds. Where no rule applies
//! the upper bound is reported as `unknown` rather than guessed. Every run
//! produces a certificate tree that the independent checker re-validates.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bound::{Bound, ExtBound, Mode};
use crate::certificate::{fingerprint, CertNode, Certificate};
use crate::graph::{bits, graph_stats, DefiningGraph, GraphStats, GroupKind, VertexId, VertexSet};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EngineError {
    #[error("precondition violated: {0}")]
    Precondition(String),
    /// An existence claim the decomposition relies on failed to materialize.
    /// This signals an engine bug, never a property of the input.
    #[error("internal assertion failed: {0}")]
    Internal(String),
}

/// Identifies the rule justifying one certificate node.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RuleId {
    FreeProduct,
    AmalgamCycle,
    AmalgamUniqueClique,
    AmalgamMultiClique,
    LeafEmpty,
    LeafFreeArtin,
    LeafCoxeterVertex,
    LeafCoxeterEdge,
    LeafArtinForest,
    LeafCoxeterForest,
    LeafGraphGroupForest,
    LeafLargeTypeSim3,
    #[serde(rename = "LeafRAAG")]
    LeafRaag,
    LeafCompleteCoxeter,
    LeafCompleteArtinConjectural,
    /// No rule applies; the upper bound is `unknown` and only the generic
    /// lower bound is claimed.
    LeafUnknown,
}

impl RuleId {
    pub fn name(&self) -> &'static str {
        match self {
            RuleId::FreeProduct => "FreeProduct",
            RuleId::AmalgamCycle => "AmalgamCycle",
            RuleId::AmalgamUniqueClique => "AmalgamUniqueClique",
            RuleId::AmalgamMultiClique => "AmalgamMultiClique",
            RuleId::LeafEmpty => "LeafEmpty",
            RuleId::LeafFreeArtin => "LeafFreeArtin",
            RuleId::LeafCoxeterVertex => "LeafCoxeterVertex",
            RuleId::LeafCoxeterEdge => "LeafCoxeterEdge",
            RuleId::LeafArtinForest => "LeafArtinForest",
            RuleId::LeafCoxeterForest => "LeafCoxeterForest",
            RuleId::LeafGraphGroupForest => "LeafGraphGroupForest",
            RuleId::LeafLargeTypeSim3 => "LeafLargeTypeSim3",
            RuleId::LeafRaag => "LeafRAAG",
            RuleId::LeafCompleteCoxeter => "LeafCompleteCoxeter",
            RuleId::LeafCompleteArtinConjectural => "LeafCompleteArtinConjectural",
            RuleId::LeafUnknown => "LeafUnknown",
        }
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Rule-specific data of an amalgam decomposition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SplitChoice {
    CycleVertex { v1: VertexId },
    UniqueClique { v1: VertexId, x: VertexId },
    MultiClique { v1: VertexId, dropped: VertexSet },
}

/// An amalgam decomposition witness: `left ∪ right` covers the graph,
/// `left ∩ right = separator`, and no edge joins `left ∖ separator` to
/// `right ∖ separator`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Split {
    pub left: VertexSet,
    pub right: VertexSet,
    pub separator: VertexSet,
    pub chosen: SplitChoice,
}

/// Outcome of a bound computation.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundResult {
    pub bound: Bound,
    pub certificate: Certificate,
    pub stats: GraphStats,
}

/// Free-product combination: `asdim(A_1 * ... * A_k) = max{asdim A_i, 1}`.
/// The formula is an equality, so the result is exact whenever the children
/// pin their values down.
pub fn combine_free_product(children: &[Bound]) -> Bound {
    debug_assert!(children.len() >= 2);
    let mut upper = ExtBound::Finite(1);
    let mut lower = 1u32;
    let mut conditional = false;
    for child in children {
        upper = upper.max(child.upper);
        lower = lower.max(child.lower);
        conditional |= child.conditional;
    }
    Bound::new(lower, upper, conditional)
}

/// Amalgam combination: upper `max{left, right, separator + 1}`; lower by
/// subgroup monotonicity of the two sides only (the formula is an
/// inequality and never yields exactness by itself).
pub fn combine_amalgam(left: &Bound, right: &Bound, sep: &Bound) -> Bound {
    Bound::new(
        left.lower.max(right.lower),
        left.upper.max(right.upper).max(sep.upper.plus_one()),
        left.conditional || right.conditional || sep.conditional,
    )
}

/// Kind-level lower bound: Artin graphs contain a free-abelian parabolic of
/// the rank of their largest all-2-labeled clique, a one-relator parabolic
/// whenever an edge exists, and the integers whenever a vertex exists. No
/// lower bounds are claimed for Coxeter or graph-group inputs.
pub fn lower_bound(g: &DefiningGraph) -> u32 {
    lower_floor(g, g.full_mask())
}

fn lower_floor(g: &DefiningGraph, mask: u64) -> u32 {
    if g.kind() != GroupKind::Artin || mask == 0 {
        return 0;
    }
    let base = if g.edge_count_in(mask) > 0 { 2 } else { 1 };
    base.max(g.clique2_number_in(mask) as u32)
}

/// All leaf rules applicable to a connected graph, with their bounds.
pub fn leaf_bound(g: &DefiningGraph, mode: Mode) -> Vec<(RuleId, Bound)> {
    let mask = g.full_mask();
    let sim = g.clique_number_in(mask);
    leaf_candidates(g, mask, mode, sim, lower_floor(g, mask))
}

fn leaf_candidates(
    g: &DefiningGraph,
    mask: u64,
    mode: Mode,
    sim: usize,
    floor: u32,
) -> Vec<(RuleId, Bound)> {
    let mut out = Vec::new();
    if mask == 0 {
        out.push((RuleId::LeafEmpty, Bound::exact_value(0)));
        return out;
    }
    let n = mask.count_ones() as usize;
    let edges = g.edge_count_in(mask);
    let betti = g.betti_in(mask);
    let fin = |lower: u32, upper: u32| Bound::new(lower.max(floor), ExtBound::Finite(upper), false);
    match g.kind() {
        GroupKind::Artin => {
            if n == 1 {
                out.push((RuleId::LeafFreeArtin, fin(1, 1)));
            }
            if betti == 0 && edges >= 1 {
                out.push((RuleId::LeafArtinForest, fin(2, 2)));
            }
            if sim == 3 && g.all_coefficients_in(mask, |m| m >= 3) {
                out.push((RuleId::LeafLargeTypeSim3, fin(2, 2)));
            }
            if g.all_coefficients_in(mask, |m| m == 2) {
                out.push((RuleId::LeafRaag, fin(sim as u32, sim as u32)));
            }
            if g.is_complete_in(mask) && mode == Mode::Conditional {
                out.push((
                    RuleId::LeafCompleteArtinConjectural,
                    Bound::new(floor, ExtBound::Finite(sim as u32), true),
                ));
            }
        }
        GroupKind::Coxeter => {
            if n == 1 {
                out.push((RuleId::LeafCoxeterVertex, fin(0, 0)));
            }
            if n == 2 && edges == 1 {
                out.push((RuleId::LeafCoxeterEdge, fin(0, 0)));
            }
            if betti == 0 {
                out.push((RuleId::LeafCoxeterForest, fin(0, 1)));
            }
            if g.is_complete_in(mask) {
                out.push((RuleId::LeafCompleteCoxeter, fin(0, n as u32)));
            }
        }
        GroupKind::GraphGroup => {
            if betti == 0 && edges >= 1 {
                out.push((RuleId::LeafGraphGroupForest, fin(0, 2)));
            }
        }
    }
    out
}

/// Best candidate: smallest upper bound, preferring unconditional rules on
/// ties, then the earlier rule in declaration order.
fn pick_best(candidates: &[(RuleId, Bound)]) -> Option<(RuleId, Bound)> {
    let mut best: Option<(RuleId, Bound)> = None;
    for &(rule, bound) in candidates {
        let better = match &best {
            None => true,
            Some((_, b)) => {
                (bound.upper.le(b.upper) && !b.upper.le(bound.upper))
                    || (bound.upper == b.upper && b.conditional && !bound.conditional)
            }
        };
        if better {
            best = Some((rule, bound));
        }
    }
    best
}

struct SplitMasks {
    left: u64,
    right: u64,
    sep: u64,
    rule: RuleId,
    choice: ChoiceMasks,
}

enum ChoiceMasks {
    Cycle { v1: usize },
    Unique { v1: usize, x: usize },
    Multi { v1: usize, dropped: u64 },
}

impl SplitMasks {
    fn into_split(self, g: &DefiningGraph) -> Split {
        Split {
            left: g.set_of(self.left),
            right: g.set_of(self.right),
            separator: g.set_of(self.sep),
            chosen: match self.choice {
                ChoiceMasks::Cycle { v1 } => SplitChoice::CycleVertex {
                    v1: g.name(v1).clone(),
                },
                ChoiceMasks::Unique { v1, x } => SplitChoice::UniqueClique {
                    v1: g.name(v1).clone(),
                    x: g.name(x).clone(),
                },
                ChoiceMasks::Multi { v1, dropped } => SplitChoice::MultiClique {
                    v1: g.name(v1).clone(),
                    dropped: g.set_of(dropped),
                },
            },
        }
    }
}

fn cycle_split_masks(g: &DefiningGraph, mask: u64) -> Result<SplitMasks, EngineError> {
    let v1 = g.cycle_vertex_in(mask).ok_or_else(|| {
        EngineError::Internal("no cycle vertex in a graph with betti >= 1".into())
    })?;
    let sep = g.adj_in(v1, mask);
    let right = sep | (1 << v1);
    let left = mask & !(1 << v1);
    if g.edge_count_in(sep) != 0 {
        return Err(EngineError::Internal(
            "cycle-split separator is not independent".into(),
        ));
    }
    if g.betti_in(right) != 0 {
        return Err(EngineError::Internal(
            "cycle-split star contains a cycle".into(),
        ));
    }
    if left == sep || sep.count_ones() < 2 {
        return Err(EngineError::Internal(
            "cycle-split separator is not a proper subset of both sides".into(),
        ));
    }
    Ok(SplitMasks {
        left,
        right,
        sep,
        rule: RuleId::AmalgamCycle,
        choice: ChoiceMasks::Cycle { v1 },
    })
}

fn clique_split_masks(g: &DefiningGraph, mask: u64, sim: usize) -> Result<SplitMasks, EngineError> {
    let cliques = g.max_cliques_in(mask);
    let non_adjacent = |a: usize, b: usize| g.adj_in(a, mask) & (1 << b) == 0;
    let masks = if cliques.len() == 1 {
        let c = cliques[0];
        // lexicographically least pair (v1 in C, x outside C) with no edge
        let mut found = None;
        'search: for v1 in bits(c) {
            for x in bits(mask & !c) {
                if non_adjacent(v1, x) {
                    found = Some((v1, x));
                    break 'search;
                }
            }
        }
        let (v1, x) = found.ok_or_else(|| {
            EngineError::Internal(
                "every outside vertex is adjacent to the unique maximal clique".into(),
            )
        })?;
        let left = mask & !(1 << v1);
        let sep = left & !(1 << x);
        if g.clique_number_in(left) >= sim {
            return Err(EngineError::Internal(
                "removing a vertex of the unique maximal clique must lower the clique number"
                    .into(),
            ));
        }
        SplitMasks {
            left,
            right: mask & !(1 << x),
            sep,
            rule: RuleId::AmalgamUniqueClique,
            choice: ChoiceMasks::Unique { v1, x },
        }
    } else {
        // least tuple (C1, C2, v1 in C1\C2, v2 in C2\C1) with v1, v2 non-adjacent
        let mut found = None;
        'search: for (i1, &c1) in cliques.iter().enumerate() {
            for (i2, &c2) in cliques.iter().enumerate() {
                if i1 == i2 {
                    continue;
                }
                for v1 in bits(c1 & !c2) {
                    for v2 in bits(c2 & !c1) {
                        if non_adjacent(v1, v2) {
                            found = Some(v1);
                            break 'search;
                        }
                    }
                }
            }
        }
        let v1 = found.ok_or_else(|| {
            EngineError::Internal("no non-adjacent pair across two maximal cliques".into())
        })?;
        // one vertex per maximal clique avoiding v1, collected as a set
        let mut dropped = 0u64;
        for &c in cliques.iter().filter(|&&c| c & (1 << v1) == 0) {
            let vi = bits(c).find(|&u| non_adjacent(v1, u)).ok_or_else(|| {
                EngineError::Internal(
                    "a maximal clique avoiding v1 has no vertex non-adjacent to v1".into(),
                )
            })?;
            dropped |= 1 << vi;
        }
        if dropped == 0 || dropped & (1 << v1) != 0 {
            return Err(EngineError::Internal("invalid dropped set".into()));
        }
        SplitMasks {
            left: mask & !(1 << v1),
            right: mask & !dropped,
            sep: mask & !(1 << v1) & !dropped,
            rule: RuleId::AmalgamMultiClique,
            choice: ChoiceMasks::Multi { v1, dropped },
        }
    };
    // shared assertions: amalgam condition and separator clique-number drop
    let open_left = masks.left & !masks.sep;
    let open_right = masks.right & !masks.sep;
    for v in bits(open_left) {
        if g.adj_in(v, open_right) != 0 {
            return Err(EngineError::Internal(
                "edge crosses the amalgam separator".into(),
            ));
        }
    }
    if g.clique_number_in(masks.sep) >= sim {
        return Err(EngineError::Internal(
            "separator clique number did not decrease".into(),
        ));
    }
    Ok(masks)
}

/// Cycle decomposition of a connected clique-number-2 graph containing a
/// cycle: remove a cycle vertex `v1`; the star of `v1` and the rest overlap
/// in the independent neighbor set of `v1`.
pub fn select_cycle_split(g: &DefiningGraph) -> Result<Split, EngineError> {
    let mask = g.full_mask();
    if g.components_in(mask).len() != 1 {
        return Err(EngineError::Precondition("graph must be connected".into()));
    }
    let sim = g.clique_number_in(mask);
    if sim != 2 {
        return Err(EngineError::Precondition(format!(
            "clique number must be 2, got {sim}"
        )));
    }
    if g.betti_in(mask) == 0 {
        return Err(EngineError::Precondition(
            "graph must contain a cycle".into(),
        ));
    }
    cycle_split_masks(g, mask).map(|m| m.into_split(g))
}

/// Clique decomposition of a connected, non-complete graph with clique
/// number at least 3, as dictated by the number of maximum cliques.
pub fn select_clique_split(g: &DefiningGraph) -> Result<Split, EngineError> {
    let mask = g.full_mask();
    if g.components_in(mask).len() != 1 {
        return Err(EngineError::Precondition("graph must be connected".into()));
    }
    let sim = g.clique_number_in(mask);
    if sim < 3 {
        return Err(EngineError::Precondition(format!(
            "clique number must be at least 3, got {sim}"
        )));
    }
    if g.is_complete_in(mask) {
        return Err(EngineError::Precondition(
            "graph must not be complete".into(),
        ));
    }
    clique_split_masks(g, mask, sim).map(|m| m.into_split(g))
}

struct Ctx<'g> {
    g: &'g DefiningGraph,
    mode: Mode,
    memo: HashMap<u64, CertNode>,
    use_memo: bool,
}

impl Ctx<'_> {
    fn node_for(&mut self, mask: u64) -> Result<CertNode, EngineError> {
        if self.use_memo {
            if let Some(hit) = self.memo.get(&mask) {
                return Ok(hit.clone());
            }
        }
        let node = self.build(mask)?;
        if self.use_memo {
            self.memo.insert(mask, node.clone());
        }
        Ok(node)
    }

    fn leaf(&self, rule: RuleId, mask: u64, bound: Bound) -> CertNode {
        CertNode::make(
            rule,
            self.g.set_of(mask).names(),
            bound,
            serde_json::json!({}),
            Vec::new(),
        )
    }

    fn build(&mut self, mask: u64) -> Result<CertNode, EngineError> {
        let g = self.g;
        if mask == 0 {
            return Ok(self.leaf(RuleId::LeafEmpty, mask, Bound::exact_value(0)));
        }
        let comps = g.components_in(mask);
        if comps.len() >= 2 {
            let mut children = Vec::with_capacity(comps.len());
            for comp in comps {
                children.push(self.node_for(comp)?);
            }
            let bounds: Vec<Bound> = children.iter().map(CertNode::bound).collect();
            let bound = combine_free_product(&bounds);
            return Ok(CertNode::make(
                RuleId::FreeProduct,
                g.set_of(mask).names(),
                bound,
                serde_json::json!({}),
                children,
            ));
        }

        let sim = g.clique_number_in(mask);
        let betti = g.betti_in(mask);
        let floor = lower_floor(g, mask);
        let leaves = leaf_candidates(g, mask, self.mode, sim, floor);
        let best_leaf = pick_best(&leaves);
        if let Some((rule, bound)) = best_leaf {
            // an exact leaf cannot be improved by decomposing
            if bound.exact {
                return Ok(self.leaf(rule, mask, bound));
            }
        }

        let decomposable = matches!(g.kind(), GroupKind::Artin | GroupKind::Coxeter);
        let split = if decomposable && sim == 2 && betti >= 1 {
            Some(cycle_split_masks(g, mask)?)
        } else if decomposable && sim >= 3 && !g.is_complete_in(mask) {
            Some(clique_split_masks(g, mask, sim)?)
        } else {
            None
        };

        let decomp = match split {
            Some(s) => Some(self.amalgam_node(mask, floor, s)?),
            None => None,
        };

        match (best_leaf, decomp) {
            (None, None) => Ok(self.leaf(
                RuleId::LeafUnknown,
                mask,
                Bound::new(floor, ExtBound::Unknown, false),
            )),
            (Some((rule, bound)), None) => Ok(self.leaf(rule, mask, bound)),
            (None, Some(node)) => Ok(node),
            (Some((rule, leaf_bound)), Some(node)) => {
                let d = node.bound();
                let strictly_better = d.upper.le(leaf_bound.upper) && !leaf_bound.upper.le(d.upper);
                let same_but_unconditional =
                    d.upper == leaf_bound.upper && leaf_bound.conditional && !d.conditional;
                if strictly_better || same_but_unconditional {
                    Ok(node)
                } else {
                    Ok(self.leaf(rule, mask, leaf_bound))
                }
            }
        }
    }

    fn amalgam_node(
        &mut self,
        mask: u64,
        floor: u32,
        split: SplitMasks,
    ) -> Result<CertNode, EngineError> {
        let g = self.g;
        for part in [split.left, split.right, split.sep] {
            if part & !mask != 0 || part == mask {
                return Err(EngineError::Internal(
                    "decomposition child is not a proper subset".into(),
                ));
            }
        }
        let left = self.node_for(split.left)?;
        let right = self.node_for(split.right)?;
        let sep = self.node_for(split.sep)?;
        let combined = combine_amalgam(&left.bound(), &right.bound(), &sep.bound());
        let bound = Bound::new(
            combined.lower.max(floor),
            combined.upper,
            combined.conditional,
        );
        let sep_names = g.set_of(split.sep).names();
        let data = match split.choice {
            ChoiceMasks::Cycle { v1 } => serde_json::json!({
                "separator": sep_names,
                "v1": g.name(v1).as_str(),
            }),
            ChoiceMasks::Unique { v1, x } => serde_json::json!({
                "separator": sep_names,
                "v1": g.name(v1).as_str(),
                "x": g.name(x).as_str(),
            }),
            ChoiceMasks::Multi { v1, dropped } => serde_json::json!({
                "dropped": g.set_of(dropped).names(),
                "separator": sep_names,
                "v1": g.name(v1).as_str(),
            }),
        };
        Ok(CertNode::make(
            split.rule,
            g.set_of(mask).names(),
            bound,
            data,
            vec![left, right, sep],
        ))
    }
}

/// Computes a certified bound for the whole graph in the given mode.
pub fn compute_bound(g: &DefiningGraph, mode: Mode) -> Result<BoundResult, EngineError> {
    compute_bound_impl(g, mode, true)
}

fn compute_bound_impl(
    g: &DefiningGraph,
    mode: Mode,
    use_memo: bool,
) -> Result<BoundResult, EngineError> {
    let mut ctx = Ctx {
        g,
        mode,
        memo: HashMap::new(),
        use_memo,
    };
    let root = ctx.node_for(g.full_mask())?;
    Ok(BoundResult {
        bound: root.bound(),
        certificate: Certificate {
            fingerprint: fingerprint(g),
            mode,
            root,
        },
        stats: graph_stats(g),
    })
}

/// Distinct rules of a certificate in order of first application
/// (pre-order traversal).
pub fn rules_applied(cert: &Certificate) -> Vec<RuleId> {
    fn walk(node: &CertNode, out: &mut Vec<RuleId>) {
        if !out.contains(&node.rule) {
            out.push(node.rule);
        }
        for child in &node.children {
            walk(child, out);
        }
    }
    let mut out = Vec::new();
    walk(&cert.root, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::clique_number;
    use crate::oracle::{complete_graph, cycle_graph, enumerate_graphs, validate_split};

    fn artin(vertices: &[&str], edges: &[(&str, &str, u32)]) -> DefiningGraph {
        DefiningGraph::from_coefficient_edges(GroupKind::Artin, vertices, edges).unwrap()
    }

    fn coxeter(vertices: &[&str], edges: &[(&str, &str, u32)]) -> DefiningGraph {
        DefiningGraph::from_coefficient_edges(GroupKind::Coxeter, vertices, edges).unwrap()
    }

    fn bound_of(g: &DefiningGraph, mode: Mode) -> Bound {
        compute_bound(g, mode).unwrap().bound
    }

    #[test]
    fn single_edge_artin_is_exactly_two() {
        let b = bound_of(&artin(&["a", "b"], &[("a", "b", 3)]), Mode::Unconditional);
        assert_eq!((b.lower, b.upper, b.exact), (2, ExtBound::Finite(2), true));
    }

    #[test]
    fn artin_cycle_is_exactly_two() {
        let b = bound_of(&cycle_graph(GroupKind::Artin, 5, 3), Mode::Unconditional);
        assert_eq!((b.lower, b.upper, b.exact), (2, ExtBound::Finite(2), true));
    }

    #[test]
    fn coxeter_tree_upper_one() {
        let b = bound_of(
            &coxeter(
                &["a", "b", "c", "d"],
                &[("a", "b", 5), ("b", "c", 3), ("b", "d", 7)],
            ),
            Mode::Unconditional,
        );
        assert_eq!(b.upper, ExtBound::Finite(1));
    }

    #[test]
    fn large_type_triangle_is_exactly_two() {
        let g = artin(
            &["a", "b", "c"],
            &[("a", "b", 3), ("a", "c", 4), ("b", "c", 5)],
        );
        let b = bound_of(&g, Mode::Unconditional);
        assert_eq!((b.lower, b.upper, b.exact), (2, ExtBound::Finite(2), true));
    }

    #[test]
    fn right_angled_k4_is_exactly_four() {
        let b = bound_of(&complete_graph(GroupKind::Artin, 4, 2), Mode::Unconditional);
        assert_eq!((b.lower, b.upper, b.exact), (4, ExtBound::Finite(4), true));
    }

    #[test]
    fn mixed_triangle_unconditional_is_unknown() {
        let g = artin(
            &["a", "b", "c"],
            &[("a", "b", 2), ("a", "c", 3), ("b", "c", 5)],
        );
        let b = bound_of(&g, Mode::Unconditional);
        assert_eq!((b.lower, b.upper), (2, ExtBound::Unknown));
        assert!(!b.exact && !b.conditional);
    }

    #[test]
    fn mixed_triangle_conditional_yields_sim() {
        let g = artin(
            &["a", "b", "c"],
            &[("a", "b", 2), ("a", "c", 3), ("b", "c", 5)],
        );
        let b = bound_of(&g, Mode::Conditional);
        assert_eq!((b.lower, b.upper), (2, ExtBound::Finite(3)));
        assert!(b.conditional);
    }

    #[test]
    fn coxeter_vertex_and_edge_are_finite_groups() {
        let b = bound_of(&coxeter(&["a"], &[]), Mode::Unconditional);
        assert_eq!((b.lower, b.upper, b.exact), (0, ExtBound::Finite(0), true));
        let b = bound_of(&coxeter(&["a", "b"], &[("a", "b", 9)]), Mode::Unconditional);
        assert_eq!((b.lower, b.upper, b.exact), (0, ExtBound::Finite(0), true));
    }

    #[test]
    fn two_isolated_artin_vertices_are_exactly_one() {
        let b = bound_of(&artin(&["a", "b"], &[]), Mode::Unconditional);
        assert_eq!((b.lower, b.upper, b.exact), (1, ExtBound::Finite(1), true));
    }

    #[test]
    fn graph_group_tree_upper_two() {
        let g = cycle_graph(GroupKind::GraphGroup, 4, 3);
        // drop one edge to get a path: rebuild as a path graph group
        let names: Vec<VertexId> = (1..=4)
            .map(|i| VertexId::new(format!("v{i}")).unwrap())
            .collect();
        let edges = (0..3)
            .map(|i| {
                (
                    names[i].clone(),
                    names[i + 1].clone(),
                    crate::oracle::make_label(GroupKind::GraphGroup, &names[i], &names[i + 1], 3),
                )
            })
            .collect();
        let path = DefiningGraph::new(GroupKind::GraphGroup, names, edges).unwrap();
        let b = bound_of(&path, Mode::Unconditional);
        assert_eq!((b.lower, b.upper), (0, ExtBound::Finite(2)));
        // and with a cycle no rule applies
        let b = bound_of(&g, Mode::Unconditional);
        assert_eq!(b.upper, ExtBound::Unknown);
    }

    #[test]
    fn empty_graph_is_exactly_zero() {
        let b = bound_of(&artin(&[], &[]), Mode::Unconditional);
        assert_eq!((b.lower, b.upper, b.exact), (0, ExtBound::Finite(0), true));
    }

    #[test]
    fn combine_free_product_examples() {
        let exact1 = Bound::exact_value(1);
        let exact0 = Bound::exact_value(0);
        let b = combine_free_product(&[exact1, exact1]);
        assert_eq!((b.lower, b.upper, b.exact), (1, ExtBound::Finite(1), true));
        let b = combine_free_product(&[exact0, exact0]);
        assert_eq!((b.lower, b.upper, b.exact), (1, ExtBound::Finite(1), true));
        let b = combine_free_product(&[
            Bound::new(2, ExtBound::Unknown, false),
            Bound::exact_value(1),
        ]);
        assert_eq!((b.lower, b.upper, b.exact), (2, ExtBound::Unknown, false));
    }

    #[test]
    fn combine_amalgam_examples() {
        let b = combine_amalgam(
            &Bound::exact_value(2),
            &Bound::exact_value(2),
            &Bound::exact_value(1),
        );
        assert_eq!((b.lower, b.upper), (2, ExtBound::Finite(2)));
        let b = combine_amalgam(
            &Bound::new(0, ExtBound::Finite(1), false),
            &Bound::new(0, ExtBound::Finite(1), false),
            &Bound::exact_value(0),
        );
        assert_eq!((b.lower, b.upper), (0, ExtBound::Finite(1)));
        let b = combine_amalgam(
            &Bound::exact_value(2),
            &Bound::exact_value(2),
            &Bound::new(0, ExtBound::Unknown, false),
        );
        assert_eq!(b.upper, ExtBound::Unknown);
    }

    #[test]
    fn cycle_split_examples() {
        for n in 4..=8 {
            let g = cycle_graph(GroupKind::Artin, n, 3);
            let split = select_cycle_split(&g).unwrap();
            assert!(
                validate_split(&g, &split),
                "cycle split on C{n} must validate"
            );
            assert_eq!(split.separator.len(), 2);
            assert!(crate::graph::is_independent(&g, &split.separator));
        }
        let triangle = complete_graph(GroupKind::Artin, 3, 3);
        assert!(matches!(
            select_cycle_split(&triangle),
            Err(EngineError::Precondition(_))
        ));
    }

    #[test]
    fn unique_clique_split_example() {
        // triangle abc plus pendant x attached at a
        let g = artin(
            &["a", "b", "c", "x"],
            &[("a", "b", 3), ("a", "c", 3), ("b", "c", 3), ("a", "x", 3)],
        );
        let split = select_clique_split(&g).unwrap();
        assert!(validate_split(&g, &split));
        match &split.chosen {
            SplitChoice::UniqueClique { v1, x } => {
                assert_eq!(v1.as_str(), "b");
                assert_eq!(x.as_str(), "x");
            }
            other => panic!("expected unique-clique split, got {other:?}"),
        }
        assert_eq!(split.left.names(), ["a", "c", "x"]);
        assert_eq!(split.right.names(), ["a", "b", "c"]);
        assert_eq!(split.separator.names(), ["a", "c"]);
        let sep_graph = crate::graph::full_subgraph(&g, &split.separator).unwrap();
        assert!(clique_number(&sep_graph) < 3);
    }

    #[test]
    fn multi_clique_split_example() {
        // two triangles sharing the vertex a
        let g = artin(
            &["a", "b", "c", "d", "e"],
            &[
                ("a", "b", 3),
                ("a", "c", 3),
                ("b", "c", 3),
                ("a", "d", 3),
                ("a", "e", 3),
                ("d", "e", 3),
            ],
        );
        let split = select_clique_split(&g).unwrap();
        assert!(validate_split(&g, &split));
        match &split.chosen {
            SplitChoice::MultiClique { v1, dropped } => {
                assert_eq!(v1.as_str(), "b");
                assert_eq!(dropped.names(), ["d"]);
            }
            other => panic!("expected multi-clique split, got {other:?}"),
        }
        assert_eq!(split.separator.names(), ["a", "c", "e"]);
        let k4 = complete_graph(GroupKind::Artin, 4, 3);
        assert!(matches!(
            select_clique_split(&k4),
            Err(EngineError::Precondition(_))
        ));
    }

    #[test]
    fn lower_bound_examples() {
        assert_eq!(lower_bound(&artin(&["a"], &[])), 1);
        assert_eq!(lower_bound(&cycle_graph(GroupKind::Artin, 5, 7)), 2);
        let with_raag_triangle = artin(
            &["a", "b", "c", "d"],
            &[("a", "b", 2), ("a", "c", 2), ("b", "c", 2), ("c", "d", 9)],
        );
        assert_eq!(lower_bound(&with_raag_triangle), 3);
        assert_eq!(lower_bound(&cycle_graph(GroupKind::Coxeter, 5, 2)), 0);
    }

    #[test]
    fn leaf_bound_examples() {
        let star = artin(
            &["a", "b", "c", "d"],
            &[("a", "b", 2), ("a", "c", 5), ("a", "d", 7)],
        );
        let leaves = leaf_bound(&star, Mode::Unconditional);
        assert!(leaves
            .iter()
            .any(|(r, b)| *r == RuleId::LeafArtinForest && b.exact && b.lower == 2));

        let k3 = complete_graph(GroupKind::Coxeter, 3, 3);
        let leaves = leaf_bound(&k3, Mode::Unconditional);
        assert_eq!(
            leaves,
            vec![(
                RuleId::LeafCompleteCoxeter,
                Bound::new(0, ExtBound::Finite(3), false)
            )]
        );

        let k3a = complete_graph(GroupKind::Artin, 3, 3);
        let leaves = leaf_bound(&k3a, Mode::Conditional);
        let rules: Vec<RuleId> = leaves.iter().map(|(r, _)| *r).collect();
        assert_eq!(
            rules,
            vec![
                RuleId::LeafLargeTypeSim3,
                RuleId::LeafCompleteArtinConjectural
            ]
        );
        let b = bound_of(&k3a, Mode::Conditional);
        assert_eq!(
            (b.lower, b.upper, b.conditional),
            (2, ExtBound::Finite(2), false)
        );
    }

    #[test]
    fn disconnected_equals_free_product_of_components() {
        let g = artin(
            &["a", "b", "c", "d", "e"],
            &[("a", "b", 3), ("c", "d", 2), ("c", "e", 2), ("d", "e", 2)],
        );
        let whole = bound_of(&g, Mode::Unconditional);
        let comps = crate::graph::connected_components(&g);
        let parts: Vec<Bound> = comps
            .iter()
            .map(|c| {
                let sub = crate::graph::full_subgraph(&g, c).unwrap();
                bound_of(&sub, Mode::Unconditional)
            })
            .collect();
        assert_eq!(whole, combine_free_product(&parts));
    }

    #[test]
    fn memoization_is_transparent() {
        for g in [
            cycle_graph(GroupKind::Artin, 6, 3),
            complete_graph(GroupKind::Coxeter, 4, 3),
            crate::oracle::petersen(GroupKind::Coxeter, 2),
        ] {
            for mode in [Mode::Unconditional, Mode::Conditional] {
                let with = compute_bound_impl(&g, mode, true).unwrap();
                let without = compute_bound_impl(&g, mode, false).unwrap();
                assert_eq!(with, without);
            }
        }
    }

    #[test]
    fn conditional_mode_refines_unconditional() {
        for g in enumerate_graphs(4, GroupKind::Artin, &[3]).unwrap() {
            let unc = bound_of(&g, Mode::Unconditional);
            let cond = bound_of(&g, Mode::Conditional);
            assert!(cond.upper.le(unc.upper));
            assert_eq!(cond.lower, unc.lower);
            if let ExtBound::Finite(u) = cond.upper {
                assert!(u as usize <= clique_number(&g).max(1) || g.vertex_count() == 0);
            }
        }
    }

    #[test]
    fn certificates_are_deterministic() {
        let g = crate::oracle::petersen(GroupKind::Artin, 3);
        let a = compute_bound(&g, Mode::Unconditional).unwrap();
        let b = compute_bound(&g, Mode::Unconditional).unwrap();
        assert_eq!(a.certificate.to_json(), b.certificate.to_json());
    }
}
